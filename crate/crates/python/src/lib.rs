use pyo3::prelude::*;

#[pymodule]
fn ukpb(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
