use super::claims::certify_representation_dimension;
use super::{Certificate, Instance};
use crate::algebra::{end_algebra, global_dimension, Bounded};
use crate::error::Result;
use crate::replicated::{auslander_generator, minimal_cogenerator, Quiver};

/// Dimension vectors, ordered `1, 2, 1', 2'`, of the ten indecomposable
/// summands of the generator-cogenerator for the Kronecker quiver and `m = 1`.
pub const KRONECKER_GOLDEN_DIMS: [[usize; 4]; 10] = [
    [1, 0, 0, 0],
    [2, 1, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 2],
    [1, 2, 1, 0],
    [0, 1, 2, 1],
    [0, 2, 1, 0],
    [0, 3, 2, 0],
    [0, 0, 3, 2],
    [0, 0, 4, 3],
];

fn sorted_dims(dims: impl IntoIterator<Item = Vec<usize>>) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = dims.into_iter().collect();
    v.sort();
    v
}

/// The Kronecker quiver with `m = 1`: `gl.dim End(M) = 3`,
/// `gl.dim End(M_0) = 5` and the ten summand dimension vectors of `M`.
pub fn certify_kronecker_golden(cap: usize, seed: u64) -> Result<Certificate> {
    let q = Quiver::kronecker();
    let gen = auslander_generator(&q, 1, cap, seed)?;
    let min = minimal_cogenerator(&q, 1, cap, seed)?;
    let rep = certify_representation_dimension(&gen, cap)?;
    let gl_m = rep.values["gl_dim_end_m"].clone();
    let end0 = end_algebra(&min.modules(), &min.labels())?;
    let gl_m0 = global_dimension(&end0, cap);
    let dims = sorted_dims(gen.modules().iter().map(|x| x.dims().to_vec()));
    let expected = sorted_dims(KRONECKER_GOLDEN_DIMS.iter().map(|d| d.to_vec()));
    let mut cert = Certificate::new("kronecker_golden", Instance::new(&q, 1));
    cert.value("gl_dim_end_m", gl_m.clone())
        .value("gl_dim_end_m0", gl_m0)
        .value("gl_dim_algebra", gen.gl_dim)
        .value("summands_m", gen.summands.len())
        .value("summands_m0", min.summands.len())
        .value("summand_labels", gen.labels())
        .value("summand_dims", gen.modules().iter().map(|x| x.dims().to_vec()).collect::<Vec<_>>())
        .check("gl.dim End(M) = 3", gl_m == Bounded::Exact(3).into())
        .check("gl.dim End(M0) = 5", gl_m0 == Bounded::Exact(5))
        .check("M has 10 summands", gen.summands.len() == 10)
        .check("M0 has 6 summands", min.summands.len() == 6)
        .check("summand dimension vectors", dims == expected)
        .check("M is a generator-cogenerator", rep.checks.iter().take(2).all(|c| c.holds));
    Ok(cert)
}
