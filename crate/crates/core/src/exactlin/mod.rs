//! Exact rational linear algebra over Q.
//!
//! Tensor products use the flat index `(i, j) ↦ i·dim(W) + j`, so ⊗ is
//! strictly associative on objects and associators/unitors are identities.

mod linmap;
mod reduce;
mod scalar;

pub use linmap::LinMap;
pub use reduce::{coequalizer, equalizer, solve_factor, solve_right_factor};
pub use scalar::{ParseScalarError, Scalar};

/// Identity on a space of dimension `n`.
pub fn id(n: usize) -> LinMap {
    LinMap::identity(n)
}

/// `f_1 ⊗ f_2 ⊗ …`.
pub fn tensor(factors: &[&LinMap]) -> LinMap {
    LinMap::kron_all(factors)
}

/// Basis of the solution space of a homogeneous linear condition on maps
/// `src → tgt`, given as `residual(f)` which must be linear in `f`.
///
/// The coefficient matrix is assembled by evaluating `residual` on matrix
/// units; returned maps are the kernel basis reshaped, in canonical order.
pub fn solve_maps(src: usize, tgt: usize, residual: impl Fn(&LinMap) -> LinMap) -> Vec<LinMap> {
    let n = src * tgt;
    let mut cols: Vec<LinMap> = Vec::with_capacity(n);
    for k in 0..n {
        let e = LinMap::unit(tgt, src, k / src.max(1), k % src.max(1));
        cols.push(residual(&e).vectorize());
    }
    let eqs = cols.first().map_or(0, |c| c.rows());
    let coeff = LinMap::from_fn(eqs, n, |i, j| cols[j].get(i, 0).clone());
    basis_from_kernel(&coeff.kernel(), tgt, src)
}

/// Reshape the columns of a kernel matrix into `rows × cols` maps.
pub fn basis_from_kernel(kernel: &LinMap, rows: usize, cols: usize) -> Vec<LinMap> {
    (0..kernel.cols())
        .map(|j| LinMap::unvectorize(&kernel.column(j), rows, cols).expect("kernel shape"))
        .collect()
}
