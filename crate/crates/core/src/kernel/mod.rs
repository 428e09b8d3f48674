//! Exact rational arithmetic, dense tensors of order ≤ 3, and the basis and
//! dualization conventions every other module relies on.
//!
//! All spaces carry a fixed ordered basis. Dual spaces implicitly use the
//! dual basis with pairing `⟨e^i, e_j⟩ = δ_ij`, so the transpose map `f*` is
//! literally the matrix transpose and `ρ*(x) = −ρ(x)ᵀ`. Direct sums are
//! ordered blocks: first summand's basis first, second summand's second.
//! All values are immutable once built; every operation is a pure function.

mod matrix;
mod scalar;
mod tensor;

pub use matrix::LinearMap;
pub use scalar::Scalar;
pub use tensor::{Tensor2, Tensor3};

/// The transpose map `f*` with `f*(w*)(v) = w*(f(v))`; on dual bases it is
/// the matrix transpose.
pub fn transpose_map(f: &LinearMap) -> LinearMap {
    f.transpose()
}

/// The i-th basis vector of an n-dimensional space as a coefficient vector.
pub fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
