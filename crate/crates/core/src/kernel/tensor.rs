//! Dense order-2 and order-3 tensors over a fixed basis.
//!
//! Index conventions used throughout:
//! * `Tensor2` entry `[i][j]` is the coefficient of `e_i ⊗ f_j`;
//! * `Tensor3` entry `[i][j][k]` is the coefficient of `e_i ⊗ e_j ⊗ e_k`.
//!
//! For linear maps `f`, `g` the induced action on a 2-tensor is
//! `(f ⊗ g)(r) = f · R · gᵀ` on the coefficient matrix `R`.

use crate::error::{Error, Result};
use crate::kernel::{LinearMap, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    mat: LinearMap,
}

impl Tensor2 {
    pub fn zeros(dim_left: usize, dim_right: usize) -> Self {
        Tensor2 {
            mat: LinearMap::zeros(dim_left, dim_right),
        }
    }

    pub fn from_matrix(mat: LinearMap) -> Self {
        Tensor2 { mat }
    }

    pub fn from_fn(dim_left: usize, dim_right: usize, f: impl FnMut(usize, usize) -> Scalar) -> Self {
        Tensor2 {
            mat: LinearMap::from_fn(dim_left, dim_right, f),
        }
    }

    pub fn dim_left(&self) -> usize {
        self.mat.rows()
    }

    pub fn dim_right(&self) -> usize {
        self.mat.cols()
    }

    pub fn is_square(&self) -> bool {
        self.mat.is_square()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.mat.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.mat.set(i, j, v);
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Coefficient matrix view; entry `[i][j]` is the `e_i ⊗ f_j` coefficient.
    pub fn matrix(&self) -> &LinearMap {
        &self.mat
    }

    /// The flip map `τ(x ⊗ y) = y ⊗ x`; defined on square tensors.
    pub fn flip(&self) -> Result<Tensor2> {
        if !self.is_square() {
            return Err(Error::dims(
                "flip on non-square tensor",
                format!("{0}x{0}", self.dim_left()),
                format!("{}x{}", self.dim_left(), self.dim_right()),
            ));
        }
        Ok(Tensor2 {
            mat: self.mat.transpose(),
        })
    }

    /// `(f ⊗ g)(r)`; shapes must compose.
    pub fn transform(&self, f: &LinearMap, g: &LinearMap) -> Tensor2 {
        assert_eq!(f.cols(), self.dim_left(), "tensor transform left shape");
        assert_eq!(g.cols(), self.dim_right(), "tensor transform right shape");
        Tensor2 {
            mat: f.mul(&self.mat).mul(&g.transpose()),
        }
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 {
            mat: self.mat.add(&other.mat),
        }
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 {
            mat: self.mat.sub(&other.mat),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            dims: [d0, d1, d2],
            entries: vec![Scalar::zero(); d0 * d1 * d2],
        }
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let at = self.idx(i, j, k);
        self.entries[at] = v;
    }

    pub fn add_assign_at(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let at = self.idx(i, j, k);
        self.entries[at] = &self.entries[at] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// First index (i, j, k) holding a nonzero coefficient, scanning in
    /// row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, Scalar)> {
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        return Some((i, j, k, v.clone()));
                    }
                }
            }
        }
        None
    }

    /// The cyclic rotation `σ(x ⊗ y ⊗ z) = z ⊗ x ⊗ y`; the coefficient of
    /// `e_i ⊗ e_j ⊗ e_k` in `σ(t)` is `t[j][k][i]`. Defined on cubic tensors.
    pub fn cyclic_rotate(&self) -> Result<Tensor3> {
        let [d0, d1, d2] = self.dims;
        if d0 != d1 || d1 != d2 {
            return Err(Error::dims(
                "cyclic rotation on non-cubic tensor",
                format!("{d0}x{d0}x{d0}"),
                format!("{d0}x{d1}x{d2}"),
            ));
        }
        let mut out = Tensor3::zeros(d0, d0, d0);
        for i in 0..d0 {
            for j in 0..d0 {
                for k in 0..d0 {
                    out.set(i, j, k, self.get(j, k, i).clone());
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, other.dims, "tensor3 add shape");
        Tensor3 {
            dims: self.dims,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_basis_case() {
        // e1 ⊗ e2 maps to e2 ⊗ e1
        let mut t = Tensor2::zeros(2, 2);
        t.set(0, 1, Scalar::one());
        let f = t.flip().unwrap();
        assert!(f.get(0, 1).is_zero());
        assert_eq!(f.get(1, 0), &Scalar::one());

        // zero tensor stays zero, flip is an involution
        assert!(Tensor2::zeros(3, 3).flip().unwrap().is_zero());
        assert_eq!(t.flip().unwrap().flip().unwrap(), t);
    }

    #[test]
    fn flip_negates_alternating_tensor() {
        // r = e1⊗e2 − e2⊗e1 flips to −r
        let mut r = Tensor2::zeros(2, 2);
        r.set(0, 1, Scalar::one());
        r.set(1, 0, Scalar::from_int(-1));
        let flipped = r.flip().unwrap();
        assert_eq!(flipped.get(0, 1), &Scalar::from_int(-1));
        assert_eq!(flipped.get(1, 0), &Scalar::one());
    }

    #[test]
    fn flip_requires_square() {
        assert!(Tensor2::zeros(2, 3).flip().is_err());
    }

    #[test]
    fn cyclic_rotate_basis_case() {
        // e1 ⊗ e2 ⊗ e3 maps to e3 ⊗ e1 ⊗ e2
        let mut t = Tensor3::zeros(3, 3, 3);
        t.set(0, 1, 2, Scalar::one());
        let r = t.cyclic_rotate().unwrap();
        assert_eq!(r.get(2, 0, 1), &Scalar::one());
        assert!(r.get(0, 1, 2).is_zero());
    }

    #[test]
    fn cyclic_rotate_is_order_three() {
        let mut t = Tensor3::zeros(2, 2, 2);
        let mut v = 1i64;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    t.set(i, j, k, Scalar::from_int(v));
                    v += 1;
                }
            }
        }
        let thrice = t
            .cyclic_rotate()
            .unwrap()
            .cyclic_rotate()
            .unwrap()
            .cyclic_rotate()
            .unwrap();
        assert_eq!(thrice, t);
    }

    #[test]
    fn cyclic_rotate_fixes_symmetric_tensor() {
        // fully symmetric: coefficient depends only on the index multiset
        let mut t = Tensor3::zeros(2, 2, 2);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    t.set(i, j, k, Scalar::from_int((i + j + k) as i64));
                }
            }
        }
        assert_eq!(t.cyclic_rotate().unwrap(), t);
    }

    #[test]
    fn cyclic_rotate_requires_cube() {
        assert!(Tensor3::zeros(2, 2, 3).cyclic_rotate().is_err());
    }
}
