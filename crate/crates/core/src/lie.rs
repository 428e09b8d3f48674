//! Plain Lie algebras via structure constants, their representations, dual
//! representations, semidirect products, and invariant bilinear forms.
//!
//! Structure constants are the single source of truth: `c[i][j][k]` encodes
//! `[e_i, e_j] = Σ_k c[i][j][k] e_k`, and brackets of general vectors are
//! computed by bilinear extension. Constructors validate shapes only; the
//! defining identities are verified by the `check_*` functions, which return
//! witnesses instead of failing.

use crate::error::{Error, Result};
use crate::kernel::{LinearMap, Scalar};
use crate::report::{CheckItem, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// Flat cube, index `(i·n + j)·n + k`.
    c: Vec<Scalar>,
}

impl LieAlgebra {
    pub fn new(dim: usize, c: Vec<Scalar>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::dims("structure constants", dim * dim * dim, c.len()));
        }
        Ok(LieAlgebra { dim, c })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Build from the `i < j` bracket table; the `j > i` entries are filled
    /// in by antisymmetry.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut alg = LieAlgebra::abelian(dim);
        for (i, j, k, v) in brackets {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidInput(format!(
                    "bracket index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            if i >= j {
                return Err(Error::InvalidInput(format!(
                    "bracket table must store only i < j entries, got ({i},{j})"
                )));
            }
            alg.set_c(*i, *j, *k, v.clone());
            alg.set_c(*j, *i, *k, -v);
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.idx(i, j, k)]
    }

    fn set_c(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let at = self.idx(i, j, k);
        self.c[at] = v;
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bracket of coefficient vectors by bilinear extension.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "bracket operand dim");
        assert_eq!(y.len(), self.dim, "bracket operand dim");
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = &out[k] + &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`, sending `e_j ↦ [e_i, e_j]`.
    pub fn ad(&self, i: usize) -> LinearMap {
        LinearMap::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k).clone())
    }

    /// Matrix of `ad(x)` for a general coefficient vector.
    pub fn ad_vec(&self, x: &[Scalar]) -> LinearMap {
        assert_eq!(x.len(), self.dim, "ad operand dim");
        let mut out = LinearMap::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let adi = self.ad(i);
            out = out.add(&adi.scale(xi));
        }
        out
    }

    /// Extract the subalgebra spanned by `len` consecutive basis vectors
    /// starting at `start`; fails when the block does not close.
    pub fn block_subalgebra(&self, start: usize, len: usize) -> Result<LieAlgebra> {
        if start + len > self.dim {
            return Err(Error::dims("block subalgebra", self.dim, start + len));
        }
        let mut sub = LieAlgebra::abelian(len);
        for i in 0..len {
            for j in 0..len {
                for k in 0..self.dim {
                    let v = self.c(start + i, start + j, k);
                    if v.is_zero() {
                        continue;
                    }
                    if k < start || k >= start + len {
                        return Err(Error::InvalidInput(format!(
                            "basis block [{start}, {}) is not closed: \
                             [e_{}, e_{}] has component on e_{k}",
                            start + len,
                            start + i,
                            start + j
                        )));
                    }
                    sub.set_c(i, j, k - start, v.clone());
                }
            }
        }
        Ok(sub)
    }
}

/// A representation `(V, ρ)` of a Lie algebra; `rho[i]` is the matrix of
/// `ρ(e_i)` on the fixed basis of `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    dim_v: usize,
    rho: Vec<LinearMap>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, dim_v: usize, rho: Vec<LinearMap>) -> Result<Self> {
        if rho.len() != algebra.dim() {
            return Err(Error::dims("representation maps", algebra.dim(), rho.len()));
        }
        for m in &rho {
            if m.rows() != dim_v || m.cols() != dim_v {
                return Err(Error::dims(
                    "representation matrix",
                    format!("{dim_v}x{dim_v}"),
                    format!("{}x{}", m.rows(), m.cols()),
                ));
            }
        }
        Ok(Representation { algebra, dim_v, rho })
    }

    pub fn zero(algebra: LieAlgebra, dim_v: usize) -> Self {
        let n = algebra.dim();
        Representation {
            algebra,
            dim_v,
            rho: vec![LinearMap::zeros(dim_v, dim_v); n],
        }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn rho(&self, i: usize) -> &LinearMap {
        &self.rho[i]
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.rho
    }

    /// `ρ(x)` for a general coefficient vector by linearity.
    pub fn rho_vec(&self, x: &[Scalar]) -> LinearMap {
        assert_eq!(x.len(), self.algebra.dim(), "rho operand dim");
        let mut out = LinearMap::zeros(self.dim_v, self.dim_v);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = out.add(&self.rho[i].scale(xi));
            }
        }
        out
    }
}

/// A bilinear form via its Gram matrix, `B(e_i, e_j) = gram[i][j]`.
/// Symmetry, nondegeneracy and invariance are checked, not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: LinearMap,
}

impl BilinearForm {
    pub fn new(gram: LinearMap) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::dims(
                "bilinear form gram matrix",
                format!("{0}x{0}", gram.rows()),
                format!("{}x{}", gram.rows(), gram.cols()),
            ));
        }
        Ok(BilinearForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &LinearMap {
        &self.gram
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.apply(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }
}

/// Antisymmetry `c[i][j][k] = −c[j][i][k]` and the Jacobi identity on all
/// basis triples.
pub fn check_lie_algebra(alg: &LieAlgebra) -> Report {
    let n = alg.dim();
    let mut report = Report::new("lie-algebra");

    let mut anti = None;
    'anti: for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let r = alg.c(i, j, k) + alg.c(j, i, k);
                if !r.is_zero() {
                    anti = Some((vec![i, j, k], r));
                    break 'anti;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "antisymmetry",
        "[x,y] = -[y,x]",
        anti,
    ));

    report.push(CheckItem::from_violation(
        "jacobi",
        "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0",
        jacobi_violation(alg),
    ));
    report
}

fn jacobi_violation(alg: &LieAlgebra) -> Option<(Vec<usize>, Scalar)> {
    let n = alg.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for m in 0..n {
                    let mut r = Scalar::zero();
                    for l in 0..n {
                        r = r + alg.c(i, j, l) * alg.c(l, k, m)
                            + alg.c(j, k, l) * alg.c(l, i, m)
                            + alg.c(k, i, l) * alg.c(l, j, m);
                    }
                    if !r.is_zero() {
                        return Some((vec![i, j, k, m], r));
                    }
                }
            }
        }
    }
    None
}

/// First violation of `ρ(e_i)ρ(e_j) − ρ(e_j)ρ(e_i) = ρ([e_i, e_j])`, if any.
pub fn representation_violation(
    alg: &LieAlgebra,
    dim_v: usize,
    maps: &[LinearMap],
) -> Option<(Vec<usize>, Scalar)> {
    let n = alg.dim();
    for i in 0..n {
        for j in i + 1..n {
            let commutator = maps[i].mul(&maps[j]).sub(&maps[j].mul(&maps[i]));
            let mut of_bracket = LinearMap::zeros(dim_v, dim_v);
            for k in 0..n {
                let c = alg.c(i, j, k);
                if !c.is_zero() {
                    of_bracket = of_bracket.add(&maps[k].scale(c));
                }
            }
            let diff = commutator.sub(&of_bracket);
            for p in 0..dim_v {
                for q in 0..dim_v {
                    if !diff.get(p, q).is_zero() {
                        return Some((vec![i, j, p, q], diff.get(p, q).clone()));
                    }
                }
            }
        }
    }
    None
}

/// `ρ([x,y]) = ρ(x)ρ(y) − ρ(y)ρ(x)` on all basis pairs.
pub fn check_representation(rep: &Representation) -> Report {
    let mut report = Report::new("representation");
    report.push(CheckItem::from_violation(
        "representation",
        "ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x)",
        representation_violation(rep.algebra(), rep.dim_v(), rep.maps()),
    ));
    report
}

/// The adjoint representation: `ad(e_i)` sends `e_j ↦ [e_i, e_j]`.
pub fn adjoint_rep(alg: &LieAlgebra) -> Representation {
    let n = alg.dim();
    let rho = (0..n).map(|i| alg.ad(i)).collect();
    Representation {
        algebra: alg.clone(),
        dim_v: n,
        rho,
    }
}

/// The dual representation `ρ*(x) = −ρ(x)ᵀ` on the dual basis.
pub fn dual_rep(rep: &Representation) -> Representation {
    Representation {
        algebra: rep.algebra.clone(),
        dim_v: rep.dim_v,
        rho: rep.rho.iter().map(|m| m.transpose().neg()).collect(),
    }
}

/// The coadjoint representation `ad* = (ad)ᵈᵘᵃˡ` of an algebra on its dual
/// space.
pub fn coadjoint_rep(alg: &LieAlgebra) -> Representation {
    dual_rep(&adjoint_rep(alg))
}

/// Semidirect bracket `[x+u, y+v] = [x,y] + ρ(x)v − ρ(y)u` on ordered
/// blocks, without validating that `ρ` is a representation.
pub fn semidirect_bracket(rep: &Representation) -> LieAlgebra {
    let n = rep.algebra.dim();
    let m = rep.dim_v;
    let total = n + m;
    let mut alg = LieAlgebra::abelian(total);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                alg.set_c(i, j, k, rep.algebra.c(i, j, k).clone());
            }
        }
    }
    for i in 0..n {
        for a in 0..m {
            for b in 0..m {
                let v = rep.rho[i].get(b, a).clone();
                if v.is_zero() {
                    continue;
                }
                alg.set_c(i, n + a, n + b, v.clone());
                alg.set_c(n + a, i, n + b, -v);
            }
        }
    }
    alg
}

/// The semidirect product `g ⋉_ρ V`. Requires `(V, ρ)` to be an actual
/// representation; the abelian second block and the mixed bracket
/// `[e_i, v] = ρ(e_i)v` come out of the construction.
pub fn semidirect_product(rep: &Representation) -> Result<LieAlgebra> {
    if let Some((w, r)) = representation_violation(rep.algebra(), rep.dim_v(), rep.maps()) {
        return Err(Error::InvalidInput(format!(
            "not a representation: ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x) fails at \
             ({}, {}) entry ({}, {}) with residual {r}",
            w[0], w[1], w[2], w[3]
        )));
    }
    Ok(semidirect_bracket(rep))
}

/// Three independent flags for a candidate quadratic structure: symmetry,
/// nondegeneracy (exact determinant), and invariance `B([x,y],z) = B(x,[y,z])`.
pub fn check_invariant_form(alg: &LieAlgebra, form: &BilinearForm) -> Result<Report> {
    let n = alg.dim();
    if form.dim() != n {
        return Err(Error::dims("bilinear form", n, form.dim()));
    }
    let gram = form.gram();
    let mut report = Report::new("invariant-form");

    let mut sym = None;
    'sym: for i in 0..n {
        for j in i + 1..n {
            let r = gram.get(i, j) - gram.get(j, i);
            if !r.is_zero() {
                sym = Some((vec![i, j], r));
                break 'sym;
            }
        }
    }
    report.push(CheckItem::from_violation(
        "symmetric",
        "B(x,y) = B(y,x)",
        sym,
    ));

    report.push(CheckItem::flag(
        "nondegenerate",
        "det(B) ≠ 0",
        !gram.det().is_zero(),
    ));

    let mut inv = None;
    'inv: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // B([e_i,e_j], e_k) − B(e_i, [e_j,e_k])
                let mut r = Scalar::zero();
                for l in 0..n {
                    r = r + alg.c(i, j, l) * gram.get(l, k) - alg.c(j, k, l) * gram.get(i, l);
                }
                if !r.is_zero() {
                    inv = Some((vec![i, j, k], r));
                    break 'inv;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "invariant",
        "B([x,y],z) = B(x,[y,z])",
        inv,
    ));
    Ok(report)
}

/// The adjoint transform `φ̂` of `φ` under a nondegenerate form:
/// `B(φ(x), y) = B(x, φ̂(y))`, computed as `gram⁻¹ · φᵀ · gram`.
pub fn adjoint_of_endomorphism(form: &BilinearForm, phi: &LinearMap) -> Result<LinearMap> {
    let n = form.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::dims(
            "endomorphism for adjoint transform",
            format!("{n}x{n}"),
            format!("{}x{}", phi.rows(), phi.cols()),
        ));
    }
    let inv = form.gram().inverse().ok_or(Error::SingularForm)?;
    Ok(inv.mul(&phi.transpose()).mul(form.gram()))
}

/// First violation of `f` being a Lie algebra homomorphism `src → dst`.
pub fn lie_hom_violation(
    src: &LieAlgebra,
    dst: &LieAlgebra,
    f: &LinearMap,
) -> Option<(Vec<usize>, Scalar)> {
    let n = src.dim();
    debug_assert_eq!(f.cols(), n);
    debug_assert_eq!(f.rows(), dst.dim());
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| (0..dst.dim()).map(|i| f.get(i, j).clone()).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = f.apply(&src.bracket_basis(i, j));
            let rhs = dst.bracket(&cols[i], &cols[j]);
            for (k, (a, b)) in lhs.iter().zip(&rhs).enumerate() {
                let r = a - b;
                if !r.is_zero() {
                    return Some((vec![i, j, k], r));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn abelian_passes() {
        assert!(check_lie_algebra(&LieAlgebra::abelian(3)).pass());
    }

    #[test]
    fn solvable2_passes() {
        // dim 2, [e1,e2] = e2: every Jacobi triple vanishes
        assert!(check_lie_algebra(&catalog::solvable2()).pass());
    }

    #[test]
    fn broken_antisymmetry_detected() {
        // [e1,e2] = e1+e2 with the (1,0) entries not negated
        let mut c = vec![Scalar::zero(); 8];
        let at = |i: usize, j: usize, k: usize| (i * 2 + j) * 2 + k;
        c[at(0, 1, 0)] = Scalar::one();
        c[at(0, 1, 1)] = Scalar::one();
        let alg = LieAlgebra::new(2, c).unwrap();
        let report = check_lie_algebra(&alg);
        assert!(!report.pass());
        let item = report.item("antisymmetry").unwrap();
        assert!(!item.pass);
        assert_eq!(item.witness.as_ref().unwrap()[..2], [0, 1]);
    }

    #[test]
    fn sl2_passes_and_ad_h_has_scaled_columns() {
        let sl2 = catalog::sl2();
        assert!(check_lie_algebra(&sl2).pass());
        // basis order (e, h, f): ad(h) e = 2e, ad(h) h = 0, ad(h) f = -2f
        let ad_h = sl2.ad(1);
        assert_eq!(ad_h.get(0, 0), &Scalar::from_int(2));
        assert_eq!(ad_h.get(2, 2), &Scalar::from_int(-2));
        assert!(ad_h.get(1, 1).is_zero());
        assert!(ad_h.get(0, 1).is_zero());
    }

    #[test]
    fn zero_and_adjoint_representations() {
        let alg = catalog::solvable2();
        assert!(check_representation(&Representation::zero(alg.clone(), 3)).pass());
        assert!(check_representation(&adjoint_rep(&alg)).pass());
        // abelian algebras have the zero adjoint representation
        let abelian = LieAlgebra::abelian(3);
        assert_eq!(adjoint_rep(&abelian), Representation::zero(abelian, 3));
    }

    #[test]
    fn identity_and_zero_maps_represent_solvable2() {
        // ρ(e1) = id, ρ(e2) = 0: ρ([e1,e2]) = ρ(e2) = 0 = [ρ(e1), ρ(e2)]
        let alg = catalog::solvable2();
        let rep = Representation::new(
            alg,
            2,
            vec![LinearMap::identity(2), LinearMap::zeros(2, 2)],
        )
        .unwrap();
        assert!(check_representation(&rep).pass());
    }

    #[test]
    fn dual_rep_is_involutive_and_represents() {
        let rep = adjoint_rep(&catalog::solvable2());
        let dual = dual_rep(&rep);
        assert!(check_representation(&dual).pass());
        assert_eq!(dual_rep(&dual), rep);
        let zero = Representation::zero(catalog::sl2(), 2);
        assert_eq!(dual_rep(&zero), zero);
    }

    #[test]
    fn semidirect_of_abelian_zero_rep_is_abelian() {
        let rep = Representation::zero(LieAlgebra::abelian(2), 3);
        let sd = semidirect_product(&rep).unwrap();
        assert_eq!(sd, LieAlgebra::abelian(5));
    }

    #[test]
    fn semidirect_blocks_and_mixed_bracket() {
        let alg = catalog::solvable2();
        let rep = coadjoint_rep(&alg);
        let sd = semidirect_product(&rep).unwrap();
        assert!(check_lie_algebra(&sd).pass());
        assert_eq!(sd.block_subalgebra(0, 2).unwrap(), alg);
        // second block abelian
        assert_eq!(sd.block_subalgebra(2, 2).unwrap(), LieAlgebra::abelian(2));
        // mixed bracket [e_i, v_a] = ρ(e_i) v_a, here ρ = -adᵀ
        for i in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(sd.c(i, 2 + a, 2 + b), rep.rho(i).get(b, a));
                }
            }
        }
    }

    #[test]
    fn semidirect_rejects_non_representation() {
        // ρ(e1) = 0, ρ(e2) = id fails: ρ([e1,e2]) = id ≠ 0
        let alg = catalog::solvable2();
        let rep = Representation::new(
            alg,
            2,
            vec![LinearMap::zeros(2, 2), LinearMap::identity(2)],
        )
        .unwrap();
        assert!(semidirect_product(&rep).is_err());
    }

    #[test]
    fn abelian_form_is_invariant() {
        let alg = LieAlgebra::abelian(2);
        let gram = LinearMap::from_rows(vec![
            vec![Scalar::from_int(2), Scalar::one()],
            vec![Scalar::one(), Scalar::from_int(1)],
        ])
        .unwrap();
        let report = check_invariant_form(&alg, &BilinearForm::new(gram).unwrap()).unwrap();
        assert!(report.pass());
    }

    #[test]
    fn identity_gram_fails_invariance_on_solvable2() {
        // B([e1,e2],e2) = 1 but B(e1,[e2,e2]) = 0
        let alg = catalog::solvable2();
        let form = BilinearForm::new(LinearMap::identity(2)).unwrap();
        let report = check_invariant_form(&alg, &form).unwrap();
        assert!(report.item_pass("symmetric"));
        assert!(report.item_pass("nondegenerate"));
        let inv = report.item("invariant").unwrap();
        assert!(!inv.pass);
        assert_eq!(inv.witness.as_ref().unwrap(), &vec![0, 1, 1]);
    }

    #[test]
    fn killing_form_of_sl2_is_invariant() {
        let sl2 = catalog::sl2();
        let form = catalog::killing_form(&sl2);
        let report = check_invariant_form(&sl2, &form).unwrap();
        assert!(report.pass(), "{}", report.render_text());
        // known values in the (e, h, f) basis
        assert_eq!(form.gram().get(1, 1), &Scalar::from_int(8));
        assert_eq!(form.gram().get(0, 2), &Scalar::from_int(4));
        assert!(form.gram().get(0, 0).is_zero());
    }

    #[test]
    fn adjoint_transform_against_identity_gram_is_transpose() {
        let form = BilinearForm::new(LinearMap::identity(3)).unwrap();
        let phi = LinearMap::from_rows(vec![
            vec![Scalar::one(), Scalar::from_int(2), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one(), Scalar::from_int(3)],
            vec![Scalar::from_int(4), Scalar::zero(), Scalar::one()],
        ])
        .unwrap();
        assert_eq!(adjoint_of_endomorphism(&form, &phi).unwrap(), phi.transpose());
        assert_eq!(
            adjoint_of_endomorphism(&form, &LinearMap::identity(3)).unwrap(),
            LinearMap::identity(3)
        );
    }

    #[test]
    fn adjoint_transform_satisfies_defining_identity_on_sl2() {
        // φ swaps e and f and fixes h; recheck B(φ(x), y) = B(x, φ̂(y))
        let sl2 = catalog::sl2();
        let form = catalog::killing_form(&sl2);
        let phi = LinearMap::from_rows(vec![
            vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
            vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
        ])
        .unwrap();
        let hat = adjoint_of_endomorphism(&form, &phi).unwrap();
        let basis = |i: usize| {
            let mut v = vec![Scalar::zero(); 3];
            v[i] = Scalar::one();
            v
        };
        for i in 0..3 {
            for j in 0..3 {
                let lhs = form.eval(&phi.apply(&basis(i)), &basis(j));
                let rhs = form.eval(&basis(i), &hat.apply(&basis(j)));
                assert_eq!(lhs, rhs, "identity fails at ({i},{j})");
            }
        }
    }

    #[test]
    fn degenerate_form_is_rejected_by_adjoint_transform() {
        let gram = LinearMap::zeros(2, 2);
        let form = BilinearForm::new(gram).unwrap();
        assert!(matches!(
            adjoint_of_endomorphism(&form, &LinearMap::identity(2)),
            Err(Error::SingularForm)
        ));
    }
}
