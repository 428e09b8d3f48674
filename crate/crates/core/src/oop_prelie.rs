//! O-operators (plain and endo), the lift into the semidirect double,
//! lifting of homomorphisms, pre-Lie algebras, and the functor pair between
//! pre-Lie algebras and O-operators.
//!
//! An operator `T: V → g` is stored as an n×m matrix in the fixed bases; its
//! 2-tensor image inside `(g ⋉ V*) ⊗ (g ⋉ V*)` places the entries of `T` in
//! the (g-block, V*-block) positions.

use crate::bialg::{
    bracket_balance_violation, check_coherent_hom, LieBialgebra, MapPair,
};
use crate::cybe::{check_coherent_hom_r, check_psi_cybe, coboundary_cobracket, RMatrix};
use crate::endo::EndoLieAlgebra;
use crate::error::{Error, Result};
use crate::kernel::{basis_vec, LinearMap, Scalar, Tensor2};
use crate::lie::{
    coadjoint_rep, dual_rep, lie_hom_violation, semidirect_bracket, LieAlgebra, Representation,
};
use crate::report::{CheckItem, Report};

/// Optional endo data attached to an O-operator: `φ` on the algebra, `α` on
/// the representation space, subject to `φT = Tα`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperatorEndo {
    pub phi: LinearMap,
    pub alpha: LinearMap,
}

/// A linear map `T: V → g` against a representation `(V, ρ)`. The defining
/// identity is a checked property, not an assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperator {
    rep: Representation,
    t: LinearMap,
    endo: Option<OOperatorEndo>,
}

impl OOperator {
    pub fn new(rep: Representation, t: LinearMap, endo: Option<OOperatorEndo>) -> Result<Self> {
        let (n, m) = (rep.algebra().dim(), rep.dim_v());
        if t.rows() != n || t.cols() != m {
            return Err(Error::dims(
                "operator matrix",
                format!("{n}x{m}"),
                format!("{}x{}", t.rows(), t.cols()),
            ));
        }
        if let Some(e) = &endo {
            if e.phi.rows() != n || e.phi.cols() != n {
                return Err(Error::dims(
                    "operator endo φ",
                    format!("{n}x{n}"),
                    format!("{}x{}", e.phi.rows(), e.phi.cols()),
                ));
            }
            if e.alpha.rows() != m || e.alpha.cols() != m {
                return Err(Error::dims(
                    "operator endo α",
                    format!("{m}x{m}"),
                    format!("{}x{}", e.alpha.rows(), e.alpha.cols()),
                ));
            }
        }
        Ok(OOperator { rep, t, endo })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn t(&self) -> &LinearMap {
        &self.t
    }

    pub fn endo(&self) -> Option<&OOperatorEndo> {
        self.endo.as_ref()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.rep.algebra()
    }
}

/// `[T(u),T(v)] = T(ρ(T(u))v − ρ(T(v))u)` on all basis pairs of `V`, plus
/// `φT = Tα` when endo data is present. Whether `α` also makes `(V, ρ, α)`
/// an endo representation is a separate check.
pub fn check_ooperator(op: &OOperator) -> Report {
    let alg = op.algebra();
    let n = alg.dim();
    let m = op.rep.dim_v();
    let mut report = Report::new("o-operator");

    let mut violation = None;
    'outer: for a in 0..m {
        for b in a + 1..m {
            let tu = op.t.col(a);
            let tv = op.t.col(b);
            let lhs = alg.bracket(&tu, &tv);
            let inner_a = op.rep.rho_vec(&tu).col(b);
            let inner_b = op.rep.rho_vec(&tv).col(a);
            let inner: Vec<Scalar> = inner_a
                .iter()
                .zip(&inner_b)
                .map(|(x, y)| x - y)
                .collect();
            let rhs = op.t.apply(&inner);
            for k in 0..n {
                let r = &lhs[k] - &rhs[k];
                if !r.is_zero() {
                    violation = Some((vec![a, b, k], r));
                    break 'outer;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "o_operator_identity",
        "[T(u),T(v)] = T(ρ(T(u))v - ρ(T(v))u)",
        violation,
    ));

    if let Some(e) = &op.endo {
        let diff = e.phi.mul(&op.t).sub(&op.t.mul(&e.alpha));
        let mut endo_violation = None;
        'endo: for i in 0..n {
            for a in 0..m {
                if !diff.get(i, a).is_zero() {
                    endo_violation = Some((vec![i, a], diff.get(i, a).clone()));
                    break 'endo;
                }
            }
        }
        report.push(CheckItem::from_violation(
            "endo_compatibility",
            "φT = Tα",
            endo_violation,
        ));
    }
    report
}

/// The map `g* → g` carried by a 2-tensor: `r♯(a*) = Σ ⟨a*, a_i⟩ b_i`, i.e.
/// the matrix of `r` read with its indices exchanged, packaged as an
/// O-operator candidate on the coadjoint representation.
pub fn rsharp_of(rm: &RMatrix) -> OOperator {
    rsharp_candidate(rm, None)
}

/// Same as [`rsharp_of`] with endo data `(φ, ψ*)` attached.
pub fn rsharp_with_endo(rm: &RMatrix, phi: &LinearMap, psi: &LinearMap) -> OOperator {
    rsharp_candidate(
        rm,
        Some(OOperatorEndo {
            phi: phi.clone(),
            alpha: psi.transpose(),
        }),
    )
}

fn rsharp_candidate(rm: &RMatrix, endo: Option<OOperatorEndo>) -> OOperator {
    let n = rm.dim();
    let t = LinearMap::from_fn(n, n, |p, q| rm.r().get(q, p).clone());
    OOperator {
        rep: coadjoint_rep(rm.algebra()),
        t,
        endo,
    }
}

/// Rebuilds the 2-tensor from a map `g* → g`: `r[i][j] = f[j][i]`.
pub fn r_of_sharp(f: &LinearMap, alg: &LieAlgebra) -> Result<RMatrix> {
    let n = alg.dim();
    if f.rows() != n || f.cols() != n {
        return Err(Error::dims(
            "sharp map",
            format!("{n}x{n}"),
            format!("{}x{}", f.rows(), f.cols()),
        ));
    }
    RMatrix::new(
        alg.clone(),
        Tensor2::from_fn(n, n, |i, j| f.get(j, i).clone()),
    )
}

/// The bridge between the balanced Yang-Baxter equation for a skew tensor
/// and its sharp being an O-operator on the coadjoint representation with
/// endo data `(φ, ψ*)`: the two verdicts must agree, recorded as a note.
pub fn check_rsharp_bridge(
    endo: &EndoLieAlgebra,
    psi: &LinearMap,
    rm: &RMatrix,
) -> Result<Report> {
    let sharp = rsharp_with_endo(rm, endo.phi(), psi);
    let mut report = Report::new("rsharp-bridge");

    let skew_sum = sharp.t.add(&sharp.t.transpose());
    let mut skew_violation = None;
    'skew: for i in 0..rm.dim() {
        for j in 0..rm.dim() {
            if !skew_sum.get(i, j).is_zero() {
                skew_violation = Some((vec![i, j], skew_sum.get(i, j).clone()));
                break 'skew;
            }
        }
    }
    report.push(CheckItem::from_violation(
        "sharp_antisymmetric",
        "⟨r♯(a*),b*⟩ + ⟨a*,r♯(b*)⟩ = 0",
        skew_violation,
    ));

    let cybe_report = check_psi_cybe(endo, psi, rm)?;
    let oop_report = check_ooperator(&sharp);
    report.push(CheckItem::flag(
        "balanced_cybe",
        "r solves the balanced Yang-Baxter equation in (g, φ)",
        cybe_report.pass(),
    ));
    report.push(CheckItem::flag(
        "sharp_o_operator",
        "r♯ is an O-operator associated to (g*, ad*) and ψ*",
        oop_report.pass(),
    ));
    report.note(CheckItem::flag(
        "bridge_agreement",
        "r skew ⇒ (balanced CYBE ⇔ r♯ O-operator)",
        !rm.is_skew() || cybe_report.pass() == oop_report.pass(),
    ));
    Ok(report)
}

/// A homomorphism of O-operators `(φ, α): T_g → T_h`: `φ` a Lie algebra
/// homomorphism, `α` intertwining the actions, and the square `T_h α = φ T_g`
/// commuting.
pub fn check_hom_ooperators(
    og: &OOperator,
    oh: &OOperator,
    phi: &LinearMap,
    alpha: &LinearMap,
) -> Result<Report> {
    let (ng, mg) = (og.algebra().dim(), og.rep.dim_v());
    let (nh, mh) = (oh.algebra().dim(), oh.rep.dim_v());
    if phi.rows() != nh || phi.cols() != ng {
        return Err(Error::dims(
            "operator hom φ",
            format!("{nh}x{ng}"),
            format!("{}x{}", phi.rows(), phi.cols()),
        ));
    }
    if alpha.rows() != mh || alpha.cols() != mg {
        return Err(Error::dims(
            "operator hom α",
            format!("{mh}x{mg}"),
            format!("{}x{}", alpha.rows(), alpha.cols()),
        ));
    }
    let mut report = Report::new("hom-o-operators");
    report.push(CheckItem::from_violation(
        "phi_algebra_hom",
        "φ[x,y]_g = [φ(x),φ(y)]_h",
        lie_hom_violation(og.algebra(), oh.algebra(), phi),
    ));

    let mut intertwine = None;
    'int: for i in 0..ng {
        let diff = alpha
            .mul(og.rep.rho(i))
            .sub(&oh.rep.rho_vec(&phi.col(i)).mul(alpha));
        for p in 0..mh {
            for q in 0..mg {
                if !diff.get(p, q).is_zero() {
                    intertwine = Some((vec![i, p, q], diff.get(p, q).clone()));
                    break 'int;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "action_intertwine",
        "α(ρ_g(x)v) = ρ_h(φ(x))(α(v))",
        intertwine,
    ));

    let square = oh.t.mul(alpha).sub(&phi.mul(&og.t));
    let mut square_violation = None;
    'sq: for i in 0..nh {
        for a in 0..mg {
            if !square.get(i, a).is_zero() {
                square_violation = Some((vec![i, a], square.get(i, a).clone()));
                break 'sq;
            }
        }
    }
    report.push(CheckItem::from_violation(
        "square_commutes",
        "T_h α = φ T_g",
        square_violation,
    ));
    Ok(report)
}

/// The skew tensor `r_T = T − σ(T)` inside `g ⋉_{ρ*} V*`: entries of `T`
/// sit in the (g-block, V*-block) positions and their negatives mirror
/// them. `r_T` solves the Yang-Baxter equation exactly when `T` is an
/// O-operator.
pub fn lift_to_rmatrix(op: &OOperator) -> RMatrix {
    let n = op.algebra().dim();
    let m = op.rep.dim_v();
    let big = semidirect_bracket(&dual_rep(&op.rep));
    let mut r = Tensor2::zeros(n + m, n + m);
    for i in 0..n {
        for a in 0..m {
            let v = op.t.get(i, a);
            if !v.is_zero() {
                r.set(i, n + a, v.clone());
                r.set(n + a, i, -v);
            }
        }
    }
    RMatrix::new(big, r).expect("lift shapes match by construction")
}

/// Lifts a homomorphism of O-operators together with backward data
/// `(ψ, β)` to the block pair `(φ + β*, ψ + α*)` on the semidirect doubles.
/// The four listed conditions are equivalent to the lifted pair being a
/// homomorphism of the lifted tensors; both verdicts are reported and their
/// agreement recorded as a note.
pub fn lift_hom_to_double(
    og: &OOperator,
    oh: &OOperator,
    phi: &LinearMap,
    alpha: &LinearMap,
    psi: &LinearMap,
    beta: &LinearMap,
) -> Result<(MapPair, Report)> {
    let hom = check_hom_ooperators(og, oh, phi, alpha)?;
    if let Some(item) = hom.first_failure() {
        return Err(Error::InvalidInput(format!(
            "(φ, α) is not a homomorphism of O-operators: {} fails at witness {:?}",
            item.identity,
            item.witness.as_ref().unwrap()
        )));
    }
    let (ng, mg) = (og.algebra().dim(), og.rep.dim_v());
    let (nh, mh) = (oh.algebra().dim(), oh.rep.dim_v());
    if psi.rows() != ng || psi.cols() != nh {
        return Err(Error::dims(
            "backward map ψ",
            format!("{ng}x{nh}"),
            format!("{}x{}", psi.rows(), psi.cols()),
        ));
    }
    if beta.rows() != mg || beta.cols() != mh {
        return Err(Error::dims(
            "backward map β",
            format!("{mg}x{mh}"),
            format!("{}x{}", beta.rows(), beta.cols()),
        ));
    }

    let mut report = Report::new("lift-hom-to-double");

    let square = og.t.mul(beta).sub(&psi.mul(&oh.t));
    let mut square_violation = None;
    'sq: for i in 0..ng {
        for a in 0..mh {
            if !square.get(i, a).is_zero() {
                square_violation = Some((vec![i, a], square.get(i, a).clone()));
                break 'sq;
            }
        }
    }
    report.push(CheckItem::from_violation(
        "backward_square",
        "T_g β = ψ T_h",
        square_violation,
    ));

    // β(ρ_h(φ(x))b) = ρ_g(x)(β(b)) for basis x of g
    let mut back_intertwine = None;
    'bi: for i in 0..ng {
        let diff = beta
            .mul(&oh.rep.rho_vec(&phi.col(i)))
            .sub(&og.rep.rho(i).mul(beta));
        for p in 0..mg {
            for q in 0..mh {
                if !diff.get(p, q).is_zero() {
                    back_intertwine = Some((vec![i, p, q], diff.get(p, q).clone()));
                    break 'bi;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "backward_intertwine",
        "β(ρ_h(φ(x))b) = ρ_g(x)(β(b))",
        back_intertwine,
    ));

    // β(ρ_h(y)α(a)) = ρ_g(ψ(y))a for basis y of h
    let mut cross = None;
    'cr: for j in 0..nh {
        let diff = beta
            .mul(oh.rep.rho(j))
            .mul(alpha)
            .sub(&og.rep.rho_vec(&psi.col(j)));
        for p in 0..mg {
            for q in 0..mg {
                if !diff.get(p, q).is_zero() {
                    cross = Some((vec![j, p, q], diff.get(p, q).clone()));
                    break 'cr;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "cross_intertwine",
        "β(ρ_h(y)α(a)) = ρ_g(ψ(y))a",
        cross,
    ));

    report.push(CheckItem::from_violation(
        "bracket_balance",
        "ψ[φ(x),y]_h = [x,ψ(y)]_g",
        bracket_balance_violation(og.algebra(), oh.algebra(), phi, psi),
    ));

    let pair = MapPair::new(
        phi.block_diag(&beta.transpose()),
        psi.block_diag(&alpha.transpose()),
    )?;
    let lifted = check_coherent_hom_r(&lift_to_rmatrix(og), &lift_to_rmatrix(oh), &pair)?;
    let conditions_pass = report.pass();
    report.push(CheckItem::flag(
        "lifted_pair_coherent",
        "(φ+β*, ψ+α*) is a homomorphism from r_{T_g} to r_{T_h}",
        lifted.pass(),
    ));
    report.note(CheckItem::flag(
        "iff_agreement",
        "four conditions ⇔ lifted verdict",
        conditions_pass == lifted.pass(),
    ));
    Ok((pair, report))
}

/// A bilinear product on a fixed basis: `e_i · e_j = Σ_k p[i][j][k] e_k`.
/// Left-symmetry of the associator is a checked property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLieAlgebra {
    dim: usize,
    p: Vec<Scalar>,
}

impl PreLieAlgebra {
    pub fn new(dim: usize, p: Vec<Scalar>) -> Result<Self> {
        if p.len() != dim * dim * dim {
            return Err(Error::dims("product constants", dim * dim * dim, p.len()));
        }
        Ok(PreLieAlgebra { dim, p })
    }

    pub fn zero(dim: usize) -> Self {
        PreLieAlgebra {
            dim,
            p: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Build from the full `(i, j)` product table; no symmetry is implied.
    pub fn from_products(dim: usize, products: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut alg = PreLieAlgebra::zero(dim);
        for (i, j, k, v) in products {
            if *i >= dim || *j >= dim || *k >= dim {
                return Err(Error::InvalidInput(format!(
                    "product index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            let at = alg.idx(*i, *j, *k);
            alg.p[at] = v.clone();
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.p[self.idx(i, j, k)]
    }

    /// Product of coefficient vectors by bilinear extension.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    let p = self.p(i, j, k);
                    if !p.is_zero() {
                        out[k] = &out[k] + &xy * p;
                    }
                }
            }
        }
        out
    }

    /// The left multiplication operator `L(e_i): e_j ↦ e_i · e_j`.
    pub fn left_mult(&self, i: usize) -> LinearMap {
        LinearMap::from_fn(self.dim, self.dim, |k, j| self.p(i, j, k).clone())
    }
}

/// Left-symmetry of the associator:
/// `x·(y·z) − (x·y)·z = y·(x·z) − (y·x)·z` on all basis triples.
pub fn check_prelie(alg: &PreLieAlgebra) -> Report {
    let n = alg.dim();
    let mut report = Report::new("pre-lie");
    let mut violation = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let ei = basis_vec(n, i);
                let ej = basis_vec(n, j);
                let ek = basis_vec(n, k);
                let lhs1 = alg.product(&ei, &alg.product(&ej, &ek));
                let lhs2 = alg.product(&alg.product(&ei, &ej), &ek);
                let rhs1 = alg.product(&ej, &alg.product(&ei, &ek));
                let rhs2 = alg.product(&alg.product(&ej, &ei), &ek);
                for m in 0..n {
                    let r = &lhs1[m] - &lhs2[m] - &rhs1[m] + &rhs2[m];
                    if !r.is_zero() {
                        violation = Some((vec![i, j, k, m], r));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "left_symmetry",
        "x·(y·z) - (x·y)·z = y·(x·z) - (y·x)·z",
        violation,
    ));
    report
}

/// First violation of `f` being a homomorphism of pre-Lie algebras.
pub fn prelie_hom_violation(
    src: &PreLieAlgebra,
    dst: &PreLieAlgebra,
    f: &LinearMap,
) -> Option<(Vec<usize>, Scalar)> {
    let n = src.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&src.product(&basis_vec(n, i), &basis_vec(n, j)));
            let rhs = dst.product(&f.col(i), &f.col(j));
            for k in 0..dst.dim() {
                let r = &lhs[k] - &rhs[k];
                if !r.is_zero() {
                    return Some((vec![i, j, k], r));
                }
            }
        }
    }
    None
}

/// The commutator Lie algebra `[a,b] = a·b − b·a` together with the left
/// multiplication representation `(A, L)`.
pub fn sub_adjacent(alg: &PreLieAlgebra) -> Result<(LieAlgebra, Representation)> {
    let report = check_prelie(alg);
    if let Some(item) = report.first_failure() {
        return Err(Error::InvalidInput(format!(
            "not a pre-Lie algebra: left-symmetry fails at witness {:?} with residual {}",
            item.witness.as_ref().unwrap(),
            item.residual.as_ref().unwrap()
        )));
    }
    let n = alg.dim();
    let mut c = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c.push(alg.p(i, j, k) - alg.p(j, i, k));
            }
        }
    }
    let lie = LieAlgebra::new(n, c)?;
    let rho = (0..n).map(|i| alg.left_mult(i)).collect();
    let rep = Representation::new(lie.clone(), n, rho)?;
    Ok((lie, rep))
}

/// On objects: `A ↦ (id_A: A → g(A))`, the identity map as an O-operator on
/// the sub-adjacent algebra with the left multiplication representation.
pub fn functor_f_obj(alg: &PreLieAlgebra) -> Result<OOperator> {
    let (_, rep) = sub_adjacent(alg)?;
    let n = alg.dim();
    OOperator::new(rep, LinearMap::identity(n), None)
}

/// On morphisms: a pre-Lie homomorphism `φ: A → B` maps to the pair
/// `(φ, φ)`. Fails with a witness when `φ` is not a homomorphism.
pub fn functor_f_hom(
    src: &PreLieAlgebra,
    dst: &PreLieAlgebra,
    phi: &LinearMap,
) -> Result<(LinearMap, LinearMap)> {
    if phi.rows() != dst.dim() || phi.cols() != src.dim() {
        return Err(Error::dims(
            "pre-Lie homomorphism",
            format!("{}x{}", dst.dim(), src.dim()),
            format!("{}x{}", phi.rows(), phi.cols()),
        ));
    }
    if let Some((w, r)) = prelie_hom_violation(src, dst, phi) {
        return Err(Error::InvalidInput(format!(
            "not a pre-Lie homomorphism: φ(x·y) = φ(x)·φ(y) fails at witness {w:?} with residual {r}"
        )));
    }
    Ok((phi.clone(), phi.clone()))
}

/// On objects: the induced product `u ·_T v = ρ(T(u))v` on `V`.
pub fn functor_g_obj(op: &OOperator) -> Result<PreLieAlgebra> {
    let report = check_ooperator(op);
    if let Some(item) = report.first_failure() {
        return Err(Error::InvalidInput(format!(
            "not an O-operator: {} fails at witness {:?}",
            item.identity,
            item.witness.as_ref().unwrap()
        )));
    }
    let m = op.rep.dim_v();
    let mut p = Vec::with_capacity(m * m * m);
    for i in 0..m {
        let rho_ti = op.rep.rho_vec(&op.t.col(i));
        for j in 0..m {
            for k in 0..m {
                p.push(rho_ti.get(k, j).clone());
            }
        }
    }
    PreLieAlgebra::new(m, p)
}

/// On morphisms: a homomorphism of O-operators `(φ, α)` maps to `α`, a
/// homomorphism of the induced pre-Lie products.
pub fn functor_g_hom(
    og: &OOperator,
    oh: &OOperator,
    phi: &LinearMap,
    alpha: &LinearMap,
) -> Result<LinearMap> {
    let report = check_hom_ooperators(og, oh, phi, alpha)?;
    if let Some(item) = report.first_failure() {
        return Err(Error::InvalidInput(format!(
            "not a homomorphism of O-operators: {} fails at witness {:?}",
            item.identity,
            item.witness.as_ref().unwrap()
        )));
    }
    Ok(alpha.clone())
}

/// Adjunction, forward direction: a pair `(φ, α)` out of `F(A)` collapses to
/// `α`; the pair is such a morphism only when `φ = Tα`.
pub fn adjunction_forward(
    a: &PreLieAlgebra,
    op: &OOperator,
    phi: &LinearMap,
    alpha: &LinearMap,
) -> Result<LinearMap> {
    let n = a.dim();
    if alpha.cols() != n || phi.cols() != n {
        return Err(Error::dims(
            "adjunction data",
            format!("maps out of dim {n}"),
            format!("φ cols {}, α cols {}", phi.cols(), alpha.cols()),
        ));
    }
    let composite = op.t().mul(alpha);
    if &composite != phi {
        return Err(Error::InvalidInput(
            "pair is not a morphism out of F(A): φ ≠ Tα".into(),
        ));
    }
    Ok(alpha.clone())
}

/// Adjunction, backward direction: `α ↦ (Tα, α)`.
pub fn adjunction_backward(
    a: &PreLieAlgebra,
    op: &OOperator,
    alpha: &LinearMap,
) -> Result<(LinearMap, LinearMap)> {
    if alpha.cols() != a.dim() || alpha.rows() != op.rep().dim_v() {
        return Err(Error::dims(
            "adjunction map",
            format!("{}x{}", op.rep().dim_v(), a.dim()),
            format!("{}x{}", alpha.rows(), alpha.cols()),
        ));
    }
    Ok((op.t().mul(alpha), alpha.clone()))
}

/// For a pre-Lie endomorphism `φ`, checks the projector balance
/// `(φ²−id)(x)·φ(y) = φ(x)·(φ²−id)(y) = 0` together with the four derived
/// operator identities, and — when the balance holds — verifies that both
/// sign choices `(φ±φ*, ±φ+φ*)` are endomorphism pairs of the triangular
/// bialgebra on the double of `F(A)`.
pub fn check_prelie_endo_conditions(alg: &PreLieAlgebra, phi: &LinearMap) -> Result<Report> {
    let n = alg.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::dims(
            "pre-Lie endomorphism",
            format!("{n}x{n}"),
            format!("{}x{}", phi.rows(), phi.cols()),
        ));
    }
    if let Some((w, r)) = prelie_hom_violation(alg, alg, phi) {
        return Err(Error::InvalidInput(format!(
            "not a pre-Lie endomorphism: φ(x·y) = φ(x)·φ(y) fails at witness {w:?} with residual {r}"
        )));
    }

    let mut report = Report::new("prelie-endo-conditions");
    report.push(CheckItem::passing(
        "phi_prelie_endo",
        "φ(x·y) = φ(x)·φ(y)",
    ));

    let proj = phi.mul(phi).sub(&LinearMap::identity(n));
    let mut left = None;
    let mut right = None;
    'pairs: for i in 0..n {
        for j in 0..n {
            let l = alg.product(&proj.col(i), &phi.col(j));
            let r = alg.product(&phi.col(i), &proj.col(j));
            for k in 0..n {
                if left.is_none() && !l[k].is_zero() {
                    left = Some((vec![i, j, k], l[k].clone()));
                }
                if right.is_none() && !r[k].is_zero() {
                    right = Some((vec![i, j, k], r[k].clone()));
                }
                if left.is_some() && right.is_some() {
                    break 'pairs;
                }
            }
        }
    }
    let balance_holds = left.is_none() && right.is_none();
    report.push(CheckItem::from_violation(
        "projector_balance_left",
        "(φ²-id)(x)·φ(y) = 0",
        left,
    ));
    report.push(CheckItem::from_violation(
        "projector_balance_right",
        "φ(x)·(φ²-id)(y) = 0",
        right,
    ));

    // the four operator identities of the α = ±φ, ψ = ±φ specialization
    let lmaps: Vec<LinearMap> = (0..n).map(|i| alg.left_mult(i)).collect();
    let l_vec = |x: &[Scalar]| -> LinearMap {
        let mut out = LinearMap::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = out.add(&lmaps[i].scale(xi));
            }
        }
        out
    };
    let mut push_op_check = |identity: &str, formula: &str, diff_at: &dyn Fn(usize) -> LinearMap| {
        let mut violation = None;
        'op: for i in 0..n {
            let diff = diff_at(i);
            for p in 0..n {
                for q in 0..n {
                    if !diff.get(p, q).is_zero() {
                        violation = Some((vec![i, p, q], diff.get(p, q).clone()));
                        break 'op;
                    }
                }
            }
        }
        report.push(CheckItem::from_violation(identity, formula, violation));
    };
    push_op_check("action_intertwine", "φ·L(x) = L(φ(x))·φ", &|i| {
        phi.mul(&lmaps[i]).sub(&l_vec(&phi.col(i)).mul(phi))
    });
    push_op_check("action_mirror", "L(x)·φ = φ·L(φ(x))", &|i| {
        lmaps[i].mul(phi).sub(&phi.mul(&l_vec(&phi.col(i))))
    });
    push_op_check("action_sandwich", "φ·L(x)·φ = L(φ(x))", &|i| {
        phi.mul(&lmaps[i]).mul(phi).sub(&l_vec(&phi.col(i)))
    });
    {
        // [φ²(x), φ(y)] = [x, φ(y)] in the sub-adjacent algebra
        let comm = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
            let xy = alg.product(x, y);
            let yx = alg.product(y, x);
            xy.iter().zip(&yx).map(|(a, b)| a - b).collect()
        };
        let phi2 = phi.mul(phi);
        let mut violation = None;
        'br: for i in 0..n {
            for j in 0..n {
                let lhs = comm(&phi2.col(i), &phi.col(j));
                let rhs = comm(&basis_vec(n, i), &phi.col(j));
                for k in 0..n {
                    let r = &lhs[k] - &rhs[k];
                    if !r.is_zero() {
                        violation = Some((vec![i, j, k], r));
                        break 'br;
                    }
                }
            }
        }
        report.push(CheckItem::from_violation(
            "double_scaling_bracket",
            "[φ²(x), φ(y)] = [x, φ(y)]",
            violation,
        ));
    }

    if balance_holds {
        let op = functor_f_obj(alg)?;
        let lifted = lift_to_rmatrix(&op);
        let delta = coboundary_cobracket(&lifted);
        let double = LieBialgebra::new(lifted.algebra().clone(), delta)?;
        for (sign, label) in [(1, "plus_pair_coherent"), (-1, "minus_pair_coherent")] {
            let signed = phi.scale(&Scalar::from_int(sign));
            let pair = MapPair::new(
                phi.block_diag(&signed.transpose()),
                signed.block_diag(&phi.transpose()),
            )?;
            let verdict = check_coherent_hom(&double, &double, &pair)?;
            report.push(CheckItem::flag(
                label,
                "(φ±φ*, ±φ+φ*) is an endomorphism pair of the double",
                verdict.pass(),
            ));
        }
    }
    Ok(report)
}
