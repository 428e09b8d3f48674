//! Coboundary structures: the cobracket induced by a 2-tensor, the classical
//! Yang-Baxter equation and its balanced variant in an endo Lie algebra,
//! homomorphisms of classical r-matrices, and the double construction.
//!
//! Component conventions for `r = Σ r[i][j] e_i ⊗ e_j`:
//! `[r12,r13] = Σ [a_i,a_j]⊗b_i⊗b_j`, `[r13,r23] = Σ a_i⊗a_j⊗[b_i,b_j]`,
//! and `[r12,r23] = Σ a_i⊗[b_i,a_j]⊗b_j`.

use crate::bialg::{
    bracket_balance_violation, check_endo_lie_bialgebra, check_lie_bialgebra, Cobracket,
    LieBialgebra, MapPair,
};
use crate::endo::{check_dually_represents, EndoLieAlgebra};
use crate::error::{Error, Result};
use crate::kernel::{LinearMap, Scalar, Tensor2, Tensor3};
use crate::lie::{adjoint_rep, lie_hom_violation, LieAlgebra};
use crate::manin::{bowtie, standard_matched_pair};
use crate::report::{CheckItem, Report};

/// A 2-tensor on a Lie algebra. Skewness, invariance and the Yang-Baxter
/// property are checked, never assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    algebra: LieAlgebra,
    r: Tensor2,
}

impl RMatrix {
    pub fn new(algebra: LieAlgebra, r: Tensor2) -> Result<Self> {
        let n = algebra.dim();
        if r.dim_left() != n || r.dim_right() != n {
            return Err(Error::dims(
                "r-matrix tensor",
                format!("{n}x{n}"),
                format!("{}x{}", r.dim_left(), r.dim_right()),
            ));
        }
        Ok(RMatrix { algebra, r })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn r(&self) -> &Tensor2 {
        &self.r
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_skew(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i..n).all(|j| (self.r.get(i, j) + self.r.get(j, i)).is_zero()))
    }
}

/// `δ_r(x) = (id ⊗ ad(x) + ad(x) ⊗ id)(r)`, assembled by index contraction:
/// `d[k][i][j] = Σ_b r[i][b] c[k][b][j] + Σ_a r[a][j] c[k][a][i]`.
pub fn coboundary_cobracket(rm: &RMatrix) -> Cobracket {
    let n = rm.dim();
    let mut delta = Cobracket::zero(n);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut v = Scalar::zero();
                for b in 0..n {
                    let c = rm.algebra.c(k, b, j);
                    if !c.is_zero() {
                        v = v + rm.r.get(i, b) * c;
                    }
                }
                for a in 0..n {
                    let c = rm.algebra.c(k, a, i);
                    if !c.is_zero() {
                        v = v + rm.r.get(a, j) * c;
                    }
                }
                delta.set(k, i, j, v);
            }
        }
    }
    delta
}

/// First basis vector `x` where `(ad(x) ⊗ id + id ⊗ ad(x))(s) ≠ 0`.
fn ad_invariance_violation_t2(alg: &LieAlgebra, s: &Tensor2) -> Option<(Vec<usize>, Scalar)> {
    let n = alg.dim();
    for m in 0..n {
        let ad_m = alg.ad(m);
        let moved = ad_m
            .mul(s.matrix())
            .add(&s.matrix().mul(&ad_m.transpose()));
        for p in 0..n {
            for q in 0..n {
                if !moved.get(p, q).is_zero() {
                    return Some((vec![m, p, q], moved.get(p, q).clone()));
                }
            }
        }
    }
    None
}

/// `(ad(x) ⊗ id + id ⊗ ad(x))(r + τ(r)) = 0` for every basis `x`; skew
/// tensors pass vacuously.
pub fn check_sym_invariance(rm: &RMatrix) -> Report {
    let sym = rm.r.add(&rm.r.flip().expect("r-matrix tensor is square"));
    let mut report = Report::new("symmetric-part-invariance");
    report.push(CheckItem::from_violation(
        "symmetric_part_invariance",
        "(ad(x)⊗id + id⊗ad(x))(r + τ(r)) = 0",
        ad_invariance_violation_t2(&rm.algebra, &sym),
    ));
    report
}

/// The Yang-Baxter tensor `[r12,r13] + [r13,r23] + [r12,r23]`; `r` is a
/// classical r-matrix exactly when it vanishes.
pub fn cybe_lhs(rm: &RMatrix) -> Tensor3 {
    let n = rm.dim();
    let r = &rm.r;
    let alg = &rm.algebra;
    let mut out = Tensor3::zeros(n, n, n);
    let nonzero: Vec<(usize, usize, &Scalar)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter_map(|(a, b)| {
            let v = r.get(a, b);
            (!v.is_zero()).then_some((a, b, v))
        })
        .collect();
    for &(a, b, rab) in &nonzero {
        for &(c, d, rcd) in &nonzero {
            let prod = rab * rcd;
            for k in 0..n {
                // [r12,r13]: [e_a, e_c] ⊗ e_b ⊗ e_d
                let c1 = alg.c(a, c, k);
                if !c1.is_zero() {
                    out.add_assign_at(k, b, d, &prod * c1);
                }
                // [r13,r23]: e_a ⊗ e_c ⊗ [e_b, e_d]
                let c2 = alg.c(b, d, k);
                if !c2.is_zero() {
                    out.add_assign_at(a, c, k, &prod * c2);
                }
                // [r12,r23]: e_a ⊗ [e_b, e_c] ⊗ e_d
                let c3 = alg.c(b, c, k);
                if !c3.is_zero() {
                    out.add_assign_at(a, k, d, &prod * c3);
                }
            }
        }
    }
    out
}

/// `cybe_lhs(r) = 0`.
pub fn check_cybe(rm: &RMatrix) -> Report {
    let mut report = Report::new("cybe");
    let lhs = cybe_lhs(rm);
    report.push(CheckItem::from_violation(
        "cybe",
        "[r12,r13] + [r13,r23] + [r12,r23] = 0",
        lhs.first_nonzero().map(|(i, j, k, v)| (vec![i, j, k], v)),
    ));
    report
}

fn require_same_algebra(endo: &EndoLieAlgebra, rm: &RMatrix) -> Result<()> {
    if endo.algebra() != rm.algebra() {
        return Err(Error::InvalidInput(
            "r-matrix is attached to a different algebra".into(),
        ));
    }
    Ok(())
}

/// First failure of `left·R − R·rightᵀ = 0`, i.e. of
/// `(left ⊗ id)(r) = (id ⊗ right)(r)`.
fn tensor_balance_violation(
    left: &LinearMap,
    right: &LinearMap,
    r: &Tensor2,
) -> Option<(Vec<usize>, Scalar)> {
    let diff = left.mul(r.matrix()).sub(&r.matrix().mul(&right.transpose()));
    for p in 0..diff.rows() {
        for q in 0..diff.cols() {
            if !diff.get(p, q).is_zero() {
                return Some((vec![p, q], diff.get(p, q).clone()));
            }
        }
    }
    None
}

/// The balanced Yang-Baxter conditions in an endo Lie algebra: the CYBE
/// itself plus `(φ⊗id − id⊗ψ)(r) = 0` and `(ψ⊗id − id⊗φ)(r) = 0`. For
/// skew `r` the two balance verdicts always agree; the agreement is recorded
/// as a note.
pub fn check_psi_cybe(endo: &EndoLieAlgebra, psi: &LinearMap, rm: &RMatrix) -> Result<Report> {
    require_same_algebra(endo, rm)?;
    let n = endo.dim();
    if psi.rows() != n || psi.cols() != n {
        return Err(Error::dims(
            "balancing operator",
            format!("{n}x{n}"),
            format!("{}x{}", psi.rows(), psi.cols()),
        ));
    }
    let mut report = Report::new("psi-cybe");
    let lhs = cybe_lhs(rm);
    report.push(CheckItem::from_violation(
        "cybe",
        "[r12,r13] + [r13,r23] + [r12,r23] = 0",
        lhs.first_nonzero().map(|(i, j, k, v)| (vec![i, j, k], v)),
    ));
    let fwd = tensor_balance_violation(endo.phi(), psi, &rm.r);
    let bwd = tensor_balance_violation(psi, endo.phi(), &rm.r);
    let fwd_pass = fwd.is_none();
    let bwd_pass = bwd.is_none();
    report.push(CheckItem::from_violation(
        "balance_fwd",
        "(φ⊗id - id⊗ψ)(r) = 0",
        fwd,
    ));
    report.push(CheckItem::from_violation(
        "balance_bwd",
        "(ψ⊗id - id⊗φ)(r) = 0",
        bwd,
    ));
    report.note(CheckItem::flag(
        "skew_balance_agreement",
        "r skew ⇒ (balance_fwd ⇔ balance_bwd)",
        !rm.is_skew() || fwd_pass == bwd_pass,
    ));
    Ok(report)
}

/// The four conditions under which `δ_r` equips an endo Lie algebra with an
/// endo Lie bialgebra structure. Hypothesis: `ψ` dually represents `(g, φ)`;
/// a violated hypothesis is an input error, not a verdict.
pub fn check_coboundary_endo(
    endo: &EndoLieAlgebra,
    psi: &LinearMap,
    rm: &RMatrix,
) -> Result<Report> {
    require_same_algebra(endo, rm)?;
    let hypothesis = check_dually_represents(endo, &adjoint_rep(endo.algebra()), psi)?;
    if let Some(item) = hypothesis.first_failure() {
        return Err(Error::InvalidInput(format!(
            "ψ does not dually represent (g, φ): witness {:?} residual {}",
            item.witness.as_ref().unwrap(),
            item.residual.as_ref().unwrap()
        )));
    }

    let alg = &rm.algebra;
    let n = alg.dim();
    let phi = endo.phi();
    let rmat = rm.r.matrix();
    let mut report = Report::new("coboundary-endo");

    let sym = rm.r.add(&rm.r.flip().expect("square"));
    report.push(CheckItem::from_violation(
        "symmetric_part_invariance",
        "(ad(x)⊗id + id⊗ad(x))(r + τ(r)) = 0",
        ad_invariance_violation_t2(alg, &sym),
    ));

    // (ad(x)⊗id⊗id + id⊗ad(x)⊗id + id⊗id⊗ad(x)) applied to the CYBE tensor
    let y = cybe_lhs(rm);
    let mut cybe_inv = None;
    'cybe: for m in 0..n {
        let ad_m = alg.ad(m);
        for p in 0..n {
            for q in 0..n {
                for s in 0..n {
                    let mut v = Scalar::zero();
                    for t in 0..n {
                        v = v
                            + ad_m.get(p, t) * y.get(t, q, s)
                            + ad_m.get(q, t) * y.get(p, t, s)
                            + ad_m.get(s, t) * y.get(p, q, t);
                    }
                    if !v.is_zero() {
                        cybe_inv = Some((vec![m, p, q, s], v));
                        break 'cybe;
                    }
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "cybe_tensor_invariance",
        "(ad(x)⊗id⊗id + id⊗ad(x)⊗id + id⊗id⊗ad(x))([r12,r13]+[r13,r23]+[r12,r23]) = 0",
        cybe_inv,
    ));

    // (ψ·ad(x) ⊗ id)(id⊗ψ − φ⊗id)(r) + (id ⊗ ψ·ad(x))(ψ⊗id − id⊗φ)(r) = 0
    let a = rmat.mul(&psi.transpose()).sub(&phi.mul(rmat));
    let b = psi.mul(rmat).sub(&rmat.mul(&phi.transpose()));
    let mut cob = None;
    'cob: for m in 0..n {
        let op = psi.mul(&alg.ad(m));
        let total = op.mul(&a).add(&b.mul(&op.transpose()));
        for p in 0..n {
            for q in 0..n {
                if !total.get(p, q).is_zero() {
                    cob = Some((vec![m, p, q], total.get(p, q).clone()));
                    break 'cob;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "cobracket_endo_balance",
        "(ψad(x)⊗id)(id⊗ψ - φ⊗id)(r) + (id⊗ψad(x))(ψ⊗id - id⊗φ)(r) = 0",
        cob,
    ));

    // (ad(x)⊗id + id⊗ad(φx))(id⊗φ − ψ⊗id)(r) = 0
    let c_mat = rmat.mul(&phi.transpose()).sub(&psi.mul(rmat));
    let mut mixed = None;
    'mixed: for m in 0..n {
        let ad_m = alg.ad(m);
        let ad_phi_m = alg.ad_vec(&phi.col(m));
        let total = ad_m.mul(&c_mat).add(&c_mat.mul(&ad_phi_m.transpose()));
        for p in 0..n {
            for q in 0..n {
                if !total.get(p, q).is_zero() {
                    mixed = Some((vec![m, p, q], total.get(p, q).clone()));
                    break 'mixed;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "cobracket_mixed_balance",
        "(ad(x)⊗id + id⊗ad(φx))(id⊗φ - ψ⊗id)(r) = 0",
        mixed,
    ));
    Ok(report)
}

/// A homomorphism of classical r-matrices `r_g → r_h`: forward algebra map,
/// the two transport identities, and the bracket balance. When the pair is
/// `(φ, φ⁻¹)` a note records that passing coincides with
/// `(φ⊗φ)(r_g) = r_h`.
pub fn check_coherent_hom_r(
    rm_src: &RMatrix,
    rm_dst: &RMatrix,
    pair: &MapPair,
) -> Result<Report> {
    let (n, m) = (rm_src.dim(), rm_dst.dim());
    if pair.fwd().cols() != n || pair.fwd().rows() != m {
        return Err(Error::dims(
            "forward map",
            format!("{m}x{n}"),
            format!("{}x{}", pair.fwd().rows(), pair.fwd().cols()),
        ));
    }
    let mut report = Report::new("coherent-hom-r");
    report.push(CheckItem::from_violation(
        "fwd_algebra_hom",
        "φ[x,y]_g = [φ(x),φ(y)]_h",
        lie_hom_violation(rm_src.algebra(), rm_dst.algebra(), pair.fwd()),
    ));
    // (ψ ⊗ id_h)(r_h) = (id_g ⊗ φ)(r_g): ψ·R_h = R_g·φᵀ
    let left = pair
        .bwd()
        .mul(rm_dst.r().matrix())
        .sub(&rm_src.r().matrix().mul(&pair.fwd().transpose()));
    report.push(CheckItem::from_violation(
        "transport_left",
        "(ψ⊗id_h)(r_h) = (id_g⊗φ)(r_g)",
        first_nonzero_entry(&left),
    ));
    // (id_h ⊗ ψ)(r_h) = (φ ⊗ id_g)(r_g): R_h·ψᵀ = φ·R_g
    let right = rm_dst
        .r()
        .matrix()
        .mul(&pair.bwd().transpose())
        .sub(&pair.fwd().mul(rm_src.r().matrix()));
    report.push(CheckItem::from_violation(
        "transport_right",
        "(id_h⊗ψ)(r_h) = (φ⊗id_g)(r_g)",
        first_nonzero_entry(&right),
    ));
    report.push(CheckItem::from_violation(
        "bracket_balance",
        "ψ[φ(x),y]_h = [x,ψ(y)]_g",
        bracket_balance_violation(rm_src.algebra(), rm_dst.algebra(), pair.fwd(), pair.bwd()),
    ));

    // equivalence diagnostic for inverse pairs
    if let Some(inv) = pair.fwd().inverse() {
        if &inv == pair.bwd() {
            let transported = rm_src.r().transform(pair.fwd(), pair.fwd());
            let matches = &transported == rm_dst.r();
            report.note(CheckItem::flag(
                "inverse_pair_equivalence",
                "pass ⇔ (φ⊗φ)(r_g) = r_h",
                matches == report.pass(),
            ));
        }
    }
    Ok(report)
}

fn first_nonzero_entry(m: &LinearMap) -> Option<(Vec<usize>, Scalar)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                return Some((vec![i, j], m.get(i, j).clone()));
            }
        }
    }
    None
}

/// The double of a Lie bialgebra: the canonical pairing tensor on the bowtie
/// of the standard matched pair, its induced cobracket, and the block
/// endomorphism pair when endo data is supplied.
#[derive(Debug, Clone)]
pub struct DoubleRMatrix {
    pub big: LieAlgebra,
    pub rmatrix: RMatrix,
    pub delta: Cobracket,
    /// Block maps `φ + ψ*` and `ψ + φ*` on the double.
    pub block_pair: (LinearMap, LinearMap),
    pub report: Report,
}

/// Builds the double of a valid bialgebra: `big = g ⋈ g*` and
/// `r = Σ e_i ⊗ e^i` (the off-diagonal identity block in the fixed basis
/// order). With endo data `(φ, ψ)` — verified to be an endo structure first
/// — the block maps are checked to balance `r` and to equip the double's
/// coboundary bialgebra with an endo structure. Block restriction of the
/// induced cobracket must recover `δ` on the first block and the negated
/// dual of the bracket on the second.
pub fn double_rmatrix(
    b: &LieBialgebra,
    endo: Option<(&LinearMap, &LinearMap)>,
) -> Result<DoubleRMatrix> {
    let bial_report = check_lie_bialgebra(b)?;
    if let Some(item) = bial_report.first_failure() {
        return Err(Error::InvalidInput(format!(
            "not a Lie bialgebra: {} fails at witness {:?}",
            item.identity,
            item.witness.as_ref().unwrap()
        )));
    }
    if let Some((phi, psi)) = endo {
        let endo_report = check_endo_lie_bialgebra(b, phi, psi)?;
        if let Some(item) = endo_report.first_failure() {
            return Err(Error::InvalidInput(format!(
                "(φ, ψ) is not an endo structure on the bialgebra: {} fails at witness {:?}",
                item.identity,
                item.witness.as_ref().unwrap()
            )));
        }
    }

    let n = b.dim();
    let id = LinearMap::identity(n);
    let (phi, psi) = match endo {
        Some((phi, psi)) => (phi.clone(), psi.clone()),
        None => (id.clone(), id.clone()),
    };

    let pair = standard_matched_pair(b)?;
    let big = bowtie(&pair);
    let r = Tensor2::from_fn(2 * n, 2 * n, |i, j| {
        if j == n + i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let rmatrix = RMatrix::new(big.clone(), r)?;
    let delta = coboundary_cobracket(&rmatrix);

    let fwd_block = phi.block_diag(&psi.transpose());
    let bwd_block = psi.block_diag(&phi.transpose());

    let mut report = Report::new("double-rmatrix");
    report.push(CheckItem::from_violation(
        "pairing_balance_fwd",
        "((φ+ψ*)⊗id - id⊗(ψ+φ*))(r) = 0",
        tensor_balance_violation(&fwd_block, &bwd_block, rmatrix.r()),
    ));
    report.push(CheckItem::from_violation(
        "pairing_balance_bwd",
        "((ψ+φ*)⊗id - id⊗(φ+ψ*))(r) = 0",
        tensor_balance_violation(&bwd_block, &fwd_block, rmatrix.r()),
    ));

    let double_b = LieBialgebra::new(big.clone(), delta.clone())?;
    let double_report = check_lie_bialgebra(&double_b)?;
    report.push(flag_from_report(
        "double_bialgebra",
        "(g⋈g*, δ_r) is a Lie bialgebra",
        &double_report,
    ));

    // block restrictions of δ_r
    let mut g_block = None;
    'gb: for k in 0..n {
        let dk = delta.delta_mat(k);
        for i in 0..2 * n {
            for j in 0..2 * n {
                let expect = if i < n && j < n {
                    b.delta().get(k, i, j).clone()
                } else {
                    Scalar::zero()
                };
                let r = dk.get(i, j) - &expect;
                if !r.is_zero() {
                    g_block = Some((vec![k, i, j], r));
                    break 'gb;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "g_block_restriction",
        "δ_r restricted to g equals δ",
        g_block,
    ));

    // dual block: δ_r(e^k) = −α(e^k) with α the dual of the bracket
    let mut dual_block = None;
    'db: for k in 0..n {
        let dk = delta.delta_mat(n + k);
        for i in 0..2 * n {
            for j in 0..2 * n {
                let expect = if i >= n && j >= n {
                    -b.algebra().c(i - n, j - n, k)
                } else {
                    Scalar::zero()
                };
                let r = dk.get(i, j) - &expect;
                if !r.is_zero() {
                    dual_block = Some((vec![k, i, j], r));
                    break 'db;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "dual_block_restriction",
        "δ_r restricted to g* equals the negated dual of the bracket",
        dual_block,
    ));

    let endo_double = check_endo_lie_bialgebra(&double_b, &fwd_block, &bwd_block)?;
    report.push(flag_from_report(
        "double_endo_bialgebra",
        "((g⋈g*, φ+ψ*), δ_r, ψ+φ*) is an endo Lie bialgebra",
        &endo_double,
    ));

    Ok(DoubleRMatrix {
        big,
        rmatrix,
        delta,
        block_pair: (fwd_block, bwd_block),
        report,
    })
}

fn flag_from_report(identity: &str, formula: &str, sub: &Report) -> CheckItem {
    match sub.first_failure() {
        None => CheckItem::passing(identity, formula),
        Some(item) => CheckItem {
            identity: identity.into(),
            formula: formula.into(),
            pass: false,
            witness: item.witness.clone(),
            residual: item.residual.clone(),
        },
    }
}
