//! Lie algebras carrying a bracket-preserving endomorphism, their
//! representations and dual representations, equivalences, and semidirect
//! products.
//!
//! The endomorphism is stored as a plain matrix with no invertibility
//! requirement.

use crate::error::{Error, Result};
use crate::kernel::{LinearMap, Scalar};
use crate::lie::{
    self, dual_rep, lie_hom_violation, semidirect_product, LieAlgebra, Representation,
};
use crate::report::{CheckItem, Report};

/// A Lie algebra together with an endomorphism candidate `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoLieAlgebra {
    algebra: LieAlgebra,
    phi: LinearMap,
}

impl EndoLieAlgebra {
    pub fn new(algebra: LieAlgebra, phi: LinearMap) -> Result<Self> {
        let n = algebra.dim();
        if phi.rows() != n || phi.cols() != n {
            return Err(Error::dims(
                "endomorphism matrix",
                format!("{n}x{n}"),
                format!("{}x{}", phi.rows(), phi.cols()),
            ));
        }
        Ok(EndoLieAlgebra { algebra, phi })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn phi(&self) -> &LinearMap {
        &self.phi
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// A representation of an endo Lie algebra: `(V, ρ)` plus `α ∈ End(V)`
/// subject to `α(ρ(x)v) = ρ(φ(x))(α(v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoRepresentation {
    rep: Representation,
    alpha: LinearMap,
}

impl EndoRepresentation {
    pub fn new(rep: Representation, alpha: LinearMap) -> Result<Self> {
        let m = rep.dim_v();
        if alpha.rows() != m || alpha.cols() != m {
            return Err(Error::dims(
                "endo representation operator",
                format!("{m}x{m}"),
                format!("{}x{}", alpha.rows(), alpha.cols()),
            ));
        }
        Ok(EndoRepresentation { rep, alpha })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }
}

/// `φ[x,y] = [φ(x), φ(y)]` on all basis pairs.
pub fn check_endo_lie(endo: &EndoLieAlgebra) -> Report {
    let mut report = Report::new("endo-lie");
    report.push(CheckItem::from_violation(
        "bracket_endomorphism",
        "φ[x,y] = [φ(x),φ(y)]",
        lie_hom_violation(&endo.algebra, &endo.algebra, &endo.phi),
    ));
    report
}

fn require_same_algebra(endo: &EndoLieAlgebra, rep: &Representation) -> Result<()> {
    if rep.algebra() != endo.algebra() {
        return Err(Error::InvalidInput(
            "representation is attached to a different algebra".into(),
        ));
    }
    Ok(())
}

/// `α·ρ(e_i) = ρ(φ(e_i))·α` for every basis vector.
pub fn check_endo_rep(endo: &EndoLieAlgebra, er: &EndoRepresentation) -> Result<Report> {
    require_same_algebra(endo, er.rep())?;
    let mut report = Report::new("endo-representation");
    report.push(CheckItem::from_violation(
        "action_intertwines",
        "α(ρ(x)v) = ρ(φ(x))(α(v))",
        intertwine_violation(endo, er.rep(), er.alpha(), true),
    ));
    Ok(report)
}

/// Violation of `α·ρ(e_i) − ρ(φ(e_i))·α = 0` (forward) or
/// `β·ρ(φ(e_i)) − ρ(e_i)·β = 0` (backward).
fn intertwine_violation(
    endo: &EndoLieAlgebra,
    rep: &Representation,
    op: &LinearMap,
    forward: bool,
) -> Option<(Vec<usize>, Scalar)> {
    let n = endo.dim();
    let m = rep.dim_v();
    for i in 0..n {
        let phi_ei: Vec<Scalar> = (0..n).map(|p| endo.phi.get(p, i).clone()).collect();
        let rho_phi = rep.rho_vec(&phi_ei);
        let diff = if forward {
            op.mul(rep.rho(i)).sub(&rho_phi.mul(op))
        } else {
            op.mul(&rho_phi).sub(&rep.rho(i).mul(op))
        };
        for p in 0..m {
            for q in 0..m {
                if !diff.get(p, q).is_zero() {
                    return Some((vec![i, p, q], diff.get(p, q).clone()));
                }
            }
        }
    }
    None
}

/// `β(ρ(φ(x))v) = ρ(x)(β(v))`: exactly the condition making
/// `(V*, ρ*, β*)` a representation of `(g, φ)`. On the adjoint
/// representation this is `ψ[φ(x), y] = [x, ψ(y)]`.
pub fn check_dually_represents(
    endo: &EndoLieAlgebra,
    rep: &Representation,
    beta: &LinearMap,
) -> Result<Report> {
    require_same_algebra(endo, rep)?;
    let m = rep.dim_v();
    if beta.rows() != m || beta.cols() != m {
        return Err(Error::dims(
            "dual representation operator",
            format!("{m}x{m}"),
            format!("{}x{}", beta.rows(), beta.cols()),
        ));
    }
    let mut report = Report::new("dually-represents");
    report.push(CheckItem::from_violation(
        "dual_intertwines",
        "β(ρ(φ(x))v) = ρ(x)(β(v))",
        intertwine_violation(endo, rep, beta, false),
    ));
    Ok(report)
}

/// The dual endo representation `(V*, ρ*, β*)`; valid exactly when `β`
/// dually represents `(g, φ)` on `(V, ρ)`.
pub fn build_dual_endo_rep(
    endo: &EndoLieAlgebra,
    rep: &Representation,
    beta: &LinearMap,
) -> Result<EndoRepresentation> {
    let report = check_dually_represents(endo, rep, beta)?;
    if let Some(item) = report.first_failure() {
        return Err(Error::InvalidInput(format!(
            "β does not dually represent (g, φ): {} fails at witness {:?} with residual {}",
            item.formula,
            item.witness.as_ref().unwrap(),
            item.residual.as_ref().unwrap()
        )));
    }
    EndoRepresentation::new(dual_rep(rep), beta.transpose())
}

/// The semidirect product `(g ⋉_ρ V, φ + α)` with the block-diagonal
/// endomorphism.
pub fn endo_semidirect(endo: &EndoLieAlgebra, er: &EndoRepresentation) -> Result<EndoLieAlgebra> {
    let report = check_endo_rep(endo, er)?;
    if let Some(item) = report.first_failure() {
        return Err(Error::InvalidInput(format!(
            "(V, ρ, α) is not an endo representation: {} fails at witness {:?} with residual {}",
            item.formula,
            item.witness.as_ref().unwrap(),
            item.residual.as_ref().unwrap()
        )));
    }
    let algebra = semidirect_product(er.rep())?;
    EndoLieAlgebra::new(algebra, endo.phi.block_diag(er.alpha()))
}

/// Equivalence of two endo representations through an invertible
/// intertwiner: `vφ·ρ₁(x) = ρ₂(x)·vφ` and `vφ·α₁ = α₂·vφ`.
/// Non-invertibility is reported as a failed item, not an error.
pub fn check_rep_equivalence(
    er1: &EndoRepresentation,
    er2: &EndoRepresentation,
    vphi: &LinearMap,
) -> Result<Report> {
    if er1.rep().algebra() != er2.rep().algebra() {
        return Err(Error::InvalidInput(
            "endo representations live over different algebras".into(),
        ));
    }
    let (m1, m2) = (er1.rep().dim_v(), er2.rep().dim_v());
    if vphi.rows() != m2 || vphi.cols() != m1 {
        return Err(Error::dims(
            "equivalence map",
            format!("{m2}x{m1}"),
            format!("{}x{}", vphi.rows(), vphi.cols()),
        ));
    }
    let mut report = Report::new("endo-rep-equivalence");
    report.push(CheckItem::flag(
        "invertible",
        "vφ is a linear isomorphism",
        vphi.is_invertible(),
    ));

    let n = er1.rep().algebra().dim();
    let mut rho_violation = None;
    'rho: for i in 0..n {
        let diff = vphi.mul(er1.rep().rho(i)).sub(&er2.rep().rho(i).mul(vphi));
        for p in 0..m2 {
            for q in 0..m1 {
                if !diff.get(p, q).is_zero() {
                    rho_violation = Some((vec![i, p, q], diff.get(p, q).clone()));
                    break 'rho;
                }
            }
        }
    }
    report.push(CheckItem::from_violation(
        "intertwines_action",
        "vφ(ρ₁(x)v) = ρ₂(x)(vφ(v))",
        rho_violation,
    ));

    let diff = vphi.mul(er1.alpha()).sub(&er2.alpha().mul(vphi));
    let mut alpha_violation = None;
    'alpha: for p in 0..m2 {
        for q in 0..m1 {
            if !diff.get(p, q).is_zero() {
                alpha_violation = Some((vec![p, q], diff.get(p, q).clone()));
                break 'alpha;
            }
        }
    }
    report.push(CheckItem::from_violation(
        "intertwines_operator",
        "vφ·α₁ = α₂·vφ",
        alpha_violation,
    ));
    Ok(report)
}

/// The adjoint endo representation `(g, ad, φ)` of `(g, φ)`.
pub fn adjoint_endo_rep(endo: &EndoLieAlgebra) -> EndoRepresentation {
    EndoRepresentation {
        rep: lie::adjoint_rep(endo.algebra()),
        alpha: endo.phi().clone(),
    }
}
