//! Named desk-scale fixtures: the algebras, forms, tensors and bialgebras
//! the test suites and the fixture generator work against.

use crate::bialg::{Cobracket, LieBialgebra};
use crate::cybe::{coboundary_cobracket, RMatrix};
use crate::endo::EndoLieAlgebra;
use crate::error::Result;
use crate::kernel::{LinearMap, Scalar, Tensor2};
use crate::lie::{BilinearForm, LieAlgebra};
use crate::oop_prelie::PreLieAlgebra;

/// The nonabelian algebra of dimension two: `[e1, e2] = e2`.
pub fn solvable2() -> LieAlgebra {
    LieAlgebra::from_brackets(2, &[(0, 1, 1, Scalar::one())]).expect("valid table")
}

/// `sl2` in the basis `(e, h, f)`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, 0, Scalar::from_int(-2)),
            (1, 2, 2, Scalar::from_int(-2)),
            (0, 2, 1, Scalar::one()),
        ],
    )
    .expect("valid table")
}

/// The Heisenberg algebra of dimension three: `[e1, e2] = e3`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, 2, Scalar::one())]).expect("valid table")
}

/// Algebras addressable by name from the command line.
pub fn named_algebra(name: &str) -> Option<LieAlgebra> {
    match name {
        "abelian2" => Some(LieAlgebra::abelian(2)),
        "abelian3" => Some(LieAlgebra::abelian(3)),
        "solvable2" => Some(solvable2()),
        "sl2" => Some(sl2()),
        "heisenberg3" => Some(heisenberg3()),
        _ => None,
    }
}

/// Default algebra for a given dimension in the fixture generator.
pub fn default_algebra_for_dim(dim: usize) -> Option<(&'static str, LieAlgebra)> {
    match dim {
        2 => Some(("solvable2", solvable2())),
        3 => Some(("sl2", sl2())),
        _ => None,
    }
}

/// The trace form `B(x, y) = tr(ad x · ad y)`.
pub fn killing_form(alg: &LieAlgebra) -> BilinearForm {
    let n = alg.dim();
    let ads: Vec<LinearMap> = (0..n).map(|i| alg.ad(i)).collect();
    let gram = LinearMap::from_fn(n, n, |i, j| {
        let prod = ads[i].mul(&ads[j]);
        (0..n).map(|k| prod.get(k, k).clone()).sum()
    });
    BilinearForm::new(gram).expect("square by construction")
}

/// The scaling family on [`solvable2`]: `φ(e1) = e1`, `φ(e2) = λ e2`, a
/// bracket endomorphism for every `λ`.
pub fn lambda_scaling(lambda: &Scalar) -> Result<EndoLieAlgebra> {
    let mut phi = LinearMap::identity(2);
    phi.set(1, 1, lambda.clone());
    EndoLieAlgebra::new(solvable2(), phi)
}

/// `r = e1⊗e2 − e2⊗e1` on [`solvable2`]: a skew solution of the
/// Yang-Baxter equation.
pub fn wedge_r2() -> RMatrix {
    let mut r = Tensor2::zeros(2, 2);
    r.set(0, 1, Scalar::one());
    r.set(1, 0, Scalar::from_int(-1));
    RMatrix::new(solvable2(), r).expect("shape matches")
}

/// `r = e⊗f + ¼ h⊗h` on [`sl2`]: a non-skew solution whose symmetric part
/// is the invariant split Casimir.
pub fn sl2_quasitriangular() -> RMatrix {
    let mut r = Tensor2::zeros(3, 3);
    r.set(0, 2, Scalar::one());
    r.set(1, 1, Scalar::ratio(1, 4).expect("nonzero denominator"));
    RMatrix::new(sl2(), r).expect("shape matches")
}

/// The coboundary bialgebra on [`solvable2`] induced by [`wedge_r2`]:
/// `δ(e1) = e1⊗e2 − e2⊗e1`, `δ(e2) = 0`.
pub fn coboundary_fixture() -> LieBialgebra {
    let rm = wedge_r2();
    LieBialgebra::new(rm.algebra().clone(), coboundary_cobracket(&rm)).expect("dims agree")
}

/// Dimension-two pre-Lie fixture: `e1·e1 = e1`, `e1·e2 = e2`, rest zero.
/// Its sub-adjacent algebra is [`solvable2`] with `L(e1) = id`, `L(e2) = 0`.
pub fn prelie2() -> PreLieAlgebra {
    PreLieAlgebra::from_products(2, &[(0, 0, 0, Scalar::one()), (0, 1, 1, Scalar::one())])
        .expect("valid table")
}

/// One-dimensional idempotent product `e·e = e`.
pub fn prelie1_idempotent() -> PreLieAlgebra {
    PreLieAlgebra::from_products(1, &[(0, 0, 0, Scalar::one())]).expect("valid table")
}

/// A spread of valid bialgebras at dimensions two and three: zero
/// cobrackets, coboundary ones on the solvable and split simple algebras,
/// scaled variants, and dual-side structures over abelian algebras.
pub fn fixture_bialgebras() -> Vec<(String, LieBialgebra)> {
    let mut out: Vec<(String, LieBialgebra)> = Vec::new();
    let mut push = |name: &str, b: LieBialgebra| out.push((name.to_string(), b));

    for (name, alg) in [
        ("abelian2", LieAlgebra::abelian(2)),
        ("abelian3", LieAlgebra::abelian(3)),
        ("solvable2", solvable2()),
        ("sl2", sl2()),
        ("heisenberg3", heisenberg3()),
    ] {
        let n = alg.dim();
        push(
            &format!("{name}_zero_delta"),
            LieBialgebra::new(alg, Cobracket::zero(n)).expect("dims agree"),
        );
    }

    // abelian algebras carry any valid coalgebra
    for (name, dual_of) in [
        ("abelian2_dual_solvable2", solvable2()),
        ("abelian3_dual_sl2", sl2()),
        ("abelian3_dual_heisenberg3", heisenberg3()),
    ] {
        let n = dual_of.dim();
        push(
            name,
            LieBialgebra::new(LieAlgebra::abelian(n), crate::bialg::dualize_inv(&dual_of))
                .expect("dims agree"),
        );
    }

    // scaled coboundary structures on the solvable algebra
    for scale in [-2i64, -1, 1, 2, 3] {
        let wedge = wedge_r2();
        let scaled = RMatrix::new(
            wedge.algebra().clone(),
            Tensor2::from_fn(2, 2, |i, j| wedge.r().get(i, j) * &Scalar::from_int(scale)),
        )
        .expect("shape matches");
        push(
            &format!("solvable2_coboundary_scale_{scale}"),
            LieBialgebra::new(scaled.algebra().clone(), coboundary_cobracket(&scaled))
                .expect("dims agree"),
        );
    }

    // coboundary structures on sl2 and the Heisenberg algebra
    let sl2_r = sl2_quasitriangular();
    push(
        "sl2_quasitriangular",
        LieBialgebra::new(sl2_r.algebra().clone(), coboundary_cobracket(&sl2_r))
            .expect("dims agree"),
    );
    for scale in [-1i64, 1, 2] {
        // e ∧ h spans a subalgebra of sl2, so its wedge solves the CYBE
        let mut r = Tensor2::zeros(3, 3);
        r.set(0, 1, Scalar::from_int(scale));
        r.set(1, 0, Scalar::from_int(-scale));
        let rm = RMatrix::new(sl2(), r).expect("shape matches");
        push(
            &format!("sl2_borel_wedge_{scale}"),
            LieBialgebra::new(rm.algebra().clone(), coboundary_cobracket(&rm))
                .expect("dims agree"),
        );
    }
    for scale in [-1i64, 1, 2] {
        // e1 ∧ e3 spans an abelian subalgebra of the Heisenberg algebra
        let mut r = Tensor2::zeros(3, 3);
        r.set(0, 2, Scalar::from_int(scale));
        r.set(2, 0, Scalar::from_int(-scale));
        let rm = RMatrix::new(heisenberg3(), r).expect("shape matches");
        push(
            &format!("heisenberg3_wedge_{scale}"),
            LieBialgebra::new(rm.algebra().clone(), coboundary_cobracket(&rm))
                .expect("dims agree"),
        );
    }
    for scale in [1i64, 2, -1] {
        // h ∧ f wedge on sl2, the opposite Borel subalgebra
        let mut r = Tensor2::zeros(3, 3);
        r.set(1, 2, Scalar::from_int(scale));
        r.set(2, 1, Scalar::from_int(-scale));
        let rm = RMatrix::new(sl2(), r).expect("shape matches");
        push(
            &format!("sl2_opposite_borel_wedge_{scale}"),
            LieBialgebra::new(rm.algebra().clone(), coboundary_cobracket(&rm))
                .expect("dims agree"),
        );
    }

    out
}
