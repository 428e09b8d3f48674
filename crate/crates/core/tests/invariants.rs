//! Cross-module invariants: the bidirectional characterizations tying
//! representations, matched pairs, bowties, bialgebras, Manin triples,
//! coboundary structures and O-operators to one another, exercised on
//! random small instances and exhaustive sweeps at desk scale.

use proptest::prelude::*;

use lbw_core::bialg::{
    check_coherent_hom, check_endo_lie_bialgebra, check_lie_bialgebra, check_lie_coalgebra,
    check_tbgs_weak_hom, dualize_inv, Cobracket, LieBialgebra, MapPair,
};
use lbw_core::catalog;
use lbw_core::cybe::{
    check_coboundary_endo, check_coherent_hom_r, check_psi_cybe, check_sym_invariance,
    coboundary_cobracket, cybe_lhs, RMatrix,
};
use lbw_core::endo::{
    adjoint_endo_rep, check_dually_represents, check_endo_lie, check_endo_rep,
    check_rep_equivalence, EndoLieAlgebra, EndoRepresentation,
};
use lbw_core::fixtures::{all_square_maps, gen_cybe_fixtures, unit_coeffs};
use lbw_core::kernel::{LinearMap, Scalar, Tensor2, Tensor3};
use lbw_core::lie::{
    adjoint_rep, check_invariant_form, check_lie_algebra, check_representation, coadjoint_rep,
    dual_rep, semidirect_bracket, BilinearForm, LieAlgebra, Representation,
};
use lbw_core::manin::{
    bowtie, check_endo_manin_triple, check_matched_pair, hyperbolic_form, manin_from_bialgebra,
    standard_matched_pair, MatchedPair,
};
use lbw_core::oop_prelie::{
    check_hom_ooperators, check_ooperator, check_prelie, functor_f_hom, functor_f_obj,
    functor_g_hom, functor_g_obj, lift_hom_to_double, lift_to_rmatrix, prelie_hom_violation,
    rsharp_of, OOperator,
};

fn scalar_entries(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec((-2i64..=2).prop_map(Scalar::from_int), len)
}

fn square_map(n: usize) -> impl Strategy<Value = LinearMap> {
    scalar_entries(n * n).prop_map(move |v| {
        LinearMap::from_fn(n, n, |i, j| v[i * n + j].clone())
    })
}

proptest! {
    #[test]
    fn flip_is_an_involution(entries in scalar_entries(9)) {
        let t = Tensor2::from_fn(3, 3, |i, j| entries[i * 3 + j].clone());
        prop_assert_eq!(t.flip().unwrap().flip().unwrap(), t);
    }

    #[test]
    fn cyclic_rotation_has_order_three(entries in scalar_entries(27)) {
        let mut t = Tensor3::zeros(3, 3, 3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    t.set(i, j, k, entries[(i * 3 + j) * 3 + k].clone());
                }
            }
        }
        let r3 = t.cyclic_rotate().unwrap().cyclic_rotate().unwrap().cyclic_rotate().unwrap();
        prop_assert_eq!(r3, t);
    }

    #[test]
    fn transpose_reverses_composition(f in square_map(3), g in square_map(3)) {
        prop_assert_eq!(f.mul(&g).transpose(), g.transpose().mul(&f.transpose()));
        prop_assert_eq!(f.transpose().transpose(), f);
    }

    /// Jacobi on the structure constants is the same thing as the adjoint
    /// maps forming a representation.
    #[test]
    fn jacobi_iff_adjoint_represents(entries in scalar_entries(4)) {
        // antisymmetric constants at dim 2 from 4 free parameters:
        // [e1,e2] = a e1 + b e2 always satisfies Jacobi; go to dim 3
        // with a sparse random table instead
        let mut c = vec![Scalar::zero(); 27];
        let idx = |i: usize, j: usize, k: usize| (i * 3 + j) * 3 + k;
        // [e0,e1] = p e2, [e0,e2] = q e1, [e1,e2] = r e0 + s e2
        let assign: [(usize, usize, usize, &Scalar); 4] = [
            (0, 1, 2, &entries[0]),
            (0, 2, 1, &entries[1]),
            (1, 2, 0, &entries[2]),
            (1, 2, 2, &entries[3]),
        ];
        for (i, j, k, v) in assign {
            c[idx(i, j, k)] = v.clone();
            c[idx(j, i, k)] = -v;
        }
        let alg = LieAlgebra::new(3, c).unwrap();
        let jacobi = check_lie_algebra(&alg).pass();
        let ad_rep = check_representation(&adjoint_rep(&alg)).pass();
        prop_assert_eq!(jacobi, ad_rep);
    }

    /// The semidirect bracket satisfies Jacobi exactly when the action is a
    /// representation.
    #[test]
    fn semidirect_jacobi_iff_representation(m0 in square_map(2), m1 in square_map(2)) {
        let alg = catalog::solvable2();
        let rep = Representation::new(alg, 2, vec![m0, m1]).unwrap();
        let is_rep = check_representation(&rep).pass();
        let big_ok = check_lie_algebra(&semidirect_bracket(&rep)).pass();
        prop_assert_eq!(is_rep, big_ok);
    }

    /// Dualizing a representation preserves the representation property.
    #[test]
    fn dual_rep_preserves_property(m0 in square_map(2), m1 in square_map(2)) {
        let alg = catalog::solvable2();
        let rep = Representation::new(alg, 2, vec![m0, m1]).unwrap();
        prop_assert_eq!(
            check_representation(&rep).pass(),
            check_representation(&dual_rep(&rep)).pass()
        );
    }

    /// The block endomorphism of a semidirect product is bracket-preserving
    /// exactly when the operator part is an endo representation.
    #[test]
    fn endo_semidirect_iff_endo_rep(alpha in square_map(2), lambda in -2i64..=2) {
        let endo = catalog::lambda_scaling(&Scalar::from_int(lambda)).unwrap();
        let rep = adjoint_rep(endo.algebra());
        let er = EndoRepresentation::new(rep.clone(), alpha).unwrap();
        let is_endo_rep = check_endo_rep(&endo, &er).unwrap().pass();

        let big = semidirect_bracket(&rep);
        let block = EndoLieAlgebra::new(big, endo.phi().block_diag(er.alpha())).unwrap();
        prop_assert_eq!(is_endo_rep, check_endo_lie(&block).pass());
    }

    /// The dual triple is an endo representation exactly when the operator
    /// dually represents.
    #[test]
    fn dual_endo_rep_iff_dually_represents(beta in square_map(2), lambda in -2i64..=2) {
        let endo = catalog::lambda_scaling(&Scalar::from_int(lambda)).unwrap();
        let rep = adjoint_rep(endo.algebra());
        let dually = check_dually_represents(&endo, &rep, &beta).unwrap().pass();
        let forced = EndoRepresentation::new(dual_rep(&rep), beta.transpose()).unwrap();
        prop_assert_eq!(dually, check_endo_rep(&endo, &forced).unwrap().pass());
    }

    /// The bowtie bracket satisfies Jacobi exactly when the quadruple is a
    /// matched pair, at dims 2 + 2.
    #[test]
    fn bowtie_jacobi_iff_matched_pair(
        r0 in square_map(2), r1 in square_map(2),
        u0 in square_map(2), u1 in square_map(2),
    ) {
        let pair = MatchedPair::new(
            catalog::solvable2(),
            LieAlgebra::abelian(2),
            vec![r0, r1],
            vec![u0, u1],
        ).unwrap();
        let matched = check_matched_pair(&pair, None).pass();
        let big_ok = check_lie_algebra(&bowtie(&pair)).pass();
        prop_assert_eq!(matched, big_ok);
    }

    /// Coboundary cobrackets: full coalgebra-plus-cocycle validity matches
    /// the two invariance conditions, packaged as the identity-pair
    /// coboundary check; symmetric-part invariance alone already forces
    /// coantisymmetry of the output.
    #[test]
    fn coboundary_conditions_iff_bialgebra(entries in scalar_entries(4)) {
        let alg = catalog::solvable2();
        let r = Tensor2::from_fn(2, 2, |i, j| entries[i * 2 + j].clone());
        let rm = RMatrix::new(alg.clone(), r).unwrap();
        let endo_id = EndoLieAlgebra::new(alg.clone(), LinearMap::identity(2)).unwrap();
        let conditions = check_coboundary_endo(&endo_id, &LinearMap::identity(2), &rm)
            .unwrap()
            .pass();

        let delta = coboundary_cobracket(&rm);
        let coalgebra_report = check_lie_coalgebra(&delta);
        if check_sym_invariance(&rm).pass() {
            prop_assert!(coalgebra_report.item_pass("coantisymmetry"));
        }
        let direct = if coalgebra_report.pass() {
            let b = LieBialgebra::new(alg, delta).unwrap();
            check_lie_bialgebra(&b).unwrap().pass()
        } else {
            false
        };
        prop_assert_eq!(conditions, direct);
    }

    /// Slow oracle for the coboundary cobracket: expand
    /// `(id ⊗ ad(e_k) + ad(e_k) ⊗ id)(r)` summand by summand over basis
    /// tensors and compare with the contracted implementation.
    #[test]
    fn coboundary_cobracket_matches_basis_expansion(
        entries in scalar_entries(9),
        which in 0usize..3,
    ) {
        let alg = match which {
            0 => catalog::solvable2(),
            1 => catalog::sl2(),
            _ => catalog::heisenberg3(),
        };
        let n = alg.dim();
        let r = Tensor2::from_fn(n, n, |i, j| entries[i * 3 + j].clone());
        let rm = RMatrix::new(alg.clone(), r.clone()).unwrap();
        let delta = coboundary_cobracket(&rm);
        for k in 0..n {
            // expand over every basis summand r[a][b]·e_a⊗e_b
            let mut expected = LinearMap::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    let coeff = r.get(a, b);
                    if coeff.is_zero() {
                        continue;
                    }
                    // e_a ⊗ [e_k, e_b]
                    for (m, c) in alg.bracket_basis(k, b).into_iter().enumerate() {
                        let v = expected.get(a, m) + coeff * &c;
                        expected.set(a, m, v);
                    }
                    // [e_k, e_a] ⊗ e_b
                    for (m, c) in alg.bracket_basis(k, a).into_iter().enumerate() {
                        let v = expected.get(m, b) + coeff * &c;
                        expected.set(m, b, v);
                    }
                }
            }
            prop_assert_eq!(expected, delta.delta_mat(k));
        }
    }

    /// For skew tensors the two balance conditions agree.
    #[test]
    fn skew_balance_verdicts_agree(a in -2i64..=2, lambda in -2i64..=2, mu in -2i64..=2) {
        let mut r = Tensor2::zeros(2, 2);
        r.set(0, 1, Scalar::from_int(a));
        r.set(1, 0, Scalar::from_int(-a));
        let rm = RMatrix::new(catalog::solvable2(), r).unwrap();
        let endo = catalog::lambda_scaling(&Scalar::from_int(lambda)).unwrap();
        let mut psi = LinearMap::identity(2);
        psi.set(1, 1, Scalar::from_int(mu));
        let report = check_psi_cybe(&endo, &psi, &rm).unwrap();
        prop_assert_eq!(
            report.item_pass("balance_fwd"),
            report.item_pass("balance_bwd")
        );
        prop_assert!(report.notes[0].pass);
    }
}

/// Candidate bialgebras with individually valid components: the cocycle
/// verdict, the standard matched-pair verdict, and the Manin-triple verdict
/// (bowtie is Lie and the hyperbolic form invariant) agree three ways.
#[test]
fn bialgebra_matched_pair_manin_three_way_agreement() {
    let mut candidates: Vec<(String, LieBialgebra)> = catalog::fixture_bialgebras();
    candidates.push((
        "solvable2_self_dual".into(),
        LieBialgebra::new(catalog::solvable2(), dualize_inv(&catalog::solvable2())).unwrap(),
    ));
    candidates.push((
        "sl2_self_dual".into(),
        LieBialgebra::new(catalog::sl2(), dualize_inv(&catalog::sl2())).unwrap(),
    ));
    candidates.push((
        "heisenberg_self_dual".into(),
        LieBialgebra::new(catalog::heisenberg3(), dualize_inv(&catalog::heisenberg3())).unwrap(),
    ));
    candidates.push((
        "solvable2_dual_of_heisenberg_slice".into(),
        LieBialgebra::new(
            catalog::sl2(),
            dualize_inv(&catalog::heisenberg3()),
        )
        .unwrap(),
    ));

    let mut failures = 0;
    for (name, b) in &candidates {
        let bial = check_lie_bialgebra(b).unwrap().pass();
        let pair = standard_matched_pair(b).unwrap();
        let matched = check_matched_pair(&pair, None).pass();
        let big = bowtie(&pair);
        let manin = check_lie_algebra(&big).pass()
            && check_invariant_form(&big, &hyperbolic_form(b.dim()))
                .unwrap()
                .item_pass("invariant");
        assert_eq!(bial, matched, "{name}: bialgebra vs matched pair");
        assert_eq!(bial, manin, "{name}: bialgebra vs Manin");
        if !bial {
            failures += 1;
        }
    }
    assert!(failures > 0, "the candidate pool should include failing cocycles");
}

/// For invertible maps, the inverse pair is coherent exactly when the map
/// alone is a standard isomorphism.
#[test]
fn inverse_pair_coherent_iff_standard_isomorphism() {
    let cases = [
        catalog::coboundary_fixture(),
        LieBialgebra::new(catalog::solvable2(), Cobracket::zero(2)).unwrap(),
    ];
    let maps = all_square_maps(2, &unit_coeffs()).unwrap();
    for b in &cases {
        let mut equivalences = 0;
        for phi in &maps {
            let Some(inv) = phi.inverse() else { continue };
            let pair = MapPair::new(phi.clone(), inv).unwrap();
            let coherent = check_coherent_hom(b, b, &pair).unwrap().pass();
            let standard =
                lbw_core::bialg::check_standard_hom(b, b, phi).unwrap().pass();
            assert_eq!(coherent, standard);
            equivalences += usize::from(coherent);
        }
        assert!(equivalences > 0);
    }
}

/// An endo pair on a bialgebra is literally a coherent endomorphism.
#[test]
fn endo_bialgebra_iff_coherent_endomorphism() {
    let b = catalog::coboundary_fixture();
    let maps = all_square_maps(2, &unit_coeffs()).unwrap();
    let mut passing = 0;
    for phi in &maps {
        for psi in &maps {
            let endo = check_endo_lie_bialgebra(&b, phi, psi).unwrap().pass();
            let pair = MapPair::new(phi.clone(), psi.clone()).unwrap();
            let coherent = check_coherent_hom(&b, &b, &pair).unwrap().pass();
            assert_eq!(endo, coherent);
            passing += usize::from(endo);
        }
    }
    assert!(passing > 1);
}

/// The endo data extends along the three-way correspondence: endo bialgebra
/// ⇔ endo matched pair ⇔ endo Manin triple.
#[test]
fn endo_three_way_agreement() {
    let cases = [
        ("coboundary", catalog::coboundary_fixture()),
        (
            "zero_delta",
            LieBialgebra::new(catalog::solvable2(), Cobracket::zero(2)).unwrap(),
        ),
    ];
    let mut diag_pairs: Vec<(LinearMap, LinearMap)> = Vec::new();
    for a in [-1i64, 0, 1, 2] {
        for b in [-1i64, 0, 1, 2] {
            for c in [-1i64, 1, 2] {
                for d in [-1i64, 0, 1] {
                    let mut phi = LinearMap::zeros(2, 2);
                    phi.set(0, 0, Scalar::from_int(a));
                    phi.set(1, 1, Scalar::from_int(b));
                    let mut psi = LinearMap::zeros(2, 2);
                    psi.set(0, 0, Scalar::from_int(c));
                    psi.set(1, 1, Scalar::from_int(d));
                    diag_pairs.push((phi, psi));
                }
            }
        }
    }
    for (name, b) in cases {
        let mt = manin_from_bialgebra(&b).unwrap();
        let pair = standard_matched_pair(&b).unwrap();
        let mut passing = 0;
        for (phi, psi) in &diag_pairs {
            let v_bialg = check_endo_lie_bialgebra(&b, phi, psi).unwrap().pass();
            let v_matched =
                check_matched_pair(&pair, Some((phi, &psi.transpose()))).pass();
            let v_manin = check_endo_manin_triple(&mt, phi, psi).unwrap().pass();
            assert_eq!(v_bialg, v_matched, "{name}: bialgebra vs matched pair endo");
            assert_eq!(v_bialg, v_manin, "{name}: bialgebra vs Manin endo");
            passing += usize::from(v_bialg);
        }
        assert!(passing > 0, "{name}: no passing endo pair in the sweep");
    }
}

/// The bowtie with a block endomorphism is an endo Lie algebra exactly when
/// the matched pair carries the endo structure, over a sweep of diagonal
/// endomorphism candidates.
#[test]
fn endo_bowtie_iff_endo_matched_pair() {
    let b = catalog::coboundary_fixture();
    let pair = standard_matched_pair(&b).unwrap();
    let big = bowtie(&pair);
    for a in [-1i64, 0, 1, 2] {
        for c in [-1i64, 0, 1, 2] {
            // φ_g = diag(1, a) is an endomorphism of g; φ_h = diag(c, 1)
            // is an endomorphism of the dual solvable algebra
            let mut phi_g = LinearMap::identity(2);
            phi_g.set(1, 1, Scalar::from_int(a));
            let mut phi_h = LinearMap::identity(2);
            phi_h.set(0, 0, Scalar::from_int(c));
            let matched = check_matched_pair(&pair, Some((&phi_g, &phi_h))).pass();
            let block = EndoLieAlgebra::new(big.clone(), phi_g.block_diag(&phi_h)).unwrap();
            assert_eq!(matched, check_endo_lie(&block).pass(), "a={a}, c={c}");
        }
    }
}

/// Quadratic converse: reconstructing the form from an equivalence of the
/// adjoint and coadjoint endo representations recovers an invariant form
/// whose transform is the given operator.
#[test]
fn quadratic_form_reconstructed_from_equivalence() {
    let sl2 = catalog::sl2();
    let form = catalog::killing_form(&sl2);
    let phi = LinearMap::from_rows(vec![
        vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
        vec![Scalar::zero(), Scalar::from_int(-1), Scalar::zero()],
        vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
    ])
    .unwrap();
    let endo = EndoLieAlgebra::new(sl2.clone(), phi.clone()).unwrap();
    let hat = lbw_core::lie::adjoint_of_endomorphism(&form, &phi).unwrap();

    // the Gram matrix is an equivalence; read the form back off it
    let adjoint = adjoint_endo_rep(&endo);
    let dual = lbw_core::endo::build_dual_endo_rep(&endo, &adjoint_rep(&sl2), &hat).unwrap();
    let vphi = form.gram().clone();
    assert!(check_rep_equivalence(&adjoint, &dual, &vphi).unwrap().pass());

    let recovered = BilinearForm::new(vphi.transpose()).unwrap();
    let report = check_invariant_form(&sl2, &recovered).unwrap();
    assert!(report.pass(), "{}", report.render_text());
    assert_eq!(
        lbw_core::lie::adjoint_of_endomorphism(&recovered, &phi).unwrap(),
        hat
    );
}

/// Sufficiency: symmetric-part invariance plus the balanced Yang-Baxter
/// verdict plus the dual-representation hypothesis give the full coboundary
/// endo verdict.
#[test]
fn psi_cybe_with_invariance_implies_coboundary_endo() {
    let rm = catalog::wedge_r2();
    let mut checked = 0;
    for lambda in [-1i64, 1, 2] {
        let endo = catalog::lambda_scaling(&Scalar::from_int(lambda)).unwrap();
        let psi = endo.phi().inverse().unwrap();
        let hypothesis = check_dually_represents(
            &endo,
            &adjoint_rep(endo.algebra()),
            &psi,
        )
        .unwrap()
        .pass();
        let psi_cybe = check_psi_cybe(&endo, &psi, &rm).unwrap().pass();
        let invariance = check_sym_invariance(&rm).pass();
        if hypothesis && psi_cybe && invariance {
            let full = check_coboundary_endo(&endo, &psi, &rm).unwrap();
            assert!(full.pass(), "λ = {lambda}: {}", full.render_text());
            checked += 1;
        }
    }
    assert!(checked > 0);
}

/// Homomorphisms of r-matrices induce coherent homomorphisms of the
/// coboundary bialgebras, and passing pairs compose.
#[test]
fn r_matrix_homs_induce_bialgebra_homs_and_compose() {
    let solutions = gen_cybe_fixtures(&catalog::solvable2(), &unit_coeffs()).unwrap();
    let skew: Vec<&RMatrix> = solutions.iter().filter(|rm| rm.is_skew()).collect();
    assert!(skew.len() >= 2);
    let maps = all_square_maps(2, &unit_coeffs()).unwrap();

    let mut passing_endos: Vec<MapPair> = Vec::new();
    for rg in &skew {
        let bg = LieBialgebra::new(rg.algebra().clone(), coboundary_cobracket(rg)).unwrap();
        for rh in &skew {
            let bh = LieBialgebra::new(rh.algebra().clone(), coboundary_cobracket(rh)).unwrap();
            for phi in &maps {
                for psi in &maps {
                    let pair = MapPair::new(phi.clone(), psi.clone()).unwrap();
                    if check_coherent_hom_r(rg, rh, &pair).unwrap().pass() {
                        let induced = check_coherent_hom(&bg, &bh, &pair).unwrap();
                        assert!(induced.pass(), "{}", induced.render_text());
                        // on the triangular fixtures the same-algebra weak
                        // check passes as well (the notions coincide here)
                        let weak = check_tbgs_weak_hom(&bg, &bh, &pair).unwrap();
                        assert!(weak.pass(), "{}", weak.render_text());
                        if std::ptr::eq(*rg, *rh) && rg.r() == catalog::wedge_r2().r() {
                            passing_endos.push(pair);
                        }
                    }
                }
            }
        }
    }

    // composition of passing endomorphism pairs passes
    let rm = catalog::wedge_r2();
    assert!(passing_endos.len() > 1);
    for p1 in passing_endos.iter().take(8) {
        for p2 in passing_endos.iter().take(8) {
            let composite = p1.then(p2).unwrap();
            assert!(check_coherent_hom_r(&rm, &rm, &composite).unwrap().pass());
        }
    }
}

/// The negated dual block of the double equals the dual of the bracket: the
/// double's report checks it; here the same data re-read as a bialgebra on
/// the dual side must validate.
#[test]
fn double_dual_block_is_a_bialgebra_again() {
    let b = catalog::coboundary_fixture();
    let double = lbw_core::cybe::double_rmatrix(&b, None).unwrap();
    assert!(double.report.pass(), "{}", double.report.render_text());

    // dual block of δ_r as a cobracket over the dual algebra: negated dual
    // of the bracket of g, over g* with its own bracket from δ
    let n = b.dim();
    let g_star = lbw_core::bialg::dualize(b.delta()).unwrap();
    let mut neg_alpha = Cobracket::zero(n);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                neg_alpha.set(k, i, j, -b.algebra().c(i, j, k));
            }
        }
    }
    assert!(check_lie_coalgebra(&neg_alpha).pass());
    let dual_side = LieBialgebra::new(g_star, neg_alpha).unwrap();
    assert!(check_lie_bialgebra(&dual_side).unwrap().pass());
}

/// Functors preserve identities and composition, and G retracts F.
#[test]
fn functor_laws_on_enumerated_homs() {
    let fix = catalog::prelie2();
    let op = functor_f_obj(&fix).unwrap();
    let maps = all_square_maps(2, &unit_coeffs()).unwrap();

    let prelie_homs: Vec<&LinearMap> = maps
        .iter()
        .filter(|f| prelie_hom_violation(&fix, &fix, f).is_none())
        .collect();
    assert!(prelie_homs.len() > 1);

    for f in &prelie_homs {
        let (phi, alpha) = functor_f_hom(&fix, &fix, f).unwrap();
        assert!(check_hom_ooperators(&op, &op, &phi, &alpha).unwrap().pass());
        // G sends the pair back to the map itself
        let back = functor_g_hom(&op, &op, &phi, &alpha).unwrap();
        assert_eq!(&back, *f);
    }

    // composition is preserved
    for f in prelie_homs.iter().take(6) {
        for g in prelie_homs.iter().take(6) {
            let composite = g.mul(f);
            assert!(prelie_hom_violation(&fix, &fix, &composite).is_none());
            let (pf, af) = functor_f_hom(&fix, &fix, f).unwrap();
            let (pg, ag) = functor_f_hom(&fix, &fix, g).unwrap();
            let (pc, ac) = functor_f_hom(&fix, &fix, &composite).unwrap();
            assert_eq!(pc, pg.mul(&pf));
            assert_eq!(ac, ag.mul(&af));
        }
    }

    assert_eq!(functor_g_obj(&op).unwrap(), fix);
}

/// The four lifting conditions agree with the directly computed verdict on
/// the lifted pair over a sweep of backward data.
#[test]
fn lift_hom_iff_agreement_over_backward_sweep() {
    let fix = catalog::prelie2();
    let og = functor_f_obj(&fix).unwrap();
    let phi = LinearMap::from_rows(vec![
        vec![Scalar::one(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::from_int(2)],
    ])
    .unwrap();
    let (pf, pa) = functor_f_hom(&fix, &fix, &phi).unwrap();

    let mut diagonals = Vec::new();
    for a in [-1i64, 0, 1, 2] {
        for b in [-1i64, 0, 1, 2] {
            let mut m = LinearMap::zeros(2, 2);
            m.set(0, 0, Scalar::from_int(a));
            m.set(1, 1, Scalar::from_int(b));
            diagonals.push(m);
        }
    }
    let mut passing = 0;
    for psi in &diagonals {
        for beta in &diagonals {
            let (_, report) = lift_hom_to_double(&og, &og, &pf, &pa, psi, beta).unwrap();
            assert!(report.notes[0].pass, "iff agreement violated");
            passing += usize::from(report.pass());
        }
    }
    // ψ = β = 0 lifts, and some backward data fails
    assert!(passing >= 1);
    assert!(passing < diagonals.len() * diagonals.len());
}

/// The sharp of a skew solution is an O-operator whose induced pre-Lie
/// product is left-symmetric.
#[test]
fn sharp_bridge_on_enumerated_skew_solutions() {
    let solutions = gen_cybe_fixtures(&catalog::solvable2(), &unit_coeffs()).unwrap();
    for rm in solutions.iter().filter(|rm| rm.is_skew()) {
        let sharp = rsharp_of(rm);
        assert_eq!(check_ooperator(&sharp).pass(), cybe_lhs(rm).is_zero());
        if check_ooperator(&sharp).pass() {
            assert!(check_prelie(&functor_g_obj(&sharp).unwrap()).pass());
        }
    }
}

/// Lifting is consistent with the sharp construction: the lift of the sharp
/// of the wedge is a skew solution in the four-dimensional double.
#[test]
fn lift_of_sharp_is_a_skew_solution() {
    let sharp = rsharp_of(&catalog::wedge_r2());
    let lifted = lift_to_rmatrix(&sharp);
    assert!(lifted.is_skew());
    assert!(cybe_lhs(&lifted).is_zero());
    assert!(check_lie_algebra(lifted.algebra()).pass());
}

/// Coadjoint representations dualize adjoint ones: spot equality of the
/// constructions used throughout.
#[test]
fn coadjoint_is_dual_of_adjoint() {
    for alg in [catalog::solvable2(), catalog::sl2(), catalog::heisenberg3()] {
        assert_eq!(coadjoint_rep(&alg), dual_rep(&adjoint_rep(&alg)));
    }
}

/// An O-operator with endo data and the induced balanced-CYBE verdict agree
/// through the sharp also when the balance fails.
#[test]
fn sharp_bridge_negative_case() {
    let rm = catalog::wedge_r2();
    let endo = catalog::lambda_scaling(&Scalar::from_int(2)).unwrap();
    // ψ = φ breaks the balance (φ r ≠ r φᵀ is fine, but φ·r = r·φᵀ fails)
    let report = lbw_core::oop_prelie::check_rsharp_bridge(&endo, endo.phi(), &rm).unwrap();
    assert!(!report.pass());
    assert!(report.notes[0].pass, "agreement note must hold even on failure");
    let sharp = lbw_core::oop_prelie::rsharp_with_endo(&rm, endo.phi(), endo.phi());
    let o_verdict = check_ooperator(&sharp).pass();
    let c_verdict = check_psi_cybe(&endo, endo.phi(), &rm).unwrap().pass();
    assert_eq!(o_verdict, c_verdict);
}

/// Round-trip of an O-operator through its lifted tensor: reading the
/// (g, V*) block back recovers the operator matrix.
#[test]
fn lift_block_encodes_the_operator() {
    let fix = catalog::prelie2();
    let op = functor_f_obj(&fix).unwrap();
    let lifted = lift_to_rmatrix(&op);
    let n = 2;
    for i in 0..n {
        for a in 0..n {
            assert_eq!(lifted.r().get(i, n + a), op.t().get(i, a));
            assert_eq!(&(-lifted.r().get(n + a, i)), op.t().get(i, a));
        }
    }
}

/// Order-independent sanity for the enumerated O-operator sweep used by the
/// acceptance gate: both verdict outcomes occur.
#[test]
fn o_operator_lift_sweep_has_both_outcomes() {
    let rep = coadjoint_rep(&catalog::solvable2());
    let maps = all_square_maps(2, &unit_coeffs()).unwrap();
    let mut pass = 0;
    let mut fail = 0;
    for t in &maps {
        let op = OOperator::new(rep.clone(), t.clone(), None).unwrap();
        let direct = check_ooperator(&op).pass();
        let through_lift = cybe_lhs(&lift_to_rmatrix(&op)).is_zero();
        assert_eq!(direct, through_lift);
        if direct {
            pass += 1;
        } else {
            fail += 1;
        }
    }
    assert!(pass > 0 && fail > 0);
}
