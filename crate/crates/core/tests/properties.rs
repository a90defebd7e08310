use macaulay_core::cubics::{
    aronhold_invariants, binary_discriminant, classify_binary_cubic, classify_ternary_cubic,
    jacobian_quotient_dimensions, BinaryCubicClass, UniPoly,
};
use macaulay_core::dualcore::{
    contract, parse_dual, DualPoly, JetElement, Matrix, MultiIndex, Scalar, SeriesPoly, Subspace,
};
use macaulay_core::invsys::{
    annihilator, derivative_span, hilbert_function, is_gorenstein, perp, symmetric_hf_criterion,
    top_form_quotient, AlgebraPresentation,
};
use macaulay_core::random;
use macaulay_core::socle3::{aut_matrix, delta_matrix, verify_iso, AutMap, IsoWitness};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_unit(rng: &mut ChaCha8Rng, m: usize, s: u32) -> JetElement {
    let mut u = random::series_poly(rng, m, s, 4, 0.5);
    let c = Scalar::from_integer(rng.gen_range(1..=5).into());
    u.add_term(MultiIndex::zero(m), c - u.constant_term());
    JetElement::new(u, s)
}

fn random_aut(rng: &mut ChaCha8Rng, m: usize, s: u32) -> AutMap {
    let t = random::invertible_matrix(rng, m, 3);
    let images = (0..m)
        .map(|j| {
            let linear = SeriesPoly::from_terms(
                m,
                (0..m).map(|k| (MultiIndex::unit(m, k), t.row(j)[k].clone())),
            );
            let higher = random::series_poly(rng, m, s, 3, 0.4).filter(|e| e.degree() >= 2);
            &linear + &higher
        })
        .collect();
    AutMap::new(images, s).unwrap()
}

fn same_space(a: &Subspace, b: &Subspace) -> bool {
    a.is_subspace_of(b) && b.is_subspace_of(a)
}

fn det(m: &Matrix) -> Scalar {
    m.determinant().unwrap()
}

/// Distinct roots of a binary cubic over the algebraic closure, via the squarefree part.
fn binary_root_count(f: &DualPoly) -> usize {
    let c = |a, b| f.coeff(&MultiIndex::new(vec![a, b]));
    let dehom = UniPoly::new(vec![c(0, 3), c(1, 2), c(2, 1), c(3, 0)]);
    let at_infinity = usize::from(c(3, 0).is_zero());
    dehom.squarefree_part().degree().unwrap_or(0) + at_infinity
}

fn singular_family() -> Vec<DualPoly> {
    [
        "y1*y2*y3",
        "y1*y2^2 - y2*y3^2",
        "y1*y2*y3 - y3^3",
        "y2^2*y3 - y1^3 - y1^2*y3",
        "y2^2*y3 - y1^3",
    ]
    .iter()
    .map(|s| parse_dual(s).unwrap())
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn contraction_is_a_module_action(seed in any::<u64>(), m in 1usize..=3) {
        let mut r = rng(seed);
        let g = random::dual_poly(&mut r, m, 4, 6, 0.6);
        let f = random::series_poly(&mut r, m, 3, 6, 0.5);
        let h = random::series_poly(&mut r, m, 3, 6, 0.5);
        prop_assert_eq!(
            contract(&(&f * &h), &g).unwrap(),
            contract(&f, &contract(&h, &g).unwrap()).unwrap()
        );
        prop_assert_eq!(
            contract(&(&f + &h), &g).unwrap(),
            &contract(&f, &g).unwrap() + &contract(&h, &g).unwrap()
        );
        prop_assert_eq!(contract(&SeriesPoly::one(m), &g).unwrap(), g);
    }

    #[test]
    fn printed_polynomials_parse_back(seed in any::<u64>(), m in 1usize..=4) {
        let g = random::dual_poly(&mut rng(seed), m, 4, 20, 0.5);
        prop_assume!(!g.is_zero());
        let back = parse_dual(&g.to_string()).unwrap().embed(m);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn derivative_span_dimension_is_multiplicity(seed in any::<u64>(), m in 1usize..=3, d in 1u32..=4) {
        let g = random::dual_poly(&mut rng(seed), m, d, 5, 0.5);
        prop_assume!(!g.is_zero());
        let a = AlgebraPresentation::from_dual(&g).unwrap();
        prop_assert_eq!(a.multiplicity, derivative_span(&g).dim());
        prop_assert_eq!(a.multiplicity, a.hilbert_function.iter().sum::<usize>());
        prop_assert_eq!(a.hilbert_function[0], 1);
        prop_assert!(is_gorenstein(&a).gorenstein);
    }

    #[test]
    fn perp_of_annihilator_recovers_the_inverse_system(seed in any::<u64>(), m in 1usize..=3, d in 1u32..=4) {
        let g = random::dual_poly(&mut rng(seed), m, d, 5, 0.5);
        prop_assume!(!g.is_zero());
        let s = g.degree().unwrap();
        let ann = annihilator(&g, s).unwrap();
        let back = perp(&ann.generator_polys(), m, s).unwrap();
        prop_assert!(same_space(&back, &derivative_span(&g)));
        for p in ann.generator_polys() {
            prop_assert!(contract(&p, &g).unwrap().is_zero());
        }
    }

    #[test]
    fn annihilator_is_an_ideal(seed in any::<u64>(), m in 1usize..=3, d in 1u32..=3) {
        let g = random::dual_poly(&mut rng(seed), m, d, 5, 0.5);
        prop_assume!(!g.is_zero());
        let s = g.degree().unwrap();
        let ann = annihilator(&g, s).unwrap();
        for b in ann.kbasis.basis::<macaulay_core::dualcore::Series>() {
            for j in 0..m {
                let moved = (&b * &SeriesPoly::var(m, j)).truncated(s);
                prop_assert!(ann.contains(&moved));
            }
        }
    }

    #[test]
    fn unit_action_preserves_hilbert_function(seed in any::<u64>(), m in 1usize..=3, d in 1u32..=4) {
        let mut r = rng(seed);
        let g = random::dual_poly(&mut r, m, d, 5, 0.5);
        prop_assume!(!g.is_zero());
        let s = g.degree().unwrap();
        let u = random_unit(&mut r, m, s);
        let ug = u.act(&g).unwrap();
        prop_assert_eq!(hilbert_function(&ug).unwrap(), hilbert_function(&g).unwrap());
        prop_assert!(same_space(&derivative_span(&ug), &derivative_span(&g)));
    }

    #[test]
    fn symmetric_profile_matches_top_form(seed in any::<u64>(), m in 1usize..=3, d in 1u32..=4) {
        let mut r = rng(seed);
        let g = if seed % 2 == 0 {
            random::dual_poly(&mut r, m, d, 5, 0.5)
        } else {
            &random::nondegenerate_cubic(&mut r, m, 5) + &random::dual_poly(&mut r, m, 2, 5, 0.5)
        };
        prop_assume!(!g.is_zero());
        if symmetric_hf_criterion(&g).unwrap() {
            prop_assert_eq!(
                top_form_quotient(&g).unwrap().hilbert_function,
                hilbert_function(&g).unwrap()
            );
        }
    }

    #[test]
    fn matrix_of_composition_is_product(seed in any::<u64>(), m in 1usize..=3, s in 1u32..=3) {
        let mut r = rng(seed);
        let phi = random_aut(&mut r, m, s);
        let psi = random_aut(&mut r, m, s);
        let lhs = aut_matrix(&phi.compose(&psi), s).unwrap();
        let rhs = aut_matrix(&phi, s).unwrap().try_mul(&aut_matrix(&psi, s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let id = aut_matrix(&phi.compose(&phi.inverse()), s).unwrap();
        prop_assert_eq!(id, Matrix::identity(aut_matrix(&phi, s).unwrap().rows()));
    }

    #[test]
    fn witnessed_pairs_share_hilbert_function(seed in any::<u64>(), m in 1usize..=3, d in 1u32..=3) {
        let mut r = rng(seed);
        let g = random::dual_poly(&mut r, m, d, 4, 0.5);
        prop_assume!(!g.is_zero());
        let s = g.degree().unwrap();
        prop_assume!(s >= 1);
        let w = IsoWitness { phi: random_aut(&mut r, m, s), unit: random_unit(&mut r, m, s) };
        let f = w.phi.pullback(&w.unit.act(&g).unwrap()).unwrap();
        prop_assert!(verify_iso(&f, &g, &w).unwrap());
        prop_assert_eq!(hilbert_function(&f).unwrap(), hilbert_function(&g).unwrap());
        let done = IsoWitness::complete(&f, &g, w.phi.clone()).unwrap();
        prop_assert!(done.is_some());
    }

    #[test]
    fn delta_rank_is_embedding_dimension(seed in any::<u64>(), n in 1usize..=4) {
        let f3 = random::form(&mut rng(seed), n, 3, 3);
        prop_assume!(!f3.is_zero());
        prop_assert_eq!(delta_matrix(&f3).unwrap().rank, hilbert_function(&f3).unwrap()[1]);
    }

    #[test]
    fn binary_discriminant_detects_repeated_roots(seed in any::<u64>(), kind in 0u8..3) {
        let mut r = rng(seed);
        let f = match kind {
            0 => random::form(&mut r, 2, 3, 6),
            1 => {
                let a = random::form(&mut r, 2, 1, 4);
                let b = random::form(&mut r, 2, 1, 4);
                &(&a * &a) * &b
            }
            _ => {
                let a = random::form(&mut r, 2, 1, 4);
                &(&a * &a) * &a
            }
        };
        prop_assume!(!f.is_zero());
        let disc = binary_discriminant(&f).unwrap();
        let class = classify_binary_cubic(&f).unwrap();
        let roots = binary_root_count(&f);
        prop_assert_eq!(class == BinaryCubicClass::ThreeDistinct, !disc.is_zero());
        prop_assert_eq!(roots == 3, !disc.is_zero());
        prop_assert_eq!(class == BinaryCubicClass::PerfectCube, roots == 1);

        let a = random::invertible_matrix(&mut r, 2, 3);
        let moved = f.linear_substitution(&a);
        let dt = det(&a);
        let scale = &dt * &dt * &dt * &dt * &dt * &dt;
        prop_assert_eq!(binary_discriminant(&moved).unwrap(), disc * scale);
    }

    #[test]
    fn aronhold_invariants_transform_by_determinant(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random::form(&mut r, 3, 3, 3);
        let a = random::invertible_matrix(&mut r, 3, 2);
        let before = aronhold_invariants(&f).unwrap();
        let after = aronhold_invariants(&f.linear_substitution(&a)).unwrap();
        let d = det(&a);
        let d2 = &d * &d;
        let d4 = &d2 * &d2;
        prop_assert_eq!(after.s, &before.s * &d4);
        prop_assert_eq!(after.t, &before.t * &(&d4 * &d2));
    }

    #[test]
    fn smooth_cubics_have_complete_intersection_jacobian(seed in any::<u64>(), pick in 0usize..6) {
        let mut r = rng(seed);
        let f = match singular_family().get(pick) {
            Some(g) => g.linear_substitution(&random::invertible_matrix(&mut r, 3, 3)),
            None => random::form(&mut r, 3, 3, 5),
        };
        let smooth = !aronhold_invariants(&f).unwrap().discriminant.is_zero();
        let dims = jacobian_quotient_dimensions(&f, 4).unwrap();
        prop_assert_eq!(smooth, dims == vec![1, 3, 3, 1, 0]);
        if pick < 5 {
            prop_assert!(!smooth);
            prop_assert!(classify_ternary_cubic(&f).unwrap().j().is_none());
        }
    }
}

#[test]
fn unit_helper_builds_units() {
    let mut r = rng(1);
    for m in 1..=3 {
        assert!(random_unit(&mut r, m, 3).is_unit());
        let phi = random_aut(&mut r, m, 3);
        assert!(!phi.linear_part().determinant().unwrap().is_zero());
    }
    assert_eq!(Scalar::one(), det(&Matrix::identity(2)));
}
