//! Invariants checked on random graphs against the oracles in `common`.

mod common;

use equilines::construct::{construct, Construction};
use equilines::extensible::{extend, extensible_params};
use equilines::field::{FieldCtx, QuadResidues};
use equilines::groups::{automorphism_group, in_two_graph_group, two_graph_group};
use equilines::paley::paley_graph;
use equilines::spectra::{char_poly, chi_from_char_poly, chi_polynomial, spectrum};
use equilines::{Perm, SeidelGraph, SwitchingVector};
use num_bigint::BigUint;
use num_rational::BigRational;
use proptest::prelude::*;

use common::*;

fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = SeidelGraph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            SeidelGraph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_and_signs(min: usize, max: usize) -> impl Strategy<Value = (SeidelGraph, Vec<i8>)> {
    graph_strategy(min, max).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(prop_oneof![Just(1i8), Just(-1i8)], n))
    })
}

fn graph_and_perm(min: usize, max: usize) -> impl Strategy<Value = (SeidelGraph, Vec<usize>)> {
    graph_strategy(min, max).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// `(t, s, s̄)` read off the pair counts, for graphs whose pair counts fit.
fn srg_oracle(g: &SeidelGraph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    if n >= 3 && n % 2 == 1 && g.edge_count() == n * (n - 1) / 2 {
        return Some((n - 2, (n - 1) / 2, 0));
    }
    let (v, k, l, m) = brute_srg(g)?;
    if k == 0 || k != 2 * m || (v - 1 - k) % 2 == 1 {
        return None;
    }
    Some((l, m, (v - 1 - k) / 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn switching_is_an_involution_preserving_triples((g, nu) in graph_and_signs(3, 10)) {
        let v = SwitchingVector::new(nu.clone()).unwrap();
        let h = g.apply_switching(&v).unwrap();
        prop_assert_eq!(h.seidel_matrix(), switch_matrix(&g.seidel_matrix(), &nu));
        prop_assert_eq!(h.apply_switching(&v).unwrap(), g.clone());
        prop_assert_eq!(h.triple_sign().unwrap(), g.triple_sign().unwrap());
    }

    #[test]
    fn localization_isolates_and_is_idempotent(g in graph_strategy(1, 10), j in 0usize..10) {
        let j = j % g.n();
        let l = g.localize(j).unwrap();
        prop_assert_eq!(&l, &graph_of(&localize_matrix(&g.seidel_matrix(), j)));
        prop_assert!(l.is_isolated(j));
        prop_assert_eq!(l.localize(j).unwrap(), l.clone());
        prop_assert!(equilines::is_switching_equivalent(&g, &l).unwrap().is_some());
    }

    #[test]
    fn conjugation_commutes_with_localization((g, sigma) in graph_and_perm(1, 9), j in 0usize..9) {
        let j = j % g.n();
        let p = Perm::from_images(sigma.clone()).unwrap();
        let lhs = g.localize(j).unwrap().conjugate(&p).unwrap();
        let rhs = g.conjugate(&p).unwrap().localize(sigma[j]).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(g.conjugate(&p).unwrap().seidel_matrix(), conjugate_matrix(&g.seidel_matrix(), &sigma));
    }

    #[test]
    fn char_poly_matches_faddeev_leverrier(g in graph_strategy(1, 9)) {
        let ours: Vec<BigRational> = char_poly(&g).coeffs().iter().cloned().map(BigRational::from_integer).collect();
        let mut oracle = faddeev_leverrier(&g.seidel_matrix());
        while oracle.len() > ours.len() && oracle.last().is_some_and(|c| *c == BigRational::from_integer(0.into())) {
            oracle.pop();
        }
        prop_assert_eq!(ours, oracle);
    }

    #[test]
    fn chi_is_the_transformed_char_poly(g in graph_strategy(1, 10)) {
        prop_assert_eq!(chi_from_char_poly(&char_poly(&g), g.n()), chi_polynomial(&g));
    }

    #[test]
    fn spectrum_is_a_switching_invariant((g, nu) in graph_and_signs(1, 10)) {
        let h = g.apply_switching(&SwitchingVector::new(nu).unwrap()).unwrap();
        prop_assert_eq!(char_poly(&h), char_poly(&g));
        prop_assert_eq!(chi_polynomial(&h), chi_polynomial(&g));
        prop_assert_eq!(spectrum(&h).eigenvalues, spectrum(&g).eigenvalues);
    }

    #[test]
    fn automorphisms_lie_in_the_two_graph_group(g in graph_strategy(3, 10)) {
        let aut = automorphism_group(&g).unwrap();
        let two = two_graph_group(&g).unwrap();
        for s in aut.generators() {
            prop_assert!(two.contains(s));
        }
        for s in two.generators() {
            prop_assert!(in_two_graph_group(&g, s).unwrap());
        }
        prop_assert_eq!(two.order() % aut.order(), BigUint::from(0u8));
    }

    #[test]
    fn switching_classes_share_their_group((g, nu) in graph_and_signs(3, 10)) {
        let h = g.apply_switching(&SwitchingVector::new(nu).unwrap()).unwrap();
        let (gg, gh) = (two_graph_group(&g).unwrap(), two_graph_group(&h).unwrap());
        prop_assert_eq!(gg.order(), gh.order());
        for s in gh.generators() {
            prop_assert!(gg.contains(s));
        }
    }

    #[test]
    fn double_transitivity_forces_two_eigenvalues(g in graph_strategy(3, 9)) {
        if two_graph_group(&g).unwrap().is_doubly_transitive() {
            prop_assert!(spectrum(&g).distinct() <= 2);
        }
    }

    #[test]
    fn extensibility_is_a_pair_count_condition(g in graph_strategy(1, 9)) {
        prop_assert_eq!(extensible_params(&g).map(|p| (p.t, p.s, p.sbar)), srg_oracle(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_orders_match_enumeration(g in graph_strategy(3, 6)) {
        prop_assert_eq!(automorphism_group(&g).unwrap().order(), BigUint::from(brute_automorphism_order(&g)));
        prop_assert_eq!(two_graph_group(&g).unwrap().order(), BigUint::from(brute_two_graph_order(&g)));
    }
}

fn extensible_examples() -> Vec<SeidelGraph> {
    let mut out: Vec<SeidelGraph> = [Construction::Pentagon, Construction::Triangle, Construction::T1(2), Construction::T1(3)]
        .into_iter()
        .map(|c| construct(c).unwrap())
        .collect();
    out.extend([5, 9, 13].map(|q| paley_graph(q).unwrap()));
    out
}

#[test]
fn every_derived_graph_of_an_extension_has_the_same_parameters() {
    for lam in extensible_examples() {
        let p = extensible_params(&lam).unwrap();
        let ext = extend(&lam).unwrap();
        for y in 0..ext.n() {
            let derived = ext.localize(y).unwrap().remove_vertex(y).unwrap();
            assert_eq!(extensible_params(&derived), Some(p), "vertex {y} of an extension of order {}", ext.n());
        }
    }
}

#[test]
fn non_square_multiplication_maps_paley_to_its_complement() {
    for q in [5, 9, 13, 17] {
        let f = FieldCtx::new(q).unwrap();
        let r = QuadResidues::new(&f);
        let g = paley_graph(q).unwrap();
        for &m in &r.non_squares {
            let sigma = Perm::from_images((0..q).map(|x| f.mul(m, x)).collect()).unwrap();
            assert_eq!(g.conjugate(&sigma).unwrap(), g.complement(), "q={q}, multiplier {m}");
        }
        for &m in &r.squares {
            let sigma = Perm::from_images((0..q).map(|x| f.mul(m, x)).collect()).unwrap();
            assert_eq!(g.conjugate(&sigma).unwrap(), g, "q={q}, multiplier {m}");
        }
    }
}
