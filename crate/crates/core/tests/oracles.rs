//! Library routines checked against independent brute-force oracles.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use tensorfin_core::canonical::{canonical_form, is_isomorphic, isomorphic_by_search};
use tensorfin_core::catalog::{contains_quotient, pattern, Catalog};
use tensorfin_core::classifier::{classify, individual_rf, Rule, VerdictKind};
use tensorfin_core::cover::{cover_contains_pattern, cover_window};
use tensorfin_core::separated::{classify_component, UndirectedGraph};
use tensorfin_core::{families, graph_shape, tensor, AlgebraPresentation, ShapeKind, VertexId};

fn line_or_cycle(seed: u64) -> AlgebraPresentation {
    let mut rng = common::rng(seed);
    match seed % 3 {
        0 => common::random_line(&mut rng, 6),
        1 => common::random_oriented_cycle(&mut rng, 1, 6),
        _ => common::random_zigzag_cycle(&mut rng, 6),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn relabelling_preserves_canonical_form(seed in any::<u64>()) {
        let p = line_or_cycle(seed);
        let q = common::relabel(&mut common::rng(seed ^ 0xabc), &p);
        prop_assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        prop_assert!(isomorphic_by_search(&p, &q));
    }

    #[test]
    fn canonical_form_matches_brute_force(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (line_or_cycle(s1), line_or_cycle(s2.wrapping_mul(3).wrapping_add(s1 % 3)));
        let brute = common::brute_force_isomorphic(&a, &b);
        prop_assert_eq!(is_isomorphic(&a, &b).unwrap(), brute);
        prop_assert_eq!(isomorphic_by_search(&a, &b), brute);
    }

    #[test]
    fn nonzero_paths_match_direct_enumeration(seed in any::<u64>()) {
        let p = line_or_cycle(seed);
        let lib: BTreeSet<Vec<usize>> = p
            .nonzero_paths(None)
            .unwrap()
            .into_iter()
            .filter(|x| !x.is_trivial())
            .map(|x| x.arrows().iter().map(|a| a.0).collect())
            .collect();
        prop_assert_eq!(lib, common::nonzero_words(&p));
    }

    #[test]
    fn opposite_is_an_involution(seed in any::<u64>()) {
        let p = line_or_cycle(seed);
        prop_assert!(isomorphic_by_search(&p.opposite().opposite(), &p));
    }

    #[test]
    fn tensor_counts(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (line_or_cycle(s1), line_or_cycle(s2));
        let t = tensor(&a, &b).presentation;
        let (qa, qb) = (a.quiver(), b.quiver());
        prop_assert_eq!(t.vertex_count(), qa.vertex_count() * qb.vertex_count());
        prop_assert_eq!(
            t.quiver().arrow_count(),
            qa.arrow_count() * qb.vertex_count() + qa.vertex_count() * qb.arrow_count()
        );
        prop_assert_eq!(
            t.relations().commutativity_pairs().len(),
            qa.arrow_count() * qb.arrow_count()
        );
    }

    #[test]
    fn recognition_ignores_vertex_order(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (n, edges) = common::random_graph(&mut rng, 9, 10);
        let mut perm: Vec<usize> = (0..n).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let moved: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        prop_assert_eq!(
            classify_component(&UndirectedGraph::new(n, edges)),
            classify_component(&UndirectedGraph::new(n, moved))
        );
    }

    #[test]
    fn cover_lifts_the_base_relations(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let base = common::random_oriented_cycle(&mut rng, 1, 7);
        let period = base.vertex_count();
        let w = cover_window(&base, 6 * period + 8).unwrap();
        prop_assert!(w.algebra.quiver().vertices().all(|v| w.labels[v.0] == w.labels[(v.0 + period) % w.window_length] || v.0 + period >= w.window_length));
        // zero paths well inside the window repeat with the period
        let zeros: BTreeSet<(usize, usize)> =
            w.algebra.minimal_zero_paths().iter().map(|z| (z.source().0, z.len())).collect();
        for &(s, len) in &zeros {
            if s + period + len < w.window_length {
                prop_assert!(zeros.contains(&(s + period, len)));
            }
        }
        // and each one is a lifted minimal relation of the base
        let base_zeros: BTreeSet<(VertexId, usize)> =
            base.minimal_zero_paths().iter().map(|z| (z.source(), z.len())).collect();
        for &(s, len) in &zeros {
            prop_assert!(base_zeros.contains(&(w.labels[s], len)));
        }
    }
}

#[test]
fn band_oracle_on_small_cycles() {
    let mut rng = common::rng(11);
    let mut seen = 0;
    for _ in 0..400 {
        let p = common::random_zigzag_cycle(&mut rng, 6);
        let finite = individual_rf(&p).kind() == VerdictKind::Finite;
        assert_eq!(finite, !common::has_band(&p), "{}", tensorfin_core::classifier::describe(&p));
        seen += 1;
    }
    // monomial lines and oriented cycles have no band and are finite
    for _ in 0..200 {
        let p = common::random_line(&mut rng, 6);
        assert!(!common::has_band(&p));
        assert_eq!(individual_rf(&p).kind(), VerdictKind::Finite);
        let c = common::random_oriented_cycle(&mut rng, 1, 6);
        assert!(!common::has_band(&c));
        assert_eq!(individual_rf(&c).kind(), VerdictKind::Finite);
    }
    assert_eq!(seen, 400);
}

#[test]
fn closed_zigzag_with_one_relation_is_finite() {
    // 1 -> 2 -> 3 -> 4 closed by 1 -> 4, with a2 a3 = 0
    let p = families::cycle_with("+++-").unwrap().with_zero(&["a2", "a3"]).unwrap();
    assert!(matches!(graph_shape(p.quiver()).kind, ShapeKind::ZigzagCycle(4, _)));
    assert!(!common::has_band(&p));
    assert_eq!(individual_rf(&p).kind(), VerdictKind::Finite);
    let hereditary = families::cycle_with("+++-").unwrap();
    assert!(common::has_band(&hereditary));
}

/// All monomial algebras on an oriented `p`-cycle, one per isomorphism class:
/// each start position gets no relation or one of length `2..=p+1`.
fn all_cycle_algebras(p: usize) -> Vec<AlgebraPresentation> {
    let options = p + 1;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for code in 0..options.pow(p as u32) {
        let mut zeros = Vec::new();
        let mut c = code;
        for start in 1..=p {
            let choice = c % options;
            c /= options;
            if choice > 0 {
                zeros.push((start, choice + 1));
            }
        }
        let a = families::cycle_with_zeros(p, &zeros);
        if !a.validate().finite_dimensional {
            continue;
        }
        if seen.insert(canonical_form(&a).unwrap()) {
            out.push(a);
        }
    }
    out
}

/// The covering form of the cycle criterion: finite with `N(m)` iff
/// (`m = 3`: rad^3 = 0 and the covering has no `B1`, `B2`, `B2op`) or
/// (`m >= 4`: the covering has no `B3`).
fn covering_rule(a: &AlgebraPresentation, m: usize) -> bool {
    let on_cover = |n: &str| cover_contains_pattern(a, &pattern(n).unwrap()).unwrap();
    if m == 3 {
        a.radical_power_vanishes(3) && !on_cover("B1") && !on_cover("B2") && !on_cover("B2op")
    } else {
        !on_cover("B3")
    }
}

#[test]
fn explicit_cycle_lists_agree_with_the_covering_rule() {
    let mut checked = 0;
    for p in 2..=5 {
        for a in all_cycle_algebras(p) {
            for m in 3..=5 {
                let v = classify(&a, &families::n_line(m)).unwrap();
                let expected = covering_rule(&a, m);
                assert_eq!(
                    v.kind == VerdictKind::Finite,
                    expected,
                    "{} with N({m}): {:?}",
                    tensorfin_core::classifier::describe(&a),
                    v.trace.last()
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn long_cycles_use_host_containment_consistently() {
    // for |A| >= 6 the host and covering tests coincide on these patterns
    for a in all_cycle_algebras(6) {
        for name in ["B1", "B2", "B2op", "B3"] {
            let pat = pattern(name).unwrap();
            assert_eq!(contains_quotient(&a, &pat), cover_contains_pattern(&a, &pat).unwrap(), "{name}");
        }
        for m in [3, 4] {
            let v = classify(&a, &families::n_line(m)).unwrap();
            // Ncirc(6) itself is settled one step earlier
            assert!(matches!(v.deciding_rule(), Some(Rule::CycleWithN | Rule::CircPartner)));
            assert_eq!(v.kind == VerdictKind::Finite, covering_rule(&a, m));
        }
    }
}

#[test]
fn containment_is_reflexive_and_transitive_on_the_catalog() {
    let cat = Catalog::new();
    let pats = cat.patterns();
    let within: Vec<Vec<bool>> =
        pats.iter().map(|p| pats.iter().map(|q| contains_quotient(&q.presentation, p)).collect()).collect();
    for i in 0..pats.len() {
        assert!(within[i][i], "{} not in itself", pats[i].name);
        for j in 0..pats.len() {
            for k in 0..pats.len() {
                if within[i][j] && within[j][k] {
                    assert!(within[i][k], "{} <= {} <= {}", pats[i].name, pats[j].name, pats[k].name);
                }
            }
        }
    }
}

#[test]
fn radical_square_zero_patterns_see_only_the_quotient() {
    let mut rng = common::rng(12);
    let names = ["A2", "A3+-", "A3-+", "N(3)", "N(4)", "Ncirc(3)", "Ncirc(2)", "D4+++", "D4--+"];
    for _ in 0..300 {
        let host = common::random_host(&mut rng, 7);
        let quotient = host.radical_square_zero_quotient();
        for n in names {
            let pat = pattern(n).unwrap();
            assert_eq!(contains_quotient(&host, &pat), contains_quotient(&quotient, &pat), "{n}");
        }
    }
}
