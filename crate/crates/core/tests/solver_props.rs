use invdiam_core::assignment::{diameter_via_assignment, enumerate_assignments, min_dim, solve, verify, Assignment};
use invdiam_core::generate::{bounded_degree_connected, random_label};
use invdiam_core::gf2::Gf2Vector;
use invdiam_core::graph::{Graph, Label, Orientation};
use invdiam_core::inversion::{bfs_diameter, bfs_distance, diff_label, distance_table, invert};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=5, any::<u64>()).prop_map(|(n, pick)| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(n, edges).unwrap()
    })
}

fn with_label() -> impl Strategy<Value = (Graph, Label)> {
    small_graph().prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), (0u64..1 << m).prop_map(move |w| Label::from_word(m, w)))
    })
}

/// Tries every map from vertices into `F₂^t`.
fn brute_force_exists(g: &Graph, label: &Label, t: usize) -> bool {
    let n = g.vertex_count();
    let total = 1u64 << (t * n);
    (0..total).any(|code| {
        let vs: Vec<Gf2Vector> = (0..n)
            .map(|v| Gf2Vector::new(t, ((code >> (t * v)) & ((1 << t) - 1)) as u32).unwrap())
            .collect();
        verify(g, label, &Assignment::new(t, vs).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solver_is_complete_and_sound((g, label) in with_label(), t in 0usize..=2) {
        let found = solve(&g, &label, t).unwrap();
        prop_assert_eq!(found.is_some(), brute_force_exists(&g, &label, t));
        if let Some(f) = found {
            prop_assert!(verify(&g, &label, &f));
        }
    }

    #[test]
    fn enumeration_counts_match_brute_force((g, label) in with_label()) {
        let n = g.vertex_count();
        let t = 2;
        let expected = (0u64..1 << (t * n)).filter(|code| {
            let vs: Vec<Gf2Vector> = (0..n).map(|v| Gf2Vector::new(t, ((code >> (t * v)) & 3) as u32).unwrap()).collect();
            verify(&g, &label, &Assignment::new(t, vs).unwrap())
        }).count();
        let all = enumerate_assignments(&g, &label, t, usize::MAX).unwrap();
        prop_assert_eq!(all.len(), expected);
        let mut dedup = all.clone();
        dedup.sort_by_key(|a| a.vectors().iter().map(|v| v.bits()).collect::<Vec<_>>());
        dedup.dedup();
        prop_assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn padding_keeps_validity((g, label) in with_label()) {
        if let Some(f) = solve(&g, &label, 3).unwrap() {
            prop_assert!(verify(&g, &label, &f.padded(5).unwrap()));
            prop_assert!(solve(&g, &label, 4).unwrap().is_some());
        }
    }

    #[test]
    fn min_dim_equals_bfs_distance((g, label) in with_label()) {
        let o = Orientation::zeros(g.edge_count());
        let target = Orientation::from_bits(label.bits().clone());
        let d = bfs_distance(&g, &o, &target).unwrap();
        prop_assert_eq!(min_dim(&g, &label, 8).unwrap().dim(), Some(d));
    }

    #[test]
    fn min_dim_is_invariant_under_relabelling((g, label) in with_label(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let (h, l2) = g.relabel_label(&perm, &label).unwrap();
        prop_assert_eq!(min_dim(&g, &label, 8).unwrap().dim(), min_dim(&h, &l2, 8).unwrap().dim());
    }

    #[test]
    fn inversion_is_an_involution_and_commutes((g, label) in with_label(), x in any::<u8>(), y in any::<u8>()) {
        let n = g.vertex_count();
        let xs: Vec<usize> = (0..n).filter(|v| x >> v & 1 == 1).collect();
        let ys: Vec<usize> = (0..n).filter(|v| y >> v & 1 == 1).collect();
        let o = Orientation::from_bits(label.bits().clone());
        prop_assert_eq!(invert(&g, &invert(&g, &o, &xs), &xs), o.clone());
        prop_assert_eq!(invert(&g, &invert(&g, &o, &xs), &ys), invert(&g, &invert(&g, &o, &ys), &xs));
    }

    #[test]
    fn distance_is_a_translation_invariant_metric((g, a) in with_label(), wb in any::<u64>(), wc in any::<u64>()) {
        let m = g.edge_count();
        let mask = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
        let o = |w: u64| Orientation::from_word(m, w & mask);
        let (oa, ob, oc) = (Orientation::from_bits(a.bits().clone()), o(wb), o(wc));
        let d = |p: &Orientation, q: &Orientation| bfs_distance(&g, p, q).unwrap();
        prop_assert_eq!(d(&oa, &oa), 0);
        prop_assert_eq!(d(&oa, &ob), d(&ob, &oa));
        prop_assert!(d(&oa, &oc) <= d(&oa, &ob) + d(&ob, &oc));
        // shifting both ends by the same flip word
        let shift = |p: &Orientation| Orientation::from_bits(p.bits().xor(oc.bits()).unwrap());
        prop_assert_eq!(d(&shift(&oa), &shift(&ob)), d(&oa, &ob));
        prop_assert_eq!(diff_label(&shift(&oa), &shift(&ob)).unwrap(), diff_label(&oa, &ob).unwrap());
    }
}

#[test]
fn diameter_engines_agree_on_small_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=7 {
        for extra in 0..3 {
            let g = bounded_degree_connected(&mut rng, n, 3, extra);
            if g.edge_count() > 12 {
                continue;
            }
            let via = diameter_via_assignment(&g, 8).unwrap();
            assert_eq!(via.diameter, bfs_diameter(&g).unwrap(), "{g:?}");
            assert!(verify(&g, &via.hardest_label, &via.witness));
            let table = distance_table(&g).unwrap();
            assert_eq!(table.label_distance(&via.hardest_label), via.diameter);
        }
    }
}

#[test]
fn degree_two_graphs_need_at_most_two_dimensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 3..=9 {
        let g = invdiam_core::generate::path_or_cycle(&mut rng, n);
        for _ in 0..50 {
            let l = random_label(&mut rng, g.edge_count());
            assert!(min_dim(&g, &l, 2).unwrap().dim().is_some());
        }
    }
}
