use invdiam_core::assignment::enumerate_assignments;
use invdiam_core::family::*;
use invdiam_core::graph::{Graph, Label};

/// Counts k-cliques by trying every k-subset.
fn count_k_cliques(g: &Graph, k: usize) -> u64 {
    fn go(g: &Graph, k: usize, start: usize, chosen: &mut Vec<usize>) -> u64 {
        if chosen.len() == k {
            return 1;
        }
        let mut total = 0;
        for v in start..g.vertex_count() {
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                total += go(g, k, v + 1, chosen);
                chosen.pop();
            }
        }
        total
    }
    go(g, k, 0, &mut Vec::new())
}

fn zero(k: usize) -> Label {
    Label::zeros(k * (k - 1) / 2)
}

#[test]
fn vertex_counts_follow_the_clique_recurrence() {
    for (k, m_max) in [(1, 5), (2, 3), (3, 2)] {
        let mut prev = build_family(k, 0, &zero(k)).unwrap();
        for m in 1..=m_max {
            let next = build_family(k, m, &zero(k)).unwrap();
            let cliques = count_k_cliques(&prev.graph, k);
            assert_eq!(
                next.graph.vertex_count() as u64,
                prev.graph.vertex_count() as u64 + (1 << k) * cliques,
                "k={k} m={m}"
            );
            assert_eq!(next.graph.vertex_count() as u64, projected_vertices(k, m));
            assert_eq!(next.cliques.len() as u64, count_k_cliques(&next.graph, k));
            prev = next;
        }
    }
}

#[test]
fn registered_cliques_are_cliques_with_the_right_level() {
    let lg = build_family(2, 3, &Label::parse("1").unwrap()).unwrap();
    for c in &lg.cliques {
        for (i, &a) in c.vertices.iter().enumerate() {
            for &b in &c.vertices[i + 1..] {
                assert!(lg.graph.has_edge(a, b));
            }
        }
        assert_eq!(c.level, c.vertices.iter().map(|&v| lg.levels[v]).max().unwrap());
    }
    for v in 0..lg.graph.vertex_count() {
        assert_eq!(lg.levels[v] == 0, v < 2);
        if let Some(c) = lg.parent[v] {
            let parent = &lg.cliques[c];
            assert!(lg.graph.degree(v) >= 2);
            assert!(parent.vertices.iter().all(|&p| lg.graph.has_edge(p, v)));
            assert!(parent.vertices.iter().all(|&p| lg.levels[p] < lg.levels[v]));
        }
    }
}

#[test]
fn family_graphs_are_k_trees() {
    for (k, m) in [(1, 4), (2, 3), (3, 2)] {
        let lg = build_family(k, m, &zero(k)).unwrap();
        assert!(is_k_tree(&lg.graph, k), "k={k} m={m}");
        if k > 1 {
            assert!(!is_k_tree(&lg.graph, k - 1));
        }
    }
}

#[test]
fn lower_levels_reproduce_earlier_stages() {
    for k in 1..=3 {
        let m = if k == 1 { 4 } else { 2 };
        let initial = Label::from_word(k * (k - 1) / 2, 0b101);
        let full = build_family(k, m, &initial).unwrap();
        for i in 0..m {
            let keep: Vec<usize> = (0..full.graph.vertex_count())
                .filter(|&v| full.levels[v] <= i)
                .collect();
            let (g, map) = full.graph.induced(&keep);
            let small = build_family(k, i, &initial).unwrap();
            assert_eq!(g, small.graph);
            let label = Label::from_bools(&map.iter().map(|&e| full.label.get(e)).collect::<Vec<_>>());
            assert_eq!(label, small.label);
            let levels: Vec<usize> = keep.iter().map(|&v| full.levels[v]).collect();
            assert_eq!(levels, small.levels);
        }
    }
}

#[test]
fn probes_pass_on_enumerated_assignments() {
    for (k, m) in [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)] {
        let lg = build_family(k, m, &zero(k)).unwrap();
        let all = enumerate_assignments(&lg.graph, &lg.label, 2 * k - 1, 10_000).unwrap();
        if (k, m) == (1, 2) {
            assert!(all.is_empty());
        }
        for f in &all {
            assert!(probe_clique_independence(&lg, f).unwrap().passed(), "k={k} m={m}");
            assert!(probe_extension_dichotomy(&lg, f).unwrap().passed(), "k={k} m={m}");
        }
    }
}

#[test]
fn bad_clique_report_counts_subsets_once() {
    let lg = build_family(2, 1, &zero(2)).unwrap();
    let f = enumerate_assignments(&lg.graph, &lg.label, 3, 1).unwrap().remove(0);
    let report = probe_bad_cliques(&lg, &f).unwrap();
    // 6 vertices and 9 edges
    assert_eq!(report.checked, 15);
    assert!(report.largest() >= 1);
}

#[test]
fn k1_stays_two_dimensional() {
    let rows = family_min_dim_scan(1, 4, 2, |_| invdiam_core::assignment::Unlimited).unwrap();
    assert!(rows.iter().all(|r| matches!(r.verdict, ScanVerdict::Sat(_))));
}
