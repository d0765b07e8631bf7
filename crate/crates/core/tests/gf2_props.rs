use invdiam_core::gf2::{is_independent, radical_dim, Gf2Matrix, Gf2Vector};
use proptest::prelude::*;

fn vector(dim: usize) -> impl Strategy<Value = Gf2Vector> {
    (0u32..1 << dim).prop_map(move |b| Gf2Vector::new(dim, b).unwrap())
}

fn rows(dim: usize, max: usize) -> impl Strategy<Value = Vec<Gf2Vector>> {
    proptest::collection::vec(vector(dim), 0..=max)
}

#[test]
fn dot_is_bilinear_and_symmetric_up_to_dim_4() {
    for dim in 0..=4 {
        let all: Vec<_> = Gf2Vector::all(dim).collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(a.dot(b).unwrap(), b.dot(a).unwrap());
                for &c in &all {
                    let lhs = a.xor(b).unwrap().dot(c).unwrap();
                    assert_eq!(lhs, a.dot(c).unwrap() ^ b.dot(c).unwrap());
                }
            }
        }
    }
}

/// Rank by brute force: log2 of the number of distinct subset sums.
fn span_size(rows: &[Gf2Vector]) -> usize {
    let mut span = std::collections::BTreeSet::new();
    for mask in 0u32..1 << rows.len() {
        let s = rows
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0u32, |acc, (_, v)| acc ^ v.bits());
        span.insert(s);
    }
    span.len()
}

proptest! {
    #[test]
    fn rank_matches_span_size(dim in 1usize..=6, rs in rows(6, 8)) {
        let rs: Vec<_> = rs.into_iter().map(|v| Gf2Vector::new(dim, v.bits() & ((1 << dim) - 1)).unwrap()).collect();
        let m = Gf2Matrix::new(dim, rs.clone()).unwrap();
        let r = m.rank();
        prop_assert!(r <= rs.len().min(dim));
        prop_assert_eq!(1usize << r, span_size(&rs));
        prop_assert_eq!(is_independent(&rs).unwrap(), r == rs.len());
    }

    #[test]
    fn rank_ignores_rows_in_the_span(rs in rows(6, 6), mask in any::<u32>()) {
        let m = Gf2Matrix::new(6, rs.clone()).unwrap();
        let extra = rs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u32, |a, (_, v)| a ^ v.bits());
        let mut more = rs.clone();
        more.push(Gf2Vector::new(6, extra).unwrap());
        prop_assert_eq!(Gf2Matrix::new(6, more).unwrap().rank(), m.rank());
    }

    #[test]
    fn solve_agrees_with_exhaustive_search(dim in 0usize..=8, raw in proptest::collection::vec(any::<u32>(), 0..10), rhs_bits in any::<u32>()) {
        let rs: Vec<_> = raw.iter().map(|b| Gf2Vector::new(dim, b & ((1u32 << dim) - 1)).unwrap()).collect();
        let rhs: Vec<bool> = (0..rs.len()).map(|i| rhs_bits >> i & 1 == 1).collect();
        let m = Gf2Matrix::new(dim, rs).unwrap();
        let brute: Vec<Gf2Vector> = Gf2Vector::all(dim).filter(|&x| m.apply(x).unwrap() == rhs).collect();
        match m.solve(&rhs).unwrap() {
            None => prop_assert!(brute.is_empty()),
            Some(sol) => {
                prop_assert_eq!(sol.len() as usize, brute.len());
                for x in sol.iter() {
                    prop_assert_eq!(m.apply(x).unwrap(), rhs.clone());
                }
                for &x in &brute {
                    prop_assert!(sol.contains(x));
                }
            }
        }
    }

    #[test]
    fn radical_matches_brute_force(rs in rows(5, 5)) {
        // vectors of the span orthogonal to the whole span
        let span: Vec<u32> = (0u32..1 << rs.len())
            .map(|mask| rs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0, |a, (_, v)| a ^ v.bits()))
            .collect();
        let mut radical: Vec<u32> = span
            .iter()
            .copied()
            .filter(|&x| span.iter().all(|&y| (x & y).count_ones() % 2 == 0))
            .collect();
        radical.sort_unstable();
        radical.dedup();
        prop_assert_eq!(1usize << radical_dim(&rs).unwrap(), radical.len());
    }

    #[test]
    fn text_round_trips(dim in 0usize..=32, bits in any::<u32>()) {
        let mask = if dim == 32 { u32::MAX } else { (1u32 << dim) - 1 };
        let v = Gf2Vector::new(dim, bits & mask).unwrap();
        prop_assert_eq!(v.to_text().parse::<Gf2Vector>().unwrap(), v);
    }
}
