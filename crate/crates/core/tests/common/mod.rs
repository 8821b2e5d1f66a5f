#![allow(dead_code)]

use hypersym::{CubicalTensor, Hypergraph, Scalar};
use proptest::prelude::*;

pub fn sorted_tuple(n: usize, r: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, r).prop_map(|mut t| {
        t.sort_unstable();
        t
    })
}

/// `(r, n)` with `r` drawn from `rs` and `1 <= n <= max_n`.
pub fn shape(rs: &'static [usize], max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (prop::sample::select(rs), 1..=max_n)
}

/// Symmetric tensor from up to `max_classes` index classes with values in
/// `lo..=hi` (zero values drop out).
pub fn symmetric_tensor(
    rs: &'static [usize],
    max_n: usize,
    max_classes: usize,
    lo: i64,
    hi: i64,
) -> impl Strategy<Value = CubicalTensor> {
    shape(rs, max_n).prop_flat_map(move |(r, n)| {
        prop::collection::vec((sorted_tuple(n, r), lo..=hi), 0..=max_classes).prop_map(
            move |classes| {
                CubicalTensor::symmetric_from_classes(
                    r,
                    n,
                    classes.into_iter().map(|(t, v)| (t, Scalar::int(v))),
                )
                .unwrap()
            },
        )
    })
}

/// Arbitrary (not necessarily symmetric) tensor with small rational entries.
pub fn general_tensor(
    rs: &'static [usize],
    max_n: usize,
    max_entries: usize,
) -> impl Strategy<Value = CubicalTensor> {
    shape(rs, max_n).prop_flat_map(move |(r, n)| {
        let entry = (prop::collection::vec(0..n, r), -4i64..=4, 1i64..=3);
        prop::collection::vec(entry, 0..=max_entries).prop_map(move |es| {
            CubicalTensor::new(
                r,
                n,
                es.into_iter().map(|(t, p, q)| (t, Scalar::ratio(p, q))),
            )
            .unwrap()
        })
    })
}

/// Up to `max_edges` random `r`-sets on `r <= n <= max_n` vertices.
pub fn hypergraph(
    rs: &'static [usize],
    max_n: usize,
    max_edges: usize,
) -> impl Strategy<Value = Hypergraph> {
    prop::sample::select(rs)
        .prop_flat_map(move |r| (Just(r), r..=max_n.max(r)))
        .prop_flat_map(move |(r, n)| {
            let edge = prop::sample::subsequence((0..n).collect::<Vec<_>>(), r);
            prop::collection::vec(edge, 0..=max_edges)
                .prop_map(move |es| Hypergraph::new(r, n, es).unwrap())
        })
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

/// A connected 4-graph on `4..=max_n` vertices in which every edge meets a
/// random nonempty set `X` in an odd number of vertices.
pub fn odd_transversal_graph<R: rand::Rng>(rng: &mut R, max_n: usize) -> (Hypergraph, Vec<usize>) {
    use hypersym::hypergraph::combinations;
    loop {
        let n = rng.gen_range(4..=max_n);
        let x: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
        if x.is_empty() {
            continue;
        }
        let candidates: Vec<Vec<usize>> = combinations(&(0..n).collect::<Vec<_>>(), 4)
            .into_iter()
            .filter(|e| e.iter().filter(|v| x.contains(v)).count() % 2 == 1)
            .collect();
        let p = rng.gen_range(0.2..0.7);
        let edges: Vec<Vec<usize>> = candidates.into_iter().filter(|_| rng.gen_bool(p)).collect();
        let g = Hypergraph::new(4, n, edges).unwrap();
        if g.is_connected() {
            return (g, x);
        }
    }
}
