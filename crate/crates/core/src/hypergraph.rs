//! r-uniform hypergraphs on `0..n`, their adjacency tensors, exact weak
//! chromatic numbers, and the two odd-colorable counterexample families.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::parity::OddColoring;
use crate::scalar::Scalar;
use crate::tensor::CubicalTensor;

#[derive(Debug, Error, PartialEq)]
pub enum HypergraphError {
    #[error("edge size r must be at least 2, got {0}")]
    EdgeSizeTooSmall(usize),
    #[error("order n must be at least 1")]
    EmptyOrder,
    #[error("edge {edge:?} does not have {r} distinct vertices in 0..{n}")]
    BadEdge {
        edge: Vec<usize>,
        r: usize,
        n: usize,
    },
    #[error("class sizes {sizes:?} violate the minimum {minimum:?} for k = {k}")]
    ClassTooSmall {
        k: usize,
        sizes: Vec<usize>,
        minimum: Vec<usize>,
    },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("coloring search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: BTreeSet<Vec<usize>>,
}

impl Hypergraph {
    pub fn new<I>(r: usize, n: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        if r < 2 {
            return Err(HypergraphError::EdgeSizeTooSmall(r));
        }
        if n == 0 {
            return Err(HypergraphError::EmptyOrder);
        }
        let mut set = BTreeSet::new();
        for mut e in edges {
            e.sort_unstable();
            let distinct = e.windows(2).all(|w| w[0] < w[1]);
            if e.len() != r || !distinct || e.last().is_some_and(|&v| v >= n) {
                return Err(HypergraphError::BadEdge { edge: e, r, n });
            }
            set.insert(e);
        }
        Ok(Hypergraph { r, n, edges: set })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.edges.iter().map(Vec::as_slice)
    }

    pub fn contains_edge(&self, e: &[usize]) -> bool {
        let mut e = e.to_vec();
        e.sort_unstable();
        self.edges.contains(&e)
    }

    /// Same vertex set, only the edges accepted by `keep`.
    pub fn retain_edges(&self, mut keep: impl FnMut(&[usize]) -> bool) -> Hypergraph {
        Hypergraph {
            r: self.r,
            n: self.n,
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    /// Adds isolated vertices.
    pub fn with_order(&self, n: usize) -> Result<Hypergraph, HypergraphError> {
        Hypergraph::new(self.r, n, self.edges.iter().cloned())
    }

    /// 0/1 adjacency tensor: entry 1 at every ordering of every edge.
    pub fn adjacency_tensor(&self) -> CubicalTensor {
        CubicalTensor::symmetric_from_classes(
            self.r,
            self.n,
            self.edges.iter().map(|e| (e.clone(), Scalar::one())),
        )
        .expect("validated edges always form a valid tensor")
    }

    /// One unit entry per edge at its sorted tuple. It has the same support
    /// patterns as the adjacency tensor, so parity questions agree, but
    /// `r!` times fewer entries.
    pub fn support_tensor(&self) -> CubicalTensor {
        CubicalTensor::new(
            self.r,
            self.n,
            self.edges.iter().map(|e| (e.clone(), Scalar::one())),
        )
        .expect("validated edges always form a valid tensor")
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Connectivity of the 2-section.
    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut v: usize) -> usize {
            while p[v] != v {
                p[v] = p[p[v]];
                v = p[v];
            }
            v
        }
        for e in &self.edges {
            let root = find(&mut parent, e[0]);
            for &v in &e[1..] {
                let rv = find(&mut parent, v);
                parent[rv] = root;
            }
        }
        let root = find(&mut parent, 0);
        (1..self.n).all(|v| find(&mut parent, v) == root)
    }

    /// Smallest `k <= max_k` such that the vertices split into `k` classes
    /// with no monochromatic edge.
    ///
    /// Exhaustive backtracking; practical up to roughly 24 vertices.
    /// `budget` caps the number of search nodes.
    pub fn chromatic_number(
        &self,
        max_k: usize,
        budget: u64,
    ) -> Result<Chromatic, HypergraphError> {
        let mut spent = 0u64;
        for k in 1..=max_k.min(self.n) {
            if let Some(assignment) = self.weak_coloring(k, budget, &mut spent)? {
                return Ok(Chromatic::Exact(WeakColoring { assignment, k }));
            }
        }
        Ok(Chromatic::ExceedsMax(max_k))
    }

    /// A weak k-coloring if one exists; `spent` accumulates search nodes.
    fn weak_coloring(
        &self,
        k: usize,
        budget: u64,
        spent: &mut u64,
    ) -> Result<Option<Vec<usize>>, HypergraphError> {
        // Vertices in degree-descending order; each edge is checked at the
        // position of its last vertex in that order.
        let deg = self.degrees();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        let mut pos = vec![0; self.n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut closing: Vec<Vec<&[usize]>> = vec![Vec::new(); self.n];
        for e in &self.edges {
            let last = e.iter().map(|&v| pos[v]).max().expect("edges are nonempty");
            closing[last].push(e);
        }

        let mut color = vec![usize::MAX; self.n];
        // Iterative DFS: next[p] is the next color to try at depth p.
        let mut next = vec![0usize; self.n + 1];
        let mut used = vec![0usize; self.n + 1]; // classes in use before depth p
        let mut depth = 0;
        loop {
            if depth == self.n {
                return Ok(Some(color));
            }
            let v = order[depth];
            // a new class may only be opened in order
            let limit = (used[depth] + 1).min(k);
            let mut placed = false;
            while next[depth] < limit {
                let c = next[depth];
                next[depth] += 1;
                *spent += 1;
                if *spent > budget {
                    return Err(HypergraphError::BudgetExceeded(budget));
                }
                color[v] = c;
                let ok = closing[depth]
                    .iter()
                    .all(|e| e.iter().any(|&u| color[u] != c));
                if ok {
                    placed = true;
                    break;
                }
            }
            if placed {
                used[depth + 1] = used[depth].max(color[v] + 1);
                depth += 1;
                next[depth] = 0;
            } else {
                color[v] = usize::MAX;
                if depth == 0 {
                    return Ok(None);
                }
                depth -= 1;
            }
        }
    }
}

/// Outcome of [`Hypergraph::chromatic_number`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chromatic {
    Exact(WeakColoring),
    ExceedsMax(usize),
}

/// Partition into `k` classes in which every edge meets two classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakColoring {
    pub assignment: Vec<usize>,
    pub k: usize,
}

impl WeakColoring {
    pub fn verify(&self, g: &Hypergraph) -> bool {
        self.assignment.len() == g.n()
            && self.assignment.iter().all(|&c| c < self.k)
            && g.edges().all(|e| {
                e.iter()
                    .any(|&v| self.assignment[v] != self.assignment[e[0]])
            })
    }
}

/// All `k`-subsets of `items`, lexicographic.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + items.len() - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Edges `e ∪ f` for every `e` in `first` and `f` in `second`.
fn joined(first: &[Vec<usize>], second: &[Vec<usize>]) -> Vec<Vec<usize>> {
    first
        .iter()
        .flat_map(|e| {
            second
                .iter()
                .map(move |f| e.iter().chain(f).copied().collect())
        })
        .collect()
}

/// The 4k-graph on classes `A = 0..size_a`, `B = size_a..size_a+size_b`
/// whose edges are all 4k-sets meeting each class in exactly 2k vertices.
///
/// It is odd-colorable (witness: 0 on `A`, 1 on `B`, modulo 4k) yet has no
/// odd transversal. Requires `size_a, size_b >= 4k`.
pub fn two_class_family(
    k: usize,
    size_a: usize,
    size_b: usize,
) -> Result<(Hypergraph, OddColoring), HypergraphError> {
    if k == 0 {
        return Err(HypergraphError::ZeroK);
    }
    if size_a < 4 * k || size_b < 4 * k {
        return Err(HypergraphError::ClassTooSmall {
            k,
            sizes: vec![size_a, size_b],
            minimum: vec![4 * k, 4 * k],
        });
    }
    let r = 4 * k;
    let a: Vec<usize> = (0..size_a).collect();
    let b: Vec<usize> = (size_a..size_a + size_b).collect();
    let edges = joined(&combinations(&a, 2 * k), &combinations(&b, 2 * k));
    let g = Hypergraph::new(r, size_a + size_b, edges)?;
    let phi = (0..g.n()).map(|v| if v < size_a { 0 } else { 1 }).collect();
    Ok((g, OddColoring::new(r, phi)))
}

/// The 4k-graph on classes `A`, `B`, `C` (in that vertex order) with edge
/// families `|e∩A| = 2k, |e∩C| = 2k`; `|e∩B| = 2k, |e∩C| = 2k`;
/// `|e∩A| = k, |e∩B| = 3k`; `|e∩A| = 3k, |e∩B| = k`.
///
/// It is odd-colorable (witness: 1 on `A`, 4k−1 on `B`, 0 on `C`) and has
/// weak chromatic number 3. Requires `|A|, |B| >= 6k` and `|C| >= 4k`.
pub fn three_class_family(
    k: usize,
    size_a: usize,
    size_b: usize,
    size_c: usize,
) -> Result<(Hypergraph, OddColoring), HypergraphError> {
    if k == 0 {
        return Err(HypergraphError::ZeroK);
    }
    if size_a < 6 * k || size_b < 6 * k || size_c < 4 * k {
        return Err(HypergraphError::ClassTooSmall {
            k,
            sizes: vec![size_a, size_b, size_c],
            minimum: vec![6 * k, 6 * k, 4 * k],
        });
    }
    let r = 4 * k;
    let a: Vec<usize> = (0..size_a).collect();
    let b: Vec<usize> = (size_a..size_a + size_b).collect();
    let c: Vec<usize> = (size_a + size_b..size_a + size_b + size_c).collect();
    let mut edges = joined(&combinations(&a, 2 * k), &combinations(&c, 2 * k));
    edges.extend(joined(&combinations(&b, 2 * k), &combinations(&c, 2 * k)));
    edges.extend(joined(&combinations(&a, k), &combinations(&b, 3 * k)));
    edges.extend(joined(&combinations(&a, 3 * k), &combinations(&b, k)));
    let g = Hypergraph::new(r, size_a + size_b + size_c, edges)?;
    let phi = (0..g.n())
        .map(|v| {
            if v < size_a {
                1
            } else if v < size_a + size_b {
                r as u64 - 1
            } else {
                0
            }
        })
        .collect();
    Ok((g, OddColoring::new(r, phi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn construction_canonicalizes() {
        let g = Hypergraph::new(3, 4, vec![vec![2, 0, 1], vec![0, 1, 2], vec![3, 1, 2]]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.contains_edge(&[1, 2, 0]));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 0, 1]]),
            Err(HypergraphError::BadEdge { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 2, vec![vec![0, 1, 2]]),
            Err(HypergraphError::BadEdge { .. })
        ));
        assert_eq!(
            Hypergraph::new(1, 2, Vec::<Vec<usize>>::new()),
            Err(HypergraphError::EdgeSizeTooSmall(1))
        );
    }

    #[test]
    fn adjacency_tensor_examples() {
        let k2 = Hypergraph::new(2, 2, vec![vec![0, 1]])
            .unwrap()
            .adjacency_tensor();
        assert_eq!(k2.get(&[0, 1]), Some(&Scalar::one()));
        assert_eq!(k2.get(&[1, 0]), Some(&Scalar::one()));
        assert_eq!(k2.get(&[0, 0]), None);
        let e3 = Hypergraph::new(3, 3, vec![vec![0, 1, 2]])
            .unwrap()
            .adjacency_tensor();
        assert_eq!(e3.nnz(), 6);
        assert!(e3.entries().all(|(_, v)| *v == Scalar::one()));
        let empty = Hypergraph::new(4, 5, Vec::<Vec<usize>>::new())
            .unwrap()
            .adjacency_tensor();
        assert!(empty.is_zero());
    }

    #[test]
    fn connectivity_examples() {
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1, 2]])
            .unwrap()
            .is_connected());
        assert!(!Hypergraph::new(3, 4, vec![vec![0, 1, 2]])
            .unwrap()
            .is_connected());
        let (g, _) = two_class_family(1, 4, 4).unwrap();
        assert!(g.is_connected());
        assert!(Hypergraph::new(2, 1, Vec::<Vec<usize>>::new())
            .unwrap()
            .is_connected());
    }

    #[test]
    fn two_class_family_counts_and_witness() {
        let (g, phi) = two_class_family(1, 4, 4).unwrap();
        assert_eq!(g.r(), 4);
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count() as u64, binom(4, 2) * binom(4, 2));
        for e in g.edges() {
            let sum: u64 = e.iter().map(|&v| phi.phi[v]).sum();
            assert_eq!(sum % 4, 2);
        }
        let (g2, _) = two_class_family(2, 8, 9).unwrap();
        assert_eq!(g2.edge_count() as u64, binom(8, 4) * binom(9, 4));
        assert!(matches!(
            two_class_family(1, 3, 5),
            Err(HypergraphError::ClassTooSmall { .. })
        ));
        assert_eq!(
            two_class_family(0, 4, 4).map(|_| ()),
            Err(HypergraphError::ZeroK)
        );
    }

    #[test]
    fn three_class_family_counts_and_witness() {
        let (g, phi) = three_class_family(1, 6, 6, 4).unwrap();
        let expect = binom(6, 2) * binom(4, 2)
            + binom(6, 2) * binom(4, 2)
            + binom(6, 1) * binom(6, 3)
            + binom(6, 3) * binom(6, 1);
        assert_eq!(expect, 420);
        assert_eq!(g.edge_count(), 420);
        for e in g.edges() {
            let sum: u64 = e.iter().map(|&v| phi.phi[v]).sum();
            assert_eq!(sum % 4, 2);
        }
        assert!(matches!(
            three_class_family(1, 5, 6, 4),
            Err(HypergraphError::ClassTooSmall { .. })
        ));
    }

    #[test]
    fn chromatic_examples() {
        let tri = Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        match tri.chromatic_number(5, 1_000_000).unwrap() {
            Chromatic::Exact(c) => {
                assert_eq!(c.k, 3);
                assert!(c.verify(&tri));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            tri.chromatic_number(2, 1_000_000).unwrap(),
            Chromatic::ExceedsMax(2)
        );

        let (g, _) = two_class_family(1, 4, 4).unwrap();
        match g.chromatic_number(4, 1_000_000).unwrap() {
            Chromatic::Exact(c) => assert_eq!(c.k, 2),
            other => panic!("unexpected {other:?}"),
        }

        let empty = Hypergraph::new(3, 4, Vec::<Vec<usize>>::new()).unwrap();
        assert!(matches!(
            empty.chromatic_number(3, 100).unwrap(),
            Chromatic::Exact(WeakColoring { k: 1, .. })
        ));
    }

    #[test]
    fn chromatic_budget_is_enforced() {
        let (g, _) = three_class_family(1, 6, 6, 4).unwrap();
        assert_eq!(
            g.chromatic_number(3, 10),
            Err(HypergraphError::BudgetExceeded(10))
        );
    }

    #[test]
    fn combinations_count() {
        let items: Vec<usize> = (0..7).collect();
        assert_eq!(combinations(&items, 3).len(), 35);
        assert_eq!(combinations(&items, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(&items, 8).is_empty());
    }
}
