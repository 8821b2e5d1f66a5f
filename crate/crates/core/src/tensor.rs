//! Cubical r-tensors of order n in sparse coordinate form.
//!
//! Indices are 0-based in memory (`0..n`); the JSON layer shifts them to the
//! 1-based convention used in files. Entries are kept sorted
//! lexicographically by index tuple, duplicates are summed, and exact zeros
//! are dropped, so two tensors are equal iff their entry lists are equal.

use std::collections::{BTreeMap, BTreeSet};

use num::complex::Complex64;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::scalar::Scalar;

#[derive(Debug, Error, PartialEq)]
pub enum TensorError {
    #[error("arity r must be at least 2, got {0}")]
    ArityTooSmall(usize),
    #[error("order n must be at least 1")]
    EmptyOrder,
    #[error("index tuple {tuple:?} has length {len}, expected {r}")]
    TupleLength {
        tuple: Vec<usize>,
        len: usize,
        r: usize,
    },
    #[error("index {index} in tuple {tuple:?} is out of range for order {n}")]
    IndexOutOfRange {
        tuple: Vec<usize>,
        index: usize,
        n: usize,
    },
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("eigenvector is zero")]
    ZeroVector,
    #[error("tensor has non-real entries")]
    NotReal,
    #[error("tensor is not symmetric")]
    NotSymmetric,
    #[error("scaling vector has a zero component at position {0}")]
    ZeroScaling(usize),
    #[error("operation requires r = 2, got r = {0}")]
    NotAMatrix(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicalTensor {
    r: usize,
    n: usize,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl CubicalTensor {
    /// Builds a tensor from `(index tuple, value)` pairs, summing duplicates
    /// and dropping zeros.
    pub fn new<I>(r: usize, n: usize, entries: I) -> Result<Self, TensorError>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        if r < 2 {
            return Err(TensorError::ArityTooSmall(r));
        }
        if n == 0 {
            return Err(TensorError::EmptyOrder);
        }
        let mut map: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (tuple, v) in entries {
            if tuple.len() != r {
                return Err(TensorError::TupleLength {
                    len: tuple.len(),
                    tuple,
                    r,
                });
            }
            if let Some(&index) = tuple.iter().find(|&&i| i >= n) {
                return Err(TensorError::IndexOutOfRange { tuple, index, n });
            }
            match map.get_mut(&tuple) {
                Some(acc) => *acc = &*acc + &v,
                None => {
                    map.insert(tuple, v);
                }
            }
        }
        map.retain(|_, v| !v.is_zero());
        Ok(CubicalTensor { r, n, entries: map })
    }

    pub fn zeros(r: usize, n: usize) -> Result<Self, TensorError> {
        Self::new(r, n, std::iter::empty())
    }

    /// A 2-matrix from integer rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, TensorError> {
        let n = rows.len();
        let mut entries = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(TensorError::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                entries.push((vec![i, j], Scalar::int(v)));
            }
        }
        Self::new(2, n, entries)
    }

    /// Symmetric tensor with `value` at every permutation of each given
    /// index multiset.
    pub fn symmetric_from_classes<I>(r: usize, n: usize, classes: I) -> Result<Self, TensorError>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut entries = Vec::new();
        for (class, v) in classes {
            if class.len() != r {
                return Err(TensorError::TupleLength {
                    len: class.len(),
                    tuple: class,
                    r,
                });
            }
            for p in distinct_permutations(&class) {
                entries.push((p, v.clone()));
            }
        }
        Self::new(r, n, entries)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Scalar)> + '_ {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn get(&self, tuple: &[usize]) -> Option<&Scalar> {
        self.entries.get(tuple)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.entries.values().all(Scalar::is_exact)
    }

    pub fn is_real(&self) -> bool {
        self.entries.values().all(Scalar::is_real)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(Scalar::is_nonnegative)
    }

    pub fn negated(&self) -> CubicalTensor {
        CubicalTensor {
            r: self.r,
            n: self.n,
            entries: self.entries.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// True iff every entry is invariant under permuting its index tuple.
    pub fn is_symmetric(&self) -> bool {
        // Group entries by their sorted index multiset; a class is complete
        // when all of its distinct permutations are stored with one value.
        let mut classes: BTreeMap<Vec<usize>, (usize, &Scalar, bool)> = BTreeMap::new();
        for (tuple, v) in &self.entries {
            let mut key = tuple.clone();
            key.sort_unstable();
            let slot = classes.entry(key).or_insert((0, v, true));
            slot.0 += 1;
            if slot.1 != v {
                slot.2 = false;
            }
        }
        classes
            .iter()
            .all(|(key, &(count, _, same))| same && count as u128 == permutation_count(key))
    }

    fn check_len(&self, len: usize) -> Result<(), TensorError> {
        if len != self.n {
            return Err(TensorError::DimensionMismatch {
                expected: self.n,
                got: len,
            });
        }
        Ok(())
    }

    /// `F_k(x) = Σ a_{k,i2..ir} x_{i2}⋯x_{ir}`, summed over stored entries only.
    pub fn apply(&self, x: &[Complex64]) -> Result<Vec<Complex64>, TensorError> {
        self.check_len(x.len())?;
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        for (tuple, v) in &self.entries {
            let prod = tuple[1..].iter().fold(v.to_c64(), |acc, &i| acc * x[i]);
            out[tuple[0]] += prod;
        }
        Ok(out)
    }

    /// Real counterpart of [`apply`](Self::apply); requires real entries.
    pub fn apply_real(&self, x: &[f64]) -> Result<Vec<f64>, TensorError> {
        self.check_len(x.len())?;
        if !self.is_real() {
            return Err(TensorError::NotReal);
        }
        let mut out = vec![0.0; self.n];
        for (tuple, v) in &self.entries {
            let prod = tuple[1..].iter().fold(v.to_c64().re, |acc, &i| acc * x[i]);
            out[tuple[0]] += prod;
        }
        Ok(out)
    }

    /// Scale-aware residual of the eigen-equation `λ x_k^{r-1} = F_k(x)`:
    /// `max_k |λ x_k^{r-1} - F_k(x)| / max(1, ‖x‖∞^{r-1}|λ|, ‖x‖∞^{r-1})`.
    pub fn eigen_residual(&self, lambda: Complex64, x: &[Complex64]) -> Result<f64, TensorError> {
        let f = self.apply(x)?;
        let inf = x.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if inf == 0.0 {
            return Err(TensorError::ZeroVector);
        }
        let e = (self.r - 1) as i32;
        let scale = inf.powi(e);
        let denom = 1f64.max(scale * lambda.norm()).max(scale);
        let worst = x
            .iter()
            .zip(&f)
            .map(|(xk, fk)| (lambda * xk.powi(e) - fk).norm())
            .fold(0.0, f64::max);
        Ok(worst / denom)
    }

    /// `P_A(x) = Σ a_{i1..ir} x_{i1}⋯x_{ir}` for real `A`.
    pub fn polynomial_form(&self, x: &[f64]) -> Result<f64, TensorError> {
        self.check_len(x.len())?;
        if !self.is_real() {
            return Err(TensorError::NotReal);
        }
        Ok(self
            .entries
            .iter()
            .map(|(tuple, v)| tuple.iter().fold(v.to_c64().re, |acc, &i| acc * x[i]))
            .sum())
    }

    /// Arc `k → j` whenever some nonzero `a_{k,i2..ir}` has `j` among `i2..ir`.
    pub fn digraph(&self) -> Digraph {
        let mut g = Digraph::new(self.n);
        for tuple in self.entries.keys() {
            for &j in &tuple[1..] {
                g.add_arc(tuple[0], j);
            }
        }
        g
    }

    pub fn is_weakly_irreducible(&self) -> bool {
        self.digraph().is_strongly_connected()
    }

    /// Principal submatrix `A[X]`, re-indexed so that `vertices[t]` becomes `t`.
    pub fn principal_submatrix(&self, vertices: &[usize]) -> Result<CubicalTensor, TensorError> {
        let mut pos = vec![usize::MAX; self.n];
        for (t, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(TensorError::IndexOutOfRange {
                    tuple: vertices.to_vec(),
                    index: v,
                    n: self.n,
                });
            }
            pos[v] = t;
        }
        let entries = self.entries.iter().filter_map(|(tuple, v)| {
            let mapped: Option<Vec<usize>> = tuple
                .iter()
                .map(|&i| (pos[i] != usize::MAX).then_some(pos[i]))
                .collect();
            mapped.map(|m| (m, v.clone()))
        });
        CubicalTensor::new(self.r, vertices.len(), entries)
    }

    /// Splits a symmetric tensor into its weakly irreducible components.
    pub fn components(&self) -> Result<ComponentDecomposition, TensorError> {
        if !self.is_symmetric() {
            return Err(TensorError::NotSymmetric);
        }
        let g = self.digraph();
        let mut parts = Vec::new();
        let mut isolated = Vec::new();
        for comp in g.weak_components() {
            if comp.len() == 1 && !g.has_arc(comp[0], comp[0]) {
                isolated.push(comp[0]);
                continue;
            }
            let sub = self.principal_submatrix(&comp)?;
            parts.push(Component {
                vertices: comp,
                tensor: sub,
            });
        }
        Ok(ComponentDecomposition {
            r: self.r,
            n: self.n,
            parts,
            isolated,
        })
    }

    /// `b_{j1..jr} = z_{j1}^{-r} a_{j1..jr} z_{j1}⋯z_{jr}`.
    ///
    /// If `(λ, x)` is an eigenpair of `A`, then `(λ, x ∘ z^{-1})` is one of
    /// the result (see [`transport_eigenvector`]).
    pub fn diagonal_similarity(&self, z: &[Scalar]) -> Result<CubicalTensor, TensorError> {
        self.check_len(z.len())?;
        let inv: Vec<Scalar> = z
            .iter()
            .enumerate()
            .map(|(k, zk)| zk.inv().ok_or(TensorError::ZeroScaling(k)))
            .collect::<Result<_, _>>()?;
        let lead_pow: Vec<Scalar> = inv.iter().map(|s| s.pow(self.r as u32 - 1)).collect();
        let entries = self.entries.iter().map(|(tuple, v)| {
            let mut b = v * &lead_pow[tuple[0]];
            for &j in &tuple[1..] {
                b = &b * &z[j];
            }
            (tuple.clone(), b)
        });
        CubicalTensor::new(self.r, self.n, entries)
    }

    /// For `r = 2`: a partition `(U, W)` of the vertices with `A[U,U] = 0`
    /// and `A[W,W] = 0`, if one exists.
    pub fn bipartition(&self) -> Result<Option<Bipartition>, TensorError> {
        if self.r != 2 {
            return Err(TensorError::NotAMatrix(self.r));
        }
        let mut adj = vec![Vec::new(); self.n];
        for tuple in self.entries.keys() {
            let (i, j) = (tuple[0], tuple[1]);
            if i == j {
                return Ok(None);
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                let su = side[u].expect("queued vertices are colored");
                for &w in &adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push(w);
                        }
                        Some(sw) if sw == su => return Ok(None),
                        Some(_) => {}
                    }
                }
            }
        }
        let (u, w): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| side[v] == Some(false));
        Ok(Some((u, w)))
    }
}

/// Vertex classes `(U, W)` returned by [`CubicalTensor::bipartition`].
pub type Bipartition = (Vec<usize>, Vec<usize>);

/// `(λ, x)` for `A` becomes `(λ, x ∘ z^{-1})` for the diagonally similar tensor.
pub fn transport_eigenvector(x: &[Complex64], z: &[Scalar]) -> Vec<Complex64> {
    x.iter().zip(z).map(|(xk, zk)| xk / zk.to_c64()).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    /// Original vertex labels, sorted.
    pub vertices: Vec<usize>,
    /// `A[vertices]`, re-indexed to `0..vertices.len()`.
    pub tensor: CubicalTensor,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComponentDecomposition {
    pub r: usize,
    pub n: usize,
    pub parts: Vec<Component>,
    /// Vertices touched by no entry at all.
    pub isolated: Vec<usize>,
}

impl ComponentDecomposition {
    /// Rebuilds the block tensor from the parts.
    pub fn assemble(&self) -> Result<CubicalTensor, TensorError> {
        let entries = self.parts.iter().flat_map(|p| {
            p.tensor
                .entries()
                .map(|(t, v)| {
                    (
                        t.iter().map(|&i| p.vertices[i]).collect::<Vec<_>>(),
                        v.clone(),
                    )
                })
                .collect::<Vec<_>>()
        });
        CubicalTensor::new(self.r, self.n, entries)
    }

    /// Orders of the parts followed by one `1` per isolated vertex.
    pub fn orders(&self) -> Vec<usize> {
        self.parts
            .iter()
            .map(|p| p.vertices.len())
            .chain(self.isolated.iter().map(|_| 1))
            .collect()
    }

    pub fn vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut all: Vec<Vec<usize>> = self.parts.iter().map(|p| p.vertices.clone()).collect();
        all.extend(self.isolated.iter().map(|&v| vec![v]));
        all.sort();
        all
    }
}

/// Number of distinct orderings of a sorted multiset.
pub(crate) fn permutation_count(sorted: &[usize]) -> u128 {
    let mut total: u128 = 1;
    let mut run = 0u128;
    for (k, w) in sorted.iter().enumerate() {
        if k > 0 && sorted[k - 1] == *w {
            run += 1;
        } else {
            run = 1;
        }
        total = total * (k as u128 + 1) / run;
    }
    total
}

/// All distinct permutations of a multiset, in lexicographic order.
pub fn distinct_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len())
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Index patterns with their multiplicity vectors: one row per distinct
/// multiset of indices among the stored entries.
pub(crate) fn support_patterns(a: &CubicalTensor) -> BTreeSet<Vec<usize>> {
    a.entries
        .keys()
        .map(|t| {
            let mut counts = vec![0usize; a.n];
            for &i in t {
                counts[i] += 1;
            }
            counts
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::complex::Complex64;

    fn order6() -> CubicalTensor {
        let tuples = [
            [0, 1, 2],
            [1, 2, 3],
            [2, 3, 4],
            [3, 4, 5],
            [4, 5, 0],
            [5, 0, 1],
        ];
        CubicalTensor::new(3, 6, tuples.iter().map(|t| (t.to_vec(), Scalar::int(1)))).unwrap()
    }

    fn h2() -> CubicalTensor {
        CubicalTensor::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap()
    }

    fn a1() -> CubicalTensor {
        CubicalTensor::from_rows(&[
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 1],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
        ])
        .unwrap()
    }

    fn a2() -> CubicalTensor {
        CubicalTensor::from_rows(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
        ])
        .unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn construction_merges_and_prunes() {
        let t = CubicalTensor::new(
            2,
            2,
            vec![
                (vec![0, 1], Scalar::int(2)),
                (vec![0, 1], Scalar::int(-2)),
                (vec![1, 0], Scalar::int(1)),
                (vec![1, 0], Scalar::int(1)),
                (vec![1, 1], Scalar::int(0)),
            ],
        )
        .unwrap();
        assert_eq!(t.nnz(), 1);
        assert_eq!(t.get(&[1, 0]), Some(&Scalar::int(2)));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            CubicalTensor::zeros(1, 3),
            Err(TensorError::ArityTooSmall(1))
        );
        assert_eq!(CubicalTensor::zeros(2, 0), Err(TensorError::EmptyOrder));
        assert!(matches!(
            CubicalTensor::new(3, 2, vec![(vec![0, 1], Scalar::one())]),
            Err(TensorError::TupleLength { .. })
        ));
        assert!(matches!(
            CubicalTensor::new(2, 2, vec![(vec![0, 2], Scalar::one())]),
            Err(TensorError::IndexOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn symmetry_examples() {
        assert!(h2().is_symmetric());
        assert!(!a1().is_symmetric());
        assert!(CubicalTensor::zeros(4, 3).unwrap().is_symmetric());
        assert!(!order6().is_symmetric());
        // complete class but unequal values
        let t = CubicalTensor::new(
            2,
            2,
            vec![(vec![0, 1], Scalar::int(1)), (vec![1, 0], Scalar::int(2))],
        )
        .unwrap();
        assert!(!t.is_symmetric());
    }

    #[test]
    fn apply_on_order6() {
        let a = order6();
        let ones = vec![c(1.0, 0.0); 6];
        let f = a.apply(&ones).unwrap();
        assert!(f.iter().all(|v| (*v - c(1.0, 0.0)).norm() < 1e-15));

        let y: Vec<Complex64> = (1..=6)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 6.0))
            .collect();
        let f = a.apply(&y).unwrap();
        for k in 0..6 {
            assert!((f[k] + y[k] * y[k]).norm() < 1e-14);
        }
        assert!(a.apply(&ones[..5]).is_err());
    }

    #[test]
    fn apply_zero_tensor() {
        let z = CubicalTensor::zeros(3, 4).unwrap();
        let f = z.apply(&[c(1.0, 2.0); 4]).unwrap();
        assert!(f.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn residual_examples() {
        let a = order6();
        let ones = vec![c(1.0, 0.0); 6];
        assert_eq!(a.eigen_residual(c(1.0, 0.0), &ones).unwrap(), 0.0);
        let y: Vec<Complex64> = (1..=6)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / 6.0))
            .collect();
        assert!(a.eigen_residual(c(-1.0, 0.0), &y).unwrap() < 1e-14);

        let z = CubicalTensor::zeros(3, 3).unwrap();
        let res = z.eigen_residual(c(5.0, 0.0), &[c(1.0, 0.0); 3]).unwrap();
        assert_eq!(res, 1.0);
        assert_eq!(
            z.eigen_residual(c(1.0, 0.0), &[c(0.0, 0.0); 3]),
            Err(TensorError::ZeroVector)
        );
    }

    #[test]
    fn polynomial_form_examples() {
        let edge =
            CubicalTensor::symmetric_from_classes(3, 3, vec![(vec![0, 1, 2], Scalar::one())])
                .unwrap();
        assert_eq!(edge.nnz(), 6);
        assert_eq!(edge.polynomial_form(&[1.0, 1.0, 1.0]).unwrap(), 6.0);
        assert_eq!(h2().polynomial_form(&[1.0, 0.0]).unwrap(), 1.0);
        let k2 = CubicalTensor::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(k2.polynomial_form(&[1.0, 1.0]).unwrap(), 2.0);
        let cplx =
            CubicalTensor::new(2, 1, vec![(vec![0, 0], Scalar::root_of_unity(1, 4))]).unwrap();
        assert_eq!(cplx.polynomial_form(&[1.0]), Err(TensorError::NotReal));
    }

    #[test]
    fn digraph_of_order6() {
        let arcs: Vec<(usize, usize)> = order6().digraph().arcs().collect();
        // brute force over the six listed entries
        let mut expect = BTreeSet::new();
        for k in 0..6 {
            expect.insert((k, (k + 1) % 6));
            expect.insert((k, (k + 2) % 6));
        }
        assert_eq!(arcs, expect.into_iter().collect::<Vec<_>>());
        assert!(order6().is_weakly_irreducible());
    }

    #[test]
    fn digraph_of_single_edge() {
        let edge =
            CubicalTensor::symmetric_from_classes(3, 5, vec![(vec![0, 1, 2], Scalar::one())])
                .unwrap();
        let g = edge.digraph();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(g.has_arc(u, v), u != v);
            }
        }
        assert_eq!(g.arc_count(), 6);
        assert!(!edge.is_weakly_irreducible());
        assert_eq!(CubicalTensor::zeros(2, 3).unwrap().digraph().arc_count(), 0);
        let one = CubicalTensor::new(4, 1, vec![(vec![0; 4], Scalar::int(7))]).unwrap();
        assert!(one.is_weakly_irreducible());
    }

    #[test]
    fn components_examples() {
        let d = a2().components().unwrap();
        assert_eq!(d.vertex_sets(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(d.assemble().unwrap(), a2());

        let edge =
            CubicalTensor::symmetric_from_classes(3, 3, vec![(vec![0, 1, 2], Scalar::one())])
                .unwrap();
        let d = edge.components().unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].vertices, vec![0, 1, 2]);

        let d = CubicalTensor::zeros(3, 3).unwrap().components().unwrap();
        assert!(d.parts.is_empty());
        assert_eq!(d.isolated, vec![0, 1, 2]);

        assert_eq!(a1().components(), Err(TensorError::NotSymmetric));
    }

    #[test]
    fn loop_vertex_is_a_part() {
        let t = CubicalTensor::new(3, 2, vec![(vec![0, 0, 0], Scalar::int(2))]).unwrap();
        let d = t.components().unwrap();
        assert_eq!(d.parts.len(), 1);
        assert_eq!(d.parts[0].vertices, vec![0]);
        assert_eq!(d.isolated, vec![1]);
    }

    #[test]
    fn diagonal_similarity_identity_and_errors() {
        let a = order6();
        assert_eq!(a.diagonal_similarity(&vec![Scalar::one(); 6]).unwrap(), a);
        let mut z = vec![Scalar::one(); 6];
        z[3] = Scalar::zero();
        assert_eq!(a.diagonal_similarity(&z), Err(TensorError::ZeroScaling(3)));
    }

    #[test]
    fn bipartition_examples() {
        let (u, w) = a2().bipartition().unwrap().unwrap();
        assert_eq!((u.clone(), w.clone()), (vec![0, 2], vec![1, 3]));
        let m = a2();
        for side in [&u, &w] {
            for &i in side {
                for &j in side {
                    assert!(m.get(&[i, j]).is_none());
                }
            }
        }
        assert_eq!(a1().bipartition().unwrap(), None);
        assert_eq!(h2().bipartition().unwrap(), None);
        assert_eq!(order6().bipartition(), Err(TensorError::NotAMatrix(3)));
    }

    #[test]
    fn permutations_of_multisets() {
        assert_eq!(
            distinct_permutations(&[1, 0, 1]),
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        assert_eq!(distinct_permutations(&[2, 1, 0, 3]).len(), 24);
        assert_eq!(permutation_count(&[0, 0, 1, 1]), 6);
        assert_eq!(permutation_count(&[0, 1, 2, 3]), 24);
        assert_eq!(permutation_count(&[5, 5, 5]), 1);
    }
}
