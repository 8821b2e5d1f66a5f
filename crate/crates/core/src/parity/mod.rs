//! Odd-colorings and odd transversals of cubical tensors.
//!
//! An odd-coloring (even `r` only) is a map `φ: [n] → Z_r` with
//! `φ(i1)+⋯+φ(ir) ≡ r/2 (mod r)` on every nonzero entry; an odd transversal
//! is a vertex set meeting every nonzero entry's index tuple an odd number
//! of times. Both are decided exactly by linear algebra, one congruence per
//! distinct index multiset of the support.

pub mod gf2;
pub mod zmod;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::tensor::{support_patterns, CubicalTensor};
use gf2::BitRow;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParityError {
    #[error("odd-colorings are only defined for even r, got r = {0}")]
    OddArity(usize),
    #[error("certificate is for r = {certificate}, tensor has r = {tensor}")]
    ArityMismatch { certificate: usize, tensor: usize },
    #[error("certificate covers {certificate} vertices, tensor has order {tensor}")]
    LengthMismatch { certificate: usize, tensor: usize },
    #[error("transversal vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("parity extraction from a coloring needs r ≡ 2 (mod 4), got r = {0}")]
    NotTwoModFour(usize),
}

/// `φ: [n] → Z_r`, stored as residues `0..r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OddColoring {
    pub r: usize,
    pub phi: Vec<u64>,
}

impl OddColoring {
    /// Residues are reduced modulo `r`.
    pub fn new(r: usize, phi: Vec<u64>) -> Self {
        let m = r as u64;
        OddColoring {
            r,
            phi: phi.into_iter().map(|v| v % m).collect(),
        }
    }
}

/// A vertex subset, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OddTransversal {
    pub members: Vec<usize>,
}

impl OddTransversal {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let set: BTreeSet<usize> = members.into_iter().collect();
        OddTransversal {
            members: set.into_iter().collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut out = vec![false; n];
        for &v in &self.members {
            if v < n {
                out[v] = true;
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Coloring(OddColoring),
    Transversal(OddTransversal),
}

/// Proof that no odd-coloring exists: integer multipliers `w_e` on the
/// support patterns `e` such that `Σ w_e·(row e) ≡ 0` but
/// `Σ w_e·r/2 ≢ 0 (mod r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringObstruction {
    pub modulus: u64,
    /// (index multiset, multiplier), multipliers nonzero mod `modulus`.
    pub combination: Vec<(Vec<usize>, u64)>,
}

/// Proof that no odd transversal exists: a set of support patterns whose
/// parity rows sum to zero while their right-hand sides sum to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalObstruction {
    /// Index multisets (sorted tuples) of the combined equations.
    pub patterns: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringOutcome {
    Feasible(OddColoring),
    Infeasible(ColoringObstruction),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TransversalOutcome {
    Feasible(OddTransversal),
    Infeasible(TransversalObstruction),
}

impl ColoringOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, ColoringOutcome::Feasible(_))
    }
}

impl TransversalOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, TransversalOutcome::Feasible(_))
    }
}

fn counts_to_multiset(counts: &[usize]) -> Vec<usize> {
    counts
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i, c))
        .collect()
}

/// Decides odd-colorability over `Z_r`.
pub fn odd_coloring(a: &CubicalTensor) -> Result<ColoringOutcome, ParityError> {
    let r = a.r();
    if r % 2 == 1 {
        return Err(ParityError::OddArity(r));
    }
    let m = r as u64;
    let patterns: Vec<Vec<usize>> = support_patterns(a).into_iter().collect();
    let rows: Vec<Vec<u64>> = patterns
        .iter()
        .map(|c| c.iter().map(|&x| x as u64).collect())
        .collect();
    let rhs = vec![m / 2; rows.len()];
    match zmod::solve(&rows, &rhs, a.n(), m) {
        Ok(phi) => Ok(ColoringOutcome::Feasible(OddColoring::new(r, phi))),
        Err(w) => Ok(ColoringOutcome::Infeasible(ColoringObstruction {
            modulus: m,
            combination: patterns
                .iter()
                .zip(w)
                .filter(|&(_, c)| c % m != 0)
                .map(|(p, c)| (counts_to_multiset(p), c))
                .collect(),
        })),
    }
}

/// Decides whether an odd transversal exists, over GF(2).
pub fn odd_transversal(a: &CubicalTensor) -> TransversalOutcome {
    let n = a.n();
    // distinct parity rows; the pattern kept is the first seen
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    let mut origin = Vec::new();
    for counts in support_patterns(a) {
        let mut row = BitRow::zeros(n);
        for (i, &c) in counts.iter().enumerate() {
            row.set(i, c % 2 == 1);
        }
        let key: Vec<usize> = row.ones().collect();
        if seen.insert(key) {
            rows.push(row);
            origin.push(counts_to_multiset(&counts));
        }
    }
    let rhs = vec![true; rows.len()];
    match gf2::solve(&rows, &rhs, n) {
        Ok(x) => TransversalOutcome::Feasible(OddTransversal::new(x.ones())),
        Err(bad) => TransversalOutcome::Infeasible(TransversalObstruction {
            patterns: bad.into_iter().map(|i| origin[i].clone()).collect(),
        }),
    }
}

/// `φ(i) = r/2` on the transversal, 0 elsewhere.
pub fn transversal_to_coloring(
    x: &OddTransversal,
    r: usize,
    n: usize,
) -> Result<OddColoring, ParityError> {
    if r % 2 == 1 {
        return Err(ParityError::OddArity(r));
    }
    if let Some(&v) = x.members.iter().find(|&&v| v >= n) {
        return Err(ParityError::VertexOutOfRange { vertex: v, n });
    }
    let half = (r / 2) as u64;
    Ok(OddColoring::new(
        r,
        (0..n)
            .map(|i| if x.contains(i) { half } else { 0 })
            .collect(),
    ))
}

/// The vertices with odd color; an odd transversal when `r ≡ 2 (mod 4)`.
pub fn coloring_to_transversal(phi: &OddColoring) -> Result<OddTransversal, ParityError> {
    if phi.r % 4 != 2 {
        return Err(ParityError::NotTwoModFour(phi.r));
    }
    Ok(OddTransversal::new(
        phi.phi
            .iter()
            .enumerate()
            .filter(|(_, &c)| c % 2 == 1)
            .map(|(i, _)| i),
    ))
}

pub fn verify_coloring(a: &CubicalTensor, phi: &OddColoring) -> Result<bool, ParityError> {
    if phi.r % 2 == 1 {
        return Err(ParityError::OddArity(phi.r));
    }
    if phi.r != a.r() {
        return Err(ParityError::ArityMismatch {
            certificate: phi.r,
            tensor: a.r(),
        });
    }
    if phi.phi.len() != a.n() {
        return Err(ParityError::LengthMismatch {
            certificate: phi.phi.len(),
            tensor: a.n(),
        });
    }
    let m = phi.r as u64;
    Ok(a.entries()
        .all(|(t, _)| t.iter().map(|&i| phi.phi[i] % m).sum::<u64>() % m == m / 2))
}

pub fn verify_transversal(a: &CubicalTensor, x: &OddTransversal) -> Result<bool, ParityError> {
    if let Some(&v) = x.members.iter().find(|&&v| v >= a.n()) {
        return Err(ParityError::VertexOutOfRange {
            vertex: v,
            n: a.n(),
        });
    }
    let ind = x.indicator(a.n());
    Ok(a.entries()
        .all(|(t, _)| t.iter().filter(|&&i| ind[i]).count() % 2 == 1))
}

pub fn verify_certificate(a: &CubicalTensor, cert: &Certificate) -> Result<bool, ParityError> {
    match cert {
        Certificate::Coloring(phi) => verify_coloring(a, phi),
        Certificate::Transversal(x) => verify_transversal(a, x),
    }
}

impl ColoringObstruction {
    /// Re-checks the obstruction against `a` from scratch.
    pub fn check(&self, a: &CubicalTensor) -> bool {
        let m = self.modulus;
        if m != a.r() as u64 {
            return false;
        }
        let support = support_patterns(a);
        let mut lhs = vec![0u128; a.n()];
        let mut rhs = 0u128;
        for (ms, w) in &self.combination {
            let mut counts = vec![0usize; a.n()];
            for &i in ms {
                if i >= a.n() {
                    return false;
                }
                counts[i] += 1;
            }
            if !support.contains(&counts) {
                return false;
            }
            for (l, &c) in lhs.iter_mut().zip(&counts) {
                *l += c as u128 * *w as u128;
            }
            rhs += *w as u128 * (m / 2) as u128;
        }
        lhs.iter().all(|&l| l % m as u128 == 0) && !rhs.is_multiple_of(m as u128)
    }
}

impl TransversalObstruction {
    /// Re-checks the obstruction against `a` from scratch.
    pub fn check(&self, a: &CubicalTensor) -> bool {
        let support = support_patterns(a);
        let mut parity = vec![false; a.n()];
        for ms in &self.patterns {
            let mut counts = vec![0usize; a.n()];
            for &i in ms {
                if i >= a.n() {
                    return false;
                }
                counts[i] += 1;
            }
            if !support.contains(&counts) {
                return false;
            }
            for (p, &c) in parity.iter_mut().zip(&counts) {
                *p ^= c % 2 == 1;
            }
        }
        parity.iter().all(|&p| !p) && self.patterns.len() % 2 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{two_class_family, Hypergraph};
    use crate::scalar::Scalar;

    fn k2() -> CubicalTensor {
        Hypergraph::new(2, 2, vec![vec![0, 1]])
            .unwrap()
            .adjacency_tensor()
    }

    fn triangle() -> CubicalTensor {
        Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2], vec![0, 2]])
            .unwrap()
            .adjacency_tensor()
    }

    #[test]
    fn two_class_family_separates() {
        let (g, witness) = two_class_family(1, 4, 4).unwrap();
        let a = g.adjacency_tensor();
        assert_eq!(verify_coloring(&a, &witness), Ok(true));
        match odd_coloring(&a).unwrap() {
            ColoringOutcome::Feasible(phi) => assert_eq!(verify_coloring(&a, &phi), Ok(true)),
            other => panic!("expected feasible, got {other:?}"),
        }
        match odd_transversal(&a) {
            TransversalOutcome::Infeasible(ob) => assert!(ob.check(&a)),
            other => panic!("expected infeasible, got {other:?}"),
        }
        let x = OddTransversal::new([0]);
        assert_eq!(verify_transversal(&a, &x), Ok(false));
    }

    #[test]
    fn triangle_is_not_odd_colorable() {
        // brute force over all maps [3] → Z_2
        let a = triangle();
        let any = (0..8u64).any(|code| {
            let phi = OddColoring::new(2, (0..3).map(|i| code >> i & 1).collect());
            verify_coloring(&a, &phi).unwrap()
        });
        assert!(!any);
        match odd_coloring(&a).unwrap() {
            ColoringOutcome::Infeasible(ob) => assert!(ob.check(&a)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn odd_arity_is_rejected() {
        let e = Hypergraph::new(3, 3, vec![vec![0, 1, 2]])
            .unwrap()
            .adjacency_tensor();
        assert_eq!(odd_coloring(&e), Err(ParityError::OddArity(3)));
        assert_eq!(
            verify_coloring(&e, &OddColoring::new(3, vec![0; 3])),
            Err(ParityError::OddArity(3))
        );
    }

    #[test]
    fn transversal_examples() {
        for r in 2..=6 {
            let e = Hypergraph::new(r, r, vec![(0..r).collect()])
                .unwrap()
                .adjacency_tensor();
            match odd_transversal(&e) {
                TransversalOutcome::Feasible(x) => {
                    assert_eq!(x.members.len() % 2, 1);
                    assert_eq!(verify_transversal(&e, &x), Ok(true));
                }
                other => panic!("expected feasible, got {other:?}"),
            }
        }
        match odd_transversal(&k2()) {
            TransversalOutcome::Feasible(x) => assert_eq!(x.members.len(), 1),
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn conversions() {
        let e4 = Hypergraph::new(4, 4, vec![vec![0, 1, 2, 3]])
            .unwrap()
            .adjacency_tensor();
        let phi = transversal_to_coloring(&OddTransversal::new([0]), 4, 4).unwrap();
        assert_eq!(phi.phi, vec![2, 0, 0, 0]);
        assert_eq!(verify_coloring(&e4, &phi), Ok(true));

        let zero = CubicalTensor::zeros(4, 3).unwrap();
        let phi = transversal_to_coloring(&OddTransversal::new([]), 4, 3).unwrap();
        assert_eq!(phi.phi, vec![0; 3]);
        assert_eq!(verify_coloring(&zero, &phi), Ok(true));

        let phi = transversal_to_coloring(&OddTransversal::new([0]), 2, 2).unwrap();
        assert_eq!(phi.phi, vec![1, 0]);
        assert_eq!(verify_coloring(&k2(), &phi), Ok(true));

        let e6 = Hypergraph::new(6, 6, vec![(0..6).collect()])
            .unwrap()
            .adjacency_tensor();
        let phi = OddColoring::new(6, vec![3, 0, 0, 0, 0, 0]);
        assert_eq!(verify_coloring(&e6, &phi), Ok(true));
        let x = coloring_to_transversal(&phi).unwrap();
        assert_eq!(x.members, vec![0]);
        assert_eq!(verify_transversal(&e6, &x), Ok(true));

        assert_eq!(
            coloring_to_transversal(&OddColoring::new(2, vec![1, 0]))
                .unwrap()
                .members,
            vec![0]
        );
        assert_eq!(
            coloring_to_transversal(&OddColoring::new(4, vec![1, 0])),
            Err(ParityError::NotTwoModFour(4))
        );
        assert_eq!(
            transversal_to_coloring(&OddTransversal::new([0]), 3, 3),
            Err(ParityError::OddArity(3))
        );
    }

    #[test]
    fn zero_tensor_accepts_everything() {
        let z = CubicalTensor::zeros(4, 3).unwrap();
        assert_eq!(
            verify_certificate(
                &z,
                &Certificate::Coloring(OddColoring::new(4, vec![1, 2, 3]))
            ),
            Ok(true)
        );
        assert_eq!(
            verify_certificate(&z, &Certificate::Transversal(OddTransversal::new([1]))),
            Ok(true)
        );
    }

    #[test]
    fn diagonal_entries_block_transversals() {
        let t = CubicalTensor::new(4, 2, vec![(vec![0, 0, 0, 0], Scalar::one())]).unwrap();
        match odd_transversal(&t) {
            TransversalOutcome::Infeasible(ob) => {
                assert_eq!(ob.patterns, vec![vec![0, 0, 0, 0]]);
                assert!(ob.check(&t));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
        assert!(!odd_coloring(&t).unwrap().is_feasible());
    }

    #[test]
    fn certificate_shape_errors() {
        let a = k2();
        assert_eq!(
            verify_coloring(&a, &OddColoring::new(4, vec![0, 0])),
            Err(ParityError::ArityMismatch {
                certificate: 4,
                tensor: 2
            })
        );
        assert_eq!(
            verify_coloring(&a, &OddColoring::new(2, vec![0])),
            Err(ParityError::LengthMismatch {
                certificate: 1,
                tensor: 2
            })
        );
        assert_eq!(
            verify_transversal(&a, &OddTransversal::new([5])),
            Err(ParityError::VertexOutOfRange { vertex: 5, n: 2 })
        );
    }
}
