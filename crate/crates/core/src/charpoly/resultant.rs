//! Resultants of the eigen-system `λ x_k^{r-1} - F_k(x) = 0` at a fixed λ.
//!
//! Two binary forms use the Sylvester matrix; three ternary forms use the
//! Macaulay quotient `det(M) / det(M')`.

use std::collections::{BTreeMap, HashMap};

use num::{BigRational, Zero};

use super::det::determinant;

/// Homogeneous form: exponent vector → coefficient.
pub type Form = BTreeMap<Vec<u32>, BigRational>;

/// `f_k = λ x_k^d - F_k` for each `k`, given the forms `F_k`.
pub fn shifted_forms(f: &[Form], lambda: &BigRational, d: u32) -> Vec<Form> {
    let n = f.len();
    f.iter()
        .enumerate()
        .map(|(k, fk)| {
            let mut out: Form = fk.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
            let mut pure = vec![0u32; n];
            pure[k] = d;
            *out.entry(pure).or_insert_with(BigRational::zero) += lambda;
            out.retain(|_, c| !c.is_zero());
            out
        })
        .collect()
}

/// Resultant of two binary forms of degree `d` (Sylvester determinant).
pub fn sylvester(f: &Form, g: &Form, d: u32) -> BigRational {
    let d = d as usize;
    let coeffs = |h: &Form| -> Vec<BigRational> {
        (0..=d)
            .map(|i| {
                h.get(&vec![(d - i) as u32, i as u32])
                    .cloned()
                    .unwrap_or_else(BigRational::zero)
            })
            .collect()
    };
    let (cf, cg) = (coeffs(f), coeffs(g));
    let size = 2 * d;
    let mut m = vec![vec![BigRational::zero(); size]; size];
    for t in 0..d {
        m[t][t..=t + d].clone_from_slice(&cf);
        m[d + t][t..=t + d].clone_from_slice(&cg);
    }
    determinant(&m)
}

/// All exponent vectors of `vars` variables with total degree `deg`,
/// in lexicographically decreasing order.
pub fn monomials(vars: usize, deg: u32) -> Vec<Vec<u32>> {
    if vars == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials(vars - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Row/column structure of the Macaulay matrix for `vars` forms of equal
/// degree `d`; independent of the coefficients.
#[derive(Clone, Debug)]
pub struct MacaulayLayout {
    d: u32,
    monos: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
    /// Row `α`: which form, and the multiplier monomial `α - d·e_i`.
    rows: Vec<(usize, Vec<u32>)>,
    /// Positions of monomials divisible by more than one `x_i^d`.
    non_reduced: Vec<usize>,
}

impl MacaulayLayout {
    pub fn new(vars: usize, d: u32) -> Self {
        let big_d = vars as u32 * (d - 1) + 1;
        let monos = monomials(vars, big_d);
        let index = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let rows = monos
            .iter()
            .map(|m| {
                let i = m
                    .iter()
                    .position(|&e| e >= d)
                    .expect("every degree-D monomial has an exponent >= d");
                let mut shift = m.clone();
                shift[i] -= d;
                (i, shift)
            })
            .collect();
        let non_reduced = (0..monos.len())
            .filter(|&k| monos[k].iter().filter(|&&e| e >= d).count() > 1)
            .collect();
        MacaulayLayout {
            d,
            monos,
            index,
            rows,
            non_reduced,
        }
    }

    pub fn size(&self) -> usize {
        self.monos.len()
    }

    pub fn minor_size(&self) -> usize {
        self.non_reduced.len()
    }

    /// The full matrix `M` for the given forms.
    pub fn matrix(&self, forms: &[Form]) -> Vec<Vec<BigRational>> {
        let size = self.monos.len();
        let mut m = vec![vec![BigRational::zero(); size]; size];
        for (row, (i, shift)) in self.rows.iter().enumerate() {
            for (mono, c) in &forms[*i] {
                debug_assert_eq!(mono.iter().sum::<u32>(), self.d);
                let target: Vec<u32> = mono.iter().zip(shift).map(|(a, b)| a + b).collect();
                m[row][self.index[&target]] = c.clone();
            }
        }
        m
    }

    /// `M'`: rows and columns of the non-reduced monomials.
    pub fn minor(&self, m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        self.non_reduced
            .iter()
            .map(|&i| self.non_reduced.iter().map(|&j| m[i][j].clone()).collect())
            .collect()
    }

    /// `(det M, det M')`.
    pub fn determinants(&self, forms: &[Form]) -> (BigRational, BigRational) {
        let m = self.matrix(forms);
        let minor = self.minor(&m);
        (determinant(&m), determinant(&minor))
    }
}
