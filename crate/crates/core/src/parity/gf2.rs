//! Affine systems over GF(2) by bitset Gaussian elimination.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Solution of `M x = b` over GF(2), or the indices of original equations
/// whose sum reads `0 = 1`.
pub fn solve(rows: &[BitRow], rhs: &[bool], vars: usize) -> Result<BitRow, Vec<usize>> {
    let m = rows.len();
    let mut a: Vec<BitRow> = rows.to_vec();
    let mut b: Vec<bool> = rhs.to_vec();
    let mut comb: Vec<BitRow> = (0..m)
        .map(|i| {
            let mut c = BitRow::zeros(m);
            c.set(i, true);
            c
        })
        .collect();

    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..vars {
        let Some(p) = (rank..m).find(|&i| a[i].get(col)) else {
            continue;
        };
        a.swap(rank, p);
        b.swap(rank, p);
        comb.swap(rank, p);
        let (pivot_row, pivot_b, pivot_c) = (a[rank].clone(), b[rank], comb[rank].clone());
        for i in 0..m {
            if i != rank && a[i].get(col) {
                a[i].xor_assign(&pivot_row);
                b[i] ^= pivot_b;
                comb[i].xor_assign(&pivot_c);
            }
        }
        pivots.push(col);
        rank += 1;
    }

    if let Some(bad) = (rank..m).find(|&i| b[i]) {
        return Err(comb[bad].ones().collect());
    }
    // reduced row echelon form: free variables are zero
    let mut x = BitRow::zeros(vars);
    for (i, &col) in pivots.iter().enumerate() {
        x.set(col, b[i]);
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(bits: &[usize], len: usize) -> BitRow {
        let mut r = BitRow::zeros(len);
        for &b in bits {
            r.set(b, true);
        }
        r
    }

    fn eval(r: &BitRow, x: &BitRow) -> bool {
        r.ones().filter(|&i| x.get(i)).count() % 2 == 1
    }

    #[test]
    fn solves_consistent_system() {
        let rows = vec![row(&[0, 1], 3), row(&[1, 2], 3), row(&[0, 2], 3)];
        let rhs = vec![true, true, false];
        let x = solve(&rows, &rhs, 3).unwrap();
        for (r, &b) in rows.iter().zip(&rhs) {
            assert_eq!(eval(r, &x), b);
        }
    }

    #[test]
    fn reports_inconsistent_combination() {
        // x0+x1 = 1, x1+x2 = 1, x0+x2 = 1: sum of all three reads 0 = 1
        let rows = vec![row(&[0, 1], 3), row(&[1, 2], 3), row(&[0, 2], 3)];
        let rhs = vec![true; 3];
        let mut bad = solve(&rows, &rhs, 3).unwrap_err();
        bad.sort();
        assert_eq!(bad, vec![0, 1, 2]);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let n = 130;
        let rows: Vec<BitRow> = (0..n).map(|i| row(&[i, (i + 1) % n], n)).collect();
        let rhs: Vec<bool> = (0..n).map(|i| i == 0).collect();
        // cycle with an odd number of ones on the right: inconsistent
        let bad = solve(&rows, &rhs, n).unwrap_err();
        assert_eq!(bad.len(), n);
    }
}
