//! Exact determinants and the characteristic polynomial of rational
//! 2-matrices.

use num::integer::Integer;
use num::{BigInt, BigRational, One, Zero};

use super::poly::UniPoly;

/// Determinant of a square rational matrix: rows are cleared of
/// denominators, then Bareiss fraction-free elimination runs over the
/// integers.
pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "determinant of a non-square matrix");
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
        })
        .collect();
    let det = bareiss(&mut a);
    BigRational::new(det, scale)
}

fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(xI - A)` by the Faddeev–LeVerrier recurrence
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k)/k`.
pub fn charpoly_matrix(a: &[Vec<BigRational>]) -> UniPoly {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    UniPoly::new(coeffs)
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    /// Cofactor expansion, only for tiny matrices.
    fn laplace(m: &[Vec<BigRational>]) -> BigRational {
        let n = m.len();
        if n == 0 {
            return q(1);
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<BigRational>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * laplace(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let m: Vec<Vec<BigRational>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if rng.gen_bool(0.3) {
                                q(0)
                            } else {
                                BigRational::new(
                                    rng.gen_range(-5..=5).into(),
                                    rng.gen_range(1..=4).into(),
                                )
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(determinant(&m), laplace(&m));
        }
    }

    #[test]
    fn needs_pivoting() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&m), q(-1));
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])), q(0));
    }

    #[test]
    fn small_characteristic_polynomials() {
        // H2 = [[1,1],[1,-1]] → x^2 - 2
        assert_eq!(
            charpoly_matrix(&mat(&[&[1, 1], &[1, -1]])),
            UniPoly::from_ints(&[-2, 0, 1])
        );
        // identity of order 3 → (x-1)^3
        let id = mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(charpoly_matrix(&id), UniPoly::from_ints(&[-1, 1]).pow(3));
        // triangle K3 → x^3 - 3x - 2
        let k3 = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(charpoly_matrix(&k3), UniPoly::from_ints(&[-2, -3, 0, 1]));
    }
}
