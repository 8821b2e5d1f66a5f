//! Linear congruences `M y ≡ b (mod m)` for composite `m`.
//!
//! The modulus is split into prime powers. Over each `Z/p^e` elimination
//! always pivots on an entry of minimal p-adic valuation in the remaining
//! block, so every other entry of the pivot column is a multiple of the
//! pivot's `p^v` part and can be cleared exactly. The per-prime solutions
//! are glued back together by the Chinese remainder theorem.
//!
//! On failure the solver returns a left multiplier `w` with `w·M ≡ 0` and
//! `w·b ≢ 0 (mod m)`, which certifies that no solution exists.

pub type Outcome = Result<Vec<u64>, Vec<u64>>;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn submod(a: u64, b: u64, m: u64) -> u64 {
    (a + m - b % m) % m
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

/// `m = ∏ p^e` by trial division.
pub fn prime_powers(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn valuation(mut a: u64, p: u64, e: u32) -> u32 {
    if a == 0 {
        return e;
    }
    let mut v = 0;
    while a.is_multiple_of(p) {
        a /= p;
        v += 1;
    }
    v
}

/// Solves `rows · y ≡ rhs (mod modulus)`; `vars` is the number of unknowns.
pub fn solve(rows: &[Vec<u64>], rhs: &[u64], vars: usize, modulus: u64) -> Outcome {
    assert!(modulus >= 1, "modulus must be positive");
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
    if modulus == 1 {
        return Ok(vec![0; vars]);
    }
    let mut acc: Vec<u64> = vec![0; vars];
    let mut acc_mod = 1u64;
    for (p, e) in prime_powers(modulus) {
        let q = p.pow(e);
        match solve_prime_power(rows, rhs, vars, p, e) {
            Ok(part) => {
                // CRT merge of acc (mod acc_mod) with part (mod q)
                let inv = inverse(acc_mod % q, q).expect("prime powers are coprime");
                for (a, &s) in acc.iter_mut().zip(&part) {
                    let t = mulmod(submod(s, *a % q, q), inv, q);
                    *a += acc_mod * t;
                }
                acc_mod *= q;
            }
            Err(w) => {
                let lift = modulus / q;
                return Err(w.into_iter().map(|c| mulmod(c, lift, modulus)).collect());
            }
        }
    }
    Ok(acc)
}

fn solve_prime_power(rows: &[Vec<u64>], rhs: &[u64], vars: usize, p: u64, e: u32) -> Outcome {
    let q = p.pow(e);
    let m = rows.len();
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x % q).collect())
        .collect();
    let mut b: Vec<u64> = rhs.iter().map(|&x| x % q).collect();
    let mut u: Vec<Vec<u64>> = (0..m)
        .map(|i| {
            let mut row = vec![0; m];
            row[i] = 1;
            row
        })
        .collect();
    let mut cols: Vec<usize> = (0..vars).collect();
    let mut pivots: Vec<(u32, u64)> = Vec::new(); // (valuation, unit part)

    let mut rank = 0;
    while rank < m && rank < vars {
        let mut best: Option<(u32, usize, usize)> = None;
        'search: for (i, row) in a.iter().enumerate().skip(rank) {
            for j in rank..vars {
                let v = valuation(row[cols[j]], p, e);
                if v < e && best.is_none_or(|(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                    if v == 0 {
                        break 'search;
                    }
                }
            }
        }
        let Some((v, pi, pj)) = best else { break };
        a.swap(rank, pi);
        b.swap(rank, pi);
        u.swap(rank, pi);
        cols.swap(rank, pj);
        let c = cols[rank];
        let pv = p.pow(v);
        let unit = a[rank][c] / pv;
        let unit_inv = inverse(unit, q).expect("unit part is coprime to p");
        for i in rank + 1..m {
            if a[i][c] == 0 {
                continue;
            }
            let f = mulmod(a[i][c] / pv, unit_inv, q);
            let (top, rest) = a.split_at_mut(i);
            for (x, &y) in rest[0].iter_mut().zip(&top[rank]) {
                *x = submod(*x, mulmod(f, y, q), q);
            }
            b[i] = submod(b[i], mulmod(f, b[rank], q), q);
            let (top, rest) = u.split_at_mut(i);
            for (x, &y) in rest[0].iter_mut().zip(&top[rank]) {
                *x = submod(*x, mulmod(f, y, q), q);
            }
        }
        pivots.push((v, unit));
        rank += 1;
    }

    if let Some(bad) = (rank..m).find(|&i| b[i] != 0) {
        return Err(u[bad].clone());
    }

    let mut y = vec![0u64; vars];
    for i in (0..rank).rev() {
        let (v, unit) = pivots[i];
        let pv = p.pow(v);
        let mut s = b[i];
        for &c in &cols[i + 1..] {
            s = submod(s, mulmod(a[i][c], y[c], q), q);
        }
        if !s.is_multiple_of(pv) {
            let scale = p.pow(e - v);
            return Err(u[i].iter().map(|&x| mulmod(x, scale, q)).collect());
        }
        let unit_inv = inverse(unit, q).expect("unit part is coprime to p");
        y[cols[i]] = mulmod(s / pv, unit_inv, q);
    }
    Ok(y)
}
