//! Exact solvers for the sampled decomposition system.
//!
//! Small systems go through fraction-free Bareiss elimination on the
//! denominator-cleared integer matrix. Large systems are solved modulo
//! several word-size primes, combined by CRT and rational reconstruction,
//! and the candidate is then checked exactly against every sampled row, so
//! the returned solution is certified over the rationals either way.
//! Underdetermined systems get the minimal-support representative (free
//! columns pinned to zero).

use super::LinearSystem;
use crate::error::{Error, Result};
use crate::ring::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const BAREISS_MAX_COLS: usize = 96;

/// 61/62-bit and NTT primes; two usually suffice, the rest are insurance.
const PRIMES: [u64; 6] = [
    2_305_843_009_213_693_951, // 2^61 - 1
    4_611_686_018_427_387_847, // largest prime below 2^62
    2_147_483_647,             // 2^31 - 1
    1_000_000_007,
    998_244_353,
    754_974_721,
];

pub(crate) fn solve(sys: &LinearSystem) -> Result<Vec<Scalar>> {
    if sys.basis.len() <= BAREISS_MAX_COLS {
        solve_bareiss(sys)
    } else {
        match solve_modular(sys)? {
            Some(sol) => Ok(sol),
            // all primes exhausted without a certified solution; fall back to
            // the unconditional exact path
            None => solve_bareiss(sys),
        }
    }
}

// ------------------------------------------------------------------- Bareiss

fn solve_bareiss(sys: &LinearSystem) -> Result<Vec<Scalar>> {
    let ncols = sys.basis.len();
    let nrows = sys.rows();
    // materialize rows and clear denominators
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(nrows);
    for r in 0..nrows {
        let mut rational_row: Vec<Scalar> = Vec::with_capacity(ncols + 1);
        for c in 0..ncols {
            rational_row.push(sys.entry(r, c));
        }
        rational_row.push(sys.rhs[r].clone());
        let mut lcm = BigInt::one();
        for v in &rational_row {
            lcm = lcm.lcm(v.denom());
        }
        mat.push(
            rational_row
                .into_iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect(),
        );
    }

    // fraction-free forward elimination
    let mut prev = BigInt::one();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(pr) = (row..nrows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pr);
        for r in (row + 1)..nrows {
            if mat[r][col].is_zero() && mat[row][col].is_zero() {
                continue;
            }
            for c in (col + 1)..=ncols {
                let t = &mat[row][col] * &mat[r][c] - &mat[r][col] * &mat[row][c];
                let (q, rem) = t.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free invariant violated");
                mat[r][c] = q;
            }
            mat[r][col] = BigInt::zero();
        }
        prev = mat[row][col].clone();
        pivots.push((row, col));
        row += 1;
        if row == nrows {
            break;
        }
    }
    // consistency: any surviving all-zero coefficient row must have zero rhs
    for r in row..nrows {
        if mat[r][..ncols].iter().all(Zero::is_zero) && !mat[r][ncols].is_zero() {
            return Err(Error::NotRepresentable);
        }
    }
    // back-substitution over rationals; free columns get zero
    let mut x = vec![Scalar::zero(); ncols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = Scalar::from_integer(mat[r][ncols].clone());
        for cc in (c + 1)..ncols {
            if !mat[r][cc].is_zero() {
                acc -= Scalar::from_integer(mat[r][cc].clone()) * &x[cc];
            }
        }
        x[c] = acc / Scalar::from_integer(mat[r][c].clone());
    }
    Ok(x)
}

// ------------------------------------------------------------------- modular

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = (v % BigInt::from(p))
        .to_i128()
        .expect("reduced value fits i128");
    ((m + p as i128) % p as i128) as u64
}

fn scalar_mod(v: &Scalar, p: u64) -> Option<u64> {
    let den = bigint_mod(v.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mul_mod(bigint_mod(v.numer(), p), inv_mod(den, p), p))
}

struct ModSolution {
    prime: u64,
    pivot_cols: Vec<usize>,
    values: Vec<u64>, // dense, length ncols
}

enum ModOutcome {
    Solved(ModSolution),
    Inconsistent,
    BadPrime,
}

fn solve_mod_p(sys: &LinearSystem, p: u64) -> ModOutcome {
    let ncols = sys.basis.len();
    let nrows = sys.rows();
    // generator values mod p; a zero residue breaks negative powers
    let mut tmod: Vec<Vec<u64>> = Vec::with_capacity(nrows);
    for tv in &sys.gen_values {
        let mut row = Vec::with_capacity(tv.len());
        for t in tv {
            match scalar_mod(t, p) {
                Some(0) | None => return ModOutcome::BadPrime,
                Some(v) => row.push(v),
            }
        }
        tmod.push(row);
    }
    let mut mat: Vec<Vec<u64>> = Vec::with_capacity(nrows);
    for r in 0..nrows {
        let mut row = Vec::with_capacity(ncols + 1);
        // incremental powers per generator
        let m = tmod[r].len();
        let (lo, hi) = sys.basis.bounds();
        let span = (hi - lo) as usize + 1;
        let mut pows: Vec<Vec<u64>> = Vec::with_capacity(m);
        for &t in &tmod[r] {
            let base = if lo < 0 {
                pow_mod(inv_mod(t, p), (-lo) as u64, p)
            } else {
                pow_mod(t, lo as u64, p)
            };
            let mut ladder = Vec::with_capacity(span);
            ladder.push(base);
            for k in 1..span {
                ladder.push(mul_mod(ladder[k - 1], t, p));
            }
            pows.push(ladder);
        }
        for tuple in sys.basis.tuples() {
            let mut acc = 1u64;
            for (i, &e) in tuple.iter().enumerate() {
                acc = mul_mod(acc, pows[i][(e - lo) as usize], p);
            }
            row.push(acc);
        }
        match scalar_mod(&sys.rhs[r], p) {
            None => return ModOutcome::BadPrime,
            Some(v) => row.push(v),
        }
        mat.push(row);
    }
    // forward elimination
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0usize;
    for col in 0..ncols {
        let Some(pr) = (row..nrows).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(row, pr);
        let inv = inv_mod(mat[row][col], p);
        for c in col..=ncols {
            mat[row][c] = mul_mod(mat[row][c], inv, p);
        }
        for r in (row + 1)..nrows {
            let f = mat[r][col];
            if f == 0 {
                continue;
            }
            for c in col..=ncols {
                let sub = mul_mod(f, mat[row][c], p);
                mat[r][c] = (mat[r][c] + p - sub) % p;
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == nrows {
            break;
        }
    }
    for r in row..nrows {
        if mat[r][..ncols].iter().all(|&v| v == 0) && mat[r][ncols] != 0 {
            return ModOutcome::Inconsistent;
        }
    }
    let mut x = vec![0u64; ncols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = mat[r][ncols];
        for cc in (c + 1)..ncols {
            if mat[r][cc] != 0 && x[cc] != 0 {
                let sub = mul_mod(mat[r][cc], x[cc], p);
                acc = (acc + p - sub) % p;
            }
        }
        x[c] = acc; // pivot normalized to 1
    }
    ModOutcome::Solved(ModSolution {
        prime: p,
        pivot_cols: pivots.iter().map(|&(_, c)| c).collect(),
        values: x,
    })
}

/// Balanced rational reconstruction of x mod m.
fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<Scalar> {
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1.is_negative() {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}

fn solve_modular(sys: &LinearSystem) -> Result<Option<Vec<Scalar>>> {
    let mut solved: Vec<ModSolution> = Vec::new();
    let mut inconsistent_votes = 0usize;
    for &p in PRIMES.iter() {
        match solve_mod_p(sys, p) {
            ModOutcome::BadPrime => continue,
            ModOutcome::Inconsistent => {
                inconsistent_votes += 1;
                if inconsistent_votes >= 2 {
                    return Err(Error::NotRepresentable);
                }
            }
            ModOutcome::Solved(sol) => {
                // keep only solutions sharing the pivot structure of the first
                if let Some(first) = solved.first() {
                    if sol.pivot_cols != first.pivot_cols {
                        continue;
                    }
                }
                solved.push(sol);
                if solved.len() >= 2 {
                    if let Some(candidate) = reconstruct(&solved) {
                        if residual_is_zero(sys, &candidate) {
                            return Ok(Some(candidate));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn reconstruct(solutions: &[ModSolution]) -> Option<Vec<Scalar>> {
    let ncols = solutions[0].values.len();
    let mut modulus = BigInt::one();
    for s in solutions {
        modulus *= BigInt::from(s.prime);
    }
    let mut out = Vec::with_capacity(ncols);
    for c in 0..ncols {
        // CRT combine
        let mut x = BigInt::zero();
        let mut m = BigInt::one();
        for s in solutions {
            let p = BigInt::from(s.prime);
            let r = BigInt::from(s.values[c]);
            // x' = x mod m, want y with y = x (mod m), y = r (mod p)
            let mm = bigint_mod(&m, s.prime);
            let diff = (s.values[c] + s.prime - bigint_mod(&x, s.prime)) % s.prime;
            let k = mul_mod(diff, inv_mod(mm, s.prime), s.prime);
            x += &m * BigInt::from(k);
            m *= &p;
            let _ = r;
        }
        out.push(rational_reconstruct(&x, &modulus)?);
    }
    Some(out)
}

/// Exact check of the candidate against every sampled row (sparse dot
/// products over the rationals).
fn residual_is_zero(sys: &LinearSystem, candidate: &[Scalar]) -> bool {
    let support: Vec<usize> = candidate
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .collect();
    for r in 0..sys.rows() {
        let mut acc = Scalar::zero();
        for &j in &support {
            acc += &candidate[j] * &sys.entry(r, j);
        }
        if acc != sys.rhs[r] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn reconstruct_small_rationals() {
        let m = BigInt::from(2_305_843_009_213_693_951u64) * BigInt::from(2_147_483_647u64);
        // encode -2/3 mod m
        let three_inv = {
            // modular inverse of 3 mod m via extended Euclid on BigInt
            let (mut r0, mut r1) = (m.clone(), BigInt::from(3));
            let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
            while !r1.is_zero() {
                let q = &r0 / &r1;
                let r2 = &r0 - &q * &r1;
                r0 = std::mem::replace(&mut r1, r2);
                let s2 = &s0 - &q * &s1;
                s0 = std::mem::replace(&mut s1, s2);
            }
            ((s0 % &m) + &m) % &m
        };
        let x = ((BigInt::from(-2) * three_inv) % &m + &m) % &m;
        let got = rational_reconstruct(&x, &m).unwrap();
        assert_eq!(got, Scalar::new(BigInt::from(-2), BigInt::from(3)));
    }
}
