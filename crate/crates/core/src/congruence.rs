//! Binomials modulo a prime and the binomial congruence system
//!
//! ```text
//! C(2p-2+k, t) + C(2k-2, t)·x_1 + C(2k-3, t)·x_2 + … + C(k-1, t)·x_k ≡ 0   (mod p)
//! ```
//!
//! for `t ∈ [0, k-1]`, whose unique solution is
//! `x_s ≡ (-1)^(k-s+1) · C(k, k-s+1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{is_prime, GroupSpec};

/// `C(a, b) mod p` by Lucas's theorem (product over base-`p` digits).
///
/// `C(a, b) = 0` whenever `b > a`.
pub fn binom_mod_p(a: u64, b: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(lucas(a, b, p))
}

fn lucas(mut a: u64, mut b: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while b > 0 || a > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd > ad {
            return 0;
        }
        acc = acc * small_binom(ad, bd, p) % p;
        a /= p;
        b /= p;
    }
    acc
}

/// `C(a, b) mod p` for digits `b ≤ a < p`.
fn small_binom(a: u64, b: u64, p: u64) -> u64 {
    let b = b.min(a - b);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..b {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// `k × (k+1)` matrix over `F_p`; column 0 multiplies the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceSystem {
    pub p: u64,
    pub k: u64,
    pub matrix: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemSolution {
    pub values: Vec<u64>,
    pub unique: bool,
}

impl CongruenceSystem {
    /// True iff `A · (1, x_1, …, x_k)ᵀ ≡ 0` row by row.
    pub fn is_satisfied_by(&self, values: &[u64]) -> bool {
        values.len() as u64 == self.k
            && self.matrix.iter().all(|row| {
                let dot = row[1..]
                    .iter()
                    .zip(values)
                    .fold(row[0], |acc, (a, x)| (acc + a * x) % self.p);
                dot == 0
            })
    }
}

fn check_params(p: u64, k: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 1 || k >= p {
        return Err(Error::OutOfRange(format!("k = {k} must lie in [1, {}]", p - 1)));
    }
    Ok(())
}

pub fn build_system(p: u64, k: u64) -> Result<CongruenceSystem> {
    check_params(p, k)?;
    let matrix = (0..k)
        .map(|t| {
            let mut row = Vec::with_capacity(k as usize + 1);
            row.push(lucas(2 * p - 2 + k, t, p));
            row.extend((1..=k).map(|s| lucas(2 * k - 1 - s, t, p)));
            row
        })
        .collect();
    Ok(CongruenceSystem { p, k, matrix })
}

/// Gauss–Jordan elimination over `F_p` on the variable block, with the
/// constant column moved to the right-hand side. Pivots are the first
/// nonzero entry of each column, scanning rows top to bottom.
pub fn solve_by_elimination(sys: &CongruenceSystem) -> Result<SystemSolution> {
    let p = sys.p;
    let k = sys.k as usize;
    // augmented [B | -c]
    let mut rows: Vec<Vec<u64>> = sys
        .matrix
        .iter()
        .map(|r| {
            let mut v = r[1..].to_vec();
            v.push((p - r[0] % p) % p);
            v
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut next_row = 0;
    for col in 0..k {
        let Some(pr) = (next_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(next_row, pr);
        let inv = pow_mod(rows[next_row][col], p - 2, p);
        for v in rows[next_row].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[next_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next_row && row[col] != 0 {
                let f = row[col];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + p - f * pv % p) % p;
                }
            }
        }
        pivot_cols.push(col);
        next_row += 1;
    }
    if let Some(r) = rows[next_row..].iter().find(|r| r[k] != 0) {
        return Err(Error::Counterexample(format!(
            "congruence system for p={p}, k={k} is inconsistent (reduced row {r:?})"
        )));
    }
    let mut values = vec![0u64; k];
    for (r, &col) in pivot_cols.iter().enumerate() {
        values[col] = rows[r][k];
    }
    Ok(SystemSolution {
        values,
        unique: pivot_cols.len() == k,
    })
}

/// `x_s ≡ (-1)^(k-s+1) · C(k, k-s+1) (mod p)` for `s ∈ [1, k]`.
pub fn closed_form(p: u64, k: u64) -> Result<SystemSolution> {
    check_params(p, k)?;
    let values = (1..=k)
        .map(|s| {
            let e = k - s + 1;
            let c = lucas(k, e, p);
            if e.is_multiple_of(2) {
                c
            } else {
                (p - c) % p
            }
        })
        .collect();
    Ok(SystemSolution { values, unique: true })
}

/// `D(G) = 1 + Σ (n_i - 1)`, for `p`-groups and groups of rank at most two.
pub fn davenport_formula(spec: &GroupSpec) -> Result<u64> {
    if spec.rank() <= 2 || spec.p_group_prime().is_some() {
        Ok(spec.davenport_lower_bound() as u64)
    } else {
        Err(Error::UnsupportedSpec {
            group: spec.to_string(),
            reason: "Davenport constant not known in closed form".into(),
        })
    }
}

/// `η(C_n) = n`, `η(C_n ⊕ C_n) = 3n - 2`.
pub fn eta_formula(spec: &GroupSpec) -> Result<u64> {
    let n = spec.exponent() as u64;
    match spec.rank() {
        1 => Ok(n),
        2 if spec.is_homocyclic() => Ok(3 * n - 2),
        _ => Err(Error::UnsupportedSpec {
            group: spec.to_string(),
            reason: "η only tabulated for C_n and C_n ⊕ C_n".into(),
        }),
    }
}

/// `s_{≤ D(G)-k}(C_m ⊕ C_n) = m + n - 1 + k` for `m | n`, `k ∈ [0, m-1]`.
pub fn s_leq_formula(m: u64, n: u64, k: u64) -> Result<u64> {
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::OutOfRange(format!("need m | n, got m={m}, n={n}")));
    }
    if k >= m {
        return Err(Error::OutOfRange(format!("k = {k} must lie in [0, {}]", m - 1)));
    }
    Ok(m + n - 1 + k)
}
