//! Exact integer and modular arithmetic.
//!
//! Everything here works on `u64` residues. Products are widened to `u128`
//! before reduction, so any modulus below 2^64 is safe; factorization is
//! restricted to [`MAX_MODULUS`] because it runs trial division.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest modulus accepted by [`factorize`].
pub const MAX_MODULUS: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("input must be nonzero")]
    Zero,
    #[error("modulus {0} is too small (need at least 2)")]
    ModulusTooSmall(u64),
    #[error("{n} exceeds the supported limit {limit}")]
    TooLarge { n: u64, limit: u64 },
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: u64, m: u64 },
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("expected an odd prime, got 2")]
    EvenPrime,
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("arithmetic overflow")]
    Overflow,
}

/// Canonical prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(p, e)` pairs with primes strictly ascending.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// `(p, p^e)` for every prime factor.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|&(p, e)| (p, p.pow(e)))
    }

    /// Number of distinct prime factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }
}

/// Factors `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    if n > MAX_MODULUS {
        return Err(NumError::TooLarge {
            n,
            limit: MAX_MODULUS,
        });
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    match a.checked_mul(b) {
        Some(p) => p % m,
        None => ((a as u128 * b as u128) % m as u128) as u64,
    }
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `a^k mod m` by square-and-multiply.
pub fn mod_pow(a: u64, k: u64, m: u64) -> Result<u64, NumError> {
    if m < 2 {
        return Err(NumError::ModulusTooSmall(m));
    }
    Ok(pow_mod(a, k, m))
}

/// Inverse of `a` modulo `m`, in `[1, m)`.
pub fn mod_inverse(a: u64, m: u64) -> Result<u64, NumError> {
    if m < 2 {
        return Err(NumError::ModulusTooSmall(m));
    }
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(NumError::NotInvertible { a, m });
    }
    Ok(t0.rem_euclid(m as i128) as u64)
}

/// Euler's totient from a factorization.
pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Least `k >= 1` with `a^k = 1 (mod m)`.
///
/// Starts from the group order `phi(m)` and strips each prime factor while
/// the power still lands on 1.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64, NumError> {
    if m < 2 {
        return Err(NumError::ModulusTooSmall(m));
    }
    if gcd(a % m, m) != 1 {
        return Err(NumError::NotInvertible { a, m });
    }
    let phi = euler_phi(&factorize(m)?);
    let mut order = phi;
    for (p, _) in factorize(phi)?.factors {
        while order.is_multiple_of(p) && pow_mod(a, order / p, m) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Smallest primitive root modulo `p^e` for an odd prime `p`.
pub fn primitive_root(p: u64, e: u32) -> Result<u64, NumError> {
    if p == 2 {
        return Err(NumError::EvenPrime);
    }
    if !is_prime(p) {
        return Err(NumError::NotPrime(p));
    }
    if e == 0 {
        return Err(NumError::ZeroExponent);
    }
    let q = p.checked_pow(e).ok_or(NumError::Overflow)?;
    let phi = p.pow(e - 1) * (p - 1);
    let phi_primes: Vec<u64> = factorize(phi)?.primes().collect();
    (2..q)
        .find(|&g| g % p != 0 && phi_primes.iter().all(|&r| pow_mod(g, phi / r, q) != 1))
        .ok_or(NumError::NotPrime(p))
}

/// Solves `x = r_i (mod m_i)` for pairwise coprime moduli.
///
/// Uses the explicit form `x = sum (n/m_i) * b_i * r_i mod n` where
/// `b_i` inverts `n/m_i` modulo `m_i`.
pub fn crt_combine(residues: &[(u64, u64)]) -> Result<u64, NumError> {
    for (i, &(_, a)) in residues.iter().enumerate() {
        if a < 2 {
            return Err(NumError::ModulusTooSmall(a));
        }
        for &(_, b) in &residues[i + 1..] {
            if gcd(a, b) != 1 {
                return Err(NumError::NotCoprime(a, b));
            }
        }
    }
    let n = residues
        .iter()
        .try_fold(1u64, |acc, &(_, m)| acc.checked_mul(m))
        .ok_or(NumError::Overflow)?;
    let mut x = 0;
    for &(r, m) in residues {
        let cofactor = n / m;
        let b = mod_inverse(cofactor % m, m)?;
        let term = mul_mod(mul_mod(cofactor, b, n), r % m, n);
        x = (x + term) % n;
    }
    Ok(x)
}

/// Exponent of the prime `p` in `n`.
pub fn ord_p(n: i64, p: u64) -> Result<u32, NumError> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    if !is_prime(p) {
        return Err(NumError::NotPrime(p));
    }
    let mut n = n.unsigned_abs();
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    Ok(k)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
