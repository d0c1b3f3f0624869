//! Construction and enumeration of rotational first-kind Frobenius
//! circulants with cyclic kernel `Z_n`.
//!
//! For odd `n = p_1^{e_1} ... p_l^{e_l}` and an even divisor `d` of
//! `D = gcd(p_i - 1)`, every such circulant of degree `d` is
//! `Cay(Z_n, <h>)` where `h` is glued by the Chinese Remainder Theorem from
//! local generators `h_i = eta_i^(m_i * phi(p_i^e_i) / d) mod p_i^e_i`,
//! `eta_i` a primitive root and `gcd(m_i, d) = 1`. Two exponent tuples give
//! isomorphic graphs exactly when they generate the same subgroup, leaving
//! `phi(d)^(l-1)` classes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circulant::{Circulant, CirculantError};
use crate::numtheory::{
    crt_combine, divisors, euler_phi, factorize, gcd, mul_mod, multiplicative_order, pow_mod,
    primitive_root, Factorization, NumError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Circulant(#[from] CirculantError),
    #[error("n = {0} is even; a cyclic Frobenius kernel must have odd order")]
    EvenKernel(u64),
    #[error("n = {0} is too small (need at least 3)")]
    ModulusTooSmall(u64),
    #[error("degree {d} is not an even divisor of D = {max}")]
    InadmissibleDegree { d: u64, max: u64 },
    #[error("exponent {m} is not a unit modulo {d}")]
    BadExponent { m: u64, d: u64 },
    #[error("expected {expected} exponents, got {got}")]
    ExponentCount { expected: usize, got: usize },
    #[error("{h} is not a unit modulo {n}")]
    NotAUnit { h: u64, n: u64 },
}

/// One isomorphism class `Cay(Z_n, <h>)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusClass {
    pub n: u64,
    pub d: u64,
    /// Representative rotation; for enumerated classes this is the value
    /// produced by the lexicographically first exponent tuple.
    pub h: u64,
    /// Sorted elements of `H = <h>`, which is also the connection set.
    pub subgroup: Vec<u64>,
    /// Exponent tuple `(m_1, ..., m_l)` that produced `h`; empty when the
    /// class was built directly from a generator.
    pub m_vector: Vec<u64>,
}

impl FrobeniusClass {
    /// Class of `Cay(Z_n, <h>)` for an arbitrary unit `h`. No Frobenius
    /// property is assumed; see [`verify_first_kind_frobenius`].
    pub fn from_generator(n: u64, h: u64) -> Result<Self, ClassifyError> {
        if n < 3 {
            return Err(ClassifyError::ModulusTooSmall(n));
        }
        let h = h % n;
        if gcd(h, n) != 1 {
            return Err(ClassifyError::NotAUnit { h, n });
        }
        let subgroup = cyclic_subgroup(h, n);
        Ok(FrobeniusClass {
            n,
            d: subgroup.len() as u64,
            h,
            subgroup,
            m_vector: Vec::new(),
        })
    }

    pub fn circulant(&self) -> Result<Circulant, CirculantError> {
        Circulant::new(self.n, self.subgroup.iter().copied())
    }

    /// `min(s, n - s)` for each `±s` pair in the connection set, ascending.
    pub fn connection_pairs(&self) -> Vec<u64> {
        let mut pairs: Vec<u64> = self.subgroup.iter().map(|&s| s.min(self.n - s)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }
}

/// Sorted powers of `h` modulo `n`.
pub fn cyclic_subgroup(h: u64, n: u64) -> Vec<u64> {
    let mut out = vec![1 % n];
    let mut x = h % n;
    while x != 1 % n && x != 0 {
        out.push(x);
        x = mul_mod(x, h, n);
    }
    out.sort_unstable();
    out
}

fn require_odd_kernel(f: &Factorization) -> Result<(), ClassifyError> {
    let n = f.n();
    if n < 3 {
        return Err(ClassifyError::ModulusTooSmall(n));
    }
    if n.is_multiple_of(2) {
        return Err(ClassifyError::EvenKernel(n));
    }
    Ok(())
}

/// `D = gcd(p_1 - 1, ..., p_l - 1)`.
pub fn max_degree(f: &Factorization) -> Result<u64, ClassifyError> {
    require_odd_kernel(f)?;
    Ok(f.primes().fold(0, |g, p| gcd(g, p - 1)))
}

/// Even divisors of `D`, ascending.
pub fn admissible_degrees(f: &Factorization) -> Result<Vec<u64>, ClassifyError> {
    let max = max_degree(f)?;
    Ok(divisors(max).into_iter().filter(|d| d % 2 == 0).collect())
}

fn check_degree(f: &Factorization, d: u64) -> Result<(), ClassifyError> {
    let max = max_degree(f)?;
    if d == 0 || !d.is_multiple_of(2) || max % d != 0 {
        return Err(ClassifyError::InadmissibleDegree { d, max });
    }
    Ok(())
}

/// Local generators `h_i` for one exponent tuple, paired with `p_i^e_i`.
pub fn local_generators(
    f: &Factorization,
    d: u64,
    m: &[u64],
) -> Result<Vec<(u64, u64)>, ClassifyError> {
    check_degree(f, d)?;
    if m.len() != f.len() {
        return Err(ClassifyError::ExponentCount {
            expected: f.len(),
            got: m.len(),
        });
    }
    f.factors()
        .iter()
        .zip(m)
        .map(|(&(p, e), &mi)| {
            if mi == 0 || gcd(mi, d) != 1 {
                return Err(ClassifyError::BadExponent { m: mi, d });
            }
            let q = p.pow(e);
            let phi = p.pow(e - 1) * (p - 1);
            let eta = primitive_root(p, e)?;
            Ok((pow_mod(eta, mi * (phi / d), q), q))
        })
        .collect()
}

/// The rotation `h` for degree `d` and exponent tuple `m`.
pub fn construct_h(f: &Factorization, d: u64, m: &[u64]) -> Result<u64, ClassifyError> {
    let locals = local_generators(f, d, m)?;
    Ok(crt_combine(&locals)?)
}

/// All pairwise non-isomorphic classes of degree `d`, ordered by the
/// exponent tuple that first produces each subgroup.
pub fn enumerate_classes(f: &Factorization, d: u64) -> Result<Vec<FrobeniusClass>, ClassifyError> {
    check_degree(f, d)?;
    let units: Vec<u64> = (1..d).filter(|&m| gcd(m, d) == 1).collect();
    // powers[i][j] = h_i for m_i = units[j]
    let mut powers = Vec::with_capacity(f.len());
    for &(p, e) in f.factors() {
        let q = p.pow(e);
        let base = pow_mod(primitive_root(p, e)?, p.pow(e - 1) * (p - 1) / d, q);
        let row: Vec<(u64, u64)> = units.iter().map(|&m| (pow_mod(base, m, q), q)).collect();
        powers.push(row);
    }
    let l = f.len();
    let mut classes: Vec<FrobeniusClass> = Vec::new();
    // scaling m by a unit mod d keeps <h>, so m_1 = 1 reaches every class
    let mut idx = vec![0usize; l];
    loop {
        let locals: Vec<(u64, u64)> = idx.iter().zip(&powers).map(|(&j, row)| row[j]).collect();
        let h = crt_combine(&locals)?;
        let subgroup = cyclic_subgroup(h, f.n());
        if !classes.iter().any(|c| c.subgroup == subgroup) {
            let m_vector = idx.iter().map(|&j| units[j]).collect();
            classes.push(FrobeniusClass {
                n: f.n(),
                d,
                h,
                subgroup,
                m_vector,
            });
        }
        // odometer over positions 2..l, last position fastest
        let mut pos = l;
        loop {
            if pos <= 1 {
                return Ok(classes);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < units.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Expected class count `phi(d)^(l-1)`.
pub fn expected_class_count(f: &Factorization, d: u64) -> Result<u64, ClassifyError> {
    let phi_d = euler_phi(&factorize(d)?);
    Ok(phi_d.pow(f.len().saturating_sub(1) as u32))
}

/// `gcd(h - 1, n) = 1` for every non-identity `h` in the subgroup.
pub fn is_semiregular(n: u64, subgroup: &[u64]) -> bool {
    subgroup
        .iter()
        .filter(|&&h| h != 1)
        .all(|&h| gcd((h + n - 1) % n, n) == 1)
}

/// Semiregularity of `<h>` via the local criterion: `h` has the same order
/// `d` modulo every prime dividing `n`.
pub fn is_semiregular_by_prime_orders(f: &Factorization, h: u64) -> Result<bool, ClassifyError> {
    let d = multiplicative_order(h, f.n())?;
    for p in f.primes() {
        let local = if p == 2 {
            1
        } else {
            multiplicative_order(h % p, p)?
        };
        if local != d {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrobeniusViolation {
    /// `S` is not a subgroup closed under negation, so `H` is not regular on `S`.
    NotRegularOnS,
    NotSemiregular,
    Disconnected,
    DegreeNotBelowSmallestPrime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusReport {
    pub n: u64,
    pub d: u64,
    pub regular_on_s: bool,
    pub semiregular: bool,
    pub connected: bool,
    pub degree_below_smallest_prime: bool,
    pub violations: Vec<FrobeniusViolation>,
}

impl FrobeniusReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the four defining properties of a class. All checks run.
pub fn verify_first_kind_frobenius(c: &FrobeniusClass) -> Result<FrobeniusReport, ClassifyError> {
    let n = c.n;
    let sub = &c.subgroup;
    let closed = sub.binary_search(&1).is_ok()
        && sub.iter().all(|&a| {
            sub.binary_search(&(n - a)).is_ok()
                && sub
                    .iter()
                    .all(|&b| sub.binary_search(&mul_mod(a, b, n)).is_ok())
        });
    let regular_on_s = closed && sub.len() as u64 == c.d && sub.binary_search(&c.h).is_ok();
    let semiregular = is_semiregular(n, sub);
    let connected = sub.iter().fold(n, |g, &s| gcd(g, s)) == 1;
    let smallest = factorize(n)?.smallest_prime().unwrap_or(n);
    let degree_below_smallest_prime = c.d < smallest;

    let mut violations = Vec::new();
    if !regular_on_s {
        violations.push(FrobeniusViolation::NotRegularOnS);
    }
    if !semiregular {
        violations.push(FrobeniusViolation::NotSemiregular);
    }
    if !connected {
        violations.push(FrobeniusViolation::Disconnected);
    }
    if !degree_below_smallest_prime {
        violations.push(FrobeniusViolation::DegreeNotBelowSmallestPrime);
    }
    Ok(FrobeniusReport {
        n,
        d: c.d,
        regular_on_s,
        semiregular,
        connected,
        degree_below_smallest_prime,
        violations,
    })
}

/// A complement `H <= Z_n^*` making `g` a first-kind Frobenius circulant,
/// if one exists.
///
/// A subgroup regular on `S` has `S = Hs` for any `s` in `S`, so the only
/// candidate is `s^(-1) S`; it must be a subgroup acting semiregularly.
pub fn frobenius_complement(g: &Circulant) -> Option<Vec<u64>> {
    let n = g.n();
    if !g.is_connected_arith() {
        return None;
    }
    let conn = g.connection_set();
    if conn.iter().any(|&s| gcd(s, n) != 1) {
        return None;
    }
    let s_inv = crate::numtheory::mod_inverse(conn[0], n).ok()?;
    let mut h: Vec<u64> = conn.iter().map(|&s| mul_mod(s, s_inv, n)).collect();
    h.sort_unstable();
    let closed = h.iter().all(|&a| {
        h.iter()
            .all(|&b| h.binary_search(&mul_mod(a, b, n)).is_ok())
    });
    (closed && is_semiregular(n, &h)).then_some(h)
}
