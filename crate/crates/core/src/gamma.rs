//! The family `Γ_{q,r} = Cay(Z_q, <(p-1)^(p^r)>)` for `q = p^e`, `e >= 3`.
//!
//! For `r <= e - 2` these graphs are rotational but not Frobenius: the
//! fixed points of `h` are the nonzero multiples of `p`. That set `F` is
//! independent and separates the graph exactly when `r >= 1`. At
//! `r = e - 1` the rotation is `-1` and the graph is the `q`-cycle, whose
//! rotation fixes nothing; the cut verdict for `F` still holds there.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circulant::{Circulant, CirculantError, VertexSet};
use crate::classifier::cyclic_subgroup;
use crate::numtheory::{is_prime, multiplicative_order, pow_mod, NumError, MAX_MODULUS};
use crate::rotation::{rotation_report, RotationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("exponent e = {0} is too small (need e >= 3)")]
    ExponentTooSmall(u32),
    #[error("p must be an odd prime")]
    EvenPrime,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("r = {r} out of range [0, {max}]")]
    RadiusOutOfRange { r: u32, max: u32 },
    #[error("q = p^e exceeds {MAX_MODULUS}")]
    TooLarge,
    #[error("the fixed set of Γ_(q,0) is not a vertex-cut")]
    NotACut,
    #[error("vertex {0} is reachable from 0 in Γ - F")]
    WitnessReachable(u64),
    #[error(transparent)]
    Circulant(#[from] CirculantError),
    #[error(transparent)]
    Rotation(#[from] RotationError),
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaSpec {
    pub p: u64,
    pub e: u32,
    pub r: u32,
    pub q: u64,
    /// `(p-1)^(p^r) mod q`.
    pub h: u64,
    /// `2 p^(e-r-1)`.
    pub degree: u64,
}

impl GammaSpec {
    pub fn new(p: u64, e: u32, r: u32) -> Result<Self, GammaError> {
        if p == 2 {
            return Err(GammaError::EvenPrime);
        }
        if !is_prime(p) {
            return Err(GammaError::NotPrime(p));
        }
        if e < 3 {
            return Err(GammaError::ExponentTooSmall(e));
        }
        if r > e - 1 {
            return Err(GammaError::RadiusOutOfRange { r, max: e - 1 });
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_MODULUS)
            .ok_or(GammaError::TooLarge)?;
        // exponent p^r < q, reduced inside pow_mod
        let h = pow_mod(p - 1, p.pow(r), q);
        Ok(GammaSpec {
            p,
            e,
            r,
            q,
            h,
            degree: 2 * p.pow(e - r - 1),
        })
    }

    /// `{p^(r+1) k ± 1 : 0 <= k < p^(e-r-1)}`, sorted.
    pub fn closed_form_subgroup(&self) -> Vec<u64> {
        let step = self.p.pow(self.r + 1);
        let count = self.p.pow(self.e - self.r - 1);
        let mut out: Vec<u64> = (0..count)
            .flat_map(|k| {
                let base = step * k;
                [(base + 1) % self.q, (base + self.q - 1) % self.q]
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Nonzero multiples of `p`.
    pub fn fixed_points(&self) -> VertexSet {
        (1..self.p.pow(self.e - 1)).map(|x| self.p * x).collect()
    }
}

pub fn build_gamma(p: u64, e: u32, r: u32) -> Result<(GammaSpec, Circulant), GammaError> {
    let spec = GammaSpec::new(p, e, r)?;
    let g = Circulant::new(spec.q, cyclic_subgroup(spec.h, spec.q))?;
    Ok((spec, g))
}

pub fn gamma_fixed_points(spec: &GammaSpec) -> VertexSet {
    spec.fixed_points()
}

/// How the vertex-cut verdict is witnessed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutWitness {
    /// `F` separates: `target` is unreachable from 0 in `Γ - F`.
    Blocked { target: u64 },
    /// `F` does not separate: the paths `0, 1, ..., i` for
    /// `1 <= i <= (p-1)/2` avoid `F` and meet every free orbit.
    Paths { paths: Vec<Vec<u64>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub spec: GammaSpec,
    /// Order of `h` equals `2 p^(e-r-1)` and matches the graph degree.
    pub degree_ok: bool,
    /// `<h>` equals the closed form `{p^(r+1) k ± 1}` and `-H = H`.
    pub subgroup_form_ok: bool,
    /// Rotation orbits give exactly the nonzero multiples of `p` as fixed points.
    pub fixed_formula_ok: bool,
    /// `|F| = p^(e-1) - 1` for the multiples-of-`p` set.
    pub fixed_size: u64,
    /// Number of fixed points of `h` found from its orbits. Zero when
    /// `r = e - 1`: there `h = -1` and the graph is the `q`-cycle.
    pub rotation_fixed_size: u64,
    /// Free part splits into `p^r (p-1)/2` orbits covering the units.
    pub free_orbits_ok: bool,
    pub independent: bool,
    pub vertex_cut: bool,
    /// `vertex_cut == (r >= 1)`.
    pub dichotomy_ok: bool,
    pub witness: Option<CutWitness>,
}

impl TheoremReport {
    /// `r = e - 1`, where `Γ` is the `q`-cycle.
    pub fn is_cycle_case(&self) -> bool {
        self.spec.r + 1 == self.spec.e
    }

    /// All checks pass. In the cycle case `h = -1` fixes nothing, so the
    /// orbit checks are replaced by `rotation_fixed_size == 0`; the cut
    /// verdict still concerns the multiples of `p`.
    pub fn holds(&self) -> bool {
        let orbit_checks = if self.is_cycle_case() {
            self.rotation_fixed_size == 0
        } else {
            self.fixed_formula_ok && self.free_orbits_ok
        };
        self.degree_ok
            && self.subgroup_form_ok
            && orbit_checks
            && self.independent
            && self.dichotomy_ok
            && self.witness.is_some()
    }
}

/// Runs every structural check for `Γ_{p^e, r}`; later checks run even when
/// earlier ones fail.
pub fn verify_theorem_q(p: u64, e: u32, r: u32) -> Result<TheoremReport, GammaError> {
    let (spec, g) = build_gamma(p, e, r)?;
    let q = spec.q;
    let order = multiplicative_order(spec.h, q)?;
    let degree_ok = order == spec.degree && g.degree() as u64 == spec.degree;

    let closed = spec.closed_form_subgroup();
    let symmetric = closed
        .iter()
        .all(|&s| closed.binary_search(&(q - s)).is_ok());
    let subgroup_form_ok = g.connection_set() == closed.as_slice() && symmetric;

    let fixed = spec.fixed_points();
    let report = rotation_report(q, spec.h)?;
    let fixed_formula_ok = report.fixed == fixed && fixed.len() as u64 == p.pow(e - 1) - 1;

    let units: VertexSet = (1..q).filter(|x| x % p != 0).collect();
    let expected_orbits = p.pow(r) * (p - 1) / 2;
    let free_orbits_ok =
        report.free == units && report.free_orbits().count() as u64 == expected_orbits;

    let independent = g.is_independent_set(&fixed);
    let vertex_cut = g.is_vertex_cut(&fixed)?;
    let dichotomy_ok = vertex_cut == (r >= 1);

    let witness = if r >= 1 {
        blocked_path_witness(p, e, r)
            .ok()
            .map(|target| CutWitness::Blocked { target })
    } else {
        short_paths(&g, &fixed, p).map(|paths| CutWitness::Paths { paths })
    };

    Ok(TheoremReport {
        spec,
        degree_ok,
        subgroup_form_ok,
        fixed_formula_ok,
        fixed_size: fixed.len() as u64,
        rotation_fixed_size: report.fixed.len() as u64,
        free_orbits_ok,
        independent,
        vertex_cut,
        dichotomy_ok,
        witness,
    })
}

// Paths 0,1,...,i for i <= (p-1)/2, checked edge by edge; their endpoints
// must lie in pairwise distinct orbits covering the free part.
fn short_paths(g: &Circulant, fixed: &VertexSet, p: u64) -> Option<Vec<Vec<u64>>> {
    let paths: Vec<Vec<u64>> = (1..=(p - 1) / 2).map(|i| (0..=i).collect()).collect();
    let valid = paths.iter().all(|path| {
        path.iter().all(|&v| !fixed.contains(v))
            && path.windows(2).all(|w| g.are_adjacent(w[0], w[1]))
    });
    let h = g.connection_set();
    let q = g.n();
    let mut orbits: Vec<Vec<u64>> = (1..=(p - 1) / 2)
        .map(|i| {
            let mut o: Vec<u64> = h.iter().map(|&s| s * i % q).collect();
            o.sort_unstable();
            o
        })
        .collect();
    orbits.sort();
    orbits.dedup();
    let covered: usize = orbits.iter().map(Vec::len).sum();
    let covers_units = orbits.len() as u64 == (p - 1) / 2 && covered as u64 == q - q / p;
    (valid && covers_units).then_some(paths)
}

/// Returns `p + 1` after checking by BFS that it is unreachable from 0
/// once the fixed points are removed.
pub fn blocked_path_witness(p: u64, e: u32, r: u32) -> Result<u64, GammaError> {
    if r == 0 {
        return Err(GammaError::NotACut);
    }
    let (spec, g) = build_gamma(p, e, r)?;
    let target = p + 1;
    let reach = g.reachable_avoiding(0, &spec.fixed_points());
    if reach[target as usize] {
        return Err(GammaError::WitnessReachable(target));
    }
    Ok(target)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let (s, g) = build_gamma(3, 3, 1).unwrap();
        assert_eq!((s.q, s.h, s.degree), (27, 8, 6));
        assert_eq!(g.connection_set(), &[1, 8, 10, 17, 19, 26]);

        let (s, g) = build_gamma(3, 3, 0).unwrap();
        assert_eq!((s.q, s.h, s.degree), (27, 2, 18));
        assert!(g.connection_set().iter().all(|x| x % 3 != 0));
        assert_eq!(g.degree(), 18);

        for (p, e) in [(3, 3), (5, 3), (3, 4)] {
            let (s, g) = build_gamma(p, e, e - 1).unwrap();
            assert_eq!(g.connection_set(), &[1, s.q - 1]);
        }
    }

    #[test]
    fn build_rejects() {
        assert_eq!(
            build_gamma(3, 2, 0).unwrap_err(),
            GammaError::ExponentTooSmall(2)
        );
        assert_eq!(build_gamma(2, 4, 0).unwrap_err(), GammaError::EvenPrime);
        assert_eq!(build_gamma(9, 3, 0).unwrap_err(), GammaError::NotPrime(9));
        assert_eq!(
            build_gamma(3, 3, 3).unwrap_err(),
            GammaError::RadiusOutOfRange { r: 3, max: 2 }
        );
    }

    #[test]
    fn fixed_points_examples() {
        let s = GammaSpec::new(3, 3, 1).unwrap();
        assert_eq!(
            gamma_fixed_points(&s).members(),
            &[3, 6, 9, 12, 15, 18, 21, 24]
        );
        assert_eq!(
            gamma_fixed_points(&GammaSpec::new(3, 4, 0).unwrap()).len(),
            26
        );
    }

    #[test]
    fn theorem_examples() {
        let rep = verify_theorem_q(3, 3, 1).unwrap();
        assert!(rep.holds() && rep.vertex_cut);
        assert_eq!(rep.witness, Some(CutWitness::Blocked { target: 4 }));

        let rep = verify_theorem_q(3, 3, 0).unwrap();
        assert!(rep.holds() && !rep.vertex_cut);
        assert_eq!(
            rep.witness,
            Some(CutWitness::Paths {
                paths: vec![vec![0, 1]]
            })
        );

        let rep = verify_theorem_q(3, 5, 1).unwrap();
        assert!(rep.holds() && rep.vertex_cut);
    }

    #[test]
    fn witness_examples() {
        assert_eq!(blocked_path_witness(3, 3, 1), Ok(4));
        assert_eq!(blocked_path_witness(5, 3, 1), Ok(6));
        assert_eq!(blocked_path_witness(3, 4, 2), Ok(4));
        assert_eq!(blocked_path_witness(3, 3, 0), Err(GammaError::NotACut));
    }
}
