//! Complete rotations of circulants and their fixed-point structure.
//!
//! Every complete rotation is a group automorphism, and `Aut(Z_n)` is
//! `Z_n^*` acting by multiplication, so rotations are searched among units.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circulant::{Circulant, CirculantError, VertexSet};
use crate::numtheory::{gcd, mul_mod, multiplicative_order, NumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("{w} is not a unit modulo {n}")]
    NotAUnit { w: u64, n: u64 },
    #[error("{w} is not a complete rotation of the graph")]
    NotARotation { w: u64 },
    #[error(transparent)]
    Circulant(#[from] CirculantError),
    #[error(transparent)]
    Num(#[from] NumError),
}

fn require_unit(w: u64, n: u64) -> Result<u64, RotationError> {
    let w = w % n;
    if gcd(w, n) != 1 {
        return Err(RotationError::NotAUnit { w, n });
    }
    Ok(w)
}

/// Whether multiplication by `w` fixes `S` and cycles through all of it.
pub fn is_complete_rotation(g: &Circulant, w: u64) -> Result<bool, RotationError> {
    let n = g.n();
    let w = require_unit(w, n)?;
    let conn = g.connection_set();
    if g.scaled_connection(w) != conn {
        return Ok(false);
    }
    let s = conn[0];
    let mut x = mul_mod(s, w, n);
    let mut len = 1;
    while x != s {
        x = mul_mod(x, w, n);
        len += 1;
    }
    Ok(len == conn.len())
}

/// Orbit decomposition of `Z_n \ {0}` under `<w>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationReport {
    pub n: u64,
    pub w: u64,
    /// Order of `w` modulo `n`.
    pub d: u64,
    /// Orbits in order of their smallest element; each orbit lists
    /// `x, xw, xw^2, ...`.
    pub orbits: Vec<Vec<u64>>,
    /// Union of orbits shorter than `d`.
    pub fixed: VertexSet,
    /// Union of orbits of length `d`, without 0.
    pub free: VertexSet,
}

impl RotationReport {
    pub fn free_orbits(&self) -> impl Iterator<Item = &[u64]> + '_ {
        let d = self.d as usize;
        self.orbits
            .iter()
            .filter(move |o| o.len() == d)
            .map(Vec::as_slice)
    }
}

pub fn rotation_report(n: u64, w: u64) -> Result<RotationReport, RotationError> {
    let w = require_unit(w, n)?;
    let d = multiplicative_order(w, n)?;
    let mut seen = vec![false; n as usize];
    let mut orbits = Vec::new();
    let mut fixed = Vec::new();
    let mut free = Vec::new();
    for x in 1..n {
        if seen[x as usize] {
            continue;
        }
        let mut orbit = vec![x];
        seen[x as usize] = true;
        let mut y = mul_mod(x, w, n);
        while y != x {
            seen[y as usize] = true;
            orbit.push(y);
            y = mul_mod(y, w, n);
        }
        if orbit.len() as u64 == d {
            free.extend_from_slice(&orbit);
        } else {
            fixed.extend_from_slice(&orbit);
        }
        orbits.push(orbit);
    }
    Ok(RotationReport {
        n,
        w,
        d,
        orbits,
        fixed: VertexSet::new(fixed),
        free: VertexSet::new(free),
    })
}

/// Every unit acting as a complete rotation, ascending.
pub fn find_all_rotations(g: &Circulant) -> Vec<u64> {
    let n = g.n();
    (1..n)
        .filter(|&w| gcd(w, n) == 1)
        .filter(|&w| is_complete_rotation(g, w).unwrap_or(false))
        .collect()
}

/// A graph is a balanced regular Cayley map exactly when it is rotational.
pub fn cayley_map_embeddable(g: &Circulant) -> bool {
    !find_all_rotations(g).is_empty()
}

/// Fixed-set side of the gossip bound: `F(w)` independent and not a cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GossipCertificate {
    pub n: u64,
    pub degree: u64,
    pub rotation: u64,
    pub fixed: VertexSet,
    pub fixed_independent: bool,
    pub fixed_is_cut: bool,
    /// `ceil((n - 1) / degree)` when the certificate holds.
    pub gossip_time: Option<u64>,
    /// Set when `F(w)` is empty, where the time is `(n - 1) / degree` exactly.
    pub exact: bool,
}

impl GossipCertificate {
    pub fn holds(&self) -> bool {
        self.gossip_time.is_some()
    }
}

pub fn gossip_certificate(g: &Circulant, w: u64) -> Result<GossipCertificate, RotationError> {
    if !is_complete_rotation(g, w)? {
        return Err(RotationError::NotARotation { w });
    }
    let n = g.n();
    let report = rotation_report(n, w)?;
    let fixed_independent = g.is_independent_set(&report.fixed);
    let fixed_is_cut = g.is_vertex_cut(&report.fixed)?;
    let degree = g.degree() as u64;
    let holds = fixed_independent && !fixed_is_cut;
    let exact = report.fixed.is_empty() && (n - 1).is_multiple_of(degree);
    Ok(GossipCertificate {
        n,
        degree,
        rotation: report.w,
        fixed: report.fixed,
        fixed_independent,
        fixed_is_cut,
        gossip_time: holds.then(|| (n - 1).div_ceil(degree)),
        exact: holds && exact,
    })
}

/// `F(w)` is not a cut iff every free orbit has a vertex reachable from 0
/// in `g - F(w)`.
pub fn fixed_set_separates_by_orbits(g: &Circulant, report: &RotationReport) -> bool {
    let reach = g.reachable_avoiding(0, &report.fixed);
    !report
        .free_orbits()
        .all(|orbit| orbit.iter().any(|&x| reach[x as usize]))
}
