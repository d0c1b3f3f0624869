//! Circulant graphs `Cay(Z_n, S)`.
//!
//! Adjacency is never materialized: the neighbors of `v` are `v + s` for
//! `s` in the connection set, which is tiny compared to `n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numtheory::{gcd, mul_mod};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CirculantError {
    #[error("modulus {0} is too small (need at least 3)")]
    ModulusTooSmall(u64),
    #[error("connection set contains 0")]
    ContainsZero,
    #[error("connection set is not symmetric: {s} present but {neg} missing")]
    NotSymmetric { s: u64, neg: u64 },
    #[error("connection set is empty")]
    Empty,
    #[error("vertex {v} out of range for n = {n}")]
    OutOfRange { v: u64, n: u64 },
    #[error("vertex set leaves fewer than two vertices")]
    DegenerateCut,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

/// Sorted set of residues in `[0, n)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    members: Vec<u64>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = u64>) -> Self {
        let mut members: Vec<u64> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u64) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().copied()
    }

    fn mask(&self, n: u64) -> Vec<bool> {
        let mut mask = vec![false; n as usize];
        for &v in &self.members {
            mask[v as usize] = true;
        }
        mask
    }
}

impl FromIterator<u64> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// `Cay(Z_n, S)` with `S` symmetric and zero-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Circulant {
    n: u64,
    conn: Vec<u64>,
}

impl Circulant {
    /// Builds a circulant; residues are reduced mod `n` first.
    pub fn new(n: u64, conn: impl IntoIterator<Item = u64>) -> Result<Self, CirculantError> {
        if n < 3 {
            return Err(CirculantError::ModulusTooSmall(n));
        }
        let mut conn: Vec<u64> = conn.into_iter().map(|s| s % n).collect();
        conn.sort_unstable();
        conn.dedup();
        if conn.is_empty() {
            return Err(CirculantError::Empty);
        }
        if conn[0] == 0 {
            return Err(CirculantError::ContainsZero);
        }
        for &s in &conn {
            let neg = n - s;
            if conn.binary_search(&neg).is_err() {
                return Err(CirculantError::NotSymmetric { s, neg });
            }
        }
        Ok(Circulant { n, conn })
    }

    /// The `n`-cycle `Cay(Z_n, {±1})`.
    pub fn cycle(n: u64) -> Result<Self, CirculantError> {
        Self::new(n, [1, n.wrapping_sub(1)])
    }

    /// `K_n` as `Cay(Z_n, Z_n \ {0})`.
    pub fn complete(n: u64) -> Result<Self, CirculantError> {
        Self::new(n, 1..n)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn connection_set(&self) -> &[u64] {
        &self.conn
    }

    pub fn degree(&self) -> usize {
        self.conn.len()
    }

    pub fn has_connection(&self, s: u64) -> bool {
        self.conn.binary_search(&(s % self.n)).is_ok()
    }

    pub fn are_adjacent(&self, u: u64, v: u64) -> bool {
        self.has_connection((v + self.n - u % self.n) % self.n)
    }

    pub fn neighbors_iter(&self, v: u64) -> impl Iterator<Item = u64> + '_ {
        let n = self.n;
        self.conn.iter().map(move |&s| (v + s) % n)
    }

    pub fn neighbors(&self, v: u64) -> Result<VertexSet, CirculantError> {
        self.check_vertex(v)?;
        Ok(self.neighbors_iter(v).collect())
    }

    /// Image of the connection set under multiplication by `sigma`.
    pub fn scaled_connection(&self, sigma: u64) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .conn
            .iter()
            .map(|&s| mul_mod(s, sigma, self.n))
            .collect();
        out.sort_unstable();
        out
    }

    /// Connectivity by BFS from 0.
    pub fn is_connected(&self) -> bool {
        self.reachable_from(0, &vec![false; self.n as usize])
            .iter()
            .all(|&seen| seen)
    }

    /// Connectivity by `gcd(n, s_1, ..., s_k) = 1`.
    pub fn is_connected_arith(&self) -> bool {
        self.conn.iter().fold(self.n, |g, &s| gcd(g, s)) == 1
    }

    pub fn is_independent_set(&self, f: &VertexSet) -> bool {
        f.iter()
            .all(|v| self.neighbors_iter(v).all(|u| !f.contains(u)))
    }

    /// Whether removing `f` disconnects the remaining vertices.
    pub fn is_vertex_cut(&self, f: &VertexSet) -> Result<bool, CirculantError> {
        if let Some(&v) = f.members().last() {
            self.check_vertex(v)?;
        }
        if (self.n as usize).saturating_sub(f.len()) < 2 {
            return Err(CirculantError::DegenerateCut);
        }
        if !self.is_connected_arith() {
            return Err(CirculantError::Disconnected);
        }
        let blocked = f.mask(self.n);
        let start = (0..self.n).find(|&v| !blocked[v as usize]).unwrap();
        let seen = self.reachable_from(start, &blocked);
        Ok(seen.iter().zip(&blocked).any(|(&s, &b)| !s && !b))
    }

    /// Vertices reachable from `start` without entering `blocked`.
    ///
    /// `blocked` must have length `n`; a blocked start reaches nothing.
    pub fn reachable_from(&self, start: u64, blocked: &[bool]) -> Vec<bool> {
        let n = self.n as usize;
        let mut seen = vec![false; n];
        if blocked[start as usize] {
            return seen;
        }
        seen[start as usize] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors_iter(v) {
                let ui = u as usize;
                if !seen[ui] && !blocked[ui] {
                    seen[ui] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// Like [`Circulant::reachable_from`] with a [`VertexSet`] of removed vertices.
    pub fn reachable_avoiding(&self, start: u64, removed: &VertexSet) -> Vec<bool> {
        self.reachable_from(start, &removed.mask(self.n))
    }

    pub fn eccentricity(&self, v: u64) -> Result<u64, CirculantError> {
        self.check_vertex(v)?;
        let n = self.n as usize;
        let mut dist = vec![u64::MAX; n];
        dist[v as usize] = 0;
        let mut queue = VecDeque::from([v]);
        let mut reached = 1;
        let mut ecc = 0;
        while let Some(x) = queue.pop_front() {
            let dx = dist[x as usize];
            ecc = ecc.max(dx);
            for u in self.neighbors_iter(x) {
                if dist[u as usize] == u64::MAX {
                    dist[u as usize] = dx + 1;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        if reached < n {
            return Err(CirculantError::Disconnected);
        }
        Ok(ecc)
    }

    /// Eccentricity of 0, which is the diameter by vertex-transitivity.
    pub fn diameter(&self) -> Result<u64, CirculantError> {
        self.eccentricity(0)
    }

    /// A unit `sigma` with `sigma * S = S'`, if one exists.
    ///
    /// Every subset of `Z_n \ {0}` is a CI-subset, so this decides
    /// isomorphism of circulants on the same `n`.
    pub fn iso_multiplier(&self, other: &Circulant) -> Result<Option<u64>, CirculantError> {
        if self.n != other.n {
            return Err(CirculantError::ModulusMismatch(self.n, other.n));
        }
        if self.conn.len() != other.conn.len() {
            return Ok(None);
        }
        let target = VertexSet::new(other.conn.iter().copied()).mask(self.n);
        // sigma is injective, so sigma * S inside S' forces equality
        Ok((1..self.n)
            .filter(|&sigma| gcd(sigma, self.n) == 1)
            .find(|&sigma| {
                self.conn
                    .iter()
                    .all(|&s| target[mul_mod(s, sigma, self.n) as usize])
            }))
    }

    fn check_vertex(&self, v: u64) -> Result<(), CirculantError> {
        if v >= self.n {
            return Err(CirculantError::OutOfRange { v, n: self.n });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tl19() -> Circulant {
        Circulant::new(19, [1, 7, 8, 11, 12, 18]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_sets() {
        assert_eq!(
            Circulant::new(2, [1]),
            Err(CirculantError::ModulusTooSmall(2))
        );
        assert_eq!(
            Circulant::new(7, [0, 1, 6]),
            Err(CirculantError::ContainsZero)
        );
        assert_eq!(
            Circulant::new(7, [1, 2, 6]),
            Err(CirculantError::NotSymmetric { s: 2, neg: 5 })
        );
        assert_eq!(Circulant::new(7, []), Err(CirculantError::Empty));
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(
            tl19().neighbors(0).unwrap().members(),
            &[1, 7, 8, 11, 12, 18]
        );
        assert_eq!(
            Circulant::cycle(11)
                .unwrap()
                .neighbors(0)
                .unwrap()
                .members(),
            &[1, 10]
        );
        let g = Circulant::new(27, [1, 8, 10, 17, 19, 26]).unwrap();
        assert_eq!(g.neighbors(0).unwrap().members(), &[1, 8, 10, 17, 19, 26]);
        assert!(tl19().neighbors(19).is_err());
    }

    #[test]
    fn connectivity_examples() {
        let even = Circulant::new(6, [2, 4]).unwrap();
        assert!(!even.is_connected());
        assert!(!even.is_connected_arith());
        assert!(tl19().is_connected());
        let nine = Circulant::new(9, [3, 6]).unwrap();
        assert!(!nine.is_connected() && !nine.is_connected_arith());
    }

    #[test]
    fn independence_examples() {
        let g = Circulant::new(27, (1..27).filter(|x| x % 3 != 0)).unwrap();
        let f = VertexSet::new((1..9).map(|x| 3 * x));
        assert!(g.is_independent_set(&f));
        assert!(g.is_independent_set(&VertexSet::empty()));
        let c19 = Circulant::cycle(19).unwrap();
        assert!(!c19.is_independent_set(&VertexSet::new([0, 1])));
    }

    #[test]
    fn vertex_cut_examples() {
        let g = Circulant::cycle(10).unwrap();
        assert_eq!(g.is_vertex_cut(&VertexSet::empty()), Ok(false));
        assert_eq!(g.is_vertex_cut(&VertexSet::new([0, 5])), Ok(true));
        assert_eq!(g.is_vertex_cut(&VertexSet::new([0, 1])), Ok(false));
        assert_eq!(
            g.is_vertex_cut(&VertexSet::new(1..10)),
            Err(CirculantError::DegenerateCut)
        );
        let split = Circulant::new(6, [2, 4]).unwrap();
        assert_eq!(
            split.is_vertex_cut(&VertexSet::empty()),
            Err(CirculantError::Disconnected)
        );
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(tl19().diameter(), Ok(2));
        assert_eq!(Circulant::complete(5).unwrap().diameter(), Ok(1));
        assert_eq!(Circulant::cycle(7).unwrap().diameter(), Ok(3));
        assert_eq!(
            Circulant::new(9, [3, 6]).unwrap().diameter(),
            Err(CirculantError::Disconnected)
        );
    }

    #[test]
    fn iso_multiplier_examples() {
        let harts3 = Circulant::new(19, [2, 3, 5, 14, 16, 17]).unwrap();
        // smallest witness is 4; 9 = 3k at k = 3 works as well
        let sigma = harts3.iso_multiplier(&tl19()).unwrap().unwrap();
        assert_eq!(sigma, 4);
        assert_eq!(harts3.scaled_connection(9), tl19().connection_set());
        assert_eq!(tl19().iso_multiplier(&tl19()), Ok(Some(1)));
        assert_eq!(
            tl19().iso_multiplier(&Circulant::cycle(20).unwrap()),
            Err(CirculantError::ModulusMismatch(19, 20))
        );
        let a = Circulant::new(6253, [1, 746, 5507, 6252]).unwrap();
        let b = Circulant::new(6253, [1, 2436, 3817, 6252]).unwrap();
        assert_eq!(a.iso_multiplier(&b), Ok(None));
    }
}
