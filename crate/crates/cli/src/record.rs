use serde::{Deserialize, Serialize};

use rotcirc::FrobeniusClass;

/// One row of a classification: a single isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub n: u64,
    pub d: u64,
    pub m_vector: Vec<u64>,
    /// Canonical residue in `[0, n)`.
    pub h: u64,
    /// `+[h]` or `-[n - h]`, whichever has the smaller magnitude.
    pub h_signed: String,
    /// Sorted residues of `S = H`.
    pub connection_set: Vec<u64>,
    /// `{±[a], ±[b], ...}` with `a < b < ...` the representatives below `n/2`.
    pub connection_display: String,
    pub rotational: bool,
    pub frobenius: bool,
    /// `(n - 1) / d`, exact since the rotation has no fixed points.
    pub gossip_bound: u64,
}

pub fn signed_residue(h: u64, n: u64) -> String {
    if 2 * h > n {
        format!("-[{}]", n - h)
    } else {
        format!("+[{h}]")
    }
}

pub fn pair_display(pairs: &[u64]) -> String {
    let inner: Vec<String> = pairs.iter().map(|s| format!("±[{s}]")).collect();
    format!("{{{}}}", inner.join(", "))
}

impl ClassRecord {
    pub fn new(c: &FrobeniusClass, rotational: bool, frobenius: bool) -> Self {
        ClassRecord {
            n: c.n,
            d: c.d,
            m_vector: c.m_vector.clone(),
            h: c.h,
            h_signed: signed_residue(c.h, c.n),
            connection_set: c.subgroup.clone(),
            connection_display: pair_display(&c.connection_pairs()),
            rotational,
            frobenius,
            gossip_bound: (c.n - 1).div_ceil(c.d),
        }
    }

    pub fn m_display(&self) -> String {
        let inner: Vec<String> = self.m_vector.iter().map(u64::to_string).collect();
        format!("({})", inner.join(", "))
    }
}
