//! Hexagonal meshes (HARTS) and the degree-6 circulants `TL_{n_k}`.
//!
//! `TL_{n_k} = Cay(Z_{n_k}, <3k+2>)` with `n_k = 3k^2 + 3k + 1`, since
//! `3k+2` is a root of `x^2 - x + 1` modulo `n_k`. The mesh of size `k` is
//! `Cay(Z_{n_{k-1}}, {±(k-1), ±k, ±(2k-1)})` and multiplication by `3k`
//! carries it onto `TL_{n_{k-1}}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circulant::{Circulant, CirculantError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HartsError {
    #[error("size k = {0} is too small (need k >= 2)")]
    SizeTooSmall(u64),
    #[error("multiplier {multiplier} does not map the mesh of size {k} onto TL")]
    IsomorphismFailed { k: u64, multiplier: u64 },
    #[error(transparent)]
    Circulant(#[from] CirculantError),
}

/// `n_k = 3k^2 + 3k + 1`.
pub fn tl_order(k: u64) -> u64 {
    3 * k * k + 3 * k + 1
}

fn check_size(k: u64) -> Result<(), HartsError> {
    if k < 2 {
        return Err(HartsError::SizeTooSmall(k));
    }
    Ok(())
}

// valid for k >= 1; k = 1 gives K_7
fn tl_circulant(k: u64) -> Result<Circulant, CirculantError> {
    let n = tl_order(k);
    Circulant::new(
        n,
        [1, n - 1, 3 * k + 1, n - 3 * k - 1, 3 * k + 2, n - 3 * k - 2],
    )
}

pub fn tl_graph(k: u64) -> Result<Circulant, HartsError> {
    check_size(k)?;
    Ok(tl_circulant(k)?)
}

pub fn harts_graph(k: u64) -> Result<Circulant, HartsError> {
    check_size(k)?;
    let n = tl_order(k - 1);
    Ok(Circulant::new(
        n,
        [k - 1, n - (k - 1), k, n - k, 2 * k - 1, n - (2 * k - 1)],
    )?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HartsSpec {
    pub k: u64,
    /// `n_{k-1} = 3k^2 - 3k + 1`.
    pub n: u64,
    pub tl_conn: Vec<u64>,
    pub harts_conn: Vec<u64>,
    pub multiplier: u64,
}

/// Returns `3k mod n_{k-1}` after checking that it maps the mesh
/// connection set onto that of `TL_{n_{k-1}}`, and that the exhaustive
/// multiplier search also finds an isomorphism.
pub fn harts_iso_tl(k: u64) -> Result<u64, HartsError> {
    let harts = harts_graph(k)?;
    let tl = tl_circulant(k - 1)?;
    let multiplier = 3 * k % harts.n();
    let failed = HartsError::IsomorphismFailed { k, multiplier };
    if harts.scaled_connection(multiplier) != tl.connection_set() {
        return Err(failed);
    }
    if harts.iso_multiplier(&tl)?.is_none() {
        return Err(failed);
    }
    Ok(multiplier)
}

pub fn harts_spec(k: u64) -> Result<HartsSpec, HartsError> {
    let multiplier = harts_iso_tl(k)?;
    let harts = harts_graph(k)?;
    let tl = tl_circulant(k - 1)?;
    Ok(HartsSpec {
        k,
        n: harts.n(),
        tl_conn: tl.connection_set().to_vec(),
        harts_conn: harts.connection_set().to_vec(),
        multiplier,
    })
}

/// `diameter(TL_{n_k}) == k`.
pub fn tl_diameter_check(k: u64) -> Result<bool, HartsError> {
    Ok(tl_graph(k)?.diameter()? == k)
}
