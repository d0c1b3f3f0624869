use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use rotcirc::classifier::{self, frobenius_complement, is_semiregular};
use rotcirc::gamma::CutWitness;
use rotcirc::harts::{harts_spec, tl_order};
use rotcirc::numtheory::MAX_MODULUS;
use rotcirc::rotation::is_complete_rotation;
use rotcirc::{
    factorize, find_all_rotations, gossip_certificate, oracle, verify_first_kind_frobenius,
    verify_theorem_q, Circulant, ClassifyError, GammaError, GossipCertificate, HartsError,
    HartsSpec, RotationReport, TheoremReport,
};

use crate::parse::parse_connection_set;
use crate::record::ClassRecord;
use crate::CliError;

/// Brute-force cross-checks are on by default up to this `n`.
pub const ORACLE_DEFAULT_LIMIT: u64 = 2000;

/// `verify` runs BFS and a full unit scan, so it is kept to smaller `n`.
pub const VERIFY_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, Default)]
pub struct OracleMode {
    /// `--oracle`: run the brute-force checks regardless of `n`.
    pub forced: bool,
}

impl OracleMode {
    pub fn enabled_for(&self, n: u64) -> bool {
        self.forced || n <= ORACLE_DEFAULT_LIMIT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
    pub max_degree: u64,
    pub degrees: Vec<u64>,
    pub oracle_checked: bool,
    pub classes: Vec<ClassRecord>,
}

fn classify_error(e: ClassifyError) -> CliError {
    match e {
        ClassifyError::EvenKernel(n) => CliError::NoResult(format!(
            "n = {n} is even: a first-kind Frobenius circulant with kernel Z_n needs odd n, \
             so there is no rotational first-kind Frobenius circulant on {n} vertices"
        )),
        ClassifyError::InadmissibleDegree { d, max } => CliError::NoResult(format!(
            "no rotational first-kind Frobenius circulant of degree {d}: \
             d must be an even divisor of D = {max}"
        )),
        other => CliError::Input(other.to_string()),
    }
}

/// All rotational first-kind Frobenius circulants with kernel `Z_n`,
/// optionally restricted to one degree. Every class is verified before it
/// is returned.
pub fn classify(n: u64, degree: Option<u64>, mode: OracleMode) -> Result<Classification, CliError> {
    if n < 3 {
        return Err(CliError::Input(format!(
            "n = {n} is too small (need n >= 3)"
        )));
    }
    if n > MAX_MODULUS {
        return Err(CliError::Input(format!(
            "n = {n} exceeds the supported limit {MAX_MODULUS}"
        )));
    }
    let f = factorize(n).map_err(|e| CliError::Input(e.to_string()))?;
    let max_degree = classifier::max_degree(&f).map_err(classify_error)?;
    let degrees = match degree {
        Some(d) => vec![d],
        None => classifier::admissible_degrees(&f).map_err(classify_error)?,
    };
    let oracle_checked = mode.enabled_for(n);

    let mut classes = Vec::new();
    for &d in &degrees {
        let found = classifier::enumerate_classes(&f, d).map_err(classify_error)?;
        let expected = classifier::expected_class_count(&f, d).map_err(classify_error)?;
        if found.len() as u64 != expected {
            return Err(CliError::Internal(format!(
                "degree {d}: found {} classes, expected {expected}",
                found.len()
            )));
        }
        let records = found
            .par_iter()
            .map(|c| check_class(c, oracle_checked))
            .collect::<Result<Vec<_>, _>>()?;
        if oracle_checked {
            let graphs: Vec<Circulant> = found
                .iter()
                .map(|c| c.circulant())
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            if !oracle::pairwise_non_isomorphic(&graphs) {
                return Err(CliError::Internal(format!(
                    "degree {d}: two classes are isomorphic"
                )));
            }
        }
        classes.extend(records);
    }
    Ok(Classification {
        n,
        factors: f.factors().to_vec(),
        max_degree,
        degrees,
        oracle_checked,
        classes,
    })
}

fn check_class(
    c: &classifier::FrobeniusClass,
    oracle_checks: bool,
) -> Result<ClassRecord, CliError> {
    let internal =
        |msg: String| CliError::Internal(format!("class h = {} mod {}: {msg}", c.h, c.n));
    let g = c.circulant().map_err(|e| internal(e.to_string()))?;
    let rotational = is_complete_rotation(&g, c.h).map_err(|e| internal(e.to_string()))?;
    let report = verify_first_kind_frobenius(c).map_err(|e| internal(e.to_string()))?;
    if !rotational || !report.holds() {
        return Err(internal(format!(
            "verification failed: {:?}",
            report.violations
        )));
    }
    if oracle_checks {
        if !g.is_connected() {
            return Err(internal("BFS finds the graph disconnected".into()));
        }
        if !oracle::stabilizers_trivial(c.n, &c.subgroup) {
            return Err(internal(
                "a nonzero residue has a nontrivial stabilizer".into(),
            ));
        }
    }
    Ok(ClassRecord::new(c, rotational, report.holds()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: u64,
    pub connection_set: Vec<u64>,
    pub degree: u64,
    pub connected: bool,
    pub diameter: u64,
    pub rotations: Vec<u64>,
    /// `H <= Z_n^*` regular on `S` and semiregular, when one exists.
    pub frobenius_complement: Option<Vec<u64>>,
    /// Orbit data for the smallest rotation.
    pub rotation: Option<RotationReport>,
    pub certificate: Option<GossipCertificate>,
}

impl VerifyReport {
    pub fn rotational(&self) -> bool {
        !self.rotations.is_empty()
    }

    pub fn frobenius(&self) -> bool {
        self.frobenius_complement.is_some()
    }
}

pub fn verify(n: u64, set: &str) -> Result<VerifyReport, CliError> {
    let conn = parse_connection_set(set).map_err(|e| CliError::Input(e.to_string()))?;
    if n > VERIFY_LIMIT {
        return Err(CliError::Input(format!(
            "n = {n} exceeds the supported limit {VERIFY_LIMIT}"
        )));
    }
    let g = Circulant::new(n, conn).map_err(|e| CliError::Input(e.to_string()))?;
    if !g.is_connected() {
        return Err(CliError::Input(format!(
            "Cay(Z_{n}, S) is disconnected (gcd of n and S is {})",
            g.connection_set()
                .iter()
                .fold(n, |a, &s| rotcirc::numtheory::gcd(a, s))
        )));
    }
    let diameter = g
        .diameter()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let rotations = find_all_rotations(&g);
    let (rotation, certificate) = match rotations.first() {
        Some(&w) => {
            let report =
                rotcirc::rotation_report(n, w).map_err(|e| CliError::Internal(e.to_string()))?;
            let cert = gossip_certificate(&g, w).map_err(|e| CliError::Internal(e.to_string()))?;
            (Some(report), Some(cert))
        }
        None => (None, None),
    };
    let frobenius_complement = frobenius_complement(&g);
    if let Some(h) = &frobenius_complement {
        if !is_semiregular(n, h) || !oracle::stabilizers_trivial(n, h) {
            return Err(CliError::Internal(
                "complement fails the stabilizer oracle".into(),
            ));
        }
    }
    Ok(VerifyReport {
        n,
        connection_set: g.connection_set().to_vec(),
        degree: g.degree() as u64,
        connected: true,
        diameter,
        rotations,
        frobenius_complement,
        rotation,
        certificate,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaOutput {
    pub report: TheoremReport,
    /// Gossip certificate for the rotation `h`; holds only when `r = 0`
    /// (or in the cycle case, where the rotation fixes nothing).
    pub certificate: GossipCertificate,
}

pub fn gamma(p: u64, e: u32, r: u32) -> Result<GammaOutput, CliError> {
    let report = verify_theorem_q(p, e, r).map_err(|err| match err {
        GammaError::Circulant(_) | GammaError::Rotation(_) | GammaError::Num(_) => {
            CliError::Internal(err.to_string())
        }
        other => CliError::Input(other.to_string()),
    })?;
    if !report.holds() {
        return Err(CliError::Internal(format!(
            "theorem check failed: {report:?}"
        )));
    }
    let (spec, g) = rotcirc::build_gamma(p, e, r).map_err(|e| CliError::Internal(e.to_string()))?;
    let certificate =
        gossip_certificate(&g, spec.h).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(GammaOutput {
        report,
        certificate,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HartsOutput {
    pub spec: HartsSpec,
    /// Diameter of the mesh of size `k` (equal to that of `TL_{n_{k-1}}`).
    pub harts_diameter: u64,
    /// Order and diameter of `TL_{n_k}`.
    pub tl_next_order: u64,
    pub tl_next_diameter: u64,
    pub complete: bool,
}

pub fn harts(k: u64) -> Result<HartsOutput, CliError> {
    let spec = harts_spec(k).map_err(|e| match e {
        HartsError::SizeTooSmall(_) => CliError::Input(format!("SizeTooSmall: {e}")),
        other => CliError::Internal(other.to_string()),
    })?;
    let internal = |e: HartsError| CliError::Internal(e.to_string());
    let mesh = rotcirc::harts_graph(k).map_err(internal)?;
    let harts_diameter = mesh
        .diameter()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let tl_next = rotcirc::tl_graph(k).map_err(internal)?;
    let tl_next_diameter = tl_next
        .diameter()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(HartsOutput {
        complete: mesh.degree() as u64 == mesh.n() - 1,
        spec,
        harts_diameter,
        tl_next_order: tl_order(k),
        tl_next_diameter,
    })
}

pub fn witness_line(report: &TheoremReport) -> String {
    match &report.witness {
        Some(CutWitness::Blocked { target }) => {
            format!("witness: vertex {target} unreachable from 0 in Γ - F")
        }
        Some(CutWitness::Paths { paths }) => {
            let shown: Vec<String> = paths
                .iter()
                .map(|p| p.iter().map(u64::to_string).collect::<Vec<_>>().join("-"))
                .collect();
            format!(
                "witness: paths {} avoid F and reach every free orbit",
                shown.join(", ")
            )
        }
        None => "witness: none".to_string(),
    }
}
