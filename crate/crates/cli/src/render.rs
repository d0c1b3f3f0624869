//! Text, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::commands::{witness_line, Classification, GammaOutput, HartsOutput, VerifyReport};
use crate::record::{pair_display, ClassRecord};
use crate::CliError;

pub fn classification_table(c: &Classification) -> String {
    let mut out = String::new();
    let factors: Vec<String> = c
        .factors
        .iter()
        .map(|&(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    let _ = writeln!(
        out,
        "n = {} = {}, D = {}",
        c.n,
        factors.join(" x "),
        c.max_degree
    );
    let header = [
        "d",
        "(m_1, ..., m_l)",
        "h",
        "S = H = <h>",
        "rotational",
        "frobenius",
        "gossip",
    ];
    let rows: Vec<[String; 7]> = c
        .classes
        .iter()
        .map(|r| {
            [
                r.d.to_string(),
                r.m_display(),
                r.h_signed.clone(),
                r.connection_display.clone(),
                r.rotational.to_string(),
                r.frobenius.to_string(),
                r.gossip_bound.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(&header.map(String::from)));
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    let _ = writeln!(out, "{}", rule.join("-+-"));
    for row in &rows {
        let _ = writeln!(out, "{}", line(row));
    }
    if c.max_degree == 2 && c.degrees == [2] {
        let _ = writeln!(
            out,
            "D = 2: no rotational first-kind Frobenius circulant beyond the {}-cycle",
            c.n
        );
    }
    let _ = writeln!(
        out,
        "{} class(es); oracle checks {}",
        c.classes.len(),
        if c.oracle_checked {
            "passed"
        } else {
            "skipped"
        }
    );
    out
}

/// Flat CSV view of a [`ClassRecord`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub n: u64,
    pub d: u64,
    /// Space-separated exponents.
    pub m_vector: String,
    pub h: u64,
    pub h_signed: String,
    /// Space-separated residues.
    pub connection_set: String,
    pub connection_display: String,
    pub rotational: bool,
    pub frobenius: bool,
    pub gossip_bound: u64,
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn split(s: &str) -> Result<Vec<u64>, std::num::ParseIntError> {
    s.split_whitespace().map(str::parse).collect()
}

impl From<&ClassRecord> for CsvRow {
    fn from(r: &ClassRecord) -> Self {
        CsvRow {
            n: r.n,
            d: r.d,
            m_vector: join(&r.m_vector),
            h: r.h,
            h_signed: r.h_signed.clone(),
            connection_set: join(&r.connection_set),
            connection_display: r.connection_display.clone(),
            rotational: r.rotational,
            frobenius: r.frobenius,
            gossip_bound: r.gossip_bound,
        }
    }
}

impl TryFrom<CsvRow> for ClassRecord {
    type Error = std::num::ParseIntError;

    fn try_from(row: CsvRow) -> Result<Self, Self::Error> {
        Ok(ClassRecord {
            n: row.n,
            d: row.d,
            m_vector: split(&row.m_vector)?,
            h: row.h,
            h_signed: row.h_signed,
            connection_set: split(&row.connection_set)?,
            connection_display: row.connection_display,
            rotational: row.rotational,
            frobenius: row.frobenius,
            gossip_bound: row.gossip_bound,
        })
    }
}

pub fn classification_csv(c: &Classification) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &c.classes {
        w.serialize(CsvRow::from(r))
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

pub fn parse_csv(text: &str) -> Result<Vec<ClassRecord>, Box<dyn std::error::Error>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for row in rdr.deserialize::<CsvRow>() {
        out.push(ClassRecord::try_from(row?)?);
    }
    Ok(out)
}

pub fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verify_text(r: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph: Cay(Z_{}, {{{}}})",
        r.n,
        join(&r.connection_set).replace(' ', ", ")
    );
    let _ = writeln!(out, "degree: {}", r.degree);
    let _ = writeln!(out, "connected: {}", yes_no(r.connected));
    let _ = writeln!(out, "diameter: {}", r.diameter);
    if r.rotations.is_empty() {
        let _ = writeln!(out, "rotational: no (no unit permutes S in a single cycle)");
    } else {
        let _ = writeln!(
            out,
            "rotational: yes; complete rotations: {}",
            join(&r.rotations).replace(' ', ", ")
        );
    }
    match &r.frobenius_complement {
        Some(h) => {
            let _ = writeln!(
                out,
                "first-kind Frobenius: yes; complement H = {{{}}}",
                join(h).replace(' ', ", ")
            );
        }
        None => {
            let _ = writeln!(out, "first-kind Frobenius: no");
        }
    }
    if let (Some(rot), Some(cert)) = (&r.rotation, &r.certificate) {
        let _ = writeln!(out, "rotation {} has order {}", rot.w, rot.d);
        if rot.fixed.is_empty() {
            let _ = writeln!(out, "fixed set F: empty");
        } else {
            let _ = writeln!(
                out,
                "fixed set F ({} vertices): {{{}}}",
                rot.fixed.len(),
                join(rot.fixed.members()).replace(' ', ", ")
            );
        }
        let _ = writeln!(out, "F independent: {}", yes_no(cert.fixed_independent));
        let _ = writeln!(out, "F vertex-cut: {}", yes_no(cert.fixed_is_cut));
        match cert.gossip_time {
            Some(t) if cert.exact => {
                let _ = writeln!(
                    out,
                    "gossip certificate: holds; gossip time = (n-1)/d = {t} exactly"
                );
            }
            Some(t) => {
                let _ = writeln!(
                    out,
                    "gossip certificate: holds; gossip time = ceil((n-1)/d) = {t}"
                );
            }
            None => {
                let _ = writeln!(out, "gossip certificate: fails");
            }
        }
    }
    out
}

pub fn gamma_text(g: &GammaOutput) -> String {
    let rep = &g.report;
    let s = &rep.spec;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Γ_(q,r) with p = {}, e = {}, r = {}: q = {}, h = (p-1)^(p^r) = {}",
        s.p, s.e, s.r, s.q, s.h
    );
    let _ = writeln!(
        out,
        "degree: {} (order of h check: {})",
        s.degree,
        yes_no(rep.degree_ok)
    );
    let _ = writeln!(
        out,
        "H = {{p^(r+1) k ± 1}}: {}",
        yes_no(rep.subgroup_form_ok)
    );
    let _ = writeln!(out, "F = nonzero multiples of p, |F| = {}", rep.fixed_size);
    if rep.is_cycle_case() {
        let _ = writeln!(
            out,
            "r = e - 1: Γ is the {}-cycle and h = -1 fixes no vertex",
            s.q
        );
    } else {
        let _ = writeln!(
            out,
            "F equals the fixed points of h: {}",
            yes_no(rep.fixed_formula_ok)
        );
        let orbits = s.p.pow(s.r) * (s.p - 1) / 2;
        let noun = if orbits == 1 { "orbit" } else { "orbits" };
        let _ = writeln!(
            out,
            "free part is {orbits} {noun} of units: {}",
            yes_no(rep.free_orbits_ok)
        );
    }
    let _ = writeln!(out, "F independent: {}", yes_no(rep.independent));
    if rep.vertex_cut {
        let _ = writeln!(out, "F IS a vertex-cut; {}", witness_line(rep));
        if !rep.is_cycle_case() {
            let _ = writeln!(
                out,
                "counterexample family Γ_(p^e, r >= 1): the fixed-point set of a complete rotation separates the graph"
            );
        }
    } else {
        let bound = g
            .certificate
            .gossip_time
            .map(|t| t.to_string())
            .unwrap_or_else(|| "-".into());
        let _ = writeln!(out, "F is NOT a vertex-cut; gossip bound {bound}");
        let _ = writeln!(out, "{}", witness_line(rep));
    }
    let _ = writeln!(
        out,
        "dichotomy (vertex-cut iff r >= 1): {}",
        yes_no(rep.dichotomy_ok)
    );
    out
}

pub fn harts_text(h: &HartsOutput) -> String {
    let s = &h.spec;
    let mut out = String::new();
    let _ = writeln!(out, "HARTS of size {}: n = 3k^2 - 3k + 1 = {}", s.k, s.n);
    let _ = writeln!(
        out,
        "mesh connection set: {}",
        pair_display(&pairs(&s.harts_conn, s.n))
    );
    let _ = writeln!(
        out,
        "TL_{} connection set:  {}",
        s.n,
        pair_display(&pairs(&s.tl_conn, s.n))
    );
    let _ = writeln!(out, "isomorphism: x -> {} x (mod {})", s.multiplier, s.n);
    let _ = writeln!(out, "diameter of mesh and TL_{}: {}", s.n, h.harts_diameter);
    let _ = writeln!(
        out,
        "diameter of TL_{}: {}",
        h.tl_next_order, h.tl_next_diameter
    );
    if h.complete {
        let _ = writeln!(out, "note: both graphs are the complete graph K_{}", s.n);
    }
    out
}

fn pairs(conn: &[u64], n: u64) -> Vec<u64> {
    let mut p: Vec<u64> = conn.iter().map(|&s| s.min(n - s)).collect();
    p.sort_unstable();
    p.dedup();
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commands::{classify, OracleMode};

    #[test]
    fn csv_matches_json() {
        let c = classify(6253, None, OracleMode::default()).unwrap();
        let csv = classification_csv(&c).unwrap();
        let from_csv = parse_csv(&csv).unwrap();
        let text = json(&c).unwrap();
        let from_json: Classification = serde_json::from_str(&text).unwrap();
        assert_eq!(from_csv, from_json.classes);
        assert_eq!(from_json, c);
    }

    #[test]
    fn table_lists_every_class() {
        let c = classify(6253, None, OracleMode::default()).unwrap();
        let t = classification_table(&c);
        assert!(t.contains("n = 6253 = 13^2 x 37, D = 12"));
        for r in &c.classes {
            assert!(t.contains(&r.connection_display));
        }
        assert!(t.contains("9 class(es)"));
    }

    #[test]
    fn table_matches_csv() {
        for n in [6253, 1105, 9, 15] {
            let c = classify(n, None, OracleMode::default()).unwrap();
            let rows = parse_csv(&classification_csv(&c).unwrap()).unwrap();
            let table = classification_table(&c);
            let body: Vec<Vec<&str>> = table
                .lines()
                .skip(3)
                .take(rows.len())
                .map(|l| l.split(" | ").map(str::trim).collect())
                .collect();
            assert_eq!(body.len(), rows.len());
            for (cells, r) in body.iter().zip(&rows) {
                let want = [
                    r.d.to_string(),
                    r.m_display(),
                    r.h_signed.clone(),
                    r.connection_display.clone(),
                    r.rotational.to_string(),
                    r.frobenius.to_string(),
                    r.gossip_bound.to_string(),
                ];
                assert_eq!(cells.as_slice(), want.as_slice(), "n = {n}");
            }
        }
    }

    #[test]
    fn cycle_only_note() {
        let t = classification_table(&classify(15, None, OracleMode::default()).unwrap());
        assert!(t.contains("no rotational first-kind Frobenius circulant beyond the 15-cycle"));
    }
}
