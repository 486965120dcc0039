//! Machine-readable campaign reports.
//!
//! A campaign produces one [`CheckRecord`] per checked inequality or
//! structural fact. Records are sorted by (theorem, tree code, move
//! descriptor), so two runs with the same configuration emit byte-identical
//! reports apart from the timestamp.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::ser::Serializer;
use serde::Serialize;

use crate::canon::CanonicalCode;

/// Which verified statement a record belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TheoremId {
    /// λ₁ of the complement strictly increases under a proper shift.
    GtsLambda,
    /// μ₁ of the complement strictly increases under a proper shift.
    GtsMu,
    /// ρ_α of the complement strictly increases under a proper shift.
    GtsRho(f64),
    /// λ₁ of the complement weakly increases under a Kelmans shift, with
    /// equality exactly when the shifted vertex is pendant.
    Kelmans,
    /// λ₁ of the complement strictly increases under collapse-and-pendant.
    Collapse,
    /// The path uniquely minimizes all three radii over non-star classes.
    Minimality,
    /// Complement distances equal 1 + adjacency off the diagonal whenever
    /// the diameter is at least 4.
    ComplementIdentity,
    /// The path is the unique minimal element of the proper-shift poset.
    PosetMinimal,
    /// The star is the unique maximal element of the proper-shift poset.
    PosetMaximal,
    /// Small-diameter three-pendant classes are missed by one-step collapse
    /// yet reached by proper shifts.
    CollapseGap,
}

impl TheoremId {
    pub fn label(&self) -> String {
        match self {
            TheoremId::GtsLambda => "GTS_LAMBDA".to_string(),
            TheoremId::GtsMu => "GTS_MU".to_string(),
            TheoremId::GtsRho(a) => format!("GTS_RHO({a})"),
            TheoremId::Kelmans => "KELMANS".to_string(),
            TheoremId::Collapse => "COLLAPSE".to_string(),
            TheoremId::Minimality => "MINIMALITY".to_string(),
            TheoremId::ComplementIdentity => "COMPLEMENT_IDENTITY".to_string(),
            TheoremId::PosetMinimal => "POSET_MINIMAL".to_string(),
            TheoremId::PosetMaximal => "POSET_MAXIMAL".to_string(),
            TheoremId::CollapseGap => "COLLAPSE_GAP".to_string(),
        }
    }

    /// Total order used for report sorting; alphas are nonnegative, so the
    /// raw bit pattern orders them correctly.
    fn sort_key(&self) -> (u8, u64) {
        match self {
            TheoremId::GtsLambda => (0, 0),
            TheoremId::GtsMu => (1, 0),
            TheoremId::GtsRho(a) => (2, a.to_bits()),
            TheoremId::Kelmans => (3, 0),
            TheoremId::Collapse => (4, 0),
            TheoremId::Minimality => (5, 0),
            TheoremId::ComplementIdentity => (6, 0),
            TheoremId::PosetMinimal => (7, 0),
            TheoremId::PosetMaximal => (8, 0),
            TheoremId::CollapseGap => (9, 0),
        }
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

/// What was checked, attached to a record under the `move` key.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Descriptor {
    /// A generalized tree shift.
    Shift { u: usize, v: usize, path: Vec<usize>, w: usize, proper: bool },
    /// A Kelmans shift oriented by Perron weight, plus which property of the
    /// image is recorded.
    OrientedEdge { u: usize, v: usize, check: String },
    /// A collapsed edge.
    Edge { edge: (usize, usize) },
    /// Which radius a comparison concerns.
    Radius { kind: String },
    /// A structural check localized at a vertex pair.
    PairCheck { check: String, pair: (usize, usize) },
    /// A named structural check.
    Check { check: String },
}

impl Descriptor {
    fn sort_string(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }
}

/// One checked fact with its numeric evidence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub theorem_id: TheoremId,
    pub tree_code: CanonicalCode,
    #[serde(rename = "move")]
    pub descriptor: Option<Descriptor>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub passed: bool,
    /// Row-major dump of the offending matrix, populated only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<f64>>,
}

impl CheckRecord {
    /// Strict inequality lhs > rhs with margin above `tol`.
    pub fn strict(
        theorem_id: TheoremId,
        tree_code: CanonicalCode,
        descriptor: Option<Descriptor>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        let margin = lhs - rhs;
        CheckRecord {
            theorem_id,
            tree_code,
            descriptor,
            lhs,
            rhs,
            margin,
            passed: margin > tol,
            matrix: None,
        }
    }

    /// Equality |lhs - rhs| within `tol`.
    pub fn equality(
        theorem_id: TheoremId,
        tree_code: CanonicalCode,
        descriptor: Option<Descriptor>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        let margin = lhs - rhs;
        CheckRecord {
            theorem_id,
            tree_code,
            descriptor,
            lhs,
            rhs,
            margin,
            passed: margin.abs() <= tol,
            matrix: None,
        }
    }

    /// Exact integer-valued check with an explicit verdict.
    pub fn exact(
        theorem_id: TheoremId,
        tree_code: CanonicalCode,
        descriptor: Option<Descriptor>,
        lhs: f64,
        rhs: f64,
        passed: bool,
    ) -> Self {
        CheckRecord {
            theorem_id,
            tree_code,
            descriptor,
            lhs,
            rhs,
            margin: lhs - rhs,
            passed,
            matrix: None,
        }
    }

    pub fn with_matrix_on_failure(mut self, entries: &[f64]) -> Self {
        if !self.passed {
            self.matrix = Some(entries.to_vec());
        }
        self
    }
}

/// Pass/fail tallies for one theorem within a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Numerical health counters aggregated over every matrix a campaign built.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    /// Matrices whose radius was computed by both engines.
    pub matrices: usize,
    /// Largest |power-iteration radius - Jacobi radius| observed.
    pub max_oracle_dev: f64,
    /// Largest power-iteration residual observed.
    pub max_residual: f64,
    /// Smallest Perron-vector entry observed (positive iff all vectors were
    /// entrywise positive).
    pub min_perron_entry: f64,
}

impl Diagnostics {
    pub fn new() -> Self {
        Diagnostics {
            matrices: 0,
            max_oracle_dev: 0.0,
            max_residual: 0.0,
            min_perron_entry: f64::INFINITY,
        }
    }

    pub fn absorb(&mut self, other: &Diagnostics) {
        self.matrices += other.matrices;
        self.max_oracle_dev = self.max_oracle_dev.max(other.max_oracle_dev);
        self.max_residual = self.max_residual.max(other.max_residual);
        self.min_perron_entry = self.min_perron_entry.min(other.min_perron_entry);
    }
}

impl Default for Diagnostics {
    fn default() -> Self {
        Self::new()
    }
}

/// Full result of one campaign at one order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub n: usize,
    pub alpha_grid: Vec<f64>,
    pub tol: f64,
    pub records: Vec<CheckRecord>,
    pub summary: BTreeMap<String, TheoremSummary>,
    pub min_margin: BTreeMap<String, f64>,
    pub diagnostics: Diagnostics,
    pub tool_version: String,
    pub timestamp: u64,
}

impl CampaignReport {
    pub fn new(
        campaign: &str,
        n: usize,
        alpha_grid: &[f64],
        tol: f64,
        mut records: Vec<CheckRecord>,
        diagnostics: Diagnostics,
    ) -> Self {
        records.sort_by(|a, b| {
            a.theorem_id
                .sort_key()
                .cmp(&b.theorem_id.sort_key())
                .then_with(|| a.tree_code.cmp(&b.tree_code))
                .then_with(|| {
                    let sa = a.descriptor.as_ref().map(Descriptor::sort_string);
                    let sb = b.descriptor.as_ref().map(Descriptor::sort_string);
                    sa.cmp(&sb)
                })
        });
        let mut summary: BTreeMap<String, TheoremSummary> = BTreeMap::new();
        let mut min_margin: BTreeMap<String, f64> = BTreeMap::new();
        for r in &records {
            let key = r.theorem_id.label();
            let entry = summary
                .entry(key.clone())
                .or_insert(TheoremSummary { total: 0, passed: 0, failed: 0 });
            entry.total += 1;
            if r.passed {
                entry.passed += 1;
            } else {
                entry.failed += 1;
            }
            min_margin
                .entry(key)
                .and_modify(|m| *m = m.min(r.margin))
                .or_insert(r.margin);
        }
        CampaignReport {
            campaign: campaign.to_string(),
            n,
            alpha_grid: alpha_grid.to_vec(),
            tol,
            records,
            summary,
            min_margin,
            diagnostics,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn failed_count(&self) -> usize {
        self.records.iter().filter(|r| !r.passed).count()
    }
}

/// Writes reports as a JSON array.
pub fn write_json<W: Write>(writer: W, reports: &[CampaignReport]) -> io::Result<()> {
    serde_json::to_writer_pretty(writer, reports).map_err(io::Error::from)
}

/// Writes all records as CSV rows: theorem_id, tree_code, move, lhs, rhs,
/// margin, passed.
pub fn write_csv<W: Write>(writer: W, reports: &[CampaignReport]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(["theorem_id", "tree_code", "move", "lhs", "rhs", "margin", "passed"])?;
    for report in reports {
        for r in &report.records {
            w.write_record([
                r.theorem_id.label(),
                r.tree_code.to_hex(),
                r.descriptor.as_ref().map(Descriptor::sort_string).unwrap_or_default(),
                format!("{}", r.lhs),
                format!("{}", r.rhs),
                format!("{}", r.margin),
                format!("{}", r.passed),
            ])?;
        }
    }
    w.flush()
}
