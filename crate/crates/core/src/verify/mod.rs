//! Theorem-verification campaigns, the proper-shift poset, and
//! machine-readable reports.

pub mod campaigns;
pub mod poset;
pub mod report;

pub use campaigns::{
    check_collapse, check_counterexample, check_gts_monotonicity, check_identity, check_kelmans,
    check_minimality, check_poset, DEFAULT_ALPHA_GRID, DEFAULT_MARGIN_TOL, ORACLE_TOL,
    PERRON_TIE_TOL,
};
pub use poset::{build_poset, GtsPoset};
pub use report::{
    write_csv, write_json, CampaignReport, CheckRecord, Descriptor, Diagnostics, TheoremId,
    TheoremSummary,
};
