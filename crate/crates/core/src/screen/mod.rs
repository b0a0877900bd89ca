//! The verdict engine: screening rules for `M(O, ρ)` and whole-group scans.

mod rules;
mod table;
mod verdict;

pub use rules::{screen, ClassContext, ScreenOptions};
pub use table::{
    dihedral_family, scan_an, scan_an_with, summarize_dn, table_dn, table_dn_with, ScreenRecord, ScreenRow,
    SummaryLine, ALL_REPS, ANY_SCALAR,
};
pub use verdict::{Reason, Rule, Verdict, VerdictKind};
