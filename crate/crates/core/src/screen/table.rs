use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::RootOfUnity;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteGroup, GroupElement};
use crate::reps::irreps;

use super::rules::{ClassContext, ScreenOptions};
use super::verdict::{Reason, Rule, Verdict, VerdictKind};

/// Rep label of a row covering every irrep of the centralizer.
pub const ALL_REPS: &str = "ALL";
/// `q_ss` of a row covering every irrep of the centralizer.
pub const ANY_SCALAR: &str = "any";

/// One screened `(class, representation)` pair; the JSON/CSV record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenRecord {
    pub group: String,
    pub class_rep: String,
    pub class_size: usize,
    pub centralizer: String,
    pub rep: String,
    pub q_ss: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u128>,
    pub reasons: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub negative_braiding: bool,
}

impl ScreenRecord {
    pub const FIELDS: [&'static str; 11] = [
        "group",
        "class_rep",
        "class_size",
        "centralizer",
        "rep",
        "q_ss",
        "verdict",
        "dimension",
        "reasons",
        "witness",
        "negative_braiding",
    ];

    /// Values in [`Self::FIELDS`] order; reasons joined by `"; "`.
    pub fn csv_fields(&self) -> Vec<String> {
        vec![
            self.group.clone(),
            self.class_rep.clone(),
            self.class_size.to_string(),
            self.centralizer.clone(),
            self.rep.clone(),
            self.q_ss.clone(),
            self.verdict.clone(),
            self.dimension.map(|d| d.to_string()).unwrap_or_default(),
            self.reasons.join("; "),
            self.witness.clone().unwrap_or_default(),
            self.negative_braiding.to_string(),
        ]
    }

    pub fn is_infinite(&self) -> bool {
        self.verdict == VerdictKind::InfiniteDim.tag()
    }

    /// Same wording as [`Verdict::summary`].
    pub fn summary(&self) -> String {
        match (self.verdict.as_str(), self.dimension) {
            ("InfiniteDim", _) => "infinite".into(),
            ("FiniteDim", Some(d)) if self.negative_braiding => format!("finite ({d}), negative braiding"),
            ("FiniteDim", Some(d)) => format!("finite ({d})"),
            _ if self.negative_braiding => "undetermined (negative braiding)".into(),
            _ => "undetermined".into(),
        }
    }
}

/// A record together with the class base point it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenRow {
    pub record: ScreenRecord,
    pub base: GroupElement,
}

fn record(ctx: &ClassContext, rep: &str, q: &str, v: &Verdict) -> ScreenRecord {
    ScreenRecord {
        group: ctx.group().kind().to_string(),
        class_rep: ctx.class().base().to_string(),
        class_size: ctx.class().len(),
        centralizer: ctx.centralizer().label().to_string(),
        rep: rep.to_string(),
        q_ss: q.to_string(),
        verdict: v.kind.tag().to_string(),
        dimension: v.kind.dimension(),
        reasons: v.reasons.iter().map(|r| r.to_string()).collect(),
        witness: v.witness.clone(),
        negative_braiding: v.negative_braiding,
    }
}

impl ClassContext<'_> {
    /// Screens one irrep and packages the result as a row.
    pub fn screen_row(&self, rho: &crate::reps::Irrep) -> Result<ScreenRow> {
        let verdict = self.screen(rho)?;
        let q = crate::reps::schur_scalar(rho, self.class().base())?;
        Ok(ScreenRow {
            record: record(self, rho.label(), &q.to_string(), &verdict),
            base: self.class().base().clone(),
        })
    }

    /// Rows for the class: a single `ALL` row when the rep-free rules settle
    /// every admissible `q_ss`, otherwise one row per irrep of the
    /// centralizer, or one row per `q_ss` when its irreps are unavailable.
    pub fn class_rows(&self) -> Result<Vec<ScreenRow>> {
        let base = self.class().base().clone();
        let row = |rep: &str, q: &str, v: &Verdict| ScreenRow {
            record: record(self, rep, q, v),
            base: base.clone(),
        };
        let scalars = RootOfUnity::all_of_order_dividing(base.order());
        let kinds: &[bool] = if self.centralizer().is_abelian() {
            &[false]
        } else {
            &[false, true]
        };
        let decided: Vec<Vec<Option<(Reason, Option<String>)>>> = scalars
            .iter()
            .map(|&q| kinds.iter().map(|&k| self.rep_free(q, k)).collect())
            .collect();
        if decided.iter().flatten().all(Option::is_some) {
            let mut reasons: Vec<Reason> = Vec::new();
            let mut witness = None;
            for (r, w) in decided.iter().flatten().flatten() {
                if !reasons.iter().any(|x| x.rule == r.rule) {
                    reasons.push(Reason::new(r.rule, ""));
                }
                if witness.is_none() && r.rule != Rule::TrivialSelfBraiding {
                    witness = w.clone();
                }
            }
            reasons.sort_by_key(|r| r.rule);
            if let Some(r) = reasons.iter_mut().find(|r| r.rule == Rule::TrivialSelfBraiding) {
                r.detail = "q_ss = 1".into();
            }
            for r in &mut reasons {
                if r.detail.is_empty() {
                    r.detail = "every q_ss != 1".into();
                }
            }
            let v = Verdict {
                kind: VerdictKind::InfiniteDim,
                reasons,
                witness,
                negative_braiding: false,
            };
            return Ok(vec![row(ALL_REPS, ANY_SCALAR, &v)]);
        }
        match irreps(self.centralizer()) {
            Ok(reps) => reps.iter().map(|rho| self.screen_row(rho)).collect(),
            Err(Error::UnsupportedCentralizer(label)) => Ok(scalars
                .iter()
                .zip(&decided)
                .map(|(q, d)| {
                    let v = if d.iter().all(Option::is_some) {
                        let mut reasons: Vec<Reason> = Vec::new();
                        for (r, _) in d.iter().flatten() {
                            if !reasons.contains(r) {
                                reasons.push(r.clone());
                            }
                        }
                        Verdict {
                            kind: VerdictKind::InfiniteDim,
                            reasons,
                            witness: d.iter().flatten().find_map(|(_, w)| w.clone()),
                            negative_braiding: false,
                        }
                    } else {
                        Verdict {
                            kind: VerdictKind::Undetermined,
                            reasons: vec![Reason::new(
                                Rule::Exhausted,
                                format!("centralizer reps unavailable ({label})"),
                            )],
                            witness: None,
                            negative_braiding: false,
                        }
                    };
                    row("*", &q.to_string(), &v)
                })
                .collect()),
            Err(e) => Err(e),
        }
    }
}

fn rows_for_group(group: &FiniteGroup, options: ScreenOptions) -> Result<Vec<ScreenRow>> {
    let classes: Vec<ConjugacyClass> = group.conjugacy_classes();
    let per_class: Vec<Result<Vec<ScreenRow>>> = classes
        .into_par_iter()
        .map(|c| ClassContext::with_options(group, c, options)?.class_rows())
        .collect();
    let mut out = Vec::new();
    for rows in per_class {
        out.extend(rows?);
    }
    Ok(out)
}

/// Screens every class of `D_n`.
pub fn table_dn(n: u32) -> Result<Vec<ScreenRow>> {
    table_dn_with(n, ScreenOptions::default())
}

pub fn table_dn_with(n: u32, options: ScreenOptions) -> Result<Vec<ScreenRow>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("D_n needs n >= 3, got {n}")));
    }
    rows_for_group(&FiniteGroup::dihedral(n)?, options)
}

/// Screens every class of `A_n`, `4 ≤ n ≤ 8`.
pub fn scan_an(n: usize) -> Result<Vec<ScreenRow>> {
    scan_an_with(n, ScreenOptions::default())
}

pub fn scan_an_with(n: usize, options: ScreenOptions) -> Result<Vec<ScreenRow>> {
    if !(4..=8).contains(&n) {
        return Err(Error::InvalidArgument(format!("scan needs 4 <= n <= 8, got {n}")));
    }
    rows_for_group(&FiniteGroup::alternating(n)?, options)
}

/// Family of a class of `D_n`: `e`, `y^m` (the central rotation),
/// `y^h`, `x` or `xy`.
pub fn dihedral_family(base: &GroupElement) -> Option<&'static str> {
    match *base {
        GroupElement::Dihedral { n, a: 0, b } => Some(if b == 0 {
            "e"
        } else if n % 2 == 0 && 2 * b == n {
            "y^m"
        } else {
            "y^h"
        }),
        GroupElement::Dihedral { n, a: 1, b } => Some(if n % 2 == 0 && b % 2 == 1 { "xy" } else { "x" }),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryLine {
    pub family: String,
    /// `any`, or the rep labels sharing the verdict.
    pub reps: Vec<String>,
    pub verdict: String,
}

/// Collapses dihedral rows to one line per (family, verdict), in order of
/// first appearance; families whose rows are all `ALL` rows get `any`.
pub fn summarize_dn(rows: &[ScreenRow]) -> Vec<SummaryLine> {
    let mut out: Vec<SummaryLine> = Vec::new();
    for row in rows {
        let family = dihedral_family(&row.base).unwrap_or("?").to_string();
        let verdict = row.record.summary();
        let rep = if row.record.rep == ALL_REPS {
            format!("any at {}", row.record.class_rep)
        } else {
            row.record.rep.clone()
        };
        match out.iter_mut().find(|l| l.family == family && l.verdict == verdict) {
            Some(line) => {
                if !line.reps.contains(&rep) {
                    line.reps.push(rep);
                }
            }
            None => out.push(SummaryLine {
                family,
                reps: vec![rep],
                verdict,
            }),
        }
    }
    // families settled without reps at every class read `any`
    let families: Vec<String> = out.iter().map(|l| l.family.clone()).collect();
    for line in &mut out {
        let lines_in_family = families.iter().filter(|f| **f == line.family).count();
        if lines_in_family == 1 && line.reps.iter().all(|r| r.starts_with("any at ")) {
            line.reps = vec!["any".into()];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trips() {
        let r = ScreenRecord {
            group: "An:6".into(),
            class_rep: "(1 2)(3 4 5 6)".into(),
            class_size: 90,
            centralizer: "Z4".into(),
            rep: "chi:2".into(),
            q_ss: "zeta(2)^1".into(),
            verdict: "Undetermined".into(),
            dimension: None,
            reasons: vec!["exhausted: no rule applies".into()],
            witness: None,
            negative_braiding: true,
        };
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with("{\"group\":\"An:6\",\"class_rep\""));
        assert!(!text.contains("dimension"));
        let back: ScreenRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
        assert_eq!(r.csv_fields().len(), ScreenRecord::FIELDS.len());
    }

    #[test]
    fn families() {
        assert_eq!(dihedral_family(&GroupElement::dihedral(6, 0, 3)), Some("y^m"));
        assert_eq!(dihedral_family(&GroupElement::dihedral(6, 0, 2)), Some("y^h"));
        assert_eq!(dihedral_family(&GroupElement::dihedral(6, 1, 1)), Some("xy"));
        assert_eq!(dihedral_family(&GroupElement::dihedral(5, 1, 1)), Some("x"));
        assert_eq!(dihedral_family(&GroupElement::dihedral(5, 0, 0)), Some("e"));
    }
}
