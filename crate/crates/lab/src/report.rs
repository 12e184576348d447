//! Campaign execution on a thread pool, and report serialization.
//!
//! CSV columns, in this order, are frozen:
//! `instance_id, check, lhs, rhs, holds, vacuous, witness`.
//! The JSON report carries the same rows plus the relation, the instance
//! description and a per-check summary.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use plunnecke_core::campaign::{run_instance, CampaignConfig, VerificationReport};
use plunnecke_core::rational::format as fmt_q;

use crate::LabError;

pub const CSV_COLUMNS: [&str; 7] = ["instance_id", "check", "lhs", "rhs", "holds", "vacuous", "witness"];

/// Same result as `campaign::run_campaign`, whatever the scheduling.
pub fn run_parallel(cfg: &CampaignConfig) -> Result<VerificationReport, LabError> {
    cfg.validate()?;
    let jobs = cfg.jobs();
    let results = jobs.par_iter().map(|&(c, i)| run_instance(cfg, c, i)).collect::<Result<Vec<_>, _>>()?;
    Ok(VerificationReport::from_results(&jobs, results))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RowDoc {
    pub instance_id: String,
    pub check: String,
    pub lhs: String,
    pub relation: String,
    pub rhs: String,
    pub holds: bool,
    pub vacuous: bool,
    pub witness: String,
    pub instance: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub check: String,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub equalities: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    pub seed: u64,
    pub instances: usize,
    pub max_order: usize,
    pub k_max: usize,
    pub checks: Vec<String>,
    pub summary: Vec<SummaryDoc>,
    pub counterexamples: Vec<String>,
    /// Smallest `mu(AB)^k / mu(B)^(k-1)` over passing Theorem 1 rows.
    pub thm1_tightness: Option<String>,
    pub rows: Vec<RowDoc>,
}

impl ReportDoc {
    pub fn new(cfg: &CampaignConfig, rep: &VerificationReport) -> Self {
        let rows = rep
            .rows
            .iter()
            .map(|r| RowDoc {
                instance_id: r.instance_id.clone(),
                check: r.result.name.into(),
                lhs: fmt_q(&r.result.lhs),
                relation: r.result.relation.symbol().into(),
                rhs: fmt_q(&r.result.rhs),
                holds: r.result.holds,
                vacuous: r.result.vacuous,
                witness: r.result.witness.clone(),
                instance: r.result.instance.clone(),
            })
            .collect();
        ReportDoc {
            seed: cfg.seed,
            instances: cfg.instances,
            max_order: cfg.max_order,
            k_max: cfg.k_max,
            checks: cfg.checks.iter().map(|c| c.name().to_string()).collect(),
            summary: rep
                .summary
                .iter()
                .map(|s| SummaryDoc {
                    check: s.name.into(),
                    pass: s.pass,
                    fail: s.fail,
                    vacuous: s.vacuous,
                    equalities: s.equalities,
                })
                .collect(),
            counterexamples: rep.counterexamples.iter().map(|&i| rep.rows[i].instance_id.clone()).collect(),
            thm1_tightness: rep.thm1_tightness.as_ref().map(|(r, i)| format!("{} at {}", fmt_q(r), rep.rows[*i].instance_id)),
            rows,
        }
    }
}

pub fn write_csv<W: Write>(out: W, doc: &ReportDoc) -> Result<(), LabError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in &doc.rows {
        w.write_record([
            r.instance_id.as_str(),
            &r.check,
            &r.lhs,
            &r.rhs,
            if r.holds { "true" } else { "false" },
            if r.vacuous { "true" } else { "false" },
            &r.witness,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, doc: &ReportDoc) -> Result<(), LabError> {
    serde_json::to_writer_pretty(&mut out, doc)?;
    out.write_all(b"\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use plunnecke_core::campaign::{run_campaign, CheckKind};

    fn cfg() -> CampaignConfig {
        CampaignConfig { instances: 12, checks: vec![CheckKind::Prop12, CheckKind::Thm1, CheckKind::Levelset], ..Default::default() }
    }

    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(run_parallel(&cfg()).unwrap(), run_campaign(&cfg()).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let doc = ReportDoc::new(&cfg(), &run_parallel(&cfg()).unwrap());
        let mut buf = Vec::new();
        write_json(&mut buf, &doc).unwrap();
        assert_eq!(serde_json::from_slice::<ReportDoc>(&buf).unwrap(), doc);
    }

    #[test]
    fn csv_header_is_frozen() {
        let doc = ReportDoc::new(&cfg(), &run_parallel(&cfg()).unwrap());
        let mut buf = Vec::new();
        write_csv(&mut buf, &doc).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), "instance_id,check,lhs,rhs,holds,vacuous,witness");
        assert_eq!(text.lines().count(), doc.rows.len() + 1);
    }
}
