//! Sweep reports: one JSON object per instance, then a summary line.

use std::io::Write;

use serde::Serialize;

use crate::oracle::Prediction;
use crate::structure::StructuralProfile;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub graph6: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub profile: StructuralProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prediction: Option<Prediction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_count: Option<usize>,
    /// Predicted and brute-force κ, for κ sweeps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_brute: Option<String>,
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub errors: usize,
    pub exception_hits: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn from_records(records: Vec<Record>) -> Self {
        let mut summary = Summary {
            instances: records.len(),
            ..Summary::default()
        };
        for r in &records {
            if r.error.is_some() {
                summary.errors += 1;
            } else if r.matched {
                summary.matches += 1;
            } else {
                summary.mismatches += 1;
            }
            if r.profile.exception_spider.is_some() {
                summary.exception_hits += 1;
            }
        }
        Report { records, summary }
    }

    /// No mismatches and no per-instance failures.
    pub fn passed(&self) -> bool {
        self.summary.mismatches == 0 && self.summary.errors == 0
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Record> {
        self.records
            .iter()
            .filter(|r| !r.matched && r.error.is_none())
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut out, &serde_json::json!({ "summary": self.summary }))?;
        out.write_all(b"\n")
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    /// Flat projection of the records; the summary is not included.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "graph6",
            "n",
            "partition",
            "k",
            "case",
            "verdict",
            "brute_count",
            "kappa",
            "kappa_brute",
            "matched",
            "error",
        ])?;
        for r in &self.records {
            let opt = |v: Option<String>| v.unwrap_or_default();
            w.write_record([
                r.graph6.clone(),
                r.n.to_string(),
                opt(r.partition.clone()),
                opt(r.k.map(|k| k.to_string())),
                opt(r.prediction.as_ref().map(|p| p.case.to_string())),
                opt(r.prediction.as_ref().map(|p| p.verdict.to_string())),
                opt(r.brute_count.map(|c| c.to_string())),
                opt(r.kappa.clone()),
                opt(r.kappa_brute.clone()),
                r.matched.to_string(),
                opt(r.error.clone()),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}
