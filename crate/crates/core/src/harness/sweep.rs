//! Sweeps that compare oracle predictions with brute-force component
//! analysis, instance by instance.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use super::enumerate::{enumerate_connected_graphs, EnumerationLimit, BUILTIN_MAX_VERTICES};
use super::partitions::partitions_of;
use super::report::{Record, Report};
use crate::canon::are_isomorphic;
use crate::explorer::{FsGraph, DEFAULT_MAX_VERTICES};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, parse_graph6, Graph6Error};
use crate::oracle::{
    kappa_with_profile, predict_two_components_with_profile, predict_with_profile, Kappa, Verdict,
};
use crate::partition::Partition;
use crate::special::{self, ExceptionSpider};
use crate::structure::{classify, max_bridge_length, StructuralProfile};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Graph6 {
        path: PathBuf,
        line: usize,
        source: Graph6Error,
    },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationLimit),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Connectivity verdict (or exact count for cycles) against `K_p`.
    #[default]
    Connectivity,
    /// Exactly-two-components verdict against `K_{k, n-k}`.
    TwoComponents,
    /// κ against the least `k` with `FS(X, B_{k, n-k})` connected.
    Kappa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFamily {
    #[default]
    Connected,
    Trees,
    Cycles,
    Stopwatches,
    Bipartite,
}

impl GraphFamily {
    fn admits(self, g: &Graph) -> bool {
        match self {
            GraphFamily::Connected => g.is_connected(),
            GraphFamily::Trees => crate::structure::is_tree(g),
            GraphFamily::Cycles => crate::structure::is_cycle(g),
            GraphFamily::Stopwatches => {
                g.n() >= 4 && are_isomorphic(g, &special::stopwatch(g.n()).expect("n >= 4"))
            }
            GraphFamily::Bipartite => g.is_connected() && g.is_bipartite(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

fn default_min_parts() -> usize {
    2
}

fn default_jobs() -> usize {
    1
}

fn default_cap() -> usize {
    DEFAULT_MAX_VERTICES
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub n_min: usize,
    pub n_max: usize,
    #[serde(default)]
    pub check: Check,
    #[serde(default)]
    pub family: GraphFamily,
    /// graph6 file to read instead of the builtin enumerator.
    #[serde(default)]
    pub graphs: Option<PathBuf>,
    #[serde(default = "default_min_parts")]
    pub min_parts: usize,
    #[serde(default)]
    pub max_parts: Option<usize>,
    /// Keep only partitions whose smallest class has this size.
    #[serde(default)]
    pub smallest_part: Option<usize>,
    /// Drop star partitions `(1, n-1)`.
    #[serde(default)]
    pub exclude_star: bool,
    /// Keep only instances where `X` has no `(n - k_t)`-bridge.
    #[serde(default)]
    pub skip_bridged: bool,
    #[serde(default = "default_jobs")]
    pub jobs: usize,
    #[serde(default = "default_cap")]
    pub max_vertices: usize,
    #[serde(default)]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
    /// Adds per-record runtimes, which makes reports run-dependent.
    #[serde(default)]
    pub timings: bool,
}

impl SweepConfig {
    pub fn new(n_min: usize, n_max: usize) -> Self {
        SweepConfig {
            n_min,
            n_max,
            check: Check::default(),
            family: GraphFamily::default(),
            graphs: None,
            min_parts: 2,
            max_parts: None,
            smallest_part: None,
            exclude_star: false,
            skip_bridged: false,
            jobs: 1,
            max_vertices: DEFAULT_MAX_VERTICES,
            output: None,
            format: OutputFormat::default(),
            timings: false,
        }
    }

    /// Parses JSON when the text starts with `{`, otherwise `key = value`
    /// lines (TOML).
    pub fn parse(text: &str) -> Result<Self, SweepError> {
        let cfg: SweepConfig = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| SweepError::Config(e.to_string()))?
        } else {
            toml::from_str(text).map_err(|e| SweepError::Config(e.to_string()))?
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, SweepError> {
        let text = std::fs::read_to_string(path).map_err(|source| SweepError::Io {
            path: path.into(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(SweepError::Config(format!(
                "invalid n range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.graphs.is_none() && self.n_max > BUILTIN_MAX_VERTICES {
            return Err(SweepError::Config(format!(
                "builtin enumeration stops at n = {BUILTIN_MAX_VERTICES}; set `graphs` to a graph6 file"
            )));
        }
        if self.min_parts < 2 {
            return Err(SweepError::Config("min_parts must be at least 2".into()));
        }
        if self.check == Check::Connectivity
            && (self.n_min..=self.n_max).all(|n| self.partitions(n).is_empty())
        {
            return Err(SweepError::Config(
                "no partition passes the filter for any n".into(),
            ));
        }
        if self.jobs == 0 {
            return Err(SweepError::Config("jobs must be at least 1".into()));
        }
        Ok(())
    }

    fn partitions(&self, n: usize) -> Vec<Partition> {
        partitions_of(n, self.min_parts)
            .into_iter()
            .filter(|p| self.max_parts.is_none_or(|m| p.t() <= m))
            .filter(|p| self.smallest_part.is_none_or(|k| p.smallest() == k))
            .filter(|p| !(self.exclude_star && p.largest() + 1 == n))
            .collect()
    }
}

/// Graphs for a sweep, in a deterministic order.
pub fn load_graphs(cfg: &SweepConfig) -> Result<Vec<Graph>, SweepError> {
    let mut graphs = Vec::new();
    match &cfg.graphs {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| SweepError::Io {
                path: path.clone(),
                source,
            })?;
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') || line.starts_with(">>") {
                    continue;
                }
                let g = parse_graph6(line).map_err(|source| SweepError::Graph6 {
                    path: path.clone(),
                    line: i + 1,
                    source,
                })?;
                if (cfg.n_min..=cfg.n_max).contains(&g.n()) {
                    graphs.push(g);
                }
            }
        }
        None => {
            for n in cfg.n_min..=cfg.n_max {
                graphs.extend(enumerate_connected_graphs(n)?);
            }
        }
    }
    graphs.retain(|g| cfg.family.admits(g));
    Ok(graphs)
}

enum Target {
    Partition(Partition),
    Bipartition(usize),
    Book,
}

struct WorkItem<'a> {
    graph: &'a Graph,
    profile: &'a StructuralProfile,
    target: Target,
}

fn component_count(x: &Graph, y: &Graph, cap: usize) -> Result<usize, String> {
    FsGraph::with_cap(x, y, cap)
        .map(|fs| fs.components().count())
        .map_err(|e| e.to_string())
}

/// Least `k` in `1..n` with `FS(X, B_{k, n-k})` connected.
pub fn brute_kappa(x: &Graph, cap: usize) -> Result<Kappa, String> {
    let n = x.n();
    for k in 1..n {
        let book = special::book(k, n).map_err(|e| e.to_string())?;
        if component_count(x, &book, cap)? == 1 {
            return Ok(Kappa::Finite(k));
        }
    }
    Ok(Kappa::Infinite)
}

fn evaluate(item: &WorkItem<'_>, cfg: &SweepConfig) -> Record {
    let started = Instant::now();
    let x = item.graph;
    let n = x.n();
    let mut record = Record {
        graph6: encode_graph6(x),
        n,
        partition: None,
        k: None,
        profile: item.profile.clone(),
        prediction: None,
        brute_count: None,
        kappa: None,
        kappa_brute: None,
        matched: false,
        error: None,
        runtime_ms: None,
    };
    match &item.target {
        Target::Partition(p) => {
            record.partition = Some(p.to_string());
            let prediction = predict_with_profile(item.profile, p);
            let y = special::complete_multipartite(p).expect("partition fits graph size");
            match component_count(x, &y, cfg.max_vertices) {
                Ok(count) => {
                    record.brute_count = Some(count);
                    record.matched = match prediction.verdict {
                        Verdict::Count(c) => c == count as u64,
                        _ => prediction.connected() == Some(count == 1),
                    };
                }
                Err(e) => record.error = Some(e),
            }
            record.prediction = Some(prediction);
        }
        Target::Bipartition(k) => {
            record.k = Some(*k);
            let prediction = predict_two_components_with_profile(n, item.profile, *k);
            let y = special::complete_bipartite(*k, n).expect("2 <= k <= n/2");
            match component_count(x, &y, cfg.max_vertices) {
                Ok(count) => {
                    record.brute_count = Some(count);
                    record.matched = prediction.agrees_with(count);
                }
                Err(e) => record.error = Some(e),
            }
            record.prediction = Some(prediction);
        }
        Target::Book => {
            let predicted = kappa_with_profile(n, item.profile);
            record.kappa = Some(predicted.to_string());
            match brute_kappa(x, cfg.max_vertices) {
                Ok(observed) => {
                    record.kappa_brute = Some(observed.to_string());
                    record.matched = observed == predicted;
                }
                Err(e) => record.error = Some(e),
            }
        }
    }
    if cfg.timings {
        record.runtime_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    record
}

/// Runs every `(X, target)` instance the config selects. Record order is
/// graph order, then partition (or `k`) order, for any `jobs`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Report, SweepError> {
    cfg.validate()?;
    let graphs = load_graphs(cfg)?;
    run_sweep_on(cfg, &graphs)
}

pub fn run_sweep_on(cfg: &SweepConfig, graphs: &[Graph]) -> Result<Report, SweepError> {
    let profiles: Vec<StructuralProfile> = graphs.iter().map(classify).collect();
    let mut items = Vec::new();
    for (g, profile) in graphs.iter().zip(&profiles) {
        let n = g.n();
        match cfg.check {
            Check::Connectivity => {
                if n < 4 {
                    continue;
                }
                for p in cfg.partitions(n) {
                    if cfg.skip_bridged && profile.max_bridge_length >= n - p.largest() {
                        continue;
                    }
                    items.push(WorkItem {
                        graph: g,
                        profile,
                        target: Target::Partition(p),
                    });
                }
            }
            Check::TwoComponents => {
                if n < 5 || !profile.connected || !profile.bipartite || profile.is_cycle {
                    continue;
                }
                for k in 2..=n / 2 {
                    items.push(WorkItem {
                        graph: g,
                        profile,
                        target: Target::Bipartition(k),
                    });
                }
            }
            Check::Kappa => {
                if n >= 4 {
                    items.push(WorkItem {
                        graph: g,
                        profile,
                        target: Target::Book,
                    });
                }
            }
        }
    }
    let records: Vec<Record> = if cfg.jobs == 1 {
        items.iter().map(|item| evaluate(item, cfg)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| SweepError::Pool(e.to_string()))?;
        pool.install(|| items.par_iter().map(|item| evaluate(item, cfg)).collect())
    };
    Ok(Report::from_records(records))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionScan {
    pub spider: ExceptionSpider,
    /// `(k, component count)` for every admissible `k`.
    pub counts: Vec<(usize, usize)>,
    /// Admissible `k` without a `k`-bridge whose count is not two.
    pub exceptional: Vec<usize>,
}

/// Brute-forces each exceptional spider against `K_{k, n-k}` for every `k`
/// with `n >= 2k >= 4`.
pub fn scan_exception_spiders() -> Vec<ExceptionScan> {
    ExceptionSpider::ALL
        .iter()
        .map(|&spider| {
            let x = spider.graph();
            let n = x.n();
            let bridge = max_bridge_length(&x);
            let mut counts = Vec::new();
            let mut exceptional = Vec::new();
            for k in 2..=n / 2 {
                let y = special::complete_bipartite(k, n).expect("admissible k");
                let count = FsGraph::new(&x, &y).expect("n <= 8").components().count();
                counts.push((k, count));
                if bridge < k && count != 2 {
                    exceptional.push(k);
                }
            }
            ExceptionScan {
                spider,
                counts,
                exceptional,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_formats() {
        let toml = "n_min = 4\nn_max = 5\ncheck = \"kappa\"\njobs = 2\n";
        let cfg = SweepConfig::parse(toml).unwrap();
        assert_eq!(
            (cfg.n_min, cfg.n_max, cfg.check, cfg.jobs),
            (4, 5, Check::Kappa, 2)
        );
        let json = r#"{"n_min": 4, "n_max": 4, "family": "cycles", "format": "csv"}"#;
        let cfg = SweepConfig::parse(json).unwrap();
        assert_eq!(
            (cfg.family, cfg.format),
            (GraphFamily::Cycles, OutputFormat::Csv)
        );
        assert!(SweepConfig::parse("n_min = 4\nn_max = 3\n").is_err());
        assert!(SweepConfig::parse("n_min = 4\nn_max = 9\n").is_err());
        assert!(SweepConfig::parse("n_min = 4\nn_max = 5\nbogus = 1\n").is_err());
    }

    #[test]
    fn cycles_sweep_matches_formula() {
        let mut cfg = SweepConfig::new(4, 6);
        cfg.family = GraphFamily::Cycles;
        let report = run_sweep(&cfg).unwrap();
        assert_eq!(report.summary.instances, 4 + 6 + 10);
        assert!(
            report.passed(),
            "{:?}",
            report.mismatches().collect::<Vec<_>>()
        );
    }

    #[test]
    fn cap_violations_are_recorded() {
        let mut cfg = SweepConfig::new(5, 5);
        cfg.max_vertices = 4;
        cfg.family = GraphFamily::Trees;
        let report = run_sweep(&cfg).unwrap();
        assert!(report.summary.errors > 0);
        assert!(!report.passed());
        assert!(report.records[0].error.as_deref().unwrap().contains("cap"));
    }
}
