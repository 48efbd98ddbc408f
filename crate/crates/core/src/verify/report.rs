//! Campaign reports with a canonical text form.
//!
//! The canonical serialization is deterministic for a fixed config and
//! seed: keys render in a fixed order, rationals as `numerator/denominator`,
//! and violations in sweep order. Wall times are kept on the struct for
//! human display but never written into the canonical bytes, which is what
//! makes rerun-and-diff a meaningful check.

use super::{CampaignConfig, Theorem};
use crate::compare::ComparisonCertificate;
use num::BigRational;
use std::fmt::Write as _;
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// A theorem's claimed relation failed on a concrete instance.
    Violation,
    /// A computation failed (budget, cap); the instance is unverified.
    Error,
}

impl ViolationKind {
    fn label(self) -> &'static str {
        match self {
            ViolationKind::Violation => "violation",
            ViolationKind::Error => "error",
        }
    }
}

/// One failed instance, with enough data to reproduce it independently.
#[derive(Debug, Clone)]
pub struct Violation {
    /// graph6 of the input graph.
    pub graph6: String,
    /// Which transform instance failed and how.
    pub description: String,
    /// Rendered comparison certificate, "-" when none applies.
    pub certificate: String,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub theorem: Theorem,
    /// Transform instances checked (graph, site, partition) tuples.
    pub instances: u64,
    /// Equality outcomes matched to a recognized exceptional family.
    pub equality_exceptions: u64,
    pub violations: Vec<Violation>,
    /// Witness case frequencies, present for the adjacent split only.
    pub case_histogram: Option<[u64; 4]>,
    /// Witnesses with a strictly positive slack row (adjacent split only).
    pub witness_strict: Option<u64>,
    /// Free-form recorded outcomes (deterministic), e.g. unasserted cases.
    pub notes: Vec<String>,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub config: CampaignConfig,
    pub theorems: Vec<TheoremReport>,
}

impl VerificationReport {
    /// True when no swept instance violated its theorem.
    pub fn verified(&self) -> bool {
        self.theorems.iter().all(|t| t.violations.is_empty())
    }

    pub fn total_instances(&self) -> u64 {
        self.theorems.iter().map(|t| t.instances).sum()
    }

    pub fn total_violations(&self) -> usize {
        self.theorems.iter().map(|t| t.violations.len()).sum()
    }

    /// Deterministic serialization; identical config and seed yield
    /// byte-identical output. Schema: top-level `key: value` header lines,
    /// then one block per theorem opened by `theorem: <name>`, with
    /// violations and notes as indented continuation lines.
    pub fn to_canonical_text(&self) -> String {
        let cfg = &self.config;
        let mut out = String::new();
        out.push_str("format: rhograph-report 1\n");
        let _ = writeln!(out, "max_n: {}", cfg.max_n);
        let _ = writeln!(out, "seed: {}", cfg.seed);
        let _ = writeln!(out, "exact_mode: {}", super::exact_mode_name(cfg.exact_mode));
        let _ = writeln!(
            out,
            "enclosure_width: {}",
            rational_str(&cfg.spectral.enclosure_width)
        );
        let _ = writeln!(out, "random_samples: {}", cfg.random_samples);
        let _ = writeln!(
            out,
            "random_n_range: {}..{}",
            cfg.random_n_range.0, cfg.random_n_range.1
        );
        let _ = writeln!(out, "expand_samples: {}", cfg.expand_samples);
        let _ = writeln!(
            out,
            "expand_n_range: {}..{}",
            cfg.expand_n_range.0, cfg.expand_n_range.1
        );
        let _ = writeln!(
            out,
            "expand_parts_per_graph: {}",
            cfg.expand_parts_per_graph
        );
        let names: Vec<&str> = self.theorems.iter().map(|t| t.theorem.name()).collect();
        let _ = writeln!(out, "theorems: {}", names.join(" "));

        for t in &self.theorems {
            out.push('\n');
            let _ = writeln!(out, "theorem: {}", t.theorem.name());
            let _ = writeln!(out, "instances: {}", t.instances);
            let _ = writeln!(out, "equality_exceptions: {}", t.equality_exceptions);
            if let Some(hist) = t.case_histogram {
                let _ = writeln!(
                    out,
                    "case_histogram: {} {} {} {}",
                    hist[0], hist[1], hist[2], hist[3]
                );
            }
            if let Some(strict) = t.witness_strict {
                let _ = writeln!(out, "witness_strict: {strict}");
            }
            let _ = writeln!(out, "violations: {}", t.violations.len());
            for v in &t.violations {
                let _ = writeln!(out, "  {}: {}", v.kind.label(), v.graph6);
                let _ = writeln!(out, "    detail: {}", v.description);
                let _ = writeln!(out, "    certificate: {}", v.certificate);
            }
            for note in &t.notes {
                let _ = writeln!(out, "note: {note}");
            }
        }
        out
    }

    /// Short human-readable summary, including wall times.
    pub fn summary_lines(&self) -> String {
        let mut out = String::new();
        for t in &self.theorems {
            let _ = write!(
                out,
                "{}: {} instances, {} exceptions, {} violations",
                t.theorem.name(),
                t.instances,
                t.equality_exceptions,
                t.violations.len()
            );
            if let Some(h) = t.case_histogram {
                let _ = write!(out, ", cases [{} {} {} {}]", h[0], h[1], h[2], h[3]);
            }
            let _ = writeln!(out, " ({:.2}s)", t.wall_time.as_secs_f64());
        }
        let _ = writeln!(
            out,
            "total: {} instances, {} violations, {}",
            self.total_instances(),
            self.total_violations(),
            if self.verified() {
                "verified"
            } else {
                "NOT VERIFIED"
            }
        );
        out
    }
}

pub(crate) fn rational_str(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn interval_str(iv: &(BigRational, BigRational)) -> String {
    format!("[{}, {}]", rational_str(&iv.0), rational_str(&iv.1))
}

pub(crate) fn certificate_str(c: &ComparisonCertificate) -> String {
    match c {
        ComparisonCertificate::DisjointEnclosures { left, right } => format!(
            "disjoint-enclosures left={} right={}",
            interval_str(left),
            interval_str(right)
        ),
        ComparisonCertificate::ExactRootIsolation { left, right } => format!(
            "exact-root-isolation left={} right={}",
            interval_str(left),
            interval_str(right)
        ),
        ComparisonCertificate::CommonFactorEquality { interval } => {
            format!("common-factor-equality interval={}", interval_str(interval))
        }
    }
}
