//! Exhaustive and randomized verification campaigns.
//!
//! Each enabled claim is swept over every connected labeled graph up to a
//! size bound (no isomorphism reduction: redundant copies are cheap
//! insurance against canonical-form bugs) plus seeded random graphs where
//! the claim calls for larger instances. Every comparison goes through the
//! certified comparator, so a reported violation would come with an exact
//! certificate, and equality outcomes must match a recognized exceptional
//! family. Sweeps are deterministic: fixed chunk boundaries, ordered
//! merges, and all randomness from the configured seed.

pub mod report;

use crate::compare::{rho_compare_cached, ExactMode, RhoRelation};
use crate::graph::{make_family, upper_triangle_pairs, Graph, NamedFamily, VertexId};
use crate::graph6::to_graph6;
use crate::spectral::{spectral_radius_with, SpectralConfig};
use crate::transforms::{
    expand_to_complete, find_internal_paths, split_vertex_adjacent, split_vertex_nonadjacent,
    subdivide_edge, ExpandSpec, SplitSpec,
};
use crate::witness::construct_split_witness_with;
use num::{BigInt, BigRational};
use rand::prelude::*;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use report::{certificate_str, rational_str, TheoremReport, VerificationReport, Violation, ViolationKind};
use std::collections::BTreeSet;
use std::time::Instant;
use thiserror::Error;

pub const EXHAUSTIVE_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("exhaustive enumeration supports up to {cap} vertices, got {n}")]
    SizeCap { n: usize, cap: usize },
    #[error("no connected draw within {attempts} attempts")]
    RejectionCap { attempts: usize },
    #[error("invalid configuration: {0}")]
    BadConfig(String),
}

/// Structural family recognizer outcome. At most one family is reported;
/// overlaps resolve by the fixed priority complete, star, cycle, then the
/// double-spider family, so K_2 and K_3 read as complete graphs, the
/// two-edge path as Star(2), and the 4-leaf double spider as Star(4).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recognized {
    Complete(usize),
    Star(usize),
    Cycle(usize),
    TildeD(usize),
    None,
}

pub fn recognize(g: &Graph) -> Recognized {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Recognized::None;
    }
    if (0..n).all(|v| g.degree(v) == n - 1) {
        return Recognized::Complete(n);
    }
    if n >= 3 {
        let centers = (0..n).filter(|&v| g.degree(v) == n - 1).count();
        let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();
        if centers == 1 && leaves == n - 1 {
            return Recognized::Star(n - 1);
        }
    }
    if (0..n).all(|v| g.degree(v) == 2) {
        return Recognized::Cycle(n);
    }
    if n >= 6 && g.edge_count() == n - 1 {
        // Tree with degree counts {3: 2, 2: n-6, 1: 4} where each branch
        // vertex carries exactly two leaves: the double spider on n
        // vertices, parameter n-1 in the family's naming.
        let mut count = [0usize; 4];
        for v in 0..n {
            let d = g.degree(v);
            if d > 3 {
                return Recognized::None;
            }
            count[d] += 1;
        }
        if count[3] == 2 && count[1] == 4 && count[2] == n - 6 {
            let branches_ok = (0..n).filter(|&v| g.degree(v) == 3).all(|v| {
                g.neighbors(v).iter().filter(|&&u| g.degree(u) == 1).count() == 2
            });
            if branches_ok {
                return Recognized::TildeD(n - 1);
            }
        }
    }
    Recognized::None
}

pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> = upper_triangle_pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_edges(n, &edges).expect("mask bits map to valid edges")
}

/// All connected labeled graphs on `n` vertices, in ascending order of the
/// upper-triangle edge bitmask.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    if n == 0 {
        return Err(VerifyError::BadConfig("need at least one vertex".into()));
    }
    if n > EXHAUSTIVE_CAP {
        return Err(VerifyError::SizeCap {
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let masks = 1u64 << (n * (n - 1) / 2);
    Ok((0..masks).filter_map(move |mask| {
        let g = graph_from_mask(n, mask);
        g.is_connected().then_some(g)
    }))
}

const REJECTION_ATTEMPTS: usize = 10_000;

/// One Erdos-Renyi draw conditioned on connectivity by rejection.
pub fn random_connected_graph<R: Rng>(
    n: usize,
    edge_prob: f64,
    rng: &mut R,
) -> Result<Graph, VerifyError> {
    if n < 2 {
        return Err(VerifyError::BadConfig(format!(
            "random graphs need at least 2 vertices, got {n}"
        )));
    }
    if !(edge_prob > 0.0 && edge_prob < 1.0) {
        return Err(VerifyError::BadConfig(format!(
            "edge probability must be in (0, 1), got {edge_prob}"
        )));
    }
    let pairs = upper_triangle_pairs(n);
    for _ in 0..REJECTION_ATTEMPTS {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(edge_prob))
            .collect();
        let g = Graph::from_edges(n, &edges).expect("pairs are valid edges");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(VerifyError::RejectionCap {
        attempts: REJECTION_ATTEMPTS,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Theorem {
    Subdivision,
    SplitAdjacent,
    SplitNonadjacent,
    Expand,
    LemmaDeg4,
    PfMonotone,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Subdivision,
        Theorem::SplitAdjacent,
        Theorem::SplitNonadjacent,
        Theorem::Expand,
        Theorem::LemmaDeg4,
        Theorem::PfMonotone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Subdivision => "subdivision",
            Theorem::SplitAdjacent => "split-adjacent",
            Theorem::SplitNonadjacent => "split-nonadjacent",
            Theorem::Expand => "expand",
            Theorem::LemmaDeg4 => "lemma-deg4",
            Theorem::PfMonotone => "pf-monotone",
        }
    }

    pub fn parse(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.name() == s)
    }
}

pub(crate) fn exact_mode_name(mode: ExactMode) -> &'static str {
    match mode {
        ExactMode::OnOverlap => "on-overlap",
        ExactMode::Always => "always",
    }
}

#[derive(Debug, Clone)]
pub struct CampaignConfig {
    /// Exhaustive sweeps cover all connected labeled graphs up to this order.
    pub max_n: usize,
    /// Claims to verify; deduplicated and run in canonical order.
    pub theorems: Vec<Theorem>,
    /// Sample count for the edge-addition monotonicity sweep.
    pub random_samples: usize,
    /// Inclusive vertex-count range for those samples.
    pub random_n_range: (usize, usize),
    pub seed: u64,
    pub exact_mode: ExactMode,
    pub spectral: SpectralConfig,
    /// Sample count for the randomized clique-expansion sweep.
    pub expand_samples: usize,
    /// Inclusive vertex-count range for expansion samples.
    pub expand_n_range: (usize, usize),
    /// Random 3-partitions tried per sampled graph.
    pub expand_parts_per_graph: usize,
}

impl Default for CampaignConfig {
    fn default() -> CampaignConfig {
        CampaignConfig {
            max_n: 6,
            theorems: Theorem::ALL.to_vec(),
            random_samples: 200,
            random_n_range: (4, 10),
            seed: 0,
            exact_mode: ExactMode::OnOverlap,
            spectral: SpectralConfig::default(),
            expand_samples: 100,
            expand_n_range: (10, 14),
            expand_parts_per_graph: 5,
        }
    }
}

#[derive(Debug, Clone, Default)]
struct SweepStats {
    instances: u64,
    equality_exceptions: u64,
    violations: Vec<Violation>,
    case_histogram: [u64; 4],
    witness_strict: u64,
    notes: Vec<String>,
}

impl SweepStats {
    fn merge(&mut self, other: SweepStats) {
        self.instances += other.instances;
        self.equality_exceptions += other.equality_exceptions;
        self.violations.extend(other.violations);
        for (a, b) in self.case_histogram.iter_mut().zip(other.case_histogram) {
            *a += b;
        }
        self.witness_strict += other.witness_strict;
        self.notes.extend(other.notes);
    }

    fn violation(&mut self, g: &Graph, description: String, certificate: String) {
        self.violations.push(Violation {
            graph6: to_graph6(g),
            description,
            certificate,
            kind: ViolationKind::Violation,
        });
    }

    fn error(&mut self, g: &Graph, description: String) {
        self.violations.push(Violation {
            graph6: to_graph6(g),
            description,
            certificate: "-".into(),
            kind: ViolationKind::Error,
        });
    }
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<VerificationReport, VerifyError> {
    if cfg.max_n == 0 {
        return Err(VerifyError::BadConfig("max_n must be at least 1".into()));
    }
    if cfg.max_n > EXHAUSTIVE_CAP {
        return Err(VerifyError::SizeCap {
            n: cfg.max_n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    if cfg.random_n_range.0 < 2 || cfg.random_n_range.0 > cfg.random_n_range.1 {
        return Err(VerifyError::BadConfig(format!(
            "bad random_n_range {}..{}",
            cfg.random_n_range.0, cfg.random_n_range.1
        )));
    }
    if cfg.expand_n_range.0 < 10 || cfg.expand_n_range.0 > cfg.expand_n_range.1 {
        return Err(VerifyError::BadConfig(format!(
            "expansion samples need at least 10 vertices, got range {}..{}",
            cfg.expand_n_range.0, cfg.expand_n_range.1
        )));
    }
    let theorems: Vec<Theorem> = {
        let set: BTreeSet<Theorem> = cfg.theorems.iter().copied().collect();
        set.into_iter().collect()
    };

    let mut reports = Vec::with_capacity(theorems.len());
    for th in theorems {
        let start = Instant::now();
        let stats = match th {
            Theorem::Subdivision => sweep_subdivision(cfg),
            Theorem::SplitAdjacent => sweep_split_adjacent(cfg),
            Theorem::SplitNonadjacent => sweep_split_nonadjacent(cfg),
            Theorem::Expand => sweep_expand(cfg)?,
            Theorem::LemmaDeg4 => sweep_lemma_deg4(cfg),
            Theorem::PfMonotone => sweep_pf_monotone(cfg)?,
        };
        let adjacent = th == Theorem::SplitAdjacent;
        reports.push(TheoremReport {
            theorem: th,
            instances: stats.instances,
            equality_exceptions: stats.equality_exceptions,
            violations: stats.violations,
            case_histogram: adjacent.then_some(stats.case_histogram),
            witness_strict: adjacent.then_some(stats.witness_strict),
            notes: stats.notes,
            wall_time: start.elapsed(),
        });
    }
    Ok(VerificationReport {
        config: cfg.clone(),
        theorems: reports,
    })
}

/// Runs `per_graph` over every connected labeled graph with at most
/// `max_n` vertices and merges the results in enumeration order. Chunked
/// so results are deterministic under any thread schedule.
fn exhaustive_sweep<F>(max_n: usize, per_graph: F) -> SweepStats
where
    F: Fn(&Graph) -> SweepStats + Sync,
{
    const CHUNK: u64 = 1024;
    let mut total = SweepStats::default();
    for n in 1..=max_n {
        let masks = 1u64 << (n * (n - 1) / 2);
        let chunks = masks.div_ceil(CHUNK);
        let partials: Vec<SweepStats> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc = SweepStats::default();
                for mask in c * CHUNK..masks.min((c + 1) * CHUNK) {
                    let g = graph_from_mask(n, mask);
                    if g.is_connected() {
                        acc.merge(per_graph(&g));
                    }
                }
                acc
            })
            .collect();
        for p in partials {
            total.merge(p);
        }
    }
    total
}

/// Neighbor bipartitions of `v` with both sides at least `min_side`, up to
/// the x/y swap: the smallest neighbor is anchored to the x side and the
/// rest are assigned by ascending bitmask.
fn bipartitions(g: &Graph, v: usize, min_side: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let nbrs = g.neighbors(v);
    let d = nbrs.len();
    let mut out = Vec::new();
    for m in 0u64..1 << (d - 1) {
        let mut x = vec![nbrs[0]];
        let mut y = Vec::new();
        for (i, &u) in nbrs[1..].iter().enumerate() {
            if m >> i & 1 == 1 {
                y.push(u);
            } else {
                x.push(u);
            }
        }
        if x.len() >= min_side && y.len() >= min_side {
            out.push((x, y));
        }
    }
    out
}

fn relation_violation(
    st: &mut SweepStats,
    g: &Graph,
    instance: String,
    expected: RhoRelation,
    got: &crate::compare::RhoOrdering,
) {
    st.violation(
        g,
        format!("{instance}: expected {expected:?}, got {:?}", got.relation),
        certificate_str(&got.certificate),
    );
}

fn sweep_subdivision(cfg: &CampaignConfig) -> SweepStats {
    exhaustive_sweep(cfg.max_n, |g| {
        let mut st = SweepStats::default();
        let paths = find_internal_paths(g);
        if paths.is_empty() {
            return st;
        }
        let edges: BTreeSet<(usize, usize)> =
            paths.iter().flat_map(|p| p.edges()).collect();
        let res = match spectral_radius_with(g, &cfg.spectral) {
            Ok(r) => r,
            Err(e) => {
                st.error(g, format!("spectral radius of input failed: {e}"));
                return st;
            }
        };
        let is_exception = matches!(recognize(g), Recognized::TildeD(_));
        let expected = if is_exception {
            RhoRelation::Equal
        } else {
            RhoRelation::Less
        };
        for (u, w) in edges {
            let g2 = subdivide_edge(g, VertexId(u), VertexId(w))
                .expect("edges taken from internal paths");
            st.instances += 1;
            match rho_compare_cached(&g2, None, g, Some(&res), &cfg.spectral, cfg.exact_mode) {
                Ok(ord) if ord.relation == expected => {
                    if is_exception {
                        st.equality_exceptions += 1;
                    }
                }
                Ok(ord) => {
                    relation_violation(
                        &mut st,
                        g,
                        format!("subdivide edge ({u}, {w})"),
                        expected,
                        &ord,
                    );
                }
                Err(e) => st.error(g, format!("subdivide edge ({u}, {w}): {e}")),
            }
        }
        st
    })
}

fn sweep_split_adjacent(cfg: &CampaignConfig) -> SweepStats {
    exhaustive_sweep(cfg.max_n, |g| {
        let mut st = SweepStats::default();
        let splittable: Vec<usize> =
            (0..g.vertex_count()).filter(|&v| g.degree(v) >= 4).collect();
        if splittable.is_empty() {
            return st;
        }
        let res = match spectral_radius_with(g, &cfg.spectral) {
            Ok(r) => r,
            Err(e) => {
                st.error(g, format!("spectral radius of input failed: {e}"));
                return st;
            }
        };
        let is_exception = recognize(g) == Recognized::Star(4);
        for v in splittable {
            for (x, y) in bipartitions(g, v, 2) {
                let spec = SplitSpec {
                    v: VertexId(v),
                    x_side: x,
                    y_side: y,
                };
                let g2 = split_vertex_adjacent(g, &spec).expect("enumerated legal split");
                st.instances += 1;
                let instance = format!(
                    "split vertex {v} into x={:?} y={:?}",
                    spec.x_side, spec.y_side
                );

                let witness = construct_split_witness_with(g, &spec, &res, &cfg.spectral)
                    .expect("legal split of a connected graph");
                st.case_histogram[usize::from(witness.case_id) - 1] += 1;
                if witness.has_strict_slack() {
                    st.witness_strict += 1;
                }
                if !witness.all_slack_nonneg() {
                    let worst = witness
                        .row_slack
                        .iter()
                        .enumerate()
                        .min_by(|a, b| a.1.cmp(b.1))
                        .expect("slack vector nonempty");
                    st.violation(
                        g,
                        format!(
                            "{instance}: case {} witness has negative slack {} at row {}",
                            witness.case_id,
                            rational_str(worst.1),
                            worst.0
                        ),
                        "-".into(),
                    );
                } else if !is_exception && !witness.has_strict_slack() {
                    st.violation(
                        g,
                        format!(
                            "{instance}: case {} witness has no strictly positive slack",
                            witness.case_id
                        ),
                        "-".into(),
                    );
                }

                match rho_compare_cached(&g2, None, g, Some(&res), &cfg.spectral, cfg.exact_mode)
                {
                    Ok(ord) if is_exception => {
                        if ord.relation == RhoRelation::Equal
                            && recognize(&g2) == Recognized::TildeD(5)
                        {
                            st.equality_exceptions += 1;
                        } else {
                            st.violation(
                                g,
                                format!(
                                    "{instance}: expected Equal with a recognized double-spider output, got {:?} with {:?}",
                                    ord.relation,
                                    recognize(&g2)
                                ),
                                certificate_str(&ord.certificate),
                            );
                        }
                    }
                    Ok(ord) if ord.relation != RhoRelation::Less => {
                        relation_violation(&mut st, g, instance, RhoRelation::Less, &ord);
                    }
                    Ok(_) => {}
                    Err(e) => st.error(g, format!("{instance}: {e}")),
                }
            }
        }
        st
    })
}

fn sweep_split_nonadjacent(cfg: &CampaignConfig) -> SweepStats {
    exhaustive_sweep(cfg.max_n, |g| {
        let mut st = SweepStats::default();
        let splittable: Vec<usize> =
            (0..g.vertex_count()).filter(|&v| g.degree(v) >= 2).collect();
        if splittable.is_empty() {
            return st;
        }
        let res = match spectral_radius_with(g, &cfg.spectral) {
            Ok(r) => r,
            Err(e) => {
                st.error(g, format!("spectral radius of input failed: {e}"));
                return st;
            }
        };
        for v in splittable {
            for (x, y) in bipartitions(g, v, 1) {
                let spec = SplitSpec {
                    v: VertexId(v),
                    x_side: x,
                    y_side: y,
                };
                let g2 =
                    split_vertex_nonadjacent(g, &spec).expect("enumerated legal split");
                st.instances += 1;
                match rho_compare_cached(&g2, None, g, Some(&res), &cfg.spectral, cfg.exact_mode)
                {
                    Ok(ord) if ord.relation == RhoRelation::Less => {}
                    Ok(ord) => relation_violation(
                        &mut st,
                        g,
                        format!(
                            "non-adjacent split of {v} into x={:?} y={:?}",
                            spec.x_side, spec.y_side
                        ),
                        RhoRelation::Less,
                        &ord,
                    ),
                    Err(e) => st.error(
                        g,
                        format!("non-adjacent split of {v}: {e}"),
                    ),
                }
            }
        }
        st
    })
}

fn sweep_lemma_deg4(cfg: &CampaignConfig) -> SweepStats {
    let star = make_family(NamedFamily::Star(4)).expect("valid family");
    let star_res =
        spectral_radius_with(&star, &cfg.spectral).expect("4-leaf star converges");
    let two_minus_width = BigRational::from_integer(BigInt::from(2))
        - cfg.spectral.enclosure_width.clone();

    exhaustive_sweep(cfg.max_n, |g| {
        let mut st = SweepStats::default();
        if g.max_degree() < 4 {
            return st;
        }
        let res = match spectral_radius_with(g, &cfg.spectral) {
            Ok(r) => r,
            Err(e) => {
                st.error(g, format!("spectral radius of input failed: {e}"));
                return st;
            }
        };
        st.instances += 1;
        if res.enclosure.0 < two_minus_width {
            st.violation(
                g,
                format!(
                    "degree-4 lower bound: enclosure floor {} sits below 2 - width",
                    rational_str(&res.enclosure.0)
                ),
                "-".into(),
            );
        }
        let is_star4 = recognize(g) == Recognized::Star(4);
        let expected = if is_star4 {
            RhoRelation::Equal
        } else {
            RhoRelation::Greater
        };
        match rho_compare_cached(g, Some(&res), &star, Some(&star_res), &cfg.spectral, cfg.exact_mode)
        {
            Ok(ord) if ord.relation == expected => {
                if is_star4 {
                    st.equality_exceptions += 1;
                }
            }
            Ok(ord) => relation_violation(
                &mut st,
                g,
                "radius against the 4-leaf star".into(),
                expected,
                &ord,
            ),
            Err(e) => st.error(g, format!("radius against the 4-leaf star: {e}")),
        }
        st
    })
}

fn sweep_expand(cfg: &CampaignConfig) -> Result<SweepStats, VerifyError> {
    // Two parts exhaustively: the expansion must coincide with the
    // adjacent split instance for instance.
    let mut st = exhaustive_sweep(cfg.max_n, |g| {
        let mut st = SweepStats::default();
        for v in (0..g.vertex_count()).filter(|&v| g.degree(v) >= 4) {
            for (x, y) in bipartitions(g, v, 2) {
                let spec = SplitSpec {
                    v: VertexId(v),
                    x_side: x.clone(),
                    y_side: y.clone(),
                };
                let split = split_vertex_adjacent(g, &spec).expect("legal split");
                let expanded = expand_to_complete(
                    g,
                    &ExpandSpec {
                        v: VertexId(v),
                        partitions: vec![x.clone(), y.clone()],
                    },
                )
                .expect("legal expansion");
                st.instances += 1;
                if split != expanded {
                    st.violation(
                        g,
                        format!(
                            "two-part expansion of {v} with parts {x:?} {y:?} differs from the adjacent split"
                        ),
                        "-".into(),
                    );
                }
            }
        }
        st
    });

    // Three parts on random graphs holding a vertex of degree at least 9.
    let mut rng = ChaCha20Rng::seed_from_u64(stream_seed(cfg.seed, Theorem::Expand));
    let mut sampled: Vec<(Graph, Vec<ExpandSpec>)> = Vec::with_capacity(cfg.expand_samples);
    for _ in 0..cfg.expand_samples {
        let g = loop_until_high_degree(cfg, &mut rng)?;
        let v = (0..g.vertex_count())
            .find(|&v| g.degree(v) >= 9)
            .expect("draw filtered on degree");
        let d = g.degree(v);
        let mut specs = Vec::with_capacity(cfg.expand_parts_per_graph);
        for _ in 0..cfg.expand_parts_per_graph {
            let a = rng.gen_range(3..=d - 6);
            let b = rng.gen_range(3..=d - a - 3);
            let mut nbrs = g.neighbors(v).to_vec();
            nbrs.shuffle(&mut rng);
            let mut parts = vec![
                nbrs[..a].to_vec(),
                nbrs[a..a + b].to_vec(),
                nbrs[a + b..].to_vec(),
            ];
            for part in &mut parts {
                part.sort_unstable();
            }
            specs.push(ExpandSpec {
                v: VertexId(v),
                partitions: parts,
            });
        }
        sampled.push((g, specs));
    }
    let partials: Vec<SweepStats> = sampled
        .par_iter()
        .map(|(g, specs)| {
            let mut st = SweepStats::default();
            if recognize(g) == Recognized::Star(9) {
                st.notes
                    .push(format!("skipped 9-leaf star draw {}", to_graph6(g)));
                return st;
            }
            let res = match spectral_radius_with(g, &cfg.spectral) {
                Ok(r) => r,
                Err(e) => {
                    st.error(g, format!("spectral radius of input failed: {e}"));
                    return st;
                }
            };
            for spec in specs {
                let g2 = expand_to_complete(g, spec).expect("sampled legal expansion");
                st.instances += 1;
                match rho_compare_cached(&g2, None, g, Some(&res), &cfg.spectral, cfg.exact_mode)
                {
                    Ok(ord) if ord.relation == RhoRelation::Less => {}
                    Ok(ord) => relation_violation(
                        &mut st,
                        g,
                        format!(
                            "expand vertex {} into 3 parts {:?}",
                            spec.v.0, spec.partitions
                        ),
                        RhoRelation::Less,
                        &ord,
                    ),
                    Err(e) => st.error(g, format!("expand vertex {}: {e}", spec.v.0)),
                }
            }
            st
        })
        .collect();
    for p in partials {
        st.merge(p);
    }

    // The excluded boundary graph: a 9-leaf star expanded into a triangle.
    // Its outcome is recorded as data, not asserted.
    let star9 = make_family(NamedFamily::Star(9)).expect("valid family");
    let spec = ExpandSpec {
        v: VertexId(0),
        partitions: vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
    };
    let expanded = expand_to_complete(&star9, &spec).expect("legal expansion");
    st.instances += 1;
    match rho_compare_cached(&expanded, None, &star9, None, &cfg.spectral, cfg.exact_mode) {
        Ok(ord) => st.notes.push(format!(
            "9-leaf star expanded into a triangle with equal parts: {:?} ({})",
            ord.relation,
            certificate_str(&ord.certificate)
        )),
        Err(e) => st.error(&star9, format!("boundary expansion comparison failed: {e}")),
    }
    Ok(st)
}

fn loop_until_high_degree(
    cfg: &CampaignConfig,
    rng: &mut ChaCha20Rng,
) -> Result<Graph, VerifyError> {
    for _ in 0..REJECTION_ATTEMPTS {
        let n = rng.gen_range(cfg.expand_n_range.0..=cfg.expand_n_range.1);
        let g = random_connected_graph(n, 2.0 / 3.0, rng)?;
        if g.max_degree() >= 9 {
            return Ok(g);
        }
    }
    Err(VerifyError::RejectionCap {
        attempts: REJECTION_ATTEMPTS,
    })
}

fn sweep_pf_monotone(cfg: &CampaignConfig) -> Result<SweepStats, VerifyError> {
    let mut rng = ChaCha20Rng::seed_from_u64(stream_seed(cfg.seed, Theorem::PfMonotone));
    let mut graphs = Vec::with_capacity(cfg.random_samples);
    for _ in 0..cfg.random_samples {
        let n = rng.gen_range(cfg.random_n_range.0..=cfg.random_n_range.1);
        graphs.push(random_connected_graph(n, 0.5, &mut rng)?);
    }
    let partials: Vec<SweepStats> = graphs
        .par_iter()
        .map(|g| {
            let mut st = SweepStats::default();
            let res = match spectral_radius_with(g, &cfg.spectral) {
                Ok(r) => r,
                Err(e) => {
                    st.error(g, format!("spectral radius of input failed: {e}"));
                    return st;
                }
            };
            let edges = g.edges();
            for (u, w) in upper_triangle_pairs(g.vertex_count()) {
                if g.has_edge(u, w) {
                    continue;
                }
                let mut grown = edges.clone();
                grown.push((u, w));
                let g2 = Graph::from_edges(g.vertex_count(), &grown)
                    .expect("absent edge stays valid");
                st.instances += 1;
                match rho_compare_cached(&g2, None, g, Some(&res), &cfg.spectral, cfg.exact_mode)
                {
                    Ok(ord) if ord.relation == RhoRelation::Greater => {}
                    Ok(ord) => relation_violation(
                        &mut st,
                        g,
                        format!("add edge ({u}, {w})"),
                        RhoRelation::Greater,
                        &ord,
                    ),
                    Err(e) => st.error(g, format!("add edge ({u}, {w}): {e}")),
                }
            }
            st
        })
        .collect();
    let mut st = SweepStats::default();
    for p in partials {
        st.merge(p);
    }
    Ok(st)
}

fn stream_seed(seed: u64, theorem: Theorem) -> u64 {
    let tag = Theorem::ALL
        .iter()
        .position(|&t| t == theorem)
        .expect("theorem in canonical list") as u64;
    seed ^ (tag + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_families_with_normalization() {
        let cases = [
            (NamedFamily::Complete(1), Recognized::Complete(1)),
            (NamedFamily::Complete(2), Recognized::Complete(2)),
            (NamedFamily::Complete(5), Recognized::Complete(5)),
            (NamedFamily::Star(1), Recognized::Complete(2)),
            (NamedFamily::Star(2), Recognized::Star(2)),
            (NamedFamily::Star(4), Recognized::Star(4)),
            (NamedFamily::Cycle(3), Recognized::Complete(3)),
            (NamedFamily::Cycle(6), Recognized::Cycle(6)),
            (NamedFamily::TildeD(4), Recognized::Star(4)),
            (NamedFamily::TildeD(5), Recognized::TildeD(5)),
            (NamedFamily::TildeD(7), Recognized::TildeD(7)),
            (NamedFamily::Path(4), Recognized::None),
        ];
        for (family, expected) in cases {
            let g = make_family(family).unwrap();
            assert_eq!(recognize(&g), expected, "family {family:?}");
        }
    }

    #[test]
    fn spider_with_separated_leaves_is_not_the_double_spider() {
        // Degree counts match TildeD(6) but one branch vertex has a single
        // leaf, so the structural check must refuse it.
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)])
            .unwrap();
        assert_eq!(g.degree_sequence(), vec![3, 3, 2, 1, 1, 1, 1]);
        assert_eq!(recognize(&g), Recognized::TildeD(6));
        // A different tree with the identical degree multiset: the branch
        // vertices sit adjacent and the degree-2 vertex dangles a leaf, so
        // one branch vertex holds a single leaf and recognition must fail.
        let h = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6)])
            .unwrap();
        assert_eq!(h.degree_sequence(), vec![3, 3, 2, 1, 1, 1, 1]);
        assert_eq!(recognize(&h), Recognized::None);
    }

    #[test]
    fn disconnected_graphs_are_not_recognized() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(recognize(&g), Recognized::None);
    }

    #[test]
    fn connected_counts_match_known_values() {
        let expected = [1usize, 1, 4, 38, 728, 26704];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_connected(n).unwrap().count(), want, "n={n}");
        }
    }

    #[test]
    fn enumeration_bounds_are_enforced() {
        assert!(matches!(
            enumerate_connected(8),
            Err(VerifyError::SizeCap { n: 8, cap: 7 })
        ));
        assert!(matches!(
            enumerate_connected(0),
            Err(VerifyError::BadConfig(_))
        ));
    }

    #[test]
    fn random_graphs_are_connected_and_reproducible() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let a = random_connected_graph(6, 0.5, &mut rng).unwrap();
        assert!(a.is_connected());
        let mut rng2 = ChaCha20Rng::seed_from_u64(7);
        let b = random_connected_graph(6, 0.5, &mut rng2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn two_vertex_random_graph_is_the_single_edge() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let g = random_connected_graph(2, 0.5, &mut rng).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn random_draw_rejects_bad_parameters() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        assert!(random_connected_graph(1, 0.5, &mut rng).is_err());
        assert!(random_connected_graph(5, 0.0, &mut rng).is_err());
        assert!(random_connected_graph(5, 1.0, &mut rng).is_err());
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(Theorem::parse(t.name()), Some(t));
        }
        assert_eq!(Theorem::parse("nonsense"), None);
    }

    #[test]
    fn campaign_rejects_oversized_sweeps() {
        let cfg = CampaignConfig {
            max_n: 20,
            ..CampaignConfig::default()
        };
        assert!(matches!(
            run_campaign(&cfg),
            Err(VerifyError::SizeCap { n: 20, cap: 7 })
        ));
    }

    #[test]
    fn small_campaign_verifies_and_reproduces() {
        let cfg = CampaignConfig {
            max_n: 4,
            theorems: vec![Theorem::Subdivision, Theorem::SplitAdjacent],
            ..CampaignConfig::default()
        };
        let a = run_campaign(&cfg).unwrap();
        assert!(a.verified());
        let b = run_campaign(&cfg).unwrap();
        assert_eq!(a.to_canonical_text(), b.to_canonical_text());
    }

    #[test]
    fn five_vertex_universe_has_no_violations() {
        let cfg = CampaignConfig {
            max_n: 5,
            random_samples: 5,
            random_n_range: (4, 6),
            expand_samples: 2,
            expand_parts_per_graph: 2,
            ..CampaignConfig::default()
        };
        let report = run_campaign(&cfg).unwrap();
        assert!(report.verified(), "{}", report.to_canonical_text());
        // The 4-leaf star lives on 5 vertices; its 5 labeled copies carry
        // 3 bipartitions each, the sweep's only equality exceptions.
        let split = report
            .theorems
            .iter()
            .find(|t| t.theorem == Theorem::SplitAdjacent)
            .unwrap();
        assert_eq!(split.equality_exceptions, 15);
        assert_eq!(split.case_histogram.unwrap()[0], 15);
    }
}
