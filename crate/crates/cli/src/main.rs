//! Thin command-line front end over the rhograph library. Every subcommand
//! maps directly onto a library call; all output formatting lives here.

use clap::{Parser, Subcommand, ValueEnum};
use num::{BigInt, BigRational, One, Signed, Zero};
use rhograph::{
    char_poly, enumerate_connected, expand_to_complete, isolate_largest_root, make_family,
    parse_graph6, refine_to_width, rho_compare, run_campaign, spectral_radius_with,
    split_vertex_adjacent, split_vertex_nonadjacent, subdivide_edge, to_graph6, CampaignConfig,
    ComparisonCertificate, ExactMode, ExpandSpec, Graph, NamedFamily, SpectralConfig,
    SpectralError, SplitSpec, SturmChain, Theorem, TransformError, VerifyError, VertexId,
    construct_split_witness_with,
};
use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rhograph",
    version,
    about = "Spectral radius computation, graph rewrites, and verification sweeps",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified spectral radius of a graph6 graph.
    Rho {
        /// Input graph in graph6 format.
        graph6: String,
        /// Target enclosure width, e.g. 1/1000000000 or 1e-12.
        #[arg(long, value_parser = parse_rational)]
        width: Option<BigRational>,
        /// Also print the characteristic polynomial and an isolating
        /// interval for its largest root.
        #[arg(long)]
        exact: bool,
    },
    /// Apply a rewrite and report how the spectral radius moved.
    Transform {
        kind: TransformKind,
        /// Input graph in graph6 format.
        graph6: String,
        /// Edge for subdivide, as "u,w".
        #[arg(long, value_parser = parse_pair)]
        edge: Option<(usize, usize)>,
        /// Vertex for split, split-na, and expand.
        #[arg(long)]
        vertex: Option<usize>,
        /// First neighbor group for split and split-na, as "a,b,...".
        #[arg(long, value_parser = parse_vertex_list)]
        x: Option<VertexList>,
        /// Second neighbor group for split and split-na.
        #[arg(long, value_parser = parse_vertex_list)]
        y: Option<VertexList>,
        /// Neighbor group for expand; repeat once per clique vertex.
        #[arg(long, value_parser = parse_vertex_list)]
        part: Vec<VertexList>,
    },
    /// Build the four-case eigenvector witness for an adjacent split.
    Witness {
        /// Input graph in graph6 format.
        graph6: String,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_parser = parse_vertex_list)]
        x: VertexList,
        #[arg(long, value_parser = parse_vertex_list)]
        y: VertexList,
        /// Print every entry and row slack instead of a summary.
        #[arg(long)]
        full: bool,
    },
    /// Run verification sweeps and write a reproducible report.
    Verify {
        /// Exhaustive sweeps cover all connected graphs up to this order.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Comma-separated subset of: subdivision, split-adjacent,
        /// split-nonadjacent, expand, lemma-deg4, pf-monotone; or "all".
        #[arg(long, default_value = "all", value_parser = parse_theorems)]
        theorems: TheoremList,
        /// Random graphs drawn for the edge-addition sweep.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Vertex-count range for those samples, as "lo,hi".
        #[arg(long, default_value = "4,10", value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "on-overlap")]
        exact_mode: ExactModeArg,
        /// Target enclosure width for all spectral computations.
        #[arg(long, value_parser = parse_rational)]
        width: Option<BigRational>,
        /// Random graphs drawn for the clique-expansion sweep.
        #[arg(long, default_value_t = 100)]
        expand_samples: usize,
        /// Vertex-count range for expansion samples, as "lo,hi".
        #[arg(long, default_value = "10,14", value_parser = parse_range)]
        expand_n_range: (usize, usize),
        /// Random 3-partitions tried per expansion sample.
        #[arg(long, default_value_t = 5)]
        expand_parts: usize,
        /// Write the canonical machine report to this path.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Worker threads for the sweeps; defaults to all cores.
        #[arg(long, env = "RHOGRAPH_JOBS")]
        jobs: Option<usize>,
    },
    /// Count (or list) connected graphs on n vertices.
    Enumerate {
        n: usize,
        /// Print one graph6 line per graph instead of the count.
        #[arg(long)]
        list: bool,
    },
    /// Print a named family member in graph6.
    Family {
        kind: FamilyKind,
        parameter: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    Subdivide,
    Split,
    SplitNa,
    Expand,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    TildeD,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExactModeArg {
    OnOverlap,
    Always,
}

impl From<ExactModeArg> for ExactMode {
    fn from(m: ExactModeArg) -> ExactMode {
        match m {
            ExactModeArg::OnOverlap => ExactMode::OnOverlap,
            ExactModeArg::Always => ExactMode::Always,
        }
    }
}

#[derive(Clone)]
struct VertexList(Vec<usize>);

#[derive(Clone)]
struct TheoremList(Vec<Theorem>);

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Rho {
            graph6,
            width,
            exact,
        } => cmd_rho(&graph6, width, exact),
        Command::Transform {
            kind,
            graph6,
            edge,
            vertex,
            x,
            y,
            part,
        } => cmd_transform(kind, &graph6, edge, vertex, x, y, part),
        Command::Witness {
            graph6,
            vertex,
            x,
            y,
            full,
        } => cmd_witness(&graph6, vertex, x, y, full),
        Command::Verify {
            max_n,
            theorems,
            samples,
            n_range,
            seed,
            exact_mode,
            width,
            expand_samples,
            expand_n_range,
            expand_parts,
            out,
            jobs,
        } => cmd_verify(
            max_n,
            theorems,
            samples,
            n_range,
            seed,
            exact_mode,
            width,
            expand_samples,
            expand_n_range,
            expand_parts,
            out,
            jobs,
        ),
        Command::Enumerate { n, list } => cmd_enumerate(n, list),
        Command::Family { kind, parameter } => cmd_family(kind, parameter),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(s: &str) -> Result<Graph, Failure> {
    parse_graph6(s).map_err(|e| fail(EXIT_USAGE, format!("invalid graph6 {s:?}: {e}")))
}

fn spectral_failure(e: SpectralError) -> Failure {
    let code = match e {
        SpectralError::SizeCap { .. } | SpectralError::NoConvergence { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    };
    fail(code, e)
}

fn spectral_config(width: Option<BigRational>) -> Result<SpectralConfig, Failure> {
    let mut cfg = SpectralConfig::default();
    if let Some(w) = width {
        if !w.is_positive() {
            return Err(fail(EXIT_USAGE, "width must be positive"));
        }
        cfg.enclosure_width = w;
    }
    Ok(cfg)
}

fn cmd_rho(graph6: &str, width: Option<BigRational>, exact: bool) -> Result<u8, Failure> {
    let g = read_graph(graph6)?;
    let cfg = spectral_config(width)?;
    let res = spectral_radius_with(&g, &cfg).map_err(spectral_failure)?;
    println!(
        "graph: {} ({} vertices, {} edges)",
        graph6,
        g.vertex_count(),
        g.edge_count()
    );
    println!("rho: {}", res.rho);
    let (lo, hi) = &res.enclosure;
    println!(
        "enclosure: [{}, {}] (width {})",
        rat(lo),
        rat(hi),
        rat(&(hi - lo))
    );
    if exact {
        let p = char_poly(&g).map_err(spectral_failure)?;
        println!("charpoly: {}", poly_str(&p));
        let sf = p.square_free_part();
        let chain = SturmChain::new(&sf);
        let mut iv = isolate_largest_root(&sf, &chain)
            .expect("characteristic polynomial of a nonempty graph has a real root");
        refine_to_width(&chain, &mut iv, &cfg.enclosure_width);
        println!("largest root in ({}, {}]", rat(&iv.lo), rat(&iv.hi));
    }
    Ok(0)
}

fn transform_failure(e: TransformError) -> Failure {
    let name = match e {
        TransformError::VertexOutOfRange { .. } => "VertexOutOfRange",
        TransformError::NoSuchEdge(..) => "NoSuchEdge",
        TransformError::NotInternalPathEdge(..) => "NotInternalPathEdge",
        TransformError::DegreeTooSmall { .. } => "DegreeTooSmall",
        TransformError::BadPartition(..) => "BadPartition",
        TransformError::PartitionTooSmall { .. } => "PartitionTooSmall",
        TransformError::NotConnected => "NotConnected",
    };
    fail(EXIT_USAGE, format!("{name}: {e}"))
}

fn require<T>(opt: Option<T>, what: &str) -> Result<T, Failure> {
    opt.ok_or_else(|| fail(EXIT_USAGE, format!("this transform requires {what}")))
}

fn cmd_transform(
    kind: TransformKind,
    graph6: &str,
    edge: Option<(usize, usize)>,
    vertex: Option<usize>,
    x: Option<VertexList>,
    y: Option<VertexList>,
    part: Vec<VertexList>,
) -> Result<u8, Failure> {
    let g = read_graph(graph6)?;
    let result = match kind {
        TransformKind::Subdivide => {
            let (u, w) = require(edge, "--edge u,w")?;
            subdivide_edge(&g, VertexId(u), VertexId(w))
        }
        TransformKind::Split | TransformKind::SplitNa => {
            let spec = SplitSpec {
                v: VertexId(require(vertex, "--vertex")?),
                x_side: require(x, "--x")?.0,
                y_side: require(y, "--y")?.0,
            };
            match kind {
                TransformKind::Split => split_vertex_adjacent(&g, &spec),
                _ => split_vertex_nonadjacent(&g, &spec),
            }
        }
        TransformKind::Expand => {
            let spec = ExpandSpec {
                v: VertexId(require(vertex, "--vertex")?),
                partitions: part.into_iter().map(|p| p.0).collect(),
            };
            expand_to_complete(&g, &spec)
        }
    };
    let g2 = result.map_err(transform_failure)?;
    println!("{}", to_graph6(&g2));
    let cfg = SpectralConfig::default();
    let ord = rho_compare(&g2, &g, &cfg, ExactMode::OnOverlap).map_err(spectral_failure)?;
    println!(
        "verdict: {:?} ({})",
        ord.relation,
        certificate_kind(&ord.certificate)
    );
    Ok(0)
}

fn cmd_witness(
    graph6: &str,
    vertex: usize,
    x: VertexList,
    y: VertexList,
    full: bool,
) -> Result<u8, Failure> {
    let g = read_graph(graph6)?;
    let cfg = SpectralConfig::default();
    let res = spectral_radius_with(&g, &cfg).map_err(spectral_failure)?;
    let spec = SplitSpec {
        v: VertexId(vertex),
        x_side: x.0,
        y_side: y.0,
    };
    let w = construct_split_witness_with(&g, &spec, &res, &cfg).map_err(transform_failure)?;
    println!("case: {}", w.case_id);
    println!("rho bound: {}", rat(&w.rho_bound));
    println!("z_v: {}", rat(&w.z_v));
    let strict = w.row_slack.iter().filter(|s| s.is_positive()).count();
    println!(
        "slack: {} rows, {} strictly positive, all nonnegative: {}",
        w.row_slack.len(),
        strict,
        w.all_slack_nonneg()
    );
    if full {
        for (i, (val, slack)) in w.values.iter().zip(&w.row_slack).enumerate() {
            println!("  vertex {i}: value {} slack {}", rat(val), rat(slack));
        }
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    max_n: usize,
    theorems: TheoremList,
    samples: usize,
    n_range: (usize, usize),
    seed: u64,
    exact_mode: ExactModeArg,
    width: Option<BigRational>,
    expand_samples: usize,
    expand_n_range: (usize, usize),
    expand_parts: usize,
    out: Option<std::path::PathBuf>,
    jobs: Option<usize>,
) -> Result<u8, Failure> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| fail(EXIT_USAGE, format!("cannot configure {jobs} jobs: {e}")))?;
    }
    let cfg = CampaignConfig {
        max_n,
        theorems: theorems.0,
        random_samples: samples,
        random_n_range: n_range,
        seed,
        exact_mode: exact_mode.into(),
        spectral: spectral_config(width)?,
        expand_samples,
        expand_n_range,
        expand_parts_per_graph: expand_parts,
    };
    let report = run_campaign(&cfg).map_err(|e| {
        let code = match e {
            VerifyError::SizeCap { .. } | VerifyError::RejectionCap { .. } => EXIT_RESOURCE,
            VerifyError::BadConfig(_) => EXIT_USAGE,
        };
        fail(code, e)
    })?;
    if let Some(path) = out {
        std::fs::write(&path, report.to_canonical_text())
            .map_err(|e| fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }
    print!("{}", report.summary_lines());
    Ok(if report.verified() { 0 } else { EXIT_VIOLATION })
}

fn cmd_enumerate(n: usize, list: bool) -> Result<u8, Failure> {
    let graphs = enumerate_connected(n).map_err(|e| {
        let code = match e {
            VerifyError::SizeCap { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        fail(code, e)
    })?;
    if list {
        let mut count = 0usize;
        for g in graphs {
            println!("{}", to_graph6(&g));
            count += 1;
        }
        eprintln!("{count} connected graphs on {n} vertices");
    } else {
        println!("{} connected graphs on {n} vertices", graphs.count());
    }
    Ok(0)
}

fn cmd_family(kind: FamilyKind, parameter: usize) -> Result<u8, Failure> {
    let family = match kind {
        FamilyKind::Path => NamedFamily::Path(parameter),
        FamilyKind::Cycle => NamedFamily::Cycle(parameter),
        FamilyKind::Star => NamedFamily::Star(parameter),
        FamilyKind::Complete => NamedFamily::Complete(parameter),
        FamilyKind::TildeD => NamedFamily::TildeD(parameter),
    };
    let g = make_family(family).map_err(|e| fail(EXIT_USAGE, e))?;
    println!("{}", to_graph6(&g));
    Ok(0)
}

fn rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn certificate_kind(c: &ComparisonCertificate) -> &'static str {
    match c {
        ComparisonCertificate::DisjointEnclosures { .. } => "disjoint enclosures",
        ComparisonCertificate::ExactRootIsolation { .. } => "exact root isolation",
        ComparisonCertificate::CommonFactorEquality { .. } => "common factor",
    }
}

fn poly_str(p: &rhograph::IntPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let coeffs = p.coeffs();
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let show_coeff = k == 0 || !mag.is_one();
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if k > 0 {
            if show_coeff {
                out.push('*');
            }
            out.push('x');
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    out
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator: {e}"))?;
        let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator: {e}"))?;
        if d.is_zero() {
            return Err("denominator is zero".into());
        }
        return Ok(BigRational::new(n, d));
    }
    // Decimal notation, parsed exactly in base 10: mantissa and optional
    // exponent, e.g. "2", "0.5", "1e-9", "-2.5e3".
    let lower = s.to_ascii_lowercase();
    let (mantissa, exp) = match lower.split_once('e') {
        Some((m, e)) => (
            m,
            i32::from_str(e).map_err(|e| format!("bad exponent: {e}"))?,
        ),
        None => (lower.as_str(), 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(format!("not a number: {s:?}"));
    }
    let numer = BigInt::from_str(&digits).map_err(|e| format!("bad mantissa: {e}"))?;
    let scale = exp - i32::try_from(frac_part.len()).map_err(|_| "mantissa too long")?;
    let power = num::pow(BigInt::from(10), scale.unsigned_abs() as usize);
    Ok(if scale >= 0 {
        BigRational::from_integer(numer * power)
    } else {
        BigRational::new(numer, power)
    })
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"u,w\", got {s:?}"))?;
    Ok((
        usize::from_str(a.trim()).map_err(|e| e.to_string())?,
        usize::from_str(b.trim()).map_err(|e| e.to_string())?,
    ))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = parse_pair(s)?;
    if lo > hi {
        return Err(format!("empty range {lo},{hi}"));
    }
    Ok((lo, hi))
}

fn parse_vertex_list(s: &str) -> Result<VertexList, String> {
    let items: Result<Vec<usize>, _> = s
        .split(',')
        .map(|t| usize::from_str(t.trim()).map_err(|e| e.to_string()))
        .collect();
    Ok(VertexList(items?))
}

fn parse_theorems(s: &str) -> Result<TheoremList, String> {
    if s.trim() == "all" {
        return Ok(TheoremList(Theorem::ALL.to_vec()));
    }
    let items: Result<Vec<Theorem>, String> = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            Theorem::parse(t).ok_or_else(|| format!("unknown theorem {t:?}"))
        })
        .collect();
    Ok(TheoremList(items?))
}
