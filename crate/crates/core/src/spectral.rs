//! Spectral radius with certified rational enclosures.
//!
//! Power iteration runs on `A + I` in floating point (the shift keeps
//! bipartite graphs from oscillating), but the returned enclosure never
//! trusts the floats: the iterate is converted to exact rationals and the
//! min and max of the quotients `(Az)_i / z_i` bound the spectral radius
//! from below and above for any positive `z`, by Collatz-Wielandt. The
//! floats steer; the rationals certify.

use crate::graph::Graph;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("enclosure width not reached after {matvecs} matrix-vector products")]
    NoConvergence { matvecs: u64 },
    #[error("graph has {n} vertices, exact computation capped at {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid parameter: {0}")]
    ParameterOutOfRange(String),
}

#[derive(Debug, Clone)]
pub struct SpectralConfig {
    /// Required width of the rational enclosure around the spectral radius.
    pub enclosure_width: BigRational,
    /// Total matrix-vector product budget across all components.
    pub max_matvecs: u64,
    /// Largest order accepted by exact characteristic-polynomial paths.
    pub exact_size_cap: usize,
    /// Iterate entries at or below this are treated as not yet positive.
    pub positivity_floor: f64,
}

impl Default for SpectralConfig {
    fn default() -> SpectralConfig {
        SpectralConfig {
            enclosure_width: BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64)),
            max_matvecs: 1_000_000,
            exact_size_cap: crate::charpoly::DEFAULT_EXACT_SIZE_CAP,
            positivity_floor: 1e-12,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Midpoint of the enclosure.
    pub rho: f64,
    /// Nonnegative eigenvector estimate, max entry exactly 1, zero off the
    /// component that attains the spectral radius.
    pub perron: Vec<f64>,
    /// Rational `(lo, hi)` with `lo <= rho(G) <= hi` and the configured width.
    pub enclosure: (BigRational, BigRational),
    /// Vertices of the component attaining the spectral radius.
    pub component: Vec<usize>,
}

pub fn spectral_radius(g: &Graph) -> Result<SpectralResult, SpectralError> {
    spectral_radius_with(g, &SpectralConfig::default())
}

pub fn spectral_radius_with(
    g: &Graph,
    cfg: &SpectralConfig,
) -> Result<SpectralResult, SpectralError> {
    if g.vertex_count() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if !cfg.enclosure_width.is_positive() {
        return Err(SpectralError::ParameterOutOfRange(
            "enclosure width must be positive".into(),
        ));
    }

    let comps = g.components();
    let mut used = 0u64;
    let mut outcomes = Vec::with_capacity(comps.len());
    for verts in &comps {
        let adj = local_adjacency(g, verts);
        outcomes.push(component_power(&adj, cfg, &mut used)?);
    }

    // The whole-graph radius is the max over components. Take the component
    // with the largest upper bound (first on ties); the best lower bound may
    // come from a different component and is still valid for the max.
    let mut best = 0;
    for i in 1..outcomes.len() {
        if outcomes[i].1 > outcomes[best].1 {
            best = i;
        }
    }
    let lo = outcomes
        .iter()
        .map(|o| o.0.clone())
        .max()
        .expect("at least one component");
    let hi = outcomes[best].1.clone();
    debug_assert!(lo <= hi);

    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
    let mut perron = vec![0.0; g.vertex_count()];
    for (local, &global) in comps[best].iter().enumerate() {
        perron[global] = outcomes[best].2[local];
    }
    Ok(SpectralResult {
        rho: mid.to_f64().expect("enclosure midpoint fits in f64"),
        perron,
        enclosure: (lo, hi),
        component: comps[best].clone(),
    })
}

/// True when every eigenvector entry is strictly above the floor.
/// The guarantee only makes sense for connected graphs, where the
/// eigenvector of the dominant eigenvalue has no zero entries.
pub fn check_perron_positive(
    g: &Graph,
    res: &SpectralResult,
    floor: f64,
) -> Result<bool, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::NotConnected);
    }
    Ok(res.perron.iter().all(|&x| x > floor))
}

/// Adjacency eigenvalues of the n-cycle: `2 cos(2 pi j / n)` for each j.
pub fn cycle_eigenvalues(n: usize) -> Result<Vec<f64>, SpectralError> {
    if n < 3 {
        return Err(SpectralError::ParameterOutOfRange(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Ok((0..n)
        .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
        .collect())
}

/// Exact f64-to-rational conversion of a positive vector; `None` if any
/// entry is at or below the floor.
pub(crate) fn rationalize_vector(v: &[f64], floor: f64) -> Option<Vec<BigRational>> {
    v.iter()
        .map(|&x| {
            if x > floor {
                BigRational::from_float(x)
            } else {
                None
            }
        })
        .collect()
}

/// Exact adjacency matrix-vector product.
pub(crate) fn exact_matvec(g: &Graph, z: &[BigRational]) -> Vec<BigRational> {
    (0..g.vertex_count())
        .map(|i| {
            g.neighbors(i)
                .iter()
                .fold(BigRational::zero(), |acc, &u| acc + &z[u])
        })
        .collect()
}

fn local_adjacency(g: &Graph, verts: &[usize]) -> Vec<Vec<usize>> {
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (local, &v) in verts.iter().enumerate() {
        index[v] = local;
    }
    verts
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&u| index[u]).collect())
        .collect()
}

type ComponentOutcome = (BigRational, BigRational, Vec<f64>);

fn component_power(
    adj: &[Vec<usize>],
    cfg: &SpectralConfig,
    used: &mut u64,
) -> Result<ComponentOutcome, SpectralError> {
    let n = adj.len();
    if n == 1 {
        return Ok((BigRational::zero(), BigRational::zero(), vec![1.0]));
    }

    let mut z = vec![1.0f64; n];
    let mut t = 0u64;
    let mut checkpoint = 4u64;
    loop {
        if *used >= cfg.max_matvecs {
            return Err(SpectralError::NoConvergence { matvecs: *used });
        }
        step(adj, &mut z);
        *used += 1;
        t += 1;
        if t < checkpoint {
            continue;
        }
        checkpoint *= 2;
        let Some((lo, hi)) = cw_bounds(adj, &z, cfg.positivity_floor) else {
            continue;
        };
        if &hi - &lo > cfg.enclosure_width {
            continue;
        }

        // Iterate on to the floating-point fixed point when one is nearby.
        // Graphs whose eigenvector is exactly representable (rational with
        // small power-of-two-free denominators) then yield exact ties and
        // often a zero-width enclosure; without this, checkpoint parity
        // leaves stray ulps on either side.
        let mut w = z.clone();
        let polish_budget = 3 * t + 64;
        for _ in 0..polish_budget {
            if *used >= cfg.max_matvecs {
                break;
            }
            let prev = w.clone();
            step(adj, &mut w);
            *used += 1;
            if w == prev {
                break;
            }
        }
        if w != z {
            if let Some((plo, phi)) = cw_bounds(adj, &w, cfg.positivity_floor) {
                if &phi - &plo <= cfg.enclosure_width {
                    return Ok((plo, phi, w));
                }
            }
        }
        return Ok((lo, hi, z));
    }
}

/// One step of `z <- (A + I) z`, renormalized so the max entry is exactly 1.
fn step(adj: &[Vec<usize>], z: &mut Vec<f64>) {
    let mut out: Vec<f64> = adj
        .iter()
        .enumerate()
        .map(|(i, nbrs)| nbrs.iter().fold(z[i], |acc, &u| acc + z[u]))
        .collect();
    let m = out.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
    for v in out.iter_mut() {
        *v /= m;
    }
    *z = out;
}

/// Collatz-Wielandt bounds of the plain adjacency matrix at the exact
/// rational image of `z`: `min_i (Az)_i/z_i <= rho <= max_i (Az)_i/z_i`.
fn cw_bounds(
    adj: &[Vec<usize>],
    z: &[f64],
    floor: f64,
) -> Option<(BigRational, BigRational)> {
    let zr = rationalize_vector(z, floor)?;
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for (i, nbrs) in adj.iter().enumerate() {
        let s = nbrs
            .iter()
            .fold(BigRational::zero(), |acc, &u| acc + &zr[u]);
        let q = s / &zr[i];
        if lo.as_ref().is_none_or(|l| q < *l) {
            lo = Some(q.clone());
        }
        if hi.as_ref().is_none_or(|h| q > *h) {
            hi = Some(q);
        }
    }
    Some((lo?, hi?))
}
