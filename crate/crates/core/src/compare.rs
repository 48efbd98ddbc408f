//! Decides the order of two graphs' spectral radii with a certificate.
//!
//! Fast path: if the rational enclosures from power iteration are disjoint,
//! the order is settled. Otherwise (or on demand) the radii are compared as
//! algebraic numbers: isolate the largest root of each characteristic
//! polynomial, and either the isolating intervals separate, or a common
//! square-free factor with a root in the overlap proves equality. Both
//! outcomes are exact; ties are never broken by floating point.

use crate::charpoly::char_poly_with_cap;
use crate::graph::Graph;
use crate::poly::{bisect_once, isolate_largest_root, IntPoly, RootInterval, SturmChain};
use crate::spectral::{spectral_radius_with, SpectralConfig, SpectralError, SpectralResult};
use num::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoRelation {
    Less,
    Equal,
    Greater,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactMode {
    /// Exact comparison only when the numeric enclosures overlap.
    OnOverlap,
    /// Always compare via characteristic polynomials.
    Always,
}

/// Evidence for the returned relation, in the form of rational intervals.
#[derive(Debug, Clone)]
pub enum ComparisonCertificate {
    /// The power-iteration enclosures do not intersect.
    DisjointEnclosures {
        left: (BigRational, BigRational),
        right: (BigRational, BigRational),
    },
    /// Isolating intervals of the two largest roots became disjoint.
    ExactRootIsolation {
        left: (BigRational, BigRational),
        right: (BigRational, BigRational),
    },
    /// A common factor of both polynomials has a root in the overlap of the
    /// isolating intervals, so the largest roots coincide.
    CommonFactorEquality { interval: (BigRational, BigRational) },
}

#[derive(Debug, Clone)]
pub struct RhoOrdering {
    pub relation: RhoRelation,
    pub certificate: ComparisonCertificate,
}

pub fn rho_compare(
    g1: &Graph,
    g2: &Graph,
    cfg: &SpectralConfig,
    mode: ExactMode,
) -> Result<RhoOrdering, SpectralError> {
    rho_compare_cached(g1, None, g2, None, cfg, mode)
}

/// As [`rho_compare`], reusing spectral results the caller already has.
pub fn rho_compare_cached(
    g1: &Graph,
    r1: Option<&SpectralResult>,
    g2: &Graph,
    r2: Option<&SpectralResult>,
    cfg: &SpectralConfig,
    mode: ExactMode,
) -> Result<RhoOrdering, SpectralError> {
    if mode == ExactMode::OnOverlap {
        let own1;
        let e1 = match r1 {
            Some(r) => &r.enclosure,
            None => {
                own1 = spectral_radius_with(g1, cfg)?;
                &own1.enclosure
            }
        };
        let own2;
        let e2 = match r2 {
            Some(r) => &r.enclosure,
            None => {
                own2 = spectral_radius_with(g2, cfg)?;
                &own2.enclosure
            }
        };
        if e1.1 < e2.0 || e2.1 < e1.0 {
            let relation = if e1.1 < e2.0 {
                RhoRelation::Less
            } else {
                RhoRelation::Greater
            };
            return Ok(RhoOrdering {
                relation,
                certificate: ComparisonCertificate::DisjointEnclosures {
                    left: e1.clone(),
                    right: e2.clone(),
                },
            });
        }
    }
    exact_compare(g1, g2, cfg)
}

fn exact_compare(
    g1: &Graph,
    g2: &Graph,
    cfg: &SpectralConfig,
) -> Result<RhoOrdering, SpectralError> {
    let p1 = char_poly_with_cap(g1, cfg.exact_size_cap)?.square_free_part();
    let p2 = char_poly_with_cap(g2, cfg.exact_size_cap)?.square_free_part();
    let c1 = SturmChain::new(&p1);
    let c2 = SturmChain::new(&p2);
    let mut iv1 = isolate_largest_root(&p1, &c1).expect("adjacency spectra are real");
    let mut iv2 = isolate_largest_root(&p2, &c2).expect("adjacency spectra are real");

    let g = IntPoly::gcd(&p1, &p2);
    let gchain = (g.degree() > Some(0)).then(|| SturmChain::new(&g));

    // If the two largest roots are equal, the common-factor test fires on
    // the first pass; if not, bisection separates the intervals. The round
    // cap is a root-separation estimate and is never reached in practice.
    let cap = separation_round_cap(&p1, &p2);
    for _ in 0..cap {
        if let Some(ord) = disjoint_relation(&iv1, &iv2) {
            return Ok(ord);
        }
        if let Some(chain) = &gchain {
            let a = iv1.lo.clone().max(iv2.lo.clone());
            let b = iv1.hi.clone().min(iv2.hi.clone());
            if chain.count_roots_in(&a, &b) >= 1 {
                return Ok(RhoOrdering {
                    relation: RhoRelation::Equal,
                    certificate: ComparisonCertificate::CommonFactorEquality {
                        interval: (a, b),
                    },
                });
            }
        }
        bisect_once(&c1, &mut iv1);
        bisect_once(&c2, &mut iv2);
    }
    unreachable!("exceeded root separation bound while comparing radii");
}

fn disjoint_relation(iv1: &RootInterval, iv2: &RootInterval) -> Option<RhoOrdering> {
    // Intervals are half-open (lo, hi], so hi1 <= lo2 already means strict.
    let relation = if iv1.hi <= iv2.lo {
        RhoRelation::Less
    } else if iv2.hi <= iv1.lo {
        RhoRelation::Greater
    } else {
        return None;
    };
    Some(RhoOrdering {
        relation,
        certificate: ComparisonCertificate::ExactRootIsolation {
            left: (iv1.lo.clone(), iv1.hi.clone()),
            right: (iv2.lo.clone(), iv2.hi.clone()),
        },
    })
}

/// Bisection rounds sufficient to separate distinct roots of the two
/// polynomials, from a crude Mahler-style bound on coefficient size.
fn separation_round_cap(p1: &IntPoly, p2: &IntPoly) -> usize {
    let bits = |p: &IntPoly| {
        p.coeffs()
            .iter()
            .map(|c| c.bits())
            .max()
            .unwrap_or(1)
            .max(1) as usize
    };
    let d1 = p1.degree().unwrap_or(0).max(1);
    let d2 = p2.degree().unwrap_or(0).max(1);
    d1 * d2 + (d1 + d2) * (bits(p1) + bits(p2)) + 128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, NamedFamily};
    use crate::graph6::parse_graph6;

    fn cmp(a: NamedFamily, b: NamedFamily, mode: ExactMode) -> RhoOrdering {
        let g1 = make_family(a).unwrap();
        let g2 = make_family(b).unwrap();
        rho_compare(&g1, &g2, &SpectralConfig::default(), mode).unwrap()
    }

    #[test]
    fn disjoint_enclosures_settle_fast() {
        let ord = cmp(
            NamedFamily::Complete(2),
            NamedFamily::Path(3),
            ExactMode::OnOverlap,
        );
        assert_eq!(ord.relation, RhoRelation::Less);
        assert!(matches!(
            ord.certificate,
            ComparisonCertificate::DisjointEnclosures { .. }
        ));
    }

    #[test]
    fn equal_radii_found_through_common_factor() {
        // A 4-leaf star and a 5-cycle both have radius 2 but different
        // spectra; x - 2 divides both characteristic polynomials.
        let ord = cmp(
            NamedFamily::Star(4),
            NamedFamily::Cycle(5),
            ExactMode::OnOverlap,
        );
        assert_eq!(ord.relation, RhoRelation::Equal);
        assert!(matches!(
            ord.certificate,
            ComparisonCertificate::CommonFactorEquality { .. }
        ));
    }

    #[test]
    fn graph_equals_itself() {
        let ord = cmp(
            NamedFamily::Cycle(4),
            NamedFamily::Cycle(4),
            ExactMode::OnOverlap,
        );
        assert_eq!(ord.relation, RhoRelation::Equal);
    }

    #[test]
    fn relabeled_isomorph_is_equal() {
        let a = make_family(NamedFamily::Star(4)).unwrap();
        let b = parse_graph6("D?{").unwrap(); // same star, center last
        let ord =
            rho_compare(&a, &b, &SpectralConfig::default(), ExactMode::OnOverlap).unwrap();
        assert_eq!(ord.relation, RhoRelation::Equal);
    }

    #[test]
    fn always_mode_skips_enclosures() {
        let ord = cmp(
            NamedFamily::Complete(2),
            NamedFamily::Complete(3),
            ExactMode::Always,
        );
        assert_eq!(ord.relation, RhoRelation::Less);
        assert!(matches!(
            ord.certificate,
            ComparisonCertificate::ExactRootIsolation { .. }
        ));
    }

    #[test]
    fn antisymmetric_on_swap() {
        let a = cmp(
            NamedFamily::Path(4),
            NamedFamily::Cycle(6),
            ExactMode::OnOverlap,
        );
        let b = cmp(
            NamedFamily::Cycle(6),
            NamedFamily::Path(4),
            ExactMode::OnOverlap,
        );
        assert_eq!(a.relation, RhoRelation::Less);
        assert_eq!(b.relation, RhoRelation::Greater);
    }

    #[test]
    fn close_radii_resolved_exactly() {
        // rho(P5) = sqrt(3) = 1.732..., rho(K3) = 2: distinct, and the
        // exact path must agree when forced.
        let ord = cmp(
            NamedFamily::Path(5),
            NamedFamily::Complete(3),
            ExactMode::Always,
        );
        assert_eq!(ord.relation, RhoRelation::Less);
    }

    #[test]
    fn size_cap_errors_in_exact_mode() {
        let g1 = make_family(NamedFamily::Path(5)).unwrap();
        let g2 = make_family(NamedFamily::Path(4)).unwrap();
        let cfg = SpectralConfig {
            exact_size_cap: 4,
            ..SpectralConfig::default()
        };
        assert!(matches!(
            rho_compare(&g1, &g2, &cfg, ExactMode::Always),
            Err(SpectralError::SizeCap { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn single_vertex_below_single_edge() {
        let ord = cmp(
            NamedFamily::Path(1),
            NamedFamily::Complete(2),
            ExactMode::OnOverlap,
        );
        assert_eq!(ord.relation, RhoRelation::Less);
    }
}
