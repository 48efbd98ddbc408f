//! Exact characteristic polynomial of a graph's adjacency matrix.
//!
//! Uses the Faddeev-LeVerrier recurrence over `BigInt`, which costs n+1
//! integer matrix products. That is fine for the small orders where exact
//! spectral comparison is wanted, and a size cap keeps callers honest.

use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::spectral::SpectralError;
use num::{BigInt, One, Zero};

pub const DEFAULT_EXACT_SIZE_CAP: usize = 16;

/// `det(xI - A)` for the adjacency matrix of `g`, monic of degree n.
pub fn char_poly(g: &Graph) -> Result<IntPoly, SpectralError> {
    char_poly_with_cap(g, DEFAULT_EXACT_SIZE_CAP)
}

/// As [`char_poly`], refusing graphs larger than `cap` vertices.
pub fn char_poly_with_cap(g: &Graph, cap: usize) -> Result<IntPoly, SpectralError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if n > cap {
        return Err(SpectralError::SizeCap { n, cap });
    }

    // Faddeev-LeVerrier: M_1 = I, and for k = 1..n
    //   c_{n-k} = -tr(A M_k) / k,   M_{k+1} = A M_k + c_{n-k} I.
    // Every division is exact over the integers.
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = identity(n);
    for k in 1..=n {
        let am = adj_mul(g, &m);
        let mut trace = BigInt::zero();
        for (i, row) in am.iter().enumerate() {
            trace += &row[i];
        }
        let c = -trace / BigInt::from(k);
        if k < n {
            m = am;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &c;
            }
        }
        coeffs[n - k] = c;
    }
    Ok(IntPoly::new(coeffs))
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

/// `A * M` where `A` is the adjacency matrix: row i sums M's neighbor rows.
fn adj_mul(g: &Graph, m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = g.vertex_count();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for &u in g.neighbors(i) {
            for j in 0..n {
                out[i][j] += &m[u][j];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Graph, NamedFamily};
    use num::Signed;

    fn poly_i64(g: &Graph) -> Vec<i64> {
        char_poly(g)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| {
                assert!(c.abs() < num::BigInt::from(i64::MAX));
                let (sign, digits) = c.to_u64_digits();
                let mag = digits.first().copied().unwrap_or(0) as i64;
                if sign == num::bigint::Sign::Minus {
                    -mag
                } else {
                    mag
                }
            })
            .collect()
    }

    #[test]
    fn single_vertex_is_x() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(poly_i64(&g), vec![0, 1]);
    }

    #[test]
    fn single_edge_is_x_squared_minus_one() {
        let g = make_family(NamedFamily::Complete(2)).unwrap();
        assert_eq!(poly_i64(&g), vec![-1, 0, 1]);
    }

    #[test]
    fn path_three_poly() {
        let g = make_family(NamedFamily::Path(3)).unwrap();
        assert_eq!(poly_i64(&g), vec![0, -2, 0, 1]);
    }

    #[test]
    fn four_cycle_poly() {
        let g = make_family(NamedFamily::Cycle(4)).unwrap();
        assert_eq!(poly_i64(&g), vec![0, 0, -4, 0, 1]);
    }

    #[test]
    fn star_four_poly() {
        let g = make_family(NamedFamily::Star(4)).unwrap();
        assert_eq!(poly_i64(&g), vec![0, 0, 0, -4, 0, 1]);
    }

    #[test]
    fn triangle_poly() {
        let g = make_family(NamedFamily::Complete(3)).unwrap();
        assert_eq!(poly_i64(&g), vec![-2, -3, 0, 1]);
    }

    #[test]
    fn second_coefficient_counts_edges() {
        // In det(xI - A) the x^{n-2} coefficient is minus the edge count.
        let g = make_family(NamedFamily::Cycle(6)).unwrap();
        let p = char_poly(&g).unwrap();
        let n = g.vertex_count();
        assert_eq!(p.coeffs()[n - 1], num::BigInt::from(0));
        assert_eq!(p.coeffs()[n - 2], num::BigInt::from(-(g.edge_count() as i64)));
    }

    #[test]
    fn refuses_past_cap() {
        let g = make_family(NamedFamily::Path(5)).unwrap();
        assert!(matches!(
            char_poly_with_cap(&g, 4),
            Err(SpectralError::SizeCap { n: 5, cap: 4 })
        ));
    }

    #[test]
    fn disconnected_pair_of_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(poly_i64(&g), vec![1, 0, -2, 0, 1]);
    }
}
