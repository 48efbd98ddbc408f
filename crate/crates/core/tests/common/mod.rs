//! Independent oracles for the integration suites. Everything here is
//! deliberately naive: polynomial determinants by cofactor expansion and
//! path enumeration by depth-first search, sharing no code with the
//! library implementations they check.

#![allow(dead_code)]

use num::{BigInt, BigRational, Zero};
use rhograph::{
    isolate_largest_root, refine_to_width, Graph, IntPoly, SturmChain,
};
use std::collections::BTreeSet;

/// Dense polynomial with ascending integer coefficients; just enough
/// arithmetic to expand a determinant.
#[derive(Clone)]
pub struct MiniPoly(pub Vec<BigInt>);

impl MiniPoly {
    fn constant(c: i64) -> MiniPoly {
        MiniPoly(vec![BigInt::from(c)])
    }

    fn x_minus(c: i64) -> MiniPoly {
        MiniPoly(vec![BigInt::from(-c), BigInt::from(1)])
    }

    fn add(&self, other: &MiniPoly) -> MiniPoly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        MiniPoly(out)
    }

    fn mul(&self, other: &MiniPoly) -> MiniPoly {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MiniPoly(out)
    }

    fn neg(&self) -> MiniPoly {
        MiniPoly(self.0.iter().map(|c| -c).collect())
    }

    /// Coefficients with trailing zeros trimmed, for comparison against
    /// the library's representation.
    pub fn trimmed(mut self) -> Vec<BigInt> {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self.0
    }
}

fn determinant(m: &[Vec<MiniPoly>]) -> MiniPoly {
    let n = m.len();
    if n == 0 {
        return MiniPoly::constant(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MiniPoly::constant(0);
    for col in 0..n {
        let minor: Vec<Vec<MiniPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][col].mul(&determinant(&minor));
        acc = acc.add(&if col % 2 == 0 { term } else { term.neg() });
    }
    acc
}

/// det(xI - A) by cofactor expansion, ascending coefficients.
pub fn charpoly_cofactor(g: &Graph) -> Vec<BigInt> {
    let n = g.vertex_count();
    let m: Vec<Vec<MiniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        MiniPoly::x_minus(0)
                    } else if g.has_edge(i, j) {
                        MiniPoly::constant(-1)
                    } else {
                        MiniPoly::constant(0)
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m).trimmed()
}

/// All internal paths by brute-force DFS from every branch vertex,
/// extending only through degree-2 vertices, normalized so either
/// traversal direction yields the same key.
pub fn internal_paths_bruteforce(g: &Graph) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for start in 0..g.vertex_count() {
        if g.degree(start) <= 2 {
            continue;
        }
        let mut path = vec![start];
        dfs(g, start, &mut path, &mut out);
    }
    out
}

fn dfs(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    let last = *path.last().unwrap();
    for &next in g.neighbors(last) {
        if next == start {
            // Closing the walk is legal only as a full cycle of interior
            // degree-2 vertices, not by reusing the first edge.
            if path.len() >= 3 {
                let mut seq = path.clone();
                seq.push(start);
                out.insert(normalize_path(&seq));
            }
            continue;
        }
        if path.contains(&next) {
            continue;
        }
        if g.degree(next) > 2 {
            let mut seq = path.clone();
            seq.push(next);
            out.insert(normalize_path(&seq));
            continue;
        }
        if g.degree(next) == 2 {
            path.push(next);
            dfs(g, start, path, out);
            path.pop();
        }
    }
}

/// Direction-independent key: the lexicographically smaller of the two
/// traversals.
pub fn normalize_path(seq: &[usize]) -> Vec<usize> {
    let fwd = seq.to_vec();
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    fwd.min(rev)
}

/// Exact interval of width at most `width` around the largest real root
/// of the polynomial with the given ascending coefficients.
pub fn largest_root_interval(
    coeffs: &[BigInt],
    width: &BigRational,
) -> (BigRational, BigRational) {
    let p = IntPoly::new(coeffs.to_vec());
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf);
    let mut iv = isolate_largest_root(&sf, &chain).expect("poly has a real root");
    refine_to_width(&chain, &mut iv, width);
    (iv.lo, iv.hi)
}

/// Checks that the closed interval [lo, hi] contains the largest real
/// root, by exact Sturm counts: nothing above hi, and something above lo
/// unless lo is itself the root.
pub fn interval_contains_largest_root(
    coeffs: &[BigInt],
    lo: &BigRational,
    hi: &BigRational,
) -> bool {
    let p = IntPoly::new(coeffs.to_vec());
    let sf = p.square_free_part();
    let chain = SturmChain::new(&sf);
    let bound = sf.cauchy_root_bound();
    if chain.count_roots_in(hi, &bound) != 0 {
        return false;
    }
    chain.count_roots_in(lo, &bound) >= 1 || sf.sign_at(lo) == 0
}

/// Connected labeled graph for an upper-triangle edge bitmask, pairs in
/// lexicographic order; None when the mask gives a disconnected graph.
pub fn mask_graph(n: usize, mask: u64) -> Option<Graph> {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    let g = Graph::from_edges(n, &edges).expect("in-range simple edges");
    g.is_connected().then_some(g)
}

/// Same bitmask construction without the connectivity filter.
pub fn mask_graph_any(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("in-range simple edges")
}
