//! Integer polynomials, Sturm chains, and exact real-root isolation.
//!
//! Everything here is exact: signs at rational points are decided in integer
//! arithmetic, and root counts come from Sturm's theorem, so the intervals
//! produced are certificates rather than estimates.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Polynomial with integer coefficients; `coeffs[k]` multiplies `x^k`.
/// No trailing zeros are stored, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * BigInt::from(k + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, preserving the sign of every coefficient.
    fn primitive(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|k| k / &c).collect(),
        }
    }

    /// Sign of `p(x)` at a rational point, computed in integer arithmetic.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let a = x.numer();
        let b = x.denom(); // positive by Ratio's normalization
        let d = self.coeffs.len() - 1;
        let mut acc = self.coeffs[d].clone();
        let mut bpow = BigInt::one();
        for k in (0..d).rev() {
            bpow *= b;
            acc = acc * a + &self.coeffs[k] * &bpow;
        }
        match acc.sign() {
            Sign::Plus => 1,
            Sign::NoSign => 0,
            Sign::Minus => -1,
        }
    }

    /// Remainder of `self` by `div`, scaled by a positive constant.
    fn pseudo_rem(&self, div: &IntPoly) -> IntPoly {
        let dd = div.degree().expect("nonzero divisor");
        let lead = div.leading().clone();
        let mut r = self.clone();
        let mut steps = 0usize;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let mut next = vec![BigInt::zero(); dr];
            for (k, c) in r.coeffs[..dr].iter().enumerate() {
                next[k] = c * &lead;
            }
            for (k, c) in div.coeffs[..dd].iter().enumerate() {
                next[k + dr - dd] -= c * &lr;
            }
            r = IntPoly::new(next);
            steps += 1;
        }
        if lead.is_negative() && steps % 2 == 1 {
            r.neg()
        } else {
            r
        }
    }

    /// Exact quotient; panics if `div` does not divide `self` over the
    /// integers. Callers only divide by known factors.
    pub fn exact_div(&self, div: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dd = div.degree().expect("nonzero divisor");
        let ds = self.degree().expect("nonzero dividend");
        assert!(ds >= dd, "divisor degree exceeds dividend degree");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + dd].div_rem(div.leading());
            assert!(r.is_zero(), "inexact polynomial division");
            for (i, c) in div.coeffs.iter().enumerate() {
                rem[k + i] -= c * &q;
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "nonzero remainder");
        IntPoly::new(quot)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let mut f = a.primitive();
        let mut g = b.primitive();
        if f.is_zero() {
            return normalize_positive(g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive();
            f = g;
            g = r;
        }
        normalize_positive(f)
    }

    /// `self` divided by `gcd(self, self')`; same roots, all simple.
    pub fn square_free_part(&self) -> IntPoly {
        let d = self.derivative();
        if d.is_zero() {
            return self.primitive();
        }
        let g = IntPoly::gcd(self, &d);
        if g.degree() == Some(0) {
            self.primitive()
        } else {
            self.primitive().exact_div(&g)
        }
    }

    /// Rational `B` with every real root of `self` strictly inside `(-B, B)`.
    pub fn cauchy_root_bound(&self) -> BigRational {
        let d = self.degree().expect("nonzero polynomial");
        let lead = self.coeffs[d].abs();
        let biggest = self.coeffs[..d]
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::new(&lead + biggest, lead)
    }
}

fn normalize_positive(p: IntPoly) -> IntPoly {
    if !p.is_zero() && p.leading().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Sturm chain of a polynomial, for counting real roots in an interval.
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Chain `p, p', -rem(...), ...` with primitive integer entries.
    pub fn new(p: &IntPoly) -> SturmChain {
        let p0 = p.primitive();
        let mut chain = vec![p0];
        let p1 = p.derivative().primitive();
        if p1.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p1);
        loop {
            let k = chain.len();
            let r = chain[k - 2].pseudo_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        SturmChain { chain }
    }

    /// Sign variations at `x`, zeros dropped. Equals the variation count
    /// just right of `x`, which gives half-open `(a, b]` semantics below.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.checked_sub(vb)
            .expect("Sturm variations must not increase")
    }
}

/// Half-open interval `(lo, hi]` certified to contain exactly one root of a
/// square-free polynomial, namely its largest real root.
#[derive(Debug, Clone)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

/// Isolates the largest real root of a square-free polynomial. Returns
/// `None` when the polynomial has no real roots.
pub fn isolate_largest_root(p: &IntPoly, chain: &SturmChain) -> Option<RootInterval> {
    let bound = p.cauchy_root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    if chain.count_roots_in(&lo, &hi) == 0 {
        return None;
    }
    while chain.count_roots_in(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        if chain.count_roots_in(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(RootInterval { lo, hi })
}

/// Halves an isolating interval once, preserving the one-root invariant.
pub fn bisect_once(chain: &SturmChain, iv: &mut RootInterval) {
    let mid = (&iv.lo + &iv.hi) / BigRational::from_integer(2.into());
    if chain.count_roots_in(&mid, &iv.hi) == 1 {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

/// Shrinks an isolating interval until `hi - lo <= width`.
pub fn refine_to_width(chain: &SturmChain, iv: &mut RootInterval, width: &BigRational) {
    while &iv.hi - &iv.lo > *width {
        bisect_once(chain, iv);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sign_at_rational_points() {
        let p = IntPoly::from_i64(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(p.sign_at(&rat(0, 1)), -1);
        assert_eq!(p.sign_at(&rat(3, 2)), 1);
        assert_eq!(p.sign_at(&rat(7, 5)), -1);
    }

    #[test]
    fn counts_roots_of_quadratic() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots_in(&rat(0, 1), &rat(2, 1)), 1);
        assert_eq!(chain.count_roots_in(&rat(-2, 1), &rat(2, 1)), 2);
        assert_eq!(chain.count_roots_in(&rat(2, 1), &rat(9, 1)), 0);
    }

    #[test]
    fn half_open_interval_counts_root_at_right_endpoint() {
        let p = IntPoly::from_i64(&[0, 1]); // x
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots_in(&rat(-1, 1), &rat(0, 1)), 1);
        assert_eq!(chain.count_roots_in(&rat(0, 1), &rat(1, 1)), 0);
    }

    #[test]
    fn isolates_largest_root_of_cubic() {
        // x^3 - 4x has roots -2, 0, 2.
        let p = IntPoly::from_i64(&[0, -4, 0, 1]);
        let chain = SturmChain::new(&p);
        let mut iv = isolate_largest_root(&p, &chain).unwrap();
        refine_to_width(&chain, &mut iv, &rat(1, 1 << 20));
        let two = rat(2, 1);
        assert!(iv.lo < two && two <= iv.hi);
    }

    #[test]
    fn square_free_part_strips_multiplicity() {
        // x^5 - 4x^3 = x^3 (x-2)(x+2) has square-free part x^3 - 4x.
        let p = IntPoly::from_i64(&[0, 0, 0, -4, 0, 1]);
        assert_eq!(p.square_free_part(), IntPoly::from_i64(&[0, -4, 0, 1]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-2)(x+1) and (x-2)(x+3) share x-2.
        let a = IntPoly::from_i64(&[-2, -1, 1]);
        let b = IntPoly::from_i64(&[-6, 1, 1]);
        assert_eq!(IntPoly::gcd(&a, &b), IntPoly::from_i64(&[-2, 1]));
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(IntPoly::gcd(&a, &b).degree(), Some(0));
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = IntPoly::from_i64(&[-2, 1]);
        let b = IntPoly::from_i64(&[5, 3]);
        assert_eq!(a.mul(&b).exact_div(&a), b);
    }

    #[test]
    fn cauchy_bound_exceeds_roots() {
        let p = IntPoly::from_i64(&[0, -4, 0, 1]);
        assert!(p.cauchy_root_bound() > rat(2, 1));
    }

    #[test]
    fn degree_one_chain_isolates() {
        let p = IntPoly::from_i64(&[0, 1]);
        let chain = SturmChain::new(&p);
        let iv = isolate_largest_root(&p, &chain).unwrap();
        assert!(iv.lo < rat(0, 1) && rat(0, 1) <= iv.hi);
    }
}
