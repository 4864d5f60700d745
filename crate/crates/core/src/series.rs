//! Exact integer polynomials, truncated power series, rational series, and
//! the Hilbert series of `A(G)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{GraphError, RankedDigraph};
use crate::moebius;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("constant term {0} is not a unit; series is not invertible")]
    NotUnit(BigInt),
    #[error("rational series denominator must have constant term 1")]
    BadDenominator,
    #[error("graph is not a rooted tree")]
    NotTree,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
}

/// Dense polynomial with exact integer coefficients; index is degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial(Vec<BigInt>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        IntPolynomial(vec![BigInt::one()])
    }

    /// `c z^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.0.iter().cloned());
        IntPolynomial(coeffs)
    }

    /// Exact quotient by `1 - z` when `p(1) = 0`.
    pub fn div_one_minus_z(&self) -> Option<Self> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // p = (1 - z) q  =>  q_k = sum_{i <= k} p_i
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.0.len());
        for c in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += c;
            q.push(acc.clone());
        }
        Some(Self::new(q))
    }
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(v: Vec<BigInt>) -> Self {
        Self::new(v)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.0.len().max(rhs.0.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial(self.0.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $f(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for IntPolynomial {
    /// `4 - 2z - 2z^2 + z^3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Power series known up to and including `z^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn from_poly(p: &IntPolynomial, order: usize) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&IntPolynomial::one(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Cauchy product, truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let n = self.order;
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(n, out))
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if !(a0.is_one() || (-a0).is_one()) {
            return Err(SeriesError::NotUnit(a0.clone()));
        }
        // b_0 = a_0 and b_n = -a_0 * sum_{k=1..n} a_k b_{n-k}, using a_0^{-1} = a_0.
        let mut b: Vec<BigInt> = Vec::with_capacity(self.order + 1);
        b.push(a0.clone());
        for n in 1..=self.order {
            let mut s = BigInt::zero();
            for k in 1..=n {
                s += &self.coeffs[k] * &b[n - k];
            }
            b.push(-(a0 * s));
        }
        Ok(Self::new(self.order, b))
    }
}

/// `numerator / denominator` with the denominator's constant term equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalSeries {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, SeriesError> {
        if !den.coeff(0).is_one() {
            return Err(SeriesError::BadDenominator);
        }
        Ok(RationalSeries { num, den })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    /// Long division up to `z^order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let mut c: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut v = self.num.coeff(n);
            for k in 1..=n.min(self.den.coeffs().len().saturating_sub(1)) {
                v -= &self.den.coeffs()[k] * &c[n - k];
            }
            c.push(v);
        }
        TruncatedSeries::new(order, c)
    }

    /// Cancel every common factor `1 - z`.
    pub fn reduced(&self) -> Self {
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        while !num.is_zero() {
            match (num.div_one_minus_z(), den.div_one_minus_z()) {
                (Some(n), Some(d)) => {
                    num = n;
                    den = d;
                }
                _ => break,
            }
        }
        RationalSeries { num, den }
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub rational: RationalSeries,
    pub expansion: TruncatedSeries,
}

/// `h(z) = (1 - z) / (1 - z M(G)(z))`, unreduced, with its expansion to `order`.
pub fn hilbert_series(g: &RankedDigraph, order: usize) -> Result<HilbertSeries, SeriesError> {
    g.rank_zero_sink()?;
    let m = moebius::m_series(g)?;
    let num = IntPolynomial::from_i64s(&[1, -1]);
    let den = &IntPolynomial::one() - &m.shift(1);
    let rational = RationalSeries::new(num, den)?;
    let expansion = rational.expand(order);
    Ok(HilbertSeries { rational, expansion })
}

/// `1 / (1 - sum_j m_j z^j)` where `m_j` counts edges of length at least `j`.
pub fn hilbert_tree(g: &RankedDigraph) -> Result<RationalSeries, SeriesError> {
    if !g.is_rooted_tree() {
        return Err(SeriesError::NotTree);
    }
    let longest = g.edges().map(|e| g.length(e)).max().unwrap_or(0) as usize;
    let mut den = vec![BigInt::zero(); longest + 1];
    den[0] = BigInt::one();
    for e in g.edges() {
        for d in den.iter_mut().skip(1).take(g.length(e) as usize) {
            *d -= 1;
        }
    }
    RationalSeries::new(IntPolynomial::one(), IntPolynomial::new(den))
}

/// `f(a, j) = j a - j (j - 1) / 2`, the filtered degree of `a_j(e)` when `|e| = a`.
pub fn filtration_degree(a: i64, j: i64) -> i64 {
    j * a - j * (j - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_chain, gen_delta, parse_graph};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    fn orbit_graph() -> RankedDigraph {
        parse_graph(
            "vertex a 3\nvertex b 2\nvertex c 1\nvertex star 0\n\
             edge e1 a b\nedge e2 a c\nedge e3 b star\nedge e4 c star\n",
        )
        .unwrap()
    }

    #[test]
    fn geometric_inverse() {
        let s = TruncatedSeries::from_poly(&IntPolynomial::from_i64s(&[1, -1]), 4);
        assert_eq!(s.inverse().unwrap().coeffs(), ints(&[1, 1, 1, 1, 1]).as_slice());
        let bad = TruncatedSeries::from_poly(&IntPolynomial::from_i64s(&[2, 1]), 4);
        assert!(matches!(bad.inverse(), Err(SeriesError::NotUnit(_))));
    }

    #[test]
    fn truncated_product() {
        let a = TruncatedSeries::from_poly(&IntPolynomial::from_i64s(&[1, -1]), 1);
        let b = TruncatedSeries::from_poly(&IntPolynomial::from_i64s(&[1, 1]), 1);
        assert_eq!(a.mul(&b).unwrap().coeffs(), ints(&[1, 0]).as_slice());
    }

    #[test]
    fn expand_example_denominator() {
        let r = RationalSeries::new(IntPolynomial::one(), IntPolynomial::from_i64s(&[1, -3, -1, 1])).unwrap();
        assert_eq!(r.expand(4).coeffs(), ints(&[1, 3, 10, 32, 103]).as_slice());
        assert!(RationalSeries::new(IntPolynomial::one(), IntPolynomial::from_i64s(&[2])).is_err());
    }

    #[test]
    fn orbit_graph_hilbert() {
        let h = hilbert_series(&orbit_graph(), 10).unwrap();
        assert_eq!(h.rational.denominator(), &IntPolynomial::from_i64s(&[1, -4, 2, 2, -1]));
        let red = h.rational.reduced();
        assert_eq!(red.numerator(), &IntPolynomial::one());
        assert_eq!(red.denominator(), &IntPolynomial::from_i64s(&[1, -3, -1, 1]));
        assert_eq!(h.expansion.coeffs()[..5], ints(&[1, 3, 10, 32, 103])[..]);
    }

    #[test]
    fn delta_hilbert() {
        let h = hilbert_series(&gen_delta(1).unwrap(), 5).unwrap();
        assert_eq!(h.rational.denominator(), &IntPolynomial::from_i64s(&[1, -2, 1]));
        assert_eq!(h.expansion.coeffs(), ints(&[1; 6]).as_slice());
        for d in 1..=4u32 {
            let h = hilbert_series(&gen_delta(d).unwrap(), 8).unwrap();
            let mut den = vec![-1i64; d as usize + 1];
            den[0] = 1;
            let free = RationalSeries::new(IntPolynomial::one(), IntPolynomial::from_i64s(&den)).unwrap();
            assert_eq!(h.expansion, free.expand(8));
        }
    }

    #[test]
    fn tree_formula() {
        let r = hilbert_tree(&gen_chain(&[1, 2]).unwrap()).unwrap();
        assert_eq!(r.denominator(), &IntPolynomial::from_i64s(&[1, -2, -1]));
        let r = hilbert_tree(&gen_delta(3).unwrap()).unwrap();
        assert_eq!(r.denominator(), &IntPolynomial::from_i64s(&[1, -1, -1, -1]));
        let single = parse_graph("vertex r 0\n").unwrap();
        assert_eq!(
            hilbert_tree(&single).unwrap().expand(3).coeffs(),
            ints(&[1, 0, 0, 0]).as_slice()
        );
        assert!(matches!(hilbert_tree(&orbit_graph()), Err(SeriesError::NotTree)));
    }

    #[test]
    fn hilbert_needs_rank_zero_sink() {
        let shifted = parse_graph("vertex a 2\nvertex s 1\nedge e a s\n").unwrap();
        assert!(hilbert_series(&shifted, 3).is_err());
    }

    #[test]
    fn filtration() {
        assert_eq!(filtration_degree(7, 0), 0);
        assert_eq!(filtration_degree(3, 2), 5);
        assert_eq!(filtration_degree(4, 1), 4);
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPolynomial::from_i64s(&[4, -2, -2, 1]).to_string(),
            "4 - 2z - 2z^2 + z^3"
        );
        assert_eq!(IntPolynomial::from_i64s(&[0, -1]).to_string(), "-z");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-5i64..6, 0..6).prop_map(|v| IntPolynomial::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn inverse_round_trip(mut p in arb_poly(), sign in prop::bool::ANY, order in 0usize..8) {
            let mut c = p.coeffs().to_vec();
            if c.is_empty() { c.push(BigInt::zero()); }
            c[0] = if sign { BigInt::one() } else { -BigInt::one() };
            p = IntPolynomial::new(c);
            let s = TruncatedSeries::from_poly(&p, order);
            prop_assert_eq!(s.mul(&s.inverse().unwrap()).unwrap(), TruncatedSeries::one(order));
        }

        #[test]
        fn expansion_times_denominator_is_numerator(num in arb_poly(), tail in arb_poly(), order in 0usize..8) {
            let den = &IntPolynomial::one() + &tail.shift(1);
            let r = RationalSeries::new(num.clone(), den.clone()).unwrap();
            let prod = r.expand(order).mul(&TruncatedSeries::from_poly(&den, order)).unwrap();
            prop_assert_eq!(prod, TruncatedSeries::from_poly(&num, order));
        }

        #[test]
        fn reduction_preserves_expansion(num in arb_poly(), tail in arb_poly(), k in 0usize..3) {
            let den = &IntPolynomial::one() + &tail.shift(1);
            let mut f = IntPolynomial::one();
            for _ in 0..k { f = &f * &IntPolynomial::from_i64s(&[1, -1]); }
            let r = RationalSeries::new(&num * &f, &den * &f).unwrap();
            prop_assert_eq!(r.reduced().expand(7), r.expand(7));
        }
    }
}
