use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::{EdgeId, RankedDigraph};

/// The generator `a_index(edge)`, with `1 <= index <= l(edge)`. Its graded
/// degree is `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub edge: EdgeId,
    pub index: u32,
}

impl Generator {
    pub fn new(edge: EdgeId, index: u32) -> Self {
        Generator { edge, index }
    }

    pub fn degree(&self) -> u32 {
        self.index
    }

    /// `f(|e|, i)` where `|e|` is the rank of the tail.
    pub fn filtered_degree(&self, g: &RankedDigraph) -> i64 {
        crate::series::filtration_degree(g.rank(g.tail(self.edge)) as i64, self.index as i64)
    }

    pub fn render(&self, g: &RankedDigraph) -> String {
        format!("a{}({})", self.index, g.edge_name(self.edge))
    }
}

/// All generators of `T(E#)` in edge order, then by index.
pub fn generators(g: &RankedDigraph) -> Vec<Generator> {
    g.edges()
        .flat_map(|e| (1..=g.length(e)).map(move |i| Generator::new(e, i)))
        .collect()
}

/// A word in the generators; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub Vec<Generator>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(Generator::degree).sum()
    }

    pub fn filtered_degree(&self, g: &RankedDigraph) -> i64 {
        self.0.iter().map(|x| x.filtered_degree(g)).sum()
    }

    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    pub fn render(&self, g: &RankedDigraph) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|x| x.render(g)).collect::<Vec<_>>().join("*")
    }
}

/// Noncommutative polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FreePolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl FreePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), BigRational::one())
    }

    pub fn generator(x: Generator) -> Self {
        Self::monomial(Monomial(vec![x]), BigRational::one())
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreePolynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// The common graded degree of every term; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// Degree-`d` part.
    pub fn component(&self, d: u32) -> Self {
        FreePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms joined with explicit rational coefficients, e.g. `1*a1(e1) - 1/2*a2(e3)`.
    pub fn render(&self, g: &RankedDigraph) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            if m.0.is_empty() {
                let _ = write!(out, "{mag}");
            } else {
                let _ = write!(out, "{mag}*{}", m.render(g));
            }
        }
        out
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Add for &FreePolynomial {
    type Output = FreePolynomial;
    fn add(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreePolynomial {
    type Output = FreePolynomial;
    fn sub(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &FreePolynomial {
    type Output = FreePolynomial;
    fn mul(self, rhs: &FreePolynomial) -> FreePolynomial {
        let mut out = FreePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &FreePolynomial {
    type Output = FreePolynomial;
    fn neg(self) -> FreePolynomial {
        FreePolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}
