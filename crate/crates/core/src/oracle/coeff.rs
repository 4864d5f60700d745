use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

/// Exact rational coefficient kept in machine integers until an operation
/// would overflow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Small(Ratio<i64>),
    Big(BigRational),
}

/// Small values stay clear of `i64::MIN`, whose negation overflows.
const LIMIT: i64 = 1 << 62;

fn fits(n: i64) -> bool {
    -LIMIT < n && n < LIMIT
}

impl Coeff {
    pub fn from_big(x: &BigRational) -> Self {
        match (x.numer().to_i64(), x.denom().to_i64()) {
            (Some(n), Some(d)) if fits(n) && fits(d) => Coeff::Small(Ratio::new_raw(n, d)),
            _ => Coeff::Big(x.clone()),
        }
    }

    fn small(v: Option<Ratio<i64>>) -> Option<Coeff> {
        v.filter(|r| fits(*r.numer()) && fits(*r.denom())).map(Coeff::Small)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Coeff::Big(r) => r.clone(),
        }
    }

    fn demote(x: BigRational) -> Self {
        Self::from_big(&x)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_zero(),
            Coeff::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_one(),
            Coeff::Big(r) => r.is_one(),
        }
    }

    /// `self - f * p`.
    pub fn sub_mul(&self, f: &Coeff, p: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(f), Coeff::Small(p)) = (self, f, p) {
            if let Some(v) = Self::small(f.checked_mul(p).and_then(|fp| a.checked_sub(&fp))) {
                return v;
            }
        }
        Self::demote(self.to_big() - f.to_big() * p.to_big())
    }

    /// `-(f * p)`.
    pub fn neg_mul(f: &Coeff, p: &Coeff) -> Coeff {
        if let (Coeff::Small(f), Coeff::Small(p)) = (f, p) {
            if let Some(v) = Self::small(f.checked_mul(p).map(|v| -v)) {
                return v;
            }
        }
        Self::demote(-(f.to_big() * p.to_big()))
    }

    pub fn div(&self, d: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, d) {
            if let Some(v) = Self::small(a.checked_div(b)) {
                return v;
            }
        }
        Self::demote(self.to_big() / d.to_big())
    }
}
