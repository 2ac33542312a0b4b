use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Exact rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    /// # Panics
    ///
    /// If `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// The integers inside the interval as an inclusive range `(first, last)`,
    /// or `None` if there are none (or they do not fit in `i64`).
    pub fn integer_hull(&self) -> Option<(i64, i64)> {
        let first = ceil(&self.lo).to_i64()?;
        let last = self.hi.floor().to_integer().to_i64()?;
        (first <= last).then_some((first, last))
    }
}

fn ceil(x: &Rational) -> BigInt {
    let (q, r) = x.numer().div_mod_floor(x.denom());
    if r == BigInt::from(0) {
        q
    } else {
        q + 1
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
