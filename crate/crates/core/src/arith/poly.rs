use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    pub fn monomial(coeff: BigInt, exponent: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = coeff;
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] += BigInt::one();
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// `Σ x^e` over the given exponents, counting repeats.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for e in exponents {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += 1;
        }
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// The digit polynomial `Σ_{d∈D} x^(d - min D)`, shifted so every exponent
    /// is nonnegative.
    pub fn from_digits(digits: &[i64]) -> Self {
        let Some(&lo) = digits.iter().min() else {
            return Self::zero();
        };
        Self::from_exponents(digits.iter().map(|&d| (d as i128 - lo as i128) as usize))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Fold exponents modulo `m`, i.e. reduce modulo `x^m - 1`.
    pub fn reduce_exponents(&self, m: usize) -> Self {
        assert!(m > 0, "exponent modulus must be positive");
        let mut coeffs = vec![BigInt::zero(); m.min(self.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i % m] += c;
        }
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    ///
    /// # Panics
    ///
    /// If `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = core::mem::take(&mut rem[i + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        let mut q = Self { coeffs: quot };
        let mut r = Self { coeffs: rem };
        q.trim();
        r.trim();
        (q, r)
    }

    /// Evaluate at a complex point given as `(re, im)`. Diagnostic only.
    pub fn eval_complex(&self, z: (f64, f64)) -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            let c = bigint_to_f64(c);
            let nre = re * z.0 - im * z.1 + c;
            im = re * z.1 + im * z.0;
            re = nre;
        }
        (re, im)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: Self) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: Self) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)))
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: Self) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntegerPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}
