//! Dense univariate polynomials with unbounded integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending exponent order.
///
/// Always canonical: the last stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c·y^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        Self::from_coeffs(coeffs)
    }

    /// Sum of signed monomials `Σ sign·y^exp`; repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (c, k) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Self::from_coeffs(coeffs)
    }

    /// `y^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        Self::from_terms([(1, n), (-1, 0)])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficients as machine words, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Quotient and remainder by a monic divisor.
    ///
    /// The divisor must be monic so that every intermediate stays integral;
    /// there is no rational fallback.
    pub fn divrem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - dd + 1];
        for k in (0..=da - dd).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs[..dd].iter().enumerate() {
                if !dj.is_zero() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &IntPoly) -> Result<IntPoly> {
        self.divrem(divisor).map(|(_, r)| r)
    }

    /// Reduction modulo `y^b - 1`: the coefficient of `y^j` collects every
    /// coefficient whose exponent is congruent to `j` mod `b`.
    pub fn reduce_cyclic(&self, b: usize) -> Result<IntPoly> {
        if b == 0 {
            return Err(Error::TooSmall { name: "b", min: 1, value: 0 });
        }
        let mut out = vec![BigInt::zero(); b.min(self.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i % b] += c;
        }
        Ok(Self::from_coeffs(out))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Renders with LaTeX exponent braces, e.g. `2y^{3} - y^{2} + 1`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match (k, latex) {
                (0, _) => {}
                (1, _) => out.push('y'),
                (_, false) => out.push_str(&format!("y^{k}")),
                (_, true) => out.push_str(&format!("y^{{{k}}}")),
            }
        }
        out
    }
}

/// Canonical text form: descending exponents, explicit signs between terms,
/// unit coefficients suppressed, e.g. `y^3 - 3y^2 + 3y - 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Remainder of `dividend` modulo a monic `divisor` in machine words.
///
/// Returns `None` as soon as any intermediate overflows, so callers can fall
/// back to [`IntPoly::divrem`]. The result is exact whenever it is `Some`.
pub fn remainder_i64(dividend: &[i64], divisor: &[i64]) -> Option<Vec<i64>> {
    let dd = divisor.len().checked_sub(1)?;
    debug_assert_eq!(divisor[dd], 1);
    let mut rem = dividend.to_vec();
    if rem.len() > dd {
        for k in (0..rem.len() - dd).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c == 0 {
                continue;
            }
            for (j, &dj) in divisor[..dd].iter().enumerate() {
                if dj != 0 {
                    let prod = c.checked_mul(dj)?;
                    rem[k + j] = rem[k + j].checked_sub(prod)?;
                }
            }
        }
        rem.truncate(dd);
    }
    while rem.last() == Some(&0) {
        rem.pop();
    }
    Some(rem)
}
