//! Exact integer polynomials and gamma-basis expansions.
//!
//! Coefficients are arbitrary-precision integers stored in ascending
//! degree order with no trailing zeros (the zero polynomial is the empty
//! vector). The gamma expansion rewrites a polynomial of degree at most
//! `n` in the basis `{x^k (x+1)^(n-2k)}`, peeling one coefficient at a
//! time; not every polynomial is expressible, and inexpressible inputs
//! are reported as errors.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A polynomial with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    /// Ascending by degree; no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: alloc::vec![BigInt::one()] }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// The monomial `c · x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// `(x + 1)^e`, via the Pascal recurrence.
    pub fn x_plus_one_pow(e: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::one()];
        for _ in 0..e {
            let mut next = alloc::vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Ascending coefficients padded with zeros up to degree `n`.
    pub fn coeffs_padded(&self, n: usize) -> Vec<BigInt> {
        let mut out = self.coeffs.clone();
        out.resize(n + 1, BigInt::zero());
        out
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = alloc::vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = alloc::vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Pretty form with descending powers, e.g. `x^4 + 22x^2 + 16`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.sign() == num_bigint::Sign::Minus {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let show_coeff = !abs.is_one() || k == 0;
            if show_coeff {
                write!(f, "{}", abs)?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", k)?,
            }
        }
        Ok(())
    }
}

/// Coefficients of a polynomial in the basis `{x^k (x+1)^(n-2k)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    entries: Vec<BigInt>,
}

impl GammaVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        GammaVector { entries }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Expands `q` in the basis `{x^k (x+1)^(n-2k) : 0 <= 2k <= n}`. The
/// coefficient of `x^k` is peeled off iteratively; if a non-zero residual
/// survives past `k = n/2` the polynomial is not expressible.
pub fn gamma_expand(q: &IntPolynomial, n: usize) -> Result<GammaVector> {
    if let Some(degree) = q.degree() {
        if degree > n {
            return Err(Error::DegreeTooHigh { degree, max: n });
        }
    }
    let mut residual = q.clone();
    let mut entries = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let gamma = residual.coeff(k);
        let basis = IntPolynomial::x_plus_one_pow(n - 2 * k).shift(k);
        residual = &residual - &basis.scale(&gamma);
        entries.push(gamma);
    }
    if !residual.is_zero() {
        return Err(Error::NotGammaExpressible);
    }
    Ok(GammaVector { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn arithmetic_and_trimming() {
        let p = poly(&[1, 2]);
        let q = poly(&[-1, -2]);
        assert!((&p + &q).is_zero());
        assert_eq!(&p * &p, poly(&[1, 4, 4]));
        assert_eq!(p.shift(2), poly(&[0, 0, 1, 2]));
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(IntPolynomial::x_plus_one_pow(0), IntPolynomial::one());
        assert_eq!(IntPolynomial::x_plus_one_pow(3), poly(&[1, 3, 3, 1]));
    }

    #[test]
    fn display_matches_table_style() {
        assert_eq!(poly(&[16, 0, 22, 0, 1]).to_string(), "x^4 + 22x^2 + 16");
        assert_eq!(poly(&[0, 1]).to_string(), "x");
        assert_eq!(poly(&[2, 0, 1]).to_string(), "x^2 + 2");
        assert_eq!(poly(&[-2, 1]).to_string(), "x - 2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(poly(&[1]).to_string(), "1");
    }

    #[test]
    fn gamma_expansion_of_fourth_eulerian() {
        // 1 + 11x + 11x^2 + x^3 = (x+1)^3 + 8x(x+1).
        let q = poly(&[1, 11, 11, 1]);
        let gamma = gamma_expand(&q, 3).unwrap();
        assert_eq!(gamma.entries(), &[BigInt::from(1), BigInt::from(8)]);
    }

    #[test]
    fn gamma_expansion_of_binomial() {
        let q = IntPolynomial::x_plus_one_pow(5);
        let gamma = gamma_expand(&q, 5).unwrap();
        assert_eq!(
            gamma.entries(),
            &[BigInt::from(1), BigInt::from(0), BigInt::from(0)]
        );
    }

    #[test]
    fn gamma_expansion_failures() {
        assert_eq!(
            gamma_expand(&poly(&[0, 0, 1]), 1).unwrap_err(),
            Error::DegreeTooHigh { degree: 2, max: 1 }
        );
        // x^2 has no expansion with n = 2: the residual survives past k = 1.
        assert_eq!(
            gamma_expand(&poly(&[0, 0, 1]), 2).unwrap_err(),
            Error::NotGammaExpressible
        );
    }
}
