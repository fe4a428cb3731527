use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Laurent polynomial in one variable `t` with integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// From coefficients of `t^0, t^1, …`.
    pub fn from_coefficients<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(e as i64, c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `p(1/t)`.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Divides by `±t^j` so the lowest term is a positive constant.
    pub fn normalize(&self) -> Self {
        let Some(lo) = self.min_degree() else {
            return Self::zero();
        };
        let p = self.shift(-lo);
        if p.coefficient(0).is_negative() {
            -p
        } else {
            p
        }
    }

    /// Equality up to multiplication by `±t^j`.
    pub fn associate(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }

    /// `Δ(t) ≐ Δ(1/t)`.
    pub fn is_symmetric(&self) -> bool {
        self.associate(&self.invert_variable())
    }

    /// Coefficients of the normalized polynomial, lowest degree first.
    pub fn normalized_coefficients(&self) -> Vec<BigInt> {
        let p = self.normalize();
        match p.max_degree() {
            None => Vec::new(),
            Some(hi) => (0..=hi).map(|e| p.coefficient(e)).collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if it does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let dlo = divisor.min_degree().unwrap();
        let dhi = divisor.max_degree().unwrap();
        let lead = divisor.coefficient(dhi);
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some(hi) = rem.max_degree() {
            if hi - rem.min_degree().unwrap() < dhi - dlo {
                return None;
            }
            let c = rem.coefficient(hi);
            let (quot, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let e = hi - dhi;
            let term = Self::monomial(quot, e);
            rem = &rem - &(&term * divisor);
            q = &q + &term;
        }
        Some(q)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

/// Descending powers, e.g. `t^6 - t^5 + t^3 - t + 1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
