//! Exact sparse polynomial arithmetic in one variable q, with integer (possibly
//! negative) exponents.
//!
//! The coefficient type is generic over any signed exact integer scalar via
//! `num-traits`; the crate root fixes [`crate::Poly`] (arbitrary-precision
//! coefficients) as the canonical instantiation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Scalar bound for polynomial coefficients: an exact signed integer type.
pub trait Coeff:
    Num + Signed + FromPrimitive + Clone + Ord + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_decimal(s: &str) -> Option<Self>;
}

impl<T> Coeff for T
where
    T: Num
        + Signed
        + FromPrimitive
        + Clone
        + Ord
        + fmt::Debug
        + fmt::Display
        + FromStr
        + Send
        + Sync
        + 'static,
{
    fn from_decimal(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

/// A sparse Laurent polynomial in q over the coefficient ring `C`.
///
/// Invariant: no stored coefficient is zero; the zero polynomial is the empty
/// map. Degree and minimal exponent are always derived from the map.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<C: Coeff> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// c·q^k.
    pub fn monomial(k: i64, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// q^k.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(k, C::one())
    }

    /// q − 1.
    pub fn q_minus_one() -> Self {
        Self::q_pow(1) - Self::one()
    }

    /// Builds Σ coeffs[i]·q^(offset+i) from small integers; test convenience.
    pub fn from_coeffs(offset: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.add_term(offset + i as i64, C::from_i64(c).expect("small integer"));
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Largest exponent, if nonzero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent, if nonzero.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// True when no exponent is negative (a plain polynomial in q).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |m| m >= 0)
    }

    pub fn coeff(&self, k: i64) -> C {
        self.terms.get(&k).cloned().unwrap_or_else(C::zero)
    }

    /// Ascending (exponent, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn add_term(&mut self, k: i64, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, a)| (k, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplication by q^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// q ↦ −q: the coefficient of q^k picks up (−1)^k.
    pub fn substitute_neg_q(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k, if k.rem_euclid(2) == 1 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    /// q^d · p(1/q). For d ≥ degree this is the usual coefficient reversal;
    /// smaller d produces negative exponents, which `is_polynomial` flags.
    pub fn reversed(&self, d: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (d - k, c.clone())).collect(),
        }
    }

    /// p(1/q).
    pub fn inverted(&self) -> Self {
        self.reversed(0)
    }

    /// Truncation to the terms with exponent strictly below `bound`.
    pub fn truncate_below(&self, bound: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .take_while(|&(&k, _)| k < bound)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Converts a coefficient type, e.g. `LaurentPoly<i64>` → `Poly`.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, f(c))).collect(),
        }
    }
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in rhs.terms() {
                out.add_term(k1 + k2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl<C: Coeff> $trait for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $trait<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

/// Pascal-triangle row of binomials C(k, 0..=k) in the coefficient ring.
fn binomial_row<C: Coeff>(k: usize) -> Vec<C> {
    let mut row = vec![C::one()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(C::one());
        for w in row.windows(2) {
            next.push(w[0].clone() + w[1].clone());
        }
        next.push(C::one());
        row = next;
    }
    row
}

/// The change of variable from an R̃-polynomial back to the R-polynomial:
/// R(q) = q^{len/2} · rt(q^{1/2} − q^{−1/2}), expanded exactly over the
/// integers. Requires every exponent of `rt` to be nonnegative and of the
/// same parity as `len`, which holds for genuine R̃-polynomials.
pub fn rtilde_to_r<C: Coeff>(rt: &LaurentPoly<C>, len: usize) -> Result<LaurentPoly<C>> {
    let mut out = LaurentPoly::zero();
    for (k, c) in rt.terms() {
        if k < 0 {
            return Err(Error::NegativeExponent(k));
        }
        if (k - len as i64).rem_euclid(2) != 0 {
            return Err(Error::ParityViolation { exp: k, len });
        }
        // c·(s − s⁻¹)^k · s^len in s = q^{1/2}; all s-exponents are even.
        let binom = binomial_row::<C>(k as usize);
        for (j, b) in binom.iter().enumerate() {
            let s_exp = len as i64 + k - 2 * j as i64;
            debug_assert_eq!(s_exp.rem_euclid(2), 0);
            let coeff = if j % 2 == 1 { -(c.clone() * b.clone()) } else { c.clone() * b.clone() };
            out.add_term(s_exp / 2, coeff);
        }
    }
    Ok(out)
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    /// Human-readable ascending form, e.g. `-1 + 2q - 2q^2 + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    offset: i64,
    coeffs: Vec<serde_json::Number>,
}

impl<C: Coeff> Serialize for LaurentPoly<C> {
    /// `{"offset": minExponent, "coeffs": [ascending integer coefficients]}`,
    /// dense from the minimal exponent through the degree.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = match (self.min_exp(), self.degree()) {
            (Some(lo), Some(hi)) => PolyJson {
                offset: lo,
                coeffs: (lo..=hi)
                    .map(|k| {
                        self.coeff(k)
                            .to_string()
                            .parse::<serde_json::Number>()
                            .expect("integer literal")
                    })
                    .collect(),
            },
            _ => PolyJson { offset: 0, coeffs: vec![] },
        };
        json.serialize(serializer)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = PolyJson::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (i, num) in json.coeffs.iter().enumerate() {
            let c = C::from_decimal(&num.to_string())
                .ok_or_else(|| D::Error::custom(format!("bad integer coefficient {num}")))?;
            p.add_term(json.offset + i as i64, c);
        }
        Ok(p)
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::PolyJson(e.to_string()))
    }
}
