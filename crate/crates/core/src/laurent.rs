//! Sparse Laurent polynomials in two variables `x1`, `x2` with
//! arbitrary-precision integer coefficients.
//!
//! Values are kept in canonical form at all times: no zero coefficient is
//! stored and each exponent pair appears once, so structural equality is
//! mathematical equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent pair `x1^e1 * x2^e2`.
///
/// Ordered graded-lexicographically: total degree first, then `e1`, then `e2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub e1: i64,
    pub e2: i64,
}

impl Monomial {
    pub const fn new(e1: i64, e2: i64) -> Self {
        Self { e1, e2 }
    }

    fn shifted(self, d1: i64, d2: i64) -> Self {
        Self::new(self.e1 + d1, self.e2 + d2)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.e1 + self.e2, self.e1, self.e2).cmp(&(other.e1 + other.e2, other.e1, other.e2))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A pair of integers in the rank-2 root lattice.
///
/// Used as a dimension vector `(dim M1, dim M2)` (both components
/// nonnegative) and, inside reflection arithmetic and denominator vectors of
/// arbitrary Laurent polynomials, as a signed lattice vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector {
    pub d1: i64,
    pub d2: i64,
}

impl DimVector {
    pub const fn new(d1: i64, d2: i64) -> Self {
        Self { d1, d2 }
    }

    /// True when both components are nonnegative.
    pub fn is_dimension(&self) -> bool {
        self.d1 >= 0 && self.d2 >= 0
    }

    pub fn swapped(self) -> Self {
        Self::new(self.d2, self.d1)
    }
}

impl Add for DimVector {
    type Output = DimVector;
    fn add(self, rhs: DimVector) -> DimVector {
        DimVector::new(self.d1 + rhs.d1, self.d2 + rhs.d2)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d1, self.d2)
    }
}

impl Serialize for DimVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.d1, self.d2].serialize(s)
    }
}

impl<'de> Deserialize<'de> for DimVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [d1, d2] = <[i64; 2]>::deserialize(d)?;
        Ok(DimVector::new(d1, d2))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "LaurentJson", try_from = "LaurentJson")]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x1^e1 * x2^e2`
    pub fn monomial(c: impl Into<BigInt>, e1: i64, e2: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(e1, e2), c);
        }
        Self { terms }
    }

    pub fn x1() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn x2() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Collects `(e1, e2, c)` triples, summing repeated exponents and
    /// dropping zeros.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, C)>,
        C: Into<BigInt>,
    {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (e1, e2, c) in iter {
            *acc.entry(Monomial::new(e1, e2)).or_default() += c.into();
        }
        Self::from_accumulator(acc)
    }

    fn from_accumulator(acc: HashMap<Monomial, BigInt>) -> Self {
        Self {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Terms in canonical (graded-lexicographic, ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> BigInt {
        self.terms
            .get(&Monomial::new(e1, e2))
            .cloned()
            .unwrap_or_default()
    }

    /// Single-term polynomial?
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Componentwise minimum exponents over the support.
    pub fn min_exponents(&self) -> Result<(i64, i64)> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        Ok(it.fold((first.e1, first.e2), |(a, b), m| (a.min(m.e1), b.min(m.e2))))
    }

    /// Componentwise maximum exponents over the support.
    pub fn max_exponents(&self) -> Result<(i64, i64)> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        Ok(it.fold((first.e1, first.e2), |(a, b), m| (a.max(m.e1), b.max(m.e2))))
    }

    pub fn min_coeff(&self) -> Option<&BigInt> {
        self.terms.values().min()
    }

    pub fn max_coeff(&self) -> Option<&BigInt> {
        self.terms.values().max()
    }

    /// Multiplies by the monomial `x1^d1 * x2^d2`.
    pub fn shift(&self, d1: i64, d2: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.shifted(d1, d2), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Interchanges `x1` and `x2`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.e2, m.e1), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Returns `r` with `q * r == self` exactly.
    ///
    /// Both operands are first cleared of their monomial factors; the
    /// remaining polynomial division then runs in graded-lex order over
    /// the integers, which succeeds iff a Laurent quotient with integer
    /// coefficients exists.
    pub fn div_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a1, a2) = self.min_exponents()?;
        let (c1, c2) = q.min_exponents()?;
        if q.is_monomial() {
            let (m, c) = q.terms.iter().next().expect("nonzero");
            let mut terms = BTreeMap::new();
            for (pm, pc) in &self.terms {
                let (quo, rem) = pc.div_rem(c);
                if !rem.is_zero() {
                    return Err(Error::NotDivisible);
                }
                terms.insert(pm.shifted(-m.e1, -m.e2), quo);
            }
            return Ok(Self { terms });
        }

        let divisor: Vec<(Monomial, BigInt)> = q
            .terms
            .iter()
            .map(|(m, c)| (m.shifted(-c1, -c2), c.clone()))
            .collect();
        let (lead, lead_c) = divisor.last().cloned().expect("nonzero");

        let mut rem: BTreeMap<Monomial, BigInt> = self
            .terms
            .iter()
            .map(|(m, c)| (m.shifted(-a1, -a2), c.clone()))
            .collect();
        let mut quotient = BTreeMap::new();
        while let Some((&m, c)) = rem.last_key_value() {
            if m.e1 < lead.e1 || m.e2 < lead.e2 {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let s = Monomial::new(m.e1 - lead.e1, m.e2 - lead.e2);
            for (dm, dc) in &divisor {
                let key = dm.shifted(s.e1, s.e2);
                let delta = &qc * dc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quotient.insert(s, qc);
        }
        Ok(Self { terms: quotient }.shift(a1 - c1, a2 - c2))
    }

    /// Evaluates `self(a, b)`.
    ///
    /// Negative powers of a variable are realised by one exact division by
    /// the corresponding power of the substituted value, so the call fails
    /// with [`Error::NotDivisible`] when the result is not a Laurent
    /// polynomial.
    pub fn substitute(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (min1, min2) = self.min_exponents()?;
        let (max1, max2) = self.max_exponents()?;
        let neg1 = (-min1).max(0);
        let neg2 = (-min2).max(0);
        let top1 = (max1 + neg1).max(neg1) as usize;
        let top2 = (max2 + neg2).max(neg2) as usize;
        let a_pows = powers(a, top1);
        let b_pows = powers(b, top2);

        // Group by the exponent of the first variable so that each power of
        // `a` is multiplied once.
        let mut by_e1: BTreeMap<i64, Vec<(i64, &BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_e1.entry(m.e1 + neg1).or_default().push((m.e2 + neg2, c));
        }
        let mut acc = Self::zero();
        for (i, row) in by_e1 {
            let mut inner = Self::zero();
            for (j, c) in row {
                inner = &inner + &b_pows[j as usize].scale(c);
            }
            acc = &acc + &(&a_pows[i as usize] * &inner);
        }
        if neg1 == 0 && neg2 == 0 {
            return Ok(acc);
        }
        let den = &a_pows[neg1 as usize] * &b_pows[neg2 as usize];
        acc.div_exact(&den)
    }

    /// Evaluates the one-variable integer polynomial with the given
    /// coefficients (constant term first) at `self`.
    pub fn eval_univariate(&self, coeffs: &[BigInt]) -> LaurentPoly {
        let as_poly = LaurentPoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64, 0i64, c.clone())),
        );
        as_poly
            .substitute(self, &LaurentPoly::one())
            .expect("polynomial substitution has no denominators")
    }

    /// `(-min e1, -min e2)` over the support.
    pub fn denominator_vector(&self) -> Result<DimVector> {
        let (m1, m2) = self.min_exponents()?;
        Ok(DimVector::new(-m1, -m2))
    }

    /// True iff the polynomial is nonzero and every coefficient is positive.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.terms.values().all(|c| c.is_positive())
    }

    /// Vertices of the convex hull of the support, counterclockwise,
    /// starting from the lexicographically smallest exponent pair.
    /// Collinear boundary points are not reported as vertices.
    pub fn newton_support(&self) -> Result<Vec<(i64, i64)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut pts: Vec<(i64, i64)> = self.terms.keys().map(|m| (m.e1, m.e2)).collect();
        pts.sort_unstable();
        pts.dedup();
        Ok(convex_hull(&pts))
    }
}

fn powers(base: &LaurentPoly, top: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::with_capacity(top + 1);
    out.push(LaurentPoly::one());
    for k in 1..=top {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

// Andrew's monotone chain over lexicographically sorted, deduplicated points.
fn convex_hull(pts: &[(i64, i64)]) -> Vec<(i64, i64)> {
    if pts.len() <= 2 {
        return pts.to_vec();
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(*m, c.clone());
                }
            }
        }
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len().saturating_mul(rhs.len()).min(1 << 20));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let key = m1.shifted(m2.e1, m2.e2);
                let prod = c1 * c2;
                match acc.get_mut(&key) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        LaurentPoly::from_accumulator(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (m.e1 == 0 && m.e2 == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("x1", m.e1), ("x2", m.e2)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Wire form: `{"terms":[{"e1":int,"e2":int,"c":"decimal"}]}` in canonical
/// term order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LaurentJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub e1: i64,
    pub e2: i64,
    pub c: String,
}

impl From<LaurentPoly> for LaurentJson {
    fn from(p: LaurentPoly) -> Self {
        LaurentJson {
            terms: p
                .terms
                .into_iter()
                .map(|(m, c)| TermJson {
                    e1: m.e1,
                    e2: m.e2,
                    c: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<LaurentJson> for LaurentPoly {
    type Error = String;

    fn try_from(j: LaurentJson) -> std::result::Result<Self, String> {
        let mut terms = BTreeMap::new();
        for t in j.terms {
            let c: BigInt = t.c.parse().map_err(|_| format!("bad coefficient {:?}", t.c))?;
            if c.is_zero() {
                return Err(format!("zero coefficient at ({}, {})", t.e1, t.e2));
            }
            if terms.insert(Monomial::new(t.e1, t.e2), c).is_some() {
                return Err(format!("duplicate exponent ({}, {})", t.e1, t.e2));
            }
        }
        Ok(LaurentPoly { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1() -> LaurentPoly {
        LaurentPoly::x1()
    }
    fn x2() -> LaurentPoly {
        LaurentPoly::x2()
    }
    fn c(k: i64) -> LaurentPoly {
        LaurentPoly::constant(k)
    }

    fn z1() -> LaurentPoly {
        LaurentPoly::from_terms([(1, -1, 1), (-1, 1, 1), (-1, -1, 1)])
    }

    #[test]
    fn add_cancels_and_has_identity() {
        assert_eq!(&(&x1() + &c(1)) + &c(-1), x1());
        let p = LaurentPoly::from_terms([(3, -2, 5), (0, 0, -1)]);
        assert_eq!(&LaurentPoly::zero() + &p, p);
        let num = &(&x1().pow(2) + &c(1)) + &x2().pow(2);
        assert_eq!(num, LaurentPoly::from_terms([(2, 0, 1), (0, 2, 1), (0, 0, 1)]));
    }

    #[test]
    fn mul_units_and_x3() {
        let p = LaurentPoly::from_terms([(1, 2, 3), (-4, 0, 7)]);
        assert_eq!(&p * &LaurentPoly::one(), p);
        assert_eq!(&LaurentPoly::monomial(1, -1, 0) * &x1(), LaurentPoly::one());
        let x3 = &(&x2().pow(2) + &c(1)) * &LaurentPoly::monomial(1, -1, 0);
        assert_eq!(x3, LaurentPoly::from_terms([(-1, 2, 1), (-1, 0, 1)]));
    }

    #[test]
    fn div_exact_examples() {
        let p = &x2().pow(2) + &c(1);
        let unit = &LaurentPoly::monomial(1, -1, 0) * &x1();
        assert_eq!(p.div_exact(&unit).unwrap(), p);
        let q = LaurentPoly::from_terms([(2, 1, 1), (0, 1, 1)]);
        assert_eq!(q.div_exact(&x2()).unwrap(), &x1().pow(2) + &c(1));
        // x2 is a unit of the Laurent ring
        let r = p.div_exact(&x2()).unwrap();
        assert_eq!(r, LaurentPoly::from_terms([(0, 1, 1), (0, -1, 1)]));
        assert_eq!(&r * &x2(), p);
        assert_eq!(p.div_exact(&(&x2() + &c(1))), Err(Error::NotDivisible));
        assert_eq!(p.div_exact(&c(2)), Err(Error::NotDivisible));
        assert_eq!(p.div_exact(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn div_exact_by_non_monomial() {
        let a = &(&x1() + &x2()) + &c(1);
        let b = &(&x1().pow(3) - &x2()) + &LaurentPoly::monomial(2, -2, 1);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let off = &prod + &c(1);
        assert_eq!(off.div_exact(&a), Err(Error::NotDivisible));
    }

    #[test]
    fn substitute_identity_and_chebyshev() {
        let p = LaurentPoly::from_terms([(3, -2, 5), (0, 0, -1), (-1, 4, 2)]);
        assert_eq!(p.substitute(&x1(), &x2()).unwrap(), p);
        // x^2 - 2 evaluated at z1
        let z2 = z1().eval_univariate(&[BigInt::from(-2), BigInt::zero(), BigInt::one()]);
        let expected =
            LaurentPoly::from_terms([(4, 0, 1), (0, 4, 1), (2, 0, 2), (0, 2, 2), (0, 0, 1)]).shift(-2, -2);
        assert_eq!(z2, expected);
    }

    #[test]
    fn substitute_with_negative_powers() {
        // x1^-1 (x2^2 + 1) at (a, b) = (x2 + 1, x1): (x1^2 + 1) / (x2 + 1) is not Laurent.
        let x3 = LaurentPoly::from_terms([(-1, 2, 1), (-1, 0, 1)]);
        let r = x3.substitute(&(&x2() + &c(1)), &x1());
        assert_eq!(r, Err(Error::NotDivisible));
        // substituting x1 -> x1^2 keeps it Laurent
        let r = x3.substitute(&x1().pow(2), &x2()).unwrap();
        assert_eq!(r, LaurentPoly::from_terms([(-2, 2, 1), (-2, 0, 1)]));
    }

    #[test]
    fn denominator_vector_examples() {
        let x3 = LaurentPoly::from_terms([(-1, 2, 1), (-1, 0, 1)]);
        assert_eq!(x3.denominator_vector().unwrap(), DimVector::new(1, 0));
        assert_eq!(
            LaurentPoly::one().denominator_vector().unwrap(),
            DimVector::new(0, 0)
        );
        let xm1 = LaurentPoly::from_terms([(4, 0, 1), (2, 0, 2), (0, 2, 1), (0, 0, 1)]).shift(-1, -2);
        assert_eq!(xm1.denominator_vector().unwrap(), DimVector::new(1, 2));
        assert_eq!(
            LaurentPoly::zero().denominator_vector(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn positivity() {
        let xm1 = LaurentPoly::from_terms([(4, 0, 1), (2, 0, 2), (0, 2, 1), (0, 0, 1)]).shift(-1, -2);
        assert!(xm1.is_positive());
        assert!(!(&x1() - &x2()).is_positive());
        assert!(!LaurentPoly::zero().is_positive());
    }

    #[test]
    fn newton_support_examples() {
        assert_eq!(z1().newton_support().unwrap(), vec![(-1, -1), (1, -1), (-1, 1)]);
        assert_eq!(
            LaurentPoly::monomial(7, 2, -3).newton_support().unwrap(),
            vec![(2, -3)]
        );
        // s2 support: (q, r) with q + r <= 2 at (2q - 2, 2r - 2)
        let s2 = LaurentPoly::from_terms([(0, 0, 1), (2, 0, 2), (0, 2, 2), (4, 0, 1), (0, 4, 1), (2, 2, 1)])
            .shift(-2, -2);
        assert_eq!(s2.newton_support().unwrap(), vec![(-2, -2), (2, -2), (-2, 2)]);
        assert_eq!(LaurentPoly::zero().newton_support(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_is_readable() {
        let p = LaurentPoly::from_terms([(-1, 2, 1), (-1, 0, -3), (0, 0, 1)]);
        assert_eq!(p.to_string(), "-3*x1^-1 + 1 + x1^-1*x2^2");
    }
}
