//! Closed forms for the Kronecker cluster algebra (b = 2) and its canonical
//! basis: cluster monomials `x_m^p x_{m+1}^q` together with the `z_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chebyshev::binom;
use crate::cluster::{alpha, ClusterContext};
use crate::error::{Error, Result};
use crate::laurent::{DimVector, LaurentPoly};

/// `x_m` for `b = 2` from the binomial closed forms.
pub fn x_closed_form(m: i64) -> Result<LaurentPoly> {
    match m {
        1 | 2 => Err(Error::InitialClusterIndex(m)),
        m if m <= 0 => {
            let n = -m;
            let mut terms = vec![(2 * (n + 1), 0, BigInt::from(1))];
            for q in 0..=n {
                for r in 0..=n - q {
                    terms.push((2 * q, 2 * r, binom(n + 1 - r, q) * binom(n - q, r)));
                }
            }
            Ok(LaurentPoly::from_terms(terms).shift(-n, -n - 1))
        }
        m => {
            let n = m - 3;
            let mut terms = vec![(0, 2 * (n + 1), BigInt::from(1))];
            for q in 0..=n {
                for r in 0..=n - q {
                    terms.push((2 * q, 2 * r, binom(n - r, q) * binom(n + 1 - q, r)));
                }
            }
            Ok(LaurentPoly::from_terms(terms).shift(-n - 1, -n))
        }
    }
}

/// `s_n = S_n(z_1)` in closed form; `s_0 = 1`.
pub fn s_elem(n: i64) -> Result<LaurentPoly> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "s_n is defined for n >= 0, got {n}"
        )));
    }
    let mut terms = Vec::new();
    for q in 0..=n {
        for r in 0..=n - q {
            terms.push((2 * q, 2 * r, binom(n - r, q) * binom(n - q, r)));
        }
    }
    Ok(LaurentPoly::from_terms(terms).shift(-n, -n))
}

/// `z_1 = (x1^2 + x2^2 + 1) / (x1 x2)`.
pub fn z1() -> LaurentPoly {
    LaurentPoly::from_terms([(1, -1, 1), (-1, 1, 1), (-1, -1, 1)])
}

/// `z_n = P_n(z_1)` in closed form. The fractional weights are accumulated
/// exactly and every coefficient is checked to be an integer.
pub fn z_elem(n: i64) -> Result<LaurentPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "z_n is defined for n >= 1, got {n}"
        )));
    }
    let mut acc: BTreeMap<(i64, i64), BigRational> = BTreeMap::new();
    let one = BigRational::from_integer(BigInt::from(1));
    *acc.entry((2 * n, 0)).or_insert_with(BigRational::zero) += &one;
    *acc.entry((0, 2 * n)).or_insert_with(BigRational::zero) += &one;
    for q in 0..n {
        for r in 0..n - q {
            let weight = BigRational::new(BigInt::from(n), BigInt::from(n - q - r));
            let c = weight * BigRational::from_integer(binom(n - 1 - r, q) * binom(n - 1 - q, r));
            *acc.entry((2 * q, 2 * r)).or_insert_with(BigRational::zero) += c;
        }
    }
    let mut terms = Vec::with_capacity(acc.len());
    for ((e1, e2), c) in acc {
        if !c.is_integer() {
            return Err(Error::NotIntegral(format!(
                "coefficient {c} of x1^{e1} x2^{e2} in z_{n}"
            )));
        }
        terms.push((e1, e2, c.to_integer()));
    }
    Ok(LaurentPoly::from_terms(terms).shift(-n, -n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisElement {
    /// `x_m^p x_{m+1}^q`.
    ClusterMonomial {
        m: i64,
        p: u32,
        q: u32,
    },
    Z {
        n: u32,
    },
}

/// Denominator vector of `x_m`, including the initial variables.
fn x_denominator(m: i64) -> Result<DimVector> {
    match m {
        1 => Ok(DimVector::new(-1, 0)),
        2 => Ok(DimVector::new(0, -1)),
        m => alpha(2, m),
    }
}

fn scaled(v: DimVector, k: u32) -> DimVector {
    DimVector::new(v.d1 * k as i64, v.d2 * k as i64)
}

impl BasisElement {
    pub fn denominator(&self) -> Result<DimVector> {
        match *self {
            BasisElement::ClusterMonomial { m, p, q } => {
                Ok(scaled(x_denominator(m)?, p) + scaled(x_denominator(m + 1)?, q))
            }
            BasisElement::Z { n } => Ok(DimVector::new(n as i64, n as i64)),
        }
    }

    pub fn value_with(&self, ctx: &ClusterContext) -> Result<LaurentPoly> {
        if ctx.b() != 2 {
            return Err(Error::UnsupportedB(ctx.b()));
        }
        match *self {
            BasisElement::ClusterMonomial { m, p, q } => {
                let a = ctx.cluster_var(m)?.pow(p);
                let b = ctx.cluster_var(m + 1)?.pow(q);
                Ok(&a * &b)
            }
            BasisElement::Z { n } => z_elem(n as i64),
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::ClusterMonomial { m, p, q } => {
                let factor = |i: i64, k: u32| match k {
                    0 => None,
                    1 => Some(format!("x_{i}")),
                    k => Some(format!("x_{i}^{k}")),
                };
                let parts: Vec<String> = [factor(*m, *p), factor(m + 1, *q)]
                    .into_iter()
                    .flatten()
                    .collect();
                if parts.is_empty() {
                    f.write_str("1")
                } else {
                    f.write_str(&parts.join(" "))
                }
            }
            BasisElement::Z { n } => write!(f, "z_{n}"),
        }
    }
}

pub fn basis_element(el: BasisElement) -> Result<LaurentPoly> {
    el.value_with(&ClusterContext::new(2)?)
}

/// Canonical basis elements whose denominator vector lies in the box
/// `max(|d1|, |d2|) <= max_degree`, each listed once: cluster monomials by
/// `(m, p, q)`, then `z_n` by `n`.
///
/// A cluster monomial is listed under `(m, p, q)` with `p > 0`; the unit is
/// listed as `(1, 0, 0)`.
pub fn list_basis(max_degree: u32) -> Result<Vec<BasisElement>> {
    let d = max_degree as i64;
    let in_box = |v: DimVector| v.d1.abs() <= d && v.d2.abs() <= d;
    let mut out = Vec::new();
    for m in (-d - 2)..=(d + 3) {
        for p in 0..=max_degree {
            for q in 0..=max_degree {
                let canonical = p > 0 || (q == 0 && m == 1);
                if !canonical {
                    continue;
                }
                let el = BasisElement::ClusterMonomial { m, p, q };
                if in_box(el.denominator()?) {
                    out.push(el);
                }
            }
        }
    }
    out.extend((1..=max_degree).map(|n| BasisElement::Z { n }));
    Ok(out)
}
