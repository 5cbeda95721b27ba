//! Euler characteristics `chi_e(M)` of quiver Grassmannians for the
//! preprojective, preinjective and regular Kronecker modules, and the
//! generating polynomials `P_M` and `X_M`.
//!
//! Three routes produce the same tables: closed-form binomials for
//! `chi(Z_{p,r})`, subset cell counts, and a direct count of coordinate
//! subrepresentations in the distinguished bases.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chebyshev::{binom, enumerate_counts_by_c, enumerate_counts_by_c_minus_eps};
use crate::error::{Error, Result};
use crate::laurent::{DimVector, LaurentPoly};
use crate::quiver::{
    build_m, build_preinjective_explicit, build_preprojective_explicit, build_regular_explicit, BasisTag,
    QuiverRep,
};

/// Largest `d1 + d2` accepted by the coordinate oracle.
pub const MAX_ORACLE_DIM: i64 = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepKind {
    Preprojective,
    Preinjective,
    Regular,
}

impl RepKind {
    pub fn dim(self, n: u32) -> DimVector {
        let n = n as i64;
        match self {
            RepKind::Preprojective => DimVector::new(n, n + 1),
            RepKind::Preinjective => DimVector::new(n + 1, n),
            RepKind::Regular => DimVector::new(n, n),
        }
    }

    /// Explicit tagged model (b = 2).
    pub fn build(self, n: u32) -> Result<QuiverRep> {
        match self {
            RepKind::Preprojective => Ok(build_preprojective_explicit(n)),
            RepKind::Preinjective => Ok(build_preinjective_explicit(n)),
            RepKind::Regular => build_regular_explicit(n),
        }
    }

    fn check(self, n: u32) -> Result<()> {
        if self == RepKind::Regular && n == 0 {
            return Err(Error::InvalidArgument(
                "regular representatives need n >= 1".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Preprojective => "preproj",
            RepKind::Preinjective => "preinj",
            RepKind::Regular => "regular",
        })
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "preproj" | "preprojective" => Ok(RepKind::Preprojective),
            "preinj" | "preinjective" => Ok(RepKind::Preinjective),
            "regular" | "reg" => Ok(RepKind::Regular),
            _ => Err(Error::InvalidArgument(format!(
                "unknown representation kind {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChiRoute {
    Closed,
    Oracle,
    Cells,
}

impl ChiRoute {
    pub const ALL: [ChiRoute; 3] = [ChiRoute::Closed, ChiRoute::Oracle, ChiRoute::Cells];
}

impl fmt::Display for ChiRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiRoute::Closed => "closed",
            ChiRoute::Oracle => "oracle",
            ChiRoute::Cells => "cells",
        })
    }
}

impl FromStr for ChiRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(ChiRoute::Closed),
            "oracle" => Ok(ChiRoute::Oracle),
            "cells" => Ok(ChiRoute::Cells),
            _ => Err(Error::InvalidArgument(format!("unknown route {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDescriptor {
    pub kind: RepKind,
    pub n: u32,
    pub b: u32,
}

/// `chi_e` for every `e` in the box `[0, d1] x [0, d2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiTable {
    pub rep: RepDescriptor,
    pub dim: DimVector,
    pub provenance: ChiRoute,
    entries: BTreeMap<(i64, i64), BigInt>,
}

impl ChiTable {
    fn from_fn(
        rep: RepDescriptor,
        dim: DimVector,
        provenance: ChiRoute,
        mut f: impl FnMut(i64, i64) -> BigInt,
    ) -> Self {
        let mut entries = BTreeMap::new();
        for e1 in 0..=dim.d1 {
            for e2 in 0..=dim.d2 {
                entries.insert((e1, e2), f(e1, e2));
            }
        }
        Self {
            rep,
            dim,
            provenance,
            entries,
        }
    }

    /// Zero outside the box.
    pub fn get(&self, e: DimVector) -> BigInt {
        self.entries.get(&(e.d1, e.d2)).cloned().unwrap_or_default()
    }

    /// Entries in `(e1, e2)` order.
    pub fn entries(&self) -> impl Iterator<Item = (DimVector, &BigInt)> + '_ {
        self.entries.iter().map(|(&(a, b), c)| (DimVector::new(a, b), c))
    }

    /// Same values, ignoring provenance.
    pub fn same_values(&self, other: &ChiTable) -> bool {
        self.dim == other.dim && self.entries == other.entries
    }

    /// `P_M(z1, z2) = sum_e chi_e z1^(d2 - e2) z2^e1`.
    pub fn p_poly(&self) -> LaurentPoly {
        let d2 = self.dim.d2;
        LaurentPoly::from_terms(self.entries().map(|(e, c)| (d2 - e.d2, e.d1, c.clone())))
    }

    /// `X_M = x1^-d1 x2^-d2 P_M(x1^b, x2^b)`.
    pub fn x_poly(&self) -> LaurentPoly {
        x_from_p(&self.p_poly(), self.dim, self.rep.b)
    }
}

fn x_from_p(p: &LaurentPoly, d: DimVector, b: u32) -> LaurentPoly {
    let b = b as i64;
    LaurentPoly::from_terms(
        p.terms()
            .map(|(m, c)| (b * m.e1 - d.d1, b * m.e2 - d.d2, c.clone())),
    )
}

/// `chi(Gr_r(C^d)) = binom(d, r)`.
pub fn chi_grassmannian(d: i64, r: i64) -> BigInt {
    binom(d, r)
}

fn z_kind(kind: RepKind) -> Result<()> {
    if kind == RepKind::Preinjective {
        return Err(Error::InvalidArgument(
            "Z_{p,r} tables are defined for preprojective and regular kinds".into(),
        ));
    }
    Ok(())
}

/// `chi(Z_{p,r})` from the binomial closed forms.
pub fn chi_z_closed(kind: RepKind, n: u32, p: i64, r: i64) -> Result<BigInt> {
    z_kind(kind)?;
    kind.check(n)?;
    let n = n as i64;
    Ok(match kind {
        RepKind::Preprojective if r == 0 => {
            if p == n + 1 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        RepKind::Preprojective => binom(r - 1, n - p - r) * binom(n + 1 - r, p),
        _ => binom(r, n - p - r) * binom(n - r, p),
    })
}

/// Subset counts indexed `[r][t]` for the given kind.
fn cell_table(kind: RepKind, n: u32) -> Result<Vec<Vec<u64>>> {
    match kind {
        RepKind::Preprojective => enumerate_counts_by_c(n),
        _ => enumerate_counts_by_c_minus_eps(n),
    }
}

fn cell_lookup(table: &[Vec<u64>], kind: RepKind, n: u32, p: i64, r: i64) -> BigInt {
    let n = n as i64;
    let t = match kind {
        RepKind::Preprojective => n + 1 - p - r,
        _ => n - p - r,
    };
    if r < 0 || t < 0 {
        return BigInt::zero();
    }
    table
        .get(r as usize)
        .and_then(|row| row.get(t as usize))
        .map_or_else(BigInt::zero, |&c| BigInt::from(c))
}

/// `chi(Z_{p,r})` as the number of `r`-subsets of `[1, n]` with the
/// matching component statistic, by exhaustive enumeration.
pub fn chi_z_cellcount(kind: RepKind, n: u32, p: i64, r: i64) -> Result<BigInt> {
    z_kind(kind)?;
    kind.check(n)?;
    let table = cell_table(kind, n)?;
    Ok(cell_lookup(&table, kind, n, p, r))
}

fn assemble(d: DimVector, e: DimVector, z: impl Fn(i64, i64) -> BigInt) -> BigInt {
    if e.d1 < 0 || e.d2 < 0 || e.d1 > d.d1 || e.d2 > d.d2 {
        return BigInt::zero();
    }
    (0..=d.d2)
        .map(|p| binom(p, e.d2 - d.d2 + p) * z(p, e.d1))
        .fold(BigInt::zero(), |a, x| a + x)
}

/// `e` for `DM` corresponding to `e` for `M` under `P_DM(z1,z2) = P_M(z2,z1)`.
fn dual_e(d_m: DimVector, e_dm: DimVector) -> DimVector {
    DimVector::new(d_m.d1 - e_dm.d2, d_m.d2 - e_dm.d1)
}

/// `chi_e = sum_p binom(p, e2 - d2 + p) chi(Z_{p,e1})` with the closed form
/// for `chi(Z)`. Preinjective values come from the preprojective table
/// through duality.
pub fn chi_e_assembled(kind: RepKind, n: u32, e: DimVector) -> Result<BigInt> {
    kind.check(n)?;
    match kind {
        RepKind::Preinjective => {
            let d = RepKind::Preprojective.dim(n);
            let e = dual_e(d, e);
            chi_e_assembled(RepKind::Preprojective, n, e)
        }
        _ => Ok(assemble(kind.dim(n), e, |p, r| {
            chi_z_closed(kind, n, p, r).expect("kind checked")
        })),
    }
}

/// Coordinate subrepresentations of a tagged representation, tabulated by
/// dimension vector.
pub fn coordinate_oracle_table(m: &QuiverRep) -> Result<BTreeMap<(i64, i64), BigInt>> {
    if m.tag() == BasisTag::None {
        return Err(Error::UnsupportedRep);
    }
    let d = m.dim();
    if d.d1 + d.d2 > MAX_ORACLE_DIM {
        return Err(Error::SizeLimit(format!(
            "coordinate oracle needs d1 + d2 <= {MAX_ORACLE_DIM}, got {}",
            d.d1 + d.d2
        )));
    }
    let (d1, d2) = (d.d1 as usize, d.d2 as usize);
    // support of phi_k(u_i) over all k
    let mut image_mask = vec![0u64; d1];
    for phi in m.maps() {
        for (i, mask) in image_mask.iter_mut().enumerate() {
            for row in 0..d2 {
                if !phi.get(row, i).is_zero() {
                    *mask |= 1 << row;
                }
            }
        }
    }
    let mut counts = BTreeMap::new();
    for s1 in 0u64..(1u64 << d1) {
        let e1 = s1.count_ones() as i64;
        let required = (0..d1)
            .filter(|i| s1 >> i & 1 == 1)
            .fold(0u64, |acc, i| acc | image_mask[i]);
        let w = required.count_ones() as i64;
        for e2 in w..=d.d2 {
            *counts.entry((e1, e2)).or_insert_with(BigInt::zero) += binom(d.d2 - w, e2 - w);
        }
    }
    Ok(counts)
}

/// Number of coordinate subrepresentations of dimension `e`.
pub fn chi_e_coordinate_oracle(m: &QuiverRep, e: DimVector) -> Result<BigInt> {
    Ok(coordinate_oracle_table(m)?
        .get(&(e.d1, e.d2))
        .cloned()
        .unwrap_or_default())
}

fn descriptor(kind: RepKind, n: u32) -> RepDescriptor {
    RepDescriptor { kind, n, b: 2 }
}

/// Full table for one of the three tagged Kronecker families.
pub fn chi_table(kind: RepKind, n: u32, route: ChiRoute) -> Result<ChiTable> {
    kind.check(n)?;
    let d = kind.dim(n);
    let rep = descriptor(kind, n);
    match (route, kind) {
        (ChiRoute::Oracle, _) => {
            let counts = coordinate_oracle_table(&kind.build(n)?)?;
            Ok(ChiTable::from_fn(rep, d, route, |a, b| {
                counts.get(&(a, b)).cloned().unwrap_or_default()
            }))
        }
        (_, RepKind::Preinjective) => {
            let base = chi_table(RepKind::Preprojective, n, route)?;
            let dp = base.dim;
            Ok(ChiTable::from_fn(rep, d, route, |a, b| {
                base.get(dual_e(dp, DimVector::new(a, b)))
            }))
        }
        (ChiRoute::Closed, _) => Ok(ChiTable::from_fn(rep, d, route, |a, b| {
            assemble(d, DimVector::new(a, b), |p, r| {
                chi_z_closed(kind, n, p, r).expect("kind checked")
            })
        })),
        (ChiRoute::Cells, _) => {
            let cells = cell_table(kind, n)?;
            Ok(ChiTable::from_fn(rep, d, route, |a, b| {
                assemble(d, DimVector::new(a, b), |p, r| cell_lookup(&cells, kind, n, p, r))
            }))
        }
    }
}

/// `P_M` for a tagged Kronecker family, from the closed-form table.
pub fn p_poly(kind: RepKind, n: u32) -> Result<LaurentPoly> {
    Ok(chi_table(kind, n, ChiRoute::Closed)?.p_poly())
}

/// `P_M = sum_{p,r} chi(Z_{p,r}) (z1 + 1)^p z2^r`.
pub fn p_poly_shifted(kind: RepKind, n: u32) -> Result<LaurentPoly> {
    z_kind(kind)?;
    kind.check(n)?;
    let d = kind.dim(n);
    let z1p = LaurentPoly::x1() + LaurentPoly::one();
    let mut out = LaurentPoly::zero();
    for p in 0..=d.d2 {
        for r in 0..=d.d1 {
            let c = chi_z_closed(kind, n, p, r)?;
            if !c.is_zero() {
                out = out + z1p.pow(p as u32).scale(&c).shift(0, r);
            }
        }
    }
    Ok(out)
}

/// `chi_e` for representations with `d1 <= 1` or `d2 <= 1`, where every
/// quiver Grassmannian is an ordinary Grassmannian.
pub fn chi_table_small(m: &QuiverRep, rep: RepDescriptor) -> Result<ChiTable> {
    let d = m.dim();
    if d.d1 > 1 && d.d2 > 1 {
        return Err(Error::UnsupportedRep);
    }
    let span = m.phi_r().rank() as i64;
    let kernel = d.d1 - m.phi_c().rank() as i64;
    Ok(ChiTable::from_fn(rep, d, ChiRoute::Closed, |e1, e2| {
        if d.d1 <= 1 {
            // N1 is 0 or M1; N2 must contain phi(N1)
            let w = if e1 == 0 { 0 } else { span };
            binom(d.d2 - w, e2 - w)
        } else if e2 == d.d2 {
            binom(d.d1, e1)
        } else {
            // e2 = 0 with d2 = 1: N1 inside the common kernel
            binom(kernel, e1)
        }
    }))
}

/// `X_M` for `M(-n)`, `M(n+3)` or the regular `M_reg(n)`.
///
/// For `b = 2` this uses the closed-form tables. For `b > 2` only the
/// representations with a dimension at most one are supported.
pub fn x_poly(kind: RepKind, n: u32, b: u32) -> Result<LaurentPoly> {
    if b < 2 {
        return Err(Error::UnsupportedB(b));
    }
    if b == 2 {
        return Ok(chi_table(kind, n, ChiRoute::Closed)?.x_poly());
    }
    let m = match kind {
        RepKind::Preprojective => -(n as i64),
        RepKind::Preinjective => n as i64 + 3,
        RepKind::Regular => return Err(Error::UnsupportedB(b)),
    };
    let rep = build_m(b, m)?;
    Ok(chi_table_small(&rep, RepDescriptor { kind, n, b })?.x_poly())
}

/// Right-hand side of the `T+` transform:
/// `(z1 + 1)^-d1 z2^d2 P((z1 + 1)^b / z2, z1)`.
pub fn tplus_transform(p: &LaurentPoly, d: DimVector, b: u32) -> Result<LaurentPoly> {
    let a = LaurentPoly::x1() + LaurentPoly::one();
    let ab = a.pow(b);
    let mut acc = LaurentPoly::zero();
    for (m, c) in p.terms() {
        if m.e1 < 0 {
            return Err(Error::InvalidArgument("P_M must be a polynomial".into()));
        }
        acc = acc + (ab.pow(m.e1 as u32) * LaurentPoly::monomial(c.clone(), m.e2, d.d2 - m.e1));
    }
    acc.div_exact(&a.pow(d.d1 as u32))
}

/// Checks `P_{T+ M} = (z1 + 1)^-d1 z2^d2 P_M((z1 + 1)^b / z2, z1)` for a
/// pair of polynomials.
pub fn tplus_identity_holds(p_m: &LaurentPoly, d_m: DimVector, p_tm: &LaurentPoly, b: u32) -> bool {
    tplus_transform(p_m, d_m, b).is_ok_and(|rhs| &rhs == p_tm)
}

/// The `T+` identity for `M = M(-n)`, `T+ M = M(-n-1)` (b = 2).
pub fn verify_tplus_identity(n: u32) -> Result<bool> {
    let p_m = p_poly(RepKind::Preprojective, n)?;
    let p_tm = p_poly(RepKind::Preprojective, n + 1)?;
    Ok(tplus_identity_holds(
        &p_m,
        RepKind::Preprojective.dim(n),
        &p_tm,
        2,
    ))
}
