//! Subrepresentation counts over the small fields `F_2`, `F_3`, `F_4`.
//!
//! Experimental output for representations where no Euler-characteristic
//! algorithm is available. The counts are not claimed to relate to `chi`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::DimVector;
use crate::matrix::Rational;
use crate::quiver::QuiverRep;

/// Upper bound on the number of candidate `N1` subspaces visited.
pub const MAX_SUBSPACES: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf {
    q: u8,
    p: u8,
}

impl Gf {
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2 | 3 => Ok(Self {
                q: q as u8,
                p: q as u8,
            }),
            4 => Ok(Self { q: 4, p: 2 }),
            _ => Err(Error::InvalidArgument(format!(
                "field size must be 2, 3 or 4, got {q}"
            ))),
        }
    }

    pub fn order(self) -> u32 {
        self.q as u32
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        if self.q == 4 {
            a ^ b
        } else {
            (a + b) % self.p
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        if self.p == 2 {
            a
        } else {
            (self.p - a) % self.p
        }
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        if self.q == 4 {
            // F_4 = F_2[t]/(t^2 + t + 1)
            let mut r = 0;
            for i in 0..2 {
                if (b >> i) & 1 == 1 {
                    r ^= a << i;
                }
            }
            if r & 4 != 0 {
                r ^= 0b111;
            }
            r
        } else {
            (a * b) % self.p
        }
    }

    pub fn inv(self, a: u8) -> Option<u8> {
        (1..self.q).find(|&x| self.mul(a, x) == 1)
    }

    /// Image of a rational number under `Z_(p) -> F_p -> F_q`.
    pub fn reduce(self, r: &Rational) -> Result<u8> {
        let p = BigInt::from(self.p);
        let num = r.numer().mod_floor(&p).to_u8().unwrap_or(0);
        let den = r.denom().mod_floor(&p).to_u8().unwrap_or(0);
        let inv = self
            .inv(den)
            .ok_or_else(|| Error::InvalidArgument(format!("{r} has no image in F_{}", self.p)))?;
        Ok(self.mul(num, inv))
    }

    /// Rank of a list of row vectors.
    pub fn rank(self, rows: &[Vec<u8>]) -> usize {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let inv = self.inv(m[rank][c]).expect("nonzero");
            for j in 0..cols {
                m[rank][j] = self.mul(m[rank][j], inv);
            }
            for i in 0..m.len() {
                if i != rank && m[i][c] != 0 {
                    let f = self.neg(m[i][c]);
                    for j in 0..cols {
                        let v = self.mul(f, m[rank][j]);
                        m[i][j] = self.add(m[i][j], v);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: i64, k: i64, q: u32) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= num_traits::pow(q.clone(), (n - i) as usize) - 1;
        den *= num_traits::pow(q.clone(), (i + 1) as usize) - 1;
    }
    num / den
}

/// Calls `f` with a basis (in reduced echelon form) of every `k`-dimensional
/// subspace of `F_q^n`.
pub fn for_each_subspace(field: Gf, n: usize, k: usize, mut f: impl FnMut(&[Vec<u8>])) {
    if k > n {
        return;
    }
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free slots: (row, col) with col > pivot[row] and col not a pivot
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let piv = &pivots;
                ((piv[i] + 1)..n)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut digits = vec![0u8; slots.len()];
        loop {
            let mut basis = vec![vec![0u8; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                basis[i][p] = 1;
            }
            for (&(i, c), &d) in slots.iter().zip(&digits) {
                basis[i][c] = d;
            }
            f(&basis);
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    break;
                }
                digits[pos] += 1;
                if digits[pos] < field.q {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        // next pivot combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Number of subrepresentations `(N1, N2)` of dimension `e` of `M`
/// reduced to `F_q`, by enumerating `N1` and counting the `N2` that contain
/// the span of its images.
pub fn subrep_count_fq(m: &QuiverRep, e: DimVector, q: u32) -> Result<BigInt> {
    let field = Gf::new(q)?;
    let d = m.dim();
    if e.d1 < 0 || e.d2 < 0 || e.d1 > d.d1 || e.d2 > d.d2 {
        return Ok(BigInt::zero());
    }
    let work = gaussian_binomial(d.d1, e.d1, q);
    if work > BigInt::from(MAX_SUBSPACES) || work.is_negative() {
        return Err(Error::SizeLimit(format!(
            "{work} subspaces of F_{q}^{} exceed the limit {MAX_SUBSPACES}",
            d.d1
        )));
    }
    let maps: Vec<Vec<Vec<u8>>> = m
        .maps()
        .iter()
        .map(|phi| {
            (0..phi.rows())
                .map(|i| (0..phi.cols()).map(|j| field.reduce(phi.get(i, j))).collect())
                .collect::<Result<Vec<Vec<u8>>>>()
        })
        .collect::<Result<_>>()?;
    let (d1, d2) = (d.d1 as usize, d.d2 as usize);
    let mut total = BigInt::zero();
    for_each_subspace(field, d1, e.d1 as usize, |basis| {
        let mut images = Vec::with_capacity(basis.len() * maps.len());
        for phi in &maps {
            for u in basis {
                let img: Vec<u8> = (0..d2)
                    .map(|i| (0..d1).fold(0u8, |acc, j| field.add(acc, field.mul(phi[i][j], u[j]))))
                    .collect();
                images.push(img);
            }
        }
        let w = field.rank(&images) as i64;
        total += gaussian_binomial(d.d2 - w, e.d2 - w, q);
    });
    Ok(total)
}
