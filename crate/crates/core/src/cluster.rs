//! Seed mutation and the rank-2 exchange recursion.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_traits::ToPrimitive;

use crate::chebyshev::cheb_s_value;
use crate::error::{Error, Result};
use crate::laurent::{DimVector, LaurentPoly};

/// Skew-symmetric integer exchange matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch(
                "exchange matrix must be square and nonempty".into(),
            ));
        }
        for i in 0..n {
            for j in 0..n {
                if entries[i][j] != -entries[j][i] {
                    return Err(Error::NotSkewSymmetric);
                }
            }
        }
        Ok(Self { entries })
    }

    /// `[[0, b], [-b, 0]]`
    pub fn rank2(b: i64) -> Self {
        Self {
            entries: vec![vec![0, b], vec![-b, 0]],
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Entry `b_ij` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// Mutation in direction `k` (1-based).
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let n = self.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        let k = k - 1;
        let b = &self.entries;
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0)
                };
            }
        }
        Ok(Self { entries: out })
    }

    /// Symmetric matrix with 2 on the diagonal and `-|b_ij|` elsewhere.
    pub fn cartan_counterpart(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 } else { -self.entries[i][j].abs() })
                    .collect()
            })
            .collect()
    }
}

/// Cluster variables `x_m` of the rank-2 algebra with exchange relations
/// `x_{m-1} x_{m+1} = x_m^b + 1`, expanded in the initial cluster `{x1, x2}`.
///
/// Computed values are cached. Lookups take a shared lock; misses are
/// computed under the exclusive lock, so insertion is serialized.
#[derive(Debug)]
pub struct ClusterContext {
    b: u32,
    work_limit: Option<u128>,
    cache: RwLock<BTreeMap<i64, Arc<LaurentPoly>>>,
}

impl ClusterContext {
    pub fn new(b: u32) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidArgument("b must be positive".into()));
        }
        let mut cache = BTreeMap::new();
        cache.insert(1, Arc::new(LaurentPoly::x1()));
        cache.insert(2, Arc::new(LaurentPoly::x2()));
        Ok(Self {
            b,
            work_limit: None,
            cache: RwLock::new(cache),
        })
    }

    /// Caps the estimated term-pair work of a single recursion step; a step
    /// above the cap fails with [`Error::SizeLimit`] instead of running.
    pub fn with_work_limit(mut self, limit: u128) -> Self {
        self.work_limit = Some(limit);
        self
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn cached(&self) -> Vec<i64> {
        self.cache.read().expect("cache lock").keys().copied().collect()
    }

    pub fn cluster_var(&self, m: i64) -> Result<Arc<LaurentPoly>> {
        if let Some(v) = self.cache.read().expect("cache lock").get(&m) {
            return Ok(Arc::clone(v));
        }
        let mut cache = self.cache.write().expect("cache lock");
        if let Some(v) = cache.get(&m) {
            return Ok(Arc::clone(v));
        }
        if m > 2 {
            let mut k = *cache.range(..m).next_back().expect("x2 cached").0;
            while k < m {
                let next = self.exchange(&cache[&k], &cache[&(k - 1)], k)?;
                k += 1;
                cache.insert(k, Arc::new(next));
            }
        } else {
            let mut k = *cache.range(m + 1..).next().expect("x1 cached").0;
            while k > m {
                let next = self.exchange(&cache[&k], &cache[&(k + 1)], k)?;
                k -= 1;
                cache.insert(k, Arc::new(next));
            }
        }
        Ok(Arc::clone(&cache[&m]))
    }

    // Given x_k and one neighbour, returns the other neighbour.
    fn exchange(&self, mid: &LaurentPoly, side: &LaurentPoly, k: i64) -> Result<LaurentPoly> {
        if let Some(limit) = self.work_limit {
            let len = mid.len() as u128;
            let b = self.b as u128;
            let work = len * len * b * b;
            if work > limit {
                return Err(Error::SizeLimit(format!(
                    "exchange step at m = {k} (b = {}) needs ~{work} term products, limit {limit}",
                    self.b
                )));
            }
        }
        let numerator = &mid.pow(self.b) + &LaurentPoly::one();
        numerator.div_exact(side)
    }
}

/// Denominator vector of `x_m` predicted by the Chebyshev recursion:
/// `(S_n(b), S_{n-1}(b))` for `m = n + 3`, `(S_{n-1}(b), S_n(b))` for `m = -n`.
pub fn alpha(b: u32, m: i64) -> Result<DimVector> {
    let (i, j) = match m {
        1 | 2 => return Err(Error::InitialClusterIndex(m)),
        m if m >= 3 => (m - 3, m - 4),
        m => (-m - 1, -m),
    };
    let conv = |v: num_bigint::BigInt| {
        v.to_i64()
            .ok_or_else(|| Error::Overflow(format!("alpha({b}, {m}) does not fit in i64")))
    };
    Ok(DimVector::new(
        conv(cheb_s_value(i, b as i64))?,
        conv(cheb_s_value(j, b as i64))?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reflection {
    S1,
    S2,
    Sigma,
}

/// Action of the simple reflections `s1 = [[-1, b], [0, 1]]`,
/// `s2 = [[1, 0], [b, -1]]` and the swap `sigma` on the root lattice.
pub fn reflect(v: DimVector, which: Reflection, b: i64) -> DimVector {
    match which {
        Reflection::S1 => DimVector::new(-v.d1 + b * v.d2, v.d2),
        Reflection::S2 => DimVector::new(v.d1, b * v.d1 - v.d2),
        Reflection::Sigma => v.swapped(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn mutation_examples() {
        let b = ExchangeMatrix::rank2(3);
        assert_eq!(b.mutate(1).unwrap(), ExchangeMatrix::rank2(-3));
        assert_eq!(b.mutate(1).unwrap().mutate(1).unwrap(), b);
        let m = ExchangeMatrix::new(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
        let mu = m.mutate(2).unwrap();
        assert_eq!(mu.get(1, 3), 1);
        assert_eq!(mu.get(3, 1), -1);
        assert_eq!(mu.get(1, 2), -1);
        assert_eq!(mu.get(2, 3), -1);
        assert_eq!(m.mutate(4), Err(Error::IndexOutOfRange { index: 4, n: 3 }));
        assert_eq!(m.mutate(0), Err(Error::IndexOutOfRange { index: 0, n: 3 }));
        assert_eq!(
            ExchangeMatrix::new(vec![vec![0, 1], vec![1, 0]]),
            Err(Error::NotSkewSymmetric)
        );
        assert_eq!(
            ExchangeMatrix::rank2(2).cartan_counterpart(),
            vec![vec![2, -2], vec![-2, 2]]
        );
    }

    fn skew_matrix(n: usize) -> impl Strategy<Value = ExchangeMatrix> {
        proptest::collection::vec(-4i64..=4, n * (n - 1) / 2).prop_map(move |upper| {
            let mut e = vec![vec![0i64; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = it.next().unwrap();
                    e[i][j] = v;
                    e[j][i] = -v;
                }
            }
            ExchangeMatrix::new(e).unwrap()
        })
    }

    proptest! {
        #[test]
        fn mutation_is_skew_involution(m in (2usize..=5).prop_flat_map(skew_matrix), k in 1usize..=5) {
            let k = (k - 1) % m.n() + 1;
            let mu = m.mutate(k).unwrap();
            prop_assert!(ExchangeMatrix::new(mu.entries().to_vec()).is_ok());
            prop_assert_eq!(mu.mutate(k).unwrap(), m);
        }
    }

    #[test]
    fn cluster_var_examples() {
        let ctx = ClusterContext::new(2).unwrap();
        assert_eq!(*ctx.cluster_var(3).unwrap(), lp(&[(-1, 2, 1), (-1, 0, 1)]));
        let ctx1 = ClusterContext::new(1).unwrap();
        assert_eq!(
            *ctx1.cluster_var(4).unwrap(),
            lp(&[(0, -1, 1), (-1, 0, 1), (-1, -1, 1)])
        );
        let ctx3 = ClusterContext::new(3).unwrap();
        let x2c = &LaurentPoly::x2().pow(3) + &LaurentPoly::one();
        let num = &x2c.pow(3) + &LaurentPoly::x1().pow(3);
        assert_eq!(*ctx3.cluster_var(4).unwrap(), num.shift(-3, -1));
    }

    #[test]
    fn b1_is_five_periodic() {
        let ctx = ClusterContext::new(1).unwrap();
        assert_eq!(*ctx.cluster_var(3).unwrap(), lp(&[(-1, 1, 1), (-1, 0, 1)]));
        assert_eq!(*ctx.cluster_var(5).unwrap(), lp(&[(1, -1, 1), (0, -1, 1)]));
        for m in -10..=10 {
            assert_eq!(
                ctx.cluster_var(m + 5).unwrap(),
                ctx.cluster_var(m).unwrap(),
                "m={m}"
            );
        }
    }

    #[test]
    fn exchange_identity_and_swap_symmetry() {
        for b in 2..=4u32 {
            let ctx = ClusterContext::new(b).unwrap();
            let (lo, hi) = if b == 2 { (-12, 15) } else { (-3, 6) };
            for m in lo + 1..hi {
                let lhs = &*ctx.cluster_var(m - 1).unwrap() * &*ctx.cluster_var(m + 1).unwrap();
                let rhs = &ctx.cluster_var(m).unwrap().pow(b) + &LaurentPoly::one();
                assert_eq!(lhs, rhs, "b={b} m={m}");
            }
            for m in lo..=hi {
                if (lo..=hi).contains(&(3 - m)) {
                    assert_eq!(
                        ctx.cluster_var(m).unwrap().swap_vars(),
                        *ctx.cluster_var(3 - m).unwrap(),
                        "b={b} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn denominators_and_positivity() {
        for b in 2..=5u32 {
            let ctx = ClusterContext::new(b).unwrap();
            let (lo, hi) = if b == 2 { (-12, 15) } else { (-3, 6) };
            for m in lo..=hi {
                let x = ctx.cluster_var(m).unwrap();
                assert!(x.is_positive(), "b={b} m={m}");
                if m != 1 && m != 2 {
                    assert_eq!(
                        x.denominator_vector().unwrap(),
                        alpha(b, m).unwrap(),
                        "b={b} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn cache_is_transparent() {
        let warm = ClusterContext::new(3).unwrap();
        for m in [5, -2, 4, 0, -3, 6] {
            warm.cluster_var(m).unwrap();
        }
        for m in -3..=6 {
            let cold = ClusterContext::new(3).unwrap();
            assert_eq!(warm.cluster_var(m).unwrap(), cold.cluster_var(m).unwrap());
        }
    }

    #[test]
    fn concurrent_readers_agree() {
        let ctx = Arc::new(ClusterContext::new(2).unwrap());
        let handles: Vec<_> = (0..4)
            .map(|t| {
                let ctx = Arc::clone(&ctx);
                std::thread::spawn(move || {
                    for m in -8..=10 {
                        ctx.cluster_var(if t % 2 == 0 { m } else { -m + 2 }).unwrap();
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        let fresh = ClusterContext::new(2).unwrap();
        for m in -8..=10 {
            assert_eq!(ctx.cluster_var(m).unwrap(), fresh.cluster_var(m).unwrap());
        }
    }

    #[test]
    fn work_limit_stops_large_steps() {
        let ctx = ClusterContext::new(5).unwrap().with_work_limit(10_000);
        assert!(matches!(ctx.cluster_var(8), Err(Error::SizeLimit(_))));
        assert!(ctx.cluster_var(3).is_ok());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(2, -1).unwrap(), DimVector::new(1, 2));
        for b in 1..=6 {
            assert_eq!(alpha(b, 3).unwrap(), DimVector::new(1, 0));
            assert_eq!(alpha(b, 0).unwrap(), DimVector::new(0, 1));
        }
        assert_eq!(alpha(3, 5).unwrap(), DimVector::new(8, 3));
        assert_eq!(alpha(2, 1), Err(Error::InitialClusterIndex(1)));
        assert_eq!(alpha(2, 2), Err(Error::InitialClusterIndex(2)));
    }

    #[test]
    fn reflections() {
        let b = 2;
        assert_eq!(
            reflect(DimVector::new(1, 0), Reflection::S1, b),
            DimVector::new(-1, 0)
        );
        let v = reflect(alpha(2, 0).unwrap(), Reflection::S1, b);
        assert_eq!(reflect(v, Reflection::Sigma, b), alpha(2, -1).unwrap());
        assert_eq!(
            reflect(alpha(2, 3).unwrap(), Reflection::S2, b),
            alpha(2, -1).unwrap()
        );
        // s1 alpha(-n) = alpha(n+4) = sigma alpha(-n-1); s2 alpha(n+3) = alpha(-n-1) = sigma alpha(n+4)
        for b in 2..=5u32 {
            for n in 0..8i64 {
                let bi = b as i64;
                let a = |m| alpha(b, m).unwrap();
                assert_eq!(reflect(a(-n), Reflection::S1, bi), a(n + 4));
                assert_eq!(reflect(a(-n - 1), Reflection::Sigma, bi), a(n + 4));
                assert_eq!(reflect(a(n + 3), Reflection::S2, bi), a(-n - 1));
                assert_eq!(reflect(a(n + 4), Reflection::Sigma, bi), a(-n - 1));
            }
        }
    }
}
