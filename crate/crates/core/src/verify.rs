//! Named verification suites, one per group of module invariants.

use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canonical::{s_elem, x_closed_form, z1, z_elem};
use crate::chebyshev::{
    cheb_p_coeffs, cheb_s_coeffs, count_subsets_by_c, count_subsets_by_c_minus_eps, enumerate_counts_by_c,
    enumerate_counts_by_c_minus_eps, f_poly_specialized, MAX_ENUMERATION_N,
};
use crate::cluster::{alpha, reflect, ClusterContext, Reflection};
use crate::error::{Error, Result};
use crate::grassmannian::{
    chi_table, chi_z_cellcount, chi_z_closed, p_poly, tplus_identity_holds, verify_tplus_identity, x_poly,
    ChiRoute, RepKind,
};
use crate::laurent::LaurentPoly;
use crate::quiver::{build_m, build_preprojective_explicit, build_regular_explicit, QuiverRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    RecursionVsClosed,
    Canonical,
    ChiTriple,
    Subsets,
    Functors,
    Laurent,
    TplusIdentity,
    FBridge,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::RecursionVsClosed,
        Suite::Canonical,
        Suite::ChiTriple,
        Suite::Subsets,
        Suite::Functors,
        Suite::Laurent,
        Suite::TplusIdentity,
        Suite::FBridge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RecursionVsClosed => "recursion-vs-closed",
            Suite::Canonical => "canonical",
            Suite::ChiTriple => "chi-triple",
            Suite::Subsets => "subsets",
            Suite::Functors => "functors",
            Suite::Laurent => "laurent",
            Suite::TplusIdentity => "tplus-identity",
            Suite::FBridge => "f-bridge",
        }
    }

    /// Bound used when `--max-n` is not given.
    pub fn default_max_n(self) -> u32 {
        match self {
            Suite::RecursionVsClosed | Suite::Canonical => 25,
            Suite::ChiTriple | Suite::FBridge => 10,
            Suite::Subsets => 16,
            Suite::Functors => 6,
            Suite::Laurent => 200,
            Suite::TplusIdentity => 5,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFailure {
    pub case: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub max_n: u32,
    pub cases: u64,
    pub failures: Vec<CaseFailure>,
    pub wall_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub max_n: Option<u32>,
    pub seed: u64,
}

#[derive(Default)]
struct Cases {
    cases: u64,
    failures: Vec<CaseFailure>,
}

impl Cases {
    fn eq<T: PartialEq + Display>(&mut self, case: impl Into<String>, expected: &T, actual: &T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(CaseFailure {
                case: case.into(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn holds(&mut self, case: impl Into<String>, ok: bool) {
        self.eq(case, &true, &ok);
    }

    /// Records an error in place of a value.
    fn result<T: PartialEq + Display>(&mut self, case: impl Into<String>, expected: &T, actual: Result<T>) {
        match actual {
            Ok(v) => self.eq(case, expected, &v),
            Err(e) => {
                self.cases += 1;
                self.failures.push(CaseFailure {
                    case: case.into(),
                    expected: expected.to_string(),
                    actual: format!("error: {e}"),
                });
            }
        }
    }
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> Result<VerifyReport> {
    let max_n = opts.max_n.unwrap_or_else(|| suite.default_max_n());
    let start = Instant::now();
    let mut c = Cases::default();
    match suite {
        Suite::RecursionVsClosed => recursion_vs_closed(&mut c, max_n)?,
        Suite::Canonical => canonical(&mut c, max_n)?,
        Suite::ChiTriple => chi_triple(&mut c, max_n)?,
        Suite::Subsets => subsets(&mut c, max_n)?,
        Suite::Functors => functors(&mut c, max_n)?,
        Suite::Laurent => laurent(&mut c, max_n, opts.seed)?,
        Suite::TplusIdentity => tplus(&mut c, max_n)?,
        Suite::FBridge => f_bridge(&mut c, max_n)?,
    }
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        max_n,
        cases: c.cases,
        failures: c.failures,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

fn recursion_vs_closed(c: &mut Cases, max_n: u32) -> Result<()> {
    let ctx = ClusterContext::new(2)?;
    let n = max_n as i64;
    for m in -n..=n + 3 {
        if m == 1 || m == 2 {
            continue;
        }
        let x = ctx.cluster_var(m)?;
        c.result(format!("x_{m} closed form"), &*x, x_closed_form(m));
        c.result(
            format!("x_{m} denominator"),
            &alpha(2, m)?,
            x.denominator_vector(),
        );
        c.holds(format!("x_{m} positive"), x.is_positive());
        c.eq(
            format!("x_{m} swap symmetry"),
            &*ctx.cluster_var(3 - m)?,
            &x.swap_vars(),
        );
    }
    Ok(())
}

fn canonical(c: &mut Cases, max_n: u32) -> Result<()> {
    let n = max_n as i64;
    let z = z1();
    let s: Vec<LaurentPoly> = (0..=n + 1).map(s_elem).collect::<Result<_>>()?;
    c.eq("z_1 = s_1", &s[1], &z);
    for k in 1..=n {
        let ku = k as usize;
        let rec = &(&z * &s[ku]) - &s[ku - 1];
        c.eq(format!("s_{} recursion", k + 1), &s[ku + 1], &rec);
        c.eq(
            format!("s_{k} = S_{k}(z_1)"),
            &s[ku],
            &z.eval_univariate(&cheb_s_coeffs(k)),
        );
        let zk = z_elem(k)?;
        c.eq(
            format!("z_{k} = P_{k}(z_1)"),
            &zk,
            &z.eval_univariate(&cheb_p_coeffs(k as u32)),
        );
        if k >= 2 {
            c.eq(
                format!("z_{k} = s_{k} - s_{}", k - 2),
                &zk,
                &(&s[ku] - &s[ku - 2]),
            );
        }
        c.holds(format!("s_{k} positive"), s[ku].is_positive());
        c.holds(format!("z_{k} positive"), zk.is_positive());
    }
    let ctx = ClusterContext::new(2)?;
    let x = |m| ctx.cluster_var(m);
    let lhs = &(&*x(0)? * &*x(3)?) - &(&*x(1)? * &*x(2)?);
    c.eq("z_1 = x_0 x_3 - x_1 x_2", &z, &lhs);
    Ok(())
}

fn chi_triple(c: &mut Cases, max_n: u32) -> Result<()> {
    let ctx = ClusterContext::new(2)?;
    for kind in [RepKind::Preprojective, RepKind::Regular] {
        let first = if kind == RepKind::Regular { 1 } else { 0 };
        for n in first..=max_n {
            let d = kind.dim(n);
            for p in 0..=d.d2 {
                for r in 0..=d.d1 {
                    c.eq(
                        format!("{kind}({n}) chi(Z_{p},{r})"),
                        &chi_z_closed(kind, n, p, r)?,
                        &chi_z_cellcount(kind, n, p, r)?,
                    );
                }
            }
            let closed = chi_table(kind, n, ChiRoute::Closed)?;
            let oracle = chi_table(kind, n, ChiRoute::Oracle)?;
            for (e, v) in closed.entries() {
                c.eq(format!("{kind}({n}) chi_{e} oracle"), v, &oracle.get(e));
            }
        }
    }
    for n in 0..=max_n {
        let ni = n as i64;
        let pre = x_poly(RepKind::Preprojective, n, 2)?;
        c.eq(format!("X_M(-{n}) = x_-{n}"), &*ctx.cluster_var(-ni)?, &pre);
        c.result(
            format!("X_M(-{n}) denominator"),
            &RepKind::Preprojective.dim(n),
            pre.denominator_vector(),
        );
        let inj = x_poly(RepKind::Preinjective, n, 2)?;
        c.eq(
            format!("X_M({}) = x_{}", ni + 3, ni + 3),
            &*ctx.cluster_var(ni + 3)?,
            &inj,
        );
        c.result(
            format!("X_M({}) denominator", ni + 3),
            &RepKind::Preinjective.dim(n),
            inj.denominator_vector(),
        );
        if n >= 1 {
            c.result(
                format!("X_reg({n}) = s_{n}"),
                &s_elem(ni)?,
                x_poly(RepKind::Regular, n, 2),
            );
        }
        if n <= 6 {
            c.eq(
                format!("P_DM(z1,z2) = P_M(z2,z1), n = {n}"),
                &p_poly(RepKind::Preprojective, n)?.swap_vars(),
                &p_poly(RepKind::Preinjective, n)?,
            );
        }
    }
    Ok(())
}

fn subsets(c: &mut Cases, max_n: u32) -> Result<()> {
    if max_n > MAX_ENUMERATION_N {
        return Err(Error::SizeLimit(format!(
            "subset enumeration supports n <= {MAX_ENUMERATION_N}"
        )));
    }
    for n in 0..=max_n {
        let by_c = enumerate_counts_by_c(n)?;
        let by_ce = enumerate_counts_by_c_minus_eps(n)?;
        let ni = n as i64;
        for r in 0..=ni {
            for t in 0..=ni {
                let brute =
                    |tab: &Vec<Vec<u64>>| BigInt::from(tab[r as usize].get(t as usize).copied().unwrap_or(0));
                c.eq(
                    format!("n={n} r={r} t={t} by c"),
                    &brute(&by_c),
                    &count_subsets_by_c(ni, r, t),
                );
                c.eq(
                    format!("n={n} r={r} t={t} by c-eps"),
                    &brute(&by_ce),
                    &count_subsets_by_c_minus_eps(ni, r, t),
                );
            }
        }
    }
    Ok(())
}

fn dims_and_ranks(m: &QuiverRep) -> String {
    format!("{} {:?}", m.dim(), m.rank_profile())
}

fn functors(c: &mut Cases, max_n: u32) -> Result<()> {
    for b in 2..=4u32 {
        for n in 0..=max_n as i64 {
            for m in [-n, n + 3] {
                let rep = build_m(b, m)?;
                c.eq(format!("b={b} dim M({m})"), &alpha(b, m)?, &rep.dim());
                c.holds(format!("b={b} D^2 M({m}) = M({m})"), rep.dual().dual() == rep);
                if rep.phi_c_injective() {
                    let expected = reflect(
                        reflect(rep.dim(), Reflection::S1, b as i64),
                        Reflection::Sigma,
                        b as i64,
                    );
                    c.eq(format!("b={b} dim T+ M({m})"), &expected, &rep.t_plus().dim());
                }
            }
        }
    }
    let smalls: Vec<QuiverRep> = (0..=3)
        .map(build_preprojective_explicit)
        .chain((1..=3).map(|n| build_regular_explicit(n).expect("n >= 1")))
        .chain([QuiverRep::simple(2, 1)?, QuiverRep::simple(2, 2)?])
        .collect();
    for (i, a) in smalls.iter().enumerate() {
        c.eq(
            format!("T- = D T+ D on sample {i}"),
            &dims_and_ranks(&a.t_minus()),
            &dims_and_ranks(&a.dual().t_plus().dual()),
        );
        c.eq(
            format!("T+ = D T- D on sample {i}"),
            &dims_and_ranks(&a.t_plus()),
            &dims_and_ranks(&a.dual().t_minus().dual()),
        );
        for (j, b) in smalls.iter().enumerate() {
            let sum = a.direct_sum(b)?.t_plus();
            let (ta, tb) = (a.t_plus(), b.t_plus());
            c.eq(
                format!("T+ additive dims {i}+{j}"),
                &(ta.dim() + tb.dim()),
                &sum.dim(),
            );
            let ranks: Vec<usize> = ta
                .rank_profile()
                .iter()
                .zip(tb.rank_profile())
                .map(|(x, y)| x + y)
                .collect();
            c.eq(
                format!("T+ additive ranks {i}+{j}"),
                &format!("{ranks:?}"),
                &format!("{:?}", sum.rank_profile()),
            );
        }
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let len = rng.gen_range(0..=6);
    LaurentPoly::from_terms((0..len).map(|_| {
        (
            rng.gen_range(-4i64..=4),
            rng.gen_range(-4i64..=4),
            rng.gen_range(-9i64..=9),
        )
    }))
}

fn laurent(c: &mut Cases, cases: u32, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x1 = LaurentPoly::x1();
    let x2 = LaurentPoly::x2();
    for i in 0..cases {
        let (p, q, r) = (
            random_poly(&mut rng),
            random_poly(&mut rng),
            random_poly(&mut rng),
        );
        c.eq(format!("#{i} commutative +"), &(&p + &q), &(&q + &p));
        c.eq(format!("#{i} commutative *"), &(&p * &q), &(&q * &p));
        c.eq(
            format!("#{i} associative +"),
            &(&(&p + &q) + &r),
            &(&p + &(&q + &r)),
        );
        c.eq(
            format!("#{i} associative *"),
            &(&(&p * &q) * &r),
            &(&p * &(&q * &r)),
        );
        c.eq(
            format!("#{i} distributive"),
            &(&p * &(&q + &r)),
            &(&(&p * &q) + &(&p * &r)),
        );
        if !q.is_zero() {
            c.result(format!("#{i} (p q) / q"), &p, (&p * &q).div_exact(&q));
        }
        c.result(format!("#{i} substitute identity"), &p, p.substitute(&x1, &x2));
    }
    Ok(())
}

fn tplus(c: &mut Cases, max_n: u32) -> Result<()> {
    for n in 0..=max_n {
        c.eq(format!("T+ identity n={n}"), &true, &verify_tplus_identity(n)?);
    }
    let p_m = p_poly(RepKind::Preprojective, 1)?;
    let perturbed = p_poly(RepKind::Preprojective, 2)? + LaurentPoly::monomial(1, 0, 0);
    c.eq(
        "perturbed P_T+M rejected",
        &false,
        &tplus_identity_holds(&p_m, RepKind::Preprojective.dim(1), &perturbed, 2),
    );
    Ok(())
}

fn f_bridge(c: &mut Cases, max_n: u32) -> Result<()> {
    let ctx = ClusterContext::new(2)?;
    for n in 0..=max_n {
        let ni = n as i64;
        let x_neg = ctx.cluster_var(-ni)?.shift(ni, ni + 1);
        c.result(format!("x_-{n} via F"), &x_neg, f_poly_specialized(2 * n + 1, 0));
        let x_pos = ctx.cluster_var(ni + 3)?.shift(ni + 1, ni);
        c.result(
            format!("x_{} via F", ni + 3),
            &x_pos,
            f_poly_specialized(2 * n + 1, 1),
        );
        let s = s_elem(ni + 1)?.shift(ni + 1, ni + 1);
        c.result(
            format!("s_{} via F", ni + 1),
            &s,
            f_poly_specialized(2 * n + 2, 0),
        );
    }
    Ok(())
}
