//! `rank2-cluster`: compute cluster variables, quiver representations, Euler
//! characteristics and canonical-basis elements, run verification suites and
//! explore the general-`b` recursion.
//!
//! Exit status: 0 success, 1 computation or verification failure, 2 usage
//! error, 3 a positivity or Laurent-phenomenon counterexample for `b > 2`.

mod schema;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rank2_cluster::canonical::{list_basis, s_elem, x_closed_form, z_elem};
use rank2_cluster::cluster::ClusterContext;
use rank2_cluster::explore::{explore_one, ExploreRecord};
use rank2_cluster::finite_field::subrep_count_fq;
use rank2_cluster::grassmannian::{chi_table, ChiRoute, ChiTable, RepKind};
use rank2_cluster::quiver::{
    build_m, build_preinjective_explicit, build_preprojective_explicit, QuiverRep, RepJson,
};
use rank2_cluster::verify::{run_suite, Suite, VerifyOptions};
use rank2_cluster::{DimVector, Error, LaurentPoly};
use schema::*;

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Preproj,
    Preinj,
    Regular,
}

impl From<KindArg> for RepKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Preproj => RepKind::Preprojective,
            KindArg::Preinj => RepKind::Preinjective,
            KindArg::Regular => RepKind::Regular,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Closed,
    Oracle,
    Cells,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CanonKind {
    X,
    S,
    Z,
}

#[derive(Parser, Debug)]
#[command(
    name = "rank2-cluster",
    version,
    about = "Exact computations in rank-2 cluster algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Size bound for verification suites.
    #[arg(long = "max-n", global = true)]
    max_n: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Laurent expansion of x_m for B = [[0, b], [-b, 0]].
    ClusterVar {
        #[arg(long)]
        b: u32,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Indecomposable representation M(m) of the b-Kronecker quiver.
    Rep {
        #[arg(long)]
        b: u32,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// Use the explicit 0/1 model (b = 2 only).
        #[arg(long)]
        explicit: bool,
        /// Experimental: subrepresentation counts over F_q (q = 2, 3, 4).
        #[arg(long)]
        fq: Option<u32>,
    },
    /// Euler characteristics chi_e of quiver Grassmannians (b = 2).
    Chi {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u32,
        /// Single dimension vector "E1,E2".
        #[arg(long, allow_hyphen_values = true)]
        e: Option<String>,
        #[arg(long, value_enum, default_value_t = RouteArg::Closed)]
        route: RouteArg,
    },
    /// Closed forms x_m (m given by --n), s_n, z_n, or a listing of the
    /// canonical basis.
    Canonical {
        #[arg(long, value_enum, required_unless_present = "list")]
        kind: Option<CanonKind>,
        #[arg(long, allow_negative_numbers = true, required_unless_present = "list")]
        n: Option<i64>,
        #[arg(long, conflicts_with_all = ["kind", "n"], requires = "max_degree")]
        list: bool,
        #[arg(long = "max-degree")]
        max_degree: Option<u32>,
    },
    /// Run a named verification suite.
    Verify { suite: String },
    /// Record term counts, coefficient ranges and positivity of x_m.
    Explore {
        #[arg(long)]
        b: u32,
        #[arg(long = "m-min", allow_negative_numbers = true)]
        m_min: i64,
        #[arg(long = "m-max", allow_negative_numbers = true)]
        m_max: i64,
    },
}

/// A failed command with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_)
            | Error::InitialClusterIndex(_)
            | Error::UnsupportedB(_)
            | Error::UnsupportedRep
            | Error::UnknownSuite(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_FAILURE,
            message: format!("i/o error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<(), Failure>;

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("documents serialize");
    s.push('\n');
    s
}

fn csv_terms(p: &LaurentPoly) -> String {
    let mut s = String::from("e1,e2,c\n");
    for (m, c) in p.terms() {
        s.push_str(&format!("{},{},{}\n", m.e1, m.e2, c));
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(EXIT_FAILURE);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::ClusterVar { b, m } => cluster_var(cli.format, *b, *m, out),
        Command::Rep { b, m, explicit, fq } => rep(cli.format, *b, *m, *explicit, *fq, out),
        Command::Chi { kind, n, e, route } => chi(cli.format, (*kind).into(), *n, e.as_deref(), *route, out),
        Command::Canonical {
            kind,
            n,
            list,
            max_degree,
        } => {
            if *list {
                canonical_list(cli.format, max_degree.expect("clap requires max-degree"), out)
            } else {
                canonical(
                    cli.format,
                    kind.expect("clap requires kind"),
                    n.expect("clap requires n"),
                    out,
                )
            }
        }
        Command::Verify { suite } => verify(cli, suite, out),
        Command::Explore { b, m_min, m_max } => explore(cli.format, *b, *m_min, *m_max, out),
    }
}

fn cluster_var(format: Format, b: u32, m: i64, out: &mut dyn Write) -> CmdResult {
    let ctx = ClusterContext::new(b)?;
    let x = ctx.cluster_var(m)?;
    let text = match format {
        Format::Json => json(&ClusterVarDoc {
            b,
            m,
            denominator: x.denominator_vector()?,
            terms: terms(&x),
        }),
        Format::Csv => csv_terms(&x),
        Format::Text => format!("x_{m} = {x}\n"),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn explicit_model(m: i64) -> Result<QuiverRep, Failure> {
    match m {
        1 | 2 => Err(Error::InitialClusterIndex(m).into()),
        m if m <= 0 => Ok(build_preprojective_explicit((-m) as u32)),
        m => Ok(build_preinjective_explicit((m - 3) as u32)),
    }
}

fn rep(format: Format, b: u32, m: i64, explicit: bool, fq: Option<u32>, out: &mut dyn Write) -> CmdResult {
    let rep = if explicit {
        if b != 2 {
            return Err(usage("--explicit models exist for b = 2 only"));
        }
        explicit_model(m)?
    } else {
        build_m(b, m)?
    };
    let fq_counts = match fq {
        None => None,
        Some(q) => {
            let d = rep.dim();
            let mut counts = Vec::new();
            for e1 in 0..=d.d1 {
                for e2 in 0..=d.d2 {
                    let e = DimVector::new(e1, e2);
                    counts.push(FqCount {
                        e,
                        count: subrep_count_fq(&rep, e, q)?.to_string(),
                    });
                }
            }
            Some(FqCounts { q, counts })
        }
    };
    let base = RepJson::from(&rep);
    let text = match format {
        Format::Json => json(&RepDoc {
            b: base.b,
            d: base.d,
            maps: base.maps,
            fq_counts,
        }),
        Format::Csv => {
            let mut s = String::from("map,row,col,value\n");
            for (k, m) in base.maps.iter().enumerate() {
                for (i, row) in m.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        s.push_str(&format!("{},{},{},{}\n", k + 1, i + 1, j + 1, v));
                    }
                }
            }
            s
        }
        Format::Text => {
            let mut s = format!("M({m}): {rep}");
            if let Some(fc) = fq_counts {
                s.push_str(&format!(
                    "experimental subrepresentation counts over F_{}:\n",
                    fc.q
                ));
                for c in fc.counts {
                    s.push_str(&format!("  e = {}: {}\n", c.e, c.count));
                }
            }
            s
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn parse_e(s: &str) -> Result<DimVector, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok(DimVector::new(a, b)),
            _ => Err(usage(format!("--e expects E1,E2 with integers, got {s:?}"))),
        },
        _ => Err(usage(format!("--e expects E1,E2, got {s:?}"))),
    }
}

fn chi(
    format: Format,
    kind: RepKind,
    n: u32,
    e: Option<&str>,
    route: RouteArg,
    out: &mut dyn Write,
) -> CmdResult {
    let e = e.map(parse_e).transpose()?;
    let routes: Vec<ChiRoute> = match route {
        RouteArg::Closed => vec![ChiRoute::Closed],
        RouteArg::Oracle => vec![ChiRoute::Oracle],
        RouteArg::Cells => vec![ChiRoute::Cells],
        RouteArg::All => ChiRoute::ALL.to_vec(),
    };
    let tables: Vec<ChiTable> = routes
        .iter()
        .map(|&r| chi_table(kind, n, r))
        .collect::<Result<_, _>>()?;
    let d = kind.dim(n);
    let es: Vec<DimVector> = match e {
        Some(e) => vec![e],
        None => tables[0].entries().map(|(e, _)| e).collect(),
    };
    let agree = (route == RouteArg::All).then(|| {
        es.iter()
            .all(|&e| tables.iter().all(|t| t.get(e) == tables[0].get(e)))
    });
    let rows: Vec<ChiRow> = es
        .iter()
        .flat_map(|&e| {
            tables.iter().map(move |t| ChiRow {
                e1: e.d1,
                e2: e.d2,
                chi: t.get(e).to_string(),
                route: t.provenance.to_string(),
            })
        })
        .collect();
    let text = match format {
        Format::Json => json(&ChiDoc {
            kind: kind.to_string(),
            n,
            d,
            entries: rows,
            agree,
        }),
        Format::Csv => {
            let mut s = String::from("e1,e2,chi,route\n");
            for r in rows {
                s.push_str(&format!("{},{},{},{}\n", r.e1, r.e2, r.chi, r.route));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{kind}({n}), d = {d}\n");
            s.push_str(&format!("{:>4} {:>4}", "e1", "e2"));
            for t in &tables {
                s.push_str(&format!(" {:>12}", t.provenance.to_string()));
            }
            s.push('\n');
            for &e in &es {
                s.push_str(&format!("{:>4} {:>4}", e.d1, e.d2));
                for t in &tables {
                    s.push_str(&format!(" {:>12}", t.get(e).to_string()));
                }
                s.push('\n');
            }
            if let Some(a) = agree {
                s.push_str(if a { "routes agree\n" } else { "routes DISAGREE\n" });
            }
            s
        }
    };
    out.write_all(text.as_bytes())?;
    if agree == Some(false) {
        return Err(Failure {
            code: EXIT_FAILURE,
            message: "chi routes disagree".into(),
        });
    }
    Ok(())
}

fn canonical(format: Format, kind: CanonKind, n: i64, out: &mut dyn Write) -> CmdResult {
    let (label, value) = match kind {
        CanonKind::X => ("x", x_closed_form(n)?),
        CanonKind::S => ("s", s_elem(n)?),
        CanonKind::Z => ("z", z_elem(n)?),
    };
    let text = match format {
        Format::Json => json(&CanonicalDoc {
            kind: label.to_string(),
            n,
            denominator: value.denominator_vector()?,
            terms: terms(&value),
        }),
        Format::Csv => csv_terms(&value),
        Format::Text => format!("{label}_{n} = {value}\n"),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn canonical_list(format: Format, max_degree: u32, out: &mut dyn Write) -> CmdResult {
    let elements = list_basis(max_degree)?
        .into_iter()
        .map(|el| {
            Ok(BasisEntry {
                label: el.to_string(),
                element: el,
                denominator: el.denominator()?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let text = match format {
        Format::Json => json(&BasisListDoc { max_degree, elements }),
        Format::Csv => {
            let mut s = String::from("label,d1,d2\n");
            for e in elements {
                s.push_str(&format!(
                    "{},{},{}\n",
                    e.label, e.denominator.d1, e.denominator.d2
                ));
            }
            s
        }
        Format::Text => elements
            .iter()
            .map(|e| format!("{:<16} {}\n", e.label, e.denominator))
            .collect(),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn verify(cli: &Cli, suite: &str, out: &mut dyn Write) -> CmdResult {
    let suite: Suite = suite.parse()?;
    let report = run_suite(
        suite,
        VerifyOptions {
            max_n: cli.max_n,
            seed: cli.seed,
        },
    )?;
    let text = match cli.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = String::from("suite,max_n,cases,failures,wall_ms\n");
            s.push_str(&format!(
                "{},{},{},{},{}\n",
                report.suite,
                report.max_n,
                report.cases,
                report.failures.len(),
                report.wall_ms
            ));
            s
        }
        Format::Text => {
            let mut s = format!(
                "{}: {} cases, {} failures ({} ms)\n",
                report.suite,
                report.cases,
                report.failures.len(),
                report.wall_ms
            );
            for f in &report.failures {
                s.push_str(&format!(
                    "  FAIL {}: expected {}, got {}\n",
                    f.case, f.expected, f.actual
                ));
            }
            s
        }
    };
    out.write_all(text.as_bytes())?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_FAILURE,
            message: format!("{} failure(s) in suite {}", report.failures.len(), report.suite),
        })
    }
}

fn counterexample(b: u32, message: String) -> Failure {
    let code = if b > 2 { EXIT_COUNTEREXAMPLE } else { EXIT_FAILURE };
    let prefix = if b > 2 {
        "conjecture counterexample"
    } else {
        "theorem violated"
    };
    Failure {
        code,
        message: format!("{prefix}: {message}"),
    }
}

fn explore(format: Format, b: u32, m_min: i64, m_max: i64, out: &mut dyn Write) -> CmdResult {
    if b < 2 {
        return Err(Error::UnsupportedB(b).into());
    }
    let ctx = ClusterContext::new(b)?;
    let mut records: Vec<ExploreRecord> = Vec::new();
    if format == Format::Csv {
        writeln!(out, "{}", ExploreRecord::CSV_HEADER)?;
    }
    let mut failure = None;
    for m in m_min..=m_max {
        let rec = match explore_one(&ctx, m) {
            Ok(r) => r,
            Err(Error::NotDivisible) => {
                failure = Some(counterexample(b, format!("x_{m} is not a Laurent polynomial")));
                break;
            }
            Err(e) => {
                failure = Some(e.into());
                break;
            }
        };
        match format {
            Format::Csv => writeln!(out, "{}", rec.csv_row())?,
            Format::Text => writeln!(
                out,
                "b={} m={} d={} terms={} coeffs=[{}, {}] positive={} time_ms={}",
                rec.b,
                rec.m,
                rec.denominator,
                rec.terms,
                rec.min_coeff,
                rec.max_coeff,
                rec.positive,
                rec.time_ms
            )?,
            Format::Json => {}
        }
        out.flush()?;
        let negative = !rec.positive;
        records.push(rec);
        if negative {
            failure = Some(counterexample(b, format!("x_{m} has a nonpositive coefficient")));
            break;
        }
    }
    if format == Format::Json {
        out.write_all(
            json(&ExploreDoc {
                b,
                m_min,
                m_max,
                records,
            })
            .as_bytes(),
        )?;
    }
    match failure {
        Some(f) => Err(f),
        None => Ok(()),
    }
}
