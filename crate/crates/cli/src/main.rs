use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hnkac_core::hua::{stabilization_study, ShiftReport, StabilizationReport};
use hnkac_core::json::{parse_quiver, PolynomialJson};
use hnkac_core::strata::s0_commutant_dim;
use hnkac_core::{
    check_against_engine, enumerate_hn_types, kac_report, parse_scale, strata_report,
    stratified_decomposition, verify_bucket_shift, BucketKey, CodimCheck, DimVector, Error, Guards,
    HnType, OracleCheck, Quiver, RootClass, Stability, StrataReport,
};

/// Kac polynomials, Harder–Narasimhan strata and their degree/codimension checks.
#[derive(Parser)]
#[command(name = "hnkac", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Quiver file: {"vertices": [...], "arrows": [{"from", "to", "mult"}]}
    #[arg(long, global = true)]
    quiver: Option<PathBuf>,
    /// Dimension vector in vertex order, e.g. 3,2
    #[arg(
        long,
        global = true,
        value_delimiter = ',',
        allow_negative_numbers = true
    )]
    dim: Option<Vec<i64>>,
    /// Stability parameter in vertex order, e.g. 2,-3
    #[arg(
        long,
        global = true,
        value_delimiter = ',',
        allow_negative_numbers = true
    )]
    theta: Option<Vec<i64>>,
    /// Multiply every arrow multiplicity by N first
    #[arg(long, global = true)]
    multiply: Option<u32>,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Kac polynomial with root class and degree check
    Kac,
    /// Asymptotic HN types of the dimension vector
    HnTypes,
    /// Strata dimensions and codimensions per HN type
    Strata,
    /// Hua's formula grouped into HN and slope-tied buckets
    Decompose,
    /// Degree gap of each HN bucket against the moment-map codimension
    #[command(name = "verify-6-7")]
    VerifyCodim,
    /// Compare shifted bucket polynomials at two edge multiplicities
    #[command(name = "verify-6-8")]
    VerifyShift {
        #[arg(long)]
        n1: u32,
        #[arg(long)]
        n2: u32,
    },
    /// Low and top coefficients of A under edge multiplication
    Stabilize {
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        #[arg(long)]
        k: u32,
    },
    /// Brute-force count over F_q compared with the engine
    Oracle {
        #[arg(long)]
        q: u32,
    },
    /// Dimension of the flag-compatible commutant
    S0 {
        /// Parts separated by ';', coordinates by ',', e.g. "2,1;1,1"
        #[arg(long = "type")]
        hn_type: String,
    },
}

struct Context {
    quiver: Quiver,
    common: Common,
    guards: Guards,
}

impl Context {
    fn alpha(&self) -> Result<DimVector, Error> {
        let raw = self
            .common
            .dim
            .as_ref()
            .ok_or_else(|| input("--dim is required"))?;
        let coords = raw
            .iter()
            .map(|&x| {
                u32::try_from(x)
                    .map_err(|_| input(format!("--dim entries must be nonnegative, got {x}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.quiver.dim(&coords)
    }

    fn theta(&self) -> Result<Stability, Error> {
        let raw = self
            .common
            .theta
            .clone()
            .ok_or_else(|| input("--theta is required for this subcommand"))?;
        if raw.len() != self.quiver.vertex_count() {
            return Err(input(format!(
                "--theta has {} entries but the quiver has {} vertices",
                raw.len(),
                self.quiver.vertex_count()
            )));
        }
        Ok(Stability::new(raw))
    }
}

fn input(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn load(common: Common) -> Result<Context, Error> {
    let path = common
        .quiver
        .clone()
        .ok_or_else(|| input("--quiver is required"))?;
    let text =
        std::fs::read_to_string(&path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    let mut quiver = parse_quiver(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    if let Some(n) = common.multiply {
        quiver = quiver.multiply_edges(n)?;
    }
    let guards = match std::env::var("HNKAC_GUARD_SCALE") {
        Ok(s) => Guards::default().scaled(&parse_scale(&s)?)?,
        Err(_) => Guards::default(),
    };
    Ok(Context {
        quiver,
        common,
        guards,
    })
}

#[derive(Serialize)]
struct KacOut {
    alpha: DimVector,
    #[serde(flatten)]
    polynomial: PolynomialJson,
    root_class: RootClass,
    expected_degree: Option<i64>,
    consistent: bool,
}

#[derive(Serialize)]
struct HnTypesOut {
    alpha: DimVector,
    theta: Stability,
    hn_types: Vec<HnType>,
}

#[derive(Serialize)]
struct BucketOut {
    key: BucketKey,
    polynomial: PolynomialJson,
    degree: Option<i64>,
}

#[derive(Serialize)]
struct DecomposeOut {
    alpha: DimVector,
    theta: Stability,
    kac: PolynomialJson,
    total: PolynomialJson,
    buckets: Vec<BucketOut>,
    checks: Vec<CodimCheck>,
}

#[derive(Serialize)]
struct VerifyOut {
    alpha: DimVector,
    theta: Stability,
    checks: Vec<CodimCheck>,
    all_hold: bool,
    threshold_met_hold: bool,
}

#[derive(Serialize)]
struct S0Out {
    hn_type: HnType,
    epsilon: u32,
    s0: u64,
}

fn parse_type(text: &str, q: &Quiver) -> Result<HnType, Error> {
    let parts = text
        .split(';')
        .map(|part| {
            let coords = part
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| input(format!("bad coordinate {x:?} in --type")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            q.dim(&coords)
        })
        .collect::<Result<Vec<_>, _>>()?;
    HnType::new(parts)
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |cells: Vec<String>, out: &mut String| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(header.iter().map(|s| s.to_string()).collect(), &mut out);
    for row in rows {
        line(row.clone(), &mut out);
    }
    out
}

fn emit<T: Serialize>(
    ctx: &Context,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<String, Error> {
    if ctx.common.json {
        let mut s =
            serde_json::to_string_pretty(value).map_err(|e| Error::Inconsistent(e.to_string()))?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(text())
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let ctx = load(cli.common)?;
    let q = &ctx.quiver;
    match cli.command {
        Command::Kac => {
            let alpha = ctx.alpha()?;
            let r = kac_report(q, &alpha)?;
            let out = KacOut {
                alpha: alpha.clone(),
                polynomial: PolynomialJson::from_polynomial(&r.polynomial),
                root_class: r.root_class,
                expected_degree: r.expected_degree,
                consistent: r.consistent_with_root_class(),
            };
            emit(&ctx, &out, || {
                format!(
                    "A_{alpha}(q) = {}\nroot class: {}\ndegree: {} (expected {})\nconsistent: {}\n",
                    r.polynomial,
                    r.root_class,
                    opt(r.degree()),
                    opt(r.expected_degree),
                    out.consistent
                )
            })
        }
        Command::HnTypes => {
            let (alpha, theta) = (ctx.alpha()?, ctx.theta()?);
            let hn_types = enumerate_hn_types(q, &alpha, &theta)?;
            let text = hn_types
                .iter()
                .map(|t| format!("{t}\n"))
                .collect::<String>();
            emit(
                &ctx,
                &HnTypesOut {
                    alpha,
                    theta,
                    hn_types,
                },
                || text,
            )
        }
        Command::Strata => {
            let (alpha, theta) = (ctx.alpha()?, ctx.theta()?);
            let r: StrataReport = strata_report(q, &alpha, &theta, &ctx.guards)?;
            emit(&ctx, &r, || {
                let rows: Vec<Vec<String>> = r
                    .rows
                    .iter()
                    .map(|row| {
                        vec![
                            row.hn_type.to_string(),
                            row.epsilon.to_string(),
                            opt(row.threshold),
                            row.codim_rep.to_string(),
                            row.codim_moment.to_string(),
                            row.dim_t.to_string(),
                            row.constant_c.to_string(),
                        ]
                    })
                    .collect();
                format!(
                    "dim Rep = {}, dim μ⁻¹(0) = {} (flatness {:?})\n{}",
                    r.dim_rep,
                    r.dim_mu_zero,
                    r.flatness,
                    table(
                        &[
                            "type",
                            "eps",
                            "threshold",
                            "codim_rep",
                            "codim_moment",
                            "dim_T",
                            "C"
                        ],
                        &rows
                    )
                )
            })
        }
        Command::Decompose => {
            let (alpha, theta) = (ctx.alpha()?, ctx.theta()?);
            let r = stratified_decomposition(q, &alpha, &theta)?;
            let out = DecomposeOut {
                alpha: alpha.clone(),
                theta: theta.clone(),
                kac: PolynomialJson::from_polynomial(&r.kac),
                total: PolynomialJson::from_polynomial(&r.total),
                buckets: r
                    .buckets
                    .iter()
                    .map(|b| BucketOut {
                        key: b.key.clone(),
                        polynomial: PolynomialJson::from_polynomial(&b.polynomial),
                        degree: b.degree(),
                    })
                    .collect(),
                checks: r.checks.clone(),
            };
            emit(&ctx, &out, || {
                let rows: Vec<Vec<String>> = r
                    .buckets
                    .iter()
                    .map(|b| {
                        let check = b.key.hn_type().and_then(|t| r.check_for(t));
                        vec![
                            b.key.to_string(),
                            opt(b.degree()),
                            opt(check.map(|c| c.degree_gap())),
                            opt(check.map(|c| c.codim_moment)),
                            opt(check.map(|c| if c.holds { "pass" } else { "fail" })),
                        ]
                    })
                    .collect();
                format!(
                    "A_{alpha}(q) = {}\n{}",
                    r.kac,
                    table(&["bucket", "l", "l(α)-l", "codim", "equal"], &rows)
                )
            })
        }
        Command::VerifyCodim => {
            let (alpha, theta) = (ctx.alpha()?, ctx.theta()?);
            let checks = stratified_decomposition(q, &alpha, &theta)?.checks;
            let out = VerifyOut {
                alpha,
                theta,
                all_hold: checks.iter().all(|c| c.holds),
                threshold_met_hold: checks.iter().filter(|c| c.threshold_met).all(|c| c.holds),
                checks,
            };
            emit(&ctx, &out, || {
                let rows: Vec<Vec<String>> = out
                    .checks
                    .iter()
                    .map(|c| {
                        vec![
                            c.hn_type.to_string(),
                            c.degree_gap().to_string(),
                            c.codim_moment.to_string(),
                            c.epsilon.to_string(),
                            opt(c.threshold),
                            if c.threshold_met { "yes" } else { "no" }.into(),
                            if c.holds { "pass" } else { "fail" }.into(),
                        ]
                    })
                    .collect();
                table(
                    &[
                        "type",
                        "l(α)-l",
                        "codim",
                        "eps",
                        "threshold",
                        "met",
                        "result",
                    ],
                    &rows,
                )
            })
        }
        Command::VerifyShift { n1, n2 } => {
            let (alpha, theta) = (ctx.alpha()?, ctx.theta()?);
            let r: ShiftReport = verify_bucket_shift(q, &alpha, &theta, n1, n2)?;
            emit(&ctx, &r, || {
                let rows: Vec<Vec<String>> = r
                    .rows
                    .iter()
                    .map(|row| {
                        vec![
                            row.key.to_string(),
                            opt(row.degree_n1),
                            opt(row.degree_n2),
                            if row.shifted_equal { "equal" } else { "differ" }.into(),
                        ]
                    })
                    .collect();
                table(
                    &["bucket", &format!("l@{n1}"), &format!("l@{n2}"), "shifted"],
                    &rows,
                )
            })
        }
        Command::Stabilize { n_from, n_to, k } => {
            let alpha = ctx.alpha()?;
            let r: StabilizationReport = stabilization_study(q, &alpha, n_from, n_to, k)?;
            emit(&ctx, &r, || {
                let rows: Vec<Vec<String>> = r
                    .rows
                    .iter()
                    .map(|row| vec![row.n.to_string(), join(&row.low), join(&row.top)])
                    .collect();
                format!(
                    "{}low stable from n = {}, top stable from n = {}\n",
                    table(&["n", "low", "top"], &rows),
                    r.low_stable_from,
                    r.top_stable_from
                )
            })
        }
        Command::Oracle { q: p } => {
            let alpha = ctx.alpha()?;
            let r: OracleCheck = check_against_engine(q, &alpha, p, &ctx.guards)?;
            emit(&ctx, &r, || {
                format!(
                    "F_{p}: {} reps, {} orbits, {} absolutely indecomposable\nengine A_{alpha}({p}) = {}\n{}\n",
                    r.count.total_reps,
                    r.count.orbit_count,
                    r.count.abs_indec_count,
                    r.engine_eval,
                    if r.pass { "pass" } else { "FAIL" }
                )
            })
        }
        Command::S0 { hn_type } => {
            let t = parse_type(&hn_type, q)?;
            let s0 = s0_commutant_dim(q, &t, &ctx.guards)?;
            let out = S0Out {
                epsilon: t.epsilon(),
                hn_type: t,
                s0,
            };
            emit(&ctx, &out, || {
                format!("s0{} = {s0} (ε = {})\n", out.hn_type, out.epsilon)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.common.out.clone();
    match run(cli).and_then(|text| match &out_path {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hnkac: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
