use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use concord_cli::report::{
    FboundCliReport, H1Report, MoebiusReport, NonsliceReport, ReproduceCliReport, SigReport,
};
use concord_core::branched::{linking_form, moebius_obstruction};
use concord_core::catalog::parse_knot_spec;
use concord_core::matrix::IntMatrix;
use concord_core::obstruct::{
    certify_nonslice_with, f_bound_exhaustive_check, search_seed_knot_with,
};
use concord_core::reproduce::run_reproduce;
use concord_core::root::RootOfUnity;
use concord_core::signature::lt_signature;
use concord_core::surgery::{boundary_presentation, h1_of_presentation, FramedLinkPresentation};
use concord_core::Error;

/// Exit codes: 0 verdict delivered, 1 internal error, 2 invalid or
/// out-of-scope input, 3 reproduce failure, 4 nonslice found nothing.
#[derive(Parser)]
#[command(
    name = "concord",
    version,
    about = "Concordance and sliceness obstructions for winding-number satellites"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the randomized cross-check suites
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Surgery-coefficient range swept in certificate transcripts, as "a:b"
    #[arg(
        long,
        global = true,
        default_value = "-3:3",
        value_parser = parse_lambda_range,
        allow_hyphen_values = true
    )]
    lambda_range: (i64, i64),

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Signature and nullity of a knot at the exact root of unity e^(2 pi i p/d)
    Sig {
        /// Catalog name, "sum:" expression, or JSON matrix rows
        knot: String,
        /// Order of the root of unity (at least 2)
        d: u32,
        /// Exponent, 0 < p < d
        p: u32,
    },
    /// Certify non-sliceness at winding number w, or search for a seed knot
    Nonslice {
        /// Winding number (positive)
        w: u64,
        /// Knot to certify (omit with --search)
        #[arg(required_unless_present = "search", conflicts_with = "search")]
        knot: Option<String>,
        /// Enumerate torus-knot sums instead of certifying a given knot
        #[arg(long)]
        search: bool,
        /// Summand budget for --search
        #[arg(long, default_value_t = 40)]
        max_summands: u64,
    },
    /// Moebius-band obstruction from the linking form of the double branched cover
    Moebius {
        /// Catalog name, "sum:" expression, or JSON matrix rows
        knot: String,
    },
    /// First homology of a surgery presentation, with generator orders
    #[command(allow_negative_numbers = true)]
    H1 {
        /// Winding number of the boundary presentation
        #[arg(required_unless_present = "matrix_file", conflicts_with = "matrix_file")]
        w: Option<i64>,
        /// Framing of the boundary presentation
        #[arg(required_unless_present = "matrix_file", conflicts_with = "matrix_file")]
        f: Option<i64>,
        /// Read a symmetric linking matrix from a JSON file instead
        #[arg(long, value_name = "FILE")]
        matrix_file: Option<PathBuf>,
    },
    /// Exhaustive strict-bound check of the signature correction term on one grid
    #[command(allow_negative_numbers = true)]
    Fbound {
        /// Character level, nonzero
        a: i64,
        /// Framing
        f: i64,
        /// Cover order (at least 2)
        d: u64,
    },
    /// Replay every anchored example and verification suite deterministically
    Reproduce,
}

fn parse_lambda_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected a:b with integers a <= b, got '{s}'"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad lower bound '{a}'"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad upper bound '{b}'"))?;
    if a > b {
        return Err(format!("empty range {a}:{b}"));
    }
    Ok((a, b))
}

struct Outcome {
    text: String,
    code: u8,
}

fn emit<T: Serialize>(json: bool, report: &T, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let version = env!("CARGO_PKG_VERSION").to_string();
    match &cli.command {
        Cmd::Sig { knot, d, p } => {
            let j = parse_knot_spec(knot)?;
            let v = lt_signature(&j, RootOfUnity::new(*d, *p)?)?;
            let report = SigReport {
                version,
                command: "sig".to_string(),
                knot: v.knot,
                at: v.at,
                sigma: v.sigma,
                eta: v.eta,
            };
            Ok(Outcome { text: emit(cli.json, &report, report.to_text()), code: 0 })
        }
        Cmd::Nonslice { w, knot, search, max_summands } => {
            let lambdas = cli.lambda_range.0..=cli.lambda_range.1;
            let (knot_name, searched, certificate) = if *search {
                match search_seed_knot_with(*w, *max_summands, lambdas)? {
                    Some((desc, cert)) => (desc.expression(), Some(desc), Some(cert)),
                    None => {
                        (format!("no seed with at most {max_summands} summands"), None, None)
                    }
                }
            } else {
                let j = parse_knot_spec(knot.as_deref().expect("argument enforced"))?;
                let cert = certify_nonslice_with(*w, &j, lambdas)?;
                (j.name().to_string(), None, cert)
            };
            let code = if certificate.is_some() { 0 } else { 4 };
            let report = NonsliceReport {
                version,
                command: "nonslice".to_string(),
                w: *w,
                knot: knot_name,
                searched,
                certificate,
            };
            Ok(Outcome { text: emit(cli.json, &report, report.to_text()), code })
        }
        Cmd::Moebius { knot } => {
            let j = parse_knot_spec(knot)?;
            let verdict = moebius_obstruction(&j)?;
            let cover = linking_form(&j).ok();
            let report = MoebiusReport {
                version,
                command: "moebius".to_string(),
                knot: j.name().to_string(),
                verdict,
                cover,
            };
            Ok(Outcome { text: emit(cli.json, &report, report.to_text()), code: 0 })
        }
        Cmd::H1 { w, f, matrix_file } => {
            let pres = match (w, f, matrix_file) {
                (Some(w), Some(f), None) => boundary_presentation(*w, *f)?,
                (None, None, Some(path)) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::invalid(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let rows: Vec<Vec<i64>> = serde_json::from_str(&text).map_err(|e| {
                        Error::invalid(format!("bad matrix JSON in {}: {e}", path.display()))
                    })?;
                    let m = IntMatrix::from_rows_i64(&rows)?;
                    let labels = (1..=m.rows()).map(|i| format!("g{i}")).collect();
                    FramedLinkPresentation::new(m, labels)?
                }
                _ => {
                    return Err(Error::invalid(
                        "give either `h1 <w> <f>` or `h1 --matrix-file <FILE>`".to_string(),
                    ))
                }
            };
            let m = pres.matrix();
            let presentation = (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
                .collect();
            let report = H1Report {
                version,
                command: "h1".to_string(),
                presentation,
                group: h1_of_presentation(&pres),
            };
            Ok(Outcome { text: emit(cli.json, &report, report.to_text()), code: 0 })
        }
        Cmd::Fbound { a, f, d } => {
            let report = FboundCliReport {
                version,
                command: "fbound".to_string(),
                a: *a,
                f: *f,
                d: *d,
                report: f_bound_exhaustive_check(*a, *f, *d)?,
            };
            Ok(Outcome { text: emit(cli.json, &report, report.to_text()), code: 0 })
        }
        Cmd::Reproduce => {
            let report = ReproduceCliReport {
                version,
                command: "reproduce".to_string(),
                report: run_reproduce(cli.seed, cli.lambda_range),
            };
            let code = if report.report.passed { 0 } else { 3 };
            Ok(Outcome { text: emit(cli.json, &report, report.to_text()), code })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool configured before first use");
    }
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Internal(_) => 1,
                Error::InvalidInput(_) | Error::Inapplicable(_) => 2,
            };
            ExitCode::from(code)
        }
    }
}
