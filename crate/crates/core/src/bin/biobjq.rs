//! Command-line interface: generates benchmark instances, emits reference
//! fronts as plot-ready CSV, verifies the analytic-front properties and
//! computes 2-D hypervolumes.
//!
//! Exit codes: 0 on success (and all properties passing for `verify`),
//! 1 on domain or validation failures, 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use biobj_quad::oracle::{front_samples, GridKind, NormalizationMode};
use biobj_quad::quadratic::is_proportional;
use biobj_quad::suite::{
    make_instance, make_p10, InstanceDescriptor, ProblemClass, SpectrumChoice,
};
use biobj_quad::verify::{hypervolume_2d, run_report, ReportConfig};
use biobj_quad::{closed_form_front, Error};

#[derive(Parser)]
#[command(
    name = "biobjq",
    version,
    about = "Bi-objective convex-quadratic benchmark problems with exact front oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a benchmark instance and write it to a JSON file.
    Generate(GenerateArgs),
    /// Sample the exact Pareto front of an instance into a CSV file.
    Front(FrontArgs),
    /// Verify the analytic-front properties of an instance.
    Verify(VerifyArgs),
    /// Compute the 2-D hypervolume of a front CSV against a reference point.
    Hv(HvArgs),
    /// Write the fixed 10-dimensional power-law instance.
    P10(P10Args),
}

#[derive(Args)]
struct GenerateArgs {
    /// Problem class: sep-k, sep-o, sep-two-o, one, one-o, two, two-o.
    #[arg(long)]
    class: String,
    /// 1-based axis index, required for class sep-k.
    #[arg(long)]
    k: Option<usize>,
    /// Search-space dimension.
    #[arg(long)]
    n: usize,
    /// Spectrum: sphere, cigtab, ellipsoid, or comma-separated entries.
    #[arg(long)]
    spectrum: String,
    /// Seed for the matrix substreams.
    #[arg(long)]
    seed: u64,
    /// Scale normalization: fig2, kappa-unit, none.
    #[arg(long, default_value = "fig2")]
    normalization: String,
    /// Output path for the instance file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct FrontArgs {
    /// Instance file written by `generate` or `p10`.
    #[arg(long)]
    instance: PathBuf,
    /// Number of front samples (at least 2).
    #[arg(long, short = 'm', default_value_t = 1001)]
    samples: usize,
    /// Sample spacing: uniform or chebyshev.
    #[arg(long, default_value = "uniform")]
    grid: String,
    /// Output path for the CSV file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file to verify.
    #[arg(long)]
    instance: PathBuf,
    /// Number of front samples used by the checks.
    #[arg(long, default_value_t = 1001)]
    samples: usize,
    /// Sample spacing: uniform or chebyshev.
    #[arg(long, default_value = "uniform")]
    grid: String,
    /// Points per axis of the n = 2 brute-force cross-check.
    #[arg(long, default_value_t = 401)]
    bf_points: usize,
    /// Optional path for the JSON report.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HvArgs {
    /// Front CSV written by `front`.
    #[arg(long)]
    front: PathBuf,
    /// Reference point as "f1,f2".
    #[arg(long)]
    reference: String,
}

#[derive(Args)]
struct P10Args {
    /// Scale normalization: fig2, kappa-unit, none.
    #[arg(long, default_value = "none")]
    normalization: String,
    /// Output path for the instance file.
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Front(args) => cmd_front(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Hv(args) => cmd_hv(args),
        Command::P10(args) => cmd_p10(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn write_instance(descriptor: &InstanceDescriptor, out: &PathBuf) -> Result<(), Error> {
    descriptor.to_file(out)?;
    println!("{}", out.display());
    println!(
        "class={} n={} cond(spectrum)={:.6e}",
        descriptor.class.name(),
        descriptor.n,
        descriptor.spectrum_condition_number()
    );
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, Error> {
    let class = ProblemClass::parse(&args.class, args.k)?;
    let spectrum = SpectrumChoice::parse(&args.spectrum)?;
    let normalization: NormalizationMode = args.normalization.parse()?;
    let descriptor = make_instance(class, args.n, &spectrum, args.seed, normalization)?;
    write_instance(&descriptor, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_p10(args: P10Args) -> Result<ExitCode, Error> {
    let normalization: NormalizationMode = args.normalization.parse()?;
    let descriptor = make_p10(normalization)?;
    write_instance(&descriptor, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

/// 17 significant digits: enough to reproduce any f64 bit-exactly on read.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn cmd_front(args: FrontArgs) -> Result<ExitCode, Error> {
    let descriptor = InstanceDescriptor::from_file(&args.instance)?;
    let problem = descriptor.problem()?;
    let grid: GridKind = args.grid.parse()?;
    let samples = front_samples(&problem, args.samples, grid)?;

    let mut out = std::io::BufWriter::new(std::fs::File::create(&args.out)?);
    if is_proportional(&problem).is_some() {
        let cf = closed_form_front(&problem)?;
        writeln!(
            out,
            "# closed_form kappa_alpha={} kappa_beta={}",
            fmt17(cf.kappa_alpha),
            fmt17(cf.kappa_beta)
        )?;
    }
    let n = problem.dimension();
    let mut header = String::from("t");
    for i in 1..=n {
        header.push_str(&format!(",x_{i}"));
    }
    header.push_str(",f1,f2,du,dv");
    writeln!(out, "{header}")?;
    for s in &samples {
        let mut row = fmt17(s.t);
        for xi in &s.x {
            row.push(',');
            row.push_str(&fmt17(*xi));
        }
        for v in [s.f1, s.f2, s.du, s.dv] {
            row.push(',');
            row.push_str(&fmt17(v));
        }
        writeln!(out, "{row}")?;
    }
    out.flush()?;
    println!("{}", args.out.display());
    println!("samples={} grid={}", samples.len(), args.grid);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let descriptor = InstanceDescriptor::from_file(&args.instance)?;
    let config = ReportConfig {
        samples: args.samples,
        grid: args.grid.parse()?,
        brute_force_points: args.bf_points,
    };
    let report = run_report(&descriptor, &config)?;
    print!("{report}");
    if let Some(path) = &args.out {
        std::fs::write(path, report.to_json() + "\n")?;
    }
    if report.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn parse_reference(text: &str) -> Result<(f64, f64), Error> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::UnknownName {
            what: "reference point",
            got: text.to_string(),
            expected: "two comma-separated reals, e.g. 1.0,1.0",
        });
    }
    let r1 = parts[0]
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::UnknownName {
            what: "reference coordinate",
            got: parts[0].to_string(),
            expected: "a real number",
        })?;
    let r2 = parts[1]
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::UnknownName {
            what: "reference coordinate",
            got: parts[1].to_string(),
            expected: "a real number",
        })?;
    Ok((r1, r2))
}

fn read_front_csv(path: &PathBuf) -> Result<Vec<(f64, f64)>, Error> {
    let text = std::fs::read_to_string(path)?;
    let mut header: Option<(usize, usize)> = None;
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        match header {
            None => {
                let f1 = fields.iter().position(|&f| f == "f1");
                let f2 = fields.iter().position(|&f| f == "f2");
                match (f1, f2) {
                    (Some(a), Some(b)) => header = Some((a, b)),
                    _ => {
                        return Err(Error::MalformedCsv {
                            line: lineno + 1,
                            message: "header must name f1 and f2 columns".into(),
                        })
                    }
                }
            }
            Some((c1, c2)) => {
                if fields.len() <= c1.max(c2) {
                    return Err(Error::MalformedCsv {
                        line: lineno + 1,
                        message: format!("expected at least {} columns", c1.max(c2) + 1),
                    });
                }
                let parse = |idx: usize| {
                    fields[idx]
                        .trim()
                        .parse::<f64>()
                        .map_err(|e| Error::MalformedCsv {
                            line: lineno + 1,
                            message: format!("column {}: {e}", idx + 1),
                        })
                };
                points.push((parse(c1)?, parse(c2)?));
            }
        }
    }
    Ok(points)
}

fn cmd_hv(args: HvArgs) -> Result<ExitCode, Error> {
    let reference = parse_reference(&args.reference)?;
    let points = read_front_csv(&args.front)?;
    let hv = hypervolume_2d(&points, reference);
    // 12 significant digits.
    println!("{hv:.11e}");
    Ok(ExitCode::SUCCESS)
}
