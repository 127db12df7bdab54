use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use saturn::bench::{sos_instance, SosMode, SosParams};
use saturn::f4sat::f4sat;
use saturn::fglm::{spfglm_col, FglmConfig, VerifyMode};
use saturn::io::{format_polynomial, parse_problem, Problem};
use saturn::{f4, Error, MonomialOrder, Polynomial, Ring};

#[derive(Parser)]
#[command(name = "saturn", version, about = "Saturations and colon ideals over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis of the input polynomials.
    Gb {
        #[arg(long, value_enum, default_value_t = OrderArg::Drl)]
        order: OrderArg,
        /// Problem file; standard input when omitted or `-`.
        file: Option<PathBuf>,
    },
    /// Reduced DRL basis of the saturation `I : φ^∞`.
    Sat {
        /// Defaults to the file's `#phi` line.
        #[arg(long)]
        phi: Option<String>,
        file: Option<PathBuf>,
    },
    /// LEX basis of the zero-dimensional colon ideal `I : φ`.
    ColonLex {
        #[arg(long)]
        phi: Option<String>,
        /// Check the result through random shifts instead of normal forms.
        #[arg(long)]
        fast_verify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Give up on a colon ideal whose support grows past this size.
        #[arg(long, default_value_t = 100_000)]
        max_sigma: usize,
        file: Option<PathBuf>,
    },
    /// Writes a benchmark problem file.
    BenchGen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
        #[arg(long = "p-count")]
        p_count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1073741827)]
        prime: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Drl,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sos,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Pos,
    Zero,
}

fn read_input(file: &Option<PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Contract(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Contract(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn load(file: &Option<PathBuf>, order: MonomialOrder) -> Result<Problem, Error> {
    parse_problem(&read_input(file)?, order)
}

fn phi_of(problem: &Problem, phi: &Option<String>) -> Result<Polynomial, Error> {
    match phi.as_deref().or(problem.phi.as_deref()) {
        Some(text) => problem.parse_polynomial(text),
        None => Err(Error::Contract("no --phi given and no #phi line in the input".into())),
    }
}

fn render(ring: &Ring, names: &[String], polys: &[Polynomial]) -> String {
    if polys.is_empty() {
        return "0\n".to_string();
    }
    polys
        .iter()
        .map(|p| format_polynomial(ring, names, p) + "\n")
        .collect()
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Gb { order, file } => {
            let order = match order {
                OrderArg::Drl => MonomialOrder::Drl,
                OrderArg::Lex => MonomialOrder::Lex,
            };
            let p = load(&file, order)?;
            let g = f4(&p.ring, &p.polynomials);
            Ok(render(&p.ring, &p.names, g.generators()))
        }
        Command::Sat { phi, file } => {
            let p = load(&file, MonomialOrder::Drl)?;
            let phi = phi_of(&p, &phi)?;
            let g = f4sat(&p.ring, &p.polynomials, &phi);
            Ok(render(&p.ring, &p.names, g.generators()))
        }
        Command::ColonLex {
            phi,
            fast_verify,
            seed,
            max_sigma,
            file,
        } => {
            let p = load(&file, MonomialOrder::Drl)?;
            let phi = phi_of(&p, &phi)?;
            let g = f4(&p.ring, &p.polynomials);
            let cfg = FglmConfig {
                seed,
                max_sigma,
                verify: if fast_verify { VerifyMode::LambdaShift } else { VerifyMode::Exact },
                ..FglmConfig::default()
            };
            let shape = spfglm_col(&g, &phi, &cfg)?;
            Ok(render(shape.ring(), &p.names, &shape.to_polynomials()))
        }
        Command::BenchGen {
            family: Family::Sos,
            d,
            n,
            p_count,
            seed,
            mode,
            prime,
        } => {
            let params = SosParams {
                degree: d,
                nvars: n,
                squares: p_count,
                seed,
                mode: match mode {
                    ModeArg::Pos => SosMode::Pos,
                    ModeArg::Zero => SosMode::Zero,
                },
                prime,
            };
            Ok(sos_instance(&params)?.to_problem_text())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Error::Diagnostic(d)) => {
            eprintln!("{d}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
