use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use vacuumpair::{derive_scales, Particle, PhysicalConstants, ReducedField, SpacetimeVolume, Spin};
use vacuumpair_cli::curve::{curve, CurveSpec, Observable, Preset, Scale};
use vacuumpair_cli::output::{render, Format};
use vacuumpair_cli::{critical_record, eval_record, selftest};

const EXIT_SELFTEST_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Pair creation from the vacuum in a static uniform electric field.
#[derive(Debug, Parser)]
#[command(name = "vacuumpair", version)]
struct Cli {
    /// Constant overrides, one `key = value` per line
    /// (hbar, c, e_charge, alpha, electron_mass; Gaussian-CGS).
    #[arg(long, global = true, env = "VACUUMPAIR_CONFIG")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every observable at one field strength.
    Eval(EvalArgs),
    /// Sample one observable along a grid of reduced fields.
    Curve(CurveArgs),
    /// Reduced field at which the leading-order probability reaches 1.
    Critical(CriticalArgs),
    /// Verify exact values and functional identities.
    Selftest,
}

#[derive(Debug, Args)]
struct SpeciesArgs {
    /// electron, muon or pion.
    #[arg(long, default_value = "electron")]
    particle: String,
    /// Space-time volume ΔV·ΔT in cm³·s.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    vt: f64,
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Reduced field E/E_cr.
    #[arg(
        long,
        required_unless_present = "field_vpercm",
        conflicts_with = "field_vpercm",
        allow_negative_numbers = true
    )]
    beta: Option<f64>,
    /// Field strength in V/cm.
    #[arg(long, allow_negative_numbers = true)]
    field_vpercm: Option<f64>,
    /// 0 or 1/2; defaults to the particle's spin.
    #[arg(long)]
    spin: Option<Spin>,
    #[command(flatten)]
    species: SpeciesArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct CurveArgs {
    /// Start from a stored axis range; other flags override its fields.
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    #[arg(long, value_enum)]
    observable: Option<Observable>,
    #[arg(long, allow_negative_numbers = true)]
    beta_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta_max: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, value_enum)]
    scale: Option<Scale>,
    #[arg(long)]
    spin: Option<Spin>,
    /// electron, muon or pion.
    #[arg(long, default_value = "electron")]
    particle: String,
    /// Space-time volume ΔV·ΔT in cm³·s.
    #[arg(long, allow_negative_numbers = true)]
    vt: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct CriticalArgs {
    #[command(flatten)]
    species: SpeciesArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn load_constants(path: Option<&PathBuf>) -> Result<PhysicalConstants, String> {
    match path {
        Some(p) => PhysicalConstants::from_config_file(p).map_err(|e| e.to_string()),
        None => Ok(PhysicalConstants::CODATA_2018),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let k = load_constants(cli.config.as_ref())?;
    let species = |name: &str| Particle::preset(name, &k).map_err(|e| e.to_string());
    match cli.command {
        Command::Eval(args) => {
            let particle = species(&args.species.particle)?;
            let scales = derive_scales(&particle, &k);
            let spin = args.spin.unwrap_or(particle.spin);
            let field = match (args.beta, args.field_vpercm) {
                (Some(b), _) => ReducedField::new(b),
                (None, Some(e)) => ReducedField::from_field(e, &scales),
                (None, None) => unreachable!("clap requires one of the two"),
            }
            .map_err(|e| e.to_string())?;
            let v = SpacetimeVolume::new(args.species.vt).map_err(|e| e.to_string())?;
            let record = eval_record(&particle, spin, &scales, field, v);
            print!("{}", render(&[record], args.format));
        }
        Command::Curve(args) => {
            let particle = species(&args.particle)?;
            let scales = derive_scales(&particle, &k);
            let mut spec = match args.preset {
                Some(p) => CurveSpec::preset(p),
                None => CurveSpec {
                    observable: args
                        .observable
                        .ok_or("--observable is required without --preset")?,
                    beta_min: args
                        .beta_min
                        .ok_or("--beta-min is required without --preset")?,
                    beta_max: args
                        .beta_max
                        .ok_or("--beta-max is required without --preset")?,
                    points: args.points.unwrap_or(101),
                    scale: Scale::Linear,
                    spin: particle.spin,
                    vt: 1.0,
                },
            };
            if let Some(o) = args.observable {
                spec.observable = o;
            }
            if let Some(b) = args.beta_min {
                spec.beta_min = b;
            }
            if let Some(b) = args.beta_max {
                spec.beta_max = b;
            }
            if let Some(n) = args.points {
                spec.points = n;
            }
            if let Some(s) = args.scale {
                spec.scale = s;
            }
            if let Some(s) = args.spin {
                spec.spin = s;
            }
            if let Some(v) = args.vt {
                spec.vt = v;
            }
            let records = curve(&spec, &scales)?;
            print!("{}", render(&records, args.format));
        }
        Command::Critical(args) => {
            let particle = species(&args.species.particle)?;
            let scales = derive_scales(&particle, &k);
            let v = SpacetimeVolume::new(args.species.vt).map_err(|e| e.to_string())?;
            let record = critical_record(&particle, &scales, v).map_err(|e| e.to_string())?;
            print!("{}", render(&[record], args.format));
        }
        Command::Selftest => {
            let report = selftest::run(&k);
            print!("{}", report.render());
            if !report.all_passed() {
                return Ok(ExitCode::from(EXIT_SELFTEST_FAILED));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("{first}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    run(cli).unwrap_or_else(usage_error)
}
