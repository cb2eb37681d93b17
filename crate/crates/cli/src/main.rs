use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coherence_cli::{
    load_config, run, AlphaSpec, CliError, Command, Keyword, OutputFormat, ParamSpec, PhysicalSpec,
    RunConfig,
};
use coherence_core::{FieldKind, Grid};

#[derive(Parser, Debug)]
#[command(
    name = "coherence",
    version,
    about = "Relative entropy of coherence for accelerated two-mode states"
)]
struct Cli {
    /// Read the whole run configuration from a JSON file instead of flags.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Coherence at one acceleration parameter.
    Point {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        param: ParamArgs,
    },
    /// Coherence curves over a parameter grid.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Amplitude maximizing coherence at one acceleration parameter.
    Maximize {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        param: ParamArgs,
        #[arg(long)]
        tol_x: Option<f64>,
    },
    /// Maximizing amplitude across a parameter grid.
    Ridge {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        tol_x: Option<f64>,
    },
    /// Dirac coherence at rest, at the infinite-acceleration limit, and the loss.
    Loss {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        alpha: AlphaArgs,
    },
    /// Writes fig2.csv through fig5.csv into a directory.
    Figures {
        #[arg(long, value_name = "DIR", default_value = ".")]
        out_dir: PathBuf,
        /// Samples per axis.
        #[arg(long)]
        points: Option<usize>,
        #[arg(long)]
        series_tol: Option<f64>,
    },
    /// Seeded checks of the coherence-measure axioms on random states.
    Axioms {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value = "csv")]
        format: OutputFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// scalar or dirac.
    #[arg(long)]
    field: Option<FieldKind>,
    #[arg(long)]
    series_tol: Option<f64>,
    /// csv or json.
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AlphaArgs {
    /// Amplitude(s), comma separated.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    alpha: Vec<f64>,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Scalar acceleration parameter.
    #[arg(long, conflicts_with_all = ["theta", "param", "theta_limit", "acceleration"])]
    r: Option<f64>,
    /// Dirac acceleration parameter in [0, pi/4].
    #[arg(long, conflicts_with_all = ["param", "theta_limit", "acceleration"])]
    theta: Option<f64>,
    /// `r` or `theta`, depending on the field.
    #[arg(long, conflicts_with_all = ["theta_limit", "acceleration"])]
    param: Option<f64>,
    /// Infinite acceleration (Dirac only).
    #[arg(long, conflicts_with = "acceleration")]
    theta_limit: bool,
    /// Physical acceleration; natural units unless overridden.
    #[arg(long)]
    acceleration: Option<f64>,
    #[arg(long, requires = "acceleration")]
    wave_number: Option<f64>,
    #[arg(long, requires = "acceleration")]
    omega: Option<f64>,
    #[arg(long, requires = "acceleration")]
    light_speed: Option<f64>,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[arg(long, requires_all = ["stop", "count"])]
    start: Option<f64>,
    #[arg(long, requires_all = ["start", "count"])]
    stop: Option<f64>,
    #[arg(long, requires_all = ["start", "stop"])]
    count: Option<usize>,
}

impl ParamArgs {
    /// The parameter and the field it implies, if any.
    fn resolve(&self) -> (Option<ParamSpec>, Option<FieldKind>) {
        if let Some(r) = self.r {
            (Some(ParamSpec::Value(r)), Some(FieldKind::Scalar))
        } else if let Some(t) = self.theta {
            (Some(ParamSpec::Value(t)), Some(FieldKind::Dirac))
        } else if self.theta_limit {
            (
                Some(ParamSpec::Keyword(Keyword::Limit)),
                Some(FieldKind::Dirac),
            )
        } else if let Some(a) = self.acceleration {
            let spec = PhysicalSpec {
                acceleration: a,
                wave_number: self.wave_number,
                frequency: self.omega,
                light_speed: self.light_speed,
            };
            (Some(ParamSpec::Physical(spec)), None)
        } else {
            (self.param.map(ParamSpec::Value), None)
        }
    }
}

impl GridArgs {
    fn spec(&self) -> Option<ParamSpec> {
        match (self.start, self.stop, self.count) {
            (Some(start), Some(stop), Some(count)) => {
                Some(ParamSpec::Grid(Grid { start, stop, count }))
            }
            _ => None,
        }
    }
}

fn alpha_spec(a: AlphaArgs) -> Option<AlphaSpec> {
    match a.alpha.len() {
        0 => None,
        1 => Some(AlphaSpec::One(a.alpha[0])),
        _ => Some(AlphaSpec::List(a.alpha)),
    }
}

fn apply_common(cfg: &mut RunConfig, c: Common) {
    cfg.field_kind = c.field;
    if let Some(t) = c.series_tol {
        cfg.series_tol = t;
    }
    cfg.output_format = c.format;
    cfg.output_path = c.output;
}

fn apply_param(cfg: &mut RunConfig, p: ParamArgs) -> Result<(), CliError> {
    let (spec, implied) = p.resolve();
    if let (Some(given), Some(implied)) = (cfg.field_kind, implied) {
        if given != implied {
            return Err(CliError::config(format!(
                "parameter flag implies a {implied} field but --field is {given}"
            )));
        }
    }
    cfg.field_kind = cfg.field_kind.or(implied);
    cfg.param = spec;
    Ok(())
}

fn build(cmd: Cmd) -> Result<RunConfig, CliError> {
    let cfg = match cmd {
        Cmd::Point {
            common,
            alpha,
            param,
        } => {
            let mut cfg = RunConfig::new(Command::Point);
            apply_common(&mut cfg, common);
            cfg.alpha = alpha_spec(alpha);
            apply_param(&mut cfg, param)?;
            cfg
        }
        Cmd::Sweep {
            common,
            alpha,
            grid,
        } => {
            let mut cfg = RunConfig::new(Command::Sweep);
            apply_common(&mut cfg, common);
            cfg.alpha = alpha_spec(alpha);
            cfg.param = grid.spec();
            cfg
        }
        Cmd::Maximize {
            common,
            param,
            tol_x,
        } => {
            let mut cfg = RunConfig::new(Command::Maximize);
            apply_common(&mut cfg, common);
            apply_param(&mut cfg, param)?;
            cfg.tol_x = tol_x.unwrap_or(cfg.tol_x);
            cfg
        }
        Cmd::Ridge {
            common,
            grid,
            tol_x,
        } => {
            let mut cfg = RunConfig::new(Command::Ridge);
            apply_common(&mut cfg, common);
            cfg.param = grid.spec();
            cfg.tol_x = tol_x.unwrap_or(cfg.tol_x);
            cfg
        }
        Cmd::Loss { common, alpha } => {
            let mut cfg = RunConfig::new(Command::Loss);
            apply_common(&mut cfg, common);
            cfg.alpha = alpha_spec(alpha);
            cfg
        }
        Cmd::Figures {
            out_dir,
            points,
            series_tol,
        } => {
            let mut cfg = RunConfig::new(Command::Figures);
            cfg.output_path = Some(out_dir);
            cfg.points = points;
            cfg.series_tol = series_tol.unwrap_or(cfg.series_tol);
            cfg
        }
        Cmd::Axioms {
            seed,
            trials,
            format,
            output,
        } => {
            let mut cfg = RunConfig::new(Command::Axioms);
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.output_format = format;
            cfg.output_path = output;
            cfg
        }
    };
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match (cli.config, cli.command) {
        (Some(path), None) => load_config(&path).and_then(|cfg| run(&cfg)),
        (None, Some(cmd)) => build(cmd).and_then(|cfg| run(&cfg)),
        (Some(_), Some(_)) => Err(CliError::config(
            "--config cannot be combined with a subcommand",
        )),
        (None, None) => Err(CliError::config(
            "expected a subcommand or --config (see --help)",
        )),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
