use std::f64::consts::FRAC_PI_4;
use std::fs;
use std::path::{Path, PathBuf};

use coherence_core::optimize::INV_PHI;
use coherence_core::{
    coherence_at, dephase, loss_curve, maximize_alpha, random_density_matrix,
    rel_ent_coherence_matrix, ridge, sweep, Acceleration, FieldKind, Grid, IncoherentChannel,
    ModeParameters, SeriesOptions, SweepSpec,
};

use crate::config::{
    default_axis, AlphaSpec, Command, OutputFormat, ParamSpec, RunConfig, CAPTION_ALPHAS,
};
use crate::config::{DEFAULT_POINTS, DEFAULT_TRIALS};
use crate::error::CliError;
use crate::output::{write_bytes, Cell, Table};

pub const CURVE_COLUMNS: &[&str] = &["alpha", "param", "coherence", "tail_guarantee"];
pub const LOSS_COLUMNS: &[&str] = &["alpha", "c_at_0", "c_at_limit", "delta"];
pub const SURFACE_COLUMNS: &[&str] = &["series", "alpha", "param", "coherence"];
pub const AXIOM_COLUMNS: &[&str] = &["check", "trials", "violations", "worst_excess"];

/// Slack allowed on every axiom inequality.
const AXIOM_TOL: f64 = 1e-9;

/// What a command produces before it is written anywhere.
#[derive(Debug)]
pub enum Rendered {
    Table(Table),
    Files(Vec<(&'static str, Vec<u8>)>),
}

pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let rendered = render(config)?;
    match rendered {
        Rendered::Table(table) => {
            let bytes = match config.output_format {
                OutputFormat::Csv => table.to_csv()?,
                OutputFormat::Json => table.to_json()?,
            };
            write_bytes(config.output_path.as_deref(), &bytes)?;
            if config.command == Command::Axioms {
                check_axioms(&table)?;
            }
            Ok(())
        }
        Rendered::Files(files) => {
            let dir = config
                .output_path
                .clone()
                .unwrap_or_else(|| PathBuf::from("."));
            fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
            for (name, bytes) in files {
                write_bytes(Some(&dir.join(name)), &bytes)?;
            }
            Ok(())
        }
    }
}

pub fn render(config: &RunConfig) -> Result<Rendered, CliError> {
    config.validate()?;
    let field = config.field();
    let series = SeriesOptions::new(config.series_tol);
    match config.command {
        Command::Point => {
            let alphas = alpha_values(config.alpha.as_ref(), &CAPTION_ALPHAS)?;
            let p = param(config)?.single(field)?;
            let grid = Grid::new(p, p, 1)?;
            Ok(Rendered::Table(curves(
                field,
                alphas,
                grid,
                config.series_tol,
            )?))
        }
        Command::Sweep => {
            let alphas = alpha_values(config.alpha.as_ref(), &CAPTION_ALPHAS)?;
            let grid = param_grid(config.param.as_ref(), field);
            Ok(Rendered::Table(curves(
                field,
                alphas,
                grid,
                config.series_tol,
            )?))
        }
        Command::Maximize => {
            let p = param(config)?.single(field)?;
            let mut table = Table::new(CURVE_COLUMNS, Some(field), config.series_tol);
            let pt = maximize_alpha(field, p, config.tol_x, series)?;
            let tail = tail_at(field, pt.alpha_star, pt.param, series)?;
            table.push_floats(&[pt.alpha_star, pt.param, pt.coherence_max, tail]);
            Ok(Rendered::Table(table))
        }
        Command::Ridge => {
            let grid = param_grid(config.param.as_ref(), field);
            Ok(Rendered::Table(ridge_table(
                field,
                &grid,
                config.tol_x,
                series,
            )?))
        }
        Command::Loss => {
            let alphas = match &config.alpha {
                Some(spec) => spec.values()?,
                None => unit_grid(DEFAULT_POINTS).values(),
            };
            Ok(Rendered::Table(loss_table(&alphas, config.series_tol)?))
        }
        Command::Figures => figures(config.points.unwrap_or(DEFAULT_POINTS), config),
        Command::Axioms => {
            let mut table = axioms(
                config.seed.unwrap_or(0),
                config.trials.unwrap_or(DEFAULT_TRIALS),
            )?;
            table.series_tol = config.series_tol;
            Ok(Rendered::Table(table))
        }
    }
}

fn param(config: &RunConfig) -> Result<&ParamSpec, CliError> {
    config
        .param
        .as_ref()
        .ok_or_else(|| CliError::config("missing parameter"))
}

fn alpha_values(spec: Option<&AlphaSpec>, default: &[f64]) -> Result<Vec<f64>, CliError> {
    match spec {
        Some(s) => s.values(),
        None => Ok(default.to_vec()),
    }
}

fn param_grid(spec: Option<&ParamSpec>, field: FieldKind) -> Grid {
    match spec {
        Some(ParamSpec::Grid(g)) => *g,
        _ => default_axis(field, DEFAULT_POINTS),
    }
}

fn unit_grid(points: usize) -> Grid {
    Grid {
        start: 0.0,
        stop: 1.0,
        count: points,
    }
}

fn tail_at(
    field: FieldKind,
    alpha: f64,
    param: f64,
    series: SeriesOptions,
) -> Result<f64, CliError> {
    let rep = coherence_at(
        ModeParameters::new(alpha)?,
        Acceleration::new(field, param),
        series,
    )?;
    Ok(rep.tail_guarantee)
}

fn curves(
    field: FieldKind,
    alphas: Vec<f64>,
    grid: Grid,
    series_tol: f64,
) -> Result<Table, CliError> {
    let spec = SweepSpec {
        field_kind: field,
        alpha_values: alphas,
        param_grid: grid,
        series_tol,
    };
    let mut table = Table::new(CURVE_COLUMNS, Some(field), series_tol);
    for p in sweep(&spec)? {
        table.push_floats(&[p.alpha, p.param, p.coherence, p.tail_guarantee]);
    }
    Ok(table)
}

fn ridge_table(
    field: FieldKind,
    grid: &Grid,
    tol_x: f64,
    series: SeriesOptions,
) -> Result<Table, CliError> {
    let mut table = Table::new(CURVE_COLUMNS, Some(field), series.tol);
    for pt in ridge(field, grid, tol_x, series)? {
        let tail = tail_at(field, pt.alpha_star, pt.param, series)?;
        table.push_floats(&[pt.alpha_star, pt.param, pt.coherence_max, tail]);
    }
    Ok(table)
}

fn loss_table(alphas: &[f64], series_tol: f64) -> Result<Table, CliError> {
    let mut table = Table::new(LOSS_COLUMNS, Some(FieldKind::Dirac), series_tol);
    for p in loss_curve(alphas)? {
        table.push_floats(&[p.alpha, p.c_at_0, p.c_at_limit, p.delta]);
    }
    Ok(table)
}

fn figures(points: usize, config: &RunConfig) -> Result<Rendered, CliError> {
    let tol = config.series_tol;
    let fig2 = curves(
        FieldKind::Scalar,
        CAPTION_ALPHAS.to_vec(),
        default_axis(FieldKind::Scalar, points),
        tol,
    )?;
    let fig3 = curves(
        FieldKind::Dirac,
        CAPTION_ALPHAS.to_vec(),
        default_axis(FieldKind::Dirac, points),
        tol,
    )?;
    let fig4 = loss_table(&unit_grid(points).values(), tol)?;

    // Dirac surface over [0, 1] x [0, pi/4], the last column at the limit,
    // followed by the maximizing amplitude at each theta.
    let theta = Grid {
        start: 0.0,
        stop: FRAC_PI_4,
        count: points,
    };
    let mut fig5 = Table::new(SURFACE_COLUMNS, Some(FieldKind::Dirac), tol);
    let series = SeriesOptions::new(tol);
    for alpha in unit_grid(points).values() {
        let mode = ModeParameters::new(alpha)?;
        for t in theta.values() {
            let c = coherence_at(mode, Acceleration::new(FieldKind::Dirac, t), series)?.value;
            fig5.rows.push(vec![
                Cell::Text("surface"),
                Cell::Float(alpha),
                Cell::Float(t),
                Cell::Float(c),
            ]);
        }
    }
    for pt in ridge(FieldKind::Dirac, &theta, config.tol_x, series)? {
        fig5.rows.push(vec![
            Cell::Text("ridge"),
            Cell::Float(pt.alpha_star),
            Cell::Float(pt.param),
            Cell::Float(pt.coherence_max),
        ]);
    }

    Ok(Rendered::Files(vec![
        ("fig2.csv", fig2.to_csv()?),
        ("fig3.csv", fig3.to_csv()?),
        ("fig4.csv", fig4.to_csv()?),
        ("fig5.csv", fig5.to_csv()?),
    ]))
}

/// Seeded checks of faithfulness, monotonicity under incoherent channels and
/// convexity on random density matrices of dimension 2 to 4.
fn axioms(seed: u64, trials: usize) -> Result<Table, CliError> {
    let names = ["faithfulness", "dephasing", "permutation", "convexity"];
    let mut violations = [0u64; 4];
    let mut worst = [f64::NEG_INFINITY; 4];
    let mut record = |k: usize, excess: f64| {
        worst[k] = worst[k].max(excess);
        if excess > AXIOM_TOL {
            violations[k] += 1;
        }
    };
    for i in 0..trials as u64 {
        let dim = 2 + (i % 3) as usize;
        let s = seed.wrapping_add(2 * i);
        let rho = random_density_matrix(dim, s)?;
        let c = rel_ent_coherence_matrix(&rho)?.value;

        // A dephased state carries no coherence; a generic one does.
        let c_diag = rel_ent_coherence_matrix(&dephase(&rho))?.value;
        record(
            0,
            c_diag
                .abs()
                .max(if c > AXIOM_TOL { 0.0 } else { f64::INFINITY }),
        );

        let out = IncoherentChannel::dephasing(dim).apply(&rho)?;
        record(1, rel_ent_coherence_matrix(&out)?.value - c);

        let perm: Vec<usize> = (0..dim)
            .map(|j| (j + 1 + (i as usize % dim)) % dim)
            .collect();
        let out = IncoherentChannel::permutation(&perm)?.apply(&rho)?;
        record(2, rel_ent_coherence_matrix(&out)?.value - c);

        let other = random_density_matrix(dim, s.wrapping_add(1))?;
        let p = ((i as f64 + 0.5) * INV_PHI).fract();
        let mixed = rel_ent_coherence_matrix(&rho.mix(&other, p)?)?.value;
        let bound = p * c + (1.0 - p) * rel_ent_coherence_matrix(&other)?.value;
        record(3, mixed - bound);
    }
    let mut table = Table::new(AXIOM_COLUMNS, None, 0.0);
    for k in 0..4 {
        table.rows.push(vec![
            Cell::Text(names[k]),
            Cell::Int(trials as u64),
            Cell::Int(violations[k]),
            Cell::Float(worst[k]),
        ]);
    }
    Ok(table)
}

fn check_axioms(table: &Table) -> Result<(), CliError> {
    for row in &table.rows {
        if let (Cell::Text(name), Cell::Int(v)) = (&row[0], &row[2]) {
            if *v > 0 {
                return Err(CliError::Check(format!("{name}: {v} violations")));
            }
        }
    }
    Ok(())
}

/// Reads a JSON run configuration from disk.
pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    RunConfig::from_json(&text)
}
