use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use procsim_cli::{load_definition, validate_path, RunOptions};
use procsim_core::{Acceleration, DesignPressureRule, VesselSpec};

/// Steady-state flowsheet simulation and plant economics from a single
/// plant-definition file.
#[derive(Parser)]
#[command(name = "procsim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the flowsheet, evaluate vessels and economics, write reports.
    Run(RunArgs),
    /// Check a plant definition and list every problem found.
    Validate {
        /// Plant-definition JSON file
        definition: PathBuf,
    },
    /// One-off pressure-vessel design from command-line inputs.
    Vessel(VesselArgs),
    /// Economics-only evaluation; prints the report to stdout.
    Economics {
        /// Plant-definition JSON file
        definition: PathBuf,
        /// Exchange rate override, INR per USD
        #[arg(long)]
        fx: Option<f64>,
        /// Also write artifacts (cashflow.csv, economics.txt, summary.json)
        #[arg(long)]
        report_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Plant-definition JSON file
    definition: PathBuf,
    /// Directory receiving streams.csv, economics.txt and friends
    #[arg(long, default_value = "reports")]
    report_dir: PathBuf,
    /// Tear-flow convergence tolerance, kmol/h
    #[arg(long)]
    tol: Option<f64>,
    /// Iteration cap for the tear loop
    #[arg(long)]
    max_iter: Option<usize>,
    /// Fixed-point update scheme
    #[arg(long, value_enum)]
    accel: Option<AccelArg>,
    /// Exchange rate override, INR per USD
    #[arg(long)]
    fx: Option<f64>,
    /// Skip the flowsheet solve (economics and vessels only)
    #[arg(long)]
    skip_flowsheet: bool,
    /// Skip the economics evaluation
    #[arg(long)]
    skip_economics: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum AccelArg {
    Direct,
    Wegstein,
}

#[derive(Args)]
struct VesselArgs {
    /// Internal diameter, m
    #[arg(long)]
    d_inner: f64,
    /// Tangent-to-tangent height, m
    #[arg(long)]
    height: f64,
    /// Absolute design pressure, bar (overrides --gauge-pressure)
    #[arg(long)]
    design_pressure: Option<f64>,
    /// Gauge pressure, bar; converted by --rule
    #[arg(long)]
    gauge_pressure: Option<f64>,
    /// Conversion from gauge to design pressure
    #[arg(long, value_enum, default_value = "gauge-plus-ambient")]
    rule: RuleArg,
    /// Allowable design stress, bar
    #[arg(long, default_value_t = 344.7)]
    design_stress: f64,
    /// Welded-joint efficiency
    #[arg(long, default_value_t = 1.0)]
    joint_efficiency: f64,
    /// Shell material density, kg/m3
    #[arg(long, default_value_t = 7800.0)]
    rho: f64,
    /// Weight factor for manholes and supports
    #[arg(long, default_value_t = 1.08)]
    c_v: f64,
    /// Gravitational acceleration, m/s2
    #[arg(long, default_value_t = 9.81)]
    g: f64,
    /// Label used in the report heading
    #[arg(long, default_value = "vessel")]
    id: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    GaugePlusAmbient,
    TenPercent,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run(args) => run_command(args),
        Command::Validate { definition } => validate_command(&definition),
        Command::Vessel(args) => vessel_command(args),
        Command::Economics {
            definition,
            fx,
            report_dir,
        } => economics_command(&definition, fx, report_dir),
    }
}

fn run_command(args: RunArgs) -> ExitCode {
    let def = match load_definition(&args.definition) {
        Ok(def) => def,
        Err(diag) => {
            eprintln!("{diag}");
            return ExitCode::from(1);
        }
    };
    let options = RunOptions {
        report_dir: args.report_dir,
        tolerance: args.tol,
        max_iterations: args.max_iter,
        acceleration: args.accel.map(|a| match a {
            AccelArg::Direct => Acceleration::Direct,
            AccelArg::Wegstein => Acceleration::Wegstein,
        }),
        fx_override: args.fx,
        skip_flowsheet: args.skip_flowsheet,
        skip_economics: args.skip_economics,
    };
    match procsim_cli::run(&def, &options) {
        Ok(summary) => {
            for path in &summary.artifacts {
                println!("wrote {}", path.display());
            }
            match summary.converged {
                Some(true) => println!(
                    "converged in {} iteration(s)",
                    summary.iterations.unwrap_or_default()
                ),
                Some(false) => eprintln!(
                    "did not converge within {} iteration(s)",
                    summary.iterations.unwrap_or_default()
                ),
                None => {}
            }
            ExitCode::from(summary.exit_code() as u8)
        }
        Err(procsim_cli::RunError::Invalid(text)) => {
            eprintln!("definition is invalid:\n{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}

fn validate_command(definition: &Path) -> ExitCode {
    let diagnostics = validate_path(definition);
    if diagnostics.is_empty() {
        println!("{}: OK", definition.display());
        ExitCode::SUCCESS
    } else {
        for d in &diagnostics {
            eprintln!("{d}");
        }
        eprintln!("{} problem(s) found", diagnostics.len());
        ExitCode::from(1)
    }
}

fn vessel_command(args: VesselArgs) -> ExitCode {
    let p_design = match (args.design_pressure, args.gauge_pressure) {
        (Some(p), _) => p,
        (None, Some(gauge)) => procsim_core::design_pressure(
            gauge,
            match args.rule {
                RuleArg::GaugePlusAmbient => DesignPressureRule::GaugePlusAmbient,
                RuleArg::TenPercent => DesignPressureRule::TenPercentMargin,
            },
        ),
        (None, None) => {
            eprintln!("one of --design-pressure or --gauge-pressure is required");
            return ExitCode::from(1);
        }
    };
    let spec = VesselSpec {
        d_inner: args.d_inner,
        height_tangent: args.height,
        p_design,
        f_design_stress: args.design_stress,
        joint_efficiency: args.joint_efficiency,
        rho_material: args.rho,
        c_v: args.c_v,
        g: args.g,
    };
    match procsim_core::vessel::design(&spec) {
        Ok(design) => {
            print!(
                "{}",
                procsim_cli::report::vessel_report(&args.id, &spec, &design)
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}

fn economics_command(definition: &Path, fx: Option<f64>, report_dir: Option<PathBuf>) -> ExitCode {
    let def = match load_definition(definition) {
        Ok(def) => def,
        Err(diag) => {
            eprintln!("{diag}");
            return ExitCode::from(1);
        }
    };
    if let Some(dir) = report_dir {
        let options = RunOptions {
            report_dir: dir.clone(),
            fx_override: fx,
            skip_flowsheet: true,
            ..RunOptions::default()
        };
        if let Err(e) = procsim_cli::run(&def, &options) {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
        if let Ok(text) = std::fs::read_to_string(dir.join("economics.txt")) {
            print!("{text}");
        }
        return ExitCode::SUCCESS;
    }
    match procsim_cli::runner::economics_text(&def, fx) {
        Ok(Some(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(None) => {
            eprintln!("definition has no economics section");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
