//! Run orchestration: solve the flowsheet, evaluate vessels and
//! economics, and write every artifact under the report directory.

use std::fs;
use std::path::{Path, PathBuf};

use procsim_core::econ::{self, EmiSchedule};
use procsim_core::{solve, Acceleration, ComponentRegistry, SolveError, SolveOptions, SolveResult};

use crate::build;
use crate::definition::{CrossCheckKind, EconomicsSection, PlantDefinition};
use crate::report::{self, CapacityLine, CrossCheckLine, EconReport, Summary};

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub report_dir: PathBuf,
    pub tolerance: Option<f64>,
    pub max_iterations: Option<usize>,
    pub acceleration: Option<Acceleration>,
    pub fx_override: Option<f64>,
    pub skip_flowsheet: bool,
    pub skip_economics: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("definition is invalid:\n{0}")]
    Invalid(String),
    #[error("cannot write `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Lower(#[from] build::LowerError),
    #[error("solver failed: {0}")]
    Solver(procsim_core::SolveError),
    #[error("vessel `{id}`: {source}")]
    Vessel {
        id: String,
        source: procsim_core::VesselError,
    },
}

/// What happened, for exit-code mapping and tests.
#[derive(Debug)]
pub struct RunSummary {
    pub converged: Option<bool>,
    pub iterations: Option<usize>,
    pub artifacts: Vec<PathBuf>,
}

impl RunSummary {
    /// 0 on success, 2 when the tear iteration hit its iteration cap.
    pub fn exit_code(&self) -> i32 {
        match self.converged {
            Some(false) => 2,
            _ => 0,
        }
    }
}

fn write_artifact(
    dir: &Path,
    name: &str,
    contents: &str,
    paths: &mut Vec<PathBuf>,
) -> Result<(), RunError> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|source| RunError::Io {
        path: path.display().to_string(),
        source,
    })?;
    paths.push(path);
    Ok(())
}

/// Validates, solves and reports. All outputs land in
/// `options.report_dir`; nothing outside it is touched.
pub fn run(def: &PlantDefinition, options: &RunOptions) -> Result<RunSummary, RunError> {
    let diagnostics = crate::definition::validate_definition(def);
    if !diagnostics.is_empty() {
        let text = diagnostics
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("\n");
        return Err(RunError::Invalid(text));
    }

    fs::create_dir_all(&options.report_dir).map_err(|source| RunError::Io {
        path: options.report_dir.display().to_string(),
        source,
    })?;

    let registry = build::build_registry(def)?;
    let mut artifacts = Vec::new();
    let mut summary = Summary {
        name: def.name.clone(),
        ..Summary::default()
    };

    let solve_outcome = if options.skip_flowsheet {
        None
    } else {
        Some(solve_flowsheet(def, options, &registry)?)
    };

    if let Some((result, converged)) = &solve_outcome {
        summary.converged = Some(*converged);
        summary.iterations = Some(result.iterations);
        write_artifact(
            &options.report_dir,
            "streams.csv",
            &report::streams_csv(result, &registry),
            &mut artifacts,
        )?;
        write_artifact(
            &options.report_dir,
            "convergence.csv",
            &report::convergence_csv(result),
            &mut artifacts,
        )?;
        if let Some(section) = &def.report {
            let stream = &result.streams[&section.product_stream];
            let idx = registry
                .index_of(&section.product_component)
                .expect("validated");
            let product_flow = stream.flow(idx);
            summary.product_stream = Some(section.product_stream.clone());
            summary.product_component = Some(section.product_component.clone());
            summary.product_kmol_per_h = Some(product_flow);
            let total = stream.total_molar_flow();
            if total > 0.0 {
                summary.product_purity_percent = Some(100.0 * product_flow / total);
            }
        }
    }

    for section in &def.vessels {
        let (spec, _) = build::vessel_spec(section);
        let design = procsim_core::vessel::design(&spec).map_err(|source| RunError::Vessel {
            id: section.id.clone(),
            source,
        })?;
        write_artifact(
            &options.report_dir,
            &format!("vessel_{}.txt", section.id),
            &report::vessel_report(&section.id, &spec, &design),
            &mut artifacts,
        )?;
    }

    if let (Some(econ_def), false) = (&def.economics, options.skip_economics) {
        let evaluated = evaluate_economics(
            def,
            econ_def,
            options,
            &registry,
            solve_outcome.as_ref().map(|(r, _)| r),
        );
        write_artifact(
            &options.report_dir,
            "cashflow.csv",
            &report::cashflow_csv(&evaluated.cash_flow),
            &mut artifacts,
        )?;
        write_artifact(
            &options.report_dir,
            "economics.txt",
            &report::economics_report(&evaluated.report),
            &mut artifacts,
        )?;
        summary.payback_years = evaluated.report.payback_years.as_ref().ok().copied();
        summary.roi_percent = evaluated
            .report
            .roi_stated
            .or(evaluated.report.roi_computed);
        summary.emi_crore = evaluated.report.loan.as_ref().map(|(_, s)| s.emi_monthly);
    }

    write_artifact(
        &options.report_dir,
        "summary.json",
        &report::summary_json(&summary),
        &mut artifacts,
    )?;

    Ok(RunSummary {
        converged: summary.converged,
        iterations: summary.iterations,
        artifacts,
    })
}

/// Renders the economics report without touching the filesystem. `None`
/// when the definition carries no economics section.
pub fn economics_text(
    def: &PlantDefinition,
    fx_override: Option<f64>,
) -> Result<Option<String>, RunError> {
    let diagnostics = crate::definition::validate_definition(def);
    if !diagnostics.is_empty() {
        let text = diagnostics
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("\n");
        return Err(RunError::Invalid(text));
    }
    let Some(section) = &def.economics else {
        return Ok(None);
    };
    let registry = build::build_registry(def)?;
    let options = RunOptions {
        fx_override,
        ..RunOptions::default()
    };
    let evaluated = evaluate_economics(def, section, &options, &registry, None);
    Ok(Some(report::economics_report(&evaluated.report)))
}

fn solve_flowsheet(
    def: &PlantDefinition,
    options: &RunOptions,
    registry: &ComponentRegistry,
) -> Result<(SolveResult, bool), RunError> {
    let flowsheet = build::build_flowsheet(def, registry)?;
    let mut solve_options: SolveOptions = build::solve_options(def);
    if let Some(tol) = options.tolerance {
        solve_options.tolerance = tol;
    }
    if let Some(max) = options.max_iterations {
        solve_options.max_iterations = max;
    }
    if let Some(accel) = options.acceleration {
        solve_options.acceleration = accel;
    }
    match solve(&flowsheet, &solve_options, registry) {
        Ok(result) => Ok((result, true)),
        Err(SolveError::NotConverged(result)) => Ok((*result, false)),
        Err(other) => Err(RunError::Solver(other)),
    }
}

struct EvaluatedEconomics {
    cash_flow: Vec<econ::CashFlowRow>,
    report: EconReport,
}

fn evaluate_economics(
    def: &PlantDefinition,
    section: &EconomicsSection,
    options: &RunOptions,
    registry: &ComponentRegistry,
    solved: Option<&SolveResult>,
) -> EvaluatedEconomics {
    let fx = options.fx_override.unwrap_or(section.fx_rate);
    let equipment_fx = options
        .fx_override
        .unwrap_or_else(|| section.equipment_fx_rate.unwrap_or(fx));
    let hours_per_year = section.operating_days_per_year * section.operating_hours_per_day;

    let capacity = section.capacity.map(|c| {
        let kg_per_hour = econ::hourly_capacity(
            c.tonnes_per_annum,
            section.operating_days_per_year,
            section.operating_hours_per_day,
        );
        CapacityLine {
            tonnes_per_annum: c.tonnes_per_annum,
            kg_per_hour,
            kmol_per_hour: kg_per_hour / c.product_molar_mass,
            molar_mass: c.product_molar_mass,
        }
    });

    let equipment = econ::equipment_rollup(&section.equipment_items, equipment_fx, hours_per_year);
    let fixed = econ::fixed_capital(&section.direct_cost_items, &section.manpower_items);
    let materials_crore = econ::material_cost_annual(&section.material_items);
    let utilities_crore = econ::utility_cost_annual(&section.utility_items, hours_per_year, fx);
    let other_opex_crore: f64 = section
        .other_opex_items
        .iter()
        .map(|i| i.amount_crore)
        .sum();
    let revenue_crore = econ::revenue_annual(&section.products);

    let depreciation = econ::depreciation_schedule(
        section.depreciation_base,
        &section.depreciation_percents,
        section.horizon_years as usize,
    );
    let cash_flow = econ::cash_flow_table(
        section.gross_annual,
        &depreciation,
        section.tax_rate,
        section.tax_lag_years,
        section.fixed_outlay,
        section.horizon_years as usize,
    );
    let cumulative = cash_flow.last().map(|r| r.cumulative).unwrap_or_default();
    let payback_years = econ::payback(&cash_flow);

    let roi_stated = match (section.roi_net_income, section.roi_total_investment) {
        (Some(income), Some(investment)) => econ::roi(income, investment).ok(),
        _ => None,
    };
    let roi_computed = section
        .roi_total_investment
        .and_then(|investment| econ::roi(cumulative + investment, investment).ok());

    let loan: Option<(econ::LoanTerms, EmiSchedule)> = section.loan.map(|terms| {
        let schedule =
            econ::emi_schedule(terms.principal_crore, terms.annual_rate, terms.tenure_years);
        (terms, schedule)
    });

    let mut cross_checks = Vec::new();
    if let Some(result) = solved {
        for cc in &section.cross_check {
            let input = match cc.kind {
                CrossCheckKind::Material => section
                    .material_items
                    .iter()
                    .find(|m| m.name == cc.item)
                    .map(|m| m.quantity_kg_per_year),
                CrossCheckKind::Product => section
                    .products
                    .iter()
                    .find(|p| p.name == cc.item)
                    .map(|p| p.quantity_kg_per_year),
            };
            let (Some(input), Some(stream)) = (input, result.streams.get(&cc.stream)) else {
                continue;
            };
            let idx = registry.index_of(&cc.component).expect("validated");
            let molar_mass = registry.component(idx).molar_mass;
            let flowsheet_kg_per_year = stream.flow(idx) * molar_mass * hours_per_year;
            cross_checks.push(CrossCheckLine {
                item: cc.item.clone(),
                input_kg_per_year: input,
                flowsheet_kg_per_year,
            });
        }
    }

    EvaluatedEconomics {
        cash_flow,
        report: EconReport {
            plant_name: def.name.clone(),
            capacity,
            fx_rate: fx,
            equipment_fx_rate: equipment_fx,
            equipment,
            fixed,
            materials_crore,
            utilities_crore,
            other_opex_crore,
            operating_cost_input: section.operating_cost_annual,
            revenue_crore,
            gross_annual: section.gross_annual,
            cumulative_10yr: cumulative,
            payback_years,
            roi_stated,
            roi_computed,
            loan,
            cross_checks,
            notes: section.notes.clone(),
        },
    }
}
