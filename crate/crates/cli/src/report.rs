//! Artifact formatting: stream table and cash-flow CSVs, text reports,
//! convergence log and the machine-readable run summary.
//!
//! Output ordering and decimal formatting are fixed so re-running an
//! identical definition reproduces every artifact byte for byte.

use std::cmp::Ordering;
use std::fmt::Write as _;

use procsim_core::econ::{CashFlowRow, EmiSchedule};
use procsim_core::{stream_mass_flow, ComponentRegistry, SolveResult, VesselDesign, VesselSpec};
use serde::Serialize;

/// Orders stream ids numerically when both parse as integers, else
/// lexicographically (numeric ids first).
pub fn stream_order(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// Stream table mirroring the converged material balance: one row per
/// stream, flows and temperatures at three decimals.
pub fn streams_csv(result: &SolveResult, registry: &ComponentRegistry) -> String {
    let mut out =
        String::from("stream,phase,temperature_c,pressure_bar,mass_kg_per_h,total_kmol_per_h");
    for name in registry.names() {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');

    let mut ids: Vec<&str> = result.streams.keys().map(String::as_str).collect();
    ids.sort_by(|a, b| stream_order(a, b));
    for id in ids {
        let stream = &result.streams[id];
        let _ = write!(
            out,
            "{id},{},{:.3},{:.3},{:.3},{:.3}",
            stream.phase,
            stream.temperature,
            stream.pressure,
            stream_mass_flow(stream, registry),
            stream.total_molar_flow(),
        );
        for &flow in stream.flows() {
            let _ = write!(out, ",{flow:.3}");
        }
        out.push('\n');
    }
    out
}

/// Per-iteration max-norm residual of the tear vector.
pub fn convergence_csv(result: &SolveResult) -> String {
    let mut out = String::from("iteration,residual\n");
    for (i, r) in result.residual_history.iter().enumerate() {
        let _ = writeln!(out, "{},{:.6e}", i + 1, r);
    }
    out
}

/// Year-by-year profitability ledger, crore amounts at two decimals.
pub fn cashflow_csv(rows: &[CashFlowRow]) -> String {
    let mut out = String::from("year,gross,depreciation,taxable,taxes_paid,cash_flow,cumulative\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{:.2},{:.2},{:.2},{:.2},{:.2},{:.2}",
            r.year, r.gross, r.depreciation, r.taxable, r.taxes_paid, r.cash_flow, r.cumulative
        );
    }
    out
}

/// One-page mechanical design report for a vessel.
pub fn vessel_report(id: &str, spec: &VesselSpec, design: &VesselDesign) -> String {
    let minimum = procsim_core::vessel::MIN_RECOMMENDED_THICKNESS_MM;
    let verdict = if design.thickness > minimum {
        "OK"
    } else {
        "TOO THIN"
    };
    let mut out = String::new();
    let _ = writeln!(out, "PRESSURE VESSEL DESIGN -- {id}");
    let _ = writeln!(out);
    let _ = writeln!(out, "inputs");
    let _ = writeln!(out, "  internal diameter        {:.3} m", spec.d_inner);
    let _ = writeln!(
        out,
        "  tangent height           {:.3} m",
        spec.height_tangent
    );
    let _ = writeln!(out, "  design pressure          {:.3} bar", spec.p_design);
    let _ = writeln!(
        out,
        "  design stress            {:.1} bar",
        spec.f_design_stress
    );
    let _ = writeln!(
        out,
        "  joint efficiency         {:.2}",
        spec.joint_efficiency
    );
    let _ = writeln!(
        out,
        "  material density         {:.0} kg/m3",
        spec.rho_material
    );
    let _ = writeln!(out, "  weight factor            {:.2}", spec.c_v);
    let _ = writeln!(out);
    let _ = writeln!(out, "results");
    let _ = writeln!(
        out,
        "  wall thickness           {:.2} mm (minimum {:.2} mm: {verdict})",
        design.thickness, minimum
    );
    let _ = writeln!(
        out,
        "  circumferential stress   {:.2} MN/m2",
        design.f_circumferential
    );
    let _ = writeln!(
        out,
        "  axial stress             {:.2} MN/m2",
        design.f_axial
    );
    let _ = writeln!(out, "  mean diameter            {:.5} m", design.d_mean);
    let _ = writeln!(
        out,
        "  shell weight             {:.1} N",
        design.shell_weight
    );
    let _ = writeln!(
        out,
        "  weight stress            {:.3} MN/m2",
        design.f_weight
    );
    out
}

/// Inputs assembled by the runner for the economics text report.
pub struct EconReport {
    pub plant_name: String,
    pub capacity: Option<CapacityLine>,
    pub fx_rate: f64,
    pub equipment_fx_rate: f64,
    pub equipment: procsim_core::econ::EquipmentRollup,
    pub fixed: procsim_core::econ::FixedCapital,
    pub materials_crore: f64,
    pub utilities_crore: f64,
    pub other_opex_crore: f64,
    pub operating_cost_input: Option<f64>,
    pub revenue_crore: f64,
    pub gross_annual: f64,
    pub cumulative_10yr: f64,
    pub payback_years: Result<f64, procsim_core::econ::EconError>,
    pub roi_stated: Option<f64>,
    pub roi_computed: Option<f64>,
    pub loan: Option<(procsim_core::econ::LoanTerms, EmiSchedule)>,
    pub cross_checks: Vec<CrossCheckLine>,
    pub notes: Vec<String>,
}

pub struct CapacityLine {
    pub tonnes_per_annum: f64,
    pub kg_per_hour: f64,
    pub kmol_per_hour: f64,
    pub molar_mass: f64,
}

pub struct CrossCheckLine {
    pub item: String,
    pub input_kg_per_year: f64,
    pub flowsheet_kg_per_year: f64,
}

pub fn economics_report(r: &EconReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "PLANT ECONOMICS -- {}", r.plant_name);
    let _ = writeln!(out);

    if let Some(c) = &r.capacity {
        let _ = writeln!(out, "capacity");
        let _ = writeln!(
            out,
            "  nameplate                {:.0} t/a",
            c.tonnes_per_annum
        );
        let _ = writeln!(out, "  hourly                   {:.3} kg/h", c.kg_per_hour);
        let _ = writeln!(
            out,
            "  molar equivalent         {:.2} kmol/h at {:.2} kg/kmol",
            c.kmol_per_hour, c.molar_mass
        );
        let _ = writeln!(out);
    }

    let _ = writeln!(
        out,
        "equipment cost summary (at {:.2} INR/USD)",
        r.equipment_fx_rate
    );
    let _ = writeln!(
        out,
        "  purchased equipment      {:>10.2} crore",
        r.equipment.equipment_crore
    );
    let _ = writeln!(
        out,
        "  installation             {:>10.2} crore",
        r.equipment.installed_crore
    );
    let _ = writeln!(
        out,
        "  equipment + installation {:>10.2} crore",
        r.equipment.combined_crore
    );
    let _ = writeln!(
        out,
        "  equipment utilities      {:>10.2} crore/yr",
        r.equipment.utility_crore_per_year
    );
    let _ = writeln!(out);

    let _ = writeln!(out, "fixed capital");
    let _ = writeln!(
        out,
        "  direct cost              {:>10.2} crore",
        r.fixed.direct_crore
    );
    let _ = writeln!(
        out,
        "  indirect (manpower)      {:>10.2} crore/yr",
        r.fixed.indirect_crore_per_year
    );
    let _ = writeln!(
        out,
        "  fixed capital            {:>10.2} crore",
        r.fixed.fixed_crore
    );
    let _ = writeln!(out);

    let itemized = r.materials_crore + r.utilities_crore + r.other_opex_crore;
    let _ = writeln!(out, "operating cost (annual)");
    let _ = writeln!(
        out,
        "  materials and catalyst   {:>10.2} crore",
        r.materials_crore
    );
    let _ = writeln!(
        out,
        "  utilities (at {:.2})      {:>10.2} crore",
        r.fx_rate, r.utilities_crore
    );
    let _ = writeln!(
        out,
        "  other operating items    {:>10.2} crore",
        r.other_opex_crore
    );
    let _ = writeln!(out, "  itemized total           {:>10.2} crore", itemized);
    if let Some(input) = r.operating_cost_input {
        let _ = writeln!(out, "  ledger basis (input)     {:>10.2} crore", input);
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "revenue (annual)");
    let _ = writeln!(
        out,
        "  total                    {:>10.2} crore",
        r.revenue_crore
    );
    let _ = writeln!(out);

    let _ = writeln!(out, "profitability");
    let _ = writeln!(
        out,
        "  gross annual (input)     {:>10.2} crore",
        r.gross_annual
    );
    let _ = writeln!(
        out,
        "  10-year cumulative       {:>10.2} crore",
        r.cumulative_10yr
    );
    match &r.payback_years {
        Ok(years) => {
            let _ = writeln!(
                out,
                "  payback                  {:>10.2} years (outlay plotted at year 1)",
                years
            );
            let _ = writeln!(
                out,
                "  payback from outlay      {:>10.2} years",
                years - 1.0
            );
        }
        Err(e) => {
            let _ = writeln!(out, "  payback                  {e}");
        }
    }
    if let Some(roi) = r.roi_stated {
        let _ = writeln!(out, "  ROI (stated inputs)      {:>10.2} %", roi);
    }
    if let Some(roi) = r.roi_computed {
        let _ = writeln!(out, "  ROI (cumulative basis)   {:>10.2} %", roi);
    }
    let _ = writeln!(out);

    if let Some((terms, schedule)) = &r.loan {
        let _ = writeln!(out, "bank loan");
        let _ = writeln!(
            out,
            "  principal {:.2} crore at {:.2} % for {} years",
            terms.principal_crore,
            100.0 * terms.annual_rate,
            terms.tenure_years
        );
        let _ = writeln!(
            out,
            "  EMI                      {:>10.2} crore/month",
            schedule.emi_monthly
        );
        let _ = writeln!(
            out,
            "  yearly payment           {:>10.2} crore",
            schedule.yearly_payment
        );
        let _ = writeln!(
            out,
            "  total interest           {:>10.2} crore",
            schedule.total_interest
        );
        let _ = writeln!(
            out,
            "  total paid               {:>10.2} crore",
            schedule.total_paid
        );
        let _ = writeln!(out);
    }

    if !r.cross_checks.is_empty() {
        let _ = writeln!(
            out,
            "flowsheet cross-check (input vs converged flows, kg/yr)"
        );
        for line in &r.cross_checks {
            let deviation = 100.0 * (line.flowsheet_kg_per_year - line.input_kg_per_year)
                / line.input_kg_per_year;
            let _ = writeln!(
                out,
                "  {:<24} {:>14.1} | {:>14.1} ({:+.2} %)",
                line.item, line.input_kg_per_year, line.flowsheet_kg_per_year, deviation
            );
        }
        let _ = writeln!(out);
    }

    if !r.notes.is_empty() {
        let _ = writeln!(out, "notes");
        for note in &r.notes {
            let _ = writeln!(out, "  - {note}");
        }
    }

    out
}

/// Headline numbers of a run, written as `summary.json`.
#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub name: String,
    pub converged: Option<bool>,
    pub iterations: Option<usize>,
    pub product_stream: Option<String>,
    pub product_component: Option<String>,
    pub product_kmol_per_h: Option<f64>,
    pub product_purity_percent: Option<f64>,
    pub payback_years: Option<f64>,
    pub roi_percent: Option<f64>,
    pub emi_crore: Option<f64>,
}

pub fn summary_json(summary: &Summary) -> String {
    let mut text = serde_json::to_string_pretty(summary).expect("summary serializes");
    text.push('\n');
    text
}
