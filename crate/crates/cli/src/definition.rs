//! Plant-definition schema and validation.
//!
//! Validation is not fail-fast: every schema and referential problem
//! found is reported as a [`Diagnostic`] with a location path, so a bad
//! file can be fixed in one pass.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::Deserialize;

use procsim_core::econ::{
    CostItem, EquipmentItem, LoanTerms, ManpowerItem, MaterialItem, ProductItem, UtilityItem,
};
use procsim_core::{Component, DesignPressureRule, Phase};

pub const SCHEMA_VERSION: u32 = 1;

/// One validation finding: where and what.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub location: String,
    pub message: String,
}

impl Diagnostic {
    fn new(location: impl Into<String>, message: impl fmt::Display) -> Self {
        Diagnostic {
            location: location.into(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

/// True for a finite, strictly positive number (false for NaN).
fn positive(x: f64) -> bool {
    x > 0.0 && x.is_finite()
}

/// True for a finite, non-negative number (false for NaN).
fn non_negative(x: f64) -> bool {
    x >= 0.0 && x.is_finite()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlantDefinition {
    pub schema_version: u32,
    #[serde(default = "default_name")]
    pub name: String,
    pub components: Vec<Component>,
    pub feeds: BTreeMap<String, StreamDef>,
    pub blocks: Vec<BlockDef>,
    #[serde(default)]
    pub tears: Vec<String>,
    #[serde(default)]
    pub solve: SolveSection,
    #[serde(default)]
    pub vessels: Vec<VesselSection>,
    #[serde(default)]
    pub report: Option<ReportSection>,
    #[serde(default)]
    pub economics: Option<EconomicsSection>,
}

fn default_name() -> String {
    "plant".into()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StreamDef {
    pub flows: BTreeMap<String, f64>,
    pub temperature: f64,
    pub pressure: f64,
    pub phase: Phase,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDef {
    pub id: String,
    pub kind: BlockKindDef,
    pub inlets: Vec<String>,
    pub outlets: Vec<String>,
    /// Free-form annotations (design ratings, reflux ratios, vendor
    /// notes). Carried, never interpreted.
    #[serde(default)]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum BlockKindDef {
    Mixer,
    Splitter {
        phi: f64,
    },
    ComponentSplitter {
        to_top: BTreeMap<String, f64>,
        top: OutletStateDef,
        bottom: OutletStateDef,
    },
    Reactor {
        t_out: f64,
        p_out: f64,
        reactions: Vec<ReactionDef>,
    },
    Compressor {
        p_out: f64,
        gamma: f64,
        #[serde(default = "default_eta_isentropic")]
        eta_isentropic: f64,
    },
    Pump {
        p_out: f64,
    },
    Heater {
        t_out: f64,
        p_out: f64,
        phase: Phase,
    },
}

fn default_eta_isentropic() -> f64 {
    0.66
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutletStateDef {
    pub temperature: f64,
    pub pressure: f64,
    pub phase: Phase,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReactionDef {
    /// Signed stoichiometric coefficients, reactants negative.
    pub stoich: BTreeMap<String, f64>,
    pub key_reactant: String,
    pub conversion: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveSection {
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_temp_tolerance")]
    pub temp_tolerance: f64,
    #[serde(default = "default_max_iterations")]
    pub max_iterations: usize,
    #[serde(default)]
    pub acceleration: AccelerationDef,
    #[serde(default = "default_q_min")]
    pub wegstein_q_min: f64,
    #[serde(default = "default_q_max")]
    pub wegstein_q_max: f64,
}

impl Default for SolveSection {
    fn default() -> Self {
        SolveSection {
            tolerance: default_tolerance(),
            temp_tolerance: default_temp_tolerance(),
            max_iterations: default_max_iterations(),
            acceleration: AccelerationDef::default(),
            wegstein_q_min: default_q_min(),
            wegstein_q_max: default_q_max(),
        }
    }
}

fn default_tolerance() -> f64 {
    1e-6
}
fn default_temp_tolerance() -> f64 {
    0.01
}
fn default_max_iterations() -> usize {
    500
}
fn default_q_min() -> f64 {
    -5.0
}
fn default_q_max() -> f64 {
    0.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AccelerationDef {
    Direct,
    #[default]
    Wegstein,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VesselSection {
    pub id: String,
    /// m
    pub d_inner: f64,
    /// m
    pub height_tangent: f64,
    /// Absolute design pressure, bar; takes precedence over `p_gauge`.
    #[serde(default)]
    pub p_design: Option<f64>,
    /// Gauge pressure converted via `design_pressure_rule`.
    #[serde(default)]
    pub p_gauge: Option<f64>,
    #[serde(default)]
    pub design_pressure_rule: DesignPressureRule,
    #[serde(default = "default_design_stress")]
    pub f_design_stress: f64,
    #[serde(default = "default_joint_efficiency")]
    pub joint_efficiency: f64,
    #[serde(default = "default_rho_material")]
    pub rho_material: f64,
    #[serde(default = "default_c_v")]
    pub c_v: f64,
    #[serde(default = "default_g")]
    pub g: f64,
}

fn default_design_stress() -> f64 {
    344.7
}
fn default_joint_efficiency() -> f64 {
    1.0
}
fn default_rho_material() -> f64 {
    7800.0
}
fn default_c_v() -> f64 {
    1.08
}
fn default_g() -> f64 {
    9.81
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportSection {
    pub product_stream: String,
    pub product_component: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EconomicsSection {
    #[serde(default = "default_days")]
    pub operating_days_per_year: f64,
    #[serde(default = "default_hours")]
    pub operating_hours_per_day: f64,
    /// INR per USD for dollar-denominated inputs.
    #[serde(default = "default_fx")]
    pub fx_rate: f64,
    /// Optional separate rate for the equipment cost table.
    #[serde(default)]
    pub equipment_fx_rate: Option<f64>,
    #[serde(default)]
    pub capacity: Option<CapacitySection>,
    #[serde(default)]
    pub equipment_items: Vec<EquipmentItem>,
    #[serde(default)]
    pub direct_cost_items: Vec<CostItem>,
    #[serde(default)]
    pub manpower_items: Vec<ManpowerItem>,
    #[serde(default)]
    pub material_items: Vec<MaterialItem>,
    #[serde(default)]
    pub utility_items: Vec<UtilityItem>,
    #[serde(default)]
    pub other_opex_items: Vec<CostItem>,
    #[serde(default)]
    pub products: Vec<ProductItem>,
    pub tax_rate: f64,
    pub tax_lag_years: u32,
    pub depreciation_base: f64,
    pub depreciation_percents: Vec<f64>,
    pub horizon_years: u32,
    /// Annual gross income for the cash-flow ledger, crore.
    pub gross_annual: f64,
    /// Year-0 capital outlay, crore.
    pub fixed_outlay: f64,
    /// Operating cost basis used alongside the itemized sum, crore/yr.
    #[serde(default)]
    pub operating_cost_annual: Option<f64>,
    /// Net income / total investment for the headline ROI.
    #[serde(default)]
    pub roi_net_income: Option<f64>,
    #[serde(default)]
    pub roi_total_investment: Option<f64>,
    #[serde(default)]
    pub loan: Option<LoanTerms>,
    /// Material/product rows compared against converged flowsheet flows.
    #[serde(default)]
    pub cross_check: Vec<CrossCheckDef>,
    /// Free-form remarks carried into the economics report.
    #[serde(default)]
    pub notes: Vec<String>,
}

fn default_days() -> f64 {
    300.0
}
fn default_hours() -> f64 {
    24.0
}
fn default_fx() -> f64 {
    75.0
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapacitySection {
    pub tonnes_per_annum: f64,
    /// kg/kmol used for the molar equivalent of the hourly capacity.
    pub product_molar_mass: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossCheckDef {
    /// Name of the material or product item holding the quantity input.
    pub item: String,
    pub kind: CrossCheckKind,
    /// Stream carrying the corresponding flowsheet flow.
    pub stream: String,
    pub component: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossCheckKind {
    Material,
    Product,
}

/// Reads and parses a definition file. IO and syntax problems come back
/// as a single diagnostic carrying the line/column where known.
pub fn load_definition(path: &Path) -> Result<PlantDefinition, Diagnostic> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Diagnostic::new(path.display().to_string(), format!("cannot read file: {e}"))
    })?;
    serde_json::from_str(&text).map_err(|e| {
        Diagnostic::new(
            format!("{}:{}:{}", path.display(), e.line(), e.column()),
            format!("parse error: {e}"),
        )
    })
}

/// Loads and fully validates a definition file; an empty list means the
/// file is ready to run.
pub fn validate_path(path: &Path) -> Vec<Diagnostic> {
    match load_definition(path) {
        Ok(def) => validate_definition(&def),
        Err(d) => vec![d],
    }
}

/// Checks schema ranges and referential integrity, then attempts graph
/// construction so topology errors (dangling ports, duplicate producers,
/// leftover cycles) are reported as well.
pub fn validate_definition(def: &PlantDefinition) -> Vec<Diagnostic> {
    let mut diags = Vec::new();

    if def.schema_version != SCHEMA_VERSION {
        diags.push(Diagnostic::new(
            "schema_version",
            format!(
                "unsupported version {} (expected {SCHEMA_VERSION})",
                def.schema_version
            ),
        ));
    }

    if def.components.is_empty() {
        diags.push(Diagnostic::new(
            "components",
            "at least one component is required",
        ));
    }
    let registry = match procsim_core::ComponentRegistry::new(def.components.clone()) {
        Ok(reg) => Some(reg),
        Err(e) => {
            diags.push(Diagnostic::new("components", e));
            None
        }
    };
    let known = |name: &str| -> bool {
        registry
            .as_ref()
            .map(|r| r.get(name).is_ok())
            .unwrap_or(true)
    };

    for (id, feed) in &def.feeds {
        let loc = format!("feeds[{id}]");
        for (comp, &flow) in &feed.flows {
            if !known(comp) {
                diags.push(Diagnostic::new(
                    format!("{loc}.flows.{comp}"),
                    "unknown component",
                ));
            }
            if !flow.is_finite() || flow < 0.0 {
                diags.push(Diagnostic::new(
                    format!("{loc}.flows.{comp}"),
                    format!("flow must be a non-negative number, got {flow}"),
                ));
            }
        }
        if !positive(feed.pressure) {
            diags.push(Diagnostic::new(
                format!("{loc}.pressure"),
                "pressure must be positive",
            ));
        }
    }

    for block in &def.blocks {
        let loc = format!("blocks[{}]", block.id);
        match &block.kind {
            BlockKindDef::Mixer => {}
            BlockKindDef::Splitter { phi } => {
                if !(0.0..=1.0).contains(phi) {
                    diags.push(Diagnostic::new(
                        format!("{loc}.phi"),
                        format!("split fraction must lie in [0, 1], got {phi}"),
                    ));
                }
            }
            BlockKindDef::ComponentSplitter {
                to_top,
                top,
                bottom,
            } => {
                for (comp, &f) in to_top {
                    if !known(comp) {
                        diags.push(Diagnostic::new(
                            format!("{loc}.to_top.{comp}"),
                            "unknown component",
                        ));
                    }
                    if !(0.0..=1.0).contains(&f) {
                        diags.push(Diagnostic::new(
                            format!("{loc}.to_top.{comp}"),
                            format!("fraction must lie in [0, 1], got {f}"),
                        ));
                    }
                }
                for (port, state) in [("top", top), ("bottom", bottom)] {
                    if !positive(state.pressure) {
                        diags.push(Diagnostic::new(
                            format!("{loc}.{port}.pressure"),
                            "pressure must be positive",
                        ));
                    }
                }
            }
            BlockKindDef::Reactor {
                reactions, p_out, ..
            } => {
                if reactions.is_empty() {
                    diags.push(Diagnostic::new(
                        format!("{loc}.reactions"),
                        "at least one reaction required",
                    ));
                }
                if !positive(*p_out) {
                    diags.push(Diagnostic::new(
                        format!("{loc}.p_out"),
                        "pressure must be positive",
                    ));
                }
                let mut by_key: BTreeMap<&str, f64> = BTreeMap::new();
                for (i, rx) in reactions.iter().enumerate() {
                    let rloc = format!("{loc}.reactions[{i}]");
                    for comp in rx.stoich.keys() {
                        if !known(comp) {
                            diags.push(Diagnostic::new(
                                format!("{rloc}.stoich.{comp}"),
                                "unknown component",
                            ));
                        }
                    }
                    if !known(&rx.key_reactant) {
                        diags.push(Diagnostic::new(
                            format!("{rloc}.key_reactant"),
                            "unknown component",
                        ));
                    } else if rx.stoich.get(&rx.key_reactant).copied().unwrap_or(0.0) >= 0.0 {
                        diags.push(Diagnostic::new(
                            format!("{rloc}.key_reactant"),
                            "key reactant must appear with a negative coefficient",
                        ));
                    }
                    if !(0.0..=1.0).contains(&rx.conversion) {
                        diags.push(Diagnostic::new(
                            format!("{rloc}.conversion"),
                            format!("conversion must lie in [0, 1], got {}", rx.conversion),
                        ));
                    }
                    *by_key.entry(rx.key_reactant.as_str()).or_default() += rx.conversion;
                    // stoichiometric mass balance against the registry
                    if let Some(reg) = &registry {
                        if rx.stoich.keys().all(|c| reg.get(c).is_ok())
                            && reg.get(&rx.key_reactant).is_ok()
                        {
                            if let Ok(dense) = reg.dense_from_map(&rx.stoich, 0.0) {
                                let key = reg.index_of(&rx.key_reactant).unwrap();
                                if rx.stoich.get(&rx.key_reactant).copied().unwrap_or(0.0) < 0.0
                                    && (0.0..=1.0).contains(&rx.conversion)
                                {
                                    if let Err(e) =
                                        procsim_core::Reaction::new(dense, key, rx.conversion, reg)
                                    {
                                        diags.push(Diagnostic::new(format!("{rloc}.stoich"), e));
                                    }
                                }
                            }
                        }
                    }
                }
                for (key, sum) in by_key {
                    if sum > 1.0 + 1e-12 {
                        diags.push(Diagnostic::new(
                            format!("{loc}.reactions"),
                            format!("conversions of key reactant `{key}` sum to {sum}, above 1"),
                        ));
                    }
                }
            }
            BlockKindDef::Compressor {
                p_out,
                gamma,
                eta_isentropic,
            } => {
                if !positive(*p_out) {
                    diags.push(Diagnostic::new(
                        format!("{loc}.p_out"),
                        "pressure must be positive",
                    ));
                }
                if let Err(e) = procsim_core::CompressorSpec::new(*p_out, *gamma, *eta_isentropic) {
                    diags.push(Diagnostic::new(format!("{loc}.kind"), e));
                }
            }
            BlockKindDef::Pump { p_out } | BlockKindDef::Heater { p_out, .. } => {
                if !positive(*p_out) {
                    diags.push(Diagnostic::new(
                        format!("{loc}.p_out"),
                        "pressure must be positive",
                    ));
                }
            }
        }
    }

    let solve = &def.solve;
    if !positive(solve.tolerance) {
        diags.push(Diagnostic::new("solve.tolerance", "must be positive"));
    }
    if !positive(solve.temp_tolerance) {
        diags.push(Diagnostic::new("solve.temp_tolerance", "must be positive"));
    }
    if solve.max_iterations == 0 {
        diags.push(Diagnostic::new(
            "solve.max_iterations",
            "must be at least 1",
        ));
    }
    if solve.wegstein_q_min >= solve.wegstein_q_max {
        diags.push(Diagnostic::new(
            "solve.wegstein_q_min",
            "q bounds must satisfy low < high",
        ));
    }

    let mut vessel_ids = BTreeSet::new();
    for vessel in &def.vessels {
        let loc = format!("vessels[{}]", vessel.id);
        if !vessel_ids.insert(vessel.id.clone()) {
            diags.push(Diagnostic::new(loc.clone(), "duplicate vessel id"));
        }
        if !positive(vessel.d_inner) {
            diags.push(Diagnostic::new(
                format!("{loc}.d_inner"),
                "must be positive",
            ));
        }
        if !positive(vessel.height_tangent) {
            diags.push(Diagnostic::new(
                format!("{loc}.height_tangent"),
                "must be positive",
            ));
        }
        match (vessel.p_design, vessel.p_gauge) {
            (None, None) => diags.push(Diagnostic::new(
                loc.clone(),
                "one of p_design or p_gauge is required",
            )),
            (Some(p), _) if p <= 0.0 => diags.push(Diagnostic::new(
                format!("{loc}.p_design"),
                "must be positive",
            )),
            (None, Some(p)) if p < 0.0 => diags.push(Diagnostic::new(
                format!("{loc}.p_gauge"),
                "must be non-negative",
            )),
            _ => {}
        }
        if !positive(vessel.f_design_stress) {
            diags.push(Diagnostic::new(
                format!("{loc}.f_design_stress"),
                "must be positive",
            ));
        }
        if !(positive(vessel.joint_efficiency) && vessel.joint_efficiency <= 1.0) {
            diags.push(Diagnostic::new(
                format!("{loc}.joint_efficiency"),
                "must lie in (0, 1]",
            ));
        }
        if !positive(vessel.rho_material) || !positive(vessel.c_v) || !positive(vessel.g) {
            diags.push(Diagnostic::new(loc, "material constants must be positive"));
        }
    }

    // Stream ids known to the flowsheet: feeds plus block outlets.
    let mut stream_ids: BTreeSet<&str> = def.feeds.keys().map(String::as_str).collect();
    stream_ids.extend(
        def.blocks
            .iter()
            .flat_map(|b| b.outlets.iter().map(String::as_str)),
    );

    if let Some(report) = &def.report {
        if !stream_ids.contains(report.product_stream.as_str()) {
            diags.push(Diagnostic::new(
                "report.product_stream",
                "unknown stream id",
            ));
        }
        if !known(&report.product_component) {
            diags.push(Diagnostic::new(
                "report.product_component",
                "unknown component",
            ));
        }
    }

    if let Some(econ) = &def.economics {
        diags.extend(validate_economics(econ, &stream_ids, &known));
    }

    // Graph-level checks (producers, consumers, dangling ports, cycles)
    // via the core builder, only provided the schema is usable.
    if diags.is_empty() {
        if let Some(reg) = &registry {
            match crate::build::build_flowsheet(def, reg) {
                Ok(_) => {}
                Err(crate::build::LowerError::Graph(errors)) => {
                    diags.extend(
                        errors
                            .0
                            .into_iter()
                            .map(|e| Diagnostic::new("flowsheet", e)),
                    );
                }
                Err(other) => diags.push(Diagnostic::new("flowsheet", other)),
            }
        }
    }

    diags
}

fn validate_economics(
    econ: &EconomicsSection,
    stream_ids: &BTreeSet<&str>,
    known: &dyn Fn(&str) -> bool,
) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let loc = "economics";

    if !positive(econ.operating_days_per_year) || !positive(econ.operating_hours_per_day) {
        diags.push(Diagnostic::new(
            format!("{loc}.operating_days_per_year"),
            "operating schedule must be positive",
        ));
    }
    if !positive(econ.fx_rate) {
        diags.push(Diagnostic::new(
            format!("{loc}.fx_rate"),
            "must be positive",
        ));
    }
    if let Some(fx) = econ.equipment_fx_rate {
        if !positive(fx) {
            diags.push(Diagnostic::new(
                format!("{loc}.equipment_fx_rate"),
                "must be positive",
            ));
        }
    }
    if !(0.0..=1.0).contains(&econ.tax_rate) {
        diags.push(Diagnostic::new(
            format!("{loc}.tax_rate"),
            "must lie in [0, 1]",
        ));
    }
    if econ.horizon_years == 0 {
        diags.push(Diagnostic::new(
            format!("{loc}.horizon_years"),
            "must be at least 1",
        ));
    }
    if econ.depreciation_base < 0.0 {
        diags.push(Diagnostic::new(
            format!("{loc}.depreciation_base"),
            "must be non-negative",
        ));
    }
    if econ.depreciation_percents.iter().any(|p| *p < 0.0) {
        diags.push(Diagnostic::new(
            format!("{loc}.depreciation_percents"),
            "percentages must be non-negative",
        ));
    }
    let dep_sum: f64 = econ.depreciation_percents.iter().sum();
    if dep_sum > 1.0 + 1e-9 {
        diags.push(Diagnostic::new(
            format!("{loc}.depreciation_percents"),
            format!("percentages sum to {dep_sum}, above 1"),
        ));
    }
    if econ.depreciation_percents.len() > econ.horizon_years as usize {
        diags.push(Diagnostic::new(
            format!("{loc}.depreciation_percents"),
            "schedule is longer than the horizon",
        ));
    }

    for (i, item) in econ.material_items.iter().enumerate() {
        if item.price_inr_per_kg < 0.0 || item.quantity_kg_per_year < 0.0 {
            diags.push(Diagnostic::new(
                format!("{loc}.material_items[{i}]"),
                "prices and quantities must be non-negative",
            ));
        }
    }
    for (i, item) in econ.products.iter().enumerate() {
        if item.price_inr_per_kg < 0.0 || item.quantity_kg_per_year < 0.0 {
            diags.push(Diagnostic::new(
                format!("{loc}.products[{i}]"),
                "prices and quantities must be non-negative",
            ));
        }
    }
    for (i, item) in econ.utility_items.iter().enumerate() {
        if item.cost_usd_per_h < 0.0 {
            diags.push(Diagnostic::new(
                format!("{loc}.utility_items[{i}]"),
                "hourly cost must be non-negative",
            ));
        }
    }
    for (i, item) in econ.equipment_items.iter().enumerate() {
        if item.equipment_cost_usd < 0.0
            || item.installed_cost_usd < 0.0
            || item.utility_cost_usd_per_h < 0.0
        {
            diags.push(Diagnostic::new(
                format!("{loc}.equipment_items[{i}]"),
                "costs must be non-negative",
            ));
        }
    }

    if let Some(capacity) = &econ.capacity {
        if !non_negative(capacity.tonnes_per_annum) || !positive(capacity.product_molar_mass) {
            diags.push(Diagnostic::new(
                format!("{loc}.capacity"),
                "invalid capacity inputs",
            ));
        }
    }
    if let Some(loan) = &econ.loan {
        if loan.principal_crore < 0.0 || loan.annual_rate < 0.0 || loan.tenure_years == 0 {
            diags.push(Diagnostic::new(format!("{loc}.loan"), "invalid loan terms"));
        }
    }
    if let Some(investment) = econ.roi_total_investment {
        if !positive(investment) {
            diags.push(Diagnostic::new(
                format!("{loc}.roi_total_investment"),
                "must be positive",
            ));
        }
    }

    for (i, cc) in econ.cross_check.iter().enumerate() {
        let cloc = format!("{loc}.cross_check[{i}]");
        if !stream_ids.contains(cc.stream.as_str()) {
            diags.push(Diagnostic::new(
                format!("{cloc}.stream"),
                "unknown stream id",
            ));
        }
        if !known(&cc.component) {
            diags.push(Diagnostic::new(
                format!("{cloc}.component"),
                "unknown component",
            ));
        }
        let found = match cc.kind {
            CrossCheckKind::Material => econ.material_items.iter().any(|m| m.name == cc.item),
            CrossCheckKind::Product => econ.products.iter().any(|p| p.name == cc.item),
        };
        if !found {
            diags.push(Diagnostic::new(
                format!("{cloc}.item"),
                "no material/product item with this name",
            ));
        }
    }

    diags
}
