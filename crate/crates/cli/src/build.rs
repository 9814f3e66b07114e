//! Lowers a validated plant definition into core solver inputs.

use procsim_core::solver::BuildErrors;
use procsim_core::{
    Acceleration, BlockKind, ComponentRegistry, CompressorSpec, Flowsheet, OutletState, Reaction,
    ReactorSpec, SolveOptions, Stream, VesselSpec,
};

use crate::definition::{
    AccelerationDef, BlockKindDef, OutletStateDef, PlantDefinition, VesselSection,
};

#[derive(Debug, thiserror::Error)]
pub enum LowerError {
    #[error("components: {0}")]
    Registry(#[from] procsim_core::PropsError),
    #[error("block parameters: {0}")]
    Block(#[from] procsim_core::BlockError),
    #[error("stream: {0}")]
    Stream(#[from] procsim_core::StreamError),
    #[error(transparent)]
    Graph(#[from] BuildErrors),
}

pub fn build_registry(def: &PlantDefinition) -> Result<ComponentRegistry, LowerError> {
    Ok(ComponentRegistry::new(def.components.clone())?)
}

fn outlet_state(def: &OutletStateDef) -> OutletState {
    OutletState {
        temperature: def.temperature,
        pressure: def.pressure,
        phase: def.phase,
    }
}

fn lower_kind(kind: &BlockKindDef, registry: &ComponentRegistry) -> Result<BlockKind, LowerError> {
    Ok(match kind {
        BlockKindDef::Mixer => BlockKind::Mixer,
        BlockKindDef::Splitter { phi } => BlockKind::Splitter { phi: *phi },
        BlockKindDef::ComponentSplitter {
            to_top,
            top,
            bottom,
        } => BlockKind::ComponentSplitter {
            to_top: registry.dense_from_map(to_top, 0.0)?,
            top: outlet_state(top),
            bottom: outlet_state(bottom),
        },
        BlockKindDef::Reactor {
            t_out,
            p_out,
            reactions,
        } => {
            let lowered = reactions
                .iter()
                .map(|rx| {
                    let stoich = registry.dense_from_map(&rx.stoich, 0.0)?;
                    let key = registry.index_of(&rx.key_reactant)?;
                    Ok(Reaction::new(stoich, key, rx.conversion, registry)?)
                })
                .collect::<Result<Vec<_>, LowerError>>()?;
            BlockKind::Reactor(ReactorSpec::new(lowered, *t_out, *p_out, registry)?)
        }
        BlockKindDef::Compressor {
            p_out,
            gamma,
            eta_isentropic,
        } => BlockKind::Compressor(CompressorSpec::new(*p_out, *gamma, *eta_isentropic)?),
        BlockKindDef::Pump { p_out } => BlockKind::Pump { p_out: *p_out },
        BlockKindDef::Heater {
            t_out,
            p_out,
            phase,
        } => BlockKind::Heater {
            t_out: *t_out,
            p_out: *p_out,
            phase: *phase,
        },
    })
}

/// Builds the flowsheet graph from a definition. Parameter problems stop
/// the lowering; graph problems come back collected in
/// [`LowerError::Graph`].
pub fn build_flowsheet(
    def: &PlantDefinition,
    registry: &ComponentRegistry,
) -> Result<Flowsheet, LowerError> {
    let mut builder = Flowsheet::builder();
    for (id, feed) in &def.feeds {
        let stream =
            registry.stream_from_map(&feed.flows, feed.temperature, feed.pressure, feed.phase)?;
        builder = builder.feed(id.clone(), stream);
    }
    for block in &def.blocks {
        let kind = lower_kind(&block.kind, registry)?;
        let inlets: Vec<&str> = block.inlets.iter().map(String::as_str).collect();
        let outlets: Vec<&str> = block.outlets.iter().map(String::as_str).collect();
        builder = builder.block(block.id.clone(), kind, &inlets, &outlets);
    }
    for tear in &def.tears {
        builder = builder.tear(tear.clone());
    }
    Ok(builder.build()?)
}

pub fn solve_options(def: &PlantDefinition) -> SolveOptions {
    let s = &def.solve;
    SolveOptions {
        tolerance: s.tolerance,
        temp_tolerance: s.temp_tolerance,
        max_iterations: s.max_iterations,
        acceleration: match s.acceleration {
            AccelerationDef::Direct => Acceleration::Direct,
            AccelerationDef::Wegstein => Acceleration::Wegstein,
        },
        wegstein_q_bounds: (s.wegstein_q_min, s.wegstein_q_max),
    }
}

/// Resolves a vessel section into a core spec, applying the design
/// pressure rule when only a gauge pressure is given.
pub fn vessel_spec(section: &VesselSection) -> (VesselSpec, f64) {
    let p_design = section.p_design.unwrap_or_else(|| {
        procsim_core::design_pressure(section.p_gauge.unwrap_or(0.0), section.design_pressure_rule)
    });
    (
        VesselSpec {
            d_inner: section.d_inner,
            height_tangent: section.height_tangent,
            p_design,
            f_design_stress: section.f_design_stress,
            joint_efficiency: section.joint_efficiency,
            rho_material: section.rho_material,
            c_v: section.c_v,
            g: section.g,
        },
        p_design,
    )
}

/// Initial tear streams for a solve: zero flows at ambient conditions.
pub fn zero_tears(def: &PlantDefinition, registry: &ComponentRegistry) -> Vec<Stream> {
    def.tears
        .iter()
        .map(|_| Stream::zeroed(registry.len(), 0.0, 1.0, procsim_core::Phase::Mixed))
        .collect()
}
