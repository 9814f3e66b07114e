//! Shared setup for the benchmark targets: loads the shipped plant
//! definition and lowers it into solver inputs.

use std::path::Path;

use procsim_cli::{build, load_definition, PlantDefinition};
use procsim_core::{ComponentRegistry, Flowsheet, SolveOptions};

pub fn plant() -> (PlantDefinition, ComponentRegistry, Flowsheet, SolveOptions) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../definitions/pap_plant.json");
    let def = load_definition(&path).expect("shipped definition parses");
    let registry = build::build_registry(&def).expect("registry builds");
    let flowsheet = build::build_flowsheet(&def, &registry).expect("flowsheet builds");
    let options = build::solve_options(&def);
    (def, registry, flowsheet, options)
}
