//! Steady-state, sequential-modular process flowsheet simulation plus a
//! techno-economic analysis engine.
//!
//! The crate is organised around a small number of building blocks:
//!
//! - [`props`]: component property database and constant-Cp enthalpy
//!   arithmetic shared by all unit operations.
//! - [`stream`]: the process stream type, the single currency every block
//!   consumes and produces.
//! - [`blocks`]: pure, single-pass unit-operation computations (mixer,
//!   splitter, component splitter, stoichiometric reactor, compressor,
//!   pump, heater).
//! - [`solver`]: flowsheet graph construction, tear-stream fixed-point
//!   convergence with optional Wegstein acceleration, and extraction of
//!   the converged stream table.
//! - [`vessel`]: pressure-vessel mechanical design (wall thickness,
//!   stresses, shell weight).
//! - [`econ`]: cost roll-ups, revenue, depreciation, lagged taxation,
//!   cash flow, payback, ROI, and loan amortization.
//!
//! Everything here is a pure function of its inputs; there is no global
//! state and all types are safe to share across threads once built.

pub mod blocks;
pub mod econ;
pub mod props;
pub mod solver;
pub mod stream;
pub mod vessel;

pub use blocks::{
    compress, conversion_split, mix, pump, react, set_temperature, split_components, split_stream,
    BlockError, CompressorSpec, OutletState, Reaction, ReactorSpec,
};
pub use props::{
    sensible_duty, stream_mass_flow, Component, ComponentRegistry, PropsError, JOULES_PER_CALORIE,
};
pub use solver::{
    solve, wegstein_step, Acceleration, Block, BlockKind, BuildError, Flowsheet, FlowsheetBuilder,
    SolveError, SolveOptions, SolveResult,
};
pub use stream::{Phase, Stream, StreamError};
pub use vessel::{
    design_pressure, shell_weight, stresses, wall_thickness, DesignPressureRule, VesselDesign,
    VesselError, VesselSpec,
};
