//! Process streams: per-component molar flows plus a thermodynamic state
//! label. Flows are stored densely, indexed by component position in the
//! [`ComponentRegistry`](crate::props::ComponentRegistry) the flowsheet was
//! built against.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Phase label carried by a stream. Labels are annotations set by block
/// parameters; they never enter an energy balance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Phase {
    Liquid,
    Vapor,
    Mixed,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::Liquid => write!(f, "Liquid"),
            Phase::Vapor => write!(f, "Vapor"),
            Phase::Mixed => write!(f, "Mixed"),
        }
    }
}

impl FromStr for Phase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Liquid" => Ok(Phase::Liquid),
            "Vapor" => Ok(Phase::Vapor),
            "Mixed" => Ok(Phase::Mixed),
            other => Err(format!("unknown phase label `{other}`")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StreamError {
    #[error("component flow at index {index} is negative ({value})")]
    NegativeFlow { index: usize, value: f64 },
    #[error("component flow at index {index} is not finite")]
    NonFiniteFlow { index: usize },
    #[error("stream pressure must be positive, got {0} bar")]
    NonPositivePressure(f64),
}

/// A material stream: molar flows in kmol/h per registry component,
/// temperature in °C, absolute pressure in bar, and a phase label.
#[derive(Debug, Clone, PartialEq)]
pub struct Stream {
    flows: Vec<f64>,
    pub temperature: f64,
    pub pressure: f64,
    pub phase: Phase,
}

impl Stream {
    /// Builds a stream, enforcing non-negative finite flows and positive
    /// pressure.
    pub fn new(
        flows: Vec<f64>,
        temperature: f64,
        pressure: f64,
        phase: Phase,
    ) -> Result<Self, StreamError> {
        for (index, &value) in flows.iter().enumerate() {
            if !value.is_finite() {
                return Err(StreamError::NonFiniteFlow { index });
            }
            if value < 0.0 {
                return Err(StreamError::NegativeFlow { index, value });
            }
        }
        if pressure.is_nan() || pressure <= 0.0 {
            return Err(StreamError::NonPositivePressure(pressure));
        }
        Ok(Stream {
            flows,
            temperature,
            pressure,
            phase,
        })
    }

    /// An all-zero stream over `n_components` components.
    pub fn zeroed(n_components: usize, temperature: f64, pressure: f64, phase: Phase) -> Self {
        Stream {
            flows: vec![0.0; n_components],
            temperature,
            pressure,
            phase,
        }
    }

    pub fn flows(&self) -> &[f64] {
        &self.flows
    }

    pub fn flow(&self, component: usize) -> f64 {
        self.flows[component]
    }

    pub fn n_components(&self) -> usize {
        self.flows.len()
    }

    /// Total molar flow, kmol/h. Always derived, never stored.
    pub fn total_molar_flow(&self) -> f64 {
        self.flows.iter().sum()
    }

    pub(crate) fn with_flows(&self, flows: Vec<f64>) -> Stream {
        Stream {
            flows,
            ..self.clone()
        }
    }

    pub(crate) fn flows_mut(&mut self) -> &mut [f64] {
        &mut self.flows
    }
}
