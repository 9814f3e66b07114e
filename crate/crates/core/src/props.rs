//! Component property database and constant-Cp enthalpy arithmetic.
//!
//! Heat capacities are molar (cal/(mol·K)) and treated as independent of
//! temperature and phase, so every duty is exactly linear in ΔT. Latent
//! heats are not modelled; phase labels on streams are annotations only.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::stream::Stream;

/// Thermochemical calorie, defined as 4.184 J exactly.
pub const JOULES_PER_CALORIE: f64 = 4.184;

/// Immutable physical data for one chemical species.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    /// kg/kmol
    pub molar_mass: f64,
    /// cal/(mol·K)
    pub cp_molar: f64,
    /// Normal boiling point, °C
    pub bp_normal: f64,
    /// g/cm³ at ambient conditions
    pub density: f64,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PropsError {
    #[error("unknown component `{0}`")]
    UnknownComponent(String),
    #[error("duplicate component `{0}` in registry")]
    DuplicateComponent(String),
    #[error("component `{name}`: {field} must be positive, got {value}")]
    NonPositiveProperty {
        name: String,
        field: &'static str,
        value: f64,
    },
    #[error(transparent)]
    InvalidStream(#[from] crate::stream::StreamError),
}

/// Ordered set of components; the index of a component in the registry is
/// the index of its flow in every [`Stream`].
#[derive(Debug, Clone, Default)]
pub struct ComponentRegistry {
    components: Vec<Component>,
}

impl ComponentRegistry {
    pub fn new(components: Vec<Component>) -> Result<Self, PropsError> {
        let mut seen = BTreeMap::new();
        for (i, c) in components.iter().enumerate() {
            if c.molar_mass <= 0.0 {
                return Err(PropsError::NonPositiveProperty {
                    name: c.name.clone(),
                    field: "molar_mass",
                    value: c.molar_mass,
                });
            }
            if c.cp_molar <= 0.0 {
                return Err(PropsError::NonPositiveProperty {
                    name: c.name.clone(),
                    field: "cp_molar",
                    value: c.cp_molar,
                });
            }
            if seen.insert(c.name.clone(), i).is_some() {
                return Err(PropsError::DuplicateComponent(c.name.clone()));
            }
        }
        Ok(ComponentRegistry { components })
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.components.iter().map(|c| c.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PropsError> {
        self.components
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| PropsError::UnknownComponent(name.to_string()))
    }

    /// Looks a component up by name.
    pub fn get(&self, name: &str) -> Result<&Component, PropsError> {
        self.index_of(name).map(|i| &self.components[i])
    }

    pub fn component(&self, index: usize) -> &Component {
        &self.components[index]
    }

    /// Converts a name-keyed map into a dense vector aligned with the
    /// registry order. Missing entries take `default`.
    pub fn dense_from_map(
        &self,
        map: &BTreeMap<String, f64>,
        default: f64,
    ) -> Result<Vec<f64>, PropsError> {
        let mut dense = vec![default; self.components.len()];
        for (name, &value) in map {
            dense[self.index_of(name)?] = value;
        }
        Ok(dense)
    }

    /// Builds a [`Stream`] from a name-keyed composition map.
    pub fn stream_from_map(
        &self,
        flows: &BTreeMap<String, f64>,
        temperature: f64,
        pressure: f64,
        phase: crate::stream::Phase,
    ) -> Result<Stream, PropsError> {
        let dense = self.dense_from_map(flows, 0.0)?;
        Ok(Stream::new(dense, temperature, pressure, phase)?)
    }
}

/// Heat-capacity flow rate of a stream, cal/(s·K): Σᵢ nᵢ·Cpᵢ with
/// kmol/h → mol/s conversion folded in.
pub fn heat_capacity_rate(stream: &Stream, registry: &ComponentRegistry) -> f64 {
    debug_assert_eq!(stream.n_components(), registry.len());
    stream
        .flows()
        .iter()
        .zip(registry.components())
        .map(|(n, c)| n * c.cp_molar)
        .sum::<f64>()
        * 1000.0
        / 3600.0
}

/// Sensible heat duty to take `stream` from its own temperature to
/// `t_target`, in cal/s. Positive for heating, negative for cooling;
/// exactly linear in ΔT.
pub fn sensible_duty(stream: &Stream, t_target: f64, registry: &ComponentRegistry) -> f64 {
    heat_capacity_rate(stream, registry) * (t_target - stream.temperature)
}

/// Total mass flow Σᵢ nᵢ·Mᵢ, kg/h.
pub fn stream_mass_flow(stream: &Stream, registry: &ComponentRegistry) -> f64 {
    debug_assert_eq!(stream.n_components(), registry.len());
    stream
        .flows()
        .iter()
        .zip(registry.components())
        .map(|(n, c)| n * c.molar_mass)
        .sum()
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;

    /// Registry for the p-aminophenol plant used across the test suite.
    pub fn pap_registry() -> ComponentRegistry {
        ComponentRegistry::new(vec![
            Component {
                name: "Nitrobenzene".into(),
                molar_mass: 123.11,
                cp_molar: 44.0,
                bp_normal: 210.9,
                density: 1.2,
            },
            Component {
                name: "Hydrogen".into(),
                molar_mass: 2.016,
                cp_molar: 6.85,
                bp_normal: -252.9,
                density: 0.089,
            },
            Component {
                name: "Para-Aminophenol".into(),
                molar_mass: 109.13,
                cp_molar: 45.6,
                bp_normal: 284.0,
                density: 1.13,
            },
            Component {
                name: "Water".into(),
                molar_mass: 18.01,
                cp_molar: 18.0,
                bp_normal: 100.0,
                density: 0.998,
            },
            Component {
                name: "Aniline".into(),
                molar_mass: 93.13,
                cp_molar: 46.2,
                bp_normal: 184.1,
                density: 1.02,
            },
        ])
        .unwrap()
    }

    pub const NB: usize = 0;
    pub const H2: usize = 1;
    pub const PAP: usize = 2;
    pub const WATER: usize = 3;
    pub const ANILINE: usize = 4;
}

#[cfg(test)]
mod tests {
    use super::test_fixtures::*;
    use super::*;
    use crate::stream::Phase;

    #[test]
    fn get_component_returns_table_values() {
        let reg = pap_registry();
        let nb = reg.get("Nitrobenzene").unwrap();
        assert_eq!(nb.molar_mass, 123.11);
        assert_eq!(nb.cp_molar, 44.0);
        assert_eq!(nb.bp_normal, 210.9);
        let h2 = reg.get("Hydrogen").unwrap();
        assert_eq!(h2.molar_mass, 2.016);
        assert_eq!(h2.cp_molar, 6.85);
    }

    #[test]
    fn get_component_unknown_name_errors() {
        let reg = pap_registry();
        assert_eq!(
            reg.get("Xenon").unwrap_err(),
            PropsError::UnknownComponent("Xenon".into())
        );
    }

    #[test]
    fn registry_rejects_duplicates_and_bad_values() {
        let good = Component {
            name: "A".into(),
            molar_mass: 1.0,
            cp_molar: 1.0,
            bp_normal: 0.0,
            density: 1.0,
        };
        let dup = ComponentRegistry::new(vec![good.clone(), good.clone()]);
        assert!(matches!(dup, Err(PropsError::DuplicateComponent(_))));
        let bad = ComponentRegistry::new(vec![Component {
            molar_mass: 0.0,
            ..good
        }]);
        assert!(matches!(bad, Err(PropsError::NonPositiveProperty { .. })));
    }

    /// Σ nᵢCpᵢΔT oracle for the reactor feed preheat: expected value summed
    /// by hand from the property table.
    #[test]
    fn sensible_duty_reactor_feed_preheat() {
        let reg = pap_registry();
        let mut flows = vec![0.0; reg.len()];
        flows[NB] = 54.082;
        flows[PAP] = 0.097;
        flows[ANILINE] = 1.558;
        let s = Stream::new(flows, 47.791, 4.0, Phase::Liquid).unwrap();
        let duty = sensible_duty(&s, 85.0, &reg);
        // hand sum: (54.082*44 + 0.097*45.6 + 1.558*46.2) * 1000/3600 * 37.209
        let ncp = 54.082 * 44.0 + 0.097 * 45.6 + 1.558 * 46.2;
        let expected = ncp * 1000.0 / 3600.0 * (85.0 - 47.791);
        assert!((duty - expected).abs() < 1e-9);
        assert!((duty - 2.54e4).abs() / 2.54e4 < 0.01);
        // simulated exchanger duty for the same service: 27760.39 cal/s;
        // the constant-Cp model must land within 15%
        assert!((duty - 27_760.39).abs() / 27_760.39 < 0.15);
    }

    #[test]
    fn sensible_duty_zero_delta_t_is_zero() {
        let reg = pap_registry();
        let mut flows = vec![0.0; reg.len()];
        flows[WATER] = 3.0;
        let s = Stream::new(flows, 42.0, 1.0, Phase::Liquid).unwrap();
        assert_eq!(sensible_duty(&s, 42.0, &reg), 0.0);
    }

    #[test]
    fn sensible_duty_one_kmol_water_one_kelvin() {
        let reg = pap_registry();
        let mut flows = vec![0.0; reg.len()];
        flows[WATER] = 1.0;
        let s = Stream::new(flows, 25.0, 1.0, Phase::Liquid).unwrap();
        // 1 kmol/h * 18 cal/(mol K) * 1 K = 18000 cal/h = 5 cal/s
        assert!((sensible_duty(&s, 26.0, &reg) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn mass_flow_matches_stream_table() {
        let reg = pap_registry();
        let mut flows = vec![0.0; reg.len()];
        flows[NB] = 35.0;
        let s1 = Stream::new(flows, 25.0, 1.0, Phase::Liquid).unwrap();
        let m = stream_mass_flow(&s1, &reg);
        assert!((m - 4308.85).abs() < 1e-9);
        assert!((m - 4308.893).abs() / 4308.893 < 0.001);

        let mut flows = vec![0.0; reg.len()];
        flows[H2] = 93.0;
        let s2 = Stream::new(flows, 30.0, 1.0, Phase::Vapor).unwrap();
        let m2 = stream_mass_flow(&s2, &reg);
        assert!((m2 - 187.488).abs() < 1e-9);
        assert!((m2 - 187.48).abs() / 187.48 < 0.001);
    }

    #[test]
    fn mass_flow_empty_stream_is_zero() {
        let reg = pap_registry();
        let s = Stream::zeroed(reg.len(), 25.0, 1.0, Phase::Liquid);
        assert_eq!(stream_mass_flow(&s, &reg), 0.0);
    }

    #[test]
    fn duty_is_antisymmetric_in_endpoints() {
        let reg = pap_registry();
        let mut flows = vec![0.0; reg.len()];
        flows[NB] = 3.25;
        flows[WATER] = 1.5;
        let at_t1 = Stream::new(flows.clone(), 40.0, 2.0, Phase::Liquid).unwrap();
        let at_t2 = Stream::new(flows, 95.0, 2.0, Phase::Liquid).unwrap();
        let forward = sensible_duty(&at_t1, 95.0, &reg);
        let backward = sensible_duty(&at_t2, 40.0, &reg);
        assert!((forward + backward).abs() < 1e-9);
    }
}
