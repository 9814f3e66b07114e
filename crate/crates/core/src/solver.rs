//! Flowsheet graph construction and tear-stream fixed-point convergence.
//!
//! A flowsheet is a directed graph of blocks joined by named streams.
//! Recycle loops are broken at user-designated tear streams; removing the
//! tear edges must leave the graph acyclic. One solver iteration sweeps
//! every block once in topological order of the torn graph, reading tear
//! streams from the current guess, and the guessed/computed tear values
//! are driven to a fixed point by direct substitution or bounded Wegstein
//! acceleration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::blocks::{self, BlockError, CompressorSpec, OutletState, ReactorSpec};
use crate::props::ComponentRegistry;
use crate::stream::{Phase, Stream};

/// A typed unit operation with its parameters.
#[derive(Debug, Clone)]
pub enum BlockKind {
    Mixer,
    /// First outlet keeps `phi` of every component.
    Splitter {
        phi: f64,
    },
    /// First outlet is the top product.
    ComponentSplitter {
        to_top: Vec<f64>,
        top: OutletState,
        bottom: OutletState,
    },
    Reactor(ReactorSpec),
    Compressor(CompressorSpec),
    Pump {
        p_out: f64,
    },
    Heater {
        t_out: f64,
        p_out: f64,
        phase: Phase,
    },
}

impl BlockKind {
    pub fn name(&self) -> &'static str {
        match self {
            BlockKind::Mixer => "mixer",
            BlockKind::Splitter { .. } => "splitter",
            BlockKind::ComponentSplitter { .. } => "component_splitter",
            BlockKind::Reactor(_) => "reactor",
            BlockKind::Compressor(_) => "compressor",
            BlockKind::Pump { .. } => "pump",
            BlockKind::Heater { .. } => "heater",
        }
    }

    /// (min inlets, max inlets, outlets) for port-count validation.
    fn port_shape(&self) -> (usize, usize, usize) {
        match self {
            BlockKind::Mixer => (1, usize::MAX, 1),
            BlockKind::Splitter { .. } => (1, 1, 2),
            BlockKind::ComponentSplitter { .. } => (1, 1, 2),
            BlockKind::Reactor(_) => (1, usize::MAX, 1),
            BlockKind::Compressor(_) => (1, 1, 1),
            BlockKind::Pump { .. } => (1, 1, 1),
            BlockKind::Heater { .. } => (1, 1, 1),
        }
    }
}

/// One placed unit operation: a kind plus the stream ids on its ports.
#[derive(Debug, Clone)]
pub struct Block {
    pub id: String,
    pub kind: BlockKind,
    pub inlets: Vec<String>,
    pub outlets: Vec<String>,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BuildError {
    #[error("duplicate block id `{0}`")]
    DuplicateBlockId(String),
    #[error("block `{block}` ({kind}) expects {expected} and has {actual}")]
    PortCountMismatch {
        block: String,
        kind: &'static str,
        expected: String,
        actual: String,
    },
    #[error("stream `{stream}` has more than one producer: {first} and {second}")]
    DuplicateStreamProducer {
        stream: String,
        first: String,
        second: String,
    },
    #[error("stream `{stream}` consumed by both `{first}` and `{second}`")]
    DuplicateStreamConsumer {
        stream: String,
        first: String,
        second: String,
    },
    #[error("block `{block}` reads stream `{stream}` which nothing produces")]
    DanglingPort { block: String, stream: String },
    #[error("tear stream `{0}` does not exist in the flowsheet")]
    UnknownTearStream(String),
    #[error("tear stream `{0}` is a feed; feeds are fixed, not iterated")]
    TearIsFeed(String),
    #[error("duplicate tear stream `{0}`")]
    DuplicateTear(String),
    #[error("cycle remains after removing tear streams: {}", .blocks.join(" -> "))]
    CyclicWithoutTear { blocks: Vec<String> },
}

/// All problems found while assembling a flowsheet, reported together.
#[derive(Debug, Clone)]
pub struct BuildErrors(pub Vec<BuildError>);

impl fmt::Display for BuildErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for BuildErrors {}

/// Builder collecting feeds, blocks and tears before graph validation.
#[derive(Debug, Default)]
pub struct FlowsheetBuilder {
    blocks: Vec<Block>,
    feeds: BTreeMap<String, Stream>,
    tears: Vec<String>,
}

impl FlowsheetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn feed(mut self, stream_id: impl Into<String>, stream: Stream) -> Self {
        self.feeds.insert(stream_id.into(), stream);
        self
    }

    pub fn block(
        mut self,
        id: impl Into<String>,
        kind: BlockKind,
        inlets: &[&str],
        outlets: &[&str],
    ) -> Self {
        self.blocks.push(Block {
            id: id.into(),
            kind,
            inlets: inlets.iter().map(|s| s.to_string()).collect(),
            outlets: outlets.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn tear(mut self, stream_id: impl Into<String>) -> Self {
        self.tears.push(stream_id.into());
        self
    }

    /// Validates the graph and computes the deterministic evaluation
    /// order. Every problem found is reported, not just the first.
    pub fn build(self) -> Result<Flowsheet, BuildErrors> {
        let FlowsheetBuilder {
            blocks,
            feeds,
            tears,
        } = self;
        let mut errors = Vec::new();

        let mut ids = BTreeSet::new();
        for b in &blocks {
            if !ids.insert(b.id.clone()) {
                errors.push(BuildError::DuplicateBlockId(b.id.clone()));
            }
            let (min_in, max_in, n_out) = b.kind.port_shape();
            if b.inlets.len() < min_in || b.inlets.len() > max_in || b.outlets.len() != n_out {
                let expected = if max_in == usize::MAX {
                    format!(">={min_in} inlet(s) and {n_out} outlet(s)")
                } else {
                    format!("{min_in} inlet(s) and {n_out} outlet(s)")
                };
                errors.push(BuildError::PortCountMismatch {
                    block: b.id.clone(),
                    kind: b.kind.name(),
                    expected,
                    actual: format!(
                        "{} inlet(s) and {} outlet(s)",
                        b.inlets.len(),
                        b.outlets.len()
                    ),
                });
            }
        }

        // Producers: feeds count as producers of their stream id.
        let mut producer: BTreeMap<&str, &str> = BTreeMap::new();
        for id in feeds.keys() {
            producer.insert(id.as_str(), "<feed>");
        }
        for b in &blocks {
            for out in &b.outlets {
                if let Some(first) = producer.insert(out.as_str(), b.id.as_str()) {
                    errors.push(BuildError::DuplicateStreamProducer {
                        stream: out.clone(),
                        first: first.to_string(),
                        second: b.id.clone(),
                    });
                }
            }
        }

        let mut consumer: BTreeMap<&str, &str> = BTreeMap::new();
        for b in &blocks {
            for inlet in &b.inlets {
                if !producer.contains_key(inlet.as_str()) {
                    errors.push(BuildError::DanglingPort {
                        block: b.id.clone(),
                        stream: inlet.clone(),
                    });
                }
                if let Some(first) = consumer.insert(inlet.as_str(), b.id.as_str()) {
                    errors.push(BuildError::DuplicateStreamConsumer {
                        stream: inlet.clone(),
                        first: first.to_string(),
                        second: b.id.clone(),
                    });
                }
            }
        }

        let mut seen_tears = BTreeSet::new();
        for t in &tears {
            if feeds.contains_key(t) {
                errors.push(BuildError::TearIsFeed(t.clone()));
            } else if !producer.contains_key(t.as_str()) {
                errors.push(BuildError::UnknownTearStream(t.clone()));
            }
            if !seen_tears.insert(t.clone()) {
                errors.push(BuildError::DuplicateTear(t.clone()));
            }
        }

        let order = match evaluation_order(&blocks, &tears) {
            Ok(order) => order,
            Err(e) => {
                errors.push(e);
                Vec::new()
            }
        };

        if errors.is_empty() {
            Ok(Flowsheet {
                blocks,
                feeds,
                tears,
                order,
            })
        } else {
            Err(BuildErrors(errors))
        }
    }
}

/// Kahn's algorithm over the torn graph; ready blocks are taken in
/// definition order so the result is deterministic. A leftover cycle is
/// extracted and reported by block id.
fn evaluation_order(blocks: &[Block], tears: &[String]) -> Result<Vec<usize>, BuildError> {
    let torn: BTreeSet<&str> = tears.iter().map(String::as_str).collect();
    let produced_by: BTreeMap<&str, usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(i, b)| b.outlets.iter().map(move |o| (o.as_str(), i)))
        .collect();

    let n = blocks.len();
    let mut successors = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for (i, b) in blocks.iter().enumerate() {
        for inlet in &b.inlets {
            if torn.contains(inlet.as_str()) {
                continue;
            }
            if let Some(&src) = produced_by.get(inlet.as_str()) {
                successors[src].push(i);
                indegree[i] += 1;
            }
        }
    }

    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    while let Some(next) = (0..n).find(|&i| !done[i] && indegree[i] == 0) {
        done[next] = true;
        order.push(next);
        for &succ in &successors[next] {
            indegree[succ] -= 1;
        }
    }

    if order.len() == n {
        return Ok(order);
    }

    // Name the cycle. Every leftover block still has an unfinished
    // predecessor (its indegree never reached zero), so walking the
    // predecessor chain from any leftover block must revisit one.
    let mut predecessors = vec![Vec::new(); n];
    for (src, succs) in successors.iter().enumerate() {
        for &dst in succs {
            predecessors[dst].push(src);
        }
    }
    let start = (0..n).find(|&i| !done[i]).expect("cycle exists");
    let mut path = vec![start];
    let mut seen = BTreeSet::from([start]);
    let mut current = start;
    loop {
        let next = predecessors[current]
            .iter()
            .copied()
            .find(|&p| !done[p])
            .expect("leftover block has an unfinished predecessor");
        if !seen.insert(next) {
            let pos = path.iter().position(|&b| b == next).unwrap();
            // the predecessor walk records the cycle backwards
            let cycle = path[pos..]
                .iter()
                .rev()
                .map(|&i| blocks[i].id.clone())
                .collect();
            return Err(BuildError::CyclicWithoutTear { blocks: cycle });
        }
        path.push(next);
        current = next;
    }
}

/// Directed graph of blocks and streams with designated feeds and tears.
#[derive(Debug, Clone)]
pub struct Flowsheet {
    blocks: Vec<Block>,
    feeds: BTreeMap<String, Stream>,
    tears: Vec<String>,
    order: Vec<usize>,
}

impl Flowsheet {
    pub fn builder() -> FlowsheetBuilder {
        FlowsheetBuilder::new()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn feeds(&self) -> &BTreeMap<String, Stream> {
        &self.feeds
    }

    pub fn tears(&self) -> &[String] {
        &self.tears
    }

    /// Block ids in deterministic evaluation order.
    pub fn evaluation_order(&self) -> Vec<&str> {
        self.order
            .iter()
            .map(|&i| self.blocks[i].id.as_str())
            .collect()
    }

    /// Stream ids that no block consumes (plant products and purges).
    pub fn product_streams(&self) -> Vec<&str> {
        let consumed: BTreeSet<&str> = self
            .blocks
            .iter()
            .flat_map(|b| b.inlets.iter().map(String::as_str))
            .collect();
        let mut out: Vec<&str> = self
            .blocks
            .iter()
            .flat_map(|b| b.outlets.iter().map(String::as_str))
            .filter(|s| !consumed.contains(s))
            .collect();
        out.sort_unstable();
        out
    }

    /// Every stream id defined by the flowsheet: feeds plus block outlets.
    pub fn stream_ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.feeds.keys().map(String::as_str).collect();
        ids.extend(
            self.blocks
                .iter()
                .flat_map(|b| b.outlets.iter().map(String::as_str)),
        );
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// Fixed-point update scheme for the tear iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Acceleration {
    Direct,
    #[default]
    Wegstein,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Convergence tolerance on per-component tear flows, kmol/h.
    pub tolerance: f64,
    /// Convergence tolerance on tear temperatures, °C.
    pub temp_tolerance: f64,
    pub max_iterations: usize,
    pub acceleration: Acceleration,
    /// Clamp bounds for the Wegstein acceleration factor q.
    pub wegstein_q_bounds: (f64, f64),
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            tolerance: 1e-6,
            temp_tolerance: 0.01,
            max_iterations: 500,
            acceleration: Acceleration::Wegstein,
            wegstein_q_bounds: (-5.0, 0.0),
        }
    }
}

/// Converged (or best-effort) stream table plus solver bookkeeping.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub streams: BTreeMap<String, Stream>,
    pub iterations: usize,
    pub converged: bool,
    /// Max-norm residual of the stacked tear vector, one entry per sweep.
    pub residual_history: Vec<f64>,
    /// Heater duties by block id, cal/s.
    pub block_duties: BTreeMap<String, f64>,
    /// Compressor shaft powers by block id, kW.
    pub block_powers: BTreeMap<String, f64>,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("invalid solve options: {0}")]
    InvalidOptions(String),
    #[error("block `{block}` failed: {source}")]
    Block { block: String, source: BlockError },
    #[error("no convergence after {} iterations (last residual {:.3e})",
            .0.iterations, .0.residual_history.last().copied().unwrap_or(f64::NAN))]
    NotConverged(Box<SolveResult>),
}

/// One bounded Wegstein update from the last two iterates. Per
/// coordinate: slope s = (g₂−g₁)/(x₂−x₁) where the denominator exceeds
/// 1e-12 in magnitude, else s = 0; q = s/(s−1) clamped to `bounds`; the
/// next iterate is q·x₂ + (1−q)·g₂. Degenerate coordinates fall back to
/// direct substitution (q = 0).
pub fn wegstein_step(
    x_prev: &[f64],
    g_prev: &[f64],
    x_curr: &[f64],
    g_curr: &[f64],
    bounds: (f64, f64),
) -> Vec<f64> {
    debug_assert_eq!(x_prev.len(), x_curr.len());
    debug_assert_eq!(g_prev.len(), g_curr.len());
    let (q_low, q_high) = bounds;
    x_curr
        .iter()
        .zip(x_prev)
        .zip(g_curr.iter().zip(g_prev))
        .map(|((&x2, &x1), (&g2, &g1))| {
            let dx = x2 - x1;
            let s = if dx.abs() > 1e-12 {
                (g2 - g1) / dx
            } else {
                0.0
            };
            let q = if (s - 1.0).abs() > 1e-12 {
                (s / (s - 1.0)).clamp(q_low, q_high)
            } else {
                0.0
            };
            q * x2 + (1.0 - q) * g2
        })
        .collect()
}

struct TearLayout {
    n_components: usize,
}

impl TearLayout {
    fn width(&self) -> usize {
        self.n_components + 1
    }

    fn to_vector(&self, tears: &[Stream]) -> Vec<f64> {
        let mut v = Vec::with_capacity(tears.len() * self.width());
        for t in tears {
            v.extend_from_slice(t.flows());
            v.push(t.temperature);
        }
        v
    }

    /// Rebuilds tear streams from an iterate vector. Pressures and phase
    /// labels are not iterated: they are structurally fixed by blocks, so
    /// they are copied from the produced streams. Small negative flows
    /// introduced by extrapolation are clamped to zero.
    fn to_streams(&self, vector: &[f64], produced: &[Stream]) -> Vec<Stream> {
        vector
            .chunks(self.width())
            .zip(produced)
            .map(|(chunk, template)| {
                let mut s = template.clone();
                for (flow, &v) in s.flows_mut().iter_mut().zip(chunk) {
                    *flow = v.max(0.0);
                }
                s.temperature = chunk[self.n_components];
                s
            })
            .collect()
    }
}

struct Sweep {
    streams: BTreeMap<String, Stream>,
    duties: BTreeMap<String, f64>,
    powers: BTreeMap<String, f64>,
    tear_outputs: Vec<Stream>,
}

fn sweep(
    flowsheet: &Flowsheet,
    registry: &ComponentRegistry,
    tear_guess: &[Stream],
) -> Result<Sweep, SolveError> {
    let tear_ids: BTreeMap<&str, usize> = flowsheet
        .tears
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_str(), i))
        .collect();

    let mut streams: BTreeMap<String, Stream> = flowsheet.feeds.clone();
    let mut duties = BTreeMap::new();
    let mut powers = BTreeMap::new();

    for &bidx in &flowsheet.order {
        let block = &flowsheet.blocks[bidx];
        let inlet_streams: Vec<Stream> = block
            .inlets
            .iter()
            .map(|id| {
                if let Some(&t) = tear_ids.get(id.as_str()) {
                    tear_guess[t].clone()
                } else {
                    streams
                        .get(id)
                        .cloned()
                        .expect("validated flowsheet evaluates producers first")
                }
            })
            .collect();

        let fail = |source: BlockError| SolveError::Block {
            block: block.id.clone(),
            source,
        };

        match &block.kind {
            BlockKind::Mixer => {
                let out = blocks::mix(&inlet_streams, registry).map_err(fail)?;
                streams.insert(block.outlets[0].clone(), out);
            }
            BlockKind::Splitter { phi } => {
                let (kept, rejected) =
                    blocks::split_stream(&inlet_streams[0], *phi).map_err(fail)?;
                streams.insert(block.outlets[0].clone(), kept);
                streams.insert(block.outlets[1].clone(), rejected);
            }
            BlockKind::ComponentSplitter {
                to_top,
                top,
                bottom,
            } => {
                let (t, b) =
                    blocks::split_components(&inlet_streams[0], to_top, *top, *bottom, registry)
                        .map_err(fail)?;
                streams.insert(block.outlets[0].clone(), t);
                streams.insert(block.outlets[1].clone(), b);
            }
            BlockKind::Reactor(spec) => {
                let feed = blocks::mix(&inlet_streams, registry).map_err(fail)?;
                let out = blocks::react(&feed, spec, registry).map_err(fail)?;
                streams.insert(block.outlets[0].clone(), out);
            }
            BlockKind::Compressor(spec) => {
                let (out, power) =
                    blocks::compress(&inlet_streams[0], spec, registry).map_err(fail)?;
                powers.insert(block.id.clone(), power);
                streams.insert(block.outlets[0].clone(), out);
            }
            BlockKind::Pump { p_out } => {
                let out = blocks::pump(&inlet_streams[0], *p_out).map_err(fail)?;
                streams.insert(block.outlets[0].clone(), out);
            }
            BlockKind::Heater {
                t_out,
                p_out,
                phase,
            } => {
                let (out, duty) =
                    blocks::set_temperature(&inlet_streams[0], *t_out, *p_out, *phase, registry);
                duties.insert(block.id.clone(), duty);
                streams.insert(block.outlets[0].clone(), out);
            }
        }
    }

    let tear_outputs = flowsheet
        .tears
        .iter()
        .map(|t| streams.get(t).expect("tear streams are produced").clone())
        .collect();

    Ok(Sweep {
        streams,
        duties,
        powers,
        tear_outputs,
    })
}

/// Solves the flowsheet from zero-initialized tears (all flows zero).
pub fn solve(
    flowsheet: &Flowsheet,
    options: &SolveOptions,
    registry: &ComponentRegistry,
) -> Result<SolveResult, SolveError> {
    let init = flowsheet
        .tears
        .iter()
        .map(|_| Stream::zeroed(registry.len(), 0.0, 1.0, Phase::Mixed))
        .collect::<Vec<_>>();
    solve_with_initial_tears(flowsheet, options, registry, &init)
}

/// Solves the flowsheet starting the tear iteration from caller-supplied
/// stream values (one per tear, in tear order).
pub fn solve_with_initial_tears(
    flowsheet: &Flowsheet,
    options: &SolveOptions,
    registry: &ComponentRegistry,
    initial_tears: &[Stream],
) -> Result<SolveResult, SolveError> {
    if options.tolerance <= 0.0 {
        return Err(SolveError::InvalidOptions(
            "tolerance must be positive".into(),
        ));
    }
    if options.max_iterations == 0 {
        return Err(SolveError::InvalidOptions(
            "max_iterations must be at least 1".into(),
        ));
    }
    if options.wegstein_q_bounds.0 >= options.wegstein_q_bounds.1 {
        return Err(SolveError::InvalidOptions(
            "wegstein q bounds must satisfy low < high".into(),
        ));
    }
    assert_eq!(
        initial_tears.len(),
        flowsheet.tears.len(),
        "one initial stream per tear"
    );
    for tear in initial_tears {
        assert_eq!(
            tear.n_components(),
            registry.len(),
            "initial tear streams must span the registry"
        );
    }

    let layout = TearLayout {
        n_components: registry.len(),
    };
    let mut tears: Vec<Stream> = initial_tears.to_vec();
    let mut residual_history = Vec::new();
    let mut prev_pair: Option<(Vec<f64>, Vec<f64>)> = None;

    for iteration in 1..=options.max_iterations {
        let result = sweep(flowsheet, registry, &tears)?;

        let mut flow_residual = 0.0_f64;
        let mut temp_residual = 0.0_f64;
        for (guess, output) in tears.iter().zip(&result.tear_outputs) {
            for (x, g) in guess.flows().iter().zip(output.flows()) {
                flow_residual = flow_residual.max((g - x).abs());
            }
            temp_residual = temp_residual.max((output.temperature - guess.temperature).abs());
        }
        residual_history.push(flow_residual.max(temp_residual));

        if flow_residual <= options.tolerance && temp_residual <= options.temp_tolerance {
            return Ok(SolveResult {
                streams: result.streams,
                iterations: iteration,
                converged: true,
                residual_history,
                block_duties: result.duties,
                block_powers: result.powers,
            });
        }

        if iteration == options.max_iterations {
            return Err(SolveError::NotConverged(Box::new(SolveResult {
                streams: result.streams,
                iterations: iteration,
                converged: false,
                residual_history,
                block_duties: result.duties,
                block_powers: result.powers,
            })));
        }

        let x_curr = layout.to_vector(&tears);
        let g_curr = layout.to_vector(&result.tear_outputs);
        // First two updates are direct substitution; Wegstein needs two
        // prior (x, g) pairs.
        let next = match (options.acceleration, &prev_pair) {
            (Acceleration::Wegstein, Some((x_prev, g_prev))) if iteration >= 3 => {
                wegstein_step(x_prev, g_prev, &x_curr, &g_curr, options.wegstein_q_bounds)
            }
            _ => g_curr.clone(),
        };
        tears = layout.to_streams(&next, &result.tear_outputs);
        prev_pair = Some((x_curr, g_curr));
    }

    unreachable!("loop returns on convergence or at max_iterations")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wegstein_step_linear_map_lands_exactly() {
        // g(x) = 0.5x + 100 from x = 0: two direct steps give
        // (x, g) = (100, 150) then (150, 175); one Wegstein step is exact.
        let next = wegstein_step(&[100.0], &[150.0], &[150.0], &[175.0], (-5.0, 0.0));
        assert_eq!(next, vec![200.0]);
    }

    #[test]
    fn wegstein_step_converged_point_is_fixed() {
        let next = wegstein_step(&[7.0], &[7.0], &[7.0], &[7.0], (-5.0, 0.0));
        assert_eq!(next, vec![7.0]);
    }

    #[test]
    fn wegstein_step_clamps_q() {
        // slope 0.9 gives q = -9, clamped to -5:
        // next = -5*x2 + 6*g2
        let next = wegstein_step(&[0.0], &[10.0], &[10.0], &[19.0], (-5.0, 0.0));
        assert!((next[0] - (-5.0 * 10.0 + 6.0 * 19.0)).abs() < 1e-12);
        // divergent slope (s > 1) clamps to q_high = 0, i.e. direct
        let next = wegstein_step(&[0.0], &[10.0], &[10.0], &[30.0], (-5.0, 0.0));
        assert_eq!(next, vec![30.0]);
    }
}
