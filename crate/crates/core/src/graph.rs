//! Scaling chain graphs and their secular function.
//!
//! A chain graph is determined by its bond reduced actions `L_i` (action per
//! unit wave number) and the reflection coefficients `r_j` of its internal
//! vertices; both end walls scatter with a fixed factor of -1. The secular
//! function is evaluated by propagating the real pair `(psi, psi'/kappa)`
//! across the chain with one 2x2 rotation per bond and a diagonal matching
//! step per vertex, then rescaling by a k-independent constant so that the
//! leading term of the trigonometric expansion has coefficient one.

use alloc::vec::Vec;
use core::fmt;

#[cfg(not(feature = "std"))]
use num_traits::Float as _;

/// Relative slack allowed when checking that Manhattan region widths sum to 1.
pub const WIDTH_SUM_TOL: f64 = 1e-12;

/// Errors from potential and chain construction.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphError {
    /// Step position must lie strictly inside (0, 1).
    StepPosition(f64),
    /// Scaling strength must lie in [0, 1); at 1 the local wave number
    /// vanishes and the reflection coefficient degenerates to 1.
    ScalingStrength(f64),
    /// A Manhattan region width was not strictly positive.
    WidthNotPositive { index: usize, width: f64 },
    /// Manhattan region widths must sum to 1.
    WidthSum(f64),
    /// widths and lambdas must have equal, nonzero length.
    LengthMismatch { widths: usize, lambdas: usize },
    /// A chain needs at least one bond.
    NoBonds,
    /// Bond reduced actions must be strictly positive and finite.
    BondAction { index: usize, action: f64 },
    /// Internal reflection coefficients must satisfy |r| < 1.
    Reflection { index: usize, value: f64 },
    /// A chain with m bonds has m-1 internal vertices.
    VertexCount { bonds: usize, vertices: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::StepPosition(b) => {
                write!(f, "step position b = {b} must lie strictly inside (0, 1)")
            }
            GraphError::ScalingStrength(l) => {
                write!(f, "scaling strength lambda = {l} must lie in [0, 1)")
            }
            GraphError::WidthNotPositive { index, width } => {
                write!(f, "region width {index} is {width}; widths must be > 0")
            }
            GraphError::WidthSum(sum) => {
                write!(f, "region widths sum to {sum}; expected 1")
            }
            GraphError::LengthMismatch { widths, lambdas } => {
                write!(f, "{widths} widths but {lambdas} scaling strengths")
            }
            GraphError::NoBonds => write!(f, "chain must have at least one bond"),
            GraphError::BondAction { index, action } => {
                write!(f, "bond action {index} is {action}; must be finite and > 0")
            }
            GraphError::Reflection { index, value } => {
                write!(f, "reflection coefficient {index} is {value}; must satisfy |r| < 1")
            }
            GraphError::VertexCount { bonds, vertices } => {
                write!(f, "{bonds}-bond chain needs {} internal vertices, got {vertices}", bonds - 1)
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Scaling step potential on the unit interval: V = 0 on (0, b) and
/// V = lambda * E on (b, 1), with hard walls at 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepPotentialSpec {
    b: f64,
    lambda: f64,
}

impl StepPotentialSpec {
    pub fn new(b: f64, lambda: f64) -> Result<Self, GraphError> {
        if !(b > 0.0 && b < 1.0) {
            return Err(GraphError::StepPosition(b));
        }
        if !(0.0..1.0).contains(&lambda) {
            return Err(GraphError::ScalingStrength(lambda));
        }
        Ok(Self { b, lambda })
    }

    pub fn step_position(&self) -> f64 {
        self.b
    }

    pub fn scaling_strength(&self) -> f64 {
        self.lambda
    }
}

/// Piecewise-constant ("Manhattan") scaling potential: m regions of the unit
/// interval with widths summing to 1, region i carrying V = lambda_i * E.
#[derive(Debug, Clone, PartialEq)]
pub struct ManhattanPotentialSpec {
    widths: Vec<f64>,
    lambdas: Vec<f64>,
}

impl ManhattanPotentialSpec {
    pub fn new(widths: Vec<f64>, lambdas: Vec<f64>) -> Result<Self, GraphError> {
        if widths.is_empty() || widths.len() != lambdas.len() {
            return Err(GraphError::LengthMismatch {
                widths: widths.len(),
                lambdas: lambdas.len(),
            });
        }
        for (index, &width) in widths.iter().enumerate() {
            if !(width > 0.0) || !width.is_finite() {
                return Err(GraphError::WidthNotPositive { index, width });
            }
        }
        let sum: f64 = widths.iter().sum();
        if (sum - 1.0).abs() > WIDTH_SUM_TOL {
            return Err(GraphError::WidthSum(sum));
        }
        for &lambda in &lambdas {
            if !(0.0..1.0).contains(&lambda) {
                return Err(GraphError::ScalingStrength(lambda));
            }
        }
        Ok(Self { widths, lambdas })
    }

    pub fn widths(&self) -> &[f64] {
        &self.widths
    }

    pub fn scaling_strengths(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn regions(&self) -> usize {
        self.widths.len()
    }
}

/// Linear chain graph: bond reduced actions, internal-vertex reflection
/// coefficients, and hard walls (scattering factor -1) at both ends.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainGraph {
    bond_actions: Vec<f64>,
    vertex_reflections: Vec<f64>,
}

impl ChainGraph {
    /// Scattering factor at each end wall. Fixed: a hard wall flips the sign
    /// of the wave function.
    pub const WALL_PHASE: f64 = -1.0;

    pub fn new(bond_actions: Vec<f64>, vertex_reflections: Vec<f64>) -> Result<Self, GraphError> {
        if bond_actions.is_empty() {
            return Err(GraphError::NoBonds);
        }
        if vertex_reflections.len() + 1 != bond_actions.len() {
            return Err(GraphError::VertexCount {
                bonds: bond_actions.len(),
                vertices: vertex_reflections.len(),
            });
        }
        for (index, &action) in bond_actions.iter().enumerate() {
            if !(action > 0.0) || !action.is_finite() {
                return Err(GraphError::BondAction { index, action });
            }
        }
        for (index, &value) in vertex_reflections.iter().enumerate() {
            if !(value.abs() < 1.0) {
                return Err(GraphError::Reflection { index, value });
            }
        }
        Ok(Self {
            bond_actions,
            vertex_reflections,
        })
    }

    pub fn bond_actions(&self) -> &[f64] {
        &self.bond_actions
    }

    pub fn vertex_reflections(&self) -> &[f64] {
        &self.vertex_reflections
    }

    /// Number of bonds m.
    pub fn bonds(&self) -> usize {
        self.bond_actions.len()
    }

    /// Total reduced action S0 = sum of all bond actions.
    pub fn total_action(&self) -> f64 {
        self.bond_actions.iter().sum()
    }
}

/// Build the two-bond chain equivalent to a scaling step potential:
/// L1 = b, L2 = beta (1 - b) and r = (1 - beta) / (1 + beta) with
/// beta = sqrt(1 - lambda).
pub fn chain_from_step(spec: &StepPotentialSpec) -> ChainGraph {
    let beta = (1.0 - spec.lambda).sqrt();
    let l1 = spec.b;
    let l2 = beta * (1.0 - spec.b);
    let r = (1.0 - beta) / (1.0 + beta);
    ChainGraph {
        bond_actions: [l1, l2].into(),
        vertex_reflections: [r].into(),
    }
}

/// Build the m-bond chain equivalent to a Manhattan potential:
/// L_i = beta_i * width_i and r_j = (beta_j - beta_{j+1}) / (beta_j + beta_{j+1}).
pub fn chain_from_manhattan(spec: &ManhattanPotentialSpec) -> ChainGraph {
    let betas: Vec<f64> = spec.lambdas.iter().map(|&l| (1.0 - l).sqrt()).collect();
    let bond_actions = betas
        .iter()
        .zip(&spec.widths)
        .map(|(beta, width)| beta * width)
        .collect();
    let vertex_reflections = betas
        .windows(2)
        .map(|pair| (pair[0] - pair[1]) / (pair[0] + pair[1]))
        .collect();
    ChainGraph {
        bond_actions,
        vertex_reflections,
    }
}

/// Evaluate the normalized secular function of the chain at wave number `k`.
///
/// The value is zero exactly at the eigenvalues. Propagation uses the state
/// `(psi, psi'/kappa)`: free evolution across bond i is a rotation by
/// `L_i k`, and matching at vertex j rescales the derivative component by
/// `(1 + r_j) / (1 - r_j)`. The product of `(1 - r_j)` restores the overall
/// normalization in which the leading trigonometric term `sin(S0 k)` carries
/// coefficient one, so for a two-bond chain the result equals
/// `sin(L k) - r sin((L1 - L2) k)`.
pub fn secular_value(chain: &ChainGraph, k: f64) -> f64 {
    let reflections = chain.vertex_reflections();
    // Hard wall on the left: psi = 0, free derivative scale.
    let mut psi = 0.0_f64;
    let mut slope = 1.0_f64;
    for (i, &action) in chain.bond_actions().iter().enumerate() {
        let (sin, cos) = (action * k).sin_cos();
        let next_psi = psi * cos + slope * sin;
        let next_slope = slope * cos - psi * sin;
        psi = next_psi;
        slope = next_slope;
        if let Some(&r) = reflections.get(i) {
            slope *= (1.0 + r) / (1.0 - r);
        }
    }
    let norm: f64 = reflections.iter().map(|r| 1.0 - r).product();
    psi * norm
}
