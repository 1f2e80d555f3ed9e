//! Explicit periodic-orbit expansion for individual eigenvalues.
//!
//! Weighting the orbit expansion of the density of states by k and
//! integrating across one separator interval turns the delta comb into an
//! explicit formula for the single eigenvalue inside:
//!
//! ```text
//! k_n = khat_n - pi/(2 S0)
//!     - (1/pi) Re sum_p sum_nu (A_p^nu e^{i nu S_p khat_n} / nu)
//!       { (1 - e^{-i nu w_p}) (i khat_n - 1/(nu S_p)) + (i pi/S0) e^{-i nu w_p} },
//! ```
//!
//! with `w_p = pi S_p / S0`; the lower integration limit `khat_{n-1}` is
//! encoded in the `e^{-i nu w_p}` factors since the interval width is
//! exactly `pi/S0`. Truncation keeps every `(p, nu)` with
//! `nu * n_p <= max_events`. Terms accumulate with compensated summation in
//! a fixed canonical order (total events, then code, then repetition), so
//! results are reproducible bit-for-bit.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;

use crate::graph::ChainGraph;
use crate::orbit::{self, OrbitError, OrbitTerm, MAX_EVENT_BUDGET};
use crate::spectral::{self, SpectralError};
use crate::sum::{KahanComplexSum, KahanSum};
use crate::trig::TrigForm;

#[cfg(not(feature = "std"))]
use num_traits::Float as _;

/// Errors from truncated expansions.
#[derive(Debug, Clone, PartialEq)]
pub enum ExpansionError {
    Spectral(SpectralError),
    Orbit(OrbitError),
    /// Budgets above the enumeration contract (0 is fine: an empty sum).
    BudgetTooLarge { budget: usize },
    /// Budgets must be nonempty and strictly increasing.
    BadBudgets,
    /// The trig form does not belong to the chain.
    MismatchedInputs { chain_action: f64, trig_action: f64 },
    /// Smoothing width must be finite and positive.
    BadWidth(f64),
    /// The evaluation grid must be nonempty and strictly increasing.
    BadGrid,
}

impl fmt::Display for ExpansionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionError::Spectral(e) => write!(f, "{e}"),
            ExpansionError::Orbit(e) => write!(f, "{e}"),
            ExpansionError::BudgetTooLarge { budget } => {
                write!(f, "event budget {budget} above the contract cap {MAX_EVENT_BUDGET}")
            }
            ExpansionError::BadBudgets => {
                write!(f, "budgets must be nonempty and strictly increasing")
            }
            ExpansionError::MismatchedInputs {
                chain_action,
                trig_action,
            } => write!(
                f,
                "trig form (S0 = {trig_action}) does not match the chain (S0 = {chain_action})"
            ),
            ExpansionError::BadWidth(w) => write!(f, "smoothing width {w} must be > 0"),
            ExpansionError::BadGrid => write!(f, "grid must be nonempty and strictly increasing"),
        }
    }
}

impl core::error::Error for ExpansionError {}

impl From<SpectralError> for ExpansionError {
    fn from(e: SpectralError) -> Self {
        ExpansionError::Spectral(e)
    }
}

impl From<OrbitError> for ExpansionError {
    fn from(e: OrbitError) -> Self {
        ExpansionError::Orbit(e)
    }
}

fn check_inputs(chain: &ChainGraph, trig: &TrigForm) -> Result<(), ExpansionError> {
    let chain_action = chain.total_action();
    let trig_action = trig.leading_action();
    if (chain_action - trig_action).abs() > 1e-9 * chain_action {
        return Err(ExpansionError::MismatchedInputs {
            chain_action,
            trig_action,
        });
    }
    Ok(())
}

/// One `(p, nu)` summand of the eigenvalue expansion at separator `khat`.
fn summand(term: &OrbitTerm, khat: f64, s0: f64) -> Complex64 {
    let nu = term.nu as f64;
    let action = term.orbit.action;
    let weight = term.orbit.amplitude.powi(term.nu as i32) / nu;
    let oscillation = Complex64::from_polar(1.0, nu * action * khat);
    let window = Complex64::from_polar(1.0, -nu * PI * action / s0); // e^{-i nu w_p}
    let linear = Complex64::new(-1.0 / (nu * action), khat); // i khat - 1/(nu S_p)
    let tail = Complex64::new(0.0, PI / s0);
    oscillation * ((Complex64::new(1.0, 0.0) - window) * linear + tail * window) * weight
}

/// Truncated expansion value for level n with the given event budget.
///
/// Budget 0 is the empty sum: the bare interval midpoint
/// `khat_n - pi/(2 S0)`.
pub fn expand_level(
    chain: &ChainGraph,
    trig: &TrigForm,
    mu: i64,
    n: usize,
    max_events: usize,
) -> Result<f64, ExpansionError> {
    check_inputs(chain, trig)?;
    spectral::require_regular(trig)?;
    if n == 0 {
        return Err(SpectralError::InvalidLevel.into());
    }
    if max_events > MAX_EVENT_BUDGET {
        return Err(ExpansionError::BudgetTooLarge { budget: max_events });
    }
    let s0 = trig.leading_action();
    let khat = spectral::separator(trig, mu, n as i64);
    let mut acc = KahanComplexSum::new();
    if max_events > 0 {
        for term in orbit::orbit_terms(chain, max_events)? {
            acc.add(summand(&term, khat, s0));
        }
    }
    Ok(khat - PI / (2.0 * s0) - acc.value().re / PI)
}

/// Truncated estimates for one level across a ladder of budgets, with the
/// bisection root as the reference.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionReport {
    pub level: usize,
    pub budgets: Vec<usize>,
    pub estimates: Vec<f64>,
    pub exact: f64,
    /// |estimate - exact| per budget.
    pub errors: Vec<f64>,
    /// Orbit terms inside each budget.
    pub terms_used: Vec<u64>,
}

pub fn convergence_report(
    chain: &ChainGraph,
    trig: &TrigForm,
    mu: i64,
    n: usize,
    budgets: &[usize],
) -> Result<ExpansionReport, ExpansionError> {
    if budgets.is_empty() || budgets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ExpansionError::BadBudgets);
    }
    let exact = spectral::exact_root(trig, mu, n)?;
    let mut estimates = Vec::with_capacity(budgets.len());
    let mut errors = Vec::with_capacity(budgets.len());
    let mut terms_used = Vec::with_capacity(budgets.len());
    for &budget in budgets {
        let estimate = expand_level(chain, trig, mu, n, budget)?;
        estimates.push(estimate);
        errors.push((estimate - exact).abs());
        terms_used.push(if budget == 0 {
            0
        } else {
            orbit::count_orbits(budget)?.terms_total
        });
    }
    Ok(ExpansionReport {
        level: n,
        budgets: budgets.into(),
        estimates,
        exact,
        errors,
        terms_used,
    })
}

/// Truncated density of states on a grid, smoothed with a Gaussian of the
/// given width.
///
/// The density is `rho_bar + (1/pi) sum_p sum_nu T_p A_p^nu cos(nu S_p k)`
/// with `rho_bar = S0/pi`; convolving with a Gaussian multiplies each
/// oscillatory term by `exp(-(nu S_p width)^2 / 2)`, which is applied
/// analytically. Budget 0 returns the constant mean density.
pub fn density_truncated(
    chain: &ChainGraph,
    grid: &[f64],
    max_events: usize,
    width: f64,
) -> Result<Vec<f64>, ExpansionError> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(ExpansionError::BadWidth(width));
    }
    if grid.is_empty() || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ExpansionError::BadGrid);
    }
    if max_events > MAX_EVENT_BUDGET {
        return Err(ExpansionError::BudgetTooLarge { budget: max_events });
    }
    let rho_bar = chain.total_action() / PI;
    let mut acc: Vec<KahanSum> = alloc::vec![KahanSum::new(); grid.len()];
    if max_events > 0 {
        for term in orbit::orbit_terms(chain, max_events)? {
            let nu = term.nu as f64;
            let frequency = nu * term.orbit.action; // nu S_p
            let damping = (-0.5 * (frequency * width) * (frequency * width)).exp();
            let factor =
                term.orbit.period() * term.orbit.amplitude.powi(term.nu as i32) * damping / PI;
            if factor == 0.0 {
                continue;
            }
            for (value, &k) in acc.iter_mut().zip(grid) {
                value.add(factor * (frequency * k).cos());
            }
        }
    }
    Ok(acc.into_iter().map(|v| rho_bar + v.value()).collect())
}
