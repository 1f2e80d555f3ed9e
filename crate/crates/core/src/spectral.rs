//! Regularity classification, separators, and guaranteed root solvers.
//!
//! For a regular form (`0 < alpha < 1`) the grid points where the leading
//! cosine reaches +-1,
//!
//! ```text
//! khat_n = (pi / S0) (n + mu - gamma + 1),
//! ```
//!
//! are never roots: the secular value there is `(-1)^j - Phi` with
//! `|Phi| <= alpha < 1`, so its sign is known without evaluation. Each
//! interval between consecutive separators brackets exactly one eigenvalue,
//! confined to the inner root zone a distance `u = arccos(alpha)/S0` away
//! from both ends. Bisection on these brackets can therefore never miss or
//! double-count a level, which is also why the counting function is exact
//! (zero Weyl residual).

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::trig::TrigForm;

#[cfg(not(feature = "std"))]
use num_traits::Float as _;

/// Finite-precision slack allowed on root-zone confinement and spacing
/// bounds.
pub const CONFINEMENT_SLACK: f64 = 1e-9;

const BISECTION_MAX_ITER: usize = 200;
const FIXED_POINT_MAX_ITER: usize = 500;

/// Errors from the spectral pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    /// alpha = 0: the spectrum is a plain cosine grid; use [`trivial_level`].
    Trivial,
    /// alpha >= 1: separators are not root-free and nothing is guaranteed.
    NotRegular { alpha: f64 },
    /// Level indices are 1-based.
    InvalidLevel,
    /// Need at least one level.
    EmptySpectrum,
    /// No sign change where regularity guarantees one; the input cannot
    /// actually be regular.
    NoSignChange { lo: f64, hi: f64 },
    /// Separator endpoints of interval n do not bracket a root.
    NoBracket { n: usize, lo: f64, hi: f64 },
    /// The arccos fixed-point iteration did not settle within its cap.
    NonConvergence { n: usize },
    /// [`trivial_level`] requires alpha = 0.
    NotTrivial { alpha: f64 },
    /// Computed levels failed the root-zone confinement invariant.
    ConfinementViolation { n: usize, level: f64 },
    /// Spacing statistics need at least two levels.
    NeedTwoLevels,
    /// Histogram needs at least one bin.
    NoBins,
    /// A nearest-neighbor spacing fell below the spectral gap.
    SpacingBelowGap { index: usize, spacing: f64, gap: f64 },
    /// A nearest-neighbor spacing exceeded the spectral cut.
    SpacingAboveCut { index: usize, spacing: f64, cut: f64 },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::Trivial => {
                write!(f, "trivial form (alpha = 0): spectrum is the bare cosine grid")
            }
            SpectralError::NotRegular { alpha } => {
                write!(f, "not a regular form: alpha = {alpha} >= 1")
            }
            SpectralError::InvalidLevel => write!(f, "level index must be >= 1"),
            SpectralError::EmptySpectrum => write!(f, "level count must be >= 1"),
            SpectralError::NoSignChange { lo, hi } => {
                write!(f, "no sign change in [{lo}, {hi}]; input is not regular")
            }
            SpectralError::NoBracket { n, lo, hi } => {
                write!(f, "interval {n} = [{lo}, {hi}] does not bracket a root")
            }
            SpectralError::NonConvergence { n } => {
                write!(f, "fixed-point iteration for level {n} did not converge")
            }
            SpectralError::NotTrivial { alpha } => {
                write!(f, "closed-form grid needs alpha = 0, got alpha = {alpha}")
            }
            SpectralError::ConfinementViolation { n, level } => {
                write!(f, "level {n} = {level} escaped its root zone")
            }
            SpectralError::NeedTwoLevels => write!(f, "spacing statistics need >= 2 levels"),
            SpectralError::NoBins => write!(f, "histogram needs >= 1 bin"),
            SpectralError::SpacingBelowGap { index, spacing, gap } => {
                write!(f, "spacing {index} = {spacing} below the spectral gap {gap}")
            }
            SpectralError::SpacingAboveCut { index, spacing, cut } => {
                write!(f, "spacing {index} = {spacing} above the spectral cut {cut}")
            }
        }
    }
}

impl core::error::Error for SpectralError {}

/// Regularity classification of a trigonometric secular form.
///
/// `u`, `gap` and `cut` are meaningful for `alpha < 1` and NaN otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularityReport {
    /// Sum of fluctuation amplitudes.
    pub alpha: f64,
    /// Root-free half-width around each separator, in wave-number units.
    pub u: f64,
    /// Minimum possible nearest-neighbor spacing, g = 2u.
    pub gap: f64,
    /// Maximum possible nearest-neighbor spacing, c = 2(pi/S0 - u).
    pub cut: f64,
    /// 0 < alpha < 1.
    pub is_regular: bool,
    /// alpha = 0.
    pub is_trivial: bool,
}

pub fn regularity(trig: &TrigForm) -> RegularityReport {
    let alpha = trig.alpha();
    let s0 = trig.leading_action();
    let (u, gap, cut) = if alpha < 1.0 {
        let u = alpha.acos() / s0;
        (u, 2.0 * u, 2.0 * (PI / s0 - u))
    } else {
        (f64::NAN, f64::NAN, f64::NAN)
    };
    RegularityReport {
        alpha,
        u,
        gap,
        cut,
        is_regular: alpha > 0.0 && alpha < 1.0,
        is_trivial: alpha == 0.0,
    }
}

pub(crate) fn require_regular(trig: &TrigForm) -> Result<RegularityReport, SpectralError> {
    let report = regularity(trig);
    if report.is_trivial {
        Err(SpectralError::Trivial)
    } else if !report.is_regular {
        Err(SpectralError::NotRegular { alpha: report.alpha })
    } else {
        Ok(report)
    }
}

/// Grid point j where the leading cosine is (-1)^j: (pi/S0)(j - gamma).
fn grid_point(trig: &TrigForm, j: i64) -> f64 {
    (j as f64 - trig.phase()) * PI / trig.leading_action()
}

/// Separator `khat_n` between root n and root n + 1.
pub fn separator(trig: &TrigForm, mu: i64, n: i64) -> f64 {
    grid_point(trig, n + mu + 1)
}

fn bisect(trig: &TrigForm, mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    let tol = 1e-13 * hi.abs().max(1.0);
    for _ in 0..BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol {
            return mid;
        }
        let f_mid = trig.eval(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Choose the integer offset `mu` so that level 1 is the first positive
/// eigenvalue: scans separator-grid intervals of width pi/S0 upward from
/// k = 0 for the first sign change at strictly positive k. A root at k = 0
/// itself (every chain secular function is odd) does not count as a level.
pub fn find_mu(trig: &TrigForm) -> Result<i64, SpectralError> {
    require_regular(trig)?;
    let gamma = trig.phase();
    let j_first_nonneg = gamma.ceil() as i64; // smallest j with grid_point(j) >= 0

    if gamma == gamma.ceil() {
        // k = 0 is itself a grid point, never a root of a regular form;
        // the first positive root sits in the very next interval.
        return Ok(j_first_nonneg - 1);
    }

    // The interval straddling k = 0.
    let j = j_first_nonneg - 1;
    let lo = grid_point(trig, j);
    let hi = grid_point(trig, j + 1);
    let f_lo = trig.eval(lo);
    let f_hi = trig.eval(hi);
    if f_lo == 0.0 || f_hi == 0.0 || (f_lo > 0.0) == (f_hi > 0.0) {
        return Err(SpectralError::NoSignChange { lo, hi });
    }
    let root = bisect(trig, lo, hi, f_lo);
    let positive_tol = 1e-9 * PI / trig.leading_action();
    if root > positive_tol {
        // The straddling interval already holds a positive root.
        Ok(j - 1)
    } else {
        Ok(j)
    }
}

/// Eigenvalue n (n >= 1) by bisection on the separator bracket
/// `[khat_{n-1}, khat_n]`, where the secular function is guaranteed to
/// change sign.
pub fn exact_root(trig: &TrigForm, mu: i64, n: usize) -> Result<f64, SpectralError> {
    require_regular(trig)?;
    if n == 0 {
        return Err(SpectralError::InvalidLevel);
    }
    let lo = separator(trig, mu, n as i64 - 1);
    let hi = separator(trig, mu, n as i64);
    let f_lo = trig.eval(lo);
    let f_hi = trig.eval(hi);
    if f_lo == 0.0 || f_hi == 0.0 || (f_lo > 0.0) == (f_hi > 0.0) {
        return Err(SpectralError::NoBracket { n, lo, hi });
    }
    Ok(bisect(trig, lo, hi, f_lo))
}

/// Eigenvalue n by the implicit arccos fixed point,
///
/// ```text
/// k = (pi/S0)(n + mu - gamma) + arccos(Phi(k))/S0        (n + mu even)
/// k = (pi/S0)(n + mu - gamma) + (pi - arccos(Phi(k)))/S0 (n + mu odd)
/// ```
///
/// starting from the interval midpoint. Reports non-convergence instead of
/// falling back, so this solver stays independent of [`exact_root`] for
/// cross-validation. The update lands in the root zone on every step, so
/// the iteration never leaves `[khat_{n-1}, khat_n]`.
pub fn fixed_point_root(trig: &TrigForm, mu: i64, n: usize) -> Result<f64, SpectralError> {
    require_regular(trig)?;
    if n == 0 {
        return Err(SpectralError::InvalidLevel);
    }
    let s0 = trig.leading_action();
    let base = grid_point(trig, n as i64 + mu); // khat_{n-1}
    let even = (n as i64 + mu).rem_euclid(2) == 0;
    let mut k = base + 0.5 * PI / s0; // interval midpoint
    for _ in 0..FIXED_POINT_MAX_ITER {
        let branch = if even {
            trig.phi(k).acos()
        } else {
            PI - trig.phi(k).acos()
        };
        let next = base + branch / s0;
        if !next.is_finite() {
            return Err(SpectralError::NonConvergence { n });
        }
        if (next - k).abs() <= 1e-12 * next.abs().max(1.0) {
            return Ok(next);
        }
        k = next;
    }
    Err(SpectralError::NonConvergence { n })
}

/// Closed-form level n of a trivial form (alpha = 0): the n-th positive
/// zero of `cos(S0 k + pi*gamma)`.
pub fn trivial_level(trig: &TrigForm, n: usize) -> Result<f64, SpectralError> {
    let alpha = trig.alpha();
    if alpha != 0.0 {
        return Err(SpectralError::NotTrivial { alpha });
    }
    if n == 0 {
        return Err(SpectralError::InvalidLevel);
    }
    let gamma = trig.phase();
    // Zeros sit at (pi/S0)(j + 1/2 - gamma); pick the first strictly
    // positive one.
    let j0 = (gamma - 0.5).floor() as i64 + 1;
    Ok((((n as i64 - 1 + j0) as f64 + 0.5) - gamma) * PI / trig.leading_action())
}

/// An ordered block of eigenvalues with their separators.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    mu: i64,
    separators: Vec<f64>,
    levels: Vec<f64>,
    residuals: Vec<f64>,
}

impl Spectrum {
    pub fn mu(&self) -> i64 {
        self.mu
    }

    /// Separators khat_0 ..= khat_N.
    pub fn separators(&self) -> &[f64] {
        &self.separators
    }

    /// Levels k_1 ..= k_N, strictly increasing.
    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// |secular value| at each level.
    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Level by 1-based index.
    pub fn level(&self, n: usize) -> Option<f64> {
        if n == 0 {
            None
        } else {
            self.levels.get(n - 1).copied()
        }
    }
}

/// Compute the first `count` eigenvalues by bracketed bisection and verify
/// the root-zone confinement invariant on every one.
pub fn spectrum(trig: &TrigForm, mu: i64, count: usize) -> Result<Spectrum, SpectralError> {
    let report = require_regular(trig)?;
    if count == 0 {
        return Err(SpectralError::EmptySpectrum);
    }
    let separators: Vec<f64> = (0..=count)
        .map(|n| separator(trig, mu, n as i64))
        .collect();
    let mut levels = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);
    for n in 1..=count {
        let k = exact_root(trig, mu, n)?;
        let lo = separators[n - 1] + report.u - CONFINEMENT_SLACK;
        let hi = separators[n] - report.u + CONFINEMENT_SLACK;
        if !(lo <= k && k <= hi) {
            return Err(SpectralError::ConfinementViolation { n, level: k });
        }
        if let Some(&prev) = levels.last() {
            if k <= prev {
                return Err(SpectralError::ConfinementViolation { n, level: k });
            }
        }
        residuals.push(trig.eval(k).abs());
        levels.push(k);
    }
    Ok(Spectrum {
        mu,
        separators,
        levels,
        residuals,
    })
}

/// Nearest-neighbor spacing histogram over `[gap, cut]` plus extremes.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacingStats {
    pub min_spacing: f64,
    pub max_spacing: f64,
    pub mean_spacing: f64,
    pub gap: f64,
    pub cut: f64,
    counts: Vec<u64>,
}

impl SpacingStats {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Edge i of the histogram, i in 0 ..= bins.
    pub fn edge(&self, i: usize) -> f64 {
        self.gap + (self.cut - self.gap) * i as f64 / self.counts.len() as f64
    }
}

/// Bin the nearest-neighbor spacings of a spectrum into `bins` equal-width
/// bins spanning `[gap, cut]`. A spacing outside the band (beyond the
/// finite-precision slack) is an error, not a clamp.
pub fn spacing_stats(
    spectrum: &Spectrum,
    report: &RegularityReport,
    bins: usize,
) -> Result<SpacingStats, SpectralError> {
    if spectrum.levels.len() < 2 {
        return Err(SpectralError::NeedTwoLevels);
    }
    if bins == 0 {
        return Err(SpectralError::NoBins);
    }
    let gap = report.gap;
    let cut = report.cut;
    let width = cut - gap;
    let mut counts = alloc::vec![0u64; bins];
    let mut min_spacing = f64::INFINITY;
    let mut max_spacing = f64::NEG_INFINITY;
    let mut total = 0.0;
    for (index, pair) in spectrum.levels.windows(2).enumerate() {
        let spacing = pair[1] - pair[0];
        if spacing < gap - CONFINEMENT_SLACK {
            return Err(SpectralError::SpacingBelowGap { index, spacing, gap });
        }
        if spacing > cut + CONFINEMENT_SLACK {
            return Err(SpectralError::SpacingAboveCut { index, spacing, cut });
        }
        min_spacing = min_spacing.min(spacing);
        max_spacing = max_spacing.max(spacing);
        total += spacing;
        let bin = if width > 0.0 {
            (((spacing - gap) / width) * bins as f64).floor() as i64
        } else {
            0
        };
        counts[bin.clamp(0, bins as i64 - 1) as usize] += 1;
    }
    Ok(SpacingStats {
        min_spacing,
        max_spacing,
        mean_spacing: total / (spectrum.levels.len() - 1) as f64,
        gap,
        cut,
        counts,
    })
}

/// Maximum deviation of the counting function from its exact value: the
/// number of levels below `khat_n` must equal n for every separator.
pub fn weyl_residual(spectrum: &Spectrum) -> u64 {
    let mut worst: i64 = 0;
    let mut below = 0usize;
    for (n, &sep) in spectrum.separators.iter().enumerate() {
        while below < spectrum.levels.len() && spectrum.levels[below] < sep {
            below += 1;
        }
        worst = worst.max((below as i64 - n as i64).abs());
    }
    worst as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{chain_from_step, StepPotentialSpec};
    use crate::trig::{trig_form, TrigTerm};

    fn step_trig() -> TrigForm {
        trig_form(&chain_from_step(&StepPotentialSpec::new(0.3, 0.5).unwrap())).unwrap()
    }

    #[test]
    fn regularity_of_step_chain() {
        let report = regularity(&step_trig());
        assert!(report.is_regular);
        assert!(!report.is_trivial);
        assert!((report.alpha - 0.17157287525380990).abs() < 1e-15);
        assert!((report.u - 1.7590122637946557).abs() < 1e-12);
        assert!((report.gap - 3.5180245275893114).abs() < 1e-12);
        assert!((report.cut - 4.3856042760041108).abs() < 1e-12);
    }

    #[test]
    fn regularity_trivial_and_sum() {
        let trivial = TrigForm::new(1.0, 1.5, [].into()).unwrap();
        let report = regularity(&trivial);
        assert!(report.is_trivial);
        assert!(!report.is_regular);
        assert_eq!(report.alpha, 0.0);

        let two = TrigForm::new(
            1.0,
            0.0,
            [TrigTerm::new(0.3, 0.4, 0.0), TrigTerm::new(0.4, 0.6, 0.0)].into(),
        )
        .unwrap();
        let report = regularity(&two);
        assert!((report.alpha - 0.7).abs() < 1e-15);
        assert!(report.is_regular);
    }

    #[test]
    fn non_regular_is_flagged() {
        let heavy = TrigForm::new(
            1.0,
            0.0,
            [TrigTerm::new(0.8, 0.4, 0.0), TrigTerm::new(0.5, 0.6, 0.0)].into(),
        )
        .unwrap();
        let report = regularity(&heavy);
        assert!(!report.is_regular);
        assert!(report.u.is_nan());
        assert!(matches!(
            find_mu(&heavy),
            Err(SpectralError::NotRegular { .. })
        ));
    }

    #[test]
    fn mu_of_step_chain() {
        assert_eq!(find_mu(&step_trig()).unwrap(), 1);
    }

    #[test]
    fn mu_rejects_trivial() {
        let trivial = TrigForm::new(1.0, 1.5, [].into()).unwrap();
        assert_eq!(find_mu(&trivial), Err(SpectralError::Trivial));
    }

    #[test]
    fn separators_form_arithmetic_grid() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        // khat_n = (pi/L)(n + 1/2) for the step chain.
        assert!((separator(&trig, mu, 0) - 1.9759072008983555).abs() < 1e-12);
        assert!((separator(&trig, mu, 1) - 5.9277216026950666).abs() < 1e-12);
        let step = PI / trig.leading_action();
        for n in 0..1000 {
            let d = separator(&trig, mu, n + 1) - separator(&trig, mu, n);
            assert!((d - step).abs() < 1e-9);
        }
        // The grid depends on mu and gamma only through mu - gamma, so
        // shifting both by the same integer changes nothing.
        for n in 0..5 {
            let direct = separator(&trig, mu, n);
            let shifted = ((n + (mu + 2) + 1) as f64 - (trig.phase() + 2.0)) * PI
                / trig.leading_action();
            assert!((direct - shifted).abs() < 1e-12);
        }
    }

    #[test]
    fn separators_are_never_roots() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        let floor = 1.0 - trig.alpha();
        for n in 1..=1000 {
            let v = trig.eval(separator(&trig, mu, n)).abs();
            assert!(v >= floor - 1e-9, "n = {n}: |F| = {v} < {floor}");
        }
    }

    #[test]
    fn exact_roots_match_reference_values() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        // Published 6-decimal reference values.
        assert!((exact_root(&trig, mu, 1).unwrap() - 4.107149).abs() < 1e-5);
        assert!((exact_root(&trig, mu, 10).unwrap() - 39.305209).abs() < 1e-5);
        assert!((exact_root(&trig, mu, 100).unwrap() - 394.964713).abs() < 1e-5);
        // Frozen high-precision values from an independent bisection.
        assert!((exact_root(&trig, mu, 1).unwrap() - 4.1071487438071347).abs() < 1e-9);
        assert!((exact_root(&trig, mu, 10).unwrap() - 39.305209327188214).abs() < 1e-9);
        assert!((exact_root(&trig, mu, 100).unwrap() - 394.96471289092778).abs() < 1e-9);
    }

    #[test]
    fn root_residuals_are_tiny() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        for n in [1, 2, 3, 10, 50, 100] {
            let k = exact_root(&trig, mu, n).unwrap();
            assert!(trig.eval(k).abs() < 1e-12, "n = {n}");
        }
    }

    #[test]
    fn fixed_point_agrees_with_bisection() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        for n in [1usize, 2, 3, 7, 10, 63, 100, 500, 1000] {
            let a = exact_root(&trig, mu, n).unwrap();
            let b = fixed_point_root(&trig, mu, n).unwrap();
            assert!((a - b).abs() < 1e-9, "n = {n}: {a} vs {b}");
        }
        assert!((fixed_point_root(&trig, mu, 1).unwrap() - 4.107149).abs() < 1e-6);
    }

    #[test]
    fn fixed_point_stays_in_interval() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        for n in [1usize, 10, 100] {
            let k = fixed_point_root(&trig, mu, n).unwrap();
            assert!(k >= separator(&trig, mu, n as i64 - 1));
            assert!(k <= separator(&trig, mu, n as i64));
        }
    }

    #[test]
    fn trivial_grid_levels() {
        // Symmetric box: S0 = 1, levels at n*pi.
        let trivial = TrigForm::new(1.0, 1.5, [].into()).unwrap();
        for n in 1..=10 {
            let k = trivial_level(&trivial, n).unwrap();
            assert!((k - n as f64 * PI).abs() < 1e-12);
        }
        assert!(matches!(
            trivial_level(&step_trig(), 1),
            Err(SpectralError::NotTrivial { .. })
        ));
        assert!(matches!(
            exact_root(&trivial, 0, 1),
            Err(SpectralError::Trivial)
        ));
    }

    #[test]
    fn spectrum_of_one_hundred_levels() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        let spec = spectrum(&trig, mu, 100).unwrap();
        assert_eq!(spec.len(), 100);
        assert_eq!(spec.separators().len(), 101);
        assert!((spec.level(100).unwrap() - 394.96471289092778).abs() < 1e-9);
        assert!(spec.residuals().iter().all(|&r| r <= 1e-12));
        for pair in spec.levels().windows(2) {
            assert!(pair[0] < pair[1]);
        }
        assert_eq!(weyl_residual(&spec), 0);
    }

    #[test]
    fn spacing_stats_step_chain() {
        let trig = step_trig();
        let mu = find_mu(&trig).unwrap();
        let report = regularity(&trig);
        let spec = spectrum(&trig, mu, 1000).unwrap();
        let stats = spacing_stats(&spec, &report, 20).unwrap();
        assert!(stats.min_spacing >= report.gap - 1e-9);
        assert!(stats.max_spacing <= report.cut + 1e-9);
        assert_eq!(stats.counts().iter().sum::<u64>(), 999);
        let mean = PI / trig.leading_action();
        assert!((stats.mean_spacing - mean).abs() / mean < 1e-3);
        assert!((stats.edge(0) - report.gap).abs() < 1e-15);
        assert!((stats.edge(20) - report.cut).abs() < 1e-15);
    }

    #[test]
    fn spacing_of_exact_grid_fills_one_bin() {
        // Two levels exactly pi/S0 apart land in a single bin.
        let trig = step_trig();
        let report = regularity(&trig);
        let step = PI / trig.leading_action();
        let spec = Spectrum {
            mu: 1,
            separators: [0.0, step, 2.0 * step].into(),
            levels: [2.0, 2.0 + step].into(),
            residuals: [0.0, 0.0].into(),
        };
        let stats = spacing_stats(&spec, &report, 7).unwrap();
        assert_eq!(stats.counts().iter().sum::<u64>(), 1);
        assert_eq!(stats.min_spacing, stats.max_spacing);
    }

    #[test]
    fn out_of_band_spacing_is_an_error() {
        let trig = step_trig();
        let report = regularity(&trig);
        let spec = Spectrum {
            mu: 1,
            separators: [0.0, 4.0, 8.0].into(),
            levels: [2.0, 3.0].into(), // spacing 1 << gap
            residuals: [0.0, 0.0].into(),
        };
        assert!(matches!(
            spacing_stats(&spec, &report, 5),
            Err(SpectralError::SpacingBelowGap { .. })
        ));
    }

    #[test]
    fn weyl_residual_counts_misplaced_levels() {
        let spec = Spectrum {
            mu: 0,
            separators: [0.0, 1.0, 2.0, 3.0].into(),
            levels: [0.4, 0.6, 2.5].into(), // two levels in the first cell
            residuals: [0.0; 3].into(),
        };
        assert_eq!(weyl_residual(&spec), 1);
    }

    #[test]
    fn level_zero_is_rejected() {
        let trig = step_trig();
        assert_eq!(exact_root(&trig, 1, 0), Err(SpectralError::InvalidLevel));
        assert_eq!(
            fixed_point_root(&trig, 1, 0),
            Err(SpectralError::InvalidLevel)
        );
        assert_eq!(spectrum(&trig, 1, 0), Err(SpectralError::EmptySpectrum));
    }
}
