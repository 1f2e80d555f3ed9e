//! Canonical trigonometric form of the secular equation.
//!
//! For scaling chains the secular function expands into a finite sum of
//! sines of reduced actions. Rewritten with cosines and normalized so the
//! leading coefficient is one, the spectral condition reads
//!
//! ```text
//! cos(S0 k + pi*gamma) - Phi(k) = 0,
//! Phi(k) = sum_i a_i cos(S_i k + pi*gamma_i),
//! ```
//!
//! with a unique canonical representation: every `a_i > 0`, every
//! `0 < S_i < S0`, phases in `[0, 2)`, terms sorted by descending action
//! (ties by ascending phase). Signs and negative actions fold away via
//! `cos(x) = cos(-x)` and `-cos(x) = cos(x + pi)`.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::graph::ChainGraph;

#[cfg(not(feature = "std"))]
use num_traits::Float as _;

/// One sub-leading term `amplitude * cos(action * k + pi * phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigTerm {
    pub amplitude: f64,
    pub action: f64,
    pub phase: f64,
}

impl TrigTerm {
    pub fn new(amplitude: f64, action: f64, phase: f64) -> Self {
        Self {
            amplitude,
            action,
            phase,
        }
    }
}

/// Errors from building or extracting a trigonometric secular form.
#[derive(Debug, Clone, PartialEq)]
pub enum TrigFormError {
    /// Leading action must be finite and strictly positive.
    InvalidLeading(f64),
    /// A term field was NaN or infinite.
    NonFinite { what: &'static str, value: f64 },
    /// A term folded to zero action with nonzero amplitude; a constant
    /// offset has no place in the canonical form.
    ConstantTerm { amplitude: f64 },
    /// A term action reached the leading action, so no unique leading
    /// cosine can be normalized.
    LeadingCollision { action: f64, leading: f64 },
}

impl fmt::Display for TrigFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrigFormError::InvalidLeading(s0) => {
                write!(f, "leading action {s0} must be finite and > 0")
            }
            TrigFormError::NonFinite { what, value } => {
                write!(f, "term {what} is not finite: {value}")
            }
            TrigFormError::ConstantTerm { amplitude } => {
                write!(f, "term with zero action and amplitude {amplitude} is not representable")
            }
            TrigFormError::LeadingCollision { action, leading } => {
                write!(f, "term action {action} collides with the leading action {leading}")
            }
        }
    }
}

impl core::error::Error for TrigFormError {}

/// Canonical secular form `cos(S0 k + pi*gamma) = Phi(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigForm {
    leading_action: f64,
    phase: f64,
    terms: Vec<TrigTerm>,
}

/// Fold a phase (in units of pi) into [0, 2).
fn canonical_phase(phase: f64) -> f64 {
    let mut p = phase % 2.0;
    if p < 0.0 {
        p += 2.0;
    }
    if p >= 2.0 || p == 0.0 {
        p = 0.0;
    }
    p
}

impl TrigForm {
    /// Build a canonical form, folding out-of-domain terms into the
    /// canonical representation and merging terms of equal action.
    pub fn new(
        leading_action: f64,
        phase: f64,
        terms: Vec<TrigTerm>,
    ) -> Result<Self, TrigFormError> {
        if !(leading_action > 0.0) || !leading_action.is_finite() {
            return Err(TrigFormError::InvalidLeading(leading_action));
        }
        if !phase.is_finite() {
            return Err(TrigFormError::NonFinite {
                what: "leading phase",
                value: phase,
            });
        }

        let mut folded: Vec<TrigTerm> = Vec::with_capacity(terms.len());
        for term in terms {
            let TrigTerm {
                mut amplitude,
                mut action,
                mut phase,
            } = term;
            if !amplitude.is_finite() {
                return Err(TrigFormError::NonFinite {
                    what: "amplitude",
                    value: amplitude,
                });
            }
            if !action.is_finite() {
                return Err(TrigFormError::NonFinite {
                    what: "action",
                    value: action,
                });
            }
            if !phase.is_finite() {
                return Err(TrigFormError::NonFinite {
                    what: "phase",
                    value: phase,
                });
            }
            if amplitude == 0.0 {
                continue;
            }
            if action < 0.0 {
                // cos is even: negate both action and phase.
                action = -action;
                phase = -phase;
            }
            if action == 0.0 {
                return Err(TrigFormError::ConstantTerm { amplitude });
            }
            if amplitude < 0.0 {
                amplitude = -amplitude;
                phase += 1.0;
            }
            if action >= leading_action {
                return Err(TrigFormError::LeadingCollision {
                    action,
                    leading: leading_action,
                });
            }
            folded.push(TrigTerm::new(amplitude, action, canonical_phase(phase)));
        }

        folded.sort_unstable_by(|a, b| {
            b.action
                .partial_cmp(&a.action)
                .unwrap()
                .then(a.phase.partial_cmp(&b.phase).unwrap())
        });

        // Merge runs of equal action: equal phases add exactly, distinct
        // phases combine as phasors.
        let mut merged: Vec<TrigTerm> = Vec::with_capacity(folded.len());
        let mut run_start = 0;
        while run_start < folded.len() {
            let action = folded[run_start].action;
            let mut run_end = run_start + 1;
            while run_end < folded.len() && folded[run_end].action == action {
                run_end += 1;
            }
            let run = &folded[run_start..run_end];
            let term = if run.len() == 1 {
                Some(run[0])
            } else if run.iter().all(|t| t.phase == run[0].phase) {
                let amplitude: f64 = run.iter().map(|t| t.amplitude).sum();
                (amplitude != 0.0).then(|| TrigTerm::new(amplitude, action, run[0].phase))
            } else {
                let z: Complex64 = run
                    .iter()
                    .map(|t| Complex64::from_polar(t.amplitude, core::f64::consts::PI * t.phase))
                    .sum();
                (z.norm() != 0.0).then(|| {
                    TrigTerm::new(
                        z.norm(),
                        action,
                        canonical_phase(z.arg() / core::f64::consts::PI),
                    )
                })
            };
            if let Some(mut term) = term {
                if term.amplitude < 0.0 {
                    term.amplitude = -term.amplitude;
                    term.phase = canonical_phase(term.phase + 1.0);
                }
                merged.push(term);
            }
            run_start = run_end;
        }

        Ok(Self {
            leading_action,
            phase: canonical_phase(phase),
            terms: merged,
        })
    }

    /// Leading (total) reduced action S0.
    pub fn leading_action(&self) -> f64 {
        self.leading_action
    }

    /// Leading phase gamma in units of pi, in [0, 2).
    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn terms(&self) -> &[TrigTerm] {
        &self.terms
    }

    /// Sum of term amplitudes; the graph is regular when this is below 1.
    pub fn alpha(&self) -> f64 {
        self.terms.iter().map(|t| t.amplitude).sum()
    }

    /// The fluctuation sum Phi(k).
    pub fn phi(&self, k: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.amplitude * (t.action * k + core::f64::consts::PI * t.phase).cos())
            .sum()
    }

    /// The secular value `cos(S0 k + pi*gamma) - Phi(k)`.
    pub fn eval(&self, k: f64) -> f64 {
        (self.leading_action * k + core::f64::consts::PI * self.phase).cos() - self.phi(k)
    }
}

/// Expand the chain secular function into its canonical trigonometric form.
///
/// Branching over reflection/transmission at each of the m-1 internal
/// vertices produces `2^(m-1)` raw sine terms `c * sin(A k)`: the sign
/// vector `s` (one sign per bond, last fixed +) contributes the action
/// `A = sum_i s_i L_i` with coefficient `s_1 * prod(-r_j)` over the
/// vertices where the sign flips. The all-plus term is `sin(S0 k)`; the
/// rest fold into the cosine sum `Phi`. Cost grows as `2^(m-1)`.
pub fn trig_form(chain: &ChainGraph) -> Result<TrigForm, TrigFormError> {
    let actions = chain.bond_actions();
    let reflections = chain.vertex_reflections();
    let bonds = actions.len();

    // The all-plus branch (mask 0) is the leading term sin(S0 k).
    let leading_action: f64 = actions.iter().sum();

    // Remaining raw signed-sine terms.
    let mut raw: Vec<(f64, f64)> = Vec::with_capacity((1usize << (bonds - 1)) - 1);
    for mask in 1u64..(1u64 << (bonds - 1)) {
        let sign = |i: usize| -> f64 {
            if i + 1 < bonds && mask & (1 << i) != 0 {
                -1.0
            } else {
                1.0
            }
        };
        let mut coeff = sign(0);
        for (j, &r) in reflections.iter().enumerate() {
            if sign(j) != sign(j + 1) {
                coeff *= -r;
            }
        }
        if coeff == 0.0 {
            continue;
        }
        let mut action = 0.0;
        for (i, &l) in actions.iter().enumerate() {
            action += sign(i) * l;
        }
        if action < 0.0 {
            action = -action;
            coeff = -coeff;
        }
        if action == 0.0 {
            continue;
        }
        if action >= leading_action {
            return Err(TrigFormError::LeadingCollision {
                action,
                leading: leading_action,
            });
        }
        raw.push((action, coeff));
    }

    raw.sort_unstable_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let mut sines: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
    for (action, coeff) in raw {
        match sines.last_mut() {
            Some(last) if last.0 == action => last.1 += coeff,
            _ => sines.push((action, coeff)),
        }
    }
    sines.retain(|&(_, coeff)| coeff != 0.0);

    // sin(x) = cos(x + 3/2 pi); the equation is cos(S0 k + pi*gamma) = Phi,
    // so each remaining c*sin(A k) enters Phi with coefficient -c.
    let terms = sines
        .into_iter()
        .map(|(action, coeff)| {
            let d = -coeff;
            TrigTerm::new(d.abs(), action, if d > 0.0 { 1.5 } else { 0.5 })
        })
        .collect();
    TrigForm::new(leading_action, 1.5, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        chain_from_manhattan, chain_from_step, secular_value, ManhattanPotentialSpec,
        StepPotentialSpec,
    };

    fn step_chain() -> ChainGraph {
        chain_from_step(&StepPotentialSpec::new(0.3, 0.5).unwrap())
    }

    // Small LCG so grid checks can use scattered wave numbers without rand.
    struct Lcg(u64);
    impl Lcg {
        fn uniform(&mut self) -> f64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (self.0 >> 11) as f64 / (1u64 << 53) as f64
        }
    }

    #[test]
    fn step_trig_form_is_canonical() {
        let trig = trig_form(&step_chain()).unwrap();
        assert!((trig.leading_action() - 0.79497474683058327).abs() < 1e-15);
        assert_eq!(trig.phase(), 1.5);
        assert_eq!(trig.terms().len(), 1);
        let term = trig.terms()[0];
        assert!((term.amplitude - 0.17157287525380990).abs() < 1e-15);
        assert!((term.action - 0.19497474683058327).abs() < 1e-15);
        assert_eq!(term.phase, 0.5);
        assert!((trig.alpha() - 0.17157287525380990).abs() < 1e-15);
    }

    #[test]
    fn zero_reflection_gives_trivial_form() {
        let chain = chain_from_step(&StepPotentialSpec::new(0.3, 0.0).unwrap());
        let trig = trig_form(&chain).unwrap();
        assert_eq!(trig.leading_action(), 1.0);
        assert_eq!(trig.phase(), 1.5);
        assert!(trig.terms().is_empty());
        assert_eq!(trig.alpha(), 0.0);
    }

    #[test]
    fn three_region_form_matches_secular_pointwise() {
        let chain = chain_from_manhattan(
            &ManhattanPotentialSpec::new([0.2, 0.3, 0.5].into(), [0.0, 0.5, 0.75].into()).unwrap(),
        );
        let trig = trig_form(&chain).unwrap();

        // 2^(3-1) - 1 = 3 sub-leading branches, none degenerate here.
        assert_eq!(trig.terms().len(), 3);
        let r = 0.17157287525380990;
        let amps: alloc::vec::Vec<f64> = trig.terms().iter().map(|t| t.amplitude).collect();
        assert!((amps[0] - r).abs() < 1e-15);
        assert!((amps[1] - r * r).abs() < 1e-15);
        assert!((amps[2] - r).abs() < 1e-15);
        assert!((trig.terms()[0].action - 0.26213203435596426).abs() < 1e-15);
        assert!((trig.terms()[1].action - 0.23786796564403574).abs() < 1e-15);
        assert!((trig.terms()[2].action - 0.16213203435596426).abs() < 1e-15);

        let mut rng = Lcg(7);
        for _ in 0..1000 {
            let k = 100.0 * rng.uniform().max(1e-3);
            let diff = (secular_value(&chain, k) - trig.eval(k)).abs();
            assert!(diff < 1e-12, "k = {k}, diff = {diff:e}");
        }
    }

    #[test]
    fn step_roundtrip_on_dense_grid() {
        let chain = step_chain();
        let trig = trig_form(&chain).unwrap();
        let mut worst = 0.0_f64;
        for i in 0..=20_000 {
            let k = i as f64 * 5e-3 + 1e-4;
            worst = worst.max((secular_value(&chain, k) - trig.eval(k)).abs());
        }
        assert!(worst < 1e-12, "worst deviation {worst:e}");
    }

    #[test]
    fn folding_lands_in_canonical_domain() {
        // Negative amplitude, negative action, out-of-range phases.
        let form = TrigForm::new(
            2.0,
            -0.5,
            [
                TrigTerm::new(-0.3, 1.0, 0.25),
                TrigTerm::new(0.2, -0.5, 4.75),
                TrigTerm::new(0.0, 0.7, 0.0),
            ]
            .into(),
        )
        .unwrap();
        assert_eq!(form.phase(), 1.5);
        assert_eq!(form.terms().len(), 2);
        for t in form.terms() {
            assert!(t.amplitude > 0.0);
            assert!(t.action > 0.0 && t.action < 2.0);
            assert!((0.0..2.0).contains(&t.phase));
        }
        // -0.3 cos(k + pi/4) folds to +0.3 cos(k + 5pi/4).
        assert_eq!(form.terms()[0].amplitude, 0.3);
        assert_eq!(form.terms()[0].phase, 1.25);
        // 0.2 cos(-0.5k + 4.75pi) = 0.2 cos(0.5k - 4.75pi) -> phase 1.25.
        assert_eq!(form.terms()[1].action, 0.5);
        assert_eq!(form.terms()[1].phase, 1.25);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let once = TrigForm::new(
            1.7,
            2.5,
            [
                TrigTerm::new(-0.4, -0.9, 3.25),
                TrigTerm::new(0.1, 0.9, 0.75),
                TrigTerm::new(0.2, 0.3, 1.0),
            ]
            .into(),
        )
        .unwrap();
        let twice = TrigForm::new(once.leading_action(), once.phase(), once.terms().into()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn equal_terms_merge() {
        let form = TrigForm::new(
            3.0,
            0.0,
            [
                TrigTerm::new(0.2, 1.0, 0.5),
                TrigTerm::new(0.3, 1.0, 0.5),
                TrigTerm::new(0.25, 1.0, 1.5), // opposite sign of the pair above
            ]
            .into(),
        )
        .unwrap();
        assert_eq!(form.terms().len(), 1);
        let t = form.terms()[0];
        assert!((t.amplitude - 0.25).abs() < 1e-12);
        assert_eq!(t.action, 1.0);
    }

    #[test]
    fn degenerate_forms_are_rejected() {
        assert!(matches!(
            TrigForm::new(1.0, 0.0, [TrigTerm::new(0.5, 1.0, 0.0)].into()),
            Err(TrigFormError::LeadingCollision { .. })
        ));
        assert!(matches!(
            TrigForm::new(1.0, 0.0, [TrigTerm::new(0.5, 0.0, 0.0)].into()),
            Err(TrigFormError::ConstantTerm { .. })
        ));
        assert!(matches!(
            TrigForm::new(-1.0, 0.0, [].into()),
            Err(TrigFormError::InvalidLeading(_))
        ));
        assert!(matches!(
            TrigForm::new(1.0, f64::NAN, [].into()),
            Err(TrigFormError::NonFinite { .. })
        ));
    }

    #[test]
    fn symmetric_box_drops_vanishing_branch() {
        // Equal bonds: the reflected branch carries sin(0 k) and vanishes,
        // leaving a pure sine despite r != 0.
        let chain = ChainGraph::new([0.5, 0.5].into(), [0.3].into()).unwrap();
        let trig = trig_form(&chain).unwrap();
        assert!(trig.terms().is_empty());
        assert_eq!(trig.leading_action(), 1.0);
    }
}
