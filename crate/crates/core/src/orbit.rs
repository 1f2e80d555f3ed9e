//! Prime periodic orbits of the two-bond chain as binary necklaces.
//!
//! Between two consecutive scattering events at the middle vertex the
//! particle makes one full excursion along a bond (vertex -> wall -> vertex),
//! so a periodic orbit is a cyclic word over the alphabet {1, 2} of bond
//! labels and a *prime* orbit is an aperiodic cyclic word. Orbits are stored
//! as the lexicographically minimal rotation (a Lyndon word) and generated
//! by Duval's iteration in lexicographic order with constant memory.
//!
//! For an orbit with sigma reflections off the middle vertex and tau
//! transmissions through it, the weight is
//!
//! ```text
//! A_p = (-1)^chi r^sigma (1 - r^2)^(tau/2),
//! ```
//!
//! where chi counts the minus signs picked up along the way: one per wall
//! bounce (one wall bounce per letter) and one per reflection hitting the
//! middle vertex from bond 2, since the reflection coefficient seen from
//! the high-potential side is -r.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::ChainGraph;

/// Largest accepted scattering-event budget. The stream holds about
/// 2^n/n prime orbits of length n; 34 keeps term counts near 10^9 and
/// every intermediate count inside u64.
pub const MAX_EVENT_BUDGET: usize = 34;

/// Errors from orbit enumeration and attribute computation.
#[derive(Debug, Clone, PartialEq)]
pub enum OrbitError {
    /// Budgets must lie in 1 ..= MAX_EVENT_BUDGET.
    BudgetOutOfRange { budget: usize },
    /// Orbit codes are defined for two-bond chains only.
    UnsupportedChain { bonds: usize },
    /// Code letters must be 1 or 2.
    InvalidLetter { letter: u8 },
    /// Codes must be nonempty.
    EmptyCode,
    /// The code is not the lexicographically minimal rotation of an
    /// aperiodic word.
    NotCanonical,
}

impl fmt::Display for OrbitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitError::BudgetOutOfRange { budget } => {
                write!(f, "event budget {budget} outside 1..={MAX_EVENT_BUDGET}")
            }
            OrbitError::UnsupportedChain { bonds } => {
                write!(f, "orbit codes need a 2-bond chain, got {bonds} bonds")
            }
            OrbitError::InvalidLetter { letter } => {
                write!(f, "orbit letters must be 1 or 2, got {letter}")
            }
            OrbitError::EmptyCode => write!(f, "orbit code must be nonempty"),
            OrbitError::NotCanonical => {
                write!(f, "code is not a minimal rotation of an aperiodic word")
            }
        }
    }
}

impl core::error::Error for OrbitError {}

/// Cyclic bond-visit word of a prime orbit, stored as its lexicographically
/// minimal rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitCode(Vec<u8>);

impl OrbitCode {
    /// Validate letters, canonical rotation, and aperiodicity.
    pub fn new(letters: Vec<u8>) -> Result<Self, OrbitError> {
        if letters.is_empty() {
            return Err(OrbitError::EmptyCode);
        }
        for &letter in &letters {
            if letter != 1 && letter != 2 {
                return Err(OrbitError::InvalidLetter { letter });
            }
        }
        // A canonical aperiodic word is strictly smaller than every
        // nontrivial rotation of itself.
        let n = letters.len();
        for shift in 1..n {
            let rotation = (0..n).map(|i| letters[(i + shift) % n]);
            if letters.iter().copied().ge(rotation) {
                return Err(OrbitError::NotCanonical);
            }
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Scattering events at the middle vertex per period.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for OrbitCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &letter in &self.0 {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// A prime periodic orbit with its combinatorial attributes and weight.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimeOrbit {
    pub code: OrbitCode,
    /// Visits to bond 1 / bond 2 per period.
    pub n1: usize,
    pub n2: usize,
    /// Reflections off the middle vertex (equal cyclic neighbors).
    pub sigma: usize,
    /// Transmissions through it (unequal cyclic neighbors); always even.
    pub tau: usize,
    /// Total minus-sign count: wall bounces plus reflections from bond 2.
    pub chi: usize,
    /// Reduced action per period, 2 (n1 L1 + n2 L2).
    pub action: f64,
    /// Orbit weight A_p.
    pub amplitude: f64,
}

impl PrimeOrbit {
    /// Middle-vertex scattering events per period (the code length).
    pub fn events(&self) -> usize {
        self.code.len()
    }

    /// Period T_p; equals the reduced action for scaling systems.
    pub fn period(&self) -> f64 {
        self.action
    }
}

/// One repetition of a prime orbit in a truncated orbit sum.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitTerm {
    pub orbit: PrimeOrbit,
    /// Repetition index, >= 1.
    pub nu: usize,
}

impl OrbitTerm {
    pub fn total_events(&self) -> usize {
        self.nu * self.orbit.events()
    }
}

fn check_budget(budget: usize) -> Result<(), OrbitError> {
    if budget == 0 || budget > MAX_EVENT_BUDGET {
        Err(OrbitError::BudgetOutOfRange { budget })
    } else {
        Ok(())
    }
}

/// Duval-style stream of Lyndon words over {1, 2} of length <= max_len,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct PrimeCodes {
    max_len: usize,
    word: Vec<u8>,
    started: bool,
}

impl PrimeCodes {
    fn new(max_len: usize) -> Self {
        Self {
            max_len,
            word: Vec::with_capacity(max_len),
            started: false,
        }
    }
}

impl Iterator for PrimeCodes {
    type Item = OrbitCode;

    fn next(&mut self) -> Option<OrbitCode> {
        if !self.started {
            self.started = true;
            self.word.push(1);
            return Some(OrbitCode(self.word.clone()));
        }
        if self.word.is_empty() {
            return None;
        }
        // Extend the current word periodically to the budget, chop the
        // maximal-letter tail, then increment: Duval's iteration.
        let period = self.word.len();
        for i in period..self.max_len {
            let letter = self.word[i % period];
            self.word.push(letter);
        }
        while self.word.last() == Some(&2) {
            self.word.pop();
        }
        match self.word.last_mut() {
            Some(last) => *last += 1,
            None => return None,
        }
        Some(OrbitCode(self.word.clone()))
    }
}

/// Stream every prime orbit code with at most `max_events` scattering
/// events, in lexicographic order.
pub fn enumerate_prime(max_events: usize) -> Result<PrimeCodes, OrbitError> {
    check_budget(max_events)?;
    Ok(PrimeCodes::new(max_events))
}

fn attributes(code: OrbitCode, l1: f64, l2: f64, r: f64) -> PrimeOrbit {
    let letters = code.letters();
    let n = letters.len();
    let n1 = letters.iter().filter(|&&c| c == 1).count();
    let n2 = n - n1;
    let mut sigma = 0usize;
    let mut tau = 0usize;
    let mut from_bond_two = 0usize;
    for i in 0..n {
        let here = letters[i];
        let next = letters[(i + 1) % n];
        if here == next {
            sigma += 1;
            if here == 2 {
                from_bond_two += 1;
            }
        } else {
            tau += 1;
        }
    }
    let chi = n + from_bond_two;
    let action = 2.0 * (n1 as f64 * l1 + n2 as f64 * l2);
    let magnitude = powi(r, sigma) * powi(1.0 - r * r, tau / 2);
    let amplitude = if chi % 2 == 0 { magnitude } else { -magnitude };
    PrimeOrbit {
        code,
        n1,
        n2,
        sigma,
        tau,
        chi,
        action,
        amplitude,
    }
}

// Integer power by repeated squaring; num_traits::Float::powi would also
// do, but exponents here are tiny nonneg usize counts.
fn powi(base: f64, mut exp: usize) -> f64 {
    let mut acc = 1.0;
    let mut base = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

/// Attributes and weight of one prime orbit on a two-bond chain.
pub fn orbit_attributes(code: OrbitCode, chain: &ChainGraph) -> Result<PrimeOrbit, OrbitError> {
    if chain.bonds() != 2 {
        return Err(OrbitError::UnsupportedChain {
            bonds: chain.bonds(),
        });
    }
    let l1 = chain.bond_actions()[0];
    let l2 = chain.bond_actions()[1];
    let r = chain.vertex_reflections()[0];
    Ok(attributes(code, l1, l2, r))
}

/// Stream of `(prime orbit, repetition)` pairs ordered by total event count,
/// then code, then repetition — each total-event slice is one Duval pass.
#[derive(Debug, Clone)]
pub struct OrbitTerms {
    l1: f64,
    l2: f64,
    r: f64,
    budget: usize,
    events: usize,
    inner: PrimeCodes,
}

impl Iterator for OrbitTerms {
    type Item = OrbitTerm;

    fn next(&mut self) -> Option<OrbitTerm> {
        loop {
            if let Some(code) = self.inner.next() {
                if self.events % code.len() == 0 {
                    let nu = self.events / code.len();
                    return Some(OrbitTerm {
                        orbit: attributes(code, self.l1, self.l2, self.r),
                        nu,
                    });
                }
            } else if self.events < self.budget {
                self.events += 1;
                self.inner = PrimeCodes::new(self.events);
            } else {
                return None;
            }
        }
    }
}

/// Every pair `(p, nu)` with `nu * n_p <= max_events`, exactly once.
pub fn orbit_terms(chain: &ChainGraph, max_events: usize) -> Result<OrbitTerms, OrbitError> {
    check_budget(max_events)?;
    if chain.bonds() != 2 {
        return Err(OrbitError::UnsupportedChain {
            bonds: chain.bonds(),
        });
    }
    Ok(OrbitTerms {
        l1: chain.bond_actions()[0],
        l2: chain.bond_actions()[1],
        r: chain.vertex_reflections()[0],
        budget: max_events,
        events: 1,
        inner: PrimeCodes::new(1),
    })
}

/// Closed-form orbit counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCensus {
    /// Prime orbits of each length 1 ..= budget (Witt numbers).
    pub primes_per_length: Vec<u64>,
    /// Total `(p, nu)` terms within the budget: the number of binary
    /// necklaces of length <= budget.
    pub terms_total: u64,
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut result = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Number of binary Lyndon words of length n (Witt number).
fn witt_number(n: u64) -> u64 {
    let mut total = 0i64;
    for d in 1..=n {
        if n % d == 0 {
            total += moebius(d) * (1i64 << (n / d));
        }
    }
    debug_assert!(total > 0 && total % n as i64 == 0);
    (total / n as i64) as u64
}

/// Number of binary necklaces of length n.
fn necklace_count(n: u64) -> u64 {
    let mut total = 0u64;
    for d in 1..=n {
        if n % d == 0 {
            total += euler_phi(d) * (1u64 << (n / d));
        }
    }
    debug_assert_eq!(total % n, 0);
    total / n
}

/// Analytic census for an event budget; must match enumeration exactly.
pub fn count_orbits(max_events: usize) -> Result<OrbitCensus, OrbitError> {
    check_budget(max_events)?;
    let primes_per_length = (1..=max_events as u64).map(witt_number).collect();
    let terms_total = (1..=max_events as u64).map(necklace_count).sum();
    Ok(OrbitCensus {
        primes_per_length,
        terms_total,
    })
}
