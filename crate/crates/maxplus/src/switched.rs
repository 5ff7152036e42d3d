//! Periodic switching schedules and their reduction to a single system
//! matrix.
//!
//! A schedule applies named matrices in phases: phase i uses matrix `A_i`
//! for `l_i` consecutive steps, and the whole pattern of `K = sum l_i` steps
//! repeats. Sampling the trajectory every K steps turns the switched system
//! into the ordinary recursion `Y(k+1) = M ⊗ Y(k)` with
//!
//!   M = A_m^(l_m) ⊗ ... ⊗ A_2^(l_2) ⊗ A_1^(l_1)
//!
//! (first phase rightmost, later phases multiplying on the left). When M is
//! irreducible, the switched system inherits asymptotic periodicity with
//! per-step growth `lambda(M)/K`, period `K * d(M)`, and transient
//! `K * k0(M)` in original step indices.
//!
//! Irreducibility of M is the real precondition. Products of irreducible
//! matrices need not be irreducible (a forward and a backward cyclic
//! permutation compose to a diagonal matrix), but if every factor is
//! irreducible with an all-finite main diagonal the product is guaranteed
//! irreducible; that sufficient condition is checked and reported, never
//! required. The converse also fails: two reducible factors can have an
//! irreducible product, and such schedules are analyzed normally.

use std::collections::{HashMap, HashSet};
use std::cmp::Ordering;

use num::BigInt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Rational;
use crate::spectral::{self, SpectralResult, DEFAULT_TRANSIENT_CAP};

/// Named matrices available to a schedule.
pub type MatrixMap = HashMap<String, Matrix>;

/// One phase of a switching law: apply `matrix` for `length` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase {
    pub matrix: String,
    pub length: usize,
}

/// Periodic switching law as an ordered list of phases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    phases: Vec<Phase>,
}

impl Schedule {
    pub fn new(phases: Vec<Phase>) -> Result<Schedule> {
        if phases.is_empty() {
            return Err(Error::InvalidSchedule("a schedule needs at least one phase"));
        }
        if phases.iter().any(|p| p.length == 0) {
            return Err(Error::InvalidSchedule("phase lengths must be >= 1"));
        }
        Ok(Schedule { phases })
    }

    /// Convenience constructor from `(name, length)` pairs.
    pub fn from_pairs(pairs: &[(&str, usize)]) -> Result<Schedule> {
        Schedule::new(
            pairs
                .iter()
                .map(|&(name, length)| Phase {
                    matrix: name.to_string(),
                    length,
                })
                .collect(),
        )
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    /// Total steps in one switching cycle: K = sum of phase lengths.
    pub fn cycle_length(&self) -> usize {
        self.phases.iter().map(|p| p.length).sum()
    }

    /// Matrix name applied at each step of one cycle, length K.
    pub fn step_names(&self) -> Vec<&str> {
        let mut names = Vec::with_capacity(self.cycle_length());
        for phase in &self.phases {
            for _ in 0..phase.length {
                names.push(phase.matrix.as_str());
            }
        }
        names
    }

    /// Distinct matrix names in first-use order.
    pub fn matrix_names(&self) -> Vec<&str> {
        let mut seen = HashSet::new();
        let mut names = Vec::new();
        for phase in &self.phases {
            if seen.insert(phase.matrix.as_str()) {
                names.push(phase.matrix.as_str());
            }
        }
        names
    }
}

/// Spectral data of a switched system, expressed in original step indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchedSpectral {
    /// The composed one-cycle matrix M.
    pub composed: Matrix,
    /// K, the steps per switching cycle.
    pub cycle_length: usize,
    /// Asymptotic growth per original step: lambda(M) / K.
    pub lambda_per_step: Rational,
    /// A period valid in original step indices: K * d(M). The trajectory's
    /// minimal period divides this value and may be smaller.
    pub period: usize,
    /// Transient in original step indices: K * k0(M).
    pub transient: usize,
    /// Spectral data of the composed matrix itself.
    pub composed_spectral: SpectralResult,
    /// Whether every factor was irreducible with an all-finite diagonal (the
    /// sufficient condition for the product's irreducibility).
    pub sufficient_condition_held: bool,
}

/// Result of a product irreducibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    pub product: Matrix,
    pub irreducible: bool,
    /// Whether each factor was irreducible with an all-finite main diagonal.
    pub hypothesis_held: bool,
}

/// Resolve a schedule to its composed one-cycle matrix
/// `M = A_m^(l_m) ⊗ ... ⊗ A_1^(l_1)` (first phase rightmost).
pub fn compose(schedule: &Schedule, matrices: &MatrixMap) -> Result<Matrix> {
    let mut acc: Option<Matrix> = None;
    for phase in schedule.phases() {
        let a = matrices
            .get(&phase.matrix)
            .ok_or_else(|| Error::UnknownMatrix(phase.matrix.clone()))?;
        let powered = a.pow(phase.length);
        acc = Some(match acc {
            None => powered,
            Some(prev) => powered.otimes(&prev)?,
        });
    }
    Ok(acc.expect("schedules have at least one phase"))
}

/// Computes the ordered product `A_m^(l_m) ⊗ ... ⊗ A_1^(l_1)` (first factor
/// rightmost), tests its irreducibility, and reports whether the sufficient
/// hypothesis held: every factor irreducible with an all-finite diagonal.
/// A held hypothesis with a reducible product contradicts the theory and is
/// surfaced as `TheoremViolation`.
pub fn product_irreducibility_check(factors: &[Matrix], powers: &[usize]) -> Result<ProductCheck> {
    assert!(!factors.is_empty(), "need at least one factor");
    assert_eq!(factors.len(), powers.len(), "one power per factor");
    assert!(powers.iter().all(|&l| l >= 1), "powers must be >= 1");

    let mut product: Option<Matrix> = None;
    for (a, &l) in factors.iter().zip(powers) {
        let powered = a.pow(l);
        product = Some(match product {
            None => powered,
            Some(prev) => powered.otimes(&prev)?,
        });
    }
    let product = product.expect("at least one factor");

    let hypothesis_held = factors
        .iter()
        .all(|a| a.has_finite_diagonal() && spectral::is_irreducible(a));
    let irreducible = spectral::is_irreducible(&product);
    if hypothesis_held && !irreducible {
        return Err(Error::TheoremViolation(
            "product of irreducible matrices with finite diagonals tested reducible".to_string(),
        ));
    }
    Ok(ProductCheck {
        product,
        irreducible,
        hypothesis_held,
    })
}

/// Spectral analysis of a switched system with the default transient cap.
pub fn switched_analysis(schedule: &Schedule, matrices: &MatrixMap) -> Result<SwitchedSpectral> {
    switched_analysis_capped(schedule, matrices, DEFAULT_TRANSIENT_CAP)
}

/// Composes the schedule and lifts the composed matrix's spectral data back
/// to original step indices. Fails with `NotIrreducible` when the composed
/// matrix is reducible; the sufficient condition on the factors is reported
/// but not required.
pub fn switched_analysis_capped(
    schedule: &Schedule,
    matrices: &MatrixMap,
    cap: usize,
) -> Result<SwitchedSpectral> {
    let composed = compose(schedule, matrices)?;
    let composed_spectral = spectral::spectral_analysis_capped(&composed, cap)?;
    let k = schedule.cycle_length();

    let sufficient_condition_held = schedule.matrix_names().iter().all(|name| {
        let a = &matrices[*name];
        a.has_finite_diagonal() && spectral::is_irreducible(a)
    });

    Ok(SwitchedSpectral {
        cycle_length: k,
        lambda_per_step: &composed_spectral.lambda / Rational::from_integer(BigInt::from(k)),
        period: k * composed_spectral.period,
        transient: k * composed_spectral.transient,
        composed,
        composed_spectral,
        sufficient_condition_held,
    })
}

/// How the eigenvalue of a product relates to the sum of the factors'
/// eigenvalues. Both directions occur, so this only reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub lambda_a: Rational,
    pub lambda_b: Rational,
    pub lambda_ab: Rational,
    /// `lambda_ab` compared against `lambda_a + lambda_b`.
    pub comparison: Ordering,
}

impl ProbeReport {
    pub fn sum(&self) -> Rational {
        &self.lambda_a + &self.lambda_b
    }

    pub fn comparison_symbol(&self) -> &'static str {
        match self.comparison {
            Ordering::Greater => ">",
            Ordering::Equal => "=",
            Ordering::Less => "<",
        }
    }
}

/// Eigenvalues of A, B, and A ⊗ B, and the side of lambda(A) + lambda(B) on
/// which lambda(A ⊗ B) falls. Requires all three matrices irreducible.
pub fn eigenvalue_relation_probe(a: &Matrix, b: &Matrix) -> Result<ProbeReport> {
    let lambda_a = spectral::eigenvalue(a)?.lambda;
    let lambda_b = spectral::eigenvalue(b)?.lambda;
    let lambda_ab = spectral::eigenvalue(&a.otimes(b)?)?.lambda;
    let sum = &lambda_a + &lambda_b;
    Ok(ProbeReport {
        comparison: lambda_ab.cmp(&sum),
        lambda_a,
        lambda_b,
        lambda_ab,
    })
}
