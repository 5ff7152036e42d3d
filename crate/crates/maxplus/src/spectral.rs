//! Spectral theory of irreducible max-plus matrices.
//!
//! For an irreducible matrix A there is a unique eigenvalue lambda, equal to
//! the maximum mean weight over all circuits of the precedence digraph, with
//! a nonzero eigenvector h satisfying `A ⊗ h = lambda ⊗ h` exactly. Powers of
//! A are asymptotically periodic: there are a period order d and a transient
//! k0 with
//!
//!   A^(k+d) = (d * lambda) ⊗ A^k   for all k >= k0,
//!
//! which is the engine behind every performance statement in this crate. The
//! reported d is the minimal period and k0 the first index where the
//! relation starts to hold; k0 may be 0 when the identity itself recurs (a
//! plain cyclic permutation matrix, for instance).

use std::collections::HashMap;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{times_int, Rational, Scalar};

/// Default cap on the number of matrix powers examined while searching for
/// a repeat. Paper-scale instances repeat within a handful of steps;
/// transients grow with matrix size and weight spread.
pub const DEFAULT_TRANSIENT_CAP: usize = 10_000;

/// Eigenvalue of an irreducible matrix together with a circuit attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eigenvalue {
    /// Mean weight of the critical circuit, in time units per step.
    pub lambda: Rational,
    /// Nodes of one critical circuit, 0-based, following arc direction;
    /// the arc out of the last node returns to the first.
    pub critical_circuit: Vec<usize>,
}

/// Full spectral data of an irreducible matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralResult {
    pub lambda: Rational,
    pub eigenvector: Vector,
    /// Minimal period order d.
    pub period: usize,
    /// First power index from which the periodicity relation holds.
    pub transient: usize,
    pub critical_circuit: Vec<usize>,
}

/// True iff the precedence digraph is strongly connected, i.e. every ordered
/// node pair is joined by a finite-weight path. A 1x1 matrix is irreducible
/// iff its single entry is finite: `[[eps]]` has no path from node 1 to
/// itself, so it is reducible and has no eigenvalue.
pub fn is_irreducible(a: &Matrix) -> bool {
    if a.dim() == 1 {
        return a[(0, 0)].is_finite();
    }
    Digraph::from_matrix(a).is_strongly_connected()
}

/// The digraph of a matrix (one arc j -> i per finite entry a(i, j)).
pub fn to_digraph(a: &Matrix) -> Digraph {
    Digraph::from_matrix(a)
}

/// Mean weight of a circuit given as a 0-based node sequence (the closing
/// arc from the last node to the first is implied). `None` if any arc along
/// the circuit is missing.
pub fn circuit_mean(a: &Matrix, circuit: &[usize]) -> Option<Rational> {
    if circuit.is_empty() {
        return None;
    }
    let mut sum = Rational::from_integer(0.into());
    for idx in 0..circuit.len() {
        let from = circuit[idx];
        let to = circuit[(idx + 1) % circuit.len()];
        // arc from -> to carries entry a(to, from)
        sum += a[(to, from)].as_rational()?;
    }
    Some(sum / Rational::from_integer((circuit.len() as u64).into()))
}

/// Eigenvalue of an irreducible matrix: the maximum circuit mean, computed
/// by Karp's dynamic program over exact rationals, with a witness circuit.
pub fn eigenvalue(a: &Matrix) -> Result<Eigenvalue> {
    if !is_irreducible(a) {
        return Err(Error::NotIrreducible);
    }
    let (lambda, critical_circuit) = Digraph::from_matrix(a)
        .max_mean_cycle()
        .expect("irreducible matrices have at least one circuit");
    assert_eq!(
        circuit_mean(a, &critical_circuit).as_ref(),
        Some(&lambda),
        "critical circuit mean must equal the eigenvalue"
    );
    Ok(Eigenvalue {
        lambda,
        critical_circuit,
    })
}

/// An eigenvector for the given eigenvalue.
///
/// Construction: normalize `B = (-lambda) ⊗ A`, form the closure
/// `B+ = B ⊕ B^2 ⊕ ... ⊕ B^n`, and return a column of `B+` whose diagonal
/// entry is 0 — such a column exists exactly when lambda is the true
/// eigenvalue (the diagonal zeros of `B+` mark the critical nodes), and it
/// satisfies `A ⊗ h = lambda ⊗ h`. All entries of the returned vector are
/// finite for irreducible A.
pub fn eigenvector(a: &Matrix, lambda: &Rational) -> Result<Vector> {
    if !is_irreducible(a) {
        return Err(Error::NotIrreducible);
    }
    let b = a.scale(&Scalar::Finite(-lambda.clone()))?;
    let closure = plus_closure(&b)?;
    let zero = Scalar::zero();
    for j in 0..closure.dim() {
        if closure[(j, j)] == zero {
            return Ok(closure.column(j));
        }
    }
    Err(Error::NoEigenvectorColumn)
}

/// `B ⊕ B^2 ⊕ ... ⊕ B^n`.
fn plus_closure(b: &Matrix) -> Result<Matrix> {
    let mut power = b.clone();
    let mut acc = b.clone();
    for _ in 2..=b.dim() {
        power = power.otimes(b)?;
        acc = acc.oplus(&power)?;
    }
    Ok(acc)
}

/// Minimal period order d and transient k0 of an irreducible matrix, using
/// the default iteration cap.
pub fn period_and_transient(a: &Matrix) -> Result<(usize, usize)> {
    period_and_transient_capped(a, DEFAULT_TRANSIENT_CAP)
}

/// Same as [`period_and_transient`] with an explicit cap on the number of
/// powers examined.
pub fn period_and_transient_capped(a: &Matrix, cap: usize) -> Result<(usize, usize)> {
    let lambda = eigenvalue(a)?.lambda;
    period_given_lambda(a, &lambda, cap)
}

/// Power-hashing search for the minimal (d, k0): iterate exact powers of the
/// normalized matrix `B = (-lambda) ⊗ A` starting from `B^0 = I` and record
/// each in a hash map until a power repeats. The first collision is
/// `B^(k0+d) = B^k0` with both d and k0 minimal.
fn period_given_lambda(a: &Matrix, lambda: &Rational, cap: usize) -> Result<(usize, usize)> {
    let b = a.scale(&Scalar::Finite(-lambda.clone()))?;
    let mut seen: HashMap<Matrix, usize> = HashMap::new();
    let mut power = Matrix::identity(a.dim());
    let mut k = 0usize;
    loop {
        if let Some(&first) = seen.get(&power) {
            return Ok((k - first, first));
        }
        seen.insert(power.clone(), k);
        if k >= cap {
            return Err(Error::TransientBoundExceeded { cap });
        }
        power = power.otimes(&b)?;
        k += 1;
    }
}

/// Bundled spectral analysis with the default transient cap.
pub fn spectral_analysis(a: &Matrix) -> Result<SpectralResult> {
    spectral_analysis_capped(a, DEFAULT_TRANSIENT_CAP)
}

/// Eigenvalue, eigenvector, period order, transient, and critical circuit of
/// an irreducible matrix. Every defining identity is re-checked exactly
/// before returning; a failure would be a bug, not an input condition, and
/// panics.
pub fn spectral_analysis_capped(a: &Matrix, cap: usize) -> Result<SpectralResult> {
    let Eigenvalue {
        lambda,
        critical_circuit,
    } = eigenvalue(a)?;
    let h = eigenvector(a, &lambda)?;
    let (period, transient) = period_given_lambda(a, &lambda, cap)?;

    let lhs = a.apply(&h).expect("dimensions agree");
    let rhs = h.scale(&Scalar::Finite(lambda.clone())).expect("finite lambda");
    assert_eq!(lhs, rhs, "eigenvector residual must vanish exactly");

    let growth = Scalar::Finite(times_int(&lambda, period));
    let low = a.pow(transient);
    assert_eq!(
        a.pow(transient + period),
        low.scale(&growth).expect("finite growth"),
        "periodicity relation must hold at the reported transient"
    );

    Ok(SpectralResult {
        lambda,
        eigenvector: h,
        period,
        transient,
        critical_circuit,
    })
}
