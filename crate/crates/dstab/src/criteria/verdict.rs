use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Admissible diagonal perturbation classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PerturbationClass {
    /// All positive diagonal matrices.
    Positive,
    /// Positive diagonals with every entry at least 1 (used when zero lies
    /// outside the closure of the region).
    PositiveGe1,
    /// Nonnegative diagonals, applied additively as A - D.
    NonnegativeAdditive,
}

impl PerturbationClass {
    pub fn admits(&self, d: &[f64]) -> bool {
        match self {
            PerturbationClass::Positive => d.iter().all(|&x| x > 0.0),
            PerturbationClass::PositiveGe1 => d.iter().all(|&x| x >= 1.0),
            PerturbationClass::NonnegativeAdditive => d.iter().all(|&x| x >= 0.0),
        }
    }

    pub fn is_additive(&self) -> bool {
        matches!(self, PerturbationClass::NonnegativeAdditive)
    }
}

/// A positive (or nonnegative) diagonal matrix together with its class tag.
#[derive(Debug, Clone, Serialize)]
pub struct DiagonalPerturbation {
    pub d: Vec<f64>,
    pub class: PerturbationClass,
}

impl DiagonalPerturbation {
    pub fn new(d: Vec<f64>, class: PerturbationClass) -> Result<Self> {
        if !class.admits(&d) {
            return Err(Error::ClassMismatch(format!(
                "entries {:?} not admissible for {:?}",
                d, class
            )));
        }
        Ok(Self { d, class })
    }
}

/// A falsification witness that can be re-checked independently.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case", rename_all_fields = "camelCase")]
pub enum Witness {
    /// Diagonal perturbation whose spectrum leaves the region, plus the
    /// homotopy point where an eigenvalue touches the boundary.
    Diagonal {
        d_outside: Vec<f64>,
        d_boundary: Vec<f64>,
        /// Parameter along D(t) = t*D_outside + (1-t)*Identity (or t*D for
        /// the additive mode) where the boundary crossing was bisected.
        t_boundary: f64,
        eigenvalue_re: f64,
        eigenvalue_im: f64,
    },
    /// Exact violation of the P0+ necessary condition for D-stability.
    MinorViolation {
        order: usize,
        indices: Vec<usize>,
        value: String,
    },
}

impl Witness {
    pub fn diagonal(d_outside: Vec<f64>, d_boundary: Vec<f64>, t: f64, z: Complex64) -> Self {
        Witness::Diagonal {
            d_outside,
            d_boundary,
            t_boundary: t,
            eigenvalue_re: z.re,
            eigenvalue_im: z.im,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictStatus {
    Certified,
    Falsified,
    Inconclusive,
}

/// Outcome of a D-stability analysis. `Falsified` always carries a
/// re-checkable witness; `Certified` always carries a certificate
/// reference; sampling alone never certifies.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilityVerdict {
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    /// Content hash of the certificate document, when one was produced.
    pub certificate_id: Option<String>,
    pub samples_tested: usize,
    pub seed: u64,
    /// Human-readable trace of the pipeline stages that ran.
    pub notes: Vec<String>,
}

impl StabilityVerdict {
    pub fn inconclusive(samples: usize, seed: u64) -> Self {
        Self {
            status: VerdictStatus::Inconclusive,
            witness: None,
            certificate_id: None,
            samples_tested: samples,
            seed,
            notes: Vec::new(),
        }
    }

    pub fn falsified(witness: Witness, samples: usize, seed: u64) -> Self {
        Self {
            status: VerdictStatus::Falsified,
            witness: Some(witness),
            certificate_id: None,
            samples_tested: samples,
            seed,
            notes: Vec::new(),
        }
    }

    pub fn certified(certificate_id: String, samples: usize, seed: u64) -> Self {
        Self {
            status: VerdictStatus::Certified,
            witness: None,
            certificate_id: Some(certificate_id),
            samples_tested: samples,
            seed,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}
