//! Randomized falsification of (region, D)-stability with witness
//! localization. Samples diagonal perturbations from the declared class
//! (log-uniform entries), and on finding a spectrum escape bisects the
//! straight-line homotopy D(t) = t*D + (1-t)*D_base to pin down a
//! boundary-touching perturbation. Sampling success is never reported as
//! certification.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::criteria::verdict::{PerturbationClass, StabilityVerdict, Witness};
use crate::error::{Error, Result};
use crate::linalg::eig::eigenvalues;
use crate::linalg::matrix::RealMatrix;
use crate::regions::{LmiRegion, MembershipStatus};
use crate::tol::Tol;

/// Bisection stops when the homotopy interval is this small.
const BISECTION_WIDTH: f64 = 1e-12;

/// Independent RNG stream for sample `index`, derived from the run seed so
/// results do not depend on evaluation order or parallelism.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Log-uniform diagonal sample for the class.
pub fn sample_diagonal(class: PerturbationClass, n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let range = match class {
        PerturbationClass::Positive => (-3.0, 3.0),
        PerturbationClass::PositiveGe1 => (0.0, 3.0),
        PerturbationClass::NonnegativeAdditive => (-3.0, 3.0),
    };
    (0..n)
        .map(|_| 10f64.powf(rng.random_range(range.0..range.1)))
        .collect()
}

/// All eigenvalues strictly inside, plus the eigenvalue closest to (or
/// beyond) the boundary.
fn classify(
    matrix: &RealMatrix,
    region: &LmiRegion,
    tol: Tol,
) -> Result<(bool, Complex64, f64)> {
    let spec = eigenvalues(matrix)?;
    let mut all_inside = true;
    let mut worst = (Complex64::new(0.0, 0.0), f64::INFINITY);
    for &z in &spec.eigenvalues {
        let m = region.contains(z, tol);
        if m.status != MembershipStatus::Inside {
            all_inside = false;
        }
        if m.margin < worst.1 {
            worst = (z, m.margin);
        }
    }
    Ok((all_inside, worst.0, worst.1))
}

/// Falsification sweep over a caller-supplied embedding of the diagonal
/// sample into a matrix. `base` is the class-neutral element (all-ones for
/// multiplicative scaling, all-zeros for additive perturbations) from which
/// the witness homotopy starts.
#[allow(clippy::too_many_arguments)]
pub fn falsify_with(
    n_diag: usize,
    matrix_for: &dyn Fn(&[f64]) -> RealMatrix,
    base: &[f64],
    region: &LmiRegion,
    class: PerturbationClass,
    budget: usize,
    seed: u64,
    tol: Tol,
) -> Result<StabilityVerdict> {
    if budget == 0 {
        return Err(Error::EmptyBudget);
    }

    // The unperturbed matrix must sit inside the region; otherwise the
    // neutral element is already a witness.
    let (base_inside, base_eig, _) = classify(&matrix_for(base), region, tol)?;
    if !base_inside {
        let witness = Witness::diagonal(base.to_vec(), base.to_vec(), 0.0, base_eig);
        return Ok(
            StabilityVerdict::falsified(witness, 0, seed)
                .with_note("matrix itself is not region-stable (neutral perturbation escapes)"),
        );
    }

    for i in 0..budget {
        let mut rng = sample_rng(seed, i as u64);
        let d = sample_diagonal(class, n_diag, &mut rng);
        let (inside, _, _) = classify(&matrix_for(&d), region, tol)?;
        if inside {
            continue;
        }
        // Bisect t in [0, 1] along D(t) = t*d + (1-t)*base.
        let blend = |t: f64| -> Vec<f64> {
            d.iter()
                .zip(base)
                .map(|(&x, &b)| t * x + (1.0 - t) * b)
                .collect()
        };
        let mut lo = 0.0f64;
        let mut hi = 1.0f64;
        while hi - lo > BISECTION_WIDTH {
            let mid = 0.5 * (lo + hi);
            let (mid_inside, _, _) = classify(&matrix_for(&blend(mid)), region, tol)?;
            if mid_inside {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t0 = 0.5 * (lo + hi);
        let d_boundary = blend(t0);
        let (_, boundary_eig, _) = classify(&matrix_for(&d_boundary), region, tol)?;
        let witness = Witness::diagonal(d, d_boundary, t0, boundary_eig);
        return Ok(StabilityVerdict::falsified(witness, i + 1, seed));
    }
    Ok(StabilityVerdict::inconclusive(budget, seed))
}

/// Falsification sweep for plain multiplicative (sigma(DA)) or additive
/// (sigma(A - D)) D-stability with respect to the region.
pub fn falsify_sweep(
    a: &RealMatrix,
    region: &LmiRegion,
    class: PerturbationClass,
    budget: usize,
    seed: u64,
    tol: Tol,
) -> Result<StabilityVerdict> {
    let n = a.dim();
    if class.is_additive() {
        let matrix_for = |d: &[f64]| a.sub(&RealMatrix::diag(d));
        falsify_with(n, &matrix_for, &vec![0.0; n], region, class, budget, seed, tol)
    } else {
        let matrix_for = |d: &[f64]| a.scale_rows(d);
        falsify_with(n, &matrix_for, &vec![1.0; n], region, class, budget, seed, tol)
    }
}
