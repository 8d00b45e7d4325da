//! Eigenvalues and LMI-region membership: the three named regions and
//! spectrum classification.
//!
//! Run with: cargo run -p dstab --example spectra_and_regions

use dstab::linalg::{eigenvalues, RealMatrix};
use dstab::regions::{spectrum_in_region, LmiRegion};
use dstab::tol::Tol;
use num_complex::Complex64;

fn main() {
    let tol = Tol::DEFAULT;

    let a = RealMatrix::from_rows(&[
        vec![-1.0, 2.0, 0.0],
        vec![-2.0, -1.0, 0.5],
        vec![0.0, 0.0, -3.0],
    ])
    .unwrap();
    let spectrum = eigenvalues(&a).unwrap();
    println!("spectrum of A (residual {:.2e}):", spectrum.residual);
    for z in &spectrum.eigenvalues {
        println!("  {:+.6} {:+.6}i", z.re, z.im);
    }

    let half = LmiRegion::half_plane();
    let shifted = LmiRegion::shifted_half_plane(-0.5);
    let sector = LmiRegion::sector(std::f64::consts::FRAC_PI_4).unwrap();

    println!("\npoint membership (margin = negated largest eigenvalue of the characteristic function):");
    for z in [
        Complex64::new(-1.0, 0.5),
        Complex64::new(-1.0, 2.0),
        Complex64::new(0.0, 1.0),
    ] {
        let h = half.contains(z, tol);
        let s = sector.contains(z, tol);
        println!(
            "  z = {z}: half-plane {:?} (margin {:+.3}), quarter sector {:?} (margin {:+.3})",
            h.status, h.margin, s.status, s.margin
        );
    }

    println!("\nspectrum location of A:");
    for (name, region) in [
        ("left half-plane", &half),
        ("shifted half-plane Re z < -0.5", &shifted),
        ("quarter sector", &sector),
    ] {
        let loc = spectrum_in_region(&spectrum, region, tol);
        println!(
            "  {name}: all inside = {} (outside: {}, boundary: {})",
            loc.all_inside,
            loc.outside.len(),
            loc.boundary_hits.len()
        );
    }

    println!(
        "\nrecession along the negative real axis: sector {}, shifted {}",
        sector.has_recession_negative_real_axis(tol),
        shifted.has_recession_negative_real_axis(tol)
    );
}
