//! Fractional-order systems d^gamma x = A x: asymptotic stability is an
//! eigenvalue-argument condition equivalent to sector stability at
//! theta = pi (1 - gamma/2), and robustness under positive diagonal
//! scalings is sector D-stability.
//!
//! Run with: cargo run -p dstab --example fractional_order

use dstab::criteria::ExactSettings;
use dstab::linalg::rational::RationalMatrix;
use dstab::linalg::RealMatrix;
use dstab::systems::{frac_order_to_sector, frac_system_dstab, sector_to_frac_order};
use dstab::tol::Tol;

fn main() {
    let tol = Tol::DEFAULT;

    println!("order <-> sector map:");
    for gamma in [1.0, 4.0 / 3.0, 1.5, 1.9] {
        let theta = frac_order_to_sector(gamma).unwrap();
        let back = sector_to_frac_order(theta).unwrap();
        println!("  gamma = {gamma:.4} -> theta = {theta:.6} -> gamma = {back:.4}");
    }

    let a = RealMatrix::identity(2).scale(-1.0);
    let exact = ExactSettings {
        matrix: RationalMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]]).unwrap(),
        cos2theta: None,
    };

    // gamma = 1 is the classical first-order case: the sector degenerates
    // to the half-plane, where exact one-signed certificates exist.
    let out = frac_system_dstab(&a, 1.0, 200, 0, tol, Some(&exact)).unwrap();
    println!("\nA = -I at gamma = 1 (half-plane): {:?}", out.verdict.status);
    if let Some(id) = &out.verdict.certificate_id {
        println!("  certificate id: {id}");
    }

    // gamma = 4/3 maps to theta = pi/3 where 2cos(theta) = 1 is exactly
    // rational: the certificate engine runs, but one-signed coefficients
    // are structurally impossible for proper sectors (a diagonal entry of
    // the inverse is always negative for a Hurwitz matrix), so the outcome
    // is an honest Inconclusive even for -I.
    let out = frac_system_dstab(&a, 4.0 / 3.0, 200, 0, tol, Some(&exact)).unwrap();
    println!("A = -I at gamma = 4/3: {:?}", out.verdict.status);
    for note in &out.verdict.notes {
        println!("  note: {note}");
    }

    // gamma = 1.5 maps to theta = pi/4 with irrational 2cos(theta): the
    // exact engine is not even reachable.
    let out = frac_system_dstab(&a, 1.5, 200, 0, tol, Some(&exact)).unwrap();
    println!("A = -I at gamma = 1.5: {:?}", out.verdict.status);

    // Out-of-range orders are rejected.
    println!(
        "\ngamma = 2 rejected: {}",
        frac_order_to_sector(2.0).is_err()
    );
}
