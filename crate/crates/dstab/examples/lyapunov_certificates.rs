//! Lyapunov certificates over LMI regions: solve the reduced equation,
//! verify W = L(x)H + M(x)(HA) + M^T(x)(A^T H) is negative definite.
//!
//! Run with: cargo run -p dstab --example lyapunov_certificates

use dstab::criteria::{lyapunov_certificate, verify_lyapunov};
use dstab::linalg::RealMatrix;
use dstab::regions::LmiRegion;
use dstab::tol::Tol;

fn main() {
    let tol = Tol::DEFAULT;
    let a = RealMatrix::from_rows(&[vec![-1.0, 2.0], vec![-2.0, -1.0]]).unwrap();
    println!("A has eigenvalues -1 +- 2i\n");

    for (name, region) in [
        ("left half-plane", LmiRegion::half_plane()),
        ("shifted, Re z < -0.5", LmiRegion::shifted_half_plane(-0.5)),
        (
            "sector pi/3",
            LmiRegion::sector(std::f64::consts::FRAC_PI_3).unwrap(),
        ),
        (
            "sector pi/4",
            LmiRegion::sector(std::f64::consts::FRAC_PI_4).unwrap(),
        ),
    ] {
        match lyapunov_certificate(&region, &a, tol).unwrap() {
            Some(h) => {
                let ok = verify_lyapunov(&region, &a, &h, tol).unwrap();
                println!(
                    "{name}: certificate found ({}x{} H), verifies = {ok}",
                    h.dim(),
                    h.dim()
                );
            }
            None => println!("{name}: no certificate (spectrum not inside the region)"),
        }
    }

    // A supplied H is rejected when the matrix is not region-stable.
    let rotation = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
    let verdict = verify_lyapunov(
        &LmiRegion::half_plane(),
        &rotation,
        &RealMatrix::identity(2),
        tol,
    )
    .unwrap();
    println!("\nrotation generator with H = I over the half-plane: verifies = {verdict}");
}
