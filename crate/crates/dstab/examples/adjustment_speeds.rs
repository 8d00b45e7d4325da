//! Dynamic adjustment with unknown speeds: a system z' = B A z with
//! positive diagonal speeds B is stable for every choice of speeds exactly
//! when A is D-stable. The same reduction covers multi-timescale systems
//! eps_i x_i' = f_i(x), whose linearization is D A with D = diag(1/eps_i).
//!
//! Run with: cargo run -p dstab --example adjustment_speeds

use dstab::criteria::{dstab_check, ExactSettings, VerdictStatus, Witness};
use dstab::linalg::rational::RationalMatrix;
use dstab::regions::LmiRegion;
use dstab::tol::Tol;

fn main() {
    let tol = Tol::DEFAULT;

    // A price-adjustment Jacobian with dominant own-price effects:
    // triangular interaction structure makes it D-stable, so equilibrium
    // is restored no matter how fast or slow each market adjusts.
    let jacobian = RationalMatrix::from_i64_rows(&[
        &[-3, 0, 0],
        &[1, -2, 0],
        &[-1, 2, -4],
    ])
    .unwrap();
    let out = dstab_check(
        &jacobian.to_real().unwrap(),
        &LmiRegion::half_plane(),
        None,
        500,
        0,
        tol,
        Some(&ExactSettings {
            matrix: jacobian,
            cos2theta: None,
        }),
    )
    .unwrap();
    println!("dominant own-price Jacobian: {:?}", out.verdict.status);
    if out.verdict.status == VerdictStatus::Certified {
        println!("  stable for every assignment of adjustment speeds");
    }

    // Strong cross-effects break the property: some ratio of speeds sends
    // a pair of roots across the imaginary axis even though the system is
    // stable at unit speeds.
    let fragile = RationalMatrix::from_rows(vec![
        vec![
            dstab::linalg::rational::rat_int(1),
            dstab::linalg::rational::rat_int(-2),
        ],
        vec![
            dstab::linalg::rational::rat_int(2),
            dstab::linalg::rational::rat_i64(-5, 2),
        ],
    ])
    .unwrap();
    let out = dstab_check(
        &fragile.to_real().unwrap(),
        &LmiRegion::half_plane(),
        None,
        2000,
        7,
        tol,
        Some(&ExactSettings {
            matrix: fragile,
            cos2theta: None,
        }),
    )
    .unwrap();
    println!("\nstrong cross-effect Jacobian: {:?}", out.verdict.status);
    if let Some(Witness::Diagonal { d_boundary, .. }) = &out.verdict.witness {
        println!(
            "  oscillation onset at speed ratio b1/b2 = {:.6}",
            d_boundary[0] / d_boundary[1]
        );
    }
}
