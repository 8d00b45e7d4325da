//! Exact rational certificates of D-stability: the parametric block
//! determinant det[[A, D], [-D, A - 2cos(t)D]] as a polynomial in
//! d_1..d_n, and the one-signed-coefficient orthant test.
//!
//! Run with: cargo run -p dstab --example exact_certificate

use dstab::certify::{orthant_positivity, parametric_block_det, CertificateDocument};
use dstab::criteria::{dstab_check, ExactSettings};
use dstab::linalg::rational::{rat_int, RationalMatrix};
use dstab::regions::LmiRegion;
use dstab::tol::Tol;

fn main() {
    let tol = Tol::DEFAULT;

    // A lower-triangular Hurwitz matrix is D-stable, and its block
    // determinant factors as prod_i (a_ii^2 + d_i^2): every coefficient
    // positive, so the polynomial cannot vanish for d > 0, and no positive
    // diagonal scaling can push an eigenvalue onto the imaginary axis.
    let a = RationalMatrix::from_i64_rows(&[
        &[-1, 0, 0, 0],
        &[2, -2, 0, 0],
        &[-1, 3, -3, 0],
        &[4, -1, 2, -4],
    ])
    .unwrap();
    let poly = parametric_block_det(&a, &rat_int(0)).unwrap();
    let positivity = orthant_positivity(&poly);
    println!(
        "triangular 4x4: block determinant has {} terms, census {:?}, status {:?}",
        poly.num_terms(),
        poly.sign_census(),
        positivity.status
    );
    let doc = CertificateDocument::new(
        "block determinant over the positive orthant",
        &a,
        &rat_int(0),
        &poly,
        &positivity,
    );
    println!("certificate id: {}", doc.content_hash());

    let out = dstab_check(
        &a.to_real().unwrap(),
        &LmiRegion::half_plane(),
        None,
        200,
        0,
        tol,
        Some(&ExactSettings {
            matrix: a.clone(),
            cos2theta: None,
        }),
    )
    .unwrap();
    println!("full pipeline verdict: {:?}\n", out.verdict.status);

    // Mixed signs are an honest "cannot tell": this 4x4 mechanical-system
    // matrix is D-stable, but its block determinant has coefficients of
    // both signs, so the sufficient test reports Inconclusive rather than
    // inventing an answer.
    let mech = RationalMatrix::from_rows(vec![
        vec![rat_int(-1), rat_int(-1), rat_int(-1), rat_int(-4) / rat_int(5)],
        vec![rat_int(-4), rat_int(-5), rat_int(-4), rat_int(-4)],
        vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)],
        vec![rat_int(0), rat_int(1), rat_int(0), rat_int(0)],
    ])
    .unwrap();
    let poly = parametric_block_det(&mech, &rat_int(0)).unwrap();
    let positivity = orthant_positivity(&poly);
    println!(
        "mechanical 4x4: block determinant has {} terms, census {:?}, status {:?}",
        poly.num_terms(),
        poly.sign_census(),
        positivity.status
    );
    let out = dstab_check(
        &mech.to_real().unwrap(),
        &LmiRegion::half_plane(),
        None,
        500,
        0,
        tol,
        Some(&ExactSettings {
            matrix: mech,
            cos2theta: None,
        }),
    )
    .unwrap();
    println!("full pipeline verdict: {:?}", out.verdict.status);
    for note in &out.verdict.notes {
        println!("  note: {note}");
    }
}
