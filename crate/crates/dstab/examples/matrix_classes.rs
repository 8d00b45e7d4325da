//! Determinantal matrix classes: Q, P, P0 and P0+ membership reports.
//!
//! Run with: cargo run -p dstab --example matrix_classes

use dstab::classes::class_report;
use dstab::linalg::RealMatrix;
use dstab::tol::Tol;

fn show(name: &str, a: &RealMatrix) {
    let r = class_report(a, Tol::DEFAULT).unwrap();
    println!(
        "{name}: Q = {}, P = {}, P0 = {}, P0+ = {}",
        r.is_q, r.is_p, r.is_p0, r.is_p0_plus
    );
    if let Some(v) = r.first_violation {
        println!(
            "  first violating minor: order {} at indices {:?}, value {}",
            v.order, v.indices, v.value
        );
    }
}

fn main() {
    show("identity", &RealMatrix::identity(3));

    // det = -5: not even P0.
    show(
        "[[1,2],[3,1]]",
        &RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]).unwrap(),
    );

    // P0 but not Q: the second minor sum vanishes.
    show("diag(1, 0)", &RealMatrix::diag(&[1.0, 0.0]));

    // Diagonally dominant with nonpositive off-diagonals: an M-matrix,
    // hence P.
    show(
        "M-matrix",
        &RealMatrix::from_rows(&[
            vec![3.0, -1.0, -0.5],
            vec![-0.25, 2.0, -1.0],
            vec![-1.0, -0.5, 4.0],
        ])
        .unwrap(),
    );

    // A Hurwitz matrix whose negation fails P0+: certainly not D-stable.
    let a = RealMatrix::from_rows(&[vec![1.0, -2.0], vec![2.0, -2.5]]).unwrap();
    show("-A for the Hurwitz counterexample", &a.neg());
}
