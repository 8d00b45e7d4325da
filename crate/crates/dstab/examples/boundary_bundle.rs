//! The six boundary conditions for a fixed positive diagonal D, computed
//! through six independent routes and cross-checked: ray test on
//! sigma(DA), complex determinants, square-shift eigenvalues, the
//! resolvent-sum determinant, the 2n x 2n block determinant, and the
//! characteristic-polynomial remainder.
//!
//! Run with: cargo run -p dstab --example boundary_bundle

use dstab::criteria::{boundary_tests_imaginary, boundary_tests_sector};
use dstab::linalg::RealMatrix;
use dstab::tol::Tol;

const NAMES: [&str; 6] = [
    "(i)   rays free of sigma(DA)",
    "(ii)  det(A - zD), det(A - conj(z)D) != 0",
    "(iii) -1 not in sigma((DA)^2 - 2cos(t)DA)",
    "(iv)  det(AD^-1 + DA^-1 - 2cos(t)I) != 0",
    "(v)   block determinant != 0",
    "(vi)  charpoly(DA) not divisible by x^2 - 2cos(t)x + 1",
];

fn show(label: &str, bundle: &dstab::criteria::BoundaryTestBundle) {
    println!("{label} (theta = {:.4}):", bundle.theta);
    for ((name, ok), margin) in NAMES.iter().zip(bundle.conditions).zip(bundle.margins) {
        println!("  {name}: {ok} (margin {margin:.3e})");
    }
    println!("  agreement: {}\n", bundle.agreement);
}

fn main() {
    let tol = Tol::DEFAULT;

    let stable = RealMatrix::from_rows(&[
        vec![-2.0, 1.0, 0.0],
        vec![0.0, -1.0, 0.5],
        vec![-0.5, 0.0, -3.0],
    ])
    .unwrap();
    let d = [0.2, 1.0, 50.0];
    let bundle = boundary_tests_sector(&stable, &d, std::f64::consts::FRAC_PI_4, tol).unwrap();
    show("stable matrix, D = diag(0.2, 1, 50)", &bundle);

    // The rotation generator with D = I puts eigenvalues exactly at +-i:
    // all six conditions fail, in agreement.
    let rotation = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
    let bundle = boundary_tests_imaginary(&rotation, &[1.0, 1.0], tol).unwrap();
    show("rotation generator, D = I, imaginary axis", &bundle);
}
