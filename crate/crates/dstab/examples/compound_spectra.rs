//! Second additive compound matrices and their spectral law: the
//! eigenvalues of A^[2] are exactly the pairwise sums of eigenvalues of A.
//!
//! Run with: cargo run -p dstab --example compound_spectra

use dstab::compound::second_additive_compound;
use dstab::linalg::{eigenvalues, RealMatrix};

fn main() {
    let a = RealMatrix::from_rows(&[
        vec![-1.0, 1.0, 0.0, 2.0],
        vec![0.0, -2.0, 1.0, -1.0],
        vec![0.5, 0.0, -3.0, 0.0],
        vec![1.0, -0.5, 0.0, -4.0],
    ])
    .unwrap();

    let compound = second_additive_compound(&a).unwrap();
    println!(
        "A is 4x4, A^[2] is {}x{} on the index pairs {:?}",
        compound.matrix.dim(),
        compound.matrix.dim(),
        compound.pairs
    );

    let sa = eigenvalues(&a).unwrap();
    let sc = eigenvalues(&compound.matrix).unwrap();

    let mut sums: Vec<_> = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            sums.push(sa.eigenvalues[i] + sa.eigenvalues[j]);
        }
    }
    sums.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap().then(x.im.partial_cmp(&y.im).unwrap()));

    println!("\n{:<28} {:<28}", "sigma(A^[2])", "pairwise sums of sigma(A)");
    for (c, s) in sc.eigenvalues.iter().zip(&sums) {
        println!(
            "{:+.6} {:+.6}i     {:+.6} {:+.6}i",
            c.re, c.im, s.re, s.im
        );
    }

    // Hurwitz stability of A is equivalent to -A and -A^[2] both being
    // Q-matrices; the pairwise-sum law is why: eigenvalue sums catch
    // complex pairs crossing the axis.
    println!(
        "\nmax Re sigma(A) = {:+.6}, max Re sigma(A^[2]) = {:+.6}",
        sa.max_re(),
        sc.max_re()
    );
}
