//! Locates the zeros of the type II polynomials by interlacing-guided
//! bisection, cross-checks them against the eigenvalues of the recurrence
//! Hessenberg matrix, and compares the largest zero with the linear bound.

use mops::exact::{rat, ratio};
use mops::moments::ParamSet;
use mops::spectra::{bound_constants, hessenberg, hessenberg_eigenvalues, zeros};

fn main() {
    let p = ParamSet::new(rat(2), ratio(3, 2), rat(5)).unwrap();
    let d = 0;
    let n = 12;
    let z = zeros(n, d, &p, 1e-12).unwrap();
    let h = hessenberg(n, d, &p);
    let mut ht = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            ht[j][i] = h[i][j];
        }
    }
    let eig = hessenberg_eigenvalues(ht).unwrap();
    let m = bound_constants().unwrap().m;
    println!("{:>3} {:>20} {:>20} {:>12}", "i", "zero (bisection)", "eigenvalue", "gap");
    for (i, (a, b)) in z.iter().zip(eig.iter()).enumerate() {
        println!("{i:>3} {a:>20.12} {b:>20.12} {:>12.2e}", (a - b).abs());
    }
    println!("largest zero {:.6} vs bound M n = {:.6}", z[n - 1], m * n as f64);
}
