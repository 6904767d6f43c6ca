//! Builds the type II polynomials twice, from the closed-form coefficients
//! and from the third order recurrence, and prints both for a small degree
//! range together with the recurrence coefficients.

use mops::exact::{rat, ratio};
use mops::moments::ParamSet;
use mops::type2::{alpha, beta, explicit_poly, gamma, generate_by_recurrence};

fn main() {
    let p = ParamSet::new(ratio(1, 2), ratio(1, 3), rat(2)).unwrap();
    let d = 0;
    let seq = generate_by_recurrence(6, d, &p).unwrap();
    for (n, q) in seq.iter().enumerate() {
        let e = explicit_poly(n, d, &p).unwrap();
        assert_eq!(*q, e);
        println!("P_{n} = {q:?}");
    }
    println!();
    for n in 0..6 {
        println!(
            "beta_{n} = {}, alpha_{n} = {}, gamma_{n} = {}",
            beta(n, d, &p),
            alpha(n, d, &p),
            gamma(n, d, &p)
        );
    }
}
