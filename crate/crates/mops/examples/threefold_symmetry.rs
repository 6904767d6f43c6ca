//! Recomposes threefold symmetric polynomials from their cubic components
//! and verifies the pure recurrence P_{m+1} = x P_m - gamma_{m-1} P_{m-2}.

use mops::exact::rat;
use mops::symmetry::{compose_threefold, threefold_recurrence_check, CubicCase};

fn main() {
    for case in [CubicCase::B1 { mu: rat(3) }, CubicCase::B2 { rho: rat(5) }] {
        println!("{case:?}");
        for m in 0..=7 {
            println!("  P_{m} = {:?}", compose_threefold(&case, m).unwrap());
        }
        let gammas = threefold_recurrence_check(&case, 12).unwrap();
        println!("  gammas: {gammas:?}");
    }
}
