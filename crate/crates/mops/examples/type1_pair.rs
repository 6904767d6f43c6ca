//! Computes type I pairs (A_n, B_n) by solving the moment system and by the
//! Rodrigues-style construction, checks they coincide, and verifies the
//! defining integrals.

use mops::exact::rat;
use mops::moments::ParamSet;
use mops::type1::{rodrigues_type1, type1_solve};
use mops::type2::weighted_integral;

fn main() {
    let p = ParamSet::from_i64(0, 0, 1).unwrap();
    let d = 0;
    for n in 1..=6 {
        let solved = type1_solve(n, d, &p).unwrap();
        let rodrigues = rodrigues_type1(n, d, &p).unwrap();
        assert_eq!(solved, rodrigues);
        println!("n={n}: A = {:?}, B = {:?}", solved.a_poly, solved.b_poly);

        // integral x^k Q_n dx = 0 for k < n-1 and 1 at k = n-1
        for k in 0..n {
            let v = weighted_integral(&solved.a_poly, &p, d, k).unwrap()
                + weighted_integral(&solved.b_poly, &p, 1 - d, k).unwrap();
            let expected = if k + 1 == n { rat(1) } else { rat(0) };
            assert_eq!(v, expected);
        }
        assert!(!solved.a_poly.is_zero());
    }
    println!("all defining integrals check out");
}
