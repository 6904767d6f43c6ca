//! Evaluates the weight numerically and compares quadrature moments with the
//! closed-form ones, then checks the Tricomi evaluation against Kummer's
//! differential equation.

use mops::exact::{rat, ratio};
use mops::moments::{moment, ParamSet};
use mops::numweights::{kummer_residual, quad_moment};
use num_traits::ToPrimitive;

fn main() {
    let p = ParamSet::new(ratio(1, 2), ratio(1, 3), rat(2)).unwrap();
    for t in 0..=1u8 {
        for k in 0..=4usize {
            let exact = moment(&p, t, k).unwrap();
            let exact_f = exact.to_f64().unwrap();
            let num = quad_moment(&p, t, k, 1e-10).unwrap();
            println!(
                "t={t} k={k}: exact {exact} = {exact_f:.12}, quadrature {num:.12}, rel err {:.2e}",
                ((num - exact_f) / exact_f).abs()
            );
        }
    }
    let (a, b, c) = (0.5, 1.0 / 3.0, 2.0);
    for x in [0.5, 1.0, 5.0] {
        println!("kummer residual at x={x}: {:.2e}", kummer_residual(c, a - b + 1.0, x).unwrap());
    }
}
