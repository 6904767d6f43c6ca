//! Evaluates the ratio of the two weights directly (each one through the
//! Tricomi function) and through the truncated continued fraction, printing
//! the agreement across depths.

use mops::exact::{rat, ratio};
use mops::moments::ParamSet;
use mops::numweights::{nikishin_ratio, weight_eval};

fn main() {
    let p = ParamSet::new(rat(2), ratio(3, 2), rat(5)).unwrap();
    for x in [0.5, 1.0, 5.0] {
        let direct = weight_eval(&p, 1, x).unwrap() / weight_eval(&p, 0, x).unwrap();
        println!("x = {x}: direct ratio = {direct:.15}");
        for depth in [5, 10, 20, 40, 200] {
            let cf = nikishin_ratio(&p, x, depth);
            println!("  depth {depth:>3}: {cf:.15}  |err| = {:.2e}", (cf - direct).abs());
        }
    }
}
