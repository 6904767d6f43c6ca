//! Shows the confluence to the Bessel-type polynomials: the coefficientwise
//! gap between the rescaled polynomial c^n P_n(x/c) and R_n(x) halves every
//! time c doubles.

use mops::exact::{rat, ratio};
use mops::moments::ParamSet;
use mops::type2::{bessel_poly, confluence_gap};
use num_traits::ToPrimitive;

fn main() {
    let (a, b) = (ratio(1, 2), ratio(1, 3));
    println!("R_4 = {:?}", bessel_poly(4, &a, &b).unwrap());
    for d in 0..=1u8 {
        let mut prev = None;
        for c in [250i64, 500, 1000, 2000, 4000] {
            let p = ParamSet::new(a.clone(), b.clone(), rat(c)).unwrap();
            let gap = confluence_gap(4, d, &p).unwrap().to_f64().unwrap();
            let ratio = prev.map(|g: f64| g / gap);
            match ratio {
                Some(r) => println!("d={d} c={c:>5} gap={gap:.6e} shrink x{r:.3}"),
                None => println!("d={d} c={c:>5} gap={gap:.6e}"),
            }
            prev = Some(gap);
        }
    }
}
