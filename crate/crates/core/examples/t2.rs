//! Graded T² over a prime field, with the total over Q for comparison.

use std::time::Instant;

use wsatlas::cotangent::t2_dimension;
use wsatlas::curve::toric_ideal;
use wsatlas::{Fp, NumericalSemigroup, Rational};

fn main() -> wsatlas::Result<()> {
    let s: NumericalSemigroup = std::env::args().nth(1).as_deref().unwrap_or("6,8,9,11,13").parse()?;
    let start = Instant::now();
    let t2 = t2_dimension(&toric_ideal::<Fp>(&s));
    println!("<{s}> over F_{}: T2 by degree {:?}", Fp::modulus(), t2.dims.entries);
    println!("total {} ({:.2?})", t2.total(), start.elapsed());
    let q = t2_dimension(&toric_ideal::<Rational>(&s)).total();
    println!("total over Q {q}");
    Ok(())
}
