//! Graded T¹ and the resulting bounds for the moduli dimension.

use wsatlas::cotangent::t1_graded;
use wsatlas::curve::toric_ideal;
use wsatlas::moduli::dimension_bounds;
use wsatlas::{NumericalSemigroup, Rational};

fn main() -> wsatlas::Result<()> {
    let s: NumericalSemigroup = std::env::args().nth(1).as_deref().unwrap_or("4,6,11,13").parse()?;
    let t1 = t1_graded(&toric_ideal::<Rational>(&s));
    println!("<{s}>: T1 by degree {:?}", t1.dims.entries);
    println!("dim T1- = {}, dim T1+ = {}", t1.minus(), t1.plus());
    if s.genus() >= 2 {
        let (lo, hi) = dimension_bounds(s.genus(), s.type_lambda(), t1.plus())?;
        println!("moduli dimension between {lo} and {hi}");
    }
    Ok(())
}
