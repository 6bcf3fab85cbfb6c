//! Minimal graded free resolution and Betti numbers.

use wsatlas::curve::toric_ideal;
use wsatlas::groebner::free_resolution_minimal;
use wsatlas::{NumericalSemigroup, Rational};

fn main() -> wsatlas::Result<()> {
    let s: NumericalSemigroup = std::env::args().nth(1).as_deref().unwrap_or("4,6,11,13").parse()?;
    let c = toric_ideal::<Rational>(&s);
    let res = free_resolution_minimal(&c.ideal);
    println!("<{s}>: betti {:?}", res.betti());
    for (i, shifts) in res.shifts.iter().enumerate() {
        println!("  F{i}: {shifts:?}");
    }
    println!("type (rank of the last module) {}", res.betti().last().unwrap());
    Ok(())
}
