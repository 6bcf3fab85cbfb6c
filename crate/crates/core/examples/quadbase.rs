//! Quadratic part of the negative-weight base equations.

use wsatlas::curve::toric_ideal;
use wsatlas::deform::quadratic_base_equations;
use wsatlas::{NumericalSemigroup, Rational};

fn main() -> wsatlas::Result<()> {
    let s: NumericalSemigroup = std::env::args().nth(1).as_deref().unwrap_or("4,7,10,13").parse()?;
    let q = quadratic_base_equations(&toric_ideal::<Rational>(&s));
    let vars: Vec<String> = q.base.variables().iter().map(|p| format!("{}:{}", p.name, p.weight)).collect();
    println!("<{s}>: {} variables {}", q.base.nvars(), vars.join(" "));
    for e in &q.base.equations {
        println!("  {e}");
    }
    let dim = q.base.dimension();
    println!("{} quadrics, affine dimension {dim}, projective {}", q.base.equations.len(), dim - 1);
    Ok(())
}
