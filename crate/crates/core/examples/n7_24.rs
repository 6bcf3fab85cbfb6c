//! N(7)_24 = <6,8,9,11,13>: unfolding without the trivial directions,
//! flatness, linear elimination modulo degree 5, and the dimension of the
//! tangent cone. Runs over F_p.

use std::time::Instant;

use wsatlas::curve::toric_ideal;
use wsatlas::deform::{
    eliminate_linear_truncated, hauser_flatness_equations, hauser_unfolding, lowest_parts, trivial_parameters,
    LowestDegree,
};
use wsatlas::{Fp, NumericalSemigroup};

fn main() -> wsatlas::Result<()> {
    let start = Instant::now();
    let s: NumericalSemigroup = "6,8,9,11,13".parse()?;
    let c = toric_ideal::<Fp>(&s);
    let full = hauser_unfolding(&c);
    let trivial = trivial_parameters(&full, &c);
    let u = full.without_parameters(&trivial);
    println!("unfolding {} variables, {} trivial, {} kept", full.nparameters(), trivial.len(), u.nparameters());

    let sys = hauser_flatness_equations(&u);
    let eqs: Vec<_> = sys.base.equations.iter().filter(|e| !e.is_zero()).collect();
    let monomials: usize = eqs.iter().map(|e| e.len()).sum();
    println!("flatness {} equations, {monomials} monomials ({:.2?})", eqs.len(), start.elapsed());

    let el = eliminate_linear_truncated(&sys.base, |_| true, 4);
    println!(
        "after elimination {} equations in {} variables ({:.2?})",
        el.reduced.equations.len(),
        el.reduced.nvars(),
        start.elapsed()
    );
    let cone = lowest_parts(&el.reduced, LowestDegree::Total);
    let monomials: usize = cone.equations.iter().map(|e| e.len()).sum();
    let dim = cone.dimension();
    println!(
        "tangent cone: {monomials} monomials, affine dimension {dim}, projective {} ({:.2?})",
        dim - 1,
        start.elapsed()
    );
    Ok(())
}
