//! The monomial curve of a semigroup: weighted ring, minimal generators and
//! the Apéry basis of its coordinate ring over k[x].

use wsatlas::curve::toric_ideal;
use wsatlas::{NumericalSemigroup, Rational};

fn main() -> wsatlas::Result<()> {
    let s: NumericalSemigroup = std::env::args().nth(1).as_deref().unwrap_or("4,5,6,7").parse()?;
    let c = toric_ideal::<Rational>(&s);
    let vars: Vec<String> = (0..c.ring.nvars())
        .map(|v| format!("{}:{}", c.ring.name(v), c.ring.weight(v)))
        .collect();
    println!("ring {}", vars.join(" "));
    for (f, d) in c.ideal.iter().zip(&c.generator_degrees) {
        println!("  [{d:>2}] {f}");
    }
    let apery = c.apery_standard_form();
    let basis: Vec<String> = apery.basis.iter().map(|m| apery.ring.format_monomial(m)).collect();
    println!("k[x]-basis {}", basis.join(", "));
    println!("parametrization vanishes: {}", c.parametrization_check());
    Ok(())
}
