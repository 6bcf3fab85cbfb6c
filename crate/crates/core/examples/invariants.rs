//! Gaps, Frobenius number, Apéry set and type of a semigroup.

use wsatlas::NumericalSemigroup;

fn main() -> wsatlas::Result<()> {
    let s: NumericalSemigroup = std::env::args().nth(1).as_deref().unwrap_or("4,6,11,13").parse()?;
    let m = s.multiplicity();
    println!("semigroup        <{s}>");
    println!("gaps             {:?}", s.gaps());
    println!("genus            {}", s.genus());
    println!("frobenius        {}", s.frobenius());
    println!("conductor        {}", s.conductor());
    println!("apery set mod {m}  {:?}", s.apery_set(m)?.representatives);
    println!("pseudo-frobenius {:?}", s.pseudo_frobenius());
    println!("type             {}", s.type_lambda());
    Ok(())
}
