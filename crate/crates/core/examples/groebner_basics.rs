//! Ideal arithmetic in QQ[x, y]: reduced bases, membership, intersection,
//! quotients and elimination.
//!
//! ```text
//! cargo run --example groebner_basics
//! ```

use mcmtop::arith::PolyRing;
use mcmtop::groebner::{eliminate, GroebnerBasis};
use mcmtop::ideals::Ideal;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::degrevlex(&["x", "y"])?;
    let gens = [ring.parse("x^2 - y")?, ring.parse("x*y - 1")?];
    let gb = GroebnerBasis::new(&ring, &gens)?;
    println!("reduced basis of (x^2 - y, xy - 1):");
    for g in gb.elements() {
        println!("  {g}");
    }
    let p = ring.parse("x^3 - 1")?;
    println!("x^3 - 1 in the ideal: {}", gb.contains(&p)?);
    println!("normal form of x^4 + y: {}", gb.normal_form(&ring.parse("x^4 + y")?)?);

    let a = Ideal::parse(&ring, &["x^2", "y"])?;
    let b = Ideal::parse(&ring, &["x", "y^2"])?;
    println!("{a} ∩ {b} = {}", a.intersection(&b)?);
    println!("{a} + {b} = {}", a.sum(&b)?);
    println!("{a} · {b} = {}", a.product(&b)?);
    println!("{b}^2 = {}", b.power(2)?);
    println!("{a} ⊆ {b}: {}", b.contains(&a)?);

    let twisted = PolyRing::degrevlex(&["t", "x", "y"])?;
    let curve = [twisted.parse("x - t^2")?, twisted.parse("y - t^3")?];
    let implicit = eliminate(&twisted, &curve, &["t"])?;
    println!("eliminating t from (t^2, t^3):");
    for g in implicit {
        println!("  {g}");
    }
    Ok(())
}
