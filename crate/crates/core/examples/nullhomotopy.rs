//! Explicit nullhomotopies: for r in the stable annihilator, matrices p, t
//! with φp + tψ = r·I and pφ + ψt = 0. Also repairs a candidate that only
//! solves the first equation modulo f.
//!
//! ```text
//! cargo run --example nullhomotopy
//! ```

use mcmtop::catalog::CatalogSpec;
use mcmtop::matfac::{HomotopyWitness, PolyMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mfs = CatalogSpec::DOdd(5).factorizations()?;
    let m1 = &mfs[2];
    let ring = m1.ctx().ring().clone();
    println!("{}: phi = {}, psi = {}", m1.label(), m1.phi(), m1.psi());
    println!("annihilator {}", m1.stable_annihilator());
    for g in m1.stable_annihilator().groebner_basis().elements() {
        let w = m1.nullhomotopy_witness(g)?.expect("generators are nullhomotopic");
        println!("  r = {g}: p = {}, t = {}, verified {}", w.p, w.t, w.verify(m1, g));
    }
    let x = ring.parse("x")?;
    println!("  r = x nullhomotopic: {}", m1.is_nullhomotopic(&x)?);

    let rows = |r: &[&[&str]]| PolyMatrix::parse(&ring, &r.iter().map(|row| row.to_vec()).collect::<Vec<_>>());
    let candidate = HomotopyWitness { p: rows(&[&["x", "y"], &["0", "-x"]])?, t: rows(&[&["x", "y"], &["-y", "0"]])? };
    let r = ring.parse("x^2")?;
    println!("candidate for x^2: exact {}, first equation mod f {}", candidate.verify(m1, &r), candidate.first_equation_holds_mod_potential(m1, &r));
    if let Some(fixed) = candidate.lift_from_first_equation(m1, &r) {
        println!("  repaired: p = {}, t = {}, verified {}", fixed.p, fixed.t, fixed.verify(m1, &r));
    }
    Ok(())
}
