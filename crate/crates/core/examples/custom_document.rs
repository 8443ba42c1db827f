//! Building a document from scratch: declare a ring, a potential and a few
//! factorizations, serialize to JSON, load it back, and study the space.
//!
//! ```text
//! cargo run --example custom_document
//! ```

use mcmtop::arith::PolyRing;
use mcmtop::catalog::Document;
use mcmtop::ideals::QuotientContext;
use mcmtop::matfac::MatrixFactorization;
use mcmtop::spaces::FiniteAlexandrovSpace;

fn rows<'a>(a: &[&[&'a str]]) -> Vec<Vec<&'a str>> {
    a.iter().map(|r| r.to_vec()).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::degrevlex(&["x", "y"])?;
    let ctx = QuotientContext::parse(&ring, "x^2 + y^4")?;
    let m = |phi: &[&[&str]], psi: &[&[&str]], label: &str| MatrixFactorization::parse(&ctx, &rows(phi), &rows(psi), label);
    let modules = [
        m(&[&["x", "y"], &["y^3", "-x"]], &[&["x", "y"], &["y^3", "-x"]], "M_1")?,
        m(&[&["x", "y^2"], &["y^2", "-x"]], &[&["x", "y^2"], &["y^2", "-x"]], "M_2")?,
        m(&[&["x", "-y^2"], &["y^2", "x"]], &[&["x", "y^2"], &["-y^2", "x"]], "N")?,
    ];
    let refs: Vec<&MatrixFactorization> = modules.iter().collect();
    let json = Document::from_factorizations(&ctx, &refs, Some("hand-written example".into())).to_json();
    println!("{json}");

    let loaded = Document::from_json(&json)?.load()?;
    let space = FiniteAlexandrovSpace::new(loaded.points)?;
    for i in 0..space.len() {
        println!("{:<4} {}", space.label(i), space.annihilator(i));
    }
    println!("closed sets: {}", space.enumerate_closed_sets()?.len());
    let c = space.is_compact()?;
    println!("minimum ideal {}", c.minimum_ideal);

    let broken = json.replace("y^2", "y^3");
    match Document::from_json(&broken).and_then(|d| d.load()) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("edited document rejected: {e}"),
    }
    Ok(())
}
