//! Ideals of `S` and of `R = S/(f)`. Ideals of `R` are stored by their
//! preimages in `S`, which always contain `f`.

use std::fmt;
use std::sync::OnceLock;

use crate::arith::{ArithError, MonomialOrder, PolyRing, Polynomial};
use crate::groebner::{eliminate, GroebnerBasis, GroebnerError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("ideal powers need an exponent of at least 1")]
    InvalidPower,
    #[error("{0} needs a second operand")]
    MissingOperand(&'static str),
    #[error("invalid potential: {0}")]
    InvalidPotential(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), gb: self.gb.clone() }
    }
}

impl Ideal {
    pub fn new(ring: &PolyRing, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(IdealError::RingMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn parse(ring: &PolyRing, generators: &[&str]) -> Result<Self, IdealError> {
        let gens = generators.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, gens)
    }

    pub fn from_basis(gb: GroebnerBasis) -> Self {
        let ring = gb.ring().clone();
        let generators = gb.elements().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Ideal { ring, generators, gb: cell }
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![ring.one()]).expect("same ring")
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, vec![]).expect("same ring")
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::new(&self.ring, &self.generators).expect("generators share the ring"))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    fn check(&self, other: &Ideal) -> Result<(), IdealError> {
        if self.ring != other.ring {
            return Err(IdealError::RingMismatch);
        }
        Ok(())
    }

    pub fn contains_element(&self, p: &Polynomial) -> Result<bool, IdealError> {
        Ok(self.groebner_basis().contains(p)?)
    }

    /// `self ⊇ inner`.
    pub fn contains(&self, inner: &Ideal) -> Result<bool, IdealError> {
        self.check(inner)?;
        let gb = self.groebner_basis();
        for g in &inner.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool, IdealError> {
        self.check(other)?;
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Generated by pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                let p = a * b;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, n: u32) -> Result<Ideal, IdealError> {
        if n == 0 {
            return Err(IdealError::InvalidPower);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            // multiply reduced bases to keep generator counts down
            acc = Ideal::from_basis(acc.product(self)?.groebner_basis().clone());
        }
        Ok(acc)
    }

    /// Exact intersection by eliminating a tag variable `t` from
    /// `t·self + (1 - t)·other`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let tag = self.ring.fresh_name("t");
        let mut names: Vec<String> = self.ring.variables().to_vec();
        names.push(tag.clone());
        let big = PolyRing::new(&names, MonomialOrder::DegRevLex)?;
        let n = self.ring.nvars();
        let embed: Vec<Option<usize>> = (0..n).map(Some).collect();
        let t = big.gen(n);
        let one_minus_t = &big.one() - &t;
        let mut gens = Vec::new();
        for a in &self.generators {
            gens.push(&a.map_to_ring(&big, &embed).expect("embedding") * &t);
        }
        for b in &other.generators {
            gens.push(&b.map_to_ring(&big, &embed).expect("embedding") * &one_minus_t);
        }
        let elim = eliminate(&big, &gens, &[tag.as_str()])?;
        let back: Vec<Option<usize>> = (0..n).map(Some).chain(std::iter::once(None)).collect();
        let gens: Vec<Polynomial> =
            elim.iter().map(|g| g.map_to_ring(&self.ring, &back).expect("t eliminated")).collect();
        let gb = GroebnerBasis::new(&self.ring, &gens)?;
        Ok(Ideal::from_basis(gb))
    }

    /// `self + (f)` with its reduced basis.
    pub fn normalize_mod_potential(&self, ctx: &QuotientContext) -> Result<Ideal, IdealError> {
        if self.ring != ctx.ring {
            return Err(IdealError::RingMismatch);
        }
        let sum = self.sum(&Ideal::new(&self.ring, vec![ctx.potential.clone()])?)?;
        Ok(Ideal::from_basis(sum.groebner_basis().clone()))
    }

    /// Reduced basis sorted lexicographically descending by leading monomial,
    /// which reproduces the usual hand-written generator lists.
    pub fn canonical_generators(&self) -> Vec<Polynomial> {
        let mut gens = self.groebner_basis().elements().to_vec();
        gens.sort_by(|a, b| {
            let (ma, mb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
            MonomialOrder::Lex.cmp(mb, ma)
        });
        gens
    }

    pub fn canonical_strings(&self) -> Vec<String> {
        self.canonical_generators().iter().map(|g| g.to_string()).collect()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl Eq for Ideal {}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.canonical_strings();
        if gens.is_empty() {
            return f.write_str("(0)");
        }
        write!(f, "({})", gens.join(", "))
    }
}

/// Which binary (or power) operation [`ideal_combine`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    Sum,
    Product,
    Power(u32),
}

pub fn ideal_combine(kind: Combine, a: &Ideal, b: Option<&Ideal>) -> Result<Ideal, IdealError> {
    match kind {
        Combine::Sum => a.sum(b.ok_or(IdealError::MissingOperand("sum"))?),
        Combine::Product => a.product(b.ok_or(IdealError::MissingOperand("product"))?),
        Combine::Power(n) => a.power(n),
    }
}

pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal, IdealError> {
    a.intersection(b)
}

pub fn ideal_contains(outer: &Ideal, inner: &Ideal) -> Result<bool, IdealError> {
    outer.contains(inner)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, IdealError> {
    a.equals(b)
}

pub fn normalize_mod_potential(a: &Ideal, ctx: &QuotientContext) -> Result<Ideal, IdealError> {
    a.normalize_mod_potential(ctx)
}

/// The hypersurface `R = S/(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientContext {
    ring: PolyRing,
    potential: Polynomial,
}

impl QuotientContext {
    pub fn new(potential: Polynomial) -> Result<Self, IdealError> {
        if potential.is_zero() {
            return Err(IdealError::InvalidPotential("potential is zero".into()));
        }
        if potential.is_unit() {
            return Err(IdealError::InvalidPotential("potential is a unit".into()));
        }
        Ok(QuotientContext { ring: potential.ring().clone(), potential })
    }

    pub fn parse(ring: &PolyRing, potential: &str) -> Result<Self, IdealError> {
        Self::new(ring.parse(potential)?)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn potential(&self) -> &Polynomial {
        &self.potential
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> PolyRing {
        PolyRing::degrevlex(&["x", "y"]).unwrap()
    }

    fn id(gens: &[&str]) -> Ideal {
        Ideal::parse(&xy(), gens).unwrap()
    }

    #[test]
    fn combine_examples() {
        let m = id(&["x", "y"]);
        assert_eq!(ideal_combine(Combine::Product, &m, Some(&m)).unwrap(), id(&["x^2", "x*y", "y^2"]));
        assert_eq!(
            ideal_combine(Combine::Power(2), &id(&["x", "y^2"]), None).unwrap(),
            id(&["x^2", "x*y^2", "y^4"])
        );
        assert_eq!(ideal_combine(Combine::Sum, &id(&["x^2"]), Some(&id(&["y"]))).unwrap(), id(&["x^2", "y"]));
        assert_eq!(ideal_combine(Combine::Power(1), &m, None).unwrap(), m);
        assert_eq!(ideal_combine(Combine::Power(0), &m, None), Err(IdealError::InvalidPower));
        assert_eq!(ideal_combine(Combine::Sum, &m, None), Err(IdealError::MissingOperand("sum")));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(id(&["x"]).intersection(&id(&["y"])).unwrap(), id(&["x*y"]));
        assert_eq!(id(&["x^2", "y"]).intersection(&id(&["x", "y^2"])).unwrap(), id(&["x^2", "x*y", "y^2"]));
        let i = id(&["x^2 + y", "x*y^3"]);
        assert_eq!(i.intersection(&i).unwrap(), i);
        assert!(id(&["x"]).intersection(&Ideal::zero(&xy())).unwrap().is_zero());
    }

    #[test]
    fn intersection_with_colliding_variable_name() {
        let r = PolyRing::degrevlex(&["t", "u"]).unwrap();
        let a = Ideal::parse(&r, &["t"]).unwrap();
        let b = Ideal::parse(&r, &["u"]).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), Ideal::parse(&r, &["t*u"]).unwrap());
    }

    #[test]
    fn containment_examples() {
        assert!(id(&["x", "y"]).contains(&id(&["x^2", "x*y", "y^3"])).unwrap());
        assert!(!id(&["x^2", "y"]).contains(&id(&["x", "y^2"])).unwrap());
        assert!(id(&["x^2", "y"]).contains(&id(&["x^2", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn equality_examples() {
        let y = PolyRing::degrevlex(&["y"]).unwrap();
        assert_eq!(Ideal::parse(&y, &["y", "y^3"]).unwrap(), Ideal::parse(&y, &["y"]).unwrap());
        assert_ne!(id(&["x^2", "x*y", "y^2"]), id(&["x^2", "x*y", "y^3"]));
        assert_eq!(id(&["x + y", "y"]), id(&["x", "y"]));
        let other = PolyRing::degrevlex(&["a", "b"]).unwrap();
        assert_eq!(id(&["x"]).equals(&Ideal::unit(&other)), Err(IdealError::RingMismatch));
    }

    #[test]
    fn normalize_examples() {
        let ctx = QuotientContext::parse(&xy(), "x^2*y + y^4").unwrap();
        assert_eq!(id(&["x^2", "y"]).normalize_mod_potential(&ctx).unwrap(), id(&["x^2", "y"]));
        let y = PolyRing::degrevlex(&["y"]).unwrap();
        let ctx = QuotientContext::parse(&y, "y^3").unwrap();
        assert_eq!(Ideal::zero(&y).normalize_mod_potential(&ctx).unwrap(), Ideal::parse(&y, &["y^3"]).unwrap());
        let ctx = QuotientContext::parse(&xy(), "x^2 + y^5").unwrap();
        assert_eq!(id(&["x"]).normalize_mod_potential(&ctx).unwrap(), id(&["x", "y^5"]));
    }

    #[test]
    fn potential_validation() {
        assert!(QuotientContext::parse(&xy(), "0").is_err());
        assert!(QuotientContext::parse(&xy(), "3").is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(id(&["y^3", "x*y", "x^2"]).to_string(), "(x^2, x*y, y^3)");
        assert_eq!(id(&["x", "x + 1"]).to_string(), "(1)");
        assert_eq!(Ideal::zero(&xy()).to_string(), "(0)");
        assert_eq!(id(&["2*x + 3*y"]).to_string(), "(x + 3/2*y)");
    }
}
