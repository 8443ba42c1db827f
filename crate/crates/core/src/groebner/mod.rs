//! Gröbner bases of ideals and of submodules of free modules, with normal
//! forms, lifts, colon ideals and elimination.

mod kernel;

use std::sync::OnceLock;

use crate::arith::{ArithError, MonomialOrder, PolyRing, Polynomial};
use kernel::Vector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("free module elements need at least one component")]
    EmptyElement,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Reduced Gröbner basis of an ideal under the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn new(ring: &PolyRing, gens: &[Polynomial]) -> Result<Self, GroebnerError> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(GroebnerError::RingMismatch);
        }
        let vectors = gens.iter().map(|g| Vector::from_components(std::slice::from_ref(g))).collect();
        let basis = kernel::buchberger(ring.order(), vectors, true);
        Ok(GroebnerBasis {
            ring: ring.clone(),
            elements: basis.iter().map(|v| v.component(ring, 0)).collect(),
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    /// Monic elements, descending by leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, GroebnerError> {
        if p.ring() != &self.ring {
            return Err(GroebnerError::RingMismatch);
        }
        let basis: Vec<Vector> =
            self.elements.iter().map(|g| Vector::from_components(std::slice::from_ref(g))).collect();
        let r = kernel::reduce(self.ring.order(), &Vector::from_components(std::slice::from_ref(p)), &basis);
        Ok(r.component(&self.ring, 0))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

pub fn groebner_basis(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis, GroebnerError> {
    GroebnerBasis::new(ring, gens)
}

pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    gb.normal_form(p)
}

/// Element of the free module `ring^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let first = components.first().ok_or(GroebnerError::EmptyElement)?;
        if components.iter().any(|c| c.ring() != first.ring()) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(FreeModuleElement { components })
    }

    pub fn zero(ring: &PolyRing, rank: usize) -> Self {
        assert!(rank > 0);
        FreeModuleElement { components: vec![ring.zero(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn ring(&self) -> &PolyRing {
        self.components[0].ring()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale(&self, r: &Polynomial) -> FreeModuleElement {
        FreeModuleElement { components: self.components.iter().map(|c| c * r).collect() }
    }
}

/// Submodule of `ring^rank` given by generators. Its module Gröbner basis
/// (position-over-term, lower index dominates) and the lifting data are
/// computed on first use.
#[derive(Debug)]
pub struct Submodule {
    ring: PolyRing,
    rank: usize,
    generators: Vec<FreeModuleElement>,
    basis: OnceLock<Vec<Vector>>,
    lift_basis: OnceLock<Vec<Vector>>,
}

impl Clone for Submodule {
    fn clone(&self) -> Self {
        Submodule {
            ring: self.ring.clone(),
            rank: self.rank,
            generators: self.generators.clone(),
            basis: self.basis.clone(),
            lift_basis: self.lift_basis.clone(),
        }
    }
}

impl Submodule {
    pub fn new(ring: &PolyRing, rank: usize, generators: Vec<FreeModuleElement>) -> Result<Self, GroebnerError> {
        for g in &generators {
            if g.rank() != rank {
                return Err(GroebnerError::RankMismatch { expected: rank, got: g.rank() });
            }
            if g.ring() != ring {
                return Err(GroebnerError::RingMismatch);
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators,
            basis: OnceLock::new(),
            lift_basis: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.generators
    }

    fn vectors(&self) -> &[Vector] {
        self.basis.get_or_init(|| {
            let gens = self.generators.iter().map(|g| Vector::from_components(&g.components)).collect();
            kernel::buchberger(self.ring.order(), gens, false)
        })
    }

    /// Reduced module Gröbner basis.
    pub fn basis(&self) -> Vec<FreeModuleElement> {
        self.vectors()
            .iter()
            .map(|v| FreeModuleElement { components: v.to_components(&self.ring, self.rank) })
            .collect()
    }

    fn check(&self, w: &FreeModuleElement) -> Result<(), GroebnerError> {
        if w.rank() != self.rank {
            return Err(GroebnerError::RankMismatch { expected: self.rank, got: w.rank() });
        }
        if w.ring() != &self.ring {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(())
    }

    pub fn normal_form(&self, w: &FreeModuleElement) -> Result<FreeModuleElement, GroebnerError> {
        self.check(w)?;
        let r = kernel::reduce(self.ring.order(), &Vector::from_components(&w.components), self.vectors());
        Ok(FreeModuleElement { components: r.to_components(&self.ring, self.rank) })
    }

    pub fn contains(&self, w: &FreeModuleElement) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(w)?.is_zero())
    }

    /// Coefficients `c` with `w = Σ cᵢ·generatorᵢ`, or `None` if `w` is not
    /// in the submodule.
    pub fn lift(&self, w: &FreeModuleElement) -> Result<Option<Vec<Polynomial>>, GroebnerError> {
        self.check(w)?;
        let m = self.rank;
        let basis = self.lift_basis.get_or_init(|| {
            // (gᵢ | eᵢ): the tail positions record how each basis element
            // is built from the generators.
            let gens = self
                .generators
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    let mut comps = g.components.clone();
                    comps.extend((0..self.generators.len()).map(|j| {
                        if i == j {
                            self.ring.one()
                        } else {
                            self.ring.zero()
                        }
                    }));
                    Vector::from_components(&comps)
                })
                .collect();
            kernel::buchberger(self.ring.order(), gens, false)
        });
        let Some(rest) = kernel::top_reduce_below(self.ring.order(), &Vector::from_components(&w.components), basis, m)
        else {
            return Ok(None);
        };
        let total = m + self.generators.len();
        let comps = rest.to_components(&self.ring, total);
        Ok(Some(comps[m..].iter().map(|c| -c).collect()))
    }

    /// The ideal `(self : w) = { r : r·w ∈ self }`.
    pub fn colon(&self, w: &FreeModuleElement) -> Result<GroebnerBasis, GroebnerError> {
        self.check(w)?;
        let m = self.rank;
        let zero_tag = self.ring.zero();
        let mut gens: Vec<Vector> = self
            .generators
            .iter()
            .map(|g| {
                let mut comps = g.components.clone();
                comps.push(zero_tag.clone());
                Vector::from_components(&comps)
            })
            .collect();
        let mut tagged = w.components.clone();
        tagged.push(self.ring.one());
        gens.push(Vector::from_components(&tagged));
        let basis = kernel::buchberger(self.ring.order(), gens, false);
        // Elements led by the tag position have vanishing front, so their tag
        // components are exactly the multipliers r with r·w ∈ self.
        let tags: Vec<Polynomial> = basis
            .iter()
            .filter(|v| v.lead().is_some_and(|t| t.pos == m))
            .map(|v| v.component(&self.ring, m))
            .collect();
        GroebnerBasis::new(&self.ring, &tags)
    }
}

pub fn module_groebner_basis(sub: &Submodule) -> Vec<FreeModuleElement> {
    sub.basis()
}

pub fn colon_into_ideal(sub: &Submodule, w: &FreeModuleElement) -> Result<GroebnerBasis, GroebnerError> {
    sub.colon(w)
}

/// Generators of `(gens) ∩ k[remaining variables]`, returned in the input
/// ring. Uses a block order with the dropped variables first.
pub fn eliminate(ring: &PolyRing, gens: &[Polynomial], drop: &[&str]) -> Result<Vec<Polynomial>, GroebnerError> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(GroebnerError::RingMismatch);
    }
    for d in drop {
        if ring.var_index(d).is_none() {
            return Err(GroebnerError::UnknownVariable(d.to_string()));
        }
    }
    if drop.is_empty() {
        return Ok(GroebnerBasis::new(ring, gens)?.elements);
    }
    let mut names: Vec<&str> = drop.to_vec();
    names.dedup();
    let k = names.len();
    for v in ring.variables() {
        if !names.contains(&v.as_str()) {
            names.push(v);
        }
    }
    let elim = PolyRing::new(&names, MonomialOrder::Elimination(k))?;
    let mapped: Vec<Polynomial> = gens.iter().map(|g| g.to_ring(&elim).expect("same variables")).collect();
    let gb = GroebnerBasis::new(&elim, &mapped)?;
    let mut out: Vec<Polynomial> = gb
        .elements
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0)))
        .map(|g| g.to_ring(ring).expect("same variables"))
        .collect();
    let order = ring.order();
    out.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    Ok(out)
}
