//! Buchberger's algorithm over vectors of a free module with the
//! position-over-term order. Ideals are the rank-one case.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::arith::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Terms strictly descending: lower positions first, then by monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

fn cmp_pot(order: MonomialOrder, ap: usize, am: &Monomial, bp: usize, bm: &Monomial) -> Ordering {
    bp.cmp(&ap).then_with(|| order.cmp(am, bm))
}

impl Vector {
    pub fn from_components(components: &[Polynomial]) -> Self {
        let terms = components
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| {
                p.terms().iter().map(move |(m, c)| Term { pos, mono: m.clone(), coeff: c.clone() })
            })
            .collect();
        Vector { terms }
    }

    pub fn to_components(&self, ring: &PolyRing, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos].push((t.mono.clone(), t.coeff.clone()));
        }
        buckets.into_iter().map(|b| Polynomial::from_sorted_terms(ring, b)).collect()
    }

    /// Polynomial sitting in position `pos`.
    pub fn component(&self, ring: &PolyRing, pos: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.pos == pos)
            .map(|t| (t.mono.clone(), t.coeff.clone()))
            .collect();
        Polynomial::from_sorted_terms(ring, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn monic(mut self) -> Self {
        if let Some(c) = self.terms.first().map(|t| t.coeff.clone()) {
            if !c.is_one() {
                let inv = c.recip();
                for t in &mut self.terms {
                    t.coeff *= &inv;
                }
            }
        }
        self
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term { pos: t.pos, mono: t.mono.mul(m), coeff: &t.coeff * c })
                .collect(),
        }
    }

    /// `a - c·m·b`, where `a` is a slice of terms in canonical order.
    fn sub_mul(order: MonomialOrder, a: &[Term], c: &Rational, m: &Monomial, b: &Vector) -> Vec<Term> {
        let mut out = Vec::with_capacity(a.len() + b.terms.len());
        let mut i = 0;
        let mut bi = b.terms.iter().peekable();
        let mut pending: Option<Term> = None;
        loop {
            if pending.is_none() {
                pending = bi.next().map(|t| Term { pos: t.pos, mono: t.mono.mul(m), coeff: -(&t.coeff * c) });
            }
            match (i < a.len(), pending.take()) {
                (false, None) => break,
                (true, None) => {
                    out.extend_from_slice(&a[i..]);
                    break;
                }
                (false, Some(t)) => {
                    out.push(t);
                }
                (true, Some(t)) => match cmp_pot(order, a[i].pos, &a[i].mono, t.pos, &t.mono) {
                    Ordering::Greater => {
                        out.push(a[i].clone());
                        i += 1;
                        pending = Some(t);
                    }
                    Ordering::Less => out.push(t),
                    Ordering::Equal => {
                        let s = &a[i].coeff + &t.coeff;
                        if !s.is_zero() {
                            out.push(Term { pos: t.pos, mono: t.mono, coeff: s });
                        }
                        i += 1;
                    }
                },
            }
        }
        out
    }
}

fn find_reducer<'a>(basis: &'a [Vector], t: &Term) -> Option<(&'a Vector, Monomial)> {
    basis.iter().find_map(|g| {
        let l = g.lead()?;
        if l.pos != t.pos {
            return None;
        }
        l.mono.quotient_of(&t.mono).map(|q| (g, q))
    })
}

/// Full reduction of `v` against monic `basis`.
pub(crate) fn reduce(order: MonomialOrder, v: &Vector, basis: &[Vector]) -> Vector {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = v.terms.clone();
    let mut start = 0;
    while start < p.len() {
        let t = &p[start];
        match find_reducer(basis, t) {
            Some((g, q)) => {
                let c = t.coeff.clone();
                p = Vector::sub_mul(order, &p[start..], &c, &q, g);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Vector { terms: rem }
}

/// Reduces only while the leading term sits in a position below `limit`.
/// Returns `None` if a leading term below `limit` is irreducible.
pub(crate) fn top_reduce_below(order: MonomialOrder, v: &Vector, basis: &[Vector], limit: usize) -> Option<Vector> {
    let mut p = v.terms.clone();
    while let Some(t) = p.first() {
        if t.pos >= limit {
            break;
        }
        let (g, q) = find_reducer(basis, t)?;
        let c = t.coeff.clone();
        p = Vector::sub_mul(order, &p, &c, &q, g);
    }
    Some(Vector { terms: p })
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the module generated by `gens`. Set `scalar`
/// for rank-one input, enabling the coprime-leading-monomial criterion.
pub(crate) fn buchberger(order: MonomialOrder, gens: Vec<Vector>, scalar: bool) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut pending: Vec<Vector> = gens.into_iter().filter(|g| !g.is_zero()).map(Vector::monic).collect();
    // Smallest leads first keeps the intermediate basis small.
    pending.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        cmp_pot(order, x.pos, &x.mono, y.pos, &y.mono)
    });
    let mut queue = pending.into_iter();

    loop {
        let candidate = if let Some(g) = queue.next() {
            reduce(order, &g, &basis)
        } else if !pairs.is_empty() {
            // normal strategy: smallest lcm first
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    cmp_pot(order, pa.pos, &pa.lcm, pb.pos, &pb.lcm)
                })
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            let (f, g) = (&basis[pair.i], &basis[pair.j]);
            let qf = f.lead().unwrap().mono.quotient_of(&pair.lcm).unwrap();
            let qg = g.lead().unwrap().mono.quotient_of(&pair.lcm).unwrap();
            let fs = f.mul_term(&qf, &Rational::one());
            let s = Vector { terms: Vector::sub_mul(order, &fs.terms, &Rational::one(), &qg, g) };
            reduce(order, &s, &basis)
        } else {
            break;
        };
        if candidate.is_zero() {
            continue;
        }
        let h = candidate.monic();
        let k = basis.len();
        let (hpos, hmono) = {
            let l = h.lead().unwrap();
            (l.pos, l.mono.clone())
        };
        // Gebauer–Möller chain criterion on existing pairs.
        pairs.retain(|p| {
            if p.pos != hpos || !hmono.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lead().unwrap().mono.lcm(&hmono);
            let lj = basis[p.j].lead().unwrap().mono.lcm(&hmono);
            li == p.lcm || lj == p.lcm
        });
        for (i, g) in basis.iter().enumerate() {
            let l = g.lead().unwrap();
            if l.pos != hpos {
                continue;
            }
            if scalar && l.mono.is_coprime(&hmono) {
                continue;
            }
            pairs.push(Pair { i, j: k, pos: hpos, lcm: l.mono.lcm(&hmono) });
        }
        basis.push(h);
    }
    interreduce(order, basis)
}

/// Turns a Gröbner basis into the reduced one, sorted descending by lead.
pub(crate) fn interreduce(order: MonomialOrder, mut basis: Vec<Vector>) -> Vec<Vector> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        cmp_pot(order, x.pos, &x.mono, y.pos, &y.mono)
    });
    let mut kept: Vec<Vector> = Vec::new();
    for g in basis {
        let l = g.lead().unwrap();
        if kept.iter().any(|k| {
            let kl = k.lead().unwrap();
            kl.pos == l.pos && kl.mono.divides(&l.mono)
        }) {
            continue;
        }
        kept.push(g.monic());
    }
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<Vector> =
            kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
        out.push(reduce(order, &kept[i], &others).monic());
    }
    out.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        cmp_pot(order, y.pos, &y.mono, x.pos, &x.mono)
    });
    out
}
