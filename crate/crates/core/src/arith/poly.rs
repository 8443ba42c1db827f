use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ArithError, Monomial, PolyRing, Rational};

/// Sparse polynomial. Terms are kept strictly descending in the ring's order
/// with no zero coefficients, so structural equality is ideal equality of
/// elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary terms (duplicates are
    /// combined, zeros dropped).
    pub fn from_terms(ring: &PolyRing, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), ArithError> {
        if self.ring != other.ring {
            return Err(ArithError::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, ArithError> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c.clone() } else { c.clone() })));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        Polynomial::from_terms(
            &self.ring,
            self.terms.iter().flat_map(|(ma, ca)| {
                other.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb))
            }),
        )
    }

    /// `c·m·self`; the order is multiplicative so no resorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(mi, ci)| (mi.mul(m), ci * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..n {
            acc = acc.product(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Multivariate division: `self = Σ qᵢ·dᵢ + r` with no term of `r`
    /// divisible by any leading monomial of the divisors. Divisors are tried
    /// in the given order.
    pub fn divide_by(&self, divisors: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial), ArithError> {
        for d in divisors {
            self.check_ring(d)?;
            if d.is_zero() {
                return Err(ArithError::ZeroDivisor);
            }
        }
        let mut quotients = vec![Polynomial::zero(&self.ring); divisors.len()];
        let mut remainder = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            let hit = divisors.iter().enumerate().find_map(|(i, d)| {
                let (dm, dc) = d.leading_term().expect("nonzero divisor");
                dm.quotient_of(&m).map(|q| (i, q, &c / dc))
            });
            match hit {
                Some((i, q, coeff)) => {
                    p = p.merge(&divisors[i].mul_term(&q, &coeff), true);
                    let t = Polynomial::monomial(&self.ring, q, coeff);
                    quotients[i] = quotients[i].merge(&t, false);
                }
                None => {
                    remainder.push(p.terms.remove(0));
                }
            }
        }
        Ok((quotients, Polynomial { ring: self.ring.clone(), terms: remainder }))
    }

    /// Rewrites into `target`, sending variable `i` of this ring to
    /// `var_map[i]`. Fails if a variable mapped to `None` occurs.
    pub fn map_to_ring(&self, target: &PolyRing, var_map: &[Option<usize>]) -> Option<Polynomial> {
        assert_eq!(var_map.len(), self.ring.nvars());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                exps[var_map[i]?] += e;
            }
            terms.push((Monomial::from_exponents(&exps), c.clone()));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    /// Rewrites into a ring with the same variable names in any order.
    pub fn to_ring(&self, target: &PolyRing) -> Option<Polynomial> {
        let map: Vec<Option<usize>> =
            self.ring.variables().iter().map(|v| target.var_index(v)).collect();
        self.map_to_ring(target, &map)
    }

    pub fn exponent_of(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponents()[var]).max().unwrap_or(0)
    }
}

impl<'a> Add for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (name, &e) in ring.variables().iter().zip(m.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, &self.ring, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::degrevlex(&["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        ring().parse(s).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("x^2 + y") + &p("-y"), p("x^2"));
        assert_eq!(&p("x^2 + y") + &ring().zero(), p("x^2 + y"));
        assert_eq!((&p("y^3") + &p("x^2*y")).to_string(), "x^2*y + y^3");
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
        // D_5 potential from (alpha, beta) = (y, x^2 + y^3)
        assert_eq!(&p("y") * &p("x^2 + y^3"), p("x^2*y + y^4"));
        assert_eq!(&p("x*y - 3") * &ring().one(), p("x*y - 3"));
        let a = p("x^2 + x*y + 1");
        let b = p("y^3 - x");
        assert_eq!((&a * &b).total_degree(), Some(5));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let other = PolyRing::degrevlex(&["x", "z"]).unwrap();
        let q = other.parse("x").unwrap();
        assert_eq!(p("x").try_add(&q), Err(ArithError::RingMismatch));
        assert_eq!(p("x").try_mul(&q), Err(ArithError::RingMismatch));
        // same names, same order: compatible even if built separately
        let again = PolyRing::degrevlex(&["x", "y"]).unwrap();
        assert!(p("x").try_add(&again.parse("y").unwrap()).is_ok());
    }

    #[test]
    fn reduce_examples() {
        let (q, r) = p("x^2*y").divide_by(&[p("x^2")]).unwrap();
        assert_eq!(q, vec![p("y")]);
        assert!(r.is_zero());

        let (_, r) = p("x*y").divide_by(&[p("x^2"), p("y^2")]).unwrap();
        assert_eq!(r, p("x*y"));

        let (q, r) = p("y^3 + y").divide_by(&[p("y^2")]).unwrap();
        assert_eq!(q, vec![p("y")]);
        assert_eq!(r, p("y"));
    }

    #[test]
    fn reduce_rejects_zero_divisor() {
        assert_eq!(p("x").divide_by(&[ring().zero()]), Err(ArithError::ZeroDivisor));
    }

    #[test]
    fn display_rationals() {
        let r = ring();
        let half = Rational::new(1.into(), 2.into());
        let q = &r.gen(0).scale(&half) - &r.one().scale(&Rational::from_integer(3.into()));
        assert_eq!(q.to_string(), "1/2*x - 3");
        assert_eq!(r.parse(&q.to_string()).unwrap(), q);
        assert_eq!((-&p("x*y")).to_string(), "-x*y");
    }
}
