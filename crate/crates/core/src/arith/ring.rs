use std::fmt;
use std::sync::Arc;

use super::{ArithError, Monomial, MonomialOrder, Polynomial};

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    variables: Vec<String>,
    order: MonomialOrder,
}

/// `ℚ[v_1, …, v_k]` with a fixed monomial order. Cheap to clone.
#[derive(Clone)]
pub struct PolyRing(Arc<RingData>);

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(variables: &[S], order: MonomialOrder) -> Result<Self, ArithError> {
        if variables.is_empty() {
            return Err(ArithError::InvalidRing("no variables".into()));
        }
        let mut vars: Vec<String> = Vec::with_capacity(variables.len());
        for v in variables {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(ArithError::InvalidRing(format!("bad variable name `{v}`")));
            }
            if vars.iter().any(|w| w == v) {
                return Err(ArithError::InvalidRing(format!("duplicate variable `{v}`")));
            }
            vars.push(v.to_string());
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > vars.len() {
                return Err(ArithError::InvalidRing(format!(
                    "elimination block {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(PolyRing(Arc::new(RingData { variables: vars, order })))
    }

    /// Degrevlex ring, the default.
    pub fn degrevlex<S: AsRef<str>>(variables: &[S]) -> Result<Self, ArithError> {
        Self::new(variables, MonomialOrder::DegRevLex)
    }

    pub fn variables(&self) -> &[String] {
        &self.0.variables
    }

    pub fn nvars(&self) -> usize {
        self.0.variables.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.variables.iter().position(|v| v == name)
    }

    pub fn var(&self, name: &str) -> Result<Polynomial, ArithError> {
        let i = self
            .var_index(name)
            .ok_or_else(|| ArithError::UnknownVariable { name: name.to_string(), offset: 0 })?;
        Ok(Polynomial::monomial(self, Monomial::var(self.nvars(), i), super::int(1)))
    }

    pub fn gen(&self, index: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), index), super::int(1))
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, super::int(1))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial, ArithError> {
        super::parse::parse_polynomial(src, self)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self, ArithError> {
        Self::new(&self.0.variables, order)
    }

    /// Appends a variable, keeping the order kind.
    pub fn extend(&self, name: &str) -> Result<Self, ArithError> {
        if self.var_index(name).is_some() {
            return Err(ArithError::InvalidRing(format!("variable `{name}` already present")));
        }
        let mut vars = self.0.variables.clone();
        vars.push(name.to_string());
        Self::new(&vars, self.0.order)
    }

    /// A variable name of the form `prefix`, `prefix1`, … not used by this ring.
    pub fn fresh_name(&self, prefix: &str) -> String {
        if self.var_index(prefix).is_none() {
            return prefix.to_string();
        }
        (1..)
            .map(|i| format!("{prefix}{i}"))
            .find(|n| self.var_index(n).is_none())
            .expect("unbounded search")
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]/{:?}", self.0.variables.join(","), self.0.order)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.0.variables.join(", "))
    }
}
