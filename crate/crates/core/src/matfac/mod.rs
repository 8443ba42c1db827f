//! Matrix factorizations `(φ, ψ)` with `φψ = ψφ = f·I` and their stable
//! annihilators.
//!
//! Multiplication by `r` is nullhomotopic when `r·I = φp + tψ = pφ + ψt` for
//! some `n×n` matrices `p`, `t`. The map
//! `H′(p, t) = (φp + tψ, pφ + ψt)` is linear, so the stable annihilator is
//! the colon ideal `(im H′ : (I, I))`.
//!
//! Flattening convention: an `n×n` matrix becomes a vector of length `n²`
//! in row-major order, and the codomain of `H′` has rank `2n²` with the
//! first equation in positions `0..n²` and the second in `n²..2n²`. The
//! generators of `im H′` are listed as the images of `p = E_kl` (row-major
//! over `k, l`) followed by those of `t = E_kl`.

mod matrix;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use matrix::PolyMatrix;

use crate::arith::{ArithError, Polynomial};
use crate::groebner::{FreeModuleElement, GroebnerError, Submodule};
use crate::ideals::{Ideal, IdealError, QuotientContext};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatfacError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{product} ≠ f·I at entry ({row}, {col}): got {got}, expected {expected}")]
    IdentityViolation { product: &'static str, row: usize, col: usize, got: String, expected: String },
    #[error("factorizations are over different hypersurfaces")]
    ContextMismatch,
    #[error("variable `{0}` already belongs to the ring")]
    VariableCollision(String),
    #[error("operand lives in a different ring")]
    RingMismatch,
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub struct MatrixFactorization {
    ctx: QuotientContext,
    phi: PolyMatrix,
    psi: PolyMatrix,
    label: String,
    homotopies: OnceLock<Arc<Submodule>>,
    annihilator: OnceLock<Ideal>,
}

impl Clone for MatrixFactorization {
    fn clone(&self) -> Self {
        MatrixFactorization {
            ctx: self.ctx.clone(),
            phi: self.phi.clone(),
            psi: self.psi.clone(),
            label: self.label.clone(),
            homotopies: self.homotopies.clone(),
            annihilator: self.annihilator.clone(),
        }
    }
}

impl fmt::Debug for MatrixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixFactorization")
            .field("label", &self.label)
            .field("potential", &self.ctx.potential().to_string())
            .field("phi", &self.phi.to_string())
            .field("psi", &self.psi.to_string())
            .finish()
    }
}

impl PartialEq for MatrixFactorization {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.phi == other.phi && self.psi == other.psi
    }
}

fn check_identity(ctx: &QuotientContext, product: &PolyMatrix, name: &'static str) -> Result<(), MatfacError> {
    let expected = PolyMatrix::scalar(ctx.ring(), product.rows(), ctx.potential());
    if let Some((row, col)) = product.first_difference(&expected) {
        return Err(MatfacError::IdentityViolation {
            product: name,
            row,
            col,
            got: product.get(row, col).to_string(),
            expected: expected.get(row, col).to_string(),
        });
    }
    Ok(())
}

impl MatrixFactorization {
    /// Validates `φψ = ψφ = f·I` exactly.
    pub fn new(
        ctx: &QuotientContext,
        phi: PolyMatrix,
        psi: PolyMatrix,
        label: impl Into<String>,
    ) -> Result<Self, MatfacError> {
        if !phi.is_square() || !psi.is_square() || phi.rows() != psi.rows() {
            return Err(MatfacError::DimensionMismatch(format!(
                "phi is {}×{}, psi is {}×{}",
                phi.rows(),
                phi.cols(),
                psi.rows(),
                psi.cols()
            )));
        }
        if phi.ring() != ctx.ring() || psi.ring() != ctx.ring() {
            return Err(MatfacError::RingMismatch);
        }
        check_identity(ctx, &phi.mul(&psi), "phi*psi")?;
        check_identity(ctx, &psi.mul(&phi), "psi*phi")?;
        Ok(Self::trusted(ctx.clone(), phi, psi, label.into()))
    }

    fn trusted(ctx: QuotientContext, phi: PolyMatrix, psi: PolyMatrix, label: String) -> Self {
        MatrixFactorization {
            ctx,
            phi,
            psi,
            label,
            homotopies: OnceLock::new(),
            annihilator: OnceLock::new(),
        }
    }

    pub fn parse<S: AsRef<str>>(
        ctx: &QuotientContext,
        phi: &[Vec<S>],
        psi: &[Vec<S>],
        label: impl Into<String>,
    ) -> Result<Self, MatfacError> {
        let ring = ctx.ring();
        Self::new(ctx, PolyMatrix::parse(ring, phi)?, PolyMatrix::parse(ring, psi)?, label)
    }

    /// The free module `R`, presented as `(1, f)`.
    pub fn free(ctx: &QuotientContext) -> Self {
        let ring = ctx.ring();
        let one = PolyMatrix::identity(ring, 1);
        let f = PolyMatrix::scalar(ring, 1, ctx.potential());
        Self::trusted(ctx.clone(), one, f, "R".into())
    }

    pub fn ctx(&self) -> &QuotientContext {
        &self.ctx
    }

    pub fn phi(&self) -> &PolyMatrix {
        &self.phi
    }

    pub fn psi(&self) -> &PolyMatrix {
        &self.psi
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.phi.rows()
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        let mut m = self.clone();
        m.label = label.into();
        m
    }

    pub fn direct_sum(&self, other: &MatrixFactorization) -> Result<Self, MatfacError> {
        if self.ctx != other.ctx {
            return Err(MatfacError::ContextMismatch);
        }
        Ok(Self::trusted(
            self.ctx.clone(),
            self.phi.block_diag(&other.phi),
            self.psi.block_diag(&other.psi),
            format!("{}+{}", self.label, other.label),
        ))
    }

    /// `(ψ, φ)`: presents the first syzygy of `coker φ`.
    pub fn syzygy(&self) -> Self {
        let label = match self.label.strip_prefix("syz(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("syz({})", self.label),
        };
        Self::trusted(self.ctx.clone(), self.psi.clone(), self.phi.clone(), label)
    }

    /// The factorization `Φ = [[z·I, φ], [ψ, -z·I]]` of `f + z²`, paired
    /// with itself.
    pub fn knorrer_cover(&self, new_var: &str) -> Result<Self, MatfacError> {
        let ring = self.ctx.ring();
        if ring.var_index(new_var).is_some() {
            return Err(MatfacError::VariableCollision(new_var.to_string()));
        }
        let big = ring.extend(new_var)?;
        let embed: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
        let lift = |p: &Polynomial| p.map_to_ring(&big, &embed).expect("embedding");
        let z = big.gen(ring.nvars());
        let potential = &lift(self.ctx.potential()) + &(&z * &z);
        let ctx = QuotientContext::new(potential)?;
        let n = self.size();
        let zi = PolyMatrix::scalar(&big, n, &z);
        let phi = self.phi.map_entries(&big, lift);
        let psi = self.psi.map_entries(&big, lift);
        let cover = PolyMatrix::from_blocks(&zi, &phi, &psi, &zi.neg());
        Self::new(&ctx, cover.clone(), cover, format!("{}#", self.label))
    }

    /// `im H′` inside the free module of rank `2n²`.
    pub fn homotopy_module(&self) -> Arc<Submodule> {
        self.homotopies
            .get_or_init(|| {
                let ring = self.ctx.ring();
                let n = self.size();
                let mut gens = Vec::with_capacity(2 * n * n);
                let flatten = |a: &PolyMatrix, b: &PolyMatrix| {
                    let comps: Vec<Polynomial> = a.entries().iter().chain(b.entries()).cloned().collect();
                    FreeModuleElement::new(comps).expect("nonempty")
                };
                for k in 0..n {
                    for l in 0..n {
                        let e = PolyMatrix::unit(ring, n, k, l);
                        gens.push(flatten(&self.phi.mul(&e), &e.mul(&self.phi)));
                    }
                }
                for k in 0..n {
                    for l in 0..n {
                        let e = PolyMatrix::unit(ring, n, k, l);
                        gens.push(flatten(&e.mul(&self.psi), &self.psi.mul(&e)));
                    }
                }
                Arc::new(Submodule::new(ring, 2 * n * n, gens).expect("consistent ranks"))
            })
            .clone()
    }

    fn diagonal_target(&self, r: &Polynomial) -> FreeModuleElement {
        let ri = PolyMatrix::scalar(self.ctx.ring(), self.size(), r);
        let comps: Vec<Polynomial> = ri.entries().iter().chain(ri.entries()).cloned().collect();
        FreeModuleElement::new(comps).expect("nonempty")
    }

    /// `{ r ∈ S : r·id is nullhomotopic }`, which contains `f`.
    pub fn stable_annihilator(&self) -> &Ideal {
        self.annihilator.get_or_init(|| {
            let one = self.ctx.ring().one();
            let gb = self.homotopy_module().colon(&self.diagonal_target(&one)).expect("ranks agree");
            Ideal::from_basis(gb).normalize_mod_potential(&self.ctx).expect("same ring")
        })
    }

    pub fn is_nullhomotopic(&self, r: &Polynomial) -> Result<bool, MatfacError> {
        if r.ring() != self.ctx.ring() {
            return Err(MatfacError::RingMismatch);
        }
        Ok(self.stable_annihilator().contains_element(r)?)
    }

    /// Explicit `(p, t)` for `r`, or `None` if `r` is not in the stable
    /// annihilator.
    pub fn nullhomotopy_witness(&self, r: &Polynomial) -> Result<Option<HomotopyWitness>, MatfacError> {
        if r.ring() != self.ctx.ring() {
            return Err(MatfacError::RingMismatch);
        }
        let Some(coeffs) = self.homotopy_module().lift(&self.diagonal_target(r))? else {
            return Ok(None);
        };
        let n = self.size();
        let ring = self.ctx.ring();
        let mut p = PolyMatrix::zero(ring, n, n);
        let mut t = PolyMatrix::zero(ring, n, n);
        for (i, c) in coeffs.into_iter().enumerate() {
            let (block, kl) = (i / (n * n), i % (n * n));
            let target = if block == 0 { &mut p } else { &mut t };
            target.set(kl / n, kl % n, c);
        }
        Ok(Some(HomotopyWitness { p, t }))
    }
}

/// Matrices `(p, t)` with `r·I = φp + tψ = pφ + ψt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyWitness {
    pub p: PolyMatrix,
    pub t: PolyMatrix,
}

impl HomotopyWitness {
    pub fn first_equation(&self, mf: &MatrixFactorization) -> PolyMatrix {
        mf.phi.mul(&self.p).add(&self.t.mul(&mf.psi))
    }

    pub fn second_equation(&self, mf: &MatrixFactorization) -> PolyMatrix {
        self.p.mul(&mf.phi).add(&mf.psi.mul(&self.t))
    }

    fn shapes_fit(&self, mf: &MatrixFactorization) -> bool {
        let n = mf.size();
        [&self.p, &self.t].iter().all(|m| m.rows() == n && m.cols() == n && m.ring() == mf.ctx.ring())
    }

    /// Both equations hold exactly over `S`.
    pub fn verify(&self, mf: &MatrixFactorization, r: &Polynomial) -> bool {
        if !self.shapes_fit(mf) {
            return false;
        }
        let ri = PolyMatrix::scalar(mf.ctx.ring(), mf.size(), r);
        self.first_equation(mf) == ri && self.second_equation(mf) == ri
    }

    /// `φp + tψ ≡ r·I` entrywise modulo `f`.
    pub fn first_equation_holds_mod_potential(&self, mf: &MatrixFactorization, r: &Polynomial) -> bool {
        self.shapes_fit(mf) && self.first_equation_defect(mf, r).is_some()
    }

    /// `E` with `φp + tψ - r·I = f·E`, if it exists.
    fn first_equation_defect(&self, mf: &MatrixFactorization, r: &Polynomial) -> Option<PolyMatrix> {
        let ring = mf.ctx.ring();
        let f = mf.ctx.potential();
        let diff = self.first_equation(mf).sub(&PolyMatrix::scalar(ring, mf.size(), r));
        let mut e = PolyMatrix::zero(ring, diff.rows(), diff.cols());
        for i in 0..diff.rows() {
            for j in 0..diff.cols() {
                let (q, rem) = diff.get(i, j).divide_by(std::slice::from_ref(f)).ok()?;
                if !rem.is_zero() {
                    return None;
                }
                e.set(i, j, q.into_iter().next().expect("one divisor"));
            }
        }
        Some(e)
    }

    /// Turns a solution of the first equation modulo `f` into an exact
    /// two-sided witness: with `φp + tψ = r·I + f·E`, the pair
    /// `(p - ψE, t)` solves the first equation over `S`, and since `S` is a
    /// domain, `ψ(φp′ + tψ)φ = f(p′φ + ψt)` forces the second.
    pub fn lift_from_first_equation(&self, mf: &MatrixFactorization, r: &Polynomial) -> Option<HomotopyWitness> {
        if !self.shapes_fit(mf) {
            return None;
        }
        let e = self.first_equation_defect(mf, r)?;
        let p = self.p.sub(&mf.psi.mul(&e));
        let w = HomotopyWitness { p, t: self.t.clone() };
        w.verify(mf, r).then_some(w)
    }
}

pub fn validate_mf(
    ctx: &QuotientContext,
    phi: PolyMatrix,
    psi: PolyMatrix,
    label: impl Into<String>,
) -> Result<MatrixFactorization, MatfacError> {
    MatrixFactorization::new(ctx, phi, psi, label)
}

pub fn direct_sum_mf(a: &MatrixFactorization, b: &MatrixFactorization) -> Result<MatrixFactorization, MatfacError> {
    a.direct_sum(b)
}

pub fn syzygy_mf(m: &MatrixFactorization) -> MatrixFactorization {
    m.syzygy()
}

pub fn knorrer_cover(m: &MatrixFactorization, new_var: &str) -> Result<MatrixFactorization, MatfacError> {
    m.knorrer_cover(new_var)
}

pub fn is_nullhomotopic(m: &MatrixFactorization, r: &Polynomial) -> Result<bool, MatfacError> {
    m.is_nullhomotopic(r)
}

pub fn stable_annihilator(m: &MatrixFactorization) -> Ideal {
    m.stable_annihilator().clone()
}

/// A labeled module together with its stable annihilator.
#[derive(Clone, Debug)]
pub struct ModulePoint {
    label: String,
    mf: Arc<MatrixFactorization>,
    annihilator: Ideal,
}

impl ModulePoint {
    pub fn new(mf: MatrixFactorization) -> Self {
        let annihilator = mf.stable_annihilator().clone();
        ModulePoint { label: mf.label.clone(), mf: Arc::new(mf), annihilator }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mf(&self) -> &MatrixFactorization {
        &self.mf
    }

    pub fn annihilator(&self) -> &Ideal {
        &self.annihilator
    }

    pub fn ctx(&self) -> &QuotientContext {
        self.mf.ctx()
    }
}
