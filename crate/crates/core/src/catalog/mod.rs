//! Built-in catalogs of matrix factorizations for the simple curve
//! singularities: formula-driven for types A and D, data-backed for type E.
//!
//! Type D uses `f = x²y + y^{n-1}` with
//! `A = (y, x² + y^{n-2})`,
//! `φ_j = [[x, y^j], [y^{n-j-2}, -x]]`, `ψ_j = [[xy, y^{j+1}], [y^{n-j-1}, -xy]]`,
//! `ξ_j = [[x, y^j], [y^{n-j-1}, -xy]]`, `η_j = [[xy, y^j], [y^{n-j-1}, -x]]`
//! for `j = 0..=n-3`. Some printed versions of these matrices carry index
//! typos and fail `φψ = f·I`; the forms above pass it.
//!
//! The E-type files ship reconstructed matrices (see their `provenance`
//! field): they are genuine factorizations of `f`, labeled by matching
//! annihilators, not a transcription of any particular classification table.

mod document;

use std::fmt;
use std::str::FromStr;

pub use document::{
    annihilate_all, load_document, Document, DocumentError, LoadedCatalog, ModuleDecl, RingDecl,
};

use crate::arith::PolyRing;
use crate::ideals::QuotientContext;
use crate::matfac::{MatrixFactorization, ModulePoint, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown catalog `{0}` (expected A0:n, A1:n, D:n, E6, E7 or E8)")]
    UnknownCatalog(String),
    #[error("built-in data file {file} is corrupt: {source}")]
    CorruptData { file: &'static str, source: DocumentError },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EType {
    E6,
    E7,
    E8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogSpec {
    /// `k[y]/(y^{n+1})`.
    AZero(u32),
    /// `k[x, y]/(x² + y^{n+1})`.
    ACurve(u32),
    /// `k[x, y]/(x²y + y^{n-1})`, `n` odd.
    DOdd(u32),
    E(EType),
}

impl CatalogSpec {
    pub fn validate(self) -> Result<Self, CatalogError> {
        match self {
            CatalogSpec::AZero(0) | CatalogSpec::ACurve(0) => {
                Err(CatalogError::InvalidParameter("type A needs n ≥ 1".into()))
            }
            CatalogSpec::DOdd(n) if n < 5 || n % 2 == 0 => {
                Err(CatalogError::InvalidParameter(format!("type D needs odd n ≥ 5, got {n}")))
            }
            s => Ok(s),
        }
    }

    pub fn points(self) -> Result<Vec<ModulePoint>, CatalogError> {
        match self.validate()? {
            CatalogSpec::AZero(n) => catalog_a_zero(n),
            CatalogSpec::ACurve(n) => catalog_a_curve(n),
            CatalogSpec::DOdd(n) => catalog_d_odd(n),
            CatalogSpec::E(which) => catalog_e(which),
        }
    }

    pub fn factorizations(self) -> Result<Vec<MatrixFactorization>, CatalogError> {
        match self.validate()? {
            CatalogSpec::AZero(n) => Ok(a_zero_mfs(n)),
            CatalogSpec::ACurve(n) => Ok(a_curve_mfs(n)),
            CatalogSpec::DOdd(n) => Ok(d_odd_mfs(n)),
            CatalogSpec::E(which) => e_mfs(which),
        }
    }
}

impl FromStr for CatalogSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CatalogError::UnknownCatalog(s.to_string());
        let num = |t: &str| t.parse::<u32>().map_err(|_| unknown());
        let spec = match s {
            "E6" => CatalogSpec::E(EType::E6),
            "E7" => CatalogSpec::E(EType::E7),
            "E8" => CatalogSpec::E(EType::E8),
            _ => {
                if let Some(n) = s.strip_prefix("A0:") {
                    CatalogSpec::AZero(num(n)?)
                } else if let Some(n) = s.strip_prefix("A1:") {
                    CatalogSpec::ACurve(num(n)?)
                } else if let Some(n) = s.strip_prefix("D:").or_else(|| s.strip_prefix('D')) {
                    CatalogSpec::DOdd(num(n)?)
                } else {
                    return Err(unknown());
                }
            }
        };
        spec.validate()
    }
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::AZero(n) => write!(f, "A0:{n}"),
            CatalogSpec::ACurve(n) => write!(f, "A1:{n}"),
            CatalogSpec::DOdd(n) => write!(f, "D:{n}"),
            CatalogSpec::E(e) => write!(f, "{e:?}"),
        }
    }
}

fn mf(ctx: &QuotientContext, phi: &[&[&str]], psi: &[&[&str]], label: String) -> MatrixFactorization {
    let ring = ctx.ring();
    MatrixFactorization::new(
        ctx,
        PolyMatrix::parse_rows(ring, phi).expect("catalog entries parse"),
        PolyMatrix::parse_rows(ring, psi).expect("catalog entries parse"),
        label,
    )
    .expect("catalog formulas satisfy the identity")
}

fn pow(v: &str, k: u32) -> String {
    match k {
        0 => "1".into(),
        1 => v.into(),
        k => format!("{v}^{k}"),
    }
}

fn a_zero_mfs(n: u32) -> Vec<MatrixFactorization> {
    let ring = PolyRing::degrevlex(&["y"]).expect("valid ring");
    let ctx = QuotientContext::parse(&ring, &pow("y", n + 1)).expect("nonunit potential");
    (0..=n).map(|i| mf(&ctx, &[&[&pow("y", i + 1)]], &[&[&pow("y", n - i)]], format!("M_{i}"))).collect()
}

fn a_curve_mfs(n: u32) -> Vec<MatrixFactorization> {
    let ring = PolyRing::degrevlex(&["x", "y"]).expect("valid ring");
    let ctx = QuotientContext::parse(&ring, &format!("x^2 + {}", pow("y", n + 1))).expect("nonunit potential");
    (0..=n + 1)
        .map(|j| {
            let m: [&[&str]; 2] = [&["x", &pow("y", j)], &[&pow("y", n + 1 - j), "-x"]];
            mf(&ctx, &m, &m, format!("M_{j}"))
        })
        .collect()
}

fn d_odd_mfs(n: u32) -> Vec<MatrixFactorization> {
    let ring = PolyRing::degrevlex(&["x", "y"]).expect("valid ring");
    let ctx = QuotientContext::parse(&ring, &format!("x^2*y + {}", pow("y", n - 1))).expect("nonunit potential");
    let mut out = vec![mf(&ctx, &[&["y"]], &[&[&format!("x^2 + {}", pow("y", n - 2))]], "A".into())];
    for j in 0..=n - 3 {
        let phi: [&[&str]; 2] = [&["x", &pow("y", j)], &[&pow("y", n - j - 2), "-x"]];
        let psi: [&[&str]; 2] = [&["x*y", &pow("y", j + 1)], &[&pow("y", n - j - 1), "-x*y"]];
        out.push(mf(&ctx, &phi, &psi, format!("M_{j}")));
    }
    for j in 0..=n - 3 {
        let xi: [&[&str]; 2] = [&["x", &pow("y", j)], &[&pow("y", n - j - 1), "-x*y"]];
        let eta: [&[&str]; 2] = [&["x*y", &pow("y", j)], &[&pow("y", n - j - 1), "-x"]];
        out.push(mf(&ctx, &xi, &eta, format!("X_{j}")));
    }
    out
}

fn e_source(which: EType) -> (&'static str, &'static str) {
    match which {
        EType::E6 => ("e6.json", include_str!("../../data/e6.json")),
        EType::E7 => ("e7.json", include_str!("../../data/e7.json")),
        EType::E8 => ("e8.json", include_str!("../../data/e8.json")),
    }
}

fn e_mfs(which: EType) -> Result<Vec<MatrixFactorization>, CatalogError> {
    let (file, src) = e_source(which);
    let corrupt = |source| CatalogError::CorruptData { file, source };
    let (_, mfs) = Document::from_json(src).and_then(|d| d.factorizations()).map_err(corrupt)?;
    Ok(mfs)
}

/// The built-in E-type document, for use as a template.
pub fn e_document(which: EType) -> Document {
    Document::from_json(e_source(which).1).expect("built-in document parses")
}

/// `M_i = k[y]/(y^{i+1})` over `k[y]/(y^{n+1})`, for `i = 0..=n`.
pub fn catalog_a_zero(n: u32) -> Result<Vec<ModulePoint>, CatalogError> {
    CatalogSpec::AZero(n).validate()?;
    Ok(annihilate_all(a_zero_mfs(n)))
}

/// `[[x, y^j], [y^{n+1-j}, -x]]` paired with itself, `j = 0..=n+1`.
pub fn catalog_a_curve(n: u32) -> Result<Vec<ModulePoint>, CatalogError> {
    CatalogSpec::ACurve(n).validate()?;
    Ok(annihilate_all(a_curve_mfs(n)))
}

/// `A`, then `M_0..M_{n-3}`, then `X_0..X_{n-3}`.
pub fn catalog_d_odd(n: u32) -> Result<Vec<ModulePoint>, CatalogError> {
    CatalogSpec::DOdd(n).validate()?;
    Ok(annihilate_all(d_odd_mfs(n)))
}

pub fn catalog_e(which: EType) -> Result<Vec<ModulePoint>, CatalogError> {
    Ok(annihilate_all(e_mfs(which)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anns(points: &[ModulePoint]) -> Vec<String> {
        points.iter().map(|p| p.annihilator().to_string()).collect()
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("A0:3".parse::<CatalogSpec>().unwrap(), CatalogSpec::AZero(3));
        assert_eq!("A1:2".parse::<CatalogSpec>().unwrap(), CatalogSpec::ACurve(2));
        assert_eq!("D5".parse::<CatalogSpec>().unwrap(), CatalogSpec::DOdd(5));
        assert_eq!("D:7".parse::<CatalogSpec>().unwrap(), CatalogSpec::DOdd(7));
        assert_eq!("E7".parse::<CatalogSpec>().unwrap(), CatalogSpec::E(EType::E7));
        assert!(matches!("D6".parse::<CatalogSpec>(), Err(CatalogError::InvalidParameter(_))));
        assert!(matches!("A0:0".parse::<CatalogSpec>(), Err(CatalogError::InvalidParameter(_))));
        assert!(matches!("F4".parse::<CatalogSpec>(), Err(CatalogError::UnknownCatalog(_))));
        assert!(matches!("A0:x".parse::<CatalogSpec>(), Err(CatalogError::UnknownCatalog(_))));
        for s in ["A0:3", "A1:2", "D:7", "E6"] {
            assert_eq!(s.parse::<CatalogSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn type_a() {
        assert_eq!(anns(&catalog_a_zero(2).unwrap()), ["(y)", "(y)", "(1)"]);
        assert_eq!(anns(&catalog_a_zero(1).unwrap()), ["(y)", "(1)"]);
        assert_eq!(anns(&catalog_a_zero(5).unwrap())[..3], ["(y)", "(y^2)", "(y^3)"]);
        let curve = catalog_a_curve(2).unwrap();
        assert_eq!(curve.len(), 4);
        assert!(curve[0].annihilator().is_unit());
        assert_eq!(curve[1].mf().phi().to_string(), "[[x, y], [y^2, -x]]");
    }

    #[test]
    fn d5_table() {
        let pts = catalog_d_odd(5).unwrap();
        let labels: Vec<&str> = pts.iter().map(|p| p.label()).collect();
        assert_eq!(labels, ["A", "M_0", "M_1", "M_2", "X_0", "X_1", "X_2"]);
        assert_eq!(
            anns(&pts),
            ["(x^2, y)", "(x^2, y)", "(x^2, x*y, y^2)", "(x^2, x*y, y^2)", "(1)", "(x, y)", "(x, y^2)"]
        );
    }

    #[test]
    fn e_data_loads() {
        assert_eq!(catalog_e(EType::E6).unwrap().len(), 6);
        assert_eq!(catalog_e(EType::E7).unwrap().len(), 7);
        assert_eq!(catalog_e(EType::E8).unwrap().len(), 8);
        assert!(e_document(EType::E6).provenance.unwrap().starts_with("Reconstructed"));
    }
}
