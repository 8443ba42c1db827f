use std::fmt;

use crate::arith::{ArithError, PolyRing, Polynomial};

/// Dense matrix of polynomials, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(ring: &PolyRing, rows: Vec<Vec<Polynomial>>) -> Result<Self, String> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err("matrix must be nonempty".into());
        }
        if let Some(i) = rows.iter().position(|r| r.len() != ncols) {
            return Err(format!("row {i} has {} entries, expected {ncols}", rows[i].len()));
        }
        let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.ring() != ring) {
            return Err("matrix entries live in different rings".into());
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols: ncols, entries })
    }

    pub fn parse<S: AsRef<str>>(ring: &PolyRing, rows: &[Vec<S>]) -> Result<Self, ArithError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::from_rows(ring, parsed).map_err(ArithError::InvalidRing)
    }

    /// Parses a square matrix given as a slice of row slices.
    pub fn parse_rows(ring: &PolyRing, rows: &[&[&str]]) -> Result<Self, ArithError> {
        let owned: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::parse(ring, &owned)
    }

    pub fn zero(ring: &PolyRing, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn scalar(ring: &PolyRing, n: usize, r: &Polynomial) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = r.clone();
        }
        m
    }

    pub fn identity(ring: &PolyRing, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    /// The matrix unit `E_kl` of size `n`.
    pub fn unit(ring: &PolyRing, n: usize, k: usize, l: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        m.entries[k * n + l] = ring.one();
        m
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        self.entries[i * self.cols + j] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect()
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimensions do not chain");
        let mut out = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }

    fn zip_with(&self, other: &PolyMatrix, f: impl Fn(&Polynomial, &Polynomial) -> Polynomial) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shapes differ");
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, r: &Polynomial) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * r).collect(),
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn block_diag(&self, other: &PolyMatrix) -> PolyMatrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut out = PolyMatrix::zero(&self.ring, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// `[[a, b], [c, d]]` from four equally sized square blocks.
    pub fn from_blocks(a: &PolyMatrix, b: &PolyMatrix, c: &PolyMatrix, d: &PolyMatrix) -> PolyMatrix {
        let n = a.rows;
        for m in [b, c, d] {
            assert_eq!((m.rows, m.cols), (n, n), "blocks must share one square size");
        }
        let mut out = PolyMatrix::zero(&a.ring, 2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, a.get(i, j).clone());
                out.set(i, n + j, b.get(i, j).clone());
                out.set(n + i, j, c.get(i, j).clone());
                out.set(n + i, n + j, d.get(i, j).clone());
            }
        }
        out
    }

    pub fn map_entries(&self, ring: &PolyRing, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix { ring: ring.clone(), rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        (0..self.entries.len()).find(|&i| self.entries[i] != other.entries[i]).map(|i| (i / self.cols, i % self.cols))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.row_strings().into_iter().map(|r| format!("[{}]", r.join(", "))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_blocks() {
        let r = PolyRing::degrevlex(&["x", "y"]).unwrap();
        let a = PolyMatrix::parse_rows(&r, &[&["x", "y"], &["y^2", "-x"]]).unwrap();
        let sq = a.mul(&a);
        assert_eq!(sq, PolyMatrix::scalar(&r, 2, &r.parse("x^2 + y^3").unwrap()));
        let d = a.block_diag(&PolyMatrix::identity(&r, 1));
        assert_eq!(d.rows(), 3);
        assert_eq!(d.get(2, 2), &r.one());
        assert!(d.get(0, 2).is_zero());
        let e = PolyMatrix::unit(&r, 2, 0, 1);
        assert_eq!(a.mul(&e).get(1, 1), &r.parse("y^2").unwrap());
    }

    #[test]
    fn ragged_rows_rejected() {
        let r = PolyRing::degrevlex(&["x"]).unwrap();
        let rows = vec![vec!["x", "1"], vec!["x"]];
        assert!(PolyMatrix::parse(&r, &rows).is_err());
    }
}
