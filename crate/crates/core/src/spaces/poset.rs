//! Finite partial orders: covering relations, isomorphism, DOT output.

use std::fmt::Write as _;

/// Covering pairs `(a, b)` with `a < b` and nothing strictly between.
pub fn hasse_covers(n: usize, lt: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// A labeled finite partial order given by its `≤` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Fails if `le` is not reflexive, antisymmetric and transitive.
    pub fn new(labels: Vec<String>, le: Vec<Vec<bool>>) -> Result<Self, String> {
        let n = labels.len();
        if le.len() != n || le.iter().any(|r| r.len() != n) {
            return Err(format!("order matrix must be {n}×{n}"));
        }
        for a in 0..n {
            if !le[a][a] {
                return Err(format!("not reflexive at {}", labels[a]));
            }
            for b in 0..n {
                if a != b && le[a][b] && le[b][a] {
                    return Err(format!("not antisymmetric: {} and {}", labels[a], labels[b]));
                }
                for c in 0..n {
                    if le[a][b] && le[b][c] && !le[a][c] {
                        return Err(format!("not transitive: {} ≤ {} ≤ {}", labels[a], labels[b], labels[c]));
                    }
                }
            }
        }
        Ok(FinitePoset { labels, le })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le[a][b]
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        hasse_covers(self.len(), |a, b| self.lt(a, b))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| self.le[a][b] || self.le[b][a]))
    }

    fn signature(&self, a: usize) -> (usize, usize) {
        let below = (0..self.len()).filter(|&b| self.le[b][a]).count();
        let above = (0..self.len()).filter(|&b| self.le[a][b]).count();
        (below, above)
    }

    /// An order isomorphism `self → other` as `map[i] = image of i`, found by
    /// backtracking over elements with matching up/down counts.
    pub fn isomorphism(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let sig_a: Vec<_> = (0..n).map(|a| self.signature(a)).collect();
        let sig_b: Vec<_> = (0..n).map(|b| other.signature(b)).collect();
        let mut sorted_a = sig_a.clone();
        let mut sorted_b = sig_b.clone();
        sorted_a.sort();
        sorted_b.sort();
        if sorted_a != sorted_b {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            i: usize,
            a: &FinitePoset,
            b: &FinitePoset,
            sig_a: &[(usize, usize)],
            sig_b: &[(usize, usize)],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if i == a.len() {
                return true;
            }
            for j in 0..b.len() {
                if used[j] || sig_a[i] != sig_b[j] {
                    continue;
                }
                let consistent = (0..i).all(|k| a.le[k][i] == b.le[map[k]][j] && a.le[i][k] == b.le[j][map[k]]);
                if !consistent {
                    continue;
                }
                map[i] = j;
                used[j] = true;
                if extend(i + 1, a, b, sig_a, sig_b, map, used) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        extend(0, self, other, &sig_a, &sig_b, &mut map, &mut used).then_some(map)
    }

    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        self.isomorphism(other).is_some()
    }

    pub fn to_dot(&self, name: &str) -> String {
        dot(name, &self.labels, &self.hasse_edges())
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A directed graph with nodes `n0, n1, …` and edges pointing upward.
pub(crate) fn dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
    let _ = writeln!(out, "  rankdir=BT;");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(l));
    }
    for (a, b) in edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(n: usize, rel: &[(usize, usize)]) -> FinitePoset {
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in rel {
            le[a][b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        FinitePoset::new((0..n).map(|i| i.to_string()).collect(), le).unwrap()
    }

    #[test]
    fn chain_of_three() {
        let c = poset(3, &[(0, 1), (1, 2)]);
        assert_eq!(c.hasse_edges(), vec![(0, 1), (1, 2)]);
        assert!(c.is_chain());
    }

    #[test]
    fn diamond_isomorphism() {
        let a = poset(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let b = poset(4, &[(3, 0), (3, 2), (0, 1), (2, 1)]);
        let map = a.isomorphism(&b).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a.le(i, j), b.le(map[i], map[j]));
            }
        }
        assert!(!a.is_isomorphic(&poset(4, &[(0, 1), (1, 2), (2, 3)])));
        assert!(!a.is_chain());
    }

    #[test]
    fn rejects_non_orders() {
        let le = vec![vec![true, true], vec![true, true]];
        assert!(FinitePoset::new(vec!["a".into(), "b".into()], le).is_err());
    }

    #[test]
    fn dot_shape() {
        let d = poset(2, &[(0, 1)]).to_dot("g");
        assert!(d.starts_with("digraph \"g\" {"));
        assert!(d.contains("n0 -> n1;"));
    }
}
