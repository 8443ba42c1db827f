//! Finite Alexandrov spaces of modules, preordered by stable annihilators:
//! `N ≤ M` iff `ann N ⊆ ann M`, and `cl(M) = {N : N ≤ M}`.

mod pointset;
mod poset;

use std::collections::HashSet;

use rayon::prelude::*;

pub use pointset::{PointSet, MAX_POINTS};
pub use poset::{hasse_covers, FinitePoset};

use crate::ideals::{Ideal, IdealError, QuotientContext};
use crate::matfac::{MatrixFactorization, ModulePoint};

pub const DEFAULT_SIZE_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("points live over different hypersurfaces")]
    ContextMismatch,
    #[error("point index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{points} points exceed the enumeration bound of {bound}")]
    SizeBoundExceeded { points: usize, bound: usize },
    #[error("space has {0} points; at most {MAX_POINTS} are supported")]
    TooManyPoints(usize),
    #[error("exponent must be at least 1, got {0}")]
    InvalidN(u32),
    #[error("space has no points")]
    EmptySpace,
    #[error("no point labeled `{0}`")]
    UnknownLabel(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Clone, Debug)]
pub struct FiniteAlexandrovSpace {
    labels: Vec<String>,
    ideals: Vec<Ideal>,
    points: Vec<Option<ModulePoint>>,
    leq: Vec<Vec<bool>>,
    down: Vec<PointSet>,
}

fn check_labels(labels: &[String]) -> Result<(), SpaceError> {
    if labels.len() > MAX_POINTS {
        return Err(SpaceError::TooManyPoints(labels.len()));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(SpaceError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl FiniteAlexandrovSpace {
    pub fn new(points: Vec<ModulePoint>) -> Result<Self, SpaceError> {
        if let Some(first) = points.first() {
            if points.iter().any(|p| p.ctx() != first.ctx()) {
                return Err(SpaceError::ContextMismatch);
            }
        }
        let labels: Vec<String> = points.iter().map(|p| p.label().to_string()).collect();
        let ideals = points.iter().map(|p| p.annihilator().clone()).collect();
        Self::assemble(labels, ideals, points.into_iter().map(Some).collect())
    }

    /// A space whose points are bare ideals of one ring.
    pub fn from_ideals(labels: Vec<String>, ideals: Vec<Ideal>) -> Result<Self, SpaceError> {
        assert_eq!(labels.len(), ideals.len(), "one label per ideal");
        if let Some(first) = ideals.first() {
            if ideals.iter().any(|i| i.ring() != first.ring()) {
                return Err(SpaceError::ContextMismatch);
            }
        }
        let n = labels.len();
        Self::assemble(labels, ideals, vec![None; n])
    }

    fn assemble(labels: Vec<String>, ideals: Vec<Ideal>, points: Vec<Option<ModulePoint>>) -> Result<Self, SpaceError> {
        check_labels(&labels)?;
        let n = labels.len();
        let leq: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| Ok(i == j || ideals[j].contains(&ideals[i])?)).collect::<Result<Vec<_>, IdealError>>())
            .collect::<Result<_, _>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert!(!(leq[a][b] && leq[b][c]) || leq[a][c], "ideal containment is transitive");
                }
            }
        }
        let down = (0..n).map(|a| (0..n).filter(|&x| leq[x][a]).collect()).collect();
        Ok(FiniteAlexandrovSpace { labels, ideals, points, leq, down })
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

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn annihilator(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn point(&self, i: usize) -> Option<&ModulePoint> {
        self.points[i].as_ref()
    }

    pub fn ctx(&self) -> Option<&QuotientContext> {
        self.points.first().and_then(|p| p.as_ref()).map(ModulePoint::ctx)
    }

    pub fn index_of(&self, label: &str) -> Result<usize, SpaceError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| SpaceError::UnknownLabel(label.to_string()))
    }

    /// `leq(a, b)` iff `ann a ⊆ ann b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn leq_matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.len())
    }

    fn check_index(&self, i: usize) -> Result<(), SpaceError> {
        if i >= self.len() {
            return Err(SpaceError::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(())
    }

    fn check_set(&self, s: PointSet) -> Result<(), SpaceError> {
        match s.iter().find(|&i| i >= self.len()) {
            Some(i) => Err(SpaceError::IndexOutOfRange { index: i, len: self.len() }),
            None => Ok(()),
        }
    }

    pub fn set_of_labels(&self, labels: &[&str]) -> Result<PointSet, SpaceError> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    pub fn labels_of(&self, s: PointSet) -> Vec<&str> {
        s.iter().map(|i| self.labels[i].as_str()).collect()
    }

    pub fn point_closure(&self, i: usize) -> Result<PointSet, SpaceError> {
        self.check_index(i)?;
        Ok(self.down[i])
    }

    /// Union of the down-sets of the members of `s`.
    pub fn closure_of(&self, s: PointSet) -> Result<PointSet, SpaceError> {
        self.check_set(s)?;
        Ok(s.iter().fold(PointSet::EMPTY, |acc, i| acc.union(self.down[i])))
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.closure_of(s).is_ok_and(|c| c == s)
    }

    pub fn enumerate_closed_sets(&self) -> Result<ClosedSetLattice, SpaceError> {
        self.enumerate_closed_sets_bounded(DEFAULT_SIZE_BOUND)
    }

    /// Every down-set, as a union of point closures.
    pub fn enumerate_closed_sets_bounded(&self, bound: usize) -> Result<ClosedSetLattice, SpaceError> {
        if self.len() > bound {
            return Err(SpaceError::SizeBoundExceeded { points: self.len(), bound });
        }
        let mut family: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
        for &d in &self.down {
            let grown: Vec<PointSet> = family.iter().map(|s| s.union(d)).collect();
            family.extend(grown);
        }
        Ok(ClosedSetLattice::new(self, family))
    }

    pub fn kolmogorov_poset(&self) -> KolmogorovPoset {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; self.len()];
        for i in 0..self.len() {
            match classes.iter().position(|c| self.leq[c[0]][i] && self.leq[i][c[0]]) {
                Some(k) => {
                    classes[k].push(i);
                    class_of[i] = k;
                }
                None => {
                    class_of[i] = classes.len();
                    classes.push(vec![i]);
                }
            }
        }
        let le: Vec<Vec<bool>> =
            classes.iter().map(|a| classes.iter().map(|b| self.leq[a[0]][b[0]]).collect()).collect();
        let labels = classes.iter().map(|c| self.ideals[c[0]].to_string()).collect();
        let order = FinitePoset::new(labels, le).expect("annihilator classes form a partial order");
        let ideals = classes.iter().map(|c| self.ideals[c[0]].clone()).collect();
        KolmogorovPoset { classes, class_of, ideals, order }
    }

    /// Intersection of all annihilators, with the points realizing it.
    pub fn is_compact(&self) -> Result<Compactness, SpaceError> {
        if self.is_empty() {
            return Err(SpaceError::EmptySpace);
        }
        let quotient = self.kolmogorov_poset();
        let minimal: Vec<usize> = quotient.minimal_classes().into_iter().map(|k| quotient.classes()[k][0]).collect();
        let mut minimum = self.ideals[minimal[0]].clone();
        for &i in &minimal[1..] {
            minimum = minimum.intersection(&self.ideals[i])?;
        }
        let witnesses: Vec<usize> = (0..self.len()).filter(|&i| self.ideals[i] == minimum).collect();
        let direct_sum = if witnesses.is_empty() { Some(minimal) } else { None };
        Ok(Compactness { compact: true, witnesses, minimum_ideal: minimum, direct_sum })
    }

    /// `⊕` of the given points' factorizations, labeled by their labels.
    pub fn direct_sum_of(&self, indices: &[usize]) -> Option<MatrixFactorization> {
        let mut it = indices.iter();
        let mut acc = self.point(*it.next()?)?.mf().clone();
        for &i in it {
            acc = acc.direct_sum(self.point(i)?.mf()).ok()?;
        }
        Some(acc)
    }

    /// `cl_n(M)` for every point `M`.
    pub fn cl_n_all(&self, n: u32) -> Result<Vec<PointSet>, SpaceError> {
        if n == 0 {
            return Err(SpaceError::InvalidN(n));
        }
        if n == 1 {
            return Ok(self.down.clone());
        }
        let powers: Vec<Ideal> = self.ideals.par_iter().map(|i| i.power(n)).collect::<Result<_, _>>()?;
        (0..self.len())
            .into_par_iter()
            .map(|m| {
                let mut s = PointSet::EMPTY;
                for (l, p) in powers.iter().enumerate() {
                    if self.ideals[m].contains(p)? {
                        s.insert(l);
                    }
                }
                Ok(s)
            })
            .collect()
    }

    /// `{L : (ann L)^n ⊆ ann M}`.
    pub fn cl_n_of(&self, m: usize, n: u32) -> Result<PointSet, SpaceError> {
        self.check_index(m)?;
        if n == 0 {
            return Err(SpaceError::InvalidN(n));
        }
        let mut s = PointSet::EMPTY;
        for l in 0..self.len() {
            if self.ideals[m].contains(&self.ideals[l].power(n)?)? {
                s.insert(l);
            }
        }
        Ok(s)
    }

    /// The family generated by the sets `cl_n(M)`, `∅` and the whole space
    /// under finite unions and intersections.
    pub fn cln_closed_sets(&self, n: u32) -> Result<ClosedSetLattice, SpaceError> {
        self.cln_closed_sets_bounded(n, DEFAULT_SIZE_BOUND)
    }

    pub fn cln_closed_sets_bounded(&self, n: u32, bound: usize) -> Result<ClosedSetLattice, SpaceError> {
        if self.len() > bound {
            return Err(SpaceError::SizeBoundExceeded { points: self.len(), bound });
        }
        let gens = self.cl_n_all(n)?;
        let mut family: HashSet<PointSet> = HashSet::from([PointSet::EMPTY, self.full_set()]);
        family.extend(gens.iter().copied());
        let mut frontier: Vec<PointSet> = family.iter().copied().collect();
        while !frontier.is_empty() {
            let members: Vec<PointSet> = family.iter().copied().collect();
            let mut next = Vec::new();
            for &a in &frontier {
                for &b in &members {
                    for c in [a.union(b), a.intersection(b)] {
                        if family.insert(c) {
                            next.push(c);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(ClosedSetLattice::new(self, family))
    }

    /// Triples `(N, M, L)` with `M ∈ cl_n(N)`, `L ∈ cl_n(M)` and `L ∉ cl_n(N)`.
    pub fn find_cln_transitivity_failures(&self, n: u32) -> Result<Vec<(usize, usize, usize)>, SpaceError> {
        let cl = self.cl_n_all(n)?;
        let mut out = Vec::new();
        for nn in 0..self.len() {
            for m in cl[nn].iter() {
                for l in cl[m].iter() {
                    if !cl[nn].contains(l) {
                        out.push((nn, m, l));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Smallest member of the `cl_n` family containing `s`.
    pub fn smallest_cln_closed_containing(&self, s: PointSet, n: u32) -> Result<PointSet, SpaceError> {
        self.check_set(s)?;
        let family = self.cln_closed_sets_bounded(n, MAX_POINTS)?;
        Ok(family
            .sets()
            .iter()
            .filter(|c| s.is_subset(**c))
            .fold(self.full_set(), |acc, c| acc.intersection(*c)))
    }
}

pub fn build_space(points: Vec<ModulePoint>) -> Result<FiniteAlexandrovSpace, SpaceError> {
    FiniteAlexandrovSpace::new(points)
}

/// Result of the compactness analysis. On a finite space the intersection
/// of all annihilators is always realized, by a given point or else by the
/// direct sum of representatives of the minimal classes.
#[derive(Clone, Debug)]
pub struct Compactness {
    pub compact: bool,
    pub witnesses: Vec<usize>,
    pub minimum_ideal: Ideal,
    pub direct_sum: Option<Vec<usize>>,
}

impl Compactness {
    pub fn witness(&self) -> Option<usize> {
        self.witnesses.first().copied()
    }
}

/// A family of closed sets ordered by inclusion, numbered by
/// `(cardinality, sorted member labels)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSetLattice {
    labels: Vec<String>,
    sets: Vec<PointSet>,
}

impl ClosedSetLattice {
    fn new(space: &FiniteAlexandrovSpace, family: HashSet<PointSet>) -> Self {
        let mut keyed: Vec<(usize, Vec<&str>, PointSet)> = family
            .into_iter()
            .map(|s| {
                let mut names = space.labels_of(s);
                names.sort_unstable();
                (s.len(), names, s)
            })
            .collect();
        keyed.sort();
        ClosedSetLattice { labels: space.labels.clone(), sets: keyed.into_iter().map(|(_, _, s)| s).collect() }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn position(&self, s: PointSet) -> Option<usize> {
        self.sets.iter().position(|&t| t == s)
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.position(s).is_some()
    }

    pub fn member_labels(&self, k: usize) -> Vec<&str> {
        self.sets[k].iter().map(|i| self.labels[i].as_str()).collect()
    }

    /// Covering pairs of `⊊`, as indices into [`sets`](Self::sets).
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        hasse_covers(self.len(), |a, b| a != b && self.sets[a].is_subset(self.sets[b]))
    }

    pub fn as_poset(&self) -> FinitePoset {
        let le = self.sets.iter().map(|a| self.sets.iter().map(|b| a.is_subset(*b)).collect()).collect();
        FinitePoset::new(self.node_labels(), le).expect("inclusion is a partial order")
    }

    pub fn node_labels(&self) -> Vec<String> {
        (0..self.len())
            .map(|k| {
                let names = self.member_labels(k);
                if names.is_empty() {
                    "∅".to_string()
                } else {
                    format!("{{{}}}", names.join(", "))
                }
            })
            .collect()
    }

    pub fn is_closed_under_union_and_intersection(&self) -> bool {
        let set: HashSet<PointSet> = self.sets.iter().copied().collect();
        self.sets
            .iter()
            .all(|a| self.sets.iter().all(|b| set.contains(&a.union(*b)) && set.contains(&a.intersection(*b))))
    }

    pub fn to_dot(&self, name: &str) -> String {
        poset::dot(name, &self.node_labels(), &self.hasse_edges())
    }
}

/// Points grouped by equal annihilators, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct KolmogorovPoset {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    ideals: Vec<Ideal>,
    order: FinitePoset,
}

impl KolmogorovPoset {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, point: usize) -> usize {
        self.class_of[point]
    }

    pub fn ideal(&self, class: usize) -> &Ideal {
        &self.ideals[class]
    }

    pub fn order(&self) -> &FinitePoset {
        &self.order
    }

    pub fn minimal_classes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !(0..self.len()).any(|b| self.order.lt(b, a))).collect()
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.order.hasse_edges()
    }

    pub fn is_chain(&self) -> bool {
        self.order.is_chain()
    }

    /// An order isomorphism onto `other`, as `map[class] = other class`.
    pub fn isomorphism(&self, other: &KolmogorovPoset) -> Option<Vec<usize>> {
        self.order.isomorphism(&other.order)
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.order.to_dot(name)
    }
}
