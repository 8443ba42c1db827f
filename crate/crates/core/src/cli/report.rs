use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input_digest: String,
    pub ring: Vec<String>,
    pub potential: String,
    pub modules: Vec<ModuleReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compactness: Option<CompactReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cln: Option<ClnReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knorrer: Option<KnorrerReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    pub name: String,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annihilator: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub ideal: Vec<String>,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceReport {
    pub points: usize,
    pub classes: Vec<ClassReport>,
    /// Covering pairs between classes, 1-based, lower class first.
    pub class_covers: Vec<(usize, usize)>,
    /// `None` when the space exceeds the enumeration bound.
    pub closed_set_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactReport {
    pub compact: bool,
    pub witnesses: Vec<String>,
    pub minimum_ideal: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direct_sum: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    /// Member labels of each closed set, numbered from 1 in this order.
    pub sets: Vec<Vec<String>>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClnPointReport {
    pub point: String,
    pub cl_n: Vec<String>,
    pub smallest_closed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClnReport {
    pub n: u32,
    pub points: Vec<ClnPointReport>,
    pub family: LatticeReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitivity_failures: Option<Vec<[String; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnorrerReport {
    pub variable: String,
    pub potential: String,
    pub modules: Vec<ModuleReport>,
    pub isomorphic: bool,
    /// Base class ideal paired with the cover class ideal it maps to.
    pub class_map: Vec<(Vec<String>, Vec<String>)>,
}

fn ideal(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", gens.join(", "))
    }
}

fn set(members: &[String]) -> String {
    if members.is_empty() {
        "∅".into()
    } else {
        format!("{{{}}}", members.join(", "))
    }
}

fn edges(e: &[(usize, usize)]) -> String {
    e.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
}

fn lattice(out: &mut String, l: &LatticeReport) {
    for (k, s) in l.sets.iter().enumerate() {
        let _ = writeln!(out, "  {:>3}  {}", k + 1, set(s));
    }
    let _ = writeln!(out, "  covers: {}", edges(&l.edges));
}

fn modules(out: &mut String, ms: &[ModuleReport]) {
    let width = ms.iter().map(|m| m.name.chars().count()).max().unwrap_or(0);
    for m in ms {
        let ann = m.annihilator.as_deref().map_or("valid".to_string(), ideal);
        let _ = writeln!(out, "  {:<width$}  {}x{}  {}", m.name, m.size, m.size, ann);
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.tool, self.version, self.command);
        let _ = writeln!(out, "input {}", self.input_digest);
        let _ = writeln!(out, "ring QQ[{}], f = {}", self.ring.join(", "), self.potential);
        let _ = writeln!(out, "modules:");
        modules(&mut out, &self.modules);
        if let Some(s) = &self.space {
            let _ = writeln!(out, "space: {} points, {} classes", s.points, s.classes.len());
            for (k, c) in s.classes.iter().enumerate() {
                let _ = writeln!(out, "  {:>3}  {}  {}", k + 1, ideal(&c.ideal), set(&c.members));
            }
            let _ = writeln!(out, "  class covers: {}", edges(&s.class_covers));
            match s.closed_set_count {
                Some(n) => {
                    let _ = writeln!(out, "closed sets: {n}");
                }
                None => {
                    let _ = writeln!(out, "closed sets: not enumerated (size bound)");
                }
            }
        }
        if let Some(c) = &self.compactness {
            let _ = writeln!(out, "compact: {}", c.compact);
            let _ = writeln!(out, "  minimum ideal: {}", ideal(&c.minimum_ideal));
            if c.witnesses.is_empty() {
                let _ = writeln!(out, "  no single witness");
            } else {
                let _ = writeln!(out, "  witnesses: {}", c.witnesses.join(", "));
            }
            if let Some(d) = &c.direct_sum {
                let _ = writeln!(out, "  realized by the direct sum of {}", d.join(", "));
            }
        }
        if let Some(l) = &self.lattice {
            let _ = writeln!(out, "lattice ({} closed sets):", l.sets.len());
            lattice(&mut out, l);
        }
        if let Some(c) = &self.cln {
            let _ = writeln!(out, "cl_{}:", c.n);
            for p in &c.points {
                let _ = writeln!(out, "  {}: cl_{} = {}, smallest closed = {}", p.point, c.n, set(&p.cl_n), set(&p.smallest_closed));
            }
            let _ = writeln!(out, "cl_{} family ({} sets):", c.n, c.family.sets.len());
            lattice(&mut out, &c.family);
            if let Some(f) = &c.transitivity_failures {
                let _ = writeln!(out, "transitivity failures: {}", f.len());
                for [n, m, l] in f {
                    let _ = writeln!(out, "  {m} in cl_{}({n}), {l} in cl_{}({m}), {l} not in cl_{}({n})", c.n, c.n, c.n);
                }
            }
        }
        if let Some(k) = &self.knorrer {
            let _ = writeln!(out, "cover: f + {}^2 = {}", k.variable, k.potential);
            modules(&mut out, &k.modules);
            let _ = writeln!(out, "Kolmogorov posets isomorphic: {}", k.isomorphic);
            for (a, b) in &k.class_map {
                let _ = writeln!(out, "  {} -> {}", ideal(a), ideal(b));
            }
        }
        out
    }
}
