use std::collections::BTreeSet;
use std::path::Path;

use mcmtop::catalog::{CatalogSpec, Document};
use mcmtop::cli::{run_with, Report, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mcmtop").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> Report {
    let (code, out, err) = run(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn d5_document() -> String {
    let mfs = CatalogSpec::DOdd(5).factorizations().unwrap();
    let refs: Vec<_> = mfs.iter().collect();
    Document::from_factorizations(mfs[0].ctx(), &refs, None).to_json()
}

/// Accepts `digraph NAME { ... }` whose body lines are `nK [label="..."];`,
/// `nA -> nB;` or a `rankdir` attribute, with every edge endpoint declared.
/// Returns the node and edge counts.
fn check_dot(src: &str) -> (usize, usize) {
    let src = src.trim();
    assert!(src.starts_with("digraph "), "{src}");
    assert!(src.ends_with('}'));
    let open = src.find('{').unwrap();
    let mut nodes = BTreeSet::new();
    let mut edges = Vec::new();
    for line in src[open + 1..src.len() - 1].lines().map(str::trim).filter(|l| !l.is_empty()) {
        assert!(line.ends_with(';'), "unterminated statement: {line}");
        let stmt = &line[..line.len() - 1];
        if stmt.starts_with("rankdir") || stmt.starts_with("node ") {
            continue;
        }
        if let Some((a, b)) = stmt.split_once(" -> ") {
            edges.push((a.trim().to_string(), b.trim().to_string()));
        } else {
            let (id, rest) = stmt.split_once(' ').unwrap();
            assert!(rest.starts_with("[label=\"") && rest.ends_with("\"]"), "bad node: {line}");
            assert!(id.starts_with('n') && id[1..].parse::<usize>().is_ok(), "bad id: {id}");
            nodes.insert(id.to_string());
        }
    }
    for (a, b) in &edges {
        assert!(nodes.contains(a) && nodes.contains(b), "dangling edge {a} -> {b}");
    }
    (nodes.len(), edges.len())
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["space", "--catalog", "E7", "--closed-sets", "--format", "json"][..],
        &["cln", "--catalog", "D7", "--check-transitivity"],
        &["knorrer", "--catalog", "A0:3"],
    ] {
        let first = run(args);
        for _ in 0..3 {
            assert_eq!(run(args), first);
        }
    }
}

#[test]
fn catalog_and_document_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "d5.json", &d5_document());
    let spaced = write(dir.path(), "d5-spaced.json", &d5_document().replace(',', ", "));
    let mut a = report(&["space", "--catalog", "D5", "--format", "json"]);
    let mut b = report(&["space", "--file", &spaced, "--format", "json"]);
    assert_ne!(a.input_digest, b.input_digest);
    a.input_digest.clear();
    b.input_digest.clear();
    assert_eq!(a, b);
    for cmd in ["annihilate", "space", "compact", "cln"] {
        let a = report(&[cmd, "--catalog", "D5", "--format", "json"]);
        let b = report(&[cmd, "--file", &path, "--format", "json"]);
        // the file holds the canonical serialization, so even the digests agree
        assert_eq!(a, b, "{cmd}");
    }
}

#[test]
fn malformed_json_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.json", "{\n  \"ring\": {\"variables\": [\"x\", \"y\"]},\n  \"potential\": \n}\n");
    let (code, _, err) = run(&["verify", "--file", &path]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn invalid_factorization_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"{"ring": {"variables": ["x", "y"]}, "potential": "x^2 + y^3",
        "modules": [{"name": "bad", "phi": [["x", "y"], ["y", "-x"]], "psi": [["x", "y"], ["y", "-x"]]}]}"#;
    let path = write(dir.path(), "bad.json", doc);
    let (code, _, err) = run(&["verify", "--file", &path]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("bad"), "{err}");
}

#[test]
fn document_edge_cases() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.json", r#"{"ring": {"variables": ["x"]}, "potential": "x^2", "modules": []}"#);
    assert_eq!(run(&["verify", "--file", &empty]).0, EXIT_USAGE);
    let dup = r#"{"ring": {"variables": ["x"]}, "potential": "x^2", "modules": [
        {"name": "A", "phi": [["x"]], "psi": [["x"]]},
        {"name": "A", "phi": [["x"]], "psi": [["x"]]}]}"#;
    let dup = write(dir.path(), "dup.json", dup);
    let (code, _, err) = run(&["verify", "--file", &dup]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains('A'), "{err}");
    let field = r#"{"ring": {"variables": ["x"], "field": "GF(2)"}, "potential": "x^2", "modules": [{"name": "A", "phi": [["x"]], "psi": [["x"]]}]}"#;
    let field = write(dir.path(), "field.json", field);
    assert_eq!(run(&["verify", "--file", &field]).0, EXIT_VALIDATION);
    assert_eq!(run(&["verify", "--file", "/nonexistent/doc.json"]).0, EXIT_USAGE);
}

#[test]
fn dot_output_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let lattice = dir.path().join("lattice.dot");
    let poset = dir.path().join("poset.dot");
    assert_eq!(run(&["hasse", "--catalog", "D7", "--dot", lattice.to_str().unwrap()]).0, EXIT_OK);
    assert_eq!(run(&["hasse", "--catalog", "D7", "--poset", "--dot", poset.to_str().unwrap()]).0, EXIT_OK);
    assert_eq!(check_dot(&std::fs::read_to_string(&lattice).unwrap()), (11, 13));
    assert_eq!(check_dot(&std::fs::read_to_string(&poset).unwrap()).0, 7);
}

#[test]
fn space_counts_closed_sets() {
    let r = report(&["space", "--catalog", "D7", "--closed-sets", "--format", "json"]);
    assert_eq!(r.space.unwrap().closed_set_count, Some(11));
    let r = report(&["space", "--catalog", "D:5", "--format", "json"]);
    assert_eq!(r.space.unwrap().closed_set_count, Some(7));
}

#[test]
fn compact_and_cln_reports() {
    let r = report(&["compact", "--catalog", "D5", "--format", "json"]);
    let c = r.compactness.unwrap();
    assert!(c.compact);
    assert_eq!(c.minimum_ideal, ["x^2", "x*y", "y^2"]);
    assert_eq!(c.witnesses, ["M_1", "M_2"]);

    let r = report(&["cln", "--catalog", "D7", "--n", "2", "--check-transitivity", "--format", "json"]);
    let c = r.cln.unwrap();
    assert_eq!(c.family.sets.len(), 4);
    let failures = c.transitivity_failures.unwrap();
    assert!(failures.contains(&["M_3".to_string(), "M_1".to_string(), "X_1".to_string()]));
    let r = report(&["cln", "--catalog", "D7", "--n", "1", "--check-transitivity", "--format", "json"]);
    assert!(r.cln.unwrap().transitivity_failures.unwrap().is_empty());
}

#[test]
fn knorrer_report() {
    let r = report(&["knorrer", "--catalog", "D5", "--format", "json"]);
    let k = r.knorrer.unwrap();
    assert!(k.isomorphic);
    assert_eq!(k.modules.len(), 7);
    let base = report(&["verify", "--catalog", "D5", "--format", "json"]);
    assert!(k.modules.iter().zip(&base.modules).all(|(c, b)| c.size == 2 * b.size));
    assert_eq!(run(&["knorrer", "--catalog", "D5", "--var", "x"]).0, EXIT_VALIDATION);
}
