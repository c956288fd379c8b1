//! Deterministic DOT, CSV and JSON renderings.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use num_traits::ToPrimitive;
use powspec_core::formulas::FormulaSet;
use powspec_core::graph::Digraph;
use powspec_core::spectra::{Cluster, ExactSpectrum};
use powspec_core::{FactoredPolynomial, Graph, MatrixKind};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numfmt::{coefficients, rational, sig17};

fn node_lines(out: &mut String, labels: &[powspec_core::GroupElement]) {
    for (i, x) in labels.iter().enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{x}\"];");
    }
}

/// Undirected DOT, nodes in canonical order, edges `i -- j` with `i < j`
/// sorted lexicographically.
pub fn graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph power {\n");
    node_lines(&mut out, g.labels());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "  {i} -- {j};");
    }
    out.push_str("}\n");
    out
}

pub fn digraph_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph power {\n");
    node_lines(&mut out, g.labels());
    for (i, j) in g.arcs() {
        let _ = writeln!(out, "  {i} -> {j};");
    }
    out.push_str("}\n");
    out
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "labels": g.labels().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "edges": g.edges(),
    })
}

/// `source,target` rows, one per edge.
pub fn graph_csv(g: &Graph) -> String {
    let mut out = String::from("source,target\n");
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{},{}", g.labels()[i], g.labels()[j]);
    }
    out
}

/// `value,multiplicity` rows for an exact spectrum.
pub fn exact_spectrum_csv(s: &ExactSpectrum) -> String {
    rows_csv(s.entries.iter().map(|(v, m)| (v.to_f64().unwrap_or(f64::NAN), *m)))
}

/// `value,multiplicity` rows for clustered solver output (cluster means).
pub fn clusters_csv(clusters: &[Cluster]) -> String {
    rows_csv(clusters.iter().map(|c| (c.mean, c.multiplicity)))
}

fn rows_csv(rows: impl Iterator<Item = (f64, u64)>) -> String {
    let mut out = String::from("value,multiplicity\n");
    for (v, m) in rows {
        let _ = writeln!(out, "{},{m}", sig17(v));
    }
    out
}

pub fn exact_spectrum_json(s: &ExactSpectrum) -> Value {
    Value::Array(s.entries.iter().map(|(v, m)| json!({ "value": rational(v), "multiplicity": m })).collect())
}

pub fn clusters_json(clusters: &[Cluster]) -> Value {
    Value::Array(
        clusters
            .iter()
            .map(|c| json!({ "value": sig17(c.mean), "min": sig17(c.min), "max": sig17(c.max), "multiplicity": c.multiplicity }))
            .collect(),
    )
}

/// Factored form (each factor as ascending coefficients with its exponent)
/// and the sign-normalized expansion.
pub fn polynomial_json(p: &FactoredPolynomial) -> Value {
    let factors: Vec<Value> = p
        .factors
        .iter()
        .map(|(base, e)| json!({ "base": coefficients(base), "exponent": e }))
        .collect();
    json!({
        "display": p.to_string(),
        "degree": p.degree(),
        "factored": { "scalar": p.scalar.to_string(), "factors": factors },
        "expanded": coefficients(&p.expand_sign_normalized()),
    })
}

/// `degree,coefficient` rows of the expansion.
pub fn polynomial_csv(p: &FactoredPolynomial) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (i, c) in p.expand_sign_normalized().coeffs().iter().enumerate() {
        let _ = writeln!(out, "{i},{c}");
    }
    out
}

pub fn formula_for(f: &FormulaSet, kind: MatrixKind) -> FactoredPolynomial {
    match kind {
        MatrixKind::Adjacency => f.adjacency_charpoly(),
        MatrixKind::Laplacian => f.laplacian_charpoly(),
        MatrixKind::Signless => f.signless_charpoly(),
    }
}

/// Every closed form for `(k, p)`.
pub fn formula_dump(f: &FormulaSet) -> Value {
    let bounds = f.spectral_radius_bounds(f.clique_radius());
    json!({
        "k": f.k,
        "p": f.p,
        "n": f.n,
        "m": f.m.to_string(),
        "theta": f.theta,
        "adjacency_charpoly": polynomial_json(&f.adjacency_charpoly()),
        "laplacian_charpoly": polynomial_json(&f.laplacian_charpoly()),
        "signless_charpoly": polynomial_json(&f.signless_charpoly()),
        "laplacian_spectrum": exact_spectrum_json(&f.laplacian_spectrum()),
        "laplacian_energy": rational(&f.laplacian_energy()),
        "spectral_radius_bounds": {
            "base": sig17(bounds.lower),
            "lower": sig17(bounds.lower),
            "upper_stated": sig17(bounds.upper_stated),
            "upper_derived": sig17(bounds.upper_derived),
        },
        "proof_matrices": {
            "y2_charpoly": polynomial_json(&f.y2_charpoly()),
            "z_charpoly": polynomial_json(&f.z_charpoly()),
            "y2_top_eigenvalue": sig17(f.y2_top_eigenvalue()),
            "z_top_eigenvalue": sig17(f.z_top_eigenvalue()),
        },
    })
}


/// Pretty JSON with a trailing newline.
pub fn json_string(v: &Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

/// Writes to `path`, or stdout when `None`.
pub fn write_output(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p, e)),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use powspec_core::graph::model_graph;
    use powspec_core::GroupElement;

    #[test]
    fn k2_dot() {
        let g = Graph::from_edges(vec![GroupElement::new(0, 0), GroupElement::new(0, 1)], &[(0, 1)]).unwrap();
        assert_eq!(graph_dot(&g), "graph power {\n  0 [label=\"s^0 r^0\"];\n  1 [label=\"s^0 r^1\"];\n  0 -- 1;\n}\n");
    }

    #[test]
    fn laplacian_spectrum_csv_rows() {
        let f = FormulaSet::new(2, 3).unwrap();
        let csv = exact_spectrum_csv(&f.laplacian_spectrum());
        assert_eq!(csv, "value,multiplicity\n0,1\n1,6\n2,3\n4,3\n12,9\n18,1\n24,1\n");
    }

    #[test]
    fn adjacency_formula_json_has_25_coefficients() {
        let f = FormulaSet::new(2, 3).unwrap();
        let v = polynomial_json(&f.adjacency_charpoly());
        assert_eq!(v["expanded"].as_array().unwrap().len(), 25);
        assert_eq!(v["expanded"][24], "1");
        assert_eq!(v["expanded"][23], "0");
        assert_eq!(v["expanded"][22], "-87");
    }

    #[test]
    fn dot_is_deterministic() {
        let g = model_graph(2, 3).unwrap();
        assert_eq!(graph_dot(&g), graph_dot(&model_graph(2, 3).unwrap()));
        assert_eq!(graph_dot(&g).matches(" -- ").count(), 87);
    }
}
