//! The full check suite for one `(k, p)`.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use powspec_core::formulas::FormulaSet;
use powspec_core::graph::{graph_diff, model_graph, power_graph, verify_decomposition};
use powspec_core::linalg::{char_poly_faddeev_leverrier, char_poly_with_cap, matrix_of, DEFAULT_MATRIX_CAP};
use powspec_core::spectra::{
    cluster_multiplicities, default_cluster_tol, laplacian_energy_exact, laplacian_energy_f64, spectral_radius,
    symmetric_eigenvalues, Cluster, EigenResult, Multiplicity, SymMatrix, DEFAULT_TOL,
};
use powspec_core::{Graph, GroupSpec, IntMatrix, IntPolynomial, MatrixKind};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::anchors;
use crate::error::{Error, Result};
use crate::numfmt::{coefficients, rational};
use crate::report::{Check, Construction, Params, Status, VerificationReport};
use crate::MATRIX_CAP_ENV;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub kinds: Vec<MatrixKind>,
    pub constructions: Vec<Construction>,
    /// Exact and numeric matrix checks are skipped above this order.
    pub matrix_cap: usize,
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            kinds: MatrixKind::ALL.to_vec(),
            constructions: Construction::BOTH.to_vec(),
            matrix_cap: DEFAULT_MATRIX_CAP,
            tol: DEFAULT_TOL,
        }
    }
}

/// Parses a matrix-order cap, e.g. the value of `POWSPEC_MATRIX_CAP`.
pub fn parse_cap(raw: &str) -> Result<usize> {
    raw.trim()
        .parse()
        .map_err(|_| Error::Usage(format!("{MATRIX_CAP_ENV} must be a non-negative integer, got {raw:?}")))
}

/// Runs every check for `G(k, p)` and writes the JSON report to `out` if given.
pub fn run_verification(k: u32, p: u64, config: &VerifyConfig, out: Option<&Path>) -> Result<VerificationReport> {
    let ctx = Context::new(k, p, config)?;
    let mut checks = vec![ctx.presentation()?, ctx.partition()?];

    let mut constructions = config.constructions.clone();
    constructions.sort();
    constructions.dedup();
    let mut kinds = config.kinds.clone();
    kinds.sort();
    kinds.dedup();

    for &c in &constructions {
        checks.extend(ctx.counts(c));
        checks.push(ctx.decomposition(c)?);
    }
    let jobs: Vec<(Construction, MatrixKind)> =
        constructions.iter().flat_map(|&c| kinds.iter().map(move |&kind| (c, kind))).collect();
    let per_job = jobs.par_iter().map(|&(c, kind)| ctx.matrix_checks(c, kind)).collect::<Result<Vec<_>>>()?;
    checks.extend(per_job.into_iter().flatten());
    if kinds.contains(&MatrixKind::Laplacian) {
        checks.push(ctx.energy()?);
    }
    if constructions.len() == 2 {
        checks.push(ctx.model_vs_true()?);
    }

    let params = Params {
        k,
        p,
        n: ctx.f.n,
        m_model: ctx.model.edge_count() as u128,
        m_true: ctx.truth.edge_count() as u128,
    };
    let report = VerificationReport::new(params, config.matrix_cap, config.tol, checks);
    if let Some(path) = out {
        report.write_json(path)?;
    }
    Ok(report)
}

struct Context<'a> {
    cfg: &'a VerifyConfig,
    spec: GroupSpec,
    f: FormulaSet,
    model: Graph,
    truth: Graph,
    /// `|E(P(Z_h))|` for the true cyclic power graph on `<r>`.
    cyclic_edges: usize,
    /// Model-vs-true differences all lie inside `<r> \ {e}` and number
    /// `C(h, 2) - |E(P(Z_h))|`.
    clique_gap_explained: bool,
    diff: Vec<(usize, usize)>,
    within_cap: bool,
}

impl<'a> Context<'a> {
    fn new(k: u32, p: u64, cfg: &'a VerifyConfig) -> Result<Self> {
        let spec = GroupSpec::semidihedral(k, p)?;
        let f = FormulaSet::new(k, p)?;
        let model = model_graph(k, p)?;
        let truth = power_graph(&spec);
        let cyclic_edges = power_graph(&GroupSpec::cyclic(f.h)?).edge_count();
        let diff = graph_diff(&model, &truth)?;
        let inside = diff.iter().all(|&(i, j)| in_rotations_not_identity(&model, i) && in_rotations_not_identity(&model, j));
        let clique_gap_explained = inside && diff.len() == choose2(f.h) - cyclic_edges;
        let within_cap = f.n as usize <= cfg.matrix_cap;
        Ok(Context { cfg, spec, f, model, truth, cyclic_edges, clique_gap_explained, diff, within_cap })
    }

    fn graph(&self, c: Construction) -> &Graph {
        match c {
            Construction::Model => &self.model,
            Construction::True => &self.truth,
        }
    }

    fn cap_note(&self) -> String {
        format!("matrix order {} exceeds cap {}", self.f.n, self.cfg.matrix_cap)
    }

    fn presentation(&self) -> Result<Check> {
        let r = self.spec.validate_presentation()?;
        let failed: Vec<&str> = r.failures().collect();
        let ok = r.all_pass() && r.order == self.f.n;
        Ok(Check::new(
            "group-presentation",
            anchors::GROUP_PRESENTATION,
            Status::from_bool(ok),
            json!({ "order": r.order, "failed_relations": failed }),
            json!({ "order": self.f.n }),
        ))
    }

    fn partition(&self) -> Result<Check> {
        let sizes = self.spec.class_partition()?.sizes();
        let h = self.f.h as usize;
        let expected = [2, h - 2, h / 2, h / 2];
        Ok(Check::new(
            "class-partition",
            anchors::CLASS_PARTITION,
            Status::from_bool(sizes == expected),
            json!(sizes),
            json!(expected),
        )
        .note("sizes of H0 = {e, u}, H1 = <r> \\ H0, H2 = s r^even, H3 = s r^odd"))
    }

    fn counts(&self, c: Construction) -> Vec<Check> {
        let g = self.graph(c);
        let vertices = Check::new(
            "vertex-count",
            anchors::COUNTING,
            Status::from_bool(g.order() as u64 == self.f.n),
            json!(g.order()),
            json!(self.f.n),
        )
        .on(c);
        let m = g.edge_count() as u128;
        let status = match c {
            Construction::Model => Status::from_bool(m == self.f.m),
            Construction::True if m == self.f.m => Status::Pass,
            Construction::True => self.clique_gap_status(),
        };
        let mut edges = Check::new("edge-count", anchors::COUNTING, status, json!(m), json!(self.f.m)).on(c);
        if c == Construction::True && m != self.f.m {
            edges = edges.note(format!(
                "true graph has {} fewer edges: <r> induces P(Z_{}) with {} edges, not a clique",
                self.f.m - m,
                self.f.h,
                self.cyclic_edges
            ));
        }
        vec![vertices, edges]
    }

    fn clique_gap_status(&self) -> Status {
        if self.clique_gap_explained {
            Status::MismatchReported
        } else {
            Status::Fail
        }
    }

    fn decomposition(&self, c: Construction) -> Result<Check> {
        let d = verify_decomposition(self.graph(c), &self.spec)?;
        let h = self.f.h as usize;
        let cyclic_part = match c {
            Construction::Model => choose2(self.f.h),
            Construction::True => self.cyclic_edges,
        };
        let ok = d.covered && d.pendant_edges == h / 2 && d.complete_k4_blocks() == h / 4 && d.cyclic_part_edges == cyclic_part;
        Ok(Check::new(
            "decomposition",
            anchors::POWER_GRAPH_DECOMPOSITION,
            Status::from_bool(ok),
            json!({
                "cyclic_part_edges": d.cyclic_part_edges,
                "pendant_edges": d.pendant_edges,
                "complete_k4_blocks": d.complete_k4_blocks(),
                "uncovered_edges": d.uncovered.len(),
            }),
            json!({
                "cyclic_part_edges": cyclic_part,
                "pendant_edges": h / 2,
                "complete_k4_blocks": h / 4,
                "uncovered_edges": 0,
            }),
        )
        .on(c))
    }

    fn matrix_checks(&self, c: Construction, kind: MatrixKind) -> Result<Vec<Check>> {
        let g = self.graph(c);
        let m = matrix_of(g, kind);
        let m_edges = g.edge_count() as u128;
        let mut out = Vec::new();

        let expected_trace = match kind {
            MatrixKind::Adjacency => 0,
            _ => 2 * if c == Construction::Model { self.f.m } else { m_edges },
        };
        out.push(
            Check::new(
                "trace",
                anchors::MATRIX_DEFINITIONS,
                Status::from_bool(m.trace() == BigInt::from(expected_trace)),
                json!(m.trace().to_string()),
                json!(expected_trace.to_string()),
            )
            .on(c)
            .matrix(kind)
            .tolerance(0.0),
        );

        if !self.within_cap {
            let mut names = vec!["charpoly-methods-agree", "charpoly-formula", "eigenvalue-sum"];
            match kind {
                MatrixKind::Laplacian => {
                    names.extend(["laplacian-spectrum-divides", "laplacian-spectrum-numeric", "laplacian-kernel"])
                }
                MatrixKind::Adjacency => names.push("spectral-radius-bounds"),
                MatrixKind::Signless => {}
            }
            for name in names {
                out.push(
                    Check::new(name, anchor_for(name, kind), Status::Skipped, Value::Null, Value::Null)
                        .on(c)
                        .matrix(kind)
                        .note(self.cap_note()),
                );
            }
            return Ok(out);
        }

        let poly = char_poly_with_cap(&m, self.cfg.matrix_cap)?;
        let faddeev = char_poly_faddeev_leverrier(&m)?;
        out.push(
            Check::new(
                "charpoly-methods-agree",
                anchors::MATRIX_DEFINITIONS,
                Status::from_bool(poly == faddeev),
                json!(coefficients(&poly)),
                json!(coefficients(&faddeev)),
            )
            .on(c)
            .matrix(kind)
            .tolerance(0.0)
            .note("evaluation-interpolation vs Faddeev-LeVerrier"),
        );

        let formula = match kind {
            MatrixKind::Adjacency => self.f.adjacency_charpoly(),
            MatrixKind::Laplacian => self.f.laplacian_charpoly(),
            MatrixKind::Signless => self.f.signless_charpoly(),
        };
        let expected = formula.expand_sign_normalized();
        out.push(self.exactness_check(
            Check::new(
                "charpoly-formula",
                anchor_for("charpoly-formula", kind),
                Status::Pass,
                json!(coefficients(&poly)),
                json!({ "factored": formula.to_string(), "coefficients": coefficients(&expected) }),
            ),
            c,
            poly == expected,
            || format!("{} of {} coefficients differ", differing(&poly, &expected), expected.coeffs().len()),
        )
        .matrix(kind)
        .tolerance(0.0));

        let eig = symmetric_eigenvalues(&SymMatrix::from_int(&m)?, self.cfg.tol)?;
        let n = self.f.n as f64;
        let trace = m.trace().to_f64().unwrap_or(f64::NAN);
        let sum: f64 = eig.eigenvalues.iter().sum();
        out.push(
            Check::new(
                "eigenvalue-sum",
                anchors::MATRIX_DEFINITIONS,
                Status::from_bool((sum - trace).abs() <= n * self.cfg.tol),
                json!(sum),
                json!(trace),
            )
            .on(c)
            .matrix(kind)
            .tolerance(n * self.cfg.tol),
        );

        match kind {
            MatrixKind::Laplacian => out.extend(self.laplacian_checks(c, &m, &poly, &eig)?),
            MatrixKind::Adjacency => {
                out.push(self.radius_check(c, &eig)?);
                if c == Construction::Model {
                    out.extend(self.proof_matrix_checks(&m, &eig)?);
                }
            }
            MatrixKind::Signless => {}
        }
        Ok(out)
    }

    /// Model checks pass or fail outright; true-graph disagreement with a
    /// closed form derived from the model is reported, not failed, as long as
    /// the model-vs-true difference is the known clique gap.
    fn exactness_check(&self, check: Check, c: Construction, equal: bool, detail: impl FnOnce() -> String) -> Check {
        let check = check.on(c);
        match (c, equal) {
            (_, true) => Check { status: Status::Pass, ..check },
            (Construction::Model, false) => Check { status: Status::Fail, ..check }.note(detail()),
            (Construction::True, false) => Check { status: self.clique_gap_status(), ..check }
                .note(format!("{}; closed form assumes <r> is a clique", detail())),
        }
    }

    fn laplacian_checks(&self, c: Construction, m: &IntMatrix, poly: &IntPolynomial, eig: &EigenResult) -> Result<Vec<Check>> {
        let spectrum = self.f.laplacian_spectrum();
        let table = spectrum_json(&spectrum.entries);
        let mut out = vec![self
            .exactness_check(
                Check::new(
                    "laplacian-spectrum-divides",
                    anchors::LAPLACIAN_SPECTRUM,
                    Status::Pass,
                    json!(coefficients(poly)),
                    table.clone(),
                ),
                c,
                spectrum.divides_exactly(poly),
                || "listed spectrum does not divide the characteristic polynomial exactly".to_string(),
            )
            .matrix(MatrixKind::Laplacian)
            .tolerance(0.0)];

        let claimed: Vec<f64> = spectrum
            .entries
            .iter()
            .flat_map(|(v, mult)| std::iter::repeat_n(v.to_f64().unwrap_or(f64::NAN), *mult as usize))
            .collect();
        let deviation = max_deviation(&eig.eigenvalues, &claimed);
        let clusters = cluster_multiplicities(&eig.eigenvalues, default_cluster_tol(&eig.eigenvalues));
        let tol = self.scaled_tol(m);
        out.push(
            self.exactness_check(
                Check::new(
                    "laplacian-spectrum-numeric",
                    anchors::LAPLACIAN_SPECTRUM,
                    Status::Pass,
                    json!({ "clusters": clusters_json(&clusters), "max_deviation": deviation, "residual": eig.residual }),
                    table,
                ),
                c,
                deviation <= tol,
                || format!("eigenvalues deviate from the listed spectrum by up to {deviation}"),
            )
            .matrix(MatrixKind::Laplacian)
            .tolerance(tol),
        );

        let g = self.graph(c);
        let components = g.connected_components().len();
        let zero_tol = self.cfg.tol * self.scale(m);
        let zeros = eig.eigenvalues.iter().filter(|v| v.abs() <= zero_tol).count();
        let nonneg = eig.eigenvalues.iter().all(|&v| v >= -zero_tol);
        out.push(
            Check::new(
                "laplacian-kernel",
                anchors::MATRIX_DEFINITIONS,
                Status::from_bool(nonneg && zeros == components),
                json!({ "zero_eigenvalues": zeros, "all_nonnegative": nonneg }),
                json!({ "connected_components": components }),
            )
            .on(c)
            .matrix(MatrixKind::Laplacian)
            .tolerance(zero_tol),
        );

        if c == Construction::Model {
            let exact = laplacian_energy_exact(&spectrum, self.f.m, self.f.n, Multiplicity::With)?;
            let numeric = laplacian_energy_f64(&eig.eigenvalues, self.f.m, self.f.n)?;
            let expected = exact.to_f64().unwrap_or(f64::NAN);
            let tol = self.f.n as f64 * tol;
            out.push(
                Check::new(
                    "laplacian-energy-numeric",
                    anchors::LAPLACIAN_ENERGY,
                    Status::from_bool((numeric - expected).abs() <= tol),
                    json!(numeric),
                    json!({ "with_multiplicity": rational(&exact) }),
                )
                .on(c)
                .matrix(MatrixKind::Laplacian)
                .tolerance(tol)
                .note("sum of |mu - 2m/n| over solver eigenvalues vs the listed spectrum"),
            );
        }
        Ok(out)
    }

    fn radius_check(&self, c: Construction, eig: &EigenResult) -> Result<Check> {
        let lambda1 = eig.largest();
        let base = match c {
            Construction::Model => self.f.clique_radius(),
            Construction::True => spectral_radius(&power_graph(&GroupSpec::cyclic(self.f.h)?))?,
        };
        let b = self.f.spectral_radius_bounds(base);
        let tol = self.cfg.tol;
        let lower_margin = lambda1 - b.lower;
        let stated_margin = b.upper_stated - lambda1;
        let derived_margin = b.upper_derived - lambda1;
        let ok = lower_margin > tol && derived_margin >= -tol;
        let base_name = match c {
            Construction::Model => "clique on <r>",
            Construction::True => "power graph of Z_h",
        };
        Ok(Check::new(
            "spectral-radius-bounds",
            anchors::SPECTRAL_RADIUS,
            Status::from_bool(ok),
            json!({
                "lambda1": lambda1,
                "lower_margin": lower_margin,
                "upper_stated_margin": stated_margin,
                "upper_derived_margin": derived_margin,
                "within_upper_stated": stated_margin >= -tol,
            }),
            json!({ "lower": b.lower, "upper_stated": b.upper_stated, "upper_derived": b.upper_derived }),
        )
        .on(c)
        .matrix(MatrixKind::Adjacency)
        .tolerance(tol)
        .note(format!(
            "base spectral radius from the {base_name}; pass requires lower < lambda1 <= upper_derived, upper_stated is logged"
        )))
    }

    fn proof_matrix_checks(&self, a: &IntMatrix, eig_a: &EigenResult) -> Result<Vec<Check>> {
        let tol = self.cfg.tol;
        let split = self.f.radius_split();
        let mut out = vec![Check::new(
            "proof-split-sum",
            anchors::SPECTRAL_RADIUS,
            Status::from_bool(&split.total() == a),
            json!(split.total() == *a),
            json!(true),
        )
        .on(Construction::Model)
        .matrix(MatrixKind::Adjacency)
        .tolerance(0.0)
        .note("Y1 + Y2 + Z reassembles the model adjacency matrix")];

        let y2_exact = char_poly_with_cap(&split.y2, self.cfg.matrix_cap)? == self.f.y2_charpoly().expand();
        let y2 = symmetric_eigenvalues(&SymMatrix::from_int(&split.y2)?, tol)?;
        let root = self.f.y2_top_eigenvalue();
        let mut claimed = vec![0.0; self.f.n as usize];
        claimed[0] = -root;
        *claimed.last_mut().expect("n > 0") = root;
        let y2_dev = max_deviation(&y2.eigenvalues, &claimed);
        out.push(
            Check::new(
                "proof-matrix-y2-spectrum",
                anchors::SPECTRAL_RADIUS,
                Status::from_bool(y2_exact && y2_dev <= tol),
                json!({ "smallest": y2.smallest(), "largest": y2.largest(), "max_deviation": y2_dev, "charpoly_matches": y2_exact }),
                json!({ "nonzero": [-root, root], "zero_multiplicity": self.f.n - 2, "charpoly": self.f.y2_charpoly().to_string() }),
            )
            .on(Construction::Model)
            .matrix(MatrixKind::Adjacency)
            .tolerance(tol),
        );

        let z_exact = char_poly_with_cap(&split.z, self.cfg.matrix_cap)? == self.f.z_charpoly().expand();
        let z = symmetric_eigenvalues(&SymMatrix::from_int(&split.z)?, tol)?;
        let z_top = self.f.z_top_eigenvalue();
        let z_dev = (z.largest() - z_top).abs();
        out.push(
            Check::new(
                "proof-matrix-z-top",
                anchors::SPECTRAL_RADIUS,
                Status::from_bool(z_exact && z_dev <= tol),
                json!({ "largest": z.largest(), "deviation": z_dev, "charpoly_matches": z_exact }),
                json!({ "largest": z_top, "charpoly": self.f.z_charpoly().to_string() }),
            )
            .on(Construction::Model)
            .matrix(MatrixKind::Adjacency)
            .tolerance(tol),
        );

        let y = symmetric_eigenvalues(&SymMatrix::from_int(&split.y())?, tol)?;
        let y1 = symmetric_eigenvalues(&SymMatrix::from_int(&split.y1)?, tol)?;
        let whole = eig_a.largest() <= y.largest() + z.largest() + tol;
        let inner = y.largest() <= y1.largest() + y2.largest() + tol;
        out.push(
            Check::new(
                "weyl-split",
                anchors::WEYL,
                Status::from_bool(whole && inner),
                json!({ "lambda1_a": eig_a.largest(), "lambda1_y": y.largest(), "lambda1_y1": y1.largest() }),
                json!({
                    "lambda1_y_plus_lambda1_z": y.largest() + z.largest(),
                    "lambda1_y1_plus_lambda1_y2": y1.largest() + y2.largest(),
                }),
            )
            .on(Construction::Model)
            .matrix(MatrixKind::Adjacency)
            .tolerance(tol)
            .note("lambda1(A) <= lambda1(Y) + lambda1(Z) and lambda1(Y) <= lambda1(Y1) + lambda1(Y2)"),
        );
        Ok(out)
    }

    fn energy(&self) -> Result<Check> {
        let spectrum = self.f.laplacian_spectrum();
        let with = laplacian_energy_exact(&spectrum, self.f.m, self.f.n, Multiplicity::With)?;
        let without = laplacian_energy_exact(&spectrum, self.f.m, self.f.n, Multiplicity::Without)?;
        let formula = self.f.laplacian_energy();
        let mean = BigRational::new(BigInt::from(2 * self.f.m), BigInt::from(self.f.n));
        let status = if formula == with { Status::Pass } else { Status::MismatchReported };
        let mut check = Check::new(
            "laplacian-energy",
            anchors::LAPLACIAN_ENERGY,
            status,
            json!({
                "mean_degree": rational(&mean),
                "with_multiplicity": rational(&with),
                "without_multiplicity": rational(&without),
            }),
            json!(rational(&formula)),
        )
        .on(Construction::Model)
        .matrix(MatrixKind::Laplacian)
        .tolerance(0.0);
        if status == Status::MismatchReported {
            check = check.note(format!(
                "closed form {} matches neither sum of |mu - 2m/n| over the listed spectrum ({} with multiplicity, {} without)",
                rational(&formula),
                rational(&with),
                rational(&without)
            ));
        }
        Ok(check)
    }

    fn model_vs_true(&self) -> Result<Check> {
        let labels = self.model.labels();
        let edges: Vec<[String; 2]> =
            self.diff.iter().map(|&(i, j)| [labels[i].to_string(), labels[j].to_string()]).collect();
        let expected = choose2(self.f.h) - self.cyclic_edges;
        let inside = self
            .diff
            .iter()
            .all(|&(i, j)| in_rotations_not_identity(&self.model, i) && in_rotations_not_identity(&self.model, j));
        let status = if self.diff.is_empty() {
            Status::Pass
        } else {
            self.clique_gap_status()
        };
        Ok(Check::new(
            "model-vs-true-diff",
            anchors::CLIQUE_MODEL,
            status,
            json!({ "count": self.diff.len(), "inside_rotations_without_identity": inside, "edges": edges }),
            json!({ "count": expected }),
        )
        .tolerance(0.0)
        .note(format!(
            "model makes <r> a clique; the true power graph of Z_{} has {} of its {} pairs as edges",
            self.f.h,
            self.cyclic_edges,
            choose2(self.f.h)
        )))
    }

    fn scale(&self, m: &IntMatrix) -> f64 {
        SymMatrix::from_int(m).map(|s| s.frobenius()).unwrap_or(f64::INFINITY).max(1.0)
    }

    /// `tol · max(1, ‖M‖_F)`, the eigensolver's accuracy contract.
    fn scaled_tol(&self, m: &IntMatrix) -> f64 {
        self.cfg.tol * self.scale(m)
    }
}

fn anchor_for(name: &str, kind: MatrixKind) -> &'static str {
    match name {
        "charpoly-formula" => match kind {
            MatrixKind::Adjacency => anchors::ADJACENCY_CHARPOLY,
            MatrixKind::Laplacian => anchors::LAPLACIAN_CHARPOLY,
            MatrixKind::Signless => anchors::SIGNLESS_CHARPOLY,
        },
        "laplacian-spectrum-divides" | "laplacian-spectrum-numeric" => anchors::LAPLACIAN_SPECTRUM,
        "spectral-radius-bounds" => anchors::SPECTRAL_RADIUS,
        _ => anchors::MATRIX_DEFINITIONS,
    }
}

fn in_rotations_not_identity(g: &Graph, i: usize) -> bool {
    let x = g.labels()[i];
    x.a == 0 && !x.is_identity()
}

fn choose2(h: u64) -> usize {
    (h * (h - 1) / 2) as usize
}

fn differing(a: &IntPolynomial, b: &IntPolynomial) -> usize {
    let len = a.coeffs().len().max(b.coeffs().len());
    (0..len).filter(|&i| a.coeff(i) != b.coeff(i)).count()
}

/// Largest elementwise gap between two ascending lists; infinite when the
/// lengths differ.
fn max_deviation(computed: &[f64], claimed: &[f64]) -> f64 {
    if computed.len() != claimed.len() {
        return f64::INFINITY;
    }
    let mut claimed = claimed.to_vec();
    claimed.sort_by(f64::total_cmp);
    computed.iter().zip(&claimed).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn spectrum_json(entries: &[(BigRational, u64)]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|(v, m)| json!({ "value": rational(v), "multiplicity": m }))
            .collect(),
    )
}

fn clusters_json(clusters: &[Cluster]) -> Value {
    Value::Array(
        clusters
            .iter()
            .map(|c| json!({ "mean": c.mean, "min": c.min, "max": c.max, "multiplicity": c.multiplicity }))
            .collect(),
    )
}
