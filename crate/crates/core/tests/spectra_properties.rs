use powspec_core::formulas::FormulaSet;
use powspec_core::graph::{model_graph, power_graph};
use powspec_core::linalg::matrix_of;
use powspec_core::spectra::{graph_eigenvalues, spectral_radius, symmetric_eigenvalues, SymMatrix, DEFAULT_TOL};
use powspec_core::{Graph, GroupElement, GroupSpec, MatrixKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = DEFAULT_TOL;

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-10.0..10.0);
            data[i * n + j] = v;
            data[j * n + i] = v;
        }
    }
    SymMatrix::new(n, data).unwrap()
}

#[test]
fn weyl_inequality_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3e71);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let a = random_symmetric(&mut rng, n);
        let b = random_symmetric(&mut rng, n);
        let la = symmetric_eigenvalues(&a, TOL).unwrap().largest();
        let lb = symmetric_eigenvalues(&b, TOL).unwrap().largest();
        let lab = symmetric_eigenvalues(&a.add(&b).unwrap(), TOL).unwrap().largest();
        assert!(lab <= la + lb + TOL, "{lab} > {la} + {lb}");
    }
}

#[test]
fn weyl_inequality_on_radius_split() {
    for (k, p) in [(2, 3), (2, 5)] {
        let f = FormulaSet::new(k, p).unwrap();
        let split = f.radius_split();
        let top = |m: &powspec_core::IntMatrix| symmetric_eigenvalues(&SymMatrix::from_int(m).unwrap(), TOL).unwrap().largest();
        let a = matrix_of(&model_graph(k, p).unwrap(), MatrixKind::Adjacency);
        assert_eq!(split.total(), a);
        assert!(top(&a) <= top(&split.y()) + top(&split.z) + TOL);
        assert!((top(&split.y2) - f.y2_top_eigenvalue()).abs() <= TOL);
        assert!((top(&split.z) - f.z_top_eigenvalue()).abs() <= TOL);
        let y2 = symmetric_eigenvalues(&SymMatrix::from_int(&split.y2).unwrap(), TOL).unwrap();
        assert!((y2.smallest() + f.y2_top_eigenvalue()).abs() <= TOL);
        let zeros = y2.eigenvalues.iter().filter(|v| v.abs() <= TOL).count();
        assert_eq!(zeros as u64, f.n - 2);
    }
}

#[test]
fn vertex_deletion_lowers_spectral_radius() {
    let g = model_graph(2, 3).unwrap();
    let full = spectral_radius(&g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut vertices: Vec<usize> = (0..g.order()).collect();
    vertices.shuffle(&mut rng);
    for &v in &vertices[..5] {
        let smaller = spectral_radius(&g.without_vertex(v)).unwrap();
        assert!(full - smaller > TOL, "removing {} : {smaller} vs {full}", g.labels()[v]);
    }
}

fn test_graphs() -> Vec<Graph> {
    let mut out = vec![model_graph(2, 3).unwrap(), model_graph(2, 5).unwrap()];
    out.push(power_graph(&GroupSpec::semidihedral(2, 3).unwrap()));
    for n in [1, 2, 6, 12, 17] {
        out.push(power_graph(&GroupSpec::cyclic(n).unwrap()));
    }
    // Disconnected: the power graph minus its identity vertex.
    let g = power_graph(&GroupSpec::semidihedral(2, 3).unwrap());
    out.push(g.without_vertex(g.position(GroupElement::IDENTITY).unwrap()));
    let labels: Vec<GroupElement> = (0..7).map(|b| GroupElement::new(0, b)).collect();
    out.push(Graph::from_edges(labels.clone(), &[(0, 1), (2, 3), (3, 4)]).unwrap());
    out.push(Graph::empty(labels));
    out
}

#[test]
fn eigenvalue_sum_equals_trace() {
    for g in test_graphs() {
        for kind in MatrixKind::ALL {
            let m = matrix_of(&g, kind);
            let eig = graph_eigenvalues(&g, kind, TOL).unwrap();
            let sum: f64 = eig.eigenvalues.iter().sum();
            let trace: f64 = m.trace().try_into().map(|t: i64| t as f64).unwrap();
            assert!((sum - trace).abs() <= g.order() as f64 * TOL, "{kind:?}: {sum} vs {trace}");
            assert_eq!(eig.eigenvalues.len(), g.order());
        }
    }
}

#[test]
fn laplacian_kernel_counts_components() {
    for g in test_graphs() {
        let eig = graph_eigenvalues(&g, MatrixKind::Laplacian, TOL).unwrap();
        let scale = SymMatrix::from_int(&matrix_of(&g, MatrixKind::Laplacian)).unwrap().frobenius().max(1.0);
        assert!(eig.eigenvalues.iter().all(|&v| v >= -TOL * scale));
        assert!(eig.smallest().abs() <= TOL * scale);
        let zeros = eig.eigenvalues.iter().filter(|v| v.abs() <= TOL * scale).count();
        assert_eq!(zeros, g.connected_components().len());
    }
}
