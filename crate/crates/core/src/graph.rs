//! Power graphs, the block-matrix model graph and structural comparisons.
//!
//! All graphs of `G(k, p)` use the same vertex order (see [`canonical_order`]),
//! so the true power graph and the model graph can be compared edge by edge
//! and their matrices line up with the block layout used by the closed forms.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

/// Square bit matrix, one packed row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix { n, words, bits: vec![0; n * words] }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.bits[i * self.words + j / 64];
        if value {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.bits[i * self.words..(i + 1) * self.words].iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Undirected simple graph with labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<GroupElement>,
    adj: BitMatrix,
}

impl Graph {
    /// Graph with the given labels and no edges.
    pub fn empty(labels: Vec<GroupElement>) -> Self {
        let n = labels.len();
        Graph { labels, adj: BitMatrix::new(n) }
    }

    /// Builds a graph from an edge list; loops and out-of-range endpoints are rejected.
    pub fn from_edges(labels: Vec<GroupElement>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(labels);
        for &(i, j) in edges {
            if i == j || i >= g.order() || j >= g.order() {
                return Err(Error::Dimension("edge endpoint"));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// `K_n` with labels `r^0, ..., r^(n-1)`.
    pub fn complete(n: usize) -> Self {
        let labels = (0..n as u64).map(|b| GroupElement::new(0, b)).collect();
        let mut g = Graph::empty(labels);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert_ne!(i, j);
        self.adj.set(i, j, true);
        self.adj.set(j, i, true);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj.set(i, j, false);
        self.adj.set(j, i, false);
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj.get(i, j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj.row_count(i)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&j| self.adj.get(i, j))
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|i| (i + 1..n).filter(move |&j| self.adj.get(i, j)).map(move |j| (i, j))).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|i| self.degree(i)).collect()
    }

    /// Connected components by breadth-first search, each sorted, ordered by
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_symmetric_and_loopless(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| !self.adj.get(i, i) && (0..n).all(|j| self.adj.get(i, j) == self.adj.get(j, i)))
    }

    /// Induced subgraph with vertex `v` deleted.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.order()).filter(|&i| i != v).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.iter().map(|&i| self.labels[i]).collect());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                if self.adj.get(i, j) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn position(&self, x: GroupElement) -> Option<usize> {
        self.labels.iter().position(|&y| y == x)
    }
}

/// Directed power graph: arc `x -> y` iff `y ∈ <x>` and `y != x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<GroupElement>,
    arcs: BitMatrix,
}

impl Digraph {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs.get(from, to)
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|i| (0..n).filter(move |&j| self.arcs.get(i, j)).map(move |j| (i, j))).collect()
    }

    pub fn arc_count(&self) -> usize {
        (0..self.order()).map(|i| self.arcs.row_count(i)).sum()
    }

    /// Forgets orientation.
    pub fn underlying(&self) -> Graph {
        let mut g = Graph::empty(self.labels.clone());
        for (i, j) in self.arcs() {
            g.add_edge(i, j);
        }
        g
    }
}

/// Vertex order shared by every graph of a group.
///
/// Cyclic groups: `r^0, r^1, ...`. For `G(k, p)` with `h = 2^k p`:
/// `e`, `u = r^(h/2)`, the remaining `r^i` ascending, then the pairs
/// `(s r^m, s r^(m + h/2))` for odd `m < h/2` ascending, then `s r^(2t)`
/// ascending.
pub fn canonical_order(spec: &GroupSpec) -> Vec<GroupElement> {
    let h = spec.rotation_order();
    let Some(u) = spec.central_involution() else {
        return spec.elements();
    };
    let mut order = Vec::with_capacity(spec.order() as usize);
    order.push(GroupElement::IDENTITY);
    order.push(u);
    order.extend((1..h).filter(|&b| b != u.b).map(|b| GroupElement::new(0, b)));
    for m in (1..h / 2).step_by(2) {
        order.push(GroupElement::new(1, m));
        order.push(GroupElement::new(1, m + h / 2));
    }
    order.extend((0..h).step_by(2).map(|b| GroupElement::new(1, b)));
    order
}

fn directed_arcs(spec: &GroupSpec, labels: &[GroupElement]) -> BitMatrix {
    let n = labels.len();
    let mut pos = vec![0usize; n];
    for (i, &x) in labels.iter().enumerate() {
        pos[spec.index_of(x)] = i;
    }
    let mut arcs = BitMatrix::new(n);
    for (i, &x) in labels.iter().enumerate() {
        for y in spec.cyclic_subgroup(x).expect("labels are canonical") {
            let j = pos[spec.index_of(y)];
            if j != i {
                arcs.set(i, j, true);
            }
        }
    }
    arcs
}

/// Undirected power graph: `x ~ y` iff `x != y` and one lies in the cyclic
/// subgroup generated by the other.
pub fn power_graph(spec: &GroupSpec) -> Graph {
    let labels = canonical_order(spec);
    let arcs = directed_arcs(spec, &labels);
    let mut g = Graph::empty(labels);
    for i in 0..g.order() {
        for j in 0..g.order() {
            if arcs.get(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn directed_power_graph(spec: &GroupSpec) -> Digraph {
    let labels = canonical_order(spec);
    let arcs = directed_arcs(spec, &labels);
    Digraph { labels, arcs }
}

// 2×2 blocks of the model adjacency matrix.
const BLOCK_E: [[bool; 2]; 2] = [[true, true], [true, true]];
const BLOCK_F: [[bool; 2]; 2] = [[true, true], [false, false]];
const BLOCK_G: [[bool; 2]; 2] = [[false, true], [true, false]];

/// The model graph whose adjacency matrix is `[[B, C], [C^T, D]]` under
/// [`canonical_order`]:
///
/// * `B`: all ones off the diagonal on the `2^k p` rotations (a clique);
/// * `C`: first block row `E ... E F ... F` (`2^(k-2) p` of each), zero elsewhere;
/// * `D`: `G` on the first `2^(k-2) p` diagonal blocks, zero elsewhere.
pub fn model_graph(k: u32, p: u64) -> Result<Graph> {
    let spec = GroupSpec::semidihedral(k, p)?;
    let labels = canonical_order(&spec);
    let h = spec.rotation_order() as usize;
    let pairs = h / 4;
    let mut adj = BitMatrix::new(2 * h);

    for i in 0..h {
        for j in 0..h {
            adj.set(i, j, i != j);
        }
    }
    let mut put_block = |row: usize, col: usize, block: &[[bool; 2]; 2]| {
        for (di, line) in block.iter().enumerate() {
            for (dj, &bit) in line.iter().enumerate() {
                adj.set(row + di, col + dj, bit);
            }
        }
    };
    // C and C^T; block column c covers vertices h + 2c, h + 2c + 1.
    for c in 0..h / 2 {
        let block = if c < pairs { &BLOCK_E } else { &BLOCK_F };
        put_block(0, h + 2 * c, block);
        let transposed = [[block[0][0], block[1][0]], [block[0][1], block[1][1]]];
        put_block(h + 2 * c, 0, &transposed);
    }
    for c in 0..pairs {
        put_block(h + 2 * c, h + 2 * c, &BLOCK_G);
    }

    let g = Graph { labels, adj };
    debug_assert!(g.is_symmetric_and_loopless());
    Ok(g)
}

/// Symmetric difference of the edge sets, sorted.
pub fn graph_diff(g1: &Graph, g2: &Graph) -> Result<Vec<(usize, usize)>> {
    if g1.labels != g2.labels {
        return Err(Error::LabelMismatch);
    }
    let n = g1.order();
    Ok((0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| g1.has_edge(i, j) != g2.has_edge(i, j))
        .collect())
}

/// One `K4` block `{e, u, s r^m, s r^(m + h/2)}` of the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K4Block {
    /// The odd exponent `m < h/2`.
    pub m: u64,
    /// How many of the five edges meeting `s r^m` or `s r^(m+h/2)` are present.
    pub s_edges: usize,
    /// All six edges present (the `{e, u}` edge is counted in the cyclic part).
    pub complete: bool,
}

/// Edge census against `P(<r>) ∪ 2^(k-1)p K_2 ∪ 2^(k-2)p (P(<u>) + K_2)`.
///
/// The parts share `e` and `u`, so the union is taken edge-wise: edges inside
/// `<r>` (including `{e, u}`) go to the cyclic part, `{e, s r^even}` are
/// pendant edges and each edge touching `s r^odd` belongs to its `K4` block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub cyclic_part_edges: usize,
    pub pendant_edges: usize,
    pub k4_blocks: Vec<K4Block>,
    pub uncovered: Vec<(usize, usize)>,
    pub covered: bool,
}

impl DecompositionReport {
    pub fn complete_k4_blocks(&self) -> usize {
        self.k4_blocks.iter().filter(|b| b.complete).count()
    }
}

pub fn verify_decomposition(g: &Graph, spec: &GroupSpec) -> Result<DecompositionReport> {
    let u = spec.central_involution().ok_or(Error::NotSemidihedral)?;
    let h = spec.rotation_order();
    let half = h / 2;
    let n = g.order();
    if n as u64 != spec.order() || g.labels.iter().any(|&x| !spec.contains(x)) {
        return Err(Error::LabelMismatch);
    }
    let e = GroupElement::IDENTITY;
    let e_u_present = match (g.position(e), g.position(u)) {
        (Some(i), Some(j)) => g.has_edge(i, j),
        _ => return Err(Error::LabelMismatch),
    };

    let mut blocks: Vec<K4Block> =
        (1..half).step_by(2).map(|m| K4Block { m, s_edges: 0, complete: false }).collect();
    let mut report = DecompositionReport {
        cyclic_part_edges: 0,
        pendant_edges: 0,
        k4_blocks: Vec::new(),
        uncovered: Vec::new(),
        covered: false,
    };

    for (i, j) in g.edges() {
        let (x, y) = (g.labels[i], g.labels[j]);
        if x.a == 0 && y.a == 0 {
            report.cyclic_part_edges += 1;
            continue;
        }
        // order so that `y` is an s-element
        let (x, y) = if y.a == 1 { (x, y) } else { (y, x) };
        if y.b % 2 == 0 {
            if x == e {
                report.pendant_edges += 1;
            } else {
                report.uncovered.push((i, j));
            }
            continue;
        }
        let m = y.b % half;
        let in_block = x == e || x == u || (x.a == 1 && x.b % half == m);
        if in_block {
            blocks[(m / 2) as usize].s_edges += 1;
        } else {
            report.uncovered.push((i, j));
        }
    }
    for b in &mut blocks {
        b.complete = b.s_edges == 5 && e_u_present;
    }
    report.k4_blocks = blocks;
    report.covered = report.uncovered.is_empty();
    Ok(report)
}
