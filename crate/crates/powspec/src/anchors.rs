//! Fixed registry of result labels. Every report check carries one of these
//! verbatim so a reader can find the statement being tested.

pub const GROUP_PRESENTATION: &str = "group presentation";
pub const CLASS_PARTITION: &str = "class partition remark";
pub const COUNTING: &str = "vertex and edge counts";
pub const MATRIX_DEFINITIONS: &str = "matrix definitions";
pub const POWER_GRAPH_DECOMPOSITION: &str = "power graph decomposition theorem";
pub const ADJACENCY_CHARPOLY: &str = "adjacency characteristic polynomial lemma";
pub const SPECTRAL_RADIUS: &str = "spectral radius lemma";
pub const LAPLACIAN_CHARPOLY: &str = "Laplacian characteristic polynomial lemma";
pub const LAPLACIAN_SPECTRUM: &str = "Laplacian spectrum corollary";
pub const LAPLACIAN_ENERGY: &str = "Laplacian energy corollary";
pub const SIGNLESS_CHARPOLY: &str = "signless Laplacian characteristic polynomial lemma";
pub const CLIQUE_MODEL: &str = "block adjacency matrix of the power graph";
pub const WEYL: &str = "Weyl inequality";

pub const ALL: [&str; 13] = [
    GROUP_PRESENTATION,
    CLASS_PARTITION,
    COUNTING,
    MATRIX_DEFINITIONS,
    POWER_GRAPH_DECOMPOSITION,
    ADJACENCY_CHARPOLY,
    SPECTRAL_RADIUS,
    LAPLACIAN_CHARPOLY,
    LAPLACIAN_SPECTRUM,
    LAPLACIAN_ENERGY,
    SIGNLESS_CHARPOLY,
    CLIQUE_MODEL,
    WEYL,
];

pub fn is_registered(anchor: &str) -> bool {
    ALL.contains(&anchor)
}
