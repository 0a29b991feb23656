//! Graph orientation toolkit: flow-based k-orientations, proper
//! orientations of bipartite graphs, exact maximum average degree, exact
//! proper orientation numbers at small scale, and a gadget-level
//! certificate for a 182-vertex quadrangulation with proper orientation
//! number 4.

mod flow;

pub mod density;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod orientation;
pub mod t4proof;

pub use density::{mad_exact, pseudoarboricity, DensityError, DensityReport, Rational};
pub use graph::{bipartition, euler_quadrangulation_check, Bipartition, EdgeBound, Graph, Side};
pub use orientation::{
    k_orientation, proper_bipartite_orientation, proper_three_orientation, verify_orientation,
    Infeasible, Orientation, OrientationReport,
};
