//! Combinatorial Hopf algebras built from posets and graphs.

pub mod canon;
pub mod graded;
pub mod graph;
pub mod poset;
pub mod poset_algebra;
pub mod rota;

pub use graded::{ideal_lattice, GradedPoset};
pub use graph::{chromatic_symmetric, graph_zeta, GraphAlgebra, GraphClass, SimpleGraph};
pub use poset::{antichain, boolean_lattice, chain, polygon_face_lattice, FinitePoset};
pub use poset_algebra::{poset_zeta, PosetAlgebra, PosetClass};
pub use rota::{rota_zeta, GradedPosetClass, RotaAlgebra};
