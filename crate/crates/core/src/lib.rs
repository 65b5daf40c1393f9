//! Graphs without short odd cycles: sphere independence, ball carving,
//! coloring, bounds on `f(n, k)`, and an exact small-case oracle.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod decomposition;
pub mod graph;
pub mod io;
pub mod oddgirth;
pub mod oracle;
