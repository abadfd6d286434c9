pub mod claims;
pub mod error;
pub mod golden;
pub mod invariant;
pub mod ograph;
pub mod oracle;
pub mod report;
pub mod subpoly;
pub mod triangulate;
mod union_find;
pub mod volume;
