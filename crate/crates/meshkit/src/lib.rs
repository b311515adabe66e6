//! Mesh topographies for the PDE surrogate bench: uniform structured grids,
//! wall-graded channel grids, and unstructured triangle meshes.
//!
//! All mesh values are immutable after construction and can be shared freely
//! across threads.

mod error;
mod graded;
mod structured;
mod trimesh;

pub use error::MeshError;
pub use graded::{make_graded, GradedGrid};
pub use structured::{make_structured, StructuredGrid};
pub use trimesh::{
    make_trimesh_annulus_sector, make_trimesh_unit_square, RegionRule, TriMesh,
    DUPLICATE_NODE_TOL,
};
