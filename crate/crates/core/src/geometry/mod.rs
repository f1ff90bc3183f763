//! Small finite geometries: fields GF(2), GF(3), GF(4), formed spaces with
//! their projective points, the strongly regular graphs built from them, and
//! the printed parameter table.

mod catalog;
mod field;
mod graphs;
mod space;

pub use catalog::{
    catalog_csv, compare_with_catalog, construct_row, srg_catalog, standard_space, CatalogEntry,
    RowGraph, Sign, SrgRow, MAX_CATALOG_M,
};
pub use field::Field;
pub use graphs::{isotropic_line_graph, isotropic_lines, orthogonality_graph, tangent_line_graph};
pub use space::{FormKind, FormedSpace, ProjectivePoint, QuadricType, MAX_DIM};
