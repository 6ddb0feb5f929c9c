pub mod cone;
pub mod dd;
pub mod fan;
pub mod polyhedron;
pub mod simplex;

pub use cone::Cone;
pub use fan::Fan;
pub use polyhedron::Polyhedron;
