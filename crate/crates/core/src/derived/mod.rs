//! Structure derived from the axioms: the scalar field, projections and
//! their lattice, and standard bases.

pub mod basis;
pub mod projections;
pub mod scalars;

pub use basis::{check_standard_basis, StandardBasis, MAX_BASIS_SIZE};
pub use projections::{
    check_correspondence, check_ortholattice, check_orthomodular, inner_product, onb_to_projection,
    orthomodular_decompose, orthomodular_space_residuals, orthomodular_split, proj_complement,
    proj_from_vector, proj_join, proj_leq, proj_meet, projection_to_onb, random_projection,
    Projection, SubspaceOnb,
};
pub use scalars::{
    add_morphisms, check_field_laws, codiagonal_kernel, has_non_self_adjoint_scalar, negate,
    scalar_add, scalar_inverse, scalar_mul, scale_morphism,
};
