//! The Hopf algebra data model, axiom checks, structural maps and the builtin catalog.

mod algebra;
mod axioms;
pub mod builtins;
mod construct;
pub mod grouplike;
pub mod groups;
pub mod maps;
mod morphism;
mod terms;

pub use algebra::{Element, HopfAlgebra, SparseVec, StructureConstants, Tensor2};
pub use axioms::verify_axioms;
pub(crate) use axioms::{outer_terms, unit_terms};
pub use builtins::{
    coboundary_cocycle, drinfeld_twist, function_algebra, group_algebra, small_quantum_sl2,
    sweedler_h4, taft, trivial, verify_two_cocycle, Twisted,
};
pub use construct::{
    check_hopf_ideal, check_hopf_subalgebra, dual_hopf, ideal_antipode_closure, left_ideal,
    quotient_hopf, right_ideal, sub_hopf, tensor_in, two_sided_ideal, Quotient, SubAlgebra,
};
pub use grouplike::{group_algebra_check, grouplikes, GroupAlgebraVerdict, GrouplikeReport};
pub use groups::Group;
pub use maps::{convolution, convolution_inverse, convolution_unit, w_operator, WOperator};
pub use morphism::{verify_morphism, HopfMorphism};
pub(crate) use terms::sparse_columns;
pub use terms::Terms;
