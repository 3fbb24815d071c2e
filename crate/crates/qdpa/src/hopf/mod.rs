//! Braided Hopf structure on the divided power algebra and Hopf-axiom
//! verification for the operator quantum groups built on top of it.

pub mod braided;
pub mod quantum_groups;

pub use braided::{
    braided_antipode, braided_coproduct, coassociativity_sides, counit, BraidedTensorElement,
    Tensor3,
};
pub use quantum_groups::{
    coproduct_power, qbinomial_coproduct_expansion, tensor_sums_agree, verify_hopf, AxiomResult,
    Gen, GenWord, HopfPresentation, HopfReport, PresentationName, Relation, TensorTerm,
};
