//! Algebra-building operations: one-point extensions and coextensions, the iterated tubular
//! construction, trivial extensions, repetitive windows and socle quotients.

mod extension;
mod trivial;

pub use extension::{
    build_asnm, coextend_tensor, coextend_zero, extend_hom, extend_zero, one_point_coextension,
    one_point_coextension_labeled, one_point_extension, one_point_extension_labeled, ExtensionKind, ExtensionResult,
    IteratedExtension, old_hom_dims_preserved,
};
pub use trivial::{
    nakayama_shift, orbit_algebra, repetitive_window, socle_dim, socle_quotient, trivial_extension, Part,
    RepetitiveWindow,
};
