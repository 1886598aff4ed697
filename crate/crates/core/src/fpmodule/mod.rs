//! Finitely presented modules `R^r / N` and the homological tools built on
//! them: colon submodules, kernels, annihilators, resolutions, Ext,
//! dimension and Hilbert functions.

mod ext;
mod hilbert;
mod map;
mod module;
mod resolution;
mod submodule;
mod subquotient;

pub use ext::ext_module;
pub use map::{kernel, Complex, Kernel, ModuleMap};
pub use module::FPModule;
pub use resolution::free_resolution;
pub use submodule::{colon_submodule, Submodule};
pub use subquotient::Subquotient;

pub(crate) use ext::ExtComplex;
