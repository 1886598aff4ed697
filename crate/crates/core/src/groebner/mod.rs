//! Buchberger's algorithm for ideals and submodules of free modules, and the
//! ideal operations built on it.

mod basis;
mod engine;
mod free;
mod ideal;
mod order;
mod syzygy;

pub use basis::{buchberger, buchberger_module, Ambient, GroebnerBasis};
pub use free::FreeElement;
pub use ideal::{
    colon_ideal, elimination, ideal_intersection, membership, radical_membership, saturation,
    Ideal,
};
pub use order::{ModuleOrder, SchreyerFrame};
pub use syzygy::syzygy_basis;

pub(crate) use engine::{Engine, Vector};
pub(crate) use syzygy::{schreyer_syzygies, syzygies};
