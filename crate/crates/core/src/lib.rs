//! Exact representation theory of free FI_d-modules in characteristic zero.
//!
//! The crate decomposes free modules M(W) level by level into symmetric-group
//! irreducibles via iterated Pieri rules, computes d-weights and padded
//! multiplicities, and checks the stability phenomena of finitely generated
//! FI_d-modules on free modules: stabilization of padded multiplicities,
//! exponential-polynomial dimension growth and polynomial growth of
//! single-padded multiplicities. An independent character-table oracle
//! (Murnaghan–Nakayama plus induced characters) cross-checks the Pieri
//! engine.
//!
//! All arithmetic is exact. Batch loops run on rayon when the `parallel`
//! feature (on by default) is enabled; see [`exec::Execution`].

pub mod characters;
pub mod combinat;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod exec;
pub mod free_module;
pub mod oracle;
pub mod partition;
pub mod pieri;
pub mod stability;

pub use decomposition::IrreducibleDecomposition;
pub use error::{Error, Result};
pub use exec::Execution;
pub use free_module::FreeModuleSpec;
pub use partition::{Composition, PaddedLabel, Partition};
