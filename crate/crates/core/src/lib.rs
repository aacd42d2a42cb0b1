//! Dense subrings and spectral topology of finite commutative rings.

pub mod bitset;
pub mod criterion;
pub mod dense;
pub mod error;
pub mod ideal;
pub mod oracle;
pub mod ring;
pub mod topology;
pub mod workbench;

pub use bitset::BitSet;
pub use error::{Error, Result};
