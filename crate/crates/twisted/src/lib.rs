//! Twisted (projective) group algebras of finite groups with coefficients in small
//! unital *-algebras.

pub mod algebra;
pub mod clifford;
pub mod cocycle;
pub mod error;
pub mod group;
pub mod iso;
pub mod linalg;
pub mod model;
pub mod rewrite;
pub mod ring;
pub mod sample;

pub use algebra::AlgebraElement;
pub use cocycle::{Lambda, SchurFunction};
pub use error::{Error, Result};
pub use group::{GroupTable, SubsetGroup};
pub use ring::{Field, RingDescriptor, RingValue, C64};
