pub mod arith;
pub mod codes;
pub mod error;
pub mod families;
pub mod field;
pub mod oracle;
pub mod periods;
pub mod reference;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use field::{build_field, FieldConfig, FieldCtx, FieldElement};
