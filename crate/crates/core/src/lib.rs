pub mod cartan;
pub mod catalog;
pub mod cuspidal;
pub mod error;
pub mod groups;
pub mod schema;
pub mod springer;
pub mod strata;
pub mod verify;
pub mod weyl;
