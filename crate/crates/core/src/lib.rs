pub mod drinfeld;
pub mod field;
pub mod linalg;
pub mod modules;
pub mod presentations;
pub mod suite;
pub mod tdpair;
