pub mod fincat;
pub mod setval;
pub mod limits;
pub mod kan;
pub mod reflect;
pub mod sketch;
pub mod gen;
pub mod json;
pub mod fixtures;
pub mod cli;
