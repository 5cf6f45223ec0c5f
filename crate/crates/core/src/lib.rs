pub mod detectors;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod montecarlo;
pub mod recipes;
pub mod rng;
