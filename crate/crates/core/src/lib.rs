pub mod bounds;
pub mod cli;
pub mod game;
pub mod graph;
pub mod solver;
pub mod strategies;
pub mod tree;
