pub mod exact;
pub mod graph;
pub mod glg;
pub mod enumerate;
pub mod glgsearch;
pub mod starsearch;
pub mod classify;
pub mod cli;
