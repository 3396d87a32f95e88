pub mod cli;
pub mod criteria;
pub mod exact;
pub mod grading;
pub mod liealg;
pub mod linalg;
pub mod shapovalov;
pub mod verma;
