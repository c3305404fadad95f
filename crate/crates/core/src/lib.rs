pub mod codes;
pub mod geometry;
pub mod groebner;
pub mod linalg;
pub mod pipeline;
pub mod poly;
pub mod report;
pub mod singular;
