//! Test support for the grafalgo crates: exhaustive oracles for small
//! instances, naive models of the data structures with fuzz drivers, and
//! random instance builders.

pub mod fuzz;
pub mod instances;
pub mod oracles;

pub use rand::rngs::StdRng;
pub use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
