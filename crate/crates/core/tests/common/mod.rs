#![allow(dead_code)]

use gorlab::module::{from_presentation, random_presentation, FiniteModule};
use gorlab::ring::ShortGorensteinRing;

pub fn ring(e: usize) -> ShortGorensteinRing {
    ShortGorensteinRing::identity(101, e).unwrap()
}

/// A module from a random presentation; `None` when it collapses to 0.
pub fn module(ring: &ShortGorensteinRing, g: usize, r: usize, seed: u64) -> Option<FiniteModule> {
    let (m, _) = from_presentation(&random_presentation(ring, g, r, seed));
    (m.dim() > 0).then_some(m)
}
