//! Shared helpers for the pipeline benchmarks.

use luorbit_core::states::{self, DensityMatrix, PureState};

pub fn generic_state(n: usize) -> PureState {
    states::random_pure(n, 0xC0FFEE).expect("n >= 2")
}

pub fn generic_density(n: usize) -> DensityMatrix {
    states::to_density(&generic_state(n))
}
