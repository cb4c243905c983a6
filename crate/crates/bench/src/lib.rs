//! Fixtures shared by the benchmarks.

use frobcheck_core::{Polynomial, PresentedModule, RingFlags, RingModel};

/// The t^3, t^4, t^5 ring over F_5.
pub fn monomial_curve() -> RingModel {
    let flags = RingFlags {
        is_domain: true,
        generically_gorenstein: true,
        expected_cm: Some(true),
    };
    RingModel::parse(
        5,
        &["x", "y", "z"],
        &[3, 4, 5],
        &["x*z-y^2", "x^3-y*z", "x^2*y-z^2"],
        flags,
    )
    .unwrap()
}

pub fn polynomial_ring(p: u64) -> RingModel {
    RingModel::parse(p, &["x", "y", "z", "w"], &[], &[], RingFlags::default()).unwrap()
}

/// The quadric x^2 + yz over F_3.
pub fn quadric() -> RingModel {
    let flags = RingFlags {
        is_domain: true,
        generically_gorenstein: true,
        expected_cm: Some(true),
    };
    RingModel::parse(3, &["x", "y", "z"], &[], &["x^2+y*z"], flags).unwrap()
}

pub fn elements(ring: &RingModel, s: &[&str]) -> Vec<Polynomial> {
    s.iter().map(|e| ring.parse_element(e).unwrap()).collect()
}

/// A module over the quadric given by its rank-one matrix factorization.
pub fn matrix_factorization(ring: &RingModel) -> PresentedModule {
    let rows = [elements(ring, &["x", "y"]), elements(ring, &["z", "-x"])];
    PresentedModule::new(
        ring,
        frobcheck_core::Matrix::from_rows(rows.to_vec()).unwrap(),
    )
    .unwrap()
}
