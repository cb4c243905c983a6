//! Ideal-level operations of the algebra kernel.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Vector};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::RingModel;

/// Length of a module: finite dimension over F_p, or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Length::Finite(n) => s.serialize_u64(*n),
            Length::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` in the ambient
/// polynomial ring of `ring` (the ring's own ideal is not added).
pub fn buchberger(gens: &[Polynomial], ring: &RingModel) -> Result<GroebnerBasis> {
    let v = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
    GroebnerBasis::compute(ring.poly(), 1, v, ring.budget())
}

/// Gröbner basis of I + (gens) for the ring's ideal I.
pub fn ideal_plus(ring: &RingModel, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let mut all: Vec<Polynomial> = ring.ideal().to_vec();
    all.extend(gens.iter().cloned());
    buchberger(&all, ring)
}

pub fn normal_form(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if gb.rank() != 1 {
        return Err(Error::RingMismatch(format!(
            "basis of a rank {} module used as an ideal",
            gb.rank()
        )));
    }
    if f.terms().iter().any(|t| t.0.nvars() != ring.nvars()) {
        return Err(Error::RingMismatch(
            "polynomial from a different ring".into(),
        ));
    }
    Ok(gb
        .normal_form(ring, &Vector::from_poly(f, 0))
        .to_column(0, 1)
        .pop()
        .unwrap())
}

/// Standard monomials of a monomial ideal given by generators, if finitely many.
pub(crate) fn standard_monomials(
    lts: &[&Monomial],
    nvars: usize,
    weights: &[u32],
    collect: bool,
) -> (Length, Vec<Monomial>) {
    if lts.iter().any(|m| m.is_one()) {
        return (Length::Finite(0), Vec::new());
    }
    for i in 0..nvars {
        let pure = lts.iter().any(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .all(|(j, &e)| (j == i) == (e > 0))
        });
        if !pure {
            return (Length::Infinite, Vec::new());
        }
    }
    let mut exps = vec![0u32; nvars];
    let mut count = 0u64;
    let mut out = Vec::new();
    fn divisible(lts: &[&Monomial], exps: &[u32]) -> bool {
        lts.iter()
            .any(|m| m.exponents().iter().zip(exps).all(|(a, b)| a <= b))
    }
    fn rec(
        k: usize,
        exps: &mut Vec<u32>,
        lts: &[&Monomial],
        weights: &[u32],
        count: &mut u64,
        out: &mut Vec<Monomial>,
        collect: bool,
    ) {
        if k == exps.len() {
            *count += 1;
            if collect {
                out.push(Monomial::new(exps, weights));
            }
            return;
        }
        loop {
            if divisible(lts, exps) {
                break;
            }
            rec(k + 1, exps, lts, weights, count, out, collect);
            exps[k] += 1;
        }
        exps[k] = 0;
    }
    rec(0, &mut exps, lts, weights, &mut count, &mut out, collect);
    out.sort();
    (Length::Finite(count), out)
}

/// F_p-dimension of S/J and the standard monomials (increasing order) when finite.
pub fn colength_and_standard_monomials(
    ring: &PolyRing,
    gb: &GroebnerBasis,
) -> (Length, Vec<Monomial>) {
    let lts = gb.leading_monomials(0);
    standard_monomials(&lts, ring.nvars(), ring.weights(), true)
}

/// Krull dimension of S/J from the leading-term ideal; -1 for the unit ideal.
pub fn krull_dimension(ring: &PolyRing, gb: &GroebnerBasis) -> i64 {
    dimension_of_monomial_ideal(&gb.leading_monomials(0), ring.nvars())
}

pub(crate) fn dimension_of_monomial_ideal(lts: &[&Monomial], nvars: usize) -> i64 {
    if lts.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u64> = lts
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0i64;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as i64;
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// {g^q : g in gens} for q a power of the characteristic.
pub fn bracket_power(ring: &RingModel, gens: &[Polynomial], q: u64) -> Result<Vec<Polynomial>> {
    ring.frobenius_exponent(q)?;
    let q = u32::try_from(q).map_err(|_| Error::argument("q too large"))?;
    Ok(gens
        .iter()
        .map(|g| ring.poly().frobenius_power(g, q))
        .collect())
}

/// Splits f = Σ_a G_a(x_1^q..x_v^q) x^a, returning a ↦ G_a.
pub fn qth_root_decompose(
    ring: &PolyRing,
    f: &Polynomial,
    q: u32,
) -> BTreeMap<Vec<u32>, Polynomial> {
    let mut parts: BTreeMap<Vec<u32>, Vec<(Vec<u32>, i64)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let residue: Vec<u32> = m.exponents().iter().map(|e| e % q).collect();
        let quotient: Vec<u32> = m.exponents().iter().map(|e| e / q).collect();
        parts
            .entry(residue)
            .or_default()
            .push((quotient, *c as i64));
    }
    parts
        .into_iter()
        .map(|(a, terms)| (a, ring.from_terms(terms)))
        .filter(|(_, g)| !g.is_zero())
        .collect()
}
