//! The ambient object: a quotient R = F_p[x_1..x_v]/I with I inside the
//! maximal ideal of the origin and quasi-homogeneous for the weights.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{GroebnerBasis, Vector};
use crate::parse::parse_polynomial;
use crate::poly::{PolyRing, Polynomial};

/// User assertions about the ring that the engine cannot verify cheaply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RingFlags {
    /// The ring is a domain.
    pub is_domain: bool,
    /// The ring is generically Gorenstein (canonical module has a rank).
    pub generically_gorenstein: bool,
    /// Expected Cohen-Macaulayness; checked against the computed depth.
    pub expected_cm: Option<bool>,
}

struct Inner {
    poly: PolyRing,
    ideal: Vec<Polynomial>,
    flags: RingFlags,
    budget: Budget,
    gb: OnceLock<std::result::Result<GroebnerBasis, Error>>,
}

/// A quotient ring model; cheap to clone.
#[derive(Clone)]
pub struct RingModel(Arc<Inner>);

impl fmt::Debug for RingModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.0.ideal.iter().map(|g| self.0.poly.render(g)).collect();
        f.debug_struct("RingModel")
            .field("p", &self.characteristic())
            .field("variables", &self.0.poly.names())
            .field("weights", &self.0.poly.weights())
            .field("ideal", &gens)
            .field("flags", &self.0.flags)
            .finish()
    }
}

impl PartialEq for RingModel {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.poly == other.0.poly
                && self.0.ideal == other.0.ideal
                && self.0.flags == other.0.flags)
    }
}

/// Checks that `f` is quasi-homogeneous and has no constant term.
pub fn validate_local_generator(poly: &PolyRing, f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        return Ok(());
    }
    if !f.in_maximal_ideal() {
        return Err(Error::argument(format!(
            "{} is not contained in the maximal ideal (nonzero constant term)",
            poly.render(f)
        )));
    }
    if !f.is_homogeneous() {
        let degs: Vec<String> = f.terms().iter().map(|t| t.0.degree().to_string()).collect();
        return Err(Error::argument(format!(
            "{} is not quasi-homogeneous for weights {:?} (term degrees {})",
            poly.render(f),
            poly.weights(),
            degs.join(", ")
        )));
    }
    Ok(())
}

impl RingModel {
    pub fn new(poly: PolyRing, ideal: Vec<Polynomial>, flags: RingFlags) -> Result<Self> {
        for g in &ideal {
            validate_local_generator(&poly, g)?;
        }
        let ideal = ideal.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(RingModel(Arc::new(Inner {
            poly,
            ideal,
            flags,
            budget: Budget::default(),
            gb: OnceLock::new(),
        })))
    }

    /// Convenience constructor from strings.
    pub fn parse(
        p: u64,
        vars: &[&str],
        weights: &[u32],
        ideal: &[&str],
        flags: RingFlags,
    ) -> Result<Self> {
        let names = vars.iter().map(|s| s.to_string()).collect();
        let weights = if weights.is_empty() {
            vec![1; vars.len()]
        } else {
            weights.to_vec()
        };
        let poly = PolyRing::new(PrimeField::new(p)?, names, weights)?;
        let gens = ideal
            .iter()
            .map(|s| parse_polynomial(&poly, s))
            .collect::<Result<Vec<_>>>()?;
        RingModel::new(poly, gens, flags)
    }

    /// Same ring with a different budget token.
    pub fn with_budget(&self, budget: Budget) -> Self {
        RingModel(Arc::new(Inner {
            poly: self.0.poly.clone(),
            ideal: self.0.ideal.clone(),
            flags: self.0.flags,
            budget,
            gb: OnceLock::new(),
        }))
    }

    /// The polynomial ring S itself (zero ideal), sharing the budget.
    pub fn ambient(&self) -> Self {
        RingModel(Arc::new(Inner {
            poly: self.0.poly.clone(),
            ideal: Vec::new(),
            flags: RingFlags {
                is_domain: true,
                generically_gorenstein: true,
                expected_cm: Some(true),
            },
            budget: self.0.budget.clone(),
            gb: OnceLock::new(),
        }))
    }

    /// The quotient by extra generators, same flags except domain-ness.
    pub fn quotient(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut ideal = self.0.ideal.clone();
        ideal.extend(extra.iter().cloned());
        let r = RingModel::new(
            self.0.poly.clone(),
            ideal,
            RingFlags {
                is_domain: false,
                generically_gorenstein: false,
                expected_cm: None,
            },
        )?;
        Ok(r.with_budget(self.0.budget.clone()))
    }

    pub fn poly(&self) -> &PolyRing {
        &self.0.poly
    }

    pub fn characteristic(&self) -> u32 {
        self.0.poly.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.0.poly.nvars()
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.0.ideal
    }

    pub fn flags(&self) -> RingFlags {
        self.0.flags
    }

    pub fn budget(&self) -> &Budget {
        &self.0.budget
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.0.ideal.is_empty()
    }

    /// Reduced Gröbner basis of I, computed once.
    pub fn ideal_gb(&self) -> Result<&GroebnerBasis> {
        self.0
            .gb
            .get_or_init(|| {
                let gens = self
                    .0
                    .ideal
                    .iter()
                    .map(|g| Vector::from_poly(g, 0))
                    .collect();
                GroebnerBasis::compute(&self.0.poly, 1, gens, &self.0.budget)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Normal form of `f` modulo I.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.0.ideal.is_empty() || f.is_zero() {
            return Ok(f.clone());
        }
        let gb = self.ideal_gb()?;
        Ok(gb
            .normal_form(&self.0.poly, &Vector::from_poly(f, 0))
            .to_column(0, 1)
            .pop()
            .unwrap())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.0.poly.var(i)
    }

    pub fn variables(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn parse_element(&self, s: &str) -> Result<Polynomial> {
        let f = parse_polynomial(&self.0.poly, s)?;
        self.reduce(&f)
    }

    pub fn render(&self, f: &Polynomial) -> String {
        self.0.poly.render(f)
    }

    /// Checks that `q` is a power of the characteristic and returns the exponent.
    pub fn frobenius_exponent(&self, q: u64) -> Result<u32> {
        let p = self.characteristic() as u64;
        let mut acc = 1u64;
        let mut n = 0;
        while acc < q {
            acc *= p;
            n += 1;
        }
        if acc == q {
            Ok(n)
        } else {
            Err(Error::argument(format!(
                "{q} is not a power of the characteristic {p}"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_inhomogeneous_generators() {
        let err =
            RingModel::parse(3, &["x", "y"], &[], &["x^2+y"], RingFlags::default()).unwrap_err();
        assert!(err.to_string().contains("quasi-homogeneous"), "{err}");
        let err =
            RingModel::parse(3, &["x", "y"], &[], &["x+1"], RingFlags::default()).unwrap_err();
        assert!(err.to_string().contains("maximal ideal"), "{err}");
        // weighted: y^2 - x^3 with weights (2,3) is fine
        RingModel::parse(5, &["x", "y"], &[2, 3], &["y^2-x^3"], RingFlags::default()).unwrap();
    }

    #[test]
    fn reduces_modulo_the_ideal() {
        let r =
            RingModel::parse(3, &["x", "y", "z"], &[], &["x^2+y*z"], RingFlags::default()).unwrap();
        let f = r.parse_element("x^2").unwrap();
        assert_eq!(r.render(&f), "-y*z");
        let g = r.parse_element("y*(x^2+y*z)").unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn frobenius_exponent() {
        let r = RingModel::parse(3, &["x"], &[], &[], RingFlags::default()).unwrap();
        assert_eq!(r.frobenius_exponent(9).unwrap(), 2);
        assert_eq!(r.frobenius_exponent(1).unwrap(), 0);
        assert!(r.frobenius_exponent(6).is_err());
    }
}
