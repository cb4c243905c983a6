//! Sparse polynomials over F_p in weighted grevlex order.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;

/// The polynomial ring F_p[x_1..x_v] with positive variable weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    names: Arc<[String]>,
    weights: Arc<[u32]>,
}

impl PolyRing {
    pub fn new(field: PrimeField, names: Vec<String>, weights: Vec<u32>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::argument("at least one variable is required"));
        }
        if names.len() != weights.len() {
            return Err(Error::argument(format!(
                "{} variables but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::argument(format!(
                "weight of {} must be positive",
                names[i]
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::argument(format!("duplicate variable {n}")));
            }
        }
        Ok(PolyRing {
            field,
            names: names.into(),
            weights: weights.into(),
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        Monomial::new(exps, &self.weights)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::default()
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        Polynomial::from_sorted(if c == 0 {
            vec![]
        } else {
            vec![(Monomial::one(self.nvars()), c)]
        })
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::from_sorted(vec![(Monomial::variable(i, &self.weights), 1)])
    }

    pub fn term(&self, coef: i64, exps: &[u32]) -> Polynomial {
        let c = self.field.from_i64(coef);
        Polynomial::from_sorted(if c == 0 {
            vec![]
        } else {
            vec![(self.monomial(exps), c)]
        })
    }

    /// Builds a polynomial from arbitrary (exponents, coefficient) pairs.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, i64)>>(&self, terms: I) -> Polynomial {
        let mut v: Vec<(Monomial, u32)> = terms
            .into_iter()
            .map(|(e, c)| (self.monomial(&e), self.field.from_i64(c)))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial::from_sorted(out)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add_scaled(a, b, 1, None)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add_scaled(a, b, self.field.neg(1), None)
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        self.scale(a, self.field.neg(1))
    }

    pub fn scale(&self, a: &Polynomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::default();
        }
        Polynomial::from_sorted(
            a.terms
                .iter()
                .map(|(m, x)| (m.clone(), self.field.mul(*x, c)))
                .collect(),
        )
    }

    /// a + c * m * b.
    pub fn add_scaled(
        &self,
        a: &Polynomial,
        b: &Polynomial,
        c: u32,
        m: Option<&Monomial>,
    ) -> Polynomial {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &(Monomial, u32)| -> (Monomial, u32) {
            let mono = match m {
                Some(m) => t.0.mul(m),
                None => t.0.clone(),
            };
            (mono, f.mul(t.1, c))
        };
        while i < a.terms.len() && j < b.terms.len() {
            let bt = shifted(&b.terms[j]);
            match a.terms[i].0.cmp(&bt.0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    if bt.1 != 0 {
                        out.push(bt);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a.terms[i].1, bt.1);
                    if s != 0 {
                        out.push((bt.0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        for t in &b.terms[j..] {
            let bt = shifted(t);
            if bt.1 != 0 {
                out.push(bt);
            }
        }
        Polynomial::from_sorted(out)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.terms.len() > b.terms.len() {
            return self.mul(b, a);
        }
        let mut acc = Polynomial::default();
        for (m, c) in &a.terms {
            acc = self.add_scaled(&acc, b, *c, Some(m));
        }
        acc
    }

    pub fn pow(&self, a: &Polynomial, mut e: u32) -> Polynomial {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// The q-th power of `a` for q a power of the characteristic: every
    /// exponent is multiplied by q and coefficients are fixed by Fermat.
    pub fn frobenius_power(&self, a: &Polynomial, q: u32) -> Polynomial {
        Polynomial::from_sorted(a.terms.iter().map(|(m, c)| (m.scale(q), *c)).collect())
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self, a: &Polynomial) -> Polynomial {
        match a.leading_coefficient() {
            None | Some(1) => a.clone(),
            Some(c) => self.scale(a, self.field.inv(c)),
        }
    }

    /// Renders in decreasing term order: `coef*x^a*y^b`, coefficient and
    /// exponent omitted when 1, signs from the symmetric residue.
    pub fn render(&self, a: &Polynomial) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in a.terms.iter().enumerate() {
            let signed = self.field.signed(*c);
            let (neg, mag) = if signed < 0 {
                (true, -signed)
            } else {
                (false, signed)
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.is_one() {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    e => factors.push(format!("{}^{}", self.names[i], e)),
                }
            }
            let _ = write!(s, "{}", factors.join("*"));
        }
        s
    }
}

/// A polynomial as a list of (monomial, nonzero coefficient) in strictly
/// decreasing monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub(crate) fn from_sorted(terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Coefficient of the monomial 1.
    pub fn constant_term(&self) -> u32 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    /// True for a nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// True when every term has positive weighted degree.
    pub fn in_maximal_ideal(&self) -> bool {
        self.constant_term() == 0
    }

    /// Weighted degree when all terms share it.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|t| t.0.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.0.total_degree())
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, n: usize) -> PolyRing {
        let names = ["x", "y", "z", "w"][..n]
            .iter()
            .map(|s| s.to_string())
            .collect();
        PolyRing::new(PrimeField::new(p).unwrap(), names, vec![1; n]).unwrap()
    }

    #[test]
    fn render_canonical() {
        let r = ring(3, 3);
        let f = r.from_terms([(vec![0, 1, 1], 1), (vec![2, 0, 0], 1)]);
        assert_eq!(r.render(&f), "x^2+y*z");
        let g = r.neg(&r.from_terms([(vec![0, 1, 1], 1)]));
        assert_eq!(r.render(&g), "-y*z");
        assert_eq!(r.render(&r.constant(2)), "-1");
        assert_eq!(r.render(&r.zero()), "0");
        let h = r.from_terms([(vec![1, 0, 0], 1), (vec![0, 0, 0], 1)]);
        assert_eq!(r.render(&h), "x+1");
    }

    #[test]
    fn freshmans_dream() {
        let r = ring(3, 2);
        let f = r.add(&r.var(0), &r.var(1));
        assert_eq!(r.pow(&f, 3), r.frobenius_power(&f, 3));
        assert_eq!(r.render(&r.frobenius_power(&f, 3)), "x^3+y^3");
        let g = r.from_terms([(vec![2, 0], 1), (vec![1, 1], 2), (vec![0, 2], 1)]);
        assert_eq!(r.pow(&g, 9), r.frobenius_power(&g, 9));
    }

    #[test]
    fn arithmetic_cancels() {
        let r = ring(2, 2);
        let f = r.add(&r.var(0), &r.var(1));
        assert!(r.add(&f, &f).is_zero());
        let sq = r.mul(&f, &f);
        assert_eq!(r.render(&sq), "x^2+y^2");
    }
}
