use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u32; 4]>;

/// A monomial x^e with its weighted degree cached.
///
/// `Ord` is weighted graded reverse lexicographic order: higher weighted
/// degree first, ties broken by the last differing exponent (smaller wins).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u64,
    exps: Exponents,
}

impl Monomial {
    pub fn new(exps: &[u32], weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let degree = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum();
        Monomial {
            degree,
            exps: exps.iter().copied().collect(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn variable(index: usize, weights: &[u32]) -> Self {
        let mut exps: Exponents = SmallVec::from_elem(0, weights.len());
        exps[index] = 1;
        Monomial {
            degree: weights[index] as u64,
            exps,
        }
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Weighted degree.
    #[inline]
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: other.degree - self.degree,
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(&exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Raises every exponent to `q` times itself.
    pub fn scale(&self, q: u32) -> Monomial {
        Monomial {
            degree: self.degree * q as u64,
            exps: self.exps.iter().map(|e| e * q).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e, &vec![1; e.len()])
    }

    #[test]
    fn grevlex_order() {
        // x > y > z in degree one
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        // degree dominates
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // revlex: x*z < y^2
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[2, 0, 0]) > m(&[0, 1, 1]));
    }

    #[test]
    fn weighted_degree() {
        let w = [3, 4, 5];
        let a = Monomial::new(&[1, 0, 1], &w);
        let b = Monomial::new(&[0, 2, 0], &w);
        assert_eq!(a.degree(), 8);
        assert_eq!(b.degree(), 8);
        assert!(b > a);
        assert!(Monomial::new(&[3, 0, 0], &w) > Monomial::new(&[0, 1, 1], &w));
    }

    #[test]
    fn division() {
        let a = m(&[1, 2]);
        let b = m(&[2, 3]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), m(&[1, 1]));
        assert!(!b.divides(&a));
        assert_eq!(a.lcm(&m(&[3, 0]), &[1, 1]), m(&[3, 2]));
    }
}
