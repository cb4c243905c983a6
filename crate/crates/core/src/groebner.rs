//! Buchberger's algorithm for submodules of free modules S^r over
//! S = F_p[x_1..x_v], position-over-term with weighted grevlex.
//!
//! Ideals are the rank-one case. Term order on S^r: a term in a lower
//! position is larger; within a position monomials compare by grevlex.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

#[inline]
fn cmp_term(pa: u32, ma: &Monomial, pb: u32, mb: &Monomial) -> Ordering {
    pb.cmp(&pa).then_with(|| ma.cmp(mb))
}

/// An element of S^r as a list of (position, monomial, coefficient) in
/// strictly decreasing term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<(u32, Monomial, u32)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    /// Wraps terms already sorted in decreasing term order with nonzero coefficients.
    pub(crate) fn from_terms_unchecked(terms: Vec<(u32, Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| cmp_term(w[0].0, &w[0].1, w[1].0, &w[1].1) == Ordering::Greater));
        Vector { terms }
    }

    pub fn from_poly(f: &Polynomial, pos: u32) -> Self {
        Vector {
            terms: f
                .terms()
                .iter()
                .map(|(m, c)| (pos, m.clone(), *c))
                .collect(),
        }
    }

    /// Packs a column of polynomials, entry i landing in position `offset + i`.
    pub fn from_column(col: &[Polynomial], offset: u32) -> Self {
        let mut terms = Vec::new();
        for (i, f) in col.iter().enumerate() {
            terms.extend(
                f.terms()
                    .iter()
                    .map(|(m, c)| (offset + i as u32, m.clone(), *c)),
            );
        }
        Vector { terms }
    }

    /// Unpacks positions `offset..offset + len` into a column.
    pub fn to_column(&self, offset: u32, len: usize) -> Vec<Polynomial> {
        let mut col: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); len];
        for (p, m, c) in &self.terms {
            if *p >= offset && ((*p - offset) as usize) < len {
                col[(*p - offset) as usize].push((m.clone(), *c));
            }
        }
        col.into_iter().map(Polynomial::from_sorted).collect()
    }

    pub fn terms(&self) -> &[(u32, Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(u32, &Monomial, u32)> {
        self.terms.first().map(|(p, m, c)| (*p, m, *c))
    }

    pub fn leading_position(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.1.total_degree())
            .max()
            .unwrap_or(0)
    }

    fn scale(&self, ring: &PolyRing, c: u32) -> Vector {
        let f = ring.field();
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(p, m, x)| (*p, m.clone(), f.mul(*x, c)))
                .collect(),
        }
    }

    fn monic(&self, ring: &PolyRing) -> Vector {
        match self.terms.first() {
            None => Vector::zero(),
            Some((_, _, 1)) => self.clone(),
            Some((_, _, c)) => self.scale(ring, ring.field().inv(*c)),
        }
    }
}

/// `a[from..] + c * m * b`, with `a[..from]` copied unchanged.
fn merge_scaled(
    ring: &PolyRing,
    a: &[(u32, Monomial, u32)],
    from: usize,
    b: &[(u32, Monomial, u32)],
    c: u32,
    m: &Monomial,
) -> Vec<(u32, Monomial, u32)> {
    let f = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(&a[..from]);
    let mut i = from;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let (bp, bm, bc) = &b[j];
        let bm = bm.mul(m);
        match cmp_term(a[i].0, &a[i].1, *bp, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((*bp, bm, f.mul(*bc, c)));
                j += 1;
            }
            Ordering::Equal => {
                let s = f.add(a[i].2, f.mul(*bc, c));
                if s != 0 {
                    out.push((*bp, bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (bp, bm, bc) in &b[j..] {
        out.push((*bp, bm.mul(m), f.mul(*bc, c)));
    }
    out
}

/// Lookup of monic reducers by leading position.
struct Reducers<'a> {
    by_pos: Vec<Vec<&'a Vector>>,
}

impl<'a> Reducers<'a> {
    fn new(rank: usize, elems: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut by_pos = vec![Vec::new(); rank];
        for e in elems {
            if let Some(p) = e.leading_position() {
                by_pos[p as usize].push(e);
            }
        }
        Reducers { by_pos }
    }

    fn find(&self, pos: u32, mono: &Monomial) -> Option<&'a Vector> {
        self.by_pos
            .get(pos as usize)?
            .iter()
            .find(|g| g.terms[0].1.divides(mono))
            .copied()
    }
}

fn reduce_with(ring: &PolyRing, f: &Vector, reducers: &Reducers<'_>, full: bool) -> Vector {
    let field = ring.field();
    let mut terms = f.terms.clone();
    let mut i = 0;
    while i < terms.len() {
        let (pos, mono, coef) = (terms[i].0, terms[i].1.clone(), terms[i].2);
        match reducers.find(pos, &mono) {
            Some(g) => {
                let q = g.terms[0].1.quotient_of(&mono);
                // g is monic; cancel the term at i and merge the tail
                let tail = &g.terms[1..];
                let mut next = merge_scaled(ring, &terms, i + 1, tail, field.neg(coef), &q);
                next.remove(i);
                terms = next;
            }
            None => {
                if !full {
                    break;
                }
                i += 1;
            }
        }
    }
    Vector { terms }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Pair {
    pos: u32,
    lcm: Monomial,
    i: usize,
    j: usize,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_term(self.pos, &self.lcm, other.pos, &other.lcm)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Engine<'a> {
    ring: &'a PolyRing,
    rank: usize,
    budget: &'a Budget,
    polys: Vec<Vector>,
    active: Vec<bool>,
    pairs: BTreeSet<Pair>,
    ideal_case: bool,
    spairs: u64,
}

impl<'a> Engine<'a> {
    fn lt(&self, i: usize) -> (u32, &Monomial) {
        let t = &self.polys[i].terms[0];
        (t.0, &t.1)
    }

    fn reduce(&self, f: &Vector) -> Vector {
        let reducers = Reducers::new(
            self.rank,
            self.polys
                .iter()
                .zip(&self.active)
                .filter(|(_, a)| **a)
                .map(|(p, _)| p),
        );
        reduce_with(self.ring, f, &reducers, true)
    }

    fn insert(&mut self, h: Vector) -> Result<()> {
        let limits = self.budget.limits();
        if h.terms[0].1.total_degree() > limits.max_degree as u64 {
            return Err(Error::Budget {
                budget: "max_degree",
                limit: limits.max_degree as u64,
            });
        }
        if self.polys.len() >= limits.max_basis {
            return Err(Error::Budget {
                budget: "max_basis",
                limit: limits.max_basis as u64,
            });
        }
        let weights = self.ring.weights();
        let hidx = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        let (hpos, hlt) = {
            let t = &self.polys[hidx].terms[0];
            (t.0, t.1.clone())
        };

        // Gebauer–Möller update.
        let cands: Vec<(usize, Monomial, bool)> = (0..hidx)
            .filter(|&g| self.active[g] && self.lt(g).0 == hpos)
            .map(|g| {
                let glt = self.lt(g).1;
                (
                    g,
                    hlt.lcm(glt, weights),
                    self.ideal_case && hlt.is_coprime(glt),
                )
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, l, coprime)) in cands.iter().enumerate() {
            let dominated = cands[k + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if *coprime || !dominated {
                kept.push((*g, l.clone(), *coprime));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if p.pos != hpos || !hlt.divides(&p.lcm) {
                return true;
            }
            let li = hlt.lcm(&polys[p.i].terms[0].1, weights);
            let lj = hlt.lcm(&polys[p.j].terms[0].1, weights);
            li == p.lcm || lj == p.lcm
        });
        for (g, l, coprime) in kept {
            if !coprime {
                self.pairs.insert(Pair {
                    pos: hpos,
                    lcm: l,
                    i: g,
                    j: hidx,
                });
            }
        }
        for g in 0..hidx {
            if self.active[g] {
                let (gp, glt) = self.lt(g);
                if gp == hpos && hlt.divides(glt) {
                    self.active[g] = false;
                }
            }
        }
        self.active[hidx] = true;
        Ok(())
    }

    fn spoly(&self, pair: &Pair) -> Vector {
        let f = &self.polys[pair.i];
        let g = &self.polys[pair.j];
        let mf = f.terms[0].1.quotient_of(&pair.lcm);
        let mg = g.terms[0].1.quotient_of(&pair.lcm);
        let a = merge_scaled(self.ring, &[], 0, &f.terms[1..], 1, &mf);
        let terms = merge_scaled(
            self.ring,
            &a,
            0,
            &g.terms[1..],
            self.ring.field().neg(1),
            &mg,
        );
        Vector { terms }
    }

    fn run(mut self, gens: Vec<Vector>) -> Result<Vec<Vector>> {
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let r = self.reduce(&g);
            if !r.is_zero() {
                let r = r.monic(self.ring);
                self.insert(r)?;
            }
        }
        let limits = *self.budget.limits();
        while let Some(pair) = self.pairs.pop_first() {
            self.spairs += 1;
            if self.spairs > limits.max_spairs {
                self.budget.record_run(self.spairs);
                return Err(Error::Budget {
                    budget: "max_spairs",
                    limit: limits.max_spairs,
                });
            }
            self.budget.check_cancelled()?;
            let s = self.spoly(&pair);
            let r = self.reduce(&s);
            if !r.is_zero() {
                let r = r.monic(self.ring);
                self.insert(r)?;
            }
        }
        self.budget.record_run(self.spairs);

        let minimal: Vec<&Vector> = self
            .polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
            .collect();
        let reducers = Reducers::new(self.rank, minimal.iter().copied());
        let mut out: Vec<Vector> = minimal
            .iter()
            .map(|g| {
                let tail = Vector {
                    terms: g.terms[1..].to_vec(),
                };
                let mut red = reduce_with(self.ring, &tail, &reducers, true);
                red.terms.insert(0, g.terms[0].clone());
                red
            })
            .collect();
        out.sort_by(|a, b| {
            let (pa, ma, _) = a.leading().unwrap();
            let (pb, mb, _) = b.leading().unwrap();
            cmp_term(pa, ma, pb, mb)
        });
        Ok(out)
    }
}

/// Reduced Gröbner basis of a submodule of S^rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    rank: usize,
    elements: Vec<Vector>,
}

impl GroebnerBasis {
    /// Computes the unique reduced basis of the submodule generated by `gens`.
    pub fn compute(
        ring: &PolyRing,
        rank: usize,
        gens: Vec<Vector>,
        budget: &Budget,
    ) -> Result<Self> {
        for g in &gens {
            if let Some(t) = g.terms.iter().find(|t| t.0 as usize >= rank) {
                return Err(Error::argument(format!(
                    "generator has a component in position {} of a rank {rank} module",
                    t.0
                )));
            }
            if let Some(t) = g.terms.iter().find(|t| t.1.nvars() != ring.nvars()) {
                return Err(Error::RingMismatch(format!(
                    "monomial with {} variables in a ring with {}",
                    t.1.nvars(),
                    ring.nvars()
                )));
            }
        }
        let engine = Engine {
            ring,
            rank,
            budget,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: BTreeSet::new(),
            ideal_case: rank == 1,
            spairs: 0,
        };
        let elements = engine.run(gens)?;
        Ok(GroebnerBasis { rank, elements })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Unique remainder of `f` modulo the submodule.
    pub fn normal_form(&self, ring: &PolyRing, f: &Vector) -> Vector {
        let reducers = Reducers::new(self.rank, self.elements.iter());
        reduce_with(ring, f, &reducers, true)
    }

    pub fn contains(&self, ring: &PolyRing, f: &Vector) -> bool {
        self.normal_form(ring, f).is_zero()
    }

    /// Leading monomials of the basis elements sitting in `pos`.
    pub fn leading_monomials(&self, pos: u32) -> Vec<&Monomial> {
        self.elements
            .iter()
            .filter_map(|e| e.leading())
            .filter(|(p, _, _)| *p == pos)
            .map(|(_, m, _)| m)
            .collect()
    }

    /// Basis elements as polynomials (rank one).
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements
            .iter()
            .map(|e| e.to_column(0, 1).pop().unwrap())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::parse::parse_polynomial;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(
            PrimeField::new(p).unwrap(),
            vars.iter().map(|s| s.to_string()).collect(),
            vec![1; vars.len()],
        )
        .unwrap()
    }

    fn ideal_gb(r: &PolyRing, gens: &[&str]) -> GroebnerBasis {
        let v = gens
            .iter()
            .map(|s| Vector::from_poly(&parse_polynomial(r, s).unwrap(), 0))
            .collect();
        GroebnerBasis::compute(r, 1, v, &Budget::default()).unwrap()
    }

    fn render(r: &PolyRing, gb: &GroebnerBasis) -> Vec<String> {
        gb.polynomials().iter().map(|f| r.render(f)).collect()
    }

    #[test]
    fn monomial_pair_is_a_basis() {
        let r = ring(2, &["x", "y"]);
        let gb = ideal_gb(&r, &["x^2", "x*y"]);
        assert_eq!(render(&r, &gb), vec!["x*y", "x^2"]);
    }

    #[test]
    fn twisted_cubic_style_basis() {
        let r = ring(5, &["x", "y", "z"]);
        let gb = ideal_gb(&r, &["x*z-y^2", "x^3-y*z", "x^2*y-z^2"]);
        // every original generator is a member
        for g in ["x*z-y^2", "x^3-y*z", "x^2*y-z^2"] {
            let f = Vector::from_poly(&parse_polynomial(&r, g).unwrap(), 0);
            assert!(gb.contains(&r, &f));
        }
        let f = Vector::from_poly(&parse_polynomial(&r, "y").unwrap(), 0);
        assert!(!gb.contains(&r, &f));
    }

    #[test]
    fn budget_aborts() {
        let r = ring(5, &["x", "y", "z"]);
        let v = ["x*z-y^2", "x^3-y*z", "x^2*y-z^2"]
            .iter()
            .map(|s| Vector::from_poly(&parse_polynomial(&r, s).unwrap(), 0))
            .collect();
        let budget = Budget::new(crate::budget::Limits {
            max_spairs: 1,
            ..Default::default()
        });
        let err = GroebnerBasis::compute(&r, 1, v, &budget).unwrap_err();
        assert!(matches!(
            err,
            Error::Budget {
                budget: "max_spairs",
                ..
            }
        ));
    }

    #[test]
    fn cancellation_is_observed() {
        let r = ring(5, &["x", "y", "z"]);
        let v = ["x*z-y^2", "x^3-y*z", "x^2*y-z^2"]
            .iter()
            .map(|s| Vector::from_poly(&parse_polynomial(&r, s).unwrap(), 0))
            .collect();
        let budget = Budget::default();
        budget.cancel();
        assert_eq!(
            GroebnerBasis::compute(&r, 1, v, &budget).unwrap_err(),
            Error::Cancelled
        );
    }

    #[test]
    fn module_positions_do_not_interact() {
        let r = ring(2, &["x", "y"]);
        let x = parse_polynomial(&r, "x").unwrap();
        let y = parse_polynomial(&r, "y").unwrap();
        let gens = vec![
            Vector::from_column(&[x.clone(), r.zero()], 0),
            Vector::from_column(&[r.zero(), y.clone()], 0),
        ];
        let gb = GroebnerBasis::compute(&r, 2, gens.clone(), &Budget::default()).unwrap();
        assert_eq!(gb.len(), 2);
        for g in &gens {
            assert!(gb.elements().contains(g));
        }
    }
}
