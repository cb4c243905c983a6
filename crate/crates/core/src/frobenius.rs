//! The Frobenius functor F^n on modules and complexes, the pushforward
//! F_*^n R as a presented R-module, and certified upper bounds for κ(R).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Vector;
use crate::ideal;
use crate::invariants;
use crate::matrix::Matrix;
use crate::module::{self, FreeComplex, HomologyModule, PresentedModule};
use crate::poly::Polynomial;
use crate::ring::RingModel;

/// The n-th iterate of Frobenius, q = p^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrobeniusPower {
    pub n: u32,
    pub q: u32,
}

impl FrobeniusPower {
    pub fn new(ring: &RingModel, n: u32) -> Result<Self> {
        let p = ring.characteristic() as u64;
        let q = p
            .checked_pow(n)
            .filter(|q| *q <= ring.budget().limits().max_degree as u64)
            .ok_or(Error::Budget {
                budget: "max_degree",
                limit: ring.budget().limits().max_degree as u64,
            })?;
        Ok(FrobeniusPower { n, q: q as u32 })
    }
}

/// F^n(M): the minimal presentation of M with every entry raised to q.
pub fn frobenius_module(m: &PresentedModule, n: u32) -> Result<PresentedModule> {
    let fp = FrobeniusPower::new(m.ring(), n)?;
    m.frobenius(fp.q)
}

/// F^n(G): every differential raised entrywise to q.
pub fn frobenius_complex(g: &FreeComplex, n: u32) -> Result<FreeComplex> {
    let fp = FrobeniusPower::new(g.ring(), n)?;
    g.frobenius(fp.q)
}

/// F_*^n R presented on generators e_a, a ∈ [0,q)^v.
#[derive(Debug, Clone, PartialEq)]
pub struct PushforwardModule {
    pub power: FrobeniusPower,
    /// Residue vector of each generator, in generator order.
    pub residues: Vec<Vec<u32>>,
    /// The presentation before unit cancellation.
    pub module: PresentedModule,
}

impl PushforwardModule {
    pub fn generator_count(&self) -> usize {
        self.residues.len()
    }

    pub fn minimalized(&self) -> Result<PresentedModule> {
        self.module.minimalized()
    }
}

fn residue_index(a: &[u32], q: u32) -> usize {
    a.iter()
        .fold(0usize, |acc, &e| acc * q as usize + e as usize)
}

fn all_residues(v: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..v {
        out = out
            .into_iter()
            .flat_map(|pre| {
                (0..q).map(move |e| {
                    let mut a = pre.clone();
                    a.push(e);
                    a
                })
            })
            .collect();
    }
    out
}

/// For every ideal generator g and residue a, the relation
/// Σ_b G_b e_b = 0 where g·x^a = Σ_b G_b^q x^b.
pub fn pushforward_presentation(ring: &RingModel, n: u32) -> Result<PushforwardModule> {
    if n == 0 {
        return Err(Error::argument("pushforward needs n ≥ 1"));
    }
    let power = FrobeniusPower::new(ring, n)?;
    let q = power.q;
    let v = ring.nvars();
    let limit = ring.budget().limits().max_pushforward_gens;
    let count = (q as u64).checked_pow(v as u32).unwrap_or(u64::MAX);
    if count > limit as u64 {
        return Err(Error::Budget {
            budget: "max_pushforward_gens",
            limit: limit as u64,
        });
    }
    let residues = all_residues(v, q);
    let poly = ring.poly();
    let mut cols = Vec::new();
    for g in ring.ideal() {
        for a in &residues {
            let h = poly.mul(g, &poly.term(1, a));
            let mut col = vec![Polynomial::default(); residues.len()];
            for (b, part) in ideal::qth_root_decompose(poly, &h, q) {
                col[residue_index(&b, q)] = ring.reduce(&part)?;
            }
            if col.iter().any(|e| !e.is_zero()) {
                cols.push(col);
            }
        }
    }
    let module = PresentedModule::new(ring, Matrix::new(residues.len(), cols)?)?;
    Ok(PushforwardModule {
        power,
        residues,
        module,
    })
}

/// How Tor_i(M, F_*^n R) is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TorMethod {
    /// H_i(F^n(G)) for a minimal resolution G of M.
    Functor,
    /// Tor_i(M, P) for the pushforward presentation P.
    Pushforward,
}

pub fn tor_frobenius(
    m: &PresentedModule,
    n: u32,
    i: usize,
    method: TorMethod,
) -> Result<HomologyModule> {
    match method {
        TorMethod::Functor => {
            let fp = FrobeniusPower::new(m.ring(), n)?;
            let g = module::minimal_free_resolution(m, i + 1)?;
            if i > g.length() {
                return Ok(HomologyModule {
                    module: PresentedModule::free(m.ring(), 0),
                    is_zero: true,
                });
            }
            g.frobenius(fp.q)?.homology_at(i)
        }
        TorMethod::Pushforward => {
            let p = pushforward_presentation(m.ring(), n)?.minimalized()?;
            module::tor(m, &p, i)
        }
    }
}

/// Vanishing of Tor_i(M, F_*^n R) through the functor route, without
/// building a presentation of the homology.
pub fn tor_frobenius_vanishes(m: &PresentedModule, n: u32, i: usize) -> Result<bool> {
    let fp = FrobeniusPower::new(m.ring(), n)?;
    let g = module::minimal_free_resolution(m, i + 1)?;
    if i > g.length() {
        return Ok(true);
    }
    g.frobenius(fp.q)?
        .with_coefficients(&PresentedModule::free(m.ring(), 1))
        .homology_is_zero(i)
}

/// Certificate that m^[p^t] ⊆ (x) + I.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KappaCertificate {
    pub t: u32,
    pub q: u64,
    /// For each variable, whether its p^(t-1)-th power lies outside (x);
    /// empty when t = 0.
    pub previous_power_outside: Vec<bool>,
}

fn powers_in(ring: &RingModel, gb: &crate::groebner::GroebnerBasis, q: u64) -> Result<Vec<bool>> {
    let poly = ring.poly();
    (0..ring.nvars())
        .map(|i| {
            let mut e = vec![0u32; ring.nvars()];
            e[i] = u32::try_from(q).map_err(|_| Error::argument("power too large"))?;
            Ok(gb.contains(poly, &Vector::from_poly(&poly.term(1, &e), 0)))
        })
        .collect()
}

/// Least t with x_i^(p^t) ∈ (x) + I for every variable; x must be an s.o.p.
pub fn kappa_for_sop(ring: &RingModel, xs: &[Polynomial]) -> Result<KappaCertificate> {
    if !invariants::is_sop(ring, xs)? {
        return Err(Error::precondition(
            "the sequence is not a system of parameters",
        ));
    }
    let gb = ideal::ideal_plus(ring, xs)?;
    let p = ring.characteristic() as u64;
    let max = ring.budget().limits().max_degree as u64;
    let mut q = 1u64;
    let mut t = 0u32;
    loop {
        if powers_in(ring, &gb, q)?.iter().all(|&b| b) {
            let previous_power_outside = if t == 0 {
                Vec::new()
            } else {
                powers_in(ring, &gb, q / p)?.iter().map(|b| !b).collect()
            };
            return Ok(KappaCertificate {
                t,
                q,
                previous_power_outside,
            });
        }
        q *= p;
        t += 1;
        if q > max {
            return Err(Error::Budget {
                budget: "max_degree",
                limit: max,
            });
        }
    }
}

/// Heuristic candidates: every d-subset of the variables that is an s.o.p.,
/// d = dim R, in lexicographic order of indices.
pub fn variable_sop_candidates(ring: &RingModel) -> Result<Vec<Vec<Polynomial>>> {
    let d = invariants::ring_dimension(ring)?.max(0) as usize;
    let v = ring.nvars();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let xs: Vec<Polynomial> = idx.iter().map(|&i| ring.var(i)).collect();
        if invariants::is_sop(ring, &xs)? {
            out.push(xs);
        }
        // next d-subset
        let Some(k) = (0..d).rev().find(|&k| idx[k] < v - d + k) else {
            break;
        };
        idx[k] += 1;
        for j in k + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Minimum of [`kappa_for_sop`] over the candidates: an upper bound for κ(R).
pub fn kappa_upper_bound(ring: &RingModel, candidates: &[Vec<Polynomial>]) -> Result<u32> {
    if candidates.is_empty() {
        return Err(Error::argument("no s.o.p. candidates"));
    }
    let mut best: Option<u32> = None;
    for c in candidates {
        let t = kappa_for_sop(ring, c)?.t;
        best = Some(best.map_or(t, |b| b.min(t)));
    }
    Ok(best.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Length;
    use crate::ring::RingFlags;

    fn ring(p: u64, vars: &[&str], w: &[u32], ideal: &[&str]) -> RingModel {
        RingModel::parse(p, vars, w, ideal, RingFlags::default()).unwrap()
    }

    fn els(r: &RingModel, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|e| r.parse_element(e).unwrap()).collect()
    }

    #[test]
    fn frobenius_of_matrix_factorization() {
        let b = ring(3, &["x", "y", "z"], &[], &["x^2+y*z"]);
        let rows = vec![els(&b, &["x", "y"]), els(&b, &["z", "-x"])];
        let m = PresentedModule::new(&b, Matrix::from_rows(rows).unwrap()).unwrap();
        let f = frobenius_module(&m, 1).unwrap();
        let expect = Matrix::from_rows(vec![els(&b, &["x^3", "y^3"]), els(&b, &["z^3", "-x^3"])])
            .unwrap()
            .reduced(&b)
            .unwrap();
        assert_eq!(f.relations(), &expect);
    }

    #[test]
    fn frobenius_of_residue_field_is_bracket_power_quotient() {
        let a = ring(2, &["x", "y"], &[], &[]);
        let f = frobenius_module(&PresentedModule::residue_field(&a), 1).unwrap();
        assert_eq!(f.length().unwrap(), Length::Finite(4));
        let free = frobenius_module(&PresentedModule::free(&a, 3), 2).unwrap();
        assert!(free.is_free().unwrap());
        assert_eq!(free.ambient_rank(), 3);
    }

    #[test]
    fn frobenius_complex_examples() {
        let a = ring(2, &["x", "y"], &[], &[]);
        let g = module::minimal_free_resolution(&PresentedModule::residue_field(&a), 3).unwrap();
        let fg = frobenius_complex(&g, 1).unwrap();
        assert!(fg.is_complex().unwrap());
        assert!(fg.homology_at(1).unwrap().is_zero);
        assert!(fg.homology_at(2).unwrap().is_zero);

        let e = ring(2, &["x", "y"], &[], &["x*y"]);
        let g = module::minimal_free_resolution(&PresentedModule::residue_field(&e), 3).unwrap();
        let fg = frobenius_complex(&g, 1).unwrap();
        assert!(fg.is_complex().unwrap());
        assert!(!fg.homology_at(1).unwrap().is_zero);
    }

    #[test]
    fn pushforward_of_line_is_free() {
        let r = ring(2, &["x"], &[], &[]);
        let p = pushforward_presentation(&r, 1).unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.module.relations().ncols(), 0);
    }

    #[test]
    fn pushforward_of_node() {
        let e = ring(2, &["x", "y"], &[], &["x*y"]);
        let p = pushforward_presentation(&e, 1).unwrap();
        assert_eq!(p.generator_count(), 4);
        let rel = p.module.relations();
        let idx = |a: &[u32]| p.residues.iter().position(|r| r == a).unwrap();
        let unit = |i: usize| {
            let mut c = vec![Polynomial::default(); 4];
            c[i] = e.poly().one();
            c
        };
        let scaled = |i: usize, f: Polynomial| {
            let mut c = vec![Polynomial::default(); 4];
            c[i] = f;
            c
        };
        assert!(rel.columns().contains(&unit(idx(&[1, 1]))));
        assert!(rel.columns().contains(&scaled(idx(&[0, 1]), e.var(0))));
        assert!(rel.columns().contains(&scaled(idx(&[1, 0]), e.var(1))));
    }

    #[test]
    fn pushforward_budget() {
        let r = ring(5, &["x", "y", "z"], &[], &[]);
        let r = r.with_budget(crate::budget::Budget::new(crate::budget::Limits {
            max_pushforward_gens: 64,
            ..Default::default()
        }));
        assert!(matches!(
            pushforward_presentation(&r, 1),
            Err(Error::Budget {
                budget: "max_pushforward_gens",
                ..
            })
        ));
    }

    #[test]
    fn tor_methods_agree_on_node() {
        let e = ring(2, &["x", "y"], &[], &["x*y"]);
        let k = PresentedModule::residue_field(&e);
        let a = tor_frobenius(&k, 1, 1, TorMethod::Functor).unwrap();
        let b = tor_frobenius(&k, 1, 1, TorMethod::Pushforward).unwrap();
        assert!(!a.is_zero);
        assert_eq!(a.length().unwrap(), b.length().unwrap());
        assert!(!tor_frobenius_vanishes(&k, 1, 1).unwrap());
    }

    #[test]
    fn tor_vanishes_on_free_modules() {
        let b = ring(3, &["x", "y", "z"], &[], &["x^2+y*z"]);
        let f = PresentedModule::free(&b, 2);
        for method in [TorMethod::Functor, TorMethod::Pushforward] {
            assert!(tor_frobenius(&f, 1, 1, method).unwrap().is_zero);
        }
    }

    #[test]
    fn kappa_examples() {
        let a = ring(2, &["x", "y"], &[], &[]);
        assert_eq!(kappa_for_sop(&a, &a.variables()).unwrap().t, 0);
        let b = ring(3, &["x", "y", "z"], &[], &["x^2+y*z"]);
        let c = kappa_for_sop(&b, &els(&b, &["y", "z"])).unwrap();
        assert_eq!(c.t, 1);
        assert_eq!(c.previous_power_outside, vec![true, false, false]);
        let d = ring(2, &["x", "y"], &[2, 3], &["y^2-x^3"]);
        assert_eq!(kappa_for_sop(&d, &els(&d, &["x"])).unwrap().t, 1);
        assert!(kappa_for_sop(&b, &els(&b, &["y"])).is_err());
        assert_eq!(
            variable_sop_candidates(&b).unwrap(),
            vec![els(&b, &["y", "z"])]
        );
        assert_eq!(variable_sop_candidates(&a).unwrap(), vec![a.variables()]);
        let bound = kappa_upper_bound(&b, &[els(&b, &["y", "z"]), els(&b, &["x", "y+z"])]).unwrap();
        assert!(bound <= 1);
    }
}
