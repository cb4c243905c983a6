//! Dimension, depth, regular sequences and systems of parameters, Euler
//! characteristics, rank, the canonical module and Cohen-Macaulay type.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{self, Length};
use crate::matrix::Matrix;
use crate::module::{self, PresentedModule};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::RingModel;

/// Krull dimension of R.
pub fn ring_dimension(ring: &RingModel) -> Result<i64> {
    Ok(ideal::krull_dimension(ring.poly(), ring.ideal_gb()?))
}

/// depth R, as the depth of R over itself.
pub fn ring_depth(ring: &RingModel) -> Result<i64> {
    depth_of_module(&PresentedModule::free(ring, 1))
}

pub fn is_cohen_macaulay(ring: &RingModel) -> Result<bool> {
    Ok(ring_depth(ring)? == ring_dimension(ring)?)
}

/// Determinant by dynamic programming over column subsets, O(2^k k) products.
pub(crate) fn determinant(poly: &PolyRing, rows: &[Vec<&Polynomial>]) -> Polynomial {
    let k = rows.len();
    if k == 0 {
        return poly.one();
    }
    // dp[mask]: signed sum over bijections of the first |mask| rows onto mask
    let mut dp = vec![Polynomial::default(); 1 << k];
    dp[0] = poly.one();
    for mask in 0usize..(1 << k) {
        if dp[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == k {
            continue;
        }
        for (col, &entry) in rows[row].iter().enumerate() {
            if mask & (1 << col) != 0 || entry.is_zero() {
                continue;
            }
            // sign of inserting col after the already used columns above it
            let above = (mask >> col).count_ones();
            let term = poly.mul(&dp[mask], entry);
            let next = mask | (1 << col);
            dp[next] = if above % 2 == 0 {
                poly.add(&dp[next], &term)
            } else {
                poly.sub(&dp[next], &term)
            };
        }
    }
    dp[(1 << k) - 1].clone()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k as u64).fold(1u64, |acc, i| acc.saturating_mul(n as u64 - i) / (i + 1))
}

/// Calls `visit` on every s×s minor reduced modulo I until it returns true.
fn scan_minors(
    ring: &RingModel,
    a: &Matrix,
    s: usize,
    mut visit: impl FnMut(Polynomial) -> bool,
) -> Result<()> {
    let limit = ring.budget().limits().max_minors;
    let count = binomial(a.nrows(), s).saturating_mul(binomial(a.ncols(), s));
    if count > limit {
        return Err(Error::Budget {
            budget: "max_minors",
            limit,
        });
    }
    let poly = ring.poly();
    for rs in subsets(a.nrows(), s) {
        for cs in subsets(a.ncols(), s) {
            ring.budget().check_cancelled()?;
            let rows: Vec<Vec<&Polynomial>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a.entry(i, j)).collect())
                .collect();
            let det = ring.reduce(&determinant(poly, &rows))?;
            if visit(det) {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Fitt₀: the r×r minors of a presentation with r generators.
pub fn fitting_ideal(m: &PresentedModule) -> Result<Vec<Polynomial>> {
    let min = m.minimalized()?;
    let a = min.relations();
    let mut out = Vec::new();
    if a.nrows() == 0 {
        return Ok(vec![m.ring().poly().one()]);
    }
    scan_minors(m.ring(), a, a.nrows(), |d| {
        if !d.is_zero() && !out.contains(&d) {
            out.push(d);
        }
        false
    })?;
    Ok(out)
}

/// Krull dimension of Supp M = V(I + Fitt₀), or -1 for M = 0.
///
/// Falls back to the leading-term module when the minor count exceeds the
/// budget; both give dim S/ann M.
pub fn dimension_of_module(m: &PresentedModule) -> Result<i64> {
    match fitting_ideal(m) {
        Ok(minors) => Ok(ideal::krull_dimension(
            m.ring().poly(),
            &ideal::ideal_plus(m.ring(), &minors)?,
        )),
        Err(Error::Budget {
            budget: "max_minors",
            ..
        }) => m.hilbert_dimension(),
        Err(e) => Err(e),
    }
}

/// v − max{i : H_i(K(x_1..x_v) ⊗ M) ≠ 0}.
pub fn depth_of_module(m: &PresentedModule) -> Result<i64> {
    if m.is_zero()? {
        return Err(Error::argument("depth of the zero module is undefined"));
    }
    let ring = m.ring();
    let v = ring.nvars();
    let k = module::koszul_on_module(&ring.variables(), m)?;
    for i in (0..=v).rev() {
        if !k.homology_is_zero(i)? {
            return Ok((v - i) as i64);
        }
    }
    Err(Error::Internal(
        "Koszul H_0 of a nonzero module vanished".into(),
    ))
}

/// x is M-regular: every x_i lies in m, M/xM ≠ 0 and H_i(K(x) ⊗ M) = 0 for i > 0.
pub fn is_regular_sequence(xs: &[Polynomial], m: &PresentedModule) -> Result<bool> {
    let ring = m.ring();
    for x in xs {
        if !ring.reduce(x)?.in_maximal_ideal() {
            return Ok(false);
        }
    }
    if m.quotient_by(xs)?.is_zero()? {
        return Ok(false);
    }
    let k = module::koszul_on_module(xs, m)?;
    for i in 1..=xs.len() {
        if !k.homology_is_zero(i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// #x = dim R, every x_i in m, and dim R/(x) = 0.
pub fn is_sop(ring: &RingModel, xs: &[Polynomial]) -> Result<bool> {
    if xs.len() as i64 != ring_dimension(ring)? {
        return Ok(false);
    }
    for x in xs {
        if !ring.reduce(x)?.in_maximal_ideal() {
            return Ok(false);
        }
    }
    Ok(ideal::krull_dimension(ring.poly(), &ideal::ideal_plus(ring, xs)?) == 0)
}

/// x is an s.o.p. for M: #x = dim M and ℓ(M/xM) < ∞.
pub fn is_sop_for_module(xs: &[Polynomial], m: &PresentedModule) -> Result<bool> {
    if xs.len() as i64 != dimension_of_module(m)? {
        return Ok(false);
    }
    Ok(m.quotient_by(xs)?.length()?.is_finite())
}

/// A sequence of ring elements with its verified properties.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SopSequence {
    #[serde(skip)]
    pub elements: Vec<Polynomial>,
    pub rendered: Vec<String>,
    pub c: usize,
    pub is_regular_on_r: bool,
    pub is_sop_for_r: bool,
}

impl SopSequence {
    pub fn certify(ring: &RingModel, xs: &[Polynomial]) -> Result<Self> {
        let elements = xs
            .iter()
            .map(|x| ring.reduce(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(SopSequence {
            rendered: elements.iter().map(|x| ring.render(x)).collect(),
            c: elements.len(),
            is_regular_on_r: is_regular_sequence(&elements, &PresentedModule::free(ring, 1))?,
            is_sop_for_r: is_sop(ring, &elements)?,
            elements,
        })
    }

    pub fn is_sop_for(&self, m: &PresentedModule) -> Result<bool> {
        is_sop_for_module(&self.elements, m)
    }

    /// x^[q], the sequence of q-th powers.
    pub fn bracket_power(&self, ring: &RingModel, q: u64) -> Result<Vec<Polynomial>> {
        ideal::bracket_power(ring, &self.elements, q)
    }
}

/// χ_i(M, R/x) together with ℓ(H_j(K(x) ⊗ M)) for j = 0..c.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerCharacteristic {
    pub i: usize,
    pub value: i64,
    pub lengths: Vec<u64>,
}

/// Koszul homology lengths ℓ(H_j(K(x) ⊗ M)), j = 0..#x.
pub fn koszul_lengths(m: &PresentedModule, xs: &[Polynomial]) -> Result<Vec<u64>> {
    let k = module::koszul_on_module(xs, m)?;
    (0..=xs.len())
        .map(|j| match k.homology_at(j)?.length()? {
            Length::Finite(n) => Ok(n),
            Length::Infinite => Err(Error::Internal(format!(
                "Koszul homology H_{j} has infinite length"
            ))),
        })
        .collect()
}

/// Σ_{j≥i} (−1)^{j−i} ℓ(H_j(K(x) ⊗ M)); x must be R-regular with ℓ(M/xM) finite.
pub fn euler_characteristic(
    m: &PresentedModule,
    x: &SopSequence,
    i: usize,
) -> Result<EulerCharacteristic> {
    if !x.is_regular_on_r {
        return Err(Error::precondition("the sequence is not R-regular"));
    }
    if !m.quotient_by(&x.elements)?.length()?.is_finite() {
        return Err(Error::precondition("M/xM does not have finite length"));
    }
    let lengths = koszul_lengths(m, &x.elements)?;
    let value = lengths
        .iter()
        .enumerate()
        .skip(i)
        .map(|(j, &l)| {
            if (j - i).is_multiple_of(2) {
                l as i64
            } else {
                -(l as i64)
            }
        })
        .sum();
    Ok(EulerCharacteristic { i, value, lengths })
}

/// r − (largest s with a nonzero s×s minor) over a domain; `None` when the
/// ring is not flagged as a domain.
pub fn rank_of_module(m: &PresentedModule) -> Result<Option<usize>> {
    let ring = m.ring();
    if !ring.flags().is_domain {
        return Ok(None);
    }
    let min = m.minimalized()?;
    let a = min.relations();
    let mut s = 0;
    while s < a.nrows().min(a.ncols()) {
        let mut found = false;
        scan_minors(ring, a, s + 1, |d| {
            found = !d.is_zero();
            found
        })?;
        if !found {
            break;
        }
        s += 1;
    }
    Ok(Some(a.nrows() - s))
}

/// ω = Ext^c_S(R, S), c = v − dim R, presented over R and minimalized.
pub fn canonical_module(ring: &RingModel) -> Result<PresentedModule> {
    if !is_cohen_macaulay(ring)? {
        return Err(Error::precondition("the ring is not Cohen-Macaulay"));
    }
    let c = ring.nvars() - ring_dimension(ring)? as usize;
    let s = ring.ambient();
    let r_over_s = PresentedModule::cyclic(&s, ring.ideal())?;
    let e = module::ext(&r_over_s, &PresentedModule::free(&s, 1), c)?;
    PresentedModule::new(ring, e.module.relations().clone())?.minimalized()
}

/// Cohen-Macaulay type ℓ(Ext^d_R(k, R)) and μ(ω).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CmType {
    pub cm_type: u64,
    pub mu_omega: usize,
    pub gorenstein: bool,
}

pub fn cm_type_and_gorenstein(ring: &RingModel) -> Result<CmType> {
    if !is_cohen_macaulay(ring)? {
        return Err(Error::precondition("the ring is not Cohen-Macaulay"));
    }
    let d = ring_dimension(ring)? as usize;
    let e = module::ext(
        &PresentedModule::residue_field(ring),
        &PresentedModule::free(ring, 1),
        d,
    )?;
    let cm_type = e
        .length()?
        .finite()
        .ok_or_else(|| Error::Internal("Ext^d(k, R) has infinite length".into()))?;
    let mu_omega = canonical_module(ring)?.min_generators()?;
    if cm_type != mu_omega as u64 {
        return Err(Error::Internal(format!(
            "type {cm_type} differs from μ(ω) = {mu_omega}"
        )));
    }
    Ok(CmType {
        cm_type,
        mu_omega,
        gorenstein: cm_type == 1,
    })
}

/// depth M = dim R; false for the zero module.
pub fn is_mcm(m: &PresentedModule) -> Result<bool> {
    if m.is_zero()? {
        return Ok(false);
    }
    Ok(depth_of_module(m)? == ring_dimension(m.ring())?)
}

/// The numerical invariants of one module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub dim: i64,
    /// `None` for the zero module.
    pub depth: Option<i64>,
    pub codim: i64,
    pub is_mcm: bool,
    pub rank: Option<usize>,
    pub mu: usize,
}

impl InvariantBundle {
    pub fn compute(m: &PresentedModule) -> Result<Self> {
        let dim = dimension_of_module(m)?;
        let depth = if m.is_zero()? {
            None
        } else {
            Some(depth_of_module(m)?)
        };
        let dim_r = ring_dimension(m.ring())?;
        Ok(InvariantBundle {
            dim,
            depth,
            codim: dim_r - dim,
            is_mcm: depth == Some(dim_r),
            rank: rank_of_module(m)?,
            mu: m.min_generators()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingFlags;

    fn ring(p: u64, vars: &[&str], w: &[u32], ideal: &[&str], domain: bool) -> RingModel {
        let flags = RingFlags {
            is_domain: domain,
            ..Default::default()
        };
        RingModel::parse(p, vars, w, ideal, flags).unwrap()
    }

    fn els(r: &RingModel, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|e| r.parse_element(e).unwrap()).collect()
    }

    fn hypersurface() -> RingModel {
        ring(3, &["x", "y", "z"], &[], &["x^2+y*z"], true)
    }

    fn mf(b: &RingModel) -> PresentedModule {
        let rows = vec![els(b, &["x", "y"]), els(b, &["z", "-x"])];
        PresentedModule::new(b, Matrix::from_rows(rows).unwrap()).unwrap()
    }

    fn t345() -> RingModel {
        ring(
            5,
            &["x", "y", "z"],
            &[3, 4, 5],
            &["x*z-y^2", "x^3-y*z", "x^2*y-z^2"],
            true,
        )
    }

    #[test]
    fn determinant_small() {
        let a = ring(2, &["x", "y"], &[], &[], true);
        let p = a.poly();
        let m = [els(&a, &["x", "y"]), els(&a, &["1", "x"])];
        let rows: Vec<Vec<&Polynomial>> = m.iter().map(|r| r.iter().collect()).collect();
        assert_eq!(determinant(p, &rows), a.parse_element("x^2+y").unwrap());
        let b = ring(3, &["x", "y", "z"], &[], &[], true);
        let m = [
            els(&b, &["1", "2", "0"]),
            els(&b, &["0", "1", "1"]),
            els(&b, &["1", "0", "1"]),
        ];
        let rows: Vec<Vec<&Polynomial>> = m.iter().map(|r| r.iter().collect()).collect();
        // 1·(1) − 2·(0−1) + 0 = 3 = 0 in F_3
        assert!(determinant(b.poly(), &rows).is_zero());
    }

    #[test]
    fn dimensions() {
        let b = hypersurface();
        assert_eq!(
            dimension_of_module(&PresentedModule::free(&b, 1)).unwrap(),
            2
        );
        assert_eq!(
            dimension_of_module(&PresentedModule::residue_field(&b)).unwrap(),
            0
        );
        let m = PresentedModule::cyclic(&b, &els(&b, &["x"])).unwrap();
        assert_eq!(dimension_of_module(&m).unwrap(), 1);
        assert_eq!(m.hilbert_dimension().unwrap(), 1);
        assert_eq!(dimension_of_module(&mf(&b)).unwrap(), 2);
        assert_eq!(
            dimension_of_module(&PresentedModule::free(&b, 0)).unwrap(),
            -1
        );
        assert_eq!(ring_dimension(&t345()).unwrap(), 1);
    }

    #[test]
    fn depths() {
        let a = ring(2, &["x", "y"], &[], &[], true);
        assert_eq!(depth_of_module(&PresentedModule::free(&a, 1)).unwrap(), 2);
        let r = ring(2, &["x", "y"], &[], &["x^2", "x*y"], false);
        assert_eq!(ring_depth(&r).unwrap(), 0);
        let b = hypersurface();
        assert_eq!(depth_of_module(&mf(&b)).unwrap(), 2);
        assert!(is_mcm(&mf(&b)).unwrap());
        assert!(!is_mcm(&PresentedModule::residue_field(&b)).unwrap());
        assert!(!is_mcm(&PresentedModule::free(&b, 0)).unwrap());
        assert!(depth_of_module(&PresentedModule::free(&b, 0)).is_err());
        assert!(is_cohen_macaulay(&t345()).unwrap());
    }

    #[test]
    fn regular_sequences_and_sops() {
        let b = hypersurface();
        let r = PresentedModule::free(&b, 1);
        assert!(is_regular_sequence(&els(&b, &["y", "z"]), &r).unwrap());
        assert!(is_sop(&b, &els(&b, &["y", "z"])).unwrap());
        assert!(!is_regular_sequence(&els(&b, &["x", "x"]), &r).unwrap());
        assert!(!is_sop(&b, &els(&b, &["y"])).unwrap());
        let n = ring(2, &["x", "y"], &[], &["x^2", "x*y"], false);
        assert!(!is_regular_sequence(&els(&n, &["x"]), &PresentedModule::free(&n, 1)).unwrap());
        let x = SopSequence::certify(&b, &els(&b, &["y", "z"])).unwrap();
        assert!(x.is_regular_on_r && x.is_sop_for_r && x.is_sop_for(&mf(&b)).unwrap());
    }

    #[test]
    fn euler_characteristics() {
        let b = hypersurface();
        let x = SopSequence::certify(&b, &els(&b, &["y", "z"])).unwrap();
        let chi = euler_characteristic(&PresentedModule::free(&b, 1), &x, 0).unwrap();
        assert_eq!((chi.value, chi.lengths.clone()), (2, vec![2, 0, 0]));
        assert_eq!(euler_characteristic(&mf(&b), &x, 1).unwrap().value, 0);

        let s = ring(3, &["x", "y"], &[], &[], true);
        let xs = SopSequence::certify(&s, &els(&s, &["x", "y"])).unwrap();
        let m = PresentedModule::cyclic(&s, &els(&s, &["x"])).unwrap();
        let chi = euler_characteristic(&m, &xs, 0).unwrap();
        assert_eq!((chi.value, chi.lengths), (0, vec![1, 1, 0]));
    }

    #[test]
    fn ranks() {
        let b = hypersurface();
        assert_eq!(
            rank_of_module(&PresentedModule::free(&b, 3)).unwrap(),
            Some(3)
        );
        assert_eq!(rank_of_module(&mf(&b)).unwrap(), Some(1));
        assert_eq!(
            rank_of_module(&PresentedModule::residue_field(&b)).unwrap(),
            Some(0)
        );
        let e = ring(2, &["x", "y"], &[], &["x*y"], false);
        assert_eq!(rank_of_module(&PresentedModule::free(&e, 1)).unwrap(), None);
    }

    #[test]
    fn canonical_modules_and_type() {
        let b = hypersurface();
        let w = canonical_module(&b).unwrap();
        assert_eq!(w.min_generators().unwrap(), 1);
        assert!(w.is_free().unwrap());
        let c = t345();
        assert_eq!(canonical_module(&c).unwrap().min_generators().unwrap(), 2);
        let art = ring(2, &["x"], &[], &["x^2"], false);
        assert!(canonical_module(&art).unwrap().is_free().unwrap());

        let a = ring(2, &["x", "y"], &[], &[], true);
        assert_eq!(cm_type_and_gorenstein(&a).unwrap().cm_type, 1);
        let d = ring(5, &["x", "y"], &[2, 3], &["y^2-x^3"], true);
        assert!(cm_type_and_gorenstein(&d).unwrap().gorenstein);
        let t = cm_type_and_gorenstein(&c).unwrap();
        assert_eq!((t.cm_type, t.gorenstein), (2, false));
        let bad = ring(2, &["x", "y"], &[], &["x^2", "x*y"], false);
        assert!(matches!(
            canonical_module(&bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bundle() {
        let b = hypersurface();
        let inv = InvariantBundle::compute(&mf(&b)).unwrap();
        assert_eq!(
            inv,
            InvariantBundle {
                dim: 2,
                depth: Some(2),
                codim: 0,
                is_mcm: true,
                rank: Some(1),
                mu: 2
            }
        );
    }
}
