//! Finitely presented modules over R = S/I: module Gröbner bases, syzygies,
//! minimal free resolutions, Koszul complexes, homology, Tor and Ext.
//!
//! Everything over R is computed in S by adjoining `g·e_k` for every
//! generator `g` of I and every basis vector `e_k`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Vector};
use crate::ideal::{self, Length};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::ring::RingModel;

fn lifted_generators(ring: &RingModel, cols: &[Vec<Polynomial>], nrows: usize) -> Vec<Vector> {
    let mut gens: Vec<Vector> = cols.iter().map(|c| Vector::from_column(c, 0)).collect();
    for k in 0..nrows {
        for g in ring.ideal() {
            gens.push(Vector::from_poly(g, k as u32));
        }
    }
    gens
}

/// Reduced Gröbner basis in S^nrows of the preimage of the submodule of
/// R^nrows generated by `cols`.
pub fn module_groebner(
    ring: &RingModel,
    cols: &[Vec<Polynomial>],
    nrows: usize,
) -> Result<GroebnerBasis> {
    if let Some(c) = cols.iter().find(|c| c.len() != nrows) {
        return Err(Error::argument(format!(
            "vector of length {} in rank {nrows}",
            c.len()
        )));
    }
    GroebnerBasis::compute(
        ring.poly(),
        nrows,
        lifted_generators(ring, cols, nrows),
        ring.budget(),
    )
}

/// Generators of the kernel of R^m → R^nrows given by the columns, as
/// columns of length m reduced modulo I.
pub fn kernel(
    ring: &RingModel,
    cols: &[Vec<Polynomial>],
    nrows: usize,
) -> Result<Vec<Vec<Polynomial>>> {
    let m = cols.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let one = ring.poly().one();
    let mut gens: Vec<Vector> = Vec::with_capacity(m + (nrows + m) * ring.ideal().len());
    for (j, c) in cols.iter().enumerate() {
        if c.len() != nrows {
            return Err(Error::argument(format!(
                "vector of length {} in rank {nrows}",
                c.len()
            )));
        }
        let mut v = Vector::from_column(c, 0).terms().to_vec();
        v.extend(
            Vector::from_poly(&one, (nrows + j) as u32)
                .terms()
                .iter()
                .cloned(),
        );
        gens.push(vector_from_terms(v));
    }
    for k in 0..nrows + m {
        for g in ring.ideal() {
            gens.push(Vector::from_poly(g, k as u32));
        }
    }
    let gb = GroebnerBasis::compute(ring.poly(), nrows + m, gens, ring.budget())?;
    let mut out: Vec<Vec<Polynomial>> = Vec::new();
    for e in gb.elements() {
        if e.leading_position().is_some_and(|p| p as usize >= nrows) {
            let col = e
                .to_column(nrows as u32, m)
                .iter()
                .map(|f| ring.reduce(f))
                .collect::<Result<Vec<_>>>()?;
            if col.iter().any(|f| !f.is_zero()) && !out.contains(&col) {
                out.push(col);
            }
        }
    }
    Ok(out)
}

fn vector_from_terms(terms: Vec<(u32, crate::monomial::Monomial, u32)>) -> Vector {
    // column terms followed by a tag in a higher position: already sorted
    Vector::from_terms_unchecked(terms)
}

/// Checks the locality convention for a presentation: every entry is
/// quasi-homogeneous and lies in m, and the matrix is graded, i.e. there are
/// row shifts a_i and column degrees b_j with deg α_ij = b_j − a_i.
#[allow(clippy::needless_range_loop)]
pub fn validate_presentation(ring: &RingModel, relations: &Matrix) -> Result<()> {
    let poly = ring.poly();
    let (r, t) = (relations.nrows(), relations.ncols());
    for j in 0..t {
        for i in 0..r {
            crate::ring::validate_local_generator(poly, relations.entry(i, j))
                .map_err(|e| Error::argument(format!("entry ({i},{j}): {e}")))?;
        }
    }
    // propagate shifts over the bipartite graph of nonzero entries
    let mut row: Vec<Option<i64>> = vec![None; r];
    let mut col: Vec<Option<i64>> = vec![None; t];
    for start in 0..r {
        if row[start].is_some() {
            continue;
        }
        row[start] = Some(0);
        let mut stack = vec![(true, start)];
        while let Some((is_row, k)) = stack.pop() {
            if is_row {
                let a = row[k].unwrap();
                for j in 0..t {
                    if let Some(d) = relations.entry(k, j).homogeneous_degree() {
                        let b = a + d as i64;
                        match col[j] {
                            None => {
                                col[j] = Some(b);
                                stack.push((false, j));
                            }
                            Some(old) if old != b => {
                                return Err(Error::argument(format!(
                                    "column {j} is not homogeneous for any row grading"
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            } else {
                let b = col[k].unwrap();
                for i in 0..r {
                    if let Some(d) = relations.entry(i, k).homogeneous_degree() {
                        let a = b - d as i64;
                        match row[i] {
                            None => {
                                row[i] = Some(a);
                                stack.push((true, i));
                            }
                            Some(old) if old != a => {
                                return Err(Error::argument(format!(
                                    "row {i} admits no consistent degree shift"
                                )))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// A module presented as the cokernel of `relations`: R^t → R^r.
#[derive(Debug, Clone, PartialEq)]
pub struct PresentedModule {
    ring: RingModel,
    relations: Matrix,
}

impl PresentedModule {
    /// Entries are reduced modulo the ring's ideal.
    pub fn new(ring: &RingModel, relations: Matrix) -> Result<Self> {
        let relations = relations.reduced(ring)?;
        Ok(PresentedModule {
            ring: ring.clone(),
            relations,
        })
    }

    pub fn free(ring: &RingModel, rank: usize) -> Self {
        PresentedModule {
            ring: ring.clone(),
            relations: Matrix::zero(rank, 0),
        }
    }

    /// R/J for J generated by `gens`.
    pub fn cyclic(ring: &RingModel, gens: &[Polynomial]) -> Result<Self> {
        let cols = gens.iter().map(|g| vec![g.clone()]).collect();
        PresentedModule::new(ring, Matrix::new(1, cols)?)
    }

    /// The residue field k = R/m.
    pub fn residue_field(ring: &RingModel) -> Self {
        PresentedModule::cyclic(ring, &ring.variables()).expect("variables are valid entries")
    }

    pub fn ring(&self) -> &RingModel {
        &self.ring
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// Rank r of the free module being presented (number of generators).
    pub fn ambient_rank(&self) -> usize {
        self.relations.nrows()
    }

    /// Cancels unit entries until every relation entry lies in m, and
    /// drops zero relations.
    pub fn minimalized(&self) -> Result<PresentedModule> {
        let mut rel = self.relations.compact();
        while let Some((a, b)) = rel.find_unit() {
            rel = rel.eliminate_unit(&self.ring, a, b)?.compact();
        }
        Ok(PresentedModule {
            ring: self.ring.clone(),
            relations: rel,
        })
    }

    /// Minimal number of generators.
    pub fn min_generators(&self) -> Result<usize> {
        Ok(self.minimalized()?.ambient_rank())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.min_generators()? == 0)
    }

    /// Free iff a minimal presentation has no nonzero relation.
    pub fn is_free(&self) -> Result<bool> {
        Ok(self.minimalized()?.relations.ncols() == 0)
    }

    /// M/(x)M.
    pub fn quotient_by(&self, xs: &[Polynomial]) -> Result<PresentedModule> {
        let r = self.ambient_rank();
        let mut cols = self.relations.columns().to_vec();
        for x in xs {
            for i in 0..r {
                let mut c = vec![Polynomial::default(); r];
                c[i] = x.clone();
                cols.push(c);
            }
        }
        PresentedModule::new(&self.ring, Matrix::new(r, cols)?)
    }

    /// Direct sum with another module over the same ring.
    pub fn direct_sum(&self, other: &PresentedModule) -> Result<PresentedModule> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                "direct sum of modules over different rings".into(),
            ));
        }
        let (r1, r2) = (self.ambient_rank(), other.ambient_rank());
        let mut cols = Vec::new();
        for c in self.relations.columns() {
            let mut v = c.clone();
            v.extend(std::iter::repeat_n(Polynomial::default(), r2));
            cols.push(v);
        }
        for c in other.relations.columns() {
            let mut v = vec![Polynomial::default(); r1];
            v.extend(c.iter().cloned());
            cols.push(v);
        }
        PresentedModule::new(&self.ring, Matrix::new(r1 + r2, cols)?)
    }

    /// Gröbner basis of the relation module lifted to S^r.
    pub fn groebner(&self) -> Result<GroebnerBasis> {
        module_groebner(&self.ring, self.relations.columns(), self.ambient_rank())
    }

    /// F_p-dimension, summing standard monomials over positions.
    pub fn length(&self) -> Result<Length> {
        let gb = self.groebner()?;
        let poly = self.ring.poly();
        let mut total = 0u64;
        for pos in 0..self.ambient_rank() {
            let lts = gb.leading_monomials(pos as u32);
            match ideal::standard_monomials(&lts, poly.nvars(), poly.weights(), false).0 {
                Length::Finite(n) => total += n,
                Length::Infinite => return Ok(Length::Infinite),
            }
        }
        Ok(Length::Finite(total))
    }

    /// Krull dimension from the leading-term module: the largest dimension
    /// of S/in_k over positions k, or -1 for the zero module.
    pub fn hilbert_dimension(&self) -> Result<i64> {
        let gb = self.groebner()?;
        Ok((0..self.ambient_rank())
            .map(|pos| {
                ideal::dimension_of_monomial_ideal(
                    &gb.leading_monomials(pos as u32),
                    self.ring.nvars(),
                )
            })
            .max()
            .unwrap_or(-1))
    }

    /// F^n(M) for q = p^n: the minimal presentation with entries raised to q.
    pub fn frobenius(&self, q: u32) -> Result<PresentedModule> {
        let min = self.minimalized()?;
        let poly = self.ring.poly();
        let rel = min
            .relations
            .map(|e| self.ring.reduce(&poly.frobenius_power(e, q)))?;
        Ok(PresentedModule {
            ring: self.ring.clone(),
            relations: rel,
        })
    }

    pub fn render(&self) -> Vec<Vec<String>> {
        self.relations.render(&self.ring)
    }
}

/// A complex of free R-modules F_L → … → F_1 → F_0 with d_i: F_i → F_{i-1}.
#[derive(Debug, Clone, PartialEq)]
pub struct FreeComplex {
    ring: RingModel,
    ranks: Vec<usize>,
    differentials: Vec<Matrix>,
}

impl FreeComplex {
    pub fn new(ring: &RingModel, ranks: Vec<usize>, differentials: Vec<Matrix>) -> Result<Self> {
        if ranks.is_empty() || differentials.len() + 1 != ranks.len() {
            return Err(Error::argument(
                "a complex of length L needs L+1 ranks and L differentials",
            ));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.nrows() != ranks[i] || d.ncols() != ranks[i + 1] {
                return Err(Error::argument(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    i + 1,
                    d.nrows(),
                    d.ncols(),
                    ranks[i],
                    ranks[i + 1]
                )));
            }
        }
        Ok(FreeComplex {
            ring: ring.clone(),
            ranks,
            differentials,
        })
    }

    pub fn ring(&self) -> &RingModel {
        &self.ring
    }

    /// Index of the last step.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// d_i for 1 ≤ i ≤ length.
    pub fn differential(&self, i: usize) -> Option<&Matrix> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    /// d_i · d_{i+1} ≡ 0 modulo I for all i.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].mul(&self.ring, &w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every differential has all entries in m.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| {
            d.columns()
                .iter()
                .all(|c| c.iter().all(|e| e.in_maximal_ideal()))
        })
    }

    /// Entrywise q-th powers of all differentials.
    pub fn frobenius(&self, q: u32) -> Result<FreeComplex> {
        let poly = self.ring.poly();
        let differentials = self
            .differentials
            .iter()
            .map(|d| d.map(|e| self.ring.reduce(&poly.frobenius_power(e, q))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeComplex {
            ring: self.ring.clone(),
            ranks: self.ranks.clone(),
            differentials,
        })
    }

    /// The complex tensored with `coefficients`.
    pub fn with_coefficients(&self, coefficients: &PresentedModule) -> ComplexWithCoefficients {
        ComplexWithCoefficients {
            complex: self.clone(),
            coefficients: coefficients.clone(),
        }
    }

    /// H_i of the complex itself (coefficients R).
    pub fn homology_at(&self, i: usize) -> Result<HomologyModule> {
        self.with_coefficients(&PresentedModule::free(&self.ring, 1))
            .homology_at(i)
    }
}

/// A free complex tensored with a presented module.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexWithCoefficients {
    pub complex: FreeComplex,
    pub coefficients: PresentedModule,
}

impl ComplexWithCoefficients {
    pub fn homology_at(&self, i: usize) -> Result<HomologyModule> {
        let c = &self.complex;
        if i > c.length() {
            return Err(Error::argument(format!(
                "homology index {i} beyond complex length {}",
                c.length()
            )));
        }
        homology(
            &c.ring,
            c.differential(i + 1),
            c.differential(i),
            c.ranks[i],
            &self.coefficients,
        )
    }

    pub fn homology_is_zero(&self, i: usize) -> Result<bool> {
        let c = &self.complex;
        if i > c.length() {
            return Err(Error::argument(format!(
                "homology index {i} beyond complex length {}",
                c.length()
            )));
        }
        homology_vanishes(
            &c.ring,
            c.differential(i + 1),
            c.differential(i),
            c.ranks[i],
            &self.coefficients,
        )
    }
}

/// H = ker(out)/im(in) for a middle term N^b.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomologyModule {
    #[serde(skip)]
    pub module: PresentedModule,
    pub is_zero: bool,
}

impl HomologyModule {
    pub fn length(&self) -> Result<Length> {
        if self.is_zero {
            return Ok(Length::Finite(0));
        }
        self.module.length()
    }
}

struct Tensored {
    middle_rank: usize,
    boundaries: Matrix,
    outgoing: Option<(Matrix, Matrix)>,
}

fn tensor_data(
    incoming: Option<&Matrix>,
    outgoing: Option<&Matrix>,
    b: usize,
    coeff: &PresentedModule,
) -> Result<Tensored> {
    let u = coeff.ambient_rank();
    let phi = coeff.relations();
    let middle_rank = b * u;
    let mut boundaries = phi.block_diagonal(b);
    if let Some(din) = incoming {
        boundaries = din.kron_identity(u).hstack(&boundaries)?;
    }
    let outgoing = match outgoing {
        Some(dout) if dout.nrows() > 0 => {
            Some((dout.kron_identity(u), phi.block_diagonal(dout.nrows())))
        }
        _ => None,
    };
    if boundaries.nrows() != middle_rank {
        return Err(Error::Internal("shape mismatch in homology".into()));
    }
    Ok(Tensored {
        middle_rank,
        boundaries,
        outgoing,
    })
}

fn cycles(ring: &RingModel, t: &Tensored) -> Result<Vec<Vec<Polynomial>>> {
    match &t.outgoing {
        None => Ok(Matrix::identity(ring, t.middle_rank).into_columns()),
        Some((map, target_rel)) => {
            let n = t.middle_rank;
            let all = map.hstack(target_rel)?;
            let ker = kernel(ring, all.columns(), all.nrows())?;
            let mut z: Vec<Vec<Polynomial>> = Vec::new();
            for c in ker {
                let head = c[..n].to_vec();
                if head.iter().any(|e| !e.is_zero()) && !z.contains(&head) {
                    z.push(head);
                }
            }
            Ok(z)
        }
    }
}

/// Presentation of ker(outgoing ⊗ N) / im(incoming ⊗ N) at N^b.
pub fn homology(
    ring: &RingModel,
    incoming: Option<&Matrix>,
    outgoing: Option<&Matrix>,
    b: usize,
    coeff: &PresentedModule,
) -> Result<HomologyModule> {
    let t = tensor_data(incoming, outgoing, b, coeff)?;
    let module = if t.outgoing.is_none() {
        PresentedModule::new(ring, t.boundaries.clone())?
    } else {
        let z = cycles(ring, &t)?;
        let k = z.len();
        let zb = Matrix::new(t.middle_rank, z)?.hstack(&t.boundaries)?;
        let rel: Vec<Vec<Polynomial>> = kernel(ring, zb.columns(), t.middle_rank)?
            .into_iter()
            .map(|c| c[..k].to_vec())
            .collect();
        PresentedModule::new(ring, Matrix::new(k, rel)?)?
    };
    let module = module.minimalized()?;
    let is_zero = module.ambient_rank() == 0;
    Ok(HomologyModule { module, is_zero })
}

/// Vanishing test: every cycle reduces to zero modulo the boundaries.
pub fn homology_vanishes(
    ring: &RingModel,
    incoming: Option<&Matrix>,
    outgoing: Option<&Matrix>,
    b: usize,
    coeff: &PresentedModule,
) -> Result<bool> {
    let t = tensor_data(incoming, outgoing, b, coeff)?;
    let z = cycles(ring, &t)?;
    let gb = module_groebner(ring, t.boundaries.columns(), t.middle_rank)?;
    Ok(z.iter()
        .all(|c| gb.contains(ring.poly(), &Vector::from_column(c, 0))))
}

/// Syzygy module of the columns, presented as a submodule generated by
/// kernel vectors (returned as the matrix of generators, m × k).
pub fn syzygies(ring: &RingModel, gens: &Matrix) -> Result<Matrix> {
    let k = kernel(ring, gens.columns(), gens.nrows())?;
    Matrix::new(gens.ncols(), k)
}

/// Minimal free resolution of M up to homological degree `length`.
///
/// The complex stops early when a zero syzygy module is reached, so
/// `ranks()` never ends in a zero except for the zero module.
pub fn minimal_free_resolution(m: &PresentedModule, length: usize) -> Result<FreeComplex> {
    let ring = m.ring();
    let first = m.minimalized()?;
    let mut ranks = vec![first.ambient_rank()];
    let mut diffs: Vec<Matrix> = Vec::new();
    if length == 0 || first.relations().ncols() == 0 {
        return FreeComplex::new(ring, ranks, diffs);
    }
    diffs.push(first.relations().clone());
    // diffs[k] is d_{k+1}; compute one step past `length` to minimalize d_length
    let mut k = 0;
    while k < length {
        ring.budget().check_cancelled()?;
        let dk = &diffs[k];
        let mut next = syzygies(ring, dk)?;
        if next.ncols() > 0 {
            while let Some((a, b)) = next.find_unit() {
                // column a of d_{k+1} is redundant
                next = next.eliminate_unit(ring, a, b)?;
                let reduced = diffs[k].without_column(a);
                diffs[k] = reduced;
            }
            next = next.compact();
        }
        if next.ncols() == 0 {
            break;
        }
        diffs.push(next);
        k += 1;
    }
    diffs.truncate(length);
    for d in &diffs {
        ranks.push(d.ncols());
    }
    FreeComplex::new(ring, ranks, diffs)
}

/// Koszul complex K(x) on the given elements; K_i has rank binomial(c, i).
pub fn koszul_complex(ring: &RingModel, xs: &[Polynomial]) -> Result<FreeComplex> {
    let c = xs.len();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=c).map(|i| k_subsets(c, i)).collect();
    let poly = ring.poly();
    let mut diffs = Vec::with_capacity(c);
    for i in 1..=c {
        let rows = &subsets[i - 1];
        let mut cols = Vec::with_capacity(subsets[i].len());
        for s in &subsets[i] {
            let mut col = vec![Polynomial::default(); rows.len()];
            for (j, &idx) in s.iter().enumerate() {
                let mut face = s.clone();
                face.remove(j);
                let row = rows.binary_search(&face).expect("faces are subsets");
                let x = ring.reduce(&xs[idx])?;
                col[row] = if j % 2 == 0 { x } else { poly.neg(&x) };
            }
            cols.push(col);
        }
        diffs.push(Matrix::new(rows.len(), cols)?);
    }
    FreeComplex::new(ring, subsets.iter().map(|s| s.len()).collect(), diffs)
}

/// K(x) ⊗ M.
pub fn koszul_on_module(xs: &[Polynomial], m: &PresentedModule) -> Result<ComplexWithCoefficients> {
    Ok(koszul_complex(m.ring(), xs)?.with_coefficients(m))
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Tor_i^R(M, N) as H_i(G ⊗ N) for a minimal resolution G of M.
pub fn tor(m: &PresentedModule, n: &PresentedModule, i: usize) -> Result<HomologyModule> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch(
            "Tor of modules over different rings".into(),
        ));
    }
    let g = minimal_free_resolution(m, i + 1)?;
    if i > g.length() {
        return zero_homology(m.ring());
    }
    g.with_coefficients(n).homology_at(i)
}

/// Ext^i_R(M, N) as H^i(Hom(G, N)) for a minimal resolution G of M.
pub fn ext(m: &PresentedModule, n: &PresentedModule, i: usize) -> Result<HomologyModule> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch(
            "Ext of modules over different rings".into(),
        ));
    }
    let g = minimal_free_resolution(m, i + 1)?;
    ext_from_resolution(&g, n, i)
}

/// H^i(Hom(G, N)) for a given resolution G.
pub fn ext_from_resolution(
    g: &FreeComplex,
    n: &PresentedModule,
    i: usize,
) -> Result<HomologyModule> {
    if i > g.length() {
        return zero_homology(g.ring());
    }
    let outgoing = g.differential(i + 1).map(Matrix::transpose);
    let incoming = g.differential(i).map(Matrix::transpose);
    homology(
        g.ring(),
        incoming.as_ref(),
        outgoing.as_ref(),
        g.ranks()[i],
        n,
    )
}

fn zero_homology(ring: &RingModel) -> Result<HomologyModule> {
    Ok(HomologyModule {
        module: PresentedModule::free(ring, 0),
        is_zero: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingFlags;

    fn ring(p: u64, vars: &[&str], ideal: &[&str]) -> RingModel {
        RingModel::parse(p, vars, &[], ideal, RingFlags::default()).unwrap()
    }

    fn mat(r: &RingModel, rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|s| r.parse_element(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn module_groebner_examples() {
        let r = ring(2, &["x", "y"], &[]);
        let m = mat(&r, &[&["x", "0"], &["0", "y"]]);
        let gb = module_groebner(&r, m.columns(), 2).unwrap();
        assert_eq!(gb.len(), 2);
        let id = Matrix::identity(&r, 2);
        let gb = module_groebner(&r, id.columns(), 2).unwrap();
        let v = Vector::from_column(&[r.parse_element("x^3+y").unwrap(), r.var(1)], 0);
        assert!(gb.contains(r.poly(), &v));

        // over the node the lifted basis picks up (xy,0) and (0,xy)
        let e = ring(2, &["x", "y"], &["x*y"]);
        let m = mat(&e, &[&["x"], &["y"]]);
        let gb = module_groebner(&e, m.columns(), 2).unwrap();
        let xy = e.poly().mul(&e.var(0), &e.var(1));
        for pos in 0..2 {
            let mut col = vec![e.poly().zero(), e.poly().zero()];
            col[pos] = xy.clone();
            assert!(gb.contains(e.poly(), &Vector::from_column(&col, 0)));
        }
        assert!(gb.len() >= 2);
    }

    #[test]
    fn syzygy_examples() {
        let r = ring(2, &["x", "y"], &[]);
        let s = syzygies(&r, &mat(&r, &[&["x", "y"]])).unwrap();
        assert_eq!(s.ncols(), 1);
        assert_eq!(s.column(0), &[r.var(1), r.var(0)]);
        let s = syzygies(&r, &Matrix::identity(&r, 2)).unwrap();
        assert_eq!(s.ncols(), 0);

        let e = ring(2, &["x", "y"], &["x*y"]);
        let s = syzygies(&e, &mat(&e, &[&["x", "y"]])).unwrap();
        let y0 = vec![e.var(1), e.poly().zero()];
        let x1 = vec![e.poly().zero(), e.var(0)];
        assert!(s.columns().contains(&y0), "{:?}", s.render(&e));
        assert!(s.columns().contains(&x1), "{:?}", s.render(&e));
    }

    #[test]
    fn resolution_of_residue_field() {
        let a = ring(2, &["x", "y"], &[]);
        let g = minimal_free_resolution(&PresentedModule::residue_field(&a), 5).unwrap();
        assert_eq!(g.ranks(), &[1, 2, 1]);
        assert!(g.is_complex().unwrap());
        assert!(g.is_minimal());

        let e = ring(2, &["x", "y"], &["x*y"]);
        let g = minimal_free_resolution(&PresentedModule::residue_field(&e), 4).unwrap();
        assert_eq!(g.ranks(), &[1, 2, 2, 2, 2]);
        assert!(g.is_complex().unwrap());
        assert!(g.is_minimal());

        let g = minimal_free_resolution(&PresentedModule::free(&a, 1), 3).unwrap();
        assert_eq!(g.length(), 0);
        assert_eq!(g.ranks(), &[1]);
    }

    #[test]
    fn koszul_examples() {
        let a = ring(2, &["x", "y"], &[]);
        let k = koszul_on_module(&a.variables(), &PresentedModule::free(&a, 1)).unwrap();
        assert_eq!(k.complex.ranks(), &[1, 2, 1]);
        assert_eq!(
            k.homology_at(0).unwrap().length().unwrap(),
            Length::Finite(1)
        );
        assert!(k.homology_at(1).unwrap().is_zero);
        assert!(k.homology_at(2).unwrap().is_zero);

        let e = ring(2, &["x", "y"], &["x*y"]);
        let k = koszul_on_module(&[e.var(0)], &PresentedModule::free(&e, 1)).unwrap();
        let h1 = k.homology_at(1).unwrap();
        assert!(!h1.is_zero);
        assert!(!k.homology_is_zero(1).unwrap());
        assert_eq!(h1.length().unwrap(), Length::Infinite);

        let kk = koszul_on_module(&a.variables(), &PresentedModule::residue_field(&a)).unwrap();
        assert_eq!(
            kk.homology_at(1).unwrap().length().unwrap(),
            Length::Finite(2)
        );

        let c = koszul_complex(&a, &[a.var(0), a.var(1), a.var(0)]).unwrap();
        assert_eq!(c.ranks(), &[1, 3, 3, 1]);
        assert!(c.is_complex().unwrap());
    }

    #[test]
    fn lengths() {
        let a = ring(2, &["x", "y"], &[]);
        assert_eq!(
            PresentedModule::residue_field(&a).length().unwrap(),
            Length::Finite(1)
        );
        let m2 = PresentedModule::cyclic(
            &a,
            &[
                a.parse_element("x^2").unwrap(),
                a.parse_element("y^2").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(m2.length().unwrap(), Length::Finite(4));
        assert_eq!(
            PresentedModule::free(&a, 0).length().unwrap(),
            Length::Finite(0)
        );
        assert_eq!(
            PresentedModule::free(&a, 1).length().unwrap(),
            Length::Infinite
        );
    }

    #[test]
    fn tor_examples() {
        let a = ring(2, &["x", "y"], &[]);
        let k = PresentedModule::residue_field(&a);
        assert_eq!(tor(&k, &k, 0).unwrap().length().unwrap(), Length::Finite(1));
        assert_eq!(tor(&k, &k, 1).unwrap().length().unwrap(), Length::Finite(2));
        assert_eq!(tor(&k, &k, 2).unwrap().length().unwrap(), Length::Finite(1));
        assert!(tor(&k, &k, 3).unwrap().is_zero);
        let sx = PresentedModule::cyclic(&a, &[a.var(0)]).unwrap();
        let sy = PresentedModule::cyclic(&a, &[a.var(1)]).unwrap();
        assert!(tor(&sx, &sy, 1).unwrap().is_zero);
    }

    #[test]
    fn ext_examples() {
        let a = ring(2, &["x", "y"], &[]);
        let k = PresentedModule::residue_field(&a);
        let s = PresentedModule::free(&a, 1);
        assert!(ext(&k, &s, 0).unwrap().is_zero);
        assert!(ext(&k, &s, 1).unwrap().is_zero);
        assert_eq!(ext(&k, &s, 2).unwrap().length().unwrap(), Length::Finite(1));
        let e0 = ext(&s, &s, 0).unwrap();
        assert_eq!(e0.module.min_generators().unwrap(), 1);
        assert!(e0.module.is_free().unwrap());
    }

    #[test]
    fn min_generators_examples() {
        let b = ring(3, &["x", "y", "z"], &["x^2+y*z"]);
        let m = PresentedModule::new(&b, mat(&b, &[&["x", "y"], &["z", "-x"]])).unwrap();
        assert_eq!(m.min_generators().unwrap(), 2);
        assert_eq!(PresentedModule::free(&b, 3).min_generators().unwrap(), 3);
        assert_eq!(
            PresentedModule::residue_field(&b).min_generators().unwrap(),
            1
        );
        // a unit entry cancels a generator
        let n = PresentedModule::new(&b, mat(&b, &[&["1", "x"], &["y", "z"]])).unwrap();
        assert_eq!(n.min_generators().unwrap(), 1);
    }

    #[test]
    fn graded_presentations() {
        let b = ring(3, &["x", "y", "z"], &["x^2+y*z"]);
        assert!(validate_presentation(&b, &mat(&b, &[&["x", "y"], &["z", "-x"]])).is_ok());
        assert!(validate_presentation(&b, &mat(&b, &[&["x", "y^2"], &["z", "x"]])).is_err());
        assert!(validate_presentation(&b, &mat(&b, &[&["x+y^2"]])).is_err());
        assert!(validate_presentation(&b, &mat(&b, &[&["1", "x"]])).is_err());
        assert!(validate_presentation(&b, &mat(&b, &[&["x", "y^2"], &["0", "x"]])).is_ok());
    }
}
