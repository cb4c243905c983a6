//! Executable consistency checks of the Frobenius criteria for freeness,
//! finite projective dimension and Gorensteinness, plus rigidity scans.
//!
//! A checker evaluates the premises and the conclusion of one implication
//! and reports `PAPER_VIOLATION` only when every premise holds and the
//! conclusion fails. Unbounded quantifiers over i and n are evaluated on a
//! declared finite [`Grid`].

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::frobenius::{self, TorMethod};
use crate::ideal::Length;
use crate::invariants::{self, SopSequence};
use crate::module::{self, PresentedModule};
use crate::ring::RingModel;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(
    tag = "status",
    content = "reason",
    rename_all = "SCREAMING_SNAKE_CASE"
)]
pub enum Verdict {
    Consistent,
    PaperViolation,
    Skipped(String),
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::PaperViolation)
    }
}

/// Finite window standing in for "all i > 0" and "all n > 0".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub i_max: usize,
    pub n_max: u32,
}

impl Grid {
    /// i ≤ d + 1, n ≤ 2.
    pub fn default_for(dim: usize) -> Self {
        Grid {
            i_max: dim + 1,
            n_max: 2,
        }
    }
}

/// Structured outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub inputs: Map<String, Value>,
    pub quantities: Map<String, Value>,
    pub conditions: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<Grid>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CriterionReport {
    fn new(criterion: &str) -> Self {
        CriterionReport {
            criterion: criterion.to_string(),
            inputs: Map::new(),
            quantities: Map::new(),
            conditions: Map::new(),
            grid: None,
            verdict: Verdict::Consistent,
            notes: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(key.into(), json!(value));
        self
    }

    fn quantity(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.quantities.insert(key.into(), json!(value));
        self
    }

    fn condition(&mut self, key: &str, value: bool) -> bool {
        self.conditions.insert(key.into(), Value::Bool(value));
        value
    }

    fn skip(mut self, reason: impl Into<String>) -> Self {
        self.verdict = Verdict::Skipped(reason.into());
        self
    }

    /// `premises ⟹ conclusion`.
    fn implication(mut self, premises: bool, conclusion: bool) -> Self {
        self.verdict = if premises && !conclusion {
            Verdict::PaperViolation
        } else {
            Verdict::Consistent
        };
        self
    }

    /// All listed conditions must agree.
    fn equivalence(mut self, values: &[bool]) -> Self {
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        self.condition("all_agree", agree);
        self.verdict = if agree {
            Verdict::Consistent
        } else {
            Verdict::PaperViolation
        };
        self
    }
}

/// A module argument with an optional user-declared rank.
#[derive(Debug, Clone, Copy)]
pub struct ModuleArg<'a> {
    pub module: &'a PresentedModule,
    pub declared_rank: Option<usize>,
}

impl<'a> ModuleArg<'a> {
    pub fn new(module: &'a PresentedModule) -> Self {
        ModuleArg {
            module,
            declared_rank: None,
        }
    }

    pub fn with_rank(module: &'a PresentedModule, rank: Option<usize>) -> Self {
        ModuleArg {
            module,
            declared_rank: rank,
        }
    }

    /// Computed rank over a domain, otherwise the declared one.
    pub fn rank(&self) -> Result<Option<usize>> {
        match (invariants::rank_of_module(self.module)?, self.declared_rank) {
            (Some(r), Some(d)) if r != d => Err(Error::argument(format!(
                "declared rank {d} differs from the computed rank {r}"
            ))),
            (Some(r), _) => Ok(Some(r)),
            (None, d) => Ok(d),
        }
    }
}

fn require_kappa(n: u32, kappa_bound: u32) -> Result<()> {
    if n < kappa_bound {
        return Err(Error::precondition(format!(
            "n = {n} is below the κ upper bound {kappa_bound}"
        )));
    }
    Ok(())
}

/// Reason to skip when R is not Cohen-Macaulay of positive dimension.
fn ring_skip_reason(ring: &RingModel) -> Result<Option<String>> {
    let d = invariants::ring_dimension(ring)?;
    if d <= 0 {
        return Ok(Some("the ring has dimension 0".into()));
    }
    if !invariants::is_cohen_macaulay(ring)? {
        return Ok(Some("the ring is not Cohen-Macaulay".into()));
    }
    Ok(None)
}

/// Projective dimension test by resolving to depth R + 1 steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PdInfo {
    pub finite: bool,
    pub pd: Option<usize>,
    pub betti: Vec<usize>,
}

pub fn pd_is_finite(m: &PresentedModule) -> Result<PdInfo> {
    let depth = invariants::ring_depth(m.ring())? as usize;
    let g = module::minimal_free_resolution(m, depth + 1)?;
    let betti = g.ranks().to_vec();
    // Auslander–Buchsbaum: a finite pd is at most depth R
    let finite = g.length() <= depth;
    Ok(PdInfo {
        finite,
        pd: finite.then_some(g.length()),
        betti,
    })
}

fn length_value(l: Length) -> Value {
    json!(l)
}

/// Theorem: M with a rank and F^n(M) MCM for one n ≥ κ(R) forces M free.
pub fn check_thm_main1(m: ModuleArg, n: u32, kappa_bound: u32) -> Result<CriterionReport> {
    require_kappa(n, kappa_bound)?;
    let ring = m.module.ring();
    let mut r = CriterionReport::new("main1");
    r.input("n", n).input("kappa_bound", kappa_bound);
    if let Some(reason) = ring_skip_reason(ring)? {
        return Ok(r.skip(reason));
    }
    if m.module.is_zero()? {
        return Ok(r.skip("the module is zero"));
    }
    let Some(rank) = m.rank()? else {
        return Ok(r.skip("no rank: the ring is not a domain and no rank was declared"));
    };
    let fm = frobenius::frobenius_module(m.module, n)?;
    let mcm = invariants::is_mcm(&fm)?;
    let free = m.module.is_free()?;
    r.quantity("rank", rank)
        .quantity("mu", m.module.min_generators()?)
        .quantity("depth_frobenius", invariants::depth_of_module(&fm)?);
    let premises = r.condition("frobenius_is_mcm", mcm);
    let conclusion = r.condition("module_is_free", free);
    Ok(r.implication(premises, conclusion))
}

/// Theorem: Tor_i(M, F_*^n R) = 0 for 1 ≤ i ≤ d − depth F^n(M) forces pd M < ∞.
pub fn check_thm_kl(m: ModuleArg, n: u32, kappa_bound: u32) -> Result<CriterionReport> {
    require_kappa(n, kappa_bound)?;
    let ring = m.module.ring();
    let mut r = CriterionReport::new("kl");
    r.input("n", n).input("kappa_bound", kappa_bound);
    if let Some(reason) = ring_skip_reason(ring)? {
        return Ok(r.skip(reason));
    }
    if m.module.is_zero()? {
        return Ok(r.skip("the module is zero"));
    }
    let Some(rank) = m.rank()? else {
        return Ok(r.skip("no rank: the ring is not a domain and no rank was declared"));
    };
    let d = invariants::ring_dimension(ring)?;
    let fm = frobenius::frobenius_module(m.module, n)?;
    let depth_f = invariants::depth_of_module(&fm)?;
    let window = (d - depth_f).max(0) as usize;
    let mut vanishing = Vec::with_capacity(window);
    for i in 1..=window {
        vanishing.push(frobenius::tor_frobenius_vanishes(m.module, n, i)?);
    }
    let pd = pd_is_finite(m.module)?;
    r.quantity("rank", rank)
        .quantity("depth_frobenius", depth_f)
        .quantity("window", json!({"i_min": 1, "i_max": window}))
        .quantity("tor_vanishes", &vanishing)
        .quantity("betti", &pd.betti)
        .quantity("pd", pd.pd);
    let premises = r.condition("tor_vanishes_on_window", vanishing.iter().all(|&v| v));
    let conclusion = r.condition("pd_finite", pd.finite);
    Ok(r.implication(premises, conclusion))
}

/// Vanishing flags of Tor_i(N, F_*^n R) for n = 1..=n_max, i = 1..=i_max.
pub fn tor_vanishing_table(nm: &PresentedModule, grid: Grid) -> Result<Vec<Vec<bool>>> {
    (1..=grid.n_max)
        .map(|n| {
            (1..=grid.i_max)
                .map(|i| frobenius::tor_frobenius_vanishes(nm, n, i))
                .collect()
        })
        .collect()
}

/// (all flags vanish, some flag with n ≥ κ vanishes)
fn table_summary(table: &[Vec<bool>], kappa_bound: u32) -> (bool, bool) {
    let all = table.iter().all(|row| row.iter().all(|&v| v));
    let some = table
        .iter()
        .enumerate()
        .any(|(k, row)| k as u32 + 1 >= kappa_bound && row.iter().any(|&v| v));
    (all, some)
}

fn check_grid(grid: Grid, kappa_bound: u32) -> Result<()> {
    if grid.i_max == 0 || grid.n_max == 0 {
        return Err(Error::argument("the grid needs i_max ≥ 1 and n_max ≥ 1"));
    }
    if grid.n_max < kappa_bound {
        return Err(Error::precondition(format!(
            "the grid n ≤ {} contains no n ≥ κ bound {kappa_bound}",
            grid.n_max
        )));
    }
    Ok(())
}

/// Corollary: for MCM M with a rank and a full s.o.p. x the four conditions
/// (free; ℓ(F^n(M/xM)) = q^d ℓ(M/xM); Tor_i(M/xM, F_*^n R) = 0 on the grid;
/// one vanishing with n ≥ κ) agree.
pub fn check_cor_free(
    m: ModuleArg,
    x: &SopSequence,
    n: u32,
    kappa_bound: u32,
    grid: Grid,
) -> Result<CriterionReport> {
    require_kappa(n, kappa_bound)?;
    check_grid(grid, kappa_bound)?;
    let ring = m.module.ring();
    let mut r = CriterionReport::new("free");
    r.input("n", n)
        .input("kappa_bound", kappa_bound)
        .input("sop", &x.rendered);
    r.grid = Some(grid);
    if let Some(reason) = ring_skip_reason(ring)? {
        return Ok(r.skip(reason));
    }
    if !x.is_sop_for_r {
        return Ok(r.skip("the sequence is not a system of parameters for R"));
    }
    if !invariants::is_mcm(m.module)? {
        return Ok(r.skip("the module is not maximal Cohen-Macaulay"));
    }
    let Some(rank) = m.rank()? else {
        return Ok(r.skip("no rank: the ring is not a domain and no rank was declared"));
    };
    let d = invariants::ring_dimension(ring)? as u32;
    let q = frobenius::FrobeniusPower::new(ring, n)?.q as u64;
    let mx = m.module.quotient_by(&x.elements)?;
    let ell = mx.length()?;
    let ell_f = frobenius::frobenius_module(&mx, n)?.length()?;
    let target = ell.finite().map(|l| q.pow(d) * l);
    let table = tor_vanishing_table(&mx, grid)?;
    let (all, some) = table_summary(&table, kappa_bound);
    r.quantity("rank", rank)
        .quantity("mu", m.module.min_generators()?)
        .quantity("q", q)
        .quantity("length_quotient", length_value(ell))
        .quantity("length_frobenius_quotient", length_value(ell_f))
        .quantity("q_d_length_quotient", target)
        .quantity("tor_vanishes", &table);
    let c1 = r.condition("1_free", m.module.is_free()?);
    let c2 = r.condition(
        "2_length_equality",
        target.is_some() && ell_f.finite() == target,
    );
    let c3 = r.condition("3_tor_vanishes_on_grid", all);
    let c4 = r.condition("4_one_vanishing", some);
    Ok(r.equivalence(&[c1, c2, c3, c4]))
}

/// Corollary: for M Cohen-Macaulay of codimension 1 and x an s.o.p. for M
/// that is R-regular, pd M < ∞ and the two Tor vanishing conditions agree.
pub fn check_cor_codim1(
    m: &PresentedModule,
    x: &SopSequence,
    n: u32,
    kappa_bound: u32,
    grid: Grid,
) -> Result<CriterionReport> {
    require_kappa(n, kappa_bound)?;
    check_grid(grid, kappa_bound)?;
    let ring = m.ring();
    let mut r = CriterionReport::new("codim1");
    r.input("n", n)
        .input("kappa_bound", kappa_bound)
        .input("sop", &x.rendered);
    r.grid = Some(grid);
    if let Some(reason) = ring_skip_reason(ring)? {
        return Ok(r.skip(reason));
    }
    if m.is_zero()? {
        return Ok(r.skip("the module is zero"));
    }
    let d = invariants::ring_dimension(ring)?;
    let dim_m = invariants::dimension_of_module(m)?;
    if d - dim_m != 1 {
        return Ok(r.skip(format!("the module has codimension {}, not 1", d - dim_m)));
    }
    if invariants::depth_of_module(m)? != dim_m {
        return Ok(r.skip("the module is not Cohen-Macaulay"));
    }
    if !x.is_regular_on_r {
        return Ok(r.skip("the sequence is not R-regular"));
    }
    if !x.is_sop_for(m)? {
        return Ok(r.skip("the sequence is not a system of parameters for the module"));
    }
    let pd = pd_is_finite(m)?;
    let mx = m.quotient_by(&x.elements)?;
    let table = tor_vanishing_table(&mx, grid)?;
    let (all, some) = table_summary(&table, kappa_bound);
    r.quantity("dim", dim_m)
        .quantity("betti", &pd.betti)
        .quantity("pd", pd.pd)
        .quantity("tor_vanishes", &table);
    let c1 = r.condition("1_pd_finite", pd.finite);
    let c2 = r.condition("2_tor_vanishes_on_grid", all);
    let c3 = r.condition("3_one_vanishing", some);
    Ok(r.equivalence(&[c1, c2, c3]))
}

/// The three Frobenius tests for Gorensteinness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GorensteinMethod {
    /// F^n(ω) is MCM.
    CanonicalFrobenius,
    /// Ext^i(F_*^n R, R) = 0 for 1 ≤ i ≤ d.
    ExtPushforward,
    /// Tor_i(ω/xω, F_*^n R) = 0 for one i > 0.
    TorOmega,
}

impl GorensteinMethod {
    pub const ALL: [GorensteinMethod; 3] = [
        GorensteinMethod::CanonicalFrobenius,
        GorensteinMethod::ExtPushforward,
        GorensteinMethod::TorOmega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GorensteinMethod::CanonicalFrobenius => "canonical_frobenius",
            GorensteinMethod::ExtPushforward => "ext_pushforward",
            GorensteinMethod::TorOmega => "tor_omega",
        }
    }
}

/// Evaluates one premise and compares it with the type computed from
/// Ext^d(k, R), which is independent of all three premises.
pub fn check_gorenstein(
    ring: &RingModel,
    method: GorensteinMethod,
    x: Option<&SopSequence>,
    n: u32,
    kappa_bound: u32,
    i_max: usize,
) -> Result<CriterionReport> {
    require_kappa(n, kappa_bound)?;
    let mut r = CriterionReport::new(&format!("gorenstein/{}", method.name()));
    r.input("method", method)
        .input("n", n)
        .input("kappa_bound", kappa_bound);
    if let Some(x) = x {
        r.input("sop", &x.rendered);
    }
    if !invariants::is_cohen_macaulay(ring)? {
        return Ok(r.skip("the ring is not Cohen-Macaulay"));
    }
    let flags = ring.flags();
    if !flags.is_domain && !flags.generically_gorenstein {
        return Ok(r.skip("ω has no certified rank: the ring is neither a domain nor asserted generically Gorenstein"));
    }
    if !flags.is_domain {
        r.notes
            .push("generic Gorensteinness is a user assertion".into());
    }
    let d = invariants::ring_dimension(ring)? as usize;
    let truth = invariants::cm_type_and_gorenstein(ring)?;
    r.quantity("cm_type", truth.cm_type)
        .quantity("mu_omega", truth.mu_omega);
    let premise = match method {
        GorensteinMethod::CanonicalFrobenius => {
            let omega = invariants::canonical_module(ring)?;
            let fw = frobenius::frobenius_module(&omega, n)?;
            r.quantity("depth_frobenius_omega", invariants::depth_of_module(&fw)?);
            r.condition("frobenius_omega_is_mcm", invariants::is_mcm(&fw)?)
        }
        GorensteinMethod::ExtPushforward => {
            if !flags.is_domain {
                return Ok(r.skip("F_*R has no certified rank outside domains"));
            }
            if n == 0 {
                return Err(Error::argument("the pushforward test needs n ≥ 1"));
            }
            let p = frobenius::pushforward_presentation(ring, n)?;
            let pm = p.minimalized()?;
            let g = module::minimal_free_resolution(&pm, d + 1)?;
            let rr = PresentedModule::free(ring, 1);
            let mut vanishing = Vec::with_capacity(d);
            for i in 1..=d {
                vanishing.push(module::ext_from_resolution(&g, &rr, i)?.is_zero);
            }
            r.quantity("pushforward_generators", p.generator_count())
                .quantity("pushforward_mu", pm.ambient_rank())
                .quantity("ext_vanishes", &vanishing);
            r.condition("ext_vanishes_1_to_d", vanishing.iter().all(|&v| v))
        }
        GorensteinMethod::TorOmega => {
            let Some(x) = x else {
                return Err(Error::argument(
                    "the tor_omega method needs a system of parameters",
                ));
            };
            if !x.is_sop_for_r {
                return Ok(r.skip("the sequence is not a system of parameters for R"));
            }
            let omega = invariants::canonical_module(ring)?;
            let wx = omega.quotient_by(&x.elements)?;
            let mut vanishing = Vec::with_capacity(i_max);
            for i in 1..=i_max {
                vanishing.push(frobenius::tor_frobenius_vanishes(&wx, n, i)?);
            }
            r.quantity("tor_vanishes", &vanishing);
            r.condition("one_tor_vanishes", vanishing.iter().any(|&v| v))
        }
    };
    let conclusion = r.condition("gorenstein", truth.gorenstein);
    Ok(r.implication(premise, conclusion))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RigidityClass {
    /// pd M < ∞, or no vanishing anywhere in the window.
    RigidWitnessed,
    /// pd M = ∞ and Tor vanishes at the largest scanned n.
    VanishingFound,
    /// pd M = ∞ and vanishing occurs only below the largest scanned n.
    Inconclusive,
}

/// Tor_i(M, F_*^n R) vanishing over a window, with pd M.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityVerdict {
    pub n_range: (u32, u32),
    pub i_range: (usize, usize),
    /// `tor_vanishes[a][b]` is the flag at n = n_min + a, i = i_min + b.
    pub tor_vanishes: Vec<Vec<bool>>,
    pub pd: PdInfo,
    pub classification: RigidityClass,
    /// Set when pd M < ∞ but some Tor_i (i > 0) in the window is nonzero.
    pub verdict: Verdict,
}

pub fn rigidity_scan(
    m: &PresentedModule,
    n_range: (u32, u32),
    i_range: (usize, usize),
) -> Result<RigidityVerdict> {
    if n_range.0 == 0 || n_range.0 > n_range.1 || i_range.0 == 0 || i_range.0 > i_range.1 {
        return Err(Error::argument("scan ranges must satisfy 1 ≤ min ≤ max"));
    }
    let mut table = Vec::new();
    for n in n_range.0..=n_range.1 {
        let mut row = Vec::new();
        for i in i_range.0..=i_range.1 {
            row.push(frobenius::tor_frobenius_vanishes(m, n, i)?);
        }
        table.push(row);
    }
    let pd = pd_is_finite(m)?;
    let any_zero = table.iter().flatten().any(|&v| v);
    let classification = if pd.finite || !any_zero {
        RigidityClass::RigidWitnessed
    } else if table.last().is_some_and(|row| row.iter().any(|&v| v)) {
        RigidityClass::VanishingFound
    } else {
        RigidityClass::Inconclusive
    };
    let verdict = if pd.finite && !table.iter().flatten().all(|&v| v) {
        Verdict::PaperViolation
    } else {
        Verdict::Consistent
    };
    Ok(RigidityVerdict {
        n_range,
        i_range,
        tor_vanishes: table,
        pd,
        classification,
        verdict,
    })
}

/// (ℓ(Tor_1(M/xM, F_*^n R)), ℓ(Tor_1(F^n(M), R/x^[q]))); the first
/// surjects onto the second.
pub fn low_degree_lengths(
    m: &PresentedModule,
    x: &SopSequence,
    n: u32,
) -> Result<(Length, Length)> {
    let ring = m.ring();
    let q = frobenius::FrobeniusPower::new(ring, n)?.q as u64;
    let mx = m.quotient_by(&x.elements)?;
    let lhs = frobenius::tor_frobenius(&mx, n, 1, TorMethod::Functor)?.length()?;
    let fm = frobenius::frobenius_module(m, n)?;
    let rxq = PresentedModule::cyclic(ring, &x.bracket_power(ring, q)?)?;
    let rhs = module::tor(&fm, &rxq, 1)?.length()?;
    Ok((lhs, rhs))
}

/// The k-th syzygy of M, presented by d_{k+1} of a minimal resolution.
pub fn syzygy_module(m: &PresentedModule, k: usize) -> Result<PresentedModule> {
    if k == 0 {
        return m.minimalized();
    }
    let g = module::minimal_free_resolution(m, k + 1)?;
    let ring = m.ring();
    match (g.ranks().get(k), g.differential(k + 1)) {
        (Some(_), Some(d)) => PresentedModule::new(ring, d.clone()),
        (Some(&r), None) => Ok(PresentedModule::free(ring, r)),
        (None, _) => Ok(PresentedModule::free(ring, 0)),
    }
}

/// (ℓ(Tor_i(M/xM, F_*^n R)), ℓ(Tor_1(S_{i−1}/xS_{i−1}, F_*^n R))) for i ≥ 2.
pub fn syzygy_shift_lengths(
    m: &PresentedModule,
    x: &SopSequence,
    n: u32,
    i: usize,
) -> Result<(Length, Length)> {
    if i < 2 {
        return Err(Error::argument("the syzygy shift needs i ≥ 2"));
    }
    let mx = m.quotient_by(&x.elements)?;
    let lhs = frobenius::tor_frobenius(&mx, n, i, TorMethod::Functor)?.length()?;
    let s = syzygy_module(m, i - 1)?.quotient_by(&x.elements)?;
    let rhs = frobenius::tor_frobenius(&s, n, 1, TorMethod::Functor)?.length()?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::poly::Polynomial;
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

    fn b() -> RingModel {
        ring(3, &["x", "y", "z"], &[], &["x^2+y*z"], true)
    }

    fn mf(b: &RingModel) -> PresentedModule {
        let rows = vec![els(b, &["x", "y"]), els(b, &["z", "-x"])];
        PresentedModule::new(b, Matrix::from_rows(rows).unwrap()).unwrap()
    }

    fn cond(r: &CriterionReport, k: &str) -> bool {
        r.conditions[k].as_bool().unwrap()
    }

    #[test]
    fn pd_examples() {
        let a = ring(2, &["x", "y"], &[], &[], true);
        assert_eq!(
            pd_is_finite(&PresentedModule::free(&a, 2)).unwrap().pd,
            Some(0)
        );
        assert_eq!(
            pd_is_finite(&PresentedModule::residue_field(&a))
                .unwrap()
                .pd,
            Some(2)
        );
        let e = ring(2, &["x", "y"], &[], &["x*y"], false);
        let info = pd_is_finite(&PresentedModule::residue_field(&e)).unwrap();
        assert!(!info.finite);
        assert_eq!(info.betti, vec![1, 2, 2]);
    }

    #[test]
    fn main1_examples() {
        let b = b();
        let free = PresentedModule::free(&b, 2);
        let r = check_thm_main1(ModuleArg::new(&free), 1, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(cond(&r, "frobenius_is_mcm") && cond(&r, "module_is_free"));
        let m = mf(&b);
        let r = check_thm_main1(ModuleArg::new(&m), 1, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(!cond(&r, "frobenius_is_mcm"));
        let k = PresentedModule::residue_field(&b);
        let r = check_thm_main1(ModuleArg::new(&k), 1, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(matches!(
            check_thm_main1(ModuleArg::new(&k), 0, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn kl_examples() {
        let b = b();
        let m = mf(&b);
        let r = check_thm_kl(ModuleArg::new(&m), 1, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(!cond(&r, "pd_finite"));
        assert!(!cond(&r, "tor_vanishes_on_window"));
        let y = PresentedModule::cyclic(&b, &els(&b, &["y"])).unwrap();
        let r = check_thm_kl(ModuleArg::new(&y), 1, 1).unwrap();
        assert!(cond(&r, "pd_finite") && cond(&r, "tor_vanishes_on_window"));
    }

    #[test]
    fn cor_free_examples() {
        let b = b();
        let x = SopSequence::certify(&b, &els(&b, &["y", "z"])).unwrap();
        let grid = Grid::default_for(2);
        let free = PresentedModule::free(&b, 2);
        let r = check_cor_free(ModuleArg::new(&free), &x, 1, 1, grid).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.quantities["length_quotient"], json!(4));
        assert_eq!(r.quantities["length_frobenius_quotient"], json!(36));
        assert!(cond(&r, "1_free") && cond(&r, "4_one_vanishing"));

        let m = mf(&b);
        let r = check_cor_free(ModuleArg::new(&m), &x, 1, 1, Grid { i_max: 2, n_max: 1 }).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.quantities["length_quotient"], json!(2));
        assert!(r.quantities["length_frobenius_quotient"].as_u64().unwrap() > 18);
        assert!(!cond(&r, "1_free") && !cond(&r, "3_tor_vanishes_on_grid"));
    }

    #[test]
    fn codim1_examples() {
        let b = b();
        let x = SopSequence::certify(&b, &els(&b, &["z"])).unwrap();
        let grid = Grid { i_max: 2, n_max: 1 };
        let m = PresentedModule::cyclic(&b, &els(&b, &["y"])).unwrap();
        let r = check_cor_codim1(&m, &x, 1, 1, grid).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(cond(&r, "1_pd_finite"));
        let m = PresentedModule::cyclic(&b, &els(&b, &["x", "y"])).unwrap();
        let r = check_cor_codim1(&m, &x, 1, 1, grid).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(!cond(&r, "1_pd_finite") && !cond(&r, "3_one_vanishing"));
        let r = check_cor_codim1(&PresentedModule::free(&b, 1), &x, 1, 1, grid).unwrap();
        assert!(matches!(r.verdict, Verdict::Skipped(_)));
    }

    #[test]
    fn gorenstein_on_cusp() {
        let d = ring(5, &["x", "y"], &[2, 3], &["y^2-x^3"], true);
        let x = SopSequence::certify(&d, &els(&d, &["x"])).unwrap();
        for method in GorensteinMethod::ALL {
            let r = check_gorenstein(&d, method, Some(&x), 1, 1, 2).unwrap();
            assert_eq!(r.verdict, Verdict::Consistent, "{method:?}");
            assert!(cond(&r, "gorenstein"));
        }
    }

    #[test]
    fn gorenstein_on_t345() {
        let c = ring(
            5,
            &["x", "y", "z"],
            &[3, 4, 5],
            &["x*z-y^2", "x^3-y*z", "x^2*y-z^2"],
            true,
        );
        let x = SopSequence::certify(&c, &els(&c, &["x"])).unwrap();
        for method in GorensteinMethod::ALL {
            let r = check_gorenstein(&c, method, Some(&x), 1, 1, 2).unwrap();
            assert_eq!(r.verdict, Verdict::Consistent, "{method:?}");
            assert!(!cond(&r, "gorenstein"));
            assert!(
                !r.conditions.values().next().unwrap().as_bool().unwrap(),
                "{method:?}"
            );
        }
    }

    #[test]
    fn rigidity_examples() {
        let e = ring(2, &["x", "y"], &[], &["x*y"], false);
        let v = rigidity_scan(&PresentedModule::residue_field(&e), (1, 2), (1, 3)).unwrap();
        assert_eq!(v.classification, RigidityClass::RigidWitnessed);
        assert!(!v.pd.finite);
        assert!(v.tor_vanishes.iter().flatten().all(|&z| !z));
        let v = rigidity_scan(&PresentedModule::free(&e, 1), (1, 2), (1, 2)).unwrap();
        assert_eq!(
            (v.classification, v.verdict),
            (RigidityClass::RigidWitnessed, Verdict::Consistent)
        );
    }

    #[test]
    fn low_degree_and_syzygy_shift() {
        let b = b();
        let x = SopSequence::certify(&b, &els(&b, &["y", "z"])).unwrap();
        let m = mf(&b);
        let (lhs, rhs) = low_degree_lengths(&m, &x, 1).unwrap();
        assert!(lhs.finite().unwrap() >= rhs.finite().unwrap());
        let (a, c) = syzygy_shift_lengths(&m, &x, 1, 2).unwrap();
        assert_eq!(a, c);
    }
}
