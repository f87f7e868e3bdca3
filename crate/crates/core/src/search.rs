//! Exhaustive depth-first search over multisets avoiding short zero-sums.
//!
//! Partial multisets are nondecreasing lists of element indices. Each search
//! state carries, for every length `j` below the forbidden bound, the set of
//! sums of `j`-term subsequences as a `u128` bitset over element indices
//! (so `|G| ≤ 128`). Appending `g` creates a short zero-sum iff `-g` already
//! lies in one of those rows, which makes pruning a handful of bit tests.
//!
//! With symmetry on (homocyclic groups only), a partial multiset is expanded
//! only if no automorphism maps it to a smaller sorted list. The least member
//! of an orbit passes this test at every prefix, so each orbit of avoiding
//! multisets is visited exactly once, through its canonical representative.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{is_prime, GroupSpec};
use crate::sequence::Sequence;
use crate::structure::{match_main_form, verify_lift_minimal};
use crate::symmetry::SymmetryTable;
use crate::zerosum::ZeroSumEngine;

pub const MAX_SEARCH_ORDER: usize = 128;
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_TIME_BUDGET: Duration = Duration::from_secs(15 * 60);
/// Environment variable overriding [`DEFAULT_NODE_BUDGET`].
pub const BUDGET_ENV: &str = "ZSLAB_BUDGET_NODES";

const SPLIT_DEPTH: usize = 2;
const FLUSH_EVERY: u64 = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: DEFAULT_NODE_BUDGET,
            max_time: DEFAULT_TIME_BUDGET,
        }
    }
}

impl Budget {
    /// Default budget, with the node limit taken from the environment if set.
    pub fn from_env() -> Self {
        let max_nodes = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchTask {
    pub spec: GroupSpec,
    pub target_length: usize,
    /// No nonempty zero-sum of length `≤ forbidden` is allowed.
    pub forbidden: usize,
    pub budget: Budget,
    pub symmetry: bool,
    pub workers: usize,
    /// Set when the task comes from `|S| = D(G)+k-1`, `forbidden = D(G)-k`.
    pub k: Option<u32>,
}

impl SearchTask {
    pub fn new(spec: &GroupSpec, target_length: usize, forbidden: usize) -> Self {
        SearchTask {
            spec: spec.clone(),
            target_length,
            forbidden,
            budget: Budget::from_env(),
            symmetry: true,
            workers: 1,
            k: None,
        }
    }

    /// `target = D(G)+k-1`, `forbidden = D(G)-k`.
    pub fn extremal(spec: &GroupSpec, k: u32) -> Result<Self> {
        let d = crate::congruence::davenport_formula(spec)? as usize;
        if k as usize >= d {
            return Err(Error::OutOfRange(format!("k = {k} must be below D(G) = {d}")));
        }
        let mut task = SearchTask::new(spec, d + k as usize - 1, d - k as usize);
        task.k = Some(k);
        Ok(task)
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

/// Per-representative certification for `C_p ⊕ C_p` tasks. Entries that do
/// not apply (composite `n`) are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepChecks {
    /// `N^i(S) = 0` on both vanishing ranges.
    #[serde(rename = "lemma32a")]
    pub vanishing: Option<bool>,
    /// `N^{2p-1}(S) ≡ k (mod p)`.
    #[serde(rename = "lemma32b")]
    pub long_count: Option<bool>,
    #[serde(rename = "lemma32c")]
    pub sigma_nonzero: Option<bool>,
    pub main_form: bool,
    /// The rank-three lift is a minimal zero-sum.
    #[serde(rename = "claim_A")]
    pub lift_minimal: Option<bool>,
}

impl RepChecks {
    pub fn all_pass(&self) -> bool {
        self.main_form
            && [self.vanishing, self.long_count, self.sigma_nonzero, self.lift_minimal]
                .iter()
                .all(|c| c.unwrap_or(true))
    }
}

/// Zero-sum counts vanish on `[1, 2p-1-k] ∪ [2p, 4p-2k-1]`.
pub fn vanishing_ranges(p: u32, k: u32) -> [std::ops::RangeInclusive<usize>; 2] {
    let p = p as usize;
    let k = k as usize;
    [1..=2 * p - 1 - k, 2 * p..=(4 * p).saturating_sub(2 * k + 1)]
}

/// Runs the per-representative checks for `s` over `C_n ⊕ C_n`.
pub fn certify_rep(s: &Sequence, k: u32) -> Result<RepChecks> {
    let spec = s.spec();
    let n = spec.exponent();
    let main_form = match_main_form(s, k)?.matched;
    if !is_prime(n as u64) {
        return Ok(RepChecks {
            vanishing: None,
            long_count: None,
            sigma_nonzero: None,
            main_form,
            lift_minimal: None,
        });
    }
    let profile = ZeroSumEngine::new(spec)?.count_zero_sums(s)?;
    let vanishing = vanishing_ranges(n, k)
        .into_iter()
        .all(|r| r.into_iter().all(|i| profile.is_zero_at(i)));
    let long_count = profile.get(2 * n as usize - 1) % n == (k % n).into();
    Ok(RepChecks {
        vanishing: Some(vanishing),
        long_count: Some(long_count),
        sigma_nonzero: Some(!s.sigma().is_zero()),
        main_form,
        lift_minimal: Some(verify_lift_minimal(s, k)?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub canonical: Sequence,
    pub orbit_size: usize,
    pub checks: Option<RepChecks>,
}

#[derive(Clone, Debug)]
pub struct ExtremalReport {
    pub spec: GroupSpec,
    pub k: Option<u32>,
    pub target_length: usize,
    pub forbidden: usize,
    pub orbits: Vec<OrbitRecord>,
    pub exhaustive: bool,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitJson {
    pub canonical: String,
    pub orbit_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<RepChecks>,
}

/// Wire form of an [`ExtremalReport`], fields in schema order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReportJson {
    pub group: String,
    pub k: Option<u32>,
    pub orbits: Vec<OrbitJson>,
    pub exhaustive: bool,
    pub nodes: u64,
    pub elapsed_ms: u64,
}

impl ExtremalReport {
    pub fn canonical_reps(&self) -> Vec<&Sequence> {
        self.orbits.iter().map(|o| &o.canonical).collect()
    }

    /// `elapsed_ms` is written as 0 unless `timing` is set, so that repeated
    /// runs are byte-identical.
    pub fn to_json(&self, timing: bool) -> ExtremalReportJson {
        ExtremalReportJson {
            group: self.spec.to_string(),
            k: self.k,
            orbits: self
                .orbits
                .iter()
                .map(|o| OrbitJson {
                    canonical: o.canonical.render_terms(),
                    orbit_size: o.orbit_size,
                    checks: o.checks.clone(),
                })
                .collect(),
            exhaustive: self.exhaustive,
            nodes: self.nodes,
            elapsed_ms: if timing { self.elapsed.as_millis() as u64 } else { 0 },
        }
    }
}

/// Cyclic shift of one coordinate, as two masked bit shifts.
#[derive(Clone, Copy, Debug, Default)]
struct Shift {
    keep: u128,
    wrap: u128,
    up: u32,
    down: u32,
}

/// Group data shared by all workers of one search.
struct Context {
    order: usize,
    neg: Vec<u16>,
    shifts: Vec<Vec<Shift>>,
    symmetry: Option<SymmetryTable>,
    /// Rows kept per state: sums of length `0..rows`. `None` means a single
    /// row holding every subsum (zero-sum-free search).
    rows: Option<usize>,
}

impl Context {
    fn new(spec: &GroupSpec, forbidden: Option<usize>, symmetry: bool) -> Result<Self> {
        let order = spec.order();
        if order > MAX_SEARCH_ORDER {
            return Err(Error::Precondition(format!(
                "search needs |G| ≤ {MAX_SEARCH_ORDER}, {spec} has order {order}"
            )));
        }
        let factors = spec.factors();
        let strides: Vec<usize> = (0..factors.len())
            .map(|i| factors[i + 1..].iter().map(|&n| n as usize).product())
            .collect();
        let valid = if order == 128 { u128::MAX } else { (1u128 << order) - 1 };
        let mut shifts = Vec::with_capacity(order);
        let mut neg = Vec::with_capacity(order);
        for g in spec.elements() {
            neg.push(spec.index_of(&spec.neg(&g)) as u16);
            let mut sh = Vec::new();
            for (i, &c) in g.coeffs().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let n = factors[i];
                let keep = (0..order)
                    .filter(|&x| (x / strides[i]) % (n as usize) < (n - c) as usize)
                    .fold(0u128, |m, x| m | 1 << x);
                sh.push(Shift {
                    keep,
                    wrap: valid & !keep,
                    up: c * strides[i] as u32,
                    down: (n - c) * strides[i] as u32,
                });
            }
            shifts.push(sh);
        }
        let symmetry = if symmetry && spec.is_homocyclic() {
            Some(SymmetryTable::new(spec)?)
        } else {
            None
        };
        Ok(Context {
            order,
            neg,
            shifts,
            symmetry,
            rows: forbidden,
        })
    }

    #[inline]
    fn translate(&self, mut x: u128, g: usize) -> u128 {
        for s in &self.shifts[g] {
            x = ((x & s.keep) << s.up) | ((x & s.wrap) >> s.down);
        }
        x
    }

    fn stride(&self) -> usize {
        self.rows.unwrap_or(1)
    }
}

#[derive(Debug)]
struct Aborted;

struct Shared<'a> {
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    budget: Budget,
    start: Instant,
}

impl Shared<'_> {
    fn flush(&self, local: u64) -> std::result::Result<(), Aborted> {
        let total = self.nodes.fetch_add(local, AtomicOrdering::Relaxed) + local;
        if total > self.budget.max_nodes || self.start.elapsed() > self.budget.max_time {
            self.abort.store(true, AtomicOrdering::Relaxed);
        }
        if self.abort.load(AtomicOrdering::Relaxed) {
            Err(Aborted)
        } else {
            Ok(())
        }
    }
}

/// One worker's DFS state.
struct Walker<'a> {
    ctx: &'a Context,
    shared: &'a Shared<'a>,
    terms: Vec<u16>,
    /// Reach rows of every depth, flattened with stride `ctx.stride()`.
    levels: Vec<u128>,
    scratch: Vec<u16>,
    pending: u64,
}

impl<'a> Walker<'a> {
    fn new(ctx: &'a Context, shared: &'a Shared<'a>) -> Self {
        let mut levels = vec![0u128; ctx.stride()];
        levels[0] = 1; // the empty sum
        Walker {
            ctx,
            shared,
            terms: Vec::new(),
            levels,
            scratch: Vec::new(),
            pending: 0,
        }
    }

    /// Appends element `x` unless that creates a forbidden zero-sum or a
    /// non-minimal prefix.
    fn push(&mut self, x: usize) -> bool {
        let stride = self.ctx.stride();
        let base = self.terms.len() * stride;
        let neg = 1u128 << self.ctx.neg[x];
        let live = stride.min(self.terms.len() + 1);
        if self.levels[base..base + live].iter().any(|&r| r & neg != 0) {
            return false;
        }
        self.terms.push(x as u16);
        if let Some(sym) = &self.ctx.symmetry {
            if !sym.is_orbit_minimal(&self.terms, &mut self.scratch) {
                self.terms.pop();
                return false;
            }
        }
        self.levels.extend_from_within(base..base + stride);
        let next = base + stride;
        match self.ctx.rows {
            None => {
                let r = self.levels[next];
                self.levels[next] = r | self.ctx.translate(r, x);
            }
            Some(_) => {
                for j in (1..stride.min(self.terms.len() + 1)).rev() {
                    let prev = self.levels[next + j - 1];
                    self.levels[next + j] |= self.ctx.translate(prev, x);
                }
            }
        }
        true
    }

    fn pop(&mut self) {
        self.terms.pop();
        let stride = self.ctx.stride();
        self.levels.truncate(self.levels.len() - stride);
    }

    fn tick(&mut self) -> std::result::Result<(), Aborted> {
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            let p = std::mem::take(&mut self.pending);
            self.shared.flush(p)?;
        }
        Ok(())
    }

    fn finish(&mut self) {
        let p = std::mem::take(&mut self.pending);
        self.shared.nodes.fetch_add(p, AtomicOrdering::Relaxed);
    }

    /// Visits every admissible extension of the current state up to
    /// `max_depth` terms, children in increasing element order.
    fn explore(
        &mut self,
        max_depth: usize,
        visit: &mut dyn FnMut(&[u16]),
    ) -> std::result::Result<(), Aborted> {
        if self.terms.len() >= max_depth {
            return Ok(());
        }
        let start = self.terms.last().map_or(0, |&t| t as usize);
        for x in start..self.ctx.order {
            if !self.push(x) {
                continue;
            }
            self.tick()?;
            visit(&self.terms);
            let r = self.explore(max_depth, visit);
            self.pop();
            r?;
        }
        Ok(())
    }
}

trait Visit: Send {
    fn visit(&mut self, terms: &[u16]);
}

/// Collects states of exactly the target length.
struct LeafSink {
    target: usize,
    found: Vec<Vec<u16>>,
}

impl Visit for LeafSink {
    fn visit(&mut self, terms: &[u16]) {
        if terms.len() == self.target {
            self.found.push(terms.to_vec());
        }
    }
}

/// Records the deepest state reached.
#[derive(Default)]
struct DepthSink {
    max: usize,
}

impl Visit for DepthSink {
    fn visit(&mut self, terms: &[u16]) {
        self.max = self.max.max(terms.len());
    }
}

struct RunOutcome<V> {
    visitors: Vec<V>,
    exhaustive: bool,
    nodes: u64,
    elapsed: Duration,
}

/// Runs the DFS from the empty multiset. Subtrees below [`SPLIT_DEPTH`] are
/// distributed over `workers` threads, each with its own visitor; visitors
/// come back in sequential subtree order, so the outcome does not depend on
/// scheduling.
fn run<V, F>(ctx: &Context, max_depth: usize, budget: Budget, workers: usize, make: F) -> Result<RunOutcome<V>>
where
    V: Visit,
    F: Fn() -> V + Sync,
{
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let shared = Shared {
        nodes: &nodes,
        abort: &abort,
        budget,
        start: Instant::now(),
    };
    let split = SPLIT_DEPTH.min(max_depth);
    let mut frontier = Vec::new();
    let mut top = make();
    let shallow = {
        let mut w = Walker::new(ctx, &shared);
        let mut visit = |t: &[u16]| {
            top.visit(t);
            if t.len() == split {
                frontier.push(t.to_vec());
            }
        };
        let r = w.explore(split, &mut visit);
        w.finish();
        r
    };
    let mut visitors = vec![top];
    let mut exhaustive = shallow.is_ok();
    if exhaustive && split < max_depth && !frontier.is_empty() {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
        let deep: Vec<(V, bool)> = pool.install(|| {
            frontier
                .par_iter()
                .map(|prefix| {
                    let mut w = Walker::new(ctx, &shared);
                    for &x in prefix {
                        let pushed = w.push(x as usize);
                        debug_assert!(pushed, "frontier prefixes replay");
                    }
                    let mut v = make();
                    let r = w.explore(max_depth, &mut |t: &[u16]| v.visit(t));
                    w.finish();
                    (v, r.is_ok())
                })
                .collect()
        });
        for (v, ok) in deep {
            exhaustive &= ok;
            visitors.push(v);
        }
    }
    let nodes = nodes.load(AtomicOrdering::Relaxed);
    Ok(RunOutcome {
        visitors,
        exhaustive: exhaustive && nodes <= budget.max_nodes,
        nodes,
        elapsed: shared.start.elapsed(),
    })
}

fn sequence_of(spec: &GroupSpec, terms: &[u16]) -> Sequence {
    let mut s = Sequence::empty(spec);
    for &t in terms {
        s.push(spec.element_at(t as usize), 1).expect("index inside group");
    }
    s
}

/// Leaves of one search, deduplicated by canonical form.
struct Leaves {
    spec: GroupSpec,
    reps: BTreeMap<Vec<u16>, usize>,
}

impl Leaves {
    fn collect(ctx: &Context, spec: &GroupSpec, leaves: impl IntoIterator<Item = Vec<u16>>) -> Self {
        // leaves are canonical when symmetry is on; canonicalize anyway
        let table = match &ctx.symmetry {
            Some(t) => Some(std::borrow::Cow::Borrowed(t)),
            None if spec.is_homocyclic() => SymmetryTable::new(spec).ok().map(std::borrow::Cow::Owned),
            None => None,
        };
        let mut reps = BTreeMap::new();
        for leaf in leaves {
            match &table {
                Some(t) => {
                    let (c, stab) = t.canonical_terms(&leaf);
                    reps.insert(c, t.len() / stab);
                }
                None => {
                    reps.insert(leaf, 1);
                }
            }
        }
        Leaves { spec: spec.clone(), reps }
    }

    fn into_sequences(self) -> Vec<(Sequence, usize)> {
        self.reps
            .into_iter()
            .map(|(t, size)| (sequence_of(&self.spec, &t), size))
            .collect()
    }
}

/// All orbit representatives of multisets of length `target_length` without
/// a nonempty zero-sum of length `≤ forbidden`.
///
/// On budget exhaustion the report carries what was found so far and
/// `exhaustive = false`. Every representative is re-verified by a fresh
/// [`ZeroSumEngine`]; a failure there is reported as a counterexample error.
pub fn enumerate_extremal(task: &SearchTask) -> Result<ExtremalReport> {
    let spec = &task.spec;
    if task.target_length > 40 {
        return Err(Error::Precondition(format!(
            "target length {} exceeds 40",
            task.target_length
        )));
    }
    if task.forbidden == 0 {
        return Err(Error::Precondition("forbidden length must be at least 1".into()));
    }
    let rows = (task.forbidden < task.target_length).then_some(task.forbidden);
    let ctx = Context::new(spec, rows, task.symmetry)?;
    let target = task.target_length;
    let out = run(&ctx, target, task.budget, task.workers, || LeafSink {
        target,
        found: Vec::new(),
    })?;
    let mut leaves: Vec<Vec<u16>> = Vec::new();
    for v in out.visitors {
        leaves.extend(v.found);
    }
    if target == 0 {
        leaves.push(Vec::new());
    }
    let leaves = Leaves::collect(&ctx, spec, leaves);
    let engine = ZeroSumEngine::new(spec)?;
    let mut orbits = Vec::new();
    for (rep, orbit_size) in leaves.into_sequences() {
        if engine.has_short_zero_sum(&rep, task.forbidden.min(rep.len()))? {
            return Err(Error::Counterexample(format!(
                "search returned {rep} which has a zero-sum of length ≤ {}",
                task.forbidden
            )));
        }
        let checks = match task.k {
            Some(k) if spec.rank() == 2 && spec.is_homocyclic() && k >= 2 && k + 2 <= spec.exponent() => {
                Some(certify_rep(&rep, k)?)
            }
            _ => None,
        };
        orbits.push(OrbitRecord {
            canonical: rep,
            orbit_size,
            checks,
        });
    }
    Ok(ExtremalReport {
        spec: spec.clone(),
        k: task.k,
        target_length: task.target_length,
        forbidden: task.forbidden,
        orbits,
        exhaustive: out.exhaustive,
        nodes: out.nodes,
        elapsed: out.elapsed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: Budget,
    pub symmetry: bool,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Budget::from_env(),
            symmetry: true,
            workers: 1,
        }
    }
}

fn deepest(spec: &GroupSpec, forbidden: Option<usize>, opts: &SearchOptions) -> Result<usize> {
    let ctx = Context::new(spec, forbidden, opts.symmetry)?;
    let out = run(&ctx, usize::MAX, opts.budget, opts.workers, DepthSink::default)?;
    if !out.exhaustive {
        return Err(Error::BudgetExceeded { nodes: out.nodes });
    }
    Ok(out.visitors.iter().map(|v| v.max).max().unwrap_or(0))
}

/// Largest `ℓ` such that some sequence of length `ℓ` has no nonempty
/// zero-sum of length `≤ forbidden`; `s_{≤forbidden}(G)` is one more.
///
/// Fails for `forbidden < exp(G)`: powers of an element of maximal order
/// then avoid such zero-sums at every length.
pub fn max_avoiding_length(spec: &GroupSpec, forbidden: usize, opts: &SearchOptions) -> Result<usize> {
    if forbidden < spec.exponent() as usize {
        return Err(Error::OutOfRange(format!(
            "forbidden length {forbidden} is below exp(G) = {}; the answer is unbounded",
            spec.exponent()
        )));
    }
    deepest(spec, Some(forbidden), opts)
}

/// `s_{≤k}(G)`.
pub fn s_leq_by_search(spec: &GroupSpec, k: usize, opts: &SearchOptions) -> Result<usize> {
    Ok(max_avoiding_length(spec, k, opts)? + 1)
}

/// Smallest `ℓ` such that every sequence of length `ℓ` has a nonempty
/// zero-sum subsequence.
pub fn compute_davenport_by_search(spec: &GroupSpec, opts: &SearchOptions) -> Result<usize> {
    Ok(deepest(spec, None, opts)? + 1)
}

/// `η(G) = s_{≤exp(G)}(G)`.
pub fn compute_eta_by_search(spec: &GroupSpec, opts: &SearchOptions) -> Result<usize> {
    s_leq_by_search(spec, spec.exponent() as usize, opts)
}

/// Orbit representatives of minimal zero-sum sequences of length `length`.
///
/// Every such sequence is `T·(-σ(T))` for a zero-sum free `T` of length
/// `length - 1`, and conversely; so it suffices to close up the canonical
/// zero-sum free sequences of that length and deduplicate.
pub fn enumerate_minimal_zero_sums(spec: &GroupSpec, length: usize, opts: &SearchOptions) -> Result<Vec<Sequence>> {
    if length == 0 {
        return Ok(Vec::new());
    }
    let ctx = Context::new(spec, None, opts.symmetry)?;
    let target = length - 1;
    let out = run(&ctx, target, opts.budget, opts.workers, || LeafSink {
        target,
        found: Vec::new(),
    })?;
    if !out.exhaustive {
        return Err(Error::BudgetExceeded { nodes: out.nodes });
    }
    let mut free: Vec<Vec<u16>> = out.visitors.into_iter().flat_map(|v| v.found).collect();
    if target == 0 {
        free.push(Vec::new());
    }
    let closed = free.into_iter().map(|mut t| {
        let seq = sequence_of(spec, &t);
        t.push(spec.index_of(&spec.neg(&seq.sigma())) as u16);
        t.sort_unstable();
        t
    });
    let engine = ZeroSumEngine::new(spec)?;
    let mut reps = Vec::new();
    for (s, _) in Leaves::collect(&ctx, spec, closed).into_sequences() {
        if !engine.is_minimal_zero_sum(&s)? {
            return Err(Error::Counterexample(format!("{s} is not a minimal zero-sum")));
        }
        reps.push(s);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::match_property_b_form;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn opts() -> SearchOptions {
        SearchOptions {
            budget: Budget::nodes(u64::MAX),
            symmetry: true,
            workers: 1,
        }
    }

    #[test]
    fn translation_matches_group_addition() {
        for spec in [g("C5xC5"), g("C2xC4"), g("C3xC3xC3"), g("C2xC2xC2"), g("C7")] {
            let ctx = Context::new(&spec, None, false).unwrap();
            for a in spec.elements() {
                for b in spec.elements() {
                    let moved = ctx.translate(1u128 << spec.index_of(&b), spec.index_of(&a));
                    let sum = spec.add(&a, &b).unwrap();
                    assert_eq!(moved, 1u128 << spec.index_of(&sum));
                }
            }
        }
    }

    #[test]
    fn extremal_c5_k2() {
        let task = SearchTask::extremal(&g("C5xC5"), 2).unwrap().with_budget(Budget::nodes(u64::MAX));
        let r = enumerate_extremal(&task).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.orbits.len(), 1);
        assert_eq!(r.orbits[0].canonical.render_terms(), "(0,1)^4 (1,0)^4 (1,1)^2");
        assert_eq!(r.orbits[0].orbit_size, 240);
        assert!(r.orbits[0].checks.as_ref().unwrap().all_pass());
    }

    #[test]
    fn extremal_c4_k2() {
        let task = SearchTask::extremal(&g("C4xC4"), 2).unwrap();
        let r = enumerate_extremal(&task).unwrap();
        assert_eq!(r.orbits.len(), 1);
        assert_eq!(r.orbits[0].canonical.render_terms(), "(0,1)^3 (1,0)^3 (1,1)^2");
        let c = r.orbits[0].checks.as_ref().unwrap();
        assert!(c.main_form && c.vanishing.is_none());
    }

    #[test]
    fn symmetry_off_agrees() {
        for (spec, k) in [(g("C3xC3"), 0), (g("C3xC3"), 1), (g("C2xC2"), 1), (g("C3xC3"), 2)] {
            let on = enumerate_extremal(&SearchTask::extremal(&spec, k).unwrap()).unwrap();
            let off = enumerate_extremal(&SearchTask::extremal(&spec, k).unwrap().with_symmetry(false)).unwrap();
            assert_eq!(on.canonical_reps(), off.canonical_reps());
            assert!(off.nodes >= on.nodes);
        }
    }

    #[test]
    fn workers_do_not_change_reports() {
        let task = SearchTask::extremal(&g("C4xC4"), 1).unwrap();
        let one = enumerate_extremal(&task).unwrap();
        let three = enumerate_extremal(&task.clone().with_workers(3)).unwrap();
        assert_eq!(one.to_json(false), three.to_json(false));
    }

    #[test]
    fn invariants_small() {
        let o = opts();
        assert_eq!(compute_davenport_by_search(&g("C3xC3"), &o).unwrap(), 5);
        assert_eq!(compute_davenport_by_search(&g("C2xC2xC2"), &o).unwrap(), 4);
        assert_eq!(compute_davenport_by_search(&g("C2xC4"), &o).unwrap(), 5);
        assert_eq!(max_avoiding_length(&g("C3xC3"), 3, &o).unwrap(), 6);
        assert_eq!(max_avoiding_length(&g("C2xC2"), 2, &o).unwrap(), 3);
        assert_eq!(compute_eta_by_search(&g("C3xC3"), &o).unwrap(), 7);
        assert!(matches!(max_avoiding_length(&g("C3xC3"), 2, &o), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn minimal_zero_sums_small() {
        let o = opts();
        let reps = enumerate_minimal_zero_sums(&g("C2xC2"), 3, &o).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].render_terms(), "(0,1) (1,0) (1,1)");
        let reps = enumerate_minimal_zero_sums(&g("C3xC3"), 5, &o).unwrap();
        assert!(!reps.is_empty());
        for s in &reps {
            assert!(match_property_b_form(s).unwrap().matched, "{s}");
        }
        assert!(enumerate_minimal_zero_sums(&g("C3xC3"), 6, &o).unwrap().is_empty());
        let one = enumerate_minimal_zero_sums(&g("C3xC3"), 1, &o).unwrap();
        assert_eq!(one[0].render_terms(), "(0,0)");
    }

    #[test]
    fn budget_flags_partial_results() {
        let task = SearchTask::extremal(&g("C5xC5"), 2).unwrap().with_budget(Budget::nodes(10));
        let r = enumerate_extremal(&task).unwrap();
        assert!(!r.exhaustive);
        assert!(matches!(
            compute_davenport_by_search(&g("C5xC5"), &SearchOptions { budget: Budget::nodes(10), ..opts() }),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
