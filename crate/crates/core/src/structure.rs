//! Structural templates for extremal and minimal zero-sum sequences, and the
//! lift of a rank-two sequence to a rank-three minimal zero-sum candidate.
//!
//! All matchers search for a basis in which the sequence equals a template.
//! Candidate basis vectors are restricted by multiplicity first (a template
//! slot of multiplicity `n-1` can only be filled by an element occurring
//! exactly `n-1` times), so matching stays cheap even for `n = 7`.
//!
//! Coefficients are stored in `[0, n-1]`. Where a template is usually
//! written with representatives in `[1, n]`, the matcher also records that
//! convention under a `*_one_based` parameter.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{is_basis, Automorphism, GroupElement, GroupSpec};
use crate::sequence::Sequence;
use crate::zerosum::ZeroSumEngine;

pub use crate::symmetry::canonicalize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormName {
    /// `e1^[n-1]·e2^[n-1]·(e1+e2)^[k]`
    #[serde(rename = "main_theorem")]
    MainTheorem,
    /// `e1^[n-1]·∏(x_i e1 + e2)` with `Σ x_i ≡ 1`
    #[serde(rename = "property_B")]
    PropertyB,
    #[serde(rename = "conjecture_k0")]
    ConjectureK0,
    #[serde(rename = "conjecture_k1")]
    ConjectureK1,
    #[serde(rename = "conjecture_mid")]
    ConjectureMid,
    #[serde(rename = "conjecture_kn1")]
    ConjectureKn1,
    /// `e1^[p-1]·∏(α_i e1 + e2)·∏(β_i e1 + γ_i e2 + e3)`
    #[serde(rename = "rank3_mzs")]
    Rank3Mzs,
}

impl FormName {
    pub const ALL: [FormName; 7] = [
        FormName::MainTheorem,
        FormName::PropertyB,
        FormName::ConjectureK0,
        FormName::ConjectureK1,
        FormName::ConjectureMid,
        FormName::ConjectureKn1,
        FormName::Rank3Mzs,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FormName::MainTheorem => "main_theorem",
            FormName::PropertyB => "property_B",
            FormName::ConjectureK0 => "conjecture_k0",
            FormName::ConjectureK1 => "conjecture_k1",
            FormName::ConjectureMid => "conjecture_mid",
            FormName::ConjectureKn1 => "conjecture_kn1",
            FormName::Rank3Mzs => "rank3_mzs",
        }
    }
}

impl fmt::Display for FormName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormName::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::OutOfRange(format!("unknown form `{s}`")))
    }
}

/// Outcome of matching a sequence against a named template.
#[derive(Clone, Debug, PartialEq)]
pub struct FormMatch {
    pub matched: bool,
    pub form_name: FormName,
    pub basis_witness: Option<Vec<GroupElement>>,
    pub parameters: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormMatchJson {
    pub matched: bool,
    pub form_name: FormName,
    pub basis_witness: Option<Vec<Vec<u32>>>,
    pub parameters: BTreeMap<String, Value>,
}

impl FormMatch {
    fn no(form_name: FormName) -> Self {
        FormMatch {
            matched: false,
            form_name,
            basis_witness: None,
            parameters: BTreeMap::new(),
        }
    }

    fn yes(form_name: FormName, basis: Vec<GroupElement>, parameters: BTreeMap<String, Value>) -> Self {
        FormMatch {
            matched: true,
            form_name,
            basis_witness: Some(basis),
            parameters,
        }
    }

    fn param_u32s(&self, key: &str) -> Option<Vec<u32>> {
        self.parameters.get(key)?.as_array()?.iter().map(|v| v.as_u64().map(|x| x as u32)).collect()
    }

    fn param_u32(&self, key: &str) -> Option<u32> {
        self.parameters.get(key)?.as_u64().map(|x| x as u32)
    }

    /// Rebuilds the template from the witness basis and parameters.
    pub fn reconstruct(&self, spec: &GroupSpec) -> Option<Sequence> {
        let basis = self.basis_witness.as_ref()?;
        let n = spec.exponent();
        let at = |c: &[u32]| combine(spec, basis, c);
        let mut s = Sequence::empty(spec);
        match self.form_name {
            FormName::MainTheorem | FormName::ConjectureMid => {
                let k = self.param_u32("k")?;
                s.push(at(&[1, 0]), n - 1).ok()?;
                s.push(at(&[0, 1]), n - 1).ok()?;
                s.push(at(&[1, 1]), k).ok()?;
            }
            FormName::PropertyB | FormName::ConjectureK1 | FormName::ConjectureK0 => {
                s.push(at(&[1, 0]), n - 1).ok()?;
                for x in self.param_u32s("x")? {
                    s.push(at(&[x, 1]), 1).ok()?;
                }
                if self.form_name == FormName::ConjectureK0 {
                    let g = spec.element(&self.param_u32s("g")?).ok()?;
                    s = s.remove(&Sequence::repeated(spec, &g, 1).ok()?).ok()?;
                }
            }
            FormName::ConjectureKn1 => {
                let x = self.param_u32("x")?;
                s.push(at(&[1, 0]), n - 1).ok()?;
                s.push(at(&[0, 1]), n - 1).ok()?;
                s.push(at(&[x, 1]), n - 1).ok()?;
            }
            FormName::Rank3Mzs => {
                s.push(at(&[1, 0, 0]), n - 1).ok()?;
                for a in self.param_u32s("alpha")? {
                    s.push(at(&[a, 1, 0]), 1).ok()?;
                }
                let pairs = self.parameters.get("beta_gamma")?.as_array()?;
                for pair in pairs {
                    let b = pair.get(0)?.as_u64()? as u32;
                    let c = pair.get(1)?.as_u64()? as u32;
                    s.push(at(&[b, c, 1]), 1).ok()?;
                }
            }
        }
        Some(s)
    }

    /// True iff the witness is a basis and reproduces `s` exactly.
    pub fn witness_reproduces(&self, s: &Sequence) -> bool {
        self.matched
            && self
                .basis_witness
                .as_ref()
                .is_some_and(|b| is_basis(s.spec(), b))
            && self.reconstruct(s.spec()).as_ref() == Some(s)
    }

    pub fn to_json(&self) -> FormMatchJson {
        FormMatchJson {
            matched: self.matched,
            form_name: self.form_name,
            basis_witness: self
                .basis_witness
                .as_ref()
                .map(|b| b.iter().map(|g| g.coeffs().to_vec()).collect()),
            parameters: self.parameters.clone(),
        }
    }
}

/// `Σ c_i · basis_i`.
pub fn combine(spec: &GroupSpec, basis: &[GroupElement], coeffs: &[u32]) -> GroupElement {
    basis
        .iter()
        .zip(coeffs)
        .fold(spec.zero(), |acc, (b, &c)| spec.add_unchecked(&acc, &spec.scalar_mul(c as i64, b)))
}

fn require_rank2_homocyclic(s: &Sequence) -> Result<u32> {
    let spec = s.spec();
    if spec.rank() == 2 && spec.is_homocyclic() {
        Ok(spec.exponent())
    } else {
        Err(Error::Precondition(format!("expected C_n ⊕ C_n, got {spec}")))
    }
}

fn elements_with_multiplicity(s: &Sequence, m: u32) -> Vec<GroupElement> {
    s.terms().filter(|&(_, v)| v == m).map(|(g, _)| g.clone()).collect()
}

fn to_one_based(xs: &[u32], n: u32) -> Vec<u32> {
    xs.iter().map(|&x| if x == 0 { n } else { x }).collect()
}

fn main_template(spec: &GroupSpec, e1: &GroupElement, e2: &GroupElement, k: u32) -> Result<Sequence> {
    let n = spec.exponent();
    Sequence::from_terms(
        spec,
        [
            (e1.clone(), n - 1),
            (e2.clone(), n - 1),
            (spec.add_unchecked(e1, e2), k),
        ],
    )
}

/// Searches for a basis `(e1, e2)` with `s = e1^[n-1]·e2^[n-1]·(e1+e2)^[k]`.
///
/// With `fixed_first`, only bases whose first vector is that element are
/// tried. Pairs are tried with `e2` increasing, then `e1` increasing.
fn find_main_basis(s: &Sequence, k: u32, fixed_first: Option<&GroupElement>) -> Result<Option<(GroupElement, GroupElement)>> {
    let spec = s.spec();
    let n = spec.exponent();
    if s.len() != (2 * n - 2 + k) as usize {
        return Ok(None);
    }
    let cands = elements_with_multiplicity(s, n - 1);
    for e2 in &cands {
        for e1 in &cands {
            if e1 == e2 || fixed_first.is_some_and(|f| f != e1) {
                continue;
            }
            if !is_basis(spec, &[e1.clone(), e2.clone()]) {
                continue;
            }
            if &main_template(spec, e1, e2, k)? == s {
                return Ok(Some((e1.clone(), e2.clone())));
            }
        }
    }
    Ok(None)
}

fn main_match(s: &Sequence, k: u32, form: FormName, fixed_first: Option<&GroupElement>) -> Result<FormMatch> {
    Ok(match find_main_basis(s, k, fixed_first)? {
        Some((e1, e2)) => FormMatch::yes(form, vec![e1, e2], BTreeMap::from([("k".to_string(), json!(k))])),
        None => FormMatch::no(form),
    })
}

/// Template `e1^[p-1]·e2^[p-1]·(e1+e2)^[k]` for `C_n ⊕ C_n`, `k ∈ [2, n-2]`.
pub fn match_main_form(s: &Sequence, k: u32) -> Result<FormMatch> {
    let n = require_rank2_homocyclic(s)?;
    if k < 2 || k + 2 > n {
        return Err(Error::OutOfRange(format!("k = {k} outside [2, {}]", n as i64 - 2)));
    }
    main_match(s, k, FormName::MainTheorem, None)
}

/// Writes every term of `rest` as `x·e1 + e2`, or fails.
fn coset_coefficients(spec: &GroupSpec, e1: &GroupElement, e2: &GroupElement, rest: &Sequence) -> Option<Vec<u32>> {
    let n = spec.element_order(e1);
    let mut xs = Vec::with_capacity(rest.len());
    for (t, m) in rest.terms() {
        let x = (0..n).find(|&x| &spec.add_unchecked(&spec.scalar_mul(x as i64, e1), e2) == t)?;
        xs.extend(std::iter::repeat_n(x, m as usize));
    }
    xs.sort_unstable();
    Some(xs)
}

fn property_b_match(s: &Sequence, form: FormName) -> Result<FormMatch> {
    let n = require_rank2_homocyclic(s)?;
    let spec = s.spec();
    if s.len() != (2 * n - 1) as usize {
        return Ok(FormMatch::no(form));
    }
    for e1 in elements_with_multiplicity(s, n - 1) {
        let rest = s.remove(&Sequence::repeated(spec, &e1, n - 1)?)?;
        let Some((e2, _)) = rest.terms().next() else {
            continue;
        };
        let e2 = e2.clone();
        if !is_basis(spec, &[e1.clone(), e2.clone()]) {
            continue;
        }
        let Some(xs) = coset_coefficients(spec, &e1, &e2, &rest) else {
            continue;
        };
        if xs.iter().map(|&x| x as u64).sum::<u64>() % n as u64 == 1 % n as u64 {
            let params = BTreeMap::from([("x".to_string(), json!(xs))]);
            return Ok(FormMatch::yes(form, vec![e1, e2], params));
        }
    }
    Ok(FormMatch::no(form))
}

/// `e1^[n-1]·∏_{i∈[1,n]} (x_i e1 + e2)` with `x_i ∈ [0, n-1]`, `Σ x_i ≡ 1 mod n`.
pub fn match_property_b_form(s: &Sequence) -> Result<FormMatch> {
    property_b_match(s, FormName::PropertyB)
}

/// Dispatches on `k` to the matching item of the conjectured description of
/// sequences of length `2n-2+k` without short zero-sums:
///
/// * `k = 0`: `S·(-σ(S))` has the `k = 1` form,
/// * `k = 1`: the property B template,
/// * `k ∈ [2, n-2]`: the main template,
/// * `k = n-1 ≥ 2`: `e1^[n-1]·e2^[n-1]·(x e1 + e2)^[n-1]` with `gcd(x, n) = 1`.
pub fn match_conjecture_form(s: &Sequence, k: u32) -> Result<FormMatch> {
    let n = require_rank2_homocyclic(s)?;
    let spec = s.spec();
    if k >= n {
        return Err(Error::OutOfRange(format!("k = {k} outside [0, {}]", n - 1)));
    }
    let expected_len = (2 * n - 2 + k) as usize;
    match k {
        0 => {
            if s.len() != expected_len {
                return Ok(FormMatch::no(FormName::ConjectureK0));
            }
            let g = spec.neg(&s.sigma());
            let extended = s.concat(&Sequence::repeated(spec, &g, 1)?)?;
            let mut m = property_b_match(&extended, FormName::ConjectureK0)?;
            if m.matched {
                m.parameters.insert("g".into(), json!(g.coeffs()));
            }
            Ok(m)
        }
        1 => property_b_match(s, FormName::ConjectureK1),
        k if k == n - 1 => {
            if s.len() != expected_len {
                return Ok(FormMatch::no(FormName::ConjectureKn1));
            }
            let cands = elements_with_multiplicity(s, n - 1);
            for e2 in &cands {
                for e1 in &cands {
                    if e1 == e2 || !is_basis(spec, &[e1.clone(), e2.clone()]) {
                        continue;
                    }
                    for x in (1..n).filter(|x| x.gcd(&n) == 1) {
                        let third = combine(spec, &[e1.clone(), e2.clone()], &[x, 1]);
                        if s.multiplicity(&third) == n - 1 && &third != e1 && &third != e2 {
                            let params = BTreeMap::from([("x".to_string(), json!(x))]);
                            return Ok(FormMatch::yes(FormName::ConjectureKn1, vec![e1.clone(), e2.clone()], params));
                        }
                    }
                }
            }
            Ok(FormMatch::no(FormName::ConjectureKn1))
        }
        _ => main_match(s, k, FormName::ConjectureMid, None),
    }
}

/// `e1^[p-1]·∏_{i∈[1,p-1]}(α_i e1 + e2)·∏_{i∈[1,p]}(β_i e1 + γ_i e2 + e3)`
/// with `Σα + Σβ ≡ Σγ ≡ 1 (mod p)`, over `C_p^3` with `|S| = 3p-2`.
pub fn match_rank3_form(s: &Sequence) -> Result<FormMatch> {
    let spec = s.spec();
    if spec.rank() != 3 || !spec.is_homocyclic() {
        return Err(Error::Precondition(format!("expected C_p^3, got {spec}")));
    }
    let n = spec.exponent();
    let no = FormMatch::no(FormName::Rank3Mzs);
    if s.len() != (3 * n - 2) as usize {
        return Ok(no);
    }
    for e1 in elements_with_multiplicity(s, n - 1) {
        let rest = s.remove(&Sequence::repeated(spec, &e1, n - 1)?)?;
        // group the remaining terms by coset of <e1>
        let mut cosets: BTreeMap<GroupElement, Sequence> = BTreeMap::new();
        for (t, m) in rest.terms() {
            let key = (0..n)
                .map(|c| spec.add_unchecked(t, &spec.scalar_mul(c as i64, &e1)))
                .min()
                .unwrap();
            cosets
                .entry(key)
                .or_insert_with(|| Sequence::empty(spec))
                .push(t.clone(), m)?;
        }
        for part2 in cosets.values().filter(|c| c.len() == (n - 1) as usize) {
            let part3 = rest.remove(part2)?;
            let e2 = part2.terms().next().unwrap().0.clone();
            let Some((e3, _)) = part3.terms().next() else {
                continue;
            };
            let basis = vec![e1.clone(), e2, e3.clone()];
            let Some(change) = Automorphism::from_basis(spec, &basis)? else {
                continue;
            };
            let inv = change.inverse();
            let mut alpha = Vec::new();
            let mut beta_gamma = Vec::new();
            let mut ok = true;
            for (t, m) in part2.terms() {
                let c = inv.apply(t);
                ok &= c.coeffs()[1] == 1 && c.coeffs()[2] == 0;
                alpha.extend(std::iter::repeat_n(c.coeffs()[0], m as usize));
            }
            for (t, m) in part3.terms() {
                let c = inv.apply(t);
                ok &= c.coeffs()[2] == 1;
                beta_gamma.extend(std::iter::repeat_n([c.coeffs()[0], c.coeffs()[1]], m as usize));
            }
            if !ok {
                continue;
            }
            let n64 = n as u64;
            let sum_ab = alpha.iter().map(|&a| a as u64).sum::<u64>()
                + beta_gamma.iter().map(|bg| bg[0] as u64).sum::<u64>();
            let sum_c = beta_gamma.iter().map(|bg| bg[1] as u64).sum::<u64>();
            if sum_ab % n64 == 1 % n64 && sum_c % n64 == 1 % n64 {
                alpha.sort_unstable();
                beta_gamma.sort_unstable();
                let one_based: Vec<[u32; 2]> = beta_gamma.iter().map(|&[b, c]| [if b == 0 { n } else { b }, c]).collect();
                let params = BTreeMap::from([
                    ("alpha_one_based".to_string(), json!(to_one_based(&alpha, n))),
                    ("beta_gamma_one_based".to_string(), json!(one_based)),
                    ("alpha".to_string(), json!(alpha)),
                    ("beta_gamma".to_string(), json!(beta_gamma)),
                ]);
                return Ok(FormMatch::yes(FormName::Rank3Mzs, basis, params));
            }
        }
    }
    Ok(no)
}

/// Dispatch by name; `k` is required by the forms that take it.
pub fn match_form(form: FormName, s: &Sequence, k: Option<u32>) -> Result<FormMatch> {
    let need_k = || k.ok_or_else(|| Error::Precondition(format!("form {form} needs k")));
    match form {
        FormName::MainTheorem => match_main_form(s, need_k()?),
        FormName::PropertyB => match_property_b_form(s),
        FormName::ConjectureK0 => match_conjecture_form(s, 0),
        FormName::ConjectureK1 => match_conjecture_form(s, 1),
        FormName::ConjectureMid => {
            let k = need_k()?;
            let n = require_rank2_homocyclic(s)?;
            if k < 2 || k + 2 > n {
                return Err(Error::OutOfRange(format!("k = {k} outside [2, {}]", n as i64 - 2)));
            }
            match_conjecture_form(s, k)
        }
        FormName::ConjectureKn1 => {
            let n = require_rank2_homocyclic(s)?;
            if n < 3 {
                return Err(Error::OutOfRange("k = n-1 item needs n ≥ 3".into()));
            }
            match_conjecture_form(s, n - 1)
        }
        FormName::Rank3Mzs => match_rank3_form(s),
    }
}

/// The lifted sequence and its five constituent parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftResult {
    pub lifted: Sequence,
    /// `S'_1 … S'_5`: images of `e1`-terms, of the `e2 + <e1>` coset, of the
    /// remaining terms, then `(-e3)^[n-k-1]` and the closing term.
    pub parts: [Sequence; 5],
}

/// `S' = φ(S)·(-e3)^[n-k-1]·(-σ(S) - (2k-1)e3)` over `C_n^3`, where
/// `φ(x e1 + y e2) = x e1 + y e2 + e3`. The parts are split with respect to
/// the standard basis.
pub fn lift_sequence(s: &Sequence, k: u32) -> Result<LiftResult> {
    let spec = s.spec();
    require_rank2_homocyclic(s)?;
    let basis = [spec.generator(0), spec.generator(1)];
    lift_sequence_in_basis(s, k, &basis)
}

/// As [`lift_sequence`], splitting the parts with respect to `basis`.
pub fn lift_sequence_in_basis(s: &Sequence, k: u32, basis: &[GroupElement; 2]) -> Result<LiftResult> {
    let spec = s.spec();
    let n = require_rank2_homocyclic(s)?;
    if k < 2 || k + 2 > n {
        return Err(Error::OutOfRange(format!("k = {k} outside [2, {}]", n as i64 - 2)));
    }
    if s.len() != (2 * n - 2 + k) as usize {
        return Err(Error::Precondition(format!(
            "lift needs |S| = 2n-2+k = {}, got {}",
            2 * n - 2 + k,
            s.len()
        )));
    }
    let change = Automorphism::from_basis(spec, basis)?
        .ok_or_else(|| Error::Precondition("lift basis is not a basis".into()))?
        .inverse();
    let big = GroupSpec::homocyclic(n, 3)?;
    let phi = |g: &GroupElement| GroupElement::from_reduced(&[g.coeffs()[0], g.coeffs()[1], 1]);

    let mut parts: [Sequence; 5] = std::array::from_fn(|_| Sequence::empty(&big));
    for (g, m) in s.terms() {
        let c = change.apply(g);
        let slot = match c.coeffs() {
            [1, 0] => 0,
            [_, 1] => 1,
            _ => 2,
        };
        parts[slot].push(phi(g), m)?;
    }
    parts[3].push(GroupElement::from_reduced(&[0, 0, n - 1]), n - k - 1)?;
    let sigma = s.sigma();
    let closing = big.reduce(&[
        -(sigma.coeffs()[0] as i64),
        -(sigma.coeffs()[1] as i64),
        -(2 * k as i64 - 1),
    ])?;
    parts[4].push(closing, 1)?;
    let lifted = parts.iter().try_fold(Sequence::empty(&big), |acc, p| acc.concat(p))?;
    Ok(LiftResult { lifted, parts })
}

/// True iff the lift of `s` is a minimal zero-sum sequence, recomputed from
/// scratch by the counting engine.
pub fn verify_lift_minimal(s: &Sequence, k: u32) -> Result<bool> {
    let lift = lift_sequence(s, k)?;
    ZeroSumEngine::new(lift.lifted.spec())?.is_minimal_zero_sum(&lift.lifted)
}

/// Size-`take` sub-multiset of `xs` with sum `≡ target (mod n)`?
fn has_sub_multiset_sum(xs: &[u32], take: usize, target: u32, n: u32) -> bool {
    let n = n as usize;
    let mut reach = vec![vec![false; n]; take + 1];
    reach[0][0] = true;
    for &x in xs {
        for c in (1..=take).rev() {
            for r in 0..n {
                if reach[c - 1][r] {
                    reach[c][(r + x as usize) % n] = true;
                }
            }
        }
    }
    reach[take][target as usize % n]
}

/// Checks one instance of the reduction from the coset shape
/// `e1^[n-1]·∏_{i∈[1,n+k-1]}(x_i e1 + e2)` (some `n` of the `x_i` summing to
/// 1 mod n) without zero-sums of length `≤ 2n-1-k` to the main template with
/// the same `e1`.
///
/// Returns true iff every `e1` realising the shape admits a basis `(e1, f2)`
/// with `s = e1^[n-1]·f2^[n-1]·(e1+f2)^[k]`. Fails with a precondition error
/// when no `e1` realises the shape or when `s` has a short zero-sum.
pub fn check_coset_reduction(s: &Sequence, k: u32) -> Result<bool> {
    let n = require_rank2_homocyclic(s)?;
    let spec = s.spec();
    if k < 2 || k + 2 > n {
        return Err(Error::OutOfRange(format!("k = {k} outside [2, {}]", n as i64 - 2)));
    }
    if s.len() != (2 * n - 2 + k) as usize {
        return Err(Error::Precondition(format!("|S| must be {}", 2 * n - 2 + k)));
    }
    let mut shaped = Vec::new();
    for e1 in elements_with_multiplicity(s, n - 1) {
        let rest = s.remove(&Sequence::repeated(spec, &e1, n - 1)?)?;
        let e2 = rest.terms().next().unwrap().0.clone();
        if !is_basis(spec, &[e1.clone(), e2.clone()]) {
            continue;
        }
        if let Some(xs) = coset_coefficients(spec, &e1, &e2, &rest) {
            if has_sub_multiset_sum(&xs, n as usize, 1, n) {
                shaped.push(e1);
            }
        }
    }
    if shaped.is_empty() {
        return Err(Error::Precondition(
            "sequence is not of the form e1^[n-1]·∏(x_i e1 + e2) with n of the x_i summing to 1".into(),
        ));
    }
    let engine = ZeroSumEngine::new(spec)?;
    if engine.has_short_zero_sum(s, (2 * n - 1 - k) as usize)? {
        return Err(Error::Precondition(format!(
            "sequence has a nonempty zero-sum of length ≤ {}",
            2 * n - 1 - k
        )));
    }
    for e1 in &shaped {
        if find_main_basis(s, k, Some(e1))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `x` parameters in the `[1, n]` convention.
pub fn one_based_x(m: &FormMatch, n: u32) -> Option<Vec<u32>> {
    m.param_u32s("x").map(|xs| to_one_based(&xs, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zerosum::{is_minimal_zero_sum, shortest_nonempty_zero_sum};

    fn seq(s: &str) -> Sequence {
        s.parse().unwrap()
    }

    fn basis(m: &FormMatch) -> Vec<Vec<u32>> {
        m.basis_witness
            .as_ref()
            .unwrap()
            .iter()
            .map(|g| g.coeffs().to_vec())
            .collect()
    }

    #[test]
    fn main_form_examples() {
        let s = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2");
        let m = match_main_form(&s, 2).unwrap();
        assert!(m.matched);
        assert_eq!(basis(&m), vec![vec![1, 0], vec![0, 1]]);
        assert!(m.witness_reproduces(&s));

        let s = seq("C5xC5 | (2,0)^4 (0,3)^4 (2,3)^2");
        let m = match_main_form(&s, 2).unwrap();
        assert!(m.matched);
        assert_eq!(basis(&m), vec![vec![2, 0], vec![0, 3]]);
        assert!(m.witness_reproduces(&s));

        let s = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,2)^2");
        assert!(!match_main_form(&s, 2).unwrap().matched);
        let short = seq("C5xC5 | (1,0)^3 (1,2)^2 (0,1)");
        assert!(short.sigma().is_zero());
        assert!(short.is_subsequence_of(&s));
    }

    #[test]
    fn main_form_implies_shortest_zero_sum() {
        for (text, k) in [
            ("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2", 2),
            ("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^3", 3),
            ("C7xC7 | (3,1)^6 (1,1)^6 (4,2)^4", 4),
        ] {
            let s = seq(text);
            assert!(match_main_form(&s, k).unwrap().matched, "{text}");
            let n = s.spec().exponent();
            assert_eq!(shortest_nonempty_zero_sum(&s).unwrap(), Some((2 * n - k) as usize));
        }
    }

    #[test]
    fn main_form_precondition() {
        let s = seq("C5xC5 | (1,0)");
        assert!(match_main_form(&s, 1).is_err());
        assert!(match_main_form(&s, 4).is_err());
        assert!(match_main_form(&seq("C5xC5xC5 | (1,0,0)"), 2).is_err());
        assert!(!match_main_form(&s, 2).unwrap().matched);
    }

    #[test]
    fn property_b_examples() {
        let s = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)");
        let m = match_property_b_form(&s).unwrap();
        assert!(m.matched);
        assert_eq!(m.parameters["x"], json!([0, 0, 0, 0, 1]));
        assert!(m.witness_reproduces(&s));
        assert!(is_minimal_zero_sum(&s).unwrap());

        let s = seq("C3xC3 | (1,0)^2 (0,1)^2 (1,1)");
        let m = match_property_b_form(&s).unwrap();
        assert!(m.matched);
        assert_eq!(m.parameters["x"], json!([0, 0, 1]));

        assert!(!match_property_b_form(&seq("C5xC5 | (0,0)^9")).unwrap().matched);
    }

    #[test]
    fn conjecture_examples() {
        let s = seq("C5xC5 | (1,0)^4 (0,1)^4 (2,1)^4");
        let m = match_conjecture_form(&s, 4).unwrap();
        assert!(m.matched);
        assert_eq!(m.form_name, FormName::ConjectureKn1);
        assert_eq!(m.parameters["x"], json!(2));
        assert!(m.witness_reproduces(&s));

        // k = 0: a zero-sum free sequence of length 2n-2 that extends to the k = 1 form
        let s = seq("C5xC5 | (1,0)^4 (0,1)^3 (1,1)");
        let m = match_conjecture_form(&s, 0).unwrap();
        assert!(m.matched);
        assert_eq!(m.form_name, FormName::ConjectureK0);
        assert!(m.witness_reproduces(&s));

        // Σ x = 2: not of the k = 1 form
        let s = seq("C5xC5 | (1,0)^4 (0,1)^3 (1,1)^2");
        assert!(!match_conjecture_form(&s, 1).unwrap().matched);

        let s = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^3");
        let m = match_conjecture_form(&s, 3).unwrap();
        assert!(m.matched && m.form_name == FormName::ConjectureMid);
    }

    #[test]
    fn rank3_examples() {
        let s = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2");
        let lift = lift_sequence(&s, 2).unwrap();
        let m = match_rank3_form(&lift.lifted).unwrap();
        assert!(m.matched);
        assert!(m.witness_reproduces(&lift.lifted));

        let heavy = seq("C5xC5xC5 | (1,0,0)^5 (0,1,0)^4 (0,0,1)^4");
        assert!(!match_rank3_form(&heavy).unwrap().matched);

        let nonzero = seq("C5xC5xC5 | (1,0,0)^4 (0,1,0)^4 (0,0,1)^5");
        assert!(!nonzero.sigma().is_zero());
        assert!(!match_rank3_form(&nonzero).unwrap().matched);
    }

    #[test]
    fn lift_examples() {
        let s = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2");
        let lift = lift_sequence(&s, 2).unwrap();
        assert_eq!(
            lift.lifted,
            seq("C5xC5xC5 | (1,0,1)^4 (0,1,1)^4 (1,1,1)^2 (0,0,4)^2 (4,4,2)")
        );
        assert_eq!(lift.lifted.len(), 13);
        assert!(lift.lifted.sigma().is_zero());
        assert_eq!(lift.parts[0], seq("C5xC5xC5 | (1,0,1)^4"));
        assert_eq!(lift.parts[1], seq("C5xC5xC5 | (0,1,1)^4 (1,1,1)^2"));
        assert!(lift.parts[2].is_empty());
        assert_eq!(lift.parts[3], seq("C5xC5xC5 | (0,0,4)^2"));
        assert_eq!(lift.parts[4], seq("C5xC5xC5 | (4,4,2)"));

        assert!(lift_sequence(&seq("C5xC5 | (1,0)"), 2).is_err());
    }

    #[test]
    fn lift_minimal_examples() {
        assert!(verify_lift_minimal(&seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2"), 2).unwrap());
        assert!(verify_lift_minimal(&seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^3"), 3).unwrap());
        // hypothesis violated: still evaluated
        let bad = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,2)^2");
        assert!(!verify_lift_minimal(&bad, 2).unwrap());
    }

    #[test]
    fn coset_reduction_examples() {
        assert!(check_coset_reduction(&seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2"), 2).unwrap());
        let s = seq("C5xC5 | (1,0)^4 (1,1)^4 (2,1)^2");
        assert!(!has_short(&s, 7));
        assert!(check_coset_reduction(&s, 2).unwrap());
        assert!(matches!(
            check_coset_reduction(&seq("C5xC5 | (1,0)^3 (0,1)^5 (1,1)^2"), 2),
            Err(Error::Precondition(_))
        ));
    }

    fn has_short(s: &Sequence, k: usize) -> bool {
        crate::zerosum::has_short_zero_sum(s, k).unwrap()
    }

    #[test]
    fn form_names_round_trip() {
        for f in FormName::ALL {
            assert_eq!(f.as_str().parse::<FormName>().unwrap(), f);
            assert_eq!(serde_json::to_value(f).unwrap(), json!(f.as_str()));
        }
    }
}
