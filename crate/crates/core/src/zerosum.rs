//! Zero-sum decision, exact counting and witness extraction.
//!
//! Every routine runs the same per-element dynamic programme: distinct
//! terms are taken in increasing element order, and a term `h` of
//! multiplicity `m` contributes `j` copies for each `j ∈ [0, m]`. Counting
//! weights the `j`-copy contribution by `C(m, j)`, so `N^ℓ(S)` counts index
//! sets (positions), not distinct sub-multisets.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::sequence::Sequence;

/// Largest group handled by the counting path.
pub const MAX_COUNTING_ORDER: usize = 512;

/// Exact zero-sum counts `counts[i] = N^i(S)` for `i ∈ [0, |S|]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSumProfile {
    counts: Vec<BigUint>,
    mod_p_view: Option<(u32, Vec<u32>)>,
}

impl ZeroSumProfile {
    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `N^i(S)`, zero beyond `|S|`.
    pub fn get(&self, i: usize) -> BigUint {
        self.counts.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero_at(&self, i: usize) -> bool {
        self.counts.get(i).is_none_or(Zero::is_zero)
    }

    /// Attaches the residues of every count modulo `p`.
    pub fn with_mod_p(mut self, p: u32) -> Self {
        let view = self
            .counts
            .iter()
            .map(|c| (c % p).to_u32().unwrap())
            .collect();
        self.mod_p_view = Some((p, view));
        self
    }

    pub fn mod_p_view(&self) -> Option<(u32, &[u32])> {
        self.mod_p_view.as_ref().map(|(p, v)| (*p, v.as_slice()))
    }

    /// `Σ (-1)^i N^i(S) mod m`.
    pub fn alternating_sum_mod(&self, m: u32) -> u32 {
        let m64 = m as u64;
        self.counts.iter().enumerate().fold(0u64, |acc, (i, c)| {
            let r = (c % m).to_u64().unwrap();
            if i % 2 == 0 {
                (acc + r) % m64
            } else {
                (acc + m64 - r) % m64
            }
        }) as u32
    }

    pub fn to_json(&self) -> ProfileJson {
        ProfileJson {
            length: self.length(),
            counts: self.counts.iter().map(|c| c.to_string()).collect(),
        }
    }
}

/// Wire form of a profile; counts are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub length: usize,
    pub counts: Vec<String>,
}

/// `reach[ℓ][g]` is true iff some `ℓ`-term subsequence sums to `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReachTable {
    spec: GroupSpec,
    rows: Vec<Vec<bool>>,
}

impl ReachTable {
    pub fn max_len(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn contains(&self, len: usize, g: &GroupElement) -> bool {
        self.rows
            .get(len)
            .is_some_and(|row| row[self.spec.index_of(g)])
    }

    /// `Σ_ℓ(S)`.
    pub fn sums_of_length(&self, len: usize) -> BTreeSet<GroupElement> {
        self.rows.get(len).map_or_else(BTreeSet::new, |row| {
            row.iter()
                .enumerate()
                .filter(|(_, &r)| r)
                .map(|(i, _)| self.spec.element_at(i))
                .collect()
        })
    }

    /// `Σ_{≤k}(S)`, lengths `1..=k`.
    pub fn sums_up_to(&self, k: usize) -> BTreeSet<GroupElement> {
        (1..=k.min(self.max_len()))
            .flat_map(|l| self.sums_of_length(l))
            .collect()
    }

    /// Smallest `ℓ ≥ 1` in the table with `0 ∈ Σ_ℓ(S)`.
    pub fn first_zero_length(&self) -> Option<usize> {
        (1..self.rows.len()).find(|&l| self.rows[l][0])
    }

    fn row(&self, len: usize) -> &[bool] {
        &self.rows[len]
    }
}

/// Group tables shared by the zero-sum routines.
#[derive(Clone, Debug)]
pub struct ZeroSumEngine {
    spec: GroupSpec,
    order: usize,
    add: Vec<u16>,
}

impl ZeroSumEngine {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let order = spec.order();
        if order > MAX_COUNTING_ORDER {
            return Err(Error::UnsupportedSpec {
                group: spec.to_string(),
                reason: format!("zero-sum engine supports |G| ≤ {MAX_COUNTING_ORDER}"),
            });
        }
        let elems: Vec<_> = spec.elements().collect();
        let mut add = vec![0u16; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * order + j] = spec.index_of(&spec.add_unchecked(a, b)) as u16;
            }
        }
        Ok(ZeroSumEngine { spec: spec.clone(), order, add })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    fn check(&self, s: &Sequence) -> Result<()> {
        if s.spec() == &self.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: s.spec().to_string(),
            })
        }
    }

    #[inline]
    fn sum(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    /// `[0·h, 1·h, …, m·h]` as indices.
    fn multiples(&self, h: usize, m: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(m + 1);
        out.push(0);
        for j in 1..=m {
            out.push(self.sum(out[j - 1], h));
        }
        out
    }

    fn indexed_terms(&self, s: &Sequence) -> Vec<(usize, usize)> {
        s.terms()
            .map(|(g, m)| (self.spec.index_of(g), m as usize))
            .collect()
    }

    /// Folds one distinct term into a boolean table of lengths `0..=max_len`.
    fn reach_step(&self, prev: &[Vec<bool>], h: usize, m: usize) -> Vec<Vec<bool>> {
        let max_len = prev.len() - 1;
        let mults = self.multiples(h, m.min(max_len));
        let mut next = vec![vec![false; self.order]; max_len + 1];
        for (len, row) in prev.iter().enumerate() {
            for (g, _) in row.iter().enumerate().filter(|(_, &r)| r) {
                for (j, &jh) in mults.iter().enumerate().take(max_len - len + 1) {
                    next[len + j][self.sum(g, jh)] = true;
                }
            }
        }
        next
    }

    fn empty_reach(&self, max_len: usize) -> Vec<Vec<bool>> {
        let mut rows = vec![vec![false; self.order]; max_len + 1];
        rows[0][0] = true;
        rows
    }

    pub fn reach_table(&self, s: &Sequence, k: usize) -> Result<ReachTable> {
        self.check(s)?;
        if k > s.len() {
            return Err(Error::Precondition(format!(
                "reach table length {k} exceeds |S| = {}",
                s.len()
            )));
        }
        let mut rows = self.empty_reach(k);
        for (h, m) in self.indexed_terms(s) {
            rows = self.reach_step(&rows, h, m);
        }
        Ok(ReachTable { spec: self.spec.clone(), rows })
    }

    /// `0 ∈ Σ_{≤k}(S)`.
    pub fn has_short_zero_sum(&self, s: &Sequence, k: usize) -> Result<bool> {
        let table = self.reach_table(s, k.min(s.len()))?;
        Ok(table.first_zero_length().is_some())
    }

    pub fn shortest_nonempty_zero_sum(&self, s: &Sequence) -> Result<Option<usize>> {
        Ok(self.reach_table(s, s.len())?.first_zero_length())
    }

    /// Counts of subsequences (as index sets) by length and sum.
    pub fn subsum_counts(&self, s: &Sequence) -> Result<SubsumCounts> {
        self.check(s)?;
        let terms = self.indexed_terms(s);
        let len = s.len();
        let table = if len <= 126 {
            let t = self.count_dp::<u128>(&terms, len, binomial_row_u128);
            t.into_iter().map(BigUint::from).collect()
        } else {
            self.count_dp::<BigUint>(&terms, len, binomial_row_big)
        };
        Ok(SubsumCounts { spec: self.spec.clone(), order: self.order, table })
    }

    fn count_dp<T>(&self, terms: &[(usize, usize)], len: usize, binom: impl Fn(usize) -> Vec<T>) -> Vec<T>
    where
        T: Clone + Zero + One + for<'a> std::ops::AddAssign<&'a T>,
        for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
    {
        let width = self.order;
        let mut cur = vec![T::zero(); (len + 1) * width];
        cur[0] = T::one();
        let mut filled = 0;
        for &(h, m) in terms {
            let mults = self.multiples(h, m);
            let weights = binom(m);
            let mut next = vec![T::zero(); (len + 1) * width];
            for l in 0..=filled {
                for g in 0..width {
                    let c = &cur[l * width + g];
                    if c.is_zero() {
                        continue;
                    }
                    for j in 0..=m {
                        let target = (l + j) * width + self.sum(g, mults[j]);
                        next[target] += &(&weights[j] * c);
                    }
                }
            }
            filled += m;
            cur = next;
        }
        cur
    }

    pub fn count_zero_sums(&self, s: &Sequence) -> Result<ZeroSumProfile> {
        let table = self.subsum_counts(s)?;
        let counts = (0..=s.len()).map(|l| table.table[l * self.order].clone()).collect();
        Ok(ZeroSumProfile { counts, mod_p_view: None })
    }

    /// `N^i(S) mod p` without big integers.
    pub fn count_zero_sums_mod(&self, s: &Sequence, p: u32) -> Result<Vec<u32>> {
        self.check(s)?;
        if p < 2 {
            return Err(Error::OutOfRange(format!("modulus {p} < 2")));
        }
        let p64 = p as u64;
        let width = self.order;
        let len = s.len();
        let mut cur = vec![0u64; (len + 1) * width];
        cur[0] = 1 % p64;
        let mut filled = 0;
        for (h, m) in self.indexed_terms(s) {
            let mults = self.multiples(h, m);
            let weights = pascal_row_mod(m, p64);
            let mut next = vec![0u64; (len + 1) * width];
            for l in 0..=filled {
                for g in 0..width {
                    let c = cur[l * width + g];
                    if c == 0 {
                        continue;
                    }
                    for j in 0..=m {
                        let target = (l + j) * width + self.sum(g, mults[j]);
                        next[target] = (next[target] + weights[j] * c) % p64;
                    }
                }
            }
            filled += m;
            cur = next;
        }
        Ok((0..=len).map(|l| cur[l * width] as u32).collect())
    }

    /// `Σ_{i=0}^{|S|} (-1)^i N^i(S) mod p` for a `p`-group.
    pub fn olson_alternating_check(&self, s: &Sequence, p: u32) -> Result<u32> {
        if self.spec.p_group_prime() != Some(p) {
            return Err(Error::UnsupportedSpec {
                group: self.spec.to_string(),
                reason: format!("not a {p}-group"),
            });
        }
        let residues = self.count_zero_sums_mod(s, p)?;
        Ok(residues.iter().enumerate().fold(0, |acc, (i, &r)| {
            if i % 2 == 0 {
                (acc + r) % p
            } else {
                (acc + p - r) % p
            }
        }))
    }

    pub fn is_minimal_zero_sum(&self, s: &Sequence) -> Result<bool> {
        self.check(s)?;
        if s.is_empty() || !s.sigma().is_zero() {
            return Ok(false);
        }
        let table = self.reach_table(s, s.len() - 1)?;
        Ok(table.first_zero_length().is_none())
    }

    /// `|Σ(S)|` over nonempty index sets.
    pub fn subsum_set_size(&self, s: &Sequence) -> Result<usize> {
        self.check(s)?;
        // reached[g]: g is a sum of a nonempty subsequence
        let mut reached = vec![false; self.order];
        for (h, m) in self.indexed_terms(s) {
            let mults = self.multiples(h, m);
            let prev = reached.clone();
            for &jh in &mults[1..] {
                reached[jh] = true;
                for (g, _) in prev.iter().enumerate().filter(|(_, &r)| r) {
                    reached[self.sum(g, jh)] = true;
                }
            }
        }
        Ok(reached.iter().filter(|&&r| r).count())
    }

    /// A zero-sum subsequence with exactly `len` terms, if one exists.
    pub fn extract_witness(&self, s: &Sequence, len: usize) -> Result<Option<Sequence>> {
        self.check(s)?;
        if len > s.len() {
            return Ok(None);
        }
        let terms = self.indexed_terms(s);
        let mut stages = vec![self.empty_reach(len)];
        for &(h, m) in &terms {
            let next = self.reach_step(stages.last().unwrap(), h, m);
            stages.push(next);
        }
        if !stages.last().unwrap()[len][0] {
            return Ok(None);
        }
        let mut witness = Sequence::empty(&self.spec);
        let (mut l, mut g) = (len, 0usize);
        for (i, &(h, m)) in terms.iter().enumerate().rev() {
            let prev = &stages[i];
            let mults = self.multiples(h, m.min(l));
            // Prefer the largest admissible number of copies.
            let (j, rest) = mults
                .iter()
                .enumerate()
                .rev()
                .map(|(j, &jh)| (j, self.sum(g, self.neg_index(jh))))
                .find(|&(j, rest)| prev[l - j][rest])
                .expect("reach table is consistent");
            witness.push(self.spec.element_at(h), j as u32)?;
            l -= j;
            g = rest;
        }
        debug_assert_eq!((l, g), (0, 0));
        Ok(Some(witness))
    }

    fn neg_index(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.sum(a, b) == 0).unwrap()
    }
}

/// Table of `|{I : |I| = ℓ, Σ_{i∈I} g_i = g}|`.
#[derive(Clone, Debug)]
pub struct SubsumCounts {
    spec: GroupSpec,
    order: usize,
    table: Vec<BigUint>,
}

impl SubsumCounts {
    pub fn get(&self, len: usize, g: &GroupElement) -> BigUint {
        let idx = len * self.order + self.spec.index_of(g);
        self.table.get(idx).cloned().unwrap_or_default()
    }
}

impl ReachTable {
    /// True iff `self` and `counts` agree on which cells are nonzero.
    pub fn agrees_with(&self, counts: &SubsumCounts) -> bool {
        (0..=self.max_len()).all(|l| {
            self.row(l).iter().enumerate().all(|(g, &r)| {
                r == !counts.table[l * counts.order + g].is_zero()
            })
        })
    }
}

fn binomial_row_u128(m: usize) -> Vec<u128> {
    let mut row = vec![1u128; m + 1];
    for j in 1..=m {
        row[j] = row[j - 1] * (m - j + 1) as u128 / j as u128;
    }
    row
}

fn binomial_row_big(m: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one(); m + 1];
    for j in 1..=m {
        row[j] = &row[j - 1] * BigUint::from(m - j + 1) / BigUint::from(j);
    }
    row
}

fn pascal_row_mod(m: usize, p: u64) -> Vec<u64> {
    let mut row = vec![0u64; m + 1];
    row[0] = 1 % p;
    for i in 1..=m {
        for j in (1..=i).rev() {
            row[j] = (row[j] + row[j - 1]) % p;
        }
    }
    row
}

// Convenience wrappers that build a fresh engine for the sequence's group.

pub fn reach_table(s: &Sequence, k: usize) -> Result<ReachTable> {
    ZeroSumEngine::new(s.spec())?.reach_table(s, k)
}

pub fn has_short_zero_sum(s: &Sequence, k: usize) -> Result<bool> {
    ZeroSumEngine::new(s.spec())?.has_short_zero_sum(s, k)
}

pub fn shortest_nonempty_zero_sum(s: &Sequence) -> Result<Option<usize>> {
    ZeroSumEngine::new(s.spec())?.shortest_nonempty_zero_sum(s)
}

pub fn count_zero_sums(s: &Sequence) -> Result<ZeroSumProfile> {
    ZeroSumEngine::new(s.spec())?.count_zero_sums(s)
}

pub fn olson_alternating_check(s: &Sequence, p: u32) -> Result<u32> {
    ZeroSumEngine::new(s.spec())?.olson_alternating_check(s, p)
}

pub fn is_minimal_zero_sum(s: &Sequence) -> Result<bool> {
    ZeroSumEngine::new(s.spec())?.is_minimal_zero_sum(s)
}

pub fn subsum_set_size(s: &Sequence) -> Result<usize> {
    ZeroSumEngine::new(s.spec())?.subsum_set_size(s)
}

pub fn extract_witness(s: &Sequence, len: usize) -> Result<Option<Sequence>> {
    ZeroSumEngine::new(s.spec())?.extract_witness(s, len)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequence {
        s.parse().unwrap()
    }

    fn extremal() -> Sequence {
        seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^2")
    }

    /// Enumerates all 2^|S| index sets.
    fn brute_counts(s: &Sequence) -> Vec<u64> {
        let spec = s.spec();
        let terms = s.expanded();
        let mut counts = vec![0u64; terms.len() + 1];
        for mask in 0u32..(1 << terms.len()) {
            let sum = terms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(spec.zero(), |acc, (_, g)| spec.add(&acc, g).unwrap());
            if sum.is_zero() {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts
    }

    #[test]
    fn reach_examples() {
        let s = extremal();
        let t = reach_table(&s, 7).unwrap();
        let zero = s.spec().zero();
        assert!((1..=7).all(|l| !t.contains(l, &zero)));
        assert!(t.contains(0, &zero));

        let t8 = reach_table(&s, 8).unwrap();
        assert!(t8.contains(8, &zero));

        let single = seq("C5xC5 | (2,3)");
        let t1 = reach_table(&single, 1).unwrap();
        assert_eq!(
            t1.sums_of_length(1).into_iter().collect::<Vec<_>>(),
            vec![single.spec().element(&[2, 3]).unwrap()]
        );
    }

    #[test]
    fn reach_table_rejects_long_k() {
        assert!(reach_table(&seq("C5xC5 | (1,0)"), 2).is_err());
    }

    #[test]
    fn shortest_examples() {
        assert_eq!(shortest_nonempty_zero_sum(&extremal()).unwrap(), Some(8));
        assert_eq!(shortest_nonempty_zero_sum(&seq("C5xC5 | (0,0)")).unwrap(), Some(1));
        assert_eq!(shortest_nonempty_zero_sum(&seq("C3xC3 | (1,0)^2 (0,1)")).unwrap(), None);
        assert!(!has_short_zero_sum(&extremal(), 7).unwrap());
        assert!(has_short_zero_sum(&extremal(), 8).unwrap());
        assert!(has_short_zero_sum(&extremal(), 50).unwrap());
    }

    #[test]
    fn brute_force_agrees_on_extremal() {
        let s = extremal();
        assert_eq!(brute_counts(&s)[8], 16);
        assert_eq!(brute_counts(&s)[9], 2);
        let k3 = seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)^3");
        let brute = brute_counts(&k3);
        assert_eq!(brute[9], 3);
        assert_eq!(brute[10], 0);
    }

    #[test]
    fn count_examples() {
        let p = count_zero_sums(&extremal()).unwrap();
        assert_eq!(p.length(), 10);
        assert_eq!(p.get(0), BigUint::one());
        assert_eq!(p.get(8), BigUint::from(16u32));
        assert_eq!(p.get(9), BigUint::from(2u32));
        assert!((1..=7).all(|i| p.is_zero_at(i)));
        assert_eq!(p.to_json().counts[9], "2");
    }

    #[test]
    fn count_matches_brute_force_small() {
        for text in [
            "C3xC3 | (1,0)^2 (0,1)^2 (1,1) (2,2)^3",
            "C2xC2xC2 | (1,0,0)^3 (0,1,1)^2 (1,1,1) (0,0,0)",
            "C4xC4 | (2,2)^2 (1,3) (3,1)^2 (0,2)",
        ] {
            let s = seq(text);
            let got: Vec<u64> = count_zero_sums(&s)
                .unwrap()
                .counts()
                .iter()
                .map(|c| c.to_u64().unwrap())
                .collect();
            assert_eq!(got, brute_counts(&s), "{text}");
        }
    }

    #[test]
    fn large_counts_use_exact_arithmetic() {
        // 0^[130]: N^i = C(130, i), beyond u128 only in aggregate, but the
        // BigUint path is exercised for |S| > 126.
        let s = seq("C2 | (0)^130");
        let p = count_zero_sums(&s).unwrap();
        let expected = binomial_row_big(130);
        assert_eq!(p.counts(), expected.as_slice());
    }

    #[test]
    fn mod_p_path_agrees() {
        let s = seq("C3xC3 | (1,0)^4 (0,1)^3 (1,1)^2 (2,1)");
        let exact = count_zero_sums(&s).unwrap().with_mod_p(3);
        let fast = ZeroSumEngine::new(s.spec()).unwrap().count_zero_sums_mod(&s, 3).unwrap();
        assert_eq!(exact.mod_p_view().unwrap().1, fast.as_slice());
    }

    #[test]
    fn olson_examples() {
        assert_eq!(olson_alternating_check(&seq("C2xC2 | (1,0) (0,1) (1,1)"), 2).unwrap(), 0);
        assert_eq!(olson_alternating_check(&seq("C5xC5 | (0,0)^9"), 5).unwrap(), 0);
        assert!(matches!(
            olson_alternating_check(&seq("C6 | (1)"), 2),
            Err(Error::UnsupportedSpec { .. })
        ));
        assert!(olson_alternating_check(&seq("C5xC5 | (1,0)"), 3).is_err());
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal_zero_sum(&seq("C4xC4 | (1,0)^4")).unwrap());
        assert!(is_minimal_zero_sum(&seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)")).unwrap());
        assert!(!is_minimal_zero_sum(&seq("C5xC5 | (0,0)^2")).unwrap());
        assert!(is_minimal_zero_sum(&seq("C5xC5 | (0,0)")).unwrap());
        assert!(!is_minimal_zero_sum(&seq("C5xC5 |")).unwrap());
        assert!(!is_minimal_zero_sum(&seq("C5xC5 | (1,0)^4")).unwrap());
    }

    #[test]
    fn subsum_set_examples() {
        assert_eq!(subsum_set_size(&seq("C3xC3 | (1,0)^2 (0,1)")).unwrap(), 5);
        assert_eq!(subsum_set_size(&seq("C3xC3 | (2,1)")).unwrap(), 1);
        assert_eq!(subsum_set_size(&seq("C2xC2 | (1,0) (0,1)")).unwrap(), 3);
        assert_eq!(subsum_set_size(&seq("C2xC2 |")).unwrap(), 0);
    }

    #[test]
    fn witness_examples() {
        let s = extremal();
        let w = extract_witness(&s, 9).unwrap().unwrap();
        assert_eq!(w, seq("C5xC5 | (1,0)^4 (0,1)^4 (1,1)"));
        assert!(w.sigma().is_zero() && w.is_subsequence_of(&s));
        assert_eq!(extract_witness(&s, 7).unwrap(), None);
        assert_eq!(extract_witness(&s, 0).unwrap(), Some(Sequence::empty(s.spec())));
        assert_eq!(extract_witness(&s, 11).unwrap(), None);

        let w8 = extract_witness(&s, 8).unwrap().unwrap();
        assert_eq!(w8, seq("C5xC5 | (1,0)^3 (0,1)^3 (1,1)^2"));
    }

    #[test]
    fn reach_agrees_with_counts() {
        let s = seq("C3xC3 | (1,0)^2 (0,1)^2 (1,2) (2,2)^2");
        let engine = ZeroSumEngine::new(s.spec()).unwrap();
        let reach = engine.reach_table(&s, s.len()).unwrap();
        let counts = engine.subsum_counts(&s).unwrap();
        assert!(reach.agrees_with(&counts));
    }

    #[test]
    fn counting_rejects_big_groups() {
        let spec: GroupSpec = "C9xC9xC9".parse().unwrap();
        assert!(matches!(ZeroSumEngine::new(&spec), Err(Error::UnsupportedSpec { .. })));
    }
}
