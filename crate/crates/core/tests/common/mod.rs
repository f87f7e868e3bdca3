//! Brute-force oracles and random generators shared by integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use zslab::{Automorphism, GroupElement, GroupSpec, Sequence};

/// `N^i(S)` for every `i`, by summing all `2^|S|` index sets.
pub fn brute_counts(s: &Sequence) -> Vec<u64> {
    let spec = s.spec();
    let terms: Vec<usize> = s.expanded().iter().map(|g| spec.index_of(g)).collect();
    let order = spec.order();
    let add: Vec<usize> = (0..order * order)
        .map(|ab| {
            let (a, b) = (spec.element_at(ab / order), spec.element_at(ab % order));
            spec.index_of(&spec.add(&a, &b).unwrap())
        })
        .collect();
    let zero = spec.index_of(&spec.zero());
    let n = terms.len();
    let mut sums = vec![zero; 1 << n];
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = add[sums[mask & (mask - 1)] * order + terms[low]];
        if sums[mask] == zero {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Σ(S) over nonempty index sets.
pub fn brute_subsums(s: &Sequence) -> BTreeSet<GroupElement> {
    let spec = s.spec();
    let terms = s.expanded();
    let mut out = BTreeSet::new();
    for mask in 1usize..1 << terms.len() {
        let mut acc = spec.zero();
        for (i, t) in terms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                acc = spec.add(&acc, t).unwrap();
            }
        }
        out.insert(acc);
    }
    out
}

pub fn random_element(rng: &mut impl Rng, spec: &GroupSpec) -> GroupElement {
    spec.element_at(rng.gen_range(0..spec.order()))
}

pub fn random_sequence(rng: &mut impl Rng, spec: &GroupSpec, len: usize) -> Sequence {
    let elems: Vec<_> = (0..len).map(|_| random_element(rng, spec)).collect();
    Sequence::from_elements(spec, &elems).unwrap()
}

/// Random invertible matrix, by rejection.
pub fn random_automorphism(rng: &mut impl Rng, spec: &GroupSpec) -> Automorphism {
    loop {
        let cols: Vec<_> = (0..spec.rank()).map(|_| random_element(rng, spec)).collect();
        if let Some(a) = Automorphism::from_basis(spec, &cols).unwrap() {
            return a;
        }
    }
}

/// Zero-sum free sequence of length `len`: terms are drawn one at a time
/// and redrawn when they would close a zero-sum. `None` after too many
/// rejections.
pub fn random_zero_sum_free(rng: &mut impl Rng, spec: &GroupSpec, len: usize) -> Option<Sequence> {
    'restart: for _ in 0..50 {
        let mut s = Sequence::empty(spec);
        let mut sums: BTreeSet<GroupElement> = BTreeSet::new();
        while s.len() < len {
            let mut tries = 0;
            let g = loop {
                let g = random_element(rng, spec);
                if !g.is_zero() && !sums.contains(&spec.neg(&g)) {
                    break g;
                }
                tries += 1;
                if tries > 200 {
                    continue 'restart;
                }
            };
            let shifted: Vec<_> = sums.iter().map(|x| spec.add(x, &g).unwrap()).collect();
            sums.extend(shifted);
            sums.insert(g.clone());
            s.push(g, 1).unwrap();
        }
        return Some(s);
    }
    None
}

/// Every multiset of `len` elements, in nondecreasing index order.
pub fn all_multisets(spec: &GroupSpec, len: usize) -> Vec<Sequence> {
    fn rec(spec: &GroupSpec, start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Sequence>) {
        if left == 0 {
            let elems: Vec<_> = cur.iter().map(|&i| spec.element_at(i)).collect();
            out.push(Sequence::from_elements(spec, &elems).unwrap());
            return;
        }
        for x in start..spec.order() {
            cur.push(x);
            rec(spec, x, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(spec, 0, len, &mut Vec::new(), &mut out);
    out
}
