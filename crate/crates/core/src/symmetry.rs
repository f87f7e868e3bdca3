//! Automorphism action on element indices and canonical forms of multisets.
//!
//! A multiset is represented here as its nondecreasing list of element
//! indices. The canonical form of an orbit is its lexicographically least
//! member under that representation.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::group::{enumerate_automorphisms, Automorphism, GroupSpec};
use crate::sequence::Sequence;

/// Automorphism groups larger than this are streamed instead of tabulated.
pub const MAX_TABULATED_AUTOMORPHISMS: usize = 200_000;

/// Every automorphism of a homocyclic group as a permutation of indices.
#[derive(Clone, Debug)]
pub struct SymmetryTable {
    spec: GroupSpec,
    order: usize,
    auts: Vec<Automorphism>,
    /// `perms[a * order + x]` = index of `auts[a](x)`.
    perms: Vec<u16>,
    orbit_min: Vec<u16>,
    /// `to[(y * order + t)]` = automorphisms sending `y` to `t`.
    to: Vec<Vec<u32>>,
}

impl SymmetryTable {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let iter = enumerate_automorphisms(spec)?;
        let order = spec.order();
        let elems: Vec<_> = spec.elements().collect();
        let mut auts = Vec::new();
        let mut perms = Vec::new();
        for a in iter {
            if auts.len() >= MAX_TABULATED_AUTOMORPHISMS {
                return Err(Error::UnsupportedSpec {
                    group: spec.to_string(),
                    reason: format!(
                        "more than {MAX_TABULATED_AUTOMORPHISMS} automorphisms; use streaming canonicalization"
                    ),
                });
            }
            perms.extend(elems.iter().map(|x| spec.index_of(&a.apply(x)) as u16));
            auts.push(a);
        }
        let mut orbit_min: Vec<u16> = (0..order as u16).collect();
        let mut to = vec![Vec::new(); order * order];
        for a in 0..auts.len() {
            for x in 0..order {
                let y = perms[a * order + x];
                orbit_min[x] = orbit_min[x].min(y);
                to[x * order + y as usize].push(a as u32);
            }
        }
        Ok(SymmetryTable { spec: spec.clone(), order, auts, perms, orbit_min, to })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.auts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.auts.is_empty()
    }

    pub fn automorphism(&self, a: usize) -> &Automorphism {
        &self.auts[a]
    }

    #[inline]
    pub fn image(&self, a: usize, x: u16) -> u16 {
        self.perms[a * self.order + x as usize]
    }

    pub fn orbit_min(&self, x: u16) -> u16 {
        self.orbit_min[x as usize]
    }

    fn image_sorted(&self, a: usize, terms: &[u16], out: &mut Vec<u16>) {
        out.clear();
        out.extend(terms.iter().map(|&x| self.image(a, x)));
        out.sort_unstable();
    }

    /// True iff no automorphism maps the sorted list `terms` to a smaller
    /// sorted list. Every prefix of a canonical list passes this test.
    pub fn is_orbit_minimal(&self, terms: &[u16], scratch: &mut Vec<u16>) -> bool {
        let Some(&first) = terms.first() else {
            return true;
        };
        let mut last = u16::MAX;
        for &y in terms {
            if y == last {
                continue;
            }
            last = y;
            if self.orbit_min[y as usize] < first {
                return false;
            }
            // only automorphisms hitting `first` can tie on the first term
            for &a in &self.to[y as usize * self.order + first as usize] {
                self.image_sorted(a as usize, terms, scratch);
                if scratch.as_slice() < terms {
                    return false;
                }
            }
        }
        true
    }

    /// Least image of `terms` and the number of automorphisms fixing it.
    pub fn canonical_terms(&self, terms: &[u16]) -> (Vec<u16>, usize) {
        let mut best = terms.to_vec();
        best.sort_unstable();
        let mut stabilizer = 0;
        let mut scratch = Vec::with_capacity(terms.len());
        let original = best.clone();
        for a in 0..self.auts.len() {
            self.image_sorted(a, &original, &mut scratch);
            if scratch.cmp(&best) == Ordering::Less { best.clone_from(&scratch) }
            if scratch == original {
                stabilizer += 1;
            }
        }
        (best, stabilizer)
    }

    pub fn terms_of(&self, s: &Sequence) -> Vec<u16> {
        s.expanded().iter().map(|g| self.spec.index_of(g) as u16).collect()
    }

    pub fn sequence_of(&self, terms: &[u16]) -> Sequence {
        let mut s = Sequence::empty(&self.spec);
        for &t in terms {
            s.push(self.spec.element_at(t as usize), 1).expect("index inside group");
        }
        s
    }

    pub fn canonicalize(&self, s: &Sequence) -> Sequence {
        let (c, _) = self.canonical_terms(&self.terms_of(s));
        self.sequence_of(&c)
    }

    /// `|Aut(G)| / |Stab(S)|`.
    pub fn orbit_size(&self, s: &Sequence) -> usize {
        let (_, stab) = self.canonical_terms(&self.terms_of(s));
        self.auts.len() / stab
    }
}

/// The least image of `s` under `Aut(G)` in the term order.
///
/// Groups with a tabulable automorphism group use [`SymmetryTable`]; larger
/// ones (e.g. `C5xC5xC5`) stream every automorphism.
pub fn canonicalize(s: &Sequence) -> Result<Sequence> {
    let spec = s.spec();
    match SymmetryTable::new(spec) {
        Ok(table) => Ok(table.canonicalize(s)),
        Err(Error::UnsupportedSpec { .. }) if spec.is_homocyclic() => {
            let mut best = s.clone();
            for a in enumerate_automorphisms(spec)? {
                let img = s.apply_automorphism(&a);
                if img.cmp_terms(&best) == Ordering::Less {
                    best = img;
                }
            }
            Ok(best)
        }
        Err(e) => Err(e),
    }
}
