//! Finite unordered sequences (multisets) of group elements.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{Automorphism, GroupElement, GroupSpec};

/// A multiset over a fixed group, stored as element → multiplicity.
///
/// Zero multiplicities are never stored, so two sequences are equal exactly
/// when they have the same terms with the same multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    spec: GroupSpec,
    mult: BTreeMap<GroupElement, u32>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParseMode {
    /// Reject residues outside `[0, n_i - 1]`.
    #[default]
    Strict,
    /// Accept any integer and reduce it.
    Reduce,
}

impl Sequence {
    pub fn empty(spec: &GroupSpec) -> Self {
        Sequence {
            spec: spec.clone(),
            mult: BTreeMap::new(),
        }
    }

    /// `g^[m]`.
    pub fn repeated(spec: &GroupSpec, g: &GroupElement, m: u32) -> Result<Self> {
        Self::from_terms(spec, [(g.clone(), m)])
    }

    pub fn from_terms<I>(spec: &GroupSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, u32)>,
    {
        let mut s = Self::empty(spec);
        for (g, m) in terms {
            s.push(g, m)?;
        }
        Ok(s)
    }

    pub fn from_elements<'a, I>(spec: &GroupSpec, elems: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a GroupElement>,
    {
        Self::from_terms(spec, elems.into_iter().map(|g| (g.clone(), 1)))
    }

    /// Appends `g^[m]`.
    pub fn push(&mut self, g: GroupElement, m: u32) -> Result<()> {
        self.spec.check(&g)?;
        if m > 0 {
            *self.mult.entry(g).or_insert(0) += m;
        }
        Ok(())
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.mult.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn multiplicity(&self, g: &GroupElement) -> u32 {
        self.mult.get(g).copied().unwrap_or(0)
    }

    pub fn support(&self) -> BTreeSet<GroupElement> {
        self.mult.keys().cloned().collect()
    }

    pub fn height(&self) -> u32 {
        self.mult.values().copied().max().unwrap_or(0)
    }

    pub fn sigma(&self) -> GroupElement {
        self.mult.iter().fold(self.spec.zero(), |acc, (g, &m)| {
            self.spec
                .add_unchecked(&acc, &self.spec.scalar_mul(m as i64, g))
        })
    }

    /// Distinct terms with multiplicities, in increasing element order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, u32)> {
        self.mult.iter().map(|(g, &m)| (g, m))
    }

    /// Every term listed individually, nondecreasing.
    pub fn expanded(&self) -> Vec<GroupElement> {
        self.terms()
            .flat_map(|(g, m)| std::iter::repeat_n(g.clone(), m as usize))
            .collect()
    }

    /// Lexicographic comparison of the nondecreasing term lists.
    pub fn cmp_terms(&self, other: &Sequence) -> Ordering {
        let mut a = self.terms().flat_map(|(g, m)| std::iter::repeat_n(g, m as usize));
        let mut b = other.terms().flat_map(|(g, m)| std::iter::repeat_n(g, m as usize));
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(y) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            }
        }
    }

    pub fn is_subsequence_of(&self, other: &Sequence) -> bool {
        self.spec == other.spec && self.terms().all(|(g, m)| other.multiplicity(g) >= m)
    }

    /// `S·T`.
    pub fn concat(&self, other: &Sequence) -> Result<Sequence> {
        self.same_spec(other)?;
        let mut out = self.clone();
        for (g, m) in other.terms() {
            *out.mult.entry(g.clone()).or_insert(0) += m;
        }
        Ok(out)
    }

    /// `T^[-1]·S`, removing the terms of `other` from `self`.
    pub fn remove(&self, other: &Sequence) -> Result<Sequence> {
        self.same_spec(other)?;
        let mut out = self.clone();
        for (g, m) in other.terms() {
            match out.mult.get_mut(g) {
                Some(have) if *have > m => *have -= m,
                Some(have) if *have == m => {
                    out.mult.remove(g);
                }
                _ => return Err(Error::NotSubsequence { element: g.to_string() }),
            }
        }
        Ok(out)
    }

    /// Image under an arbitrary map into `target`.
    pub fn map_hom<F>(&self, target: &GroupSpec, mut phi: F) -> Result<Sequence>
    where
        F: FnMut(&GroupElement) -> GroupElement,
    {
        let mut out = Sequence::empty(target);
        for (g, m) in self.terms() {
            out.push(phi(g), m)?;
        }
        Ok(out)
    }

    pub fn apply_automorphism(&self, alpha: &Automorphism) -> Sequence {
        let mut mult = BTreeMap::new();
        for (g, m) in self.terms() {
            *mult.entry(alpha.apply(g)).or_insert(0) += m;
        }
        Sequence {
            spec: self.spec.clone(),
            mult,
        }
    }

    pub fn parse(text: &str) -> Result<Sequence> {
        Self::parse_with(text, ParseMode::Strict)
    }

    /// Parses `<group> | <term>*` where a term is `(c1,…,cr)` optionally
    /// followed by `^m`.
    pub fn parse_with(text: &str, mode: ParseMode) -> Result<Sequence> {
        let bar = text.find('|').ok_or_else(|| Error::Parse {
            position: text.len(),
            message: "expected `<group> | <terms>`".into(),
        })?;
        let spec: GroupSpec = text[..bar].parse()?;
        let mut seq = Sequence::empty(&spec);
        let body = &text[bar + 1..];
        let offset = bar + 1;
        let mut parser = TermParser { src: body, pos: 0 };
        loop {
            parser.skip_ws();
            if parser.at_end() {
                break;
            }
            let start = offset + parser.pos;
            let (coeffs, m) = parser.term().map_err(|(p, message)| Error::Parse {
                position: offset + p,
                message,
            })?;
            if coeffs.len() != spec.rank() {
                return Err(Error::Parse {
                    position: start,
                    message: format!(
                        "term has {} coefficients but {} has rank {}",
                        coeffs.len(),
                        spec,
                        spec.rank()
                    ),
                });
            }
            let g = match mode {
                ParseMode::Reduce => spec.reduce(&coeffs)?,
                ParseMode::Strict => {
                    let in_range = coeffs
                        .iter()
                        .zip(spec.factors())
                        .all(|(&c, &n)| (0..n as i64).contains(&c));
                    if !in_range {
                        return Err(Error::Parse {
                            position: start,
                            message: format!(
                                "term {:?} is not reduced into {spec} (use reduce mode to allow this)",
                                coeffs
                            ),
                        });
                    }
                    spec.reduce(&coeffs)?
                }
            };
            seq.push(g, m)?;
        }
        Ok(seq)
    }

    /// Terms only, e.g. `(0,1)^4 (1,0)^4 (1,1)^2`.
    pub fn render_terms(&self) -> String {
        self.terms()
            .map(|(g, m)| if m == 1 { g.to_string() } else { format!("{g}^{m}") })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn render(&self) -> String {
        if self.is_empty() {
            format!("{} |", self.spec)
        } else {
            format!("{} | {}", self.spec, self.render_terms())
        }
    }

    fn same_spec(&self, other: &Sequence) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: other.spec.to_string(),
            })
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Sequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Sequence::parse(s)
    }
}

struct TermParser<'a> {
    src: &'a str,
    pos: usize,
}

type TermResult<T> = std::result::Result<T, (usize, String)>;

impl TermParser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn expect(&mut self, c: char) -> TermResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err((self.pos, format!("expected `{c}`")))
        }
    }

    fn integer(&mut self) -> TermResult<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| (start, "expected an integer".to_string()))
    }

    fn term(&mut self) -> TermResult<(Vec<i64>, u32)> {
        self.expect('(')?;
        let mut coeffs = vec![self.integer()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') => {
                    self.pos += 1;
                    coeffs.push(self.integer()?);
                }
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err((self.pos, "expected `,` or `)`".into())),
            }
        }
        let mut m = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let at = self.pos;
            let v = self.integer()?;
            if v < 1 || v > u32::MAX as i64 {
                return Err((at, format!("multiplicity must be at least 1, got {v}")));
            }
            m = v as u32;
        }
        if self.peek().is_some_and(|c| !c.is_whitespace()) {
            return Err((self.pos, "terms must be separated by whitespace".into()));
        }
        Ok((coeffs, m))
    }
}
