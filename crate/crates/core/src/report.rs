//! End-to-end verification of the structure of long sequences over
//! `C_p ⊕ C_p` without short zero-sums, and its machine-readable verdict.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::congruence::{build_system, closed_form, solve_by_elimination};
use crate::error::{Error, Result};
use crate::group::{is_prime, GroupSpec};
use crate::search::{enumerate_extremal, vanishing_ranges, Budget, ExtremalReportJson, SearchTask};
use crate::sequence::Sequence;
use crate::structure::{match_main_form, verify_lift_minimal};
use crate::zerosum::ZeroSumEngine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Verified,
    Refuted,
    SkippedBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim_id: String,
    pub status: ClaimStatus,
    /// Where the supporting data lives, e.g. `orbits[0]` or `congruence`.
    pub evidence: String,
}

/// Predicates a refutation can name. Each one is re-evaluated from the
/// witness sequence alone by [`Witness::reverify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// some `N^i(S)` on a vanishing range is nonzero
    #[serde(rename = "lemma32a")]
    NonvanishingCount,
    #[serde(rename = "lemma32b")]
    LongCountMismatch,
    #[serde(rename = "lemma32c")]
    ZeroSigma,
    #[serde(rename = "main_form")]
    NoMainForm,
    #[serde(rename = "claim_A")]
    LiftNotMinimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sequence: String,
    pub k: u32,
    pub violated: Violation,
}

impl Witness {
    /// True iff the violation really holds for the witness sequence.
    pub fn reverify(&self) -> Result<bool> {
        let s: Sequence = self.sequence.parse()?;
        let p = s.spec().exponent();
        let k = self.k;
        Ok(match self.violated {
            Violation::NonvanishingCount => {
                let profile = ZeroSumEngine::new(s.spec())?.count_zero_sums(&s)?;
                vanishing_ranges(p, k)
                    .into_iter()
                    .any(|r| r.into_iter().any(|i| !profile.is_zero_at(i)))
            }
            Violation::LongCountMismatch => {
                let profile = ZeroSumEngine::new(s.spec())?.count_zero_sums(&s)?;
                profile.get(2 * p as usize - 1) % p != (k % p).into()
            }
            Violation::ZeroSigma => s.sigma().is_zero(),
            Violation::NoMainForm => !match_main_form(&s, k)?.matched,
            Violation::LiftNotMinimal => !verify_lift_minimal(&s, k)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationVerdict {
    pub group: String,
    pub k: u32,
    pub claims: Vec<ClaimRecord>,
    pub overall: bool,
    pub witnesses: Vec<Witness>,
    pub extremal: ExtremalReportJson,
}

impl VerificationVerdict {
    pub fn is_refuted(&self) -> bool {
        self.claims.iter().any(|c| c.status == ClaimStatus::Refuted)
    }

    pub fn is_incomplete(&self) -> bool {
        self.claims.iter().any(|c| c.status == ClaimStatus::SkippedBudget)
    }
}

impl fmt::Display for VerificationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} k={}", self.group, self.k)?;
        for o in &self.extremal.orbits {
            writeln!(f, "  orbit {} (size {})", o.canonical, o.orbit_size)?;
        }
        for c in &self.claims {
            let status = match c.status {
                ClaimStatus::Verified => "verified",
                ClaimStatus::Refuted => "REFUTED",
                ClaimStatus::SkippedBudget => "skipped (budget)",
            };
            writeln!(f, "  {:<20} {status:<16} {}", c.claim_id, c.evidence)?;
        }
        for w in &self.witnesses {
            writeln!(f, "  witness: {} violates {:?}", w.sequence, w.violated)?;
        }
        write!(f, "overall: {}", if self.overall { "verified" } else { "not verified" })
    }
}

/// Enumerates all sequences of length `2p-2+k` over `C_p ⊕ C_p` without a
/// zero-sum of length `≤ 2p-1-k` (up to automorphism) and checks, for each:
/// the vanishing of zero-sum counts, `N^{2p-1} ≡ k`, `σ ≠ 0`, the
/// `e1^[p-1]·e2^[p-1]·(e1+e2)^[k]` form and minimality of the rank-three
/// lift; then cross-checks the binomial congruence system for `(p, k)`.
pub fn verify_theorem(p: u32, k: u32, budget: Budget, workers: usize) -> Result<VerificationVerdict> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if k < 2 || k + 2 > p {
        return Err(Error::OutOfRange(format!(
            "k = {k} outside [2, p-2] = [2, {}]; use `match --form conjecture_k1` for k = 1",
            p as i64 - 2
        )));
    }
    let spec = GroupSpec::homocyclic(p, 2)?;
    let task = SearchTask::extremal(&spec, k)?.with_budget(budget).with_workers(workers);
    let report = enumerate_extremal(&task)?;

    let mut claims = Vec::new();
    let mut witnesses = Vec::new();
    claims.push(ClaimRecord {
        claim_id: "enumeration".into(),
        status: match (report.exhaustive, report.orbits.is_empty()) {
            (false, _) => ClaimStatus::SkippedBudget,
            // the template itself avoids short zero-sums, so it must be found
            (true, true) => ClaimStatus::Refuted,
            (true, false) => ClaimStatus::Verified,
        },
        evidence: format!("{} orbit(s), {} nodes", report.orbits.len(), report.nodes),
    });

    type Pick = fn(&crate::search::RepChecks) -> Option<bool>;
    let per_rep: [(&str, Violation, Pick); 5] = [
        ("lemma32a", Violation::NonvanishingCount, |c| c.vanishing),
        ("lemma32b", Violation::LongCountMismatch, |c| c.long_count),
        ("lemma32c", Violation::ZeroSigma, |c| c.sigma_nonzero),
        ("main_form", Violation::NoMainForm, |c| Some(c.main_form)),
        ("claim_A", Violation::LiftNotMinimal, |c| c.lift_minimal),
    ];
    for (id, violation, pick) in per_rep {
        let mut failed = Vec::new();
        for (i, o) in report.orbits.iter().enumerate() {
            let ok = o.checks.as_ref().and_then(pick).unwrap_or(false);
            if !ok {
                failed.push(i);
                witnesses.push(Witness {
                    sequence: o.canonical.render(),
                    k,
                    violated: violation,
                });
            }
        }
        let status = if !failed.is_empty() {
            ClaimStatus::Refuted
        } else if report.exhaustive {
            ClaimStatus::Verified
        } else {
            ClaimStatus::SkippedBudget
        };
        let evidence = if failed.is_empty() {
            format!("orbits[0..{}]", report.orbits.len())
        } else {
            format!("fails on orbits {failed:?}")
        };
        claims.push(ClaimRecord {
            claim_id: id.into(),
            status,
            evidence,
        });
    }

    let (status, evidence) = match solve_by_elimination(&build_system(p as u64, k as u64)?) {
        Ok(sol) => {
            let closed = closed_form(p as u64, k as u64)?;
            if sol.unique && sol.values == closed.values {
                (ClaimStatus::Verified, format!("x = {:?}", sol.values))
            } else {
                (
                    ClaimStatus::Refuted,
                    format!("elimination {:?} vs closed form {:?}", sol.values, closed.values),
                )
            }
        }
        Err(Error::Counterexample(msg)) => (ClaimStatus::Refuted, msg),
        Err(e) => return Err(e),
    };
    claims.push(ClaimRecord {
        claim_id: "congruence_system".into(),
        status,
        evidence,
    });

    let overall = claims.iter().all(|c| c.status == ClaimStatus::Verified);
    Ok(VerificationVerdict {
        group: spec.to_string(),
        k,
        claims,
        overall,
        witnesses,
        extremal: report.to_json(true),
    })
}
