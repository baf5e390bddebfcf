//! Decision-procedure verdicts with hypothesis provenance.
//!
//! A verdict never asserts INFINITE, FINITE or SIZE_ONE unless every
//! hypothesis of the cited criterion was verified (or explicitly supplied
//! by the caller, in which case it is recorded as asserted).  A failed
//! hypothesis downgrades the verdict to INCONCLUSIVE and is named.

use num_bigint::BigUint;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictStatus {
    Infinite,
    Finite,
    SizeOne,
    Inconclusive,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictStatus::Infinite => write!(f, "INFINITE"),
            VerdictStatus::Finite => write!(f, "FINITE"),
            VerdictStatus::SizeOne => write!(f, "SIZE_ONE"),
            VerdictStatus::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// Structured datum backing a conclusive verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// A degree `4i` strictly between 0 and the dimension with nonzero
    /// rational cohomology.
    MiddleDegree(usize),
    /// Rational rank of the kernel of the classifying map on the middle
    /// homology.
    KernelRank(usize),
    /// Free rank of the image of the odd-degree L-group action on the
    /// structure set.
    ActionRank(usize),
    /// Finite index of the verified sublattice pair.
    LatticeIndex(BigUint),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::MiddleDegree(d) => write!(f, "nonzero rational cohomology in degree {d}"),
            Witness::KernelRank(r) => write!(f, "classifying-map kernel of rank {r}"),
            Witness::ActionRank(r) => write!(f, "odd-degree action image of rank {r}"),
            Witness::LatticeIndex(i) => write!(f, "sublattice of finite index {i}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HypothesisStatus {
    /// Checked from the descriptor data.
    Verified,
    /// Supplied by the caller and consistent with every computable check.
    Asserted,
    /// Contradicted or not supplied; the reason is recorded.
    Failed(String),
}

impl HypothesisStatus {
    pub fn holds(&self) -> bool {
        !matches!(self, HypothesisStatus::Failed(_))
    }
}

impl fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisStatus::Verified => write!(f, "verified"),
            HypothesisStatus::Asserted => write!(f, "asserted"),
            HypothesisStatus::Failed(reason) => write!(f, "failed: {reason}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HypothesisCheck {
    pub name: String,
    pub status: HypothesisStatus,
}

/// Outcome of a decision procedure, carrying the criterion tag, the
/// hypothesis list and an optional witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    pub theorem: String,
    pub hypotheses: Vec<HypothesisCheck>,
}

impl Verdict {
    pub fn is_conclusive(&self) -> bool {
        self.status != VerdictStatus::Inconclusive
    }

    pub fn failed_hypotheses(&self) -> impl Iterator<Item = &HypothesisCheck> {
        self.hypotheses.iter().filter(|h| !h.status.holds())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}", self.status, self.theorem)?;
        if let Some(witness) = &self.witness {
            write!(f, ": {witness}")?;
        } else if let Some(failed) = self.failed_hypotheses().next() {
            write!(f, ": {} {}", failed.name, failed.status)?;
        }
        write!(f, ")")
    }
}

/// Accumulates hypothesis checks and downgrades the verdict when one fails.
#[derive(Default)]
pub(crate) struct HypothesisLog {
    checks: Vec<HypothesisCheck>,
}

impl HypothesisLog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn verified(&mut self, name: impl Into<String>) {
        self.checks.push(HypothesisCheck {
            name: name.into(),
            status: HypothesisStatus::Verified,
        });
    }

    pub fn asserted(&mut self, name: impl Into<String>) {
        self.checks.push(HypothesisCheck {
            name: name.into(),
            status: HypothesisStatus::Asserted,
        });
    }

    pub fn failed(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(HypothesisCheck {
            name: name.into(),
            status: HypothesisStatus::Failed(reason.into()),
        });
    }

    /// Records `name` as verified when `holds`, otherwise as failed.
    pub fn require(&mut self, name: impl Into<String>, holds: bool, reason: impl Into<String>) {
        if holds {
            self.verified(name);
        } else {
            self.failed(name, reason);
        }
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = HypothesisCheck>) {
        self.checks.extend(checks);
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.status.holds())
    }

    /// Finishes with `status` when every hypothesis holds, otherwise
    /// INCONCLUSIVE; the witness is kept only on a conclusive verdict.
    pub fn conclude(
        self,
        status: VerdictStatus,
        theorem: impl Into<String>,
        witness: Option<Witness>,
    ) -> Verdict {
        let ok = self.all_hold();
        Verdict {
            status: if ok { status } else { VerdictStatus::Inconclusive },
            witness: if ok { witness } else { None },
            theorem: theorem.into(),
            hypotheses: self.checks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_hypothesis_forces_inconclusive() {
        let mut log = HypothesisLog::new();
        log.verified("a");
        log.failed("b", "not satisfied");
        let v = log.conclude(VerdictStatus::Infinite, "criterion", Some(Witness::KernelRank(1)));
        assert_eq!(v.status, VerdictStatus::Inconclusive);
        assert!(v.witness.is_none());
        assert_eq!(v.failed_hypotheses().count(), 1);
    }

    #[test]
    fn asserted_hypotheses_do_not_block() {
        let mut log = HypothesisLog::new();
        log.asserted("caller-supplied premise");
        let v = log.conclude(VerdictStatus::Infinite, "criterion", None);
        assert_eq!(v.status, VerdictStatus::Infinite);
    }
}
