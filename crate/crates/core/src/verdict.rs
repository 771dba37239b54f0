//! Shared verdict vocabulary: the finiteness statuses, fired-criterion
//! records with their theorem tags, and witness data for provably infinite
//! families.

use serde::{Deserialize, Serialize};

/// Outcome of a finiteness analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    /// Some criterion proves the reducible-specialization set finite.
    Finite,
    /// A concrete infinite family of reducible specializations is exhibited.
    InfiniteWitness,
    /// No criterion applies in either direction.
    Inconclusive,
}

/// A criterion that fired, with its theorem tag and a human-readable reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiredCriterion {
    pub id: String,
    pub theorem: String,
    pub reason: String,
}

impl FiredCriterion {
    pub fn new(id: &str, theorem: &str, reason: impl Into<String>) -> Self {
        FiredCriterion {
            id: id.into(),
            theorem: theorem.into(),
            reason: reason.into(),
        }
    }
}

/// Structured witness for an infinite reducible family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Family kind, e.g. "pell" or "polynomial-image".
    pub family: String,
    pub description: String,
    /// First few specialization points of the family, smallest first.
    pub sample_points: Vec<String>,
}

/// Base field of the coefficients, as far as the criteria care.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldFlag {
    /// The rationals.
    Q,
    /// An arbitrary finitely generated extension of ℚ.
    General,
}

/// Specialization ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingFlag {
    /// The rational integers.
    Z,
    /// An arbitrary finitely generated subring.
    General,
}

/// Aggregated verdict. `Finite` always carries at least one fired criterion;
/// `InfiniteWitness` always carries a witness.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub fired: Vec<FiredCriterion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn inconclusive() -> Self {
        Verdict {
            status: VerdictStatus::Inconclusive,
            fired: Vec::new(),
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn merge(mut self, other: Verdict) -> Verdict {
        self.fired.extend(other.fired);
        self.notes.extend(other.notes);
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self.status = match (self.status, other.status) {
            (VerdictStatus::Finite, _) | (_, VerdictStatus::Finite) => VerdictStatus::Finite,
            (VerdictStatus::InfiniteWitness, _) | (_, VerdictStatus::InfiniteWitness) => {
                VerdictStatus::InfiniteWitness
            }
            _ => VerdictStatus::Inconclusive,
        };
        self
    }

    /// Human-readable multi-line report.
    pub fn report(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("status: {:?}\n", self.status));
        for f in &self.fired {
            out.push_str(&format!("  fired {} [{}]: {}\n", f.id, f.theorem, f.reason));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!(
                "  witness ({}): {}; sample points {:?}\n",
                w.family, w.description, w.sample_points
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}
