use std::collections::BTreeSet;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::Result;

/// Output of a structured enumerator together with its bookkeeping.
///
/// `candidates_generated` equals `results.len() + duplicates_removed +
/// maximality_rejections + predicate_rejections`, except for the clique
/// enumerator, which counts only new candidates (see its documentation).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationReport {
    pub results: Vec<VertexSet>,
    pub candidates_generated: u64,
    pub duplicates_removed: u64,
    pub maximality_rejections: u64,
    pub predicate_rejections: u64,
    /// Closure number of the c-closed side of the input.
    pub closure: usize,
    /// Instantiated worst-case bound for this input.
    pub bound_value: f64,
}

pub(crate) enum Verdict {
    Accept,
    NotMaximal,
    FailsPredicate,
}

/// Deduplicates candidates and classifies them, checking each distinct set once.
#[derive(Default)]
pub(crate) struct Collector {
    accepted: BTreeSet<VertexSet>,
    rejected: BTreeSet<VertexSet>,
    candidates: u64,
    duplicates: u64,
    not_maximal: u64,
    fails: u64,
}

impl Collector {
    pub fn consider(&mut self, s: VertexSet, check: impl FnOnce(&VertexSet) -> Result<Verdict>) -> Result<()> {
        self.candidates += 1;
        if self.accepted.contains(&s) || self.rejected.contains(&s) {
            self.duplicates += 1;
            return Ok(());
        }
        match check(&s)? {
            Verdict::Accept => {
                self.accepted.insert(s);
            }
            Verdict::NotMaximal => {
                self.not_maximal += 1;
                self.rejected.insert(s);
            }
            Verdict::FailsPredicate => {
                self.fails += 1;
                self.rejected.insert(s);
            }
        }
        Ok(())
    }

    pub fn finish(self, closure: usize, bound_value: f64) -> EnumerationReport {
        EnumerationReport {
            results: self.accepted.into_iter().collect(),
            candidates_generated: self.candidates,
            duplicates_removed: self.duplicates,
            maximality_rejections: self.not_maximal,
            predicate_rejections: self.fails,
            closure,
            bound_value,
        }
    }
}
