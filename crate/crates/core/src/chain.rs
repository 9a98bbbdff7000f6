//! The full pipeline permutation → board-minimal placement → labeled Dyck
//! path → greedy stack word → sorted permutation.

use serde::Serialize;

use crate::dyck::pi_map;
use crate::error::{Error, Result};
use crate::machine::{phi_big, word_to_permutation};
use crate::perm::Permutation;
use crate::rook::RookPlacement;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub permutation: Permutation,
    pub heights: Vec<usize>,
    pub rooks: Vec<(usize, usize)>,
    pub steps: String,
    pub labels: Vec<usize>,
    pub word: Option<String>,
    pub sorts: Option<Permutation>,
    pub in_av3124: bool,
    pub in_av3124_1234: bool,
    pub is_lx312: bool,
    pub max_label: usize,
    pub diagnostic: Option<String>,
}

impl ChainReport {
    /// Run the pipeline. Outside Av(3124) it stops after the border labeling
    /// and records why.
    pub fn compute(perm: &Permutation) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let p3124: Permutation = "3124".parse()?;
        let p1234: Permutation = "1234".parse()?;
        let rp = RookPlacement::chi(perm)?;
        let labeled = pi_map(&rp);
        let in_av3124 = !perm.contains(&p3124);
        let is_lx312 = labeled.is_lx312();
        let (word, sorts, diagnostic) = if in_av3124 {
            let w = phi_big(&labeled)?;
            let sorted = word_to_permutation(&w)?;
            (Some(w.to_string()), Some(sorted), None)
        } else {
            let note = if is_lx312 {
                "permutation contains 3124; chain stopped after the border labeling"
            } else {
                "permutation contains 3124; the labeled path fails the L×(312) properties"
            };
            (None, None, Some(note.to_string()))
        };
        Ok(ChainReport {
            permutation: perm.clone(),
            heights: rp.board().heights().to_vec(),
            rooks: rp.rooks(),
            steps: labeled.path().to_string(),
            labels: labeled.labels().to_vec(),
            word,
            sorts,
            in_av3124,
            in_av3124_1234: in_av3124 && !perm.contains(&p1234),
            is_lx312,
            max_label: labeled.max_label(),
            diagnostic,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_of_42513() {
        let r = ChainReport::compute(&"42513".parse().unwrap()).unwrap();
        assert_eq!(r.heights, vec![5, 5, 5, 3, 3]);
        assert_eq!(r.steps, "UUUDDUUDDD");
        assert_eq!(r.labels, vec![0, 1, 1, 2, 1, 1, 1, 2, 1, 1, 0]);
        assert_eq!(r.word.as_deref(), Some("stsstpptsstpptp"));
        assert_eq!(r.sorts, Some("24153".parse().unwrap()));
        assert!(r.in_av3124 && r.in_av3124_1234 && r.is_lx312);
        assert_eq!(r.max_label, 2);
    }

    #[test]
    fn trivial_and_out_of_class() {
        let r = ChainReport::compute(&"1".parse().unwrap()).unwrap();
        assert_eq!((r.heights, r.steps.as_str(), r.labels), (vec![1], "UD", vec![0, 1, 0]));
        assert_eq!(r.word.as_deref(), Some("stp"));
        let r = ChainReport::compute(&"3124".parse().unwrap()).unwrap();
        assert!(!r.in_av3124);
        assert!(r.word.is_none() && r.diagnostic.is_some());
        assert!(ChainReport::compute(&Permutation::empty()).is_err());
    }
}
