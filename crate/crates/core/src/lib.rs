//! Pattern-avoiding permutations, full rook placements on Ferrers boards,
//! labeled Dyck paths and sorting with two increasing stacks in series,
//! together with the bijections that connect them and exact generating
//! functions for the classes they count.
//!
//! ```
//! use rookstack::{chi, pi_map, phi_big, word_to_permutation, Permutation};
//!
//! let perm: Permutation = "42513".parse().unwrap();
//! let path = pi_map(&chi(&perm).unwrap());
//! let word = phi_big(&path).unwrap();
//! assert_eq!(word.to_string(), "stsstpptsstpptp");
//! assert_eq!(word_to_permutation(&word).unwrap().to_string(), "2,4,1,5,3");
//! ```

pub mod chain;
pub mod decomp;
pub mod dyck;
pub mod error;
pub mod machine;
pub mod perm;
pub mod rook;
pub mod series;
pub mod verify;

pub use chain::ChainReport;
pub use decomp::{phi, phi_inverse, returns_decomposition, trivial_labels};
pub use dyck::{enumerate_lx312, pi_map, DyckPath, LabeledDyckPath, Step};
pub use error::{Error, Result};
pub use machine::{
    enumerate_greedy_words, execute, execute_traced, greedy_word, is_greedy_increasing_word, is_valid_word, phi_big,
    phi_big_inverse, sortable, word_to_permutation, Letter, MachineState, StackWord,
};
pub use perm::{all_permutations, enumerate_avoiders, Permutation};
pub use rook::{chi, square_placement, FerrersBoard, RookPlacement};
pub use series::PowerSeries;
