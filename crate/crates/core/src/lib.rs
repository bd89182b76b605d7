//! Word maps on finite permutation groups.
//!
//! The crate enumerates values of group words, decides whether a word is
//! (weakly) rational on a given group, computes character tables with
//! Dixon's modular method and uses them to check class-algebra identities,
//! and runs the inequality chain that bounds verbal subgroups in terms of
//! the number of word values.
//!
//! Every verdict is per group: a word that passes on the whole catalog has
//! been checked there, not proven in general.

pub mod catalog;
pub mod characters;
pub mod classes;
pub mod cli;
pub mod conciseness;
pub mod error;
pub mod group;
pub mod modp;
pub mod perm;
pub mod rationality;
pub mod word;
pub mod wordmap;

pub use catalog::{catalog_group, catalog_group_with_cap, STANDARD_CATALOG};
pub use classes::{ClassId, ClassTable};
pub use error::{Result, WordlabError};
pub use group::{euler_phi, Elem, FiniteGroup, Subgroup, IDENTITY};
pub use perm::Permutation;
pub use word::{gamma_power_word, lower_central_word, Expr, Word};
pub use wordmap::{
    evaluate_word, solution_count, solution_counts, verbal_subgroup, word_image, Assignment,
    ElementSet, Enumeration,
};
