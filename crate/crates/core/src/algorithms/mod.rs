//! Matching, connectivity, Tutte-Berge deficiency and scattering number.
//!
//! Every exact solver has an independent brute-force counterpart so results
//! can be cross-checked: blossom against backtracking, max-flow connectivity
//! against subset enumeration.

mod connectivity;
mod deficiency;
mod matching;
mod scattering;

pub use connectivity::{minimum_vertex_cut, vertex_connectivity, vertex_connectivity_oracle, ORACLE_SUBSET_LIMIT};
pub use deficiency::{tutte_berge, tutte_berge_in, DeficiencyWitness, TutteBergeMode, EXHAUSTIVE_MAX_N};
pub use matching::{matching_oracle, maximum_matching, near_perfect_verdict, Matching, ORACLE_MAX_N};
pub use scattering::{scattering_number, scattering_number_with_limit, ScatterWitness, DEFAULT_MAX_N};

pub(crate) use connectivity::binomial;
pub(crate) use deficiency::for_each_subset;
