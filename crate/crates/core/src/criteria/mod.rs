//! Decision procedures for (strong) regularity, depth, associated primes,
//! and the equivalence checks tying them together.

mod corollary;
mod depth;
mod primes;
mod regular;
mod theorem;
mod verdict;

pub use corollary::{
    corollary2_check, sop_regular_check, support_contained, Corollary2Outcome, Corollary2Report,
    SopOutcome, SopReport,
};
pub use depth::{depth_ext, local_depth};
pub use primes::{
    is_monomial_presentable, monomial_ass, monomial_support, prime_membership, Completeness,
    PrimeAssertion, PrimeCandidate, PrimeMembership, PrimeSet,
};
pub use regular::{is_regular, is_strongly_regular};
pub use theorem::{theorem_crosscheck, PrimeRow, TheoremReport};
pub use verdict::{Criterion, DepthValue, Verdict, Witness};
