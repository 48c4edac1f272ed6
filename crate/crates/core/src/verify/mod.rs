//! Computational verification: canonical forms, switching-class enumeration,
//! the extremal theorem at small orders, the quotient lemma, and search.

pub mod canon;
pub mod claims;
pub mod enumerate;
pub mod lemma22;
pub mod search;
pub mod theorem;

/// Version of every JSON report emitted by this module.
pub const SCHEMA_VERSION: u32 = 1;

pub use canon::{canonical_form, canonicalize, equivalent_up_to_relabeling, CanonicalForm};
pub use claims::{verify_extremal_claims, ClaimsReport};
pub use enumerate::{enumerate_switching_classes, near_complete_underlying, ClassSpace};
pub use lemma22::{verify_lemma22, verify_lemma22_order, Lemma22Order, Lemma22Report};
pub use search::{extremal_search, SearchReport};
pub use theorem::{
    is_admissible, naive_scan, verify_theorem, verify_theorem_with_jobs, ClassRecord, EnumerationSpace,
    ExtremalSummary, Mode, NaiveScan, VerificationReport,
};
