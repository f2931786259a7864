//! latticeforge: finite bounded lattices, free-lattice terms, tensor products
//! of lattices with zero via bi-ideals, the infinite three-generated lattice
//! K, and the closure machinery that verifies cappedness of K (x) L for
//! h-modular L, everything cross-checked against brute-force oracles at
//! desk scale.
//!
//! The library is the primary interface; each major capability has a runnable
//! example:
//!
//! ```text
//! cargo run --example catalog_tour          lattices, identities, h-modularity
//! cargo run --example enumerate_classes    lattices of size n up to isomorphism
//! cargo run --example term_reasoning       free-lattice terms and Whitman's test
//! cargo run --example pure_meet_extraction pure meet polynomial extraction
//! cargo run --example tensor_basics        bi-ideal tensors, joins, cappings
//! cargo run --example tensor_oracle        map form vs raw subset oracle
//! cargo run --example join_union_identity  the join-as-union identity verifier
//! cargo run --example dependency_and_simplicity   D-relation, T-join, DPT, scans
//! cargo run --example interval_lattices    interval lattices and congruences
//! cargo run --example k_lattice_tour       arithmetic in K and truncations
//! cargo run --example k_closure_machinery  assignments, closures, epsilon, cappings
//! cargo run --example dot_export           Hasse diagrams in DOT syntax
//! ```
//!
//! A thin `latticeforge` binary exposes the same capabilities as subcommands
//! (check, tensor, tensun, klat, kclosure, enumerate, term).

pub mod cli;
pub mod kclosure;
pub mod klat;
pub mod lattice;
pub mod structure;
pub mod tensor;
pub mod terms;

pub use kclosure::{
    epsilon_restricted, extend_bar, gamma_capping, meet_star, pure_preimage, vee_c,
    verify_capped, AntitoneAssignment, CappedReport, KClosure, KClosureError,
    KTensorElement,
};
pub use klat::{
    k_check_2modular, k_elements, k_iterate, k_join, k_leq, k_meet, k_triple_step,
    k_truncation, KElem, KTruncation, KTwoModularReport, KlatError,
};
pub use lattice::{
    are_isomorphic, boolean, chain, enumerate_lattices, format_lattice,
    interval_lattice, m3, n5, parse_lattice, FiniteLattice, IdentityVerdict,
    LatticeError, LatticeIdentity, ModularityIndex, TextError, Triple,
};
pub use structure::{
    dpt_holds, interval_lattice_simplicity_profile, is_amenable_finite,
    is_simple, join_dependency, minimal_join_covers, no_simple_amenable_scan,
    principal_congruence, satisfies_t_join, AtomPairEquality, Congruence,
    DptVerdict, IntervalProfile, JoinCover, ScanReport, ScanRow,
    StructureError, TJoinVerdict,
};
pub use tensor::{
    bottom_tensor, brute_force_biideals, capping_of, pure_tensor, raw_close,
    tensor_join, tensor_lattice, tensor_meet, tensun_verify, Capping,
    RawBiIdeal, RawTensorLattice, TensorElement, TensorError, TensorLattice,
    TensunReport, ValuePairWitness,
};
pub use terms::{
    dual_term, enumerate_terms, eval_term, format_term, free_leq, join, meet,
    parse_term, pure_meet_extract, pure_meet_hypothesis, substitute, var,
    LatTerm, TermError,
};
