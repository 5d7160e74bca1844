//! Fair committee selection in pseudometric spaces.
//!
//! Five greedy-capture selection algorithms ([`engine`]), exact audits of
//! the PRF, mJR, NORP and point-NORP fairness axioms ([`audit`]), a
//! duplication reduction for populations that `k` does not divide
//! ([`reduction`]), and deterministic instance families ([`generators`]).

pub mod audit;
pub mod budget;
mod clique;
pub mod engine;
pub mod error;
pub mod float;
pub mod generators;
pub mod io;
pub mod metric;
pub mod reduction;

pub use audit::{
    audit_all, oracle_best_committee, replay_witness, AuditOptions, AuditReport, Axiom,
    AxiomVerdict, NorpReading, Witness,
};
pub use budget::{Budget, DEFAULT_BUDGET};
pub use engine::{select, Algorithm, CoverEvent, EngineOptions, SelectionResult, TieBreakPolicy};
pub use error::{Error, Result};
pub use generators::GeneratorSpec;
pub use metric::{cost_ratio, AgentSet, Committee, MetricInstance, Norm};
pub use reduction::{lift, pull_back, select_general, ReductionMap};
