//! Deterministic instance generation, campaigns and counterexample shrinking.

mod campaign;
mod generate;
mod shrink;

pub use campaign::{run_campaign, trial_dim, trial_seed, CampaignConfig, CampaignReport, Counterexample, SuiteRecord, ARTIFACT_VERSION};
pub use generate::{gen_conditioned_pair, gen_gaussian, gen_positive, gen_unitary, log_uniform};
pub use shrink::{conjugate_case, shrink, violates};
