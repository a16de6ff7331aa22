//! Composed image retrieval (CIR) toolkit.
//!
//! Two halves, glued by a staged CLI pipeline:
//!
//! * **Label synthesis** — mine visually similar image pairs from unlabeled
//!   embeddings ([`miner`]), caption both sides and generate an edit
//!   instruction with an LLM ([`synth`]), then drop inconsistent samples with
//!   a semantic-embedding filter ([`filter`]).
//! * **Hybrid training + evaluation** — train a multi-token image-to-text
//!   mapping network against frozen encoders with a symmetric contrastive
//!   objective over both unlabeled images and synthetic triplets
//!   ([`trainer`]), and rank galleries with R@K / Rs@K / mAP@K ([`eval`]).
//!
//! All external model access (captioner, LLM, text embedder) goes through
//! [`provider`], which ships deterministic mock implementations and a
//! persistent response cache so every pipeline stage is offline-runnable and
//! bit-reproducible.

pub mod artifact;
pub mod config;
pub mod embedding;
pub mod eval;
pub mod filter;
pub mod miner;
pub mod model;
pub mod pipeline;
pub mod provider;
pub mod synth;
pub mod toyworld;
pub mod trainer;

pub use embedding::{EmbeddingVector, UnitVector};
pub use miner::{ImagePair, MinerParams, Subgroup};
pub use synth::{SyntheticTriplet, TripletStatus};
