//! Lexical dataset augmentation for token-pair classification.
//!
//! This crate implements a complete experiment pipeline for classifying
//! two-constituent expressions (noun compounds and similar token pairs):
//!
//! * [`lexicon`] — tiered paraphrase tables (PPDB-style) and synset
//!   lexicons (WordNet-style), loaded from normalized TSV files, with
//!   cumulative-tier paraphrase queries and synonym lookups.
//! * [`augment`] — label-preserving dataset augmentation by constituent
//!   replacement, with unigram/bigram/combined conditions.
//! * [`features`] — word-embedding features (concatenated constituent
//!   vectors, multiword sum, deterministic OOV handling) plus one-hot
//!   entailment-relation extensions.
//! * [`network`] — a from-scratch feed-forward classifier with a maxout
//!   hidden layer, inverted dropout, Adam, early stopping, and the
//!   add-dev-and-retrain protocol.
//! * [`eval`] — seeded splits, 5-fold cross-validation with per-fold
//!   augmentation, dropout grid tuning, test evaluation, and the exact
//!   Wilcoxon signed-rank test.
//! * [`synth`] — a generator for synthetic clustered benchmark datasets,
//!   useful for exercising the pipeline without licensed resources.
//!
//! All randomness flows from a single `u64` seed through
//! [`util::derive_seed`], so runs are bit-reproducible.

pub mod augment;
pub mod eval;
pub mod features;
pub mod lexicon;
pub mod network;
pub mod synth;
pub mod util;
