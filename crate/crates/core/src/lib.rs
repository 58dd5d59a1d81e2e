//! Sentiment classification for code-mixed (Hinglish) social-media text.
//!
//! The pipeline trains a Bi-LSTM classifier over unified English/code-mixed
//! word embeddings, then refines each test-time prediction by generating
//! phrase-inserted candidate sentences (three polarity buckets, five
//! candidates each) and applying a rule-based plurality-vote selection over
//! the bucket predictions. An abusive-word prefilter short-circuits the
//! refinement for sentences containing flagged tokens.

pub mod classifier;
pub mod corpus;
pub mod csg;
pub mod error;
pub mod eval;
pub mod preprocess;
pub mod select;

pub mod embeddings;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
