//! Curriculum scheduling for report-generation-style training corpora.
//!
//! The crate orders a corpus of (embedding, label-probability, report)
//! instances along four difficulty metrics, paces eligibility with a
//! competence schedule, and emits training batches either from a single
//! ranking or by routing between the four rankings with perplexity
//! feedback from a pluggable learner.
//!
//! Pipeline, end to end:
//!
//! 1. [`corpus`] — load a JSONL manifest (or synthesize a corpus), normalize
//!    report text, build a vocabulary.
//! 2. [`difficulty`] — score every instance (d1–d4) and rank per metric.
//! 3. [`competence`] — the pacing function `c(t)` that grows the eligible
//!    window from the easiest prefix to the full corpus.
//! 4. [`scheduler`] — the batch-emitting state machine with single, fused,
//!    random, sequential, and perplexity-routed strategies, plus trace
//!    output and trace validation.
//! 5. [`learner`] — the model seam: anything that can train on a batch and
//!    report perplexity. Ships with a bigram model, a uniform reference
//!    model, and an analytic stub for scheduler tests.

pub mod competence;
pub mod corpus;
pub mod difficulty;
pub mod learner;
pub mod scheduler;

pub use competence::{competence, CompetenceParams};
pub use corpus::{
    build_vocabulary, gen_synthetic, load_manifest, normalize_report, write_manifest, Corpus,
    CorpusError, Report, SyntheticConfig, TrainingInstance, Vocabulary, LABEL_DIM,
};
pub use difficulty::{
    build_normal_profile, rank_by_metric, score_corpus, score_corpus_seq, textual_confidence_d4,
    textual_heuristic_d3, visual_confidence_d2, visual_heuristic_d1, DifficultyScores, Metric,
    NormalProfile, ScoreError, ScoredCorpus,
};
pub use learner::{
    AnalyticLearner, Batch, Learner, LearnerError, NGramLearner, ReportScorer, UniformLearner,
};
pub use scheduler::{
    run, window_size, BatchSpec, CurriculumScheduler, CurriculumTag, EarlyStop, RouteStrategy,
    ScheduleError, ScheduleOptions, ScheduleTrace,
};
