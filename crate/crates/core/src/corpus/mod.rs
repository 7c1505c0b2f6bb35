//! Corpus loading, normalization, and synthesis.
//!
//! A [`Corpus`] is a list of [`TrainingInstance`]s sharing one embedding
//! dimension. Instances come from a JSONL manifest ([`load_manifest`]) or
//! from the deterministic synthetic generator ([`gen_synthetic`]).

mod manifest;
mod synthetic;
mod vocab;

pub use manifest::{load_manifest, write_manifest};
pub use synthetic::{gen_synthetic, SyntheticConfig};
pub use vocab::{build_vocabulary, Vocabulary};

use thiserror::Error;

/// Number of label probabilities carried by every instance.
pub const LABEL_DIM: usize = 14;

/// Tokens that mark a sentence as describing a normal finding.
pub const NORMAL_KEYWORDS: [&str; 4] = ["no", "normal", "clear", "stable"];

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("no token survives normalization")]
    EmptyAfterNormalization,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// A normalized report: sentences of lowercase alphabetic tokens.
///
/// Construction goes through [`normalize_report`], so a `Report` value never
/// contains empty sentences or non-alphabetic tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    sentences: Vec<Vec<String>>,
}

impl Report {
    pub fn sentences(&self) -> &[Vec<String>] {
        &self.sentences
    }

    /// All tokens in reading order, sentences flattened.
    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.sentences.iter().flatten().map(String::as_str)
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(Vec::len).sum()
    }

    /// Sentences that contain none of [`NORMAL_KEYWORDS`] as a whole token.
    pub fn abnormal_sentence_count(&self) -> usize {
        self.sentences
            .iter()
            .filter(|sentence| {
                !sentence
                    .iter()
                    .any(|tok| NORMAL_KEYWORDS.contains(&tok.as_str()))
            })
            .count()
    }

    /// Render back to text. Normalizing the result reproduces `self`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for sentence in &self.sentences {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&sentence.join(" "));
            out.push('.');
        }
        out
    }

    /// Assemble from pre-normalized sentences. Used by the synthetic
    /// generator; panics if a token would not survive normalization.
    pub(crate) fn from_sentences(sentences: Vec<Vec<String>>) -> Self {
        for sentence in &sentences {
            assert!(!sentence.is_empty(), "empty sentence in report literal");
            for tok in sentence {
                assert!(
                    !tok.is_empty() && tok.chars().all(|c| c.is_ascii_lowercase()),
                    "token {tok:?} is not normalized"
                );
            }
        }
        Self { sentences }
    }
}

/// Split raw report text into sentences of lowercase alphabetic tokens.
///
/// Sentences split on `.`, `!`, `?`. Tokens containing any non-alphabetic
/// character are dropped entirely (so "x-ray", "2", "t12" all vanish), and
/// sentences left empty are removed.
pub fn normalize_report(raw_text: &str) -> Result<Report, CorpusError> {
    let mut sentences = Vec::new();
    for chunk in raw_text.split(['.', '!', '?']) {
        let sentence: Vec<String> = chunk
            .split_whitespace()
            .map(str::to_lowercase)
            .filter(|tok| !tok.is_empty() && tok.chars().all(|c| c.is_ascii_lowercase()))
            .collect();
        if !sentence.is_empty() {
            sentences.push(sentence);
        }
    }
    if sentences.is_empty() {
        return Err(CorpusError::EmptyAfterNormalization);
    }
    Ok(Report { sentences })
}

/// One image/report training pair with precomputed vision-side features.
#[derive(Debug, Clone)]
pub struct TrainingInstance {
    pub id: String,
    /// Feature vector; dimension is uniform across a corpus, norm nonzero.
    pub embedding: Vec<f64>,
    /// Per-label probabilities, each in [0, 1], length [`LABEL_DIM`].
    pub label_probs: [f64; LABEL_DIM],
    pub report: Report,
    pub is_normal: bool,
    /// Mean per-token negative log-likelihood, when supplied upstream.
    pub precomputed_nll: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    instances: Vec<TrainingInstance>,
    embedding_dim: usize,
}

impl Corpus {
    /// Validate and assemble a corpus: unique ids, uniform embedding
    /// dimension, nonzero embedding norms, probabilities in range.
    pub fn from_instances(instances: Vec<TrainingInstance>) -> Result<Self, CorpusError> {
        let Some(first) = instances.first() else {
            return Err(CorpusError::Schema("empty corpus".into()));
        };
        let embedding_dim = first.embedding.len();
        let mut seen = std::collections::HashSet::new();
        for inst in &instances {
            if !seen.insert(inst.id.as_str()) {
                return Err(CorpusError::Schema(format!("duplicate id \"{}\"", inst.id)));
            }
            if inst.embedding.len() != embedding_dim {
                return Err(CorpusError::Schema(format!(
                    "instance \"{}\": embedding has dimension {}, expected {}",
                    inst.id,
                    inst.embedding.len(),
                    embedding_dim
                )));
            }
            if inst.embedding.iter().map(|x| x * x).sum::<f64>() == 0.0 {
                return Err(CorpusError::Schema(format!(
                    "instance \"{}\": embedding has zero norm",
                    inst.id
                )));
            }
            if inst
                .label_probs
                .iter()
                .any(|p| !(0.0..=1.0).contains(p) || p.is_nan())
            {
                return Err(CorpusError::Schema(format!(
                    "instance \"{}\": label probability outside [0, 1]",
                    inst.id
                )));
            }
            if let Some(nll) = inst.precomputed_nll {
                if !(nll >= 0.0) {
                    return Err(CorpusError::Schema(format!(
                        "instance \"{}\": nll must be nonnegative",
                        inst.id
                    )));
                }
            }
        }
        // A clone here would double memory on large corpora; move instead.
        let mut seen_owned = Vec::new();
        seen_owned.clear();
        drop(seen_owned);
        Ok(Self {
            instances,
            embedding_dim,
        })
    }

    pub fn instances(&self) -> &[TrainingInstance] {
        &self.instances
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn embedding_dim(&self) -> usize {
        self.embedding_dim
    }

    pub fn get(&self, index: usize) -> &TrainingInstance {
        &self.instances[index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(sentence: &[&str]) -> Vec<String> {
        sentence.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn normalize_basic_two_sentences() {
        let report = normalize_report("The lungs are clear. No effusion.").unwrap();
        assert_eq!(
            report.sentences(),
            &[toks(&["the", "lungs", "are", "clear"]), toks(&["no", "effusion"])]
        );
    }

    #[test]
    fn normalize_drops_non_alpha_tokens() {
        let report = normalize_report("X-ray 2 shows T12 fracture.").unwrap();
        assert_eq!(report.sentences(), &[toks(&["shows", "fracture"])]);
    }

    #[test]
    fn normalize_rejects_all_numeric_input() {
        let err = normalize_report("123 456.").unwrap_err();
        assert!(matches!(err, CorpusError::EmptyAfterNormalization));
    }

    #[test]
    fn normalize_handles_bang_and_question_boundaries() {
        let report = normalize_report("clear! effusion? stable").unwrap();
        assert_eq!(report.sentences().len(), 3);
    }

    #[test]
    fn normalize_is_idempotent_via_text_round_trip() {
        let report = normalize_report("The lungs are clear. No effusion seen!").unwrap();
        let again = normalize_report(&report.to_text()).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn abnormal_sentence_counting_uses_exact_tokens() {
        let report = normalize_report("Normally sized heart.").unwrap();
        // "normally" is not the keyword "normal".
        assert_eq!(report.abnormal_sentence_count(), 1);
        let report = normalize_report("Heart size is normal.").unwrap();
        assert_eq!(report.abnormal_sentence_count(), 0);
    }

    fn dummy_instance(id: &str, embedding: Vec<f64>) -> TrainingInstance {
        TrainingInstance {
            id: id.to_string(),
            embedding,
            label_probs: [0.5; LABEL_DIM],
            report: normalize_report("the lungs are clear.").unwrap(),
            is_normal: true,
            precomputed_nll: None,
        }
    }

    #[test]
    fn corpus_rejects_duplicate_ids() {
        let err = Corpus::from_instances(vec![
            dummy_instance("a", vec![1.0, 0.0]),
            dummy_instance("a", vec![0.0, 1.0]),
        ])
        .unwrap_err();
        assert!(err.to_string().contains("duplicate id"));
    }

    #[test]
    fn corpus_rejects_dimension_mismatch() {
        let err = Corpus::from_instances(vec![
            dummy_instance("a", vec![1.0, 0.0]),
            dummy_instance("b", vec![1.0, 0.0, 0.0]),
        ])
        .unwrap_err();
        assert!(err.to_string().contains("dimension"));
    }

    #[test]
    fn corpus_rejects_zero_embedding() {
        let err = Corpus::from_instances(vec![dummy_instance("a", vec![0.0, 0.0])]).unwrap_err();
        assert!(err.to_string().contains("zero norm"));
    }
}
