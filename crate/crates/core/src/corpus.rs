//! Dataset loading, validation, and the descriptive corpus statistics
//! (class distributions, frequent words, overlap matrix).

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Default English stopword list shipped with the crate.
pub const DEFAULT_STOPWORDS: &str = include_str!("../data/stopwords_en.txt");

/// The three sentiment classes. The declaration order (Positive < Negative
/// < Neutral) is the total order used for deterministic tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SentimentLabel {
    Positive,
    Negative,
    Neutral,
}

impl SentimentLabel {
    /// All labels in tie-breaking order.
    pub const ALL: [SentimentLabel; 3] = [
        SentimentLabel::Positive,
        SentimentLabel::Negative,
        SentimentLabel::Neutral,
    ];

    pub fn index(self) -> usize {
        match self {
            SentimentLabel::Positive => 0,
            SentimentLabel::Negative => 1,
            SentimentLabel::Neutral => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<SentimentLabel> {
        Self::ALL.get(i).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SentimentLabel::Positive => "positive",
            SentimentLabel::Negative => "negative",
            SentimentLabel::Neutral => "neutral",
        }
    }
}

impl fmt::Display for SentimentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SentimentLabel {
    type Err = ();

    /// Case-insensitive parse of `positive` / `negative` / `neutral`.
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "positive" => Ok(SentimentLabel::Positive),
            "negative" => Ok(SentimentLabel::Negative),
            "neutral" => Ok(SentimentLabel::Neutral),
            _ => Err(()),
        }
    }
}

/// One corpus example. `tokens` is empty until preprocessing has run;
/// `label` is absent for unlabeled prediction input.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabeledSentence {
    pub id: String,
    pub raw_text: String,
    pub tokens: Vec<String>,
    pub label: Option<SentimentLabel>,
}

/// Which dataset split a file belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitName {
    Train,
    Validation,
    Test,
}

impl fmt::Display for SplitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SplitName::Train => "train",
            SplitName::Validation => "validation",
            SplitName::Test => "test",
        };
        f.write_str(s)
    }
}

impl FromStr for SplitName {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s.to_ascii_lowercase().as_str() {
            "train" => Ok(SplitName::Train),
            "validation" | "valid" | "dev" => Ok(SplitName::Validation),
            "test" => Ok(SplitName::Test),
            _ => Err(()),
        }
    }
}

/// A named, non-empty list of sentences with unique ids.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusSplit {
    pub name: SplitName,
    pub sentences: Vec<LabeledSentence>,
}

/// Lowercase English stopwords.
#[derive(Debug, Clone)]
pub struct StopwordList {
    words: HashSet<String>,
}

impl StopwordList {
    pub fn from_lines(content: &str) -> StopwordList {
        let words = content
            .lines()
            .map(|l| l.trim().to_lowercase())
            .filter(|w| !w.is_empty() && !w.chars().any(char::is_whitespace))
            .collect();
        StopwordList { words }
    }

    pub fn load(path: &Path) -> Result<StopwordList> {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::io(path.display().to_string(), e))?;
        Ok(Self::from_lines(&content))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl Default for StopwordList {
    fn default() -> Self {
        Self::from_lines(DEFAULT_STOPWORDS)
    }
}

fn unescape_text(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some('t') => out.push('\t'),
                Some('\\') => out.push('\\'),
                Some(other) => {
                    out.push('\\');
                    out.push(other);
                }
                None => out.push('\\'),
            }
        } else {
            out.push(c);
        }
    }
    out
}

fn escape_text(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\t', "\\t")
}

/// Load a TSV split (`id<TAB>label<TAB>text`, no header). Labels parse
/// case-insensitively; an empty label field yields an unlabeled sentence.
pub fn load_split(path: &Path, name: SplitName) -> Result<CorpusSplit> {
    let content =
        std::fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    load_split_from_str(&content, name)
}

/// Parse split content from a string; used by `load_split` and tests.
pub fn load_split_from_str(content: &str, name: SplitName) -> Result<CorpusSplit> {
    let mut sentences = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in content.lines().enumerate() {
        let lineno = idx + 1;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 3 tab-separated fields, got {}", fields.len()),
            });
        }
        let id = fields[0].trim().to_string();
        if id.is_empty() {
            return Err(Error::Parse {
                line: lineno,
                message: "empty id".into(),
            });
        }
        if !seen.insert(id.clone()) {
            return Err(Error::DuplicateId { line: lineno, id });
        }
        let label_field = fields[1].trim();
        let label = if label_field.is_empty() {
            None
        } else {
            Some(label_field.parse::<SentimentLabel>().map_err(|_| {
                Error::UnknownLabel {
                    line: lineno,
                    label: label_field.to_string(),
                }
            })?)
        };
        sentences.push(LabeledSentence {
            id,
            raw_text: unescape_text(fields[2]),
            tokens: Vec::new(),
            label,
        });
    }
    if sentences.is_empty() {
        return Err(Error::EmptyInput("split has no sentences".into()));
    }
    Ok(CorpusSplit { name, sentences })
}

/// Write a split back in the TSV format. Tabs and backslashes in the text
/// are escaped so that reloading round-trips `raw_text` exactly.
pub fn save_split(split: &CorpusSplit, path: &Path) -> Result<()> {
    let mut out = String::new();
    for s in &split.sentences {
        let label = s.label.map(|l| l.as_str()).unwrap_or("");
        out.push_str(&format!("{}\t{}\t{}\n", s.id, label, escape_text(&s.raw_text)));
    }
    std::fs::write(path, out).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Count sentences per class. Unlabeled sentences are not counted.
pub fn class_distribution(split: &CorpusSplit) -> BTreeMap<SentimentLabel, usize> {
    let mut counts: BTreeMap<SentimentLabel, usize> =
        SentimentLabel::ALL.iter().map(|&l| (l, 0)).collect();
    for s in &split.sentences {
        if let Some(l) = s.label {
            *counts.get_mut(&l).unwrap() += 1;
        }
    }
    counts
}

/// Top `k` most frequent tokens among sentences of `label`, counting token
/// occurrences, keeping only tokens of at least `min_len` characters that
/// are not stopwords. Ties in frequency break lexicographically.
pub fn top_frequent_words(
    split: &CorpusSplit,
    label: SentimentLabel,
    k: usize,
    min_len: usize,
    stopwords: &StopwordList,
) -> Vec<String> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for s in split.sentences.iter().filter(|s| s.label == Some(label)) {
        for tok in &s.tokens {
            if tok.chars().count() >= min_len && !stopwords.contains(tok) {
                *counts.entry(tok.as_str()).or_insert(0) += 1;
            }
        }
    }
    let mut ranked: Vec<(&str, usize)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    ranked.into_iter().take(k).map(|(w, _)| w.to_string()).collect()
}

/// Pairwise percentage overlap of the per-class top-20 frequent-word lists.
/// The diagonal is undefined and left as `None`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OverlapMatrix {
    /// `cells[a][b]` for labels indexed in `SentimentLabel::ALL` order.
    pub cells: [[Option<f64>; 3]; 3],
    /// Set when some top list had fewer than 20 entries; the percentage is
    /// still computed with denominator 20.
    pub truncated_lists: bool,
}

impl OverlapMatrix {
    pub fn get(&self, a: SentimentLabel, b: SentimentLabel) -> Option<f64> {
        self.cells[a.index()][b.index()]
    }
}

const OVERLAP_TOP_K: usize = 20;
const OVERLAP_MIN_LEN: usize = 5;

/// Percentage overlap of the most frequent 20 words (length > 4 chars,
/// stopwords removed) between each pair of classes.
pub fn overlap_matrix(split: &CorpusSplit, stopwords: &StopwordList) -> OverlapMatrix {
    let tops: Vec<HashSet<String>> = SentimentLabel::ALL
        .iter()
        .map(|&l| {
            top_frequent_words(split, l, OVERLAP_TOP_K, OVERLAP_MIN_LEN, stopwords)
                .into_iter()
                .collect()
        })
        .collect();
    let truncated = tops.iter().any(|t| t.len() < OVERLAP_TOP_K);
    let mut cells = [[None; 3]; 3];
    for (i, a) in tops.iter().enumerate() {
        for (j, b) in tops.iter().enumerate() {
            if i == j {
                continue;
            }
            let inter = a.intersection(b).count();
            cells[i][j] = Some(100.0 * inter as f64 / OVERLAP_TOP_K as f64);
        }
    }
    OverlapMatrix {
        cells,
        truncated_lists: truncated,
    }
}
