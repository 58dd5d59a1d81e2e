//! Normalization of raw social-media text: hyperlinks, mentions, hashtags,
//! emoticons, and special characters are stripped, the result is lowercased
//! and whitespace-tokenized.

use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

use regex::Regex;

use crate::error::Error;
use crate::Result;

/// Emoji lexicon shipped with the crate (`emoji,score` CSV).
pub const DEFAULT_EMOJI_LEXICON: &str = include_str!("../data/emoji_lexicon.csv");

/// ASCII emoticons removed when they appear as standalone tokens.
pub const ASCII_EMOTICONS: &[&str] = &[
    ":)", ":-)", ":(", ":-(", ";)", ";-)", ":D", ":-D", ":P", ":-P", ":p", ":o", ":O", ":'(",
    ":/", ":-/", ":|", "<3", "</3", "=)", "=(", "=D", "xD", "XD", "xd", ":*", ";p", ";P", "^_^",
    "-_-", "o_O", "O_o", ":3",
];

/// Emoji sentiment scores keyed by the literal emoji sequence.
#[derive(Debug, Clone, Default)]
pub struct EmojiLexicon {
    entries: HashMap<String, f64>,
}

impl EmojiLexicon {
    pub fn from_csv(content: &str) -> Result<EmojiLexicon> {
        let mut entries = HashMap::new();
        for (idx, line) in content.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            // the emoji itself may not contain a comma; split on the last one
            let (emoji, score) = line.rsplit_once(',').ok_or_else(|| Error::Format {
                line: idx + 1,
                message: "expected `emoji,score`".into(),
            })?;
            let score: f64 = score.trim().parse().map_err(|_| Error::Format {
                line: idx + 1,
                message: format!("invalid score {score:?}"),
            })?;
            if !score.is_finite() {
                return Err(Error::Format {
                    line: idx + 1,
                    message: "score must be finite".into(),
                });
            }
            entries.insert(emoji.trim().to_string(), score);
        }
        Ok(EmojiLexicon { entries })
    }

    pub fn load(path: &Path) -> Result<EmojiLexicon> {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::io(path.display().to_string(), e))?;
        Self::from_csv(&content)
    }

    pub fn default_lexicon() -> EmojiLexicon {
        Self::from_csv(DEFAULT_EMOJI_LEXICON).expect("bundled emoji lexicon parses")
    }

    pub fn score(&self, emoji: &str) -> Option<f64> {
        self.entries.get(emoji).copied()
    }

    pub fn sequences(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn tco_url_re() -> &'static Regex {
    // the corpus writes shortened URLs in a space-tokenized form,
    // e.g. `https // t . co / APKD4G8lh0`
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)https?\s*/\s*/\s*t\s*\.\s*co\s*/\s*\S*").unwrap())
}

fn url_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)\bhttps?://\S+|\bwww\.\S+").unwrap())
}

/// Membership in the Unicode emoji blocks covered by the cleaner. The
/// final alphabet whitelist would drop these anyway; this is exposed so
/// callers can distinguish emoji from other stripped characters.
pub fn is_emoji_char(c: char) -> bool {
    matches!(u32::from(c),
        0x1F000..=0x1FAFF      // pictographs, emoticons, transport, symbols
        | 0x2600..=0x27BF      // misc symbols, dingbats
        | 0x2B00..=0x2BFF      // misc symbols and arrows (stars etc.)
        | 0xFE00..=0xFE0F      // variation selectors
        | 0x200D               // zero-width joiner
        | 0x20E3               // combining keycap
        | 0x2122 | 0x2139      // ™ ℹ
        | 0x2190..=0x21FF      // arrows
    )
}

/// Clean a raw sentence: remove URLs, `@mention`s, `# hashtag`s, emoticons
/// and emoji, lowercase, restrict to `[a-z0-9 ]`, collapse whitespace.
pub fn clean(raw_text: &str, lexicon: &EmojiLexicon) -> String {
    let mut text = tco_url_re().replace_all(raw_text, " ").into_owned();
    text = url_re().replace_all(&text, " ").into_owned();

    // token-level pass: mentions, hashtags, ASCII emoticons
    let mut kept: Vec<&str> = Vec::new();
    let mut skip_next = false;
    for tok in text.split_whitespace() {
        if skip_next {
            skip_next = false;
            continue;
        }
        if tok == "@" || tok == "#" {
            // bare marker: the following token is the mention/hashtag body
            skip_next = true;
            continue;
        }
        if tok.starts_with('@') || tok.starts_with('#') {
            continue;
        }
        let lowered_tok = tok.to_lowercase();
        if ASCII_EMOTICONS.iter().any(|e| e.to_lowercase() == lowered_tok) {
            continue;
        }
        kept.push(tok);
    }
    let mut text = kept.join(" ");

    // multi-codepoint lexicon sequences first, then per-char emoji ranges
    for seq in lexicon.sequences() {
        if text.contains(seq) {
            text = text.replace(seq, " ");
        }
    }
    // lowercase, then whitelist: everything outside [a-z0-9] (emoji ranges
    // included) becomes a separator
    let lowered = text.to_lowercase();
    let mapped: String = lowered
        .chars()
        .map(|c| {
            if c.is_ascii_lowercase() || c.is_ascii_digit() {
                c
            } else {
                ' '
            }
        })
        .collect();

    mapped.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Split cleaned text on spaces, dropping empty tokens.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(' ')
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

/// Clean and tokenize every sentence of a split in place.
pub fn preprocess_split(split: &mut crate::corpus::CorpusSplit, lexicon: &EmojiLexicon) {
    for s in &mut split.sentences {
        let cleaned = clean(&s.raw_text, lexicon);
        s.tokens = tokenize(&cleaned);
    }
}
