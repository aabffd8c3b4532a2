use std::collections::HashMap;
use std::fmt;

use super::error::{LsysError, Result};

/// Character sequences that may not appear inside a symbol token.
pub const RESERVED: [&str; 7] = ["->", "~", "(", ")", "|", "*", ":"];

/// Index of a symbol inside one system's extended alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub u32);

impl SymbolId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A sentential form: a string over the extended alphabet.
pub type Word = Vec<SymbolId>;

pub fn validate_token(token: &str) -> Result<()> {
    if token.is_empty() {
        return Err(LsysError::InvalidToken { token: token.into(), reason: "empty" });
    }
    if token.chars().any(char::is_whitespace) {
        return Err(LsysError::InvalidToken { token: token.into(), reason: "contains whitespace" });
    }
    if RESERVED.iter().any(|r| token.contains(r)) {
        return Err(LsysError::InvalidToken {
            token: token.into(),
            reason: "contains a reserved character",
        });
    }
    Ok(())
}

/// Interned symbol tokens. Symbols are identified by exact token equality.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    tokens: Vec<String>,
    index: HashMap<String, SymbolId>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet::default();
        for t in tokens {
            alphabet.insert(t.into())?;
        }
        Ok(alphabet)
    }

    pub fn insert(&mut self, token: String) -> Result<SymbolId> {
        validate_token(&token)?;
        if self.index.contains_key(&token) {
            return Err(LsysError::DuplicateSymbol(token));
        }
        let id = SymbolId(self.tokens.len() as u32);
        self.index.insert(token.clone(), id);
        self.tokens.push(token);
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn get(&self, token: &str) -> Option<SymbolId> {
        self.index.get(token).copied()
    }

    pub fn id(&self, token: &str) -> Result<SymbolId> {
        self.get(token).ok_or_else(|| LsysError::UnknownSymbol(token.to_string()))
    }

    pub fn token(&self, id: SymbolId) -> &str {
        &self.tokens[id.index()]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> {
        (0..self.tokens.len() as u32).map(SymbolId)
    }

    pub fn contains_id(&self, id: SymbolId) -> bool {
        id.index() < self.tokens.len()
    }

    /// True when every token is a single character, so words print without separators.
    pub fn is_compact(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses a word. Whitespace separates tokens; a chunk that is not itself a token is
    /// split by longest match. `~` and the empty string denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut word = Vec::new();
        for chunk in text.split_whitespace() {
            if chunk == "~" {
                continue;
            }
            if let Some(id) = self.get(chunk) {
                word.push(id);
                continue;
            }
            let mut rest = chunk;
            while !rest.is_empty() {
                let best = self
                    .tokens
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| rest.starts_with(t.as_str()))
                    .max_by_key(|(_, t)| t.len());
                match best {
                    Some((i, t)) => {
                        word.push(SymbolId(i as u32));
                        rest = &rest[t.len()..];
                    }
                    None => return Err(LsysError::Untokenizable(chunk.to_string())),
                }
            }
        }
        Ok(word)
    }

    /// Joins tokens without separators when every symbol of the word is one character,
    /// with spaces otherwise.
    pub fn format_word(&self, word: &[SymbolId]) -> String {
        if word.is_empty() {
            return String::new();
        }
        let compact = word.iter().all(|&s| self.token(s).chars().count() == 1);
        let sep = if compact { "" } else { " " };
        word.iter().map(|&s| self.token(s)).collect::<Vec<_>>().join(sep)
    }

    /// Space-separated rendering, `~` for the empty word.
    pub fn format_word_spaced(&self, word: &[SymbolId]) -> String {
        if word.is_empty() {
            return "~".to_string();
        }
        word.iter().map(|&s| self.token(s)).collect::<Vec<_>>().join(" ")
    }

    /// Length-lexicographic comparison on token strings.
    pub fn cmp_words(&self, a: &[SymbolId], b: &[SymbolId]) -> std::cmp::Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            a.iter().map(|&s| self.token(s)).cmp(b.iter().map(|&s| self.token(s)))
        })
    }
}
