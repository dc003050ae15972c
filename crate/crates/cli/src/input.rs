use std::fs;
use std::io::{self, Read};
use std::sync::Arc;

use pclwords::{OrderedAlphabet, Word};

use crate::CliError;

/// One raw input word and where it came from.
#[derive(Debug, Clone)]
pub struct Item {
    pub location: String,
    pub text: String,
}

/// Positional words first, then lines of `--file` (`-` reads stdin).
///
/// Lines starting with `#` and blank lines are skipped; trailing whitespace
/// is trimmed.
pub fn collect(words: &[String], file: Option<&str>) -> Result<Vec<Item>, CliError> {
    let mut items: Vec<Item> = words
        .iter()
        .enumerate()
        .map(|(i, w)| Item { location: format!("argument {}", i + 1), text: w.clone() })
        .collect();
    if let Some(path) = file {
        let (name, content) = if path == "-" {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).map_err(|e| CliError::Io { path: "<stdin>".into(), source: e })?;
            ("<stdin>".to_string(), buf)
        } else {
            let content = fs::read_to_string(path).map_err(|e| CliError::Io { path: path.into(), source: e })?;
            (path.to_string(), content)
        };
        for (n, line) in content.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            items.push(Item { location: format!("{name}:{}", n + 1), text: line.to_string() });
        }
    }
    Ok(items)
}

/// How words of a subcommand are read.
#[derive(Debug, Clone)]
pub enum Letters {
    /// Any alphabet; inferred from the word when none is given.
    Generic(Option<Arc<OrderedAlphabet>>),
    /// The fixed alphabet `a < b < c`.
    Ternary,
}

impl Letters {
    pub fn parse(&self, item: &Item) -> Result<Word, CliError> {
        let parsed = match self {
            Letters::Ternary => Word::ternary(&item.text),
            Letters::Generic(Some(alphabet)) => Word::parse(&item.text, alphabet),
            Letters::Generic(None) if item.text.is_empty() => Ok(Word::empty(&OrderedAlphabet::abc())),
            Letters::Generic(None) => {
                OrderedAlphabet::natural(&item.text).and_then(|a| Word::parse(&item.text, &Arc::new(a)))
            }
        };
        parsed.map_err(|source| CliError::Input { location: item.location.clone(), input: item.text.clone(), source })
    }
}
