use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty connection set")]
    Empty,
    #[error("expected a non-negative integer at position {position}, found {found:?}")]
    BadToken { position: usize, found: String },
}

/// Parses a comma-separated residue list such as `1,7,8,11,12,18`.
///
/// Positions in errors are 0-based character offsets into `text`.
pub fn parse_connection_set(text: &str) -> Result<Vec<u64>, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split(',') {
        let lead = token.len() - token.trim_start().len();
        let trimmed = token.trim();
        match trimmed.parse::<u64>() {
            Ok(v) => out.push(v),
            Err(_) => {
                let position = text[..offset + lead].chars().count();
                return Err(ParseError::BadToken {
                    position,
                    found: trimmed.to_string(),
                });
            }
        }
        offset += token.len() + 1;
    }
    Ok(out)
}
