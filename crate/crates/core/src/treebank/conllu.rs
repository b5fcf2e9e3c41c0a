use std::io::BufRead;

use super::{validate_heads, RawSentence, Token, TreebankError};

fn malformed(line: usize, reason: impl Into<String>) -> TreebankError {
    TreebankError::MalformedLine { line, reason: reason.into() }
}

fn io_error(line: usize, e: std::io::Error) -> TreebankError {
    malformed(line, format!("read error: {e}"))
}

struct Builder {
    doc_id: String,
    sent_id: Option<String>,
    tokens: Vec<Token>,
    ordinal: usize,
}

impl Builder {
    fn finish(&mut self, out: &mut Vec<RawSentence>) -> Result<(), TreebankError> {
        if self.tokens.is_empty() {
            self.sent_id = None;
            return Ok(());
        }
        self.ordinal += 1;
        let sent_id = self.sent_id.take().unwrap_or_else(|| self.ordinal.to_string());
        let tokens = std::mem::take(&mut self.tokens);
        let heads: Vec<usize> = tokens.iter().map(|t| t.head).collect();
        validate_heads(&heads, &sent_id)?;
        out.push(RawSentence { doc_id: self.doc_id.clone(), sent_id, tokens });
        Ok(())
    }
}

/// Parses CoNLL-U. Comment lines start with `#`; `# newdoc id = ...` and
/// `# sent_id = ...` set the sentence identity (sentences without a
/// `sent_id` are numbered from 1). Multiword-token lines (`3-4`) and empty
/// nodes (`5.1`) are skipped. A blank line or the end of input closes a
/// sentence.
pub fn parse_conllu<R: BufRead>(reader: R) -> Result<Vec<RawSentence>, TreebankError> {
    let mut out = Vec::new();
    let mut b = Builder { doc_id: String::new(), sent_id: None, tokens: Vec::new(), ordinal: 0 };
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| io_error(lineno, e))?;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            b.finish(&mut out)?;
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(rest) = comment.strip_prefix("newdoc id") {
                b.doc_id = rest.trim_start().trim_start_matches('=').trim().to_string();
            } else if let Some(rest) = comment.strip_prefix("sent_id") {
                b.sent_id = Some(rest.trim_start().trim_start_matches('=').trim().to_string());
            }
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(malformed(lineno, format!("expected 10 tab-separated columns, found {}", cols.len())));
        }
        if cols[0].contains('-') || cols[0].contains('.') {
            continue;
        }
        let id: usize = cols[0].parse().map_err(|_| malformed(lineno, format!("bad token id {:?}", cols[0])))?;
        if id != b.tokens.len() + 1 {
            return Err(malformed(lineno, format!("token id {id} out of sequence")));
        }
        let head: usize = cols[6].parse().map_err(|_| malformed(lineno, format!("bad head {:?}", cols[6])))?;
        b.tokens.push(Token {
            id,
            form: Some(cols[1].to_string()),
            upos: cols[3].to_string(),
            head,
            deprel: cols[7].to_string(),
        });
    }
    b.finish(&mut out)?;
    Ok(out)
}

/// Parses one whitespace-separated head vector per line (1-based heads,
/// 0 for the root). Blank lines and lines starting with `#` are ignored.
/// Sentences are numbered from 1 in order of appearance.
pub fn parse_heads<R: BufRead>(reader: R) -> Result<Vec<RawSentence>, TreebankError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| io_error(lineno, e))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let heads: Vec<usize> = line
            .split_whitespace()
            .map(|h| h.parse().map_err(|_| malformed(lineno, format!("bad head {h:?}"))))
            .collect::<Result<_, _>>()?;
        let sent_id = (out.len() + 1).to_string();
        validate_heads(&heads, &sent_id)?;
        let tokens = heads
            .iter()
            .enumerate()
            .map(|(k, &head)| Token { id: k + 1, form: None, upos: String::new(), head, deprel: String::new() })
            .collect();
        out.push(RawSentence { doc_id: String::new(), sent_id, tokens });
    }
    Ok(out)
}
