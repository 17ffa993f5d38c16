//! OEIS b-files: optional `#` comment lines, then one "index value" pair per line.

use num_bigint::BigInt;

use crate::ore_shift::{Provenance, Sequence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BFileError {
    #[error("line {0}: expected \"index value\"")]
    MalformedLine(usize),
    #[error("line {line}: index {found} follows {previous}")]
    NonContiguousIndex { line: usize, previous: i64, found: i64 },
    #[error("no data lines")]
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub comments: Vec<String>,
    pub sequence: Sequence,
}

impl BFile {
    pub fn parse(text: &str) -> Result<BFile, BFileError> {
        let mut comments = Vec::new();
        let mut offset = None;
        let mut previous = 0i64;
        let mut terms = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(c) = line.strip_prefix('#') {
                comments.push(c.trim_start().to_string());
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(BFileError::MalformedLine(k + 1));
            };
            let i: i64 = i.parse().map_err(|_| BFileError::MalformedLine(k + 1))?;
            let v: BigInt = v.parse().map_err(|_| BFileError::MalformedLine(k + 1))?;
            match offset {
                None => offset = Some(i),
                Some(_) if i != previous + 1 => {
                    return Err(BFileError::NonContiguousIndex { line: k + 1, previous, found: i })
                }
                Some(_) => {}
            }
            previous = i;
            terms.push(v);
        }
        let offset = offset.ok_or(BFileError::Empty)?;
        Ok(BFile { comments, sequence: Sequence::new(offset, terms, Provenance::BFile) })
    }

    pub fn emit(&self) -> String {
        let mut s: String = self.comments.iter().map(|c| format!("# {c}\n")).collect();
        s.push_str(&emit_bfile(&self.sequence));
        s
    }
}

pub fn parse_bfile(text: &str) -> Result<Sequence, BFileError> {
    BFile::parse(text).map(|b| b.sequence)
}

/// Data lines only.
pub fn emit_bfile(a: &Sequence) -> String {
    a.indices().zip(&a.terms).map(|(n, t)| format!("{n} {t}\n")).collect()
}
