//! Text formats.
//!
//! Anchor TSV: one anchor per line as four tab-separated decimal integers
//! `a b c d`; lines starting with `#` and empty lines are skipped. Writing
//! produces exactly `a\tb\tc\td\n` per anchor.
//!
//! Sequence files hold the text and the pattern either as two plain lines
//! or as a FASTA file with exactly two records (detected by a leading `>`).

use std::fmt::Write as _;

use crate::anchor::{Anchor, AnchorSet};
use crate::error::{Error, Result};
use crate::generate::StringPair;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses anchor TSV without validating the anchors.
pub fn parse_anchors(input: &str) -> Result<Vec<Anchor>> {
    let mut anchors = Vec::new();
    for (n, line) in input.lines().enumerate() {
        let line_no = n + 1;
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(parse_error(
                line_no,
                format!("expected 4 tab-separated fields, found {}", fields.len()),
            ));
        }
        let mut v = [0i64; 4];
        for (slot, field) in v.iter_mut().zip(&fields) {
            if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_error(
                    line_no,
                    format!("not a decimal integer: {field:?}"),
                ));
            }
            *slot = field
                .parse()
                .map_err(|_| parse_error(line_no, format!("integer out of range: {field}")))?;
        }
        anchors.push(Anchor::new(v[0], v[1], v[2], v[3]));
    }
    Ok(anchors)
}

/// Parses and validates anchor TSV.
pub fn read_anchor_set(input: &str) -> Result<AnchorSet> {
    AnchorSet::new(parse_anchors(input)?)
}

pub fn write_anchors(anchors: &[Anchor]) -> String {
    let mut out = String::with_capacity(anchors.len() * 16);
    for x in anchors {
        writeln!(out, "{}\t{}\t{}\t{}", x.a, x.b, x.c, x.d).unwrap();
    }
    out
}

/// Parses a two-line or two-record FASTA sequence file.
pub fn parse_sequences(input: &[u8]) -> Result<StringPair> {
    let lines: Vec<&[u8]> = input
        .split(|&b| b == b'\n')
        .map(|l| l.strip_suffix(b"\r").unwrap_or(l))
        .collect();
    if input.first() == Some(&b'>') {
        let mut records: Vec<Vec<u8>> = Vec::new();
        for line in &lines {
            if line.first() == Some(&b'>') {
                records.push(Vec::new());
            } else if let Some(seq) = records.last_mut() {
                seq.extend(line.iter().filter(|b| !b.is_ascii_whitespace()));
            }
        }
        if records.len() != 2 {
            return Err(parse_error(
                1,
                format!(
                    "FASTA input must hold exactly 2 records, found {}",
                    records.len()
                ),
            ));
        }
        let pattern = records.pop().unwrap();
        let text = records.pop().unwrap();
        return Ok(StringPair { text, pattern });
    }
    let mut content: Vec<&[u8]> = lines;
    while content.last().is_some_and(|l| l.is_empty()) {
        content.pop();
    }
    if content.len() != 2 {
        return Err(parse_error(
            content.len().max(1),
            format!("expected 2 lines (text, pattern), found {}", content.len()),
        ));
    }
    Ok(StringPair::new(content[0], content[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_roundtrip_is_bit_exact() {
        let text = "1\t5\t2\t6\n3\t8\t5\t10\n";
        let anchors = parse_anchors(text).unwrap();
        assert_eq!(
            anchors,
            vec![Anchor::new(1, 5, 2, 6), Anchor::new(3, 8, 5, 10)]
        );
        assert_eq!(write_anchors(&anchors), text);
    }

    #[test]
    fn tsv_skips_comments_and_blank_lines() {
        let anchors = parse_anchors("# a b c d\n\n1\t1\t1\t1\r\n").unwrap();
        assert_eq!(anchors, vec![Anchor::new(1, 1, 1, 1)]);
        assert!(parse_anchors("").unwrap().is_empty());
    }

    #[test]
    fn tsv_errors_carry_line_numbers() {
        let err = parse_anchors("1\t2\t3\t4\n1 2 3 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(
            parse_anchors("1\t2\t3\t-4\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_anchors("1\t2\t3\tx\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_anchors("1\t2\t3\t99999999999999999999\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn tsv_zero_coordinate_rejected_by_validation() {
        let err = read_anchor_set("0\t2\t1\t3\n").unwrap_err();
        assert!(matches!(err, Error::NonPositiveCoordinate { index: 0, .. }));
    }

    #[test]
    fn plain_sequences() {
        let sp = parse_sequences(b"ACGT\nCGTA\n").unwrap();
        assert_eq!(sp, StringPair::new("ACGT", "CGTA"));
        assert!(parse_sequences(b"ACGT\n").is_err());
        assert!(parse_sequences(b"A\nB\nC\n").is_err());
    }

    #[test]
    fn fasta_sequences() {
        let sp = parse_sequences(b">t\nAC\nGT\n>p desc\nCGTA\n").unwrap();
        assert_eq!(sp, StringPair::new("ACGT", "CGTA"));
        assert!(parse_sequences(b">only\nACGT\n").is_err());
    }
}
