//! The on-disk code format: a header line `n d w`, then one support listing
//! per word. `#` starts a comment line and blank lines are skipped. A line
//! holding a single `-` is the empty support (the zero word), which mixed
//! weight codes (`w == 0`) need. Emitting and parsing round-trip exactly.

use cwcode::{Code, Codeword};
use std::fmt;

/// A parse failure, pointing at the 1-based input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        msg: msg.into(),
    }
}

/// Parses the text of a code file.
pub fn parse_code_file(text: &str) -> Result<Code, ParseError> {
    let mut header: Option<(u32, u32, u32)> = None;
    let mut words: Vec<Codeword> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if fields.len() != 3 {
                    return Err(err(
                        lineno,
                        format!("header must be `n d w`, got {} fields", fields.len()),
                    ));
                }
                let mut nums = [0u32; 3];
                for (slot, field) in nums.iter_mut().zip(&fields) {
                    *slot = field
                        .parse()
                        .map_err(|_| err(lineno, format!("`{field}` is not a number")))?;
                }
                let [n, d, w] = nums;
                if !(1..=64).contains(&n) {
                    return Err(err(lineno, format!("length {n} is outside 1..=64")));
                }
                if w > n {
                    return Err(err(lineno, format!("weight {w} exceeds length {n}")));
                }
                header = Some((n, d, w));
            }
            Some((n, _, w)) => {
                let support: Vec<u32> = if line == "-" {
                    Vec::new()
                } else {
                    let mut parsed = Vec::new();
                    for field in line.split_whitespace() {
                        let index: u32 = field
                            .parse()
                            .map_err(|_| err(lineno, format!("`{field}` is not an index")))?;
                        parsed.push(index);
                    }
                    parsed
                };
                if w > 0 && support.len() != w as usize {
                    return Err(err(
                        lineno,
                        format!("expected {} indices, got {}", w, support.len()),
                    ));
                }
                let word =
                    Codeword::from_support(&support, n).map_err(|e| err(lineno, e.to_string()))?;
                words.push(word);
            }
        }
    }
    let (n, d, w) = header.ok_or_else(|| err(text.lines().count().max(1), "missing header"))?;
    Code::new(n, d, w, words).map_err(|e| err(1, e.to_string()))
}

/// Renders a code in the canonical form `parse_code_file` accepts: header,
/// one line per word, single spaces, trailing newline, no comments.
pub fn emit_code_file(code: &Code) -> String {
    let mut out = format!("{} {} {}\n", code.n(), code.d(), code.w());
    for word in code.words() {
        let support = word.support();
        if support.is_empty() {
            out.push('-');
        } else {
            let line = support
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&line);
        }
        out.push('\n');
    }
    out
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_file() {
        let text = "# a comment\n\n7 4 3\n0 1 2\n0 3 4\n";
        let c = parse_code_file(text).unwrap();
        assert_eq!((c.n(), c.d(), c.w()), (7, 4, 3));
        assert_eq!(c.len(), 2);
        assert_eq!(c.words()[1].support(), vec![0, 3, 4]);
    }

    #[test]
    fn round_trips_exactly() {
        let text = "7 4 3\n0 1 2\n0 3 4\n1 3 5\n";
        let c = parse_code_file(text).unwrap();
        assert_eq!(emit_code_file(&c), text);
        let again = parse_code_file(&emit_code_file(&c)).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn empty_support_round_trips() {
        let text = "16 6 0\n-\n0 1 2 3 4 5\n";
        let c = parse_code_file(text).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.words()[0].weight(), 0);
        assert_eq!(emit_code_file(&c), text);
    }

    #[test]
    fn header_errors_carry_line_numbers() {
        let e = parse_code_file("# only a comment\n7 4\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("header"));

        let e = parse_code_file("7 4 x\n").unwrap_err();
        assert_eq!(e.line, 1);

        let e = parse_code_file("0 4 3\n").unwrap_err();
        assert!(e.msg.contains("outside"));

        let e = parse_code_file("7 4 9\n").unwrap_err();
        assert!(e.msg.contains("exceeds"));

        let e = parse_code_file("# nothing\n\n").unwrap_err();
        assert!(e.msg.contains("missing header"));
    }

    #[test]
    fn word_errors_carry_line_numbers() {
        let e = parse_code_file("7 4 3\n0 1 2\n0 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.msg.contains("expected 3 indices"));

        let e = parse_code_file("7 4 3\n0 1 7\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("out of range"));

        let e = parse_code_file("7 4 3\n2 1 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("increasing"));

        let e = parse_code_file("7 4 3\n0 1 two\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("not an index"));
    }

    #[test]
    fn mixed_weight_accepts_any_support_size() {
        let text = "8 2 0\n0\n0 1 2 3 4 5 6 7\n-\n";
        let c = parse_code_file(text).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(emit_code_file(&c), text);
    }

    #[test]
    fn comments_and_blanks_between_words() {
        let text = "7 4 3\n0 1 2\n# interlude\n\n0 3 4\n";
        let c = parse_code_file(text).unwrap();
        assert_eq!(c.len(), 2);
    }
}
