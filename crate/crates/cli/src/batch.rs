//! Batch input: one semigroup per line, whitespace-separated positive
//! integers, `#` starts a comment, blank lines are skipped. Both LF and
//! CRLF endings are accepted.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchLine {
    /// 1-based line number in the input file.
    pub line_number: usize,
    pub generators: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchParseError {
    pub line_number: usize,
    pub message: String,
}

impl std::fmt::Display for BatchParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line_number, self.message)
    }
}

impl std::error::Error for BatchParseError {}

pub fn parse_batch(input: &str) -> Result<Vec<BatchLine>, BatchParseError> {
    let mut lines = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_number = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let generators = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| BatchParseError {
                    line_number,
                    message: format!("not a positive integer: {tok:?}"),
                })
            })
            .collect::<Result<Vec<u64>, _>>()?;
        lines.push(BatchLine {
            line_number,
            generators,
        });
    }
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_blanks_and_crlf() {
        let input = "# header\n6 8 9\n\n  7 8 9 11  # four generators\r\n2 3\r\n";
        let lines = parse_batch(input).unwrap();
        assert_eq!(
            lines,
            vec![
                BatchLine {
                    line_number: 2,
                    generators: vec![6, 8, 9]
                },
                BatchLine {
                    line_number: 4,
                    generators: vec![7, 8, 9, 11]
                },
                BatchLine {
                    line_number: 5,
                    generators: vec![2, 3]
                },
            ]
        );
    }

    #[test]
    fn rejects_garbage_with_the_line_number() {
        let err = parse_batch("6 8 9\n4 six\n").unwrap_err();
        assert_eq!(err.line_number, 2);
        assert!(err.message.contains("six"));
    }

    #[test]
    fn empty_input_is_fine() {
        assert!(parse_batch("").unwrap().is_empty());
        assert!(parse_batch("# only comments\n\n").unwrap().is_empty());
    }
}
