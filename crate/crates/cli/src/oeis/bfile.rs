use num_bigint::BigInt;

use super::OeisError;

/// Parses `index value` lines; `#` starts a comment, blank lines are skipped.
/// Indices must increase by exactly one.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, OeisError> {
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| OeisError::Parse {
            line: line_no,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected \"index value\", got {line:?}")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| err(format!("bad index {index:?}")))?;
        let value: BigInt = value
            .parse()
            .map_err(|_| err(format!("bad value {value:?}")))?;
        if let Some((prev, _)) = terms.last() {
            if index != prev + 1 {
                return Err(err(format!("index {index} does not follow {prev}")));
            }
        }
        terms.push((index, value));
    }
    Ok(terms)
}

pub fn render_bfile(terms: &[(i64, BigInt)]) -> String {
    let mut out = String::new();
    for (i, v) in terms {
        out.push_str(&format!("{i} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let text =
            "# header\n0 1\n1 1\n\n2 2   # trailing\n3 5\n4 123456789012345678901234567890\n";
        let terms = parse_bfile(text).unwrap();
        assert_eq!(terms.len(), 5);
        assert_eq!(terms[4].1.to_string(), "123456789012345678901234567890");
        let rendered = render_bfile(&terms);
        assert_eq!(parse_bfile(&rendered).unwrap(), terms);
        assert_eq!(render_bfile(&parse_bfile(&rendered).unwrap()), rendered);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = parse_bfile("0 1\n1 x\n").unwrap_err();
        assert!(matches!(bad, OeisError::Parse { line: 2, .. }));
        let gap = parse_bfile("0 1\n# c\n2 3\n").unwrap_err();
        assert!(matches!(gap, OeisError::Parse { line: 3, .. }));
        assert!(matches!(
            parse_bfile("5\n"),
            Err(OeisError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("<html>\n"),
            Err(OeisError::Parse { line: 1, .. })
        ));
    }
}
