//! The `cvstab` text format for codes.
//!
//! ```text
//! # optional comments anywhere; `#` starts a comment
//! cvstab 1
//! n 3
//! k 2
//! row 0 0 0 | 1 -1 0
//! row 0 0 0 | 0 1 -1
//! logical x 1 1 1 | 0 0 0
//! logical z 0 0 0 | 1 0 0
//! ```
//!
//! Entries are rational tokens such as `-1` or `3/2`, whitespace separated,
//! newline delimited. `logical x` / `logical z` lines are optional and must
//! alternate in pairs after the rows. Parse errors carry 1-based line
//! numbers.

use crate::code::{LogicalBasis, StabilizerCode};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};
use crate::symplectic::PauliVector;

/// A parsed code file: the validated code plus any logical pairs that were
/// present (not yet validated as a basis).
#[derive(Clone, Debug)]
pub struct CodeFile {
    pub code: StabilizerCode,
    pub logical_pairs: Vec<(PauliVector, PauliVector)>,
}

impl CodeFile {
    /// Resolve a logical basis: validate the file's pairs when a complete
    /// set is present, derive one when none are, and reject partial sets.
    pub fn resolve_basis(&self) -> Result<LogicalBasis> {
        let want = self.code.logical_modes();
        match self.logical_pairs.len() {
            0 => Ok(crate::code::logical_basis(&self.code)),
            got if got == want => LogicalBasis::new(&self.code, self.logical_pairs.clone()),
            got => Err(Error::InvalidLogicalBasis(format!(
                "file provides {got} logical pairs but the code has {want} logical modes"
            ))),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_halves(tokens: &[&str], n: usize, line: usize) -> Result<PauliVector> {
    let bar = tokens
        .iter()
        .position(|&t| t == "|")
        .ok_or_else(|| parse_err(line, "missing `|` separator"))?;
    let (s_toks, rest) = tokens.split_at(bar);
    let t_toks = &rest[1..];
    if s_toks.len() != n || t_toks.len() != n {
        return Err(parse_err(
            line,
            format!(
                "expected {n} entries on each side of `|`, found {} and {}",
                s_toks.len(),
                t_toks.len()
            ),
        ));
    }
    let half = |toks: &[&str]| -> Result<Vec<Scalar>> {
        toks.iter()
            .map(|t| parse_scalar(t).map_err(|e| parse_err(line, e.to_string())))
            .collect()
    };
    PauliVector::new(half(s_toks)?, half(t_toks)?)
}

/// Parse a `cvstab` file.
pub fn parse_code_file(text: &str) -> Result<CodeFile> {
    // Strip comments, keep (line number, tokens) for non-blank lines.
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
        .collect();
    let mut it = lines.into_iter();

    let (line, header) = it
        .next()
        .ok_or_else(|| parse_err(1, "empty file; expected `cvstab 1`"))?;
    if header != ["cvstab", "1"] {
        return Err(parse_err(line, "expected header `cvstab 1`"));
    }

    let mut read_field = |field: &str| -> Result<usize> {
        let (line, toks) = it
            .next()
            .ok_or_else(|| parse_err(line, format!("missing `{field} <int>` line")))?;
        if toks.len() != 2 || toks[0] != field {
            return Err(parse_err(line, format!("expected `{field} <int>`")));
        }
        toks[1]
            .parse::<usize>()
            .map_err(|_| parse_err(line, format!("`{}` is not a valid count", toks[1])))
    };
    let n = read_field("n")?;
    let k = read_field("k")?;
    if n == 0 {
        return Err(parse_err(1, "n must be at least 1"));
    }

    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (line, toks) = it
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {k} `row` lines")))?;
        if toks.first() != Some(&"row") {
            return Err(parse_err(line, "expected a `row` line"));
        }
        rows.push(parse_halves(&toks[1..], n, line)?);
    }

    let mut logical_pairs = Vec::new();
    let mut pending_x: Option<(usize, PauliVector)> = None;
    for (line, toks) in it {
        if toks.first() != Some(&"logical") || toks.len() < 2 {
            return Err(parse_err(line, "expected a `logical x|z` line"));
        }
        let vec = parse_halves(&toks[2..], n, line)?;
        match (toks[1], pending_x.take()) {
            ("x", None) => pending_x = Some((line, vec)),
            ("z", Some((_, x))) => logical_pairs.push((x, vec)),
            ("x", Some(_)) => {
                return Err(parse_err(
                    line,
                    "two `logical x` lines in a row; expected `logical z`",
                ))
            }
            ("z", None) => {
                return Err(parse_err(
                    line,
                    "`logical z` without a preceding `logical x`",
                ))
            }
            (other, _) => return Err(parse_err(line, format!("unknown logical kind `{other}`"))),
        }
    }
    if let Some((line, _)) = pending_x {
        return Err(parse_err(
            line,
            "`logical x` without a matching `logical z`",
        ));
    }

    let code = if rows.is_empty() {
        StabilizerCode::trivial(n)
    } else {
        StabilizerCode::validate(rows)?
    };
    if code.k() != k {
        return Err(parse_err(
            1,
            format!("k = {k} does not match {} rows", code.k()),
        ));
    }
    Ok(CodeFile {
        code,
        logical_pairs,
    })
}

/// Render a code (and optional basis) in the `cvstab` grammar. Each entry in
/// `comments` becomes a leading `#` line.
pub fn render_code_file(
    code: &StabilizerCode,
    basis: Option<&LogicalBasis>,
    comments: &[String],
) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str("cvstab 1\n");
    out.push_str(&format!("n {}\n", code.n()));
    out.push_str(&format!("k {}\n", code.k()));
    for g in code.generators() {
        out.push_str(&format!("row {g}\n"));
    }
    if let Some(basis) = basis {
        for (x, z) in basis.pairs() {
            out.push_str(&format!("logical x {x}\n"));
            out.push_str(&format!("logical z {z}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn round_trips_every_builtin() {
        for name in crate::catalog::builtin_names() {
            let b = builtin(name).unwrap();
            let text = render_code_file(&b.code, Some(&b.basis), &[name.to_string()]);
            let parsed = parse_code_file(&text).unwrap();
            assert_eq!(parsed.code.generators(), b.code.generators(), "{name}");
            let basis = parsed.resolve_basis().unwrap();
            assert_eq!(basis, b.basis, "{name}");
        }
    }

    #[test]
    fn reports_line_numbers() {
        let text = "cvstab 1\nn 3\nk 1\nrow 0 0 0 | 1 oops 0\n";
        match parse_code_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_header_and_counts() {
        assert!(matches!(
            parse_code_file("cvstab 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        let text = "cvstab 1\nn 2\nk 1\nrow 1 | 0\n";
        assert!(matches!(
            parse_code_file(text),
            Err(Error::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\n\ncvstab 1\nn 1 # inline\nk 0\n\n# done\n";
        let parsed = parse_code_file(text).unwrap();
        assert_eq!(parsed.code.n(), 1);
        assert_eq!(parsed.code.k(), 0);
    }

    #[test]
    fn invalid_codes_propagate_domain_errors() {
        let text = "cvstab 1\nn 1\nk 2\nrow 1 | 0\nrow 0 | 1\n";
        assert!(matches!(
            parse_code_file(text),
            Err(Error::NonIsotropic { i: 1, j: 2, .. })
        ));
    }

    #[test]
    fn unpaired_logicals_are_rejected() {
        let text =
            "cvstab 1\nn 3\nk 2\nrow 0 0 0 | 1 -1 0\nrow 0 0 0 | 0 1 -1\nlogical x 1 1 1 | 0 0 0\n";
        assert!(matches!(
            parse_code_file(text),
            Err(Error::Parse { line: 6, .. })
        ));
    }

    #[test]
    fn partial_basis_is_rejected_at_resolution() {
        // Trivial 2-mode code wants 2 pairs; provide 1.
        let text = "cvstab 1\nn 2\nk 0\nlogical x 1 0 | 0 0\nlogical z 0 0 | 1 0\n";
        let parsed = parse_code_file(text).unwrap();
        assert!(matches!(
            parsed.resolve_basis(),
            Err(Error::InvalidLogicalBasis(_))
        ));
    }
}
