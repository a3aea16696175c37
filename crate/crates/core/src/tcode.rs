//! Row-wise tile-code text format.
//!
//! `mosaic := row ('-' row)*`, `row := token{n}`, `token := [0-9] | '(' digits ')'`.
//! Single-digit indices are written bare; larger ones are parenthesized,
//! so tile 10 is `(10)` and oriented tile 23 is `(23)`.

use crate::{Error, Result};

/// Parses a square grid of tile indices, each `<= max_index`.
pub(crate) fn parse_grid(text: &str, max_index: u8) -> Result<(usize, Vec<u8>)> {
    let bytes = text.as_bytes();
    let mut rows: Vec<Vec<u8>> = vec![Vec::new()];
    let mut pos = 0;
    while pos < bytes.len() {
        match bytes[pos] {
            b'-' => {
                if rows.last().is_some_and(Vec::is_empty) {
                    return Err(Error::parse(pos, "empty row"));
                }
                rows.push(Vec::new());
                pos += 1;
            }
            c @ b'0'..=b'9' => {
                let v = c - b'0';
                if v > max_index {
                    return Err(Error::parse(pos, format!("tile index {v} out of range")));
                }
                rows.last_mut().unwrap().push(v);
                pos += 1;
            }
            b'(' => {
                let close =
                    text[pos..].find(')').map(|k| pos + k).ok_or_else(|| Error::parse(pos, "unterminated '('"))?;
                let inner = &text[pos + 1..close];
                if inner.len() < 2 || !inner.bytes().all(|b| b.is_ascii_digit()) || inner.starts_with('0') {
                    return Err(Error::parse(pos, format!("bad parenthesized token '({inner})'")));
                }
                let v: u32 = inner.parse().map_err(|_| Error::parse(pos, "bad number"))?;
                if v > max_index as u32 {
                    return Err(Error::parse(pos, format!("tile index {v} out of range")));
                }
                rows.last_mut().unwrap().push(v as u8);
                pos = close + 1;
            }
            other => {
                return Err(Error::parse(pos, format!("unexpected character {:?}", other as char)));
            }
        }
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::parse(text.len(), "ragged rows"));
    }
    if rows[0].len() != n {
        return Err(Error::parse(text.len(), format!("not square: {} rows of length {}", n, rows[0].len())));
    }
    Ok((n, rows.concat()))
}

pub(crate) fn write_grid(n: usize, cells: impl IntoIterator<Item = u8>) -> String {
    let mut out = String::new();
    for (k, v) in cells.into_iter().enumerate() {
        if k > 0 && k % n == 0 {
            out.push('-');
        }
        if v < 10 {
            out.push((b'0' + v) as char);
        } else {
            out.push('(');
            out.push_str(&v.to_string());
            out.push(')');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_parenthesized() {
        let (n, cells) = parse_grid("021-2(10)4-340", 10).unwrap();
        assert_eq!(n, 3);
        assert_eq!(cells, vec![0, 2, 1, 2, 10, 4, 3, 4, 0]);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "01-2", "0-1", "0(11)-00", "0a", "(1", "00--00", "(01)0-00", "000-000"] {
            assert!(parse_grid(bad, 10).is_err(), "{bad:?}");
        }
        assert!(parse_grid("0(28)-00", 28).is_ok());
    }
}
