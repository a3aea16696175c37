//! Parser for the move-table text format (see `standard.table`).

use std::collections::BTreeMap;

use super::{Cell, MoveTemplate, NondetSymbol};
use crate::tiles::Tile;
use crate::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::MoveTable { line, message: message.into() }
}

fn parse_tile(line: usize, text: &str) -> Result<Tile> {
    text.strip_prefix('T')
        .and_then(|d| d.parse::<u8>().ok())
        .and_then(Tile::new)
        .ok_or_else(|| err(line, format!("bad tile '{text}'")))
}

/// A k-mosaic pattern whose tokens may also be single lowercase letters.
fn parse_pattern(line: usize, text: &str) -> Result<(usize, Vec<Token>)> {
    let mut rows: Vec<Vec<Token>> = vec![Vec::new()];
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '-' => rows.push(Vec::new()),
            '0'..='9' => rows.last_mut().unwrap().push(Token::Tile(c as u8 - b'0')),
            '(' => {
                let digits: String = chars.by_ref().take_while(|&d| d != ')').collect();
                let v: u8 = digits.parse().map_err(|_| err(line, format!("bad token '({digits})'")))?;
                rows.last_mut().unwrap().push(Token::Tile(v));
            }
            'a'..='z' => rows.last_mut().unwrap().push(Token::Symbol(c)),
            _ => return Err(err(line, format!("unexpected '{c}' in pattern '{text}'"))),
        }
    }
    let k = rows.len();
    if rows.iter().any(|r| r.len() != k) {
        return Err(err(line, format!("pattern '{text}' is not square")));
    }
    Ok((k, rows.concat()))
}

#[derive(Clone, Copy)]
enum Token {
    Tile(u8),
    Symbol(char),
}

/// Parses a whole table. Blank lines and `#` comments are skipped.
pub fn parse_table(text: &str) -> Result<Vec<MoveTemplate>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split(';').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(err(line, format!("expected 5 ';'-separated fields, found {}", fields.len())));
        }
        let name = fields[0].to_string();
        let k: usize = fields[1].parse().map_err(|_| err(line, "bad k"))?;
        let (kl, lhs) = parse_pattern(line, fields[2])?;
        let (kr, rhs) = parse_pattern(line, fields[3])?;
        if kl != k || kr != k {
            return Err(err(line, format!("patterns are not {k}x{k}")));
        }

        let mut dict: BTreeMap<char, (usize, [Tile; 2], Option<String>)> = BTreeMap::new();
        for entry in fields[4].split_whitespace() {
            let (sym, rest) = entry.split_once('=').ok_or_else(|| err(line, format!("bad entry '{entry}'")))?;
            let mut sym_chars = sym.chars();
            let (Some(c), None) = (sym_chars.next(), sym_chars.next()) else {
                return Err(err(line, format!("symbol '{sym}' must be one letter")));
            };
            let (opts, label) = match rest.split_once(':') {
                Some((o, l)) => (o, Some(l.to_string())),
                None => (rest, None),
            };
            let (a, b) = opts.split_once('|').ok_or_else(|| err(line, format!("bad options '{opts}'")))?;
            let options = [parse_tile(line, a)?, parse_tile(line, b)?];
            if options[0] == options[1] {
                return Err(err(line, format!("symbol '{c}' has identical options")));
            }
            let id = dict.len();
            if dict.insert(c, (id, options, label)).is_some() {
                return Err(err(line, format!("symbol '{c}' defined twice")));
            }
        }

        let to_cells = |tokens: &[Token]| -> Result<Vec<Cell>> {
            tokens
                .iter()
                .map(|t| match *t {
                    Token::Tile(v) => {
                        Tile::new(v).map(Cell::Fixed).ok_or_else(|| err(line, format!("tile {v} out of range")))
                    }
                    Token::Symbol(c) => dict
                        .get(&c)
                        .map(|(id, _, _)| Cell::Symbol(*id))
                        .ok_or_else(|| err(line, format!("symbol '{c}' not in dictionary"))),
                })
                .collect()
        };
        let lhs = to_cells(&lhs)?;
        let rhs = to_cells(&rhs)?;
        let mut symbols: Vec<(usize, NondetSymbol)> = dict
            .into_iter()
            .map(|(c, (id, options, label))| (id, NondetSymbol { symbol: c, options, label }))
            .collect();
        symbols.sort_by_key(|(id, _)| *id);
        let template = MoveTemplate { name, k, lhs, rhs, symbols: symbols.into_iter().map(|(_, s)| s).collect() };
        template.check_unused(line)?;
        out.push(template);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_lines() {
        for bad in [
            "X; 2; 00-00; 00-00",
            "X; 2; 00-00; 000-000-000; ",
            "X; 2; a0-00; 00-00; ",
            "X; 2; a0-00; 00-00; a=T0|T0",
            "X; 2; a0-00; 00-00; a=T0|T11",
            "X; 2; 0?-00; 00-00; ",
            "X; 2; 00-00; 00-00; a=T0|T1",
        ] {
            assert!(parse_table(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn comments_and_labels() {
        let t = parse_table("# c\n\nX; 2; u0-00; v0-00; u=T1|T6:A v=T5|T3:A # tail\n").unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].symbols[0].label.as_deref(), Some("A"));
        assert_eq!(t[0].symbols[1].options, [Tile::new(5).unwrap(), Tile::new(3).unwrap()]);
    }
}
