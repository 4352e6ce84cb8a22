//! Plain-text formats: twist words, tuples, move sequences and intersection
//! matrices.
//!
//! Word files: tokens `g<i>` (the chain twist `c_i`) and `g<i>^<e>` with a
//! nonzero integer exponent; `let <name> = <tokens>` defines a macro and a
//! bare `<name>` expands it; `#` starts a comment. An optional `genus <g>`
//! line fixes the genus, otherwise the smallest genus fitting the largest
//! generator index is used.
//!
//! Tuple files: first significant line `genus <g>`, then one entry per line,
//! either `gen <i>` (chain class `c_i`) or `class <2g comma-separated
//! integers>`.
//!
//! Moves files: whitespace-separated tokens `L<k>` / `R<k>`, 1-based, in
//! application order.
//!
//! Matrices are written as `l` lines of `l` comma-separated integers.

use std::collections::HashMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hurwitz::{HurwitzMove, IntersectionMatrix, MoveSequence, Side, TwistTuple};
use crate::symplectic::{chain_classes, HomologyClass, Int, TwistLetter, TwistWord};

/// A parsed word file: named definitions in file order plus the word formed
/// by any bare token lines.
#[derive(Clone, Debug)]
pub struct WordFile {
    pub genus: usize,
    definitions: Vec<(String, TwistWord)>,
    index: HashMap<String, usize>,
    pub body: TwistWord,
}

impl WordFile {
    pub fn get(&self, name: &str) -> Option<&TwistWord> {
        self.index.get(name).map(|&i| &self.definitions[i].1)
    }

    pub fn definitions(&self) -> impl Iterator<Item = (&str, &TwistWord)> {
        self.definitions.iter().map(|(n, w)| (n.as_str(), w))
    }

    pub fn require(&self, name: &str) -> Result<&TwistWord> {
        self.get(name)
            .ok_or_else(|| Error::Domain(format!("word file has no definition named `{name}`")))
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_generator_token(tok: &str) -> Option<(usize, i64)> {
    let rest = tok.strip_prefix('g')?;
    let (idx_str, exp_str) = match rest.split_once('^') {
        Some((a, b)) => (a, Some(b)),
        None => (rest, None),
    };
    let idx: usize = idx_str.parse().ok()?;
    let exp: i64 = match exp_str {
        Some(s) => s.parse().ok()?,
        None => 1,
    };
    Some((idx, exp))
}

pub fn parse_word_file(text: &str) -> Result<WordFile> {
    // First pass: explicit genus directive or the largest generator index.
    let mut genus: Option<usize> = None;
    let mut max_gen = 0usize;
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(g) = line.strip_prefix("genus ") {
            let g: usize = g
                .trim()
                .parse()
                .map_err(|_| Error::parse(lineno + 1, "invalid genus"))?;
            if g == 0 {
                return Err(Error::parse(lineno + 1, "genus must be positive"));
            }
            genus = Some(g);
            continue;
        }
        for tok in line.split_whitespace() {
            if let Some((idx, _)) = parse_generator_token(tok) {
                max_gen = max_gen.max(idx);
            }
        }
    }
    let genus = genus.unwrap_or_else(|| (max_gen.saturating_sub(1)).div_ceil(2).max(1));
    let chain = chain_classes(genus)?;

    let mut out = WordFile {
        genus,
        definitions: Vec::new(),
        index: HashMap::new(),
        body: TwistWord::empty(genus),
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() || line.starts_with("genus ") {
            continue;
        }
        if let Some(def) = line.strip_prefix("let ") {
            let (name, rhs) = def
                .split_once('=')
                .ok_or_else(|| Error::parse(lineno + 1, "expected `let <name> = <tokens>`"))?;
            let name = name.trim();
            if name.is_empty()
                || !name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
                || name.chars().next().is_some_and(|c| c.is_ascii_digit())
            {
                return Err(Error::parse(lineno + 1, format!("bad macro name `{name}`")));
            }
            if parse_generator_token(name).is_some() {
                return Err(Error::parse(
                    lineno + 1,
                    format!("macro name `{name}` collides with a generator token"),
                ));
            }
            let word = parse_tokens(rhs, lineno + 1, genus, &chain, &out)?;
            if out.index.insert(name.to_string(), out.definitions.len()).is_some() {
                return Err(Error::parse(lineno + 1, format!("duplicate macro `{name}`")));
            }
            out.definitions.push((name.to_string(), word));
        } else {
            let word = parse_tokens(line, lineno + 1, genus, &chain, &out)?;
            out.body = out.body.concat(&word)?;
        }
    }
    Ok(out)
}

fn parse_tokens(
    text: &str,
    lineno: usize,
    genus: usize,
    chain: &[HomologyClass],
    scope: &WordFile,
) -> Result<TwistWord> {
    let mut letters: Vec<TwistLetter> = Vec::new();
    for tok in text.split_whitespace() {
        if let Some((idx, exp)) = parse_generator_token(tok) {
            if idx == 0 || idx > 2 * genus + 1 {
                return Err(Error::parse(
                    lineno,
                    format!("generator g{idx} out of range for genus {genus}"),
                ));
            }
            if exp == 0 {
                return Err(Error::parse(lineno, format!("zero exponent in `{tok}`")));
            }
            letters.push(TwistLetter {
                class: chain[idx - 1].clone(),
                exponent: exp,
            });
        } else if let Some(word) = scope.get(tok) {
            letters.extend(word.letters().iter().cloned());
        } else {
            return Err(Error::parse(lineno, format!("unknown token `{tok}`")));
        }
    }
    TwistWord::new(genus, letters)
}

pub fn parse_tuple_file(text: &str) -> Result<TwistTuple> {
    let mut genus: Option<usize> = None;
    let mut chain: Vec<HomologyClass> = Vec::new();
    let mut entries: Vec<HomologyClass> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        match genus {
            None => {
                let g = line
                    .strip_prefix("genus")
                    .map(str::trim)
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(lineno + 1, "expected `genus <g>` first"))?;
                if g == 0 {
                    return Err(Error::parse(lineno + 1, "genus must be positive"));
                }
                chain = chain_classes(g)?;
                genus = Some(g);
            }
            Some(g) => {
                if let Some(idx) = line.strip_prefix("gen ") {
                    let idx: usize = idx
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(lineno + 1, "invalid generator index"))?;
                    if idx == 0 || idx > 2 * g + 1 {
                        return Err(Error::parse(
                            lineno + 1,
                            format!("generator {idx} out of range for genus {g}"),
                        ));
                    }
                    entries.push(chain[idx - 1].clone());
                } else if let Some(coords) = line.strip_prefix("class ") {
                    let coords: Vec<Int> = coords
                        .split(',')
                        .map(|c| {
                            Int::from_str(c.trim())
                                .map_err(|_| Error::parse(lineno + 1, "invalid coordinate"))
                        })
                        .collect::<Result<_>>()?;
                    if coords.len() != 2 * g {
                        return Err(Error::parse(
                            lineno + 1,
                            format!("expected {} coordinates, got {}", 2 * g, coords.len()),
                        ));
                    }
                    entries.push(HomologyClass::new(coords)?);
                } else {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("expected `gen <i>` or `class <coords>`, got `{line}`"),
                    ));
                }
            }
        }
    }
    let genus = genus.ok_or_else(|| Error::parse(0, "empty tuple file"))?;
    TwistTuple::new(genus, entries)
}

pub fn format_tuple(t: &TwistTuple) -> String {
    let mut out = format!("genus {}\n", t.genus());
    for e in t.entries() {
        out.push_str("class ");
        let coords: Vec<String> = e.coords().iter().map(|c| c.to_string()).collect();
        out.push_str(&coords.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_moves_file(text: &str) -> Result<MoveSequence> {
    let mut moves = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        for tok in strip_comment(raw).split_whitespace() {
            let side = match tok.chars().next() {
                Some('L') => Side::L,
                Some('R') => Side::R,
                _ => {
                    return Err(Error::parse(
                        lineno + 1,
                        format!("expected L<k> or R<k>, got `{tok}`"),
                    ))
                }
            };
            let index: usize = tok[1..]
                .parse()
                .map_err(|_| Error::parse(lineno + 1, format!("bad move index in `{tok}`")))?;
            if index == 0 {
                return Err(Error::parse(lineno + 1, "move indices are 1-based"));
            }
            moves.push(HurwitzMove { side, index });
        }
    }
    Ok(MoveSequence::new(moves))
}

pub fn format_moves(moves: &MoveSequence) -> String {
    let mut out = String::new();
    for (i, mv) in moves.iter().enumerate() {
        if i > 0 {
            if i % 20 == 0 {
                out.push('\n');
            } else {
                out.push(' ');
            }
        }
        out.push_str(&mv.to_string());
    }
    out.push('\n');
    out
}

pub fn format_matrix(m: &IntersectionMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.size() {
        for j in 0..m.size() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&m.at(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<IntersectionMatrix> {
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let row: Vec<Int> = line
            .split(',')
            .map(|c| {
                Int::from_str(c.trim()).map_err(|_| Error::parse(lineno + 1, "invalid entry"))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    IntersectionMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::matrix_of_tuple;

    #[test]
    fn word_file_round_trip() {
        let text = "\
# comment
genus 2
let inner = g1 g2^-1
let outer = inner g3^2 inner
outer g5
";
        let parsed = parse_word_file(text).unwrap();
        assert_eq!(parsed.genus, 2);
        let outer = parsed.require("outer").unwrap();
        assert_eq!(outer.len(), 5);
        assert_eq!(parsed.body.len(), 6);
        assert!(parsed.get("missing").is_none());
    }

    #[test]
    fn word_file_genus_inference() {
        let parsed = parse_word_file("g1 g5").unwrap();
        assert_eq!(parsed.genus, 2);
        let parsed = parse_word_file("g1 g3").unwrap();
        assert_eq!(parsed.genus, 1);
    }

    #[test]
    fn word_file_rejects_bad_tokens() {
        assert!(parse_word_file("g0").is_err());
        assert!(parse_word_file("genus 2\ng6").is_err());
        assert!(parse_word_file("g1^0").is_err());
        assert!(parse_word_file("nope").is_err());
        assert!(parse_word_file("let 1x = g1\n").is_err());
        assert!(parse_word_file("let a = g1\nlet a = g2\n").is_err());
    }

    #[test]
    fn tuple_file_round_trip() {
        let text = "genus 2\ngen 1\nclass 0,1,2,-3\ngen 5\n";
        let t = parse_tuple_file(text).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.genus(), 2);
        let again = parse_tuple_file(&format_tuple(&t)).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn tuple_file_errors() {
        assert!(parse_tuple_file("gen 1\n").is_err());
        assert!(parse_tuple_file("genus 0\n").is_err());
        assert!(parse_tuple_file("genus 2\ngen 6\n").is_err());
        assert!(parse_tuple_file("genus 2\nclass 1,2\n").is_err());
        assert!(parse_tuple_file("").is_err());
    }

    #[test]
    fn moves_round_trip() {
        let text = "L1 R2\nL3 R17";
        let q = parse_moves_file(text).unwrap();
        assert_eq!(q.len(), 4);
        assert_eq!(q.0[3], HurwitzMove::right(17));
        let again = parse_moves_file(&format_moves(&q)).unwrap();
        assert_eq!(q, again);
        assert!(parse_moves_file("L0").is_err());
        assert!(parse_moves_file("X4").is_err());
        assert!(parse_moves_file("L").is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let t = parse_tuple_file("genus 2\ngen 1\ngen 2\ngen 3\n").unwrap();
        let m = matrix_of_tuple(&t);
        let text = format_matrix(&m);
        assert_eq!(text, "0,1,0\n-1,0,-1\n0,1,0\n");
        assert_eq!(parse_matrix(&text).unwrap(), m);
        assert!(parse_matrix("0,1\n1,0\n").is_err());
    }
}
