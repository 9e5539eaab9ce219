//! Line-oriented text encodings for every object family.
//!
//! One object per line, whitespace-separated fields, comma-separated
//! integer lists, 1-based indices throughout:
//!
//! - rook placement: `s=2,2,2 c=2,4,5` (shape weights, per-row columns)
//! - projected placement: `h=5,5,4,3,2 c=2,3,4,1,5` (column heights,
//!   per-row columns)
//! - tree: `t=2,2,2 e=2:1.2,3:2.1` (arity vector; edges
//!   `child:parent.slot`, children ascending)
//! - permutation / Stirling word: `5 1 2 6 4 3` (empty line = empty word)
//! - Dyck word: `UUDD`; chain: words joined by `;` in increasing size
//!
//! Printing then parsing is the identity on every valid object; parsers
//! label errors with the offending column.

use std::fmt;

use rookery_core::{
    DyckChain, DyckWord, IncreasingTree, IntPolynomial, Permutation, ProjectedPlacement,
    RookPlacement, StaircaseShape, StirlingWord,
};

/// A parse failure, with the 1-based column of the offending character
/// when one can be pinned down.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WireError {
    pub col: Option<usize>,
    pub msg: String,
}

impl fmt::Display for WireError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.col {
            Some(col) => write!(f, "col {}: {}", col, self.msg),
            None => write!(f, "{}", self.msg),
        }
    }
}

impl WireError {
    fn at(col: usize, msg: impl Into<String>) -> Self {
        WireError { col: Some(col), msg: msg.into() }
    }

    fn whole(msg: impl fmt::Display) -> Self {
        WireError { col: None, msg: msg.to_string() }
    }
}

type Result<T> = std::result::Result<T, WireError>;

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_usize(col: usize, text: &str) -> Result<usize> {
    text.parse::<usize>().map_err(|_| WireError::at(col, format!("expected an integer, got `{text}`")))
}

/// Comma-separated integers; the empty string is the empty list.
fn parse_list(col: usize, text: &str) -> Result<Vec<usize>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        out.push(parse_usize(col + offset, piece)?);
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// Splits a `key=value` token, checking the key.
fn field<'a>(token: (usize, &'a str), key: &str) -> Result<(usize, &'a str)> {
    let (col, text) = token;
    match text.split_once('=') {
        Some((k, value)) if k == key => Ok((col + key.len() + 1, value)),
        _ => Err(WireError::at(col, format!("expected a `{key}=` field, got `{text}`"))),
    }
}

fn two_fields<'a>(line: &'a str, first: &str, second: &str) -> Result<((usize, &'a str), (usize, &'a str))> {
    let toks = tokens(line);
    if toks.len() != 2 {
        return Err(WireError::at(
            1,
            format!("expected `{first}=... {second}=...`, got {} fields", toks.len()),
        ));
    }
    Ok((field(toks[0], first)?, field(toks[1], second)?))
}

fn join(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

pub fn print_rook(r: &RookPlacement) -> String {
    format!("s={} c={}", join(r.shape().weights()), join(r.cols()))
}

pub fn parse_rook(line: &str) -> Result<RookPlacement> {
    let ((scol, svals), (ccol, cvals)) = two_fields(line, "s", "c")?;
    let weights = parse_list(scol, svals)?;
    let cols = parse_list(ccol, cvals)?;
    let shape = StaircaseShape::new(weights).map_err(WireError::whole)?;
    RookPlacement::new(shape, cols).map_err(WireError::whole)
}

pub fn print_projected(s: &ProjectedPlacement) -> String {
    format!("h={} c={}", join(s.heights()), join(s.cols()))
}

pub fn parse_projected(line: &str) -> Result<ProjectedPlacement> {
    let ((hcol, hvals), (ccol, cvals)) = two_fields(line, "h", "c")?;
    let heights = parse_list(hcol, hvals)?;
    let cols = parse_list(ccol, cvals)?;
    ProjectedPlacement::new(heights, cols).map_err(WireError::whole)
}

pub fn print_tree(t: &IncreasingTree) -> String {
    let edges = t
        .edges()
        .map(|(child, parent, slot)| format!("{child}:{parent}.{slot}"))
        .collect::<Vec<_>>()
        .join(",");
    format!("t={} e={}", join(t.arity()), edges)
}

pub fn parse_tree(line: &str) -> Result<IncreasingTree> {
    let ((tcol, tvals), (ecol, evals)) = two_fields(line, "t", "e")?;
    let arity = parse_list(tcol, tvals)?;
    let mut edges = vec![None; arity.len().saturating_sub(1)];
    if !evals.is_empty() {
        let mut offset = 0;
        for piece in evals.split(',') {
            let col = ecol + offset;
            offset += piece.len() + 1;
            let (child_text, rest) = piece
                .split_once(':')
                .ok_or_else(|| WireError::at(col, format!("expected `child:parent.slot`, got `{piece}`")))?;
            let (parent_text, slot_text) = rest
                .split_once('.')
                .ok_or_else(|| WireError::at(col, format!("expected `child:parent.slot`, got `{piece}`")))?;
            let child = parse_usize(col, child_text)?;
            let parent = parse_usize(col + child_text.len() + 1, parent_text)?;
            let slot = parse_usize(col + child_text.len() + parent_text.len() + 2, slot_text)?;
            if child < 2 || child > arity.len() {
                return Err(WireError::at(col, format!("edge child {child} out of range")));
            }
            if edges[child - 2].is_some() {
                return Err(WireError::at(col, format!("vertex {child} listed twice")));
            }
            edges[child - 2] = Some((parent, slot));
        }
    }
    let mut resolved = Vec::with_capacity(edges.len());
    for (i, edge) in edges.into_iter().enumerate() {
        resolved.push(edge.ok_or_else(|| WireError::whole(format!("vertex {} has no edge", i + 2)))?);
    }
    IncreasingTree::new(arity, resolved).map_err(WireError::whole)
}

pub fn print_perm(p: &Permutation) -> String {
    p.word().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_perm(line: &str) -> Result<Permutation> {
    let mut word = Vec::new();
    for (col, tok) in tokens(line) {
        word.push(parse_usize(col, tok)?);
    }
    Permutation::new(word).map_err(WireError::whole)
}

pub fn print_stirling(w: &StirlingWord) -> String {
    w.word().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Reads a Stirling word, inferring the multiplicity vector from the
/// letters present (every value up to the maximum must occur).
pub fn parse_stirling(line: &str) -> Result<StirlingWord> {
    let mut word = Vec::new();
    for (col, tok) in tokens(line) {
        word.push(parse_usize(col, tok)?);
    }
    let max = word.iter().copied().max().unwrap_or(0);
    let mut multiplicities = vec![0usize; max];
    for &v in &word {
        if v == 0 {
            return Err(WireError::whole("letters must be positive"));
        }
        multiplicities[v - 1] += 1;
    }
    StirlingWord::new(multiplicities, word).map_err(WireError::whole)
}

pub fn print_dyck(w: &DyckWord) -> String {
    w.to_string()
}

pub fn parse_dyck(line: &str) -> Result<DyckWord> {
    for (i, ch) in line.char_indices() {
        if ch != 'U' && ch != 'D' {
            return Err(WireError::at(i + 1, format!("expected `U` or `D`, got `{ch}`")));
        }
    }
    line.parse::<DyckWord>().map_err(WireError::whole)
}

pub fn print_chain(c: &DyckChain) -> String {
    c.words().iter().map(|w| w.to_string()).collect::<Vec<_>>().join(";")
}

pub fn parse_chain(line: &str) -> Result<DyckChain> {
    let mut words = Vec::new();
    if !line.is_empty() {
        let mut offset = 0;
        for piece in line.split(';') {
            let col = offset + 1;
            offset += piece.len() + 1;
            for (i, ch) in piece.char_indices() {
                if ch != 'U' && ch != 'D' {
                    return Err(WireError::at(col + i, format!("expected `U` or `D`, got `{ch}`")));
                }
            }
            words.push(piece.parse::<DyckWord>().map_err(WireError::whole)?);
        }
    }
    DyckChain::new(words).map_err(WireError::whole)
}

/// Space-separated coefficient row; `ascending` flips the default
/// degree-descending order. The zero polynomial prints as `0`.
pub fn print_poly_row(p: &IntPolynomial, ascending: bool) -> String {
    let degree = match p.degree() {
        Some(d) => d,
        None => return "0".to_string(),
    };
    let coeffs = p.coeffs_padded(degree);
    let render = |c: &rookery_core::BigInt| c.to_string();
    if ascending {
        coeffs.iter().map(render).collect::<Vec<_>>().join(" ")
    } else {
        coeffs.iter().rev().map(render).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rook_round_trip() {
        let line = "s=2,2,2,2,2 c=2,4,5,1,7";
        let r = parse_rook(line).unwrap();
        assert_eq!(print_rook(&r), line);
        let empty = parse_rook("s= c=").unwrap();
        assert_eq!(empty.rows(), 0);
        assert_eq!(print_rook(&empty), "s= c=");
    }

    #[test]
    fn rook_errors_carry_columns() {
        let err = parse_rook("s=2,x c=1").unwrap_err();
        assert_eq!(err.col, Some(5));
        let err = parse_rook("s=2 q=1").unwrap_err();
        assert_eq!(err.col, Some(5));
        let err = parse_rook("s=2 c=3").unwrap_err();
        assert!(err.msg.contains("width"));
    }

    #[test]
    fn projected_round_trip() {
        let line = "h=5,5,4,3,2 c=2,3,4,1,5";
        let s = parse_projected(line).unwrap();
        assert_eq!(print_projected(&s), line);
    }

    #[test]
    fn tree_round_trip() {
        let line = "t=2,2,2,2,2,2 e=2:1.2,3:2.2,4:3.1,5:1.1,6:4.1";
        let t = parse_tree(line).unwrap();
        assert_eq!(print_tree(&t), line);
        assert_eq!(parse_tree("t=2 e=").unwrap().vertices(), 1);
        assert_eq!(print_tree(&parse_tree("t= e=").unwrap()), "t= e=");
    }

    #[test]
    fn tree_errors() {
        assert!(parse_tree("t=2,2 e=").unwrap_err().msg.contains("no edge"));
        assert!(parse_tree("t=2,2 e=2:1.1,2:1.2").unwrap_err().msg.contains("twice"));
        assert!(parse_tree("t=2,2 e=3:1.1").unwrap_err().msg.contains("out of range"));
        assert_eq!(parse_tree("t=2,2 e=2:1x1").unwrap_err().col, Some(9));
    }

    #[test]
    fn perm_and_stirling_round_trips() {
        let p = parse_perm("5 1 2 6 4 3").unwrap();
        assert_eq!(print_perm(&p), "5 1 2 6 4 3");
        assert_eq!(parse_perm("").unwrap().len(), 0);
        let w = parse_stirling("1 2 2 1").unwrap();
        assert_eq!(print_stirling(&w), "1 2 2 1");
        assert_eq!(w.multiplicities(), &[2, 2]);
        assert!(parse_stirling("1 2 1 2").unwrap_err().msg.contains("2-1-2"));
        assert!(parse_stirling("2 2").is_err());
    }

    #[test]
    fn dyck_and_chain_round_trips() {
        assert_eq!(print_dyck(&parse_dyck("UUDD").unwrap()), "UUDD");
        assert_eq!(parse_dyck("UXDD").unwrap_err().col, Some(2));
        let chain = parse_chain("UD;UDUD;UDUDUD").unwrap();
        assert_eq!(print_chain(&chain), "UD;UDUD;UDUDUD");
        assert_eq!(parse_chain("").unwrap().len(), 0);
        assert_eq!(parse_chain("UD;UXDD").unwrap_err().col, Some(5));
        assert!(parse_chain("UD;UUDDUD").is_err());
    }

    #[test]
    fn poly_rows() {
        use rookery_core::BigInt;
        let p = IntPolynomial::from_coeffs(
            [16, 0, 22, 0, 1].iter().map(|&c| BigInt::from(c)).collect(),
        );
        assert_eq!(print_poly_row(&p, false), "1 0 22 0 16");
        assert_eq!(print_poly_row(&p, true), "16 0 22 0 1");
        assert_eq!(print_poly_row(&IntPolynomial::zero(), false), "0");
    }
}
