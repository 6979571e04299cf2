//! Text formats for orbifolds and Seifert invariants.
//!
//! Orbifolds are whitespace-separated tokens: cone orders, `o` for a handle,
//! `x` (or `×`) for a crosscap, and at most one `b<n>` for `n` boundary
//! circles, e.g. `2 3 7`, `2 3 o o`, `2 2 x`, `b2`. Handles and crosscaps
//! together collapse to crosscaps only: `h` handles and `k >= 1` crosscaps
//! give `k + 2h` crosscaps.
//!
//! Invariants are written `M(g; (a1,b1), (a2,b2))` or `M(g, n; ...)` with
//! `n` boundary circles; the leading `M` is optional.

pub mod report;

use std::fmt;

use crate::error::{ParseError, Result};
use crate::invariant::{FiberPair, SeifertInvariant};
use crate::orbifold::Orbifold;

pub fn parse_orbifold(text: &str) -> Result<Orbifold> {
    let mut cones = Vec::new();
    let mut handles: u32 = 0;
    let mut crosscaps: u32 = 0;
    let mut boundary: Option<u32> = None;
    for (pos, token) in tokens(text) {
        match token {
            "o" => handles = handles.checked_add(1).ok_or_else(|| ParseError::new(pos, "too many handles"))?,
            "x" | "×" => {
                crosscaps = crosscaps.checked_add(1).ok_or_else(|| ParseError::new(pos, "too many crosscaps"))?
            }
            t if t.starts_with('b') => {
                if boundary.is_some() {
                    return Err(ParseError::new(pos, "boundary given twice").into());
                }
                let n: u32 = t[1..]
                    .parse()
                    .map_err(|_| ParseError::new(pos + 1, format!("expected a boundary count after 'b' in {t:?}")))?;
                if n == 0 {
                    return Err(ParseError::new(pos, "boundary count must be at least 1").into());
                }
                boundary = Some(n);
            }
            t if t.bytes().all(|c| c.is_ascii_digit()) => {
                let a: i64 = t
                    .parse()
                    .map_err(|_| ParseError::new(pos, format!("cone order {t} is too large")))?;
                if a == 0 {
                    return Err(ParseError::new(pos, "cone order must be positive").into());
                }
                cones.push(a);
            }
            t => {
                return Err(ParseError::new(
                    pos,
                    format!("unexpected token {t:?}; expected a cone order, 'o', 'x' or 'b<n>'"),
                )
                .into())
            }
        }
    }
    let boundary = boundary.unwrap_or(0);
    let overflow = || ParseError::new(text.len(), "genus is too large");
    if crosscaps > 0 {
        let genus = handles
            .checked_mul(2)
            .and_then(|h| h.checked_add(crosscaps))
            .ok_or_else(overflow)?;
        Orbifold::new(false, genus, &cones, boundary)
    } else {
        Orbifold::new(true, handles, &cones, boundary)
    }
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - text.as_ptr() as usize, t))
}

/// Cone orders ascending, then the handles or crosscaps, then `b<n>`. The
/// bare sphere prints as `1`.
pub fn print_orbifold(orb: &Orbifold) -> String {
    let mut parts: Vec<String> = orb.cone_orders().iter().map(|a| a.to_string()).collect();
    let symbol = if orb.orientable() { "o" } else { "x" };
    parts.extend((0..orb.genus()).map(|_| symbol.to_string()));
    if orb.boundary_count() > 0 {
        parts.push(format!("b{}", orb.boundary_count()));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for Orbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_orbifold(self))
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!(", found '{c}'"),
            None => ", found end of input".to_string(),
        };
        ParseError::new(self.pos, format!("{}{}", message.into(), found))
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = match self.peek() {
            Some('-') | Some('−') => {
                self.pos += self.peek().unwrap().len_utf8();
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected an integer"));
        }
        let digits = &self.text[digits_start..self.pos];
        let value: i128 = digits
            .parse()
            .map_err(|_| ParseError::new(start, "integer is too large"))?;
        let value = if negative { -value } else { value };
        i64::try_from(value).map_err(|_| ParseError::new(start, "integer is too large"))
    }
}

pub fn parse_invariant(text: &str) -> Result<SeifertInvariant> {
    let mut cur = Cursor { text, pos: 0 };
    cur.eat('M');
    cur.expect('(')?;
    let genus_code = cur.integer()?;
    let mut boundary_count = 0u32;
    if cur.eat(',') {
        cur.skip_ws();
        let at = cur.pos;
        let n = cur.integer()?;
        boundary_count = u32::try_from(n)
            .map_err(|_| ParseError::new(at, format!("boundary count must be a non-negative integer, got {n}")))?;
    }
    cur.expect(';')?;
    let mut pairs = Vec::new();
    cur.skip_ws();
    if cur.peek() == Some('(') {
        loop {
            cur.expect('(')?;
            let alpha = cur.integer()?;
            cur.expect(',')?;
            let beta = cur.integer()?;
            cur.expect(')')?;
            pairs.push(FiberPair::new(alpha, beta));
            if !cur.eat(',') {
                break;
            }
        }
    }
    cur.expect(')')?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.error("unexpected trailing input").into());
    }
    SeifertInvariant::new(genus_code, boundary_count, pairs)
}

pub fn print_invariant(inv: &SeifertInvariant) -> String {
    let head = if inv.is_closed() {
        format!("{}", inv.genus_code())
    } else {
        format!("{}, {}", inv.genus_code(), inv.boundary_count())
    };
    let pairs: Vec<String> = inv
        .pairs()
        .iter()
        .map(|p| format!("({},{})", p.alpha, p.beta))
        .collect();
    if pairs.is_empty() {
        format!("M({head};)")
    } else {
        format!("M({head}; {})", pairs.join(", "))
    }
}

impl fmt::Display for SeifertInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_invariant(self))
    }
}
