//! Text grammar shared by the library and the command line.
//!
//! ```text
//! partition   := "(" [ part { "," part } ] ")"
//! part        := int [ "^" int ]
//! bipartition := "(" [ part { "," part } ] "|" [ part { "," part } ] ")"
//! operand     := "AS" int | "AL" int | "R" partition | bipartition | partition
//! ```
//!
//! A bare partition used as an operand is the maximal atypical shorthand
//! `(μ) = (μ | μ*)`. Whitespace is ignored everywhere.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Bipartition, Partition};

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, bytes: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.src, self.pos, message)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a non-negative integer"));
        }
        self.src[start..self.pos].parse().map_err(|_| Error::parse(self.src, start, "integer out of range"))
    }

    /// Parts up to (not including) one of the terminators.
    fn parts(&mut self, terminators: &[u8]) -> Result<Vec<u32>> {
        let mut parts: Vec<u32> = Vec::new();
        if self.peek().is_some_and(|c| terminators.contains(&c)) {
            return Ok(parts);
        }
        loop {
            let at = self.pos;
            let value = self.number()?;
            let reps = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.number()?
            } else {
                1
            };
            if parts.last().is_some_and(|&last| last < value) && reps > 0 {
                return Err(Error::parse(self.src, at, "parts must be weakly decreasing"));
            }
            parts.extend(std::iter::repeat_n(value, reps as usize));
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(c) if terminators.contains(&c) => return Ok(parts),
                _ => return Err(self.err("expected ',' or the end of the partition")),
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            Err(self.err("unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

fn build(parts: Vec<u32>) -> Partition {
    Partition::new(parts).expect("parser only emits decreasing parts")
}

pub fn parse_partition(src: &str) -> Result<Partition> {
    let mut c = Cursor::new(src);
    c.expect(b'(')?;
    let parts = c.parts(b")")?;
    c.expect(b')')?;
    c.finish()?;
    Ok(build(parts))
}

pub fn parse_bipartition(src: &str) -> Result<Bipartition> {
    let mut c = Cursor::new(src);
    c.expect(b'(')?;
    let left = c.parts(b"|")?;
    c.expect(b'|')?;
    let right = c.parts(b")")?;
    c.expect(b')')?;
    c.finish()?;
    Ok(Bipartition::new(build(left), build(right)))
}

/// Parses a command-line operand naming a single bipartition.
pub fn parse_operand(src: &str) -> Result<Bipartition> {
    let trimmed = src.trim_start();
    let offset = src.len() - trimmed.len();
    for (prefix, make) in [("AS", Bipartition::sym as fn(u32) -> Bipartition), ("AL", Bipartition::alt)] {
        if trimmed.starts_with(prefix) {
            let mut c = Cursor::new(src);
            c.pos = offset + prefix.len();
            let i = c.number()?;
            c.finish()?;
            return Ok(make(i));
        }
    }
    if trimmed.starts_with('R') {
        let mut c = Cursor::new(src);
        c.pos = offset + 1;
        c.expect(b'(')?;
        let parts = c.parts(b")")?;
        c.expect(b')')?;
        c.finish()?;
        return Ok(Bipartition::max_atypical(build(parts)));
    }
    if trimmed.contains('|') {
        return parse_bipartition(src);
    }
    if trimmed.starts_with('(') {
        return parse_partition(src).map(Bipartition::max_atypical);
    }
    Err(Error::parse(src, offset, "expected ASi, ALi, R(..), a partition or a bipartition"))
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bipartition(s)
    }
}
