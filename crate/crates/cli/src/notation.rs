//! Text forms: partitions `[3,2,1^4]`, bipartitions `([2,1]|[1])` and
//! rational lists `1/2,-3,4/5`.

use octachar_core::{BiPartition, Partition, Rat};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("parts must be positive")]
    NonPositivePart,
    #[error("exponent must be positive")]
    NonPositiveExponent,
    #[error("parts must be weakly decreasing")]
    NotDecreasing,
    #[error("number too large")]
    Overflow,
    #[error("trailing input")]
    Trailing,
    #[error("not a rational number")]
    BadRational,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(ParseErrorKind::Expected(what)))
        }
    }

    /// A signed decimal integer; the sign is kept so that `-1` is reported
    /// as a non-positive part rather than a syntax error.
    fn integer(&mut self) -> Result<(i128, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let sign_len = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign_len..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.err(ParseErrorKind::Expected("an integer")));
        }
        let value = rest[..sign_len + digits]
            .parse::<i128>()
            .map_err(|_| self.err(ParseErrorKind::Overflow))?;
        self.pos += sign_len + digits;
        Ok((value, start))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.err(ParseErrorKind::Trailing))
        }
    }
}

fn positive(value: i128, position: usize, kind: ParseErrorKind) -> Result<usize, ParseError> {
    if value <= 0 {
        return Err(ParseError { position, kind });
    }
    usize::try_from(value).map_err(|_| ParseError {
        position,
        kind: ParseErrorKind::Overflow,
    })
}

fn partition_body(cur: &mut Cursor) -> Result<Partition, ParseError> {
    cur.expect('[', "'['")?;
    let mut parts: Vec<usize> = Vec::new();
    if !cur.eat(']') {
        loop {
            let (value, at) = cur.integer()?;
            let part = positive(value, at, ParseErrorKind::NonPositivePart)?;
            let mut count = 1;
            if cur.eat('^') {
                let (exp, at) = cur.integer()?;
                count = positive(exp, at, ParseErrorKind::NonPositiveExponent)?;
            }
            if parts.last().is_some_and(|&last| last < part) {
                return Err(ParseError {
                    position: at,
                    kind: ParseErrorKind::NotDecreasing,
                });
            }
            parts.extend(std::iter::repeat_n(part, count));
            if cur.eat(']') {
                break;
            }
            cur.expect(',', "',' or ']'")?;
        }
    }
    Ok(Partition::new(parts).expect("validated while parsing"))
}

/// Parses `[3,2,1^4]`. Whitespace between tokens is ignored; input that is
/// not weakly decreasing is rejected, never sorted.
pub fn parse_partition(text: &str) -> Result<Partition, ParseError> {
    let mut cur = Cursor::new(text);
    let lambda = partition_body(&mut cur)?;
    cur.finish()?;
    Ok(lambda)
}

/// Parses `([2,1]|[1])`.
pub fn parse_bipartition(text: &str) -> Result<BiPartition, ParseError> {
    let mut cur = Cursor::new(text);
    cur.expect('(', "'('")?;
    let p0 = partition_body(&mut cur)?;
    cur.expect('|', "'|'")?;
    let p1 = partition_body(&mut cur)?;
    cur.expect(')', "')'")?;
    cur.finish()?;
    Ok(BiPartition::new(p0, p1))
}

/// Parses a comma-separated list of rationals `p/q` or integers `p`.
pub fn parse_rationals(text: &str) -> Result<Vec<Rat>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let rat = trimmed.parse::<Rat>().map_err(|_| ParseError {
            position: offset + piece.len() - piece.trim_start().len(),
            kind: ParseErrorKind::BadRational,
        })?;
        out.push(rat);
        offset += piece.len() + 1;
    }
    Ok(out)
}
