use std::str::FromStr;

use upsilon_core::Rational;

use crate::error::ParseError;

/// Character cursor shared by the knot and region parsers. Whitespace is
/// skipped before every token.
pub(crate) struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

type Result<T> = std::result::Result<T, ParseError>;

impl<'a> Scanner<'a> {
    pub fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub fn pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            return Ok(());
        }
        let found = match self.peek() {
            Some(f) => format!("`{f}`"),
            None => "end of input".into(),
        };
        Err(ParseError::new(self.pos, format!("expected `{c}`, found {found}")))
    }

    pub fn error<T>(&mut self, message: impl Into<String>) -> Result<T> {
        let pos = self.pos();
        Err(ParseError::new(pos, message))
    }

    /// An identifier made of ASCII letters.
    pub fn ident(&mut self) -> Option<(usize, &'a str)> {
        let start = self.pos();
        let len = self.rest().bytes().take_while(u8::is_ascii_alphabetic).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.src[start..start + len]))
    }

    fn number_text(&mut self, signed: bool, fraction: bool) -> Result<(usize, &'a str)> {
        let start = self.pos();
        let bytes = self.rest().as_bytes();
        let mut i = 0;
        if signed && bytes.first() == Some(&b'-') {
            i += 1;
        }
        let digits = bytes[i..].iter().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return Err(ParseError::new(start, "expected a number"));
        }
        i += digits;
        if fraction && bytes.get(i) == Some(&b'/') {
            let den = bytes[i + 1..].iter().take_while(|b| b.is_ascii_digit()).count();
            if den == 0 {
                return Err(ParseError::new(start + i + 1, "expected a denominator after `/`"));
            }
            i += 1 + den;
        }
        self.pos += i;
        Ok((start, &self.src[start..start + i]))
    }

    pub fn unsigned(&mut self) -> Result<(usize, u64)> {
        let (start, text) = self.number_text(false, false)?;
        let v = text.parse().map_err(|_| ParseError::new(start, format!("`{text}` is out of range")))?;
        Ok((start, v))
    }

    pub fn signed(&mut self) -> Result<(usize, i64)> {
        let (start, text) = self.number_text(true, false)?;
        let v = text.parse().map_err(|_| ParseError::new(start, format!("`{text}` is out of range")))?;
        Ok((start, v))
    }

    /// `p` or `p/q`, optionally negative.
    pub fn rational(&mut self) -> Result<(usize, Rational)> {
        let (start, text) = self.number_text(true, true)?;
        let v = Rational::from_str(text).map_err(|e| ParseError::new(start, e.to_string()))?;
        Ok((start, v))
    }

    /// Everything up to (not including) the next `)`, trimmed.
    pub fn raw_until_paren(&mut self) -> Result<(usize, &'a str)> {
        let start = self.pos();
        match self.rest().find(')') {
            Some(len) => {
                self.pos += len;
                Ok((start, self.src[start..start + len].trim_end()))
            }
            None => Err(ParseError::new(start, "unterminated argument, expected `)`")),
        }
    }
}

/// Comma-separated list of `item`s, possibly empty, ending before `)`.
pub(crate) fn list<T>(s: &mut Scanner<'_>, mut item: impl FnMut(&mut Scanner<'_>) -> Result<T>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    if s.peek() == Some(')') {
        return Ok(out);
    }
    loop {
        out.push(item(s)?);
        if !s.eat(',') {
            return Ok(out);
        }
    }
}
