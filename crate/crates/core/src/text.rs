//! Shared tokenizer for the instance-spec grammars.

use std::fmt;

use thiserror::Error;

/// A parse failure with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        Self {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.message)
    }
}

/// Whitespace-insensitive cursor over an input string.
#[derive(Debug, Clone)]
pub struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub fn with_offset(src: &'a str, pos: usize) -> Self {
        Self { src, pos }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn source(&self) -> &'a str {
        self.src
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let message = match self.peek() {
                Some(found) => format!("expected '{c}', found '{found}'"),
                None => format!("expected '{c}', found end of input"),
            };
            Err(self.error(message))
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing '{c}'"))),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    /// Alphanumeric identifier (letters first).
    pub fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_alphanumeric()))
            .map(|(i, c)| i + c.len_utf8())
            .last()?;
        let start = self.pos;
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    /// Unsigned decimal literal, returned as text so callers pick the width.
    pub fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let start = self.pos;
        self.pos += len;
        Some(&self.src[start..start + len])
    }

    pub fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, ParseError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let text = self
            .digits()
            .ok_or_else(|| self.error(format!("expected {what}")))?;
        text.parse()
            .map_err(|_| ParseError::new(start, format!("{what} out of range: {text}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cursor_skips_whitespace_and_tracks_offsets() {
        let mut c = Cursor::new("  Zn ( 8 )");
        assert_eq!(c.ident(), Some("Zn"));
        c.expect('(').unwrap();
        assert_eq!(c.number::<u64>("order").unwrap(), 8);
        c.expect(')').unwrap();
        assert!(c.at_end());
    }

    #[test]
    fn error_reports_position() {
        let mut c = Cursor::new("Zn[8]");
        c.ident();
        let err = c.expect('(').unwrap_err();
        assert_eq!(err.pos, 2);
    }
}
