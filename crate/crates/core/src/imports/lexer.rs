//! Logical-line tokenizer.
//!
//! Just enough of the Python lexical grammar to find statement boundaries:
//! comments, string literals (all prefixes, triple-quoted), backslash and
//! bracket continuations, and top-level `;`. Everything else is a word or a
//! single-character operator.

use std::borrow::Cow;
use std::ops::Range;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TokKind {
    Word,
    Str,
    Op,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token {
    pub kind: TokKind,
    pub start: usize,
    pub end: usize,
    /// 1-based physical line of the first byte.
    pub line: usize,
    /// Physical line of the last byte (differs for multi-line strings).
    pub end_line: usize,
    /// Bracket depth before this token.
    pub depth: usize,
}

impl Token {
    pub fn text<'a>(&self, src: &'a str) -> &'a str {
        &src[self.start..self.end]
    }

    fn opens(&self, src: &str) -> bool {
        self.kind == TokKind::Op && matches!(self.text(src), "(" | "[" | "{")
    }

    fn closes(&self, src: &str) -> bool {
        self.kind == TokKind::Op && matches!(self.text(src), ")" | "]" | "}")
    }
}

/// A warning produced while tokenizing or extracting; never fatal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Default)]
pub(crate) struct RawLine {
    pub tokens: Vec<Token>,
    /// Token index ranges, one per `;`-separated statement.
    pub statements: Vec<Range<usize>>,
}

#[derive(Debug, Default)]
pub(crate) struct Lexed {
    pub lines: Vec<RawLine>,
    pub unterminated_literal: bool,
    pub diagnostics: Vec<Diagnostic>,
}

/// Decodes raw bytes, replacing invalid UTF-8. The flag is set when any
/// replacement happened.
pub fn decode_source(bytes: &[u8]) -> (Cow<'_, str>, bool) {
    let text = String::from_utf8_lossy(bytes);
    let lossy = matches!(text, Cow::Owned(_));
    (text, lossy)
}

const STRING_PREFIXES: [&str; 10] = ["r", "u", "b", "f", "br", "rb", "fr", "rf", "ur", "ru"];

fn is_word_start(c: char) -> bool {
    c == '_' || c.is_alphabetic() || (!c.is_ascii() && !c.is_whitespace() && !c.is_control())
}

fn is_word_char(c: char) -> bool {
    is_word_start(c) || c.is_numeric()
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    depth: usize,
    current: RawLine,
    out: Lexed,
}

pub(crate) fn lex(src: &str) -> Lexed {
    let mut lx = Lexer {
        src,
        bytes: src.as_bytes(),
        pos: 0,
        line: 1,
        depth: 0,
        current: RawLine::default(),
        out: Lexed::default(),
    };
    lx.run();
    lx.out
}

impl<'a> Lexer<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.bytes.get(self.pos + offset).copied()
    }

    /// Length of a line break starting at `pos`, if any.
    fn newline_len(&self, pos: usize) -> usize {
        match self.bytes.get(pos) {
            Some(b'\n') => 1,
            Some(b'\r') if self.bytes.get(pos + 1) == Some(&b'\n') => 2,
            Some(b'\r') => 1,
            _ => 0,
        }
    }

    fn push(&mut self, kind: TokKind, start: usize, start_line: usize) {
        self.current.tokens.push(Token {
            kind,
            start,
            end: self.pos,
            line: start_line,
            end_line: self.line,
            depth: self.depth,
        });
    }

    fn finish_line(&mut self) {
        if self.current.tokens.is_empty() {
            return;
        }
        let mut line = std::mem::take(&mut self.current);
        let mut begin = 0;
        for (i, tok) in line.tokens.iter().enumerate() {
            if tok.depth == 0 && tok.kind == TokKind::Op && tok.text(self.src) == ";" {
                if i > begin {
                    line.statements.push(begin..i);
                }
                begin = i + 1;
            }
        }
        if begin < line.tokens.len() {
            line.statements.push(begin..line.tokens.len());
        }
        self.out.lines.push(line);
    }

    fn run(&mut self) {
        while let Some(c) = self.peek() {
            let nl = self.newline_len(self.pos);
            if nl > 0 {
                self.pos += nl;
                self.line += 1;
                if self.depth == 0 {
                    self.finish_line();
                }
                continue;
            }
            match c {
                ' ' | '\t' | '\x0c' => self.pos += 1,
                '#' => {
                    while self.pos < self.bytes.len() && self.newline_len(self.pos) == 0 {
                        self.pos += 1;
                    }
                }
                '\\' if self.newline_len(self.pos + 1) > 0 => {
                    self.pos += 1 + self.newline_len(self.pos + 1);
                    self.line += 1;
                }
                '\'' | '"' => self.string(self.pos),
                c if is_word_start(c) => self.word(),
                c if c.is_ascii_digit() => self.number(),
                '.' if self.peek_at(1).is_some_and(|b| b.is_ascii_digit()) => self.number(),
                _ => self.operator(c),
            }
        }
        if self.depth > 0 {
            self.out.diagnostics.push(Diagnostic {
                line: self.line,
                message: "unclosed bracket at end of file".into(),
            });
        }
        self.finish_line();
    }

    fn word(&mut self) {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !is_word_char(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        let word = &self.src[start..self.pos];
        if matches!(self.peek(), Some('\'' | '"'))
            && STRING_PREFIXES.iter().any(|p| p.eq_ignore_ascii_case(word))
        {
            self.string(start);
        } else {
            self.push(TokKind::Word, start, self.line);
        }
    }

    fn number(&mut self) {
        let start = self.pos;
        while let Some(c) = self.peek() {
            // A sign continues the literal only as a decimal exponent.
            let exponent_sign = matches!(c, '+' | '-')
                && matches!(self.bytes[self.pos - 1], b'e' | b'E')
                && !self.src[start..self.pos].starts_with("0x");
            if c.is_ascii_alphanumeric() || c == '_' || c == '.' || exponent_sign {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.push(TokKind::Word, start, self.line);
    }

    fn operator(&mut self, c: char) {
        let start = self.pos;
        match c {
            '(' | '[' | '{' => {
                self.pos += 1;
                self.push(TokKind::Op, start, self.line);
                self.depth += 1;
                return;
            }
            ')' | ']' | '}' => {
                self.depth = self.depth.saturating_sub(1);
            }
            ':' if self.peek_at(1) == Some(b'=') => {
                self.pos += 2;
                self.push(TokKind::Op, start, self.line);
                return;
            }
            _ => {}
        }
        self.pos += c.len_utf8();
        self.push(TokKind::Op, start, self.line);
    }

    /// Scans a string literal whose prefix (possibly empty) begins at `start`;
    /// `self.pos` is on the opening quote.
    fn string(&mut self, start: usize) {
        let start_line = self.line;
        let quote = self.bytes[self.pos];
        let triple = self.peek_at(1) == Some(quote) && self.peek_at(2) == Some(quote);
        self.pos += if triple { 3 } else { 1 };
        loop {
            let Some(&b) = self.bytes.get(self.pos) else {
                if triple {
                    self.out.unterminated_literal = true;
                    self.out.diagnostics.push(Diagnostic {
                        line: start_line,
                        message:
                            "unterminated triple-quoted string; rest of file consumed as literal"
                                .into(),
                    });
                } else {
                    self.out.diagnostics.push(Diagnostic {
                        line: start_line,
                        message: "unterminated string literal".into(),
                    });
                }
                break;
            };
            if b == b'\\' {
                self.pos += 1;
                let nl = self.newline_len(self.pos);
                if nl > 0 {
                    self.pos += nl;
                    self.line += 1;
                } else if let Some(c) = self.peek() {
                    self.pos += c.len_utf8();
                }
                continue;
            }
            let nl = self.newline_len(self.pos);
            if nl > 0 {
                if !triple {
                    self.out.diagnostics.push(Diagnostic {
                        line: start_line,
                        message: "unterminated string literal".into(),
                    });
                    break;
                }
                self.pos += nl;
                self.line += 1;
                continue;
            }
            if b == quote {
                if !triple {
                    self.pos += 1;
                    break;
                }
                if self.peek_at(1) == Some(quote) && self.peek_at(2) == Some(quote) {
                    self.pos += 3;
                    break;
                }
            }
            self.pos += self.peek().map_or(1, char::len_utf8);
        }
        self.push(TokKind::Str, start, start_line);
    }
}

/// Renders tokens back to text: whitespace on one physical line is kept,
/// line joins become one space (none just inside brackets), comments vanish.
pub(crate) fn render(src: &str, tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, tok) in tokens.iter().enumerate() {
        if i > 0 {
            let prev = &tokens[i - 1];
            if tok.line == prev.end_line {
                out.push_str(&src[prev.end..tok.start]);
            } else if !prev.opens(src) && !tok.closes(src) {
                out.push(' ');
            }
        }
        out.push_str(tok.text(src));
    }
    out
}
