//! Lexer and recursive-descent parser for the script language.
//!
//! ```text
//! stmt     := "ring" NAME "=" "monomial" "(" "vars" "=" INT ")"
//!           | "ideal" NAME "=" expr
//!           | "mset" NAME "=" expr
//!           | "family" NAME "=" expr
//!           | "print" expr
//!           | "check" WORD expr*
//!           | "suite" WORD expr*
//!           | "counterexample" WORD
//! expr     := NAME | NAME "(" expr ("," expr)* ")"
//!           | "<" monomial ("," monomial)* ">"
//!           | "closure" "{" expr ("," expr)* "}"
//!           | "{" sigma ("," sigma)* "}"
//! sigma    := "{" VAR ("," VAR)* "}"
//! monomial := "1" | VAR ("^" INT)? ("*" VAR ("^" INT)?)*
//! ```
//!
//! `VAR` is `x<index>` with a one-based index; exponents may be negative.
//! `#` starts a comment running to the end of the line. Statements may be
//! separated by newlines or `;`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{span}: expected {expected}, found {found}")]
pub struct ParseError {
    pub span: Span,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(i64),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Span,
    start: usize,
    end: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col, mut off) = (1, 1, 0);
    while let Some(&c) = chars.peek() {
        let span = Span { line, col };
        let start = off;
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            off += c.map_or(0, char::len_utf8);
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut w = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                    w.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            out.push(Token {
                tok: Tok::Word(w),
                span,
                start,
                end: off,
            });
        } else if c.is_ascii_digit() || c == '-' {
            let mut w = String::new();
            w.push(c);
            bump(&mut chars);
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    w.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            let n = w.parse().map_err(|_| ParseError {
                span,
                expected: "an integer".into(),
                found: format!("`{w}`"),
            })?;
            out.push(Token {
                tok: Tok::Int(n),
                span,
                start,
                end: off,
            });
        } else if "=(),<>{}*^;".contains(c) {
            bump(&mut chars);
            out.push(Token {
                tok: Tok::Punct(c),
                span,
                start,
                end: off,
            });
        } else {
            return Err(ParseError {
                span,
                expected: "a token".into(),
                found: format!("`{c}`"),
            });
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span { line, col },
        start: off,
        end: off,
    });
    Ok(out)
}

/// A monomial literal as exponent pairs `(one-based index, exponent)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialLit {
    pub factors: Vec<(usize, i64)>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Name(String, Span),
    Call {
        func: String,
        args: Vec<Expr>,
        span: Span,
    },
    Ideal(Vec<MonomialLit>, Span),
    Closure(Vec<Expr>, Span),
    Family(Vec<Vec<(usize, Span)>>, Span),
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Name(_, s)
            | Expr::Call { span: s, .. }
            | Expr::Ideal(_, s)
            | Expr::Closure(_, s)
            | Expr::Family(_, s) => *s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Ring { name: String, nvars: usize },
    Ideal { name: String, value: Expr },
    Mset { name: String, value: Expr },
    Family { name: String, value: Expr },
    Print(Expr),
    Check { name: String, args: Vec<Expr> },
    Suite { name: String, args: Vec<Expr> },
    Counterexample(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub stmt: Stmt,
    pub span: Span,
    /// Source text of the statement, echoed in results and errors.
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

fn is_var(w: &str) -> Option<usize> {
    let idx = w.strip_prefix('x')?;
    if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    idx.parse().ok().filter(|&i| i >= 1)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn next(&mut self) -> (Tok, Span) {
        let t = &self.toks[self.pos];
        let out = (t.tok.clone(), t.span);
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        out
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            span: self.span(),
            expected: expected.into(),
            found: self.peek().to_string(),
        })
    }

    fn punct(&mut self, c: char) -> Result<Span, ParseError> {
        if *self.peek() == Tok::Punct(c) {
            Ok(self.next().1)
        } else {
            self.error(&format!("`{c}`"))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, Span), ParseError> {
        match self.peek().clone() {
            Tok::Word(w) => {
                let s = self.next().1;
                Ok((w, s))
            }
            _ => self.error(what),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Word(w) if w == kw => {
                self.next();
                Ok(())
            }
            _ => self.error(&format!("`{kw}`")),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => self.error("an integer"),
        }
    }

    fn var(&mut self) -> Result<(usize, Span), ParseError> {
        match self.peek() {
            Tok::Word(w) => match is_var(w) {
                Some(i) => Ok((i, self.next().1)),
                None => self.error("a variable x<index>"),
            },
            _ => self.error("a variable x<index>"),
        }
    }

    fn monomial(&mut self) -> Result<MonomialLit, ParseError> {
        let span = self.span();
        if *self.peek() == Tok::Int(1) {
            self.next();
            return Ok(MonomialLit {
                factors: Vec::new(),
                span,
            });
        }
        let mut factors = Vec::new();
        loop {
            let (i, _) = self.var()?;
            let e = if self.eat('^') { self.int()? } else { 1 };
            factors.push((i, e));
            if !self.eat('*') {
                break;
            }
        }
        Ok(MonomialLit { factors, span })
    }

    fn list<T>(
        &mut self,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        let mut out = vec![item(self)?];
        while self.eat(',') {
            out.push(item(self)?);
        }
        self.punct(close)?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Punct('<') => {
                self.next();
                let gens = self.list('>', Self::monomial)?;
                Ok(Expr::Ideal(gens, span))
            }
            Tok::Punct('{') => {
                self.next();
                let sigmas = self.list('}', |p| {
                    p.punct('{')?;
                    p.list('}', Self::var)
                })?;
                Ok(Expr::Family(sigmas, span))
            }
            Tok::Word(w) if w == "closure" => {
                self.next();
                self.punct('{')?;
                let members = self.list('}', Self::expr)?;
                Ok(Expr::Closure(members, span))
            }
            Tok::Word(w) => {
                self.next();
                if self.eat('(') {
                    let args = self.list(')', Self::expr)?;
                    Ok(Expr::Call {
                        func: w,
                        args,
                        span,
                    })
                } else {
                    Ok(Expr::Name(w, span))
                }
            }
            _ => self.error("an expression"),
        }
    }

    /// Arguments of `check`/`suite`: expressions up to the next statement.
    fn args(&mut self, start_line: usize) -> Result<Vec<Expr>, ParseError> {
        let mut args = Vec::new();
        loop {
            match self.peek() {
                Tok::Eof | Tok::Punct(';') => break,
                Tok::Word(w) if STATEMENT_KEYWORDS.contains(&w.as_str()) => break,
                _ if self.span().line != start_line => break,
                _ => args.push(self.expr()?),
            }
        }
        Ok(args)
    }

    fn declaration(&mut self) -> Result<(String, Expr), ParseError> {
        let (name, _) = self.word("a name")?;
        self.punct('=')?;
        Ok((name, self.expr()?))
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let (kw, span) = self.word("a statement keyword")?;
        Ok(match kw.as_str() {
            "ring" => {
                let (name, _) = self.word("a name")?;
                self.punct('=')?;
                self.keyword("monomial")?;
                self.punct('(')?;
                self.keyword("vars")?;
                self.punct('=')?;
                let n = self.int()?;
                if n < 1 {
                    return Err(ParseError {
                        span: self.toks[self.pos - 1].span,
                        expected: "a positive number of variables".into(),
                        found: format!("`{n}`"),
                    });
                }
                self.punct(')')?;
                Stmt::Ring {
                    name,
                    nvars: n as usize,
                }
            }
            "ideal" => {
                let (name, value) = self.declaration()?;
                Stmt::Ideal { name, value }
            }
            "mset" => {
                let (name, value) = self.declaration()?;
                Stmt::Mset { name, value }
            }
            "family" => {
                let (name, value) = self.declaration()?;
                Stmt::Family { name, value }
            }
            "print" => Stmt::Print(self.expr()?),
            "check" => {
                let (name, _) = self.word("a check name")?;
                let args = self.args(span.line)?;
                Stmt::Check { name, args }
            }
            "suite" => {
                let (name, _) = self.word("a suite name")?;
                let args = self.args(span.line)?;
                Stmt::Suite { name, args }
            }
            "counterexample" => Stmt::Counterexample(self.word("a counterexample name")?.0),
            _ => {
                return Err(ParseError {
                    span,
                    expected: "a statement keyword".into(),
                    found: format!("`{kw}`"),
                })
            }
        })
    }

    fn script(&mut self) -> Result<Script, ParseError> {
        let mut statements = Vec::new();
        loop {
            while self.eat(';') {}
            if *self.peek() == Tok::Eof {
                return Ok(Script { statements });
            }
            let span = self.span();
            let start = self.toks[self.pos].start;
            let stmt = self.statement()?;
            let end = self.toks[self.pos - 1].end;
            let text = self.src[start..end].to_string();
            statements.push(Statement { stmt, span, text });
        }
    }
}

const STATEMENT_KEYWORDS: [&str; 8] = [
    "ring",
    "ideal",
    "mset",
    "family",
    "print",
    "check",
    "suite",
    "counterexample",
];

pub fn parse(src: &str) -> Result<Script, ParseError> {
    let toks = lex(src)?;
    Parser { src, toks, pos: 0 }.script()
}

/// Parses a single expression, e.g. a command-line argument.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.error("end of expression");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_literal() {
        let s = parse("ring R = monomial(vars=2)\nideal A = <x1^2, x1*x2>").unwrap();
        assert_eq!(s.statements.len(), 2);
        match &s.statements[1].stmt {
            Stmt::Ideal {
                value: Expr::Ideal(g, _),
                ..
            } => {
                assert_eq!(g[0].factors, vec![(1, 2)]);
                assert_eq!(g[1].factors, vec![(1, 1), (2, 1)]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(s.statements[1].text, "ideal A = <x1^2, x1*x2>");
    }

    #[test]
    fn negative_exponents_and_unit() {
        let e = parse_expr("<x1^-1*x3, 1>").unwrap();
        match e {
            Expr::Ideal(g, _) => {
                assert_eq!(g[0].factors, vec![(1, -1), (3, 1)]);
                assert!(g[1].factors.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn suite_arguments_stop_at_line_end() {
        let s = parse("suite star-axioms stransform(S)\nprint A").unwrap();
        match &s.statements[0].stmt {
            Stmt::Suite { name, args } => {
                assert_eq!(name, "star-axioms");
                assert_eq!(args.len(), 1);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(s.statements[1].stmt, Stmt::Print(_)));
    }

    #[test]
    fn family_literal() {
        let e = parse_expr("{{x1,x3},{x2}}").unwrap();
        match e {
            Expr::Family(f, _) => {
                let idx: Vec<Vec<usize>> =
                    f.iter().map(|s| s.iter().map(|v| v.0).collect()).collect();
                assert_eq!(idx, vec![vec![1, 3], vec![2]]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors_carry_location() {
        let e = parse("ring R = monomial(vars=2)\nideal A = <x1^2,, x2>").unwrap_err();
        assert_eq!(e.span, Span { line: 2, col: 17 });
        assert!(e.expected.contains("variable"));
        let e = parse("ring R = monomial(vars=0)").unwrap_err();
        assert_eq!(e.span.line, 1);
        assert!(parse("frobnicate").is_err());
        assert!(parse("ideal A = <x0>").is_err());
    }

    #[test]
    fn comments_and_separators() {
        let s = parse("# header\nring R = monomial(vars=1); print <x1> # trailing\n").unwrap();
        assert_eq!(s.statements.len(), 2);
        assert_eq!(s.statements[1].text, "print <x1>");
    }
}
