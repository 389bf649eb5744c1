//! The `.qa` text format.
//!
//! ```text
//! # comments run to the end of the line
//! algebra A { cycle 4; zero a2*a3; zero a4*a1 }
//! algebra B {
//!     vertices 1 2 3;
//!     arrow a: 1 -> 2;
//!     arrow b: 2 -> 3;
//!     zero a*b;
//! }
//! ```
//!
//! Builtins (`N`, `Ncirc`, `local`, `line`, `cycle`, `twopoint`, `pattern`)
//! name their arrows `a1, a2, ...` (the loop of `local` is `x`) and may be
//! followed by further `zero` and `commute` statements.

use std::fmt::Write as _;

use tensorfin_core::catalog;
use tensorfin_core::{families, AlgebraPresentation, ArrowId, Error as CoreError, Path, Quiver, VertexId};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Source text of the offending token, when there is one.
    pub token: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Word(String),
    Str(String),
    Sym(char),
    /// `->`
    To,
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Kind,
    line: usize,
    column: usize,
    start: usize,
    end: usize,
}

impl Token {
    fn text(&self) -> String {
        match &self.kind {
            Kind::Word(w) => w.clone(),
            Kind::Str(s) => format!("\"{s}\""),
            Kind::Sym(c) => c.to_string(),
            Kind::To => "->".into(),
            Kind::Eof => "end of input".into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
            token: (self.kind != Kind::Eof).then(|| self.text()),
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '\'' | '.')
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let (mut line, mut column) = (1, 1);
    let lex_error = |line, column, message: String| ParseError { line, column, message, token: None };
    while let Some(&(start, c)) = chars.peek() {
        let (tl, tc) = (line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            let (_, c) = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&(_, c)| c != '\n') {
                advance(&mut chars);
            }
            continue;
        }
        let kind = if is_word_char(c) {
            let mut w = String::new();
            while chars.peek().is_some_and(|&(_, c)| is_word_char(c)) {
                w.push(advance(&mut chars));
            }
            Kind::Word(w)
        } else if c == '"' {
            advance(&mut chars);
            let mut s = String::new();
            loop {
                match chars.peek() {
                    None => return Err(lex_error(tl, tc, "unterminated string".into())),
                    Some(&(_, '"')) => {
                        advance(&mut chars);
                        break;
                    }
                    Some(&(_, '\n')) => return Err(lex_error(tl, tc, "unterminated string".into())),
                    Some(_) => s.push(advance(&mut chars)),
                }
            }
            Kind::Str(s)
        } else if c == '-' {
            advance(&mut chars);
            if chars.peek().is_some_and(|&(_, c)| c == '>') {
                advance(&mut chars);
                Kind::To
            } else {
                Kind::Sym('-')
            }
        } else if "{};:*=+()".contains(c) {
            advance(&mut chars);
            Kind::Sym(c)
        } else {
            return Err(lex_error(tl, tc, format!("unexpected character `{c}`")));
        };
        let end = chars.peek().map_or(text.len(), |&(i, _)| i);
        out.push(Token { kind, line: tl, column: tc, start, end });
    }
    out.push(Token { kind: Kind::Eof, line, column, start: text.len(), end: text.len() });
    Ok(out)
}

/// A parsed `algebra NAME { ... }` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub algebra: AlgebraPresentation,
}

enum Statement {
    Arrow { name: Token, source: Token, target: Token },
    Zero(Vec<Token>),
    Commute { lhs: Vec<Token>, eq: Token, rhs: Vec<Token> },
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != Kind::Eof {
            self.pos += 1;
        }
        t
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().kind == Kind::Sym(c)
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(&self.peek().kind, Kind::Word(x) if x == w)
    }

    fn expect_sym(&mut self, c: char) -> Result<Token, ParseError> {
        if self.at_sym(c) {
            Ok(self.next())
        } else {
            Err(self.peek().error(format!("expected `{c}`, found {}", self.peek().text())))
        }
    }

    fn expect_keyword(&mut self, w: &str) -> Result<Token, ParseError> {
        if self.at_word(w) {
            Ok(self.next())
        } else {
            Err(self.peek().error(format!("expected `{w}`, found {}", self.peek().text())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<Token, ParseError> {
        match self.peek().kind {
            Kind::Word(_) => Ok(self.next()),
            _ => Err(self.peek().error(format!("expected {what}, found {}", self.peek().text()))),
        }
    }

    fn int(&mut self) -> Result<(Token, usize), ParseError> {
        let t = self.ident("an integer")?;
        let Kind::Word(w) = &t.kind else { unreachable!() };
        match w.parse() {
            Ok(n) => Ok((t, n)),
            Err(_) => Err(t.error(format!("expected an integer, found {}", t.text()))),
        }
    }

    /// Pattern names such as `A3+-` or `N(4)` span several adjacent tokens.
    fn pattern_name(&mut self) -> Result<(Token, String), ParseError> {
        let first = self.peek().clone();
        if let Kind::Str(s) = &first.kind {
            let s = s.clone();
            self.next();
            return Ok((first, s));
        }
        let mut name = self.ident("a pattern name")?.text();
        let mut end = first.end;
        loop {
            let t = self.peek();
            let glued = matches!(t.kind, Kind::Word(_) | Kind::Sym('+' | '-' | '(' | ')'));
            if !glued || t.start != end {
                break;
            }
            end = t.end;
            name.push_str(&self.next().text());
        }
        Ok((first, name))
    }

    fn path(&mut self) -> Result<Vec<Token>, ParseError> {
        let mut out = vec![self.ident("an arrow name")?];
        while self.at_sym('*') {
            self.next();
            out.push(self.ident("an arrow name")?);
        }
        Ok(out)
    }

    fn statement(&mut self, explicit: bool) -> Result<Statement, ParseError> {
        let head = self.peek().clone();
        let st = match &head.kind {
            Kind::Word(w) if w == "arrow" && explicit => {
                self.next();
                let name = self.ident("an arrow name")?;
                self.expect_sym(':')?;
                let source = self.ident("a vertex")?;
                if self.peek().kind != Kind::To {
                    return Err(self.peek().error(format!("expected `->`, found {}", self.peek().text())));
                }
                self.next();
                let target = self.ident("a vertex")?;
                Statement::Arrow { name, source, target }
            }
            Kind::Word(w) if w == "zero" => {
                self.next();
                Statement::Zero(self.path()?)
            }
            Kind::Word(w) if w == "commute" => {
                self.next();
                let lhs = self.path()?;
                let eq = self.expect_sym('=')?;
                let rhs = self.path()?;
                Statement::Commute { lhs, eq, rhs }
            }
            _ => {
                let expected = if explicit { "`arrow`, `zero` or `commute`" } else { "`zero` or `commute`" };
                return Err(head.error(format!("expected {expected}, found {}", head.text())));
            }
        };
        Ok(st)
    }

    /// Statements separated by `;` up to the closing brace.
    fn statements(&mut self, explicit: bool) -> Result<Vec<Statement>, ParseError> {
        let mut out = Vec::new();
        loop {
            while self.at_sym(';') {
                self.next();
            }
            if self.at_sym('}') {
                return Ok(out);
            }
            out.push(self.statement(explicit)?);
            if !self.at_sym('}') {
                self.expect_sym(';')?;
            }
        }
    }

    fn builtin(&mut self) -> Result<AlgebraPresentation, ParseError> {
        let head = self.ident("a builtin or `vertices`")?;
        let Kind::Word(w) = &head.kind else { unreachable!() };
        let positive = |t: &Token, n: usize, min: usize| -> Result<usize, ParseError> {
            if n < min {
                Err(t.error(format!("`{}` needs an argument of at least {min}", head.text())))
            } else {
                Ok(n)
            }
        };
        let algebra = match w.as_str() {
            "N" => {
                let (t, n) = self.int()?;
                families::n_line(positive(&t, n, 1)?)
            }
            "Ncirc" => {
                let (t, n) = self.int()?;
                families::n_circ(positive(&t, n, 1)?)
            }
            "local" => {
                let (t, n) = self.int()?;
                families::local(positive(&t, n, 2)?)
            }
            "cycle" => {
                let (t, n) = self.int()?;
                families::cycle(positive(&t, n, 1)?)
            }
            "twopoint" => families::cycle(2),
            "line" => {
                let (t, n) = self.int()?;
                positive(&t, n, 1)?;
                self.expect_keyword("orientation")?;
                let word = self.next();
                let Kind::Str(eps) = &word.kind else {
                    return Err(word.error(format!("expected an orientation string, found {}", word.text())));
                };
                if eps.chars().count() + 1 != n {
                    return Err(word.error(format!("a line on {n} vertices needs {} orientation signs", n - 1)));
                }
                families::line(eps).map_err(|e| word.error(e.to_string()))?
            }
            "pattern" => {
                let (t, name) = self.pattern_name()?;
                catalog::presentation(&name).ok_or_else(|| t.error(format!("unknown pattern `{name}`")))?
            }
            _ => return Err(head.error(format!("unknown builtin `{w}`"))),
        };
        Ok(algebra)
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        self.expect_keyword("algebra")?;
        let name = self.ident("an algebra name")?.text();
        self.expect_sym('{')?;
        let algebra = if self.at_word("vertices") {
            self.next();
            let mut labels = Vec::new();
            while matches!(self.peek().kind, Kind::Word(_)) {
                labels.push(self.next());
            }
            if labels.is_empty() {
                return Err(self.peek().error("`vertices` needs at least one vertex"));
            }
            self.expect_sym(';')?;
            let statements = self.statements(true)?;
            explicit(&labels, &statements)?
        } else {
            let mut algebra = self.builtin()?;
            if !self.at_sym('}') {
                self.expect_sym(';')?;
            }
            let statements = self.statements(false)?;
            add_relations(&mut algebra, &statements)?;
            algebra
        };
        self.expect_sym('}')?;
        if self.peek().kind != Kind::Eof {
            return Err(self.peek().error(format!("expected end of input, found {}", self.peek().text())));
        }
        Ok(Document { name, algebra })
    }
}

fn explicit(labels: &[Token], statements: &[Statement]) -> Result<AlgebraPresentation, ParseError> {
    let mut q = Quiver::new();
    for t in labels {
        q.add_vertex(&t.text()).map_err(|e| t.error(e.to_string()))?;
    }
    for st in statements {
        if let Statement::Arrow { name, source, target } = st {
            let vertex = |t: &Token| {
                q.vertex_by_label(&t.text()).ok_or_else(|| t.error(format!("unknown vertex `{}`", t.text())))
            };
            let (s, t) = (vertex(source)?, vertex(target)?);
            q.add_arrow(&name.text(), s, t).map_err(|e| name.error(e.to_string()))?;
        }
    }
    let mut algebra = AlgebraPresentation::hereditary(q);
    add_relations(&mut algebra, statements)?;
    Ok(algebra)
}

fn resolve(q: &Quiver, tokens: &[Token]) -> Result<Path, ParseError> {
    let mut ids = Vec::with_capacity(tokens.len());
    for t in tokens {
        let a = q.arrow_by_name(&t.text()).ok_or_else(|| t.error(format!("unknown arrow `{}`", t.text())))?;
        if let Some(&prev) = ids.last() {
            if q.target(prev) != q.source(a) {
                return Err(t.error(
                    CoreError::NotComposable { first: q.arrow(prev).name.clone(), second: t.text() }.to_string(),
                ));
            }
        }
        ids.push(a);
    }
    Path::new(q, ids).map_err(|e| tokens[0].error(e.to_string()))
}

fn add_relations(algebra: &mut AlgebraPresentation, statements: &[Statement]) -> Result<(), ParseError> {
    for st in statements {
        match st {
            Statement::Arrow { .. } => {}
            Statement::Zero(tokens) => {
                let p = resolve(algebra.quiver(), tokens)?;
                algebra.add_zero_path(p).map_err(|e| tokens[0].error(e.to_string()))?;
            }
            Statement::Commute { lhs, eq, rhs } => {
                let p = resolve(algebra.quiver(), lhs)?;
                let q = resolve(algebra.quiver(), rhs)?;
                algebra.add_commutativity_paths(p, q).map_err(|e| eq.error(e.to_string()))?;
            }
        }
    }
    Ok(())
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    Parser { tokens: lex(text)?, pos: 0 }.document()
}

fn path_text(q: &Quiver, arrows: &[ArrowId]) -> String {
    arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")
}

/// Explicit form of `algebra`; parsing the result gives back the same
/// vertices, arrows and relations.
pub fn print(name: &str, algebra: &AlgebraPresentation) -> String {
    let q = algebra.quiver();
    let mut s = format!("algebra {name} {{\n");
    let labels: Vec<&str> = q.vertices().map(|v: VertexId| q.label(v)).collect();
    writeln!(s, "    vertices {};", labels.join(" ")).expect("string write");
    for a in q.arrows() {
        writeln!(s, "    arrow {}: {} -> {};", a.name, q.label(a.source), q.label(a.target)).expect("string write");
    }
    for z in algebra.relations().zero_paths() {
        writeln!(s, "    zero {};", path_text(q, z.arrows())).expect("string write");
    }
    for (l, r) in algebra.relations().commutativity_pairs() {
        writeln!(s, "    commute {} = {};", path_text(q, l.arrows()), path_text(q, r.arrows())).expect("string write");
    }
    s.push_str("}\n");
    s
}
