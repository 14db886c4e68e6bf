//! Group-spec language: lexer, AST, LL(1) recursive-descent parser and printer.
//!
//! ```text
//! spec     := atom ('x' atom)*
//! atom     := '(' spec ')'
//!           | 'perm' '[' INT ';' perm* ']'
//!           | 'semidirect' '(' spec ',' spec ',' 'images' '=' '[' image (',' image)* ']' ')'
//!           | 'subgroup' '(' spec ',' '[' words ']' ')'
//!           | NAME ['(' param (',' param)* ')']
//! NAME     := IDENT ('.' IDENT)?
//! param    := INT ['^' INT] | 'gf' '(' INT ['^' INT] ')' | spec
//! image    := '[' words ']'
//! words    := word (',' word)*
//! word     := 'e' | factor ('*' factor)*
//! factor   := GEN ['^' ['-'] INT]          GEN = x | y | z | gN
//! perm     := CYCLE+                        adjacent cycles, no whitespace inside a generator
//! ```

use std::fmt;

use crate::error::CliError;

/// Generator `index` raised to `exp`; a word is their product, left to right.
pub type Word = Vec<(usize, i64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Param {
    Int(u64),
    /// `p^n` written inline.
    Power(u64, u32),
    /// `gf(p^n)`.
    Field(u64, u32),
    Spec(Spec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Spec {
    /// Named construction or keyword, e.g. `cyclic(8)`, `paper.f20`, `kernel`.
    Call { name: String, params: Vec<Param> },
    Product(Box<Spec>, Box<Spec>),
    Perm { degree: u32, gens: Vec<Vec<Vec<u32>>> },
    Semidirect { kernel: Box<Spec>, acting: Box<Spec>, images: Vec<Vec<Word>> },
    Subgroup { group: Box<Spec>, words: Vec<Word> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier '{s}'"),
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_spec(text: &str) -> Result<Spec, CliError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.expect_eof()?;
    Ok(spec)
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn line_col(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = pos - before.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1) + 1;
        (line, col)
    }

    fn error(&self, pos: usize, expected: &[&str]) -> CliError {
        let (line, col) = self.line_col(pos);
        CliError::Syntax { line, col, expected: expected.join(", ") }
    }

    /// Next token without consuming it, with its start offset.
    fn peek(&mut self) -> Result<(Tok, usize, usize), CliError> {
        self.skip_ws();
        let start = self.pos;
        let Some(&c) = self.src.get(start) else { return Ok((Tok::Eof, start, start)) };
        if c.is_ascii_alphabetic() || c == b'_' {
            let mut end = start;
            while end < self.src.len() && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_') {
                end += 1;
            }
            let s = std::str::from_utf8(&self.src[start..end]).unwrap().to_string();
            return Ok((Tok::Ident(s), start, end));
        }
        if c.is_ascii_digit() {
            let mut end = start;
            while end < self.src.len() && self.src[end].is_ascii_digit() {
                end += 1;
            }
            let s = std::str::from_utf8(&self.src[start..end]).unwrap();
            let n = s.parse().map_err(|_| self.error(start, &["integer below 2^64"]))?;
            return Ok((Tok::Int(n), start, end));
        }
        if b"()[],;.^*=-".contains(&c) {
            return Ok((Tok::Sym(c as char), start, start + 1));
        }
        Err(self.error(start, &["identifier", "integer", "punctuation"]))
    }

    fn bump(&mut self) -> Result<Tok, CliError> {
        let (t, _, end) = self.peek()?;
        self.pos = end;
        Ok(t)
    }

    fn at_sym(&mut self, c: char) -> Result<bool, CliError> {
        Ok(self.peek()?.0 == Tok::Sym(c))
    }

    fn eat_sym(&mut self, c: char) -> Result<bool, CliError> {
        if self.at_sym(c)? {
            self.bump()?;
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), CliError> {
        let (t, start, _) = self.peek()?;
        if t == Tok::Sym(c) {
            self.bump()?;
            Ok(())
        } else {
            Err(self.error(start, &[&format!("'{c}'")]))
        }
    }

    fn expect_ident(&mut self, word: &str) -> Result<(), CliError> {
        let (t, start, _) = self.peek()?;
        if t == Tok::Ident(word.into()) {
            self.bump()?;
            Ok(())
        } else {
            Err(self.error(start, &[&format!("'{word}'")]))
        }
    }

    fn int(&mut self) -> Result<u64, CliError> {
        let (t, start, _) = self.peek()?;
        match t {
            Tok::Int(n) => {
                self.bump()?;
                Ok(n)
            }
            _ => Err(self.error(start, &["integer"])),
        }
    }

    fn small_int(&mut self) -> Result<u32, CliError> {
        let (_, start, _) = self.peek()?;
        let n = self.int()?;
        u32::try_from(n).map_err(|_| self.error(start, &["integer below 2^32"]))
    }

    fn expect_eof(&mut self) -> Result<(), CliError> {
        let (t, start, _) = self.peek()?;
        if t == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(start, &["'x'", "end of input"]))
        }
    }

    fn spec(&mut self) -> Result<Spec, CliError> {
        let mut left = self.atom()?;
        while self.peek()?.0 == Tok::Ident("x".into()) {
            self.bump()?;
            let right = self.atom()?;
            left = Spec::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Spec, CliError> {
        let (t, start, _) = self.peek()?;
        match t {
            Tok::Sym('(') => {
                self.bump()?;
                let s = self.spec()?;
                self.expect_sym(')')?;
                Ok(s)
            }
            Tok::Ident(name) => {
                self.bump()?;
                match name.as_str() {
                    "perm" => self.perm_literal(),
                    "semidirect" => self.semidirect(),
                    "subgroup" => self.subgroup(),
                    _ => self.call(name),
                }
            }
            _ => Err(self.error(start, &["'('", "identifier"])),
        }
    }

    fn call(&mut self, mut name: String) -> Result<Spec, CliError> {
        if self.eat_sym('.')? {
            let (t, start, _) = self.peek()?;
            match t {
                Tok::Ident(s) => {
                    self.bump()?;
                    name = format!("{name}.{s}");
                }
                _ => return Err(self.error(start, &["identifier"])),
            }
        }
        let mut params = Vec::new();
        if self.eat_sym('(')? {
            params.push(self.param()?);
            while self.eat_sym(',')? {
                params.push(self.param()?);
            }
            self.expect_sym(')')?;
        }
        Ok(Spec::Call { name, params })
    }

    fn param(&mut self) -> Result<Param, CliError> {
        let (t, _, _) = self.peek()?;
        match t {
            Tok::Int(_) => {
                let base = self.int()?;
                if self.eat_sym('^')? {
                    Ok(Param::Power(base, self.small_int()?))
                } else {
                    Ok(Param::Int(base))
                }
            }
            Tok::Ident(s) if s == "gf" => {
                self.bump()?;
                self.expect_sym('(')?;
                let p = self.int()?;
                let n = if self.eat_sym('^')? { self.small_int()? } else { 1 };
                self.expect_sym(')')?;
                Ok(Param::Field(p, n))
            }
            _ => Ok(Param::Spec(self.spec()?)),
        }
    }

    /// A cycle token: `(a,b,...)` with no whitespace inside.
    fn cycle(&mut self) -> Result<Vec<u32>, CliError> {
        let start = self.pos;
        let err = |p: &Self, at: usize| p.error(at, &["cycle without whitespace, e.g. (1,2,3)"]);
        if self.src.get(self.pos) != Some(&b'(') {
            return Err(err(self, start));
        }
        self.pos += 1;
        let mut points = Vec::new();
        if self.src.get(self.pos) == Some(&b')') {
            self.pos += 1;
            return Ok(points);
        }
        loop {
            let s = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if s == self.pos {
                return Err(err(self, self.pos));
            }
            let v = std::str::from_utf8(&self.src[s..self.pos]).unwrap().parse().map_err(|_| err(self, s))?;
            points.push(v);
            match self.src.get(self.pos) {
                Some(b',') => self.pos += 1,
                Some(b')') => {
                    self.pos += 1;
                    return Ok(points);
                }
                _ => return Err(err(self, self.pos)),
            }
        }
    }

    fn perm_literal(&mut self) -> Result<Spec, CliError> {
        self.expect_sym('[')?;
        let degree = self.small_int()?;
        self.expect_sym(';')?;
        let mut gens = Vec::new();
        loop {
            self.skip_ws();
            if self.src.get(self.pos) != Some(&b'(') {
                break;
            }
            // cycles written back to back form one generator
            let mut cycles = vec![self.cycle()?];
            while self.src.get(self.pos) == Some(&b'(') {
                cycles.push(self.cycle()?);
            }
            cycles.retain(|c| !c.is_empty());
            gens.push(cycles);
            self.eat_sym(',')?;
        }
        self.expect_sym(']')?;
        Ok(Spec::Perm { degree, gens })
    }

    fn semidirect(&mut self) -> Result<Spec, CliError> {
        self.expect_sym('(')?;
        let kernel = self.spec()?;
        self.expect_sym(',')?;
        let acting = self.spec()?;
        self.expect_sym(',')?;
        self.expect_ident("images")?;
        self.expect_sym('=')?;
        self.expect_sym('[')?;
        let mut images = vec![self.bracketed_words()?];
        while self.eat_sym(',')? {
            images.push(self.bracketed_words()?);
        }
        self.expect_sym(']')?;
        self.expect_sym(')')?;
        Ok(Spec::Semidirect { kernel: Box::new(kernel), acting: Box::new(acting), images })
    }

    fn subgroup(&mut self) -> Result<Spec, CliError> {
        self.expect_sym('(')?;
        let group = self.spec()?;
        self.expect_sym(',')?;
        let words = self.bracketed_words()?;
        self.expect_sym(')')?;
        Ok(Spec::Subgroup { group: Box::new(group), words })
    }

    fn bracketed_words(&mut self) -> Result<Vec<Word>, CliError> {
        self.expect_sym('[')?;
        let mut words = vec![self.word()?];
        while self.eat_sym(',')? {
            words.push(self.word()?);
        }
        self.expect_sym(']')?;
        Ok(words)
    }

    fn word(&mut self) -> Result<Word, CliError> {
        if self.peek()?.0 == Tok::Ident("e".into()) {
            self.bump()?;
            return Ok(Vec::new());
        }
        let mut w = vec![self.factor()?];
        while self.eat_sym('*')? {
            w.push(self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<(usize, i64), CliError> {
        let (t, start, _) = self.peek()?;
        let gen = match &t {
            Tok::Ident(s) => generator_index(s),
            _ => None,
        };
        let Some(gen) = gen else { return Err(self.error(start, &["generator (x, y, z, g1, g2, ...)", "'e'"])) };
        self.bump()?;
        let mut exp = 1i64;
        if self.eat_sym('^')? {
            let neg = self.eat_sym('-')?;
            let (_, at, _) = self.peek()?;
            let n = self.int()?;
            let n = i64::try_from(n).map_err(|_| self.error(at, &["exponent below 2^63"]))?;
            exp = if neg { -n } else { n };
        }
        Ok((gen, exp))
    }
}

fn generator_index(s: &str) -> Option<usize> {
    match s {
        "x" => Some(0),
        "y" => Some(1),
        "z" => Some(2),
        _ => {
            let n: usize = s.strip_prefix('g')?.parse().ok()?;
            (n >= 1).then(|| n - 1)
        }
    }
}

fn generator_name(i: usize) -> String {
    match i {
        0 => "x".into(),
        1 => "y".into(),
        2 => "z".into(),
        _ => format!("g{}", i + 1),
    }
}

pub fn format_word(w: &Word) -> String {
    if w.is_empty() {
        return "e".into();
    }
    w.iter()
        .map(|&(g, e)| if e == 1 { generator_name(g) } else { format!("{}^{e}", generator_name(g)) })
        .collect::<Vec<_>>()
        .join("*")
}

fn format_words(ws: &[Word]) -> String {
    format!("[{}]", ws.iter().map(format_word).collect::<Vec<_>>().join(", "))
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(n) => write!(f, "{n}"),
            Param::Power(p, n) => write!(f, "{p}^{n}"),
            Param::Field(p, n) => write!(f, "gf({p}^{n})"),
            Param::Spec(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spec::Call { name, params } => {
                f.write_str(name)?;
                if !params.is_empty() {
                    let ps: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                    write!(f, "({})", ps.join(", "))?;
                }
                Ok(())
            }
            Spec::Product(a, b) => {
                write!(f, "{a} x ")?;
                // the product is left-associative, so a product on the right needs parentheses
                if matches!(**b, Spec::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Spec::Perm { degree, gens } => {
                write!(f, "perm[{degree};")?;
                for g in gens {
                    f.write_str(" ")?;
                    if g.is_empty() {
                        f.write_str("()")?;
                    }
                    for c in g {
                        let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                        write!(f, "({})", pts.join(","))?;
                    }
                }
                f.write_str("]")
            }
            Spec::Semidirect { kernel, acting, images } => {
                let ims: Vec<String> = images.iter().map(|w| format_words(w)).collect();
                write!(f, "semidirect({kernel}, {acting}, images=[{}])", ims.join(", "))
            }
            Spec::Subgroup { group, words } => write!(f, "subgroup({group}, {})", format_words(words)),
        }
    }
}
