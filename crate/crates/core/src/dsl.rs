//! A small typed language for strict-monoidal morphism expressions.
//!
//! Grammar (whitespace insignificant, `--` comments to end of line):
//!
//! ```text
//! file    :=  decl* let*
//! decl    :=  "object" NAME ":" NUMBER  |  "gen" genname ":" word "->" word
//! let     :=  "let" NAME "=" expr
//! expr    :=  term ("." term)*            -- composition, binds looser
//! term    :=  factor ("*" factor)*        -- tensor product
//! factor  :=  "id" "[" word "]"  |  genname  |  "(" expr ")"
//! genname :=  NAME ("[" word ("," word)* "]")?
//! word    :=  NAME*                        -- empty word = unit object
//! ```
//!
//! `f . g` is the composite `f after g`; evaluation is matrix product for
//! composition, Kronecker product for tensor, identity for `id`. The unit
//! object is the empty word with dimension 1 and strict unitors.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{flip_matrix, Matrix};
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ObjectWord(pub Vec<String>);

impl ObjectWord {
    pub fn unit() -> ObjectWord {
        ObjectWord(Vec::new())
    }

    pub fn single(name: &str) -> ObjectWord {
        ObjectWord(vec![name.to_string()])
    }

    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        let mut names = self.0.clone();
        names.extend(other.0.iter().cloned());
        ObjectWord(names)
    }
}

impl fmt::Display for ObjectWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSig {
    pub domain: ObjectWord,
    pub codomain: ObjectWord,
}

/// Declared objects (with dimensions) and generators.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    pub objects: BTreeMap<String, usize>,
    pub generators: BTreeMap<String, GenSig>,
}

impl Signature {
    pub fn object(&mut self, name: &str, dim: usize) -> &mut Self {
        self.objects.insert(name.to_string(), dim);
        self
    }

    pub fn generator(&mut self, name: &str, domain: &[&str], codomain: &[&str]) -> &mut Self {
        self.generators.insert(
            name.to_string(),
            GenSig {
                domain: ObjectWord(domain.iter().map(|s| s.to_string()).collect()),
                codomain: ObjectWord(codomain.iter().map(|s| s.to_string()).collect()),
            },
        );
        self
    }

    pub fn word_dim(&self, w: &ObjectWord) -> usize {
        w.0.iter().map(|name| self.objects[name]).product()
    }

    fn check_word(&self, w: &ObjectWord, line: usize, col: usize) -> Result<(), DslError> {
        for name in &w.0 {
            if !self.objects.contains_key(name) {
                return Err(DslError::UnknownName {
                    name: name.clone(),
                    line,
                    col,
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorExpr {
    Gen(String),
    Id(ObjectWord),
    Tensor(Box<MorExpr>, Box<MorExpr>),
    /// `Compose(g, f)` is `g after f`.
    Compose(Box<MorExpr>, Box<MorExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DslError {
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    UnknownName {
        name: String,
        line: usize,
        col: usize,
    },
    /// Typecheck failure at the subexpression reached by `path` (0 = first
    /// child, 1 = second child, from the root).
    Type {
        path: Vec<usize>,
        message: String,
    },
    ShapeMismatch {
        name: String,
        expected: (usize, usize),
        got: (usize, usize),
    },
    Unbound(String),
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DslError::Syntax { line, col, message } => {
                write!(f, "syntax error at {line}:{col}: {message}")
            }
            DslError::UnknownName { name, line, col } => {
                write!(f, "unknown name {name} at {line}:{col}")
            }
            DslError::Type { path, message } => {
                write!(f, "type error at path {path:?}: {message}")
            }
            DslError::ShapeMismatch {
                name,
                expected,
                got,
            } => write!(
                f,
                "matrix for {name} must be {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            DslError::Unbound(name) => write!(f, "no binding for {name}"),
        }
    }
}

// ---------------------------------------------------------------------------
// lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(usize),
    Dot,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Arrow,
    Equals,
}

#[derive(Clone, Debug)]
struct Lexed {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Lexed>, DslError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut core::iter::Peekable<core::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '-' {
            bump(&mut chars);
            match chars.peek() {
                Some('-') => {
                    // comment to end of line
                    while let Some(&c2) = chars.peek() {
                        bump(&mut chars);
                        if c2 == '\n' {
                            break;
                        }
                    }
                    continue;
                }
                Some('>') => {
                    bump(&mut chars);
                    out.push(Lexed {
                        tok: Tok::Arrow,
                        line: tline,
                        col: tcol,
                    });
                    continue;
                }
                _ => {
                    return Err(DslError::Syntax {
                        line: tline,
                        col: tcol,
                        message: String::from("stray '-'"),
                    })
                }
            }
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    name.push(bump(&mut chars));
                } else {
                    break;
                }
            }
            out.push(Lexed {
                tok: Tok::Ident(name),
                line: tline,
                col: tcol,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut n = 0usize;
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_digit() {
                    n = n * 10 + (bump(&mut chars) as usize - '0' as usize);
                } else {
                    break;
                }
            }
            out.push(Lexed {
                tok: Tok::Number(n),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match c {
            '.' => Tok::Dot,
            '*' => Tok::Star,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '=' => Tok::Equals,
            other => {
                return Err(DslError::Syntax {
                    line: tline,
                    col: tcol,
                    message: alloc::format!("unexpected character {other:?}"),
                })
            }
        };
        bump(&mut chars);
        out.push(Lexed {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// parser

struct Parser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|l| (l.line, l.col))
            .unwrap_or((1, 1))
    }

    fn err(&self, message: &str) -> DslError {
        let (line, col) = self.here();
        DslError::Syntax {
            line,
            col,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, tok: &Tok, what: &str) -> Result<(), DslError> {
        if self.peek() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize), DslError> {
        let (line, col) = self.here();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok((name, line, col))
            }
            _ => Err(self.err(what)),
        }
    }

    /// A possibly-empty object word: identifiers up to a delimiter.
    /// `object`, `gen`, `let` and `id` are reserved and end the word.
    fn word(&mut self) -> ObjectWord {
        let mut names = Vec::new();
        while let Some(Tok::Ident(name)) = self.peek() {
            if matches!(name.as_str(), "object" | "gen" | "let" | "id") {
                break;
            }
            names.push(name.clone());
            self.pos += 1;
        }
        ObjectWord(names)
    }

    fn expr(&mut self) -> Result<MorExpr, DslError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Dot) {
            self.pos += 1;
            let rhs = self.term()?;
            acc = MorExpr::Compose(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MorExpr, DslError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = MorExpr::Tensor(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MorExpr, DslError> {
        match self.peek() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.eat(&Tok::RParen, "expected ')'")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) if name == "id" => {
                self.pos += 1;
                let (line, col) = self.here();
                self.eat(&Tok::LBracket, "expected '[' after id")?;
                let w = self.word();
                self.eat(&Tok::RBracket, "expected ']'")?;
                self.sig.check_word(&w, line, col)?;
                Ok(MorExpr::Id(w))
            }
            Some(Tok::Ident(_)) => {
                let (base, line, col) = self.ident("expected name")?;
                let name = if self.peek() == Some(&Tok::LBracket) {
                    self.pos += 1;
                    let mut parts = vec![self.word()];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        parts.push(self.word());
                    }
                    self.eat(&Tok::RBracket, "expected ']'")?;
                    subscripted_name(&base, &parts)
                } else {
                    base
                };
                if !self.sig.generators.contains_key(&name) {
                    return Err(DslError::UnknownName { name, line, col });
                }
                Ok(MorExpr::Gen(name))
            }
            _ => Err(self.err("expected a factor")),
        }
    }
}

/// Canonical spelling of a subscripted generator, e.g. `c[H,H]`.
pub fn subscripted_name(base: &str, parts: &[ObjectWord]) -> String {
    let joined: Vec<String> = parts.iter().map(|w| w.0.join(" ")).collect();
    alloc::format!("{base}[{}]", joined.join(","))
}

/// Parses a single morphism expression against a signature.
pub fn parse_expr(src: &str, sig: &Signature) -> Result<MorExpr, DslError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        sig,
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// A parsed .mor file: signature preamble plus named definitions.
#[derive(Clone, Debug)]
pub struct MorFile {
    pub signature: Signature,
    pub lets: Vec<(String, MorExpr)>,
}

pub fn parse_mor_file(src: &str) -> Result<MorFile, DslError> {
    let toks = lex(src)?;
    let mut sig = Signature::default();
    let mut pos = 0usize;
    let mut lets = Vec::new();
    while pos < toks.len() {
        let mut p = Parser {
            toks: &toks,
            pos,
            sig: &sig,
        };
        match p.peek().cloned() {
            Some(Tok::Ident(kw)) if kw == "object" => {
                p.pos += 1;
                let (name, _, _) = p.ident("expected object name")?;
                p.eat(&Tok::Colon, "expected ':'")?;
                let dim = match p.peek().cloned() {
                    Some(Tok::Number(n)) => {
                        p.pos += 1;
                        n
                    }
                    _ => return Err(p.err("expected a dimension")),
                };
                pos = p.pos;
                sig.objects.insert(name, dim);
            }
            Some(Tok::Ident(kw)) if kw == "gen" => {
                p.pos += 1;
                let (base, _, _) = p.ident("expected generator name")?;
                let name = if p.peek() == Some(&Tok::LBracket) {
                    p.pos += 1;
                    let mut parts = vec![p.word()];
                    while p.peek() == Some(&Tok::Comma) {
                        p.pos += 1;
                        parts.push(p.word());
                    }
                    p.eat(&Tok::RBracket, "expected ']'")?;
                    subscripted_name(&base, &parts)
                } else {
                    base
                };
                p.eat(&Tok::Colon, "expected ':'")?;
                let (line, col) = p.here();
                let domain = p.word();
                p.eat(&Tok::Arrow, "expected '->'")?;
                let codomain = p.word();
                sig.check_word(&domain, line, col)?;
                sig.check_word(&codomain, line, col)?;
                pos = p.pos;
                sig.generators.insert(name, GenSig { domain, codomain });
            }
            Some(Tok::Ident(kw)) if kw == "let" => {
                p.pos += 1;
                let (name, _, _) = p.ident("expected definition name")?;
                p.eat(&Tok::Equals, "expected '='")?;
                let e = p.expr()?;
                pos = p.pos;
                lets.push((name, e));
            }
            _ => return Err(p.err("expected 'object', 'gen' or 'let'")),
        }
    }
    Ok(MorFile {
        signature: sig,
        lets,
    })
}

// ---------------------------------------------------------------------------
// typechecker and printer

pub fn typecheck(e: &MorExpr, sig: &Signature) -> Result<(ObjectWord, ObjectWord), DslError> {
    let mut path = Vec::new();
    typecheck_at(e, sig, &mut path)
}

fn typecheck_at(
    e: &MorExpr,
    sig: &Signature,
    path: &mut Vec<usize>,
) -> Result<(ObjectWord, ObjectWord), DslError> {
    match e {
        MorExpr::Gen(name) => match sig.generators.get(name) {
            Some(gs) => Ok((gs.domain.clone(), gs.codomain.clone())),
            None => Err(DslError::Type {
                path: path.clone(),
                message: alloc::format!("undeclared generator {name}"),
            }),
        },
        MorExpr::Id(w) => Ok((w.clone(), w.clone())),
        MorExpr::Tensor(l, r) => {
            path.push(0);
            let (ld, lc) = typecheck_at(l, sig, path)?;
            path.pop();
            path.push(1);
            let (rd, rc) = typecheck_at(r, sig, path)?;
            path.pop();
            Ok((ld.concat(&rd), lc.concat(&rc)))
        }
        MorExpr::Compose(g, f) => {
            path.push(0);
            let (gd, gc) = typecheck_at(g, sig, path)?;
            path.pop();
            path.push(1);
            let (fd, fc) = typecheck_at(f, sig, path)?;
            path.pop();
            if fc != gd {
                return Err(DslError::Type {
                    path: path.clone(),
                    message: alloc::format!(
                        "cannot compose: left factor expects [{gd}] but right factor produces [{fc}]"
                    ),
                });
            }
            Ok((fd, gc))
        }
    }
}

/// Prints in the grammar; `parse_expr(print_expr(e)) == e`.
pub fn print_expr(e: &MorExpr) -> String {
    fn go(e: &MorExpr, parent: u8, out: &mut String) {
        let prec = match e {
            MorExpr::Compose(..) => 0,
            MorExpr::Tensor(..) => 1,
            _ => 2,
        };
        let parens = prec < parent;
        if parens {
            out.push('(');
        }
        match e {
            MorExpr::Gen(name) => out.push_str(name),
            MorExpr::Id(w) => {
                out.push_str("id[");
                out.push_str(&w.0.join(" "));
                out.push(']');
            }
            MorExpr::Compose(g, f) => {
                go(g, 0, out);
                out.push_str(" . ");
                go(f, 1, out);
            }
            MorExpr::Tensor(l, r) => {
                go(l, 1, out);
                out.push_str(" * ");
                go(r, 2, out);
            }
        }
        if parens {
            out.push(')');
        }
    }
    let mut out = String::new();
    go(e, 0, &mut out);
    out
}

// ---------------------------------------------------------------------------
// evaluation

/// Bindings of objects to dimensions and generators to matrices.
#[derive(Clone, Debug)]
pub struct Environment {
    pub field: FieldSpec,
    pub matrices: BTreeMap<String, Matrix>,
}

impl Environment {
    pub fn new(field: FieldSpec) -> Environment {
        Environment {
            field,
            matrices: BTreeMap::new(),
        }
    }

    pub fn bind(&mut self, name: &str, m: Matrix) -> &mut Self {
        self.matrices.insert(name.to_string(), m);
        self
    }

    /// Binds every unbound generator spelled `c[X,Y]` or `cinv[X,Y]` to the
    /// flip of the corresponding dimensions.
    pub fn bind_flips(&mut self, sig: &Signature) {
        for (name, gs) in &sig.generators {
            if self.matrices.contains_key(name) {
                continue;
            }
            if (name.starts_with("c[") || name.starts_with("cinv[")) && gs.domain.0.len() == 2 {
                let dx = sig.objects[&gs.domain.0[0]];
                let dy = sig.objects[&gs.domain.0[1]];
                self.matrices
                    .insert(name.clone(), flip_matrix(dx, dy, self.field));
            }
        }
    }

    /// Checks that every generator is bound with the declared shape.
    pub fn validate(&self, sig: &Signature) -> Result<(), DslError> {
        for (name, gs) in &sig.generators {
            let m = self
                .matrices
                .get(name)
                .ok_or_else(|| DslError::Unbound(name.clone()))?;
            let expected = (sig.word_dim(&gs.codomain), sig.word_dim(&gs.domain));
            if (m.rows(), m.cols()) != expected {
                return Err(DslError::ShapeMismatch {
                    name: name.clone(),
                    expected,
                    got: (m.rows(), m.cols()),
                });
            }
            if m.field() != self.field {
                return Err(DslError::ShapeMismatch {
                    name: name.clone(),
                    expected,
                    got: (m.rows(), m.cols()),
                });
            }
        }
        Ok(())
    }
}

/// Evaluates a typechecked expression to its exact matrix.
pub fn evaluate(e: &MorExpr, sig: &Signature, env: &Environment) -> Result<Matrix, DslError> {
    typecheck(e, sig)?;
    eval_inner(e, sig, env)
}

fn eval_inner(e: &MorExpr, sig: &Signature, env: &Environment) -> Result<Matrix, DslError> {
    match e {
        MorExpr::Gen(name) => {
            let m = env
                .matrices
                .get(name)
                .ok_or_else(|| DslError::Unbound(name.clone()))?;
            let gs = &sig.generators[name];
            let expected = (sig.word_dim(&gs.codomain), sig.word_dim(&gs.domain));
            if (m.rows(), m.cols()) != expected {
                return Err(DslError::ShapeMismatch {
                    name: name.clone(),
                    expected,
                    got: (m.rows(), m.cols()),
                });
            }
            Ok(m.clone())
        }
        MorExpr::Id(w) => Ok(Matrix::identity(sig.word_dim(w), env.field)),
        MorExpr::Tensor(l, r) => Ok(eval_inner(l, sig, env)?.kronecker(&eval_inner(r, sig, env)?)),
        MorExpr::Compose(g, f) => Ok(eval_inner(g, sig, env)?.mul(&eval_inner(f, sig, env)?)),
    }
}

// ---------------------------------------------------------------------------
// builtin formulas

/// Dimensions for the canonical builtin signature.
#[derive(Clone, Copy, Debug)]
pub struct BuiltinDims {
    /// The Hopf algebra H.
    pub h: usize,
    /// A Yetter-Drinfeld module V.
    pub v: usize,
    /// A bialgebra Q in Yetter-Drinfeld modules.
    pub q: usize,
    /// A Hopf bimodule M.
    pub m: usize,
    /// Graded slots for smash components: Q_a, Q_b, Q_{a+b}.
    pub a: usize,
    pub b: usize,
    pub p: usize,
}

impl Default for BuiltinDims {
    fn default() -> Self {
        BuiltinDims {
            h: 2,
            v: 1,
            q: 1,
            m: 2,
            a: 1,
            b: 1,
            p: 1,
        }
    }
}

/// The canonical signature for the builtin library: objects H, V, Q, M plus
/// the graded slots A, B, P, with the structure maps of a Hopf algebra, a
/// Yetter-Drinfeld module, a Hopf bimodule, a braided bialgebra in YD
/// modules, and one graded component of each smash structure map.
pub fn builtin_signature(dims: BuiltinDims) -> Signature {
    let mut sig = Signature::default();
    sig.object("H", dims.h)
        .object("V", dims.v)
        .object("Q", dims.q)
        .object("M", dims.m)
        .object("A", dims.a)
        .object("B", dims.b)
        .object("P", dims.p);
    sig.generator("m", &["H", "H"], &["H"])
        .generator("u", &[], &["H"])
        .generator("delta", &["H"], &["H", "H"])
        .generator("eps", &["H"], &[])
        .generator("S", &["H"], &["H"])
        .generator("Sinv", &["H"], &["H"])
        // Yetter-Drinfeld module V
        .generator("mu", &["H", "V"], &["V"])
        .generator("rho", &["V"], &["H", "V"])
        // Hopf bimodule M
        .generator("mu_l", &["H", "M"], &["M"])
        .generator("mu_r", &["M", "H"], &["M"])
        .generator("rho_l", &["M"], &["H", "M"])
        .generator("rho_r", &["M"], &["M", "H"])
        // braided bialgebra Q in YD modules
        .generator("mQ", &["Q", "Q"], &["Q"])
        .generator("uQ", &[], &["Q"])
        .generator("dQ", &["Q"], &["Q", "Q"])
        .generator("eQ", &["Q"], &[])
        .generator("muQ", &["H", "Q"], &["Q"])
        .generator("rhoQ", &["Q"], &["H", "Q"])
        // one graded component: m_{a,b}: A B -> P and Δ_{a,b}: P -> A B
        .generator("mab", &["A", "B"], &["P"])
        .generator("dab", &["P"], &["A", "B"])
        .generator("muB", &["H", "B"], &["B"])
        .generator("rhoB", &["B"], &["H", "B"]);
    for (x, y) in [
        ("H", "H"),
        ("H", "M"),
        ("M", "H"),
        ("H", "V"),
        ("V", "H"),
        ("V", "V"),
        ("H", "Q"),
        ("Q", "H"),
        ("H", "B"),
        ("B", "H"),
    ] {
        let c = subscripted_name("c", &[ObjectWord::single(x), ObjectWord::single(y)]);
        sig.generators.insert(
            c,
            GenSig {
                domain: ObjectWord(vec![x.to_string(), y.to_string()]),
                codomain: ObjectWord(vec![y.to_string(), x.to_string()]),
            },
        );
        let cinv = subscripted_name("cinv", &[ObjectWord::single(x), ObjectWord::single(y)]);
        sig.generators.insert(
            cinv,
            GenSig {
                domain: ObjectWord(vec![y.to_string(), x.to_string()]),
                codomain: ObjectWord(vec![x.to_string(), y.to_string()]),
            },
        );
    }
    sig
}

/// The structure-map composites of the theory, transcribed as expressions.
/// Every entry typechecks against `builtin_signature`.
pub fn builtin_formulas(dims: BuiltinDims) -> (Signature, BTreeMap<String, MorExpr>) {
    let sig = builtin_signature(dims);
    let sources: &[(&str, &str)] = &[
        ("braided_compat_lhs", "delta . m"),
        (
            "braided_compat_rhs",
            "(m * m) . (id[H] * c[H,H] * id[H]) . (delta * delta)",
        ),
        ("counit_mult_lhs", "eps . m"),
        ("counit_mult_rhs", "eps * eps"),
        (
            "adjoint_action",
            "m . (m * id[H]) . (id[H] * c[H,H]) . (id[H] * S * id[H]) . (delta * id[H])",
        ),
        (
            "coadjoint_coaction",
            "(m * id[H]) . (id[H] * S * id[H]) . (id[H] * c[H,H]) . (delta * id[H]) . delta",
        ),
        ("hopf_bimod1_lhs", "rho_l . mu_l"),
        (
            "hopf_bimod1_rhs",
            "(m * mu_l) . (id[H] * c[H,H] * id[M]) . (delta * rho_l)",
        ),
        ("hopf_bimod2_lhs", "rho_l . mu_r"),
        (
            "hopf_bimod2_rhs",
            "(m * mu_r) . (id[H] * c[M,H] * id[H]) . (rho_l * delta)",
        ),
        ("hopf_bimod3_lhs", "rho_r . mu_l"),
        (
            "hopf_bimod3_rhs",
            "(mu_l * m) . (id[H] * c[H,M] * id[H]) . (delta * rho_r)",
        ),
        ("hopf_bimod4_lhs", "rho_r . mu_r"),
        (
            "hopf_bimod4_rhs",
            "(mu_r * m) . (id[M] * c[H,H] * id[H]) . (rho_r * delta)",
        ),
        ("psi_braiding", "(mu * id[V]) . (id[H] * c[V,V]) . (rho * id[V])"),
        (
            "psi_inverse",
            "(id[V] * mu) . (id[V] * cinv[H,V]) . (cinv[V,V] * Sinv) . (id[V] * cinv[V,H]) . (id[V] * rho)",
        ),
        ("yd_compat_lhs", "rho . mu"),
        (
            "yd_compat_rhs",
            "((m . (m * id[H])) * mu) . (id[H] * id[H] * S * id[H] * id[V]) \
             . (id[H] * c[H,H] * id[H] * id[V]) . (id[H] * id[H] * c[H,H] * id[V]) \
             . (id[H] * c[H,H] * id[H] * id[V]) . (((delta * id[H]) . delta) * rho)",
        ),
        (
            "bosonization_mult",
            "(mQ * m) . (id[Q] * muQ * id[H] * id[H]) . (id[Q] * id[H] * c[H,Q] * id[H]) \
             . (id[Q] * delta * id[Q] * id[H])",
        ),
        ("bosonization_unit", "uQ * u"),
        (
            "bosonization_comult",
            "(id[Q] * m * id[Q] * id[H]) . (id[Q] * id[H] * c[Q,H] * id[H]) \
             . (id[Q] * rhoQ * id[H] * id[H]) . (dQ * delta)",
        ),
        ("bosonization_counit", "eQ * eps"),
        (
            "smash_mult_component",
            "(mab * m) . (id[A] * muB * id[H] * id[H]) . (id[A] * id[H] * c[H,B] * id[H]) \
             . (id[A] * delta * id[B] * id[H])",
        ),
        (
            "smash_comult_component",
            "(id[A] * m * id[B] * id[H]) . (id[A] * id[H] * c[B,H] * id[H]) \
             . (id[A] * rhoB * id[H] * id[H]) . (dab * delta)",
        ),
    ];
    let mut out = BTreeMap::new();
    for (name, src) in sources {
        let e = parse_expr(src, &sig).expect("builtin parses");
        typecheck(&e, &sig).expect("builtin typechecks");
        out.insert(name.to_string(), e);
    }
    (sig, out)
}

/// Deterministic well-typed expression sampler for round-trip testing.
pub fn sample_expr(sig: &Signature, seed: u64, steps: usize) -> MorExpr {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let gens: Vec<&String> = sig.generators.keys().collect();
    let objects: Vec<&String> = sig.objects.keys().collect();
    let mut pool: Vec<(MorExpr, ObjectWord, ObjectWord)> = Vec::new();
    let leaf = |r: u64, pool: &mut Vec<(MorExpr, ObjectWord, ObjectWord)>| {
        if r % 3 == 0 {
            let mut names = Vec::new();
            let len = (r / 3) % 3;
            for k in 0..len {
                names.push(objects[((r / 7 + k) % objects.len() as u64) as usize].clone());
            }
            let w = ObjectWord(names);
            pool.push((MorExpr::Id(w.clone()), w.clone(), w));
        } else {
            let name = gens[(r % gens.len() as u64) as usize];
            let gs = &sig.generators[name];
            pool.push((
                MorExpr::Gen(name.clone()),
                gs.domain.clone(),
                gs.codomain.clone(),
            ));
        }
    };
    leaf(next(), &mut pool);
    for _ in 0..steps {
        let r = next();
        match r % 4 {
            0 | 1 => leaf(next(), &mut pool),
            2 => {
                let i = (next() % pool.len() as u64) as usize;
                let j = (next() % pool.len() as u64) as usize;
                let (le, ld, lc) = pool[i].clone();
                let (re, rd, rc) = pool[j].clone();
                pool.push((
                    MorExpr::Tensor(Box::new(le), Box::new(re)),
                    ld.concat(&rd),
                    lc.concat(&rc),
                ));
            }
            _ => {
                // find a composable pair (g, f) with dom(g) = cod(f)
                let start = (next() % pool.len() as u64) as usize;
                let n = pool.len();
                'search: for di in 0..n {
                    let i = (start + di) % n;
                    for dj in 0..n {
                        let j = (start + dj) % n;
                        if pool[j].2 == pool[i].1 {
                            let (ge, gd, gc) = pool[i].clone();
                            let (fe, fd, _) = pool[j].clone();
                            let _ = gd;
                            pool.push((
                                MorExpr::Compose(Box::new(ge), Box::new(fe)),
                                fd,
                                gc,
                            ));
                            break 'search;
                        }
                    }
                }
            }
        }
    }
    pool.last().expect("nonempty pool").0.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bosonization::{bosonize, typeone_yd};
    use crate::hopf::tests::sign_module;
    use crate::hopf::{check_hopf_bimodule, group_algebra, yd_to_bimodule, GroupTable};

    const Q: FieldSpec = FieldSpec::Rational;

    fn hopf_sig() -> Signature {
        builtin_signature(BuiltinDims::default())
    }

    /// Environment instantiating the canonical signature on the Z/2 sign
    /// module: H = kZ/2, V the sign module, M = V⊗H, Q the unit object.
    fn sign_env(dims: &mut BuiltinDims) -> (Signature, Environment) {
        let v = sign_module(Q);
        let h = &v.hopf;
        let m = yd_to_bimodule(&v);
        *dims = BuiltinDims {
            h: h.dim,
            v: v.dim,
            q: 1,
            m: m.dim,
            a: 1,
            b: 1,
            p: 1,
        };
        let sig = builtin_signature(*dims);
        let mut env = Environment::new(Q);
        env.bind("m", h.mult.clone())
            .bind("u", h.unit.clone())
            .bind("delta", h.comult.clone())
            .bind("eps", h.counit.clone())
            .bind("S", h.antipode.clone())
            .bind("Sinv", h.antipode_inv.clone())
            .bind("mu", v.action.clone())
            .bind("rho", v.coaction.clone())
            .bind("mu_l", m.act_l.clone())
            .bind("mu_r", m.act_r.clone())
            .bind("rho_l", m.coact_l.clone())
            .bind("rho_r", m.coact_r.clone());
        let one = Matrix::identity(1, Q);
        env.bind("mQ", one.clone())
            .bind("uQ", one.clone())
            .bind("dQ", one.clone())
            .bind("eQ", one.clone())
            .bind("muQ", h.counit.clone())
            .bind("rhoQ", h.unit.clone())
            .bind("mab", one.clone())
            .bind("dab", one.clone())
            .bind("muB", h.counit.clone())
            .bind("rhoB", h.unit.clone());
        env.bind_flips(&sig);
        (sig, env)
    }

    #[test]
    fn parse_compat_expression() {
        let sig = hopf_sig();
        let e = parse_expr(
            "(m * m) . (id[H] * c[H,H] * id[H]) . (delta * delta)",
            &sig,
        )
        .unwrap();
        // left-associated composition chain of depth 3
        match &e {
            MorExpr::Compose(l, _) => match l.as_ref() {
                MorExpr::Compose(..) => {}
                other => panic!("expected nested compose, got {other:?}"),
            },
            other => panic!("expected compose, got {other:?}"),
        }
        let (dom, cod) = typecheck(&e, &sig).unwrap();
        assert_eq!(dom.to_string(), "H H");
        assert_eq!(cod.to_string(), "H H");
    }

    #[test]
    fn parse_identity() {
        let sig = hopf_sig();
        assert_eq!(
            parse_expr("id[H]", &sig).unwrap(),
            MorExpr::Id(ObjectWord::single("H"))
        );
        assert_eq!(
            parse_expr("id[]", &sig).unwrap(),
            MorExpr::Id(ObjectWord::unit())
        );
    }

    #[test]
    fn unknown_names_are_positioned() {
        let sig = hopf_sig();
        match parse_expr("m . frobnicate", &sig) {
            Err(DslError::UnknownName { name, line, col }) => {
                assert_eq!(name, "frobnicate");
                assert_eq!((line, col), (1, 5));
            }
            other => panic!("expected UnknownName, got {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_are_positioned() {
        let sig = hopf_sig();
        match parse_expr("m . (delta * ", &sig) {
            Err(DslError::Syntax { line: 1, col, .. }) => assert!(col >= 12),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn typecheck_reports_the_offending_path() {
        let sig = hopf_sig();
        // m . m: left factor wants H H, right factor produces H
        let e = parse_expr("m . m", &sig).unwrap();
        match typecheck(&e, &sig) {
            Err(DslError::Type { path, .. }) => assert_eq!(path, Vec::<usize>::new()),
            other => panic!("expected type error, got {other:?}"),
        }
        // the failure can sit deeper in the tree
        let e = parse_expr("delta * (m . m)", &sig).unwrap();
        match typecheck(&e, &sig) {
            Err(DslError::Type { path, .. }) => assert_eq!(path, vec![1]),
            other => panic!("expected type error, got {other:?}"),
        }
    }

    #[test]
    fn adjoint_expression_types_as_binary_operation() {
        let sig = hopf_sig();
        let (_, builtins) = builtin_formulas(BuiltinDims::default());
        let (dom, cod) = typecheck(&builtins["adjoint_action"], &sig).unwrap();
        assert_eq!(dom.to_string(), "H H");
        assert_eq!(cod.to_string(), "H");
    }

    #[test]
    fn evaluate_identity() {
        let mut sig = Signature::default();
        sig.object("X", 3);
        let env = Environment::new(Q);
        let e = parse_expr("id[X]", &sig).unwrap();
        assert_eq!(evaluate(&e, &sig, &env).unwrap(), Matrix::identity(3, Q));
    }

    #[test]
    fn braided_compat_residual_vanishes_on_group_algebra() {
        let mut dims = BuiltinDims::default();
        let (sig, env) = sign_env(&mut dims);
        env.validate(&sig).unwrap();
        let (_, builtins) = builtin_formulas(dims);
        let lhs = evaluate(&builtins["braided_compat_lhs"], &sig, &env).unwrap();
        let rhs = evaluate(&builtins["braided_compat_rhs"], &sig, &env).unwrap();
        assert_eq!(lhs, rhs);
        let lhs = evaluate(&builtins["counit_mult_lhs"], &sig, &env).unwrap();
        let rhs = evaluate(&builtins["counit_mult_rhs"], &sig, &env).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hopf_bimodule_residuals_vanish() {
        let mut dims = BuiltinDims::default();
        let (sig, env) = sign_env(&mut dims);
        let (_, builtins) = builtin_formulas(dims);
        for law in ["hopf_bimod1", "hopf_bimod2", "hopf_bimod3", "hopf_bimod4"] {
            let lhs = evaluate(&builtins[&alloc::format!("{law}_lhs")], &sig, &env).unwrap();
            let rhs = evaluate(&builtins[&alloc::format!("{law}_rhs")], &sig, &env).unwrap();
            assert_eq!(lhs, rhs, "{law}");
        }
        // and the checker agrees
        let m = yd_to_bimodule(&sign_module(Q));
        assert!(crate::graded::all_passed(&check_hopf_bimodule(&m)));
    }

    #[test]
    fn yd_compat_residual_vanishes() {
        let mut dims = BuiltinDims::default();
        let (sig, env) = sign_env(&mut dims);
        let (_, builtins) = builtin_formulas(dims);
        let lhs = evaluate(&builtins["yd_compat_lhs"], &sig, &env).unwrap();
        let rhs = evaluate(&builtins["yd_compat_rhs"], &sig, &env).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn builtin_count_and_typecheck() {
        let (sig, builtins) = builtin_formulas(BuiltinDims::default());
        assert!(builtins.len() >= 12, "only {} builtins", builtins.len());
        for (name, e) in &builtins {
            typecheck(e, &sig).unwrap_or_else(|err| panic!("{name}: {err}"));
        }
    }

    #[test]
    fn psi_braiding_matches_yd_braiding() {
        let mut dims = BuiltinDims::default();
        let (sig, env) = sign_env(&mut dims);
        let (_, builtins) = builtin_formulas(dims);
        let psi = evaluate(&builtins["psi_braiding"], &sig, &env).unwrap();
        let v = sign_module(Q);
        let b = v.braiding().unwrap();
        assert_eq!(&psi, b.matrix());
        let psi_inv = evaluate(&builtins["psi_inverse"], &sig, &env).unwrap();
        assert_eq!(&psi_inv, b.inverse_matrix());
    }

    #[test]
    fn adjoint_builtins_match_hand_coded() {
        let mut dims = BuiltinDims::default();
        let (sig, env) = sign_env(&mut dims);
        let (_, builtins) = builtin_formulas(dims);
        let h = group_algebra(&GroupTable::cyclic(2), Q);
        assert_eq!(
            evaluate(&builtins["adjoint_action"], &sig, &env).unwrap(),
            h.adjoint_action()
        );
        assert_eq!(
            evaluate(&builtins["coadjoint_coaction"], &sig, &env).unwrap(),
            h.coadjoint_coaction()
        );
    }

    #[test]
    fn smash_components_match_bosonize() {
        let v = sign_module(Q);
        let ydb = typeone_yd(&v, 2).unwrap();
        let bos = bosonize(&ydb);
        for (a, b) in [(0usize, 0usize), (0, 1), (1, 0)] {
            let dims = BuiltinDims {
                h: v.hopf.dim,
                v: v.dim,
                q: 1,
                m: 2,
                a: ydb.bialgebra.dim(a),
                b: ydb.bialgebra.dim(b),
                p: ydb.bialgebra.dim(a + b),
            };
            let sig = builtin_signature(dims);
            let mut env = Environment::new(Q);
            env.bind("m", v.hopf.mult.clone())
                .bind("u", v.hopf.unit.clone())
                .bind("delta", v.hopf.comult.clone())
                .bind("eps", v.hopf.counit.clone())
                .bind("S", v.hopf.antipode.clone())
                .bind("Sinv", v.hopf.antipode_inv.clone())
                .bind("mab", ydb.bialgebra.mult(a, b).clone())
                .bind("dab", ydb.bialgebra.comult(a, b).clone())
                .bind("muB", ydb.actions[b].clone())
                .bind("rhoB", ydb.coactions[b].clone());
            env.bind_flips(&sig);
            let (_, builtins) = builtin_formulas(dims);
            let m_comp = evaluate(&builtins["smash_mult_component"], &sig, &env).unwrap();
            assert_eq!(&m_comp, bos.mult(a, b), "mult component ({a},{b})");
            let d_comp = evaluate(&builtins["smash_comult_component"], &sig, &env).unwrap();
            assert_eq!(&d_comp, bos.comult(a, b), "comult component ({a},{b})");
        }
    }

    #[test]
    fn bosonization_builtin_on_trivial_q_is_the_hopf_multiplication() {
        let mut dims = BuiltinDims::default();
        let (sig, env) = sign_env(&mut dims);
        let (_, builtins) = builtin_formulas(dims);
        let h = group_algebra(&GroupTable::cyclic(2), Q);
        let m = evaluate(&builtins["bosonization_mult"], &sig, &env).unwrap();
        assert_eq!(m, h.mult);
        let d = evaluate(&builtins["bosonization_comult"], &sig, &env).unwrap();
        assert_eq!(d, h.comult);
        let u = evaluate(&builtins["bosonization_unit"], &sig, &env).unwrap();
        assert_eq!(u, h.unit);
        let e = evaluate(&builtins["bosonization_counit"], &sig, &env).unwrap();
        assert_eq!(e, h.counit);
    }

    #[test]
    fn functoriality_and_interchange() {
        let mut dims = BuiltinDims::default();
        let (sig, env) = sign_env(&mut dims);
        let f = parse_expr("m", &sig).unwrap();
        let g = parse_expr("delta", &sig).unwrap();
        let composed = parse_expr("delta . m", &sig).unwrap();
        assert_eq!(
            evaluate(&composed, &sig, &env).unwrap(),
            evaluate(&g, &sig, &env)
                .unwrap()
                .mul(&evaluate(&f, &sig, &env).unwrap())
        );
        let tensored = parse_expr("m * delta", &sig).unwrap();
        assert_eq!(
            evaluate(&tensored, &sig, &env).unwrap(),
            evaluate(&f, &sig, &env)
                .unwrap()
                .kronecker(&evaluate(&g, &sig, &env).unwrap())
        );
        // interchange: (g⊗g') ∘ (f⊗f') = (g∘f) ⊗ (g'∘f')
        let lhs = parse_expr("(delta * delta) . (m * m)", &sig).unwrap();
        let rhs = parse_expr("(delta . m) * (delta . m)", &sig).unwrap();
        assert_eq!(
            evaluate(&lhs, &sig, &env).unwrap(),
            evaluate(&rhs, &sig, &env).unwrap()
        );
    }

    #[test]
    fn print_parse_round_trip() {
        let sig = hopf_sig();
        let (_, builtins) = builtin_formulas(BuiltinDims::default());
        for (name, e) in &builtins {
            let printed = print_expr(e);
            let reparsed = parse_expr(&printed, &sig)
                .unwrap_or_else(|err| panic!("{name}: {printed}: {err}"));
            assert_eq!(&reparsed, e, "{name}");
        }
        for seed in 0..200u64 {
            let e = sample_expr(&sig, seed, 20);
            let printed = print_expr(&e);
            let reparsed = parse_expr(&printed, &sig)
                .unwrap_or_else(|err| panic!("seed {seed}: {printed}: {err}"));
            assert_eq!(reparsed, e, "seed {seed}");
        }
    }

    #[test]
    fn mor_file_parsing() {
        let src = "-- a tiny signature\n\
                   object H : 2\n\
                   gen m : H H -> H\n\
                   gen u : -> H\n\
                   let square = m . (id[H] * id[H])\n\
                   let unit_law = m . (u * id[H])\n";
        let file = parse_mor_file(src).unwrap();
        assert_eq!(file.signature.objects["H"], 2);
        assert_eq!(file.lets.len(), 2);
        assert_eq!(file.lets[0].0, "square");
        let (dom, cod) = typecheck(&file.lets[1].1, &file.signature).unwrap();
        assert_eq!(dom.to_string(), "H");
        assert_eq!(cod.to_string(), "H");
    }
}
