// Copyright contributors to the ftqc-bench project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! OpenQASM 2.0 subset: parser with positioned diagnostics, and emitter.

use std::fmt;
use std::fmt::Write as _;

use ftqc_core::angle::Angle;
use ftqc_core::circuit::{Circuit, Gate, GateKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// A message tied to a 1-based line and column of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub severity: Severity,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}:{}: {level}: {}", self.line, self.column, self.message)
    }
}

/// A parsed circuit plus any warnings raised along the way.
#[derive(Clone, Debug, PartialEq)]
pub struct Parsed {
    pub circuit: Circuit,
    pub warnings: Vec<ParseDiagnostic>,
}

/// Parses `source` into a circuit called `name`. Rejections carry at least
/// one error diagnostic; warnings are dropped.
pub fn parse_qasm(source: &str, name: &str) -> Result<Circuit, Vec<ParseDiagnostic>> {
    parse_qasm_with_warnings(source, name).map(|p| p.circuit)
}

pub fn parse_qasm_with_warnings(source: &str, name: &str) -> Result<Parsed, Vec<ParseDiagnostic>> {
    let tokens = match lex(source) {
        Ok(t) => t,
        Err(d) => return Err(vec![d]),
    };
    let mut parser = Parser {
        tokens,
        pos: 0,
        diagnostics: Vec::new(),
        qregs: Vec::new(),
        cregs: Vec::new(),
        gates: Vec::new(),
    };
    parser.program();
    parser.finish(name)
}

// ---------------------------------------------------------------------------
// Lexer

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(String),
    Str(String),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(s) => write!(f, "number `{s}`"),
            Tok::Str(s) => write!(f, "string \"{s}\""),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

const SYMBOLS: [&str; 13] = ["->", ";", ",", "[", "]", "(", ")", "{", "}", "+", "-", "*", "/"];

fn error_at(line: usize, column: usize, message: impl Into<String>) -> ParseDiagnostic {
    ParseDiagnostic { line, column, message: message.into(), severity: Severity::Error }
}

fn lex(source: &str) -> Result<Vec<Token>, ParseDiagnostic> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            i += 1;
        }};
    }
    while i < chars.len() {
        let ch = chars[i];
        let (start_line, start_col) = (line, column);
        if ch.is_whitespace() {
            bump!();
        } else if ch == '/' && chars.get(i + 1) == Some(&'/') {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
        } else if ch == '/' && chars.get(i + 1) == Some(&'*') {
            bump!();
            bump!();
            loop {
                if i >= chars.len() {
                    return Err(error_at(start_line, start_col, "unterminated block comment"));
                }
                if chars[i] == '*' && chars.get(i + 1) == Some(&'/') {
                    bump!();
                    bump!();
                    break;
                }
                bump!();
            }
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                bump!();
            }
            tokens.push(Token { tok: Tok::Ident(s), line: start_line, column: start_col });
        } else if ch.is_ascii_digit() || (ch == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                bump!();
            }
            if i < chars.len() && chars[i] == '.' {
                s.push('.');
                bump!();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    s.push(chars[i]);
                    bump!();
                }
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let sign = matches!(chars.get(i + 1), Some('+' | '-'));
                let digit_at = if sign { i + 2 } else { i + 1 };
                if chars.get(digit_at).is_some_and(char::is_ascii_digit) {
                    s.push('e');
                    bump!();
                    if sign {
                        s.push(chars[i]);
                        bump!();
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        s.push(chars[i]);
                        bump!();
                    }
                }
            }
            tokens.push(Token { tok: Tok::Number(s), line: start_line, column: start_col });
        } else if ch == '"' {
            bump!();
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None | Some('\n') => return Err(error_at(start_line, start_col, "unterminated string")),
                    Some('"') => {
                        bump!();
                        break;
                    }
                    Some(&c) => {
                        s.push(c);
                        bump!();
                    }
                }
            }
            tokens.push(Token { tok: Tok::Str(s), line: start_line, column: start_col });
        } else if let Some(sym) = SYMBOLS.iter().find(|s| s.chars().enumerate().all(|(k, c)| chars.get(i + k) == Some(&c))) {
            for _ in 0..sym.len() {
                bump!();
            }
            tokens.push(Token { tok: Tok::Sym(sym), line: start_line, column: start_col });
        } else {
            return Err(error_at(start_line, start_col, format!("unexpected character `{ch}`")));
        }
    }
    tokens.push(Token { tok: Tok::Eof, line, column });
    Ok(tokens)
}

// ---------------------------------------------------------------------------
// Angle expressions

/// Expression value: the float value, and the exact `num/den·π^pi` form
/// while one exists.
#[derive(Clone, Copy, Debug)]
struct Value {
    float: f64,
    exact: Option<Exact>,
}

#[derive(Clone, Copy, Debug)]
struct Exact {
    num: i128,
    den: i128,
    pi: u8,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl Exact {
    fn new(num: i128, den: i128, pi: u8) -> Option<Exact> {
        if den == 0 {
            return None;
        }
        let g = gcd(num, den).max(1);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = num.checked_neg()?;
            den = den.checked_neg()?;
        }
        Some(Exact { num, den, pi })
    }

    fn add(self, o: Exact) -> Option<Exact> {
        if self.pi != o.pi {
            return None;
        }
        let num = self.num.checked_mul(o.den)?.checked_add(o.num.checked_mul(self.den)?)?;
        Exact::new(num, self.den.checked_mul(o.den)?, self.pi)
    }

    fn neg(self) -> Option<Exact> {
        Some(Exact { num: self.num.checked_neg()?, ..self })
    }

    fn mul(self, o: Exact) -> Option<Exact> {
        let pi = self.pi + o.pi;
        if pi > 1 {
            return None;
        }
        Exact::new(self.num.checked_mul(o.num)?, self.den.checked_mul(o.den)?, pi)
    }

    fn div(self, o: Exact) -> Option<Exact> {
        let pi = self.pi.checked_sub(o.pi)?;
        Exact::new(self.num.checked_mul(o.den)?, self.den.checked_mul(o.num)?, pi)
    }
}

fn literal_value(text: &str) -> Value {
    let float = text.parse::<f64>().unwrap_or(f64::NAN);
    Value { float, exact: exact_literal(text) }
}

fn exact_literal(text: &str) -> Option<Exact> {
    let (mantissa, exponent) = match text.split_once('e') {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int}{frac}");
    let mut num: i128 = if digits.is_empty() { 0 } else { digits.parse().ok()? };
    let mut den: i128 = 1;
    let scale = exponent.checked_sub(i32::try_from(frac.len()).ok()?)?;
    let power = 10i128.checked_pow(scale.unsigned_abs())?;
    if scale >= 0 {
        num = num.checked_mul(power)?;
    } else {
        den = power;
    }
    Exact::new(num, den, 0)
}

fn to_angle(v: Value) -> Option<Angle> {
    if let Some(Exact { num, den, pi: 1 }) = v.exact {
        if let (Ok(n), Ok(d)) = (i64::try_from(num), u64::try_from(den)) {
            return Some(Angle::pi_fraction(n, d));
        }
    }
    v.float.is_finite().then(|| Angle::from_radians(v.float))
}

// ---------------------------------------------------------------------------
// Parser

struct Register {
    name: String,
    size: usize,
    offset: usize,
}

/// One operand: a single index or a whole register, as flattened indices.
struct Operand {
    indices: Vec<usize>,
    whole: bool,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    diagnostics: Vec<ParseDiagnostic>,
    qregs: Vec<Register>,
    cregs: Vec<Register>,
    gates: Vec<Gate>,
}

/// Sentinel for an error already recorded as a diagnostic.
struct Reported;

type PResult<T> = Result<T, Reported>;

fn gate_kind(name: &str) -> Option<GateKind> {
    use GateKind::*;
    Some(match name {
        "x" => X,
        "y" => Y,
        "z" => Z,
        "h" => H,
        "s" => S,
        "sdg" => Sdg,
        "t" => T,
        "tdg" => Tdg,
        "sx" => SX,
        "rx" => RX,
        "ry" => RY,
        "rz" => RZ,
        "cx" | "CX" => CNOT,
        "ch" => CH,
        "ccx" => CCX,
        "ccz" => CCZ,
        "swap" => SWAP,
        "u3" | "u" | "U" => U3,
        _ => return None,
    })
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&mut self, at: &Token, message: impl Into<String>) -> Reported {
        self.diagnostics.push(error_at(at.line, at.column, message));
        Reported
    }

    fn warn(&mut self, at: &Token, message: impl Into<String>) {
        self.diagnostics.push(ParseDiagnostic {
            line: at.line,
            column: at.column,
            message: message.into(),
            severity: Severity::Warning,
        });
    }

    fn is_sym(&self, sym: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(s) if *s == sym)
    }

    fn expect_sym(&mut self, sym: &'static str) -> PResult<Token> {
        if self.peek().tok == Tok::Sym(sym) {
            return Ok(self.advance());
        }
        let t = self.peek().clone();
        Err(self.error(&t, format!("expected `{sym}`, found {}", t.tok)))
    }

    fn expect_ident(&mut self) -> PResult<(String, Token)> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.advance();
                Ok((s, t))
            }
            other => Err(self.error(&t, format!("expected an identifier, found {other}"))),
        }
    }

    fn expect_index(&mut self) -> PResult<(usize, Token)> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Number(s) if s.bytes().all(|b| b.is_ascii_digit()) => {
                let parsed = s.parse::<usize>();
                self.advance();
                parsed.map(|n| (n, t.clone())).map_err(|_| self.error(&t, "index is too large"))
            }
            other => Err(self.error(&t, format!("expected a non-negative integer, found {other}"))),
        }
    }

    /// Skips to just past the next `;`, or past a balanced `{ }` block.
    fn recover(&mut self) {
        let mut depth = 0usize;
        loop {
            match &self.peek().tok {
                Tok::Eof => return,
                Tok::Sym(";") if depth == 0 => {
                    self.advance();
                    return;
                }
                Tok::Sym("{") => depth += 1,
                Tok::Sym("}") => {
                    depth = depth.saturating_sub(1);
                    if depth == 0 {
                        self.advance();
                        return;
                    }
                }
                _ => {}
            }
            self.advance();
        }
    }

    fn program(&mut self) {
        if matches!(&self.peek().tok, Tok::Ident(s) if s == "OPENQASM") && self.header().is_err() {
            self.recover();
        }
        while self.peek().tok != Tok::Eof {
            if self.statement().is_err() {
                self.recover();
            }
        }
    }

    fn header(&mut self) -> PResult<()> {
        self.advance();
        let t = self.peek().clone();
        match &t.tok {
            Tok::Number(v) if v == "2.0" || v == "2" => {
                self.advance();
            }
            Tok::Number(v) => return Err(self.error(&t, format!("unsupported OpenQASM version {v}; only 2.0 is accepted"))),
            other => return Err(self.error(&t, format!("expected a version number, found {other}"))),
        }
        self.expect_sym(";")?;
        Ok(())
    }

    fn statement(&mut self) -> PResult<()> {
        let (word, at) = self.expect_ident()?;
        match word.as_str() {
            "OPENQASM" => Err(self.error(&at, "`OPENQASM` header must be the first statement")),
            "include" => {
                let t = self.peek().clone();
                let Tok::Str(file) = &t.tok else {
                    return Err(self.error(&t, format!("expected a file name string, found {}", t.tok)));
                };
                let file = file.clone();
                self.advance();
                self.expect_sym(";")?;
                if file != "qelib1.inc" {
                    self.warn(&t, format!("include \"{file}\" ignored; only qelib1.inc gates are known"));
                }
                Ok(())
            }
            "qreg" | "creg" => self.declaration(word == "qreg"),
            "gate" | "opaque" => Err(self.error(&at, format!("custom gate definitions (`{word}`) are not supported"))),
            "if" => Err(self.error(&at, "classically controlled operations (`if`) are not supported")),
            "reset" => Err(self.error(&at, "`reset` is not supported")),
            "measure" => self.measure(),
            "barrier" => self.barrier(),
            _ => self.gate(word, at),
        }
    }

    fn declaration(&mut self, quantum: bool) -> PResult<()> {
        let (name, at) = self.expect_ident()?;
        self.expect_sym("[")?;
        let (size, size_at) = self.expect_index()?;
        self.expect_sym("]")?;
        self.expect_sym(";")?;
        if size == 0 {
            return Err(self.error(&size_at, "register size must be positive"));
        }
        if self.qregs.iter().chain(&self.cregs).any(|r| r.name == name) {
            return Err(self.error(&at, format!("register `{name}` is already declared")));
        }
        let regs = if quantum { &mut self.qregs } else { &mut self.cregs };
        let offset = regs.last().map_or(0, |r| r.offset + r.size);
        regs.push(Register { name, size, offset });
        Ok(())
    }

    fn operand(&mut self, quantum: bool) -> PResult<Operand> {
        let (name, at) = self.expect_ident()?;
        let regs = if quantum { &self.qregs } else { &self.cregs };
        let Some(reg) = regs.iter().find(|r| r.name == name) else {
            let kind = if quantum { "quantum" } else { "classical" };
            return Err(self.error(&at, format!("unknown {kind} register `{name}`")));
        };
        let (size, offset) = (reg.size, reg.offset);
        if !self.is_sym("[") {
            return Ok(Operand { indices: (offset..offset + size).collect(), whole: true });
        }
        self.advance();
        let (index, index_at) = self.expect_index()?;
        self.expect_sym("]")?;
        if index >= size {
            return Err(self.error(&index_at, format!("index {index} is out of range for `{name}[{size}]`")));
        }
        Ok(Operand { indices: vec![offset + index], whole: false })
    }

    fn operand_list(&mut self) -> PResult<Vec<(Operand, Token)>> {
        let mut ops = Vec::new();
        loop {
            let at = self.peek().clone();
            ops.push((self.operand(true)?, at));
            if !self.is_sym(",") {
                return Ok(ops);
            }
            self.advance();
        }
    }

    /// Expands whole-register operands into one operand tuple per index.
    fn broadcast(&mut self, ops: &[(Operand, Token)]) -> PResult<Vec<Vec<usize>>> {
        let mut width = None;
        for (op, at) in ops.iter().filter(|(op, _)| op.whole) {
            match width {
                None => width = Some(op.indices.len()),
                Some(w) if w != op.indices.len() => {
                    return Err(self.error(at, "registers of different sizes cannot be broadcast together"));
                }
                Some(_) => {}
            }
        }
        let width = width.unwrap_or(1);
        Ok((0..width)
            .map(|i| ops.iter().map(|(op, _)| if op.whole { op.indices[i] } else { op.indices[0] }).collect())
            .collect())
    }

    fn push(&mut self, at: &Token, gate: Result<Gate, ftqc_core::circuit::CircuitError>) -> PResult<()> {
        match gate {
            Ok(g) => {
                self.gates.push(g);
                Ok(())
            }
            Err(e) => Err(self.error(at, e.to_string())),
        }
    }

    fn gate(&mut self, word: String, at: Token) -> PResult<()> {
        let Some(kind) = gate_kind(&word) else {
            return Err(self.error(&at, format!("unknown gate `{word}`")));
        };
        let mut angles = Vec::new();
        if self.is_sym("(") {
            self.advance();
            if !self.is_sym(")") {
                loop {
                    angles.push(self.angle()?);
                    if !self.is_sym(",") {
                        break;
                    }
                    self.advance();
                }
            }
            self.expect_sym(")")?;
        }
        if angles.len() != kind.num_angles() {
            return Err(self.error(
                &at,
                format!("gate `{word}` takes {} parameter(s), found {}", kind.num_angles(), angles.len()),
            ));
        }
        let ops = self.operand_list()?;
        self.expect_sym(";")?;
        let arity = kind.arity().unwrap_or(ops.len());
        if ops.len() != arity {
            return Err(self.error(&at, format!("gate `{word}` takes {arity} qubit(s), found {}", ops.len())));
        }
        for qubits in self.broadcast(&ops)? {
            let gate = Gate::new(kind, angles.clone(), qubits);
            self.push(&at, gate)?;
        }
        Ok(())
    }

    fn measure(&mut self) -> PResult<()> {
        let q_at = self.peek().clone();
        let q = self.operand(true)?;
        self.expect_sym("->")?;
        let c_at = self.peek().clone();
        let c = self.operand(false)?;
        self.expect_sym(";")?;
        if q.indices.len() != c.indices.len() {
            return Err(self.error(&c_at, "measure operands must have the same size"));
        }
        if q.whole != c.whole {
            return Err(self.error(&q_at, "measure must pair a register with a register or a bit with a bit"));
        }
        for (&qubit, &clbit) in q.indices.iter().zip(&c.indices) {
            self.gates.push(Gate::measure(qubit, clbit));
        }
        Ok(())
    }

    fn barrier(&mut self) -> PResult<()> {
        let at = self.peek().clone();
        let ops = self.operand_list()?;
        self.expect_sym(";")?;
        let mut qubits: Vec<usize> = Vec::new();
        for (op, _) in &ops {
            for &q in &op.indices {
                if !qubits.contains(&q) {
                    qubits.push(q);
                }
            }
        }
        self.push(&at, Ok(Gate::barrier(qubits)))
    }

    fn angle(&mut self) -> PResult<Angle> {
        let at = self.peek().clone();
        let v = self.expr()?;
        to_angle(v).ok_or_else(|| self.error(&at, "angle expression is not a finite number"))
    }

    fn expr(&mut self) -> PResult<Value> {
        let mut acc = self.term()?;
        while self.is_sym("+") || self.is_sym("-") {
            let minus = self.advance().tok == Tok::Sym("-");
            let rhs = self.term()?;
            let rhs = if minus { negate(rhs) } else { rhs };
            acc = Value {
                float: acc.float + rhs.float,
                exact: acc.exact.zip(rhs.exact).and_then(|(a, b)| a.add(b)),
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> PResult<Value> {
        let mut acc = self.unary()?;
        while self.is_sym("*") || self.is_sym("/") {
            let op = self.advance();
            let rhs = self.unary()?;
            acc = if op.tok == Tok::Sym("*") {
                Value { float: acc.float * rhs.float, exact: acc.exact.zip(rhs.exact).and_then(|(a, b)| a.mul(b)) }
            } else {
                if rhs.float == 0.0 {
                    return Err(self.error(&op, "division by zero"));
                }
                Value { float: acc.float / rhs.float, exact: acc.exact.zip(rhs.exact).and_then(|(a, b)| a.div(b)) }
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<Value> {
        if self.is_sym("-") {
            self.advance();
            return self.unary().map(negate);
        }
        if self.is_sym("+") {
            self.advance();
            return self.unary();
        }
        self.primary()
    }

    fn primary(&mut self) -> PResult<Value> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Number(s) => {
                let v = literal_value(s);
                self.advance();
                Ok(v)
            }
            Tok::Ident(s) if s == "pi" => {
                self.advance();
                Ok(Value { float: std::f64::consts::PI, exact: Some(Exact { num: 1, den: 1, pi: 1 }) })
            }
            Tok::Sym("(") => {
                self.advance();
                let v = self.expr()?;
                self.expect_sym(")")?;
                Ok(v)
            }
            Tok::Ident(s) => Err(self.error(&t, format!("unknown identifier `{s}` in expression"))),
            other => Err(self.error(&t, format!("expected an expression, found {other}"))),
        }
    }

    fn finish(mut self, name: &str) -> Result<Parsed, Vec<ParseDiagnostic>> {
        let num_qubits = self.qregs.last().map_or(0, |r| r.offset + r.size);
        if num_qubits == 0 && !self.diagnostics.iter().any(|d| d.severity == Severity::Error) {
            let end = self.tokens.last().expect("token stream ends with Eof").clone();
            self.error(&end, "no quantum register declared");
        }
        if self.diagnostics.iter().any(|d| d.severity == Severity::Error) {
            return Err(self.diagnostics);
        }
        let circuit = Circuit::with_gates(num_qubits, name, self.gates)
            .expect("parser only builds gates on declared qubits");
        Ok(Parsed { circuit, warnings: self.diagnostics })
    }
}

fn negate(v: Value) -> Value {
    Value { float: -v.float, exact: v.exact.and_then(Exact::neg) }
}

// ---------------------------------------------------------------------------
// Emitter

/// Writes `circuit` as OpenQASM 2.0 over one register `q` and, when the
/// circuit measures, one register `c`.
pub fn emit_qasm(circuit: &Circuit) -> String {
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", circuit.num_qubits());
    if circuit.num_clbits() > 0 {
        let _ = writeln!(out, "creg c[{}];", circuit.num_clbits());
    }
    for gate in circuit.gates() {
        let operands = gate.qubits().iter().map(|q| format!("q[{q}]")).collect::<Vec<_>>().join(",");
        match gate.kind() {
            GateKind::Measure => {
                let clbit = gate.clbit().unwrap_or(gate.qubits()[0]);
                let _ = writeln!(out, "measure {operands} -> c[{clbit}];");
            }
            kind if gate.angles().is_empty() => {
                let _ = writeln!(out, "{} {operands};", kind.mnemonic());
            }
            kind => {
                let angles = gate.angles().iter().map(Angle::to_string).collect::<Vec<_>>().join(",");
                let _ = writeln!(out, "{}({angles}) {operands};", kind.mnemonic());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> Circuit {
        parse_qasm(src, "t").unwrap_or_else(|d| panic!("{d:?}"))
    }

    fn first_error(src: &str) -> ParseDiagnostic {
        let diags = parse_qasm(src, "t").unwrap_err();
        diags.into_iter().find(|d| d.severity == Severity::Error).expect("an error diagnostic")
    }

    #[test]
    fn minimal_program() {
        let c = parse("qreg q[1]; h q[0];");
        assert_eq!(c.num_qubits(), 1);
        assert_eq!(c.gates(), [Gate::h(0)]);
    }

    #[test]
    fn exact_and_float_angles() {
        let c = parse("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nrz(-pi/4) q[1];\nrz(0.3) q[0];");
        assert_eq!(c.gates()[0], Gate::rz(Angle::pi_fraction(-1, 4), 1));
        assert_eq!(c.gates()[1].angle().unwrap().radians(), 0.3);
        assert!(!c.gates()[1].angle().unwrap().is_exact());
    }

    #[test]
    fn expression_forms() {
        for (src, num, den) in [
            ("3*pi/4", 3, 4),
            ("pi*0.25", 1, 4),
            ("-(pi/2) + pi", 1, 2),
            ("pi/2/2", 1, 4),
            ("2.5e-1*pi", 1, 4),
            ("+pi - -pi/8", -7, 8),
            ("(1/3)*pi", 1, 3),
        ] {
            let c = parse(&format!("qreg q[1]; rz({src}) q[0];"));
            assert_eq!(c.gates()[0].angle(), Some(Angle::pi_fraction(num, den)), "{src}");
        }
        let c = parse("qreg q[1]; rz(pi*pi) q[0];");
        assert!(!c.gates()[0].angle().unwrap().is_exact());
    }

    #[test]
    fn flattens_registers_and_broadcasts() {
        let c = parse("qreg a[2]; qreg b[2]; creg m[2]; creg n[2]; h a; cx a,b; cx a[1],b; measure b -> n; barrier a,b[0];");
        let kinds: Vec<_> = c.gates().iter().map(|g| (g.kind(), g.qubits().to_vec(), g.clbit())).collect();
        assert_eq!(
            kinds,
            [
                (GateKind::H, vec![0], None),
                (GateKind::H, vec![1], None),
                (GateKind::CNOT, vec![0, 2], None),
                (GateKind::CNOT, vec![1, 3], None),
                (GateKind::CNOT, vec![1, 2], None),
                (GateKind::CNOT, vec![1, 3], None),
                (GateKind::Measure, vec![2], Some(2)),
                (GateKind::Measure, vec![3], Some(3)),
                (GateKind::Barrier, vec![0, 1, 2], None),
            ]
        );
    }

    #[test]
    fn aliases() {
        let c = parse("qreg q[2]; CX q[0],q[1]; u(pi,0,pi) q[0]; U(0,0,pi/2) q[1];");
        assert_eq!(c.gates()[0].kind(), GateKind::CNOT);
        assert_eq!(c.gates()[1].kind(), GateKind::U3);
        assert_eq!(c.gates()[2].angles()[2], Angle::pi_fraction(1, 2));
    }

    #[test]
    fn positioned_errors() {
        let d = first_error("qreg q[2];\nfoo q[0];");
        assert_eq!((d.line, d.column), (2, 1));
        assert!(d.message.contains("unknown gate"));

        let d = first_error("qreg q[2];\ncx q[0];");
        assert!(d.message.contains("2 qubit"));

        let d = first_error("qreg q[2];\nh q[5];");
        assert_eq!((d.line, d.column), (2, 5));
        assert!(d.message.contains("out of range"));

        let d = first_error("qreg q[1];\nrz(pi*) q[0];");
        assert_eq!((d.line, d.column), (2, 7));

        let d = first_error("qreg q[1];\nrz(1/0) q[0];");
        assert!(d.message.contains("division by zero"));

        let d = first_error("qreg q[2];\ncx q[1],q[1];");
        assert!(d.message.contains("more than once") || d.message.contains("duplicate"), "{}", d.message);
    }

    #[test]
    fn rejects_unsupported_constructs() {
        for src in [
            "qreg q[1]; gate g a { h a; } g q[0];",
            "qreg q[1]; opaque g a;",
            "qreg q[1]; creg c[1]; if(c==1) x q[0];",
            "qreg q[1]; reset q[0];",
            "OPENQASM 3.0; qreg q[1];",
            "h q[0];",
            "",
        ] {
            let diags = parse_qasm(src, "t").unwrap_err();
            assert!(diags.iter().any(|d| d.severity == Severity::Error), "{src}");
        }
    }

    #[test]
    fn keeps_going_after_errors() {
        let diags = parse_qasm("qreg q[1];\nfoo q[0];\nbar q[0];\nh q[0];", "t").unwrap_err();
        assert_eq!(diags.iter().map(|d| d.line).collect::<Vec<_>>(), [2, 3]);
    }

    #[test]
    fn warns_on_unknown_include() {
        let p = parse_qasm_with_warnings("include \"other.inc\"; qreg q[1]; x q[0];", "t").unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert_eq!(p.warnings[0].severity, Severity::Warning);
    }

    #[test]
    fn emits_expected_text() {
        let c = Circuit::with_gates(2, "t", [Gate::h(0), Gate::rz(Angle::pi_fraction(-1, 4), 1), Gate::cnot(0, 1), Gate::measure(1, 0)])
            .unwrap();
        assert_eq!(
            emit_qasm(&c),
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[1];\nh q[0];\nrz(-pi/4) q[1];\ncx q[0],q[1];\nmeasure q[1] -> c[0];\n"
        );
    }

    #[test]
    fn float_round_trips_bit_identically() {
        let c = Circuit::with_gates(1, "t", [Gate::rz(Angle::from_radians(0.3), 0)]).unwrap();
        let back = parse_qasm(&emit_qasm(&c), "t").unwrap();
        assert_eq!(back.gates()[0].angle().unwrap().radians().to_bits(), 0.3f64.to_bits());
        assert_eq!(back, c);
    }
}
