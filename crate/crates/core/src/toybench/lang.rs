//! Guarded-command subject units.
//!
//! ```text
//! unit abs
//! in x
//! L1: if x < 0 then return 0 - x
//! else return x
//! ```

use std::fmt;

use super::ToyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl ArithOp {
    pub fn symbol(self) -> &'static str {
        match self {
            ArithOp::Add => "+",
            ArithOp::Sub => "-",
            ArithOp::Mul => "*",
        }
    }

    fn precedence(self) -> u8 {
        match self {
            ArithOp::Add | ArithOp::Sub => 1,
            ArithOp::Mul => 2,
        }
    }

    pub fn apply(self, a: i64, b: i64) -> i64 {
        match self {
            ArithOp::Add => a.wrapping_add(b),
            ArithOp::Sub => a.wrapping_sub(b),
            ArithOp::Mul => a.wrapping_mul(b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl CmpOp {
    pub fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "==",
            CmpOp::Ne => "!=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }

    pub fn holds(self, a: i64, b: i64) -> bool {
        match self {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
            CmpOp::Ge => a >= b,
            CmpOp::Gt => a > b,
        }
    }

    pub fn negation(self) -> CmpOp {
        match self {
            CmpOp::Lt => CmpOp::Ge,
            CmpOp::Le => CmpOp::Gt,
            CmpOp::Eq => CmpOp::Ne,
            CmpOp::Ne => CmpOp::Eq,
            CmpOp::Ge => CmpOp::Lt,
            CmpOp::Gt => CmpOp::Le,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Lit(i64),
    /// Index into the unit's parameter list.
    Var(usize),
    Bin(Box<Expr>, ArithOp, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, args: &[i64]) -> i64 {
        match self {
            Expr::Lit(v) => *v,
            Expr::Var(i) => args[*i],
            Expr::Bin(a, op, b) => op.apply(a.eval(args), b.eval(args)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Guard {
    pub lhs: Expr,
    pub op: CmpOp,
    pub rhs: Expr,
}

impl Guard {
    pub fn holds(&self, args: &[i64]) -> bool {
        self.op.holds(self.lhs.eval(args), self.rhs.eval(args))
    }

    /// `lhs - rhs`, used to aim inputs at the guard's boundary.
    pub fn gap(&self, args: &[i64]) -> i64 {
        self.lhs.eval(args).wrapping_sub(self.rhs.eval(args))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GuardedRule {
    pub label: String,
    pub guard: Guard,
    pub ret: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ToyUnit {
    pub name: String,
    pub params: Vec<String>,
    pub rules: Vec<GuardedRule>,
    pub default_return: Expr,
}

impl ToyUnit {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    /// Rule lines plus the trailing `else` line.
    pub fn line_count(&self) -> usize {
        self.rules.len() + 1
    }

    /// Cyclomatic-style complexity: one decision per guard, plus one.
    pub fn complexity(&self) -> usize {
        self.rules.len() + 1
    }

    pub fn line_label(&self, line: usize) -> &str {
        self.rules
            .get(line)
            .map(|r| r.label.as_str())
            .unwrap_or("else")
    }

    fn fmt_expr(&self, e: &Expr, out: &mut String, parent: Option<(ArithOp, bool)>) {
        match e {
            Expr::Lit(v) => out.push_str(&v.to_string()),
            Expr::Var(i) => out.push_str(&self.params[*i]),
            Expr::Bin(a, op, b) => {
                let paren = match parent {
                    None => false,
                    Some((p, is_right)) => {
                        op.precedence() < p.precedence()
                            || (is_right && op.precedence() == p.precedence())
                    }
                };
                if paren {
                    out.push('(');
                }
                self.fmt_expr(a, out, Some((*op, false)));
                out.push(' ');
                out.push_str(op.symbol());
                out.push(' ');
                self.fmt_expr(b, out, Some((*op, true)));
                if paren {
                    out.push(')');
                }
            }
        }
    }

    pub fn expr_to_string(&self, e: &Expr) -> String {
        let mut s = String::new();
        self.fmt_expr(e, &mut s, None);
        s
    }
}

impl fmt::Display for ToyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "unit {}", self.name)?;
        writeln!(f, "in {}", self.params.join(" "))?;
        for rule in &self.rules {
            writeln!(
                f,
                "{}: if {} {} {} then return {}",
                rule.label,
                self.expr_to_string(&rule.guard.lhs),
                rule.guard.op.symbol(),
                self.expr_to_string(&rule.guard.rhs),
                self.expr_to_string(&rule.ret)
            )?;
        }
        writeln!(
            f,
            "else return {}",
            self.expr_to_string(&self.default_return)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Arith(ArithOp),
    Cmp(CmpOp),
    LParen,
    RParen,
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn lex(text: &str, line: usize) -> Result<Vec<Tok>, ToyError> {
    let err = |m: String| ToyError::Syntax { line, message: m };
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let two = text.get(i..i + 2);
        let tok = match (c, two) {
            (_, Some("<=")) => Some((Tok::Cmp(CmpOp::Le), 2)),
            (_, Some(">=")) => Some((Tok::Cmp(CmpOp::Ge), 2)),
            (_, Some("==")) => Some((Tok::Cmp(CmpOp::Eq), 2)),
            (_, Some("!=")) => Some((Tok::Cmp(CmpOp::Ne), 2)),
            ('<', _) => Some((Tok::Cmp(CmpOp::Lt), 1)),
            ('>', _) => Some((Tok::Cmp(CmpOp::Gt), 1)),
            ('+', _) => Some((Tok::Arith(ArithOp::Add), 1)),
            ('*', _) => Some((Tok::Arith(ArithOp::Mul), 1)),
            ('(', _) => Some((Tok::LParen, 1)),
            (')', _) => Some((Tok::RParen, 1)),
            _ => None,
        };
        if let Some((t, len)) = tok {
            toks.push(t);
            i += len;
            continue;
        }
        // A `-` directly followed by a digit is a negative literal when an
        // operand is expected; otherwise it is subtraction.
        let operand_expected = matches!(
            toks.last(),
            None | Some(Tok::Arith(_)) | Some(Tok::Cmp(_)) | Some(Tok::LParen)
        );
        let start = i;
        if c == '-' {
            if operand_expected && bytes.get(i + 1).is_some_and(|b| b.is_ascii_digit()) {
                i += 1;
            } else {
                toks.push(Tok::Arith(ArithOp::Sub));
                i += 1;
                continue;
            }
        }
        if bytes[i].is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let lit = &text[start..i];
            let v = lit
                .parse::<i64>()
                .map_err(|_| err(format!("integer literal `{lit}` out of range")))?;
            toks.push(Tok::Int(v));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            toks.push(Tok::Ident(text[start..i].to_string()));
        } else {
            return Err(err(format!("unexpected character `{c}`")));
        }
    }
    Ok(toks)
}

struct ExprParser<'a> {
    toks: &'a [Tok],
    pos: usize,
    params: &'a [String],
    line: usize,
}

impl ExprParser<'_> {
    fn err(&self, message: impl Into<String>) -> ToyError {
        ToyError::Syntax {
            line: self.line,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<Expr, ToyError> {
        let mut lhs = self.term()?;
        while let Some(Tok::Arith(op @ (ArithOp::Add | ArithOp::Sub))) = self.peek() {
            let op = *op;
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin(Box::new(lhs), op, Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ToyError> {
        let mut lhs = self.factor()?;
        while let Some(Tok::Arith(ArithOp::Mul)) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Expr::Bin(Box::new(lhs), ArithOp::Mul, Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ToyError> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Int(v)) => Ok(Expr::Lit(v)),
            Some(Tok::Ident(name)) => self
                .params
                .iter()
                .position(|p| *p == name)
                .map(Expr::Var)
                .ok_or(ToyError::UndeclaredVariable {
                    line: self.line,
                    name,
                }),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(self.err("missing `)`")),
                }
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }

    fn finish(&self) -> Result<(), ToyError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(format!("trailing token {t:?}"))),
        }
    }
}

fn parse_expr(text: &str, params: &[String], line: usize) -> Result<Expr, ToyError> {
    let toks = lex(text, line)?;
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        params,
        line,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

fn parse_guard(text: &str, params: &[String], line: usize) -> Result<Guard, ToyError> {
    let toks = lex(text, line)?;
    let mut p = ExprParser {
        toks: &toks,
        pos: 0,
        params,
        line,
    };
    let lhs = p.expr()?;
    let op = match p.peek() {
        Some(Tok::Cmp(op)) => *op,
        _ => return Err(p.err("guard needs a comparison operator")),
    };
    p.pos += 1;
    let rhs = p.expr()?;
    p.finish()?;
    Ok(Guard { lhs, op, rhs })
}

/// Parse one unit file.
pub fn parse_unit(text: &str) -> Result<ToyUnit, ToyError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let syntax = |line: usize, m: &str| ToyError::Syntax {
        line,
        message: m.to_string(),
    };

    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty unit file"))?;
    let name = header
        .strip_prefix("unit ")
        .map(str::trim)
        .filter(|n| is_ident(n))
        .ok_or_else(|| syntax(ln, "expected `unit <name>`"))?
        .to_string();

    let (ln, inputs) = lines
        .next()
        .ok_or_else(|| syntax(ln, "missing `in` line"))?;
    let params: Vec<String> = inputs
        .strip_prefix("in ")
        .ok_or_else(|| syntax(ln, "expected `in <v1> <v2> ...`"))?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    if params.is_empty() || !params.iter().all(|p| is_ident(p)) {
        return Err(syntax(ln, "expected at least one parameter name"));
    }
    for (i, p) in params.iter().enumerate() {
        if params[..i].contains(p) {
            return Err(syntax(ln, "duplicate parameter"));
        }
    }

    let mut rules = Vec::new();
    let mut default_return = None;
    let mut last_ln = ln;
    for (ln, line) in lines {
        last_ln = ln;
        if default_return.is_some() {
            return Err(syntax(ln, "content after the `else` line"));
        }
        if let Some(rest) = line.strip_prefix("else") {
            let expr = rest
                .trim_start()
                .strip_prefix("return ")
                .ok_or_else(|| syntax(ln, "expected `else return <expr>`"))?;
            default_return = Some(parse_expr(expr, &params, ln)?);
            continue;
        }
        let (label, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(ln, "expected `L<k>: if ...`"))?;
        let expected = format!("L{}", rules.len() + 1);
        if label.trim() != expected {
            return Err(syntax(ln, "rule labels must run L1, L2, ... in order"));
        }
        let body = body
            .trim()
            .strip_prefix("if ")
            .ok_or_else(|| syntax(ln, "expected `if`"))?;
        let (guard, ret) = body
            .split_once(" then return ")
            .ok_or_else(|| syntax(ln, "expected `then return`"))?;
        rules.push(GuardedRule {
            label: expected,
            guard: parse_guard(guard, &params, ln)?,
            ret: parse_expr(ret, &params, ln)?,
        });
    }
    if rules.is_empty() {
        return Err(syntax(last_ln, "a unit needs at least one rule"));
    }
    let default_return = default_return.ok_or_else(|| syntax(last_ln, "missing `else` line"))?;
    Ok(ToyUnit {
        name,
        params,
        rules,
        default_return,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ABS: &str = "unit abs\nin x\nL1: if x < 0 then return 0 - x\nelse return x\n";

    #[test]
    fn parses_abs() {
        let u = parse_unit(ABS).unwrap();
        assert_eq!(u.name, "abs");
        assert_eq!(u.params, ["x"]);
        assert_eq!(u.rules.len(), 1);
        assert_eq!(u.rules[0].label, "L1");
        assert_eq!(u.rules[0].guard.op, CmpOp::Lt);
        assert_eq!(u.default_return, Expr::Var(0));
        assert_eq!(u.to_string(), ABS);
    }

    #[test]
    fn undeclared_variable() {
        let text = "unit f\nin x\nL1: if y < 0 then return 1\nelse return x\n";
        assert_eq!(
            parse_unit(text),
            Err(ToyError::UndeclaredVariable {
                line: 3,
                name: "y".into()
            })
        );
    }

    #[test]
    fn malformed_units() {
        let bad = [
            "",
            "unit\nin x\nL1: if x < 0 then return 1\nelse return 0",
            "unit f\nL1: if x < 0 then return 1\nelse return 0",
            "unit f\nin x\nelse return 0",
            "unit f\nin x\nL2: if x < 0 then return 1\nelse return 0",
            "unit f\nin x\nL1: if x then return 1\nelse return 0",
            "unit f\nin x\nL1: if x < 0 < 1 then return 1\nelse return 0",
            "unit f\nin x\nL1: if x < 0 then return 1",
            "unit f\nin x\nL1: if x < 0 then return 1\nelse return 0\nL2: if x > 0 then return 1",
            "unit f\nin x\nL1: if x / 2 < 0 then return 1\nelse return 0",
            "unit f\nin x x\nL1: if x < 0 then return 1\nelse return 0",
        ];
        for text in bad {
            assert!(parse_unit(text).is_err(), "{text:?}");
        }
    }

    #[test]
    fn precedence_and_printing() {
        let text = "unit f\nin a b\nL1: if a * (b + 1) >= -2 then return a - (b - 3)\nelse return a - b - 3 + a * b\n";
        let u = parse_unit(text).unwrap();
        assert_eq!(u.to_string(), text);
        assert_eq!(u.rules[0].guard.lhs.eval(&[2, 3]), 8);
        assert_eq!(u.rules[0].ret.eval(&[2, 3]), 2);
        assert_eq!(u.default_return.eval(&[2, 3]), 2);
        assert_eq!(parse_unit(&u.to_string()).unwrap(), u);
    }
}
