//! Single-token mutants.
//!
//! Operators, applied at every site in line order (guard first, then the
//! returned expression, tokens in source order):
//!
//! | site | operator | replacements |
//! |------|----------|--------------|
//! | `<`, `<=`, `>`, `>=` | ROR | its pair (`<`/`<=`, `>`/`>=`) and its negation |
//! | `==`, `!=` | ROR | the other one (pair and negation coincide) |
//! | `+`, `-`, `*` | AOR | `-`, `+`, `+` respectively |
//! | integer literal | CONST+1, CONST-1 | value ± 1 |

use std::fmt;

use super::lang::{ArithOp, CmpOp, Expr, ToyUnit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    Lit(i64),
    Var(usize),
    Arith(ArithOp),
    Cmp(CmpOp),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MutationOperator {
    Ror,
    Aor,
    ConstPlus,
    ConstMinus,
}

impl fmt::Display for MutationOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MutationOperator::Ror => "ROR",
            MutationOperator::Aor => "AOR",
            MutationOperator::ConstPlus => "CONST+1",
            MutationOperator::ConstMinus => "CONST-1",
        })
    }
}

/// Position of a token: line index (rules first, `else` last) and its
/// ordinal among that line's tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Site {
    pub line: usize,
    pub token: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutant {
    pub id: String,
    pub operator: MutationOperator,
    pub site: Site,
    pub original: Token,
    pub replacement: Token,
    pub mutated_unit: ToyUnit,
}

fn expr_tokens(e: &Expr, out: &mut Vec<Token>) {
    match e {
        Expr::Lit(v) => out.push(Token::Lit(*v)),
        Expr::Var(i) => out.push(Token::Var(*i)),
        Expr::Bin(a, op, b) => {
            expr_tokens(a, out);
            out.push(Token::Arith(*op));
            expr_tokens(b, out);
        }
    }
}

/// Tokens of one line in source order.
pub fn line_tokens(unit: &ToyUnit, line: usize) -> Vec<Token> {
    let mut out = Vec::new();
    match unit.rules.get(line) {
        Some(rule) => {
            expr_tokens(&rule.guard.lhs, &mut out);
            out.push(Token::Cmp(rule.guard.op));
            expr_tokens(&rule.guard.rhs, &mut out);
            expr_tokens(&rule.ret, &mut out);
        }
        None => expr_tokens(&unit.default_return, &mut out),
    }
    out
}

fn replace_in_expr(e: &mut Expr, counter: &mut usize, target: usize, with: Token) -> bool {
    match e {
        Expr::Lit(v) => {
            let hit = *counter == target;
            *counter += 1;
            if hit {
                match with {
                    Token::Lit(n) => *v = n,
                    Token::Var(i) => *e = Expr::Var(i),
                    _ => panic!("cannot put an operator in operand position"),
                }
            }
            hit
        }
        Expr::Var(_) => {
            let hit = *counter == target;
            *counter += 1;
            if hit {
                match with {
                    Token::Lit(n) => *e = Expr::Lit(n),
                    Token::Var(i) => *e = Expr::Var(i),
                    _ => panic!("cannot put an operator in operand position"),
                }
            }
            hit
        }
        Expr::Bin(a, op, b) => {
            if replace_in_expr(a, counter, target, with) {
                return true;
            }
            let hit = *counter == target;
            *counter += 1;
            if hit {
                match with {
                    Token::Arith(new) => *op = new,
                    _ => panic!("expected an arithmetic operator"),
                }
                return true;
            }
            replace_in_expr(b, counter, target, with)
        }
    }
}

/// Copy of `unit` with the token at `site` replaced.
///
/// Panics when the site does not exist or the token kind does not fit.
pub fn replace_token(unit: &ToyUnit, site: Site, with: Token) -> ToyUnit {
    let mut out = unit.clone();
    let mut counter = 0;
    let done = match out.rules.get_mut(site.line) {
        Some(rule) => {
            replace_in_expr(&mut rule.guard.lhs, &mut counter, site.token, with)
                || {
                    let hit = counter == site.token;
                    counter += 1;
                    if hit {
                        match with {
                            Token::Cmp(op) => rule.guard.op = op,
                            _ => panic!("expected a comparison operator"),
                        }
                    }
                    hit
                }
                || replace_in_expr(&mut rule.guard.rhs, &mut counter, site.token, with)
                || replace_in_expr(&mut rule.ret, &mut counter, site.token, with)
        }
        None if site.line == unit.rules.len() => {
            replace_in_expr(&mut out.default_return, &mut counter, site.token, with)
        }
        None => false,
    };
    assert!(done, "no token at {site:?} in `{}`", unit.name);
    out
}

fn ror_alternates(op: CmpOp) -> Vec<CmpOp> {
    let pair = match op {
        CmpOp::Lt => CmpOp::Le,
        CmpOp::Le => CmpOp::Lt,
        CmpOp::Eq => CmpOp::Ne,
        CmpOp::Ne => CmpOp::Eq,
        CmpOp::Ge => CmpOp::Gt,
        CmpOp::Gt => CmpOp::Ge,
    };
    let neg = op.negation();
    if neg == pair {
        vec![pair]
    } else {
        vec![pair, neg]
    }
}

fn aor_alternate(op: ArithOp) -> ArithOp {
    match op {
        ArithOp::Add => ArithOp::Sub,
        ArithOp::Sub => ArithOp::Add,
        ArithOp::Mul => ArithOp::Add,
    }
}

/// Every mutant of `unit`, in a fixed order.
pub fn mutants_of(unit: &ToyUnit) -> Vec<Mutant> {
    let mut out = Vec::new();
    for line in 0..unit.line_count() {
        for (token, tok) in line_tokens(unit, line).into_iter().enumerate() {
            let site = Site { line, token };
            let replacements: Vec<(MutationOperator, Token)> = match tok {
                Token::Cmp(op) => ror_alternates(op)
                    .into_iter()
                    .map(|o| (MutationOperator::Ror, Token::Cmp(o)))
                    .collect(),
                Token::Arith(op) => vec![(MutationOperator::Aor, Token::Arith(aor_alternate(op)))],
                Token::Lit(v) => vec![
                    (MutationOperator::ConstPlus, Token::Lit(v.wrapping_add(1))),
                    (MutationOperator::ConstMinus, Token::Lit(v.wrapping_sub(1))),
                ],
                Token::Var(_) => vec![],
            };
            for (operator, replacement) in replacements {
                out.push(Mutant {
                    id: format!("M{}", out.len() + 1),
                    operator,
                    site,
                    original: tok,
                    replacement,
                    mutated_unit: replace_token(unit, site, replacement),
                });
            }
        }
    }
    out
}
