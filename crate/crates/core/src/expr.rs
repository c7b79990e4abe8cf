//! Expression grammar for polynomials over the *-product.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := literal | var | '(' expr ')' | func '(' expr ')'
//! func   := conj | sym | phi
//! var    := 'q' uint
//! ```
//!
//! A literal is an integer or `p/q` rational with an optional immediately
//! following unit `i`, `j` or `k`, or a bare unit; multi-term quaternion
//! literals like `3/2 + 1/3i` are ordinary sums of atoms. `*` always
//! denotes the *-product (there is no pointwise product in the
//! language), `^` binds tighter than `*` binds tighter than `+`, and
//! products are left-associative.

use std::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::poly::{RingCtx, StarPoly};
use crate::quaternion::{parse_rational, Quaternion, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Func {
    Conj,
    Sym,
    Phi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Lit(Box<Quaternion>),
    /// 0-based variable index, already validated against the ring.
    Var(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(Func, Box<Expr>),
}

/// Parse failure; offsets are 1-based byte positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        offset: usize,
        message: String,
    },
    VarOutOfRange {
        offset: usize,
        var: usize,
        nvars: usize,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            ParseError::VarOutOfRange { offset, var, nvars } => {
                write!(
                    f,
                    "at byte {offset}: variable q{var} out of range (ring has {nvars} variables)"
                )
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Lowering failure: the only ill-typed construct is `phi(...)` inside a
/// star expression (its value lives in the central-variable ring).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerError {
    PhiInExpression,
}

impl fmt::Display for LowerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerError::PhiInExpression => {
                write!(
                    f,
                    "phi(...) yields a central-variable polynomial; apply it as a command"
                )
            }
        }
    }
}

impl std::error::Error for LowerError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Lit(Box<Quaternion>),
    Var(usize),
    Func(Func),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
}

/// (0-based byte offset, token)
fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let syntax = |offset: usize, message: &str| ParseError::Syntax {
        offset: offset + 1,
        message: message.to_string(),
    };
    let mut tokens = Vec::new();
    let mut pos = 0usize;
    while pos < bytes.len() {
        let b = bytes[pos];
        if b.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let token = match b {
            b'(' => {
                pos += 1;
                Token::LParen
            }
            b')' => {
                pos += 1;
                Token::RParen
            }
            b'+' => {
                pos += 1;
                Token::Plus
            }
            b'-' => {
                pos += 1;
                Token::Minus
            }
            b'*' => {
                pos += 1;
                Token::Star
            }
            b'^' => {
                pos += 1;
                Token::Caret
            }
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    let den_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == den_start {
                        return Err(syntax(pos, "expected denominator digits"));
                    }
                }
                let r = parse_rational(&text[start..pos]).map_err(|m| syntax(start, &m))?;
                let unit = if pos < bytes.len() && matches!(bytes[pos], b'i' | b'j' | b'k') {
                    let u = bytes[pos];
                    // a unit suffix must end the literal
                    if pos + 1 < bytes.len() && bytes[pos + 1].is_ascii_alphanumeric() {
                        None
                    } else {
                        pos += 1;
                        Some(u)
                    }
                } else {
                    None
                };
                let zero = Rational::from_integer(0.into());
                Token::Lit(Box::new(match unit {
                    None => Quaternion::from_rational(r),
                    Some(b'i') => Quaternion::new(zero.clone(), r, zero.clone(), zero),
                    Some(b'j') => Quaternion::new(zero.clone(), zero.clone(), r, zero),
                    Some(b'k') => Quaternion::new(zero.clone(), zero.clone(), zero, r),
                    _ => unreachable!(),
                }))
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while pos < bytes.len() && bytes[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                let word = &text[start..pos];
                match word {
                    "i" => Token::Lit(Box::new(Quaternion::i())),
                    "j" => Token::Lit(Box::new(Quaternion::j())),
                    "k" => Token::Lit(Box::new(Quaternion::k())),
                    "conj" => Token::Func(Func::Conj),
                    "sym" => Token::Func(Func::Sym),
                    "phi" => Token::Func(Func::Phi),
                    _ => {
                        if let Some(idx) = word.strip_prefix('q') {
                            if !idx.is_empty() && idx.bytes().all(|c| c.is_ascii_digit()) {
                                let var: usize = idx
                                    .parse()
                                    .map_err(|_| syntax(start, "variable index too large"))?;
                                Token::Var(var)
                            } else {
                                return Err(syntax(start, &format!("unknown identifier `{word}`")));
                            }
                        } else {
                            return Err(syntax(start, &format!("unknown identifier `{word}`")));
                        }
                    }
                }
            }
            _ => return Err(syntax(pos, "unexpected character")),
        };
        tokens.push((start, token));
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    nvars: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o + 1)
            .unwrap_or(self.len + 1)
    }

    fn bump(&mut self) -> Option<&(usize, Token)> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn syntax(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let negate = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                true
            }
            Some(Token::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = Expr::Neg(Box::new(acc));
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            let rhs = self.factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let atom = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let offset = self.offset();
            match self.bump() {
                Some((_, Token::Lit(q))) if q.is_real() && !q.w.is_negative() => {
                    let e = q.w.to_integer().to_u32().ok_or(ParseError::Syntax {
                        offset,
                        message: "exponent too large".to_string(),
                    })?;
                    if !q.w.is_integer() {
                        return Err(ParseError::Syntax {
                            offset,
                            message: "exponent must be an integer".to_string(),
                        });
                    }
                    return Ok(Expr::Pow(Box::new(atom), e));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        offset,
                        message: "expected a non-negative integer exponent".to_string(),
                    })
                }
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let offset = self.offset();
        match self.bump().cloned() {
            Some((_, Token::Lit(q))) => Ok(Expr::Lit(q)),
            Some((_, Token::Var(v))) => {
                if v == 0 || v > self.nvars {
                    return Err(ParseError::VarOutOfRange {
                        offset,
                        var: v,
                        nvars: self.nvars,
                    });
                }
                Ok(Expr::Var(v - 1))
            }
            Some((_, Token::Func(func))) => {
                match self.bump() {
                    Some((_, Token::LParen)) => {}
                    _ => return Err(self.syntax_at_prev("expected `(` after function name")),
                }
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Token::RParen)) => {}
                    _ => return Err(self.syntax_at_prev("expected `)`")),
                }
                Ok(Expr::Call(func, Box::new(inner)))
            }
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Token::RParen)) => {}
                    _ => return Err(self.syntax_at_prev("expected `)`")),
                }
                Ok(inner)
            }
            _ => Err(ParseError::Syntax {
                offset,
                message: "expected a literal, variable, `(` or function call".to_string(),
            }),
        }
    }

    /// Error at the position of the token just consumed (or EOF).
    fn syntax_at_prev(&self, message: &str) -> ParseError {
        let offset = if self.pos == 0 {
            1
        } else {
            self.tokens
                .get(self.pos - 1)
                .map(|(o, _)| *o + 1)
                .unwrap_or(self.len + 1)
        };
        ParseError::Syntax {
            offset,
            message: message.to_string(),
        }
    }
}

/// Parses an expression for a ring with `nvars` variables.
pub fn parse(text: &str, nvars: usize) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        nvars,
        len: text.len(),
    };
    let expr = parser.expr()?;
    if parser.pos != tokens.len() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(expr)
}

/// Lowers an AST to a polynomial: `+`/`-` to ring addition, `*` to the
/// *-product, `^` to repeated *-multiplication.
pub fn lower(expr: &Expr, ctx: RingCtx) -> Result<StarPoly, LowerError> {
    Ok(match expr {
        Expr::Lit(q) => ctx.constant((**q).clone()),
        Expr::Var(v) => ctx.var(*v).expect("validated by the parser"),
        Expr::Neg(e) => lower(e, ctx)?.neg(),
        Expr::Add(a, b) => lower(a, ctx)?.add(&lower(b, ctx)?).expect("same ring"),
        Expr::Sub(a, b) => lower(a, ctx)?.sub(&lower(b, ctx)?).expect("same ring"),
        Expr::Mul(a, b) => lower(a, ctx)?.star_mul(&lower(b, ctx)?).expect("same ring"),
        Expr::Pow(e, n) => lower(e, ctx)?.star_pow(*n),
        Expr::Call(Func::Conj, e) => lower(e, ctx)?.regular_conjugate(),
        Expr::Call(Func::Sym, e) => lower(e, ctx)?.symmetrization(),
        Expr::Call(Func::Phi, _) => return Err(LowerError::PhiInExpression),
    })
}

/// Parse-and-lower convenience.
pub fn parse_poly(text: &str, nvars: usize) -> Result<StarPoly, ParseError> {
    let expr = parse(text, nvars)?;
    lower(&expr, RingCtx::new(nvars)).map_err(|e| ParseError::Syntax {
        offset: 1,
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quaternion {
        s.parse().unwrap()
    }

    #[test]
    fn product_expansion_examples() {
        let p = parse_poly("(q1 - i)*(q2 - j)", 2).unwrap();
        let ctx = RingCtx::new(2);
        let expected = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![1, 0], -Quaternion::j()),
                (vec![0, 1], -Quaternion::i()),
                (vec![0, 0], Quaternion::k()),
            ])
            .unwrap();
        assert_eq!(p, expected);
        let s = parse_poly("q1^2 + q2^2 + 2", 2).unwrap();
        assert_eq!(s.to_string(), "q1^2 + q2^2 + 2");
        assert!(s.is_slice_preserving());
    }

    #[test]
    fn var_out_of_range() {
        assert_eq!(
            parse("q3", 2),
            Err(ParseError::VarOutOfRange {
                offset: 1,
                var: 3,
                nvars: 2
            })
        );
        assert!(matches!(
            parse("q0", 2),
            Err(ParseError::VarOutOfRange { .. })
        ));
    }

    #[test]
    fn lower_examples() {
        // (q2 - i)*(q1 - j) = q1 q2 - q1 i - q2 j + k
        let p = parse_poly("(q2-i)*(q1-j)", 2).unwrap();
        let ctx = RingCtx::new(2);
        let expected = ctx
            .from_terms([
                (vec![1, 1], Quaternion::one()),
                (vec![1, 0], -Quaternion::i()),
                (vec![0, 1], -Quaternion::j()),
                (vec![0, 0], Quaternion::k()),
            ])
            .unwrap();
        assert_eq!(p, expected);
        // conj(q1*q2 - k) = q1 q2 + k
        let c = parse_poly("conj(q1*q2 - k)", 2).unwrap();
        assert_eq!(c.to_string(), "q1*q2 + k");
        assert!(parse_poly("0", 2).unwrap().is_zero());
        // sym works in expressions
        let s = parse_poly("sym(q1*q2 - k)", 2).unwrap();
        assert_eq!(s.to_string(), "q1^2*q2^2 + 1");
    }

    #[test]
    fn literal_and_power_forms() {
        assert_eq!(
            parse_poly("3/2 + 1/3i - 2j + k", 1).unwrap(),
            RingCtx::new(1).constant(q("3/2 + 1/3i - 2j + k"))
        );
        let p = parse_poly("q1^0", 1).unwrap();
        assert!(p.is_one());
        assert_eq!(
            parse_poly("q1^3", 1).unwrap(),
            RingCtx::new(1)
                .monomial(vec![3], Quaternion::one())
                .unwrap()
        );
        // unary minus at expression start and inside parens
        assert_eq!(parse_poly("-q1 + 1", 1).unwrap().to_string(), "-q1 + 1");
        assert_eq!(
            parse_poly("q1*(-1 + i)", 1).unwrap().to_string(),
            "q1*(-1 + i)"
        );
    }

    #[test]
    fn multi_digit_variable_indices() {
        let p = parse_poly("q12^2*q3 - q10", 12).unwrap();
        assert_eq!(p.to_string(), "q3*q12^2 - q10");
        assert_eq!(parse_poly(&p.to_string(), 12).unwrap(), p);
        assert!(matches!(
            parse("q13", 12),
            Err(ParseError::VarOutOfRange { var: 13, .. })
        ));
    }

    #[test]
    fn phi_rejected_in_expressions() {
        let e = parse("phi(q1)", 1).unwrap();
        assert_eq!(lower(&e, RingCtx::new(1)), Err(LowerError::PhiInExpression));
    }

    #[test]
    fn syntax_error_offsets() {
        match parse("q1 + ?", 2) {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("(q1", 2) {
            Err(ParseError::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("q1 q2", 2) {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("q1^(2)", 2) {
            Err(ParseError::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse("q1^1/2", 2) {
            Err(ParseError::Syntax { .. }) => {}
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse("", 2).is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        let ctx = RingCtx::new(2);
        let polys = [
            ctx.zero(),
            ctx.one(),
            ctx.constant(q("1 + i")),
            ctx.from_terms([
                (vec![2, 1], q("1/2 + i")),
                (vec![0, 1], Quaternion::k()),
                (vec![0, 0], q("-1")),
            ])
            .unwrap(),
            ctx.monomial(vec![1, 0], q("-2j")).unwrap(),
            ctx.from_terms([(vec![1, 1], q("-1")), (vec![0, 0], q("-1 - i"))])
                .unwrap(),
        ];
        for p in &polys {
            let printed = p.to_string();
            let reparsed = parse_poly(&printed, 2).unwrap();
            assert_eq!(&reparsed, p, "round trip failed for `{printed}`");
            assert_eq!(reparsed.to_string(), printed);
        }
    }
}
