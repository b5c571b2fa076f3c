//! Polynomial expressions in `X`.
//!
//! Grammar (whitespace is ignored, multiplication must be explicit):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' INTEGER)?
//! primary := RATIONAL | 'X' | '(' expr ')'
//! ```
//!
//! `RATIONAL` is `a` or `a/b` with unsigned decimal `a`, `b`.

use gapsum_core::{parse_rational, Polynomial, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("non-integer exponent at position {pos}")]
    NonIntegerExponent { pos: usize },
    #[error("degree {degree} exceeds the limit of {max} (set GAPSUM_MAX_DEGREE to raise it)")]
    DegreeTooLarge { degree: u64, max: u64 },
}

/// Default cap on the degree of any parsed expression.
pub const DEFAULT_MAX_DEGREE: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number { text: String, fraction: bool },
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |mut i: usize| {
        while i < chars.len() && chars[i].1.is_whitespace() {
            i += 1;
        }
        i
    };
    while i < chars.len() {
        let (pos, c) = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let mut text = String::new();
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    text.push(chars[i].1);
                    i += 1;
                }
                let j = skip_ws(i);
                let mut fraction = false;
                if j < chars.len() && chars[j].1 == '/' {
                    let k = skip_ws(j + 1);
                    if k >= chars.len() || !chars[k].1.is_ascii_digit() {
                        return Err(ParseError::Syntax {
                            pos: chars.get(k).map_or(src.len(), |c| c.0),
                            msg: "expected a denominator after '/'".into(),
                        });
                    }
                    text.push('/');
                    i = k;
                    while i < chars.len() && chars[i].1.is_ascii_digit() {
                        text.push(chars[i].1);
                        i += 1;
                    }
                    fraction = true;
                }
                out.push((pos, Token::Number { text, fraction }));
                continue;
            }
            'X' | 'x' => Token::X,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => {
                return Err(ParseError::Syntax {
                    pos,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

/// Syntax tree of a polynomial expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Const(Rational),
    Var,
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

impl PolyExpr {
    /// Expands the tree, rejecting any intermediate degree above `max_degree`.
    pub fn expand(&self, max_degree: u64) -> Result<Polynomial, ParseError> {
        let check = |p: Polynomial| {
            let degree = p.degree().max(0) as u64;
            if degree > max_degree {
                Err(ParseError::DegreeTooLarge {
                    degree,
                    max: max_degree,
                })
            } else {
                Ok(p)
            }
        };
        match self {
            PolyExpr::Const(c) => Ok(Polynomial::constant(c.clone())),
            PolyExpr::Var => check(Polynomial::x()),
            PolyExpr::Neg(e) => Ok(-e.expand(max_degree)?),
            PolyExpr::Add(a, b) => Ok(a.expand(max_degree)? + b.expand(max_degree)?),
            PolyExpr::Sub(a, b) => Ok(a.expand(max_degree)? - b.expand(max_degree)?),
            PolyExpr::Mul(a, b) => {
                let (a, b) = (a.expand(max_degree)?, b.expand(max_degree)?);
                let degree = (a.degree().max(0) + b.degree().max(0)) as u64;
                if degree > max_degree && !a.is_zero() && !b.is_zero() {
                    return Err(ParseError::DegreeTooLarge {
                        degree,
                        max: max_degree,
                    });
                }
                Ok(a * b)
            }
            PolyExpr::Pow(base, k) => {
                let base = base.expand(max_degree)?;
                let degree = base.degree().max(0) as u64 * u64::from(*k);
                if degree > max_degree {
                    return Err(ParseError::DegreeTooLarge {
                        degree,
                        max: max_degree,
                    });
                }
                Ok(base.pow(*k))
            }
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.at += 1;
                    lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.at += 1;
                    lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.at += 1;
            lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.at += 1;
                Ok(PolyExpr::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Token::Minus) => Err(ParseError::NegativeExponent { pos }),
            Some(Token::Number { fraction: true, .. }) => {
                Err(ParseError::NonIntegerExponent { pos })
            }
            Some(Token::Number { text, .. }) => {
                self.at += 1;
                match text.parse::<u32>() {
                    Ok(k) => Ok(PolyExpr::Pow(Box::new(base), k)),
                    Err(_) => Err(ParseError::Syntax {
                        pos,
                        msg: format!("exponent {text} is too large"),
                    }),
                }
            }
            _ => self.syntax("expected a nonnegative integer exponent"),
        }
    }

    fn primary(&mut self) -> Result<PolyExpr, ParseError> {
        match self.peek().cloned() {
            Some(Token::Number { text, .. }) => {
                let pos = self.pos();
                self.at += 1;
                parse_rational(&text)
                    .map(PolyExpr::Const)
                    .map_err(|e| ParseError::Syntax {
                        pos,
                        msg: e.to_string(),
                    })
            }
            Some(Token::X) => {
                self.at += 1;
                Ok(PolyExpr::Var)
            }
            Some(Token::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.syntax("expected ')'");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(t) => self.syntax(format!("unexpected {}", describe(&t))),
            None => self.syntax("unexpected end of input"),
        }
    }
}

fn describe(t: &Token) -> &'static str {
    match t {
        Token::Number { .. } => "number",
        Token::X => "'X'",
        Token::Plus => "'+'",
        Token::Minus => "'-'",
        Token::Star => "'*'",
        Token::Caret => "'^'",
        Token::LParen => "'('",
        Token::RParen => "')'",
    }
}

/// Parses `text` into a syntax tree.
pub fn parse_expr(text: &str) -> Result<PolyExpr, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        at: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if parser.at < parser.tokens.len() {
        let what = describe(&parser.tokens[parser.at].1);
        return parser.syntax(format!(
            "unexpected {what}; implicit multiplication needs '*'"
        ));
    }
    Ok(expr)
}

/// Parses and expands `text` with the default degree cap.
pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    parse_poly_capped(text, DEFAULT_MAX_DEGREE)
}

pub fn parse_poly_capped(text: &str, max_degree: u64) -> Result<Polynomial, ParseError> {
    parse_expr(text)?.expand(max_degree)
}
