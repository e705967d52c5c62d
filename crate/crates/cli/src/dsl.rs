//! Net expression language.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | 'e' '^' '(' rational ')' | 'i' '^' '(' rational ')'
//!         | 'x' ['^' nat] | func '(' expr ')' | '(' expr ')'
//! rational := int ['/' nat]
//! ```
//!
//! `e` is ε, `i` the mollifier diameter ι, `x` the spatial variable.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use sharp_core::rational::fmt_rat;
use sharp_core::sampled::Func;
use sharp_core::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Eps(Rational),
    Iota(Rational),
    /// `x` or `x^k`; the exponent is kept as written.
    X(Option<u32>),
    Apply(Func, Box<Expr>),
    Group(Box<Expr>),
    /// First term, then signed terms (`true` for `-`).
    Sum(Box<Expr>, Vec<(bool, Expr)>),
    Product(Vec<Expr>),
}

impl Expr {
    pub fn has_func(&self) -> bool {
        self.any(&|e| matches!(e, Expr::Apply(..)))
    }

    pub fn has_x(&self) -> bool {
        self.any(&|e| matches!(e, Expr::X(_)))
    }

    pub fn has_iota(&self) -> bool {
        self.any(&|e| matches!(e, Expr::Iota(_)))
    }

    fn any(&self, p: &dyn Fn(&Expr) -> bool) -> bool {
        if p(self) {
            return true;
        }
        match self {
            Expr::Apply(_, e) | Expr::Group(e) => e.any(p),
            Expr::Sum(first, rest) => first.any(p) || rest.iter().any(|(_, e)| e.any(p)),
            Expr::Product(v) => v.iter().any(|e| e.any(p)),
            _ => false,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => f.write_str(&fmt_rat(q)),
            Expr::Eps(q) => write!(f, "e^({})", fmt_rat(q)),
            Expr::Iota(q) => write!(f, "i^({})", fmt_rat(q)),
            Expr::X(None) => f.write_str("x"),
            Expr::X(Some(k)) => write!(f, "x^{k}"),
            Expr::Apply(func, e) => write!(f, "{}({e})", func.name()),
            Expr::Group(e) => write!(f, "({e})"),
            Expr::Sum(first, rest) => {
                write!(f, "{first}")?;
                for (neg, e) in rest {
                    write!(f, " {} {e}", if *neg { '-' } else { '+' })?;
                }
                Ok(())
            }
            Expr::Product(v) => {
                for (k, e) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Lexed>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                column += 1;
            }
            Tok::Ident(s)
        } else if "+-*/^()".contains(c) {
            chars.next();
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError {
                line,
                column,
                message: format!("unexpected character '{c}'"),
            });
        };
        out.push(Lexed { tok, line: l0, column: c0 });
    }
    out.push(Lexed { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let t = &self.toks[self.pos];
        Err(ParseError {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected '{c}', found {}", self.peek()))
        }
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            t => self.err(format!("expected a natural number, found {t}")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let neg = *self.peek() == Tok::Sym('-');
        if neg {
            self.bump();
        }
        let n = self.nat()?;
        let n = if neg { -n } else { n };
        if *self.peek() != Tok::Sym('/') {
            return Ok(Rational::from_integer(n));
        }
        self.bump();
        let d = self.nat()?;
        if d.is_zero() {
            self.pos -= 1;
            return self.err("zero denominator");
        }
        Ok(Rational::new(n, d))
    }

    fn power(&mut self) -> Result<Rational, ParseError> {
        self.expect('^')?;
        self.expect('(')?;
        let q = self.rational()?;
        self.expect(')')?;
        Ok(q)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let first = self.term()?;
        let mut rest = Vec::new();
        while let Tok::Sym(c @ ('+' | '-')) = *self.peek() {
            self.bump();
            rest.push((c == '-', self.term()?));
        }
        Ok(if rest.is_empty() {
            first
        } else {
            Expr::Sum(Box::new(first), rest)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut v = vec![self.factor()?];
        while *self.peek() == Tok::Sym('*') {
            self.bump();
            v.push(self.factor()?);
        }
        Ok(if v.len() == 1 { v.pop().expect("one factor") } else { Expr::Product(v) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(_) | Tok::Sym('-') => Ok(Expr::Num(self.rational()?)),
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Group(Box::new(e)))
            }
            Tok::Ident(name) => {
                let func = match name.as_str() {
                    "e" | "i" => {
                        self.bump();
                        let q = self.power()?;
                        return Ok(if name == "e" { Expr::Eps(q) } else { Expr::Iota(q) });
                    }
                    "x" => {
                        self.bump();
                        if *self.peek() != Tok::Sym('^') {
                            return Ok(Expr::X(None));
                        }
                        self.bump();
                        let k = self.nat()?;
                        return match u32::try_from(k) {
                            Ok(k) => Ok(Expr::X(Some(k))),
                            Err(_) => {
                                self.pos -= 1;
                                self.err("exponent too large")
                            }
                        };
                    }
                    "sin" => Func::Sin,
                    "cos" => Func::Cos,
                    "exp" => Func::Exp,
                    "log" => Func::Log,
                    _ => return self.err(format!("unknown identifier '{name}'")),
                };
                self.bump();
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Apply(func, Box::new(e)))
            }
            t => self.err(format!("expected a factor, found {t}")),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err(format!("unexpected {}", p.peek()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sharp_core::rational::{int, rat};

    #[test]
    fn grammar() {
        let e = parse("3*e^(1/2) - 2*e^(3)").unwrap();
        assert_eq!(
            e,
            Expr::Sum(
                Box::new(Expr::Product(vec![Expr::Num(int(3)), Expr::Eps(rat(1, 2))])),
                vec![(true, Expr::Product(vec![Expr::Num(int(2)), Expr::Eps(int(3))]))]
            )
        );
        assert_eq!(parse("x^2*e^(1)").unwrap(), Expr::Product(vec![Expr::X(Some(2)), Expr::Eps(int(1))]));
        assert_eq!(parse("-3/4").unwrap(), Expr::Num(rat(-3, 4)));
        assert!(parse("i^(1)*sin(i^(-1))").unwrap().has_func());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("3*e^(1/2) +\n  foo").unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.message.contains("unknown identifier"));
        let err = parse("e^(1/0)").unwrap_err();
        assert_eq!((err.line, err.column, err.message.as_str()), (1, 6, "zero denominator"));
        assert_eq!(parse("e(1)").unwrap_err().column, 2);
        assert_eq!(parse("1 2").unwrap_err().column, 3);
        assert_eq!(parse("3 $").unwrap_err().column, 3);
    }

    #[test]
    fn printing_round_trips() {
        for s in ["3*e^(1/2) - 2*e^(3)", "(x + 1)*x^3*e^(-1/3)*i^(2)", "cos(exp(e^(1)) - -2/3)", "x^0 + x"] {
            let e = parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
