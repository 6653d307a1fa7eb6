//! Parser, printer, and exact lowering for ad-hoc field expressions.
//!
//! The grammar is the plain calculator one. Precedence from loose to tight:
//! `+ -`, then `* /`, then unary minus, then `^`; binary operators associate
//! to the left; `^` takes a literal non-negative integer exponent and does not
//! chain (write `(x^2)^3`). Literals are integers; ratios like `2/3` come out
//! of the division operator, so lowering to a `RationalFn` is exact either
//! way. The atoms `x`, `y`, `s` are the coordinates and `i` is the imaginary
//! unit.

use std::fmt;

use mnv_algebra::{AlgebraError, GaussRational, RationalFn, SparsePoly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Inputs past this many bytes are rejected before lexing.
pub const MAX_INPUT_BYTES: usize = 64 * 1024;

/// Largest accepted exponent; keeps a typo from requesting a gigabyte of
/// monomials.
const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Integer(BigInt),
    ImaginaryUnit,
    Variable(Var),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
    Neg(Box<ExprAst>),
}

/// A parse failure: where it happened (0-based byte offset), what would have
/// been accepted there, and what was found instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected {}, found {}",
            self.position,
            self.expected.join(" | "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Integer(BigInt),
    Name(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                tokens.push((k, Token::Plus));
                k += 1;
            }
            '-' => {
                tokens.push((k, Token::Minus));
                k += 1;
            }
            '*' => {
                tokens.push((k, Token::Star));
                k += 1;
            }
            '/' => {
                tokens.push((k, Token::Slash));
                k += 1;
            }
            '^' => {
                tokens.push((k, Token::Caret));
                k += 1;
            }
            '(' => {
                tokens.push((k, Token::LParen));
                k += 1;
            }
            ')' => {
                tokens.push((k, Token::RParen));
                k += 1;
            }
            '0'..='9' => {
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                let n: BigInt = text[start..k].parse().expect("digit run parses");
                tokens.push((start, Token::Integer(n)));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = k;
                while k < bytes.len() && (bytes[k] as char).is_ascii_alphabetic() {
                    k += 1;
                }
                let name = &text[start..k];
                if name.len() != 1 || !matches!(name, "x" | "y" | "s" | "i") {
                    return Err(ParseError {
                        position: start,
                        expected: vec!["x", "y", "s", "i"],
                        found: format!("`{name}`"),
                    });
                }
                tokens.push((start, Token::Name(name.chars().next().unwrap())));
            }
            other => {
                return Err(ParseError {
                    position: k,
                    expected: vec!["a token"],
                    found: format!("`{other}`"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

const OPERAND_EXPECTED: [&str; 6] = ["an integer", "x", "y", "s", "i", "("];

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(Token::Integer(n)) => format!("`{n}`"),
            Some(Token::Name(c)) => format!("`{c}`"),
            Some(Token::Plus) => "`+`".to_string(),
            Some(Token::Minus) => "`-`".to_string(),
            Some(Token::Star) => "`*`".to_string(),
            Some(Token::Slash) => "`/`".to_string(),
            Some(Token::Caret) => "`^`".to_string(),
            Some(Token::LParen) => "`(`".to_string(),
            Some(Token::RParen) => "`)`".to_string(),
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            position: self.position(),
            expected: expected.to_vec(),
            found: self.found(),
        }
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.cursor += 1;
            true
        } else {
            false
        }
    }

    fn parse_sum(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.parse_term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = ExprAst::Add(Box::new(acc), Box::new(self.parse_term()?));
            } else if self.eat(&Token::Minus) {
                acc = ExprAst::Sub(Box::new(acc), Box::new(self.parse_term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.parse_unary()?;
        loop {
            if self.eat(&Token::Star) {
                acc = ExprAst::Mul(Box::new(acc), Box::new(self.parse_unary()?));
            } else if self.eat(&Token::Slash) {
                acc = ExprAst::Div(Box::new(acc), Box::new(self.parse_unary()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_unary(&mut self) -> Result<ExprAst, ParseError> {
        if self.eat(&Token::Minus) {
            return Ok(ExprAst::Neg(Box::new(self.parse_unary()?)));
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.parse_atom()?;
        if !self.eat(&Token::Caret) {
            return Ok(base);
        }
        let exponent = match self.peek() {
            Some(Token::Integer(n)) => {
                let e = u32::try_from(n.clone()).ok().filter(|e| *e <= MAX_EXPONENT);
                match e {
                    Some(e) => {
                        self.cursor += 1;
                        e
                    }
                    None => return Err(self.error(&["an exponent of at most 1000"])),
                }
            }
            _ => return Err(self.error(&["a non-negative integer exponent"])),
        };
        // no chaining: `x^2^3` must be written `(x^2)^3`
        if self.peek() == Some(&Token::Caret) {
            return Err(self.error(&["an operator", ")", "end of input"]));
        }
        Ok(ExprAst::Pow(Box::new(base), exponent))
    }

    fn parse_atom(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek().cloned() {
            Some(Token::Integer(n)) => {
                self.cursor += 1;
                Ok(ExprAst::Integer(n))
            }
            Some(Token::Name(c)) => {
                self.cursor += 1;
                Ok(match c {
                    'x' => ExprAst::Variable(Var::X),
                    'y' => ExprAst::Variable(Var::Y),
                    's' => ExprAst::Variable(Var::S),
                    _ => ExprAst::ImaginaryUnit,
                })
            }
            Some(Token::LParen) => {
                self.cursor += 1;
                let inner = self.parse_sum()?;
                if !self.eat(&Token::RParen) {
                    return Err(self.error(&[")"]));
                }
                Ok(inner)
            }
            _ => Err(self.error(&OPERAND_EXPECTED)),
        }
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    if text.len() > MAX_INPUT_BYTES {
        return Err(ParseError {
            position: MAX_INPUT_BYTES,
            expected: vec!["an expression of at most 64 KiB"],
            found: format!("{} bytes", text.len()),
        });
    }
    let mut parser = Parser {
        tokens: lex(text)?,
        cursor: 0,
        end: text.len(),
    };
    let ast = parser.parse_sum()?;
    if parser.peek().is_some() {
        return Err(parser.error(&["an operator", "end of input"]));
    }
    Ok(ast)
}

fn precedence(e: &ExprAst) -> u8 {
    match e {
        ExprAst::Add(..) | ExprAst::Sub(..) => 1,
        ExprAst::Mul(..) | ExprAst::Div(..) => 2,
        ExprAst::Neg(..) => 3,
        ExprAst::Pow(..) => 4,
        _ => 5,
    }
}

fn write_prec(e: &ExprAst, min: u8, out: &mut String) {
    let own = precedence(e);
    if own < min {
        out.push('(');
        write_prec(e, 0, out);
        out.push(')');
        return;
    }
    match e {
        ExprAst::Integer(n) => out.push_str(&n.to_string()),
        ExprAst::ImaginaryUnit => out.push('i'),
        ExprAst::Variable(Var::X) => out.push('x'),
        ExprAst::Variable(Var::Y) => out.push('y'),
        ExprAst::Variable(Var::S) => out.push('s'),
        ExprAst::Add(a, b) => {
            write_prec(a, 1, out);
            out.push_str(" + ");
            write_prec(b, 2, out);
        }
        ExprAst::Sub(a, b) => {
            write_prec(a, 1, out);
            out.push_str(" - ");
            write_prec(b, 2, out);
        }
        ExprAst::Mul(a, b) => {
            write_prec(a, 2, out);
            out.push('*');
            write_prec(b, 3, out);
        }
        ExprAst::Div(a, b) => {
            write_prec(a, 2, out);
            out.push('/');
            write_prec(b, 3, out);
        }
        ExprAst::Neg(a) => {
            out.push('-');
            write_prec(a, 3, out);
        }
        ExprAst::Pow(base, e) => {
            write_prec(base, 5, out);
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Renders the tree with the fewest parentheses that survive a round trip:
/// `parse(print(t))` rebuilds `t` for every parser-produced tree.
pub fn print_expr(e: &ExprAst) -> String {
    let mut out = String::new();
    write_prec(e, 0, &mut out);
    out
}

/// Lowers the tree to an exact rational function. The only failure is
/// division by a function that is identically zero.
pub fn lower_expr(e: &ExprAst) -> Result<RationalFn, AlgebraError> {
    match e {
        ExprAst::Integer(n) => {
            let c = GaussRational::new(BigRational::from(n.clone()), BigRational::zero());
            Ok(RationalFn::from_poly(SparsePoly::constant(c)))
        }
        ExprAst::ImaginaryUnit => Ok(RationalFn::from_poly(SparsePoly::i())),
        ExprAst::Variable(v) => Ok(RationalFn::var(*v)),
        ExprAst::Add(a, b) => Ok(&lower_expr(a)? + &lower_expr(b)?),
        ExprAst::Sub(a, b) => Ok(&lower_expr(a)? - &lower_expr(b)?),
        ExprAst::Mul(a, b) => Ok(&lower_expr(a)? * &lower_expr(b)?),
        ExprAst::Div(a, b) => lower_expr(a)?.checked_div(&lower_expr(b)?),
        ExprAst::Pow(base, k) => {
            let f = lower_expr(base)?;
            RationalFn::new(f.num().pow(*k), f.den().pow(*k))
        }
        ExprAst::Neg(a) => Ok(-&lower_expr(a)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn the_dangling_operator_reports_eof_position() {
        let err = parse_expr("x +").unwrap_err();
        assert_eq!(err.position, 3);
        assert_eq!(err.found, "end of input");
        assert!(err.expected.contains(&"an integer"));
    }

    #[test]
    fn a_quotient_of_quadratics_evaluates_exactly() {
        let ast = parse_expr("(x^2 - y^2)/(x^2 + y^2 + 1)").unwrap();
        let f = lower_expr(&ast).unwrap();
        let got = f.eval(&rat(1, 1), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(got, GaussRational::from_ratio(1, 2));
    }

    #[test]
    fn unary_minus_binds_looser_than_the_power() {
        let ast = parse_expr("-x^2").unwrap();
        assert_eq!(
            ast,
            ExprAst::Neg(Box::new(ExprAst::Pow(
                Box::new(ExprAst::Variable(Var::X)),
                2
            )))
        );
        let f = lower_expr(&ast).unwrap();
        let got = f.eval(&rat(3, 1), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(got, GaussRational::from_int(-9));
    }

    #[test]
    fn subtraction_and_division_stay_left_associative() {
        let f = lower_expr(&parse_expr("8 - 3 - 2").unwrap()).unwrap();
        let got = f.eval(&rat(0, 1), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(got, GaussRational::from_int(3));
        let g = lower_expr(&parse_expr("12/3/2").unwrap()).unwrap();
        let got = g.eval(&rat(0, 1), &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(got, GaussRational::from_int(2));
    }

    #[test]
    fn chained_exponents_are_rejected() {
        let err = parse_expr("x^2^3").unwrap_err();
        assert_eq!(err.position, 3);
    }

    #[test]
    fn unknown_names_are_rejected_with_their_position() {
        let err = parse_expr("x + foo").unwrap_err();
        assert_eq!(err.position, 4);
        assert_eq!(err.expected, vec!["x", "y", "s", "i"]);
    }

    #[test]
    fn oversized_inputs_are_rejected_before_lexing() {
        let text = "1+".repeat(40_000);
        let err = parse_expr(&text).unwrap_err();
        assert_eq!(err.position, MAX_INPUT_BYTES);
    }

    #[test]
    fn division_by_the_zero_function_fails_to_lower() {
        let ast = parse_expr("1/(x - x)").unwrap();
        assert!(lower_expr(&ast).is_err());
    }

    #[test]
    fn printing_reparses_to_the_same_tree() {
        for text in [
            "x + y*s",
            "(x + y)*s",
            "-x^2 - -y",
            "i*(x^2 - y^2)",
            "1/2/3",
            "(x^2)^3",
            "x - (y - s)",
            "2*(3 + 4/5)^2",
        ] {
            let once = parse_expr(text).unwrap();
            let printed = print_expr(&once);
            let twice = parse_expr(&printed).unwrap();
            assert_eq!(once, twice, "round trip changed `{text}` -> `{printed}`");
        }
    }
}
