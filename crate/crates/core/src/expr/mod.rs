//! Interval expressions over `f64`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := '-' factor | '(' expr ')' | literal
//! literal := '[' bound ',' bound ']' | number
//! bound   := ['-' | '+'] (number | 'inf')
//! ```
//!
//! Numbers are decimals (`0.1`, `2.5e-3`) or hexadecimal significands
//! (`0x1.8p+1`). `/` is relational division. A point literal denotes the
//! least interval containing its exact value, so `0.1` is one ULP wide;
//! interval literals round their lower bound down and upper bound up.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::kernel::{BinaryFormat, RoundingDirection};
use crate::ops::{self, DivResult};
use crate::oracle::ExtRational;

pub mod literal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprNode {
    /// Bound texts as written, sign included (`"-inf"`, `"0x1p-3"`).
    IntervalLit { lo: String, hi: String },
    PointLit(String),
    Neg(Box<ExprNode>),
    BinOp {
        op: BinOp,
        lhs: Box<ExprNode>,
        rhs: Box<ExprNode>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(String),
    Inf,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

fn describe(t: &Token) -> String {
    match t {
        Token::Number(s) => format!("number {s}"),
        Token::Inf => "'inf'".into(),
        Token::Plus => "'+'".into(),
        Token::Minus => "'-'".into(),
        Token::Star => "'*'".into(),
        Token::Slash => "'/'".into(),
        Token::LParen => "'('".into(),
        Token::RParen => "')'".into(),
        Token::LBracket => "'['".into(),
        Token::RBracket => "']'".into(),
        Token::Comma => "','".into(),
        Token::End => "end of input".into(),
    }
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Tokens paired with the character offset where each starts.
fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let single = match c {
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '/' => Some(Token::Slash),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '[' => Some(Token::LBracket),
            ']' => Some(Token::RBracket),
            ',' => Some(Token::Comma),
            _ => None,
        };
        if let Some(t) = single {
            tokens.push((start, t));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let hex = c == '0' && matches!(chars.get(i + 1), Some('x' | 'X'));
            if hex {
                i += 2;
            }
            while i < chars.len() {
                let d = chars[i];
                let exponent = if hex { matches!(d, 'p' | 'P') } else { matches!(d, 'e' | 'E') };
                if exponent {
                    i += 1;
                    if matches!(chars.get(i), Some('+' | '-')) {
                        i += 1;
                    }
                } else if d.is_ascii_alphanumeric() || d == '.' {
                    i += 1;
                } else {
                    break;
                }
            }
            let text: String = chars[start..i].iter().collect();
            if literal::parse_real(&text).is_none() {
                return Err(syntax(start, format!("malformed number {text:?}")));
            }
            tokens.push((start, Token::Number(text)));
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word.eq_ignore_ascii_case("inf") {
                tokens.push((start, Token::Inf));
            } else {
                return Err(syntax(start, format!("unexpected word {word:?}")));
            }
        } else {
            return Err(syntax(start, format!("unexpected character {c:?}")));
        }
    }
    tokens.push((chars.len(), Token::End));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    next: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.next].1
    }

    fn position(&self) -> usize {
        self.tokens[self.next].0
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.next].1.clone();
        if t != Token::End {
            self.next += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.position(),
                format!("expected {}, found {}", describe(&want), describe(self.peek())),
            ))
        }
    }

    fn expr(&mut self) -> Result<ExprNode> {
        let mut node = self.term()?;
        loop {
            let op = match self.peek() {
                Token::Plus => BinOp::Add,
                Token::Minus => BinOp::Sub,
                _ => return Ok(node),
            };
            self.bump();
            let rhs = self.term()?;
            node = ExprNode::BinOp { op, lhs: Box::new(node), rhs: Box::new(rhs) };
        }
    }

    fn term(&mut self) -> Result<ExprNode> {
        let mut node = self.factor()?;
        loop {
            let op = match self.peek() {
                Token::Star => BinOp::Mul,
                Token::Slash => BinOp::Div,
                _ => return Ok(node),
            };
            self.bump();
            let rhs = self.factor()?;
            node = ExprNode::BinOp { op, lhs: Box::new(node), rhs: Box::new(rhs) };
        }
    }

    fn factor(&mut self) -> Result<ExprNode> {
        let position = self.position();
        match self.bump() {
            Token::Minus => Ok(ExprNode::Neg(Box::new(self.factor()?))),
            Token::LParen => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::Number(text) => Ok(ExprNode::PointLit(text)),
            Token::LBracket => {
                let lo = self.bound()?;
                self.expect(Token::Comma)?;
                let hi = self.bound()?;
                self.expect(Token::RBracket)?;
                Ok(ExprNode::IntervalLit { lo, hi })
            }
            Token::Inf => Err(syntax(position, "'inf' is only allowed as an interval bound")),
            other => Err(syntax(position, format!("expected a literal or '(', found {}", describe(&other)))),
        }
    }

    fn bound(&mut self) -> Result<String> {
        let sign = match self.peek() {
            Token::Minus => "-",
            Token::Plus => "+",
            _ => "",
        };
        if !sign.is_empty() {
            self.bump();
        }
        let position = self.position();
        match self.bump() {
            Token::Number(text) => Ok(format!("{sign}{text}")),
            Token::Inf => Ok(format!("{sign}inf")),
            other => Err(syntax(position, format!("expected a bound, found {}", describe(&other)))),
        }
    }
}

pub fn parse(input: &str) -> Result<ExprNode> {
    let mut parser = Parser {
        tokens: tokenize(input)?,
        next: 0,
    };
    let node = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(syntax(
            parser.position(),
            format!("unexpected {} after expression", describe(parser.peek())),
        ));
    }
    Ok(node)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DivMode {
    /// Every division result is collapsed to one interval.
    #[default]
    Hull,
    /// A two-part quotient is kept when it is the final result.
    Split,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub value: DivResult<f64>,
    /// Diagnostics, such as split results hulled before further use.
    pub warnings: Vec<String>,
}

fn literal_value(text: &str) -> ExtRational {
    literal::parse_real(text).expect("validated by the tokenizer")
}

fn round_bound(text: &str, dir: RoundingDirection) -> f64 {
    match literal_value(text) {
        ExtRational::NegInf => f64::NEG_INFINITY,
        ExtRational::PosInf => f64::INFINITY,
        ExtRational::Finite(q) => f64::from_rational(&q, dir, ()),
    }
}

fn point_value(text: &str) -> BigRational {
    match literal_value(text) {
        ExtRational::Finite(q) => q,
        _ => unreachable!("point literals are finite"),
    }
}

struct Evaluator {
    mode: DivMode,
    warnings: Vec<String>,
}

impl Evaluator {
    fn operand(&mut self, r: DivResult<f64>, op: BinOp) -> Interval<f64> {
        if let DivResult::Split(..) = r {
            if self.mode == DivMode::Split {
                self.warnings.push(format!("split result {r} hulled before '{}'", op.symbol()));
            }
        }
        r.hull()
    }

    fn eval(&mut self, node: &ExprNode) -> DivResult<f64> {
        match node {
            ExprNode::IntervalLit { lo, hi } => Interval::new(
                round_bound(lo, RoundingDirection::Down),
                round_bound(hi, RoundingDirection::Up),
            )
            .expect("literals are never NaN")
            .into(),
            ExprNode::PointLit(text) => Interval::phi_point(&point_value(text)).into(),
            // negation is exact on both parts, so a split survives it
            ExprNode::Neg(child) => self.eval(child).negate(),
            ExprNode::BinOp { op, lhs, rhs } => {
                let l = self.eval(lhs);
                let r = self.eval(rhs);
                let (x, y) = (self.operand(l, *op), self.operand(r, *op));
                match op {
                    BinOp::Add => ops::add(x, y).into(),
                    BinOp::Sub => ops::sub(x, y).into(),
                    BinOp::Mul => ops::mul(x, y).into(),
                    BinOp::Div => match self.mode {
                        DivMode::Hull => ops::div_hull(x, y).into(),
                        DivMode::Split => ops::div(x, y),
                    },
                }
            }
        }
    }
}

pub fn eval(node: &ExprNode, mode: DivMode) -> Evaluation {
    let mut evaluator = Evaluator { mode, warnings: Vec::new() };
    let value = evaluator.eval(node);
    Evaluation {
        value,
        warnings: evaluator.warnings,
    }
}

/// Parse and evaluate.
pub fn evaluate(input: &str, mode: DivMode) -> Result<Evaluation> {
    Ok(eval(&parse(input)?, mode))
}
