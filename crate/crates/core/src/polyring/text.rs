//! Text form of polynomials, e.g. `T[1,4]*T[2,5] - T[1,5]*T[2,4]` or
//! `3/2*x[1]^2 - y[2] + 1`. The parser accepts exactly what the printer emits
//! plus free whitespace and repeated factors.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, Rational, TermOrder, Variable, VariableSet};
use crate::error::{Error, Result};

pub fn format_polynomial(p: &Polynomial, vars: &VariableSet) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            write!(out, "{a}").unwrap();
        } else {
            if !a.is_one() {
                write!(out, "{a}*").unwrap();
            }
            write!(out, "{}", vars.display_monomial(m)).unwrap();
        }
    }
    out
}

pub fn parse_polynomial(s: &str, vars: &VariableSet, order: TermOrder) -> Result<Polynomial> {
    let mut p = Parser {
        chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        vars,
    };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut sign = Rational::one();
    if p.eat('-') {
        sign = -sign;
    }
    loop {
        let (c, m) = p.term()?;
        terms.push((sign * c, m));
        if p.eat('+') {
            sign = Rational::one();
        } else if p.eat('-') {
            sign = -Rational::one();
        } else {
            break;
        }
    }
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(Polynomial::from_terms(terms, order))
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a VariableSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn index(&mut self) -> Result<usize> {
        self.digits()?
            .parse()
            .map_err(|_| self.error("index out of range"))
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut c = Rational::one();
        let mut m = Monomial::one();
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => {
                    let num: BigInt = self.digits()?.parse().expect("digits");
                    let den: BigInt = if self.eat('/') {
                        self.digits()?.parse().expect("digits")
                    } else {
                        BigInt::one()
                    };
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    c *= Rational::new(num, den);
                }
                Some('T' | 'x' | 'y') => {
                    let id = self.variable()?;
                    let e = if self.eat('^') {
                        self.digits()?
                            .parse::<u32>()
                            .map_err(|_| self.error("exponent out of range"))?
                    } else {
                        1
                    };
                    m = m.mul(&Monomial::var_pow(id, e));
                }
                _ => return Err(self.error("expected a coefficient or variable")),
            }
            if !self.eat('*') {
                return Ok((c, m));
            }
        }
    }

    fn variable(&mut self) -> Result<u32> {
        let kind = self.peek().expect("checked by caller");
        self.pos += 1;
        self.expect('[')?;
        let a = self.index()?;
        let v = if kind == 'T' {
            self.expect(',')?;
            let b = self.index()?;
            Variable::T(a.min(b), a.max(b))
        } else if kind == 'x' {
            Variable::X(a)
        } else {
            Variable::Y(a)
        };
        self.expect(']')?;
        self.vars
            .id(v)
            .ok_or_else(|| self.error(&format!("unknown variable {v}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> VariableSet {
        VariableSet::cells([(1, 4), (1, 5), (2, 4), (2, 5)])
    }

    #[test]
    fn prints_minors() {
        let v = ring();
        let f =
            parse_polynomial("T[1,4]*T[2,5] - T[1,5]*T[2,4]", &v, TermOrder::LexRowwise).unwrap();
        assert_eq!(format_polynomial(&f, &v), "T[1,4]*T[2,5] - T[1,5]*T[2,4]");
        let g =
            parse_polynomial("-3/2 * T[2,5]^2 + 4 - T[4,1]", &v, TermOrder::LexRowwise).unwrap();
        assert_eq!(format_polynomial(&g, &v), "-T[1,4] - 3/2*T[2,5]^2 + 4");
        assert_eq!(
            format_polynomial(&Polynomial::zero(TermOrder::LexRowwise), &v),
            "0"
        );
    }

    #[test]
    fn rejects_garbage() {
        let v = ring();
        for s in [
            "", "T[1,4]+", "T[3,3]", "q", "T[1,4]*", "1/0", "x[1]", "T[1,4]]",
        ] {
            assert!(
                matches!(
                    parse_polynomial(s, &v, TermOrder::LexRowwise),
                    Err(Error::Parse(_))
                ),
                "{s}"
            );
        }
        let xy = VariableSet::xy(2, 2);
        let p = parse_polynomial("x[1]*y[2] + x[2]*y[1]", &xy, TermOrder::LexRowwise).unwrap();
        assert_eq!(format_polynomial(&p, &xy), "x[1]*y[2] + x[2]*y[1]");
    }

    type RawTerm = (i64, i64, Vec<(u32, u32)>);

    fn arb_poly() -> impl Strategy<Value = Vec<RawTerm>> {
        prop::collection::vec(
            (
                -20i64..20,
                1i64..6,
                prop::collection::vec((0u32..4, 0u32..4), 0..4),
            ),
            0..6,
        )
    }

    proptest! {
        #[test]
        fn round_trip(raw in arb_poly(), revlex in any::<bool>()) {
            let order = if revlex { TermOrder::RevLexRowwise } else { TermOrder::LexRowwise };
            let v = ring();
            let terms = raw
                .into_iter()
                .map(|(n, d, e)| (Rational::new(n.into(), d.into()), Monomial::from_pairs(e)))
                .collect();
            let p = Polynomial::from_terms(terms, order);
            let s = format_polynomial(&p, &v);
            prop_assert_eq!(parse_polynomial(&s, &v, order).unwrap(), p);
        }
    }
}
