use std::collections::HashSet;
use std::fmt::Write as _;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// `k[x₁,…,xₙ]` with named variables and a term order used for printing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F> {
    vars: Vec<String>,
    order: MonomialOrder,
    _field: PhantomData<fn() -> F>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl<F: Field> PolyRing<F> {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        Self::with_order(vars, MonomialOrder::default())
    }

    pub fn with_order<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        let mut seen = HashSet::new();
        for v in vars {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            order,
            _field: PhantomData,
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn characteristic(&self) -> u64 {
        F::characteristic()
    }

    /// The same variables over another coefficient field.
    pub fn change_field<G: Field>(&self) -> PolyRing<G> {
        PolyRing {
            vars: self.vars.clone(),
            order: self.order,
            _field: PhantomData,
        }
    }

    pub fn var(&self, name: &str) -> Option<Polynomial<F>> {
        let i = self.vars.iter().position(|v| v == name)?;
        Some(Polynomial::from_monomial(Monomial::var(self.nvars(), i)))
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial<F>> {
        Parser::new(self, src).polynomial()
    }

    /// Parses a single monomial such as `x^2*z` (no coefficient).
    pub fn parse_monomial(&self, src: &str) -> Result<Monomial> {
        let mut p = Parser::new(self, src);
        p.skip_ws();
        let m = p.monomial_factors(Monomial::one(self.nvars()))?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(m)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (name, &e) in self.vars.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(name);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }

    /// Canonical text form: terms in descending order, no spaces.
    pub fn format(&self, p: &Polynomial<F>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in p.sorted_terms(self.order).into_iter().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            if m.is_one() {
                let _ = write!(out, "{mag}");
            } else if mag.is_one() {
                out.push_str(&self.format_monomial(m));
            } else {
                let _ = write!(out, "{mag}*{}", self.format_monomial(m));
            }
        }
        out
    }
}

struct Parser<'a, F> {
    ring: &'a PolyRing<F>,
    src: &'a [u8],
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn new(ring: &'a PolyRing<F>, src: &'a str) -> Self {
        Parser {
            ring,
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn polynomial(&mut self) -> Result<Polynomial<F>> {
        let mut out = Polynomial::zero();
        let mut negate = false;
        match self.peek() {
            None => return Err(self.error("empty polynomial")),
            Some(b'-') => {
                negate = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, if negate { -c } else { c });
            match self.peek() {
                None => break,
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(_) => return Err(self.error("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, F)> {
        let one = Monomial::one(self.ring.nvars());
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.uint()?;
                let mut q = BigRational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    q /= BigRational::from_integer(den);
                }
                let c = F::from_rational(&q)
                    .ok_or_else(|| Error::Unrepresentable(q.to_string(), F::characteristic()))?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    Ok((self.monomial_factors(one)?, c))
                } else {
                    Ok((one, c))
                }
            }
            Some(_) => Ok((self.monomial_factors(one)?, F::one())),
            None => Err(self.error("expected a term")),
        }
    }

    /// `factor ('*' factor)*`
    fn monomial_factors(&mut self, mut acc: Monomial) -> Result<Monomial> {
        loop {
            acc = acc.mul(&self.factor()?);
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Monomial> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            if self.pos == start && self.src[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a variable"));
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let index = self
            .ring
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
                pos: start,
            })?;
        let mut exponent = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            exponent = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
        }
        let mut e = vec![0; self.ring.nvars()];
        e[index] = exponent;
        Ok(Monomial::new(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use num_traits::One;

    fn ring() -> PolyRing<Rational> {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_mixed_generator() {
        let r = ring();
        let p = r.parse("x^2*z + x*y^2").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 0, 1])), Rational::one());
        assert_eq!(p.coefficient(&Monomial::new(vec![1, 2, 0])), Rational::one());
        assert_eq!(r.format(&p), "x^2*z+x*y^2");
    }

    #[test]
    fn zero_forms() {
        let r = ring();
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse("3*x - 3*x").unwrap().is_zero());
        assert_eq!(r.format(&r.parse("0").unwrap()), "0");
    }

    #[test]
    fn signs_and_fractions() {
        let r = ring();
        let p = r.parse(" -x^2 + 3/2 * y*z - 1/3 + 2").unwrap();
        assert_eq!(r.format(&p), "-x^2+3/2*y*z+5/3");
        assert_eq!(r.parse(&r.format(&p)).unwrap(), p);
        let q = r.parse("-z/1").unwrap_err();
        assert!(matches!(q, Error::Syntax { .. }));
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        assert_eq!(
            r.parse("x + w").unwrap_err(),
            Error::UnknownVariable {
                name: "w".into(),
                pos: 4
            }
        );
        assert!(matches!(r.parse("x +").unwrap_err(), Error::Syntax { pos: 3, .. }));
        assert!(matches!(r.parse("x y").unwrap_err(), Error::Syntax { .. }));
        assert!(matches!(r.parse("").unwrap_err(), Error::Syntax { .. }));
        assert!(matches!(r.parse("1/0").unwrap_err(), Error::Syntax { .. }));
    }

    #[test]
    fn repeated_factors_multiply() {
        let r = ring();
        assert_eq!(r.parse("x*x*y").unwrap(), r.parse("x^2*y").unwrap());
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::<Rational>::new(&["x", "x"]).is_err());
        assert!(PolyRing::<Rational>::new::<&str>(&[]).is_err());
        assert!(PolyRing::<Rational>::new(&["1x"]).is_err());
        assert!(PolyRing::<Rational>::new(&["x1", "x_2"]).is_ok());
    }

    #[test]
    fn prime_field_coefficients() {
        let r: PolyRing<Fp<5>> = PolyRing::new(&["x"]).unwrap();
        assert_eq!(r.format(&r.parse("-x").unwrap()), "4*x");
        assert!(matches!(r.parse("1/5*x"), Err(Error::Unrepresentable(..))));
    }

    #[test]
    fn monomial_parsing() {
        let r = ring();
        assert_eq!(r.parse_monomial("x^2*z").unwrap(), Monomial::new(vec![2, 0, 1]));
        assert!(r.parse_monomial("2*x").is_err());
        assert_eq!(r.format_monomial(&Monomial::one(3)), "1");
    }
}
