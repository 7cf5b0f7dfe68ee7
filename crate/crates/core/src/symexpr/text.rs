//! Plain-text form of canonical polynomials.
//!
//! One monomial per line in canonical order, coefficient first:
//!
//! ```text
//! (-2) A1 e phi phi*
//! (0+1i) phi*_{,0} phi
//! ```
//!
//! The zero polynomial is written as `0`. Blank lines and lines starting
//! with `#` are ignored when parsing.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::atom::{Atom, Symbol};
use super::poly::{ratio_coeff, Coeff, Monomial, Polynomial};
use crate::error::{Error, Result};

fn fmt_ratio(r: &Ratio<i64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    match (c.re.is_zero(), c.im.is_zero()) {
        (_, true) => format!("({})", fmt_ratio(&c.re)),
        (true, false) => format!("({}i)", fmt_ratio(&c.im)),
        (false, false) => {
            let sign = if c.im < Ratio::zero() { "-" } else { "+" };
            format!("({}{}{}i)", fmt_ratio(&c.re), sign, fmt_ratio(&c.im.abs()))
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0\n");
        }
        for (m, c) in self.terms() {
            f.write_str(&fmt_coeff(c))?;
            if let Some(mu) = m.gamma() {
                write!(f, " gamma^{mu}")?;
            }
            for (a, p) in m.factors() {
                if *p == 1 {
                    write!(f, " {a}")?;
                } else {
                    write!(f, " {a}^{p}")?;
                }
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.parse().map_err(|_| bad())?;
            let d: i64 = d.parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_coeff(s: &str) -> Result<Coeff> {
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("coefficient must be parenthesized: `{s}`")))?;
    let Some(body) = inner.strip_suffix('i') else {
        return Ok(ratio_coeff(parse_ratio(inner)?, Ratio::zero()));
    };
    // split at the sign separating real and imaginary parts, if any
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, ch)| ch == '+' || ch == '-')
        .map(|(idx, _)| idx)
        .last();
    match split {
        Some(idx) => {
            let re = parse_ratio(&body[..idx])?;
            let im = parse_ratio(body[idx..].trim_start_matches('+'))?;
            Ok(ratio_coeff(re, im))
        }
        None if body.is_empty() || body == "+" => Ok(ratio_coeff(Ratio::zero(), Ratio::one())),
        None if body == "-" => Ok(ratio_coeff(Ratio::zero(), -Ratio::one())),
        None => Ok(ratio_coeff(Ratio::zero(), parse_ratio(body)?)),
    }
}

fn parse_atom(s: &str) -> Result<Atom> {
    let (name, deriv) = match s.split_once("_{") {
        Some((name, rest)) => {
            let idx = rest
                .strip_suffix('}')
                .ok_or_else(|| Error::Parse(format!("unterminated derivative in `{s}`")))?;
            (name, Some(idx))
        }
        None => (s, None),
    };
    let mut atom = Atom::new(Symbol::from_name(name)?);
    if let Some(idx) = deriv {
        for part in idx.split(',').filter(|p| !p.is_empty()) {
            let mu: u8 = part
                .parse()
                .ok()
                .filter(|&mu| mu < 4)
                .ok_or_else(|| Error::Parse(format!("bad derivative index in `{s}`")))?;
            atom = atom.d(mu);
        }
    }
    Ok(atom)
}

fn parse_factor(token: &str) -> Result<Polynomial> {
    if let Some(mu) = token.strip_prefix("gamma^") {
        let mu: u8 = mu
            .parse()
            .ok()
            .filter(|&mu| mu < 4)
            .ok_or_else(|| Error::Parse(format!("bad gamma index `{token}`")))?;
        return Ok(Polynomial::gamma(mu));
    }
    // A power suffix follows the closing brace of a derivative, or the bare name.
    let search_from = token.rfind('}').map_or(0, |i| i + 1);
    let (base, power) = match token[search_from..].find('^') {
        Some(rel) => {
            let at = search_from + rel;
            let p: u32 = token[at + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad power in `{token}`")))?;
            (&token[..at], p)
        }
        None => (token, 1),
    };
    let atom = Polynomial::atom(parse_atom(base)?);
    let mut out = Polynomial::constant(Coeff::one());
    for _ in 0..power {
        out = out.try_mul(&atom)?;
    }
    Ok(out)
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        for line in s.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') || line == "0" {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let c = parse_coeff(tokens.next().expect("non-empty line"))?;
            let mut term = Polynomial::from_monomial(Monomial::one(), c);
            for token in tokens {
                term = term.try_mul(&parse_factor(token)?)?;
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}
