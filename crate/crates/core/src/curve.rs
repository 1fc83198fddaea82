//! Plane curve germs at the origin of the (x, y) plane.
//!
//! A curve is a finite exponent support with exact rational coefficients.
//! The support never contains (0, 0): a germ with a constant term does not
//! pass through the origin and is rejected. This module provides the
//! expression grammar `c*x^p*y^q` joined by `+` and `-`, the weighted order
//! min over the support of p*w1 + q*w2, degree truncation, and polynomial
//! coprimality of two germs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{self, UniPoly};
use crate::rat::Rat;

/// Curve germ: exponent pairs (p, q) mapped to nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl PlaneCurve {
    /// Builds a curve from terms, combining repeated exponents and dropping
    /// zero coefficients.
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), Rat)>) -> Result<Self> {
        let mut map: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(Rat::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        if map.is_empty() {
            return Err(Error::EmptyCurve);
        }
        if map.contains_key(&(0, 0)) {
            return Err(Error::ConstantTerm);
        }
        Ok(PlaneCurve { terms: map })
    }

    /// The single monomial `x^p*y^q`.
    pub fn monomial(p: u32, q: u32) -> Result<Self> {
        PlaneCurve::new([((p, q), Rat::one())])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &(u32, u32)> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The exponent pair when the curve is a single monomial.
    pub fn the_monomial(&self) -> Option<(u32, u32)> {
        if self.is_monomial() {
            self.terms.keys().next().copied()
        } else {
            None
        }
    }

    /// min over the support of p*w1 + q*w2 for positive weights.
    pub fn weighted_order(&self, w1: &Rat, w2: &Rat) -> Rat {
        self.terms
            .keys()
            .map(|&(p, q)| w1 * Rat::from_integer(p.into()) + w2 * Rat::from_integer(q.into()))
            .min()
            .expect("curve support is nonempty")
    }

    /// min over the support of p*m1 + q*m2 for integer weights.
    pub fn integer_weighted_order(&self, m1: u64, m2: u64) -> u128 {
        self.terms
            .keys()
            .map(|&(p, q)| p as u128 * m1 as u128 + q as u128 * m2 as u128)
            .min()
            .expect("curve support is nonempty")
    }

    /// Order at the origin: min over the support of p + q.
    pub fn order_at_origin(&self) -> u32 {
        self.terms
            .keys()
            .map(|&(p, q)| p + q)
            .min()
            .expect("curve support is nonempty")
    }

    /// Smallest x-exponent in the support (multiplicity along x = 0 ... div(x)).
    pub fn min_x_exponent(&self) -> u32 {
        self.terms.keys().map(|&(p, _)| p).min().unwrap()
    }

    /// Smallest y-exponent in the support.
    pub fn min_y_exponent(&self) -> u32 {
        self.terms.keys().map(|&(_, q)| q).min().unwrap()
    }

    /// Keeps only the terms with p + q < k.
    pub fn truncate(&self, k: u32) -> Result<PlaneCurve> {
        let kept: BTreeMap<(u32, u32), Rat> = self
            .terms
            .iter()
            .filter(|(&(p, q), _)| p + q < k)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        if kept.is_empty() {
            return Err(Error::EmptyTruncation);
        }
        Ok(PlaneCurve { terms: kept })
    }

    /// Parses the expression grammar: terms `c*x^p*y^q` joined by `+`/`-`,
    /// with rational coefficients `a` or `a/b`, optional `*` separators, and
    /// optional `^1` exponents.
    pub fn parse(input: &str) -> Result<Self> {
        let toks = lex(input)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut terms: Vec<((u32, u32), Rat)> = Vec::new();
        let mut i = 0usize;
        loop {
            let mut sign = Rat::one();
            let mut saw_sign = false;
            while let Some(t) = toks.get(i) {
                match t {
                    Tok::Plus => {
                        i += 1;
                        saw_sign = true;
                    }
                    Tok::Minus => {
                        sign = -sign;
                        i += 1;
                        saw_sign = true;
                    }
                    _ => break,
                }
            }
            if i >= toks.len() {
                if saw_sign || terms.is_empty() {
                    return Err(Error::Parse("expression ends with a dangling sign".into()));
                }
                break;
            }
            let (term, next) = parse_term(&toks, i)?;
            terms.push((term.0, term.1 * sign));
            i = next;
            if i >= toks.len() {
                break;
            }
            match toks[i] {
                Tok::Plus | Tok::Minus => {}
                _ => {
                    return Err(Error::Parse(format!(
                        "expected + or - between terms in {input:?}"
                    )))
                }
            }
        }
        PlaneCurve::new(terms)
    }

    /// The curve as a polynomial in x with coefficients in y; entry i is the
    /// coefficient of x^i.
    pub(crate) fn as_x_poly(&self) -> Vec<UniPoly> {
        let max_p = self.terms.keys().map(|&(p, _)| p as usize).max().unwrap();
        let mut cols: Vec<Vec<Rat>> = vec![Vec::new(); max_p + 1];
        for (&(p, q), c) in &self.terms {
            let col = &mut cols[p as usize];
            if col.len() <= q as usize {
                col.resize(q as usize + 1, Rat::zero());
            }
            col[q as usize] = c.clone();
        }
        cols.into_iter().map(UniPoly::from_coeffs).collect()
    }
}

/// Whether two germs share no common polynomial factor of positive degree.
pub fn curves_coprime(f: &PlaneCurve, g: &PlaneCurve) -> bool {
    poly::xp_coprime(&f.as_x_poly(), &g.as_x_poly())
}

impl std::ops::Mul for &PlaneCurve {
    type Output = PlaneCurve;

    fn mul(self, rhs: &PlaneCurve) -> PlaneCurve {
        let mut terms: Vec<((u32, u32), Rat)> = Vec::new();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &rhs.terms {
                terms.push(((p1 + p2, q1 + q2), c1 * c2));
            }
        }
        PlaneCurve::new(terms).expect("product of germs through the origin")
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (&(p, q), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || (p == 0 && q == 0) {
                if a.denom().is_one() {
                    parts.push(format!("{}", a.numer()));
                } else {
                    parts.push(format!("{}/{}", a.numer(), a.denom()));
                }
            }
            if p == 1 {
                parts.push("x".into());
            } else if p > 1 {
                parts.push(format!("x^{p}"));
            }
            if q == 1 {
                parts.push("y".into());
            } else if q > 1 {
                parts.push(format!("y^{q}"));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    X,
    Y,
    Int(BigInt),
}

fn lex(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            'x' => {
                out.push(Tok::X);
                i += 1;
            }
            'y' => {
                out.push(Tok::Y);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = input[start..i]
                    .parse()
                    .map_err(|_| Error::Parse("bad integer".into()))?;
                out.push(Tok::Int(n));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} in curve expression"
                )))
            }
        }
    }
    Ok(out)
}

fn parse_exponent(toks: &[Tok], mut i: usize) -> Result<(u32, usize)> {
    if toks.get(i) != Some(&Tok::Caret) {
        return Ok((1, i));
    }
    i += 1;
    match toks.get(i) {
        Some(Tok::Int(n)) => {
            let e = u32::try_from(n)
                .map_err(|_| Error::Parse(format!("exponent {n} out of range")))?;
            Ok((e, i + 1))
        }
        _ => Err(Error::Parse("expected a nonnegative exponent after ^".into())),
    }
}

fn parse_term(toks: &[Tok], mut i: usize) -> Result<(((u32, u32), Rat), usize)> {
    let mut coeff = Rat::one();
    let mut p = 0u32;
    let mut q = 0u32;
    let mut saw_factor = false;
    loop {
        match toks.get(i) {
            Some(Tok::Int(n)) => {
                coeff *= Rat::from_integer(n.clone());
                i += 1;
                if toks.get(i) == Some(&Tok::Slash) {
                    i += 1;
                    match toks.get(i) {
                        Some(Tok::Int(d)) => {
                            if d.is_zero() {
                                return Err(Error::Parse("zero denominator".into()));
                            }
                            coeff /= Rat::from_integer(d.clone());
                            i += 1;
                        }
                        _ => return Err(Error::Parse("expected an integer after /".into())),
                    }
                }
                saw_factor = true;
            }
            Some(Tok::X) => {
                let (e, next) = parse_exponent(toks, i + 1)?;
                p = p
                    .checked_add(e)
                    .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
                i = next;
                saw_factor = true;
            }
            Some(Tok::Y) => {
                let (e, next) = parse_exponent(toks, i + 1)?;
                q = q
                    .checked_add(e)
                    .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
                i = next;
                saw_factor = true;
            }
            Some(Tok::Star) => {
                i += 1;
                match toks.get(i) {
                    Some(Tok::Int(_)) | Some(Tok::X) | Some(Tok::Y) => {}
                    _ => return Err(Error::Parse("expected a factor after *".into())),
                }
            }
            _ => break,
        }
    }
    if !saw_factor {
        return Err(Error::Parse("empty term".into()));
    }
    Ok((((p, q), coeff), i))
}
