//! Rational functions of a kernel pair, and the text format that stores the
//! large ones.
//!
//! A form is a product of numerator polynomials over a product of
//! denominator polynomials raised to integer powers. The text format is
//! line oriented:
//!
//! ```text
//! [form name]
//! [numerator]
//! term <coefficient> <exp1> <exp2>
//! [denominator-factor k]
//! term <coefficient> <exp1> <exp2>
//! ```
//!
//! `#` starts a comment. Coefficients are exact rationals (`-3`, `5/2`).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::series::{rat, ExactRational, Result, Series1, Series2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly2 {
    terms: Vec<(ExactRational, usize, usize)>,
}

impl Poly2 {
    pub fn new(mut terms: Vec<(ExactRational, usize, usize)>) -> Self {
        terms.retain(|(c, _, _)| !c.is_zero());
        terms.sort_by_key(|a| (a.1, a.2));
        let mut merged: Vec<(ExactRational, usize, usize)> = Vec::with_capacity(terms.len());
        for (c, i, j) in terms {
            match merged.last_mut() {
                Some(last) if last.1 == i && last.2 == j => last.0 += c,
                _ => merged.push((c, i, j)),
            }
        }
        merged.retain(|(c, _, _)| !c.is_zero());
        Self { terms: merged }
    }

    pub fn from_ints(terms: &[(i64, usize, usize)]) -> Self {
        Self::new(terms.iter().map(|&(c, i, j)| (rat(c), i, j)).collect())
    }

    pub fn terms(&self) -> &[(ExactRational, usize, usize)] {
        &self.terms
    }

    pub fn swap(&self) -> Self {
        Self::new(
            self.terms
                .iter()
                .map(|(c, i, j)| (c.clone(), *j, *i))
                .collect(),
        )
    }

    pub fn is_univariate(&self) -> bool {
        self.terms.iter().all(|t| t.2 == 0)
    }

    /// `P(g1, g2)` by Horner in `g1` over polynomials in `g2`.
    pub fn eval(&self, g1: &Series2, g2: &Series2) -> Series2 {
        let n = g1.order().min(g2.order());
        let deg1 = self.terms.iter().map(|t| t.1).max().unwrap_or(0);
        let deg2 = self.terms.iter().map(|t| t.2).max().unwrap_or(0);
        let mut powers = vec![Series2::one(n)];
        for b in 1..=deg2 {
            let next = (&powers[b - 1] * g2).truncate(n).expect("order is kept");
            powers.push(next);
        }
        let mut acc = Series2::zero(n);
        for a in (0..=deg1).rev() {
            if a < deg1 {
                acc = (&acc * g1).truncate(n).expect("order is kept");
            }
            for (c, i, j) in &self.terms {
                if *i == a {
                    acc = &acc + &powers[*j].scale(c);
                }
            }
        }
        acc
    }

    /// `P(g)` for a polynomial in the first variable only.
    pub fn eval_1v(&self, g: &Series1) -> Series1 {
        assert!(self.is_univariate(), "polynomial depends on both variables");
        let n = g.order();
        let deg = self.terms.iter().map(|t| t.1).max().unwrap_or(0);
        let mut coeffs = vec![ExactRational::zero(); deg + 1];
        for (c, i, _) in &self.terms {
            coeffs[*i] += c;
        }
        let mut acc = Series1::constant(coeffs[deg].clone(), n);
        for c in coeffs[..deg].iter().rev() {
            acc = (&acc * g).truncate(n).expect("order is kept");
            acc = &acc + &Series1::constant(c.clone(), n);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub name: String,
    pub numerator: Vec<Poly2>,
    pub denominator: Vec<(Poly2, u32)>,
}

impl ClosedForm {
    pub fn from_ints(
        name: &str,
        numerator: &[&[(i64, usize, usize)]],
        denominator: &[(&[(i64, usize, usize)], u32)],
    ) -> Self {
        Self {
            name: name.to_string(),
            numerator: numerator.iter().map(|p| Poly2::from_ints(p)).collect(),
            denominator: denominator
                .iter()
                .map(|(p, k)| (Poly2::from_ints(p), *k))
                .collect(),
        }
    }

    /// The same form with the two kernel arguments exchanged.
    pub fn swapped(&self, name: &str) -> Self {
        Self {
            name: name.to_string(),
            numerator: self.numerator.iter().map(Poly2::swap).collect(),
            denominator: self
                .denominator
                .iter()
                .map(|(p, k)| (p.swap(), *k))
                .collect(),
        }
    }

    pub fn eval(&self, g1: &Series2, g2: &Series2) -> Result<Series2> {
        FormEvaluator::new(g1, g2).eval(self)
    }

    pub fn eval_1v(&self, g: &Series1) -> Result<Series1> {
        let n = g.order();
        let mut num = Series1::one(n);
        for p in &self.numerator {
            num = &num * &p.eval_1v(g);
        }
        let mut den = Series1::one(n);
        for (p, k) in &self.denominator {
            den = &den * &p.eval_1v(g).pow(*k);
        }
        num.div(&den)?.truncate(n)
    }
}

/// Evaluates several forms at one kernel pair, sharing polynomial values.
pub struct FormEvaluator<'a> {
    g1: &'a Series2,
    g2: &'a Series2,
    cache: RefCell<HashMap<(Poly2, u32), Series2>>,
}

impl<'a> FormEvaluator<'a> {
    pub fn new(g1: &'a Series2, g2: &'a Series2) -> Self {
        Self {
            g1,
            g2,
            cache: RefCell::new(HashMap::new()),
        }
    }

    fn power(&self, p: &Poly2, k: u32) -> Series2 {
        let key = (p.clone(), k);
        if let Some(s) = self.cache.borrow().get(&key) {
            return s.clone();
        }
        let value = if k == 1 {
            p.eval(self.g1, self.g2)
        } else {
            let base = self.power(p, 1);
            let half = self.power(p, k / 2);
            let sq = &half * &half;
            if k % 2 == 1 {
                &sq * &base
            } else {
                sq
            }
        };
        self.cache.borrow_mut().insert(key, value.clone());
        value
    }

    pub fn eval(&self, form: &ClosedForm) -> Result<Series2> {
        let n = self.g1.order().min(self.g2.order());
        let mut num = Series2::one(n);
        for p in &form.numerator {
            num = &num * &self.power(p, 1);
        }
        let mut den = Series2::one(n);
        for (p, k) in &form.denominator {
            den = &den * &self.power(p, *k);
        }
        num.div(&den)?.truncate(n)
    }
}

fn parse_rational(s: &str) -> Option<ExactRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let a = num_bigint::BigInt::from_str(a).ok()?;
            let b = num_bigint::BigInt::from_str(b).ok()?;
            if b.is_zero() {
                None
            } else {
                Some(ExactRational::new(a, b))
            }
        }
        None => num_bigint::BigInt::from_str(s)
            .ok()
            .map(ExactRational::from_integer),
    }
}

enum Block {
    Numerator,
    Denominator(u32),
}

/// Parses every `[form ...]` section of `text`.
pub fn parse_forms(text: &str) -> std::result::Result<BTreeMap<String, ClosedForm>, FormParseError> {
    let mut forms = BTreeMap::new();
    let mut current: Option<ClosedForm> = None;
    let mut block: Option<(Block, Vec<(ExactRational, usize, usize)>)> = None;
    let err = |line: usize, message: &str| FormParseError {
        line,
        message: message.to_string(),
    };

    fn close_block(
        form: &mut Option<ClosedForm>,
        block: &mut Option<(Block, Vec<(ExactRational, usize, usize)>)>,
    ) {
        if let (Some(f), Some((kind, terms))) = (form.as_mut(), block.take()) {
            let p = Poly2::new(terms);
            match kind {
                Block::Numerator => f.numerator.push(p),
                Block::Denominator(k) => f.denominator.push((p, k)),
            }
        }
    }

    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            close_block(&mut current, &mut block);
            let mut words = header.split_whitespace();
            match (words.next(), words.next(), words.next()) {
                (Some("form"), Some(name), None) => {
                    if let Some(f) = current.take() {
                        forms.insert(f.name.clone(), f);
                    }
                    if forms.contains_key(name) {
                        return Err(err(line_no, "duplicate form name"));
                    }
                    current = Some(ClosedForm {
                        name: name.to_string(),
                        numerator: Vec::new(),
                        denominator: Vec::new(),
                    });
                }
                (Some("numerator"), None, None) => {
                    if current.is_none() {
                        return Err(err(line_no, "block outside of a form"));
                    }
                    block = Some((Block::Numerator, Vec::new()));
                }
                (Some("denominator-factor"), Some(k), None) => {
                    if current.is_none() {
                        return Err(err(line_no, "block outside of a form"));
                    }
                    let k: u32 = k
                        .parse()
                        .ok()
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| err(line_no, "factor power must be a positive integer"))?;
                    block = Some((Block::Denominator(k), Vec::new()));
                }
                _ => return Err(err(line_no, "unknown header")),
            }
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() != 4 || words[0] != "term" {
            return Err(err(line_no, "expected `term <coeff> <exp1> <exp2>`"));
        }
        let Some((_, terms)) = block.as_mut() else {
            return Err(err(line_no, "term outside of a block"));
        };
        let c = parse_rational(words[1]).ok_or_else(|| err(line_no, "bad coefficient"))?;
        let i: usize = words[2]
            .parse()
            .map_err(|_| err(line_no, "bad exponent"))?;
        let j: usize = words[3]
            .parse()
            .map_err(|_| err(line_no, "bad exponent"))?;
        terms.push((c, i, j));
    }
    close_block(&mut current, &mut block);
    if let Some(f) = current.take() {
        forms.insert(f.name.clone(), f);
    }
    Ok(forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    #[test]
    fn parses_blocks_and_rationals() {
        let text = "# comment\n[form q]\n[numerator]\nterm 1 1 0\nterm -3/2 0 1 # tail\n[denominator-factor 2]\nterm 1 0 0\nterm -1 1 0\n";
        let forms = parse_forms(text).unwrap();
        let q = &forms["q"];
        assert_eq!(q.numerator.len(), 1);
        assert_eq!(q.numerator[0].terms()[0], (ratio(-3, 2), 0, 1));
        assert_eq!(q.denominator[0].1, 2);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_forms("term 1 0 0").unwrap_err().line, 1);
        assert!(parse_forms("[form a]\n[numerator]\nterm x 0 0").is_err());
        assert!(parse_forms("[form a]\n[denominator-factor 0]").is_err());
        assert!(parse_forms("[form a]\n[form a]").is_err());
        assert!(parse_forms("[numerator]").is_err());
    }

    #[test]
    fn evaluates_geometric_form() {
        let form = ClosedForm::from_ints("g", &[&[(1, 0, 0)]], &[(&[(1, 0, 0), (-1, 1, 0), (-1, 0, 1)], 1)]);
        let x = Series2::monomial(1, 0, 3);
        let y = Series2::monomial(0, 1, 3);
        let s = form.eval(&x, &y).unwrap();
        assert_eq!(s.coeff(1, 2), &rat(3));
        let uni = ClosedForm::from_ints("u", &[&[(1, 1, 0)]], &[(&[(1, 0, 0), (-1, 1, 0)], 2)]);
        let s1 = uni.eval_1v(&Series1::monomial(1, 4)).unwrap();
        assert_eq!(s1, Series1::from_ints(&[0, 1, 2, 3, 4]));
    }

    #[test]
    fn swapped_form_matches_swapped_series() {
        let form = ClosedForm::from_ints(
            "p",
            &[&[(2, 1, 0), (1, 0, 2)]],
            &[(&[(1, 0, 0), (-1, 0, 1)], 2)],
        );
        let x = Series2::monomial(1, 0, 5);
        let y = Series2::monomial(0, 1, 5);
        assert_eq!(
            form.swapped("q").eval(&x, &y).unwrap(),
            form.eval(&x, &y).unwrap().swap()
        );
    }
}
