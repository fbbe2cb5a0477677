use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use rustc_hash::FxHashSet;

use super::monomial::{Exponent, Monomial};
use crate::error::{Error, Result};

/// A polynomial over GF(2) in the variables `e1, e2, ...`.
///
/// Every present term has coefficient one. Terms are kept sorted in
/// descending graded lexicographic order, so equality, hashing and printing
/// are all canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    terms: Vec<Monomial>,
}

/// Collects monomials with GF(2) cancellation: inserting a term twice removes it.
#[derive(Default)]
pub(crate) struct TermAccumulator {
    set: FxHashSet<Monomial>,
}

impl TermAccumulator {
    pub(crate) fn toggle(&mut self, m: Monomial) {
        if !self.set.remove(&m) {
            self.set.insert(m);
        }
    }

    pub(crate) fn finish(self) -> Gf2Poly {
        let mut terms: Vec<Monomial> = self.set.into_iter().collect();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Gf2Poly { terms }
    }
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Gf2Poly { terms: vec![m] }
    }

    /// The variable with zero-based index `var`.
    pub fn var(var: usize) -> Self {
        Self::from_monomial(Monomial::var(var))
    }

    /// Sums the given monomials mod 2; repeated monomials cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut acc = TermAccumulator::default();
        for m in terms {
            acc.toggle(m);
        }
        acc.finish()
    }

    /// Sum of `vars` (zero-based indices), e.g. `e1 + e2 + e3`.
    pub fn sum_of_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Self::from_terms(vars.into_iter().map(Monomial::var))
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search_by(|t| m.cmp(t)).is_ok()
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.iter().all(|t| t.degree() == degree)
    }

    /// One past the largest variable index that occurs in any term.
    pub fn num_vars(&self) -> usize {
        self.terms.iter().map(Monomial::num_vars).max().unwrap_or(0)
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Gf2Poly {
        Gf2Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.degree() <= max_degree)
                .cloned()
                .collect(),
        }
    }

    /// The part of degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> Gf2Poly {
        Gf2Poly {
            terms: self
                .terms
                .iter()
                .filter(|t| t.degree() == degree)
                .cloned()
                .collect(),
        }
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Gf2Poly {
        Gf2Poly {
            terms: self.terms.iter().filter(|t| keep(t)).cloned().collect(),
        }
    }

    /// Symmetric difference of the term sets.
    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].cmp(&other.terms[j]) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Gf2Poly { terms }
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        self.mul_filtered(other, |_| true)
    }

    /// `mul` with every product term of degree above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Gf2Poly, max_degree: u32) -> Gf2Poly {
        self.mul_filtered(other, |m| m.degree() <= max_degree)
    }

    /// Product keeping only the term products accepted by `keep`.
    ///
    /// The predicate is applied before cancellation, so it must be a
    /// property of individual monomials (a truncation), never of the sum.
    pub fn mul_filtered(&self, other: &Gf2Poly, keep: impl Fn(&Monomial) -> bool) -> Gf2Poly {
        if self.is_zero() || other.is_zero() {
            return Gf2Poly::zero();
        }
        if self.is_one() {
            return other.filter(keep);
        }
        if other.is_one() {
            return self.filter(keep);
        }
        let mut acc = TermAccumulator::default();
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mul(b);
                if keep(&m) {
                    acc.toggle(m);
                }
            }
        }
        acc.finish()
    }

    /// Square via the Frobenius map: in characteristic two `(a + b)^2 = a^2 + b^2`,
    /// so squaring doubles every exponent and never cancels.
    pub fn frobenius(&self) -> Gf2Poly {
        let mut terms: Vec<Monomial> = self.terms.iter().map(|t| t.scale(2)).collect();
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Gf2Poly { terms }
    }

    /// `self^exponent`, truncated above `max_degree` when given.
    ///
    /// Uses the binary expansion of `exponent`: the repeated squares are
    /// Frobenius images, only the set bits cost a real multiplication.
    pub fn pow(&self, exponent: u64, max_degree: Option<u32>) -> Gf2Poly {
        let trunc = |p: Gf2Poly| match max_degree {
            Some(d) => p.truncate(d),
            None => p,
        };
        let mut result = trunc(Gf2Poly::one());
        let mut square = trunc(self.clone());
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = match max_degree {
                    Some(d) => result.mul_truncated(&square, d),
                    None => result.mul(&square),
                };
            }
            e >>= 1;
            if e > 0 {
                // Terms whose square already exceeds the bound can be dropped first.
                if let Some(d) = max_degree {
                    square = square.truncate(d / 2);
                }
                square = trunc(square.frobenius());
            }
        }
        result
    }

    /// Simultaneous substitution `var i -> assignment[i]`, fully expanded mod 2.
    ///
    /// Fails if a variable occurring in `self` has no assignment.
    pub fn substitute(&self, assignment: &[Option<Gf2Poly>]) -> Result<Gf2Poly> {
        self.substitute_impl(assignment, None)
    }

    /// `substitute` truncated above `max_degree`.
    pub fn substitute_truncated(
        &self,
        assignment: &[Option<Gf2Poly>],
        max_degree: u32,
    ) -> Result<Gf2Poly> {
        self.substitute_impl(assignment, Some(max_degree))
    }

    fn substitute_impl(
        &self,
        assignment: &[Option<Gf2Poly>],
        max_degree: Option<u32>,
    ) -> Result<Gf2Poly> {
        let mut powers: BTreeMap<(usize, Exponent), Gf2Poly> = BTreeMap::new();
        let mut total = Gf2Poly::zero();
        for term in &self.terms {
            let mut product = Gf2Poly::one();
            for (var, &e) in term.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = assignment
                    .get(var)
                    .and_then(Option::as_ref)
                    .ok_or(Error::UnassignedVariable { var: var + 1 })?;
                let power = powers
                    .entry((var, e))
                    .or_insert_with(|| base.pow(u64::from(e), max_degree));
                product = match max_degree {
                    Some(d) => product.mul_truncated(power, d),
                    None => product.mul(power),
                };
                if product.is_zero() {
                    break;
                }
            }
            total += &product;
        }
        Ok(total)
    }

    /// Renders with a custom variable prefix, e.g. `s1^2 + s2`.
    pub fn display_with<'a>(&'a self, prefix: &'a str) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, prefix }
    }
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;
    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        Gf2Poly::add(self, rhs)
    }
}

impl AddAssign<&Gf2Poly> for Gf2Poly {
    fn add_assign(&mut self, rhs: &Gf2Poly) {
        *self = Gf2Poly::add(self, rhs);
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;
    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        Gf2Poly::mul(self, rhs)
    }
}

impl From<Monomial> for Gf2Poly {
    fn from(m: Monomial) -> Self {
        Gf2Poly::from_monomial(m)
    }
}

struct PolyDisplay<'a> {
    poly: &'a Gf2Poly,
    prefix: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.poly.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", t.display_with(self.prefix))?;
        }
        Ok(())
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("e").fmt(f)
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the rendered form back, e.g. `"e1^3*e2 + e4 + 1"`.
///
/// Any alphabetic variable prefix is accepted (`s2` and `e2` both mean the
/// second variable). Repeated terms cancel.
impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed polynomial `{s}`"));
        let s = s.trim();
        if s == "0" {
            return Ok(Gf2Poly::zero());
        }
        let mut terms = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad());
            }
            let mut mono = Monomial::one();
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor == "1" {
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((name, exp)) => (name, exp.parse::<Exponent>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let digits = name.trim_start_matches(|c: char| c.is_ascii_alphabetic() || c == '_');
                if digits.len() == name.len() {
                    return Err(bad());
                }
                let index: usize = digits.parse().map_err(|_| bad())?;
                if index == 0 {
                    return Err(bad());
                }
                mono = mono.mul(&Monomial::var_pow(index - 1, exp));
            }
            terms.push(mono);
        }
        Ok(Gf2Poly::from_terms(terms))
    }
}
