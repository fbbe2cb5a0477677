use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent of a single variable.
pub type Exponent = u32;

/// A monomial `e1^a1 * e2^a2 * ...` stored as its exponent sequence.
///
/// Variables are addressed by zero-based index internally and printed
/// one-based (`e1`, `e2`, ...). Trailing zero exponents are always trimmed,
/// so two monomials compare equal exactly when they denote the same product.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single variable with zero-based index `var`.
    pub fn var(var: usize) -> Self {
        Self::var_pow(var, 1)
    }

    pub fn var_pow(var: usize, exponent: Exponent) -> Self {
        if exponent == 0 {
            return Self::one();
        }
        let mut exps = SmallVec::from_elem(0, var + 1);
        exps[var] = exponent;
        Monomial {
            exps,
            degree: exponent,
        }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        let mut exps: SmallVec<[Exponent; 8]> = SmallVec::from_slice(exps);
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let degree = exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflow");
        Monomial { exps, degree }
    }

    /// Exponent sequence with trailing zeros trimmed.
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> Exponent {
        self.exps.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// One past the largest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (a, &b) in exps.iter_mut().zip(short.exps.iter()) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        Monomial {
            exps,
            degree: self
                .degree
                .checked_add(other.degree)
                .expect("monomial degree overflow"),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut exps = self.exps.clone();
        for (a, &b) in exps.iter_mut().zip(other.exps.iter()) {
            *a -= b;
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    /// Multiplies every exponent by `factor`; squaring is `scale(2)`.
    pub fn scale(&self, factor: Exponent) -> Monomial {
        if factor == 0 {
            return Monomial::one();
        }
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(factor).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self
                .degree
                .checked_mul(factor)
                .expect("monomial degree overflow"),
        }
    }

    /// Returns a copy with the exponent of `var` replaced.
    pub fn with_exponent(&self, var: usize, exponent: Exponent) -> Monomial {
        let mut exps = self.exps.clone();
        if exps.len() <= var {
            if exponent == 0 {
                return self.clone();
            }
            exps.resize(var + 1, 0);
        }
        let old = exps[var];
        exps[var] = exponent;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial {
            exps,
            degree: self.degree - old + exponent,
        }
    }

    /// Renders with a custom variable prefix, e.g. `s1^2*s3`.
    pub fn display_with<'a>(&'a self, prefix: &'a str) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, prefix }
    }
}

/// Graded lexicographic order with `e1 > e2 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let len = self.exps.len().max(other.exps.len());
            for i in 0..len {
                match self.exponent(i).cmp(&other.exponent(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    prefix: &'a str,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{}{}", self.prefix, i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("e").fmt(f)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
