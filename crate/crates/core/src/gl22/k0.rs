use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::deligne::render_sum;
use crate::error::{Error, Result};

/// The maximal atypical simple `[a,b] = Ber^b S^{a-b}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleGamma {
    pub a: i64,
    pub b: i64,
}

impl SimpleGamma {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < b {
            return Err(Error::InvalidArgument(format!("[{a},{b}] is not a dominant label")));
        }
        Ok(SimpleGamma { a, b })
    }

    pub(crate) const fn at(a: i64, b: i64) -> Self {
        SimpleGamma { a, b }
    }

    /// `S^i = [i, 0]`.
    pub fn sym(i: i64) -> Self {
        SimpleGamma { a: i, b: 0 }
    }

    /// `Ber^v = [v, v]`.
    pub fn ber(v: i64) -> Self {
        SimpleGamma { a: v, b: v }
    }

    pub fn degree(&self) -> i64 {
        self.a - self.b
    }

    pub fn twist(&self, v: i64) -> Self {
        SimpleGamma { a: self.a + v, b: self.b + v }
    }

    /// The class of the contragredient dual.
    pub fn dual(&self) -> Self {
        if self.a == self.b {
            SimpleGamma { a: -self.a, b: -self.a }
        } else {
            SimpleGamma { a: 1 - self.b, b: 1 - self.a }
        }
    }

    pub fn to_latex(&self) -> String {
        let ber = match self.b {
            0 => String::new(),
            1 => "B".to_string(),
            v => format!("B^{{{v}}}"),
        };
        match (self.degree(), ber.is_empty()) {
            (0, true) => "{\\bf 1}".to_string(),
            (0, false) => ber,
            (k, _) => format!("{ber}S^{{{k}}}"),
        }
    }
}

impl fmt::Display for SimpleGamma {
    /// `S^3`, `B^-1 S^3`, `B S^1`, `B^2`, `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ber = match self.b {
            0 => String::new(),
            1 => "B".to_string(),
            v => format!("B^{v}"),
        };
        match (self.degree(), ber.is_empty()) {
            (0, true) => write!(f, "1"),
            (0, false) => write!(f, "{ber}"),
            (k, true) => write!(f, "S^{k}"),
            (k, false) => write!(f, "{ber} S^{k}"),
        }
    }
}

impl fmt::Debug for SimpleGamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// An integer combination of maximal atypical simples.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct K0Gamma {
    terms: BTreeMap<SimpleGamma, i64>,
}

impl K0Gamma {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(s: SimpleGamma) -> Self {
        let mut x = Self::zero();
        x.add_term(s, 1);
        x
    }

    pub fn add_term(&mut self, s: SimpleGamma, mult: i64) {
        if mult == 0 {
            return;
        }
        let c = self.terms.entry(s).or_insert(0);
        *c += mult;
        if *c == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn add_scaled(&mut self, other: &K0Gamma, k: i64) {
        for (s, c) in other.iter() {
            self.add_term(s, c * k);
        }
    }

    pub fn coeff(&self, s: SimpleGamma) -> i64 {
        self.terms.get(&s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (SimpleGamma, i64)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Multiplication by `Ber^v`.
    pub fn twist(&self, v: i64) -> K0Gamma {
        self.iter().map(|(s, c)| (s.twist(v), c)).collect()
    }

    pub fn dual(&self) -> K0Gamma {
        self.iter().map(|(s, c)| (s.dual(), c)).collect()
    }

    /// Each simple repeated by its multiplicity, in descending label order.
    /// Fails on negative multiplicities.
    pub fn to_multiset(&self) -> Result<Vec<SimpleGamma>> {
        let mut out = Vec::new();
        for (s, c) in self.iter().collect::<Vec<_>>().into_iter().rev() {
            if c < 0 {
                return Err(Error::Inconsistency(format!("negative multiplicity {c} of {s:?}")));
            }
            out.extend(std::iter::repeat_n(s, c as usize));
        }
        Ok(out)
    }

    /// Multiset containment.
    pub fn contains(&self, other: &K0Gamma) -> bool {
        other.iter().all(|(s, c)| self.coeff(s) >= c)
    }

    fn sorted(&self) -> Vec<(SimpleGamma, i64)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by(|(x, _), (y, _)| y.degree().cmp(&x.degree()).then(y.b.cmp(&x.b)));
        v
    }

    pub fn to_text(&self) -> String {
        render_sum(&self.sorted(), |s| s.to_string())
    }

    pub fn to_latex(&self) -> String {
        render_sum(&self.sorted(), |s| s.to_latex()).replace(" + ", " \\oplus ")
    }
}

impl fmt::Debug for K0Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_sum(&self.sorted(), |s| format!("{s:?}")))
    }
}

impl fmt::Display for K0Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromIterator<(SimpleGamma, i64)> for K0Gamma {
    fn from_iter<I: IntoIterator<Item = (SimpleGamma, i64)>>(iter: I) -> Self {
        let mut x = K0Gamma::zero();
        for (s, c) in iter {
            x.add_term(s, c);
        }
        x
    }
}

impl FromIterator<SimpleGamma> for K0Gamma {
    fn from_iter<I: IntoIterator<Item = SimpleGamma>>(iter: I) -> Self {
        iter.into_iter().map(|s| (s, 1)).collect()
    }
}

impl std::ops::Add for &K0Gamma {
    type Output = K0Gamma;

    fn add(self, rhs: &K0Gamma) -> K0Gamma {
        let mut out = self.clone();
        out.add_scaled(rhs, 1);
        out
    }
}

impl std::ops::Sub for &K0Gamma {
    type Output = K0Gamma;

    fn sub(self, rhs: &K0Gamma) -> K0Gamma {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

/// A Laurent polynomial `Σ c_k B^k` in the Berezin class of Gl(1|1).
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LaurentB {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentB {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(k: i64, c: i64) -> Self {
        let mut x = Self::zero();
        x.add_term(k, c);
        x
    }

    pub fn add_term(&mut self, k: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &LaurentB) -> LaurentB {
        let mut out = LaurentB::zero();
        for (k1, c1) in self.iter() {
            for (k2, c2) in other.iter() {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }

    /// Value at `B = -1`.
    pub fn eval_at_minus_one(&self) -> i64 {
        self.iter().map(|(k, c)| if k.rem_euclid(2) == 0 { c } else { -c }).sum()
    }
}

impl std::ops::Add for &LaurentB {
    type Output = LaurentB;

    fn add(self, rhs: &LaurentB) -> LaurentB {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k, c);
        }
        out
    }
}

impl fmt::Debug for LaurentB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, i64)> = self.coeffs.iter().rev().map(|(&k, &c)| (k, c)).collect();
        f.write_str(&render_sum(&terms, |k| format!("B^{k}")))
    }
}

/// Semisimple layers of a module, listed from the top down to the socle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoewyPresentation {
    pub layers: Vec<K0Gamma>,
}

impl LoewyPresentation {
    pub fn new(layers: Vec<K0Gamma>) -> Self {
        LoewyPresentation { layers }
    }

    pub fn loewy_length(&self) -> usize {
        self.layers.len()
    }

    /// Sum of all layers.
    pub fn k0(&self) -> K0Gamma {
        let mut out = K0Gamma::zero();
        for l in &self.layers {
            out.add_scaled(l, 1);
        }
        out
    }

    /// Top and socle agree and the layer sequence is palindromic.
    pub fn is_self_dual(&self) -> bool {
        let n = self.layers.len();
        (0..n / 2).all(|i| self.layers[i] == self.layers[n - 1 - i])
    }

    pub fn socle(&self) -> Option<&K0Gamma> {
        self.layers.last()
    }

    pub fn top(&self) -> Option<&K0Gamma> {
        self.layers.first()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_is_an_involution() {
        for a in -4..6 {
            for b in -4..=a {
                let s = SimpleGamma::at(a, b);
                assert_eq!(s.dual().dual(), s);
            }
        }
        assert_eq!(SimpleGamma::sym(2).dual(), SimpleGamma::at(1, -1));
    }

    #[test]
    fn display() {
        assert_eq!(SimpleGamma::at(2, -1).to_string(), "B^-1 S^3");
        assert_eq!(SimpleGamma::at(2, 1).to_string(), "B S^1");
        assert_eq!(SimpleGamma::ber(0).to_string(), "1");
        assert_eq!(SimpleGamma::ber(2).to_latex(), "B^{2}");
        assert!(SimpleGamma::new(0, 1).is_err());
    }

    #[test]
    fn laurent_arithmetic() {
        let x = &LaurentB::monomial(2, 1) + &LaurentB::monomial(-1, -1);
        let y = x.mul(&x);
        assert_eq!(y.coeff(4), 1);
        assert_eq!(y.coeff(1), -2);
        assert_eq!(y.coeff(-2), 1);
        assert_eq!(x.eval_at_minus_one(), 2);
        assert_eq!(y.to_string(), "B^4 - 2 B^1 + B^-2");
    }
}
