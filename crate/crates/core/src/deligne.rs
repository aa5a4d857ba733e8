//! Grothendieck ring arithmetic for the interpolating category at `δ = 0`.
//!
//! Elements are integer combinations of bipartitions. [`rt_tensor`] is the
//! generic product, [`lift`] and [`lift_inv`] move between the generic ring
//! and the ring at `δ = 0`, and [`gl0_tensor`] combines them. [`truncate`]
//! keeps the terms that survive in `Gl(n|n)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::diagram::{bipartition_invariants, linked_orientations};
use crate::error::{Error, Result};
use crate::partition::{cofactorizations, lr_coeff, lr_product, write_parts, Bipartition, Partition};

#[derive(Clone, Default, PartialEq, Eq)]
pub struct RtElement {
    terms: BTreeMap<Bipartition, i64>,
}

impl RtElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::basis(Bipartition::empty())
    }

    pub fn basis(b: Bipartition) -> Self {
        let mut x = Self::zero();
        x.add_term(b, 1);
        x
    }

    pub fn add_term(&mut self, b: Bipartition, mult: i64) {
        if mult == 0 {
            return;
        }
        let c = self.terms.entry(b.clone()).or_insert(0);
        *c += mult;
        if *c == 0 {
            self.terms.remove(&b);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &RtElement, k: i64) {
        for (b, c) in other.iter() {
            self.add_term(b.clone(), c * k);
        }
    }

    pub fn coeff(&self, b: &Bipartition) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, i64)> {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn filter(&self, mut keep: impl FnMut(&Bipartition) -> bool) -> RtElement {
        self.iter().filter(|(b, _)| keep(b)).map(|(b, c)| (b.clone(), c)).collect()
    }

    /// Terms in display order: descending total size, then lexicographic.
    pub fn sorted_terms(&self) -> Vec<(Bipartition, i64)> {
        let mut v: Vec<_> = self.iter().map(|(b, c)| (b.clone(), c)).collect();
        v.sort_by(|(x, _), (y, _)| {
            y.total_size()
                .cmp(&x.total_size())
                .then_with(|| y.left.cmp(&x.left))
                .then_with(|| y.right.cmp(&x.right))
        });
        v
    }

    /// Rendering with `(μ)` for maximal atypical terms and `R(L|R)` otherwise.
    pub fn to_text(&self) -> String {
        render_sum(&self.sorted_terms(), |b| {
            let mut s = String::new();
            if b.is_max_atypical() {
                s.push('(');
                write_parts(&mut s, b.left.parts()).unwrap();
                s.push(')');
            } else {
                s.push_str(&b.to_string());
            }
            s
        })
    }

    /// Rendering with the names `ASi`, `ALi` and `R(μ)` of the closed formulas.
    pub fn to_symbolic_text(&self) -> String {
        render_sum(&self.sorted_terms(), |b| {
            if !b.is_max_atypical() {
                return b.to_string();
            }
            let mu = &b.left;
            if mu.is_empty() {
                "1".to_string()
            } else if mu.is_row() {
                format!("AS{}", mu.part(0))
            } else if mu.is_column() {
                format!("AL{}", mu.len())
            } else {
                let mut s = String::from("R(");
                write_parts(&mut s, mu.parts()).unwrap();
                s.push(')');
                s
            }
        })
    }

    pub fn to_latex(&self) -> String {
        render_sum(&self.sorted_terms(), |b| {
            if b.is_max_atypical() {
                let mut s = String::from("R(");
                write_parts(&mut s, b.left.parts()).unwrap();
                s.push(')');
                s
            } else {
                let mut s = String::from("R(");
                write_parts(&mut s, b.left.parts()).unwrap();
                s.push(';');
                write_parts(&mut s, b.right.parts()).unwrap();
                s.push(')');
                s
            }
        })
        .replace(" + ", " \\oplus ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("RtElement serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::InvalidArgument(format!("bad RtElement JSON: {e}")))
    }
}

pub(crate) fn render_sum<T>(terms: &[(T, i64)], name: impl Fn(&T) -> String) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (t, c)) in terms.iter().enumerate() {
        let (sign, abs) = if *c < 0 { ("-", -c) } else { ("+", *c) };
        if idx == 0 {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if abs != 1 {
            out.push_str(&format!("{abs} "));
        }
        out.push_str(&name(t));
    }
    out
}

impl fmt::Debug for RtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        f.write_str(&render_sum(&terms, |b| b.to_string()))
    }
}

impl fmt::Display for RtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromIterator<(Bipartition, i64)> for RtElement {
    fn from_iter<I: IntoIterator<Item = (Bipartition, i64)>>(iter: I) -> Self {
        let mut x = RtElement::zero();
        for (b, c) in iter {
            x.add_term(b, c);
        }
        x
    }
}

impl std::ops::Add for &RtElement {
    type Output = RtElement;

    fn add(self, rhs: &RtElement) -> RtElement {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, 1);
        out
    }
}

impl std::ops::Sub for &RtElement {
    type Output = RtElement;

    fn sub(self, rhs: &RtElement) -> RtElement {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, -1);
        out
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    left: Vec<u32>,
    right: Vec<u32>,
    mult: i64,
}

impl Serialize for RtElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireTerm> = self
            .sorted_terms()
            .into_iter()
            .map(|(b, mult)| WireTerm { left: b.left.parts().to_vec(), right: b.right.parts().to_vec(), mult })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RtElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<WireTerm>::deserialize(d)?;
        let mut x = RtElement::zero();
        for t in wire {
            let left = Partition::new(t.left).map_err(serde::de::Error::custom)?;
            let right = Partition::new(t.right).map_err(serde::de::Error::custom)?;
            x.add_term(Bipartition::new(left, right), t.mult);
        }
        Ok(x)
    }
}

/// Weighted pairs `(x, y)` with weight `Σ_κ c^p_{κx} c^q_{κy}`.
fn paired_cofactors(p: &Partition, q: &Partition) -> Vec<((Partition, Partition), u64)> {
    let cp = cofactorizations(p);
    let cq = cofactorizations(q);
    let mut acc: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
    for a in &cp {
        for b in cq.iter().filter(|b| b.kappa == a.kappa) {
            *acc.entry((a.alpha.clone(), b.alpha.clone())).or_insert(0) += a.coeff * b.coeff;
        }
    }
    acc.into_iter().collect()
}

/// The structure constant `Γ^ν_{λμ}` of the generic ring.
pub fn gamma_coeff(lam: &Bipartition, mu: &Bipartition, nu: &Bipartition) -> u64 {
    let ab = paired_cofactors(&lam.left, &mu.right);
    let et = paired_cofactors(&lam.right, &mu.left);
    let mut total = 0;
    for ((alpha, beta), w1) in &ab {
        for ((eta, theta), w2) in &et {
            let cl = lr_coeff(alpha, theta, &nu.left);
            if cl == 0 {
                continue;
            }
            total += w1 * w2 * cl * lr_coeff(beta, eta, &nu.right);
        }
    }
    total
}

type PairKey = (Bipartition, Bipartition);

fn product_cache() -> &'static RwLock<HashMap<PairKey, RtElement>> {
    static CACHE: OnceLock<RwLock<HashMap<PairKey, RtElement>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn basis_product(lam: &Bipartition, mu: &Bipartition) -> RtElement {
    let key = if lam <= mu { (lam.clone(), mu.clone()) } else { (mu.clone(), lam.clone()) };
    if let Some(x) = product_cache().read().expect("product cache poisoned").get(&key) {
        return x.clone();
    }
    let ab = paired_cofactors(&lam.left, &mu.right);
    let et = paired_cofactors(&lam.right, &mu.left);
    let mut out = RtElement::zero();
    for ((alpha, beta), w1) in &ab {
        for ((eta, theta), w2) in &et {
            let lefts = lr_product(alpha, theta);
            let rights = lr_product(beta, eta);
            let w = (w1 * w2) as i64;
            for (nl, cl) in lefts.iter() {
                for (nr, cr) in rights.iter() {
                    out.add_term(Bipartition::new(nl.clone(), nr.clone()), w * cl * cr);
                }
            }
        }
    }
    product_cache().write().expect("product cache poisoned").insert(key, out.clone());
    out
}

pub fn rt_tensor(x: &RtElement, y: &RtElement) -> RtElement {
    let mut out = RtElement::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_assign_scaled(&basis_product(a, b), ca * cb);
        }
    }
    out
}

pub fn lift(x: &RtElement) -> RtElement {
    let mut out = RtElement::zero();
    for (b, c) in x.iter() {
        for mu in linked_orientations(b) {
            out.add_term(mu, c);
        }
    }
    out
}

/// Inverse of [`lift`], peeling off the term of largest `|λ^L| + |λ^R|` first.
pub fn lift_inv(x: &RtElement) -> RtElement {
    let mut rest = x.clone();
    let mut out = RtElement::zero();
    while let Some((top, c)) = rest.iter().max_by_key(|(b, _)| b.total_size()).map(|(b, c)| (b.clone(), c)) {
        out.add_term(top.clone(), c);
        rest.add_assign_scaled(&lift(&RtElement::basis(top)), -c);
    }
    out
}

/// Product of indecomposables at `δ = 0`. Fails if a multiplicity is negative.
pub fn gl0_tensor(x: &RtElement, y: &RtElement) -> Result<RtElement> {
    let out = lift_inv(&rt_tensor(&lift(x), &lift(y)));
    if let Some((b, c)) = out.iter().find(|(_, c)| *c < 0) {
        return Err(Error::Inconsistency(format!("negative multiplicity {c} of {b} in a tensor product")));
    }
    Ok(out)
}

/// Keeps the `(n|n)`-cross terms.
pub fn truncate(x: &RtElement, n: u32) -> RtElement {
    x.filter(|b| bipartition_invariants(b).k <= n)
}

pub fn project_max_atypical(x: &RtElement) -> RtElement {
    x.filter(Bipartition::is_max_atypical)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymKind {
    #[serde(rename = "AS")]
    Sym,
    #[serde(rename = "AL")]
    Alt,
}

/// A closed decomposition written with `𝔸_{S^i}`, `𝔸_{Λ^i}` and `R(μ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormulaResult {
    pub symmetric_terms: Vec<(SymKind, u32, i64)>,
    pub mixed_terms: Vec<(Partition, i64)>,
}

impl ClosedFormulaResult {
    /// Adds `m · R(μ)`, filing rows under `𝔸_S` and columns of length at least
    /// two under `𝔸_Λ`.
    fn push(&mut self, mu: Partition, m: i64) {
        if m == 0 {
            return;
        }
        let (kind, idx) = if mu.is_row() {
            (Some(SymKind::Sym), mu.part(0))
        } else if mu.is_column() {
            (Some(SymKind::Alt), mu.len() as u32)
        } else {
            (None, 0)
        };
        match kind {
            Some(kind) => {
                if let Some(t) = self.symmetric_terms.iter_mut().find(|t| t.0 == kind && t.1 == idx) {
                    t.2 += m;
                } else {
                    self.symmetric_terms.push((kind, idx, m));
                }
            }
            None => {
                if let Some(t) = self.mixed_terms.iter_mut().find(|t| t.0 == mu) {
                    t.1 += m;
                } else {
                    self.mixed_terms.push((mu, m));
                }
            }
        }
    }

    fn push_r(&mut self, a: i64, tail: &[i64], m: i64) {
        if a < 0 || tail.iter().any(|&t| t < 0) {
            return;
        }
        let mut parts = vec![a as u32];
        parts.extend(tail.iter().map(|&t| t as u32));
        if let Ok(mu) = Partition::new(parts) {
            self.push(mu, m);
        }
    }

    fn push_hook(&mut self, a: i64, ones: i64, m: i64) {
        if a < 1 || ones < 0 {
            return;
        }
        self.push_r(a, &vec![1; ones as usize], m);
    }

    fn normalize(mut self) -> Self {
        self.symmetric_terms.retain(|t| t.2 != 0);
        self.mixed_terms.retain(|t| t.1 != 0);
        self.symmetric_terms.sort_by_key(|x| (x.0, std::cmp::Reverse(x.1)));
        self.mixed_terms.sort_by(|x, y| (y.0.size(), &y.0).cmp(&(x.0.size(), &x.0)));
        self
    }

    pub fn expand(&self) -> RtElement {
        let mut out = RtElement::zero();
        for &(kind, i, m) in &self.symmetric_terms {
            let b = match kind {
                SymKind::Sym => Bipartition::sym(i),
                SymKind::Alt => Bipartition::alt(i),
            };
            out.add_term(b, m);
        }
        for (mu, m) in &self.mixed_terms {
            out.add_term(Bipartition::max_atypical(mu.clone()), *m);
        }
        out
    }

    fn filtered(self, n: u32) -> Self {
        let keep = |mu: &Partition| bipartition_invariants(&Bipartition::max_atypical(mu.clone())).k <= n;
        let symmetric_terms = self
            .symmetric_terms
            .into_iter()
            .filter(|&(kind, i, _)| {
                let mu = match kind {
                    SymKind::Sym => Partition::row(i),
                    SymKind::Alt => Partition::column(i),
                };
                keep(&mu)
            })
            .collect();
        let mixed_terms = self.mixed_terms.into_iter().filter(|(mu, _)| keep(mu)).collect();
        ClosedFormulaResult { symmetric_terms, mixed_terms }
    }

    fn entries(&self) -> Vec<(String, String, i64)> {
        let mut v = Vec::new();
        for &(kind, i, m) in &self.symmetric_terms {
            let (t, l) = match kind {
                SymKind::Sym => (format!("AS{i}"), format!("{{\\mathbb A}}_{{S^{{{i}}}}}")),
                SymKind::Alt => (format!("AL{i}"), format!("{{\\mathbb A}}_{{\\Lambda^{{{i}}}}}")),
            };
            v.push((t, l, m));
        }
        for (mu, m) in &self.mixed_terms {
            let mut p = String::new();
            write_parts(&mut p, mu.parts()).unwrap();
            v.push((format!("R({p})"), format!("R({p})"), *m));
        }
        v
    }

    pub fn to_text(&self) -> String {
        let e = self.entries();
        render_sum(&e.iter().map(|(t, _, m)| (t.clone(), *m)).collect::<Vec<_>>(), |s| s.clone())
    }

    pub fn to_latex(&self) -> String {
        let e = self.entries();
        let terms: Vec<_> = e.iter().map(|(_, l, m)| (l.clone(), *m)).collect();
        render_sum(&terms, |s| s.clone()).replace(" + ", " \\oplus ").replace(" - ", " \\ominus ")
    }
}

fn check_positive(i: u32, j: u32) -> Result<()> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidArgument(format!("indices must be positive, got ({i},{j})")));
    }
    Ok(())
}

/// Maximal atypical part of `𝔸_{S^i} ⊗ 𝔸_{S^j}` in `Gl(n|n)`.
///
/// With `a = max(i,j)`, `b = min(i,j)` and `R(x,0) = 𝔸_{S^x}`:
///
/// ```text
/// Σ_{m=0}^{b} [ R(a+b-m, m) + 2 R(a+b-m, m-1) + R(a+b-m, m-2) ]  (+ R(a-1, b-1) if a ≠ b)
/// ```
///
/// where terms with a negative entry vanish and `R(1,1) = 𝔸_{Λ^2}`.
pub fn closed_as_as(i: u32, j: u32, n: u32) -> Result<ClosedFormulaResult> {
    check_positive(i, j)?;
    let (a, b) = (i.max(j) as i64, i.min(j) as i64);
    let mut out = ClosedFormulaResult::default();
    for m in 0..=b {
        out.push_r(a + b - m, &[m], 1);
        out.push_r(a + b - m, &[m - 1], 2);
        out.push_r(a + b - m, &[m - 2], 1);
    }
    if a != b {
        out.push_r(a - 1, &[b - 1], 1);
    }
    Ok(out.normalize().filtered(n))
}

/// Maximal atypical part of `𝔸_{S^i} ⊗ 𝔸_{Λ^j}` for `i ≥ j`.
pub fn closed_as_al(i: u32, j: u32, n: u32) -> Result<ClosedFormulaResult> {
    check_positive(i, j)?;
    if i < j {
        return Err(Error::InvalidArgument(format!("closed_as_al needs i >= j, got ({i},{j})")));
    }
    if j == 1 {
        return closed_as_as(i, 1, n);
    }
    let (i, j) = (i as i64, j as i64);
    let d = i - j;
    let mut out = ClosedFormulaResult::default();
    out.push_r(d + 2, &[], 1);
    out.push_r(d + 1, &[], 2);
    if d >= 1 {
        out.push_r(d, &[], 1);
    } else {
        out.push(Partition::column(2), 1);
    }
    out.push_hook(i + 1, j - 1, 1);
    for k in 2..=j {
        out.push_hook(d + k, k, 1);
        out.push_hook(d + k, k - 1, 2);
        if k >= 3 {
            out.push_hook(d + k, k - 2, 1);
        }
    }
    if d != 0 {
        out.push_hook(d + 1, 1, 1);
    }
    Ok(out.normalize().filtered(n))
}

/// Maximal atypical part of `(i) ⊗ (j)` in the generic ring.
pub fn closed_rt_ss(i: u32, j: u32) -> Result<RtElement> {
    check_positive(i, j)?;
    let (i, j) = (i as i64, j as i64);
    let t = i.min(j);
    let mut out = RtElement::zero();
    let mut put = |a: i64, b: i64, m: i64| {
        let mu = Partition::new(vec![a as u32, b as u32]).expect("two-row staircase");
        out.add_term(Bipartition::max_atypical(mu), m);
    };
    for m in 0..=t {
        put(i + j - m, m, 1);
    }
    for m in 0..t {
        put(i + j - 1 - m, m, 2);
        put(i + j - 2 - m, m, 1);
    }
    Ok(out)
}

/// Maximal atypical part of `(i) ⊗ (1^j)` in the generic ring.
pub fn closed_rt_sl(i: u32, j: u32) -> Result<RtElement> {
    check_positive(i, j)?;
    let (i, j) = (i as i64, j as i64);
    let t = i.min(j);
    let mut out = RtElement::zero();
    add_hook(&mut out, i + 1, j - 1);
    add_hook(&mut out, i, j);
    add_hook(&mut out, i, j - 1);
    for l in 1..t {
        add_hook(&mut out, i - l, j - l - 1);
        add_hook(&mut out, i - l, j - l);
        add_hook(&mut out, i - l + 1, j - l - 1);
        add_hook(&mut out, i - l + 1, j - l);
    }
    if i > j {
        add_hook(&mut out, i - j + 1, 0);
        add_hook(&mut out, i - j, 0);
    } else {
        add_hook(&mut out, 1, j - i);
        add_hook(&mut out, 1, j - i - 1);
    }
    Ok(out)
}

/// Adds the maximal atypical term `(a, 1^ones)`; `a = 1, ones = -1` is `()`.
fn add_hook(out: &mut RtElement, a: i64, ones: i64) {
    let mu = if ones < 0 {
        Partition::empty()
    } else {
        let mut parts = vec![a as u32];
        parts.extend(std::iter::repeat_n(1, ones as usize));
        Partition::new(parts).expect("hook shape")
    };
    out.add_term(Bipartition::max_atypical(mu), 1);
}
