//! Integer partitions, bipartitions and Littlewood-Richardson coefficients.
//!
//! A [`Partition`] is stored with trailing zeros stripped, so `(2,1,0,0)` and
//! `(2,1)` are the same value. Littlewood-Richardson coefficients are computed
//! by enumerating LR skew tableaux with backtracking and are memoized in a
//! process-wide cache.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from its parts, rejecting sequences that increase.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        Self::from_sorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (zero-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_row(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    /// Compact rendering with exponents for repeated parts, e.g. `(3,1^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_parts(f, &self.0)?;
        write!(f, ")")
    }
}

pub(crate) fn write_parts(f: &mut impl fmt::Write, parts: &[u32]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if !first {
            write!(f, ",")?;
        }
        first = false;
        if j - i > 1 {
            write!(f, "{}^{}", parts[i], j - i)?;
        } else {
            write!(f, "{}", parts[i])?;
        }
        i = j;
    }
    Ok(())
}

/// An ordered pair `(λ^L, λ^R)` of partitions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The maximal atypical bipartition `(μ; μ*)`, written `(μ)` in shorthand.
    pub fn max_atypical(mu: Partition) -> Self {
        let right = mu.conjugate();
        Bipartition { left: mu, right }
    }

    /// `(i; 1^i)`, the label of the mixed tensor 𝔸_{S^i}.
    pub fn sym(i: u32) -> Self {
        Bipartition { left: Partition::row(i), right: Partition::column(i) }
    }

    /// `(1^i; i)`, the label of the mixed tensor 𝔸_{Λ^i}.
    pub fn alt(i: u32) -> Self {
        Bipartition { left: Partition::column(i), right: Partition::row(i) }
    }

    pub fn bisize(&self) -> (u32, u32) {
        (self.left.size(), self.right.size())
    }

    pub fn total_size(&self) -> u32 {
        self.left.size() + self.right.size()
    }

    pub fn is_max_atypical(&self) -> bool {
        self.right == self.left.conjugate()
    }

    /// Swaps left and right; corresponds to taking duals of mixed tensors.
    pub fn transpose(&self) -> Bipartition {
        Bipartition { left: self.right.clone(), right: self.left.clone() }
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_parts(f, self.left.parts())?;
        write!(f, "|")?;
        write_parts(f, self.right.parts())?;
        write!(f, ")")
    }
}

/// Finite integer combination of partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionSum {
    terms: BTreeMap<Partition, i64>,
}

impl PartitionSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, p: Partition, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
        }
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: i64) -> PartitionSum {
        let mut out = PartitionSum::new();
        for (p, c) in self.iter() {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    /// Product in the ring of symmetric functions (Schur basis).
    pub fn mul(&self, other: &PartitionSum) -> PartitionSum {
        let mut out = PartitionSum::new();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                for (l, c) in lr_product(a, b).iter() {
                    out.add_term(l.clone(), ca * cb * c);
                }
            }
        }
        out
    }
}

impl std::ops::Add for &PartitionSum {
    type Output = PartitionSum;

    fn add(self, rhs: &PartitionSum) -> PartitionSum {
        let mut out = self.clone();
        for (p, c) in rhs.iter() {
            out.add_term(p.clone(), c);
        }
        out
    }
}

impl FromIterator<(Partition, i64)> for PartitionSum {
    fn from_iter<I: IntoIterator<Item = (Partition, i64)>>(iter: I) -> Self {
        let mut out = PartitionSum::new();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}

/// Every partition of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition contained in `mu` (including `()` and `mu`).
pub fn subpartitions(mu: &Partition) -> Vec<Partition> {
    fn rec(mu: &Partition, row: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == mu.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        for p in 0..=mu.part(row).min(max) {
            cur.push(p);
            rec(mu, row + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Partitions `λ ⊇ inner` with `|λ| = size`, at most `max_len` rows and at
/// most `max_width` columns.
fn partitions_between(inner: &Partition, size: u32, max_len: usize, max_width: u32) -> Vec<Partition> {
    fn rec(
        inner: &Partition,
        row: usize,
        rem: u32,
        max: u32,
        max_len: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        let floor: u32 = (row..inner.len().max(row)).map(|r| inner.part(r)).sum();
        if rem < floor {
            return;
        }
        if rem == 0 {
            if row >= inner.len() {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        if row >= max_len {
            return;
        }
        let lo = inner.part(row).max(1);
        for p in (lo..=rem.min(max)).rev() {
            cur.push(p);
            rec(inner, row + 1, rem - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    if size < inner.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(inner, 0, size, max_width, max_len, &mut Vec::new(), &mut out);
    out
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The Littlewood-Richardson coefficient `c^λ_{αβ}`.
pub fn lr_coeff(alpha: &Partition, beta: &Partition, lam: &Partition) -> u64 {
    if alpha.size() + beta.size() != lam.size() || !lam.contains(alpha) || !lam.contains(beta) {
        return 0;
    }
    if beta.is_empty() {
        return u64::from(alpha == lam);
    }
    if alpha.is_empty() {
        return u64::from(beta == lam);
    }
    let key = (alpha.clone(), beta.clone(), lam.clone());
    if let Some(&c) = lr_cache().read().expect("lr cache poisoned").get(&key) {
        return c;
    }
    let c = count_lr_tableaux(alpha, beta, lam);
    lr_cache().write().expect("lr cache poisoned").insert(key, c);
    c
}

/// Counts semistandard fillings of `lam/alpha` with content `beta` whose
/// reverse reading word (rows top to bottom, each right to left) is a
/// lattice word.
fn count_lr_tableaux(alpha: &Partition, beta: &Partition, lam: &Partition) -> u64 {
    let cells: Vec<(usize, usize)> = (0..lam.len())
        .flat_map(|r| (alpha.part(r) as usize..lam.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let width = lam.part(0) as usize;
    let mut grid = vec![0u32; lam.len() * width];
    let mut counts = vec![0u32; beta.len() + 1];

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        alpha: &'a Partition,
        lam: &'a Partition,
        beta: &'a Partition,
        width: usize,
    }

    fn rec(ctx: &Ctx, idx: usize, grid: &mut [u32], counts: &mut [u32]) -> u64 {
        if idx == ctx.cells.len() {
            return 1;
        }
        let (r, c) = ctx.cells[idx];
        // row weak: at most the entry to the right, when that cell is in the skew shape
        let mut hi = ctx.beta.len() as u32;
        if c + 1 < ctx.lam.part(r) as usize {
            hi = hi.min(grid[r * ctx.width + c + 1]);
        }
        // rows below the first can only hold entries up to r+1
        hi = hi.min(r as u32 + 1);
        // column strict: exceed the entry above, when that cell is in the skew shape
        let mut lo = 1;
        if r > 0 && c >= ctx.alpha.part(r - 1) as usize {
            lo = grid[(r - 1) * ctx.width + c] + 1;
        }
        let mut total = 0;
        for v in lo..=hi {
            let vi = v as usize;
            if counts[vi] >= ctx.beta.part(vi - 1) {
                continue;
            }
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            grid[r * ctx.width + c] = v;
            total += rec(ctx, idx + 1, grid, counts);
            counts[vi] -= 1;
        }
        grid[r * ctx.width + c] = 0;
        total
    }

    let ctx = Ctx { cells: &cells, alpha, lam, beta, width };
    rec(&ctx, 0, &mut grid, &mut counts)
}

/// `Σ_λ c^λ_{αβ} λ`.
pub fn lr_product(alpha: &Partition, beta: &Partition) -> PartitionSum {
    let size = alpha.size() + beta.size();
    let max_len = alpha.len() + beta.len();
    let max_width = alpha.part(0) + beta.part(0);
    let (big, small) = if alpha >= beta { (alpha, beta) } else { (beta, alpha) };
    partitions_between(big, size, max_len, max_width)
        .into_iter()
        .filter_map(|lam| {
            let c = lr_coeff(big, small, &lam);
            (c > 0).then_some((lam, c as i64))
        })
        .collect()
}

/// A pair `(κ, α)` with `c^μ_{κα} ≠ 0`, together with the coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor {
    pub kappa: Partition,
    pub alpha: Partition,
    pub coeff: u64,
}

/// All ways of splitting `mu` as an LR product, ordered by `|κ|`, then `κ`,
/// then `α`.
pub fn cofactorizations(mu: &Partition) -> Vec<Cofactor> {
    let mut out = Vec::new();
    for kappa in subpartitions(mu) {
        let rest = mu.size() - kappa.size();
        for alpha in partitions_of(rest) {
            if !mu.contains(&alpha) {
                continue;
            }
            let coeff = lr_coeff(&kappa, &alpha, mu);
            if coeff > 0 {
                out.push(Cofactor { kappa: kappa.clone(), alpha, coeff });
            }
        }
    }
    out.sort_by(|x, y| {
        (x.kappa.size(), &x.kappa, &x.alpha).cmp(&(y.kappa.size(), &y.kappa, &y.alpha))
    });
    out
}

/// Dominant weight `(a, b)`, `a ≥ b`, of an irreducible Gl(2)-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gl2Weight {
    pub a: i32,
    pub b: i32,
}

impl Gl2Weight {
    pub fn new(a: i32, b: i32) -> Result<Self> {
        if a < b {
            return Err(Error::InvalidArgument(format!("Gl(2) weight ({a},{b}) is not dominant")));
        }
        Ok(Gl2Weight { a, b })
    }

    pub fn dim(&self) -> i64 {
        i64::from(self.a - self.b + 1)
    }
}

impl fmt::Display for Gl2Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Clebsch-Gordan decomposition of `L(w1) ⊗ L(w2)` for Gl(2), returned as a
/// sorted multiset.
pub fn gl2_tensor(w1: Gl2Weight, w2: Gl2Weight) -> Vec<Gl2Weight> {
    gl2_tensor_shifted(w1, w2, (-w1.b).max(-w2.b))
        .expect("the minimal shift always yields partitions")
}

/// As [`gl2_tensor`], computed after twisting both factors by `det^shift`.
/// Fails when a shifted weight is not a partition.
pub fn gl2_tensor_shifted(w1: Gl2Weight, w2: Gl2Weight, shift: i32) -> Result<Vec<Gl2Weight>> {
    let as_partition = |w: Gl2Weight| -> Result<Partition> {
        let (a, b) = (w.a + shift, w.b + shift);
        if b < 0 {
            return Err(Error::InvalidArgument(format!(
                "shift {shift} leaves {w} with a negative entry"
            )));
        }
        Partition::new(vec![a as u32, b as u32])
    };
    let p1 = as_partition(w1)?;
    let p2 = as_partition(w2)?;
    let mut out = Vec::new();
    for (lam, c) in lr_product(&p1, &p2).iter() {
        if lam.len() > 2 {
            continue;
        }
        let w = Gl2Weight {
            a: lam.part(0) as i32 - 2 * shift,
            b: lam.part(1) as i32 - 2 * shift,
        };
        for _ in 0..c {
            out.push(w);
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    Ok(out)
}
