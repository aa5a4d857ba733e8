//! Weight diagrams of bipartitions and their cap matchings.
//!
//! Vertex `i` of the integer line carries `∧` when `i ∈ I_∧`, `∨` when
//! `i ∈ I_∨`, `×` when it lies in both sets and `○` when it lies in neither,
//! where
//!
//! ```text
//! I_∧(λ) = { λ^L_r - r + 1 : r ≥ 1 },    I_∨(λ) = { r - λ^R_r : r ≥ 1 }.
//! ```
//!
//! Only a finite window is stored. Everything left of the window is `∧` and
//! everything right of it is `∨`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Bipartition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Up,
    Down,
    Circle,
    Cross,
}

impl Label {
    pub fn symbol(self) -> char {
        match self {
            Label::Up => '^',
            Label::Down => 'v',
            Label::Circle => 'o',
            Label::Cross => 'x',
        }
    }

    pub fn from_symbol(c: char) -> Option<Label> {
        match c {
            '^' => Some(Label::Up),
            'v' => Some(Label::Down),
            'o' => Some(Label::Circle),
            'x' => Some(Label::Cross),
            _ => None,
        }
    }

    fn flipped(self) -> Label {
        match self {
            Label::Up => Label::Down,
            Label::Down => Label::Up,
            other => other,
        }
    }

    fn in_up_set(self) -> bool {
        matches!(self, Label::Up | Label::Cross)
    }

    fn in_down_set(self) -> bool {
        matches!(self, Label::Down | Label::Cross)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDiagram {
    window_lo: i64,
    labels: Vec<Label>,
}

/// Set of caps `(i, j)`, `i < j`, joining a `∨` at `i` to an `∧` at `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapMatching {
    pub caps: BTreeSet<(i64, i64)>,
}

impl CapMatching {
    pub fn len(&self) -> usize {
        self.caps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.caps.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramInvariants {
    pub rk: u32,
    pub d: u32,
    pub k: u32,
}

impl WeightDiagram {
    /// Builds a diagram from explicit window labels.
    pub fn from_labels(window_lo: i64, labels: Vec<Label>) -> Self {
        WeightDiagram { window_lo, labels }
    }

    pub fn window_lo(&self) -> i64 {
        self.window_lo
    }

    pub fn window_hi(&self) -> i64 {
        self.window_lo + self.labels.len() as i64 - 1
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// The label of any integer vertex, tails included.
    pub fn label(&self, i: i64) -> Label {
        if i < self.window_lo {
            Label::Up
        } else if i > self.window_hi() {
            Label::Down
        } else {
            self.labels[(i - self.window_lo) as usize]
        }
    }

    fn set_label(&mut self, i: i64, l: Label) {
        let idx = (i - self.window_lo) as usize;
        self.labels[idx] = l;
    }

    /// Re-frames the diagram over `[lo, hi]`. Fails if a non-tail label would
    /// be cut off.
    pub fn with_window(&self, lo: i64, hi: i64) -> Result<WeightDiagram> {
        if lo > hi {
            return Err(Error::InvalidArgument(format!("empty window {lo}..{hi}")));
        }
        for i in self.window_lo..lo {
            if self.label(i) != Label::Up {
                return Err(Error::InvalidArgument(format!(
                    "window {lo}..{hi} cuts off vertex {i} labelled '{}'",
                    self.label(i).symbol()
                )));
            }
        }
        for i in hi + 1..=self.window_hi() {
            if self.label(i) != Label::Down {
                return Err(Error::InvalidArgument(format!(
                    "window {lo}..{hi} cuts off vertex {i} labelled '{}'",
                    self.label(i).symbol()
                )));
            }
        }
        Ok(WeightDiagram { window_lo: lo, labels: (lo..=hi).map(|i| self.label(i)).collect() })
    }

    /// The image under `i ↦ 1 - i` with `∧` and `∨` exchanged.
    pub fn mirror(&self) -> WeightDiagram {
        let lo = 1 - self.window_hi();
        let labels = self.labels.iter().rev().map(|l| l.flipped()).collect();
        WeightDiagram { window_lo: lo, labels }
    }

    /// ASCII rendering: a label row followed by a coordinate row.
    pub fn render(&self) -> String {
        let lo = self.window_lo;
        let hi = self.window_hi();
        let width = lo.to_string().len().max(hi.to_string().len()) + 1;
        let mut top = String::new();
        let mut bottom = String::new();
        for i in lo..=hi {
            top.push_str(&format!("{:>width$}", self.label(i).symbol()));
            bottom.push_str(&format!("{i:>width$}"));
        }
        format!("{top}\n{bottom}")
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn weight_diagram(bip: &Bipartition) -> WeightDiagram {
    let (l, r) = (&bip.left, &bip.right);
    let lo = (1 - l.len() as i64).min(1 - i64::from(r.part(0))) - 1;
    let hi = (r.len() as i64).max(i64::from(l.part(0))) + 1;
    let up: BTreeSet<i64> = (1..=l.len() as i64 + 1).map(|k| i64::from(l.part(k as usize - 1)) - k + 1).collect();
    let down: BTreeSet<i64> = (1..=r.len() as i64 + 1).map(|k| k - i64::from(r.part(k as usize - 1))).collect();
    let in_up = |i: i64| i <= -(l.len() as i64) || up.contains(&i);
    let in_down = |i: i64| i > r.len() as i64 || down.contains(&i);
    let labels = (lo..=hi)
        .map(|i| match (in_up(i), in_down(i)) {
            (true, true) => Label::Cross,
            (true, false) => Label::Up,
            (false, true) => Label::Down,
            (false, false) => Label::Circle,
        })
        .collect();
    WeightDiagram { window_lo: lo, labels }
}

/// Bracket matching with `∨` opening and `∧` closing; `○` and `×` are skipped.
pub fn caps(dg: &WeightDiagram) -> CapMatching {
    let mut open = Vec::new();
    let mut caps = BTreeSet::new();
    for i in dg.window_lo()..=dg.window_hi() {
        match dg.label(i) {
            Label::Down => open.push(i),
            Label::Up => {
                if let Some(j) = open.pop() {
                    caps.insert((j, i));
                }
            }
            _ => {}
        }
    }
    CapMatching { caps }
}

pub fn invariants(dg: &WeightDiagram) -> DiagramInvariants {
    let rk = dg.labels().iter().filter(|&&l| l == Label::Cross).count() as u32;
    let d = caps(dg).len() as u32;
    DiagramInvariants { rk, d, k: rk + d }
}

pub fn bipartition_invariants(bip: &Bipartition) -> DiagramInvariants {
    invariants(&weight_diagram(bip))
}

/// `(n|n)`-cross test: `k(λ) ≤ n`.
pub fn is_cross(bip: &Bipartition, n: u32) -> bool {
    bipartition_invariants(bip).k <= n
}

pub fn is_max_atypical(bip: &Bipartition) -> bool {
    bip.is_max_atypical()
}

pub fn read_bipartition(dg: &WeightDiagram) -> Result<Bipartition> {
    let lo = dg.window_lo();
    let hi = dg.window_hi();
    let ups: Vec<i64> = (lo..=hi).rev().filter(|&i| dg.label(i).in_up_set()).collect();
    let downs: Vec<i64> = (lo..=hi).filter(|&i| dg.label(i).in_down_set()).collect();
    if ups.len() as i64 != 1 - lo {
        return Err(Error::Malformed(format!(
            "{} vertices of type ^/x in window {lo}..{hi}, expected {}",
            ups.len(),
            1 - lo
        )));
    }
    if downs.len() as i64 != hi {
        return Err(Error::Malformed(format!(
            "{} vertices of type v/x in window {lo}..{hi}, expected {hi}",
            downs.len()
        )));
    }
    let to_parts = |values: Vec<i64>, side: &str| -> Result<Partition> {
        if values.iter().any(|&v| v < 0) {
            return Err(Error::Malformed(format!("{side} part would be negative")));
        }
        let parts: Vec<u32> = values.into_iter().map(|v| v as u32).collect();
        Partition::new(parts).map_err(|_| Error::Malformed(format!("{side} parts are not weakly decreasing")))
    };
    let left = to_parts(ups.iter().enumerate().map(|(r, &v)| v + r as i64).collect(), "left")?;
    let right = to_parts(downs.iter().enumerate().map(|(r, &v)| r as i64 + 1 - v).collect(), "right")?;
    Ok(Bipartition::new(left, right))
}

/// Every bipartition obtained by reversing an arbitrary subset of the caps of
/// `bip`'s diagram. The empty subset yields `bip` itself.
pub fn linked_orientations(bip: &Bipartition) -> Vec<Bipartition> {
    let dg = weight_diagram(bip);
    let cap_list: Vec<(i64, i64)> = caps(&dg).caps.into_iter().collect();
    let mut out = Vec::with_capacity(1 << cap_list.len());
    for mask in 0u64..(1u64 << cap_list.len()) {
        let mut swapped = dg.clone();
        for (bit, &(i, j)) in cap_list.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                swapped.set_label(i, Label::Up);
                swapped.set_label(j, Label::Down);
            }
        }
        out.push(read_bipartition(&swapped).expect("cap reversal keeps the diagram well formed"));
    }
    out
}
