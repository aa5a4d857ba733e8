use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{gl2_tensor, Bipartition, Gl2Weight};

/// Highest weight `(λ₁, λ₂ | μ₁, μ₂)` of a typical Gl(2|2) simple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypicalWeight {
    pub l1: i64,
    pub l2: i64,
    pub m1: i64,
    pub m2: i64,
}

impl TypicalWeight {
    pub fn new(l1: i64, l2: i64, m1: i64, m2: i64) -> Result<Self> {
        if l1 < l2 || m1 < m2 {
            return Err(Error::InvalidArgument(format!("({l1},{l2}|{m1},{m2}) is not dominant")));
        }
        if (m1, m2) == (-l2, -l1) {
            return Err(Error::InvalidArgument(format!("({l1},{l2}|{m1},{m2}) is maximal atypical")));
        }
        Ok(TypicalWeight { l1, l2, m1, m2 })
    }

    /// Tensoring with `Ber^u`.
    pub fn twist(&self, u: i64) -> Self {
        TypicalWeight { l1: self.l1 + u, l2: self.l2 + u, m1: self.m1 - u, m2: self.m2 - u }
    }

    pub fn to_latex(&self) -> String {
        format!("L({},{}|{},{})", self.l1, self.l2, self.m1, self.m2)
    }
}

impl fmt::Display for TypicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{}|{},{})", self.l1, self.l2, self.m1, self.m2)
    }
}

/// `{ L(i+j-k, k | -r, r-i-j) : 0 ≤ k, r ≤ min(i,j), k ≠ r }`, sorted.
pub fn typical_summands(i: i64, j: i64) -> Result<Vec<TypicalWeight>> {
    if i < 1 || j < 1 {
        return Err(Error::InvalidArgument(format!("indices must be positive, got ({i},{j})")));
    }
    let m = i.min(j);
    let mut out = Vec::new();
    for k in 0..=m {
        for r in (0..=m).filter(|&r| r != k) {
            out.push(TypicalWeight { l1: i + j - k, l2: k, m1: -r, m2: r - i - j });
        }
    }
    out.sort();
    Ok(out)
}

/// The same multiset, computed as the non-Γ part of the box product of the
/// Gl(2) factors `(i,0)⊗(j,0)` and `(0,-i)⊗(0,-j)`.
pub fn typical_summands_via_pi(i: i64, j: i64) -> Result<Vec<TypicalWeight>> {
    if i < 1 || j < 1 {
        return Err(Error::InvalidArgument(format!("indices must be positive, got ({i},{j})")));
    }
    let w = |a: i64, b: i64| Gl2Weight::new(a as i32, b as i32).expect("dominant by construction");
    let evens = gl2_tensor(w(i, 0), w(j, 0));
    let odds = gl2_tensor(w(0, -i), w(0, -j));
    let mut out = Vec::new();
    for e in &evens {
        for o in &odds {
            let (l1, l2, m1, m2) = (i64::from(e.a), i64::from(e.b), i64::from(o.a), i64::from(o.b));
            if (m1, m2) != (-l2, -l1) {
                out.push(TypicalWeight { l1, l2, m1, m2 });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Highest weight of the typical mixed tensor `R((a,b); (2^r, 1^s))` with
/// `a + b = 2r + s`, which is `L(a, b | -r, -r-s)`.
pub fn typical_weight_of(bip: &Bipartition) -> Result<TypicalWeight> {
    let bad = || Error::InvalidArgument(format!("{bip} is not a typical Gl(2|2) mixed tensor"));
    if bip.left.len() > 2 || bip.right.part(0) > 2 || bip.is_max_atypical() {
        return Err(bad());
    }
    let r = bip.right.parts().iter().filter(|&&p| p == 2).count() as i64;
    let s = bip.right.parts().iter().filter(|&&p| p == 1).count() as i64;
    let (a, b) = (i64::from(bip.left.part(0)), i64::from(bip.left.part(1)));
    if a + b != 2 * r + s {
        return Err(bad());
    }
    TypicalWeight::new(a, b, -r, -r - s).map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_bipartition;

    #[test]
    fn small_cases() {
        let t = |l1, l2, m1, m2| TypicalWeight { l1, l2, m1, m2 };
        let mut want = vec![t(2, 0, -1, -1), t(1, 1, 0, -2)];
        want.sort();
        assert_eq!(typical_summands(1, 1).unwrap(), want);
        let mut want = vec![t(3, 0, -1, -2), t(2, 1, 0, -3)];
        want.sort();
        assert_eq!(typical_summands(2, 1).unwrap(), want);
        assert_eq!(typical_summands_via_pi(2, 1).unwrap(), want);
    }

    #[test]
    fn weights_of_mixed_tensors() {
        let b = parse_bipartition("(2|1,1)").unwrap();
        assert!(typical_weight_of(&b).is_err());
        let b = parse_bipartition("(2|2)").unwrap();
        assert_eq!(typical_weight_of(&b).unwrap(), TypicalWeight { l1: 2, l2: 0, m1: -1, m2: -1 });
        let b = parse_bipartition("(1,1|1,1)").unwrap();
        assert_eq!(typical_weight_of(&b).unwrap(), TypicalWeight { l1: 1, l2: 1, m1: 0, m2: -2 });
        assert!(typical_weight_of(&parse_bipartition("(1,1,1|3)").unwrap()).is_err());
    }

    #[test]
    fn twist_moves_both_halves() {
        let w = TypicalWeight { l1: 3, l2: 0, m1: -1, m2: -2 };
        assert_eq!(w.twist(2), TypicalWeight { l1: 5, l2: 2, m1: -3, m2: -4 });
    }
}
