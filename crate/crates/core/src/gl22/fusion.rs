//! Composition factors and Loewy structure of `S^i ⊗ S^j` for Gl(2|2).
//!
//! [`k0_fuse_recursive`] derives the maximal atypical composition factors by
//! comparing two expansions of `[𝔸_{S^i}][𝔸_{S^j}]`: the product of the known
//! Loewy layers of the two factors, and the closed decomposition of the tensor
//! product into mixed tensors. The pair of top simples contributes the single
//! unknown `[S^i ⊗ S^j]`. Every other pair is a Berezin twist of a product
//! with smaller indices. The only seed is `S^i ⊗ S^0 = S^i`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::k0::{K0Gamma, LoewyPresentation, SimpleGamma};
use super::projective::{k0_al, k0_as, k0_p, r_to_p};
use super::typical::{typical_summands, TypicalWeight};
use crate::deligne::{closed_as_as, ClosedFormulaResult, SymKind};
use crate::error::{Error, Result};

/// Expands a closed decomposition into K₀ of the maximal atypical block.
pub fn closed_to_k0(c: &ClosedFormulaResult) -> Result<K0Gamma> {
    let mut out = K0Gamma::zero();
    for &(kind, i, m) in &c.symmetric_terms {
        let class = match kind {
            SymKind::Sym => k0_as(i64::from(i))?,
            SymKind::Alt => k0_al(i64::from(i))?,
        };
        out.add_scaled(&class, m);
    }
    for (mu, m) in &c.mixed_terms {
        if mu.len() != 2 {
            return Err(Error::InvalidArgument(format!("R{mu} has no Gl(2|2) K0 class here")));
        }
        let p = r_to_p(i64::from(mu.part(0)), i64::from(mu.part(1)))?;
        out.add_scaled(&k0_p(p.a, p.b)?, *m);
    }
    Ok(out)
}

fn fuse_cache() -> &'static RwLock<HashMap<(i64, i64), K0Gamma>> {
    static CACHE: OnceLock<RwLock<HashMap<(i64, i64), K0Gamma>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Maximal atypical composition factors of `S^i ⊗ S^j`, solved recursively.
pub fn k0_fuse_recursive(i: i64, j: i64) -> Result<K0Gamma> {
    if i < 0 || j < 0 {
        return Err(Error::InvalidArgument(format!("S^{i} ⊗ S^{j} needs non-negative indices")));
    }
    let (i, j) = (i.max(j), i.min(j));
    if j == 0 {
        return Ok(K0Gamma::simple(SimpleGamma::sym(i)));
    }
    if let Some(x) = fuse_cache().read().expect("fuse cache poisoned").get(&(i, j)) {
        return Ok(x.clone());
    }
    let rhs = closed_to_k0(&closed_as_as(i as u32, j as u32, 2)?)?;
    let (left, right) = (k0_as(i)?, k0_as(j)?);
    let mut known = K0Gamma::zero();
    for (s, ms) in left.iter() {
        for (t, mt) in right.iter() {
            if s == SimpleGamma::sym(i) && t == SimpleGamma::sym(j) {
                continue;
            }
            let part = k0_fuse_recursive(s.degree(), t.degree())?;
            known.add_scaled(&part.twist(s.b + t.b), ms * mt);
        }
    }
    let own = left.coeff(SimpleGamma::sym(i)) * right.coeff(SimpleGamma::sym(j));
    if own != 1 {
        return Err(Error::Inconsistency(format!("S^{i} ⊗ S^{j} occurs {own} times in its own expansion")));
    }
    let x = &rhs - &known;
    if !x.is_nonnegative() {
        return Err(Error::Inconsistency(format!("S^{i} ⊗ S^{j} solved to a virtual class {x:?}")));
    }
    fuse_cache().write().expect("fuse cache poisoned").insert((i, j), x.clone());
    Ok(x)
}

fn staircase(i: i64, j: i64) -> K0Gamma {
    (0..j).map(|v| SimpleGamma::at(i + j - 1 - v, v)).collect()
}

fn middle(i: i64, j: i64) -> K0Gamma {
    let mut out = K0Gamma::zero();
    for v in 0..=j {
        out.add_term(SimpleGamma::at(i + j - v, v), 1);
        out.add_term(SimpleGamma::at(i + j - v - 1, v - 1), 1);
    }
    if i == j {
        out.add_term(SimpleGamma::ber(i - 2), 1);
    }
    out
}

fn ordered(i: i64, j: i64) -> Result<(i64, i64)> {
    if i < 1 || j < 1 {
        return Err(Error::InvalidArgument(format!("indices must be positive, got ({i},{j})")));
    }
    Ok((i.max(j), i.min(j)))
}

/// Closed form of [`k0_fuse_recursive`] for `i, j ≥ 1`.
pub fn k0_fuse_closed(i: i64, j: i64) -> Result<K0Gamma> {
    let (i, j) = ordered(i, j)?;
    let mut out = K0Gamma::zero();
    out.add_scaled(&staircase(i, j), 2);
    out.add_scaled(&middle(i, j), 1);
    if i == j {
        out.add_term(SimpleGamma::ber(i - 1), 1);
    }
    Ok(out)
}

/// `w(S^i ⊗ S^j) = i + j - 2`.
pub fn w_invariant(i: i64, j: i64) -> i64 {
    i + j - 2
}

pub fn socle(i: i64, j: i64) -> Result<K0Gamma> {
    let (i, j) = ordered(i, j)?;
    let mut out = staircase(i, j);
    if i == j {
        out.add_term(SimpleGamma::ber(i - 1), 1);
    }
    Ok(out)
}

/// Upper bound for the socle of `S^i ⊗ S^j` coming from the socle of
/// `𝔸_{S^{i+1}} ⊗ 𝔸_{S^{j+1}}`.
pub fn socle_bound(i: i64, j: i64) -> Result<K0Gamma> {
    let (i, j) = ordered(i, j)?;
    let mut out = K0Gamma::zero();
    out.add_term(SimpleGamma::sym(i + j - 1), 3);
    for v in 1..j {
        out.add_term(SimpleGamma::at(i + j - 1 - v, v), 2);
    }
    if i == j {
        out.add_term(SimpleGamma::ber(i - 1), 1);
    }
    Ok(out)
}

/// Staircase simples agree with their duals twisted by `Ber^w`.
pub fn w_consistent(i: i64, j: i64) -> Result<bool> {
    let (i, j) = ordered(i, j)?;
    let w = w_invariant(i, j);
    let stairs = staircase(i, j);
    Ok(stairs.dual().twist(w) == stairs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDecomposition {
    pub i: i64,
    pub j: i64,
    pub split_simples: Vec<SimpleGamma>,
    pub big_module: LoewyPresentation,
    pub typicals: Vec<TypicalWeight>,
}

/// The decomposition of `S^i ⊗ S^j` into a Loewy length three module, split
/// simple summands and typical summands.
pub fn decompose(i: i64, j: i64) -> Result<TensorDecomposition> {
    let (i, j) = ordered(i, j)?;
    let stairs = staircase(i, j);
    let split_simples = if i == j { vec![SimpleGamma::ber(i - 1)] } else { Vec::new() };
    let big_module = LoewyPresentation::new(vec![stairs.clone(), middle(i, j), stairs]);
    let typicals = typical_summands(i, j)?;
    let out = TensorDecomposition { i, j, split_simples, big_module, typicals };
    let expected = k0_fuse_closed(i, j)?;
    if out.k0_gamma() != expected {
        return Err(Error::Inconsistency(format!("layers of S^{i} ⊗ S^{j} do not add up to its K0 class")));
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct WireDecomposition {
    split: Vec<[i64; 2]>,
    layers: Vec<Vec<[i64; 2]>>,
    typicals: Vec<[i64; 4]>,
    k0: Vec<[i64; 3]>,
    #[serde(default)]
    factors: Option<[i64; 2]>,
}

impl TensorDecomposition {
    /// K₀ class of the maximal atypical part.
    pub fn k0_gamma(&self) -> K0Gamma {
        let mut out = self.big_module.k0();
        for &s in &self.split_simples {
            out.add_term(s, 1);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pair = |s: &SimpleGamma| [s.a, s.b];
        let layers = self
            .big_module
            .layers
            .iter()
            .map(|l| l.to_multiset().expect("layers are effective").iter().map(pair).collect())
            .collect();
        let wire = WireDecomposition {
            split: self.split_simples.iter().map(pair).collect(),
            layers,
            typicals: self.typicals.iter().map(|t| [t.l1, t.l2, t.m1, t.m2]).collect(),
            k0: self.k0_gamma().iter().collect::<Vec<_>>().into_iter().rev().map(|(s, c)| [s.a, s.b, c]).collect(),
            factors: Some([self.i, self.j]),
        };
        serde_json::to_value(wire).expect("decomposition serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |e: String| Error::InvalidArgument(format!("bad decomposition JSON: {e}"));
        let wire: WireDecomposition = serde_json::from_value(v.clone()).map_err(|e| bad(e.to_string()))?;
        let simple = |p: &[i64; 2]| SimpleGamma::new(p[0], p[1]);
        let split_simples = wire.split.iter().map(simple).collect::<Result<Vec<_>>>()?;
        let layers = wire
            .layers
            .iter()
            .map(|l| l.iter().map(simple).collect::<Result<K0Gamma>>())
            .collect::<Result<Vec<_>>>()?;
        let typicals = wire
            .typicals
            .iter()
            .map(|t| TypicalWeight::new(t[0], t[1], t[2], t[3]))
            .collect::<Result<Vec<_>>>()?;
        let [i, j] = wire.factors.ok_or_else(|| bad("missing factors".to_string()))?;
        let out = TensorDecomposition { i, j, split_simples, big_module: LoewyPresentation::new(layers), typicals };
        let k0: K0Gamma = wire
            .k0
            .iter()
            .map(|t| SimpleGamma::new(t[0], t[1]).map(|s| (s, t[2])))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .collect();
        if k0 != out.k0_gamma() {
            return Err(bad("k0 does not match the layers".to_string()));
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "S^{} ⊗ S^{}", self.i, self.j);
        let split = if self.split_simples.is_empty() {
            "none".to_string()
        } else {
            self.split_simples.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" + ")
        };
        let _ = writeln!(s, "split:    {split}");
        let names = ["top", "middle", "socle"];
        for (idx, layer) in self.big_module.layers.iter().enumerate() {
            let name = names.get(idx).copied().unwrap_or("layer");
            let _ = writeln!(s, "{name:<9} {}", layer.to_text());
        }
        let typ = self.typicals.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" + ");
        let _ = writeln!(s, "typicals: {} ({})", if typ.is_empty() { "none".to_string() } else { typ }, self.typicals.len());
        let _ = write!(s, "K0:       {}", self.k0_gamma().to_text());
        s
    }

    /// Matrix layout with the split simples and typicals as extra summands.
    pub fn to_latex(&self) -> String {
        let mut s = format!("S^{{{}}} \\otimes S^{{{}}} = ", self.i, self.j);
        for x in &self.split_simples {
            let _ = write!(s, "{} \\oplus ", x.to_latex());
        }
        s.push_str("\\begin{pmatrix} ");
        let rows: Vec<String> = self.big_module.layers.iter().map(|l| l.to_latex()).collect();
        s.push_str(&rows.join(" \\\\ "));
        s.push_str(" \\end{pmatrix}");
        for t in &self.typicals {
            let _ = write!(s, " \\oplus {}", t.to_latex());
        }
        s
    }
}
