//! Self-verification suites behind `superfuse check`.
//!
//! Each suite is a list of named checks. A check sweeps one identity up to a
//! bound and reports the first counterexample it meets. Sweeps over
//! independent index pairs run on the rayon pool.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::deligne::{
    closed_as_al, closed_as_as, gl0_tensor, lift, lift_inv, project_max_atypical, rt_tensor, truncate, RtElement,
};
use crate::diagram::{bipartition_invariants, linked_orientations};
use crate::error::{Error, Result};
use crate::gl22::{
    d_fuse_expected, d_hom, decompose, k0_al, k0_as, k0_fuse_closed, k0_fuse_recursive, k0_p, p_identity_check,
    r_to_p, sdim, socle, socle_bound, typical_summands, typical_summands_via_pi, typical_weight_of, w_consistent,
    K0Gamma, SimpleGamma, TypicalWeight,
};
use crate::partition::{
    gl2_tensor, lr_coeff, lr_product, partitions_of, subpartitions, Bipartition, Gl2Weight, Partition, PartitionSum,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lr,
    Deligne,
    Gl22,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lr" => Ok(Suite::Lr),
            "deligne" => Ok(Suite::Deligne),
            "gl22" => Ok(Suite::Gl22),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidArgument(format!("unknown suite '{s}', expected lr, deligne, gl22 or all"))),
        }
    }
}

impl Suite {
    /// Bound used when `--max` is not given.
    pub fn default_max(self) -> u32 {
        match self {
            Suite::Lr => 8,
            Suite::Deligne => 6,
            Suite::Gl22 => 8,
            Suite::All => 5,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<28} {}  [{:.1?}]", self.name, self.detail, self.elapsed)
    }
}

type Check = std::result::Result<String, String>;

fn run(name: &str, f: impl FnOnce() -> Check) -> CheckResult {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => CheckResult { name: name.to_string(), passed: true, detail, elapsed },
        Err(detail) => CheckResult { name: name.to_string(), passed: false, detail, elapsed },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_error(results: Vec<std::result::Result<(), String>>) -> std::result::Result<(), String> {
    results.into_iter().collect()
}

/// Readings of ambiguous notation that the checks rely on.
pub fn interpretations() -> &'static [&'static str] {
    &[
        "A_{S^+2} in the i=j display is read as A_{S^2}",
        "a bare coefficient 2A in the i=j display is read as 2 A_{S^1}",
        "the index-zero term A_{S^0} of the Gl(1|1) product is A_{Lambda^2} = R((1,1);(2))",
        "the mixed-tensor block of the closed formulas is R(i+j-k,1^k) + 2R(i+j-k,1^(k-1)) + R(i+j-k,1^(k-2)) summed over k",
    ]
}

pub fn run_suite(suite: Suite, max: Option<u32>) -> Vec<CheckResult> {
    let n = max.unwrap_or_else(|| suite.default_max());
    match suite {
        Suite::Lr => lr_checks(n),
        Suite::Deligne => deligne_checks(n),
        Suite::Gl22 => gl22_checks(n),
        Suite::All => {
            let mut out = lr_checks(max.unwrap_or(8));
            out.extend(deligne_checks(max.unwrap_or(6)));
            out.extend(gl22_checks(max.unwrap_or(8)));
            out.push(run("e2e.residue", || residue_check(n.min(5))));
            out
        }
    }
}

// ---------------------------------------------------------------------------

fn lr_checks(n: u32) -> Vec<CheckResult> {
    vec![
        run("lr.symmetry", || {
            let results = (0..=n)
                .into_par_iter()
                .map(|size| {
                    for lam in partitions_of(size) {
                        for alpha in subpartitions(&lam) {
                            for beta in partitions_of(size - alpha.size()) {
                                let (x, y) = (lr_coeff(&alpha, &beta, &lam), lr_coeff(&beta, &alpha, &lam));
                                ensure(x == y, || format!("c^{lam}_{{{alpha},{beta}}} = {x} but swapped {y}"))?;
                            }
                        }
                    }
                    Ok(())
                })
                .collect();
            first_error(results)?;
            Ok(format!("c^λ_αβ = c^λ_βα for |λ| ≤ {n}"))
        }),
        run("lr.pieri", || {
            for size in 0..=n {
                for lam in partitions_of(size) {
                    for alpha in subpartitions(&lam) {
                        let k = size - alpha.size();
                        let strip = (0..lam.len()).all(|r| r + 1 >= lam.len() || lam.part(r + 1) <= alpha.part(r));
                        let got = lr_coeff(&alpha, &Partition::row(k), &lam);
                        ensure(got == u64::from(strip), || format!("Pieri fails for {lam}/{alpha}"))?;
                    }
                }
            }
            Ok(format!("horizontal strips for |λ| ≤ {n}"))
        }),
        run("lr.associativity", || {
            let budget = n.min(7);
            let small: Vec<Partition> = (0..=budget).flat_map(partitions_of).collect();
            let triples: Vec<(&Partition, &Partition, &Partition)> = small
                .iter()
                .flat_map(|a| small.iter().map(move |b| (a, b)))
                .flat_map(|(a, b)| small.iter().map(move |c| (a, b, c)))
                .filter(|(a, b, c)| a.size() + b.size() + c.size() <= budget)
                .collect();
            let results = triples
                .par_iter()
                .map(|&(a, b, c)| {
                    let single = |p: &Partition| {
                        let mut s = PartitionSum::new();
                        s.add_term(p.clone(), 1);
                        s
                    };
                    let left = lr_product(a, b).mul(&single(c));
                    let right = single(a).mul(&lr_product(b, c));
                    ensure(left == right, || format!("(s{a} s{b}) s{c} differs from s{a} (s{b} s{c})"))
                })
                .collect();
            first_error(results)?;
            Ok(format!("{} triples with total size ≤ {budget}", triples.len()))
        }),
        run("lr.gl2-dimension", || {
            let lim = n as i32;
            for a1 in -lim..=lim {
                for b1 in -lim..=a1 {
                    for a2 in -2..=3 {
                        for b2 in -2..=a2 {
                            let (w1, w2) = (Gl2Weight { a: a1, b: b1 }, Gl2Weight { a: a2, b: b2 });
                            let total: i64 = gl2_tensor(w1, w2).iter().map(Gl2Weight::dim).sum();
                            ensure(total == w1.dim() * w2.dim(), || format!("dim of {w1} ⊗ {w2} is {total}"))?;
                        }
                    }
                }
            }
            Ok("Σ dim = dim·dim over a window of weights".to_string())
        }),
    ]
}

// ---------------------------------------------------------------------------

fn sym(i: u32) -> RtElement {
    RtElement::basis(Bipartition::sym(i))
}

fn alt(i: u32) -> RtElement {
    RtElement::basis(Bipartition::alt(i))
}

fn pairs(n: u32) -> Vec<(u32, u32)> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect()
}

fn deligne_checks(n: u32) -> Vec<CheckResult> {
    vec![
        run("deligne.lift-identities", || {
            let bound = n.max(2) + 4;
            let mx = |p: &[u32]| Bipartition::max_atypical(Partition::new(p.to_vec()).unwrap());
            let sorted = |mut v: Vec<Bipartition>| {
                v.sort();
                v
            };
            for i in 1..=bound {
                let want = sorted(vec![mx(&[i]), mx(&[i - 1])]);
                ensure(sorted(linked_orientations(&mx(&[i]))) == want, || format!("lift({i})"))?;
                let col = |m| Bipartition::max_atypical(Partition::column(m));
                ensure(sorted(linked_orientations(&col(i))) == sorted(vec![col(i), col(i - 1)]), || {
                    format!("lift(1^{i})")
                })?;
                for b in 1..=i {
                    let got = sorted(linked_orientations(&mx(&[i, b])));
                    let want = if b < i {
                        sorted(vec![mx(&[i, b]), mx(&[i, b - 1]), mx(&[i - 1, b]), mx(&[i - 1, b - 1])])
                    } else if i >= 2 {
                        sorted(vec![mx(&[i, i]), mx(&[i, i - 1]), mx(&[i - 1, i - 2]), mx(&[i - 2, i - 2])])
                    } else {
                        continue;
                    };
                    ensure(got == want, || format!("lift({i},{b})"))?;
                }
            }
            Ok(format!("lift of rows, columns and two-row shapes up to {bound}"))
        }),
        run("deligne.lift-roundtrip", || {
            for size in 0..=n.min(6) {
                for left_size in 0..=size {
                    for l in partitions_of(left_size) {
                        for r in partitions_of(size - left_size) {
                            let x = RtElement::basis(Bipartition::new(l.clone(), r));
                            ensure(lift_inv(&lift(&x)) == x, || format!("lift_inv(lift({})) ≠ itself", x.to_text()))?;
                        }
                    }
                }
            }
            Ok(format!("lift_inv ∘ lift = id on bipartitions of total size ≤ {}", n.min(6)))
        }),
        run("deligne.commutativity", || {
            let ops: Vec<RtElement> = (1..=n.min(4)).flat_map(|i| [sym(i), alt(i)]).collect();
            for x in &ops {
                for y in &ops {
                    ensure(rt_tensor(x, y) == rt_tensor(y, x), || format!("{} ⊗ {}", x.to_text(), y.to_text()))?;
                }
            }
            Ok(format!("{} ordered pairs", ops.len() * ops.len()))
        }),
        run("deligne.closed-formulas", || {
            let results = pairs(n)
                .into_par_iter()
                .map(|(i, j)| {
                    let ss = gl0_tensor(&sym(i), &sym(j)).map_err(|e| e.to_string())?;
                    for t in 2..=4 {
                        let got = project_max_atypical(&truncate(&ss, t));
                        let want = closed_as_as(i, j, t).map_err(|e| e.to_string())?.expand();
                        ensure(got == want, || format!("AS{i}⊗AS{j} at n={t}: {} vs {}", got.to_text(), want.to_text()))?;
                    }
                    if i >= j {
                        let sl = gl0_tensor(&sym(i), &alt(j)).map_err(|e| e.to_string())?;
                        for t in 2..=4 {
                            let got = project_max_atypical(&truncate(&sl, t));
                            let want = closed_as_al(i, j, t).map_err(|e| e.to_string())?.expand();
                            ensure(got == want, || {
                                format!("AS{i}⊗AL{j} at n={t}: {} vs {}", got.to_text(), want.to_text())
                            })?;
                        }
                    }
                    Ok(())
                })
                .collect();
            first_error(results)?;
            Ok(format!("AS⊗AS and AS⊗AL against the brute-force pipeline, i,j ≤ {n}, n = 2..4"))
        }),
        run("deligne.gl11-truncation", || {
            let results = pairs(n)
                .into_par_iter()
                .map(|(i, j)| {
                    let got = truncate(&gl0_tensor(&sym(i), &sym(j)).map_err(|e| e.to_string())?, 1);
                    let mut want = sym(i + j);
                    want.add_assign_scaled(&sym(i + j - 1), 2);
                    want.add_assign_scaled(&if i + j == 2 { alt(2) } else { sym(i + j - 2) }, 1);
                    ensure(got == want, || format!("AS{i}⊗AS{j} at n=1: {}", got.to_symbolic_text()))
                })
                .collect();
            first_error(results)?;
            Ok(format!("AS{{i+j}} + 2 AS{{i+j-1}} + AS{{i+j-2}} for i,j ≤ {n}"))
        }),
    ]
}

// ---------------------------------------------------------------------------

fn gl22_checks(n: u32) -> Vec<CheckResult> {
    let n = i64::from(n);
    let err = |e: Error| e.to_string();
    vec![
        run("gl22.projective-identity", || {
            for i in 1..=n.max(1) + 2 {
                ensure(p_identity_check(i).map_err(err)?, || format!("P[{i},0]"))?;
            }
            Ok(format!("P[i,0] = 2 A_S^(i+1) + B^-1 A_S^(i+2) + B A_S^i for i ≤ {}", n.max(1) + 2))
        }),
        run("gl22.recursive-vs-closed", || {
            for i in 1..=n {
                for j in 1..=i {
                    let (r, c) = (k0_fuse_recursive(i, j).map_err(err)?, k0_fuse_closed(i, j).map_err(err)?);
                    ensure(r == c, || format!("S^{i}⊗S^{j}: {} vs {}", r.to_text(), c.to_text()))?;
                }
            }
            Ok(format!("1 ≤ j ≤ i ≤ {n}"))
        }),
        run("gl22.d-homomorphism", || {
            for i in 1..=n {
                for j in 1..=n {
                    let d = d_hom(&k0_fuse_closed(i, j).map_err(err)?);
                    ensure(d == d_fuse_expected(i, j), || format!("d(S^{i}⊗S^{j}) = {d}"))?;
                }
            }
            for a in 0..=n {
                for b in 0..=a {
                    let d = d_hom(&k0_p(a, b).map_err(err)?);
                    ensure(d.is_zero(), || format!("d(P[{a},{b}]) = {d}"))?;
                }
            }
            Ok(format!("four-term formula and d(P[a,b]) = 0 up to {n}"))
        }),
        run("gl22.superdimension", || {
            for i in 1..=n + 2 {
                let s = sdim(&K0Gamma::simple(SimpleGamma::sym(i)));
                ensure(s == 2 * sign(i), || format!("sdim(S^{i}) = {s}"))?;
            }
            for i in 1..=n {
                for j in 1..=n {
                    let s = sdim(&decompose(i, j).map_err(err)?.k0_gamma());
                    ensure(s == 4 * sign(i + j), || format!("sdim of the Γ-part of S^{i}⊗S^{j} is {s}"))?;
                }
            }
            Ok(format!("sdim(S^i) = 2(-1)^i and Γ-part 4(-1)^(i+j) up to {n}"))
        }),
        run("gl22.typicals", || {
            for i in 1..=n {
                for j in 1..=n {
                    let (a, b) = (typical_summands(i, j).map_err(err)?, typical_summands_via_pi(i, j).map_err(err)?);
                    ensure(a == b, || format!("typicals of S^{i}⊗S^{j} disagree"))?;
                    let m = i.min(j) as usize;
                    ensure(a.len() == m * (m + 1), || format!("S^{i}⊗S^{j} has {} typicals", a.len()))?;
                }
            }
            Ok(format!("direct = via Gl(2)×Gl(2), count min·(min+1), up to {n}"))
        }),
        run("gl22.socle", || {
            for i in 1..=n {
                for j in 1..=i {
                    let soc = socle(i, j).map_err(err)?;
                    ensure(socle_bound(i, j).map_err(err)?.contains(&soc), || format!("socle of S^{i}⊗S^{j} escapes its bound"))?;
                    ensure(w_consistent(i, j).map_err(err)?, || format!("w-consistency of S^{i}⊗S^{j}"))?;
                    let dec = decompose(i, j).map_err(err)?;
                    ensure(dec.big_module.is_self_dual(), || format!("layers of S^{i}⊗S^{j} are not *-self-dual"))?;
                    ensure(dec.big_module.socle() == Some(&soc) || i == j, || format!("socle layer of S^{i}⊗S^{j}"))?;
                }
            }
            Ok(format!("socle ⊆ bound, w-consistent, self-dual layers up to {n}"))
        }),
    ]
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

// ---------------------------------------------------------------------------

/// What is left of `[𝔸_{S^i}][𝔸_{S^j}]` in Gl(2|2) once every twisted product
/// of smaller `S^p ⊗ S^q` is removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residue {
    pub k0: K0Gamma,
    pub typicals: BTreeMap<TypicalWeight, i64>,
}

fn gl22_class(b: &Bipartition) -> Result<K0Gamma> {
    let mu = &b.left;
    if mu.is_empty() {
        Ok(K0Gamma::simple(SimpleGamma::ber(0)))
    } else if mu.is_row() {
        k0_as(i64::from(mu.part(0)))
    } else if mu.is_column() {
        k0_al(mu.len() as i64)
    } else if mu.len() == 2 {
        let p = r_to_p(i64::from(mu.part(0)), i64::from(mu.part(1)))?;
        k0_p(p.a, p.b)
    } else {
        Err(Error::InvalidArgument(format!("{b} does not survive in Gl(2|2)")))
    }
}

/// Expands `truncate(gl0_tensor(𝔸_{S^i}, 𝔸_{S^j}), 2)` into Gl(2|2) classes
/// and subtracts every product except `S^i ⊗ S^j` itself.
pub fn deligne_residue(i: u32, j: u32) -> Result<Residue> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidArgument(format!("indices must be positive, got ({i},{j})")));
    }
    let prod = truncate(&gl0_tensor(&sym(i), &sym(j))?, 2);
    let mut k0 = K0Gamma::zero();
    let mut typicals = BTreeMap::new();
    for (b, c) in prod.iter() {
        if b.is_max_atypical() {
            k0.add_scaled(&gl22_class(b)?, c);
        } else {
            let inv = bipartition_invariants(b);
            if inv.rk != 2 {
                return Err(Error::Inconsistency(format!("{b} is neither maximal atypical nor typical")));
            }
            *typicals.entry(typical_weight_of(b)?).or_insert(0) += c;
        }
    }
    let (top_i, top_j) = (SimpleGamma::sym(i64::from(i)), SimpleGamma::sym(i64::from(j)));
    let (ai, aj) = (k0_as(i64::from(i))?, k0_as(i64::from(j))?);
    for (s, ms) in ai.iter() {
        for (t, mt) in aj.iter() {
            if s == top_i && t == top_j {
                continue;
            }
            let (p, q, v, m) = (s.degree(), t.degree(), s.b + t.b, ms * mt);
            if p == 0 || q == 0 {
                k0.add_term(SimpleGamma::sym(p + q).twist(v), -m);
                continue;
            }
            k0.add_scaled(&k0_fuse_closed(p, q)?.twist(v), -m);
            for w in typical_summands(p, q)? {
                *typicals.entry(w.twist(v)).or_insert(0) -= m;
            }
        }
    }
    typicals.retain(|_, c| *c != 0);
    Ok(Residue { k0, typicals })
}

fn residue_check(n: u32) -> Check {
    let results = pairs(n)
        .into_par_iter()
        .map(|(i, j)| {
            let r = deligne_residue(i, j).map_err(|e| e.to_string())?;
            let (ii, jj) = (i64::from(i), i64::from(j));
            let k0 = k0_fuse_closed(ii, jj).map_err(|e| e.to_string())?;
            ensure(r.k0 == k0, || format!("({i},{j}): K0 residue {}", r.k0.to_text()))?;
            let typ: BTreeMap<TypicalWeight, i64> =
                typical_summands(ii, jj).map_err(|e| e.to_string())?.into_iter().map(|w| (w, 1)).collect();
            ensure(r.typicals == typ, || format!("({i},{j}): typical residue differs"))
        })
        .collect();
    first_error(results)?;
    Ok(format!("residue = k0_fuse_closed + typical_summands for i,j ≤ {n}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("gl22".parse::<Suite>().unwrap(), Suite::Gl22);
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn small_residue() {
        let r = deligne_residue(2, 1).unwrap();
        assert_eq!(r.k0, k0_fuse_closed(2, 1).unwrap());
        assert_eq!(r.typicals.len(), 2);
    }

    #[test]
    fn quick_suites_pass() {
        for suite in [Suite::Lr, Suite::Gl22] {
            for c in run_suite(suite, Some(3)) {
                assert!(c.passed, "{c}");
            }
        }
    }
}
