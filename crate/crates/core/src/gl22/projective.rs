//! Loewy layers of the mixed tensors `𝔸_{S^i}` and of the projective covers
//! `P[a,b]` in the maximal atypical block of Gl(2|2), and the Ext-quiver.

use super::k0::{K0Gamma, LoewyPresentation, SimpleGamma};
use crate::error::{Error, Result};

fn layer(items: &[(i64, i64, i64)]) -> K0Gamma {
    items.iter().map(|&(a, b, m)| (SimpleGamma::at(a, b), m)).collect()
}

/// Loewy layers of `𝔸_{S^i}` for Gl(2|2).
pub fn loewy_as(i: i64) -> Result<LoewyPresentation> {
    if i < 1 {
        return Err(Error::InvalidArgument(format!("A_S^{i} needs i >= 1")));
    }
    let outer = match i {
        1 => layer(&[(0, 0, 1)]),
        _ => layer(&[(i - 1, 0, 1)]),
    };
    let middle = match i {
        1 => layer(&[(1, 0, 1)]),
        2 => layer(&[(2, 0, 1), (0, 0, 1), (-1, -1, 1)]),
        _ => layer(&[(i, 0, 1), (i - 2, 0, 1)]),
    };
    Ok(LoewyPresentation::new(vec![outer.clone(), middle, outer]))
}

pub fn k0_as(i: i64) -> Result<K0Gamma> {
    loewy_as(i).map(|l| l.k0())
}

/// `𝔸_{Λ^i}` is the dual of `𝔸_{S^i}`.
pub fn k0_al(i: i64) -> Result<K0Gamma> {
    k0_as(i).map(|x| x.dual())
}

/// The five Loewy layers of the projective cover `P[a,b]`.
pub fn loewy_p(a: i64, b: i64) -> Result<LoewyPresentation> {
    if a < b {
        return Err(Error::InvalidArgument(format!("P[{a},{b}] needs a >= b")));
    }
    let top = layer(&[(a, b, 1)]);
    let (second, middle) = match a - b {
        0 => (
            layer(&[(a + 1, a, 1), (a, a - 1, 1), (a + 2, a + 1, 1)]),
            layer(&[
                (a, a, 2),
                (a - 1, a - 1, 1),
                (a - 2, a - 2, 1),
                (a + 1, a - 1, 1),
                (a + 2, a, 1),
                (a + 1, a + 1, 1),
                (a + 2, a + 2, 1),
            ]),
        ),
        1 => (
            layer(&[(a + 1, b, 1), (b, b, 1), (a, b - 1, 1), (a, a, 1), (b - 1, b - 1, 1)]),
            layer(&[(a, b, 2), (a + 1, b - 1, 1), (a - 1, b - 1, 1), (a + 1, a, 1)]),
        ),
        2 => (
            layer(&[(a + 1, b, 1), (a - 1, b, 1), (a, b - 1, 1), (a, b + 1, 1)]),
            layer(&[
                (a, b, 2),
                (a + 1, b - 1, 1),
                (a - 1, b - 1, 1),
                (a + 1, b + 1, 1),
                (b + 1, b + 1, 1),
                (b, b, 1),
            ]),
        ),
        _ => (
            layer(&[(a + 1, b, 1), (a - 1, b, 1), (a, b - 1, 1), (a, b + 1, 1)]),
            layer(&[(a, b, 2), (a + 1, b - 1, 1), (a - 1, b - 1, 1), (a + 1, b + 1, 1), (a - 1, b + 1, 1)]),
        ),
    };
    Ok(LoewyPresentation::new(vec![top.clone(), second.clone(), middle, second, top]))
}

pub fn k0_p(a: i64, b: i64) -> Result<K0Gamma> {
    loewy_p(a, b).map(|l| l.k0())
}

/// The label `[x,y]` with `R(a,b) = P[x,y]` in Gl(2|2), for `a ≥ b ≥ 1`
/// other than `(1,1)`, which is `𝔸_{Λ^2}`.
pub fn r_to_p(a: i64, b: i64) -> Result<SimpleGamma> {
    if b < 1 || a < b {
        return Err(Error::InvalidArgument(format!("R({a},{b}) is not a projective mixed tensor: need a >= b >= 1")));
    }
    if a == b {
        if a < 2 {
            return Err(Error::InvalidArgument("R(1,1) is A_Lambda^2, not projective".to_string()));
        }
        Ok(SimpleGamma::at(a - 2, a - 2))
    } else {
        Ok(SimpleGamma::at(a - 1, b - 1))
    }
}

/// Dimension of `Ext^1` between two maximal atypical simples.
pub fn ext1(s1: SimpleGamma, s2: SimpleGamma) -> u32 {
    let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
    let dominant = |s: SimpleGamma| s.a >= s.b;
    if !dominant(lo) || !dominant(hi) {
        return 0;
    }
    let horizontal = hi.b == lo.b && hi.a == lo.a + 1;
    let vertical = hi.a == lo.a && hi.b == lo.b + 1;
    let diagonal = lo.a == lo.b && hi.a == lo.a + 2 && hi.b == lo.b + 1;
    u32::from(horizontal || vertical || diagonal)
}

/// `P[i,0] = 2 𝔸_{S^{i+1}} + B^{-1} 𝔸_{S^{i+2}} + B 𝔸_{S^i}` in K₀.
pub fn p_identity_check(i: i64) -> Result<bool> {
    let lhs = k0_p(i, 0)?;
    let mut rhs = K0Gamma::zero();
    rhs.add_scaled(&k0_as(i + 1)?, 2);
    rhs.add_scaled(&k0_as(i + 2)?.twist(-1), 1);
    rhs.add_scaled(&k0_as(i)?.twist(1), 1);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_mixed_tensors() {
        assert_eq!(k0_as(1).unwrap(), layer(&[(0, 0, 2), (1, 0, 1)]));
        assert_eq!(k0_as(2).unwrap(), layer(&[(1, 0, 2), (2, 0, 1), (0, 0, 1), (-1, -1, 1)]));
        assert_eq!(k0_as(4).unwrap(), layer(&[(3, 0, 2), (4, 0, 1), (2, 0, 1)]));
        assert!(k0_as(0).is_err());
    }

    #[test]
    fn projective_layers() {
        for (a, b) in [(5, 0), (4, 2), (3, 2), (2, 2), (7, 3)] {
            let p = loewy_p(a, b).unwrap();
            assert_eq!(p.loewy_length(), 5);
            assert!(p.is_self_dual());
            assert_eq!(p.k0().coeff(SimpleGamma::at(a, b)), 4);
        }
        assert_eq!(loewy_p(2, 2).unwrap().layers[1], layer(&[(3, 2, 1), (2, 1, 1), (4, 3, 1)]));
        assert!(loewy_p(0, 1).is_err());
    }

    #[test]
    fn second_layer_is_ext_neighbourhood() {
        for a in -3..6 {
            for b in -3..=a {
                let s = SimpleGamma::at(a, b);
                let second = &loewy_p(a, b).unwrap().layers[1];
                for x in (a - 4)..(a + 5) {
                    for y in (b - 4)..=x.min(b + 4) {
                        let t = SimpleGamma::at(x, y);
                        assert_eq!(ext1(s, t) == 1, second.coeff(t) > 0, "{s:?} {t:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn r_to_p_labels() {
        assert_eq!(r_to_p(3, 1).unwrap(), SimpleGamma::at(2, 0));
        assert_eq!(r_to_p(2, 2).unwrap(), SimpleGamma::at(0, 0));
        assert_eq!(r_to_p(6, 2).unwrap(), SimpleGamma::at(5, 1));
        assert!(r_to_p(3, 0).is_err());
        assert!(r_to_p(1, 1).is_err());
    }

    #[test]
    fn ext_examples() {
        let s = SimpleGamma::at;
        assert_eq!(ext1(s(2, 2), s(4, 3)), 1);
        assert_eq!(ext1(s(4, 1), s(5, 1)), 1);
        assert_eq!(ext1(s(4, 1), s(6, 1)), 0);
        assert_eq!(ext1(s(1, 1), s(1, 2)), 0);
    }

    #[test]
    fn projective_identity_small() {
        for i in 1..=4 {
            assert!(p_identity_check(i).unwrap(), "i = {i}");
        }
    }
}
