//! The ring homomorphism `d = H⁺ - H⁻` from K₀ of Gl(2|2) to K₀ of Gl(1|1),
//! restricted to the maximal atypical block, and the superdimension obtained
//! by applying it twice.

use super::k0::{K0Gamma, LaurentB, SimpleGamma};

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `d([a,b]) = (-1)^b B^a - (-1)^a B^{b-1}` for `a > b` and `d(Ber^a) = (-1)^a B^a`.
pub fn d_simple(s: SimpleGamma) -> LaurentB {
    let mut out = LaurentB::monomial(s.a, sign(s.b));
    if s.a > s.b {
        out.add_term(s.b - 1, -sign(s.a));
    }
    out
}

pub fn d_hom(x: &K0Gamma) -> LaurentB {
    let mut out = LaurentB::zero();
    for (s, c) in x.iter() {
        for (k, v) in d_simple(s).iter() {
            out.add_term(k, c * v);
        }
    }
    out
}

pub fn sdim(x: &K0Gamma) -> i64 {
    d_hom(x).eval_at_minus_one()
}

/// `B^{i+j} + (-1)^{1-j} B^{i-1} + (-1)^{1-i} B^{j-1} + (-1)^{2-i-j} B^{-2}`.
pub fn d_fuse_expected(i: i64, j: i64) -> LaurentB {
    let mut out = LaurentB::monomial(i + j, 1);
    out.add_term(i - 1, sign(1 - j));
    out.add_term(j - 1, sign(1 - i));
    out.add_term(-2, sign(2 - i - j));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_on_generators() {
        for i in 1..8 {
            let d = d_simple(SimpleGamma::sym(i));
            assert_eq!(d, {
                let mut e = LaurentB::monomial(i, 1);
                e.add_term(-1, sign(1 - i));
                e
            });
            assert_eq!(sdim(&K0Gamma::simple(SimpleGamma::sym(i))), 2 * sign(i));
        }
        assert_eq!(d_simple(SimpleGamma::ber(1)), LaurentB::monomial(1, -1));
        assert_eq!(d_simple(SimpleGamma::ber(0)), LaurentB::monomial(0, 1));
        for a in -5..5 {
            assert_eq!(sdim(&K0Gamma::simple(SimpleGamma::ber(a))), 1);
        }
    }

    #[test]
    fn multiplicative_on_twists() {
        for a in -3..4 {
            for b in -3..=a {
                let s = SimpleGamma::at(a, b);
                let lhs = d_simple(s.twist(1));
                let rhs = d_simple(SimpleGamma::ber(1)).mul(&d_simple(s));
                assert_eq!(lhs, rhs, "{s:?}");
            }
        }
    }
}
