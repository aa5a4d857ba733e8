use std::collections::BTreeMap;

use proptest::prelude::*;
use superfuse::deligne::{gl0_tensor, lift, lift_inv, rt_tensor, RtElement};
use superfuse::diagram::{read_bipartition, weight_diagram};
use superfuse::gl22::{decompose, TensorDecomposition};
use superfuse::parse::{parse_bipartition, parse_partition};
use superfuse::partition::{gl2_tensor, lr_coeff, lr_product, partitions_of, Bipartition, Gl2Weight, Partition};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn bipartition(max_len: usize, max_part: u32) -> impl Strategy<Value = Bipartition> {
    (partition(max_len, max_part), partition(max_len, max_part)).prop_map(|(l, r)| Bipartition::new(l, r))
}

fn element() -> impl Strategy<Value = RtElement> {
    prop::collection::vec((bipartition(2, 2), -2i64..=2), 1..=3).prop_map(|v| v.into_iter().collect())
}

/// Weight multiset of a Gl(2)-module: `(a,b)` contributes `x^{a-k} y^{b+k}`.
fn character(ws: &[Gl2Weight]) -> BTreeMap<(i32, i32), i64> {
    let mut out = BTreeMap::new();
    for w in ws {
        for k in 0..=(w.a - w.b) {
            *out.entry((w.a - k, w.b + k)).or_insert(0) += 1;
        }
    }
    out
}

/// Splits a character into irreducibles by repeatedly removing the highest weight.
fn peel(mut ch: BTreeMap<(i32, i32), i64>) -> Vec<Gl2Weight> {
    let mut out = Vec::new();
    while let Some((&(a, b), &c)) = ch.iter().filter(|(_, c)| **c != 0).max_by_key(|((a, b), _)| (a - b, *a)) {
        assert!(c > 0 && a >= b);
        let w = Gl2Weight::new(a, b).unwrap();
        for (k, v) in character(&[w]) {
            *ch.entry(k).or_insert(0) -= v;
        }
        out.push(w);
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

#[test]
fn gl2_tensor_matches_characters() {
    for a1 in -4..=4 {
        for b1 in -4..=a1 {
            for a2 in -3..=3 {
                for b2 in -3..=a2 {
                    let (w1, w2) = (Gl2Weight::new(a1, b1).unwrap(), Gl2Weight::new(a2, b2).unwrap());
                    let mut product = BTreeMap::new();
                    for ((x1, y1), c1) in character(&[w1]) {
                        for ((x2, y2), c2) in character(&[w2]) {
                            *product.entry((x1 + x2, y1 + y2)).or_insert(0) += c1 * c2;
                        }
                    }
                    assert_eq!(gl2_tensor(w1, w2), peel(product), "{w1} ⊗ {w2}");
                }
            }
        }
    }
}

/// `s_α h_k` by adding horizontal strips.
fn pieri(x: &BTreeMap<Partition, i64>, k: u32) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    for (mu, c) in x {
        let n = mu.size() + k;
        for lam in partitions_of(n) {
            let contains = lam.contains(mu);
            let strip = contains && (0..lam.len()).all(|r| r + 1 >= lam.len() || lam.part(r + 1) <= mu.part(r));
            if strip {
                *out.entry(lam).or_insert(0) += c;
            }
        }
    }
    out
}

/// `s_α s_β` through the Jacobi-Trudi determinant `s_β = det(h_{β_i - i + j})`.
fn jacobi_trudi_product(alpha: &Partition, beta: &Partition) -> BTreeMap<Partition, i64> {
    let l = beta.len();
    let mut total: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..l).collect();
    let sign_of = |p: &[usize]| {
        let mut s = 1;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    s = -s;
                }
            }
        }
        s
    };
    loop {
        let sign = sign_of(&perm);
        let mut cur: BTreeMap<Partition, i64> = BTreeMap::from([(alpha.clone(), 1)]);
        let mut ok = true;
        for (i, &j) in perm.iter().enumerate() {
            let k = i64::from(beta.part(i)) - i as i64 + j as i64;
            if k < 0 {
                ok = false;
                break;
            }
            cur = pieri(&cur, k as u32);
        }
        if ok {
            for (p, c) in cur {
                *total.entry(p).or_insert(0) += sign * c;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[test]
fn lr_products_match_jacobi_trudi() {
    for n in 0..=6 {
        for a in 0..=n {
            for alpha in partitions_of(a) {
                for beta in partitions_of(n - a) {
                    let want = jacobi_trudi_product(&alpha, &beta);
                    let got: BTreeMap<Partition, i64> =
                        lr_product(&alpha, &beta).iter().map(|(p, c)| (p.clone(), c)).collect();
                    assert_eq!(got, want, "s{alpha} s{beta}");
                    for (lam, c) in &want {
                        assert_eq!(lr_coeff(&alpha, &beta, lam) as i64, *c);
                    }
                }
            }
        }
    }
}

#[test]
fn decomposition_json_roundtrip() {
    for i in 1..=5 {
        for j in 1..=5 {
            let d = decompose(i, j).unwrap();
            let back = TensorDecomposition::from_json(&d.to_json()).unwrap();
            assert_eq!(back, d);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lift_inv_undoes_lift(x in element()) {
        prop_assert_eq!(lift_inv(&lift(&x)), x.clone());
        prop_assert_eq!(lift(&lift_inv(&x)), x);
    }

    #[test]
    fn generic_product_is_commutative(x in element(), y in element()) {
        prop_assert_eq!(rt_tensor(&x, &y), rt_tensor(&y, &x));
    }

    #[test]
    fn generic_product_is_associative(x in bipartition(2, 1), y in bipartition(2, 1), z in bipartition(1, 2)) {
        let (x, y, z) = (RtElement::basis(x), RtElement::basis(y), RtElement::basis(z));
        prop_assert_eq!(rt_tensor(&rt_tensor(&x, &y), &z), rt_tensor(&x, &rt_tensor(&y, &z)));
    }

    #[test]
    fn unit_is_neutral(x in element()) {
        prop_assert_eq!(rt_tensor(&RtElement::unit(), &x), x);
    }

    #[test]
    fn gl0_product_is_nonnegative_and_commutative(x in bipartition(2, 2), y in bipartition(2, 2)) {
        let (x, y) = (RtElement::basis(x), RtElement::basis(y));
        let xy = gl0_tensor(&x, &y).unwrap();
        prop_assert!(xy.iter().all(|(_, c)| c > 0));
        prop_assert_eq!(xy, gl0_tensor(&y, &x).unwrap());
    }

    #[test]
    fn text_roundtrip(b in bipartition(4, 5)) {
        prop_assert_eq!(parse_bipartition(&b.to_string()).unwrap(), b.clone());
        prop_assert_eq!(parse_partition(&b.left.to_string()).unwrap(), b.left.clone());
    }

    #[test]
    fn json_roundtrip(x in element()) {
        prop_assert_eq!(RtElement::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn diagram_roundtrip(b in bipartition(4, 5)) {
        prop_assert_eq!(read_bipartition(&weight_diagram(&b)).unwrap(), b);
    }

    #[test]
    fn lr_symmetry(a in partition(3, 3), b in partition(3, 3)) {
        prop_assert_eq!(lr_product(&a, &b), lr_product(&b, &a));
    }
}
