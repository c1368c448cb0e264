//! Demazure products `w ∗_⋄ v` for every graded order.

use crate::error::{Error, Result};
use crate::orders::{length, leq, OrderKind};
use crate::weyl::{AffineWeylGroup, WeylElt};

/// Computes `w ∗_⋄ v` along the canonical reduced word of `w`, returning
/// the product and the element `x₀ ≤ w` with `w ∗_⋄ v = x₀ v`.
pub fn demazure_product(group: &AffineWeylGroup, kind: &OrderKind, w: &WeylElt, v: &WeylElt) -> (WeylElt, WeylElt) {
    demazure_product_word(group, kind, &group.canonical_word(w), v)
}

/// Same as [`demazure_product`] for an explicit reduced word of `w`.
pub fn demazure_product_word(
    group: &AffineWeylGroup,
    kind: &OrderKind,
    word: &[usize],
    v: &WeylElt,
) -> (WeylElt, WeylElt) {
    let mut cur = v.clone();
    let mut x0 = group.identity();
    let mut cur_len = length(group, kind, &cur);
    for &i in word.iter().rev() {
        let s = group.simple_reflection(i).expect("letter in range");
        let up = group.mul(&s, &cur);
        let up_len = length(group, kind, &up);
        if up_len == cur_len + 1 {
            cur = up;
            cur_len = up_len;
            x0 = group.mul(&s, &x0);
        }
    }
    (cur, x0)
}

/// The maximum of `{x v : x ≤ w}` in a regular order, certified by
/// comparing the longest candidate against every other element.
pub fn brute_demazure_max(group: &AffineWeylGroup, kind: &OrderKind, w: &WeylElt, v: &WeylElt) -> Result<WeylElt> {
    if !kind.is_regular() {
        return Err(Error::Undecidable);
    }
    let set: Vec<WeylElt> = group.interval_standard(w).iter().map(|x| group.mul(x, v)).collect();
    let top = set.iter().max_by_key(|u| length(group, kind, u)).expect("interval is nonempty").clone();
    for u in &set {
        if !leq(group, kind, u, &top)? {
            return Err(Error::UncertifiedMaximum);
        }
    }
    Ok(top)
}

/// Checks `(w ∗ v) ∗_⋄ u = w ∗_⋄ (v ∗_⋄ u)`, with the standard product on
/// the left factor.
pub fn monoid_action_check(group: &AffineWeylGroup, kind: &OrderKind, w: &WeylElt, v: &WeylElt, u: &WeylElt) -> bool {
    let (wv, _) = demazure_product(group, &OrderKind::Standard, w, v);
    let (lhs, _) = demazure_product(group, kind, &wv, u);
    let (vu, _) = demazure_product(group, kind, v, u);
    let (rhs, _) = demazure_product(group, kind, w, &vu);
    lhs == rhs
}

/// Checks `l_⋄(w ∗_⋄ v) = l(x₀) + l_⋄(v)` and `x₀ ≤ w`.
pub fn length_additivity_check(group: &AffineWeylGroup, kind: &OrderKind, w: &WeylElt, v: &WeylElt) -> bool {
    let (p, x0) = demazure_product(group, kind, w, v);
    length(group, kind, &p) == group.std_length(&x0) + length(group, kind, v)
        && group.leq_standard(&x0, w)
        && p == group.mul(&x0, v)
}
