//! Standard, opposite, semi-infinite and twisted Bruhat orders.
//!
//! Each order is graded by a length function and generated by arrows
//! `w → s_β w` that raise that length by exactly one.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::cartan::Coweight;
use crate::error::{Error, Result};
use crate::parabolic::{classify, is_appropriately_dominant, Classification};
use crate::rational::{ceil_i64, floor_i64, Rat};
use crate::weyl::{AffineRoot, AffineWeylGroup, WeylElt};

/// Data for the order twisted by a coweight `η`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twist {
    eta: Coweight,
    class: Classification,
    /// `⟨α, η⟩` for every finite root `α`.
    finite_pairings: Vec<Rat>,
}

impl Twist {
    /// Requires `η` to be dominant in the sense matching its class.
    pub fn new(group: &AffineWeylGroup, eta: &Coweight) -> Result<Self> {
        if !is_appropriately_dominant(group.data(), eta)? {
            return Err(Error::NotAppropriatelyDominant);
        }
        Self::new_unchecked(group, eta)
    }

    /// Builds the twist for an arbitrary coweight; only the length function
    /// and the arrows are meaningful in that case.
    pub fn new_unchecked(group: &AffineWeylGroup, eta: &Coweight) -> Result<Self> {
        let d = group.data();
        if eta.ty != d.ty {
            return Err(Error::ContextMismatch);
        }
        let finite_pairings = (0..d.num_roots()).map(|r| d.root_on_coweight(r, 0, eta)).collect();
        Ok(Twist { eta: eta.clone(), class: classify(eta), finite_pairings })
    }

    pub fn eta(&self) -> &Coweight {
        &self.eta
    }

    pub fn classification(&self) -> Classification {
        self.class
    }

    /// `⟨α + kδ, η⟩`.
    pub fn pairing(&self, beta: &AffineRoot) -> Rat {
        &self.finite_pairings[beta.alpha] + Rat::from_integer(beta.k.into()) * &self.eta.d
    }

    /// Number of `k` in `[lo, hi]` with `⟨α + kδ, η⟩ < 0`.
    fn count_negative(&self, alpha: usize, lo: i64, hi: i64) -> i64 {
        let p = &self.finite_pairings[alpha];
        let d = &self.eta.d;
        let (lo, hi) = if d.is_zero() {
            if p.is_negative() {
                (lo, hi)
            } else {
                return 0;
            }
        } else {
            let bound = -p / d;
            if d.is_positive() {
                (lo, hi.min(ceil_i64(&bound) - 1))
            } else {
                (lo.max(floor_i64(&bound) + 1), hi)
            }
        };
        (hi - lo + 1).max(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderKind {
    Standard,
    Opposite,
    SemiInfinite,
    Twisted(Twist),
}

impl OrderKind {
    /// The regular order attached to a class of coweights.
    pub fn regular_for(class: Classification) -> OrderKind {
        match class {
            Classification::Positive => OrderKind::Standard,
            Classification::Negative => OrderKind::Opposite,
            Classification::LevelZero => OrderKind::SemiInfinite,
        }
    }

    pub fn is_regular(&self) -> bool {
        !matches!(self, OrderKind::Twisted(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            OrderKind::Standard => "standard",
            OrderKind::Opposite => "opposite",
            OrderKind::SemiInfinite => "semi-infinite",
            OrderKind::Twisted(_) => "twisted",
        }
    }
}

/// The length function grading `kind`.
pub fn length(group: &AffineWeylGroup, kind: &OrderKind, u: &WeylElt) -> i64 {
    match kind {
        OrderKind::Standard => group.std_length(u),
        OrderKind::Opposite => -group.std_length(u),
        OrderKind::SemiInfinite => group.finite_length(u) + group.two_rho_on_translation(u),
        OrderKind::Twisted(t) => {
            let mut len = 0;
            let mut twisted = 0;
            for (r, lo, hi) in group.inversion_ranges(u) {
                len += hi - lo + 1;
                twisted += t.count_negative(r, lo, hi);
            }
            len - 2 * twisted
        }
    }
}

/// Whether the root lies in the positive system defining `kind`.
pub fn is_kind_positive(group: &AffineWeylGroup, kind: &OrderKind, beta: &AffineRoot) -> bool {
    match kind {
        OrderKind::Standard => group.is_positive(beta),
        OrderKind::Opposite => !group.is_positive(beta),
        OrderKind::SemiInfinite => group.data().is_positive(beta.alpha),
        OrderKind::Twisted(t) => {
            let p = t.pairing(beta);
            if group.is_positive(beta) {
                !p.is_negative()
            } else {
                p.is_positive()
            }
        }
    }
}

/// Whether `s_γ w ≤ w` in the twisted order, by the symmetric-difference
/// rule: `γ` is a left inversion of `w` exactly when the reflection
/// `w⁻¹ s_γ w` is not twisted.
pub fn twisted_goes_down(group: &AffineWeylGroup, twist: &Twist, w: &WeylElt, gamma: &AffineRoot) -> bool {
    let b = group.act_on_root(&group.inverse(w), gamma);
    let left_inversion = !group.is_positive(&b);
    let positive_b = if left_inversion { group.negate_root(&b) } else { b };
    let twisted = twist.pairing(&positive_b).is_negative();
    left_inversion ^ twisted
}

/// Whether `w → s_β w` is an arrow of `kind`.
pub fn is_cover(group: &AffineWeylGroup, kind: &OrderKind, w: &WeylElt, beta: &AffineRoot) -> Result<bool> {
    if !group.is_positive(beta) {
        return Err(Error::NotPositiveRoot);
    }
    let up = group.mul(&group.reflection(beta), w);
    let grows = length(group, kind, &up) == length(group, kind, w) + 1;
    let oriented = match kind {
        OrderKind::Twisted(t) => !twisted_goes_down(group, t, w, beta),
        _ => is_kind_positive(group, kind, &group.act_on_root(&group.inverse(w), beta)),
    };
    Ok(oriented && grows)
}

/// All arrows `u → s_β u` of the semi-infinite order leaving `u`.
pub fn semi_infinite_arrows_up(group: &AffineWeylGroup, u: &WeylElt) -> Vec<(AffineRoot, WeylElt)> {
    let d = group.data();
    let fin = group.finite_part(u);
    let fin_inv = group.inverse(&fin);
    let base = group.finite_length(u);
    let mut out = Vec::new();
    for r in 0..d.num_roots() {
        let s_alpha = group.reflection(&AffineRoot::new(r, 0));
        let moved = group.finite_length(&group.mul(&s_alpha, &fin)) - base;
        let gamma = group.act_on_root(&fin_inv, &AffineRoot::new(r, 0));
        let h: i64 = 2 * d.coroot(gamma.alpha).iter().sum::<i64>();
        if (1 - moved) % h != 0 {
            continue;
        }
        let beta = AffineRoot::new(r, (1 - moved) / h);
        if group.is_positive(&beta) {
            out.push((beta, group.mul(&group.reflection(&beta), u)));
        }
    }
    out
}

/// Affine simple-coroot coordinates (scaled to integers) of `u ω_i∨` for
/// every `i`.  If `x ≤ y` in the semi-infinite order then the profile of
/// `x` dominates that of `y` coordinatewise.
fn seahorse_profile(group: &AffineWeylGroup, u: &WeylElt) -> Vec<i64> {
    let d = group.data();
    let n = d.rank();
    let scale = d.coweight_scale();
    let mut out = Vec::with_capacity(n * (n + 1));
    for i in 1..=n {
        let k = -d.two_over_norm[i - 1] * u.xi()[i - 1] * scale;
        let src = d.scaled_fundamental_coweight(i);
        let mut fin = vec![0i64; n];
        for (j, &c) in src.iter().enumerate() {
            if c != 0 {
                let img = d.coroot(u.perm()[d.simple(j + 1)] as usize);
                for t in 0..n {
                    fin[t] += c * img[t];
                }
            }
        }
        out.push(k);
        for t in 0..n {
            out.push(fin[t] + k * d.comarks[t]);
        }
    }
    out
}

fn dominates(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Semi-infinite order by breadth-first search over arrows, restricted to
/// the finite region cut out by the profile bounds.
pub fn leq_semi_infinite(group: &AffineWeylGroup, x: &WeylElt, y: &WeylElt) -> bool {
    let kind = OrderKind::SemiInfinite;
    let (lx, ly) = (length(group, &kind, x), length(group, &kind, y));
    if lx > ly || (lx == ly && x != y) {
        return false;
    }
    if x == y {
        return true;
    }
    let (px, py) = (seahorse_profile(group, x), seahorse_profile(group, y));
    if !dominates(&px, &py) {
        return false;
    }
    let mut frontier: HashSet<WeylElt> = HashSet::from([x.clone()]);
    for step in 1..=(ly - lx) {
        let mut next = HashSet::new();
        for u in &frontier {
            for (_, child) in semi_infinite_arrows_up(group, u) {
                if step == ly - lx {
                    if child == *y {
                        return true;
                    }
                    continue;
                }
                let pc = seahorse_profile(group, &child);
                if dominates(&px, &pc) && dominates(&pc, &py) {
                    next.insert(child);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    false
}

/// Decides `x ≤ y` for the three regular orders.
pub fn leq(group: &AffineWeylGroup, kind: &OrderKind, x: &WeylElt, y: &WeylElt) -> Result<bool> {
    match kind {
        OrderKind::Standard => Ok(group.leq_standard(x, y)),
        OrderKind::Opposite => Ok(group.leq_standard(y, x)),
        OrderKind::SemiInfinite => Ok(leq_semi_infinite(group, x, y)),
        OrderKind::Twisted(_) => Err(Error::Undecidable),
    }
}

/// Searches for a chain of twisted arrows from `x` to `y` through elements
/// of `region`; `None` means undecided, not false.
pub fn leq_twisted_semidecision(
    group: &AffineWeylGroup,
    twist: &Twist,
    x: &WeylElt,
    y: &WeylElt,
    region: &[WeylElt],
) -> Option<Vec<WeylElt>> {
    let kind = OrderKind::Twisted(twist.clone());
    let len: HashMap<&WeylElt, i64> = region.iter().map(|u| (u, length(group, &kind, u))).collect();
    let ly = length(group, &kind, y);
    let mut parent: HashMap<WeylElt, WeylElt> = HashMap::new();
    let mut queue = VecDeque::from([x.clone()]);
    let mut seen: HashSet<WeylElt> = HashSet::from([x.clone()]);
    while let Some(z) = queue.pop_front() {
        if z == *y {
            let mut chain = vec![z.clone()];
            let mut cur = z;
            while let Some(p) = parent.get(&cur) {
                chain.push(p.clone());
                cur = p.clone();
            }
            chain.reverse();
            return Some(chain);
        }
        let lz = length(group, &kind, &z);
        if lz >= ly {
            continue;
        }
        let zinv = group.inverse(&z);
        let targets = region.iter().chain(std::iter::once(y));
        for t in targets {
            let lt = len.get(t).copied().unwrap_or(ly);
            if lt != lz + 1 || seen.contains(t) {
                continue;
            }
            if group.reflection_root(&group.mul(t, &zinv)).is_some() {
                seen.insert(t.clone());
                parent.insert(t.clone(), z.clone());
                queue.push_back(t.clone());
            }
        }
    }
    None
}

/// Both clauses of the diamond lemma for `w < v` and simple `s_i`.
pub fn diamond_check(group: &AffineWeylGroup, kind: &OrderKind, w: &WeylElt, v: &WeylElt, i: usize) -> Result<bool> {
    let s = group.simple_reflection(i)?;
    let (sw, sv) = (group.mul(&s, w), group.mul(&s, v));
    let lt = |a: &WeylElt, b: &WeylElt| -> Result<bool> { Ok(a != b && leq(group, kind, a, b)?) };
    let sw_lt_sv = lt(&sw, &sv)?;
    let a = leq(group, kind, &sw, v)? || sw_lt_sv;
    let b = leq(group, kind, w, &sv)? || sw_lt_sv;
    Ok(a && b)
}

/// Arrows of `kind` among a finite set of elements, as index pairs with
/// their positive root labels.
pub fn arrows_among(group: &AffineWeylGroup, kind: &OrderKind, elts: &[WeylElt]) -> Vec<(usize, usize, AffineRoot)> {
    let mut out = Vec::new();
    for (i, x) in elts.iter().enumerate() {
        let xinv = group.inverse(x);
        for (j, y) in elts.iter().enumerate() {
            if i == j {
                continue;
            }
            if let Some(beta) = group.reflection_root(&group.mul(y, &xinv)) {
                if is_cover(group, kind, x, &beta).unwrap_or(false) {
                    out.push((i, j, beta));
                }
            }
        }
    }
    out
}
