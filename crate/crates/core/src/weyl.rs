//! The affine Weyl group `W̊ ⋉ Q̊∨` and its actions.
//!
//! An element `ẘ·t_ξ` stores `ẘ` as the permutation it induces on the
//! finite roots and `ξ` in simple-coroot coordinates.  Multiplication
//! follows `(ẘ₁,ξ₁)(ẘ₂,ξ₂) = (ẘ₁ẘ₂, ẘ₂⁻¹ξ₁ + ξ₂)`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::cartan::{Coweight, FiniteCartanData, Weight};
use crate::error::{Error, Result};
use crate::rational::{frac, int, Rat};

/// Real affine root `α + kδ`, with `α` given by its finite root index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub alpha: usize,
    pub k: i64,
}

impl AffineRoot {
    pub fn new(alpha: usize, k: i64) -> Self {
        AffineRoot { alpha, k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    perm: Vec<u16>,
    xi: Vec<i64>,
}

impl WeylElt {
    /// Image of each finite root index under the finite part.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Translation part in simple-coroot coordinates.
    pub fn xi(&self) -> &[i64] {
        &self.xi
    }
}

/// Group context: the affine Weyl group over a finite root datum.
#[derive(Debug, Clone)]
pub struct AffineWeylGroup {
    data: Arc<FiniteCartanData>,
    /// Permutations of the reflections `s_α`, `α` positive.
    reflection_perms: Vec<Vec<u16>>,
    reflection_by_perm: HashMap<Vec<u16>, usize>,
    identity: WeylElt,
}

impl AffineWeylGroup {
    pub fn new(data: FiniteCartanData) -> Self {
        let data = Arc::new(data);
        let m = data.num_roots();
        let refl_perm = |a: usize| -> Vec<u16> { (0..m).map(|b| data.reflect_root(a, b) as u16).collect() };
        let reflection_perms: Vec<Vec<u16>> = (0..data.num_positive()).map(refl_perm).collect();
        let reflection_by_perm = reflection_perms.iter().enumerate().map(|(a, p)| (p.clone(), a)).collect();
        let identity = WeylElt { perm: (0..m as u16).collect(), xi: vec![0; data.rank()] };
        AffineWeylGroup { data, reflection_perms, reflection_by_perm, identity }
    }

    /// Parses a tag such as `A2` or `A3affine` and builds the group.
    pub fn from_tag(tag: &str) -> Result<Self> {
        Ok(Self::new(FiniteCartanData::new(crate::cartan::CartanType::parse(tag)?)))
    }

    pub fn data(&self) -> &FiniteCartanData {
        &self.data
    }

    pub fn rank(&self) -> usize {
        self.data.rank()
    }

    pub fn identity(&self) -> WeylElt {
        self.identity.clone()
    }

    pub fn is_identity(&self, u: &WeylElt) -> bool {
        *u == self.identity
    }

    /// The affine simple root `α_i`, `i` in `0..=n`.
    pub fn simple_root(&self, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot::new(self.data.negate(self.data.theta()), 1)
        } else {
            AffineRoot::new(self.data.simple(i), 0)
        }
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElt> {
        if i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, max: self.rank() });
        }
        Ok(self.reflection(&self.simple_root(i)))
    }

    /// `s_{α+kδ} = s_α · t_{kα∨}`.
    pub fn reflection(&self, beta: &AffineRoot) -> WeylElt {
        let d = &self.data;
        let pos = if d.is_positive(beta.alpha) { beta.alpha } else { d.negate(beta.alpha) };
        let perm = self.reflection_perms[pos].clone();
        let xi = d.coroot(beta.alpha).iter().map(|c| beta.k * c).collect();
        WeylElt { perm, xi }
    }

    pub fn translation(&self, xi: &[i64]) -> Result<WeylElt> {
        if xi.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: xi.len() });
        }
        Ok(WeylElt { perm: self.identity.perm.clone(), xi: xi.to_vec() })
    }

    /// The element `ẘ` of the finite Weyl group (no translation part).
    pub fn finite_part(&self, u: &WeylElt) -> WeylElt {
        WeylElt { perm: u.perm.clone(), xi: vec![0; self.rank()] }
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut u = self.identity();
        for &i in word {
            u = self.mul(&u, &self.simple_reflection(i)?);
        }
        Ok(u)
    }

    pub fn mul(&self, a: &WeylElt, b: &WeylElt) -> WeylElt {
        let perm = b.perm.iter().map(|&r| a.perm[r as usize]).collect();
        let binv = invert_perm(&b.perm);
        let mut xi = self.apply_fin_coroot(&binv, &a.xi);
        for (x, y) in xi.iter_mut().zip(&b.xi) {
            *x += y;
        }
        WeylElt { perm, xi }
    }

    pub fn inverse(&self, u: &WeylElt) -> WeylElt {
        let xi = self.apply_fin_coroot(&u.perm, &u.xi).iter().map(|x| -x).collect();
        WeylElt { perm: invert_perm(&u.perm), xi }
    }

    /// Conjugation `a b a⁻¹`.
    pub fn conjugate(&self, a: &WeylElt, b: &WeylElt) -> WeylElt {
        self.mul(&self.mul(a, b), &self.inverse(a))
    }

    /// Applies a finite permutation to a vector in simple-coroot coordinates.
    fn apply_fin_coroot(&self, perm: &[u16], x: &[i64]) -> Vec<i64> {
        let n = self.rank();
        let mut out = vec![0i64; n];
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.data.coroot(perm[self.data.simple(i + 1)] as usize);
            for j in 0..n {
                out[j] += c * img[j];
            }
        }
        out
    }

    pub fn is_positive(&self, beta: &AffineRoot) -> bool {
        beta.k > 0 || (beta.k == 0 && self.data.is_positive(beta.alpha))
    }

    pub fn negate_root(&self, beta: &AffineRoot) -> AffineRoot {
        AffineRoot::new(self.data.negate(beta.alpha), -beta.k)
    }

    /// `(ẘ,ξ)(α+kδ) = ẘα + (k − ⟨α,ξ⟩)δ`.
    pub fn act_on_root(&self, u: &WeylElt, beta: &AffineRoot) -> AffineRoot {
        let shift = self.data.root_on_coweight_lattice(beta.alpha, &u.xi);
        AffineRoot::new(u.perm[beta.alpha] as usize, beta.k - shift)
    }

    pub fn act_on_weight(&self, u: &WeylElt, lambda: &Weight) -> Result<Weight> {
        let d = &self.data;
        if lambda.ty != d.ty {
            return Err(Error::ContextMismatch);
        }
        let n = self.rank();
        let m = &lambda.level;
        let mut fin = lambda.fin.clone();
        let mut delta = lambda.delta.clone();
        if u.xi.iter().any(|&x| x != 0) {
            let x = &u.xi;
            let mut lam_xi = Rat::zero();
            for i in 0..n {
                lam_xi += &lambda.fin[i] * int(x[i]);
            }
            let xx: i64 =
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| x[i] * d.coroot_form[i][j] * x[j]).sum();
            delta -= lam_xi + frac(xx, 2) * m;
            for i in 0..n {
                let nu: i64 = (0..n).map(|j| x[j] * d.coroot_form[j][i]).sum();
                fin[i] += int(nu) * m;
            }
        }
        let inv = invert_perm(&u.perm);
        let fin = (0..n)
            .map(|i| {
                let c = d.coroot(inv[d.simple(i + 1)] as usize);
                let mut s = Rat::zero();
                for k in 0..n {
                    if c[k] != 0 {
                        s += int(c[k]) * &fin[k];
                    }
                }
                s
            })
            .collect();
        Ok(Weight { ty: lambda.ty, fin, level: m.clone(), delta })
    }

    pub fn act_on_coweight(&self, u: &WeylElt, eta: &Coweight) -> Result<Coweight> {
        let d = &self.data;
        if eta.ty != d.ty {
            return Err(Error::ContextMismatch);
        }
        let n = self.rank();
        let a = &eta.d;
        let mut fin = eta.fin.clone();
        let mut k = eta.k.clone();
        if u.xi.iter().any(|&x| x != 0) {
            let x = &u.xi;
            let mut eta_xi = Rat::zero();
            for j in 0..n {
                eta_xi += &eta.fin[j] * int(x[j] * d.two_over_norm[j]);
            }
            let xx: i64 =
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| x[i] * d.coroot_form[i][j] * x[j]).sum();
            k -= eta_xi + frac(xx, 2) * a;
            for j in 0..n {
                let c: i64 = (0..n).map(|i| x[i] * d.cartan[i][j]).sum();
                fin[j] += int(c) * a;
            }
        }
        let inv = invert_perm(&u.perm);
        let fin = (0..n)
            .map(|i| {
                let r = d.root(inv[d.simple(i + 1)] as usize);
                let mut s = Rat::zero();
                for j in 0..n {
                    if r[j] != 0 {
                        s += int(r[j]) * &fin[j];
                    }
                }
                s
            })
            .collect();
        Ok(Coweight { ty: eta.ty, fin, d: a.clone(), k })
    }

    /// For each finite root `α`, the inclusive range of `k` such that
    /// `α + kδ` is a positive root sent to a negative root by `u`.
    pub fn inversion_ranges(&self, u: &WeylElt) -> Vec<(usize, i64, i64)> {
        let d = &self.data;
        (0..d.num_roots())
            .filter_map(|r| {
                let p = d.root_on_coweight_lattice(r, &u.xi);
                let kmin = if d.is_positive(r) { 0 } else { 1 };
                let kmax = p - 1 + (!d.is_positive(u.perm[r] as usize)) as i64;
                (kmax >= kmin).then_some((r, kmin, kmax))
            })
            .collect()
    }

    /// `{β ≻ 0 : u(β) ≺ 0}`, sorted.
    pub fn inversions(&self, u: &WeylElt) -> Vec<AffineRoot> {
        let mut out: Vec<AffineRoot> = self
            .inversion_ranges(u)
            .into_iter()
            .flat_map(|(r, lo, hi)| (lo..=hi).map(move |k| AffineRoot::new(r, k)))
            .collect();
        out.sort();
        out
    }

    pub fn std_length(&self, u: &WeylElt) -> i64 {
        self.inversion_ranges(u).iter().map(|(_, lo, hi)| hi - lo + 1).sum()
    }

    /// Length of the finite part `ẘ`.
    pub fn finite_length(&self, u: &WeylElt) -> i64 {
        let np = self.data.num_positive();
        u.perm[..np].iter().filter(|&&r| r as usize >= np).count() as i64
    }

    /// `⟨2ρ, ξ⟩`.
    pub fn two_rho_on_translation(&self, u: &WeylElt) -> i64 {
        2 * u.xi.iter().sum::<i64>()
    }

    /// Whether `s_i u < u`.
    pub fn is_left_descent(&self, u: &WeylElt, i: usize) -> bool {
        let inv = self.inverse(u);
        !self.is_positive(&self.act_on_root(&inv, &self.simple_root(i)))
    }

    /// Whether `u s_i < u`.
    pub fn is_right_descent(&self, u: &WeylElt, i: usize) -> bool {
        !self.is_positive(&self.act_on_root(u, &self.simple_root(i)))
    }

    fn left_descents_of(&self, u: &WeylElt) -> Vec<usize> {
        let inv = self.inverse(u);
        (0..=self.rank()).filter(|&i| !self.is_positive(&self.act_on_root(&inv, &self.simple_root(i)))).collect()
    }

    /// Reduced word built by repeatedly stripping a left descent; `choose`
    /// picks one of the (sorted) available descents.
    pub fn reduced_word_by(&self, u: &WeylElt, mut choose: impl FnMut(&[usize]) -> usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = u.clone();
        loop {
            let desc = self.left_descents_of(&cur);
            if desc.is_empty() {
                break;
            }
            let i = desc[choose(&desc) % desc.len()];
            word.push(i);
            cur = self.mul(&self.simple_reflection(i).unwrap(), &cur);
        }
        word
    }

    /// Reduced word using the lowest-index left descent at every step.
    pub fn canonical_word(&self, u: &WeylElt) -> Vec<usize> {
        self.reduced_word_by(u, |_| 0)
    }

    /// Standard Bruhat order, decided by the lifting property along left
    /// descents of `y` (equivalent to the subword criterion).
    pub fn leq_standard(&self, x: &WeylElt, y: &WeylElt) -> bool {
        let mut x = x.clone();
        let mut y = y.clone();
        loop {
            let (lx, ly) = (self.std_length(&x), self.std_length(&y));
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            if lx == 0 {
                return true;
            }
            let i = self.left_descents_of(&y)[0];
            let s = self.simple_reflection(i).unwrap();
            if self.is_left_descent(&x, i) {
                x = self.mul(&s, &x);
            }
            y = self.mul(&s, &y);
        }
    }

    /// The Bruhat interval `[e, y]` as the set of subword products.
    pub fn interval_standard(&self, y: &WeylElt) -> Vec<WeylElt> {
        let mut set: HashSet<WeylElt> = HashSet::from([self.identity()]);
        for i in self.canonical_word(y) {
            let s = self.simple_reflection(i).unwrap();
            let grown: Vec<WeylElt> = set.iter().map(|z| self.mul(z, &s)).collect();
            set.extend(grown);
        }
        let mut out: Vec<WeylElt> = set.into_iter().collect();
        out.sort();
        out
    }

    /// If `r` is a reflection, the positive root `β` with `r = s_β`.
    pub fn reflection_root(&self, r: &WeylElt) -> Option<AffineRoot> {
        let a = *self.reflection_by_perm.get(&r.perm)?;
        let c = self.data.coroot(a);
        let (j, cj) = c.iter().enumerate().find(|(_, v)| **v != 0)?;
        if r.xi[j] % cj != 0 {
            return None;
        }
        let k = r.xi[j] / cj;
        if r.xi.iter().zip(c).any(|(x, y)| *x != k * y) {
            return None;
        }
        Some(if k >= 0 { AffineRoot::new(a, k) } else { AffineRoot::new(self.data.negate(a), -k) })
    }

    /// Matrix of `ẘ` on simple-coroot coordinates (column `i` is `ẘ(α_i∨)`).
    pub fn fin_matrix(&self, u: &WeylElt) -> Vec<Vec<i64>> {
        let n = self.rank();
        let cols: Vec<&[i64]> = (1..=n).map(|i| self.data.coroot(u.perm[self.data.simple(i)] as usize)).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect()
    }

    /// Builds the element with finite matrix `m` and translation `xi`,
    /// rejecting matrices that do not come from the finite Weyl group.
    pub fn from_matrix(&self, m: &[Vec<i64>], xi: &[i64]) -> Result<WeylElt> {
        let n = self.rank();
        let bad = || Error::Parse("matrix is not a finite Weyl group element".into());
        if m.len() != n || m.iter().any(|r| r.len() != n) || xi.len() != n {
            return Err(bad());
        }
        // Columns give the images of simple coroots; recover the images of
        // all roots through their coroot expansions.
        let d = &self.data;
        let mut perm = Vec::with_capacity(d.num_roots());
        for r in 0..d.num_roots() {
            let c = d.coroot(r);
            let img: Vec<i64> = (0..n).map(|row| (0..n).map(|k| m[row][k] * c[k]).sum()).collect();
            let idx = (0..d.num_roots()).find(|&s| d.coroot(s) == &img[..]).ok_or_else(bad)?;
            perm.push(idx as u16);
        }
        let u = WeylElt { perm, xi: xi.to_vec() };
        // A genuine element is a product of simple reflections.
        let w = self.canonical_word(&self.finite_part(&u));
        if self.from_word(&w)?.perm != u.perm {
            return Err(bad());
        }
        Ok(u)
    }

    /// Whether the finite part lies in the parabolic subgroup `W̊_J`.
    pub fn finite_part_in(&self, u: &WeylElt, subset: &[usize]) -> bool {
        let d = &self.data;
        (0..d.num_positive())
            .filter(|&r| !d.is_positive(u.perm[r] as usize))
            .all(|r| d.root(r).iter().enumerate().all(|(i, &a)| a == 0 || subset.contains(&(i + 1))))
    }

    /// Formats an element as its canonical word, e.g. `s2s1s0`, or `e`.
    pub fn name(&self, u: &WeylElt) -> String {
        let w = self.canonical_word(u);
        if w.is_empty() {
            "e".to_string()
        } else {
            w.iter().map(|i| format!("s{i}")).collect()
        }
    }

    pub fn root_name(&self, beta: &AffineRoot) -> String {
        RootDisplay { group: self, root: *beta }.to_string()
    }

    /// Sorts elements by standard length, then canonical word.
    pub fn sort_elements(&self, elts: &mut [WeylElt]) {
        elts.sort_by_cached_key(|u| (self.std_length(u), self.canonical_word(u)));
    }

    /// All elements of standard length at most `max_len`, by breadth-first
    /// search along left multiplication by simple reflections.
    pub fn ball(&self, max_len: usize) -> Vec<WeylElt> {
        let mut seen: HashSet<WeylElt> = HashSet::from([self.identity()]);
        let mut layer = vec![self.identity()];
        let mut out = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for u in &layer {
                for i in 0..=self.rank() {
                    if !self.is_left_descent(u, i) {
                        let v = self.mul(&self.simple_reflection(i).unwrap(), u);
                        if seen.insert(v.clone()) {
                            next.push(v);
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

struct RootDisplay<'a> {
    group: &'a AffineWeylGroup,
    root: AffineRoot,
}

impl fmt::Display for RootDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.group.data.root(self.root.alpha);
        let mut first = true;
        for (i, &a) in c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let sign = if a < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = if a.abs() == 1 { String::new() } else { a.abs().to_string() };
            write!(f, "{sign}{mag}a{}", i + 1)?;
            first = false;
        }
        match self.root.k {
            0 => Ok(()),
            1 => write!(f, "+d"),
            -1 => write!(f, "-d"),
            k if k > 0 => write!(f, "+{k}d"),
            k => write!(f, "{k}d"),
        }
    }
}

fn invert_perm(p: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j as usize] = i as u16;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_root_system;
    use proptest::prelude::*;

    fn a2() -> AffineWeylGroup {
        AffineWeylGroup::new(build_root_system('A', 2).unwrap())
    }

    fn all_groups() -> Vec<AffineWeylGroup> {
        [('A', 1), ('A', 2), ('A', 3), ('B', 2), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4), ('E', 6)]
            .iter()
            .map(|&(l, n)| AffineWeylGroup::new(build_root_system(l, n).unwrap()))
            .collect()
    }

    #[test]
    fn s0_is_theta_reflection_times_translation() {
        for g in all_groups() {
            let d = g.data();
            let s_theta = g.reflection(&AffineRoot::new(d.theta(), 0));
            let neg_theta_coroot: Vec<i64> = d.comarks.iter().map(|x| -x).collect();
            let t = g.translation(&neg_theta_coroot).unwrap();
            assert_eq!(g.simple_reflection(0).unwrap(), g.mul(&s_theta, &t), "{}", d.ty);
        }
    }

    #[test]
    fn coxeter_relations_hold() {
        for g in all_groups() {
            let n = g.rank();
            for i in 0..=n {
                let si = g.simple_reflection(i).unwrap();
                assert!(g.is_identity(&g.mul(&si, &si)));
                assert_eq!(g.std_length(&si), 1);
                for j in 0..=n {
                    let sj = g.simple_reflection(j).unwrap();
                    let mut p = g.identity();
                    let mut order = 0;
                    loop {
                        p = g.mul(&p, &g.mul(&si, &sj));
                        order += 1;
                        if g.is_identity(&p) || order > 12 {
                            break;
                        }
                    }
                    // A1 affine has the infinite dihedral group.
                    if !(n == 1 && i != j) {
                        assert!(order <= 6, "{} s{i}s{j}", g.data().ty);
                    }
                }
            }
        }
    }

    #[test]
    fn finite_weyl_group_order_matches_formula() {
        for (l, n) in [('A', 3), ('B', 3), ('C', 3), ('G', 2), ('D', 4), ('F', 4)] {
            let g = AffineWeylGroup::new(build_root_system(l, n).unwrap());
            let gens: Vec<WeylElt> = (1..=n).map(|i| g.simple_reflection(i).unwrap()).collect();
            let mut seen: HashSet<WeylElt> = HashSet::from([g.identity()]);
            let mut stack = vec![g.identity()];
            while let Some(u) = stack.pop() {
                for s in &gens {
                    let v = g.mul(s, &u);
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
            assert_eq!(seen.len() as u64, g.data().ty.weyl_order());
        }
    }

    #[test]
    fn worked_identity_in_a2() {
        let g = a2();
        let lhs = g.from_word(&[2, 1, 0]).unwrap();
        let rhs = g.mul(&g.simple_reflection(1).unwrap(), &g.translation(&[-1, -1]).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(g.canonical_word(&lhs), vec![2, 1, 0]);
        assert_eq!(g.name(&lhs), "s2s1s0");
    }

    #[test]
    fn inversions_of_s0_is_alpha0() {
        let g = a2();
        let s0 = g.simple_reflection(0).unwrap();
        assert_eq!(g.inversions(&s0), vec![g.simple_root(0)]);
    }

    #[test]
    fn inversion_count_matches_brute_enumeration() {
        // Oracle: scan α + kδ for |k| ≤ 8 directly through the root action.
        let g = a2();
        for u in g.ball(5) {
            let mut brute = Vec::new();
            for r in 0..g.data().num_roots() {
                for k in -8..=8 {
                    let b = AffineRoot::new(r, k);
                    if g.is_positive(&b) && !g.is_positive(&g.act_on_root(&u, &b)) {
                        brute.push(b);
                    }
                }
            }
            brute.sort();
            assert_eq!(g.inversions(&u), brute);
        }
    }

    #[test]
    fn ball_sizes_in_a2_follow_growth_series() {
        // Oracle: every word of length at most 5, evaluated and filtered.
        let g = a2();
        let mut seen = HashSet::new();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..5 {
            let mut next = Vec::new();
            for w in &words {
                for i in 0..3 {
                    let mut v = w.clone();
                    v.push(i);
                    next.push(v);
                }
            }
            words.extend(next);
            words.sort();
            words.dedup();
        }
        for w in &words {
            let u = g.from_word(w).unwrap();
            if g.std_length(&u) <= 5 {
                seen.insert(u);
            }
        }
        assert_eq!(g.ball(5).len(), seen.len());
    }

    #[test]
    fn standard_order_matches_subword_oracle() {
        let g = a2();
        let elts = g.ball(4);
        for y in &elts {
            let below: HashSet<WeylElt> = g.interval_standard(y).into_iter().collect();
            for x in &elts {
                assert_eq!(g.leq_standard(x, y), below.contains(x));
            }
        }
    }

    #[test]
    fn fin_matrix_round_trips() {
        let g = AffineWeylGroup::new(build_root_system('G', 2).unwrap());
        for u in g.ball(5) {
            let m = g.fin_matrix(&u);
            assert_eq!(g.from_matrix(&m, u.xi()).unwrap(), u);
        }
        assert!(g.from_matrix(&[vec![2, 0], vec![0, 1]], &[0, 0]).is_err());
    }

    #[test]
    fn reflection_root_recovers_roots() {
        let g = a2();
        for r in 0..g.data().num_roots() {
            for k in -3..=3 {
                let b = AffineRoot::new(r, k);
                if g.is_positive(&b) {
                    assert_eq!(g.reflection_root(&g.reflection(&b)), Some(b));
                }
            }
        }
        assert_eq!(g.reflection_root(&g.from_word(&[1, 2]).unwrap()), None);
        assert_eq!(g.reflection_root(&g.translation(&[1, 0]).unwrap()), None);
    }

    fn word_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
        prop::collection::vec(0..=n, 0..8)
    }

    proptest! {
        #[test]
        fn group_axioms(a in word_strategy(2), b in word_strategy(2), c in word_strategy(2)) {
            let g = a2();
            let (x, y, z) = (g.from_word(&a).unwrap(), g.from_word(&b).unwrap(), g.from_word(&c).unwrap());
            prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
            prop_assert!(g.is_identity(&g.mul(&x, &g.inverse(&x))));
            prop_assert_eq!(g.std_length(&x), g.std_length(&g.inverse(&x)));
        }

        #[test]
        fn canonical_word_is_reduced(a in word_strategy(3)) {
            let g = AffineWeylGroup::new(build_root_system('A', 3).unwrap());
            let x = g.from_word(&a).unwrap();
            let w = g.canonical_word(&x);
            prop_assert_eq!(w.len() as i64, g.std_length(&x));
            prop_assert_eq!(g.from_word(&w).unwrap(), x);
        }

        #[test]
        fn actions_preserve_pairing(a in word_strategy(2), fin in prop::collection::vec(-3i64..4, 2), lev in -2i64..3, del in -2i64..3, cf in prop::collection::vec(-3i64..4, 2), dd in -2i64..3, kk in -2i64..3) {
            let g = a2();
            let d = g.data();
            let u = g.from_word(&a).unwrap();
            let lam = d.weight(fin.iter().map(|&v| int(v)).collect(), int(lev), int(del)).unwrap();
            let eta = d.coweight(cf.iter().map(|&v| int(v)).collect(), int(dd), int(kk)).unwrap();
            let before = d.pair(&lam, &eta).unwrap();
            let after = d.pair(&g.act_on_weight(&u, &lam).unwrap(), &g.act_on_coweight(&u, &eta).unwrap()).unwrap();
            prop_assert_eq!(before, after);
        }

        #[test]
        fn actions_compose(a in word_strategy(2), b in word_strategy(2), cf in prop::collection::vec(-3i64..4, 2), dd in -2i64..3) {
            let g = a2();
            let d = g.data();
            let (x, y) = (g.from_word(&a).unwrap(), g.from_word(&b).unwrap());
            let eta = d.coweight(cf.iter().map(|&v| int(v)).collect(), int(dd), int(0)).unwrap();
            let lhs = g.act_on_coweight(&g.mul(&x, &y), &eta).unwrap();
            let rhs = g.act_on_coweight(&x, &g.act_on_coweight(&y, &eta).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lam = d.affine_fundamental_weight(1).unwrap();
            let lhs = g.act_on_weight(&g.mul(&x, &y), &lam).unwrap();
            let rhs = g.act_on_weight(&x, &g.act_on_weight(&y, &lam).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            for r in 0..d.num_roots() {
                let beta = AffineRoot::new(r, 2);
                prop_assert_eq!(g.act_on_root(&g.mul(&x, &y), &beta), g.act_on_root(&x, &g.act_on_root(&y, &beta)));
            }
        }
    }

    #[test]
    fn simple_reflections_act_on_simple_roots_by_cartan_entries() {
        for g in all_groups() {
            let d = g.data();
            let n = g.rank();
            for i in 1..=n {
                for j in 1..=n {
                    let img = g.act_on_root(&g.simple_reflection(i).unwrap(), &g.simple_root(j));
                    let mut expect = d.root(d.simple(j)).to_vec();
                    expect[i - 1] -= d.cartan[i - 1][j - 1];
                    assert_eq!(d.root(img.alpha), &expect[..]);
                    assert_eq!(img.k, 0);
                }
            }
            // s_0(α_0) = -α_0.
            let s0 = g.simple_reflection(0).unwrap();
            assert_eq!(g.act_on_root(&s0, &g.simple_root(0)), g.negate_root(&g.simple_root(0)));
        }
    }

    #[test]
    fn mismatched_context_is_rejected() {
        let g = a2();
        let other = build_root_system('B', 2).unwrap();
        let lam = other.affine_fundamental_weight(0).unwrap();
        assert_eq!(g.act_on_weight(&g.identity(), &lam), Err(Error::ContextMismatch));
    }

    #[test]
    fn delta_is_fixed_and_lambda0_moves_by_alpha0() {
        let g = a2();
        let d = g.data();
        let s0 = g.simple_reflection(0).unwrap();
        let l0 = d.affine_fundamental_weight(0).unwrap();
        let img = g.act_on_weight(&s0, &l0).unwrap();
        // s_0 Λ_0 = Λ_0 − α_0 with α_0 = δ − θ; θ = ω_1 + ω_2 in A2.
        assert_eq!(img.fin, vec![int(1), int(1)]);
        assert_eq!(img.delta, int(-1));
        let u = g.from_word(&[0, 1, 2, 0]).unwrap();
        assert_eq!(g.act_on_weight(&u, &d.null_root()).unwrap(), d.null_root());
        assert_eq!(g.act_on_coweight(&u, &d.central_coweight()).unwrap(), d.central_coweight());
    }
}
