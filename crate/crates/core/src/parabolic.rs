//! Coweight classes, the subgroups `W(η)` and their coset representatives.
//!
//! For `⟨δ, η⟩ ≠ 0`, `W(η)` is the finite parabolic subgroup `W_J` on the
//! affine simple indices where `η` vanishes.  At level zero it is
//! `(W_J)_af = W̊_J ⋉ Q̊_J∨`, a Coxeter group generated by the `s_j`, `j ∈ J`,
//! together with `s_{δ-θ_c}` for the highest root `θ_c` of each component
//! of `J`.  In all cases its roots are the real roots orthogonal to `η`.

use std::collections::{HashSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::cartan::{Coweight, FiniteCartanData, Weight};
use crate::error::{Error, Result};
use crate::rational::{as_i64, Rat};
use crate::weyl::{AffineRoot, AffineWeylGroup, WeylElt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Positive,
    Negative,
    LevelZero,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::Positive => "positive",
            Classification::Negative => "negative",
            Classification::LevelZero => "level_zero",
        }
    }
}

/// Class of `η` by the sign of `⟨δ, η⟩`.
pub fn classify(eta: &Coweight) -> Classification {
    if eta.d.is_positive() {
        Classification::Positive
    } else if eta.d.is_negative() {
        Classification::Negative
    } else {
        Classification::LevelZero
    }
}

/// Affine dominant, affine antidominant, or finite dominant at level zero.
pub fn is_appropriately_dominant(data: &FiniteCartanData, eta: &Coweight) -> Result<bool> {
    if eta.ty != data.ty {
        return Err(Error::ContextMismatch);
    }
    let n = data.rank();
    Ok(match classify(eta) {
        Classification::Positive => (0..=n).all(|i| !data.simple_on_coweight(i, eta).is_negative()),
        Classification::Negative => (0..=n).all(|i| !data.simple_on_coweight(i, eta).is_positive()),
        Classification::LevelZero => (1..=n).all(|i| !eta.fin[i - 1].is_negative()),
    })
}

/// Moves `η` into its dominant chamber by simple reflections, returning
/// `(v, vη)`.
pub fn dominantize(group: &AffineWeylGroup, eta: &Coweight) -> Result<(WeylElt, Coweight)> {
    let d = group.data();
    let class = classify(eta);
    let first = if class == Classification::LevelZero { 1 } else { 0 };
    let mut v = group.identity();
    let mut cur = eta.clone();
    loop {
        let bad = (first..=d.rank()).find(|&i| {
            let p = d.simple_on_coweight(i, &cur);
            match class {
                Classification::Negative => p.is_positive(),
                _ => p.is_negative(),
            }
        });
        let Some(i) = bad else { break };
        let s = group.simple_reflection(i)?;
        cur = group.act_on_coweight(&s, &cur)?;
        v = group.mul(&s, &v);
    }
    Ok((v, cur))
}

/// Whether `u η = η`.
pub fn stabilizes(group: &AffineWeylGroup, u: &WeylElt, eta: &Coweight) -> Result<bool> {
    Ok(group.act_on_coweight(u, eta)? == *eta)
}

#[derive(Debug, Clone)]
pub struct EtaContext {
    eta: Coweight,
    class: Classification,
    vanishing: Vec<usize>,
    components: Vec<Vec<usize>>,
    generators: Vec<AffineRoot>,
    generator_elts: Vec<WeylElt>,
}

impl EtaContext {
    pub fn new(group: &AffineWeylGroup, eta: &Coweight) -> Result<Self> {
        let d = group.data();
        if !is_appropriately_dominant(d, eta)? {
            return Err(Error::NotAppropriatelyDominant);
        }
        let class = classify(eta);
        let first = if class == Classification::LevelZero { 1 } else { 0 };
        let vanishing: Vec<usize> = (first..=d.rank()).filter(|&i| d.simple_on_coweight(i, eta).is_zero()).collect();
        let mut generators: Vec<AffineRoot> = vanishing.iter().map(|&j| group.simple_root(j)).collect();
        let components = if class == Classification::LevelZero {
            let comps = d.components(&vanishing);
            for c in &comps {
                generators.push(AffineRoot::new(d.negate(d.highest_root_of(c)), 1));
            }
            comps
        } else {
            Vec::new()
        };
        let generator_elts = generators.iter().map(|b| group.reflection(b)).collect();
        Ok(EtaContext { eta: eta.clone(), class, vanishing, components, generators, generator_elts })
    }

    pub fn eta(&self) -> &Coweight {
        &self.eta
    }

    pub fn classification(&self) -> Classification {
        self.class
    }

    /// Simple indices `j` with `⟨α_j, η⟩ = 0`.
    pub fn vanishing_set(&self) -> &[usize] {
        &self.vanishing
    }

    /// Dynkin components of the vanishing set (level zero only).
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Roots of the canonical Coxeter generators of `W(η)`.
    pub fn generators(&self) -> &[AffineRoot] {
        &self.generators
    }

    pub fn generator_elements(&self) -> &[WeylElt] {
        &self.generator_elts
    }

    /// Whether `β` is a root of `W(η)`.
    pub fn is_subsystem_root(&self, group: &AffineWeylGroup, beta: &AffineRoot) -> bool {
        group.data().root_on_coweight(beta.alpha, beta.k, &self.eta).is_zero()
    }

    /// Coxeter length in `W(η)`, counting inversions orthogonal to `η`.
    pub fn length(&self, group: &AffineWeylGroup, u: &WeylElt) -> i64 {
        let d = group.data();
        let dd = &self.eta.d;
        let mut total = 0;
        for (r, lo, hi) in group.inversion_ranges(u) {
            let p = d.root_on_coweight(r, 0, &self.eta);
            if dd.is_zero() {
                if p.is_zero() {
                    total += hi - lo + 1;
                }
            } else if let Some(k) = as_i64(&(-p / dd)) {
                if lo <= k && k <= hi {
                    total += 1;
                }
            }
        }
        total
    }

    /// Membership in `W(η)`.
    pub fn contains(&self, group: &AffineWeylGroup, u: &WeylElt) -> bool {
        match self.class {
            Classification::LevelZero => {
                group.finite_part_in(u, &self.vanishing)
                    && u.xi().iter().enumerate().all(|(i, &x)| x == 0 || self.vanishing.contains(&(i + 1)))
            }
            _ => group.canonical_word(u).iter().all(|j| self.vanishing.contains(j)),
        }
    }

    /// Whether `v` maps every positive root of `W(η)` to a positive root.
    pub fn is_coset_rep(&self, group: &AffineWeylGroup, v: &WeylElt) -> bool {
        self.generators.iter().all(|g| group.is_positive(&group.act_on_root(v, g)))
    }

    /// Splits `w = π^(η)(w) · π_(η)(w)` with the first factor a coset
    /// representative and the second in `W(η)`.
    pub fn factorize(&self, group: &AffineWeylGroup, w: &WeylElt) -> (WeylElt, WeylElt) {
        let mut u = w.clone();
        let mut x = group.identity();
        while let Some(k) = self.generators.iter().position(|g| !group.is_positive(&group.act_on_root(&u, g))) {
            let s = &self.generator_elts[k];
            u = group.mul(&u, s);
            x = group.mul(s, &x);
        }
        (u, x)
    }

    pub fn project_rep(&self, group: &AffineWeylGroup, w: &WeylElt) -> WeylElt {
        self.factorize(group, w).0
    }

    pub fn project_sub(&self, group: &AffineWeylGroup, w: &WeylElt) -> WeylElt {
        self.factorize(group, w).1
    }

    /// The Bruhat interval `[e, x]` of the Coxeter group `W(η)`.
    pub fn interval(&self, group: &AffineWeylGroup, x: &WeylElt) -> Result<Vec<WeylElt>> {
        if !self.contains(group, x) {
            return Err(Error::NotInSubgroup);
        }
        let mut seen: HashSet<WeylElt> = HashSet::from([x.clone()]);
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(z) = queue.pop_front() {
            let lz = self.length(group, &z);
            if lz == 0 {
                continue;
            }
            for beta in group.inversions(&group.inverse(&z)) {
                if !self.is_subsystem_root(group, &beta) {
                    continue;
                }
                let down = group.mul(&group.reflection(&beta), &z);
                if self.length(group, &down) == lz - 1 && seen.insert(down.clone()) {
                    queue.push_back(down);
                }
            }
        }
        let mut out: Vec<WeylElt> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Minimal coset representatives of standard length at most `max_len`.
    pub fn coset_reps_up_to(&self, group: &AffineWeylGroup, max_len: usize) -> Vec<WeylElt> {
        let mut reps: Vec<WeylElt> = group.ball(max_len).into_iter().filter(|v| self.is_coset_rep(group, v)).collect();
        group.sort_elements(&mut reps);
        reps
    }
}

/// Affine simple indices fixing `λ`, i.e. `⟨λ, α_i∨⟩ = 0`.
pub fn weight_stabilizer_indices(data: &FiniteCartanData, lambda: &Weight) -> Vec<usize> {
    (0..=data.rank()).filter(|&i| data.weight_on_simple_coroot(i, lambda).is_zero()).collect()
}

/// Dominant integral of positive level.
pub fn is_dominant_integral(data: &FiniteCartanData, lambda: &Weight) -> bool {
    lambda.ty == data.ty
        && lambda.level.is_positive()
        && (0..=data.rank()).all(|i| {
            let v: Rat = data.weight_on_simple_coroot(i, lambda);
            v.is_integer() && !v.is_negative()
        })
}

/// Every element of the finite parabolic subgroup on `subset`.
pub fn parabolic_elements(group: &AffineWeylGroup, subset: &[usize]) -> Result<Vec<WeylElt>> {
    if subset.len() > group.rank() {
        return Err(Error::InfiniteParabolic);
    }
    let gens: Vec<WeylElt> = subset.iter().map(|&j| group.simple_reflection(j)).collect::<Result<_>>()?;
    let mut seen: HashSet<WeylElt> = HashSet::from([group.identity()]);
    let mut stack = vec![group.identity()];
    while let Some(u) = stack.pop() {
        for s in &gens {
            let v = group.mul(s, &u);
            if seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    let mut out: Vec<WeylElt> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// The longest element of `w W_λ`.
pub fn max_length_rep(group: &AffineWeylGroup, w: &WeylElt, lambda: &Weight) -> Result<WeylElt> {
    if !is_dominant_integral(group.data(), lambda) {
        return Err(Error::NotDominantIntegral);
    }
    let stab = weight_stabilizer_indices(group.data(), lambda);
    let mut cur = w.clone();
    while let Some(&j) = stab.iter().find(|&&j| !group.is_right_descent(&cur, j)) {
        cur = group.mul(&cur, &group.simple_reflection(j)?);
    }
    Ok(cur)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RightSubgroup {
    /// The full stabilizer `W_η`.
    Stabilizer,
    /// The Coxeter subgroup `W(η)`.
    Coxeter,
}

/// Whether `W_λ w₁ H = W_λ w₂ H` for the chosen right subgroup `H`.
pub fn double_coset_equal(
    group: &AffineWeylGroup,
    lambda: &Weight,
    ctx: &EtaContext,
    w1: &WeylElt,
    w2: &WeylElt,
    right: RightSubgroup,
) -> Result<bool> {
    if !is_dominant_integral(group.data(), lambda) {
        return Err(Error::NotDominantIntegral);
    }
    let left = parabolic_elements(group, &weight_stabilizer_indices(group.data(), lambda))?;
    let w1inv = group.inverse(w1);
    for x in &left {
        let h = group.mul(&group.mul(&w1inv, x), w2);
        let inside = match right {
            RightSubgroup::Stabilizer => stabilizes(group, &h, ctx.eta())?,
            RightSubgroup::Coxeter => ctx.contains(group, &h),
        };
        if inside {
            return Ok(true);
        }
    }
    Ok(false)
}
