//! Affine Demazure weight polytopes `P = conv{qλ : q ≤ w}`, their defining
//! inequalities and the vertices on each face.

use std::collections::{HashMap, HashSet};

use crate::cartan::{Coweight, Weight};
use crate::demazure::demazure_product;
use crate::error::{Error, Result};
use crate::lp::convex_combination;
use crate::orders::{OrderKind, Twist};
use crate::parabolic::{is_dominant_integral, max_length_rep, EtaContext};
use crate::rational::Rat;
use crate::weyl::{AffineWeylGroup, WeylElt};

#[derive(Debug, Clone)]
pub struct DemazurePolytope {
    pub lambda: Weight,
    /// Longest representative of the coset `w W_λ`.
    pub w: WeylElt,
    /// Distinct vertices, each with one `q ≤ w` such that `qλ` is the vertex.
    pub vertices: Vec<(Weight, WeylElt)>,
}

pub fn build_polytope(group: &AffineWeylGroup, lambda: &Weight, w: &WeylElt) -> Result<DemazurePolytope> {
    if !is_dominant_integral(group.data(), lambda) {
        return Err(Error::NotDominantIntegral);
    }
    let w = max_length_rep(group, w, lambda)?;
    let mut seen: HashMap<Weight, WeylElt> = HashMap::new();
    let mut order = Vec::new();
    for q in group.interval_standard(&w) {
        let mu = group.act_on_weight(&q, lambda)?;
        if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(mu.clone()) {
            order.push(mu);
            e.insert(q);
        }
    }
    let vertices = order
        .into_iter()
        .map(|mu| {
            let q = seen.remove(&mu).unwrap();
            (mu, q)
        })
        .collect();
    Ok(DemazurePolytope { lambda: lambda.clone(), w, vertices })
}

impl DemazurePolytope {
    pub fn vertex_set(&self) -> HashSet<Weight> {
        self.vertices.iter().map(|(v, _)| v.clone()).collect()
    }
}

/// Exact membership test by linear programming over the vertices.
pub fn contains(poly: &DemazurePolytope, mu: &Weight) -> Result<bool> {
    if mu.ty != poly.lambda.ty {
        return Err(Error::ContextMismatch);
    }
    if mu.level != poly.lambda.level {
        return Ok(false);
    }
    let coords = |x: &Weight| -> Vec<Rat> {
        let mut v = x.fin.clone();
        v.push(x.delta.clone());
        v
    };
    let pts: Vec<Vec<Rat>> = poly.vertices.iter().map(|(v, _)| coords(v)).collect();
    Ok(convex_combination(&pts, &coords(mu)).is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Positive,
    Negative,
    LevelZero,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::Positive => "positive",
            Family::Negative => "negative",
            Family::LevelZero => "level_zero",
        }
    }

    pub fn all() -> [Family; 3] {
        [Family::Positive, Family::Negative, Family::LevelZero]
    }

    /// The coweight `Λ̌_i`, `-Λ̌_i` or `ω_i∨` of the family.
    pub fn coweight(&self, group: &AffineWeylGroup, i: usize) -> Result<Coweight> {
        let d = group.data();
        match self {
            Family::Positive => d.affine_fundamental_coweight(i),
            Family::Negative => Ok(-&d.affine_fundamental_coweight(i)?),
            Family::LevelZero => d.fundamental_coweight(i),
        }
    }

    pub fn indices(&self, group: &AffineWeylGroup) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::LevelZero => 1..=group.rank(),
            _ => 0..=group.rank(),
        }
    }
}

/// `⟨μ, normal⟩ ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub family: Family,
    pub index: usize,
    pub v: WeylElt,
    pub normal: Coweight,
    pub rhs: Rat,
}

impl Inequality {
    pub fn holds(&self, group: &AffineWeylGroup, mu: &Weight) -> Result<bool> {
        Ok(group.data().pair(mu, &self.normal)? >= self.rhs)
    }
}

/// The right-hand side `⟨λ, (w⁻¹ ∗_⋄ v)η⟩` of the inequality attached to
/// `(v, η)`, with `⋄` the regular order of `η`'s class.
pub fn inequality_rhs(group: &AffineWeylGroup, poly: &DemazurePolytope, eta: &Coweight, v: &WeylElt) -> Result<Rat> {
    let kind = OrderKind::regular_for(crate::parabolic::classify(eta));
    let (p, _) = demazure_product(group, &kind, &group.inverse(&poly.w), v);
    group.data().pair(&poly.lambda, &group.act_on_coweight(&p, eta)?)
}

/// All inequalities from the three families with `v` a coset
/// representative of standard length at most `max_len`.
pub fn inequalities(group: &AffineWeylGroup, poly: &DemazurePolytope, max_len: usize) -> Result<Vec<Inequality>> {
    let mut out = Vec::new();
    for family in Family::all() {
        for i in family.indices(group) {
            let eta = family.coweight(group, i)?;
            let ctx = EtaContext::new(group, &eta)?;
            for v in ctx.coset_reps_up_to(group, max_len) {
                let rhs = inequality_rhs(group, poly, &eta, &v)?;
                let normal = group.act_on_coweight(&v, &eta)?;
                out.push(Inequality { family, index: i, v, normal, rhs });
            }
        }
    }
    Ok(out)
}

/// The face `F(v, η)`: its points attain the inequality of `(v, η)`.
#[derive(Debug, Clone)]
pub struct FaceSpec {
    pub ctx: EtaContext,
    pub v: WeylElt,
}

impl FaceSpec {
    pub fn new(group: &AffineWeylGroup, eta: &Coweight, v: &WeylElt) -> Result<Self> {
        let ctx = EtaContext::new(group, eta)?;
        if !ctx.is_coset_rep(group, v) {
            return Err(Error::NotCosetRep);
        }
        Ok(FaceSpec { ctx, v: v.clone() })
    }

    fn regular_kind(&self) -> OrderKind {
        OrderKind::regular_for(self.ctx.classification())
    }

    fn twisted_kind(&self, group: &AffineWeylGroup) -> Result<OrderKind> {
        Ok(OrderKind::Twisted(Twist::new(group, self.ctx.eta())?))
    }
}

/// The two coset computations the face theorem relies on.
struct FaceData {
    /// `π^(η)(w⁻¹ ∗_⋄ v)`.
    regular_rep: WeylElt,
    /// `π^(η)(w⁻¹ ∗_η v)`.
    twisted_rep: WeylElt,
    /// `π_(η)(w⁻¹ ∗_η v)`.
    twisted_sub: WeylElt,
}

fn face_data(group: &AffineWeylGroup, poly: &DemazurePolytope, spec: &FaceSpec) -> Result<FaceData> {
    let winv = group.inverse(&poly.w);
    let (p_reg, _) = demazure_product(group, &spec.regular_kind(), &winv, &spec.v);
    let (p_tw, _) = demazure_product(group, &spec.twisted_kind(group)?, &winv, &spec.v);
    let regular_rep = spec.ctx.project_rep(group, &p_reg);
    let (twisted_rep, twisted_sub) = spec.ctx.factorize(group, &p_tw);
    Ok(FaceData { regular_rep, twisted_rep, twisted_sub })
}

/// Whether the regular and twisted products lie in the same `W(η)` coset.
pub fn check_same_coset(group: &AffineWeylGroup, poly: &DemazurePolytope, spec: &FaceSpec) -> Result<bool> {
    let fd = face_data(group, poly, spec)?;
    Ok(fd.regular_rep == fd.twisted_rep)
}

/// Vertices on the face, read off from the interval `[e, π_(η)(w⁻¹ ∗_η v)]`
/// of `W(η)`: each `y` in it gives the vertex `qλ` with
/// `q = v y⁻¹ π^(η)(w⁻¹ ∗_⋄ v)⁻¹`.
pub fn face_vertices(
    group: &AffineWeylGroup,
    poly: &DemazurePolytope,
    spec: &FaceSpec,
) -> Result<Vec<(WeylElt, Weight)>> {
    let fd = face_data(group, poly, spec)?;
    if fd.regular_rep != fd.twisted_rep {
        return Err(Error::SameCosetViolation);
    }
    let rep_inv = group.inverse(&fd.regular_rep);
    let mut out = Vec::new();
    for y in spec.ctx.interval(group, &fd.twisted_sub)? {
        let q = group.mul(&group.mul(&spec.v, &group.inverse(&y)), &rep_inv);
        if !group.leq_standard(&q, &poly.w) {
            return Err(Error::WitnessOutsideInterval(group.name(&q)));
        }
        let mu = group.act_on_weight(&q, &poly.lambda)?;
        out.push((q, mu));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Vertices on the face by scanning every `q ≤ w`.
pub fn face_vertices_brute(
    group: &AffineWeylGroup,
    poly: &DemazurePolytope,
    spec: &FaceSpec,
) -> Result<Vec<(WeylElt, Weight)>> {
    let eta = spec.ctx.eta();
    let rhs = inequality_rhs(group, poly, eta, &spec.v)?;
    let normal = group.act_on_coweight(&spec.v, eta)?;
    let mut out = Vec::new();
    for q in group.interval_standard(&poly.w) {
        let mu = group.act_on_weight(&q, &poly.lambda)?;
        if group.data().pair(&mu, &normal)? == rhs {
            out.push((q, mu));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Compares `W(η) ∩ π^(η)(w⁻¹ ∗_⋄ v)⁻¹ [e, w⁻¹] v` with the interval
/// `[e, π_(η)(w⁻¹ ∗_η v)]` of `W(η)`.
pub fn check_task_farce(group: &AffineWeylGroup, poly: &DemazurePolytope, spec: &FaceSpec) -> Result<bool> {
    let fd = face_data(group, poly, spec)?;
    let rep_inv = group.inverse(&fd.regular_rep);
    let lhs: HashSet<WeylElt> = group
        .interval_standard(&group.inverse(&poly.w))
        .iter()
        .map(|r| group.mul(&group.mul(&rep_inv, r), &spec.v))
        .filter(|y| spec.ctx.contains(group, y))
        .collect();
    let rhs: HashSet<WeylElt> = spec.ctx.interval(group, &fd.twisted_sub)?.into_iter().collect();
    Ok(lhs == rhs)
}

/// `W_J ∩ [e, w] = [e, s_J]`, where `s_J` is the Demazure product of the
/// letters of a reduced word of `w` that lie in `J`.
pub fn check_classic_intersection(group: &AffineWeylGroup, w: &WeylElt, subset: &[usize]) -> Result<bool> {
    if subset.len() > group.rank() {
        return Err(Error::InfiniteParabolic);
    }
    if let Some(&bad) = subset.iter().find(|&&j| j > group.rank()) {
        return Err(Error::IndexOutOfRange { index: bad, max: group.rank() });
    }
    let letters: Vec<usize> = group.canonical_word(w).into_iter().filter(|j| subset.contains(j)).collect();
    let (s_j, _) = crate::demazure::demazure_product_word(group, &OrderKind::Standard, &letters, &group.identity());
    let in_parabolic = |u: &WeylElt| group.canonical_word(u).iter().all(|j| subset.contains(j));
    let lhs: HashSet<WeylElt> = group.interval_standard(w).into_iter().filter(in_parabolic).collect();
    let rhs: HashSet<WeylElt> = group.interval_standard(&s_j).into_iter().collect();
    Ok(lhs == rhs)
}

/// Whether each vertex satisfies each inequality; returns the first failure.
pub fn first_violation<'a>(
    group: &AffineWeylGroup,
    poly: &DemazurePolytope,
    ineqs: &'a [Inequality],
) -> Result<Option<(&'a Inequality, Weight)>> {
    for ineq in ineqs {
        for (mu, _) in &poly.vertices {
            if !ineq.holds(group, mu)? {
                return Ok(Some((ineq, mu.clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_root_system;
    use crate::rational::int;

    fn group(l: char, n: usize) -> AffineWeylGroup {
        AffineWeylGroup::new(build_root_system(l, n).unwrap())
    }

    #[test]
    fn a1_segment_from_lambda0_and_s0() {
        let g = group('A', 1);
        let d = g.data();
        let l0 = d.affine_fundamental_weight(0).unwrap();
        let p = build_polytope(&g, &l0, &g.from_word(&[0]).unwrap()).unwrap();
        assert_eq!(g.canonical_word(&p.w), vec![0, 1]);
        let verts = p.vertex_set();
        assert_eq!(verts.len(), 2);
        assert!(verts.contains(&l0));
        let s0l0 = g.act_on_weight(&g.simple_reflection(0).unwrap(), &l0).unwrap();
        assert!(verts.contains(&s0l0));
        let mid = (&l0 + &s0l0).scale(&crate::rational::frac(1, 2));
        assert!(contains(&p, &mid).unwrap());
        assert!(!contains(&p, &(&l0 + &d.null_root())).unwrap());
        assert!(!contains(&p, &(&l0 + &l0)).unwrap());
    }

    #[test]
    fn rejects_non_dominant_weight() {
        let g = group('A', 2);
        let d = g.data();
        let bad = d.weight(vec![int(-1), int(0)], int(1), int(0)).unwrap();
        assert!(matches!(build_polytope(&g, &bad, &g.identity()), Err(Error::NotDominantIntegral)));
    }

    #[test]
    fn vertices_satisfy_emitted_inequalities() {
        let g = group('A', 2);
        let d = g.data();
        let lam = &d.affine_fundamental_weight(0).unwrap() + &d.affine_fundamental_weight(1).unwrap();
        for w in g.ball(3) {
            let p = build_polytope(&g, &lam, &w).unwrap();
            let ineqs = inequalities(&g, &p, 3).unwrap();
            assert!(first_violation(&g, &p, &ineqs).unwrap().is_none());
        }
    }

    #[test]
    fn a3_negative_face() {
        let g = group('A', 3);
        let d = g.data();
        let eta = -&(&d.affine_fundamental_coweight(1).unwrap() + &d.affine_fundamental_coweight(3).unwrap());
        let lam = (0..=3).map(|i| d.affine_fundamental_weight(i).unwrap()).reduce(|a, b| &a + &b).unwrap();
        let w = g.from_word(&[0, 3, 2, 1, 2, 0]).unwrap();
        let p = build_polytope(&g, &lam, &w).unwrap();
        assert_eq!(p.w, w);
        let spec = FaceSpec::new(&g, &eta, &g.identity()).unwrap();
        assert!(check_same_coset(&g, &p, &spec).unwrap());
        assert!(check_task_farce(&g, &p, &spec).unwrap());
        let a = face_vertices(&g, &p, &spec).unwrap();
        let b = face_vertices_brute(&g, &p, &spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
    }

    #[test]
    fn face_spec_requires_coset_rep() {
        let g = group('A', 2);
        let d = g.data();
        let eta = d.affine_fundamental_coweight(1).unwrap();
        let s0 = g.simple_reflection(0).unwrap();
        assert!(matches!(FaceSpec::new(&g, &eta, &s0), Err(Error::NotCosetRep)));
    }

    #[test]
    fn classic_intersection_small_cases() {
        let g = group('A', 2);
        for w in g.ball(4) {
            for j in [vec![0], vec![1, 2], vec![0, 2], vec![]] {
                assert!(check_classic_intersection(&g, &w, &j).unwrap());
            }
        }
        assert!(matches!(check_classic_intersection(&g, &g.identity(), &[0, 1, 2]), Err(Error::InfiniteParabolic)));
    }

    #[test]
    fn inequality_rhs_is_attained_on_faces() {
        // Every emitted inequality is tight at some vertex when the face
        // theorem applies, so the brute face is never empty.
        let g = group('A', 2);
        let d = g.data();
        let lam = d.affine_fundamental_weight(0).unwrap();
        let p = build_polytope(&g, &lam, &g.from_word(&[1, 0]).unwrap()).unwrap();
        for ineq in inequalities(&g, &p, 2).unwrap() {
            let eta = ineq.family.coweight(&g, ineq.index).unwrap();
            let spec = FaceSpec::new(&g, &eta, &ineq.v).unwrap();
            assert!(!face_vertices_brute(&g, &p, &spec).unwrap().is_empty());
        }
    }
}
