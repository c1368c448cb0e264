//! Batch runner checking the face description over a grid of inputs.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::cartan::{Coweight, Weight};
use crate::error::Result;
use crate::parabolic::{weight_stabilizer_indices, EtaContext};
use crate::polytope::{
    build_polytope, check_same_coset, check_task_farce, face_vertices, face_vertices_brute, DemazurePolytope, FaceSpec,
};
use crate::weyl::{AffineWeylGroup, WeylElt};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCell {
    pub lambda: String,
    pub w: Vec<usize>,
    pub eta: String,
    pub v: Vec<usize>,
    pub faces_agree: bool,
    pub task_farce: bool,
    pub same_coset: bool,
    pub vertices_on_face: usize,
    pub error: Option<String>,
}

impl FaceCell {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.faces_agree && self.task_farce && self.same_coset
    }
}

/// Compares the theorem's face with the brute scan for one `(λ, w, η, v)`.
pub fn run_face_cell(
    group: &AffineWeylGroup,
    poly: &DemazurePolytope,
    spec: &FaceSpec,
) -> (bool, bool, bool, usize, Option<String>) {
    let run = || -> Result<(bool, bool, bool, usize)> {
        let same = check_same_coset(group, poly, spec)?;
        let farce = check_task_farce(group, poly, spec)?;
        let fast = face_vertices(group, poly, spec)?;
        let brute = face_vertices_brute(group, poly, spec)?;
        let fv: HashSet<&Weight> = fast.iter().map(|(_, m)| m).collect();
        let bv: HashSet<&Weight> = brute.iter().map(|(_, m)| m).collect();
        let mut agree = fv == bv;
        if weight_stabilizer_indices(group.data(), &poly.lambda).is_empty() {
            let fq: HashSet<&WeylElt> = fast.iter().map(|(q, _)| q).collect();
            let bq: HashSet<&WeylElt> = brute.iter().map(|(q, _)| q).collect();
            agree &= fq == bq;
        }
        Ok((agree, farce, same, bv.len()))
    };
    match run() {
        Ok((a, f, s, n)) => (a, f, s, n, None),
        Err(e) => (false, false, false, 0, Some(e.to_string())),
    }
}

/// Every cell of `lambdas × ws × etas × {v ∈ W^(η) : l(v) ≤ v_len}`, in a
/// deterministic order, computed in parallel.
pub fn face_grid(
    group: &AffineWeylGroup,
    lambdas: &[(String, Weight)],
    ws: &[WeylElt],
    etas: &[(String, Coweight)],
    v_len: usize,
) -> Result<Vec<FaceCell>> {
    let mut reps = Vec::new();
    for (name, eta) in etas {
        let ctx = EtaContext::new(group, eta)?;
        let vs = ctx.coset_reps_up_to(group, v_len);
        reps.push((name.clone(), eta.clone(), vs));
    }
    let jobs: Vec<(&String, &Weight, &WeylElt)> =
        lambdas.iter().flat_map(|(ln, l)| ws.iter().map(move |w| (ln, l, w))).collect();
    let cells: Vec<Vec<FaceCell>> = jobs
        .par_iter()
        .map(|&(ln, lambda, w)| -> Result<Vec<FaceCell>> {
            let poly = build_polytope(group, lambda, w)?;
            let mut out = Vec::new();
            for (en, eta, vs) in &reps {
                for v in vs {
                    let spec = FaceSpec::new(group, eta, v)?;
                    let (faces_agree, task_farce, same_coset, n, error) = run_face_cell(group, &poly, &spec);
                    out.push(FaceCell {
                        lambda: ln.clone(),
                        w: group.canonical_word(w),
                        eta: en.clone(),
                        v: group.canonical_word(v),
                        faces_agree,
                        task_farce,
                        same_coset,
                        vertices_on_face: n,
                        error,
                    });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(cells.into_iter().flatten().collect())
}

/// One non-regular coweight per class: `Λ̌_1`, `-Λ̌_1-Λ̌_n` and
/// `ω_1∨` (rank 2) or `ω_1∨+ω_2∨` (higher rank).
pub fn default_grid_etas(group: &AffineWeylGroup) -> Result<Vec<(String, Coweight)>> {
    let d = group.data();
    let n = group.rank();
    let pos = d.affine_fundamental_coweight(1)?;
    let neg = if n >= 2 {
        -&(&d.affine_fundamental_coweight(1)? + &d.affine_fundamental_coweight(n)?)
    } else {
        -&d.affine_fundamental_coweight(1)?
    };
    let (zero_name, zero) = if n >= 3 {
        ("w1+w2".to_string(), &d.fundamental_coweight(1)? + &d.fundamental_coweight(2)?)
    } else {
        ("w1".to_string(), d.fundamental_coweight(1)?)
    };
    let neg_name = if n >= 2 { format!("-L1-L{n}") } else { "-L1".to_string() };
    Ok(vec![("L1".to_string(), pos), (neg_name, neg), (zero_name, zero)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build_root_system;

    #[test]
    fn small_grid_passes() {
        let g = AffineWeylGroup::new(build_root_system('A', 2).unwrap());
        let d = g.data();
        let lambdas = vec![("L0".to_string(), d.affine_fundamental_weight(0).unwrap())];
        let ws = g.ball(2);
        let etas = default_grid_etas(&g).unwrap();
        let cells = face_grid(&g, &lambdas, &ws, &etas, 1).unwrap();
        assert!(!cells.is_empty());
        for c in &cells {
            assert!(c.passed(), "{c:?}");
        }
    }
}
