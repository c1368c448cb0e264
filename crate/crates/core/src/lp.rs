//! Exact feasibility for convex combinations, by the two-phase simplex
//! method's first phase with Bland's anti-cycling rule.

use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

/// Weights `t ≥ 0` with `Σ t = 1` and `Σ t_j p_j = target`, if any exist.
pub fn convex_combination(points: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    if points.is_empty() {
        return None;
    }
    let dim = target.len();
    let m = dim + 1;
    let n = points.len();
    // Columns: n point weights followed by m artificials, then the rhs.
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for row in 0..m {
        let mut r = vec![Rat::zero(); width];
        let mut rhs = if row < dim { target[row].clone() } else { Rat::one() };
        for (j, p) in points.iter().enumerate() {
            r[j] = if row < dim { p[row].clone() } else { Rat::one() };
        }
        if rhs.is_negative() {
            for v in r.iter_mut().take(n) {
                *v = -&*v;
            }
            rhs = -rhs;
        }
        r[n + row] = Rat::one();
        r[width - 1] = rhs;
        tab.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs of the phase-one objective Σ artificials.
    let mut cost = vec![Rat::zero(); width];
    for r in &tab {
        for j in 0..n {
            cost[j] -= &r[j];
        }
        cost[width - 1] -= &r[width - 1];
    }
    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for (i, r) in tab.iter().enumerate() {
            if r[enter].is_positive() {
                let ratio = &r[width - 1] / &r[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((li, _)) = leave else { break };
        let piv = tab[li][enter].clone();
        for v in tab[li].iter_mut() {
            *v /= &piv;
        }
        let pivot_row = tab[li].clone();
        for (i, r) in tab.iter_mut().enumerate() {
            if i != li && !r[enter].is_zero() {
                let f = r[enter].clone();
                for (v, p) in r.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            *v -= &f * p;
        }
        basis[li] = enter;
    }
    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut t = vec![Rat::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            t[b] = tab[i][width - 1].clone();
        }
    }
    Some(t)
}
