use affdem::demazure::demazure_product;
use affdem::grid::default_grid_etas;
use affdem::orders::{arrows_among, leq, OrderKind};
use affdem::polytope::{build_polytope, face_vertices, FaceSpec, Family};
use affdem::rational::int;
use affdem::{AffineWeylGroup, Coweight, EtaContext, Rat};
use num_traits::Signed;
use proptest::prelude::*;

fn a2() -> AffineWeylGroup {
    AffineWeylGroup::from_tag("A2").unwrap()
}

/// Coordinates of a coweight with zero `d` part in the affine simple coroots
/// `α_0∨ = K - θ∨, α_1∨, ..., α_n∨`.
fn affine_coroot_coords(group: &AffineWeylGroup, c: &Coweight) -> Vec<Rat> {
    let d = group.data();
    let n = group.rank();
    assert_eq!(c.d, int(0));
    // Solve fin_i = Σ_j x_j cartan[j][i] by Gaussian elimination.
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = (0..n).map(|j| int(d.cartan[j][i])).collect();
            row.push(c.fin[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| m[r][col] != int(0)).unwrap();
        m.swap(col, p);
        let piv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != col && m[r][col] != int(0) {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    let k0 = c.k.clone();
    let mut out = vec![k0.clone()];
    for (j, row) in m.iter().enumerate() {
        out.push(&row[n] + &k0 * int(d.comarks[j]));
    }
    out
}

#[test]
fn covers_lower_dominant_coweights_by_positive_coroots() {
    let g = a2();
    let ball = g.ball(4);
    for family in Family::all() {
        let kind = match family {
            Family::Positive => OrderKind::Standard,
            Family::Negative => OrderKind::Opposite,
            Family::LevelZero => OrderKind::SemiInfinite,
        };
        let etas: Vec<Coweight> = family.indices(&g).map(|i| family.coweight(&g, i).unwrap()).collect();
        let arrows = arrows_among(&g, &kind, &ball);
        assert!(!arrows.is_empty());
        for (i, j, _) in arrows {
            for eta in &etas {
                let diff = &g.act_on_coweight(&ball[i], eta).unwrap() - &g.act_on_coweight(&ball[j], eta).unwrap();
                let coords = affine_coroot_coords(&g, &diff);
                assert!(
                    coords.iter().all(|x| !x.is_negative()),
                    "{} arrow {} -> {} lowers {eta} by {coords:?}",
                    kind.label(),
                    g.name(&ball[i]),
                    g.name(&ball[j])
                );
            }
        }
    }
}

#[test]
fn coset_projection_preserves_the_regular_order() {
    let g = a2();
    let ball = g.ball(4);
    let d = g.data();
    let mut etas: Vec<Coweight> = default_grid_etas(&g).unwrap().into_iter().map(|(_, e)| e).collect();
    etas.push(-&d.affine_fundamental_coweight(0).unwrap());
    for eta in &etas {
        let ctx = EtaContext::new(&g, eta).unwrap();
        let kind = OrderKind::regular_for(ctx.classification());
        let proj: Vec<_> = ball.iter().map(|u| ctx.project_rep(&g, u)).collect();
        for (a, u) in ball.iter().enumerate() {
            for (b, w) in ball.iter().enumerate() {
                if leq(&g, &kind, u, w).unwrap() {
                    assert!(
                        leq(&g, &kind, &proj[a], &proj[b]).unwrap(),
                        "{eta}: {} <= {} but projections are not ordered",
                        g.name(u),
                        g.name(w)
                    );
                }
            }
        }
    }
}

#[test]
fn demazure_product_dominates_every_left_factor() {
    let g = a2();
    let ball = g.ball(3);
    for kind in [OrderKind::Standard, OrderKind::Opposite, OrderKind::SemiInfinite] {
        for w in ball.iter().filter(|w| g.std_length(w) <= 2) {
            let below = g.interval_standard(w);
            for v in &ball {
                let (top, _) = demazure_product(&g, &kind, w, v);
                for x in &below {
                    assert!(leq(&g, &kind, &g.mul(x, v), &top).unwrap());
                }
            }
        }
    }
}

#[test]
fn vertices_and_faces_keep_the_level_of_lambda() {
    let g = AffineWeylGroup::from_tag("A3").unwrap();
    let d = g.data();
    let lambda = &d.affine_fundamental_weight(0).unwrap().scale(&int(2)) + &d.affine_fundamental_weight(2).unwrap();
    let etas = default_grid_etas(&g).unwrap();
    for w in g.ball(3) {
        let poly = build_polytope(&g, &lambda, &w).unwrap();
        assert!(poly.vertices.iter().all(|(mu, _)| mu.level == lambda.level));
        for (_, eta) in &etas {
            let ctx = EtaContext::new(&g, eta).unwrap();
            for v in ctx.coset_reps_up_to(&g, 2) {
                let spec = FaceSpec::new(&g, eta, &v).unwrap();
                for (_, mu) in face_vertices(&g, &poly, &spec).unwrap() {
                    assert_eq!(mu.level, lambda.level);
                }
            }
        }
    }
}

fn element(g: &AffineWeylGroup) -> impl Strategy<Value = affdem::WeylElt> + '_ {
    proptest::collection::vec(0..=g.rank(), 0..10).prop_map(move |w| g.from_word(&w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_action_preserves_the_pairing_with_integral_data(
        w in proptest::collection::vec(0usize..=3, 0..8),
        lam in proptest::collection::vec(-3i64..=3, 3),
        cow in proptest::collection::vec(-3i64..=3, 3),
    ) {
        let g = AffineWeylGroup::from_tag("B3").unwrap();
        let d = g.data();
        let u = g.finite_part(&g.from_word(&w).unwrap());
        let mu = d.weight(lam.iter().map(|&x| int(x)).collect(), int(0), int(0)).unwrap();
        let eta = d.coweight(cow.iter().map(|&x| int(x)).collect(), int(0), int(0)).unwrap();
        let before = d.pair(&mu, &eta).unwrap();
        let after = d.pair(&g.act_on_weight(&u, &mu).unwrap(), &g.act_on_coweight(&u, &eta).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn semi_infinite_order_is_invariant_under_right_translation(x in element(&a2()), y in element(&a2()), t in proptest::collection::vec(-2i64..=2, 2)) {
        let g = a2();
        let tr = g.translation(&t).unwrap();
        let lhs = leq(&g, &OrderKind::SemiInfinite, &x, &y).unwrap();
        let rhs = leq(&g, &OrderKind::SemiInfinite, &g.mul(&x, &tr), &g.mul(&y, &tr)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
