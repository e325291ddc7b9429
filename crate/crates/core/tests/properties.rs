//! Algebraic invariants of the form, the generic ext recursion, membership and
//! redundancy elimination, checked on sampled and generated inputs.

use proptest::prelude::*;
use quiver_cones::cone::{inequalities, member, Method};
use quiver_cones::reduce::{irredundant_core, system_cone, HalfspaceCone};
use quiver_cones::zoo::{make_d5hat, make_kronecker, make_line, make_sun};
use quiver_cones::{DimVector, ExtTable, Involution, OrbitBasis, Quiver, Weight};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zoo() -> Vec<(Quiver, Vec<Involution>, u32)> {
    let (a3, t3) = make_line(3).unwrap();
    let (a4, t4) = make_line(4).unwrap();
    let (k2, tk2) = make_kronecker(2).unwrap();
    let (k3, tk3) = make_kronecker(3).unwrap();
    let (d5, td5) = make_d5hat().unwrap();
    let (s31, is31) = make_sun(3, 1).unwrap();
    let (s22, is22) = make_sun(2, 2).unwrap();
    vec![
        (a3, vec![t3], 4),
        (a4, vec![t4], 3),
        (k2, vec![tk2], 5),
        (k3, vec![tk3], 4),
        (d5, vec![td5], 3),
        (s31, is31, 2),
        (s22, is22, 1),
    ]
}

fn random_dim(rng: &mut ChaCha8Rng, n: usize, max: u32) -> DimVector {
    DimVector::new((0..n).map(|_| rng.gen_range(0..=max)).collect())
}

fn random_weight(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Weight {
    Weight::new((0..n).map(|_| rng.gen_range(-max..=max)).collect())
}

fn sub(a: &DimVector, b: &DimVector) -> DimVector {
    a.checked_sub(b).unwrap()
}

#[test]
fn hom_minus_ext_is_euler() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (q, _, max) in zoo() {
        let t = ExtTable::new(&q);
        for _ in 0..500 {
            let a = random_dim(&mut rng, q.vertex_count(), max);
            let b = random_dim(&mut rng, q.vertex_count(), max);
            let lhs = t.hom_generic(&a, &b).unwrap() as i64 - t.ext_generic(&a, &b).unwrap() as i64;
            assert_eq!(lhs, q.euler_form(&a, &b).unwrap(), "{} {a} {b}", q.name());
        }
    }
}

#[test]
fn schofield_formula_both_sides() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (q, _, max) in zoo() {
        let t = ExtTable::new(&q);
        for _ in 0..200 {
            let a = random_dim(&mut rng, q.vertex_count(), max);
            let b = random_dim(&mut rng, q.vertex_count(), max);
            let ext = t.ext_generic(&a, &b).unwrap() as i64;
            // ext(a,b) = disc(a, −⟨·,b⟩)
            let w = q.right_pairing(&b).unwrap().checked_neg().unwrap();
            assert_eq!(ext, t.disc(&a, &w).unwrap(), "{} {a} {b}", q.name());
            // dual side: largest −⟨a, b''⟩ over generic quotients b'' of b
            let dual = t
                .enumerate_generic_subdims(&b)
                .unwrap()
                .iter()
                .map(|b1| -q.euler_form(&a, &sub(&b, b1)).unwrap())
                .max()
                .unwrap();
            assert_eq!(ext, dual, "{} {a} {b}", q.name());
        }
    }
}

#[test]
fn tau_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (q, invs, max) in zoo() {
        let t = ExtTable::new(&q);
        for inv in &invs {
            for _ in 0..200 {
                let a = random_dim(&mut rng, q.vertex_count(), max);
                let b = random_dim(&mut rng, q.vertex_count(), max);
                assert_eq!(
                    t.ext_generic(&a, &b).unwrap(),
                    t.ext_generic(&inv.tau_dim(&b), &inv.tau_dim(&a)).unwrap()
                );
                let ab = a.checked_add(&b).unwrap();
                assert_eq!(
                    t.is_generic_subdim(&a, &ab).unwrap(),
                    t.is_generic_subdim(&inv.tau_dim(&b), &inv.tau_dim(&ab))
                        .unwrap()
                );
                let s = random_weight(&mut rng, q.vertex_count(), 4);
                assert_eq!(
                    inv.tau_weight(&s).eval(&inv.tau_dim(&a)).unwrap(),
                    s.eval(&a).unwrap()
                );
            }
        }
    }
}

#[test]
fn subdimension_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (q, _, max) in zoo() {
        let t = ExtTable::new(&q);
        for _ in 0..40 {
            let a = random_dim(&mut rng, q.vertex_count(), max);
            let subs = t.enumerate_generic_subdims(&a).unwrap();
            assert!(subs.contains(&DimVector::zeros(a.len())));
            assert!(subs.contains(&a));
            let b = subs.choose(&mut rng).unwrap();
            // transitivity through a generic subdimension of b
            for c in t.enumerate_generic_subdims(b).unwrap() {
                assert!(t.is_generic_subdim(&c, &a).unwrap(), "{c} ↪ {b} ↪ {a}");
            }
            // necessary condition on a two-step filtration
            assert!(t.filtration_necessary(&[b.clone(), sub(&a, b)]).unwrap());
            // β ∘ (α−β) ≠ 0 forces β ↪ α
            let c = DimVector::new(a.as_slice().iter().map(|&x| rng.gen_range(0..=x)).collect());
            if t.circ_nonzero(&c, &sub(&a, &c)).unwrap() {
                assert!(t.is_generic_subdim(&c, &a).unwrap());
            }
        }
    }
}

#[test]
fn ext_is_subadditive() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (q, _, max) in zoo() {
        let t = ExtTable::new(&q);
        let n = q.vertex_count();
        for _ in 0..100 {
            let a = random_dim(&mut rng, n, max);
            let b1 = random_dim(&mut rng, n, max.div_ceil(2));
            let b2 = random_dim(&mut rng, n, max.div_ceil(2));
            let b = b1.checked_add(&b2).unwrap();
            assert!(
                t.ext_generic(&a, &b).unwrap()
                    <= t.ext_generic(&a, &b1).unwrap() + t.ext_generic(&a, &b2).unwrap()
            );
            assert!(
                t.ext_generic(&b, &a).unwrap()
                    <= t.ext_generic(&b1, &a).unwrap() + t.ext_generic(&b2, &a).unwrap()
            );
        }
    }
}

fn membership_agreement(q: &Quiver, inv: &Involution, alpha: &DimVector, seed: u64) -> usize {
    let t = ExtTable::new(q);
    let basis = OrbitBasis::new(q, inv);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members = 0;
    for _ in 0..1000 {
        let coords: Vec<i64> = (0..basis.dim()).map(|_| rng.gen_range(-4..=4)).collect();
        let s = basis.from_coords(&coords).unwrap();
        let verdicts: Vec<bool> = [Method::Dw, Method::Inductive, Method::AntiInv]
            .into_iter()
            .map(|m| member(&t, &s, alpha, m, Some(inv)).unwrap().is_member())
            .collect();
        assert!(
            verdicts.iter().all(|&v| v == verdicts[0]),
            "{coords:?}: {verdicts:?}"
        );
        if verdicts[0] {
            members += 1;
            for k in [2, 3] {
                let ks = s.checked_scale(k).unwrap();
                assert!(member(&t, &ks, alpha, Method::Dw, None)
                    .unwrap()
                    .is_member());
            }
        } else {
            for k in [2, 3] {
                let ks = s.checked_scale(k).unwrap();
                assert!(!member(&t, &ks, alpha, Method::AntiInv, Some(inv))
                    .unwrap()
                    .is_member());
            }
        }
    }
    members
}

#[test]
fn membership_tests_agree_d5hat() {
    let (q, tau) = make_d5hat().unwrap();
    let alpha = DimVector::new(vec![2, 3, 4, 4, 3, 2]);
    let members = membership_agreement(&q, &tau, &alpha, 6);
    assert!(members > 0 && members < 1000);
}

#[test]
fn membership_tests_agree_sun() {
    let (q, invs) = make_sun(3, 1).unwrap();
    let alpha = DimVector::new(vec![2; 6]);
    for (i, inv) in invs.iter().enumerate() {
        let members = membership_agreement(&q, inv, &alpha, 7 + i as u64);
        assert!(members > 0 && members < 1000, "{}: {members}", inv.name());
    }
}

#[test]
fn membership_stable_under_minus_tau() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for (q, invs, max) in zoo() {
        let t = ExtTable::new(&q);
        for inv in &invs {
            for _ in 0..60 {
                let a = random_dim(&mut rng, q.vertex_count(), max);
                let s = random_weight(&mut rng, q.vertex_count(), 3);
                let ts = inv.tau_weight(&s).checked_neg().unwrap();
                let ta = inv.tau_dim(&a);
                assert_eq!(
                    member(&t, &s, &a, Method::Dw, None).unwrap().is_member(),
                    member(&t, &ts, &ta, Method::Dw, None).unwrap().is_member()
                );
                assert_eq!(
                    member(&t, &s, &a, Method::Inductive, None)
                        .unwrap()
                        .is_member(),
                    member(&t, &s, &a, Method::Dw, None).unwrap().is_member()
                );
            }
        }
    }
}

#[test]
fn euler_pairings_of_the_canonical_members() {
    // ⟨β,·⟩ for β ∘ (α−β) ≠ 0 lies in the cone of α−β
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (q, _, max) in zoo() {
        let t = ExtTable::new(&q);
        for _ in 0..40 {
            let a = random_dim(&mut rng, q.vertex_count(), max);
            let b = DimVector::new(a.as_slice().iter().map(|&x| rng.gen_range(0..=x)).collect());
            let rest = sub(&a, &b);
            if t.circ_nonzero(&b, &rest).unwrap() {
                let s = q.left_pairing(&b).unwrap();
                assert!(member(&t, &s, &rest, Method::Dw, None).unwrap().is_member());
            }
        }
    }
}

fn d5hat_system() -> quiver_cones::cone::InequalitySystem {
    let (q, tau) = make_d5hat().unwrap();
    let t = ExtTable::new(&q);
    let alpha = DimVector::new(vec![2, 3, 4, 4, 3, 2]);
    let basis = OrbitBasis::with_representatives(&q, &tau, &["x4", "x5", "x6"]).unwrap();
    let mut sys = inequalities(&t, &alpha, Method::AntiInv, Some(&tau), Some(basis)).unwrap();
    sys.dedup_restricted();
    sys
}

fn same_cone(a: &[Vec<i64>], b: &[Vec<i64>], dim: usize) -> bool {
    let implied = |rows: &[Vec<i64>], by: &[Vec<i64>]| {
        rows.iter().all(|r| {
            let mut all = by.to_vec();
            all.push(r.clone());
            let n = all.len();
            HalfspaceCone::new(dim, all, vec![])
                .unwrap()
                .is_redundant(n - 1)
                .unwrap()
        })
    };
    implied(a, b) && implied(b, a)
}

#[test]
fn reduction_preserves_cone_and_is_idempotent() {
    let sys = d5hat_system();
    let core = irredundant_core(&sys).unwrap();
    assert!(core.len() < sys.len());
    assert!(same_cone(&sys.restricted, &core.restricted, 3));
    assert_eq!(irredundant_core(&core).unwrap(), core);
    let cone = system_cone(&core).unwrap();
    for i in 0..core.len() {
        assert!(!cone.is_redundant(i).unwrap());
    }
}

#[test]
fn reduction_is_order_robust() {
    let sys = d5hat_system();
    let reference = irredundant_core(&sys).unwrap();
    let mut reference_rows = reference.primitive_rows();
    reference_rows.sort();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..10 {
        let mut perm: Vec<usize> = (0..sys.len()).collect();
        perm.shuffle(&mut rng);
        let mut shuffled = sys.clone();
        shuffled.normals = perm.iter().map(|&i| sys.normals[i].clone()).collect();
        shuffled.restricted = perm.iter().map(|&i| sys.restricted[i].clone()).collect();
        let mut rows = irredundant_core(&shuffled).unwrap().primitive_rows();
        rows.sort();
        // this cone is pointed and full-dimensional, so the facets are unique
        assert_eq!(rows, reference_rows);
    }
}

fn a3() -> Quiver {
    make_line(3).unwrap().0
}

prop_compose! {
    fn dim3()(v in prop::collection::vec(0u32..6, 3)) -> DimVector { DimVector::new(v) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn euler_is_bilinear(a in dim3(), b in dim3(), c in dim3()) {
        let q = a3();
        let ab = a.checked_add(&b).unwrap();
        prop_assert_eq!(
            q.euler_form(&ab, &c).unwrap(),
            q.euler_form(&a, &c).unwrap() + q.euler_form(&b, &c).unwrap()
        );
        let bc = b.checked_add(&c).unwrap();
        prop_assert_eq!(
            q.euler_form(&a, &bc).unwrap(),
            q.euler_form(&a, &b).unwrap() + q.euler_form(&a, &c).unwrap()
        );
    }

    #[test]
    fn pairings_agree_with_form(a in dim3(), b in dim3()) {
        let q = a3();
        let e = q.euler_form(&a, &b).unwrap();
        prop_assert_eq!(q.right_pairing(&b).unwrap().eval(&a).unwrap(), e);
        prop_assert_eq!(q.left_pairing(&a).unwrap().eval(&b).unwrap(), e);
    }

    #[test]
    fn tau_is_an_isometry_with_reversal(a in dim3(), b in dim3()) {
        let (q, tau) = make_line(3).unwrap();
        prop_assert_eq!(
            q.euler_form(&a, &b).unwrap(),
            q.euler_form(&tau.tau_dim(&b), &tau.tau_dim(&a)).unwrap()
        );
        prop_assert_eq!(tau.tau_dim(&tau.tau_dim(&a)), a);
    }

    #[test]
    fn antisymmetric_coordinates_roundtrip(c in prop::collection::vec(-20i64..20, 3)) {
        let (q, tau) = make_d5hat().unwrap();
        let basis = OrbitBasis::new(&q, &tau);
        let s = basis.from_coords(&c).unwrap();
        prop_assert!(tau.is_antisymmetric(&s));
        prop_assert_eq!(basis.to_coords(&s).unwrap(), c);
        let d = DimVector::new(vec![1, 0, 2, 3, 1, 4]);
        let restricted = basis.restrict(&d).unwrap();
        let dot: i64 = restricted.iter().zip(basis.to_coords(&s).unwrap()).map(|(x, y)| x * y).sum();
        prop_assert_eq!(dot, s.eval(&d).unwrap());
    }

    #[test]
    fn kronecker_hom_ext_difference(a in prop::collection::vec(0u32..5, 2), b in prop::collection::vec(0u32..5, 2)) {
        let (q, _) = make_kronecker(2).unwrap();
        let t = ExtTable::new(&q);
        let (a, b) = (DimVector::new(a), DimVector::new(b));
        let hom = t.hom_generic(&a, &b).unwrap();
        let ext = t.ext_generic(&a, &b).unwrap();
        prop_assert_eq!(hom as i64 - ext as i64, q.euler_form(&a, &b).unwrap());
    }
}
