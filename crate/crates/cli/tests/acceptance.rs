//! Acceptance suite: every criterion runs at full scale with exact
//! (zero-tolerance) equality and prints one pass/fail line.
//!
//! Run with `cargo test -p intpoly-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines and timings.

use intpoly::basis::{decompose, reassemble};
use intpoly::geometry::{face_lattice, Polytope};
use intpoly::group::{face_euler_characteristic, Flavor, FormalSum, GroupElement};
use intpoly::ops::{minkowski_sum, reflect, scale};
use intpoly::witness::{witness_antisymmetric, witness_same_norm};
use intpoly::Int;
use intpoly_cli::sample::{
    random_class_combo, random_kernel_element, random_polytope, random_same_norm_pair, rng_for,
};
use intpoly_cli::suites::{
    kernel_rank_one_model, trial_cutting, trial_euler, trial_face_additivity, trial_gluing,
    trial_partition, trial_shadow, trial_shadow_partition, trial_stretching,
};
use std::time::Instant;

struct Criterion {
    name: &'static str,
    started: Instant,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion {
            name,
            started: Instant::now(),
        }
    }

    fn pass(self) {
        println!(
            "[PASS] {} ({:.1}s)",
            self.name,
            self.started.elapsed().as_secs_f64()
        );
    }
}

fn element(p: &Polytope) -> GroupElement {
    GroupElement::from_polytope(p.clone(), Flavor::Absolute)
}

/// Criterion 1: the involution equals the negated face Euler
/// characteristic on 200 random integral polytopes in Z^2 and 100 in Z^3.
#[test]
fn criterion_1_involution_as_face_euler() {
    let c = Criterion::new("criterion 1: *P = -chi_F(P), 200 trials in Z^2 + 100 in Z^3");
    for index in 0..200 {
        let mut rng = rng_for(101, index);
        trial_euler(&mut rng, 2, 5).unwrap_or_else(|ce| panic!("Z^2 trial {index}: {ce}"));
    }
    for index in 0..100 {
        let mut rng = rng_for(102, index);
        trial_euler(&mut rng, 3, 5).unwrap_or_else(|ce| panic!("Z^3 trial {index}: {ce}"));
    }
    c.pass();
}

/// Criterion 2: cutting relation and partition relation on random
/// hyperplane-arrangement instances, 200 in Z^2 and 50 in Z^3.
#[test]
fn criterion_2_cutting_and_partition_relations() {
    let c = Criterion::new("criterion 2: cutting + partition relations, 200 in Z^2 + 50 in Z^3");
    for index in 0..200 {
        let mut rng = rng_for(201, index);
        trial_cutting(&mut rng, 2, 5).unwrap_or_else(|ce| panic!("Z^2 cut {index}: {ce}"));
        trial_partition(&mut rng, 2, 5).unwrap_or_else(|ce| panic!("Z^2 partition {index}: {ce}"));
    }
    for index in 0..50 {
        let mut rng = rng_for(202, index);
        trial_cutting(&mut rng, 3, 3).unwrap_or_else(|ce| panic!("Z^3 cut {index}: {ce}"));
        trial_partition(&mut rng, 3, 3).unwrap_or_else(|ce| panic!("Z^3 partition {index}: {ce}"));
    }
    c.pass();
}

/// Criterion 3: shadow additivity with the upper-map dualities, and face
/// map additivity, 300 random pairs each.
#[test]
fn criterion_3_shadow_and_face_additivity() {
    let c = Criterion::new("criterion 3: shadow + face-map additivity, 300 pairs each");
    for index in 0..300 {
        let mut rng = rng_for(301, index);
        trial_shadow(&mut rng, 2, 5).unwrap_or_else(|ce| panic!("shadow {index}: {ce}"));
    }
    for index in 0..300 {
        let mut rng = rng_for(302, index);
        trial_face_additivity(&mut rng, 2, 5)
            .unwrap_or_else(|ce| panic!("face additivity {index}: {ce}"));
    }
    c.pass();
}

/// Criterion 4: shadow partitions of 100 random grounded integral
/// polytopes in Z^2 validate, have integral cells, and satisfy the
/// partition relation.
#[test]
fn criterion_4_shadow_partition() {
    let c = Criterion::new("criterion 4: shadow partition, 100 grounded instances in Z^2");
    for index in 0..100 {
        let mut rng = rng_for(401, index);
        trial_shadow_partition(&mut rng, 2, 5)
            .unwrap_or_else(|ce| panic!("shadow partition {index}: {ce}"));
    }
    c.pass();
}

/// Criterion 5: vertical stretching guarantees and the height-zero gluing
/// identities on 200 random instances.
#[test]
fn criterion_5_stretching_and_gluing() {
    let c = Criterion::new("criterion 5: stretching + gluing identities, 200 instances");
    for index in 0..150 {
        let mut rng = rng_for(501, index);
        trial_stretching(&mut rng, 2, 5).unwrap_or_else(|ce| panic!("stretch Z^2 {index}: {ce}"));
        let mut rng = rng_for(502, index);
        trial_gluing(&mut rng, 2, 5).unwrap_or_else(|ce| panic!("glue Z^2 {index}: {ce}"));
    }
    for index in 0..50 {
        let mut rng = rng_for(503, index);
        trial_stretching(&mut rng, 3, 3).unwrap_or_else(|ce| panic!("stretch Z^3 {index}: {ce}"));
        let mut rng = rng_for(504, index);
        trial_gluing(&mut rng, 3, 3).unwrap_or_else(|ce| panic!("glue Z^3 {index}: {ce}"));
    }
    c.pass();
}

/// Criterion 6: basis decomposition round trip on 150 random classes in
/// P_T(Z^2) and 30 in P_T(Z^3), plus additivity on 50 random pairs.
#[test]
fn criterion_6_basis_round_trip() {
    let c = Criterion::new(
        "criterion 6: decompose/reassemble round trip, 150 in Z^2 + 30 in Z^3 + 50 pairs",
    );
    for index in 0..150 {
        let mut rng = rng_for(601, index);
        let x = random_class_combo(&mut rng, 2, 5, 4);
        let d = decompose(&x).unwrap();
        assert!(
            reassemble(&d).unwrap().eq(&x).unwrap(),
            "round trip failed at Z^2 index {index}"
        );
    }
    for index in 0..30 {
        let mut rng = rng_for(602, index);
        let x = random_class_combo(&mut rng, 3, 3, 4);
        let d = decompose(&x).unwrap();
        assert!(
            reassemble(&d).unwrap().eq(&x).unwrap(),
            "round trip failed at Z^3 index {index}"
        );
    }
    for index in 0..50 {
        let mut rng = rng_for(603, index);
        let x = GroupElement::from_polytope(random_polytope(&mut rng, 2, 5), Flavor::Translation);
        let y = GroupElement::from_polytope(random_polytope(&mut rng, 2, 5), Flavor::Translation);
        let dx = decompose(&x).unwrap();
        let dy = decompose(&y).unwrap();
        let dxy = decompose(&x.add(&y).unwrap()).unwrap();
        assert_eq!(dx.add(&dy), dxy, "additivity failed at pair {index}");
    }
    c.pass();
}

/// Criterion 7: antisymmetric witnesses for 100 kernel elements in P(Z^2)
/// and 20 in P(Z^3), and the same-norm identity on 50 constructed pairs.
#[test]
fn criterion_7_witnesses() {
    let c = Criterion::new("criterion 7: witnesses, 100 in Z^2 + 20 in Z^3 + 50 same-norm pairs");
    for index in 0..100 {
        let mut rng = rng_for(701, index);
        let x = random_kernel_element(&mut rng, 2, 5);
        let w = witness_antisymmetric(&x).unwrap();
        let delta = w.witness.sub(&w.witness.involution()).unwrap();
        assert!(delta.eq(&x).unwrap(), "witness failed at Z^2 index {index}");
    }
    for index in 0..20 {
        let mut rng = rng_for(702, index);
        let x = random_kernel_element(&mut rng, 3, 3);
        let w = witness_antisymmetric(&x).unwrap();
        let delta = w.witness.sub(&w.witness.involution()).unwrap();
        assert!(delta.eq(&x).unwrap(), "witness failed at Z^3 index {index}");
    }
    for index in 0..50 {
        let mut rng = rng_for(703, index);
        let (p, q) = random_same_norm_pair(&mut rng, 2, 5);
        let r = witness_same_norm(&p, &q).unwrap();
        assert_eq!(
            minkowski_sum(&p, &reflect(&r)).unwrap(),
            minkowski_sum(&q, &r).unwrap(),
            "same-norm identity failed at pair {index}"
        );
    }
    c.pass();
}

/// Criterion 8: the rank-one model: P(Z) = Z^2 with the stated involution,
/// P_T(Z) = Z with the identity involution, and the closing kernel/image
/// computation for representatives of length 1 and 2.
#[test]
fn criterion_8_rank_one_model() {
    let c = Criterion::new("criterion 8: rank-one model table over [-5,5]");
    kernel_rank_one_model().unwrap_or_else(|ce| panic!("rank-one model: {ce}"));
    c.pass();
}

/// Criterion 9: the symmetric-polytope corollary (0 in odd dimension,
/// -2P in even dimension) on 50 constructed symmetric polytopes, and
/// additivity of the face Euler characteristic on 100 random pairs.
#[test]
fn criterion_9_euler_corollaries() {
    let c = Criterion::new("criterion 9: symmetric corollary (50) + chi_F additivity (100)");
    let mut checked = 0usize;
    let dims: Vec<(usize, i64, u64, usize)> =
        vec![(1, 5, 901, 20), (2, 5, 902, 25), (3, 2, 903, 5)];
    for (dim, bound, seed, count) in dims {
        for index in 0..count {
            let mut rng = rng_for(seed, index as u64);
            let q = random_polytope(&mut rng, dim, bound);
            let s = minkowski_sum(&q, &reflect(&q)).unwrap();
            assert_eq!(reflect(&s), s);
            let mut sum = FormalSum::new(dim);
            for f in face_lattice(&s) {
                if f.vertex_indices.len() == s.vertices().len() {
                    continue;
                }
                let sign = if f.dim() % 2 == 0 { 1 } else { -1 };
                sum.add_term(f.polytope, sign);
            }
            let collapsed = sum.collapse(Flavor::Absolute);
            let expected = if s.dim() % 2 == 0 {
                element(&scale(&s, &Int::from(2))).negate()
            } else {
                GroupElement::zero(dim, Flavor::Absolute)
            };
            assert!(
                collapsed.eq(&expected).unwrap(),
                "symmetric corollary failed at dim {dim} index {index}"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 50);
    for index in 0..100 {
        let mut rng = rng_for(904, index);
        let p = random_polytope(&mut rng, 2, 5);
        let q = random_polytope(&mut rng, 2, 5);
        let lhs = face_euler_characteristic(&minkowski_sum(&p, &q).unwrap());
        let rhs = face_euler_characteristic(&p)
            .add(&face_euler_characteristic(&q))
            .unwrap();
        assert!(lhs.eq(&rhs).unwrap(), "chi_F additivity failed at pair {index}");
    }
    c.pass();
}
