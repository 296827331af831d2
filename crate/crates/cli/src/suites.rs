//! The seeded verification suites: each named suite machine-checks one of
//! the library's exact identities on randomized instances. Every trial is
//! deterministic from `(seed, index)`, so reports are byte-identical across
//! serial and parallel runs (modulo wall time) and counterexamples replay
//! from their index.

use crate::doc::{element_value, polytope_value};
use crate::sample::{
    random_class_combo, random_direction, random_element, random_full_dim, random_grounded,
    random_hyperplane_through, random_kernel_element, random_polytope, random_same_norm_pair,
    rng_for,
};
use intpoly::basis::{decompose, reassemble};
use intpoly::geometry::{face_lattice, Hyperplane, Polytope};
use intpoly::group::{dim1, face_euler_characteristic, seminorm, Flavor, FormalSum, GroupElement};
use intpoly::ops::{
    compress, cut, face_in_direction, height, minkowski_sum, reflect, scale, shadow, upper_height,
    upper_shadow, vertical_stretch,
};
use intpoly::partition::{
    check_face_euler_partition_relation, check_partition_relation, partition_from_hyperplanes,
    shadow_partition,
};
use intpoly::witness::{
    gluing_identities_hold, in_plus_kernel, witness_antisymmetric, witness_antisymmetric_pt,
    witness_same_norm,
};
use intpoly::{Int, Rat};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Cancellation,
    FaceAdditivity,
    Shadow,
    Cutting,
    Partition,
    ShadowPartition,
    Stretching,
    Gluing,
    Euler,
    EulerCorollaries,
    BasisRoundtrip,
    Witness,
    Kernel,
    All,
}

pub const SUITE_NAMES: &[(&str, Suite)] = &[
    ("cancellation", Suite::Cancellation),
    ("face-additivity", Suite::FaceAdditivity),
    ("shadow", Suite::Shadow),
    ("cutting", Suite::Cutting),
    ("partition", Suite::Partition),
    ("shadow-partition", Suite::ShadowPartition),
    ("stretching", Suite::Stretching),
    ("gluing", Suite::Gluing),
    ("euler", Suite::Euler),
    ("euler-corollaries", Suite::EulerCorollaries),
    ("basis-roundtrip", Suite::BasisRoundtrip),
    ("witness", Suite::Witness),
    ("kernel", Suite::Kernel),
    ("all", Suite::All),
];

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SUITE_NAMES
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, suite)| *suite)
            .ok_or_else(|| {
                let names: Vec<&str> = SUITE_NAMES.iter().map(|(n, _)| *n).collect();
                format!("unknown suite {s:?}; expected one of: {}", names.join(", "))
            })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = SUITE_NAMES
            .iter()
            .find(|(_, s)| s == self)
            .map(|(n, _)| *n)
            .unwrap();
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    pub suite: Suite,
    pub trials: u64,
    pub seed: u64,
    pub dim: usize,
    pub bound: i64,
    pub start: u64,
    pub parallel: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub config: Config,
    pub passed: u64,
    pub counterexample: Option<(u64, Value)>,
    pub wall: Duration,
}

impl VerifyReport {
    pub fn passed_all(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Deterministic rendering; the wall-time line comes last so it can be
    /// stripped for byte comparisons.
    pub fn render(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        out.push_str(&format!("suite: {}\n", c.suite));
        out.push_str(&format!("dim: {}\n", c.dim));
        out.push_str(&format!("coord-bound: {}\n", c.bound));
        out.push_str(&format!("seed: {}\n", c.seed));
        out.push_str(&format!("start: {}\n", c.start));
        out.push_str(&format!("trials: {}\n", c.trials));
        out.push_str(&format!("passed: {}/{}\n", self.passed, c.trials));
        if let Some((index, ce)) = &self.counterexample {
            out.push_str(&format!("first-counterexample-index: {index}\n"));
            out.push_str(&format!("counterexample: {ce}\n"));
            out.push_str(&format!(
                "replay: intpoly verify --suite {} --trials 1 --seed {} --start {index} --dim {} --coord-bound {}\n",
                c.suite, c.seed, c.dim, c.bound
            ));
            out.push_str("result: FAIL\n");
        } else {
            out.push_str("result: PASS\n");
        }
        out.push_str(&format!("wall-time: {:.3}s\n", self.wall.as_secs_f64()));
        out
    }
}

fn fail(reason: &str, instance: Value) -> Result<(), Value> {
    Err(json!({ "reason": reason, "instance": instance }))
}

fn element(p: &Polytope) -> GroupElement {
    GroupElement::from_polytope(p.clone(), Flavor::Absolute)
}

pub fn trial_cancellation(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p1 = random_polytope(rng, dim, bound);
    let mut p2 = random_polytope(rng, dim, bound);
    if p1 == p2 {
        let mut shift = vec![Rat::zero(); dim];
        shift[0] = Rat::from_integer(1.into());
        p2 = p2.translate(&shift);
    }
    let q = random_polytope(rng, dim, bound);
    let s1 = minkowski_sum(&p1, &q).unwrap();
    let s2 = minkowski_sum(&p2, &q).unwrap();
    if s1 == s2 {
        return fail(
            "cancellation failed: P1 + Q = P2 + Q with P1 != P2",
            json!({ "p1": polytope_value(&p1), "p2": polytope_value(&p2), "q": polytope_value(&q) }),
        );
    }
    Ok(())
}

pub fn trial_face_additivity(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p = random_polytope(rng, dim, bound);
    let q = random_polytope(rng, dim, bound);
    let phi = random_direction(rng, dim);
    let lhs = face_in_direction(&minkowski_sum(&p, &q).unwrap(), &phi);
    let rhs = minkowski_sum(&face_in_direction(&p, &phi), &face_in_direction(&q, &phi)).unwrap();
    if lhs != rhs {
        return fail(
            "face map additivity failed",
            json!({
                "p": polytope_value(&p),
                "q": polytope_value(&q),
                "phi": phi.iter().map(Int::to_string).collect::<Vec<_>>(),
            }),
        );
    }
    Ok(())
}

pub fn trial_shadow(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p = random_polytope(rng, dim, bound);
    let q = random_polytope(rng, dim, bound);
    let instance = json!({ "p": polytope_value(&p), "q": polytope_value(&q) });
    if shadow(&minkowski_sum(&p, &q).unwrap())
        != minkowski_sum(&shadow(&p), &shadow(&q)).unwrap()
    {
        return fail("shadow additivity failed", instance);
    }
    if upper_height(&reflect(&p)) != -height(&p) {
        return fail("upper height duality failed", instance);
    }
    if upper_shadow(&reflect(&p)) != reflect(&shadow(&p)) {
        return fail("upper shadow duality failed", instance);
    }
    Ok(())
}

pub fn trial_cutting(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p = random_polytope(rng, dim, bound);
    let h = random_hyperplane_through(rng, &p);
    let r = cut(&p, &h);
    let instance = json!({
        "p": polytope_value(&p),
        "normal": h.normal.iter().map(Int::to_string).collect::<Vec<_>>(),
        "offset": intpoly::scalar::format_rat(&h.offset),
    });
    let (Some(upper), Some(lower), Some(section)) = (r.upper, r.lower, r.section) else {
        return fail("cut through the support interval lost a part", instance);
    };
    let lhs = minkowski_sum(&upper, &lower).unwrap();
    let rhs = minkowski_sum(&p, &section).unwrap();
    if lhs != rhs {
        return fail("cutting relation failed", instance);
    }
    Ok(())
}

pub fn trial_partition(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p = random_polytope(rng, dim, bound);
    let count = rng.gen_range(1..=2);
    let planes: Vec<Hyperplane> = (0..count)
        .map(|_| random_hyperplane_through(rng, &p))
        .collect();
    let instance = json!({
        "p": polytope_value(&p),
        "planes": planes.iter().map(|h| json!({
            "normal": h.normal.iter().map(Int::to_string).collect::<Vec<_>>(),
            "offset": intpoly::scalar::format_rat(&h.offset),
        })).collect::<Vec<_>>(),
    });
    let part = match partition_from_hyperplanes(&p, &planes) {
        Ok(part) => part,
        Err(e) => return fail(&format!("partition validation failed: {e}"), instance),
    };
    if !check_partition_relation(&part) {
        return fail("partition relation failed", instance);
    }
    if !check_face_euler_partition_relation(&part) {
        return fail("face Euler partition relation failed", instance);
    }
    Ok(())
}

pub fn trial_shadow_partition(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p = random_grounded(rng, dim, bound);
    let instance = json!({ "grounded": polytope_value(&p) });
    let part = match shadow_partition(&p) {
        Ok(part) => part,
        Err(e) => return fail(&format!("shadow partition failed validation: {e}"), instance),
    };
    if !part.cells().iter().all(Polytope::is_integral) {
        return fail("shadow partition produced a non-integral cell", instance);
    }
    if !check_partition_relation(&part) {
        return fail("shadow partition relation failed", instance);
    }
    Ok(())
}

pub fn trial_stretching(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p = random_full_dim(rng, dim, bound);
    let h = rng.gen_range(-bound..=bound);
    let hh = Int::from(h);
    let r = vertical_stretch(&p, &hh).unwrap();
    let instance = json!({ "p": polytope_value(&p), "height": h, "k": r.k.to_string() });
    let flat = Hyperplane::flat(dim, Rat::from_integer(hh.clone()));
    let parts = cut(&r.stretched, &flat);
    let (Some(upper), Some(lower), Some(section)) = (parts.upper, parts.lower, parts.section)
    else {
        return fail("stretched polytope misses the target hyperplane", instance);
    };
    if section != compress(&r.stretched, &Rat::from_integer(hh)) {
        return fail("stretched section differs from the compression", instance);
    }
    if !section.is_integral() {
        return fail("stretched section is not integral", instance);
    }
    if !intpoly::ops::is_grounded(&upper).unwrap() {
        return fail("upper half of stretched polytope is not grounded", instance);
    }
    if !intpoly::ops::is_grounded(&reflect(&lower)).unwrap() {
        return fail("reflected lower half is not grounded", instance);
    }
    Ok(())
}

pub fn trial_gluing(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p0 = random_full_dim(rng, dim, bound);
    let p = vertical_stretch(&p0, &Int::zero()).unwrap().stretched;
    if !gluing_identities_hold(&p) {
        return fail(
            "height-zero gluing identities failed",
            json!({ "p": polytope_value(&p) }),
        );
    }
    // A glueable pair: pad each stretched polytope with the other's
    // compression so the sections agree.
    let q0 = random_full_dim(rng, dim, bound);
    let q1 = vertical_stretch(&q0, &Int::zero()).unwrap().stretched;
    let a = minkowski_sum(&p, &compress(&q1, &Rat::zero())).unwrap();
    let b = minkowski_sum(&q1, &compress(&p, &Rat::zero())).unwrap();
    let flat = Hyperplane::flat(dim, Rat::zero());
    let instance = json!({ "a": polytope_value(&a), "b": polytope_value(&b) });
    let glued = match intpoly::ops::vertical_glue(&a, &b, &flat) {
        Ok(g) => g,
        Err(e) => return fail(&format!("glue rejected a valid pair: {e}"), instance),
    };
    if cut(&glued, &flat).upper != cut(&a, &flat).upper
        || cut(&glued, &flat).lower != cut(&b, &flat).lower
    {
        return fail("glued polytope has wrong halves", instance);
    }
    Ok(())
}

pub fn trial_euler(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let p = random_polytope(rng, dim, bound);
    let lhs = element(&reflect(&p));
    let rhs = face_euler_characteristic(&p).negate();
    if !lhs.eq(&rhs).unwrap() {
        return fail(
            "involution differs from negated face Euler characteristic",
            json!({ "p": polytope_value(&p) }),
        );
    }
    Ok(())
}

pub fn trial_euler_corollaries(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    // Symmetric polytope: alternating sum over proper faces.
    let q = random_polytope(rng, dim, bound);
    let s = minkowski_sum(&q, &reflect(&q)).unwrap();
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
    if !collapsed.eq(&expected).unwrap() {
        return fail(
            "symmetric polytope corollary failed",
            json!({ "symmetric": polytope_value(&s) }),
        );
    }
    // Additivity of the face Euler characteristic.
    let p1 = random_polytope(rng, dim, bound);
    let p2 = random_polytope(rng, dim, bound);
    let lhs = face_euler_characteristic(&minkowski_sum(&p1, &p2).unwrap());
    let rhs = face_euler_characteristic(&p1)
        .add(&face_euler_characteristic(&p2))
        .unwrap();
    if !lhs.eq(&rhs).unwrap() {
        return fail(
            "face Euler characteristic additivity failed",
            json!({ "p": polytope_value(&p1), "q": polytope_value(&p2) }),
        );
    }
    Ok(())
}

pub fn trial_basis_roundtrip(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let x = random_class_combo(rng, dim, bound, 4);
    let instance = json!({ "x": element_value(&x) });
    let d = match decompose(&x) {
        Ok(d) => d,
        Err(e) => return fail(&format!("decompose failed: {e}"), instance),
    };
    if !reassemble(&d).unwrap().eq(&x).unwrap() {
        return fail("reassemble(decompose(x)) != x", instance);
    }
    if rng.gen_bool(0.5) {
        let y = GroupElement::from_polytope(random_polytope(rng, dim, bound), Flavor::Translation);
        let dy = decompose(&y).unwrap();
        let dxy = decompose(&x.add(&y).unwrap()).unwrap();
        if d.add(&dy) != dxy {
            return fail(
                "decompose is not additive",
                json!({ "x": element_value(&x), "y": element_value(&y) }),
            );
        }
    }
    Ok(())
}

pub fn trial_witness(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let x = random_kernel_element(rng, dim, bound);
    let instance = json!({ "x": element_value(&x) });
    let w = match witness_antisymmetric(&x) {
        Ok(w) => w,
        Err(e) => return fail(&format!("witness construction failed: {e}"), instance),
    };
    let delta = w.witness.sub(&w.witness.involution()).unwrap();
    if !delta.eq(&x).unwrap() {
        return fail("witness identity T - *T = x failed", instance);
    }
    let (p, q) = random_same_norm_pair(rng, dim, bound);
    let pair = json!({ "p": polytope_value(&p), "q": polytope_value(&q) });
    let r = match witness_same_norm(&p, &q) {
        Ok(r) => r,
        Err(e) => return fail(&format!("same-norm witness failed: {e}"), pair),
    };
    if minkowski_sum(&p, &reflect(&r)).unwrap() != minkowski_sum(&q, &r).unwrap() {
        return fail("same-norm identity P + *R = Q + R failed", pair);
    }
    if rng.gen_bool(0.5) {
        let y = random_polytope(rng, dim, bound);
        let xq = GroupElement::new(y.clone(), reflect(&y), Flavor::Translation).unwrap();
        let wq = match witness_antisymmetric_pt(&xq) {
            Ok(w) => w,
            Err(e) => {
                return fail(
                    &format!("quotient witness failed: {e}"),
                    json!({ "x": element_value(&xq) }),
                )
            }
        };
        let delta = wq.witness.sub(&wq.witness.involution()).unwrap();
        if !delta.eq(&xq).unwrap() {
            return fail(
                "quotient witness identity failed",
                json!({ "x": element_value(&xq) }),
            );
        }
    }
    Ok(())
}

pub fn trial_kernel(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    let x = random_element(rng, dim, bound, Flavor::Absolute);
    let instance = json!({ "x": element_value(&x) });
    let exact = in_plus_kernel(&x).unwrap();
    // Probe directions span the dual; the exact test is authoritative and
    // kernel elements must vanish on every probe.
    let mut probes: Vec<Vec<Int>> = (0..dim).map(|i| intpoly::scalar::unit_vec(dim, i)).collect();
    probes.push(vec![Int::from(1); dim]);
    for _ in 0..3 {
        probes.push(random_direction(rng, dim));
    }
    let all_zero = probes.iter().all(|phi| seminorm(&x, phi).is_zero());
    if exact && !all_zero {
        return fail("kernel element has nonzero seminorm probe", instance);
    }
    if !all_zero && exact {
        return fail("probe/exact disagreement", instance);
    }
    let y = random_kernel_element(rng, dim, bound);
    if !in_plus_kernel(&y).unwrap() {
        return fail(
            "y - *y not recognized as a kernel element",
            json!({ "y": element_value(&y) }),
        );
    }
    if dim == 1 {
        kernel_rank_one_model()?;
    }
    Ok(())
}

/// The rank-one model checks: the isomorphisms P(Z) = Z^2 and P_T(Z) = Z,
/// the involution formula, and the images of id+* and id-* in the quotient.
pub fn kernel_rank_one_model() -> Result<(), Value> {
    let interval = |m: i64, n: i64| {
        GroupElement::new(
            Polytope::from_ints(&[&[m], &[n]]),
            Polytope::from_ints(&[&[0]]),
            Flavor::Absolute,
        )
        .unwrap()
    };
    for m in -5i64..=5 {
        for n in m..=5 {
            let x = interval(m, n);
            let (k, l) = dim1::to_pair(&x);
            if (k.clone(), l.clone()) != (Int::from(m), Int::from(n - m)) {
                return fail("pair isomorphism failed", json!({ "m": m, "n": n }));
            }
            if !dim1::from_pair(&k, &l, Flavor::Absolute).eq(&x).unwrap() {
                return fail("pair round trip failed", json!({ "m": m, "n": n }));
            }
            let (ik, il) = dim1::involution_pair(&k, &l);
            if !x
                .involution()
                .eq(&dim1::from_pair(&ik, &il, Flavor::Absolute))
                .unwrap()
            {
                return fail("involution formula failed", json!({ "m": m, "n": n }));
            }
            // P_T(Z): the involution is the identity.
            let xq = GroupElement::new(
                Polytope::from_ints(&[&[m], &[n]]),
                Polytope::from_ints(&[&[0]]),
                Flavor::Translation,
            )
            .unwrap();
            if !xq.involution().eq(&xq).unwrap() {
                return fail("quotient involution is not the identity", json!({ "m": m, "n": n }));
            }
        }
    }
    // Closing computation in P_T(Z) = Z with * = id: everything is killed
    // by id - *, while the image of id + * is 2Z. Representatives 1 and 2:
    let unit = GroupElement::new(
        Polytope::from_ints(&[&[0], &[1]]),
        Polytope::from_ints(&[&[0]]),
        Flavor::Translation,
    )
    .unwrap();
    if !unit.sub(&unit.involution()).unwrap().is_zero().unwrap() {
        return fail("id - * does not vanish on the quotient", json!({}));
    }
    let doubled = unit.add(&unit.involution()).unwrap();
    if dim1::quotient_value(&doubled) != Int::from(2) {
        return fail("(id + *)[0,1] should have length 2", json!({}));
    }
    // Length is a complete invariant of P_T(Z) and id + * doubles it, so
    // the odd length 1 is not in the image while length 2 is.
    if dim1::quotient_value(&unit).clone() % Int::from(2) == Int::from(0) {
        return fail("representative 1 misclassified", json!({}));
    }
    Ok(())
}

pub fn run_trial(suite: Suite, rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Result<(), Value> {
    match suite {
        Suite::Cancellation => trial_cancellation(rng, dim, bound),
        Suite::FaceAdditivity => trial_face_additivity(rng, dim, bound),
        Suite::Shadow => trial_shadow(rng, dim, bound),
        Suite::Cutting => trial_cutting(rng, dim, bound),
        Suite::Partition => trial_partition(rng, dim, bound),
        Suite::ShadowPartition => trial_shadow_partition(rng, dim, bound),
        Suite::Stretching => trial_stretching(rng, dim, bound),
        Suite::Gluing => trial_gluing(rng, dim, bound),
        Suite::Euler => trial_euler(rng, dim, bound),
        Suite::EulerCorollaries => trial_euler_corollaries(rng, dim, bound),
        Suite::BasisRoundtrip => trial_basis_roundtrip(rng, dim, bound),
        Suite::Witness => trial_witness(rng, dim, bound),
        Suite::Kernel => trial_kernel(rng, dim, bound),
        Suite::All => {
            for (_, suite) in SUITE_NAMES.iter().filter(|(_, s)| *s != Suite::All) {
                run_trial(*suite, rng, dim, bound)?;
            }
            Ok(())
        }
    }
}

/// Run a suite; trials are independent and may fan out across threads.
pub fn run(config: Config) -> VerifyReport {
    let started = Instant::now();
    let indices: Vec<u64> = (config.start..config.start + config.trials).collect();
    let one = |&index: &u64| -> Option<(u64, Value)> {
        let mut rng = rng_for(config.seed, index);
        match run_trial(config.suite, &mut rng, config.dim, config.bound) {
            Ok(()) => None,
            Err(ce) => Some((index, ce)),
        }
    };
    let failures: Vec<(u64, Value)> = if config.parallel {
        indices.par_iter().filter_map(one).collect()
    } else {
        indices.iter().filter_map(one).collect()
    };
    let passed = config.trials - failures.len() as u64;
    let counterexample = failures.into_iter().min_by_key(|(i, _)| *i);
    VerifyReport {
        config,
        passed,
        counterexample,
        wall: started.elapsed(),
    }
}
