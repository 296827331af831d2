//! Deterministic instance generation for the verification harness: every
//! trial draws from a ChaCha stream keyed by `(seed, index)`, so parallel
//! and serial runs see identical instances and any counterexample replays
//! from its index alone.

use intpoly::geometry::{extreme_points, Hyperplane, Point, Polytope};
use intpoly::group::{Flavor, GroupElement};
use intpoly::ops::{cut, minkowski_sum, reflect, vertical_stretch};
use intpoly::scalar::dot_int_rat;
use intpoly::{Int, Rat};
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Hull of 3 to 8 uniform lattice points in `[-bound, bound]^dim`.
pub fn random_polytope(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Polytope {
    let count = rng.gen_range(3..=8);
    let points: Vec<Point> = (0..count)
        .map(|_| {
            Point::new(
                (0..dim)
                    .map(|_| Rat::from_integer(rng.gen_range(-bound..=bound).into()))
                    .collect(),
            )
        })
        .collect();
    extreme_points(&points).unwrap()
}

/// Resample until the hull is full-dimensional.
pub fn random_full_dim(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Polytope {
    loop {
        let p = random_polytope(rng, dim, bound);
        if p.dim() == dim {
            return p;
        }
    }
}

/// A primitive direction with entries in `[-3, 3]`.
pub fn random_direction(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Int> {
    loop {
        let v: Vec<Int> = (0..dim).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect();
        if let Some(p) = intpoly::scalar::primitive(&v) {
            return p;
        }
    }
}

/// A hyperplane meeting the interior of the support interval of a random
/// direction on `p` (or passing through a flat `p`).
pub fn random_hyperplane_through(rng: &mut ChaCha8Rng, p: &Polytope) -> Hyperplane {
    let normal = random_direction(rng, p.ambient_dim());
    let vals: Vec<Rat> = p
        .vertices()
        .iter()
        .map(|v| dot_int_rat(&normal, &v.coords))
        .collect();
    let lo = vals.iter().min().unwrap().clone();
    let hi = vals.iter().max().unwrap().clone();
    let t = rng.gen_range(1i64..=3);
    let offset = &lo + (&hi - &lo) * Rat::new(Int::from(t), Int::from(4));
    Hyperplane::new(normal, offset).unwrap()
}

/// A formal difference of two random polytopes.
pub fn random_element(rng: &mut ChaCha8Rng, dim: usize, bound: i64, flavor: Flavor) -> GroupElement {
    let p = random_polytope(rng, dim, bound);
    let q = random_polytope(rng, dim, bound);
    GroupElement::new(p, q, flavor).unwrap()
}

/// A signed combination of up to `max_terms` random polytopes in the
/// translation quotient.
pub fn random_class_combo(
    rng: &mut ChaCha8Rng,
    dim: usize,
    bound: i64,
    max_terms: usize,
) -> GroupElement {
    let terms = rng.gen_range(1..=max_terms);
    let mut acc = GroupElement::zero(dim, Flavor::Translation);
    for _ in 0..terms {
        let p = GroupElement::from_polytope(random_polytope(rng, dim, bound), Flavor::Translation);
        acc = if rng.gen_bool(0.5) {
            acc.add(&p).unwrap()
        } else {
            acc.sub(&p).unwrap()
        };
    }
    acc
}

/// A grounded integral polytope obtained by stretching a random full-
/// dimensional polytope and keeping the upper half of the cut at height 0.
pub fn random_grounded(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Polytope {
    let p = random_full_dim(rng, dim, bound);
    let stretched = vertical_stretch(&p, &Int::zero()).unwrap().stretched;
    let flat = Hyperplane::flat(dim, Rat::zero());
    cut(&stretched, &flat).upper.unwrap()
}

/// A kernel element `y - *y` for random `y`.
pub fn random_kernel_element(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> GroupElement {
    let y = random_polytope(rng, dim, bound);
    GroupElement::new(y.clone(), reflect(&y), Flavor::Absolute).unwrap()
}

/// A pair with equal symmetrizations: `(A + *C, C + *A)`.
pub fn random_same_norm_pair(
    rng: &mut ChaCha8Rng,
    dim: usize,
    bound: i64,
) -> (Polytope, Polytope) {
    let a = random_polytope(rng, dim, bound);
    let c = random_polytope(rng, dim, bound);
    let p = minkowski_sum(&a, &reflect(&c)).unwrap();
    let q = minkowski_sum(&c, &reflect(&a)).unwrap();
    (p, q)
}
