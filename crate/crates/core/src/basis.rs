//! Pure subgroup charts and the recursive basis decomposition of classes in
//! the translation quotient `P_T(Z^n)`.
//!
//! Basis elements are materialized on demand from canonical keys: primitive
//! segment directions, and shadows of lower basis elements taken in the
//! last-coordinate direction of a pure subgroup's canonical chart. The
//! decomposition algorithm mirrors the constructive existence argument:
//! stretch, cut at height zero, express the grounded half through its
//! shadow partition, and close the reflected half under the involution via
//! pillar completion. Every recursion level re-verifies its own output by
//! reassembling it.

use crate::geometry::{Hyperplane, Point, Polytope};
use crate::group::{Flavor, FormalSum, GroupElement};
use crate::lattice;
use crate::ops::{
    cut, height, is_pillar, pillar_complete, reflect, shadow, vertical_stretch,
};
use crate::partition::shadow_pieces;
use crate::scalar::{primitive, unit_vec};
use crate::{mat, Error, Int, Rat, Result};
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap};

/// A pure subgroup `G = U ∩ Z^n` with its canonical (Hermite normal form)
/// lattice basis, used as a unimodular chart `Z^m -> Z^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureSubgroup {
    ambient: usize,
    basis: Vec<Vec<Int>>,
}

impl PureSubgroup {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn lattice_basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    /// The quotient by a pure subgroup is torsion-free; equivalently all
    /// Smith normal form divisors of the basis matrix are 1.
    pub fn is_saturated(&self) -> bool {
        lattice::snf_divisors(&self.basis)
            .iter()
            .all(|d| *d == Int::from(1))
    }

    pub fn to_ambient_point(&self, local: &Point) -> Point {
        debug_assert_eq!(local.dim(), self.rank());
        let mut coords = vec![Rat::zero(); self.ambient];
        for (x, b) in local.coords.iter().zip(&self.basis) {
            for (acc, e) in coords.iter_mut().zip(b) {
                let add = x * Rat::from_integer(e.clone());
                *acc += add;
            }
        }
        Point::new(coords)
    }

    pub fn to_ambient_polytope(&self, p: &Polytope) -> Polytope {
        let verts: Vec<Point> = p.vertices().iter().map(|v| self.to_ambient_point(v)).collect();
        Polytope::from_extreme(self.ambient, verts)
    }

    /// One-sided inverse on the subgroup: exact chart coordinates of an
    /// ambient point, which must lie in `span(basis)`.
    pub fn from_ambient_point(&self, p: &Point) -> Option<Point> {
        let rows: Vec<Vec<Rat>> = (0..self.ambient)
            .map(|i| {
                self.basis
                    .iter()
                    .map(|b| Rat::from_integer(b[i].clone()))
                    .collect()
            })
            .collect();
        mat::solve(&rows, &p.coords).map(Point::new)
    }

    pub fn from_ambient_polytope(&self, p: &Polytope) -> Polytope {
        let verts: Vec<Point> = p
            .vertices()
            .iter()
            .map(|v| {
                self.from_ambient_point(v)
                    .expect("polytope must lie in the subgroup span")
            })
            .collect();
        Polytope::from_extreme(self.rank(), verts)
    }
}

/// The smallest pure subgroup containing the given integer vectors:
/// saturate the spanned sublattice and take the canonical HNF basis.
pub fn pure_closure(vectors: &[Vec<Int>], ambient: usize) -> PureSubgroup {
    PureSubgroup {
        ambient,
        basis: lattice::saturate(vectors, ambient),
    }
}

/// Canonical name of a basis element of `P_T(Z^a)`.
///
/// `Segment` is a primitive, sign-normalized direction; `Shadow` applies
/// the shadow map in the last chart coordinate of a pure subgroup (the
/// identity chart for full-rank shadows) to an inner basis element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKey {
    Segment { dir: Vec<Int> },
    Shadow { chart: Vec<Vec<Int>>, inner: Box<BasisKey> },
}

impl BasisKey {
    pub fn segment(dir: Vec<Int>) -> Result<Self> {
        let p = primitive(&dir).ok_or(Error::ZeroDirection)?;
        Ok(BasisKey::Segment { dir: p })
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            BasisKey::Segment { dir } => dir.len(),
            BasisKey::Shadow { chart, .. } => chart[0].len(),
        }
    }

    /// Dimension of the named basis polytope.
    pub fn dim(&self) -> usize {
        match self {
            BasisKey::Segment { .. } => 1,
            BasisKey::Shadow { inner, .. } => inner.dim() + 1,
        }
    }
}

fn identity_chart(a: usize) -> Vec<Vec<Int>> {
    (0..a).map(|i| unit_vec(a, i)).collect()
}

fn subgroup_from_chart(chart: &[Vec<Int>], ambient: usize) -> PureSubgroup {
    PureSubgroup {
        ambient,
        basis: chart.to_vec(),
    }
}

/// The translation-normalized polytope named by a key.
pub fn basis_polytope(key: &BasisKey) -> Result<Polytope> {
    match key {
        BasisKey::Segment { dir } => {
            let canonical = primitive(dir).ok_or_else(|| {
                Error::MalformedKey("segment direction must be nonzero".into())
            })?;
            if &canonical != dir {
                return Err(Error::MalformedKey(
                    "segment direction must be primitive and sign-normalized".into(),
                ));
            }
            let a = dir.len();
            let end = Point::new(dir.iter().map(|x| Rat::from_integer(x.clone())).collect());
            Ok(Polytope::from_extreme(a, vec![Point::origin(a), end]).normalize_translation())
        }
        BasisKey::Shadow { chart, inner } => {
            let a = chart
                .first()
                .ok_or_else(|| Error::MalformedKey("empty chart".into()))?
                .len();
            let m = chart.len();
            if chart.iter().any(|v| v.len() != a) || m < 2 || m > a {
                return Err(Error::MalformedKey("chart shape invalid".into()));
            }
            if lattice::saturate(chart, a) != *chart {
                return Err(Error::MalformedKey(
                    "chart must be the canonical basis of a pure subgroup".into(),
                ));
            }
            if inner.ambient_dim() != m {
                return Err(Error::MalformedKey(
                    "inner key ambient must match chart rank".into(),
                ));
            }
            let inner_poly = basis_polytope(inner)?;
            let sh = shadow(&inner_poly);
            if sh.dim() != m {
                return Err(Error::MalformedKey(
                    "shadow of inner element is not full-dimensional in the chart".into(),
                ));
            }
            let sub = subgroup_from_chart(chart, a);
            Ok(sub.to_ambient_polytope(&sh).normalize_translation())
        }
    }
}

/// Integer coefficients on canonical basis keys.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    ambient: usize,
    coeffs: BTreeMap<BasisKey, i64>,
}

impl Decomposition {
    pub fn new(ambient: usize) -> Self {
        Decomposition {
            ambient,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_coeffs(ambient: usize, coeffs: BTreeMap<BasisKey, i64>) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| *c != 0).collect();
        Decomposition { ambient, coeffs }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn coefficients(&self) -> &BTreeMap<BasisKey, i64> {
        &self.coeffs
    }

    pub fn add(&self, other: &Decomposition) -> Decomposition {
        assert_eq!(self.ambient, other.ambient);
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            let e = coeffs.entry(k.clone()).or_insert(0);
            *e += c;
        }
        Decomposition::from_coeffs(self.ambient, coeffs)
    }

    pub fn negate(&self) -> Decomposition {
        Decomposition {
            ambient: self.ambient,
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Decomposition) -> Decomposition {
        self.add(&other.negate())
    }
}

type CoeffMap = BTreeMap<BasisKey, i64>;

fn map_add(acc: &mut CoeffMap, other: &CoeffMap, factor: i64) {
    for (k, c) in other {
        let e = acc.entry(k.clone()).or_insert(0);
        *e += c * factor;
        if *e == 0 {
            acc.remove(k);
        }
    }
}

fn map_add_key(acc: &mut CoeffMap, key: BasisKey, coeff: i64) {
    if coeff == 0 {
        return;
    }
    let e = acc.entry(key.clone()).or_insert(0);
    *e += coeff;
    if *e == 0 {
        acc.remove(&key);
    }
}

struct Ctx {
    memo: HashMap<Polytope, CoeffMap>,
    inv_memo: HashMap<BasisKey, CoeffMap>,
}

impl Ctx {
    fn new() -> Self {
        Ctx {
            memo: HashMap::new(),
            inv_memo: HashMap::new(),
        }
    }
}

fn reassemble_map(coeffs: &CoeffMap, ambient: usize) -> GroupElement {
    let mut sum = FormalSum::new(ambient);
    for (key, &c) in coeffs {
        sum.add_term(basis_polytope(key).expect("internal keys are well-formed"), c);
    }
    sum.collapse(Flavor::Translation)
}

fn int_to_i64(x: &Int) -> i64 {
    x.to_i64().expect("coefficient exceeds desk scale")
}

/// Coefficients of the class of a single integral polytope.
fn decompose_polytope(ctx: &mut Ctx, p: &Polytope) -> CoeffMap {
    let p = p.normalize_translation();
    if let Some(hit) = ctx.memo.get(&p) {
        return hit.clone();
    }
    let a = p.ambient_dim();
    let d = p.dim();
    let result: CoeffMap = if d == 0 {
        CoeffMap::new()
    } else if d == 1 {
        let dir_rat = p.vertices()[1].sub(&p.vertices()[0]);
        let dir: Vec<Int> = dir_rat
            .coords
            .iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect();
        let length = crate::scalar::gcd_vec(&dir);
        let prim = primitive(&dir).expect("segment has nonzero direction");
        let mut m = CoeffMap::new();
        map_add_key(&mut m, BasisKey::Segment { dir: prim }, int_to_i64(&length));
        m
    } else if d < a {
        // Chart into the pure closure of the direction space and recurse.
        let dirs: Vec<Vec<Int>> = p.vertices()[1..]
            .iter()
            .map(|v| {
                v.sub(&p.vertices()[0])
                    .coords
                    .iter()
                    .map(|c| c.to_integer())
                    .collect()
            })
            .collect();
        let sub = pure_closure(&dirs, a);
        assert_eq!(sub.rank(), d, "pure closure rank equals polytope dimension");
        let local = sub.from_ambient_polytope(&p);
        assert!(local.is_integral(), "saturated chart preimage is integral");
        let inner = decompose_polytope(ctx, &local);
        let mut m = CoeffMap::new();
        for (key, c) in inner {
            map_add_key(&mut m, lift_key(&sub, &key), c);
        }
        m
    } else {
        decompose_full_dim(ctx, &p)
    };
    // Self-check at every level: the collapsed coefficients reproduce the
    // input class.
    let rebuilt = reassemble_map(&result, a);
    let target = GroupElement::from_polytope(p.clone(), Flavor::Translation);
    if !rebuilt.eq(&target).unwrap() {
        panic!("decomposition reassembly check failed at a recursion level (bug): {p:?}");
    }
    ctx.memo.insert(p, result.clone());
    result
}

/// Push a key through a pure subgroup chart.
fn lift_key(sub: &PureSubgroup, key: &BasisKey) -> BasisKey {
    match key {
        BasisKey::Segment { dir } => {
            let mut out = vec![Int::zero(); sub.ambient_dim()];
            for (x, b) in dir.iter().zip(sub.lattice_basis()) {
                for (acc, e) in out.iter_mut().zip(b) {
                    *acc += x * e;
                }
            }
            let prim = primitive(&out).expect("chart is injective");
            // Saturated charts preserve primitivity.
            debug_assert_eq!(crate::scalar::gcd_vec(&prim), Int::from(1));
            BasisKey::Segment { dir: prim }
        }
        BasisKey::Shadow { chart, inner } => {
            let composed: Vec<Vec<Int>> = chart
                .iter()
                .map(|col| {
                    let mut out = vec![Int::zero(); sub.ambient_dim()];
                    for (x, b) in col.iter().zip(sub.lattice_basis()) {
                        for (acc, e) in out.iter_mut().zip(b) {
                            *acc += x * e;
                        }
                    }
                    out
                })
                .collect();
            BasisKey::Shadow {
                chart: composed,
                inner: inner.clone(),
            }
        }
    }
}

/// Coefficients of the shadow of a class of dimension below the ambient
/// rank: apply shadow additivity to the inner decomposition, promoting
/// full-dimensional shadows to shadow keys and recursing on the rest.
fn shadow_route(ctx: &mut Ctx, f: &Polytope) -> CoeffMap {
    let a = f.ambient_dim();
    let inner = decompose_polytope(ctx, f);
    let mut m = CoeffMap::new();
    for (key, c) in inner {
        let bp = basis_polytope(&key).expect("internal key");
        let sh = shadow(&bp);
        if sh.dim() == a {
            map_add_key(
                &mut m,
                BasisKey::Shadow {
                    chart: identity_chart(a),
                    inner: Box::new(key),
                },
                c,
            );
        } else {
            let sub = decompose_polytope(ctx, &sh);
            map_add(&mut m, &sub, c);
        }
    }
    m
}

/// Coefficients of a grounded full-dimensional polytope via the partition
/// relation over its shadow partition.
fn decompose_grounded(ctx: &mut Ctx, p: &Polytope) -> CoeffMap {
    let a = p.ambient_dim();
    let pieces = shadow_pieces(p).expect("input must be grounded");
    let hp = height(p);
    // Map each distinct piece polytope to its defining top face.
    let mut piece_faces: BTreeMap<Polytope, Polytope> = BTreeMap::new();
    let mut cells: BTreeMap<Polytope, usize> = BTreeMap::new();
    for (f, piece) in &pieces {
        for face in crate::geometry::face_lattice(piece) {
            cells.insert(face.polytope.clone(), face.polytope.dim());
        }
        piece_faces.insert(piece.clone(), f.polytope.clone());
    }
    let parent_facets: Vec<crate::geometry::Face> = crate::geometry::face_lattice(p)
        .into_iter()
        .filter(|f| a - f.dim() == 1)
        .collect();
    let in_boundary = |cell: &Polytope| -> bool {
        parent_facets.iter().any(|f| {
            let c = crate::scalar::dot_int_rat(
                &f.witness_direction,
                &f.polytope.vertices()[0].coords,
            );
            cell.vertices()
                .iter()
                .all(|v| crate::scalar::dot_int_rat(&f.witness_direction, &v.coords) == c)
        })
    };
    let z_key = BasisKey::Segment {
        dir: unit_vec(a, a - 1),
    };
    let mut m = CoeffMap::new();
    for (cell, dim) in &cells {
        if in_boundary(cell) {
            continue;
        }
        let sign = if (a - dim) % 2 == 0 { 1 } else { -1 };
        if *dim == a {
            let f = piece_faces
                .get(cell)
                .expect("every full-dimensional cell is a piece");
            let k = height(f) - &hp;
            let sub = shadow_route(ctx, f);
            map_add(&mut m, &sub, sign);
            map_add_key(&mut m, z_key.clone(), sign * int_to_i64(&k.to_integer()));
        } else {
            let sub = decompose_polytope(ctx, cell);
            map_add(&mut m, &sub, sign);
        }
    }
    m
}

/// Coefficients of the reflection of a basis element.
fn involution_coeffs(ctx: &mut Ctx, key: &BasisKey) -> CoeffMap {
    if let Some(hit) = ctx.inv_memo.get(key) {
        return hit.clone();
    }
    let result = match key {
        // Segment classes are fixed by the involution up to translation.
        BasisKey::Segment { .. } => {
            let mut m = CoeffMap::new();
            map_add_key(&mut m, key.clone(), 1);
            m
        }
        BasisKey::Shadow { chart, inner } => {
            let a = key.ambient_dim();
            if chart.len() < a {
                // Lower-rank shadows reflect inside their subgroup and are
                // plain lower-dimensional polytopes here.
                let bp = basis_polytope(key).expect("internal key");
                decompose_polytope(ctx, &reflect(&bp))
            } else {
                // Full-rank shadow: close under the involution through
                // pillar completion, *Sh(B) = Q + *B - Sh(*B).
                let b = basis_polytope(inner).expect("internal key");
                let sh = shadow(&b);
                let p_refl = reflect(&sh);
                let (q, f, s) = pillar_complete(&p_refl)
                    .expect("reflected shadow of a basis element completes to a pillar");
                let (base, k) = is_pillar(&q)
                    .expect("pillar test on full-dimensional polytope")
                    .expect("completion produced a pillar");
                let mut m = CoeffMap::new();
                let base_coeffs = decompose_polytope(ctx, &base);
                map_add(&mut m, &base_coeffs, 1);
                map_add_key(
                    &mut m,
                    BasisKey::Segment {
                        dir: unit_vec(a, a - 1),
                    },
                    int_to_i64(&k),
                );
                let f_coeffs = decompose_polytope(ctx, &f);
                map_add(&mut m, &f_coeffs, 1);
                let s_coeffs = if s.dim() == a {
                    decompose_grounded(ctx, &s)
                } else {
                    decompose_polytope(ctx, &s)
                };
                map_add(&mut m, &s_coeffs, -1);
                m
            }
        }
    };
    ctx.inv_memo.insert(key.clone(), result.clone());
    result
}

/// Full-dimensional case: stretch, cut at height zero, decompose the
/// grounded upper half directly and the lower half through the involution.
fn decompose_full_dim(ctx: &mut Ctx, p: &Polytope) -> CoeffMap {
    let a = p.ambient_dim();
    let stretch = vertical_stretch(p, &Int::zero()).expect("integral input");
    let q = stretch.stretched;
    let flat = Hyperplane::flat(a, Rat::zero());
    let parts = cut(&q, &flat);
    let q_plus = parts.upper.expect("stretched polytope crosses height zero");
    let q_minus = parts.lower.expect("stretched polytope crosses height zero");
    let section = parts.section.expect("stretched polytope crosses height zero");
    assert_eq!(q_plus.dim(), a);
    assert_eq!(q_minus.dim(), a);

    let mut m = decompose_grounded(ctx, &q_plus);

    // Lower half: decompose its grounded reflection, then apply the
    // involution key by key.
    let reflected = reflect(&q_minus);
    let lower = decompose_grounded(ctx, &reflected);
    for (key, c) in lower {
        let inv = involution_coeffs(ctx, &key);
        map_add(&mut m, &inv, c);
    }

    let section_coeffs = decompose_polytope(ctx, &section);
    map_add(&mut m, &section_coeffs, -1);
    map_add_key(
        &mut m,
        BasisKey::Segment {
            dir: unit_vec(a, a - 1),
        },
        -2 * int_to_i64(&stretch.k),
    );
    m
}

/// Decompose a class in `P_T(Z^n)`, `n <= 3`, into basis coefficients.
/// The reassembly postcondition is verified before returning.
pub fn decompose(x: &GroupElement) -> Result<Decomposition> {
    if x.flavor() != Flavor::Translation {
        return Err(Error::FlavorMismatch);
    }
    if x.ambient_dim() > 3 {
        return Err(Error::RankGuard);
    }
    if !x.is_integral() {
        return Err(Error::NotIntegral);
    }
    let mut ctx = Ctx::new();
    let pos = decompose_polytope(&mut ctx, x.positive());
    let neg = decompose_polytope(&mut ctx, x.negative());
    let mut coeffs = pos;
    map_add(&mut coeffs, &neg, -1);
    let result = Decomposition::from_coeffs(x.ambient_dim(), coeffs);
    let rebuilt = reassemble(&result)?;
    if !rebuilt.eq(x)? {
        panic!("decomposition reassembly check failed (bug)");
    }
    Ok(result)
}

/// Signed Minkowski collapse of basis coefficients in `P_T(Z^n)`.
pub fn reassemble(d: &Decomposition) -> Result<GroupElement> {
    let mut sum = FormalSum::new(d.ambient);
    for (key, &c) in &d.coeffs {
        sum.add_term(basis_polytope(key)?, c);
    }
    Ok(sum.collapse(Flavor::Translation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int_vec, rat};

    fn seg_key(dir: &[i64]) -> BasisKey {
        BasisKey::Segment {
            dir: int_vec(dir),
        }
    }

    fn shadow_key(a: usize, inner: BasisKey) -> BasisKey {
        BasisKey::Shadow {
            chart: identity_chart(a),
            inner: Box::new(inner),
        }
    }

    fn quotient(p: Polytope) -> GroupElement {
        GroupElement::from_polytope(p, Flavor::Translation)
    }

    #[test]
    fn pure_closure_examples() {
        let g = pure_closure(&[int_vec(&[2, 0])], 2);
        assert_eq!(g.lattice_basis(), &[int_vec(&[1, 0])]);
        assert!(g.is_saturated());

        let g = pure_closure(&[int_vec(&[1, 0]), int_vec(&[0, 1])], 2);
        assert_eq!(g.rank(), 2);

        let g = pure_closure(&[int_vec(&[2, 2, 0])], 3);
        assert_eq!(g.lattice_basis(), &[int_vec(&[1, 1, 0])]);
        assert!(g.is_saturated());

        let g = pure_closure(&[int_vec(&[0, 0])], 2);
        assert_eq!(g.rank(), 0);
    }

    #[test]
    fn chart_round_trip() {
        let g = pure_closure(&[int_vec(&[1, 2, 3]), int_vec(&[0, 0, 2])], 3);
        assert_eq!(g.rank(), 2);
        let local = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 2]]);
        let ambient = g.to_ambient_polytope(&local);
        let back = g.from_ambient_polytope(&ambient);
        assert_eq!(back, local);
    }

    #[test]
    fn basis_polytope_examples() {
        let seg = basis_polytope(&seg_key(&[1, 0])).unwrap();
        assert_eq!(seg, Polytope::from_ints(&[&[0, 0], &[1, 0]]));

        // Shadow of the segment in direction (1,-1) is the standard triangle
        // up to translation.
        let t = basis_polytope(&shadow_key(2, seg_key(&[1, -1]))).unwrap();
        assert_eq!(t, Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]));

        let r = basis_polytope(&shadow_key(2, seg_key(&[1, 1]))).unwrap();
        assert_eq!(r, Polytope::from_ints(&[&[0, 0], &[1, 0], &[1, 1]]));

        // Malformed keys.
        assert!(matches!(
            basis_polytope(&BasisKey::Segment { dir: int_vec(&[2, 0]) }),
            Err(Error::MalformedKey(_))
        ));
        assert!(matches!(
            basis_polytope(&shadow_key(2, seg_key(&[1, 0]))),
            Err(Error::MalformedKey(_))
        ));
    }

    #[test]
    fn decompose_primitive_multiple() {
        let x = quotient(Polytope::from_ints(&[&[0, 0], &[3, 0]]));
        let d = decompose(&x).unwrap();
        let expected: BTreeMap<BasisKey, i64> = [(seg_key(&[1, 0]), 3)].into_iter().collect();
        assert_eq!(d.coefficients(), &expected);
    }

    #[test]
    fn decompose_triangle() {
        let t = quotient(Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]));
        let d = decompose(&t).unwrap();
        let expected: BTreeMap<BasisKey, i64> =
            [(shadow_key(2, seg_key(&[1, -1])), 1)].into_iter().collect();
        assert_eq!(d.coefficients(), &expected);
    }

    #[test]
    fn decompose_square() {
        let sq = quotient(Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        let d = decompose(&sq).unwrap();
        let expected: BTreeMap<BasisKey, i64> =
            [(seg_key(&[1, 0]), 1), (seg_key(&[0, 1]), 1)]
                .into_iter()
                .collect();
        assert_eq!(d.coefficients(), &expected);
        // Square = edge + edge as a Minkowski sum.
        let e1 = Polytope::from_ints(&[&[0, 0], &[1, 0]]);
        let e2 = Polytope::from_ints(&[&[0, 0], &[0, 1]]);
        let sum = crate::ops::minkowski_sum(&e1, &e2).unwrap();
        assert!(quotient(sum).eq(&sq).unwrap());
    }

    #[test]
    fn reassemble_examples() {
        let empty = Decomposition::new(2);
        assert!(reassemble(&empty).unwrap().is_zero().unwrap());

        let d = Decomposition::from_coeffs(2, [(seg_key(&[1, 0]), 2)].into_iter().collect());
        let x = reassemble(&d).unwrap();
        assert!(x.eq(&quotient(Polytope::from_ints(&[&[0, 0], &[2, 0]]))).unwrap());
    }

    #[test]
    fn round_trip_difference() {
        let p = Polytope::from_ints(&[&[0, 0], &[2, 1], &[1, 2], &[0, 1]]);
        let q = Polytope::from_ints(&[&[0, 0], &[1, 0], &[1, 1]]);
        let x = GroupElement::new(p, q, Flavor::Translation).unwrap();
        let d = decompose(&x).unwrap();
        assert!(reassemble(&d).unwrap().eq(&x).unwrap());
    }

    #[test]
    fn round_trip_z3() {
        let p = Polytope::from_ints(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let x = quotient(p);
        let d = decompose(&x).unwrap();
        assert!(reassemble(&d).unwrap().eq(&x).unwrap());
    }

    #[test]
    fn linearity_small() {
        let x = quotient(Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]));
        let y = quotient(Polytope::from_ints(&[&[0, 0], &[1, 1], &[2, 0]]));
        let dx = decompose(&x).unwrap();
        let dy = decompose(&y).unwrap();
        let dxy = decompose(&x.add(&y).unwrap()).unwrap();
        assert_eq!(dx.add(&dy), dxy);
    }

    #[test]
    fn one_dimensional_single_key() {
        for p in [
            Polytope::from_ints(&[&[0, 0], &[4, 6]]),
            Polytope::from_ints(&[&[1, 1], &[-2, 1]]),
        ] {
            let d = decompose(&quotient(p.clone())).unwrap();
            assert_eq!(d.coefficients().len(), 1);
            let (key, len) = d.coefficients().iter().next().unwrap();
            let bp = basis_polytope(key).unwrap();
            let rebuilt = crate::ops::scale(&bp, &Int::from(*len));
            assert!(quotient(rebuilt).eq(&quotient(p)).unwrap());
        }
    }

    #[test]
    fn distinct_keys_distinct_polytopes() {
        let keys = vec![
            seg_key(&[1, 0]),
            seg_key(&[0, 1]),
            seg_key(&[1, -1]),
            shadow_key(2, seg_key(&[1, -1])),
            shadow_key(2, seg_key(&[1, 1])),
            shadow_key(2, seg_key(&[0, 1])),
        ];
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                let a = basis_polytope(&keys[i]);
                let b = basis_polytope(&keys[j]);
                if let (Ok(a), Ok(b)) = (a, b) {
                    let ea = quotient(a);
                    let eb = quotient(b);
                    assert!(!ea.eq(&eb).unwrap(), "{:?} vs {:?}", keys[i], keys[j]);
                }
            }
        }
    }

    #[test]
    fn guard_and_flavor_errors() {
        let p = Polytope::from_ints(&[&[0, 0, 0, 0], &[1, 0, 0, 0]]);
        let x = quotient(p);
        assert!(matches!(decompose(&x), Err(Error::RankGuard)));

        let abs = GroupElement::from_polytope(
            Polytope::from_ints(&[&[0, 0], &[1, 0]]),
            Flavor::Absolute,
        );
        assert!(matches!(decompose(&abs), Err(Error::FlavorMismatch)));

        let rational = Polytope::hull(vec![
            Point::new(vec![rat(0), rat(0)]),
            Point::new(vec![crate::scalar::ratio(1, 2), rat(0)]),
        ])
        .unwrap();
        assert!(matches!(
            decompose(&quotient(rational)),
            Err(Error::NotIntegral)
        ));
    }
}
