//! Canonical exact-rational polytopes: points, hyperplanes, convex hulls,
//! vertex adjacency and face lattices.
//!
//! A [`Polytope`] always stores the lexicographically sorted list of the
//! extreme points of its vertex set, so structural equality coincides with
//! set equality. Extremality is decided exactly; no floating point appears
//! anywhere.

use crate::lp::{lp_is_convex_combination, midpoint_off_support};
use crate::scalar::{clear_denominators, dot_int_rat};
use crate::{mat, Error, Int, Rat, Result};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub coords: Vec<Rat>,
}

impl Point {
    pub fn new(coords: Vec<Rat>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point {
            coords: coords
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        }
    }

    pub fn origin(dim: usize) -> Self {
        Point {
            coords: vec![Rat::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(Rat::is_integer)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Point {
        Point::new(self.coords.iter().map(|a| -a).collect())
    }
}

/// An affine hyperplane `{x | <normal, x> = offset}` with a primitive
/// integer normal. The normal's orientation is preserved: callers rely on
/// it to tell the two sides apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub normal: Vec<Int>,
    pub offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vec<Int>, offset: Rat) -> Result<Self> {
        let g = crate::scalar::gcd_vec(&normal);
        if g.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let normal: Vec<Int> = normal.iter().map(|x| x / &g).collect();
        let offset = offset / Rat::from_integer(g);
        Ok(Hyperplane { normal, offset })
    }

    /// The flat hyperplane `{x | x_n = h}`.
    pub fn flat(ambient: usize, height: Rat) -> Self {
        Hyperplane {
            normal: crate::scalar::unit_vec(ambient, ambient - 1),
            offset: height,
        }
    }

    /// Flat means a translate of `z^perp`, i.e. the normal is `±e_n`.
    pub fn is_flat(&self) -> bool {
        let n = self.normal.len();
        self.normal[..n - 1].iter().all(Zero::is_zero) && !self.normal[n - 1].is_zero()
    }

    pub fn eval(&self, p: &Point) -> Rat {
        dot_int_rat(&self.normal, &p.coords)
    }
}

/// A polytope in canonical form: the lexicographically sorted extreme
/// points of its vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polytope {
    ambient: usize,
    dim: usize,
    vertices: Vec<Point>,
}

impl Polytope {
    /// Ambient dimension `n`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(Point::is_integral)
    }

    /// All vertices lie in a translate of `z^perp`.
    pub fn is_flat(&self) -> bool {
        let n = self.ambient;
        let h = &self.vertices[0].coords[n - 1];
        self.vertices.iter().all(|v| &v.coords[n - 1] == h)
    }

    pub fn point(p: Point) -> Self {
        let ambient = p.dim();
        Polytope {
            ambient,
            dim: 0,
            vertices: vec![p],
        }
    }

    /// Convex hull constructor; see [`extreme_points`].
    pub fn hull(points: Vec<Point>) -> Result<Self> {
        extreme_points(&points)
    }

    /// Test helper: hull of integer coordinate rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        extreme_points(&rows.iter().map(|r| Point::from_ints(r)).collect::<Vec<_>>())
            .expect("nonempty integral hull")
    }

    /// Internal constructor for vertex lists already known to be extreme.
    /// Sorts and recomputes the dimension; does not re-run hull reduction.
    pub(crate) fn from_extreme(ambient: usize, mut vertices: Vec<Point>) -> Self {
        vertices.sort();
        vertices.dedup();
        let dim = affine_rank(&vertices).expect("nonempty vertex list");
        Polytope {
            ambient,
            dim,
            vertices,
        }
    }

    pub fn translate(&self, t: &[Rat]) -> Polytope {
        debug_assert_eq!(t.len(), self.ambient);
        // Translation preserves lexicographic order and extremality.
        let vertices = self
            .vertices
            .iter()
            .map(|v| Point::new(v.coords.iter().zip(t).map(|(a, b)| a + b).collect()))
            .collect();
        Polytope {
            ambient: self.ambient,
            dim: self.dim,
            vertices,
        }
    }

    /// The lexicographically smallest vertex.
    pub fn lexmin_vertex(&self) -> &Point {
        &self.vertices[0]
    }

    /// Translate the lexicographic minimum vertex to the origin.
    pub fn normalize_translation(&self) -> Polytope {
        let t: Vec<Rat> = self.vertices[0].coords.iter().map(|c| -c).collect();
        self.translate(&t)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        if p.dim() != self.ambient {
            return false;
        }
        lp_is_convex_combination(p, &self.vertices)
    }

    /// Vertex index pairs forming the 1-skeleton.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        if k < 2 {
            return Vec::new();
        }
        if self.dim <= 1 {
            debug_assert_eq!(k, 2);
            return vec![(0, 1)];
        }
        if self.dim == 2 {
            let order = if let Some(keep) =
                integer_coords(&self.vertices).and_then(|ints| int_hull_indices(&ints, 2))
            {
                keep
            } else {
                let chart = Chart::new(&self.vertices);
                let locals: Vec<Vec<Rat>> = self
                    .vertices
                    .iter()
                    .map(|v| chart.to_local(v))
                    .collect();
                hull_2d_cycle(&locals)
            };
            debug_assert_eq!(order.len(), k);
            return (0..k)
                .map(|i| {
                    let a = order[i];
                    let b = order[(i + 1) % k];
                    (a.min(b), a.max(b))
                })
                .sorted()
                .collect();
        }
        if self.dim == 3 {
            // Edges of the facet polygons are exactly the edges of the
            // polytope.
            if let Some(ints) = integer_coords(&self.vertices) {
                if let Some(axes) = injective_axes(&ints, 3) {
                    let shadow: Vec<crate::hull3d::P3> = ints
                        .iter()
                        .map(|row| [row[axes[0]], row[axes[1]], row[axes[2]]])
                        .collect();
                    let hull = crate::hull3d::hull3(&shadow);
                    debug_assert_eq!(hull.vertices.len(), k);
                    let mut out: BTreeSet<(usize, usize)> = BTreeSet::new();
                    for cycle in &hull.facets {
                        for w in 0..cycle.len() {
                            let a = cycle[w];
                            let b = cycle[(w + 1) % cycle.len()];
                            out.insert((a.min(b), a.max(b)));
                        }
                    }
                    return out.into_iter().collect();
                }
            }
        }
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                if midpoint_off_support(&self.vertices, i, j).is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A face of a polytope, together with an exposing direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// The face as a polytope in its own right.
    pub polytope: Polytope,
    /// Integer direction `phi` with `F_phi(parent) = polytope`; zero for the
    /// parent itself.
    pub witness_direction: Vec<Int>,
    /// Sorted indices into the parent's vertex list.
    pub vertex_indices: Vec<usize>,
}

impl Face {
    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }
}

/// Rank of the difference vectors relative to the first point; equals the
/// dimension of the affine hull.
pub fn affine_rank(points: &[Point]) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.sub(&points[0]).coords)
        .collect();
    Ok(mat::rank_of(&diffs))
}

/// Affine chart of a point configuration: an origin and a rational basis of
/// the direction space, with exact local coordinates.
pub(crate) struct Chart {
    origin: Point,
    /// Basis vectors as ambient rational vectors.
    pub basis: Vec<Vec<Rat>>,
}

impl Chart {
    pub fn new(points: &[Point]) -> Self {
        let origin = points[0].clone();
        let diffs: Vec<Vec<Rat>> = points[1..]
            .iter()
            .map(|p| p.sub(&origin).coords)
            .collect();
        // Independent difference vectors via pivot columns of the transpose.
        let n = origin.dim();
        let mut t = mat::Mat::zero(n, diffs.len());
        for (j, d) in diffs.iter().enumerate() {
            for i in 0..n {
                t.data[i][j] = d[i].clone();
            }
        }
        let pivots = t.rref();
        let basis = pivots.iter().map(|&j| diffs[j].clone()).collect();
        Chart { origin, basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn to_local(&self, p: &Point) -> Vec<Rat> {
        if self.basis.is_empty() {
            return Vec::new();
        }
        let n = self.origin.dim();
        let a: Vec<Vec<Rat>> = (0..n)
            .map(|i| self.basis.iter().map(|b| b[i].clone()).collect())
            .collect();
        let rhs = p.sub(&self.origin).coords;
        mat::solve(&a, &rhs).expect("point lies in the affine hull")
    }
}

/// Scale rational coordinates to i64 integers when the common denominator
/// and magnitudes stay comfortably inside the exact-i128-predicate range.
fn integer_coords(pts: &[Point]) -> Option<Vec<Vec<i64>>> {
    use num_integer::Integer as _;
    use num_traits::{One, ToPrimitive};
    // Safe for the i128 orientation determinants: 6 * (2 * 2^40)^3 < 2^127.
    let denominator_cap = Int::from(1i64 << 36);
    let magnitude_cap = 1i64 << 40;
    let mut lcm = Int::one();
    for p in pts {
        for c in &p.coords {
            lcm = lcm.lcm(c.denom());
            if lcm > denominator_cap {
                return None;
            }
        }
    }
    let factor = Rat::from_integer(lcm);
    let mut out = Vec::with_capacity(pts.len());
    for p in pts {
        let mut row = Vec::with_capacity(p.coords.len());
        for c in &p.coords {
            let scaled = (c * &factor).to_integer().to_i64()?;
            if scaled.abs() > magnitude_cap {
                return None;
            }
            row.push(scaled);
        }
        out.push(row);
    }
    Some(out)
}

/// Coordinate axes on which the projection restricts to an affine bijection
/// of the direction space spanned by the rows.
fn injective_axes(ints: &[Vec<i64>], rank: usize) -> Option<Vec<usize>> {
    let ambient = ints[0].len();
    // An integer basis of the direction space.
    let mut basis: Vec<Vec<i128>> = Vec::new();
    for row in &ints[1..] {
        let dir: Vec<i128> = row
            .iter()
            .zip(&ints[0])
            .map(|(a, b)| (*a - *b) as i128)
            .collect();
        let mut probe = basis.clone();
        probe.push(dir.clone());
        if int_rank(&probe) > basis.len() {
            basis.push(dir);
        }
        if basis.len() == rank {
            break;
        }
    }
    if basis.len() != rank {
        return None;
    }
    (0..ambient)
        .combinations(rank)
        .find(|axes| {
            let minor: Vec<Vec<i128>> = basis
                .iter()
                .map(|b| axes.iter().map(|&j| b[j]).collect())
                .collect();
            int_rank(&minor) == rank
        })
}

/// Rank of a small integer matrix by fraction-free elimination.
fn int_rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                for c in col..cols {
                    m[r][c] = m[r][c] * a - m[rank][c] * b;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Integer fast path for hull vertex indices in rank 2 and 3.
fn int_hull_indices(ints: &[Vec<i64>], rank: usize) -> Option<Vec<usize>> {
    let axes = injective_axes(ints, rank)?;
    match rank {
        2 => {
            let shadow: Vec<crate::hull3d::P2> = ints
                .iter()
                .map(|row| [row[axes[0]], row[axes[1]]])
                .collect();
            Some(crate::hull3d::chain2(&shadow))
        }
        3 => {
            let shadow: Vec<crate::hull3d::P3> = ints
                .iter()
                .map(|row| [row[axes[0]], row[axes[1]], row[axes[2]]])
                .collect();
            Some(crate::hull3d::hull3(&shadow).vertices)
        }
        _ => None,
    }
}

/// The canonical polytope whose vertex set is exactly the extreme points of
/// the input's convex hull.
pub fn extreme_points(points: &[Point]) -> Result<Polytope> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let ambient = points[0].dim();
    for p in points {
        if p.dim() != ambient {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                got: p.dim(),
            });
        }
    }
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        return Ok(Polytope {
            ambient,
            dim: 0,
            vertices: pts,
        });
    }
    let chart = Chart::new(&pts);
    let rank = chart.rank();
    if matches!(rank, 2 | 3) {
        if let Some(keep) = integer_coords(&pts).and_then(|ints| int_hull_indices(&ints, rank)) {
            let vertices: Vec<Point> = keep.into_iter().sorted().map(|i| pts[i].clone()).collect();
            return Ok(Polytope {
                ambient,
                dim: rank,
                vertices,
            });
        }
    }
    let locals: Vec<Vec<Rat>> = pts.iter().map(|p| chart.to_local(p)).collect();
    let keep: Vec<usize> = match rank {
        1 => {
            let mut idx: Vec<usize> = (0..pts.len()).collect();
            idx.sort_by(|&a, &b| locals[a][0].cmp(&locals[b][0]));
            vec![idx[0], idx[idx.len() - 1]]
        }
        2 => hull_2d_cycle(&locals),
        _ => reduce_extreme(&locals),
    };
    let vertices: Vec<Point> = keep
        .into_iter()
        .sorted()
        .map(|i| pts[i].clone())
        .collect();
    Ok(Polytope {
        ambient,
        dim: rank,
        vertices,
    })
}

fn cross2(o: &[Rat], a: &[Rat], b: &[Rat]) -> Rat {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Indices of the hull vertices of a 2-dimensional configuration in
/// counterclockwise cyclic order. Collinear interior points are dropped.
/// Input points must be distinct.
fn hull_2d_cycle(locals: &[Vec<Rat>]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..locals.len()).collect();
    idx.sort_by(|&a, &b| locals[a].cmp(&locals[b]));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && !cross2(
                &locals[lower[lower.len() - 2]],
                &locals[lower[lower.len() - 1]],
                &locals[i],
            )
            .is_positive()
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && !cross2(
                &locals[upper[upper.len() - 2]],
                &locals[upper[upper.len() - 1]],
                &locals[i],
            )
            .is_positive()
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Extreme-point reduction for rank >= 3 local coordinates: a midpoint
/// prefilter, chunked elimination rounds, then an exact LP pass.
fn reduce_extreme(locals: &[Vec<Rat>]) -> Vec<usize> {
    let mut live: Vec<usize> = (0..locals.len()).collect();

    // Midpoint filter: p is interior whenever 2p - q is also a candidate.
    if live.len() >= 64 {
        let set: HashSet<&Vec<Rat>> = locals.iter().collect();
        live.retain(|&i| {
            let two = Rat::from_integer(2.into());
            let p2: Vec<Rat> = locals[i].iter().map(|c| c * &two).collect();
            !locals.iter().enumerate().any(|(j, q)| {
                if j == i {
                    return false;
                }
                let mirror: Vec<Rat> = p2.iter().zip(q).map(|(a, b)| a - b).collect();
                mirror != locals[i] && set.contains(&mirror)
            })
        });
    }

    // Chunked rounds: eliminating within a chunk is sound because a point
    // interior to a sub-hull is interior to the full hull.
    const CHUNK: usize = 32;
    const DIRECT: usize = 48;
    while live.len() > DIRECT {
        let before = live.len();
        let mut survivors = Vec::new();
        for chunk in live.chunks(CHUNK) {
            survivors.extend(eliminate_direct(locals, chunk));
        }
        live = survivors;
        if live.len() == before {
            break;
        }
    }
    eliminate_direct(locals, &live)
}

fn eliminate_direct(locals: &[Vec<Rat>], candidates: &[usize]) -> Vec<usize> {
    let mut live: Vec<usize> = candidates.to_vec();
    let mut i = 0;
    while i < live.len() {
        let target = Point::new(locals[live[i]].clone());
        let gens: Vec<Point> = live
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &k)| Point::new(locals[k].clone()))
            .collect();
        if lp_is_convex_combination(&target, &gens) {
            live.remove(i);
        } else {
            i += 1;
        }
    }
    live
}

/// All faces of `P` including `P` itself, each with an exposing direction.
///
/// Facets are found by enumerating vertex subsets spanning affine rank
/// `dim(P) - 1` inside the affine hull and keeping those with all vertices
/// on one closed side; lower faces come from iterated facet computation.
/// Faces are deduplicated by vertex index set.
pub fn face_lattice(p: &Polytope) -> Vec<Face> {
    let n = p.ambient_dim();
    let all: Vec<usize> = (0..p.vertices.len()).collect();
    let mut index_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    collect_faces(p, &all, &mut index_sets);

    let facets = facet_data(p);
    let full_value: BTreeMap<usize, Rat> = BTreeMap::new();
    let _ = full_value;
    let mut faces = Vec::new();
    for set in index_sets {
        let witness: Vec<Int> = if set.len() == p.vertices.len() {
            vec![Int::zero(); n]
        } else {
            let mut w = vec![Int::zero(); n];
            for (facet_set, facet_witness) in &facets {
                if set.iter().all(|i| facet_set.contains(i)) {
                    for (acc, x) in w.iter_mut().zip(facet_witness) {
                        *acc += x;
                    }
                }
            }
            w
        };
        // The sum of the witnesses of all facets containing a face lies in
        // the relative interior of its normal cone; verify by evaluation.
        let argmax = argmax_indices(&p.vertices, &witness);
        assert_eq!(
            argmax, set,
            "face witness reconstruction failed (bug in face enumeration)"
        );
        let verts: Vec<Point> = set.iter().map(|&i| p.vertices[i].clone()).collect();
        faces.push(Face {
            polytope: Polytope::from_extreme(n, verts),
            witness_direction: witness,
            vertex_indices: set,
        });
    }
    faces.sort_by(|a, b| {
        (a.polytope.dim(), &a.vertex_indices).cmp(&(b.polytope.dim(), &b.vertex_indices))
    });
    faces
}

fn argmax_indices(vertices: &[Point], dir: &[Int]) -> Vec<usize> {
    let vals: Vec<Rat> = vertices
        .iter()
        .map(|v| dot_int_rat(dir, &v.coords))
        .collect();
    let max = vals.iter().max().unwrap().clone();
    (0..vertices.len()).filter(|&i| vals[i] == max).collect()
}

/// Recursively collect the vertex index sets of all faces of the
/// sub-polytope of `p` spanned by `indices`.
fn collect_faces(p: &Polytope, indices: &[usize], out: &mut BTreeSet<Vec<usize>>) {
    if !out.insert(indices.to_vec()) {
        return;
    }
    let verts: Vec<Point> = indices.iter().map(|&i| p.vertices[i].clone()).collect();
    let sub = Polytope::from_extreme(p.ambient, verts);
    for (facet_set, _) in facet_data(&sub) {
        let mapped: Vec<usize> = facet_set.iter().map(|&j| indices[j]).collect();
        collect_faces(p, &mapped, out);
    }
}

/// Facets of `p` as (sorted vertex index set, outward witness direction).
fn facet_data(p: &Polytope) -> Vec<(Vec<usize>, Vec<Int>)> {
    let d = p.dim();
    if d == 0 {
        return Vec::new();
    }
    let verts = &p.vertices;
    if d == 1 {
        let dir = verts[1].sub(&verts[0]);
        let w = clear_denominators(&dir.coords).expect("segment endpoints distinct");
        let neg: Vec<Int> = w.iter().map(|x| -x).collect();
        return vec![(vec![0], neg), (vec![1], w)];
    }
    let chart = Chart::new(verts);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for subset in (0..verts.len()).combinations(d) {
        let sub_pts: Vec<Point> = subset.iter().map(|&i| verts[i].clone()).collect();
        if affine_rank(&sub_pts).unwrap() != d - 1 {
            continue;
        }
        let Some(w) = hyperplane_normal_in_span(&chart, &sub_pts) else {
            continue;
        };
        let vals: Vec<Rat> = verts.iter().map(|v| dot_int_rat(&w, &v.coords)).collect();
        let c = dot_int_rat(&w, &sub_pts[0].coords);
        let all_le = vals.iter().all(|v| v <= &c);
        let all_ge = vals.iter().all(|v| v >= &c);
        if !all_le && !all_ge {
            continue;
        }
        let witness: Vec<Int> = if all_le { w } else { w.iter().map(|x| -x).collect() };
        let facet_set: Vec<usize> = (0..verts.len()).filter(|&i| vals[i] == c).collect();
        if seen.insert(facet_set.clone()) {
            out.push((facet_set, witness));
        }
    }
    out
}

/// A primitive integer vector in the direction span of `chart` orthogonal
/// to the affine hull of `face_pts`.
fn hyperplane_normal_in_span(chart: &Chart, face_pts: &[Point]) -> Option<Vec<Int>> {
    let r = chart.rank();
    let face_dirs: Vec<Vec<Rat>> = face_pts[1..]
        .iter()
        .map(|q| q.sub(&face_pts[0]).coords)
        .collect();
    // alpha solves <sum alpha_j b_j, dir> = 0 for all face directions.
    let rows: Vec<Vec<Rat>> = face_dirs
        .iter()
        .map(|dir| {
            chart
                .basis
                .iter()
                .map(|b| b.iter().zip(dir).map(|(x, y)| x * y).sum())
                .collect()
        })
        .collect();
    let ns = mat::nullspace(&rows);
    let alpha = ns.first()?;
    let mut w = vec![Rat::zero(); chart.origin.dim()];
    for (a, b) in alpha.iter().zip(&chart.basis) {
        for (acc, x) in w.iter_mut().zip(b) {
            let add = a * x;
            *acc += add;
        }
    }
    debug_assert_eq!(w.len(), chart.origin.dim());
    debug_assert_eq!(r, chart.rank());
    clear_denominators(&w)
}
