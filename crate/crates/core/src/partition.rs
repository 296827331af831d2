//! Partitions of a polytope: validation of the partition axioms,
//! construction from hyperplane arrangements and from shadows, and the
//! alternating-sign partition relations in the polytope group.

use crate::geometry::{face_lattice, Chart, Face, Hyperplane, Point, Polytope};
use crate::group::{face_euler_characteristic, Flavor, FormalSum, GroupElement};
use crate::ops::{compress, cut, height, minkowski_sum, scale, top_faces, z_segment, CutResult};
use crate::scalar::clear_denominators;
use crate::{mat, ops, Error, Int, Rat, Result};
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A validated partition of a polytope.
///
/// `boundary_cells` is the filtered family of cells not contained in the
/// boundary of the parent; the partition relations sum over it.
#[derive(Debug, Clone)]
pub struct Partition {
    parent: Polytope,
    cells: Vec<Polytope>,
    boundary_cells: Vec<Polytope>,
}

impl Partition {
    pub fn parent(&self) -> &Polytope {
        &self.parent
    }

    pub fn cells(&self) -> &[Polytope] {
        &self.cells
    }

    /// Cells not contained in the boundary of the parent.
    pub fn boundary_cells(&self) -> &[Polytope] {
        &self.boundary_cells
    }

    /// Cells of full dimension.
    pub fn pieces(&self) -> Vec<&Polytope> {
        self.cells
            .iter()
            .filter(|c| c.dim() == self.parent.dim())
            .collect()
    }
}

struct LatticeCache {
    map: HashMap<Polytope, Vec<Face>>,
}

impl LatticeCache {
    fn new() -> Self {
        LatticeCache {
            map: HashMap::new(),
        }
    }

    fn get(&mut self, p: &Polytope) -> &Vec<Face> {
        if !self.map.contains_key(p) {
            let lattice = face_lattice(p);
            self.map.insert(p.clone(), lattice);
        }
        self.map.get(p).unwrap()
    }
}

fn axiom(condition: u8, detail: impl Into<String>) -> Error {
    Error::PartitionAxiom {
        condition,
        detail: detail.into(),
    }
}

/// Fan triangulation from the lexicographically smallest vertex; returns
/// simplices as vertex lists of length `dim + 1`.
fn triangulate(p: &Polytope, cache: &mut LatticeCache) -> Vec<Vec<Point>> {
    if p.dim() == 0 {
        return vec![vec![p.vertices()[0].clone()]];
    }
    let apex = p.vertices()[0].clone();
    let facets: Vec<Polytope> = cache
        .get(p)
        .iter()
        .filter(|f| p.dim() - f.dim() == 1 && !f.vertex_indices.contains(&0))
        .map(|f| f.polytope.clone())
        .collect();
    let mut out = Vec::new();
    for facet in facets {
        for mut simplex in triangulate(&facet, cache) {
            simplex.push(apex.clone());
            out.push(simplex);
        }
    }
    out
}

/// `d! * volume` of a polytope measured in the given chart of its affine
/// hull.
fn scaled_volume(p: &Polytope, chart: &Chart, d: usize, cache: &mut LatticeCache) -> Rat {
    let mut total = Rat::from_integer(0.into());
    for simplex in triangulate(p, cache) {
        debug_assert_eq!(simplex.len(), d + 1);
        let base = chart.to_local(&simplex[0]);
        let rows: Vec<Vec<Rat>> = simplex[1..]
            .iter()
            .map(|v| {
                chart
                    .to_local(v)
                    .iter()
                    .zip(&base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        total += mat::det(&rows).abs();
    }
    total
}

/// Integer hyperplane description `<w, x> = c` for every equation cutting
/// out the affine hull of `p`.
fn affine_hull_equations(p: &Polytope) -> Vec<Hyperplane> {
    let dirs: Vec<Vec<Rat>> = p.vertices()[1..]
        .iter()
        .map(|v| v.sub(&p.vertices()[0]).coords)
        .collect();
    mat::nullspace(&dirs)
        .into_iter()
        .filter_map(|w| {
            let normal = clear_denominators(&w)?;
            let offset = crate::scalar::dot_int_rat(&normal, &p.vertices()[0].coords);
            Hyperplane::new(normal, offset).ok()
        })
        .collect()
}

/// Exact intersection of two polytopes: clip `a` by the affine hull and the
/// facet halfspaces of `b`.
pub fn intersect(a: &Polytope, b: &Polytope) -> Option<Polytope> {
    intersect_cached(a, b, &mut LatticeCache::new())
}

fn intersect_cached(a: &Polytope, b: &Polytope, cache: &mut LatticeCache) -> Option<Polytope> {
    debug_assert_eq!(a.ambient_dim(), b.ambient_dim());
    // Bounding box reject.
    for i in 0..a.ambient_dim() {
        let min_a = a.vertices().iter().map(|v| &v.coords[i]).min().unwrap();
        let max_a = a.vertices().iter().map(|v| &v.coords[i]).max().unwrap();
        let min_b = b.vertices().iter().map(|v| &v.coords[i]).min().unwrap();
        let max_b = b.vertices().iter().map(|v| &v.coords[i]).max().unwrap();
        if min_a > max_b || min_b > max_a {
            return None;
        }
    }
    let mut acc = a.clone();
    for h in affine_hull_equations(b) {
        acc = cut(&acc, &h).section?;
    }
    if b.dim() >= 1 {
        let facets: Vec<(Vec<Int>, Rat)> = cache
            .get(b)
            .iter()
            .filter(|f| b.dim() - f.dim() == 1)
            .map(|f| {
                let c = crate::scalar::dot_int_rat(
                    &f.witness_direction,
                    &f.polytope.vertices()[0].coords,
                );
                (f.witness_direction.clone(), c)
            })
            .collect();
        for (w, c) in facets {
            let h = Hyperplane::new(w, c).expect("facet witness is nonzero");
            acc = cut(&acc, &h).lower?;
        }
    }
    Some(acc)
}

fn is_in_boundary(cell: &Polytope, parent_facets: &[Face]) -> bool {
    parent_facets.iter().any(|f| {
        let c = crate::scalar::dot_int_rat(&f.witness_direction, &f.polytope.vertices()[0].coords);
        cell.vertices()
            .iter()
            .all(|v| crate::scalar::dot_int_rat(&f.witness_direction, &v.coords) == c)
    })
}

/// Check the three partition axioms exactly and build the [`Partition`]:
/// the cells cover the parent (verified by an exact volume argument plus
/// containment), the family is face-closed, and cells meet in common faces.
pub fn validate_partition(parent: &Polytope, cells: &[Polytope]) -> Result<Partition> {
    if cells.is_empty() {
        return Err(axiom(1, "no cells"));
    }
    for c in cells {
        if c.ambient_dim() != parent.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: parent.ambient_dim(),
                got: c.ambient_dim(),
            });
        }
    }
    let cell_set: BTreeSet<Polytope> = cells.iter().cloned().collect();
    let mut cache = LatticeCache::new();

    // Containment part of condition (1).
    for cell in &cell_set {
        for v in cell.vertices() {
            if !parent.contains_point(v) {
                return Err(axiom(1, format!("cell vertex {v:?} outside parent")));
            }
        }
    }

    // Condition (2): face closure.
    for cell in &cell_set {
        for f in cache.get(cell).clone() {
            if !cell_set.contains(&f.polytope) {
                return Err(axiom(
                    2,
                    format!("face of a cell is missing from the family: {:?}", f.polytope),
                ));
            }
        }
    }

    // Condition (3): every cell is a face of a piece, and pieces meet in
    // common faces. Together with face closure this gives the pairwise
    // condition for all cells.
    let d = parent.dim();
    let pieces: Vec<Polytope> = cell_set.iter().filter(|c| c.dim() == d).cloned().collect();
    if pieces.is_empty() {
        return Err(axiom(1, "no full-dimensional cells"));
    }
    for cell in &cell_set {
        let covered = pieces.iter().any(|p| {
            cache
                .get(p)
                .iter()
                .any(|f| &f.polytope == cell)
        });
        if !covered {
            return Err(axiom(
                3,
                format!("cell is not a face of any piece: {cell:?}"),
            ));
        }
    }
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            if let Some(common) = intersect_cached(&pieces[i], &pieces[j], &mut cache) {
                let ok = cache.get(&pieces[i]).iter().any(|f| f.polytope == common)
                    && cache.get(&pieces[j]).iter().any(|f| f.polytope == common);
                if !ok {
                    return Err(axiom(
                        3,
                        format!(
                            "pieces intersect in a non-face: {:?} ∩ {:?}",
                            pieces[i], pieces[j]
                        ),
                    ));
                }
            }
        }
    }

    // Volume part of condition (1): pieces tile the parent.
    let chart = Chart::new(parent.vertices());
    let parent_vol = scaled_volume(parent, &chart, d, &mut cache);
    let mut pieces_vol = Rat::from_integer(0.into());
    for p in &pieces {
        pieces_vol += scaled_volume(p, &chart, d, &mut cache);
    }
    if pieces_vol != parent_vol {
        return Err(axiom(
            1,
            format!("union of cells is not the parent (piece volume {pieces_vol} vs {parent_vol})"),
        ));
    }

    let parent_facets: Vec<Face> = cache
        .get(parent)
        .iter()
        .filter(|f| d - f.dim() == 1)
        .cloned()
        .collect();
    let cells: Vec<Polytope> = cell_set.into_iter().collect();
    let boundary_cells: Vec<Polytope> = cells
        .iter()
        .filter(|c| !is_in_boundary(c, &parent_facets))
        .cloned()
        .collect();
    Ok(Partition {
        parent: parent.clone(),
        cells,
        boundary_cells,
    })
}

/// The partition of `P` induced by a hyperplane arrangement: iterated
/// cutting collects the closures of the connected components of
/// `P \ union(H_j)` as pieces, then all faces of all pieces are adjoined.
pub fn partition_from_hyperplanes(p: &Polytope, planes: &[Hyperplane]) -> Result<Partition> {
    let mut pieces = vec![p.clone()];
    for h in planes {
        let mut next = Vec::new();
        for piece in pieces {
            let CutResult { upper, lower, .. } = cut(&piece, h);
            match (upper, lower) {
                (Some(u), Some(l)) if u.dim() == piece.dim() && l.dim() == piece.dim() => {
                    next.push(u);
                    next.push(l);
                }
                _ => next.push(piece),
            }
        }
        pieces = next;
    }
    let mut cells: BTreeSet<Polytope> = BTreeSet::new();
    for piece in &pieces {
        for f in face_lattice(piece) {
            cells.insert(f.polytope);
        }
    }
    let cells: Vec<Polytope> = cells.into_iter().collect();
    validate_partition(p, &cells)
}

/// The pieces of the shadow partition of a grounded polytope, together with
/// the top face each one comes from: `P(F) = Sh(F) + (h(F) - h(P)) * (*Z)`.
pub fn shadow_pieces(p: &Polytope) -> Result<Vec<(Face, Polytope)>> {
    if !ops::is_grounded(p)? {
        return Err(Error::NotGrounded);
    }
    let n = p.ambient_dim();
    let hp = height(p);
    let down = ops::reflect(&z_segment(n));
    let mut out = Vec::new();
    for f in top_faces(p)? {
        let k = height(&f.polytope) - &hp;
        debug_assert!(!k.is_negative());
        debug_assert!(k.is_integer());
        let piece = minkowski_sum(
            &ops::shadow(&f.polytope),
            &scale(&down, &k.to_integer()),
        )?;
        out.push((f, piece));
    }
    Ok(out)
}

/// The shadow partition of a grounded integral polytope: the union of the
/// face lattices of the pieces `P(F)` over all top faces `F`.
pub fn shadow_partition(p: &Polytope) -> Result<Partition> {
    if !p.is_integral() {
        return Err(Error::NotIntegral);
    }
    let pieces = shadow_pieces(p)?;
    let mut cells: BTreeSet<Polytope> = BTreeSet::new();
    for (_, piece) in &pieces {
        for f in face_lattice(piece) {
            cells.insert(f.polytope);
        }
    }
    let cells: Vec<Polytope> = cells.into_iter().collect();
    validate_partition(p, &cells)
}

/// The partition relation: `P = sum over Q in P^∂ of (-1)^codim(Q) * Q`
/// holds in the polytope group. Returns whether the exact identity holds;
/// `false` indicates an implementation bug since this is a theorem.
pub fn check_partition_relation(part: &Partition) -> bool {
    let d = part.parent.dim();
    let mut sum = FormalSum::new(part.parent.ambient_dim());
    for q in &part.boundary_cells {
        let sign = if (d - q.dim()) % 2 == 0 { 1 } else { -1 };
        sum.add_term(q.clone(), sign);
    }
    let collapsed = sum.collapse(Flavor::Absolute);
    let target = GroupElement::from_polytope(part.parent.clone(), Flavor::Absolute);
    collapsed.eq(&target).unwrap()
}

fn euler_terms(p: &Polytope, sign: i64, sum: &mut FormalSum) {
    for f in face_lattice(p) {
        let s = if f.dim() % 2 == 0 { sign } else { -sign };
        sum.add_term(f.polytope, s);
    }
}

/// The partition relation for face Euler characteristics:
/// `chi_F(P) = sum over Q in P^∂ of (-1)^codim(Q) * chi_F(Q)`.
pub fn check_face_euler_partition_relation(part: &Partition) -> bool {
    let d = part.parent.dim();
    let mut rhs = FormalSum::new(part.parent.ambient_dim());
    for q in &part.boundary_cells {
        let sign = if (d - q.dim()) % 2 == 0 { 1 } else { -1 };
        euler_terms(q, sign, &mut rhs);
    }
    let lhs = face_euler_characteristic(&part.parent);
    rhs.collapse(Flavor::Absolute).eq(&lhs).unwrap()
}

/// The two-half special case: `chi_F(P) + chi_F(P ∩ H) = chi_F(P_1) +
/// chi_F(P_2)` for the halves of `P` along `H`; absent parts contribute
/// zero.
pub fn euler_cut_identity(p: &Polytope, h: &Hyperplane) -> bool {
    let r = cut(p, h);
    let ambient = p.ambient_dim();
    let mut lhs = FormalSum::new(ambient);
    euler_terms(p, 1, &mut lhs);
    if let Some(section) = &r.section {
        euler_terms(section, 1, &mut lhs);
    }
    let mut rhs = FormalSum::new(ambient);
    if let Some(upper) = &r.upper {
        euler_terms(upper, 1, &mut rhs);
    }
    if let Some(lower) = &r.lower {
        euler_terms(lower, 1, &mut rhs);
    }
    lhs.collapse(Flavor::Absolute)
        .eq(&rhs.collapse(Flavor::Absolute))
        .unwrap()
}

/// Group the boundary cells of a partition by codimension; used by callers
/// that need the signed sum piecewise.
pub fn boundary_by_codim(part: &Partition) -> BTreeMap<usize, Vec<Polytope>> {
    let d = part.parent.dim();
    let mut out: BTreeMap<usize, Vec<Polytope>> = BTreeMap::new();
    for c in &part.boundary_cells {
        out.entry(d - c.dim()).or_default().push(c.clone());
    }
    out
}

/// Convenience: compression to a given height used together with the
/// partition machinery.
pub fn ground_of(p: &Polytope) -> Result<Polytope> {
    let h = height(p);
    if !ops::is_grounded(p)? {
        return Err(Error::NotGrounded);
    }
    Ok(compress(p, &h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int_vec, rat};

    fn square() -> Polytope {
        Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn faces_of(p: &Polytope) -> Vec<Polytope> {
        face_lattice(p).into_iter().map(|f| f.polytope).collect()
    }

    #[test]
    fn trivial_partition_is_valid() {
        let sq = square();
        let part = validate_partition(&sq, &faces_of(&sq)).unwrap();
        assert_eq!(part.pieces().len(), 1);
        assert!(check_partition_relation(&part));
        assert!(check_face_euler_partition_relation(&part));
        // The boundary filter keeps exactly the parent for the trivial
        // partition.
        assert_eq!(part.boundary_cells(), &[sq.clone()]);
    }

    #[test]
    fn two_triangles_share_diagonal() {
        let sq = square();
        let t1 = Polytope::from_ints(&[&[0, 0], &[1, 0], &[1, 1]]);
        let t2 = Polytope::from_ints(&[&[0, 0], &[0, 1], &[1, 1]]);
        let mut cells: BTreeSet<Polytope> = BTreeSet::new();
        cells.extend(faces_of(&t1));
        cells.extend(faces_of(&t2));
        let cells: Vec<Polytope> = cells.into_iter().collect();
        let part = validate_partition(&sq, &cells).unwrap();
        assert_eq!(part.pieces().len(), 2);
        // T1 + T2 - diagonal = square in the group.
        assert!(check_partition_relation(&part));
        assert!(check_face_euler_partition_relation(&part));
    }

    #[test]
    fn overlap_is_condition_three() {
        let sq = square();
        let t1 = Polytope::from_ints(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        let t2 = Polytope::from_ints(&[&[0, 0], &[1, 0], &[1, 1]]);
        let mut cells: BTreeSet<Polytope> = BTreeSet::new();
        cells.extend(faces_of(&t1));
        cells.extend(faces_of(&t2));
        let cells: Vec<Polytope> = cells.into_iter().collect();
        let err = validate_partition(&sq, &cells).unwrap_err();
        assert!(matches!(err, Error::PartitionAxiom { condition: 3, .. }), "{err}");
    }

    #[test]
    fn missing_face_is_condition_two() {
        let sq = square();
        let mut cells = faces_of(&sq);
        cells.retain(|c| c != &Polytope::from_ints(&[&[0, 0], &[1, 0]]));
        let err = validate_partition(&sq, &cells).unwrap_err();
        assert!(matches!(err, Error::PartitionAxiom { condition: 2, .. }));
    }

    #[test]
    fn gap_is_condition_one() {
        let sq = square();
        let t1 = Polytope::from_ints(&[&[0, 0], &[1, 0], &[1, 1]]);
        let cells = faces_of(&t1);
        let err = validate_partition(&sq, &cells).unwrap_err();
        assert!(matches!(err, Error::PartitionAxiom { condition: 1, .. }));
    }

    #[test]
    fn outside_cell_is_condition_one() {
        let sq = square();
        let mut cells = faces_of(&sq);
        cells.extend(faces_of(&Polytope::from_ints(&[&[5, 5]])));
        let err = validate_partition(&sq, &cells).unwrap_err();
        assert!(matches!(err, Error::PartitionAxiom { condition: 1, .. }));
    }

    #[test]
    fn hyperplane_partition_diagonal() {
        let sq = square();
        let diag = Hyperplane::new(int_vec(&[1, -1]), rat(0)).unwrap();
        let part = partition_from_hyperplanes(&sq, &[diag]).unwrap();
        assert_eq!(part.pieces().len(), 2);
        assert!(check_partition_relation(&part));
    }

    #[test]
    fn hyperplane_partition_trivial_when_missing() {
        let sq = square();
        let far = Hyperplane::new(int_vec(&[1, 0]), rat(10)).unwrap();
        let part = partition_from_hyperplanes(&sq, &[far]).unwrap();
        assert_eq!(part.pieces().len(), 1);
        assert_eq!(part.cells().len(), 9);
    }

    #[test]
    fn hyperplane_partition_two_cuts() {
        let sq = square();
        let d1 = Hyperplane::new(int_vec(&[1, -1]), rat(0)).unwrap();
        let d2 = Hyperplane::new(int_vec(&[1, 1]), rat(1)).unwrap();
        let part = partition_from_hyperplanes(&sq, &[d1, d2]).unwrap();
        assert_eq!(part.pieces().len(), 4);
        assert!(check_partition_relation(&part));
        assert!(check_face_euler_partition_relation(&part));
    }

    #[test]
    fn shadow_partition_square() {
        let sq = square();
        let part = shadow_partition(&sq).unwrap();
        assert_eq!(part.pieces().len(), 1);
        assert_eq!(part.pieces()[0], &sq);
        assert!(check_partition_relation(&part));
    }

    #[test]
    fn shadow_partition_pentagon() {
        let p = Polytope::from_ints(&[&[0, 0], &[4, 0], &[0, 2], &[2, 3], &[4, 2]]);
        assert!(ops::is_grounded(&p).unwrap());
        let part = shadow_partition(&p).unwrap();
        // One piece per top edge.
        assert_eq!(part.pieces().len(), 2);
        for c in part.cells() {
            assert!(c.is_integral());
        }
        assert!(check_partition_relation(&part));
    }

    #[test]
    fn shadow_partition_triangle() {
        let t = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]);
        let part = shadow_partition(&t).unwrap();
        assert_eq!(part.pieces(), vec![&t]);
        assert!(matches!(
            shadow_partition(&ops::reflect(&t)),
            Err(Error::NotGrounded)
        ));
    }

    #[test]
    fn euler_cut_identity_examples() {
        let sq = square();
        let diag = Hyperplane::new(int_vec(&[1, -1]), rat(0)).unwrap();
        assert!(euler_cut_identity(&sq, &diag));
        let missing = Hyperplane::new(int_vec(&[1, 0]), rat(7)).unwrap();
        assert!(euler_cut_identity(&sq, &missing));
        let supporting = Hyperplane::new(int_vec(&[0, 1]), rat(1)).unwrap();
        assert!(euler_cut_identity(&sq, &supporting));
    }
}
