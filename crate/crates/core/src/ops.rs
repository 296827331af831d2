//! The geometric toolbox on polytopes: Minkowski sums, reflection, face
//! maps, heights, compressions, shadows, cuts, vertical stretching,
//! grounded/pillar predicates, grounding, pillar completion and vertical
//! gluing.

use crate::geometry::{extreme_points, face_lattice, Face, Hyperplane, Point, Polytope};
use crate::scalar::dot_int_rat;
use crate::{Error, Int, Rat, Result};
use num_traits::{Signed, Zero};

/// Minkowski sum `{p + q | p in P, q in Q}`.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: q.ambient_dim(),
        });
    }
    let mut candidates = Vec::with_capacity(p.vertices().len() * q.vertices().len());
    for a in p.vertices() {
        for b in q.vertices() {
            candidates.push(a.add(b));
        }
    }
    extreme_points(&candidates)
}

/// `k`-fold Minkowski sum of a polytope with itself, i.e. the dilation
/// `k * P`. `k = 0` gives the group identity, a single point at the origin.
pub fn scale(p: &Polytope, k: &Int) -> Polytope {
    assert!(!k.is_negative(), "scale factor must be nonnegative");
    if k.is_zero() {
        return Polytope::point(Point::origin(p.ambient_dim()));
    }
    let factor = Rat::from_integer(k.clone());
    let vertices: Vec<Point> = p
        .vertices()
        .iter()
        .map(|v| Point::new(v.coords.iter().map(|c| c * &factor).collect()))
        .collect();
    Polytope::from_extreme(p.ambient_dim(), vertices)
}

/// Reflection about the origin, `*P = {-p | p in P}`.
pub fn reflect(p: &Polytope) -> Polytope {
    let vertices: Vec<Point> = p.vertices().iter().map(Point::neg).collect();
    Polytope::from_extreme(p.ambient_dim(), vertices)
}

/// The face in `phi`-direction: the argmax set of `<phi, .>` over `P`.
/// The zero direction returns `P` itself.
pub fn face_in_direction(p: &Polytope, phi: &[Int]) -> Polytope {
    assert_eq!(phi.len(), p.ambient_dim());
    let vals: Vec<Rat> = p
        .vertices()
        .iter()
        .map(|v| dot_int_rat(phi, &v.coords))
        .collect();
    let max = vals.iter().max().unwrap().clone();
    let verts: Vec<Point> = p
        .vertices()
        .iter()
        .zip(&vals)
        .filter(|(_, val)| **val == max)
        .map(|(v, _)| v.clone())
        .collect();
    Polytope::from_extreme(p.ambient_dim(), verts)
}

/// Classification of a codimension-1 face of a full-dimensional polytope by
/// the sign of `<normal, z>` for the outward normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceClass {
    Bottom,
    Vertical,
    Top,
}

impl std::fmt::Display for FaceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FaceClass::Bottom => write!(f, "bottom"),
            FaceClass::Vertical => write!(f, "vertical"),
            FaceClass::Top => write!(f, "top"),
        }
    }
}

pub fn classify_codim1_face(p: &Polytope, face: &Face) -> Result<FaceClass> {
    if p.dim() != p.ambient_dim() {
        return Err(Error::NotFullDimensional);
    }
    if p.dim() - face.dim() != 1 {
        return Err(Error::CodimNotOne);
    }
    let last = face
        .witness_direction
        .last()
        .expect("nonzero ambient dimension");
    Ok(if last.is_negative() {
        FaceClass::Bottom
    } else if last.is_zero() {
        FaceClass::Vertical
    } else {
        FaceClass::Top
    })
}

/// Codimension-1 faces of a full-dimensional polytope with their classes.
pub fn classified_facets(p: &Polytope) -> Result<Vec<(Face, FaceClass)>> {
    if p.dim() != p.ambient_dim() {
        return Err(Error::NotFullDimensional);
    }
    let mut out = Vec::new();
    for f in face_lattice(p) {
        if p.dim() - f.dim() == 1 {
            let class = classify_codim1_face(p, &f)?;
            out.push((f, class));
        }
    }
    Ok(out)
}

/// Minimum last coordinate over `P`.
pub fn height(p: &Polytope) -> Rat {
    let n = p.ambient_dim();
    p.vertices()
        .iter()
        .map(|v| v.coords[n - 1].clone())
        .min()
        .unwrap()
}

/// Maximum last coordinate over `P`.
pub fn upper_height(p: &Polytope) -> Rat {
    let n = p.ambient_dim();
    p.vertices()
        .iter()
        .map(|v| v.coords[n - 1].clone())
        .max()
        .unwrap()
}

/// Replace the last coordinate of every point by the constant `h`.
pub fn compress(p: &Polytope, h: &Rat) -> Polytope {
    let n = p.ambient_dim();
    let images: Vec<Point> = p
        .vertices()
        .iter()
        .map(|v| {
            let mut c = v.coords.clone();
            c[n - 1] = h.clone();
            Point::new(c)
        })
        .collect();
    extreme_points(&images).expect("nonempty image")
}

/// `Sh(P) = hull(P ∪ c_{h(P)}(P))`.
pub fn shadow(p: &Polytope) -> Polytope {
    let h = height(p);
    let compressed = compress(p, &h);
    let mut pts = p.vertices().to_vec();
    pts.extend_from_slice(compressed.vertices());
    extreme_points(&pts).expect("nonempty")
}

/// `Sh+(P) = hull(P ∪ c_{h+(P)}(P))`.
pub fn upper_shadow(p: &Polytope) -> Polytope {
    let h = upper_height(p);
    let compressed = compress(p, &h);
    let mut pts = p.vertices().to_vec();
    pts.extend_from_slice(compressed.vertices());
    extreme_points(&pts).expect("nonempty")
}

/// The two halves and the section of a cut along a hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    /// `{p in P | <a, p> >= c}`, absent when empty.
    pub upper: Option<Polytope>,
    /// `{p in P | <a, p> <= c}`, absent when empty.
    pub lower: Option<Polytope>,
    /// `P ∩ H`, absent when empty.
    pub section: Option<Polytope>,
}

/// Cut `P` along `H`. Half vertices are the vertices on the closed side
/// together with the intersections of the 1-skeleton with `H`; the same
/// points on `H` make up the section.
pub fn cut(p: &Polytope, h: &Hyperplane) -> CutResult {
    let c = &h.offset;
    let vals: Vec<Rat> = p.vertices().iter().map(|v| h.eval(v)).collect();
    let mut crossings: Vec<Point> = Vec::new();
    for (i, j) in p.edges() {
        let (vi, vj) = (&vals[i], &vals[j]);
        if (vi < c && vj > c) || (vi > c && vj < c) {
            let t = (c - vi) / (vj - vi);
            let a = &p.vertices()[i];
            let b = &p.vertices()[j];
            let pt = Point::new(
                a.coords
                    .iter()
                    .zip(&b.coords)
                    .map(|(x, y)| x + &t * (y - x))
                    .collect(),
            );
            crossings.push(pt);
        }
    }
    let side = |keep: &dyn Fn(&Rat) -> bool| -> Option<Polytope> {
        let mut pts: Vec<Point> = p
            .vertices()
            .iter()
            .zip(&vals)
            .filter(|(_, v)| keep(v))
            .map(|(p, _)| p.clone())
            .collect();
        pts.extend(crossings.iter().cloned());
        if pts.is_empty() {
            None
        } else {
            Some(extreme_points(&pts).unwrap())
        }
    };
    let upper = if vals.iter().any(|v| v >= c) {
        side(&|v: &Rat| v >= c)
    } else {
        None
    };
    let lower = if vals.iter().any(|v| v <= c) {
        side(&|v: &Rat| v <= c)
    } else {
        None
    };
    let section = {
        let mut pts: Vec<Point> = p
            .vertices()
            .iter()
            .zip(&vals)
            .filter(|(_, v)| *v == c)
            .map(|(p, _)| p.clone())
            .collect();
        pts.extend(crossings.iter().cloned());
        if pts.is_empty() {
            None
        } else {
            Some(extreme_points(&pts).unwrap())
        }
    };
    CutResult {
        upper,
        lower,
        section,
    }
}

/// The segment `Z = hull{0, z}` with `z = (0, ..., 0, 1)`.
pub fn z_segment(ambient: usize) -> Polytope {
    let mut top = vec![Rat::zero(); ambient];
    top[ambient - 1] = Rat::from_integer(1.into());
    Polytope::from_extreme(
        ambient,
        vec![Point::origin(ambient), Point::new(top)],
    )
}

/// `k * (Z + *Z) = hull{-kz, kz}`.
fn symmetric_z(ambient: usize, k: &Int) -> Polytope {
    if k.is_zero() {
        return Polytope::point(Point::origin(ambient));
    }
    let mut up = vec![Rat::zero(); ambient];
    up[ambient - 1] = Rat::from_integer(k.clone());
    let down: Vec<Rat> = up.iter().map(|x| -x).collect();
    Polytope::from_extreme(ambient, vec![Point::new(up), Point::new(down)])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchResult {
    pub k: Int,
    /// `P + k * (Z + *Z)`.
    pub stretched: Polytope,
}

/// Vertical stretching towards the flat hyperplane at height `h`:
/// `k = max |p_n - h|` over the vertices, `Q = P + k(Z + *Z)`. The section
/// of `Q` at height `h` then equals the compression `c_h(Q)` and both
/// halves are grounded after reflecting the lower one.
pub fn vertical_stretch(p: &Polytope, h: &Int) -> Result<StretchResult> {
    if !p.is_integral() {
        return Err(Error::NotIntegral);
    }
    let n = p.ambient_dim();
    let hr = Rat::from_integer(h.clone());
    let k: Rat = p
        .vertices()
        .iter()
        .map(|v| (&v.coords[n - 1] - &hr).abs())
        .max()
        .unwrap();
    debug_assert!(k.is_integer());
    let k = k.to_integer();
    let stretched = minkowski_sum(p, &symmetric_z(n, &k))?;
    Ok(StretchResult { k, stretched })
}

fn bottom_faces(p: &Polytope) -> Result<Vec<Face>> {
    Ok(classified_facets(p)?
        .into_iter()
        .filter(|(_, c)| *c == FaceClass::Bottom)
        .map(|(f, _)| f)
        .collect())
}

fn top_faces_impl(p: &Polytope) -> Result<Vec<Face>> {
    Ok(classified_facets(p)?
        .into_iter()
        .filter(|(_, c)| *c == FaceClass::Top)
        .map(|(f, _)| f)
        .collect())
}

/// Top codimension-1 faces of a full-dimensional polytope.
pub fn top_faces(p: &Polytope) -> Result<Vec<Face>> {
    top_faces_impl(p)
}

/// A full-dimensional polytope is grounded when it has exactly one bottom
/// face and that face is flat. The flat bottom face is the ground.
pub fn is_grounded(p: &Polytope) -> Result<bool> {
    let bottoms = bottom_faces(p)?;
    Ok(bottoms.len() == 1 && bottoms[0].polytope.is_flat())
}

/// The image of the grounding map `(x_1, ..., x_n) -> (x_1, ..., h)`, which
/// equals the ground.
pub fn grounding_map(p: &Polytope) -> Result<Polytope> {
    let bottoms = bottom_faces(p)?;
    if bottoms.len() != 1 || !bottoms[0].polytope.is_flat() {
        return Err(Error::NotGrounded);
    }
    let ground = &bottoms[0].polytope;
    let image = compress(p, &height(p));
    assert_eq!(
        &image, ground,
        "grounding map image differs from the ground (bug)"
    );
    Ok(image)
}

/// Pillar recognition: returns the flat polytope `Q = c_h(P)` and
/// `k = h+(P) - h(P)` when `P = Q + k * Z`, `None` otherwise.
pub fn is_pillar(p: &Polytope) -> Result<Option<(Polytope, Int)>> {
    if p.dim() != p.ambient_dim() {
        return Err(Error::NotFullDimensional);
    }
    let h = height(p);
    let k = upper_height(p) - &h;
    if !k.is_integer() || k.is_zero() {
        return Ok(None);
    }
    let k = k.to_integer();
    let base = compress(p, &h);
    let pillar = minkowski_sum(&base, &scale(&z_segment(p.ambient_dim()), &k))?;
    Ok(if &pillar == p { Some((base, k)) } else { None })
}

/// Almost-pillar: a unique bottom face and a unique top face.
pub fn is_almost_pillar(p: &Polytope) -> Result<bool> {
    let facets = classified_facets(p)?;
    let bottoms = facets.iter().filter(|(_, c)| *c == FaceClass::Bottom).count();
    let tops = facets.iter().filter(|(_, c)| *c == FaceClass::Top).count();
    Ok(bottoms == 1 && tops == 1)
}

/// Complete a polytope whose reflection is a grounded almost-pillar to a
/// pillar: returns `(Q, F, S)` with `F` the unique bottom face of `P`,
/// `S = Sh(F)`, `Q = S ∪ P` a pillar, satisfying `P + S = Q + F`. When `P`
/// is itself a pillar the degenerate triple `(P, F, F)` is returned.
pub fn pillar_complete(p: &Polytope) -> Result<(Polytope, Polytope, Polytope)> {
    let reflected = reflect(p);
    if !(is_grounded(&reflected)? && is_almost_pillar(&reflected)?) {
        return Err(Error::NotReflectedGroundedAlmostPillar);
    }
    let bottoms = bottom_faces(p)?;
    assert_eq!(bottoms.len(), 1, "unique bottom face is implied by the precondition");
    let f = bottoms[0].polytope.clone();
    if is_pillar(p)?.is_some() {
        return Ok((p.clone(), f.clone(), f));
    }
    let s = shadow(&f);
    let mut pts = p.vertices().to_vec();
    pts.extend_from_slice(s.vertices());
    let q = extreme_points(&pts)?;
    // P + S = Q + F is the cutting relation for Q cut along F.
    let lhs = minkowski_sum(p, &s)?;
    let rhs = minkowski_sum(&q, &f)?;
    assert_eq!(lhs, rhs, "pillar completion identity failed (bug)");
    assert!(
        is_pillar(&q)?.is_some(),
        "pillar completion did not produce a pillar (bug)"
    );
    Ok((q, f, s))
}

fn flat_height(h: &Hyperplane) -> Result<Rat> {
    if !h.is_flat() {
        return Err(Error::GluingAssumptionViolated);
    }
    let n = h.normal.len();
    Ok(&h.offset / Rat::from_integer(h.normal[n - 1].clone()))
}

/// Glue the upper half of `P` to the lower half of `Q` along the flat
/// hyperplane `H`, under the gluing assumption
/// `P ∩ H = c_h(P) = c_h(Q) = Q ∩ H`.
pub fn vertical_glue(p: &Polytope, q: &Polytope, h: &Hyperplane) -> Result<Polytope> {
    let hval = flat_height(h)?;
    let flat = Hyperplane::flat(p.ambient_dim(), hval.clone());
    let cp = compress(p, &hval);
    let cq = compress(q, &hval);
    let sp = cut(p, &flat).section;
    let sq = cut(q, &flat).section;
    let ok = match (&sp, &sq) {
        (Some(sp), Some(sq)) => *sp == cp && cp == cq && *sq == cq,
        _ => false,
    };
    if !ok {
        return Err(Error::GluingAssumptionViolated);
    }
    let upper = cut(p, &flat).upper.expect("section nonempty implies upper half");
    let lower = cut(q, &flat).lower.expect("section nonempty implies lower half");
    let mut pts = upper.vertices().to_vec();
    pts.extend_from_slice(lower.vertices());
    extreme_points(&pts)
}
