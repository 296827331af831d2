//! Exact convex hulls of integer point sets in rank 2 and 3 using i128
//! orientation predicates: a monotone chain in the plane and gift wrapping
//! with coplanar-facet handling in space.
//!
//! These back the fast paths of [`crate::geometry::extreme_points`]; the
//! simplex-based reduction remains as the general route and as an
//! independent cross-check in tests.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub(crate) type P2 = [i64; 2];
pub(crate) type P3 = [i64; 3];

fn cross2(o: P2, a: P2, b: P2) -> i128 {
    let ax = (a[0] - o[0]) as i128;
    let ay = (a[1] - o[1]) as i128;
    let bx = (b[0] - o[0]) as i128;
    let by = (b[1] - o[1]) as i128;
    ax * by - ay * bx
}

/// Strict counterclockwise hull cycle of distinct planar points, as indices.
pub(crate) fn chain2(points: &[P2]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by_key(|&i| points[i]);
    if idx.len() <= 2 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && cross2(
                points[lower[lower.len() - 2]],
                points[lower[lower.len() - 1]],
                points[i],
            ) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && cross2(
                points[upper[upper.len() - 2]],
                points[upper[upper.len() - 1]],
                points[i],
            ) <= 0
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

fn sub(a: P3, b: P3) -> [i128; 3] {
    [
        (a[0] - b[0]) as i128,
        (a[1] - b[1]) as i128,
        (a[2] - b[2]) as i128,
    ]
}

fn cross3(u: [i128; 3], v: [i128; 3]) -> [i128; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn dot3(u: [i128; 3], v: [i128; 3]) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// Sign of det(b - a, c - a, d - a).
fn orient(a: P3, b: P3, c: P3, d: P3) -> i128 {
    dot3(cross3(sub(b, a), sub(c, a)), sub(d, a))
}

fn collinear(a: P3, b: P3, q: P3) -> bool {
    cross3(sub(b, a), sub(q, a)) == [0, 0, 0]
}

pub(crate) struct Hull3 {
    /// Indices of the extreme points.
    pub vertices: Vec<usize>,
    /// Facet cycles (counterclockwise seen from outside), as indices.
    pub facets: Vec<Vec<usize>>,
}

/// Project coplanar points along the largest normal coordinate and return
/// their hull cycle, counterclockwise as seen from the `normal` side.
fn coplanar_cycle(pts: &[P3], members: &[usize], normal: [i128; 3]) -> Vec<usize> {
    let axis = (0..3).max_by_key(|&i| normal[i].abs()).unwrap();
    let (u, v) = match axis {
        0 => (1, 2),
        1 => (2, 0),
        _ => (0, 1),
    };
    let shadow: Vec<P2> = members
        .iter()
        .map(|&i| [pts[i][u], pts[i][v]])
        .collect();
    let mut cycle: Vec<usize> = chain2(&shadow).into_iter().map(|j| members[j]).collect();
    // chain2 is counterclockwise in (u, v), i.e. seen from the positive
    // axis; flip when the outward normal points the other way.
    if normal[axis] < 0 {
        cycle.reverse();
    }
    cycle
}

/// Build a facet from a supporting plane through `a`, `b` and `apex`:
/// collect the contact set and orient its cycle outward.
fn facet_from_plane(pts: &[P3], a: usize, b: usize, apex: usize) -> (Vec<usize>, [i128; 3]) {
    let mut n = cross3(sub(pts[b], pts[a]), sub(pts[apex], pts[a]));
    // Point the normal away from the cloud.
    let side = pts
        .iter()
        .map(|&q| dot3(n, sub(q, pts[a])))
        .find(|s| *s != 0)
        .unwrap_or(0);
    if side > 0 {
        n = [-n[0], -n[1], -n[2]];
    }
    let members: Vec<usize> = (0..pts.len())
        .filter(|&i| dot3(n, sub(pts[i], pts[a])) == 0)
        .collect();
    (coplanar_cycle(pts, &members, n), n)
}

/// Wrap around the hull edge `[a, b]`: sweep to the extreme apex. The edge
/// must lie on the hull; `apex0` seeds the sweep and must not be collinear
/// with it. When `apex0` lies on an already-known facet, the edge is flipped
/// so the sweep rotates away from that facet.
fn wrap_edge(pts: &[P3], a: usize, b: usize, apex0: usize) -> usize {
    let s0 = pts
        .iter()
        .map(|&qp| orient(pts[a], pts[b], pts[apex0], qp))
        .find(|s| *s != 0)
        .expect("rank-3 input has points off any plane");
    let (a, b) = if s0 > 0 { (b, a) } else { (a, b) };
    let mut apex = apex0;
    for (q, &qp) in pts.iter().enumerate() {
        if q == a || q == b || q == apex || collinear(pts[a], pts[b], qp) {
            continue;
        }
        if orient(pts[a], pts[b], pts[apex], qp) < 0 {
            apex = q;
        }
    }
    apex
}

/// Initial facet: a 2D hull edge of the projection along the first axis
/// spans a supporting plane; its contact set is a face of dimension 1 or 2.
fn initial_facet(pts: &[P3]) -> (Vec<usize>, [i128; 3]) {
    let mut shadow: Vec<P2> = pts.iter().map(|p| [p[1], p[2]]).collect();
    shadow.sort();
    shadow.dedup();
    // A rank-3 set projects to a rank-2 shadow.
    let cycle = chain2(&shadow);
    assert!(cycle.len() >= 3, "projection of a rank-3 set spans the plane");
    let (e0, e1) = (shadow[cycle[0]], shadow[cycle[1]]);
    // Outward 2D normal of the counterclockwise edge (e0, e1).
    let m = [(e1[1] - e0[1]) as i128, -((e1[0] - e0[0]) as i128)];
    let n = [0i128, m[0], m[1]];
    let vals: Vec<i128> = pts.iter().map(|&p| dot3(n, sub(p, [0, 0, 0]))).collect();
    let max = *vals.iter().max().unwrap();
    let contact: Vec<usize> = (0..pts.len()).filter(|&i| vals[i] == max).collect();
    let first = contact[0];
    if let Some(&off) = contact[1..]
        .iter()
        .find(|&&i| !collinear(pts[first], pts[contact[1]], pts[i]))
    {
        // 2-dimensional contact set: it is already a facet.
        let _ = off;
        return facet_from_plane(pts, first, contact[1], off);
    }
    // Contact set is a hull edge (possibly with interior points): take its
    // endpoints and rotate onto an adjacent facet.
    let far = *contact
        .iter()
        .max_by_key(|&&i| {
            let d = sub(pts[i], pts[first]);
            dot3(d, d)
        })
        .unwrap();
    let apex0 = (0..pts.len())
        .find(|&i| !collinear(pts[first], pts[far], pts[i]))
        .expect("rank-3 input has a point off any line");
    let apex = wrap_edge(pts, first, far, apex0);
    facet_from_plane(pts, first, far, apex)
}

/// Gift-wrapping hull of a rank-3 set of distinct integer points.
pub(crate) fn hull3(pts: &[P3]) -> Hull3 {
    let (first_cycle, _) = initial_facet(pts);
    let mut facets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut edge_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut queue: VecDeque<(usize, usize, usize)> = VecDeque::new();

    let mut push_facet = |cycle: Vec<usize>,
                          facets: &mut BTreeMap<Vec<usize>, Vec<usize>>,
                          edge_count: &mut BTreeMap<(usize, usize), usize>,
                          queue: &mut VecDeque<(usize, usize, usize)>| {
        let mut key = cycle.clone();
        key.sort_unstable();
        if facets.contains_key(&key) {
            return;
        }
        for w in 0..cycle.len() {
            let a = cycle[w];
            let b = cycle[(w + 1) % cycle.len()];
            let e = (a.min(b), a.max(b));
            *edge_count.entry(e).or_insert(0) += 1;
            // Any cycle vertex off the edge seeds the sweep for the
            // neighboring facet.
            let apex = cycle
                .iter()
                .copied()
                .find(|&c| !collinear(pts[a], pts[b], pts[c]))
                .expect("facet cycles span two dimensions");
            queue.push_back((a, b, apex));
        }
        facets.insert(key, cycle);
    };

    push_facet(first_cycle, &mut facets, &mut edge_count, &mut queue);
    while let Some((a, b, apex0)) = queue.pop_front() {
        let e = (a.min(b), a.max(b));
        if edge_count.get(&e).copied().unwrap_or(0) >= 2 {
            continue;
        }
        let apex = wrap_edge(pts, a, b, apex0);
        let (cycle, _) = facet_from_plane(pts, a, b, apex);
        push_facet(cycle, &mut facets, &mut edge_count, &mut queue);
    }

    let mut vertices: BTreeSet<usize> = BTreeSet::new();
    for cycle in facets.values() {
        vertices.extend(cycle.iter().copied());
    }
    Hull3 {
        vertices: vertices.into_iter().collect(),
        facets: facets.into_values().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hull_sizes(pts: &[P3]) -> (usize, usize) {
        let h = hull3(pts);
        (h.vertices.len(), h.facets.len())
    }

    #[test]
    fn simplex_and_cube() {
        let simplex = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]];
        assert_eq!(hull_sizes(&simplex), (4, 4));

        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push([x, y, z]);
                }
            }
        }
        assert_eq!(hull_sizes(&cube), (8, 6));
    }

    #[test]
    fn interior_and_face_points_drop() {
        let mut pts = Vec::new();
        for x in 0..3i64 {
            for y in 0..3i64 {
                for z in 0..3i64 {
                    pts.push([x, y, z]);
                }
            }
        }
        let h = hull3(&pts);
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        for &v in &h.vertices {
            for c in pts[v] {
                assert!(c == 0 || c == 2);
            }
        }
    }

    #[test]
    fn octahedron() {
        let pts = [
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
        ];
        assert_eq!(hull_sizes(&pts), (6, 8));
    }

    #[test]
    fn skewed_prism_with_collinear_edge_points() {
        let pts = [
            [0, 0, 0],
            [2, 0, 0],
            [1, 0, 0], // interior of a bottom edge
            [0, 2, 0],
            [0, 0, 3],
            [2, 0, 3],
            [0, 2, 3],
            [1, 1, 1], // interior
        ];
        let h = hull3(&pts);
        assert_eq!(h.vertices.len(), 6);
        assert!(!h.vertices.contains(&2));
        assert!(!h.vertices.contains(&7));
    }

    #[test]
    fn chain_drops_collinear() {
        let pts: Vec<P2> = vec![[0, 0], [2, 0], [1, 0], [1, 1]];
        let cycle = chain2(&pts);
        assert_eq!(cycle.len(), 3);
        assert!(!cycle.contains(&2));
    }
}
