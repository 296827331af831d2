//! SVG output for planar polytopes. Coordinates are scaled by the common
//! denominator so the emitted numbers are exact integers.

use intpoly::geometry::Polytope;
use intpoly::Int;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

pub fn plot2d(p: &Polytope) -> Result<String, String> {
    if p.ambient_dim() != 2 {
        return Err(format!(
            "plot2d requires ambient dimension 2, got {}",
            p.ambient_dim()
        ));
    }
    let mut denom = Int::one();
    for v in p.vertices() {
        for c in &v.coords {
            denom = denom.lcm(c.denom());
        }
    }
    let scaled: Vec<(i64, i64)> = p
        .vertices()
        .iter()
        .map(|v| {
            let x = (&v.coords[0] * intpoly::Rat::from_integer(denom.clone())).to_integer();
            let y = (&v.coords[1] * intpoly::Rat::from_integer(denom.clone())).to_integer();
            (
                x.to_i64().expect("desk-scale coordinates"),
                y.to_i64().expect("desk-scale coordinates"),
            )
        })
        .collect();
    let unit = denom.to_i64().unwrap_or(1).max(1);
    let min_x = scaled.iter().map(|p| p.0).min().unwrap() - unit;
    let max_x = scaled.iter().map(|p| p.0).max().unwrap() + unit;
    let min_y = scaled.iter().map(|p| p.1).min().unwrap() - unit;
    let max_y = scaled.iter().map(|p| p.1).max().unwrap() + unit;
    // Flip y so the lattice orientation matches the usual picture.
    let flip = |y: i64| max_y + min_y - y;
    let width = max_x - min_x;
    let height = max_y - min_y;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{min_x} {min_y} {width} {height}\">\n"
    ));
    let radius = (unit as f64 / 8.0).max(0.5);
    match p.dim() {
        0 => {}
        1 => {
            let (a, b) = (scaled[0], scaled[1]);
            svg.push_str(&format!(
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"{}\"/>\n",
                a.0,
                flip(a.1),
                b.0,
                flip(b.1),
                radius
            ));
        }
        _ => {
            let order = cycle_order(p);
            let pts: Vec<String> = order
                .iter()
                .map(|&i| format!("{},{}", scaled[i].0, flip(scaled[i].1)))
                .collect();
            svg.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"#9ecae1\" stroke=\"black\" stroke-width=\"{}\"/>\n",
                pts.join(" "),
                radius
            ));
        }
    }
    for &(x, y) in &scaled {
        svg.push_str(&format!(
            "  <circle cx=\"{x}\" cy=\"{}\" r=\"{radius}\" fill=\"black\"/>\n",
            flip(y)
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Walk the 1-skeleton of a polygon into a closed cycle.
fn cycle_order(p: &Polytope) -> Vec<usize> {
    let edges = p.edges();
    let n = p.vertices().len();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in edges {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    while order.len() < n {
        let current = *order.last().unwrap();
        let next = adjacency[current]
            .iter()
            .copied()
            .find(|&v| v != prev && !order.contains(&v))
            .expect("polygon cycle is connected");
        order.push(next);
        prev = current;
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_svg_is_exact() {
        let p = Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let svg = plot2d(&p).unwrap();
        assert!(svg.contains("<polygon"));
        assert!(svg.contains("viewBox=\"-1 -1 3 3\""));
    }

    #[test]
    fn rational_vertices_scale_to_integers() {
        let p = Polytope::hull(vec![
            intpoly::geometry::Point::new(vec![
                intpoly::scalar::ratio(1, 2),
                intpoly::scalar::rat(0),
            ]),
            intpoly::geometry::Point::new(vec![intpoly::scalar::rat(2), intpoly::scalar::rat(1)]),
        ])
        .unwrap();
        let svg = plot2d(&p).unwrap();
        // 1/2 scaled by the common denominator 2 becomes the integer 1.
        assert!(svg.contains("x1=\"1\""), "{svg}");
    }

    #[test]
    fn wrong_dimension_rejected() {
        let p = Polytope::from_ints(&[&[0, 0, 0], &[1, 0, 0]]);
        assert!(plot2d(&p).is_err());
    }
}
