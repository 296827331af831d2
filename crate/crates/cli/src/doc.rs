//! Structured-text polytope and element documents.
//!
//! Coordinates are JSON integers or exact-fraction strings like `"3/2"`;
//! floating point numbers are rejected. Emission is canonical: sorted
//! vertex lists, integers as JSON numbers when they fit, fractions as
//! `"p/q"` strings.

use intpoly::geometry::{extreme_points, Point, Polytope};
use intpoly::group::{Flavor, GroupElement};
use intpoly::scalar::{format_rat, parse_rat};
use intpoly::Rat;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// A parse error with a positional diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError(pub String);

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DocError {}

fn err<T>(msg: impl Into<String>) -> Result<T, DocError> {
    Err(DocError(msg.into()))
}

#[derive(Debug, Clone)]
pub struct PolytopeDocument {
    pub name: Option<String>,
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<Rat>>,
}

fn parse_coord(v: &Value, vertex: usize, coord: usize) -> Result<Rat, DocError> {
    let place = format!("vertex {vertex}, coordinate {coord}");
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                err(format!(
                    "{place}: expected integer or \"p/q\" string, found {n}"
                ))
            }
        }
        Value::String(s) => match parse_rat(s) {
            Some(r) => Ok(r),
            None => err(format!("{place}: malformed rational {s:?}")),
        },
        other => err(format!(
            "{place}: expected integer or \"p/q\" string, found {other}"
        )),
    }
}

fn parse_vertices(v: &Value, ambient: usize) -> Result<Vec<Vec<Rat>>, DocError> {
    let Some(rows) = v.as_array() else {
        return err("\"vertices\" must be an array");
    };
    if rows.is_empty() {
        return err("empty vertex list");
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let Some(cols) = row.as_array() else {
            return err(format!("vertex {i}: expected a coordinate array"));
        };
        if cols.len() != ambient {
            return err(format!(
                "dimension mismatch: vertex {i} has {} coordinates, expected {ambient}",
                cols.len()
            ));
        }
        let mut coords = Vec::with_capacity(cols.len());
        for (j, c) in cols.iter().enumerate() {
            coords.push(parse_coord(c, i, j)?);
        }
        out.push(coords);
    }
    Ok(out)
}

impl PolytopeDocument {
    pub fn parse(v: &Value) -> Result<Self, DocError> {
        let Some(obj) = v.as_object() else {
            return err("expected a JSON object");
        };
        let name = obj
            .get("name")
            .and_then(Value::as_str)
            .map(str::to_string);
        let Some(ambient) = obj.get("ambient_dim").and_then(Value::as_u64) else {
            return err("missing or invalid \"ambient_dim\"");
        };
        let ambient = ambient as usize;
        let Some(vertices) = obj.get("vertices") else {
            return err("missing \"vertices\"");
        };
        let vertices = parse_vertices(vertices, ambient)?;
        Ok(PolytopeDocument {
            name,
            ambient_dim: ambient,
            vertices,
        })
    }

    pub fn parse_str(s: &str) -> Result<Self, DocError> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| DocError(format!("invalid JSON: {e}")))?;
        Self::parse(&v)
    }

    /// Canonicalize into a polytope (duplicate and interior points drop out).
    pub fn to_polytope(&self) -> Result<Polytope, DocError> {
        let points: Vec<Point> = self
            .vertices
            .iter()
            .map(|c| Point::new(c.clone()))
            .collect();
        extreme_points(&points).map_err(|e| DocError(e.to_string()))
    }

    pub fn from_polytope(p: &Polytope, name: Option<String>) -> Self {
        PolytopeDocument {
            name,
            ambient_dim: p.ambient_dim(),
            vertices: p.vertices().iter().map(|v| v.coords.clone()).collect(),
        }
    }

    pub fn emit(&self) -> Value {
        let mut obj = Map::new();
        if let Some(name) = &self.name {
            obj.insert("name".into(), json!(name));
        }
        obj.insert("ambient_dim".into(), json!(self.ambient_dim));
        obj.insert(
            "vertices".into(),
            Value::Array(
                self.vertices
                    .iter()
                    .map(|row| Value::Array(row.iter().map(coord_value).collect()))
                    .collect(),
            ),
        );
        Value::Object(obj)
    }
}

pub fn coord_value(r: &Rat) -> Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return json!(i);
        }
    }
    json!(format_rat(r))
}

pub fn polytope_value(p: &Polytope) -> Value {
    PolytopeDocument::from_polytope(p, None).emit()
}

/// Either a bare polytope document (negative part defaults to the origin)
/// or an explicit `positive` / `negative` pair.
pub fn parse_element(v: &Value, quotient: bool) -> Result<GroupElement, DocError> {
    let Some(obj) = v.as_object() else {
        return err("expected a JSON object");
    };
    let flavor = if quotient {
        Flavor::Translation
    } else {
        Flavor::Absolute
    };
    if obj.contains_key("vertices") {
        let p = PolytopeDocument::parse(v)?.to_polytope()?;
        return Ok(GroupElement::from_polytope(p, flavor));
    }
    let Some(ambient) = obj.get("ambient_dim").and_then(Value::as_u64) else {
        return err("missing or invalid \"ambient_dim\"");
    };
    let ambient = ambient as usize;
    let part = |key: &str| -> Result<Polytope, DocError> {
        let Some(val) = obj.get(key) else {
            return err(format!("missing \"{key}\""));
        };
        let rows = parse_vertices(val, ambient)?;
        let points: Vec<Point> = rows.into_iter().map(Point::new).collect();
        extreme_points(&points).map_err(|e| DocError(format!("{key}: {e}")))
    };
    let positive = part("positive")?;
    let negative = part("negative")?;
    GroupElement::new(positive, negative, flavor).map_err(|e| DocError(e.to_string()))
}

pub fn parse_element_str(s: &str, quotient: bool) -> Result<GroupElement, DocError> {
    let v: Value = serde_json::from_str(s).map_err(|e| DocError(format!("invalid JSON: {e}")))?;
    parse_element(&v, quotient)
}

pub fn element_value(x: &GroupElement) -> Value {
    let mut obj = Map::new();
    obj.insert("ambient_dim".into(), json!(x.ambient_dim()));
    obj.insert(
        "positive".into(),
        polytope_value(x.positive())["vertices"].clone(),
    );
    obj.insert(
        "negative".into(),
        polytope_value(x.negative())["vertices"].clone(),
    );
    obj.insert(
        "quotient".into(),
        json!(matches!(x.flavor(), Flavor::Translation)),
    );
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_emit_round_trip() {
        let s = r#"{"ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1]]}"#;
        let doc = PolytopeDocument::parse_str(s).unwrap();
        let p = doc.to_polytope().unwrap();
        assert_eq!(p, Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]]));
        let emitted = PolytopeDocument::from_polytope(&p, None).emit();
        let reparsed = PolytopeDocument::parse(&emitted)
            .unwrap()
            .to_polytope()
            .unwrap();
        assert_eq!(reparsed, p);
    }

    #[test]
    fn rational_entries_flagged_non_integral() {
        let s = r#"{"ambient_dim": 1, "vertices": [["1/2"],[2]]}"#;
        let p = PolytopeDocument::parse_str(s).unwrap().to_polytope().unwrap();
        assert!(!p.is_integral());
    }

    #[test]
    fn canonicalizes_midpoint_away() {
        let s = r#"{"ambient_dim": 1, "vertices": [[0],[2],[1]]}"#;
        let p = PolytopeDocument::parse_str(s).unwrap().to_polytope().unwrap();
        assert_eq!(p, Polytope::from_ints(&[&[0], &[2]]));
    }

    #[test]
    fn positional_diagnostics() {
        let s = r#"{"ambient_dim": 2, "vertices": [[0,0],[1,0.5]]}"#;
        let e = PolytopeDocument::parse_str(s).unwrap_err();
        assert!(e.0.contains("vertex 1, coordinate 1"), "{e}");

        let s = r#"{"ambient_dim": 2, "vertices": [[0,0],[1]]}"#;
        let e = PolytopeDocument::parse_str(s).unwrap_err();
        assert!(e.0.contains("vertex 1 has 1 coordinates"), "{e}");

        let s = r#"{"ambient_dim": 2, "vertices": []}"#;
        let e = PolytopeDocument::parse_str(s).unwrap_err();
        assert!(e.0.contains("empty vertex list"), "{e}");
    }

    #[test]
    fn element_documents() {
        let s = r#"{"ambient_dim": 1, "positive": [[0],[1]], "negative": [[1]]}"#;
        let x = parse_element_str(s, false).unwrap();
        assert_eq!(x.positive(), &Polytope::from_ints(&[&[0], &[1]]));
        let v = element_value(&x);
        let back = parse_element(&v, false).unwrap();
        assert!(back.eq(&x).unwrap());

        // A bare polytope doc coerces with origin negative part.
        let s = r#"{"ambient_dim": 2, "vertices": [[3,4]]}"#;
        let x = parse_element_str(s, false).unwrap();
        assert!(x.negative().is_point());
    }
}
