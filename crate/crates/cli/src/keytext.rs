//! Textual form of basis keys and decompositions.
//!
//! Segment keys render as `segment(1,0)`, shadow keys as `shadow[(1,-1)]`
//! with an optional explicit chart: `shadow[(1,0) @ chart[(1,0,0),(0,1,1)]]`.
//! The identity chart is omitted.

use intpoly::basis::{BasisKey, Decomposition};
use intpoly::scalar::unit_vec;
use intpoly::Int;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

fn tuple(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(Int::to_string).collect();
    format!("({})", parts.join(","))
}

fn is_identity_chart(chart: &[Vec<Int>]) -> bool {
    let a = chart.first().map_or(0, Vec::len);
    chart.len() == a && chart.iter().enumerate().all(|(i, v)| v == &unit_vec(a, i))
}

fn render_inner(key: &BasisKey) -> String {
    match key {
        BasisKey::Segment { dir } => tuple(dir),
        BasisKey::Shadow { .. } => render(key),
    }
}

/// Canonical text of a key.
pub fn render(key: &BasisKey) -> String {
    match key {
        BasisKey::Segment { dir } => format!("segment{}", tuple(dir)),
        BasisKey::Shadow { chart, inner } => {
            if is_identity_chart(chart) {
                format!("shadow[{}]", render_inner(inner))
            } else {
                let cols: Vec<String> = chart.iter().map(|v| tuple(v)).collect();
                format!("shadow[{} @ chart[{}]]", render_inner(inner), cols.join(","))
            }
        }
    }
}

struct Cursor<'a> {
    s: &'a str,
    i: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.s[self.i..].starts_with(' ') {
            self.i += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.s[self.i..].starts_with(token) {
            self.i += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), String> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(format!(
                "expected {token:?} at position {} in {:?}",
                self.i, self.s
            ))
        }
    }

    fn parse_int(&mut self) -> Result<Int, String> {
        self.skip_ws();
        let start = self.i;
        let bytes = self.s.as_bytes();
        if self.i < bytes.len() && (bytes[self.i] == b'-' || bytes[self.i] == b'+') {
            self.i += 1;
        }
        while self.i < bytes.len() && bytes[self.i].is_ascii_digit() {
            self.i += 1;
        }
        self.s[start..self.i]
            .parse()
            .map_err(|_| format!("expected integer at position {start} in {:?}", self.s))
    }

    fn parse_tuple(&mut self) -> Result<Vec<Int>, String> {
        self.expect("(")?;
        let mut out = vec![self.parse_int()?];
        while self.eat(",") {
            out.push(self.parse_int()?);
        }
        self.expect(")")?;
        Ok(out)
    }

    fn parse_key(&mut self) -> Result<BasisKey, String> {
        self.skip_ws();
        if self.eat("segment") {
            return Ok(BasisKey::Segment {
                dir: self.parse_tuple()?,
            });
        }
        if self.s[self.i..].starts_with('(') {
            return Ok(BasisKey::Segment {
                dir: self.parse_tuple()?,
            });
        }
        if self.eat("shadow[") {
            let inner = self.parse_key()?;
            let chart = if self.eat("@") {
                self.expect("chart[")?;
                let mut cols = vec![self.parse_tuple()?];
                while self.eat(",") {
                    cols.push(self.parse_tuple()?);
                }
                self.expect("]")?;
                cols
            } else {
                let a = inner.ambient_dim();
                (0..a).map(|i| unit_vec(a, i)).collect()
            };
            self.expect("]")?;
            return Ok(BasisKey::Shadow {
                chart,
                inner: Box::new(inner),
            });
        }
        Err(format!(
            "expected key at position {} in {:?}",
            self.i, self.s
        ))
    }
}

/// Parse the canonical text of a key.
pub fn parse(s: &str) -> Result<BasisKey, String> {
    let mut c = Cursor { s, i: 0 };
    let key = c.parse_key()?;
    c.skip_ws();
    if c.i != s.len() {
        return Err(format!("trailing input at position {} in {s:?}", c.i));
    }
    Ok(key)
}

pub fn decomposition_value(d: &Decomposition) -> Value {
    let mut coeffs = Map::new();
    for (key, c) in d.coefficients() {
        coeffs.insert(render(key), json!(c));
    }
    let mut obj = Map::new();
    obj.insert("ambient_dim".into(), json!(d.ambient_dim()));
    obj.insert("coefficients".into(), Value::Object(coeffs));
    Value::Object(obj)
}

pub fn parse_decomposition(v: &Value) -> Result<Decomposition, String> {
    let obj = v.as_object().ok_or("expected a JSON object")?;
    let ambient = obj
        .get("ambient_dim")
        .and_then(Value::as_u64)
        .ok_or("missing or invalid \"ambient_dim\"")? as usize;
    let coeffs = obj
        .get("coefficients")
        .and_then(Value::as_object)
        .ok_or("missing \"coefficients\" object")?;
    let mut map: BTreeMap<BasisKey, i64> = BTreeMap::new();
    for (text, val) in coeffs {
        let key = parse(text)?;
        let c = val
            .as_i64()
            .ok_or_else(|| format!("coefficient of {text:?} must be an integer"))?;
        map.insert(key, c);
    }
    Ok(Decomposition::from_coeffs(ambient, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use intpoly::scalar::int_vec;

    #[test]
    fn round_trips() {
        let keys = [
            BasisKey::Segment {
                dir: int_vec(&[1, 0]),
            },
            BasisKey::Segment {
                dir: int_vec(&[1, -2, 3]),
            },
            BasisKey::Shadow {
                chart: vec![int_vec(&[1, 0]), int_vec(&[0, 1])],
                inner: Box::new(BasisKey::Segment {
                    dir: int_vec(&[1, -1]),
                }),
            },
            BasisKey::Shadow {
                chart: vec![int_vec(&[1, 0, 0]), int_vec(&[0, 1, 1])],
                inner: Box::new(BasisKey::Segment {
                    dir: int_vec(&[1, 1]),
                }),
            },
        ];
        for key in keys {
            let text = render(&key);
            let back = parse(&text).unwrap();
            assert_eq!(back, key, "{text}");
        }
    }

    #[test]
    fn canonical_forms() {
        let t = BasisKey::Shadow {
            chart: vec![int_vec(&[1, 0]), int_vec(&[0, 1])],
            inner: Box::new(BasisKey::Segment {
                dir: int_vec(&[1, -1]),
            }),
        };
        assert_eq!(render(&t), "shadow[(1,-1)]");
        assert_eq!(
            render(&BasisKey::Segment {
                dir: int_vec(&[1, 0])
            }),
            "segment(1,0)"
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse("segment()").is_err());
        assert!(parse("shadow[(1,0)] trailing").is_err());
        assert!(parse("pillar(1)").is_err());
    }
}
