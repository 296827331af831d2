//! Small helpers on the scalar types: integer vectors, primitive
//! normalization and rational parsing/formatting.

use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn int_vec(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int_rat(a: &[Int], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

pub fn gcd_vec(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divide by the gcd and make the first nonzero entry positive.
///
/// Returns `None` for the zero vector.
pub fn primitive(v: &[Int]) -> Option<Vec<Int>> {
    let g = gcd_vec(v);
    if g.is_zero() {
        return None;
    }
    let mut out: Vec<Int> = v.iter().map(|x| x / &g).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut out {
                *x = -std::mem::take(x);
            }
        }
    }
    Some(out)
}

/// Clear denominators of a rational vector to a primitive integer vector.
pub fn clear_denominators(v: &[Rat]) -> Option<Vec<Int>> {
    let lcm = v
        .iter()
        .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(&ints)
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn unit_vec(n: usize, i: usize) -> Vec<Int> {
    let mut v = vec![Int::zero(); n];
    v[i] = Int::one();
    v
}

/// Render a rational without a denominator when it is an integer.
pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p"` or `"p/q"` with optional sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_normalizes_sign_and_content() {
        assert_eq!(primitive(&int_vec(&[2, -4])), Some(int_vec(&[1, -2])));
        assert_eq!(primitive(&int_vec(&[-2, 4])), Some(int_vec(&[1, -2])));
        assert_eq!(primitive(&int_vec(&[0, 0])), None);
        assert_eq!(primitive(&int_vec(&[0, -3, 6])), Some(int_vec(&[0, 1, -2])));
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-5", "1/2", "-7/3"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/2").unwrap(), rat(2));
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("a").is_none());
    }
}
