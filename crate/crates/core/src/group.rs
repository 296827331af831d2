//! The polytope group `P(H)` and its translation quotient `P_T(H)`:
//! formal differences of polytopes with equality by Minkowski cancellation,
//! the reflection involution, the face Euler characteristic, seminorms and
//! the symmetrization map.

use crate::geometry::{face_lattice, Point, Polytope};
use crate::ops::{minkowski_sum, reflect, scale};
use crate::scalar::dot_int_rat;
use crate::{Error, Int, Rat, Result};
use std::collections::BTreeMap;

/// Whether an element lives in `P(H)` or in the translation quotient
/// `P_T(H)` (translates identified).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `P(H)`: translation-sensitive.
    Absolute,
    /// `P_T(H)`: polytopes up to translation.
    Translation,
}

/// A formal difference `positive - negative` of polytopes.
///
/// No reduced representative is maintained; equality is always the exact
/// cancellation test `A - B = C - D  iff  A + D = C + B`.
#[derive(Debug, Clone)]
pub struct GroupElement {
    flavor: Flavor,
    positive: Polytope,
    negative: Polytope,
}

impl GroupElement {
    pub fn new(positive: Polytope, negative: Polytope, flavor: Flavor) -> Result<Self> {
        if positive.ambient_dim() != negative.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: positive.ambient_dim(),
                got: negative.ambient_dim(),
            });
        }
        Ok(GroupElement {
            flavor,
            positive,
            negative,
        })
    }

    /// The class of a single polytope.
    pub fn from_polytope(p: Polytope, flavor: Flavor) -> Self {
        let zero = Polytope::point(Point::origin(p.ambient_dim()));
        GroupElement {
            flavor,
            positive: p,
            negative: zero,
        }
    }

    /// The zero element `pt - pt`.
    pub fn zero(ambient: usize, flavor: Flavor) -> Self {
        let pt = Polytope::point(Point::origin(ambient));
        GroupElement {
            flavor,
            positive: pt.clone(),
            negative: pt,
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn ambient_dim(&self) -> usize {
        self.positive.ambient_dim()
    }

    pub fn positive(&self) -> &Polytope {
        &self.positive
    }

    pub fn negative(&self) -> &Polytope {
        &self.negative
    }

    pub fn is_integral(&self) -> bool {
        self.positive.is_integral() && self.negative.is_integral()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                got: other.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Componentwise Minkowski addition `(A,B) + (C,D) = (A+C, B+D)`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(GroupElement {
            flavor: self.flavor,
            positive: minkowski_sum(&self.positive, &other.positive)?,
            negative: minkowski_sum(&self.negative, &other.negative)?,
        })
    }

    /// `-(A, B) = (B, A)`.
    pub fn negate(&self) -> Self {
        GroupElement {
            flavor: self.flavor,
            positive: self.negative.clone(),
            negative: self.positive.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    /// Exact Minkowski cancellation: `A - B = C - D  iff  A + D = C + B`.
    /// In the translation quotient both sides are translation-normalized
    /// first.
    pub fn eq(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        let lhs = minkowski_sum(&self.positive, &other.negative)?;
        let rhs = minkowski_sum(&other.positive, &self.negative)?;
        Ok(match self.flavor {
            Flavor::Absolute => lhs == rhs,
            Flavor::Translation => lhs.normalize_translation() == rhs.normalize_translation(),
        })
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.eq(&GroupElement::zero(self.ambient_dim(), self.flavor))
    }

    /// Reflection about the origin on both parts; an involution, and it
    /// descends to the translation quotient.
    pub fn involution(&self) -> Self {
        GroupElement {
            flavor: self.flavor,
            positive: reflect(&self.positive),
            negative: reflect(&self.negative),
        }
    }

    /// Reinterpret an absolute element in the translation quotient.
    pub fn into_quotient(self) -> Self {
        GroupElement {
            flavor: Flavor::Translation,
            ..self
        }
    }

    /// The translation part of the split `P(H) = H ⊕ P_T(H)`: the offset
    /// `lexmin(positive) - lexmin(negative)`.
    pub fn translation_part(&self) -> Vec<Rat> {
        self.positive
            .lexmin_vertex()
            .coords
            .iter()
            .zip(&self.negative.lexmin_vertex().coords)
            .map(|(a, b)| a - b)
            .collect()
    }

    /// Translation-normalize both parts (lexmin vertex at the origin).
    pub fn normalize_translation(&self) -> Self {
        GroupElement {
            flavor: self.flavor,
            positive: self.positive.normalize_translation(),
            negative: self.negative.normalize_translation(),
        }
    }
}

/// `||phi||_P = max phi - min phi` over `P`.
fn width(p: &Polytope, phi: &[Int]) -> Rat {
    let vals: Vec<Rat> = p
        .vertices()
        .iter()
        .map(|v| dot_int_rat(phi, &v.coords))
        .collect();
    vals.iter().max().unwrap() - vals.iter().min().unwrap()
}

/// The seminorm homomorphism evaluated at `phi`:
/// `||phi||_positive - ||phi||_negative`. Translation-invariant, hence
/// well-defined on the quotient.
pub fn seminorm(x: &GroupElement, phi: &[Int]) -> Rat {
    assert_eq!(phi.len(), x.ambient_dim());
    width(&x.positive, phi) - width(&x.negative, phi)
}

/// The face Euler characteristic `chi_F(P) = sum over faces F of
/// (-1)^dim(F) * F`, collapsed to a group element: even-dimensional faces
/// are Minkowski-summed into the positive part, odd-dimensional ones into
/// the negative part.
pub fn face_euler_characteristic(p: &Polytope) -> GroupElement {
    let mut sum = FormalSum::new(p.ambient_dim());
    for f in face_lattice(p) {
        let sign = if f.dim() % 2 == 0 { 1 } else { -1 };
        sum.add_term(f.polytope, sign);
    }
    sum.collapse(Flavor::Absolute)
}

/// The symmetrization `sym: P_T(H) -> P(H)`, `P - Q -> (P + *P) - (Q + *Q)`.
///
/// Well-definedness is re-verified on construction by recomputing from
/// translated representatives.
pub fn sym(x: &GroupElement) -> Result<GroupElement> {
    if x.flavor != Flavor::Translation {
        return Err(Error::FlavorMismatch);
    }
    let symmetrize = |p: &Polytope| -> Result<Polytope> { minkowski_sum(p, &reflect(p)) };
    let result = GroupElement {
        flavor: Flavor::Absolute,
        positive: symmetrize(&x.positive)?,
        negative: symmetrize(&x.negative)?,
    };
    let shift: Vec<Rat> = (1..=x.ambient_dim())
        .map(|i| Rat::from_integer(Int::from(i as i64)))
        .collect();
    let alt = GroupElement {
        flavor: Flavor::Absolute,
        positive: symmetrize(&x.positive.translate(&shift))?,
        negative: symmetrize(&x.negative)?,
    };
    assert!(
        result.eq(&alt)?,
        "sym depends on the chosen representative (bug)"
    );
    Ok(result)
}

/// A finite integer combination of polytopes, collapsible to a group
/// element by Minkowski-summing the positive and negative parts.
#[derive(Debug, Clone, Default)]
pub struct FormalSum {
    ambient: usize,
    terms: BTreeMap<Polytope, i64>,
}

impl FormalSum {
    pub fn new(ambient: usize) -> Self {
        FormalSum {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, p: Polytope, coeff: i64) {
        assert_eq!(p.ambient_dim(), self.ambient);
        let entry = self.terms.entry(p).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            let zeroed: Vec<Polytope> = self
                .terms
                .iter()
                .filter(|(_, &c)| c == 0)
                .map(|(p, _)| p.clone())
                .collect();
            for p in zeroed {
                self.terms.remove(&p);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Polytope, i64> {
        &self.terms
    }

    /// Collapse in canonical key order: positive coefficients dilate and sum
    /// into the positive part, negative ones into the negative part.
    pub fn collapse(&self, flavor: Flavor) -> GroupElement {
        let mut pos = Polytope::point(Point::origin(self.ambient));
        let mut neg = pos.clone();
        for (p, &coeff) in &self.terms {
            if coeff > 0 {
                pos = minkowski_sum(&pos, &scale(p, &Int::from(coeff))).unwrap();
            } else if coeff < 0 {
                neg = minkowski_sum(&neg, &scale(p, &Int::from(-coeff))).unwrap();
            }
        }
        GroupElement {
            flavor,
            positive: pos,
            negative: neg,
        }
    }
}

/// The rank-one model: `P(Z) ≅ Z^2` via `[m, n] -> (m, n - m)` and
/// `P_T(Z) ≅ Z` via lattice length.
pub mod dim1 {
    use super::*;

    /// Image of an element of `P(Z)` under the isomorphism to `Z^2`.
    pub fn to_pair(x: &GroupElement) -> (Int, Int) {
        assert_eq!(x.ambient_dim(), 1);
        let bounds = |p: &Polytope| -> (Rat, Rat) {
            let lo = p.vertices().first().unwrap().coords[0].clone();
            let hi = p.vertices().last().unwrap().coords[0].clone();
            (lo, hi)
        };
        let (a, b) = bounds(x.positive());
        let (c, d) = bounds(x.negative());
        let m = &a - &c;
        let l = (&b - &a) - (&d - &c);
        (m.to_integer(), l.to_integer())
    }

    /// Preimage of `(k, l)` in `P(Z)`.
    pub fn from_pair(k: &Int, l: &Int, flavor: Flavor) -> GroupElement {
        use num_traits::Signed;
        let interval = |a: &Int, b: &Int| -> Polytope {
            Polytope::hull(vec![
                Point::new(vec![Rat::from_integer(a.clone())]),
                Point::new(vec![Rat::from_integer(b.clone())]),
            ])
            .unwrap()
        };
        let zero = Int::from(0);
        if l.is_negative() {
            GroupElement::new(interval(k, k), interval(&zero, &-l.clone()), flavor).unwrap()
        } else {
            GroupElement::new(interval(k, &(k + l)), interval(&zero, &zero), flavor).unwrap()
        }
    }

    /// The involution in pair coordinates: `*(k, l) = (-l - k, l)`.
    pub fn involution_pair(k: &Int, l: &Int) -> (Int, Int) {
        (-l - k, l.clone())
    }

    /// Image in `P_T(Z) ≅ Z`: the signed lattice length.
    pub fn quotient_value(x: &GroupElement) -> Int {
        let (_, l) = to_pair(x);
        l
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, int_vec, rat};

    fn triangle() -> Polytope {
        Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1]])
    }

    fn square() -> Polytope {
        Polytope::from_ints(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn elem(p: &Polytope) -> GroupElement {
        GroupElement::from_polytope(p.clone(), Flavor::Absolute)
    }

    #[test]
    fn group_axioms() {
        let x = GroupElement::new(triangle(), square(), Flavor::Absolute).unwrap();
        let zero = GroupElement::zero(2, Flavor::Absolute);
        assert!(x.add(&x.negate()).unwrap().eq(&zero).unwrap());
        assert!(x.add(&zero).unwrap().eq(&x).unwrap());
        let y = elem(&square());
        let z = elem(&Polytope::from_ints(&[&[2, 1]]));
        let assoc1 = x.add(&y).unwrap().add(&z).unwrap();
        let assoc2 = x.add(&y.add(&z).unwrap()).unwrap();
        assert!(assoc1.eq(&assoc2).unwrap());
    }

    #[test]
    fn cancellation_eq() {
        let p = triangle();
        let r = Polytope::from_ints(&[&[0, 0], &[2, 1]]);
        let pr = minkowski_sum(&p, &r).unwrap();
        let x = GroupElement::new(pr, r, Flavor::Absolute).unwrap();
        assert!(x.eq(&elem(&p)).unwrap());

        // [0,1] - {1} = [-1, 0] in P(Z).
        let a = GroupElement::new(
            Polytope::from_ints(&[&[0], &[1]]),
            Polytope::from_ints(&[&[1]]),
            Flavor::Absolute,
        )
        .unwrap();
        let b = elem(&Polytope::from_ints(&[&[-1], &[0]]));
        assert!(a.eq(&b).unwrap());

        let ts = GroupElement::new(triangle(), square(), Flavor::Absolute).unwrap();
        let st = GroupElement::new(square(), triangle(), Flavor::Absolute).unwrap();
        assert!(!ts.eq(&st).unwrap());
    }

    #[test]
    fn definition_unfold() {
        let t = elem(&triangle());
        let s = elem(&square());
        let sum = t.add(&s).unwrap();
        assert_eq!(
            sum.positive(),
            &minkowski_sum(&triangle(), &square()).unwrap()
        );
        assert!(sum.negative().is_point());
    }

    #[test]
    fn quotient_eq() {
        let t = GroupElement::from_polytope(triangle(), Flavor::Translation);
        let shifted = GroupElement::from_polytope(
            triangle().translate(&[rat(7), rat(-2)]),
            Flavor::Translation,
        );
        assert!(t.eq(&shifted).unwrap());
        let abs_t = elem(&triangle());
        let abs_shift = elem(&triangle().translate(&[rat(7), rat(-2)]));
        assert!(!abs_t.eq(&abs_shift).unwrap());
        assert!(matches!(t.eq(&abs_t), Err(Error::FlavorMismatch)));
    }

    #[test]
    fn involution_matches_pair_formula() {
        for m in -3i64..=3 {
            for n in m..=3 {
                let x = GroupElement::new(
                    Polytope::from_ints(&[&[m], &[n]]),
                    Polytope::from_ints(&[&[0]]),
                    Flavor::Absolute,
                )
                .unwrap();
                let (k, l) = dim1::to_pair(&x);
                assert_eq!((k.clone(), l.clone()), (int(m), int(n - m)));
                let (ik, il) = dim1::involution_pair(&k, &l);
                let via_pair = dim1::from_pair(&ik, &il, Flavor::Absolute);
                assert!(x.involution().eq(&via_pair).unwrap());
                // Round trip.
                assert!(dim1::from_pair(&k, &l, Flavor::Absolute).eq(&x).unwrap());
            }
        }
    }

    #[test]
    fn involution_identity_on_quotient_rank1() {
        let x = GroupElement::from_polytope(
            Polytope::from_ints(&[&[2], &[5]]),
            Flavor::Translation,
        );
        assert!(x.involution().eq(&x).unwrap());
    }

    #[test]
    fn involution_distributes() {
        let x = GroupElement::new(triangle(), square(), Flavor::Absolute).unwrap();
        let lhs = x.involution();
        let rhs = GroupElement::new(
            reflect(&triangle()),
            reflect(&square()),
            Flavor::Absolute,
        )
        .unwrap();
        assert!(lhs.eq(&rhs).unwrap());
        assert!(x.involution().involution().eq(&x).unwrap());
    }

    #[test]
    fn euler_characteristic_point_and_segment() {
        let pt = Polytope::from_ints(&[&[4]]);
        let chi = face_euler_characteristic(&pt);
        assert!(chi.eq(&elem(&pt)).unwrap());

        // chi_F([0,1]) = {0} + {1} - [0,1]; its negative is *[0,1] = [-1,0].
        let seg = Polytope::from_ints(&[&[0], &[1]]);
        let chi = face_euler_characteristic(&seg);
        let neg_chi = chi.negate();
        let refl = elem(&Polytope::from_ints(&[&[-1], &[0]]));
        assert!(neg_chi.eq(&refl).unwrap());
    }

    #[test]
    fn euler_characteristic_square() {
        let sq = square();
        let chi = face_euler_characteristic(&sq);
        let lhs = elem(&reflect(&sq));
        assert!(lhs.eq(&chi.negate()).unwrap());
    }

    #[test]
    fn seminorm_examples() {
        let x = elem(&square());
        assert_eq!(seminorm(&x, &int_vec(&[1, 2])), rat(3));
        let pt = elem(&Polytope::from_ints(&[&[9, -4]]));
        assert_eq!(seminorm(&pt, &int_vec(&[5, 17])), rat(0));

        let p = triangle();
        let q = Polytope::from_ints(&[&[0, 0], &[2, 1], &[1, 2]]);
        let sum = elem(&minkowski_sum(&p, &q).unwrap());
        for phi in [[1, 0], [0, 1], [2, -3], [1, 1]] {
            let phi = int_vec(&phi);
            assert_eq!(
                seminorm(&sum, &phi),
                seminorm(&elem(&p), &phi) + seminorm(&elem(&q), &phi)
            );
        }
    }

    #[test]
    fn sym_examples() {
        let pt = GroupElement::from_polytope(
            Polytope::from_ints(&[&[3, 1]]),
            Flavor::Translation,
        );
        assert!(sym(&pt).unwrap().is_zero().unwrap());

        let t = GroupElement::from_polytope(triangle(), Flavor::Translation);
        let s = sym(&t).unwrap();
        let hexagon = Polytope::from_ints(&[
            &[1, 0],
            &[0, 1],
            &[-1, 0],
            &[0, -1],
            &[1, -1],
            &[-1, 1],
        ]);
        assert!(s.eq(&elem(&hexagon)).unwrap());
        assert!(s.involution().eq(&s).unwrap());
        assert!(matches!(sym(&elem(&triangle())), Err(Error::FlavorMismatch)));
    }

    #[test]
    fn formal_sum_collapse() {
        let mut sum = FormalSum::new(2);
        sum.add_term(triangle(), 2);
        sum.add_term(square(), -1);
        sum.add_term(triangle(), -2);
        // Triangle terms cancel.
        let x = sum.collapse(Flavor::Absolute);
        assert!(x.eq(&elem(&square()).negate()).unwrap());
    }

    #[test]
    fn split_sequence_section() {
        let x = GroupElement::new(
            triangle().translate(&[rat(3), rat(-1)]),
            square().translate(&[rat(1), rat(4)]),
            Flavor::Absolute,
        )
        .unwrap();
        let v = x.translation_part();
        let normalized = x.normalize_translation();
        let point_part = elem(&Polytope::point(Point::new(v)));
        let recombined = point_part.add(&normalized).unwrap();
        assert!(recombined.eq(&x).unwrap());
    }
}
