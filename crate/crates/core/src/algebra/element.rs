use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::generator::Universe;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Exact rational coefficients.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// A sparse rational combination of monomials over a fixed [`Universe`].
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    universe: Universe,
    terms: BTreeMap<Monomial, Scalar>,
}

impl GradedElement {
    pub fn zero(universe: &Universe) -> Self {
        GradedElement {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(universe: &Universe) -> Self {
        Self::constant(universe, scalar(1))
    }

    pub fn constant(universe: &Universe, c: Scalar) -> Self {
        Self::from_monomial(universe, Monomial::one(universe.len()), c)
    }

    pub fn from_monomial(universe: &Universe, m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        GradedElement {
            universe: universe.clone(),
            terms,
        }
    }

    pub fn generator(universe: &Universe, name: &str) -> Result<Self> {
        let i = universe
            .position(name)
            .ok_or_else(|| Error::UndeclaredGenerator(name.to_string()))?;
        Ok(Self::from_monomial(
            universe,
            Monomial::generator(universe, i),
            scalar(1),
        ))
    }

    pub fn from_terms(universe: &Universe, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut e = GradedElement::zero(universe);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return GradedElement::zero(&self.universe);
        }
        GradedElement {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn check_universe(&self, other: &GradedElement) -> Result<()> {
        if self.universe.same_as(&other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn checked_add(&self, other: &GradedElement) -> Result<Self> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GradedElement) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Graded-commutative product with Koszul signs.
    pub fn checked_mul(&self, other: &GradedElement) -> Result<Self> {
        self.check_universe(other)?;
        let mut out = GradedElement::zero(&self.universe);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = ma.multiply(mb, &self.universe) {
                    let c = ca * cb;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = GradedElement::one(&self.universe);
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Degrees of the monomials present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(Monomial::degree).collect();
        ds.dedup();
        ds
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        match self.degrees().as_slice() {
            [] => Ok(None),
            [d] => Ok(Some(*d)),
            _ => Err(Error::NotHomogeneous),
        }
    }

    pub fn component(&self, degree: u32) -> Self {
        GradedElement {
            universe: self.universe.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Nonzero homogeneous components keyed by degree; they sum back to `self`.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, GradedElement> {
        let mut out: BTreeMap<u32, GradedElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| GradedElement::zero(&self.universe))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Rewrites the element over `target`, matching generators by name.
    pub fn embed(&self, target: &Universe) -> Result<Self> {
        if self.universe.same_as(target) {
            return Ok(self.clone());
        }
        let mut positions = Vec::with_capacity(self.universe.len());
        for g in self.universe.generators() {
            let j = target
                .position(&g.name)
                .ok_or_else(|| Error::UndeclaredGenerator(g.name.clone()))?;
            if target.get(j).degree != g.degree {
                return Err(Error::MapDegreeMismatch {
                    generator: g.name.clone(),
                    expected: g.degree,
                    found: target.get(j).degree,
                });
            }
            positions.push(j);
        }
        Ok(GradedElement {
            universe: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remap(target.len(), &positions, m.degree()), c.clone()))
                .collect(),
        })
    }

    /// Applies the algebra map sending generator `i` to `images[i]`.
    pub fn substitute(&self, target: &Universe, images: &[GradedElement]) -> Result<Self> {
        if images.len() != self.universe.len() {
            return Err(Error::InvalidParameters(format!(
                "expected {} generator images, got {}",
                self.universe.len(),
                images.len()
            )));
        }
        for img in images {
            if !img.universe.same_as(target) {
                return Err(Error::UniverseMismatch);
            }
        }
        let mut out = GradedElement::zero(target);
        for (m, c) in &self.terms {
            let mut term = GradedElement::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = term.checked_mul(&images[i])?;
                }
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }

    /// Largest denominator among the coefficients is one.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Add for &GradedElement {
    type Output = GradedElement;
    /// Panics when the operands live over different universes.
    fn add(self, rhs: &GradedElement) -> GradedElement {
        self.checked_add(rhs).expect("operands over different universes")
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        self.checked_sub(rhs).expect("operands over different universes")
    }
}

impl Mul for &GradedElement {
    type Output = GradedElement;
    fn mul(self, rhs: &GradedElement) -> GradedElement {
        self.checked_mul(rhs).expect("operands over different universes")
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        GradedElement {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn fmt_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_scalar(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.universe))?;
            } else {
                write!(f, "{}*{}", fmt_scalar(&abs), m.display(&self.universe))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator::Generator;

    fn u() -> Universe {
        Universe::new(vec![
            Generator::new("c1", 2),
            Generator::new("cb1", 2),
            Generator::new("r", 5),
            Generator::new("s", 3),
        ])
        .unwrap()
    }

    #[test]
    fn free_expansion() {
        let u = u();
        let one = GradedElement::one(&u);
        let c = &one + &GradedElement::generator(&u, "c1").unwrap();
        let cb = &one + &GradedElement::generator(&u, "cb1").unwrap();
        assert_eq!((&c * &cb).to_string(), "1 + c1 + cb1 + c1*cb1");
    }

    #[test]
    fn odd_square_and_antisymmetry() {
        let u = u();
        let r = GradedElement::generator(&u, "r").unwrap();
        let s = GradedElement::generator(&u, "s").unwrap();
        assert!((&r * &r).is_zero());
        assert!((&(&r * &s) + &(&s * &r)).is_zero());
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let other = Universe::new(vec![Generator::new("x", 2)]).unwrap();
        let a = GradedElement::one(&u());
        let b = GradedElement::one(&other);
        assert_eq!(a.checked_mul(&b), Err(Error::UniverseMismatch));
    }

    #[test]
    fn components_reassemble() {
        let u = u();
        let c1 = GradedElement::generator(&u, "c1").unwrap();
        let e = &(&GradedElement::one(&u) + &c1) + &c1.pow(3);
        let parts = e.homogeneous_components();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![0, 2, 6]);
        let sum = parts.values().fold(GradedElement::zero(&u), |acc, p| &acc + p);
        assert_eq!(sum, e);
    }
}
