use std::cmp::Ordering;
use std::fmt;

use super::generator::Universe;

/// A monomial in the generators of a [`Universe`], written in declaration
/// order. Odd generators appear with exponent at most one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial {
            exps: vec![0; len],
            degree: 0,
        }
    }

    /// `None` when the length is wrong or an odd generator is squared.
    pub fn from_exponents(universe: &Universe, exps: Vec<u32>) -> Option<Self> {
        if exps.len() != universe.len() {
            return None;
        }
        let mut degree = 0;
        for (g, &e) in universe.generators().iter().zip(&exps) {
            if g.is_odd() && e > 1 {
                return None;
            }
            degree += g.degree * e;
        }
        Some(Monomial { exps, degree })
    }

    pub fn generator(universe: &Universe, i: usize) -> Self {
        let mut exps = vec![0; universe.len()];
        exps[i] = 1;
        Monomial {
            exps,
            degree: universe.get(i).degree,
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Number of generator factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Graded-commutative product. Returns the product monomial and the
    /// Koszul sign, or `None` when an odd generator would be squared.
    pub fn multiply(&self, other: &Monomial, universe: &Universe) -> Option<(Monomial, bool)> {
        let mut negative = false;
        // odd generators of `self` with index greater than the current one
        let mut odd_after = 0u32;
        let gens = universe.generators();
        for i in (0..self.exps.len()).rev() {
            if gens[i].is_odd() {
                if self.exps[i] + other.exps[i] > 1 {
                    return None;
                }
                if other.exps[i] == 1 && odd_after % 2 == 1 {
                    negative = !negative;
                }
                odd_after += self.exps[i];
            }
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Some((
            Monomial {
                exps,
                degree: self.degree + other.degree,
            },
            negative,
        ))
    }

    /// Embeds into a larger universe by generator name.
    pub(crate) fn remap(&self, target_len: usize, positions: &[usize], degree: u32) -> Monomial {
        let mut exps = vec![0; target_len];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[positions[i]] = e;
        }
        Monomial { exps, degree }
    }

    pub fn display<'a>(&'a self, universe: &'a Universe) -> MonomialDisplay<'a> {
        MonomialDisplay {
            monomial: self,
            universe,
        }
    }
}

/// Degree first, then exponent vectors in descending lexicographic order, so
/// that sorting ascending lists `c1^2` before `c1*c2` before `c2^2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    universe: &'a Universe,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.universe.get(i).name)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `degree`, in ascending [`Monomial`] order.
pub fn monomials_of_degree(universe: &Universe, degree: u32) -> Vec<Monomial> {
    let gens = universe.generators();
    let mut out = Vec::new();
    let mut exps = vec![0u32; gens.len()];
    fn rec(
        i: usize,
        remaining: u32,
        gens: &[super::generator::Generator],
        exps: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == gens.len() {
            if remaining == 0 {
                out.push(exps.clone());
            }
            return;
        }
        let d = gens[i].degree;
        let max = if gens[i].is_odd() {
            (remaining / d).min(1)
        } else {
            remaining / d
        };
        for e in (0..=max).rev() {
            exps[i] = e;
            rec(i + 1, remaining - e * d, gens, exps, out);
        }
        exps[i] = 0;
    }
    let mut raw = Vec::new();
    rec(0, degree, gens, &mut exps, &mut raw);
    out.extend(raw.into_iter().map(|exps| Monomial { exps, degree }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::generator::Generator;

    fn universe() -> Universe {
        Universe::new(vec![
            Generator::new("a", 1),
            Generator::new("b", 3),
            Generator::new("x", 2),
        ])
        .unwrap()
    }

    #[test]
    fn koszul_sign_on_odd_transposition() {
        let u = universe();
        let a = Monomial::generator(&u, 0);
        let b = Monomial::generator(&u, 1);
        let (ab, neg_ab) = a.multiply(&b, &u).unwrap();
        let (ba, neg_ba) = b.multiply(&a, &u).unwrap();
        assert_eq!(ab, ba);
        assert!(!neg_ab);
        assert!(neg_ba);
        assert!(a.multiply(&a, &u).is_none());
    }

    #[test]
    fn enumeration_respects_odd_cap() {
        let u = universe();
        let d4 = monomials_of_degree(&u, 4);
        let shown: Vec<String> = d4.iter().map(|m| m.display(&u).to_string()).collect();
        assert_eq!(shown, vec!["a*b", "x^2"]);
        assert!(monomials_of_degree(&u, 0)[0].is_one());
        assert!(d4.windows(2).all(|w| w[0] < w[1]));
    }
}
