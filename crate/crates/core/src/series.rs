//! Poincaré series: closed forms built from factors `(1 - t^a)/(1 - t^b)`,
//! their truncated expansions, and series read off a presented ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::algebra::QuotientRing;
use crate::error::{Error, Result};

/// Coefficients `a_0..=a_N` of a power series truncated at degree `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    /// `coeffs` must be nonempty; its length fixes the cutoff.
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least a_0");
        TruncatedSeries { coeffs }
    }

    pub fn zero(cutoff: u32) -> Self {
        TruncatedSeries {
            coeffs: vec![0; cutoff as usize + 1],
        }
    }

    pub fn from_dims(dims: &[usize]) -> Self {
        TruncatedSeries::new(dims.iter().map(|&d| d as i64).collect())
    }

    pub fn cutoff(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: u32) -> i64 {
        self.coeffs.get(d as usize).copied().unwrap_or(0)
    }

    pub fn truncate(&self, cutoff: u32) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(cutoff as usize + 1, 0);
        TruncatedSeries { coeffs }
    }

    /// Product, truncated at the smaller cutoff.
    pub fn convolve(&self, other: &TruncatedSeries) -> Self {
        let n = self.cutoff().min(other.cutoff()) as usize;
        let mut out = vec![0i64; n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j]
                    .checked_add(a.checked_mul(*b).expect("series coefficient overflow"))
                    .expect("series coefficient overflow");
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// True iff `a_d == a_{top-d}` for every `d <= top`. Requires
    /// `top <= cutoff`; otherwise the answer is `false`.
    pub fn palindrome_check(&self, top: u32) -> bool {
        if top > self.cutoff() {
            return false;
        }
        (0..=top).all(|d| self.coeff(d) == self.coeff(top - d))
    }

    /// Nonnegative coefficients and `a_0 = 1`.
    pub fn is_poincare_like(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One summand `t^shift * prod(1 - t^a) / prod(1 - t^b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub shift: u32,
    pub numer: Vec<u32>,
    pub denom: Vec<u32>,
}

impl Term {
    /// Exponents of cyclotomic polynomials `Phi_d` in the factorization.
    /// `1 - t^a = -prod_{d | a} Phi_d(t)`; the overall sign is fixed by the
    /// exponent of `Phi_1`, so the profile determines the term.
    fn cyclotomic_profile(&self) -> BTreeMap<u32, i64> {
        let mut profile: BTreeMap<u32, i64> = BTreeMap::new();
        let mut add = |a: u32, sign: i64| {
            for d in 1..=a {
                if a.is_multiple_of(d) {
                    *profile.entry(d).or_insert(0) += sign;
                }
            }
        };
        for &a in &self.numer {
            add(a, 1);
        }
        for &b in &self.denom {
            add(b, -1);
        }
        profile.retain(|_, e| *e != 0);
        profile
    }

    fn is_polynomial(&self) -> bool {
        self.cyclotomic_profile().values().all(|&e| e >= 0)
    }

    fn expand(&self, cutoff: u32) -> Vec<i64> {
        let n = cutoff as usize;
        let mut c = vec![0i64; n + 1];
        if self.shift as usize > n {
            return c;
        }
        c[self.shift as usize] = 1;
        for &a in &self.numer {
            let a = a as usize;
            for i in (a..=n).rev() {
                c[i] = c[i].checked_sub(c[i - a]).expect("series coefficient overflow");
            }
        }
        for &b in &self.denom {
            let b = b as usize;
            for i in b..=n {
                c[i] = c[i].checked_add(c[i - b]).expect("series coefficient overflow");
            }
        }
        c
    }

    /// Canonical form: shift plus cyclotomic exponents.
    fn normalized(&self) -> (u32, Vec<(u32, i64)>) {
        (self.shift, self.cyclotomic_profile().into_iter().collect())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.shift > 0 {
            parts.push(format!("t^{}", self.shift));
        }
        let factors = |v: &[u32]| -> String { v.iter().map(|a| format!("(1-t^{})", a)).collect::<Vec<_>>().join("") };
        if !self.numer.is_empty() || !self.denom.is_empty() {
            let num = if self.numer.is_empty() {
                "1".to_string()
            } else {
                factors(&self.numer)
            };
            if self.denom.is_empty() {
                parts.push(num);
            } else {
                parts.push(format!("{}/({})", num, factors(&self.denom)));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A sum of [`Term`]s, kept symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormSeries {
    terms: Vec<Term>,
}

impl ClosedFormSeries {
    pub fn zero() -> Self {
        ClosedFormSeries { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(shift: u32) -> Self {
        ClosedFormSeries {
            terms: vec![Term {
                shift,
                numer: Vec::new(),
                denom: Vec::new(),
            }],
        }
    }

    /// `prod(1 - t^a) / prod(1 - t^b)`; all exponents must be positive.
    pub fn ratio(numer: Vec<u32>, denom: Vec<u32>) -> Self {
        assert!(
            numer.iter().chain(&denom).all(|&a| a > 0),
            "factor exponents must be positive"
        );
        ClosedFormSeries {
            terms: vec![Term { shift: 0, numer, denom }],
        }
    }

    /// `1 + t^a`, stored as `(1 - t^{2a}) / (1 - t^a)`.
    pub fn one_plus(a: u32) -> Self {
        Self::ratio(vec![2 * a], vec![a])
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn shifted(&self, s: u32) -> Self {
        ClosedFormSeries {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    shift: t.shift + s,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// Formal substitution `t -> t^2`.
    pub fn substitute_t_squared(&self) -> Self {
        ClosedFormSeries {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    shift: 2 * t.shift,
                    numer: t.numer.iter().map(|a| 2 * a).collect(),
                    denom: t.denom.iter().map(|b| 2 * b).collect(),
                })
                .collect(),
        }
    }

    pub fn truncate(&self, cutoff: u32) -> TruncatedSeries {
        let mut out = vec![0i64; cutoff as usize + 1];
        for t in &self.terms {
            for (o, c) in out.iter_mut().zip(t.expand(cutoff)) {
                *o = o.checked_add(c).expect("series coefficient overflow");
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Degree of the expansion when every term is a polynomial.
    pub fn polynomial_degree(&self) -> Option<u32> {
        if !self.terms.iter().all(Term::is_polynomial) {
            return None;
        }
        let degree = |t: &Term| -> u32 { t.shift + t.numer.iter().sum::<u32>() - t.denom.iter().sum::<u32>() };
        Some(self.terms.iter().map(degree).max().unwrap_or(0))
    }

    /// Equality after reducing every term to its cyclotomic factorization and
    /// comparing the multisets of terms.
    pub fn symbolic_eq(&self, other: &ClosedFormSeries) -> bool {
        let canon = |s: &ClosedFormSeries| {
            let mut v: Vec<_> = s.terms.iter().map(Term::normalized).collect();
            v.sort();
            v
        };
        canon(self) == canon(other)
    }
}

impl Add for &ClosedFormSeries {
    type Output = ClosedFormSeries;
    fn add(self, rhs: &ClosedFormSeries) -> ClosedFormSeries {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        ClosedFormSeries { terms }
    }
}

impl Mul for &ClosedFormSeries {
    type Output = ClosedFormSeries;
    fn mul(self, rhs: &ClosedFormSeries) -> ClosedFormSeries {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                let mut numer = a.numer.clone();
                numer.extend(&b.numer);
                let mut denom = a.denom.clone();
                denom.extend(&b.denom);
                terms.push(Term {
                    shift: a.shift + b.shift,
                    numer,
                    denom,
                });
            }
        }
        ClosedFormSeries { terms }
    }
}

impl fmt::Display for ClosedFormSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `P_{G_k(C^n)}(t) = prod_{i<=n}(1-t^{2i}) / (prod_{i<=k}(1-t^{2i}) prod_{i<=n-k}(1-t^{2i}))`.
pub fn complex_grassmannian_series(k: u32, n: u32) -> Result<ClosedFormSeries> {
    if k > n {
        return Err(Error::InvalidParameters(format!("G_{}(C^{}) needs k <= n", k, n)));
    }
    let numer: Vec<u32> = (1..=n).map(|i| 2 * i).collect();
    let denom: Vec<u32> = (1..=k).chain(1..=n - k).map(|i| 2 * i).collect();
    Ok(ClosedFormSeries::ratio(numer, denom))
}

pub fn substitute_t_squared(s: &ClosedFormSeries) -> ClosedFormSeries {
    s.substitute_t_squared()
}

/// Which oriented Grassmannian: parity of the subspace and of the ambient
/// space. `EvenEven` is `G~_{2k}(R^{2n})`, `EvenOdd` is `G~_{2k}(R^{2n+1})`,
/// `OddOdd` is `G~_{2k+1}(R^{2n+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrientedKind {
    EvenEven,
    EvenOdd,
    OddOdd,
}

impl OrientedKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrientedKind::EvenEven => "even-even",
            OrientedKind::EvenOdd => "even-odd",
            OrientedKind::OddOdd => "odd-odd",
        }
    }

    pub(crate) fn check(self, k: u32, n: u32) -> Result<()> {
        let ok = match self {
            OrientedKind::EvenEven => k >= 1 && k < n,
            OrientedKind::EvenOdd => k >= 1 && k <= n,
            OrientedKind::OddOdd => k < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!(
                "oriented {} Grassmannian with k={}, n={} is out of range",
                self.as_str(),
                k,
                n
            )))
        }
    }
}

impl FromStr for OrientedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even-even" => Ok(OrientedKind::EvenEven),
            "even-odd" => Ok(OrientedKind::EvenOdd),
            "odd-odd" => Ok(OrientedKind::OddOdd),
            other => Err(Error::InvalidParameters(format!("invalid oriented kind `{}`", other))),
        }
    }
}

/// Poincaré series of the even-dimensional oriented Grassmannians.
pub fn oriented_series(kind: OrientedKind, k: u32, n: u32) -> Result<ClosedFormSeries> {
    kind.check(k, n)?;
    let base = substitute_t_squared(&complex_grassmannian_series(k, n)?);
    Ok(match kind {
        OrientedKind::EvenEven => {
            let e_part = substitute_t_squared(&complex_grassmannian_series(k, n - 1)?).shifted(2 * k);
            let eb_part = substitute_t_squared(&complex_grassmannian_series(k - 1, n - 1)?).shifted(2 * (n - k));
            &(&base + &e_part) + &eb_part
        }
        OrientedKind::EvenOdd => leray_hirsch_product(&ClosedFormSeries::one_plus(2 * k), &base),
        OrientedKind::OddOdd => leray_hirsch_product(&ClosedFormSeries::one_plus(2 * (n - k)), &base),
    })
}

/// `P_E = P_B * P_F` for a Leray–Hirsch extension.
pub fn leray_hirsch_product(base: &ClosedFormSeries, fibre: &ClosedFormSeries) -> ClosedFormSeries {
    base * fibre
}

pub fn truncate(s: &ClosedFormSeries, cutoff: u32) -> TruncatedSeries {
    s.truncate(cutoff)
}

/// `a_d = dim` of the degree-`d` part of the ring, for `d <= cutoff`.
pub fn series_from_ring(ring: &QuotientRing, cutoff: u32) -> Result<TruncatedSeries> {
    Ok(TruncatedSeries::from_dims(&ring.dims(cutoff)?))
}

pub fn palindrome_check(s: &TruncatedSeries, top: u32) -> bool {
    s.palindrome_check(top)
}
