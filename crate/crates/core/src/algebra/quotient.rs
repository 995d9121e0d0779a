use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::element::{GradedElement, Scalar};
use super::elimination::{integer_row, RowReducer};
use super::generator::{Role, Universe};
use super::monomial::{monomials_of_degree, Monomial};
use super::presentation::RingPresentation;
use crate::error::{Error, Result};

/// Which monomials the per-degree elimination prefers to pivot on (and so
/// remove from the surviving basis).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Eliminate monomials with complementary generators first, then those
    /// with Euler generators, then those with more factors, then by
    /// reverse-lexicographic order. Surviving bases match the classical
    /// characteristic bases.
    #[default]
    Characteristic,
    /// Plain graded-lexicographic order, ignoring generator roles.
    GradedLex,
}

/// Reduction data for one degree.
#[derive(Debug)]
struct DegreeTable {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Indices into `monomials` of the surviving basis, ascending.
    basis: Vec<usize>,
    /// For every monomial, its normal form as (basis position, coefficient).
    rewrite: Vec<Vec<(usize, Scalar)>>,
}

/// A presented ring with lazily computed, write-once per-degree normal form
/// tables up to a cutoff degree.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    presentation: RingPresentation,
    cutoff: u32,
    rule: PivotRule,
    tables: Arc<Vec<OnceLock<DegreeTable>>>,
}

/// A coset representative supported on basis monomials only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm(GradedElement);

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_element(&self) -> &GradedElement {
        &self.0
    }

    pub fn into_element(self) -> GradedElement {
        self.0
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.0.coefficient(m)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl QuotientRing {
    pub fn new(presentation: RingPresentation, cutoff: u32) -> Self {
        Self::with_rule(presentation, cutoff, PivotRule::default())
    }

    pub fn with_rule(presentation: RingPresentation, cutoff: u32, rule: PivotRule) -> Self {
        let tables = (0..=cutoff).map(|_| OnceLock::new()).collect();
        QuotientRing {
            presentation,
            cutoff,
            rule,
            tables: Arc::new(tables),
        }
    }

    /// Same presentation with a different cutoff; the cache starts empty.
    pub fn recut(&self, cutoff: u32) -> Self {
        Self::with_rule(self.presentation.clone(), cutoff, self.rule)
    }

    pub fn repivot(&self, rule: PivotRule) -> Self {
        Self::with_rule(self.presentation.clone(), self.cutoff, rule)
    }

    /// Quotient by additional relations.
    pub fn add_relations(&self, extra: impl IntoIterator<Item = GradedElement>) -> Result<Self> {
        let p = self.presentation.with_relations(extra)?;
        Ok(Self::with_rule(p, self.cutoff, self.rule))
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn universe(&self) -> &Universe {
        self.presentation.universe()
    }

    pub fn label(&self) -> &str {
        self.presentation.label()
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn pivot_rule(&self) -> PivotRule {
        self.rule
    }

    pub fn element(&self, expr: &str) -> Result<GradedElement> {
        self.presentation.element(expr)
    }

    fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.cutoff {
            Err(Error::DegreeOverflow {
                degree,
                cutoff: self.cutoff,
            })
        } else {
            Ok(())
        }
    }

    fn table(&self, degree: u32) -> &DegreeTable {
        self.tables[degree as usize].get_or_init(|| self.build_table(degree))
    }

    /// Fills every per-degree table, in parallel.
    pub fn precompute(&self) {
        (0..=self.cutoff).into_par_iter().for_each(|d| {
            self.table(d);
        });
    }

    fn elimination_order(&self, monomials: &[Monomial]) -> Vec<usize> {
        let mut order: Vec<usize> = (0..monomials.len()).collect();
        match self.rule {
            // ascending `Monomial` order already lists lex-largest first
            PivotRule::GradedLex => {}
            PivotRule::Characteristic => {
                let gens = self.universe().generators();
                let weight = |m: &Monomial, role: Role| -> u32 {
                    m.exponents()
                        .iter()
                        .zip(gens)
                        .filter(|(_, g)| g.role == role)
                        .map(|(e, _)| *e)
                        .sum()
                };
                order.sort_by_cached_key(|&i| {
                    let m = &monomials[i];
                    let rev: Vec<u32> = m.exponents().iter().rev().copied().collect();
                    Reverse((
                        weight(m, Role::Complementary),
                        weight(m, Role::Euler),
                        m.factor_count(),
                        rev,
                    ))
                });
            }
        }
        order
    }

    fn build_table(&self, degree: u32) -> DegreeTable {
        let universe = self.universe();
        let monomials = monomials_of_degree(universe, degree);
        let index: HashMap<Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let order = self.elimination_order(&monomials);
        // column of monomial i in the elimination matrix
        let mut column = vec![0usize; monomials.len()];
        for (c, &i) in order.iter().enumerate() {
            column[i] = c;
        }

        let mut reducer = RowReducer::new();
        let mut multipliers: HashMap<u32, Vec<Monomial>> = HashMap::new();
        for rel in self.presentation.relations() {
            let Some(rd) = rel.max_degree() else { continue };
            if rd > degree {
                continue;
            }
            let ms = multipliers
                .entry(degree - rd)
                .or_insert_with(|| monomials_of_degree(universe, degree - rd));
            for m in ms.iter() {
                let mut entries: Vec<(usize, BigRational)> = Vec::with_capacity(rel.len());
                for (rm, c) in rel.terms() {
                    if let Some((prod, negative)) = m.multiply(rm, universe) {
                        let col = column[index[&prod]];
                        entries.push((col, if negative { -c.clone() } else { c.clone() }));
                    }
                }
                // products can collide only through distinct relation terms,
                // which never happens for a fixed multiplier
                reducer.insert(integer_row(entries));
            }
        }

        let reduced = reducer.into_reduced();
        let mut basis: Vec<usize> = (0..monomials.len())
            .filter(|&i| !reduced.contains_key(&column[i]))
            .collect();
        basis.sort_unstable();
        let basis_pos_of_col: HashMap<usize, usize> =
            basis.iter().enumerate().map(|(pos, &i)| (column[i], pos)).collect();

        let mut rewrite: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(monomials.len());
        for &col in column.iter().take(monomials.len()) {
            if let Some(&pos) = basis_pos_of_col.get(&col) {
                rewrite.push(vec![(pos, Scalar::from_integer(BigInt::from(1)))]);
                continue;
            }
            let row = &reduced[&col];
            let lead = &row[0].1;
            let mut nf: Vec<(usize, Scalar)> = row[1..]
                .iter()
                .map(|(c, v)| (basis_pos_of_col[c], -BigRational::new(v.clone(), lead.clone())))
                .collect();
            nf.sort_by_key(|(p, _)| *p);
            rewrite.push(nf);
        }

        DegreeTable {
            monomials,
            index,
            basis,
            rewrite,
        }
    }

    /// Monomials whose residues form a basis of the degree-`d` component.
    pub fn degree_basis(&self, degree: u32) -> Result<Vec<Monomial>> {
        self.check_degree(degree)?;
        let t = self.table(degree);
        Ok(t.basis.iter().map(|&i| t.monomials[i].clone()).collect())
    }

    pub fn dim(&self, degree: u32) -> Result<usize> {
        self.check_degree(degree)?;
        Ok(self.table(degree).basis.len())
    }

    /// Dimensions in degrees `0..=n`.
    pub fn dims(&self, n: u32) -> Result<Vec<usize>> {
        self.check_degree(n)?;
        (0..=n).into_par_iter().map(|d| self.dim(d)).collect()
    }

    pub fn normal_form(&self, a: &GradedElement) -> Result<NormalForm> {
        if !a.universe().same_as(self.universe()) {
            return Err(Error::UniverseMismatch);
        }
        if let Some(d) = a.max_degree() {
            self.check_degree(d)?;
        }
        let mut out = GradedElement::zero(self.universe());
        for (m, c) in a.terms() {
            let t = self.table(m.degree());
            let i = t.index[m];
            for (pos, v) in &t.rewrite[i] {
                out.add_term(t.monomials[t.basis[*pos]].clone(), v * c);
            }
        }
        Ok(NormalForm(out))
    }

    pub fn is_zero(&self, a: &GradedElement) -> Result<bool> {
        Ok(self.normal_form(a)?.is_zero())
    }

    /// Normal form of a product.
    pub fn multiply(&self, a: &GradedElement, b: &GradedElement) -> Result<NormalForm> {
        self.normal_form(&a.checked_mul(b)?)
    }

    /// Normal forms of all products of basis monomials whose degree stays
    /// within the cutoff: the structure constants of the ring.
    pub fn structure_constants(&self) -> Result<Vec<(Monomial, Monomial, NormalForm)>> {
        let u = self.universe();
        let mut out = Vec::new();
        for d1 in 0..=self.cutoff {
            for d2 in d1..=self.cutoff - d1 {
                for a in self.degree_basis(d1)? {
                    for b in self.degree_basis(d2)? {
                        let ea = GradedElement::from_monomial(u, a.clone(), Scalar::from_integer(1.into()));
                        let eb = GradedElement::from_monomial(u, b.clone(), Scalar::from_integer(1.into()));
                        let nf = self.multiply(&ea, &eb)?;
                        out.push((a.clone(), b, nf));
                    }
                }
            }
        }
        Ok(out)
    }
}
