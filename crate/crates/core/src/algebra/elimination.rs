//! Sparse fraction-free Gaussian elimination over the integers.
//!
//! Rows are kept primitive (content one, positive leading entry) so the
//! entries stay small; rationals only appear when a reduced echelon form is
//! read back out.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Entries sorted by column, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators of a rational row and makes it primitive.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, BigRational)>) -> SparseRow {
    let mut entries: Vec<(usize, BigRational)> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    entries.sort_by_key(|(c, _)| *c);
    let lcm = entries.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut row: SparseRow = entries
        .into_iter()
        .map(|(c, v)| (c, (v * BigRational::from_integer(lcm.clone())).to_integer()))
        .collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut SparseRow) {
    let Some((_, lead)) = row.first() else {
        return;
    };
    let negative = lead.is_negative();
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if g.is_one() && !negative {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
        if negative {
            *v = -&*v;
        }
    }
}

/// `a*x - b*y`, merged column by column.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon form keyed by pivot column.
#[derive(Debug, Default, Clone)]
pub struct RowReducer {
    pivots: HashMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Reduces the leading entries of `row` against existing pivots.
    fn reduce_leading(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead_col, lead)) = row.first() {
            let Some(p) = self.pivots.get(lead_col) else {
                break;
            };
            let (a, b) = scale_pair(&p[0].1, lead);
            row = combine(&a, &row, &b, p);
            make_primitive(&mut row);
        }
        row
    }

    /// Adds a row; returns `true` when it was independent of earlier rows.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce_leading(row);
        match row.first() {
            None => false,
            Some((c, _)) => {
                self.pivots.insert(*c, row);
                true
            }
        }
    }

    /// Back-substitutes so every pivot row has no other pivot columns, and
    /// returns the rows keyed by pivot column.
    pub fn into_reduced(mut self) -> HashMap<usize, SparseRow> {
        let mut cols: Vec<usize> = self.pivots.keys().copied().collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        let mut done: HashMap<usize, SparseRow> = HashMap::with_capacity(cols.len());
        for c in cols {
            let mut row = self.pivots.remove(&c).expect("pivot present");
            loop {
                let hit = row
                    .iter()
                    .skip(1)
                    .find(|(j, _)| done.contains_key(j))
                    .map(|(j, v)| (*j, v.clone()));
                let Some((j, v)) = hit else { break };
                let p = &done[&j];
                let (a, b) = scale_pair(&p[0].1, &v);
                row = combine(&a, &row, &b, p);
                make_primitive(&mut row);
            }
            done.insert(c, row);
        }
        done
    }
}

/// Smallest multipliers `(a, b)` with `a*lead_x == b*lead_p`, where the
/// pivot lead is `p` and the entry to cancel is `x`.
fn scale_pair(p: &BigInt, x: &BigInt) -> (BigInt, BigInt) {
    let g = p.gcd(x);
    (p / &g, x / &g)
}

/// Rank of a list of rational rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut r = RowReducer::new();
    for row in rows {
        r.insert(row);
    }
    r.rank()
}
