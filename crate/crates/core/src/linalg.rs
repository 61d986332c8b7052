//! Sparse exact linear algebra over any [`Field`].
//!
//! Elimination is row-incremental: rows are fed in a fixed order and each one
//! is reduced against the pivots found so far, always eliminating its
//! lowest-indexed nonzero column first. A row that survives with a new
//! leading column becomes that column's pivot. Pivot choice therefore depends
//! only on the input ordering and runs are reproducible.
//!
//! Intermediate swell is controlled in two ways. Matrices whose entries are
//! all real are eliminated over ℚ instead of ℚ(i), which halves the work and
//! keeps every entry a single reduced fraction. Pivot rows are normalized to a
//! leading 1, so a reduction step `row -= lead · pivot` never introduces a
//! denominator that the pivot row did not already carry; for the integer
//! matrices produced by the cochain complexes the rows stay integral in the
//! common case and [`Field::sub_mul_assign`] takes an integer fast path.
//!
//! Rank of an integer matrix goes through a fraction-free variant on machine
//! words: a reduction is `row ← b·row − a·pivot` (with `a`, `b` the two
//! leading entries divided by their gcd) followed by division by the row
//! content. Any `i64` overflow abandons that attempt and the rational path
//! runs instead, so the result is exact either way.

use std::collections::BTreeMap;

use crate::scalar::{Field, GaussianRational, Rational};

/// Sparse vector with an explicit dimension and no stored zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseVector<F: Field = GaussianRational> {
    dim: usize,
    entries: Vec<(usize, F)>,
}

impl<F: Field> SparseVector<F> {
    pub fn zero(dim: usize) -> Self {
        SparseVector {
            dim,
            entries: Vec::new(),
        }
    }

    /// Builds a vector from `(index, value)` pairs, summing duplicates and
    /// dropping zeros. Panics on an out-of-range index.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, F)>) -> Self {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (i, v) in pairs {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            let slot = acc.entry(i).or_insert_with(F::zero);
            *slot = slot.add(&v);
        }
        let entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        SparseVector { dim, entries }
    }

    pub fn from_dense(values: &[F]) -> Self {
        Self::from_pairs(values.len(), values.iter().cloned().enumerate())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        Self::from_pairs(dim, [(i, F::one())])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn dot(&self, other: &Self) -> F {
        let mut acc = F::zero();
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        while let (Some(x), Some(y)) = (a.peek(), b.peek()) {
            match x.0.cmp(&y.0) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => {
                    acc = acc.add(&x.1.mul(&y.1));
                    a.next();
                    b.next();
                }
            }
        }
        acc
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v.mul(s))).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut entries = self.entries.clone();
        axpy(&mut entries, &F::one().neg(), &other.entries);
        SparseVector {
            dim: self.dim,
            entries,
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseVector<G> {
        SparseVector::from_pairs(self.dim, self.entries.iter().map(|(i, v)| (*i, f(v))))
    }
}

/// Sparse matrix stored by rows; each row sorted by column with no zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix<F: Field = GaussianRational> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, F)>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, F::one())))
    }

    /// Duplicate coordinates are summed; zeros are dropped. Panics on an
    /// out-of-range coordinate.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, F)>,
    ) -> Self {
        let mut per_row: Vec<Vec<(usize, F)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(
                r < rows && c < cols,
                "entry ({r}, {c}) outside {rows}x{cols}"
            );
            per_row[r].push((c, v));
        }
        let data = per_row
            .into_iter()
            .map(|row| SparseVector::from_pairs(cols, row).entries)
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense(values: &[Vec<F>]) -> Self {
        let rows = values.len();
        let cols = values.first().map_or(0, Vec::len);
        Self::from_triplets(
            rows,
            cols,
            values
                .iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().cloned().enumerate().map(move |(c, v)| (r, c, v))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, F)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    /// `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, x: &SparseVector<F>) -> SparseVector<F> {
        assert_eq!(
            x.dim, self.cols,
            "dimension mismatch in matrix-vector product"
        );
        let entries = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let v = SparseVector {
                    dim: self.cols,
                    entries: row.clone(),
                }
                .dot(x);
                (!v.is_zero()).then_some((r, v))
            })
            .collect();
        SparseVector {
            dim: self.rows,
            entries,
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in matrix product"
        );
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: Vec<(usize, F)> = Vec::new();
                for (k, a) in row {
                    axpy(&mut acc, &a.neg(), &other.data[*k]);
                }
                acc
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SparseMatrix<G> {
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.triplets().map(|(r, c, v)| (r, c, f(v))),
        )
    }

    /// Column `c` as a sparse vector.
    pub fn column(&self, c: usize) -> SparseVector<F> {
        SparseVector::from_pairs(self.rows, (0..self.rows).map(|r| (r, self.get(r, c))))
    }
}

/// `acc -= s · other` on sorted sparse rows.
fn axpy<F: Field>(acc: &mut Vec<(usize, F)>, s: &F, other: &[(usize, F)]) {
    if other.is_empty() || s.is_zero() {
        return;
    }
    let old = std::mem::take(acc);
    let mut out = Vec::with_capacity(old.len() + other.len());
    let mut a = old.into_iter().peekable();
    let mut b = other.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                std::cmp::Ordering::Less => out.push(a.next().unwrap()),
                std::cmp::Ordering::Greater => {
                    let (c, v) = b.next().unwrap();
                    out.push((*c, v.mul(s).neg()));
                }
                std::cmp::Ordering::Equal => {
                    let (c, mut v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    v.sub_mul_assign(s, w);
                    if !v.is_zero() {
                        out.push((c, v));
                    }
                }
            },
            (Some(_), None) => out.push(a.next().unwrap()),
            (None, Some(_)) => {
                let (c, v) = b.next().unwrap();
                out.push((*c, v.mul(s).neg()));
            }
            (None, None) => break,
        }
    }
    *acc = out;
}

/// Row echelon form: for each pivot column, a row whose lowest nonzero
/// column is that pivot, normalized so the pivot entry is 1.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    cols: usize,
    pivot_of_col: Vec<Option<usize>>,
    rows: Vec<Vec<(usize, F)>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            pivot_of_col: vec![None; cols],
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Sorted pivot columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| self.pivot_of_col[c].is_some())
            .collect()
    }

    /// Reduces `row` against the current pivots until its leading column has
    /// no pivot. Returns the residual.
    pub fn reduce(&self, mut row: Vec<(usize, F)>) -> Vec<(usize, F)> {
        while let Some((lead, _)) = row.first() {
            match self.pivot_of_col[*lead] {
                Some(p) => {
                    let s = row[0].1.clone();
                    axpy(&mut row, &s, &self.rows[p]);
                }
                None => break,
            }
        }
        row
    }

    /// Fully reduces `row`: every entry in a pivot column is eliminated.
    pub fn reduce_fully(&self, row: Vec<(usize, F)>) -> Vec<(usize, F)> {
        let mut done: Vec<(usize, F)> = Vec::new();
        let mut rest = row;
        while !rest.is_empty() {
            rest = self.reduce(rest);
            if let Some(first) = (!rest.is_empty()).then(|| rest.remove(0)) {
                done.push(first);
            }
        }
        done
    }

    /// Adds a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, row: Vec<(usize, F)>) -> bool {
        let mut row = self.reduce(row);
        let Some((lead, lead_val)) = row.first().cloned() else {
            return false;
        };
        if lead_val != F::one() {
            let inv = lead_val.inv();
            for (_, v) in row.iter_mut() {
                *v = v.mul(&inv);
            }
        }
        self.pivot_of_col[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Whether the row lies in the span of the inserted rows.
    pub fn contains(&self, row: Vec<(usize, F)>) -> bool {
        self.reduce(row).is_empty()
    }

    /// One solution of the triangular system given by the echelon rows,
    /// reading column `rhs` as the right-hand side and setting free
    /// variables to zero. Columns `>= rhs` are ignored as unknowns.
    fn back_substitute(&self, rhs: usize, unknowns: usize) -> Vec<F> {
        let mut x = vec![F::zero(); unknowns];
        let mut leads: Vec<(usize, usize)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(k, r)| (r[0].0, k))
            .filter(|(c, _)| *c < unknowns)
            .collect();
        leads.sort_unstable();
        for &(lead, k) in leads.iter().rev() {
            let mut v = F::zero();
            for (c, a) in &self.rows[k][1..] {
                if *c == rhs {
                    v = v.add(a);
                } else if *c < unknowns && !x[*c].is_zero() {
                    v.sub_mul_assign(a, &x[*c]);
                }
            }
            x[lead] = v;
        }
        x
    }
}

/// Echelon form of the rows of `m`, fed in index order.
pub fn echelon<F: Field>(m: &SparseMatrix<F>) -> Echelon<F> {
    let mut e = Echelon::new(m.cols);
    for row in &m.data {
        if e.rank() == m.cols {
            break;
        }
        e.insert(row.clone());
    }
    e
}

fn all_real(m: &SparseMatrix<GaussianRational>) -> bool {
    m.triplets().all(|(_, _, v)| v.is_real())
}

fn to_real(m: &SparseMatrix<GaussianRational>) -> SparseMatrix<Rational> {
    SparseMatrix {
        rows: m.rows,
        cols: m.cols,
        data: m
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v.re.clone())).collect())
            .collect(),
    }
}

fn to_gaussian_vec(v: SparseVector<Rational>) -> SparseVector<GaussianRational> {
    SparseVector {
        dim: v.dim,
        entries: v
            .entries
            .into_iter()
            .map(|(i, r)| (i, GaussianRational::real(r)))
            .collect(),
    }
}

/// Scalars with a specialized elimination path.
pub trait Scalar: Field {
    fn rank(m: &SparseMatrix<Self>) -> usize {
        rank_generic(m)
    }
    fn kernel_basis(m: &SparseMatrix<Self>) -> Vec<SparseVector<Self>> {
        kernel_generic(m)
    }
    fn solve(m: &SparseMatrix<Self>, b: &SparseVector<Self>) -> Solution<Self> {
        solve_generic(m, b)
    }
}

impl Scalar for Rational {
    fn rank(m: &SparseMatrix<Self>) -> usize {
        integer_rank(m).unwrap_or_else(|| rank_generic(m))
    }
}
impl Scalar for crate::scalar::Fp {}

impl Scalar for GaussianRational {
    fn rank(m: &SparseMatrix<Self>) -> usize {
        if all_real(m) {
            <Rational as Scalar>::rank(&to_real(m))
        } else {
            rank_generic(m)
        }
    }

    fn kernel_basis(m: &SparseMatrix<Self>) -> Vec<SparseVector<Self>> {
        if all_real(m) {
            kernel_generic(&to_real(m))
                .into_iter()
                .map(to_gaussian_vec)
                .collect()
        } else {
            kernel_generic(m)
        }
    }

    fn solve(m: &SparseMatrix<Self>, b: &SparseVector<Self>) -> Solution<Self> {
        if all_real(m) && b.entries.iter().all(|(_, v)| v.is_real()) {
            match solve_generic(&to_real(m), &b.map(|v| v.re.clone())) {
                Solution::Feasible(x) => Solution::Feasible(to_gaussian_vec(x)),
                Solution::Infeasible(y) => Solution::Infeasible(to_gaussian_vec(y)),
            }
        } else {
            solve_generic(m, b)
        }
    }
}

/// Exact rank.
pub fn rank<F: Scalar>(m: &SparseMatrix<F>) -> usize {
    F::rank(m)
}

/// Basis of the right null space, one vector per free column in increasing
/// column order; each vector has a 1 in its free column.
pub fn kernel_basis<F: Scalar>(m: &SparseMatrix<F>) -> Vec<SparseVector<F>> {
    F::kernel_basis(m)
}

/// Outcome of [`solve`].
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F: Field = GaussianRational> {
    /// Some `x` with `m·x = b`.
    Feasible(SparseVector<F>),
    /// A certificate `y` with `yᵀ·m = 0` and `yᵀ·b = 1`.
    Infeasible(SparseVector<F>),
}

impl<F: Field> Solution<F> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Solution::Feasible(_))
    }
}

/// Solves `m·x = b` exactly. The returned witness (solution or
/// infeasibility certificate) has been checked against `m` and `b`.
///
/// Panics if `b.dim() != m.rows()`.
pub fn solve<F: Scalar>(m: &SparseMatrix<F>, b: &SparseVector<F>) -> Solution<F> {
    assert_eq!(
        b.dim, m.rows,
        "right-hand side has length {} but matrix has {} rows",
        b.dim, m.rows
    );
    F::solve(m, b)
}

fn rank_generic<F: Field>(m: &SparseMatrix<F>) -> usize {
    // eliminating along the shorter side keeps the pivot table small
    if m.rows > m.cols {
        echelon(&m.transpose()).rank()
    } else {
        echelon(m).rank()
    }
}

/// Fraction-free rank over ℤ with machine integers. Rows are kept
/// primitive (divided by their content) after every reduction step.
/// Returns `None` if an entry is not an integer or if an intermediate value
/// overflows `i64`; callers then fall back to rational elimination.
fn integer_rank(m: &SparseMatrix<Rational>) -> Option<usize> {
    let m = if m.rows > m.cols {
        m.transpose()
    } else {
        m.clone()
    };
    let mut rows: Vec<Vec<(usize, i64)>> = Vec::with_capacity(m.rows);
    for row in &m.data {
        let mut r = Vec::with_capacity(row.len());
        for (c, v) in row {
            if !v.is_integer() {
                return None;
            }
            r.push((*c, i64::try_from(v.numer()).ok()?));
        }
        rows.push(r);
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; m.cols];
    let mut pivots: Vec<Vec<(usize, i64)>> = Vec::new();
    for mut row in rows {
        if pivots.len() == m.cols {
            break;
        }
        while let Some(&(lead, a)) = row.first() {
            let Some(p) = pivot_of_col[lead] else {
                break;
            };
            let b = pivots[p][0].1;
            let g = num_integer::gcd(a, b);
            row = int_combine(&row, b / g, &pivots[p], a / g)?;
        }
        if let Some(&(lead, _)) = row.first() {
            pivot_of_col[lead] = Some(pivots.len());
            pivots.push(row);
        }
    }
    Some(pivots.len())
}

/// `sa · a − sb · b`, made primitive with a positive leading entry.
fn int_combine(
    a: &[(usize, i64)],
    sa: i64,
    b: &[(usize, i64)],
    sb: i64,
) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (c, v) = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, x.1.checked_mul(sa)?.checked_sub(y.1.checked_mul(sb)?)?)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                (x.0, x.1.checked_mul(sa)?)
            }
            (Some(x), None) => {
                i += 1;
                (x.0, x.1.checked_mul(sa)?)
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, y.1.checked_mul(sb)?.checked_neg()?)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            out.push((c, v));
        }
    }
    let mut g = out.iter().fold(0i64, |g, &(_, v)| num_integer::gcd(g, v));
    if let Some(&(_, lead)) = out.first() {
        if lead < 0 {
            g = -g;
        }
        if g != 1 {
            for (_, v) in out.iter_mut() {
                *v /= g;
            }
        }
    }
    Some(out)
}

fn kernel_generic<F: Field>(m: &SparseMatrix<F>) -> Vec<SparseVector<F>> {
    let e = echelon(m);
    let pivots = e.pivot_columns();
    // fully reduce so every pivot row is zero on all other pivot columns
    let mut reduced: Vec<(usize, Vec<(usize, F)>)> = Vec::with_capacity(pivots.len());
    let mut done = Echelon::new(m.cols);
    for &c in pivots.iter().rev() {
        let row = e.rows[e.pivot_of_col[c].unwrap()].clone();
        let row = done.reduce_fully_tail(row);
        done.pivot_of_col[c] = Some(done.rows.len());
        done.rows.push(row.clone());
        reduced.push((c, row));
    }
    let mut by_free: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
    for c in 0..m.cols {
        if e.pivot_of_col[c].is_none() {
            by_free.insert(c, vec![(c, F::one())]);
        }
    }
    for (lead, row) in &reduced {
        for (c, v) in &row[1..] {
            if let Some(vec) = by_free.get_mut(c) {
                vec.push((*lead, v.neg()));
            }
        }
    }
    by_free
        .into_values()
        .map(|pairs| SparseVector::from_pairs(m.cols, pairs))
        .collect()
}

impl<F: Field> Echelon<F> {
    /// Eliminates every non-leading entry of `row` that sits in a pivot
    /// column of `self`, assuming `self`'s rows are already fully reduced.
    fn reduce_fully_tail(&self, row: Vec<(usize, F)>) -> Vec<(usize, F)> {
        let mut out = row;
        let mut k = 1;
        while k < out.len() {
            let c = out[k].0;
            if let Some(p) = self.pivot_of_col[c] {
                let s = out[k].1.clone();
                axpy(&mut out, &s, &self.rows[p]);
                // entries before position k are unaffected: pivot rows start at c
            } else {
                k += 1;
            }
        }
        out
    }
}

fn solve_generic<F: Field>(m: &SparseMatrix<F>, b: &SparseVector<F>) -> Solution<F> {
    match particular_solution(m, b) {
        Some(x) => {
            assert_eq!(&m.mul_vec(&x), b, "solution check failed");
            Solution::Feasible(x)
        }
        None => {
            // y with [mᵀ; bᵀ] y = (0, …, 0, 1)
            let mut aug = m.transpose();
            aug.data.push(b.entries.clone());
            aug.rows += 1;
            let target = SparseVector::unit(aug.rows, aug.rows - 1);
            let y = particular_solution(&aug, &target)
                .expect("inconsistent system must admit a left certificate");
            debug_assert!(m.transpose().mul_vec(&y).is_zero());
            debug_assert_eq!(y.dot(b), F::one());
            Solution::Infeasible(y)
        }
    }
}

fn particular_solution<F: Field>(
    m: &SparseMatrix<F>,
    b: &SparseVector<F>,
) -> Option<SparseVector<F>> {
    let rhs = m.cols;
    let mut e = Echelon::new(m.cols + 1);
    let mut b_at = vec![None; m.rows];
    for (r, v) in &b.entries {
        b_at[*r] = Some(v.clone());
    }
    for (r, row) in m.data.iter().enumerate() {
        let mut row = row.clone();
        if let Some(v) = b_at[r].take() {
            row.push((rhs, v));
        }
        e.insert(row);
        if e.pivot_of_col[rhs].is_some() {
            return None;
        }
    }
    let x = e.back_substitute(rhs, m.cols);
    Some(SparseVector::from_dense(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q(rows: &[&[i64]]) -> SparseMatrix<Rational> {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn identity_rank() {
        assert_eq!(rank(&SparseMatrix::<Rational>::identity(3)), 3);
    }

    #[test]
    fn proportional_rows() {
        assert_eq!(rank(&q(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_of_row_sum() {
        let k = kernel_basis(&q(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].to_dense(), vec![rat(-1), rat(1)]);
    }

    #[test]
    fn invertible_has_trivial_kernel() {
        assert!(kernel_basis(&q(&[&[1, 2], &[3, 4]])).is_empty());
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = SparseVector::from_dense(&[rat(3), rat(0), rat(-7)]);
        assert_eq!(solve(&SparseMatrix::identity(3), &b), Solution::Feasible(b));
    }

    #[test]
    fn solve_underdetermined() {
        let m = q(&[&[1, 1]]);
        let b = SparseVector::from_dense(&[rat(1)]);
        match solve(&m, &b) {
            Solution::Feasible(x) => assert_eq!(m.mul_vec(&x), b),
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn zero_matrix_is_infeasible() {
        let m = SparseMatrix::<Rational>::zeros(2, 2);
        let b = SparseVector::from_dense(&[rat(0), rat(5)]);
        match solve(&m, &b) {
            Solution::Infeasible(y) => assert_eq!(y.dot(&b), rat(1)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    #[should_panic(expected = "right-hand side")]
    fn solve_dimension_mismatch() {
        solve(&q(&[&[1, 1]]), &SparseVector::from_dense(&[rat(1), rat(2)]));
    }

    #[test]
    fn complex_entries() {
        let i = GaussianRational::i();
        let one = GaussianRational::from_int(1);
        // rows (1, i) and (i, -1) are proportional over ℚ(i)
        let m = SparseMatrix::from_dense(&[vec![one.clone(), i.clone()], vec![i.clone(), -&one]]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).is_zero());
    }
}
