//! Leibniz and Chevalley-Eilenberg cochains with trivial coefficients, their
//! differentials, the Euler-weight grading and the contraction operators.
//!
//! A cochain of degree `n` is stored by its values on basis tensors
//! `e_{k₁} ⊗ … ⊗ e_{kₙ}`, keyed by the multi-index `(k₁, …, kₙ)`. Lie cochains
//! are alternating and only store strictly increasing multi-indices.
//!
//! Weight convention: the dual basis cochain of `(k₁, …, kₙ)` has Euler
//! eigenvalue `−Σkᵢ`; "zero weight" means `Σkᵢ = 0`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgebraError, GradedLieAlgebra, Support};
use crate::linalg::SparseMatrix;
use crate::scalar::{Field, GaussianRational};

/// Ordered tuple of weights.
pub type MultiIndex = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Leibniz,
    Lie,
}

impl std::str::FromStr for Theory {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "leibniz" => Ok(Theory::Leibniz),
            "lie" | "ce" | "chevalley-eilenberg" => Ok(Theory::Lie),
            other => Err(format!("unknown theory {other:?}")),
        }
    }
}

impl std::fmt::Display for Theory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Theory::Leibniz => "leibniz",
            Theory::Lie => "lie",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected a {expected} cochain, got a {got} cochain")]
    WrongTheory { expected: Theory, got: Theory },
    #[error("operation needs a cochain of degree >= 1")]
    DegreeZero,
    #[error("algebra {0} has no Euler element e_0")]
    NoEuler(String),
    #[error("support of {0} is unbounded below: weight slices are infinite")]
    UnboundedBelow(String),
    #[error("slice ({degree}, weight sum {weight_sum}) of {algebra} is infinite")]
    InfiniteSlice {
        algebra: String,
        degree: usize,
        weight_sum: i64,
    },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// Sign of the permutation sorting `idx`, and the sorted tuple; `None` if
/// `idx` has a repeated entry.
pub fn sort_with_sign(idx: &[i64]) -> Option<(i64, MultiIndex)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// Anything that can be evaluated on basis tensors.
pub trait Functional: Sync {
    fn degree(&self) -> usize;
    fn eval(&self, args: &[i64]) -> GaussianRational;
}

#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    degree: usize,
    theory: Theory,
    entries: BTreeMap<MultiIndex, GaussianRational>,
}

impl Cochain {
    pub fn zero(degree: usize, theory: Theory) -> Self {
        Cochain {
            degree,
            theory,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a cochain from `(multi-index, value)` pairs; duplicates add up.
    /// Lie entries may be given on any ordering and are folded onto the
    /// increasing representative with the sorting sign.
    pub fn from_entries(
        degree: usize,
        theory: Theory,
        entries: impl IntoIterator<Item = (MultiIndex, GaussianRational)>,
    ) -> Self {
        let mut c = Cochain::zero(degree, theory);
        for (idx, v) in entries {
            c.add_at(&idx, &v);
        }
        c
    }

    /// The dual basis cochain `ε^{k₁} ⊗ … ⊗ ε^{kₙ}` (Leibniz) or
    /// `ε^{k₁} ∧ … ∧ ε^{kₙ}` (Lie).
    pub fn dual(theory: Theory, idx: &[i64]) -> Self {
        Cochain::from_entries(
            idx.len(),
            theory,
            [(idx.to_vec(), GaussianRational::from_int(1))],
        )
    }

    /// The degree-0 cochain with value `s`.
    pub fn scalar(theory: Theory, s: GaussianRational) -> Self {
        Cochain::from_entries(0, theory, [(Vec::new(), s)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn entries(&self) -> &BTreeMap<MultiIndex, GaussianRational> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn add_at(&mut self, idx: &[i64], v: &GaussianRational) {
        assert_eq!(
            idx.len(),
            self.degree,
            "multi-index {idx:?} has wrong length for degree {}",
            self.degree
        );
        if v.is_zero() {
            return;
        }
        let (key, v) = match self.theory {
            Theory::Leibniz => (idx.to_vec(), v.clone()),
            Theory::Lie => match sort_with_sign(idx) {
                None => return,
                Some((1, s)) => (s, v.clone()),
                Some((_, s)) => (s, v.neg()),
            },
        };
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&v);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(
            (self.degree, self.theory),
            (other.degree, other.theory),
            "incompatible cochains"
        );
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_at(k, v);
        }
        out
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussianRational) -> Cochain {
        if s.is_zero() {
            return Cochain::zero(self.degree, self.theory);
        }
        Cochain {
            degree: self.degree,
            theory: self.theory,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), v.mul(s)))
                .collect(),
        }
    }

    /// Splits into weight-homogeneous parts keyed by the weight sum `Σkᵢ`.
    pub fn weight_components(&self) -> BTreeMap<i64, Cochain> {
        let mut out: BTreeMap<i64, Cochain> = BTreeMap::new();
        for (k, v) in &self.entries {
            out.entry(k.iter().sum())
                .or_insert_with(|| Cochain::zero(self.degree, self.theory))
                .entries
                .insert(k.clone(), v.clone());
        }
        out
    }

    /// The common weight sum of all entries, if homogeneous (0 for the zero
    /// cochain).
    pub fn weight_sum(&self) -> Option<i64> {
        let sums: BTreeSet<i64> = self.entries.keys().map(|k| k.iter().sum()).collect();
        match sums.len() {
            0 => Some(0),
            1 => sums.into_iter().next(),
            _ => None,
        }
    }

    /// The Lie cochain viewed as an alternating Leibniz cochain.
    pub fn to_leibniz(&self) -> Cochain {
        if self.theory == Theory::Leibniz {
            return self.clone();
        }
        let mut out = Cochain::zero(self.degree, Theory::Leibniz);
        for (k, v) in &self.entries {
            for (sign, perm) in permutations_with_sign(k) {
                out.add_at(&perm, &if sign > 0 { v.clone() } else { v.neg() });
            }
        }
        out
    }

    /// Coordinates on an ordered basis (missing basis elements read as 0).
    pub fn coordinates(&self, basis: &[MultiIndex]) -> Vec<GaussianRational> {
        basis.iter().map(|b| self.eval(b)).collect()
    }

    /// Cochain supported on `basis` with the given coordinates.
    pub fn from_coordinates(
        degree: usize,
        theory: Theory,
        basis: &[MultiIndex],
        coords: &[GaussianRational],
    ) -> Self {
        Cochain::from_entries(
            degree,
            theory,
            basis.iter().cloned().zip(coords.iter().cloned()),
        )
    }
}

impl Serialize for Cochain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<(&MultiIndex, &GaussianRational)> = self.entries.iter().collect();
        let mut st = s.serialize_struct("Cochain", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("theory", &self.theory)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl Functional for Cochain {
    fn degree(&self) -> usize {
        self.degree
    }

    /// Value on `e_{args₀} ⊗ …`; Lie cochains evaluate by the sign of the
    /// sorting permutation and vanish on repeated weights.
    fn eval(&self, args: &[i64]) -> GaussianRational {
        debug_assert_eq!(args.len(), self.degree);
        match self.theory {
            Theory::Leibniz => self.entries.get(args).cloned().unwrap_or_default(),
            Theory::Lie => match sort_with_sign(args) {
                None => GaussianRational::zero(),
                Some((sign, s)) => match self.entries.get(&s) {
                    None => GaussianRational::zero(),
                    Some(v) if sign > 0 => v.clone(),
                    Some(v) => v.neg(),
                },
            },
        }
    }
}

fn permutations_with_sign(k: &[i64]) -> Vec<(i64, MultiIndex)> {
    if k.len() <= 1 {
        return vec![(1, k.to_vec())];
    }
    let mut out = Vec::new();
    for i in 0..k.len() {
        let mut rest = k.to_vec();
        let head = rest.remove(i);
        let sign_head = if i % 2 == 0 { 1 } else { -1 };
        for (s, mut p) in permutations_with_sign(&rest) {
            p.insert(0, head);
            out.push((s * sign_head, p));
        }
    }
    out
}

/// Value of the Leibniz coboundary of `f` on `e_J`:
/// `Σ_{i<j} (−1)^{j+1} f(x₁, …, [x_i, x_j], …, x̂_j, …)` with 1-based `j`.
pub fn leibniz_d_at<C: Functional + ?Sized>(
    f: &C,
    alg: &GradedLieAlgebra,
    target: &[i64],
) -> Result<GaussianRational, AlgebraError> {
    let mut acc = GaussianRational::zero();
    let mut merged = Vec::with_capacity(target.len().saturating_sub(1));
    for j in 1..target.len() {
        for i in 0..j {
            let Some((w, c)) = alg.bracket(target[i], target[j])? else {
                continue;
            };
            merged.clear();
            merged.extend_from_slice(&target[..j]);
            merged[i] = w;
            merged.extend_from_slice(&target[j + 1..]);
            let v = f.eval(&merged);
            if v.is_zero() {
                continue;
            }
            // 0-based j ⇒ sign (−1)^j
            let term = c.mul(&v);
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
    }
    Ok(acc)
}

/// Value of the Chevalley-Eilenberg coboundary of `f` on `e_J`:
/// `Σ_{i<j} (−1)^{i+j} f([x_i, x_j], x₁, …, x̂_i, …, x̂_j, …)`.
pub fn lie_d_at<C: Functional + ?Sized>(
    f: &C,
    alg: &GradedLieAlgebra,
    target: &[i64],
) -> Result<GaussianRational, AlgebraError> {
    let mut acc = GaussianRational::zero();
    let mut args = Vec::with_capacity(target.len().saturating_sub(1));
    for j in 1..target.len() {
        for i in 0..j {
            let Some((w, c)) = alg.bracket(target[i], target[j])? else {
                continue;
            };
            args.clear();
            args.push(w);
            args.extend(
                target
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &x)| x),
            );
            let v = f.eval(&args);
            if v.is_zero() {
                continue;
            }
            let term = c.mul(&v);
            acc = if (i + j) % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
    }
    Ok(acc)
}

/// Multi-indices of length `n + 1` on which the coboundary of a cochain
/// supported on `source` can be nonzero.
fn coboundary_targets<'a>(
    source: impl Iterator<Item = &'a MultiIndex>,
    alg: &GradedLieAlgebra,
    theory: Theory,
) -> BTreeSet<MultiIndex> {
    let mut split_cache: HashMap<i64, Vec<(i64, i64)>> = HashMap::new();
    let mut out = BTreeSet::new();
    for idx in source {
        let n = idx.len();
        for p in 0..n {
            let splits = split_cache.entry(idx[p]).or_insert_with(|| {
                alg.splittings(idx[p])
                    .into_iter()
                    .map(|(a, b, _)| (a, b))
                    .collect()
            });
            for &(a, b) in splits.iter() {
                match theory {
                    Theory::Leibniz => {
                        for j in p + 1..=n {
                            let mut t = Vec::with_capacity(n + 1);
                            t.extend_from_slice(&idx[..p]);
                            t.push(a);
                            t.extend_from_slice(&idx[p + 1..j]);
                            t.push(b);
                            t.extend_from_slice(&idx[j..]);
                            out.insert(t);
                        }
                    }
                    Theory::Lie => {
                        let mut t: Vec<i64> = idx
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != p)
                            .map(|(_, &x)| x)
                            .collect();
                        t.push(a);
                        t.push(b);
                        if let Some((_, s)) = sort_with_sign(&t) {
                            out.insert(s);
                        }
                    }
                }
            }
        }
    }
    out
}

fn coboundary(c: &Cochain, alg: &GradedLieAlgebra) -> Result<Cochain, CochainError> {
    let targets = coboundary_targets(c.entries.keys(), alg, c.theory);
    let values: Vec<(MultiIndex, GaussianRational)> = targets
        .into_par_iter()
        .map(|t| {
            let v = match c.theory {
                Theory::Leibniz => leibniz_d_at(c, alg, &t),
                Theory::Lie => lie_d_at(c, alg, &t),
            };
            v.map(|v| (t, v))
        })
        .collect::<Result<_, _>>()?;
    Ok(Cochain::from_entries(c.degree + 1, c.theory, values))
}

/// Leibniz coboundary. A bracket leaving a Witt window on any tuple where
/// the result could be nonzero is an error naming the pair.
pub fn leibniz_d(c: &Cochain, alg: &GradedLieAlgebra) -> Result<Cochain, CochainError> {
    if c.theory != Theory::Leibniz {
        return Err(CochainError::WrongTheory {
            expected: Theory::Leibniz,
            got: c.theory,
        });
    }
    coboundary(c, alg)
}

/// Chevalley-Eilenberg coboundary with trivial coefficients.
pub fn lie_d(c: &Cochain, alg: &GradedLieAlgebra) -> Result<Cochain, CochainError> {
    if c.theory != Theory::Lie {
        return Err(CochainError::WrongTheory {
            expected: Theory::Lie,
            got: c.theory,
        });
    }
    coboundary(c, alg)
}

/// Coboundary in the cochain's own theory.
pub fn d(c: &Cochain, alg: &GradedLieAlgebra) -> Result<Cochain, CochainError> {
    coboundary(c, alg)
}

/// All multi-indices of length `degree` with entries in the support and
/// `Σkᵢ = weight_sum`, lexicographically ordered. Lie bases only contain
/// strictly increasing tuples.
pub fn weight_basis(
    alg: &GradedLieAlgebra,
    degree: usize,
    weight_sum: i64,
    theory: Theory,
) -> Result<Vec<MultiIndex>, CochainError> {
    let support = alg.support();
    let Some(lo) = support.min() else {
        return Err(CochainError::UnboundedBelow(alg.name().to_string()));
    };
    if degree == 0 {
        return Ok(if weight_sum == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        });
    }
    let hi = support.max();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(degree);
    enumerate(
        support, lo, hi, degree, weight_sum, theory, &mut cur, &mut out,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    support: &Support,
    lo: i64,
    hi: Option<i64>,
    remaining: usize,
    sum: i64,
    theory: Theory,
    cur: &mut Vec<i64>,
    out: &mut Vec<MultiIndex>,
) {
    if remaining == 0 {
        if sum == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let start = match (theory, cur.last()) {
        (Theory::Lie, Some(&last)) => lo.max(last + 1),
        _ => lo,
    };
    // the other entries need at least `lo` each
    let mut end = sum - (remaining as i64 - 1) * lo;
    if let Some(h) = hi {
        end = end.min(h);
    }
    for k in support.weights_between(start, end) {
        if remaining == 1 && k != sum {
            continue;
        }
        if let Some(h) = hi {
            // remaining entries cannot exceed h each
            if sum - k > (remaining as i64 - 1) * h {
                continue;
            }
        }
        cur.push(k);
        enumerate(support, lo, hi, remaining - 1, sum - k, theory, cur, out);
        cur.pop();
    }
}

/// Number of elements [`weight_basis`] would return, without building them.
pub fn weight_basis_len(
    alg: &GradedLieAlgebra,
    degree: usize,
    weight_sum: i64,
    theory: Theory,
) -> Result<u128, CochainError> {
    let support = alg.support();
    let Some(lo) = support.min() else {
        return Err(CochainError::UnboundedBelow(alg.name().to_string()));
    };
    let hi = support.max();
    let mut memo = HashMap::new();
    Ok(count(
        support, lo, hi, degree, weight_sum, theory, None, &mut memo,
    ))
}

#[allow(clippy::too_many_arguments)]
fn count(
    support: &Support,
    lo: i64,
    hi: Option<i64>,
    remaining: usize,
    sum: i64,
    theory: Theory,
    last: Option<i64>,
    memo: &mut HashMap<(usize, i64, Option<i64>), u128>,
) -> u128 {
    if remaining == 0 {
        return u128::from(sum == 0);
    }
    let key = (
        remaining,
        sum,
        if theory == Theory::Lie { last } else { None },
    );
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let start = match (theory, last) {
        (Theory::Lie, Some(l)) => lo.max(l + 1),
        _ => lo,
    };
    let mut end = sum - (remaining as i64 - 1) * lo;
    if let Some(h) = hi {
        end = end.min(h);
    }
    let mut total = 0;
    for k in support.weights_between(start, end) {
        if remaining == 1 && k != sum {
            continue;
        }
        if let Some(h) = hi {
            if sum - k > (remaining as i64 - 1) * h {
                continue;
            }
        }
        total += count(
            support,
            lo,
            hi,
            remaining - 1,
            sum - k,
            theory,
            Some(k),
            memo,
        );
    }
    memo.insert(key, total);
    total
}

/// The Euler-invariant basis of degree `degree`.
pub fn zero_weight_basis(
    alg: &GradedLieAlgebra,
    degree: usize,
    theory: Theory,
) -> Result<Vec<MultiIndex>, CochainError> {
    weight_basis(alg, degree, 0, theory)
}

/// One homogeneous piece of the cochain complex together with its outgoing
/// differential.
#[derive(Clone, Debug)]
pub struct ComplexSlice {
    pub theory: Theory,
    pub degree: usize,
    /// Euler eigenvalue λ; basis multi-indices have `Σkᵢ = −λ`.
    pub weight: i64,
    pub basis: Vec<MultiIndex>,
    pub target_basis: Vec<MultiIndex>,
    /// `target_basis.len() × basis.len()` matrix of the coboundary.
    pub matrix: SparseMatrix<GaussianRational>,
}

/// Assembles the coboundary from the `(degree, λ)` slice to the
/// `(degree + 1, λ)` slice. Row `r` holds the values of `d ε^I` on the
/// `r`-th target multi-index.
pub fn build_slice(
    alg: &GradedLieAlgebra,
    degree: usize,
    weight: i64,
    theory: Theory,
) -> Result<ComplexSlice, CochainError> {
    let basis = weight_basis(alg, degree, -weight, theory)?;
    let target_basis = weight_basis(alg, degree + 1, -weight, theory)?;
    let matrix = slice_matrix(alg, theory, &basis, &target_basis)?;
    Ok(ComplexSlice {
        theory,
        degree,
        weight,
        basis,
        target_basis,
        matrix,
    })
}

/// Matrix of the coboundary between two ordered bases.
pub fn slice_matrix(
    alg: &GradedLieAlgebra,
    theory: Theory,
    source: &[MultiIndex],
    target: &[MultiIndex],
) -> Result<SparseMatrix<GaussianRational>, CochainError> {
    let index: HashMap<&[i64], usize> = source
        .iter()
        .enumerate()
        .map(|(i, k)| (k.as_slice(), i))
        .collect();
    let rows: Vec<Vec<(usize, usize, GaussianRational)>> = target
        .par_iter()
        .enumerate()
        .map(|(r, t)| row_entries(alg, theory, &index, r, t))
        .collect::<Result<_, _>>()?;
    Ok(SparseMatrix::from_triplets(
        target.len(),
        source.len(),
        rows.into_iter().flatten(),
    ))
}

fn row_entries(
    alg: &GradedLieAlgebra,
    theory: Theory,
    index: &HashMap<&[i64], usize>,
    r: usize,
    t: &[i64],
) -> Result<Vec<(usize, usize, GaussianRational)>, CochainError> {
    let mut out = Vec::new();
    for j in 1..t.len() {
        for i in 0..j {
            let Some((w, c)) = alg.bracket(t[i], t[j])? else {
                continue;
            };
            match theory {
                Theory::Leibniz => {
                    let mut m = t[..j].to_vec();
                    m[i] = w;
                    m.extend_from_slice(&t[j + 1..]);
                    if let Some(&col) = index.get(m.as_slice()) {
                        out.push((r, col, if j % 2 == 0 { c } else { c.neg() }));
                    }
                }
                Theory::Lie => {
                    let mut args = vec![w];
                    args.extend(
                        t.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i && k != j)
                            .map(|(_, &x)| x),
                    );
                    if let Some((sign, s)) = sort_with_sign(&args) {
                        if let Some(&col) = index.get(s.as_slice()) {
                            let positive = ((i + j) % 2 == 0) == (sign > 0);
                            out.push((r, col, if positive { c } else { c.neg() }));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn require_euler(alg: &GradedLieAlgebra) -> Result<(), CochainError> {
    if alg.has_euler() {
        Ok(())
    } else {
        Err(CochainError::NoEuler(alg.name().to_string()))
    }
}

/// Action of `ad_{e₀}` on cochains:
/// `(e₀·c)(x₁, …, xₙ) = −Σᵢ c(x₁, …, [xᵢ, e₀], …, xₙ)`, so the dual basis
/// cochain of `(k₁, …, kₙ)` has eigenvalue `−Σkᵢ`.
pub fn euler_action(c: &Cochain, alg: &GradedLieAlgebra) -> Result<Cochain, CochainError> {
    require_euler(alg)?;
    let entries = c.entries.iter().map(|(k, v)| {
        let mut s = GaussianRational::zero();
        for &x in k {
            s = s.sub(&alg.constant(x, 0));
        }
        (k.clone(), v.mul(&s))
    });
    Ok(Cochain::from_entries(c.degree, c.theory, entries))
}

/// Insertion of `e₀` in the last slot: `(Dc)(x₁, …, x_{n−1}) = c(x₁, …, x_{n−1}, e₀)`.
/// For Lie cochains this is the interior product with `γ ∧ ε⁰ ↦ γ`.
pub fn contract_e0(c: &Cochain, alg: &GradedLieAlgebra) -> Result<Cochain, CochainError> {
    require_euler(alg)?;
    if c.degree == 0 {
        return Err(CochainError::DegreeZero);
    }
    let n = c.degree;
    let mut out = Cochain::zero(n - 1, c.theory);
    for (k, v) in &c.entries {
        match c.theory {
            Theory::Leibniz => {
                if k[n - 1] == 0 {
                    out.add_at(&k[..n - 1], v);
                }
            }
            Theory::Lie => {
                if let Some(p) = k.iter().position(|&x| x == 0) {
                    let mut rest = k.clone();
                    rest.remove(p);
                    // moving e₀ from slot p to the end
                    let v = if (n - 1 - p).is_multiple_of(2) {
                        v.clone()
                    } else {
                        v.neg()
                    };
                    out.add_at(&rest, &v);
                }
            }
        }
    }
    Ok(out)
}

/// The contracting homotopy `D̃ = (−1)^{n−1} D` on degree-`n` Leibniz
/// cochains, where `D` is [`contract_e0`]. On a cochain whose arguments have
/// weight sum `μ`, `d D̃ c + D̃ d c = μ · c`.
pub fn homotopy(c: &Cochain, alg: &GradedLieAlgebra) -> Result<Cochain, CochainError> {
    if c.theory != Theory::Leibniz {
        return Err(CochainError::WrongTheory {
            expected: Theory::Leibniz,
            got: c.theory,
        });
    }
    let dc = contract_e0(c, alg)?;
    Ok(if (c.degree - 1).is_multiple_of(2) {
        dc
    } else {
        dc.scale(&GaussianRational::from_int(-1))
    })
}

/// Plain-text dump of a slice: header, basis, target basis and matrix
/// triplets with exact values.
pub fn export_slice(slice: &ComplexSlice) -> String {
    use std::fmt::Write;
    let fmt_idx = |k: &MultiIndex| k.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    let mut s = String::new();
    writeln!(
        s,
        "# slice theory={} degree={} weight={}",
        slice.theory, slice.degree, slice.weight
    )
    .unwrap();
    writeln!(
        s,
        "rows {} cols {} nnz {}",
        slice.matrix.rows(),
        slice.matrix.cols(),
        slice.matrix.nnz()
    )
    .unwrap();
    writeln!(s, "basis").unwrap();
    for (i, k) in slice.basis.iter().enumerate() {
        writeln!(s, "{i} ({})", fmt_idx(k)).unwrap();
    }
    writeln!(s, "target").unwrap();
    for (i, k) in slice.target_basis.iter().enumerate() {
        writeln!(s, "{i} ({})", fmt_idx(k)).unwrap();
    }
    writeln!(s, "entries").unwrap();
    for (r, c, v) in slice.matrix.triplets() {
        writeln!(s, "{r} {c} {v}").unwrap();
    }
    s
}
