//! Exact Fourier calculus on trigonometric vector fields of the circle and
//! the explicit cocycles of `Vect S¹`.
//!
//! A field is `f(φ) d/dφ` with `f` a trigonometric polynomial; the Witt
//! basis is `e_k = i·exp(ikφ) d/dφ`, whose bracket `[f, g] = f g′ − f′ g`
//! gives `[e_k, e_l] = (k − l) e_{k+l}`. Circle integrals are normalized by
//! `1/2π`, i.e. they extract the mode-0 coefficient.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{builtin, AlgebraError, GradedLieAlgebra};
use crate::cochain::{
    self, slice_matrix, weight_basis, Cochain, CochainError, Functional, MultiIndex, Theory,
};
use crate::linalg::{self, Solution, SparseVector};
use crate::scalar::{Field, GaussianRational, Rational};

type G = GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WittError {
    #[error("window {window} is too small: need at least {required} (guard band for brackets is twice the window)")]
    WindowTooSmall { window: i64, required: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error("unknown cocycle {0:?} (expected theta, theta-tilde, alpha, omega or beta1)")]
    UnknownCocycle(String),
    #[error("a pullback needs a Leibniz cochain on w1, got a {0} cochain")]
    NotLeibniz(Theory),
}

/// A trigonometric polynomial `Σ c_k exp(ikφ)`, read either as a function or
/// as the vector field `f(φ) d/dφ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FourierVectorField {
    coeffs: BTreeMap<i64, G>,
}

impl FourierVectorField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_modes(modes: impl IntoIterator<Item = (i64, G)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in modes {
            out.add_mode(k, &c);
        }
        out
    }

    /// The constant function `c`.
    pub fn constant(c: G) -> Self {
        Self::from_modes([(0, c)])
    }

    /// The Witt basis field `e_k = i·exp(ikφ) d/dφ`.
    pub fn basis(k: i64) -> Self {
        Self::from_modes([(k, G::i())])
    }

    fn add_mode(&mut self, k: i64, c: &G) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn modes(&self) -> &BTreeMap<i64, G> {
        &self.coeffs
    }

    pub fn mode(&self, k: i64) -> G {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `d/dφ`: mode `k` is multiplied by `ik`.
    pub fn derivative(&self) -> Self {
        Self::from_modes(
            self.coeffs
                .iter()
                .map(|(&k, c)| (k, c.mul(&G::from_int(k).mul_i_pow(1)))),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }

    /// Pointwise product; modes add.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.coeffs {
            for (l, b) in &other.coeffs {
                out.add_mode(k + l, &a.mul(b));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_mode(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&G::from_int(-1)))
    }

    pub fn scale(&self, s: &G) -> Self {
        Self::from_modes(self.coeffs.iter().map(|(&k, c)| (k, c.mul(s))))
    }

    /// Vector field bracket `f g′ − f′ g`.
    pub fn bracket(&self, other: &Self) -> Self {
        self.product(&other.derivative())
            .sub(&self.derivative().product(other))
    }

    /// `(1/2π) ∮ f dφ`.
    pub fn normalized_integral(&self) -> G {
        self.mode(0)
    }

    /// `f(0)`.
    pub fn value_at_zero(&self) -> G {
        self.coeffs.values().fold(G::zero(), |acc, c| acc.add(c))
    }

    /// `f^{(j)}(0)`.
    pub fn jet_at_zero(&self, j: usize) -> G {
        self.nth_derivative(j).value_at_zero()
    }

    /// `f(φ + ψ)` where `u = exp(iψ)`: mode `k` picks up `u^k`. Only
    /// rational points of the unit circle keep this exact.
    pub fn rotate(&self, u: &G) -> Self {
        Self::from_modes(self.coeffs.iter().map(|(&k, c)| (k, c.mul(&u.pow(k)))))
    }
}

impl fmt::Display for FourierVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(k, c)| format!("({c})e^{{{k}iφ}}"))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

fn det2(f: &FourierVectorField, g: &FourierVectorField) -> FourierVectorField {
    let (f1, f2) = (f.derivative(), f.nth_derivative(2));
    let (g1, g2) = (g.derivative(), g.nth_derivative(2));
    f1.product(&g2).sub(&f2.product(&g1))
}

fn det3(
    f: &FourierVectorField,
    g: &FourierVectorField,
    h: &FourierVectorField,
) -> FourierVectorField {
    let col = |x: &FourierVectorField| [x.clone(), x.derivative(), x.nth_derivative(2)];
    let (a, b, c) = (col(f), col(g), col(h));
    let minor = |i: usize, j: usize| b[i].product(&c[j]).sub(&b[j].product(&c[i]));
    a[0].product(&minor(1, 2))
        .sub(&a[1].product(&minor(0, 2)))
        .add(&a[2].product(&minor(0, 1)))
}

/// Pointwise expressions whose evaluation at a point or integral over the
/// circle gives the cocycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Density {
    /// `det (f g h; f′ g′ h′; f″ g″ h″)`.
    Theta,
    /// `f g h‴ − f g‴ h`.
    ThetaTilde,
    /// `l′ · det (f g h; …)`.
    Alpha,
    /// `f′ g″ − f″ g′`.
    Omega,
    /// `l′ (f′ g″ − f″ g′)`.
    Beta1,
}

impl Density {
    pub fn arity(self) -> usize {
        match self {
            Density::Omega => 2,
            Density::Theta | Density::ThetaTilde | Density::Beta1 => 3,
            Density::Alpha => 4,
        }
    }

    /// The expression as a trigonometric polynomial in `φ`.
    pub fn eval(self, fields: &[FourierVectorField]) -> FourierVectorField {
        assert_eq!(
            fields.len(),
            self.arity(),
            "{self:?} takes {} arguments",
            self.arity()
        );
        match self {
            Density::Theta => det3(&fields[0], &fields[1], &fields[2]),
            Density::ThetaTilde => {
                let fg = fields[0].product(&fields[1]);
                let fh = fields[0].product(&fields[2]);
                fg.product(&fields[2].nth_derivative(3))
                    .sub(&fh.product(&fields[1].nth_derivative(3)))
            }
            Density::Alpha => fields[0]
                .derivative()
                .product(&det3(&fields[1], &fields[2], &fields[3])),
            Density::Omega => det2(&fields[0], &fields[1]),
            Density::Beta1 => fields[0]
                .derivative()
                .product(&det2(&fields[1], &fields[2])),
        }
    }
}

/// `ω(F, G) = (1/2π) ∮ (f′g″ − f″g′) dφ`.
pub fn omega(f: &FourierVectorField, g: &FourierVectorField) -> G {
    Density::Omega
        .eval(&[f.clone(), g.clone()])
        .normalized_integral()
}

/// `β₁(L, F, G) = (1/2π) ∮ l′ (f′g″ − f″g′) dφ`.
pub fn beta1(l: &FourierVectorField, f: &FourierVectorField, g: &FourierVectorField) -> G {
    Density::Beta1
        .eval(&[l.clone(), f.clone(), g.clone()])
        .normalized_integral()
}

/// The Godbillon-Vey determinant at `φ = 0`.
pub fn theta_local(f: &FourierVectorField, g: &FourierVectorField, h: &FourierVectorField) -> G {
    Density::Theta
        .eval(&[f.clone(), g.clone(), h.clone()])
        .value_at_zero()
}

/// `l′(0)` times the Godbillon-Vey determinant at `φ = 0`.
pub fn alpha_local(
    l: &FourierVectorField,
    f: &FourierVectorField,
    g: &FourierVectorField,
    h: &FourierVectorField,
) -> G {
    Density::Alpha
        .eval(&[l.clone(), f.clone(), g.clone(), h.clone()])
        .value_at_zero()
}

/// The local families that [`integral_contraction`] accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalFamily {
    Theta,
    ThetaTilde,
    Alpha,
}

impl LocalFamily {
    pub fn density(self) -> Density {
        match self {
            LocalFamily::Theta => Density::Theta,
            LocalFamily::ThetaTilde => Density::ThetaTilde,
            LocalFamily::Alpha => Density::Alpha,
        }
    }
}

/// How a density becomes a cochain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// Evaluated at `φ = 0`.
    AtZero,
    /// Integrated over the circle.
    Integrated,
    /// Last slot filled with `e₀`, then integrated.
    Contracted,
}

/// A cochain on the Witt algebra given by a density and a reading,
/// evaluated on basis tuples `(e_{k₁}, …)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WittCocycle {
    pub density: Density,
    pub reading: Reading,
}

impl WittCocycle {
    pub const OMEGA: WittCocycle = WittCocycle {
        density: Density::Omega,
        reading: Reading::Integrated,
    };
    pub const BETA1: WittCocycle = WittCocycle {
        density: Density::Beta1,
        reading: Reading::Integrated,
    };
    pub const THETA: WittCocycle = WittCocycle {
        density: Density::Theta,
        reading: Reading::AtZero,
    };
    pub const THETA_TILDE: WittCocycle = WittCocycle {
        density: Density::ThetaTilde,
        reading: Reading::AtZero,
    };
    pub const ALPHA: WittCocycle = WittCocycle {
        density: Density::Alpha,
        reading: Reading::AtZero,
    };

    /// Registered names: `theta`, `theta-tilde`, `alpha`, `omega`, `beta1`.
    pub fn by_name(name: &str) -> Result<WittCocycle, WittError> {
        Ok(match name {
            "theta" => Self::THETA,
            "theta-tilde" => Self::THETA_TILDE,
            "alpha" => Self::ALPHA,
            "omega" => Self::OMEGA,
            "beta1" => Self::BETA1,
            other => return Err(WittError::UnknownCocycle(other.to_string())),
        })
    }

    pub const NAMES: [&'static str; 5] = ["theta", "theta-tilde", "alpha", "omega", "beta1"];

    /// Evaluation on arbitrary trigonometric fields.
    pub fn eval_fields(&self, fields: &[FourierVectorField]) -> G {
        match self.reading {
            Reading::AtZero => self.density.eval(fields).value_at_zero(),
            Reading::Integrated => self.density.eval(fields).normalized_integral(),
            Reading::Contracted => {
                let mut args = fields.to_vec();
                args.push(FourierVectorField::basis(0));
                self.density.eval(&args).normalized_integral()
            }
        }
    }
}

impl Functional for WittCocycle {
    fn degree(&self) -> usize {
        match self.reading {
            Reading::Contracted => self.density.arity() - 1,
            _ => self.density.arity(),
        }
    }

    fn eval(&self, args: &[i64]) -> G {
        let fields: Vec<FourierVectorField> =
            args.iter().map(|&k| FourierVectorField::basis(k)).collect();
        self.eval_fields(&fields)
    }
}

/// `i_{e₀} ∮ γ_φ dφ`: rotate the evaluation point through the circle,
/// integrate, and put `e₀` in the last slot.
pub fn integral_contraction(family: LocalFamily) -> WittCocycle {
    WittCocycle {
        density: family.density(),
        reading: Reading::Contracted,
    }
}

/// A functional with one value replaced, for negative controls.
pub struct Perturbed<'a> {
    pub inner: &'a dyn Functional,
    pub at: MultiIndex,
    pub delta: G,
}

impl Functional for Perturbed<'_> {
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn eval(&self, args: &[i64]) -> G {
        let v = self.inner.eval(args);
        if args == self.at.as_slice() {
            v.add(&self.delta)
        } else {
            v
        }
    }
}

/// Pullback of a W₁ cochain along the Taylor expansion at `φ = 0`.
///
/// With the bracket `[e_k, e_l] = (k − l)e_{k+l}` on both sides the jet map
/// preserving brackets is `F ↦ −Σ f^{(k+1)}(0)/(k+1)! · e_k`, so on a
/// degree-`n` cochain the pullback differs from the naive "same local
/// formula" by `(−1)^n`.
#[derive(Clone, Debug)]
pub struct TaylorPullback {
    cochain: Cochain,
    max_order: usize,
}

pub fn taylor_pullback(c: &Cochain) -> Result<TaylorPullback, WittError> {
    if c.theory() != Theory::Leibniz {
        return Err(WittError::NotLeibniz(c.theory()));
    }
    let max_order = c
        .entries()
        .keys()
        .flatten()
        .map(|&k| (k + 1).max(0) as usize)
        .max()
        .unwrap_or(0);
    Ok(TaylorPullback {
        cochain: c.clone(),
        max_order,
    })
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

impl TaylorPullback {
    /// W₁ coordinates `k ↦ −f^{(k+1)}(0)/(k+1)!` for `k ≤ max_order − 1`.
    fn coordinates(&self, f: &FourierVectorField) -> BTreeMap<i64, G> {
        let mut out = BTreeMap::new();
        let mut d = f.clone();
        for j in 0..=self.max_order {
            let v = d.value_at_zero();
            if !v.is_zero() {
                out.insert(
                    j as i64 - 1,
                    v.mul(&G::from(Rational::new((-1).into(), factorial(j).into()))),
                );
            }
            d = d.derivative();
        }
        out
    }

    pub fn eval_fields(&self, fields: &[FourierVectorField]) -> G {
        let coords: Vec<BTreeMap<i64, G>> = fields.iter().map(|f| self.coordinates(f)).collect();
        let mut acc = G::zero();
        for (idx, v) in self.cochain.entries() {
            let mut term = v.clone();
            for (slot, k) in idx.iter().enumerate() {
                match coords[slot].get(k) {
                    Some(c) => term = term.mul(c),
                    None => {
                        term = G::zero();
                        break;
                    }
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl Functional for TaylorPullback {
    fn degree(&self) -> usize {
        self.cochain.degree()
    }

    fn eval(&self, args: &[i64]) -> G {
        let fields: Vec<FourierVectorField> =
            args.iter().map(|&k| FourierVectorField::basis(k)).collect();
        self.eval_fields(&fields)
    }
}

/// All tuples of length `n` with entries in `[−window, window]`.
pub fn window_tuples(n: usize, window: i64) -> Vec<MultiIndex> {
    let side = (2 * window + 1) as usize;
    let count = side.pow(n as u32);
    (0..count)
        .map(|mut code| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = (code % side) as i64 - window;
                code /= side;
            }
            t
        })
        .collect()
}

/// Witt window large enough for every bracket of two window elements.
pub fn guarded_witt(window: i64) -> Result<GradedLieAlgebra, WittError> {
    if window < 1 {
        return Err(WittError::WindowTooSmall {
            window,
            required: 1,
        });
    }
    Ok(builtin("witt", 2 * window)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct CocycleCheck {
    pub degree: usize,
    pub window: i64,
    /// Window of structure constants used for brackets.
    pub guard_band: i64,
    pub tuples_checked: usize,
    /// Tuples where the coboundary does not vanish, with its value.
    pub violations: Vec<(MultiIndex, String)>,
}

impl CocycleCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the Leibniz coboundary of `f` vanishes on every
/// `(deg f + 1)`-tuple of basis elements `e_k` with `|k| ≤ window`.
pub fn verify_cocycle(f: &dyn Functional, window: i64) -> Result<CocycleCheck, WittError> {
    let alg = guarded_witt(window)?;
    let tuples = window_tuples(f.degree() + 1, window);
    let results: Vec<Result<Option<(MultiIndex, String)>, AlgebraError>> = tuples
        .par_iter()
        .map(|t| {
            let v = cochain::leibniz_d_at(f, &alg, t)?;
            Ok((!v.is_zero()).then(|| (t.clone(), v.to_string())))
        })
        .collect();
    let mut violations = Vec::new();
    for r in results {
        if let Some(v) = r? {
            violations.push(v);
        }
    }
    Ok(CocycleCheck {
        degree: f.degree(),
        window,
        guard_band: 2 * window,
        tuples_checked: tuples.len(),
        violations,
    })
}

/// Outcome of [`certify_nontrivial`].
#[derive(Clone, Debug, PartialEq)]
pub enum WindowDecision {
    /// No zero-weight cochain has coboundary matching `f` on the window;
    /// the certificate is a combination of window tuples killed by every
    /// coboundary and pairing to 1 with `f`.
    NotExact { certificate: Vec<(MultiIndex, G)> },
    /// A zero-weight primitive reproducing `f` on the window.
    PrimitiveCandidate { primitive: Cochain },
}

impl WindowDecision {
    pub fn is_nontrivial(&self) -> bool {
        matches!(self, WindowDecision::NotExact { .. })
    }
}

/// Solves `f = d x` on the zero-weight window tuples of degree `deg f`, with
/// `x` ranging over zero-weight Leibniz cochains on the guard band.
/// Infeasibility on the window implies `f` is not exact, since any global
/// primitive restricts to a solution; nonzero-weight parts of a cocycle are
/// always exact, so only zero weight is examined.
pub fn certify_nontrivial(f: &dyn Functional, window: i64) -> Result<WindowDecision, WittError> {
    let n = f.degree();
    if n == 0 {
        return Err(CochainError::DegreeZero.into());
    }
    let alg = guarded_witt(window)?;
    let source = weight_basis(&alg, n - 1, 0, Theory::Leibniz)?;
    let target: Vec<MultiIndex> = weight_basis(&alg, n, 0, Theory::Leibniz)?
        .into_iter()
        .filter(|t| t.iter().all(|k| k.abs() <= window))
        .collect();
    let m = slice_matrix(&alg, Theory::Leibniz, &source, &target)?;
    let b = SparseVector::from_dense(&target.iter().map(|t| f.eval(t)).collect::<Vec<_>>());
    Ok(match linalg::solve(&m, &b) {
        Solution::Feasible(x) => WindowDecision::PrimitiveCandidate {
            primitive: Cochain::from_coordinates(n - 1, Theory::Leibniz, &source, &x.to_dense()),
        },
        Solution::Infeasible(y) => WindowDecision::NotExact {
            certificate: y
                .entries()
                .iter()
                .map(|(i, v)| (target[*i].clone(), v.clone()))
                .collect(),
        },
    })
}

/// Result of comparing two functionals up to a global scalar.
#[derive(Clone, Debug, Serialize)]
pub struct ScalarComparison {
    pub tuples_checked: usize,
    /// `lhs = scalar · rhs` on every tuple, when such a scalar exists.
    pub scalar: Option<String>,
    pub mismatches: Vec<MultiIndex>,
}

impl ScalarComparison {
    pub fn passed(&self) -> bool {
        self.scalar.is_some() && self.mismatches.is_empty()
    }
}

/// Finds the scalar `s` with `lhs(t) = s·rhs(t)` on all `tuples`. A pair of
/// identically zero functionals has no meaningful scalar and fails.
pub fn compare_up_to_scalar(
    lhs: impl Fn(&[i64]) -> G + Sync,
    rhs: impl Fn(&[i64]) -> G + Sync,
    tuples: &[MultiIndex],
) -> ScalarComparison {
    let values: Vec<(G, G)> = tuples.par_iter().map(|t| (lhs(t), rhs(t))).collect();
    let scalar = values
        .iter()
        .find(|(_, r)| !r.is_zero())
        .map(|(l, r)| l.mul(&r.inv()));
    let mismatches = match &scalar {
        Some(s) if !s.is_zero() => tuples
            .iter()
            .zip(&values)
            .filter(|(_, (l, r))| *l != s.mul(r))
            .map(|(t, _)| t.clone())
            .collect(),
        _ => tuples
            .iter()
            .zip(&values)
            .filter(|(_, (l, r))| l != r || !l.is_zero())
            .map(|(t, _)| t.clone())
            .collect(),
    };
    ScalarComparison {
        tuples_checked: tuples.len(),
        scalar: scalar.filter(|s| !s.is_zero()).map(|s| s.to_string()),
        mismatches,
    }
}

/// Leibniz coboundary of a field-level density, as a trigonometric
/// polynomial: `Σ_{i<j} (−1)^{j+1} γ(F₁, …, [F_i, F_j], …, F̂_j, …)` (1-based).
pub fn density_coboundary(density: Density, fields: &[FourierVectorField]) -> FourierVectorField {
    let mut acc = FourierVectorField::zero();
    for j in 1..fields.len() {
        for i in 0..j {
            let mut args: Vec<FourierVectorField> = fields[..j].to_vec();
            args[i] = fields[i].bracket(&fields[j]);
            args.extend_from_slice(&fields[j + 1..]);
            let term = density.eval(&args);
            acc = if j % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
    }
    acc
}

#[derive(Clone, Debug, Serialize)]
pub struct SecondMethodCheck {
    pub identity: &'static str,
    pub window: i64,
    pub tuples_checked: usize,
    /// `d/dφ γ_φ = scalar · d(primitive density)` on every tuple. With the
    /// coboundary sign used here it is `−1` for θ and `1` for α.
    pub scalar: Option<String>,
    /// Tuples where the two trigonometric polynomials are not related by
    /// the scalar.
    pub mismatches: Vec<MultiIndex>,
}

impl SecondMethodCheck {
    pub fn passed(&self) -> bool {
        self.scalar.is_some() && self.mismatches.is_empty()
    }
}

fn second_method(
    identity: &'static str,
    local: Density,
    primitive: Density,
    window: i64,
) -> SecondMethodCheck {
    let tuples = window_tuples(local.arity(), window);
    let sides: Vec<(FourierVectorField, FourierVectorField)> = tuples
        .par_iter()
        .map(|t| {
            let fields: Vec<FourierVectorField> =
                t.iter().map(|&k| FourierVectorField::basis(k)).collect();
            (
                local.eval(&fields).derivative(),
                density_coboundary(primitive, &fields),
            )
        })
        .collect();
    let scalar = sides.iter().find(|(_, r)| !r.is_zero()).map(|(l, r)| {
        let (k, v) = r.modes().iter().next().unwrap();
        l.mode(*k).mul(&v.inv())
    });
    let mismatches = tuples
        .iter()
        .zip(&sides)
        .filter(|(_, (l, r))| match &scalar {
            Some(s) => *l != r.scale(s),
            None => !l.is_zero(),
        })
        .map(|(t, _)| t.clone())
        .collect();
    SecondMethodCheck {
        identity,
        window,
        tuples_checked: tuples.len(),
        scalar: scalar.filter(|s| !s.is_zero()).map(|s| s.to_string()),
        mismatches,
    }
}

/// `d/dφ θ_φ ∝ d(f′g″ − f″g′)` on triples with `|k| ≤ theta_window` and
/// `d/dφ α_φ ∝ d(l′(f′g″ − f″g′))` on quadruples with `|k| ≤ alpha_window`,
/// both as identities of trigonometric polynomials, mode by mode.
pub fn verify_second_method(theta_window: i64, alpha_window: i64) -> [SecondMethodCheck; 2] {
    [
        second_method(
            "d/dphi theta_phi = s d(omega density)",
            Density::Theta,
            Density::Omega,
            theta_window,
        ),
        second_method(
            "d/dphi alpha_phi = s d(beta1 density)",
            Density::Alpha,
            Density::Beta1,
            alpha_window,
        ),
    ]
}
