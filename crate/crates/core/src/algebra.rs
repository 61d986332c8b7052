//! Thinly graded Lie algebras: one basis vector `e_k` per weight `k`, with
//! `[e_a, e_b] = c(a, b) · e_{a+b}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::{Field, GaussianRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unknown builtin algebra {0:?} (expected w1, witt, sl2, abelian<n>, heisenberg)")]
    UnknownBuiltin(String),
    #[error("window must be at least 1, got {0}")]
    WindowTooSmall(i64),
    #[error("bracket [e_{a}, e_{b}] leaves the weight window (|{a} + {b}| > {radius})")]
    Escaped { a: i64, b: i64, radius: i64 },
    #[error("bracket [e_{a}, e_{b}] is nonzero but weight {} is not in the support", a + b)]
    NotClosed { a: i64, b: i64 },
    #[error("invalid algebra spec: {0}")]
    Spec(String),
}

/// Set of weights carrying a basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Support {
    Finite(BTreeSet<i64>),
    /// All integers `>= min`.
    BoundedBelow(i64),
    /// The weights `-radius..=radius` viewed as a window into ℤ. Brackets
    /// whose weight leaves the window are reported as escaped.
    Window(i64),
}

impl Support {
    pub fn contains(&self, k: i64) -> bool {
        match self {
            Support::Finite(s) => s.contains(&k),
            Support::BoundedBelow(m) => k >= *m,
            Support::Window(n) => k.abs() <= *n,
        }
    }

    pub fn min(&self) -> Option<i64> {
        match self {
            Support::Finite(s) => s.first().copied(),
            Support::BoundedBelow(m) => Some(*m),
            Support::Window(n) => Some(-n),
        }
    }

    /// Largest weight, if bounded above.
    pub fn max(&self) -> Option<i64> {
        match self {
            Support::Finite(s) => s.last().copied(),
            Support::BoundedBelow(_) => None,
            Support::Window(n) => Some(*n),
        }
    }

    /// Weights of the support inside `lo..=hi`, ascending.
    pub fn weights_between(&self, lo: i64, hi: i64) -> Vec<i64> {
        if lo > hi {
            return Vec::new();
        }
        match self {
            Support::Finite(s) => s.range(lo..=hi).copied().collect(),
            _ => {
                let lo = lo.max(self.min().unwrap_or(lo));
                let hi = hi.min(self.max().unwrap_or(hi));
                (lo..=hi).collect()
            }
        }
    }
}

/// How structure constants are produced.
#[derive(Clone, Debug, PartialEq)]
pub enum BracketRule {
    /// `c(a, b) = a − b`, the rule of W₁ and the Witt algebra.
    Difference,
    /// Explicit table. A missing `(a, b)` falls back to `−c(b, a)`, then 0.
    Table(BTreeMap<(i64, i64), GaussianRational>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedLieAlgebra {
    name: String,
    support: Support,
    rule: BracketRule,
}

impl GradedLieAlgebra {
    pub fn new(name: impl Into<String>, support: Support, rule: BracketRule) -> Self {
        GradedLieAlgebra {
            name: name.into(),
            support,
            rule,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn rule(&self) -> &BracketRule {
        &self.rule
    }

    pub fn contains(&self, k: i64) -> bool {
        self.support.contains(k)
    }

    /// Whether the Euler element `e_0` is a basis vector.
    pub fn has_euler(&self) -> bool {
        self.contains(0)
    }

    pub fn is_windowed(&self) -> bool {
        matches!(self.support, Support::Window(_))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.support, Support::Finite(_))
    }

    /// Raw structure constant `c(a, b)`, ignoring support membership of the
    /// result.
    pub fn constant(&self, a: i64, b: i64) -> GaussianRational {
        if !self.contains(a) || !self.contains(b) {
            return GaussianRational::zero();
        }
        match &self.rule {
            BracketRule::Difference => GaussianRational::from_int(a - b),
            BracketRule::Table(t) => match t.get(&(a, b)) {
                Some(v) => v.clone(),
                None => t
                    .get(&(b, a))
                    .map(Field::neg)
                    .unwrap_or_else(GaussianRational::zero),
            },
        }
    }

    /// `[e_a, e_b]` as `(weight, coefficient)`, `None` when it vanishes.
    /// Errors when the result is nonzero but falls outside the support.
    pub fn bracket(&self, a: i64, b: i64) -> Result<Option<(i64, GaussianRational)>, AlgebraError> {
        let c = self.constant(a, b);
        if c.is_zero() {
            return Ok(None);
        }
        if !self.contains(a + b) {
            return Err(match self.support {
                Support::Window(radius) => AlgebraError::Escaped { a, b, radius },
                _ => AlgebraError::NotClosed { a, b },
            });
        }
        Ok(Some((a + b, c)))
    }

    /// All splittings `w = a + b` with `a, b` in the support and
    /// `c(a, b) ≠ 0`.
    pub fn splittings(&self, w: i64) -> Vec<(i64, i64, GaussianRational)> {
        let candidates: Vec<i64> = match &self.support {
            Support::Finite(s) => s.iter().copied().collect(),
            Support::BoundedBelow(m) => (*m..=w - m).collect(),
            Support::Window(n) => ((w - n).max(-n)..=(w + n).min(*n)).collect(),
        };
        candidates
            .into_iter()
            .filter(|&a| self.contains(w - a))
            .filter_map(|a| {
                let c = self.constant(a, w - a);
                (!c.is_zero()).then_some((a, w - a, c))
            })
            .collect()
    }

    /// Weights of the support within `[-window, window]`.
    pub fn window_weights(&self, window: i64) -> Vec<i64> {
        self.support.weights_between(-window, window)
    }
}

impl fmt::Display for GradedLieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn table(entries: &[(i64, i64, i64)]) -> BracketRule {
    BracketRule::Table(
        entries
            .iter()
            .map(|&(a, b, v)| ((a, b), GaussianRational::from_int(v)))
            .collect(),
    )
}

/// Built-in algebras. `window` is the radius of the Witt window and is
/// otherwise only range-checked.
///
/// * `w1`: weights `k ≥ −1`, `c(a, b) = a − b` (formal vector fields
///   `x^{k+1} d/dx`).
/// * `witt`: weights `|k| ≤ window`, `c(a, b) = a − b`.
/// * `sl2`: weights `{−2, 0, 2}` with `c(k, 0) = k` and `c(2, −2) = 1`.
/// * `abelian<n>`: `abelian1` is spanned by `e_0`; for `n ≥ 2` the weights
///   are `1..=n`. All brackets vanish.
/// * `heisenberg`: weights `{1, 2, 3}`, `[e_1, e_2] = e_3`.
pub fn builtin(name: &str, window: i64) -> Result<GradedLieAlgebra, AlgebraError> {
    if window < 1 {
        return Err(AlgebraError::WindowTooSmall(window));
    }
    let finite = |ws: &[i64]| Support::Finite(ws.iter().copied().collect());
    let alg = match name {
        "w1" => GradedLieAlgebra::new("w1", Support::BoundedBelow(-1), BracketRule::Difference),
        "witt" => GradedLieAlgebra::new("witt", Support::Window(window), BracketRule::Difference),
        "sl2" => GradedLieAlgebra::new(
            "sl2",
            finite(&[-2, 0, 2]),
            table(&[(2, -2, 1), (2, 0, 2), (-2, 0, -2)]),
        ),
        "heisenberg" => {
            GradedLieAlgebra::new("heisenberg", finite(&[1, 2, 3]), table(&[(1, 2, 1)]))
        }
        other => {
            let n: usize = other
                .strip_prefix("abelian")
                .map(|s| s.trim_start_matches(['(', '_']).trim_end_matches(')'))
                .and_then(|s| s.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| AlgebraError::UnknownBuiltin(other.to_string()))?;
            let support = if n == 1 {
                finite(&[0])
            } else {
                Support::Finite((1..=n as i64).collect())
            };
            GradedLieAlgebra::new(
                format!("abelian{n}"),
                support,
                BracketRule::Table(BTreeMap::new()),
            )
        }
    };
    Ok(alg)
}

/// Names accepted by [`builtin`] (with `abelian1` standing in for the family).
pub const BUILTIN_NAMES: &[&str] = &["w1", "witt", "sl2", "abelian1", "abelian2", "heisenberg"];

/// Result of [`validate`]. Violations are data, not errors.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub antisymmetry: Vec<(i64, i64)>,
    pub jacobi: Vec<(i64, i64, i64)>,
    /// Weights `k` with `c(k, 0) ≠ k` although `e_0` exists.
    pub euler: Vec<i64>,
    /// Nonzero brackets landing outside a finite or bounded-below support.
    pub closure: Vec<(i64, i64)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty()
            && self.jacobi.is_empty()
            && self.euler.is_empty()
            && self.closure.is_empty()
    }
}

/// Checks antisymmetry on all pairs and Jacobi on all triples of weights in
/// `[-window, window]`. Brackets leaving a Witt window are evaluated with
/// the closed-form rule, since the window is only a view of ℤ.
pub fn validate(alg: &GradedLieAlgebra, window: i64) -> ValidationReport {
    let ws = alg.window_weights(window);
    let mut report = ValidationReport::default();
    let c = |a: i64, b: i64| -> GaussianRational {
        match (&alg.rule, alg.is_windowed()) {
            (BracketRule::Difference, true) => GaussianRational::from_int(a - b),
            _ => alg.constant(a, b),
        }
    };
    for (i, &a) in ws.iter().enumerate() {
        for &b in &ws[i..] {
            if (c(a, b) + c(b, a)).is_zero() {
                continue;
            }
            report.antisymmetry.push((a, b));
        }
        for &b in &ws {
            if !alg.is_windowed() && !c(a, b).is_zero() && !alg.contains(a + b) {
                report.closure.push((a, b));
            }
        }
    }
    for (i, &a) in ws.iter().enumerate() {
        for (j, &b) in ws.iter().enumerate().skip(i) {
            for &cw in &ws[j..] {
                let s = &(&c(b, cw) * &c(a, b + cw)) + &(&c(cw, a) * &c(b, cw + a));
                let s = &s + &(&c(a, b) * &c(cw, a + b));
                if !s.is_zero() {
                    report.jacobi.push((a, b, cw));
                }
            }
        }
    }
    if alg.has_euler() {
        for &k in &ws {
            if c(k, 0) != GaussianRational::from_int(k) {
                report.euler.push(k);
            }
        }
    }
    report
}

/// On-disk algebra description (TOML).
///
/// ```toml
/// name = "my-algebra"
/// support = [1, 2, 3]          # or { min = -1 } or { window = 5 }
/// constants = [[1, 2, "1"]]    # or "k-l"
/// field = "gaussian-rational"  # optional, the only accepted value
/// ```
///
/// Table values are integers or exact strings such as `"3/2"` or
/// `"1/2+1 i"`. A table entry `(a, b)` implies `(b, a) = −value` unless
/// `(b, a)` is listed too.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub name: String,
    pub support: SupportSpec,
    pub constants: ConstantsSpec,
    #[serde(default = "default_field")]
    pub field: String,
}

fn default_field() -> String {
    "gaussian-rational".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SupportSpec {
    List(Vec<i64>),
    Min { min: i64 },
    Window { window: i64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstantsSpec {
    ClosedForm(String),
    Table(Vec<(i64, i64, ScalarLiteral)>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLiteral {
    Int(i64),
    Text(String),
}

impl ScalarLiteral {
    fn value(&self) -> Result<GaussianRational, AlgebraError> {
        match self {
            ScalarLiteral::Int(n) => Ok(GaussianRational::from_int(*n)),
            ScalarLiteral::Text(s) => s.parse().map_err(|e| AlgebraError::Spec(format!("{e}"))),
        }
    }
}

impl AlgebraSpec {
    pub fn parse_toml(text: &str) -> Result<Self, AlgebraError> {
        toml::from_str(text).map_err(|e| AlgebraError::Spec(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("algebra spec serializes")
    }

    /// Builds the algebra and rejects it unless it validates on the window
    /// `[-window, window]`.
    pub fn build(&self, window: i64) -> Result<GradedLieAlgebra, AlgebraError> {
        if self.field != "gaussian-rational" {
            return Err(AlgebraError::Spec(format!(
                "unsupported field {:?}",
                self.field
            )));
        }
        let support = match &self.support {
            SupportSpec::List(ws) => Support::Finite(ws.iter().copied().collect()),
            SupportSpec::Min { min } => Support::BoundedBelow(*min),
            SupportSpec::Window { window } if *window >= 1 => Support::Window(*window),
            SupportSpec::Window { window } => return Err(AlgebraError::WindowTooSmall(*window)),
        };
        let rule = match &self.constants {
            ConstantsSpec::ClosedForm(s) if s.replace(' ', "") == "k-l" => BracketRule::Difference,
            ConstantsSpec::ClosedForm(s) => {
                return Err(AlgebraError::Spec(format!("unknown closed form {s:?}")))
            }
            ConstantsSpec::Table(rows) => {
                let mut t = BTreeMap::new();
                for (a, b, v) in rows {
                    if !support.contains(*a) || !support.contains(*b) {
                        return Err(AlgebraError::Spec(format!(
                            "entry ({a}, {b}) outside the support"
                        )));
                    }
                    t.insert((*a, *b), v.value()?);
                }
                BracketRule::Table(t)
            }
        };
        let alg = GradedLieAlgebra::new(self.name.clone(), support, rule);
        let report = validate(&alg, window);
        if !report.is_valid() {
            return Err(AlgebraError::Spec(format!(
                "algebra fails validation: {report:?}"
            )));
        }
        Ok(alg)
    }
}
