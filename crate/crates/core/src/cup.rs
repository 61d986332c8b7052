//! The shuffle cup product on Leibniz cochains and the relations it
//! satisfies on W₁.
//!
//! `(a ∪ b)(x₁, …, x_{p+q}) = Σ_σ sgn σ · a(x₁, x_{σ(2)}, …, x_{σ(p)}) ·
//! b(x_{σ(p+1)}, …, x_{σ(p+q)})`, summed over the `(p−1, q)`-shuffles of
//! `{2, …, p+q}`. The first argument always feeds the left factor.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use crate::algebra::GradedLieAlgebra;
use crate::cochain::{self, Cochain, CochainError, Theory};
use crate::cohomology::{self, CoboundaryDecision, CohomologyError};
use crate::scalar::{Field, GaussianRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CupError {
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("(p-1, q)-shuffles need p >= 1")]
    DegreeZero,
    #[error("cup products are defined on Leibniz cochains, got a {0} cochain")]
    NotLeibniz(Theory),
    #[error("cup product would have {terms} terms (budget {budget})")]
    TooLarge { terms: u128, budget: u128 },
    #[error("input {0} is not a cocycle")]
    NotCocycle(usize),
}

impl From<CochainError> for CupError {
    fn from(e: CochainError) -> Self {
        CupError::Cohomology(e.into())
    }
}

/// A `(p−1, q)`-shuffle, stored through its images: `images[t] = σ(t + 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub images: Vec<usize>,
    pub sign: i64,
}

type ShuffleCache = RwLock<HashMap<(usize, usize), Arc<Vec<Shuffle>>>>;

fn cache() -> &'static ShuffleCache {
    static CACHE: OnceLock<ShuffleCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All `(p−1, q)`-shuffles of `{2, …, p+q}`, ordered lexicographically by
/// the positions taken by the left block.
pub fn shuffles(p: usize, q: usize) -> Result<Arc<Vec<Shuffle>>, CupError> {
    if p == 0 {
        return Err(CupError::DegreeZero);
    }
    if let Some(s) = cache().read().unwrap().get(&(p, q)) {
        return Ok(s.clone());
    }
    let built = Arc::new(enumerate_shuffles(p - 1, q));
    Ok(cache()
        .write()
        .unwrap()
        .entry((p, q))
        .or_insert(built)
        .clone())
}

fn enumerate_shuffles(left: usize, right: usize) -> Vec<Shuffle> {
    let n = left + right;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(left);
    choose(n, left, 0, &mut chosen, &mut |positions| {
        let mut images = vec![0; n];
        let mut is_left = vec![false; n];
        for (t, &pos) in positions.iter().enumerate() {
            images[t] = pos + 2;
            is_left[pos] = true;
        }
        let mut t = left;
        for pos in 0..n {
            if !is_left[pos] {
                images[t] = pos + 2;
                t += 1;
            }
        }
        // each left element passes the right elements placed before it
        let inversions: usize = positions.iter().enumerate().map(|(t, &pos)| pos - t).sum();
        out.push(Shuffle {
            images,
            sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        });
    });
    out
}

fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for pos in start..=n - (k - cur.len()) {
        cur.push(pos);
        choose(n, k, pos + 1, cur, f);
        cur.pop();
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Upper bound on the number of summands a cup product may touch.
pub const TERM_BUDGET: u128 = 50_000_000;

/// Shuffle cup product. A degree-0 left factor acts as a scalar.
pub fn cup(a: &Cochain, b: &Cochain) -> Result<Cochain, CupError> {
    for c in [a, b] {
        if c.theory() != Theory::Leibniz {
            return Err(CupError::NotLeibniz(c.theory()));
        }
    }
    let (p, q) = (a.degree(), b.degree());
    if p == 0 {
        return Ok(b.scale(
            &a.entries()
                .get(&Vec::new())
                .cloned()
                .unwrap_or_else(GaussianRational::zero),
        ));
    }
    let terms = a.len() as u128 * b.len() as u128 * binomial(p - 1 + q, q);
    if terms > TERM_BUDGET {
        return Err(CupError::TooLarge {
            terms,
            budget: TERM_BUDGET,
        });
    }
    let sh = shuffles(p, q)?;
    let mut acc: HashMap<Vec<i64>, GaussianRational> = HashMap::new();
    let mut x = vec![0i64; p + q];
    for (ka, va) in a.entries() {
        x[0] = ka[0];
        for (kb, vb) in b.entries() {
            let v = va.mul(vb);
            for s in sh.iter() {
                for t in 0..p - 1 {
                    x[s.images[t] - 1] = ka[t + 1];
                }
                for t in 0..q {
                    x[s.images[p - 1 + t] - 1] = kb[t];
                }
                let e = acc.entry(x.clone()).or_insert_with(GaussianRational::zero);
                *e = if s.sign > 0 { e.add(&v) } else { e.sub(&v) };
            }
        }
    }
    Ok(Cochain::from_entries(p + q, Theory::Leibniz, acc))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZinbielDefect {
    /// `(a∪b)∪c − a∪(b∪c) − (−1)^{|b||c|} a∪(c∪b)`.
    pub defect: Cochain,
    pub strict_zero: bool,
    pub decision: CoboundaryDecision,
}

/// Defect of the dual Leibniz relation on three cocycles. The exactness
/// decision is skipped (trivially exact) when the defect vanishes.
pub fn zinbiel_defect(
    a: &Cochain,
    b: &Cochain,
    c: &Cochain,
    alg: &GradedLieAlgebra,
) -> Result<ZinbielDefect, CupError> {
    for (i, x) in [a, b, c].into_iter().enumerate() {
        if !cochain::d(x, alg)?.is_zero() {
            return Err(CupError::NotCocycle(i));
        }
    }
    let lhs = cup(&cup(a, b)?, c)?;
    let assoc = cup(a, &cup(b, c)?)?;
    let mut swapped = cup(a, &cup(c, b)?)?;
    if (b.degree() * c.degree()) % 2 == 1 {
        swapped = swapped.scale(&GaussianRational::from_int(-1));
    }
    let defect = lhs.sub(&assoc).sub(&swapped);
    let strict_zero = defect.is_zero();
    let decision = if strict_zero {
        CoboundaryDecision::Exact {
            primitive: Cochain::zero(defect.degree() - 1, Theory::Leibniz),
        }
    } else {
        cohomology::is_coboundary(&defect, alg)?
    };
    Ok(ZinbielDefect {
        defect,
        strict_zero,
        decision,
    })
}

/// `α^k = α ∪ α^{k−1}` on W₁.
pub fn alpha_powers(alg: &GradedLieAlgebra, k: usize) -> Result<Cochain, CupError> {
    let alpha = cohomology::alpha_cocycle(alg)?;
    if k == 0 {
        return Ok(Cochain::scalar(Theory::Leibniz, GaussianRational::one()));
    }
    let mut power = alpha.clone();
    for _ in 1..k {
        power = cup(&alpha, &power)?;
    }
    Ok(power)
}

/// `θ ∪ α^k` on W₁.
pub fn theta_alpha(alg: &GradedLieAlgebra, k: usize) -> Result<Cochain, CupError> {
    let theta = cohomology::theta_cocycle(alg, Theory::Leibniz)?;
    if k == 0 {
        return Ok(theta);
    }
    cup(&theta, &alpha_powers(alg, k)?)
}

/// One line of the relation suite.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    pub detail: String,
}

fn check(relation: &str, passed: bool, detail: String) -> RelationCheck {
    RelationCheck {
        relation: relation.to_string(),
        passed,
        detail,
    }
}

fn vanishing(name: &str, c: &Cochain, alg: &GradedLieAlgebra) -> Result<RelationCheck, CupError> {
    if c.is_zero() {
        return Ok(check(name, true, "zero at cochain level".into()));
    }
    let exact = cohomology::is_coboundary(c, alg)?.is_exact();
    Ok(check(
        name,
        exact,
        format!(
            "nonzero cochain with {} entries; {}",
            c.len(),
            if exact { "exact" } else { "NOT exact" }
        ),
    ))
}

fn nontrivial(name: &str, c: &Cochain, alg: &GradedLieAlgebra) -> Result<RelationCheck, CupError> {
    let closed = cochain::d(c, alg)?.is_zero();
    if !closed || c.is_zero() {
        return Ok(check(
            name,
            false,
            format!("cocycle: {closed}, zero: {}", c.is_zero()),
        ));
    }
    let exact = cohomology::is_coboundary(c, alg)?.is_exact();
    Ok(check(
        name,
        !exact,
        format!(
            "degree {} cocycle with {} entries, {}",
            c.degree(),
            c.len(),
            if exact { "exact" } else { "not exact" }
        ),
    ))
}

/// The relations of W₁'s cup algebra: `θ² = 0`, `α ∪ θ = 0`, the dual
/// Leibniz relation on `(α, α, α)` (which gives `α²∪α = 2 α∪α²` since `α` is
/// even) and non-triviality of `α²` and `θ ∪ α`.
pub fn w1_relations(alg: &GradedLieAlgebra) -> Result<Vec<RelationCheck>, CupError> {
    let theta = cohomology::theta_cocycle(alg, Theory::Leibniz)?;
    let alpha = cohomology::alpha_cocycle(alg)?;
    let mut out = vec![
        vanishing("theta ∪ theta = 0", &cup(&theta, &theta)?, alg)?,
        vanishing("alpha ∪ theta = 0", &cup(&alpha, &theta)?, alg)?,
    ];
    let z = zinbiel_defect(&alpha, &alpha, &alpha, alg)?;
    out.push(check(
        "zinbiel defect (alpha, alpha, alpha) exact",
        z.decision.is_exact(),
        if z.strict_zero {
            "defect is zero at cochain level".into()
        } else {
            format!("defect has {} entries", z.defect.len())
        },
    ));
    let a2 = alpha_powers(alg, 2)?;
    let a2a = cup(&a2, &alpha)?;
    let a_a2 = cup(&alpha, &a2)?;
    let diff = a2a.sub(&a_a2.scale(&GaussianRational::from_int(2)));
    out.push(vanishing(
        "alpha^2 ∪ alpha = 2 alpha ∪ alpha^2",
        &diff,
        alg,
    )?);
    out.push(nontrivial("alpha^2 nontrivial", &a2, alg)?);
    out.push(nontrivial(
        "theta ∪ alpha nontrivial",
        &theta_alpha(alg, 1)?,
        alg,
    )?);
    Ok(out)
}
