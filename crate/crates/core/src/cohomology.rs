//! Cohomology dimensions and representatives, coboundary decisions, the
//! explicit W₁ cocycles and the diagonal assembly for `Vect S¹`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{BracketRule, GradedLieAlgebra, Support};
use crate::cochain::{
    self, slice_matrix, weight_basis, Cochain, CochainError, Functional, MultiIndex, Theory,
};
use crate::linalg::{self, Echelon, Solution, SparseMatrix};
use crate::scalar::{Field, GaussianRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error("the cochain is not a cocycle")]
    NotCocycle,
    #[error("{0} is not W1 (weights >= -1 with c(a, b) = a - b)")]
    NotW1(String),
    #[error("{algebra}: cohomology needs either an Euler element or a finite support")]
    NoFiniteReduction { algebra: String },
    #[error("{algebra} is a window into an infinite algebra; slices are only window-relative")]
    Windowed { algebra: String },
    #[error("the W1 table has {0} entries, too few for the requested degrees")]
    MissingTable(usize),
    #[error("degree {degree} slice has {size} basis elements (limit {limit})")]
    TooLarge {
        degree: usize,
        size: usize,
        limit: usize,
    },
}

/// Which cochains the engine works with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reduction {
    /// Euler-invariant cochains only, which compute the full cohomology.
    ZeroWeight,
    /// Every weight of a finite-dimensional algebra, summed.
    AllWeights,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    /// Dimension of the (reduced) cochain space.
    pub cochains: usize,
    /// Rank of the differential arriving in this degree.
    pub rank_in: usize,
    /// Rank of the differential leaving this degree.
    pub rank_out: usize,
    pub dim: usize,
    /// Cocycles spanning a complement of the coboundaries; empty when the
    /// degree exceeded the representative budget.
    pub representatives: Vec<Cochain>,
    pub representatives_computed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub algebra: String,
    pub theory: Theory,
    pub reduction: Reduction,
    pub degrees: Vec<DegreeReport>,
    /// Consecutive slice matrices were multiplied and found to compose to 0.
    pub d_squared_verified: bool,
    pub weight_reduction_applied: bool,
}

impl CohomologyReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }
}

#[derive(Clone, Debug)]
pub struct EngineOptions {
    /// Representatives are computed for degrees whose cochain space has at
    /// most this many basis elements (per weight slice).
    pub representative_budget: usize,
    pub verify_d_squared: bool,
    /// Largest slice basis the engine will build.
    pub max_slice_basis: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            representative_budget: 600,
            verify_d_squared: true,
            max_slice_basis: 250_000,
        }
    }
}

fn reduction_for(alg: &GradedLieAlgebra) -> Result<Reduction, CohomologyError> {
    if alg.is_windowed() {
        return Err(CohomologyError::Windowed {
            algebra: alg.name().to_string(),
        });
    }
    if alg.support().min().is_none() {
        return Err(CochainError::UnboundedBelow(alg.name().to_string()).into());
    }
    if alg.has_euler() {
        Ok(Reduction::ZeroWeight)
    } else if alg.is_finite() {
        Ok(Reduction::AllWeights)
    } else {
        Err(CohomologyError::NoFiniteReduction {
            algebra: alg.name().to_string(),
        })
    }
}

/// Weight sums whose slices can be nonzero in degrees `0..=top`.
fn weight_sums(alg: &GradedLieAlgebra, reduction: Reduction, top: usize) -> Vec<i64> {
    match reduction {
        Reduction::ZeroWeight => vec![0],
        Reduction::AllWeights => {
            let lo = alg.support().min().unwrap();
            let hi = alg.support().max().unwrap();
            let t = top as i64;
            ((lo * t).min(0)..=(hi * t).max(0)).collect()
        }
    }
}

struct WeightComplex {
    bases: Vec<Vec<MultiIndex>>,
    /// `matrices[n]` maps degree `n` to degree `n + 1`.
    matrices: Vec<SparseMatrix<GaussianRational>>,
    ranks: Vec<usize>,
}

fn weight_complex(
    alg: &GradedLieAlgebra,
    theory: Theory,
    weight_sum: i64,
    max_degree: usize,
    limit: usize,
) -> Result<WeightComplex, CohomologyError> {
    let mut bases: Vec<Vec<MultiIndex>> = Vec::with_capacity(max_degree + 2);
    for n in 0..=max_degree + 1 {
        let size = cochain::weight_basis_len(alg, n, weight_sum, theory)?;
        if size > limit as u128 {
            return Err(CohomologyError::TooLarge {
                degree: n,
                size: size.min(usize::MAX as u128) as usize,
                limit,
            });
        }
        bases.push(weight_basis(alg, n, weight_sum, theory)?);
    }
    let matrices: Vec<SparseMatrix<GaussianRational>> = (0..=max_degree)
        .into_par_iter()
        .map(|n| slice_matrix(alg, theory, &bases[n], &bases[n + 1]))
        .collect::<Result<_, _>>()?;
    let ranks = matrices.par_iter().map(linalg::rank).collect();
    Ok(WeightComplex {
        bases,
        matrices,
        ranks,
    })
}

/// Cocycles of `incoming`'s target spanning a complement of its image,
/// taken from the kernel of `outgoing` in elimination order.
fn representatives(
    incoming: Option<&SparseMatrix<GaussianRational>>,
    outgoing: &SparseMatrix<GaussianRational>,
    degree: usize,
    theory: Theory,
    basis: &[MultiIndex],
) -> Vec<Cochain> {
    let kernel = linalg::kernel_basis(outgoing);
    let mut span: Echelon<GaussianRational> = Echelon::new(outgoing.cols());
    if let Some(m) = incoming {
        for r in 0..m.cols() {
            span.insert(m.column(r).entries().to_vec());
        }
    }
    let mut reps = Vec::new();
    for v in kernel {
        if span.insert(v.entries().to_vec()) {
            reps.push(Cochain::from_coordinates(
                degree,
                theory,
                basis,
                &v.to_dense(),
            ));
        }
    }
    reps
}

/// Cohomology in degrees `0..=max_degree` with default options.
pub fn cohomology_dims(
    alg: &GradedLieAlgebra,
    theory: Theory,
    max_degree: usize,
) -> Result<CohomologyReport, CohomologyError> {
    cohomology_with(alg, theory, max_degree, &EngineOptions::default())
}

/// Cohomology in degrees `0..=max_degree`. With an Euler element only the
/// zero-weight subcomplex is used, which computes the whole cohomology;
/// finite algebras without one are handled weight by weight.
pub fn cohomology_with(
    alg: &GradedLieAlgebra,
    theory: Theory,
    max_degree: usize,
    opts: &EngineOptions,
) -> Result<CohomologyReport, CohomologyError> {
    let reduction = reduction_for(alg)?;
    let mut degrees: Vec<DegreeReport> = (0..=max_degree)
        .map(|degree| DegreeReport {
            degree,
            cochains: 0,
            rank_in: 0,
            rank_out: 0,
            dim: 0,
            representatives: Vec::new(),
            representatives_computed: true,
        })
        .collect();
    let mut d_squared = true;
    for w in weight_sums(alg, reduction, max_degree + 1) {
        let cx = weight_complex(alg, theory, w, max_degree, opts.max_slice_basis)?;
        if opts.verify_d_squared {
            d_squared &= (1..cx.matrices.len())
                .into_par_iter()
                .all(|n| cx.matrices[n].mul(&cx.matrices[n - 1]).is_zero());
        }
        for (n, rep) in degrees.iter_mut().enumerate() {
            let size = cx.bases[n].len();
            if size == 0 {
                continue;
            }
            let rank_in = if n == 0 { 0 } else { cx.ranks[n - 1] };
            let dim = size - cx.ranks[n] - rank_in;
            rep.cochains += size;
            rep.rank_in += rank_in;
            rep.rank_out += cx.ranks[n];
            rep.dim += dim;
            if dim == 0 {
                continue;
            }
            if size <= opts.representative_budget {
                let incoming = (n > 0).then(|| &cx.matrices[n - 1]);
                rep.representatives.extend(representatives(
                    incoming,
                    &cx.matrices[n],
                    n,
                    theory,
                    &cx.bases[n],
                ));
            } else {
                rep.representatives_computed = false;
            }
        }
    }
    Ok(CohomologyReport {
        algebra: alg.name().to_string(),
        theory,
        reduction,
        degrees,
        d_squared_verified: opts.verify_d_squared && d_squared,
        weight_reduction_applied: reduction == Reduction::ZeroWeight,
    })
}

/// Answer of [`is_coboundary`].
#[derive(Clone, Debug, PartialEq)]
pub enum CoboundaryDecision {
    /// `d(primitive) = c`.
    Exact { primitive: Cochain },
    /// `c` is not exact: `certificate` is a chain (weighted multi-indices)
    /// annihilated by every coboundary and pairing to 1 with `c`.
    NotExact {
        certificate: Vec<(MultiIndex, GaussianRational)>,
    },
}

impl CoboundaryDecision {
    pub fn is_exact(&self) -> bool {
        matches!(self, CoboundaryDecision::Exact { .. })
    }

    pub fn primitive(&self) -> Option<&Cochain> {
        match self {
            CoboundaryDecision::Exact { primitive } => Some(primitive),
            CoboundaryDecision::NotExact { .. } => None,
        }
    }
}

/// Pairing of a chain with a cochain.
pub fn pair(chain: &[(MultiIndex, GaussianRational)], c: &dyn Functional) -> GaussianRational {
    chain.iter().fold(GaussianRational::zero(), |acc, (k, v)| {
        acc.add(&v.mul(&c.eval(k)))
    })
}

/// Decides whether the cocycle `c` is a coboundary by solving `d x = c` on
/// each weight slice of degree `deg c − 1`.
pub fn is_coboundary(
    c: &Cochain,
    alg: &GradedLieAlgebra,
) -> Result<CoboundaryDecision, CohomologyError> {
    if !cochain::d(c, alg)?.is_zero() {
        return Err(CohomologyError::NotCocycle);
    }
    let n = c.degree();
    let theory = c.theory();
    if n == 0 {
        return Ok(if c.is_zero() {
            CoboundaryDecision::Exact {
                primitive: Cochain::zero(0, theory),
            }
        } else {
            CoboundaryDecision::NotExact {
                certificate: vec![(Vec::new(), c.eval(&[]).inv())],
            }
        });
    }
    let mut primitive = Cochain::zero(n - 1, theory);
    for (w, part) in c.weight_components() {
        let source = weight_basis(alg, n - 1, w, theory)?;
        let rows = weight_basis(alg, n, w, theory)?;
        let m = slice_matrix(alg, theory, &source, &rows)?;
        let b = linalg::SparseVector::from_dense(&part.coordinates(&rows));
        match linalg::solve(&m, &b) {
            Solution::Feasible(x) => {
                primitive = primitive.add(&Cochain::from_coordinates(
                    n - 1,
                    theory,
                    &source,
                    &x.to_dense(),
                ));
            }
            Solution::Infeasible(y) => {
                let certificate = y
                    .entries()
                    .iter()
                    .map(|(i, v)| (rows[*i].clone(), v.clone()))
                    .collect();
                return Ok(CoboundaryDecision::NotExact { certificate });
            }
        }
    }
    debug_assert_eq!(cochain::d(&primitive, alg)?, *c);
    Ok(CoboundaryDecision::Exact { primitive })
}

/// `Some(s)` with `b − s·a` exact, when such a scalar exists; `a` must not
/// be exact itself.
pub fn cohomologous_up_to_scalar(
    a: &Cochain,
    b: &Cochain,
    alg: &GradedLieAlgebra,
) -> Result<Option<GaussianRational>, CohomologyError> {
    let cert = match is_coboundary(a, alg)? {
        CoboundaryDecision::NotExact { certificate } => certificate,
        CoboundaryDecision::Exact { .. } => return Ok(None),
    };
    // the certificate pairs to 1 with a, so the only candidate is ⟨cert, b⟩
    let s = pair(&cert, b);
    let diff = b.sub(&a.scale(&s));
    Ok(is_coboundary(&diff, alg)?.is_exact().then_some(s))
}

fn require_w1(alg: &GradedLieAlgebra) -> Result<(), CohomologyError> {
    if matches!(alg.support(), Support::BoundedBelow(-1))
        && matches!(alg.rule(), BracketRule::Difference)
    {
        Ok(())
    } else {
        Err(CohomologyError::NotW1(alg.name().to_string()))
    }
}

/// Jet data `(f(0), f'(0), f''(0))` of `e_k = x^{k+1} d/dx`.
fn w1_jet(k: i64) -> [i64; 3] {
    match k {
        -1 => [1, 0, 0],
        0 => [0, 1, 0],
        1 => [0, 0, 2],
        _ => [0, 0, 0],
    }
}

fn det3(c: [[i64; 3]; 3]) -> i64 {
    c[0][0] * (c[1][1] * c[2][2] - c[2][1] * c[1][2])
        - c[1][0] * (c[0][1] * c[2][2] - c[2][1] * c[0][2])
        + c[2][0] * (c[0][1] * c[1][2] - c[1][1] * c[0][2])
}

/// Godbillon-Vey cocycle on W₁: the determinant with columns
/// `(f, f', f'')(0)` of the three arguments.
pub fn theta_cocycle(alg: &GradedLieAlgebra, theory: Theory) -> Result<Cochain, CohomologyError> {
    require_w1(alg)?;
    let mut entries = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -1..=1 {
                let v = det3([w1_jet(a), w1_jet(b), w1_jet(c)]);
                if v != 0 {
                    entries.push((vec![a, b, c], GaussianRational::from_int(v)));
                }
            }
        }
    }
    let leib = Cochain::from_entries(3, Theory::Leibniz, entries);
    Ok(match theory {
        Theory::Leibniz => leib,
        Theory::Lie => {
            Cochain::from_entries(3, Theory::Lie, [(vec![-1, 0, 1], leib.eval(&[-1, 0, 1]))])
        }
    })
}

/// The non-alternating form `(f g h''' − f g''' h)(0)` of the Godbillon-Vey
/// class in Leibniz cohomology.
pub fn theta_tilde_cocycle(alg: &GradedLieAlgebra) -> Result<Cochain, CohomologyError> {
    require_w1(alg)?;
    // f(0) = [a = −1], f'''(0) = 6·[a = 2]
    Ok(Cochain::from_entries(
        3,
        Theory::Leibniz,
        [
            (vec![-1, -1, 2], GaussianRational::from_int(6)),
            (vec![-1, 2, -1], GaussianRational::from_int(-6)),
        ],
    ))
}

/// The Leibniz 4-cocycle `α(L, F, G, H) = l'(0) · θ(F, G, H)` on W₁.
pub fn alpha_cocycle(alg: &GradedLieAlgebra) -> Result<Cochain, CohomologyError> {
    let theta = theta_cocycle(alg, Theory::Leibniz)?;
    Ok(Cochain::from_entries(
        4,
        Theory::Leibniz,
        theta.entries().iter().map(|(k, v)| {
            let mut idx = vec![0];
            idx.extend_from_slice(k);
            (idx, v.clone())
        }),
    ))
}

/// `dim HL^q(W₁)` from the structure `Λ[θ] ⊗ T[α]`: one class in every
/// degree `≡ 0, 3 (mod 4)`.
pub fn w1_closed_form_dim(q: usize) -> usize {
    usize::from(q.is_multiple_of(4) || q % 4 == 3)
}

/// Provenance of a class in the diagonal assembly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorLabel {
    pub name: String,
    /// `local` (pulled back from W₁) or `diagonal` (η ⊗ a W₁ class).
    pub kind: &'static str,
    /// Degree of the contributing W₁ class.
    pub w1_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagonalDegree {
    pub degree: usize,
    pub dim: usize,
    pub generators: Vec<GeneratorLabel>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagonalAssembly {
    pub max_degree: usize,
    pub w1_table: Vec<usize>,
    /// Degree 0 carries the ground field and sits outside the assembly.
    pub degree_zero: usize,
    pub degrees: Vec<DiagonalDegree>,
}

impl DiagonalAssembly {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }
}

fn local_label(q: usize) -> String {
    match q % 4 {
        3 if q == 3 => "θ".to_string(),
        3 if q == 7 => "θ∪α".to_string(),
        3 => format!("θ∪α^{}", (q - 3) / 4),
        0 if q == 4 => "α".to_string(),
        0 => format!("α^{}", q / 4),
        _ => format!("HL^{q}(W1)"),
    }
}

fn diagonal_label(q: usize) -> String {
    match q % 4 {
        3 if q == 3 => "ω_0 (Gelfand-Fuks)".to_string(),
        3 => format!("ω_{}", (q - 3) / 4),
        0 => format!("β_{}", q / 4),
        _ => format!("η⊗HL^{q}(W1)"),
    }
}

/// `dim HL^m_Δ(Vect S¹) = dim HL^m(W₁) + dim HL^{m+1}(W₁)` for `m ≥ 1`: the
/// two homology degrees of S¹ each contribute one copy of the W₁ table.
/// `w1_table[q]` must be present for `q ≤ max_degree + 1`.
pub fn diagonal_s1_dims(
    w1_table: &[usize],
    max_degree: usize,
) -> Result<DiagonalAssembly, CohomologyError> {
    if w1_table.len() < max_degree + 2 {
        return Err(CohomologyError::MissingTable(w1_table.len()));
    }
    let mut degrees = Vec::with_capacity(max_degree);
    for m in 1..=max_degree {
        let mut generators = Vec::new();
        for i in 0..w1_table[m] {
            let name = if w1_table[m] == 1 {
                local_label(m)
            } else {
                format!("{}#{i}", local_label(m))
            };
            generators.push(GeneratorLabel {
                name,
                kind: "local",
                w1_degree: m,
            });
        }
        for i in 0..w1_table[m + 1] {
            let base = diagonal_label(m + 1);
            let name = if w1_table[m + 1] == 1 {
                base
            } else {
                format!("{base}#{i}")
            };
            generators.push(GeneratorLabel {
                name,
                kind: "diagonal",
                w1_degree: m + 1,
            });
        }
        degrees.push(DiagonalDegree {
            degree: m,
            dim: w1_table[m] + w1_table[m + 1],
            generators,
        });
    }
    Ok(DiagonalAssembly {
        max_degree,
        w1_table: w1_table[..max_degree + 2].to_vec(),
        degree_zero: w1_table[0],
        degrees,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PirashviliRow {
    pub degree: usize,
    pub lie: usize,
    pub leibniz: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PirashviliReport {
    pub algebra: String,
    pub rows: Vec<PirashviliRow>,
    /// `HL⁰ = H⁰` and `HL¹ = H¹`.
    pub low_degrees_agree: bool,
    /// `dim H² ≤ dim HL²` (injectivity at the start of the long exact sequence).
    pub h2_injects: bool,
}

/// Side-by-side Lie and Leibniz dimensions with the low-degree comparisons.
pub fn pirashvili_report(
    alg: &GradedLieAlgebra,
    max_degree: usize,
) -> Result<PirashviliReport, CohomologyError> {
    let opts = EngineOptions {
        representative_budget: 0,
        verify_d_squared: false,
        ..Default::default()
    };
    let top = max_degree.max(2);
    let lie = cohomology_with(alg, Theory::Lie, top, &opts)?.dims();
    let leib = cohomology_with(alg, Theory::Leibniz, top, &opts)?.dims();
    let rows = (0..=top)
        .map(|n| PirashviliRow {
            degree: n,
            lie: lie[n],
            leibniz: leib[n],
        })
        .collect();
    Ok(PirashviliReport {
        algebra: alg.name().to_string(),
        rows,
        low_degrees_agree: lie[0] == leib[0] && lie[1] == leib[1],
        h2_injects: lie[2] <= leib[2],
    })
}
