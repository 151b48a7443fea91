//! Hilbert functions and stability checks for free FI_d-modules.
//!
//! All fitting is exact: coefficients are solved from the leading points of
//! a window and every remaining point must be reproduced exactly.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, multinomial};
use crate::error::{Error, Result};
use crate::exact::{from_biguint, rational_string, solve, ExponentialPolynomial, Polynomial};
use crate::exec::Execution;
use crate::free_module::{
    dim_at, multiplicity_at, stabilized_padded_multiplicity, FreeModuleSpec, Stabilization,
    StabilizationConfig,
};
use crate::partition::{compositions, dim_irreducible, pad, Padded, Partition};

/// Integer sequence indexed by degree.
pub type Series = BTreeMap<usize, BigUint>;

/// Minimum number of held-out points every fit is checked against.
pub const MIN_VALIDATION_POINTS: usize = 3;

fn window_values(
    series: &Series,
    window: &RangeInclusive<usize>,
) -> Result<Vec<(usize, BigRational)>> {
    window
        .clone()
        .map(|n| {
            series
                .get(&n)
                .map(|v| (n, from_biguint(v)))
                .ok_or(Error::MissingDegree(n))
        })
        .collect()
}

/// An exact fit together with the range it was checked on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentialFit {
    pub function: ExponentialPolynomial,
    pub validated_range: (usize, usize),
}

/// Fits n ↦ Σᵢ pᵢ(n) iⁿ with deg pᵢ ≤ `degree_bound`, i = 1..=d.
///
/// The basis C(n,k)·iⁿ is a fundamental system of a linear recurrence of
/// order d·(degree_bound + 1), so the system on that many consecutive points
/// is always solvable.
pub fn fit_exponential_polynomial(
    series: &Series,
    bases: usize,
    degree_bound: usize,
    window: RangeInclusive<usize>,
) -> Result<ExponentialFit> {
    let unknowns = bases * (degree_bound + 1);
    let points = window_values(series, &window)?;
    if points.len() < unknowns + MIN_VALIDATION_POINTS {
        return Err(Error::InsufficientPoints {
            needed: unknowns + MIN_VALIDATION_POINTS,
            got: points.len(),
        });
    }
    let basis = |n: usize| -> Vec<BigRational> {
        (1..=bases)
            .flat_map(|i| {
                (0..=degree_bound)
                    .map(move |k| from_biguint(&(binomial(n, k) * crate::combinat::pow(i, n))))
            })
            .collect()
    };
    let (fit, check) = points.split_at(unknowns);
    let matrix = fit.iter().map(|(n, _)| basis(*n)).collect();
    let rhs = fit.iter().map(|(_, v)| v.clone()).collect();
    let coeffs = solve(matrix, rhs).ok_or_else(|| {
        Error::InvariantBreach(
            "exponential-polynomial basis is singular on a consecutive window".into(),
        )
    })?;
    let polys = coeffs
        .chunks(degree_bound + 1)
        .map(|c| Polynomial::from_binomial_coeffs(c.to_vec()))
        .collect();
    let function = ExponentialPolynomial::new(polys);
    for (n, v) in check {
        if function.eval(*n) != *v {
            return Err(Error::NoExactFit { n: *n });
        }
    }
    Ok(ExponentialFit {
        function,
        validated_range: (*window.start(), *window.end()),
    })
}

/// Degree-n piece of R(−m) for R = k[x₁, …, x_d]: C(n − m + d − 1, d − 1).
pub fn coinvariants_hilbert(m: usize, colors: usize, n: usize) -> BigUint {
    if n < m {
        return BigUint::zero();
    }
    binomial(n - m + colors - 1, colors - 1)
}

/// c_{λ,n}: multiplicity of S(λ)_n = S^{λ[n]} across a range of degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicitySeries {
    pub lambda: Partition,
    pub values: Series,
}

pub fn multiplicity_series(
    spec: &FreeModuleSpec,
    lambda: &Partition,
    range: RangeInclusive<usize>,
    exec: Execution,
) -> MultiplicitySeries {
    let degrees: Vec<usize> = range.collect();
    let values = exec.map(&degrees, |&n| {
        let c = match pad(lambda, &[n]).expect("single pad is sorted") {
            Padded::Zero => BigUint::zero(),
            Padded::Partition(mu) => multiplicity_at(spec, &mu),
        };
        (n, c)
    });
    MultiplicitySeries {
        lambda: lambda.clone(),
        values: values.into_iter().collect(),
    }
}

/// Multiplicity of the trivial representation S^{(n)} in M(W)_n.
pub fn trivial_multiplicity_series(
    spec: &FreeModuleSpec,
    range: RangeInclusive<usize>,
) -> MultiplicitySeries {
    multiplicity_series(spec, &Partition::empty(), range, Execution::default())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialFit {
    pub polynomial: Polynomial,
    pub validated_range: (usize, usize),
}

impl PolynomialFit {
    pub fn degree(&self) -> Option<usize> {
        self.polynomial.degree()
    }
}

/// Interpolates on the first `degree_bound + 1` points of the window and
/// checks the rest.
pub fn fit_polynomial(
    series: &MultiplicitySeries,
    degree_bound: usize,
    window: RangeInclusive<usize>,
) -> Result<PolynomialFit> {
    let fit = fit_exponential_polynomial(&series.values, 1, degree_bound, window)?;
    Ok(PolynomialFit {
        polynomial: fit.function.coefficient(1).clone(),
        validated_range: fit.validated_range,
    })
}

/// Default window for a multiplicity fit of degree ≤ d − 1 on M(W): starts
/// past both the generator's pre-stable range and the first degree where
/// λ[n] is a valid label.
pub fn default_multiplicity_window(
    spec: &FreeModuleSpec,
    lambda: &Partition,
    validation: usize,
) -> RangeInclusive<usize> {
    let degree_bound = spec.colors() - 1;
    let start = (spec.generator_degree() + spec.colors() * (degree_bound + 1))
        .max(lambda.size() + lambda.first());
    start..=start + degree_bound + validation
}

/// F(l) = dim S(λ)_{n₁+l, …, n_d+l}; zero for invalid labels.
pub fn padded_dimension(lambda: &Partition, pads: &[usize], shift: usize) -> Result<BigUint> {
    let shifted: Vec<usize> = pads.iter().map(|n| n + shift).collect();
    Ok(match pad(lambda, &shifted)? {
        Padded::Zero => BigUint::zero(),
        Padded::Partition(mu) => dim_irreducible(&mu),
    })
}

/// What the stability check is run on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSource {
    Free(FreeModuleSpec),
    /// Observed dimensions only; usable for fitting, not for stability.
    Dimensions(Series),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCheck {
    pub n: usize,
    pub holds: bool,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub lambda: Partition,
    pub pads: Vec<usize>,
    pub value: String,
    pub onset: usize,
    pub bound: Option<usize>,
    pub within_bound: Option<bool>,
}

impl ProbeResult {
    fn new(lambda: &Partition, pads: &[usize], s: &Stabilization) -> Self {
        ProbeResult {
            lambda: lambda.clone(),
            pads: pads.to_vec(),
            value: s.value.to_string(),
            onset: s.onset,
            bound: s.bound,
            within_bound: s.within_bound(),
        }
    }
}

/// Verdicts for the three stability conditions on explicitly listed degrees
/// and probes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub degrees: (usize, usize),
    pub injectivity: Vec<LevelCheck>,
    pub generation: Vec<LevelCheck>,
    pub plateaus: Vec<ProbeResult>,
}

impl StabilityReport {
    pub fn injectivity_holds(&self) -> bool {
        self.injectivity.iter().all(|c| c.holds)
    }

    pub fn generation_holds(&self) -> bool {
        self.generation.iter().all(|c| c.holds)
    }

    pub fn plateaus_hold(&self) -> bool {
        self.plateaus.iter().all(|p| p.within_bound != Some(false))
    }

    pub fn all_hold(&self) -> bool {
        self.injectivity_holds() && self.generation_holds() && self.plateaus_hold()
    }
}

/// Dimension of the S_{n+1}-span of the images of the d transition maps out
/// of level n: the hom-orbits at level n + 1 (compositions a of n + 1 − m)
/// that have at least one colored point, each contributing
/// dim W · (n+1)! / (m! a₁! ⋯ a_d!).
fn spanned_dimension(spec: &FreeModuleSpec, n: usize) -> BigUint {
    let m = spec.generator_degree();
    let target = n + 1;
    if target < m {
        return BigUint::zero();
    }
    let dim_w = spec.generator().total_dimension();
    compositions(target - m, spec.colors())
        .into_iter()
        .filter(|a| a.total() > 0)
        .map(|a| {
            let mut blocks = vec![m];
            blocks.extend_from_slice(a.entries());
            &dim_w * multinomial(target, &blocks)
        })
        .sum()
}

/// Checks the three stability conditions on a free module.
///
/// Injectivity of every transition map holds for free modules structurally
/// (an injection followed by a coloring never identifies basis elements);
/// the report records the necessary dimension inequality as a witness.
/// Generation is checked by counting the level-(n+1) hom-orbits reached from
/// level n. Plateaus are found with [`stabilized_padded_multiplicity`].
pub fn verify_theorem_a(
    source: &ModuleSource,
    probes: &[(Partition, Vec<usize>)],
    degrees: RangeInclusive<usize>,
    config: &StabilizationConfig,
) -> Result<StabilityReport> {
    let ModuleSource::Free(spec) = source else {
        return Err(Error::NotFree);
    };
    let m = spec.generator_degree();
    let mut injectivity = Vec::new();
    let mut generation = Vec::new();
    for n in degrees.clone() {
        let here = dim_at(spec, n);
        let next = dim_at(spec, n + 1);
        injectivity.push(LevelCheck {
            n,
            holds: here <= next,
            witness: format!("dim V_n = {here} <= dim V_(n+1) = {next}"),
        });
        if n >= m {
            let span = spanned_dimension(spec, n);
            generation.push(LevelCheck {
                n,
                holds: span == next,
                witness: format!("span of images = {span}, dim V_(n+1) = {next}"),
            });
        }
    }
    let plateaus = probes
        .iter()
        .map(|(lambda, pads)| {
            stabilized_padded_multiplicity(spec, lambda, pads, config)
                .map(|s| ProbeResult::new(lambda, pads, &s))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilityReport {
        degrees: (*degrees.start(), *degrees.end()),
        injectivity,
        generation,
        plateaus,
    })
}

/// Fit report wire form: `{"bases": d, "polynomials": [[c0, c1, …], …],
/// "validated_range": [n0, n1], "exact": true}` with `"p/q"` rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitReportJson {
    pub bases: usize,
    pub polynomials: Vec<Vec<String>>,
    pub validated_range: [usize; 2],
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
}

fn monomial_strings(p: &Polynomial, len: usize) -> Vec<String> {
    let mut coeffs = p.monomial_coeffs();
    coeffs.resize(len.max(coeffs.len()), BigRational::zero());
    coeffs.iter().map(rational_string).collect()
}

impl ExponentialFit {
    pub fn to_json(&self, degree_bound: usize) -> FitReportJson {
        FitReportJson {
            bases: self.function.bases(),
            polynomials: self
                .function
                .polynomials()
                .iter()
                .map(|p| monomial_strings(p, degree_bound + 1))
                .collect(),
            validated_range: [self.validated_range.0, self.validated_range.1],
            exact: true,
            degree: None,
        }
    }
}

impl PolynomialFit {
    pub fn to_json(&self, degree_bound: usize) -> FitReportJson {
        FitReportJson {
            bases: 1,
            polynomials: vec![monomial_strings(&self.polynomial, degree_bound + 1)],
            validated_range: [self.validated_range.0, self.validated_range.1],
            exact: true,
            degree: self.degree(),
        }
    }
}

/// Stdin series wire form: `{"series": {"0": "1", "1": "2", …}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub series: BTreeMap<String, String>,
}

impl SeriesJson {
    pub fn to_series(&self) -> Result<Series> {
        self.series
            .iter()
            .map(|(k, v)| {
                let n = k
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("degree {k:?}: {e}")))?;
                let v = v
                    .parse::<BigUint>()
                    .map_err(|e| Error::Parse(format!("value {v:?}: {e}")))?;
                Ok((n, v))
            })
            .collect()
    }

    pub fn from_series(series: &Series) -> Self {
        SeriesJson {
            series: series
                .iter()
                .map(|(n, v)| (n.to_string(), v.to_string()))
                .collect(),
        }
    }
}
