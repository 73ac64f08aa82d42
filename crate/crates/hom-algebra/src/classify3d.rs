//! Three-dimensional bracket structures: the twisting-map solver for the
//! classical simple bracket, and a catalog of twenty parametric bracket
//! families over the twist diag(a, b, b) with an exact sampling harness.
//!
//! The harness never repairs a family formula. Each family is built exactly
//! as cataloged; when random rational parameter points leave a nonzero
//! twisted-Jacobi residual, the verification records the failing point and
//! residual as an erratum instead of passing it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomAlgebra;
use crate::error::Error;
use crate::identities::{check_identity, IdentityKind, Report};
use crate::linalg::{nullspace, rank, Matrix, Vector};
use crate::rational::{format_rational, rat, random_rational, Rational};
use num::Zero;

/// The classical simple bracket in its standard basis:
/// [X1,X2] = 2 X2, [X1,X3] = -2 X3, [X2,X3] = X1, with identity twist.
pub fn sl2_bracket() -> HomAlgebra {
    HomAlgebra::from_bracket_entries(
        3,
        &[(0, 1, 1, rat(2)), (0, 2, 2, rat(-2)), (1, 2, 0, rat(1))],
        Matrix::identity(3),
    )
    .expect("fixed constants are valid")
}

/// Solution set of a linear system, stored as a particular point plus an
/// independent spanning set of directions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineSolutionSpace {
    pub ambient_dim: usize,
    pub particular: Vector,
    pub basis: Vec<Vector>,
}

impl AffineSolutionSpace {
    /// Number of free directions.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Exact membership: the point lies in particular + span(basis).
    pub fn contains(&self, point: &Vector) -> bool {
        assert_eq!(point.dim(), self.ambient_dim, "ambient dimension mismatch");
        let shifted = point.sub(&self.particular);
        let mut rows: Vec<Vec<Rational>> =
            self.basis.iter().map(|v| v.coords().to_vec()).collect();
        let base_rank = rank(&rows);
        rows.push(shifted.coords().to_vec());
        rank(&rows) == base_rank
    }
}

/// Row-major coordinates of a twist matrix, the ambient coordinates used by
/// [`sl2_twisting_space`].
pub fn twist_coordinates(alpha: &Matrix) -> Vector {
    let mut flat = Vec::with_capacity(alpha.rows() * alpha.cols());
    for i in 0..alpha.rows() {
        for j in 0..alpha.cols() {
            flat.push(alpha.get(i, j).clone());
        }
    }
    Vector::new(flat)
}

/// Solves for every twist matrix making the classical simple bracket satisfy
/// the twisted Jacobi identity. The identity is linear in the twist, and for
/// a skew 3-dimensional bracket only the strict basis triple contributes, so
/// the constraints form a homogeneous linear system in the nine matrix
/// entries. Returns its solution space (particular point zero).
pub fn sl2_twisting_space() -> AffineSolutionSpace {
    let bracket = sl2_bracket();
    // Column (p, q) of the system: the Jacobi residual with twist E_pq.
    let mut equations = vec![vec![Rational::zero(); 9]; 3];
    for p in 0..3 {
        for q in 0..3 {
            let mut unit = Matrix::zero(3, 3);
            unit.set(p, q, rat(1));
            let twisted = bracket.with_alpha(unit).expect("3x3 twist");
            let report = check_identity(&twisted, IdentityKind::HomJacobi);
            for defect in &report.residuals {
                debug_assert_eq!(defect.index, vec![1, 2, 3]);
                for (s, equation) in equations.iter_mut().enumerate() {
                    equation[p * 3 + q] = defect.value.get(s).clone();
                }
            }
        }
    }
    let basis = nullspace(&equations, 9)
        .into_iter()
        .map(Vector::new)
        .collect();
    AffineSolutionSpace { ambient_dim: 9, particular: Vector::zero(9), basis }
}

/// The six-parameter twist family for the classical simple bracket. The
/// basis images are
/// alpha(X1) = a X1 + 2c X2 + 2d X3,
/// alpha(X2) = d X1 + b X2 + e X3,
/// alpha(X3) = c X1 + f X2 + b X3.
pub fn sl2_twist(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    f: &Rational,
) -> Matrix {
    let two = rat(2);
    Matrix::from_rows(vec![
        vec![a.clone(), &two * c, &two * d],
        vec![d.clone(), b.clone(), e.clone()],
        vec![c.clone(), f.clone(), b.clone()],
    ])
}

/// The classical simple bracket equipped with the six-parameter twist.
pub fn sl2_family(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    f: &Rational,
) -> HomAlgebra {
    sl2_bracket()
        .with_alpha(sl2_twist(a, b, c, d, e, f))
        .expect("3x3 twist")
}

/// A named parameter assignment for a bracket family.
pub type Params = BTreeMap<String, Rational>;

/// A quantity that must stay nonzero for a family's coefficients to be
/// defined (it appears in denominators).
pub struct Constraint {
    pub label: &'static str,
    eval: fn(&Params) -> Rational,
}

impl Constraint {
    pub fn value(&self, params: &Params) -> Rational {
        (self.eval)(params)
    }
}

fn pv(params: &Params, name: &str) -> Rational {
    params
        .get(name)
        .cloned()
        .expect("parameters validated before evaluation")
}

macro_rules! single_constraints {
    ($($name:ident => $key:literal),* $(,)?) => {
        $(fn $name(p: &Params) -> Rational { pv(p, $key) })*
    };
}

single_constraints! {
    cons_a => "a",
    cons_b => "b",
    cons_c121 => "C121",
    cons_c122 => "C122",
    cons_c131 => "C131",
    cons_c133 => "C133",
    cons_c232 => "C232",
    cons_c233 => "C233",
}

fn cons_c122_plus_c133(p: &Params) -> Rational {
    pv(p, "C122") + pv(p, "C133")
}

fn cons_b_c131_plus_a_c232(p: &Params) -> Rational {
    pv(p, "b") * pv(p, "C131") + pv(p, "a") * pv(p, "C232")
}

fn cons_b_c121_plus_a_c233(p: &Params) -> Rational {
    pv(p, "b") * pv(p, "C121") + pv(p, "a") * pv(p, "C233")
}

/// How many cataloged bracket families there are.
pub const FAMILY_COUNT: usize = 20;

/// One of the twenty cataloged bracket families over the twist diag(a,b,b).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    index: usize,
}

impl FamilySpec {
    pub fn new(index: usize) -> Result<FamilySpec, Error> {
        if (1..=FAMILY_COUNT).contains(&index) {
            Ok(FamilySpec { index })
        } else {
            Err(Error::NoSuchFamily(index))
        }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// The family's parameter names: the twist diagonal (a, b) plus the
    /// bracket coefficients it mentions.
    pub fn param_names(&self) -> &'static [&'static str] {
        match self.index {
            1 => &["a", "b", "C121", "C123", "C132", "C231"],
            2 => &["a", "b", "C123", "C132", "C133", "C231", "C232", "C233"],
            3 => &["a", "b", "C131", "C132", "C231"],
            4 => &["a", "b", "C123", "C132", "C133"],
            5 => &["a", "b", "C123", "C132", "C231"],
            6 => &["a", "b", "C121", "C123", "C231"],
            7 => &["a", "b", "C121", "C122", "C123", "C231", "C233"],
            8 => &["a", "b", "C123", "C132", "C133", "C231"],
            9 => &["a", "b", "C123", "C132", "C133", "C231", "C232"],
            10 => &["a", "b", "C131", "C132", "C133", "C231", "C232"],
            11 => &["a", "b", "C122", "C123", "C132", "C133"],
            12 => &["a", "b", "C122", "C131", "C133", "C231", "C232", "C233"],
            13 => &["a", "b", "C123", "C132", "C231", "C232"],
            14 => &["a", "b", "C121", "C131", "C133", "C231"],
            15 => &["a", "b", "C122", "C132", "C133", "C232", "C233"],
            16 => &["a", "b", "C131", "C132", "C133", "C233"],
            17 => &["a", "b", "C131", "C133", "C231", "C232", "C233"],
            18 => &["a", "b", "C121", "C122", "C123", "C232"],
            19 => &["a", "b", "C122", "C123", "C132", "C133", "C232", "C233"],
            20 => &["a", "b", "C121", "C122", "C131", "C133", "C232", "C233"],
            _ => unreachable!("index validated in new"),
        }
    }

    /// The nonzero constraints: every quantity dividing a printed
    /// coefficient of this family.
    pub fn constraints(&self) -> &'static [Constraint] {
        match self.index {
            1 => &[Constraint { label: "a", eval: cons_a }],
            2 | 9 | 13 => &[Constraint { label: "b", eval: cons_b }],
            12 | 17 => &[
                Constraint { label: "C232", eval: cons_c232 },
                Constraint { label: "C233", eval: cons_c233 },
            ],
            14 => &[
                Constraint { label: "C121", eval: cons_c121 },
                Constraint { label: "C131", eval: cons_c131 },
            ],
            15 => &[
                Constraint { label: "b", eval: cons_b },
                Constraint { label: "C122", eval: cons_c122 },
                Constraint { label: "C232", eval: cons_c232 },
            ],
            16 => &[
                Constraint { label: "b", eval: cons_b },
                Constraint { label: "C131", eval: cons_c131 },
                Constraint { label: "C133", eval: cons_c133 },
            ],
            18 => &[
                Constraint { label: "b", eval: cons_b },
                Constraint { label: "C121", eval: cons_c121 },
                Constraint { label: "C122", eval: cons_c122 },
            ],
            19 => &[
                Constraint { label: "b", eval: cons_b },
                Constraint { label: "C133", eval: cons_c133 },
                Constraint { label: "C233", eval: cons_c233 },
            ],
            20 => &[
                Constraint { label: "b", eval: cons_b },
                Constraint { label: "C122 + C133", eval: cons_c122_plus_c133 },
                Constraint { label: "b*C131 + a*C232", eval: cons_b_c131_plus_a_c232 },
                Constraint { label: "b*C121 + a*C233", eval: cons_b_c121_plus_a_c233 },
            ],
            _ => &[],
        }
    }

    /// Builds the family instance at a parameter point. Every declared
    /// parameter must be assigned, nothing else may be, and the nonzero
    /// constraints must hold.
    pub fn build(&self, params: &Params) -> Result<HomAlgebra, Error> {
        for name in self.param_names() {
            if !params.contains_key(*name) {
                return Err(Error::MissingParameter { family: self.index, name: name.to_string() });
            }
        }
        for name in params.keys() {
            if !self.param_names().contains(&name.as_str()) {
                return Err(Error::UnknownParameter { family: self.index, name: name.clone() });
            }
        }
        for constraint in self.constraints() {
            if constraint.value(params).is_zero() {
                return Err(Error::ZeroConstraint {
                    family: self.index,
                    constraint: constraint.label.to_string(),
                });
            }
        }
        let p = |name: &str| pv(params, name);
        // u = [e1,e2], v = [e1,e3], w = [e2,e3], as coefficient triples.
        let (u, v, w) = match self.index {
            1 => (
                [p("C121"), rat(0), p("C123")],
                [rat(0), p("C132"), rat(0)],
                [p("C231"), rat(0), p("b") * p("C121") / p("a")],
            ),
            2 => (
                [p("a") * p("C233") / p("b"), -p("C133"), p("C123")],
                [-(p("a") * p("C232")) / p("b"), p("C132"), p("C133")],
                [p("C231"), p("C232"), p("C233")],
            ),
            3 => (
                [rat(0), rat(0), rat(0)],
                [p("C131"), p("C132"), rat(0)],
                [p("C231"), rat(0), rat(0)],
            ),
            4 => (
                [rat(0), rat(0), p("C123")],
                [rat(0), p("C132"), p("C133")],
                [rat(0), rat(0), rat(0)],
            ),
            5 => (
                [rat(0), rat(0), p("C123")],
                [rat(0), p("C132"), rat(0)],
                [p("C231"), rat(0), rat(0)],
            ),
            6 => (
                [p("C121"), rat(0), p("C123")],
                [rat(0), rat(0), rat(0)],
                [p("C231"), rat(0), rat(0)],
            ),
            7 => (
                [p("C121"), p("C122"), p("C123")],
                [rat(0), rat(0), rat(0)],
                [p("C231"), rat(0), p("C233")],
            ),
            8 => (
                [rat(0), -p("C133"), p("C123")],
                [rat(0), p("C132"), p("C133")],
                [p("C231"), rat(0), rat(0)],
            ),
            9 => (
                [rat(0), -p("C133"), p("C123")],
                [-(p("a") * p("C232")) / p("b"), p("C132"), p("C133")],
                [p("C231"), p("C232"), rat(0)],
            ),
            10 => (
                [rat(0), rat(0), rat(0)],
                [p("C131"), p("C132"), p("C133")],
                [p("C231"), p("C232"), rat(0)],
            ),
            11 => (
                [rat(0), p("C122"), p("C123")],
                [rat(0), p("C132"), p("C133")],
                [rat(0), rat(0), rat(0)],
            ),
            12 => (
                [
                    -(p("C131") * p("C233")) / p("C232"),
                    p("C122"),
                    -(p("C133") * p("C233")) / p("C232"),
                ],
                [p("C131"), -(p("C122") * p("C232")) / p("C233"), p("C133")],
                [p("C231"), p("C232"), p("C233")],
            ),
            13 => (
                [rat(0), rat(0), p("C123")],
                [-(p("a") * p("C232")) / p("b"), p("C132"), rat(0)],
                [p("C231"), p("C232"), rat(0)],
            ),
            14 => (
                [p("C121"), -p("C133"), p("C121") * p("C133") / p("C131")],
                [p("C131"), -(p("C131") * p("C133")) / p("C121"), p("C133")],
                [p("C231"), rat(0), rat(0)],
            ),
            15 => (
                [
                    p("a") * p("C233") / p("b"),
                    p("C122"),
                    p("C122") * p("C233") / p("C232"),
                ],
                [
                    -(((p("a") - p("b")) * p("C122") - p("b") * p("C133")) * p("C232"))
                        / (p("b") * p("C122")),
                    p("C132"),
                    p("C133"),
                ],
                [
                    p("a") * p("C232") * p("C233") / (p("b") * p("C122")),
                    p("C232"),
                    p("C233"),
                ],
            ),
            16 => (
                [
                    p("a") * p("C233") / p("b"),
                    rat(0),
                    p("C133") * p("C233") / p("C131"),
                ],
                [p("C131"), p("C132"), p("C133")],
                [
                    p("a") * p("C132") * p("C233") / (p("b") * p("C133")),
                    rat(0),
                    p("C233"),
                ],
            ),
            17 => (
                [
                    -(p("C131") * p("C233")) / p("C232"),
                    -p("C133"),
                    -(p("C133") * p("C233")) / p("C232"),
                ],
                [p("C133"), p("C133") * p("C232") / p("C233"), p("C133")],
                [p("C231"), p("C232"), p("C233")],
            ),
            18 => (
                [p("C121"), p("C122"), p("C123")],
                [
                    -(p("a") * p("C232")) / p("b"),
                    -(p("C122") * p("C232")) / p("C121"),
                    rat(0),
                ],
                [
                    p("a") * p("C121") * p("C232") / (p("b") * p("C122")),
                    p("C232"),
                    rat(0),
                ],
            ),
            19 => (
                [
                    -((p("b") * p("C122") + (p("b") - p("a")) * p("C133")) * p("C233"))
                        / (p("b") * p("C133")),
                    p("C122"),
                    p("C123"),
                ],
                [
                    -(p("a") * p("C232")) / p("b"),
                    p("C133") * p("C232") / p("C233"),
                    p("C133"),
                ],
                [
                    p("a") * p("C232") * p("C233") / (p("b") * p("C133")),
                    p("C232"),
                    p("C233"),
                ],
            ),
            20 => (
                [
                    p("C122"),
                    p("C122"),
                    (-(p("a") * p("C133") * p("C233"))
                        + p("b")
                            * (p("C121") * p("C131") + p("C122") + p("C133"))
                            * p("C233"))
                        / (p("b") * p("C131") + p("a") * p("C232")),
                ],
                [
                    p("C131"),
                    (p("b") * p("C122") * p("C131")
                        + p("a") * p("C122") * p("C232")
                        + p("b") * p("C122") * p("C232")
                        - p("b") * p("C133") * p("C232"))
                        / (p("b") * p("C121") + p("a") * p("C233")),
                    p("C133"),
                ],
                [
                    (p("a") * p("C121") * p("C232") + p("C131") * p("C233"))
                        / (p("b") * (p("C122") + p("C133"))),
                    p("C232"),
                    p("C233"),
                ],
            ),
            _ => unreachable!("index validated in new"),
        };
        let alpha = Matrix::from_rows(vec![
            vec![p("a"), rat(0), rat(0)],
            vec![rat(0), p("b"), rat(0)],
            vec![rat(0), rat(0), p("b")],
        ]);
        let mut entries = Vec::with_capacity(9);
        for (k, value) in u.into_iter().enumerate() {
            entries.push((0, 1, k, value));
        }
        for (k, value) in v.into_iter().enumerate() {
            entries.push((0, 2, k, value));
        }
        for (k, value) in w.into_iter().enumerate() {
            entries.push((1, 2, k, value));
        }
        HomAlgebra::from_bracket_entries(3, &entries, alpha)
    }

    /// Draws a parameter point: independent random rationals, redrawn as a
    /// whole until every nonzero constraint holds. `fixed` entries override
    /// the draw; if they force some constraint to zero the draw cannot
    /// terminate, reported as that constraint's error.
    pub fn try_sample_params_with<R: Rng>(
        &self,
        rng: &mut R,
        fixed: &Params,
    ) -> Result<Params, Error> {
        let mut violated = None;
        for _ in 0..1_000 {
            let mut params = Params::new();
            for name in self.param_names() {
                let value = fixed
                    .get(*name)
                    .cloned()
                    .unwrap_or_else(|| random_rational(rng));
                params.insert(name.to_string(), value);
            }
            match self.constraints().iter().find(|c| c.value(&params).is_zero()) {
                None => return Ok(params),
                Some(constraint) => violated = Some(constraint.label),
            }
        }
        Err(Error::ZeroConstraint {
            family: self.index,
            constraint: violated.unwrap_or("unsatisfiable").to_string(),
        })
    }

    /// [`FamilySpec::try_sample_params_with`] for overrides known to be
    /// satisfiable.
    pub fn sample_params_with<R: Rng>(&self, rng: &mut R, fixed: &Params) -> Params {
        self.try_sample_params_with(rng, fixed)
            .expect("constraints rejected every sampled point")
    }

    /// Draws an unconstrained-free random parameter point.
    pub fn sample_params<R: Rng>(&self, rng: &mut R) -> Params {
        self.sample_params_with(rng, &Params::new())
    }
}

/// Builds family `k` at the given parameter point.
pub fn family(k: usize, params: &Params) -> Result<HomAlgebra, Error> {
    FamilySpec::new(k)?.build(params)
}

/// A failing parameter point for a family, with the full check report.
#[derive(Clone, Debug)]
pub struct Erratum {
    pub params: Params,
    pub report: Report,
}

/// Verdict of sampling one family.
#[derive(Clone, Debug)]
pub struct FamilyVerification {
    pub family: usize,
    pub samples: usize,
    pub passed: bool,
    pub erratum: Option<Erratum>,
}

fn family_rng(seed: u64, k: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    rng
}

/// Samples `sample_count` rational parameter points for family `k`, with the
/// `fixed` parameters pinned, and checks the bracket and twist exactly.
/// Stops at the first failing point and records it with its residual report.
pub fn verify_family_with(
    k: usize,
    fixed: &Params,
    sample_count: usize,
    seed: u64,
) -> Result<FamilyVerification, Error> {
    let spec = FamilySpec::new(k)?;
    for name in fixed.keys() {
        if !spec.param_names().contains(&name.as_str()) {
            return Err(Error::UnknownParameter { family: k, name: name.clone() });
        }
    }
    let mut rng = family_rng(seed, k);
    for drawn in 0..sample_count {
        let params = spec.try_sample_params_with(&mut rng, fixed)?;
        let algebra = spec.build(&params)?;
        let report = check_identity(&algebra, IdentityKind::HomLie);
        if !report.passed {
            return Ok(FamilyVerification {
                family: k,
                samples: drawn + 1,
                passed: false,
                erratum: Some(Erratum { params, report }),
            });
        }
    }
    Ok(FamilyVerification { family: k, samples: sample_count, passed: true, erratum: None })
}

/// [`verify_family_with`] over fully random parameter points.
pub fn verify_family(k: usize, sample_count: usize, seed: u64) -> Result<FamilyVerification, Error> {
    verify_family_with(k, &Params::new(), sample_count, seed)
}

/// Verifies all twenty families with independent per-family streams derived
/// from the master seed.
pub fn verify_all_families(sample_count: usize, seed: u64) -> Vec<FamilyVerification> {
    (1..=FAMILY_COUNT)
        .map(|k| verify_family(k, sample_count, seed).expect("catalog indices are valid"))
        .collect()
}

/// Renders parameters in declaration order (a, b, then coefficients).
fn format_params(k: usize, params: &Params) -> String {
    let spec = FamilySpec::new(k).expect("valid index");
    spec.param_names()
        .iter()
        .map(|name| format!("{name}={}", format_rational(&params[*name])))
        .collect::<Vec<_>>()
        .join(",")
}

fn format_defect_list(report: &Report) -> String {
    report
        .residuals
        .iter()
        .map(|d| {
            let tuple = d.index.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            format!("({tuple}):{}", d.value)
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// One machine-readable line per family verdict.
pub fn machine_line(v: &FamilyVerification) -> String {
    match &v.erratum {
        None => format!("k={} status=pass samples={}", v.family, v.samples),
        Some(erratum) => format!(
            "k={} status=fail samples={} point={} residual={}",
            v.family,
            v.samples,
            format_params(v.family, &erratum.params),
            format_defect_list(&erratum.report),
        ),
    }
}

/// Renders the verification table for a batch of family verdicts.
pub fn render_table(sample_count: usize, seed: u64, verdicts: &[FamilyVerification]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "bracket family verification ({sample_count} samples per family, seed {seed})");
    let _ = writeln!(out);
    let _ = writeln!(out, "  k  status  parameters                        constraints");
    for v in verdicts {
        let spec = FamilySpec::new(v.family).expect("valid index");
        let names = spec.param_names().join(",");
        let constraints = if spec.constraints().is_empty() {
            "-".to_string()
        } else {
            spec.constraints()
                .iter()
                .map(|c| format!("{} != 0", c.label))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let status = if v.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, " {:>2}  {:<6}  {:<32}  {}", v.family, status, names, constraints);
        if let Some(erratum) = &v.erratum {
            let _ = writeln!(out, "     point: {}", format_params(v.family, &erratum.params));
            for defect in &erratum.report.residuals {
                let tuple =
                    defect.index.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                let _ = writeln!(out, "     residual at ({tuple}): {}", defect.value);
            }
        }
    }
    out
}

/// Runs the whole catalog and renders the table; byte-stable for a fixed
/// seed and sample count.
pub fn families_report(sample_count: usize, seed: u64) -> String {
    render_table(sample_count, seed, &verify_all_families(sample_count, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::variety::{algebra_point, homlie_equations, EquationTag, VarietyKind};

    #[test]
    fn twisting_space_has_dimension_six_and_expected_members() {
        let space = sl2_twisting_space();
        assert_eq!(space.ambient_dim, 9);
        assert_eq!(space.dim(), 6);
        assert!(space.particular.is_zero());
        assert!(space.contains(&twist_coordinates(&Matrix::identity(3))));

        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..25 {
            let draws: Vec<Rational> = (0..6).map(|_| random_rational(&mut rng)).collect();
            let alpha = sl2_twist(&draws[0], &draws[1], &draws[2], &draws[3], &draws[4], &draws[5]);
            assert!(space.contains(&twist_coordinates(&alpha)));
        }

        // Perturbing one coupled entry leaves the space.
        let mut bad = Matrix::identity(3);
        bad.set(0, 1, rat(1));
        assert!(!space.contains(&twist_coordinates(&bad)));
    }

    #[test]
    fn twisting_space_matches_polynomial_specialization() {
        // Independent route: specialize the bracket variety equations at the
        // fixed constants and read off the linear system in the twist.
        let system = homlie_equations(3);
        let bracket = sl2_bracket();
        let mut rows = vec![vec![Rational::zero(); 9]; 3];
        for p in 0..3 {
            for q in 0..3 {
                let mut unit = Matrix::zero(3, 3);
                unit.set(p, q, rat(1));
                let specialized = bracket.with_alpha(unit).unwrap();
                let point = algebra_point(&specialized, VarietyKind::Homlie);
                for (tag, value) in system.residuals(&point).unwrap() {
                    if let EquationTag::Tuple(1, 2, 3, s) = tag {
                        rows[s - 1][p * 3 + q] = value;
                    }
                }
            }
        }
        let independent: Vec<Vector> = nullspace(&rows, 9).into_iter().map(Vector::new).collect();
        let space = sl2_twisting_space();
        assert_eq!(independent.len(), space.dim());
        for direction in &independent {
            assert!(space.contains(direction));
        }
        let other = AffineSolutionSpace {
            ambient_dim: 9,
            particular: Vector::zero(9),
            basis: independent,
        };
        for direction in &space.basis {
            assert!(other.contains(direction));
        }
    }

    #[test]
    fn six_parameter_family_passes_and_identity_is_classical() {
        let one = rat(1);
        let zero = rat(0);
        let classical = sl2_family(&one, &one, &zero, &zero, &zero, &zero);
        assert!(classical.alpha().is_identity());
        assert!(check_identity(&classical, IdentityKind::HomLie).passed);

        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..25 {
            let d: Vec<Rational> = (0..6).map(|_| random_rational(&mut rng)).collect();
            let algebra = sl2_family(&d[0], &d[1], &d[2], &d[3], &d[4], &d[5]);
            assert!(check_identity(&algebra, IdentityKind::HomLie).passed);
        }
    }

    #[test]
    fn decoupling_the_twist_entries_is_detected() {
        // The twist couples entry (1,2) to twice entry (3,1); breaking the
        // coupling must fail with the residual on the strict triple.
        let (a, b, c, d, e, f) = (rat(1), rat(1), rat(1), rat(0), rat(0), rat(0));
        let mut alpha = sl2_twist(&a, &b, &c, &d, &e, &f);
        alpha.set(0, 1, rat(3) * &c);
        let perturbed = sl2_bracket().with_alpha(alpha).unwrap();
        let report = check_identity(&perturbed, IdentityKind::HomJacobi);
        assert!(!report.passed);
        assert_eq!(report.residuals.len(), 1);
        assert_eq!(report.residuals[0].index, vec![1, 2, 3]);
    }

    fn params_from(pairs: &[(&str, Rational)]) -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn cataloged_examples_build_and_pass() {
        let five = family(
            5,
            &params_from(&[
                ("a", rat(2)),
                ("b", rat(3)),
                ("C123", rat(1)),
                ("C132", rat(1)),
                ("C231", rat(1)),
            ]),
        )
        .unwrap();
        assert!(five.skew_declared());
        assert!(check_identity(&five, IdentityKind::HomLie).passed);

        let one = family(
            1,
            &params_from(&[
                ("a", rat(1)),
                ("b", rat(2)),
                ("C121", rat(1)),
                ("C123", rat(0)),
                ("C132", rat(1)),
                ("C231", rat(0)),
            ]),
        )
        .unwrap();
        assert!(check_identity(&one, IdentityKind::HomLie).passed);
        // w picks up the coupled coefficient b*C121/a = 2.
        assert_eq!(*one.constant(1, 2, 2), rat(2));
    }

    #[test]
    fn parameter_validation_is_strict() {
        let spec = FamilySpec::new(1).unwrap();
        let mut params = params_from(&[
            ("a", rat(1)),
            ("b", rat(1)),
            ("C121", rat(1)),
            ("C123", rat(1)),
            ("C132", rat(1)),
        ]);
        assert!(matches!(
            spec.build(&params),
            Err(Error::MissingParameter { family: 1, .. })
        ));
        params.insert("C231".into(), rat(1));
        assert!(spec.build(&params).is_ok());
        params.insert("C199".into(), rat(1));
        assert!(matches!(
            spec.build(&params),
            Err(Error::UnknownParameter { family: 1, .. })
        ));
        params.remove("C199");
        params.insert("a".into(), rat(0));
        match spec.build(&params) {
            Err(Error::ZeroConstraint { family: 1, constraint }) => {
                assert_eq!(constraint, "a");
            }
            other => panic!("expected zero-constraint error, got {other:?}"),
        }
        assert!(matches!(FamilySpec::new(0), Err(Error::NoSuchFamily(0))));
        assert!(matches!(FamilySpec::new(21), Err(Error::NoSuchFamily(21))));
    }

    #[test]
    fn catalog_verdicts_are_stable() {
        // Hand-derived from the cyclic sum with twist diag(a,b,b):
        // J = (a*w2 + b*v1)*u + (a*w3 - b*u1)*v - b*(u2 + v3)*w.
        let expected_pass = [1, 2, 3, 4, 5, 6, 8, 9, 11, 13, 14, 15, 18];
        for verdict in verify_all_families(30, 0) {
            let should_pass = expected_pass.contains(&verdict.family);
            assert_eq!(
                verdict.passed, should_pass,
                "family {} verdict changed",
                verdict.family
            );
            if !verdict.passed {
                let erratum = verdict.erratum.as_ref().expect("failures carry errata");
                assert!(!erratum.report.passed);
                assert!(!erratum.report.residuals.is_empty());
                // The recorded point must reproduce the failure exactly.
                let rebuilt = family(verdict.family, &erratum.params).unwrap();
                let replay = check_identity(&rebuilt, IdentityKind::HomLie);
                assert_eq!(replay.residuals, erratum.report.residuals);
            }
        }
    }

    #[test]
    fn passing_families_specialize_to_classical_brackets() {
        let ones = params_from(&[("a", rat(1)), ("b", rat(1))]);
        for verdict in verify_all_families(20, 1) {
            if !verdict.passed {
                continue;
            }
            let spec = FamilySpec::new(verdict.family).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(77);
            for _ in 0..20 {
                let params = spec.sample_params_with(&mut rng, &ones);
                let algebra = spec.build(&params).unwrap();
                assert!(algebra.alpha().is_identity());
                assert!(
                    check_identity(&algebra, IdentityKind::HomJacobi).passed,
                    "family {} at a=b=1",
                    verdict.family
                );
            }
        }
    }

    #[test]
    fn sampling_respects_constraints_and_overrides() {
        let spec = FamilySpec::new(20).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..20 {
            let params = spec.sample_params(&mut rng);
            for constraint in spec.constraints() {
                assert!(!constraint.value(&params).is_zero());
            }
        }
        let fixed = params_from(&[("a", ratio(7, 3))]);
        let params = spec.sample_params_with(&mut rng, &fixed);
        assert_eq!(params["a"], ratio(7, 3));
    }

    #[test]
    fn report_is_deterministic_with_twenty_rows() {
        let first = families_report(10, 123);
        let second = families_report(10, 123);
        assert_eq!(first, second);
        let rows = first
            .lines()
            .filter(|l| {
                let t = l.trim_start();
                t.starts_with(char::is_numeric) && (t.contains("pass") || t.contains("FAIL"))
            })
            .count();
        assert_eq!(rows, 20);
        assert!(first.contains("bracket family verification (10 samples per family, seed 123)"));
        let five_row = first.lines().find(|l| l.trim_start().starts_with("5  ")).unwrap();
        assert!(five_row.contains("pass"));
    }

    #[test]
    fn machine_lines_follow_the_record_grammar() {
        let verdicts = verify_all_families(10, 5);
        let pass_line = machine_line(&verdicts[4]);
        assert_eq!(pass_line, "k=5 status=pass samples=10");
        let fail = verdicts.iter().find(|v| !v.passed).expect("catalog has errata");
        let fail_line = machine_line(fail);
        assert!(fail_line.starts_with(&format!("k={} status=fail samples=", fail.family)));
        assert!(fail_line.contains(" point=a="));
        assert!(fail_line.contains(" residual=(1,2,3):"));
    }

    #[test]
    fn different_seeds_draw_different_points() {
        let spec = FamilySpec::new(2).unwrap();
        let mut rng_a = family_rng(0, 2);
        let mut rng_b = family_rng(1, 2);
        assert_ne!(spec.sample_params(&mut rng_a), spec.sample_params(&mut rng_b));
        let mut rng_c = family_rng(0, 2);
        assert_eq!(
            FamilySpec::new(2).unwrap().sample_params(&mut family_rng(0, 2)),
            spec.sample_params(&mut rng_c)
        );
    }
}
