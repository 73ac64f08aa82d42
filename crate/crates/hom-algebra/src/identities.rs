//! Exact checkers for the defining identities of twisted algebras.
//!
//! Every identity handled here is multilinear in its arguments, with two
//! exceptions noted below, so checking it on all tuples of basis vectors
//! decides it on the whole space. The checkers therefore enumerate basis
//! tuples, evaluate the defining equation exactly, and record every nonzero
//! defect with its tuple.
//!
//! The two exceptions: flexibility is quadratic in its outer argument, so the
//! basis-pair evaluation of [`IdentityKind::Flexible`] witnesses the equation
//! only at basis points; its full polarized (trilinear) form is
//! [`check_flexible_antisymmetry`]. The unital check designates the first
//! basis vector as the unit candidate, which is a statement about the chosen
//! basis, not a multilinear law.
//!
//! Reported tuple indices are 1-based, matching the file format and the
//! printed reports.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{HomAlgebra, Subgroup};
use crate::error::Error;
use crate::linalg::{Matrix, Vector};

/// The identities this crate can verify.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum IdentityKind {
    /// mu(alpha(x), mu(y, z)) = mu(mu(x, y), alpha(z))
    HomAssociative,
    /// [[x, y], alpha(z)] = [[x, z], alpha(y)] + [alpha(x), [y, z]]
    HomLeibniz,
    /// mu(x, y) = -mu(y, x)
    SkewSymmetric,
    /// cyclic sum of [alpha(x), [y, z]] vanishes
    HomJacobi,
    /// skew-symmetric and the twisted Jacobi identity
    HomLie,
    /// the commutator bracket satisfies the twisted Jacobi identity
    HomLieAdmissible,
    /// signed sum of twisted associators over a permutation subgroup vanishes
    GHomAssociative(Subgroup),
    /// the twisted associator vanishes on (x, y, x)
    Flexible,
    /// alias for the subgroup condition swapping the first two arguments
    HomVinberg,
    /// alias for the subgroup condition swapping the last two arguments
    HomPreLie,
    /// the first basis vector is a two-sided unit
    Unital,
}

impl IdentityKind {
    /// The checks run by default when no identity is named: everything except
    /// the unital check, which is opt-in because it singles out a basis
    /// vector.
    pub fn default_suite() -> Vec<IdentityKind> {
        vec![
            IdentityKind::HomAssociative,
            IdentityKind::HomLeibniz,
            IdentityKind::SkewSymmetric,
            IdentityKind::HomJacobi,
            IdentityKind::HomLie,
            IdentityKind::HomLieAdmissible,
            IdentityKind::GHomAssociative(Subgroup::G4),
            IdentityKind::GHomAssociative(Subgroup::G5),
            IdentityKind::GHomAssociative(Subgroup::G6),
            IdentityKind::Flexible,
            IdentityKind::HomVinberg,
            IdentityKind::HomPreLie,
        ]
    }

    /// The checks that are meaningful for a given structure: the full default
    /// suite for a product, only the bracket-flavored identities for a
    /// structure declared as a bracket (associativity-style laws force a skew
    /// product toward zero, so reporting them would only add noise).
    pub fn applicable_suite(a: &HomAlgebra) -> Vec<IdentityKind> {
        if a.skew_declared() {
            vec![
                IdentityKind::SkewSymmetric,
                IdentityKind::HomJacobi,
                IdentityKind::HomLie,
                IdentityKind::HomLeibniz,
                IdentityKind::HomLieAdmissible,
            ]
        } else {
            IdentityKind::default_suite()
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            IdentityKind::HomAssociative => "hom-associative",
            IdentityKind::HomLeibniz => "hom-leibniz",
            IdentityKind::SkewSymmetric => "skew-symmetric",
            IdentityKind::HomJacobi => "hom-jacobi",
            IdentityKind::HomLie => "hom-lie",
            IdentityKind::HomLieAdmissible => "hom-lie-admissible",
            IdentityKind::GHomAssociative(g) => {
                return write!(f, "{}-hom-associative", g.name().to_lowercase());
            }
            IdentityKind::Flexible => "flexible",
            IdentityKind::HomVinberg => "hom-vinberg",
            IdentityKind::HomPreLie => "hom-pre-lie",
            IdentityKind::Unital => "unital",
        };
        f.write_str(name)
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kind = match s.trim().to_lowercase().as_str() {
            "hom-associative" => IdentityKind::HomAssociative,
            "hom-leibniz" => IdentityKind::HomLeibniz,
            "skew-symmetric" => IdentityKind::SkewSymmetric,
            "hom-jacobi" => IdentityKind::HomJacobi,
            "hom-lie" => IdentityKind::HomLie,
            "hom-lie-admissible" => IdentityKind::HomLieAdmissible,
            "g1" | "g1-hom-associative" => IdentityKind::GHomAssociative(Subgroup::G1),
            "g2" | "g2-hom-associative" => IdentityKind::GHomAssociative(Subgroup::G2),
            "g3" | "g3-hom-associative" => IdentityKind::GHomAssociative(Subgroup::G3),
            "g4" | "g4-hom-associative" => IdentityKind::GHomAssociative(Subgroup::G4),
            "g5" | "g5-hom-associative" => IdentityKind::GHomAssociative(Subgroup::G5),
            "g6" | "g6-hom-associative" => IdentityKind::GHomAssociative(Subgroup::G6),
            "flexible" => IdentityKind::Flexible,
            "hom-vinberg" => IdentityKind::HomVinberg,
            "hom-pre-lie" => IdentityKind::HomPreLie,
            "unital" => IdentityKind::Unital,
            other => return Err(Error::ParseFile(format!("unknown identity `{other}`"))),
        };
        Ok(kind)
    }
}

/// One failing basis tuple: the 1-based tuple indices and the exact value of
/// the defining equation's left-minus-right side there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Defect {
    pub index: Vec<usize>,
    pub value: Vector,
}

/// Result of checking one identity on one algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub kind: IdentityKind,
    pub passed: bool,
    pub residuals: Vec<Defect>,
    pub checked_count: usize,
}

impl Report {
    fn new(kind: IdentityKind, residuals: Vec<Defect>, checked_count: usize) -> Self {
        Report { kind, passed: residuals.is_empty(), residuals, checked_count }
    }

    /// The failing tuples, in enumeration order.
    pub fn failing_indices(&self) -> Vec<Vec<usize>> {
        self.residuals.iter().map(|d| d.index.clone()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "{}: pass ({} tuples checked)", self.kind, self.checked_count)
        } else {
            writeln!(
                f,
                "{}: FAIL ({} of {} tuples)",
                self.kind,
                self.residuals.len(),
                self.checked_count
            )?;
            for defect in &self.residuals {
                let index = defect
                    .index
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(f, "  ({index}): {}", defect.value)?;
            }
            Ok(())
        }
    }
}

/// Precomputed basis data shared by the per-tuple evaluations: twisted basis
/// vectors and the basis multiplication table.
struct Tables {
    twisted: Vec<Vector>,
    products: Vec<Vec<Vector>>,
}

impl Tables {
    fn build(a: &HomAlgebra) -> Tables {
        let n = a.dim();
        let basis: Vec<Vector> = (0..n).map(|i| a.basis(i)).collect();
        let twisted = basis.iter().map(|e| a.twist(e).expect("basis dims agree")).collect();
        let products = basis
            .iter()
            .map(|x| {
                basis
                    .iter()
                    .map(|y| a.multiply(x, y).expect("basis dims agree"))
                    .collect()
            })
            .collect();
        Tables { twisted, products }
    }

    /// mu(mu(e_i, e_j), alpha(e_k)) - mu(alpha(e_i), mu(e_j, e_k))
    fn associator(&self, a: &HomAlgebra, i: usize, j: usize, k: usize) -> Vector {
        let left = a.multiply(&self.products[i][j], &self.twisted[k]).expect("dims");
        let right = a.multiply(&self.twisted[i], &self.products[j][k]).expect("dims");
        left.sub(&right)
    }
}

fn collect_triples(
    n: usize,
    mut residual: impl FnMut(usize, usize, usize) -> Vector,
) -> (Vec<Defect>, usize) {
    let mut defects = Vec::new();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let value = residual(i, j, k);
                if !value.is_zero() {
                    defects.push(Defect { index: vec![i + 1, j + 1, k + 1], value });
                }
            }
        }
    }
    (defects, checked)
}

fn collect_pairs(
    n: usize,
    mut residual: impl FnMut(usize, usize) -> Vector,
) -> (Vec<Defect>, usize) {
    let mut defects = Vec::new();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            checked += 1;
            let value = residual(i, j);
            if !value.is_zero() {
                defects.push(Defect { index: vec![i + 1, j + 1], value });
            }
        }
    }
    (defects, checked)
}

/// Checks one identity on the whole algebra by exact evaluation on basis
/// tuples. See the module docs for tuple shapes; `checked_count` records how
/// many tuples were evaluated.
pub fn check_identity(a: &HomAlgebra, kind: IdentityKind) -> Report {
    let n = a.dim();
    let tables = Tables::build(a);
    match kind {
        IdentityKind::HomAssociative => {
            let (defects, checked) =
                collect_triples(n, |i, j, k| tables.associator(a, i, j, k));
            Report::new(kind, defects, checked)
        }
        IdentityKind::HomLeibniz => {
            let (defects, checked) = collect_triples(n, |i, j, k| {
                let lhs = a.multiply(&tables.products[i][j], &tables.twisted[k]).expect("dims");
                let first = a.multiply(&tables.products[i][k], &tables.twisted[j]).expect("dims");
                let second = a.multiply(&tables.twisted[i], &tables.products[j][k]).expect("dims");
                lhs.sub(&first).sub(&second)
            });
            Report::new(kind, defects, checked)
        }
        IdentityKind::SkewSymmetric => {
            let (defects, checked) =
                collect_pairs(n, |i, j| tables.products[i][j].add(&tables.products[j][i]));
            Report::new(kind, defects, checked)
        }
        IdentityKind::HomJacobi => {
            let (defects, checked) = jacobi_defects(a, &tables, a.skew_declared());
            Report::new(kind, defects, checked)
        }
        IdentityKind::HomLie => {
            let skew = check_identity(a, IdentityKind::SkewSymmetric);
            // A verified skew product justifies the reduced enumeration even
            // when the flag was not declared.
            let (jacobi_defects, jacobi_checked) =
                jacobi_defects(a, &tables, a.skew_declared() || skew.passed);
            let mut residuals = skew.residuals;
            residuals.extend(jacobi_defects);
            Report::new(kind, residuals, skew.checked_count + jacobi_checked)
        }
        IdentityKind::HomLieAdmissible => {
            let commutator = a.commutator_algebra();
            let inner = check_identity(&commutator, IdentityKind::HomJacobi);
            Report::new(kind, inner.residuals, inner.checked_count)
        }
        IdentityKind::GHomAssociative(group) => {
            let (defects, checked) = signed_sum_defects(a, &tables, group);
            Report::new(kind, defects, checked)
        }
        IdentityKind::Flexible => {
            let (defects, checked) = collect_pairs(n, |i, j| tables.associator(a, i, j, i));
            Report::new(kind, defects, checked)
        }
        IdentityKind::HomVinberg => {
            let (defects, checked) = signed_sum_defects(a, &tables, Subgroup::G2);
            Report::new(kind, defects, checked)
        }
        IdentityKind::HomPreLie => {
            let (defects, checked) = signed_sum_defects(a, &tables, Subgroup::G3);
            Report::new(kind, defects, checked)
        }
        IdentityKind::Unital => {
            let mut defects = Vec::new();
            let mut checked = 0;
            for i in 0..n {
                checked += 1;
                let value = tables.products[i][0].sub(&a.basis(i));
                if !value.is_zero() {
                    defects.push(Defect { index: vec![i + 1, 1], value });
                }
            }
            for i in 1..n {
                checked += 1;
                let value = tables.products[0][i].sub(&a.basis(i));
                if !value.is_zero() {
                    defects.push(Defect { index: vec![1, i + 1], value });
                }
            }
            Report::new(kind, defects, checked)
        }
    }
}

/// Twisted Jacobi defects. With a skew product the cyclic sum is alternating,
/// so only strictly increasing triples carry information; otherwise every
/// ordered triple is evaluated.
fn jacobi_defects(a: &HomAlgebra, tables: &Tables, reduced: bool) -> (Vec<Defect>, usize) {
    let n = a.dim();
    let cyclic = |i: usize, j: usize, k: usize| {
        let t1 = a.multiply(&tables.twisted[i], &tables.products[j][k]).expect("dims");
        let t2 = a.multiply(&tables.twisted[j], &tables.products[k][i]).expect("dims");
        let t3 = a.multiply(&tables.twisted[k], &tables.products[i][j]).expect("dims");
        t1.add(&t2).add(&t3)
    };
    if reduced {
        let mut defects = Vec::new();
        let mut checked = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    checked += 1;
                    let value = cyclic(i, j, k);
                    if !value.is_zero() {
                        defects.push(Defect { index: vec![i + 1, j + 1, k + 1], value });
                    }
                }
            }
        }
        (defects, checked)
    } else {
        collect_triples(n, cyclic)
    }
}

fn signed_sum_defects(
    a: &HomAlgebra,
    tables: &Tables,
    group: Subgroup,
) -> (Vec<Defect>, usize) {
    let n = a.dim();
    collect_triples(n, |i, j, k| {
        let idx = [i, j, k];
        let mut sum = Vector::zero(n);
        for perm in group.elements() {
            let (pi, pj, pk) = (idx[perm.map[0]], idx[perm.map[1]], idx[perm.map[2]]);
            let term = tables.associator(a, pi, pj, pk);
            sum = if perm.sign > 0 { sum.add(&term) } else { sum.sub(&term) };
        }
        sum
    })
}

/// The Leibniz identity in operator form: with `R_y` the right multiplication
/// by y and `A` the twist, checks
/// `R_y R_{alpha(z)} = R_z R_{alpha(y)} + A R_{mu(y,z)}` as an exact matrix
/// equation for every basis pair (y, z) = (e_j, e_k). Defects are the
/// flattened matrix differences, indexed by the pair. Equivalent to the
/// elementwise [`IdentityKind::HomLeibniz`] check: a pair defect row `i` is
/// exactly the elementwise defect at (i, j, k).
pub fn check_leibniz_operator_form(a: &HomAlgebra) -> Report {
    let n = a.dim();
    let tables = Tables::build(a);
    let adjoints: Vec<Matrix> =
        (0..n).map(|i| a.adjoint(&a.basis(i)).expect("dims")).collect();
    let twisted_adjoints: Vec<Matrix> =
        (0..n).map(|i| a.adjoint(&tables.twisted[i]).expect("dims")).collect();
    let mut defects = Vec::new();
    let mut checked = 0;
    for j in 0..n {
        for k in 0..n {
            checked += 1;
            // Row convention: the matrix of "apply f then g" is M_f * M_g.
            let lhs = adjoints[j].mul(&twisted_adjoints[k]);
            let first = adjoints[k].mul(&twisted_adjoints[j]);
            let bracket_adjoint = a.adjoint(&tables.products[j][k]).expect("dims");
            let second = a.alpha().mul(&bracket_adjoint);
            let difference = lhs.sub(&first).sub(&second);
            if !difference.is_zero() {
                let mut flat = Vec::with_capacity(n * n);
                for r in 0..n {
                    for c in 0..n {
                        flat.push(difference.get(r, c).clone());
                    }
                }
                defects.push(Defect { index: vec![j + 1, k + 1], value: Vector::new(flat) });
            }
        }
    }
    Report::new(IdentityKind::HomLeibniz, defects, checked)
}

/// Checks the symmetry of the cyclic associator sum in its last two
/// arguments, which characterizes [`IdentityKind::HomLieAdmissible`]. The
/// defect at (i, j, k) equals, up to sign, the commutator bracket's Jacobi
/// defect there, so the two routes agree tuple by tuple.
pub fn check_s_symmetry(a: &HomAlgebra) -> Report {
    let n = a.dim();
    let basis: Vec<Vector> = (0..n).map(|i| a.basis(i)).collect();
    let (defects, checked) = collect_triples(n, |i, j, k| {
        let lhs = a.s_form(&basis[i], &basis[j], &basis[k]).expect("dims");
        let rhs = a.s_form(&basis[i], &basis[k], &basis[j]).expect("dims");
        lhs.sub(&rhs)
    });
    Report::new(IdentityKind::HomLieAdmissible, defects, checked)
}

/// Checks flexibility through its polarized, trilinear form: the twisted
/// associator changes sign when the outer arguments swap. This is the
/// complete decision procedure for flexibility on the whole space; its
/// defect at (i, j, i) is twice the [`IdentityKind::Flexible`] defect at
/// (i, j).
pub fn check_flexible_antisymmetry(a: &HomAlgebra) -> Report {
    let n = a.dim();
    let tables = Tables::build(a);
    let (defects, checked) = collect_triples(n, |i, j, k| {
        tables.associator(a, i, j, k).add(&tables.associator(a, k, j, i))
    });
    Report::new(IdentityKind::Flexible, defects, checked)
}

/// Checks flexibility in derivation form: commutators with twisted arguments
/// act as derivations of the symmetrized product,
/// `[alpha(x), y . z] = [x, y] . alpha(z) + alpha(y) . [x, z]`.
pub fn check_flexible_derivation_form(a: &HomAlgebra) -> Report {
    let n = a.dim();
    let plus = a.jordan_algebra();
    let minus = a.commutator_algebra();
    let basis: Vec<Vector> = (0..n).map(|i| a.basis(i)).collect();
    let twisted: Vec<Vector> =
        (0..n).map(|i| a.twist(&basis[i]).expect("dims")).collect();
    let (defects, checked) = collect_triples(n, |i, j, k| {
        let lhs = minus
            .multiply(&twisted[i], &plus.multiply(&basis[j], &basis[k]).expect("dims"))
            .expect("dims");
        let first = plus
            .multiply(&minus.multiply(&basis[i], &basis[j]).expect("dims"), &twisted[k])
            .expect("dims");
        let second = plus
            .multiply(&twisted[j], &minus.multiply(&basis[i], &basis[k]).expect("dims"))
            .expect("dims");
        lhs.sub(&first).sub(&second)
    });
    Report::new(IdentityKind::Flexible, defects, checked)
}

/// Convenience wrapper running several checks in order.
pub fn check_many(a: &HomAlgebra, kinds: &[IdentityKind]) -> Vec<Report> {
    kinds.iter().map(|&k| check_identity(a, k)).collect()
}

/// Scales a defect-free claim: true when every one of `kinds` passes.
pub fn all_pass(a: &HomAlgebra, kinds: &[IdentityKind]) -> bool {
    kinds.iter().all(|&k| check_identity(a, k).passed)
}
