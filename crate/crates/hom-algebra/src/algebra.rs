//! Finite-dimensional algebras given by structure constants, together with a
//! linear twisting map.
//!
//! An algebra here is a triple (V, mu, alpha): a rational vector space with a
//! fixed basis, a bilinear product `mu` stored as the structure constant
//! tensor `C[i][j][k]` (the product of basis vectors i and j has coordinate k
//! equal to `C[i][j][k]`), and a linear map `alpha` stored row-wise as in
//! [`crate::linalg`]. The product carries no implicit symmetry; bracket
//! algebras set the `skew_declared` flag, which is validated on construction
//! and unlocks the reduced triple enumeration in the identity checks.
//!
//! All public indices on this API are 0-based. File formats and printed
//! reports use 1-based indices; the conversion happens at those boundaries.

use num::Zero;

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::rational::{rat, ratio, Rational};

/// Algebra with a twisting map, in structure constants.
#[derive(Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    dim: usize,
    constants: Vec<Rational>,
    alpha: Matrix,
    skew_declared: bool,
}

impl HomAlgebra {
    /// Builds an algebra from the dense constant tensor, laid out as
    /// `constants[(i * dim + j) * dim + k]`.
    pub fn new(
        dim: usize,
        constants: Vec<Rational>,
        alpha: Matrix,
        skew_declared: bool,
    ) -> Result<Self, Error> {
        if constants.len() != dim * dim * dim {
            return Err(Error::Dimension { expected: dim * dim * dim, got: constants.len() });
        }
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(Error::Dimension { expected: dim, got: alpha.rows().max(alpha.cols()) });
        }
        let algebra = HomAlgebra { dim, constants, alpha, skew_declared };
        if skew_declared {
            for i in 0..dim {
                for j in i..dim {
                    for k in 0..dim {
                        if algebra.constant(i, j, k) + algebra.constant(j, i, k)
                            != Rational::zero()
                        {
                            return Err(Error::NotSkew { i: i + 1, j: j + 1, k: k + 1 });
                        }
                    }
                }
            }
        }
        Ok(algebra)
    }

    /// Builds an algebra from sparse entries `(i, j, k, value)`, 0-based;
    /// omitted entries are zero.
    pub fn from_entries(
        dim: usize,
        entries: &[(usize, usize, usize, Rational)],
        alpha: Matrix,
        skew_declared: bool,
    ) -> Result<Self, Error> {
        let mut constants = vec![Rational::zero(); dim * dim * dim];
        for &(i, j, k, ref value) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index: index + 1, bound: dim });
                }
            }
            constants[(i * dim + j) * dim + k] = value.clone();
        }
        HomAlgebra::new(dim, constants, alpha, skew_declared)
    }

    /// Builds a skew product from bracket entries with `i < j` only, 0-based.
    /// The `i > j` entries are filled in by the sign rule and the diagonal is
    /// zero. Entries with `i >= j` are rejected.
    pub fn from_bracket_entries(
        dim: usize,
        entries: &[(usize, usize, usize, Rational)],
        alpha: Matrix,
    ) -> Result<Self, Error> {
        let mut constants = vec![Rational::zero(); dim * dim * dim];
        for &(i, j, k, ref value) in entries {
            if i >= j {
                return Err(Error::BracketEntryOrder { i: i + 1, j: j + 1 });
            }
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index: index + 1, bound: dim });
                }
            }
            constants[(i * dim + j) * dim + k] = value.clone();
            constants[(j * dim + i) * dim + k] = -value.clone();
        }
        HomAlgebra::new(dim, constants, alpha, true)
    }

    /// The zero product with the identity twist.
    pub fn zero_algebra(dim: usize) -> Self {
        HomAlgebra {
            dim,
            constants: vec![Rational::zero(); dim * dim * dim],
            alpha: Matrix::identity(dim),
            skew_declared: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn skew_declared(&self) -> bool {
        self.skew_declared
    }

    /// Structure constant `C[i][j][k]`, 0-based.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Replaces the twisting map, keeping the product.
    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self, Error> {
        HomAlgebra::new(self.dim, self.constants.clone(), alpha, self.skew_declared)
    }

    /// Same product and twist, regardless of how the skew flag was declared.
    pub fn same_structure(&self, other: &HomAlgebra) -> bool {
        self.dim == other.dim && self.constants == other.constants && self.alpha == other.alpha
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim, i)
    }

    /// The bilinear product of two coordinate vectors.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            let xi = x.get(i);
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let yj = y.get(j);
                if yj.is_zero() {
                    continue;
                }
                let weight = xi * yj;
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        let cur = out.get(k) + &weight * c;
                        out.set(k, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Applies the twisting map.
    pub fn twist(&self, x: &Vector) -> Result<Vector, Error> {
        self.check_dim(x)?;
        self.alpha.apply_row(x)
    }

    /// The algebra with product `[x, y] = mu(x, y) - mu(y, x)` and the same
    /// twist. The result is skew by construction.
    pub fn commutator_algebra(&self) -> HomAlgebra {
        let mut constants = vec![Rational::zero(); self.dim * self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    constants[(i * self.dim + j) * self.dim + k] =
                        self.constant(i, j, k) - self.constant(j, i, k);
                }
            }
        }
        HomAlgebra {
            dim: self.dim,
            constants,
            alpha: self.alpha.clone(),
            skew_declared: true,
        }
    }

    /// The algebra with product `x . y = (mu(x, y) + mu(y, x)) / 2` and the
    /// same twist.
    pub fn jordan_algebra(&self) -> HomAlgebra {
        let half = ratio(1, 2);
        let mut constants = vec![Rational::zero(); self.dim * self.dim * self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    constants[(i * self.dim + j) * self.dim + k] =
                        (self.constant(i, j, k) + self.constant(j, i, k)) * &half;
                }
            }
        }
        HomAlgebra {
            dim: self.dim,
            constants,
            alpha: self.alpha.clone(),
            skew_declared: false,
        }
    }

    /// Twisted associator `mu(mu(x, y), alpha(z)) - mu(alpha(x), mu(y, z))`.
    pub fn alpha_associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        let left = self.multiply(&self.multiply(x, y)?, &self.twist(z)?)?;
        let right = self.multiply(&self.twist(x)?, &self.multiply(y, z)?)?;
        Ok(left.sub(&right))
    }

    /// Cyclic sum of twisted associators over (x, y, z).
    pub fn s_form(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, Error> {
        let a = self.alpha_associator(x, y, z)?;
        let b = self.alpha_associator(y, z, x)?;
        let c = self.alpha_associator(z, x, y)?;
        Ok(a.add(&b).add(&c))
    }

    /// Same value as [`HomAlgebra::s_form`], computed along the other route:
    /// the cyclic sum of commutators `[mu(x, y), alpha(z)]`. The two paths
    /// agreeing on every input is pinned by tests.
    pub fn s_form_via_commutators(
        &self,
        x: &Vector,
        y: &Vector,
        z: &Vector,
    ) -> Result<Vector, Error> {
        let mut out = Vector::zero(self.dim);
        for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
            let product = self.multiply(u, v)?;
            let twisted = self.twist(w)?;
            let commutator =
                self.multiply(&product, &twisted)?.sub(&self.multiply(&twisted, &product)?);
            out = out.add(&commutator);
        }
        Ok(out)
    }

    /// Matrix of the right multiplication operator `x -> mu(x, y)` in the row
    /// convention of [`crate::linalg`].
    pub fn adjoint(&self, y: &Vector) -> Result<Matrix, Error> {
        self.check_dim(y)?;
        let mut m = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            let image = self.multiply(&self.basis(i), y)?;
            for k in 0..self.dim {
                m.set(i, k, image.get(k).clone());
            }
        }
        Ok(m)
    }

    fn check_dim(&self, x: &Vector) -> Result<(), Error> {
        if x.dim() != self.dim {
            return Err(Error::Dimension { expected: self.dim, got: x.dim() });
        }
        Ok(())
    }
}

impl std::fmt::Debug for HomAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HomAlgebra(dim={}", self.dim)?;
        if self.skew_declared {
            write!(f, ", skew")?;
        }
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        entries.push(format!("C[{},{},{}]={}", i + 1, j + 1, k + 1, c));
                    }
                }
            }
        }
        write!(f, ", {{{}}}, alpha={:?})", entries.join(", "), self.alpha)
    }
}

/// The six subgroups of the permutations of three letters, in the standard
/// enumeration: the trivial group, the three groups generated by a single
/// transposition (swapping the first two, last two, and outer arguments), the
/// alternating group, and the full group.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Subgroup {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

/// Permutation of three slots with its signature. `apply` sends the tuple
/// (x1, x2, x3) to (x[map[0]], x[map[1]], x[map[2]]).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedPerm3 {
    pub map: [usize; 3],
    pub sign: i8,
}

const IDENTITY: SignedPerm3 = SignedPerm3 { map: [0, 1, 2], sign: 1 };
const SWAP_12: SignedPerm3 = SignedPerm3 { map: [1, 0, 2], sign: -1 };
const SWAP_23: SignedPerm3 = SignedPerm3 { map: [0, 2, 1], sign: -1 };
const SWAP_13: SignedPerm3 = SignedPerm3 { map: [2, 1, 0], sign: -1 };
const CYCLE_LEFT: SignedPerm3 = SignedPerm3 { map: [1, 2, 0], sign: 1 };
const CYCLE_RIGHT: SignedPerm3 = SignedPerm3 { map: [2, 0, 1], sign: 1 };

impl Subgroup {
    pub const ALL: [Subgroup; 6] =
        [Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5, Subgroup::G6];

    pub fn elements(&self) -> &'static [SignedPerm3] {
        match self {
            Subgroup::G1 => &[IDENTITY],
            Subgroup::G2 => &[IDENTITY, SWAP_12],
            Subgroup::G3 => &[IDENTITY, SWAP_23],
            Subgroup::G4 => &[IDENTITY, SWAP_13],
            Subgroup::G5 => &[IDENTITY, CYCLE_LEFT, CYCLE_RIGHT],
            Subgroup::G6 => &[IDENTITY, SWAP_12, SWAP_23, SWAP_13, CYCLE_LEFT, CYCLE_RIGHT],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Subgroup::G1 => "G1",
            Subgroup::G2 => "G2",
            Subgroup::G3 => "G3",
            Subgroup::G4 => "G4",
            Subgroup::G5 => "G5",
            Subgroup::G6 => "G6",
        }
    }
}

impl SignedPerm3 {
    pub fn apply<'a>(&self, triple: [&'a Vector; 3]) -> [&'a Vector; 3] {
        [triple[self.map[0]], triple[self.map[1]], triple[self.map[2]]]
    }
}

/// Full matrix algebra on m x m matrices, in the matrix unit basis ordered
/// row-major (E11, E12, ..., Emm), with the identity twist.
pub fn full_matrix_algebra(m: usize) -> HomAlgebra {
    let dim = m * m;
    let mut entries = Vec::new();
    // E(p,q) * E(r,s) = [q == r] E(p,s)
    for p in 0..m {
        for q in 0..m {
            for r in 0..m {
                for s in 0..m {
                    if q == r {
                        entries.push((p * m + q, r * m + s, p * m + s, rat(1)));
                    }
                }
            }
        }
    }
    HomAlgebra::from_entries(dim, &entries, Matrix::identity(dim), false)
        .expect("matrix algebra constants are well formed")
}

/// Upper triangular m x m matrices, basis E(p,q) for p <= q ordered
/// row-major, with the identity twist.
pub fn upper_triangular_algebra(m: usize) -> HomAlgebra {
    let mut index = std::collections::BTreeMap::new();
    for p in 0..m {
        for q in p..m {
            let next = index.len();
            index.insert((p, q), next);
        }
    }
    let dim = index.len();
    let mut entries = Vec::new();
    for (&(p, q), &a) in &index {
        for (&(r, s), &b) in &index {
            if q == r {
                entries.push((a, b, index[&(p, s)], rat(1)));
            }
        }
    }
    HomAlgebra::from_entries(dim, &entries, Matrix::identity(dim), false)
        .expect("triangular algebra constants are well formed")
}

/// Truncated polynomial algebra on n basis elements 1, t, ..., t^(n-1) with
/// t^n = 0, unital in the first basis element, identity twist.
pub fn truncated_polynomial_algebra(n: usize) -> HomAlgebra {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                entries.push((i, j, i + j, rat(1)));
            }
        }
    }
    HomAlgebra::from_entries(n, &entries, Matrix::identity(n), false)
        .expect("truncated polynomial constants are well formed")
}
