//! Base change: moving a product and twist across an invertible linear map,
//! and searching small candidate sets for an isomorphism between two given
//! structures.

use crate::algebra::HomAlgebra;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::rational::{rat, Rational};
use num::Zero;

/// An invertible linear map with its inverse cached. Rows are basis images:
/// the map sends a row vector x to x * forward.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvertibleMap {
    forward: Matrix,
    inverse: Matrix,
}

impl InvertibleMap {
    /// Fails with [`Error::Singular`] when the matrix has no inverse.
    pub fn new(forward: Matrix) -> Result<InvertibleMap, Error> {
        let inverse = forward.inverse()?;
        Ok(InvertibleMap { forward, inverse })
    }

    pub fn identity(n: usize) -> InvertibleMap {
        InvertibleMap { forward: Matrix::identity(n), inverse: Matrix::identity(n) }
    }

    pub fn forward(&self) -> &Matrix {
        &self.forward
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    /// The inverse map, with the cached pair swapped.
    pub fn inverted(&self) -> InvertibleMap {
        InvertibleMap { forward: self.inverse.clone(), inverse: self.forward.clone() }
    }

    /// First this map, then `next`; in the row convention the composite
    /// matrix is the product of the two.
    pub fn then(&self, next: &InvertibleMap) -> InvertibleMap {
        InvertibleMap {
            forward: self.forward.mul(&next.forward),
            inverse: next.inverse.mul(&self.inverse),
        }
    }
}

/// Pulls the structure back along the map: the result is the unique algebra
/// making `map` an isomorphism onto `a`. Writing F for the matrix and G for
/// its inverse, the new constants are
/// `C'(i,j,s) = sum F(i,p) F(j,q) C(p,q,m) G(m,s)` and the new twist is
/// `F * alpha * G`. A declared skew product stays skew.
pub fn transport(a: &HomAlgebra, map: &InvertibleMap) -> HomAlgebra {
    let n = a.dim();
    assert_eq!(map.forward().rows(), n, "map dimension must match the algebra");
    let f = map.forward();
    let g = map.inverse();
    let mut constants = vec![Rational::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            // mu(f(e_i), f(e_j)) expressed through the old constants.
            let mut image = vec![Rational::zero(); n];
            for p in 0..n {
                if f.get(i, p).is_zero() {
                    continue;
                }
                for q in 0..n {
                    let weight = f.get(i, p) * f.get(j, q);
                    if weight.is_zero() {
                        continue;
                    }
                    for (m, slot) in image.iter_mut().enumerate() {
                        *slot += &weight * a.constant(p, q, m);
                    }
                }
            }
            // Back through the inverse to land in the new coordinates.
            for s in 0..n {
                let mut value = Rational::zero();
                for (m, coord) in image.iter().enumerate() {
                    value += coord * g.get(m, s);
                }
                constants[(i * n + j) * n + s] = value;
            }
        }
    }
    let alpha = f.mul(a.alpha()).mul(g);
    HomAlgebra::new(n, constants, alpha, a.skew_declared())
        .expect("transport preserves declared skewness")
}

/// Tries each candidate matrix in order and returns the first invertible map
/// whose pullback of `target`'s ambient space carries `source`... precisely:
/// the first map f with `transport(source, f) == target` up to the skew flag.
/// A singular candidate aborts the search with [`Error::Singular`].
pub fn orbit_search<I>(
    source: &HomAlgebra,
    target: &HomAlgebra,
    candidates: I,
) -> Result<Option<InvertibleMap>, Error>
where
    I: IntoIterator<Item = Matrix>,
{
    for candidate in candidates {
        let map = InvertibleMap::new(candidate)?;
        let moved = transport(source, &map);
        if moved.same_structure(target) {
            // Re-verify from the target side before reporting.
            let back = transport(target, &map.inverted());
            debug_assert!(back.same_structure(source));
            return Ok(Some(map));
        }
    }
    Ok(None)
}

/// All signed permutation matrices of size n, in a fixed order: permutations
/// lexicographically, and for each permutation the 2^n sign patterns counted
/// in binary with all-positive first. Row i carries the sign at the
/// permuted column.
pub fn signed_permutation_matrices(n: usize) -> Vec<Matrix> {
    let mut perms = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    lex_permutations(n, &mut current, &mut used, &mut perms);
    let mut matrices = Vec::with_capacity(perms.len() << n);
    for perm in &perms {
        for mask in 0u32..(1 << n) {
            let mut m = Matrix::zero(n, n);
            for (i, &col) in perm.iter().enumerate() {
                let sign = if mask >> i & 1 == 1 { rat(-1) } else { rat(1) };
                m.set(i, col, sign);
            }
            matrices.push(m);
        }
    }
    matrices
}

fn lex_permutations(
    n: usize,
    current: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    for candidate in 0..n {
        if !used[candidate] {
            used[candidate] = true;
            current.push(candidate);
            lex_permutations(n, current, used, out);
            current.pop();
            used[candidate] = false;
        }
    }
}
