//! Mutation products and isotopies over exact matrix algebras, plus the
//! formal word algebra with a separator symbol.
//!
//! Elements of the word algebra are formal sums of words
//! `x1 T x2 T ... T x(d+1)` whose letters are square rational matrices and
//! whose separator `T` is purely formal. Two words are equal only when their
//! letter tuples are equal entrywise; no identification across letters is
//! performed beyond dropping words containing a zero letter and merging the
//! separator-free part into a single matrix. This literal reading keeps the
//! star-product checks sharp: a non-idempotent sandwich element produces
//! words whose letter values genuinely differ between the two groupings.

use std::collections::BTreeMap;

use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::HomAlgebra;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::rational::{rat, Rational};
use crate::sample::random_matrix;

/// A degree-capped formal sum of separator words over m x m matrices. The
/// degree of a word is its separator count, one less than its letter count.
#[derive(Clone, Eq, Debug)]
pub struct TElement {
    letter_dim: usize,
    cap: usize,
    words: BTreeMap<Vec<Matrix>, Rational>,
}

impl PartialEq for TElement {
    /// The cap is a truncation context, not part of the value.
    fn eq(&self, other: &Self) -> bool {
        self.letter_dim == other.letter_dim && self.words == other.words
    }
}

fn normalize(
    letter_dim: usize,
    cap: usize,
    raw: BTreeMap<Vec<Matrix>, Rational>,
) -> TElement {
    let mut words = BTreeMap::new();
    let mut constant = Matrix::zero(letter_dim, letter_dim);
    for (letters, coeff) in raw {
        if coeff.is_zero() || letters.iter().any(Matrix::is_zero) {
            continue;
        }
        if letters.len() == 1 {
            constant = constant.add(&letters[0].scale(&coeff));
        } else {
            words.insert(letters, coeff);
        }
    }
    if !constant.is_zero() {
        words.insert(vec![constant], rat(1));
    }
    TElement { letter_dim, cap, words }
}

impl TElement {
    pub fn zero(letter_dim: usize, cap: usize) -> TElement {
        TElement { letter_dim, cap, words: BTreeMap::new() }
    }

    /// Embeds a matrix as the separator-free word.
    pub fn from_matrix(matrix: &Matrix, cap: usize) -> TElement {
        assert!(matrix.is_square(), "letters must be square");
        let mut raw = BTreeMap::new();
        raw.insert(vec![matrix.clone()], rat(1));
        normalize(matrix.rows(), cap, raw)
    }

    /// A single scaled word. The letters must be square matrices of one
    /// size, at least one of them, and the word must fit under the cap.
    pub fn word(coeff: Rational, letters: Vec<Matrix>, cap: usize) -> Result<TElement, Error> {
        let first = letters.first().ok_or_else(|| Error::Unsupported("empty word".into()))?;
        let m = first.rows();
        for letter in &letters {
            if !letter.is_square() || letter.rows() != m {
                return Err(Error::Dimension { expected: m, got: letter.rows().max(letter.cols()) });
            }
        }
        let degree = letters.len() - 1;
        if degree > cap {
            return Err(Error::CapExceeded { degree, cap });
        }
        let mut raw = BTreeMap::new();
        raw.insert(letters, coeff);
        Ok(normalize(m, cap, raw))
    }

    pub fn letter_dim(&self) -> usize {
        self.letter_dim
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Highest separator count present; the zero element has none.
    pub fn degree(&self) -> Option<usize> {
        self.words.keys().map(|letters| letters.len() - 1).max()
    }

    /// The canonical words: letter tuple to coefficient.
    pub fn words(&self) -> &BTreeMap<Vec<Matrix>, Rational> {
        &self.words
    }

    /// The matrix a separator-free element embeds; `None` above degree 0.
    pub fn as_matrix(&self) -> Option<Matrix> {
        match self.degree() {
            None => Some(Matrix::zero(self.letter_dim, self.letter_dim)),
            Some(0) => {
                let (letters, coeff) = self.words.iter().next().expect("degree 0 is nonempty");
                Some(letters[0].scale(coeff))
            }
            Some(_) => None,
        }
    }

    pub fn add(&self, other: &TElement) -> TElement {
        assert_eq!(self.letter_dim, other.letter_dim, "letter sizes must agree");
        let mut raw = self.words.clone();
        for (letters, coeff) in &other.words {
            let entry = raw.entry(letters.clone()).or_insert_with(Rational::zero);
            *entry += coeff;
        }
        normalize(self.letter_dim, self.cap.max(other.cap), raw)
    }

    pub fn scale(&self, factor: &Rational) -> TElement {
        let raw = self
            .words
            .iter()
            .map(|(letters, coeff)| (letters.clone(), coeff * factor))
            .collect();
        normalize(self.letter_dim, self.cap, raw)
    }

    pub fn neg(&self) -> TElement {
        self.scale(&rat(-1))
    }

    pub fn sub(&self, other: &TElement) -> TElement {
        self.add(&other.neg())
    }
}

fn check_letter_dims(u: &TElement, v: &TElement) -> Result<(), Error> {
    if u.letter_dim != v.letter_dim {
        return Err(Error::Dimension { expected: u.letter_dim, got: v.letter_dim });
    }
    Ok(())
}

/// The word algebra product: bilinear extension of concatenation merging the
/// boundary letters,
/// `(x1 T ... T xn)(y1 T ... T ym) = x1 T ... T (xn y1) T ... T ym`.
/// Degrees add; exceeding the cap is an error rather than a truncation.
pub fn word_product(u: &TElement, v: &TElement) -> Result<TElement, Error> {
    check_letter_dims(u, v)?;
    let cap = u.cap.max(v.cap);
    let mut raw: BTreeMap<Vec<Matrix>, Rational> = BTreeMap::new();
    for (lu, cu) in &u.words {
        for (lv, cv) in &v.words {
            let degree = (lu.len() - 1) + (lv.len() - 1);
            if degree > cap {
                return Err(Error::CapExceeded { degree, cap });
            }
            let mut letters = Vec::with_capacity(lu.len() + lv.len() - 1);
            letters.extend_from_slice(&lu[..lu.len() - 1]);
            letters.push(lu[lu.len() - 1].mul(&lv[0]));
            letters.extend_from_slice(&lv[1..]);
            let entry = raw.entry(letters).or_insert_with(Rational::zero);
            *entry += cu * cv;
        }
    }
    Ok(normalize(u.letter_dim, cap, raw))
}

/// Separator concatenation: bilinear extension of
/// `(x1 T ... T xn) T (y1 T ... T ym)`, raising the degree by one.
pub fn t_join(u: &TElement, v: &TElement) -> Result<TElement, Error> {
    check_letter_dims(u, v)?;
    let cap = u.cap.max(v.cap);
    let mut raw: BTreeMap<Vec<Matrix>, Rational> = BTreeMap::new();
    for (lu, cu) in &u.words {
        for (lv, cv) in &v.words {
            let degree = lu.len() + lv.len() - 1;
            if degree > cap {
                return Err(Error::CapExceeded { degree, cap });
            }
            let mut letters = Vec::with_capacity(lu.len() + lv.len());
            letters.extend_from_slice(lu);
            letters.extend_from_slice(lv);
            let entry = raw.entry(letters).or_insert_with(Rational::zero);
            *entry += cu * cv;
        }
    }
    Ok(normalize(u.letter_dim, cap, raw))
}

fn sandwich(w: &TElement, s: &TElement) -> Result<TElement, Error> {
    word_product(w, &word_product(s, w)?)
}

/// The star product `u * v = scalar (w u w) T (w v w)`: both factors are
/// sandwiched by `w` inside the word algebra, then joined by a separator.
/// The result's degree is deg(u) + deg(v) + 1, which must fit the cap.
pub fn star_product(
    scalar: &Rational,
    w: &Matrix,
    u: &TElement,
    v: &TElement,
) -> Result<TElement, Error> {
    let cap = u.cap().max(v.cap());
    let w_elt = TElement::from_matrix(w, cap);
    check_letter_dims(&w_elt, u)?;
    let left = sandwich(&w_elt, u)?;
    let right = sandwich(&w_elt, v)?;
    Ok(t_join(&left, &right)?.scale(scalar))
}

/// The twist attached to the star product: `s` sandwiched by `w`. Degree is
/// preserved, so this never overflows the cap.
pub fn iso_twist(w: &Matrix, s: &TElement) -> TElement {
    let w_elt = TElement::from_matrix(w, s.cap());
    assert_eq!(w_elt.letter_dim(), s.letter_dim(), "letter sizes must agree");
    sandwich(&w_elt, s).expect("sandwiching preserves degree")
}

/// One failing triple of a star-product law, with the exact word-algebra
/// residual (left side minus right side).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarDefect {
    pub x: Matrix,
    pub y: Matrix,
    pub z: Matrix,
    pub residual: TElement,
}

/// Outcome of checking a star-product law over a set of matrix triples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarCheckOutcome {
    pub passed: bool,
    pub checked: usize,
    pub defects: Vec<StarDefect>,
}

/// `(x*y)*z - x*(y*z)` for separator-free x, y, z.
pub fn star_associator(
    scalar: &Rational,
    w: &Matrix,
    x: &Matrix,
    y: &Matrix,
    z: &Matrix,
    cap: usize,
) -> TElement {
    assert!(cap >= 3, "three-letter words need cap at least 3");
    let xe = TElement::from_matrix(x, cap);
    let ye = TElement::from_matrix(y, cap);
    let ze = TElement::from_matrix(z, cap);
    let xy = star_product(scalar, w, &xe, &ye).expect("degree 1 fits");
    let yz = star_product(scalar, w, &ye, &ze).expect("degree 1 fits");
    let left = star_product(scalar, w, &xy, &ze).expect("degree 2 fits");
    let right = star_product(scalar, w, &xe, &yz).expect("degree 2 fits");
    left.sub(&right)
}

/// `alpha(x)*(y*z) - (x*y)*alpha(z)` with alpha the sandwich twist, for
/// separator-free x, y, z.
pub fn star_hom_associator(
    scalar: &Rational,
    w: &Matrix,
    x: &Matrix,
    y: &Matrix,
    z: &Matrix,
    cap: usize,
) -> TElement {
    assert!(cap >= 3, "three-letter words need cap at least 3");
    let xe = TElement::from_matrix(x, cap);
    let ye = TElement::from_matrix(y, cap);
    let ze = TElement::from_matrix(z, cap);
    let xy = star_product(scalar, w, &xe, &ye).expect("degree 1 fits");
    let yz = star_product(scalar, w, &ye, &ze).expect("degree 1 fits");
    let left = star_product(scalar, w, &iso_twist(w, &xe), &yz).expect("degree 2 fits");
    let right = star_product(scalar, w, &xy, &iso_twist(w, &ze)).expect("degree 2 fits");
    left.sub(&right)
}

fn run_star_check<F>(triples: Vec<(Matrix, Matrix, Matrix)>, mut residual: F) -> StarCheckOutcome
where
    F: FnMut(&Matrix, &Matrix, &Matrix) -> TElement,
{
    let mut defects = Vec::new();
    let checked = triples.len();
    for (x, y, z) in triples {
        let r = residual(&x, &y, &z);
        if !r.is_zero() {
            defects.push(StarDefect { x, y, z, residual: r });
        }
    }
    StarCheckOutcome { passed: defects.is_empty(), checked, defects }
}

fn random_triples(m: usize, samples: usize, seed: u64) -> Vec<(Matrix, Matrix, Matrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            (
                random_matrix(&mut rng, m),
                random_matrix(&mut rng, m),
                random_matrix(&mut rng, m),
            )
        })
        .collect()
}

/// All matrix units E(p,q) of size m, row-major.
pub fn matrix_units(m: usize) -> Vec<Matrix> {
    let mut units = Vec::with_capacity(m * m);
    for p in 0..m {
        for q in 0..m {
            let mut e = Matrix::zero(m, m);
            e.set(p, q, rat(1));
            units.push(e);
        }
    }
    units
}

fn unit_triples(m: usize) -> Vec<(Matrix, Matrix, Matrix)> {
    let units = matrix_units(m);
    let mut triples = Vec::with_capacity(units.len().pow(3));
    for x in &units {
        for y in &units {
            for z in &units {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    triples
}

/// Checks `(x*y)*z = x*(y*z)` on random separator-free triples.
pub fn check_star_associativity(
    scalar: &Rational,
    w: &Matrix,
    samples: usize,
    cap: usize,
    seed: u64,
) -> StarCheckOutcome {
    let triples = random_triples(w.rows(), samples, seed);
    run_star_check(triples, |x, y, z| star_associator(scalar, w, x, y, z, cap))
}

/// Checks `alpha(x)*(y*z) = (x*y)*alpha(z)` on random separator-free
/// triples, with alpha the sandwich twist.
pub fn check_star_hom_associativity(
    scalar: &Rational,
    w: &Matrix,
    samples: usize,
    cap: usize,
    seed: u64,
) -> StarCheckOutcome {
    let triples = random_triples(w.rows(), samples, seed);
    run_star_check(triples, |x, y, z| star_hom_associator(scalar, w, x, y, z, cap))
}

/// Exhaustive `(x*y)*z = x*(y*z)` over all matrix-unit triples.
pub fn check_star_associativity_on_units(
    scalar: &Rational,
    w: &Matrix,
    cap: usize,
) -> StarCheckOutcome {
    run_star_check(unit_triples(w.rows()), |x, y, z| star_associator(scalar, w, x, y, z, cap))
}

/// Exhaustive `alpha(x)*(y*z) = (x*y)*alpha(z)` over all matrix-unit
/// triples.
pub fn check_star_hom_associativity_on_units(
    scalar: &Rational,
    w: &Matrix,
    cap: usize,
) -> StarCheckOutcome {
    run_star_check(unit_triples(w.rows()), |x, y, z| star_hom_associator(scalar, w, x, y, z, cap))
}

fn require_same_square(expected: usize, m: &Matrix) -> Result<(), Error> {
    if !m.is_square() || m.rows() != expected {
        return Err(Error::Dimension { expected, got: m.rows().max(m.cols()) });
    }
    Ok(())
}

/// The two-parameter mutation bracket `(X, Y) = X P Y - Y Q X`.
pub fn mutation_bracket(
    p: &Matrix,
    q: &Matrix,
    x: &Matrix,
    y: &Matrix,
) -> Result<Matrix, Error> {
    let m = p.rows();
    for candidate in [p, q, x, y] {
        require_same_square(m, candidate)?;
    }
    Ok(x.mul(p).mul(y).sub(&y.mul(q).mul(x)))
}

/// The mutation product `X x_Q Y = X Q Y` on m x m matrices, as an
/// m^2-dimensional structure over the matrix-unit basis (row-major) with the
/// identity twist, so the twisted identities coincide with the classical
/// ones.
pub fn mutation_algebra(q: &Matrix) -> Result<HomAlgebra, Error> {
    if !q.is_square() {
        return Err(Error::Dimension { expected: q.rows(), got: q.cols() });
    }
    let m = q.rows();
    let dim = m * m;
    let mut entries = Vec::new();
    // E(p1,q1) Q E(p2,q2) = Q[q1][p2] E(p1,q2)
    for p1 in 0..m {
        for q1 in 0..m {
            for p2 in 0..m {
                for q2 in 0..m {
                    let coeff = q.get(q1, p2);
                    if !coeff.is_zero() {
                        entries.push((p1 * m + q1, p2 * m + q2, p1 * m + q2, coeff.clone()));
                    }
                }
            }
        }
    }
    HomAlgebra::from_entries(dim, &entries, Matrix::identity(dim), false)
}
