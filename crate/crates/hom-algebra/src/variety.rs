//! Structure-constant varieties: the polynomial systems whose zero sets are
//! the twisted algebras of a given dimension and kind.
//!
//! Variables are the product constants `C(i,j,k)` and the twist entries
//! `a(i,j)`, all 1-based. For the skew bracket variety only the constants
//! with `i < j` are kept; the rewriting `C(j,i,k) = -C(i,j,k)`,
//! `C(i,i,k) = 0` is applied while generating, so some equations collapse to
//! the zero polynomial. Those are kept, tagged, so the equation count and
//! ordering depend only on the dimension.
//!
//! Equation orientations match the checkers in [`crate::identities`] up to a
//! global sign per kind: an associativity equation is the `s` component of
//! `mu(alpha(e_i), mu(e_j, e_k)) - mu(mu(e_i, e_j), alpha(e_k))`, and a
//! bracket equation is the `s` component of the cyclic twisted Jacobi sum on
//! `(e_i, e_j, e_k)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::algebra::HomAlgebra;
use crate::error::Error;
use crate::rational::{format_rational, parse_rational, rat, Rational};

/// A variable of the coordinate ring: a product constant or a twist entry.
/// Indices are 1-based. Constants order before twist entries.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarRef {
    C(usize, usize, usize),
    A(usize, usize),
}

impl VarRef {
    fn plain(&self) -> String {
        match self {
            VarRef::C(i, j, k) => format!("C[{i},{j},{k}]"),
            VarRef::A(i, j) => format!("a[{i},{j}]"),
        }
    }

    fn cas(&self) -> String {
        match self {
            VarRef::C(i, j, k) => format!("C_{i}_{j}_{k}"),
            VarRef::A(i, j) => format!("a_{i}_{j}"),
        }
    }

    fn parse_plain(text: &str) -> Result<VarRef, Error> {
        let bad = || Error::ParseFile(format!("malformed variable `{text}`"));
        let (head, rest) = text.split_at(text.find('[').ok_or_else(bad)?);
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let indices: Vec<usize> = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (head, indices.as_slice()) {
            ("C", [i, j, k]) => Ok(VarRef::C(*i, *j, *k)),
            ("a", [i, j]) => Ok(VarRef::A(*i, *j)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain())
    }
}

/// A monomial: variables with positive exponents, sorted by variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    factors: Vec<(VarRef, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: VarRef) -> Monomial {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(VarRef, u32)] {
        &self.factors
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps: BTreeMap<VarRef, u32> = BTreeMap::new();
        for (v, e) in self.factors.iter().chain(other.factors.iter()) {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { factors: exps.into_iter().collect() }
    }
}

/// Term ordering for display: total degree descending, then ascending by the
/// sorted factor list, so terms mentioning earlier variables print first.
fn term_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    b.degree().cmp(&a.degree()).then_with(|| a.factors.cmp(&b.factors))
}

/// Exact multivariate polynomial over the rationals, kept in canonical form:
/// merged terms, no zero coefficients, display order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    terms: Vec<(Rational, Monomial)>,
}

/// A point of the variety's ambient space: values for the ring variables.
pub type Assignment = BTreeMap<VarRef, Rational>;

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(value: Rational) -> Polynomial {
        Polynomial::from_terms(vec![(value, Monomial::one())])
    }

    pub fn var(v: VarRef) -> Polynomial {
        Polynomial { terms: vec![(Rational::one(), Monomial::var(v))] }
    }

    fn from_terms(terms: Vec<(Rational, Monomial)>) -> Polynomial {
        let mut merged: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (coeff, mono) in terms {
            let slot = merged.entry(mono).or_insert_with(Rational::zero);
            *slot += coeff;
        }
        let mut terms: Vec<(Rational, Monomial)> = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| term_cmp(&a.1, &b.1));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Rational, Monomial)] {
        &self.terms
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Polynomial::from_terms(terms)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(c, m)| (-c.clone(), m.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c1, m1) in &self.terms {
            for (c2, m2) in &other.terms {
                terms.push((c1 * c2, m1.mul(m2)));
            }
        }
        Polynomial::from_terms(terms)
    }

    pub fn scale(&self, factor: &Rational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(c, m)| (c * factor, m.clone())).collect(),
        }
    }

    /// Exact value at a point. Every variable occurring in the polynomial
    /// must be assigned.
    pub fn evaluate(&self, point: &Assignment) -> Result<Rational, Error> {
        let mut total = Rational::zero();
        for (coeff, mono) in &self.terms {
            let mut value = coeff.clone();
            for (v, e) in &mono.factors {
                let assigned = point
                    .get(v)
                    .ok_or_else(|| Error::MissingVariable(v.plain()))?;
                for _ in 0..*e {
                    value *= assigned;
                }
            }
            total += value;
        }
        Ok(total)
    }

    fn render(&self, style: VarStyle) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (coeff, mono)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if pos == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&render_term(&coeff.abs(), mono, style));
        }
        out
    }
}

#[derive(Clone, Copy)]
enum VarStyle {
    Plain,
    Cas,
}

fn render_term(magnitude: &Rational, mono: &Monomial, style: VarStyle) -> String {
    let mut pieces: Vec<String> = Vec::new();
    if mono.factors.is_empty() || !magnitude.is_one() {
        pieces.push(format_rational(magnitude));
    }
    for (v, e) in &mono.factors {
        match style {
            // Plain format spells powers out as repeated factors.
            VarStyle::Plain => {
                for _ in 0..*e {
                    pieces.push(v.plain());
                }
            }
            VarStyle::Cas => {
                if *e == 1 {
                    pieces.push(v.cas());
                } else {
                    pieces.push(format!("{}^{e}", v.cas()));
                }
            }
        }
    }
    pieces.join("*")
}

fn parse_polynomial(text: &str) -> Result<Polynomial, Error> {
    let text = text.trim();
    if text == "0" {
        return Ok(Polynomial::zero());
    }
    let bad = |what: &str| Error::ParseFile(format!("malformed polynomial: {what}"));
    let mut terms: Vec<(Rational, Monomial)> = Vec::new();
    let mut rest = text;
    let mut sign = if let Some(stripped) = rest.strip_prefix('-') {
        rest = stripped;
        -Rational::one()
    } else {
        Rational::one()
    };
    loop {
        let (chunk, next) = match (rest.find(" + "), rest.find(" - ")) {
            (Some(p), Some(m)) if p < m => (&rest[..p], Some((Rational::one(), &rest[p + 3..]))),
            (Some(_), Some(m)) => (&rest[..m], Some((-Rational::one(), &rest[m + 3..]))),
            (Some(p), None) => (&rest[..p], Some((Rational::one(), &rest[p + 3..]))),
            (None, Some(m)) => (&rest[..m], Some((-Rational::one(), &rest[m + 3..]))),
            (None, None) => (rest, None),
        };
        let mut coeff = sign.clone();
        let mut mono = Monomial::one();
        if chunk.trim().is_empty() {
            return Err(bad("empty term"));
        }
        for factor in chunk.split('*') {
            let factor = factor.trim();
            if factor.starts_with('C') || factor.starts_with('a') {
                let (name, exp) = match factor.split_once('^') {
                    Some((name, exp)) => {
                        let exp: u32 =
                            exp.parse().map_err(|_| bad("bad exponent"))?;
                        (name, exp)
                    }
                    None => (factor, 1),
                };
                let var = VarRef::parse_plain(name)?;
                for _ in 0..exp {
                    mono = mono.mul(&Monomial::var(var));
                }
            } else {
                coeff *= parse_rational(factor)?;
            }
        }
        terms.push((coeff, mono));
        match next {
            Some((next_sign, next_rest)) => {
                sign = next_sign;
                rest = next_rest;
            }
            None => break,
        }
    }
    Ok(Polynomial::from_terms(terms))
}

/// Identifies an equation within a system: the basis tuple it came from, or
/// the unit constraint it expresses.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum EquationTag {
    /// Component `s` of the defining identity at basis triple (i, j, k).
    Tuple(usize, usize, usize, usize),
    /// Component `k` of the unit law at basis pair (i, j).
    Unit(usize, usize, usize),
}

impl fmt::Display for EquationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquationTag::Tuple(i, j, k, s) => write!(f, "({i},{j},{k},{s})"),
            EquationTag::Unit(i, j, k) => write!(f, "unit({i},{j},{k})"),
        }
    }
}

impl FromStr for EquationTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::ParseFile(format!("malformed equation tag `{s}`"));
        let (unit, inner) = if let Some(rest) = s.strip_prefix("unit(") {
            (true, rest.strip_suffix(')').ok_or_else(bad)?)
        } else if let Some(rest) = s.strip_prefix('(') {
            (false, rest.strip_suffix(')').ok_or_else(bad)?)
        } else {
            return Err(bad());
        };
        let nums: Vec<usize> = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (unit, nums.as_slice()) {
            (true, [i, j, k]) => Ok(EquationTag::Unit(*i, *j, *k)),
            (false, [i, j, k, s]) => Ok(EquationTag::Tuple(*i, *j, *k, *s)),
            _ => Err(bad()),
        }
    }
}

/// Which variety a system describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarietyKind {
    /// Twisted-associative products, free twist.
    Homass,
    /// Twisted-associative products with the first basis vector a unit.
    Homalg,
    /// Skew brackets satisfying the twisted Jacobi identity.
    Homlie,
}

impl VarietyKind {
    pub fn name(&self) -> &'static str {
        match self {
            VarietyKind::Homass => "homass",
            VarietyKind::Homalg => "homalg",
            VarietyKind::Homlie => "homlie",
        }
    }
}

impl fmt::Display for VarietyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarietyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_lowercase().as_str() {
            "homass" => Ok(VarietyKind::Homass),
            "homalg" => Ok(VarietyKind::Homalg),
            "homlie" => Ok(VarietyKind::Homlie),
            other => Err(Error::ParseFile(format!("unknown variety kind `{other}`"))),
        }
    }
}

/// A tagged system of polynomial equations in the structure constants.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolySystem {
    pub kind: VarietyKind,
    pub dim: usize,
    pub equations: Vec<(EquationTag, Polynomial)>,
}

/// `C(i,j,k)` as a polynomial, 1-based.
fn c_var(i: usize, j: usize, k: usize) -> Polynomial {
    Polynomial::var(VarRef::C(i, j, k))
}

/// `C(i,j,k)` rewritten into the skew coordinates: only `i < j` survives.
fn c_var_skew(i: usize, j: usize, k: usize) -> Polynomial {
    match i.cmp(&j) {
        Ordering::Less => c_var(i, j, k),
        Ordering::Equal => Polynomial::zero(),
        Ordering::Greater => c_var(j, i, k).neg(),
    }
}

fn a_var(i: usize, j: usize) -> Polynomial {
    Polynomial::var(VarRef::A(i, j))
}

/// Component `s` of the associativity defect at (e_i, e_j, e_k), 1-based.
fn associativity_polynomial(n: usize, i: usize, j: usize, k: usize, s: usize) -> Polynomial {
    let mut poly = Polynomial::zero();
    for l in 1..=n {
        for m in 1..=n {
            let left = a_var(i, l).mul(&c_var(j, k, m)).mul(&c_var(l, m, s));
            let right = c_var(i, j, l).mul(&a_var(k, m)).mul(&c_var(l, m, s));
            poly = poly.add(&left).sub(&right);
        }
    }
    poly
}

/// Equations of the twisted-associative variety: every ordered basis triple
/// and component, in lexicographic order.
pub fn homass_equations(n: usize) -> PolySystem {
    let mut equations = Vec::with_capacity(n.pow(4));
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for s in 1..=n {
                    equations.push((
                        EquationTag::Tuple(i, j, k, s),
                        associativity_polynomial(n, i, j, k, s),
                    ));
                }
            }
        }
    }
    PolySystem { kind: VarietyKind::Homass, dim: n, equations }
}

/// Equations of the unital twisted-associative variety: the linear unit
/// constraints first, then the associativity cubics.
pub fn homalg_equations(n: usize) -> PolySystem {
    let mut equations = Vec::new();
    for i in 1..=n {
        for k in 1..=n {
            let mut poly = c_var(1, i, k);
            if i == k {
                poly = poly.sub(&Polynomial::constant(rat(1)));
            }
            equations.push((EquationTag::Unit(1, i, k), poly));
        }
    }
    for i in 2..=n {
        for k in 1..=n {
            let mut poly = c_var(i, 1, k);
            if i == k {
                poly = poly.sub(&Polynomial::constant(rat(1)));
            }
            equations.push((EquationTag::Unit(i, 1, k), poly));
        }
    }
    equations.extend(homass_equations(n).equations);
    PolySystem { kind: VarietyKind::Homalg, dim: n, equations }
}

/// Equations of the skew twisted-Jacobi variety, in the reduced coordinates
/// `C(i,j,k)` with `i < j`. One equation per component of each non-decreasing
/// basis triple; triples with repeats collapse to the zero polynomial and are
/// kept with their tags.
pub fn homlie_equations(n: usize) -> PolySystem {
    let mut equations = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            for k in j..=n {
                for s in 1..=n {
                    let mut poly = Polynomial::zero();
                    for (p, q, r) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for l in 1..=n {
                            for m in 1..=n {
                                let term = a_var(p, l)
                                    .mul(&c_var_skew(q, r, m))
                                    .mul(&c_var_skew(l, m, s));
                                poly = poly.add(&term);
                            }
                        }
                    }
                    equations.push((EquationTag::Tuple(i, j, k, s), poly));
                }
            }
        }
    }
    PolySystem { kind: VarietyKind::Homlie, dim: n, equations }
}

/// Generates the requested system.
pub fn generate(kind: VarietyKind, n: usize) -> PolySystem {
    match kind {
        VarietyKind::Homass => homass_equations(n),
        VarietyKind::Homalg => homalg_equations(n),
        VarietyKind::Homlie => homlie_equations(n),
    }
}

/// Encodes an algebra as a point of the ambient space of `kind`. The bracket
/// variety uses only the constants above the diagonal, so the algebra should
/// carry a skew product there.
pub fn algebra_point(a: &HomAlgebra, kind: VarietyKind) -> Assignment {
    let n = a.dim();
    let mut point = Assignment::new();
    match kind {
        VarietyKind::Homass | VarietyKind::Homalg => {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        point.insert(
                            VarRef::C(i + 1, j + 1, k + 1),
                            a.constant(i, j, k).clone(),
                        );
                    }
                }
            }
        }
        VarietyKind::Homlie => {
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in 0..n {
                        point.insert(
                            VarRef::C(i + 1, j + 1, k + 1),
                            a.constant(i, j, k).clone(),
                        );
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            point.insert(VarRef::A(i + 1, j + 1), a.alpha().get(i, j).clone());
        }
    }
    point
}

impl PolySystem {
    /// The ambient ring's variables, in display order. Computed from the kind
    /// and dimension so equations that collapsed to zero still contribute
    /// their variables.
    pub fn variables(&self) -> Vec<VarRef> {
        let n = self.dim;
        let mut vars = Vec::new();
        match self.kind {
            VarietyKind::Homass | VarietyKind::Homalg => {
                for i in 1..=n {
                    for j in 1..=n {
                        for k in 1..=n {
                            vars.push(VarRef::C(i, j, k));
                        }
                    }
                }
            }
            VarietyKind::Homlie => {
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        for k in 1..=n {
                            vars.push(VarRef::C(i, j, k));
                        }
                    }
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                vars.push(VarRef::A(i, j));
            }
        }
        vars
    }

    /// Exact residual of every equation at the point, in system order.
    pub fn residuals(&self, point: &Assignment) -> Result<Vec<(EquationTag, Rational)>, Error> {
        self.equations
            .iter()
            .map(|(tag, poly)| Ok((*tag, poly.evaluate(point)?)))
            .collect()
    }

    /// The equations with nonzero residual at the point.
    pub fn failing(&self, point: &Assignment) -> Result<Vec<(EquationTag, Rational)>, Error> {
        Ok(self
            .residuals(point)?
            .into_iter()
            .filter(|(_, r)| !r.is_zero())
            .collect())
    }

    /// Plain listing: a header line, then one `tag : polynomial = 0` line
    /// per equation. Round-trips exactly through [`PolySystem::parse_plain`].
    pub fn export_plain(&self) -> String {
        let mut out = format!("homvariety {} n={}\n", self.kind, self.dim);
        for (tag, poly) in &self.equations {
            out.push_str(&format!("{tag} : {} = 0\n", poly.render(VarStyle::Plain)));
        }
        out
    }

    /// Listing for computer algebra input: a ring comment naming the
    /// variables, then one polynomial per line with `_`-separated variable
    /// names, `*` products and `^` powers. Tags ride along as comments.
    pub fn export_cas(&self) -> String {
        let vars = self
            .variables()
            .iter()
            .map(VarRef::cas)
            .collect::<Vec<_>>()
            .join(", ");
        let mut out = format!("# ring Q[{vars}], {} n={}\n", self.kind, self.dim);
        for (tag, poly) in &self.equations {
            out.push_str(&format!("{}  # {tag}\n", poly.render(VarStyle::Cas)));
        }
        out
    }

    /// Parses the plain listing produced by [`PolySystem::export_plain`].
    pub fn parse_plain(text: &str) -> Result<PolySystem, Error> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::ParseFile("empty listing".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let (kind, dim) = match parts.as_slice() {
            ["homvariety", kind, nspec] => {
                let kind: VarietyKind = kind.parse()?;
                let dim: usize = nspec
                    .strip_prefix("n=")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| {
                        Error::ParseFile(format!("malformed header `{header}`"))
                    })?;
                (kind, dim)
            }
            _ => return Err(Error::ParseFile(format!("malformed header `{header}`"))),
        };
        let mut equations = Vec::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (tag_part, rest) = line.split_once(" : ").ok_or_else(|| {
                Error::ParseFile(format!("missing ` : ` separator in `{line}`"))
            })?;
            let poly_part = rest.strip_suffix(" = 0").ok_or_else(|| {
                Error::ParseFile(format!("missing ` = 0` terminator in `{line}`"))
            })?;
            let tag: EquationTag = tag_part.trim().parse()?;
            equations.push((tag, parse_polynomial(poly_part)?));
        }
        Ok(PolySystem { kind, dim, equations })
    }
}
