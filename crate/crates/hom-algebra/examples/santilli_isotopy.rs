//! Deform the matrix product with a fixed sandwich element and test which
//! algebraic laws survive.
//!
//! The deformed product is x * y = s (w x w) T (w y w), computed in a free
//! word algebra whose letters are matrices: T is a formal symbol, so nothing
//! about it is assumed. When w is idempotent the deformation is associative
//! for every T; when it is not, the example exhibits the exact word-level
//! residual. A second deformation, the mutation bracket x p y - y q x,
//! stays honest under the ordinary matrix product.
//!
//! ```bash
//! cargo run --example santilli_isotopy
//! ```

use hom_algebra::identities::{check_identity, IdentityKind};
use hom_algebra::linalg::Matrix;
use hom_algebra::rational::{rat, ratio};
use hom_algebra::sample::random_matrix;
use hom_algebra::santilli::{
    check_star_associativity_on_units, check_star_hom_associativity_on_units, matrix_units,
    mutation_algebra, mutation_bracket, star_product, TElement,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let cap = 4;

    // Words multiply by merging boundary letters: the last letter of the left
    // word absorbs the first letter of the right word, and the T symbols in
    // between stay where they are.
    let e11 = Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
    let x = TElement::from_matrix(&e11, cap);
    let y = TElement::from_matrix(&Matrix::identity(2), cap);
    let product = star_product(&rat(1), &e11, &x, &y).unwrap();
    println!("E11 * I as a word element (letters are matrices, T between them):");
    for (letters, coeff) in product.words() {
        let shown: Vec<String> = letters.iter().map(matrix_inline).collect();
        println!("  {} . {}", coeff, shown.join(" T "));
    }
    println!();

    // Idempotent sandwich: w^2 = w makes the deformed product associative on
    // the whole algebra, checked here exhaustively on matrix-unit triples.
    let idempotent = check_star_associativity_on_units(&rat(1), &e11, cap);
    println!(
        "w = E11 (idempotent): associativity on all {} unit triples: {}",
        idempotent.checked,
        if idempotent.passed { "pass" } else { "fail" }
    );
    let twisted = check_star_hom_associativity_on_units(&rat(1), &e11, cap);
    println!(
        "w = E11: twisted associativity with the sandwich twist: {}",
        if twisted.passed { "pass" } else { "fail" }
    );

    // Scaling w breaks idempotence and with it associativity. The defect is
    // a genuine word-level mismatch: same coefficients, different letters.
    let scaled = e11.scale(&rat(2));
    let broken = check_star_associativity_on_units(&rat(1), &scaled, cap);
    println!(
        "w = 2 E11 (not idempotent): associativity: {} ({} defect triples)",
        if broken.passed { "pass" } else { "fail" },
        broken.defects.len()
    );
    if let Some(defect) = broken.defects.first() {
        println!("  at x = {}, y = {}, z = {}:", matrix_inline(&defect.x), matrix_inline(&defect.y), matrix_inline(&defect.z));
        for (letters, coeff) in defect.residual.words() {
            let shown: Vec<String> = letters.iter().map(matrix_inline).collect();
            println!("    {} . {}", coeff, shown.join(" T "));
        }
    }
    println!();

    // A fractional scalar changes nothing structural; associativity for
    // idempotent w holds for every scalar.
    let fractional = check_star_associativity_on_units(&ratio(5, 3), &e11, cap);
    println!(
        "scalar 5/3, w = E11: associativity: {}",
        if fractional.passed { "pass" } else { "fail" }
    );
    println!();

    // The mutation bracket x p y - y q x under the ordinary matrix product.
    // With p = q it is a skew deformation of the commutator.
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = random_matrix(&mut rng, 2);
    let q = random_matrix(&mut rng, 2);
    let a = random_matrix(&mut rng, 2);
    let b = random_matrix(&mut rng, 2);
    let forward = mutation_bracket(&p, &q, &a, &b).unwrap();
    let backward = mutation_bracket(&p, &q, &b, &a).unwrap();
    let antisym = forward.sub(&backward);
    let direct = mutation_bracket(&p.add(&q), &p.add(&q), &a, &b).unwrap();
    println!(
        "antisymmetrised mutation equals the (p+q)-mutation: {}",
        antisym.sub(&direct).is_zero()
    );

    // Packaging one-sided mutation as structure constants on the unit basis
    // gives an algebra that is associative-with-twist and Lie-admissible.
    let mutated = mutation_algebra(&q).unwrap();
    println!(
        "mutation algebra on 2x2 units: dim {}, {} basis letters",
        mutated.dim(),
        matrix_units(2).len()
    );
    for kind in [IdentityKind::HomAssociative, IdentityKind::HomLieAdmissible] {
        println!("  {}", check_identity(&mutated, kind));
    }
    println!(
        "  commutator bracket: {}",
        check_identity(&mutated.commutator_algebra(), IdentityKind::HomLie)
    );
}

fn matrix_inline(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
