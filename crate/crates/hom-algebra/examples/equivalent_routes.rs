//! One law, several decision procedures: check that independent formulations
//! of the same identity return the same verdict, down to the defect tuples.
//!
//! Flexibility has a pairwise form, a polarized antisymmetry form, and a
//! derivation form; the Leibniz identity has an elementwise and an operator
//! form; Lie admissibility can be decided through the commutator bracket,
//! through symmetry of the cyclic associator sum, or through a signed sum
//! over the full permutation group. Exact arithmetic lets the example compare
//! the routes on random data without any tolerance.
//!
//! ```bash
//! cargo run --example equivalent_routes
//! ```

use hom_algebra::algebra::{upper_triangular_algebra, Subgroup};
use hom_algebra::identities::{
    check_flexible_antisymmetry, check_flexible_derivation_form, check_identity,
    check_leibniz_operator_form, check_s_symmetry, IdentityKind,
};
use hom_algebra::sample::random_algebra;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);

    // Flexibility three ways. The pairwise route evaluates the associator at
    // (e_i, e_j, e_i); the antisymmetry route checks the full polarized
    // trilinear law; the derivation route phrases it through the commutator
    // acting on the symmetrized product.
    println!("flexibility on 40 random 3-dimensional products:");
    let mut verdict_counts = (0, 0);
    for _ in 0..40 {
        let a = random_algebra(&mut rng, 3);
        let pairs = check_identity(&a, IdentityKind::Flexible);
        let anti = check_flexible_antisymmetry(&a);
        let deriv = check_flexible_derivation_form(&a);
        assert_eq!(pairs.passed, anti.passed);
        assert_eq!(anti.passed, deriv.passed);
        assert_eq!(anti.failing_indices(), deriv.failing_indices());
        if pairs.passed {
            verdict_counts.0 += 1;
        } else {
            verdict_counts.1 += 1;
        }
    }
    println!(
        "  all three routes agreed every time ({} flexible, {} not)",
        verdict_counts.0, verdict_counts.1
    );

    // An associative algebra is flexible, whatever the route.
    let assoc = upper_triangular_algebra(2);
    println!(
        "  upper triangular 2x2: pairs {}, antisymmetry {}, derivation {}",
        check_identity(&assoc, IdentityKind::Flexible).passed,
        check_flexible_antisymmetry(&assoc).passed,
        check_flexible_derivation_form(&assoc).passed
    );
    println!();

    // Leibniz elementwise vs as an identity of right-multiplication
    // operators. The operator defect for the pair (j, k) is the whole defect
    // matrix; its row i is the elementwise defect at (i, j, k).
    println!("leibniz routes on 40 random 2-dimensional products:");
    let mut agreements = 0;
    for _ in 0..40 {
        let a = random_algebra(&mut rng, 2);
        let element = check_identity(&a, IdentityKind::HomLeibniz);
        let operator = check_leibniz_operator_form(&a);
        assert_eq!(element.passed, operator.passed);
        agreements += 1;
    }
    println!("  elementwise and operator form agreed {agreements} times");
    println!();

    // Lie admissibility three ways: Jacobi for the commutator bracket,
    // symmetry of the cyclic associator sum, and the signed associator sum
    // over all six permutations.
    println!("lie admissibility on 40 random 3-dimensional products:");
    let mut admissible = 0;
    for _ in 0..40 {
        let a = random_algebra(&mut rng, 3);
        let commutator = check_identity(&a, IdentityKind::HomLieAdmissible);
        let symmetry = check_s_symmetry(&a);
        let signed = check_identity(&a, IdentityKind::GHomAssociative(Subgroup::G6));
        assert_eq!(commutator.passed, symmetry.passed);
        assert_eq!(commutator.passed, signed.passed);
        if commutator.passed {
            admissible += 1;
        }
    }
    println!("  all three routes agreed every time ({admissible} admissible)");
    println!(
        "  upper triangular 2x2 is lie-admissible: {}",
        check_identity(&assoc, IdentityKind::HomLieAdmissible).passed
    );
}
