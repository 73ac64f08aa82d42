//! Generate the polynomial equations cutting out a variety of algebra
//! structures, evaluate them at concrete points, and export them for a
//! computer algebra system.
//!
//! The unknowns are the structure constants C[i,j,k] and twist entries
//! a[i,j] of an n-dimensional algebra. Each identity (twisted associativity,
//! twisted Jacobi, ...) becomes one polynomial per basis tuple, and an
//! algebra satisfies the identity exactly when its coordinates are a common
//! zero of the system.
//!
//! ```bash
//! cargo run --example variety_equations
//! ```

use hom_algebra::algebra::truncated_polynomial_algebra;
use hom_algebra::identities::{check_identity, IdentityKind};
use hom_algebra::sample::random_algebra;
use hom_algebra::variety::{algebra_point, homass_equations, homlie_equations, VarietyKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // The twisted-associativity system for n = 2: 16 polynomials, one per
    // basis triple and output coordinate.
    let system = homass_equations(2);
    println!("twisted associativity variety, n = 2:");
    println!("  variables: {}", system.variables().len());
    println!("  equations: {}", system.equations.len());
    println!();
    println!("plain listing (first lines):");
    for line in system.export_plain().lines().take(5) {
        println!("  {line}");
    }
    println!("  ...");
    println!();

    // The same system in CAS-friendly syntax, ready to paste into Macaulay2,
    // Singular, or Sage.
    println!("cas listing (first lines):");
    for line in system.export_cas().lines().take(4) {
        println!("  {line}");
    }
    println!("  ...");
    println!();

    // Evaluating the system at an algebra's coordinate point matches the
    // direct identity check: residuals vanish exactly when the check passes.
    let good = truncated_polynomial_algebra(2);
    let point = algebra_point(&good, VarietyKind::Homass);
    let failed = system.failing(&point).unwrap().len();
    let direct = check_identity(&good, IdentityKind::HomAssociative).passed;
    println!("K[t]/(t^2): {failed} nonzero residuals, direct check passes: {direct}");

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let noisy = random_algebra(&mut rng, 2);
    let point = algebra_point(&noisy, VarietyKind::Homass);
    let failing = system.failing(&point).unwrap();
    let direct = check_identity(&noisy, IdentityKind::HomAssociative).passed;
    println!(
        "random bilinear product: {} nonzero residuals, direct check passes: {direct}",
        failing.len()
    );
    if let Some((tag, residual)) = failing.first() {
        println!("  first failing equation {tag} has residual {residual}");
    }
    println!();

    // For n = 2 the twisted Jacobi system on skew brackets is degenerate:
    // every polynomial reduces to zero, so every skew bracket with every
    // twist passes. The tags are kept so the count of equations is honest.
    let jacobi = homlie_equations(2);
    let zero_polys = jacobi
        .equations
        .iter()
        .filter(|(_, p)| p.is_zero())
        .count();
    println!(
        "twisted Jacobi system for n = 2: {} equations, {} identically zero",
        jacobi.equations.len(),
        zero_polys
    );
}
