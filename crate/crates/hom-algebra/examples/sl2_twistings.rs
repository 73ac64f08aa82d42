//! Solve for every twist map that makes the sl(2) bracket a twisted Lie
//! algebra, then sample the resulting six-parameter family.
//!
//! The twisted Jacobi condition is linear in the entries of the twist once
//! the bracket is fixed, so the full solution set falls out of one exact
//! nullspace computation. The example prints a basis, spells out the shape
//! of the general solution, and verifies a few random members.
//!
//! ```bash
//! cargo run --example sl2_twistings
//! ```

use hom_algebra::classify3d::{
    sl2_bracket, sl2_family, sl2_twist, sl2_twisting_space, twist_coordinates,
};
use hom_algebra::identities::{check_identity, IdentityKind};
use hom_algebra::rational::{format_rational, random_rational, rat};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let space = sl2_twisting_space();
    println!("twist maps preserving the sl(2) bracket form an affine space");
    println!("  ambient dimension: {}", space.ambient_dim);
    println!("  solution dimension: {}", space.dim());
    println!();

    println!("basis of the solution space (each matrix flattened row-major):");
    for (k, vec) in space.basis.iter().enumerate() {
        let entries: Vec<String> = vec.coords().iter().map(format_rational).collect();
        println!("  basis {}: [{}]", k + 1, entries.join(", "));
    }
    println!();

    // The general member, written with six free parameters:
    //   [ a   2c  2d ]
    //   [ d   b   e  ]
    //   [ c   f   b  ]
    println!("general solution sl2_twist(a, b, c, d, e, f):");
    let sample = sl2_twist(&rat(1), &rat(2), &rat(3), &rat(4), &rat(5), &rat(6));
    for i in 0..3 {
        let row: Vec<String> = (0..3).map(|j| format_rational(sample.get(i, j))).collect();
        println!("  [{}]", row.join(", "));
    }
    println!();

    // Every choice of the six parameters gives a twisted Lie algebra on the
    // sl(2) constants, including degenerate (non-invertible) twists.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 1..=4 {
        let p: Vec<_> = (0..6).map(|_| random_rational(&mut rng)).collect();
        let algebra = sl2_family(&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
        let report = check_identity(&algebra, IdentityKind::HomJacobi);
        let shown: Vec<String> = p.iter().map(format_rational).collect();
        println!("random member {trial}: ({})", shown.join(", "));
        println!("  {report}");
        assert!(space.contains(&twist_coordinates(algebra.alpha())));
    }
    println!();

    // The identity matrix sits inside the family (a = b = 1, rest 0), so the
    // classical Lie algebra sl(2) is the untwisted point of this space.
    let classical = sl2_bracket();
    println!(
        "identity twist is a member: {}",
        space.contains(&twist_coordinates(classical.alpha()))
    );
    println!(
        "classical Jacobi at that point: {}",
        check_identity(&classical, IdentityKind::HomJacobi)
    );
}
