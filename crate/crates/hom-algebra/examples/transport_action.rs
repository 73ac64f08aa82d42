//! Move an algebra along an invertible linear map and watch every identity
//! verdict stay put.
//!
//! Transport rewrites the product and the twist in the new coordinates, so
//! the resulting algebra is isomorphic to the original in the twisted sense.
//! Whether any identity holds is a property of the isomorphism class, which
//! the example demonstrates by checking the whole suite before and after.
//! It then runs a small orbit search that rediscovers the change of basis
//! relating two presentations of the same bracket.
//!
//! ```bash
//! cargo run --example transport_action
//! ```

use hom_algebra::classify3d::sl2_bracket;
use hom_algebra::identities::{check_identity, IdentityKind};
use hom_algebra::linalg::Matrix;
use hom_algebra::sample::{random_algebra, random_invertible_matrix};
use hom_algebra::transport::{
    orbit_search, signed_permutation_matrices, transport, InvertibleMap,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);

    // A random 3-dimensional algebra moved along a random invertible map.
    let original = random_algebra(&mut rng, 3);
    let map = InvertibleMap::new(random_invertible_matrix(&mut rng, 3)).unwrap();
    let moved = transport(&original, &map);

    println!("identity verdicts before and after a random change of basis:");
    for kind in IdentityKind::default_suite() {
        let before = check_identity(&original, kind);
        let after = check_identity(&moved, kind);
        assert_eq!(before.passed, after.passed);
        println!(
            "  {:<22} before: {:<4}  after: {}",
            kind.to_string(),
            if before.passed { "pass" } else { "fail" },
            if after.passed { "pass" } else { "fail" },
        );
    }
    println!();

    // Round trip: transporting back along the inverse restores the original
    // structure constants exactly. Rational arithmetic makes this a byte-level
    // statement, not an approximation.
    let back = transport(&moved, &map.inverted());
    println!("inverse transport restores the algebra: {}", back.same_structure(&original));

    // Transport pulls the structure back along the map, so two transports
    // compose contravariantly: moving along f and then along g is one move
    // along "g, then f".
    let second = InvertibleMap::new(random_invertible_matrix(&mut rng, 3)).unwrap();
    let two_steps = transport(&transport(&original, &map), &second);
    let one_step = transport(&original, &second.then(&map));
    println!("transport respects composition: {}", two_steps.same_structure(&one_step));
    println!();

    // Orbit search: present sl(2) in a permuted basis, then let the search
    // recover a signed permutation carrying the standard form onto it.
    let standard = sl2_bracket();
    let disguise = InvertibleMap::new(
        Matrix::from_i64_rows(&[&[0, 0, 1], &[0, -1, 0], &[1, 0, 0]]),
    )
    .unwrap();
    let disguised = transport(&standard, &disguise);
    match orbit_search(&standard, &disguised, signed_permutation_matrices(3)).unwrap() {
        Some(found) => {
            println!("orbit search found a change of basis:");
            for i in 0..3 {
                let row: Vec<String> =
                    (0..3).map(|j| found.forward().get(i, j).to_string()).collect();
                println!("  [{}]", row.join(", "));
            }
            let check = transport(&standard, &found);
            println!("  transports standard form onto the disguise: {}", check.same_structure(&disguised));
        }
        None => println!("orbit search found nothing (unexpected for this pair)"),
    }
}
