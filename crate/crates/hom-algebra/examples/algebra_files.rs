//! Save algebras to the JSON interchange format and load them back.
//!
//! Files store the nonzero structure constants as 1-based sparse entries
//! with exact rational coefficients written as strings, plus the full twist
//! matrix and a flag marking bracket (skew) presentations. The writer is
//! canonical: loading a file and saving it again reproduces it byte for
//! byte, so files diff cleanly under version control.
//!
//! ```bash
//! cargo run --example algebra_files
//! ```

use std::fs;

use hom_algebra::algebra::truncated_polynomial_algebra;
use hom_algebra::classify3d::sl2_bracket;
use hom_algebra::files::{
    algebra_from_json, algebra_to_file, algebra_to_json, load_algebra, save_algebra,
};

fn main() {
    // A bracket file keeps only the entries with i < j; skewness fills in
    // the rest on load.
    let sl2 = sl2_bracket();
    let text = algebra_to_json(&sl2);
    println!("sl(2) as a bracket file:\n{text}\n");

    let reloaded = algebra_from_json(&text).unwrap();
    println!("reload preserves structure: {}", reloaded.same_structure(&sl2));
    println!("reload preserves the skew flag: {}", reloaded.skew_declared());
    println!(
        "writer is canonical (save(load(text)) == text): {}",
        algebra_to_json(&reloaded) == text
    );
    println!();

    // Full (non-bracket) products list every nonzero constant.
    let poly = truncated_polynomial_algebra(3);
    println!("K[t]/(t^3) stores {} nonzero entries:", algebra_to_file(&poly).mu.len());
    println!("{}", algebra_to_json(&poly));
    println!();

    // Round trip through an actual file on disk.
    let dir = std::env::temp_dir().join("hom_algebra_files_example");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2.json");
    save_algebra(&sl2, &path).unwrap();
    let from_disk = load_algebra(&path).unwrap();
    println!("disk round trip: {}", from_disk.same_structure(&sl2));

    // Malformed input is rejected with a specific error, never a panic.
    let bad = text.replace("\"2\"", "\"2/0\"");
    match algebra_from_json(&bad) {
        Err(err) => println!("zero denominator rejected: {err}"),
        Ok(_) => println!("unexpectedly accepted a zero denominator"),
    }
    let misordered = text.replace("[1, 2, 2, \"2\"]", "[2, 1, 2, \"2\"]");
    match algebra_from_json(&misordered) {
        Err(err) => println!("bracket entry with i >= j rejected: {err}"),
        Ok(_) => println!("unexpectedly accepted a misordered bracket entry"),
    }

    fs::remove_dir_all(&dir).ok();
}
