//! Computing the stable index of a digraph built by hand and one parsed from
//! the plain-text edge-list format.
//!
//! Run with: `cargo run -p stable-index --example compute_theta`

use stable_index::{
    stable_index_bounded_explained, stable_index_cycle_detect, Digraph, Result, Theta,
};

fn main() -> Result<()> {
    // A 4-cycle with one chord: 0 -> 1 -> 2 -> 3 -> 0 plus 0 -> 2. Two walks
    // from 0 to 2 of length 5 eventually coincide in endpoints, so the index
    // is finite.
    let mut chorded = Digraph::empty(4);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)] {
        chorded.add_arc(u, v)?;
    }

    let (theta, pair) = stable_index_bounded_explained(&chorded);
    println!("chorded 4-cycle:");
    println!("{chorded}");
    println!("  index (saturated powering) = {theta}");
    if let Some(w) = pair {
        println!(
            "  first duplicate pair: two walks {} -> {} of length {}",
            w.from, w.to, w.walk_length
        );
    }

    // The independent algorithm tracks the sequence of saturated powers and
    // stops as soon as the sequence repeats, which certifies an infinite
    // index without a precomputed bound.
    let confirm = stable_index_cycle_detect(&chorded);
    println!("  index (power-sequence cycle detection) = {confirm}");
    assert_eq!(theta, confirm);

    // The same edge-list format the command-line tool reads and writes.
    let text = "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let five_cycle = Digraph::parse_edge_list(text)?;
    let theta = stable_index_cycle_detect(&five_cycle);
    println!("\nplain 5-cycle parsed from text: index = {theta}");
    assert_eq!(theta, Theta::Infinite);

    // Walks of every length are unique on a cycle, hence no finite index:
    // distinct walks with the same length and endpoints never appear.
    Ok(())
}
