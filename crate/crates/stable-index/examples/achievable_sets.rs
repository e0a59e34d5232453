//! The achievable index sets: which values the stable index can take at each
//! order, and where the gaps are.
//!
//! Run with: `cargo run -p stable-index --example achievable_sets`

use stable_index::{gaps, s_max, theta_set, Result, Theta};

fn main() -> Result<()> {
    // At every order the finite achievable values lie in 1..=s_max(n); from
    // order 7 on, not every value in that range is hit.
    println!("order  s_max  achievable set");
    for n in 1..=14 {
        let set = theta_set(n);
        println!("{n:>5}  {:>5}  {}", s_max(n), set.compressed());
    }

    // Gap reports carry a verified witness for every value that IS achieved,
    // so the absent values are exactly the listed gaps.
    println!("\ngaps (values in 1..=s_max(n) no digraph of order n attains):");
    for n in 7..=14 {
        let report = gaps(n)?;
        let shown = if report.gaps.is_empty() {
            "(none)".to_string()
        } else {
            report
                .gaps
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("  n={n:>2}: {shown}");
    }

    // Membership queries work directly on the set.
    let set = theta_set(7);
    assert!(set.contains(Theta::Finite(12)));
    assert!(!set.contains(Theta::Finite(9)));
    assert!(set.contains(Theta::Infinite));
    println!("\nat order 7: 12 is achievable, 9 is a gap, inf is always achievable");
    Ok(())
}
