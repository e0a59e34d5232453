//! Synthesizing witness digraphs: given an order and a target index, find a
//! digraph of exactly that order whose stable index is exactly that value.
//!
//! Run with: `cargo run -p stable-index --example witness_search`

use stable_index::{stable_index_bounded, theta_set, witness, Error, Result, Theta};

fn main() -> Result<()> {
    // Ask for an order-7 digraph with index 12.
    let (digraph, family) = witness(7, Theta::Finite(12))?;
    println!("order-7 witness for index 12 (family {family}):");
    println!("{digraph}");
    assert_eq!(stable_index_bounded(&digraph), Theta::Finite(12));

    // The search scans named families first, then two-parameter joins, then
    // theta graphs, padding with isolated vertices when a smaller member
    // suffices; every candidate is re-verified before it is returned.
    for target in [Theta::Finite(1), Theta::Finite(7), Theta::Infinite] {
        let (d, family) = witness(7, target)?;
        println!(
            "target {target}: {family} (member order {})",
            d.order()
        );
    }

    // Unachievable targets are rejected with a typed error, not a panic.
    match witness(7, Theta::Finite(9)) {
        Err(Error::NotAchievable { n, target }) => {
            println!("\nno order-{n} digraph has index {target} — it is a gap")
        }
        other => panic!("expected a not-achievable error, got {other:?}"),
    }

    // Every finite achievable value at order 9 has a witness.
    let mut families = Vec::new();
    for &m in theta_set(9).finite() {
        let (d, family) = witness(9, Theta::Finite(m))?;
        assert_eq!(d.order(), 9);
        families.push(format!("{m} via {family}"));
    }
    println!("\nall {} finite values at order 9:", families.len());
    for line in families {
        println!("  {line}");
    }
    Ok(())
}
