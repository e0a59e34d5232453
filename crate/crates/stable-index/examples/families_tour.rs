//! A tour of the built-in digraph families and their closed-form indices.
//!
//! Run with: `cargo run -p stable-index --example families_tour`

use stable_index::families::{dumbbell_index, theta_graph_index, theta_graph_min_order};
use stable_index::{stable_index_bounded, FamilySpec, Result};

fn main() -> Result<()> {
    // Every family is addressable by a compact spec string — the same syntax
    // the command-line tool accepts.
    println!("spec            order  index");
    for spec in [
        "cycle:6",      // walks are unique: infinite index
        "complete:4",   // all arcs incl. loops: duplicate pairs at length 2
        "lollipop:6",   // a cycle with one chord: index equals the order
        "g:2,2,3",      // two cycles joined by a path
        "g:3,4,5",      // lcm(3, 5) + 4 - 2 = 17
        "G:4,3,3,1,8",  // two cycles bridged by two routes from one source
    ] {
        let family: FamilySpec = spec.parse()?;
        let digraph = family.build()?;
        let theta = stable_index_bounded(&digraph);
        println!("{spec:<15} {:>5}  {theta}", digraph.order());
    }

    // Dumbbells have an exact closed form: lcm(p, q) + k - 2.
    let predicted = dumbbell_index(3, 4, 5)?;
    println!("\ndumbbell g:3,4,5 closed form = {predicted}");

    // Theta graphs (two routes of lengths l and t from a shared source into a
    // q-cycle, the first passing through a p-cycle) have a congruence-based
    // closed form; it is an upper bound in general and exact on the
    // subfamily used for witness synthesis.
    let (p, q, l, t) = (4, 3, 3, 1);
    let formula = theta_graph_index(p, q, l, t)?;
    let order = theta_graph_min_order(p, q, l, t);
    println!("theta graph G:4,3,3,1 -> closed form {formula} at minimal order {order}");

    let spec: FamilySpec = "G:4,3,3,1,8".parse()?;
    let member = spec.build()?;
    println!("member edge list:\n{member}");
    assert_eq!(stable_index_bounded(&member), formula);
    Ok(())
}
