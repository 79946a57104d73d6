//! The trees handled by dedicated constructions, and those constructions.

use suspension_turan::construct::construct_case2_exceptional;
use suspension_turan::construct::exceptional::{double_matching_exceptions, two_regular_trees};
use suspension_turan::freeness::is_suspension_free;
use suspension_turan::graph::write_graph6;

fn main() -> anyhow::Result<()> {
    for (label, trees) in [
        ("double matching", double_matching_exceptions()),
        ("two-regular", two_regular_trees()),
    ] {
        println!("{label}:");
        for t in trees {
            let g6 = String::from_utf8(write_graph6(t.graph()))?;
            // n = 12 satisfies the k = 3 residue condition, so only membership can refuse
            if let (true, Err(e)) = (t.k() == 3, construct_case2_exceptional(12, t)) {
                println!("  {g6:<10} n = {:>2}, k = {}, refused: {e}", t.n(), t.k());
                continue;
            }
            let built: Vec<String> = (t.n() + 1..t.n() + 16)
                .filter_map(|n| construct_case2_exceptional(n, t).ok())
                .filter(|r| is_suspension_free(&r.graph, t))
                .map(|r| format!("{}:{}", r.split.n(), r.edge_count))
                .collect();
            println!(
                "  {g6:<10} n = {:>2}, k = {}, free constructions (n:edges) {}",
                t.n(),
                t.k(),
                built.join(" ")
            );
        }
    }
    Ok(())
}
