//! Isomorph-free enumeration of graphs and trees.

use std::time::Instant;

use suspension_turan::oracle::{enumerate_balanced_trees, enumerate_graphs, enumerate_trees};

fn main() -> anyhow::Result<()> {
    for n in 1..=8 {
        let t = Instant::now();
        let graphs = enumerate_graphs(n)?.len();
        println!(
            "n = {n}: {graphs} graphs, {} trees ({:.2?})",
            enumerate_trees(n)?.len(),
            t.elapsed()
        );
    }
    let balanced = enumerate_balanced_trees(10)?;
    println!("{} balanced trees on at most 10 vertices", balanced.len());
    Ok(())
}
