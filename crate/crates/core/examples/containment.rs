//! Containment searches: a tree in a host, the suspension of a tree, and the
//! greedy embedding guaranteed by a large minimum degree.

use suspension_turan::freeness::{contains_subgraph, contains_suspension, greedy_embed_min_degree};
use suspension_turan::graph::{complete_bipartite, path, petersen};
use suspension_turan::tree::certify_tree;

fn main() -> anyhow::Result<()> {
    let p4 = certify_tree(&path(4))?;
    let p5 = certify_tree(&path(5))?;
    let k55 = complete_bipartite(5, 5);
    println!("P4 in K_5,5: {:?}", contains_subgraph(&k55, p4.graph()).map(|e| e.map));
    // a bipartite host has no triangle, and every suspension has one
    println!(
        "suspension of P4 in K_5,5: {:?}",
        contains_suspension(&k55, &p4).map(|e| e.map)
    );
    let pete = petersen();
    println!(
        "suspension of P4 in Petersen: {:?}",
        contains_suspension(&pete, &p4).map(|e| e.map)
    );
    match greedy_embed_min_degree(&pete, &p4) {
        Ok(e) => println!("greedy P4 in Petersen: {:?}", e.map),
        Err(e) => println!("greedy P4 in Petersen: {e}"),
    }
    match greedy_embed_min_degree(&pete, &p5) {
        Ok(e) => println!("greedy P5 in Petersen: {:?}", e.map),
        Err(e) => println!("greedy P5 in Petersen: {e}"),
    }
    Ok(())
}
