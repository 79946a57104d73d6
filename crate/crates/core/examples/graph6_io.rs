//! graph6 and edge-list round trips and canonical forms.

use suspension_turan::graph::{canonical_form, parse_graph6, petersen, write_graph6, Graph};

fn main() -> anyhow::Result<()> {
    let g = petersen();
    let g6 = write_graph6(&g);
    println!("Petersen: {}", String::from_utf8_lossy(&g6));
    assert_eq!(parse_graph6(&g6)?, g);
    let list = g.to_edge_list();
    assert_eq!(Graph::parse_edge_list(&list)?, g);
    let shuffled = g.permuted(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
    println!("canonical: {} and {}", canonical_form(&g)?, canonical_form(&shuffled)?);
    Ok(())
}
