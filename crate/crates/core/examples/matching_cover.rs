//! Maximum matchings in trees and the vertex covers of the same size.

use suspension_turan::graph::path;
use suspension_turan::tree::{
    certify_tree, has_matching_covering_small_class, konig_cover, max_matching, parse_parent_array,
};

fn main() -> anyhow::Result<()> {
    let trees = [
        ("P6", certify_tree(&path(6))?),
        ("double star", parse_parent_array("-1 0 0 0 1 1")?),
        ("caterpillar", parse_parent_array("-1 0 1 2 0 1 2 3")?),
    ];
    for (name, t) in &trees {
        let m = max_matching(t.graph(), t.class_a())?;
        let cover = konig_cover(t.graph(), t.class_a(), &m)?;
        println!(
            "{name}: k = {}, matching {:?}, cover {:?}, saturates small class: {}",
            t.k(),
            m,
            cover,
            has_matching_covering_small_class(t)
        );
    }
    Ok(())
}
