//! The family of suspensions of small coverings of a tree, and its minimal
//! elements.

use suspension_turan::graph::path;
use suspension_turan::tree::{certify_tree, enumerate_coverings, s_hat_family};

fn main() -> anyhow::Result<()> {
    for m in [4, 5, 6] {
        let t = certify_tree(&path(m))?;
        let covers = enumerate_coverings(&t, t.k());
        let f = s_hat_family(&t)?;
        let minimal: Vec<&str> = f.minimal.codes().map(|c| c.as_str()).collect();
        println!(
            "P{m}: {} coverings of size <= {}, {} graphs, minimal {:?}",
            covers.len(),
            t.k(),
            f.raw.len(),
            minimal
        );
    }
    Ok(())
}
