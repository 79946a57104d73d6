//! Minimal graphs that create the suspension when placed inside one side of
//! a large complete bipartite graph, found exhaustively and compared with
//! the minimal covering family.

use suspension_turan::graph::path;
use suspension_turan::oracle::decomposition_family_bruteforce;
use suspension_turan::tree::{certify_tree, s_hat_family};

fn main() -> anyhow::Result<()> {
    for m in [4, 5, 6] {
        let t = certify_tree(&path(m))?;
        let found = decomposition_family_bruteforce(&t, 5)?;
        let minimal = s_hat_family(&t)?.minimal;
        let codes: Vec<&str> = found.codes().map(|c| c.as_str()).collect();
        let small: Vec<&str> = minimal
            .graphs()
            .zip(minimal.codes())
            .filter(|(g, _)| g.n() <= 5)
            .map(|(_, c)| c.as_str())
            .collect();
        println!("P{m}: exhaustive {codes:?}, covering family {small:?}");
    }
    Ok(())
}
