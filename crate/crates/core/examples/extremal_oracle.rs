//! Exhaustive ex(n, suspension of T) next to the formula value.

use suspension_turan::family::GraphFamily;
use suspension_turan::formula::f_max;
use suspension_turan::graph::{path, suspension};
use suspension_turan::oracle::ex_bruteforce;
use suspension_turan::tree::certify_tree;

fn main() -> anyhow::Result<()> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(8);
    for m in [4, 5] {
        let t = certify_tree(&path(m))?;
        let fam = GraphFamily::from_graphs(&[suspension(t.graph())])?;
        println!("P{m}, k = {}", t.k());
        for n in t.n() + 1..=max_n {
            let r = ex_bruteforce(n, &fam, true)?;
            let f = f_max(n as u64, t.k() as u64)?.value;
            println!(
                "  n = {n:>2}: ex = {:>3}, f = {f:>3}, {} extremal graphs, {} classes visited",
                r.value,
                r.extremal_graphs.len(),
                r.visited
            );
        }
    }
    Ok(())
}
