//! Lower-bound constructions for a few balanced trees, each certified free
//! of the suspension by an exact search.

use suspension_turan::construct::best_construction;
use suspension_turan::graph::path;
use suspension_turan::tree::{certify_tree, parse_parent_array};

fn main() -> anyhow::Result<()> {
    let trees = [
        ("P4", certify_tree(&path(4))?),
        ("P7", certify_tree(&path(7))?),
        // two adjacent centres with three leaves each: no matching saturates the small class
        ("double star", parse_parent_array("-1 0 0 0 3 3 3")?),
    ];
    for (name, t) in &trees {
        println!("{name} (k = {})", t.k());
        for n in t.n() + 1..=t.n() + 10 {
            let d = best_construction(n, t, None)?;
            match d.report {
                Some(r) => println!(
                    "  n = {n:>2}: {:<8} split {}+{} edges {} target {}{}",
                    r.variant.name(),
                    r.split.n0,
                    r.split.n1,
                    r.edge_count,
                    r.target,
                    if r.meets_target { "" } else { "  (short)" }
                ),
                None => {
                    let why: Vec<String> = d
                        .attempts
                        .iter()
                        .map(|a| format!("{}: {}", a.variant, a.reason))
                        .collect();
                    println!("  n = {n:>2}: nothing applies ({})", why.join("; "));
                }
            }
        }
    }
    Ok(())
}
