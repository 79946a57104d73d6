//! The verification sweep behind `turan verify`, called as a library.

use suspension_turan::cli::cmd_verify;
use suspension_turan::graph::path;
use suspension_turan::tree::certify_tree;

fn main() -> anyhow::Result<()> {
    let t = certify_tree(&path(6))?;
    let report = cmd_verify(&t, 5, 20, Some(8), None)?;
    for row in &report.rows {
        println!(
            "n = {:>2}  f = {:>3}  {:<6} {:>4}  ex = {}",
            row.n,
            row.f_value,
            row.construction_variant.unwrap_or("-"),
            row.edge_count.map_or("-".into(), |e| e.to_string()),
            row.oracle_value.map_or("-".into(), |e| e.to_string())
        );
    }
    println!("{}", serde_json::to_string(&report.summary)?);
    Ok(())
}
