//! Independent sets whose removal leaves small components, from the
//! inductive construction, next to the smallest one found exhaustively.

use suspension_turan::tree::{check_decomposition, decompose_bruteforce, decompose_lemma4, parse_parent_array};

fn main() -> anyhow::Result<()> {
    // a spider with four legs of length 2
    let t = parse_parent_array("-1 0 1 0 3 0 5 0 7")?;
    let k = t.k();
    println!("tree on {} vertices, k = {k}", t.n());
    for a in 1..=k {
        let d = decompose_lemma4(&t, a)?;
        check_decomposition(&t, a, &d).expect("construction is valid");
        let best = decompose_bruteforce(&t, a)?.expect("always feasible for a <= k");
        println!(
            "a = {a}: set {:?}, largest component {} (bound {}), exhaustive best set size {}",
            d.independent_set,
            d.largest_component(),
            k + 1 - a,
            best.independent_set.len()
        );
    }
    Ok(())
}
