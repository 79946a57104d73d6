//! f(n, k) with its maximising splits and the residue branch of n.

use suspension_turan::formula::{f_max, predicted_maximizers, ResidueBranch};

fn main() {
    println!(
        "{:>3} {:>3} {:>6}  {:<14} {:<10} branch",
        "n", "k", "f", "maximizers", "predicted"
    );
    for k in 1..=4u64 {
        for n in (2 * k + 1)..=(2 * k + 12) {
            let f = f_max(n, k).expect("k >= 1");
            println!(
                "{n:>3} {k:>3} {:>6}  {:<14} {:<10} {}",
                f.value,
                format!("{:?}", f.maximizers),
                format!("{:?}", predicted_maximizers(n, k)),
                ResidueBranch::of(n, k).label()
            );
        }
    }
}
