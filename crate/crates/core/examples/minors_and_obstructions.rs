//! Fano and non-Fano minors of `N` and the realizability verdicts.

use matroid_forge::minor::{find_minor, realizability_obstruction};
use matroid_forge::{catalog, SearchBudget};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let budget = SearchBudget::from_env();
    let n = catalog::matroid_n();

    for (name, target) in [("F7", catalog::fano()), ("F7-", catalog::non_fano())] {
        match find_minor(&n, &target, budget)? {
            Some(w) => {
                println!("{name} in N: {w}");
                assert_eq!(w.replay(&n)?, target);
            }
            None => println!("{name} is not a minor of N"),
        }
    }

    for (name, m) in [
        ("N", n),
        ("M", catalog::matroid_m()),
        ("F7", catalog::fano()),
        ("F7-", catalog::non_fano()),
    ] {
        println!("{name}: {}", realizability_obstruction(&m, budget)?.verdict);
    }

    // the same pair of planes as matrices over GF(2) and GF(3)
    assert_eq!(catalog::fano_gf2().column_matroid(), catalog::fano());
    assert_eq!(catalog::fano_gf3().column_matroid(), catalog::non_fano());
    println!("GF(2) realizes F7, GF(3) realizes F7-");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
