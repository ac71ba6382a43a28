//! Erections of `M` by exact cover over candidate copoints.

use matroid_forge::erection::{
    check_erection_blocks, enumerate_erections, spanning_k_closed_sets, tautness_witness,
};
use matroid_forge::{catalog, BlockFamily, SearchBudget};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m = catalog::matroid_m();
    let budget = SearchBudget::from_env();

    let candidates = spanning_k_closed_sets(&m, m.rank() - 1, true)?;
    println!("{} candidate blocks", candidates.len());

    let family = enumerate_erections(&m, budget)?;
    for (i, e) in family.erections().iter().enumerate() {
        println!(
            "erection {i}: rank {}, {} bases, {} blocks",
            e.matroid.rank(),
            e.matroid.bases().len(),
            e.blocks.len()
        );
    }
    let top = family.maximum().ok_or("no free erection")?;
    let n = &family.erections()[top].matroid;
    assert_eq!(*n, catalog::matroid_n());
    assert_eq!(n.truncation()?, m);

    let planes = BlockFamily::new(n.flats_at(3));
    let report = check_erection_blocks(&m, &planes);
    println!(
        "planes of N as blocks: spanning {}, closed {}, unique cover {}",
        report.spanning, report.closed, report.unique_cover
    );

    // dropping one plane breaks the unique cover
    let broken = BlockFamily::new(n.flats_at(3).into_iter().skip(1));
    if let Some(v) = check_erection_blocks(&m, &broken).violation {
        println!("without the first plane: {v}");
    }

    match tautness_witness(&m, budget)? {
        Some(w) => println!("not taut: an erection of rank {} keeps the points and lines", w.rank()),
        None => println!("no nontrivial erection"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
