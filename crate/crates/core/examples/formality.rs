//! Formality of arrangements given by exact matrices.

use matroid_forge::format::parse_matrix;
use matroid_forge::{are_isomorphic, catalog};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (name, a) in [
        ("A", catalog::matrix_a()),
        ("A1", catalog::yuzvinsky1()),
        ("A2", catalog::yuzvinsky2()),
    ] {
        let r = a.formality_report()?;
        println!(
            "{name}: {} hyperplanes, dim ker {}, dim F {}, rank {} -> {}, {}",
            r.hyperplanes,
            r.kernel_dim,
            r.weight3_dim,
            r.rank,
            r.formalization_rank,
            if r.formal { "formal" } else { "not formal" }
        );
    }

    let (m1, m2) = (catalog::yuzvinsky1().column_matroid(), catalog::yuzvinsky2().column_matroid());
    println!("same matroid: {}", are_isomorphic(&m1, &m2).is_some());

    let g = catalog::yuzvinsky2().formalization()?;
    println!("formalization of A2 is {}x{}", g.rows(), g.cols());

    // matrices can also be written inline; here a generic arrangement of 4 planes
    let generic = parse_matrix("field Q\nrows 3\ncols 4\n1 0 0 1\n0 1 0 1\n0 0 1 1\n")?;
    println!("generic 4 planes formal: {}", generic.is_formal());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
