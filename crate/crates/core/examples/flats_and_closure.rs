//! Rank, closure, flats and minors of the 13-point plane `M`.

use matroid_forge::{catalog, Matroid, Subset};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let m = catalog::matroid_m();
    println!("M: {} points, rank {}, {} bases", m.ground_size(), m.rank(), m.bases().len());

    println!("three-point lines:");
    for line in m.flats_at_larger_than(2, 2) {
        println!("  {line}");
    }

    let pair = Subset::from_elements([0, 3]);
    println!("cl{pair} = {}", m.closure(pair));
    let triple = Subset::from_elements([0, 3, 4]);
    println!("rk{triple} = {}, spanning: {}", m.rank_of(triple), m.spans(triple));

    // the same plane given by bases instead of lines
    let again = Matroid::from_bases(m.ground_size(), m.bases().iter().copied())?;
    assert_eq!(again, m);

    let del = m.delete(Subset::from_elements(9..13))?;
    println!(
        "M \\ {{9..12}}: {} points, {} lines",
        del.matroid.ground_size(),
        del.matroid.flats_at_larger_than(2, 2).len()
    );

    let con = m.contract(Subset::singleton(9))?;
    let simple = con.matroid.simplify()?;
    print!("M / 9 simplifies to {} points:", simple.matroid.ground_size());
    for class in con.then(simple).origin {
        print!(" {class}");
    }
    println!();

    let t = m.truncation()?;
    println!("truncation: rank {}, {} bases", t.rank(), t.bases().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
