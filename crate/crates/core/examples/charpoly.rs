//! Characteristic polynomials and integer factorization.

use matroid_forge::polynomial::{characteristic_polynomial, splits_over_integers};
use matroid_forge::{catalog, Matroid};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (name, m) in [
        ("M", catalog::matroid_m()),
        ("N", catalog::matroid_n()),
        ("F7", catalog::fano()),
        ("U(3,5)", Matroid::uniform(3, 5)),
        ("A1", catalog::yuzvinsky1().column_matroid()),
    ] {
        let chi = characteristic_polynomial(&m);
        let roots = match splits_over_integers(&chi) {
            Some(r) => r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
            None => "does not split".into(),
        };
        println!("{name:7} {chi:32} {roots}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
