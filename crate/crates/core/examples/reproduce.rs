//! The full reproduction report on the bundled data.

use matroid_forge::repro::{self, DataSet};
use matroid_forge::SearchBudget;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let data = DataSet::bundled()?;
    let report = repro::run(&data, SearchBudget::from_env());
    print!("{}", report.render(false));
    if !report.passed() {
        return Err("some checks failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
