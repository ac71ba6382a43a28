//! The exact cover solver on its own: tilings of a 2x4 board by dominoes.

use matroid_forge::exact_cover::ExactCover;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let cell = |r: usize, c: usize| r * 4 + c;
    let mut options = Vec::new();
    for r in 0..2 {
        for c in 0..4 {
            if c + 1 < 4 {
                options.push(vec![cell(r, c), cell(r, c + 1)]);
            }
            if r == 0 {
                options.push(vec![cell(0, c), cell(1, c)]);
            }
        }
    }
    let solutions = ExactCover::new(8, options.clone()).solve_all(1_000_000)?;
    println!("{} domino tilings", solutions.len());
    for s in &solutions {
        let pieces: Vec<String> = s.iter().map(|&o| format!("{:?}", options[o])).collect();
        println!("  {}", pieces.join(" "));
    }
    assert_eq!(solutions.len(), 5);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
