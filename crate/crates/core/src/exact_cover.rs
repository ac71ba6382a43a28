//! Exact cover by backtracking with the minimum-remaining-values rule.
//!
//! Items are `0..n_items`; each option covers a set of items. A solution is
//! a set of options covering every item exactly once.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExactCover {
    n_items: usize,
    options: Vec<Vec<usize>>,
    item_options: Vec<Vec<usize>>,
}

impl ExactCover {
    pub fn new(n_items: usize, options: Vec<Vec<usize>>) -> Self {
        let mut item_options = vec![Vec::new(); n_items];
        for (o, items) in options.iter().enumerate() {
            for &i in items {
                item_options[i].push(o);
            }
        }
        ExactCover {
            n_items,
            options,
            item_options,
        }
    }

    /// Every solution, each as an ascending list of option indices.
    /// `budget` bounds the number of option selections tried.
    pub fn solve_all(&self, budget: u64) -> Result<Vec<Vec<usize>>> {
        let mut state = State {
            problem: self,
            covered: vec![false; self.n_items],
            blocked: vec![0; self.options.len()],
            chosen: Vec::new(),
            solutions: Vec::new(),
            nodes: 0,
            budget,
        };
        state.search()?;
        Ok(state.solutions)
    }
}

struct State<'a> {
    problem: &'a ExactCover,
    covered: Vec<bool>,
    /// number of covered items in each option; usable only at zero
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    solutions: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl State<'_> {
    fn live_options(&self, item: usize) -> impl Iterator<Item = usize> + '_ {
        self.problem.item_options[item]
            .iter()
            .copied()
            .filter(|&o| self.blocked[o] == 0)
    }

    fn search(&mut self) -> Result<()> {
        let mut best: Option<(usize, usize)> = None;
        for item in (0..self.problem.n_items).filter(|&i| !self.covered[i]) {
            let count = self.live_options(item).count();
            if best.is_none_or(|(_, c)| count < c) {
                best = Some((item, count));
                if count == 0 {
                    break;
                }
            }
        }
        let Some((item, count)) = best else {
            let mut solution = self.chosen.clone();
            solution.sort_unstable();
            self.solutions.push(solution);
            return Ok(());
        };
        if count == 0 {
            return Ok(());
        }
        let branches: Vec<usize> = self.live_options(item).collect();
        for option in branches {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded {
                    budget: self.budget,
                });
            }
            self.select(option, true);
            self.chosen.push(option);
            let outcome = self.search();
            self.chosen.pop();
            self.select(option, false);
            outcome?;
        }
        Ok(())
    }

    fn select(&mut self, option: usize, on: bool) {
        for &i in &self.problem.options[option] {
            self.covered[i] = on;
            for &o in &self.problem.item_options[i] {
                if on {
                    self.blocked[o] += 1;
                } else {
                    self.blocked[o] -= 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knuth_example_has_unique_solution() {
        // items a..g = 0..6
        let options = vec![
            vec![2, 4, 5],
            vec![0, 3, 6],
            vec![1, 2, 5],
            vec![0, 3],
            vec![1, 6],
            vec![3, 4, 6],
        ];
        let solutions = ExactCover::new(7, options).solve_all(1_000).unwrap();
        assert_eq!(solutions, vec![vec![0, 3, 4]]);
    }

    #[test]
    fn enumerates_every_solution_once() {
        // tile 4 cells with dominoes or monominoes on a path
        let options = vec![vec![0], vec![1], vec![2], vec![3], vec![0, 1], vec![1, 2], vec![2, 3]];
        let mut solutions = ExactCover::new(4, options).solve_all(1_000).unwrap();
        solutions.sort();
        solutions.dedup();
        // compositions of 4 into parts of size 1 and 2
        assert_eq!(solutions.len(), 5);
    }

    #[test]
    fn budget_is_enforced() {
        let options = (0..6).map(|i| vec![i]).collect();
        let err = ExactCover::new(6, options).solve_all(3).unwrap_err();
        assert!(matches!(err, Error::SearchBudgetExceeded { budget: 3 }));
    }

    #[test]
    fn no_items_has_empty_solution() {
        assert_eq!(ExactCover::new(0, vec![]).solve_all(1).unwrap(), vec![Vec::<usize>::new()]);
    }
}
