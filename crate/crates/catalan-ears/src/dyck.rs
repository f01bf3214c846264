//! Dyck paths: balanced words over `{U, D}` with nonnegative prefix sums.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DyckError {
    #[error("invalid step character {0:?}, expected 'U' or 'D'")]
    BadStep(char),
    #[error("prefix at position {position} has more downsteps than upsteps")]
    NegativePrefix { position: usize },
    #[error("unbalanced path: {ups} upsteps vs {downs} downsteps")]
    Unbalanced { ups: usize, downs: usize },
}

/// A Dyck path of semilength `n`: `2n` steps, equal numbers of `U` and `D`,
/// every prefix with at least as many `U`s as `D`s. The empty path is valid.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, DyckError> {
        let mut height: isize = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(DyckError::NegativePrefix { position: i });
            }
        }
        if height != 0 {
            let ups = steps.iter().filter(|s| **s == Step::Up).count();
            return Err(DyckError::Unbalanced {
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(DyckPath { steps })
    }

    pub fn parse(text: &str) -> Result<Self, DyckError> {
        let steps = text
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(DyckError::BadStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckPath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Number of contiguous `D D U` factors.
    pub fn count_ddu(&self) -> usize {
        self.steps
            .windows(3)
            .filter(|w| w == &[Step::Down, Step::Down, Step::Up])
            .count()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// All Dyck paths of semilength `n`, in the deterministic order that tries
/// an upstep before a downstep at every position.
pub fn all_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(2 * n);
    fill(n, 0, &mut buf, &mut out);
    out
}

fn fill(remaining_ups: usize, height: usize, buf: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
    if remaining_ups == 0 && height == 0 {
        out.push(DyckPath { steps: buf.clone() });
        return;
    }
    if remaining_ups > 0 {
        buf.push(Step::Up);
        fill(remaining_ups - 1, height + 1, buf, out);
        buf.pop();
    }
    if height > 0 {
        buf.push(Step::Down);
        fill(remaining_ups, height - 1, buf, out);
        buf.pop();
    }
}
