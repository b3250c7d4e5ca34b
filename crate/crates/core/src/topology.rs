//! Position spaces the walk runs on.

use crate::error::{Error, Result};

/// Where the walker lives: an open line window or a ring.
///
/// A line state pre-allocates the full window `−max_steps..=+max_steps`
/// (`2·max_steps + 1` slots) so that `max_steps` steps never reallocate; a
/// cycle has positions `0..n−1` with wraparound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Line { max_steps: usize },
    Cycle { n: usize },
}

impl Topology {
    pub fn line(max_steps: usize) -> Self {
        Topology::Line { max_steps }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::CycleTooSmall(n));
        }
        Ok(Topology::Cycle { n })
    }

    /// Number of storage slots (= number of positions).
    pub fn slots(&self) -> usize {
        match *self {
            Topology::Line { max_steps } => 2 * max_steps + 1,
            Topology::Cycle { n } => n,
        }
    }

    /// Storage index of position `x`, or `None` when out of range.
    pub(crate) fn index_of(&self, x: i64) -> Option<usize> {
        match *self {
            Topology::Line { max_steps } => {
                let m = max_steps as i64;
                (-m..=m).contains(&x).then(|| (x + m) as usize)
            }
            Topology::Cycle { n } => (0..n as i64).contains(&x).then_some(x as usize),
        }
    }

    /// Position labeled by storage index `idx`.
    pub(crate) fn position_at(&self, idx: usize) -> i64 {
        match *self {
            Topology::Line { max_steps } => idx as i64 - max_steps as i64,
            Topology::Cycle { .. } => idx as i64,
        }
    }

    /// All positions in storage order.
    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.slots()).map(move |i| self.position_at(i))
    }

    pub fn is_line(&self) -> bool {
        matches!(self, Topology::Line { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_needs_two_positions() {
        assert_eq!(Topology::cycle(1), Err(Error::CycleTooSmall(1)));
        assert_eq!(Topology::cycle(0), Err(Error::CycleTooSmall(0)));
        assert!(Topology::cycle(2).is_ok());
    }

    #[test]
    fn line_window_spans_both_sides() {
        let topo = Topology::line(3);
        assert_eq!(topo.slots(), 7);
        let xs: Vec<i64> = topo.positions().collect();
        assert_eq!(xs, vec![-3, -2, -1, 0, 1, 2, 3]);
        assert_eq!(topo.index_of(0), Some(3));
        assert_eq!(topo.index_of(-3), Some(0));
        assert_eq!(topo.index_of(4), None);
        assert_eq!(topo.index_of(-4), None);
    }

    #[test]
    fn cycle_positions_are_zero_based() {
        let topo = Topology::cycle(5).unwrap();
        let xs: Vec<i64> = topo.positions().collect();
        assert_eq!(xs, vec![0, 1, 2, 3, 4]);
        assert_eq!(topo.index_of(4), Some(4));
        assert_eq!(topo.index_of(5), None);
        assert_eq!(topo.index_of(-1), None);
    }
}
