//! Dyck paths stored as step words, with the area-sequence codec, height,
//! bounce statistics, prime factorization and the bounded-height
//! decomposition used for the equidistribution bijection.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kupisch::parse_int_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

/// A lattice path of `U = (1,1)` and `D = (1,-1)` steps from `(0,0)` to
/// `(2n,0)` that never goes below the axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Bounce points `b_1 < ... < b_d = n` (the implicit `b_0 = 0` is omitted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BouncePath {
    pub points: Vec<usize>,
    pub count: usize,
}

/// Output of the bounded decompositions of paths and of ordered trees:
/// `m = left.len() = right.len()` pairs plus a middle piece.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundedDecomposition<T> {
    pub left: Vec<T>,
    pub right: Vec<T>,
    pub middle: T,
}

impl<T> BoundedDecomposition<T> {
    pub fn m(&self) -> usize {
        self.left.len()
    }
}

pub(crate) fn ceil_half(g: usize) -> usize {
    g.div_ceil(2)
}

fn word_heights(steps: &[Step]) -> Vec<i64> {
    let mut h = Vec::with_capacity(steps.len() + 1);
    let mut y = 0;
    h.push(y);
    for s in steps {
        y += s.delta();
        h.push(y);
    }
    h
}

fn reversed(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().copied().collect()
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut y = 0i64;
        for (pos, s) in steps.iter().enumerate() {
            y += s.delta();
            if y < 0 {
                return Err(Error::InvalidPath(format!("goes below the axis at step {pos}")));
            }
        }
        if y != 0 {
            return Err(Error::InvalidPath(format!("ends at height {y}")));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Height after each prefix; `heights()[x]` is the `y`-coordinate at `x`.
    pub fn heights(&self) -> Vec<usize> {
        word_heights(&self.steps).into_iter().map(|y| y as usize).collect()
    }

    pub fn height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// `[c_0, ..., c_n]` where `c_k` counts the lattice points on the
    /// diagonal from `(2k, 0)` in direction `(1,1)` that lie between the
    /// axis and the path.
    pub fn area_sequence(&self) -> Vec<usize> {
        let h = self.heights();
        let n = self.semilength();
        (0..=n)
            .map(|k| {
                let mut count = 0;
                while 2 * k + count < h.len() && h[2 * k + count] >= count {
                    count += 1;
                }
                count
            })
            .collect()
    }

    /// Checks `c_{i+1} + 1 >= c_i >= 2` for `i < n` and `c_n = 1`.
    pub fn validate_area(area: &[usize]) -> Result<()> {
        let Some((&last, body)) = area.split_last() else {
            return Err(Error::InvalidAreaSequence("empty sequence".into()));
        };
        if last != 1 {
            return Err(Error::InvalidAreaSequence(format!("last entry is {last}, expected 1")));
        }
        if let Some(i) = body.iter().position(|&c| c < 2) {
            return Err(Error::InvalidAreaSequence(format!("entry {i} is below 2")));
        }
        if let Some(i) = (0..body.len()).find(|&i| area[i] > area[i + 1] + 1) {
            return Err(Error::InvalidAreaSequence(format!(
                "entry {i} exceeds the next entry by more than one"
            )));
        }
        Ok(())
    }

    /// Inverse of [`DyckPath::area_sequence`]: the path is
    /// `U^{c_0 - 1}` followed by `D U^{c_{k+1} - c_k + 1}` for each `k < n`.
    pub fn from_area(area: &[usize]) -> Result<Self> {
        Self::validate_area(area)?;
        let mut steps = vec![Step::Up; area[0] - 1];
        for w in area.windows(2) {
            steps.push(Step::Down);
            steps.extend(std::iter::repeat_n(Step::Up, w[1] + 1 - w[0]));
        }
        Ok(DyckPath { steps })
    }

    pub fn bounce(&self) -> BouncePath {
        let area = self.area_sequence();
        let n = self.semilength();
        let mut points = Vec::new();
        let mut b = 0;
        while b < n {
            b += area[b] - 1;
            points.push(b);
        }
        BouncePath {
            count: points.len(),
            points,
        }
    }

    pub fn bounce_count(&self) -> usize {
        self.bounce().count
    }

    /// The staircase path through the bounce points.
    pub fn bounce_path(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len());
        let mut previous = 0;
        for b in self.bounce().points {
            let run = b - previous;
            steps.extend(std::iter::repeat_n(Step::Up, run));
            steps.extend(std::iter::repeat_n(Step::Down, run));
            previous = b;
        }
        DyckPath { steps }
    }

    /// Returns to the axis only with its final step.
    pub fn is_prime(&self) -> bool {
        let h = word_heights(&self.steps);
        !self.steps.is_empty() && h[1..h.len() - 1].iter().all(|&y| y > 0)
    }

    /// Unique factorization into prime paths.
    pub fn prime_factors(&self) -> Vec<DyckPath> {
        let mut factors = Vec::new();
        let mut start = 0;
        let mut y = 0i64;
        for (i, s) in self.steps.iter().enumerate() {
            y += s.delta();
            if y == 0 {
                factors.push(DyckPath {
                    steps: self.steps[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        factors
    }

    pub fn concat(paths: &[DyckPath]) -> DyckPath {
        DyckPath {
            steps: paths.iter().flat_map(|p| p.steps.iter().copied()).collect(),
        }
    }

    /// Drops the first and last step of a prime path.
    pub fn strip(&self) -> Result<DyckPath> {
        if !self.is_prime() {
            return Err(Error::InvalidPath("only prime paths can be stripped".into()));
        }
        Ok(DyckPath {
            steps: self.steps[1..self.steps.len() - 1].to_vec(),
        })
    }

    /// `U self D`, the inverse of [`DyckPath::strip`].
    pub fn lift(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::Down);
        DyckPath { steps }
    }

    /// Splits a path of height at most `g + 1` around its crossings of the
    /// level `h = ceil(g/2)`.
    ///
    /// Removing every up step from `h` to `h+1` and every down step from
    /// `h+1` to `h` cuts the word into `A, L_1, R'_2, L_2, ..., R'_m, L_m, B`.
    /// Each `R_k` (`k >= 2`) is the reversal of `R'_k`. With `P` the prefix of
    /// `A` up to its first visit to height `h`, `R_1` is the reversal of the
    /// rest of `A` and the middle piece is `P` followed by the reversal of `B`.
    pub fn decompose_bounded(&self, g: usize) -> Result<BoundedDecomposition<DyckPath>> {
        let height = self.height();
        if height > g + 1 {
            return Err(Error::HeightExceeded { height, bound: g + 1 });
        }
        let h = ceil_half(g) as i64;
        if height as i64 <= h {
            return Ok(BoundedDecomposition {
                left: Vec::new(),
                right: Vec::new(),
                middle: self.clone(),
            });
        }

        let mut segments: Vec<Vec<Step>> = vec![Vec::new()];
        let mut y = 0i64;
        for &s in &self.steps {
            let crossing = (s == Step::Up && y == h) || (s == Step::Down && y == h + 1);
            if crossing {
                segments.push(Vec::new());
            } else {
                segments.last_mut().expect("non-empty").push(s);
            }
            y += s.delta();
        }
        let m = (segments.len() - 1) / 2;
        let a = &segments[0];
        let b = &segments[2 * m];

        let first_visit = word_heights(a)
            .iter()
            .position(|&y| y == h)
            .expect("A ends at height h");
        let mut middle = a[..first_visit].to_vec();
        middle.extend(reversed(b));

        let left = (1..=m)
            .map(|k| DyckPath {
                steps: segments[2 * k - 1].clone(),
            })
            .collect();
        let mut right = vec![DyckPath {
            steps: reversed(&a[first_visit..]),
        }];
        right.extend((2..=m).map(|k| DyckPath {
            steps: reversed(&segments[2 * k - 2]),
        }));

        Ok(BoundedDecomposition {
            left,
            right,
            middle: DyckPath { steps: middle },
        })
    }

    /// Inverse of [`DyckPath::decompose_bounded`].
    pub fn recompose_bounded(parts: &BoundedDecomposition<DyckPath>, g: usize) -> Result<DyckPath> {
        let m = parts.m();
        let h = ceil_half(g);
        let floor_half = g / 2;
        if parts.right.len() != m {
            return Err(Error::BoundViolated(format!(
                "{} left pieces but {} right pieces",
                m,
                parts.right.len()
            )));
        }
        if let Some(l) = parts.left.iter().find(|p| p.height() > floor_half) {
            return Err(Error::HeightExceeded {
                height: l.height(),
                bound: floor_half,
            });
        }
        if let Some(r) = parts.right.iter().find(|p| p.height() > h) {
            return Err(Error::HeightExceeded {
                height: r.height(),
                bound: h,
            });
        }
        let middle_height = parts.middle.height();
        if middle_height > h {
            return Err(Error::HeightExceeded {
                height: middle_height,
                bound: h,
            });
        }
        if m == 0 {
            return Ok(parts.middle.clone());
        }
        if middle_height != h {
            return Err(Error::BoundViolated(format!(
                "middle piece must reach height {h} when m > 0"
            )));
        }

        let first_visit = word_heights(&parts.middle.steps)
            .iter()
            .position(|&y| y == h as i64)
            .expect("middle reaches h");
        let mut steps = parts.middle.steps[..first_visit].to_vec();
        steps.extend(reversed(&parts.right[0].steps));
        for k in 0..m {
            if k > 0 {
                steps.extend(reversed(&parts.right[k].steps));
            }
            steps.push(Step::Up);
            steps.extend_from_slice(&parts.left[k].steps);
            steps.push(Step::Down);
        }
        steps.extend(reversed(&parts.middle.steps[first_visit..]));
        DyckPath::new(steps)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Accepts a `U`/`D` word (`UUDUDD`) or an area sequence (`[3,2,1]`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            return DyckPath::from_area(&parse_int_list(s)?);
        }
        let steps = s
            .chars()
            .map(|ch| match ch {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::Parse(format!("unexpected `{other}` in a U/D word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    /// Largest `c` with `(2k + c - 1, c - 1)` on the path, read straight off
    /// the list of lattice points.
    fn area_by_definition(p: &DyckPath) -> Vec<usize> {
        let points: Vec<(usize, usize)> = p.heights().into_iter().enumerate().collect();
        (0..=p.semilength())
            .map(|k| {
                (1..=2 * p.semilength() + 1)
                    .filter(|&c| points.contains(&(2 * k + c - 1, c - 1)))
                    .max()
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn small_area_sequences() {
        assert_eq!(path("UUDD").area_sequence(), vec![3, 2, 1]);
        assert_eq!(path("UDUD").area_sequence(), vec![2, 2, 1]);
        assert_eq!(DyckPath::empty().area_sequence(), vec![1]);
        for w in ["UUDD", "UDUD", "UUDUDD", "UUUDDD", "UDUUDD"] {
            assert_eq!(path(w).area_sequence(), area_by_definition(&path(w)), "{w}");
        }
    }

    #[test]
    fn worked_paths() {
        let area = vec![3, 5, 5, 5, 4, 3, 4, 3, 3, 3, 2, 1];
        let pic = DyckPath::from_area(&area).unwrap();
        assert_eq!(pic.to_string(), "UUDUUUDUDUDDDUUDDUDUDD");
        assert_eq!(pic.area_sequence(), area);
        assert_eq!(area_by_definition(&pic), area);
        assert_eq!(pic.height(), 4);
        assert_eq!(pic.bounce().points, vec![2, 6, 9, 11]);
        assert_eq!(pic.bounce().count, 4);
        assert_eq!(pic.prime_factors().len(), 1);

        let small = path("[3,4,4,3,2,1]");
        assert_eq!(small.to_string(), "UUDUUDUDDD");
        assert_eq!(small.height(), 3);
        assert_eq!(small.bounce().points, vec![2, 5]);
    }

    #[test]
    fn sawtooth_bounces_every_step() {
        for n in 1..6 {
            let mut area = vec![2; n];
            area.push(1);
            let p = DyckPath::from_area(&area).unwrap();
            assert_eq!(p.bounce_count(), n);
            assert_eq!(p.bounce_path(), p);
        }
        assert_eq!(DyckPath::empty().bounce_count(), 0);
        assert_eq!(DyckPath::empty().height(), 0);
    }

    #[test]
    fn area_validation() {
        assert!(matches!(DyckPath::from_area(&[]), Err(Error::InvalidAreaSequence(_))));
        assert!(matches!(DyckPath::from_area(&[3, 1]), Err(Error::InvalidAreaSequence(_))));
        assert!(matches!(DyckPath::from_area(&[2, 2]), Err(Error::InvalidAreaSequence(_))));
        assert!(matches!(DyckPath::from_area(&[1, 2, 1]), Err(Error::InvalidAreaSequence(_))));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("UDX".parse::<DyckPath>(), Err(Error::Parse(_))));
        assert!(matches!("DU".parse::<DyckPath>(), Err(Error::InvalidPath(_))));
        assert!(matches!("UUD".parse::<DyckPath>(), Err(Error::InvalidPath(_))));
        assert_eq!("".parse::<DyckPath>().unwrap(), DyckPath::empty());
    }

    #[test]
    fn primes() {
        let f: Vec<String> = path("UDUD").prime_factors().iter().map(|p| p.to_string()).collect();
        assert_eq!(f, vec!["UD", "UD"]);
        let f: Vec<String> = path("UUDDUD").prime_factors().iter().map(|p| p.to_string()).collect();
        assert_eq!(f, vec!["UUDD", "UD"]);
        assert_eq!(path("UUDD").strip().unwrap(), path("UD"));
        assert!(path("UDUD").strip().is_err());
        assert_eq!(path("UD").lift(), path("UUDD"));
    }

    #[test]
    fn decomposition_even_bound() {
        let d = path("UDUUDUUUUDDDUUUDUDUDDDDD");
        assert_eq!(d.semilength(), 12);
        let parts = d.decompose_bounded(4).unwrap();
        assert_eq!(parts.m(), 2);
        assert_eq!(parts.left, vec![path("UUDD"), path("UUDUDUDD")]);
        assert_eq!(parts.right, vec![path("UD"), DyckPath::empty()]);
        assert_eq!(parts.middle, path("UDUUDD"));
        assert_eq!(DyckPath::recompose_bounded(&parts, 4).unwrap(), d);
    }

    #[test]
    fn decomposition_odd_bound() {
        let d = path("UUUUDDDDUUDDUUUUDUDDDDUD");
        let parts = d.decompose_bounded(3).unwrap();
        assert_eq!(parts.m(), 2);
        assert_eq!(parts.left, vec![path("UD"), path("UDUD")]);
        assert_eq!(parts.right, vec![DyckPath::empty(), path("UUDDUUDD")]);
        assert_eq!(parts.middle, path("UUDUDD"));
        assert_eq!(DyckPath::recompose_bounded(&parts, 3).unwrap(), d);
    }

    #[test]
    fn low_paths_are_their_own_middle() {
        let d = path("UUDDUD");
        let parts = d.decompose_bounded(3).unwrap();
        assert_eq!(parts.m(), 0);
        assert_eq!(parts.middle, d);
        assert_eq!(
            path("UUUDDD").decompose_bounded(1),
            Err(Error::HeightExceeded { height: 3, bound: 2 })
        );
    }
}
