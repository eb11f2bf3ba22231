//! Exhaustive generators for Kupisch series, Dyck paths and ordered trees,
//! and the distribution tables built on top of them.
//!
//! All generators are lazy depth-first searches producing their objects in
//! lexicographic order; each call starts a fresh stream.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bijections::{is_canonical_rotation, m1_characterizations};
use crate::dyck::{DyckPath, Step};
use crate::kupisch::KupischSeries;
use crate::resolution_quiver::finite_gldim_via_quiver;
use crate::trees::OrderedTree;

/// Depth-first search over integer vectors of length `n`. `bounds(prefix, i)`
/// gives the admissible range for position `i`; an empty range backtracks.
struct Search<B, A> {
    n: usize,
    values: Vec<usize>,
    bounds: B,
    accept: A,
    started: bool,
    done: bool,
}

impl<B, A> Search<B, A>
where
    B: Fn(&[usize], usize) -> (usize, usize),
    A: Fn(&[usize]) -> bool,
{
    fn new(n: usize, bounds: B, accept: A) -> Self {
        Search {
            n,
            values: Vec::with_capacity(n),
            bounds,
            accept,
            started: false,
            done: false,
        }
    }

    /// Moves to the next sibling of the deepest position that has one.
    fn bump(&mut self) -> bool {
        while let Some(last) = self.values.pop() {
            let (_, hi) = (self.bounds)(&self.values, self.values.len());
            if last < hi {
                self.values.push(last + 1);
                return true;
            }
        }
        false
    }

    /// Extends the current prefix to the smallest complete vector.
    fn descend(&mut self) -> bool {
        loop {
            let i = self.values.len();
            if i == self.n {
                return true;
            }
            let (lo, hi) = (self.bounds)(&self.values, i);
            if lo <= hi {
                self.values.push(lo);
            } else if !self.bump() {
                return false;
            }
        }
    }
}

impl<B, A> Iterator for Search<B, A>
where
    B: Fn(&[usize], usize) -> (usize, usize),
    A: Fn(&[usize]) -> bool,
{
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while !self.done {
            let found = if self.started {
                self.bump() && self.descend()
            } else {
                self.started = true;
                self.descend()
            };
            if !found {
                self.done = true;
            } else if (self.accept)(&self.values) {
                return Some(self.values.clone());
            }
        }
        None
    }
}

fn all(_: &[usize]) -> bool {
    true
}

/// Linear sequences ending in `1` with `c_i <= c_{i+1} + 1`; `min_entry` is
/// 2 for connected algebras and 1 for products.
fn linear_search(n: usize, min_entry: usize) -> impl Iterator<Item = Vec<usize>> {
    Search::new(
        n,
        move |prefix: &[usize], i: usize| {
            if i + 1 == n {
                return (1, 1);
            }
            let lo = prefix.last().map_or(min_entry, |&c| min_entry.max(c.saturating_sub(1)));
            (lo, n - i)
        },
        all,
    )
}

/// Connected linear series with `n` simples, `C_{n-1}` of them.
pub fn enumerate_connected_linear(n: usize) -> impl Iterator<Item = KupischSeries> {
    linear_search(n, 2)
        .filter(|c| !c.is_empty())
        .map(|c| KupischSeries::linear(c).expect("connected linear"))
}

/// Ordered products of connected linear series with `n` simples in total.
pub fn enumerate_linear_products(n: usize) -> impl Iterator<Item = KupischSeries> {
    linear_search(n, 1)
        .filter(|c| !c.is_empty())
        .map(|c| KupischSeries::linear(c).expect("linear product"))
}

fn cyclic_search(n: usize, max_entry: usize, canonical: bool) -> impl Iterator<Item = Vec<usize>> {
    Search::new(
        n,
        move |prefix: &[usize], i: usize| {
            let Some(&first) = prefix.first() else {
                return (2, max_entry);
            };
            let mut lo = prefix[i - 1].saturating_sub(1).max(2);
            if canonical {
                // A smallest rotation starts with a smallest entry.
                lo = lo.max(first);
            }
            let hi = if i + 1 == n { max_entry.min(first + 1) } else { max_entry };
            (lo, hi)
        },
        move |c: &[usize]| !canonical || is_canonical_rotation(c),
    )
}

/// One representative (the smallest rotation) per rotation class of cyclic
/// series with `n` simples and entries at most `max_entry`.
pub fn enumerate_cyclic(n: usize, max_entry: usize) -> impl Iterator<Item = KupischSeries> {
    cyclic_search(n, max_entry, true)
        .filter(|c| !c.is_empty())
        .map(|c| KupischSeries::cyclic(c).expect("cyclic"))
}

/// Every cyclic series, rotations counted separately.
pub fn enumerate_cyclic_raw(n: usize, max_entry: usize) -> impl Iterator<Item = KupischSeries> {
    cyclic_search(n, max_entry, false)
        .filter(|c| !c.is_empty())
        .map(|c| KupischSeries::cyclic(c).expect("cyclic"))
}

/// Rotation classes of cyclic algebras of finite global dimension. Their
/// Loewy length is at most `2n - 1`, so that bound loses nothing.
pub fn enumerate_cyclic_finite_gldim(n: usize) -> impl Iterator<Item = KupischSeries> {
    enumerate_cyclic(n, (2 * n).saturating_sub(1))
        .filter(|a| finite_gldim_via_quiver(a).expect("cyclic input"))
}

/// Magnitude-one algebras with `n` simples: one per rotation class of
/// cyclic ones, plus the linear `[n, n-1, ..., 1]`.
pub fn enumerate_m1(n: usize) -> impl Iterator<Item = KupischSeries> {
    let staircase = KupischSeries::linear((1..=n).rev().collect()).ok();
    enumerate_cyclic_finite_gldim(n)
        .filter(|a| m1_characterizations(a)[0])
        .chain(staircase)
}

/// Dyck paths of the given semilength, generated step by step with `U < D`.
pub fn enumerate_dyck_paths(semilength: usize) -> impl Iterator<Item = DyckPath> {
    let len = 2 * semilength;
    Search::new(
        len,
        move |prefix: &[usize], i: usize| {
            let up = prefix.iter().filter(|&&s| s == 0).count();
            let height = 2 * up - i;
            let can_rise = up < semilength;
            let can_fall = height > 0;
            (usize::from(!can_rise), usize::from(can_fall))
        },
        all,
    )
    .map(|word| {
        DyckPath::new(
            word.into_iter()
                .map(|s| if s == 0 { Step::Up } else { Step::Down })
                .collect(),
        )
        .expect("generator keeps paths valid")
    })
}

/// Ordered trees with `vertices` vertices, via their pre-order paths.
pub fn enumerate_ordered_trees(vertices: usize) -> impl Iterator<Item = OrderedTree> {
    enumerate_dyck_paths(vertices.saturating_sub(1)).map(|d| OrderedTree::from_dyck(&d))
}

/// Value counts of a statistic over a finite family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Distribution {
    pub statistic: String,
    pub n: usize,
    pub counts: BTreeMap<usize, u64>,
    pub total: u64,
}

impl Distribution {
    pub fn from_values(statistic: &str, n: usize, values: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = BTreeMap::new();
        let mut total = 0;
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
            total += 1;
        }
        Distribution {
            statistic: statistic.to_string(),
            n,
            counts,
            total,
        }
    }

    pub fn count(&self, value: usize) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    /// Number of objects with statistic at most `bound`.
    pub fn at_most(&self, bound: usize) -> u64 {
        self.counts.range(..=bound).map(|(_, &c)| c).sum()
    }

    pub fn same_counts(&self, other: &Distribution) -> bool {
        self.counts == other.counts
    }
}

/// Global dimension over connected linear algebras with `n` simples.
pub fn gldim_distribution(n: usize) -> Distribution {
    Distribution::from_values(
        "gldim",
        n,
        enumerate_connected_linear(n).map(|a| a.global_dimension().finite().expect("linear")),
    )
}

/// Height over Dyck paths of semilength `n - 1`.
pub fn height_distribution(n: usize) -> Distribution {
    Distribution::from_values("height", n, enumerate_dyck_paths(n.saturating_sub(1)).map(|d| d.height()))
}

/// Bounce count over Dyck paths of semilength `n - 1`.
pub fn bounce_distribution(n: usize) -> Distribution {
    Distribution::from_values(
        "bounce",
        n,
        enumerate_dyck_paths(n.saturating_sub(1)).map(|d| d.bounce_count()),
    )
}

/// Global dimension over rotation classes of cyclic algebras of finite
/// global dimension.
pub fn cyclic_gldim_distribution(n: usize) -> Distribution {
    Distribution::from_values(
        "cyclic_gldim",
        n,
        enumerate_cyclic_finite_gldim(n).map(|a| a.global_dimension().finite().expect("filtered")),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidistributionReport {
    pub n: usize,
    pub gldim: Distribution,
    pub height: Distribution,
    /// The two count maps coincide.
    pub equal: bool,
    /// `|A(n,g)| - |A(n,g-1)| = |D(n-1,g-1)| - |D(n-1,g-2)|` for every `g`,
    /// with `A(n,g)` the connected algebras of `gldim <= g` and `D(m,g)` the
    /// paths of semilength `m` and height at most `g + 1`.
    pub refined_identity: bool,
}

impl EquidistributionReport {
    pub fn passed(&self) -> bool {
        self.equal && self.refined_identity
    }
}

pub fn verify_equidistribution(n: usize) -> EquidistributionReport {
    let gldim = gldim_distribution(n);
    let height = height_distribution(n);
    let top = gldim.counts.keys().chain(height.counts.keys()).max().copied().unwrap_or(0) + 2;
    let algebras_upto = |g: i64| if g < 0 { 0 } else { gldim.at_most(g as usize) };
    let paths_upto = |g: i64| if g + 1 < 0 { 0 } else { height.at_most((g + 1) as usize) };
    let refined_identity = (0..=top as i64)
        .all(|g| algebras_upto(g) - algebras_upto(g - 1) == paths_upto(g - 1) - paths_upto(g - 2));
    EquidistributionReport {
        n,
        equal: gldim.same_counts(&height),
        gldim,
        height,
        refined_identity,
    }
}

/// `|{A linear product with n simples : gldim A <= g}|`.
pub fn count_bounded_products(n: usize, g: usize) -> u64 {
    enumerate_linear_products(n)
        .filter(|a| a.global_dimension().finite().expect("linear") <= g)
        .count() as u64
}

/// `|{D of semilength n : height D <= g + 1}|`.
pub fn count_bounded_paths(n: usize, g: usize) -> u64 {
    enumerate_dyck_paths(n).filter(|d| d.height() <= g + 1).count() as u64
}

/// Rotation classes and raw counts of cyclic algebras of finite global
/// dimension with `n` simples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyclicCounts {
    pub n: usize,
    pub classes: u64,
    pub raw: u64,
}

pub fn cyclic_finite_gldim_counts(n: usize) -> CyclicCounts {
    let max_entry = (2 * n).saturating_sub(1);
    let finite = |a: &KupischSeries| finite_gldim_via_quiver(a).expect("cyclic input");
    CyclicCounts {
        n,
        classes: enumerate_cyclic(n, max_entry).filter(|a| finite(a)).count() as u64,
        raw: enumerate_cyclic_raw(n, max_entry).filter(|a| finite(a)).count() as u64,
    }
}
