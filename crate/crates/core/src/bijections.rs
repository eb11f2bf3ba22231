//! Explicit maps between Nakayama algebras and Dyck paths.
//!
//! * connected linear algebras with `n` simples and paths of semilength
//!   `n - 1` (the Kupisch series is the area sequence);
//! * magnitude-one algebras with `n` simples and paths of semilength `n`;
//! * sincere algebras of finite global dimension with `n` simples and paths
//!   of semilength `n - 1`, with `gldim = 2 * bounce count`;
//! * linear products with `n` simples and `gldim <= g` and paths of
//!   semilength `n` and height at most `g + 1`, through ordered trees.

use serde::Serialize;

use crate::cartan::{magnitude, Rational};
use crate::dyck::{BoundedDecomposition, DyckPath};
use crate::error::{Error, Result};
use crate::kupisch::{KupischSeries, SeriesClass};
use crate::trees::{tau, tau_inverse, OrderedTree};

/// Lexicographically smallest rotation of a cyclic series, and the smallest
/// shift producing it: `representative[i] = A[(i + shift) % n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RotationClass {
    pub representative: KupischSeries,
    pub shift: usize,
}

pub fn canonical_rotation(a: &KupischSeries) -> Result<RotationClass> {
    if !a.is_cyclic() {
        return Err(Error::WrongKind { expected: "cyclic" });
    }
    let c = a.entries();
    let n = c.len();
    let shift = (0..n)
        .min_by(|&s, &t| (0..n).map(|i| c[(i + s) % n]).cmp((0..n).map(|i| c[(i + t) % n])))
        .expect("n >= 1");
    Ok(RotationClass {
        representative: a.rotated(shift)?,
        shift,
    })
}

/// True when no other rotation is lexicographically smaller.
pub fn is_canonical_rotation(entries: &[usize]) -> bool {
    let n = entries.len();
    (1..n).all(|s| {
        let rotated = (0..n).map(|i| entries[(i + s) % n]);
        entries.iter().copied().cmp(rotated) != std::cmp::Ordering::Greater
    })
}

pub fn linear_to_dyck(a: &KupischSeries) -> Result<DyckPath> {
    if a.class() != SeriesClass::ConnectedLinear {
        return Err(Error::WrongKind {
            expected: "connected linear",
        });
    }
    DyckPath::from_area(a.entries())
}

pub fn dyck_to_linear(d: &DyckPath) -> KupischSeries {
    KupischSeries::linear(d.area_sequence()).expect("area sequences are connected linear series")
}

fn unique_position(entries: &[usize], value: usize) -> Option<usize> {
    let mut hits = entries.iter().enumerate().filter(|&(_, &c)| c == value);
    match (hits.next(), hits.next()) {
        (Some((i, _)), None) => Some(i),
        _ => None,
    }
}

/// Rotates a cyclic series so its unique entry `n` comes first.
fn rotate_to_unique_n(a: &KupischSeries) -> Option<KupischSeries> {
    let n = a.len();
    let pos = unique_position(a.entries(), n)?;
    if a.is_cyclic() {
        a.rotated(pos).ok()
    } else {
        Some(a.clone())
    }
}

/// With `c_0 = n` and `k` the largest index with `c_k <= n`:
/// `c'_i = n + 2 - c_{k-i}` for `i <= k`, `c'_i = c_i - n + 1` for
/// `k < i < n`, and `c'_n = 1`.
pub fn m1_to_dyck(a: &KupischSeries) -> Result<DyckPath> {
    let n = a.len();
    let rotated = rotate_to_unique_n(a)
        .ok_or_else(|| Error::NotM1(format!("{a} does not have exactly one entry equal to {n}")))?;
    let c = rotated.entries();
    let k = (0..n).rev().find(|&i| c[i] <= n).expect("c_0 = n");
    let mut area = Vec::with_capacity(n + 1);
    for i in 0..=k {
        let v = (n + 2)
            .checked_sub(c[k - i])
            .ok_or_else(|| Error::NotM1(format!("{a}: entry {} too large", c[k - i])))?;
        area.push(v);
    }
    area.extend(c[k + 1..].iter().map(|&ci| ci + 1 - n));
    area.push(1);
    DyckPath::from_area(&area).map_err(|e| Error::NotM1(format!("{a}: {e}")))
}

/// Inverse of [`m1_to_dyck`], with `k` the smallest index with `c'_k = 2`:
/// `c_i = n + 2 - c'_{k-i}` for `i <= k` and `c_i = c'_i + n - 1` beyond.
/// The path `U^n D^n` gives the linear series `[n, n-1, ..., 1]`.
pub fn dyck_to_m1(d: &DyckPath) -> Result<KupischSeries> {
    let n = d.semilength();
    if n == 0 {
        return Err(Error::NotM1("the empty path has no magnitude-one partner".into()));
    }
    let area = d.area_sequence();
    let k = area.iter().position(|&c| c == 2).expect("c'_{n-1} = 2");
    let mut c = Vec::with_capacity(n);
    for i in 0..=k {
        c.push(n + 2 - area[k - i]);
    }
    c.extend(area[k + 1..n].iter().map(|&ci| ci + n - 1));
    KupischSeries::new(c)
}

/// The three equivalent descriptions of magnitude-one cyclic algebras:
/// finite global dimension with magnitude one, a unique projective of
/// dimension `n`, and finite global dimension with Loewy length at least `n`.
pub fn m1_characterizations(a: &KupischSeries) -> [bool; 3] {
    let n = a.len();
    let finite = a.global_dimension().is_finite();
    let magnitude_one = finite && magnitude(a).is_ok_and(|m| m == Rational::from_integer(1));
    let unique_n = unique_position(a.entries(), n).is_some();
    let loewy = finite && a.loewy_length() >= n;
    [magnitude_one, unique_n, loewy]
}

fn check_sincere_finite(a: &KupischSeries) -> Result<KupischSeries> {
    let n = a.len();
    if !a.is_cyclic() || n < 2 {
        return Err(Error::NotSincereFinite(format!("{a} is not cyclic with at least two simples")));
    }
    if !a.is_sincere() {
        return Err(Error::NotSincereFinite(format!("{a} is not sincere")));
    }
    if !a.global_dimension().is_finite() {
        return Err(Error::NotSincereFinite(format!("{a} has infinite global dimension")));
    }
    rotate_to_unique_n(a)
        .ok_or_else(|| Error::NotSincereFinite(format!("{a} does not have exactly one entry equal to {n}")))
}

/// With `c_0 = n`, the area sequence `[c_1 - n + 1, ..., c_{n-1} - n + 1, 1]`.
pub fn sincere_to_dyck(a: &KupischSeries) -> Result<DyckPath> {
    let rotated = check_sincere_finite(a)?;
    let n = rotated.len();
    let mut area: Vec<usize> = rotated.entries()[1..].iter().map(|&c| c + 1 - n).collect();
    area.push(1);
    DyckPath::from_area(&area).map_err(|e| Error::NotSincereFinite(format!("{a}: {e}")))
}

/// `c_0 = n = semilength + 1` followed by `a_i + n - 1` for the area entries
/// `a_0, ..., a_{n-2}`.
pub fn dyck_to_sincere(d: &DyckPath) -> Result<KupischSeries> {
    if d.semilength() == 0 {
        return Err(Error::NotSincereFinite(
            "sincere algebras of finite global dimension need at least two simples".into(),
        ));
    }
    let n = d.semilength() + 1;
    let area = d.area_sequence();
    let mut c = Vec::with_capacity(n);
    c.push(n);
    c.extend(area[..n - 1].iter().map(|&x| x + n - 1));
    KupischSeries::cyclic(c)
}

/// `2 * bounce count` of the associated path.
pub fn sincere_gldim(a: &KupischSeries) -> Result<usize> {
    Ok(2 * sincere_to_dyck(a)?.bounce_count())
}

fn map_parts<T, U>(parts: BoundedDecomposition<T>, f: impl Fn(&T) -> U) -> BoundedDecomposition<U> {
    BoundedDecomposition {
        left: parts.left.iter().map(&f).collect(),
        right: parts.right.iter().map(&f).collect(),
        middle: f(&parts.middle),
    }
}

/// Linear product with `n` simples and `gldim <= g` to a path of semilength
/// `n` and height at most `g + 1`: decompose the ordered tree of the
/// algebra, turn every piece into a path, and reassemble.
pub fn bounded_product_to_dyck(a: &KupischSeries, g: usize) -> Result<DyckPath> {
    let tree = tau(a)?.forget_labels()?;
    let parts = tree.decompose_bounded(g)?;
    DyckPath::recompose_bounded(&map_parts(parts, OrderedTree::to_dyck), g)
}

/// Inverse of [`bounded_product_to_dyck`].
pub fn dyck_to_bounded_product(d: &DyckPath, g: usize) -> Result<KupischSeries> {
    if d.semilength() == 0 {
        return Err(Error::InvalidPath("the empty path has no algebra".into()));
    }
    let parts = d.decompose_bounded(g)?;
    let tree = OrderedTree::recompose_bounded(&map_parts(parts, OrderedTree::from_dyck), g)?;
    tau_inverse(&tree.natural_labeling())
}
