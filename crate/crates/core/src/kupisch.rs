//! Nakayama algebras given by their Kupisch series, and the homological
//! computations that reduce to arithmetic on uniserial modules.
//!
//! Every indecomposable module over a Nakayama algebra is uniserial, of the
//! form `b(i,k) = e_i A / e_i J^k` with `1 <= k <= c_i`. The syzygy of such a
//! module is again uniserial,
//!
//! ```text
//! Ω b(i,k) = b(i+k, c_i - k)        (zero when k = c_i),
//! ```
//!
//! so projective and global dimensions are computed by iterating this map.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Which family a raw integer sequence belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesClass {
    ConnectedLinear,
    LinearProduct,
    Cyclic,
    Invalid,
}

impl fmt::Display for SeriesClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesClass::ConnectedLinear => "connected linear",
            SeriesClass::LinearProduct => "linear product",
            SeriesClass::Cyclic => "cyclic",
            SeriesClass::Invalid => "invalid",
        };
        f.write_str(s)
    }
}

/// Classify an integer sequence as a Kupisch series.
///
/// A sequence containing a `1` can only be linear: it must be a concatenation
/// of connected blocks, each ending in its unique `1`, with
/// `c_i <= c_{i+1} + 1` throughout. A sequence without a `1` can only be
/// cyclic, with `c_i <= c_{i+1 mod n} + 1` and every `c_i >= 2`.
pub fn classify_series(entries: &[usize]) -> SeriesClass {
    let n = entries.len();
    if n == 0 || entries.contains(&0) {
        return SeriesClass::Invalid;
    }
    let ones = entries.iter().filter(|&&c| c == 1).count();
    if ones > 0 {
        let descends = entries.windows(2).all(|w| w[0] <= w[1] + 1);
        if entries[n - 1] != 1 || !descends {
            SeriesClass::Invalid
        } else if ones == 1 {
            SeriesClass::ConnectedLinear
        } else {
            SeriesClass::LinearProduct
        }
    } else {
        let cyclic = (0..n).all(|i| entries[i] <= entries[(i + 1) % n] + 1);
        if cyclic {
            SeriesClass::Cyclic
        } else {
            SeriesClass::Invalid
        }
    }
}

/// Linear algebras may be disconnected (ordered products of connected blocks).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Linear,
    Cyclic,
}

/// Projective, injective or global dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomDim {
    Finite(usize),
    Infinite,
}

impl HomDim {
    pub fn is_finite(self) -> bool {
        matches!(self, HomDim::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(d) => Some(d),
            HomDim::Infinite => None,
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(d) => write!(f, "{d}"),
            HomDim::Infinite => f.write_str("∞"),
        }
    }
}

impl Serialize for HomDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomDim::Finite(d) => serializer.serialize_u64(*d as u64),
            HomDim::Infinite => serializer.serialize_str("infinite"),
        }
    }
}

/// The uniserial module `b(vertex, length) = e_vertex A / e_vertex J^length`.
///
/// Length zero denotes the zero module; its vertex is normalized to `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Uniserial {
    pub vertex: usize,
    pub length: usize,
}

impl Uniserial {
    pub const ZERO: Uniserial = Uniserial { vertex: 0, length: 0 };

    pub fn is_zero(self) -> bool {
        self.length == 0
    }
}

impl fmt::Display for Uniserial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "b({},{})", self.vertex, self.length)
        }
    }
}

/// Minimal projective resolution of an indecomposable module.
///
/// `tops[k]` is the vertex `j` with `P_k = e_j A`; every term of a minimal
/// resolution over a Nakayama algebra is zero or indecomposable. For infinite
/// projective dimension the list stops just before the first repeated syzygy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub tops: Vec<usize>,
    pub pdim: HomDim,
}

/// Kupisch series `[c_0, ..., c_{n-1}]` of a Nakayama algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KupischSeries {
    entries: Vec<usize>,
    kind: Kind,
}

impl KupischSeries {
    /// Build a series, inferring its kind from the entries.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let kind = match classify_series(&entries) {
            SeriesClass::ConnectedLinear | SeriesClass::LinearProduct => Kind::Linear,
            SeriesClass::Cyclic => Kind::Cyclic,
            SeriesClass::Invalid => return Err(Error::InvalidSeries(format_entries(&entries))),
        };
        Ok(KupischSeries { entries, kind })
    }

    pub fn linear(entries: Vec<usize>) -> Result<Self> {
        let series = Self::new(entries)?;
        if series.kind != Kind::Linear {
            return Err(Error::WrongKind { expected: "linear" });
        }
        Ok(series)
    }

    pub fn cyclic(entries: Vec<usize>) -> Result<Self> {
        let series = Self::new(entries)?;
        if series.kind != Kind::Cyclic {
            return Err(Error::WrongKind { expected: "cyclic" });
        }
        Ok(series)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<usize> {
        self.entries
    }

    /// Number of simple modules.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_cyclic(&self) -> bool {
        self.kind == Kind::Cyclic
    }

    pub fn is_linear(&self) -> bool {
        self.kind == Kind::Linear
    }

    /// Cyclic algebras are connected; linear ones iff they have a single `1`.
    pub fn is_connected(&self) -> bool {
        match self.kind {
            Kind::Cyclic => true,
            Kind::Linear => self.entries.iter().filter(|&&c| c == 1).count() == 1,
        }
    }

    pub fn class(&self) -> SeriesClass {
        match self.kind {
            Kind::Cyclic => SeriesClass::Cyclic,
            Kind::Linear if self.is_connected() => SeriesClass::ConnectedLinear,
            Kind::Linear => SeriesClass::LinearProduct,
        }
    }

    /// `c_i`, with indices read modulo `n` for cyclic algebras.
    pub fn c(&self, i: usize) -> usize {
        match self.kind {
            Kind::Cyclic => self.entries[i % self.entries.len()],
            Kind::Linear => self.entries[i],
        }
    }

    pub fn loewy_length(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Total dimension, `sum c_i`.
    pub fn dimension(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Connected blocks of a linear product, in order. A cyclic series is
    /// its own single block.
    pub fn blocks(&self) -> Vec<KupischSeries> {
        if self.is_cyclic() {
            return vec![self.clone()];
        }
        self.entries
            .split_inclusive(|&c| c == 1)
            .map(|block| KupischSeries {
                entries: block.to_vec(),
                kind: Kind::Linear,
            })
            .collect()
    }

    fn reduce(&self, vertex: usize) -> usize {
        match self.kind {
            Kind::Cyclic => vertex % self.len(),
            Kind::Linear => vertex,
        }
    }

    fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex >= self.len() {
            return Err(Error::VertexOutOfRange {
                vertex,
                size: self.len(),
            });
        }
        Ok(())
    }

    fn check_module(&self, m: Uniserial) -> Result<()> {
        if m.is_zero() {
            return Err(Error::ZeroModule);
        }
        if m.vertex >= self.len() || m.length > self.entries[m.vertex] {
            return Err(Error::InvalidModule {
                vertex: m.vertex,
                length: m.length,
            });
        }
        Ok(())
    }

    /// `b(i,k)`, validated against `1 <= k <= c_i`.
    pub fn module(&self, vertex: usize, length: usize) -> Result<Uniserial> {
        let m = Uniserial { vertex, length };
        self.check_module(m)?;
        Ok(m)
    }

    pub fn simple(&self, i: usize) -> Result<Uniserial> {
        self.module(i, 1)
    }

    pub fn projective(&self, i: usize) -> Result<Uniserial> {
        self.check_vertex(i)?;
        Ok(Uniserial {
            vertex: i,
            length: self.entries[i],
        })
    }

    /// All indecomposable modules, ordered by vertex then length.
    pub fn indecomposables(&self) -> impl Iterator<Item = Uniserial> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(vertex, &c)| (1..=c).map(move |length| Uniserial { vertex, length }))
    }

    pub fn is_projective(&self, m: Uniserial) -> bool {
        !m.is_zero() && m.length == self.entries[m.vertex]
    }

    /// First syzygy; the zero module when `m` is projective.
    pub fn syzygy(&self, m: Uniserial) -> Result<Uniserial> {
        self.check_module(m)?;
        Ok(self.syzygy_unchecked(m))
    }

    fn syzygy_unchecked(&self, m: Uniserial) -> Uniserial {
        let c = self.entries[m.vertex];
        if m.length == c {
            Uniserial::ZERO
        } else {
            Uniserial {
                vertex: self.reduce(m.vertex + m.length),
                length: c - m.length,
            }
        }
    }

    /// Walks the syzygy orbit of `m`, stopping at the first projective or
    /// at the first revisited state.
    fn orbit(&self, m: Uniserial) -> Resolution {
        let width = self.loewy_length() + 1;
        let mut seen = vec![false; self.len() * width];
        let cap = self.len() * self.loewy_length() + 1;
        let mut tops = Vec::new();
        let mut current = m;
        loop {
            tops.push(current.vertex);
            if self.is_projective(current) {
                let pdim = tops.len() - 1;
                return Resolution {
                    tops,
                    pdim: HomDim::Finite(pdim),
                };
            }
            let slot = current.vertex * width + current.length;
            if seen[slot] || tops.len() > cap {
                tops.pop();
                return Resolution {
                    tops,
                    pdim: HomDim::Infinite,
                };
            }
            seen[slot] = true;
            current = self.syzygy_unchecked(current);
        }
    }

    pub fn minimal_resolution(&self, m: Uniserial) -> Result<Resolution> {
        self.check_module(m)?;
        Ok(self.orbit(m))
    }

    pub fn projective_dimension(&self, m: Uniserial) -> Result<HomDim> {
        self.check_module(m)?;
        Ok(self.orbit(m).pdim)
    }

    /// `pdim S_i` for every simple, indexed by vertex.
    pub fn simple_projective_dimensions(&self) -> Vec<HomDim> {
        (0..self.len())
            .map(|i| self.orbit(Uniserial { vertex: i, length: 1 }).pdim)
            .collect()
    }

    /// Supremum of the projective dimensions of the simples.
    pub fn global_dimension(&self) -> HomDim {
        self.simple_projective_dimensions()
            .into_iter()
            .max()
            .unwrap_or(HomDim::Finite(0))
    }

    /// `d_i = min { k >= 1 : k >= c_{i-k} }`. For linear algebras an index
    /// below zero names no vertex and counts as `c = 0`.
    pub fn cokupisch(&self) -> Vec<usize> {
        let n = self.len() as i64;
        (0..n)
            .map(|i| {
                (1..)
                    .find(|&k: &usize| {
                        let j = i - k as i64;
                        let c = match self.kind {
                            Kind::Cyclic => self.entries[j.rem_euclid(n) as usize],
                            Kind::Linear if j < 0 => 0,
                            Kind::Linear => self.entries[j as usize],
                        };
                        k >= c
                    })
                    .expect("k = Loewy length always qualifies")
            })
            .collect()
    }

    /// Kupisch series of the opposite algebra.
    ///
    /// Reversing the arrows and relabeling vertex `i` as `-i mod n` (cyclic)
    /// or `n-1-i` (linear) restores the standard orientation, so
    /// `opposite()[j] = d_{-j}` resp. `d_{n-1-j}`.
    pub fn opposite(&self) -> KupischSeries {
        let d = self.cokupisch();
        let n = d.len();
        let entries = match self.kind {
            Kind::Cyclic => (0..n).map(|j| d[(n - j) % n]).collect(),
            Kind::Linear => d.into_iter().rev().collect(),
        };
        KupischSeries {
            entries,
            kind: self.kind,
        }
    }

    /// The indecomposable injective `D(A e_i) = b(i+1-d_i, d_i)`.
    pub fn injective(&self, i: usize) -> Result<Uniserial> {
        self.check_vertex(i)?;
        let d = self.cokupisch()[i];
        let n = self.len();
        let vertex = match self.kind {
            Kind::Cyclic => (i + 1 + n * d - d) % n,
            Kind::Linear => i + 1 - d,
        };
        Ok(Uniserial { vertex, length: d })
    }

    /// `dim Ext^k(S_i, S_j)`: one if the `k`-th term of the minimal
    /// resolution of `S_i` is `e_j A`, zero otherwise.
    pub fn ext_dimension(&self, i: usize, j: usize, k: usize) -> Result<usize> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        let mut m = Uniserial { vertex: i, length: 1 };
        for _ in 0..k {
            if m.is_zero() {
                return Ok(0);
            }
            m = self.syzygy_unchecked(m);
        }
        Ok(usize::from(!m.is_zero() && m.vertex == j))
    }

    /// The simples `i, i+1, ..., i+k-1` (mod `n` when cyclic) of `b(i,k)`,
    /// from top to socle.
    pub fn composition_factors(&self, m: Uniserial) -> Result<Vec<usize>> {
        self.check_module(m)?;
        Ok((0..m.length).map(|t| self.reduce(m.vertex + t)).collect())
    }

    /// Every indecomposable projective contains every simple as a
    /// composition factor.
    pub fn is_sincere(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            let mut hit = vec![false; n];
            let top = Uniserial {
                vertex: i,
                length: self.entries[i],
            };
            for s in self.composition_factors(top).expect("projective is valid") {
                hit[s] = true;
            }
            hit.into_iter().all(|h| h)
        })
    }

    /// The rotation `[c_s, c_{s+1}, ..., c_{s-1}]` of a cyclic series.
    pub fn rotated(&self, shift: usize) -> Result<KupischSeries> {
        if !self.is_cyclic() {
            return Err(Error::WrongKind { expected: "cyclic" });
        }
        let mut entries = self.entries.clone();
        entries.rotate_left(shift % self.len());
        Ok(KupischSeries {
            entries,
            kind: Kind::Cyclic,
        })
    }
}

fn format_entries(entries: &[usize]) -> String {
    let parts: Vec<String> = entries.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_cyclic() {
            f.write_str("cyclic:")?;
        }
        f.write_str(&format_entries(&self.entries))
    }
}

/// Parse a bracketed, comma-separated list of non-negative integers.
pub fn parse_int_list(text: &str) -> Result<Vec<usize>> {
    let body = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected `[c0,c1,...]`, got `{}`", text.trim())))?;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{}` is not a non-negative integer", part.trim())))
        })
        .collect()
}

impl FromStr for KupischSeries {
    type Err = Error;

    /// Accepts `[3,4,4,3,2,1]`, `cyclic:[3,3,3,4]` and `linear:[2,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("cyclic:") {
            KupischSeries::cyclic(parse_int_list(rest)?)
        } else if let Some(rest) = s.strip_prefix("linear:") {
            KupischSeries::linear(parse_int_list(rest)?)
        } else {
            KupischSeries::new(parse_int_list(s)?)
        }
    }
}

impl Serialize for KupischSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(s: &str) -> KupischSeries {
        s.parse().unwrap()
    }

    fn b(vertex: usize, length: usize) -> Uniserial {
        Uniserial { vertex, length }
    }

    #[test]
    fn classification() {
        assert_eq!(classify_series(&[3, 4, 4, 3, 2, 1]), SeriesClass::ConnectedLinear);
        assert_eq!(classify_series(&[3, 3, 3, 4]), SeriesClass::Cyclic);
        assert_eq!(classify_series(&[1]), SeriesClass::ConnectedLinear);
        assert_eq!(classify_series(&[3, 1, 2]), SeriesClass::Invalid);
        assert_eq!(classify_series(&[2, 1, 1]), SeriesClass::LinearProduct);
        assert_eq!(classify_series(&[2, 1, 2]), SeriesClass::Invalid);
        assert_eq!(classify_series(&[]), SeriesClass::Invalid);
        assert_eq!(classify_series(&[0]), SeriesClass::Invalid);
        assert_eq!(classify_series(&[5, 2]), SeriesClass::Invalid);
        assert_eq!(classify_series(&[2]), SeriesClass::Cyclic);
    }

    #[test]
    fn parsing_and_display() {
        let a = series("cyclic:[3,3,3,4]");
        assert_eq!(a.to_string(), "cyclic:[3,3,3,4]");
        assert_eq!(series("[ 3, 3,3,4 ]"), a);
        assert_eq!(series("[3,4,4,3,2,1]").to_string(), "[3,4,4,3,2,1]");
        assert!(matches!("cyclic:[2,1]".parse::<KupischSeries>(), Err(Error::WrongKind { .. })));
        assert!(matches!("linear:[2,2]".parse::<KupischSeries>(), Err(Error::WrongKind { .. })));
        assert!(matches!("[3,1,2]".parse::<KupischSeries>(), Err(Error::InvalidSeries(_))));
        assert!(matches!("3,1".parse::<KupischSeries>(), Err(Error::Parse(_))));
        assert!(matches!("[a]".parse::<KupischSeries>(), Err(Error::Parse(_))));
        assert!(matches!("[-1]".parse::<KupischSeries>(), Err(Error::Parse(_))));
    }

    #[test]
    fn loewy_length() {
        assert_eq!(series("[3,4,4,3,2,1]").loewy_length(), 4);
        assert_eq!(series("cyclic:[7]").loewy_length(), 7);
        assert_eq!(series("[12,14,16,16,16,15,14,15,14,14,14,13]").loewy_length(), 16);
    }

    #[test]
    fn syzygies() {
        let a = series("[3,4,4,3,2,1]");
        assert_eq!(a.syzygy(b(0, 1)).unwrap(), b(1, 2));
        assert_eq!(a.syzygy(b(1, 2)).unwrap(), b(3, 2));
        assert_eq!(a.syzygy(b(3, 2)).unwrap(), b(5, 1));
        assert_eq!(a.syzygy(b(5, 1)).unwrap(), Uniserial::ZERO);
        for i in 0..a.len() {
            assert!(a.syzygy(a.projective(i).unwrap()).unwrap().is_zero());
        }
        let cyc = series("[6,8,9,9,8,7]");
        assert_eq!(cyc.syzygy(b(0, 1)).unwrap(), b(1, 5));
        assert_eq!(a.syzygy(Uniserial::ZERO), Err(Error::ZeroModule));
        assert!(matches!(a.syzygy(b(0, 4)), Err(Error::InvalidModule { .. })));
    }

    #[test]
    fn projective_dimensions() {
        let a = series("[3,4,4,3,2,1]");
        assert_eq!(a.projective_dimension(b(0, 1)).unwrap(), HomDim::Finite(3));
        assert_eq!(a.projective_dimension(b(2, 4)).unwrap(), HomDim::Finite(0));
        let two = series("cyclic:[2,2]");
        assert_eq!(two.projective_dimension(b(0, 1)).unwrap(), HomDim::Infinite);
        let sincere = series("[6,8,9,9,8,7]");
        assert_eq!(sincere.projective_dimension(b(0, 1)).unwrap(), HomDim::Finite(4));
        let res = sincere.minimal_resolution(b(0, 1)).unwrap();
        assert_eq!(res.tops, vec![0, 1, 0, 3, 0]);
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(series("[3,4,4,3,2,1]").global_dimension(), HomDim::Finite(3));
        assert_eq!(series("[3,3,3,4]").global_dimension(), HomDim::Finite(5));
        assert_eq!(series("[1]").global_dimension(), HomDim::Finite(0));
        assert_eq!(series("[6,8,9,9,8,7]").global_dimension(), HomDim::Finite(4));
        assert_eq!(series("cyclic:[3]").global_dimension(), HomDim::Infinite);
        assert_eq!(series("[2,1,1]").global_dimension(), HomDim::Finite(1));
    }

    /// Largest length `k` with `b(j,k)` existing and socle at `i`, found by
    /// scanning every indecomposable.
    fn injective_dimensions_by_socle(a: &KupischSeries) -> Vec<usize> {
        let mut best = vec![0; a.len()];
        for m in a.indecomposables() {
            let socle = *a.composition_factors(m).unwrap().last().unwrap();
            best[socle] = best[socle].max(m.length);
        }
        best
    }

    #[test]
    fn cokupisch_values() {
        assert_eq!(series("[1]").cokupisch(), vec![1]);
        assert_eq!(series("[2,1]").cokupisch(), vec![1, 2]);
        let a = series("[3,3,3,4]");
        assert_eq!(injective_dimensions_by_socle(&a), vec![3, 3, 4, 3]);
        assert_eq!(a.cokupisch(), vec![3, 3, 4, 3]);
        assert_eq!(series("[3,4,4,3,2,1]").cokupisch(), vec![1, 2, 3, 3, 4, 4]);
    }

    #[test]
    fn injectives() {
        assert_eq!(series("[2,1]").injective(1).unwrap(), b(0, 2));
        assert_eq!(series("[1]").injective(0).unwrap(), b(0, 1));
        let a = series("[3,3,3,4]");
        assert_eq!(a.injective(3).unwrap(), b(1, 3));
        assert_eq!(a.injective(2).unwrap(), b(3, 4));
        assert!(matches!(a.injective(4), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn opposite_is_an_involution_on_examples() {
        for s in ["[3,4,4,3,2,1]", "[3,3,3,4]", "[2,1,1]", "[6,8,9,9,8,7]", "cyclic:[2]"] {
            let a = series(s);
            assert_eq!(a.opposite().opposite(), a, "{s}");
            assert_eq!(a.opposite().dimension(), a.dimension());
        }
        assert_eq!(series("[3,4,4,3,2,1]").opposite(), series("[4,4,3,3,2,1]"));
    }

    #[test]
    fn ext_dimensions() {
        let a = series("[3,4,4,3,2,1]");
        assert_eq!(a.ext_dimension(0, 1, 1).unwrap(), 1);
        assert_eq!(a.ext_dimension(0, 0, 0).unwrap(), 1);
        assert_eq!(a.ext_dimension(0, 2, 1).unwrap(), 0);
        assert_eq!(a.ext_dimension(0, 5, 3).unwrap(), 1);
        assert_eq!(a.ext_dimension(0, 0, 4).unwrap(), 0);
        assert_eq!(a.ext_dimension(0, 0, 40).unwrap(), 0);
    }

    #[test]
    fn composition_factors_wrap() {
        let a = series("[3,4,4,3,2,1]");
        assert_eq!(a.composition_factors(b(0, 1)).unwrap(), vec![0]);
        assert_eq!(a.composition_factors(b(1, 3)).unwrap(), vec![1, 2, 3]);
        let c = series("[6,8,9,9,8,7]");
        assert_eq!(c.composition_factors(b(1, 8)).unwrap(), vec![1, 2, 3, 4, 5, 0, 1, 2]);
    }

    #[test]
    fn sincerity() {
        assert!(series("[6,8,9,9,8,7]").is_sincere());
        assert!(!series("[3,4,4,3,2,1]").is_sincere());
        assert!(!series("[3,3,3,4]").is_sincere());
        assert!(series("[1]").is_sincere());
    }

    #[test]
    fn blocks_and_rotation() {
        let p = series("[2,1,1,3,2,1]");
        assert_eq!(p.class(), SeriesClass::LinearProduct);
        let blocks: Vec<String> = p.blocks().iter().map(|b| b.to_string()).collect();
        assert_eq!(blocks, vec!["[2,1]", "[1]", "[3,2,1]"]);
        assert_eq!(series("[4,3,3,3]").rotated(1).unwrap(), series("[3,3,3,4]"));
        assert!(p.rotated(1).is_err());
    }
}
