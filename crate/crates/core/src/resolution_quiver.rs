//! The resolution quiver of a cyclic Nakayama algebra: the functional graph
//! `i -> i + c_i (mod n)` on `Z/nZ`.

use serde::Serialize;

use crate::cartan::{Rational, RationalJson};
use crate::error::{Error, Result};
use crate::kupisch::KupischSeries;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ResolutionQuiver {
    successors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    /// Starts at the smallest vertex, then follows arrows.
    pub vertices: Vec<usize>,
    /// `(1/n) * sum of c_i` over the cycle.
    pub weight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub successors: Vec<usize>,
    /// Sorted by smallest vertex.
    pub cycles: Vec<Cycle>,
    pub components: usize,
}

impl ResolutionQuiver {
    pub fn build(a: &KupischSeries) -> Result<Self> {
        if !a.is_cyclic() {
            return Err(Error::WrongKind { expected: "cyclic" });
        }
        let n = a.len();
        let successors = a.entries().iter().enumerate().map(|(i, &c)| (i + c) % n).collect();
        Ok(ResolutionQuiver { successors })
    }

    pub fn successors(&self) -> &[usize] {
        &self.successors
    }

    pub fn successor(&self, i: usize) -> usize {
        self.successors[i]
    }

    /// Every component of a functional graph holds exactly one cycle. Walk
    /// from each unvisited vertex, colouring the current walk; hitting the
    /// current colour closes a new cycle, hitting an older colour does not.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.successors.len();
        let mut colour = vec![usize::MAX; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if colour[start] != usize::MAX {
                continue;
            }
            let mut v = start;
            while colour[v] == usize::MAX {
                colour[v] = start;
                v = self.successors[v];
            }
            if colour[v] == start {
                let mut cycle = vec![v];
                let mut w = self.successors[v];
                while w != v {
                    cycle.push(w);
                    w = self.successors[w];
                }
                let min_pos = cycle
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &x)| x)
                    .map(|(p, _)| p)
                    .unwrap_or(0);
                cycle.rotate_left(min_pos);
                cycles.push(cycle);
            }
        }
        cycles.sort_by_key(|c| c[0]);
        cycles
    }

    pub fn report(&self, a: &KupischSeries) -> CycleReport {
        let n = a.len() as i128;
        let cycles: Vec<Cycle> = self
            .cycles()
            .into_iter()
            .map(|vertices| {
                let total: usize = vertices.iter().map(|&v| a.entries()[v]).sum();
                Cycle {
                    weight: Rational::new(total as i128, n),
                    vertices,
                }
            })
            .collect();
        CycleReport {
            successors: self.successors.clone(),
            components: cycles.len(),
            cycles,
        }
    }
}

impl CycleReport {
    pub fn is_connected(&self) -> bool {
        self.components == 1
    }

    /// Vertices lying on some cycle.
    pub fn cycle_vertex_count(&self) -> usize {
        self.cycles.iter().map(|c| c.vertices.len()).sum()
    }
}

pub fn cycle_report(a: &KupischSeries) -> Result<CycleReport> {
    Ok(ResolutionQuiver::build(a)?.report(a))
}

/// Finite global dimension iff the quiver is connected with cycle weight one.
pub fn finite_gldim_via_quiver(a: &KupischSeries) -> Result<bool> {
    let report = cycle_report(a)?;
    Ok(report.is_connected() && report.cycles[0].weight == Rational::from_integer(1))
}

#[derive(Serialize)]
struct CycleJson {
    vertices: Vec<usize>,
    weight: RationalJson,
}

#[derive(Serialize)]
struct CycleReportJson<'a> {
    successors: &'a [usize],
    cycles: Vec<CycleJson>,
    components: usize,
}

impl Serialize for CycleReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CycleReportJson {
            successors: &self.successors,
            cycles: self
                .cycles
                .iter()
                .map(|c| CycleJson {
                    vertices: c.vertices.clone(),
                    weight: c.weight.into(),
                })
                .collect(),
            components: self.components,
        }
        .serialize(serializer)
    }
}
