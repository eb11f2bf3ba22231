//! Exhaustive property suites. Each suite walks every object up to a size
//! bound and stops at the first counterexample; objects are visited by
//! increasing size, so the reported counterexample is a smallest one.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijections::{
    bounded_product_to_dyck, dyck_to_bounded_product, dyck_to_linear, dyck_to_m1, dyck_to_sincere,
    linear_to_dyck, m1_characterizations, m1_to_dyck, sincere_to_dyck,
};
use crate::cartan::{cartan_determinant, even_pdim_simple_count, magnitude, magnitude_via_ext, Rational};
use crate::dyck::DyckPath;
use crate::enumeration::{
    count_bounded_paths, count_bounded_products, enumerate_connected_linear, enumerate_cyclic,
    enumerate_cyclic_finite_gldim, enumerate_dyck_paths, enumerate_linear_products, enumerate_m1,
    enumerate_ordered_trees, verify_equidistribution,
};
use crate::error::Error;
use crate::kupisch::{HomDim, KupischSeries, Uniserial};
use crate::resolution_quiver::{cycle_report, finite_gldim_via_quiver};
use crate::trees::{tau, tau_inverse, LabeledTree, OrderedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Equidistribution,
    BoundedCounts,
    SincereBounce,
    QuiverOracle,
    TreeDistance,
    M1,
    Decomposition,
    LoewyBound,
    EvenPdim,
    Parity,
    Injectives,
    BounceBelow,
    Codec,
    Cartan,
    Opposite,
    Syzygy,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::Equidistribution,
        Suite::BoundedCounts,
        Suite::SincereBounce,
        Suite::QuiverOracle,
        Suite::TreeDistance,
        Suite::M1,
        Suite::Decomposition,
        Suite::LoewyBound,
        Suite::EvenPdim,
        Suite::Parity,
        Suite::Injectives,
        Suite::BounceBelow,
        Suite::Codec,
        Suite::Cartan,
        Suite::Opposite,
        Suite::Syzygy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Equidistribution => "equidistribution",
            Suite::BoundedCounts => "bounded-counts",
            Suite::SincereBounce => "sincere-bounce",
            Suite::QuiverOracle => "quiver-oracle",
            Suite::TreeDistance => "tree-distance",
            Suite::M1 => "m1",
            Suite::Decomposition => "decomposition",
            Suite::LoewyBound => "loewy-bound",
            Suite::EvenPdim => "even-pdim",
            Suite::Parity => "parity",
            Suite::Injectives => "injectives",
            Suite::BounceBelow => "bounce-below",
            Suite::Codec => "codec",
            Suite::Cartan => "cartan",
            Suite::Opposite => "opposite",
            Suite::Syzygy => "syzygy",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Equidistribution => "gldim of connected linear algebras vs height of Dyck paths",
            Suite::BoundedCounts => "products with gldim <= g vs paths of height <= g+1, and the bijection",
            Suite::SincereBounce => "sincere gldim = 2 * bounce count, resolution shape of S_0",
            Suite::QuiverOracle => "resolution quiver finiteness, weights and determinants vs syzygies",
            Suite::TreeDistance => "pdim via tree distance, level intervals, sibling criterion, gluing",
            Suite::M1 => "magnitude-one characterizations, Catalan count, round trips",
            Suite::Decomposition => "bounded tree and path decompositions round trip",
            Suite::LoewyBound => "finite gldim cyclic algebras have Loewy length <= 2n-1",
            Suite::EvenPdim => "cyclic gldim finite iff some simple has even pdim",
            Suite::Parity => "odd pdim iff all composition factors have odd pdim",
            Suite::Injectives => "gldim = max pdim of indecomposable injectives",
            Suite::BounceBelow => "bounce path stays weakly below the path",
            Suite::Codec => "area sequence, word, tree and labeling round trips",
            Suite::Cartan => "Cartan determinant 1 and magnitude chain for finite gldim",
            Suite::Opposite => "opposite algebra is an involution preserving dimension and gldim",
            Suite::Syzygy => "syzygy dimensions and gldim over all indecomposables",
        }
    }

    /// Largest size that finishes in well under a minute.
    pub fn default_n(self) -> usize {
        match self {
            Suite::Equidistribution | Suite::BounceBelow | Suite::Codec => 12,
            Suite::BoundedCounts | Suite::Decomposition => 10,
            Suite::SincereBounce | Suite::TreeDistance => 9,
            Suite::QuiverOracle | Suite::M1 | Suite::LoewyBound | Suite::Cartan | Suite::Opposite | Suite::Syzygy => 8,
            Suite::EvenPdim | Suite::Parity | Suite::Injectives => 7,
        }
    }

    pub fn run(self, n: usize) -> SuiteReport {
        let outcome = match self {
            Suite::Equidistribution => equidistribution(n),
            Suite::BoundedCounts => bounded_counts(n),
            Suite::SincereBounce => sincere_bounce(n),
            Suite::QuiverOracle => quiver_oracle(n),
            Suite::TreeDistance => tree_distance(n),
            Suite::M1 => m1(n),
            Suite::Decomposition => decomposition(n),
            Suite::LoewyBound => loewy_bound(n),
            Suite::EvenPdim => even_pdim(n),
            Suite::Parity => parity(n),
            Suite::Injectives => injectives(n),
            Suite::BounceBelow => bounce_below(n),
            Suite::Codec => codec(n),
            Suite::Cartan => cartan(n),
            Suite::Opposite => opposite(n),
            Suite::Syzygy => syzygy(n),
        };
        let (checked, counterexample) = match outcome {
            Ok(checked) => (checked, None),
            Err(Failure { checked, message }) => (checked, Some(message)),
        };
        SuiteReport {
            suite: self,
            n,
            checked,
            counterexample,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    /// Objects examined before stopping.
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Failure {
    checked: u64,
    message: String,
}

/// Counts checked objects and turns the first failed assertion into a
/// [`Failure`].
#[derive(Default)]
struct Tally(u64);

impl Tally {
    fn tick(&mut self) {
        self.0 += 1;
    }

    fn ensure(&self, ok: bool, message: impl FnOnce() -> String) -> Result<(), Failure> {
        if ok {
            Ok(())
        } else {
            Err(Failure {
                checked: self.0,
                message: message(),
            })
        }
    }

    fn fail(&self, message: String) -> Failure {
        Failure {
            checked: self.0,
            message,
        }
    }
}

type Outcome = Result<u64, Failure>;

fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64];
    for k in 0..n {
        c.push((0..=k).map(|i| c[i] * c[k - i]).sum());
    }
    c[n]
}

fn gldim(a: &KupischSeries) -> HomDim {
    a.global_dimension()
}

fn pdim(a: &KupischSeries, m: Uniserial) -> HomDim {
    a.projective_dimension(m).expect("valid module")
}

/// Linear products and cyclic rotation classes of finite global dimension
/// with at most `n` simples.
fn finite_gldim_algebras(n: usize) -> impl Iterator<Item = KupischSeries> {
    (1..=n).flat_map(|m| enumerate_linear_products(m).chain(enumerate_cyclic_finite_gldim(m)))
}

/// Every linear product and every cyclic rotation class with entries up to
/// `2m + 2`, for `m <= n` simples.
fn all_algebras(n: usize) -> impl Iterator<Item = KupischSeries> {
    (1..=n).flat_map(|m| enumerate_linear_products(m).chain(enumerate_cyclic(m, 2 * m + 2)))
}

fn equidistribution(n: usize) -> Outcome {
    let mut t = Tally::default();
    for m in 1..=n {
        let report = verify_equidistribution(m);
        t.0 += report.gldim.total + report.height.total;
        t.ensure(report.equal, || {
            format!(
                "n = {m}: gldim counts {:?} differ from height counts {:?}",
                report.gldim.counts, report.height.counts
            )
        })?;
        t.ensure(report.refined_identity, || format!("n = {m}: refined counting identity fails"))?;
    }
    Ok(t.0)
}

fn bounded_counts(n: usize) -> Outcome {
    let mut t = Tally::default();
    for m in 1..=n {
        for g in 0..=8 {
            let products = count_bounded_products(m, g);
            let paths = count_bounded_paths(m, g);
            t.tick();
            t.ensure(products == paths, || {
                format!("n = {m}, g = {g}: {products} products but {paths} paths")
            })?;
        }
        for g in 0..=6 {
            let mut images = std::collections::BTreeSet::new();
            for a in enumerate_linear_products(m) {
                if gldim(&a).finite().expect("linear") > g {
                    continue;
                }
                t.tick();
                let d = bounded_product_to_dyck(&a, g).map_err(|e| t.fail(format!("{a}, g = {g}: {e}")))?;
                t.ensure(d.semilength() == m && d.height() <= g + 1, || {
                    format!("{a}, g = {g}: image {d} has wrong size or height")
                })?;
                let back = dyck_to_bounded_product(&d, g).map_err(|e| t.fail(format!("{d}, g = {g}: {e}")))?;
                t.ensure(back == a, || format!("{a}, g = {g}: round trip gives {back}"))?;
                t.ensure(images.insert(d.clone()), || format!("{a}, g = {g}: image {d} repeated"))?;
            }
        }
    }
    Ok(t.0)
}

fn sincere_bounce(n: usize) -> Outcome {
    let mut t = Tally::default();
    for semilength in 1..=n {
        for d in enumerate_dyck_paths(semilength) {
            t.tick();
            let a = dyck_to_sincere(&d).map_err(|e| t.fail(format!("{d}: {e}")))?;
            let size = a.len();
            t.ensure(a.is_sincere(), || format!("{d}: {a} is not sincere"))?;
            let bounce = d.bounce();
            t.ensure(gldim(&a) == HomDim::Finite(2 * bounce.count), || {
                format!("{d}: gldim {a} = {} but bounce count is {}", gldim(&a), bounce.count)
            })?;
            let back = sincere_to_dyck(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
            t.ensure(back == d, || format!("{d}: round trip through {a} gives {back}"))?;

            // P_{2t} = e_0 A and P_{2t+1} = e_{b_t + 1} A, with b_0 = 0.
            let resolution = a.minimal_resolution(a.simple(0).expect("vertex 0")).expect("valid");
            let mut points = vec![0];
            points.extend(&bounce.points);
            let expected: Vec<usize> = (0..=2 * bounce.count)
                .map(|k| if k % 2 == 0 { 0 } else { points[k / 2] + 1 })
                .collect();
            t.ensure(resolution.tops == expected, || {
                format!("{a}: resolution tops {:?}, expected {:?}", resolution.tops, expected)
            })?;
            for w in points.windows(2) {
                let (b, next) = (w[0], w[1]);
                t.ensure(a.c(b + 1) + b + 1 == size + next + 1, || {
                    format!("{a}: bounce identity fails at b = {b}")
                })?;
            }
        }
    }
    // A sincere cyclic algebra has finite global dimension iff it has a
    // unique projective of dimension n.
    for m in 2..=n.min(6) {
        for a in enumerate_cyclic(m, 2 * m + 2).filter(KupischSeries::is_sincere) {
            t.tick();
            let unique = a.entries().iter().filter(|&&c| c == m).count() == 1;
            t.ensure(gldim(&a).is_finite() == unique, || {
                format!("{a}: finite gldim {} but unique entry n {unique}", gldim(&a).is_finite())
            })?;
        }
    }
    Ok(t.0)
}

fn quiver_oracle(n: usize) -> Outcome {
    let mut t = Tally::default();
    for m in 1..=n {
        for a in enumerate_cyclic(m, 2 * m + 2) {
            t.tick();
            let finite = gldim(&a).is_finite();
            let via_quiver = finite_gldim_via_quiver(&a).expect("cyclic");
            t.ensure(finite == via_quiver, || {
                format!("{a}: syzygies say finite = {finite}, quiver says {via_quiver}")
            })?;
            let report = cycle_report(&a).expect("cyclic");
            let first = &report.cycles[0];
            t.ensure(
                report
                    .cycles
                    .iter()
                    .all(|c| c.vertices.len() == first.vertices.len() && c.weight == first.weight),
                || format!("{a}: cycles differ in size or weight"),
            )?;
            let det = cartan_determinant(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
            t.ensure((det != 0) == report.is_connected(), || {
                format!("{a}: determinant {det} but {} components", report.components)
            })?;
            if det != 0 {
                t.ensure(Rational::from_integer(det) == first.weight, || {
                    format!("{a}: determinant {det} but weight {}", first.weight)
                })?;
            }
            if finite && m <= 7 {
                let even = even_pdim_simple_count(&a).expect("finite");
                let mag = magnitude(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
                t.ensure(report.cycle_vertex_count() == even, || {
                    format!("{a}: {} cycle vertices but {even} even simples", report.cycle_vertex_count())
                })?;
                t.ensure(mag == Rational::from_integer(even as i128), || {
                    format!("{a}: magnitude {mag} but {even} even simples")
                })?;
            }
        }
    }
    Ok(t.0)
}

fn tree_distance(n: usize) -> Outcome {
    let mut t = Tally::default();
    for m in 1..=n {
        for a in enumerate_linear_products(m) {
            t.tick();
            let tree = tau(&a).expect("linear");
            t.ensure(tree.is_naturally_labeled(), || format!("{a}: tree not naturally labeled"))?;
            let dims = a.simple_projective_dimensions();
            for (i, dim) in dims.iter().enumerate() {
                let via_tree = tree.pdim_via_tree(i).expect("in range");
                t.ensure(*dim == HomDim::Finite(via_tree), || {
                    format!("{a}: pdim S_{i} = {dim} but the tree gives {via_tree}")
                })?;
            }
            t.ensure(gldim(&a) == HomDim::Finite(tree.gldim_via_tree()), || {
                format!("{a}: gldim differs from the tree value")
            })?;
            for level in tree.levels() {
                t.ensure(level.windows(2).all(|w| w[1] == w[0] + 1), || {
                    format!("{a}: level {level:?} is not an interval")
                })?;
            }
            let ordered = tree.forget_labels().expect("natural");
            t.ensure(ordered.natural_labeling() == tree, || format!("{a}: labeling round trip fails"))?;
            t.ensure(tau_inverse(&tree).as_ref() == Ok(&a), || format!("{a}: tau inverse fails"))?;
            if m <= 8 {
                let g0 = gldim(&a).finite().expect("linear");
                for g in 0..=8 {
                    t.ensure(ordered.sibling_bound_check(g) == (g0 <= g), || {
                        format!("{a}: sibling criterion wrong for g = {g} (gldim {g0})")
                    })?;
                }
            }
        }
    }
    // Gluing: the tree of a product is the first tree with the second one
    // shifted up and its vertex 0 identified with the first root.
    for total in 2..=n.min(8) {
        for n1 in 1..total {
            for a1 in enumerate_linear_products(n1) {
                for a2 in enumerate_linear_products(total - n1) {
                    t.tick();
                    let mut entries = a1.entries().to_vec();
                    entries.extend_from_slice(a2.entries());
                    let product = KupischSeries::linear(entries).expect("concatenation");
                    let mut parents = tau(&a1).expect("linear").parents().to_vec();
                    parents.extend(tau(&a2).expect("linear").parents().iter().map(|p| p + n1));
                    let glued = LabeledTree::from_parents(parents).expect("valid");
                    t.ensure(tau(&product).as_ref() == Ok(&glued), || {
                        format!("{a1} x {a2}: tree is not the glued tree")
                    })?;
                }
            }
        }
    }
    Ok(t.0)
}

fn m1(n: usize) -> Outcome {
    let mut t = Tally::default();
    for m in 1..=n.min(7) {
        for a in enumerate_cyclic(m, 2 * m + 2) {
            t.tick();
            let [x, y, z] = m1_characterizations(&a);
            t.ensure(x == y && y == z, || {
                format!("{a}: magnitude one {x}, unique entry n {y}, finite with Loewy >= n {z}")
            })?;
        }
    }
    for m in 1..=n {
        let algebras: Vec<KupischSeries> = enumerate_m1(m).collect();
        t.tick();
        t.ensure(algebras.len() as u64 == catalan(m), || {
            format!("n = {m}: {} magnitude-one algebras, Catalan number {}", algebras.len(), catalan(m))
        })?;
        for a in &algebras {
            t.tick();
            let d = m1_to_dyck(a).map_err(|e| t.fail(format!("{a}: {e}")))?;
            t.ensure(d.semilength() == m, || format!("{a}: path {d} has the wrong size"))?;
            let back = dyck_to_m1(&d).map_err(|e| t.fail(format!("{d}: {e}")))?;
            let canonical_back = if back.is_cyclic() {
                crate::bijections::canonical_rotation(&back).expect("cyclic").representative
            } else {
                back.clone()
            };
            t.ensure(&canonical_back == a, || format!("{a}: round trip gives {back}"))?;
        }
        for d in enumerate_dyck_paths(m) {
            t.tick();
            let a = dyck_to_m1(&d).map_err(|e| t.fail(format!("{d}: {e}")))?;
            t.ensure(m1_characterizations(&a)[1], || format!("{d}: {a} has no unique entry n"))?;
            let back = m1_to_dyck(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
            t.ensure(back == d, || format!("{d}: round trip through {a} gives {back}"))?;
        }
    }
    Ok(t.0)
}

fn decomposition(n: usize) -> Outcome {
    let mut t = Tally::default();
    for g in 0..=6 {
        for vertices in 1..=n {
            for tree in enumerate_ordered_trees(vertices) {
                if tree.natural_labeling().gldim_via_tree() > g {
                    continue;
                }
                t.tick();
                let parts = tree.decompose_bounded(g).map_err(|e| t.fail(format!("tree {tree}, g = {g}: {e}")))?;
                let count: usize = parts
                    .left
                    .iter()
                    .chain(&parts.right)
                    .chain([&parts.middle])
                    .map(OrderedTree::vertex_count)
                    .sum();
                t.ensure(count == vertices + parts.m(), || {
                    format!("tree {tree}, g = {g}: {count} vertices in the pieces")
                })?;
                let back = OrderedTree::recompose_bounded(&parts, g)
                    .map_err(|e| t.fail(format!("tree {tree}, g = {g}: {e}")))?;
                t.ensure(back == tree, || format!("tree {tree}, g = {g}: round trip gives {back}"))?;
            }
        }
        for semilength in 0..=n {
            for d in enumerate_dyck_paths(semilength).filter(|d| d.height() <= g + 1) {
                t.tick();
                let parts = d.decompose_bounded(g).map_err(|e| t.fail(format!("path {d}, g = {g}: {e}")))?;
                let total: usize = parts
                    .left
                    .iter()
                    .chain(&parts.right)
                    .chain([&parts.middle])
                    .map(DyckPath::semilength)
                    .sum();
                t.ensure(total + parts.m() == semilength, || {
                    format!("path {d}, g = {g}: pieces have total semilength {total}")
                })?;
                let h = g.div_ceil(2);
                t.ensure(
                    parts.left.iter().all(|p| p.height() <= g / 2)
                        && parts.right.iter().all(|p| p.height() <= h)
                        && (if parts.m() == 0 {
                            parts.middle.height() <= h
                        } else {
                            parts.middle.height() == h
                        }),
                    || format!("path {d}, g = {g}: piece heights out of range"),
                )?;
                let back =
                    DyckPath::recompose_bounded(&parts, g).map_err(|e| t.fail(format!("path {d}, g = {g}: {e}")))?;
                t.ensure(back == d, || format!("path {d}, g = {g}: round trip gives {back}"))?;
            }
        }
    }
    Ok(t.0)
}

fn loewy_bound(n: usize) -> Outcome {
    let mut t = Tally::default();
    for m in 1..=n {
        for a in enumerate_cyclic(m, 2 * m + 2).filter(|a| gldim(a).is_finite()) {
            t.tick();
            t.ensure(a.loewy_length() < 2 * m, || {
                format!("{a}: Loewy length {} exceeds {}", a.loewy_length(), 2 * m - 1)
            })?;
        }
    }
    Ok(t.0)
}

fn even_pdim(n: usize) -> Outcome {
    let mut t = Tally::default();
    for m in 1..=n {
        for a in enumerate_cyclic(m, 2 * m + 2) {
            t.tick();
            let has_even = a
                .simple_projective_dimensions()
                .into_iter()
                .any(|d| matches!(d, HomDim::Finite(p) if p % 2 == 0));
            t.ensure(has_even == gldim(&a).is_finite(), || {
                format!("{a}: even simple {has_even}, gldim {}", gldim(&a))
            })?;
        }
    }
    Ok(t.0)
}

fn parity(n: usize) -> Outcome {
    let mut t = Tally::default();
    for a in finite_gldim_algebras(n) {
        let simples = a.simple_projective_dimensions();
        let odd = |d: HomDim| d.finite().expect("finite gldim") % 2 == 1;
        for m in a.indecomposables() {
            t.tick();
            let factors = a.composition_factors(m).expect("valid");
            let all_odd = factors.iter().all(|&s| odd(simples[s]));
            t.ensure(odd(pdim(&a, m)) == all_odd, || {
                format!("{a}: {m} has pdim {} but all factors odd is {all_odd}", pdim(&a, m))
            })?;
        }
    }
    Ok(t.0)
}

fn injectives(n: usize) -> Outcome {
    let mut t = Tally::default();
    for a in finite_gldim_algebras(n) {
        t.tick();
        let best = (0..a.len())
            .map(|i| pdim(&a, a.injective(i).expect("vertex")))
            .max()
            .expect("n >= 1");
        t.ensure(best == gldim(&a), || {
            format!("{a}: injectives reach pdim {best}, gldim {}", gldim(&a))
        })?;
    }
    Ok(t.0)
}

fn bounce_below(n: usize) -> Outcome {
    let mut t = Tally::default();
    for semilength in 0..=n {
        for d in enumerate_dyck_paths(semilength) {
            t.tick();
            let bounce = d.bounce_path();
            let points = d.bounce().points;
            t.ensure(bounce.semilength() == semilength, || format!("{d}: bounce path {bounce} too short"))?;
            t.ensure(points.last().copied().unwrap_or(0) == semilength, || {
                format!("{d}: bounce points {points:?} do not end at {semilength}")
            })?;
            t.ensure(bounce.heights().iter().zip(d.heights()).all(|(b, h)| *b <= h), || {
                format!("{d}: bounce path {bounce} rises above the path")
            })?;
        }
    }
    Ok(t.0)
}

fn codec(n: usize) -> Outcome {
    let mut t = Tally::default();
    for semilength in 0..=n {
        let mut count = 0u64;
        for d in enumerate_dyck_paths(semilength) {
            t.tick();
            count += 1;
            let area = d.area_sequence();
            t.ensure(DyckPath::from_area(&area).as_ref() == Ok(&d), || format!("{d}: area {area:?} does not decode"))?;
            t.ensure(d.to_string().parse::<DyckPath>().as_ref() == Ok(&d), || format!("{d}: word does not parse"))?;
            let factors = d.prime_factors();
            t.ensure(factors.iter().all(DyckPath::is_prime) && DyckPath::concat(&factors) == d, || {
                format!("{d}: prime factorization does not recombine")
            })?;
            let a = dyck_to_linear(&d);
            t.ensure(linear_to_dyck(&a).as_ref() == Ok(&d) && a.len() == semilength + 1, || {
                format!("{d}: linear algebra round trip fails through {a}")
            })?;
            let tree = OrderedTree::from_dyck(&d);
            t.ensure(
                tree.to_dyck() == d && tree.depth() == d.height() && tree.vertex_count() == semilength + 1,
                || format!("{d}: tree round trip fails"),
            )?;
            t.ensure(tree.to_string().parse::<OrderedTree>().as_ref() == Ok(&tree), || {
                format!("{d}: parenthesis form does not parse")
            })?;
            let labeled = tree.natural_labeling();
            t.ensure(
                labeled.is_naturally_labeled() && labeled.forget_labels().as_ref() == Ok(&tree),
                || format!("{d}: natural labeling round trip fails"),
            )?;
        }
        t.ensure(count == catalan(semilength), || {
            format!("semilength {semilength}: {count} paths, Catalan number {}", catalan(semilength))
        })?;
    }
    for m in 1..=n.min(10) {
        for a in enumerate_connected_linear(m) {
            t.tick();
            t.ensure(a.to_string().parse::<KupischSeries>().as_ref() == Ok(&a), || {
                format!("{a}: series does not parse back")
            })?;
        }
    }
    Ok(t.0)
}

fn cartan(n: usize) -> Outcome {
    let mut t = Tally::default();
    for a in finite_gldim_algebras(n) {
        t.tick();
        let det = cartan_determinant(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
        t.ensure(det == 1, || format!("{a}: finite gldim but determinant {det}"))?;
        if a.len() <= 7 {
            let mag = magnitude(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
            let ext = magnitude_via_ext(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
            let even = even_pdim_simple_count(&a).map_err(|e| t.fail(format!("{a}: {e}")))?;
            t.ensure(mag == Rational::from_integer(ext as i128) && ext == even as i64, || {
                format!("{a}: magnitude {mag}, Ext sum {ext}, even simples {even}")
            })?;
        }
    }
    Ok(t.0)
}

fn opposite(n: usize) -> Outcome {
    let mut t = Tally::default();
    for a in all_algebras(n) {
        t.tick();
        let op = a.opposite();
        t.ensure(op.opposite() == a, || format!("{a}: opposite of opposite is {}", op.opposite()))?;
        t.ensure(op.dimension() == a.dimension(), || format!("{a}: opposite {op} has another dimension"))?;
        t.ensure(KupischSeries::new(op.entries().to_vec()).is_ok_and(|b| b.kind() == a.kind()), || {
            format!("{a}: opposite {op} is not a series of the same kind")
        })?;
        t.ensure(gldim(&op) == gldim(&a), || {
            format!("{a}: gldim {} but opposite {op} has {}", gldim(&a), gldim(&op))
        })?;
    }
    Ok(t.0)
}

fn syzygy(n: usize) -> Outcome {
    let mut t = Tally::default();
    for a in all_algebras(n) {
        let mut best = HomDim::Finite(0);
        for m in a.indecomposables() {
            t.tick();
            let omega = a.syzygy(m).expect("valid");
            let c = a.c(m.vertex);
            t.ensure(m.length + omega.length == c, || {
                format!("{a}: {m} has syzygy {omega}, lengths do not add to {c}")
            })?;
            best = best.max(pdim(&a, m));
        }
        if a.len() <= 7 {
            t.ensure(best == gldim(&a), || {
                format!("{a}: largest pdim {best} but gldim over simples {}", gldim(&a))
            })?;
        }
    }
    Ok(t.0)
}
