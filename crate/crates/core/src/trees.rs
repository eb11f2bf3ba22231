//! The rooted tree of a linear Nakayama product, ordered rooted trees, and
//! the maps between them and Dyck paths.
//!
//! For a linear product `A` with `n` simples, `τ(A)` has vertices
//! `0, ..., n`, root `n`, and `parent(i) = i + c_i`. The projective
//! dimension of `S_i` is `dist(i, i+1) - 1`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::dyck::{ceil_half, BoundedDecomposition, DyckPath, Step};
use crate::error::{Error, Result};
use crate::kupisch::KupischSeries;

/// A rooted tree on `0..=n` with root `n` and `parent(i) > i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    parent: Vec<usize>,
}

/// An unlabeled rooted tree with ordered children.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

impl LabeledTree {
    /// `parent[i]` for `0 <= i < n`; labels must increase towards the root.
    pub fn from_parents(parent: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        if let Some(i) = (0..n).find(|&i| parent[i] <= i || parent[i] > n) {
            return Err(Error::InvalidTree(format!(
                "parent of {i} is {}, expected a label in {}..={n}",
                parent[i],
                i + 1
            )));
        }
        Ok(LabeledTree { parent })
    }

    /// Label of the root, which is also the number of non-root vertices.
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// `None` for the root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent.get(v).copied()
    }

    /// Children of `v` in increasing label order.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.parent[i] == v).collect()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v > self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                size: self.vertex_count(),
            });
        }
        Ok(())
    }

    /// Distance from `v` to the root.
    pub fn depth_of(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        let mut d = 0;
        let mut w = v;
        while w < self.n() {
            w = self.parent[w];
            d += 1;
        }
        Ok(d)
    }

    /// Depth of every vertex, indexed by label.
    pub fn depths(&self) -> Vec<usize> {
        let n = self.n();
        let mut depth = vec![0; n + 1];
        // Parents carry larger labels, so a descending sweep sees them first.
        for v in (0..n).rev() {
            depth[v] = depth[self.parent[v]] + 1;
        }
        depth
    }

    pub fn depth(&self) -> usize {
        self.depths().into_iter().max().unwrap_or(0)
    }

    /// Number of edges on the path from `i` to `j`.
    pub fn dist(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        let (mut a, mut b) = (i, j);
        let mut steps = 0;
        // The smaller label is never an ancestor of the larger one, so
        // lifting the smaller side meets at the lowest common ancestor.
        while a != b {
            if a < b {
                a = self.parent[a];
            } else {
                b = self.parent[b];
            }
            steps += 1;
        }
        Ok(steps)
    }

    /// `dist(i, i+1) - 1`.
    pub fn pdim_via_tree(&self, i: usize) -> Result<usize> {
        if i >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                size: self.n(),
            });
        }
        Ok(self.dist(i, i + 1)? - 1)
    }

    /// Largest `dist(i, i+1) - 1`; zero for the single-vertex tree.
    pub fn gldim_via_tree(&self) -> usize {
        (0..self.n())
            .map(|i| self.pdim_via_tree(i).expect("in range"))
            .max()
            .unwrap_or(0)
    }

    /// Labels increase towards the root and, whenever `u < v`, every child
    /// of `u` is smaller than every child of `v`; equivalently the parent
    /// map is weakly increasing.
    pub fn is_naturally_labeled(&self) -> bool {
        self.parent.windows(2).all(|w| w[0] <= w[1])
    }

    /// Vertices of each depth, shallowest first.
    pub fn levels(&self) -> Vec<Vec<usize>> {
        let depths = self.depths();
        let mut levels = vec![Vec::new(); self.depth() + 1];
        for (v, &d) in depths.iter().enumerate() {
            levels[d].push(v);
        }
        levels
    }

    /// Orders children by label and drops the labels.
    pub fn forget_labels(&self) -> Result<OrderedTree> {
        if !self.is_naturally_labeled() {
            return Err(Error::NotNaturallyLabeled(format!("parents {:?}", self.parent)));
        }
        let n = self.n();
        let mut built: Vec<Vec<OrderedTree>> = vec![Vec::new(); n + 1];
        // Children have smaller labels, so each subtree is complete before
        // it is attached, and attachments arrive in label order.
        for v in 0..n {
            let subtree = OrderedTree {
                children: std::mem::take(&mut built[v]),
            };
            built[self.parent[v]].push(subtree);
        }
        Ok(OrderedTree {
            children: std::mem::take(&mut built[n]),
        })
    }
}

/// `τ(A)`: `parent(i) = i + c_i`.
pub fn tau(a: &KupischSeries) -> Result<LabeledTree> {
    if !a.is_linear() {
        return Err(Error::WrongKind { expected: "linear" });
    }
    LabeledTree::from_parents(a.entries().iter().enumerate().map(|(i, &c)| i + c).collect())
}

/// `c_i = parent(i) - i`.
pub fn tau_inverse(t: &LabeledTree) -> Result<KupischSeries> {
    if !t.is_naturally_labeled() {
        return Err(Error::NotNaturallyLabeled(format!("parents {:?}", t.parent)));
    }
    if t.n() == 0 {
        return Err(Error::InvalidTree("a single vertex has no Kupisch series".into()));
    }
    KupischSeries::linear(t.parent.iter().enumerate().map(|(i, &p)| p - i).collect())
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree::default()
    }

    pub fn with_children(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn into_children(self) -> Vec<OrderedTree> {
        self.children
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(OrderedTree::vertex_count).sum::<usize>()
    }

    /// Edges on a longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    /// The unique natural labeling: deeper levels get smaller labels and
    /// each level is labeled left to right.
    pub fn natural_labeling(&self) -> LabeledTree {
        // Breadth-first order lists each level left to right.
        let mut nodes: Vec<(usize, usize)> = Vec::new(); // (bfs parent, depth)
        let mut queue = VecDeque::from([(self, usize::MAX, 0usize)]);
        while let Some((t, parent, depth)) = queue.pop_front() {
            let me = nodes.len();
            nodes.push((parent, depth));
            for c in &t.children {
                queue.push_back((c, me, depth + 1));
            }
        }
        let mut order: Vec<usize> = (0..nodes.len()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(nodes[v].1), v));
        let mut label = vec![0; nodes.len()];
        for (l, &v) in order.iter().enumerate() {
            label[v] = l;
        }
        let n = nodes.len() - 1;
        let mut parent = vec![0; n];
        for (v, &(p, _)) in nodes.iter().enumerate().skip(1) {
            parent[label[v]] = label[p];
        }
        LabeledTree { parent }
    }

    /// Pre-order walk: `U` on each descent, `D` on each return.
    pub fn to_dyck(&self) -> DyckPath {
        fn walk(t: &OrderedTree, out: &mut Vec<Step>) {
            for c in &t.children {
                out.push(Step::Up);
                walk(c, out);
                out.push(Step::Down);
            }
        }
        let mut steps = Vec::with_capacity(2 * self.vertex_count());
        walk(self, &mut steps);
        DyckPath::new(steps).expect("pre-order walk is balanced")
    }

    pub fn from_dyck(d: &DyckPath) -> OrderedTree {
        let mut stack = vec![OrderedTree::leaf()];
        for s in d.steps() {
            match s {
                Step::Up => stack.push(OrderedTree::leaf()),
                Step::Down => {
                    let child = stack.pop().expect("balanced");
                    stack.last_mut().expect("balanced").children.push(child);
                }
            }
        }
        stack.pop().expect("root")
    }

    /// `false` iff some vertex has children `p` left of `q` whose subtrees
    /// have depth at least `floor(g/2)` and `ceil(g/2)` respectively.
    pub fn sibling_bound_check(&self, g: usize) -> bool {
        fn visit(t: &OrderedTree, lo: usize, hi: usize, ok: &mut bool) -> usize {
            let mut left_seen = false;
            let mut depth = 0;
            for c in &t.children {
                let d = visit(c, lo, hi, ok);
                if left_seen && d >= hi {
                    *ok = false;
                }
                left_seen |= d >= lo;
                depth = depth.max(d + 1);
            }
            depth
        }
        let mut ok = true;
        visit(self, g / 2, ceil_half(g), &mut ok);
        ok
    }

    /// Peels the root off while the tree is deeper than `ceil(g/2)`: with `a`
    /// the unique root child whose subtree has depth at least `ceil(g/2)`,
    /// `L` keeps the root with the children left of `a`, `R` keeps the root
    /// with the children right of `a`, and the walk continues at `a`.
    pub fn decompose_bounded(&self, g: usize) -> Result<BoundedDecomposition<OrderedTree>> {
        let gldim = self.natural_labeling().gldim_via_tree();
        if gldim > g {
            return Err(Error::BoundViolated(format!(
                "consecutive labels at distance {} exceed {}",
                gldim + 1,
                g + 1
            )));
        }
        let h = ceil_half(g);
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut current = self.clone();
        while current.depth() > h {
            let deep: Vec<usize> = (0..current.children.len())
                .filter(|&k| current.children[k].depth() >= h)
                .collect();
            let &[a] = deep.as_slice() else {
                return Err(Error::BoundViolated(format!(
                    "{} children of the root reach depth {h}",
                    deep.len()
                )));
            };
            let mut children = current.children;
            let right_children = children.split_off(a + 1);
            let next = children.pop().expect("a is a child");
            left.push(OrderedTree { children });
            right.push(OrderedTree {
                children: right_children,
            });
            current = next;
        }
        Ok(BoundedDecomposition {
            left,
            right,
            middle: current,
        })
    }

    /// Inverse of [`OrderedTree::decompose_bounded`].
    pub fn recompose_bounded(parts: &BoundedDecomposition<OrderedTree>, g: usize) -> Result<OrderedTree> {
        let m = parts.m();
        let h = ceil_half(g);
        if parts.right.len() != m {
            return Err(Error::BoundViolated(format!(
                "{} left trees but {} right trees",
                m,
                parts.right.len()
            )));
        }
        if parts.left.iter().any(|t| t.depth() > g / 2) {
            return Err(Error::BoundViolated(format!("a left tree is deeper than {}", g / 2)));
        }
        if parts.right.iter().any(|t| t.depth() > h) {
            return Err(Error::BoundViolated(format!("a right tree is deeper than {h}")));
        }
        let middle_depth = parts.middle.depth();
        if middle_depth > h || (m > 0 && middle_depth != h) {
            return Err(Error::BoundViolated(format!(
                "middle tree has depth {middle_depth}, bound {h}"
            )));
        }
        let mut tree = parts.middle.clone();
        for k in (0..m).rev() {
            let mut children = parts.left[k].children.clone();
            children.push(tree);
            children.extend(parts.right[k].children.iter().cloned());
            tree = OrderedTree { children };
        }
        Ok(tree)
    }
}

pub fn tree_to_dyck(t: &OrderedTree) -> DyckPath {
    t.to_dyck()
}

pub fn dyck_to_tree(d: &DyckPath) -> OrderedTree {
    OrderedTree::from_dyck(d)
}

impl fmt::Display for OrderedTree {
    /// Balanced parentheses without the root: `(` descends, `)` returns.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.to_dyck().steps() {
            f.write_str(match s {
                Step::Up => "(",
                Step::Down => ")",
            })?;
        }
        Ok(())
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|ch| match ch {
                '(' => Ok(Step::Up),
                ')' => Ok(Step::Down),
                other => Err(Error::Parse(format!("unexpected `{other}` in a parenthesis word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let path = DyckPath::new(steps).map_err(|_| Error::Parse("unbalanced parentheses".into()))?;
        Ok(OrderedTree::from_dyck(&path))
    }
}

impl Serialize for OrderedTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
