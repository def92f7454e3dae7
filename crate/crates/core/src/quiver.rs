//! Finite quivers, their underlying graphs, and structural classification.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite quiver. Loops and parallel arrows are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQuiver", into = "RawQuiver")]
pub struct Quiver {
    num_vertices: usize,
    arrows: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawQuiver {
    vertices: usize,
    arrows: Vec<[usize; 2]>,
}

impl TryFrom<RawQuiver> for Quiver {
    type Error = Error;
    fn try_from(raw: RawQuiver) -> Result<Self> {
        Quiver::new(raw.vertices, raw.arrows.into_iter().map(|[s, t]| (s, t)).collect())
    }
}

impl From<Quiver> for RawQuiver {
    fn from(q: Quiver) -> Self {
        RawQuiver { vertices: q.num_vertices, arrows: q.arrows.iter().map(|&(s, t)| [s, t]).collect() }
    }
}

/// Dimension vector indexed by vertex.
pub type DimVector = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShapeTag {
    Tree,
    Cycle,
    ProperPseudotree,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverShape {
    pub tag: ShapeTag,
    pub cycle_rank: usize,
}

/// A subquiver given by vertex and arrow index sets of an ambient quiver.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SubQuiver {
    pub vertices: BTreeSet<usize>,
    pub arrows: BTreeSet<usize>,
}

/// Two fundamental cycles and a tree path joining them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalPair {
    pub alpha: usize,
    pub beta: usize,
    pub cycle_alpha: SubQuiver,
    pub cycle_beta: SubQuiver,
    pub path: SubQuiver,
}

impl FundamentalPair {
    /// Union `C_alpha ∪ C_beta ∪ w`.
    pub fn support(&self) -> SubQuiver {
        let mut s = self.cycle_alpha.clone();
        for part in [&self.cycle_beta, &self.path] {
            s.vertices.extend(part.vertices.iter().copied());
            s.arrows.extend(part.arrows.iter().copied());
        }
        s
    }
}

impl Quiver {
    pub fn new(num_vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        for (i, &(s, t)) in arrows.iter().enumerate() {
            if s >= num_vertices || t >= num_vertices {
                return Err(Error::InvalidQuiver(format!("arrow {i} = ({s},{t}) leaves the vertex range")));
            }
        }
        Ok(Quiver { num_vertices, arrows })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn source(&self, arrow: usize) -> usize {
        self.arrows[arrow].0
    }

    pub fn target(&self, arrow: usize) -> usize {
        self.arrows[arrow].1
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).count()
    }

    /// Whether the quiver has an oriented cycle (loops included).
    pub fn has_oriented_cycle(&self) -> bool {
        let mut indeg = vec![0usize; self.num_vertices];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.num_vertices).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        seen < self.num_vertices
    }

    pub fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut comps = self.num_vertices;
        for &(s, t) in &self.arrows {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    /// Dimension-vector compositions of `n` over the vertices, lexicographic.
    pub fn dim_vectors(&self, n: usize) -> Vec<DimVector> {
        compositions(n, self.num_vertices)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph Q {\n");
        for v in 0..self.num_vertices {
            let _ = writeln!(s, "  {v};");
        }
        for (i, &(a, b)) in self.arrows.iter().enumerate() {
            let _ = writeln!(s, "  {a} -> {b} [label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }

    /// Resolve a built-in quiver name.
    ///
    /// `L0..L4` loop quivers, `A2..A5` equioriented paths (or `A3:+-` with an
    /// explicit orientation), `C2..C4` cycles with optional orientation
    /// suffix (`C3:++-`, default equioriented), `K2` Kronecker, `PT1`
    /// oriented 3-cycle with a pendant arrow, `PT2` oriented 2-cycle with a
    /// pendant arrow, `S3` three-armed star pointing inwards.
    pub fn named(name: &str) -> Result<Quiver> {
        let bad = || Error::Parse(format!("unknown quiver name `{name}`"));
        let (head, suffix) = match name.split_once(':') {
            Some((h, s)) => (h, Some(s)),
            None => (name, None),
        };
        let orientation = |s: &str| -> Result<Vec<bool>> {
            s.chars()
                .map(|c| match c {
                    '+' => Ok(true),
                    '-' => Ok(false),
                    _ => Err(bad()),
                })
                .collect()
        };
        match head {
            "K2" if suffix.is_none() => Quiver::new(2, vec![(0, 1), (0, 1)]),
            "PT1" if suffix.is_none() => Quiver::new(4, vec![(0, 1), (1, 2), (2, 0), (0, 3)]),
            "PT2" if suffix.is_none() => Quiver::new(3, vec![(0, 1), (1, 0), (0, 2)]),
            "S3" if suffix.is_none() => Quiver::new(4, vec![(1, 0), (2, 0), (3, 0)]),
            _ => {
                let kind = head.chars().next().ok_or_else(bad)?;
                let n: usize = head[1..].parse().map_err(|_| bad())?;
                match kind {
                    'L' if suffix.is_none() && n <= 4 => Ok(loop_quiver(n)),
                    'A' if (2..=5).contains(&n) => {
                        let o = match suffix {
                            Some(s) => orientation(s)?,
                            None => vec![true; n - 1],
                        };
                        if o.len() != n - 1 {
                            return Err(bad());
                        }
                        Ok(path_quiver(&o))
                    }
                    'C' if (2..=4).contains(&n) => {
                        let o = match suffix {
                            Some(s) => orientation(s)?,
                            None => vec![true; n],
                        };
                        if o.len() != n {
                            return Err(bad());
                        }
                        cycle_quiver(&o)
                    }
                    _ => Err(bad()),
                }
            }
        }
    }
}

/// Compositions of `n` into `parts` non-negative parts, lexicographic.
pub fn compositions(n: usize, parts: usize) -> Vec<DimVector> {
    let mut out = Vec::new();
    let mut cur = vec![0; parts];
    fn rec(i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DimVector>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur[i] = x;
            rec(i + 1, left - x, cur, out);
        }
    }
    if parts == 0 {
        if n == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(0, n, &mut cur, &mut out);
    out
}

/// One vertex with `n` loops.
pub fn loop_quiver(n: usize) -> Quiver {
    Quiver { num_vertices: 1, arrows: vec![(0, 0); n] }
}

/// Path `0 - 1 - ... - m`; entry `j` says whether arrow `j` points `j -> j+1`.
pub fn path_quiver(orientation: &[bool]) -> Quiver {
    let arrows = orientation.iter().enumerate().map(|(j, &fwd)| if fwd { (j, j + 1) } else { (j + 1, j) }).collect();
    Quiver { num_vertices: orientation.len() + 1, arrows }
}

/// Cycle on `ℓ = orientation.len()` vertices; arrow `j` joins `j` and
/// `j+1 mod ℓ` and points forward iff `orientation[j]`.
pub fn cycle_quiver(orientation: &[bool]) -> Result<Quiver> {
    let l = orientation.len();
    if l == 0 {
        return Err(Error::EmptyOrientation);
    }
    let arrows = orientation
        .iter()
        .enumerate()
        .map(|(j, &fwd)| {
            let next = (j + 1) % l;
            if fwd {
                (j, next)
            } else {
                (next, j)
            }
        })
        .collect();
    Ok(Quiver { num_vertices: l, arrows })
}

/// Recover the orientation word of a cycle quiver in standard cyclic order.
pub fn cycle_orientation(q: &Quiver) -> Result<Vec<bool>> {
    let l = q.num_vertices();
    if q.num_arrows() != l {
        return Err(Error::NotStandardCycle(format!("{} arrows on {} vertices", q.num_arrows(), l)));
    }
    q.arrows()
        .iter()
        .enumerate()
        .map(|(j, &(s, t))| {
            let next = (j + 1) % l;
            if (s, t) == (j, next) {
                Ok(true)
            } else if (s, t) == (next, j) {
                Ok(false)
            } else {
                Err(Error::NotStandardCycle(format!("arrow {j} = ({s},{t}) does not join {j} and {next}")))
            }
        })
        .collect()
}

/// Dimension of the cycle space `H_1(Q; Z/2)` of the underlying multigraph.
pub fn cycle_rank(q: &Quiver) -> usize {
    q.num_arrows() + q.connected_components() - q.num_vertices()
}

pub fn classify(q: &Quiver) -> Result<QuiverShape> {
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let rank = cycle_rank(q);
    let tag = match rank {
        0 => ShapeTag::Tree,
        1 => {
            // a loop contributes 2 to the degree of its vertex
            let mut deg = vec![0usize; q.num_vertices()];
            for &(s, t) in q.arrows() {
                deg[s] += 1;
                deg[t] += 1;
            }
            if deg.iter().all(|&d| d == 2) {
                ShapeTag::Cycle
            } else {
                ShapeTag::ProperPseudotree
            }
        }
        _ => ShapeTag::Other,
    };
    Ok(QuiverShape { tag, cycle_rank: rank })
}

/// BFS spanning forest from vertex 0 (then the next unvisited vertex).
/// Returns per-vertex parent arrow and depth, plus the tree arrows.
struct SpanningTree {
    parent: Vec<Option<(usize, usize)>>, // (parent vertex, arrow)
    depth: Vec<usize>,
    in_tree: Vec<bool>,
}

fn bfs_spanning_tree(q: &Quiver) -> SpanningTree {
    let n = q.num_vertices();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut visited = vec![false; n];
    let mut in_tree = vec![false; q.num_arrows()];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (i, &(s, t)) in q.arrows().iter().enumerate() {
                let other = if s == v {
                    t
                } else if t == v {
                    s
                } else {
                    continue;
                };
                if !visited[other] {
                    visited[other] = true;
                    parent[other] = Some((v, i));
                    depth[other] = depth[v] + 1;
                    in_tree[i] = true;
                    queue.push_back(other);
                }
            }
        }
    }
    SpanningTree { parent, depth, in_tree }
}

fn tree_path(tree: &SpanningTree, mut a: usize, mut b: usize) -> SubQuiver {
    let mut sub = SubQuiver::default();
    sub.vertices.insert(a);
    sub.vertices.insert(b);
    while a != b {
        if tree.depth[a] >= tree.depth[b] {
            let (p, e) = tree.parent[a].expect("vertices in one tree");
            sub.arrows.insert(e);
            a = p;
        } else {
            let (p, e) = tree.parent[b].expect("vertices in one tree");
            sub.arrows.insert(e);
            b = p;
        }
        sub.vertices.insert(a);
        sub.vertices.insert(b);
    }
    sub
}

/// For a connected quiver of cycle rank at least 2: the fundamental cycles
/// of the first two non-tree arrows (BFS tree from vertex 0) and a shortest
/// tree path joining them. `None` when the rank is below 2.
pub fn fundamental_cycle_pair(q: &Quiver) -> Option<FundamentalPair> {
    if !q.is_connected() || cycle_rank(q) < 2 {
        return None;
    }
    let tree = bfs_spanning_tree(q);
    let mut non_tree = (0..q.num_arrows()).filter(|&i| !tree.in_tree[i]);
    let alpha = non_tree.next()?;
    let beta = non_tree.next()?;
    let fundamental = |e: usize| {
        let (s, t) = q.arrows()[e];
        let mut c = tree_path(&tree, s, t);
        c.arrows.insert(e);
        c
    };
    let cycle_alpha = fundamental(alpha);
    let cycle_beta = fundamental(beta);

    // multi-source BFS along tree arrows from C_alpha to the nearest C_beta vertex
    let n = q.num_vertices();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &v in &cycle_alpha.vertices {
        seen[v] = true;
        queue.push_back(v);
    }
    let mut end = None;
    while let Some(v) = queue.pop_front() {
        if cycle_beta.vertices.contains(&v) {
            end = Some(v);
            break;
        }
        for (i, &(s, t)) in q.arrows().iter().enumerate() {
            if !tree.in_tree[i] {
                continue;
            }
            let other = if s == v {
                t
            } else if t == v {
                s
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                prev[other] = Some((v, i));
                queue.push_back(other);
            }
        }
    }
    let mut path = SubQuiver::default();
    let mut v = end.expect("spanning tree connects the cycles");
    path.vertices.insert(v);
    while let Some((p, e)) = prev[v] {
        path.arrows.insert(e);
        path.vertices.insert(p);
        v = p;
    }
    Some(FundamentalPair { alpha, beta, cycle_alpha, cycle_beta, path })
}
