//! The quiver monoid, its modules, and skew shapes for loop quivers.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::colored::rep_key;
use crate::error::{Error, Result};
use crate::f1lin::{compose, enumerate_maps, F1Map};
use crate::quiver::{loop_quiver, Quiver};
use crate::rep::{is_indecomposable, Representation};

/// Normal form of an element of the quiver monoid.
///
/// `Path` lists arrows in traversal order, so `Path([b, a])` is "b then a".
/// `One` is the monoid identity; it is not a finite sum of idempotents in
/// the monoid itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MonoidElement {
    Zero,
    One,
    Idempotent(usize),
    Path(Vec<usize>),
}

impl MonoidElement {
    pub fn is_valid(&self, q: &Quiver) -> bool {
        match self {
            MonoidElement::Zero | MonoidElement::One => true,
            MonoidElement::Idempotent(v) => *v < q.num_vertices(),
            MonoidElement::Path(p) => {
                !p.is_empty()
                    && p.iter().all(|&a| a < q.num_arrows())
                    && p.windows(2).all(|w| q.target(w[0]) == q.source(w[1]))
            }
        }
    }
}

/// `a · b`, i.e. first `b`, then `a`.
pub fn mq_multiply(a: &MonoidElement, b: &MonoidElement, q: &Quiver) -> MonoidElement {
    use MonoidElement::*;
    match (a, b) {
        (Zero, _) | (_, Zero) => Zero,
        (One, x) | (x, One) => x.clone(),
        (Idempotent(i), Idempotent(j)) => {
            if i == j {
                Idempotent(*i)
            } else {
                Zero
            }
        }
        (Idempotent(i), Path(p)) => {
            if q.target(*p.last().unwrap()) == *i {
                Path(p.clone())
            } else {
                Zero
            }
        }
        (Path(p), Idempotent(i)) => {
            if q.source(p[0]) == *i {
                Path(p.clone())
            } else {
                Zero
            }
        }
        (Path(p), Path(r)) => {
            if q.target(*r.last().unwrap()) == q.source(p[0]) {
                Path(r.iter().chain(p).copied().collect())
            } else {
                Zero
            }
        }
    }
}

/// Images of `1..=dim` under a pointed map (not necessarily injective).
pub type PointedMap = Vec<usize>;

fn apply(f: &PointedMap, x: usize) -> usize {
    if x == 0 {
        0
    } else {
        f[x - 1]
    }
}

/// A finite pointed module over the quiver monoid, given by the actions of
/// the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MQModule {
    pub quiver: Quiver,
    pub dim: usize,
    pub vertex_actions: Vec<PointedMap>,
    pub arrow_actions: Vec<PointedMap>,
}

impl MQModule {
    pub fn new(
        quiver: Quiver,
        dim: usize,
        vertex_actions: Vec<PointedMap>,
        arrow_actions: Vec<PointedMap>,
    ) -> Result<Self> {
        if vertex_actions.len() != quiver.num_vertices() || arrow_actions.len() != quiver.num_arrows() {
            return Err(Error::DimensionMismatch("one action per vertex and per arrow".into()));
        }
        for f in vertex_actions.iter().chain(&arrow_actions) {
            if f.len() != dim || f.iter().any(|&x| x > dim) {
                return Err(Error::InvalidMap(format!("{f:?} is not a pointed map on {dim} elements")));
            }
        }
        Ok(MQModule { quiver, dim, vertex_actions, arrow_actions })
    }

    pub fn act(&self, x: &MonoidElement, a: usize) -> usize {
        match x {
            MonoidElement::Zero => 0,
            MonoidElement::One => a,
            MonoidElement::Idempotent(v) => apply(&self.vertex_actions[*v], a),
            MonoidElement::Path(p) => p.iter().fold(a, |acc, &arr| apply(&self.arrow_actions[arr], acc)),
        }
    }

    /// Whether the defining relations hold: `e_i² = e_i`, `e_i e_j = 0`,
    /// `e_{t(α)} α = α = α e_{s(α)}`.
    pub fn satisfies_relations(&self) -> bool {
        let q = &self.quiver;
        let e = &self.vertex_actions;
        (1..=self.dim).all(|a| {
            (0..q.num_vertices()).all(|i| {
                (0..q.num_vertices()).all(|j| {
                    let ij = apply(&e[i], apply(&e[j], a));
                    if i == j {
                        ij == apply(&e[i], a)
                    } else {
                        ij == 0
                    }
                })
            }) && (0..q.num_arrows()).all(|arr| {
                let f = &self.arrow_actions[arr];
                let fa = apply(f, a);
                apply(&e[q.target(arr)], fa) == fa && apply(f, apply(&e[q.source(arr)], a)) == fa
            })
        })
    }

    /// Every distinct action function of the monoid on this module, including
    /// the identity.
    pub fn action_closure(&self) -> Vec<PointedMap> {
        let generators: Vec<&PointedMap> = self.vertex_actions.iter().chain(&self.arrow_actions).collect();
        let identity: PointedMap = (1..=self.dim).collect();
        let mut seen: HashSet<PointedMap> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        let mut out = Vec::new();
        while let Some(f) = queue.pop_front() {
            for g in &generators {
                let h: PointedMap = f.iter().map(|&x| apply(g, x)).collect();
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
            out.push(f);
        }
        out
    }
}

/// The module `⊕_i V_i` with `e_i` acting as block projections and each
/// arrow acting by its block map.
pub fn rep_to_module(v: &Representation) -> MQModule {
    let q = v.quiver().clone();
    let off = v.offsets();
    let dim = v.total_dim();
    let block: Vec<usize> = (0..q.num_vertices()).flat_map(|i| std::iter::repeat_n(i, v.dims()[i])).collect();
    let vertex_actions =
        (0..q.num_vertices()).map(|i| (1..=dim).map(|x| if block[x - 1] == i { x } else { 0 }).collect()).collect();
    let arrow_actions = (0..q.num_arrows())
        .map(|arr| {
            let (s, t) = q.arrows()[arr];
            (1..=dim)
                .map(|x| {
                    if block[x - 1] != s {
                        return 0;
                    }
                    let y = v.map(arr).apply(x - off[s]);
                    if y == 0 {
                        0
                    } else {
                        off[t] + y
                    }
                })
                .collect()
        })
        .collect();
    MQModule { quiver: q, dim, vertex_actions, arrow_actions }
}

/// Type α: each monoid element is injective away from the elements it kills.
///
/// The check runs over the full closure of action functions, which is finite
/// and contains every word of every length.
pub fn is_type_alpha(m: &MQModule) -> bool {
    m.action_closure().iter().all(|f| {
        let mut hit = vec![false; m.dim + 1];
        f.iter().filter(|&&y| y != 0).all(|&y| !std::mem::replace(&mut hit[y], true))
    })
}

/// Partial injections between carriers that commute with every generator.
pub fn module_homs(m: &MQModule, n: &MQModule) -> Result<Vec<F1Map>> {
    if m.quiver != n.quiver {
        return Err(Error::QuiverMismatch);
    }
    let commutes = |phi: &F1Map| {
        let pairs = m.vertex_actions.iter().zip(&n.vertex_actions).chain(m.arrow_actions.iter().zip(&n.arrow_actions));
        pairs.into_iter().all(|(fm, fn_)| (1..=m.dim).all(|x| phi.apply(apply(fm, x)) == apply(fn_, phi.apply(x))))
    };
    Ok(enumerate_maps(m.dim, n.dim).into_iter().filter(|phi| commutes(phi)).collect())
}

/// A finite subset of `Z^n`, translated so each coordinate has minimum 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawShape")]
pub struct SkewShape {
    n: usize,
    cells: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawShape {
    n: usize,
    cells: Vec<Vec<i64>>,
}

impl TryFrom<RawShape> for SkewShape {
    type Error = Error;
    fn try_from(raw: RawShape) -> Result<Self> {
        SkewShape::new(raw.n, raw.cells)
    }
}

impl SkewShape {
    pub fn new(n: usize, cells: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(c) = cells.iter().find(|c| c.len() != n) {
            return Err(Error::InvalidShape(format!("cell {c:?} does not have {n} coordinates")));
        }
        let mut cells: Vec<Vec<i64>> = cells.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        for i in 0..n {
            if let Some(lo) = cells.iter().map(|c| c[i]).min() {
                for c in &mut cells {
                    c[i] -= lo;
                }
            }
        }
        cells.sort();
        Ok(SkewShape { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<i64>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn index(&self, c: &[i64]) -> Option<usize> {
        self.cells.binary_search_by(|x| x.as_slice().cmp(c)).ok()
    }

    /// Rows from the top, `#` for a cell. Only for `n = 2`; the first
    /// coordinate runs left to right.
    pub fn ascii(&self) -> String {
        if self.n != 2 || self.cells.is_empty() {
            return String::new();
        }
        let w = self.cells.iter().map(|c| c[0]).max().unwrap() + 1;
        let h = self.cells.iter().map(|c| c[1]).max().unwrap() + 1;
        let mut out = String::new();
        for y in (0..h).rev() {
            for x in 0..w {
                out.push(if self.index(&[x, y]).is_some() { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

fn leq(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Convexity under the product order.
pub fn is_valid_shape(s: &SkewShape) -> bool {
    for x in &s.cells {
        for z in &s.cells {
            if x == z || !leq(x, z) {
                continue;
            }
            // walk the box between x and z
            let mut y = x.clone();
            loop {
                if s.index(&y).is_none() {
                    return false;
                }
                let mut i = 0;
                while i < s.n {
                    y[i] += 1;
                    if y[i] <= z[i] {
                        break;
                    }
                    y[i] = x[i];
                    i += 1;
                }
                if i == s.n {
                    break;
                }
            }
        }
    }
    true
}

/// Connectivity through covers `x -> x + e_i`. The empty shape is not connected.
pub fn is_connected_shape(s: &SkewShape) -> bool {
    if s.cells.is_empty() {
        return false;
    }
    let mut seen = vec![false; s.cells.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        for i in 0..s.n {
            for d in [-1, 1] {
                let mut y = s.cells[k].clone();
                y[i] += d;
                if let Some(j) = s.index(&y) {
                    if !std::mem::replace(&mut seen[j], true) {
                        stack.push(j);
                    }
                }
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// The `L_n` representation on the cells: `f_i(a) = a + e_i` when that is a cell.
/// Element `k` is the `k`-th cell in lexicographic order.
pub fn shape_to_rep(s: &SkewShape) -> Result<Representation> {
    if !is_valid_shape(s) {
        return Err(Error::InvalidShape("not convex".into()));
    }
    let images = (0..s.n)
        .map(|i| {
            s.cells
                .iter()
                .map(|c| {
                    let mut y = c.clone();
                    y[i] += 1;
                    s.index(&y).map_or(0, |j| j + 1)
                })
                .collect()
        })
        .collect();
    Representation::from_images(loop_quiver(s.n), vec![s.cells.len()], images)
}

/// Degrees for the nonzero elements, with `f_i` of degree `e_{sigma(i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub sigma: Vec<usize>,
    pub degrees: Vec<Vec<i64>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn require_loops(v: &Representation) -> Result<()> {
    if v.quiver().num_vertices() != 1 {
        return Err(Error::NotLoopQuiver);
    }
    Ok(())
}

/// Tries each `sigma` in lexicographic order and propagates degrees through
/// each component of the colored quiver; the first consistent one wins.
pub fn admits_grading(v: &Representation) -> Option<Grading> {
    if v.quiver().num_vertices() != 1 {
        return None;
    }
    let n = v.quiver().num_arrows();
    let d = v.total_dim();
    // (neighbor, arrow, +1 forward / -1 backward)
    let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); d];
    for arr in 0..n {
        for x in 1..=d {
            let y = v.map(arr).apply(x);
            if y != 0 {
                adj[x - 1].push((y - 1, arr, 1));
                adj[y - 1].push((x - 1, arr, -1));
            }
        }
    }
    'sigma: for sigma in permutations(n) {
        let mut deg: Vec<Option<Vec<i64>>> = vec![None; d];
        for start in 0..d {
            if deg[start].is_some() {
                continue;
            }
            deg[start] = Some(vec![0; n]);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let dx = deg[x].clone().unwrap();
                for &(y, arr, dir) in &adj[x] {
                    let mut dy = dx.clone();
                    dy[sigma[arr]] += dir;
                    match &deg[y] {
                        Some(old) if *old != dy => continue 'sigma,
                        Some(_) => {}
                        None => {
                            deg[y] = Some(dy);
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        return Some(Grading { sigma, degrees: deg.into_iter().map(Option::unwrap).collect() });
    }
    None
}

pub fn maps_commute(v: &Representation) -> bool {
    let maps = v.maps();
    maps.iter().enumerate().all(|(i, f)| maps[i + 1..].iter().all(|g| compose(f, g).ok() == compose(g, f).ok()))
}

/// The connected skew shape of an indecomposable, commuting, graded
/// representation, checked by rebuilding it.
pub fn rep_to_shape(v: &Representation) -> Result<SkewShape> {
    require_loops(v)?;
    if !maps_commute(v) {
        return Err(Error::NonCommuting);
    }
    if !is_indecomposable(v) {
        return Err(Error::Decomposable);
    }
    let g = admits_grading(v).ok_or(Error::NoGrading)?;
    // undo sigma so that f_i moves along coordinate i
    let cells: Vec<Vec<i64>> = g.degrees.iter().map(|dg| g.sigma.iter().map(|&s| dg[s]).collect()).collect();
    if cells.iter().collect::<HashSet<_>>().len() != cells.len() {
        return Err(Error::InvalidShape("two elements share a degree".into()));
    }
    let shape = SkewShape::new(v.quiver().num_arrows(), cells)?;
    if !is_valid_shape(&shape) {
        return Err(Error::InvalidShape("degrees are not convex".into()));
    }
    if rep_key(&shape_to_rep(&shape)?) != rep_key(v) {
        return Err(Error::InvalidShape("cells do not reproduce the maps".into()));
    }
    Ok(shape)
}

/// All connected skew shapes in `Z^n` with `cells` cells, one per
/// translation class, sorted.
pub fn enumerate_shapes(n: usize, cells: usize) -> Vec<SkewShape> {
    if cells == 0 || n == 0 {
        return if cells == 1 { vec![SkewShape::new(0, vec![vec![]]).unwrap()] } else { Vec::new() };
    }
    let mut level: BTreeSet<SkewShape> = BTreeSet::from([SkewShape::new(n, vec![vec![0; n]]).unwrap()]);
    for _ in 1..cells {
        let mut next = BTreeSet::new();
        for s in &level {
            for c in &s.cells {
                for i in 0..n {
                    for d in [-1, 1] {
                        let mut y = c.clone();
                        y[i] += d;
                        if s.index(&y).is_none() {
                            let mut grown = s.cells.clone();
                            grown.push(y);
                            next.insert(SkewShape::new(n, grown).unwrap());
                        }
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().filter(is_valid_shape).collect()
}

/// A short exact sequence whose outer terms come from skew shapes but whose
/// middle term has non-commuting maps.
#[derive(Debug, Clone)]
pub struct ExtensionWitness {
    pub middle: Representation,
    pub sub: Representation,
    pub quotient: Representation,
}

/// Middle term: the 4-chain `1 -f1-> 2 -f2-> 3 -f1-> 4` on `L_2`; the
/// subrepresentation `{3, 4}` and the quotient by it are both horizontal dominoes.
pub fn extension_witness() -> ExtensionWitness {
    let l2 = loop_quiver(2);
    let middle = Representation::from_images(l2.clone(), vec![4], vec![vec![2, 0, 4, 0], vec![0, 3, 0, 0]]).unwrap();
    let domino = Representation::from_images(l2, vec![2], vec![vec![2, 0], vec![0, 0]]).unwrap();
    ExtensionWitness { middle, sub: domino.clone(), quotient: domino }
}
