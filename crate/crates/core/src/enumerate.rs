//! Orbit enumeration, growth functions, explicit indecomposable families and
//! the dimension-controlled functors between representation categories.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::colored::{self, canonical_key, gamma_of, key_rep, rep_key, CanonicalKey, ColoredQuiver};
use crate::error::{Error, Result};
use crate::f1lin::{self, F1Map};
use crate::quiver::{cycle_orientation, cycle_rank, fundamental_cycle_pair, loop_quiver, DimVector, Quiver};
use crate::rep::{is_indecomposable, is_nilpotent_rep, Representation};

/// Partial-injection choices for every arrow under dimension vector `d`.
fn choices(q: &Quiver, d: &[usize]) -> Vec<Vec<F1Map>> {
    q.arrows().iter().map(|&(s, t)| f1lin::enumerate_maps(d[s], d[t])).collect()
}

/// Does adding arrow `a` (with map `f`) to the partial colored quiver close a cycle?
struct CycleGuard {
    off: Vec<usize>,
    succ: Vec<Vec<usize>>,
}

impl CycleGuard {
    fn new(d: &[usize]) -> Self {
        let mut off = Vec::with_capacity(d.len());
        let mut acc = 0;
        for &x in d {
            off.push(acc);
            acc += x;
        }
        CycleGuard { off, succ: vec![Vec::new(); acc] }
    }

    fn push(&mut self, s: usize, t: usize, f: &F1Map) {
        for (k, &j) in f.image().iter().enumerate() {
            if j != 0 {
                self.succ[self.off[s] + k].push(self.off[t] + j - 1);
            }
        }
    }

    fn pop(&mut self, s: usize, f: &F1Map) {
        for (k, &j) in f.image().iter().enumerate() {
            if j != 0 {
                self.succ[self.off[s] + k].pop();
            }
        }
    }

    fn acyclic(&self) -> bool {
        let n = self.succ.len();
        let mut indeg = vec![0usize; n];
        for s in &self.succ {
            for &t in s {
                indeg[t] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut seen = 0;
        while let Some(x) = stack.pop() {
            seen += 1;
            for &t in &self.succ[x] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == n
    }
}

/// Visit every representation with dimension vector `d` whose first arrow
/// uses `first` (or every choice when `first` is `None`).
fn visit_tuples(
    q: &Quiver,
    d: &[usize],
    ch: &[Vec<F1Map>],
    nilpotent_only: bool,
    first: Option<usize>,
    visit: &mut dyn FnMut(Representation),
) {
    let mut guard = CycleGuard::new(d);
    let mut picked: Vec<usize> = Vec::with_capacity(ch.len());
    #[allow(clippy::too_many_arguments)]
    fn rec(
        a: usize,
        q: &Quiver,
        d: &[usize],
        ch: &[Vec<F1Map>],
        nil: bool,
        first: Option<usize>,
        guard: &mut CycleGuard,
        picked: &mut Vec<usize>,
        visit: &mut dyn FnMut(Representation),
    ) {
        if a == ch.len() {
            let maps = picked.iter().zip(ch).map(|(&i, c)| c[i].clone()).collect();
            visit(Representation::new(q.clone(), d.to_vec(), maps).expect("dimensions match by construction"));
            return;
        }
        let (s, t) = q.arrows()[a];
        let range: Vec<usize> = match (a, first) {
            (0, Some(i)) => vec![i],
            _ => (0..ch[a].len()).collect(),
        };
        for i in range {
            let f = &ch[a][i];
            if nil {
                guard.push(s, t, f);
                if !guard.acyclic() {
                    guard.pop(s, f);
                    continue;
                }
            }
            picked.push(i);
            rec(a + 1, q, d, ch, nil, first, guard, picked, visit);
            picked.pop();
            if nil {
                guard.pop(s, f);
            }
        }
    }
    rec(0, q, d, ch, nilpotent_only, first, &mut guard, &mut picked, visit);
}

/// Visit every representation with dimension vector `d` (sequentially).
pub fn for_each_rep(q: &Quiver, d: &[usize], nilpotent_only: bool, mut visit: impl FnMut(Representation)) {
    let ch = choices(q, d);
    visit_tuples(q, d, &ch, nilpotent_only, None, &mut visit);
}

/// Every representation of total dimension at most `max` (all map tuples).
pub fn all_tuples(q: &Quiver, max: usize) -> Vec<Representation> {
    let mut out = Vec::new();
    for n in 0..=max {
        for d in q.dim_vectors(n) {
            for_each_rep(q, &d, false, |r| out.push(r));
        }
    }
    out
}

/// Keys of the classes with dimension vector `d`, filtered by `keep`;
/// parallel over the first arrow's map choices, merged in key order.
fn class_keys(
    q: &Quiver,
    d: &[usize],
    nilpotent_only: bool,
    keep: &(dyn Fn(&Representation) -> bool + Sync),
) -> BTreeSet<CanonicalKey> {
    let ch = choices(q, d);
    let collect_from = |first: Option<usize>| {
        let mut keys = HashSet::new();
        visit_tuples(q, d, &ch, nilpotent_only, first, &mut |r| {
            if keep(&r) {
                keys.insert(rep_key(&r));
            }
        });
        keys
    };
    if ch.is_empty() {
        return collect_from(None).into_iter().collect();
    }
    (0..ch[0].len())
        .into_par_iter()
        .map(|i| collect_from(Some(i)))
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
        .into_iter()
        .collect()
}

/// One representative per isomorphism class, sorted by canonical key.
pub fn enumerate_reps(q: &Quiver, d: &[usize], nilpotent_only: bool) -> Result<Vec<Representation>> {
    if d.len() != q.num_vertices() {
        return Err(Error::DimensionMismatch(format!("{} dims for {} vertices", d.len(), q.num_vertices())));
    }
    class_keys(q, d, nilpotent_only, &|_| true).iter().map(|k| key_rep(k, q)).collect()
}

/// Keys of the indecomposable classes with dimension vector `d`.
pub fn indecomposable_keys(q: &Quiver, d: &[usize], nilpotent_only: bool) -> BTreeSet<CanonicalKey> {
    if !support_connected(q, d) {
        return BTreeSet::new();
    }
    class_keys(q, d, nilpotent_only, &is_indecomposable)
}

/// Whether the vertices with nonzero dimension span a connected subquiver.
fn support_connected(q: &Quiver, d: &[usize]) -> bool {
    let support: Vec<usize> = (0..d.len()).filter(|&v| d[v] > 0).collect();
    let Some(&start) = support.first() else {
        return false;
    };
    let mut seen = vec![false; d.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &(s, t) in q.arrows() {
            for (a, b) in [(s, t), (t, s)] {
                if a == v && d[b] > 0 && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    support.iter().all(|&v| seen[v])
}

/// Keys of all indecomposable classes of total dimension `n`.
pub fn indecomposables(q: &Quiver, n: usize, nilpotent_only: bool) -> BTreeSet<CanonicalKey> {
    q.dim_vectors(n).iter().flat_map(|d| indecomposable_keys(q, d, nilpotent_only)).collect()
}

/// `NI_Q(n)`: nilpotent indecomposable classes of total dimension `n`.
pub fn ni(q: &Quiver, n: usize) -> usize {
    q.dim_vectors(n).iter().map(|d| indecomposable_keys(q, d, true).len()).sum()
}

/// `I_Q(n)`: all indecomposable classes of total dimension `n`.
pub fn i_growth(q: &Quiver, n: usize) -> usize {
    q.dim_vectors(n).iter().map(|d| indecomposable_keys(q, d, false).len()).sum()
}

#[derive(Debug, Clone, Serialize)]
pub struct IsoEntry {
    pub key: CanonicalKey,
    pub representative: Representation,
    pub is_indecomposable: bool,
    pub is_nilpotent: bool,
}

/// One entry per isomorphism class, grouped by total dimension.
#[derive(Debug, Clone, Serialize)]
pub struct IsoClassTable {
    pub quiver: Quiver,
    pub nilpotent_only: bool,
    pub by_dim: BTreeMap<usize, Vec<IsoEntry>>,
}

impl IsoClassTable {
    pub fn build(q: &Quiver, max_dim: usize, nilpotent_only: bool) -> Result<Self> {
        let mut by_dim = BTreeMap::new();
        for n in 0..=max_dim {
            let mut entries = Vec::new();
            for d in q.dim_vectors(n) {
                for rep in enumerate_reps(q, &d, nilpotent_only)? {
                    entries.push(IsoEntry {
                        key: rep_key(&rep),
                        is_indecomposable: is_indecomposable(&rep),
                        is_nilpotent: is_nilpotent_rep(&rep),
                        representative: rep,
                    });
                }
            }
            by_dim.insert(n, entries);
        }
        Ok(IsoClassTable { quiver: q.clone(), nilpotent_only, by_dim })
    }

    pub fn max_dim(&self) -> usize {
        self.by_dim.keys().next_back().copied().unwrap_or(0)
    }

    /// Entries with the given dimension vector.
    pub fn with_dims(&self, d: &[usize]) -> Result<Vec<&IsoEntry>> {
        let n: usize = d.iter().sum();
        let entries = self.by_dim.get(&n).ok_or_else(|| Error::MissingTable(d.to_vec()))?;
        Ok(entries.iter().filter(|e| e.representative.dims() == d).collect())
    }
}

/// Nilpotent iso-class keys of every size `0..=max`, grown one source vertex
/// at a time: removing a vertex without incoming arrows from an admissible
/// colored quiver leaves an admissible one, so every class of size `k+1`
/// arises from one of size `k` by adding a new source.
pub fn admissible_keys_by_size(q: &Quiver, max: usize) -> Result<Vec<BTreeSet<CanonicalKey>>> {
    let empty = ColoredQuiver { quiver: q.clone(), vertex_colors: vec![], arrows: vec![] };
    let mut levels = vec![BTreeSet::from([canonical_key(&empty)?])];
    for _ in 0..max {
        let prev = levels.last().expect("nonempty");
        let next: HashSet<CanonicalKey> = prev.par_iter().map(|k| extensions_by_source(q, k)).reduce(
            || Ok(HashSet::new()),
            |a, b| {
                let mut a = a?;
                a.extend(b?);
                Ok(a)
            },
        )?;
        levels.push(next.into_iter().collect());
    }
    Ok(levels)
}

fn extensions_by_source(q: &Quiver, key: &CanonicalKey) -> Result<HashSet<CanonicalKey>> {
    let g = key.decode(q)?;
    let n = g.num_vertices();
    let mut out = HashSet::new();
    for v in 0..q.num_vertices() {
        // per outgoing Q-arrow: no arrow, or an arrow to any vertex of the right
        // color that has no incoming arrow of that color yet
        let outgoing: Vec<usize> = (0..q.num_arrows()).filter(|&a| q.source(a) == v).collect();
        let options: Vec<Vec<Option<usize>>> = outgoing
            .iter()
            .map(|&a| {
                let t = q.target(a);
                let mut opts = vec![None];
                for y in 0..n {
                    if g.vertex_colors[y] == t && !g.arrows.iter().any(|&(_, yy, c)| yy == y && c == a) {
                        opts.push(Some(y));
                    }
                }
                opts
            })
            .collect();
        let mut idx = vec![0usize; options.len()];
        loop {
            let mut h = g.clone();
            h.vertex_colors.push(v);
            for (j, &a) in outgoing.iter().enumerate() {
                if let Some(y) = options[j][idx[j]] {
                    h.arrows.push((n, y, a));
                }
            }
            out.insert(canonical_key(&h)?);
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < options[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Whether the colored quiver encoded by `key` is connected.
pub fn key_is_connected(key: &CanonicalKey, q: &Quiver) -> Result<bool> {
    Ok(is_indecomposable(&key_rep(key, q)?))
}

/// `NI_Q(n)` for `n = 0..=max` by counting connected admissible colored quivers.
pub fn ni_by_colored_quivers(q: &Quiver, max: usize) -> Result<Vec<usize>> {
    admissible_keys_by_size(q, max)?
        .iter()
        .map(|level| {
            level.par_iter().map(|k| key_is_connected(k, q).map(usize::from)).try_reduce(|| 0, |a, b| Ok(a + b))
        })
        .collect()
}

/// Orientation, validated as a standard cycle.
fn cycle_data(c: &Quiver) -> Result<Vec<bool>> {
    cycle_orientation(c)
}

/// Vertex (0-based) of element `k` in `I_[n,i]`: `k ≡ j + i - 1 (mod ℓ)` for 1-based `j`.
fn residue_vertex(k: usize, i: usize, l: usize) -> usize {
    ((k as i64 - i as i64).rem_euclid(l as i64)) as usize
}

fn path_gamma(c: &Quiver, orient: &[bool], n: usize, i: usize) -> ColoredQuiver {
    let l = orient.len();
    let vertex_colors: Vec<usize> = (1..=n).map(|k| residue_vertex(k, i, l)).collect();
    let mut arrows = Vec::new();
    for k in 1..n {
        let j = vertex_colors[k - 1];
        if orient[j] {
            arrows.push((k - 1, k, j));
        } else {
            arrows.push((k, k - 1, j));
        }
    }
    ColoredQuiver { quiver: c.clone(), vertex_colors, arrows }
}

/// `I_[n,i]`: the string module winding `n` times one step around the cycle,
/// starting at vertex `i` (1-based).
pub fn build_i(c: &Quiver, n: usize, i: usize) -> Result<Representation> {
    let orient = cycle_data(c)?;
    check_start(i, orient.len(), n)?;
    colored::rep_of_unchecked_cycles(&path_gamma(c, &orient, n, i))
}

fn check_start(i: usize, l: usize, n: usize) -> Result<()> {
    if i == 0 || i > l {
        return Err(Error::InvalidRepresentation(format!("start vertex {i} outside 1..={l}")));
    }
    if n == 0 {
        return Err(Error::InvalidRepresentation("length must be positive".into()));
    }
    Ok(())
}

/// `Ĩ_[wℓ,i]`: `I_[wℓ,i]` closed up by one arrow joining its two ends.
pub fn build_i_tilde(c: &Quiver, w: usize, i: usize) -> Result<Representation> {
    let orient = cycle_data(c)?;
    let l = orient.len();
    if orient.iter().all(|&o| o) || orient.iter().all(|&o| !o) {
        return Err(Error::RequiresAcyclicCycle);
    }
    let n = w * l;
    check_start(i, l, n)?;
    let mut g = path_gamma(c, &orient, n, i);
    let j = residue_vertex(n, i, l);
    if orient[j] {
        g.arrows.push((n - 1, 0, j));
    } else {
        g.arrows.push((0, n - 1, j));
    }
    colored::rep_of(&g)
}

/// `M(n)`: `[n]` at every vertex, the first arrow shifting `k ↦ k-1`, the others identity.
pub fn build_m(c: &Quiver, n: usize) -> Result<Representation> {
    cycle_data(c)?;
    let dims = vec![n; c.num_vertices()];
    let maps = (0..c.num_arrows())
        .map(|a| if a == 0 { F1Map::new(n, n, (0..n).collect()) } else { Ok(F1Map::identity(n)) })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(c.clone(), dims, maps)
}

fn loop_count(q: &Quiver) -> Result<usize> {
    if q.num_vertices() != 1 {
        return Err(Error::NotLoopQuiver);
    }
    Ok(q.num_arrows())
}

/// Maximal monochromatic paths of color `c`: `(source, sink)` pairs, one per
/// vertex of that color's path decomposition, ordered by source.
fn maximal_paths(g: &ColoredQuiver, c: usize) -> Vec<(usize, usize)> {
    let n = g.num_vertices();
    let mut next = vec![None; n];
    let mut has_in = vec![false; n];
    for &(s, t, col) in &g.arrows {
        if col == c {
            next[s] = Some(t);
            has_in[t] = true;
        }
    }
    (0..n)
        .filter(|&u| !has_in[u])
        .map(|u| {
            let mut v = u;
            while let Some(w) = next[v] {
                v = w;
            }
            (u, v)
        })
        .collect()
}

/// The gluing functor from nilpotent `L_n`-representations to `L_{n-1}`:
/// two stacked copies of the colored quiver (top drops the second-to-last
/// color, bottom drops the last) joined by arrows from the sink of each
/// maximal monochromatic path in the top copy to its source in the bottom.
///
/// For `n = 2` no color survives below `n - 1`; the join then uses color 1
/// for those maximal 1-paths whose sink carries no outgoing arrow of the
/// last color, which keeps the result admissible.
pub fn f_reduce(m: &Representation) -> Result<Representation> {
    let n = loop_count(m.quiver())?;
    if n < 2 {
        return Err(Error::TooFewLoops(n));
    }
    if !is_nilpotent_rep(m) {
        return Err(Error::NotNilpotent);
    }
    let g = gamma_of(m);
    let d = g.num_vertices();
    let target = loop_quiver(n - 1);
    let mut arrows = Vec::new();
    for &(s, t, c) in &g.arrows {
        // top copy: color n-2 deleted, color n-1 becomes n-2
        if c != n - 2 {
            arrows.push((s, t, if c == n - 1 { n - 2 } else { c }));
        }
        // bottom copy: color n-1 deleted
        if c != n - 1 {
            arrows.push((d + s, d + t, c));
        }
    }
    if n == 2 {
        let has_last: BTreeSet<usize> = g.arrows.iter().filter(|a| a.2 == 1).map(|a| a.0).collect();
        for (u, v) in maximal_paths(&g, 0) {
            if !has_last.contains(&v) {
                arrows.push((v, d + u, 0));
            }
        }
    } else {
        for c in 0..n - 2 {
            for (u, v) in maximal_paths(&g, c) {
                arrows.push((v, d + u, c));
            }
        }
    }
    let out = ColoredQuiver { quiver: target, vertex_colors: vec![0; 2 * d], arrows };
    colored::rep_of(&out)
}

/// The deletion functor `D_i` (1-based): drop loop `i`, keep the others in order.
pub fn delete_loop(m: &Representation, i: usize) -> Result<Representation> {
    let n = loop_count(m.quiver())?;
    if i == 0 || i > n {
        return Err(Error::InvalidRepresentation(format!("no loop {i} on L_{n}")));
    }
    let maps = m.maps().iter().enumerate().filter(|&(a, _)| a != i - 1).map(|(_, f)| f.clone()).collect();
    Representation::new(loop_quiver(n - 1), m.dims().to_vec(), maps)
}

/// Embed nilpotent `Q`-representations into `L_{|Q0|+|Q1|}`: attach a leaf
/// arrow colored by its Q-vertex to every element, then forget vertex colors.
/// Vertex colors come first, arrow `a` becomes color `|Q0| + a`.
pub fn embed_l2(m: &Representation) -> Result<Representation> {
    if !is_nilpotent_rep(m) {
        return Err(Error::NotNilpotent);
    }
    let q = m.quiver();
    let nv = q.num_vertices();
    let g = gamma_of(m);
    let d = g.num_vertices();
    let mut arrows: Vec<(usize, usize, usize)> = g.arrows.iter().map(|&(s, t, c)| (s, t, nv + c)).collect();
    for x in 0..d {
        arrows.push((d + x, x, g.vertex_colors[x]));
    }
    let out = ColoredQuiver { quiver: loop_quiver(nv + q.num_arrows()), vertex_colors: vec![0; 2 * d], arrows };
    colored::rep_of(&out)
}

/// Transport an `L_2`-representation to a quiver of cycle rank at least 2:
/// the space sits on every vertex of two fundamental cycles and a path
/// between them, the loops act on the two non-tree arrows and every other
/// arrow of that subquiver acts by the identity.
pub fn embed_rank2(m: &Representation, q: &Quiver) -> Result<Representation> {
    if loop_count(m.quiver())? != 2 {
        return Err(Error::NotLoopQuiver);
    }
    if !is_nilpotent_rep(m) {
        return Err(Error::NotNilpotent);
    }
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let rank = cycle_rank(q);
    let pair = fundamental_cycle_pair(q).ok_or(Error::CycleRankTooSmall(rank))?;
    let s = pair.support();
    let dim = m.total_dim();
    let dims: DimVector = (0..q.num_vertices()).map(|v| if s.vertices.contains(&v) { dim } else { 0 }).collect();
    let maps = (0..q.num_arrows())
        .map(|a| {
            let (src, tgt) = q.arrows()[a];
            if a == pair.alpha {
                m.map(0).clone()
            } else if a == pair.beta {
                m.map(1).clone()
            } else if s.arrows.contains(&a) {
                F1Map::identity(dim)
            } else {
                F1Map::zero(dims[src], dims[tgt])
            }
        })
        .collect();
    Representation::new(q.clone(), dims, maps)
}

/// Finite-prefix check of `NI_q(n) ≤ D · NI_q2(C n)` for `1 ≤ n ≤ n_max`.
/// This does not decide the asymptotic relation.
pub fn nil_leq_check(q: &Quiver, q2: &Quiver, c: usize, d: &BigRational, n_max: usize) -> bool {
    (1..=n_max).all(|n| nil_leq_values(ni(q, n), ni(q2, c * n), d))
}

pub fn nil_leq_values(lhs: usize, rhs: usize, d: &BigRational) -> bool {
    let r = d * BigRational::from_integer(rhs.into());
    BigRational::from_integer(lhs.into()) <= r
}

/// Gluing family on a pseudotree: quiver vertices `0..ℓ` with arrows `0..ℓ`
/// form a standard cycle and `pendant` joins vertex 0 to a vertex off the
/// cycle. Returns `n` pairwise non-isomorphic indecomposables of dimension
/// `3ℓn`: the `i`-th glues pendant leaves onto the first `i` elements at
/// vertex 0 of `I_[3ℓn,1]` and drops the last `i` elements of the string.
pub fn pseudotree_family(q: &Quiver, l: usize, pendant: usize, n: usize) -> Result<Vec<Representation>> {
    if l == 0 || l >= q.num_vertices() || pendant >= q.num_arrows() || n == 0 {
        return Err(Error::InvalidQuiver("pseudotree family needs a cycle and a pendant arrow".into()));
    }
    let mut orient = Vec::with_capacity(l);
    for j in 0..l {
        let next = (j + 1) % l;
        match q.arrows()[j] {
            (s, t) if (s, t) == (j, next) => orient.push(true),
            (s, t) if (s, t) == (next, j) => orient.push(false),
            _ => return Err(Error::NotStandardCycle(format!("arrow {j} does not join {j} and {next}"))),
        }
    }
    let (ps, pt) = q.arrows()[pendant];
    let leaf = match (ps, pt) {
        (0, t) if t >= l => t,
        (s, 0) if s >= l => s,
        _ => return Err(Error::InvalidQuiver(format!("arrow {pendant} is not a pendant at vertex 0"))),
    };
    let big_n = 3 * l * n;
    let base = path_gamma(q, &orient, big_n, 1);
    (0..n)
        .map(|i| {
            let keep = big_n - i;
            let mut vertex_colors = base.vertex_colors[..keep].to_vec();
            let mut arrows: Vec<(usize, usize, usize)> =
                base.arrows.iter().copied().filter(|&(s, t, _)| s < keep && t < keep).collect();
            for g in 0..i {
                let x = g * l; // element g*l + 1, sitting at vertex 0
                let y = vertex_colors.len();
                vertex_colors.push(leaf);
                arrows.push(if ps == 0 { (x, y, pendant) } else { (y, x, pendant) });
            }
            colored::rep_of(&ColoredQuiver { quiver: q.clone(), vertex_colors, arrows })
        })
        .collect()
}

/// `(n, NI, I)` rows for `n = 1..=max`.
pub fn growth_table(q: &Quiver, max: usize, with_all: bool) -> Vec<(usize, usize, Option<usize>)> {
    (1..=max).map(|n| (n, ni(q, n), with_all.then(|| i_growth(q, n)))).collect()
}

/// Coefficient as a plain integer when possible (for reporting).
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{cycle_quiver, path_quiver};
    use crate::rep::{decompose, hom_count};

    #[test]
    fn enumerate_examples() {
        let l1 = loop_quiver(1);
        assert_eq!(enumerate_reps(&l1, &[1], true).unwrap().len(), 1);
        assert_eq!(enumerate_reps(&l1, &[2], true).unwrap().len(), 2);
        // zero, chain, one fixed point, identity, swap
        assert_eq!(enumerate_reps(&l1, &[2], false).unwrap().len(), 5);
    }

    #[test]
    fn conjugacy_class_oracle() {
        // orbits of S_d on endomaps by explicit conjugation
        for d in 0..=4 {
            let maps = f1lin::enumerate_maps(d, d);
            let perms: Vec<F1Map> = maps.iter().filter(|f| f.is_bijective()).cloned().collect();
            let mut seen = BTreeSet::new();
            let mut orbits = 0;
            for f in &maps {
                if seen.contains(f) {
                    continue;
                }
                orbits += 1;
                for p in &perms {
                    let pinv = p.inverse().unwrap();
                    let g = f1lin::compose(p, &f1lin::compose(f, &pinv).unwrap()).unwrap();
                    seen.insert(g);
                }
            }
            assert_eq!(enumerate_reps(&loop_quiver(1), &[d], false).unwrap().len(), orbits);
        }
    }

    #[test]
    fn growth_examples() {
        let l1 = loop_quiver(1);
        for n in 1..=6 {
            assert_eq!(ni(&l1, n), 1);
        }
        let a2 = path_quiver(&[true]);
        assert_eq!((ni(&a2, 1), ni(&a2, 2), ni(&a2, 3)), (2, 1, 0));
        let l0 = loop_quiver(0);
        assert_eq!((ni(&l0, 1), ni(&l0, 2)), (1, 0));
        assert_eq!(i_growth(&l0, 1), 1);
        assert_eq!(i_growth(&l1, 1), 2);
        for n in 1..=4 {
            assert_eq!(i_growth(&a2, n), ni(&a2, n));
        }
    }

    #[test]
    fn both_ni_methods_agree() {
        for q in [loop_quiver(1), loop_quiver(2), path_quiver(&[true, false]), cycle_quiver(&[true, false]).unwrap()] {
            let by_gen = ni_by_colored_quivers(&q, 4).unwrap();
            for (n, &count) in by_gen.iter().enumerate().skip(1) {
                assert_eq!(count, ni(&q, n), "{q:?} at {n}");
            }
        }
    }

    #[test]
    fn generated_levels_are_all_nilpotent_classes() {
        let q = loop_quiver(2);
        let levels = admissible_keys_by_size(&q, 3).unwrap();
        for (n, level) in levels.iter().enumerate() {
            let brute: BTreeSet<CanonicalKey> = enumerate_reps(&q, &[n], true).unwrap().iter().map(rep_key).collect();
            assert_eq!(*level, brute);
        }
    }

    #[test]
    fn i_family() {
        let c2 = cycle_quiver(&[true, true]).unwrap();
        assert_eq!(build_i(&c2, 1, 1).unwrap(), Representation::simple(&c2, 0));
        assert_eq!(build_i(&c2, 3, 1).unwrap().dims(), &[2, 1]);
        let r = build_i(&c2, 2, 2).unwrap();
        assert_eq!(r.dims(), &[1, 1]);
        // the string starts at vertex 2: its head element sits there
        assert_eq!(r.map(1).image(), &[1]);
        assert!(r.map(0).is_zero());
        for n in 1..=5 {
            for i in 1..=2 {
                let r = build_i(&c2, n, i).unwrap();
                assert!(is_indecomposable(&r) && is_nilpotent_rep(&r));
                assert_eq!(r.total_dim(), n);
            }
        }
    }

    #[test]
    fn i_tilde_family() {
        let k = cycle_quiver(&[true, false]).unwrap();
        let r = build_i_tilde(&k, 1, 1).unwrap();
        assert_eq!(r.dims(), &[1, 1]);
        assert!(!r.map(0).is_zero() && !r.map(1).is_zero());
        let r = build_i_tilde(&k, 2, 1).unwrap();
        assert_eq!(r.dims(), &[2, 2]);
        assert!(is_indecomposable(&r));
        assert_eq!(gamma_of(&r).arrows.len(), 4);
        let c3 = cycle_quiver(&[true, true, true]).unwrap();
        assert_eq!(build_i_tilde(&c3, 1, 1), Err(Error::RequiresAcyclicCycle));
        let c3a = cycle_quiver(&[true, false, true]).unwrap();
        for i in 1..=3 {
            for w in 1..=2 {
                let r = build_i_tilde(&c3a, w, i).unwrap();
                assert!(is_indecomposable(&r) && is_nilpotent_rep(&r));
            }
        }
    }

    #[test]
    fn m_family() {
        let c2 = cycle_quiver(&[true, true]).unwrap();
        let m1 = build_m(&c2, 1).unwrap();
        assert_eq!(m1.dims(), &[1, 1]);
        assert!(m1.map(0).is_zero());
        assert_eq!(m1.map(1), &F1Map::identity(1));
        let m2 = build_m(&c2, 2).unwrap();
        assert_eq!(decompose(&m2).len(), 1);
        assert_eq!(build_m(&c2, 0).unwrap().total_dim(), 0);
        let keys: BTreeSet<CanonicalKey> = (1..=5).map(|n| rep_key(&build_m(&c2, n).unwrap())).collect();
        assert_eq!(keys.len(), 5);
    }

    fn l3_example() -> Representation {
        // a -1-> b, c -1-> d, a -2-> d, c -3-> b with a,b,c,d = 1,2,3,4
        Representation::from_images(loop_quiver(3), vec![4], vec![vec![2, 0, 4, 0], vec![4, 0, 0, 0], vec![0, 0, 2, 0]])
            .unwrap()
    }

    #[test]
    fn f_reduce_worked_example() {
        let f = f_reduce(&l3_example()).unwrap();
        assert_eq!(f.total_dim(), 8);
        // two 1-colored columns of length 4; the second color runs c -> b in
        // the top copy (1..4) and a -> d in the bottom copy (5..8)
        let expected = Representation::from_images(
            loop_quiver(2),
            vec![8],
            vec![vec![2, 5, 4, 7, 6, 0, 8, 0], vec![0, 0, 2, 0, 8, 0, 0, 0]],
        )
        .unwrap();
        assert_eq!(rep_key(&f), rep_key(&expected));
        assert!(is_indecomposable(&f));
    }

    #[test]
    fn f_reduce_simple_at_two_loops() {
        let s = Representation::simple(&loop_quiver(2), 0);
        let f = f_reduce(&s).unwrap();
        let chain = Representation::from_images(loop_quiver(1), vec![2], vec![vec![0, 1]]).unwrap();
        assert_eq!(rep_key(&f), rep_key(&chain));
        assert_eq!(f_reduce(&Representation::simple(&loop_quiver(1), 0)), Err(Error::TooFewLoops(1)));
    }

    #[test]
    fn f_reduce_doubles_dimension() {
        for n in [2, 3] {
            let q = loop_quiver(n);
            for d in 0..=3 {
                for m in enumerate_reps(&q, &[d], true).unwrap() {
                    let f = f_reduce(&m).unwrap();
                    assert_eq!(f.total_dim(), 2 * d);
                    assert!(is_nilpotent_rep(&f));
                }
            }
        }
    }

    #[test]
    fn embed_examples() {
        let a2 = path_quiver(&[true]);
        let s = Representation::simple(&a2, 1);
        let f = embed_l2(&s).unwrap();
        assert_eq!(f.total_dim(), 2);
        assert_eq!(f.quiver(), &loop_quiver(3));
        assert_eq!(f.map(1).image(), &[0, 1]);
        for m in enumerate_reps(&a2, &[1, 2], true).unwrap() {
            assert_eq!(embed_l2(&m).unwrap().total_dim(), 6);
        }
    }

    #[test]
    fn kronecker_example() {
        let k2 = Quiver::named("K2").unwrap();
        // elements 1,2 at vertex 0; 1 at vertex 1; alpha: 1 -> 1, beta: 2 -> 1
        let m = Representation::from_images(k2, vec![2, 1], vec![vec![1, 0], vec![0, 1]]).unwrap();
        let f = embed_l2(&m).unwrap();
        assert_eq!(f.total_dim(), 6);
        assert!(is_indecomposable(&f));
        let g = gamma_of(&f);
        let mut leaf_colors: Vec<usize> = g.arrows.iter().filter(|a| a.2 < 2).map(|a| a.2).collect();
        leaf_colors.sort();
        assert_eq!(leaf_colors, vec![0, 0, 1]);
    }

    #[test]
    fn rank_two_embedding() {
        let l2 = loop_quiver(2);
        let m = Representation::from_images(l2.clone(), vec![2], vec![vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(embed_rank2(&m, &l2).unwrap(), m);
        let theta = Quiver::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        let s = Representation::simple(&l2, 0);
        let f = embed_rank2(&s, &theta).unwrap();
        assert_eq!(f.dims(), &[1, 1]);
        assert_eq!(embed_rank2(&s, &cycle_quiver(&[true, true]).unwrap()), Err(Error::CycleRankTooSmall(1)));
        let reps: Vec<Representation> = (0..=2).flat_map(|d| enumerate_reps(&l2, &[d], true).unwrap()).collect();
        for a in &reps {
            for b in &reps {
                let fa = embed_rank2(a, &theta).unwrap();
                let fb = embed_rank2(b, &theta).unwrap();
                assert_eq!(hom_count(a, b).unwrap(), hom_count(&fa, &fb).unwrap());
            }
        }
    }

    #[test]
    fn nil_leq_examples() {
        let one = BigRational::from_integer(1.into());
        let two = BigRational::from_integer(2.into());
        let a2 = path_quiver(&[true]);
        let l1 = loop_quiver(1);
        let l2 = loop_quiver(2);
        assert!(nil_leq_check(&a2, &l1, 1, &two, 4));
        assert!(!nil_leq_check(&l2, &l1, 1, &one, 4));
        assert!(nil_leq_check(&l1, &l2, 1, &one, 5));
    }

    #[test]
    fn pseudotree_family_small() {
        let pt2 = Quiver::named("PT2").unwrap();
        for n in 1..=2 {
            let fam = pseudotree_family(&pt2, 2, 2, n).unwrap();
            let keys: BTreeSet<CanonicalKey> = fam.iter().map(rep_key).collect();
            assert_eq!(keys.len(), n);
            for r in &fam {
                assert_eq!(r.total_dim(), 6 * n);
                assert!(is_indecomposable(r) && is_nilpotent_rep(r));
            }
        }
    }
}
