//! Representations of a quiver over F1 and their morphisms.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f1lin::{self, F1Map};
use crate::quiver::{DimVector, Quiver};

/// A representation: one pointed set per vertex and one partial injection per arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRep", into = "RawRep")]
pub struct Representation {
    quiver: Quiver,
    dims: DimVector,
    maps: Vec<F1Map>,
}

#[derive(Serialize, Deserialize)]
struct RawRep {
    quiver: Quiver,
    dims: DimVector,
    #[serde(default)]
    maps: BTreeMap<String, F1Map>,
}

impl TryFrom<RawRep> for Representation {
    type Error = Error;
    fn try_from(raw: RawRep) -> Result<Self> {
        let mut maps: Vec<Option<F1Map>> = vec![None; raw.quiver.num_arrows()];
        for (k, f) in raw.maps {
            let i: usize = k.parse().map_err(|_| Error::Parse(format!("arrow index `{k}` is not a number")))?;
            let slot =
                maps.get_mut(i).ok_or_else(|| Error::InvalidRepresentation(format!("arrow {i} does not exist")))?;
            *slot = Some(f);
        }
        // omitted arrows act by zero
        let maps = maps
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                f.unwrap_or_else(|| {
                    let (s, t) = raw.quiver.arrows()[i];
                    F1Map::zero(raw.dims.get(s).copied().unwrap_or(0), raw.dims.get(t).copied().unwrap_or(0))
                })
            })
            .collect();
        Representation::new(raw.quiver, raw.dims, maps)
    }
}

impl From<Representation> for RawRep {
    fn from(r: Representation) -> Self {
        let maps = r.maps.into_iter().enumerate().map(|(i, f)| (i.to_string(), f)).collect();
        RawRep { quiver: r.quiver, dims: r.dims, maps }
    }
}

/// A morphism of representations, given by its vertex components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism {
    pub components: Vec<F1Map>,
}

impl Morphism {
    pub fn is_injective(&self) -> bool {
        self.components.iter().all(F1Map::is_injective)
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(F1Map::is_surjective)
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(F1Map::is_bijective)
    }

    /// Per-vertex image sets.
    pub fn image(&self) -> Vec<Vec<usize>> {
        self.components.iter().map(F1Map::image_set).collect()
    }

    /// Per-vertex kernels, nonzero elements only.
    pub fn kernel(&self) -> Vec<Vec<usize>> {
        self.components.iter().map(F1Map::kernel).collect()
    }
}

/// A subrepresentation, as sorted per-vertex subsets of nonzero elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubRep {
    pub subsets: Vec<Vec<usize>>,
}

impl SubRep {
    pub fn dims(&self) -> DimVector {
        self.subsets.iter().map(Vec::len).collect()
    }
}

impl Representation {
    pub fn new(quiver: Quiver, dims: DimVector, maps: Vec<F1Map>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "{} dims for {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        if maps.len() != quiver.num_arrows() {
            return Err(Error::DimensionMismatch(format!("{} maps for {} arrows", maps.len(), quiver.num_arrows())));
        }
        for (i, (f, &(s, t))) in maps.iter().zip(quiver.arrows()).enumerate() {
            if f.src_dim() != dims[s] || f.tgt_dim() != dims[t] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {i} needs a map [{}] -> [{}], got [{}] -> [{}]",
                    dims[s],
                    dims[t],
                    f.src_dim(),
                    f.tgt_dim()
                )));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    /// Build from raw image arrays, one per arrow.
    pub fn from_images(quiver: Quiver, dims: DimVector, images: Vec<Vec<usize>>) -> Result<Self> {
        if images.len() != quiver.num_arrows() {
            return Err(Error::DimensionMismatch(format!("{} maps for {} arrows", images.len(), quiver.num_arrows())));
        }
        if dims.len() != quiver.num_vertices() {
            return Err(Error::DimensionMismatch(format!(
                "{} dims for {} vertices",
                dims.len(),
                quiver.num_vertices()
            )));
        }
        let maps = images
            .into_iter()
            .zip(quiver.arrows())
            .map(|(img, &(s, t))| F1Map::new(dims[s], dims[t], img))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(quiver, dims, maps)
    }

    /// The zero representation.
    pub fn zero(quiver: &Quiver) -> Self {
        let dims = vec![0; quiver.num_vertices()];
        let maps = vec![F1Map::zero(0, 0); quiver.num_arrows()];
        Representation { quiver: quiver.clone(), dims, maps }
    }

    /// The simple representation at vertex `v`.
    pub fn simple(quiver: &Quiver, v: usize) -> Self {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[v] = 1;
        let maps = quiver.arrows().iter().map(|&(s, t)| F1Map::zero(dims[s], dims[t])).collect();
        Representation { quiver: quiver.clone(), dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[F1Map] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &F1Map {
        &self.maps[arrow]
    }

    /// Offset of vertex `v`'s elements in the global numbering `0..total_dim`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    /// Successor lists in the global numbering: `(arrow, target)` pairs.
    pub(crate) fn global_successors(&self) -> Vec<Vec<(usize, usize)>> {
        let off = self.offsets();
        let mut succ = vec![Vec::new(); self.total_dim()];
        for (a, f) in self.maps.iter().enumerate() {
            let (s, t) = self.quiver.arrows()[a];
            for (k, &j) in f.image().iter().enumerate() {
                if j != 0 {
                    succ[off[s] + k].push((a, off[t] + j - 1));
                }
            }
        }
        succ
    }

    /// Restrict to the elements flagged in `keep`; images that leave the
    /// kept set are sent to the basepoint.
    pub(crate) fn induced(&self, keep: &[Vec<bool>]) -> Representation {
        let renumber: Vec<Vec<usize>> = keep
            .iter()
            .map(|flags| {
                let mut next = 0;
                flags
                    .iter()
                    .map(|&b| {
                        if b {
                            next += 1;
                            next
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let dims: DimVector = keep.iter().map(|f| f.iter().filter(|&&b| b).count()).collect();
        let maps = self
            .maps
            .iter()
            .zip(self.quiver.arrows())
            .map(|(f, &(s, t))| {
                let image = f
                    .image()
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| keep[s][k])
                    .map(|(_, &j)| if j == 0 { 0 } else { renumber[t][j - 1] })
                    .collect();
                F1Map::from_parts_unchecked(dims[s], dims[t], image)
            })
            .collect();
        Representation { quiver: self.quiver.clone(), dims, maps }
    }

    /// Apply per-vertex bijections `perm[v][k-1] = new label of k`.
    pub fn relabel(&self, perm: &[Vec<usize>]) -> Result<Representation> {
        let mut inv = Vec::with_capacity(perm.len());
        for (v, p) in perm.iter().enumerate() {
            let f = F1Map::new(self.dims[v], self.dims[v], p.clone())?;
            if !f.is_bijective() {
                return Err(Error::InvalidPermutation(format!("vertex {v}: {p:?}")));
            }
            inv.push(f);
        }
        if inv.len() != self.dims.len() {
            return Err(Error::InvalidPermutation("one permutation per vertex required".into()));
        }
        let maps = self
            .maps
            .iter()
            .zip(self.quiver.arrows())
            .map(|(f, &(s, t))| {
                let back = inv[s].inverse().expect("bijective");
                f1lin::compose(&inv[t], &f1lin::compose(f, &back)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.quiver.clone(), self.dims.clone(), maps)
    }
}

/// True iff the colored quiver of `v` is acyclic.
pub fn is_nilpotent_rep(v: &Representation) -> bool {
    let succ = v.global_successors();
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in &succ {
        for &(_, t) in s {
            indeg[t] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut seen = 0;
    while let Some(x) = stack.pop() {
        seen += 1;
        for &(_, t) in &succ[x] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                stack.push(t);
            }
        }
    }
    seen == n
}

pub fn direct_sum_rep(v: &Representation, w: &Representation) -> Result<Representation> {
    if v.quiver != w.quiver {
        return Err(Error::QuiverMismatch);
    }
    let dims = v.dims.iter().zip(&w.dims).map(|(a, b)| a + b).collect();
    let maps = v.maps.iter().zip(&w.maps).map(|(f, g)| f1lin::direct_sum(f, g)).collect();
    Representation::new(v.quiver.clone(), dims, maps)
}

/// Direct sum of a list of representations on `q`.
pub fn direct_sum_all(q: &Quiver, parts: &[Representation]) -> Result<Representation> {
    parts.iter().try_fold(Representation::zero(q), |acc, p| direct_sum_rep(&acc, p))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum HomKind {
    Any,
    Injective,
    Bijective,
}

/// Backtracking over element images in global order. Calls `visit` on every
/// complete assignment, in lexicographic order of the component arrays.
fn search_homs(v: &Representation, w: &Representation, kind: HomKind, visit: &mut dyn FnMut(&[usize])) {
    let q = &v.quiver;
    let voff = v.offsets();
    let n = v.total_dim();
    let vertex_of: Vec<usize> = (0..q.num_vertices()).flat_map(|u| std::iter::repeat_n(u, v.dims[u])).collect();
    // per global element: outgoing arrows (arrow, global target or None for zero)
    let mut out: Vec<Vec<(usize, Option<usize>)>> = vec![Vec::new(); n];
    for (a, f) in v.maps.iter().enumerate() {
        let (s, t) = q.arrows()[a];
        for (k, &j) in f.image().iter().enumerate() {
            out[voff[s] + k].push((a, if j == 0 { None } else { Some(voff[t] + j - 1) }));
        }
    }
    // constraints checked once both ends are assigned: index by the later one
    let mut checks: Vec<Vec<(usize, usize, Option<usize>)>> = vec![Vec::new(); n];
    for (x, arrows) in out.iter().enumerate() {
        for &(a, y) in arrows {
            let later = y.map_or(x, |y| y.max(x));
            checks[later].push((x, a, y));
        }
    }
    let mut assign = vec![0usize; n]; // local image in w, 0 = basepoint
    let mut used: Vec<Vec<bool>> = w.dims.iter().map(|&d| vec![false; d + 1]).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        n: usize,
        w: &Representation,
        kind: HomKind,
        vertex_of: &[usize],
        checks: &[Vec<(usize, usize, Option<usize>)>],
        assign: &mut Vec<usize>,
        used: &mut Vec<Vec<bool>>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if pos == n {
            visit(assign);
            return;
        }
        let u = vertex_of[pos];
        let lo = if kind == HomKind::Any { 0 } else { 1 };
        for img in lo..=w.dims[u] {
            if img != 0 && used[u][img] {
                continue;
            }
            assign[pos] = img;
            let ok = checks[pos].iter().all(|&(x, a, y)| {
                // w_a(phi(x)) == phi(v_a(x))
                let lhs = w.maps[a].apply(assign[x]);
                let rhs = y.map_or(0, |y| assign[y]);
                lhs == rhs
            });
            if !ok {
                continue;
            }
            if img != 0 {
                used[u][img] = true;
            }
            rec(pos + 1, n, w, kind, vertex_of, checks, assign, used, visit);
            if img != 0 {
                used[u][img] = false;
            }
        }
        assign[pos] = 0;
    }
    if kind == HomKind::Bijective && v.dims != w.dims {
        return;
    }
    rec(0, n, w, kind, &vertex_of, &checks, &mut assign, &mut used, visit);
}

fn morphism_from(v: &Representation, w: &Representation, assign: &[usize]) -> Morphism {
    let voff = v.offsets();
    let components = (0..v.quiver.num_vertices())
        .map(|u| {
            let image = assign[voff[u]..voff[u] + v.dims[u]].to_vec();
            F1Map::from_parts_unchecked(v.dims[u], w.dims[u], image)
        })
        .collect();
    Morphism { components }
}

/// All morphisms `v -> w`, lexicographic in the component image arrays.
pub fn hom_set(v: &Representation, w: &Representation) -> Result<Vec<Morphism>> {
    if v.quiver != w.quiver {
        return Err(Error::QuiverMismatch);
    }
    let mut out = Vec::new();
    search_homs(v, w, HomKind::Any, &mut |a| out.push(morphism_from(v, w, a)));
    Ok(out)
}

pub fn hom_count(v: &Representation, w: &Representation) -> Result<u64> {
    if v.quiver != w.quiver {
        return Err(Error::QuiverMismatch);
    }
    let mut count = 0u64;
    search_homs(v, w, HomKind::Any, &mut |_| count += 1);
    Ok(count)
}

/// All injective morphisms `v -> w`.
pub fn injections(v: &Representation, w: &Representation) -> Result<Vec<Morphism>> {
    if v.quiver != w.quiver {
        return Err(Error::QuiverMismatch);
    }
    let mut out = Vec::new();
    search_homs(v, w, HomKind::Injective, &mut |a| out.push(morphism_from(v, w, a)));
    Ok(out)
}

/// Some isomorphism `v -> w`, found by search over `GL_d(F1)`.
pub fn find_isomorphism(v: &Representation, w: &Representation) -> Result<Option<Morphism>> {
    if v.quiver != w.quiver {
        return Err(Error::QuiverMismatch);
    }
    let mut found = None;
    search_homs(v, w, HomKind::Bijective, &mut |a| {
        if found.is_none() {
            found = Some(morphism_from(v, w, a));
        }
    });
    Ok(found)
}

pub fn aut_count(r: &Representation) -> u64 {
    let mut count = 0u64;
    search_homs(r, r, HomKind::Bijective, &mut |_| count += 1);
    count
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Unknown,
    In,
    Out,
}

/// Enumerate subsets of `0..n` closed under `succ` (successor-closed sets),
/// deciding elements in order with the "out" branch first.
pub(crate) fn closed_subsets(succ: &[Vec<usize>], pred: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let n = succ.len();
    let mut out = Vec::new();
    fn propagate(start: usize, to: Mark, edges: &[Vec<usize>], marks: &mut [Mark], trail: &mut Vec<usize>) -> bool {
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            match marks[x] {
                m if m == to => continue,
                Mark::Unknown => {
                    marks[x] = to;
                    trail.push(x);
                    stack.extend(edges[x].iter().copied());
                }
                _ => return false,
            }
        }
        true
    }
    fn rec(succ: &[Vec<usize>], pred: &[Vec<usize>], marks: &mut Vec<Mark>, out: &mut Vec<Vec<bool>>) {
        let Some(x) = marks.iter().position(|&m| m == Mark::Unknown) else {
            out.push(marks.iter().map(|&m| m == Mark::In).collect());
            return;
        };
        for (to, edges) in [(Mark::Out, pred), (Mark::In, succ)] {
            let mut trail = Vec::new();
            if propagate(x, to, edges, marks, &mut trail) {
                rec(succ, pred, marks, out);
            }
            for y in trail {
                marks[y] = Mark::Unknown;
            }
        }
    }
    let mut marks = vec![Mark::Unknown; n];
    rec(succ, pred, &mut marks, &mut out);
    out
}

fn split_global(r: &Representation, flags: &[bool]) -> Vec<Vec<bool>> {
    let off = r.offsets();
    (0..r.dims.len()).map(|u| flags[off[u]..off[u] + r.dims[u]].to_vec()).collect()
}

/// All subrepresentations, closure propagated element by element.
pub fn subrepresentations(r: &Representation) -> Vec<SubRep> {
    let succ: Vec<Vec<usize>> =
        r.global_successors().into_iter().map(|s| s.into_iter().map(|(_, t)| t).collect()).collect();
    let mut pred = vec![Vec::new(); succ.len()];
    for (x, s) in succ.iter().enumerate() {
        for &y in s {
            pred[y].push(x);
        }
    }
    closed_subsets(&succ, &pred)
        .into_iter()
        .map(|flags| {
            let subsets = split_global(r, &flags)
                .into_iter()
                .map(|f| f.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k + 1).collect())
                .collect();
            SubRep { subsets }
        })
        .collect()
}

fn membership(r: &Representation, s: &SubRep) -> Result<Vec<Vec<bool>>> {
    if s.subsets.len() != r.dims.len() {
        return Err(Error::InvalidSubrep("one subset per vertex required".into()));
    }
    let mut inside: Vec<Vec<bool>> = r.dims.iter().map(|&d| vec![false; d]).collect();
    for (u, set) in s.subsets.iter().enumerate() {
        for &k in set {
            if k == 0 || k > r.dims[u] {
                return Err(Error::InvalidSubrep(format!("element {k} not in vertex {u}")));
            }
            inside[u][k - 1] = true;
        }
    }
    for (a, f) in r.maps.iter().enumerate() {
        let (s_, t) = r.quiver.arrows()[a];
        for (k, &j) in f.image().iter().enumerate() {
            if inside[s_][k] && j != 0 && !inside[t][j - 1] {
                return Err(Error::InvalidSubrep(format!("arrow {a} sends {} out of the subset", k + 1)));
            }
        }
    }
    Ok(inside)
}

/// The subrepresentation as a representation in its own right.
pub fn subrep_rep(r: &Representation, s: &SubRep) -> Result<Representation> {
    Ok(r.induced(&membership(r, s)?))
}

pub fn quotient(r: &Representation, s: &SubRep) -> Result<Representation> {
    let inside = membership(r, s)?;
    let keep: Vec<Vec<bool>> = inside.iter().map(|f| f.iter().map(|b| !b).collect()).collect();
    Ok(r.induced(&keep))
}

/// Connected components of the colored quiver, as global element flags,
/// ordered by smallest element.
pub(crate) fn gamma_components(r: &Representation) -> Vec<Vec<bool>> {
    let n = r.total_dim();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (x, s) in r.global_successors().iter().enumerate() {
        for &(_, y) in s {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<bool>> = BTreeMap::new();
    for x in 0..n {
        let root = find(&mut parent, x);
        comps.entry(root).or_insert_with(|| vec![false; n])[x] = true;
    }
    comps.into_values().collect()
}

/// Indecomposable summands, one per connected component of the colored quiver.
pub fn decompose(r: &Representation) -> Vec<Representation> {
    gamma_components(r).iter().map(|flags| r.induced(&split_global(r, flags))).collect()
}

pub fn is_indecomposable(r: &Representation) -> bool {
    r.total_dim() > 0 && gamma_components(r).len() == 1
}
