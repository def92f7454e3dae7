//! Colored quivers of representations.
//!
//! The colored quiver of a representation has one vertex per nonzero
//! element, colored by the quiver vertex it lives at, and an arrow `x -> y`
//! colored `a` whenever the map on arrow `a` sends `x` to `y`.

use std::collections::VecDeque;
use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f1lin::F1Map;
use crate::quiver::Quiver;
use crate::rep::{self, is_nilpotent_rep, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredQuiver {
    pub quiver: Quiver,
    pub vertex_colors: Vec<usize>,
    /// `(source, target, arrow color)`.
    pub arrows: Vec<(usize, usize, usize)>,
}

/// Opaque isomorphism-class key; equal iff the colored quivers are chromatically isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<CanonicalKey> {
        let bytes = hex::decode(s).map_err(|e| Error::Parse(format!("bad key: {e}")))?;
        if bytes.len() < 4 || bytes.len() % 2 != 0 {
            return Err(Error::Parse("bad key length".into()));
        }
        Ok(CanonicalKey(bytes))
    }

    /// Number of vertices of the encoded colored quiver, i.e. total dimension.
    pub fn total_dim(&self) -> usize {
        u16::from_be_bytes([self.0[0], self.0[1]]) as usize
    }

    /// Decode the canonically labeled colored quiver over `q`.
    pub fn decode(&self, q: &Quiver) -> Result<ColoredQuiver> {
        let words: Vec<usize> = self.0.chunks(2).map(|c| u16::from_be_bytes([c[0], c[1]]) as usize).collect();
        let bad = || Error::Parse("malformed key".into());
        let n = *words.first().ok_or_else(bad)?;
        let colors = words.get(1..1 + n).ok_or_else(bad)?.to_vec();
        let m = *words.get(1 + n).ok_or_else(bad)?;
        let rest = words.get(2 + n..).ok_or_else(bad)?;
        if rest.len() != 3 * m {
            return Err(bad());
        }
        let arrows = rest.chunks(3).map(|c| (c[0], c[1], c[2])).collect();
        let g = ColoredQuiver { quiver: q.clone(), vertex_colors: colors, arrows };
        g.validate_colors()?;
        Ok(g)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalKey::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

const PALETTE: [&str; 6] = ["black", "blue", "red", "darkgreen", "orange", "purple"];
const STYLES: [&str; 3] = ["solid", "dotted", "dashed"];

impl ColoredQuiver {
    pub fn num_vertices(&self) -> usize {
        self.vertex_colors.len()
    }

    fn validate_colors(&self) -> Result<()> {
        let n = self.num_vertices();
        for (v, &c) in self.vertex_colors.iter().enumerate() {
            if c >= self.quiver.num_vertices() {
                return Err(Error::Inadmissible(format!("vertex {v} has unknown color {c}")));
            }
        }
        for &(s, t, c) in &self.arrows {
            if s >= n || t >= n {
                return Err(Error::Inadmissible(format!("arrow ({s},{t}) leaves the vertex range")));
            }
            if c >= self.quiver.num_arrows() {
                return Err(Error::Inadmissible(format!("arrow ({s},{t}) has unknown color {c}")));
            }
        }
        Ok(())
    }

    /// Color projection is a quiver map and every vertex has at most one
    /// outgoing and one incoming arrow of each color.
    fn check_local(&self) -> Result<()> {
        self.validate_colors()?;
        let n = self.num_vertices();
        let k = self.quiver.num_arrows();
        let mut out = vec![false; n * k];
        let mut inn = vec![false; n * k];
        for &(s, t, c) in &self.arrows {
            let (qs, qt) = self.quiver.arrows()[c];
            if self.vertex_colors[s] != qs || self.vertex_colors[t] != qt {
                return Err(Error::Inadmissible(format!(
                    "color projection is not a quiver map: arrow ({s},{t}) of color {c}"
                )));
            }
            if std::mem::replace(&mut out[s * k + c], true) {
                return Err(Error::Inadmissible(format!("vertex {s} has two outgoing arrows of color {c}")));
            }
            if std::mem::replace(&mut inn[t * k + c], true) {
                return Err(Error::Inadmissible(format!("vertex {t} has two incoming arrows of color {c}")));
            }
        }
        Ok(())
    }

    fn is_acyclic(&self) -> bool {
        let n = self.num_vertices();
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(s, t, _) in &self.arrows {
            indeg[t] += 1;
            succ[s].push(t);
        }
        let mut stack: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut seen = 0;
        while let Some(x) = stack.pop() {
            seen += 1;
            for &t in &succ[x] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == n
    }

    /// `Ok(())` if admissible, otherwise an error naming the failed condition.
    pub fn admissibility(&self) -> Result<()> {
        self.check_local()?;
        if !self.is_acyclic() {
            return Err(Error::Inadmissible("colored quiver has an oriented cycle".into()));
        }
        Ok(())
    }

    /// Swap arrow colors by `perm` (new color of `c` is `perm[c]`).
    pub fn recolor_arrows(&self, perm: &[usize]) -> ColoredQuiver {
        let arrows = self.arrows.iter().map(|&(s, t, c)| (s, t, perm[c])).collect();
        ColoredQuiver { quiver: self.quiver.clone(), vertex_colors: self.vertex_colors.clone(), arrows }
    }

    /// Element id of each vertex inside its Q-vertex.
    fn element_ids(&self) -> Vec<usize> {
        let mut next = vec![0usize; self.quiver.num_vertices()];
        self.vertex_colors
            .iter()
            .map(|&c| {
                next[c] += 1;
                next[c]
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let ids = self.element_ids();
        let mut s = String::from("digraph Gamma {\n  node [shape=circle];\n");
        for (v, &c) in self.vertex_colors.iter().enumerate() {
            let _ = writeln!(s, "  n{v} [label=\"{}\", qcolor={c}];", ids[v]);
        }
        for &(a, b, c) in &self.arrows {
            let _ = writeln!(
                s,
                "  n{a} -> n{b} [acolor={c}, color=\"{}\", style={}];",
                PALETTE[c % PALETTE.len()],
                STYLES[(c / PALETTE.len() + c) % STYLES.len()]
            );
        }
        s.push_str("}\n");
        s
    }
}

pub fn gamma_of(v: &Representation) -> ColoredQuiver {
    let q = v.quiver().clone();
    let vertex_colors = (0..q.num_vertices()).flat_map(|u| std::iter::repeat_n(u, v.dims()[u])).collect();
    let off = v.offsets();
    let mut arrows = Vec::new();
    for (a, f) in v.maps().iter().enumerate() {
        let (s, t) = q.arrows()[a];
        for (k, &j) in f.image().iter().enumerate() {
            if j != 0 {
                arrows.push((off[s] + k, off[t] + j - 1, a));
            }
        }
    }
    ColoredQuiver { quiver: q, vertex_colors, arrows }
}

pub fn check_admissible(g: &ColoredQuiver) -> bool {
    g.admissibility().is_ok()
}

/// The representation with colored quiver `g`. Requires admissibility.
pub fn rep_of(g: &ColoredQuiver) -> Result<Representation> {
    g.admissibility()?;
    rep_of_unchecked_cycles(g)
}

/// Like [`rep_of`] but accepts oriented cycles (non-nilpotent representations).
pub fn rep_of_unchecked_cycles(g: &ColoredQuiver) -> Result<Representation> {
    g.check_local()?;
    let q = &g.quiver;
    let ids = g.element_ids();
    let mut dims = vec![0usize; q.num_vertices()];
    for &c in &g.vertex_colors {
        dims[c] += 1;
    }
    let mut images: Vec<Vec<usize>> = q.arrows().iter().map(|&(s, _)| vec![0; dims[s]]).collect();
    for &(s, t, c) in &g.arrows {
        images[c][ids[s] - 1] = ids[t];
    }
    let maps = images
        .into_iter()
        .zip(q.arrows())
        .map(|(img, &(s, t))| F1Map::from_parts_unchecked(dims[s], dims[t], img))
        .collect();
    Representation::new(q.clone(), dims, maps)
}

fn push_word(buf: &mut Vec<u8>, w: usize) {
    let w = u16::try_from(w).expect("colored quiver too large for key encoding");
    buf.extend_from_slice(&w.to_be_bytes());
}

/// Canonical labeling of one connected component rooted at `root`: BFS
/// that visits neighbors by (direction, color). Each vertex has at most one
/// neighbor per (direction, color), so the root determines the labeling.
fn rooted_code(
    root: usize,
    colors: &[usize],
    adj: &[Vec<(u8, usize, usize)>],
    label: &mut [usize],
    order: &mut Vec<usize>,
) -> Vec<u8> {
    order.clear();
    label[root] = 0;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &(_, _, w) in &adj[u] {
            if label[w] == usize::MAX {
                label[w] = order.len();
                order.push(w);
            }
        }
    }
    let mut arrows: Vec<(usize, usize, usize)> = Vec::new();
    for &u in order.iter() {
        for &(dir, c, w) in &adj[u] {
            if dir == 0 {
                arrows.push((label[u], label[w], c));
            }
        }
    }
    arrows.sort_unstable();
    let mut code = Vec::with_capacity(4 + 2 * order.len() + 6 * arrows.len());
    push_word(&mut code, order.len());
    for &u in order.iter() {
        push_word(&mut code, colors[u]);
    }
    push_word(&mut code, arrows.len());
    for (s, t, c) in arrows {
        push_word(&mut code, s);
        push_word(&mut code, t);
        push_word(&mut code, c);
    }
    for &u in order.iter() {
        label[u] = usize::MAX;
    }
    code
}

/// Canonical labeling: returns `new_label[v]` for every vertex.
fn canonical_labeling(g: &ColoredQuiver) -> Result<Vec<usize>> {
    g.check_local()?;
    let n = g.num_vertices();
    // adjacency sorted by (direction, color); direction 0 = out, 1 = in
    let mut adj: Vec<Vec<(u8, usize, usize)>> = vec![Vec::new(); n];
    for &(s, t, c) in &g.arrows {
        adj[s].push((0, c, t));
        adj[t].push((1, c, s));
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    // components
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &(_, _, w) in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        comps.push(members);
    }
    let signature = |u: usize| {
        let sig: Vec<(u8, usize)> = adj[u].iter().map(|&(d, c, _)| (d, c)).collect();
        (g.vertex_colors[u], sig)
    };
    let mut label = vec![usize::MAX; n];
    let mut order = Vec::new();
    let mut best: Vec<(Vec<u8>, Vec<usize>)> = Vec::with_capacity(comps.len());
    for members in &comps {
        // roots restricted to the smallest local-signature class
        let min_sig = members.iter().map(|&u| signature(u)).min().expect("nonempty component");
        let mut winner: Option<(Vec<u8>, Vec<usize>)> = None;
        for &r in members {
            if signature(r) != min_sig {
                continue;
            }
            let code = rooted_code(r, &g.vertex_colors, &adj, &mut label, &mut order);
            if winner.as_ref().is_none_or(|(c, _)| code < *c) {
                winner = Some((code, order.clone()));
            }
        }
        best.push(winner.expect("some root"));
    }
    best.sort_by(|a, b| a.0.cmp(&b.0));
    let mut new_label = vec![0usize; n];
    let mut next = 0;
    for (_, order) in &best {
        for &u in order {
            new_label[u] = next;
            next += 1;
        }
    }
    Ok(new_label)
}

/// Relabel `g` canonically.
pub fn canonical_form(g: &ColoredQuiver) -> Result<ColoredQuiver> {
    let lab = canonical_labeling(g)?;
    let mut colors = vec![0usize; g.num_vertices()];
    for (v, &l) in lab.iter().enumerate() {
        colors[l] = g.vertex_colors[v];
    }
    let mut arrows: Vec<(usize, usize, usize)> = g.arrows.iter().map(|&(s, t, c)| (lab[s], lab[t], c)).collect();
    arrows.sort_unstable();
    Ok(ColoredQuiver { quiver: g.quiver.clone(), vertex_colors: colors, arrows })
}

/// Complete isomorphism invariant. Works for any colored quiver with at most
/// one arrow of each color in and out of every vertex, cyclic or not.
pub fn canonical_key(g: &ColoredQuiver) -> Result<CanonicalKey> {
    let c = canonical_form(g)?;
    let mut bytes = Vec::with_capacity(4 + 2 * c.num_vertices() + 6 * c.arrows.len());
    push_word(&mut bytes, c.num_vertices());
    for &col in &c.vertex_colors {
        push_word(&mut bytes, col);
    }
    push_word(&mut bytes, c.arrows.len());
    for &(s, t, col) in &c.arrows {
        push_word(&mut bytes, s);
        push_word(&mut bytes, t);
        push_word(&mut bytes, col);
    }
    Ok(CanonicalKey(bytes))
}

/// Key of a representation's colored quiver.
pub fn rep_key(v: &Representation) -> CanonicalKey {
    canonical_key(&gamma_of(v)).expect("colored quivers of representations are locally admissible")
}

/// The canonical representative of an isomorphism class.
pub fn key_rep(key: &CanonicalKey, q: &Quiver) -> Result<Representation> {
    rep_of_unchecked_cycles(&key.decode(q)?)
}

/// Count bijective chromatic maps from upward-closed full subquivers of the
/// colored quiver of `v` onto downward-closed full subquivers of that of `w`.
pub fn chromatic_homs(v: &Representation, w: &Representation) -> Result<u64> {
    if v.quiver() != w.quiver() {
        return Err(Error::QuiverMismatch);
    }
    if !is_nilpotent_rep(v) || !is_nilpotent_rep(w) {
        return Err(Error::NotNilpotent);
    }
    let gv = gamma_of(v);
    let gw = gamma_of(w);
    let (sv, pv) = adjacency(&gv);
    let (sw, pw) = adjacency(&gw);
    let ups = rep::closed_subsets(&strip(&pv), &strip(&sv));
    let downs = rep::closed_subsets(&strip(&sw), &strip(&pw));
    let ncol = v.quiver().num_vertices();
    let color_counts = |g: &ColoredQuiver, flags: &[bool]| {
        let mut c = vec![0usize; ncol];
        for (x, &f) in flags.iter().enumerate() {
            if f {
                c[g.vertex_colors[x]] += 1;
            }
        }
        c
    };
    let arrow_count =
        |g: &ColoredQuiver, flags: &[bool]| g.arrows.iter().filter(|&&(s, t, _)| flags[s] && flags[t]).count();
    let mut total = 0u64;
    for u in &ups {
        let cu = color_counts(&gv, u);
        let au = arrow_count(&gv, u);
        let members: Vec<usize> = (0..u.len()).filter(|&x| u[x]).collect();
        for d in &downs {
            if color_counts(&gw, d) != cu || arrow_count(&gw, d) != au {
                continue;
            }
            total += count_isos(&gv, &gw, &members, d, &sv, &sw);
        }
    }
    Ok(total)
}

type Adj = Vec<Vec<(usize, usize)>>;

fn adjacency(g: &ColoredQuiver) -> (Adj, Adj) {
    let n = g.num_vertices();
    let mut succ = vec![Vec::new(); n];
    let mut pred = vec![Vec::new(); n];
    for &(s, t, c) in &g.arrows {
        succ[s].push((c, t));
        pred[t].push((c, s));
    }
    (succ, pred)
}

fn strip(a: &Adj) -> Vec<Vec<usize>> {
    a.iter().map(|l| l.iter().map(|&(_, x)| x).collect()).collect()
}

/// Chromatic bijections `members -> d` mapping every arrow inside `members`
/// onto an arrow inside `d` (arrow counts already agree).
fn count_isos(gv: &ColoredQuiver, gw: &ColoredQuiver, members: &[usize], d: &[bool], sv: &Adj, sw: &Adj) -> u64 {
    let n = gv.num_vertices();
    let mut pos_of = vec![usize::MAX; n];
    for (i, &x) in members.iter().enumerate() {
        pos_of[x] = i;
    }
    let targets: Vec<usize> = (0..d.len()).filter(|&y| d[y]).collect();
    let mut assign = vec![usize::MAX; members.len()];
    let mut used = vec![false; gw.num_vertices()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        members: &[usize],
        targets: &[usize],
        gv: &ColoredQuiver,
        gw: &ColoredQuiver,
        pos_of: &[usize],
        sv: &Adj,
        sw: &Adj,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> u64 {
        if i == members.len() {
            return 1;
        }
        let x = members[i];
        let mut count = 0;
        for &y in targets {
            if used[y] || gw.vertex_colors[y] != gv.vertex_colors[x] {
                continue;
            }
            assign[i] = y;
            // every arrow between x and an earlier member must be matched
            let ok = sv[x].iter().all(|&(c, z)| {
                let p = pos_of[z];
                p == usize::MAX || p > i || sw[y].contains(&(c, if p == i { y } else { assign[p] }))
            }) && members[..i]
                .iter()
                .enumerate()
                .all(|(p, &z)| sv[z].iter().all(|&(c, t)| t != x || sw[assign[p]].contains(&(c, y))));
            if ok {
                used[y] = true;
                count += rec(i + 1, members, targets, gv, gw, pos_of, sv, sw, assign, used);
                used[y] = false;
            }
        }
        assign[i] = usize::MAX;
        count
    }
    rec(0, members, &targets, gv, gw, &pos_of, sv, sw, &mut assign, &mut used)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::quiver::{cycle_quiver, loop_quiver, path_quiver};
    use crate::rep::{find_isomorphism, hom_count};

    pub(crate) fn example_v() -> Representation {
        // f1(n) = n-1, f2(n) = n-2
        Representation::from_images(loop_quiver(2), vec![3], vec![vec![0, 1, 2], vec![0, 0, 1]]).unwrap()
    }

    pub(crate) fn example_w() -> Representation {
        // g1 = f2, g2(n) = n+1 on {1,2}
        Representation::from_images(loop_quiver(2), vec![3], vec![vec![0, 0, 1], vec![2, 3, 0]]).unwrap()
    }

    fn jordan(images: &[usize]) -> Representation {
        Representation::from_images(loop_quiver(1), vec![images.len()], vec![images.to_vec()]).unwrap()
    }

    fn all_reps(q: &Quiver, max: usize) -> Vec<Representation> {
        crate::enumerate::all_tuples(q, max)
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_of(&Representation::zero(&loop_quiver(2))).num_vertices(), 0);
        let g = gamma_of(&example_v());
        assert_eq!(g.vertex_colors, vec![0, 0, 0]);
        let mut arrows = g.arrows.clone();
        arrows.sort();
        // 2 -> 1 and 3 -> 2 of the first color, 3 -> 1 of the second (0-based)
        assert_eq!(arrows, vec![(1, 0, 0), (2, 0, 1), (2, 1, 0)]);
        let g = gamma_of(&jordan(&[0, 1, 2]));
        assert_eq!(g.arrows, vec![(1, 0, 0), (2, 1, 0)]);
    }

    #[test]
    fn admissibility_examples() {
        assert!(check_admissible(&gamma_of(&example_v())));
        let q = loop_quiver(1);
        let looped = ColoredQuiver { quiver: q.clone(), vertex_colors: vec![0], arrows: vec![(0, 0, 0)] };
        assert!(!check_admissible(&looped));
        assert!(matches!(rep_of(&looped), Err(Error::Inadmissible(_))));
        let fork = ColoredQuiver { quiver: q.clone(), vertex_colors: vec![0; 3], arrows: vec![(0, 1, 0), (0, 2, 0)] };
        assert!(!check_admissible(&fork));
        let a2 = path_quiver(&[true]);
        let wrong_way = ColoredQuiver { quiver: a2, vertex_colors: vec![0, 1], arrows: vec![(1, 0, 0)] };
        assert!(!check_admissible(&wrong_way));
    }

    #[test]
    fn admissible_for_every_nilpotent_rep() {
        let quivers =
            [loop_quiver(1), loop_quiver(2), path_quiver(&[true, true]), cycle_quiver(&[true, true, false]).unwrap()];
        for q in &quivers {
            for r in all_reps(q, 5) {
                let g = gamma_of(&r);
                assert_eq!(is_nilpotent_rep(&r), check_admissible(&g));
                if !is_nilpotent_rep(&r) {
                    continue;
                }
                // degree bounds and sources = sinks per color
                for x in 0..g.num_vertices() {
                    let c = g.vertex_colors[x];
                    let out = g.arrows.iter().filter(|a| a.0 == x).count();
                    let inn = g.arrows.iter().filter(|a| a.1 == x).count();
                    assert!(out <= q.out_degree(c) && inn <= q.in_degree(c));
                }
                for a in 0..q.num_arrows() {
                    let (qs, qt) = q.arrows()[a];
                    let sources = (0..g.num_vertices())
                        .filter(|&x| g.vertex_colors[x] == qs && !g.arrows.iter().any(|e| e.1 == x && e.2 == a))
                        .count();
                    let sinks = (0..g.num_vertices())
                        .filter(|&x| g.vertex_colors[x] == qt && !g.arrows.iter().any(|e| e.0 == x && e.2 == a))
                        .count();
                    // for loops both counts range over the same vertex set
                    if qs == qt {
                        assert_eq!(sources, sinks);
                    }
                }
                let back = rep_of(&g).unwrap();
                assert_eq!(back, r);
            }
        }
    }

    #[test]
    fn rep_of_examples() {
        let empty = ColoredQuiver { quiver: loop_quiver(1), vertex_colors: vec![], arrows: vec![] };
        assert_eq!(rep_of(&empty).unwrap().total_dim(), 0);
        let path =
            ColoredQuiver { quiver: loop_quiver(1), vertex_colors: vec![0; 3], arrows: vec![(1, 0, 0), (2, 1, 0)] };
        assert_eq!(rep_of(&path).unwrap(), jordan(&[0, 1, 2]));
        // the second example closes an oriented 3-cycle, so only the
        // cycle-tolerant inverse applies
        let gw = gamma_of(&example_w());
        assert!(matches!(rep_of(&gw), Err(Error::Inadmissible(_))));
        let w = rep_of_unchecked_cycles(&gw).unwrap();
        assert_eq!(w.map(1).image(), &[2, 3, 0]);
        assert_eq!(w, example_w());
    }

    #[test]
    fn keys() {
        let v = example_v();
        let w = example_w();
        assert_ne!(rep_key(&v), rep_key(&w));
        for p in [vec![1, 2, 3], vec![3, 2, 1], vec![2, 3, 1], vec![1, 3, 2]] {
            assert_eq!(rep_key(&v.relabel(std::slice::from_ref(&p)).unwrap()), rep_key(&v));
        }
        let g = gamma_of(&v);
        let k = canonical_key(&g).unwrap();
        assert_eq!(canonical_key(&gamma_of(&rep_of(&g).unwrap())).unwrap(), k);
        assert_eq!(rep_key(&key_rep(&k, v.quiver()).unwrap()), k);
        assert_eq!(CanonicalKey::from_hex(&k.to_hex()).unwrap(), k);
        assert_eq!(k.total_dim(), 3);
    }

    #[test]
    fn keys_decide_isomorphism() {
        let quivers =
            [loop_quiver(1), loop_quiver(2), path_quiver(&[true, false]), cycle_quiver(&[true, true]).unwrap()];
        for q in &quivers {
            for n in 0..=3 {
                let reps: Vec<Representation> = all_reps(q, n).into_iter().filter(|r| r.total_dim() == n).collect();
                let keys: Vec<CanonicalKey> = reps.iter().map(rep_key).collect();
                for i in 0..reps.len() {
                    for j in i..reps.len() {
                        let iso = find_isomorphism(&reps[i], &reps[j]).unwrap().is_some();
                        assert_eq!(iso, keys[i] == keys[j], "{:?} vs {:?}", reps[i], reps[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn keys_on_dim_four_loops() {
        // dimension 4 on one and two loops, grouped by key versus orbit search
        for q in [loop_quiver(1), loop_quiver(2)] {
            let reps: Vec<Representation> = all_reps(&q, 4).into_iter().filter(|r| r.total_dim() == 4).collect();
            let mut reps_by_key: std::collections::BTreeMap<CanonicalKey, Representation> = Default::default();
            for r in &reps {
                let k = rep_key(r);
                match reps_by_key.get(&k) {
                    Some(rep) => assert!(find_isomorphism(rep, r).unwrap().is_some()),
                    None => {
                        reps_by_key.insert(k, r.clone());
                    }
                }
            }
            let classes: Vec<&Representation> = reps_by_key.values().collect();
            for i in 0..classes.len() {
                for j in i + 1..classes.len() {
                    assert!(find_isomorphism(classes[i], classes[j]).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn chromatic_hom_examples() {
        let s = jordan(&[0]);
        let c2 = jordan(&[0, 1]);
        assert_eq!(chromatic_homs(&s, &s).unwrap(), 2);
        assert_eq!(chromatic_homs(&c2, &s).unwrap(), 2);
        let zero = Representation::zero(&loop_quiver(1));
        assert_eq!(chromatic_homs(&zero, &c2).unwrap(), 1);
        assert_eq!(chromatic_homs(&jordan(&[1]), &s), Err(Error::NotNilpotent));
    }

    #[test]
    fn chromatic_homs_match_hom_sets() {
        let quivers = [loop_quiver(1), loop_quiver(2), path_quiver(&[true]), cycle_quiver(&[true, false]).unwrap()];
        for q in &quivers {
            let reps: Vec<Representation> = all_reps(q, 4).into_iter().filter(is_nilpotent_rep).collect();
            let mut seen = std::collections::BTreeSet::new();
            let reps: Vec<Representation> = reps.into_iter().filter(|r| seen.insert(rep_key(r))).collect();
            for v in &reps {
                for w in &reps {
                    if v.total_dim() + w.total_dim() > 4 {
                        continue;
                    }
                    assert_eq!(chromatic_homs(v, w).unwrap(), hom_count(v, w).unwrap(), "{v:?} -> {w:?}");
                }
            }
        }
    }

    #[test]
    fn dot_export() {
        let dot = gamma_of(&example_v()).to_dot();
        assert!(dot.contains("n2 -> n0 [acolor=1"));
        assert!(dot.contains("qcolor=0"));
    }
}
