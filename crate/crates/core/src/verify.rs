//! Named verification suites with machine-readable reports.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::colored::{key_rep, rep_key, CanonicalKey};
use crate::corr::{admits_grading, enumerate_shapes, extension_witness, maps_commute, rep_to_shape, shape_to_rep};
use crate::enumerate::{
    build_i, build_i_tilde, delete_loop, embed_l2, enumerate_reps, f_reduce, indecomposables, ni,
    ni_by_colored_quivers, pseudotree_family,
};
use crate::error::{Error, Result};
use crate::hall::{aut_count, hall_coeff, ses_count, sigma_twist, HallAlgebra, HallElement, IsoClass};
use crate::quiver::{cycle_orientation, loop_quiver, Quiver};
use crate::rep::{direct_sum_rep, is_indecomposable, is_nilpotent_rep};

pub const SUITES: &[&str] = &[
    "l1-growth",
    "finite-type-trees",
    "cycle-classification",
    "loop-reduction",
    "f-construction",
    "upper-bound",
    "hall",
    "skew",
    "ses-counterexample",
    "pseudotree",
];

pub const ASYMPTOTIC_NOTE: &str = "growth relations between quivers are asymptotic; \
these checks cover finite prefixes and explicit constructions only";

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub note: String,
}

impl Report {
    fn new(suite: &str, checks: Vec<Check>) -> Report {
        Report { suite: suite.into(), pass: checks.iter().all(|c| c.pass), checks, note: ASYMPTOTIC_NOTE.into() }
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

fn check(name: impl Into<String>, pass: bool, detail: Value) -> Check {
    Check { name: name.into(), pass, detail }
}

/// Optional overrides; each suite has its own defaults.
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub quiver: Option<Quiver>,
    pub dim_cap: Option<usize>,
    pub max: Option<usize>,
    /// Run the optional long checks as well.
    pub long: bool,
}

pub fn run_suite(name: &str, p: &Params) -> Result<Vec<Report>> {
    let one = |r: Result<Report>| r.map(|r| vec![r]);
    match name {
        "l1-growth" => one(l1_growth(p.max.unwrap_or(8))),
        "finite-type-trees" => one(finite_type_trees(p.max.unwrap_or(8))),
        "cycle-classification" => one(cycle_classification(p.max.unwrap_or(6))),
        "loop-reduction" => one(loop_reduction(p.max.unwrap_or(4))),
        "f-construction" => one(f_construction(p.dim_cap.unwrap_or(3))),
        "upper-bound" => one(upper_bound(p.dim_cap.unwrap_or(3))),
        "hall" => match &p.quiver {
            Some(q) => one(hall_suite(q, p.dim_cap.unwrap_or(3))),
            None => Ok(vec![hall_suite(&loop_quiver(1), 4)?, hall_suite(&loop_quiver(2), 3)?]),
        },
        "skew" => one(skew(p.dim_cap.unwrap_or(5), p.max.unwrap_or(8))),
        "ses-counterexample" => one(ses_counterexample()),
        "pseudotree" => one(pseudotree(p.max.unwrap_or(if p.long { 2 } else { 1 }))),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                out.extend(run_suite(s, &Params { long: p.long, ..Params::default() })?);
            }
            Ok(out)
        }
        _ => Err(Error::Parse(format!("unknown suite `{name}`; expected one of {}, all", SUITES.join(", ")))),
    }
}

pub fn l1_growth(max: usize) -> Result<Report> {
    let l1 = loop_quiver(1);
    let values: Vec<usize> = (1..=max).map(|n| ni(&l1, n)).collect();
    let checks = vec![check(format!("NI_L1(n) = 1 for n = 1..{max}"), values.iter().all(|&v| v == 1), json!(values))];
    Ok(Report::new("l1-growth", checks))
}

pub fn finite_type_trees(max: usize) -> Result<Report> {
    let mut checks = Vec::new();
    for name in ["A2:+", "A2:-", "A3:++", "A3:+-", "A3:-+", "A3:--", "S3"] {
        let q = Quiver::named(name)?;
        // an indecomposable over a tree has dimension at most 1 at each vertex
        let top = q.num_vertices();
        let values: Vec<usize> = (1..=max).map(|n| ni(&q, n)).collect();
        let pass = values[top - 1] >= 1 && values[top..].iter().all(|&v| v == 0);
        checks.push(check(format!("{name}: NI = 0 for n = {}..{max}", top + 1), pass, json!(values)));
    }
    for name in ["C2", "C3"] {
        let q = Quiver::named(name)?;
        let mut values = Vec::new();
        let mut pass = true;
        for n in 1..=max {
            // the string I_[n,1] witnesses NI >= 1; brute force where cheap
            let w = build_i(&q, n, 1)?;
            let ok = is_indecomposable(&w) && is_nilpotent_rep(&w) && w.total_dim() == n;
            let count = if n <= 5 { Some(ni(&q, n)) } else { None };
            pass &= ok && count.is_none_or(|c| c >= 1);
            values.push(json!({"n": n, "witness": ok, "ni": count}));
        }
        checks.push(check(format!("{name}: NI >= 1 for n = 1..{max}"), pass, json!(values)));
    }
    Ok(Report::new("finite-type-trees", checks))
}

/// Keys of `I_[n,i]` and, for acyclic orientations, `Ĩ_[n,i]`.
pub fn cycle_family_keys(c: &Quiver, n: usize) -> Result<BTreeSet<CanonicalKey>> {
    let orient = cycle_orientation(c)?;
    let l = orient.len();
    let acyclic = orient.iter().any(|&o| o) && orient.iter().any(|&o| !o);
    let mut keys = BTreeSet::new();
    for i in 1..=l {
        keys.insert(rep_key(&build_i(c, n, i)?));
        if acyclic && n.is_multiple_of(l) {
            keys.insert(rep_key(&build_i_tilde(c, n / l, i)?));
        }
    }
    Ok(keys)
}

pub fn cycle_classification(max: usize) -> Result<Report> {
    let mut checks = Vec::new();
    for name in ["C2:++", "C2:+-", "C3:+++", "C3:++-"] {
        let q = Quiver::named(name)?;
        let mut rows = Vec::new();
        let mut equal = true;
        let mut bounded = true;
        for n in 1..=max {
            let brute = indecomposables(&q, n, true);
            let family = cycle_family_keys(&q, n)?;
            equal &= brute == family;
            bounded &= brute.len() <= 2 * q.num_vertices();
            rows.push(json!({"n": n, "brute": brute.len(), "family": family.len()}));
        }
        checks.push(check(format!("{name}: indecomposables are the string and band families"), equal, json!(rows)));
        checks.push(check(format!("{name}: NI <= 2|C0|"), bounded, json!(rows)));
    }
    Ok(Report::new("cycle-classification", checks))
}

pub fn loop_reduction(max: usize) -> Result<Report> {
    let l1 = loop_quiver(1);
    let l2 = loop_quiver(2);
    let l3 = loop_quiver(3);
    let gen2 = ni_by_colored_quivers(&l2, 2 * max)?;
    let ni_l1: Vec<usize> = (0..=2 * max).map(|n| if n == 0 { 0 } else { ni(&l1, n) }).collect();
    let ni_l2: Vec<usize> = (0..=max).map(|n| if n == 0 { 0 } else { ni(&l2, n) }).collect();
    let ni_l3: Vec<usize> = (0..=max).map(|n| if n == 0 { 0 } else { ni(&l3, n) }).collect();
    let mut checks = Vec::new();
    let agree = (1..=max).all(|d| ni_l2[d] == gen2[d]);
    checks.push(check(
        format!("NI_L2 by brute force equals the colored-quiver count for d <= {max}"),
        agree,
        json!({"brute": &ni_l2[1..], "colored": &gen2[1..=max]}),
    ));
    for d in 1..=max {
        checks.push(check(
            format!("NI_L1({d}) <= NI_L2({d}) <= NI_L1({})", 2 * d),
            ni_l1[d] <= ni_l2[d] && ni_l2[d] <= ni_l1[2 * d],
            json!([ni_l1[d], ni_l2[d], ni_l1[2 * d]]),
        ));
    }
    for d in 1..=max {
        checks.push(check(
            format!("NI_L2({d}) <= NI_L3({d}) <= NI_L2({})", 2 * d),
            ni_l2[d] <= ni_l3[d] && ni_l3[d] <= gen2[2 * d],
            json!([ni_l2[d], ni_l3[d], gen2[2 * d]]),
        ));
    }
    Ok(Report::new("loop-reduction", checks))
}

pub fn f_construction(cap: usize) -> Result<Report> {
    let mut checks = Vec::new();
    for n in [2, 3] {
        let q = loop_quiver(n);
        let mut images = BTreeSet::new();
        let mut count = 0;
        let mut doubles = true;
        let mut indec = true;
        let mut ses = true;
        for d in 1..=cap {
            for k in indecomposables(&q, d, true) {
                let m = key_rep(&k, &q)?;
                let f = f_reduce(&m)?;
                count += 1;
                images.insert(rep_key(&f));
                doubles &= f.total_dim() == 2 * d;
                indec &= is_indecomposable(&f);
                // bottom copy drops the last loop, top copy the second-to-last
                let sub = IsoClass::from_rep(delete_loop(&m, n)?)?;
                let quo = IsoClass::from_rep(delete_loop(&m, n - 1)?)?;
                let mid = IsoClass::from_rep(f)?;
                let split = rep_key(&direct_sum_rep(&quo.representative, &sub.representative)?);
                ses &= ses_count(&mid, &quo, &sub)? > 0 && split != mid.key;
            }
        }
        let detail = json!({"classes": count, "distinct_images": images.len()});
        checks.push(check(format!("L{n}: F injective on classes of dim <= {cap}"), images.len() == count, detail));
        checks.push(check(format!("L{n}: F doubles dimension"), doubles, Value::Null));
        checks.push(check(format!("L{n}: F preserves indecomposability"), indec, Value::Null));
        checks.push(check(format!("L{n}: F(M) is a non-split extension of its two copies"), ses, Value::Null));
    }
    Ok(Report::new("f-construction", checks))
}

pub fn upper_bound(cap: usize) -> Result<Report> {
    let mut checks = Vec::new();
    for name in ["A2", "K2"] {
        let q = Quiver::named(name)?;
        let mut count = 0;
        let mut images = BTreeSet::new();
        let mut doubles = true;
        for n in 0..=cap {
            for d in q.dim_vectors(n) {
                for m in enumerate_reps(&q, &d, true)? {
                    let f = embed_l2(&m)?;
                    count += 1;
                    doubles &= f.total_dim() == 2 * n;
                    images.insert(rep_key(&f));
                }
            }
        }
        let detail = json!({"classes": count, "distinct_images": images.len()});
        checks.push(check(
            format!("{name}: embedding injective on classes of dim <= {cap}"),
            images.len() == count,
            detail,
        ));
        checks.push(check(format!("{name}: embedding doubles dimension"), doubles, Value::Null));
    }
    Ok(Report::new("upper-bound", checks))
}

fn all_triples(
    keys: &[CanonicalKey],
    total: usize,
) -> impl Iterator<Item = (&CanonicalKey, &CanonicalKey, &CanonicalKey)> {
    keys.iter().flat_map(move |a| {
        keys.iter().flat_map(move |b| {
            keys.iter().filter(move |c| a.total_dim() + b.total_dim() + c.total_dim() <= total).map(move |c| (a, b, c))
        })
    })
}

pub fn hall_suite(q: &Quiver, cap: usize) -> Result<Report> {
    let h = HallAlgebra::new(q, cap)?;
    let keys = h.keys_up_to(cap);
    let tag = quiver_label(q);
    let mut checks = Vec::new();

    let mut consistent = true;
    let mut triples = 0u64;
    for r in &keys {
        let rc = h.class(r)?;
        for m in &keys {
            for n in &keys {
                if m.total_dim() + n.total_dim() != r.total_dim() {
                    continue;
                }
                let (mc, nc) = (h.class(m)?, h.class(n)?);
                let a = hall_coeff(&rc, &mc, &nc)?;
                let p = ses_count(&rc, &mc, &nc)?;
                consistent &= a * aut_count(&mc) * aut_count(&nc) == p && a == h.coeff(r, m, n)?;
                triples += 1;
            }
        }
    }
    checks.push(check(format!("{tag}: a * a_M * a_N = P (dim <= {cap})"), consistent, json!({"triples": triples})));

    let mut assoc = true;
    for (a, b, c) in all_triples(&keys, cap) {
        let (x, y, z) = (HallElement::basis(a.clone()), HallElement::basis(b.clone()), HallElement::basis(c.clone()));
        assoc &= h.product(&h.product(&x, &y)?, &z)? == h.product(&x, &h.product(&y, &z)?)?;
    }
    checks.push(check(format!("{tag}: associativity"), assoc, Value::Null));

    let mut coassoc = true;
    let mut cocomm = true;
    let mut prim = true;
    for k in &keys {
        let (l, r) = h.coassociativity_sides(k)?;
        coassoc &= l == r;
        let d = h.basis_coproduct(k)?;
        cocomm &= d.flip() == d;
        let is_prim = d.terms().len() == 2
            && d.terms().contains_key(&(k.clone(), h.unit()))
            && d.terms().contains_key(&(h.unit(), k.clone()));
        prim &= is_prim == (k.total_dim() > 0 && is_indecomposable(&h.class(k)?.representative));
    }
    checks.push(check(format!("{tag}: coassociativity"), coassoc, Value::Null));
    checks.push(check(format!("{tag}: co-commutativity"), cocomm, Value::Null));
    checks.push(check(format!("{tag}: primitive basis elements are the indecomposables"), prim, Value::Null));

    let mut bialg = true;
    let mut graded = true;
    for a in &keys {
        for b in &keys {
            if a.total_dim() + b.total_dim() > cap {
                continue;
            }
            let xy = h.basis_product(a, b)?;
            let want: Vec<usize> = h.class(a)?.dims().iter().zip(h.class(b)?.dims()).map(|(x, y)| x + y).collect();
            for k in xy.terms().keys() {
                graded &= h.class(k)?.dims() == &want[..];
            }
            if a.total_dim() + b.total_dim() <= cap.min(3) {
                let lhs = h.coproduct(&xy)?;
                let rhs = h.tensor_product(&h.basis_coproduct(a)?, &h.basis_coproduct(b)?)?;
                bialg &= lhs == rhs;
            }
        }
    }
    checks.push(check(format!("{tag}: bialgebra compatibility"), bialg, Value::Null));
    checks.push(check(format!("{tag}: grading"), graded, Value::Null));

    if q.num_vertices() == 1 && q.num_arrows() >= 2 {
        let mut sigma: Vec<usize> = (0..q.num_arrows()).collect();
        sigma.swap(0, 1);
        let tw = |k: &CanonicalKey| -> Result<CanonicalKey> { Ok(sigma_twist(&h.class(k)?, &sigma)?.key) };
        let mut inv = true;
        for r in &keys {
            for m in &keys {
                for n in &keys {
                    if m.total_dim() + n.total_dim() == r.total_dim() {
                        inv &= h.coeff(r, m, n)? == h.coeff(&tw(r)?, &tw(m)?, &tw(n)?)?;
                    }
                }
            }
        }
        checks.push(check(format!("{tag}: swap-twist invariance of structure constants"), inv, Value::Null));
    }
    Ok(Report::new("hall", checks))
}

/// `L<n>` for loop quivers, otherwise the arrow list.
pub fn quiver_label(q: &Quiver) -> String {
    if q.num_vertices() == 1 {
        format!("L{}", q.num_arrows())
    } else {
        format!("Q{}{:?}", q.num_vertices(), q.arrows())
    }
}

pub const PARTITIONS: [usize; 9] = [1, 1, 2, 3, 5, 7, 11, 15, 22];

pub fn skew(cells: usize, max: usize) -> Result<Report> {
    let l2 = loop_quiver(2);
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut bij = true;
    for c in 1..=cells {
        let shapes = enumerate_shapes(2, c);
        let from_shapes: BTreeSet<CanonicalKey> =
            shapes.iter().map(|s| shape_to_rep(s).map(|r| rep_key(&r))).collect::<Result<_>>()?;
        let mut graded = BTreeSet::new();
        let mut round_trip = true;
        for k in indecomposables(&l2, c, true) {
            let r = key_rep(&k, &l2)?;
            if maps_commute(&r) && admits_grading(&r).is_some() {
                round_trip &= rep_to_shape(&r).is_ok();
                graded.insert(k);
            }
        }
        bij &= shapes.len() == from_shapes.len() && from_shapes == graded && round_trip;
        rows.push(json!({"cells": c, "shapes": shapes.len(), "graded_classes": graded.len()}));
    }
    checks.push(check(
        format!("skew shapes in Z^2 with <= {cells} cells match graded commuting L2 indecomposables"),
        bij,
        json!(rows),
    ));
    let l1 = loop_quiver(1);
    let counts: Vec<usize> =
        (1..=max).map(|d| enumerate_reps(&l1, &[d], true).map(|v| v.len())).collect::<Result<_>>()?;
    let want: Vec<usize> = (1..=max).map(|d| PARTITIONS.get(d).copied().unwrap_or(0)).collect();
    checks.push(check(
        format!("L1 nilpotent class counts are partition numbers for d <= {max}"),
        counts == want,
        json!(counts),
    ));
    Ok(Report::new("skew", checks))
}

pub fn ses_counterexample() -> Result<Report> {
    let w = extension_witness();
    let r = IsoClass::from_rep(w.middle.clone())?;
    let m = IsoClass::from_rep(w.quotient.clone())?;
    let n = IsoClass::from_rep(w.sub.clone())?;
    let count = ses_count(&r, &m, &n)?;
    let outer = rep_to_shape(&w.sub).is_ok() && rep_to_shape(&w.quotient).is_ok();
    let checks = vec![
        check("the short exact sequence exists", count >= 1, json!({"ses_count": count})),
        check("outer terms come from skew shapes", outer, Value::Null),
        check("middle term has non-commuting maps", !maps_commute(&w.middle), Value::Null),
    ];
    Ok(Report::new("ses-counterexample", checks))
}

pub fn pseudotree(max_n: usize) -> Result<Report> {
    let q = Quiver::named("PT1")?;
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let fam = pseudotree_family(&q, 3, 3, n)?;
        let keys: BTreeSet<CanonicalKey> = fam.iter().map(rep_key).collect();
        let ok = keys.len() == n
            && fam.iter().all(|r| r.total_dim() == 9 * n && is_indecomposable(r) && is_nilpotent_rep(r));
        checks.push(check(format!("PT1: NI({}) >= {n}", 9 * n), ok, json!({"distinct_classes": keys.len()})));
    }
    Ok(Report::new("pseudotree", checks))
}
