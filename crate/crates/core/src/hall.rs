//! Hall algebra of nilpotent representations with exact rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::colored::{gamma_of, key_rep, rep_key, CanonicalKey};
use crate::enumerate::enumerate_reps;
use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};
use crate::rep::{
    self, decompose, direct_sum_all, hom_set, injections, is_indecomposable, is_nilpotent_rep, quotient, subrep_rep,
    subrepresentations, Representation, SubRep,
};

/// An isomorphism class with a chosen representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoClass {
    pub key: CanonicalKey,
    pub representative: Representation,
}

impl IsoClass {
    pub fn from_rep(rep: Representation) -> Result<Self> {
        if !is_nilpotent_rep(&rep) {
            return Err(Error::NotNilpotent);
        }
        Ok(IsoClass { key: rep_key(&rep), representative: rep })
    }

    pub fn from_key(key: CanonicalKey, q: &Quiver) -> Result<Self> {
        let rep = key_rep(&key, q)?;
        IsoClass::from_rep(rep)
    }

    pub fn dims(&self) -> &[usize] {
        self.representative.dims()
    }
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A finitely supported combination of isomorphism classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HallElement {
    terms: BTreeMap<CanonicalKey, BigRational>,
}

impl HallElement {
    pub fn zero() -> Self {
        HallElement::default()
    }

    pub fn basis(key: CanonicalKey) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, BigRational::one());
        HallElement { terms }
    }

    pub fn add_term(&mut self, key: CanonicalKey, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, key: &CanonicalKey) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<CanonicalKey, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> HallElement {
        let mut out = HallElement::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    /// `{"<hex key>": "p/q", ...}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self.terms.iter().map(|(k, v)| (k.to_hex(), serde_json::Value::String(ratio_string(v)))).collect();
        serde_json::Value::Object(map)
    }
}

/// Rational as `"p/q"` (always with a denominator).
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Add for &HallElement {
    type Output = HallElement;
    fn add(self, rhs: &HallElement) -> HallElement {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl Sub for &HallElement {
    type Output = HallElement;
    fn sub(self, rhs: &HallElement) -> HallElement {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), -v.clone());
        }
        out
    }
}

/// An element of `H ⊗ H`, keyed by ordered pairs of classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor {
    terms: BTreeMap<(CanonicalKey, CanonicalKey), BigRational>,
}

impl Tensor {
    pub fn add_term(&mut self, a: CanonicalKey, b: CanonicalKey, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let e = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(CanonicalKey, CanonicalKey), BigRational> {
        &self.terms
    }

    /// Swap the tensor factors.
    pub fn flip(&self) -> Tensor {
        let mut out = Tensor::default();
        for ((a, b), c) in &self.terms {
            out.add_term(b.clone(), a.clone(), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .terms
            .iter()
            .map(|((a, b), c)| (format!("{}|{}", a.to_hex(), b.to_hex()), serde_json::Value::String(ratio_string(c))))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// `a^R_{M,N}`: subrepresentations `L ⊆ R` with `L ≅ N` and `R/L ≅ M`.
pub fn hall_coeff(r: &IsoClass, m: &IsoClass, n: &IsoClass) -> Result<u64> {
    let rr = &r.representative;
    if rr.quiver() != m.representative.quiver() || rr.quiver() != n.representative.quiver() {
        return Err(Error::QuiverMismatch);
    }
    let mut count = 0;
    for s in subrepresentations(rr) {
        if s.dims() != n.dims() {
            continue;
        }
        if rep_key(&subrep_rep(rr, &s)?) == n.key && rep_key(&quotient(rr, &s)?) == m.key {
            count += 1;
        }
    }
    Ok(count)
}

/// All nonzero `a^R_{M,N}` for a fixed `R`, keyed by `(M, N)`.
pub fn hall_row(r: &Representation) -> Result<BTreeMap<(CanonicalKey, CanonicalKey), u64>> {
    let mut row = BTreeMap::new();
    for s in subrepresentations(r) {
        let sub = rep_key(&subrep_rep(r, &s)?);
        let quo = rep_key(&quotient(r, &s)?);
        *row.entry((quo, sub)).or_insert(0) += 1;
    }
    Ok(row)
}

/// `P^R_{M,N}`: pairs (injection `N -> R`, surjection `R -> M`) whose image
/// equals the kernel at every vertex.
pub fn ses_count(r: &IsoClass, m: &IsoClass, n: &IsoClass) -> Result<u64> {
    let rr = &r.representative;
    let mut by_image: HashMap<Vec<Vec<usize>>, u64> = HashMap::new();
    for f in injections(&n.representative, rr)? {
        *by_image.entry(f.image()).or_insert(0) += 1;
    }
    let mut total = 0;
    for g in hom_set(rr, &m.representative)? {
        if g.is_surjective() {
            total += by_image.get(&g.kernel()).copied().unwrap_or(0);
        }
    }
    Ok(total)
}

pub fn aut_count(c: &IsoClass) -> u64 {
    rep::aut_count(&c.representative)
}

/// Coefficients keyed by ordered triples of classes, for `H ⊗ H ⊗ H`.
pub type TripleMap = BTreeMap<[CanonicalKey; 3], BigRational>;

/// Structure constants for every nilpotent class up to a total dimension cap.
pub struct HallAlgebra {
    quiver: Quiver,
    dim_cap: usize,
    classes: BTreeMap<CanonicalKey, Representation>,
    by_dims: BTreeMap<DimVector, Vec<CanonicalKey>>,
    rows: HashMap<CanonicalKey, BTreeMap<(CanonicalKey, CanonicalKey), u64>>,
}

impl HallAlgebra {
    pub fn new(q: &Quiver, dim_cap: usize) -> Result<Self> {
        let mut classes = BTreeMap::new();
        let mut by_dims = BTreeMap::new();
        for n in 0..=dim_cap {
            for d in q.dim_vectors(n) {
                let reps = enumerate_reps(q, &d, true)?;
                let keys: Vec<CanonicalKey> = reps.iter().map(rep_key).collect();
                for (k, r) in keys.iter().zip(reps) {
                    classes.insert(k.clone(), r);
                }
                by_dims.insert(d, keys);
            }
        }
        let rows = classes
            .par_iter()
            .map(|(k, r)| hall_row(r).map(|row| (k.clone(), row)))
            .collect::<Result<HashMap<_, _>>>()?;
        Ok(HallAlgebra { quiver: q.clone(), dim_cap, classes, by_dims, rows })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dim_cap(&self) -> usize {
        self.dim_cap
    }

    /// Keys with total dimension at most `n`, in key order.
    pub fn keys_up_to(&self, n: usize) -> Vec<CanonicalKey> {
        self.classes.keys().filter(|k| k.total_dim() <= n).cloned().collect()
    }

    pub fn class(&self, key: &CanonicalKey) -> Result<IsoClass> {
        let rep = self.rep(key)?.clone();
        Ok(IsoClass { key: key.clone(), representative: rep })
    }

    fn rep(&self, key: &CanonicalKey) -> Result<&Representation> {
        self.classes.get(key).ok_or_else(|| Error::MissingTable(vec![key.total_dim()]))
    }

    /// Key of a representation in this algebra's table.
    pub fn key_of(&self, r: &Representation) -> Result<CanonicalKey> {
        if r.quiver() != &self.quiver {
            return Err(Error::QuiverMismatch);
        }
        if !is_nilpotent_rep(r) {
            return Err(Error::NotNilpotent);
        }
        if r.total_dim() > self.dim_cap {
            return Err(Error::MissingTable(r.dims().to_vec()));
        }
        Ok(rep_key(r))
    }

    /// `δ_M · δ_N = Σ_R a^R_{M,N} δ_R` over classes of dimension `dim M + dim N`.
    pub fn basis_product(&self, m: &CanonicalKey, n: &CanonicalKey) -> Result<HallElement> {
        let dm = self.rep(m)?.dims();
        let dn = self.rep(n)?.dims();
        let d: DimVector = dm.iter().zip(dn).map(|(a, b)| a + b).collect();
        if d.iter().sum::<usize>() > self.dim_cap {
            return Err(Error::MissingTable(d));
        }
        let mut out = HallElement::zero();
        for r in self.by_dims.get(&d).ok_or_else(|| Error::MissingTable(d.clone()))? {
            let row = &self.rows[r];
            if let Some(&c) = row.get(&(m.clone(), n.clone())) {
                out.add_term(r.clone(), rat(c));
            }
        }
        Ok(out)
    }

    pub fn product(&self, x: &HallElement, y: &HallElement) -> Result<HallElement> {
        let mut out = HallElement::zero();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let p = self.basis_product(a, b)?;
                out = &out + &p.scale(&(ca * cb));
            }
        }
        Ok(out)
    }

    /// Structure constant computed from the table rows.
    pub fn coeff(&self, r: &CanonicalKey, m: &CanonicalKey, n: &CanonicalKey) -> Result<u64> {
        self.rep(r)?;
        Ok(self.rows[r].get(&(m.clone(), n.clone())).copied().unwrap_or(0))
    }

    /// `Δ(δ_R) = Σ_{A ⊕ B ≅ R} δ_A ⊗ δ_B` over ordered pairs of classes.
    pub fn basis_coproduct(&self, r: &CanonicalKey) -> Result<Tensor> {
        coproduct_of(self.rep(r)?)
    }

    pub fn coproduct(&self, x: &HallElement) -> Result<Tensor> {
        let mut out = Tensor::default();
        for (k, c) in &x.terms {
            for ((a, b), v) in self.basis_coproduct(k)?.terms {
                out.add_term(a, b, v * c);
            }
        }
        Ok(out)
    }

    /// `(Δ ⊗ id) Δ` and `(id ⊗ Δ) Δ` on a basis element, as maps on key triples.
    pub fn coassociativity_sides(&self, r: &CanonicalKey) -> Result<(TripleMap, TripleMap)> {
        let delta = self.basis_coproduct(r)?;
        let mut left = BTreeMap::new();
        let mut right = BTreeMap::new();
        for ((a, b), c) in delta.terms() {
            for ((a1, a2), c1) in self.basis_coproduct(a)?.terms() {
                *left.entry([a1.clone(), a2.clone(), b.clone()]).or_insert_with(BigRational::zero) += c * c1;
            }
            for ((b1, b2), c2) in self.basis_coproduct(b)?.terms() {
                *right.entry([a.clone(), b1.clone(), b2.clone()]).or_insert_with(BigRational::zero) += c * c2;
            }
        }
        Ok((left, right))
    }

    /// Componentwise product on `H ⊗ H`: `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn tensor_product(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::default();
        for ((a, b), c1) in &x.terms {
            for ((c, d), c2) in &y.terms {
                let left = self.basis_product(a, c)?;
                let right = self.basis_product(b, d)?;
                for (l, cl) in left.terms() {
                    for (r, cr) in right.terms() {
                        out.add_term(l.clone(), r.clone(), c1 * c2 * cl * cr);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[x, y] = x·y − y·x` for indecomposable classes.
    pub fn lie_bracket(&self, x: &CanonicalKey, y: &CanonicalKey) -> Result<HallElement> {
        for k in [x, y] {
            if !is_indecomposable(self.rep(k)?) {
                return Err(Error::Decomposable);
            }
        }
        let xy = self.basis_product(x, y)?;
        let yx = self.basis_product(y, x)?;
        Ok(&xy - &yx)
    }

    /// Key of the zero representation.
    pub fn unit(&self) -> CanonicalKey {
        rep_key(&Representation::zero(&self.quiver))
    }
}

/// Ordered splittings `R ≅ A ⊕ B`, read off the Krull–Schmidt multiset.
pub fn coproduct_of(r: &Representation) -> Result<Tensor> {
    let q = r.quiver();
    let mut groups: BTreeMap<CanonicalKey, (Representation, usize)> = BTreeMap::new();
    for part in decompose(r) {
        let k = rep_key(&part);
        groups.entry(k).or_insert((part, 0)).1 += 1;
    }
    let groups: Vec<(Representation, usize)> = groups.into_values().collect();
    let mut out = Tensor::default();
    let mut take = vec![0usize; groups.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for ((rep, mult), &t) in groups.iter().zip(&take) {
            left.extend(std::iter::repeat_n(rep.clone(), t));
            right.extend(std::iter::repeat_n(rep.clone(), mult - t));
        }
        let a = rep_key(&direct_sum_all(q, &left)?);
        let b = rep_key(&direct_sum_all(q, &right)?);
        out.add_term(a, b, BigRational::one());
        let mut i = 0;
        while i < take.len() {
            take[i] += 1;
            if take[i] <= groups[i].1 {
                break;
            }
            take[i] = 0;
            i += 1;
        }
        if i == take.len() {
            break;
        }
    }
    Ok(out)
}

/// Twist an `L_n` class by `σ`: the new `i`-th loop acts as the old `σ(i)`-th.
/// `sigma` is 0-based.
pub fn sigma_twist(x: &IsoClass, sigma: &[usize]) -> Result<IsoClass> {
    let q = x.representative.quiver();
    if q.num_vertices() != 1 {
        return Err(Error::NotLoopQuiver);
    }
    let n = q.num_arrows();
    let mut seen = vec![false; n];
    if sigma.len() != n || sigma.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
        return Err(Error::InvalidPermutation(format!("{sigma:?} is not a permutation of {n} loops")));
    }
    // arrow colored sigma(i) becomes color i
    let mut inverse = vec![0; n];
    for (i, &s) in sigma.iter().enumerate() {
        inverse[s] = i;
    }
    let g = gamma_of(&x.representative).recolor_arrows(&inverse);
    let rep = crate::colored::rep_of(&g)?;
    IsoClass::from_rep(rep)
}

/// A subrepresentation and quotient pair realizing a short exact sequence.
pub fn ses_witness(r: &Representation, m: &CanonicalKey, n: &CanonicalKey) -> Result<Option<SubRep>> {
    for s in subrepresentations(r) {
        if rep_key(&subrep_rep(r, &s)?) == *n && rep_key(&quotient(r, &s)?) == *m {
            return Ok(Some(s));
        }
    }
    Ok(None)
}
