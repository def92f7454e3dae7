//! Linear algebra over F1.
//!
//! An F1-vector space of dimension `n` is the pointed set `{0, 1, ..., n}`
//! with basepoint `0`. A morphism is a pointed map that is injective away
//! from the preimage of the basepoint, i.e. a partial injection.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pointed set `[dim] = {0, 1, ..., dim}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct F1Vec {
    pub dim: usize,
}

impl F1Vec {
    pub fn new(dim: usize) -> Self {
        F1Vec { dim }
    }

    /// Nonzero elements, `1..=dim`.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        1..=self.dim
    }

    pub fn direct_sum(&self, other: &F1Vec) -> F1Vec {
        F1Vec::new(self.dim + other.dim)
    }
}

/// A partial injection `[src] -> [tgt]`.
///
/// `image[k - 1]` is the image of the nonzero element `k`; `0` means `k` is
/// sent to the basepoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMap")]
pub struct F1Map {
    src: usize,
    tgt: usize,
    image: Vec<usize>,
}

#[derive(Deserialize)]
struct RawMap {
    src: usize,
    tgt: usize,
    image: Vec<usize>,
}

impl TryFrom<RawMap> for F1Map {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        F1Map::new(raw.src, raw.tgt, raw.image)
    }
}

impl F1Map {
    /// Validating constructor.
    pub fn new(src: usize, tgt: usize, image: Vec<usize>) -> Result<Self> {
        if image.len() != src {
            return Err(Error::InvalidMap(format!("image has length {} but source dimension is {}", image.len(), src)));
        }
        let mut seen = vec![false; tgt + 1];
        for &j in &image {
            if j > tgt {
                return Err(Error::InvalidMap(format!("entry {j} exceeds target dimension {tgt}")));
            }
            if j != 0 {
                if seen[j] {
                    return Err(Error::InvalidMap(format!("element {j} has two preimages")));
                }
                seen[j] = true;
            }
        }
        Ok(F1Map { src, tgt, image })
    }

    pub(crate) fn from_parts_unchecked(src: usize, tgt: usize, image: Vec<usize>) -> Self {
        debug_assert!(F1Map::new(src, tgt, image.clone()).is_ok());
        F1Map { src, tgt, image }
    }

    pub fn zero(src: usize, tgt: usize) -> Self {
        F1Map { src, tgt, image: vec![0; src] }
    }

    pub fn identity(dim: usize) -> Self {
        F1Map { src: dim, tgt: dim, image: (1..=dim).collect() }
    }

    pub fn src_dim(&self) -> usize {
        self.src
    }

    pub fn tgt_dim(&self) -> usize {
        self.tgt
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Image of an element of `[src]`; the basepoint maps to the basepoint.
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.image[k - 1]
        }
    }

    /// Nonzero elements sent to the basepoint.
    pub fn kernel(&self) -> Vec<usize> {
        (1..=self.src).filter(|&k| self.image[k - 1] == 0).collect()
    }

    /// Nonzero elements hit by the map, in increasing order.
    pub fn image_set(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.image.iter().copied().filter(|&j| j != 0).collect();
        v.sort_unstable();
        v
    }

    pub fn rank(&self) -> usize {
        self.image.iter().filter(|&&j| j != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.image.iter().all(|&j| j == 0)
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.src
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.tgt
    }

    pub fn is_bijective(&self) -> bool {
        self.src == self.tgt && self.is_injective()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<F1Map> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.src];
        for (k, &j) in self.image.iter().enumerate() {
            inv[j - 1] = k + 1;
        }
        Some(F1Map { src: self.tgt, tgt: self.src, image: inv })
    }
}

/// `g ∘ f`: apply `f` first.
pub fn compose(g: &F1Map, f: &F1Map) -> Result<F1Map> {
    if f.tgt != g.src {
        return Err(Error::DimensionMismatch(format!(
            "cannot compose: f targets [{}] but g starts at [{}]",
            f.tgt, g.src
        )));
    }
    let image = f.image.iter().map(|&j| g.apply(j)).collect();
    Ok(F1Map { src: f.src, tgt: g.tgt, image })
}

/// Block sum: `f` on the first `f.src` elements, `g` shifted after them.
pub fn direct_sum(f: &F1Map, g: &F1Map) -> F1Map {
    let mut image = f.image.clone();
    image.extend(g.image.iter().map(|&j| if j == 0 { 0 } else { j + f.tgt }));
    F1Map { src: f.src + g.src, tgt: f.tgt + g.tgt, image }
}

/// True iff some power of the endomorphism `f` is zero.
///
/// A partial injection is nilpotent exactly when its functional graph on
/// the nonzero elements has no cycle.
pub fn is_nilpotent(f: &F1Map) -> Result<bool> {
    if f.src != f.tgt {
        return Err(Error::NotEndomorphism { src: f.src, tgt: f.tgt });
    }
    // 0 = unvisited, 1 = on current walk, 2 = known to reach the basepoint
    let mut state = vec![0u8; f.src + 1];
    for start in 1..=f.src {
        if state[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut k = start;
        while k != 0 && state[k] == 0 {
            state[k] = 1;
            walk.push(k);
            k = f.apply(k);
        }
        if k != 0 && state[k] == 1 {
            return Ok(false);
        }
        for w in walk {
            state[w] = 2;
        }
    }
    Ok(true)
}

/// All partial injections `[a] -> [b]`, lexicographic in the image array.
pub fn enumerate_maps(a: usize, b: usize) -> Vec<F1Map> {
    let mut out = Vec::new();
    let mut image = vec![0usize; a];
    let mut used = vec![false; b + 1];
    fn rec(pos: usize, a: usize, b: usize, image: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<F1Map>) {
        if pos == a {
            out.push(F1Map { src: a, tgt: b, image: image.clone() });
            return;
        }
        for j in 0..=b {
            if j != 0 && used[j] {
                continue;
            }
            image[pos] = j;
            if j != 0 {
                used[j] = true;
            }
            rec(pos + 1, a, b, image, used, out);
            if j != 0 {
                used[j] = false;
            }
        }
        image[pos] = 0;
    }
    rec(0, a, b, &mut image, &mut used, &mut out);
    out
}

/// Closed-form count `sum_k C(a,k) C(b,k) k!` of partial injections `[a] -> [b]`.
pub fn count_maps(a: usize, b: usize) -> u128 {
    let mut total = 0u128;
    for k in 0..=a.min(b) {
        total += binomial(a, k) * binomial(b, k) * factorial(k);
    }
    total
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut r = 1u128;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(src: usize, tgt: usize, image: &[usize]) -> F1Map {
        F1Map::new(src, tgt, image.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        let f = m(2, 2, &[2, 0]);
        assert_eq!(compose(&F1Map::identity(2), &f).unwrap(), f);

        let zero = F1Map::zero(1, 1);
        assert_eq!(compose(&zero, &F1Map::identity(1)).unwrap(), zero);

        let f = m(2, 2, &[2, 1]);
        let g = m(2, 2, &[0, 1]);
        assert_eq!(compose(&g, &f).unwrap(), m(2, 2, &[1, 0]));
    }

    #[test]
    fn compose_rejects_mismatch() {
        let f = F1Map::zero(1, 2);
        let g = F1Map::zero(3, 1);
        assert!(matches!(compose(&g, &f), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(direct_sum(&F1Map::zero(1, 1), &F1Map::zero(1, 1)), F1Map::zero(2, 2));
        assert_eq!(direct_sum(&F1Map::identity(1), &F1Map::zero(1, 1)), m(2, 2, &[1, 0]));
        let h = m(2, 3, &[3, 1]);
        assert_eq!(direct_sum(&F1Map::zero(0, 0), &h), h);
    }

    #[test]
    fn nilpotency_examples() {
        assert!(!is_nilpotent(&F1Map::identity(1)).unwrap());
        assert!(is_nilpotent(&F1Map::zero(3, 3)).unwrap());
        assert!(is_nilpotent(&m(3, 3, &[2, 3, 0])).unwrap());
        assert!(matches!(is_nilpotent(&F1Map::zero(1, 2)), Err(Error::NotEndomorphism { .. })));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_maps(0, 4).len(), 1);
        assert_eq!(enumerate_maps(1, 1).len(), 2);
        assert_eq!(enumerate_maps(2, 2).len(), 7);
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for a in 0..=5 {
            for b in 0..=5 {
                let maps = enumerate_maps(a, b);
                assert_eq!(maps.len() as u128, count_maps(a, b), "a={a} b={b}");
                assert!(maps.windows(2).all(|w| w[0].image < w[1].image));
            }
        }
    }

    #[test]
    fn rejects_non_injective() {
        assert!(F1Map::new(2, 1, vec![1, 1]).is_err());
        assert!(F1Map::new(1, 1, vec![2]).is_err());
        assert!(F1Map::new(2, 1, vec![1]).is_err());
    }

    fn power(f: &F1Map, n: usize) -> F1Map {
        let mut p = F1Map::identity(f.src_dim());
        for _ in 0..n {
            p = compose(f, &p).unwrap();
        }
        p
    }

    #[test]
    fn nilpotency_formulations_agree() {
        for d in 0..=5 {
            for f in enumerate_maps(d, d) {
                let a = is_nilpotent(&f).unwrap();
                let b = is_nilpotent(&compose(&f, &f).unwrap()).unwrap();
                let has_periodic = (1..=d).any(|k| (1..=d).any(|j| power(&f, j).apply(k) == k));
                let c = !has_periodic;
                let d_pow = power(&f, d).is_zero();
                assert_eq!(a, b);
                assert_eq!(a, c);
                assert_eq!(a, d_pow);
            }
        }
    }

    #[test]
    fn json_form() {
        let f = m(2, 3, &[3, 0]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"src":2,"tgt":3,"image":[3,0]}"#);
        let back: F1Map = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<F1Map>(r#"{"src":2,"tgt":1,"image":[1,1]}"#).is_err());
    }

    fn arb_map(max: usize) -> impl Strategy<Value = F1Map> {
        (0..=max, 0..=max).prop_flat_map(|(a, b)| {
            let maps = enumerate_maps(a, b);
            (0..maps.len()).prop_map(move |i| maps[i].clone())
        })
    }

    proptest! {
        #[test]
        fn composition_stays_a_partial_injection(f in arb_map(4), seed in 0usize..1000) {
            let gs = enumerate_maps(f.tgt_dim(), seed % 5);
            let g = &gs[seed % gs.len()];
            let h = compose(g, &f).unwrap();
            prop_assert!(F1Map::new(h.src_dim(), h.tgt_dim(), h.image().to_vec()).is_ok());
        }

        #[test]
        fn rank_nullity(f in arb_map(5)) {
            prop_assert_eq!(f.kernel().len() + f.image_set().len(), f.src_dim());
        }
    }
}
