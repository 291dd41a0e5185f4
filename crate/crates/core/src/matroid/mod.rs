//! Matroids as rank tables: validation, minors, duality, connectivity, isomorphism
//! canonical forms, enumeration, and Tutte polynomials with their convolution identities.

mod convolution;
mod enumerate;
mod tutte;

use serde_json::{json, Value};
use thiserror::Error;

use crate::minors::{compress, elements, expand, full_set, popcount, MinorsSystem, Subset, MAX_GROUND};

pub use convolution::{duality_check, iterated_check, krs_check, kung_check, signflip_check};
pub use enumerate::{all_matroids, canonical_classes, principal_extension, random_matroid, truncate};
pub use tutte::{
    corank_nullity, multivariate_tutte, prefactor_check, tutte, tutte_from_universal, tutte_sig, universal_norm,
    universal_sig, universal_spec, universal_tutte,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("rank axiom violated: {0}")]
    Axiom(String),
    #[error("size error: {0}")]
    Size(String),
    #[error("domain error: {0}")]
    Domain(String),
}

/// Largest ground set accepted by [`RankTable::canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// Matroid given by the rank of every subset; index bit i is element i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankTable {
    n: usize,
    rk: Vec<u8>,
}

impl RankTable {
    /// Validates (R1) rk(A) ≤ |A|, (R2) monotonicity and (R3) submodularity through their
    /// local forms: unit increments and `rk(A+e) + rk(A+f) ≥ rk(A+e+f) + rk(A)`.
    pub fn new(n: usize, rk: Vec<u8>) -> Result<Self, MatroidError> {
        if n > MAX_GROUND {
            return Err(MatroidError::Size(format!("{n} elements exceeds the cap {MAX_GROUND}")));
        }
        if rk.len() != 1 << n {
            return Err(MatroidError::Domain(format!("rank table needs {} entries, got {}", 1 << n, rk.len())));
        }
        let m = RankTable { n, rk };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(n: usize, rk: Vec<u8>) -> Self {
        RankTable { n, rk }
    }

    fn validate(&self) -> Result<(), MatroidError> {
        if self.rk[0] != 0 {
            return Err(MatroidError::Axiom("rk(∅) must be 0".into()));
        }
        for a in 0..self.rk.len() as Subset {
            let ra = self.rk[a as usize];
            for e in 0..self.n {
                if a & (1 << e) != 0 {
                    continue;
                }
                let rae = self.rk[(a | 1 << e) as usize];
                if rae < ra || rae > ra + 1 {
                    return Err(MatroidError::Axiom(format!("rank step from {a:#b} adding {e} is {ra}->{rae}")));
                }
                for f in e + 1..self.n {
                    if a & (1 << f) != 0 {
                        continue;
                    }
                    let raf = self.rk[(a | 1 << f) as usize];
                    let raef = self.rk[(a | 1 << e | 1 << f) as usize];
                    if (rae as u32 + raf as u32) < (raef as u32 + ra as u32) {
                        return Err(MatroidError::Axiom(format!("submodularity fails at {a:#b} with {e},{f}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Ranks from a basis list: `rk(A) = max_B |A ∩ B|`.
    pub fn from_bases(n: usize, bases: &[Subset]) -> Result<Self, MatroidError> {
        if bases.is_empty() {
            return Err(MatroidError::Axiom("a matroid needs at least one basis".into()));
        }
        if n > MAX_GROUND || bases.iter().any(|&b| b >> n != 0) {
            return Err(MatroidError::Domain("basis outside the ground set".into()));
        }
        let r = popcount(bases[0]);
        if bases.iter().any(|&b| popcount(b) != r) {
            return Err(MatroidError::Axiom("bases of different sizes".into()));
        }
        let rk = (0..1u32 << n).map(|a| bases.iter().map(|&b| popcount(a & b)).max().unwrap() as u8).collect();
        let m = RankTable::new(n, rk)?;
        // Rank-derived bases must reproduce the input family exactly.
        let derived: Vec<Subset> = m.bases();
        let mut given = bases.to_vec();
        given.sort_unstable();
        given.dedup();
        if derived != given {
            return Err(MatroidError::Axiom("basis family fails the exchange axiom".into()));
        }
        Ok(m)
    }

    pub fn uniform(r: usize, n: usize) -> Self {
        assert!(r <= n && n <= MAX_GROUND);
        RankTable { n, rk: (0..1u32 << n).map(|a| popcount(a).min(r) as u8).collect() }
    }

    pub fn coloop() -> Self {
        Self::uniform(1, 1)
    }

    pub fn loop_() -> Self {
        Self::uniform(0, 1)
    }

    pub fn empty() -> Self {
        Self::uniform(0, 0)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rank(&self, a: Subset) -> usize {
        self.rk[a as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(full_set(self.n))
    }

    pub fn corank(&self) -> usize {
        self.n - self.full_rank()
    }

    pub fn table(&self) -> &[u8] {
        &self.rk
    }

    pub fn ranks(&self) -> Vec<u32> {
        self.rk.iter().map(|&r| r as u32).collect()
    }

    pub fn full(&self) -> Subset {
        full_set(self.n)
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank(a) == popcount(a)
    }

    pub fn is_spanning(&self, a: Subset) -> bool {
        self.rank(a) == self.full_rank()
    }

    pub fn bases(&self) -> Vec<Subset> {
        let r = self.full_rank();
        (0..=self.full()).filter(|&a| popcount(a) == r && self.is_independent(a)).collect()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank(1 << e) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank(self.full() & !(1 << e)) < self.full_rank()
    }

    /// `M|A`, relabeled onto {0,…,|A|−1}.
    pub fn restrict(&self, a: Subset) -> Self {
        let k = popcount(a);
        let rk = (0..1u32 << k).map(|b| self.rk[expand(b, a) as usize]).collect();
        RankTable { n: k, rk }
    }

    /// `M/A`: `rk(B ∪ A) − rk(A)` on E∖A.
    pub fn contract(&self, a: Subset) -> Self {
        let rest = self.full() & !a;
        let k = popcount(rest);
        let ra = self.rk[a as usize];
        let rk = (0..1u32 << k).map(|b| self.rk[(expand(b, rest) | a) as usize] - ra).collect();
        RankTable { n: k, rk }
    }

    /// `M∖A = M|(E∖A)`.
    pub fn delete(&self, a: Subset) -> Self {
        self.restrict(self.full() & !a)
    }

    /// `rk*(A) = rk(E∖A) + |A| − rk(E)`.
    pub fn dual(&self) -> Self {
        let full = self.full();
        let r = self.full_rank();
        let rk = (0..=full).map(|a| (self.rank(full & !a) + popcount(a) - r) as u8).collect();
        RankTable { n: self.n, rk }
    }

    /// Direct sum; elements of `other` follow those of `self`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, MatroidError> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(MatroidError::Size(format!("direct sum has {n} elements, cap is {MAX_GROUND}")));
        }
        let low = self.full();
        let rk = (0..1u32 << n).map(|a| self.rk[(a & low) as usize] + other.rk[(a >> self.n) as usize]).collect();
        Ok(RankTable { n, rk })
    }

    /// Relabeling sending element i to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut rk = vec![0u8; self.rk.len()];
        for a in 0..=self.full() {
            let mut b = 0;
            for e in elements(a) {
                b |= 1 << perm[e];
            }
            rk[b as usize] = self.rk[a as usize];
        }
        RankTable { n: self.n, rk }
    }

    pub fn is_separator(&self, a: Subset) -> bool {
        self.rank(a) + self.rank(self.full() & !a) == self.full_rank()
    }

    /// Finest partition of E into separators: the component of e is the intersection of
    /// all separators containing e.
    pub fn connected_components(&self) -> Vec<Subset> {
        let full = self.full();
        let seps: Vec<Subset> = (0..=full).filter(|&a| self.is_separator(a)).collect();
        let mut blocks: Vec<Subset> = Vec::new();
        for e in 0..self.n {
            if blocks.iter().any(|b| b & (1 << e) != 0) {
                continue;
            }
            let block = seps.iter().filter(|&&s| s & (1 << e) != 0).fold(full, |acc, &s| acc & s);
            blocks.push(block);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Lexicographically least rank table over all relabelings.
    pub fn canonical_form(&self) -> Result<Self, MatroidError> {
        if self.n > CANONICAL_CAP {
            return Err(MatroidError::Size(format!("canonical form is capped at {CANONICAL_CAP} elements")));
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = self.clone();
        heap_permutations(&mut perm, &mut |p| {
            let cand = self.permute(p);
            if cand.rk < best.rk {
                best = cand;
            }
        });
        Ok(best)
    }

    pub fn is_isomorphic(&self, other: &Self) -> Result<bool, MatroidError> {
        if self.n != other.n || self.full_rank() != other.full_rank() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    pub fn to_json(&self) -> Value {
        json!({"type": "matroid", "n": self.n, "rank": self.rk})
    }

    /// Compact key: ranks as a digit string.
    pub fn key(&self) -> String {
        self.rk.iter().map(|r| char::from_digit(*r as u32, 36).unwrap_or('?')).collect()
    }
}

/// Heap's algorithm over all orderings of `v`.
pub fn heap_permutations(v: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    let n = v.len();
    let mut c = vec![0usize; n];
    f(v);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                v.swap(0, i);
            } else {
                v.swap(c[i], i);
            }
            f(v);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The minors system of matroids.
#[derive(Clone, Copy, Debug, Default)]
pub struct MatroidSystem;

impl MinorsSystem for MatroidSystem {
    type Obj = RankTable;

    fn name(&self) -> &'static str {
        "matroid"
    }
    fn ground_size(&self, x: &RankTable) -> usize {
        x.n
    }
    fn restrict(&self, x: &RankTable, a: Subset) -> RankTable {
        x.restrict(a)
    }
    fn contract(&self, x: &RankTable, a: Subset) -> RankTable {
        x.contract(a)
    }
    fn sum_empty(&self, x: &RankTable, _y: &RankTable) -> RankTable {
        x.clone()
    }
    fn unit(&self) -> RankTable {
        RankTable::empty()
    }
    fn direct_sum(&self, x: &RankTable, y: &RankTable) -> Option<RankTable> {
        x.direct_sum(y).ok()
    }
    fn enumerate(&self, k: usize) -> Option<Vec<RankTable>> {
        (k <= 4).then(|| all_matroids(k))
    }
    fn class_key(&self, x: &RankTable) -> String {
        match x.canonical_form() {
            Ok(c) => c.key(),
            Err(_) => x.key(),
        }
    }
    fn label(&self, x: &RankTable) -> String {
        match (x.n, x.full_rank()) {
            (1, 1) => "c".into(),
            (1, 0) => "l".into(),
            _ => format!("M[{}]", self.class_key(x)),
        }
    }
    fn memo_key(&self, x: &RankTable) -> Option<String> {
        Some(x.key())
    }
    fn to_json(&self, x: &RankTable) -> Value {
        x.to_json()
    }
}

/// Subset `A` of `within` mapped into the positions of `within`; re-exported for families
/// built on rank tables.
pub fn relabel(a: Subset, within: Subset) -> Subset {
    compress(a, within)
}
