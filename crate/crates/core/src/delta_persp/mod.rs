//! Delta-matroids, matroid perspectives and delta-matroid perspectives, with the Las Vergnas,
//! Krushkal and bivariate Bollobás–Riordan invariants.

mod invariants;
mod random;

use std::collections::BTreeSet;

use serde_json::{json, Value};
use thiserror::Error;

use crate::matroid::{heap_permutations, MatroidError, RankTable};
use crate::minors::{compress, elements, full_set, popcount, Check, MinorsSystem, Subset, Witness, MAX_GROUND};

pub use invariants::*;
pub use random::{random_delta, random_dmp, random_perspective, random_quotient};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeltaError {
    #[error("delta-matroid axiom violated: {0}")]
    Axiom(String),
    #[error("not a perspective: {0}")]
    Perspective(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Delta-matroid as its sorted list of feasible sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FeasibleFamily {
    n: usize,
    feasible: Vec<Subset>,
}

impl FeasibleFamily {
    pub fn new(n: usize, sets: impl IntoIterator<Item = Subset>) -> Result<Self, DeltaError> {
        if n > MAX_GROUND {
            return Err(DeltaError::Domain(format!("{n} elements exceeds the cap {MAX_GROUND}")));
        }
        let set: BTreeSet<Subset> = sets.into_iter().collect();
        if set.iter().any(|&s| s >> n != 0) {
            return Err(DeltaError::Domain("feasible set outside the ground set".into()));
        }
        let d = FeasibleFamily { n, feasible: set.into_iter().collect() };
        d.validate()?;
        Ok(d)
    }

    fn from_sorted(n: usize, feasible: Vec<Subset>) -> Self {
        FeasibleFamily { n, feasible }
    }

    fn validate(&self) -> Result<(), DeltaError> {
        if self.feasible.is_empty() {
            return Err(DeltaError::Axiom("no feasible set".into()));
        }
        let member = self.membership();
        for &x in &self.feasible {
            for &y in &self.feasible {
                let diff = x ^ y;
                for e in elements(diff) {
                    if !elements(diff).any(|f| member[(x ^ (1 << e | 1 << f)) as usize]) {
                        return Err(DeltaError::Axiom(format!("exchange fails for {x:#b}, {y:#b} at {e}")));
                    }
                }
            }
        }
        Ok(())
    }

    fn membership(&self) -> Vec<bool> {
        let mut m = vec![false; 1 << self.n];
        for &b in &self.feasible {
            m[b as usize] = true;
        }
        m
    }

    /// The delta-matroid of a matroid's bases.
    pub fn from_matroid(m: &RankTable) -> Self {
        FeasibleFamily::from_sorted(m.size(), m.bases())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn feasible(&self) -> &[Subset] {
        &self.feasible
    }

    pub fn is_feasible(&self, a: Subset) -> bool {
        self.feasible.binary_search(&a).is_ok()
    }

    /// Removes one element, deleting (`contract = false`) or contracting it; a loop or
    /// coloop is removed the same way in both modes.
    fn remove(&self, e: usize, contract: bool) -> Self {
        let bit = 1 << e;
        let coloop = self.feasible.iter().all(|&b| b & bit != 0);
        let is_loop = self.feasible.iter().all(|&b| b & bit == 0);
        let keep: Vec<Subset> = if coloop || is_loop {
            self.feasible.clone()
        } else if contract {
            self.feasible.iter().copied().filter(|&b| b & bit != 0).collect()
        } else {
            self.feasible.iter().copied().filter(|&b| b & bit == 0).collect()
        };
        let within = full_set(self.n) & !bit;
        let set: BTreeSet<Subset> = keep.into_iter().map(|b| compress(b & !bit, within)).collect();
        FeasibleFamily::from_sorted(self.n - 1, set.into_iter().collect())
    }

    fn remove_all(&self, a: Subset, contract: bool) -> Self {
        let mut d = self.clone();
        let mut es: Vec<usize> = elements(a).collect();
        es.reverse();
        for e in es {
            d = d.remove(e, contract);
        }
        d
    }

    pub fn restrict(&self, a: Subset) -> Self {
        self.remove_all(full_set(self.n) & !a, false)
    }

    pub fn contract(&self, a: Subset) -> Self {
        self.remove_all(a, true)
    }

    pub fn delete(&self, a: Subset) -> Self {
        self.remove_all(a, false)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out: Vec<Subset> = Vec::new();
        for &b in &self.feasible {
            for &c in &other.feasible {
                out.push(b | c << self.n);
            }
        }
        out.sort_unstable();
        FeasibleFamily::from_sorted(self.n + other.n, out)
    }

    /// Twist by `t`: feasible sets `B △ t`.
    pub fn twist(&self, t: Subset) -> Self {
        let mut out: Vec<Subset> = self.feasible.iter().map(|&b| b ^ t).collect();
        out.sort_unstable();
        FeasibleFamily::from_sorted(self.n, out)
    }

    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out: Vec<Subset> =
            self.feasible.iter().map(|&b| elements(b).fold(0, |acc, e| acc | 1 << perm[e])).collect();
        out.sort_unstable();
        FeasibleFamily::from_sorted(self.n, out)
    }

    fn extremal(&self, largest: bool) -> RankTable {
        let sizes = self.feasible.iter().map(|&b| popcount(b));
        let target = if largest { sizes.max() } else { sizes.min() }.unwrap_or(0);
        let bases: Vec<Subset> = self.feasible.iter().copied().filter(|&b| popcount(b) == target).collect();
        RankTable::from_bases(self.n, &bases).expect("extremal feasible sets form a matroid")
    }

    /// The upper matroid, with bases the largest feasible sets.
    pub fn upper(&self) -> RankTable {
        self.extremal(true)
    }

    /// The lower matroid, with bases the smallest feasible sets.
    pub fn lower(&self) -> RankTable {
        self.extremal(false)
    }

    /// `rk(D_max) + rk(D_min)`, i.e. twice the mean rank.
    pub fn sigma2(&self) -> i64 {
        let max = self.feasible.iter().map(|&b| popcount(b)).max().unwrap_or(0);
        let min = self.feasible.iter().map(|&b| popcount(b)).min().unwrap_or(0);
        (max + min) as i64
    }

    /// `(D_max, D_min, 2σ)`.
    pub fn upper_lower(&self) -> (RankTable, RankTable, i64) {
        (self.upper(), self.lower(), self.sigma2())
    }

    pub fn is_even(&self) -> bool {
        self.feasible.iter().all(|&b| popcount(b) % 2 == popcount(self.feasible[0]) % 2)
    }

    /// Whether every set sandwiched between two feasible sets is feasible.
    pub fn is_saturated(&self) -> bool {
        let member = self.membership();
        for &x in &self.feasible {
            for &z in &self.feasible {
                if x & !z != 0 {
                    continue;
                }
                let free = z & !x;
                let mut s = free;
                loop {
                    if !member[(x | s) as usize] {
                        return false;
                    }
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & free;
                }
            }
        }
        true
    }

    /// Smallest relabeled feasible list.
    pub fn canonical_form(&self) -> Self {
        if self.n > 8 {
            return self.clone();
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = self.clone();
        heap_permutations(&mut perm, &mut |p| {
            let c = self.permute(p);
            if c.feasible < best.feasible {
                best = c;
            }
        });
        best
    }

    /// One representative per isomorphism class on `n` elements.
    pub fn classes(n: usize) -> Vec<Self> {
        let set: BTreeSet<Self> = Self::all(n).iter().map(Self::canonical_form).collect();
        set.into_iter().collect()
    }

    /// Every delta-matroid on `n` elements, by filtering all nonempty set families.
    pub fn all(n: usize) -> Vec<Self> {
        assert!(n <= 4, "family enumeration is doubly exponential");
        let subsets = 1usize << n;
        (1u64..1 << subsets)
            .filter_map(|fam| {
                let sets = (0..subsets as Subset).filter(|&s| fam >> s & 1 == 1);
                FeasibleFamily::new(n, sets).ok()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let sets: Vec<Vec<usize>> = self.feasible.iter().map(|&b| elements(b).collect()).collect();
        json!({"type": "delta", "n": self.n, "feasible": sets})
    }

    fn key(&self) -> String {
        format!("{}:{:?}", self.n, self.feasible)
    }
}

/// The elements where the feasible-set structure is forced: the unique 1-element label.
fn one_label(d: &FeasibleFamily) -> &'static str {
    match d.feasible.as_slice() {
        [0] => "l",
        [1] => "c",
        _ => "n",
    }
}

fn matroid_label(m: &RankTable) -> &'static str {
    if m.full_rank() == 1 {
        "c"
    } else {
        "l"
    }
}

/// Single-element increments of `m` dominate those of `q` everywhere.
fn dominates(m: &RankTable, q: &RankTable) -> Option<(Subset, usize)> {
    for a in 0..=m.full() {
        for e in 0..m.size() {
            let bit = 1 << e;
            if a & bit == 0 {
                let dm = m.rank(a | bit) - m.rank(a);
                let dq = q.rank(a | bit) - q.rank(a);
                if dm < dq {
                    return Some((a, e));
                }
            }
        }
    }
    None
}

/// Matroid perspective `(M, M')`: every rank increment of M is at least that of M'.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perspective {
    pub m: RankTable,
    pub mp: RankTable,
}

impl Perspective {
    pub fn new(m: RankTable, mp: RankTable) -> Result<Self, DeltaError> {
        if m.size() != mp.size() {
            return Err(DeltaError::Perspective("ground sets differ".into()));
        }
        if let Some((a, e)) = dominates(&m, &mp) {
            return Err(DeltaError::Perspective(format!("increment at {a:#b} plus {e}")));
        }
        Ok(Perspective { m, mp })
    }

    pub fn size(&self) -> usize {
        self.m.size()
    }

    pub fn restrict(&self, a: Subset) -> Self {
        Perspective { m: self.m.restrict(a), mp: self.mp.restrict(a) }
    }

    pub fn contract(&self, a: Subset) -> Self {
        Perspective { m: self.m.contract(a), mp: self.mp.contract(a) }
    }

    pub fn direct_sum(&self, o: &Self) -> Option<Self> {
        Some(Perspective { m: self.m.direct_sum(&o.m).ok()?, mp: self.mp.direct_sum(&o.mp).ok()? })
    }

    pub fn permute(&self, p: &[usize]) -> Self {
        Perspective { m: self.m.permute(p), mp: self.mp.permute(p) }
    }

    /// `A ⊆ B` form of the defining inequality, spot-checked on all pairs.
    pub fn holds_for_pairs(&self) -> bool {
        let full = self.m.full();
        (0..=full).all(|b| {
            let mut a = b;
            loop {
                if self.m.rank(b) + self.mp.rank(a) < self.m.rank(a) + self.mp.rank(b) {
                    return false;
                }
                if a == 0 {
                    return true;
                }
                a = (a - 1) & b;
            }
        })
    }

    /// Every perspective on `n` elements.
    pub fn all(n: usize) -> Vec<Self> {
        let ms = crate::matroid::all_matroids(n);
        let mut out = Vec::new();
        for m in &ms {
            for q in &ms {
                if let Ok(p) = Perspective::new(m.clone(), q.clone()) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({"type": "perspective", "M": self.m.to_json(), "Mprime": self.mp.to_json()})
    }
}

/// Feasible sets independent in M and spanning in M'.
pub fn perspective_to_delta(p: &Perspective) -> FeasibleFamily {
    let r = p.mp.full_rank();
    let feasible = (0..=p.m.full()).filter(|&a| p.m.is_independent(a) && p.mp.rank(a) == r).collect();
    FeasibleFamily::from_sorted(p.size(), feasible)
}

/// `(D_max, D_min)` of a saturated delta-matroid.
pub fn delta_to_perspective(d: &FeasibleFamily) -> Result<Perspective, DeltaError> {
    if !d.is_saturated() {
        return Err(DeltaError::Domain("delta-matroid is not saturated".into()));
    }
    Perspective::new(d.upper(), d.lower())
}

/// Delta-matroid perspective `(M, D, M')`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DMPerspective {
    pub m: RankTable,
    pub d: FeasibleFamily,
    pub mp: RankTable,
}

impl DMPerspective {
    pub fn new(m: RankTable, d: FeasibleFamily, mp: RankTable) -> Result<Self, DeltaError> {
        if m.size() != d.size() || mp.size() != d.size() {
            return Err(DeltaError::Perspective("ground sets differ".into()));
        }
        Perspective::new(m.clone(), d.upper())?;
        Perspective::new(d.lower(), mp.clone())?;
        Ok(DMPerspective { m, d, mp })
    }

    pub fn size(&self) -> usize {
        self.d.size()
    }

    pub fn restrict(&self, a: Subset) -> Self {
        DMPerspective { m: self.m.restrict(a), d: self.d.restrict(a), mp: self.mp.restrict(a) }
    }

    pub fn contract(&self, a: Subset) -> Self {
        DMPerspective { m: self.m.contract(a), d: self.d.contract(a), mp: self.mp.contract(a) }
    }

    pub fn direct_sum(&self, o: &Self) -> Option<Self> {
        Some(DMPerspective {
            m: self.m.direct_sum(&o.m).ok()?,
            d: self.d.direct_sum(&o.d),
            mp: self.mp.direct_sum(&o.mp).ok()?,
        })
    }

    pub fn permute(&self, p: &[usize]) -> Self {
        DMPerspective { m: self.m.permute(p), d: self.d.permute(p), mp: self.mp.permute(p) }
    }

    /// `(D_max, D, D_min)`.
    pub fn from_delta(d: &FeasibleFamily) -> Self {
        DMPerspective { m: d.upper(), d: d.clone(), mp: d.lower() }
    }

    /// `(M, D(M, M'), M')`.
    pub fn from_perspective(p: &Perspective) -> Self {
        DMPerspective { m: p.m.clone(), d: perspective_to_delta(p), mp: p.mp.clone() }
    }

    /// Every delta-matroid perspective on `n` elements.
    pub fn all(n: usize) -> Vec<Self> {
        let ms = crate::matroid::all_matroids(n);
        let mut out = Vec::new();
        for d in FeasibleFamily::all(n) {
            for m in &ms {
                for q in &ms {
                    if let Ok(t) = DMPerspective::new(m.clone(), d.clone(), q.clone()) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({"type": "dmp", "M": self.m.to_json(), "D": self.d.to_json(), "Mprime": self.mp.to_json()})
    }
}

fn canonical_by<T: Clone + Ord>(n: usize, x: &T, permute: impl Fn(&T, &[usize]) -> T) -> T {
    if n > 8 {
        return x.clone();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = x.clone();
    heap_permutations(&mut perm, &mut |p| {
        let c = permute(x, p);
        if c < best {
            best = c;
        }
    });
    best
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DeltaSystem;

impl MinorsSystem for DeltaSystem {
    type Obj = FeasibleFamily;

    fn name(&self) -> &'static str {
        "delta"
    }
    fn ground_size(&self, x: &FeasibleFamily) -> usize {
        x.n
    }
    fn restrict(&self, x: &FeasibleFamily, a: Subset) -> FeasibleFamily {
        x.restrict(a)
    }
    fn contract(&self, x: &FeasibleFamily, a: Subset) -> FeasibleFamily {
        x.contract(a)
    }
    fn sum_empty(&self, x: &FeasibleFamily, _y: &FeasibleFamily) -> FeasibleFamily {
        x.clone()
    }
    fn unit(&self) -> FeasibleFamily {
        FeasibleFamily::from_sorted(0, vec![0])
    }
    fn direct_sum(&self, x: &FeasibleFamily, y: &FeasibleFamily) -> Option<FeasibleFamily> {
        (x.n + y.n <= MAX_GROUND).then(|| x.direct_sum(y))
    }
    fn enumerate(&self, k: usize) -> Option<Vec<FeasibleFamily>> {
        (k <= 3).then(|| FeasibleFamily::all(k))
    }
    fn class_key(&self, x: &FeasibleFamily) -> String {
        x.canonical_form().key()
    }
    fn label(&self, x: &FeasibleFamily) -> String {
        if x.n == 1 {
            one_label(x).into()
        } else {
            self.class_key(x)
        }
    }
    fn memo_key(&self, x: &FeasibleFamily) -> Option<String> {
        Some(x.key())
    }
    fn to_json(&self, x: &FeasibleFamily) -> Value {
        x.to_json()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PerspectiveSystem;

impl MinorsSystem for PerspectiveSystem {
    type Obj = Perspective;

    fn name(&self) -> &'static str {
        "perspective"
    }
    fn ground_size(&self, x: &Perspective) -> usize {
        x.size()
    }
    fn restrict(&self, x: &Perspective, a: Subset) -> Perspective {
        x.restrict(a)
    }
    fn contract(&self, x: &Perspective, a: Subset) -> Perspective {
        x.contract(a)
    }
    fn sum_empty(&self, x: &Perspective, _y: &Perspective) -> Perspective {
        x.clone()
    }
    fn unit(&self) -> Perspective {
        Perspective { m: RankTable::empty(), mp: RankTable::empty() }
    }
    fn direct_sum(&self, x: &Perspective, y: &Perspective) -> Option<Perspective> {
        x.direct_sum(y)
    }
    fn enumerate(&self, k: usize) -> Option<Vec<Perspective>> {
        (k <= 3).then(|| Perspective::all(k))
    }
    fn class_key(&self, x: &Perspective) -> String {
        let c = canonical_by(x.size(), x, Perspective::permute);
        format!("{}|{}", c.m.key(), c.mp.key())
    }
    fn label(&self, x: &Perspective) -> String {
        if x.size() == 1 {
            format!("({},{})", matroid_label(&x.m), matroid_label(&x.mp))
        } else {
            self.class_key(x)
        }
    }
    fn memo_key(&self, x: &Perspective) -> Option<String> {
        Some(format!("{}|{}", x.m.key(), x.mp.key()))
    }
    fn to_json(&self, x: &Perspective) -> Value {
        x.to_json()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DmpSystem;

impl MinorsSystem for DmpSystem {
    type Obj = DMPerspective;

    fn name(&self) -> &'static str {
        "dmp"
    }
    fn ground_size(&self, x: &DMPerspective) -> usize {
        x.size()
    }
    fn restrict(&self, x: &DMPerspective, a: Subset) -> DMPerspective {
        x.restrict(a)
    }
    fn contract(&self, x: &DMPerspective, a: Subset) -> DMPerspective {
        x.contract(a)
    }
    fn sum_empty(&self, x: &DMPerspective, _y: &DMPerspective) -> DMPerspective {
        x.clone()
    }
    fn unit(&self) -> DMPerspective {
        DMPerspective { m: RankTable::empty(), d: DeltaSystem.unit(), mp: RankTable::empty() }
    }
    fn direct_sum(&self, x: &DMPerspective, y: &DMPerspective) -> Option<DMPerspective> {
        x.direct_sum(y)
    }
    fn enumerate(&self, k: usize) -> Option<Vec<DMPerspective>> {
        (k <= 2).then(|| DMPerspective::all(k))
    }
    fn class_key(&self, x: &DMPerspective) -> String {
        let c = canonical_by(x.size(), x, DMPerspective::permute);
        format!("{}|{}|{}", c.m.key(), c.d.key(), c.mp.key())
    }
    fn label(&self, x: &DMPerspective) -> String {
        if x.size() == 1 {
            format!("({},{},{})", matroid_label(&x.m), one_label(&x.d), matroid_label(&x.mp))
        } else {
            self.class_key(x)
        }
    }
    fn memo_key(&self, x: &DMPerspective) -> Option<String> {
        Some(format!("{}|{}|{}", x.m.key(), x.d.key(), x.mp.key()))
    }
    fn to_json(&self, x: &DMPerspective) -> Value {
        x.to_json()
    }
}

/// `rk(D_max) − rk((D|A)_max) − rk((D/A)_max) = rk((D|A)_min) + rk((D/A)_min) − rk(D_min) ≥ 0`
/// for every A.
pub fn discrepancy_check(d: &FeasibleFamily) -> Check {
    let (up, low) = (d.upper().full_rank() as i64, d.lower().full_rank() as i64);
    for a in 0..=full_set(d.size()) {
        let (r, c) = (d.restrict(a), d.contract(a));
        let lhs = up - r.upper().full_rank() as i64 - c.upper().full_rank() as i64;
        let rhs = r.lower().full_rank() as i64 + c.lower().full_rank() as i64 - low;
        if lhs != rhs || lhs < 0 {
            return Err(Witness::new(&DeltaSystem, d, format!("rank discrepancy at A={a:#b}"), lhs.to_string(), rhs.to_string()));
        }
    }
    Ok(())
}

/// Whether `D ↦ (D_max, D_min)` commutes with every minor of `d`. Fails in general: the
/// map is a morphism only on saturated delta-matroids.
pub fn extremal_minor_check(d: &FeasibleFamily) -> Check {
    let (up, low) = (d.upper(), d.lower());
    let full = full_set(d.size());
    for a in 0..=full {
        let pairs = [
            ("(D|A)_max", d.restrict(a).upper(), up.restrict(a)),
            ("(D|A)_min", d.restrict(a).lower(), low.restrict(a)),
            ("(D/A)_max", d.contract(a).upper(), up.contract(a)),
            ("(D/A)_min", d.contract(a).lower(), low.contract(a)),
        ];
        for (what, got, want) in pairs {
            if got != want {
                return Err(Witness::new(
                    &DeltaSystem,
                    d,
                    format!("{what} differs from the minor of the extremal matroid at A={a:#b}"),
                    format!("{:?}", got.bases()),
                    format!("{:?}", want.bases()),
                ));
            }
        }
    }
    Ok(())
}

/// Round trips `D(M, M')_max = M`, `D(M, M')_min = M'`, and compatibility of
/// `(M, M') ↦ D(M, M')` with every restriction and contraction.
pub fn tardos_check(p: &Perspective) -> Check {
    let d = perspective_to_delta(p);
    let fail = |what: String, l: String, r: String| Err(Witness::new(&PerspectiveSystem, p, what, l, r));
    if !d.is_saturated() || FeasibleFamily::new(d.size(), d.feasible.clone()).is_err() {
        return fail("D(M, M') is not a saturated delta-matroid".into(), d.key(), String::new());
    }
    match delta_to_perspective(&d) {
        Ok(back) if &back == p => {}
        other => return fail("round trip".into(), format!("{other:?}"), format!("{p:?}")),
    }
    for a in 0..=full_set(p.size()) {
        for (what, got, want) in [
            ("restriction", perspective_to_delta(&p.restrict(a)), d.restrict(a)),
            ("contraction", perspective_to_delta(&p.contract(a)), d.contract(a)),
        ] {
            if got != want {
                return fail(format!("{what} at A={a:#b}"), got.key(), want.key());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::{grothendieck_relations, minor_axioms_check};

    fn n_delta() -> FeasibleFamily {
        FeasibleFamily::new(1, [0, 1]).unwrap()
    }

    #[test]
    fn single_element_minors() {
        let n = n_delta();
        assert_eq!(n.delete(1), DeltaSystem.unit());
        assert_eq!(n.contract(1), DeltaSystem.unit());
        let d = FeasibleFamily::new(2, [0b00, 0b01, 0b11]).unwrap();
        assert_eq!(d.contract(0b10).feasible(), &[0b1]);
        assert_eq!(d.contract(0), d);
        assert!(minor_axioms_check(&DeltaSystem, &d, 0b01, 0b10).is_ok());
    }

    #[test]
    fn extremal_matroids() {
        let (up, low, s2) = n_delta().upper_lower();
        assert_eq!(up, RankTable::coloop());
        assert_eq!(low, RankTable::loop_());
        assert_eq!(s2, 1);
        let u = RankTable::uniform(1, 3);
        let (up, low, s2) = FeasibleFamily::from_matroid(&u).upper_lower();
        assert_eq!((up.clone(), s2), (u.clone(), 2));
        assert_eq!(low, u);
    }

    #[test]
    fn counts() {
        assert_eq!(FeasibleFamily::all(1).len(), 3);
        let two = FeasibleFamily::all(2);
        assert_eq!(two.len(), 15);
        assert_eq!(two.iter().filter(|d| !d.is_saturated()).count(), 3);
        assert!(!FeasibleFamily::new(2, [0, 3]).unwrap().is_saturated());
        assert_eq!(Perspective::all(1).len(), 3);
        assert_eq!(DMPerspective::all(1).len(), 5);
        assert_eq!(DMPerspective::all(2).len(), 38);
    }

    #[test]
    fn relations() {
        let p = grothendieck_relations(&DeltaSystem).unwrap();
        let rendered: Vec<String> = p.relations.iter().map(|r| p.render_relation(r)).collect();
        assert_eq!(rendered, vec!["l·c = n·n"]);
        let p = grothendieck_relations(&DmpSystem).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.render_relation(&p.relations[0]), "(c,l,l)·(c,c,l) = (c,n,l)·(c,n,l)");
        assert!(grothendieck_relations(&PerspectiveSystem).unwrap().relations.is_empty());
    }

    #[test]
    fn tardos_and_discrepancy() {
        let cl = Perspective::new(RankTable::coloop(), RankTable::loop_()).unwrap();
        assert_eq!(perspective_to_delta(&cl), n_delta());
        let u = RankTable::uniform(2, 3);
        assert_eq!(perspective_to_delta(&Perspective::new(u.clone(), u.clone()).unwrap()).feasible(), u.bases().as_slice());
        for n in 0..=3 {
            for p in Perspective::all(n) {
                assert!(tardos_check(&p).is_ok());
                assert!(p.holds_for_pairs());
            }
            for d in FeasibleFamily::all(n) {
                assert!(discrepancy_check(&d).is_ok());
            }
        }
    }

    #[test]
    fn discrepancy_on_four_elements() {
        for d in FeasibleFamily::classes(4) {
            assert!(discrepancy_check(&d).is_ok());
        }
    }

    #[test]
    fn random_tardos_compatibility() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let p = random_perspective(&mut rng, 5);
            assert!(tardos_check(&p).is_ok());
        }
    }

    #[test]
    fn non_morphism_is_detected() {
        let d = FeasibleFamily::new(2, [0b00, 0b01, 0b11]).unwrap();
        let w = extremal_minor_check(&d).unwrap_err();
        assert!(w.detail.contains("A="));
    }
}
