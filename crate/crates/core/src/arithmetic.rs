//! Arithmetic matroids: a matroid with a positive multiplicity on every subset, built
//! directly or from a list of vectors in a finitely generated abelian group.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{smith_normal_form, IntMatrix, MRPoly, MonoidSig, Sig, Specialization, ZPoly};
use crate::matroid::{heap_permutations, tutte, tutte_sig, MatroidError, RankTable};
use crate::minors::{
    check_relations, expand, full_set, popcount, tutte_character, CharacterSpec, Check, MinorsSystem, Norm,
    Subset, Witness,
};

/// Largest ground set for molecule enumeration.
pub const MOLECULE_CAP: usize = 10;
/// Largest number of columns accepted by [`from_presentation`].
pub const PRESENTATION_CAP: usize = 12;

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("arithmetic axiom violated: {0}")]
    Axiom(String),
    #[error("size error: {0}")]
    Size(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A triple `(R, F, T)` of disjoint sets on which `(M|R∪F∪T)/R` is `F` coloops and `T` loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Molecule {
    pub r: Subset,
    pub f: Subset,
    pub t: Subset,
}

/// All molecules of `m`, by `R`, then `F`, then `T` in bitmask order.
///
/// `rk(R∪F) = rk(R) + |F|` and `rk(R∪T) = rk(R)` already force the rank condition on
/// every set between `R` and `R∪F∪T`, by submodularity.
pub fn molecules(m: &RankTable) -> Result<Vec<Molecule>, ArithError> {
    if m.size() > MOLECULE_CAP {
        return Err(ArithError::Size(format!("{} elements exceeds the molecule cap {MOLECULE_CAP}", m.size())));
    }
    let full = m.full();
    let mut out = Vec::new();
    for r in 0..=full {
        let rr = m.rank(r);
        let rest = full & !r;
        let fs: Vec<Subset> = submasks(rest).filter(|&f| m.rank(r | f) == rr + popcount(f)).collect();
        let ts: Vec<Subset> = submasks(rest).filter(|&t| m.rank(r | t) == rr).collect();
        for &f in &fs {
            for &t in ts.iter().filter(|&&t| t & f == 0) {
                out.push(Molecule { r, f, t });
            }
        }
    }
    Ok(out)
}

/// Submasks of `s` in increasing order.
fn submasks(s: Subset) -> impl Iterator<Item = Subset> {
    (0..=s).filter(move |a| a & !s == 0)
}

/// The signed sum of axiom (P): `(−1)^{|T|} Σ_{R⊆A⊆R∪F∪T} (−1)^{|R∪F∪T∖A|} m(A)`.
fn molecule_sum(mult: &[u64], mol: &Molecule) -> i128 {
    let top = mol.r | mol.f | mol.t;
    let free = mol.f | mol.t;
    let mut sum: i128 = 0;
    for s in submasks(free) {
        let a = mol.r | s;
        let sign = if popcount(top & !a).is_multiple_of(2) { 1 } else { -1 };
        sum += sign * mult[a as usize] as i128;
    }
    if popcount(mol.t).is_multiple_of(2) {
        sum
    } else {
        -sum
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArithMatroid {
    m: RankTable,
    mult: Vec<u64>,
}

impl ArithMatroid {
    /// Checks (A1), (A2) and (P).
    pub fn new(m: RankTable, mult: Vec<u64>) -> Result<Self, ArithError> {
        let a = ArithMatroid::unchecked(m, mult)?;
        a.validate()?;
        Ok(a)
    }

    fn unchecked(m: RankTable, mult: Vec<u64>) -> Result<Self, ArithError> {
        if mult.len() != 1 << m.size() {
            return Err(ArithError::Domain(format!("need {} multiplicities, got {}", 1 << m.size(), mult.len())));
        }
        if mult.contains(&0) {
            return Err(ArithError::Domain("multiplicities must be positive".into()));
        }
        Ok(ArithMatroid { m, mult })
    }

    /// The matroid with constant multiplicity 1.
    pub fn trivial(m: RankTable) -> Self {
        let mult = vec![1; 1 << m.size()];
        ArithMatroid { m, mult }
    }

    /// The structure on the empty set with multiplicity `k`.
    pub fn empty(k: u64) -> Self {
        ArithMatroid { m: RankTable::empty(), mult: vec![k.max(1)] }
    }

    /// Coloop with multiplicities `1 | a`.
    pub fn coloop(a: u64) -> Self {
        ArithMatroid { m: RankTable::coloop(), mult: vec![1, a] }
    }

    /// Loop with multiplicities `a | 1`.
    pub fn loop_(a: u64) -> Self {
        ArithMatroid { m: RankTable::loop_(), mult: vec![a, 1] }
    }

    fn validate(&self) -> Result<(), ArithError> {
        let n = self.m.size();
        for a in 0..=self.m.full() {
            for e in (0..n).filter(|e| a >> e & 1 == 0) {
                let b = a | 1 << e;
                let (ma, mb) = (self.mult[a as usize], self.mult[b as usize]);
                let ok = if self.m.rank(b) > self.m.rank(a) { mb % ma == 0 } else { ma % mb == 0 };
                if !ok {
                    return Err(ArithError::Axiom(format!("(A1) fails at A={a:#b}, e={e}")));
                }
            }
        }
        let mols = molecules(&self.m)?;
        if let Some(mol) = mols.par_iter().find_any(|mol| {
            let (r, f, t) = (mol.r, mol.f, mol.t);
            self.mult[r as usize] as u128 * self.mult[(r | f | t) as usize] as u128
                != self.mult[(r | f) as usize] as u128 * self.mult[(r | t) as usize] as u128
        }) {
            return Err(ArithError::Axiom(format!("(A2) fails at molecule {mol:?}")));
        }
        if let Some(mol) = mols.par_iter().find_any(|mol| molecule_sum(&self.mult, mol) < 0) {
            return Err(ArithError::Axiom(format!("(P) fails at molecule {mol:?}")));
        }
        Ok(())
    }

    pub fn matroid(&self) -> &RankTable {
        &self.m
    }

    pub fn multiplicity(&self, a: Subset) -> u64 {
        self.mult[a as usize]
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    pub fn size(&self) -> usize {
        self.m.size()
    }

    pub fn restrict(&self, a: Subset) -> Self {
        let k = popcount(a);
        let mult = (0..1u32 << k).map(|b| self.mult[expand(b, a) as usize]).collect();
        ArithMatroid { m: self.m.restrict(a), mult }
    }

    /// Contraction: `m̄(B) = m(B ∪ A)`.
    pub fn contract(&self, a: Subset) -> Self {
        let rest = self.m.full() & !a;
        let k = popcount(rest);
        let mult = (0..1u32 << k).map(|b| self.mult[(expand(b, rest) | a) as usize]).collect();
        ArithMatroid { m: self.m.contract(a), mult }
    }

    /// `(m ⊕ m')(A ⊔ A') = m(A) m'(A')`, with the second summand on the high positions.
    pub fn direct_sum(&self, o: &Self) -> Result<Self, ArithError> {
        let m = self.m.direct_sum(&o.m)?;
        let n1 = self.size();
        let low = full_set(n1);
        let mult = (0..=m.full()).map(|a| self.mult[(a & low) as usize] * o.mult[(a >> n1) as usize]).collect();
        Ok(ArithMatroid { m, mult })
    }

    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut mult = vec![0; self.mult.len()];
        for (a, &v) in self.mult.iter().enumerate() {
            let img: Subset = (0..perm.len()).filter(|i| a >> i & 1 == 1).map(|i| 1 << perm[i]).sum();
            mult[img as usize] = v;
        }
        ArithMatroid { m: self.m.permute(perm), mult }
    }

    /// Every multiplicity times `k`, i.e. the direct sum with `(∅, k)`.
    pub fn scaled(&self, k: u64) -> Self {
        ArithMatroid { m: self.m.clone(), mult: self.mult.iter().map(|v| v * k).collect() }
    }

    pub fn to_json(&self) -> Value {
        json!({"type": "arithmetic", "matroid": self.m.to_json(), "multiplicity": self.mult})
    }

    fn key(&self) -> String {
        let ms: Vec<String> = self.mult.iter().map(u64::to_string).collect();
        format!("{}|{}", self.m.key(), ms.join(","))
    }
}

/// Pointwise product of two multiplicities on the same matroid, with the axioms re-checked.
pub fn biarith_product(a: &ArithMatroid, b: &ArithMatroid) -> Result<ArithMatroid, ArithError> {
    if a.m != b.m {
        return Err(ArithError::Domain("the two multiplicities live on different matroids".into()));
    }
    let mult = a.mult.iter().zip(&b.mult).map(|(x, y)| x * y).collect();
    ArithMatroid::new(a.m.clone(), mult).map_err(|e| ArithError::Invariant(format!("product is not arithmetic: {e}")))
}

/// Vectors in `Z^r ⊕ Z/d_1 ⊕ … ⊕ Z/d_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianPresentation {
    free_rank: usize,
    torsion: Vec<i64>,
    columns: Vec<Vec<i64>>,
}

impl AbelianPresentation {
    /// Torsion coordinates are reduced into `0..d_i`.
    pub fn new(free_rank: usize, torsion: Vec<i64>, columns: Vec<Vec<i64>>) -> Result<Self, ArithError> {
        if let Some(d) = torsion.iter().find(|&&d| d < 2) {
            return Err(ArithError::Domain(format!("torsion modulus {d} is below 2")));
        }
        if columns.len() > PRESENTATION_CAP {
            return Err(ArithError::Size(format!("{} columns exceeds {PRESENTATION_CAP}", columns.len())));
        }
        let dim = free_rank + torsion.len();
        let mut cols = columns;
        for c in &mut cols {
            if c.len() != dim {
                return Err(ArithError::Domain(format!("column of length {} in a group of {dim} coordinates", c.len())));
            }
            for (x, d) in c[free_rank..].iter_mut().zip(&torsion) {
                *x = x.rem_euclid(*d);
            }
        }
        Ok(AbelianPresentation { free_rank, torsion, columns: cols })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[i64] {
        &self.torsion
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// `(free rank, torsion order)` of `G / ⟨A⟩`.
    fn quotient(&self, a: Subset) -> (usize, u64) {
        let (r, t) = (self.free_rank, self.torsion.len());
        let picked: Vec<&Vec<i64>> =
            self.columns.iter().enumerate().filter(|(i, _)| a >> i & 1 == 1).map(|(_, c)| c).collect();
        let cols = t + picked.len();
        let mut mat = IntMatrix::zeros(r + t, cols);
        for (j, &d) in self.torsion.iter().enumerate() {
            mat.set(r + j, j, BigInt::from(d));
        }
        for (j, c) in picked.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                mat.set(i, t + j, BigInt::from(x));
            }
        }
        let snf = smith_normal_form(&mat);
        let order = snf.factors.iter().fold(BigInt::from(1), |acc, f| acc * f.abs());
        let order = order.to_u64().expect("torsion order fits in 64 bits");
        (r + t - snf.factors.len(), order)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "type": "arithmetic_presentation",
            "free_rank": self.free_rank,
            "torsion": self.torsion,
            "columns": self.columns,
        })
    }
}

/// Rank `r − rank(G/⟨A⟩)` and multiplicity `|torsion(G/⟨A⟩)|` for every `A`.
pub fn from_presentation(p: &AbelianPresentation) -> Result<ArithMatroid, ArithError> {
    let n = p.columns.len();
    let (ranks, mult): (Vec<u8>, Vec<u64>) = (0..1u32 << n)
        .into_par_iter()
        .map(|a| {
            let (free, order) = p.quotient(a);
            ((p.free_rank - free) as u8, order)
        })
        .unzip();
    ArithMatroid::new(RankTable::new(n, ranks)?, mult)
}

/// Random presentation with entries in `-3..=3`, at most two free coordinates and at most
/// one torsion coordinate.
pub fn random_presentation<R: Rng>(rng: &mut R, columns: usize) -> AbelianPresentation {
    let free = rng.gen_range(0..=2usize);
    let torsion: Vec<i64> = if free == 0 || rng.gen_bool(0.4) { vec![rng.gen_range(2..=6)] } else { vec![] };
    let dim = free + torsion.len();
    let cols = (0..columns).map(|_| (0..dim).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    AbelianPresentation::new(free, torsion, cols).expect("valid by construction")
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ArithSystem;

impl MinorsSystem for ArithSystem {
    type Obj = ArithMatroid;

    fn name(&self) -> &'static str {
        "arithmetic"
    }
    fn ground_size(&self, x: &ArithMatroid) -> usize {
        x.size()
    }
    fn restrict(&self, x: &ArithMatroid, a: Subset) -> ArithMatroid {
        x.restrict(a)
    }
    fn contract(&self, x: &ArithMatroid, a: Subset) -> ArithMatroid {
        x.contract(a)
    }
    fn sum_empty(&self, x: &ArithMatroid, y: &ArithMatroid) -> ArithMatroid {
        x.scaled(y.mult[0])
    }
    fn unit(&self) -> ArithMatroid {
        ArithMatroid::empty(1)
    }
    fn direct_sum(&self, x: &ArithMatroid, y: &ArithMatroid) -> Option<ArithMatroid> {
        x.direct_sum(y).ok()
    }
    fn class_key(&self, x: &ArithMatroid) -> String {
        if x.size() > 6 {
            return x.key();
        }
        let mut perm: Vec<usize> = (0..x.size()).collect();
        let mut best = x.clone();
        heap_permutations(&mut perm, &mut |p| {
            let cand = x.permute(p);
            if cand < best {
                best = cand;
            }
        });
        best.key()
    }
    fn memo_key(&self, x: &ArithMatroid) -> Option<String> {
        Some(x.key())
    }
    fn to_json(&self, x: &ArithMatroid) -> Value {
        x.to_json()
    }
}

/// `Z[Z>0][x, y]`, the multiplicities living on the prime block `a`.
pub fn arith_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| MonoidSig::builder().naturals(["x", "y"]).primes("a", false).build().expect("fixed signature"))
        .clone()
}

/// `[k]` in the prime block `a` of `sig`.
pub fn class_of(sig: &Sig, k: u64) -> ZPoly {
    MRPoly::prime_class(sig, "a", k, 1).expect("positive multiplicity")
}

/// Spec of the universal arithmetic character.
pub fn arith_spec() -> CharacterSpec<ArithMatroid, BigInt> {
    let sig = arith_sig();
    let one = ZPoly::one(&sig);
    let x1 = &ZPoly::generator(&sig, "x") - &one;
    let y1 = &ZPoly::generator(&sig, "y") - &one;
    let norm1: Norm<ArithMatroid, BigInt> = Arc::new(move |a: &ArithMatroid| y1.pow(a.m.corank() as u32));
    let norm2: Norm<ArithMatroid, BigInt> = Arc::new(move |a: &ArithMatroid| x1.pow(a.m.full_rank() as u32));
    let s = sig.clone();
    let twist: Norm<ArithMatroid, BigInt> = Arc::new(move |a: &ArithMatroid| class_of(&s, a.mult[0]));
    CharacterSpec::new(&sig, norm1, twist, norm2)
}

/// `Σ_A [m(A)] (x−1)^{rk(M)−rk(A)} (y−1)^{|A|−rk(A)}` as a Tutte character.
pub fn universal_arith_tutte(a: &ArithMatroid) -> ZPoly {
    tutte_character(&ArithSystem, a, &arith_spec())
}

/// The same polynomial from the subset sum, kept separate as an oracle.
pub fn universal_arith_direct(a: &ArithMatroid) -> ZPoly {
    let sig = arith_sig();
    let one = ZPoly::one(&sig);
    let x1 = &ZPoly::generator(&sig, "x") - &one;
    let y1 = &ZPoly::generator(&sig, "y") - &one;
    let r = a.m.full_rank();
    let mut out = ZPoly::zero(&sig);
    for s in 0..=a.m.full() {
        let rs = a.m.rank(s);
        let t = &(&x1.pow((r - rs) as u32) * &y1.pow((popcount(s) - rs) as u32)) * &class_of(&sig, a.mult[s as usize]);
        out.add_assign(&t);
    }
    out
}

/// Ring maps `Z[Z>0] → Z` applied to the coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithMode {
    /// `[m] ↦ 1`.
    Forget,
    /// `[m] ↦ m`.
    Full,
    /// `[m] ↦` the `p`-part of `m`.
    PLocal(u64),
}

impl ArithMode {
    fn prime_image(self, p: u64) -> i64 {
        match self {
            ArithMode::Forget => 1,
            ArithMode::Full => p as i64,
            ArithMode::PLocal(q) if q == p => p as i64,
            ArithMode::PLocal(_) => 1,
        }
    }
}

/// Applies `mode` to a polynomial of [`arith_sig`], landing in `Z[x, y]`.
pub fn arith_specialize(p: &ZPoly, mode: ArithMode) -> ZPoly {
    let target = tutte_sig();
    let t = target.clone();
    Specialization::new(p.sig(), &target)
        .keep_common()
        .and_then(|s| s.map_primes("a", move |pr| ZPoly::from_i64(&t, mode.prime_image(pr))))
        .and_then(|s| s.apply(p))
        .expect("x, y and the prime block are all assigned")
}

/// `Σ_A m(A) (x−1)^{rk(M)−rk(A)} (y−1)^{|A|−rk(A)}`.
pub fn arithmetic_tutte(a: &ArithMatroid) -> ZPoly {
    arith_specialize(&universal_arith_tutte(a), ArithMode::Full)
}

/// `K[Z>0][a, b, c, d]`, the prime block again named `a`.
pub fn convolution_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| {
        MonoidSig::builder().naturals(["a", "b", "c", "d"]).primes("a", false).build().expect("fixed signature")
    })
    .clone()
}

/// `P(1 − s, 1 − t)` for `P` over [`arith_sig`], keeping the prime classes.
fn at_one_minus(p: &ZPoly, s: &ZPoly, t: &ZPoly) -> ZPoly {
    let sig = s.sig().clone();
    let one = ZPoly::one(&sig);
    Specialization::new(p.sig(), &sig)
        .set("x", &one - s)
        .and_then(|sp| sp.set("y", &one - t))
        .and_then(|sp| sp.keep_primes("a"))
        .and_then(|sp| sp.apply(p))
        .expect("total assignment")
}

/// `𝔐^uni_{m1 m2}(1−ab, 1−cd) = Σ_A a^{rk(M)−rk(A)} d^{|A|−rk(A)} 𝔐^uni_{m1|A}(1−a, 1−c) 𝔐^uni_{m2/A}(1−b, 1−d)`.
pub fn arith_convolution_check(m1: &ArithMatroid, m2: &ArithMatroid) -> Result<Check, ArithError> {
    let prod = biarith_product(m1, m2)?;
    let sig = convolution_sig();
    let g = |n: &str| ZPoly::generator(&sig, n);
    let (a, b, c, d) = (g("a"), g("b"), g("c"), g("d"));
    let lhs = at_one_minus(&universal_arith_tutte(&prod), &(&a * &b), &(&c * &d));
    let m = &m1.m;
    let r = m.full_rank();
    let mut rhs = ZPoly::zero(&sig);
    for s in 0..=m.full() {
        let rs = m.rank(s);
        let left = at_one_minus(&universal_arith_tutte(&m1.restrict(s)), &a, &c);
        let right = at_one_minus(&universal_arith_tutte(&m2.contract(s)), &b, &d);
        let pre = &a.pow((r - rs) as u32) * &d.pow((popcount(s) - rs) as u32);
        rhs.add_assign(&(&(&pre * &left) * &right));
    }
    Ok(if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(&ArithSystem, &prod, "arithmetic convolution", lhs.render(), rhs.render()))
    })
}

fn eval_xy(p: &ZPoly, x_zero: bool) -> ZPoly {
    let sig = tutte_sig();
    let (zeroed, kept) = if x_zero { ("x", "y") } else { ("y", "x") };
    Specialization::new(p.sig(), &sig)
        .set_i64(zeroed, 0)
        .and_then(|s| s.keep(kept))
        .and_then(|s| s.apply(p))
        .expect("total assignment")
}

/// Both convolution forms for the arithmetic Tutte polynomial in `Z[x, y]`:
/// `𝔐(x,y) = Σ_A 𝔐_{|A}(0,y) 𝔗_{/A}(x,0) = Σ_A 𝔗_{|A}(0,y) 𝔐_{/A}(x,0)`.
pub fn backman_lenz_check(a: &ArithMatroid) -> Check {
    let whole = arithmetic_tutte(a);
    let sig = tutte_sig();
    let (mut first, mut second) = (ZPoly::zero(&sig), ZPoly::zero(&sig));
    for s in 0..=a.m.full() {
        let (res, con) = (a.restrict(s), a.contract(s));
        first.add_assign(&(&eval_xy(&arithmetic_tutte(&res), true) * &eval_xy(&tutte(&con.m), false)));
        second.add_assign(&(&eval_xy(&tutte(&res.m), true) * &eval_xy(&arithmetic_tutte(&con), false)));
    }
    for (name, side) in [("first", first), ("second", second)] {
        if side != whole {
            return Err(Witness::new(
                &ArithSystem,
                a,
                format!("{name} multiplicity-weighted convolution form"),
                whole.render(),
                side.render(),
            ));
        }
    }
    Ok(())
}

/// `Z[Q>0][u, v]` with a rational prime block `a`.
pub fn class_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| MonoidSig::builder().naturals(["u", "v"]).primes("a", true).build().expect("fixed signature"))
        .clone()
}

/// `[M, m] ↦ (m(E)/m(∅)) u^{rk(M)} v^{cork(M)}`; on generators `[c_a] ↦ a·u`, `[l_a] ↦ v/a`.
pub fn arith_class(sig: &Sig) -> Norm<ArithMatroid, BigInt> {
    let sig = sig.clone();
    Arc::new(move |x: &ArithMatroid| {
        let (top, bottom) = (x.mult[x.m.full() as usize], x.mult[0]);
        let g = top.gcd(&bottom);
        let ratio = MRPoly::prime_class(&sig, "a", top / g, bottom / g).expect("positive multiplicities");
        let u = ZPoly::generator(&sig, "u").pow(x.m.full_rank() as u32);
        let v = ZPoly::generator(&sig, "v").pow(x.m.corank() as u32);
        &(&ratio * &u) * &v
    })
}

/// Two-element instances carrying the relations `[c_a][l_a] = [c_1][l_1]`,
/// `[l_a][l_b] = [l_ab][l_1]` and `[c_a][c_b] = [c_ab][c_1]` for `1 ≤ a, b ≤ max`.
pub fn relation_instances(max: i64) -> Vec<ArithMatroid> {
    let mut out = Vec::new();
    for a in 1..=max {
        let p = AbelianPresentation::new(1, vec![], vec![vec![1], vec![a]]).expect("valid");
        out.push(from_presentation(&p).expect("representable"));
        for b in 1..=max {
            if a * b >= 2 {
                let p = AbelianPresentation::new(0, vec![a * b], vec![vec![1], vec![a]]).expect("valid");
                out.push(from_presentation(&p).expect("representable"));
            }
            let p = AbelianPresentation::new(2, vec![], vec![vec![a, 0], vec![1, b]]).expect("valid");
            out.push(from_presentation(&p).expect("representable"));
        }
    }
    out
}

/// Checks a class map against [`relation_instances`], their 1-element minors and
/// absorption of `(∅, k)` for `k ≤ max`.
pub fn relation_check(mapping: &Norm<ArithMatroid, BigInt>, max: i64) -> Check {
    let twos = relation_instances(max);
    let mut ones: Vec<ArithMatroid> = Vec::new();
    for x in &twos {
        for s in [1, 2] {
            ones.push(x.restrict(s));
            ones.push(x.contract(s));
        }
    }
    ones.sort();
    ones.dedup();
    let empties: Vec<ArithMatroid> = (1..=max as u64).map(ArithMatroid::empty).collect();
    check_relations(&ArithSystem, &twos, &ones, &empties, &|x| mapping(x))
}

/// `(−1)^{|T|}`-signed molecule sums of `a`, for reporting.
pub fn molecule_sums(a: &ArithMatroid) -> Result<Vec<(Molecule, i128)>, ArithError> {
    Ok(molecules(&a.m)?.into_iter().map(|mol| (mol, molecule_sum(&a.mult, &mol))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::all_matroids;
    use crate::minors::{delcon_evaluate, minor_axioms_check, norm_law_check};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn column(k: i64) -> ArithMatroid {
        from_presentation(&AbelianPresentation::new(1, vec![], vec![vec![k]]).unwrap()).unwrap()
    }

    fn pres(r: usize, t: Vec<i64>, cols: Vec<Vec<i64>>) -> ArithMatroid {
        from_presentation(&AbelianPresentation::new(r, t, cols).unwrap()).unwrap()
    }

    fn is_mol(m: &RankTable, r: Subset, f: Subset, t: Subset) -> bool {
        molecules(m).unwrap().contains(&Molecule { r, f, t })
    }

    #[test]
    fn molecule_examples() {
        let c = RankTable::coloop();
        assert!(is_mol(&c, 0, 0, 0));
        assert!(is_mol(&c, 0, 1, 0));
        assert!(!is_mol(&c, 0, 0, 1));
        assert!(is_mol(&RankTable::uniform(1, 2), 1, 0, 2));
    }

    #[test]
    fn molecules_match_the_definition() {
        for m in all_matroids(3) {
            let found = molecules(&m).unwrap();
            let mut brute = Vec::new();
            for r in 0..8u32 {
                for f in 0..8u32 {
                    for t in 0..8u32 {
                        if r & f != 0 || r & t != 0 || f & t != 0 {
                            continue;
                        }
                        let top = r | f | t;
                        let ok = (0..8u32)
                            .filter(|a| a & r == r && a & !top == 0)
                            .all(|a| m.rank(a) == m.rank(r) + popcount(a & f));
                        if ok {
                            brute.push(Molecule { r, f, t });
                        }
                    }
                }
            }
            let mut found = found;
            found.sort();
            brute.sort();
            assert_eq!(found, brute);
        }
    }

    #[test]
    fn presentation_examples() {
        let m = pres(1, vec![], vec![vec![1], vec![5]]);
        assert_eq!(m.restrict(1), ArithMatroid::coloop(1));
        assert_eq!(m.contract(1), ArithMatroid::loop_(1));
        assert_eq!(m.restrict(2), ArithMatroid::coloop(5));
        assert_eq!(m.contract(2), ArithMatroid::loop_(5));

        let m = pres(0, vec![6], vec![vec![1], vec![2]]);
        assert_eq!(m.restrict(1), ArithMatroid::loop_(6));
        assert_eq!(m.contract(1), ArithMatroid::loop_(1));
        assert_eq!(m.restrict(2), ArithMatroid::loop_(3).scaled(2));
        assert_eq!(m.contract(2), ArithMatroid::loop_(2));

        let c = column(2);
        assert_eq!((c.matroid().rank(1), c.multiplicity(0), c.multiplicity(1)), (1, 1, 2));
        assert_eq!(column(3).contract(1), ArithMatroid::empty(3));
    }

    #[test]
    fn axioms_reject_bad_multiplicities() {
        assert!(matches!(ArithMatroid::new(RankTable::coloop(), vec![2, 3]), Err(ArithError::Axiom(_))));
        assert!(matches!(ArithMatroid::new(RankTable::loop_(), vec![1, 2]), Err(ArithError::Axiom(_))));
        assert!(ArithMatroid::new(RankTable::coloop(), vec![1, 0]).is_err());
        // Two loops with m = 2,2,2,1 pass (A1) and (A2); the sum over (∅, ∅, {e,f}) is −1.
        let two_loops = RankTable::uniform(0, 2);
        let err = ArithMatroid::new(two_loops, vec![2, 2, 2, 1]).unwrap_err().to_string();
        assert!(err.contains("(P)"), "{err}");
        // A coloop and a loop whose four multiplicities break multiplicativity.
        let cl = RankTable::coloop().direct_sum(&RankTable::loop_()).unwrap();
        let err = ArithMatroid::new(cl, vec![2, 2, 1, 2]).unwrap_err().to_string();
        assert!(err.contains("(A2)"), "{err}");
        assert!(ArithMatroid::new(RankTable::uniform(1, 2), vec![1, 2, 2, 2]).is_ok());
    }

    #[test]
    fn universal_polynomial_examples() {
        let u = universal_arith_tutte(&column(2));
        assert_eq!(u.render(), "1*x^1 + 1*[2^1] - 1");
        assert_eq!(arith_specialize(&u, ArithMode::Full).render(), "1*x^1 + 1");
        assert_eq!(arith_specialize(&u, ArithMode::Forget).render(), "1*x^1");
        assert_eq!(arith_specialize(&u, ArithMode::PLocal(3)).render(), "1*x^1");
        assert_eq!(arith_specialize(&u, ArithMode::PLocal(2)).render(), "1*x^1 + 1");
        assert_eq!(universal_arith_tutte(&ArithMatroid::empty(6)).render(), "1*[2^1*3^1]");
        for m in all_matroids(3) {
            let t = universal_arith_tutte(&ArithMatroid::trivial(m.clone()));
            assert_eq!(arith_specialize(&t, ArithMode::Forget), tutte(&m));
        }
    }

    #[test]
    fn random_presentations() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for i in 0..120 {
            let a = from_presentation(&random_presentation(&mut rng, 1 + i % 4)).unwrap();
            let uni = universal_arith_tutte(&a);
            assert_eq!(uni, universal_arith_direct(&a));
            assert_eq!(uni, delcon_evaluate(&ArithSystem, &a, &arith_spec(), true));
            assert_eq!(arith_specialize(&uni, ArithMode::Forget), tutte(a.matroid()));
            assert!(backman_lenz_check(&a).is_ok());
            assert!(molecule_sums(&a).unwrap().iter().all(|(_, s)| *s >= 0));
            if a.size() >= 2 {
                assert!(minor_axioms_check(&ArithSystem, &a, 1, 2).is_ok());
            }
            let b = from_presentation(&random_presentation(&mut rng, a.size())).unwrap();
            if b.matroid() == a.matroid() {
                assert!(arith_convolution_check(&a, &b).unwrap().is_ok());
            }
            let unit = ArithMatroid::trivial(a.matroid().clone());
            assert!(arith_convolution_check(&a, &unit).unwrap().is_ok());
            assert!(arith_convolution_check(&unit, &a).unwrap().is_ok());
        }
    }

    #[test]
    fn products() {
        let c = column(2);
        let sq = biarith_product(&c, &c).unwrap();
        assert_eq!(sq.multiplicity(1), 4);
        assert_eq!(biarith_product(&c, &ArithMatroid::trivial(RankTable::coloop())).unwrap(), c);
        let u = pres(1, vec![], vec![vec![2], vec![3]]);
        let v = pres(1, vec![], vec![vec![1], vec![4]]);
        assert_eq!(biarith_product(&u, &v).unwrap(), biarith_product(&v, &u).unwrap());
        assert!(matches!(biarith_product(&c, &ArithMatroid::loop_(2)), Err(ArithError::Domain(_))));
        assert!(arith_convolution_check(&u, &v).unwrap().is_ok());
        assert!(arith_convolution_check(&c, &c).unwrap().is_ok());
    }

    #[test]
    fn convolution_with_unit_multiplicities_is_kung() {
        for m in all_matroids(3) {
            let t = ArithMatroid::trivial(m);
            assert!(arith_convolution_check(&t, &t).unwrap().is_ok());
        }
    }

    #[test]
    fn grothendieck_relations_hold() {
        let sig = class_sig();
        let class = arith_class(&sig);
        assert!(relation_check(&class, 6).is_ok());
        assert_eq!(class(&ArithMatroid::coloop(3)).render(), "1*[3^1]*u^1");
        assert_eq!(class(&ArithMatroid::loop_(3)).render(), "1*[3^-1]*v^1");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let a = from_presentation(&random_presentation(&mut rng, 3)).unwrap();
            assert!(norm_law_check(&ArithSystem, &a, &class).is_ok());
        }
        // Ignoring the direction of the ratio is not a norm.
        let s = sig.clone();
        let wrong: Norm<ArithMatroid, BigInt> = Arc::new(move |x: &ArithMatroid| {
            let k = x.multiplicity(x.matroid().full()).max(x.multiplicity(0));
            &MRPoly::prime_class(&s, "a", k, 1).unwrap() * &class(x)
        });
        assert!(relation_check(&wrong, 3).is_err());
    }
}
