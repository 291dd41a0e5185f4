//! Submodular functions, polymatroids and r-polymatroids.

use std::sync::{Arc, OnceLock};

use rand::Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{Coeff, MRPoly, MonoidSig, Sig, Specialization, ZPoly};
use crate::delta_persp::{matper_norm, Perspective};
use crate::matroid::{random_matroid, RankTable};
use crate::minors::{constant_twist, elements, expand, full_set, popcount, tutte_character, CharacterSpec, Check, MinorsSystem, Norm, Subset, Witness, MAX_GROUND};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubmodError {
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("size error: {0}")]
    Size(String),
}

/// Integer-valued set function with `rk(∅) = 0`, submodular.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubmodTable {
    n: usize,
    rk: Vec<i64>,
}

impl SubmodTable {
    pub fn new(n: usize, rk: Vec<i64>) -> Result<Self, SubmodError> {
        if n > MAX_GROUND || rk.len() != 1 << n {
            return Err(SubmodError::Size(format!("expected {} values for {n} elements", 1u64 << n.min(63))));
        }
        if rk[0] != 0 {
            return Err(SubmodError::Axiom("rk(∅) must be 0".into()));
        }
        let t = SubmodTable { n, rk };
        // Local submodularity on every A and pair e, f outside A is equivalent to the global form.
        for a in 0..=t.full() {
            for e in 0..n {
                for f in e + 1..n {
                    let (be, bf) = (1 << e, 1 << f);
                    if a & (be | bf) != 0 {
                        continue;
                    }
                    if t.rank(a | be) + t.rank(a | bf) < t.rank(a | be | bf) + t.rank(a) {
                        return Err(SubmodError::Axiom(format!("submodularity fails at {a:#b} with {e}, {f}")));
                    }
                }
            }
        }
        Ok(t)
    }

    /// A submodular table that must also be nondecreasing.
    pub fn polymatroid(n: usize, rk: Vec<i64>) -> Result<Self, SubmodError> {
        let t = Self::new(n, rk)?;
        if !t.is_polymatroid() {
            return Err(SubmodError::Axiom("rank function is not nondecreasing".into()));
        }
        Ok(t)
    }

    /// `s_b`: one element of rank `b`.
    pub fn single(b: i64) -> Self {
        SubmodTable { n: 1, rk: vec![0, b] }
    }

    pub fn empty() -> Self {
        SubmodTable { n: 0, rk: vec![0] }
    }

    /// The inclusion of matroids into polymatroids.
    pub fn from_matroid(m: &RankTable) -> Self {
        SubmodTable { n: m.size(), rk: m.table().iter().map(|&r| r as i64).collect() }
    }

    /// The 2-polymatroid with `rk = rk_M + rk_{M'}`.
    pub fn rank_sum(p: &Perspective) -> Self {
        let rk = (0..=p.m.full()).map(|a| (p.m.rank(a) + p.mp.rank(a)) as i64).collect();
        SubmodTable::polymatroid(p.size(), rk).expect("sums of matroid ranks are polymatroids")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        full_set(self.n)
    }

    pub fn rank(&self, a: Subset) -> i64 {
        self.rk[a as usize]
    }

    pub fn full_rank(&self) -> i64 {
        self.rk[self.full() as usize]
    }

    pub fn table(&self) -> &[i64] {
        &self.rk
    }

    pub fn is_polymatroid(&self) -> bool {
        (0..=self.full()).all(|a| elements(self.full() & !a).all(|e| self.rank(a | 1 << e) >= self.rank(a)))
    }

    /// Largest singleton rank, the least r for which this is an r-polymatroid.
    pub fn r_bound(&self) -> Option<i64> {
        (0..self.n).map(|e| self.rank(1 << e)).max()
    }

    pub fn restrict(&self, a: Subset) -> Self {
        let a = a & self.full();
        let k = popcount(a);
        SubmodTable { n: k, rk: (0..1u32 << k).map(|b| self.rank(expand(b, a))).collect() }
    }

    pub fn contract(&self, a: Subset) -> Self {
        let a = a & self.full();
        let rest = self.full() & !a;
        let k = popcount(rest);
        let base = self.rank(a);
        SubmodTable { n: k, rk: (0..1u32 << k).map(|b| self.rank(expand(b, rest) | a) - base).collect() }
    }

    pub fn direct_sum(&self, o: &Self) -> Result<Self, SubmodError> {
        let n = self.n + o.n;
        if n > MAX_GROUND {
            return Err(SubmodError::Size(format!("direct sum has {n} elements")));
        }
        let low = self.full();
        Ok(SubmodTable { n, rk: (0..1u32 << n).map(|a| self.rank(a & low) + o.rank(a >> self.n)).collect() })
    }

    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut rk = vec![0; self.rk.len()];
        for a in 0..=self.full() {
            let b = elements(a).fold(0, |acc, e| acc | 1 << perm[e]);
            rk[b as usize] = self.rank(a);
        }
        SubmodTable { n: self.n, rk }
    }

    pub fn to_json(&self) -> Value {
        json!({"type": "submodular", "n": self.n, "rank": self.rk})
    }
}

/// Random submodular table: `Σ c_i rk_{M_i} + w`, with `c_i ∈ 0..=2` over two random
/// matroids and a modular part `w_e ∈ −2..=2`. Polymatroid when `modular_sign` is false.
pub fn random_table<R: Rng>(rng: &mut R, n: usize, modular_sign: bool) -> SubmodTable {
    let ms = [random_matroid(rng, n), random_matroid(rng, n)];
    let cs: Vec<i64> = ms.iter().map(|_| rng.gen_range(0..=2)).collect();
    let lo = if modular_sign { -2 } else { 0 };
    let w: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=2)).collect();
    let rk = (0..=full_set(n))
        .map(|a| {
            let base: i64 = ms.iter().zip(&cs).map(|(m, c)| c * m.rank(a) as i64).sum();
            base + elements(a).map(|e| w[e]).sum::<i64>()
        })
        .collect();
    SubmodTable::new(n, rk).expect("nonnegative combinations of rank functions plus a modular term are submodular")
}

/// The 2-element function `(0, a, c, a+b)` whose splits give `[s_a][s_b] = [s_c][s_d]`
/// when `a + b = c + d` and `a` is the largest of the four.
pub fn relation_witness(a: i64, b: i64, c: i64, d: i64) -> Result<SubmodTable, SubmodError> {
    if a + b != c + d {
        return Err(SubmodError::Axiom("a + b must equal c + d".into()));
    }
    SubmodTable::new(2, vec![0, a, c, a + b])
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SubmodSystem;

impl MinorsSystem for SubmodSystem {
    type Obj = SubmodTable;

    fn name(&self) -> &'static str {
        "submodular"
    }
    fn ground_size(&self, x: &SubmodTable) -> usize {
        x.n
    }
    fn restrict(&self, x: &SubmodTable, a: Subset) -> SubmodTable {
        x.restrict(a)
    }
    fn contract(&self, x: &SubmodTable, a: Subset) -> SubmodTable {
        x.contract(a)
    }
    fn sum_empty(&self, x: &SubmodTable, _y: &SubmodTable) -> SubmodTable {
        x.clone()
    }
    fn unit(&self) -> SubmodTable {
        SubmodTable::empty()
    }
    fn direct_sum(&self, x: &SubmodTable, y: &SubmodTable) -> Option<SubmodTable> {
        x.direct_sum(y).ok()
    }
    fn class_key(&self, x: &SubmodTable) -> String {
        let mut best = x.clone();
        if x.n <= 7 {
            let mut perm: Vec<usize> = (0..x.n).collect();
            crate::matroid::heap_permutations(&mut perm, &mut |p| {
                let c = x.permute(p);
                if c < best {
                    best = c;
                }
            });
        }
        format!("{}:{:?}", best.n, best.rk)
    }
    fn label(&self, x: &SubmodTable) -> String {
        if x.n == 1 {
            format!("s{}", x.rk[1])
        } else {
            self.class_key(x)
        }
    }
    fn memo_key(&self, x: &SubmodTable) -> Option<String> {
        Some(format!("{}:{:?}", x.n, x.rk))
    }
    fn to_json(&self, x: &SubmodTable) -> Value {
        x.to_json()
    }
}

/// `x^ℕ y^ℤ` as `K[x, y^{±1}]`.
pub fn image_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| MonoidSig::builder().natural("x").laurent("y").build().expect("distinct names")).clone()
}

/// `K[x1, y1^{±1}, x2, y2^{±1}]`.
pub fn sf_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| {
        MonoidSig::builder().natural("x1").laurent("y1").natural("x2").laurent("y2").build().expect("distinct names")
    })
    .clone()
}

/// `M ↦ x^{|E|} y^{rk(E)}` on the named axes.
pub fn sf_norm<C: Coeff>(sig: &Sig, x: &str, y: &str) -> Norm<SubmodTable, C> {
    let (sig, x, y) = (sig.clone(), x.to_string(), y.to_string());
    Arc::new(move |m: &SubmodTable| {
        MRPoly::term(&sig, &[(&x, m.n as i64), (&y, m.full_rank())]).expect("y is a Laurent axis")
    })
}

/// Class of `M` in the Grothendieck monoid, as `x^{|E|} y^{rk(E)}`.
pub fn universal_image(m: &SubmodTable) -> ZPoly {
    sf_norm(&image_sig(), "x", "y")(m)
}

/// Membership in `{1} ∪ {x^a y^b : a > 0}`.
pub fn in_image(exps: (i64, i64)) -> bool {
    exps == (0, 0) || exps.0 > 0
}

/// `T^SF(M) = Σ_A x1^{|A|} y1^{rk(A)} x2^{|E∖A|} y2^{rk(M/A)}`, by the generic engine.
pub fn t_sf(m: &SubmodTable) -> ZPoly {
    let sig = sf_sig();
    let spec = CharacterSpec::new(&sig, sf_norm(&sig, "x1", "y1"), constant_twist(&sig), sf_norm(&sig, "x2", "y2"));
    tutte_character(&SubmodSystem, m, &spec)
}

/// `x2^{|E|} y2^{rk(E)} Σ_A (x1/x2)^{|A|} (y1/y2)^{rk(A)}`, evaluated in the ring where x2 is
/// also invertible.
pub fn sf_prefactor_check(m: &SubmodTable) -> Check {
    let ring = MonoidSig::builder().natural("x1").laurent("y1").laurent("x2").laurent("y2").build().expect("distinct names");
    let pre = ZPoly::term(&ring, &[("x2", m.n as i64), ("y2", m.full_rank())]).expect("laurent axes");
    let mut sum = ZPoly::zero(&ring);
    for a in 0..=m.full() {
        let k = popcount(a) as i64;
        let r = m.rank(a);
        sum.add_assign(&ZPoly::term(&ring, &[("x1", k), ("x2", -k), ("y1", r), ("y2", -r)]).expect("laurent axes"));
    }
    let embed = Specialization::new(&sf_sig(), &ring).keep_common().unwrap();
    let lhs = embed.apply(&t_sf(m)).expect("total assignment");
    let rhs = &pre * &sum;
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(&SubmodSystem, m, "prefactor form", lhs.render(), rhs.render()))
    }
}

/// Every monomial of `T^SF(M)` has x-degree `|E|` and y-degree `rk(E)`.
pub fn sf_homogeneous(m: &SubmodTable) -> bool {
    t_sf(m).terms().all(|(e, _)| e.exps[0] + e.exps[2] == m.n as i64 && e.exps[1] + e.exps[3] == m.full_rank())
}

/// `T^SF(j(M))` against `T^Mat(M)` under `u_i ↦ x_i y_i`, `v_i ↦ x_i`.
pub fn matroid_inclusion_check(m: &RankTable) -> bool {
    let sig = sf_sig();
    let g = |n: &str| ZPoly::generator(&sig, n);
    let s = Specialization::new(&crate::matroid::universal_sig(), &sig)
        .set("u1", &g("x1") * &g("y1"))
        .and_then(|s| s.set("v1", g("x1")))
        .and_then(|s| s.set("u2", &g("x2") * &g("y2")))
        .and_then(|s| s.set("v2", g("x2")))
        .expect("universal axes");
    s.apply(&crate::matroid::universal_tutte(m)).expect("total assignment") == t_sf(&SubmodTable::from_matroid(m))
}

/// The norm relation `N(s_0) N(s_2) = N(s_1)²` on 2-polymatroids.
pub fn ow_norm_relation_check<C: Coeff>(n0: &MRPoly<C>, n1: &MRPoly<C>, n2: &MRPoly<C>) -> bool {
    (n0 * n2) == (n1 * n1)
}

/// The class of `rank_sum(M, M')` equals the perspective class under
/// `u ↦ x y², v ↦ x, w ↦ x y`.
pub fn rank_sum_class_check(p: &Perspective) -> bool {
    let sig = image_sig();
    let mp_sig = crate::algebra::poly_ring(&["u", "v", "w"]);
    let class: ZPoly = matper_norm(&mp_sig, "u", "v", "w")(p);
    let s = Specialization::new(&mp_sig, &sig)
        .set_term("u", 1.into(), &[("x", 1), ("y", 2)])
        .and_then(|s| s.set_term("v", 1.into(), &[("x", 1)]))
        .and_then(|s| s.set_term("w", 1.into(), &[("x", 1), ("y", 1)]))
        .expect("image axes");
    s.apply(&class).expect("total assignment") == universal_image(&SubmodTable::rank_sum(p))
}
