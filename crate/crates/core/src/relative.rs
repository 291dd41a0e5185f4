//! Relative matroids: matroids on `E ⊔ E₀` whose zero set `E₀` is never minored, with
//! the relative Tutte polynomial twisted by the connected components of the `E₀`-part.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{MRPoly, MonoidSig, Sig, Specialization, ZPoly};
use crate::delta_persp::{las_vergnas, matper_norm, Perspective};
use crate::matroid::{heap_permutations, MatroidError, RankTable};
use crate::minors::{elements, full_set, popcount, tutte_character, CharacterSpec, MinorsSystem, Norm, Subset};

/// Largest `|E ⊔ E₀|` accepted by the polynomial computations.
pub const RELATIVE_CAP: usize = 16;
const ZERO_CANON_CAP: usize = 5;

#[derive(Debug, Error)]
pub enum RelativeError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size error: {0}")]
    Size(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Matroid on `E ⊔ E₀`, stored with `E` on positions `0..n` and the zero set after it.
/// The zero-set part is brought to a canonical labeling when it has at most five elements,
/// so equality is up to relabeling of `E₀`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelMatroid {
    m: RankTable,
    n: usize,
}

impl RelMatroid {
    /// From a matroid and the indices of its zero set; the remaining elements keep their
    /// relative order and become `0..n`.
    pub fn new(m: RankTable, zero_set: Subset) -> Result<Self, RelativeError> {
        let total = m.size();
        if zero_set & !m.full() != 0 {
            return Err(RelativeError::Domain("zero set outside the ground set".into()));
        }
        let n = total - popcount(zero_set);
        let mut perm = vec![0usize; total];
        let (mut e, mut z) = (0, n);
        for (i, p) in perm.iter_mut().enumerate() {
            if zero_set >> i & 1 == 1 {
                *p = z;
                z += 1;
            } else {
                *p = e;
                e += 1;
            }
        }
        Ok(RelMatroid::normalized(m.permute(&perm), n))
    }

    fn normalized(m: RankTable, n: usize) -> Self {
        let n0 = m.size() - n;
        if !(2..=ZERO_CANON_CAP).contains(&n0) {
            return RelMatroid { m, n };
        }
        let mut perm: Vec<usize> = (0..n0).collect();
        let mut best = m.clone();
        heap_permutations(&mut perm, &mut |p| {
            let full: Vec<usize> = (0..n).chain(p.iter().map(|&j| n + j)).collect();
            let cand = m.permute(&full);
            if cand < best {
                best = cand;
            }
        });
        RelMatroid { m: best, n }
    }

    /// A plain matroid viewed with empty zero set.
    pub fn from_matroid(m: RankTable) -> Self {
        let n = m.size();
        RelMatroid { m, n }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero_size(&self) -> usize {
        self.m.size() - self.n
    }

    pub fn matroid(&self) -> &RankTable {
        &self.m
    }

    fn zero_mask(&self) -> Subset {
        self.m.full() & !full_set(self.n)
    }

    /// Restriction to `A ⊆ E`; the zero set is kept.
    pub fn restrict(&self, a: Subset) -> Self {
        let a = a & full_set(self.n);
        RelMatroid::normalized(self.m.restrict(a | self.zero_mask()), popcount(a))
    }

    /// Contraction of `A ⊆ E`.
    pub fn contract(&self, a: Subset) -> Self {
        let a = a & full_set(self.n);
        RelMatroid::normalized(self.m.contract(a), self.n - popcount(a))
    }

    /// Checked minor: `A` must avoid the zero set.
    pub fn minor(&self, a: Subset, contract: bool) -> Result<Self, RelativeError> {
        if a & !full_set(self.n) != 0 {
            return Err(RelativeError::Domain("minors are only taken on E".into()));
        }
        Ok(if contract { self.contract(a) } else { self.restrict(a) })
    }

    pub fn direct_sum(&self, o: &Self) -> Result<Self, RelativeError> {
        let sum = self.m.direct_sum(&o.m)?;
        let (n1, z1, n2) = (self.n, self.zero_size(), o.n);
        let total = sum.size();
        let perm: Vec<usize> = (0..total)
            .map(|i| {
                if i < n1 {
                    i
                } else if i < n1 + z1 {
                    n1 + n2 + (i - n1)
                } else if i < n1 + z1 + n2 {
                    n1 + (i - n1 - z1)
                } else {
                    i
                }
            })
            .collect();
        Ok(RelMatroid::normalized(sum.permute(&perm), n1 + n2))
    }

    /// The matroid induced on `E₀`.
    pub fn zero_matroid(&self) -> RankTable {
        self.m.restrict(self.zero_mask())
    }

    /// `(M ∖ E₀, M / E₀)`.
    pub fn to_perspective(&self) -> Perspective {
        Perspective::new(self.m.restrict(full_set(self.n)), self.m.contract(self.zero_mask()))
            .expect("deletion and contraction of a set form a perspective")
    }

    pub fn to_json(&self) -> Value {
        let zero: Vec<usize> = elements(self.zero_mask()).collect();
        json!({"type": "relative", "matroid": self.m.to_json(), "zero_set": zero})
    }

    fn key(&self) -> String {
        format!("{}:{}", self.n, self.m.key())
    }
}

/// Canonical forms of the connected components of `m`, sorted.
pub fn component_classes(m: &RankTable) -> Result<Vec<RankTable>, MatroidError> {
    let mut out: Vec<RankTable> =
        m.connected_components().into_iter().map(|c| m.restrict(c).canonical_form()).collect::<Result<_, _>>()?;
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RelativeSystem;

impl MinorsSystem for RelativeSystem {
    type Obj = RelMatroid;

    fn name(&self) -> &'static str {
        "relative"
    }
    fn ground_size(&self, x: &RelMatroid) -> usize {
        x.n
    }
    fn restrict(&self, x: &RelMatroid, a: Subset) -> RelMatroid {
        x.restrict(a)
    }
    fn contract(&self, x: &RelMatroid, a: Subset) -> RelMatroid {
        x.contract(a)
    }
    fn sum_empty(&self, x: &RelMatroid, y: &RelMatroid) -> RelMatroid {
        x.direct_sum(y).expect("within the size cap")
    }
    fn unit(&self) -> RelMatroid {
        RelMatroid::from_matroid(RankTable::empty())
    }
    fn direct_sum(&self, x: &RelMatroid, y: &RelMatroid) -> Option<RelMatroid> {
        x.direct_sum(y).ok()
    }
    fn class_key(&self, x: &RelMatroid) -> String {
        if x.n > 4 {
            return x.key();
        }
        let mut perm: Vec<usize> = (0..x.n).collect();
        let total = x.m.size();
        let mut best = x.clone();
        heap_permutations(&mut perm, &mut |p| {
            let full: Vec<usize> = p.iter().copied().chain(x.n..total).collect();
            let cand = RelMatroid::normalized(x.m.permute(&full), x.n);
            if cand < best {
                best = cand;
            }
        });
        best.key()
    }
    fn memo_key(&self, x: &RelMatroid) -> Option<String> {
        Some(x.key())
    }
    fn to_json(&self, x: &RelMatroid) -> Value {
        x.to_json()
    }
}

/// A relative Tutte value with the legend of its component axes `C0, C1, …`.
#[derive(Clone, Debug)]
pub struct RelativeTutte {
    pub poly: ZPoly,
    /// `(axis name, connected matroid)` in axis order.
    pub legend: Vec<(String, RankTable)>,
}

impl RelativeTutte {
    pub fn legend_json(&self) -> Value {
        self.legend.iter().map(|(name, m)| json!({"axis": name, "matroid": m.to_json()})).collect()
    }
}

/// Every connected class occurring in some `(M|A⊔E₀)/A`, keyed to its axis index.
fn collect_classes(m: &RelMatroid) -> Result<BTreeMap<RankTable, usize>, RelativeError> {
    let mut seen = BTreeSet::new();
    for a in 0..=full_set(m.n) {
        seen.extend(component_classes(&m.restrict(a).contract(full_set(popcount(a))).m)?);
    }
    Ok(seen.into_iter().enumerate().map(|(i, c)| (c, i)).collect())
}

fn axis_name(i: usize) -> String {
    format!("C{i}")
}

fn ring(classes: &BTreeMap<RankTable, usize>, tail: &[&str]) -> Sig {
    let names: Vec<String> = (0..classes.len()).map(axis_name).chain(tail.iter().map(|s| s.to_string())).collect();
    MonoidSig::builder().naturals(names.iter().map(String::as_str)).build().expect("distinct names")
}

fn component_twist(sig: &Sig, classes: &BTreeMap<RankTable, usize>) -> Norm<RelMatroid, num_bigint::BigInt> {
    let (sig, classes) = (sig.clone(), classes.clone());
    Arc::new(move |x: &RelMatroid| {
        let comps = component_classes(&x.m).expect("zero-set parts are within the canonical cap");
        comps.iter().fold(MRPoly::one(&sig), |acc, c| &acc * &MRPoly::generator(&sig, &axis_name(classes[c])))
    })
}

/// Norm pulled back from perspectives: `u^{rk(M/E₀)} v^{cork(M∖E₀)} w^{rk(M∖E₀) − rk(M/E₀)}`.
pub fn relative_norm(sig: &Sig, u: &str, v: &str, w: &str) -> Norm<RelMatroid, num_bigint::BigInt> {
    let inner = matper_norm(sig, u, v, w);
    Arc::new(move |x: &RelMatroid| inner(&x.to_perspective()))
}

fn check_size(m: &RelMatroid) -> Result<(), RelativeError> {
    if m.m.size() > RELATIVE_CAP {
        return Err(RelativeError::Size(format!("|E ⊔ E₀| = {} exceeds {RELATIVE_CAP}", m.m.size())));
    }
    Ok(())
}

/// Six-variable universal character over `R₀[u1, v1, w1, u2, v2, w2]`.
pub fn relative_universal(m: &RelMatroid) -> Result<RelativeTutte, RelativeError> {
    let (spec, classes) = spec_for(m)?;
    let poly = tutte_character(&RelativeSystem, m, &spec);
    Ok(RelativeTutte { poly, legend: legend(&classes) })
}

/// The six-variable character spec over the coefficient ring generated by the zero-set
/// components of `m`.
pub fn relative_spec(m: &RelMatroid) -> Result<CharacterSpec<RelMatroid, num_bigint::BigInt>, RelativeError> {
    spec_for(m).map(|(spec, _)| spec)
}

type SpecWithClasses = (CharacterSpec<RelMatroid, num_bigint::BigInt>, BTreeMap<RankTable, usize>);

fn spec_for(m: &RelMatroid) -> Result<SpecWithClasses, RelativeError> {
    check_size(m)?;
    let classes = collect_classes(m)?;
    let sig = ring(&classes, &["u1", "v1", "w1", "u2", "v2", "w2"]);
    let spec = CharacterSpec::new(
        &sig,
        relative_norm(&sig, "u1", "v1", "w1"),
        component_twist(&sig, &classes),
        relative_norm(&sig, "u2", "v2", "w2"),
    );
    Ok((spec, classes))
}

fn legend(classes: &BTreeMap<RankTable, usize>) -> Vec<(String, RankTable)> {
    let mut v: Vec<(String, RankTable)> = classes.iter().map(|(c, &i)| (axis_name(i), c.clone())).collect();
    v.sort_by_key(|(name, _)| name[1..].parse::<usize>().unwrap_or(0));
    v
}

/// Relative Tutte polynomial over `R₀[x, y, z]`, from the universal character at
/// `(u1, v1, w1, u2, v2, w2) = (1, y−1, 1, x−1, 1, z)`.
pub fn relative_tutte(m: &RelMatroid) -> Result<RelativeTutte, RelativeError> {
    let uni = relative_universal(m)?;
    let classes = collect_classes(m)?;
    let sig = ring(&classes, &["x", "y", "z"]);
    let one = ZPoly::one(&sig);
    let g = |n: &str| ZPoly::generator(&sig, n);
    let mut s = Specialization::new(uni.poly.sig(), &sig).keep_common().expect("component axes shared");
    for (name, v) in [
        ("u1", one.clone()),
        ("v1", &g("y") - &one),
        ("w1", one.clone()),
        ("u2", &g("x") - &one),
        ("v2", one.clone()),
        ("w2", g("z")),
    ] {
        s = s.set(name, v).expect("universal axis");
    }
    Ok(RelativeTutte { poly: s.apply(&uni.poly).expect("total assignment"), legend: uni.legend })
}

/// Direct subset expansion of the relative Tutte polynomial, used as an oracle.
pub fn relative_tutte_direct(m: &RelMatroid) -> Result<RelativeTutte, RelativeError> {
    check_size(m)?;
    let classes = collect_classes(m)?;
    let sig = ring(&classes, &["x", "y", "z"]);
    let twist = component_twist(&sig, &classes);
    let one = ZPoly::one(&sig);
    let x1 = &ZPoly::generator(&sig, "x") - &one;
    let y1 = &ZPoly::generator(&sig, "y") - &one;
    let z = ZPoly::generator(&sig, "z");
    let zero = m.zero_mask();
    let rk = |a: Subset| m.m.rank(a) as i64;
    let (e, all) = (full_set(m.n), m.m.full());
    let mut out = ZPoly::zero(&sig);
    for a in 0..=e {
        let tau = twist(&m.restrict(a).contract(full_set(popcount(a))));
        let t = &(&x1.pow((rk(all) - rk(a | zero)) as u32) * &y1.pow((popcount(a) as i64 - rk(a)) as u32))
            * &z.pow((rk(e) + rk(a | zero) - rk(a) - rk(all)) as u32);
        out.add_assign(&(&tau * &t));
    }
    Ok(RelativeTutte { poly: out, legend: legend(&classes) })
}

/// Las Vergnas's Tutte polynomial of M pointed by `E₀`: every component axis sent to 1,
/// times `z^{rk(E ⊔ E₀) − rk(E)}`.
pub fn pointed_tutte(m: &RelMatroid) -> Result<ZPoly, RelativeError> {
    let rel = relative_tutte(m)?;
    let sig = crate::delta_persp::lv_sig();
    let mut s = Specialization::new(rel.poly.sig(), &sig).keep_common().expect("x, y, z shared");
    for (name, _) in &rel.legend {
        s = s.set_i64(name, 1).expect("component axis");
    }
    let shift = (m.m.full_rank() - m.m.rank(full_set(m.n))) as u32;
    Ok(&s.apply(&rel.poly).expect("total assignment") * &ZPoly::generator(&sig, "z").pow(shift))
}

/// The relative polynomial with every component axis sent to 1 equals the Las Vergnas
/// polynomial of the associated perspective.
pub fn las_vergnas_consistency(m: &RelMatroid) -> Result<bool, RelativeError> {
    let shift = (m.m.full_rank() - m.m.rank(full_set(m.n))) as u32;
    let lv = &las_vergnas(&m.to_perspective()) * &ZPoly::generator(&crate::delta_persp::lv_sig(), "z").pow(shift);
    Ok(pointed_tutte(m)? == lv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{all_matroids, tutte};
    use crate::minors::{delcon_evaluate, minor_axioms_check};

    fn u12_pointed() -> RelMatroid {
        RelMatroid::new(RankTable::uniform(1, 2), 0b10).unwrap()
    }

    #[test]
    fn minors_keep_the_zero_set() {
        let m = u12_pointed();
        let c = m.contract(1);
        assert_eq!(c.size(), 0);
        assert_eq!(c.zero_matroid(), RankTable::loop_());
        assert_eq!(m.restrict(0).zero_matroid(), RankTable::coloop());
        assert_eq!(m.contract(0), m);
        assert!(m.minor(0b10, true).is_err());
        let plain = RelMatroid::from_matroid(RankTable::uniform(2, 3));
        assert_eq!(plain.contract(1).matroid(), &RankTable::uniform(2, 3).contract(1));
    }

    #[test]
    fn perspective_image() {
        let p = u12_pointed().to_perspective();
        assert_eq!((p.m, p.mp), (RankTable::coloop(), RankTable::loop_()));
        let u = RankTable::uniform(2, 3);
        let p = RelMatroid::from_matroid(u.clone()).to_perspective();
        assert_eq!((p.m, p.mp), (u.clone(), u));
    }

    #[test]
    fn twist_distinguishes_zero_set_minors() {
        let rel = relative_tutte(&u12_pointed()).unwrap();
        assert_eq!(rel.legend.len(), 2);
        assert_eq!(rel.poly.render(), "1*C1^1*z^1 + 1*C0^1");
        assert_eq!(rel.legend[0].1, RankTable::loop_());
        assert_eq!(rel.legend[1].1, RankTable::coloop());
    }

    #[test]
    fn empty_zero_set_gives_tutte() {
        for m in all_matroids(3) {
            let rel = relative_tutte(&RelMatroid::from_matroid(m.clone())).unwrap();
            assert!(rel.legend.is_empty());
            let sig = crate::matroid::tutte_sig();
            let s = Specialization::new(rel.poly.sig(), &sig).keep_common().unwrap().set_i64("z", 0).unwrap();
            assert_eq!(s.apply(&rel.poly).unwrap(), tutte(&m));
        }
    }

    #[test]
    fn exhaustive_small_consistency() {
        for total in 0..=4 {
            for m in all_matroids(total) {
                for zero in 0..=m.full() {
                    let r = RelMatroid::new(m.clone(), zero).unwrap();
                    assert!(las_vergnas_consistency(&r).unwrap());
                    let direct = relative_tutte_direct(&r).unwrap();
                    assert_eq!(relative_tutte(&r).unwrap().poly, direct.poly);
                }
            }
        }
    }

    #[test]
    fn recurrence_and_axioms() {
        let m = RelMatroid::new(RankTable::uniform(2, 4), 0b1000).unwrap();
        let classes = collect_classes(&m).unwrap();
        let sig = ring(&classes, &["u1", "v1", "w1", "u2", "v2", "w2"]);
        let spec = CharacterSpec::new(
            &sig,
            relative_norm(&sig, "u1", "v1", "w1"),
            component_twist(&sig, &classes),
            relative_norm(&sig, "u2", "v2", "w2"),
        );
        assert_eq!(delcon_evaluate(&RelativeSystem, &m, &spec, false), relative_universal(&m).unwrap().poly);
        assert!(minor_axioms_check(&RelativeSystem, &m, 0b001, 0b010).is_ok());
    }

    #[test]
    fn components_reassemble() {
        for m in all_matroids(4) {
            let comps = component_classes(&m).unwrap();
            let sum = comps.iter().fold(RankTable::empty(), |acc, c| acc.direct_sum(c).unwrap());
            assert!(sum.is_isomorphic(&m).unwrap());
        }
    }
}
