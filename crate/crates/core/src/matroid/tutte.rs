use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use crate::algebra::{poly_ring, Coeff, MRPoly, MonoidSig, Sig, Specialization, ZPoly};
use crate::minors::{constant_twist, popcount, tutte_character, CharacterSpec, Check, Norm, Witness};

use super::{MatroidSystem, RankTable};

/// `K[u1, v1, u2, v2]`.
pub fn universal_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| poly_ring(&["u1", "v1", "u2", "v2"])).clone()
}

/// `K[x, y]`.
pub fn tutte_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| poly_ring(&["x", "y"])).clone()
}

/// `M ↦ u^{rk(M)} v^{cork(M)}` on the named axes.
pub fn universal_norm<C: Coeff>(sig: &Sig, u: &str, v: &str) -> Norm<RankTable, C> {
    let u = MRPoly::<C>::generator(sig, u);
    let v = MRPoly::<C>::generator(sig, v);
    Arc::new(move |m: &RankTable| &u.pow(m.full_rank() as u32) * &v.pow(m.corank() as u32))
}

pub fn universal_spec<C: Coeff>() -> CharacterSpec<RankTable, C> {
    let sig = universal_sig();
    CharacterSpec::new(&sig, universal_norm(&sig, "u1", "v1"), constant_twist(&sig), universal_norm(&sig, "u2", "v2"))
}

/// `T^Mat(M)` through the generic subset expansion.
pub fn universal_tutte(m: &RankTable) -> ZPoly {
    tutte_character(&MatroidSystem, m, &universal_spec())
}

/// Corank-nullity generating function `Σ_A x^{rk(M)−rk(A)} y^{|A|−rk(A)}`, by direct counting.
pub fn corank_nullity(m: &RankTable) -> ZPoly {
    let sig = tutte_sig();
    let r = m.full_rank() as i64;
    let mut counts: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for a in 0..=m.full() {
        let ra = m.rank(a) as i64;
        *counts.entry((r - ra, popcount(a) as i64 - ra)).or_default() += 1;
    }
    let mut out = ZPoly::zero(&sig);
    for ((i, j), c) in counts {
        out.add_assign(&ZPoly::term(&sig, &[("x", i), ("y", j)]).unwrap().scale(&BigInt::from(c)));
    }
    out
}

fn shift_by_one() -> Specialization<BigInt> {
    let sig = tutte_sig();
    let x = &ZPoly::generator(&sig, "x") - &ZPoly::one(&sig);
    let y = &ZPoly::generator(&sig, "y") - &ZPoly::one(&sig);
    Specialization::new(&sig, &sig).set("x", x).unwrap().set("y", y).unwrap()
}

/// The Tutte polynomial `𝔗_M(x, y)`.
pub fn tutte(m: &RankTable) -> ZPoly {
    shift_by_one().apply(&corank_nullity(m)).expect("total assignment")
}

/// `𝔗_M` read off `T^Mat(M)` at `(u1, v1, u2, v2) = (1, y−1, x−1, 1)`.
pub fn tutte_from_universal(t: &ZPoly) -> ZPoly {
    let sig = tutte_sig();
    let x1 = &ZPoly::generator(&sig, "x") - &ZPoly::one(&sig);
    let y1 = &ZPoly::generator(&sig, "y") - &ZPoly::one(&sig);
    Specialization::new(t.sig(), &sig)
        .set_i64("u1", 1)
        .and_then(|s| s.set("v1", y1))
        .and_then(|s| s.set("u2", x1))
        .and_then(|s| s.set_i64("v2", 1))
        .and_then(|s| s.apply(t))
        .expect("universal signature")
}

/// `Σ_A (∏_{e∈A} a_e) (x−1)^{rk(M)−rk(A)} (y−1)^{|A|−rk(A)}` with one axis `a{e}` per element.
pub fn multivariate_tutte(m: &RankTable) -> ZPoly {
    let names: Vec<String> = ["x".to_string(), "y".to_string()]
        .into_iter()
        .chain((0..m.size()).map(|e| format!("a{e}")))
        .collect();
    let sig = MonoidSig::builder().naturals(names.iter().map(String::as_str)).build().expect("distinct names");
    let x1 = &ZPoly::generator(&sig, "x") - &ZPoly::one(&sig);
    let y1 = &ZPoly::generator(&sig, "y") - &ZPoly::one(&sig);
    let r = m.full_rank();
    let mut out = ZPoly::zero(&sig);
    for a in 0..=m.full() {
        let ra = m.rank(a);
        let mut t = &x1.pow((r - ra) as u32) * &y1.pow((popcount(a) - ra) as u32);
        for e in crate::minors::elements(a) {
            t = &t * &ZPoly::generator(&sig, &format!("a{e}"));
        }
        out.add_assign(&t);
    }
    out
}

/// `T^Mat(M) = u1^{rk} v2^{cork} 𝔗_M(1 + u2/u1, 1 + v1/v2)`, checked in the ring where
/// u1 and v2 are invertible.
pub fn prefactor_check(m: &RankTable) -> Check {
    let laurent = MonoidSig::builder()
        .laurent("u1")
        .natural("v1")
        .natural("u2")
        .laurent("v2")
        .build()
        .expect("distinct names");
    let g = |n: &str| ZPoly::generator(&laurent, n);
    let one = ZPoly::one(&laurent);
    let x = &one + &(&g("u2") * &g("u1").powi(-1).unwrap());
    let y = &one + &(&g("v1") * &g("v2").powi(-1).unwrap());
    let at = Specialization::new(&tutte_sig(), &laurent).set("x", x).unwrap().set("y", y).unwrap();
    let pre = &g("u1").pow(m.full_rank() as u32) * &g("v2").pow(m.corank() as u32);
    let rhs = &pre * &at.apply(&tutte(m)).expect("total assignment");
    let embed = Specialization::new(&universal_sig(), &laurent).keep_common().unwrap();
    let lhs = embed.apply(&universal_tutte(m)).expect("total assignment");
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(&MatroidSystem, m, "prefactor identity", lhs.render(), rhs.render()))
    }
}
