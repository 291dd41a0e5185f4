use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{Coeff, MRPoly, Sig};

use super::{full_set, popcount, MinorsSystem, Subset};

/// Structure-to-ring map used for norms and twists.
pub type Norm<O, C> = Arc<dyn Fn(&O) -> MRPoly<C> + Send + Sync>;

/// The bundle (norm₁, twist, norm₂) defining `T = N1 * τ * N2`.
pub struct CharacterSpec<O, C: Coeff> {
    pub sig: Sig,
    pub norm1: Norm<O, C>,
    pub twist: Norm<O, C>,
    pub norm2: Norm<O, C>,
}

impl<O, C: Coeff> Clone for CharacterSpec<O, C> {
    fn clone(&self) -> Self {
        CharacterSpec {
            sig: self.sig.clone(),
            norm1: self.norm1.clone(),
            twist: self.twist.clone(),
            norm2: self.norm2.clone(),
        }
    }
}

impl<O: 'static, C: Coeff> CharacterSpec<O, C> {
    pub fn new(sig: &Sig, norm1: Norm<O, C>, twist: Norm<O, C>, norm2: Norm<O, C>) -> Self {
        CharacterSpec { sig: sig.clone(), norm1, twist, norm2 }
    }
}

/// The twist that is identically 1.
pub fn constant_twist<O: 'static, C: Coeff>(sig: &Sig) -> Norm<O, C> {
    let one = MRPoly::one(sig);
    Arc::new(move |_| one.clone())
}

/// `N̄(X) = (−1)^{|E|} N(X)`.
pub fn inverse_norm<S: MinorsSystem, C: Coeff>(sys: &S, n: &Norm<S::Obj, C>) -> Norm<S::Obj, C> {
    let sys = sys.clone();
    let n = n.clone();
    Arc::new(move |x| {
        let v = n(x);
        if sys.ground_size(x) % 2 == 1 {
            -&v
        } else {
            v
        }
    })
}

/// Pointwise product of two structure maps.
pub fn product_norm<O: 'static, C: Coeff>(a: &Norm<O, C>, b: &Norm<O, C>) -> Norm<O, C> {
    let (a, b) = (a.clone(), b.clone());
    Arc::new(move |x| &a(x) * &b(x))
}

/// All `(A, X|A, X/A)` with A in bitmask order.
pub fn coproduct_terms<'a, S: MinorsSystem>(
    sys: &'a S,
    x: &'a S::Obj,
) -> impl Iterator<Item = (Subset, S::Obj, S::Obj)> + 'a {
    let full = full_set(sys.ground_size(x));
    (0..=full).map(move |a| (a, sys.restrict(x, a), sys.contract(x, a)))
}

/// Subset expansion `Σ_A N1(X|A) τ(X|A/A) N2(X/A)`.
pub fn tutte_character<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    spec: &CharacterSpec<S::Obj, C>,
) -> MRPoly<C> {
    let mut acc = MRPoly::zero(&spec.sig);
    for (a, xa, xc) in coproduct_terms(sys, x) {
        let empty = sys.contract(&xa, full_set(popcount(a)));
        let term = &(&(spec.norm1)(&xa) * &(spec.twist)(&empty)) * &(spec.norm2)(&xc);
        acc.add_assign(&term);
    }
    acc
}

/// Deletion-contraction on the smallest element:
/// `T(X) = N1(X|e)·T(X/e) + N2(X/(E∖e))·T(X∖e)`, with `T = τ` on the empty set.
pub fn delcon_evaluate<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    spec: &CharacterSpec<S::Obj, C>,
    memoize: bool,
) -> MRPoly<C> {
    let mut memo = HashMap::new();
    delcon_inner(sys, x, spec, memoize, &mut memo)
}

fn delcon_inner<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    spec: &CharacterSpec<S::Obj, C>,
    memoize: bool,
    memo: &mut HashMap<String, MRPoly<C>>,
) -> MRPoly<C> {
    let n = sys.ground_size(x);
    if n == 0 {
        return (spec.twist)(x);
    }
    let key = if memoize { sys.memo_key(x) } else { None };
    if let Some(k) = &key {
        if let Some(v) = memo.get(k) {
            return v.clone();
        }
    }
    let rest = full_set(n) & !1;
    let contracted = delcon_inner(sys, &sys.contract(x, 1), spec, memoize, memo);
    let deleted = delcon_inner(sys, &sys.restrict(x, rest), spec, memoize, memo);
    let mut out = &(spec.norm1)(&sys.restrict(x, 1)) * &contracted;
    out.add_assign(&(&(spec.norm2)(&sys.contract(x, rest)) * &deleted));
    if let Some(k) = key {
        memo.insert(k, out.clone());
    }
    out
}
