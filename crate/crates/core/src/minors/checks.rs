use std::collections::HashMap;

use crate::algebra::{Coeff, MRPoly, Specialization};

use super::character::{delcon_evaluate, inverse_norm, product_norm, tutte_character, CharacterSpec, Norm};
use super::{full_set, minor, popcount, Check, MinorsSystem, Subset, Witness};

/// Coassociativity and counit axioms on one structure and disjoint `a`, `b`.
pub fn minor_axioms_check<S: MinorsSystem>(sys: &S, x: &S::Obj, a: Subset, b: Subset) -> Check {
    let n = sys.ground_size(x);
    let full = full_set(n);
    let (a, b) = (a & full, b & full & !a);
    let fail = |what: &str, l: &S::Obj, r: &S::Obj| {
        Err(Witness::new(sys, x, format!("{what} with A={a:#b}, B={b:#b}"), format!("{l:?}"), format!("{r:?}")))
    };
    let ab = a | b;
    // (X|A∪B)|A = X|A
    let l = sys.restrict(&sys.restrict(x, ab), super::compress(a, ab));
    let r = sys.restrict(x, a);
    if l != r {
        return fail("(X|A∪B)|A != X|A", &l, &r);
    }
    // (X/A)/B = X/(A⊔B)
    let l = sys.contract(&sys.contract(x, a), super::compress(b, full & !a));
    let r = sys.contract(x, ab);
    if l != r {
        return fail("(X/A)/B != X/(A∪B)", &l, &r);
    }
    // (X/A)|B = (X|A⊔B)/A
    let l = sys.restrict(&sys.contract(x, a), super::compress(b, full & !a));
    let r = minor(sys, x, ab, a);
    if l != r {
        return fail("(X/A)|B != (X|A∪B)/A", &l, &r);
    }
    let r = sys.restrict(x, full);
    if &r != x {
        return fail("X|E != X", &r, x);
    }
    let r = sys.contract(x, 0);
    if &r != x {
        return fail("X/∅ != X", &r, x);
    }
    let r = sys.sum_empty(x, &sys.unit());
    if &r != x {
        return fail("X ⊕ 1 != X", &r, x);
    }
    Ok(())
}

/// Norm law `N(X) = N(X|A)·N(X/A)` for every A.
pub fn norm_law_check<S: MinorsSystem, C: Coeff>(sys: &S, x: &S::Obj, norm: &Norm<S::Obj, C>) -> Check {
    let whole = norm(x);
    for a in 0..=full_set(sys.ground_size(x)) {
        let split = &norm(&sys.restrict(x, a)) * &norm(&sys.contract(x, a));
        if split != whole {
            return Err(Witness::new(sys, x, format!("norm law at A={a:#b}"), whole.render(), split.render()));
        }
    }
    Ok(())
}

/// `Σ_A (−1)^{|A|} N(X|A) N(X/A) = [E = ∅]`.
pub fn inverse_norm_check<S: MinorsSystem, C: Coeff>(sys: &S, x: &S::Obj, norm: &Norm<S::Obj, C>) -> Check {
    let n = sys.ground_size(x);
    let probe = norm(x);
    let mut acc = MRPoly::zero(probe.sig());
    for a in 0..=full_set(n) {
        let t = &norm(&sys.restrict(x, a)) * &norm(&sys.contract(x, a));
        acc.add_assign(&if popcount(a) % 2 == 1 { -&t } else { t });
    }
    let want = if n == 0 { MRPoly::one(probe.sig()) } else { MRPoly::zero(probe.sig()) };
    if acc == want {
        Ok(())
    } else {
        Err(Witness::new(sys, x, "inverse norm identity", acc.render(), want.render()))
    }
}

/// `T_{N̄0,τ1τ2,N2}(X) = Σ_A T_{N̄0,τ1,N1}(X|A)·T_{N̄1,τ2,N2}(X/A)`.
#[allow(clippy::too_many_arguments)]
pub fn convolution_check<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    n0: &Norm<S::Obj, C>,
    t1: &Norm<S::Obj, C>,
    n1: &Norm<S::Obj, C>,
    t2: &Norm<S::Obj, C>,
    n2: &Norm<S::Obj, C>,
) -> Check {
    iterated_convolution_check(sys, x, &[n0.clone(), n1.clone(), n2.clone()], &[t1.clone(), t2.clone()])
}

/// Chain-sum identity over flags `∅ = A0 ⊆ … ⊆ An = E`:
/// `T_{N̄0,τ1⋯τn,Nn}(X) = Σ ∏_i T_{N̄_{i−1},τ_i,N_i}(X|A_i/A_{i−1})`.
pub fn iterated_convolution_check<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    norms: &[Norm<S::Obj, C>],
    twists: &[Norm<S::Obj, C>],
) -> Check {
    let steps = twists.len();
    assert!(steps >= 1 && norms.len() == steps + 1, "need n twists and n+1 norms");
    let sig = norms[0](&sys.unit()).sig().clone();
    let mut all_twists = twists[0].clone();
    for t in &twists[1..] {
        all_twists = product_norm(&all_twists, t);
    }
    let lhs_spec = CharacterSpec::new(&sig, inverse_norm(sys, &norms[0]), all_twists, norms[steps].clone());
    let lhs = tutte_character(sys, x, &lhs_spec);
    let specs: Vec<_> = (0..steps)
        .map(|i| CharacterSpec::new(&sig, inverse_norm(sys, &norms[i]), twists[i].clone(), norms[i + 1].clone()))
        .collect();

    let n = sys.ground_size(x);
    let mut rhs = MRPoly::zero(&sig);
    // Minors recur across flags; characters are cached per step.
    let mut cache: HashMap<(usize, String), MRPoly<C>> = HashMap::new();
    // Each element picks the step at which it enters the flag.
    let mut levels = vec![0usize; n];
    loop {
        let mut prev: Subset = 0;
        let mut term = MRPoly::one(&sig);
        for (i, spec) in specs.iter().enumerate() {
            let mut cur = prev;
            for (e, &l) in levels.iter().enumerate() {
                if l == i {
                    cur |= 1 << e;
                }
            }
            let m = minor(sys, x, cur, prev);
            let value = match sys.memo_key(&m) {
                Some(key) => cache
                    .entry((i, key))
                    .or_insert_with(|| tutte_character(sys, &m, spec))
                    .clone(),
                None => tutte_character(sys, &m, spec),
            };
            term = &term * &value;
            if term.is_zero() {
                break;
            }
            prev = cur;
        }
        rhs.add_assign(&term);
        // Next level assignment in lexicographic order.
        let mut k = 0;
        while k < n && levels[k] == steps - 1 {
            levels[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        levels[k] += 1;
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(sys, x, format!("{steps}-step convolution"), lhs.render(), rhs.render()))
    }
}

/// Every monomial of `t`, pushed through `merge`, equals the single monomial `expected`.
pub fn homogeneity_check<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    t: &MRPoly<C>,
    merge: &Specialization<C>,
    expected: &MRPoly<C>,
) -> Check {
    let (want, _) = expected.as_monomial().expect("expected value is a monomial");
    for (e, _) in t.terms() {
        let m = MRPoly::monomial(t.sig(), e.clone(), C::one_elem());
        let img = merge.apply(&m).map_err(|err| Witness::new(sys, x, err.to_string(), m.render(), String::new()))?;
        let ok = img.as_monomial().is_some_and(|(got, c)| got == want && c.is_one_elem());
        if !ok {
            return Err(Witness::new(sys, x, "monomial degree differs from the norm image", img.render(), expected.render()));
        }
    }
    Ok(())
}

/// Checks the two-element recurrence condition for the Φ defined by smallest-element
/// deletion-contraction with 1-element coefficient maps `n1`, `n2` and base `twist`,
/// over every structure of size 2..=max_size. Returns the first violation.
pub fn recurrence_welldef_check<S: MinorsSystem, C: Coeff>(
    sys: &S,
    structures: &[S::Obj],
    spec: &CharacterSpec<S::Obj, C>,
    max_size: usize,
) -> Check {
    let mut sorted: Vec<&S::Obj> = structures.iter().filter(|x| sys.ground_size(x) <= max_size).collect();
    sorted.sort_by_key(|x| sys.ground_size(x));
    for x in sorted {
        let n = sys.ground_size(x);
        if n < 2 {
            continue;
        }
        let full = full_set(n);
        for e in 0..n {
            for f in e + 1..n {
                let ef: Subset = (1 << e) | (1 << f);
                let low = sys.restrict(x, ef);
                let high = sys.contract(x, full & !ef);
                let disc = |n: &Norm<S::Obj, C>, y: &S::Obj| {
                    let a = &n(&sys.restrict(y, 1)) * &n(&sys.contract(y, 1));
                    let b = &n(&sys.restrict(y, 2)) * &n(&sys.contract(y, 2));
                    &a - &b
                };
                let lhs = &disc(&spec.norm1, &low) * &delcon_evaluate(sys, &sys.contract(x, ef), spec, false);
                let rhs = &disc(&spec.norm2, &high) * &delcon_evaluate(sys, &sys.restrict(x, full & !ef), spec, false);
                if lhs != rhs {
                    return Err(Witness::new(
                        sys,
                        x,
                        format!("general recurrence fails at size {n} for pair ({e},{f})"),
                        lhs.render(),
                        rhs.render(),
                    ));
                }
            }
        }
    }
    Ok(())
}
