use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Coeff, MRPoly, Sig};

use super::{full_set, minor, Check, MinorsError, MinorsSystem, Witness};

/// Relation between products of generators, as sorted multisets of generator indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Relation {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Generators (1-element classes) and relations of the Grothendieck monoid.
#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn render_relation(&self, r: &Relation) -> String {
        let side = |v: &[usize]| v.iter().map(|&i| self.generators[i].clone()).collect::<Vec<_>>().join("·");
        format!("{} = {}", side(&r.left), side(&r.right))
    }
}

fn normalized(mut a: Vec<usize>, mut b: Vec<usize>) -> Option<Relation> {
    a.sort_unstable();
    b.sort_unstable();
    if a == b {
        return None;
    }
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    Some(Relation { left: a, right: b })
}

/// Extracts generators from 1-element structures, quadratic relations
/// `[X|e][X/e] = [X|f][X/f]` from 2-element structures, and `[X⊕Y] = [X]` relations.
pub fn grothendieck_relations<S: MinorsSystem>(sys: &S) -> Result<Presentation, MinorsError> {
    let unsupported = || MinorsError::Unsupported(format!("{} has no finite small enumeration", sys.name()));
    let empties = sys.enumerate(0).ok_or_else(unsupported)?;
    let ones = sys.enumerate(1).ok_or_else(unsupported)?;
    let twos = sys.enumerate(2).ok_or_else(unsupported)?;

    let mut keys: Vec<String> = Vec::new();
    let mut generators = Vec::new();
    for x in &ones {
        let k = sys.class_key(x);
        if !keys.contains(&k) {
            keys.push(k);
            generators.push(sys.label(x));
        }
    }
    let class = |x: &S::Obj| keys.iter().position(|k| *k == sys.class_key(x));

    let mut rels = BTreeSet::new();
    for x in &twos {
        let split = |e: u32| -> Option<Vec<usize>> {
            Some(vec![class(&sys.restrict(x, e))?, class(&sys.contract(x, e))?])
        };
        if let (Some(a), Some(b)) = (split(1), split(2)) {
            if let Some(r) = normalized(a, b) {
                rels.insert(r);
            }
        }
    }
    let unit_key = sys.class_key(&sys.unit());
    for x in &ones {
        for y in &empties {
            if sys.class_key(y) == unit_key {
                continue;
            }
            if let (Some(a), Some(b)) = (class(&sys.sum_empty(x, y)), class(x)) {
                if let Some(r) = normalized(vec![a], vec![b]) {
                    rels.insert(r);
                }
            }
        }
    }
    Ok(Presentation { generators, relations: rels.into_iter().collect() })
}

/// Checks that a 1-element class map respects the relations carried by the given
/// structures: quadratic relations from `twos`, absorption relations from `ones × empties`.
pub fn check_relations<S: MinorsSystem, C: Coeff>(
    sys: &S,
    twos: &[S::Obj],
    ones: &[S::Obj],
    empties: &[S::Obj],
    mapping: &dyn Fn(&S::Obj) -> MRPoly<C>,
) -> Check {
    for x in twos {
        let l = &mapping(&sys.restrict(x, 1)) * &mapping(&sys.contract(x, 1));
        let r = &mapping(&sys.restrict(x, 2)) * &mapping(&sys.contract(x, 2));
        if l != r {
            return Err(Witness::new(sys, x, "[X|e][X/e] = [X|f][X/f] violated", l.render(), r.render()));
        }
    }
    for x in ones {
        for y in empties {
            let l = mapping(&sys.sum_empty(x, y));
            let r = mapping(x);
            if l != r {
                return Err(Witness::new(sys, x, format!("[X ⊕ Y] = [X] violated for Y={y:?}"), l.render(), r.render()));
            }
        }
    }
    Ok(())
}

/// Whether a 1-element class map extends to a norm, over the system's own enumeration.
pub fn verify_norm_candidate<S: MinorsSystem, C: Coeff>(
    sys: &S,
    mapping: &dyn Fn(&S::Obj) -> MRPoly<C>,
) -> Result<Check, MinorsError> {
    let unsupported = || MinorsError::Unsupported(format!("{} has no finite small enumeration", sys.name()));
    let empties = sys.enumerate(0).ok_or_else(unsupported)?;
    let ones = sys.enumerate(1).ok_or_else(unsupported)?;
    let twos = sys.enumerate(2).ok_or_else(unsupported)?;
    Ok(check_relations(sys, &twos, &ones, &empties, mapping))
}

/// Norm determined by 1-element values: the product over the identity order of the
/// 1-element minors `X|{0..i}/{0..i−1}`.
pub fn norm_from_generators<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    sig: &Sig,
    mapping: &dyn Fn(&S::Obj) -> MRPoly<C>,
) -> MRPoly<C> {
    let n = sys.ground_size(x);
    let mut acc = MRPoly::one(sig);
    for i in 0..n {
        let piece = minor(sys, x, full_set(i + 1), full_set(i));
        acc = &acc * &mapping(&piece);
    }
    acc
}
