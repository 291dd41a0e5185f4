//! The minors system of finite sets: one structure per ground set, every minor is the
//! underlying subset.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{Coeff, MRPoly, MonoidSig, Sig};

use super::{popcount, CharacterSpec, MinorsSystem, Norm, Subset};

#[derive(Clone, Copy, Debug, Default)]
pub struct SetSystem;

impl MinorsSystem for SetSystem {
    type Obj = usize;

    fn name(&self) -> &'static str {
        "set"
    }
    fn ground_size(&self, x: &usize) -> usize {
        *x
    }
    fn restrict(&self, _x: &usize, a: Subset) -> usize {
        popcount(a)
    }
    fn contract(&self, x: &usize, a: Subset) -> usize {
        x - popcount(a)
    }
    fn sum_empty(&self, x: &usize, _y: &usize) -> usize {
        *x
    }
    fn unit(&self) -> usize {
        0
    }
    fn direct_sum(&self, x: &usize, y: &usize) -> Option<usize> {
        Some(x + y)
    }
    fn enumerate(&self, k: usize) -> Option<Vec<usize>> {
        Some(vec![k])
    }
    fn class_key(&self, x: &usize) -> String {
        format!("E{x}")
    }
    fn label(&self, x: &usize) -> String {
        if *x == 1 { "e".into() } else { self.class_key(x) }
    }
    fn memo_key(&self, x: &usize) -> Option<String> {
        Some(x.to_string())
    }
    fn to_json(&self, x: &usize) -> Value {
        json!({"type": "set", "n": x})
    }
}

/// Ring with one generator per norm copy: `u0, u1, …`.
pub fn copies_sig(copies: usize) -> Sig {
    let names: Vec<String> = (0..copies).map(|i| format!("u{i}")).collect();
    MonoidSig::builder().naturals(names.iter().map(String::as_str)).build().expect("distinct axes")
}

/// Universal norm `u_i^{|E|}` on copy `i`.
pub fn set_norm<C: Coeff>(sig: &Sig, i: usize) -> Norm<usize, C> {
    let u = MRPoly::var(sig, &format!("u{i}")).expect("axis exists");
    Arc::new(move |x: &usize| u.pow(*x as u32))
}

/// `T^Set = N_1 * N_2` on copies 1 and 2.
pub fn set_universal_spec<C: Coeff>(sig: &Sig) -> CharacterSpec<usize, C> {
    CharacterSpec::new(sig, set_norm(sig, 1), super::constant_twist(sig), set_norm(sig, 2))
}
