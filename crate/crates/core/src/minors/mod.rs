//! The generic engine: the minors-system interface, Tutte characters, deletion-contraction,
//! convolution and recurrence checkers, Grothendieck relations and exp of infinitesimal
//! characters.

mod character;
mod checks;
mod exp;
mod grothendieck;
pub mod set_system;

use std::fmt;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::algebra::AlgebraError;

pub use character::{
    constant_twist, coproduct_terms, delcon_evaluate, inverse_norm, product_norm, tutte_character, CharacterSpec,
    Norm,
};
pub use checks::{
    convolution_check, homogeneity_check, inverse_norm_check, iterated_convolution_check, minor_axioms_check,
    norm_law_check, recurrence_welldef_check,
};
pub use exp::exp_star;
pub use grothendieck::{
    check_relations, grothendieck_relations, norm_from_generators, verify_norm_candidate, Presentation, Relation,
};

/// Subset of the ground set {0,…,n−1}; bit i is element i.
pub type Subset = u32;

/// Storage cap on ground-set size.
pub const MAX_GROUND: usize = 20;

pub fn full_set(n: usize) -> Subset {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn popcount(a: Subset) -> usize {
    a.count_ones() as usize
}

/// Relabels `mask` into the positions of `within`, keeping relative order.
pub fn compress(mask: Subset, within: Subset) -> Subset {
    let mut out = 0;
    let mut bit = 0;
    let mut w = within;
    while w != 0 {
        let low = w & w.wrapping_neg();
        if mask & low != 0 {
            out |= 1 << bit;
        }
        bit += 1;
        w &= w - 1;
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `mask` onto the elements of `within`.
pub fn expand(mask: Subset, within: Subset) -> Subset {
    let mut out = 0;
    let mut bit = 0;
    let mut w = within;
    while w != 0 {
        let low = w & w.wrapping_neg();
        if mask & (1 << bit) != 0 {
            out |= low;
        }
        bit += 1;
        w &= w - 1;
    }
    out
}

/// Elements of a subset in increasing order.
pub fn elements(a: Subset) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| a & (1 << i) != 0)
}

/// Behavioral contract of a minors system.
///
/// Ground sets are {0,…,n−1}. `restrict(X, A)` and `contract(X, A)` relabel the surviving
/// elements in increasing order.
pub trait MinorsSystem: Clone + Send + Sync + 'static {
    type Obj: Clone + fmt::Debug + PartialEq + Send + Sync + 'static;

    fn name(&self) -> &'static str;
    fn ground_size(&self, x: &Self::Obj) -> usize;
    fn restrict(&self, x: &Self::Obj, a: Subset) -> Self::Obj;
    fn contract(&self, x: &Self::Obj, a: Subset) -> Self::Obj;
    /// `X ⊕ Y` for `Y` on the empty set.
    fn sum_empty(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn unit(&self) -> Self::Obj;
    /// Full direct sum, for multiplicative systems.
    fn direct_sum(&self, _x: &Self::Obj, _y: &Self::Obj) -> Option<Self::Obj> {
        None
    }
    /// Every structure on a k-set, when there are finitely many.
    fn enumerate(&self, _k: usize) -> Option<Vec<Self::Obj>> {
        None
    }
    /// Isomorphism-invariant key; exact on ground sets of size at most 1.
    fn class_key(&self, x: &Self::Obj) -> String;
    /// Human-readable name of a small class.
    fn label(&self, x: &Self::Obj) -> String {
        self.class_key(x)
    }
    /// Memoization key for deletion-contraction.
    fn memo_key(&self, _x: &Self::Obj) -> Option<String> {
        None
    }
    fn to_json(&self, x: &Self::Obj) -> Value;
}

/// `X|keep / contract` with `contract ⊆ keep`, on the relabeled ground set keep∖contract.
pub fn minor<S: MinorsSystem>(sys: &S, x: &S::Obj, keep: Subset, contract: Subset) -> S::Obj {
    debug_assert_eq!(contract & !keep, 0);
    let r = sys.restrict(x, keep);
    sys.contract(&r, compress(contract, keep))
}

/// Counterexample to a checked identity; replayable from `structure`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub family: String,
    pub size: usize,
    pub structure: Value,
    pub detail: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} witness (size {}): {}\n  left:  {}\n  right: {}\n  structure: {}", self.family, self.size, self.detail, self.left, self.right, self.structure)
    }
}

impl Witness {
    pub fn new<S: MinorsSystem>(sys: &S, x: &S::Obj, detail: impl Into<String>, left: String, right: String) -> Box<Self> {
        Box::new(Witness {
            family: sys.name().to_string(),
            size: sys.ground_size(x),
            structure: sys.to_json(x),
            detail: detail.into(),
            left,
            right,
        })
    }
}

pub type Check = Result<(), Box<Witness>>;

#[derive(Debug, Error)]
pub enum MinorsError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
