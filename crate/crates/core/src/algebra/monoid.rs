use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use super::AlgebraError;

/// Exponent domain of a generator axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Natural,
    Integer,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Axis {
    pub name: String,
    pub domain: Domain,
    /// Exponents are stored doubled so that half-integers stay integral.
    pub half: bool,
}

/// Rewrite rule `ruled^2 -> left * right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub ruled: usize,
    pub left: usize,
    pub right: usize,
}

/// A block of prime-indexed axes realizing (Z>0, ×), or (Q>0, ×) when rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeBlock {
    pub name: String,
    pub rational: bool,
}

/// Presentation of a commutative exponent monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidSig {
    axes: Vec<Axis>,
    rules: Vec<Rule>,
    prime_blocks: Vec<PrimeBlock>,
    index: HashMap<String, usize>,
}

pub type Sig = Arc<MonoidSig>;

/// Compares two shared signatures, pointer first.
pub fn same_sig(a: &Sig, b: &Sig) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Default)]
pub struct SigBuilder {
    axes: Vec<Axis>,
    rules: Vec<(String, String, String)>,
    prime_blocks: Vec<PrimeBlock>,
}

impl SigBuilder {
    pub fn natural(mut self, name: &str) -> Self {
        self.axes.push(Axis { name: name.into(), domain: Domain::Natural, half: false });
        self
    }

    pub fn laurent(mut self, name: &str) -> Self {
        self.axes.push(Axis { name: name.into(), domain: Domain::Integer, half: false });
        self
    }

    pub fn half(mut self, name: &str) -> Self {
        self.axes.push(Axis { name: name.into(), domain: Domain::Natural, half: true });
        self
    }

    pub fn half_laurent(mut self, name: &str) -> Self {
        self.axes.push(Axis { name: name.into(), domain: Domain::Integer, half: true });
        self
    }

    pub fn axis(mut self, axis: Axis) -> Self {
        self.axes.push(axis);
        self
    }

    pub fn naturals<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        for n in names {
            self = self.natural(n);
        }
        self
    }

    pub fn rule(mut self, ruled: &str, left: &str, right: &str) -> Self {
        self.rules.push((ruled.into(), left.into(), right.into()));
        self
    }

    pub fn primes(mut self, name: &str, rational: bool) -> Self {
        self.prime_blocks.push(PrimeBlock { name: name.into(), rational });
        self
    }

    pub fn build(self) -> Result<Sig, AlgebraError> {
        let mut index = HashMap::new();
        for (i, a) in self.axes.iter().enumerate() {
            if index.insert(a.name.clone(), i).is_some() {
                return Err(AlgebraError::Signature(format!("duplicate axis {}", a.name)));
            }
        }
        let mut blocks = std::collections::HashSet::new();
        for b in &self.prime_blocks {
            if !blocks.insert(b.name.clone()) {
                return Err(AlgebraError::Signature(format!("duplicate prime block {}", b.name)));
            }
        }
        let lookup = |n: &str| {
            index.get(n).copied().ok_or_else(|| AlgebraError::UnknownAxis(n.to_string()))
        };
        let mut rules = Vec::new();
        for (r, l, rr) in &self.rules {
            let rule = Rule { ruled: lookup(r)?, left: lookup(l)?, right: lookup(rr)? };
            let ax = &self.axes;
            if ax[rule.ruled].half || ax[rule.left].half || ax[rule.right].half {
                return Err(AlgebraError::Signature("rules act on whole-exponent axes only".into()));
            }
            if rule.ruled == rule.left || rule.ruled == rule.right {
                return Err(AlgebraError::Signature(format!("rule for {r} is not reducing")));
            }
            if rules.iter().any(|x: &Rule| x.ruled == rule.ruled) {
                return Err(AlgebraError::Signature(format!("two rules for {r}")));
            }
            rules.push(rule);
        }
        // A rule's output may not feed another rule; keeps single-pass reduction confluent.
        for a in &rules {
            if rules.iter().any(|b| b.ruled == a.left || b.ruled == a.right) {
                return Err(AlgebraError::Signature("chained rules are not supported".into()));
            }
        }
        Ok(Arc::new(MonoidSig { axes: self.axes, rules, prime_blocks: self.prime_blocks, index }))
    }
}

impl MonoidSig {
    pub fn builder() -> SigBuilder {
        SigBuilder::default()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn prime_blocks(&self) -> &[PrimeBlock] {
        &self.prime_blocks
    }

    pub fn axis_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index.get(name).copied().ok_or_else(|| AlgebraError::UnknownAxis(name.to_string()))
    }

    pub fn block_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.prime_blocks
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| AlgebraError::UnknownAxis(format!("prime block {name}")))
    }

    pub fn is_ruled(&self, axis: usize) -> bool {
        self.rules.iter().any(|r| r.ruled == axis)
    }

    pub fn identity(&self) -> MonoidElem {
        MonoidElem { exps: vec![0; self.axes.len()], primes: vec![Vec::new(); self.prime_blocks.len()] }
    }

    /// Reduces a raw element: every ruled generator ends with exponent 0 or 1.
    pub fn canonicalize(&self, mut raw: MonoidElem) -> Result<MonoidElem, AlgebraError> {
        if raw.exps.len() != self.axes.len() || raw.primes.len() != self.prime_blocks.len() {
            return Err(AlgebraError::Signature("exponent vector length mismatch".into()));
        }
        for r in &self.rules {
            let e = raw.exps[r.ruled];
            if e >= 2 {
                let k = e / 2;
                raw.exps[r.ruled] -= 2 * k;
                raw.exps[r.left] += k;
                raw.exps[r.right] += k;
            }
        }
        for (a, &e) in self.axes.iter().zip(&raw.exps) {
            if a.domain == Domain::Natural && e < 0 {
                return Err(AlgebraError::Domain(format!("negative exponent {e} on axis {}", a.name)));
            }
        }
        for (b, ps) in self.prime_blocks.iter().zip(raw.primes.iter_mut()) {
            ps.sort_unstable_by_key(|&(p, _)| p);
            let mut merged: Vec<(u64, i64)> = Vec::with_capacity(ps.len());
            for &(p, e) in ps.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == p => last.1 += e,
                    _ => merged.push((p, e)),
                }
            }
            merged.retain(|&(_, e)| e != 0);
            if !b.rational && merged.iter().any(|&(_, e)| e < 0) {
                return Err(AlgebraError::Domain(format!("negative prime exponent in block {}", b.name)));
            }
            *ps = merged;
        }
        Ok(raw)
    }

    /// Product of two canonical elements.
    pub fn mul(&self, a: &MonoidElem, b: &MonoidElem) -> MonoidElem {
        let exps = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
        let primes = a.primes.iter().zip(&b.primes).map(|(x, y)| merge_primes(x, y)).collect();
        let raw = MonoidElem { exps, primes };
        self.canonicalize(raw).expect("product of canonical elements stays in domain")
    }

    /// Inverse, when every nonzero coordinate lives on an invertible axis.
    pub fn inverse(&self, a: &MonoidElem) -> Option<MonoidElem> {
        for (i, &e) in a.exps.iter().enumerate() {
            if e != 0 && (self.axes[i].domain == Domain::Natural || self.is_ruled(i)) {
                return None;
            }
        }
        for (b, ps) in self.prime_blocks.iter().zip(&a.primes) {
            if !ps.is_empty() && !b.rational {
                return None;
            }
        }
        Some(MonoidElem {
            exps: a.exps.iter().map(|e| -e).collect(),
            primes: a.primes.iter().map(|ps| ps.iter().map(|&(p, e)| (p, -e)).collect()).collect(),
        })
    }

    /// Twice the total degree (half axes count their stored value once).
    pub fn doubled_degree(&self, a: &MonoidElem) -> i64 {
        self.axes.iter().zip(&a.exps).map(|(ax, &e)| if ax.half { e } else { 2 * e }).sum()
    }

    /// Graded lexicographic order, highest first.
    pub fn term_order(&self, a: &MonoidElem, b: &MonoidElem) -> Ordering {
        self.doubled_degree(b)
            .cmp(&self.doubled_degree(a))
            .then_with(|| b.exps.cmp(&a.exps))
            .then_with(|| b.primes.cmp(&a.primes))
    }

    /// Text rendering of the monomial part, empty for the identity.
    pub fn render_elem(&self, a: &MonoidElem) -> String {
        let mut parts = Vec::new();
        let single_block = self.prime_blocks.len() == 1;
        for (b, ps) in self.prime_blocks.iter().zip(&a.primes) {
            if ps.is_empty() {
                continue;
            }
            let inner: Vec<String> = ps.iter().map(|(p, e)| format!("{p}^{e}")).collect();
            let prefix = if single_block { "" } else { b.name.as_str() };
            parts.push(format!("{prefix}[{}]", inner.join("*")));
        }
        for (ax, &e) in self.axes.iter().zip(&a.exps) {
            if e != 0 {
                parts.push(format!("{}^{}", ax.name, render_exp(ax.half, e)));
            }
        }
        parts.join("*")
    }
}

/// Renders a stored exponent; odd doubled values print as "(k/2)".
pub fn render_exp(half: bool, e: i64) -> String {
    if !half {
        e.to_string()
    } else if e % 2 == 0 {
        (e / 2).to_string()
    } else {
        format!("({e}/2)")
    }
}

fn merge_primes(a: &[(u64, i64)], b: &[(u64, i64)]) -> Vec<(u64, i64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, x.1 + y.1)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                *x
            }
            (Some(x), None) => {
                i += 1;
                *x
            }
            (_, Some(y)) => {
                j += 1;
                *y
            }
            (None, None) => unreachable!(),
        };
        if next.1 != 0 {
            out.push(next);
        }
    }
    out
}

/// Element of an exponent monoid. The signature is carried by the enclosing polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidElem {
    pub exps: Vec<i64>,
    /// One sorted prime → exponent list per prime block.
    pub primes: Vec<Vec<(u64, i64)>>,
}

impl MonoidElem {
    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0) && self.primes.iter().all(Vec::is_empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uvw() -> Sig {
        MonoidSig::builder().naturals(["u", "v", "w"]).rule("w", "u", "v").build().unwrap()
    }

    fn elem(exps: &[i64]) -> MonoidElem {
        MonoidElem { exps: exps.to_vec(), primes: vec![] }
    }

    #[test]
    fn w_squared_reduces() {
        let s = uvw();
        assert_eq!(s.canonicalize(elem(&[0, 0, 2])).unwrap(), elem(&[1, 1, 0]));
        assert_eq!(s.canonicalize(elem(&[1, 1, 0])).unwrap(), elem(&[1, 1, 0]));
        assert_eq!(s.canonicalize(elem(&[0, 0, 5])).unwrap(), elem(&[2, 2, 1]));
    }

    #[test]
    fn domain_errors() {
        let s = uvw();
        assert!(matches!(s.canonicalize(elem(&[-1, 0, 0])), Err(AlgebraError::Domain(_))));
        let r = MonoidSig::builder().primes("q", false).build().unwrap();
        let bad = MonoidElem { exps: vec![], primes: vec![vec![(2, -1)]] };
        assert!(r.canonicalize(bad).is_err());
    }

    #[test]
    fn duplicate_axes_rejected() {
        assert!(MonoidSig::builder().natural("x").natural("x").build().is_err());
    }

    #[test]
    fn prime_merge_drops_zeros() {
        let s = MonoidSig::builder().primes("a", true).build().unwrap();
        let a = MonoidElem { exps: vec![], primes: vec![vec![(2, 1), (3, 1)]] };
        let b = MonoidElem { exps: vec![], primes: vec![vec![(2, -1), (5, 2)]] };
        assert_eq!(s.mul(&a, &b).primes[0], vec![(3, 1), (5, 2)]);
    }

    #[test]
    fn half_exponent_rendering() {
        assert_eq!(render_exp(true, 1), "(1/2)");
        assert_eq!(render_exp(true, 4), "2");
        assert_eq!(render_exp(true, -3), "(-3/2)");
        assert_eq!(render_exp(false, 3), "3");
    }
}
