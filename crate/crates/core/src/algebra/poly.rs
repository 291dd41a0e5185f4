use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::monoid::{render_exp, same_sig, MonoidElem, Sig};
use super::{AlgebraError, Coeff};

/// Sparse polynomial over a monoid ring: a finite map from canonical monoid elements to
/// nonzero coefficients.
#[derive(Clone, Debug)]
pub struct MRPoly<C: Coeff> {
    sig: Sig,
    terms: BTreeMap<MonoidElem, C>,
}

impl<C: Coeff> PartialEq for MRPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        same_sig(&self.sig, &other.sig) && self.terms == other.terms
    }
}

impl<C: Coeff> Eq for MRPoly<C> {}

impl<C: Coeff> MRPoly<C> {
    pub fn zero(sig: &Sig) -> Self {
        MRPoly { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn one(sig: &Sig) -> Self {
        Self::constant(sig, C::one_elem())
    }

    pub fn constant(sig: &Sig, c: C) -> Self {
        Self::monomial(sig, sig.identity(), c)
    }

    pub fn from_i64(sig: &Sig, c: i64) -> Self {
        Self::constant(sig, C::from_i64(c))
    }

    /// Single term; `elem` must already be canonical.
    pub fn monomial(sig: &Sig, elem: MonoidElem, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero_elem() {
            terms.insert(elem, c);
        }
        MRPoly { sig: sig.clone(), terms }
    }

    /// Monomial from `(axis, stored exponent)` pairs; stored exponents of half axes are doubled.
    pub fn term(sig: &Sig, exps: &[(&str, i64)]) -> Result<Self, AlgebraError> {
        let mut raw = sig.identity();
        for &(name, e) in exps {
            raw.exps[sig.axis_index(name)?] += e;
        }
        Ok(Self::monomial(sig, sig.canonicalize(raw)?, C::one_elem()))
    }

    /// Generator `name` to the first power (the half unit for half axes).
    pub fn var(sig: &Sig, name: &str) -> Result<Self, AlgebraError> {
        Self::term(sig, &[(name, 1)])
    }

    /// Like [`MRPoly::var`], for axes known to exist.
    pub fn generator(sig: &Sig, name: &str) -> Self {
        Self::var(sig, name).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Prime-block monomial `[n]` for a positive integer or a ratio of them.
    pub fn prime_class(sig: &Sig, block: &str, num: u64, den: u64) -> Result<Self, AlgebraError> {
        let b = sig.block_index(block)?;
        let mut raw = sig.identity();
        for (p, e) in super::factorize(num)? {
            raw.primes[b].push((p, e as i64));
        }
        for (p, e) in super::factorize(den)? {
            raw.primes[b].push((p, -(e as i64)));
        }
        Ok(Self::monomial(sig, sig.canonicalize(raw)?, C::one_elem()))
    }

    pub fn sig(&self) -> &Sig {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonoidElem, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &MonoidElem) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero_elem)
    }

    /// The single monomial of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<(&MonoidElem, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, e: MonoidElem, c: &C) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero_elem() {
                    o.remove();
                }
            }
        }
    }

    fn check_sig(&self, o: &Self) -> Result<(), AlgebraError> {
        if same_sig(&self.sig, &o.sig) {
            Ok(())
        } else {
            Err(AlgebraError::Signature("operands live in different monoid rings".into()))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check_sig(o)?;
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        self.check_sig(o)?;
        let mut out = Self::zero(&self.sig);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(self.sig.mul(e1, e2), &c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    pub fn add_assign(&mut self, o: &Self) {
        self.check_sig(o).expect("signature mismatch");
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.sig);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), &x.mul_ref(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.sig);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse of a unit monomial.
    pub fn inverse(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        let e = self.sig.inverse(e)?;
        Some(Self::monomial(&self.sig, e, c.unit_inverse()?))
    }

    /// Integer power, allowing negative exponents on unit monomials.
    pub fn powi(&self, k: i64) -> Result<Self, AlgebraError> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            let inv = self.inverse().ok_or_else(|| {
                AlgebraError::Inversion(format!("{} is not a unit", self.render()))
            })?;
            Ok(inv.pow((-k) as u32))
        }
    }

    /// Same polynomial in another coefficient ring.
    pub fn convert<D: Coeff + From<C>>(&self) -> MRPoly<D> {
        MRPoly {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), D::from(c.clone()))).collect(),
        }
    }

    /// Terms sorted by graded lexicographic order, highest first.
    pub fn sorted_terms(&self) -> Vec<(&MonoidElem, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| self.sig.term_order(a.0, b.0));
        v
    }

    /// Canonical text form, e.g. "2*u^1*v^1 + 1*w^1".
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, c) = if i > 0 && c.sign_negative() { (true, c.neg_ref()) } else { (false, c.clone()) };
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.sig.render_elem(e);
            if mono.is_empty() {
                out.push_str(&c.to_string());
            } else {
                out.push_str(&format!("{c}*{mono}"));
            }
        }
        out
    }

    /// JSON term list: `[{"coeff": "...", "monomial": {axis: exp}}]`.
    pub fn to_json_terms(&self) -> Value {
        let single_block = self.sig.prime_blocks().len() == 1;
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mut mono = Map::new();
                for (ax, &x) in self.sig.axes().iter().zip(&e.exps) {
                    if x == 0 {
                        continue;
                    }
                    let v = if !ax.half || x % 2 == 0 {
                        json!(if ax.half { x / 2 } else { x })
                    } else {
                        json!(render_exp(true, x).trim_matches(|ch| ch == '(' || ch == ')'))
                    };
                    mono.insert(ax.name.clone(), v);
                }
                for (b, ps) in self.sig.prime_blocks().iter().zip(&e.primes) {
                    let prefix = if single_block { "" } else { b.name.as_str() };
                    for (p, x) in ps {
                        mono.insert(format!("{prefix}[{p}]"), json!(x));
                    }
                }
                json!({"coeff": c.to_string(), "monomial": Value::Object(mono)})
            })
            .collect();
        Value::Array(terms)
    }
}

impl<C: Coeff> fmt::Display for MRPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: Coeff> Add for &MRPoly<C> {
    type Output = MRPoly<C>;
    fn add(self, o: Self) -> MRPoly<C> {
        self.checked_add(o).expect("signature mismatch")
    }
}

impl<C: Coeff> Sub for &MRPoly<C> {
    type Output = MRPoly<C>;
    fn sub(self, o: Self) -> MRPoly<C> {
        self.checked_add(&-o).expect("signature mismatch")
    }
}

impl<C: Coeff> Mul for &MRPoly<C> {
    type Output = MRPoly<C>;
    fn mul(self, o: Self) -> MRPoly<C> {
        self.checked_mul(o).expect("signature mismatch")
    }
}

impl<C: Coeff> Neg for &MRPoly<C> {
    type Output = MRPoly<C>;
    fn neg(self) -> MRPoly<C> {
        self.scale(&C::one_elem().neg_ref())
    }
}

type PrimeMap<D> = Arc<dyn Fn(u64) -> MRPoly<D> + Send + Sync>;

#[derive(Clone)]
enum PrimeImage<D: Coeff> {
    Unset,
    Keep(usize),
    Map(PrimeMap<D>),
}

/// Ring homomorphism from one monoid ring to another, given by generator images.
///
/// For a half axis the image is that of the half unit `X^(1/2)`; for a prime block it is
/// the image of each prime generator.
#[derive(Clone)]
pub struct Specialization<D: Coeff> {
    source: Sig,
    target: Sig,
    axes: Vec<Option<MRPoly<D>>>,
    primes: Vec<PrimeImage<D>>,
}

impl<D: Coeff> Specialization<D> {
    pub fn new(source: &Sig, target: &Sig) -> Self {
        Specialization {
            source: source.clone(),
            target: target.clone(),
            axes: vec![None; source.axes().len()],
            primes: vec![PrimeImage::Unset; source.prime_blocks().len()],
        }
    }

    pub fn target(&self) -> &Sig {
        &self.target
    }

    pub fn set(mut self, name: &str, value: MRPoly<D>) -> Result<Self, AlgebraError> {
        if !same_sig(value.sig(), &self.target) {
            return Err(AlgebraError::Signature(format!("image of {name} is outside the target ring")));
        }
        let i = self.source.axis_index(name)?;
        self.axes[i] = Some(value);
        Ok(self)
    }

    pub fn set_i64(self, name: &str, value: i64) -> Result<Self, AlgebraError> {
        let v = MRPoly::from_i64(&self.target, value);
        self.set(name, v)
    }

    /// Image written in target generators, e.g. `&[("a", 1), ("b", 1)]`.
    pub fn set_term(self, name: &str, c: D, exps: &[(&str, i64)]) -> Result<Self, AlgebraError> {
        let v = MRPoly::<D>::term(&self.target, exps)?.scale(&c);
        self.set(name, v)
    }

    /// Sends a generator to the like-named target generator.
    pub fn keep(self, name: &str) -> Result<Self, AlgebraError> {
        let src_half = self.source.axes()[self.source.axis_index(name)?].half;
        let ti = self.target.axis_index(name)?;
        let tgt_half = self.target.axes()[ti].half;
        let stored = match (src_half, tgt_half) {
            (false, false) | (true, true) => 1,
            (false, true) => 2,
            (true, false) => {
                return Err(AlgebraError::Signature(format!("cannot keep half axis {name} as whole")))
            }
        };
        let v = MRPoly::term(&self.target, &[(name, stored)])?;
        self.set(name, v)
    }

    /// Keeps every source generator that also exists in the target.
    pub fn keep_common(mut self) -> Result<Self, AlgebraError> {
        let names: Vec<String> = self.source.axes().iter().map(|a| a.name.clone()).collect();
        for (i, n) in names.iter().enumerate() {
            if self.axes[i].is_none() && self.target.axis_index(n).is_ok() {
                self = self.keep(n)?;
            }
        }
        for (i, b) in self.source.prime_blocks().to_vec().iter().enumerate() {
            if matches!(self.primes[i], PrimeImage::Unset) {
                if let Ok(t) = self.target.block_index(&b.name) {
                    self.primes[i] = PrimeImage::Keep(t);
                }
            }
        }
        Ok(self)
    }

    pub fn keep_primes(mut self, block: &str) -> Result<Self, AlgebraError> {
        let s = self.source.block_index(block)?;
        let t = self.target.block_index(block)?;
        self.primes[s] = PrimeImage::Keep(t);
        Ok(self)
    }

    pub fn map_primes(
        mut self,
        block: &str,
        f: impl Fn(u64) -> MRPoly<D> + Send + Sync + 'static,
    ) -> Result<Self, AlgebraError> {
        let s = self.source.block_index(block)?;
        self.primes[s] = PrimeImage::Map(Arc::new(f));
        Ok(self)
    }

    fn check_rules(&self) -> Result<(), AlgebraError> {
        for r in self.source.rules() {
            if let (Some(w), Some(l), Some(rr)) = (&self.axes[r.ruled], &self.axes[r.left], &self.axes[r.right]) {
                if (w * w) != (l * rr) {
                    let n = &self.source.axes()[r.ruled].name;
                    return Err(AlgebraError::RuleViolation(format!("image of {n}^2 differs from image of its rewrite")));
                }
            }
        }
        Ok(())
    }

    pub fn apply<C: Coeff>(&self, p: &MRPoly<C>) -> Result<MRPoly<D>, AlgebraError>
    where
        D: From<C>,
    {
        if !same_sig(p.sig(), &self.source) {
            return Err(AlgebraError::Signature("polynomial is outside the source ring".into()));
        }
        self.check_rules()?;
        let mut cache: HashMap<(usize, i64), MRPoly<D>> = HashMap::new();
        let mut pcache: HashMap<(usize, u64, i64), MRPoly<D>> = HashMap::new();
        let mut out = MRPoly::zero(&self.target);
        for (e, c) in p.terms() {
            let mut acc = MRPoly::constant(&self.target, D::from(c.clone()));
            for (i, &x) in e.exps.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry((i, x)) {
                    let base = self.axes[i].as_ref().ok_or_else(|| {
                        AlgebraError::MissingAssignment(self.source.axes()[i].name.clone())
                    })?;
                    e.insert(base.powi(x)?);
                }
                acc = &acc * &cache[&(i, x)];
            }
            for (b, ps) in e.primes.iter().enumerate() {
                for &(pr, x) in ps {
                    if let std::collections::hash_map::Entry::Vacant(e) = pcache.entry((b, pr, x)) {
                        let v = match &self.primes[b] {
                            PrimeImage::Unset => {
                                return Err(AlgebraError::MissingAssignment(format!(
                                    "prime block {}",
                                    self.source.prime_blocks()[b].name
                                )))
                            }
                            PrimeImage::Keep(t) => {
                                let mut raw = self.target.identity();
                                raw.primes[*t].push((pr, x));
                                MRPoly::monomial(&self.target, self.target.canonicalize(raw)?, D::one_elem())
                            }
                            PrimeImage::Map(f) => f(pr).powi(x)?,
                        };
                        e.insert(v);
                    }
                    acc = &acc * &pcache[&(b, pr, x)];
                }
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::MonoidSig;
    use super::*;
    use num_bigint::BigInt;

    type P = MRPoly<BigInt>;

    fn uvw() -> Sig {
        MonoidSig::builder().naturals(["u", "v", "w"]).rule("w", "u", "v").build().unwrap()
    }

    #[test]
    fn binomial_square() {
        let s = uvw();
        let u = P::var(&s, "u").unwrap();
        let v = P::var(&s, "v").unwrap();
        let sq = (&u + &v).pow(2);
        assert_eq!(sq.render(), "1*u^2 + 2*u^1*v^1 + 1*v^2");
    }

    #[test]
    fn w_times_w_is_uv() {
        let s = uvw();
        let w = P::var(&s, "w").unwrap();
        assert_eq!(&w * &w, P::term(&s, &[("u", 1), ("v", 1)]).unwrap());
    }

    #[test]
    fn additive_inverse_is_empty() {
        let s = uvw();
        let p = &P::var(&s, "u").unwrap() + &P::from_i64(&s, 3);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).render(), "0");
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = P::one(&uvw());
        let other = MonoidSig::builder().natural("x").build().unwrap();
        assert!(matches!(a.checked_add(&P::one(&other)), Err(AlgebraError::Signature(_))));
    }

    #[test]
    fn specialize_coloop_character() {
        let src = MonoidSig::builder().naturals(["u1", "v1", "u2", "v2"]).build().unwrap();
        let tgt = MonoidSig::builder().naturals(["x", "y"]).build().unwrap();
        let p = &P::var(&src, "u1").unwrap() + &P::var(&src, "u2").unwrap();
        let x = P::var(&tgt, "x").unwrap();
        let one = P::one(&tgt);
        let y = P::var(&tgt, "y").unwrap();
        let sp = Specialization::new(&src, &tgt)
            .set("u1", one.clone())
            .unwrap()
            .set("v1", &y - &one)
            .unwrap()
            .set("u2", &x - &one)
            .unwrap()
            .set("v2", one.clone())
            .unwrap();
        assert_eq!(sp.apply(&p).unwrap(), x);
        let four = Specialization::new(&src, &tgt).set_i64("u1", 1).unwrap().set_i64("u2", 1).unwrap();
        assert_eq!(four.apply(&p.pow(2)).unwrap(), P::from_i64(&tgt, 4));
    }

    #[test]
    fn missing_assignment_and_inversion_errors() {
        let src = MonoidSig::builder().natural("x").laurent("y").build().unwrap();
        let tgt = MonoidSig::builder().natural("t").build().unwrap();
        let p = P::var(&src, "x").unwrap();
        let sp = Specialization::<BigInt>::new(&src, &tgt);
        assert!(matches!(sp.apply(&p), Err(AlgebraError::MissingAssignment(_))));
        let q = P::term(&src, &[("y", -1)]).unwrap();
        let sp = Specialization::<BigInt>::new(&src, &tgt).set_i64("y", 2).unwrap();
        assert!(matches!(sp.apply(&q), Err(AlgebraError::Inversion(_))));
        let sp = Specialization::<BigInt>::new(&src, &tgt).set_i64("y", -1).unwrap();
        assert_eq!(sp.apply(&q).unwrap(), P::from_i64(&tgt, -1));
    }

    #[test]
    fn rule_violation_detected() {
        let s = uvw();
        let t = MonoidSig::builder().natural("x").build().unwrap();
        let sp = Specialization::<BigInt>::new(&s, &t)
            .set_i64("u", 1)
            .unwrap()
            .set_i64("v", 1)
            .unwrap()
            .set_i64("w", 2)
            .unwrap();
        assert!(matches!(sp.apply(&P::one(&s)), Err(AlgebraError::RuleViolation(_))));
    }

    #[test]
    fn prime_rendering() {
        let s = MonoidSig::builder().primes("a", false).natural("x").build().unwrap();
        let p = &P::prime_class(&s, "a", 18, 1).unwrap() * &P::var(&s, "x").unwrap();
        assert_eq!(p.render(), "1*[2^1*3^2]*x^1");
    }
}
