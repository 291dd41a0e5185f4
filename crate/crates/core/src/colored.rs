//! Colored matroids and the colored Tutte polynomial, with the well-definedness criterion for
//! colored deletion-contraction recurrences checked both symbolically and by the general
//! recurrence checker.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::algebra::{Coeff, MRPoly, MonoidSig, Sig, Specialization, ZPoly};
use crate::matroid::{all_matroids, heap_permutations, RankTable};
use crate::minors::{
    constant_twist, elements, popcount, recurrence_welldef_check, tutte_character, CharacterSpec, Check,
    MinorsSystem, Norm, Subset,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMatroid {
    pub m: RankTable,
    pub colors: Vec<String>,
}

impl ColoredMatroid {
    pub fn new(m: RankTable, colors: Vec<String>) -> Result<Self, String> {
        if colors.len() != m.size() {
            return Err(format!("{} colors for {} elements", colors.len(), m.size()));
        }
        Ok(ColoredMatroid { m, colors })
    }

    pub fn monochrome(m: RankTable, color: &str) -> Self {
        let colors = vec![color.to_string(); m.size()];
        ColoredMatroid { m, colors }
    }

    pub fn size(&self) -> usize {
        self.m.size()
    }

    fn pick(&self, a: Subset) -> Vec<String> {
        elements(a).map(|e| self.colors[e].clone()).collect()
    }

    pub fn restrict(&self, a: Subset) -> Self {
        ColoredMatroid { m: self.m.restrict(a), colors: self.pick(a & self.m.full()) }
    }

    pub fn contract(&self, a: Subset) -> Self {
        ColoredMatroid { m: self.m.contract(a), colors: self.pick(self.m.full() & !a) }
    }

    pub fn direct_sum(&self, o: &Self) -> Option<Self> {
        let m = self.m.direct_sum(&o.m).ok()?;
        Some(ColoredMatroid { m, colors: self.colors.iter().chain(&o.colors).cloned().collect() })
    }

    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut colors = self.colors.clone();
        for (e, &p) in perm.iter().enumerate() {
            colors[p] = self.colors[e].clone();
        }
        ColoredMatroid { m: self.m.permute(perm), colors }
    }

    /// Sorted distinct colors.
    pub fn palette(&self) -> Vec<String> {
        self.colors.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn to_json(&self) -> Value {
        json!({"type": "colored", "matroid": self.m.to_json(), "colors": self.colors})
    }
}

/// Colored matroids over a fixed finite palette, which only matters for enumeration.
#[derive(Clone, Debug, Default)]
pub struct ColoredSystem {
    pub palette: Vec<String>,
}

impl ColoredSystem {
    pub fn new(palette: &[&str]) -> Self {
        ColoredSystem { palette: palette.iter().map(|s| s.to_string()).collect() }
    }

    /// Every matroid on `k` elements with every coloring from the palette.
    pub fn all(&self, k: usize) -> Vec<ColoredMatroid> {
        let p = self.palette.len();
        let mut out = Vec::new();
        for m in all_matroids(k) {
            for code in 0..p.pow(k as u32) {
                let colors = (0..k).map(|i| self.palette[code / p.pow(i as u32) % p].clone()).collect();
                out.push(ColoredMatroid { m: m.clone(), colors });
            }
        }
        out
    }
}

impl MinorsSystem for ColoredSystem {
    type Obj = ColoredMatroid;

    fn name(&self) -> &'static str {
        "colored"
    }
    fn ground_size(&self, x: &ColoredMatroid) -> usize {
        x.size()
    }
    fn restrict(&self, x: &ColoredMatroid, a: Subset) -> ColoredMatroid {
        x.restrict(a)
    }
    fn contract(&self, x: &ColoredMatroid, a: Subset) -> ColoredMatroid {
        x.contract(a)
    }
    fn sum_empty(&self, x: &ColoredMatroid, _y: &ColoredMatroid) -> ColoredMatroid {
        x.clone()
    }
    fn unit(&self) -> ColoredMatroid {
        ColoredMatroid { m: RankTable::empty(), colors: Vec::new() }
    }
    fn direct_sum(&self, x: &ColoredMatroid, y: &ColoredMatroid) -> Option<ColoredMatroid> {
        x.direct_sum(y)
    }
    fn enumerate(&self, k: usize) -> Option<Vec<ColoredMatroid>> {
        (k <= 3 && !self.palette.is_empty()).then(|| self.all(k))
    }
    fn class_key(&self, x: &ColoredMatroid) -> String {
        let mut best = x.clone();
        if x.size() <= 8 {
            let mut perm: Vec<usize> = (0..x.size()).collect();
            heap_permutations(&mut perm, &mut |p| {
                let c = x.permute(p);
                if c < best {
                    best = c;
                }
            });
        }
        format!("{}|{}", best.m.key(), best.colors.join(","))
    }
    fn label(&self, x: &ColoredMatroid) -> String {
        if x.size() == 1 {
            let kind = if x.m.full_rank() == 1 { "c" } else { "l" };
            format!("{kind}_{}", x.colors[0])
        } else {
            self.class_key(x)
        }
    }
    fn memo_key(&self, x: &ColoredMatroid) -> Option<String> {
        Some(format!("{}|{}", x.m.key(), x.colors.join(",")))
    }
    fn to_json(&self, x: &ColoredMatroid) -> Value {
        x.to_json()
    }
}

fn color_axis(color: &str) -> String {
    format!("a_{color}")
}

/// `K[x, y, a_λ…]` for the given palette.
pub fn colored_sig(palette: &[String]) -> Sig {
    let names: Vec<String> = ["x".to_string(), "y".to_string()].into_iter().chain(palette.iter().map(|c| color_axis(c))).collect();
    MonoidSig::builder().naturals(names.iter().map(String::as_str)).build().expect("distinct names")
}

/// `K[u1, v1, u2, v2, a_λ_1, a_λ_2…]` for the given palette.
pub fn colored_universal_sig(palette: &[String]) -> Sig {
    let names: Vec<String> = ["u1", "v1", "u2", "v2"]
        .iter()
        .map(|s| s.to_string())
        .chain(palette.iter().flat_map(|c| [format!("a_{c}_1"), format!("a_{c}_2")]))
        .collect();
    MonoidSig::builder().naturals(names.iter().map(String::as_str)).build().expect("distinct names")
}

/// `(M, λ) ↦ u^{rk} v^{cork} ∏_e a_{λ(e)}` with axes `u`, `v` and `a_λ{suffix}`.
pub fn colored_norm<C: Coeff>(sig: &Sig, u: &str, v: &str, suffix: &str) -> Norm<ColoredMatroid, C> {
    let (sig, u, v, suffix) = (sig.clone(), u.to_string(), v.to_string(), suffix.to_string());
    Arc::new(move |x: &ColoredMatroid| {
        let mut exps: BTreeMap<String, i64> = BTreeMap::new();
        exps.insert(u.clone(), x.m.full_rank() as i64);
        exps.insert(v.clone(), x.m.corank() as i64);
        for c in &x.colors {
            *exps.entry(format!("a_{c}{suffix}")).or_default() += 1;
        }
        let pairs: Vec<(&str, i64)> = exps.iter().map(|(k, &e)| (k.as_str(), e)).collect();
        MRPoly::term(&sig, &pairs).expect("palette axes exist")
    })
}

/// Universal colored character, over the palette of `x`.
pub fn colored_universal(x: &ColoredMatroid) -> ZPoly {
    let palette = x.palette();
    let sig = colored_universal_sig(&palette);
    let spec = CharacterSpec::new(&sig, colored_norm(&sig, "u1", "v1", "_1"), constant_twist(&sig), colored_norm(&sig, "u2", "v2", "_2"));
    tutte_character(&ColoredSystem::default(), x, &spec)
}

/// Colored Tutte polynomial `Σ_A (∏_{e∈A} a_{λ(e)}) (x−1)^{rk(M)−rk(A)} (y−1)^{|A|−rk(A)}`.
pub fn colored_tutte(x: &ColoredMatroid) -> ZPoly {
    let sig = colored_sig(&x.palette());
    let one = ZPoly::one(&sig);
    let x1 = &ZPoly::generator(&sig, "x") - &one;
    let y1 = &ZPoly::generator(&sig, "y") - &one;
    let r = x.m.full_rank();
    let mut out = ZPoly::zero(&sig);
    for a in 0..=x.m.full() {
        let ra = x.m.rank(a);
        let mut t = &x1.pow((r - ra) as u32) * &y1.pow((popcount(a) - ra) as u32);
        for e in elements(a) {
            t = &t * &ZPoly::generator(&sig, &color_axis(&x.colors[e]));
        }
        out.add_assign(&t);
    }
    out
}

/// Colored Tutte read off the universal character at `(u1, v1, u2, v2) = (1, y−1, x−1, 1)`,
/// `(a_λ_1, a_λ_2) = (a_λ, 1)`.
pub fn colored_from_universal(t: &ZPoly, palette: &[String]) -> ZPoly {
    let sig = colored_sig(palette);
    let one = ZPoly::one(&sig);
    let mut s = Specialization::new(t.sig(), &sig)
        .set_i64("u1", 1)
        .and_then(|s| s.set("v1", &ZPoly::generator(&sig, "y") - &one))
        .and_then(|s| s.set("u2", &ZPoly::generator(&sig, "x") - &one))
        .and_then(|s| s.set_i64("v2", 1))
        .expect("universal axes");
    for c in palette {
        s = s
            .set(&format!("a_{c}_1"), ZPoly::generator(&sig, &color_axis(c)))
            .and_then(|s| s.set_i64(&format!("a_{c}_2"), 1))
            .expect("palette axes");
    }
    s.apply(t).expect("total assignment")
}

/// Values `(u_{λ,1}, v_{λ,1}, u_{λ,2}, v_{λ,2})` of the two coefficient maps on the colored
/// coloop and loop of each color.
#[derive(Clone, Debug)]
pub struct ColorCoefficients<C: Coeff> {
    pub sig: Sig,
    pub values: BTreeMap<String, [MRPoly<C>; 4]>,
}

impl<C: Coeff> ColorCoefficients<C> {
    /// Independent symbols `u1_λ, v1_λ, u2_λ, v2_λ` for each color.
    pub fn symbolic(palette: &[&str]) -> Self {
        let names: Vec<String> =
            palette.iter().flat_map(|c| [format!("u1_{c}"), format!("v1_{c}"), format!("u2_{c}"), format!("v2_{c}")]).collect();
        let sig = MonoidSig::builder().naturals(names.iter().map(String::as_str)).build().expect("distinct names");
        let values = palette
            .iter()
            .map(|c| {
                let g = |p: &str| MRPoly::generator(&sig, &format!("{p}_{c}"));
                (c.to_string(), [g("u1"), g("v1"), g("u2"), g("v2")])
            })
            .collect();
        ColorCoefficients { sig, values }
    }

    fn coefficient_map(&self, coloop: usize, loop_: usize) -> Norm<ColoredMatroid, C> {
        let values = self.values.clone();
        let sig = self.sig.clone();
        Arc::new(move |x: &ColoredMatroid| {
            if x.size() != 1 {
                return MRPoly::one(&sig);
            }
            let v = &values[&x.colors[0]];
            if x.m.full_rank() == 1 {
                v[coloop].clone()
            } else {
                v[loop_].clone()
            }
        })
    }

    pub fn spec(&self) -> CharacterSpec<ColoredMatroid, C> {
        CharacterSpec::new(&self.sig, self.coefficient_map(0, 1), constant_twist(&self.sig), self.coefficient_map(2, 3))
    }

    fn palette(&self) -> Vec<String> {
        self.values.keys().cloned().collect()
    }

    /// The three families of polynomial identities characterizing well-definedness.
    pub fn criterion(&self) -> bool {
        let det = |l: &[MRPoly<C>; 4], m: &[MRPoly<C>; 4], i: usize| &(&l[i] * &m[i + 1]) - &(&m[i] * &l[i + 1]);
        let vals: Vec<&[MRPoly<C>; 4]> = self.values.values().collect();
        for l in &vals {
            for m in &vals {
                let (d1, d2) = (det(l, m, 0), det(l, m, 2));
                if d1 != d2 {
                    return false;
                }
                for n in &vals {
                    if !(&d1 * &(&n[1] + &n[3])).is_zero() || !(&d2 * &(&n[0] + &n[2])).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Outcome of both well-definedness tests on the same coefficients.
#[derive(Debug)]
pub struct BrVerdict {
    pub recurrence: Check,
    pub criterion: bool,
}

impl BrVerdict {
    pub fn agree(&self) -> bool {
        self.recurrence.is_ok() == self.criterion
    }
}

/// Runs the general two-element recurrence check over all colored matroids with at most
/// `max_size` elements on the coefficient palette, alongside the closed-form criterion.
pub fn br_relations_check<C: Coeff>(coeffs: &ColorCoefficients<C>, max_size: usize) -> BrVerdict {
    let sys = ColoredSystem { palette: coeffs.palette() };
    let structures: Vec<ColoredMatroid> = (2..=max_size).flat_map(|k| sys.all(k)).collect();
    BrVerdict { recurrence: recurrence_welldef_check(&sys, &structures, &coeffs.spec(), max_size), criterion: coeffs.criterion() }
}

/// Colored Tutte with each element on its own color `e{i}`, renamed to the per-element
/// axes of the multivariate Tutte polynomial.
pub fn multivariate_agreement(m: &RankTable) -> bool {
    let colors: Vec<String> = (0..m.size()).map(|i| format!("e{i}")).collect();
    let x = ColoredMatroid { m: m.clone(), colors };
    let ct = colored_tutte(&x);
    let mv = crate::matroid::multivariate_tutte(m);
    let mut s = Specialization::new(ct.sig(), mv.sig()).keep("x").and_then(|s| s.keep("y")).expect("x, y");
    for i in 0..m.size() {
        s = s.set(&format!("a_e{i}"), ZPoly::generator(mv.sig(), &format!("a{i}"))).expect("element axis");
    }
    s.apply(&ct).expect("total assignment") == mv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::tutte;
    use crate::minors::{delcon_evaluate, grothendieck_relations, verify_norm_candidate};
    use num_bigint::BigInt;

    fn colored(m: RankTable, cs: &[&str]) -> ColoredMatroid {
        ColoredMatroid::new(m, cs.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(colored_tutte(&colored(RankTable::coloop(), &["red"])).render(), "1*x^1 + 1*a_red^1 - 1");
        let u = colored(RankTable::uniform(1, 2), &["red", "blue"]);
        assert_eq!(colored_tutte(&u).render(), "1*y^1*a_blue^1*a_red^1 - 1*a_blue^1*a_red^1 + 1*x^1 + 1*a_blue^1 + 1*a_red^1 - 1");
        let t = colored_universal(&u);
        assert_eq!(colored_from_universal(&t, &u.palette()), colored_tutte(&u));
        let sig = colored_universal_sig(&u.palette());
        let spec = CharacterSpec::new(&sig, colored_norm(&sig, "u1", "v1", "_1"), constant_twist(&sig), colored_norm(&sig, "u2", "v2", "_2"));
        assert_eq!(delcon_evaluate(&ColoredSystem::default(), &u, &spec, true), t);
    }

    #[test]
    fn monochrome_collapse() {
        for m in all_matroids(3) {
            let ct = colored_tutte(&ColoredMatroid::monochrome(m.clone(), "k"));
            let sig = crate::matroid::tutte_sig();
            let s = Specialization::new(ct.sig(), &sig).keep_common().unwrap().set_i64("a_k", 1).unwrap();
            assert_eq!(s.apply(&ct).unwrap(), tutte(&m));
            assert!(multivariate_agreement(&m));
        }
    }

    #[test]
    fn grothendieck_presentation() {
        let sys = ColoredSystem::new(&["red", "blue"]);
        let p = grothendieck_relations(&sys).unwrap();
        assert_eq!(p.generators.len(), 4);
        let rendered: Vec<String> = p.relations.iter().map(|r| p.render_relation(r)).collect();
        assert_eq!(rendered.len(), 1);
        assert!(rendered[0].contains("c_red") && rendered[0].contains("l_blue"));
        let sig = MonoidSig::builder().naturals(["u", "v", "a_red", "a_blue"]).build().unwrap();
        let map = |x: &ColoredMatroid| -> ZPoly {
            let base = if x.m.full_rank() == 1 { "u" } else { "v" };
            &ZPoly::generator(&sig, base) * &ZPoly::generator(&sig, &color_axis(&x.colors[0]))
        };
        assert!(verify_norm_candidate(&sys, &map).unwrap().is_ok());
    }

    fn numeric(rows: &[(&str, [i64; 4])]) -> ColorCoefficients<BigInt> {
        let sig = MonoidSig::builder().build().unwrap();
        let values = rows
            .iter()
            .map(|(c, v)| (c.to_string(), v.map(|k| ZPoly::from_i64(&sig, k))))
            .collect();
        ColorCoefficients { sig, values }
    }

    #[test]
    fn criterion_agreement() {
        // Genuine norms: u_{λ,i} v_{μ,i} = u_{μ,i} v_{λ,i}.
        let good = numeric(&[("red", [1, 2, 3, 1]), ("blue", [2, 4, 6, 2])]);
        let v = br_relations_check(&good, 3);
        assert!(v.recurrence.is_ok() && v.criterion);

        let sym = ColorCoefficients::<BigInt>::symbolic(&["red", "blue"]);
        let v = br_relations_check(&sym, 3);
        assert!(v.agree() && !v.criterion);
        assert_eq!(v.recurrence.unwrap_err().size, 2);

        let second = numeric(&[("red", [1, 0, -1, 1]), ("blue", [2, 1, -2, 1])]);
        let v = br_relations_check(&second, 3);
        assert!(v.agree() && !v.criterion);
        let w = v.recurrence.unwrap_err();
        assert_eq!(w.size, 3);
        assert_eq!(w.structure["matroid"]["rank"], serde_json::json!([0, 1, 1, 1, 1, 1, 1, 1]));
    }
}
