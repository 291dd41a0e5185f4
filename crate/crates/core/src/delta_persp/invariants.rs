use std::sync::{Arc, OnceLock};

use crate::algebra::{poly_ring, Coeff, GPoly, Gaussian, MRPoly, MonoidSig, Sig, Specialization, ZPoly};
use crate::minors::{constant_twist, full_set, popcount, tutte_character, CharacterSpec, Check, MinorsSystem, Norm, Witness};

use super::{DMPerspective, DeltaSystem, DmpSystem, FeasibleFamily, Perspective, PerspectiveSystem};

fn mono(sig: &Sig, exps: &[(&str, i64)]) -> ZPoly {
    ZPoly::term(sig, exps).expect("exponents lie in the axis domains")
}

fn verdict<S: MinorsSystem, C: Coeff>(sys: &S, x: &S::Obj, what: &str, lhs: MRPoly<C>, rhs: MRPoly<C>) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(sys, x, what, lhs.render(), rhs.render()))
    }
}

fn at<C>(p: &ZPoly, target: &Sig, images: &[(&str, MRPoly<C>)]) -> MRPoly<C>
where
    C: Coeff + From<num_bigint::BigInt>,
{
    let mut s = Specialization::new(p.sig(), target);
    for (name, v) in images {
        s = s.set(name, v.clone()).expect("known axis");
    }
    s.apply(p).expect("total assignment")
}

// ---------- matroid perspectives ----------

/// `K[u1, v1, w1, u2, v2, w2]`.
pub fn matper_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| poly_ring(&["u1", "v1", "w1", "u2", "v2", "w2"])).clone()
}

/// `K[x, y, z]`.
pub fn lv_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| poly_ring(&["x", "y", "z"])).clone()
}

/// `(M, M') ↦ u^{rk M'} v^{cork M} w^{rk M − rk M'}`.
pub fn matper_norm<C: Coeff>(sig: &Sig, u: &str, v: &str, w: &str) -> Norm<Perspective, C> {
    let (sig, u, v, w) = (sig.clone(), u.to_string(), v.to_string(), w.to_string());
    Arc::new(move |p: &Perspective| {
        let (r, rp) = (p.m.full_rank() as i64, p.mp.full_rank() as i64);
        MRPoly::term(&sig, &[(&u, rp), (&v, p.m.corank() as i64), (&w, r - rp)]).expect("natural exponents")
    })
}

pub fn universal_matper(p: &Perspective) -> ZPoly {
    let sig = matper_sig();
    let spec = CharacterSpec::new(&sig, matper_norm(&sig, "u1", "v1", "w1"), constant_twist(&sig), matper_norm(&sig, "u2", "v2", "w2"));
    tutte_character(&PerspectiveSystem, p, &spec)
}

/// Las Vergnas polynomial
/// `Σ_A (x−1)^{rk M' − rk_{M'} A} (y−1)^{|A| − rk_M A} z^{(rk M − rk_M A) − (rk M' − rk_{M'} A)}`.
pub fn las_vergnas(p: &Perspective) -> ZPoly {
    let sig = lv_sig();
    let one = ZPoly::one(&sig);
    let x1 = &ZPoly::generator(&sig, "x") - &one;
    let y1 = &ZPoly::generator(&sig, "y") - &one;
    let z = ZPoly::generator(&sig, "z");
    let (r, rp) = (p.m.full_rank(), p.mp.full_rank());
    let mut out = ZPoly::zero(&sig);
    for a in 0..=p.m.full() {
        let (ra, rpa) = (p.m.rank(a), p.mp.rank(a));
        let t = &(&x1.pow((rp - rpa) as u32) * &y1.pow((popcount(a) - ra) as u32)) * &z.pow(((r - ra) - (rp - rpa)) as u32);
        out.add_assign(&t);
    }
    out
}

/// `LV` read off `T^MatPer` at `(1, y−1, 1, x−1, 1, z)`.
pub fn lv_from_universal(t: &ZPoly) -> ZPoly {
    let sig = lv_sig();
    let one = ZPoly::one(&sig);
    let g = |n: &str| ZPoly::generator(&sig, n);
    at(t, &sig, &[
        ("u1", one.clone()),
        ("v1", &g("y") - &one),
        ("w1", one.clone()),
        ("u2", &g("x") - &one),
        ("v2", one.clone()),
        ("w2", g("z")),
    ])
}

/// `T^MatPer = u1^{rk M'} v2^{cork M} w1^{rk M − rk M'} LV(1 + u2/u1, 1 + v1/v2, w2/w1)`.
pub fn lv_prefactor_check(p: &Perspective) -> Check {
    let ring = MonoidSig::builder()
        .laurent("u1")
        .natural("v1")
        .laurent("w1")
        .natural("u2")
        .laurent("v2")
        .natural("w2")
        .build()
        .expect("distinct names");
    let g = |n: &str| ZPoly::generator(&ring, n);
    let inv = |n: &str| g(n).powi(-1).expect("laurent axis");
    let one = ZPoly::one(&ring);
    let (r, rp) = (p.m.full_rank() as i64, p.mp.full_rank() as i64);
    let pre = mono(&ring, &[("u1", rp), ("v2", p.m.corank() as i64), ("w1", r - rp)]);
    let lv = at(&las_vergnas(p), &ring, &[
        ("x", &one + &(&g("u2") * &inv("u1"))),
        ("y", &one + &(&g("v1") * &inv("v2"))),
        ("z", &g("w2") * &inv("w1")),
    ]);
    let embed = Specialization::new(&matper_sig(), &ring).keep_common().unwrap();
    let lhs = embed.apply(&universal_matper(p)).expect("total assignment");
    verdict(&PerspectiveSystem, p, "Las Vergnas prefactor identity", lhs, &pre * &lv)
}

/// `LV(1−ab, 1−cd, −ef) = Σ_A a^{rk M' − rk_{M'} A} d^{|A| − rk_M A} e^{(rk M − rk_M A) − (rk M' − rk_{M'} A)}
/// LV_{|A}(1−a, 1−c, −e) LV_{/A}(1−b, 1−d, −f)`.
pub fn lv_convolution_check(p: &Perspective) -> Check {
    let sig = poly_ring(&["a", "b", "c", "d", "e", "f"]);
    let g = |n: &str| ZPoly::generator(&sig, n);
    let one = ZPoly::one(&sig);
    let lv_at = |q: &Perspective, x: ZPoly, y: ZPoly, z: ZPoly| at(&las_vergnas(q), &sig, &[("x", x), ("y", y), ("z", z)]);
    let lhs = lv_at(p, &one - &(&g("a") * &g("b")), &one - &(&g("c") * &g("d")), -&(&g("e") * &g("f")));
    let (r, rp) = (p.m.full_rank() as i64, p.mp.full_rank() as i64);
    let mut rhs = ZPoly::zero(&sig);
    for s in 0..=p.m.full() {
        let (ra, rpa) = (p.m.rank(s) as i64, p.mp.rank(s) as i64);
        let pre = mono(&sig, &[("a", rp - rpa), ("d", popcount(s) as i64 - ra), ("e", (r - ra) - (rp - rpa))]);
        let low = lv_at(&p.restrict(s), &one - &g("a"), &one - &g("c"), -&g("e"));
        let high = lv_at(&p.contract(s), &one - &g("b"), &one - &g("d"), -&g("f"));
        rhs.add_assign(&(&(&pre * &low) * &high));
    }
    verdict(&PerspectiveSystem, p, "six-variable Las Vergnas convolution", lhs, rhs)
}

/// `LV(x, y, z) = Σ_A LV_{|A}(0, y, −1) LV_{/A}(x, 0, z)`.
pub fn lv_three_variable_check(p: &Perspective) -> Check {
    let sig = lv_sig();
    let g = |n: &str| ZPoly::generator(&sig, n);
    let zero = ZPoly::zero(&sig);
    let mut rhs = ZPoly::zero(&sig);
    for s in 0..=p.m.full() {
        let low = at(&las_vergnas(&p.restrict(s)), &sig, &[("x", zero.clone()), ("y", g("y")), ("z", ZPoly::from_i64(&sig, -1))]);
        let high = at(&las_vergnas(&p.contract(s)), &sig, &[("x", g("x")), ("y", zero.clone()), ("z", g("z"))]);
        rhs.add_assign(&(&low * &high));
    }
    verdict(&PerspectiveSystem, p, "three-variable Las Vergnas convolution", las_vergnas(p), rhs)
}

// ---------- delta-matroids ----------

/// `K[u1, v1, w1, u2, v2, w2] / (w1² = u1 v1, w2² = u2 v2)`.
pub fn dmat_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| {
        MonoidSig::builder()
            .naturals(["u1", "v1", "w1", "u2", "v2", "w2"])
            .rule("w1", "u1", "v1")
            .rule("w2", "u2", "v2")
            .build()
            .expect("valid quotient")
    })
    .clone()
}

/// `K[X^{1/2}, Y^{1/2}]` with `X = x − 1` and `Y = y − 1`.
pub fn br_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| MonoidSig::builder().half("X").half("Y").build().expect("distinct names")).clone()
}

/// `D ↦ u^{rk D_min} v^{|E| − rk D_max} w^{rk D_max − rk D_min}`.
pub fn dmat_norm<C: Coeff>(sig: &Sig, u: &str, v: &str, w: &str) -> Norm<FeasibleFamily, C> {
    let (sig, u, v, w) = (sig.clone(), u.to_string(), v.to_string(), w.to_string());
    Arc::new(move |d: &FeasibleFamily| {
        let (hi, lo) = (d.upper().full_rank() as i64, d.lower().full_rank() as i64);
        MRPoly::term(&sig, &[(&u, lo), (&v, d.size() as i64 - hi), (&w, hi - lo)]).expect("natural exponents")
    })
}

pub fn universal_dmat(d: &FeasibleFamily) -> ZPoly {
    let sig = dmat_sig();
    let spec = CharacterSpec::new(&sig, dmat_norm(&sig, "u1", "v1", "w1"), constant_twist(&sig), dmat_norm(&sig, "u2", "v2", "w2"));
    tutte_character(&DeltaSystem, d, &spec)
}

/// Bivariate Bollobás–Riordan polynomial `R̃_D = Σ_A X^{σ(D) − σ(D|A)} Y^{|A| − σ(D|A)}` in
/// `X = x − 1`, `Y = y − 1`, with half-integer exponents.
pub fn bollobas_riordan(d: &FeasibleFamily) -> ZPoly {
    let sig = br_sig();
    let s = d.sigma2();
    let mut out = ZPoly::zero(&sig);
    for a in 0..=full_set(d.size()) {
        let sa = d.restrict(a).sigma2();
        out.add_assign(&mono(&sig, &[("X", s - sa), ("Y", 2 * popcount(a) as i64 - sa)]));
    }
    out
}

/// `R̃_D` in `K[x, y]` when every exponent is whole.
pub fn bollobas_riordan_xy(d: &FeasibleFamily) -> Option<ZPoly> {
    let r = bollobas_riordan(d);
    if r.terms().any(|(e, _)| e.exps.iter().any(|x| x % 2 != 0)) {
        return None;
    }
    let sig = crate::matroid::tutte_sig();
    let one = ZPoly::one(&sig);
    let x1 = &ZPoly::generator(&sig, "x") - &one;
    let y1 = &ZPoly::generator(&sig, "y") - &one;
    let mut out = ZPoly::zero(&sig);
    for (e, c) in r.terms() {
        let t = &x1.pow((e.exps[0] / 2) as u32) * &y1.pow((e.exps[1] / 2) as u32);
        out.add_assign(&t.scale(c));
    }
    Some(out)
}

/// `R̃_D` read off `T^ΔMat` at `(u1, v1, u2, v2) = (1, y−1, x−1, 1)`, `w1 ↦ Y^{1/2}`, `w2 ↦ X^{1/2}`.
pub fn br_from_universal(t: &ZPoly) -> ZPoly {
    let sig = br_sig();
    let one = ZPoly::one(&sig);
    at(t, &sig, &[
        ("u1", one.clone()),
        ("v1", mono(&sig, &[("Y", 2)])),
        ("w1", mono(&sig, &[("Y", 1)])),
        ("u2", mono(&sig, &[("X", 2)])),
        ("v2", one),
        ("w2", mono(&sig, &[("X", 1)])),
    ])
}

/// `T^ΔMat = u1^{σ(D)} v2^{|E| − σ(D)} R̃_D(1 + u2/u1, 1 + v1/v2)` in the ring of half-integer
/// Laurent monomials, where `w_i = u_i^{1/2} v_i^{1/2}`.
pub fn br_prefactor_check(d: &FeasibleFamily) -> Check {
    let ring = MonoidSig::builder()
        .half_laurent("u1")
        .half_laurent("v1")
        .half_laurent("u2")
        .half_laurent("v2")
        .build()
        .expect("distinct names");
    let s = d.sigma2();
    let pre = mono(&ring, &[("u1", s), ("v2", 2 * d.size() as i64 - s)]);
    let br = at(&bollobas_riordan(d), &ring, &[
        ("X", mono(&ring, &[("u2", 1), ("u1", -1)])),
        ("Y", mono(&ring, &[("v1", 1), ("v2", -1)])),
    ]);
    let embed = at(&universal_dmat(d), &ring, &[
        ("u1", mono(&ring, &[("u1", 2)])),
        ("v1", mono(&ring, &[("v1", 2)])),
        ("w1", mono(&ring, &[("u1", 1), ("v1", 1)])),
        ("u2", mono(&ring, &[("u2", 2)])),
        ("v2", mono(&ring, &[("v2", 2)])),
        ("w2", mono(&ring, &[("u2", 1), ("v2", 1)])),
    ]);
    verdict(&DeltaSystem, d, "Bollobás–Riordan prefactor identity", embed, &pre * &br)
}

fn br_gaussian(d: &FeasibleFamily, target: &Sig, x_half: GPoly, y_half: GPoly) -> GPoly {
    at(&bollobas_riordan(d), target, &[("X", x_half), ("Y", y_half)])
}

fn g_mono(sig: &Sig, c: Gaussian, exps: &[(&str, i64)]) -> GPoly {
    GPoly::term(sig, exps).expect("exponents lie in the axis domains").scale(&c)
}

/// `R̃_D(1−ab, 1−cd) = Σ_A a^{σ(D)−σ(D|A)} d^{|A|−σ(D|A)} R̃_{D|A}(1−a, 1−c) R̃_{D/A}(1−b, 1−d)`
/// over the Gaussian integers. Square roots of the negated arguments take the branches
/// `(−ab)^{1/2} = i(ab)^{1/2}`, `(−a)^{1/2} = i a^{1/2}`, `(−c)^{1/2} = i c^{1/2}` and
/// `(−b)^{1/2} = i b^{1/2}`, `(−cd)^{1/2} = i(cd)^{1/2}` but `(−d)^{1/2} = −i d^{1/2}`, which
/// is the choice making every half-integer term cancel.
pub fn br_convolution_check(d: &FeasibleFamily) -> Check {
    let sig = MonoidSig::builder().half("a").half("b").half("c").half("d").build().expect("distinct names");
    let i = Gaussian::i;
    let lhs = br_gaussian(d, &sig, g_mono(&sig, i(), &[("a", 1), ("b", 1)]), g_mono(&sig, i(), &[("c", 1), ("d", 1)]));
    let s = d.sigma2();
    let mut rhs = GPoly::zero(&sig);
    for a in 0..=full_set(d.size()) {
        let sa = d.restrict(a).sigma2();
        let pre = g_mono(&sig, Gaussian::new(1, 0), &[("a", s - sa), ("d", 2 * popcount(a) as i64 - sa)]);
        let low = br_gaussian(&d.restrict(a), &sig, g_mono(&sig, i(), &[("a", 1)]), g_mono(&sig, i(), &[("c", 1)]));
        let high = br_gaussian(&d.contract(a), &sig, g_mono(&sig, i(), &[("b", 1)]), g_mono(&sig, Gaussian::new(0, -1), &[("d", 1)]));
        rhs.add_assign(&(&(&pre * &low) * &high));
    }
    verdict(&DeltaSystem, d, "four-variable Bollobás–Riordan convolution", lhs, rhs)
}

/// `R̃_D(x, y) = Σ_A R̃_{D|A}(0, y) R̃_{D/A}(x, 0)`, with `X^{1/2} ↦ i` on the first factor and
/// `Y^{1/2} ↦ −i` on the second.
pub fn br_two_variable_check(d: &FeasibleFamily) -> Check {
    let sig = br_sig();
    let keep = |n: &str| g_mono(&sig, Gaussian::new(1, 0), &[(n, 1)]);
    let unit = |c: Gaussian| GPoly::constant(&sig, c);
    let lhs: GPoly = bollobas_riordan(d).convert();
    let mut rhs = GPoly::zero(&sig);
    for a in 0..=full_set(d.size()) {
        let low = br_gaussian(&d.restrict(a), &sig, unit(Gaussian::i()), keep("Y"));
        let high = br_gaussian(&d.contract(a), &sig, keep("X"), unit(Gaussian::new(0, -1)));
        rhs.add_assign(&(&low * &high));
    }
    verdict(&DeltaSystem, d, "two-variable Bollobás–Riordan convolution", lhs, rhs)
}

// ---------- delta-matroid perspectives ----------

/// `K[s1, t1, u1, v1, w1, s2, t2, u2, v2, w2] / (w1² = s1 t1, w2² = s2 t2)`.
pub fn dmp_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| {
        MonoidSig::builder()
            .naturals(["s1", "t1", "u1", "v1", "w1", "s2", "t2", "u2", "v2", "w2"])
            .rule("w1", "s1", "t1")
            .rule("w2", "s2", "t2")
            .build()
            .expect("valid quotient")
    })
    .clone()
}

/// `K[x, y, a^{1/2}, b^{1/2}]`.
pub fn krushkal_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| MonoidSig::builder().natural("x").natural("y").half("a").half("b").build().expect("distinct names"))
        .clone()
}

/// Exponents `(s, t, u, v, w)` of the class of `(M, D, M')`.
fn dmp_exponents(t: &DMPerspective) -> [i64; 5] {
    let (hi, lo) = (t.d.upper().full_rank() as i64, t.d.lower().full_rank() as i64);
    let (r, rp) = (t.m.full_rank() as i64, t.mp.full_rank() as i64);
    [lo - rp, r - hi, rp, t.m.corank() as i64, hi - lo]
}

/// `(M, D, M') ↦ s^{rk D_min − rk M'} t^{rk M − rk D_max} u^{rk M'} v^{cork M} w^{rk D_max − rk D_min}`.
pub fn dmp_norm<C: Coeff>(sig: &Sig, names: [&str; 5]) -> Norm<DMPerspective, C> {
    let sig = sig.clone();
    let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    Arc::new(move |t: &DMPerspective| {
        let e = dmp_exponents(t);
        let exps: Vec<(&str, i64)> = names.iter().map(String::as_str).zip(e).collect();
        MRPoly::term(&sig, &exps).expect("natural exponents")
    })
}

pub fn universal_dmp(t: &DMPerspective) -> ZPoly {
    let sig = dmp_sig();
    let spec = CharacterSpec::new(
        &sig,
        dmp_norm(&sig, ["s1", "t1", "u1", "v1", "w1"]),
        constant_twist(&sig),
        dmp_norm(&sig, ["s2", "t2", "u2", "v2", "w2"]),
    );
    tutte_character(&DmpSystem, t, &spec)
}

/// Krushkal polynomial
/// `Σ_A x^{rk M' − rk_{M'} A} y^{|A| − rk_M A} a^{σ(D|A) − rk_{M'} A} b^{rk_M A − σ(D|A)}`.
pub fn krushkal(t: &DMPerspective) -> ZPoly {
    let sig = krushkal_sig();
    let rp = t.mp.full_rank() as i64;
    let mut out = ZPoly::zero(&sig);
    for a in 0..=full_set(t.size()) {
        let (ra, rpa) = (t.m.rank(a) as i64, t.mp.rank(a) as i64);
        let sa = t.d.restrict(a).sigma2();
        out.add_assign(&mono(&sig, &[
            ("x", rp - rpa),
            ("y", popcount(a) as i64 - ra),
            ("a", sa - 2 * rpa),
            ("b", 2 * ra - sa),
        ]));
    }
    out
}

/// Krushkal read off `T^ΔMatPer` at `(s1, t1, u1, v1, s2, t2, u2, v2) = (a, b, 1, y, 1, 1, x, 1)`,
/// `w1 ↦ a^{1/2} b^{1/2}`, `w2 ↦ 1`.
pub fn krushkal_from_universal(t: &ZPoly) -> ZPoly {
    let sig = krushkal_sig();
    let one = ZPoly::one(&sig);
    at(t, &sig, &[
        ("s1", mono(&sig, &[("a", 2)])),
        ("t1", mono(&sig, &[("b", 2)])),
        ("u1", one.clone()),
        ("v1", ZPoly::generator(&sig, "y")),
        ("w1", mono(&sig, &[("a", 1), ("b", 1)])),
        ("s2", one.clone()),
        ("t2", one.clone()),
        ("u2", ZPoly::generator(&sig, "x")),
        ("v2", one.clone()),
        ("w2", one),
    ])
}

/// `T^ΔMatPer = s2^{σ(D) − rk M'} t2^{rk M − σ(D)} u1^{rk M'} v2^{cork M}
/// K(u2/u1, v1/v2, s1/s2, t1/t2)` with `w_i = s_i^{1/2} t_i^{1/2}`.
pub fn krushkal_prefactor_check(t: &DMPerspective) -> Check {
    let ring = MonoidSig::builder()
        .half_laurent("s1")
        .half_laurent("t1")
        .laurent("u1")
        .natural("v1")
        .half_laurent("s2")
        .half_laurent("t2")
        .natural("u2")
        .laurent("v2")
        .build()
        .expect("distinct names");
    let s = t.d.sigma2();
    let (r, rp) = (t.m.full_rank() as i64, t.mp.full_rank() as i64);
    let pre = mono(&ring, &[("s2", s - 2 * rp), ("t2", 2 * r - s), ("u1", rp), ("v2", t.m.corank() as i64)]);
    let k = at(&krushkal(t), &ring, &[
        ("x", mono(&ring, &[("u2", 1), ("u1", -1)])),
        ("y", mono(&ring, &[("v1", 1), ("v2", -1)])),
        ("a", mono(&ring, &[("s1", 1), ("s2", -1)])),
        ("b", mono(&ring, &[("t1", 1), ("t2", -1)])),
    ]);
    let embed = at(&universal_dmp(t), &ring, &[
        ("s1", mono(&ring, &[("s1", 2)])),
        ("t1", mono(&ring, &[("t1", 2)])),
        ("u1", mono(&ring, &[("u1", 1)])),
        ("v1", mono(&ring, &[("v1", 1)])),
        ("w1", mono(&ring, &[("s1", 1), ("t1", 1)])),
        ("s2", mono(&ring, &[("s2", 2)])),
        ("t2", mono(&ring, &[("t2", 2)])),
        ("u2", mono(&ring, &[("u2", 1)])),
        ("v2", mono(&ring, &[("v2", 1)])),
        ("w2", mono(&ring, &[("s2", 1), ("t2", 1)])),
    ]);
    verdict(&DmpSystem, t, "Krushkal prefactor identity", embed, &pre * &k)
}

/// Setting `s = t = w` in `T^ΔMatPer(M, D(M, M'), M')` gives `T^MatPer(M, M')`.
pub fn dmp_to_matper_check(p: &Perspective) -> Check {
    let target = matper_sig();
    let g = |n: &str| ZPoly::generator(&target, n);
    let got = at(&universal_dmp(&DMPerspective::from_perspective(p)), &target, &[
        ("s1", g("w1")),
        ("t1", g("w1")),
        ("u1", g("u1")),
        ("v1", g("v1")),
        ("w1", g("w1")),
        ("s2", g("w2")),
        ("t2", g("w2")),
        ("u2", g("u2")),
        ("v2", g("v2")),
        ("w2", g("w2")),
    ]);
    verdict(&PerspectiveSystem, p, "ΔMatPer to MatPer specialization", got, universal_matper(p))
}

/// Setting `s = u`, `t = v` in `T^ΔMatPer(M, D, M')` gives `T^ΔMat(D)`.
pub fn dmp_to_dmat_check(t: &DMPerspective) -> Check {
    let target = dmat_sig();
    let g = |n: &str| ZPoly::generator(&target, n);
    let got = at(&universal_dmp(t), &target, &[
        ("s1", g("u1")),
        ("t1", g("v1")),
        ("u1", g("u1")),
        ("v1", g("v1")),
        ("w1", g("w1")),
        ("s2", g("u2")),
        ("t2", g("v2")),
        ("u2", g("u2")),
        ("v2", g("v2")),
        ("w2", g("w2")),
    ]);
    verdict(&DmpSystem, t, "ΔMatPer to ΔMat specialization", got, universal_dmat(&t.d))
}

/// Class monomial of a delta-matroid, as a plain function for norm-candidate checks.
pub fn dmat_class(sig: &Sig) -> impl Fn(&FeasibleFamily) -> ZPoly {
    let n = dmat_norm::<num_bigint::BigInt>(sig, "u1", "v1", "w1");
    move |d| n(d)
}

pub fn dmp_class(sig: &Sig) -> impl Fn(&DMPerspective) -> ZPoly {
    let n = dmp_norm::<num_bigint::BigInt>(sig, ["s1", "t1", "u1", "v1", "w1"]);
    move |t| n(t)
}

pub fn matper_class(sig: &Sig) -> impl Fn(&Perspective) -> ZPoly {
    let n = matper_norm::<num_bigint::BigInt>(sig, "u1", "v1", "w1");
    move |p| n(p)
}
