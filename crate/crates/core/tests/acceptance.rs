//! Acceptance criteria. Runs as a plain binary so every criterion prints one PASS/FAIL line.
//! Set `TUTTE_BLESS=1` to rewrite the golden files.

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tutte_core::algebra::{poly_ring, MonoidSig, ZPoly};
use tutte_core::arithmetic::{
    arith_class, arith_spec, arith_specialize, class_sig, from_presentation, random_presentation, relation_check,
    universal_arith_tutte, AbelianPresentation, ArithMatroid, ArithMode, ArithSystem,
};
use tutte_core::colored::{
    br_relations_check, colored_norm, colored_universal_sig, ColorCoefficients, ColoredMatroid, ColoredSystem,
};
use tutte_core::delta_persp::{
    dmat_class, dmat_norm, dmat_sig, dmp_class, dmp_norm, dmp_sig, extremal_minor_check, matper_class, matper_norm,
    matper_sig, DMPerspective, DeltaSystem, DmpSystem, FeasibleFamily, Perspective, PerspectiveSystem,
};
use tutte_core::dispatch::{self, Source, Verdict};
use tutte_core::graph::{self, class_monomial, GraphSystem};
use tutte_core::io::Structure;
use tutte_core::matroid::{
    all_matroids, canonical_classes, tutte, tutte_sig, universal_norm,
    universal_spec, MatroidSystem, RankTable,
};
use tutte_core::minors::set_system::{copies_sig, set_norm, set_universal_spec, SetSystem};
use tutte_core::minors::{
    constant_twist, convolution_check, delcon_evaluate, exp_star, grothendieck_relations, inverse_norm,
    tutte_character, verify_norm_candidate, CharacterSpec, MinorsSystem,
};
use tutte_core::polysub::{
    matroid_inclusion_check, ow_norm_relation_check, relation_witness, sf_norm, sf_sig, universal_image, SubmodSystem,
    SubmodTable,
};
use tutte_core::relative::{las_vergnas_consistency, relative_spec, relative_tutte, RelMatroid, RelativeSystem};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pass(id: &str, source: Source) -> Outcome {
    match dispatch::verify(id, &source).map_err(|e| format!("{id}: {e}"))? {
        Verdict::Fail { witness, .. } => Err(format!("{id}: {}", serde_json::to_string(&witness).unwrap())),
        _ => Ok(()),
    }
}

fn random(size: usize, count: usize, seed: u64) -> Source {
    Source::Random { size, count, seed }
}

// 1 ---------------------------------------------------------------------------------------

fn set_system() -> Outcome {
    let sig = copies_sig(3);
    let g = |i: usize| ZPoly::generator(&sig, &format!("u{i}"));
    let one = constant_twist::<usize, BigInt>(&sig);
    let signed = CharacterSpec::new(&sig, inverse_norm(&SetSystem, &set_norm(&sig, 0)), one.clone(), set_norm(&sig, 2));
    for n in 0..=12usize {
        // Binomial expansions built term by term, independent of the engine.
        let binom = |a: &ZPoly, b: &ZPoly| {
            let mut out = ZPoly::zero(&sig);
            let mut c = BigInt::from(1);
            for k in 0..=n {
                out.add_assign(&(&a.pow(k as u32) * &b.pow((n - k) as u32)).scale(&c));
                c = c * BigInt::from(n - k) / BigInt::from(k + 1);
            }
            out
        };
        let want = binom(&g(1), &g(2));
        ensure(tutte_character(&SetSystem, &n, &set_universal_spec(&sig)) == want, || format!("T^Set on {n}"))?;
        let want = binom(&g(0).scale(&BigInt::from(-1)), &g(2));
        ensure(tutte_character(&SetSystem, &n, &signed) == want, || format!("signed character on {n}"))?;
        convolution_check(&SetSystem, &n, &set_norm(&sig, 0), &one, &set_norm(&sig, 1), &one, &set_norm(&sig, 2))
            .map_err(|w| format!("signed convolution: {}", w.detail))?;
    }
    Ok(())
}

// 2 ---------------------------------------------------------------------------------------

fn both_engines<S: MinorsSystem>(sys: &S, x: &S::Obj, spec: &CharacterSpec<S::Obj, BigInt>) -> bool {
    tutte_character(sys, x, spec) == delcon_evaluate(sys, x, spec, true)
}

fn engine_agrees(s: &Structure) -> bool {
    match s {
        Structure::Matroid(m) => both_engines(&MatroidSystem, m, &universal_spec()),
        Structure::Graph(g) => both_engines(&GraphSystem, g, &graph::universal_spec()),
        Structure::Delta(d) => {
            let sig = dmat_sig();
            let spec = CharacterSpec::new(
                &sig,
                dmat_norm(&sig, "u1", "v1", "w1"),
                constant_twist(&sig),
                dmat_norm(&sig, "u2", "v2", "w2"),
            );
            both_engines(&DeltaSystem, d, &spec)
        }
        Structure::Perspective(p) => {
            let sig = matper_sig();
            let spec = CharacterSpec::new(
                &sig,
                matper_norm(&sig, "u1", "v1", "w1"),
                constant_twist(&sig),
                matper_norm(&sig, "u2", "v2", "w2"),
            );
            both_engines(&PerspectiveSystem, p, &spec)
        }
        Structure::Dmp(t) => {
            let sig = dmp_sig();
            let spec = CharacterSpec::new(
                &sig,
                dmp_norm(&sig, ["s1", "t1", "u1", "v1", "w1"]),
                constant_twist(&sig),
                dmp_norm(&sig, ["s2", "t2", "u2", "v2", "w2"]),
            );
            both_engines(&DmpSystem, t, &spec)
        }
        Structure::Relative(r) => both_engines(&RelativeSystem, r, &relative_spec(r).expect("within the size cap")),
        Structure::Submodular(t) => {
            let sig = sf_sig();
            let spec = CharacterSpec::new(&sig, sf_norm(&sig, "x1", "y1"), constant_twist(&sig), sf_norm(&sig, "x2", "y2"));
            both_engines(&SubmodSystem, t, &spec)
        }
        Structure::Colored(c) => {
            let sig = colored_universal_sig(&c.palette());
            let spec = CharacterSpec::new(
                &sig,
                colored_norm(&sig, "u1", "v1", "_1"),
                constant_twist(&sig),
                colored_norm(&sig, "u2", "v2", "_2"),
            );
            both_engines(&ColoredSystem::default(), c, &spec)
        }
        Structure::Arithmetic(a) | Structure::Presentation(_, a) => both_engines(&ArithSystem, a, &arith_spec()),
    }
}

fn engine_equivalence() -> Outcome {
    let sig = copies_sig(3);
    for n in 0..=8usize {
        ensure(both_engines(&SetSystem, &n, &set_universal_spec(&sig)), || format!("set of size {n}"))?;
    }
    let families = ["matroid", "graph", "delta", "perspective", "dmp", "relative", "submodular", "colored", "arithmetic"];
    for (k, family) in families.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(200 + k as u64);
        let instances: Vec<Structure> =
            (0..200).map(|i| dispatch::random_structure(family, &mut rng, i % 9).unwrap()).collect();
        let bad = instances.par_iter().position_first(|s| !engine_agrees(s));
        ensure(bad.is_none(), || format!("{family}: engines disagree on {}", instances[bad.unwrap()].to_json()))?;
    }
    Ok(())
}

// 3 ---------------------------------------------------------------------------------------

fn enumeration_counts() -> Outcome {
    let two = FeasibleFamily::all(2);
    let got = [
        canonical_classes(2).len(),
        two.len(),
        two.iter().filter(|d| !d.is_saturated()).count(),
        DMPerspective::all(2).len(),
        Perspective::all(1).len(),
        DMPerspective::all(1).len(),
    ];
    ensure(got == [4, 15, 3, 38, 3, 5], || format!("counts {got:?}, expected [4, 15, 3, 38, 3, 5]"))
}

// 4 ---------------------------------------------------------------------------------------

/// Isomorphism classes of matroids on `n` elements from basis families alone: every family of
/// equal-size subsets satisfying basis exchange, up to relabeling.
fn oracle_class_count(n: usize) -> usize {
    let subsets = 1usize << n;
    let pc = |s: usize| s.count_ones();
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| (0..=k).map(move |i| {
                let mut q = p.clone();
                q.insert(i, k);
                q
            }))
            .collect();
    }
    let relabel = |s: usize, p: &[usize]| (0..n).filter(|&e| s >> e & 1 == 1).fold(0, |acc, e| acc | 1 << p[e]);
    let mut classes = BTreeSet::new();
    for fam in 1u64..(1u64 << subsets) {
        let bases: Vec<usize> = (0..subsets).filter(|&s| fam >> s & 1 == 1).collect();
        if bases.iter().any(|&b| pc(b) != pc(bases[0])) {
            continue;
        }
        let is_basis = |s: usize| fam >> s & 1 == 1;
        let exchange = bases.iter().all(|&a| {
            bases.iter().all(|&b| {
                (0..n).filter(|&x| (a & !b) >> x & 1 == 1).all(|x| {
                    (0..n).filter(|&y| (b & !a) >> y & 1 == 1).any(|y| is_basis((a & !(1 << x)) | 1 << y))
                })
            })
        });
        if !exchange {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| bases.iter().fold(0u64, |acc, &b| acc | 1 << relabel(b, p)))
            .min()
            .expect("at least the identity");
        classes.insert(canon);
    }
    classes.len()
}

fn matroid_enumeration() -> Outcome {
    for (n, want) in [1usize, 2, 4, 8, 17].into_iter().enumerate() {
        let got = canonical_classes(n).len();
        let oracle = oracle_class_count(n);
        ensure(got == want && oracle == want, || format!("n = {n}: library {got}, oracle {oracle}, expected {want}"))?;
    }
    Ok(())
}

// 5 ---------------------------------------------------------------------------------------

/// Tutte polynomial as `(i, j) -> coefficient of x^i y^j` straight from the rank table.
fn oracle_tutte(m: &RankTable) -> HashMap<(i64, i64), i64> {
    let r = m.full_rank() as i64;
    let mut out: HashMap<(i64, i64), i64> = HashMap::new();
    for a in 0..=m.full() {
        let (i, j) = (r - m.rank(a) as i64, a.count_ones() as i64 - m.rank(a) as i64);
        // (x−1)^i (y−1)^j expanded by the binomial theorem.
        for p in 0..=i {
            for q in 0..=j {
                let c = binom(i, p) * binom(j, q) * if (i - p + j - q) % 2 == 0 { 1 } else { -1 };
                *out.entry((p, q)).or_default() += c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn as_table(p: &ZPoly) -> HashMap<(i64, i64), i64> {
    let t = p.to_json_terms();
    t.as_array()
        .unwrap()
        .iter()
        .map(|term| {
            let e = |k: &str| term["monomial"].get(k).and_then(|v| v.as_i64()).unwrap_or(0);
            ((e("x"), e("y")), term["coeff"].as_str().unwrap().parse().unwrap())
        })
        .collect()
}

fn matroid_identities() -> Outcome {
    for n in 0..=4 {
        for m in all_matroids(n) {
            ensure(as_table(&tutte(&m)) == oracle_tutte(&m), || format!("Tutte oracle on {}", m.to_json()))?;
        }
    }
    for id in ["duality", "kung", "krs", "iterated", "signflip"] {
        pass(id, Source::Enumerate(4))?;
        pass(id, random(6, 100, 5))?;
    }
    Ok(())
}

// 6 ---------------------------------------------------------------------------------------

fn grothendieck_verifications() -> Outcome {
    let norm_ok = |name: &str, r: Result<tutte_core::minors::Check, tutte_core::minors::MinorsError>| match r {
        Ok(Ok(())) => Ok(()),
        Ok(Err(w)) => Err(format!("{name}: {} ({} vs {})", w.detail, w.left, w.right)),
        Err(e) => Err(format!("{name}: {e}")),
    };
    let uv = poly_ring(&["u", "v"]);
    let mat = universal_norm::<BigInt>(&uv, "u", "v");
    norm_ok("Mat", verify_norm_candidate(&MatroidSystem, &|m| mat(m)))?;
    norm_ok("Gra", verify_norm_candidate(&GraphSystem, &class_monomial))?;
    norm_ok("MatPer", verify_norm_candidate(&PerspectiveSystem, &matper_class(&matper_sig())))?;
    norm_ok("DMat", verify_norm_candidate(&DeltaSystem, &dmat_class(&dmat_sig())))?;
    let psig = dmp_sig();
    norm_ok("DMatPer", verify_norm_candidate(&DmpSystem, &dmp_class(&psig)))?;
    let all = ["red", "green", "blue"];
    for k in 1..=3 {
        let palette = &all[..k];
        let names: Vec<String> =
            ["u".to_string(), "v".to_string()].into_iter().chain(palette.iter().map(|c| format!("a_{c}"))).collect();
        let sig = MonoidSig::builder().naturals(names.iter().map(String::as_str)).build().unwrap();
        let map = |x: &ColoredMatroid| -> ZPoly {
            let base = if x.m.full_rank() == 1 { "u" } else { "v" };
            &ZPoly::generator(&sig, base) * &ZPoly::generator(&sig, &format!("a_{}", x.colors[0]))
        };
        norm_ok(&format!("colored, {k} colors"), verify_norm_candidate(&ColoredSystem::new(palette), &map))?;
    }
    relation_check(&arith_class(&class_sig()), 6).map_err(|w| format!("AMat: {}", w.detail))?;

    let rendered = |p: tutte_core::minors::Presentation| -> Vec<String> {
        p.relations.iter().map(|r| p.render_relation(r)).collect()
    };
    let delta = rendered(grothendieck_relations(&DeltaSystem).map_err(|e| e.to_string())?);
    ensure(delta == ["l·c = n·n"], || format!("DMat relations {delta:?}"))?;
    // Through the class map the lone relation must read w² = s·t.
    let p = grothendieck_relations(&DmpSystem).map_err(|e| e.to_string())?;
    ensure(p.relations.len() == 1, || format!("DMatPer relations {:?}", rendered(p.clone())))?;
    let ones = DmpSystem.enumerate(1).unwrap();
    let class_by_name: HashMap<String, ZPoly> = ones.iter().map(|x| (DmpSystem.label(x), dmp_class(&psig)(x))).collect();
    let side = |v: &[usize]| v.iter().fold(ZPoly::one(&psig), |acc, &i| &acc * &class_by_name[&p.generators[i]]);
    let (l, r) = (side(&p.relations[0].left), side(&p.relations[0].right));
    let w2 = ZPoly::generator(&psig, "w1").pow(2);
    let st = &ZPoly::generator(&psig, "s1") * &ZPoly::generator(&psig, "t1");
    ensure((l == st && r == w2) || (l == w2 && r == st), || format!("DMatPer relation maps to {} = {}", l.render(), r.render()))
}

// 7 ---------------------------------------------------------------------------------------

fn delta_perspective_identities() -> Outcome {
    let ids = [
        "discrepancy",
        "tardos",
        "lv-convolution",
        "br-convolution",
        "br-two-variable",
        "dmp-to-matper",
        "dmp-to-dmat",
    ];
    for id in ids {
        pass(id, Source::Enumerate(3))?;
        pass(id, random(5, 40, 7))?;
    }
    let d = FeasibleFamily::new(2, [0b00, 0b01, 0b11]).map_err(|e| e.to_string())?;
    ensure(extremal_minor_check(&d).is_err(), || "minor non-morphism went undetected".into())
}

// 8 ---------------------------------------------------------------------------------------

fn relative_matroids() -> Outcome {
    for total in 0..=4 {
        for m in all_matroids(total) {
            for zero in 0..=m.full() {
                let r = RelMatroid::new(m.clone(), zero).map_err(|e| e.to_string())?;
                let p = r.to_perspective();
                for a in 0..1u32 << r.size() {
                    ensure(r.restrict(a).to_perspective() == p.restrict(a), || format!("restrict {a:#b} of {}", r.to_json()))?;
                    ensure(r.contract(a).to_perspective() == p.contract(a), || format!("contract {a:#b} of {}", r.to_json()))?;
                }
                ensure(las_vergnas_consistency(&r).unwrap_or(false), || format!("pointed form on {}", r.to_json()))?;
            }
            let rel = relative_tutte(&RelMatroid::from_matroid(m.clone())).map_err(|e| e.to_string())?;
            let sig = tutte_sig();
            let collapsed = tutte_core::algebra::Specialization::new(rel.poly.sig(), &sig)
                .keep_common()
                .and_then(|s| s.set_i64("z", 0))
                .and_then(|s| s.apply(&rel.poly))
                .map_err(|e| e.to_string())?;
            ensure(rel.legend.is_empty() && collapsed == tutte(&m), || format!("empty zero set on {}", m.to_json()))?;
        }
    }
    Ok(())
}

// 9 ---------------------------------------------------------------------------------------

fn submodular() -> Outcome {
    pass("sf-homogeneous", random(6, 100, 9))?;
    pass("sf-prefactor", random(6, 100, 10))?;
    for n in 0..=4 {
        for m in all_matroids(n) {
            ensure(matroid_inclusion_check(&m), || format!("matroid inclusion on {}", m.to_json()))?;
        }
    }
    let s = |b: i64| universal_image(&SubmodTable::single(b));
    ensure(ow_norm_relation_check(&s(0), &s(1), &s(2)), || "N(s0)N(s2) ≠ N(s1)²".into())?;
    // The 2-element witness splits as s2 ⊕ s0 one way and s1 ⊕ s1 the other.
    let w = relation_witness(2, 0, 1, 1).map_err(|e| e.to_string())?;
    let splits = [w.restrict(1), w.contract(1), w.restrict(2), w.contract(2)];
    let singles = [2, 0, 1, 1].map(SubmodTable::single);
    ensure(splits == singles, || "relation witness splits".into())
}

// 10 --------------------------------------------------------------------------------------

fn numeric(rows: &[(&str, [i64; 4])]) -> ColorCoefficients<BigInt> {
    let sig = MonoidSig::builder().build().unwrap();
    let values = rows.iter().map(|(c, v)| (c.to_string(), v.map(|k| ZPoly::from_i64(&sig, k)))).collect();
    ColorCoefficients { sig, values }
}

fn colored() -> Outcome {
    let good = br_relations_check(&numeric(&[("red", [1, 2, 3, 1]), ("blue", [2, 4, 6, 2])]), 3);
    ensure(good.agree() && good.criterion, || format!("norm-derived coefficients: {good:?}"))?;
    // Independent symbols break the first family of relations already on two elements.
    let first = br_relations_check(&ColorCoefficients::<BigInt>::symbolic(&["red", "blue"]), 3);
    ensure(first.agree() && first.recurrence.as_ref().err().map(|w| w.size) == Some(2), || format!("first violation: {first:?}"))?;
    // The first family holds here but the second fails, which needs three elements.
    let second = br_relations_check(&numeric(&[("red", [1, 0, -1, 1]), ("blue", [2, 1, -2, 1])]), 3);
    ensure(second.agree() && second.recurrence.as_ref().err().map(|w| w.size) == Some(3), || format!("second violation: {second:?}"))
}

// 11 --------------------------------------------------------------------------------------

fn presentation(free: usize, torsion: Vec<i64>, cols: Vec<Vec<i64>>) -> Result<ArithMatroid, String> {
    let p = AbelianPresentation::new(free, torsion, cols).map_err(|e| e.to_string())?;
    from_presentation(&p).map_err(|e| e.to_string())
}

fn arithmetic() -> Outcome {
    for a in 2..=5u64 {
        let m = presentation(1, vec![], vec![vec![1], vec![a as i64]])?;
        ensure(m.restrict(2) == ArithMatroid::coloop(a) && m.contract(2) == ArithMatroid::loop_(a), || format!("(1,{a}) in Z"))?;
    }
    let (a, b) = (2i64, 3i64);
    let m = presentation(0, vec![a * b], vec![vec![1], vec![a]])?;
    ensure(m.restrict(1) == ArithMatroid::loop_((a * b) as u64), || "M|e = l_ab".into())?;
    ensure(m.contract(2) == ArithMatroid::loop_(a as u64), || "M/f".into())?;

    let col = presentation(1, vec![], vec![vec![2]])?;
    let uni = universal_arith_tutte(&col);
    ensure(uni.render() == "1*x^1 + 1*[2^1] - 1", || format!("universal {}", uni.render()))?;
    for (mode, want) in [(ArithMode::Full, "1*x^1 + 1"), (ArithMode::Forget, "1*x^1"), (ArithMode::PLocal(3), "1*x^1")] {
        let got = arith_specialize(&uni, mode).render();
        ensure(got == want, || format!("{mode:?}: {got}, expected {want}"))?;
    }
    // Presentations already reject instances failing the axioms; the sweep recounts them.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..200 {
        let p = random_presentation(&mut rng, i % 5);
        from_presentation(&p).map_err(|e| format!("{}: {e}", p.to_json()))?;
    }
    for id in ["arith-axioms", "arith-convolution", "backman-lenz", "arith-forget"] {
        pass(id, random(4, 200, 12))?;
    }
    Ok(())
}

// 12 --------------------------------------------------------------------------------------

fn exp_star_recovers_norm() -> Outcome {
    let sig = poly_ring(&["u", "v"]);
    let norm = universal_norm::<BigRational>(&sig, "u", "v");
    let all: Vec<RankTable> = (0..=5).flat_map(all_matroids).collect();
    let bad = all.par_iter().position_first(|m| exp_star(&MatroidSystem, m, &sig, &|x| norm(x)).ok() != Some(norm(m)));
    ensure(bad.is_none(), || format!("exp_* differs on {}", all[bad.unwrap()].to_json()))
}

// 13 --------------------------------------------------------------------------------------

fn golden_outputs() -> Vec<(&'static str, String)> {
    let parse = |s: &str| Structure::parse_str(s).unwrap();
    let u12 = parse(r#"{"type":"matroid","n":2,"rank":[0,1,1,1]}"#);
    let edge = parse(r#"{"type":"graph","vertices":2,"edges":[[0,1]]}"#);
    let col = parse(r#"{"type":"arithmetic_presentation","free_rank":1,"torsion":[],"columns":[[2]]}"#);
    let delta = parse(r#"{"type":"delta","n":2,"feasible":[[],[0],[0,1]]}"#);
    let rel = parse(r#"{"type":"relative","matroid":{"n":3,"rank":[0,1,1,2,1,2,2,2]},"zero_set":[2]}"#);
    let compute = |s: &Structure, inv: &str| serde_json::to_string_pretty(&dispatch::compute(s, inv, &[]).unwrap().to_json()).unwrap();
    let verify = |id: &str, src: Source| dispatch::verify(id, &src).unwrap().report();
    let enumerate = |f: &str, n: usize, c: bool| serde_json::to_string(&dispatch::enumerate(f, n, c).unwrap()).unwrap();
    vec![
        ("compute_matroid_tutte", compute(&u12, "tutte")),
        ("compute_graph_dichromatic", compute(&edge, "dichromatic")),
        ("compute_arith_full", compute(&col, "arith-tutte-full")),
        ("compute_delta_universal", compute(&delta, "universal")),
        ("compute_relative_tutte", compute(&rel, "relative-tutte")),
        ("verify_krs_4", verify("krs", Source::Enumerate(4))),
        ("verify_extremal_minor_2", verify("extremal-minor", Source::Enumerate(2))),
        ("verify_backman_lenz_random", verify("backman-lenz", random(4, 60, 3))),
        ("verify_counts", ["delta-count", "dmp-count", "matroid-classes"].map(|id| verify(id, Source::Enumerate(2))).join("\n")),
        ("grothendieck", ["mat", "delta", "dmp", "colored", "sf"].map(|s| dispatch::grothendieck(s, &[]).unwrap()).concat()),
        ("enumerate_matroid_classes_3", enumerate("matroid", 3, true)),
    ]
}

fn determinism() -> Outcome {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(golden_outputs)
    };
    let (one, eight) = (run(1), run(8));
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("TUTTE_BLESS").is_some();
    for ((name, a), (_, b)) in one.iter().zip(&eight) {
        ensure(a == b, || format!("{name} differs between 1 and 8 threads"))?;
        let path = dir.join(format!("{name}.txt"));
        if bless {
            std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
            std::fs::write(&path, format!("{a}\n")).map_err(|e| e.to_string())?;
        }
        let golden = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(golden == format!("{a}\n"), || format!("{name} differs from {}", path.display()))?;
    }
    Ok(())
}

fn main() {
    // Filters and flags passed by `cargo test` are accepted and ignored.
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 13] = [
        ("set-system sanity", Duration::from_secs(1), set_system),
        ("engine equivalence", Duration::from_secs(60), engine_equivalence),
        ("enumeration counts", Duration::from_secs(10), enumeration_counts),
        ("matroid enumeration oracle", Duration::from_secs(30), matroid_enumeration),
        ("matroid identities", Duration::from_secs(300), matroid_identities),
        ("Grothendieck verifications", Duration::from_secs(60), grothendieck_verifications),
        ("delta and perspective identities", Duration::from_secs(300), delta_perspective_identities),
        ("relative matroids", Duration::from_secs(60), relative_matroids),
        ("submodular functions", Duration::from_secs(30), submodular),
        ("colored recurrence criterion", Duration::from_secs(60), colored),
        ("arithmetic matroids", Duration::from_secs(300), arithmetic),
        ("exp_* recovers the norm", Duration::from_secs(60), exp_star_recovers_norm),
        ("determinism across thread counts", Duration::from_secs(120), determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| ensure(took <= *limit, || format!("took {took:.2?}, limit {limit:?}")));
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
