//! Name-based access to invariants, identity checks, Grothendieck listings and enumeration,
//! shared by the command-line front end and the acceptance tests.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{factorize, poly_ring, MRPoly, MonoidSig, QPoly, Sig, Specialization, ZPoly};
use crate::arithmetic::{
    arith_convolution_check, arith_specialize, backman_lenz_check, biarith_product, from_presentation,
    molecule_sums, random_presentation, universal_arith_tutte, ArithMatroid, ArithMode,
};
use crate::colored::{colored_from_universal, colored_tutte, colored_universal, multivariate_agreement, ColoredSystem};
use crate::delta_persp::{
    bollobas_riordan, br_convolution_check, br_prefactor_check, br_two_variable_check, discrepancy_check,
    dmp_to_dmat_check, dmp_to_matper_check, extremal_minor_check, krushkal, krushkal_prefactor_check, las_vergnas,
    lv_convolution_check, lv_prefactor_check, lv_three_variable_check, random_delta, random_dmp, random_perspective,
    tardos_check, universal_dmat, universal_dmp, universal_matper, DMPerspective, DeltaSystem, DmpSystem,
    FeasibleFamily, Perspective, PerspectiveSystem,
};
use crate::graph::{
    chromatic, chromatic_convolution_check, dichromatic, dichromatic_recursive, universal_graph_tutte, EdgeGraph,
    GraphSystem, ENUM_VERTEX_CAP,
};
use crate::io::Structure;
use crate::matroid::{
    all_matroids, canonical_classes, duality_check, iterated_check, krs_check, kung_check, multivariate_tutte,
    prefactor_check, random_matroid, signflip_check, tutte, universal_norm, universal_spec, universal_tutte,
    MatroidSystem, RankTable,
};
use crate::minors::{delcon_evaluate, exp_star, grothendieck_relations, Check, MinorsSystem, Presentation, Witness};
use crate::polysub::{
    matroid_inclusion_check, random_table, rank_sum_class_check, sf_homogeneous, sf_prefactor_check, t_sf,
    universal_image,
};
use crate::relative::{
    las_vergnas_consistency, pointed_tutte, relative_tutte, relative_tutte_direct, relative_universal, RelMatroid,
};

#[derive(Debug, Error)]
pub enum DispatchError {
    #[error("unknown name: {0}")]
    Unknown(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("substitution error: {0}")]
    Substitution(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// A rendered polynomial with its JSON term list.
#[derive(Clone, Debug, PartialEq)]
pub struct Computed {
    pub invariant: String,
    pub text: String,
    pub terms: Value,
    /// Axis legend for relative matroids.
    pub legend: Option<Value>,
}

impl Computed {
    fn new(invariant: &str, p: &ZPoly, legend: Option<Value>, vars: &[(String, BigRational)]) -> Result<Self, DispatchError> {
        let (text, terms) = if vars.is_empty() {
            (p.render(), p.to_json_terms())
        } else {
            let q = substitute(p, vars)?;
            (q.render(), q.to_json_terms())
        };
        Ok(Computed { invariant: invariant.to_string(), text, terms, legend })
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"invariant": self.invariant, "terms": self.terms});
        if let Some(l) = &self.legend {
            v["legend"] = l.clone();
        }
        v
    }
}

/// Parses `k=v,…` with rational values such as `x=2,y=-1/3`.
pub fn parse_vars(spec: &str) -> Result<Vec<(String, BigRational)>, DispatchError> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| DispatchError::Substitution(format!("expected name=value, got {item:?}")))?;
            let val: BigRational =
                v.trim().parse().map_err(|_| DispatchError::Substitution(format!("not a rational number: {v:?}")))?;
            Ok((k.trim().to_string(), val))
        })
        .collect()
}

/// Substitutes rational values; the remaining axes keep their names. A value given for a
/// half axis is the value of its square root.
pub fn substitute(p: &ZPoly, vars: &[(String, BigRational)]) -> Result<QPoly, DispatchError> {
    let src = p.sig();
    let sub_err = |e: crate::algebra::AlgebraError| DispatchError::Substitution(e.to_string());
    for (k, _) in vars {
        src.axis_index(k).map_err(|_| DispatchError::Substitution(format!("{k} is not a variable of the result")))?;
    }
    let assigned = |name: &str| vars.iter().any(|(k, _)| k == name);
    let mut b = MonoidSig::builder();
    for ax in src.axes().iter().filter(|a| !assigned(&a.name)) {
        b = b.axis(ax.clone());
    }
    for r in src.rules() {
        let names = [r.ruled, r.left, r.right].map(|i| src.axes()[i].name.as_str());
        match names.iter().filter(|n| assigned(n)).count() {
            0 => b = b.rule(names[0], names[1], names[2]),
            3 => {}
            _ => {
                return Err(DispatchError::Substitution(format!(
                    "{}, {} and {} are tied by {}^2 = {}·{}; assign all or none",
                    names[0], names[1], names[2], names[0], names[1], names[2]
                )))
            }
        }
    }
    for blk in src.prime_blocks() {
        b = b.primes(&blk.name, blk.rational);
    }
    let tgt: Sig = b.build().map_err(sub_err)?;
    let mut s = Specialization::<BigRational>::new(src, &tgt).keep_common().map_err(sub_err)?;
    for (k, v) in vars {
        s = s.set(k, QPoly::constant(&tgt, v.clone())).map_err(sub_err)?;
    }
    s.apply(p).map_err(sub_err)
}

/// Invariant names accepted for each input type.
pub fn invariants_for(kind: &str) -> &'static [&'static str] {
    match kind {
        "matroid" => &["tutte", "universal", "multivariate"],
        "graph" => &["dichromatic", "universal", "tutte", "chromatic"],
        "delta" => &["br", "universal"],
        "perspective" => &["las-vergnas", "universal"],
        "dmp" => &["krushkal", "universal"],
        "relative" => &["relative-tutte", "universal", "pointed"],
        "submodular" => &["t-sf", "universal"],
        "colored" => &["colored-tutte", "universal"],
        "arithmetic" | "arithmetic_presentation" => {
            &["arith-universal", "arith-tutte-full", "arith-tutte-forget", "arith-tutte-local-<p>", "tutte"]
        }
        _ => &[],
    }
}

fn prime_local(name: &str) -> Option<Result<u64, DispatchError>> {
    let p = name.strip_prefix("arith-tutte-local-")?;
    Some(match p.parse::<u64>() {
        Ok(p) if matches!(factorize(p).as_deref(), Ok([(_, 1)])) => Ok(p),
        _ => Err(DispatchError::Unknown(format!("{p} is not a prime"))),
    })
}

/// Computes `invariant` of `s`, then applies `vars`.
pub fn compute(s: &Structure, invariant: &str, vars: &[(String, BigRational)]) -> Result<Computed, DispatchError> {
    let mismatch = || {
        DispatchError::Mismatch(format!(
            "invariant {invariant:?} does not apply to {}; available: {}",
            s.kind(),
            invariants_for(s.kind()).join(", ")
        ))
    };
    let done = |p: ZPoly| Computed::new(invariant, &p, None, vars);
    match (s, invariant) {
        (Structure::Matroid(m), "tutte") => done(tutte(m)),
        (Structure::Matroid(m), "universal") => done(universal_tutte(m)),
        (Structure::Matroid(m), "multivariate") => done(multivariate_tutte(m)),
        (Structure::Graph(g), "dichromatic") => done(dichromatic(g)),
        (Structure::Graph(g), "universal") => done(universal_graph_tutte(g)),
        (Structure::Graph(g), "tutte") => {
            done(tutte(&g.to_matroid().map_err(|e| DispatchError::Unsupported(e.to_string()))?))
        }
        (Structure::Graph(g), "chromatic") => done(chromatic(g, &poly_ring(&["q"]), "q")),
        (Structure::Delta(d), "br") => done(bollobas_riordan(d)),
        (Structure::Delta(d), "universal") => done(universal_dmat(d)),
        (Structure::Perspective(p), "las-vergnas") => done(las_vergnas(p)),
        (Structure::Perspective(p), "universal") => done(universal_matper(p)),
        (Structure::Dmp(t), "krushkal") => done(krushkal(t)),
        (Structure::Dmp(t), "universal") => done(universal_dmp(t)),
        (Structure::Relative(r), "relative-tutte" | "universal") => {
            let rel = if invariant == "universal" { relative_universal(r) } else { relative_tutte(r) }
                .map_err(|e| DispatchError::Unsupported(e.to_string()))?;
            Computed::new(invariant, &rel.poly, Some(rel.legend_json()), vars)
        }
        (Structure::Relative(r), "pointed") => {
            done(pointed_tutte(r).map_err(|e| DispatchError::Unsupported(e.to_string()))?)
        }
        (Structure::Submodular(t), "t-sf") => done(t_sf(t)),
        (Structure::Submodular(t), "universal") => done(universal_image(t)),
        (Structure::Colored(c), "colored-tutte") => done(colored_tutte(c)),
        (Structure::Colored(c), "universal") => done(colored_universal(c)),
        (Structure::Arithmetic(a) | Structure::Presentation(_, a), name) => {
            let uni = universal_arith_tutte(a);
            match name {
                "arith-universal" => done(uni),
                "arith-tutte-full" => done(arith_specialize(&uni, ArithMode::Full)),
                "arith-tutte-forget" => done(arith_specialize(&uni, ArithMode::Forget)),
                "tutte" => done(tutte(a.matroid())),
                _ => match prime_local(name) {
                    Some(p) => done(arith_specialize(&uni, ArithMode::PLocal(p?))),
                    None => Err(mismatch()),
                },
            }
        }
        _ => Err(mismatch()),
    }
}

/// Where verification instances come from.
#[derive(Clone, Debug)]
pub enum Source {
    Input(Structure),
    /// Every structure up to this size.
    Enumerate(usize),
    /// `count` seeded random structures with sizes cycling through `0..=size`.
    Random { size: usize, count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass { instances: usize },
    Fail { instances: usize, witness: Box<Witness> },
    Count { family: String, size: usize, count: usize },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !matches!(self, Verdict::Fail { .. })
    }

    /// One-line report, followed by the serialized witness on failure.
    pub fn report(&self) -> String {
        match self {
            Verdict::Pass { instances } => format!("PASS {instances} instances"),
            Verdict::Fail { instances, witness } => {
                let w = serde_json::to_string_pretty(witness.as_ref()).expect("witness serializes");
                format!("FAIL after {instances} instances\n{w}")
            }
            Verdict::Count { family, size, count } => format!("PASS {family} on {size} elements: {count}"),
        }
    }
}

type Checker = fn(&Structure) -> Check;

/// `(identity, family, checker)`.
const IDENTITIES: &[(&str, &str, Checker)] = &[
    ("duality", "matroid", |s| duality_check(mat(s))),
    ("kung", "matroid", |s| kung_check(mat(s))),
    ("krs", "matroid", |s| krs_check(mat(s))),
    ("iterated", "matroid", |s| iterated_check(mat(s), 3)),
    ("signflip", "matroid", |s| signflip_check(mat(s))),
    ("prefactor", "matroid", |s| prefactor_check(mat(s))),
    ("engine", "matroid", |s| {
        let m = mat(s);
        let rec: ZPoly = delcon_evaluate(&MatroidSystem, m, &universal_spec(), true);
        agree(&MatroidSystem, m, "deletion-contraction against subset expansion", &rec, &universal_tutte(m))
    }),
    ("exp", "matroid", |s| {
        let m = mat(s);
        let sig = crate::matroid::universal_sig();
        let norm = universal_norm::<BigRational>(&sig, "u1", "v1");
        let e = exp_star(&MatroidSystem, m, &sig, &|x| norm(x)).expect("rational mode");
        agree(&MatroidSystem, m, "exp of the degree-one truncation against the norm", &e, &norm(m))
    }),
    ("multivariate", "matroid", |s| flag(s, multivariate_agreement(mat(s)), "colored and multivariate Tutte disagree")),
    ("sf-inclusion", "matroid", |s| flag(s, matroid_inclusion_check(mat(s)), "matroid inclusion into SF")),
    ("chromatic-convolution", "graph", |s| chromatic_convolution_check(graph(s))),
    ("dichromatic-recursive", "graph", |s| {
        let g = graph(s);
        agree(&GraphSystem, g, "recursive against subset dichromatic", &dichromatic_recursive(g), &dichromatic(g))
    }),
    ("discrepancy", "delta", |s| discrepancy_check(delta(s))),
    ("extremal-minor", "delta", |s| extremal_minor_check(delta(s))),
    ("br-convolution", "delta", |s| br_convolution_check(delta(s))),
    ("br-two-variable", "delta", |s| br_two_variable_check(delta(s))),
    ("br-prefactor", "delta", |s| br_prefactor_check(delta(s))),
    ("tardos", "perspective", |s| tardos_check(persp(s))),
    ("lv-convolution", "perspective", |s| lv_convolution_check(persp(s))),
    ("lv-three-variable", "perspective", |s| lv_three_variable_check(persp(s))),
    ("lv-prefactor", "perspective", |s| lv_prefactor_check(persp(s))),
    ("dmp-to-matper", "perspective", |s| dmp_to_matper_check(persp(s))),
    ("rank-sum-class", "perspective", |s| flag(s, rank_sum_class_check(persp(s)), "rank-sum class map")),
    ("krushkal-prefactor", "dmp", |s| krushkal_prefactor_check(dmp(s))),
    ("dmp-to-dmat", "dmp", |s| dmp_to_dmat_check(dmp(s))),
    ("las-vergnas-consistency", "relative", |s| {
        flag(s, las_vergnas_consistency(rel(s)).unwrap_or(false), "relative against pointed Las Vergnas")
    }),
    ("relative-direct", "relative", |s| {
        let r = rel(s);
        let ok = matches!((relative_tutte(r), relative_tutte_direct(r)), (Ok(a), Ok(b)) if a.poly == b.poly);
        flag(s, ok, "character against direct relative expansion")
    }),
    ("sf-prefactor", "submodular", |s| sf_prefactor_check(sub(s))),
    ("sf-homogeneous", "submodular", |s| flag(s, sf_homogeneous(sub(s)), "T^SF is not bihomogeneous")),
    ("colored-universal", "colored", |s| {
        let c = col(s);
        let ok = colored_from_universal(&colored_universal(c), &c.palette()) == colored_tutte(c);
        flag(s, ok, "colored Tutte against the universal character")
    }),
    ("arith-axioms", "arithmetic", |s| {
        let ok = molecule_sums(arith(s)).map(|v| v.iter().all(|(_, x)| *x >= 0)).unwrap_or(false);
        flag(s, ok, "negative molecule sum")
    }),
    ("arith-forget", "arithmetic", |s| {
        let a = arith(s);
        let ok = arith_specialize(&universal_arith_tutte(a), ArithMode::Forget) == tutte(a.matroid());
        flag(s, ok, "forgetting multiplicities does not give the Tutte polynomial")
    }),
    ("arith-convolution", "arithmetic", |s| {
        let a = arith(s);
        let unit = ArithMatroid::trivial(a.matroid().clone());
        for (m1, m2) in [(a, &unit), (&unit, a), (a, a)] {
            match arith_convolution_check(m1, m2) {
                Ok(r) => r?,
                Err(e) => return flag(s, false, &e.to_string()),
            }
        }
        Ok(())
    }),
    ("backman-lenz", "arithmetic", |s| backman_lenz_check(arith(s))),
];

/// Count identities: `(name, family, counter)`.
type Counter = fn(usize) -> Result<usize, DispatchError>;

const COUNTS: &[(&str, &str, Counter)] = &[
    ("matroid-count", "matroid", |n| Ok(all_matroids(capped(n, 5)?).len())),
    ("matroid-classes", "matroid", |n| Ok(canonical_classes(capped(n, 5)?).len())),
    ("delta-count", "delta", |n| Ok(FeasibleFamily::all(capped(n, 4)?).len())),
    ("delta-nonsaturated", "delta", |n| {
        Ok(FeasibleFamily::all(capped(n, 4)?).iter().filter(|d| !d.is_saturated()).count())
    }),
    ("perspective-count", "perspective", |n| Ok(Perspective::all(capped(n, 4)?).len())),
    ("dmp-count", "dmp", |n| Ok(DMPerspective::all(capped(n, 3)?).len())),
];

fn capped(n: usize, cap: usize) -> Result<usize, DispatchError> {
    if n > cap {
        return Err(DispatchError::Unsupported(format!("enumeration is capped at {cap} elements")));
    }
    Ok(n)
}

/// Identity names with their families, for help output.
pub fn identity_names() -> Vec<(&'static str, &'static str)> {
    IDENTITIES.iter().map(|(n, f, _)| (*n, *f)).chain(COUNTS.iter().map(|(n, f, _)| (*n, *f))).collect()
}

fn mat(s: &Structure) -> &RankTable {
    match s {
        Structure::Matroid(m) => m,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn graph(s: &Structure) -> &EdgeGraph {
    match s {
        Structure::Graph(g) => g,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn delta(s: &Structure) -> &FeasibleFamily {
    match s {
        Structure::Delta(d) => d,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn persp(s: &Structure) -> &Perspective {
    match s {
        Structure::Perspective(p) => p,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn dmp(s: &Structure) -> &DMPerspective {
    match s {
        Structure::Dmp(t) => t,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn rel(s: &Structure) -> &RelMatroid {
    match s {
        Structure::Relative(r) => r,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn sub(s: &Structure) -> &crate::polysub::SubmodTable {
    match s {
        Structure::Submodular(t) => t,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn col(s: &Structure) -> &crate::colored::ColoredMatroid {
    match s {
        Structure::Colored(c) => c,
        _ => unreachable!("dispatch filters by family"),
    }
}
fn arith(s: &Structure) -> &ArithMatroid {
    match s {
        Structure::Arithmetic(a) | Structure::Presentation(_, a) => a,
        _ => unreachable!("dispatch filters by family"),
    }
}

fn agree<S: MinorsSystem, C: crate::algebra::Coeff>(
    sys: &S,
    x: &S::Obj,
    detail: &str,
    l: &MRPoly<C>,
    r: &MRPoly<C>,
) -> Check {
    if l == r {
        Ok(())
    } else {
        Err(Witness::new(sys, x, detail, l.render(), r.render()))
    }
}

fn flag(s: &Structure, ok: bool, detail: &str) -> Check {
    if ok {
        return Ok(());
    }
    Err(Box::new(Witness {
        family: s.kind().to_string(),
        size: s.size(),
        structure: s.to_json(),
        detail: detail.to_string(),
        left: "false".into(),
        right: "true".into(),
    }))
}

fn family_of(s: &Structure) -> &'static str {
    match s {
        Structure::Presentation(..) => "arithmetic",
        _ => s.kind(),
    }
}

/// Instances of `family` drawn from `source`.
pub fn instances(family: &str, source: &Source) -> Result<Vec<Structure>, DispatchError> {
    match source {
        Source::Input(s) => {
            if family_of(s) != family {
                return Err(DispatchError::Mismatch(format!("expected a {family} input, got {}", s.kind())));
            }
            Ok(vec![s.clone()])
        }
        Source::Enumerate(n) => enumerate_family(family, *n),
        Source::Random { size, count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count).map(|i| random_structure(family, &mut rng, i % (size + 1))).collect()
        }
    }
}

fn enumerate_family(family: &str, n: usize) -> Result<Vec<Structure>, DispatchError> {
    let upto = |cap: usize| capped(n, cap).map(|n| 0..=n);
    Ok(match family {
        "matroid" => upto(5)?.flat_map(all_matroids).map(Structure::Matroid).collect(),
        "graph" => upto(3)?.flat_map(|k| EdgeGraph::all_with_edges(k, ENUM_VERTEX_CAP)).map(Structure::Graph).collect(),
        "delta" => upto(4)?.flat_map(FeasibleFamily::all).map(Structure::Delta).collect(),
        "perspective" => upto(4)?.flat_map(Perspective::all).map(Structure::Perspective).collect(),
        "dmp" => upto(3)?.flat_map(DMPerspective::all).map(Structure::Dmp).collect(),
        "relative" => upto(4)?
            .flat_map(all_matroids)
            .flat_map(|m| {
                (0..=m.full()).map(move |z| Structure::Relative(RelMatroid::new(m.clone(), z).expect("zero set inside")))
            })
            .collect(),
        "colored" => {
            let sys = ColoredSystem::new(&["blue", "red"]);
            upto(3)?.flat_map(|k| sys.all(k)).map(Structure::Colored).collect()
        }
        _ => {
            return Err(DispatchError::Unsupported(format!(
                "{family} structures are not finitely enumerable; use random instances"
            )))
        }
    })
}

/// One seeded random structure of `family` on `n` elements.
pub fn random_structure(family: &str, rng: &mut ChaCha8Rng, n: usize) -> Result<Structure, DispatchError> {
    Ok(match family {
        "matroid" => Structure::Matroid(random_matroid(rng, n)),
        "graph" => Structure::Graph(EdgeGraph::random(rng, n)),
        "delta" => Structure::Delta(random_delta(rng, n)),
        "perspective" => Structure::Perspective(random_perspective(rng, n)),
        "dmp" => Structure::Dmp(random_dmp(rng, n)),
        "relative" => {
            let m = random_matroid(rng, n);
            let z = rng.gen_range(0..=m.full());
            Structure::Relative(RelMatroid::new(m, z).expect("zero set inside"))
        }
        "submodular" => Structure::Submodular(random_table(rng, n, true)),
        "colored" => {
            let m = random_matroid(rng, n);
            let colors = (0..n).map(|_| ["red", "blue", "green"][rng.gen_range(0..3)].to_string()).collect();
            Structure::Colored(crate::colored::ColoredMatroid::new(m, colors).expect("one color per element"))
        }
        "arithmetic" => {
            let p = random_presentation(rng, n);
            let a = from_presentation(&p).expect("presentations induce arithmetic matroids");
            Structure::Presentation(p, a)
        }
        _ => return Err(DispatchError::Unknown(format!("family {family}"))),
    })
}

/// Runs `identity` over `source`. Instances are checked in parallel; the reported witness is
/// the first failure in instance order.
pub fn verify(identity: &str, source: &Source) -> Result<Verdict, DispatchError> {
    if let Some((_, family, count)) = COUNTS.iter().find(|(n, _, _)| *n == identity) {
        let Source::Enumerate(n) = source else {
            return Err(DispatchError::Mismatch(format!("{identity} needs a size (--size N)")));
        };
        return Ok(Verdict::Count { family: family.to_string(), size: *n, count: count(*n)? });
    }
    let (_, family, check) = IDENTITIES
        .iter()
        .find(|(n, _, _)| *n == identity)
        .ok_or_else(|| DispatchError::Unknown(format!("identity {identity}")))?;
    let all = instances(family, source)?;
    let results: Vec<Check> = all.par_iter().map(check).collect();
    Ok(match results.into_iter().enumerate().find_map(|(i, r)| r.err().map(|w| (i, w))) {
        Some((i, witness)) => Verdict::Fail { instances: i + 1, witness },
        None => Verdict::Pass { instances: all.len() },
    })
}

fn presentation_text(name: &str, p: &Presentation) -> String {
    let mut gens = p.generators.clone();
    gens.sort();
    let mut out = format!("system: {name}\ngenerators: {}\n", gens.join(", "));
    if p.relations.is_empty() {
        out.push_str("relations: none\n");
    } else {
        out.push_str("relations:\n");
        for r in &p.relations {
            out.push_str(&format!("  {}\n", p.render_relation(r)));
        }
    }
    out
}

/// Generators and relations of the Grothendieck monoid of a named system.
pub fn grothendieck(system: &str, palette: &[&str]) -> Result<String, DispatchError> {
    let run = |p: Result<Presentation, crate::minors::MinorsError>| {
        p.map(|p| presentation_text(system, &p)).map_err(|e| DispatchError::Unsupported(e.to_string()))
    };
    let builtin = |monoid: &str| Ok(format!("system: {system}\nenumeration unsupported; built-in monoid {monoid}\n"));
    match system {
        "set" => run(grothendieck_relations(&crate::minors::set_system::SetSystem)),
        "mat" | "matroid" => run(grothendieck_relations(&MatroidSystem)),
        "graph" => run(grothendieck_relations(&GraphSystem)),
        "delta" => run(grothendieck_relations(&DeltaSystem)),
        "perspective" | "matper" => run(grothendieck_relations(&PerspectiveSystem)),
        "dmp" => run(grothendieck_relations(&DmpSystem)),
        "colored" => {
            let pal: Vec<&str> = if palette.is_empty() { vec!["blue", "red"] } else { palette.to_vec() };
            run(grothendieck_relations(&ColoredSystem::new(&pal)))
        }
        "sf" | "submodular" => builtin("x^ℕ y^ℤ (restricted image)"),
        "arith" | "arithmetic" => builtin("Q>0 × u^ℕ v^ℕ (image of [c_a] ↦ a·u, [l_a] ↦ v/a)"),
        "relative" => builtin("u^ℕ v^ℕ w^ℕ over the connected-matroid ring R₀"),
        _ => Err(DispatchError::Unknown(format!("system {system}"))),
    }
}

/// Every structure of `family` on exactly `n` elements (isomorphism classes when `classes`).
pub fn enumerate(family: &str, n: usize, classes: bool) -> Result<Vec<Value>, DispatchError> {
    let out: Vec<Value> = match (family, classes) {
        ("matroid", false) => all_matroids(capped(n, 5)?).iter().map(RankTable::to_json).collect(),
        ("matroid", true) => canonical_classes(capped(n, 5)?).iter().map(RankTable::to_json).collect(),
        ("delta", false) => FeasibleFamily::all(capped(n, 4)?).iter().map(FeasibleFamily::to_json).collect(),
        ("delta", true) => FeasibleFamily::classes(capped(n, 4)?).iter().map(FeasibleFamily::to_json).collect(),
        ("perspective", false) => Perspective::all(capped(n, 4)?).iter().map(Perspective::to_json).collect(),
        ("dmp", false) => DMPerspective::all(capped(n, 3)?).iter().map(DMPerspective::to_json).collect(),
        ("graph", false) => {
            EdgeGraph::all_with_edges(capped(n, 3)?, ENUM_VERTEX_CAP).iter().map(EdgeGraph::to_json).collect()
        }
        ("colored", false) => ColoredSystem::new(&["blue", "red"]).all(capped(n, 3)?).iter().map(|c| c.to_json()).collect(),
        _ => return Err(DispatchError::Unsupported(format!("enumeration of {family} (classes: {classes})"))),
    };
    Ok(out)
}

/// Product of two arithmetic inputs, for the command line.
pub fn arith_product(a: &Structure, b: &Structure) -> Result<Structure, DispatchError> {
    match (a, b) {
        (Structure::Arithmetic(x) | Structure::Presentation(_, x), Structure::Arithmetic(y) | Structure::Presentation(_, y)) => {
            biarith_product(x, y).map(Structure::Arithmetic).map_err(|e| DispatchError::Mismatch(e.to_string()))
        }
        _ => Err(DispatchError::Mismatch("products need two arithmetic inputs".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn parse(v: Value) -> Structure {
        Structure::from_json(&v).unwrap()
    }

    #[test]
    fn compute_examples() {
        let u12 = parse(json!({"type": "matroid", "n": 2, "rank": [0, 1, 1, 1]}));
        assert_eq!(compute(&u12, "tutte", &[]).unwrap().text, "1*x^1 + 1*y^1");
        let edge = parse(json!({"type": "graph", "vertices": 2, "edges": [[0, 1]]}));
        assert_eq!(compute(&edge, "dichromatic", &[]).unwrap().text, "1*a^2 + 1*a^1");
        let col = parse(json!({"type": "arithmetic_presentation", "free_rank": 1, "torsion": [], "columns": [[2]]}));
        assert_eq!(compute(&col, "arith-tutte-full", &[]).unwrap().text, "1*x^1 + 1");
        assert_eq!(compute(&col, "arith-tutte-local-3", &[]).unwrap().text, "1*x^1");
        assert!(compute(&col, "arith-tutte-local-4", &[]).is_err());
        assert!(matches!(compute(&u12, "krushkal", &[]), Err(DispatchError::Mismatch(_))));
    }

    #[test]
    fn substitution() {
        let u12 = parse(json!({"type": "matroid", "n": 2, "rank": [0, 1, 1, 1]}));
        let vars = parse_vars("x=1/2").unwrap();
        assert_eq!(compute(&u12, "tutte", &vars).unwrap().text, "1*y^1 + 1/2");
        let vars = parse_vars("x=2,y=3").unwrap();
        assert_eq!(compute(&u12, "tutte", &vars).unwrap().text, "5");
        assert!(matches!(compute(&u12, "tutte", &parse_vars("z=1").unwrap()), Err(DispatchError::Substitution(_))));
        assert!(parse_vars("x=abc").is_err());
        let d = parse(json!({"type": "delta", "n": 1, "feasible": [[], [0]]}));
        assert!(compute(&d, "universal", &parse_vars("w=1").unwrap()).is_err());
        let rel = parse(json!({"type": "relative", "matroid": {"n": 2, "rank": [0, 1, 1, 1]}, "zero_set": [1]}));
        let out = compute(&rel, "relative-tutte", &[]).unwrap();
        assert_eq!(out.text, "1*C1^1*z^1 + 1*C0^1");
        assert_eq!(out.to_json()["legend"][0]["axis"], "C0");
    }

    #[test]
    fn verification_and_counts() {
        assert_eq!(verify("krs", &Source::Enumerate(3)).unwrap(), Verdict::Pass { instances: 1 + 2 + 5 + 16 });
        let count = |id: &str, n| match verify(id, &Source::Enumerate(n)).unwrap() {
            Verdict::Count { count, .. } => count,
            v => panic!("{v:?}"),
        };
        assert_eq!(count("delta-count", 2), 15);
        assert_eq!(count("dmp-count", 2), 38);
        assert_eq!(count("matroid-classes", 4), 17);
        let v = verify("extremal-minor", &Source::Enumerate(2)).unwrap();
        assert!(!v.passed());
        assert!(v.report().starts_with("FAIL"));
        let random = Source::Random { size: 3, count: 10, seed: 1 };
        assert!(verify("backman-lenz", &random).unwrap().passed());
        assert!(verify("sf-homogeneous", &random).unwrap().passed());
        assert!(verify("nonsense", &random).is_err());
        assert!(verify("discrepancy", &Source::Enumerate(9)).is_err());
    }

    #[test]
    fn grothendieck_listings() {
        assert_eq!(grothendieck("mat", &[]).unwrap(), "system: mat\ngenerators: c, l\nrelations: none\n");
        assert!(grothendieck("delta", &[]).unwrap().contains("l·c = n·n"));
        assert!(grothendieck("sf", &[]).unwrap().contains("enumeration unsupported; built-in monoid x^ℕ y^ℤ"));
        assert!(grothendieck("bogus", &[]).is_err());
    }
}
