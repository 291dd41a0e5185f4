//! Graphs with edge ground sets. Isolated vertices survive minors, so structures on the
//! empty set are counted by their vertex number.

use std::sync::{Arc, OnceLock};

use rand::Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{poly_ring, MRPoly, Sig, Specialization, ZPoly};
use crate::matroid::{MatroidError, RankTable};
use crate::minors::{
    elements, full_set, popcount, tutte_character, CharacterSpec, Check, MinorsSystem, Norm, Subset, Witness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {0} has an endpoint outside the vertex set")]
    Endpoint(usize),
    #[error("too many edges: {0}")]
    Size(usize),
}

/// Largest vertex count used when enumerating small graphs.
pub const ENUM_VERTEX_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }
    /// Returns whether the two classes were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }
}

impl EdgeGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if edges.len() > crate::minors::MAX_GROUND {
            return Err(GraphError::Size(edges.len()));
        }
        if let Some(i) = edges.iter().position(|&(s, t)| s >= vertices || t >= vertices) {
            return Err(GraphError::Endpoint(i));
        }
        Ok(EdgeGraph { vertices, edges })
    }

    pub fn isolated(k: usize) -> Self {
        EdgeGraph { vertices: k, edges: Vec::new() }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Components of the spanning subgraph with edge set `a`.
    pub fn components(&self, a: Subset) -> usize {
        let mut d = Dsu::new(self.vertices);
        let mut k = self.vertices;
        for e in elements(a) {
            let (s, t) = self.edges[e];
            if d.union(s, t) {
                k -= 1;
            }
        }
        k
    }

    pub fn rank(&self, a: Subset) -> usize {
        self.vertices - self.components(a)
    }

    pub fn restrict(&self, a: Subset) -> Self {
        EdgeGraph { vertices: self.vertices, edges: elements(a).map(|e| self.edges[e]).collect() }
    }

    /// Merges the endpoints of every edge in `a` and drops those edges.
    pub fn contract(&self, a: Subset) -> Self {
        let mut d = Dsu::new(self.vertices);
        for e in elements(a) {
            d.union(self.edges[e].0, self.edges[e].1);
        }
        // Roots are the smallest members of their classes, so numbering roots in order
        // numbers classes by their smallest vertex.
        let mut index = vec![usize::MAX; self.vertices];
        let mut next = 0;
        for (v, slot) in index.iter_mut().enumerate() {
            if d.find(v) == v {
                *slot = next;
                next += 1;
            }
        }
        let rest = full_set(self.size()) & !a;
        let edges = elements(rest)
            .map(|e| {
                let (s, t) = self.edges[e];
                (index[d.find(s)], index[d.find(t)])
            })
            .collect();
        EdgeGraph { vertices: next, edges }
    }

    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(s, t)| (s + shift, t + shift)));
        EdgeGraph { vertices: self.vertices + other.vertices, edges }
    }

    /// The cycle matroid `rk(A) = |V| − k(A)`.
    pub fn to_matroid(&self) -> Result<RankTable, MatroidError> {
        if self.size() > 16 {
            return Err(MatroidError::Size(format!("{} edges exceeds the cap 16", self.size())));
        }
        let rk = (0..=full_set(self.size())).map(|a| self.rank(a) as u8).collect();
        RankTable::new(self.size(), rk)
    }

    /// Smallest sorted edge list over vertex relabelings; edge labels are forgotten.
    pub fn iso_key(&self) -> String {
        if self.vertices > 7 {
            return format!("V{}:{:?}", self.vertices, self.edges);
        }
        let mut perm: Vec<usize> = (0..self.vertices).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        crate::matroid::heap_permutations(&mut perm, &mut |p| {
            let mut es: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(s, t)| (p[s].min(p[t]), p[s].max(p[t])))
                .collect();
            es.sort_unstable();
            if best.as_ref().is_none_or(|b| es < *b) {
                best = Some(es);
            }
        });
        format!("V{}:{:?}", self.vertices, best.unwrap_or_default())
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(s, t)| [s, t]).collect();
        json!({"type": "graph", "vertices": self.vertices, "edges": edges})
    }

    /// Every graph with `k` edges on at most `max_vertices` vertices, labeled.
    pub fn all_with_edges(k: usize, max_vertices: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for v in 0..=max_vertices {
            let slots: Vec<(usize, usize)> = (0..v).flat_map(|s| (s..v).map(move |t| (s, t))).collect();
            if slots.is_empty() {
                if k == 0 {
                    out.push(EdgeGraph::isolated(v));
                }
                continue;
            }
            let mut idx = vec![0usize; k];
            loop {
                out.push(EdgeGraph { vertices: v, edges: idx.iter().map(|&i| slots[i]).collect() });
                let mut j = 0;
                while j < k && idx[j] == slots.len() - 1 {
                    idx[j] = 0;
                    j += 1;
                }
                if j == k {
                    break;
                }
                idx[j] += 1;
            }
        }
        out
    }

    pub fn random<R: Rng>(rng: &mut R, edges: usize) -> Self {
        let vertices = rng.gen_range(1..=edges.max(1) + 1);
        let es = (0..edges).map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices))).collect();
        EdgeGraph { vertices, edges: es }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GraphSystem;

impl MinorsSystem for GraphSystem {
    type Obj = EdgeGraph;

    fn name(&self) -> &'static str {
        "graph"
    }
    fn ground_size(&self, x: &EdgeGraph) -> usize {
        x.size()
    }
    fn restrict(&self, x: &EdgeGraph, a: Subset) -> EdgeGraph {
        x.restrict(a)
    }
    fn contract(&self, x: &EdgeGraph, a: Subset) -> EdgeGraph {
        x.contract(a)
    }
    fn sum_empty(&self, x: &EdgeGraph, y: &EdgeGraph) -> EdgeGraph {
        x.disjoint_union(y)
    }
    fn unit(&self) -> EdgeGraph {
        EdgeGraph::isolated(0)
    }
    fn direct_sum(&self, x: &EdgeGraph, y: &EdgeGraph) -> Option<EdgeGraph> {
        (x.size() + y.size() <= crate::minors::MAX_GROUND).then(|| x.disjoint_union(y))
    }
    /// Graphs with at most [`ENUM_VERTEX_CAP`] vertices; there are infinitely many
    /// classes otherwise because of isolated vertices.
    fn enumerate(&self, k: usize) -> Option<Vec<EdgeGraph>> {
        (k <= 2).then(|| EdgeGraph::all_with_edges(k, ENUM_VERTEX_CAP))
    }
    fn class_key(&self, x: &EdgeGraph) -> String {
        x.iso_key()
    }
    fn label(&self, x: &EdgeGraph) -> String {
        if x.size() == 1 {
            let kind = if x.edges[0].0 == x.edges[0].1 { "loop" } else { "bridge" };
            let extra = x.vertices - if kind == "loop" { 1 } else { 2 };
            if extra == 0 { kind.to_string() } else { format!("{kind}+{extra}") }
        } else {
            x.iso_key()
        }
    }
    fn memo_key(&self, x: &EdgeGraph) -> Option<String> {
        Some(format!("{}:{:?}", x.vertices, x.edges))
    }
    fn to_json(&self, x: &EdgeGraph) -> Value {
        x.to_json()
    }
}

/// `K[u1, v1, a, u2, v2]`.
pub fn universal_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| poly_ring(&["u1", "v1", "a", "u2", "v2"])).clone()
}

/// `K[a, b]`.
pub fn dichromatic_sig() -> Sig {
    static SIG: OnceLock<Sig> = OnceLock::new();
    SIG.get_or_init(|| poly_ring(&["a", "b"])).clone()
}

/// `G ↦ u^{rk(G)} v^{|E|−rk(G)}`.
pub fn graph_norm(sig: &Sig, u: &str, v: &str) -> Norm<EdgeGraph, num_bigint::BigInt> {
    let u = ZPoly::generator(sig, u);
    let v = ZPoly::generator(sig, v);
    Arc::new(move |g: &EdgeGraph| {
        let r = g.rank(g_full(g));
        &u.pow(r as u32) * &v.pow((g.size() - r) as u32)
    })
}

fn g_full(g: &EdgeGraph) -> Subset {
    full_set(g.size())
}

/// Twist sending `k` isolated vertices to `a^k`.
pub fn vertex_twist(sig: &Sig, a: &str) -> Norm<EdgeGraph, num_bigint::BigInt> {
    let a = ZPoly::generator(sig, a);
    Arc::new(move |g: &EdgeGraph| a.pow(g.vertices as u32))
}

pub fn universal_spec() -> CharacterSpec<EdgeGraph, num_bigint::BigInt> {
    let sig = universal_sig();
    CharacterSpec::new(&sig, graph_norm(&sig, "u1", "v1"), vertex_twist(&sig, "a"), graph_norm(&sig, "u2", "v2"))
}

/// The five-variable universal character.
pub fn universal_graph_tutte(g: &EdgeGraph) -> ZPoly {
    tutte_character(&GraphSystem, g, &universal_spec())
}

/// `Q_G(a, b) = Σ_A a^{k(A)} b^{|A|−|V|+k(A)}`, summed directly.
pub fn dichromatic(g: &EdgeGraph) -> ZPoly {
    let sig = dichromatic_sig();
    let mut out = ZPoly::zero(&sig);
    for s in 0..=g_full(g) {
        let k = g.components(s) as i64;
        let t = ZPoly::term(&sig, &[("a", k), ("b", popcount(s) as i64 - g.vertices as i64 + k)]).unwrap();
        out.add_assign(&t);
    }
    out
}

/// `Q_G` read off the universal character at `(u1, v1, a, u2, v2) = (1, b, a, 1, 1)`.
pub fn dichromatic_from_universal(t: &ZPoly) -> ZPoly {
    let sig = dichromatic_sig();
    Specialization::new(t.sig(), &sig)
        .set_i64("u1", 1)
        .and_then(|s| s.set("v1", ZPoly::generator(&sig, "b")))
        .and_then(|s| s.keep("a"))
        .and_then(|s| s.set_i64("u2", 1))
        .and_then(|s| s.set_i64("v2", 1))
        .and_then(|s| s.apply(t))
        .expect("universal graph signature")
}

/// `Q_G` by deletion-contraction on the first edge: `(b+1) Q_{G∖e}` for a loop,
/// `Q_{G/e} + Q_{G∖e}` otherwise, and `a^k` on `k` isolated vertices.
pub fn dichromatic_recursive(g: &EdgeGraph) -> ZPoly {
    let sig = dichromatic_sig();
    if g.size() == 0 {
        return ZPoly::generator(&sig, "a").pow(g.vertices as u32);
    }
    let rest = g_full(g) & !1;
    let deleted = dichromatic_recursive(&g.restrict(rest));
    if g.edges[0].0 == g.edges[0].1 {
        &(&ZPoly::generator(&sig, "b") + &ZPoly::one(&sig)) * &deleted
    } else {
        &dichromatic_recursive(&g.contract(1)) + &deleted
    }
}

/// Chromatic polynomial in `q` by deletion-contraction: zero with a loop, `q^{|V|}` when
/// edgeless, `χ_{G∖e} − χ_{G/e}` otherwise.
pub fn chromatic(g: &EdgeGraph, sig: &Sig, q: &str) -> ZPoly {
    if g.edges.iter().any(|&(s, t)| s == t) {
        return ZPoly::zero(sig);
    }
    if g.size() == 0 {
        return ZPoly::generator(sig, q).pow(g.vertices as u32);
    }
    let rest = g_full(g) & !1;
    &chromatic(&g.restrict(rest), sig, q) - &chromatic(&g.contract(1), sig, q)
}

/// `Q_G(a1 a2, b) = Σ_A Q_{G|A}(a1, b) χ_{G/A}(a2)` in `K[a1, a2, b]`.
pub fn chromatic_convolution_check(g: &EdgeGraph) -> Check {
    let sig = poly_ring(&["a1", "a2", "b"]);
    let at = |a: ZPoly| {
        Specialization::new(&dichromatic_sig(), &sig)
            .set("a", a)
            .and_then(|s| s.set("b", ZPoly::generator(&sig, "b")))
            .expect("target generators")
    };
    let a1 = ZPoly::generator(&sig, "a1");
    let a2 = ZPoly::generator(&sig, "a2");
    let lhs = at(&a1 * &a2).apply(&dichromatic(g)).expect("total");
    let low = at(a1);
    let mut rhs = ZPoly::zero(&sig);
    for s in 0..=g_full(g) {
        let q = low.apply(&dichromatic(&g.restrict(s))).expect("total");
        rhs.add_assign(&(&q * &chromatic(&g.contract(s), &sig, "a2")));
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(&GraphSystem, g, "chromatic convolution", lhs.render(), rhs.render()))
    }
}

/// The class map `G ↦ u^{rk(G)} v^{|E|−rk(G)}` into `K[u, v]`.
pub fn class_monomial(g: &EdgeGraph) -> ZPoly {
    static SIG: OnceLock<Sig> = OnceLock::new();
    let sig = SIG.get_or_init(|| poly_ring(&["u", "v"]));
    let r = g.rank(g_full(g)) as i64;
    MRPoly::term(sig, &[("u", r), ("v", g.size() as i64 - r)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{tutte, RankTable};
    use crate::minors::{delcon_evaluate, minor_axioms_check, verify_norm_candidate};

    fn edge() -> EdgeGraph {
        EdgeGraph::new(2, vec![(0, 1)]).unwrap()
    }
    fn triangle() -> EdgeGraph {
        EdgeGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn minors() {
        assert_eq!(edge().contract(1), EdgeGraph::isolated(1));
        let lp = EdgeGraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(lp.restrict(0), EdgeGraph::isolated(1));
        assert_eq!(lp.contract(1), EdgeGraph::isolated(1));
        assert_eq!(triangle().contract(0), triangle());
        assert!(minor_axioms_check(&GraphSystem, &triangle(), 0b001, 0b010).is_ok());
    }

    #[test]
    fn cycle_matroids() {
        assert_eq!(triangle().to_matroid().unwrap(), RankTable::uniform(2, 3));
        assert_eq!(EdgeGraph::new(1, vec![(0, 0)]).unwrap().to_matroid().unwrap(), RankTable::loop_());
        assert_eq!(edge().to_matroid().unwrap(), RankTable::coloop());
    }

    #[test]
    fn dichromatic_values() {
        assert_eq!(dichromatic(&edge()).render(), "1*a^2 + 1*a^1");
        assert_eq!(dichromatic(&EdgeGraph::new(1, vec![(0, 0)]).unwrap()).render(), "1*a^1*b^1 + 1*a^1");
        assert_eq!(dichromatic(&EdgeGraph::isolated(3)).render(), "1*a^3");
        for g in [edge(), triangle(), EdgeGraph::new(3, vec![(0, 1), (0, 1), (2, 2)]).unwrap()] {
            assert_eq!(dichromatic_recursive(&g), dichromatic(&g));
            let t = universal_graph_tutte(&g);
            assert_eq!(dichromatic_from_universal(&t), dichromatic(&g));
            assert_eq!(delcon_evaluate(&GraphSystem, &g, &universal_spec(), true), t);
            assert!(chromatic_convolution_check(&g).is_ok());
        }
        assert_eq!(tutte(&triangle().to_matroid().unwrap()).render(), "1*x^2 + 1*x^1 + 1*y^1");
    }

    #[test]
    fn dichromatic_sees_isolated_vertices() {
        let plus = edge().disjoint_union(&EdgeGraph::isolated(1));
        assert_eq!(plus.to_matroid().unwrap(), edge().to_matroid().unwrap());
        let a = ZPoly::generator(&dichromatic_sig(), "a");
        assert_eq!(dichromatic(&plus), &dichromatic(&edge()) * &a);
    }

    #[test]
    fn graph_norm_is_a_norm_candidate() {
        assert!(verify_norm_candidate(&GraphSystem, &class_monomial).unwrap().is_ok());
    }
}
