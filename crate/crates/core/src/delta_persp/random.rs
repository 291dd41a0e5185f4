use rand::Rng;

use crate::matroid::{principal_extension, random_matroid, RankTable};
use crate::minors::full_set;

use super::{perspective_to_delta, DMPerspective, FeasibleFamily, Perspective};

/// Elementary quotient `(M +_F p) / p` for a random flat generator `F`.
pub fn random_quotient<R: Rng>(rng: &mut R, m: &RankTable) -> RankTable {
    let n = m.size();
    let f = rng.gen_range(0..=m.full());
    principal_extension(m, f).contract(1 << n)
}

fn quotient_steps<R: Rng>(rng: &mut R, m: &RankTable) -> RankTable {
    let mut q = m.clone();
    for _ in 0..rng.gen_range(0..3) {
        q = random_quotient(rng, &q);
    }
    q
}

/// Random perspective: a random matroid and a chain of elementary quotients of it.
pub fn random_perspective<R: Rng>(rng: &mut R, n: usize) -> Perspective {
    let m = random_matroid(rng, n);
    let q = quotient_steps(rng, &m);
    Perspective::new(m, q).expect("quotients form perspectives")
}

/// Random delta-matroid: a twisted matroid, or a twisted `D(M, M')`.
pub fn random_delta<R: Rng>(rng: &mut R, n: usize) -> FeasibleFamily {
    let base = if rng.gen_bool(0.5) {
        FeasibleFamily::from_matroid(&random_matroid(rng, n))
    } else {
        perspective_to_delta(&random_perspective(rng, n))
    };
    let t = rng.gen_range(0..=full_set(n));
    base.twist(if rng.gen_bool(0.3) { 0 } else { t })
}

/// Random delta-matroid perspective: a random delta-matroid with a lift of its upper
/// matroid and a quotient of its lower matroid.
pub fn random_dmp<R: Rng>(rng: &mut R, n: usize) -> DMPerspective {
    let d = random_delta(rng, n);
    let mp = quotient_steps(rng, &d.lower());
    let m = quotient_steps(rng, &d.upper().dual()).dual();
    DMPerspective::new(m, d, mp).expect("lifts and quotients keep the perspective conditions")
}
