use std::collections::BTreeSet;

use rand::Rng;

use crate::minors::{elements, full_set, popcount, Subset};

use super::RankTable;

/// Every labeled matroid on `n` elements, by filling the rank table in bitmask order and
/// keeping only values compatible with the local rank axioms.
pub fn all_matroids(n: usize) -> Vec<RankTable> {
    assert!(n <= 5, "labeled enumeration is only feasible for tiny ground sets");
    let mut rk = vec![0u8; 1 << n];
    let mut out = Vec::new();
    fill(n, 1, &mut rk, &mut out);
    out
}

fn fill(n: usize, a: usize, rk: &mut Vec<u8>, out: &mut Vec<RankTable>) {
    if a == rk.len() {
        out.push(RankTable::new_unchecked(n, rk.clone()));
        return;
    }
    let set = a as Subset;
    let mut lo = 0u8;
    let mut hi = popcount(set) as u8;
    for e in elements(set) {
        let below = rk[a & !(1 << e)];
        lo = lo.max(below);
        hi = hi.min(below + 1);
        for f in elements(set) {
            if f > e {
                let both = a & !(1 << e) & !(1 << f);
                let cap = rk[a & !(1 << e)] as i32 + rk[a & !(1 << f)] as i32 - rk[both] as i32;
                hi = hi.min(cap.max(0) as u8);
            }
        }
    }
    for v in lo..=hi {
        rk[a] = v;
        fill(n, a + 1, rk, out);
    }
}

/// One representative per isomorphism class, ordered by canonical table.
pub fn canonical_classes(n: usize) -> Vec<RankTable> {
    let set: BTreeSet<RankTable> = all_matroids(n).iter().map(|m| m.canonical_form().expect("within cap")).collect();
    set.into_iter().collect()
}

/// Random matroid on `n` elements: repeated single-element extensions (loops, coloops and
/// principal extensions into the closure of a random set), with occasional truncation
/// and dualization.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize) -> RankTable {
    let mut m = RankTable::empty();
    for _ in 0..n {
        let roll = rng.gen_range(0..10);
        let ext = if roll == 0 {
            m.direct_sum(&RankTable::loop_()).unwrap()
        } else if roll == 1 {
            m.direct_sum(&RankTable::coloop()).unwrap()
        } else {
            let f = rng.gen_range(0..=m.full());
            principal_extension(&m, f)
        };
        m = ext;
        if rng.gen_range(0..8) == 0 && m.full_rank() > 0 {
            m = truncate(&m);
        }
    }
    if rng.gen_bool(0.5) {
        m = m.dual();
    }
    let perm = random_permutation(rng, n);
    m.permute(&perm)
}

/// Adds a new last element placed freely on the flat spanned by `f`.
pub fn principal_extension(m: &RankTable, f: Subset) -> RankTable {
    let n = m.size();
    let full = full_set(n);
    let mut rk = vec![0u8; 1 << (n + 1)];
    for a in 0..=full {
        let ra = m.rank(a);
        rk[a as usize] = ra as u8;
        let spans_f = m.rank(a | f) == ra;
        rk[(a | 1 << n) as usize] = (ra + usize::from(!spans_f)) as u8;
    }
    RankTable::new(n + 1, rk).expect("principal extensions are matroids")
}

/// Truncation to one rank lower.
pub fn truncate(m: &RankTable) -> RankTable {
    let r = m.full_rank();
    assert!(r > 0);
    let rk = m.table().iter().map(|&v| v.min((r - 1) as u8)).collect();
    RankTable::new(m.size(), rk).expect("truncations are matroids")
}

pub(crate) fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
