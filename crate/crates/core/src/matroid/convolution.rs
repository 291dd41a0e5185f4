use crate::algebra::{poly_ring, MRPoly, Sig, Specialization, ZPoly};
use crate::minors::{popcount, Check, Subset, Witness};

use super::tutte::{tutte, tutte_sig};
use super::{MatroidSystem, RankTable};

/// `𝔗` with x and y replaced by polynomials of another ring.
fn tutte_at(m: &RankTable, x: &ZPoly, y: &ZPoly) -> ZPoly {
    Specialization::new(&tutte_sig(), x.sig())
        .set("x", x.clone())
        .and_then(|s| s.set("y", y.clone()))
        .and_then(|s| s.apply(&tutte(m)))
        .expect("total assignment")
}

fn verdict(m: &RankTable, what: &str, lhs: ZPoly, rhs: ZPoly) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(&MatroidSystem, m, what, lhs.render(), rhs.render()))
    }
}

/// `𝔗_M(1−ab, 1−cd) = Σ_A a^{rk(M)−rk(A)} d^{|A|−rk(A)} 𝔗_{M|A}(1−a, 1−c) 𝔗_{M/A}(1−b, 1−d)`.
pub fn kung_check(m: &RankTable) -> Check {
    let sig = poly_ring(&["a", "b", "c", "d"]);
    let g = |n: &str| ZPoly::generator(&sig, n);
    let one = ZPoly::one(&sig);
    let (a, b, c, d) = (g("a"), g("b"), g("c"), g("d"));
    let lhs = tutte_at(m, &(&one - &(&a * &b)), &(&one - &(&c * &d)));
    let r = m.full_rank();
    let mut rhs = ZPoly::zero(&sig);
    for s in 0..=m.full() {
        let rs = m.rank(s);
        let pre = &a.pow((r - rs) as u32) * &d.pow((popcount(s) - rs) as u32);
        let low = tutte_at(&m.restrict(s), &(&one - &a), &(&one - &c));
        let high = tutte_at(&m.contract(s), &(&one - &b), &(&one - &d));
        rhs.add_assign(&(&(&pre * &low) * &high));
    }
    verdict(m, "four-variable convolution", lhs, rhs)
}

/// `𝔗_M(x, y) = Σ_A 𝔗_{M|A}(0, y) 𝔗_{M/A}(x, 0)`.
pub fn krs_check(m: &RankTable) -> Check {
    let sig = tutte_sig();
    let (x, y) = (ZPoly::generator(&sig, "x"), ZPoly::generator(&sig, "y"));
    let zero = ZPoly::zero(&sig);
    let mut rhs = ZPoly::zero(&sig);
    for s in 0..=m.full() {
        rhs.add_assign(&(&tutte_at(&m.restrict(s), &zero, &y) * &tutte_at(&m.contract(s), &x, &zero)));
    }
    verdict(m, "(0,y)/(x,0) convolution", tutte(m), rhs)
}

fn flag_ring(steps: usize) -> Sig {
    let names: Vec<String> = (1..=steps).map(|i| format!("a{i}")).chain((1..=steps).map(|i| format!("b{i}"))).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    poly_ring(&refs)
}

/// Iterated convolution over flags `∅ = A0 ⊆ … ⊆ An = E` in `K[a1..an, b1..bn]`.
pub fn iterated_check(m: &RankTable, steps: usize) -> Check {
    assert!(steps >= 1);
    let sig = flag_ring(steps);
    let one = ZPoly::one(&sig);
    let a: Vec<ZPoly> = (1..=steps).map(|i| ZPoly::generator(&sig, &format!("a{i}"))).collect();
    let b: Vec<ZPoly> = (1..=steps).map(|i| ZPoly::generator(&sig, &format!("b{i}"))).collect();
    let prod = |v: &[ZPoly]| v.iter().fold(one.clone(), |acc, p| &acc * p);
    let lhs = tutte_at(m, &(&one - &prod(&a)), &(&one - &prod(&b)));

    let n = m.size();
    let r = m.full_rank();
    let mut rhs = ZPoly::zero(&sig);
    let mut levels = vec![0usize; n];
    loop {
        let mut prev: Subset = 0;
        let mut term = one.clone();
        for i in 0..steps {
            let cur = levels.iter().enumerate().filter(|(_, &l)| l <= i).fold(0, |s, (e, _)| s | 1 << e);
            let piece = m.restrict(cur).contract(crate::minors::compress(prev, cur));
            let pre = &a[i].pow((r - m.rank(cur)) as u32) * &b[i].pow((popcount(prev) - m.rank(prev)) as u32);
            term = &(&term * &pre) * &tutte_at(&piece, &(&one - &a[i]), &(&one - &b[i]));
            prev = cur;
        }
        rhs.add_assign(&term);
        let mut k = 0;
        while k < n && levels[k] == steps - 1 {
            levels[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        levels[k] += 1;
    }
    verdict(m, &format!("{steps}-step iterated convolution"), lhs, rhs)
}

/// `𝔗_M(x², y²) = Σ_A (1−x)^{rk(M)−rk(A)} (1+y)^{|A|−rk(A)} 𝔗_{M|A}(x, y) 𝔗_{M/A}(−x, −y)`.
pub fn signflip_check(m: &RankTable) -> Check {
    let sig = tutte_sig();
    let (x, y) = (ZPoly::generator(&sig, "x"), ZPoly::generator(&sig, "y"));
    let one = ZPoly::one(&sig);
    let lhs = tutte_at(m, &(&x * &x), &(&y * &y));
    let r = m.full_rank();
    let mut rhs = ZPoly::zero(&sig);
    for s in 0..=m.full() {
        let rs = m.rank(s);
        let pre = &(&one - &x).pow((r - rs) as u32) * &(&one + &y).pow((popcount(s) - rs) as u32);
        let t = &(&pre * &tutte(&m.restrict(s))) * &tutte_at(&m.contract(s), &-&x, &-&y);
        rhs.add_assign(&t);
    }
    verdict(m, "sign-flip convolution", lhs, rhs)
}

/// `𝔗_{M∨}(x, y) = 𝔗_M(y, x)`.
pub fn duality_check(m: &RankTable) -> Check {
    let sig = tutte_sig();
    let swapped = tutte_at(m, &MRPoly::generator(&sig, "y"), &MRPoly::generator(&sig, "x"));
    verdict(m, "duality", tutte(&m.dual()), swapped)
}
