use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{AlgebraError, Coeff, MRPoly, Sig};

use super::{minor, MinorsSystem, Subset};

/// `exp_*(ν)(X) = (1/n!) Σ_σ ∏_i ν(X_i^σ)`, where `X_i^σ` keeps σ(1..i) and contracts
/// σ(1..i−1). Requires a field of coefficients.
pub fn exp_star<S: MinorsSystem, C: Coeff>(
    sys: &S,
    x: &S::Obj,
    sig: &Sig,
    nu: &dyn Fn(&S::Obj) -> MRPoly<C>,
) -> Result<MRPoly<C>, AlgebraError> {
    if !C::IS_FIELD {
        return Err(AlgebraError::Mode(format!("exp_* needs rational coefficients, got {}", C::MODE)));
    }
    let n = sys.ground_size(x);
    let mut order: Vec<usize> = (0..n).collect();
    let mut acc = MRPoly::zero(sig);
    let mut factorial = BigInt::from(1);
    for k in 2..=n {
        factorial *= k;
    }
    permute(&mut order, 0, &mut |perm| {
        let mut term = MRPoly::one(sig);
        let mut prev: Subset = 0;
        for &e in perm {
            let cur = prev | (1 << e);
            term = &term * &nu(&minor(sys, x, cur, prev));
            prev = cur;
        }
        acc.add_assign(&term);
    });
    let scale = C::from_ratio(&BigRational::new(BigInt::from(1), factorial))
        .ok_or_else(|| AlgebraError::Mode("coefficient ring lacks 1/n!".into()))?;
    Ok(acc.scale(&scale))
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}
