use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact coefficient ring for [`crate::algebra::MRPoly`].
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Whether every nonzero element is invertible.
    const IS_FIELD: bool;
    const MODE: &'static str;

    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn is_one_elem(&self) -> bool;
    fn add_assign_ref(&mut self, o: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Inverse when this is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    /// Sign used by the renderer to print " - c" instead of " + -c".
    fn sign_negative(&self) -> bool;
    /// Rational embedding, when the ring contains one.
    fn from_ratio(_v: &BigRational) -> Option<Self> {
        None
    }
}

impl Coeff for BigInt {
    const IS_FIELD: bool = false;
    const MODE: &'static str = "integer";

    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        if One::is_one(self) || One::is_one(&-self) {
            Some(self.clone())
        } else {
            None
        }
    }
    fn sign_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_ratio(v: &BigRational) -> Option<Self> {
        v.is_integer().then(|| v.to_integer())
    }
}

impl Coeff for BigRational {
    const IS_FIELD: bool = true;
    const MODE: &'static str = "rational";

    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn sign_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn from_ratio(v: &BigRational) -> Option<Self> {
        Some(v.clone())
    }
}

/// Gaussian integer `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: i64, im: i64) -> Self {
        Gaussian { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        Gaussian::new(0, 1)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Gaussian::new(1, 0),
            1 => Gaussian::new(0, 1),
            2 => Gaussian::new(-1, 0),
            _ => Gaussian::new(0, -1),
        }
    }
}

impl From<BigInt> for Gaussian {
    fn from(re: BigInt) -> Self {
        Gaussian { re, im: Zero::zero() }
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return write!(f, "{}", self.re);
        }
        let imag = if One::is_one(&self.im) {
            "i".to_string()
        } else if One::is_one(&-&self.im) {
            "-i".to_string()
        } else {
            format!("{}i", self.im)
        };
        if Zero::is_zero(&self.re) {
            write!(f, "{imag}")
        } else if Signed::is_positive(&self.im) {
            write!(f, "({}+{})", self.re, imag)
        } else {
            write!(f, "({}{})", self.re, imag)
        }
    }
}

impl Coeff for Gaussian {
    const IS_FIELD: bool = false;
    const MODE: &'static str = "gaussian";

    fn zero_elem() -> Self {
        Gaussian::default()
    }
    fn one_elem() -> Self {
        Gaussian::new(1, 0)
    }
    fn from_i64(v: i64) -> Self {
        Gaussian::new(v, 0)
    }
    fn from_bigint(v: &BigInt) -> Self {
        Gaussian::from(v.clone())
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(&self.re) && Zero::is_zero(&self.im)
    }
    fn add_assign_ref(&mut self, o: &Self) {
        self.re += &o.re;
        self.im += &o.im;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg_ref(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }
    fn unit_inverse(&self) -> Option<Self> {
        // Units are ±1, ±i; their inverse is the conjugate.
        let norm = &self.re * &self.re + &self.im * &self.im;
        One::is_one(&norm).then(|| Gaussian { re: self.re.clone(), im: -&self.im })
    }
    fn sign_negative(&self) -> bool {
        (Zero::is_zero(&self.im) && Signed::is_negative(&self.re))
            || (Zero::is_zero(&self.re) && Signed::is_negative(&self.im))
    }
    fn from_ratio(v: &BigRational) -> Option<Self> {
        v.is_integer().then(|| Gaussian::from(v.to_integer()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_i_squared_is_minus_one() {
        let i = Gaussian::i();
        assert_eq!(i.mul_ref(&i), Gaussian::new(-1, 0));
        assert_eq!(Gaussian::i_pow(3), Gaussian::new(0, -1));
        assert_eq!(Gaussian::i_pow(-1), Gaussian::new(0, -1));
    }

    #[test]
    fn unit_inverses() {
        assert_eq!(Gaussian::i().unit_inverse(), Some(Gaussian::new(0, -1)));
        assert_eq!(Gaussian::new(1, 1).unit_inverse(), None);
        assert_eq!(Coeff::unit_inverse(&BigInt::from(-1)), Some(BigInt::from(-1)));
        assert_eq!(Coeff::unit_inverse(&BigInt::from(2)), None);
    }

    #[test]
    fn gaussian_display() {
        assert_eq!(Gaussian::new(1, -2).to_string(), "(1-2i)");
        assert_eq!(Gaussian::new(0, -1).to_string(), "-i");
        assert_eq!(Gaussian::new(3, 0).to_string(), "3");
    }
}
