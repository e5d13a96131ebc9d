use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Arithmetic used by the simplex and branch-and-bound code. The default
/// instantiation is exact `BigRational`; `f64` is the documented fallback
/// for instances above the exact-arithmetic cell limit.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    const EXACT: bool;

    fn from_f64(v: f64) -> Option<Self>;
    fn to_f64(&self) -> f64;
    /// Zero test used for pivot eligibility and optimality.
    fn eps_zero(&self) -> bool;
    fn floor_int(&self) -> Self;
    fn ceil_int(&self) -> Self;
    /// Integrality test; `tol` only matters for the float fallback.
    fn is_integral(&self, tol: f64) -> bool;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_f64(v: f64) -> Option<Self> {
        BigRational::from_float(v)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn eps_zero(&self) -> bool {
        self.is_zero()
    }

    fn floor_int(&self) -> Self {
        self.floor()
    }

    fn ceil_int(&self) -> Self {
        self.ceil()
    }

    fn is_integral(&self, _tol: f64) -> bool {
        self.is_integer()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_f64(v: f64) -> Option<Self> {
        v.is_finite().then_some(v)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn eps_zero(&self) -> bool {
        self.abs() < 1e-9
    }

    fn floor_int(&self) -> Self {
        self.floor()
    }

    fn ceil_int(&self) -> Self {
        self.ceil()
    }

    fn is_integral(&self, tol: f64) -> bool {
        (self - self.round()).abs() <= tol
    }
}
