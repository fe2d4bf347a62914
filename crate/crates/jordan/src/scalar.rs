use exactalg::{MPoly, ParamPoly, Q};
use num_traits::Zero;

/// Coordinate ring of a Jordan element: rationals or polynomials.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn from_q_like(&self, c: &Q) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;
    fn is_zero_s(&self) -> bool;
}

impl Scalar for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn from_q_like(&self, c: &Q) -> Self {
        c.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, c: &Q) -> Self {
        self * c
    }
    fn is_zero_s(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Scalar for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.vars())
    }
    fn from_q_like(&self, c: &Q) -> Self {
        MPoly::constant(self.vars(), ParamPoly::from_q(c.clone()))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn scale(&self, c: &Q) -> Self {
        self.scale_q(c)
    }
    fn is_zero_s(&self) -> bool {
        MPoly::is_zero(self)
    }
}
