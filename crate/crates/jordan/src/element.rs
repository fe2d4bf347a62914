use std::sync::Arc;

use exactalg::linalg::Mat;
use exactalg::Q;

use crate::algebra::Algebra;
use crate::error::JordanError;
use crate::scalar::Scalar;

/// Coordinate vector tied to its algebra.
#[derive(Clone, Debug)]
pub struct JordanElement<T: Scalar = Q> {
    alg: Arc<Algebra>,
    coords: Vec<T>,
}

impl<T: Scalar> JordanElement<T> {
    pub fn new(alg: &Arc<Algebra>, coords: Vec<T>) -> Result<Self, JordanError> {
        alg.check_len(coords.len())?;
        Ok(JordanElement {
            alg: alg.clone(),
            coords,
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    fn same(&self, o: &Self) -> Result<(), JordanError> {
        if Arc::ptr_eq(&self.alg, &o.alg) || self.alg.kind() == o.alg.kind() {
            Ok(())
        } else {
            Err(JordanError::AlgebraMismatch)
        }
    }

    pub fn jordan_mul(&self, o: &Self) -> Result<Self, JordanError> {
        self.same(o)?;
        Ok(JordanElement {
            alg: self.alg.clone(),
            coords: self.alg.mul(&self.coords, &o.coords),
        })
    }

    pub fn quad_apply(&self, y: &Self) -> Result<Self, JordanError> {
        self.same(y)?;
        Ok(JordanElement {
            alg: self.alg.clone(),
            coords: self.alg.quad_apply(&self.coords, &y.coords),
        })
    }

    pub fn trace(&self) -> T {
        self.alg.trace(&self.coords)
    }
}

impl JordanElement<Q> {
    pub fn unit(alg: &Arc<Algebra>) -> Self {
        JordanElement {
            alg: alg.clone(),
            coords: alg.unit(),
        }
    }

    pub fn det(&self) -> Q {
        self.alg.det_q(&self.coords)
    }

    pub fn quad_rep(&self) -> Mat {
        self.alg.quad_rep(&self.coords)
    }

    pub fn generic_min_poly(&self) -> Result<Vec<Q>, JordanError> {
        self.alg.generic_min_poly(&self.coords)
    }

    pub fn inverse(&self) -> Result<Self, JordanError> {
        Ok(JordanElement {
            alg: self.alg.clone(),
            coords: self.alg.inverse(&self.coords)?,
        })
    }

    pub fn signature_class(&self) -> Result<usize, JordanError> {
        self.alg.signature_class(&self.coords)
    }
}

impl<T: Scalar> PartialEq for JordanElement<T> {
    fn eq(&self, o: &Self) -> bool {
        self.alg.kind() == o.alg.kind() && self.coords == o.coords
    }
}
