//! Scalar abstraction for the exact linear algebra layer.
//!
//! The elimination code is generic over the coefficient field: plain
//! rationals for parameter-free work (minimal polynomials, specialization
//! checks) and the full [`Scalar`] field for parametric work. Floating
//! point is deliberately not an instance; everything downstream relies on
//! exact zero tests.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{AssumptionSet, Rational, Scalar};

pub use crate::scalar::NonzeroStatus;

/// Allocation-free first look at an entry during pivot scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuickStatus {
    Zero,
    Nonzero,
    /// Parameter-dependent: needs the full (assumption-aware) test.
    Unknown,
}

/// Exact field with a three-valued nonzero test for pivot selection.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(value: Rational) -> Self;

    fn try_inv(&self) -> Option<Self>;

    /// Cheap classification used to find unconditional pivots without
    /// touching parameter machinery.
    fn quick_status(&self) -> QuickStatus;

    /// Whether the value is invertible for every admissible parameter value.
    /// Fields without parameters ignore the assumption set.
    fn nonzero_status(&self, assumptions: &AssumptionSet) -> NonzeroStatus;

    /// Optional specialized elimination. A field may recognize matrices it
    /// can reduce faster than generic over-the-field elimination (the
    /// scalar field routes polynomial matrices through fraction-free
    /// elimination); returning `None` selects the generic path. The
    /// reduced form is canonical either way.
    fn rref_special(
        matrix: &mut crate::linalg::Matrix<Self>,
        assumptions: &AssumptionSet,
    ) -> Option<crate::linalg::RankCertificate>
    where
        Self: Sized,
    {
        let _ = (matrix, assumptions);
        None
    }
}

impl Field for Rational {
    fn from_rational(value: Rational) -> Self {
        value
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn quick_status(&self) -> QuickStatus {
        if self.is_zero() {
            QuickStatus::Zero
        } else {
            QuickStatus::Nonzero
        }
    }

    fn rref_special(
        matrix: &mut crate::linalg::Matrix<Self>,
        assumptions: &AssumptionSet,
    ) -> Option<crate::linalg::RankCertificate> {
        crate::linalg::fraction_free_rref_rational(matrix, assumptions)
    }

    fn nonzero_status(&self, _assumptions: &AssumptionSet) -> NonzeroStatus {
        if self.is_zero() {
            NonzeroStatus::Zero
        } else {
            NonzeroStatus::Nonzero
        }
    }
}

impl Field for Scalar {
    fn from_rational(value: Rational) -> Self {
        Scalar::Rat(value)
    }

    fn try_inv(&self) -> Option<Self> {
        Scalar::try_inv(self).ok()
    }

    fn quick_status(&self) -> QuickStatus {
        match self {
            Scalar::Rat(r) => {
                if num_traits::Zero::is_zero(r) {
                    QuickStatus::Zero
                } else {
                    QuickStatus::Nonzero
                }
            }
            Scalar::Fun(_) => QuickStatus::Unknown,
        }
    }

    fn nonzero_status(&self, assumptions: &AssumptionSet) -> NonzeroStatus {
        Scalar::nonzero_status(self, assumptions)
    }

    fn rref_special(
        matrix: &mut crate::linalg::Matrix<Self>,
        assumptions: &AssumptionSet,
    ) -> Option<crate::linalg::RankCertificate> {
        crate::linalg::fraction_free_rref(matrix, assumptions)
    }
}
