use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring with exact equality; the scalar layer under [`super::Mat2`].
pub trait Ring:
    Clone + PartialEq + std::fmt::Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + std::fmt::Debug + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
}
