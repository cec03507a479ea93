//! Unsigned machine integers usable as moduli and residues.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// An unsigned machine integer with an exact double-width companion.
///
/// Every product of two residues is formed in `Wide` and reduced there, so
/// no modular operation in this crate ever observes a wrapped product.
pub trait UInt:
    PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static
{
    /// Integer type holding any product of two `Self` values exactly.
    type Wide: PrimInt + Unsigned + Hash + Debug + Display + Default + Send + Sync + 'static;

    fn widen(self) -> Self::Wide;

    /// Truncating conversion back from `Wide`; callers reduce first.
    fn narrow(wide: Self::Wide) -> Self;

    /// Lossless view as `u128`, used for error payloads and signed reduction.
    fn to_u128_lossless(self) -> u128;

    /// Narrowing from `u128`, `None` if the value does not fit.
    fn try_from_u128(value: u128) -> Option<Self>;
}

macro_rules! impl_uint {
    ($($narrow:ty => $wide:ty),* $(,)?) => {$(
        impl UInt for $narrow {
            type Wide = $wide;

            #[inline]
            fn widen(self) -> $wide {
                self as $wide
            }

            #[inline]
            fn narrow(wide: $wide) -> Self {
                wide as $narrow
            }

            #[inline]
            fn to_u128_lossless(self) -> u128 {
                self as u128
            }

            #[inline]
            fn try_from_u128(value: u128) -> Option<Self> {
                <$narrow>::try_from(value).ok()
            }
        }
    )*};
}

impl_uint!(u8 => u16, u16 => u32, u32 => u64, u64 => u128);

/// Converts a small constant into `T`. Panics only if `value` does not fit,
/// which never happens for the constants used in this crate.
#[inline]
pub(crate) fn lit<T: UInt>(value: u8) -> T {
    T::from(value).expect("small literal fits every width")
}

#[inline]
pub(crate) fn to_usize<T: UInt>(value: T) -> usize {
    value.to_usize().expect("value fits in usize")
}

#[inline]
pub(crate) fn from_usize<T: UInt>(value: usize) -> T {
    T::from(value).expect("value fits the integer width")
}
