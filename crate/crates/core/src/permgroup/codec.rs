use crate::{Error, Result};

/// Hard ceiling on the number of points of any product construction.
pub const MAX_PRODUCT_DEGREE: usize = 1 << 22;

/// Mixed-radix bijection between tuples and `0..product`, coordinate 0 most
/// significant. Every product construction in the crate indexes its points
/// through this codec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedRadix {
    radices: Vec<usize>,
    size: usize,
}

impl MixedRadix {
    pub fn new(radices: Vec<usize>) -> Result<Self> {
        let mut size = 1usize;
        for &r in &radices {
            if r == 0 {
                return Err(Error::Range("zero radix".into()));
            }
            size = size
                .checked_mul(r)
                .filter(|&s| s <= MAX_PRODUCT_DEGREE)
                .ok_or_else(|| Error::Overflow(format!("product of radices {radices:?}")))?;
        }
        Ok(MixedRadix { radices, size })
    }

    /// `arity` copies of the same radix.
    pub fn uniform(radix: usize, arity: usize) -> Result<Self> {
        Self::new(vec![radix; arity])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn arity(&self) -> usize {
        self.radices.len()
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.radices.len());
        tuple
            .iter()
            .zip(&self.radices)
            .fold(0, |acc, (&x, &r)| {
                debug_assert!(x < r);
                acc * r + x
            })
    }

    pub fn decode(&self, index: usize) -> Vec<usize> {
        let mut out = vec![0; self.radices.len()];
        self.decode_into(index, &mut out);
        out
    }

    pub fn decode_into(&self, mut index: usize, out: &mut [usize]) {
        for (slot, &r) in out.iter_mut().zip(&self.radices).rev() {
            *slot = index % r;
            index /= r;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn first_coordinate_most_significant() {
        let c = MixedRadix::new(vec![3, 4]).unwrap();
        assert_eq!(c.size(), 12);
        assert_eq!(c.encode(&[1, 0]), 4);
        assert_eq!(c.encode(&[0, 3]), 3);
        assert_eq!(c.decode(11), vec![2, 3]);
    }

    #[test]
    fn overflow_rejected() {
        assert!(MixedRadix::uniform(1 << 12, 4).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(radices in prop::collection::vec(1usize..6, 1..5), seed in any::<u64>()) {
            let c = MixedRadix::new(radices).unwrap();
            let idx = (seed as usize) % c.size();
            let t = c.decode(idx);
            prop_assert_eq!(c.encode(&t), idx);
        }
    }
}
