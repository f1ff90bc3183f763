use crate::{Error, Result};

/// One of the small fields GF(2), GF(3), GF(4).
///
/// Elements are `u8` values in `0..q`. For GF(4) the value `a + 2b` stands
/// for `a + bω` with `ω² = ω + 1`, so addition is XOR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Gf2,
    Gf3,
    Gf4,
}

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Field {
    pub fn new(q: usize) -> Result<Field> {
        match q {
            2 => Ok(Field::Gf2),
            3 => Ok(Field::Gf3),
            4 => Ok(Field::Gf4),
            _ => Err(Error::Range(format!("unsupported field size {q}"))),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Field::Gf2 => 2,
            Field::Gf3 => 3,
            Field::Gf4 => 4,
        }
    }

    pub fn characteristic(self) -> u8 {
        match self {
            Field::Gf3 => 3,
            _ => 2,
        }
    }

    pub fn elements(self) -> std::ops::Range<u8> {
        0..self.order() as u8
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            Field::Gf3 => (a + b) % 3,
            _ => a ^ b,
        }
    }

    pub fn neg(self, a: u8) -> u8 {
        match self {
            Field::Gf3 => (3 - a) % 3,
            _ => a,
        }
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        match self {
            Field::Gf2 => a & b,
            Field::Gf3 => (a * b) % 3,
            Field::Gf4 => GF4_MUL[a as usize][b as usize],
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u8) -> Option<u8> {
        if a == 0 {
            return None;
        }
        self.elements().find(|&b| self.mul(a, b) == 1)
    }

    /// The involutory automorphism `x ↦ x²` of GF(4); identity otherwise.
    pub fn conj(self, a: u8) -> u8 {
        match self {
            Field::Gf4 => self.mul(a, a),
            _ => a,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIELDS: [Field; 3] = [Field::Gf2, Field::Gf3, Field::Gf4];

    #[test]
    fn axioms_exhaustive() {
        for f in FIELDS {
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert!(f.add(a, b) < f.order() as u8);
                    assert!(f.mul(a, b) < f.order() as u8);
                    if a != 0 && b != 0 {
                        assert_ne!(f.mul(a, b), 0, "no zero divisors");
                    }
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_frobenius() {
        let f = Field::Gf4;
        assert_eq!(f.mul(2, 2), 3, "ω² = ω + 1");
        for a in f.elements() {
            assert_eq!(f.conj(f.conj(a)), a);
            for b in f.elements() {
                assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
            }
        }
        let fixed: Vec<u8> = f.elements().filter(|&a| f.conj(a) == a).collect();
        assert_eq!(fixed, vec![0, 1]);
    }

    #[test]
    fn unsupported() {
        assert!(Field::new(5).is_err());
        assert_eq!(Field::new(4).unwrap().characteristic(), 2);
    }
}
