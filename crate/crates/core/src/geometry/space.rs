use super::Field;
use crate::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricType {
    /// Odd dimension.
    Parabolic,
    /// Maximal Witt index (hyperbolic).
    Plus,
    /// Witt index one less than maximal (elliptic).
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Quadratic(QuadricType),
    Hermitian,
}

/// A vector space `GF(q)^dim` carrying one of the standard forms.
///
/// * parabolic: `Q(x) = x_0² + x_1 x_2 + … + x_{2m−1} x_{2m}`
/// * plus type: `Q(x) = x_0 x_1 + … + x_{2m−2} x_{2m−1}`
/// * minus type: plus type on the first `2m − 2` coordinates plus an
///   irreducible binary form on the last two (`x² + xy + y²` over GF(2),
///   `x² + y²` over GF(3))
/// * hermitian over GF(4): `h(x, y) = Σ x_i y_i²`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormedSpace {
    dim: usize,
    field: Field,
    kind: FormKind,
}

/// A projective point, represented by the vector whose first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(pub Vec<u8>);

impl FormedSpace {
    pub fn new(dim: usize, field: Field, kind: FormKind) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::Range(format!("dimension {dim} outside 1..={MAX_DIM}")));
        }
        match kind {
            FormKind::Quadratic(QuadricType::Parabolic) => {
                if dim.is_multiple_of(2) {
                    return Err(Error::Range("parabolic spaces have odd dimension".into()));
                }
                if field.characteristic() == 2 {
                    // the polar form of x_0² is zero in characteristic 2
                    return Err(Error::Range("parabolic spaces need odd characteristic".into()));
                }
            }
            FormKind::Quadratic(QuadricType::Plus) if dim % 2 == 1 => {
                return Err(Error::Range("plus-type spaces have even dimension".into()));
            }
            FormKind::Quadratic(QuadricType::Minus) => {
                if dim % 2 == 1 {
                    return Err(Error::Range("minus-type spaces have even dimension".into()));
                }
                if field == Field::Gf4 {
                    return Err(Error::Range("minus-type forms are fixed only over GF(2), GF(3)".into()));
                }
            }
            FormKind::Hermitian if field != Field::Gf4 => {
                return Err(Error::Range("hermitian forms are supported over GF(4)".into()));
            }
            _ => {}
        }
        Ok(FormedSpace { dim, field, kind })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    /// Value of the quadratic form; for hermitian spaces, `h(x, x)`.
    pub fn form(&self, x: &[u8]) -> u8 {
        let f = self.field;
        let pair = |acc: u8, i: usize| f.add(acc, f.mul(x[i], x[i + 1]));
        match self.kind {
            FormKind::Hermitian => self.hermitian(x, x),
            FormKind::Quadratic(QuadricType::Parabolic) => {
                (1..self.dim).step_by(2).fold(f.mul(x[0], x[0]), pair)
            }
            FormKind::Quadratic(QuadricType::Plus) => (0..self.dim).step_by(2).fold(0, pair),
            FormKind::Quadratic(QuadricType::Minus) => {
                let head = (0..self.dim - 2).step_by(2).fold(0, pair);
                let (a, b) = (x[self.dim - 2], x[self.dim - 1]);
                let tail = match f {
                    Field::Gf3 => f.add(f.mul(a, a), f.mul(b, b)),
                    _ => f.add(f.add(f.mul(a, a), f.mul(a, b)), f.mul(b, b)),
                };
                f.add(head, tail)
            }
        }
    }

    fn hermitian(&self, x: &[u8], y: &[u8]) -> u8 {
        let f = self.field;
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, f.conj(b))))
    }

    /// `B(u, v) = Q(u + v) − Q(u) − Q(v)`, or the hermitian form itself.
    pub fn polar(&self, u: &[u8], v: &[u8]) -> u8 {
        let f = self.field;
        if self.kind == FormKind::Hermitian {
            return self.hermitian(u, v);
        }
        let sum: Vec<u8> = u.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect();
        f.sub(f.sub(self.form(&sum), self.form(u)), self.form(v))
    }

    /// All projective points in lexicographic order of their normalized
    /// representatives.
    pub fn points(&self) -> Vec<ProjectivePoint> {
        let q = self.field.order();
        let total = q.pow(self.dim as u32);
        let mut out = Vec::new();
        let mut v = vec![0u8; self.dim];
        for code in 0..total {
            let mut c = code;
            for slot in v.iter_mut().rev() {
                *slot = (c % q) as u8;
                c /= q;
            }
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                out.push(ProjectivePoint(v.clone()));
            }
        }
        out
    }

    /// Points where the form vanishes.
    pub fn singular_points(&self) -> Vec<ProjectivePoint> {
        self.points()
            .into_iter()
            .filter(|p| self.form(&p.0) == 0)
            .collect()
    }

    /// Points whose normalized representative has form value `value ≠ 0`.
    pub fn nonsingular_points(&self, value: u8) -> Vec<ProjectivePoint> {
        self.points()
            .into_iter()
            .filter(|p| self.form(&p.0) == value && value != 0)
            .collect()
    }

    /// Nondegeneracy: no nonzero singular vector lies in the radical of the
    /// polar form.
    pub fn is_nondegenerate(&self) -> bool {
        let points = self.points();
        let basis: Vec<Vec<u8>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| u8::from(i == j)).collect())
            .collect();
        !points.iter().any(|p| {
            self.form(&p.0) == 0 && basis.iter().all(|e| self.polar(&p.0, e) == 0)
        })
    }

    /// Witt index: dimension of a maximal totally singular subspace, found by
    /// greedy extension (valid for nondegenerate forms).
    pub fn witt_index(&self) -> usize {
        let singular = self.singular_points();
        let mut chosen: Vec<Vec<u8>> = Vec::new();
        for p in &singular {
            let all_orth = chosen.iter().all(|c| self.polar(c, &p.0) == 0);
            if all_orth && !self.in_span(&chosen, &p.0) {
                chosen.push(p.0.clone());
            }
        }
        chosen.len()
    }

    fn in_span(&self, vectors: &[Vec<u8>], v: &[u8]) -> bool {
        let q = self.field.order();
        let f = self.field;
        let combos = q.pow(vectors.len() as u32);
        (0..combos).any(|mut c| {
            let mut acc = vec![0u8; self.dim];
            for w in vectors {
                let coeff = (c % q) as u8;
                c /= q;
                for (a, &x) in acc.iter_mut().zip(w) {
                    *a = f.add(*a, f.mul(coeff, x));
                }
            }
            acc == v
        })
    }
}
