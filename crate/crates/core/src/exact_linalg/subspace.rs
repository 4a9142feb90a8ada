use super::{Field, FieldMatrix, LinalgError, Scalar};

/// A linear subspace of `F^n`, stored as a reduced row-echelon basis with
/// strictly increasing pivot columns. Two equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: FieldMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: FieldMatrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    /// Span of arbitrary vectors; reduces to a canonical basis.
    pub fn from_vectors(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length must equal ambient dimension"
        );
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = FieldMatrix::from_rows(field, vectors).expect("rectangular");
        let (r, pivots) = m.rref();
        let rows: Vec<Vec<Scalar>> = r
            .row_vecs()
            .into_iter()
            .take(pivots.len())
            .collect();
        let basis = FieldMatrix::from_rows(field, rows)
            .unwrap_or_else(|_| FieldMatrix::zero(field, 0, ambient));
        let basis = if pivots.is_empty() {
            FieldMatrix::zero(field, 0, ambient)
        } else {
            basis
        };
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn whole(field: Field, ambient: usize) -> Self {
        Self::from_vectors(
            field,
            ambient,
            FieldMatrix::identity(field, ambient).row_vecs(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                left: format!("ambient {}", self.ambient),
                right: format!("vector of length {}", v.len()),
                context: "Subspace::contains_vector",
            });
        }
        let f = self.field;
        let mut residue = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if f.is_zero(&residue[pc]) {
                continue;
            }
            let factor = residue[pc].clone();
            for j in 0..self.ambient {
                let delta = f.mul(&factor, self.basis.at(row, j));
                residue[j] = f.sub(&residue[j], &delta);
            }
        }
        Ok(residue.iter().all(|x| f.is_zero(x)))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        for v in other.basis_vectors() {
            if !self.contains_vector(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sum of subspaces (span of the union of bases).
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other, "Subspace::sum")?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Ok(Subspace::from_vectors(self.field, self.ambient, vectors))
    }

    /// Intersection, computed from the kernel of the stacked constraint
    /// system: a vector lies in both spans iff its coefficient vectors
    /// against the two bases solve `B1^T a = B2^T b`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other, "Subspace::intersect")?;
        let f = self.field;
        let (d1, d2) = (self.dim(), other.dim());
        if d1 == 0 || d2 == 0 {
            return Ok(Subspace::zero(f, self.ambient));
        }
        // Columns: a-coefficients then b-coefficients; rows: ambient coords.
        let mut stacked = FieldMatrix::zero(f, self.ambient, d1 + d2);
        for (col, v) in self.basis_vectors().iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                stacked.set(i, col, x.clone());
            }
        }
        for (col, v) in other.basis_vectors().iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                stacked.set(i, d1 + col, f.neg(x));
            }
        }
        let kernel = stacked.kernel_basis();
        let mut vectors = Vec::new();
        for coeffs in kernel.basis_vectors() {
            let mut v = vec![f.zero(); self.ambient];
            for (row, basis_vec) in self.basis_vectors().iter().enumerate() {
                if f.is_zero(&coeffs[row]) {
                    continue;
                }
                for j in 0..self.ambient {
                    let delta = f.mul(&coeffs[row], &basis_vec[j]);
                    v[j] = f.add(&v[j], &delta);
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::from_vectors(f, self.ambient, vectors))
    }

    fn check_compatible(
        &self,
        other: &Subspace,
        context: &'static str,
    ) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                left: format!("ambient {}", self.ambient),
                right: format!("ambient {}", other.ambient),
                context,
            });
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coord(field: Field, ambient: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![field.zero(); ambient];
        v[i] = field.one();
        v
    }

    #[test]
    fn intersect_coordinate_planes() {
        let f = Field::Rationals;
        let s1 = Subspace::from_vectors(f, 3, vec![coord(f, 3, 0), coord(f, 3, 1)]);
        let s2 = Subspace::from_vectors(f, 3, vec![coord(f, 3, 1), coord(f, 3, 2)]);
        let meet = s1.intersect(&s2).unwrap();
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains_vector(&coord(f, 3, 1)).unwrap());
        // Grassmann: dim(s1 ∩ s2) = dim s1 + dim s2 - dim(s1 + s2)
        let sum = s1.sum(&s2).unwrap();
        assert_eq!(meet.dim(), s1.dim() + s2.dim() - sum.dim());
    }

    #[test]
    fn intersect_commutative_and_contained() {
        let f = Field::Rationals;
        let s1 = Subspace::from_vectors(
            f,
            4,
            vec![
                vec![f.from_i64(1), f.from_i64(2), f.from_i64(0), f.from_i64(1)],
                vec![f.from_i64(0), f.from_i64(1), f.from_i64(1), f.from_i64(0)],
            ],
        );
        let s2 = Subspace::from_vectors(
            f,
            4,
            vec![
                vec![f.from_i64(1), f.from_i64(3), f.from_i64(1), f.from_i64(1)],
                vec![f.from_i64(0), f.from_i64(0), f.from_i64(1), f.from_i64(2)],
            ],
        );
        let a = s1.intersect(&s2).unwrap();
        let b = s2.intersect(&s1).unwrap();
        assert_eq!(a, b);
        assert!(s1.contains(&a).unwrap());
        assert!(s2.contains(&a).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_error() {
        let f = Field::Rationals;
        let s1 = Subspace::zero(f, 2);
        let s2 = Subspace::zero(f, 3);
        assert!(s1.intersect(&s2).is_err());
    }
}
