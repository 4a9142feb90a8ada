use super::{Field, LinalgError, Scalar, Subspace};

/// A dense matrix over a [`Field`], row major, with exact entries.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl FieldMatrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch {
                left: format!("{c} columns"),
                right: "ragged row".to_string(),
                context: "FieldMatrix::from_rows",
            });
        }
        Ok(FieldMatrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(field: Field, rows: &[Vec<i64>]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, data).expect("rectangular literal")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    /// Matrix applied to a coordinate vector (length = cols).
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                left: format!("{} cols", self.cols),
                right: format!("vector of length {}", v.len()),
                context: "FieldMatrix::apply",
            });
        }
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = f.zero();
            for j in 0..self.cols {
                if !f.is_zero(&v[j]) && !f.is_zero(self.at(i, j)) {
                    acc = f.add(&acc, &f.mul(self.at(i, j), &v[j]));
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Reduced row-echelon form together with the pivot column indices.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(sel) = (pivot_row..m.rows).find(|&r| !f.is_zero(m.at(r, col))) else {
                continue;
            };
            for j in 0..m.cols {
                m.entries.swap(sel * m.cols + j, pivot_row * m.cols + j);
            }
            let inv = f
                .inv(m.at(pivot_row, col))
                .expect("pivot is nonzero");
            for j in col..m.cols {
                let scaled = f.mul(m.at(pivot_row, j), &inv);
                m.set(pivot_row, j, scaled);
            }
            for r in 0..m.rows {
                if r == pivot_row || f.is_zero(m.at(r, col)) {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let delta = f.mul(&factor, m.at(pivot_row, j));
                    let value = f.sub(m.at(r, j), &delta);
                    m.set(r, j, value);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Basis for the null space `{v : M v = 0}`, returned in reduced form.
    pub fn kernel_basis(&self) -> Subspace {
        let f = self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut set = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                set[col] = Some(row);
            }
            set
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (col, pr) in pivot_set.iter().enumerate() {
                if let Some(row) = pr {
                    v[col] = f.neg(r.at(*row, free));
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(f, self.cols, basis)
    }

    /// Basis for the column space, as a subspace of the target.
    pub fn image_basis(&self) -> Subspace {
        Subspace::from_vectors(
            self.field,
            self.rows,
            self.transpose().row_vecs(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_idempotent() {
        let m = FieldMatrix::from_i64_rows(
            Field::Rationals,
            &[vec![2, 4, 6], vec![1, 2, 4], vec![0, 0, 1]],
        );
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let m = FieldMatrix::identity(Field::Rationals, 3);
        assert_eq!(m.kernel_basis().dim(), 0);
    }

    #[test]
    fn kernel_over_f2_matches_enumeration() {
        let f2 = Field::prime(2).unwrap();
        let m = FieldMatrix::from_i64_rows(f2, &[vec![1, 1]]);
        let kernel = m.kernel_basis();
        // Oracle: all 4 vectors of F_2^2.
        let mut members = Vec::new();
        for a in 0..2i64 {
            for b in 0..2i64 {
                let v = vec![f2.from_i64(a), f2.from_i64(b)];
                if m.apply(&v).unwrap().iter().all(|x| f2.is_zero(x)) {
                    members.push(v);
                }
            }
        }
        assert_eq!(members.len(), 2); // zero and (1,1)
        assert_eq!(kernel.dim(), 1);
        for v in members {
            assert!(kernel.contains_vector(&v).unwrap());
        }
    }

    #[test]
    fn rank_nullity() {
        let m = FieldMatrix::from_i64_rows(
            Field::Rationals,
            &[vec![1, 2, 3], vec![2, 4, 6]],
        );
        let image = m.image_basis();
        let kernel = m.kernel_basis();
        assert_eq!(image.dim() + kernel.dim(), m.cols());
        assert_eq!(image.dim(), 1);
    }
}
