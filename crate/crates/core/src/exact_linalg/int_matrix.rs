use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LinalgError;

/// An integer matrix with arbitrary-precision entries, row major.
///
/// Serialized as `{"rows": n, "cols": m, "entries": [[..], ..]}` where each
/// entry is a decimal-string integer (plain JSON integers are also accepted
/// on input).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                left: format!("{rows}x{cols}"),
                right: format!("{} entries", entries.len()),
                context: "IntMatrix::new",
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows
                .iter()
                .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
                .collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::from(1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                left: format!("{}x{}", self.rows, self.cols),
                right: format!("{}x{}", other.rows, other.cols),
                context: "IntMatrix::mul",
            });
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * other.at(k, j);
                    *out.at_mut(i, j) += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == j || self.at(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.at(i, i).clone())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = q * self.at(src, j);
            *self.at_mut(dst, j) += delta;
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = q * self.at(i, src);
            *self.at_mut(i, dst) += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j).clone();
            *self.at_mut(r, j) = v;
        }
    }
}

/// Smith normal form `u * m * v = d` with unimodular `u`, `v` and a diagonal
/// `d` whose nonnegative entries satisfy `d1 | d2 | ...`.
#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Number of nonzero diagonal entries; equals the rank over the rationals.
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Diagonalizes `m` by unimodular row and column operations.
///
/// Pivots are chosen with the smallest nonzero absolute value in the working
/// submatrix, which keeps intermediate entries small. The output satisfies
/// `u * m * v = d` exactly; callers may verify this identity directly.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        'pivot: loop {
            // Smallest nonzero |entry| in the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = d.at(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match &pivot {
                        Some((pi, pj)) if d.at(*pi, *pj).abs() <= x.abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            // Clear column t below the pivot, then row t to its right.
            let mut dirty = false;
            for r in t + 1..rows {
                if d.at(r, t).is_zero() {
                    continue;
                }
                let q = -(d.at(r, t) / d.at(t, t));
                d.add_row_multiple(r, t, &q);
                u.add_row_multiple(r, t, &q);
                if !d.at(r, t).is_zero() {
                    dirty = true; // remainder left; pick a smaller pivot next pass
                }
            }
            for c in t + 1..cols {
                if d.at(t, c).is_zero() {
                    continue;
                }
                let q = -(d.at(t, c) / d.at(t, t));
                d.add_col_multiple(c, t, &q);
                v.add_col_multiple(c, t, &q);
                if !d.at(t, c).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Divisibility: the pivot must divide the rest of the submatrix.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d.at(i, j).mod_floor(d.at(t, t)).is_zero() {
                        let one = BigInt::from(1);
                        d.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break 'pivot;
            }
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v)
}

fn finish(mut d: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> SmithNormalForm {
    for t in 0..d.rows().min(d.cols()) {
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithNormalForm { d, u, v }
}

/// Rank of an integer matrix over the rationals, via Smith normal form.
pub fn int_rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

#[derive(Serialize, Deserialize)]
struct MatrixSchema {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<EntrySchema>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntrySchema {
    Text(String),
    Number(i64),
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| EntrySchema::Text(self.at(i, j).to_string()))
                    .collect()
            })
            .collect();
        MatrixSchema {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let schema = MatrixSchema::deserialize(deserializer)?;
        if schema.entries.len() != schema.rows {
            return Err(D::Error::custom(format!(
                "expected {} rows, found {}",
                schema.rows,
                schema.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(schema.rows * schema.cols);
        for row in &schema.entries {
            if row.len() != schema.cols {
                return Err(D::Error::custom(format!(
                    "expected {} columns, found {}",
                    schema.cols,
                    row.len()
                )));
            }
            for e in row {
                let value = match e {
                    EntrySchema::Text(s) => s
                        .trim()
                        .parse::<BigInt>()
                        .map_err(|_| D::Error::custom(format!("bad integer {s:?}")))?,
                    EntrySchema::Number(n) => BigInt::from(*n),
                };
                entries.push(value);
            }
        }
        Ok(IntMatrix {
            rows: schema.rows,
            cols: schema.cols,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_postconditions(m: &IntMatrix) -> SmithNormalForm {
        let snf = smith_normal_form(m);
        let umv = snf.u.mul(m).unwrap().mul(&snf.v).unwrap();
        assert_eq!(umv, snf.d, "u*m*v = d");
        assert!(snf.d.is_diagonal());
        let diag = snf.d.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!(
                    !w[0].is_zero() && w[1].mod_floor(&w[0]).is_zero(),
                    "divisibility chain broken: {w:?}"
                );
            }
        }
        snf
    }

    #[test]
    fn diag_2_3_gives_1_6() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = check_postconditions(&m);
        assert_eq!(
            snf.d.diagonal(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zero(2, 3);
        let snf = check_postconditions(&m);
        assert_eq!(snf.d, IntMatrix::zero(2, 3));
        assert_eq!(int_rank(&m), 0);
    }

    #[test]
    fn identity_matrix() {
        let m = IntMatrix::identity(3);
        let snf = check_postconditions(&m);
        assert_eq!(snf.d, IntMatrix::identity(3));
        assert_eq!(int_rank(&m), 3);
    }

    #[test]
    fn rank_of_rectangular() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 0, 0], vec![0, 3, 0]]);
        assert_eq!(int_rank(&m), 2);
    }

    #[test]
    fn known_4x4() {
        // Invariant factors 1, 3, 21, 0.
        let m = IntMatrix::from_i64_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let snf = check_postconditions(&m);
        assert_eq!(
            snf.d.diagonal(),
            vec![
                BigInt::from(1),
                BigInt::from(3),
                BigInt::from(21),
                BigInt::from(0)
            ]
        );
    }

    #[test]
    fn json_round_trip() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 0, 0], vec![0, 3, 0]]);
        let text = serde_json::to_string(&m).unwrap();
        assert!(text.contains("\"2\""), "entries serialized as strings: {text}");
        let back: IntMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(m, back);
        // Plain integers accepted on input.
        let from_numbers: IntMatrix =
            serde_json::from_str(r#"{"rows":1,"cols":2,"entries":[[4,-5]]}"#).unwrap();
        assert_eq!(from_numbers, IntMatrix::from_i64_rows(&[vec![4, -5]]));
    }

    #[test]
    fn rejects_ragged_json() {
        let r: Result<IntMatrix, _> =
            serde_json::from_str(r#"{"rows":2,"cols":2,"entries":[["1","2"],["3"]]}"#);
        assert!(r.is_err());
    }
}
