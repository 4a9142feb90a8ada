//! Finite-dimensional graded-commutative algebras over a field, given by a
//! basis with degrees and a structure-constant table.
//!
//! The intended inputs are cohomology rings with field coefficients; the
//! module computes zero-divisor cup-lengths and the induced lower bounds for
//! the topological complexity and category of maps.

mod cuplength;
mod map;
mod schema;
mod tensor;

pub use cuplength::{
    cat_map_lower_bound, positive_span, subspace_cuplength, tc_map_lower_bound,
    zero_divisor_cuplength,
};
pub use map::{AlgebraMap, MapViolation, MapValidationReport};
pub use schema::{AlgebraSchema, FieldSchema, MapSchema};
pub use tensor::{tensor_product, tensor_square, tensor_square_map};

use thiserror::Error;

use crate::exact_linalg::{Field, LinalgError, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("unknown basis element {0:?}")]
    UnknownBasisElement(String),
    #[error("duplicate basis element {0:?}")]
    DuplicateBasisElement(String),
    #[error("algebra is invalid: {0}")]
    InvalidAlgebra(ValidationReport),
    #[error("map is invalid: {0}")]
    InvalidMap(MapValidationReport),
    #[error("source/target mismatch in {0}")]
    SourceTargetMismatch(&'static str),
    #[error("subspace has a degree-0 component; cup-length inputs must sit in positive degrees")]
    DegreeZeroComponent,
    #[error("cannot build {0}")]
    InvalidConstruction(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One named basis element with its cohomological degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: u32,
}

/// Sparse linear combination of basis elements: `(index, coefficient)`
/// pairs with nonzero coefficients, sorted by index.
pub type SparseVec = Vec<(usize, Scalar)>;

/// A graded-commutative algebra with unit, presented by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedAlgebra {
    field: Field,
    basis: Vec<BasisElement>,
    unit: usize,
    /// `table[i][j]` is the product `a_i * a_j`.
    table: Vec<Vec<SparseVec>>,
}

/// A single violated axiom instance, reported by index into the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    UnitDegree { degree: u32 },
    UnitAction { index: usize, left: bool },
    GradedCommutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, k: usize },
    DegreeHomogeneity { i: usize, j: usize, term: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            return write!(f, "all axioms hold");
        }
        let mut first = true;
        for v in &self.violations {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            match v {
                AxiomViolation::UnitDegree { degree } => {
                    write!(f, "unit has degree {degree}, expected 0")?
                }
                AxiomViolation::UnitAction { index, left } => {
                    let side = if *left { "1*a" } else { "a*1" };
                    write!(f, "unit does not act as identity ({side}) at basis index {index}")?
                }
                AxiomViolation::GradedCommutativity { i, j } => {
                    write!(f, "graded commutativity fails on pair ({i},{j})")?
                }
                AxiomViolation::Associativity { i, j, k } => {
                    write!(f, "associativity fails on triple ({i},{j},{k})")?
                }
                AxiomViolation::DegreeHomogeneity { i, j, term } => write!(
                    f,
                    "product of basis elements ({i},{j}) has a term of wrong degree at index {term}"
                )?,
            }
        }
        Ok(())
    }
}

impl GradedAlgebra {
    /// Builds an algebra from raw parts. Structural requirements (well-formed
    /// indices, sorted sparse vectors) are enforced here; the algebra axioms
    /// are checked separately by [`GradedAlgebra::validate`].
    pub fn new(
        field: Field,
        basis: Vec<BasisElement>,
        unit: usize,
        table: Vec<Vec<SparseVec>>,
    ) -> Result<GradedAlgebra, AlgebraError> {
        let dim = basis.len();
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].iter().any(|other| other.name == b.name) {
                return Err(AlgebraError::DuplicateBasisElement(b.name.clone()));
            }
        }
        if unit >= dim {
            return Err(AlgebraError::InvalidConstruction(format!(
                "unit index {unit} out of range for dimension {dim}"
            )));
        }
        if table.len() != dim || table.iter().any(|row| row.len() != dim) {
            return Err(AlgebraError::InvalidConstruction(
                "structure-constant table must be dim x dim".to_string(),
            ));
        }
        let mut normalized = table;
        for row in &mut normalized {
            for cell in row.iter_mut() {
                for (k, _) in cell.iter() {
                    if *k >= dim {
                        return Err(AlgebraError::InvalidConstruction(format!(
                            "product term index {k} out of range"
                        )));
                    }
                }
                cell.sort_by_key(|(k, _)| *k);
                cell.retain(|(_, c)| !field.is_zero(c));
            }
        }
        Ok(GradedAlgebra {
            field,
            basis,
            unit,
            table: normalized,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    pub fn top_degree(&self) -> u32 {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn dense(&self, v: &SparseVec) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (k, c) in v {
            out[*k] = c.clone();
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        out[i] = self.field.one();
        out
    }

    /// Product of two coordinate vectors, expanded bilinearly over the
    /// structure constants.
    pub fn mul_vectors(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, coeff) in &self.table[i][j] {
                    out[*k] = f.add(&out[*k], &f.mul(&c, coeff));
                }
            }
        }
        out
    }

    pub fn is_zero_vector(&self, v: &[Scalar]) -> bool {
        v.iter().all(|x| self.field.is_zero(x))
    }

    /// Checks every axiom instance and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let f = self.field;
        let dim = self.dim();
        let mut violations = Vec::new();

        if self.degree(self.unit) != 0 {
            violations.push(AxiomViolation::UnitDegree {
                degree: self.degree(self.unit),
            });
        }
        for i in 0..dim {
            let e = self.basis_vector(i);
            let left = self.mul_vectors(&self.basis_vector(self.unit), &e);
            if left != e {
                violations.push(AxiomViolation::UnitAction {
                    index: i,
                    left: true,
                });
            }
            let right = self.mul_vectors(&e, &self.basis_vector(self.unit));
            if right != e {
                violations.push(AxiomViolation::UnitAction {
                    index: i,
                    left: false,
                });
            }
        }

        for i in 0..dim {
            for j in 0..dim {
                // Degree: every term of a_i * a_j lies in degree |a_i|+|a_j|.
                let expected = self.degree(i) + self.degree(j);
                for (k, _) in &self.table[i][j] {
                    if self.degree(*k) != expected {
                        violations.push(AxiomViolation::DegreeHomogeneity {
                            i,
                            j,
                            term: *k,
                        });
                    }
                }
                if j < i {
                    continue;
                }
                // a_i a_j = (-1)^{|a_i||a_j|} a_j a_i
                let forward = self.dense(&self.table[i][j]);
                let backward = self.dense(&self.table[j][i]);
                let sign = f.sign(self.degree(i) as u64 * self.degree(j) as u64);
                let signed: Vec<Scalar> = backward.iter().map(|x| f.mul(&sign, x)).collect();
                if forward != signed {
                    violations.push(AxiomViolation::GradedCommutativity { i, j });
                }
            }
        }

        for i in 0..dim {
            for j in 0..dim {
                let ij = self.dense(&self.table[i][j]);
                for k in 0..dim {
                    let left = self.mul_vectors(&ij, &self.basis_vector(k));
                    let jk = self.dense(&self.table[j][k]);
                    let right = self.mul_vectors(&self.basis_vector(i), &jk);
                    if left != right {
                        violations.push(AxiomViolation::Associativity { i, j, k });
                    }
                }
            }
        }

        ValidationReport { violations }
    }

    pub fn validated(self) -> Result<GradedAlgebra, AlgebraError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(self)
        } else {
            Err(AlgebraError::InvalidAlgebra(report))
        }
    }

    /// The algebra with a single basis element `1` in degree 0 (the
    /// cohomology of a point).
    pub fn point(field: Field) -> GradedAlgebra {
        GradedAlgebra {
            field,
            basis: vec![BasisElement {
                name: "1".to_string(),
                degree: 0,
            }],
            unit: 0,
            table: vec![vec![vec![(0, field.one())]]],
        }
    }

    /// Truncated polynomial algebra `k[x]/(x^height)` on one generator of
    /// the given degree; `height = 2` gives a single-generator algebra with
    /// vanishing square (the cohomology of a sphere in that degree).
    pub fn truncated_polynomial(
        field: Field,
        name: &str,
        degree: u32,
        height: u32,
    ) -> Result<GradedAlgebra, AlgebraError> {
        if height < 2 || degree == 0 {
            return Err(AlgebraError::InvalidConstruction(format!(
                "truncated polynomial needs height >= 2 and positive degree, got {height}, {degree}"
            )));
        }
        if height > 2 && degree % 2 == 1 && field != Field::Prime(2) {
            return Err(AlgebraError::InvalidConstruction(format!(
                "odd-degree generator {name} cannot have nonzero square outside characteristic 2"
            )));
        }
        let dim = height as usize;
        let mut basis = vec![BasisElement {
            name: "1".to_string(),
            degree: 0,
        }];
        for k in 1..dim {
            let name = if k == 1 {
                name.to_string()
            } else {
                format!("{name}^{k}")
            };
            basis.push(BasisElement {
                name,
                degree: degree * k as u32,
            });
        }
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                if i + j < dim {
                    table[i][j] = vec![(i + j, field.one())];
                }
            }
        }
        GradedAlgebra::new(field, basis, 0, table)
    }

    /// Cohomology of the n-sphere with coefficients in the field.
    pub fn sphere(field: Field, n: u32) -> Result<GradedAlgebra, AlgebraError> {
        GradedAlgebra::truncated_polynomial(field, "x", n, 2)
    }

    /// Cohomology of the n-torus: an exterior algebra on n degree-1
    /// generators, built as an iterated graded tensor product.
    pub fn torus(field: Field, n: u32) -> Result<GradedAlgebra, AlgebraError> {
        let mut result = GradedAlgebra::point(field);
        for i in 1..=n {
            let circle =
                GradedAlgebra::truncated_polynomial(field, &format!("x{i}"), 1, 2)?;
            result = tensor::tensor_product(&result, &circle)?;
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_generator_is_valid() {
        let a = GradedAlgebra::sphere(Field::Rationals, 1).unwrap();
        assert!(a.validate().is_valid());
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn truncated_polynomial_even_degree_is_valid() {
        let a = GradedAlgebra::truncated_polynomial(Field::Rationals, "u", 2, 2).unwrap();
        let report = a.validate();
        assert!(report.is_valid(), "{report}");
    }

    #[test]
    fn odd_square_rejected_outside_char_2() {
        assert!(GradedAlgebra::truncated_polynomial(Field::Rationals, "x", 1, 3).is_err());
        assert!(
            GradedAlgebra::truncated_polynomial(Field::Prime(2).unwrap(), "x", 1, 3).is_ok()
        );
    }

    #[test]
    fn commutativity_violation_reported() {
        // x*y = xy but y*x = xy (missing the minus sign) in degree 1.
        let f = Field::Rationals;
        let names = ["1", "x", "y", "xy"];
        let degs = [0, 1, 1, 2];
        let basis: Vec<BasisElement> = names
            .iter()
            .zip(degs)
            .map(|(n, d)| BasisElement {
                name: n.to_string(),
                degree: d,
            })
            .collect();
        let mut table = vec![vec![Vec::new(); 4]; 4];
        for i in 0..4 {
            table[0][i] = vec![(i, f.one())];
            table[i][0] = vec![(i, f.one())];
        }
        table[0][0] = vec![(0, f.one())];
        table[1][2] = vec![(3, f.one())];
        table[2][1] = vec![(3, f.one())]; // wrong: should be -xy
        let a = GradedAlgebra::new(f, basis, 0, table).unwrap();
        let report = a.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::GradedCommutativity { i: 1, j: 2 })));
    }

    #[test]
    fn torus_dimensions() {
        let t2 = GradedAlgebra::torus(Field::Rationals, 2).unwrap();
        assert_eq!(t2.dim(), 4);
        assert_eq!(t2.top_degree(), 2);
        assert!(t2.validate().is_valid());
    }
}
