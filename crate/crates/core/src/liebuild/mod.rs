//! ℤ₂×ℤ₂-graded Lie algebras with A₄ / S₄ actions built from triality data,
//! their verification, coordinate extraction and simplicity decision.

mod construct;
mod extract;
mod simple;
mod steinberg;
mod verify;


pub use construct::{construct_g_lrta, construct_g_sta, BuildOptions, Construction};
pub use extract::{extract_coordinate_algebra, joint_eigenspace, Extracted};
pub use simple::{is_simple_with_action, Simplicity};
pub use steinberg::steinberg_relations_check;
pub use verify::{
    default_jacobi_mode, jacobi_at, killing_form, verify_build, verify_grading, verify_group_action, verify_jacobi,
    JacobiMode,
};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraError};
use crate::exactmath::{Field, Matrix, SparseVec};
use crate::triality::TrialityError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("axiom check failed:\n{0}")]
    Axiom(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("action structure: {0}")]
    ActionStructure(String),
    #[error("grading violated: {0}")]
    Grading(String),
    #[error("invalid Lie algebra: {0}")]
    Invalid(String),
    #[error(transparent)]
    Triality(#[from] TrialityError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Degree of a block in the grading group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grade {
    /// Element of ℤ₂×ℤ₂.
    Klein(u8, u8),
    /// Element of ℤ (5-gradings).
    Int(i32),
    /// No grading constraint.
    Free,
}

impl Grade {
    fn add(self, o: Grade) -> Option<Grade> {
        match (self, o) {
            (Grade::Klein(a, b), Grade::Klein(c, d)) => Some(Grade::Klein(a ^ c, b ^ d)),
            (Grade::Int(a), Grade::Int(b)) => Some(Grade::Int(a + b)),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub label: String,
    pub dim: usize,
    pub grade: Grade,
}

impl Block {
    pub fn new(label: impl Into<String>, dim: usize, grade: Grade) -> Self {
        Block { label: label.into(), dim, grade }
    }
}

/// A Lie algebra given by structure constants, with an ordered block layout
/// and a provenance label per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    bracket: Algebra,
    blocks: Vec<Block>,
    labels: Vec<String>,
}

impl GradedLieAlgebra {
    /// Validates antisymmetry and the block layout (not Jacobi or grading).
    pub fn new(bracket: Algebra, blocks: Vec<Block>, labels: Vec<String>) -> Result<Self, LieError> {
        let n = bracket.dim();
        let total: usize = blocks.iter().map(|b| b.dim).sum();
        if total != n || labels.len() != n {
            return Err(LieError::Invalid(format!("blocks sum to {total}, {} labels, dimension {n}", labels.len())));
        }
        for i in 0..n {
            if !bracket.basis_product(i, i).is_zero() {
                return Err(LieError::Invalid(format!("[e{i}, e{i}] ≠ 0")));
            }
            for j in i + 1..n {
                if *bracket.basis_product(i, j) != bracket.basis_product(j, i).neg() {
                    return Err(LieError::Invalid(format!("[e{i}, e{j}] ≠ −[e{j}, e{i}]")));
                }
            }
        }
        Ok(GradedLieAlgebra { bracket, blocks, labels })
    }

    /// A single ungraded block.
    pub fn ungraded(bracket: Algebra) -> Result<Self, LieError> {
        let n = bracket.dim();
        let labels = (0..n).map(|i| format!("e{i}")).collect();
        Self::new(bracket, vec![Block::new("L", n, Grade::Free)], labels)
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn field(&self) -> Field {
        self.bracket.field()
    }

    /// The bracket as an anticommutative algebra.
    pub fn algebra(&self) -> &Algebra {
        &self.bracket
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn block_offset(&self, k: usize) -> usize {
        self.blocks[..k].iter().map(|b| b.dim).sum()
    }

    /// Coordinate range of the block with the given label.
    pub fn block_range(&self, label: &str) -> Option<std::ops::Range<usize>> {
        let k = self.blocks.iter().position(|b| b.label == label)?;
        let o = self.block_offset(k);
        Some(o..o + self.blocks[k].dim)
    }

    /// Index of the block containing coordinate `i`.
    pub fn block_of(&self, i: usize) -> usize {
        let mut o = 0;
        for (k, b) in self.blocks.iter().enumerate() {
            if i < o + b.dim {
                return k;
            }
            o += b.dim;
        }
        panic!("coordinate {i} out of range")
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.bracket.mul(x, y)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &SparseVec {
        self.bracket.basis_product(i, j)
    }

    pub fn ad(&self, x: &SparseVec) -> Matrix {
        self.bracket.left(x)
    }

    /// Structure constants `(i, j, k, c)` with `i < j`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, crate::exactmath::Scalar)> {
        self.bracket.structure_constants().into_iter().filter(|(i, j, _, _)| i < j).collect()
    }

    /// Same data with a corrupted structure constant, for negative tests.
    pub fn with_bracket(&self, bracket: Algebra) -> Result<Self, LieError> {
        Self::new(bracket, self.blocks.clone(), self.labels.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    A4,
    S4,
}

impl GroupKind {
    pub fn generator_names(self) -> &'static [&'static str] {
        match self {
            GroupKind::A4 => &["tau1", "tau2", "phi"],
            GroupKind::S4 => &["tau1", "tau2", "phi", "tau"],
        }
    }

    /// Defining relations as pairs of words; a word lists generators left to
    /// right as a composition (rightmost acts first).
    pub fn relations(self) -> Vec<(&'static str, &'static str)> {
        let mut r = vec![
            ("tau1 tau1", "id"),
            ("tau2 tau2", "id"),
            ("tau1 tau2", "tau2 tau1"),
            ("phi phi phi", "id"),
            ("phi tau1", "tau2 phi"),
            ("phi tau2", "tau1 tau2 phi"),
        ];
        if self == GroupKind::S4 {
            r.extend([
                ("tau tau", "id"),
                ("tau1 tau", "tau tau1"),
                ("tau2 tau", "tau tau2 tau1"),
                ("tau phi", "phi phi tau"),
            ]);
        }
        r
    }
}

/// Named generator matrices acting on the coordinates of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub kind: GroupKind,
    pub generators: Vec<(String, Matrix)>,
}

impl GroupAction {
    pub fn new(kind: GroupKind, generators: Vec<(String, Matrix)>) -> Result<Self, LieError> {
        let a = GroupAction { kind, generators };
        let mut dims = a.generators.iter().map(|(_, m)| (m.rows(), m.cols()));
        let first = dims.next();
        if dims.any(|d| Some(d) != first) || first.is_some_and(|(r, c)| r != c) {
            return Err(LieError::ActionStructure("generators have different shapes".into()));
        }
        for name in kind.generator_names() {
            if a.get(name).is_none() {
                return Err(LieError::ActionStructure(format!("missing generator {name}")));
            }
        }
        Ok(a)
    }

    pub fn get(&self, name: &str) -> Option<&Matrix> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, |(_, m)| m.rows())
    }

    /// Evaluates a word such as `"phi tau1"`.
    pub fn word(&self, w: &str) -> Option<Matrix> {
        let n = self.dim();
        let mut m = Matrix::identity(n);
        for g in w.split_whitespace() {
            if g == "id" {
                continue;
            }
            m = m.mul(self.get(g)?);
        }
        Some(m)
    }

    /// The same action with one generator replaced.
    pub fn with_generator(&self, name: &str, m: Matrix) -> Self {
        let mut a = self.clone();
        for (n, g) in a.generators.iter_mut() {
            if n == name {
                *g = m.clone();
            }
        }
        a
    }
}
