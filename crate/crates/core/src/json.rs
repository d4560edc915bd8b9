//! JSON interchange for algebras, δ maps and graded Lie algebras. Scalars are
//! written in the text form of [`Scalar::to_text`] against the file's field.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraError};
use crate::exactmath::{Field, MathError, Matrix, Scalar, SparseVec};
use crate::liebuild::{Block, GradedLieAlgebra, GroupAction, GroupKind, LieError};
use crate::triality::{DeltaKind, DeltaMap, TrialityError, TrialityTriple};

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid content: {0}")]
    Invalid(String),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Triality(#[from] TrialityError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

type Rows = Vec<Vec<String>>;

fn matrix_out(m: &Matrix) -> Rows {
    m.to_dense().iter().map(|r| r.iter().map(Scalar::to_text).collect()).collect()
}

fn matrix_in(rows: &Rows, n: usize, field: &Field) -> Result<Matrix, JsonError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(JsonError::Invalid(format!("expected a {n}×{n} matrix")));
    }
    let dense = rows
        .iter()
        .map(|r| r.iter().map(|s| Scalar::parse(s, field)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_dense(dense)?)
}

fn entries_out(table: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Vec<(usize, usize, usize, String)> {
    table.into_iter().map(|(i, j, k, c)| (i, j, k, c.to_text())).collect()
}

fn entries_in(
    entries: &[(usize, usize, usize, String)],
    field: &Field,
) -> Result<Vec<(usize, usize, usize, Scalar)>, JsonError> {
    entries.iter().map(|(i, j, k, s)| Ok((*i, *j, *k, Scalar::parse(s, field)?))).collect()
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    field: Field,
    dim: usize,
    mul: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    involution: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    form: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

pub fn algebra_to_json(a: &Algebra) -> String {
    let j = AlgebraJson {
        field: a.field(),
        dim: a.dim(),
        mul: entries_out(a.structure_constants()),
        involution: a.involution().map(matrix_out),
        form: a.form().map(matrix_out),
        name: a.name().map(str::to_string),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

/// Parses an algebra; involution and form are not validated (see
/// [`Algebra::validate`]).
pub fn algebra_from_json(text: &str) -> Result<Algebra, JsonError> {
    let j: AlgebraJson = serde_json::from_str(text)?;
    let f = j.field;
    let mul = entries_in(&j.mul, &f)?;
    let inv = j.involution.as_ref().map(|r| matrix_in(r, j.dim, &f)).transpose()?;
    let form = j.form.as_ref().map(|r| matrix_in(r, j.dim, &f)).transpose()?;
    let a = Algebra::unchecked(f, j.dim, mul, inv, form)?;
    Ok(match j.name {
        Some(n) => a.with_name(n),
        None => a,
    })
}

type TripleJson = (usize, usize, Rows, Rows, Rows);

#[derive(Serialize, Deserialize)]
struct DeltaJson {
    #[serde(default = "default_field")]
    field: Field,
    kind: DeltaKind,
    dim: usize,
    triples: Vec<TripleJson>,
}

fn default_field() -> Field {
    Field::Q
}

pub fn delta_to_json(d: &DeltaMap, field: Field) -> String {
    let triples = d
        .entries()
        .map(|((a, b), t)| (*a, *b, matrix_out(&t.0[0]), matrix_out(&t.0[1]), matrix_out(&t.0[2])))
        .collect();
    serde_json::to_string_pretty(&DeltaJson { field, kind: d.kind(), dim: d.dim(), triples }).expect("serializable")
}

/// Parses a δ map without membership verification.
pub fn delta_from_json(text: &str) -> Result<DeltaMap, JsonError> {
    let j: DeltaJson = serde_json::from_str(text)?;
    let n = j.dim;
    let entries = j
        .triples
        .iter()
        .map(|(a, b, d0, d1, d2)| {
            let m = |r: &Rows| matrix_in(r, n, &j.field);
            Ok(((*a, *b), TrialityTriple::new(m(d0)?, m(d1)?, m(d2)?)))
        })
        .collect::<Result<Vec<_>, JsonError>>()?;
    Ok(DeltaMap::unverified(n, j.kind, entries)?)
}

#[derive(Serialize, Deserialize)]
struct ActionJson {
    group: GroupKind,
    generators: BTreeMap<String, Rows>,
}

#[derive(Serialize, Deserialize)]
struct LieJson {
    field: Field,
    dim: usize,
    blocks: Vec<Block>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<String>,
    bracket: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    action: Option<ActionJson>,
}

pub fn lie_to_json(l: &GradedLieAlgebra, action: Option<&GroupAction>) -> String {
    let j = LieJson {
        field: l.field(),
        dim: l.dim(),
        blocks: l.blocks().to_vec(),
        labels: l.labels().to_vec(),
        bracket: entries_out(l.structure_constants()),
        action: action.map(|a| ActionJson {
            group: a.kind,
            generators: a.generators.iter().map(|(n, m)| (n.clone(), matrix_out(m))).collect(),
        }),
    };
    serde_json::to_string_pretty(&j).expect("serializable")
}

/// Parses a graded Lie algebra (antisymmetry checked, Jacobi not) and its
/// action if present.
pub fn lie_from_json(text: &str) -> Result<(GradedLieAlgebra, Option<GroupAction>), JsonError> {
    let j: LieJson = serde_json::from_str(text)?;
    let (f, n) = (j.field, j.dim);
    let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
    for (i, k, m, c) in entries_in(&j.bracket, &f)? {
        if i >= k || k >= n || m >= n {
            return Err(JsonError::Invalid(format!("bracket entry ({i},{k},{m}) needs i < j < dim")));
        }
        buckets[k * n + i].push((m, -&c));
        buckets[i * n + k].push((m, c));
    }
    let table = buckets.into_iter().map(SparseVec::from_pairs).collect();
    let labels = if j.labels.is_empty() { (0..n).map(|i| format!("e{i}")).collect() } else { j.labels };
    let lie = GradedLieAlgebra::new(Algebra::from_table(f, n, table), j.blocks, labels)?;
    let action = match j.action {
        None => None,
        Some(a) => {
            let mut gens = Vec::new();
            for name in a.group.generator_names() {
                let rows =
                    a.generators.get(*name).ok_or_else(|| JsonError::Invalid(format!("missing generator {name}")))?;
                gens.push((name.to_string(), matrix_in(rows, n, &f)?));
            }
            Some(GroupAction::new(a.group, gens)?)
        }
    };
    Ok((lie, action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{hurwitz_of_dim, jordan_sym, okubo};
    use crate::liebuild::{construct_g_lrta, BuildOptions};

    #[test]
    fn algebra_round_trip() {
        for a in [hurwitz_of_dim(4).unwrap(), okubo().unwrap()] {
            let text = algebra_to_json(&a);
            let back = algebra_from_json(&text).unwrap();
            assert_eq!(back, a);
            assert_eq!(algebra_to_json(&back), text);
        }
        let q = algebra_from_json(&algebra_to_json(&hurwitz_of_dim(4).unwrap())).unwrap();
        // i·j = k in the Cayley–Dickson basis 1, i, j, k
        assert_eq!(q.mul(&SparseVec::unit(1), &SparseVec::unit(2)), SparseVec::unit(3));
        assert!(matches!(algebra_from_json("{\"dim\": 2}"), Err(JsonError::Syntax(_))));
        let bad = r#"{"field":{"kind":"Q"},"dim":1,"mul":[[0,0,3,"1"]]}"#;
        assert!(matches!(algebra_from_json(bad), Err(JsonError::Algebra(_))));
        let radical = r#"{"field":{"kind":"Q"},"dim":1,"mul":[[0,0,0,"1+1*r"]]}"#;
        assert!(matches!(algebra_from_json(radical), Err(JsonError::Math(_))));
    }

    #[test]
    fn delta_and_lie_round_trip() {
        let (j, d) = jordan_sym(2).unwrap();
        let text = delta_to_json(&d, j.field());
        let back = delta_from_json(&text).unwrap();
        assert_eq!(back, d);
        let c = construct_g_lrta(&j, &d, &BuildOptions::default()).unwrap();
        let text = lie_to_json(&c.lie, Some(&c.action));
        let (lie, action) = lie_from_json(&text).unwrap();
        assert_eq!(lie, c.lie);
        assert_eq!(action.unwrap(), c.action);
        assert!(lie_to_json(&lie, None).len() < text.len());
    }
}
