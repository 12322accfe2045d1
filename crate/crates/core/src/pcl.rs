//! Free partially commutative Lie algebras modulo degree three.
//!
//! The free Lie algebra on generators `v_0, ..., v_{n-1}` truncated above
//! degree two has basis `v_i` and `[v_i, v_j]` for `i < j`. Killing the
//! brackets of non-adjacent generators and passing to the quotient gives
//! back the graph algebra; [`verify_pcl_quotient`] certifies this with an
//! explicit isomorphism.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::field::{Field, Scalar};
use crate::graph::Graph;
use crate::liealg::{GraphLieAlgebra, StructureConstants, StructureTable};
use crate::linalg::Matrix;
use crate::morphism::{is_lie_morphism, matrix_to_json, GradedMap};

/// The degree-two truncation of the free Lie algebra with relations
/// `[v_i, v_j] = 0` for the non-edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeLieDegree2 {
    field: Field,
    generators: usize,
    relations: Vec<(usize, usize)>,
}

impl FreeLieDegree2 {
    pub fn new(g: &Graph, field: Field) -> FreeLieDegree2 {
        FreeLieDegree2 {
            field,
            generators: g.n(),
            relations: g.non_edges(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Hall basis in degree two: `(i, j)` with `i < j`, lexicographic.
    pub fn degree2_basis(&self) -> Vec<(usize, usize)> {
        let n = self.generators;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect()
    }

    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    fn free_index(&self, i: usize, j: usize) -> usize {
        let n = self.generators;
        // pairs (a, b) with a < i come first
        n + i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    pub fn free_dim(&self) -> usize {
        let n = self.generators;
        n + n * n.saturating_sub(1) / 2
    }

    /// The truncated free algebra before relations.
    pub fn free_algebra(&self) -> StructureConstants {
        let f = self.field;
        let mut names: Vec<String> = (0..self.generators).map(|i| format!("v{i}")).collect();
        let mut brackets = BTreeMap::new();
        for (i, j) in self.degree2_basis() {
            names.push(format!("e{i}_{j}"));
            brackets.insert((i, j), BTreeMap::from([(self.free_index(i, j), f.one())]));
        }
        StructureConstants::new(f, names, brackets).expect("valid free table")
    }

    /// Quotient of the truncated free algebra by the span of the relations.
    ///
    /// The span is central, hence an ideal. Elimination on the relation
    /// vectors picks the pivot coordinates to drop; the remaining basis
    /// vectors represent the quotient, and brackets are reduced modulo the
    /// relation rows.
    pub fn quotient(&self) -> StructureConstants {
        let f = self.field;
        let free = self.free_algebra();
        let d = free.dim();
        let rows: Vec<Vec<Scalar>> = self
            .relations
            .iter()
            .map(|&(i, j)| {
                let mut r = vec![f.zero(); d];
                r[self.free_index(i, j)] = f.one();
                r
            })
            .collect();
        let (echelon, pivots) = Matrix::from_rows(f, d, rows)
            .expect("relation rows")
            .reduced();
        let kept: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let project = |mut x: Vec<Scalar>| -> Vec<Scalar> {
            for (r, &c) in pivots.iter().enumerate() {
                if x[c].is_zero() {
                    continue;
                }
                let factor = x[c].clone();
                for (k, xk) in x.iter_mut().enumerate() {
                    *xk = &*xk - &(&factor * &echelon[(r, k)]);
                }
            }
            kept.iter().map(|&k| x[k].clone()).collect()
        };
        let mut brackets = BTreeMap::new();
        for (s, &a) in kept.iter().enumerate() {
            for (t, &b) in kept.iter().enumerate().skip(s + 1) {
                let entry: BTreeMap<usize, Scalar> = project(free.basis_bracket(a, b))
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !entry.is_empty() {
                    brackets.insert((s, t), entry);
                }
            }
        }
        let names = kept.iter().map(|&k| free.basis()[k].clone()).collect();
        StructureConstants::new(f, names, brackets).expect("valid quotient table")
    }
}

/// The relation quotient of the truncated free algebra on `g`'s vertices.
pub fn pcl_mod_cube(g: &Graph, field: Field) -> StructureConstants {
    FreeLieDegree2::new(g, field).quotient()
}

/// An isomorphism from the free-algebra quotient onto the graph algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PclCertificate {
    pub holds: bool,
    pub quotient: StructureConstants,
    /// Full-basis matrix sending each generator to the matching vertex and
    /// each surviving bracket of generators to the bracket of their images.
    pub witness: Matrix,
}

impl PclCertificate {
    /// The witness read as a graded map of the graph algebra, using that the
    /// quotient basis names coincide with the graph algebra's.
    pub fn as_graded(&self, algebra: &GraphLieAlgebra) -> Option<GradedMap> {
        if self.quotient.basis() != algebra.basis_names().as_slice() {
            return None;
        }
        let (n, d) = (algebra.v_dim(), algebra.dim());
        GradedMap::new(
            algebra.clone(),
            algebra.clone(),
            self.witness.block(0, n, 0, n),
            self.witness.block(n, d, n, d),
        )
        .ok()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds,
            "dim": self.quotient.dim(),
            "quotient": self.quotient.to_json(),
            "witness": matrix_to_json(&self.witness),
        })
    }
}

/// Builds the generator-identity map from [`pcl_mod_cube`] to the graph
/// algebra and certifies it as a Lie isomorphism.
pub fn verify_pcl_quotient(g: &Graph, field: Field) -> PclCertificate {
    let quotient = pcl_mod_cube(g, field);
    let algebra = GraphLieAlgebra::new(g.clone(), field);
    let n = g.n();
    let generator = |i: usize| algebra.vertex(i).into_coeffs();
    let columns: Vec<Vec<Scalar>> = quotient
        .basis()
        .iter()
        .enumerate()
        .map(|(k, _)| {
            if k < n {
                return generator(k);
            }
            // a surviving degree-two class is the bracket of two generators
            let (&(i, j), _) = quotient
                .brackets()
                .iter()
                .find(|(_, entry)| entry.len() == 1 && entry.get(&k).is_some_and(Scalar::is_one))
                .expect("degree-two class is a bracket of generators");
            algebra.bracket_coords(&generator(i), &generator(j))
        })
        .collect();
    let witness = Matrix::from_columns(field, algebra.dim(), &columns).expect("witness shape");
    let holds = quotient.dim() == algebra.dim()
        && is_lie_morphism(&quotient, &algebra, &witness)
        && witness.is_invertible();
    PclCertificate {
        holds,
        quotient,
        witness,
    }
}
