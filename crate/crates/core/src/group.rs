//! The simply connected group of a graph algebra in exponential coordinates.
//!
//! Elements are pairs `(v, z)` with `v` in the V-part and `z` in the Z-part.
//! Because the algebra is two-step, the Baker-Campbell-Hausdorff series
//! stops after the first bracket:
//!
//! `(v1, z1) · (v2, z2) = (v1 + v2, z1 + z2 + ½ [v1, v2])`.
//!
//! The only coefficient is ½, so the law is exact over every field here.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::liealg::{
    scalars_from_json, scalars_to_json, GraphLieAlgebra, LieElement, StructureTable,
};
use crate::morphism::GradedMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    v: Vec<Scalar>,
    z: Vec<Scalar>,
}

impl GroupElement {
    pub fn v(&self) -> &[Scalar] {
        &self.v
    }

    pub fn z(&self) -> &[Scalar] {
        &self.z
    }

    /// `{"v": [...], "z": [...]}`
    pub fn to_json(&self) -> Value {
        json!({ "v": scalars_to_json(&self.v), "z": scalars_to_json(&self.z) })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotentGroup {
    algebra: GraphLieAlgebra,
    half: Scalar,
}

impl NilpotentGroup {
    pub fn new(algebra: GraphLieAlgebra) -> NilpotentGroup {
        let half = algebra
            .field()
            .fraction(1, 2)
            .expect("characteristic is not two");
        NilpotentGroup { algebra, half }
    }

    pub fn algebra(&self) -> &GraphLieAlgebra {
        &self.algebra
    }

    pub fn element(&self, v: Vec<Scalar>, z: Vec<Scalar>) -> Result<GroupElement> {
        // reuse the algebra's shape and field validation
        let x = self.algebra.element_from_parts(v, z)?;
        Ok(self.exp(&x))
    }

    pub fn identity(&self) -> GroupElement {
        let f = self.algebra.field();
        GroupElement {
            v: vec![f.zero(); self.algebra.v_dim()],
            z: vec![f.zero(); self.algebra.z_dim()],
        }
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if g.v.len() != self.algebra.v_dim() || g.z.len() != self.algebra.z_dim() {
            return Err(Error::DimensionMismatch(format!(
                "group element of shape ({}, {}) in a group of shape ({}, {})",
                g.v.len(),
                g.z.len(),
                self.algebra.v_dim(),
                self.algebra.z_dim()
            )));
        }
        let f = self.algebra.field();
        if g.v.iter().chain(&g.z).any(|s| !f.contains(s)) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn multiply(&self, g1: &GroupElement, g2: &GroupElement) -> Result<GroupElement> {
        self.check(g1)?;
        self.check(g2)?;
        let bracket = self.algebra.wedge_mod_w(&g1.v, &g2.v);
        Ok(GroupElement {
            v: g1.v.iter().zip(&g2.v).map(|(a, b)| a + b).collect(),
            z: g1
                .z
                .iter()
                .zip(&g2.z)
                .zip(&bracket)
                .map(|((a, b), c)| &(a + b) + &(&self.half * c))
                .collect(),
        })
    }

    /// `(v, z)⁻¹ = (-v, -z)`, since `[v, -v] = 0`.
    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            v: g.v.iter().map(|s| -s).collect(),
            z: g.z.iter().map(|s| -s).collect(),
        }
    }

    /// `g1 g2 g1⁻¹ g2⁻¹`
    pub fn commutator(&self, g1: &GroupElement, g2: &GroupElement) -> Result<GroupElement> {
        let a = self.multiply(g1, g2)?;
        let b = self.multiply(&a, &self.inverse(g1))?;
        self.multiply(&b, &self.inverse(g2))
    }

    /// In exponential coordinates `exp` is the identity on coordinates.
    pub fn exp(&self, x: &LieElement) -> GroupElement {
        GroupElement {
            v: self.algebra.v_part(x).to_vec(),
            z: self.algebra.z_part(x).to_vec(),
        }
    }

    pub fn log(&self, g: &GroupElement) -> Result<LieElement> {
        self.algebra.element_from_parts(g.v.clone(), g.z.clone())
    }

    pub fn random_element<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> GroupElement {
        self.exp(&self.algebra.random_element(rng))
    }

    pub fn from_json(&self, value: &Value) -> Result<GroupElement> {
        let f = self.algebra.field();
        let part = |key: &str| -> Result<Vec<Scalar>> {
            let v = value
                .get(key)
                .ok_or_else(|| Error::Json(format!("group element needs field {key:?}")))?;
            scalars_from_json(v, f)
        };
        let g = GroupElement {
            v: part("v")?,
            z: part("z")?,
        };
        self.check(&g)?;
        Ok(g)
    }
}

/// The group homomorphism induced by a graded map: `(v, z) ↦ (A v, B z)`.
pub fn push_group_element(map: &GradedMap, g: &GroupElement) -> Result<GroupElement> {
    if g.v.len() != map.source().v_dim() || g.z.len() != map.source().z_dim() {
        return Err(Error::DimensionMismatch(
            "group element does not fit the map's source".into(),
        ));
    }
    Ok(GroupElement {
        v: map.a().mul_vec(&g.v)?,
        z: map.b().mul_vec(&g.z)?,
    })
}
