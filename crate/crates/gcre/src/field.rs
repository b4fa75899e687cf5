//! Nodal P1 finite-element fields.

use crate::error::{Error, Result};
use crate::mesh::Mesh;

/// Coefficient vector of a nodal P1 function: one scalar per vertex for
/// scalar problems, one 2-vector per vertex for elasticity. Dof layout is
/// vertex-major: `dof = vertex * components + c`.
#[derive(Debug, Clone, PartialEq)]
pub struct FeField {
    components: usize,
    values: Vec<f64>,
    mesh_fingerprint: u64,
}

impl FeField {
    pub fn zeros(mesh: &Mesh, components: usize) -> Self {
        Self {
            components,
            values: vec![0.0; components * mesh.n_vertices()],
            mesh_fingerprint: mesh.fingerprint(),
        }
    }

    pub fn from_values(mesh: &Mesh, components: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != components * mesh.n_vertices() {
            return Err(Error::MeshMismatch(format!(
                "field has {} values, mesh needs {}",
                values.len(),
                components * mesh.n_vertices()
            )));
        }
        Ok(Self {
            components,
            values,
            mesh_fingerprint: mesh.fingerprint(),
        })
    }

    pub fn from_fn(mesh: &Mesh, components: usize, f: impl Fn(f64, f64, usize) -> f64) -> Self {
        let mut values = Vec::with_capacity(components * mesh.n_vertices());
        for v in &mesh.vertices {
            for c in 0..components {
                values.push(f(v[0], v[1], c));
            }
        }
        Self {
            components,
            values,
            mesh_fingerprint: mesh.fingerprint(),
        }
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn at(&self, vertex: usize, comp: usize) -> f64 {
        self.values[vertex * self.components + comp]
    }

    pub fn set(&mut self, vertex: usize, comp: usize, value: f64) {
        self.values[vertex * self.components + comp] = value;
    }

    pub fn check_mesh(&self, mesh: &Mesh) -> Result<()> {
        if self.mesh_fingerprint != mesh.fingerprint()
            || self.values.len() != self.components * mesh.n_vertices()
        {
            return Err(Error::MeshMismatch(
                "field does not belong to this mesh".into(),
            ));
        }
        Ok(())
    }

    /// Constant P0 gradient on a cell, one `[f64; 2]` per component.
    pub fn cell_gradient(&self, mesh: &Mesh, cell: usize) -> Vec<[f64; 2]> {
        let grads = mesh.cell_gradients(cell);
        let cv = mesh.cell(cell);
        let mut out = vec![[0.0, 0.0]; self.components];
        for (g, &v) in grads.iter().zip(cv) {
            for c in 0..self.components {
                let coeff = self.at(v, c);
                out[c][0] += coeff * g[0];
                out[c][1] += coeff * g[1];
            }
        }
        out
    }

    /// Evaluate at a point of a structured mesh.
    pub fn eval(&self, mesh: &Mesh, p: [f64; 2], comp: usize) -> Result<f64> {
        let (cell, bary) = mesh.locate(p)?;
        let cv = mesh.cell(cell);
        Ok(bary
            .iter()
            .zip(cv)
            .map(|(w, &v)| w * self.at(v, comp))
            .sum())
    }

    /// Interpolate onto a (finer, nested) structured mesh by pointwise
    /// evaluation at the target vertices. Exact for nested uniform
    /// refinements.
    pub fn prolong(&self, coarse: &Mesh, fine: &Mesh) -> Result<FeField> {
        self.check_mesh(coarse)?;
        let mut values = Vec::with_capacity(self.components * fine.n_vertices());
        for v in &fine.vertices {
            for c in 0..self.components {
                values.push(self.eval(coarse, *v, c)?);
            }
        }
        FeField::from_values(fine, self.components, values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{build_mesh, Geometry, TagRule};

    #[test]
    fn gradient_of_linear_field() {
        let m = build_mesh(
            Geometry::Rectangle { width: 1.0, height: 1.0 },
            3,
            TagRule::all_dirichlet(),
        )
        .unwrap();
        let f = FeField::from_fn(&m, 1, |x, y, _| 2.0 * x - 3.0 * y + 1.0);
        for cell in 0..m.n_cells() {
            let g = f.cell_gradient(&m, cell);
            assert!((g[0][0] - 2.0).abs() < 1e-13 && (g[0][1] + 3.0).abs() < 1e-13);
        }
    }

    #[test]
    fn prolong_is_exact_on_nested_meshes() {
        let m = build_mesh(Geometry::Interval { a: -1.0, b: 3.0 }, 4, TagRule::all_dirichlet())
            .unwrap();
        let fine = crate::mesh::refine(&m, 4).unwrap();
        let f = FeField::from_fn(&m, 1, |x, _, _| 0.5 * x - 2.0);
        let pf = f.prolong(&m, &fine).unwrap();
        for (i, v) in fine.vertices.iter().enumerate() {
            assert!((pf.at(i, 0) - (0.5 * v[0] - 2.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn mesh_mismatch_detected() {
        let m1 = build_mesh(Geometry::Interval { a: 0.0, b: 1.0 }, 4, TagRule::all_dirichlet())
            .unwrap();
        let m2 = build_mesh(Geometry::Interval { a: 0.0, b: 2.0 }, 4, TagRule::all_dirichlet())
            .unwrap();
        let f = FeField::zeros(&m1, 1);
        assert!(f.check_mesh(&m2).is_err());
    }
}
