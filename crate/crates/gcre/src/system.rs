//! Problem descriptions and P1 assembly of the discrete system.
//!
//! Quadrature conventions: stiffness entries are exact (P0 gradients,
//! constant coefficients). Sources are projected to elementwise means
//! `f_bar` (edge-midpoint rule in 2D, Simpson in 1D, exact through
//! quadratics) and loads are then assembled exactly against P1 hats; the
//! lost part of the source is reported as a data-oscillation term. Boundary
//! tractions are projected to facet means the same way. Constraint pairings
//! use lumped (nodal) weights so complementarity is checkable nodewise.

use crate::error::{Error, Result};
use crate::expr::{Expr, VecExpr};
use crate::field::FeField;
use crate::mesh::{BoundaryTag, FacetTopology, Geometry, Mesh, TagRule};
use crate::sparse::{Csr, Triplets};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Obstacle1d,
    Obstacle2d,
    TrescaContact2d,
    LinearPoisson,
    LinearElasticity,
}

impl ProblemKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "obstacle_1d" => Ok(Self::Obstacle1d),
            "obstacle_2d" => Ok(Self::Obstacle2d),
            "tresca_contact_2d" => Ok(Self::TrescaContact2d),
            "linear_poisson" => Ok(Self::LinearPoisson),
            "linear_elasticity" => Ok(Self::LinearElasticity),
            other => Err(Error::InvalidInput(format!("unknown problem kind {other}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Obstacle1d => "obstacle_1d",
            Self::Obstacle2d => "obstacle_2d",
            Self::TrescaContact2d => "tresca_contact_2d",
            Self::LinearPoisson => "linear_poisson",
            Self::LinearElasticity => "linear_elasticity",
        }
    }

    pub fn is_elastic(&self) -> bool {
        matches!(self, Self::TrescaContact2d | Self::LinearElasticity)
    }

    pub fn has_volume_constraint(&self) -> bool {
        matches!(self, Self::Obstacle1d | Self::Obstacle2d)
    }
}

/// Constitutive coefficients. `Scalar` is unit diffusivity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Material {
    Scalar,
    Elastic { lambda: f64, mu: f64 },
}

/// A flux/stress value: up to two rows of 2-vectors (row r is the flux of
/// displacement component r). Scalar problems use row 0 only.
pub type Flux2 = [[f64; 2]; 2];

impl Material {
    pub fn components(&self) -> usize {
        match self {
            Material::Scalar => 1,
            Material::Elastic { .. } => 2,
        }
    }

    /// The duality operator applied to a displacement gradient: identity
    /// for scalar problems; for elasticity the full-gradient map
    /// `G -> mu*G + (lambda+mu)*tr(G)*I`, whose bilinear form coincides
    /// with the elastic energy on fields that vanish on the Dirichlet
    /// boundary and have zero normal trace on straight contact boundaries.
    pub fn w_apply(&self, g: Flux2) -> Flux2 {
        match *self {
            Material::Scalar => g,
            Material::Elastic { lambda, mu } => {
                let beta = lambda + mu;
                let tr = g[0][0] + g[1][1];
                [
                    [mu * g[0][0] + beta * tr, mu * g[0][1]],
                    [mu * g[1][0], mu * g[1][1] + beta * tr],
                ]
            }
        }
    }

    /// Compliance pairing `s : Winv(t)`; symmetric and positive definite.
    pub fn compliance_pair(&self, s: Flux2, t: Flux2) -> f64 {
        match *self {
            Material::Scalar => s[0][0] * t[0][0] + s[0][1] * t[0][1],
            Material::Elastic { lambda, mu } => {
                let beta = lambda + mu;
                let c = beta / (mu + 2.0 * beta);
                let trt = t[0][0] + t[1][1];
                let wit = [
                    [(t[0][0] - c * trt) / mu, t[0][1] / mu],
                    [t[1][0] / mu, (t[1][1] - c * trt) / mu],
                ];
                s[0][0] * wit[0][0] + s[0][1] * wit[0][1] + s[1][0] * wit[1][0]
                    + s[1][1] * wit[1][1]
            }
        }
    }
}

/// Sign convention for the normal constraint cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeOrientation {
    /// `u >= gap`, multipliers >= 0.
    LowerBound,
    /// `u <= gap`, multipliers <= 0.
    UpperBound,
    /// `u = gap` (bilateral), multipliers unconstrained.
    Equality,
}

impl ConeOrientation {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "lower" => Ok(Self::LowerBound),
            "upper" => Ok(Self::UpperBound),
            "equality" => Ok(Self::Equality),
            other => Err(Error::InvalidInput(format!("unknown orientation {other}"))),
        }
    }

    /// Signed slack `o*(value - gap)`; feasibility is slack >= 0, for the
    /// bilateral case the negative absolute deviation.
    pub fn slack(&self, value: f64, gap: f64) -> f64 {
        match self {
            Self::LowerBound => value - gap,
            Self::UpperBound => gap - value,
            Self::Equality => -(value - gap).abs(),
        }
    }

    /// Project a multiplier onto the dual cone.
    pub fn project_multiplier(&self, m: f64) -> f64 {
        match self {
            Self::LowerBound => m.max(0.0),
            Self::UpperBound => m.min(0.0),
            Self::Equality => m,
        }
    }
}

/// Lumped nodal data of the `b1`/`g1` pairing (obstacle or normal contact).
#[derive(Debug, Clone)]
pub struct NormalConstraint {
    pub nodes: Vec<usize>,
    pub weight: Vec<f64>,
    pub gap: Vec<f64>,
    /// Unit outward normals at contact nodes; unused for volume obstacles.
    pub normal: Vec<[f64; 2]>,
    pub orientation: ConeOrientation,
    pub on_boundary: bool,
}

/// Lumped nodal data of the `b2`/`g2`/`j` pairing (Tresca friction).
#[derive(Debug, Clone)]
pub struct FrictionConstraint {
    pub nodes: Vec<usize>,
    pub weight: Vec<f64>,
    pub bound: Vec<f64>,
    pub tangent: Vec<[f64; 2]>,
}

/// Complete continuous problem description.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub kind: ProblemKind,
    pub geometry: Geometry,
    pub material: Material,
    pub body_force: VecExpr,
    pub traction: VecExpr,
    pub dirichlet: VecExpr,
    /// Obstacle height or contact gap, sampled nodally.
    pub obstacle: VecExpr,
    pub friction_bound: Expr,
    pub orientation: ConeOrientation,
    pub tags: TagRule,
}

impl ProblemSpec {
    pub fn components(&self) -> usize {
        self.material.components()
    }

    pub fn build_mesh(&self, subdivisions: usize) -> Result<Mesh> {
        crate::mesh::build_mesh(self.geometry, subdivisions, self.tags)
    }
}

/// Assembled forms and discrete cones on a given mesh.
#[derive(Debug, Clone)]
pub struct DiscreteSystem {
    pub mesh: Mesh,
    pub topo: FacetTopology,
    pub kind: ProblemKind,
    pub components: usize,
    pub material: Material,
    /// Full symmetric stiffness (elastic problems: the symmetric-gradient
    /// form, so rigid motions are in the kernel before elimination).
    pub stiffness: Csr,
    /// Full load vector for the projected sources.
    pub load: Vec<f64>,
    pub dirichlet: Vec<Option<f64>>,
    pub normal: Option<NormalConstraint>,
    pub friction: Option<FrictionConstraint>,
    /// Elementwise source means, `cell * components + c`.
    pub source_p0: Vec<f64>,
    /// `(boundary facet index, facet-mean traction)` for Neumann facets.
    pub neumann_facets: Vec<(usize, [f64; 2])>,
    pub contact_facets: Vec<usize>,
    pub dirichlet_facets: Vec<usize>,
    /// Data-oscillation estimate `sqrt(sum_K (h_K/pi)^2 ||f - f_bar||_K^2)`.
    pub oscillation: f64,
    /// Lumped volume mass per vertex.
    pub volume_weights: Vec<f64>,
}

impl DiscreteSystem {
    pub fn n_dofs(&self) -> usize {
        self.components * self.mesh.n_vertices()
    }

    pub fn dof(&self, vertex: usize, comp: usize) -> usize {
        vertex * self.components + comp
    }

    /// Number of unconstrained dofs after Dirichlet (and bilateral normal)
    /// elimination.
    pub fn n_free_dofs(&self) -> usize {
        let ess = self.essential_values(true);
        ess.iter().filter(|e| e.is_none()).count()
    }

    /// Essential (prescribed) dof values: Dirichlet data, plus the
    /// bilateral normal components on the contact boundary when
    /// `with_bilateral` is set.
    pub fn essential_values(&self, with_bilateral: bool) -> Vec<Option<f64>> {
        let mut ess = self.dirichlet.clone();
        if with_bilateral {
            if let Some(nc) = &self.normal {
                if nc.orientation == ConeOrientation::Equality && nc.on_boundary {
                    for (k, &node) in nc.nodes.iter().enumerate() {
                        // normal component dof: our contact boundaries are
                        // axis-aligned so the normal is a coordinate axis
                        let n = nc.normal[k];
                        let comp = if n[0].abs() > 0.5 { 0 } else { 1 };
                        let sign = n[comp];
                        ess[self.dof(node, comp)] = Some(sign.signum() * nc.gap[k] * sign.abs());
                    }
                }
            }
        }
        ess
    }

    /// The energy product `a(v, v) >= 0` of a nodal field.
    pub fn energy_norm_sq(&self, v: &FeField) -> Result<f64> {
        v.check_mesh(&self.mesh)?;
        Ok(self.stiffness.quad_form(v.values()))
    }

    /// Framework energy `[Av, Av]` evaluated elementwise; coincides with
    /// `energy_norm_sq` for scalar problems and, on admissible differences,
    /// for the elastic ones.
    pub fn w_energy(&self, v: &FeField) -> Result<f64> {
        v.check_mesh(&self.mesh)?;
        let mut terms = Vec::with_capacity(self.mesh.n_cells());
        for k in 0..self.mesh.n_cells() {
            let g = self.gradient_flux(v, k);
            let wg = self.material.w_apply(g);
            terms.push(self.mesh.cell_measure(k) * self.material.compliance_pair(wg, wg));
        }
        Ok(crate::sparse::kahan_sum(terms))
    }

    /// Gradient of `v` on a cell as a `Flux2` (rows = components).
    pub fn gradient_flux(&self, v: &FeField, cell: usize) -> Flux2 {
        let g = v.cell_gradient(&self.mesh, cell);
        let mut out = [[0.0; 2]; 2];
        for (r, gr) in g.iter().enumerate() {
            out[r] = *gr;
        }
        out
    }

    /// `l(v)` with the assembled (projected) load.
    pub fn load_functional(&self, v: &FeField) -> f64 {
        crate::sparse::kahan_sum(self.load.iter().zip(v.values()).map(|(a, b)| a * b))
    }
}

/// Assemble all forms of the problem on the mesh.
pub fn assemble(problem: &ProblemSpec, mesh: &Mesh) -> Result<DiscreteSystem> {
    let components = problem.components();
    if mesh.dimension == 1 && components != 1 {
        return Err(Error::InvalidInput("elastic problems need a 2D mesh".into()));
    }
    if problem.kind == ProblemKind::Obstacle1d && mesh.dimension != 1 {
        return Err(Error::InvalidInput("obstacle_1d needs a 1D mesh".into()));
    }
    // tag consistency
    let has_contact_tag = mesh
        .boundary
        .iter()
        .any(|b| b.tag == BoundaryTag::Contact);
    if has_contact_tag && !problem.kind.is_elastic() {
        return Err(Error::InvalidInput(
            "contact-tagged boundary on a problem without a contact law".into(),
        ));
    }
    if !mesh.boundary.iter().any(|b| b.tag == BoundaryTag::Dirichlet) {
        return Err(Error::InvalidInput("Dirichlet boundary must be nonempty".into()));
    }

    let n_dofs = components * mesh.n_vertices();
    let stiffness = assemble_stiffness(problem, mesh, components);
    let (source_p0, oscillation) = project_source(problem, mesh, components);

    // loads: projected body force against P1 hats, then facet tractions
    let mut load = vec![0.0; n_dofs];
    let arity = mesh.arity() as f64;
    for k in 0..mesh.n_cells() {
        let w = mesh.cell_measure(k) / arity;
        for &v in mesh.cell(k) {
            for c in 0..components {
                load[v * components + c] += w * source_p0[k * components + c];
            }
        }
    }
    let mut neumann_facets = Vec::new();
    let mut contact_facets = Vec::new();
    let mut dirichlet_facets = Vec::new();
    for (bi, b) in mesh.boundary.iter().enumerate() {
        match b.tag {
            BoundaryTag::Neumann => {
                let tbar = facet_mean(mesh, b.vertices, &problem.traction, components);
                for &v in &b.vertices[..mesh.dimension.min(2)] {
                    let w = if mesh.dimension == 1 { 1.0 } else { b.length / 2.0 };
                    for c in 0..components {
                        load[v * components + c] += w * tbar[c];
                    }
                }
                if mesh.dimension == 1 {
                    // single endpoint: it is stored twice in vertices
                } else {
                    let v1 = b.vertices[1];
                    let _ = v1;
                }
                neumann_facets.push((bi, [tbar[0], tbar.get(1).copied().unwrap_or(0.0)]));
            }
            BoundaryTag::Contact => contact_facets.push(bi),
            BoundaryTag::Dirichlet => dirichlet_facets.push(bi),
        }
    }

    // Dirichlet dof values
    let mut dirichlet: Vec<Option<f64>> = vec![None; n_dofs];
    for &bi in &dirichlet_facets {
        let b = &mesh.boundary[bi];
        let verts: &[usize] = if mesh.dimension == 1 { &b.vertices[..1] } else { &b.vertices };
        for &v in verts {
            let p = mesh.vertices[v];
            for c in 0..components {
                dirichlet[v * components + c] = Some(problem.dirichlet.eval(p[0], p[1], c));
            }
        }
    }

    // lumped volume mass
    let mut volume_weights = vec![0.0; mesh.n_vertices()];
    for k in 0..mesh.n_cells() {
        let w = mesh.cell_measure(k) / arity;
        for &v in mesh.cell(k) {
            volume_weights[v] += w;
        }
    }

    // constraints
    let mut normal = None;
    let mut friction = None;
    if problem.kind.has_volume_constraint() {
        let mut nodes = Vec::new();
        let mut weight = Vec::new();
        let mut gap = Vec::new();
        for v in 0..mesh.n_vertices() {
            if dirichlet[v * components].is_some() {
                // feasibility of the boundary data itself is checked here
                let p = mesh.vertices[v];
                let g = problem.obstacle.eval(p[0], p[1], 0);
                let val = dirichlet[v * components].unwrap();
                if problem.orientation.slack(val, g) < -1e-12 {
                    return Err(Error::Infeasible(format!(
                        "Dirichlet value {val} violates the obstacle {g} at vertex {v}"
                    )));
                }
                continue;
            }
            let p = mesh.vertices[v];
            nodes.push(v);
            weight.push(volume_weights[v]);
            gap.push(problem.obstacle.eval(p[0], p[1], 0));
        }
        normal = Some(NormalConstraint {
            nodes,
            weight,
            gap,
            normal: Vec::new(),
            orientation: problem.orientation,
            on_boundary: false,
        });
    } else if problem.kind.is_elastic() && !contact_facets.is_empty() {
        // lumped boundary mass and outward normals on the contact boundary
        let mut wmap = std::collections::BTreeMap::<usize, (f64, [f64; 2])>::new();
        for &bi in &contact_facets {
            let b = &mesh.boundary[bi];
            if b.outward_normal[0].abs() > 1e-12 && b.outward_normal[1].abs() > 1e-12 {
                return Err(Error::InvalidInput(
                    "contact boundaries must be axis-aligned".into(),
                ));
            }
            for &v in &b.vertices {
                let e = wmap.entry(v).or_insert((0.0, b.outward_normal));
                e.0 += b.length / 2.0;
            }
        }
        let mut nodes = Vec::new();
        let mut weight = Vec::new();
        let mut gap = Vec::new();
        let mut normals = Vec::new();
        let mut bound = Vec::new();
        let mut tangent = Vec::new();
        for (&v, &(w, n)) in &wmap {
            if dirichlet[v * components].is_some() {
                continue;
            }
            let p = mesh.vertices[v];
            nodes.push(v);
            weight.push(w);
            gap.push(problem.obstacle.eval(p[0], p[1], 0));
            normals.push(n);
            let s = problem.friction_bound.eval(p[0], p[1]);
            if s < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "friction bound must be nonnegative, got {s} at vertex {v}"
                )));
            }
            bound.push(s);
            tangent.push([-n[1], n[0]]);
        }
        normal = Some(NormalConstraint {
            nodes: nodes.clone(),
            weight: weight.clone(),
            gap,
            normal: normals,
            orientation: problem.orientation,
            on_boundary: true,
        });
        friction = Some(FrictionConstraint {
            nodes,
            weight,
            bound,
            tangent,
        });
    }

    Ok(DiscreteSystem {
        mesh: mesh.clone(),
        topo: FacetTopology::build(mesh),
        kind: problem.kind,
        components,
        material: problem.material,
        stiffness,
        load,
        dirichlet,
        normal,
        friction,
        source_p0,
        neumann_facets,
        contact_facets,
        dirichlet_facets,
        oscillation,
        volume_weights,
    })
}

fn assemble_stiffness(problem: &ProblemSpec, mesh: &Mesh, components: usize) -> Csr {
    let n_dofs = components * mesh.n_vertices();
    let mut t = Triplets::new(n_dofs, n_dofs);
    for k in 0..mesh.n_cells() {
        let grads = mesh.cell_gradients(k);
        let meas = mesh.cell_measure(k);
        let cv = mesh.cell(k);
        match problem.material {
            Material::Scalar => {
                for (a, ga) in grads.iter().enumerate() {
                    for (b, gb) in grads.iter().enumerate() {
                        let v = meas * (ga[0] * gb[0] + ga[1] * gb[1]);
                        t.push(cv[a], cv[b], v);
                    }
                }
            }
            Material::Elastic { lambda, mu } => {
                for (a, ga) in grads.iter().enumerate() {
                    for (b, gb) in grads.iter().enumerate() {
                        let dot = ga[0] * gb[0] + ga[1] * gb[1];
                        for i in 0..2 {
                            for j in 0..2 {
                                let mut v = mu * ga[j] * gb[i] + lambda * ga[i] * gb[j];
                                if i == j {
                                    v += mu * dot;
                                }
                                t.push(cv[a] * 2 + i, cv[b] * 2 + j, meas * v);
                            }
                        }
                    }
                }
            }
        }
    }
    t.to_csr()
}

/// Elementwise means of the body force plus the oscillation estimate.
fn project_source(problem: &ProblemSpec, mesh: &Mesh, components: usize) -> (Vec<f64>, f64) {
    let mut p0 = vec![0.0; components * mesh.n_cells()];
    let mut osc_sq = 0.0;
    for k in 0..mesh.n_cells() {
        let pts = mean_quadrature_points(mesh, k);
        let mut h_k: f64 = 0.0;
        let cv = mesh.cell(k);
        for a in 0..cv.len() {
            for b in a + 1..cv.len() {
                let pa = mesh.vertices[cv[a]];
                let pb = mesh.vertices[cv[b]];
                h_k = h_k.max(((pa[0] - pb[0]).powi(2) + (pa[1] - pb[1]).powi(2)).sqrt());
            }
        }
        for c in 0..components {
            let mean = pts
                .iter()
                .map(|&(x, y, w)| w * problem.body_force.eval(x, y, c))
                .sum::<f64>();
            p0[k * components + c] = mean;
            let var = pts
                .iter()
                .map(|&(x, y, w)| {
                    let d = problem.body_force.eval(x, y, c) - mean;
                    w * d * d
                })
                .sum::<f64>();
            osc_sq += (h_k / std::f64::consts::PI).powi(2) * var * mesh.cell_measure(k);
        }
    }
    (p0, osc_sq.sqrt())
}

/// Quadrature points `(x, y, weight)` with unit total weight for cell means:
/// Simpson in 1D, edge midpoints in 2D (both exact through quadratics).
fn mean_quadrature_points(mesh: &Mesh, cell: usize) -> Vec<(f64, f64, f64)> {
    let cv = mesh.cell(cell);
    if mesh.dimension == 1 {
        let a = mesh.vertices[cv[0]][0];
        let b = mesh.vertices[cv[1]][0];
        vec![
            (a, 0.0, 1.0 / 6.0),
            (0.5 * (a + b), 0.0, 4.0 / 6.0),
            (b, 0.0, 1.0 / 6.0),
        ]
    } else {
        let p: Vec<[f64; 2]> = cv.iter().map(|&v| mesh.vertices[v]).collect();
        (0..3)
            .map(|i| {
                let q = [
                    0.5 * (p[(i + 1) % 3][0] + p[(i + 2) % 3][0]),
                    0.5 * (p[(i + 1) % 3][1] + p[(i + 2) % 3][1]),
                ];
                (q[0], q[1], 1.0 / 3.0)
            })
            .collect()
    }
}

/// Facet mean of an expression (2-point Gauss on edges, point value in 1D).
fn facet_mean(mesh: &Mesh, vertices: [usize; 2], expr: &VecExpr, components: usize) -> Vec<f64> {
    let pa = mesh.vertices[vertices[0]];
    let pb = mesh.vertices[vertices[1]];
    let mut out = vec![0.0; components];
    if mesh.dimension == 1 {
        for (c, o) in out.iter_mut().enumerate() {
            *o = expr.eval(pa[0], pa[1], c);
        }
        return out;
    }
    let g = 0.5 / 3.0f64.sqrt();
    for &t in &[0.5 - g, 0.5 + g] {
        let x = pa[0] + t * (pb[0] - pa[0]);
        let y = pa[1] + t * (pb[1] - pa[1]);
        for (c, o) in out.iter_mut().enumerate() {
            *o += 0.5 * expr.eval(x, y, c);
        }
    }
    out
}

/// Convenience constructors for the named problem classes.
pub mod problems {
    use super::*;

    /// Obstacle problem on an interval: `-u'' = f`, `u >= obstacle`.
    pub fn obstacle_1d(a: f64, b: f64, f: &str, obstacle: &str) -> Result<ProblemSpec> {
        Ok(ProblemSpec {
            kind: ProblemKind::Obstacle1d,
            geometry: Geometry::Interval { a, b },
            material: Material::Scalar,
            body_force: VecExpr::parse(f)?,
            traction: VecExpr::constant(&[0.0]),
            dirichlet: VecExpr::constant(&[0.0]),
            obstacle: VecExpr::parse(obstacle)?,
            friction_bound: Expr::constant(0.0),
            orientation: ConeOrientation::LowerBound,
            tags: TagRule::all_dirichlet(),
        })
    }

    /// The tangency benchmark: zero load, parabolic obstacle.
    pub fn obstacle_1d_benchmark() -> ProblemSpec {
        obstacle_1d(-2.0, 2.0, "0", "1 - x^2").unwrap()
    }

    pub fn obstacle_2d(f: &str, obstacle: &str) -> Result<ProblemSpec> {
        Ok(ProblemSpec {
            kind: ProblemKind::Obstacle2d,
            geometry: Geometry::Rectangle { width: 1.0, height: 1.0 },
            material: Material::Scalar,
            body_force: VecExpr::parse(f)?,
            traction: VecExpr::constant(&[0.0]),
            dirichlet: VecExpr::constant(&[0.0]),
            obstacle: VecExpr::parse(obstacle)?,
            friction_bound: Expr::constant(0.0),
            orientation: ConeOrientation::LowerBound,
            tags: TagRule::all_dirichlet(),
        })
    }

    pub fn linear_poisson_1d(f: &str) -> Result<ProblemSpec> {
        Ok(ProblemSpec {
            kind: ProblemKind::LinearPoisson,
            geometry: Geometry::Interval { a: 0.0, b: 1.0 },
            material: Material::Scalar,
            body_force: VecExpr::parse(f)?,
            traction: VecExpr::constant(&[0.0]),
            dirichlet: VecExpr::constant(&[0.0]),
            obstacle: VecExpr::constant(&[0.0]),
            friction_bound: Expr::constant(0.0),
            orientation: ConeOrientation::LowerBound,
            tags: TagRule::all_dirichlet(),
        })
    }

    /// Tresca strip: clamped on top and sides, bilateral frictional contact
    /// on the bottom edge, driven by a body force.
    pub fn tresca_strip(lambda: f64, mu: f64, f: &str, s: &str) -> Result<ProblemSpec> {
        Ok(ProblemSpec {
            kind: ProblemKind::TrescaContact2d,
            geometry: Geometry::Rectangle { width: 1.0, height: 1.0 },
            material: Material::Elastic { lambda, mu },
            body_force: VecExpr::parse(f)?,
            traction: VecExpr::constant(&[0.0, 0.0]),
            dirichlet: VecExpr::constant(&[0.0, 0.0]),
            obstacle: VecExpr::constant(&[0.0]),
            friction_bound: Expr::parse(s)?,
            orientation: ConeOrientation::Equality,
            tags: TagRule {
                bottom: BoundaryTag::Contact,
                top: BoundaryTag::Dirichlet,
                left: BoundaryTag::Dirichlet,
                right: BoundaryTag::Dirichlet,
            },
        })
    }
}
