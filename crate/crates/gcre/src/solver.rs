//! Primal solvers for the discrete variational inequality and recovery of
//! the mixed (multiplier) solution.
//!
//! Obstacle constraints are solved by a primal-dual active-set iteration:
//! active nodes are pinned to the gap, multipliers are read off the
//! residual, and the sets are updated from the sign of
//! `multiplier - c * slack`. Tresca friction uses the analogous stick/slip
//! iteration: stick nodes pin the tangential dof, slip nodes apply the
//! traction bound as a load, and the sets are updated by projecting the
//! trial traction onto the ball of radius `s`. Both terminate in finitely
//! many steps once the sets repeat; ties deactivate.

use crate::error::{Error, Result};
use crate::field::FeField;
use crate::sparse::SpdSolver;
use crate::system::{ConeOrientation, DiscreteSystem};

#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Relative algebraic residual tolerance.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 100 }
    }
}

/// Converged primal solution with its final active sets.
#[derive(Debug, Clone)]
pub struct PrimalSolution {
    pub u: FeField,
    /// Constraint nodes where the normal constraint is active.
    pub active_set_contact: Vec<usize>,
    /// Contact nodes in stick (`|omega| < s`).
    pub active_set_stick: Vec<usize>,
    pub iterations: usize,
    pub residual: f64,
    /// Discrete energy after each accepted iterate; nonincreasing.
    pub energy_history: Vec<f64>,
}

/// Primal solution together with the nodal multipliers of the saddle
/// system.
#[derive(Debug, Clone)]
pub struct MixedSolution {
    pub u: FeField,
    /// Normal multiplier per constraint node (sign per cone orientation).
    pub lambda: Vec<f64>,
    /// Tangential multiplier per contact node, `|omega_i| <= s_i`.
    pub omega: Vec<f64>,
}

/// Solve the linear system with the given essential dof values, returning
/// the full solution vector and the relative residual on free dofs.
pub(crate) fn solve_with_essential(
    sys: &DiscreteSystem,
    essential: &[Option<f64>],
    extra_load: Option<&[f64]>,
) -> Result<(Vec<f64>, f64)> {
    let n = sys.n_dofs();
    assert_eq!(essential.len(), n);
    let mut keep = Vec::with_capacity(n);
    let mut keep_index = vec![None; n];
    for (i, e) in essential.iter().enumerate() {
        if e.is_none() {
            keep_index[i] = Some(keep.len());
            keep.push(i);
        }
    }
    if keep.is_empty() {
        let u: Vec<f64> = essential.iter().map(|e| e.unwrap()).collect();
        return Ok((u, 0.0));
    }
    let reduced = sys.stiffness.submatrix(&keep, &keep_index);
    let ess_vec: Vec<f64> = essential.iter().map(|e| e.unwrap_or(0.0)).collect();
    let coupling = sys.stiffness.matvec(&ess_vec);
    let mut rhs = Vec::with_capacity(keep.len());
    for &i in &keep {
        let mut b = sys.load[i] - coupling[i];
        if let Some(extra) = extra_load {
            b += extra[i];
        }
        rhs.push(b);
    }
    let solver = SpdSolver::new(&reduced)?;
    let x = solver.solve(&rhs);
    let mut u = ess_vec;
    for (k, &i) in keep.iter().enumerate() {
        u[i] = x[k];
    }
    // relative residual on free dofs
    let au = sys.stiffness.matvec(&u);
    let scale = 1.0 + sys.load.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut res: f64 = 0.0;
    for &i in &keep {
        let mut r = au[i] - sys.load[i];
        if let Some(extra) = extra_load {
            r -= extra[i];
        }
        res = res.max(r.abs());
    }
    Ok((u, res / scale))
}

/// Solve the linear problem `a(u, v) = l(v)` on the constrained subspace
/// (Dirichlet data and, for contact problems, the bilateral normal trace).
pub fn solve_unconstrained(sys: &DiscreteSystem) -> Result<FeField> {
    let essential = sys.essential_values(true);
    let (u, _res) = solve_with_essential(sys, &essential, None)?;
    FeField::from_values(&sys.mesh, sys.components, u)
}

/// Discrete energy `1/2 a(u,u) - l(u) + j(u)` with the lumped friction
/// functional.
pub fn discrete_energy(sys: &DiscreteSystem, u: &[f64]) -> f64 {
    let mut e = 0.5 * sys.stiffness.quad_form(u) - sys.load.iter().zip(u).map(|(a, b)| a * b).sum::<f64>();
    if let Some(fr) = &sys.friction {
        for (k, &node) in fr.nodes.iter().enumerate() {
            let t = fr.tangent[k];
            let ut = (0..sys.components)
                .map(|c| u[sys.dof(node, c)] * t[c])
                .sum::<f64>();
            e += fr.weight[k] * fr.bound[k] * ut.abs();
        }
    }
    e
}

/// Minimize `1/2 a(v,v) - l(v) + j(v)` over the discrete constraint set.
pub fn solve_primal(sys: &DiscreteSystem, opts: SolverOptions) -> Result<PrimalSolution> {
    match (&sys.normal, &sys.friction) {
        (Some(nc), None) if !nc.on_boundary => solve_obstacle(sys, opts),
        (_, Some(_)) => solve_tresca(sys, opts),
        _ => {
            let essential = sys.essential_values(true);
            let (u, res) = solve_with_essential(sys, &essential, None)?;
            let energy = discrete_energy(sys, &u);
            Ok(PrimalSolution {
                u: FeField::from_values(&sys.mesh, sys.components, u)?,
                active_set_contact: Vec::new(),
                active_set_stick: Vec::new(),
                iterations: 1,
                residual: res,
                energy_history: vec![energy],
            })
        }
    }
}

fn solve_obstacle(sys: &DiscreteSystem, opts: SolverOptions) -> Result<PrimalSolution> {
    let nc = sys.normal.as_ref().unwrap();
    let sign = match nc.orientation {
        ConeOrientation::LowerBound => 1.0,
        ConeOrientation::UpperBound => -1.0,
        ConeOrientation::Equality => {
            return Err(Error::InvalidInput(
                "volume constraints must be one-sided".into(),
            ))
        }
    };
    let diag = stiffness_diagonal(sys);
    let mut active = vec![false; nc.nodes.len()];
    let mut energy_history = Vec::new();
    let mut last: Option<(Vec<f64>, f64)> = None;
    for iter in 1..=opts.max_iter {
        let mut essential = sys.essential_values(true);
        for (k, &node) in nc.nodes.iter().enumerate() {
            if active[k] {
                essential[sys.dof(node, 0)] = Some(nc.gap[k]);
            }
        }
        let (u, res) = solve_with_essential(sys, &essential, None)?;
        energy_history.push(discrete_energy(sys, &u));
        let au = sys.stiffness.matvec(&u);
        let mut next = vec![false; nc.nodes.len()];
        for (k, &node) in nc.nodes.iter().enumerate() {
            let dof = sys.dof(node, 0);
            let mu = if active[k] {
                sign * (au[dof] - sys.load[dof]) / nc.weight[k]
            } else {
                0.0
            };
            let slack = nc.orientation.slack(u[dof], nc.gap[k]);
            let c = diag[dof] / nc.weight[k];
            next[k] = mu - c * slack > 0.0;
        }
        let done = next == active && res <= opts.tol;
        last = Some((u, res));
        if done {
            let (u, res) = last.unwrap();
            let active_nodes: Vec<usize> = nc
                .nodes
                .iter()
                .zip(&active)
                .filter_map(|(&n, &a)| a.then_some(n))
                .collect();
            return Ok(PrimalSolution {
                u: FeField::from_values(&sys.mesh, sys.components, u)?,
                active_set_contact: active_nodes,
                active_set_stick: Vec::new(),
                iterations: iter,
                residual: res,
                energy_history,
            });
        }
        active = next;
    }
    Err(Error::NonConvergence {
        iterations: opts.max_iter,
        residual: last.map(|(_, r)| r).unwrap_or(f64::NAN),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FrictionState {
    Stick,
    SlipPlus,
    SlipMinus,
}

fn solve_tresca(sys: &DiscreteSystem, opts: SolverOptions) -> Result<PrimalSolution> {
    let fr = sys.friction.as_ref().unwrap();
    let diag = stiffness_diagonal(sys);
    let mut state = vec![FrictionState::Stick; fr.nodes.len()];
    let mut energy_history = Vec::new();
    let mut last: Option<(Vec<f64>, f64)> = None;
    for iter in 1..=opts.max_iter {
        let mut essential = sys.essential_values(true);
        let mut extra = vec![0.0; sys.n_dofs()];
        for (k, &node) in fr.nodes.iter().enumerate() {
            let t = fr.tangent[k];
            let comp = if t[0].abs() > 0.5 { 0 } else { 1 };
            match state[k] {
                FrictionState::Stick => {
                    essential[sys.dof(node, comp)] = Some(0.0);
                }
                FrictionState::SlipPlus => {
                    extra[sys.dof(node, comp)] += fr.weight[k] * fr.bound[k] * t[comp];
                }
                FrictionState::SlipMinus => {
                    extra[sys.dof(node, comp)] -= fr.weight[k] * fr.bound[k] * t[comp];
                }
            }
        }
        let (u, res) = solve_with_essential(sys, &essential, Some(&extra))?;
        energy_history.push(discrete_energy(sys, &u));
        let au = sys.stiffness.matvec(&u);
        let mut next = vec![FrictionState::Stick; fr.nodes.len()];
        for (k, &node) in fr.nodes.iter().enumerate() {
            let t = fr.tangent[k];
            let ut = (0..sys.components)
                .map(|c| u[sys.dof(node, c)] * t[c])
                .sum::<f64>();
            let omega = match state[k] {
                FrictionState::Stick => {
                    let rt = (0..sys.components)
                        .map(|c| (au[sys.dof(node, c)] - sys.load[sys.dof(node, c)]) * t[c])
                        .sum::<f64>();
                    rt / fr.weight[k]
                }
                FrictionState::SlipPlus => fr.bound[k],
                FrictionState::SlipMinus => -fr.bound[k],
            };
            let c = diag[sys.dof(node, 0)] / fr.weight[k];
            let trial = omega - c * ut;
            next[k] = if trial > fr.bound[k] {
                FrictionState::SlipPlus
            } else if trial < -fr.bound[k] {
                FrictionState::SlipMinus
            } else {
                FrictionState::Stick
            };
        }
        let done = next == state && res <= opts.tol;
        last = Some((u, res));
        if done {
            let (u, res) = last.unwrap();
            let stick: Vec<usize> = fr
                .nodes
                .iter()
                .zip(&state)
                .filter_map(|(&n, &s)| (s == FrictionState::Stick).then_some(n))
                .collect();
            return Ok(PrimalSolution {
                u: FeField::from_values(&sys.mesh, sys.components, u)?,
                active_set_contact: sys
                    .normal
                    .as_ref()
                    .map(|nc| nc.nodes.clone())
                    .unwrap_or_default(),
                active_set_stick: stick,
                iterations: iter,
                residual: res,
                energy_history,
            });
        }
        state = next;
    }
    Err(Error::NonConvergence {
        iterations: opts.max_iter,
        residual: last.map(|(_, r)| r).unwrap_or(f64::NAN),
    })
}

fn stiffness_diagonal(sys: &DiscreteSystem) -> Vec<f64> {
    let n = sys.n_dofs();
    let mut d = vec![0.0; n];
    for i in 0..n {
        for (c, v) in sys.stiffness.row(i) {
            if c == i {
                d[i] = v;
            }
        }
    }
    d
}

/// Recover the nodal multipliers of the saddle system from a converged
/// primal solution: the residual restricted to the constraint directions,
/// divided by the lumped weights, projected onto the discrete cones.
pub fn extract_multipliers(sys: &DiscreteSystem, u: &FeField) -> Result<MixedSolution> {
    u.check_mesh(&sys.mesh)?;
    let au = sys.stiffness.matvec(u.values());
    let r: Vec<f64> = au.iter().zip(&sys.load).map(|(a, l)| a - l).collect();
    let mut lambda = Vec::new();
    let mut omega = Vec::new();
    if let Some(nc) = &sys.normal {
        for (k, &node) in nc.nodes.iter().enumerate() {
            let raw = if nc.on_boundary {
                let n = nc.normal[k];
                (0..sys.components)
                    .map(|c| r[sys.dof(node, c)] * n[c])
                    .sum::<f64>()
                    / nc.weight[k]
            } else {
                r[sys.dof(node, 0)] / nc.weight[k]
            };
            lambda.push(nc.orientation.project_multiplier(raw));
        }
    }
    if let Some(fr) = &sys.friction {
        for (k, &node) in fr.nodes.iter().enumerate() {
            let t = fr.tangent[k];
            let raw = (0..sys.components)
                .map(|c| r[sys.dof(node, c)] * t[c])
                .sum::<f64>()
                / fr.weight[k];
            omega.push(raw.clamp(-fr.bound[k], fr.bound[k]));
        }
    }
    Ok(MixedSolution { u: u.clone(), lambda, omega })
}

/// Complementarity residuals of a mixed solution: `|b1(u,l) - g1(l)|` and
/// `|b2(u,w) - g2(w) + j(u)|` with the lumped pairings.
pub fn complementarity_residuals(sys: &DiscreteSystem, mixed: &MixedSolution) -> (f64, f64) {
    let u = &mixed.u;
    let mut r1 = 0.0;
    if let Some(nc) = &sys.normal {
        for (k, &node) in nc.nodes.iter().enumerate() {
            let val = if nc.on_boundary {
                let n = nc.normal[k];
                (0..sys.components).map(|c| u.at(node, c) * n[c]).sum::<f64>()
            } else {
                u.at(node, 0)
            };
            r1 += nc.weight[k] * mixed.lambda[k] * (val - nc.gap[k]);
        }
    }
    let mut r2 = 0.0;
    if let Some(fr) = &sys.friction {
        for (k, &node) in fr.nodes.iter().enumerate() {
            let t = fr.tangent[k];
            let ut = (0..sys.components).map(|c| u.at(node, c) * t[c]).sum::<f64>();
            r2 += fr.weight[k] * (mixed.omega[k] * ut + fr.bound[k] * ut.abs());
        }
    }
    (r1.abs(), r2.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::VecExpr;
    use crate::mesh::{BoundaryTag, Geometry, TagRule};
    use crate::system::{assemble, problems, Material, ProblemKind, ProblemSpec};
    use crate::expr::Expr;

    #[test]
    fn poisson_1d_nodal_exactness() {
        let p = problems::linear_poisson_1d("1").unwrap();
        let m = p.build_mesh(8).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let u = solve_unconstrained(&sys).unwrap();
        for (i, v) in m.vertices.iter().enumerate() {
            let exact = v[0] * (1.0 - v[0]) / 2.0;
            assert!((u.at(i, 0) - exact).abs() < 1e-13);
        }
        assert!((u.eval(&m, [0.5, 0.0], 0).unwrap() - 0.125).abs() < 1e-13);
    }

    #[test]
    fn zero_data_gives_zero() {
        let p = problems::linear_poisson_1d("0").unwrap();
        let m = p.build_mesh(5).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let u = solve_unconstrained(&sys).unwrap();
        assert!(u.values().iter().all(|&v| v.abs() < 1e-14));
    }

    #[test]
    fn elasticity_patch_test_affine_dirichlet() {
        let p = ProblemSpec {
            kind: ProblemKind::LinearElasticity,
            geometry: Geometry::Rectangle { width: 1.0, height: 1.0 },
            material: Material::Elastic { lambda: 2.0, mu: 1.0 },
            body_force: VecExpr::constant(&[0.0, 0.0]),
            traction: VecExpr::constant(&[0.0, 0.0]),
            dirichlet: VecExpr::parse("(0.1*x - 0.2*y, 0.3*x + 0.05*y)").unwrap(),
            obstacle: VecExpr::constant(&[0.0]),
            friction_bound: Expr::constant(0.0),
            orientation: crate::system::ConeOrientation::LowerBound,
            tags: TagRule::all_dirichlet(),
        };
        let m = p.build_mesh(4).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let u = solve_unconstrained(&sys).unwrap();
        for (i, v) in m.vertices.iter().enumerate() {
            let ex = [0.1 * v[0] - 0.2 * v[1], 0.3 * v[0] + 0.05 * v[1]];
            assert!((u.at(i, 0) - ex[0]).abs() < 1e-10);
            assert!((u.at(i, 1) - ex[1]).abs() < 1e-10);
        }
    }

    #[test]
    fn galerkin_residual_vanishes() {
        let p = problems::linear_poisson_1d("1").unwrap();
        let m = p.build_mesh(16).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let u = solve_unconstrained(&sys).unwrap();
        let au = sys.stiffness.matvec(u.values());
        for i in 1..m.n_vertices() - 1 {
            assert!((au[i] - sys.load[i]).abs() <= 1e-10 * (1.0 + sys.load[i].abs()));
        }
    }

    #[test]
    fn obstacle_1d_benchmark_active_set() {
        let p = problems::obstacle_1d_benchmark();
        let m = p.build_mesh(256).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let sol = solve_primal(&sys, SolverOptions::default()).unwrap();
        // coincidence set approx [-(2-sqrt(3)), 2-sqrt(3)]
        let x0 = 2.0 - 3.0f64.sqrt();
        let h = 4.0 / 256.0;
        for &node in &sol.active_set_contact {
            let x = m.vertices[node][0];
            assert!(x.abs() <= x0 + 2.0 * h, "active node outside band: {x}");
        }
        // nodes well inside the band are active
        for (i, v) in m.vertices.iter().enumerate() {
            if v[0].abs() < x0 - 2.0 * h {
                assert!(sol.active_set_contact.contains(&i), "missing active node at {}", v[0]);
            }
        }
        // feasibility
        for (i, v) in m.vertices.iter().enumerate() {
            let psi = 1.0 - v[0] * v[0];
            if i != 0 && i != m.n_vertices() - 1 {
                assert!(sol.u.at(i, 0) >= psi - 1e-12);
            }
        }
        // energy monotone
        for w in sol.energy_history.windows(2) {
            assert!(w[1] <= w[0] + 1e-12);
        }
    }

    #[test]
    fn inactive_obstacle_reduces_to_linear() {
        let p = problems::obstacle_1d(-2.0, 2.0, "0", "-1000000").unwrap();
        let m = p.build_mesh(32).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let sol = solve_primal(&sys, SolverOptions::default()).unwrap();
        let lin = solve_unconstrained(&sys).unwrap();
        for (a, b) in sol.u.values().iter().zip(lin.values()) {
            assert!((a - b).abs() <= 1e-10);
        }
        let mixed = extract_multipliers(&sys, &sol.u).unwrap();
        assert!(mixed.lambda.iter().all(|&l| l.abs() < 1e-10));
    }

    #[test]
    fn obstacle_multiplier_complementarity() {
        let p = problems::obstacle_1d_benchmark();
        let m = p.build_mesh(64).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let sol = solve_primal(&sys, SolverOptions::default()).unwrap();
        let mixed = extract_multipliers(&sys, &sol.u).unwrap();
        let nc = sys.normal.as_ref().unwrap();
        for (k, &node) in nc.nodes.iter().enumerate() {
            let active = sol.active_set_contact.contains(&node);
            if active {
                assert!(mixed.lambda[k] >= 0.0);
            } else {
                assert!(mixed.lambda[k].abs() <= 1e-9);
            }
        }
        let (r1, r2) = complementarity_residuals(&sys, &mixed);
        assert!(r1 <= 1e-10);
        assert!(r2 <= 1e-10);
    }

    /// Uniform shear strip with Neumann sides: both friction regimes have
    /// exact affine solutions, which P1 elements reproduce. `tau` is the
    /// uniform shear stress of the expected regime (`mu*delta` for stick,
    /// `s` for slip), prescribed as matching side tractions.
    fn shear_strip(delta: f64, s: f64, tau: f64) -> ProblemSpec {
        ProblemSpec {
            kind: ProblemKind::TrescaContact2d,
            geometry: Geometry::Rectangle { width: 1.0, height: 1.0 },
            material: Material::Elastic { lambda: 1.0, mu: 1.0 },
            body_force: VecExpr::constant(&[0.0, 0.0]),
            traction: VecExpr::parse(&format!("(0, (2*x-1)*{tau})")).unwrap(),
            dirichlet: VecExpr::parse(&format!("({delta}, 0)")).unwrap(),
            obstacle: VecExpr::constant(&[0.0]),
            friction_bound: Expr::constant(s),
            orientation: crate::system::ConeOrientation::Equality,
            tags: TagRule {
                bottom: BoundaryTag::Contact,
                top: BoundaryTag::Dirichlet,
                left: BoundaryTag::Neumann,
                right: BoundaryTag::Neumann,
            },
        }
    }

    #[test]
    fn tresca_all_stick_when_bound_large() {
        // driving shear mu*delta = 0.4 < s = 1
        let p = shear_strip(0.4, 1.0, 0.4);
        let m = p.build_mesh(8).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let sol = solve_primal(&sys, SolverOptions::default()).unwrap();
        let fr = sys.friction.as_ref().unwrap();
        assert_eq!(sol.active_set_stick.len(), fr.nodes.len());
        // exact solution u = (delta * y, 0)
        for (i, v) in m.vertices.iter().enumerate() {
            assert!((sol.u.at(i, 0) - 0.4 * v[1]).abs() < 1e-10);
            assert!(sol.u.at(i, 1).abs() < 1e-10);
        }
    }

    #[test]
    fn tresca_all_slip_when_shear_exceeds_bound() {
        // driving shear mu*delta = 1.0 > s = 0.25; slip state has uniform
        // shear equal to the bound
        let p = shear_strip(1.0, 0.25, 0.25);
        let m = p.build_mesh(8).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let sol = solve_primal(&sys, SolverOptions::default()).unwrap();
        assert!(sol.active_set_stick.is_empty(), "expected all slip");
        let mixed = extract_multipliers(&sys, &sol.u).unwrap();
        let fr = sys.friction.as_ref().unwrap();
        // slip solution: sigma_t = s, u_t(0) = delta - s/mu > 0, omega = -s
        for (k, &node) in fr.nodes.iter().enumerate() {
            let ut = sol.u.at(node, 0);
            assert!((ut - (1.0 - 0.25)).abs() < 1e-9, "u_t = {ut}");
            assert!((mixed.omega[k] + 0.25).abs() < 1e-9, "omega = {}", mixed.omega[k]);
            assert!(mixed.omega[k] * ut <= 0.0, "slip opposes traction");
        }
        let (r1, r2) = complementarity_residuals(&sys, &mixed);
        assert!(r1 <= 1e-10 && r2 <= 1e-10, "r1={r1} r2={r2}");
    }

    #[test]
    fn variational_inequality_and_optimality() {
        use rand::prelude::*;
        let p = problems::obstacle_1d_benchmark();
        let m = p.build_mesh(48).unwrap();
        let sys = assemble(&p, &m).unwrap();
        let sol = solve_primal(&sys, SolverOptions::default()).unwrap();
        let e_star = discrete_energy(&sys, sol.u.values());
        let nc = sys.normal.as_ref().unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(17);
        for _ in 0..100 {
            // random feasible competitor
            let mut v = sol.u.values().to_vec();
            for (k, &node) in nc.nodes.iter().enumerate() {
                let dof = sys.dof(node, 0);
                v[dof] = nc.gap[k] + (v[dof] - nc.gap[k]).max(0.0) + rng.gen_range(0.0..0.5);
            }
            // energy optimality
            assert!(discrete_energy(&sys, &v) >= e_star - 1e-9);
            // weak form: a(u, v-u) >= l(v-u) (j = 0 here)
            let au = sys.stiffness.matvec(sol.u.values());
            let lhs: f64 = au
                .iter()
                .zip(&v)
                .zip(sol.u.values())
                .map(|((a, vi), ui)| a * (vi - ui))
                .sum();
            let rhs: f64 = sys
                .load
                .iter()
                .zip(&v)
                .zip(sol.u.values())
                .map(|((l, vi), ui)| l * (vi - ui))
                .sum();
            assert!(lhs - rhs >= -1e-8 * (1.0 + lhs.abs()));
        }
    }
}
