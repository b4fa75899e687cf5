//! Minimal P1 mesh core: uniform interval and rectangle meshes, boundary
//! tagging, facet topology for flux spaces, plain-text import/export.

use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    Interval { a: f64, b: f64 },
    Rectangle { width: f64, height: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryTag {
    Dirichlet,
    Neumann,
    Contact,
}

impl BoundaryTag {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dirichlet" => Ok(Self::Dirichlet),
            "neumann" => Ok(Self::Neumann),
            "contact" => Ok(Self::Contact),
            other => Err(Error::InvalidInput(format!("unknown boundary tag {other}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Dirichlet => "dirichlet",
            Self::Neumann => "neumann",
            Self::Contact => "contact",
        }
    }
}

/// Boundary tagging rule, one tag per geometry side.
#[derive(Debug, Clone, Copy)]
pub struct TagRule {
    pub left: BoundaryTag,
    pub right: BoundaryTag,
    /// Unused in 1D.
    pub bottom: BoundaryTag,
    /// Unused in 1D.
    pub top: BoundaryTag,
}

impl TagRule {
    pub fn all_dirichlet() -> Self {
        TagRule {
            left: BoundaryTag::Dirichlet,
            right: BoundaryTag::Dirichlet,
            bottom: BoundaryTag::Dirichlet,
            top: BoundaryTag::Dirichlet,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BoundaryFacet {
    /// In 1D both entries name the same vertex.
    pub vertices: [usize; 2],
    pub cell: usize,
    pub tag: BoundaryTag,
    pub outward_normal: [f64; 2],
    /// Facet measure; 1.0 for a 1D endpoint.
    pub length: f64,
}

/// Structured origin of the mesh, used for nested refinement and point
/// location. Imported meshes are `General`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Structure {
    Interval { a: f64, b: f64, n: usize },
    Rectangle { width: f64, height: f64, nx: usize, ny: usize },
    General,
}

#[derive(Debug, Clone)]
pub struct Mesh {
    pub dimension: usize,
    pub vertices: Vec<[f64; 2]>,
    /// Flat cell connectivity, `dimension + 1` vertices per cell.
    cell_vertices: Vec<usize>,
    pub boundary: Vec<BoundaryFacet>,
    pub h_max: f64,
    pub structure: Structure,
    fingerprint: u64,
}

impl Mesh {
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arity(&self) -> usize {
        self.dimension + 1
    }

    pub fn n_cells(&self) -> usize {
        self.cell_vertices.len() / self.arity()
    }

    pub fn cell(&self, i: usize) -> &[usize] {
        let a = self.arity();
        &self.cell_vertices[i * a..(i + 1) * a]
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Cell measure (length or area).
    pub fn cell_measure(&self, i: usize) -> f64 {
        let c = self.cell(i);
        if self.dimension == 1 {
            self.vertices[c[1]][0] - self.vertices[c[0]][0]
        } else {
            let [p0, p1, p2] = [self.vertices[c[0]], self.vertices[c[1]], self.vertices[c[2]]];
            0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]))
        }
    }

    /// P1 basis gradients on cell `i`, one per cell vertex.
    pub fn cell_gradients(&self, i: usize) -> Vec<[f64; 2]> {
        let c = self.cell(i);
        if self.dimension == 1 {
            let h = self.vertices[c[1]][0] - self.vertices[c[0]][0];
            vec![[-1.0 / h, 0.0], [1.0 / h, 0.0]]
        } else {
            let [p0, p1, p2] = [self.vertices[c[0]], self.vertices[c[1]], self.vertices[c[2]]];
            let det = (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]);
            vec![
                [(p1[1] - p2[1]) / det, (p2[0] - p1[0]) / det],
                [(p2[1] - p0[1]) / det, (p0[0] - p2[0]) / det],
                [(p0[1] - p1[1]) / det, (p1[0] - p0[0]) / det],
            ]
        }
    }

    pub fn cell_centroid(&self, i: usize) -> [f64; 2] {
        let c = self.cell(i);
        let mut x = [0.0, 0.0];
        for &v in c {
            x[0] += self.vertices[v][0];
            x[1] += self.vertices[v][1];
        }
        let a = self.arity() as f64;
        [x[0] / a, x[1] / a]
    }

    /// Locate the cell containing `p` (structured meshes only) and return
    /// `(cell, barycentric coordinates)`.
    pub fn locate(&self, p: [f64; 2]) -> Result<(usize, Vec<f64>)> {
        match self.structure {
            Structure::Interval { a, b, n } => {
                let h = (b - a) / n as f64;
                let mut k = ((p[0] - a) / h).floor() as isize;
                k = k.clamp(0, n as isize - 1);
                let k = k as usize;
                let x0 = self.vertices[self.cell(k)[0]][0];
                let t = ((p[0] - x0) / h).clamp(0.0, 1.0);
                Ok((k, vec![1.0 - t, t]))
            }
            Structure::Rectangle { width, height, nx, ny } => {
                let dx = width / nx as f64;
                let dy = height / ny as f64;
                let i = ((p[0] / dx).floor() as isize).clamp(0, nx as isize - 1) as usize;
                let j = ((p[1] / dy).floor() as isize).clamp(0, ny as isize - 1) as usize;
                let xl = i as f64 * dx;
                let yl = j as f64 * dy;
                let s = ((p[0] - xl) / dx).clamp(0.0, 1.0);
                let t = ((p[1] - yl) / dy).clamp(0.0, 1.0);
                // diagonal v00 -> v11 splits the quad; tri A below (s >= t)
                let quad = j * nx + i;
                if s >= t {
                    // vertices v00, v10, v11; barycentric wrt those
                    Ok((2 * quad, vec![1.0 - s, s - t, t]))
                } else {
                    // vertices v00, v11, v01
                    Ok((2 * quad + 1, vec![1.0 - t, s, t - s]))
                }
            }
            Structure::General => Err(Error::InvalidInput(
                "point location requires a structured mesh".into(),
            )),
        }
    }

    /// Export as a plain-text columnar mesh file:
    ///
    /// ```text
    /// gcre-mesh <dim> <n_vertices> <n_cells> <n_boundary_facets>
    /// v <x> <y>
    /// c <v0> <v1> [<v2>]
    /// b <v0> <v1> <tag>
    /// ```
    pub fn export_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "gcre-mesh {} {} {} {}",
            self.dimension,
            self.n_vertices(),
            self.n_cells(),
            self.boundary.len()
        );
        for v in &self.vertices {
            let _ = writeln!(s, "v {:.17e} {:.17e}", v[0], v[1]);
        }
        for i in 0..self.n_cells() {
            let c = self.cell(i);
            let _ = write!(s, "c");
            for &v in c {
                let _ = write!(s, " {v}");
            }
            let _ = writeln!(s);
        }
        for b in &self.boundary {
            let _ = writeln!(s, "b {} {} {}", b.vertices[0], b.vertices[1], b.tag.name());
        }
        s
    }

    pub fn export_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.export_text())?;
        Ok(())
    }

    /// Import a mesh written by [`Mesh::export_text`]. Boundary adjacency
    /// and normals are rebuilt; the result has `Structure::General`.
    pub fn import_text(text: &str) -> Result<Mesh> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse { line: 1, msg: "empty mesh file".into() })?;
        let head: Vec<&str> = header.split_whitespace().collect();
        if head.len() != 5 || head[0] != "gcre-mesh" {
            return Err(Error::Parse { line: 1, msg: "bad mesh header".into() });
        }
        let parse_usize = |s: &str, line: usize| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("bad integer {s}") })
        };
        let dim = parse_usize(head[1], 1)?;
        let nv = parse_usize(head[2], 1)?;
        let nc = parse_usize(head[3], 1)?;
        let nb = parse_usize(head[4], 1)?;
        let mut vertices = Vec::with_capacity(nv);
        let mut cell_vertices = Vec::with_capacity(nc * (dim + 1));
        let mut raw_boundary: Vec<([usize; 2], BoundaryTag)> = Vec::with_capacity(nb);
        for (ln, line) in lines {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks[0] {
                "v" => {
                    let x: f64 = toks[1].parse().map_err(|_| Error::Parse {
                        line: ln + 1,
                        msg: "bad vertex coordinate".into(),
                    })?;
                    let y: f64 = toks.get(2).map_or(Ok(0.0), |t| {
                        t.parse().map_err(|_| Error::Parse {
                            line: ln + 1,
                            msg: "bad vertex coordinate".into(),
                        })
                    })?;
                    vertices.push([x, y]);
                }
                "c" => {
                    for t in &toks[1..=dim + 1] {
                        cell_vertices.push(parse_usize(t, ln + 1)?);
                    }
                }
                "b" => {
                    let v0 = parse_usize(toks[1], ln + 1)?;
                    let v1 = parse_usize(toks[2], ln + 1)?;
                    let tag = BoundaryTag::parse(toks[3])?;
                    raw_boundary.push(([v0, v1], tag));
                }
                other => {
                    return Err(Error::Parse {
                        line: ln + 1,
                        msg: format!("unknown record {other}"),
                    })
                }
            }
        }
        if vertices.len() != nv || cell_vertices.len() != nc * (dim + 1) || raw_boundary.len() != nb
        {
            return Err(Error::Parse { line: 1, msg: "record counts do not match header".into() });
        }
        let mut mesh = Mesh {
            dimension: dim,
            vertices,
            cell_vertices,
            boundary: Vec::new(),
            h_max: 0.0,
            structure: Structure::General,
            fingerprint: 0,
        };
        mesh.validate_cells()?;
        mesh.h_max = mesh.compute_h_max();
        mesh.rebuild_boundary(&raw_boundary)?;
        mesh.fingerprint = mesh.compute_fingerprint();
        Ok(mesh)
    }

    pub fn import_file(path: &Path) -> Result<Mesh> {
        Mesh::import_text(&std::fs::read_to_string(path)?)
    }

    fn validate_cells(&self) -> Result<()> {
        for i in 0..self.n_cells() {
            if self.cell_measure(i) <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "cell {i} is degenerate or negatively oriented"
                )));
            }
        }
        Ok(())
    }

    fn compute_h_max(&self) -> f64 {
        let mut h: f64 = 0.0;
        for i in 0..self.n_cells() {
            let c = self.cell(i);
            for a in 0..c.len() {
                for b in a + 1..c.len() {
                    let pa = self.vertices[c[a]];
                    let pb = self.vertices[c[b]];
                    h = h.max(((pa[0] - pb[0]).powi(2) + (pa[1] - pb[1]).powi(2)).sqrt());
                }
            }
        }
        h
    }

    fn rebuild_boundary(&mut self, raw: &[([usize; 2], BoundaryTag)]) -> Result<()> {
        let topo = FacetTopology::build(self);
        let mut boundary = Vec::with_capacity(raw.len());
        for &(vts, tag) in raw {
            let key = if self.dimension == 1 {
                (vts[0], vts[0])
            } else {
                (vts[0].min(vts[1]), vts[0].max(vts[1]))
            };
            let f = topo
                .facets
                .iter()
                .find(|f| {
                    let k = (f.vertices[0].min(f.vertices[1]), f.vertices[0].max(f.vertices[1]));
                    k == key
                })
                .ok_or_else(|| {
                    Error::InvalidInput(format!("boundary facet {vts:?} not found in mesh"))
                })?;
            if f.left.is_some() && f.right.is_some() {
                return Err(Error::InvalidInput(format!("facet {vts:?} is interior")));
            }
            let cell = f.left.or(f.right).unwrap();
            let sign = if f.left.is_some() { 1.0 } else { -1.0 };
            boundary.push(BoundaryFacet {
                vertices: vts,
                cell,
                tag,
                outward_normal: [sign * f.normal[0], sign * f.normal[1]],
                length: f.length,
            });
        }
        self.boundary = boundary;
        Ok(())
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut mix = |x: u64| {
            h ^= x;
            h = h.wrapping_mul(0x100000001b3);
        };
        mix(self.dimension as u64);
        mix(self.n_vertices() as u64);
        mix(self.n_cells() as u64);
        mix(self.boundary.len() as u64);
        if let Some(v) = self.vertices.first() {
            mix(v[0].to_bits());
            mix(v[1].to_bits());
        }
        if let Some(v) = self.vertices.last() {
            mix(v[0].to_bits());
            mix(v[1].to_bits());
        }
        h
    }
}

/// Build a uniform mesh of the geometry with the given subdivisions per
/// side and boundary tagging rule.
///
/// Uniform refinement by an integer factor reproduces all parent vertices.
pub fn build_mesh(geometry: Geometry, subdivisions: usize, tags: TagRule) -> Result<Mesh> {
    if subdivisions == 0 {
        return Err(Error::InvalidInput("subdivisions must be >= 1".into()));
    }
    match geometry {
        Geometry::Interval { a, b } => {
            if !(a < b) {
                return Err(Error::InvalidInput("interval needs a < b".into()));
            }
            build_interval(a, b, subdivisions, tags)
        }
        Geometry::Rectangle { width, height } => {
            if !(width > 0.0 && height > 0.0) {
                return Err(Error::InvalidInput("rectangle needs positive sides".into()));
            }
            let ny = ((subdivisions as f64) * height / width).round().max(1.0) as usize;
            build_rectangle(width, height, subdivisions, ny, tags)
        }
    }
}

fn build_interval(a: f64, b: f64, n: usize, tags: TagRule) -> Result<Mesh> {
    let h = (b - a) / n as f64;
    let vertices: Vec<[f64; 2]> = (0..=n)
        .map(|i| {
            let t = i as f64 / n as f64;
            [a + (b - a) * t, 0.0]
        })
        .collect();
    let mut cell_vertices = Vec::with_capacity(2 * n);
    for i in 0..n {
        cell_vertices.push(i);
        cell_vertices.push(i + 1);
    }
    let boundary = vec![
        BoundaryFacet {
            vertices: [0, 0],
            cell: 0,
            tag: tags.left,
            outward_normal: [-1.0, 0.0],
            length: 1.0,
        },
        BoundaryFacet {
            vertices: [n, n],
            cell: n - 1,
            tag: tags.right,
            outward_normal: [1.0, 0.0],
            length: 1.0,
        },
    ];
    let mut mesh = Mesh {
        dimension: 1,
        vertices,
        cell_vertices,
        boundary,
        h_max: h,
        structure: Structure::Interval { a, b, n },
        fingerprint: 0,
    };
    mesh.fingerprint = mesh.compute_fingerprint();
    Ok(mesh)
}

pub fn build_rectangle(width: f64, height: f64, nx: usize, ny: usize, tags: TagRule) -> Result<Mesh> {
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidInput("subdivisions must be >= 1".into()));
    }
    let dx = width / nx as f64;
    let dy = height / ny as f64;
    let vid = |i: usize, j: usize| j * (nx + 1) + i;
    let mut vertices = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        for i in 0..=nx {
            vertices.push([i as f64 * dx, j as f64 * dy]);
        }
    }
    let mut cell_vertices = Vec::with_capacity(6 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            let (v00, v10, v11, v01) = (vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1));
            // lower triangle (contains the bottom edge)
            cell_vertices.extend_from_slice(&[v00, v10, v11]);
            // upper triangle (contains the top edge)
            cell_vertices.extend_from_slice(&[v00, v11, v01]);
        }
    }
    let mut boundary = Vec::new();
    for i in 0..nx {
        boundary.push(BoundaryFacet {
            vertices: [vid(i, 0), vid(i + 1, 0)],
            cell: 2 * i,
            tag: tags.bottom,
            outward_normal: [0.0, -1.0],
            length: dx,
        });
    }
    for i in 0..nx {
        boundary.push(BoundaryFacet {
            vertices: [vid(i, ny), vid(i + 1, ny)],
            cell: 2 * ((ny - 1) * nx + i) + 1,
            tag: tags.top,
            outward_normal: [0.0, 1.0],
            length: dx,
        });
    }
    for j in 0..ny {
        boundary.push(BoundaryFacet {
            vertices: [vid(0, j), vid(0, j + 1)],
            cell: 2 * (j * nx) + 1,
            tag: tags.left,
            outward_normal: [-1.0, 0.0],
            length: dy,
        });
        boundary.push(BoundaryFacet {
            vertices: [vid(nx, j), vid(nx, j + 1)],
            cell: 2 * (j * nx + nx - 1),
            tag: tags.right,
            outward_normal: [1.0, 0.0],
            length: dy,
        });
    }
    let mut mesh = Mesh {
        dimension: 2,
        vertices,
        cell_vertices,
        boundary,
        h_max: (dx * dx + dy * dy).sqrt(),
        structure: Structure::Rectangle { width, height, nx, ny },
        fingerprint: 0,
    };
    mesh.validate_cells()?;
    mesh.fingerprint = mesh.compute_fingerprint();
    Ok(mesh)
}

/// Rebuild the mesh with `factor` times more subdivisions per side.
/// The refined mesh is nested: every parent vertex is reproduced.
pub fn refine(mesh: &Mesh, factor: usize) -> Result<Mesh> {
    if factor == 0 {
        return Err(Error::InvalidInput("refinement factor must be >= 1".into()));
    }
    let tags = tag_rule_of(mesh)?;
    match mesh.structure {
        Structure::Interval { a, b, n } => build_interval(a, b, n * factor, tags),
        Structure::Rectangle { width, height, nx, ny } => {
            build_rectangle(width, height, nx * factor, ny * factor, tags)
        }
        Structure::General => Err(Error::InvalidInput(
            "refinement requires a structured mesh".into(),
        )),
    }
}

/// Recover the side tag rule of a structured mesh from its boundary facets.
pub fn tag_rule_of(mesh: &Mesh) -> Result<TagRule> {
    let mut rule = TagRule::all_dirichlet();
    for b in &mesh.boundary {
        let n = b.outward_normal;
        if n[0] < -0.5 {
            rule.left = b.tag;
        } else if n[0] > 0.5 {
            rule.right = b.tag;
        } else if n[1] < -0.5 {
            rule.bottom = b.tag;
        } else {
            rule.top = b.tag;
        }
    }
    Ok(rule)
}

/// A mesh facet (vertex in 1D, edge in 2D) with cell adjacency. The unit
/// normal points from `left` to `right`; boundary facets store the interior
/// cell on one side and the outward orientation is recovered from which
/// side is present.
#[derive(Debug, Clone, Copy)]
pub struct Facet {
    pub vertices: [usize; 2],
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub normal: [f64; 2],
    pub length: f64,
    /// Index into `mesh.boundary` when this facet lies on the boundary.
    pub boundary: Option<usize>,
}

/// Facet enumeration with per-cell incidence signs: `sign = +1` when the
/// facet normal is outward for that cell.
#[derive(Debug, Clone)]
pub struct FacetTopology {
    pub facets: Vec<Facet>,
    /// Per cell: (facet index, sign, opposite-vertex position in the cell).
    pub cell_facets: Vec<Vec<(usize, f64, usize)>>,
}

impl FacetTopology {
    pub fn build(mesh: &Mesh) -> Self {
        if mesh.dimension == 1 {
            Self::build_1d(mesh)
        } else {
            Self::build_2d(mesh)
        }
    }

    fn build_1d(mesh: &Mesh) -> Self {
        let n = mesh.n_cells();
        let mut facets = Vec::with_capacity(n + 1);
        for v in 0..=n {
            let left = if v > 0 { Some(v - 1) } else { None };
            let right = if v < n { Some(v) } else { None };
            let boundary = mesh
                .boundary
                .iter()
                .position(|b| b.vertices[0] == v && b.vertices[1] == v);
            facets.push(Facet {
                vertices: [v, v],
                left,
                right,
                normal: [1.0, 0.0],
                length: 1.0,
                boundary,
            });
        }
        let mut cell_facets = Vec::with_capacity(n);
        for k in 0..n {
            // facet k is the left endpoint (inward normal), k+1 the right
            cell_facets.push(vec![(k, -1.0, 1), (k + 1, 1.0, 0)]);
        }
        Self { facets, cell_facets }
    }

    fn build_2d(mesh: &Mesh) -> Self {
        use std::collections::HashMap;
        let mut key_to_facet: HashMap<(usize, usize), usize> = HashMap::new();
        let mut facets: Vec<Facet> = Vec::new();
        let mut adjacency: Vec<Vec<(usize, usize)>> = Vec::new(); // facet -> (cell, opp position)
        for c in 0..mesh.n_cells() {
            let cv = mesh.cell(c);
            for opp in 0..3 {
                let a = cv[(opp + 1) % 3];
                let b = cv[(opp + 2) % 3];
                let key = (a.min(b), a.max(b));
                let idx = *key_to_facet.entry(key).or_insert_with(|| {
                    let pa = mesh.vertices[key.0];
                    let pb = mesh.vertices[key.1];
                    let d = [pb[0] - pa[0], pb[1] - pa[1]];
                    let len = (d[0] * d[0] + d[1] * d[1]).sqrt();
                    facets.push(Facet {
                        vertices: [key.0, key.1],
                        left: None,
                        right: None,
                        normal: [d[1] / len, -d[0] / len],
                        length: len,
                        boundary: None,
                    });
                    adjacency.push(Vec::new());
                    facets.len() - 1
                });
                adjacency[idx].push((c, opp));
            }
        }
        // assign sides and boundary indices
        let mut boundary_lookup: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, b) in mesh.boundary.iter().enumerate() {
            let key = (b.vertices[0].min(b.vertices[1]), b.vertices[0].max(b.vertices[1]));
            boundary_lookup.insert(key, i);
        }
        let mut cell_facets: Vec<Vec<(usize, f64, usize)>> = vec![Vec::new(); mesh.n_cells()];
        for (fi, cells) in adjacency.iter().enumerate() {
            let f = &mut facets[fi];
            let mid = midpoint(mesh, f.vertices);
            for &(c, _) in cells {
                let cen = mesh.cell_centroid(c);
                let out = f.normal[0] * (mid[0] - cen[0]) + f.normal[1] * (mid[1] - cen[1]);
                if out > 0.0 {
                    f.left = Some(c);
                } else {
                    f.right = Some(c);
                }
            }
            if cells.len() == 1 {
                // boundary facet: force outward normal, interior cell on the left
                if f.left.is_none() {
                    f.normal = [-f.normal[0], -f.normal[1]];
                    f.left = f.right.take();
                }
                let key = (f.vertices[0], f.vertices[1]);
                f.boundary = boundary_lookup.get(&key).copied();
            }
            let f = facets[fi];
            for &(c, opp) in cells {
                let sign = if Some(c) == f.left { 1.0 } else { -1.0 };
                cell_facets[c].push((fi, sign, opp));
            }
        }
        Self { facets, cell_facets }
    }
}

fn midpoint(mesh: &Mesh, v: [usize; 2]) -> [f64; 2] {
    let a = mesh.vertices[v[0]];
    let b = mesh.vertices[v[1]];
    [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_mesh_basics() {
        let m = build_mesh(Geometry::Interval { a: 0.0, b: 1.0 }, 2, TagRule::all_dirichlet())
            .unwrap();
        assert_eq!(m.n_vertices(), 3);
        assert_eq!(m.n_cells(), 2);
        assert_eq!(m.vertices[1][0], 0.5);
        assert_eq!(m.h_max, 0.5);
    }

    #[test]
    fn unit_square_partition_of_areas() {
        let m = build_mesh(
            Geometry::Rectangle { width: 1.0, height: 1.0 },
            2,
            TagRule::all_dirichlet(),
        )
        .unwrap();
        assert_eq!(m.n_vertices(), 9);
        assert_eq!(m.n_cells(), 8);
        let total: f64 = (0..m.n_cells()).map(|i| m.cell_measure(i)).sum();
        assert!((total - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn refine_quarters_h_max() {
        let m = build_mesh(
            Geometry::Rectangle { width: 1.0, height: 1.0 },
            4,
            TagRule::all_dirichlet(),
        )
        .unwrap();
        let m2 = refine(&refine(&m, 2).unwrap(), 2).unwrap();
        assert!((m2.h_max - m.h_max / 4.0).abs() <= 1e-15);
        // nested: every parent vertex reappears
        for v in &m.vertices {
            assert!(m2
                .vertices
                .iter()
                .any(|w| (w[0] - v[0]).abs() + (w[1] - v[1]).abs() < 1e-14));
        }
    }

    #[test]
    fn zero_subdivisions_rejected() {
        assert!(build_mesh(Geometry::Interval { a: 0.0, b: 1.0 }, 0, TagRule::all_dirichlet())
            .is_err());
    }

    #[test]
    fn facet_topology_consistent() {
        let m = build_mesh(
            Geometry::Rectangle { width: 1.0, height: 1.0 },
            2,
            TagRule::all_dirichlet(),
        )
        .unwrap();
        let topo = FacetTopology::build(&m);
        assert_eq!(topo.facets.len(), 16);
        let nb = topo.facets.iter().filter(|f| f.right.is_none()).count();
        assert_eq!(nb, 8);
        // every boundary facet resolves to a tagged mesh facet
        for f in &topo.facets {
            if f.right.is_none() {
                assert!(f.boundary.is_some());
            }
            // signed incidence: divergence of the constant field (1,0)
            // integrates to zero over each cell against facet normals
        }
        for c in 0..m.n_cells() {
            let mut sum = 0.0;
            for &(fi, sign, _) in &topo.cell_facets[c] {
                let f = &topo.facets[fi];
                sum += sign * f.normal[0] * f.length;
            }
            assert!(sum.abs() < 1e-14, "divergence theorem violated on cell {c}");
        }
    }

    #[test]
    fn import_export_roundtrip() {
        let m = build_mesh(
            Geometry::Rectangle { width: 2.0, height: 1.0 },
            3,
            TagRule {
                bottom: BoundaryTag::Contact,
                top: BoundaryTag::Dirichlet,
                left: BoundaryTag::Neumann,
                right: BoundaryTag::Neumann,
            },
        )
        .unwrap();
        let text = m.export_text();
        let m2 = Mesh::import_text(&text).unwrap();
        assert_eq!(m.n_vertices(), m2.n_vertices());
        assert_eq!(m.n_cells(), m2.n_cells());
        assert_eq!(m.boundary.len(), m2.boundary.len());
        for (a, b) in m.boundary.iter().zip(&m2.boundary) {
            assert_eq!(a.tag, b.tag);
            assert_eq!(a.cell, b.cell);
            assert!((a.outward_normal[0] - b.outward_normal[0]).abs() < 1e-15);
        }
        assert_eq!(m.export_text(), m2.export_text());
    }

    #[test]
    fn locate_barycentric_eval() {
        let m = build_mesh(
            Geometry::Rectangle { width: 1.0, height: 1.0 },
            4,
            TagRule::all_dirichlet(),
        )
        .unwrap();
        let p = [0.3, 0.71];
        let (cell, bary) = m.locate(p).unwrap();
        let c = m.cell(cell);
        let mut x = [0.0, 0.0];
        for (w, &v) in bary.iter().zip(c) {
            x[0] += w * m.vertices[v][0];
            x[1] += w * m.vertices[v][1];
        }
        assert!((x[0] - p[0]).abs() < 1e-14 && (x[1] - p[1]).abs() < 1e-14);
    }
}
