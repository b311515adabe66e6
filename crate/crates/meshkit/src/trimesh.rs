use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use crate::MeshError;

/// Two nodes closer than this (in both coordinates) count as duplicates.
pub const DUPLICATE_NODE_TOL: f64 = 1e-12;

/// Unstructured triangle mesh with per-triangle material labels.
///
/// Triangles are positively oriented (counter-clockwise, signed area > 0).
#[derive(Debug, Clone, PartialEq)]
pub struct TriMesh {
    pub nodes: Vec<(f64, f64)>,
    pub triangles: Vec<[usize; 3]>,
    pub region_id: Vec<u32>,
    pub boundary_nodes: BTreeSet<usize>,
}

/// Material assignment for generated annulus sectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionRule {
    /// One material everywhere.
    Uniform,
    /// Two materials split by the sign of the centroid angle.
    AngularHalves,
    /// Radial bands, innermost first.
    Rings(u32),
}

impl TriMesh {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    /// Distinct region ids present, ascending.
    pub fn regions(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.region_id.iter().copied().collect();
        set.into_iter().collect()
    }

    #[inline]
    pub fn signed_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangles[t];
        let (xa, ya) = self.nodes[a];
        let (xb, yb) = self.nodes[b];
        let (xc, yc) = self.nodes[c];
        0.5 * ((xb - xa) * (yc - ya) - (xc - xa) * (yb - ya))
    }

    pub fn centroid(&self, t: usize) -> (f64, f64) {
        let [a, b, c] = self.triangles[t];
        let (xa, ya) = self.nodes[a];
        let (xb, yb) = self.nodes[b];
        let (xc, yc) = self.nodes[c];
        ((xa + xb + xc) / 3.0, (ya + yb + yc) / 3.0)
    }

    /// Full construction audit: index bounds, orientation, duplicate nodes,
    /// label count, nonempty boundary, finite coordinates.
    pub fn validate(&self) -> Result<(), MeshError> {
        if self.region_id.len() != self.triangles.len() {
            return Err(MeshError::Audit(format!(
                "{} region labels for {} triangles",
                self.region_id.len(),
                self.triangles.len()
            )));
        }
        if self.boundary_nodes.is_empty() {
            return Err(MeshError::Audit("no boundary nodes".into()));
        }
        for (i, &(x, y)) in self.nodes.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(MeshError::Audit(format!("node {i} not finite")));
            }
        }
        for (t, tri) in self.triangles.iter().enumerate() {
            for &n in tri {
                if n >= self.nodes.len() {
                    return Err(MeshError::Audit(format!(
                        "triangle {t} references node {n} of {}",
                        self.nodes.len()
                    )));
                }
            }
            if self.signed_area(t) <= 0.0 {
                return Err(MeshError::Audit(format!(
                    "triangle {t} not positively oriented (area {})",
                    self.signed_area(t)
                )));
            }
        }
        if let Some(&n) = self.boundary_nodes.iter().next_back() {
            if n >= self.nodes.len() {
                return Err(MeshError::Audit(format!("boundary node {n} out of range")));
            }
        }
        // Duplicate scan: sort by x, compare within the tolerance window.
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| self.nodes[a].0.total_cmp(&self.nodes[b].0));
        for (k, &i) in order.iter().enumerate() {
            for &j in order[k + 1..].iter() {
                if self.nodes[j].0 - self.nodes[i].0 > DUPLICATE_NODE_TOL {
                    break;
                }
                if (self.nodes[j].1 - self.nodes[i].1).abs() <= DUPLICATE_NODE_TOL {
                    return Err(MeshError::Audit(format!("duplicate nodes {i} and {j}")));
                }
            }
        }
        Ok(())
    }

    /// Serializes to the line-based text format: `v x y`, `t i j k region`,
    /// `b i`, with floats at 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# trimesh {} nodes {} triangles", self.n_nodes(), self.n_triangles());
        for &(x, y) in &self.nodes {
            let _ = writeln!(s, "v {x:.16e} {y:.16e}");
        }
        for (tri, &r) in self.triangles.iter().zip(&self.region_id) {
            let _ = writeln!(s, "t {} {} {} {}", tri[0], tri[1], tri[2], r);
        }
        for &b in &self.boundary_nodes {
            let _ = writeln!(s, "b {b}");
        }
        s
    }

    pub fn from_text(text: &str) -> Result<TriMesh, MeshError> {
        let mut nodes = Vec::new();
        let mut triangles = Vec::new();
        let mut region_id = Vec::new();
        let mut boundary_nodes = BTreeSet::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| MeshError::Parse { line: ln + 1, msg: msg.into() };
            match fields[0] {
                "v" if fields.len() == 3 => {
                    let x: f64 = fields[1].parse().map_err(|_| bad("bad x coordinate"))?;
                    let y: f64 = fields[2].parse().map_err(|_| bad("bad y coordinate"))?;
                    nodes.push((x, y));
                }
                "t" if fields.len() == 5 => {
                    let mut tri = [0usize; 3];
                    for (k, f) in fields[1..4].iter().enumerate() {
                        tri[k] = f.parse().map_err(|_| bad("bad node index"))?;
                    }
                    triangles.push(tri);
                    region_id.push(fields[4].parse().map_err(|_| bad("bad region id"))?);
                }
                "b" if fields.len() == 2 => {
                    boundary_nodes.insert(fields[1].parse().map_err(|_| bad("bad boundary index"))?);
                }
                _ => return Err(bad("unrecognized record")),
            }
        }
        let mesh = TriMesh { nodes, triangles, region_id, boundary_nodes };
        mesh.validate()?;
        Ok(mesh)
    }

    pub fn write_file(&self, path: &Path) -> Result<(), MeshError> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read_file(path: &Path) -> Result<TriMesh, MeshError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_text(&text)
    }
}

/// Triangulated annulus sector: radii `[r_inner, r_outer]`, half-angle pi/4
/// about the positive x axis, `2 * n_radial * n_angular` triangles, materials
/// assigned per `rule`.
pub fn make_trimesh_annulus_sector(
    n_radial: usize,
    n_angular: usize,
    r_inner: f64,
    r_outer: f64,
    rule: RegionRule,
) -> Result<TriMesh, MeshError> {
    if n_radial < 2 || n_angular < 4 {
        return Err(MeshError::InvalidDimension(format!(
            "annulus sector needs n_radial >= 2 and n_angular >= 4, got {n_radial}x{n_angular}"
        )));
    }
    if !(r_inner > 0.0) || !(r_outer > r_inner) || !r_outer.is_finite() {
        return Err(MeshError::InvalidGeometry(format!(
            "degenerate radii: inner {r_inner}, outer {r_outer}"
        )));
    }
    let half_angle = PI / 4.0;
    let node_at = |ir: usize, ia: usize| ir * (n_angular + 1) + ia;
    let mut nodes = Vec::with_capacity((n_radial + 1) * (n_angular + 1));
    for ir in 0..=n_radial {
        let r = r_inner + (r_outer - r_inner) * ir as f64 / n_radial as f64;
        for ia in 0..=n_angular {
            let th = -half_angle + 2.0 * half_angle * ia as f64 / n_angular as f64;
            nodes.push((r * th.cos(), r * th.sin()));
        }
    }

    let mut triangles = Vec::with_capacity(2 * n_radial * n_angular);
    for ir in 0..n_radial {
        for ia in 0..n_angular {
            let n00 = node_at(ir, ia);
            let n10 = node_at(ir + 1, ia);
            let n11 = node_at(ir + 1, ia + 1);
            let n01 = node_at(ir, ia + 1);
            triangles.push([n00, n10, n11]);
            triangles.push([n00, n11, n01]);
        }
    }

    let mesh_for_rule = |triangles: &[[usize; 3]], nodes: &[(f64, f64)]| -> Vec<u32> {
        triangles
            .iter()
            .map(|tri| {
                let cx = (nodes[tri[0]].0 + nodes[tri[1]].0 + nodes[tri[2]].0) / 3.0;
                let cy = (nodes[tri[0]].1 + nodes[tri[1]].1 + nodes[tri[2]].1) / 3.0;
                match rule {
                    RegionRule::Uniform => 0,
                    RegionRule::AngularHalves => {
                        if cy.atan2(cx) < 0.0 {
                            0
                        } else {
                            1
                        }
                    }
                    RegionRule::Rings(k) => {
                        let r = (cx * cx + cy * cy).sqrt();
                        let frac = (r - r_inner) / (r_outer - r_inner);
                        ((frac * k as f64) as u32).min(k - 1)
                    }
                }
            })
            .collect()
    };
    let region_id = mesh_for_rule(&triangles, &nodes);

    let mut boundary_nodes = BTreeSet::new();
    for ia in 0..=n_angular {
        boundary_nodes.insert(node_at(0, ia));
        boundary_nodes.insert(node_at(n_radial, ia));
    }
    for ir in 0..=n_radial {
        boundary_nodes.insert(node_at(ir, 0));
        boundary_nodes.insert(node_at(ir, n_angular));
    }

    let mesh = TriMesh { nodes, triangles, region_id, boundary_nodes };
    mesh.validate()?;
    Ok(mesh)
}

/// Uniform triangulation of the unit square, `2 * n * n` triangles, single
/// region. Useful as a reference geometry for convergence studies.
pub fn make_trimesh_unit_square(n: usize) -> Result<TriMesh, MeshError> {
    if n < 2 {
        return Err(MeshError::InvalidDimension(format!(
            "unit square triangulation needs n >= 2, got {n}"
        )));
    }
    let node_at = |i: usize, j: usize| j * (n + 1) + i;
    let h = 1.0 / n as f64;
    let mut nodes = Vec::with_capacity((n + 1) * (n + 1));
    for j in 0..=n {
        for i in 0..=n {
            nodes.push((i as f64 * h, j as f64 * h));
        }
    }
    let mut triangles = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            let n00 = node_at(i, j);
            let n10 = node_at(i + 1, j);
            let n11 = node_at(i + 1, j + 1);
            let n01 = node_at(i, j + 1);
            triangles.push([n00, n10, n11]);
            triangles.push([n00, n11, n01]);
        }
    }
    let region_id = vec![0; triangles.len()];
    let mut boundary_nodes = BTreeSet::new();
    for i in 0..=n {
        boundary_nodes.insert(node_at(i, 0));
        boundary_nodes.insert(node_at(i, n));
        boundary_nodes.insert(node_at(0, i));
        boundary_nodes.insert(node_at(n, i));
    }
    let mesh = TriMesh { nodes, triangles, region_id, boundary_nodes };
    mesh.validate()?;
    Ok(mesh)
}
