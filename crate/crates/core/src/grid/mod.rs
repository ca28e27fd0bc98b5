//! Structured 2D finite-volume grid: cells, boundary patches, face topology.
//!
//! The grid is orthogonal and uniform. Solid regions (step, obstacle) are
//! masked out of the cell list, and the faces between fluid and solid cells
//! become boundary faces of a named patch. All discrete operators, inner
//! products and boundary integrals live in [`ops`]; cell and boundary data
//! containers in [`field`].

mod field;
mod ops;

pub use field::{FaceScalar, ScalarBc, ScalarField, VectorBc, VectorField};
pub use ops::*;

use crate::error::{Error, Result};

/// Geometry presets. All dimensions are in cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Geometry {
    /// Open channel: inlet on the left, outlet on the right, walls top/bottom.
    Channel,
    /// Closed box: a single wall patch all around.
    ClosedBox,
    /// Channel with a solid step in the lower-left corner
    /// (`i < step_nx && j < step_ny` is solid).
    BackStep { step_nx: usize, step_ny: usize },
    /// Channel with a solid axis-aligned block `[i0, i1) x [j0, j1)`.
    Obstacle { i0: usize, i1: usize, j0: usize, j1: usize },
}

/// Which side of a cell a face sits on.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Side {
    XMinus,
    XPlus,
    YMinus,
    YPlus,
}

/// One face of the finite-volume tessellation.
///
/// `normal` is the outward unit normal seen from `owner`; for interior faces
/// the neighbour contribution enters with the opposite sign. `dist` is the
/// center-to-center distance for interior faces and the center-to-face
/// distance (half a spacing) for boundary faces.
#[derive(Debug, Clone)]
pub struct Face {
    pub owner: usize,
    pub neigh: Option<usize>,
    pub normal: [f64; 2],
    pub area: f64,
    pub dist: f64,
    /// `(patch id, index within the patch)` for boundary faces.
    pub patch: Option<(usize, usize)>,
}

/// Named, ordered list of boundary faces.
#[derive(Debug, Clone)]
pub struct Patch {
    pub name: String,
    /// Global face indices, in construction order.
    pub faces: Vec<usize>,
}

/// Uniform orthogonal 2D grid with masked solid cells.
#[derive(Debug, Clone)]
pub struct StructuredGrid {
    pub nx: usize,
    pub ny: usize,
    pub dx: f64,
    pub dy: f64,
    pub geometry: Geometry,
    /// `(i, j)` index pair of each fluid cell.
    cell_ij: Vec<(usize, usize)>,
    /// Fluid-cell index for each `(i, j)` slot, `None` on solid cells.
    cell_of: Vec<Option<usize>>,
    volumes: Vec<f64>,
    faces: Vec<Face>,
    patches: Vec<Patch>,
}

impl Geometry {
    fn is_solid(&self, i: usize, j: usize) -> bool {
        match *self {
            Geometry::Channel | Geometry::ClosedBox => false,
            Geometry::BackStep { step_nx, step_ny } => i < step_nx && j < step_ny,
            Geometry::Obstacle { i0, i1, j0, j1 } => i >= i0 && i < i1 && j >= j0 && j < j1,
        }
    }

    fn patch_names(&self) -> Vec<&'static str> {
        match self {
            Geometry::Channel | Geometry::BackStep { .. } => vec!["inlet", "outlet", "walls"],
            Geometry::ClosedBox => vec!["walls"],
            Geometry::Obstacle { .. } => vec!["inlet", "outlet", "walls", "obstacle"],
        }
    }

    /// Patch id of the boundary face on `side` of fluid cell `(i, j)`.
    /// `solid_neighbour` is true when the face separates fluid from a masked
    /// solid cell rather than from the domain exterior.
    fn classify(&self, side: Side, solid_neighbour: bool) -> usize {
        match self {
            Geometry::Channel | Geometry::BackStep { .. } => match (side, solid_neighbour) {
                (Side::XMinus, false) => 0, // inlet
                (Side::XPlus, false) => 1,  // outlet
                _ => 2,                     // walls (incl. step surfaces)
            },
            Geometry::ClosedBox => 0,
            Geometry::Obstacle { .. } => {
                if solid_neighbour {
                    3 // obstacle
                } else {
                    match side {
                        Side::XMinus => 0,
                        Side::XPlus => 1,
                        _ => 2,
                    }
                }
            }
        }
    }
}

impl StructuredGrid {
    pub fn build(nx: usize, ny: usize, dx: f64, dy: f64, geometry: Geometry) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidConfig("grid must have at least one cell per direction".into()));
        }
        if !(dx > 0.0 && dy > 0.0) {
            return Err(Error::InvalidConfig("cell sizes must be strictly positive".into()));
        }
        if let Geometry::BackStep { step_nx, step_ny } = geometry {
            if step_nx >= nx || step_ny >= ny {
                return Err(Error::InvalidConfig("step must leave fluid cells on both sides".into()));
            }
        }
        if let Geometry::Obstacle { i0, i1, j0, j1 } = geometry {
            if i0 >= i1 || j0 >= j1 || i1 >= nx || j1 >= ny || i0 == 0 || j0 == 0 {
                return Err(Error::InvalidConfig(
                    "obstacle block must be strictly inside the domain".into(),
                ));
            }
        }

        let mut cell_of = vec![None; nx * ny];
        let mut cell_ij = Vec::new();
        for j in 0..ny {
            for i in 0..nx {
                if !geometry.is_solid(i, j) {
                    cell_of[j * nx + i] = Some(cell_ij.len());
                    cell_ij.push((i, j));
                }
            }
        }

        let n_cells = cell_ij.len();
        let volumes = vec![dx * dy; n_cells];
        let patch_names = geometry.patch_names();
        let mut patches: Vec<Patch> =
            patch_names.iter().map(|n| Patch { name: (*n).to_string(), faces: Vec::new() }).collect();
        let mut faces: Vec<Face> = Vec::new();

        let fluid_at = |i: isize, j: isize| -> Option<usize> {
            if i < 0 || j < 0 || i as usize >= nx || j as usize >= ny {
                None
            } else {
                cell_of[(j as usize) * nx + i as usize]
            }
        };

        let mut push_boundary =
            |faces: &mut Vec<Face>, owner: usize, side: Side, i: usize, j: usize| {
                let solid = match side {
                    Side::XMinus => i > 0 && geometry.is_solid(i - 1, j),
                    Side::XPlus => i + 1 < nx && geometry.is_solid(i + 1, j),
                    Side::YMinus => j > 0 && geometry.is_solid(i, j - 1),
                    Side::YPlus => j + 1 < ny && geometry.is_solid(i, j + 1),
                };
                let (normal, area, dist) = match side {
                    Side::XMinus => ([-1.0, 0.0], dy, 0.5 * dx),
                    Side::XPlus => ([1.0, 0.0], dy, 0.5 * dx),
                    Side::YMinus => ([0.0, -1.0], dx, 0.5 * dy),
                    Side::YPlus => ([0.0, 1.0], dx, 0.5 * dy),
                };
                let pid = geometry.classify(side, solid);
                let k = patches[pid].faces.len();
                patches[pid].faces.push(faces.len());
                faces.push(Face { owner, neigh: None, normal, area, dist, patch: Some((pid, k)) });
            };

        for j in 0..ny {
            for i in 0..nx {
                let Some(c) = cell_of[j * nx + i] else { continue };
                let (iw, jw) = (i as isize, j as isize);
                // -x
                if fluid_at(iw - 1, jw).is_none() {
                    push_boundary(&mut faces, c, Side::XMinus, i, j);
                }
                // +x: interior faces created once, owned by the left cell
                match fluid_at(iw + 1, jw) {
                    Some(r) => faces.push(Face {
                        owner: c,
                        neigh: Some(r),
                        normal: [1.0, 0.0],
                        area: dy,
                        dist: dx,
                        patch: None,
                    }),
                    None => push_boundary(&mut faces, c, Side::XPlus, i, j),
                }
                // -y
                if fluid_at(iw, jw - 1).is_none() {
                    push_boundary(&mut faces, c, Side::YMinus, i, j);
                }
                // +y
                match fluid_at(iw, jw + 1) {
                    Some(t) => faces.push(Face {
                        owner: c,
                        neigh: Some(t),
                        normal: [0.0, 1.0],
                        area: dx,
                        dist: dy,
                        patch: None,
                    }),
                    None => push_boundary(&mut faces, c, Side::YPlus, i, j),
                }
            }
        }

        Ok(StructuredGrid { nx, ny, dx, dy, geometry, cell_ij, cell_of, volumes, faces, patches })
    }

    pub fn n_cells(&self) -> usize {
        self.cell_ij.len()
    }

    pub fn volumes(&self) -> &[f64] {
        &self.volumes
    }

    pub fn total_volume(&self) -> f64 {
        self.volumes.iter().sum()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn patches(&self) -> &[Patch] {
        &self.patches
    }

    pub fn patch_id(&self, name: &str) -> Result<usize> {
        self.patches
            .iter()
            .position(|p| p.name == name)
            .ok_or_else(|| Error::UnknownPatch(name.to_string()))
    }

    pub fn patch_area(&self, patch_id: usize) -> f64 {
        self.patches[patch_id].faces.iter().map(|&f| self.faces[f].area).sum()
    }

    /// `(i, j)` indices of fluid cell `c`.
    pub fn cell_ij(&self, c: usize) -> (usize, usize) {
        self.cell_ij[c]
    }

    /// Fluid-cell index at `(i, j)`, if it is a fluid cell.
    pub fn cell_at(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.nx || j >= self.ny {
            None
        } else {
            self.cell_of[j * self.nx + i]
        }
    }

    pub fn cell_center(&self, c: usize) -> (f64, f64) {
        let (i, j) = self.cell_ij[c];
        ((i as f64 + 0.5) * self.dx, (j as f64 + 0.5) * self.dy)
    }

    /// Center of a face.
    pub fn face_center(&self, face: &Face) -> (f64, f64) {
        let (cx, cy) = self.cell_center(face.owner);
        (cx + face.normal[0] * 0.5 * self.dx, cy + face.normal[1] * 0.5 * self.dy)
    }

    /// Cheap structural fingerprint used to match archives/models to grids.
    pub fn signature(&self) -> String {
        format!(
            "{}x{} dx={:.12e} dy={:.12e} geom={:?} cells={}",
            self.nx,
            self.ny,
            self.dx,
            self.dy,
            self.geometry,
            self.n_cells()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_boundary_normals_sum_to_zero() {
        for geom in [
            Geometry::Channel,
            Geometry::ClosedBox,
            Geometry::BackStep { step_nx: 3, step_ny: 2 },
            Geometry::Obstacle { i0: 3, i1: 5, j0: 2, j1: 4 },
        ] {
            let g = StructuredGrid::build(8, 6, 0.25, 0.5, geom).unwrap();
            let mut sum = [0.0f64; 2];
            let mut perimeter = 0.0;
            for f in g.faces() {
                if f.patch.is_some() {
                    sum[0] += f.normal[0] * f.area;
                    sum[1] += f.normal[1] * f.area;
                    perimeter += f.area;
                }
            }
            assert!(sum[0].abs() <= 1e-12 * perimeter, "{geom:?}: x imbalance {}", sum[0]);
            assert!(sum[1].abs() <= 1e-12 * perimeter, "{geom:?}: y imbalance {}", sum[1]);
        }
    }

    #[test]
    fn every_boundary_face_belongs_to_one_patch() {
        let g = StructuredGrid::build(8, 6, 0.1, 0.1, Geometry::Obstacle { i0: 3, i1: 5, j0: 2, j1: 4 })
            .unwrap();
        let mut seen = vec![0usize; g.faces().len()];
        for p in g.patches() {
            for &f in &p.faces {
                seen[f] += 1;
                assert!(g.faces()[f].patch.is_some());
            }
        }
        for (fi, f) in g.faces().iter().enumerate() {
            match f.patch {
                Some(_) => assert_eq!(seen[fi], 1),
                None => assert_eq!(seen[fi], 0),
            }
        }
    }

    #[test]
    fn volumes_positive_and_mask_counts() {
        let g = StructuredGrid::build(8, 6, 0.1, 0.2, Geometry::BackStep { step_nx: 3, step_ny: 2 })
            .unwrap();
        assert_eq!(g.n_cells(), 8 * 6 - 3 * 2);
        for &v in g.volumes() {
            assert!(v > 0.0);
        }
        assert!(g.cell_at(0, 0).is_none());
        assert!(g.cell_at(3, 0).is_some());
    }

    #[test]
    fn obstacle_patch_is_closed() {
        let g = StructuredGrid::build(10, 8, 0.1, 0.1, Geometry::Obstacle { i0: 4, i1: 6, j0: 3, j1: 5 })
            .unwrap();
        let pid = g.patch_id("obstacle").unwrap();
        let mut sum = [0.0f64; 2];
        for &fi in &g.patches()[pid].faces {
            let f = &g.faces()[fi];
            sum[0] += f.normal[0] * f.area;
            sum[1] += f.normal[1] * f.area;
        }
        assert!(sum[0].abs() < 1e-14 && sum[1].abs() < 1e-14);
        // 2x2 block: 8 boundary faces
        assert_eq!(g.patches()[pid].faces.len(), 8);
    }

    #[test]
    fn unknown_patch_is_an_error() {
        let g = StructuredGrid::build(4, 4, 1.0, 1.0, Geometry::Channel).unwrap();
        assert!(matches!(g.patch_id("lid"), Err(Error::UnknownPatch(_))));
    }
}
