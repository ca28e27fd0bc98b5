//! Cell-centred fields and their per-patch boundary data.

use super::{Face, StructuredGrid};
use crate::error::{Error, Result};

/// Boundary treatment of a scalar field on one patch.
#[derive(Debug, Clone, PartialEq)]
pub enum ScalarBc {
    /// Prescribed face values, one per patch face.
    Dirichlet(Vec<f64>),
    /// Zero normal gradient; stencils use the adjacent cell value.
    ZeroGradient,
}

/// Boundary treatment of a vector field on one patch.
#[derive(Debug, Clone, PartialEq)]
pub enum VectorBc {
    Dirichlet(Vec<[f64; 2]>),
    ZeroGradient,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub data: Vec<f64>,
    /// One entry per grid patch, in patch order.
    pub bcs: Vec<ScalarBc>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    pub data: Vec<[f64; 2]>,
    pub bcs: Vec<VectorBc>,
}

impl ScalarField {
    pub fn zeros(grid: &StructuredGrid) -> Self {
        Self::constant(grid, 0.0)
    }

    /// Constant field with zero-gradient boundaries everywhere.
    pub fn constant(grid: &StructuredGrid, v: f64) -> Self {
        ScalarField {
            data: vec![v; grid.n_cells()],
            bcs: grid.patches().iter().map(|_| ScalarBc::ZeroGradient).collect(),
        }
    }

    pub fn from_fn(grid: &StructuredGrid, f: impl Fn(f64, f64) -> f64) -> Self {
        let data = (0..grid.n_cells())
            .map(|c| {
                let (x, y) = grid.cell_center(c);
                f(x, y)
            })
            .collect();
        ScalarField { data, bcs: grid.patches().iter().map(|_| ScalarBc::ZeroGradient).collect() }
    }

    /// Replaces the treatment of one patch with a uniform Dirichlet value.
    pub fn set_dirichlet_uniform(&mut self, grid: &StructuredGrid, patch_id: usize, v: f64) {
        let n = grid.patches()[patch_id].faces.len();
        self.bcs[patch_id] = ScalarBc::Dirichlet(vec![v; n]);
    }

    /// Dirichlet values taken from a function of the face center.
    pub fn set_dirichlet_fn(
        &mut self,
        grid: &StructuredGrid,
        patch_id: usize,
        f: impl Fn(f64, f64) -> f64,
    ) {
        let vals = grid.patches()[patch_id]
            .faces
            .iter()
            .map(|&fi| {
                let (x, y) = grid.face_center(&grid.faces()[fi]);
                f(x, y)
            })
            .collect();
        self.bcs[patch_id] = ScalarBc::Dirichlet(vals);
    }

    #[inline]
    pub fn face_value(&self, face: &Face) -> f64 {
        match face.neigh {
            Some(n) => 0.5 * (self.data[face.owner] + self.data[n]),
            None => {
                let (pid, k) = face.patch.expect("boundary face carries a patch");
                match &self.bcs[pid] {
                    ScalarBc::Dirichlet(vals) => vals[k],
                    ScalarBc::ZeroGradient => self.data[face.owner],
                }
            }
        }
    }

    pub fn check(&self, grid: &StructuredGrid) -> Result<()> {
        if self.data.len() != grid.n_cells() {
            return Err(Error::SizeMismatch(format!(
                "scalar field has {} cells, grid has {}",
                self.data.len(),
                grid.n_cells()
            )));
        }
        check_bc_counts(self.bcs.len(), grid)?;
        for (pid, bc) in self.bcs.iter().enumerate() {
            if let ScalarBc::Dirichlet(v) = bc {
                if v.len() != grid.patches()[pid].faces.len() {
                    return Err(Error::SizeMismatch(format!(
                        "patch `{}` has {} faces but {} boundary values",
                        grid.patches()[pid].name,
                        grid.patches()[pid].faces.len(),
                        v.len()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Σ_k coeffs[k] · fields[k], combining Dirichlet arrays the same way.
    /// All fields must use the same boundary treatment kind per patch.
    pub fn linear_combination(fields: &[&ScalarField], coeffs: &[f64]) -> ScalarField {
        assert_eq!(fields.len(), coeffs.len());
        assert!(!fields.is_empty());
        let n = fields[0].data.len();
        let mut data = vec![0.0; n];
        for (f, &c) in fields.iter().zip(coeffs) {
            assert_eq!(f.data.len(), n);
            for (d, v) in data.iter_mut().zip(&f.data) {
                *d += c * v;
            }
        }
        let bcs = (0..fields[0].bcs.len())
            .map(|pid| match &fields[0].bcs[pid] {
                ScalarBc::ZeroGradient => {
                    for f in fields {
                        assert!(matches!(f.bcs[pid], ScalarBc::ZeroGradient), "mixed bc kinds");
                    }
                    ScalarBc::ZeroGradient
                }
                ScalarBc::Dirichlet(v0) => {
                    let mut acc = vec![0.0; v0.len()];
                    for (f, &c) in fields.iter().zip(coeffs) {
                        match &f.bcs[pid] {
                            ScalarBc::Dirichlet(v) => {
                                for (a, x) in acc.iter_mut().zip(v) {
                                    *a += c * x;
                                }
                            }
                            ScalarBc::ZeroGradient => panic!("mixed bc kinds"),
                        }
                    }
                    ScalarBc::Dirichlet(acc)
                }
            })
            .collect();
        ScalarField { data, bcs }
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
        for bc in &mut self.bcs {
            if let ScalarBc::Dirichlet(vals) = bc {
                for v in vals {
                    *v *= s;
                }
            }
        }
    }
}

impl VectorField {
    pub fn zeros(grid: &StructuredGrid) -> Self {
        Self::constant(grid, [0.0, 0.0])
    }

    pub fn constant(grid: &StructuredGrid, v: [f64; 2]) -> Self {
        VectorField {
            data: vec![v; grid.n_cells()],
            bcs: grid.patches().iter().map(|_| VectorBc::ZeroGradient).collect(),
        }
    }

    pub fn from_fn(grid: &StructuredGrid, f: impl Fn(f64, f64) -> [f64; 2]) -> Self {
        let data = (0..grid.n_cells())
            .map(|c| {
                let (x, y) = grid.cell_center(c);
                f(x, y)
            })
            .collect();
        VectorField { data, bcs: grid.patches().iter().map(|_| VectorBc::ZeroGradient).collect() }
    }

    pub fn set_dirichlet_uniform(&mut self, grid: &StructuredGrid, patch_id: usize, v: [f64; 2]) {
        let n = grid.patches()[patch_id].faces.len();
        self.bcs[patch_id] = VectorBc::Dirichlet(vec![v; n]);
    }

    #[inline]
    pub fn face_value(&self, face: &Face) -> [f64; 2] {
        match face.neigh {
            Some(n) => {
                let a = self.data[face.owner];
                let b = self.data[n];
                [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])]
            }
            None => {
                let (pid, k) = face.patch.expect("boundary face carries a patch");
                match &self.bcs[pid] {
                    VectorBc::Dirichlet(vals) => vals[k],
                    VectorBc::ZeroGradient => self.data[face.owner],
                }
            }
        }
    }

    pub fn check(&self, grid: &StructuredGrid) -> Result<()> {
        if self.data.len() != grid.n_cells() {
            return Err(Error::SizeMismatch(format!(
                "vector field has {} cells, grid has {}",
                self.data.len(),
                grid.n_cells()
            )));
        }
        check_bc_counts(self.bcs.len(), grid)?;
        for (pid, bc) in self.bcs.iter().enumerate() {
            if let VectorBc::Dirichlet(v) = bc {
                if v.len() != grid.patches()[pid].faces.len() {
                    return Err(Error::SizeMismatch(format!(
                        "patch `{}` has {} faces but {} boundary values",
                        grid.patches()[pid].name,
                        grid.patches()[pid].faces.len(),
                        v.len()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn linear_combination(fields: &[&VectorField], coeffs: &[f64]) -> VectorField {
        assert_eq!(fields.len(), coeffs.len());
        assert!(!fields.is_empty());
        let n = fields[0].data.len();
        let mut data = vec![[0.0; 2]; n];
        for (f, &c) in fields.iter().zip(coeffs) {
            assert_eq!(f.data.len(), n);
            for (d, v) in data.iter_mut().zip(&f.data) {
                d[0] += c * v[0];
                d[1] += c * v[1];
            }
        }
        let bcs = (0..fields[0].bcs.len())
            .map(|pid| match &fields[0].bcs[pid] {
                VectorBc::ZeroGradient => {
                    for f in fields {
                        assert!(matches!(f.bcs[pid], VectorBc::ZeroGradient), "mixed bc kinds");
                    }
                    VectorBc::ZeroGradient
                }
                VectorBc::Dirichlet(v0) => {
                    let mut acc = vec![[0.0; 2]; v0.len()];
                    for (f, &c) in fields.iter().zip(coeffs) {
                        match &f.bcs[pid] {
                            VectorBc::Dirichlet(v) => {
                                for (a, x) in acc.iter_mut().zip(v) {
                                    a[0] += c * x[0];
                                    a[1] += c * x[1];
                                }
                            }
                            VectorBc::ZeroGradient => panic!("mixed bc kinds"),
                        }
                    }
                    VectorBc::Dirichlet(acc)
                }
            })
            .collect();
        VectorField { data, bcs }
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            v[0] *= s;
            v[1] *= s;
        }
        for bc in &mut self.bcs {
            if let VectorBc::Dirichlet(vals) = bc {
                for v in vals {
                    v[0] *= s;
                    v[1] *= s;
                }
            }
        }
    }

    /// Flattens to interleaved `[u0x, u0y, u1x, u1y, ...]`.
    pub fn flatten(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(2 * self.data.len());
        for v in &self.data {
            out.push(v[0]);
            out.push(v[1]);
        }
        out
    }

    pub fn from_flat(grid: &StructuredGrid, flat: &[f64]) -> Result<Self> {
        if flat.len() != 2 * grid.n_cells() {
            return Err(Error::SizeMismatch(format!(
                "flat vector payload has {} entries, expected {}",
                flat.len(),
                2 * grid.n_cells()
            )));
        }
        let data = flat.chunks_exact(2).map(|c| [c[0], c[1]]).collect();
        Ok(VectorField {
            data,
            bcs: grid.patches().iter().map(|_| VectorBc::ZeroGradient).collect(),
        })
    }
}

fn check_bc_counts(n: usize, grid: &StructuredGrid) -> Result<()> {
    if n != grid.patches().len() {
        return Err(Error::SizeMismatch(format!(
            "field carries {} patch entries, grid has {}",
            n,
            grid.patches().len()
        )));
    }
    Ok(())
}

/// Per-face scalar, e.g. an effective viscosity entering the Laplacian.
#[derive(Debug, Clone)]
pub struct FaceScalar {
    pub data: Vec<f64>,
}

impl FaceScalar {
    pub fn constant(grid: &StructuredGrid, v: f64) -> Self {
        FaceScalar { data: vec![v; grid.faces().len()] }
    }

    /// Interpolates a cell field to faces: arithmetic mean inside, the
    /// field's own boundary rule on patches.
    pub fn from_cell_scalar(grid: &StructuredGrid, f: &ScalarField) -> Self {
        let data = grid.faces().iter().map(|face| f.face_value(face)).collect();
        FaceScalar { data }
    }

    /// offset + scale * f, faces-wise, from a cell field.
    pub fn affine_from_cell(grid: &StructuredGrid, f: &ScalarField, offset: f64, scale: f64) -> Self {
        let data = grid.faces().iter().map(|face| offset + scale * f.face_value(face)).collect();
        FaceScalar { data }
    }
}
