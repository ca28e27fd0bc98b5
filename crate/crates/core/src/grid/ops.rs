//! Discrete Gauss-theorem operators, inner products and boundary integrals.
//!
//! Every operator is a single pass over the face list, accumulating into the
//! owner (and, for interior faces, with opposite sign into the neighbour).
//! Face values use arithmetic-mean interpolation inside the domain; on
//! boundary faces Dirichlet patches contribute the prescribed value and
//! zero-gradient patches the adjacent cell value.

use super::field::{FaceScalar, ScalarField, VectorField};
use super::StructuredGrid;
use crate::error::Result;

/// Volume-weighted L2 inner product of two scalar fields: Σ f g V.
pub fn inner_product_scalar(f: &ScalarField, g: &ScalarField, grid: &StructuredGrid) -> Result<f64> {
    f.check(grid)?;
    g.check(grid)?;
    let mut acc = 0.0;
    for ((a, b), v) in f.data.iter().zip(&g.data).zip(grid.volumes()) {
        acc += a * b * v;
    }
    Ok(acc)
}

/// Volume-weighted L2 inner product of two vector fields (componentwise dot).
pub fn inner_product_vector(f: &VectorField, g: &VectorField, grid: &StructuredGrid) -> Result<f64> {
    f.check(grid)?;
    g.check(grid)?;
    let mut acc = 0.0;
    for ((a, b), v) in f.data.iter().zip(&g.data).zip(grid.volumes()) {
        acc += (a[0] * b[0] + a[1] * b[1]) * v;
    }
    Ok(acc)
}

pub fn l2_norm_scalar(f: &ScalarField, grid: &StructuredGrid) -> Result<f64> {
    Ok(inner_product_scalar(f, f, grid)?.sqrt())
}

pub fn l2_norm_vector(f: &VectorField, grid: &StructuredGrid) -> Result<f64> {
    Ok(inner_product_vector(f, f, grid)?.sqrt())
}

/// Gauss gradient: (∇p)_P = Σ_f n |S_f| p_f / V_P.
pub fn apply_gradient(p: &ScalarField, grid: &StructuredGrid) -> Result<VectorField> {
    p.check(grid)?;
    let mut out = VectorField::zeros(grid);
    for face in grid.faces() {
        let pf = p.face_value(face);
        let fx = face.normal[0] * face.area * pf;
        let fy = face.normal[1] * face.area * pf;
        let o = &mut out.data[face.owner];
        o[0] += fx;
        o[1] += fy;
        if let Some(n) = face.neigh {
            let t = &mut out.data[n];
            t[0] -= fx;
            t[1] -= fy;
        }
    }
    for (v, vol) in out.data.iter_mut().zip(grid.volumes()) {
        v[0] /= vol;
        v[1] /= vol;
    }
    Ok(out)
}

/// Gauss divergence: (∇·u)_P = Σ_f n·u_f |S_f| / V_P.
pub fn apply_divergence(u: &VectorField, grid: &StructuredGrid) -> Result<ScalarField> {
    u.check(grid)?;
    let mut out = ScalarField::zeros(grid);
    for face in grid.faces() {
        let uf = u.face_value(face);
        let flux = (face.normal[0] * uf[0] + face.normal[1] * uf[1]) * face.area;
        out.data[face.owner] += flux;
        if let Some(n) = face.neigh {
            out.data[n] -= flux;
        }
    }
    for (v, vol) in out.data.iter_mut().zip(grid.volumes()) {
        *v /= vol;
    }
    Ok(out)
}

/// Compact diffusion operator (∇·ν∇f)_P = Σ_f ν_f |S_f| (f_N - f_P)/|d| / V_P.
///
/// Dirichlet boundary faces difference against the prescribed face value over
/// half a spacing; zero-gradient faces carry no flux.
pub fn apply_laplacian_scalar(
    f: &ScalarField,
    nu: &FaceScalar,
    grid: &StructuredGrid,
) -> Result<ScalarField> {
    f.check(grid)?;
    let mut out = ScalarField::zeros(grid);
    for (fi, face) in grid.faces().iter().enumerate() {
        let flux = match face.neigh {
            Some(n) => nu.data[fi] * face.area * (f.data[n] - f.data[face.owner]) / face.dist,
            None => {
                let (pid, k) = face.patch.unwrap();
                match &f.bcs[pid] {
                    super::field::ScalarBc::Dirichlet(vals) => {
                        nu.data[fi] * face.area * (vals[k] - f.data[face.owner]) / face.dist
                    }
                    super::field::ScalarBc::ZeroGradient => 0.0,
                }
            }
        };
        out.data[face.owner] += flux;
        if let Some(n) = face.neigh {
            out.data[n] -= flux;
        }
    }
    for (v, vol) in out.data.iter_mut().zip(grid.volumes()) {
        *v /= vol;
    }
    Ok(out)
}

/// Componentwise compact diffusion operator for a vector field.
pub fn apply_laplacian_vector(
    u: &VectorField,
    nu: &FaceScalar,
    grid: &StructuredGrid,
) -> Result<VectorField> {
    u.check(grid)?;
    let mut out = VectorField::zeros(grid);
    for (fi, face) in grid.faces().iter().enumerate() {
        let flux = match face.neigh {
            Some(n) => {
                let c = nu.data[fi] * face.area / face.dist;
                [
                    c * (u.data[n][0] - u.data[face.owner][0]),
                    c * (u.data[n][1] - u.data[face.owner][1]),
                ]
            }
            None => {
                let (pid, k) = face.patch.unwrap();
                match &u.bcs[pid] {
                    super::field::VectorBc::Dirichlet(vals) => {
                        let c = nu.data[fi] * face.area / face.dist;
                        [
                            c * (vals[k][0] - u.data[face.owner][0]),
                            c * (vals[k][1] - u.data[face.owner][1]),
                        ]
                    }
                    super::field::VectorBc::ZeroGradient => [0.0, 0.0],
                }
            }
        };
        let o = &mut out.data[face.owner];
        o[0] += flux[0];
        o[1] += flux[1];
        if let Some(n) = face.neigh {
            let t = &mut out.data[n];
            t[0] -= flux[0];
            t[1] -= flux[1];
        }
    }
    for (v, vol) in out.data.iter_mut().zip(grid.volumes()) {
        v[0] /= vol;
        v[1] /= vol;
    }
    Ok(out)
}

/// Cell-centred velocity Jacobians J[c][i][j] = ∂u_i/∂x_j via Gauss gradients.
pub fn gradient_tensor(u: &VectorField, grid: &StructuredGrid) -> Result<Vec<[[f64; 2]; 2]>> {
    u.check(grid)?;
    let mut out = vec![[[0.0f64; 2]; 2]; grid.n_cells()];
    for face in grid.faces() {
        let uf = u.face_value(face);
        let a = face.area;
        for i in 0..2 {
            for j in 0..2 {
                let c = uf[i] * face.normal[j] * a;
                out[face.owner][i][j] += c;
            }
        }
        if let Some(n) = face.neigh {
            for i in 0..2 {
                for j in 0..2 {
                    out[n][i][j] -= uf[i] * face.normal[j] * a;
                }
            }
        }
    }
    for (t, vol) in out.iter_mut().zip(grid.volumes()) {
        for row in t.iter_mut() {
            row[0] /= vol;
            row[1] /= vol;
        }
    }
    Ok(out)
}

/// ∇·(ν (∇u)^T): contribution i = Σ_f ν_f |S_f| Σ_j (∂u_j/∂x_i)_f n_j / V.
///
/// Face Jacobians average the two cell Jacobians; boundary faces use the
/// owner value (one-sided).
pub fn div_transpose_gradient(
    u: &VectorField,
    nu: &FaceScalar,
    grid: &StructuredGrid,
) -> Result<VectorField> {
    let jac = gradient_tensor(u, grid)?;
    let mut out = VectorField::zeros(grid);
    for (fi, face) in grid.faces().iter().enumerate() {
        let jf = match face.neigh {
            Some(n) => {
                let a = &jac[face.owner];
                let b = &jac[n];
                [
                    [0.5 * (a[0][0] + b[0][0]), 0.5 * (a[0][1] + b[0][1])],
                    [0.5 * (a[1][0] + b[1][0]), 0.5 * (a[1][1] + b[1][1])],
                ]
            }
            None => jac[face.owner],
        };
        let c = nu.data[fi] * face.area;
        // ((∇u)^T n)_i = Σ_j J[j][i] n_j
        let flux = [
            c * (jf[0][0] * face.normal[0] + jf[1][0] * face.normal[1]),
            c * (jf[0][1] * face.normal[0] + jf[1][1] * face.normal[1]),
        ];
        let o = &mut out.data[face.owner];
        o[0] += flux[0];
        o[1] += flux[1];
        if let Some(n) = face.neigh {
            let t = &mut out.data[n];
            t[0] -= flux[0];
            t[1] -= flux[1];
        }
    }
    for (v, vol) in out.data.iter_mut().zip(grid.volumes()) {
        v[0] /= vol;
        v[1] /= vol;
    }
    Ok(out)
}

/// ∇·(a ⊗ b) with central face values: Σ_f (a_f·n)(b_f) |S_f| / V.
pub fn divergence_of_dyad(
    a: &VectorField,
    b: &VectorField,
    grid: &StructuredGrid,
) -> Result<VectorField> {
    a.check(grid)?;
    b.check(grid)?;
    let mut out = VectorField::zeros(grid);
    for face in grid.faces() {
        let af = a.face_value(face);
        let bf = b.face_value(face);
        let mass = (af[0] * face.normal[0] + af[1] * face.normal[1]) * face.area;
        let flux = [mass * bf[0], mass * bf[1]];
        let o = &mut out.data[face.owner];
        o[0] += flux[0];
        o[1] += flux[1];
        if let Some(n) = face.neigh {
            let t = &mut out.data[n];
            t[0] -= flux[0];
            t[1] -= flux[1];
        }
    }
    for (v, vol) in out.data.iter_mut().zip(grid.volumes()) {
        v[0] /= vol;
        v[1] /= vol;
    }
    Ok(out)
}

/// Convection scheme for the full-order stepping.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvectionScheme {
    Upwind,
    Central,
}

/// ∇·(u ⊗ u) with the mass flux from central interpolation and the
/// transported value either central or donor-cell upwinded.
pub fn convection(
    u: &VectorField,
    grid: &StructuredGrid,
    scheme: ConvectionScheme,
) -> Result<VectorField> {
    if scheme == ConvectionScheme::Central {
        return divergence_of_dyad(u, u, grid);
    }
    u.check(grid)?;
    let mut out = VectorField::zeros(grid);
    for face in grid.faces() {
        let uf = u.face_value(face);
        let mass = (uf[0] * face.normal[0] + uf[1] * face.normal[1]) * face.area;
        let carried = match face.neigh {
            Some(n) => {
                if mass >= 0.0 {
                    u.data[face.owner]
                } else {
                    u.data[n]
                }
            }
            // boundary faces always take the face value
            None => uf,
        };
        let flux = [mass * carried[0], mass * carried[1]];
        let o = &mut out.data[face.owner];
        o[0] += flux[0];
        o[1] += flux[1];
        if let Some(n) = face.neigh {
            let t = &mut out.data[n];
            t[0] -= flux[0];
            t[1] -= flux[1];
        }
    }
    for (v, vol) in out.data.iter_mut().zip(grid.volumes()) {
        v[0] /= vol;
        v[1] /= vol;
    }
    Ok(out)
}

/// Strain-rate magnitude |S| = sqrt(2 S:S), S = (∇u + ∇u^T)/2.
pub fn strain_magnitude(u: &VectorField, grid: &StructuredGrid) -> Result<Vec<f64>> {
    let jac = gradient_tensor(u, grid)?;
    Ok(jac
        .iter()
        .map(|j| {
            let s00 = j[0][0];
            let s11 = j[1][1];
            let s01 = 0.5 * (j[0][1] + j[1][0]);
            (2.0 * (s00 * s00 + s11 * s11 + 2.0 * s01 * s01)).sqrt()
        })
        .collect())
}

/// ∫_patch χ n ds, a vector.
pub fn patch_integral_scalar_normal(
    f: &ScalarField,
    patch_id: usize,
    grid: &StructuredGrid,
) -> Result<[f64; 2]> {
    f.check(grid)?;
    let mut out = [0.0; 2];
    for &fi in &grid.patches()[patch_id].faces {
        let face = &grid.faces()[fi];
        let v = f.face_value(face);
        out[0] += v * face.normal[0] * face.area;
        out[1] += v * face.normal[1] * face.area;
    }
    Ok(out)
}

/// ∫_patch u_c ds for one component.
pub fn patch_integral_component(
    u: &VectorField,
    component: usize,
    patch_id: usize,
    grid: &StructuredGrid,
) -> Result<f64> {
    u.check(grid)?;
    let mut out = 0.0;
    for &fi in &grid.patches()[patch_id].faces {
        let face = &grid.faces()[fi];
        out += u.face_value(face)[component] * face.area;
    }
    Ok(out)
}

/// ∫_patch u·v ds.
pub fn patch_integral_dot(
    u: &VectorField,
    v: &VectorField,
    patch_id: usize,
    grid: &StructuredGrid,
) -> Result<f64> {
    u.check(grid)?;
    v.check(grid)?;
    let mut out = 0.0;
    for &fi in &grid.patches()[patch_id].faces {
        let face = &grid.faces()[fi];
        let a = u.face_value(face);
        let b = v.face_value(face);
        out += (a[0] * b[0] + a[1] * b[1]) * face.area;
    }
    Ok(out)
}

/// ∫_patch 2μ (∇u) n ds with a one-sided normal derivative at each face:
/// (∇u n)_i = (u_face,i − u_owner,i)/dist. With `symmetric` the transpose
/// part μ(∇u)^T n is added from the owner-cell Jacobian.
pub fn viscous_traction_integral(
    u: &VectorField,
    patch_id: usize,
    grid: &StructuredGrid,
    mu: f64,
    symmetric: bool,
) -> Result<[f64; 2]> {
    u.check(grid)?;
    let jac = if symmetric { Some(gradient_tensor(u, grid)?) } else { None };
    let mut out = [0.0; 2];
    for &fi in &grid.patches()[patch_id].faces {
        let face = &grid.faces()[fi];
        let uf = u.face_value(face);
        let up = u.data[face.owner];
        let dudn = [(uf[0] - up[0]) / face.dist, (uf[1] - up[1]) / face.dist];
        if let Some(jac) = &jac {
            let j = &jac[face.owner];
            let jt_n = [
                j[0][0] * face.normal[0] + j[1][0] * face.normal[1],
                j[0][1] * face.normal[0] + j[1][1] * face.normal[1],
            ];
            out[0] += mu * (dudn[0] + jt_n[0]) * face.area;
            out[1] += mu * (dudn[1] + jt_n[1]) * face.area;
        } else {
            out[0] += 2.0 * mu * dudn[0] * face.area;
            out[1] += 2.0 * mu * dudn[1] * face.area;
        }
    }
    Ok(out)
}

/// ∫_patch p n ds.
pub fn pressure_force(p: &ScalarField, patch_id: usize, grid: &StructuredGrid) -> Result<[f64; 2]> {
    patch_integral_scalar_normal(p, patch_id, grid)
}

/// Total surface force ∫ (2μ∇u − pI) n ds on a patch.
pub fn surface_force(
    u: &VectorField,
    p: &ScalarField,
    patch_id: usize,
    grid: &StructuredGrid,
    mu: f64,
    symmetric: bool,
) -> Result<[f64; 2]> {
    let visc = viscous_traction_integral(u, patch_id, grid, mu, symmetric)?;
    let pres = pressure_force(p, patch_id, grid)?;
    Ok([visc[0] - pres[0], visc[1] - pres[1]])
}
