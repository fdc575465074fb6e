//! Levi forms of graded algebras: extraction, skew normal form, quotients
//! onto co-dimension-1 groups, and frame Christoffel symbols.

use nalgebra::DVector;

use crate::algebra::{bch_compose, GradedLieAlgebra, GroupElement, step2_from_levi};
use crate::error::{CoreError, Result};
use crate::linalg::RMatrix;

/// Relative threshold below which a Levi eigenvalue counts as zero.
pub const LEVI_RANK_TOL: f64 = 1e-10;

/// The `nu`-Levi form of an algebra together with its skew normal form.
#[derive(Clone, Debug)]
pub struct LeviData {
    pub nu: usize,
    /// Skew-symmetric matrix `L` with `[X_j, X_k] = L_jk Z_nu + ...`.
    pub matrix: RMatrix,
    /// Half-rank: number of `+i lambda / -i lambda` pairs.
    pub m: usize,
    /// Positive eigenvalue moduli, descending.
    pub lambdas: Vec<f64>,
    /// Orthogonal `O` with `O^T L O` in block form `[[0,D,0],[-D,0,0],[0,0,0]]`.
    pub basis: RMatrix,
}

impl LeviData {
    /// Trace norm `||L||_1 = 2 sum lambda_j`.
    pub fn trace_norm(&self) -> f64 {
        2.0 * self.lambdas.iter().sum::<f64>()
    }

    /// The target block matrix `[[0,D,0],[-D,0,0],[0,0,0]]`.
    pub fn block_form(&self) -> RMatrix {
        let d = self.matrix.nrows();
        let mut b = RMatrix::zeros(d, d);
        for (j, &l) in self.lambdas.iter().enumerate() {
            b[(j, self.m + j)] = l;
            b[(self.m + j, j)] = -l;
        }
        b
    }
}

/// Read the `nu`-Levi matrix out of the structure constants:
/// `L_jk` = coefficient of `Z_nu` in `[X_{1,j}, X_{1,k}]`.
pub fn levi_matrix(alg: &GradedLieAlgebra, nu: usize) -> Result<RMatrix> {
    if alg.step() < 2 {
        return Err(CoreError::NoSecondLayer(alg.step()));
    }
    let d2 = alg.dims()[1];
    if nu == 0 || nu > d2 {
        return Err(CoreError::IndexOutOfRange { index: nu, range: format!("1..={d2}") });
    }
    let d1 = alg.horizontal_dim();
    let center = alg.layer_range(2).start + nu - 1;
    let mut l = RMatrix::zeros(d1, d1);
    for j in 0..d1 {
        for k in 0..d1 {
            let c: f64 = alg
                .bracket_of_generators(j, k)
                .into_iter()
                .filter(|&(i, _)| i == center)
                .map(|(_, v)| v)
                .sum();
            l[(j, k)] = c;
        }
    }
    Ok(l)
}

/// Compute the skew normal form of the `nu`-Levi matrix.
///
/// A basis pair for each nonzero eigenvalue modulus `lambda` is built from an
/// eigenvector `v` of `-L^2` via `w = -Lv/lambda`, which yields
/// `v^T L w = lambda` and keeps the pair orthonormal.
pub fn levi_normal_form(alg: &GradedLieAlgebra, nu: usize) -> Result<LeviData> {
    let l = levi_matrix(alg, nu)?;
    let d = l.nrows();
    let frob = l.norm();
    let tol = LEVI_RANK_TOL * frob;

    // -L^2 is symmetric positive semidefinite with eigenvalues lambda^2,
    // each nonzero one of even multiplicity.
    let s = -(&l * &l);
    let eig = s.symmetric_eigen();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap());

    let mut chosen: Vec<DVector<f64>> = Vec::new();
    let mut pairs: Vec<(f64, DVector<f64>, DVector<f64>)> = Vec::new();
    for &i in &order {
        let lam2 = eig.eigenvalues[i].max(0.0);
        if lam2.sqrt() <= tol {
            continue;
        }
        let mut v: DVector<f64> = eig.eigenvectors.column(i).into();
        for c in &chosen {
            let p = c.dot(&v);
            v -= c * p;
        }
        let norm = v.norm();
        if norm < 0.5 {
            // already absorbed as the partner of an earlier pair
            continue;
        }
        v /= norm;
        let lv = &l * &v;
        let lam = lv.norm();
        let w = -lv / lam;
        chosen.push(v.clone());
        chosen.push(w.clone());
        pairs.push((lam, v, w));
    }
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let m = pairs.len();

    // Kernel directions: orthonormal completion from the small eigenvalues.
    let mut kernel: Vec<DVector<f64>> = Vec::new();
    for &i in order.iter().rev() {
        if 2 * m + kernel.len() == d {
            break;
        }
        let mut v: DVector<f64> = eig.eigenvectors.column(i).into();
        for c in chosen.iter().chain(&kernel) {
            let p = c.dot(&v);
            v -= c * p;
        }
        let norm = v.norm();
        if norm < 0.5 {
            continue;
        }
        kernel.push(v / norm);
        if 2 * m + kernel.len() == d {
            break;
        }
    }

    let mut basis = RMatrix::zeros(d, d);
    for (j, (_, v, _)) in pairs.iter().enumerate() {
        basis.set_column(j, v);
    }
    for (j, (_, _, w)) in pairs.iter().enumerate() {
        basis.set_column(m + j, w);
    }
    for (j, k) in kernel.iter().enumerate() {
        basis.set_column(2 * m + j, k);
    }

    let data = LeviData {
        nu,
        matrix: l,
        m,
        lambdas: pairs.iter().map(|p| p.0).collect(),
        basis,
    };
    debug_assert!(
        (data.basis.transpose() * &data.basis - RMatrix::identity(d, d)).norm() < 1e-10,
        "normal-form basis is not orthogonal"
    );
    Ok(data)
}

/// Orthogonal projection of an algebra onto `V_1 + span(Z_nu)` realized as a
/// step-2 algebra, together with the projection data.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub source_dims: Vec<usize>,
    pub target: GradedLieAlgebra,
    /// `(d1+1) x n` matrix of the orthogonal projection in flat coordinates.
    pub projector: RMatrix,
    /// Orthonormal basis of the kernel, one flat vector per dropped direction.
    pub kernel: Vec<Vec<f64>>,
}

impl QuotientMap {
    /// Apply the projection on the algebra (and, in exponential coordinates,
    /// on the group: `psi = exp . pr . log`).
    pub fn project(&self, v: &[f64]) -> Vec<f64> {
        let x = DVector::from_column_slice(v);
        (&self.projector * x).as_slice().to_vec()
    }

    pub fn project_element(&self, x: &GroupElement) -> GroupElement {
        GroupElement { coords: self.project(&x.coords), convention: x.convention }
    }
}

/// Project a step->=2 algebra onto the co-dimension-1 algebra
/// `g_{2,nu} = V_1 + span(Z_nu)` with bracket `pr([.,.])`.
pub fn quotient_codim1(alg: &GradedLieAlgebra, nu: usize) -> Result<(GradedLieAlgebra, QuotientMap)> {
    let l = levi_matrix(alg, nu)?;
    let d1 = alg.horizontal_dim();
    let n = alg.dim();
    let target = step2_from_levi(d1, std::slice::from_ref(&l))?;

    let center = alg.layer_range(2).start + nu - 1;
    let mut projector = RMatrix::zeros(d1 + 1, n);
    for j in 0..d1 {
        projector[(j, j)] = 1.0;
    }
    projector[(d1, center)] = 1.0;

    let kernel: Vec<Vec<f64>> = (d1..n)
        .filter(|&k| k != center)
        .map(|k| {
            let mut v = vec![0.0; n];
            v[k] = 1.0;
            v
        })
        .collect();

    let map = QuotientMap { source_dims: alg.dims().to_vec(), target: target.clone(), projector, kernel };
    Ok((target, map))
}

/// Group-level homomorphism check `psi(x . y) = psi(x) . psi(y)`; returns the
/// largest coordinate residual over the supplied pairs.
pub fn quotient_group_residual(
    alg: &GradedLieAlgebra,
    map: &QuotientMap,
    pairs: &[(GroupElement, GroupElement)],
) -> Result<f64> {
    let mut worst = 0.0_f64;
    for (x, y) in pairs {
        let lhs = map.project_element(&bch_compose(alg, x, y)?);
        let rhs = bch_compose(&map.target, &map.project_element(x), &map.project_element(y))?;
        for (a, b) in lhs.coords.iter().zip(&rhs.coords) {
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}

/// Christoffel symbols over the orthonormal graded frame, evaluated from the
/// structure constants as
/// `G^l_jk = (1/2)(-g(X_k,[X_j,X_l]) - g(X_l,[X_k,X_j]) + g(X_j,[X_k,X_l]))`.
#[derive(Clone, Debug)]
pub struct ChristoffelSymbols {
    n: usize,
    data: Vec<f64>,
}

impl ChristoffelSymbols {
    /// `G^l_jk`, all indices 0-based over the flat frame.
    pub fn gamma(&self, j: usize, k: usize, l: usize) -> f64 {
        self.data[(j * self.n + k) * self.n + l]
    }

    pub fn dim(&self) -> usize {
        self.n
    }
}

pub fn christoffel(alg: &GradedLieAlgebra) -> ChristoffelSymbols {
    let n = alg.dim();
    // component c of [e_a, e_b]
    let comp = |a: usize, b: usize, c: usize| -> f64 {
        alg.bracket_of_generators(a, b)
            .into_iter()
            .filter(|&(i, _)| i == c)
            .map(|(_, v)| v)
            .sum()
    };
    let mut data = vec![0.0; n * n * n];
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                data[(j * n + k) * n + l] =
                    0.5 * (-comp(j, l, k) - comp(k, j, l) + comp(k, l, j));
            }
        }
    }
    ChristoffelSymbols { n, data }
}
