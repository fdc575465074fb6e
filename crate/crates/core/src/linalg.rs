//! Small wrappers around the dense solvers used throughout the crate.

use nalgebra::{Complex, DMatrix};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type RMatrix = DMatrix<f64>;

/// Eigenvalues of a Hermitian matrix, sorted ascending.
///
/// Symmetry is checked up front; the residual bound guards against callers
/// assembling an operator with the wrong adjoint structure.
pub fn hermitian_eigenvalues(a: &CMatrix, residual_tol: f64) -> Result<Vec<f64>, f64> {
    let res = hermitian_residual(a);
    if res > residual_tol {
        return Err(res);
    }
    // Work on the exactly Hermitian average so solver input is symmetric to
    // the last bit.
    let sym = (a + a.adjoint()).scale(0.5);
    let mut eigs: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eigs)
}

/// Largest entry of `A - A^H`.
pub fn hermitian_residual(a: &CMatrix) -> f64 {
    let diff = a - a.adjoint();
    diff.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Eigenvalues of a general complex matrix via its Schur form.
pub fn complex_eigenvalues(a: &CMatrix) -> Vec<C64> {
    let n = a.nrows();
    let t = a.clone().schur().unpack().1;
    (0..n).map(|i| t[(i, i)]).collect()
}

/// Group sorted real values into (value, multiplicity) clusters with an
/// absolute tolerance.
pub fn group_eigenvalues(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut groups: Vec<(f64, usize)> = Vec::new();
    for &v in sorted {
        match groups.last_mut() {
            Some((rep, count)) if (v - *rep).abs() <= tol => {
                // Running mean keeps the representative centered on the cluster.
                *rep = (*rep * *count as f64 + v) / (*count as f64 + 1.0);
                *count += 1;
            }
            _ => groups.push((v, 1)),
        }
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_check_rejects_asymmetry() {
        let a = CMatrix::from_row_slice(2, 2, &[C64::new(1.0, 0.0); 4]);
        let mut b = a.clone();
        b[(0, 1)] = C64::new(0.0, 0.5);
        assert!(hermitian_eigenvalues(&b, 1e-10).is_err());
        assert!(hermitian_eigenvalues(&a, 1e-10).is_ok());
    }

    #[test]
    fn complex_eigenvalues_of_triangular() {
        let a = CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(2.0, 1.0), C64::new(5.0, 0.0), C64::new(0.0, 0.0), C64::new(-1.0, 3.0)],
        );
        let mut eigs = complex_eigenvalues(&a);
        eigs.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((eigs[0] - C64::new(-1.0, 3.0)).norm() < 1e-12);
        assert!((eigs[1] - C64::new(2.0, 1.0)).norm() < 1e-12);
    }
}
