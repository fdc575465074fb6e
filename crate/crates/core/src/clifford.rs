//! Irreducible complex Clifford representations built by tensor recursion,
//! and spectra of weighted sums of generator pair products.

use crate::error::{CoreError, Result};
use crate::linalg::{group_eigenvalues, hermitian_eigenvalues, C64, CMatrix};

/// Generator count cap; dimensions stay at most `2^6 = 64`.
pub const GENERATOR_CAP: usize = 12;

/// A complex Clifford representation: `d` generator matrices of size
/// `2^floor(d/2)` with entries in `{0, +-1, +-i}` satisfying
/// `c_j^2 = -I` and `c_j c_k + c_k c_j = 0` for `j != k`.
#[derive(Clone, Debug)]
pub struct CliffordRep {
    d: usize,
    gens: Vec<CMatrix>,
}

impl CliffordRep {
    pub fn d(&self) -> usize {
        self.d
    }

    /// Representation dimension `2^floor(d/2)`.
    pub fn dim(&self) -> usize {
        1 << (self.d / 2)
    }

    /// The `j`-th generator matrix, 0-based.
    pub fn generator(&self, j: usize) -> &CMatrix {
        &self.gens[j]
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.gens
    }
}

fn e1() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[C64::new(0.0, 1.0), C64::ZERO, C64::ZERO, C64::new(0.0, -1.0)])
}

fn e2() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[C64::ZERO, C64::new(0.0, 1.0), C64::new(0.0, 1.0), C64::ZERO])
}

fn e3() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[C64::ZERO, C64::new(-1.0, 0.0), C64::new(1.0, 0.0), C64::ZERO])
}

/// Grading operator `-i E_1 = diag(1, -1)`; used as the pass-through tensor
/// carrier so that squares stay `-I` in the plain matrix tensor product.
fn s3() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[C64::new(1.0, 0.0), C64::ZERO, C64::ZERO, C64::new(-1.0, 0.0)])
}

/// Build the rank-`d` representation by the two-step tensor recursion
/// `Cl(d) = Cl(d-2) (x) Cl(2)`.
///
/// New generators occupy the pair slots `m` and `2m` (1-based) as
/// `I (x) E_2` and `I (x) E_3`; inherited generators tensor with the grading
/// operator `diag(1,-1)`, which preserves anticommutation, keeps every entry
/// in `{0, +-1, +-i}` and leaves all pair-product spectra unchanged.
pub fn build_rep(d: usize) -> Result<CliffordRep> {
    if d == 0 || d > GENERATOR_CAP {
        return Err(CoreError::CliffordSizeCap { d, cap: GENERATOR_CAP });
    }
    let gens = match d {
        1 => vec![CMatrix::from_row_slice(1, 1, &[C64::new(0.0, 1.0)])],
        2 => vec![e2(), e3()],
        _ => {
            let smaller = build_rep(d - 2)?.gens;
            let m = d / 2;
            let dim_small = 1 << ((d - 2) / 2);
            let id = CMatrix::identity(dim_small, dim_small);
            let carrier = s3();
            let mut gens = Vec::with_capacity(d);
            for j in 1..=d {
                let g = if j == m {
                    id.kronecker(&e2())
                } else if j == 2 * m {
                    id.kronecker(&e3())
                } else {
                    // inherited slots, skipping the two new positions
                    let small_index = if j < m {
                        j
                    } else if j < 2 * m {
                        j - 1
                    } else {
                        j - 2
                    };
                    smaller[small_index - 1].kronecker(&carrier)
                };
                gens.push(g);
            }
            gens
        }
    };
    Ok(CliffordRep { d, gens })
}

/// Multiplicities of `+i` and `-i` in the spectrum of `c_k c_l` (`k != l`,
/// 0-based), computed exactly from the trace of the involution.
pub fn pair_product_eigs(rep: &CliffordRep, k: usize, l: usize) -> Result<(usize, usize)> {
    if k == l {
        return Err(CoreError::EqualPairIndices);
    }
    let p = rep.generator(k) * rep.generator(l);
    let n = rep.dim();
    debug_assert_eq!(&p * &p, -CMatrix::identity(n, n));
    // spectrum in {+i, -i}: trace = (n_plus - n_minus) i, exactly
    let tr = p.trace();
    let diff = tr.im.round() as i64;
    let plus = ((n as i64 + diff) / 2) as usize;
    Ok((plus, n - plus))
}

/// Spectrum of the weighted pair sum `sum_j lambda_j c_j c_{m+j}`.
#[derive(Clone, Debug)]
pub struct WeightedPairSum {
    pub m: usize,
    pub lambdas: Vec<f64>,
    /// The skew-Hermitian matrix itself.
    pub matrix: CMatrix,
    /// Eigenvalues `i*mu` as `(mu, multiplicity)`, ascending in `mu`.
    pub spectrum: Vec<(f64, usize)>,
}

impl WeightedPairSum {
    pub fn lambda_sum(&self) -> f64 {
        self.lambdas.iter().sum()
    }
}

/// Diagonalize `sum_j lambda_j c(e_j) c(e_{m+j})` with a Hermitian solve on
/// `i * matrix`; eigenvalues are grouped at relative tolerance `1e-9`.
pub fn weighted_sum_spectrum(rep: &CliffordRep, lambdas: &[f64]) -> Result<WeightedPairSum> {
    let m = lambdas.len();
    if 2 * m > rep.d() {
        return Err(CoreError::PairingOutOfRange { two_m: 2 * m, d: rep.d() });
    }
    if let Some(&bad) = lambdas.iter().find(|&&l| !(l > 0.0)) {
        return Err(CoreError::Unsupported(format!("pair weights must be positive, got {bad}")));
    }
    let n = rep.dim();
    let mut matrix = CMatrix::zeros(n, n);
    for (j, &lam) in lambdas.iter().enumerate() {
        matrix += (rep.generator(j) * rep.generator(m + j)).scale(lam);
    }
    // i * matrix is Hermitian; eigen(matrix) = { i*mu : mu = -eigen(i*matrix) }
    let herm = matrix.map(|z| C64::new(0.0, 1.0) * z);
    let eta = hermitian_eigenvalues(&herm, 1e-10)
        .map_err(|res| CoreError::NotHermitian { residual: res, tol: 1e-10 })?;
    let mut mu: Vec<f64> = eta.into_iter().map(|e| -e).collect();
    mu.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let lambda_sum: f64 = lambdas.iter().sum();
    let spectrum = group_eigenvalues(&mu, 1e-9 * lambda_sum);
    Ok(WeightedPairSum { m, lambdas: lambdas.to_vec(), matrix, spectrum })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry_is_exact(z: C64) -> bool {
        let vals = [0.0, 1.0, -1.0];
        (vals.contains(&z.re) && z.im == 0.0) || (vals.contains(&z.im) && z.re == 0.0)
    }

    #[test]
    fn base_cases_match_generator_table() {
        let r1 = build_rep(1).unwrap();
        assert_eq!(r1.generator(0)[(0, 0)], C64::new(0.0, 1.0));

        let r2 = build_rep(2).unwrap();
        assert_eq!(r2.generator(0), &e2());
        assert_eq!(r2.generator(1), &e3());

        // odd rank: the inherited top slot lands on E_1
        let r3 = build_rep(3).unwrap();
        assert_eq!(r3.generator(0), &e2());
        assert_eq!(r3.generator(1), &e3());
        assert_eq!(r3.generator(2), &e1());
    }

    #[test]
    fn relations_hold_exactly_up_to_cap() {
        for d in 1..=GENERATOR_CAP {
            let rep = build_rep(d).unwrap();
            let n = rep.dim();
            assert_eq!(n, 1 << (d / 2));
            let minus_id = -CMatrix::identity(n, n);
            for j in 0..d {
                assert_eq!(rep.generator(j) * rep.generator(j), minus_id, "square d={d} j={j}");
                assert!(rep.generator(j).iter().all(|&z| entry_is_exact(z)));
                for k in (j + 1)..d {
                    let anti = rep.generator(j) * rep.generator(k)
                        + rep.generator(k) * rep.generator(j);
                    assert_eq!(anti, CMatrix::zeros(n, n), "anticommutator d={d} ({j},{k})");
                }
            }
        }
        assert!(build_rep(GENERATOR_CAP + 1).is_err());
    }

    #[test]
    fn pair_products_split_evenly() {
        for d in [2usize, 4, 6] {
            let rep = build_rep(d).unwrap();
            for k in 0..d {
                for l in 0..d {
                    if k == l {
                        assert!(pair_product_eigs(&rep, k, l).is_err());
                        continue;
                    }
                    let (p, m) = pair_product_eigs(&rep, k, l).unwrap();
                    assert_eq!(p, rep.dim() / 2);
                    assert_eq!(m, rep.dim() / 2);

                    // dense eigensolver oracle on the Hermitian matrix i * c_k c_l
                    let prod = rep.generator(k) * rep.generator(l);
                    let herm = prod.map(|z| C64::new(0.0, 1.0) * z);
                    let eigs = hermitian_eigenvalues(&herm, 1e-10).unwrap();
                    let plus_oracle = eigs.iter().filter(|&&e| e < 0.0).count();
                    assert_eq!(plus_oracle, p);
                }
            }
        }
    }

    #[test]
    fn unit_weight_spectrum_is_binomial() {
        // irreducible pattern mu_l = -m + 2l with multiplicity C(m, l)
        for m in 1..=4usize {
            let rep = build_rep(2 * m).unwrap();
            let sum = weighted_sum_spectrum(&rep, &vec![1.0; m]).unwrap();
            assert_eq!(sum.spectrum.len(), m + 1);
            let mut choose = 1usize;
            for (l, &(mu, mult)) in sum.spectrum.iter().enumerate() {
                let expect = -(m as f64) + 2.0 * l as f64;
                assert!((mu - expect).abs() < 1e-9, "m={m} l={l} mu={mu}");
                assert_eq!(mult, choose);
                choose = choose * (m - l) / (l + 1);
            }
        }
    }

    #[test]
    fn weighted_spectrum_h5_and_endpoints() {
        let rep = build_rep(4).unwrap();
        let sum = weighted_sum_spectrum(&rep, &[1.0, 2.0]).unwrap();
        let expected = [(-3.0, 1), (-1.0, 1), (1.0, 1), (3.0, 1)];
        assert_eq!(sum.spectrum.len(), expected.len());
        for (&(mu, mult), &(emu, emult)) in sum.spectrum.iter().zip(&expected) {
            assert!((mu - emu).abs() < 1e-9);
            assert_eq!(mult, emult);
        }
    }

    #[test]
    fn reducible_case_scales_multiplicity() {
        // d > 2m: the irreducible pattern appears dim / 2^m times
        for (d, m) in [(3usize, 1usize), (4, 1), (6, 2)] {
            let rep = build_rep(d).unwrap();
            let copies = rep.dim() >> m;
            let sum = weighted_sum_spectrum(&rep, &vec![1.0; m]).unwrap();
            let mut choose = 1usize;
            for (l, &(_, mult)) in sum.spectrum.iter().enumerate() {
                assert_eq!(mult, choose * copies, "d={d} m={m} l={l}");
                choose = choose * (m - l) / (l + 1);
            }
        }
    }

    #[test]
    fn pair_sums_commute_exactly() {
        let rep = build_rep(6).unwrap();
        let m = 3;
        for j in 0..m {
            for k in 0..m {
                if j == k {
                    continue;
                }
                let a = rep.generator(j) * rep.generator(m + j);
                let b = rep.generator(k) * rep.generator(m + k);
                assert_eq!(&a * &b, &b * &a);
            }
        }
    }

    #[test]
    fn random_weights_stay_in_envelope() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(3);
        let rep = build_rep(6).unwrap();
        for _ in 0..25 {
            let lambdas: Vec<f64> = (0..3).map(|_| rng.gen_range(0.1..4.0)).collect();
            let total: f64 = lambdas.iter().sum();
            let sum = weighted_sum_spectrum(&rep, &lambdas).unwrap();
            let lo = sum.spectrum.first().unwrap().0;
            let hi = sum.spectrum.last().unwrap().0;
            assert!(lo >= -total - 1e-9 && hi <= total + 1e-9);
            assert!((lo + total).abs() < 1e-9, "lower endpoint attained");
            assert!((hi - total).abs() < 1e-9, "upper endpoint attained");
        }
    }
}
