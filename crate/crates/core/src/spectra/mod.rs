//! Closed-form horizontal Dirac spectra on compact nilmanifolds of
//! `H^{2m+1} x R^{d-2m}`, assembled blockwise from the torus part and the
//! oscillator (Landau) part, plus an independent truncation oracle and
//! eigenvalue-counting utilities.

mod counting;
mod hermite;

pub use counting::{counting_function, dimension_fit, zeta_scan, FitResult, ValueTable, ZetaScan};
pub use hermite::{hermite_oracle, HermiteTruncation};

use std::f64::consts::PI;

use crate::clifford::{build_rep, weighted_sum_spectrum, CliffordRep};
use crate::error::{CoreError, Result};

/// One of the `2^d` spin structures: a sign per horizontal direction
/// controlling integer vs half-integer Fourier modes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinStructure {
    delta: Vec<i8>,
}

impl SpinStructure {
    pub fn new(delta: Vec<i8>) -> Result<Self> {
        if delta.iter().any(|&d| d != 1 && d != -1) {
            return Err(CoreError::Unsupported(
                "spin structure entries must be +1 or -1".into(),
            ));
        }
        Ok(SpinStructure { delta })
    }

    /// The trivial structure `(+1, ..., +1)`.
    pub fn trivial(d: usize) -> Self {
        SpinStructure { delta: vec![1; d] }
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.delta
    }
}

/// Everything that determines the horizontal Dirac spectrum on the compact
/// nilmanifold of `H^{2m+1} x R^{d-2m}`.
#[derive(Clone, Debug)]
pub struct NilmanifoldSpec {
    pub m: usize,
    /// Levi eigenvalue moduli `lambda_1..lambda_m`, all positive.
    pub lambdas: Vec<f64>,
    /// Horizontal rank, `d >= 2m`.
    pub d: usize,
    pub delta: SpinStructure,
    pub rep: CliffordRep,
}

impl NilmanifoldSpec {
    pub fn new(m: usize, lambdas: Vec<f64>, d: usize, delta: SpinStructure) -> Result<Self> {
        if m == 0 || lambdas.len() != m {
            return Err(CoreError::DimensionMismatch(format!(
                "need m >= 1 pair weights, got m={m} with {} weights",
                lambdas.len()
            )));
        }
        if let Some(&bad) = lambdas.iter().find(|&&l| !(l > 0.0)) {
            return Err(CoreError::Unsupported(format!(
                "Levi eigenvalue moduli must be positive, got {bad}"
            )));
        }
        if d < 2 * m {
            return Err(CoreError::PairingOutOfRange { two_m: 2 * m, d });
        }
        if delta.len() != d {
            return Err(CoreError::DimensionMismatch(format!(
                "spin structure has {} signs, horizontal rank is {d}",
                delta.len()
            )));
        }
        let rep = build_rep(d)?;
        Ok(NilmanifoldSpec { m, lambdas, d, delta, rep })
    }

    /// The standard Heisenberg nilmanifold `H^{2m+1}` with unit Levi weights
    /// and trivial spin structure.
    pub fn heisenberg(m: usize) -> Self {
        NilmanifoldSpec::new(m, vec![1.0; m], 2 * m, SpinStructure::trivial(2 * m))
            .expect("valid stock spec")
    }

    /// Spinor-bundle rank `2^floor(d/2)`.
    pub fn spinor_rank(&self) -> u64 {
        1 << (self.d / 2)
    }
}

/// Enumerate lattice vectors in doubled units: component `h_j` is even when
/// `delta_j = +1` (integer mode) and odd when `delta_j = -1` (half-integer
/// mode), with `|h_j/2| <= bound`. Lexicographic order.
pub fn allowed_lattice(delta: &[i8], bound: f64) -> Vec<Vec<i32>> {
    if bound < 0.0 {
        return Vec::new();
    }
    let limit = (2.0 * bound).floor() as i32;
    let mut out: Vec<Vec<i32>> = vec![Vec::new()];
    for &sign in delta {
        let parity = if sign == 1 { 0 } else { 1 };
        let mut next = Vec::with_capacity(out.len() * (limit as usize + 1));
        for prefix in &out {
            let mut h = -limit;
            while h <= limit {
                if (h.rem_euclid(2)) == parity {
                    let mut v = prefix.clone();
                    v.push(h);
                    next.push(v);
                }
                h += 1;
            }
        }
        out = next;
    }
    out
}

/// Convert a doubled-unit lattice vector to its real coordinates.
pub fn lattice_to_f64(half: &[i32]) -> Vec<f64> {
    half.iter().map(|&h| h as f64 / 2.0).collect()
}

/// Label of one eigenvalue block of `(D^H)^2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BlockLabel {
    /// Fourier mode `alpha` of the torus part (doubled units).
    Torus { alpha_half: Vec<i32> },
    /// Oscillator block at central parameter `tau`, abelian mode `gamma`
    /// (doubled units), oscillator index `kappa` and Clifford offset slot.
    Landau { tau: i64, gamma_half: Vec<i32>, kappa: Vec<u32>, offset_index: usize },
}

/// One eigenvalue of `(D^H)^2` with its label and multiplicity.
#[derive(Clone, Debug)]
pub struct EigenBlock {
    pub label: BlockLabel,
    /// Eigenvalue of `(D^H)^2`; the Dirac modulus is its square root.
    pub square_value: f64,
    pub mult: u64,
}

impl EigenBlock {
    pub fn dirac_abs(&self) -> f64 {
        self.square_value.max(0.0).sqrt()
    }
}

/// Enumeration cutoffs for a spectrum table.
#[derive(Clone, Copy, Debug)]
pub struct Cutoffs {
    pub tau_max: i64,
    pub kappa_max: u32,
    pub alpha_bound: f64,
    pub gamma_bound: f64,
}

/// All blocks of `(D^H)^2` below the given cutoffs; complete in the sense
/// that every admissible label within the cutoffs appears exactly once.
#[derive(Clone, Debug)]
pub struct SpectrumTable {
    pub m: usize,
    pub lambdas: Vec<f64>,
    pub d: usize,
    pub spinor_rank: u64,
    pub cutoffs: Cutoffs,
    pub blocks: Vec<EigenBlock>,
}

/// Torus blocks: one per admissible Fourier mode, eigenvalue
/// `4 pi^2 (sum_j lambda_j (a_j^2 + a_{m+j}^2) + sum_{j>2m} a_j^2)`,
/// multiplicity `2^floor(d/2)`.
pub fn torus_block(spec: &NilmanifoldSpec, bound: f64) -> Vec<EigenBlock> {
    let rank = spec.spinor_rank();
    allowed_lattice(spec.delta.signs(), bound)
        .into_iter()
        .map(|alpha_half| {
            let a = lattice_to_f64(&alpha_half);
            let mut q = 0.0;
            for j in 0..spec.m {
                q += spec.lambdas[j] * (a[j] * a[j] + a[spec.m + j] * a[spec.m + j]);
            }
            for aj in a.iter().skip(2 * spec.m) {
                q += aj * aj;
            }
            EigenBlock {
                label: BlockLabel::Torus { alpha_half },
                square_value: 4.0 * PI * PI * q,
                mult: rank,
            }
        })
        .collect()
}

/// Real spectrum of `-2 pi i tau sum_j lambda_j c_j c_{m+j}` as
/// `(offset, multiplicity)` pairs, ascending. The extreme offsets
/// `+- 2 pi |tau| sum lambda_j` are always attained.
pub fn clifford_offsets(spec: &NilmanifoldSpec, tau: i64) -> Result<Vec<(f64, u64)>> {
    if tau == 0 {
        return Err(CoreError::ZeroTau);
    }
    let pair_sum = weighted_sum_spectrum(&spec.rep, &spec.lambdas)?;
    // eigen(matrix) = i*mu  =>  eigen(-2 pi i tau matrix) = 2 pi tau mu
    let mut offsets: Vec<(f64, u64)> = pair_sum
        .spectrum
        .iter()
        .map(|&(mu, mult)| (2.0 * PI * tau as f64 * mu, mult as u64))
        .collect();
    offsets.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    Ok(offsets)
}

/// Landau blocks for fixed `tau != 0` and admissible abelian mode `gamma`:
/// eigenvalues `2 pi |tau| sum_j lambda_j (2 kappa_j + 1) + offset
/// + 4 pi^2 sum_k gamma_k^2`, each with multiplicity
/// `(offset multiplicity) * |tau|^m`.
pub fn landau_block(
    spec: &NilmanifoldSpec,
    tau: i64,
    gamma_half: &[i32],
    kappa_max: u32,
) -> Result<Vec<EigenBlock>> {
    if tau == 0 {
        return Err(CoreError::ZeroTau);
    }
    let abelian = &spec.delta.signs()[2 * spec.m..];
    if gamma_half.len() != abelian.len() {
        return Err(CoreError::DimensionMismatch(format!(
            "gamma has {} components, expected {}",
            gamma_half.len(),
            abelian.len()
        )));
    }
    for (k, (&h, &sign)) in gamma_half.iter().zip(abelian).enumerate() {
        let parity = if sign == 1 { 0 } else { 1 };
        if h.rem_euclid(2) != parity {
            return Err(CoreError::ParityMismatch(2 * spec.m + k + 1));
        }
    }
    let offsets = clifford_offsets(spec, tau)?;
    let tau_abs = tau.unsigned_abs();
    let rep_factor = tau_abs.pow(spec.m as u32);
    let gamma_sq: f64 = lattice_to_f64(gamma_half).iter().map(|g| g * g).sum();
    let gamma_term = 4.0 * PI * PI * gamma_sq;

    let mut blocks = Vec::new();
    let mut kappa = vec![0u32; spec.m];
    loop {
        let oscillator: f64 = kappa
            .iter()
            .zip(&spec.lambdas)
            .map(|(&k, &lam)| 2.0 * PI * tau_abs as f64 * lam * (2.0 * k as f64 + 1.0))
            .sum();
        for (offset_index, &(offset, off_mult)) in offsets.iter().enumerate() {
            let square_value = (oscillator + offset + gamma_term).max(0.0);
            blocks.push(EigenBlock {
                label: BlockLabel::Landau {
                    tau,
                    gamma_half: gamma_half.to_vec(),
                    kappa: kappa.clone(),
                    offset_index,
                },
                square_value,
                mult: off_mult * rep_factor,
            });
        }
        // odometer over kappa in lexicographic order
        let mut pos = spec.m;
        loop {
            if pos == 0 {
                return Ok(blocks);
            }
            pos -= 1;
            if kappa[pos] < kappa_max {
                kappa[pos] += 1;
                for k in kappa.iter_mut().skip(pos + 1) {
                    *k = 0;
                }
                break;
            }
        }
    }
}

/// Visit every block below the cutoffs in deterministic label order.
pub fn for_each_block(
    spec: &NilmanifoldSpec,
    cutoffs: &Cutoffs,
    mut f: impl FnMut(EigenBlock),
) -> Result<()> {
    for b in torus_block(spec, cutoffs.alpha_bound) {
        f(b);
    }
    let gamma_signs = &spec.delta.signs()[2 * spec.m..];
    let gammas = allowed_lattice(gamma_signs, cutoffs.gamma_bound);
    for tau in -cutoffs.tau_max..=cutoffs.tau_max {
        if tau == 0 {
            continue;
        }
        for gamma in &gammas {
            for b in landau_block(spec, tau, gamma, cutoffs.kappa_max)? {
                f(b);
            }
        }
    }
    Ok(())
}

/// Assemble the labeled spectrum table below the cutoffs.
pub fn dirac_spectrum(spec: &NilmanifoldSpec, cutoffs: &Cutoffs) -> Result<SpectrumTable> {
    let mut blocks = Vec::new();
    for_each_block(spec, cutoffs, |b| blocks.push(b))?;
    Ok(SpectrumTable {
        m: spec.m,
        lambdas: spec.lambdas.clone(),
        d: spec.d,
        spinor_rank: spec.spinor_rank(),
        cutoffs: *cutoffs,
        blocks,
    })
}

impl SpectrumTable {
    /// Total multiplicity of the zero eigenvalue.
    pub fn kernel_multiplicity(&self) -> u64 {
        self.blocks
            .iter()
            .filter(|b| b.square_value <= 1e-9)
            .map(|b| b.mult)
            .sum()
    }

    /// Sorted `(|mu|, multiplicity)` view for counting and zeta scans.
    pub fn values(&self) -> ValueTable {
        ValueTable::from_blocks(self.blocks.iter().map(|b| (b.dirac_abs(), b.mult)))
    }

    /// Signed Dirac eigenvalues, available only for `m = 1` where the sign
    /// split is known exactly. Landau blocks with equal `(tau, gamma, value)`
    /// are merged before splitting, since the per-block multiplicity `|tau|`
    /// need not be even.
    pub fn signed_values(&self) -> Option<Vec<(f64, u64)>> {
        if self.m != 1 {
            return None;
        }
        let mut out: Vec<(f64, u64)> = Vec::new();
        let mut push_split = |value: f64, mult: u64| {
            if value <= 1e-12 {
                out.push((0.0, mult));
            } else {
                debug_assert!(mult % 2 == 0, "sign split needs even multiplicity");
                let half = mult / 2;
                out.push((-value.sqrt(), half));
                out.push((value.sqrt(), half));
            }
        };
        // torus blocks split individually; spinor rank is even for d >= 2
        for b in &self.blocks {
            if matches!(b.label, BlockLabel::Torus { .. }) {
                push_split(b.square_value, b.mult);
            }
        }
        // Landau blocks: merge by (tau, gamma, rounded value)
        let mut merged: std::collections::BTreeMap<(i64, Vec<i32>, i64), (f64, u64)> =
            std::collections::BTreeMap::new();
        for b in &self.blocks {
            if let BlockLabel::Landau { tau, ref gamma_half, .. } = b.label {
                let key_val = (b.square_value * 1e9).round() as i64;
                let entry = merged
                    .entry((tau, gamma_half.clone(), key_val))
                    .or_insert((b.square_value, 0));
                entry.1 += b.mult;
            }
        }
        for (_, (value, mult)) in merged {
            push_split(value, mult);
        }
        out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lattice_enumeration_matches_parity() {
        // trivial structure: 9 integer points of [-1,1]^2
        assert_eq!(allowed_lattice(&[1, 1], 1.0).len(), 9);
        // fully twisted: {+-1/2}^2
        let pts = allowed_lattice(&[-1, -1], 1.0);
        assert_eq!(pts.len(), 4);
        assert!(pts.iter().all(|p| p.iter().all(|&h| h.abs() == 1)));
        // mixed: {-1,0,1} x {+-1/2}
        assert_eq!(allowed_lattice(&[1, -1], 1.0).len(), 6);
    }

    #[test]
    fn torus_blocks_on_h3() {
        let spec = NilmanifoldSpec::heisenberg(1);
        let blocks = torus_block(&spec, 1.0);
        assert_eq!(blocks.len(), 9);
        for b in &blocks {
            assert_eq!(b.mult, 2);
        }
        // alpha = 0 has eigenvalue zero
        let zero = blocks
            .iter()
            .find(|b| matches!(&b.label, BlockLabel::Torus { alpha_half } if alpha_half == &vec![0, 0]))
            .unwrap();
        assert_eq!(zero.square_value, 0.0);
        // alpha = (1,0): |mu| = 2 pi
        let one = blocks
            .iter()
            .find(|b| matches!(&b.label, BlockLabel::Torus { alpha_half } if alpha_half == &vec![2, 0]))
            .unwrap();
        assert_relative_eq!(one.dirac_abs(), 2.0 * PI, epsilon = 1e-12);
    }

    #[test]
    fn torus_blocks_twisted_h3() {
        let spec =
            NilmanifoldSpec::new(1, vec![1.0], 2, SpinStructure::new(vec![-1, -1]).unwrap())
                .unwrap();
        let blocks = torus_block(&spec, 0.5);
        assert_eq!(blocks.len(), 4);
        for b in &blocks {
            // |mu| = 2 pi sqrt(1/2) = pi sqrt(2)
            assert_relative_eq!(b.dirac_abs(), PI * 2.0_f64.sqrt(), epsilon = 1e-12);
        }
    }

    #[test]
    fn clifford_offsets_h3_and_h5() {
        let h3 = NilmanifoldSpec::heisenberg(1);
        let offs = clifford_offsets(&h3, 1).unwrap();
        assert_eq!(offs.len(), 2);
        assert_relative_eq!(offs[0].0, -2.0 * PI, epsilon = 1e-9);
        assert_relative_eq!(offs[1].0, 2.0 * PI, epsilon = 1e-9);

        let h5 = NilmanifoldSpec::heisenberg(2);
        let offs = clifford_offsets(&h5, 1).unwrap();
        let expect = [(-4.0 * PI, 1u64), (0.0, 2), (4.0 * PI, 1)];
        assert_eq!(offs.len(), 3);
        for (&(o, m), &(eo, em)) in offs.iter().zip(&expect) {
            assert_relative_eq!(o, eo, epsilon = 1e-8);
            assert_eq!(m, em);
        }

        let offs = clifford_offsets(&h3, -3).unwrap();
        assert_relative_eq!(offs[0].0, -6.0 * PI, epsilon = 1e-8);
        assert_relative_eq!(offs[1].0, 6.0 * PI, epsilon = 1e-8);
        assert!(clifford_offsets(&h3, 0).is_err());
    }

    #[test]
    fn landau_blocks_h3() {
        let spec = NilmanifoldSpec::heisenberg(1);
        let blocks = landau_block(&spec, 1, &[], 1).unwrap();
        // kappa in {0,1}, two offsets each
        assert_eq!(blocks.len(), 4);
        // kernel block: kappa=0 with offset -2pi
        let kernel = &blocks[0];
        assert!(kernel.square_value.abs() < 1e-9);
        assert_eq!(kernel.mult, 1);
        // kappa=1: values {4 pi, 8 pi} -> |mu| in {2 sqrt(pi), 2 sqrt(2 pi)}
        let mut k1: Vec<f64> = blocks
            .iter()
            .filter(|b| matches!(&b.label, BlockLabel::Landau { kappa, .. } if kappa == &vec![1]))
            .map(|b| b.square_value)
            .collect();
        k1.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_relative_eq!(k1[0], 4.0 * PI, epsilon = 1e-8);
        assert_relative_eq!(k1[1], 8.0 * PI, epsilon = 1e-8);
    }

    #[test]
    fn landau_blocks_h5() {
        let spec = NilmanifoldSpec::heisenberg(2);
        let blocks = landau_block(&spec, 1, &[], 0).unwrap();
        // kappa = (0,0): oscillator 4 pi, offsets {-4pi, 0, 0, 4pi}
        let mut values: Vec<(f64, u64)> =
            blocks.iter().map(|b| (b.square_value, b.mult)).collect();
        values.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        assert_relative_eq!(values[0].0, 0.0, epsilon = 1e-8);
        assert_relative_eq!(values[1].0, 4.0 * PI, epsilon = 1e-8);
        assert_eq!(values[1].1, 2);
        assert_relative_eq!(values[2].0, 8.0 * PI, epsilon = 1e-8);
    }

    #[test]
    fn gamma_parity_checked() {
        let spec = NilmanifoldSpec::new(
            1,
            vec![1.0],
            3,
            SpinStructure::new(vec![1, 1, -1]).unwrap(),
        )
        .unwrap();
        // abelian direction is twisted: even gamma is rejected
        assert!(landau_block(&spec, 1, &[0], 1).is_err());
        assert!(landau_block(&spec, 1, &[1], 1).is_ok());
    }

    #[test]
    fn gamma_shifts_square_values_additively() {
        let spec = NilmanifoldSpec::new(
            1,
            vec![1.0],
            3,
            SpinStructure::trivial(3),
        )
        .unwrap();
        let base = landau_block(&spec, 1, &[0], 2).unwrap();
        let shifted = landau_block(&spec, 1, &[2], 2).unwrap(); // gamma = 1
        for (b, s) in base.iter().zip(&shifted) {
            assert_relative_eq!(
                s.square_value - b.square_value,
                4.0 * PI * PI,
                epsilon = 1e-8
            );
        }
    }

    #[test]
    fn kernel_count_h3() {
        // total kernel multiplicity = 2 (torus alpha=0) + 2 sum_{tau<=T} tau
        let spec = NilmanifoldSpec::heisenberg(1);
        let cutoffs = Cutoffs { tau_max: 2, kappa_max: 2, alpha_bound: 1.0, gamma_bound: 0.0 };
        let table = dirac_spectrum(&spec, &cutoffs).unwrap();
        assert_eq!(table.kernel_multiplicity(), 2 + 2 * (1 + 2));
    }

    #[test]
    fn h3_low_modes_match_remark_values() {
        // tau = 1: |mu| <= 8 should be {0, 2 sqrt(pi k)} for k = 1..5
        let spec = NilmanifoldSpec::heisenberg(1);
        let blocks = landau_block(&spec, 1, &[], 20).unwrap();
        let mut vals: Vec<f64> = blocks.iter().map(|b| b.dirac_abs()).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
        let below: Vec<f64> = vals.into_iter().take_while(|&v| v <= 8.0).collect();
        let expected: Vec<f64> =
            (0..=5).map(|k| 2.0 * (k as f64 * PI).sqrt()).collect();
        assert_eq!(below.len(), expected.len());
        for (v, e) in below.iter().zip(&expected) {
            assert_relative_eq!(v, e, epsilon = 1e-9);
        }
    }

    #[test]
    fn signed_values_h3_pair_up() {
        let spec = NilmanifoldSpec::heisenberg(1);
        let cutoffs = Cutoffs { tau_max: 3, kappa_max: 6, alpha_bound: 2.0, gamma_bound: 0.0 };
        let table = dirac_spectrum(&spec, &cutoffs).unwrap();
        let signed = table.signed_values().unwrap();
        // symmetric under negation
        let total: u64 = signed.iter().map(|&(_, m)| m).sum();
        let plus: u64 = signed.iter().filter(|&&(v, _)| v > 0.0).map(|&(_, m)| m).sum();
        let minus: u64 = signed.iter().filter(|&&(v, _)| v < 0.0).map(|&(_, m)| m).sum();
        assert_eq!(plus, minus);
        let zero: u64 = signed.iter().filter(|&&(v, _)| v == 0.0).map(|&(_, m)| m).sum();
        assert_eq!(total, plus + minus + zero);
        assert_eq!(zero, table.kernel_multiplicity());

        // tau = 2 signed Landau values carry multiplicity |tau| per sign
        let tau2: Vec<(f64, u64)> = {
            let sub = dirac_spectrum(
                &spec,
                &Cutoffs { tau_max: 2, kappa_max: 6, alpha_bound: -1.0, gamma_bound: 0.0 },
            )
            .unwrap();
            let all = sub.signed_values().unwrap();
            all.into_iter().filter(|&(v, _)| v > 0.0 && v < 7.0).collect()
        };
        // positive values 2 sqrt(pi k tau) pooled over tau=1,2
        for &(v, mult) in &tau2 {
            let k1 = (v / 2.0).powi(2) / PI;
            let is_tau1 = (k1 - k1.round()).abs() < 1e-9 && k1.round() >= 1.0;
            let k2 = (v / 2.0).powi(2) / (2.0 * PI);
            let is_tau2 = (k2 - k2.round()).abs() < 1e-9 && k2.round() >= 1.0;
            let expect = (if is_tau1 { 1 } else { 0 }) + (if is_tau2 { 2 } else { 0 });
            assert_eq!(mult, expect, "value {v}");
        }
    }

    #[test]
    fn block_values_invariant_under_pair_permutation() {
        let a = NilmanifoldSpec::new(2, vec![1.0, 2.5], 4, SpinStructure::trivial(4)).unwrap();
        let b = NilmanifoldSpec::new(2, vec![2.5, 1.0], 4, SpinStructure::trivial(4)).unwrap();
        let mut va: Vec<f64> = landau_block(&a, 1, &[], 2)
            .unwrap()
            .iter()
            .map(|x| x.square_value)
            .collect();
        let mut vb: Vec<f64> = landau_block(&b, 1, &[], 2)
            .unwrap()
            .iter()
            .map(|x| x.square_value)
            .collect();
        va.sort_by(|x, y| x.partial_cmp(y).unwrap());
        vb.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for (x, y) in va.iter().zip(&vb) {
            assert_relative_eq!(x, y, epsilon = 1e-8);
        }
    }
}
