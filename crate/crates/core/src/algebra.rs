//! Graded nilpotent Lie algebras, their Carnot group arithmetic and gauges.
//!
//! An algebra is described by its layer dimensions `d_1..d_R` and sparse
//! structure constants over ordered generator pairs. All group arithmetic is
//! performed in exponential coordinates via the truncated
//! Baker-Campbell-Hausdorff series, which is exact for nilpotency step <= 4.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{CoreError, Result};
use crate::linalg::RMatrix;

/// Identifies the `index`-th generator of layer `layer`; both are 1-based,
/// matching the on-disk format and witness reporting.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct GenIndex {
    pub layer: usize,
    pub index: usize,
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.layer, self.index)
    }
}

/// One structure-constant record: `[a, b] = sum_k coeff_k * out_k`.
#[derive(Clone, Debug)]
pub struct BracketEntry {
    pub a: GenIndex,
    pub b: GenIndex,
    pub out: Vec<(GenIndex, f64)>,
}

/// Coordinate convention of a group element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    Exponential,
    Polarized,
}

impl Convention {
    fn name(self) -> &'static str {
        match self {
            Convention::Exponential => "exponential",
            Convention::Polarized => "polarized",
        }
    }
}

/// A point of the Carnot group in flat coordinates, partitioned by layer.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupElement {
    pub coords: Vec<f64>,
    pub convention: Convention,
}

impl GroupElement {
    pub fn exponential(coords: Vec<f64>) -> Self {
        GroupElement { coords, convention: Convention::Exponential }
    }

    pub fn polarized(coords: Vec<f64>) -> Self {
        GroupElement { coords, convention: Convention::Polarized }
    }
}

/// Scalars the Baker-Campbell-Hausdorff evaluation is generic over: plain
/// numbers for group arithmetic, polynomials for the vector-field realization.
pub trait BchScalar: Clone {
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, k: f64) -> Self;
}

impl BchScalar for f64 {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: f64) -> Self {
        self * k
    }
}

/// A graded nilpotent Lie algebra with sparse structure constants.
#[derive(Clone, Debug)]
pub struct GradedLieAlgebra {
    dims: Vec<usize>,
    offsets: Vec<usize>,
    /// Structure constants exactly as supplied (validation inspects these).
    raw: BTreeMap<(GenIndex, GenIndex), Vec<(GenIndex, f64)>>,
    /// Deduplicated table over flat indices `a < b` used for arithmetic.
    effective: Vec<(usize, usize, Vec<(usize, f64)>)>,
}

impl GradedLieAlgebra {
    pub fn new(dims: Vec<usize>, brackets: Vec<BracketEntry>) -> Result<Self> {
        if dims.is_empty() {
            return Err(CoreError::MalformedAlgebra("dims must be nonempty".into()));
        }
        if dims.iter().any(|&d| d == 0) {
            return Err(CoreError::MalformedAlgebra("every layer dimension must be positive".into()));
        }
        let mut offsets = Vec::with_capacity(dims.len() + 1);
        let mut acc = 0;
        for &d in &dims {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);

        let step = dims.len();
        let check = |g: GenIndex| -> Result<()> {
            if g.layer == 0 || g.layer > step || g.index == 0 || g.index > dims[g.layer - 1] {
                return Err(CoreError::MalformedAlgebra(format!(
                    "generator {g} out of range for dims {dims:?}"
                )));
            }
            Ok(())
        };
        let mut raw = BTreeMap::new();
        for e in brackets {
            check(e.a)?;
            check(e.b)?;
            for &(g, _) in &e.out {
                check(g)?;
            }
            if raw.insert((e.a, e.b), e.out).is_some() {
                return Err(CoreError::MalformedAlgebra(format!(
                    "duplicate bracket entry for pair ({}, {})",
                    e.a, e.b
                )));
            }
        }

        let mut alg = GradedLieAlgebra { dims, offsets, raw, effective: Vec::new() };
        alg.rebuild_effective();
        Ok(alg)
    }

    fn rebuild_effective(&mut self) {
        let n = self.dim();
        let mut table: BTreeMap<(usize, usize), Vec<(usize, f64)>> = BTreeMap::new();
        for (&(a, b), out) in &self.raw {
            let fa = self.flat(a);
            let fb = self.flat(b);
            if fa == fb {
                continue;
            }
            let (key, sign) = if fa < fb { ((fa, fb), 1.0) } else { ((fb, fa), -1.0) };
            // Prefer the entry stored with ascending flat order; the reversed
            // one only fills gaps (antisymmetry violations are reported by
            // validation, not silently averaged here).
            if sign > 0.0 || !table.contains_key(&key) {
                let v: Vec<(usize, f64)> =
                    out.iter().map(|&(g, c)| (self.flat(g), sign * c)).collect();
                table.insert(key, v);
            }
        }
        self.effective = table
            .into_iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|((a, b), v)| (a, b, v))
            .collect();
        debug_assert!(self.effective.iter().all(|&(a, b, _)| a < b && b < n));
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn step(&self) -> usize {
        self.dims.len()
    }

    /// Total vector-space dimension.
    pub fn dim(&self) -> usize {
        self.offsets[self.dims.len()]
    }

    /// Dimension of the horizontal (first) layer.
    pub fn horizontal_dim(&self) -> usize {
        self.dims[0]
    }

    /// Flat coordinate range of layer `s` (1-based).
    pub fn layer_range(&self, s: usize) -> std::ops::Range<usize> {
        self.offsets[s - 1]..self.offsets[s]
    }

    /// Layer (1-based) containing flat coordinate `k`.
    pub fn layer_of(&self, k: usize) -> usize {
        self.offsets.iter().position(|&o| o > k).expect("flat index in range")
    }

    pub fn flat(&self, g: GenIndex) -> usize {
        self.offsets[g.layer - 1] + g.index - 1
    }

    pub fn gen_of_flat(&self, k: usize) -> GenIndex {
        let layer = self.layer_of(k);
        GenIndex { layer, index: k - self.offsets[layer - 1] + 1 }
    }

    /// Raw stored constants (used by validation and serialization).
    pub fn raw_brackets(&self) -> impl Iterator<Item = (GenIndex, GenIndex, &[(GenIndex, f64)])> {
        self.raw.iter().map(|(&(a, b), v)| (a, b, v.as_slice()))
    }

    /// Bracket of two basis generators in flat coordinates, resolving the
    /// stored orientation.
    pub fn bracket_of_generators(&self, a: usize, b: usize) -> Vec<(usize, f64)> {
        if a == b {
            return Vec::new();
        }
        let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
        self.effective
            .iter()
            .find(|&&(x, y, _)| x == lo && y == hi)
            .map(|(_, _, v)| v.iter().map(|&(k, c)| (k, sign * c)).collect())
            .unwrap_or_default()
    }

    /// Bilinear extension of the bracket, generic in the coefficient ring.
    pub fn bracket<T: BchScalar>(&self, x: &[T], y: &[T], zero: &T) -> Vec<T> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        assert_eq!(y.len(), n);
        let mut z = vec![zero.clone(); n];
        for &(a, b, ref out) in &self.effective {
            // coefficient of [e_a, e_b] in [x, y]: x_a y_b - x_b y_a
            let c = x[a].mul(&y[b]).add(&x[b].mul(&y[a]).scale(-1.0));
            for &(k, v) in out {
                z[k] = z[k].add(&c.scale(v));
            }
        }
        z
    }

    /// Truncated Baker-Campbell-Hausdorff series in the algebra,
    /// `x + y + [x,y]/2 + ([x,[x,y]] + [y,[y,x]])/12 - [y,[x,[x,y]]]/24`,
    /// exact for nilpotency step <= 4.
    pub fn bch<T: BchScalar>(&self, x: &[T], y: &[T], zero: &T) -> Vec<T> {
        let n = self.dim();
        let add = |u: &[T], v: &[T], k: f64| -> Vec<T> {
            (0..n).map(|i| u[i].add(&v[i].scale(k))).collect()
        };
        let mut z: Vec<T> = (0..n).map(|i| x[i].add(&y[i])).collect();
        if self.step() >= 2 {
            let xy = self.bracket(x, y, zero);
            z = add(&z, &xy, 0.5);
            if self.step() >= 3 {
                let xxy = self.bracket(x, &xy, zero);
                let yyx: Vec<T> = {
                    let yx: Vec<T> = xy.iter().map(|t| t.scale(-1.0)).collect();
                    self.bracket(y, &yx, zero)
                };
                z = add(&z, &xxy, 1.0 / 12.0);
                z = add(&z, &yyx, 1.0 / 12.0);
                if self.step() >= 4 {
                    let yxxy = self.bracket(y, &xxy, zero);
                    z = add(&z, &yxxy, -1.0 / 24.0);
                }
            }
        }
        z
    }
}

/// Outcome of checking all structural invariants of an algebra.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug)]
pub enum Violation {
    Antisymmetry { a: GenIndex, b: GenIndex, residual: f64 },
    Grading { a: GenIndex, b: GenIndex, out: GenIndex, expected_layer: usize },
    Jacobi { a: GenIndex, b: GenIndex, c: GenIndex, residual: f64 },
    NotBracketGenerating { layer: usize, achieved_rank: usize, required: usize },
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            match v {
                Violation::Antisymmetry { a, b, residual } => {
                    writeln!(f, "antisymmetry violated at ({a}, {b}): residual {residual:.3e}")?
                }
                Violation::Grading { a, b, out, expected_layer } => writeln!(
                    f,
                    "grading violated: [{a}, {b}] has a component on {out}, expected layer {expected_layer}"
                )?,
                Violation::Jacobi { a, b, c, residual } => {
                    writeln!(f, "Jacobi identity violated at ({a}, {b}, {c}): residual {residual:.3e}")?
                }
                Violation::NotBracketGenerating { layer, achieved_rank, required } => writeln!(
                    f,
                    "layer {layer} not bracket-generated: rank {achieved_rank} of {required}"
                )?,
            }
        }
        Ok(())
    }
}

const JACOBI_TOL: f64 = 1e-12;
const RANK_TOL: f64 = 1e-10;

/// Check antisymmetry, grading, the Jacobi identity and the
/// bracket-generating property, reporting every violation with a witness.
pub fn validate_algebra(alg: &GradedLieAlgebra) -> ValidationReport {
    let mut report = ValidationReport::default();
    let n = alg.dim();
    let scale = alg
        .raw
        .values()
        .flat_map(|v| v.iter().map(|&(_, c)| c.abs()))
        .fold(1.0_f64, f64::max);

    // Grading: every stored component must live on layer S+T.
    for (a, b, out) in alg.raw_brackets() {
        let expected = a.layer + b.layer;
        for &(g, c) in out {
            if c != 0.0 && g.layer != expected {
                report.violations.push(Violation::Grading { a, b, out: g, expected_layer: expected });
            }
        }
    }

    // Antisymmetry: a pair stored in one orientation only is the canonical
    // sparse form and implies the other side; a violation needs both
    // orientations present and failing to cancel, or a nonzero diagonal.
    let raw_vec = |a: GenIndex, b: GenIndex| -> Option<Vec<f64>> {
        alg.raw.get(&(a, b)).map(|out| {
            let mut v = vec![0.0; n];
            for &(g, c) in out {
                v[alg.flat(g)] += c;
            }
            v
        })
    };
    for fa in 0..n {
        for fb in fa..n {
            let a = alg.gen_of_flat(fa);
            let b = alg.gen_of_flat(fb);
            let residual = match (raw_vec(a, b), raw_vec(b, a)) {
                (Some(ab), Some(ba)) => ab
                    .iter()
                    .zip(&ba)
                    .map(|(x, y)| (x + y).abs())
                    .fold(0.0, f64::max),
                (Some(v), None) | (None, Some(v)) if fa == fb => {
                    v.iter().map(|x| x.abs()).fold(0.0, f64::max)
                }
                _ => 0.0,
            };
            if residual > JACOBI_TOL * scale {
                report.violations.push(Violation::Antisymmetry { a, b, residual });
            }
        }
    }

    // Jacobi identity, exhaustively over generator triples.
    let basis = |k: usize| -> Vec<f64> {
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        e
    };
    let zero = 0.0;
    for fa in 0..n {
        for fb in (fa + 1)..n {
            for fc in (fb + 1)..n {
                let (ea, eb, ec) = (basis(fa), basis(fb), basis(fc));
                let mut j = alg.bracket(&ea, &alg.bracket(&eb, &ec, &zero), &zero);
                let t2 = alg.bracket(&eb, &alg.bracket(&ec, &ea, &zero), &zero);
                let t3 = alg.bracket(&ec, &alg.bracket(&ea, &eb, &zero), &zero);
                for i in 0..n {
                    j[i] += t2[i] + t3[i];
                }
                let residual = j.iter().map(|x| x.abs()).fold(0.0, f64::max);
                if residual > JACOBI_TOL * scale * scale {
                    report.violations.push(Violation::Jacobi {
                        a: alg.gen_of_flat(fa),
                        b: alg.gen_of_flat(fb),
                        c: alg.gen_of_flat(fc),
                        residual,
                    });
                }
            }
        }
    }

    // Bracket generation: iterated brackets of layer-1 generators must span
    // every layer.
    let mut span: Vec<Vec<f64>> = alg.layer_range(1).map(basis).collect();
    for s in 1..alg.step() {
        let mut candidates: Vec<Vec<f64>> = Vec::new();
        for j in alg.layer_range(1) {
            let ej = basis(j);
            for w in &span {
                candidates.push(alg.bracket(&ej, w, &zero));
            }
        }
        let range = alg.layer_range(s + 1);
        let required = range.len();
        let cols: Vec<Vec<f64>> = candidates
            .iter()
            .map(|v| v[range.clone()].to_vec())
            .collect();
        let rank = if cols.is_empty() {
            0
        } else {
            let m = RMatrix::from_fn(required, cols.len(), |r, c| cols[c][r]);
            m.rank(RANK_TOL * (1.0 + scale))
        };
        if rank < required {
            report.violations.push(Violation::NotBracketGenerating {
                layer: s + 1,
                achieved_rank: rank,
                required,
            });
        }
        span = candidates;
    }

    report
}

// ---------------------------------------------------------------------------
// Group operations
// ---------------------------------------------------------------------------

/// Identity element in exponential coordinates.
pub fn identity(alg: &GradedLieAlgebra) -> GroupElement {
    GroupElement::exponential(vec![0.0; alg.dim()])
}

/// Group inverse; in exponential coordinates this is coordinate negation.
pub fn inverse(x: &GroupElement) -> GroupElement {
    GroupElement { coords: x.coords.iter().map(|c| -c).collect(), convention: x.convention }
}

/// Group composition `exp(x) . exp(y)` in exponential coordinates via the
/// truncated Baker-Campbell-Hausdorff series.
pub fn bch_compose(
    alg: &GradedLieAlgebra,
    x: &GroupElement,
    y: &GroupElement,
) -> Result<GroupElement> {
    if alg.step() > 4 {
        return Err(CoreError::UnsupportedStep { step: alg.step() });
    }
    for e in [x, y] {
        if e.convention != Convention::Exponential {
            return Err(CoreError::ConventionMismatch {
                expected: Convention::Exponential.name(),
                got: e.convention.name(),
            });
        }
        if e.coords.len() != alg.dim() {
            return Err(CoreError::DimensionMismatch(format!(
                "element has {} coordinates, algebra has dimension {}",
                e.coords.len(),
                alg.dim()
            )));
        }
    }
    let z = alg.bch(&x.coords, &y.coords, &0.0);
    Ok(GroupElement::exponential(z))
}

/// Weighted dilation: layer-`S` coordinates scale by `lambda^S`.
pub fn dilate(alg: &GradedLieAlgebra, lambda: f64, x: &GroupElement) -> Result<GroupElement> {
    if !(lambda > 0.0) {
        return Err(CoreError::NonPositiveDilation(lambda));
    }
    let mut coords = x.coords.clone();
    for s in 1..=alg.step() {
        let factor = lambda.powi(s as i32);
        for k in alg.layer_range(s) {
            coords[k] *= factor;
        }
    }
    Ok(GroupElement { coords, convention: x.convention })
}

/// Koranyi gauge `(sum_S sum_j |x_{S,j}|^{2R!/S})^{1/2R!}`.
pub fn koranyi_norm(alg: &GradedLieAlgebra, x: &GroupElement) -> Result<f64> {
    if x.convention != Convention::Exponential {
        return Err(CoreError::ConventionMismatch {
            expected: Convention::Exponential.name(),
            got: x.convention.name(),
        });
    }
    let r_fact: usize = (1..=alg.step()).product();
    let e = 2 * r_fact;
    let mut acc = 0.0;
    for s in 1..=alg.step() {
        let p = (e / s) as f64;
        for k in alg.layer_range(s) {
            acc += x.coords[k].abs().powf(p);
        }
    }
    Ok(acc.powf(1.0 / e as f64))
}

/// Koranyi quasi-distance `||y^{-1} . x||`.
pub fn koranyi_dist(alg: &GradedLieAlgebra, x: &GroupElement, y: &GroupElement) -> Result<f64> {
    let diff = bch_compose(alg, &inverse(y), x)?;
    koranyi_norm(alg, &diff)
}

// ---------------------------------------------------------------------------
// Heisenberg coordinate conversion
// ---------------------------------------------------------------------------

/// If the algebra is the standard `h_{2m+1}` (optionally times an abelian
/// horizontal factor), return `m`.
pub fn standard_heisenberg_pairs(alg: &GradedLieAlgebra) -> Result<usize> {
    if alg.step() != 2 || alg.dims()[1] != 1 {
        return Err(CoreError::NotHeisenberg(format!(
            "expected step 2 with one-dimensional center, got dims {:?}",
            alg.dims()
        )));
    }
    let d1 = alg.horizontal_dim();
    let center = alg.layer_range(2).start;
    // Collect the nonzero Levi entries on the upper triangle.
    let mut entries: Vec<(usize, usize, f64)> = Vec::new();
    for a in 0..d1 {
        for b in (a + 1)..d1 {
            let out = alg.bracket_of_generators(a, b);
            let c: f64 = out.iter().filter(|&&(k, _)| k == center).map(|&(_, v)| v).sum();
            if c != 0.0 {
                entries.push((a, b, c));
            }
        }
    }
    if entries.is_empty() {
        return Err(CoreError::NotHeisenberg("all horizontal brackets vanish".into()));
    }
    let m = entries.len();
    let ok = 2 * m <= d1
        && entries
            .iter()
            .enumerate()
            .all(|(j, &(a, b, c))| a == j && b == j + m && c == 1.0);
    if !ok {
        return Err(CoreError::NotHeisenberg(
            "horizontal brackets do not match the standard pairing [X_j, X_{m+j}] = Z".into(),
        ));
    }
    Ok(m)
}

/// Convert between exponential and polarized coordinates on a standard
/// Heisenberg-type algebra via
/// `phi(x)_{2m+1} = x_{2m+1} + (1/2) sum_j x_j x_{m+j}`.
pub fn heisenberg_coordinate_convert(
    alg: &GradedLieAlgebra,
    x: &GroupElement,
    to: Convention,
) -> Result<GroupElement> {
    let m = standard_heisenberg_pairs(alg)?;
    if x.coords.len() != alg.dim() {
        return Err(CoreError::DimensionMismatch(format!(
            "element has {} coordinates, algebra has dimension {}",
            x.coords.len(),
            alg.dim()
        )));
    }
    if x.convention == to {
        return Ok(x.clone());
    }
    let center = alg.layer_range(2).start;
    let correction: f64 = (0..m).map(|j| x.coords[j] * x.coords[j + m]).sum();
    let mut coords = x.coords.clone();
    match to {
        Convention::Polarized => coords[center] += 0.5 * correction,
        Convention::Exponential => coords[center] -= 0.5 * correction,
    }
    Ok(GroupElement { coords, convention: to })
}

// ---------------------------------------------------------------------------
// Stock algebras
// ---------------------------------------------------------------------------

fn g(layer: usize, index: usize) -> GenIndex {
    GenIndex { layer, index }
}

/// The Heisenberg algebra `h_{2m+1}`: `[X_j, X_{m+j}] = Z`.
pub fn heisenberg(m: usize) -> GradedLieAlgebra {
    heisenberg_weighted(&vec![1.0; m])
}

/// Heisenberg-type algebra with weighted pairings `[X_j, X_{m+j}] = lambda_j Z`.
pub fn heisenberg_weighted(lambdas: &[f64]) -> GradedLieAlgebra {
    let m = lambdas.len();
    assert!(m >= 1);
    let brackets = (0..m)
        .map(|j| BracketEntry {
            a: g(1, j + 1),
            b: g(1, m + j + 1),
            out: vec![(g(2, 1), lambdas[j])],
        })
        .collect();
    GradedLieAlgebra::new(vec![2 * m, 1], brackets).expect("stock algebra is well-formed")
}

/// `h_{2m+1} x R^extra` with the abelian directions appended to the
/// horizontal layer.
pub fn heisenberg_times_abelian(m: usize, extra: usize) -> GradedLieAlgebra {
    let brackets = (0..m)
        .map(|j| BracketEntry {
            a: g(1, j + 1),
            b: g(1, m + j + 1),
            out: vec![(g(2, 1), 1.0)],
        })
        .collect();
    GradedLieAlgebra::new(vec![2 * m + extra, 1], brackets).expect("stock algebra is well-formed")
}

/// The abelian algebra `R^n` (step 1).
pub fn abelian(n: usize) -> GradedLieAlgebra {
    GradedLieAlgebra::new(vec![n], Vec::new()).expect("stock algebra is well-formed")
}

/// The step-3 filiform algebra: `[X_1, X_2] = X_3`, `[X_1, X_3] = X_4`.
pub fn filiform_step3() -> GradedLieAlgebra {
    GradedLieAlgebra::new(
        vec![2, 1, 1],
        vec![
            BracketEntry { a: g(1, 1), b: g(1, 2), out: vec![(g(2, 1), 1.0)] },
            BracketEntry { a: g(1, 1), b: g(2, 1), out: vec![(g(3, 1), 1.0)] },
        ],
    )
    .expect("stock algebra is well-formed")
}

/// A general step-2 algebra from a list of Levi matrices, one skew-symmetric
/// `d1 x d1` matrix per layer-2 direction: `[X_j, X_k] = sum_nu L^(nu)_{jk} Z_nu`.
pub fn step2_from_levi(d1: usize, levi: &[RMatrix]) -> Result<GradedLieAlgebra> {
    let d2 = levi.len();
    if d2 == 0 {
        return Err(CoreError::MalformedAlgebra("need at least one Levi matrix".into()));
    }
    for l in levi {
        if l.nrows() != d1 || l.ncols() != d1 {
            return Err(CoreError::DimensionMismatch(format!(
                "Levi matrix is {}x{}, expected {d1}x{d1}",
                l.nrows(),
                l.ncols()
            )));
        }
    }
    let mut brackets = Vec::new();
    for j in 0..d1 {
        for k in (j + 1)..d1 {
            let out: Vec<(GenIndex, f64)> = (0..d2)
                .filter(|&nu| levi[nu][(j, k)] != 0.0)
                .map(|nu| (g(2, nu + 1), levi[nu][(j, k)]))
                .collect();
            if !out.is_empty() {
                brackets.push(BracketEntry { a: g(1, j + 1), b: g(1, k + 1), out });
            }
        }
    }
    GradedLieAlgebra::new(vec![d1, d2], brackets)
}
