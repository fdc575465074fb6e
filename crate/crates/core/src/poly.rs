//! Multivariate polynomials with `f64` coefficients and polynomial-coefficient
//! differential operators.
//!
//! Exponents are kept per-variable in fixed-length vectors, coefficients in a
//! sorted map, so equality of polynomials is literal equality of their
//! normalized term lists. Coefficients produced by the group law of a step-2
//! algebra are dyadic rationals, so identities such as the double-commutator
//! cancellation come out exactly, not merely to rounding.

use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a monomial, one entry per variable.
pub type Monomial = Vec<u8>;

/// A polynomial in `nvars` variables.
#[derive(Clone, PartialEq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, f64>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: f64) -> Self {
        let mut p = Poly::zero(nvars);
        if c != 0.0 {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The coordinate function `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exp = vec![0u8; nvars];
        exp[i] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(exp, 1.0);
        p
    }

    pub fn monomial(nvars: usize, exponents: &[u8], c: f64) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut p = Poly::zero(nvars);
        if c != 0.0 {
            p.terms.insert(exponents.to_vec(), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, f64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, m: Monomial, c: f64) {
        if c == 0.0 {
            return;
        }
        let v = self.terms.entry(m.clone()).or_insert(0.0);
        *v += c;
        if *v == 0.0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, k: f64) -> Poly {
        if k == 0.0 {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in self.terms() {
            out.terms.insert(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let m: Monomial = ma.iter().zip(mb).map(|(&a, &b)| a + b).collect();
                out.insert(m, ca * cb);
            }
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn diff(&self, i: usize) -> Poly {
        assert!(i < self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m, c) in self.terms() {
            if m[i] == 0 {
                continue;
            }
            let mut d = m.clone();
            d[i] -= 1;
            out.insert(d, c * m[i] as f64);
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.nvars);
        let mut acc = 0.0;
        for (m, c) in self.terms() {
            let mut t = c;
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= x[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Largest coefficient magnitude; zero polynomial gives 0.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |a, &c| a.max(c.abs()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                if e == 1 {
                    write!(f, "*x{i}")?;
                } else if e > 1 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// A first-order vector field with polynomial coefficients,
/// `X = sum_k coeffs[k] * d/dx_k`.
#[derive(Clone, Debug)]
pub struct PolyVectorField {
    pub coeffs: Vec<Poly>,
}

impl PolyVectorField {
    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    /// Apply the derivation to a polynomial: `X f = sum_k coeffs[k] * df/dx_k`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.nvars());
        for (k, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            out = out.add(&coeff.mul(&f.diff(k)));
        }
        out
    }

    /// Evaluate all coefficient polynomials at a point.
    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        self.coeffs.iter().map(|p| p.eval(x)).collect()
    }
}

/// A scalar differential operator `sum_beta p_beta(x) d^beta` with polynomial
/// coefficients, stored by derivative multi-index.
#[derive(Clone, Debug)]
pub struct DiffOp {
    nvars: usize,
    terms: BTreeMap<Monomial, Poly>,
}

impl DiffOp {
    pub fn zero(nvars: usize) -> Self {
        DiffOp { nvars, terms: BTreeMap::new() }
    }

    /// Multiplication operator by a polynomial.
    pub fn mult(f: &Poly) -> Self {
        let mut op = DiffOp::zero(f.nvars());
        op.insert(vec![0; f.nvars()], f.clone());
        op
    }

    /// A polynomial vector field as a first-order operator.
    pub fn from_field(field: &PolyVectorField) -> Self {
        let n = field.nvars();
        let mut op = DiffOp::zero(n);
        for (k, coeff) in field.coeffs.iter().enumerate() {
            let mut beta = vec![0u8; n];
            beta[k] = 1;
            op.insert(beta, coeff.clone());
        }
        op
    }

    fn insert(&mut self, beta: Monomial, p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&beta) {
            Some(q) => {
                *q = q.add(&p);
                if q.is_zero() {
                    self.terms.remove(&beta);
                }
            }
            None => {
                self.terms.insert(beta, p);
            }
        }
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (beta, p) in &other.terms {
            out.insert(beta.clone(), p.clone());
        }
        out
    }

    pub fn scale(&self, k: f64) -> DiffOp {
        let mut out = DiffOp::zero(self.nvars);
        for (beta, p) in &self.terms {
            out.insert(beta.clone(), p.scale(k));
        }
        out
    }

    /// Operator composition. Uses the Leibniz expansion
    /// `d^alpha (q .) = sum_{gamma <= alpha} C(alpha,gamma) (d^gamma q) d^(alpha-gamma)`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        assert_eq!(self.nvars, other.nvars);
        let mut out = DiffOp::zero(self.nvars);
        for (alpha, p) in &self.terms {
            for (beta, q) in &other.terms {
                for (gamma, binom) in sub_multi_indices(alpha) {
                    let mut dq = q.clone();
                    for (i, &g) in gamma.iter().enumerate() {
                        for _ in 0..g {
                            dq = dq.diff(i);
                        }
                    }
                    if dq.is_zero() {
                        continue;
                    }
                    let order: Monomial = alpha
                        .iter()
                        .zip(&gamma)
                        .zip(beta)
                        .map(|((&a, &g), &b)| a - g + b)
                        .collect();
                    out.insert(order, p.mul(&dq).scale(binom));
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).add(&other.compose(self).scale(-1.0))
    }

    /// Highest derivative order appearing with a nonzero coefficient.
    pub fn order(&self) -> usize {
        self.terms
            .keys()
            .map(|beta| beta.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// The order-zero part (multiplication symbol) of the operator.
    pub fn scalar_part(&self) -> Poly {
        self.terms
            .get(&vec![0u8; self.nvars])
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.nvars))
    }
}

/// All multi-indices `gamma <= alpha` together with the product of binomial
/// coefficients `prod_i C(alpha_i, gamma_i)`.
fn sub_multi_indices(alpha: &Monomial) -> Vec<(Monomial, f64)> {
    let mut out: Vec<(Monomial, f64)> = vec![(Vec::new(), 1.0)];
    for &a in alpha {
        let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
        for (prefix, coeff) in &out {
            for g in 0..=a {
                let mut m = prefix.clone();
                m.push(g);
                next.push((m, coeff * binomial(a, g)));
            }
        }
        out = next;
    }
    out
}

fn binomial(n: u8, k: u8) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}
