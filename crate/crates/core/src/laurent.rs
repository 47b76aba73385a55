//! Truncated Laurent series in ħ with an explicit validity window.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Default number of ħ-coefficients kept by [`HLaurent::series`].
pub const DEFAULT_TRUNCATION: i32 = 16;

/// `Σ_k coeffs[k]·ħ^(low+k) + O(ħ^prec)`; `prec = None` means exact.
#[derive(Clone, PartialEq, Eq)]
pub struct HLaurent {
    low: i32,
    coeffs: Vec<Scalar>,
    prec: Option<i32>,
}

impl HLaurent {
    pub fn exact(low: i32, coeffs: Vec<Scalar>) -> Self {
        HLaurent { low, coeffs, prec: None }.normalized()
    }

    pub fn with_precision(low: i32, coeffs: Vec<Scalar>, prec: i32) -> Self {
        HLaurent { low, coeffs, prec: Some(prec) }.normalized()
    }

    /// Series known to [`DEFAULT_TRUNCATION`] coefficients past `low`.
    pub fn series(low: i32, coeffs: Vec<Scalar>) -> Self {
        HLaurent::with_precision(low, coeffs, low + DEFAULT_TRUNCATION)
    }

    pub fn zero() -> Self {
        HLaurent { low: 0, coeffs: vec![], prec: None }
    }

    pub fn constant(c: Scalar) -> Self {
        HLaurent::exact(0, vec![c])
    }

    /// `c·ħ^k`
    pub fn monomial(c: Scalar, k: i32) -> Self {
        HLaurent::exact(k, vec![c])
    }

    pub fn hbar() -> Self {
        HLaurent::monomial(Scalar::one(), 1)
    }

    fn normalized(mut self) -> Self {
        if let Some(p) = self.prec {
            let keep = (p - self.low).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn precision(&self) -> Option<i32> {
        self.prec
    }

    /// Coefficient of `ħ^k`, or `None` when `k` lies beyond the window.
    pub fn coeff(&self, k: i32) -> Option<Scalar> {
        if self.prec.is_some_and(|p| k >= p) {
            return None;
        }
        let idx = k - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            return Some(Scalar::zero());
        }
        Some(self.coeffs[idx as usize].clone())
    }

    /// Terms `(exponent, coefficient)` with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn truncate(&self, prec: i32) -> HLaurent {
        let p = self.prec.map_or(prec, |q| q.min(prec));
        HLaurent { prec: Some(p), ..self.clone() }.normalized()
    }

    pub fn add(&self, o: &HLaurent) -> HLaurent {
        let prec = min_prec(self.prec, o.prec);
        if self.is_zero() {
            return HLaurent { prec, ..o.clone() }.normalized();
        }
        if o.is_zero() {
            return HLaurent { prec, ..self.clone() }.normalized();
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i32).max(o.low + o.coeffs.len() as i32);
        let mut coeffs = vec![Scalar::zero(); (high - low) as usize];
        for (k, c) in self.terms() {
            coeffs[(k - low) as usize] += c;
        }
        for (k, c) in o.terms() {
            coeffs[(k - low) as usize] += c;
        }
        HLaurent { low, coeffs, prec }.normalized()
    }

    pub fn neg(&self) -> HLaurent {
        self.scale(&-Scalar::one())
    }

    pub fn sub(&self, o: &HLaurent) -> HLaurent {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> HLaurent {
        HLaurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect(), prec: self.prec }.normalized()
    }

    /// Product; a truncated factor `A + O(ħ^pa)` times `B` is known modulo
    /// `ħ^(pa + ord B)`.
    pub fn mul(&self, o: &HLaurent) -> HLaurent {
        let prec = min_prec(error_order(self.prec, o), error_order(o.prec, self));
        if self.is_zero() || o.is_zero() {
            return HLaurent { low: 0, coeffs: vec![], prec };
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        HLaurent { low: self.low + o.low, coeffs, prec }.normalized()
    }

    /// Lowest exponent that may be nonzero: the order, or the precision of a
    /// truncated zero. `None` for the exact zero.
    pub fn floor(&self) -> Option<i32> {
        self.order().or(self.prec)
    }

    /// `ħ·d/dħ`
    pub fn hbar_derivative(&self) -> HLaurent {
        HLaurent {
            low: self.low,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * &Scalar::from_int((self.low + k as i32) as i64))
                .collect(),
            prec: self.prec,
        }
        .normalized()
    }
}

fn error_order(p: Option<i32>, other: &HLaurent) -> Option<i32> {
    Some(p? + other.floor()?)
}

fn min_prec(a: Option<i32>, b: Option<i32>) -> Option<i32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl fmt::Display for HLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms()
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})*h"),
                _ => format!("({c})*h^{k}"),
            })
            .collect();
        if parts.is_empty() {
            parts.push("0".into());
        }
        if let Some(p) = self.prec {
            parts.push(format!("O(h^{p})"));
        }
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Square matrix with [`HLaurent`] entries, stored row-major.
pub type LaurentMatrix = Vec<Vec<HLaurent>>;

pub fn constant_matrix(m: &Matrix) -> LaurentMatrix {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| HLaurent::constant(m[(i, j)].clone())).collect()).collect()
}

/// Matrix–vector product over ħ-Laurent series. Each output records the
/// window it is valid in; fewer than one valid coefficient is an error.
pub fn hlaurent_apply(op: &[Vec<HLaurent>], v: &[HLaurent]) -> Result<Vec<HLaurent>> {
    let mut out = Vec::with_capacity(op.len());
    for row in op {
        if row.len() != v.len() {
            return Err(Error::DimensionMismatch(format!("operator row has {} entries, vector {}", row.len(), v.len())));
        }
        let mut acc = HLaurent::zero();
        let mut floor: Option<i32> = None;
        for (a, x) in row.iter().zip(v) {
            if let (Some(la), Some(lx)) = (a.floor(), x.floor()) {
                floor = Some(floor.map_or(la + lx, |f| f.min(la + lx)));
            }
            acc = acc.add(&a.mul(x));
        }
        if let (Some(p), Some(f)) = (acc.precision(), floor) {
            let valid = p as i64 - f as i64;
            if valid < 1 {
                return Err(Error::WindowUnderflow { valid });
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Free rank-`r` module over ħ-Laurent series with the derivation
/// `D(v) = ħ∂ħ v + D_matrix·v` on the standard lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffModule {
    d_matrix: LaurentMatrix,
}

impl DiffModule {
    pub fn new(d_matrix: LaurentMatrix) -> Result<Self> {
        let r = d_matrix.len();
        if d_matrix.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch("connection matrix must be square".into()));
        }
        Ok(DiffModule { d_matrix })
    }

    pub fn from_constant(m: &Matrix) -> Self {
        DiffModule { d_matrix: constant_matrix(m) }
    }

    pub fn rank(&self) -> usize {
        self.d_matrix.len()
    }

    pub fn d_matrix(&self) -> &LaurentMatrix {
        &self.d_matrix
    }

    /// The ħ⁰ coefficient matrix, provided no negative powers occur.
    pub fn residue(&self) -> Option<Matrix> {
        let r = self.rank();
        let mut m = Matrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                let e = &self.d_matrix[i][j];
                if e.order().is_some_and(|k| k < 0) {
                    return None;
                }
                m[(i, j)] = e.coeff(0)?;
            }
        }
        Some(m)
    }

    pub fn apply(&self, v: &[HLaurent]) -> Result<Vec<HLaurent>> {
        let dv = hlaurent_apply(&self.d_matrix, v)?;
        Ok(dv.iter().zip(v).map(|(a, x)| a.add(&x.hbar_derivative())).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn hbar_inverse_is_exact() {
        let h = HLaurent::hbar();
        let hinv = HLaurent::monomial(Scalar::one(), -1);
        assert_eq!(h.mul(&hinv), HLaurent::constant(Scalar::one()));
        let s = HLaurent::series(-1, vec![c(1), c(2)]);
        assert_eq!(s.mul(&h).coeff(0), Some(c(1)));
        assert_eq!(s.mul(&h).precision(), Some(16));
    }

    #[test]
    fn identity_and_shift() {
        let id = vec![vec![HLaurent::constant(c(1)), HLaurent::zero()], vec![HLaurent::zero(), HLaurent::constant(c(1))]];
        let v = vec![HLaurent::series(0, vec![c(1), c(3)]), HLaurent::exact(-2, vec![c(5)])];
        assert_eq!(hlaurent_apply(&id, &v).unwrap(), v);
        let op = vec![vec![HLaurent::hbar()]];
        let e = vec![HLaurent::monomial(Scalar::one(), -1)];
        assert_eq!(hlaurent_apply(&op, &e).unwrap(), vec![HLaurent::constant(c(1))]);
    }

    #[test]
    fn window_underflow() {
        let op = vec![vec![HLaurent::with_precision(0, vec![c(1)], 1)]];
        let v = vec![HLaurent::exact(-3, vec![c(1)])];
        let out = hlaurent_apply(&op, &v).unwrap();
        assert_eq!(out[0].precision(), Some(-2));
        let unknown = vec![vec![HLaurent::with_precision(0, vec![], 0)]];
        assert_eq!(hlaurent_apply(&unknown, &v).unwrap_err(), Error::WindowUnderflow { valid: 0 });
    }

    #[test]
    fn leibniz_on_basis() {
        let m = Matrix::from_rows(vec![vec![Scalar::from_ratio(-1, 2)]]).unwrap();
        let d = DiffModule::from_constant(&m);
        let e = vec![HLaurent::constant(c(1))];
        let he = vec![HLaurent::hbar()];
        let lhs = d.apply(&he).unwrap();
        let de = d.apply(&e).unwrap();
        let rhs: Vec<_> = de.iter().zip(&e).map(|(a, x)| HLaurent::hbar().mul(&a.add(x))).collect();
        assert_eq!(lhs, rhs);
    }
}
