//! Univariate polynomials over [`Scalar`]; used for characteristic and
//! minimal polynomial bookkeeping of finite-dimensional operators.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Coefficients in ascending degree order; never a trailing zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UPoly::new(vec![Scalar::one()])
    }

    /// `x - c`
    pub fn linear(c: &Scalar) -> Self {
        UPoly::new(vec![-c, Scalar::one()])
    }

    /// `x^k - c`
    pub fn binomial(k: usize, c: &Scalar) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[0] = -c;
        v[k] = &v[k] + &Scalar::one();
        UPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero lead");
                UPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Scalar::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Scalar::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (UPoly::zero(), UPoly::zero());
        };
        if sd < dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Scalar::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (UPoly::new(q), UPoly::new(rem))
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &acc * x + c)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = (&acc * a).add(&Matrix::scalar_identity(n, c)).expect("square");
        }
        acc
    }

    /// Yun's square-free decomposition: `self = lead · Π f_k^k` with the
    /// `f_k` square-free and pairwise coprime. Entry `k-1` holds `f_k`.
    pub fn squarefree_decomposition(&self) -> Vec<UPoly> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            out.push(a.clone());
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    /// Square-free part (product of distinct irreducible factors), monic.
    pub fn squarefree_part(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UPoly::one();
        }
        let f = self.monic();
        f.div_rem(&f.gcd(&f.derivative())).0.monic()
    }

    /// Floating-point roots by Durand–Kerner iteration. Accurate for
    /// square-free input; repeated roots converge only linearly.
    pub fn numeric_roots(&self) -> Vec<Complex64> {
        let Some(n) = self.degree() else { return vec![] };
        if n == 0 {
            return vec![];
        }
        let lead = self.lead().unwrap().to_complex();
        let c: Vec<Complex64> = self.coeffs.iter().map(|x| x.to_complex() / lead).collect();
        let eval = |z: Complex64| c.iter().rev().fold(Complex64::zero(), |acc, k| acc * z + k);
        let bound = 1.0 + c[..n].iter().map(|k| k.norm()).fold(0.0, f64::max);
        let seed = Complex64::new(0.4, 0.9);
        let mut roots: Vec<Complex64> =
            (0..n).map(|k| seed.powu(k as u32) * (bound / 2.0).max(0.5)).collect();
        for _ in 0..2000 {
            let mut delta: f64 = 0.0;
            for i in 0..n {
                let zi = roots[i];
                let denom = (0..n)
                    .filter(|&j| j != i)
                    .fold(Complex64::one(), |acc, j| acc * (zi - roots[j]));
                if denom.norm() == 0.0 {
                    roots[i] += Complex64::new(1e-9, 1e-9);
                    delta = f64::INFINITY;
                    continue;
                }
                let step = eval(zi) / denom;
                roots[i] = zi - step;
                delta = delta.max(step.norm());
            }
            if delta < 1e-15 {
                break;
            }
        }
        roots
    }
}

/// Characteristic polynomial `det(x·I - A)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(a: &Matrix) -> UPoly {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = (&*a * &m).add(&Matrix::scalar_identity(n, &coeffs[n - k + 1])).unwrap();
        let am = a * &m;
        let c = -(am.trace()) * Scalar::from_ratio(1, k as i64);
        coeffs[n - k] = c;
    }
    UPoly::new(coeffs)
}
