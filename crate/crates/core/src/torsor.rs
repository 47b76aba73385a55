//! Quadratic forms, their orientation torsors and square-root representatives.
//!
//! A ℤ/2-torsor fiber is the set of square roots of a target value. When the
//! target has a root in ℚ(i) the representative is an honest scalar. When it
//! does not, the representative is `c·√a₁⋯√a_k` where each `√a` denotes one
//! fixed root of the atom `a` (the base point) and `c ∈ ℚ(i)`; two elements
//! with the same atoms differ by the scalar ratio of their coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{Monomial, Poly};
use crate::scalar::{rational_sqrt, Rational, Scalar};

// ---- quadratic forms ----

/// Symmetric matrix `S` of the quadratic form `q(v) = vᵀ S v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadForm {
    matrix: Matrix,
}

impl QuadForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("quadratic form matrix must be square".into()));
        }
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(QuadForm { matrix })
    }

    /// `x₁² + ⋯ + x_n²`
    pub fn sum_of_squares(n: usize) -> Self {
        QuadForm { matrix: Matrix::identity(n) }
    }

    /// The zero-dimensional form.
    pub fn empty() -> Self {
        QuadForm { matrix: Matrix::zeros(0, 0) }
    }

    /// Read a homogeneous quadratic polynomial as a form (half its Hessian).
    pub fn from_potential(p: &Poly) -> Result<Self> {
        if p.terms().any(|(m, _)| m.degree() != 2) {
            return Err(Error::InvalidForm("potential is not a homogeneous quadratic".into()));
        }
        let n = p.nvars();
        let half = Scalar::from_ratio(1, 2);
        let m = Matrix::from_fn(n, n, |i, j| {
            let d = p.derivative(i).derivative(j).constant_term();
            &d * &half
        });
        QuadForm::new(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn det(&self) -> Scalar {
        self.matrix.det().expect("square")
    }

    pub fn is_degenerate(&self) -> bool {
        self.det().is_zero()
    }

    /// Block sum `q₁ ⊕ q₂`.
    pub fn direct_sum(&self, o: &QuadForm) -> QuadForm {
        QuadForm { matrix: Matrix::block_diag(&self.matrix, &o.matrix) }
    }

    /// `vᵀ S v` as a polynomial in `vars`.
    pub fn to_potential(&self, vars: &[String]) -> Result<Poly> {
        if vars.len() != self.dim() {
            return Err(Error::VariableMismatch("one variable per dimension".into()));
        }
        let n = self.dim();
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                terms.push((Monomial(e), self.matrix[(i, j)].clone()));
            }
        }
        Poly::from_terms(vars, terms)
    }

    pub fn eval(&self, v: &[Scalar]) -> Result<Scalar> {
        let sv = self.matrix.mul_vec(v)?;
        Ok(v.iter().zip(&sv).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
    }
}

/// Value of the induced form on `det W` at the top vector of volume
/// `basis_vol`: `det(q)·basis_vol²`.
pub fn orientation_targets(q: &QuadForm, basis_vol: &Scalar) -> Result<Scalar> {
    let d = q.det();
    if d.is_zero() {
        return Err(Error::Degenerate);
    }
    Ok(&d * &(basis_vol * basis_vol))
}

// ---- square roots in ℚ(i) ----

/// The two square roots of `target` in ℚ(i), principal one first.
pub fn sqrt_in_field(target: &Scalar) -> Option<(Scalar, Scalar)> {
    let r = principal_sqrt(target)?;
    let n = -&r;
    Some((r, n))
}

fn principal_sqrt(t: &Scalar) -> Option<Scalar> {
    if t.is_zero() {
        return Some(Scalar::zero());
    }
    let a = t.re();
    let b = t.im();
    let modulus = rational_sqrt(&t.norm_sqr())?;
    let two = Rational::from_integer(2.into());
    let x2 = (&modulus + a) / &two;
    let y2 = (&modulus - a) / &two;
    let root = if !x2.is_zero() {
        let x = rational_sqrt(&x2)?;
        let y = b / (&two * &x);
        Scalar::new(x, y)
    } else {
        Scalar::new(Rational::zero(), rational_sqrt(&y2)?)
    };
    debug_assert_eq!(&root * &root, *t);
    Some(if root.is_principal() { root } else { -root })
}

/// Representative `coeff·Π√atom` of a square root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeff: Scalar,
    atoms: Vec<Scalar>,
}

impl Root {
    pub fn scalar(c: Scalar) -> Self {
        Root { coeff: c, atoms: vec![] }
    }

    /// The base-point root of `target`: the principal root when it lies in
    /// ℚ(i), otherwise a canonical symbolic root.
    pub fn of(target: &Scalar) -> Self {
        if let Some(r) = principal_sqrt(target) {
            return Root::scalar(r);
        }
        let (c, a) = canonical_atom(target);
        Root { coeff: c, atoms: vec![a] }.normalized()
    }

    pub fn coeff(&self) -> &Scalar {
        &self.coeff
    }

    pub fn atoms(&self) -> &[Scalar] {
        &self.atoms
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        self.atoms.is_empty().then_some(&self.coeff)
    }

    pub fn square(&self) -> Scalar {
        self.atoms.iter().fold(&self.coeff * &self.coeff, |acc, a| acc * a)
    }

    pub fn mul(&self, o: &Root) -> Root {
        let mut atoms = self.atoms.clone();
        atoms.extend(o.atoms.iter().cloned());
        Root { coeff: &self.coeff * &o.coeff, atoms }.normalized()
    }

    pub fn inv(&self) -> Result<Root> {
        // 1/(c√a) = (1/(c·a))·√a
        let mut c = self.coeff.clone();
        for a in &self.atoms {
            c *= a;
        }
        Ok(Root { coeff: c.inv()?, atoms: self.atoms.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> Root {
        Root { coeff: &self.coeff * s, atoms: self.atoms.clone() }
    }

    pub fn neg(&self) -> Root {
        self.scale(&-Scalar::one())
    }

    /// `self / o` as a scalar, when both involve the same atoms.
    pub fn ratio(&self, o: &Root) -> Option<Scalar> {
        if self.atoms != o.atoms {
            return None;
        }
        self.coeff.checked_div(&o.coeff).ok()
    }

    fn normalized(mut self) -> Root {
        self.atoms.sort_by_key(atom_key);
        let mut out: Vec<Scalar> = Vec::new();
        for a in self.atoms {
            if out.last() == Some(&a) {
                let a = out.pop().unwrap();
                self.coeff *= &a;
            } else {
                out.push(a);
            }
        }
        Root { coeff: self.coeff, atoms: out }
    }
}

fn atom_key(a: &Scalar) -> (Rational, Rational) {
    (a.re().clone(), a.im().clone())
}

/// Write `t = c²·a` with a canonical atom `a`. Rationals reduce to a positive
/// square-free-ish integer (small prime squares removed); a negative sign is
/// taken into `c = i·…`.
fn canonical_atom(t: &Scalar) -> (Scalar, Scalar) {
    let Some(r) = t.as_rational() else {
        return (Scalar::one(), t.clone());
    };
    // r = p/q = (p·q)/q²
    let den = r.denom().clone();
    let mut n: BigInt = r.numer() * &den;
    let mut c = Rational::new(BigInt::one(), den);
    let negative = n.is_negative();
    if negative {
        n = -n;
    }
    let mut p: u32 = 2;
    while p < 1000 {
        let pp = BigInt::from(p * p);
        while (&n % &pp).is_zero() {
            n /= &pp;
            c *= Rational::from_integer(p.into());
        }
        p += 1;
    }
    let mut coeff = Scalar::from_rational(c);
    if negative {
        coeff = &coeff * &Scalar::i();
    }
    (coeff, Scalar::from_rational(Rational::from_integer(n)))
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "{}", self.coeff);
        }
        let atoms: Vec<String> = self.atoms.iter().map(|a| format!("sqrt({a})")).collect();
        if self.coeff.is_one() {
            write!(f, "{}", atoms.join("*"))
        } else {
            write!(f, "({})*{}", self.coeff, atoms.join("*"))
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---- torsor elements ----

/// One point of the ℤ/2-torsor of square roots of `target`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TorsorElement {
    target: Scalar,
    rep: Root,
    label: String,
}

impl TorsorElement {
    /// Checked constructor: `rep² = target` must hold exactly.
    pub fn new(target: Scalar, rep: Root, label: impl Into<String>) -> Result<Self> {
        if rep.square() != target {
            return Err(Error::TorsorMismatch(format!("representative {rep} does not square to {target}")));
        }
        Ok(TorsorElement { target, rep, label: label.into() })
    }

    pub fn from_scalar(target: Scalar, rep: Scalar, label: impl Into<String>) -> Result<Self> {
        TorsorElement::new(target, Root::scalar(rep), label)
    }

    /// The base-point element over `target`.
    pub fn base_point(target: Scalar, label: impl Into<String>) -> Self {
        let rep = Root::of(&target);
        TorsorElement { target, rep, label: label.into() }
    }

    /// Unit element `(1, +1)` of the trivial torsor.
    pub fn unit(label: impl Into<String>) -> Self {
        TorsorElement::base_point(Scalar::one(), label)
    }

    pub fn target(&self) -> &Scalar {
        &self.target
    }

    pub fn rep(&self) -> &Root {
        &self.rep
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        TorsorElement { label: label.into(), ..self.clone() }
    }

    /// The other point of the fiber.
    pub fn flip(&self) -> Self {
        TorsorElement { rep: self.rep.neg(), ..self.clone() }
    }

    /// `+1` or `-1` comparing two points of the same fiber; `None` when the
    /// fibers differ or the comparison is not decidable in-field.
    pub fn sign_relative(&self, o: &TorsorElement) -> Option<i8> {
        if self.target != o.target {
            return None;
        }
        let r = self.rep.ratio(&o.rep)?;
        if r.is_one() {
            Some(1)
        } else if r == -Scalar::one() {
            Some(-1)
        } else {
            None
        }
    }

    /// Sign relative to the base point of the fiber.
    pub fn sign(&self) -> Option<i8> {
        self.sign_relative(&TorsorElement::base_point(self.target.clone(), ""))
    }
}

/// `P_{q₁} ⊗ P_{q₂} → P_{q₁⊕q₂}`: targets and representatives multiply.
pub fn torsor_sum(a: &TorsorElement, b: &TorsorElement) -> TorsorElement {
    let label = match (a.label.is_empty(), b.label.is_empty()) {
        (true, _) => b.label.clone(),
        (_, true) => a.label.clone(),
        _ => format!("{}+{}", a.label, b.label),
    };
    TorsorElement { target: &a.target * &b.target, rep: a.rep.mul(&b.rep), label }
}

/// Orientation element of `P_q` at basis volume `vol`: the base point over
/// `det(q)·vol²`.
pub fn orientation_element(q: &QuadForm, vol: &Scalar, label: impl Into<String>) -> Result<TorsorElement> {
    Ok(TorsorElement::base_point(orientation_targets(q, vol)?, label))
}
