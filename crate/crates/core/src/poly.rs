//! Multivariate polynomials over [`Scalar`] with dense exponent vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, Scalar};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then the first variable's exponent, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// All exponent vectors in `n` variables of total degree exactly `d`,
    /// in ascending graded-lex order.
    pub fn of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in 0..=d {
                prefix.push(e);
                rec(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        if n == 0 {
            return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(n, d, &mut Vec::new(), &mut out);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(vars: &[String]) -> Self {
        Poly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: Scalar) -> Self {
        let mut p = Poly::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn var(vars: &[String], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Poly::zero(vars);
        p.add_term(Monomial(e), Scalar::one());
        p
    }

    pub fn monomial(vars: &[String], m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Result<Self> {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            if m.0.len() != vars.len() {
                return Err(Error::DimensionMismatch("exponent vector length".into()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn lowest_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// The value when the polynomial is constant.
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.total_degree() {
            None => Some(Scalar::zero()),
            Some(0) => Some(self.constant_term()),
            _ => None,
        }
    }

    /// Re-express in a variable list containing all variables of `self`.
    pub fn with_vars(&self, vars: &[String]) -> Result<Poly> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::VariableMismatch(format!("variable '{v}' missing from target list")))
            })
            .collect::<Result<_>>()?;
        let mut out = Poly::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] = k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Union of the two variable lists, `self`'s first.
    pub fn merged_vars(&self, o: &Poly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &o.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, o: &Poly) -> (Poly, Poly) {
        if self.vars == o.vars {
            return (self.clone(), o.clone());
        }
        let vars = self.merged_vars(o);
        (self.with_vars(&vars).unwrap(), o.with_vars(&vars).unwrap())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (mut a, b) = self.aligned(o);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let (a, b) = self.aligned(o);
        let mut out = Poly::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (k, c) in &self.terms {
            out.terms.insert(k.mul(m), c.clone());
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::constant(&self.vars, Scalar::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `∂/∂x_i`
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[i] -= 1;
            out.add_term(d, c * &Scalar::from_int(e as i64));
        }
        out
    }

    pub fn derivative_by_name(&self, name: &str) -> Result<Poly> {
        let i = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::VariableMismatch(format!("unknown variable '{name}'")))?;
        Ok(self.derivative(i))
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitute polynomials (all in one common variable list) for each variable.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars());
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_default();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&img.pow(e));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Drop all terms of total degree `>= bound`.
    pub fn truncate(&self, bound: u64) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() < bound).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn homogeneous_part(&self, d: u64) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn rename(&self, vars: &[String]) -> Result<Poly> {
        if vars.len() != self.vars.len() {
            return Err(Error::VariableMismatch("rename needs the same number of variables".into()));
        }
        Ok(Poly { vars: vars.to_vec(), terms: self.terms.clone() })
    }

    /// Canonical rendering; terms in descending graded-lex order.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = self.render_monomial(m);
            let (negative, coeff) = render_coefficient(c);
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            match (coeff.as_str(), mono.is_empty()) {
                ("1", true) => out.push('1'),
                ("1", false) => out.push_str(&mono),
                (c, true) => out.push_str(c),
                (c, false) => {
                    out.push_str(c);
                    out.push('*');
                    out.push_str(&mono);
                }
            }
        }
        out
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        m.0.iter()
            .zip(&self.vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Split a coefficient into a sign and a magnitude text that reparses as a
/// single factor.
fn render_coefficient(c: &Scalar) -> (bool, String) {
    if c.is_real() {
        let r = c.re();
        return (r.is_negative(), fmt_rational(&r.abs()));
    }
    if c.re().is_zero() {
        let m = c.im().abs();
        let text = if m.is_one() { "i".to_string() } else { format!("{}*i", fmt_rational(&m)) };
        return (c.im().is_negative(), text);
    }
    let (neg, z) = if c.re().is_negative() { (true, -c) } else { (false, c.clone()) };
    let sign = if z.im().is_negative() { "-" } else { "+" };
    let m = z.im().abs();
    let im = if m.is_one() { "i".to_string() } else { format!("{}*i", fmt_rational(&m)) };
    (neg, format!("({} {sign} {im})", fmt_rational(z.re())))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.vars.join(","), self.render())
    }
}

/// Partial derivatives `[∂f/∂x_1, …, ∂f/∂x_n]`.
pub fn poly_jacobian(f: &Poly) -> Vec<Poly> {
    (0..f.nvars()).map(|i| f.derivative(i)).collect()
}

pub fn names(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn jacobian_power_rule() {
        let f = parse_poly("x^3 + y^3", None).unwrap();
        let j = poly_jacobian(&f);
        assert_eq!(j[0], parse_poly("3*x^2", Some(&names(&["x", "y"]))).unwrap());
        assert_eq!(j[1], parse_poly("3*y^2", Some(&names(&["x", "y"]))).unwrap());
        let g = parse_poly("x^2", None).unwrap();
        assert_eq!(poly_jacobian(&g)[0].render(), "2*x");
    }

    #[test]
    fn jacobian_of_constant_vanishes() {
        let c = parse_poly("5", Some(&names(&["x", "y"]))).unwrap();
        assert!(poly_jacobian(&c).iter().all(Poly::is_zero));
        assert_eq!(poly_jacobian(&c).len(), 2);
    }

    #[test]
    fn graded_lex_rendering() {
        let p = parse_poly("y + x^2 + x*y + 1 - x", Some(&names(&["x", "y"]))).unwrap();
        assert_eq!(p.render(), "x^2 + x*y - x + y + 1");
        let q = parse_poly("(1/2)*x - i*y", None).unwrap();
        assert_eq!(q.render(), "1/2*x - i*y");
        let z = parse_poly("(1 - 2*i)*x", None).unwrap();
        assert_eq!(z.render(), "(1 - 2*i)*x");
        assert_eq!(parse_poly(&z.render(), None).unwrap(), z);
    }

    #[test]
    fn substitution() {
        let vars = names(&["l", "m"]);
        let h = parse_poly("l*m - (1/2)*m^2", Some(&vars)).unwrap();
        let l = names(&["l"]);
        let img = vec![Poly::var(&l, 0), Poly::var(&l, 0)];
        assert_eq!(h.substitute(&img), parse_poly("(1/2)*l^2", Some(&l)).unwrap());
    }

    #[test]
    fn monomials_of_degree() {
        let ms = Monomial::of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }
}
