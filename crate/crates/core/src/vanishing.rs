//! Vanishing-cycle data of isolated hypersurface singularities at the origin:
//! local Milnor algebra, quasi-homogeneous spectra, the twisted de Rham
//! operator, monodromy, the PV sign twist, Thom–Sebastiani sums and
//! stabilization by nondegenerate quadratic forms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::monodromy::MonodromyData;
use crate::poly::{poly_jacobian, Monomial, Poly};
use crate::scalar::{fmt_rational, rat, Rational, Scalar};
use crate::torsor::{orientation_element, torsor_sum, QuadForm, TorsorElement};

/// Default bound on the truncation degree of the Milnor staircase.
pub const DEFAULT_DEGREE_BOUND: usize = 64;

// ---- sparse echelon form over truncated monomial spaces ----

/// Semi-echelon basis of a subspace of `ℚ(i)[x] / m^N`. Columns are
/// monomials indexed in descending graded-lex order, so pivots land on the
/// highest monomial of each row and the complement is spanned by low-degree
/// monomials.
#[derive(Clone, Debug)]
struct Echelon {
    columns: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    pivots: BTreeMap<usize, BTreeMap<usize, Scalar>>,
}

impl Echelon {
    fn new(nvars: usize, truncation: usize) -> Self {
        let mut columns: Vec<Monomial> =
            (0..truncation as u32).flat_map(|d| Monomial::of_degree(nvars, d)).collect();
        columns.reverse();
        let index = columns.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Echelon { columns, index, pivots: BTreeMap::new() }
    }

    fn row_of(&self, p: &Poly) -> BTreeMap<usize, Scalar> {
        p.terms().filter_map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone()))).collect()
    }

    fn reduce(&self, mut row: BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        let mut from = 0;
        loop {
            let hit = row.range(from..).map(|(&c, _)| c).find(|c| self.pivots.contains_key(c));
            let Some(col) = hit else { return row };
            let factor = row[&col].clone();
            for (&c, v) in &self.pivots[&col] {
                let e = row.entry(c).or_insert_with(Scalar::zero);
                *e -= &(&factor * v);
                if e.is_zero() {
                    row.remove(&c);
                }
            }
            from = col + 1;
        }
    }

    fn insert(&mut self, p: &Poly) {
        let row = self.reduce(self.row_of(p));
        let Some((&lead, c)) = row.iter().next() else { return };
        let inv = c.inv().expect("nonzero pivot");
        let row = row.into_iter().map(|(k, v)| (k, &v * &inv)).collect();
        self.pivots.insert(lead, row);
    }

    fn quotient_dim(&self) -> usize {
        self.columns.len() - self.pivots.len()
    }

    /// Non-pivot monomials, ascending graded-lex.
    fn complement(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..self.columns.len())
            .filter(|c| !self.pivots.contains_key(c))
            .map(|c| self.columns[c].clone())
            .collect();
        out.sort();
        out
    }
}

fn truncated_quotient(jac: &[Poly], nvars: usize, truncation: usize) -> Echelon {
    let mut e = Echelon::new(nvars, truncation);
    for d in 0..truncation as u32 {
        for m in Monomial::of_degree(nvars, d) {
            for g in jac {
                let low = g.lowest_degree().unwrap_or(u64::MAX);
                if low + d as u64 >= truncation as u64 {
                    continue;
                }
                e.insert(&g.mul_monomial(&m).truncate(truncation as u64));
            }
        }
    }
    e
}

// ---- Milnor algebra ----

/// Local algebra `ℚ(i)[[x]] / Jac(f)` at the origin with a monomial basis.
#[derive(Clone, Debug)]
pub struct MilnorAlgebra {
    f: Poly,
    basis: Vec<Monomial>,
    reducer: Echelon,
    truncation: usize,
}

impl MilnorAlgebra {
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn mu(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `g` modulo `Jac(f)` against the basis.
    pub fn reduce(&self, g: &Poly) -> Result<Vec<Scalar>> {
        let g = g.with_vars(self.f.vars())?.truncate(self.truncation as u64);
        let row = self.reducer.reduce(self.reducer.row_of(&g));
        Ok(self
            .basis
            .iter()
            .map(|m| row.get(&self.reducer.index[m]).cloned().unwrap_or_else(Scalar::zero))
            .collect())
    }

    /// The basis monomials rendered in the variables of `f`.
    pub fn basis_polys(&self) -> Vec<Poly> {
        self.basis.iter().map(|m| Poly::monomial(self.f.vars(), m.clone(), Scalar::one())).collect()
    }
}

pub(crate) fn check_critical_at_origin(f: &Poly) -> Result<()> {
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroAtOrigin);
    }
    if f.terms().any(|(m, _)| m.degree() == 1) {
        return Err(Error::NotSingular);
    }
    Ok(())
}

pub fn milnor_algebra(f: &Poly) -> Result<MilnorAlgebra> {
    milnor_algebra_with_bound(f, DEFAULT_DEGREE_BOUND)
}

/// Local Milnor algebra, found as the stable value of
/// `d_N = dim ℚ(i)[x] / (Jac(f) + m^N)`; `d_N = d_{N+1}` implies stability.
pub fn milnor_algebra_with_bound(f: &Poly, bound: usize) -> Result<MilnorAlgebra> {
    check_critical_at_origin(f)?;
    let n = f.nvars();
    let jac = poly_jacobian(f);
    if jac.iter().any(Poly::is_zero) {
        return Err(Error::NotIsolated { bound });
    }
    let mut truncation = 1;
    loop {
        let a = truncated_quotient(&jac, n, truncation);
        let b = truncated_quotient(&jac, n, truncation + 1);
        if a.quotient_dim() == b.quotient_dim() {
            let basis = b.complement();
            return Ok(MilnorAlgebra { f: f.clone(), basis, reducer: b, truncation: truncation + 1 });
        }
        if truncation >= bound {
            return Err(Error::NotIsolated { bound });
        }
        truncation = (truncation * 2).min(bound);
    }
}

// ---- weights and spectra ----

/// Positive weights `w` with `⟨a, w⟩ = 1` on the support of `f`; the
/// minimum-norm solution when several exist.
pub fn qh_weights(f: &Poly) -> Option<Vec<Rational>> {
    let n = f.nvars();
    if f.is_zero() || n == 0 || !f.constant_term().is_zero() {
        return None;
    }
    let rows: Vec<Vec<Scalar>> =
        f.terms().map(|(m, _)| m.0.iter().map(|&e| Scalar::from_int(e as i64)).collect()).collect();
    let a = Matrix::from_rows(rows).ok()?;
    let ones = Matrix::from_fn(a.rows(), 1, |_, _| Scalar::one());
    let aat = a.try_mul(&a.transpose()).ok()?;
    let y = aat.solve(&ones)?;
    let w = a.transpose().try_mul(&y).ok()?;
    if a.try_mul(&w).ok()? != ones {
        return None;
    }
    let w: Vec<Rational> = (0..n).map(|i| w[(i, 0)].as_rational().cloned()).collect::<Option<_>>()?;
    w.iter().all(|x| x.is_positive()).then_some(w)
}

/// Multiset of spectral numbers of a singularity in `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Spectrum {
    values: Vec<Rational>,
    n: usize,
}

impl Spectrum {
    pub fn new(mut values: Vec<Rational>, n: usize) -> Self {
        values.sort();
        Spectrum { values, n }
    }

    /// Spectrum `{0}` of the zero-variable singularity, the unit for `⊞`.
    pub fn unit() -> Self {
        Spectrum { values: vec![Rational::zero()], n: 0 }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Minkowski sum, ambient dimensions add.
    pub fn minkowski(&self, o: &Spectrum) -> Spectrum {
        let values = self.values.iter().flat_map(|a| o.values.iter().map(move |b| a + b)).collect();
        Spectrum::new(values, self.n + o.n)
    }

    pub fn shift(&self, by: &Rational, extra_dims: usize) -> Spectrum {
        Spectrum::new(self.values.iter().map(|a| a + by).collect(), self.n + extra_dims)
    }

    /// Invariance under `α ↦ n - α`.
    pub fn is_symmetric(&self) -> bool {
        let n = Rational::from_integer((self.n as i64).into());
        let mut mirrored: Vec<Rational> = self.values.iter().map(|a| &n - a).collect();
        mirrored.sort();
        mirrored == self.values
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(fmt_rational).collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(", "))
    }
}

fn qh_data(f: &Poly) -> Result<(MilnorAlgebra, Vec<Rational>)> {
    check_critical_at_origin(f)?;
    let w = qh_weights(f).ok_or(Error::NotQuasiHomogeneous)?;
    Ok((milnor_algebra(f)?, w))
}

/// Weight formula `{Σ (aᵢ + 1) wᵢ : x^a in the Milnor basis}`.
pub fn spectrum(f: &Poly) -> Result<Spectrum> {
    if f.nvars() == 0 && f.is_zero() {
        return Ok(Spectrum::unit());
    }
    let (alg, w) = qh_data(f)?;
    let values = alg
        .basis()
        .iter()
        .map(|m| m.0.iter().zip(&w).fold(Rational::zero(), |acc, (&a, wi)| acc + wi * Rational::from_integer((a as i64 + 1).into())))
        .collect();
    Ok(Spectrum::new(values, f.nvars()))
}

/// Matrix of `ħ∂ħ - ħ⁻¹f` on the classes `x^a dx` (Milnor basis order) at
/// order `λ = 1/2`.
pub fn twisted_dr_operator(f: &Poly) -> Result<Matrix> {
    twisted_dr_operator_at(f, &rat(1, 2))
}

/// `ħ∂ħ - ħ⁻¹f + 1/2 - λ`. Each `f·x^a dx` is written as `df ∧ η` with the
/// Euler field, `ħ⁻¹df ∧ η` is replaced by `-dη`, and `dη` is reduced modulo
/// the Jacobian ideal.
pub fn twisted_dr_operator_at(f: &Poly, lambda: &Rational) -> Result<Matrix> {
    let shift = Scalar::from_rational(rat(1, 2) - lambda);
    if f.nvars() == 0 && f.is_zero() {
        return Ok(Matrix::scalar_identity(1, &shift));
    }
    let (alg, w) = qh_data(f)?;
    let n = f.nvars();
    let vars = f.vars();
    let jac = poly_jacobian(f);
    let mu = alg.mu();
    let mut d = Matrix::zeros(mu, mu);
    for (col, b) in alg.basis_polys().iter().enumerate() {
        // η = Σ (-1)^{i-1} wᵢ xᵢ b dx̂ᵢ, stored by its coefficients ηᵢ = wᵢ xᵢ b
        let eta: Vec<Poly> = (0..n)
            .map(|i| Poly::var(vars, i).mul(b).scale(&Scalar::from_rational(w[i].clone())))
            .collect();
        let wedge = eta.iter().zip(&jac).fold(Poly::zero(vars), |acc, (e, g)| acc.add(&e.mul(g)));
        if wedge != f.mul(b) {
            return Err(Error::NotQuasiHomogeneous);
        }
        let d_eta = eta.iter().enumerate().fold(Poly::zero(vars), |acc, (i, e)| acc.add(&e.derivative(i)));
        for (row, c) in alg.reduce(&d_eta)?.into_iter().enumerate() {
            d[(row, col)] = c;
        }
    }
    Ok(d.add(&Matrix::scalar_identity(mu, &shift))?)
}

/// Semisimple `T = exp(-2πi D)`: exponent `r = α - ⌈α⌉` for each spectral
/// number `α`, so that `exp(-2πi r) = exp(-2πi α)`.
pub fn vanishing_monodromy(f: &Poly) -> Result<MonodromyData> {
    Ok(monodromy_of_spectrum(&spectrum(f)?))
}

pub fn monodromy_of_spectrum(s: &Spectrum) -> MonodromyData {
    MonodromyData::semisimple(s.values().iter().cloned())
}

// ---- PV data, Thom–Sebastiani, stabilization ----

/// Order `λ` of the simple generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderParam {
    pub lambda: Rational,
}

impl Default for OrderParam {
    fn default() -> Self {
        OrderParam { lambda: rat(1, 2) }
    }
}

/// One stabilization `f ↦ f ⊞ q` applied to a [`PVData`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizationStep {
    pub rank: usize,
    pub lambda: Rational,
    pub tq_scale: Rational,
}

/// `(φ_f, (-1)^n T)` with optional torsor and spectrum slots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PVData {
    monodromy: MonodromyData,
    ambient_dim: usize,
    torsor: Option<TorsorElement>,
    spectrum: Option<Spectrum>,
    steps: Vec<StabilizationStep>,
}

impl PVData {
    /// Twisted monodromy `(-1)^n T`.
    pub fn monodromy(&self) -> &MonodromyData {
        &self.monodromy
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn twist_applied(&self) -> bool {
        self.ambient_dim % 2 == 1
    }

    /// The raw vanishing monodromy `T`.
    pub fn raw_monodromy(&self) -> MonodromyData {
        self.monodromy.twist_sign(self.ambient_dim)
    }

    pub fn torsor(&self) -> Option<&TorsorElement> {
        self.torsor.as_ref()
    }

    pub fn spectrum(&self) -> Option<&Spectrum> {
        self.spectrum.as_ref()
    }

    pub fn steps(&self) -> &[StabilizationStep] {
        &self.steps
    }

    pub fn with_torsor(mut self, t: TorsorElement) -> Self {
        self.torsor = Some(t);
        self
    }

    pub fn with_spectrum(mut self, s: Spectrum) -> Self {
        self.spectrum = Some(s);
        self
    }

    /// Equality of the twisted data: monodromy and torsor representative.
    pub fn twisted_eq(&self, o: &PVData) -> bool {
        let torsor_eq = match (&self.torsor, &o.torsor) {
            (None, None) => true,
            (Some(a), Some(b)) => a.target() == b.target() && a.rep() == b.rep(),
            (Some(a), None) | (None, Some(a)) => a.sign() == Some(1) && a.target().is_one(),
        };
        self.monodromy == o.monodromy && torsor_eq
    }
}

/// Multiply `T` by `(-1)^n`.
pub fn pv_twist(m: &MonodromyData, n: usize) -> PVData {
    PVData { monodromy: m.twist_sign(n), ambient_dim: n, torsor: None, spectrum: None, steps: vec![] }
}

/// PV data of a quasi-homogeneous `f` with its spectrum attached.
pub fn pv_data(f: &Poly) -> Result<PVData> {
    let s = spectrum(f)?;
    Ok(pv_twist(&monodromy_of_spectrum(&s), f.nvars()).with_spectrum(s))
}

/// Data-level `⊞` of two PV data: twisted monodromies tensor, ambient
/// dimensions, spectra and torsors add.
pub fn thom_sebastiani(a: &PVData, b: &PVData) -> PVData {
    let torsor = match (&a.torsor, &b.torsor) {
        (Some(x), Some(y)) => Some(torsor_sum(x, y)),
        (x, y) => x.clone().or_else(|| y.clone()),
    };
    let spectrum = match (&a.spectrum, &b.spectrum) {
        (Some(x), Some(y)) => Some(x.minkowski(y)),
        _ => None,
    };
    let mut steps = a.steps.clone();
    steps.extend(b.steps.iter().cloned());
    PVData {
        monodromy: a.monodromy.tensor(&b.monodromy),
        ambient_dim: a.ambient_dim + b.ambient_dim,
        torsor,
        spectrum,
        steps,
    }
}

/// `f ⊞ g` in disjoint variables; clashing names in `g` get a numeric suffix.
pub fn thom_sebastiani_poly(f: &Poly, g: &Poly) -> Poly {
    let mut vars = f.vars().to_vec();
    let mut renamed = Vec::new();
    for v in g.vars() {
        let mut name = v.clone();
        let mut k = 2;
        while vars.contains(&name) {
            name = format!("{v}_{k}");
            k += 1;
        }
        vars.push(name.clone());
        renamed.push(name);
    }
    let g = g.rename(&renamed).expect("same length");
    f.with_vars(&vars).expect("superset").add(&g.with_vars(&vars).expect("superset"))
}

/// `(dim q + 1)/2 - λ`, the `D`-eigenvalue on the generator pinning `T_q`.
pub fn tq_scale(q: &QuadForm, lambda: &OrderParam) -> Result<Rational> {
    if q.is_degenerate() {
        return Err(Error::Degenerate);
    }
    Ok(rat(q.dim() as i64 + 1, 2) - &lambda.lambda)
}

/// Base-point element of `P_q` used by the `T_q` normalization (unit basis
/// volume, `α = 1`).
pub fn pq_element(q: &QuadForm) -> Result<TorsorElement> {
    orientation_element(q, &Scalar::one(), "P_q")
}

/// `f ↦ f ⊞ q`: spectrum shifts by `dim q / 2`, the raw monodromy picks up
/// `(-1)^{dim q}` which the new twist cancels, and the torsor slot is
/// tensored with `P_q`.
pub fn stabilize(data: &PVData, q: &QuadForm, lambda: &OrderParam) -> Result<PVData> {
    if q.dim() == 0 {
        return Ok(data.clone());
    }
    let scale = tq_scale(q, lambda)?;
    let k = q.dim();
    let pq = pq_element(q)?;
    let torsor = Some(match &data.torsor {
        Some(t) => torsor_sum(t, &pq),
        None => pq,
    });
    let mut steps = data.steps.clone();
    steps.push(StabilizationStep { rank: k, lambda: lambda.lambda.clone(), tq_scale: scale });
    Ok(PVData {
        monodromy: data.monodromy.clone(),
        ambient_dim: data.ambient_dim + k,
        torsor,
        spectrum: data.spectrum.as_ref().map(|s| s.shift(&rat(k as i64, 2), k)),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s, None).unwrap()
    }

    fn rats(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn milnor_examples() {
        let a = milnor_algebra(&p("x^2")).unwrap();
        assert_eq!((a.mu(), a.basis()), (1, &[Monomial(vec![0])][..]));
        let a = milnor_algebra(&p("x^3 + y^3")).unwrap();
        let expect: Vec<Monomial> =
            [[0, 0], [0, 1], [1, 0], [1, 1]].iter().map(|e| Monomial(e.to_vec())).collect();
        assert_eq!(a.basis(), &expect[..]);
        assert_eq!(milnor_algebra(&p("x*y")).unwrap().mu(), 1);
        assert_eq!(milnor_algebra(&p("x^2 + y^3 + x*y")).unwrap().mu(), 1);
        assert_eq!(milnor_algebra(&p("x^2 + y^3")).unwrap().mu(), 2);
        // non-quasi-homogeneous: A_2 with a higher term
        assert_eq!(milnor_algebra(&p("x^2 + y^3 + y^5")).unwrap().mu(), 2);
    }

    #[test]
    fn milnor_errors() {
        assert_eq!(milnor_algebra(&p("x^2 + x")).unwrap_err(), Error::NotSingular);
        assert_eq!(milnor_algebra(&p("x^2 + 1")).unwrap_err(), Error::NonzeroAtOrigin);
        assert!(matches!(milnor_algebra(&p("x^2*y")), Err(Error::NotIsolated { .. })));
        assert!(matches!(milnor_algebra(&p("(x + y)^2")), Err(Error::NotIsolated { .. })));
    }

    #[test]
    fn reduction_is_idempotent_on_basis() {
        let a = milnor_algebra(&p("x^3 + y^4")).unwrap();
        for (i, b) in a.basis_polys().iter().enumerate() {
            let v = a.reduce(b).unwrap();
            assert!(v.iter().enumerate().all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() }));
        }
        assert!(a.reduce(&p("x^2")).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn weights() {
        assert_eq!(qh_weights(&p("x^3 + y^2")), Some(rats(&[(1, 3), (1, 2)])));
        assert_eq!(qh_weights(&p("x^2 + y^3 + x*y")), None);
        assert_eq!(qh_weights(&p("x^2 + y^2 + z^2")), Some(rats(&[(1, 2), (1, 2), (1, 2)])));
        assert_eq!(qh_weights(&p("x*y")), Some(rats(&[(1, 2), (1, 2)])));
    }

    #[test]
    fn spectra_and_operator() {
        assert_eq!(spectrum(&p("x^3")).unwrap().values(), &rats(&[(1, 3), (2, 3)])[..]);
        assert_eq!(spectrum(&p("x^3 + y^3")).unwrap().values(), &rats(&[(2, 3), (1, 1), (1, 1), (4, 3)])[..]);
        assert_eq!(twisted_dr_operator(&p("x^2")).unwrap(), Matrix::diagonal(&[Scalar::from_ratio(1, 2)]));
        assert_eq!(
            twisted_dr_operator(&p("x^3")).unwrap(),
            Matrix::diagonal(&[Scalar::from_ratio(1, 3), Scalar::from_ratio(2, 3)])
        );
        assert_eq!(twisted_dr_operator(&p("x*y")).unwrap(), Matrix::diagonal(&[Scalar::one()]));
        assert_eq!(spectrum(&p("x^2 + y^3 + x*y")).unwrap_err(), Error::NotQuasiHomogeneous);
        assert!(spectrum(&p("x^3 + y^3")).unwrap().is_symmetric());
    }

    #[test]
    fn monodromy_and_twist() {
        let m = vanishing_monodromy(&p("x^2")).unwrap();
        assert_eq!(m.exponents(), rats(&[(-1, 2)]));
        let pv = pv_twist(&m, 1);
        assert_eq!(pv.monodromy(), &MonodromyData::trivial(1));
        assert_eq!(pv.raw_monodromy(), m);
        assert_eq!(vanishing_monodromy(&p("x^2 + y^2")).unwrap(), MonodromyData::trivial(1));
        assert_eq!(vanishing_monodromy(&p("x^3")).unwrap().exponents(), rats(&[(-2, 3), (-1, 3)]));
    }

    #[test]
    fn stabilization_of_cusp() {
        let f = p("x^3");
        let h = thom_sebastiani_poly(&f, &p("z^2"));
        assert_eq!(spectrum(&h).unwrap().values(), &rats(&[(5, 6), (7, 6)])[..]);
        let st = stabilize(&pv_data(&f).unwrap(), &QuadForm::sum_of_squares(1), &OrderParam::default()).unwrap();
        assert_eq!(st.spectrum().unwrap(), &spectrum(&h).unwrap());
        let direct = pv_data(&h).unwrap().with_torsor(pq_element(&QuadForm::sum_of_squares(1)).unwrap());
        assert!(st.twisted_eq(&direct));
        assert_eq!(st.steps()[0].tq_scale, rat(1, 2));
    }

    #[test]
    fn tq_examples() {
        let half = OrderParam::default();
        let one = OrderParam { lambda: Rational::one() };
        assert_eq!(tq_scale(&QuadForm::sum_of_squares(1), &half).unwrap(), rat(1, 2));
        assert_eq!(tq_scale(&QuadForm::sum_of_squares(2), &one).unwrap(), rat(1, 2));
        assert_eq!(tq_scale(&QuadForm::empty(), &half).unwrap(), Rational::zero());
    }

    #[test]
    fn thom_sebastiani_renames() {
        let h = thom_sebastiani_poly(&p("x^3"), &p("x^3"));
        assert_eq!(h.vars(), &["x".to_string(), "x_2".to_string()]);
        assert_eq!(milnor_algebra(&h).unwrap().mu(), 4);
        let unit = Spectrum::unit();
        let s = spectrum(&p("x^3")).unwrap();
        assert_eq!(s.minkowski(&unit), s);
    }
}
