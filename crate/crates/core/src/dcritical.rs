//! Chart-level d-critical bookkeeping: critical charts, embeddings of charts
//! through a generating function `h(l, m)`, the Hessian form `q_Ξ`, the chart
//! torsors `Q_L`, `Q_M`, `Q_LM`, the maps `Λ_Ξ`, cocycle loops and
//! clean-intersection determinant data. Everything is evaluated at the origin.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{Monomial, Poly};
use crate::scalar::Scalar;
use crate::symplectic::{maslov_form, LagrangianSubspace, SymplecticSpace};
use crate::torsor::{QuadForm, Root, TorsorElement};
use crate::vanishing::{check_critical_at_origin, milnor_algebra};

/// Number of fixed-point steps tried when eliminating `m`.
pub const ELIMINATION_BOUND: u64 = 32;

/// A potential `f` on affine space with an isolated critical point at the origin.
#[derive(Clone, Debug)]
pub struct CriticalChart {
    f: Poly,
    mu: usize,
    critical_points: Vec<Vec<Scalar>>,
}

impl CriticalChart {
    pub fn new(f: Poly) -> Result<Self> {
        check_critical_at_origin(&f)?;
        let mu = milnor_algebra(&f)?.mu();
        let origin = vec![Scalar::zero(); f.nvars()];
        Ok(CriticalChart { f, mu, critical_points: vec![origin] })
    }

    pub fn variables(&self) -> &[String] {
        self.f.vars()
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn milnor_number(&self) -> usize {
        self.mu
    }

    pub fn critical_points(&self) -> &[Vec<Scalar>] {
        &self.critical_points
    }
}

/// `Ξ: (l) → (l, m)` cut out by `∂h/∂m = 0`, with `f = Ξ*h`.
#[derive(Clone, Debug)]
pub struct ChartEmbedding {
    pub h: Poly,
    pub l_vars: Vec<String>,
    pub m_vars: Vec<String>,
    /// `m_j` as polynomials in `l`.
    pub elimination: Vec<Poly>,
    pub f: Poly,
    pub q_xi: QuadForm,
    /// Hessian of `h` at the origin in the order `(l, m)`.
    pub hessian: Matrix,
}

impl ChartEmbedding {
    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        self.hessian.submatrix(&rows.collect::<Vec<_>>(), &cols.collect::<Vec<_>>())
    }

    pub fn hessian_ll(&self) -> Matrix {
        let nl = self.l_vars.len();
        self.block(0..nl, 0..nl)
    }

    pub fn hessian_lm(&self) -> Matrix {
        let (nl, nm) = (self.l_vars.len(), self.m_vars.len());
        self.block(0..nl, nl..nl + nm)
    }
}

fn hessian_at_origin(h: &Poly) -> Matrix {
    let n = h.nvars();
    Matrix::from_fn(n, n, |i, j| h.derivative(i).derivative(j).constant_term())
}

fn check_disjoint(l_vars: &[String], m_vars: &[String]) -> Result<()> {
    if let Some(v) = l_vars.iter().find(|v| m_vars.contains(v)) {
        return Err(Error::VariableMismatch(format!("variable {v} is listed in both l and m")));
    }
    if m_vars.is_empty() {
        return Err(Error::DimensionMismatch("no m variables to eliminate".into()));
    }
    Ok(())
}

/// Solve `∂h/∂m = 0` for `m(l)`, read off `f = h(l, m(l))` and the `m`-Hessian.
pub fn embedding_quadform(h: &Poly, l_vars: &[String], m_vars: &[String]) -> Result<ChartEmbedding> {
    check_disjoint(l_vars, m_vars)?;
    let all: Vec<String> = l_vars.iter().chain(m_vars).cloned().collect();
    let h = h.with_vars(&all)?;
    check_critical_at_origin(&h)?;
    let (nl, nm) = (l_vars.len(), m_vars.len());
    let hessian = hessian_at_origin(&h);
    let m_idx: Vec<usize> = (nl..nl + nm).collect();
    let h_mm = hessian.submatrix(&m_idx, &m_idx);
    let h_mm_inv = h_mm.inverse().map_err(|_| Error::SingularHessian)?;
    let grad: Vec<Poly> = m_idx.iter().map(|&j| h.derivative(j)).collect();

    let l_images: Vec<Poly> = (0..nl).map(|i| Poly::var(l_vars, i)).collect();
    let images = |phi: &[Poly]| -> Vec<Poly> { l_images.iter().chain(phi).cloned().collect() };
    let mut phi = vec![Poly::zero(l_vars); nm];
    let mut solved = false;
    for step in 0..=ELIMINATION_BOUND {
        let imgs = images(&phi);
        let residual: Vec<Poly> = grad.iter().map(|g| g.substitute(&imgs).with_vars(l_vars)).collect::<Result<_>>()?;
        if residual.iter().all(Poly::is_zero) {
            solved = true;
            break;
        }
        phi = (0..nm)
            .map(|j| {
                let mut p = phi[j].clone();
                for (k, r) in residual.iter().enumerate() {
                    p = p.sub(&r.scale(&h_mm_inv[(j, k)]));
                }
                p.truncate(step + 2)
            })
            .collect();
    }
    if !solved {
        return Err(Error::EliminationFailed(format!(
            "no polynomial solution of degree at most {} for dh/dm = 0",
            ELIMINATION_BOUND + 1
        )));
    }
    let f = h.substitute(&images(&phi)).with_vars(l_vars)?;
    let q_xi = QuadForm::new(h_mm)?;
    Ok(ChartEmbedding { h, l_vars: l_vars.to_vec(), m_vars: m_vars.to_vec(), elimination: phi, f, q_xi, hessian })
}

/// Tangent data at the critical point in `T_M ⊕ T*_M`: the zero section
/// `T_M`, the image of the first polarization and the vertical second one.
#[derive(Clone, Debug)]
pub struct PolarizationTriple {
    pub t_m: LagrangianSubspace,
    pub t_pi1: LagrangianSubspace,
    pub t_pi2: LagrangianSubspace,
}

/// Standard cotangent model of the two polarizations induced by `h`.
///
/// When `∂²h/∂l∂m` is invertible, `T_{π₁}` is pushed through the chart change
/// `T*L ⇢ T*M` given by `dh`; otherwise the chart is decoupled and the first
/// polarization is the graph of `-∂²h/∂m²`.
pub fn polarization_model(h: &Poly, l_vars: &[String], m_vars: &[String]) -> Result<PolarizationTriple> {
    let emb = embedding_quadform(h, l_vars, m_vars)?;
    let n = m_vars.len();
    let space = Arc::new(SymplecticSpace::standard(n));
    let t_m = LagrangianSubspace::base(space.clone())?;
    let t_pi2 = LagrangianSubspace::fiber(space.clone())?;
    let h_mm = emb.q_xi.matrix().clone();
    let t_pi1 = if l_vars.len() == n && !emb.hessian_lm().det()?.is_zero() {
        let h_ll = emb.hessian_ll();
        let h_lm = emb.hessian_lm();
        let id = Matrix::identity(n);
        let zero = Matrix::zeros(n, n);
        // (δl, δm) ↦ (δl, δξ_L) and (δl, δm) ↦ (δm, δξ_M)
        let to_tl = id.hstack(&zero)?.vstack(&h_ll.hstack(&h_lm)?)?;
        let to_tm = zero.hstack(&id)?.vstack(&h_lm.transpose().neg().hstack(&h_mm.neg())?)?;
        let change = to_tm.try_mul(&to_tl.inverse()?)?;
        let vertical = zero.vstack(&id)?;
        LagrangianSubspace::new(space, change.try_mul(&vertical)?.transpose())?
    } else {
        LagrangianSubspace::graph(space, &h_mm.neg())?
    };
    Ok(PolarizationTriple { t_m, t_pi1, t_pi2 })
}

/// Whether `q_Ξ` equals the Maslov form `q(T_M, T_{π₁}, T_{π₂})` exactly.
pub fn maslov_consistency(h: &Poly, l_vars: &[String], m_vars: &[String], charts: &PolarizationTriple) -> Result<bool> {
    let emb = embedding_quadform(h, l_vars, m_vars)?;
    if charts.t_m.dim() != emb.q_xi.dim() {
        return Err(Error::DimensionMismatch(format!(
            "tangent data has dimension {} but q_xi has dimension {}",
            charts.t_m.dim(),
            emb.q_xi.dim()
        )));
    }
    let q = maslov_form(&charts.t_m, &charts.t_pi1, &charts.t_pi2)?;
    Ok(q.matrix() == emb.q_xi.matrix())
}

// ---- chart torsors ----

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ChartTorsorKind {
    QL,
    QM,
    QLM,
    PXi,
    PUpsilon,
}

impl ChartTorsorKind {
    pub fn name(self) -> &'static str {
        match self {
            ChartTorsorKind::QL => "Q_L",
            ChartTorsorKind::QM => "Q_M",
            ChartTorsorKind::QLM => "Q_LM",
            ChartTorsorKind::PXi => "P_Xi",
            ChartTorsorKind::PUpsilon => "P_Upsilon",
        }
    }

    /// Names of the expected volume data, in order.
    pub fn slots(self) -> &'static [&'static str] {
        match self {
            ChartTorsorKind::QL => &["pullback_omega_M", "omega_L"],
            ChartTorsorKind::QM => &["pullback_omega_L", "omega_M"],
            ChartTorsorKind::QLM => &["vol_S", "omega_L", "omega_M"],
            ChartTorsorKind::PXi | ChartTorsorKind::PUpsilon => &["det_q", "vol"],
        }
    }
}

impl fmt::Display for ChartTorsorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChartTorsorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [ChartTorsorKind::QL, ChartTorsorKind::QM, ChartTorsorKind::QLM, ChartTorsorKind::PXi, ChartTorsorKind::PUpsilon]
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Schema { pointer: String::new(), message: format!("unknown torsor kind {s}") })
    }
}

/// Value `t` with `s² = t` parametrizing the torsor at one point.
pub fn chart_torsor_target(kind: ChartTorsorKind, vol_data: &[Scalar]) -> Result<Scalar> {
    if vol_data.len() != kind.slots().len() {
        return Err(Error::DimensionMismatch(format!(
            "{kind} expects {} volume values, got {}",
            kind.slots().len(),
            vol_data.len()
        )));
    }
    if vol_data.iter().any(Scalar::is_zero) {
        return Err(Error::ZeroVolume);
    }
    let v = vol_data;
    match kind {
        ChartTorsorKind::QL | ChartTorsorKind::QM => v[0].checked_div(&v[1]),
        ChartTorsorKind::QLM => v[0].checked_div(&(&v[1] * &v[2])),
        ChartTorsorKind::PXi | ChartTorsorKind::PUpsilon => Ok(&v[0] * &(&v[1] * &v[1])),
    }
}

/// Torsor values at the evaluation points of one chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartTorsorSpec {
    kind: ChartTorsorKind,
    targets: Vec<Scalar>,
}

impl ChartTorsorSpec {
    pub fn new(kind: ChartTorsorKind, targets: Vec<Scalar>) -> Result<Self> {
        if targets.iter().any(Scalar::is_zero) {
            return Err(Error::ZeroVolume);
        }
        Ok(ChartTorsorSpec { kind, targets })
    }

    pub fn kind(&self) -> ChartTorsorKind {
        self.kind
    }

    pub fn targets(&self) -> &[Scalar] {
        &self.targets
    }
}

/// `Λ_Ξ` on representatives: `s ↦ u·√ω / s`, landing in `P_Ξ`.
pub fn lambda_map(s: &TorsorElement, u: &TorsorElement, omega_target: &Scalar) -> Result<TorsorElement> {
    if s.target().is_zero() {
        return Err(Error::DivisionByZero);
    }
    if omega_target.is_zero() {
        return Err(Error::ZeroVolume);
    }
    let rep = u.rep().mul(&Root::of(omega_target)).mul(&s.rep().inv()?);
    let target = (u.target() * omega_target).checked_div(s.target())?;
    TorsorElement::new(target, rep, "P_Xi")
}

// ---- cocycles ----

/// Identification of the fiber `from` with the fiber `to`, multiplying
/// representatives by `factor`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Transition {
    pub from: String,
    pub to: String,
    pub factor: Root,
}

/// Fibers (by target) and transitions forming a closed loop.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChartLoop {
    pub fibers: BTreeMap<String, Scalar>,
    pub transitions: Vec<Transition>,
}

impl ChartLoop {
    /// The same loop with transition `index` negated.
    pub fn with_flip(&self, index: usize) -> Result<ChartLoop> {
        let mut out = self.clone();
        let t = out
            .transitions
            .get_mut(index)
            .ok_or_else(|| Error::NonComposable(format!("no transition at index {index}")))?;
        t.factor = t.factor.neg();
        Ok(out)
    }
}

/// Product of the transition factors around the loop, which must be `±1`.
pub fn cocycle_check(lp: &ChartLoop) -> Result<i8> {
    let ts = &lp.transitions;
    if ts.is_empty() {
        return Err(Error::NonComposable("empty loop".into()));
    }
    let mut product = Root::scalar(Scalar::one());
    for (k, t) in ts.iter().enumerate() {
        let next = &ts[(k + 1) % ts.len()];
        if t.to != next.from {
            return Err(Error::NonComposable(format!("transition {k} ends at {} but the next starts at {}", t.to, next.from)));
        }
        let target = |name: &str| {
            lp.fibers.get(name).ok_or_else(|| Error::NonComposable(format!("unknown fiber {name}")))
        };
        let (from, to) = (target(&t.from)?, target(&t.to)?);
        if &(&t.factor.square() * from) != to {
            return Err(Error::TorsorMismatch(format!(
                "transition {k} ({} -> {}): factor {} does not carry {from} to {to}",
                t.from, t.to, t.factor
            )));
        }
        product = product.mul(&t.factor);
    }
    match product.as_scalar() {
        Some(s) if *s == Scalar::one() => Ok(1),
        Some(s) if *s == -Scalar::one() => Ok(-1),
        _ => Err(Error::TorsorMismatch(format!("loop holonomy {product} is not a sign"))),
    }
}

fn det_or_singular(m: &Matrix) -> Result<Scalar> {
    let d = m.det()?;
    if d.is_zero() {
        Err(Error::Singular)
    } else {
        Ok(d)
    }
}

/// Three descriptions of the orientation torsor of `(l) → (l, m, n)`:
/// `A` from the Hessian of `h` in `(m, n)`, `B` from the second generating
/// function `h ∘ ψ`, and `C` from eliminating `n` and then `m`. Transition
/// factors are the determinants of the basis changes between them.
pub fn three_chart_loop(h: &Poly, l_vars: &[String], m_vars: &[String], n_vars: &[String], psi: &Matrix) -> Result<ChartLoop> {
    let mn: Vec<String> = m_vars.iter().chain(n_vars).cloned().collect();
    let lm: Vec<String> = l_vars.iter().chain(m_vars).cloned().collect();
    let all: Vec<String> = l_vars.iter().chain(&mn).cloned().collect();
    let (nl, nm, nn) = (l_vars.len(), m_vars.len(), n_vars.len());
    if psi.rows() != nm + nn || psi.cols() != nm + nn {
        return Err(Error::DimensionMismatch(format!("psi must be {0}x{0}", nm + nn)));
    }
    let h = h.with_vars(&all)?;

    let q_a = embedding_quadform(&h, l_vars, &mn)?.q_xi;

    let images: Vec<Poly> = (0..nl)
        .map(|i| Poly::var(&all, i))
        .chain((0..nm + nn).map(|i| {
            (0..nm + nn).fold(Poly::zero(&all), |acc, j| acc.add(&Poly::var(&all, nl + j).scale(&psi[(i, j)])))
        }))
        .collect();
    let h_b = h.substitute(&images);
    let q_b = embedding_quadform(&h_b, l_vars, &mn)?.q_xi;

    let inner = embedding_quadform(&h, &lm, n_vars)?;
    let q12 = embedding_quadform(&inner.f, l_vars, m_vars)?.q_xi;
    let mut p = Matrix::identity(nm + nn);
    for (j, phi) in inner.elimination.iter().enumerate() {
        for i in 0..nm {
            let mut e = Monomial::one(nl + nm);
            e.0[nl + i] = 1;
            p[(nm + j, i)] = phi.coeff(&e);
        }
    }

    let det_psi = det_or_singular(psi)?;
    let det_p = det_or_singular(&p)?;
    let fibers = BTreeMap::from([
        ("A".to_string(), q_a.det()),
        ("B".to_string(), q_b.det()),
        ("C".to_string(), &q12.det() * &inner.q_xi.det()),
    ]);
    let step = |from: &str, to: &str, factor: Scalar| Transition { from: from.into(), to: to.into(), factor: Root::scalar(factor) };
    let transitions = vec![
        step("A", "B", det_psi.clone()),
        step("B", "C", det_p.checked_div(&det_psi)?),
        step("C", "A", det_p.inv()?),
    ];
    Ok(ChartLoop { fibers, transitions })
}

// ---- clean intersections ----

fn extend_basis(start: &Matrix, candidates: &Matrix) -> Result<Matrix> {
    let mut acc = start.clone();
    let mut added = Matrix::zeros(0, start.cols());
    for i in 0..candidates.rows() {
        let row = Matrix::from_rows(vec![candidates.row(i).to_vec()])?;
        let next = acc.vstack(&row)?;
        if next.rank() > acc.rank() {
            acc = next;
            added = added.vstack(&row)?;
        }
    }
    Ok(added)
}

fn volume_in(basis: &Matrix, vectors: &Matrix) -> Result<Scalar> {
    let coords = basis
        .transpose()
        .solve(&vectors.transpose())
        .ok_or_else(|| Error::NotExact("vectors do not lie in the subspace".into()))?;
    coords.det()
}

/// Scalar of `K_L ⊗ K_M → K_{L∩M}^{⊗2}` against the given basis volumes and
/// the Liouville volume of `T_S`, read off the sequence
/// `0 → T_{L∩M} → T_L ⊕ T_M → T_S → T*_{L∩M} → 0`.
pub fn clean_intersection_data(tl: &LagrangianSubspace, tm: &LagrangianSubspace, tlm_basis: &Matrix) -> Result<Scalar> {
    let space = tl.space();
    if space.form() != tm.space().form() {
        return Err(Error::DimensionMismatch("T_L and T_M lie in different symplectic spaces".into()));
    }
    let n = space.half_dim();
    let c = tlm_basis;
    let k = c.rows();
    if c.cols() != 2 * n {
        return Err(Error::DimensionMismatch(format!("intersection basis must have {} columns", 2 * n)));
    }
    let (bl, bm) = (tl.basis(), tm.basis());
    if c.rank() != k {
        return Err(Error::NotExact(format!("declared intersection basis has rank {} < {k}", c.rank())));
    }
    if bl.vstack(c)?.rank() != n || bm.vstack(c)?.rank() != n {
        return Err(Error::NotExact("declared intersection is not contained in T_L and T_M".into()));
    }
    let sum_rank = bl.vstack(bm)?.rank();
    if sum_rank != 2 * n - k {
        return Err(Error::NotExact(format!("T_L ∩ T_M has dimension {} but {k} was declared", 2 * n - sum_rank)));
    }
    let a = extend_basis(c, bl)?;
    let b = extend_basis(&c.vstack(&a)?, bm)?;
    let d = c
        .try_mul(space.form())?
        .solve(&Matrix::identity(k))
        .ok_or_else(|| Error::NotExact("pairing with T_{L∩M} is degenerate".into()))?
        .transpose();
    let frame = c.vstack(&a)?.vstack(&b)?.vstack(&d)?;
    let vol_s = &space.form().pfaffian()? * &frame.det()?;
    let vol_l = volume_in(bl, &c.vstack(&a)?)?;
    let vol_m = volume_in(bm, &c.vstack(&b)?)?;
    let sign = if (n * n.saturating_sub(1) / 2) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
    (&sign * &vol_s).checked_div(&(&vol_l * &vol_m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::names;
    use crate::vanishing::spectrum;

    fn p(s: &str, vars: &[&str]) -> Poly {
        parse_poly(s, Some(&names(vars))).unwrap()
    }

    fn int(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn embedding_examples() {
        let (l, m) = (names(&["l"]), names(&["m"]));
        let e = embedding_quadform(&p("l^3 - 1/2*m^2", &["l", "m"]), &l, &m).unwrap();
        assert!(e.elimination[0].is_zero());
        assert_eq!(e.f, p("l^3", &["l"]));
        assert_eq!(e.q_xi.matrix(), &Matrix::from_ints(&[&[-1]]));
        let e = embedding_quadform(&p("l*m - 1/2*m^2", &["l", "m"]), &l, &m).unwrap();
        assert_eq!(e.elimination[0], p("l", &["l"]));
        assert_eq!(e.f, p("1/2*l^2", &["l"]));
        assert_eq!(e.q_xi.matrix(), &Matrix::from_ints(&[&[-1]]));
        assert_eq!(embedding_quadform(&p("l*m", &["l", "m"]), &l, &m).unwrap_err(), Error::SingularHessian);
    }

    #[test]
    fn nonlinear_elimination() {
        // m = l^2 solves 2m - 2l^2 = 0 with f = -l^4 + l^3
        let h = p("l^3 + m^2 - 2*l^2*m", &["l", "m"]);
        let e = embedding_quadform(&h, &names(&["l"]), &names(&["m"])).unwrap();
        assert_eq!(e.elimination[0], p("l^2", &["l"]));
        assert_eq!(e.f, p("l^3 - l^4", &["l"]));
        // m + m^2 = l has no polynomial solution
        let h = p("l^3 + 1/2*m^2 + 1/3*m^3 - l*m", &["l", "m"]);
        assert!(matches!(
            embedding_quadform(&h, &names(&["l"]), &names(&["m"])),
            Err(Error::EliminationFailed(_))
        ));
    }

    #[test]
    fn split_potential_round_trip() {
        let h = p("x^3 + y^4 + 2*z^2 - w^2 + z*w", &["x", "y", "z", "w"]);
        let e = embedding_quadform(&h, &names(&["x", "y"]), &names(&["z", "w"])).unwrap();
        assert_eq!(e.f, p("x^3 + y^4", &["x", "y"]));
        assert_eq!(e.q_xi.matrix(), &Matrix::from_ints(&[&[4, 1], &[1, -2]]));
    }

    #[test]
    fn maslov_consistency_examples() {
        let (l, m) = (names(&["l"]), names(&["m"]));
        for h in ["l*m - 1/2*m^2", "l^3 - 1/2*m^2", "l*m + 3*m^2 + l^2"] {
            let h = p(h, &["l", "m"]);
            let triple = polarization_model(&h, &l, &m).unwrap();
            assert!(maslov_consistency(&h, &l, &m, &triple).unwrap());
        }
        let h = p("l*m - 1/2*m^2", &["l", "m"]);
        let bigger = polarization_model(&p("l^3 + x*y - m^2 - y^2", &["l", "x", "m", "y"]), &names(&["l", "x"]), &names(&["m", "y"])).unwrap();
        assert!(matches!(maslov_consistency(&h, &l, &m, &bigger), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn spectrum_consistency() {
        let h = p("l^3 - 1/2*m^2", &["l", "m"]);
        let e = embedding_quadform(&h, &names(&["l"]), &names(&["m"])).unwrap();
        let q = e.q_xi.to_potential(&names(&["m"])).unwrap();
        assert_eq!(spectrum(&h).unwrap(), spectrum(&e.f).unwrap().minkowski(&spectrum(&q).unwrap()));
    }

    #[test]
    fn torsor_targets() {
        assert_eq!(chart_torsor_target(ChartTorsorKind::QL, &[int(1), int(1)]).unwrap(), int(1));
        assert_eq!(chart_torsor_target(ChartTorsorKind::QL, &[int(4), int(1)]).unwrap(), int(4));
        assert_eq!(chart_torsor_target(ChartTorsorKind::QLM, &[int(6), int(2), int(3)]).unwrap(), int(1));
        assert_eq!(chart_torsor_target(ChartTorsorKind::PXi, &[int(-1), int(2)]).unwrap(), int(-4));
        assert_eq!(chart_torsor_target(ChartTorsorKind::QM, &[int(0), int(1)]).unwrap_err(), Error::ZeroVolume);
        assert!(chart_torsor_target(ChartTorsorKind::QM, &[int(1)]).is_err());
        assert_eq!("Q_LM".parse::<ChartTorsorKind>().unwrap(), ChartTorsorKind::QLM);
    }

    #[test]
    fn lambda_examples() {
        let e = |t: i64, r: i64| TorsorElement::from_scalar(int(t), int(r), "").unwrap();
        let out = lambda_map(&e(1, 1), &e(1, 1), &int(1)).unwrap();
        assert_eq!((out.target(), out.rep().as_scalar()), (&int(1), Some(&int(1))));
        let out = lambda_map(&e(4, 2), &e(1, -1), &int(4)).unwrap();
        assert_eq!((out.target(), out.rep().as_scalar()), (&int(1), Some(&int(-1))));
        let flipped = lambda_map(&e(4, 2).flip(), &e(1, -1), &int(4)).unwrap();
        assert_eq!(flipped.sign_relative(&out), Some(-1));
        let zero = TorsorElement::from_scalar(int(0), int(0), "").unwrap();
        assert_eq!(lambda_map(&zero, &e(1, 1), &int(1)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn cocycle_examples() {
        let two = ChartLoop {
            fibers: BTreeMap::from([("X".into(), int(4)), ("Y".into(), int(1))]),
            transitions: vec![
                Transition { from: "X".into(), to: "Y".into(), factor: Root::scalar(Scalar::from_ratio(1, 2)) },
                Transition { from: "Y".into(), to: "X".into(), factor: Root::scalar(int(2)) },
            ],
        };
        assert_eq!(cocycle_check(&two).unwrap(), 1);
        assert_eq!(cocycle_check(&two.with_flip(0).unwrap()).unwrap(), -1);
        let mut broken = two.clone();
        broken.transitions[1].from = "X".into();
        assert!(matches!(cocycle_check(&broken), Err(Error::NonComposable(_))));

        let h = p("l^3 - 3/2*m^2 + m*n + 1/2*n^2", &["l", "m", "n"]);
        let psi = Matrix::from_ints(&[&[1, 1], &[0, 2]]);
        let lp = three_chart_loop(&h, &names(&["l"]), &names(&["m"]), &names(&["n"]), &psi).unwrap();
        assert_eq!(lp.fibers["A"], int(-4));
        assert_eq!(lp.fibers["C"], int(-4));
        assert_eq!(cocycle_check(&lp).unwrap(), 1);
        assert_eq!(cocycle_check(&lp.with_flip(1).unwrap()).unwrap(), -1);
    }

    #[test]
    fn clean_examples() {
        let space = Arc::new(SymplecticSpace::standard(2));
        let l = LagrangianSubspace::base(space.clone()).unwrap();
        assert_eq!(clean_intersection_data(&l, &l, l.basis()).unwrap(), int(1));
        let a = Matrix::from_ints(&[&[2, 1], &[1, 3]]);
        let g = LagrangianSubspace::graph(space.clone(), &a).unwrap();
        let fiber = LagrangianSubspace::fiber(space.clone()).unwrap();
        let pairing = space.pairing_matrix(g.basis(), fiber.basis()).det().unwrap();
        assert_eq!(clean_intersection_data(&g, &fiber, &Matrix::zeros(0, 4)).unwrap(), pairing);
        assert!(matches!(clean_intersection_data(&l, &l, &Matrix::zeros(0, 4)), Err(Error::NotExact(_))));
        // partial intersection: span(e1) inside base and graph of diag(0, 1)
        let g = LagrangianSubspace::graph(space, &Matrix::from_ints(&[&[0, 0], &[0, 1]])).unwrap();
        let c = Matrix::from_ints(&[&[1, 0, 0, 0]]);
        assert!(!clean_intersection_data(&l, &g, &c).unwrap().is_zero());
    }
}
