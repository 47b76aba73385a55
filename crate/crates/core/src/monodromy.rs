//! Quasi-unipotent monodromy in spectral form and the finite-dimensional
//! Riemann–Hilbert dictionary with logarithms in `G = {-1 < Re λ ≤ 0}`.
//!
//! An exponent `r` stands for the eigenvalue `exp(-2πi r)` of `T`; the
//! logarithm `M` with `T = exp(-2πi M)` has eigenvalue `r`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::DiffModule;
use crate::matrix::Matrix;
use crate::scalar::{fmt_rational, rat, Rational, Scalar};
use crate::upoly::{char_poly, UPoly};

/// Largest order `k` tried when searching for `T^k` unipotent.
pub const DEFAULT_ORDER_BOUND: u32 = 64;

/// `x - ⌈x⌉`, the representative of `x mod 1` in `(-1, 0]`.
pub fn reduce_to_section(x: &Rational) -> Rational {
    x - x.ceil()
}

pub fn in_section(r: &Rational) -> bool {
    r > &-Rational::one() && !r.is_positive()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Block {
    pub exponent: Rational,
    pub jordan: Vec<usize>,
}

/// Canonical spectral form: blocks sorted by exponent, one block per
/// exponent, Jordan sizes in decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonodromyData {
    blocks: Vec<Block>,
}

impl MonodromyData {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        let mut merged: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for b in blocks {
            if !in_section(&b.exponent) {
                return Err(Error::ExponentOutsideSection(fmt_rational(&b.exponent)));
            }
            if b.jordan.iter().any(|&s| s == 0) {
                return Err(Error::DimensionMismatch("Jordan sizes must be positive".into()));
            }
            merged.entry(b.exponent).or_default().extend(b.jordan);
        }
        Ok(MonodromyData::from_map(merged))
    }

    fn from_map(map: BTreeMap<Rational, Vec<usize>>) -> Self {
        let blocks = map
            .into_iter()
            .filter(|(_, j)| !j.is_empty())
            .map(|(exponent, mut jordan)| {
                jordan.sort_unstable_by(|a, b| b.cmp(a));
                Block { exponent, jordan }
            })
            .collect();
        MonodromyData { blocks }
    }

    /// `T = Id` on a space of dimension `dim`.
    pub fn trivial(dim: usize) -> Self {
        MonodromyData::from_map(BTreeMap::from([(Rational::zero(), vec![1; dim])]))
    }

    /// Semisimple data with the given exponents, each reduced into `G`.
    pub fn semisimple(exponents: impl IntoIterator<Item = Rational>) -> Self {
        let mut map: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for e in exponents {
            map.entry(reduce_to_section(&e)).or_default().push(1);
        }
        MonodromyData::from_map(map)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().flat_map(|b| &b.jordan).sum()
    }

    pub fn is_semisimple(&self) -> bool {
        self.blocks.iter().all(|b| b.jordan.iter().all(|&s| s == 1))
    }

    /// Exponents repeated by algebraic multiplicity, ascending.
    pub fn exponents(&self) -> Vec<Rational> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat(b.exponent.clone()).take(b.jordan.iter().sum()))
            .collect()
    }

    /// Multiply `T` by `(-1)^n`.
    pub fn twist_sign(&self, n: usize) -> Self {
        let shift = rat(n as i64, 2);
        self.map_exponents(|r| reduce_to_section(&(r - &shift)))
    }

    /// Data of the complex-conjugate automorphism.
    pub fn conjugate(&self) -> Self {
        self.map_exponents(|r| reduce_to_section(&-r))
    }

    fn map_exponents(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut map: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for b in &self.blocks {
            map.entry(f(&b.exponent)).or_default().extend(b.jordan.iter().copied());
        }
        MonodromyData::from_map(map)
    }

    /// `T₁ ⊗ T₂`: exponents add, Jordan blocks follow
    /// `J_p ⊗ J_q = ⊕_{k=1}^{min(p,q)} J_{p+q+1-2k}`.
    pub fn tensor(&self, o: &MonodromyData) -> Self {
        let mut map: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
        for a in &self.blocks {
            for b in &o.blocks {
                let e = reduce_to_section(&(&a.exponent + &b.exponent));
                let entry = map.entry(e).or_default();
                for &p in &a.jordan {
                    for &q in &b.jordan {
                        for k in 1..=p.min(q) {
                            entry.push(p + q + 1 - 2 * k);
                        }
                    }
                }
            }
        }
        MonodromyData::from_map(map)
    }
}

impl fmt::Display for MonodromyData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{}:{:?}", fmt_rational(&b.exponent), b.jordan))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

// ---- cyclotomic factors over ℚ(i) ----

fn divisors(k: u32) -> Vec<u32> {
    (1..=k).filter(|d| k % d == 0).collect()
}

fn cyclotomic(d: u32, cache: &mut BTreeMap<u32, UPoly>) -> UPoly {
    if let Some(p) = cache.get(&d) {
        return p.clone();
    }
    let mut p = UPoly::binomial(d as usize, &Scalar::one());
    for e in divisors(d) {
        if e < d {
            p = p.div_rem(&cyclotomic(e, cache)).0;
        }
    }
    cache.insert(d, p.clone());
    p
}

/// An irreducible factor over ℚ(i) of `x^k - 1` together with the exponents
/// of its roots.
struct RootFactor {
    poly: UPoly,
    exponents: Vec<Rational>,
}

/// Irreducible factors over ℚ(i) of `Φ_d`: `Φ_d` itself unless `4 | d`, when
/// it splits according to `ζ^{d/4} = ±i`.
fn cyclotomic_factors(d: u32, cache: &mut BTreeMap<u32, UPoly>) -> Vec<RootFactor> {
    let phi = cyclotomic(d, cache);
    let units: Vec<u32> = (0..d).filter(|a| a.gcd(&d) == 1).collect();
    let exponent = |a: u32| if a == 0 { Rational::zero() } else { rat(-(a as i64), d as i64) };
    if d % 4 != 0 {
        return vec![RootFactor { poly: phi, exponents: units.into_iter().map(exponent).collect() }];
    }
    [(Scalar::i(), 1u32), (-Scalar::i(), 3u32)]
        .into_iter()
        .map(|(unit, class)| RootFactor {
            poly: phi.gcd(&UPoly::binomial((d / 4) as usize, &unit)),
            exponents: units.iter().copied().filter(|a| a % 4 == class).map(exponent).collect(),
        })
        .collect()
}

fn companion(p: &UPoly) -> Matrix {
    let m = p.degree().unwrap_or(0);
    let c = p.monic();
    let mut out = Matrix::zeros(m, m);
    for i in 1..m {
        out[(i, i - 1)] = Scalar::one();
    }
    for i in 0..m {
        out[(i, m - 1)] = -&c.coeffs()[i];
    }
    out
}

fn kernel_dim(m: &Matrix) -> usize {
    m.cols() - m.rank()
}

/// Partition `[sizes]` of the Jordan blocks of `a` at the roots of the
/// irreducible `f` (the same for every root of `f`).
fn jordan_partition(a: &Matrix, f: &UPoly) -> Vec<usize> {
    let deg = f.degree().unwrap_or(1).max(1);
    let fa = f.eval_matrix(a);
    let mut power = Matrix::identity(a.rows());
    let mut dims = vec![0usize];
    loop {
        power = &power * &fa;
        let k = kernel_dim(&power);
        if k == *dims.last().unwrap() {
            break;
        }
        dims.push(k);
    }
    // at_least[j] = number of blocks of size ≥ j+1
    let at_least: Vec<usize> = dims.windows(2).map(|w| (w[1] - w[0]) / deg).collect();
    let mut sizes = Vec::new();
    for j in 0..at_least.len() {
        let exact = at_least[j] - at_least.get(j + 1).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat(j + 1).take(exact));
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Result of [`eigen_decompose`]: `T = P·C·P⁻¹` where `C` is the block
/// companion realization of `data` over ℚ(i).
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub data: MonodromyData,
    pub order: u32,
    pub realization: Matrix,
    pub conjugator: Matrix,
}

impl SpectralDecomposition {
    pub fn reconstruct(&self) -> Result<Matrix> {
        let pinv = self.conjugator.inverse()?;
        self.conjugator.try_mul(&self.realization)?.try_mul(&pinv)
    }
}

/// Smallest `k ≤ bound` such that `T^k` is unipotent.
pub fn quasi_unipotent_order(t: &Matrix, bound: u32) -> Result<u32> {
    let s = char_poly(t).squarefree_part();
    (1..=bound)
        .find(|&k| s.divides(&UPoly::binomial(k as usize, &Scalar::one())))
        .ok_or(Error::NotQuasiUnipotent { bound })
}

/// Exact spectral form of a quasi-unipotent `T` with its reconstruction.
pub fn eigen_decompose(t: &Matrix, bound: u32) -> Result<SpectralDecomposition> {
    if !t.is_square() {
        return Err(Error::DimensionMismatch("monodromy must be square".into()));
    }
    if t.det()?.is_zero() {
        return Err(Error::NotInvertible);
    }
    let order = quasi_unipotent_order(t, bound)?;
    let s = char_poly(t).squarefree_part();
    let mut cache = BTreeMap::new();
    let mut blocks = Vec::new();
    let mut realization_parts = Vec::new();
    for d in divisors(order) {
        for factor in cyclotomic_factors(d, &mut cache) {
            if factor.poly.gcd(&s).degree() == Some(0) {
                continue;
            }
            let sizes = jordan_partition(t, &factor.poly);
            for &size in &sizes {
                realization_parts.push(companion(&factor.poly.pow(size)));
            }
            for e in factor.exponents {
                blocks.push(Block { exponent: e, jordan: sizes.clone() });
            }
        }
    }
    let data = MonodromyData::new(blocks)?;
    let realization = realization_parts.iter().fold(Matrix::zeros(0, 0), |acc, m| Matrix::block_diag(&acc, m));
    let conjugator = intertwiner(t, &realization)?;
    Ok(SpectralDecomposition { data, order, realization, conjugator })
}

/// An invertible `P` with `T·P = P·C`.
fn intertwiner(t: &Matrix, c: &Matrix) -> Result<Matrix> {
    let n = t.rows();
    // unknown P[k][j] at index k*n + j
    let mut sys = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..n {
                sys[(row, k * n + j)] += &t[(i, k)];
                sys[(row, i * n + k)] -= &c[(k, j)];
            }
        }
    }
    let ker = sys.kernel();
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..64 {
        let mut p = Matrix::zeros(n, n);
        for col in 0..ker.cols() {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let coeff = Scalar::from_int(((seed >> 33) % 7) as i64 - 3);
            if coeff.is_zero() {
                continue;
            }
            for idx in 0..n * n {
                let v = &ker[(idx, col)] * &coeff;
                p[(idx / n, idx % n)] += &v;
            }
        }
        if !p.det()?.is_zero() {
            return Ok(p);
        }
    }
    Err(Error::Singular)
}

// ---- numeric fallback ----

/// Eigenvalue found by the floating-point fallback.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericEigen {
    pub value: Complex64,
    /// `r = -arg(λ)/2π` in `(-1, 0]`.
    pub exponent: f64,
    pub multiplicity: usize,
    pub on_unit_circle: bool,
}

/// Double-precision eigenvalues with tolerance `1e-10`; not used by any exact path.
pub fn eigen_decompose_numeric(t: &Matrix) -> Result<Vec<NumericEigen>> {
    if !t.is_square() {
        return Err(Error::DimensionMismatch("monodromy must be square".into()));
    }
    if t.det()?.is_zero() {
        return Err(Error::NotInvertible);
    }
    let mut out = Vec::new();
    for (k, f) in char_poly(t).squarefree_decomposition().iter().enumerate() {
        for z in f.numeric_roots() {
            let mut arg = z.arg();
            if arg < 0.0 {
                arg += 2.0 * std::f64::consts::PI;
            }
            let mut r = -arg / (2.0 * std::f64::consts::PI);
            if r <= -1.0 + 1e-10 || r.abs() < 1e-10 {
                r = 0.0;
            }
            out.push(NumericEigen {
                value: z,
                exponent: r,
                multiplicity: k + 1,
                on_unit_circle: (z.norm() - 1.0).abs() < 1e-10,
            });
        }
    }
    out.sort_by(|a, b| a.exponent.total_cmp(&b.exponent));
    Ok(out)
}

// ---- Riemann–Hilbert ----

/// `M` with `T = exp(-2πi M)`: `r·I + N` on each Jordan block, `N` the
/// standard nilpotent block.
pub fn log_monodromy(m: &MonodromyData) -> Matrix {
    let mut out = Matrix::zeros(0, 0);
    for b in &m.blocks {
        for &s in &b.jordan {
            let mut j = Matrix::scalar_identity(s, &Scalar::from_rational(b.exponent.clone()));
            for i in 0..s.saturating_sub(1) {
                j[(i, i + 1)] = Scalar::one();
            }
            out = Matrix::block_diag(&out, &j);
        }
    }
    out
}

/// `RH⁻¹`: the module with `D = ħ∂ħ + M` on the standard lattice.
pub fn rh_inverse(m: &MonodromyData) -> DiffModule {
    DiffModule::from_constant(&log_monodromy(m))
}

/// Monodromy of `exp(-2πi·(D mod ħ))` for a module with a `D`-stable
/// standard lattice whose residue has spectrum in `G`.
pub fn lattice_reduce(d: &DiffModule) -> Result<MonodromyData> {
    let res = d
        .residue()
        .ok_or_else(|| Error::NoAdmissibleLattice("connection has a pole of order > 0 in ħ".into()))?;
    let eigen = rational_eigenvalues(&res)?;
    let mut blocks = Vec::new();
    for r in eigen {
        if !in_section(&r) {
            return Err(Error::NoAdmissibleLattice(format!("residue eigenvalue {} lies outside G", fmt_rational(&r))));
        }
        let f = UPoly::linear(&Scalar::from_rational(r.clone()));
        blocks.push(Block { exponent: r, jordan: jordan_partition(&res, &f) });
    }
    MonodromyData::new(blocks)
}

/// Distinct eigenvalues of `a`, all required to be rational.
fn rational_eigenvalues(a: &Matrix) -> Result<Vec<Rational>> {
    let mut rest = char_poly(a).squarefree_part();
    let mut out = Vec::new();
    for z in rest.numeric_roots() {
        let guess = approximate_rational(z.re, 1_000_000);
        let s = Scalar::from_rational(guess.clone());
        let lin = UPoly::linear(&s);
        if rest.degree().unwrap_or(0) > 0 && lin.divides(&rest) && !out.contains(&guess) {
            rest = rest.div_rem(&lin).0;
            out.push(guess);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::NoAdmissibleLattice("residue has non-rational eigenvalues".into()));
    }
    out.sort();
    Ok(out)
}

/// Best rational approximation with denominator at most `max_den`.
pub fn approximate_rational(x: f64, max_den: i64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let (mut h0, mut h1): (i64, i64) = (0, 1);
    let (mut k0, mut k1): (i64, i64) = (1, 0);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = a as i64;
        let h2 = ai.saturating_mul(h1).saturating_add(h0);
        let k2 = ai.saturating_mul(k1).saturating_add(k0);
        if k2 > max_den || k2 <= 0 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-13 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return Rational::from_integer(BigInt::from(x.round() as i64));
    }
    Rational::new(h1.into(), k1.into())
}

/// Eigenvalue `exp(-2πi r)` in floating point.
pub fn eigenvalue_of(r: &Rational) -> Complex64 {
    let x = r.numer().to_f64().unwrap_or(0.0) / r.denom().to_f64().unwrap_or(1.0);
    Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(r: (i64, i64), j: &[usize]) -> Block {
        Block { exponent: rat(r.0, r.1), jordan: j.to_vec() }
    }

    #[test]
    fn identity_minus_one_and_jordan() {
        let d = eigen_decompose(&Matrix::identity(3), 8).unwrap();
        assert_eq!(d.data, MonodromyData::trivial(3));
        let d = eigen_decompose(&Matrix::from_ints(&[&[-1]]), 8).unwrap();
        assert_eq!(d.data.blocks(), &[block((-1, 2), &[1])]);
        let d = eigen_decompose(&Matrix::from_ints(&[&[1, 1], &[0, 1]]), 8).unwrap();
        assert_eq!(d.data.blocks(), &[block((0, 1), &[2])]);
        assert_eq!(d.reconstruct().unwrap(), Matrix::from_ints(&[&[1, 1], &[0, 1]]));
    }

    #[test]
    fn order_three_and_four() {
        // rotation of order 3
        let t = Matrix::from_ints(&[&[0, -1], &[1, -1]]);
        let d = eigen_decompose(&t, 8).unwrap();
        assert_eq!(d.order, 3);
        assert_eq!(d.data.exponents(), vec![rat(-2, 3), rat(-1, 3)]);
        assert_eq!(d.reconstruct().unwrap(), t);
        // T = [i]: exp(-2πi r) = i gives r = -1/4
        let t = Matrix::from_rows(vec![vec![Scalar::i()]]).unwrap();
        assert_eq!(eigen_decompose(&t, 8).unwrap().data.exponents(), vec![rat(-1, 4)]);
        let t = Matrix::from_rows(vec![vec![-Scalar::i()]]).unwrap();
        assert_eq!(eigen_decompose(&t, 8).unwrap().data.exponents(), vec![rat(-3, 4)]);
    }

    #[test]
    fn not_quasi_unipotent() {
        let t = Matrix::from_ints(&[&[2]]);
        assert_eq!(eigen_decompose(&t, 16).unwrap_err(), Error::NotQuasiUnipotent { bound: 16 });
        assert_eq!(eigen_decompose(&Matrix::from_ints(&[&[0]]), 16).unwrap_err(), Error::NotInvertible);
        let num = eigen_decompose_numeric(&t).unwrap();
        assert!((num[0].value.re - 2.0).abs() < 1e-10);
        assert!(!num[0].on_unit_circle);
    }

    #[test]
    fn rh_examples() {
        let half = MonodromyData::new(vec![block((-1, 2), &[1])]).unwrap();
        assert_eq!(log_monodromy(&half), Matrix::from_rows(vec![vec![Scalar::from_ratio(-1, 2)]]).unwrap());
        let j2 = MonodromyData::new(vec![block((0, 1), &[2])]).unwrap();
        assert_eq!(log_monodromy(&j2), Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        for m in [half, j2, MonodromyData::trivial(1)] {
            assert_eq!(lattice_reduce(&rh_inverse(&m)).unwrap(), m);
        }
    }

    #[test]
    fn lattice_rejects_outside_g() {
        let d = DiffModule::from_constant(&Matrix::from_ints(&[&[1]]));
        assert!(matches!(lattice_reduce(&d), Err(Error::NoAdmissibleLattice(_))));
        let d = DiffModule::from_constant(&Matrix::from_ints(&[&[0, -1], &[1, 0]]));
        assert!(matches!(lattice_reduce(&d), Err(Error::NoAdmissibleLattice(_))));
    }

    #[test]
    fn canonical_form_and_tensor() {
        let a = MonodromyData::new(vec![block((-1, 3), &[1]), block((0, 1), &[1, 2]), block((-1, 3), &[3])]).unwrap();
        assert_eq!(a.blocks(), &[block((-1, 3), &[3, 1]), block((0, 1), &[2, 1])]);
        assert_eq!(a.dim(), 7);
        assert!(MonodromyData::new(vec![block((1, 2), &[1])]).is_err());
        assert!(MonodromyData::new(vec![block((-1, 1), &[1])]).is_err());
        let j2 = MonodromyData::new(vec![block((0, 1), &[2])]).unwrap();
        assert_eq!(j2.tensor(&j2).blocks(), &[block((0, 1), &[3, 1])]);
        let h = MonodromyData::semisimple([rat(1, 2)]);
        assert_eq!(h.tensor(&h), MonodromyData::trivial(1));
        assert_eq!(h.twist_sign(1), MonodromyData::trivial(1));
        assert_eq!(h.twist_sign(2), h);
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(approximate_rational(-1.0 / 3.0, 1000), rat(-1, 3));
        assert_eq!(approximate_rational(-5.0 / 12.0, 1000), rat(-5, 12));
        assert_eq!(approximate_rational(0.0, 1000), Rational::zero());
    }
}
