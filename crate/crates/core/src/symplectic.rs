//! Symplectic vector spaces, Lagrangian subspaces, pairing maps and chains.
//!
//! Vectors are rows. `ω(u, v) = u Ω vᵀ` for the form matrix `Ω`. A linear map
//! between subspaces is the matrix whose `i`-th column holds the image of the
//! `i`-th stored basis vector, in the stored basis of the target (or in its
//! dual basis when the target is a dual space).

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::torsor::QuadForm;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymplecticSpace {
    form: Matrix,
}

impl SymplecticSpace {
    /// Checks that `form` is antisymmetric, invertible and of even size.
    pub fn new(form: Matrix) -> Result<Self> {
        if !form.is_square() || form.rows() == 0 || form.rows() % 2 == 1 {
            return Err(Error::InvalidForm(format!("form must be square of even positive size, got {}x{}", form.rows(), form.cols())));
        }
        if let Some((i, j)) = first_antisymmetry_violation(&form) {
            return Err(Error::InvalidForm(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
        }
        if form.det()?.is_zero() {
            return Err(Error::InvalidForm("form is degenerate".into()));
        }
        Ok(SymplecticSpace { form })
    }

    /// `ℚ(i)^{2n}` with `Ω = [[0, -I], [I, 0]]`, i.e. the cotangent form
    /// `ω((x, ξ), (y, η)) = ξ·y - x·η`.
    pub fn standard(n: usize) -> Self {
        let mut form = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            form[(i, n + i)] = -Scalar::from_int(1);
            form[(n + i, i)] = Scalar::from_int(1);
        }
        SymplecticSpace { form }
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    /// Half the dimension: the dimension of a Lagrangian subspace.
    pub fn half_dim(&self) -> usize {
        self.form.rows() / 2
    }

    pub fn omega(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let ov = self.form.mul_vec(v).expect("vector length");
        u.iter().zip(&ov).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `B₁ Ω B₂ᵀ`: all pairings between the rows of two bases.
    pub fn pairing_matrix(&self, b1: &Matrix, b2: &Matrix) -> Matrix {
        &(b1 * &self.form) * &b2.transpose()
    }
}

pub fn first_antisymmetry_violation(m: &Matrix) -> Option<(usize, usize)> {
    for i in 0..m.rows() {
        for j in i..m.cols() {
            if m[(i, j)] != -&m[(j, i)] {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LagrangianSubspace {
    space: Arc<SymplecticSpace>,
    basis: Matrix,
}

impl LagrangianSubspace {
    /// Checks rank `n` and isotropy `B Ω Bᵀ = 0`.
    pub fn new(space: Arc<SymplecticSpace>, basis: Matrix) -> Result<Self> {
        let n = space.half_dim();
        if basis.rows() != n || basis.cols() != 2 * n {
            return Err(Error::NotLagrangian(format!("basis must be {n}x{}, got {}x{}", 2 * n, basis.rows(), basis.cols())));
        }
        if basis.rank() != n {
            return Err(Error::NotLagrangian("basis vectors are linearly dependent".into()));
        }
        if !space.pairing_matrix(&basis, &basis).is_zero() {
            return Err(Error::NotLagrangian("subspace is not isotropic".into()));
        }
        Ok(LagrangianSubspace { space, basis })
    }

    /// Span of the first `n` coordinate vectors (`ξ = 0`).
    pub fn base(space: Arc<SymplecticSpace>) -> Result<Self> {
        let n = space.half_dim();
        let basis = Matrix::from_fn(n, 2 * n, |i, j| if i == j { Scalar::from_int(1) } else { Scalar::zero() });
        LagrangianSubspace::new(space, basis)
    }

    /// Span of the last `n` coordinate vectors (`x = 0`).
    pub fn fiber(space: Arc<SymplecticSpace>) -> Result<Self> {
        let n = space.half_dim();
        let basis = Matrix::from_fn(n, 2 * n, |i, j| if j == n + i { Scalar::from_int(1) } else { Scalar::zero() });
        LagrangianSubspace::new(space, basis)
    }

    /// Graph `{(l, A l)}` of a symmetric `A`, basis rows `[I | A]`.
    pub fn graph(space: Arc<SymplecticSpace>, a: &Matrix) -> Result<Self> {
        let n = space.half_dim();
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch(format!("graph matrix must be {n}x{n}")));
        }
        let basis = Matrix::identity(n).hstack(&a.transpose())?;
        LagrangianSubspace::new(space, basis)
    }

    pub fn space(&self) -> &Arc<SymplecticSpace> {
        &self.space
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_transverse_to(&self, o: &LagrangianSubspace) -> bool {
        self.basis.vstack(&o.basis).map(|m| m.rank() == self.space.dim()).unwrap_or(false)
    }

    /// Same subspace with its basis rows replaced by `P·B`.
    pub fn rebased(&self, p: &Matrix) -> Result<Self> {
        LagrangianSubspace::new(self.space.clone(), p.try_mul(&self.basis)?)
    }
}

/// A map `C(L₁, …, L_k)` from `L₁` to `L_k` (odd `k`) or to `L_k*` (even `k`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LagChainMap {
    source: LagrangianSubspace,
    target: LagrangianSubspace,
    matrix: Matrix,
    dual_flag: bool,
}

impl LagChainMap {
    pub fn source(&self) -> &LagrangianSubspace {
        &self.source
    }

    pub fn target(&self) -> &LagrangianSubspace {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// True when the map lands in the dual of the target subspace.
    pub fn dual_flag(&self) -> bool {
        self.dual_flag
    }

    /// `self ∘ first`; requires `first` to land in `self`'s source, undualized.
    pub fn compose_after(&self, first: &LagChainMap) -> Result<LagChainMap> {
        if first.dual_flag || first.target.basis != self.source.basis {
            return Err(Error::DimensionMismatch("maps are not composable".into()));
        }
        Ok(LagChainMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.try_mul(&first.matrix)?,
            dual_flag: self.dual_flag,
        })
    }
}

fn same_space(a: &LagrangianSubspace, b: &LagrangianSubspace) -> Result<()> {
    if a.space.form != b.space.form {
        return Err(Error::DimensionMismatch("subspaces live in different symplectic spaces".into()));
    }
    Ok(())
}

/// Matrix of `f_{L₁L₂}: L₁ → L₂*, v ↦ ω(v, ·)`. Positions in errors are 1-based.
pub fn pairing_map(l1: &LagrangianSubspace, l2: &LagrangianSubspace) -> Result<LagChainMap> {
    pairing_at(l1, l2, 1, 2)
}

fn pairing_at(l1: &LagrangianSubspace, l2: &LagrangianSubspace, p1: usize, p2: usize) -> Result<LagChainMap> {
    same_space(l1, l2)?;
    if !l1.is_transverse_to(l2) {
        return Err(Error::NonTransverse { first: p1, second: p2 });
    }
    let matrix = l1.space.pairing_matrix(&l1.basis, &l2.basis).transpose();
    Ok(LagChainMap { source: l1.clone(), target: l2.clone(), matrix, dual_flag: true })
}

/// `C(L₁, …, L_k) = ⋯ ∘ f_{L₃L₄} ∘ f_{L₃L₂}⁻¹ ∘ f_{L₁L₂}`.
pub fn chain_map(ls: &[LagrangianSubspace]) -> Result<LagChainMap> {
    let first = ls.first().ok_or_else(|| Error::DimensionMismatch("empty chain".into()))?;
    let mut matrix = Matrix::identity(first.dim());
    for (idx, pair) in ls.windows(2).enumerate() {
        let pos = idx + 1;
        let step = if pos % 2 == 1 {
            pairing_at(&pair[0], &pair[1], pos, pos + 1)?.matrix
        } else {
            pairing_at(&pair[1], &pair[0], pos + 1, pos)?.matrix.inverse()?
        };
        matrix = step.try_mul(&matrix)?;
    }
    Ok(LagChainMap {
        source: first.clone(),
        target: ls.last().unwrap().clone(),
        matrix,
        dual_flag: ls.len() % 2 == 0,
    })
}

/// The symmetric form of the self-dual map `C(L₁, L₂, L₃, L₁)`.
pub fn maslov_form(l1: &LagrangianSubspace, l2: &LagrangianSubspace, l3: &LagrangianSubspace) -> Result<QuadForm> {
    let c = chain_map(&[l1.clone(), l2.clone(), l3.clone(), l1.clone()])?;
    if !c.matrix.is_symmetric() {
        return Err(Error::NotSelfDual);
    }
    QuadForm::new(c.matrix)
}

/// Whether `C(L_k, …, L_m) ∘ C(L₁, …, L_k) = C(L₁, …, L_m)` for the odd
/// 1-based split index `k`.
pub fn chain_composition_check(ls: &[LagrangianSubspace], split_index: usize) -> Result<bool> {
    if split_index == 0 || split_index % 2 == 0 || split_index > ls.len() {
        return Err(Error::InvalidSplit(split_index));
    }
    let full = chain_map(ls)?;
    let head = chain_map(&ls[..split_index])?;
    let tail = chain_map(&ls[split_index - 1..])?;
    Ok(tail.matrix.try_mul(&head.matrix)? == full.matrix)
}

/// Whether deleting the back-and-forth `L_{k-1}, L_k, L_{k-1} ↦ L_{k-1}`
/// (1-based `k`, requiring `L_{k+1} = L_{k-1}`) leaves the chain map unchanged.
pub fn back_and_forth_check(ls: &[LagrangianSubspace], k: usize) -> Result<bool> {
    if k < 2 || k + 1 > ls.len() || ls[k - 2].basis != ls[k].basis {
        return Err(Error::InvalidSplit(k));
    }
    let full = chain_map(ls)?;
    let mut short = ls[..k - 1].to_vec();
    short.extend_from_slice(&ls[k + 1..]);
    let reduced = chain_map(&short)?;
    Ok(full.matrix == reduced.matrix && full.dual_flag == reduced.dual_flag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize) -> Arc<SymplecticSpace> {
        Arc::new(SymplecticSpace::standard(n))
    }

    fn lag(space: &Arc<SymplecticSpace>, rows: &[&[i64]]) -> LagrangianSubspace {
        LagrangianSubspace::new(space.clone(), Matrix::from_ints(rows)).unwrap()
    }

    #[test]
    fn pairing_unit_example() {
        // ω(e, f) = 1
        let space = Arc::new(SymplecticSpace::new(Matrix::from_ints(&[&[0, 1], &[-1, 0]])).unwrap());
        let l1 = lag(&space, &[&[1, 0]]);
        let l2 = lag(&space, &[&[0, 1]]);
        assert_eq!(pairing_map(&l1, &l2).unwrap().matrix(), &Matrix::from_ints(&[&[1]]));
        assert_eq!(pairing_map(&l1, &l1).unwrap_err(), Error::NonTransverse { first: 1, second: 2 });
    }

    #[test]
    fn maslov_of_diagonal() {
        let space = sp(1);
        let q = maslov_form(&lag(&space, &[&[1, 0]]), &lag(&space, &[&[1, 1]]), &lag(&space, &[&[0, 1]])).unwrap();
        assert_eq!(q.matrix(), &Matrix::from_ints(&[&[-1]]));
    }

    #[test]
    fn graph_gives_minus_a() {
        let space = sp(2);
        let a = Matrix::from_ints(&[&[2, 1], &[1, 3]]);
        let l = LagrangianSubspace::base(space.clone()).unwrap();
        let g = LagrangianSubspace::graph(space.clone(), &a).unwrap();
        let ls = LagrangianSubspace::fiber(space).unwrap();
        assert_eq!(maslov_form(&l, &g, &ls).unwrap().matrix(), &a.neg());
        let c = chain_map(&[l.clone(), g.clone(), ls, l.clone()]).unwrap();
        assert!(c.dual_flag());
        assert_eq!(chain_map(&[l.clone(), g, l.clone()]).unwrap().matrix(), &Matrix::identity(2));
        assert_eq!(chain_map(&[l]).unwrap().matrix(), &Matrix::identity(2));
    }

    #[test]
    fn invalid_inputs() {
        assert!(SymplecticSpace::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])).is_err());
        assert!(SymplecticSpace::new(Matrix::from_ints(&[&[0, 0], &[0, 0]])).is_err());
        let space = sp(1);
        assert!(LagrangianSubspace::new(space.clone(), Matrix::from_ints(&[&[0, 0]])).is_err());
        let space2 = sp(2);
        assert!(LagrangianSubspace::new(space2, Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0]])).is_err());
        let l = lag(&space, &[&[1, 0]]);
        assert_eq!(chain_composition_check(&[l.clone()], 2).unwrap_err(), Error::InvalidSplit(2));
        assert!(chain_composition_check(&[l], 1).unwrap());
    }
}
