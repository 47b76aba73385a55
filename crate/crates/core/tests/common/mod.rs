#![allow(dead_code)]

use std::sync::Arc;

use dtcalc::matrix::Matrix;
use dtcalc::monodromy::{Block, MonodromyData};
use dtcalc::scalar::{rat, Scalar};
use dtcalc::symplectic::{LagrangianSubspace, SymplecticSpace};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small Gaussian rational with numerators in `[-4, 4]` and denominators in `[1, 3]`.
pub fn gaussian(r: &mut ChaCha8Rng, complex: bool) -> Scalar {
    let re = Scalar::from_ratio(r.gen_range(-4..=4), r.gen_range(1..=3));
    if complex && r.gen_bool(0.5) {
        re + Scalar::from_ratio(r.gen_range(-3..=3), r.gen_range(1..=2)) * Scalar::i()
    } else {
        re
    }
}

/// Gaussian integer `a + bi` with `|a| <= 2`, `|b| <= 1`.
pub fn small(r: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_int(r.gen_range(-2..=2)) + Scalar::from_int(r.gen_range(-1..=1)) * Scalar::i()
}

fn small_symmetric(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = small(r);
            m[(i, j)] = x.clone();
            m[(j, i)] = x;
        }
    }
    m
}

fn small_invertible(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| small(r));
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

pub fn random_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| gaussian(r, true))
}

pub fn random_symmetric(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    let a = random_matrix(r, n, n);
    a.add(&a.transpose()).unwrap()
}

pub fn random_invertible(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = random_matrix(r, n, n);
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

pub fn random_symmetric_invertible(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let m = random_symmetric(r, n);
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// Product of elementary symplectic matrices for `Ω = [[0, -I], [I, 0]]`:
/// shears `[[I, X], [0, I]]`, `[[I, 0], [X, I]]` with `X` symmetric and
/// `diag(G, G^{-T})`.
pub fn random_symplectic(r: &mut ChaCha8Rng, n: usize) -> Matrix {
    let id = Matrix::identity(n);
    let zero = Matrix::zeros(n, n);
    let mut s = Matrix::identity(2 * n);
    for _ in 0..3 {
        let e = match r.gen_range(0..3) {
            0 => id.hstack(&small_symmetric(r, n)).unwrap().vstack(&zero.hstack(&id).unwrap()).unwrap(),
            1 => id.hstack(&zero).unwrap().vstack(&small_symmetric(r, n).hstack(&id).unwrap()).unwrap(),
            _ => {
                let g = small_invertible(r, n);
                let git = g.inverse().unwrap().transpose();
                g.hstack(&zero).unwrap().vstack(&zero.hstack(&git).unwrap()).unwrap()
            }
        };
        s = &s * &e;
    }
    s
}

/// Image of the zero section under a random symplectic map, in a random basis.
pub fn random_lagrangian(r: &mut ChaCha8Rng, space: &Arc<SymplecticSpace>) -> LagrangianSubspace {
    let n = space.half_dim();
    let base = LagrangianSubspace::base(space.clone()).unwrap();
    let s = random_symplectic(r, n);
    let moved = LagrangianSubspace::new(space.clone(), base.basis().try_mul(&s.transpose()).unwrap()).unwrap();
    moved.rebased(&small_invertible(r, n)).unwrap()
}

/// Chain of `len` Lagrangians with consecutive members transverse.
pub fn random_transverse_chain(r: &mut ChaCha8Rng, space: &Arc<SymplecticSpace>, len: usize) -> Vec<LagrangianSubspace> {
    let mut out: Vec<LagrangianSubspace> = Vec::with_capacity(len);
    while out.len() < len {
        let l = random_lagrangian(r, space);
        if out.last().map_or(true, |p| p.is_transverse_to(&l)) {
            out.push(l);
        }
    }
    out
}

/// Random quasi-unipotent data: up to three exponents with denominators at
/// most 12 and Jordan sizes at most 4.
pub fn random_monodromy(r: &mut ChaCha8Rng) -> MonodromyData {
    let blocks = (0..r.gen_range(1..=3))
        .map(|_| {
            let d = r.gen_range(1..=12);
            let a = r.gen_range(0..d);
            Block { exponent: rat(-a, d), jordan: (0..r.gen_range(1..=2)).map(|_| r.gen_range(1..=4)).collect() }
        })
        .collect();
    MonodromyData::new(blocks).unwrap()
}

/// Quasi-homogeneous corpus used by the spectrum and Thom–Sebastiani checks.
pub fn qh_corpus() -> Vec<String> {
    let mut out: Vec<String> = (2..=13).map(|k| format!("x^{k}")).collect();
    out.extend(["x^3 + y^3", "x^3 + y^4", "x^2 + y^2 + z^2", "x*y", "x^4 + y^4"].map(String::from));
    out
}
