use std::sync::Arc;

use dtcalc::dcritical::clean_intersection_data;
use dtcalc::matrix::Matrix;
use dtcalc::symplectic::{LagrangianSubspace, SymplecticSpace};

fn main() -> dtcalc::error::Result<()> {
    let space = Arc::new(SymplecticSpace::standard(2));
    let l = LagrangianSubspace::base(space.clone())?;
    let m = LagrangianSubspace::fiber(space.clone())?;
    println!("transverse: {}", clean_intersection_data(&l, &m, &Matrix::zeros(0, 4))?);

    let g = LagrangianSubspace::graph(space.clone(), &Matrix::from_ints(&[&[0, 0], &[0, 3]]))?;
    let common = Matrix::from_ints(&[&[1, 0, 0, 0]]);
    println!("one-dimensional intersection: {}", clean_intersection_data(&l, &g, &common)?);
    println!("swapped: {}", clean_intersection_data(&g, &l, &common)?);
    Ok(())
}
