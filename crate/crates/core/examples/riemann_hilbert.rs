use dtcalc::matrix::Matrix;
use dtcalc::monodromy::{eigen_decompose, lattice_reduce, rh_inverse, Block, MonodromyData};
use dtcalc::scalar::rat;

fn main() -> dtcalc::error::Result<()> {
    let t = Matrix::from_ints(&[&[0, -1], &[1, -1]]);
    let d = eigen_decompose(&t, 64)?;
    println!("order {}, data {}", d.order, d.data);

    let m = MonodromyData::new(vec![
        Block { exponent: rat(-1, 2), jordan: vec![2] },
        Block { exponent: rat(0, 1), jordan: vec![1, 1] },
    ])?;
    let module = rh_inverse(&m);
    let back = lattice_reduce(&module)?;
    println!("{m} -> rank {} module -> {back}", module.rank());
    println!("conjugate {}, tensor square dim {}", m.conjugate(), m.tensor(&m).dim());
    Ok(())
}
