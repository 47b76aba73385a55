use dtcalc::matrix::Matrix;
use dtcalc::scalar::Scalar;
use dtcalc::torsor::{orientation_element, torsor_sum, QuadForm, TorsorElement};

fn main() -> dtcalc::error::Result<()> {
    let q = QuadForm::new(Matrix::from_ints(&[&[2, 0], &[0, 3]]))?;
    let o = orientation_element(&q, &Scalar::from_int(1), "o_Q")?;
    println!("{}: target {}, rep {}", o.label(), o.target(), o.rep());
    println!("flipped rep {}, relative sign {:?}", o.flip().rep(), o.flip().sign_relative(&o));

    let a = TorsorElement::base_point(Scalar::from_int(-1), "a");
    let b = TorsorElement::base_point(Scalar::from_int(-4), "b");
    let s = torsor_sum(&a, &b);
    println!("{} * {} has square {}, rep {}", a.rep(), b.rep(), s.target(), s.rep());
    Ok(())
}
