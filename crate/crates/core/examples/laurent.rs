use dtcalc::laurent::HLaurent;
use dtcalc::scalar::Scalar;

fn main() {
    let a = HLaurent::exact(-1, vec![Scalar::from_int(1), Scalar::from_int(2)]);
    let b = HLaurent::series(0, vec![Scalar::from_int(1), Scalar::from_int(-1), Scalar::from_int(1)]);
    println!("a = {a}");
    println!("b = {b}");
    println!("a*b = {}", a.mul(&b));
    println!("hbar d/dhbar a = {}", a.hbar_derivative());
}
