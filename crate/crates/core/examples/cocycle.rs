use dtcalc::dcritical::{cocycle_check, three_chart_loop};
use dtcalc::matrix::Matrix;
use dtcalc::parse::parse_poly;
use dtcalc::poly::names;

fn main() -> dtcalc::error::Result<()> {
    let h = parse_poly("l^3 - 3/2*m^2 + m*n + 1/2*n^2", Some(&names(&["l", "m", "n"])))?;
    let psi = Matrix::from_ints(&[&[1, 1], &[0, 2]]);
    let lp = three_chart_loop(&h, &names(&["l"]), &names(&["m"]), &names(&["n"]), &psi)?;
    for (chart, fiber) in &lp.fibers {
        println!("chart {chart}: fiber target {fiber}");
    }
    for t in &lp.transitions {
        println!("{} -> {}: {}", t.from, t.to, t.factor);
    }
    println!("loop sign {}", cocycle_check(&lp)?);
    println!("with one factor flipped: {}", cocycle_check(&lp.with_flip(1)?)?);
    Ok(())
}
