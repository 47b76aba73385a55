use dtcalc::dcritical::CriticalChart;
use dtcalc::parse::parse_poly;
use dtcalc::vanishing::milnor_algebra;

fn main() -> dtcalc::error::Result<()> {
    for src in ["x^3 + y^4", "x^2*y + y^4", "x^2 + y^2 + z^3"] {
        let f = parse_poly(src, None)?;
        let alg = milnor_algebra(&f)?;
        let basis: Vec<String> = alg.basis_polys().iter().map(|p| p.render()).collect();
        println!("{src}: mu = {}, basis = [{}]", alg.mu(), basis.join(", "));
    }

    let chart = CriticalChart::new(parse_poly("x^4 - 2*x^3 + x^2", None)?)?;
    println!("germ of x^4 - 2*x^3 + x^2 at the origin: mu = {}", chart.milnor_number());
    Ok(())
}
