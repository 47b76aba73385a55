use dtcalc::parse::parse_poly;
use dtcalc::vanishing::{qh_weights, spectrum, twisted_dr_operator};

fn main() -> dtcalc::error::Result<()> {
    for src in ["x^5", "x^3 + y^4", "x^2*y + y^3"] {
        let f = parse_poly(src, None)?;
        let w: Vec<String> = qh_weights(&f).unwrap_or_default().iter().map(ToString::to_string).collect();
        println!("{src}: weights [{}], spectrum {}", w.join(", "), spectrum(&f)?);
    }

    let op = twisted_dr_operator(&parse_poly("x^4", None)?)?;
    println!("twisted de Rham operator on the Milnor basis of x^4:");
    for row in op.to_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    Ok(())
}
