use dtcalc::parse::parse_poly;
use dtcalc::torsor::QuadForm;
use dtcalc::vanishing::{pv_data, spectrum, stabilize, thom_sebastiani, thom_sebastiani_poly, OrderParam};

fn main() -> dtcalc::error::Result<()> {
    let f = parse_poly("x^3", None)?;
    let g = parse_poly("y^4", None)?;
    let h = thom_sebastiani_poly(&f, &g);
    let joined = thom_sebastiani(&pv_data(&f)?, &pv_data(&g)?);
    println!("{}: spectrum {}", h.render(), spectrum(&h)?);
    println!("joined monodromy {}", joined.monodromy());
    println!("direct monodromy {}", pv_data(&h)?.monodromy());

    let q = QuadForm::sum_of_squares(2);
    let s = stabilize(&pv_data(&f)?, &q, &OrderParam::default())?;
    println!("x^3 stabilized by a rank 2 form: {}", s.monodromy());
    if let Some(sp) = s.spectrum() {
        println!("stabilized spectrum {sp}");
    }
    Ok(())
}
