use dtcalc::dcritical::{embedding_quadform, maslov_consistency, polarization_model};
use dtcalc::parse::parse_poly;
use dtcalc::poly::names;

fn main() -> dtcalc::error::Result<()> {
    let (l, m) = (names(&["x"]), names(&["y"]));
    let h = parse_poly("x^3 + x*y - 1/2*y^2", Some(&names(&["x", "y"])))?;
    let e = embedding_quadform(&h, &l, &m)?;
    println!("y = {} on the critical locus", e.elimination[0].render());
    println!("restricted potential f = {}", e.f.render());
    println!("q_xi = {}", e.q_xi.matrix()[(0, 0)]);

    let triple = polarization_model(&h, &l, &m)?;
    println!("Maslov form of the polarization matches q_xi: {}", maslov_consistency(&h, &l, &m, &triple)?);
    Ok(())
}
