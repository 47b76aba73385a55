use std::sync::Arc;

use dtcalc::matrix::Matrix;
use dtcalc::symplectic::{chain_composition_check, chain_map, maslov_form, LagrangianSubspace, SymplecticSpace};

fn main() -> dtcalc::error::Result<()> {
    let space = Arc::new(SymplecticSpace::standard(1));
    let l = LagrangianSubspace::base(space.clone())?;
    let g = LagrangianSubspace::graph(space.clone(), &Matrix::from_ints(&[&[2]]))?;
    let ls = LagrangianSubspace::fiber(space.clone())?;
    println!("q(base, graph(2), fiber) = {}", maslov_form(&l, &g, &ls)?.matrix()[(0, 0)]);

    let space2 = Arc::new(SymplecticSpace::standard(2));
    let chain = vec![
        LagrangianSubspace::base(space2.clone())?,
        LagrangianSubspace::graph(space2.clone(), &Matrix::from_ints(&[&[1, 1], &[1, 3]]))?,
        LagrangianSubspace::fiber(space2.clone())?,
        LagrangianSubspace::graph(space2.clone(), &Matrix::from_ints(&[&[-1, 0], &[0, 2]]))?,
    ];
    let c = chain_map(&chain)?;
    println!("chain map over four Lagrangians (dual = {}):", c.dual_flag());
    for row in c.matrix().to_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    for k in (1..chain.len()).step_by(2) {
        println!("split at {k}: {}", chain_composition_check(&chain, k)?);
    }
    Ok(())
}
