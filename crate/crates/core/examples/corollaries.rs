//! Transferring regularity along radical containment, and regularity of
//! systems of parameters on Cohen-Macaulay modules.

use regseq::criteria::{corollary2_check, sop_regular_check};
use regseq::{FPModule, Field, Ideal, PolyRing, Polynomial, TermOrder};

fn polys(r: &regseq::Ring, s: &[&str]) -> regseq::Result<Vec<Polynomial>> {
    s.iter().map(|t| Polynomial::parse(r, t)).collect()
}

fn main() -> regseq::Result<()> {
    let r = PolyRing::new(&["x", "y", "z"], Field::Prime(32003), TermOrder::Grevlex)?;
    let free = FPModule::free(&r, 1);
    let rep = corollary2_check(&free, &polys(&r, &["x", "y"])?, &polys(&r, &["x^2", "x*y + y^3"])?)?;
    println!("x, y -> x^2, xy + y^3: {}", rep.outcome.describe());
    let rep = corollary2_check(&free, &polys(&r, &["x", "y"])?, &polys(&r, &["x^2", "z"])?)?;
    println!("x, y -> x^2, z: {}", rep.outcome.describe());

    let cm = FPModule::cyclic(&Ideal::parse(&r, &["x*y"])?);
    let rep = sop_regular_check(&cm, &polys(&r, &["x + y", "z"])?)?;
    println!("R/(xy), [x + y, z]: sop {} CM {} -> {}", rep.is_sop, rep.is_cohen_macaulay, rep.outcome.describe());
    let not_cm = FPModule::cyclic(&Ideal::parse(&r, &["x*y", "x*z"])?);
    let rep = sop_regular_check(&not_cm, &polys(&r, &["y", "z"])?)?;
    println!("R/(xy, xz), [y, z]: dim {} depth {} -> {}", rep.dimension, rep.depth, rep.outcome.describe());
    Ok(())
}
