//! Koszul complexes, their homology, and depth computed two ways.

use regseq::criteria::depth_ext;
use regseq::koszul::{build_koszul, depth_via_koszul};
use regseq::{FPModule, Field, Ideal, PolyRing, Polynomial, TermOrder};

fn main() -> regseq::Result<()> {
    let r = PolyRing::new(&["x", "y", "z"], Field::Prime(32003), TermOrder::Grevlex)?;
    let m = FPModule::cyclic(&Ideal::parse(&r, &["x*y", "x*z"])?);
    let f = vec![Polynomial::parse(&r, "x")?, Polynomial::parse(&r, "y - z")?];
    let k = build_koszul(&f, &m)?;
    println!("ranks: {:?}", k.ranks());
    for i in 0..=f.len() {
        let vanishes = k.homology_vanishes(i)?;
        print!("H_{i} vanishes: {vanishes}");
        match k.homology_witness(i)? {
            Some(w) if i > 0 => println!(" (cycle {w})"),
            _ => println!(),
        }
    }
    for gens in [vec!["x*y", "x*z"], vec!["x^2", "x*y"], vec![]] {
        let m = FPModule::cyclic(&Ideal::parse(&r, &gens)?);
        let name = if gens.is_empty() { "R".to_string() } else { format!("R/({})", gens.join(", ")) };
        println!("depth of {name}: koszul {}, ext {}", depth_via_koszul(&m)?, depth_ext(&m)?);
    }
    Ok(())
}
