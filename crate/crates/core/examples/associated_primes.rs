//! Associated primes and support of monomial modules, and membership
//! tests for arbitrary prime candidates.

use regseq::criteria::{monomial_ass, monomial_support, prime_membership, PrimeCandidate};
use regseq::{FPModule, Field, Ideal, PolyRing, TermOrder};

fn main() -> regseq::Result<()> {
    let r = PolyRing::new(&["x", "y", "z"], Field::Prime(32003), TermOrder::Grevlex)?;
    let m = FPModule::cyclic(&Ideal::parse(&r, &["x^2", "x*y", "y*z^2"])?);
    let ass = monomial_ass(&m)?;
    println!("Ass: {}", ass.primes.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    let supp = monomial_support(&m)?;
    println!("support, variable primes: {}", supp.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));

    let m = FPModule::cyclic(&Ideal::parse(&r, &["y*(x-1)", "y*z"])?);
    for gens in [vec!["y"], vec!["x - 1", "z"], vec!["x", "y", "z"]] {
        let p = PrimeCandidate::new(&Ideal::parse(&r, &gens)?)?;
        let mem = prime_membership(&m, &p)?;
        println!("{p}: in Supp {}, in Ass {}", mem.in_supp, mem.in_ass);
    }
    Ok(())
}
