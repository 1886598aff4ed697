//! Cross-check of regularity against local depth at the associated primes
//! and at the primes of the support.

use regseq::criteria::{theorem_crosscheck, PrimeCandidate, PrimeSet, TheoremReport};
use regseq::{FPModule, Field, Ideal, PolyRing, Polynomial, TermOrder};

fn show(name: &str, rep: &TheoremReport) {
    println!("[{name}] regular {}", rep.regular.holds);
    for row in &rep.ass_rows {
        println!("  Ass {}: depth {} bound met {}", row.prime, row.local_depth, row.meets_bound);
    }
    println!("  conditions (ii) {} (iii) {} consistent {}", rep.condition_ii, rep.condition_iii, rep.consistent());
}

fn main() -> regseq::Result<()> {
    let r = PolyRing::new(&["x", "y", "z"], Field::Prime(32003), TermOrder::Grevlex)?;
    let m = FPModule::cyclic(&Ideal::parse(&r, &["x*y", "x*z"])?);
    for seq in [vec!["y", "z"], vec!["z"], vec!["x"]] {
        let f: Vec<Polynomial> = seq.iter().map(|s| Polynomial::parse(&r, s)).collect::<Result<_, _>>()?;
        show(&seq.join(", "), &theorem_crosscheck(&m, &f, None, false)?);
    }

    // M/(x + y + z)M is not monomial; the primes of the sum are supplied instead.
    let f = vec![Polynomial::parse(&r, "x + y + z")?];
    let cands = PrimeSet::candidates(vec![
        PrimeCandidate::new(&Ideal::parse(&r, &["x", "y + z"])?)?,
        PrimeCandidate::new(&Ideal::parse(&r, &["x", "y", "z"])?)?,
    ]);
    show("x + y + z", &theorem_crosscheck(&m, &f, Some(&cands), false)?);
    Ok(())
}
