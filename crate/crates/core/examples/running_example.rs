//! `M = Q[x,y,z]/(y(x-1), yz)`: the sequence `z, x` is regular but not
//! strongly regular, while `x, z` is both.

use regseq::criteria::{is_regular, is_strongly_regular, local_depth, DepthValue, PrimeCandidate};
use regseq::{FPModule, Field, Ideal, PolyRing, Polynomial, TermOrder};

fn main() -> regseq::Result<()> {
    let r = PolyRing::new(&["x", "y", "z"], Field::Rational, TermOrder::Grevlex)?;
    let m = FPModule::cyclic(&Ideal::parse(&r, &["y*(x-1)", "y*z"])?);
    for seq in [["z", "x"], ["x", "z"]] {
        let f: Vec<Polynomial> = seq.iter().map(|s| Polynomial::parse(&r, s)).collect::<Result<_, _>>()?;
        let regular = is_regular(&f, &m)?;
        let strong = is_strongly_regular(&f, &m)?;
        print!("[{}]: regular {}, strongly regular {}", seq.join(", "), regular.holds, strong.holds);
        match &strong.witness {
            Some(w) if !strong.holds => println!(" (witness {w})"),
            _ => println!(),
        }
    }
    for gens in [["x", "y", "z"], ["x - 1", "y", "z"], ["x - 2", "y - 1", "z"]] {
        let p = PrimeCandidate::new(&Ideal::parse(&r, &gens)?)?;
        let d: DepthValue = local_depth(&m, &p)?;
        println!("depth at {p}: {d}");
    }
    Ok(())
}
