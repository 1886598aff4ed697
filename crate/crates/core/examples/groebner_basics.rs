//! Groebner bases, membership, elimination and colon ideals.

use regseq::groebner::{colon_ideal, elimination, ideal_intersection, radical_membership, saturation};
use regseq::{Field, Ideal, PolyRing, Polynomial, TermOrder};

fn main() -> regseq::Result<()> {
    let r = PolyRing::new(&["t", "x", "y"], Field::Rational, TermOrder::Lex)?;
    let curve = Ideal::parse(&r, &["x - t^2", "y - t^3"])?;
    println!("reduced basis: {}", curve.reduced()?);
    println!("eliminate t: {}", elimination(&curve, &[0])?);

    let r = PolyRing::new(&["x", "y", "z"], Field::Prime(32003), TermOrder::Grevlex)?;
    let i = Ideal::parse(&r, &["y*(x-1)", "y*z"])?;
    let z = Polynomial::parse(&r, "z")?;
    println!("{i} : z = {}", colon_ideal(&i, &z)?.reduced()?);
    println!("saturation by z: {}", saturation(&i, &z)?.reduced()?);
    let a = Ideal::parse(&r, &["x", "y"])?;
    let b = Ideal::parse(&r, &["y", "z"])?;
    println!("(x, y) ∩ (y, z) = {}", ideal_intersection(&a, &b)?.reduced()?);
    let g = Ideal::parse(&r, &["x + y", "x*y"])?;
    let x = Polynomial::parse(&r, "x")?;
    println!("x in {g}: {}, x in its radical: {}", g.contains(&x)?, radical_membership(&x, &g)?);
    Ok(())
}
