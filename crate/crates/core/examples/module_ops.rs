//! Finitely presented modules: Hilbert functions, annihilators, support,
//! free resolutions and kernels.

use regseq::fpmodule::{free_resolution, kernel, ModuleMap};
use regseq::{FPModule, Field, FreeElement, Ideal, PolyRing, TermOrder};

fn main() -> regseq::Result<()> {
    let r = PolyRing::new(&["x", "y", "z"], Field::Prime(32003), TermOrder::Grevlex)?;
    let m = FPModule::present(
        &r,
        2,
        vec![FreeElement::parse(&r, &["x", "0"])?, FreeElement::parse(&r, &["y", "z"])?],
        Some(vec![0, 0]),
    )?;
    let h: Vec<u64> = (0..6).map(|d| m.hilbert_function(d)).collect::<Result<_, _>>()?;
    println!("hilbert function: {h:?}");
    println!("annihilator: {}", m.annihilator()?.reduced()?);
    println!("krull dimension: {}", m.krull_dimension()?);
    println!("(x, y) in support: {}", m.support_contains(&Ideal::parse(&r, &["x", "y"])?)?);

    let k = FPModule::cyclic(&Ideal::irrelevant(&r));
    println!("resolution ranks of k: {:?}", free_resolution(&k, 4)?.ranks());

    let map = ModuleMap::new(
        FPModule::free(&r, 2),
        FPModule::free(&r, 1),
        vec![FreeElement::parse(&r, &["y"])?, FreeElement::parse(&r, &["x"])?],
    )?;
    for v in &kernel(&map)?.embedding {
        println!("kernel generator: {v}");
    }
    Ok(())
}
