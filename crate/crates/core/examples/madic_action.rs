//! The action on integers written in base m, checked against the transducer.
use mealy_growth::family::GeneratorWord;
use mealy_growth::madic::{act_integer, madic_and, MadicCodec};
use num_bigint::BigUint;

fn main() -> mealy_growth::Result<()> {
    let m = 3;
    let codec = MadicCodec::new(m, 8)?;
    for text in ["f0", "f1", "f1^4 f0", "f0 f1^2 f0 f1"] {
        let w = GeneratorWord::parse(m, text)?;
        let t = w.to_transformation()?;
        for p in [5u32, 26, 100] {
            let p = BigUint::from(p);
            let by_machine = codec.decode(&t.apply(&codec.encode(&p)?)?)?;
            println!("{text:>14} ({p:>3}) = {by_machine:>3}  formula {}", act_integer(&w, &p));
        }
    }
    println!("and(17, 23) in base 3 = {}", madic_and(&BigUint::from(17u32), &BigUint::from(23u32), m));
    Ok(())
}
