//! Builds the three-state family, composes states and minimizes the result.
use mealy_growth::family::build_i;
use mealy_growth::growth::Transformation;

fn main() -> mealy_growth::Result<()> {
    let a = build_i(3)?;
    println!("{a}");

    let f0 = Transformation::at(&a, 1)?;
    let f1 = Transformation::at(&a, 2)?;
    let word = vec![2, 2, 1, 0];
    let composed = f0.compose(&f1)?;
    println!("f0 f1 on {word:?} -> {:?}", composed.apply(&word)?);
    println!("f0 f1 has {} states after minimization", composed.num_states());

    let square = a.product(&a)?;
    let (min, _) = square.minimize();
    println!("A x A: {} states, minimized to {}", square.num_states(), min.num_states());
    Ok(())
}
