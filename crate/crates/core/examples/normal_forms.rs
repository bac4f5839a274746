//! Reduces words to normal form and decides equality without touching the automaton.
use mealy_growth::family::{normal_forms_up_to, reduce, word_problem, GeneratorWord};

fn main() -> mealy_growth::Result<()> {
    let m = 2;
    for text in ["f0 f1^2 f0", "f1 f0 f1 f0 f0", "f0 f1^4 f0 f1"] {
        let w = GeneratorWord::parse(m, text)?;
        let nf = reduce(&w);
        println!("{text:>16} -> {} ({})", nf.to_word(), nf.to_json());
    }

    let left = GeneratorWord::parse(m, "f0 f1 f0 f1 f0")?;
    let right = GeneratorWord::parse(m, "f0 f1 f0")?;
    println!("{left} == {right}: {}", word_problem(&left, &right)?);

    let forms = normal_forms_up_to(m, 8)?;
    println!("{} distinct elements of length at most 8", forms.len());
    Ok(())
}
