//! Checks the two relation families for small parameters.
use mealy_growth::family::{relation_a, relation_b, word_problem};

fn main() -> mealy_growth::Result<()> {
    let m = 3;
    for k in 1..=3usize {
        let (lhs, rhs) = relation_b(m, k)?;
        println!("B k={k}: {lhs} = {rhs} holds: {}", word_problem(&lhs, &rhs)?);
        for p in 1..m {
            let (lhs, rhs) = relation_a(m, k, p)?;
            println!("A k={k} p={p}: {lhs} = {rhs} holds: {}", word_problem(&lhs, &rhs)?);
        }
    }
    Ok(())
}
