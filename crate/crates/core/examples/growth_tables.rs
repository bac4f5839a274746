//! Growth of the semigroup generated by the family, by enumeration and by recurrence.
use mealy_growth::family::build_i;
use mealy_growth::growth::{ball_and_word_growth, GrowthLimits};
use mealy_growth::series::gamma_recurrence;

fn main() -> mealy_growth::Result<()> {
    for m in 2..=4 {
        let (ball, word) = ball_and_word_growth(&build_i(m)?, &[0, 1, 2], 10, GrowthLimits::default())?;
        let recurrence = gamma_recurrence(m, 10)?;
        println!("m={m} ball      {ball}");
        println!("m={m} recurrence {recurrence}");
        println!("m={m} words     {word}");
        assert_eq!(ball.values, recurrence.values);
    }
    Ok(())
}
