//! Compares the exact spherical growth with the Mahler-type estimate.
use mealy_growth::series::{delta_recurrence, ln_big, ln_mahler_estimate, slope_diagnostic};

fn main() -> mealy_growth::Result<()> {
    for m in 2..=4 {
        let delta = delta_recurrence(m, 10_000)?;
        for n in [100usize, 1_000, 10_000] {
            let exact = ln_big(&delta.values[n]);
            let estimate = ln_mahler_estimate(m, n as f64)?;
            println!("m={m} n={n:>6} ln delta={exact:>10.3} estimate={estimate:>10.3}");
        }
        println!("m={m} log-log slope at 1e4: {:.3}", slope_diagnostic(m, 10_000)?);
    }
    Ok(())
}
