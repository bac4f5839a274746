//! Generating function coefficients, the partition connection and finite differences.
use mealy_growth::series::{
    check_gamma_delta_identity, finite_difference, gamma2_table, partitions_table, series_coeffs,
};

fn main() -> mealy_growth::Result<()> {
    let m = 2;
    let s = series_coeffs(m, 16)?;
    println!("S     {:?}", s.s.coeffs);
    println!("delta {:?}", s.delta.coeffs);
    println!("gamma {:?}", s.gamma.coeffs);
    println!("identity check: {}", check_gamma_delta_identity(m, 200)?);

    let parts = partitions_table(m, 16)?;
    let g2 = gamma2_table(m, 16)?;
    println!("partitions {parts:?}");
    println!("gamma''    {g2:?}");
    let second = finite_difference(&s.gamma.coeffs, 2)?;
    println!("second differences start at {}: {:?}", second.start, second.values);
    Ok(())
}
