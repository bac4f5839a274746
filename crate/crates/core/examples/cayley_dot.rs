//! Writes the Cayley graph of a small ball in Graphviz format.
use mealy_growth::family::cayley_ball;
use mealy_growth::growth::GrowthLimits;

fn main() -> mealy_growth::Result<()> {
    let ball = cayley_ball(2, 4, GrowthLimits::default())?;
    eprintln!("{} simple paths from the identity", ball.simple_paths().len());
    print!("{}", ball.to_dot());
    Ok(())
}
