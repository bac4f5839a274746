//! The three-state automata `I_m` and the arithmetic of their semigroups.

mod cayley;
mod normal_form;
mod relations;
mod word;

pub use cayley::{cayley_ball, CayleyBall, CayleyBlock};
pub use normal_form::{
    contains_relation_lhs, normal_forms_up_to, reduce, restrict_nf, word_problem, NormalForm,
};
pub use relations::{relation_a, relation_b, relation_general, v_word};
pub use word::{Gen, GeneratorWord};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::growth::Transformation;
use crate::machine::{MealyMachine, State, Symbol};

pub const E: State = 0;
pub const F0: State = 1;
pub const F1: State = 2;

pub fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain(format!("alphabet size must be at least 2, got {m}")));
    }
    Ok(())
}

/// `I_m`: `e` is the identity, `f0` writes `x_0` and `f1` adds one, each
/// staying in place on `x_{m-1}` and falling to `e` otherwise.
pub fn build_i(m: usize) -> Result<MealyMachine> {
    check_m(m)?;
    let top = m - 1;
    let mut rows = vec![(0..m).map(|x| (E, x)).collect::<Vec<_>>()];
    rows.push((0..m).map(|x| (if x == top { F0 } else { E }, 0)).collect());
    rows.push((0..m).map(|x| (if x == top { F1 } else { E }, (x + 1) % m)).collect());
    MealyMachine::from_rows(m, &rows)?.with_labels(["e", "f0", "f1"])
}

/// `x_i -> x_{i+1 mod m}`.
pub fn cyclic_shift(m: usize) -> Vec<Symbol> {
    (0..m).map(|x| (x + 1) % m).collect()
}

/// `I_m` with its letters renamed by [`cyclic_shift`].
pub fn build_i_prime(m: usize) -> Result<MealyMachine> {
    build_i(m)?.relabel(&cyclic_shift(m), &[E, F0, F1])
}

/// The transformations `f0` and `f1` of `I_m`.
pub fn generators(m: usize) -> Result<(Transformation, Transformation)> {
    let machine = build_i(m)?;
    Ok((Transformation::at(&machine, F0)?, Transformation::at(&machine, F1)?))
}

/// The largest `t` with `m^t` dividing `p`.
pub fn t1(p: &BigUint, m: usize) -> Result<u64> {
    check_m(m)?;
    if p.is_zero() {
        return Err(Error::Domain("t1 is undefined at 0".into()));
    }
    let mut t = 0;
    let mut rest = p.clone();
    while (&rest % m).is_zero() {
        rest /= m;
        t += 1;
    }
    Ok(t)
}

/// `p mod m^{t1(p) + 1}`.
pub fn t2(p: &BigUint, m: usize) -> Result<BigUint> {
    let t = t1(p, m)?;
    Ok(p % BigUint::from(m).pow(t as u32 + 1))
}
