use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

use super::check_m;
use super::word::{Gen, GeneratorWord};

/// `v_k = f0 f1^{m^k - 1} f0 … f1^{m - 1} f0`, with `v_0 = f0`.
pub fn v_word(m: usize, k: usize) -> Result<GeneratorWord> {
    check_m(m)?;
    let base = BigUint::from(m);
    let mut word = GeneratorWord::f0(m);
    for i in (1..=k).rev() {
        word.push(Gen::F1, base.pow(i as u32) - 1u32);
        word.push(Gen::F0, BigUint::one());
    }
    Ok(word)
}

/// `f0 f1^{p m^k - 1} v_k = v_k` for `1 ≤ p ≤ m - 1`.
pub fn relation_a(m: usize, k: usize, p: usize) -> Result<(GeneratorWord, GeneratorWord)> {
    check_m(m)?;
    if p == 0 || p >= m {
        return Err(Error::Domain(format!("relation A needs 1 <= p <= {}, got {p}", m - 1)));
    }
    let v = v_word(m, k)?;
    let mut lhs = GeneratorWord::f0(m);
    lhs.push(Gen::F1, BigUint::from(p) * BigUint::from(m).pow(k as u32) - 1u32);
    Ok((lhs.concat(&v), v))
}

/// `f0 f1^{m^k + m^{k+1} - 1} v_k = f1^{m^{k+1}} v_k`.
pub fn relation_b(m: usize, k: usize) -> Result<(GeneratorWord, GeneratorWord)> {
    check_m(m)?;
    let v = v_word(m, k)?;
    let base = BigUint::from(m);
    let mk = base.pow(k as u32);
    let mk1 = &mk * &base;
    let mut lhs = GeneratorWord::f0(m);
    lhs.push(Gen::F1, &mk + &mk1 - 1u32);
    Ok((lhs.concat(&v), GeneratorWord::f1_pow(m, mk1).concat(&v)))
}

/// The general relation with parameters `[p_{k+2}, p_{k+1}, p_k, …, p_1]`:
/// `f0 f1^{m^k p_{k+2} - 1} w = w` where
/// `w = f1^{m^{k+1} p_{k+1}} f0 f1^{m^k p_k - 1} f0 … f1^{m p_1 - 1} f0`.
pub fn relation_general(m: usize, params: &[BigUint]) -> Result<(GeneratorWord, GeneratorWord)> {
    check_m(m)?;
    if params.len() < 2 {
        return Err(Error::Domain("need at least p_{k+2} and p_{k+1}".into()));
    }
    let k = params.len() - 2;
    let base = BigUint::from(m);
    let top = &params[0];
    if top < &BigUint::one() || top >= &base {
        return Err(Error::Domain(format!("p_{} must lie in 1..={}", k + 2, m - 1)));
    }
    if let Some(pos) = params[2..].iter().position(|v| v < &BigUint::one()) {
        return Err(Error::Domain(format!("p_{} must be positive", k - pos)));
    }
    let mut rhs = GeneratorWord::f1_pow(m, base.pow(k as u32 + 1) * &params[1]);
    rhs.push(Gen::F0, BigUint::one());
    for (offset, p) in params[2..].iter().enumerate() {
        let i = k - offset;
        rhs.push(Gen::F1, base.pow(i as u32) * p - 1u32);
        rhs.push(Gen::F0, BigUint::one());
    }
    let mut lhs = GeneratorWord::f0(m);
    lhs.push(Gen::F1, base.pow(k as u32) * top - 1u32);
    Ok((lhs.concat(&rhs), rhs))
}
