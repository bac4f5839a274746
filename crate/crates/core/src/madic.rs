//! Integers as words: least significant base-`m` digit first.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::{Gen, GeneratorWord};
use crate::machine::Symbol;

/// Fixed-width codec for integers below `m^digits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MadicCodec {
    pub m: usize,
    pub digits: usize,
}

impl MadicCodec {
    pub fn new(m: usize, digits: usize) -> Result<Self> {
        if m < 2 || digits == 0 {
            return Err(Error::Domain(format!("codec needs m >= 2 and digits >= 1, got m={m} digits={digits}")));
        }
        Ok(Self { m, digits })
    }

    /// The narrowest codec for which `value` and everything a word adds to it
    /// stays clear of the last digit.
    pub fn fitting(m: usize, value: &BigUint) -> Result<Self> {
        let mut digits = 1;
        let mut cap = BigUint::from(m);
        while &cap <= value {
            cap *= m;
            digits += 1;
        }
        Self::new(m, digits + 1)
    }

    pub fn encode(&self, value: &BigUint) -> Result<Vec<Symbol>> {
        let mut rest = value.clone();
        let mut word = Vec::with_capacity(self.digits);
        for _ in 0..self.digits {
            word.push((&rest % self.m).to_usize().expect("digit below m"));
            rest /= self.m;
        }
        if !rest.is_zero() {
            return Err(Error::Overflow(format!(
                "{value} needs more than {} base-{} digits",
                self.digits, self.m
            )));
        }
        Ok(word)
    }

    pub fn decode(&self, word: &[Symbol]) -> Result<BigUint> {
        let mut value = BigUint::zero();
        for &d in word.iter().rev() {
            if d >= self.m {
                return Err(Error::SymbolOutOfRange { symbol: d, alphabet: self.m });
            }
            value = value * self.m + d;
        }
        Ok(value)
    }
}

/// Digitwise: keep the digit of `p` where `p` and `q` agree, else 0.
pub fn madic_and(p: &BigUint, q: &BigUint, m: usize) -> BigUint {
    let (mut p, mut q) = (p.clone(), q.clone());
    let mut result = BigUint::zero();
    let mut scale = BigUint::from(1u32);
    while !p.is_zero() && !q.is_zero() {
        let (dp, dq) = (&p % m, &q % m);
        if dp == dq {
            result += &scale * dp;
        }
        p /= m;
        q /= m;
        scale *= m;
    }
    result
}

/// The action of `w` on integers: `f1^e` adds `e`, `f0` maps `q` to
/// `q &_m (q + 1)`. Runs act right to left.
pub fn act_integer(w: &GeneratorWord, p: &BigUint) -> BigUint {
    let m = w.m();
    let mut q = p.clone();
    for (g, e) in w.runs().iter().rev() {
        match g {
            Gen::F1 => q += e,
            // f0 is idempotent
            Gen::F0 => q = madic_and(&q, &(&q + 1u32), m),
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_i;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn encode_examples() {
        assert_eq!(MadicCodec::new(2, 4).unwrap().encode(&big(11)).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(MadicCodec::new(3, 3).unwrap().encode(&big(5)).unwrap(), vec![2, 1, 0]);
        assert_eq!(MadicCodec::new(5, 3).unwrap().encode(&big(0)).unwrap(), vec![0, 0, 0]);
        assert!(MadicCodec::new(2, 3).unwrap().encode(&big(8)).is_err());
        assert!(MadicCodec::new(2, 3).unwrap().decode(&[0, 2]).is_err());
        assert!(MadicCodec::new(1, 3).is_err());
    }

    #[test]
    fn and_examples() {
        assert_eq!(madic_and(&big(11), &big(12), 2), big(8));
        assert_eq!(madic_and(&big(5), &big(7), 3), big(0));
        assert_eq!(madic_and(&big(77), &big(77), 4), big(77));
        for p in 0..64u64 {
            for q in 0..64u64 {
                assert_eq!(madic_and(&big(p), &big(q), 2), big(p & q));
            }
        }
    }

    #[test]
    fn act_examples() {
        let w = |s: &str| GeneratorWord::parse(2, s).unwrap();
        assert_eq!(act_integer(&w("f0"), &big(11)), big(8));
        assert_eq!(act_integer(&w("f1^3"), &big(5)), big(8));
        for p in 0..=100u64 {
            assert_eq!(
                act_integer(&w("f0 f1^2 f0"), &big(p)),
                act_integer(&w("f1^2 f0"), &big(p))
            );
        }
    }

    #[test]
    fn generators_act_as_integers() {
        for m in 2..6usize {
            let a = build_i(m).unwrap();
            let codec = MadicCodec::new(m, 6).unwrap();
            for p in 0..(m.pow(5) as u64) {
                let word = codec.encode(&big(p)).unwrap();
                let f0 = codec.decode(&a.apply(1, &word).unwrap()).unwrap();
                let f1 = codec.decode(&a.apply(2, &word).unwrap()).unwrap();
                assert_eq!(f0, madic_and(&big(p), &big(p + 1), m));
                assert_eq!(f1, big(p + 1));
            }
        }
    }

    proptest! {
        #[test]
        fn codec_round_trip(m in 2usize..6, p in any::<u64>()) {
            let value = big(p);
            let codec = MadicCodec::fitting(m, &value).unwrap();
            prop_assert_eq!(codec.decode(&codec.encode(&value).unwrap()).unwrap(), value);
        }

        #[test]
        fn and_is_dominated(m in 2usize..6, p in any::<u32>(), q in any::<u32>()) {
            let r = madic_and(&big(p as u64), &big(q as u64), m);
            prop_assert_eq!(madic_and(&big(p as u64), &big(p as u64), m), big(p as u64));
            let (mut r, mut p) = (r, big(p as u64));
            while !p.is_zero() {
                prop_assert!(&r % m <= &p % m);
                r /= m;
                p /= m;
            }
            prop_assert!(r.is_zero());
        }
    }
}
