use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::growth::Transformation;

use super::generators;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    F0,
    F1,
}

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::F0 => "f0",
            Gen::F1 => "f1",
        }
    }
}

/// A word over `{f0, f1}` stored as runs with unbounded exponents.
///
/// Words are read as products, so the rightmost run acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    m: usize,
    runs: Vec<(Gen, BigUint)>,
}

impl GeneratorWord {
    /// Zero exponents are dropped and equal neighbours merged.
    pub fn new(m: usize, runs: impl IntoIterator<Item = (Gen, BigUint)>) -> Self {
        let mut word = Self::empty(m);
        for (g, e) in runs {
            word.push(g, e);
        }
        word
    }

    pub fn empty(m: usize) -> Self {
        Self { m, runs: Vec::new() }
    }

    pub fn from_gens(m: usize, gens: &[Gen]) -> Self {
        Self::new(m, gens.iter().map(|&g| (g, BigUint::one())))
    }

    pub fn f0(m: usize) -> Self {
        Self::new(m, [(Gen::F0, BigUint::one())])
    }

    pub fn f1_pow(m: usize, e: impl Into<BigUint>) -> Self {
        Self::new(m, [(Gen::F1, e.into())])
    }

    /// Appends `g^e` on the right.
    pub fn push(&mut self, g: Gen, e: BigUint) {
        if e.is_zero() {
            return;
        }
        match self.runs.last_mut() {
            Some((last, exp)) if *last == g => *exp += e,
            _ => self.runs.push((g, e)),
        }
    }

    /// The product `self · other`.
    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut out = self.clone();
        for (g, e) in &other.runs {
            out.push(*g, e.clone());
        }
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn runs(&self) -> &[(Gen, BigUint)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn written_length(&self) -> BigUint {
        self.runs.iter().map(|(_, e)| e).sum()
    }

    /// Letters left to right; only for words of machine-sized length.
    pub fn letters(&self) -> Result<Vec<Gen>> {
        let mut out = Vec::new();
        for (g, e) in &self.runs {
            let e = e
                .to_usize()
                .filter(|&e| e <= 1 << 24)
                .ok_or_else(|| Error::Overflow(format!("run {}^{e} is too long to expand", g.name())))?;
            out.extend(std::iter::repeat_n(*g, e));
        }
        Ok(out)
    }

    /// The transformation the word defines in `I_m`.
    pub fn to_transformation(&self) -> Result<Transformation> {
        let (f0, f1) = generators(self.m)?;
        let mut acc = Transformation::identity(self.m);
        for (g, e) in &self.runs {
            let factor = match g {
                // f0 is idempotent
                Gen::F0 => f0.clone(),
                Gen::F1 => f1.pow(e)?,
            };
            acc = acc.compose(&factor)?;
        }
        Ok(acc)
    }

    pub fn parse(m: usize, text: &str) -> Result<Self> {
        let mut word = Self::empty(m);
        for term in text.split_whitespace() {
            let (name, exp) = match term.split_once('^') {
                Some((name, exp)) => {
                    if exp.is_empty() || !exp.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(Error::Parse(format!("bad exponent in {term:?}")));
                    }
                    (name, exp.parse::<BigUint>().map_err(|e| Error::Parse(e.to_string()))?)
                }
                None => (term, BigUint::one()),
            };
            let g = match name {
                "f0" => Gen::F0,
                "f1" => Gen::F1,
                _ => return Err(Error::Parse(format!("unknown generator in {term:?}"))),
            };
            word.push(g, exp);
        }
        Ok(word)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(g.name())?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    /// Parses with `m = 2`; use [`GeneratorWord::parse`] for other alphabets.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(2, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_are_normalized() {
        let w = GeneratorWord::from_gens(2, &[Gen::F0, Gen::F0, Gen::F1]);
        assert_eq!(w.runs().len(), 2);
        assert_eq!(w.to_string(), "f0^2 f1");
        let z = GeneratorWord::new(2, [(Gen::F1, BigUint::zero()), (Gen::F0, BigUint::one())]);
        assert_eq!(z.to_string(), "f0");
    }

    #[test]
    fn parse_and_print() {
        let w = GeneratorWord::parse(3, "f0 f1^8 f0 f1^2 f0").unwrap();
        assert_eq!(w.to_string(), "f0 f1^8 f0 f1^2 f0");
        assert_eq!(w.written_length(), BigUint::from(13u32));
        assert!(GeneratorWord::parse(2, "").unwrap().is_empty());
        assert_eq!(GeneratorWord::parse(2, "f1 f1^0 f1").unwrap().to_string(), "f1^2");
        let huge = GeneratorWord::parse(2, "f1^123456789012345678901234567890").unwrap();
        assert_eq!(huge.to_string(), "f1^123456789012345678901234567890");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["f2", "f0^", "f0^-1", "f1^x", "e", "f0f1"] {
            assert!(GeneratorWord::parse(2, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn concat_merges_boundary() {
        let a = GeneratorWord::parse(2, "f0 f1").unwrap();
        let b = GeneratorWord::parse(2, "f1^2 f0").unwrap();
        assert_eq!(a.concat(&b).to_string(), "f0 f1^3 f0");
    }

    #[test]
    fn transformation_acts_right_to_left() {
        // f0 f1 on 1: f1 gives 2, then f0 gives 2 & 3 = 2
        let w = GeneratorWord::parse(2, "f0 f1").unwrap();
        let t = w.to_transformation().unwrap();
        assert_eq!(t.apply(&[1, 0]).unwrap(), vec![0, 1]);
        // f1 f0 on 1: f0 gives 1 & 2 = 0, then f1 gives 1
        let u = GeneratorWord::parse(2, "f1 f0").unwrap();
        assert_eq!(u.to_transformation().unwrap().apply(&[1, 0]).unwrap(), vec![1, 0]);
        let big = GeneratorWord::parse(2, "f1^1024").unwrap().to_transformation().unwrap();
        let mut digits = vec![0; 12];
        digits[10] = 1;
        assert_eq!(big.apply(&[0; 12]).unwrap(), digits);
    }
}
