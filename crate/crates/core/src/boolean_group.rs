//! Arithmetic on the group of setups `S = Z_2^n`.
//!
//! A setup assigns one setting bit to each particle. Setups are packed into
//! a `u32` with particle 1 in the most significant of the low `n` bits, so
//! the literal `"011"` reads left to right as particles 1, 2, 3 and equals
//! the integer 3. Sign vectors are stored in that same lexicographic order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg};
use core::str::FromStr;

use crate::{check_particles, check_same_n, Error, Result};

/// Bit mask of particle `k` (0-based) in an `n`-particle setup.
#[inline]
pub(crate) fn particle_bit(n: usize, k: usize) -> u32 {
    1 << (n - 1 - k)
}

#[inline]
pub(crate) fn parity(x: u32) -> u32 {
    x.count_ones() & 1
}

/// `(-1)^<p,s>` for every `s` in `Z_2^n`, indexed by `s`.
pub(crate) fn characters(p: u32, n: usize) -> Vec<i8> {
    let mut chi = alloc::vec![0i8; 1 << n];
    chi[0] = 1;
    for k in 0..n {
        let bit = 1usize << k;
        let sign = if p as usize & bit != 0 { -1 } else { 1 };
        let (low, high) = chi.split_at_mut(bit);
        for (h, &l) in high[..bit].iter_mut().zip(low.iter()) {
            *h = sign * l;
        }
    }
    chi
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u32 {
    ((1u64 << n) - 1) as u32
}

/// An element of `Z_2^n`: one setting bit per particle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetupVector {
    bits: u32,
    n: u8,
}

impl SetupVector {
    pub fn new(bits: u32, n: usize) -> Result<Self> {
        check_particles(n)?;
        if bits & !full_mask(n) != 0 {
            return Err(Error::SetupOutOfRange { bits, n });
        }
        Ok(SetupVector { bits, n: n as u8 })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(0, n)
    }

    pub(crate) fn new_unchecked(bits: u32, n: usize) -> Self {
        debug_assert!(bits & !full_mask(n) == 0);
        SetupVector { bits, n: n as u8 }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Position of this setup in lexicographic order.
    pub fn index(self) -> usize {
        self.bits as usize
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    /// Setting bit of particle `k`, counting from 0.
    pub fn get(self, k: usize) -> bool {
        assert!(k < self.n(), "particle {k} out of range for n = {}", self.n);
        self.bits & particle_bit(self.n(), k) != 0
    }

    /// Hamming weight, i.e. the cardinality of the subset this vector encodes.
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn is_even(self) -> bool {
        self.weight().is_multiple_of(2)
    }

    /// Coordinate-wise sum mod 2.
    pub fn try_add(self, other: SetupVector) -> Result<SetupVector> {
        check_same_n(self.n(), other.n())?;
        Ok(SetupVector::new_unchecked(self.bits ^ other.bits, self.n()))
    }
}

impl Add for SetupVector {
    type Output = SetupVector;

    /// Panics if the operands have different particle counts; use
    /// [`SetupVector::try_add`] for a fallible version.
    fn add(self, other: SetupVector) -> SetupVector {
        self.try_add(other).expect("setup vectors with different n")
    }
}

impl fmt::Display for SetupVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.n() {
            f.write_str(if self.get(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for SetupVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut bits = 0u32;
        let mut n = 0usize;
        for c in s.chars() {
            let bit = match c {
                '0' => 0,
                '1' => 1,
                _ => {
                    return Err(Error::SetupParse(format!(
                        "unexpected character {c:?} in {s:?}"
                    )))
                }
            };
            n += 1;
            if n > crate::MAX_PARTICLES {
                return Err(Error::SetupParse(format!("{s:?} is longer than 16 bits")));
            }
            bits = (bits << 1) | bit;
        }
        SetupVector::new(bits, n)
    }
}

/// Mod-2 inner product `<r, s>`.
pub fn pairing(r: SetupVector, s: SetupVector) -> Result<u32> {
    check_same_n(r.n(), s.n())?;
    Ok(parity(r.bits & s.bits))
}

/// The even-weight subgroup `P_n`, including the zero vector, in ascending order.
pub fn even_subgroup(n: usize) -> Result<Vec<SetupVector>> {
    check_particles(n)?;
    Ok((0..=full_mask(n))
        .filter(|&b| parity(b) == 0)
        .map(|b| SetupVector::new_unchecked(b, n))
        .collect())
}

/// Non-empty subsets of even cardinality: `P_n` without its identity.
pub fn even_subsets(n: usize) -> Result<Vec<SetupVector>> {
    let mut all = even_subgroup(n)?;
    all.remove(0);
    Ok(all)
}

/// A function `f: S -> {-1, 1}`, listed in lexicographic setup order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    n: usize,
    values: Vec<i8>,
}

fn log2_len(len: usize) -> Option<usize> {
    if len.is_power_of_two() {
        Some(len.trailing_zeros() as usize)
    } else {
        None
    }
}

impl SignVector {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        let n = log2_len(values.len()).ok_or_else(|| {
            Error::SignVectorParse(format!("length {} is not a power of two", values.len()))
        })?;
        check_particles(n)?;
        if let Some(v) = values.iter().find(|&&v| v != 1 && v != -1) {
            return Err(Error::SignVectorParse(format!("entry {v} is not +1 or -1")));
        }
        Ok(SignVector { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(SetupVector) -> i8) -> Result<Self> {
        check_particles(n)?;
        let values = (0..1u32 << n)
            .map(|b| f(SetupVector::new_unchecked(b, n)))
            .collect();
        SignVector::new(values)
    }

    pub fn constant(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| 1)
    }

    /// Sign vector whose entry `s` is `-1` exactly when bit `s` of `mask` is set.
    /// Only meaningful for `2^n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        check_particles(n)?;
        if n > 6 {
            return Err(Error::ParticleCount { n, min: 2, max: 6 });
        }
        Ok(SignVector {
            n,
            values: (0..1usize << n)
                .map(|s| if mask >> s & 1 == 1 { -1 } else { 1 })
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    #[inline]
    pub fn get(&self, index: usize) -> i8 {
        self.values[index]
    }

    pub fn at(&self, s: SetupVector) -> i8 {
        assert_eq!(s.n(), self.n, "setup belongs to a different n");
        self.values[s.index()]
    }

    /// Tuple notation, e.g. `(1,1,1,-1)`.
    pub fn to_tuple_string(&self) -> String {
        let body: Vec<String> = self.values.iter().map(|v| format!("{v}")).collect();
        format!("({})", body.join(","))
    }
}

impl Neg for &SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        SignVector {
            n: self.n,
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl Neg for SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        -&self
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            f.write_str(if v > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    /// Accepts either a run of sign characters (`+`, `-` or `−`) or a list of
    /// `1` / `-1` tokens. Whitespace, commas and one pair of enclosing
    /// parentheses or brackets are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix(['(', '['])
            .and_then(|t| t.strip_suffix([')', ']']))
            .unwrap_or(trimmed);
        let mut values = Vec::new();
        if inner.contains('1') {
            for token in inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let v = match token {
                    "1" | "+1" => 1,
                    "-1" | "\u{2212}1" => -1,
                    _ => return Err(Error::SignVectorParse(format!("bad token {token:?}"))),
                };
                values.push(v);
            }
        } else {
            for c in inner.chars() {
                match c {
                    '+' => values.push(1),
                    '-' | '\u{2212}' => values.push(-1),
                    c if c.is_whitespace() || c == ',' => {}
                    _ => {
                        return Err(Error::SignVectorParse(format!(
                            "unexpected character {c:?}"
                        )))
                    }
                }
            }
        }
        if values.is_empty() {
            return Err(Error::SignVectorParse(String::from("empty sign vector")));
        }
        SignVector::new(values)
    }
}

/// The Fourier transform `fhat` of a sign vector, held exactly.
///
/// Entry `s` is `numerator(s) / 2^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FourierVector {
    n: usize,
    numerators: Vec<i32>,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl FourierVector {
    /// Builds the vector with entries `numerators[s] / denominator`.
    /// The denominator must divide `2^n`.
    pub fn from_fractions(numerators: &[i32], denominator: i32) -> Result<Self> {
        let n = log2_len(numerators.len()).ok_or(Error::Dimension {
            expected: numerators.len().next_power_of_two(),
            found: numerators.len(),
        })?;
        check_particles(n)?;
        let full = 1i32 << n;
        if denominator <= 0 || full % denominator != 0 {
            return Err(Error::Dimension {
                expected: full as usize,
                found: denominator.max(0) as usize,
            });
        }
        let scale = full / denominator;
        Ok(FourierVector {
            n,
            numerators: numerators.iter().map(|k| k * scale).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    /// Common denominator `2^n`.
    pub fn denominator(&self) -> i32 {
        1 << self.n
    }

    pub fn numerators(&self) -> &[i32] {
        &self.numerators
    }

    pub fn numerator(&self, index: usize) -> i32 {
        self.numerators[index]
    }

    pub fn value(&self, index: usize) -> f64 {
        self.numerators[index] as f64 / self.denominator() as f64
    }

    /// Entry `index` in lowest terms, as `(numerator, denominator)`.
    pub fn reduced(&self, index: usize) -> (i32, i32) {
        let k = self.numerators[index] as i64;
        let d = self.denominator() as i64;
        if k == 0 {
            return (0, 1);
        }
        let g = gcd(k, d);
        ((k / g) as i32, (d / g) as i32)
    }

    /// `sum_s fhat(s)^2 * 4^n`; Parseval makes this exactly `4^n`.
    pub fn parseval_numerator(&self) -> i64 {
        self.numerators
            .iter()
            .map(|&k| (k as i64) * (k as i64))
            .sum()
    }

    /// Number of setups with `fhat(s) = 0`.
    pub fn zero_count(&self) -> usize {
        self.numerators.iter().filter(|&&k| k == 0).count()
    }

    /// Inverts the transform: `f(r) = sum_s (-1)^<r,s> fhat(s)`.
    /// Fails when the result is not a sign vector.
    pub fn inverse(&self) -> Result<SignVector> {
        let mut data: Vec<i64> = self.numerators.iter().map(|&k| k as i64).collect();
        walsh_hadamard(&mut data);
        let d = self.denominator() as i64;
        let mut values = Vec::with_capacity(data.len());
        for v in data {
            if v % d != 0 {
                return Err(Error::SignVectorParse(format!(
                    "inverse transform entry {v}/{d} is not an integer"
                )));
            }
            values.push((v / d) as i8);
        }
        SignVector::new(values)
    }

    /// All entries over their least common denominator, e.g. `(0,1,1,0,1,0,0,-1)/2`.
    pub fn to_scaled_string(&self) -> String {
        let d = self.denominator() as i64;
        let g = self.numerators.iter().fold(d, |acc, &k| gcd(acc, k as i64));
        let body: Vec<String> = self
            .numerators
            .iter()
            .map(|&k| format!("{}", k as i64 / g))
            .collect();
        let den = d / g;
        if den == 1 {
            format!("({})", body.join(","))
        } else {
            format!("({})/{}", body.join(","), den)
        }
    }
}

impl fmt::Display for FourierVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for s in 0..self.len() {
            if s > 0 {
                f.write_str(", ")?;
            }
            match self.reduced(s) {
                (k, 1) => write!(f, "{k}")?,
                (k, d) => write!(f, "{k}/{d}")?,
            }
        }
        f.write_str(")")
    }
}

/// Unnormalized in-place Walsh–Hadamard butterfly over `Z_2^n`.
pub(crate) fn walsh_hadamard<T>(data: &mut [T])
where
    T: Copy + core::ops::Add<Output = T> + core::ops::Sub<Output = T>,
{
    let len = data.len();
    debug_assert!(len.is_power_of_two());
    let mut half = 1;
    while half < len {
        for block in (0..len).step_by(2 * half) {
            for i in block..block + half {
                let (a, b) = (data[i], data[i + half]);
                data[i] = a + b;
                data[i + half] = a - b;
            }
        }
        half *= 2;
    }
}

/// `fhat(s) = 2^-n sum_r (-1)^<r,s> f(r)`, computed exactly.
pub fn fourier(f: &SignVector) -> FourierVector {
    let mut data: Vec<i32> = f.values().iter().map(|&v| v as i32).collect();
    walsh_hadamard(&mut data);
    FourierVector {
        n: f.n(),
        numerators: data,
    }
}
