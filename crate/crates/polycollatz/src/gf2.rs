//! Polynomials over F_2 stored as bit masks: bit `i` is the coefficient of `x^i`.
//!
//! The representation is little-endian in `x`, so dividing by `x` is a right
//! shift and multiplying by `x + 1` is a shift-xor, the inner loop of every
//! stopping-time engine in this crate. Values are canonical (no trailing zero
//! limbs), immutable after construction, and freely shared across threads.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Shl, Shr};
use core::str::FromStr;

use crate::error::{Error, ParseError};

const BITS: u64 = u64::BITS as u64;

/// Largest exponent the textual parsers accept, to keep hostile input from
/// allocating unbounded memory. Computed polynomials are not limited.
pub const MAX_PARSE_EXPONENT: u64 = 1 << 26;

/// A polynomial in F_2[x].
///
/// `degree()` returns `None` for the zero polynomial, standing in for the
/// deg(0) = -infinity convention; there is deliberately no integer sentinel.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    limbs: Vec<u64>,
}

fn normalized_len(limbs: &[u64]) -> usize {
    limbs.len() - limbs.iter().rev().take_while(|&&w| w == 0).count()
}

impl Gf2Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Gf2Poly {
            limbs: alloc::vec![1],
        }
    }

    /// The monomial x.
    pub fn x() -> Self {
        Gf2Poly {
            limbs: alloc::vec![2],
        }
    }

    /// The monomial x^n.
    pub fn monomial(n: u64) -> Self {
        let mut limbs = alloc::vec![0; (n / BITS) as usize + 1];
        *limbs.last_mut().unwrap() = 1 << (n % BITS);
        Gf2Poly { limbs }
    }

    /// Builds a polynomial from little-endian limbs (trailing zeros allowed).
    pub fn from_limbs(limbs: &[u64]) -> Self {
        let len = normalized_len(limbs);
        Gf2Poly {
            limbs: limbs[..len].to_vec(),
        }
    }

    fn from_limb_vec(mut limbs: Vec<u64>) -> Self {
        limbs.truncate(normalized_len(&limbs));
        Gf2Poly { limbs }
    }

    /// Builds a polynomial of degree <= 63 from its coefficient mask.
    pub fn from_mask(mask: u64) -> Self {
        if mask == 0 {
            Self::zero()
        } else {
            Gf2Poly {
                limbs: alloc::vec![mask],
            }
        }
    }

    /// The coefficient mask, if the polynomial fits in one limb.
    pub fn to_mask(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    /// Little-endian limbs of the coefficient mask (empty for zero).
    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    /// f is odd iff f(0) = 1, i.e. the constant coefficient is set.
    pub fn is_odd(&self) -> bool {
        self.limbs.first().is_some_and(|w| w & 1 == 1)
    }

    /// f is even iff x divides f. The zero polynomial is even.
    pub fn is_even(&self) -> bool {
        !self.is_odd()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        let last = self.limbs.last()?;
        Some(self.limbs.len() as u64 * BITS - 1 - last.leading_zeros() as u64)
    }

    /// The coefficient of x^i.
    pub fn coeff(&self, i: u64) -> bool {
        match self.limbs.get((i / BITS) as usize) {
            Some(w) => (w >> (i % BITS)) & 1 == 1,
            None => false,
        }
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> u64 {
        self.limbs.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Multiplication by x + 1, computed as `(f << 1) ^ f`.
    pub fn mul_x_plus_1(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let n = self.limbs.len();
        let mut out = Vec::with_capacity(n + 1);
        let mut carry = 0u64;
        for &w in &self.limbs {
            out.push(w ^ (w << 1) ^ carry);
            carry = w >> (BITS - 1);
        }
        if carry != 0 {
            out.push(carry);
        }
        Self::from_limb_vec(out)
    }

    /// Exact division by x. Errors on odd or zero input.
    pub fn div_x(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.is_odd() {
            return Err(Error::OddInput);
        }
        Ok(self >> 1)
    }

    /// Splits off the largest power of x dividing f: returns `(g, r)` with
    /// `f = x^r * g` and g odd. Returns `(0, 0)` for the zero polynomial.
    pub fn strip_x(&self) -> (Self, u64) {
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        let mut r = 0u64;
        for &w in &self.limbs {
            if w == 0 {
                r += BITS;
            } else {
                r += w.trailing_zeros() as u64;
                break;
            }
        }
        (self >> r, r)
    }

    /// Coefficient reversal: bit i of the result is bit (deg f - i) of f.
    /// Maps 0 to 0; any nonzero result is odd.
    pub fn reverse(&self) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let rev: Vec<u64> = self.limbs.iter().rev().map(|w| w.reverse_bits()).collect();
        let full = Gf2Poly { limbs: rev };
        let shift = self.limbs.len() as u64 * BITS - 1 - deg;
        &full >> shift
    }

    /// Discards every term of degree above n.
    pub fn truncate(&self, n: u64) -> Self {
        match self.degree() {
            Some(d) if d > n => {
                let keep_limbs = (n / BITS) as usize + 1;
                let mut limbs = self.limbs[..keep_limbs].to_vec();
                let top_bits = n % BITS;
                if top_bits != BITS - 1 {
                    limbs[keep_limbs - 1] &= (1u64 << (top_bits + 1)) - 1;
                }
                Self::from_limb_vec(limbs)
            }
            _ => self.clone(),
        }
    }

    /// `(x+1)^k`, computed as the product of `x^(2^t) + 1` over the set bits
    /// t of k. Each factor is a single shift-xor of the accumulator.
    pub fn pow_x_plus_1(k: u64) -> Self {
        let mut acc = Self::one();
        for t in 0..BITS {
            if (k >> t) & 1 == 1 {
                acc = &(&acc << (1u64 << t)) + &acc;
            }
        }
        acc
    }

    /// The `how_many` largest exponents appearing in `(x+1)^n`, read off the
    /// base-2 expansion of n without expanding the polynomial.
    ///
    /// The exponents of `(x+1)^n` over F_2 are exactly the subset sums of the
    /// powers of two in n, so the j-th largest is n minus the j-th smallest
    /// subset sum, obtained by depositing the bits of j into the set-bit
    /// positions of n.
    pub fn leading_terms_of_pow(n: u64, how_many: u64) -> Result<Vec<u64>, Error> {
        let positions: Vec<u64> = (0..BITS).filter(|t| (n >> t) & 1 == 1).collect();
        let available = 1u128 << positions.len();
        if u128::from(how_many) > available {
            return Err(Error::InsufficientTerms {
                available,
                requested: how_many,
            });
        }
        let mut out = Vec::with_capacity(how_many as usize);
        for j in 0..how_many {
            let mut subset_sum = 0u64;
            for (bit, &pos) in positions.iter().enumerate() {
                if (j >> bit) & 1 == 1 {
                    subset_sum += 1 << pos;
                }
            }
            out.push(n - subset_sum);
        }
        Ok(out)
    }

    /// Parses the symbolic grammar, e.g. `x^5+x^2+1`. The zero polynomial is
    /// written `0`. Whitespace between tokens is ignored.
    pub fn parse_symbolic(s: &str) -> Result<Self, ParseError> {
        SymbolicParser::new(s).parse()
    }

    /// Parses the hex-bits form: `0x` followed by big-endian hex digits of
    /// the coefficient mask.
    pub fn parse_hex(s: &str) -> Result<Self, ParseError> {
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if !s[i..].starts_with("0x") && !s[i..].starts_with("0X") {
            return Err(ParseError::Syntax {
                offset: i,
                message: "expected 0x prefix",
            });
        }
        i += 2;
        let digits_start = i;
        let mut digits_end = i;
        while digits_end < bytes.len() && bytes[digits_end].is_ascii_hexdigit() {
            digits_end += 1;
        }
        if digits_end == digits_start {
            return Err(ParseError::Syntax {
                offset: digits_start,
                message: "expected hex digits",
            });
        }
        let mut j = digits_end;
        while j < bytes.len() {
            if !bytes[j].is_ascii_whitespace() {
                return Err(ParseError::Syntax {
                    offset: j,
                    message: "unexpected character after hex digits",
                });
            }
            j += 1;
        }
        let digits = &bytes[digits_start..digits_end];
        let mut limbs = alloc::vec![0u64; (digits.len() * 4).div_ceil(BITS as usize)];
        for (k, &c) in digits.iter().rev().enumerate() {
            let nibble = (c as char).to_digit(16).unwrap() as u64;
            limbs[k / 16] |= nibble << ((k % 16) * 4);
        }
        Ok(Self::from_limb_vec(limbs))
    }

    /// Renders the hex-bits form (`0x0` for zero).
    pub fn to_hex(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from("0x");
        match self.limbs.split_last() {
            None => s.push('0'),
            Some((last, rest)) => {
                write!(s, "{last:x}").unwrap();
                for w in rest.iter().rev() {
                    write!(s, "{w:016x}").unwrap();
                }
            }
        }
        s
    }

    /// Renders the symbolic form, highest-degree term first.
    pub fn to_symbolic(&self) -> String {
        use core::fmt::Write;
        let Some(deg) = self.degree() else {
            return String::from("0");
        };
        let mut s = String::new();
        for i in (0..=deg).rev() {
            if !self.coeff(i) {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            match i {
                0 => s.push('1'),
                1 => s.push('x'),
                _ => write!(s, "x^{i}").unwrap(),
            }
        }
        s
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_symbolic())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({})", self.to_hex())
    }
}

impl FromStr for Gf2Poly {
    type Err = ParseError;

    /// Auto-detects the hex-bits form by its `0x` prefix, otherwise parses
    /// the symbolic grammar.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim_start();
        if t.starts_with("0x") || t.starts_with("0X") {
            Self::parse_hex(s)
        } else {
            Self::parse_symbolic(s)
        }
    }
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.limbs.len() >= rhs.limbs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut limbs = long.limbs.clone();
        for (dst, src) in limbs.iter_mut().zip(&short.limbs) {
            *dst ^= src;
        }
        Gf2Poly::from_limb_vec(limbs)
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        &self + &rhs
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    /// Schoolbook shift-xor product; exact in F_2[x].
    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf2Poly::zero();
        }
        let (a, b) = if self.term_count() <= rhs.term_count() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = alloc::vec![0u64; a.limbs.len() + b.limbs.len()];
        for (i, &w) in a.limbs.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let bit = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                xor_shifted(&mut acc, &b.limbs, i as u64 * BITS + bit);
            }
        }
        Gf2Poly::from_limb_vec(acc)
    }
}

impl Mul for Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: Gf2Poly) -> Gf2Poly {
        &self * &rhs
    }
}

impl Shl<u64> for &Gf2Poly {
    type Output = Gf2Poly;

    /// Multiplication by x^n.
    fn shl(self, n: u64) -> Gf2Poly {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let limb_shift = (n / BITS) as usize;
        let bit_shift = n % BITS;
        let mut limbs = alloc::vec![0u64; self.limbs.len() + limb_shift + 1];
        for (i, &w) in self.limbs.iter().enumerate() {
            limbs[i + limb_shift] |= w << bit_shift;
            if bit_shift != 0 {
                limbs[i + limb_shift + 1] |= w >> (BITS - bit_shift);
            }
        }
        Gf2Poly::from_limb_vec(limbs)
    }
}

impl Shr<u64> for &Gf2Poly {
    type Output = Gf2Poly;

    /// Floor division by x^n (low coefficients are discarded).
    fn shr(self, n: u64) -> Gf2Poly {
        let limb_shift = (n / BITS) as usize;
        if limb_shift >= self.limbs.len() {
            return Gf2Poly::zero();
        }
        let bit_shift = n % BITS;
        let src = &self.limbs[limb_shift..];
        let mut limbs = Vec::with_capacity(src.len());
        for i in 0..src.len() {
            let mut w = src[i] >> bit_shift;
            if bit_shift != 0 && i + 1 < src.len() {
                w |= src[i + 1] << (BITS - bit_shift);
            }
            limbs.push(w);
        }
        Gf2Poly::from_limb_vec(limbs)
    }
}

fn xor_shifted(dst: &mut [u64], src: &[u64], shift: u64) {
    let limb_shift = (shift / BITS) as usize;
    let bit_shift = shift % BITS;
    for (i, &w) in src.iter().enumerate() {
        dst[i + limb_shift] ^= w << bit_shift;
        if bit_shift != 0 {
            dst[i + limb_shift + 1] ^= w >> (BITS - bit_shift);
        }
    }
}

struct SymbolicParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> SymbolicParser<'a> {
    fn new(s: &'a str) -> Self {
        SymbolicParser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Gf2Poly, ParseError> {
        self.skip_ws();
        // The grammar has no zero term; a lone "0" denotes the zero polynomial.
        if self.peek() == Some(b'0') {
            let zero_at = self.pos;
            self.pos += 1;
            self.skip_ws();
            if self.pos == self.bytes.len() {
                return Ok(Gf2Poly::zero());
            }
            return Err(ParseError::Syntax {
                offset: zero_at,
                message: "'0' must stand alone",
            });
        }
        let mut poly = Gf2Poly::zero();
        loop {
            let exponent = self.parse_term()?;
            if poly.coeff(exponent) {
                return Err(ParseError::DuplicateTerm { exponent });
            }
            poly = &poly + &Gf2Poly::monomial(exponent);
            self.skip_ws();
            match self.peek() {
                None => return Ok(poly),
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(_) => {
                    return Err(ParseError::Syntax {
                        offset: self.pos,
                        message: "expected '+' or end of input",
                    })
                }
            }
        }
    }

    fn parse_term(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(0)
            }
            Some(b'x') => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    self.parse_uint()
                } else {
                    Ok(1)
                }
            }
            _ => Err(ParseError::Syntax {
                offset: self.pos,
                message: "expected a term ('1', 'x' or 'x^N')",
            }),
        }
    }

    fn parse_uint(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .filter(|&v| v <= MAX_PARSE_EXPONENT)
                .ok_or(ParseError::Syntax {
                    offset: start,
                    message: "exponent too large",
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Syntax {
                offset: start,
                message: "expected an exponent",
            });
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    /// Schoolbook convolution over coefficient vectors, the correctness
    /// oracle for `mul`.
    fn schoolbook_mul(a: &Gf2Poly, b: &Gf2Poly) -> Gf2Poly {
        let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
            return Gf2Poly::zero();
        };
        let mut out = Gf2Poly::zero();
        for i in 0..=da {
            for j in 0..=db {
                if a.coeff(i) && b.coeff(j) {
                    out = &out + &Gf2Poly::monomial(i + j);
                }
            }
        }
        out
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("x+1") + &p("x+1"), Gf2Poly::zero());
        assert_eq!(&p("x^2+1") + &p("1"), p("x^2"));
        // 0b1010 ^ 0b0110 = 0b1100
        assert_eq!(&p("x^3+x") + &p("x^2+x"), p("x^3+x^2"));
        assert_eq!(
            (&p("x^3+x") + &p("x^2+x")).to_mask().unwrap(),
            0b1010 ^ 0b0110
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x+1") * &p("x+1"), p("x^2+1"));
        assert_eq!(&p("x^5+x^3+1") * &Gf2Poly::zero(), Gf2Poly::zero());
        assert_eq!(&p("x^2+x+1") * &p("x+1"), p("x^3+1"));
        // cross-check against the convolution oracle
        for (a, b) in [("x^2+x+1", "x+1"), ("x^4+x", "x^3+x^2+1")] {
            assert_eq!(&p(a) * &p(b), schoolbook_mul(&p(a), &p(b)));
        }
    }

    #[test]
    fn mul_degree_adds() {
        let a = p("x^7+x^2+1");
        let b = p("x^5+x^4+x");
        assert_eq!(
            (&a * &b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
    }

    #[test]
    fn mul_x_plus_1_examples() {
        assert_eq!(Gf2Poly::one().mul_x_plus_1(), p("x+1"));
        assert_eq!(p("x+1").mul_x_plus_1(), p("x^2+1"));
        assert_eq!(p("x^2+x+1").mul_x_plus_1(), p("x^3+1"));
        // agrees with the generic product
        let f = p("x^9+x^4+x^2+1");
        assert_eq!(f.mul_x_plus_1(), &f * &p("x+1"));
    }

    #[test]
    fn div_x_examples() {
        assert_eq!(p("x").div_x().unwrap(), Gf2Poly::one());
        assert_eq!(p("x^3+x").div_x().unwrap(), p("x^2+1"));
        assert_eq!(p("x+1").div_x(), Err(Error::OddInput));
        assert_eq!(Gf2Poly::zero().div_x(), Err(Error::ZeroInput));
        // mul(result, x) = f
        let f = p("x^6+x^2");
        assert_eq!(&f.div_x().unwrap() * &Gf2Poly::x(), f);
    }

    #[test]
    fn strip_x_examples() {
        assert_eq!(p("x^3+x^2").strip_x(), (p("x+1"), 2));
        assert_eq!(Gf2Poly::one().strip_x(), (Gf2Poly::one(), 0));
        assert_eq!(Gf2Poly::zero().strip_x(), (Gf2Poly::zero(), 0));
        // across a limb boundary
        let f = &p("x+1") << 100;
        assert_eq!(f.strip_x(), (p("x+1"), 100));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(p("x^3+x").reverse(), p("x^2+1"));
        assert_eq!(p("x^2+x+1").reverse(), p("x^2+x+1"));
        assert_eq!(Gf2Poly::zero().reverse(), Gf2Poly::zero());
        assert!(p("x^7+x^3").reverse().is_odd());
        // multi-limb window
        let f = &p("x^2+1") << 90;
        assert_eq!(f.reverse(), p("x^2+1"));
    }

    #[test]
    fn truncate_examples() {
        assert_eq!(p("x^3+x+1").truncate(1), p("x+1"));
        let f = p("x^4+x^2");
        assert_eq!(f.truncate(f.degree().unwrap()), f);
        assert_eq!(p("x^4+x^2").truncate(3), p("x^2"));
        assert_eq!(p("x^4+x^2").truncate(0), Gf2Poly::zero());
        assert_eq!(Gf2Poly::zero().truncate(5), Gf2Poly::zero());
        let wide = p("x^100+x^64+x^63+1");
        assert_eq!(wide.truncate(63), p("x^63+1"));
        assert_eq!(wide.truncate(64), p("x^64+x^63+1"));
    }

    #[test]
    fn pow_x_plus_1_examples() {
        assert_eq!(Gf2Poly::pow_x_plus_1(0), Gf2Poly::one());
        assert_eq!(Gf2Poly::pow_x_plus_1(4), p("x^4+1"));
        assert_eq!(Gf2Poly::pow_x_plus_1(3), p("x^3+x^2+x+1"));
        assert_eq!(Gf2Poly::pow_x_plus_1(256), p("x^256+1"));
    }

    #[test]
    fn pow_x_plus_1_matches_repeated_shift_xor() {
        let mut acc = Gf2Poly::one();
        for k in 0..=300u64 {
            assert_eq!(Gf2Poly::pow_x_plus_1(k), acc, "k = {k}");
            acc = acc.mul_x_plus_1();
        }
    }

    #[test]
    fn leading_terms_examples() {
        assert_eq!(Gf2Poly::leading_terms_of_pow(6, 3).unwrap(), [6, 4, 2]);
        assert_eq!(Gf2Poly::leading_terms_of_pow(16, 2).unwrap(), [16, 0]);
        assert_eq!(Gf2Poly::leading_terms_of_pow(5, 3).unwrap(), [5, 4, 1]);
        assert_eq!(
            Gf2Poly::leading_terms_of_pow(4, 3),
            Err(Error::InsufficientTerms {
                available: 2,
                requested: 3
            })
        );
        // n = 0: (x+1)^0 = 1 has a single term
        assert_eq!(Gf2Poly::leading_terms_of_pow(0, 1).unwrap(), [0]);
    }

    #[test]
    fn leading_terms_match_expansion() {
        for n in 1..=200u64 {
            let expanded = Gf2Poly::pow_x_plus_1(n);
            let terms = expanded.term_count();
            let want = terms.min(5);
            let got = Gf2Poly::leading_terms_of_pow(n, want).unwrap();
            let mut top: Vec<u64> = (0..=n).rev().filter(|&i| expanded.coeff(i)).collect();
            top.truncate(want as usize);
            assert_eq!(got, top, "n = {n}");
        }
    }

    #[test]
    fn parse_symbolic_examples() {
        assert_eq!(p("x^2+1").to_mask().unwrap(), 0b101);
        assert_eq!(p("1+x^2"), p("x^2+1"));
        assert_eq!(p(" x ^ 2 + 1 "), p("x^2+1"));
        assert_eq!(p("0"), Gf2Poly::zero());
        assert_eq!(
            Gf2Poly::parse_symbolic("x^2+x^2"),
            Err(ParseError::DuplicateTerm { exponent: 2 })
        );
        assert_eq!(
            Gf2Poly::parse_symbolic("x^2+y"),
            Err(ParseError::Syntax {
                offset: 4,
                message: "expected a term ('1', 'x' or 'x^N')"
            })
        );
        assert_eq!(
            Gf2Poly::parse_symbolic("x^"),
            Err(ParseError::Syntax {
                offset: 2,
                message: "expected an exponent"
            })
        );
        assert_eq!(
            Gf2Poly::parse_symbolic("12"),
            Err(ParseError::Syntax {
                offset: 1,
                message: "expected '+' or end of input"
            })
        );
        assert_eq!(
            Gf2Poly::parse_symbolic("0+x"),
            Err(ParseError::Syntax {
                offset: 0,
                message: "'0' must stand alone"
            })
        );
    }

    #[test]
    fn parse_hex_examples() {
        assert_eq!(p("0x25"), p("x^5+x^2+1"));
        assert_eq!(p("0x0"), Gf2Poly::zero());
        assert_eq!(p("0x1"), Gf2Poly::one());
        assert_eq!(p("0xFF"), p("0xff"));
        assert_eq!(
            Gf2Poly::parse_hex("0x"),
            Err(ParseError::Syntax {
                offset: 2,
                message: "expected hex digits"
            })
        );
        assert_eq!(
            Gf2Poly::parse_hex("0x12g"),
            Err(ParseError::Syntax {
                offset: 4,
                message: "unexpected character after hex digits"
            })
        );
        // 17 hex digits spill into a second limb
        let wide = Gf2Poly::parse_hex("0x1000000000000000f").unwrap();
        assert_eq!(wide, &Gf2Poly::monomial(64) + &p("x^3+x^2+x+1"));
    }

    #[test]
    fn format_round_trips() {
        for s in ["0", "1", "x", "x+1", "x^5+x^2+1", "x^64+x^63+x"] {
            let f = p(s);
            assert_eq!(Gf2Poly::parse_symbolic(&f.to_symbolic()).unwrap(), f);
            assert_eq!(Gf2Poly::parse_hex(&f.to_hex()).unwrap(), f);
        }
        assert_eq!(p("x^5+x^2+1").to_hex(), "0x25");
        assert_eq!(Gf2Poly::zero().to_hex(), "0x0");
        assert_eq!(Gf2Poly::zero().to_symbolic(), "0");
        assert_eq!(Gf2Poly::monomial(64).to_hex(), "0x10000000000000000");
    }

    #[test]
    fn degree_and_parity() {
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(Gf2Poly::one().degree(), Some(0));
        assert_eq!(p("x^70+x").degree(), Some(70));
        assert!(p("x^2+1").is_odd());
        assert!(p("x^2+x").is_even());
        assert!(Gf2Poly::zero().is_even());
    }

    #[test]
    fn shifts() {
        assert_eq!(&p("x+1") << 63, p("x^64+x^63"));
        assert_eq!(&p("x^64+x^63") >> 63, p("x+1"));
        assert_eq!(&p("x^2+1") >> 5, Gf2Poly::zero());
    }

    #[test]
    fn values_transfer_between_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Gf2Poly>();
        assert_send_sync::<crate::fp::FpPoly>();
    }
}
