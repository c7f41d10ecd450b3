//! Polynomials over F_p for a small prime p, stored as residue sequences.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, ParseError};

/// A polynomial in F_p[x]: `coeffs[i]` is the coefficient of x^i, reduced to
/// `[0, p)`, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FpPoly {
    /// Builds a polynomial from raw coefficients (any residues; reduced mod p).
    /// The modulus must be prime.
    pub fn new(p: u64, coeffs: &[u64]) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus { p });
        }
        let mut coeffs: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Ok(FpPoly { p, coeffs })
    }

    pub fn zero(p: u64) -> Result<Self, Error> {
        Self::new(p, &[])
    }

    pub fn constant(p: u64, c: u64) -> Result<Self, Error> {
        Self::new(p, &[c])
    }

    fn raw(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        (!self.coeffs.is_empty()).then(|| self.coeffs.len() as u64 - 1)
    }

    /// The constant coefficient f_0.
    pub fn constant_term(&self) -> u64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    /// `f * (x + 1)`, exact in F_p[x].
    pub fn mul_x_plus_1(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n + 1);
        let mut prev = 0u64;
        for &c in &self.coeffs {
            out.push((c + prev) % self.p);
            prev = c;
        }
        out.push(prev);
        Self::raw(self.p, out)
    }

    /// `f - c` for a constant c (only the constant coefficient changes).
    pub fn sub_constant(&self, c: u64) -> Self {
        let c = c % self.p;
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        coeffs[0] = (coeffs[0] + self.p - c) % self.p;
        Self::raw(self.p, coeffs)
    }

    /// Exact division by x. Errors when f_0 != 0 or f = 0.
    pub fn div_x(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.constant_term() != 0 {
            return Err(Error::OddInput);
        }
        Ok(Self::raw(self.p, self.coeffs[1..].to_vec()))
    }

    /// Parses a symbolic polynomial over F_p, e.g. `2x^3+x+2`. Coefficients
    /// are decimal integers reduced mod p; duplicate exponents are rejected.
    pub fn parse(p: u64, s: &str) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidModulus { p });
        }
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let parse_uint = |pos: &mut usize| -> Result<u64, ParseError> {
            let start = *pos;
            let mut v: u64 = 0;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((bytes[*pos] - b'0') as u64))
                    .ok_or(ParseError::Syntax {
                        offset: start,
                        message: "number too large",
                    })?;
                *pos += 1;
            }
            if *pos == start {
                return Err(ParseError::Syntax {
                    offset: start,
                    message: "expected a number",
                });
            }
            Ok(v)
        };

        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(Error::Parse(ParseError::Syntax {
                offset: pos,
                message: "empty polynomial",
            }));
        }
        let mut terms: Vec<(u64, u64)> = Vec::new();
        loop {
            skip_ws(&mut pos);
            let coeff = if bytes.get(pos).is_some_and(|c| c.is_ascii_digit()) {
                parse_uint(&mut pos)?
            } else {
                1
            };
            skip_ws(&mut pos);
            let exponent = if bytes.get(pos) == Some(&b'x') {
                pos += 1;
                skip_ws(&mut pos);
                if bytes.get(pos) == Some(&b'^') {
                    pos += 1;
                    skip_ws(&mut pos);
                    let e = parse_uint(&mut pos)?;
                    if e > crate::gf2::MAX_PARSE_EXPONENT {
                        return Err(Error::Parse(ParseError::Syntax {
                            offset: pos,
                            message: "exponent too large",
                        }));
                    }
                    e
                } else {
                    1
                }
            } else {
                0
            };
            if terms.iter().any(|&(e, _)| e == exponent) {
                return Err(Error::Parse(ParseError::DuplicateTerm { exponent }));
            }
            terms.push((exponent, coeff % p));
            skip_ws(&mut pos);
            match bytes.get(pos) {
                None => break,
                Some(b'+') => pos += 1,
                Some(_) => {
                    return Err(Error::Parse(ParseError::Syntax {
                        offset: pos,
                        message: "expected '+' or end of input",
                    }))
                }
            }
        }
        let max_exp = terms.iter().map(|&(e, _)| e).max().unwrap_or(0);
        let mut coeffs = alloc::vec![0u64; max_exp as usize + 1];
        for (e, c) in terms {
            coeffs[e as usize] = c;
        }
        Ok(Self::raw(p, coeffs))
    }

    /// Renders the symbolic form, highest-degree term first (`0` for zero).
    pub fn to_symbolic(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            match (i, c) {
                (0, c) => write!(s, "{c}").unwrap(),
                (1, 1) => s.push('x'),
                (1, c) => write!(s, "{c}x").unwrap(),
                (e, 1) => write!(s, "x^{e}").unwrap(),
                (e, c) => write!(s, "{c}x^{e}").unwrap(),
            }
        }
        s
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_symbolic())
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[p={}]({})", self.p, self.to_symbolic())
    }
}
