//! SplitMix64: a tiny deterministic generator so that every randomized check
//! is reproducible from a single seed across platforms.

use polycollatz::Gf2Poly;

pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniformly in `[0, n)` (modulo bias is irrelevant at these sizes).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Random polynomial of degree exactly `d`.
    pub fn poly_of_degree(&mut self, d: u64) -> Gf2Poly {
        let limbs = (d / 64) as usize + 1;
        let mut words: Vec<u64> = (0..limbs).map(|_| self.next_u64()).collect();
        let top = d % 64;
        words[limbs - 1] &= (1u64 << top) | ((1u64 << top) - 1);
        words[limbs - 1] |= 1u64 << top;
        Gf2Poly::from_limbs(&words)
    }

    /// Random odd polynomial of degree exactly `d`.
    pub fn odd_poly_of_degree(&mut self, d: u64) -> Gf2Poly {
        let f = self.poly_of_degree(d);
        if f.is_odd() {
            f
        } else {
            &f + &Gf2Poly::one()
        }
    }
}
