use std::fmt;

/// Maximum number of variables a [`Mono`] can hold.
pub const MAX_VARS: usize = 16;
/// Maximum exponent of a single variable.
pub const MAX_EXPONENT: u32 = 127;

const FIELD_BITS: u32 = 7;
const FIELD_MASK: u128 = 0x7f;
const DEG_SHIFT: u32 = 112;

const fn shift(i: usize) -> u32 {
    FIELD_BITS * (15 - i as u32)
}

// Bits that receive a carry (or borrow) out of a neighbouring field.
const BOUNDARY: u128 = {
    let mut m: u128 = 1 << DEG_SHIFT;
    let mut i = 0;
    while i < 15 {
        m |= 1 << shift(i);
        i += 1;
    }
    m
};

/// Exponent vector packed into a `u128`.
///
/// Layout: total degree in the top 16 bits, then one 7-bit field per
/// variable with variable 0 most significant. Integer comparison is
/// therefore graded-lex order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn var(i: usize) -> Mono {
        assert!(i < MAX_VARS, "variable index {} out of range", i);
        Mono((1u128 << DEG_SHIFT) | (1u128 << shift(i)))
    }

    pub fn from_exps(exps: &[u32]) -> Mono {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut bits = 0u128;
        let mut deg = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {} too large", e);
            bits |= (e as u128) << shift(i);
            deg += e as u128;
        }
        Mono(bits | (deg << DEG_SHIFT))
    }

    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> shift(i)) & FIELD_MASK) as u32
    }

    pub fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub fn exps(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn checked_mul(self, o: Mono) -> Option<Mono> {
        let sum = self.0.wrapping_add(o.0);
        if (self.0 ^ o.0 ^ sum) & BOUNDARY != 0 {
            return None;
        }
        Some(Mono(sum))
    }

    pub fn mul(self, o: Mono) -> Mono {
        self.checked_mul(o)
            .unwrap_or_else(|| panic!("monomial exponent overflow (limit {})", MAX_EXPONENT))
    }

    /// `self / o` if `o` divides `self`.
    pub fn checked_div(self, o: Mono) -> Option<Mono> {
        if o.0 > self.0 {
            return None;
        }
        let diff = self.0 - o.0;
        if (self.0 ^ o.0 ^ diff) & BOUNDARY != 0 {
            return None;
        }
        Some(Mono(diff))
    }

    pub fn divides(self, o: Mono) -> bool {
        o.checked_div(self).is_some()
    }

    /// Raise the exponent of variable `i` by `k`.
    pub fn with_inc(self, i: usize, k: u32) -> Mono {
        if k == 0 {
            return self;
        }
        let delta = Mono(((k as u128) << DEG_SHIFT) | ((k as u128) << shift(i)));
        self.mul(delta)
    }

    /// Lower the exponent of variable `i` by one, if positive.
    pub fn dec(self, i: usize) -> Option<Mono> {
        self.checked_div(Mono::var(i))
    }

    /// All monomials dividing `self`.
    pub fn divisors(self, n: usize) -> Vec<Mono> {
        let e = self.exps(n);
        let mut out = vec![Mono::ONE];
        for (i, &ei) in e.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (ei as usize + 1));
            for m in &out {
                for k in 0..=ei {
                    next.push(m.with_inc(i, k));
                }
            }
            out = next;
        }
        out
    }

    /// Index of the highest variable with nonzero exponent, plus one.
    pub fn support_len(self) -> usize {
        (0..MAX_VARS)
            .rev()
            .find(|&i| self.exp(i) > 0)
            .map_or(0, |i| i + 1)
    }

    pub fn raw(self) -> u128 {
        self.0
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mono{:?}", self.exps(self.support_len()))
    }
}
