//! k-subsets of `0..n` as fixed-width bit vectors, with the colexicographic
//! rank <-> subset bijection.
//!
//! Colex order compares subsets by their largest differing element, which for
//! bitmask-encoded subsets coincides with numeric order of the masks. The rank
//! of `{s_1 < s_2 < ... < s_k}` is `sum_i C(s_i, i)`, independent of `n`.

use crate::error::{Error, Result};

/// Largest ground-set size supported by the ranking machinery. All binomials
/// C(n, k) with n <= 64 fit in a u64, and 60 keeps subsets inside one word.
pub const MAX_GROUND_SET: usize = 60;

const TABLE_N: usize = 65;

/// Pascal table, `BINOMIAL[n][k] = C(n, k)`, built at compile time.
/// Entries with k > n are 0; every nonzero entry is exact (no overflow for
/// n <= 64, since C(64, 32) < 2^61).
static BINOMIAL: [[u64; TABLE_N]; TABLE_N] = {
    let mut t = [[0u64; TABLE_N]; TABLE_N];
    let mut n = 0;
    while n < TABLE_N {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + if k <= n - 1 { t[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    t
};

/// Exact binomial coefficient C(n, k); 0 when k > n.
#[inline]
pub fn binomial(n: usize, k: usize) -> u64 {
    assert!(n < TABLE_N, "binomial table covers n <= {}", TABLE_N - 1);
    if k >= TABLE_N {
        return 0;
    }
    BINOMIAL[n][k]
}

/// A k-element subset of `0..n`, stored as a bitmask over one 64-bit word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset(u64);

impl KSubset {
    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        KSubset(bits)
    }

    pub fn from_elems(elems: &[usize]) -> Self {
        let mut bits = 0u64;
        for &e in elems {
            assert!(e < 64);
            bits |= 1 << e;
        }
        KSubset(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Population count, i.e. the number of tokens.
    #[inline]
    pub fn k(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(self, v: usize) -> Self {
        KSubset(self.0 | 1 << v)
    }

    #[inline]
    pub fn remove(self, v: usize) -> Self {
        KSubset(self.0 & !(1 << v))
    }

    /// Moves one element from `from` to `to`; both must be valid.
    #[inline]
    pub fn slide(self, from: usize, to: usize) -> Self {
        debug_assert!(self.contains(from) && !self.contains(to));
        KSubset(self.0 & !(1 << from) | 1 << to)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        KSubset(self.0 ^ other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        KSubset(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        KSubset(self.0 | other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the ground set `0..n`.
    #[inline]
    pub fn complement(self, n: usize) -> Self {
        let mask = if n == 64 { u64::MAX } else { (1 << n) - 1 };
        KSubset(!self.0 & mask)
    }

    /// Elements in increasing order.
    pub fn elems(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.k());
        let mut bits = self.0;
        while bits != 0 {
            out.push(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        out
    }

    /// Checks the representation invariants against a ground set size.
    pub fn check(self, n: usize, k: usize) -> Result<()> {
        if n > MAX_GROUND_SET {
            return Err(Error::TooLarge(format!(
                "ground set {n} exceeds cap {MAX_GROUND_SET}"
            )));
        }
        if n < 64 && self.0 >> n != 0 {
            return Err(Error::VertexOutOfRange {
                index: 63 - self.0.leading_zeros() as usize,
                n,
            });
        }
        if self.k() != k {
            return Err(Error::InvalidParameter(format!(
                "subset has {} elements, expected {k}",
                self.k()
            )));
        }
        Ok(())
    }
}

impl std::fmt::Debug for KSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Colexicographic rank of a subset: with elements `s_1 < ... < s_k`,
/// the rank is `sum_i C(s_i, i)`.
pub fn rank_colex(s: KSubset) -> u64 {
    let mut rank = 0u64;
    let mut bits = s.bits();
    let mut i = 1;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        rank += binomial(e, i);
        bits &= bits - 1;
        i += 1;
    }
    rank
}

/// Inverse of [`rank_colex`]: decodes greedily from the largest element down.
pub fn unrank_colex(mut r: u64, n: usize, k: usize) -> Result<KSubset> {
    let total = binomial(n, k);
    if r >= total {
        return Err(Error::InvalidParameter(format!(
            "rank {r} out of range for C({n},{k}) = {total}"
        )));
    }
    let mut bits = 0u64;
    for i in (1..=k).rev() {
        // Largest c with C(c, i) <= r; c >= i - 1 always holds.
        let mut c = i - 1;
        while binomial(c + 1, i) <= r {
            c += 1;
        }
        bits |= 1 << c;
        r -= binomial(c, i);
    }
    debug_assert_eq!(r, 0);
    Ok(KSubset::from_bits(bits))
}

/// All k-subsets of `0..n` in strictly increasing colex rank.
///
/// Uses Gosper's hack: successive bitmasks in increasing numeric order are
/// exactly the colex order.
pub fn enumerate_ksubsets(n: usize, k: usize) -> Result<Ksubsets> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "need 0 < k <= n, got k = {k}, n = {n}"
        )));
    }
    if n > MAX_GROUND_SET {
        return Err(Error::TooLarge(format!(
            "ground set {n} exceeds cap {MAX_GROUND_SET}"
        )));
    }
    Ok(Ksubsets {
        current: (1u64 << k) - 1,
        remaining: binomial(n, k),
    })
}

pub struct Ksubsets {
    current: u64,
    remaining: u64,
}

impl Ksubsets {
    pub(crate) fn raw(current: u64, remaining: u64) -> Ksubsets {
        Ksubsets { current, remaining }
    }
}

impl Iterator for Ksubsets {
    type Item = KSubset;

    fn next(&mut self) -> Option<KSubset> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = KSubset::from_bits(self.current);
        // Gosper's hack: next mask with the same popcount.
        let c = self.current;
        if c != 0 {
            let lo = c & c.wrapping_neg();
            let carry = c + lo;
            self.current = (((c ^ carry) >> 2) / lo) | carry;
        }
        Some(out)
    }
}
