//! Partitions, exponent vectors, multiset profiles and cycle-type data.
//!
//! These are the index sets everything else is built on: partitions label
//! irreducibles and cycle types, exponent vectors label polarized power sums
//! and multigrades, and profiles label monomial orbits under the diagonal
//! symmetric-group action.

use std::fmt;
use std::str::FromStr;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing sequence of positive integers.
///
/// The partition of 0 is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, panicking if `parts` is not weakly decreasing
    /// with positive entries. Use [`Partition::from_str`] for untrusted input.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "not a partition: {parts:?}"
        );
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Second part, zero if there is none. This is the μ₂ that bounds the
    /// stable range in the general stability theorems.
    pub fn second(&self) -> u32 {
        self.part(1)
    }

    /// μ + r·e₁: adds `r` to the first part, creating it if needed.
    pub fn bump_first(&self, r: u32) -> Partition {
        if self.parts.is_empty() {
            return if r == 0 { Partition::empty() } else { Partition::new(vec![r]) };
        }
        let mut parts = self.parts.clone();
        parts[0] += r;
        Partition { parts }
    }

    /// Dominance comparison λ ≻ μ after zero-padding to a common length.
    /// Both partitions must have the same size for this to be a partial order.
    pub fn dominates(&self, other: &Partition) -> bool {
        let a: Vec<i64> = self.parts.iter().map(|&p| p as i64).collect();
        let b: Vec<i64> = other.parts.iter().map(|&p| p as i64).collect();
        dominates_vectors(&a, &b)
    }

    /// Key used in the character-table cache files: parts joined by '+',
    /// e.g. "3+1" for (3,1).
    pub fn cache_key(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Number of distinct rearrangements of the parts padded with zeros to
    /// length `n`: the orbit size of λ as a weight of (C^×)^n under S_n.
    pub fn rearrangements_padded(&self, n: usize) -> BigInt {
        assert!(self.len() <= n, "padding length below partition length");
        let mut denom = factorial(n - self.parts.len());
        let mut run = 0usize;
        for i in 0..self.parts.len() {
            run += 1;
            if i + 1 == self.parts.len() || self.parts[i + 1] != self.parts[i] {
                denom *= factorial(run);
                run = 0;
            }
        }
        factorial(n) / denom
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses "3,1", "(3,1)" or "[3,1]". The empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in trimmed.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad partition entry {tok:?}")))?;
            if p == 0 {
                return Err(Error::InvalidArgument("partition parts must be positive".into()));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }
}

/// Prefix-sum dominance on integer vectors, zero-padded to a common length.
pub fn dominates_vectors(a: &[i64], b: &[i64]) -> bool {
    let len = a.len().max(b.len());
    let mut pa = 0i64;
    let mut pb = 0i64;
    for i in 0..len {
        pa += a.get(i).copied().unwrap_or(0);
        pb += b.get(i).copied().unwrap_or(0);
        if pa < pb {
            return false;
        }
    }
    true
}

/// All partitions of `n` (with at most `max_length` parts if given), in
/// reverse lexicographic order: (n), (n-1,1), ..., (1^n).
pub fn enumerate_partitions(n: u32, max_length: Option<usize>) -> Vec<Partition> {
    let cap = max_length.unwrap_or(n as usize);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec_partitions(n, n, cap, &mut stack, &mut out);
    out
}

fn rec_partitions(
    remaining: u32,
    max_part: u32,
    slots: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    for p in (1..=hi).rev() {
        stack.push(p);
        rec_partitions(remaining - p, p, slots - 1, stack, out);
        stack.pop();
    }
}

/// An element of Z^k_{≥0}: the multidegree of a monomial in the grading
/// variables, or the index of a polarized power sum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector {
    entries: Vec<u32>,
}

impl ExponentVector {
    pub fn new(entries: impl Into<Vec<u32>>) -> Self {
        ExponentVector { entries: entries.into() }
    }

    /// The zero vector of length k.
    pub fn zero(k: usize) -> Self {
        ExponentVector { entries: vec![0; k] }
    }

    /// The standard basis vector e_i of length k.
    pub fn unit(k: usize, i: usize) -> Self {
        let mut entries = vec![0; k];
        entries[i] = 1;
        ExponentVector { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// |a| = Σ aᵢ, the total degree.
    pub fn degree(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExponentVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.is_empty() {
            return Err(Error::InvalidArgument("empty exponent vector".into()));
        }
        let mut entries = Vec::new();
        for tok in trimmed.split(',') {
            entries.push(tok.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("bad exponent entry {tok:?}"))
            })?);
        }
        Ok(ExponentVector { entries })
    }
}

/// All a ∈ Z^k_{≥0} with |a| = d, first entry descending; there are
/// C(d+k-1, k-1) of them.
pub fn enumerate_exponent_vectors(k: usize, d: u32) -> Vec<ExponentVector> {
    assert!(k >= 1, "need at least one variable set");
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    rec_compositions(k, d, &mut stack, &mut out);
    out
}

fn rec_compositions(slots: usize, remaining: u32, stack: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
    if slots == 1 {
        stack.push(remaining);
        out.push(ExponentVector::new(stack.clone()));
        stack.pop();
        return;
    }
    for e in (0..=remaining).rev() {
        stack.push(e);
        rec_compositions(slots - 1, remaining - e, stack, out);
        stack.pop();
    }
}

/// A multiset of exactly n exponent vectors (zero vectors permitted),
/// canonicalized by sorting in descending lexicographic order so that
/// multiset equality is sequence equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Profile {
    vectors: Vec<ExponentVector>,
}

impl Profile {
    pub fn new(mut vectors: Vec<ExponentVector>) -> Self {
        vectors.sort_unstable_by(|a, b| b.cmp(a));
        Profile { vectors }
    }

    pub fn vectors(&self) -> &[ExponentVector] {
        &self.vectors
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    /// Σ|Pⁱ|, the total degree of the indexed monomial orbit.
    pub fn total_degree(&self) -> u32 {
        self.vectors.iter().map(|v| v.degree()).sum()
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vectors).finish()
    }
}

/// All multisets of n exponent vectors in Z^k_{≥0} of total degree d.
///
/// For d ≤ n the count is independent of n: padding with zero vectors is a
/// bijection between the profile sets for different n.
pub fn enumerate_profiles(n: usize, k: usize, d: u32) -> Vec<Profile> {
    assert!(n >= 1 && k >= 1);
    let mut out = Vec::new();
    let mut stack: Vec<ExponentVector> = Vec::new();
    rec_profiles(n, k, d, None, &mut stack, &mut out);
    out
}

/// |P^{n,k}_d| without materializing the profiles.
pub fn profile_count(n: usize, k: usize, d: u32) -> u64 {
    assert!(n >= 1 && k >= 1);
    count_profiles(n, k, d, None)
}

// Nonzero vectors are chosen in weakly decreasing (lexicographic) order;
// trailing slots are implicitly filled with zero vectors.
fn rec_profiles(
    slots: usize,
    k: usize,
    remaining: u32,
    bound: Option<&ExponentVector>,
    stack: &mut Vec<ExponentVector>,
    out: &mut Vec<Profile>,
) {
    if remaining == 0 {
        let mut vectors = stack.clone();
        vectors.resize(stack.len() + (slots), ExponentVector::zero(k));
        out.push(Profile::new(vectors));
        return;
    }
    if slots == 0 {
        return;
    }
    for deg in (1..=remaining).rev() {
        for v in enumerate_exponent_vectors(k, deg) {
            if let Some(b) = bound {
                if v.cmp(b) == std::cmp::Ordering::Greater {
                    continue;
                }
            }
            stack.push(v.clone());
            rec_profiles(slots - 1, k, remaining - deg, Some(&v), stack, out);
            stack.pop();
        }
    }
}

fn count_profiles(slots: usize, k: usize, remaining: u32, bound: Option<&ExponentVector>) -> u64 {
    if remaining == 0 {
        return 1;
    }
    if slots == 0 {
        return 0;
    }
    let mut total = 0u64;
    for deg in (1..=remaining).rev() {
        for v in enumerate_exponent_vectors(k, deg) {
            if let Some(b) = bound {
                if v.cmp(b) == std::cmp::Ordering::Greater {
                    continue;
                }
            }
            total += count_profiles(slots - 1, k, remaining - deg, Some(&v));
        }
    }
    total
}

/// Conjugacy-class datum of S_n: the cycle type τ with its multiplicities
/// and centralizer order z_τ = Π d^{m_d}·m_d!.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleType {
    parts: Partition,
}

impl CycleType {
    pub fn new(parts: Partition) -> Self {
        CycleType { parts }
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    /// n, the number of letters.
    pub fn n(&self) -> u32 {
        self.parts.size()
    }

    /// m_d: the number of parts equal to d.
    pub fn multiplicity(&self, d: u32) -> u32 {
        self.parts.parts().iter().filter(|&&p| p == d).count() as u32
    }

    /// z_τ, the centralizer order. Fits u64 comfortably at desk scale.
    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        let mut run = 0u64;
        let parts = self.parts.parts();
        for i in 0..parts.len() {
            run += 1;
            z *= parts[i] as u64;
            if i + 1 == parts.len() || parts[i + 1] != parts[i] {
                for j in 1..=run {
                    z *= j;
                }
                run = 0;
            }
        }
        z
    }

    /// A canonical permutation of cycle type τ on {0,..,n-1}, as the image
    /// map j ↦ σ(j): cycles laid out consecutively.
    pub fn representative(&self) -> Vec<usize> {
        let n = self.n() as usize;
        let mut sigma: Vec<usize> = (0..n).collect();
        let mut start = 0usize;
        for &p in self.parts.parts() {
            let p = p as usize;
            for i in 0..p {
                sigma[start + i] = start + (i + 1) % p;
            }
            start += p;
        }
        sigma
    }
}

/// The cycle types of S_n in the order of [`enumerate_partitions`].
pub fn cycle_types(n: u32) -> Vec<CycleType> {
    enumerate_partitions(n, None).into_iter().map(CycleType::new).collect()
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::from(1);
    for i in 2..=n {
        f *= i as u64;
    }
    f
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::from(1);
    for i in 0..k {
        num = num * ((n - i) as u64) / ((i + 1) as u64);
    }
    num
}

/// C(n, k) as u64; panics on overflow (desk-scale counts only).
pub fn binomial_u64(n: usize, k: usize) -> u64 {
    use num::ToPrimitive;
    binomial(n, k).to_u64().expect("binomial overflows u64")
}
