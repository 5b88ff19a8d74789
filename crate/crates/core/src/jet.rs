//! Bundle signatures, symmetric multi-indices, and jet variables.
//!
//! Everything downstream (expressions, forms, operators) names coordinates
//! by index into a [`BundleSignature`]; the signature fixes the canonical
//! orderings once and never mutates.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Names and ordering of the base coordinates `x^lambda` and the fiber
/// coordinates `y^i` of a fibred manifold.
///
/// The ordering fixed at construction defines every canonical ordering in
/// the engine, including the implicit volume form `dx^0 ^ ... ^ dx^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleSignature {
    base: Vec<String>,
    fiber: Vec<String>,
}

impl BundleSignature {
    /// Builds a signature from base and fiber coordinate names.
    ///
    /// All names must be distinct across both lists and both lists must be
    /// non-empty.
    pub fn new<S: AsRef<str>>(base: &[S], fiber: &[S]) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::InvalidSignature("no base coordinates".to_string()));
        }
        if fiber.is_empty() {
            return Err(Error::InvalidSignature("no fiber coordinates".to_string()));
        }
        let base: Vec<String> = base.iter().map(|s| s.as_ref().to_string()).collect();
        let fiber: Vec<String> = fiber.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen: Vec<&str> = Vec::new();
        for name in base.iter().chain(fiber.iter()) {
            if name.is_empty() {
                return Err(Error::InvalidSignature("empty coordinate name".to_string()));
            }
            if seen.contains(&name.as_str()) {
                let mut msg = String::from("duplicate coordinate name `");
                msg.push_str(name);
                msg.push('`');
                return Err(Error::InvalidSignature(msg));
            }
            seen.push(name);
        }
        Ok(BundleSignature { base, fiber })
    }

    /// Number of base coordinates `n`.
    pub fn base_len(&self) -> usize {
        self.base.len()
    }

    /// Number of fiber coordinates `m`.
    pub fn fiber_len(&self) -> usize {
        self.fiber.len()
    }

    pub fn base_name(&self, lambda: usize) -> &str {
        &self.base[lambda]
    }

    pub fn fiber_name(&self, i: usize) -> &str {
        &self.fiber[i]
    }

    pub fn base_names(&self) -> impl Iterator<Item = &str> {
        self.base.iter().map(|s| s.as_str())
    }

    pub fn fiber_names(&self) -> impl Iterator<Item = &str> {
        self.fiber.iter().map(|s| s.as_str())
    }

    pub fn base_index(&self, name: &str) -> Option<usize> {
        self.base.iter().position(|s| s == name)
    }

    pub fn fiber_index(&self, name: &str) -> Option<usize> {
        self.fiber.iter().position(|s| s == name)
    }

    pub fn check_base(&self, lambda: usize) -> Result<()> {
        if lambda < self.base.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: lambda,
                bound: self.base.len(),
            })
        }
    }

    pub fn check_fiber(&self, i: usize) -> Result<()> {
        if i < self.fiber.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                bound: self.fiber.len(),
            })
        }
    }
}

/// Symmetric multi-index over the base coordinates.
///
/// Stored as a count vector: `counts[lambda]` is the multiplicity of the
/// base index `lambda`. Total derivatives commute, so `(lambda mu)` and
/// `(mu lambda)` are the same index by construction; no rewrite rule is
/// needed to identify them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    counts: Vec<u32>,
}

impl MultiIndex {
    /// The empty multi-index of order 0 over `n` base coordinates.
    pub fn empty(n: usize) -> Self {
        MultiIndex { counts: vec![0; n] }
    }

    /// Builds a multi-index directly from counts.
    pub fn from_counts(counts: Vec<u32>) -> Self {
        MultiIndex { counts }
    }

    /// Builds the multi-index of the listed base indices, e.g. `[0, 0, 1]`
    /// for `(x x t)` in a 2-dimensional base.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut mi = MultiIndex::empty(n);
        for &lambda in indices {
            mi = mi.add(lambda)?;
        }
        Ok(mi)
    }

    /// Order `|Lambda|`: the total number of indices counted with
    /// multiplicity.
    pub fn order(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Dimension of the base the index lives over.
    pub fn base_len(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, lambda: usize) -> u32 {
        self.counts[lambda]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `lambda + Lambda`: the order grows by exactly one.
    pub fn add(&self, lambda: usize) -> Result<Self> {
        if lambda >= self.counts.len() {
            return Err(Error::IndexOutOfRange {
                index: lambda,
                bound: self.counts.len(),
            });
        }
        let mut counts = self.counts.clone();
        counts[lambda] += 1;
        Ok(MultiIndex { counts })
    }

    /// Removes one occurrence of `lambda`, or `None` if absent.
    pub fn remove(&self, lambda: usize) -> Option<Self> {
        if lambda >= self.counts.len() || self.counts[lambda] == 0 {
            return None;
        }
        let mut counts = self.counts.clone();
        counts[lambda] -= 1;
        Some(MultiIndex { counts })
    }

    /// The largest base index present, or `None` for the empty index.
    pub fn largest_index(&self) -> Option<usize> {
        self.counts.iter().rposition(|&c| c > 0)
    }

    /// Iterates the indices with multiplicity, ascending.
    pub fn iter_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(lambda, &c)| core::iter::repeat_n(lambda, c as usize))
    }

    /// All multi-indices of exact order `k` over `n` base coordinates, in
    /// lexicographic order of the count vectors.
    pub fn all_of_order(n: usize, k: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut counts = vec![0u32; n];
        fn rec(counts: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<MultiIndex>) {
            if pos + 1 == counts.len() {
                counts[pos] = left;
                out.push(MultiIndex {
                    counts: counts.clone(),
                });
                counts[pos] = 0;
                return;
            }
            for c in 0..=left {
                counts[pos] = c;
                rec(counts, pos + 1, left - c, out);
            }
            counts[pos] = 0;
        }
        rec(&mut counts, 0, k, &mut out);
        out
    }

    /// All multi-indices of order `<= max_order`, ascending in order and
    /// lexicographic within each order.
    pub fn all_up_to(n: usize, max_order: u32) -> Vec<MultiIndex> {
        (0..=max_order)
            .flat_map(|k| MultiIndex::all_of_order(n, k))
            .collect()
    }
}

/// A jet coordinate `y^i_Lambda`: the field index together with the
/// derivative multi-index.
///
/// The total order is (order, field, counts lexicographic); it is the
/// canonical order every highest-derivative-first traversal relies on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JetVariable {
    pub field: usize,
    pub index: MultiIndex,
}

impl JetVariable {
    pub fn new(field: usize, index: MultiIndex) -> Self {
        JetVariable { field, index }
    }

    /// The order-0 variable `y^i`.
    pub fn base_field(n: usize, field: usize) -> Self {
        JetVariable {
            field,
            index: MultiIndex::empty(n),
        }
    }

    pub fn order(&self) -> u32 {
        self.index.order()
    }

    /// `y^i_{lambda + Lambda}` from `y^i_Lambda`.
    pub fn raise(&self, lambda: usize) -> Result<Self> {
        Ok(JetVariable {
            field: self.field,
            index: self.index.add(lambda)?,
        })
    }
}

impl Ord for JetVariable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index
            .order()
            .cmp(&other.index.order())
            .then_with(|| self.field.cmp(&other.field))
            .then_with(|| self.index.counts.cmp(&other.index.counts))
    }
}

impl PartialOrd for JetVariable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for JetVariable {
    /// Index-form rendering (`y1[0,0,1]`) for diagnostics; name-aware
    /// rendering lives with [`crate::expr::Expression`] display.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}", self.field)?;
        if self.index.order() > 0 {
            write!(f, "[")?;
            for (pos, lambda) in self.index.iter_indices().enumerate() {
                if pos > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{lambda}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// All jet variables `y^i_Lambda` with `|Lambda| <= max_order`, strictly
/// ascending in the canonical order.
///
/// The length is `m * C(n + max_order, n)`.
pub fn enumerate_jets(sig: &BundleSignature, max_order: u32) -> Vec<JetVariable> {
    let n = sig.base_len();
    let mut out = Vec::new();
    for k in 0..=max_order {
        for field in 0..sig.fiber_len() {
            for index in MultiIndex::all_of_order(n, k) {
                out.push(JetVariable { field, index });
            }
        }
    }
    out
}
