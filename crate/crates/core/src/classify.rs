//! Classification of the indecomposable maximal Cohen-Macaulay modules.
//!
//! Over 1/n(1,a) the indecomposable MCM modules are M_0, ..., M_{n-1}, with
//! M_0 the free module. Writing an index t greedily over the i-series,
//! t = d_1 i_1 + ... + d_r i_r, determines everything this module computes:
//!
//! - the generator count mu(M_t) = d_1 + ... + d_r + 1,
//! - special modules (exactly the indices i_1, ..., i_r, plus M_0),
//! - Ulrich modules (exactly the indices with d_1 + ... + d_r = e(R) - 1),
//!   also reachable by an independent route through interleaved pair chains,
//! - the AR translation and R-dual on indices,
//! - the generator census N_m and its consequences (existence for every m,
//!   bounds on the Ulrich count, the Hilbert-Kunz multiplicity).

use std::collections::{BTreeMap, HashSet};

use crate::error::Error;
use crate::hj::{gcd, GroupParams, HjExpansion};

/// The greedy coefficients (d_1, ..., d_r) of a module index over the
/// i-series. Admissible vectors satisfy 0 <= d_u <= alpha_u - 1, and any two
/// maximal coordinates d_u = alpha_u - 1, d_v = alpha_v - 1 (u < v) are
/// separated by some w with d_w <= alpha_w - 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoefficientVector(Vec<i64>);

impl CoefficientVector {
    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

fn assert_index_range(hj: &HjExpansion, t: i64) {
    assert!(
        (0..hj.n()).contains(&t),
        "module index {t} outside [0, {})",
        hj.n()
    );
}

/// Greedy remainder division of t over i_1 > ... > i_r.
///
/// Panics if t is outside [0, n-1].
pub fn decompose(hj: &HjExpansion, t: i64) -> CoefficientVector {
    assert_index_range(hj, t);
    let mut rem = t;
    let d = hj.special_indices()
        .iter()
        .map(|&iu| {
            let q = rem / iu;
            rem %= iu;
            q
        })
        .collect();
    debug_assert_eq!(rem, 0);
    CoefficientVector(d)
}

/// Check the two admissibility conditions for a coefficient sequence.
/// Sequences of the wrong length are never admissible.
pub fn is_valid_sequence(hj: &HjExpansion, d: &[i64]) -> bool {
    if d.len() != hj.curve_count() {
        return false;
    }
    // `open_max` marks a maximal coordinate not yet followed by a separator
    // (a coordinate <= alpha - 3); a second maximum in that state is invalid.
    let mut open_max = false;
    for (&du, &alpha) in d.iter().zip(hj.alphas()) {
        if du < 0 || du > alpha - 1 {
            return false;
        }
        if du == alpha - 1 {
            if open_max {
                return false;
            }
            open_max = true;
        } else if du <= alpha - 3 {
            open_max = false;
        }
    }
    true
}

/// Evaluate an admissible coefficient sequence back to its module index.
pub fn recompose(hj: &HjExpansion, d: &[i64]) -> Result<i64, Error> {
    if !is_valid_sequence(hj, d) {
        return Err(Error::InvalidSequence);
    }
    Ok(d.iter()
        .zip(hj.special_indices())
        .map(|(&du, &iu)| du * iu)
        .sum())
}

/// All admissible coefficient sequences, in lexicographic order. There are
/// exactly n of them and `recompose` maps them bijectively onto [0, n-1].
///
/// The search extends admissible prefixes only, so the cost is O(n r) even
/// when the coefficient box is exponentially larger than n.
pub fn enumerate_valid_sequences(hj: &HjExpansion) -> Vec<CoefficientVector> {
    fn extend(
        alphas: &[i64],
        prefix: &mut Vec<i64>,
        open_max: bool,
        out: &mut Vec<CoefficientVector>,
    ) {
        let Some(&alpha) = alphas.get(prefix.len()) else {
            out.push(CoefficientVector(prefix.clone()));
            return;
        };
        for du in 0..alpha {
            let is_max = du == alpha - 1;
            if is_max && open_max {
                continue;
            }
            let next_open = if is_max {
                true
            } else if du <= alpha - 3 {
                false
            } else {
                open_max
            };
            prefix.push(du);
            extend(alphas, prefix, next_open, out);
            prefix.pop();
        }
    }

    let mut out = Vec::with_capacity(hj.n() as usize);
    extend(hj.alphas(), &mut Vec::with_capacity(hj.curve_count()), false, &mut out);
    out
}

/// Number of minimal generators mu(M_t) = d_1 + ... + d_r + 1.
pub fn mu(hj: &HjExpansion, t: i64) -> i64 {
    decompose(hj, t).sum() + 1
}

/// M_t is Ulrich exactly when the coefficient sum reaches e(R) - 1.
pub fn is_ulrich(hj: &HjExpansion, t: i64) -> bool {
    decompose(hj, t).sum() == hj.multiplicity() - 1
}

/// M_t is special exactly when t is 0 or one of the i-series values.
pub fn is_special(hj: &HjExpansion, t: i64) -> bool {
    assert_index_range(hj, t);
    t == 0 || hj.special_indices().contains(&t)
}

/// AR translation on indices: tau(M_t) = M_{t-a-1 mod n}.
pub fn tau(g: &GroupParams, t: i64) -> i64 {
    (t - g.a() - 1).rem_euclid(g.n())
}

/// R-dual on indices: (M_t)* = M_{n-t mod n}; the free module is self-dual.
pub fn dual(g: &GroupParams, t: i64) -> i64 {
    (-t).rem_euclid(g.n())
}

/// Classification record for a single module index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleReport {
    pub index: i64,
    pub coefficients: CoefficientVector,
    pub mu: i64,
    pub is_free: bool,
    pub is_special: bool,
    pub is_ulrich: bool,
    /// Exponent pairs (i, j) of the minimal monomial generators. Known in
    /// closed form exactly for special modules: x^{i_u}, y^{j_u} for the
    /// u-th special, x^0 y^0 for the free module.
    pub generators: Option<Vec<(i64, i64)>>,
    pub tau: i64,
    pub dual: i64,
}

/// Full classification record for M_t.
pub fn report(hj: &HjExpansion, t: i64) -> ModuleReport {
    let g = hj.params();
    let coefficients = decompose(hj, t);
    let mu = coefficients.sum() + 1;
    let special = is_special(hj, t);
    let generators = if t == 0 {
        Some(vec![(0, 0)])
    } else if special {
        let u = hj.special_indices()
            .iter()
            .position(|&iu| iu == t)
            .expect("special index sits in the i-series")
            + 1;
        Some(vec![(hj.i_series()[u], 0), (0, hj.j_series()[u])])
    } else {
        None
    };
    ModuleReport {
        index: t,
        coefficients,
        mu,
        is_free: t == 0,
        is_special: special,
        is_ulrich: mu == hj.multiplicity(),
        generators,
        tau: tau(&g, t),
        dual: dual(&g, t),
    }
}

/// Reports for the special modules: the free module first, then the
/// non-free specials in ascending index order.
pub fn special_set(hj: &HjExpansion) -> Vec<ModuleReport> {
    let mut indices: Vec<i64> = hj.special_indices().to_vec();
    indices.push(0);
    indices.sort_unstable();
    indices.into_iter().map(|t| report(hj, t)).collect()
}

/// The i-series values carrying a nonzero coefficient in the decomposition
/// of t, in i-series (descending) order.
pub fn support_set(hj: &HjExpansion, t: i64) -> Vec<i64> {
    decompose(hj, t)
        .coefficients()
        .iter()
        .zip(hj.special_indices())
        .filter(|(&du, _)| du != 0)
        .map(|(_, &iu)| iu)
        .collect()
}

/// Candidate difference pairs for building Ulrich indices: (i_s, i_u) with
/// i_s in the support of n-1 and u > s, ordered by decreasing first element,
/// then decreasing second element.
pub fn ulrich_pairs(hj: &HjExpansion) -> Vec<(i64, i64)> {
    let series = hj.special_indices();
    let top_support = support_set(hj, hj.n() - 1);
    let mut pairs = Vec::new();
    for (s, &is) in series.iter().enumerate() {
        if !top_support.contains(&is) {
            continue;
        }
        for &iu in &series[s + 1..] {
            pairs.push((is, iu));
        }
    }
    pairs
}

/// A chain of difference pairs from [`ulrich_pairs`] whose consecutive
/// members interleave (each second element exceeds the next first element),
/// together with the Ulrich index n-1 - sum_c (first_c - second_c) it
/// produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairChain {
    pub pairs: Vec<(i64, i64)>,
    pub index: i64,
}

/// Every nonempty interleaved chain, depth-first with pairs visited in
/// [`ulrich_pairs`] order. Every prefix of a chain is itself a chain, so the
/// search never dead-ends.
pub fn ulrich_chains(hj: &HjExpansion) -> Vec<PairChain> {
    fn grow(
        pairs: &[(i64, i64)],
        bound: i64,
        gap: i64,
        top: i64,
        prefix: &mut Vec<(i64, i64)>,
        out: &mut Vec<PairChain>,
    ) {
        for &(first, second) in pairs {
            if first >= bound {
                continue;
            }
            let total = gap + (first - second);
            prefix.push((first, second));
            out.push(PairChain {
                pairs: prefix.clone(),
                index: top - total,
            });
            grow(pairs, second, total, top, prefix, out);
            prefix.pop();
        }
    }

    let pairs = ulrich_pairs(hj);
    let mut out = Vec::new();
    grow(&pairs, i64::MAX, 0, hj.n() - 1, &mut Vec::new(), &mut out);
    out
}

/// Ulrich indices via chain enumeration: n-1 together with the index of
/// every chain. Distinct chains always produce distinct indices; the result
/// is sorted ascending.
pub fn ulrich_set_by_chains(hj: &HjExpansion) -> Vec<i64> {
    let top = hj.n() - 1;
    let mut seen: HashSet<i64> = HashSet::new();
    seen.insert(top);
    let mut out = vec![top];
    for chain in ulrich_chains(hj) {
        assert!(
            seen.insert(chain.index),
            "distinct chains must give distinct indices, got {} twice",
            chain.index
        );
        out.push(chain.index);
    }
    out.sort_unstable();
    out
}

/// Ulrich indices by the coefficient-sum criterion, sorted ascending.
pub fn ulrich_set_by_sum(hj: &HjExpansion) -> Vec<i64> {
    (0..hj.n()).filter(|&t| is_ulrich(hj, t)).collect()
}

/// The window every Ulrich index must lie in, with its two guaranteed
/// members.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UlrichRange {
    pub lo: i64,
    pub hi: i64,
    pub witnesses: [i64; 2],
}

/// Check that every Ulrich index lies in [n-a, n-1] and that both endpoints
/// are Ulrich. A [`Error::RangeViolation`] signals an internal inconsistency
/// and must never fire.
pub fn ulrich_range_check(hj: &HjExpansion) -> Result<UlrichRange, Error> {
    let lo = hj.n() - hj.a();
    let hi = hj.n() - 1;
    for t in ulrich_set_by_sum(hj) {
        if t < lo || t > hi {
            return Err(Error::RangeViolation { index: t, lo, hi });
        }
    }
    for endpoint in [lo, hi] {
        if !is_ulrich(hj, endpoint) {
            return Err(Error::RangeViolation {
                index: endpoint,
                lo,
                hi,
            });
        }
    }
    Ok(UlrichRange {
        lo,
        hi,
        witnesses: [lo, hi],
    })
}

/// Generator census: for each m = 1, ..., e(R), the number N_m of
/// indecomposables with exactly m minimal generators.
pub fn generator_census(hj: &HjExpansion) -> BTreeMap<i64, i64> {
    let mut census: BTreeMap<i64, i64> = (1..=hj.multiplicity()).map(|m| (m, 0)).collect();
    for t in 0..hj.n() {
        *census
            .get_mut(&mu(hj, t))
            .expect("mu always lies in [1, e(R)]") += 1;
    }
    census
}

/// Bounds on the number of indecomposable Ulrich modules in terms of the
/// chain length r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UlrichCountBounds {
    /// Number of exceptional curves r.
    pub curve_count: usize,
    /// Lower bound r.
    pub lower: i64,
    /// Upper bound 2^(r-1), saturating at i64::MAX for r > 63. Saturation is
    /// harmless: the count itself is at most a < 2^31.
    pub upper: i64,
    /// The actual count N_{e(R)}.
    pub actual: i64,
    /// True exactly when alpha_u > 2 for all u = 2, ..., r-1 (vacuously for
    /// r <= 2), which is equivalent to actual = 2^(r-1).
    pub at_upper: bool,
    /// True exactly when alpha_2 = ... = alpha_{r-1} = 2 (vacuously for
    /// r <= 2), which is equivalent to actual = r.
    pub at_lower: bool,
}

pub fn ulrich_count_bounds(hj: &HjExpansion) -> UlrichCountBounds {
    let r = hj.curve_count();
    let actual = ulrich_set_by_sum(hj).len() as i64;
    let upper = if r >= 64 { i64::MAX } else { 1i64 << (r - 1) };
    let middle = if r >= 2 { &hj.alphas()[1..r - 1] } else { &[] };
    UlrichCountBounds {
        curve_count: r,
        lower: r as i64,
        upper,
        actual,
        at_upper: middle.iter().all(|&x| x > 2),
        at_lower: middle.iter().all(|&x| x == 2),
    }
}

/// Componentwise difference between the decomposition of an Ulrich index t
/// and that of n-1. Defined only for Ulrich t != n-1; entries sum to zero,
/// the first lies in {-1, 0}, the rest in {-1, 0, 1}, and the zero-free
/// subsequence alternates -1, +1, ..., -1, +1.
pub fn epsilon_signature(hj: &HjExpansion, t: i64) -> Result<Vec<i64>, Error> {
    assert_index_range(hj, t);
    if t == hj.n() - 1 || !is_ulrich(hj, t) {
        return Err(Error::NotApplicable);
    }
    let dt = decompose(hj, t);
    let dtop = decompose(hj, hj.n() - 1);
    Ok(dt
        .coefficients()
        .iter()
        .zip(dtop.coefficients())
        .map(|(&x, &y)| x - y)
        .collect())
}

/// An exact reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        Self {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Hilbert-Kunz multiplicity: the average (1/n) sum_{t=0}^{n-1} mu(M_t),
/// returned as an exact reduced fraction.
pub fn hilbert_kunz(hj: &HjExpansion) -> Fraction {
    let total: i64 = (0..hj.n()).map(|t| mu(hj, t)).sum();
    Fraction::new(total, hj.n())
}
