//! Brute-force verification from the monomial description alone.
//!
//! M_t is spanned by the monomials x^i y^j with i + j*a = t (mod n). The
//! computation functions in this module read minimal generators straight off
//! that congruence and never touch the continued-fraction machinery, so
//! agreement with [`crate::classify`] is a genuine cross-check rather than a
//! tautology. [`cross_check`] runs the full comparison for one group and
//! reports every mismatch it finds.

use crate::classify;
use crate::hj::{GroupParams, HjExpansion};

/// Minimal monomial generators of one module as exponent pairs (i, j).
///
/// The set is an antichain under componentwise divisibility and every
/// lattice point of the congruence class dominates one of its members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialGeneratorSet {
    pub index: i64,
    pub generators: Vec<(i64, i64)>,
}

/// Staircase method: walk j = 0, 1, 2, ... and record (i(j), j) with
/// i(j) = (t - j*a) mod n whenever i(j) is a strict new minimum; stop after
/// recording the i-value 0. Each column's minimal exponent is i(j), so the
/// records are exactly the minimal generators. The walk visits at most n
/// columns because (t - j*a) mod n is n-periodic and hits 0 once per period.
pub fn minimal_generators(g: &GroupParams, t: i64) -> MonomialGeneratorSet {
    let (n, a) = (g.n(), g.a());
    assert!((0..n).contains(&t), "module index {t} outside [0, {n})");
    let mut generators = Vec::new();
    let mut best = i64::MAX;
    for j in 0..n {
        let i = (t - j * a).rem_euclid(n);
        if i < best {
            generators.push((i, j));
            best = i;
            if i == 0 {
                break;
            }
        }
    }
    MonomialGeneratorSet { index: t, generators }
}

/// Naive method: list every congruence-class point in the box [0, n-1]^2 and
/// strip the dominated ones by pairwise comparison. Slower than the
/// staircase but with no shared reasoning; the two must agree.
pub fn minimal_generators_naive(g: &GroupParams, t: i64) -> MonomialGeneratorSet {
    let (n, a) = (g.n(), g.a());
    assert!((0..n).contains(&t), "module index {t} outside [0, {n})");
    let mut points = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if (i + j * a).rem_euclid(n) == t {
                points.push((i, j));
            }
        }
    }
    let mut generators: Vec<(i64, i64)> = points
        .iter()
        .filter(|&&(i, j)| {
            !points
                .iter()
                .any(|&(pi, pj)| (pi, pj) != (i, j) && pi <= i && pj <= j)
        })
        .copied()
        .collect();
    generators.sort_unstable_by_key(|&(_, j)| j);
    MonomialGeneratorSet { index: t, generators }
}

/// Number of minimal generators of M_t, read off the staircase.
pub fn mu(g: &GroupParams, t: i64) -> i64 {
    minimal_generators(g, t).generators.len() as i64
}

/// Multiplicity e(R) as the maximum of mu over all modules. This is exact
/// because mu <= e always and an indecomposable Ulrich module attains the
/// bound in dimension two.
pub fn multiplicity(g: &GroupParams) -> i64 {
    (0..g.n()).map(|t| mu(g, t)).max().expect("n >= 2")
}

/// Indices attaining the maximal generator count, sorted ascending.
pub fn ulrich_set(g: &GroupParams) -> Vec<i64> {
    let counts: Vec<i64> = (0..g.n()).map(|t| mu(g, t)).collect();
    let top = *counts.iter().max().expect("n >= 2");
    (0..g.n()).filter(|&t| counts[t as usize] == top).collect()
}

/// One failed comparison inside a [`CheckReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub check: &'static str,
    pub detail: String,
}

/// Outcome of [`cross_check`]: the group examined and every mismatch found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub n: i64,
    pub a: i64,
    pub failures: Vec<CheckFailure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            write!(f, "1/{}(1,{}): all checks passed", self.n, self.a)
        } else {
            writeln!(
                f,
                "1/{}(1,{}): {} check(s) failed",
                self.n,
                self.a,
                self.failures.len()
            )?;
            for failure in &self.failures {
                writeln!(f, "  [{}] {}", failure.check, failure.detail)?;
            }
            Ok(())
        }
    }
}

/// Compare the classification against the oracle and validate every
/// structural invariant for one group. Mismatches become report entries,
/// never panics.
pub fn cross_check(g: &GroupParams) -> CheckReport {
    let hj = HjExpansion::new(*g);
    let n = g.n();
    let e = hj.multiplicity();
    let mut failures = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        failures.push(CheckFailure { check, detail });
    };

    // Generator counts, one index at a time.
    let oracle_mu: Vec<i64> = (0..n).map(|t| mu(g, t)).collect();
    for t in 0..n {
        let claimed = classify::mu(&hj, t);
        if claimed != oracle_mu[t as usize] {
            fail(
                "mu",
                format!("t = {t}: classified {claimed}, oracle {}", oracle_mu[t as usize]),
            );
        }
    }

    // Antichain structure of each staircase.
    for t in 0..n {
        let gens = minimal_generators(g, t).generators;
        let antichain = gens.iter().all(|&(i, j)| {
            !gens
                .iter()
                .any(|&(pi, pj)| (pi, pj) != (i, j) && pi <= i && pj <= j)
        });
        if !antichain {
            fail("antichain", format!("t = {t}: {gens:?}"));
        }
    }

    // Staircase vs naive box stripping, affordable for small orders.
    if n <= 60 {
        for t in 0..n {
            let fast = minimal_generators(g, t);
            let naive = minimal_generators_naive(g, t);
            if fast != naive {
                fail(
                    "staircase_naive",
                    format!("t = {t}: staircase {:?}, naive {:?}", fast.generators, naive.generators),
                );
            }
        }
    }

    // Closed-form generators of the special modules.
    for rep in classify::special_set(&hj) {
        let observed = minimal_generators(g, rep.index).generators;
        let expected = rep.generators.clone().unwrap_or_default();
        if observed != expected {
            fail(
                "special_generators",
                format!("t = {}: expected {expected:?}, oracle {observed:?}", rep.index),
            );
        }
    }

    // Multiplicity.
    let oracle_e = multiplicity(g);
    if e != oracle_e {
        fail("multiplicity", format!("classified {e}, oracle {oracle_e}"));
    }

    // The three Ulrich routes.
    let by_sum = classify::ulrich_set_by_sum(&hj);
    let by_chains = classify::ulrich_set_by_chains(&hj);
    let by_oracle = ulrich_set(g);
    if by_sum != by_chains {
        fail(
            "ulrich_sets",
            format!("sum criterion {by_sum:?} != chain enumeration {by_chains:?}"),
        );
    }
    if by_sum != by_oracle {
        fail(
            "ulrich_sets",
            format!("sum criterion {by_sum:?} != oracle {by_oracle:?}"),
        );
    }

    // Admissible sequences biject onto the module indices.
    let seqs = classify::enumerate_valid_sequences(&hj);
    if seqs.len() as i64 != n {
        fail("bijection", format!("{} sequences for order {n}", seqs.len()));
    }
    let mut values = Vec::with_capacity(seqs.len());
    for d in &seqs {
        match classify::recompose(&hj, d.coefficients()) {
            Ok(t) => {
                values.push(t);
                if classify::decompose(&hj, t) != *d {
                    fail("bijection", format!("decompose(recompose) moved {d:?}"));
                }
            }
            Err(err) => fail("bijection", format!("enumerated sequence rejected: {err}")),
        }
    }
    values.sort_unstable();
    if values != (0..n).collect::<Vec<_>>() {
        fail("bijection", "recompose image is not [0, n-1]".to_string());
    }

    // mu bounds: 1 <= mu <= e, mu = 1 only for the free module, mu = 2 on
    // each non-free special.
    for t in 0..n {
        let m = classify::mu(&hj, t);
        if !(1..=e).contains(&m) {
            fail("mu_bounds", format!("t = {t}: mu = {m} outside [1, {e}]"));
        }
        if (m == 1) != (t == 0) {
            fail("mu_bounds", format!("t = {t}: mu = 1 must mark exactly the free module"));
        }
    }
    for &iu in hj.special_indices() {
        let m = classify::mu(&hj, iu);
        if m != 2 {
            fail("mu_bounds", format!("special t = {iu}: mu = {m}, want 2"));
        }
    }

    // Ulrich window [n-a, n-1] with both endpoints attained.
    if let Err(err) = classify::ulrich_range_check(&hj) {
        fail("ulrich_range", err.to_string());
    }

    // Dual and AR translation of every non-free special are Ulrich.
    for &iu in hj.special_indices() {
        let d = classify::dual(g, iu);
        let s = classify::tau(g, iu);
        if !classify::is_ulrich(&hj, d) {
            fail("special_duality", format!("dual({iu}) = {d} is not Ulrich"));
        }
        if !classify::is_ulrich(&hj, s) {
            fail("special_duality", format!("tau({iu}) = {s} is not Ulrich"));
        }
    }

    // Multiplicity trichotomy.
    let neither = (0..n)
        .filter(|&t| !classify::is_special(&hj, t) && !classify::is_ulrich(&hj, t))
        .count();
    match e {
        2 => {
            let both = (1..n)
                .all(|t| classify::is_special(&hj, t) && classify::is_ulrich(&hj, t));
            if !both {
                fail("trichotomy", "e = 2: every non-free module must be special and Ulrich".into());
            }
        }
        3 => {
            let partition = (0..n)
                .all(|t| classify::is_special(&hj, t) != classify::is_ulrich(&hj, t));
            if !partition {
                fail("trichotomy", "e = 3: special and Ulrich must partition the modules".into());
            }
        }
        _ => {
            if neither == 0 {
                fail("trichotomy", format!("e = {e} > 3: expected a module that is neither"));
            }
        }
    }

    // Census: every generator count between 1 and e occurs; totals add up.
    let census = classify::generator_census(&hj);
    if census.values().sum::<i64>() != n {
        fail("census", format!("census sums to {}, want {n}", census.values().sum::<i64>()));
    }
    for m in 1..=e {
        if census.get(&m).copied().unwrap_or(0) < 1 {
            fail("census", format!("no module with {m} generators"));
        }
    }
    if census.get(&1).copied().unwrap_or(0) != 1 {
        fail("census", "exactly one module (the free one) has a single generator".into());
    }

    // Ulrich count bounds and both equality conditions.
    let bounds = classify::ulrich_count_bounds(&hj);
    if bounds.actual != by_sum.len() as i64 {
        fail("count_bounds", "actual disagrees with the Ulrich set size".into());
    }
    if census.get(&e).copied().unwrap_or(0) != bounds.actual {
        fail("count_bounds", "census top count disagrees with the Ulrich count".into());
    }
    if bounds.actual < bounds.lower || bounds.actual > bounds.upper.min(g.a()) {
        fail(
            "count_bounds",
            format!(
                "N = {} outside [{}, min({}, {})]",
                bounds.actual, bounds.lower, bounds.upper, g.a()
            ),
        );
    }
    if (bounds.actual == bounds.upper) != bounds.at_upper {
        fail("count_bounds", "upper equality flag disagrees with the count".into());
    }
    if (bounds.actual == bounds.lower) != bounds.at_lower {
        fail("count_bounds", "lower equality flag disagrees with the count".into());
    }

    // Signature structure for every Ulrich index below n-1.
    for &t in by_sum.iter().filter(|&&t| t != n - 1) {
        match classify::epsilon_signature(&hj, t) {
            Ok(eps) => {
                if !matches!(eps.first(), Some(-1) | Some(0)) {
                    fail("epsilon", format!("t = {t}: first entry {:?}", eps.first()));
                }
                if eps.iter().any(|&x| !(-1..=1).contains(&x)) {
                    fail("epsilon", format!("t = {t}: entry outside {{-1,0,1}} in {eps:?}"));
                }
                if eps.iter().sum::<i64>() != 0 {
                    fail("epsilon", format!("t = {t}: entries of {eps:?} do not sum to 0"));
                }
                let signs: Vec<i64> = eps.iter().copied().filter(|&x| x != 0).collect();
                let alternates = signs.first() == Some(&-1)
                    && signs.last() == Some(&1)
                    && signs.windows(2).all(|w| w[0] != w[1]);
                if !alternates {
                    fail("epsilon", format!("t = {t}: zero-free part of {eps:?} is not -1,+1,...,-1,+1"));
                }
            }
            Err(err) => fail("epsilon", format!("t = {t}: unexpected {err}")),
        }
    }

    CheckReport {
        n,
        a: g.a(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_generators_match_the_worked_examples() {
        let g = GroupParams::new(12, 7).unwrap();
        assert_eq!(minimal_generators(&g, 7).generators, vec![(7, 0), (0, 1)]);
        assert_eq!(minimal_generators(&g, 0).generators, vec![(0, 0)]);
        assert_eq!(
            minimal_generators(&g, 5).generators,
            vec![(5, 0), (3, 2), (1, 4), (0, 11)]
        );
    }

    #[test]
    fn weight_one_counts_climb_by_one() {
        let g = GroupParams::new(9, 1).unwrap();
        for t in 0..9 {
            assert_eq!(mu(&g, t), t + 1);
        }
    }

    #[test]
    fn multiplicity_and_argmax() {
        let g = GroupParams::new(12, 7).unwrap();
        assert_eq!(multiplicity(&g), 4);
        assert_eq!(ulrich_set(&g), vec![5, 6, 10, 11]);

        let g = GroupParams::new(23, 6).unwrap();
        assert_eq!(multiplicity(&g), 8);
        assert_eq!(ulrich_set(&g), vec![17, 22]);
    }

    #[test]
    fn staircase_agrees_with_naive_for_small_orders() {
        for n in 2..=60 {
            for a in 1..n {
                if crate::hj::gcd(n, a) != 1 {
                    continue;
                }
                let g = GroupParams::new(n, a).unwrap();
                for t in 0..n {
                    assert_eq!(
                        minimal_generators(&g, t),
                        minimal_generators_naive(&g, t),
                        "1/{n}(1,{a}), t = {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn generators_cover_their_congruence_class() {
        // Every class point with exponents up to 2n dominates some generator.
        for (n, a) in [(12, 7), (23, 6), (9, 8)] {
            let g = GroupParams::new(n, a).unwrap();
            for t in 0..n {
                let gens = minimal_generators(&g, t).generators;
                for i in 0..2 * n {
                    for j in 0..2 * n {
                        if (i + j * a).rem_euclid(n) != t {
                            continue;
                        }
                        assert!(
                            gens.iter().any(|&(gi, gj)| gi <= i && gj <= j),
                            "1/{n}(1,{a}): point ({i},{j}) of class {t} dominates no generator"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cross_check_passes_on_the_worked_examples() {
        for (n, a) in [(12, 7), (158, 57), (23, 6), (2, 1), (9, 8), (30, 11)] {
            let report = cross_check(&GroupParams::new(n, a).unwrap());
            assert!(report.passed(), "1/{n}(1,{a}): {report}");
        }
    }

    #[test]
    fn cross_check_ulrich_count_for_the_large_example() {
        let report = cross_check(&GroupParams::new(158, 57).unwrap());
        assert!(report.passed());
        assert_eq!(ulrich_set(&GroupParams::new(158, 57).unwrap()).len(), 12);
    }
}
