//! Group parameters and the Hirzebruch-Jung continued fraction.
//!
//! The cyclic group 1/n(1,a) is described by a coprime pair (n, a). Expanding
//! n/a as the continued fraction [alpha_1, ..., alpha_r] (all alpha_u >= 2)
//! yields the combinatorial backbone of the whole crate: the i-series
//! (n, a, ..., 1, 0), the mirror j-series (0, 1, ..., n), the chain dual
//! graph of the minimal resolution with self-intersections -alpha_u, and the
//! multiplicity e(R) = alpha_1 + ... + alpha_r - 2(r-1).

use crate::error::Error;

/// Largest admissible group order. Keeping n below 2^31 means products such
/// as alpha_u * i_u and the Hilbert-Kunz numerator (at most n * e(R) <= n^2)
/// fit in an i64.
pub const MAX_ORDER: i64 = 1 << 31;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// A validated pair (n, a) defining the cyclic group 1/n(1,a).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    n: i64,
    a: i64,
}

impl GroupParams {
    /// Validate (n, a): requires 2 <= n <= 2^31, 1 <= a <= n-1 and
    /// gcd(n, a) = 1. The trivial group n = 1 is rejected because the
    /// regular case degenerates every downstream formula.
    pub fn new(n: i64, a: i64) -> Result<Self, Error> {
        if !(2..=MAX_ORDER).contains(&n) || !(1..=n - 1).contains(&a) {
            return Err(Error::OutOfRange { n, a });
        }
        let g = gcd(n, a);
        if g != 1 {
            return Err(Error::NonCoprime { n, a, gcd: g });
        }
        Ok(Self { n, a })
    }

    /// Recover the group whose continued-fraction expansion is exactly
    /// `alphas`. Evaluates [alpha_1, ..., alpha_r] back-to-front with exact
    /// integer arithmetic; every sequence of coefficients >= 2 corresponds to
    /// a unique coprime pair.
    pub fn from_alphas(alphas: &[i64]) -> Result<Self, Error> {
        if alphas.is_empty() || alphas.iter().any(|&x| x < 2) {
            return Err(Error::InvalidAlphas);
        }
        // Tail value [alpha_k, ..., alpha_r] as num/den; num_k = alpha_k * num_{k+1} - den_{k+1}.
        let mut num: i64 = 1;
        let mut den: i64 = 0;
        for &alpha in alphas.iter().rev() {
            let next = alpha
                .checked_mul(num)
                .and_then(|p| p.checked_sub(den))
                .ok_or(Error::InvalidAlphas)?;
            den = num;
            num = next;
            if num > MAX_ORDER {
                return Err(Error::InvalidAlphas);
            }
        }
        Self::new(num, den)
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn a(&self) -> i64 {
        self.a
    }
}

impl std::fmt::Display for GroupParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.a)
    }
}

/// The Hirzebruch-Jung expansion of n/a together with the i- and j-series.
///
/// Invariants established by [`HjExpansion::new`]:
/// - every coefficient alpha_u >= 2;
/// - i-series strictly decreases n, a, ..., 1, 0 and the j-series strictly
///   increases 0, 1, ..., n, both driven by the same recurrence
///   s_t = alpha_{t-1} * s_{t-1} - s_{t-2};
/// - the determinant identity i_{t-1} j_t - i_t j_{t-1} = n holds for all t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HjExpansion {
    params: GroupParams,
    alphas: Vec<i64>,
    i_series: Vec<i64>,
    j_series: Vec<i64>,
}

impl HjExpansion {
    /// Expand n/a by ceiling division: alpha_t = ceil(i_{t-1} / i_t), then
    /// i_{t+1} = alpha_t * i_t - i_{t-1}. The i-values strictly decrease, so
    /// the loop terminates; the final nonzero value is gcd(n, a) = 1.
    pub fn new(params: GroupParams) -> Self {
        let (n, a) = (params.n(), params.a());
        let mut alphas = Vec::new();
        let mut i_series = vec![n, a];
        let mut prev = n;
        let mut cur = a;
        while cur > 0 {
            let alpha = (prev + cur - 1) / cur;
            let next = alpha * cur - prev;
            alphas.push(alpha);
            i_series.push(next);
            prev = cur;
            cur = next;
        }

        let mut j_series = vec![0, 1];
        for t in 2..i_series.len() {
            j_series.push(alphas[t - 2] * j_series[t - 1] - j_series[t - 2]);
        }

        debug_assert!(alphas.iter().all(|&x| x >= 2));
        debug_assert!(i_series.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(j_series.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(*i_series.last().unwrap(), 0);
        debug_assert_eq!(*j_series.last().unwrap(), n);
        debug_assert!((1..i_series.len())
            .all(|t| i_series[t - 1] * j_series[t] - i_series[t] * j_series[t - 1] == n));

        Self {
            params,
            alphas,
            i_series,
            j_series,
        }
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn n(&self) -> i64 {
        self.params.n()
    }

    pub fn a(&self) -> i64 {
        self.params.a()
    }

    /// Continued-fraction coefficients [alpha_1, ..., alpha_r].
    pub fn alphas(&self) -> &[i64] {
        &self.alphas
    }

    /// The i-series (i_0, ..., i_{r+1}) = (n, a, ..., 1, 0). Entry i_u for
    /// 1 <= u <= r is the subscript of the u-th special module.
    pub fn i_series(&self) -> &[i64] {
        &self.i_series
    }

    /// The j-series (j_0, ..., j_{r+1}) = (0, 1, ..., n). Entry j_u is the
    /// y-exponent of the second generator of the u-th special module.
    pub fn j_series(&self) -> &[i64] {
        &self.j_series
    }

    /// The inner i-series values (i_1, ..., i_r): the subscripts of the
    /// non-free special modules, one per exceptional curve.
    pub fn special_indices(&self) -> &[i64] {
        &self.i_series[1..=self.alphas.len()]
    }

    /// Expansion length r = number of exceptional curves = number of
    /// non-free special modules.
    pub fn curve_count(&self) -> usize {
        self.alphas.len()
    }

    /// Multiplicity e(R), the negated self-intersection of the fundamental
    /// cycle: alpha_1 + ... + alpha_r - 2(r-1). Always >= 2.
    pub fn multiplicity(&self) -> i64 {
        let r = self.alphas.len() as i64;
        self.alphas.iter().sum::<i64>() - 2 * (r - 1)
    }

    /// The chain dual graph of the minimal resolution.
    pub fn dual_graph(&self) -> DualGraph {
        let vertices = self
            .alphas
            .iter()
            .enumerate()
            .map(|(idx, &alpha)| DualGraphVertex {
                series_index: idx + 1,
                label: self.i_series[idx + 1],
                self_intersection: -alpha,
            })
            .collect();
        DualGraph { vertices }
    }
}

/// One exceptional curve in the resolution chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualGraphVertex {
    /// Position u in the chain, 1-based.
    pub series_index: usize,
    /// The i-series value i_u labelling the curve E_{i_u}.
    pub label: i64,
    /// Self-intersection number -alpha_u.
    pub self_intersection: i64,
}

/// Dual graph of the minimal resolution: a chain of r curves, adjacent ones
/// meeting transversally, with fundamental cycle coefficient 1 everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<DualGraphVertex>,
}

impl DualGraph {
    pub fn vertices(&self) -> &[DualGraphVertex] {
        &self.vertices
    }

    /// Chain adjacencies (u, u+1) in 1-based series indices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..self.vertices.len()).map(|u| (u, u + 1)).collect()
    }

    /// Fundamental cycle coefficients, one per vertex (all equal to 1 for a
    /// cyclic quotient).
    pub fn fundamental_cycle(&self) -> Vec<i64> {
        vec![1; self.vertices.len()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_the_order_twelve_group() {
        let g = GroupParams::new(12, 7).unwrap();
        assert_eq!((g.n(), g.a()), (12, 7));
        assert_eq!(g.to_string(), "1/12(1,7)");
    }

    #[test]
    fn rejects_non_coprime_pairs() {
        assert_eq!(
            GroupParams::new(12, 8),
            Err(Error::NonCoprime {
                n: 12,
                a: 8,
                gcd: 4
            })
        );
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        assert_eq!(GroupParams::new(1, 1), Err(Error::OutOfRange { n: 1, a: 1 }));
        assert_eq!(GroupParams::new(5, 0), Err(Error::OutOfRange { n: 5, a: 0 }));
        assert_eq!(GroupParams::new(5, 5), Err(Error::OutOfRange { n: 5, a: 5 }));
        assert!(GroupParams::new(MAX_ORDER + 1, 2).is_err());
    }

    #[test]
    fn expands_twelve_sevenths() {
        let hj = HjExpansion::new(GroupParams::new(12, 7).unwrap());
        assert_eq!(hj.alphas(), &[2, 4, 2]);
        assert_eq!(hj.i_series(), &[12, 7, 2, 1, 0]);
        assert_eq!(hj.j_series(), &[0, 1, 2, 7, 12]);
        assert_eq!(hj.multiplicity(), 4);
    }

    #[test]
    fn expands_one_fifty_eight_fifty_sevenths() {
        let hj = HjExpansion::new(GroupParams::new(158, 57).unwrap());
        assert_eq!(hj.alphas(), &[3, 5, 2, 3, 3]);
        assert_eq!(hj.i_series(), &[158, 57, 13, 8, 3, 1, 0]);
        assert_eq!(hj.multiplicity(), 8);
    }

    #[test]
    fn weight_one_gives_a_single_step() {
        let hj = HjExpansion::new(GroupParams::new(9, 1).unwrap());
        assert_eq!(hj.alphas(), &[9]);
        assert_eq!(hj.i_series(), &[9, 1, 0]);
        assert_eq!(hj.j_series(), &[0, 1, 9]);
        assert_eq!(hj.multiplicity(), 9);
    }

    #[test]
    fn weight_n_minus_one_gives_all_twos() {
        let hj = HjExpansion::new(GroupParams::new(9, 8).unwrap());
        assert_eq!(hj.alphas(), &vec![2; 8][..]);
        assert_eq!(hj.multiplicity(), 2);
    }

    #[test]
    fn multiplicity_of_the_two_vertex_example() {
        let hj = HjExpansion::new(GroupParams::new(23, 6).unwrap());
        assert_eq!(hj.alphas(), &[4, 6]);
        assert_eq!(hj.multiplicity(), 8);
    }

    #[test]
    fn from_alphas_inverts_the_expansion() {
        for (n, a) in [(12, 7), (158, 57), (23, 6), (2, 1), (9, 8)] {
            let g = GroupParams::new(n, a).unwrap();
            let hj = HjExpansion::new(g);
            assert_eq!(GroupParams::from_alphas(hj.alphas()), Ok(g));
        }
        assert_eq!(GroupParams::from_alphas(&[]), Err(Error::InvalidAlphas));
        assert_eq!(GroupParams::from_alphas(&[1, 3]), Err(Error::InvalidAlphas));
    }

    #[test]
    fn dual_graph_of_the_order_twelve_group() {
        let hj = HjExpansion::new(GroupParams::new(12, 7).unwrap());
        let graph = hj.dual_graph();
        let vs = graph.vertices();
        assert_eq!(vs.len(), 3);
        assert_eq!(
            vs.iter().map(|v| (v.label, v.self_intersection)).collect::<Vec<_>>(),
            vec![(7, -2), (2, -4), (1, -2)]
        );
        assert_eq!(graph.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(graph.fundamental_cycle(), vec![1, 1, 1]);
    }

    #[test]
    fn dual_graph_chain_shape() {
        let hj = HjExpansion::new(GroupParams::new(158, 57).unwrap());
        let graph = hj.dual_graph();
        assert_eq!(graph.vertices().len(), 5);
        assert_eq!(graph.edges().len(), 4);
        let labels: Vec<i64> = graph.vertices().iter().map(|v| v.label).collect();
        assert_eq!(labels, vec![57, 13, 8, 3, 1]);

        let single = HjExpansion::new(GroupParams::new(7, 1).unwrap());
        let graph = single.dual_graph();
        assert_eq!(graph.vertices().len(), 1);
        assert!(graph.edges().is_empty());
        assert_eq!(graph.vertices()[0].self_intersection, -7);
    }
}
