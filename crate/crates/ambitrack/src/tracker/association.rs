//! Probabilistic data association between DOA observations and tracked
//! sources.
//!
//! Every assignment of the Q observations to {false alarm, new source,
//! source 0, ..., source S-1} is one association function; all (S+2)^Q of
//! them are enumerated literally and scored as a product of independent
//! per-observation terms. Normalizing over the whole function space and
//! summing per observation yields the posterior marginals, which downstream
//! stages consume: the per-source marginals drive weight updates and the
//! observed-probability P_s, while the new-source marginal gates track
//! creation. Observations never share a source *within one function*, they
//! simply pick one explanation each; several observations may still select
//! the same source in a given function, and such functions are scored like
//! any other.

use crate::localizer::Observation;

use super::{observation_likelihood, TrackedSource, TrackerConfig, FOUR_PI_INV};

/// Posterior association marginals, one row per observation.
///
/// For every observation q: `fa[q] + new[q] + sum(source[q])` is 1 (up to
/// rounding) whenever at least one observation is present.
#[derive(Debug, Clone, PartialEq)]
pub struct AssociationResult {
    /// P(observation q is a false alarm).
    pub fa: Vec<f64>,
    /// P(observation q originates from a source not yet tracked).
    pub new: Vec<f64>,
    /// P(observation q originates from tracked source s), indexed [q][s].
    pub source: Vec<Vec<f64>>,
}

impl AssociationResult {
    /// Result for a frame with no observations.
    pub fn empty() -> Self {
        AssociationResult {
            fa: Vec::new(),
            new: Vec::new(),
            source: Vec::new(),
        }
    }

    /// Number of observations this result covers.
    pub fn observations(&self) -> usize {
        self.fa.len()
    }

    pub fn p_fa(&self, q: usize) -> f64 {
        self.fa[q]
    }

    pub fn p_new(&self, q: usize) -> f64 {
        self.new[q]
    }

    pub fn p_source(&self, q: usize, s: usize) -> f64 {
        self.source[q][s]
    }
}

/// Enumerates all (S+2)^Q association functions and returns the posterior
/// marginals per observation.
///
/// Per-observation scores: a false alarm contributes prior `0.5(1 - P_q)`
/// at the uniform spherical density `1/4pi`; a new source contributes prior
/// `0.05 P_q` at the same density; tracked source s contributes prior
/// `P_q * P_obs(s)` at the source's predictive density (its particle
/// mixture evaluated at the observation). A function's score is the product
/// over observations, and marginals are sums of normalized function scores.
pub fn associate(
    sources: &[TrackedSource],
    observations: &[Observation],
    config: &TrackerConfig,
) -> AssociationResult {
    assert!(
        observations.len() <= config.q_max,
        "observation count exceeds the configured cap"
    );
    assert!(
        sources.len() <= config.s_max,
        "source count exceeds the configured cap"
    );
    let q_count = observations.len();
    if q_count == 0 {
        return AssociationResult::empty();
    }
    let s_count = sources.len();
    let cases = s_count + 2;

    // Per-observation score of each assignment case: prior times density.
    // Case 0 is false alarm, case 1 is new source, case 2+s is source s.
    let mut table = vec![vec![0.0f64; cases]; q_count];
    for (q, obs) in observations.iter().enumerate() {
        let p_q = obs.score;
        table[q][0] = config.fa_prior * (1.0 - p_q) * FOUR_PI_INV;
        table[q][1] = config.new_prior * p_q * FOUR_PI_INV;
        for (s, src) in sources.iter().enumerate() {
            let predictive: f64 = src
                .particles
                .iter()
                .map(|p| p.weight * observation_likelihood(p, &obs.direction, config))
                .sum();
            table[q][2 + s] = p_q * src.p_obs * predictive;
        }
    }

    // Literal enumeration, one mixed-radix digit per observation.
    let function_count = cases.pow(q_count as u32);
    let mut marginal = vec![vec![0.0f64; cases]; q_count];
    let mut assignment = vec![0usize; q_count];
    let mut normalizer = 0.0;
    for m in 0..function_count {
        let mut digits = m;
        let mut score = 1.0;
        for q in 0..q_count {
            let case = digits % cases;
            digits /= cases;
            assignment[q] = case;
            score *= table[q][case];
        }
        normalizer += score;
        for q in 0..q_count {
            marginal[q][assignment[q]] += score;
        }
    }
    debug_assert!(normalizer > 0.0, "facing an impossible observation set");

    let mut result = AssociationResult {
        fa: vec![0.0; q_count],
        new: vec![0.0; q_count],
        source: vec![vec![0.0; s_count]; q_count],
    };
    for q in 0..q_count {
        result.fa[q] = marginal[q][0] / normalizer;
        result.new[q] = marginal[q][1] / normalizer;
        for s in 0..s_count {
            result.source[q][s] = marginal[q][2 + s] / normalizer;
        }
    }
    result
}
