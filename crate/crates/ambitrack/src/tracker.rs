//! Multi-source tracker: a bank of particle filters on the unit sphere with
//! probabilistic data association.
//!
//! Each tracked source carries a cloud of particles following a damped
//! Langevin motion model, re-projected onto the sphere after every
//! prediction. Incoming DOA observations are associated to the sources (or
//! explained as false alarms / new sources) by enumerating the full
//! association-function space; the resulting marginals drive per-source
//! observation probabilities, particle weight updates, and track lifecycle:
//! creation when an observation is confidently unexplained, a hangover
//! before a track becomes visible, deletion after sustained silence, and
//! suppression of redundant near-duplicate tracks.

pub mod association;

use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::grid::{angular_distance, to_spherical};
use crate::localizer::Observation;

pub use association::{associate, AssociationResult};

/// Uniform density on the unit sphere, the false-alarm / new-source
/// observation model.
pub const FOUR_PI_INV: f64 = 1.0 / (4.0 * std::f64::consts::PI);

const EPS: f64 = 1e-12;

/// Tracker tuning. `new(dt)` fills every field with the defaults the rest
/// of the pipeline assumes; tests and experiments may override fields
/// directly.
#[derive(Debug, Clone, PartialEq)]
pub struct TrackerConfig {
    /// Step period, seconds (the STFT hop).
    pub dt: f64,
    /// Langevin velocity retention per step, `exp(-alpha * dt)`.
    pub a: f64,
    /// Langevin excitation per step, `beta * sqrt(1 - a^2)`.
    pub b: f64,
    /// Sphere radius, meters.
    pub r: f64,
    /// Particles per source.
    pub particles: usize,
    /// Maximum simultaneous sources.
    pub s_max: usize,
    /// Maximum observations consumed per step.
    pub q_max: usize,
    /// A source is enabled while its observed probability reaches this.
    pub enable_threshold: f64,
    /// New-source marginal required to create a track.
    pub new_source_threshold: f64,
    /// Continuous enabled time before a track becomes visible, seconds.
    pub hangover: f64,
    /// Continuous disabled time before a track is deleted, seconds.
    pub deletion_timeout: f64,
    /// Pair distance under which redundancy suppression kicks in, radians.
    pub merge_angle: f64,
    /// Existence-probability factor applied to the suppressed track.
    pub merge_factor: f64,
    /// Resample when the effective sample size drops under this fraction
    /// of the particle count.
    pub resample_fraction: f64,
    /// Base variance of the observation likelihood (squared chord length).
    pub base_variance: f64,
    /// Variance shrink per radian of velocity/displacement disagreement.
    pub velocity_factor: f64,
    /// Prior coefficient of the false-alarm hypothesis.
    pub fa_prior: f64,
    /// Prior coefficient of the new-source hypothesis.
    pub new_prior: f64,
}

impl TrackerConfig {
    /// Default damping rate of the Langevin model, 1/s.
    pub const ALPHA: f64 = 2.0;
    /// Default excitation level of the Langevin model, m/s.
    pub const BETA: f64 = 0.04;

    pub fn new(dt: f64) -> Self {
        let mut config = TrackerConfig {
            dt,
            a: 0.0,
            b: 0.0,
            r: 1.0,
            particles: 300,
            s_max: 4,
            q_max: 4,
            enable_threshold: 0.3,
            new_source_threshold: 0.8,
            hangover: 0.1,
            deletion_timeout: 0.2,
            merge_angle: 5f64.to_radians(),
            merge_factor: 0.95,
            resample_fraction: 0.7,
            base_variance: 0.008,
            velocity_factor: 0.2,
            fa_prior: 0.5,
            new_prior: 0.05,
        };
        config.set_langevin(Self::ALPHA, Self::BETA);
        config
    }

    /// Recomputes the per-step Langevin coefficients from a damping rate
    /// (1/s) and an excitation level (m/s).
    pub fn set_langevin(&mut self, alpha: f64, beta: f64) {
        self.a = (-alpha * self.dt).exp();
        self.b = beta * (1.0 - self.a * self.a).max(0.0).sqrt();
    }
}

/// One motion hypothesis of a source.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Particle {
    /// Position on the sphere of radius `r`, meters.
    pub position: Vector3<f64>,
    /// Tangential velocity, m/s.
    pub velocity: Vector3<f64>,
    /// Position before the latest prediction, used by the adaptive
    /// observation likelihood.
    pub prev_position: Vector3<f64>,
    /// Normalized weight; a source's weights sum to 1.
    pub weight: f64,
}

/// One tracked source: a particle cloud plus lifecycle state.
#[derive(Debug, Clone)]
pub struct TrackedSource {
    pub id: u64,
    pub particles: Vec<Particle>,
    /// Probability that the source was observed this frame.
    pub p_s: f64,
    /// Probability that the source exists.
    pub p_exist: f64,
    /// Probability that the source is currently active (e.g. speaking).
    pub p_act: f64,
    /// This frame's observability, `p_exist * p_act`.
    pub p_obs: f64,
    pub enabled: bool,
    /// Start of the current continuous enabled stretch, seconds.
    pub enabled_since: f64,
    /// Start of the current continuous disabled stretch, seconds.
    pub disabled_since: f64,
    /// Emitted in output frames once enabled long enough.
    pub visible: bool,
    created_at: f64,
}

impl TrackedSource {
    /// Creates a source from one confident observation: every particle sits
    /// at the observed point with zero velocity and uniform weight.
    pub fn spawn(
        id: u64,
        position: &Vector3<f64>,
        p_new: f64,
        now: f64,
        particle_count: usize,
    ) -> Self {
        let particle = Particle {
            position: *position,
            velocity: Vector3::zeros(),
            prev_position: *position,
            weight: 1.0 / particle_count as f64,
        };
        TrackedSource {
            id,
            particles: vec![particle; particle_count],
            p_s: p_new,
            p_exist: p_new,
            p_act: 0.5,
            p_obs: p_new * 0.5,
            enabled: true,
            enabled_since: now,
            disabled_since: now,
            visible: false,
            created_at: now,
        }
    }

    /// Weight-averaged particle position, normalized to a unit direction.
    pub fn estimate(&self) -> Vector3<f64> {
        let mean: Vector3<f64> = self
            .particles
            .iter()
            .map(|p| p.weight * p.position)
            .sum();
        let norm = mean.norm();
        if norm > EPS {
            mean / norm
        } else {
            // Degenerate cloud (weights balancing antipodal points); any
            // deterministic direction will do.
            self.particles[0].position.normalize()
        }
    }

    /// Length of the current continuous enabled stretch, or 0 if disabled.
    fn enabled_streak(&self, now: f64) -> f64 {
        if self.enabled {
            now - self.enabled_since
        } else {
            0.0
        }
    }
}

/// Advances every particle one step: damped velocity plus Gaussian
/// excitation, position pushed along the velocity, then re-projected to the
/// sphere with the velocity made tangential again.
pub fn predict_source<R: Rng>(source: &mut TrackedSource, config: &TrackerConfig, rng: &mut R) {
    for particle in &mut source.particles {
        let noise = Vector3::new(
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
            rng.sample::<f64, _>(StandardNormal),
        );
        particle.velocity = config.a * particle.velocity + config.b * noise;
        particle.prev_position = particle.position;
        particle.position += config.dt * particle.velocity;
        let norm = particle.position.norm();
        if norm > EPS {
            particle.position *= config.r / norm;
        } else {
            particle.position = particle.prev_position;
        }
        let radial = particle.velocity.dot(&particle.position) / (config.r * config.r);
        particle.velocity -= radial * particle.position;
    }
}

/// Isotropic Gaussian density of an observation around a particle's
/// predicted position. The variance adapts to how well the observation's
/// displacement from the particle's previous position agrees with the
/// particle velocity: agreement (angle 0) keeps the base variance,
/// disagreement shrinks it, and degenerate velocity or displacement falls
/// back to a right angle.
pub fn observation_likelihood(
    particle: &Particle,
    observation: &Vector3<f64>,
    config: &TrackerConfig,
) -> f64 {
    let displacement = observation - particle.prev_position;
    let speed = particle.velocity.norm();
    let reach = displacement.norm();
    let angle = if speed < 1e-9 || reach < 1e-9 {
        std::f64::consts::FRAC_PI_2
    } else {
        (particle.velocity.dot(&displacement) / (speed * reach))
            .clamp(-1.0, 1.0)
            .acos()
    };
    let variance = config.base_variance / (1.0 + config.velocity_factor * angle);
    let offset = observation - particle.position;
    (2.0 * std::f64::consts::PI * variance).powf(-1.5)
        * (-offset.norm_squared() / (2.0 * variance)).exp()
}

/// Advances the source's existence/activity recursions from the previous
/// frame's values and returns the resulting observability `P_obs`, the
/// probability the source produces an observation this frame.
pub fn observability(source: &mut TrackedSource, _config: &TrackerConfig) -> f64 {
    let prev_s = source.p_s;
    let prev_exist = source.p_exist;
    let prev_act = source.p_act;

    let exist = prev_s + (1.0 - prev_s) * (0.5 * prev_exist) / (1.0 - 0.5 * prev_exist);
    let instantaneous = 0.15 + 0.85 * prev_s;
    let denom = (prev_act * instantaneous + (1.0 - prev_act) * (1.0 - instantaneous)).max(EPS);
    let combined = prev_act * instantaneous / denom;
    let act = 0.4 * combined + 0.3;

    source.p_exist = exist.clamp(0.0, 1.0);
    source.p_act = act.clamp(0.0, 1.0);
    source.p_obs = source.p_exist * source.p_act;
    source.p_obs
}

/// Sets the source's observed probability (mean per-observation marginal),
/// flips the enabled flag on the 0.3 threshold, and maintains the streak
/// timers.
pub fn update_source_probability(
    source: &mut TrackedSource,
    assoc: &AssociationResult,
    source_index: usize,
    now: f64,
    config: &TrackerConfig,
) {
    let q_count = assoc.observations();
    source.p_s = if q_count == 0 {
        0.0
    } else {
        (0..q_count)
            .map(|q| assoc.p_source(q, source_index))
            .sum::<f64>()
            / q_count as f64
    };
    let enabled = source.p_s >= config.enable_threshold;
    if enabled && !source.enabled {
        source.enabled_since = now;
    }
    if !enabled && source.enabled {
        source.disabled_since = now;
    }
    source.enabled = enabled;
}

/// Reweights the particles: a mixture of a uniform survival term
/// `(1 - P_s)/P` and the observation-driven term that distributes `P_s`
/// over particles proportionally to their marginal-weighted observation
/// densities. New weights are the densities times the previous weights,
/// renormalized.
pub fn update_weights(
    source: &mut TrackedSource,
    assoc: &AssociationResult,
    source_index: usize,
    observations: &[Observation],
    config: &TrackerConfig,
) {
    let count = source.particles.len();
    let uniform = 1.0 / count as f64;
    let p_s = source.p_s;

    let mut numerators = vec![0.0f64; count];
    let mut denom = 0.0;
    for (i, particle) in source.particles.iter().enumerate() {
        let mut acc = 0.0;
        for (q, obs) in observations.iter().enumerate() {
            acc += assoc.p_source(q, source_index)
                * observation_likelihood(particle, &obs.direction, config);
        }
        numerators[i] = acc;
        denom += acc;
    }

    let mut total = 0.0;
    for (particle, numer) in source.particles.iter_mut().zip(&numerators) {
        let density = if denom > EPS {
            uniform * (1.0 - p_s) + p_s * numer / denom
        } else {
            // No observation retains any density here: keep the cloud.
            uniform
        };
        particle.weight *= density;
        total += particle.weight;
    }
    if total > 0.0 {
        for particle in &mut source.particles {
            particle.weight /= total;
        }
    } else {
        for particle in &mut source.particles {
            particle.weight = uniform;
        }
    }
}

/// Systematic resampling, triggered only when the effective sample size
/// `1 / sum(w^2)` falls under the configured fraction of the particle
/// count. Returns whether a resample happened; afterwards all weights are
/// uniform.
pub fn resample<R: Rng>(source: &mut TrackedSource, config: &TrackerConfig, rng: &mut R) -> bool {
    let count = source.particles.len();
    let ess = 1.0
        / source
            .particles
            .iter()
            .map(|p| p.weight * p.weight)
            .sum::<f64>();
    if ess >= config.resample_fraction * count as f64 {
        return false;
    }

    let offset = rng.random::<f64>() / count as f64;
    let uniform = 1.0 / count as f64;
    let mut resampled = Vec::with_capacity(count);
    let mut cursor = 0usize;
    let mut cumulative = source.particles[0].weight;
    for i in 0..count {
        let point = offset + i as f64 * uniform;
        while point > cumulative && cursor + 1 < count {
            cursor += 1;
            cumulative += source.particles[cursor].weight;
        }
        resampled.push(Particle {
            weight: uniform,
            ..source.particles[cursor]
        });
    }
    source.particles = resampled;
    true
}

/// Greedy closest-pair redundancy suppression: pairs every source with its
/// nearest unpaired peer, and within pairs closer than the merge angle
/// penalizes the existence probability of the source with the shorter
/// enabled streak (ties penalize the higher id).
pub fn suppress_redundant(sources: &mut [TrackedSource], now: f64, config: &TrackerConfig) {
    let n = sources.len();
    if n < 2 {
        return;
    }
    let estimates: Vec<Vector3<f64>> = sources.iter().map(|s| s.estimate()).collect();
    let mut pairs: Vec<(f64, usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((angular_distance(&estimates[i], &estimates[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .expect("angular distances are finite")
            .then(a.1.cmp(&b.1))
            .then(a.2.cmp(&b.2))
    });

    let mut used = vec![false; n];
    for (distance, i, j) in pairs {
        if used[i] || used[j] {
            continue;
        }
        used[i] = true;
        used[j] = true;
        if distance < config.merge_angle {
            let si = sources[i].enabled_streak(now);
            let sj = sources[j].enabled_streak(now);
            let loser = if si < sj {
                i
            } else if sj < si {
                j
            } else if sources[i].id > sources[j].id {
                i
            } else {
                j
            };
            sources[loser].p_exist *= config.merge_factor;
        }
    }
}

/// One visible source in an output frame.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrackEstimate {
    pub id: u64,
    pub azimuth_deg: f64,
    pub elevation_deg: f64,
    /// Activity probability of the source at this frame.
    pub activity: f64,
}

/// Tracker output for one hop: the visible sources at time `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrackFrame {
    /// Frame time, seconds.
    pub t: f64,
    pub sources: Vec<TrackEstimate>,
}

/// The tracker state machine, advanced once per hop.
#[derive(Debug, Clone)]
pub struct Tracker {
    config: TrackerConfig,
    sources: Vec<TrackedSource>,
    next_id: u64,
    rng: ChaCha8Rng,
}

impl Tracker {
    pub fn new(config: TrackerConfig, seed: u64) -> Self {
        Tracker {
            config,
            sources: Vec::new(),
            next_id: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn config(&self) -> &TrackerConfig {
        &self.config
    }

    /// Current tracks, in creation order.
    pub fn sources(&self) -> &[TrackedSource] {
        &self.sources
    }

    /// Advances the tracker by one hop ending at time `now` and returns the
    /// visible-source estimates. Observations beyond the configured cap are
    /// ignored (the localizer emits them sorted by score, so the strongest
    /// survive).
    pub fn step(&mut self, observations: &[Observation], now: f64) -> TrackFrame {
        let observations = &observations[..observations.len().min(self.config.q_max)];

        for source in &mut self.sources {
            predict_source(source, &self.config, &mut self.rng);
        }
        for source in &mut self.sources {
            observability(source, &self.config);
        }

        let assoc = associate(&self.sources, observations, &self.config);

        for (s, source) in self.sources.iter_mut().enumerate() {
            update_source_probability(source, &assoc, s, now, &self.config);
        }
        for (s, source) in self.sources.iter_mut().enumerate() {
            update_weights(source, &assoc, s, observations, &self.config);
        }
        for source in &mut self.sources {
            resample(source, &self.config, &mut self.rng);
        }

        for (q, obs) in observations.iter().enumerate() {
            if assoc.p_new(q) >= self.config.new_source_threshold {
                let source = TrackedSource::spawn(
                    self.next_id,
                    &(obs.direction * self.config.r),
                    assoc.p_new(q),
                    now,
                    self.config.particles,
                );
                self.next_id += 1;
                self.sources.push(source);
            }
        }
        self.prune_excess();

        let timeout = self.config.deletion_timeout;
        self.sources
            .retain(|s| s.enabled || now - s.disabled_since < timeout);

        suppress_redundant(&mut self.sources, now, &self.config);

        let mut frame = TrackFrame {
            t: now,
            sources: Vec::new(),
        };
        for source in &mut self.sources {
            source.visible =
                source.enabled && now - source.enabled_since >= self.config.hangover;
            if source.visible {
                let direction = source.estimate();
                let (azimuth, elevation) = to_spherical(&direction);
                frame.sources.push(TrackEstimate {
                    id: source.id,
                    azimuth_deg: azimuth.to_degrees(),
                    elevation_deg: elevation.to_degrees(),
                    activity: source.p_act,
                });
            }
        }
        frame
    }

    /// Keeps at most `s_max` sources, dropping the lowest observed
    /// probability first; on ties the older source survives.
    fn prune_excess(&mut self) {
        while self.sources.len() > self.config.s_max {
            let mut worst = 0;
            for i in 1..self.sources.len() {
                let (a, b) = (&self.sources[i], &self.sources[worst]);
                let worse = a.p_s < b.p_s
                    || (a.p_s == b.p_s
                        && (a.created_at > b.created_at
                            || (a.created_at == b.created_at && a.id > b.id)));
                if worse {
                    worst = i;
                }
            }
            self.sources.remove(worst);
        }
    }
}
