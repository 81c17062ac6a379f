//! Spherical direction dictionary: the embedded 974-node Lebedev point set
//! with precomputed nearest-neighbor lists.
//!
//! The grid quantizes instantaneous direction estimates and carries the
//! direction histogram. Quadrature weights of the underlying point set are
//! irrelevant here — only the near-uniform node directions are used.

use nalgebra::Vector3;

use crate::grid_table::LEBEDEV_974;

/// One grid node: unit direction plus its spherical coordinates
/// (azimuth in (-pi, pi], elevation in [-pi/2, pi/2]).
#[derive(Debug, Clone, PartialEq)]
pub struct GridNode {
    pub direction: Vector3<f64>,
    pub azimuth: f64,
    pub elevation: f64,
}

/// Immutable spherical grid with per-node neighbor lists (the `support`
/// nearest nodes by angular distance, self included, sorted nearest-first).
#[derive(Debug, Clone)]
pub struct SphericalGrid {
    nodes: Vec<GridNode>,
    neighbors: Vec<Vec<u32>>,
    support: usize,
}

/// Angle in radians between two unit vectors, in [0, pi].
pub fn angular_distance(a: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
    a.dot(b).clamp(-1.0, 1.0).acos()
}

/// Azimuth/elevation of a direction vector (not necessarily unit length).
pub fn to_spherical(direction: &Vector3<f64>) -> (f64, f64) {
    let azimuth = direction.y.atan2(direction.x);
    let norm = direction.norm();
    let elevation = if norm > 0.0 {
        (direction.z / norm).clamp(-1.0, 1.0).asin()
    } else {
        0.0
    };
    (azimuth, elevation)
}

/// Unit vector for an azimuth/elevation pair.
pub fn from_spherical(azimuth: f64, elevation: f64) -> Vector3<f64> {
    Vector3::new(
        azimuth.cos() * elevation.cos(),
        azimuth.sin() * elevation.cos(),
        elevation.sin(),
    )
}

impl SphericalGrid {
    /// The standard grid: 974 nodes, 50-nearest-node neighbor lists.
    pub fn lebedev974() -> Self {
        SphericalGrid::lebedev974_with_support(50)
    }

    /// Same nodes with a custom neighbor-list length (clamped to the node
    /// count; must be >= 1).
    pub fn lebedev974_with_support(support: usize) -> Self {
        let support = support.clamp(1, LEBEDEV_974.len());
        let nodes: Vec<GridNode> = LEBEDEV_974
            .iter()
            .map(|&[x, y, z]| {
                let direction = Vector3::new(x, y, z);
                let (azimuth, elevation) = to_spherical(&direction);
                GridNode {
                    direction,
                    azimuth,
                    elevation,
                }
            })
            .collect();

        // Sort candidates by (distance, index): the index tie-break makes
        // neighbor lists deterministic despite the point set's symmetries
        // producing many exactly equal distances.
        let neighbors = nodes
            .iter()
            .map(|node| {
                let mut order: Vec<(f64, u32)> = nodes
                    .iter()
                    .enumerate()
                    .map(|(j, other)| {
                        (angular_distance(&node.direction, &other.direction), j as u32)
                    })
                    .collect();
                order.sort_by(|a, b| a.partial_cmp(b).expect("distances are finite"));
                order.truncate(support);
                order.into_iter().map(|(_, j)| j).collect()
            })
            .collect();

        SphericalGrid {
            nodes,
            neighbors,
            support,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn support(&self) -> usize {
        self.support
    }

    pub fn node(&self, index: usize) -> &GridNode {
        &self.nodes[index]
    }

    pub fn nodes(&self) -> &[GridNode] {
        &self.nodes
    }

    /// The `support` nearest nodes to `index` (self first).
    pub fn neighbors(&self, index: usize) -> &[u32] {
        &self.neighbors[index]
    }

    /// Index of the node nearest to `direction` (exhaustive scan; ties
    /// resolve to the lowest index). `direction` need not be unit length.
    pub fn nearest(&self, direction: &Vector3<f64>) -> usize {
        let mut best = 0usize;
        let mut best_dot = f64::NEG_INFINITY;
        for (i, node) in self.nodes.iter().enumerate() {
            let dot = node.direction.dot(direction);
            if dot > best_dot {
                best_dot = dot;
                best = i;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_direction(rng: &mut ChaCha8Rng) -> Vector3<f64> {
        loop {
            let v = Vector3::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
            let n = v.norm();
            if n > 1e-3 && n <= 1.0 {
                return v / n;
            }
        }
    }

    #[test]
    fn has_974_unit_nodes() {
        let grid = SphericalGrid::lebedev974();
        assert_eq!(grid.len(), 974);
        for node in grid.nodes() {
            assert!((node.direction.norm() - 1.0).abs() < 1e-12);
            assert!(node.azimuth > -std::f64::consts::PI - 1e-12);
            assert!(node.azimuth <= std::f64::consts::PI + 1e-12);
            assert!(node.elevation.abs() <= std::f64::consts::FRAC_PI_2 + 1e-12);
        }
    }

    #[test]
    fn grid_is_closed_under_antipodal_and_axis_swap_symmetry() {
        // Structural property of the point set, relied on by histogram
        // rotation-consistency tests.
        // acos-based distances bottom out near 1e-8 for machine-identical
        // directions; 1e-6 still sits far below the ~0.11 rad node spacing.
        let grid = SphericalGrid::lebedev974();
        for node in grid.nodes() {
            let antipode = grid.nearest(&-node.direction);
            assert!(
                angular_distance(&grid.node(antipode).direction, &-node.direction) < 1e-6
            );
            let swapped = Vector3::new(node.direction.y, node.direction.x, node.direction.z);
            let image = grid.nearest(&swapped);
            assert!(angular_distance(&grid.node(image).direction, &swapped) < 1e-6);
        }
    }

    #[test]
    fn neighbor_lists_have_exact_support_sorted_by_distance_self_first() {
        let grid = SphericalGrid::lebedev974();
        for i in (0..grid.len()).step_by(97) {
            let list = grid.neighbors(i);
            assert_eq!(list.len(), 50);
            assert_eq!(list[0] as usize, i, "self is the nearest neighbor");
            let distances: Vec<f64> = list
                .iter()
                .map(|&j| {
                    angular_distance(&grid.node(i).direction, &grid.node(j as usize).direction)
                })
                .collect();
            for pair in distances.windows(2) {
                assert!(pair[0] <= pair[1] + 1e-12, "list not sorted by distance");
            }
        }
    }

    #[test]
    fn nearest_agrees_with_independent_min_distance_scan() {
        let grid = SphericalGrid::lebedev974();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let dir = random_direction(&mut rng);
            let found = grid.nearest(&dir);
            // Oracle: explicit minimization of angular distance.
            let (oracle, _) = grid
                .nodes()
                .iter()
                .enumerate()
                .map(|(j, node)| (j, angular_distance(&node.direction, &dir)))
                .fold((0usize, f64::INFINITY), |best, (j, d)| {
                    if d < best.1 {
                        (j, d)
                    } else {
                        best
                    }
                });
            let d_found = angular_distance(&grid.node(found).direction, &dir);
            let d_oracle = angular_distance(&grid.node(oracle).direction, &dir);
            assert!(
                (d_found - d_oracle).abs() < 1e-12,
                "nearest node disagrees with scan oracle"
            );
        }
    }

    #[test]
    fn nearest_of_a_node_is_itself() {
        let grid = SphericalGrid::lebedev974();
        for i in (0..grid.len()).step_by(53) {
            assert_eq!(grid.nearest(&grid.node(i).direction), i);
        }
    }

    #[test]
    fn spherical_conversions_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..100 {
            let dir = random_direction(&mut rng);
            let (az, el) = to_spherical(&dir);
            let back = from_spherical(az, el);
            assert!((dir - back).norm() < 1e-12);
        }
    }

    #[test]
    fn support_is_clamped_and_honored() {
        let grid = SphericalGrid::lebedev974_with_support(8);
        assert_eq!(grid.support(), 8);
        assert_eq!(grid.neighbors(0).len(), 8);
    }
}
