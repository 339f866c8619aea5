//! Covering tours: a closed tour through disk centers whose disks cover the
//! clients, priced `length + C * sum r`.
//!
//! Linear radius cost and Euclidean disks throughout. For `C <= 4` the single
//! smallest enclosing disk is optimal; above that [`cluster_and_tour`] is a
//! heuristic and [`exact_small_mcct`] a brute-force reference on a grid.

mod exact;
mod heuristic;
pub mod tsp;

pub use exact::{exact_small_mcct, MAX_GRID_CANDIDATES, MAX_TOUR_DISKS};
pub use heuristic::cluster_and_tour;

use crate::error::{invalid, CoverError, Result};
use crate::geometry::{smallest_enclosing_disk_euclidean, Disk, Metric, Point};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct CoveringTour<S> {
    /// Closed tour; the edge back to the first vertex is implied.
    pub tour: Vec<Point<S>>,
    /// `disks[j]` is centered at `tour[j]`.
    pub disks: Vec<Disk<S>>,
    pub tour_length: S,
    pub cover_cost: S,
    pub total_cost: S,
    /// The weight `C` on the radius sum.
    pub tour_weight: S,
}

impl<S: Scalar> CoveringTour<S> {
    /// Tour through `centers` in the given order with the matching radii.
    pub fn new(centers: Vec<Point<S>>, radii: &[S], tour_weight: S) -> Self {
        assert_eq!(centers.len(), radii.len(), "one radius per tour vertex");
        let order: Vec<usize> = (0..centers.len()).collect();
        let tour_length = tsp::tour_length(&centers, &order);
        let disks: Vec<Disk<S>> = centers
            .iter()
            .zip(radii)
            .map(|(c, &r)| Disk::new(*c, r, Metric::euclidean()))
            .collect();
        let cover_cost = radii.iter().fold(S::zero(), |a, &r| a + r);
        Self {
            tour: centers,
            disks,
            tour_length,
            cover_cost,
            total_cost: tour_length + tour_weight * cover_cost,
            tour_weight,
        }
    }

    pub fn covers_all(&self, clients: &[Point<S>]) -> bool {
        clients.iter().all(|p| self.disks.iter().any(|d| d.contains(p)))
    }

    /// Stored totals agree with the geometry and every disk sits on the tour.
    pub fn is_consistent(&self, tol: S) -> bool {
        let order: Vec<usize> = (0..self.tour.len()).collect();
        let length = tsp::tour_length(&self.tour, &order);
        let cover = self.disks.iter().fold(S::zero(), |a, d| a + d.radius);
        let scale = S::one().max(self.total_cost.abs());
        self.disks.len() == self.tour.len()
            && self
                .disks
                .iter()
                .zip(&self.tour)
                .all(|(d, p)| d.center == *p && d.radius >= S::zero())
            && (length - self.tour_length).abs() <= tol * scale
            && (cover - self.cover_cost).abs() <= tol * scale
            && (self.tour_length + self.tour_weight * self.cover_cost - self.total_cost).abs() <= tol * scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<S> {
    pub spacing: S,
    pub origin: Point<S>,
}

impl<S: Scalar> GridSpec<S> {
    pub fn new(spacing: S, origin: Point<S>) -> Result<Self> {
        if !(spacing > S::zero()) || !spacing.is_finite() {
            return Err(invalid("spacing", format!("{spacing} is not positive")));
        }
        Ok(Self { spacing, origin })
    }

    pub fn nearest(&self, p: &Point<S>) -> Point<S> {
        let snap = |v: S, o: S| o + ((v - o) / self.spacing).round() * self.spacing;
        Point::new(snap(p.x, self.origin.x), snap(p.y, self.origin.y))
    }
}

pub(crate) fn check_weight<S: Scalar>(c: S) -> Result<()> {
    if !(c > S::zero()) || !c.is_finite() {
        return Err(invalid("tour_weight", format!("{c} is not positive")));
    }
    Ok(())
}

pub(crate) fn check_clients<S: Scalar>(clients: &[Point<S>]) -> Result<()> {
    if clients.is_empty() {
        return Err(CoverError::InvalidInstance("no clients".into()));
    }
    if let Some(p) = clients.iter().find(|p| !p.is_finite()) {
        return Err(CoverError::InvalidInstance(format!("non-finite client {p:?}")));
    }
    Ok(())
}

/// Largest distance from `center` to a client.
pub(crate) fn reach<S: Scalar>(center: &Point<S>, clients: &[Point<S>]) -> S {
    clients.iter().fold(S::zero(), |a, p| a.max(center.euclidean(p)))
}

/// One disk at the center of the smallest enclosing disk, no tour.
pub fn circumcenter_solution<S: Scalar>(clients: &[Point<S>], tour_weight: S) -> Result<CoveringTour<S>> {
    check_weight(tour_weight)?;
    check_clients(clients)?;
    let center = smallest_enclosing_disk_euclidean(clients).center;
    // the radius is re-measured so coverage is exact
    let r = reach(&center, clients);
    Ok(CoveringTour::new(vec![center], &[r], tour_weight))
}

/// Perimeter and circumradius of a triangle that contains its circumcenter.
pub fn tour_lower_bound_check<S: Scalar>(p: Point<S>, q: Point<S>, r: Point<S>) -> Result<(S, S)> {
    let a = q.euclidean(&r);
    let b = p.euclidean(&r);
    let c = p.euclidean(&q);
    let cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    let scale = a.max(b).max(c);
    if scale == S::zero() || cross.abs() <= S::epsilon() * S::lit(16.0) * scale * scale {
        return Err(CoverError::Precondition(
            "degenerate triangle has no circumcircle".into(),
        ));
    }
    // the circumcenter is inside or on the triangle iff no angle is obtuse
    let slack = S::tolerance() * scale * scale;
    let obtuse = |u: S, v: S, opposite: S| u * u + v * v - opposite * opposite < -slack;
    if obtuse(b, c, a) || obtuse(a, c, b) || obtuse(a, b, c) {
        return Err(CoverError::Precondition(
            "obtuse triangle does not contain its circumcenter".into(),
        ));
    }
    let circumradius = a * b * c / (S::two() * cross.abs());
    Ok((a + b + c, circumradius))
}

/// Moves every tour vertex to the nearest point of a grid fine enough that
/// the total grows by at most `1 + epsilon`, and grows each radius by the
/// grid's diagonal so coverage survives.
///
/// The spacing is `epsilon * diam / (8 m * max(1, (1 + C) / 4, (1 + C) / 2C))`
/// with `m` the larger of the client and vertex counts, anchored at the origin.
/// A tour whose clients all coincide is returned unchanged.
pub fn snap_to_grid<S: Scalar>(tour: &CoveringTour<S>, clients: &[Point<S>], epsilon: S) -> Result<CoveringTour<S>> {
    if !(epsilon > S::zero()) || !epsilon.is_finite() {
        return Err(invalid("epsilon", format!("{epsilon} is not positive")));
    }
    let mut diam = S::zero();
    for (i, p) in clients.iter().enumerate() {
        for q in &clients[i + 1..] {
            diam = diam.max(p.euclidean(q));
        }
    }
    if diam == S::zero() {
        return Ok(tour.clone());
    }
    let c = tour.tour_weight;
    let m = S::from_usize(clients.len().max(tour.tour.len())).expect("count representable");
    let one_plus = S::one() + c;
    let factor = S::one().max(one_plus / S::lit(4.0)).max(one_plus / (S::two() * c));
    let spacing = epsilon * diam / (S::lit(8.0) * m * factor);
    Ok(snap_with(
        tour,
        &GridSpec::new(spacing, Point::new(S::zero(), S::zero()))?,
    ))
}

/// Snap to an explicit grid, radii grown by `spacing * sqrt 2`.
pub fn snap_with<S: Scalar>(tour: &CoveringTour<S>, grid: &GridSpec<S>) -> CoveringTour<S> {
    let grow = grid.spacing * S::two().sqrt();
    let centers = tour.tour.iter().map(|p| grid.nearest(p)).collect();
    let radii: Vec<S> = tour.disks.iter().map(|d| d.radius + grow).collect();
    CoveringTour::new(centers, &radii, tour.tour_weight)
}


#[cfg(test)]
mod tests {
    use super::test_support::*;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn circumcenter_on_circles_and_pairs() {
        let t = circumcenter_solution(&circle(7, 1.0, 0.3), 4.0).unwrap();
        assert!((t.total_cost - 4.0).abs() < 1e-9);
        assert_eq!(t.tour_length, 0.0);
        let t = circumcenter_solution(&[Point::<f64>::new(-1.0, 0.0), Point::new(1.0, 0.0)], 3.0).unwrap();
        assert!((t.total_cost - 3.0).abs() < 1e-12);
        let t = circumcenter_solution(&[Point::new(2.0, 2.0)], 9.0).unwrap();
        assert_eq!(t.total_cost, 0.0);
        assert!(t.is_consistent(1e-9) && t.covers_all(&[Point::new(2.0, 2.0)]));
    }

    #[test]
    fn circumcenter_rejects_bad_input() {
        assert!(circumcenter_solution(&[Point::new(0.0, 0.0)], 0.0).is_err());
        assert!(circumcenter_solution::<f64>(&[], 1.0).is_err());
    }

    #[test]
    fn triangle_bound_closed_forms() {
        let eq = circle(3, 1.0, 0.1);
        let (per, r) = tour_lower_bound_check(eq[0], eq[1], eq[2]).unwrap();
        assert!((per - 3.0 * 3f64.sqrt()).abs() < 1e-12);
        assert!((r - 1.0).abs() < 1e-12);
        let (per, r) =
            tour_lower_bound_check(Point::new(-1.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)).unwrap();
        assert!((per - (2.0 + 2.0 * 2f64.sqrt())).abs() < 1e-12);
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn near_diameter_triangle_tends_to_four_r() {
        let mut last = f64::INFINITY;
        for k in 1..8 {
            let a = std::f64::consts::PI - 10f64.powi(-k);
            let (per, r) = tour_lower_bound_check(
                Point::new(-1.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(a.cos(), a.sin()),
            )
            .unwrap();
            let ratio = per / r;
            assert!(ratio >= 4.0 - 1e-9 && ratio < last);
            last = ratio;
        }
        assert!(last - 4.0 < 1e-6);
    }

    #[test]
    fn triangle_bound_rejects_obtuse_and_degenerate() {
        let o = tour_lower_bound_check(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(1.0, 0.5));
        assert!(matches!(o, Err(CoverError::Precondition(_))));
        let d = tour_lower_bound_check(Point::new(0.0, 0.0), Point::new(1.0, 1.0), Point::new(2.0, 2.0));
        assert!(matches!(d, Err(CoverError::Precondition(_))));
    }

    #[test]
    fn random_acute_triangles() {
        let mut rng = ChaCha8Rng::seed_from_u64(90);
        let mut seen = 0;
        while seen < 2000 {
            let p = random_points(&mut rng, 3, 5.0);
            if let Ok((per, r)) = tour_lower_bound_check(p[0], p[1], p[2]) {
                assert!(per >= 4.0 * r - 1e-9);
                seen += 1;
            }
        }
    }

    #[test]
    fn snap_to_unit_grid() {
        let t = CoveringTour::new(vec![Point::new(0.3, 0.4)], &[0.5], 2.0);
        let g = GridSpec::new(1.0, Point::new(0.0, 0.0)).unwrap();
        let s = snap_with(&t, &g);
        assert_eq!(s.tour[0], Point::new(0.0, 0.0));
        assert!((s.disks[0].radius - (0.5 + 2f64.sqrt())).abs() < 1e-12);
        // already on the grid: only the radii move
        let s2 = snap_with(&s, &g);
        assert_eq!(s2.tour, s.tour);
        assert!(GridSpec::new(0.0, Point::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn snapping_keeps_coverage_within_one_plus_eps() {
        let mut rng = ChaCha8Rng::seed_from_u64(91);
        for _ in 0..200 {
            let n = rng.gen_range(2..=8);
            let clients = random_points(&mut rng, n, 3.0);
            let c = [0.5, 3.0, 10.0, 200.0][rng.gen_range(0..4)];
            let t = cluster_and_tour(&clients, c, 0.1).unwrap();
            for eps in [0.2, 0.05] {
                let s = snap_to_grid(&t, &clients, eps).unwrap();
                assert!(s.covers_all(&clients) && s.is_consistent(1e-9));
                assert!(
                    s.total_cost <= (1.0 + eps) * t.total_cost + 1e-12,
                    "{} vs {}",
                    s.total_cost,
                    t.total_cost
                );
            }
        }
        assert!(snap_to_grid(
            &circumcenter_solution(&unit_square(), 1.0).unwrap(),
            &unit_square(),
            0.0
        )
        .is_err());
    }

    #[test]
    fn coincident_clients_snap_to_themselves() {
        let pts = [Point::new(0.7, 0.7); 3];
        let t = circumcenter_solution(&pts, 5.0).unwrap();
        assert_eq!(snap_to_grid(&t, &pts, 0.1).unwrap(), t);
    }

    #[test]
    fn works_in_f32() {
        let pts: Vec<Point<f32>> = circle(5, 1.0, 0.0)
            .iter()
            .map(|p| Point::new(p.x as f32, p.y as f32))
            .collect();
        let t = circumcenter_solution(&pts, 2.0f32).unwrap();
        assert!((t.total_cost - 2.0).abs() < 1e-4);
    }
}
