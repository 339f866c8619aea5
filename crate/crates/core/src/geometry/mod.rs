//! Metric-parametric geometric primitives shared by all algorithms.

mod emptiness;
mod enclosing;
mod pinned;

pub use emptiness::{points_above_circle_empty, region_b_empty, ClientIndex};
pub use enclosing::{smallest_enclosing_disk, smallest_enclosing_disk_euclidean};
pub use pinned::{normalize_clients, pinned_circles};

use crate::error::{invalid, CoverError, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point<S> {
    #[inline]
    pub fn new(x: S, y: S) -> Self {
        Self { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Self {
        Self::new(S::lit(x), S::lit(y))
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn euclidean(&self, other: &Self) -> S {
        (self.x - other.x).hypot(self.y - other.y)
    }

    #[inline]
    pub fn midpoint(&self, other: &Self) -> Self {
        Self::new((self.x + other.x) * S::half(), (self.y + other.y) * S::half())
    }

    /// Rotation about the origin by `angle` radians, counterclockwise.
    pub fn rotated(&self, angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    /// Rotation about `pivot` by `angle` radians, counterclockwise.
    pub fn rotated_about(&self, pivot: &Self, angle: S) -> Self {
        let rel = Self::new(self.x - pivot.x, self.y - pivot.y).rotated(angle);
        Self::new(rel.x + pivot.x, rel.y + pivot.y)
    }
}

/// An L_p metric on the plane, `p >= 1` or `p = INF`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric<S> {
    Lp(S),
    Inf,
}

impl<S: Scalar> Metric<S> {
    pub fn lp(p: S) -> Result<Self> {
        if p.is_infinite() && p > S::zero() {
            return Ok(Metric::Inf);
        }
        if !(p >= S::one()) {
            return Err(invalid("metric.p", format!("{p} is below 1")));
        }
        Ok(Metric::Lp(p))
    }

    pub fn euclidean() -> Self {
        Metric::Lp(S::two())
    }

    pub fn manhattan() -> Self {
        Metric::Lp(S::one())
    }

    pub fn is_euclidean(&self) -> bool {
        matches!(self, Metric::Lp(p) if *p == S::two())
    }

    /// Norm of the displacement `(dx, dy)`.
    pub fn norm(&self, dx: S, dy: S) -> S {
        let (a, b) = (dx.abs(), dy.abs());
        match *self {
            Metric::Inf => a.max(b),
            Metric::Lp(p) if p == S::one() => a + b,
            Metric::Lp(p) if p == S::two() => a.hypot(b),
            Metric::Lp(p) => {
                let m = a.max(b);
                if m == S::zero() {
                    return S::zero();
                }
                m * ((a / m).powf(p) + (b / m).powf(p)).powf(p.recip())
            }
        }
    }

    #[inline]
    pub fn distance(&self, a: &Point<S>, b: &Point<S>) -> S {
        self.norm(a.x - b.x, a.y - b.y)
    }

    /// Radius of the smallest disk of this metric enclosing the unit L∞ square
    /// with the same center, i.e. the norm of `(1, 1)`.
    pub fn square_enclosing_factor(&self) -> S {
        self.norm(S::one(), S::one())
    }
}

/// Distance between two points under a metric.
#[inline]
pub fn distance<S: Scalar>(a: &Point<S>, b: &Point<S>, metric: Metric<S>) -> S {
    metric.distance(a, b)
}

/// Power cost `f(r) = r^alpha`, plus the tour weight `C` for covering tours.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostModel<S> {
    pub alpha: S,
    pub tour_weight: Option<S>,
}

impl<S: Scalar> CostModel<S> {
    pub fn new(alpha: S) -> Result<Self> {
        if !(alpha >= S::one()) || !alpha.is_finite() {
            return Err(invalid("alpha", format!("{alpha} is below 1")));
        }
        Ok(Self {
            alpha,
            tour_weight: None,
        })
    }

    pub fn linear() -> Self {
        Self {
            alpha: S::one(),
            tour_weight: None,
        }
    }

    pub fn with_tour_weight(mut self, c: S) -> Result<Self> {
        if !(c > S::zero()) || !c.is_finite() {
            return Err(invalid("tour_weight", format!("{c} is not positive")));
        }
        self.tour_weight = Some(c);
        Ok(self)
    }

    pub fn is_linear(&self) -> bool {
        self.alpha == S::one()
    }

    #[inline]
    pub fn cost(&self, radius: S) -> S {
        if self.alpha == S::one() {
            radius
        } else {
            radius.powf(self.alpha)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk<S> {
    pub center: Point<S>,
    pub radius: S,
    pub metric: Metric<S>,
}

impl<S: Scalar> Disk<S> {
    pub fn new(center: Point<S>, radius: S, metric: Metric<S>) -> Self {
        debug_assert!(radius >= S::zero());
        Self { center, radius, metric }
    }

    /// Highest point, or the upper-right corner for L∞ squares.
    pub fn apex(&self) -> Point<S> {
        match self.metric {
            Metric::Inf => Point::new(self.center.x + self.radius, self.center.y + self.radius),
            Metric::Lp(_) => Point::new(self.center.x, self.center.y + self.radius),
        }
    }

    #[inline]
    pub fn contains(&self, p: &Point<S>) -> bool {
        self.metric.distance(&self.center, p) <= self.radius + S::tolerance()
    }

    /// True when `p` lies strictly inside by more than the tolerance.
    #[inline]
    pub fn contains_strictly(&self, p: &Point<S>) -> bool {
        self.metric.distance(&self.center, p) < self.radius - S::tolerance()
    }

    #[inline]
    pub fn x_extent(&self) -> (S, S) {
        (self.center.x - self.radius, self.center.x + self.radius)
    }
}

/// A set of disks and its total cost `sum f(r_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cover<S> {
    pub disks: Vec<Disk<S>>,
    pub cost: S,
}

impl<S: Scalar> Cover<S> {
    pub fn from_disks(disks: Vec<Disk<S>>, cost_model: &CostModel<S>) -> Self {
        let cost = disks.iter().fold(S::zero(), |acc, d| acc + cost_model.cost(d.radius));
        Self { disks, cost }
    }

    pub fn empty() -> Self {
        Self {
            disks: Vec::new(),
            cost: S::zero(),
        }
    }

    pub fn recomputed_cost(&self, cost_model: &CostModel<S>) -> S {
        self.disks
            .iter()
            .fold(S::zero(), |acc, d| acc + cost_model.cost(d.radius))
    }

    pub fn covers(&self, p: &Point<S>) -> bool {
        self.disks.iter().any(|d| d.contains(p))
    }

    pub fn covers_all(&self, clients: &[Point<S>]) -> bool {
        clients.iter().all(|p| self.covers(p))
    }

    /// Cost consistency and radius sign, relative tolerance `rel`.
    pub fn is_consistent(&self, cost_model: &CostModel<S>, rel: S) -> bool {
        let recomputed = self.recomputed_cost(cost_model);
        let scale = recomputed.abs().max(S::one());
        self.disks.iter().all(|d| d.radius >= S::zero()) && (recomputed - self.cost).abs() <= rel * scale
    }

    /// Sum of L∞ edge lengths, i.e. twice the sum of radii.
    pub fn edge_length(&self) -> S {
        self.disks.iter().fold(S::zero(), |acc, d| acc + S::two() * d.radius)
    }
}

/// A placement line given by an anchor point and a unit direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line<S> {
    pub anchor: Point<S>,
    pub direction: Point<S>,
}

impl<S: Scalar> Line<S> {
    pub fn new(anchor: Point<S>, direction: Point<S>) -> Result<Self> {
        let len = direction.x.hypot(direction.y);
        if !(len > S::zero()) || !len.is_finite() {
            return Err(invalid("direction", "zero or non-finite direction"));
        }
        Ok(Self {
            anchor,
            direction: Point::new(direction.x / len, direction.y / len),
        })
    }

    pub fn horizontal(y: S) -> Self {
        Self {
            anchor: Point::new(S::zero(), y),
            direction: Point::new(S::one(), S::zero()),
        }
    }

    pub fn with_angle(anchor: Point<S>, angle: S) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            anchor,
            direction: Point::new(c, s),
        }
    }

    /// Line through two points; `None` when they coincide.
    pub fn through(a: Point<S>, b: Point<S>) -> Option<Self> {
        Self::new(a, Point::new(b.x - a.x, b.y - a.y)).ok()
    }

    /// Coordinates `(t, h)`: `t` along the direction, `h` signed offset to the left.
    #[inline]
    pub fn to_local(&self, p: &Point<S>) -> Point<S> {
        let dx = p.x - self.anchor.x;
        let dy = p.y - self.anchor.y;
        Point::new(
            dx * self.direction.x + dy * self.direction.y,
            self.direction.x * dy - self.direction.y * dx,
        )
    }

    #[inline]
    pub fn from_local(&self, q: &Point<S>) -> Point<S> {
        Point::new(
            self.anchor.x + q.x * self.direction.x - q.y * self.direction.y,
            self.anchor.y + q.x * self.direction.y + q.y * self.direction.x,
        )
    }

    #[inline]
    pub fn distance_to(&self, p: &Point<S>) -> S {
        self.to_local(p).y.abs()
    }
}

/// The problem statement.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<S> {
    pub clients: Vec<Point<S>>,
    pub servers: Option<Vec<Point<S>>>,
    pub metric: Metric<S>,
    pub cost_model: CostModel<S>,
    pub max_disks: Option<usize>,
}

impl<S: Scalar> Instance<S> {
    pub fn new(
        clients: Vec<Point<S>>,
        servers: Option<Vec<Point<S>>>,
        metric: Metric<S>,
        cost_model: CostModel<S>,
        max_disks: Option<usize>,
    ) -> Result<Self> {
        if clients.is_empty() {
            return Err(CoverError::InvalidInstance("no clients".into()));
        }
        if clients.iter().any(|p| !p.is_finite()) {
            return Err(CoverError::InvalidInstance("non-finite client coordinate".into()));
        }
        if let Some(s) = &servers {
            if s.is_empty() {
                return Err(CoverError::InvalidInstance("empty server list".into()));
            }
            if s.iter().any(|p| !p.is_finite()) {
                return Err(CoverError::InvalidInstance("non-finite server coordinate".into()));
            }
        }
        if max_disks == Some(0) {
            return Err(invalid("max_disks", "must be at least 1"));
        }
        Ok(Self {
            clients,
            servers,
            metric,
            cost_model,
            max_disks,
        })
    }

    pub fn with_clients(clients: Vec<Point<S>>) -> Result<Self> {
        Self::new(clients, None, Metric::euclidean(), CostModel::linear(), None)
    }
}
