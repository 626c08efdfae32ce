//! The affine plane AG(2,K) over a skew field K.
//!
//! Points are pairs `(x, y)`. Non-vertical lines are `{(x, x·m + b)}` with
//! the slope multiplied on the right of `x`; vertical lines are `{(c, y)}`.
//! Equivalently a line is a coset `P + K·v` of a direction `v` under left
//! scalar multiplication, which is the convention [`point_at`] uses to
//! coordinatize a line.

mod construct;
mod desargues;

use std::fmt;

use crate::error::{Error, Result};
use crate::skewfield::{Field, FieldElement};

pub use construct::{geometric_add, geometric_mul, Construction, Operation};
pub use desargues::{
    check_desargues, generate_desargues_config, generate_with_rng, DesarguesClause,
    DesarguesConfig, Perspective, PerspectiveMode, GENERATION_RETRIES,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl PlanePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Result<Self> {
        x.same_field(&y)?;
        Ok(PlanePoint { x, y })
    }

    pub fn field(&self) -> Field {
        self.x.field()
    }

    /// Parses `"x,y"`.
    pub fn parse(field: Field, literal: &str) -> Result<Self> {
        let (x, y) = literal
            .split_once(',')
            .ok_or_else(|| Error::parse(literal, "expected `x,y`"))?;
        PlanePoint::new(field.parse(x)?, field.parse(y)?)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        PlanePoint::new(self.x.add(&other.x)?, self.y.add(&other.y)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        PlanePoint::new(self.x.sub(&other.x)?, self.y.sub(&other.y)?)
    }

    /// Left scalar multiple `t·(x, y)`.
    pub fn scale(&self, t: &FieldElement) -> Result<Self> {
        PlanePoint::new(t.mul(&self.x)?, t.mul(&self.y)?)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PlaneLine {
    /// `x = c`
    Vertical(FieldElement),
    /// `y = x·slope + intercept`
    Sloped {
        slope: FieldElement,
        intercept: FieldElement,
    },
}

impl PlaneLine {
    pub fn sloped(slope: FieldElement, intercept: FieldElement) -> Self {
        PlaneLine::Sloped { slope, intercept }
    }

    pub fn contains(&self, p: &PlanePoint) -> Result<bool> {
        match self {
            PlaneLine::Vertical(c) => {
                c.same_field(&p.x)?;
                Ok(p.x == *c)
            }
            PlaneLine::Sloped { slope, intercept } => Ok(p.x.mul(slope)?.add(intercept)? == p.y),
        }
    }

    /// Same direction (the lines are equal or disjoint).
    pub fn is_parallel(&self, other: &Self) -> bool {
        match (self, other) {
            (PlaneLine::Vertical(_), PlaneLine::Vertical(_)) => true,
            (PlaneLine::Sloped { slope: m1, .. }, PlaneLine::Sloped { slope: m2, .. }) => m1 == m2,
            _ => false,
        }
    }
}

impl fmt::Display for PlaneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaneLine::Vertical(c) => write!(f, "x = {c}"),
            PlaneLine::Sloped { slope, intercept } => write!(f, "y = x*({slope}) + ({intercept})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    Point(PlanePoint),
    Parallel,
}

/// The unique line through two distinct points.
pub fn line_through(p: &PlanePoint, q: &PlanePoint) -> Result<PlaneLine> {
    p.x.same_field(&q.x)?;
    if p == q {
        return Err(Error::IdenticalPoints);
    }
    if p.x == q.x {
        return Ok(PlaneLine::Vertical(p.x.clone()));
    }
    let slope = q.x.sub(&p.x)?.inv()?.mul(&q.y.sub(&p.y)?)?;
    let intercept = p.y.sub(&p.x.mul(&slope)?)?;
    Ok(PlaneLine::sloped(slope, intercept))
}

/// The unique line through `p` parallel to `l`.
pub fn parallel_through(l: &PlaneLine, p: &PlanePoint) -> Result<PlaneLine> {
    match l {
        PlaneLine::Vertical(c) => {
            c.same_field(&p.x)?;
            Ok(PlaneLine::Vertical(p.x.clone()))
        }
        PlaneLine::Sloped { slope, .. } => {
            let intercept = p.y.sub(&p.x.mul(slope)?)?;
            Ok(PlaneLine::sloped(slope.clone(), intercept))
        }
    }
}

pub fn intersect(l1: &PlaneLine, l2: &PlaneLine) -> Result<Intersection> {
    if l1 == l2 {
        return Err(Error::IdenticalLines);
    }
    if l1.is_parallel(l2) {
        return Ok(Intersection::Parallel);
    }
    let point = match (l1, l2) {
        (PlaneLine::Vertical(c), PlaneLine::Sloped { slope, intercept })
        | (PlaneLine::Sloped { slope, intercept }, PlaneLine::Vertical(c)) => {
            PlanePoint::new(c.clone(), c.mul(slope)?.add(intercept)?)?
        }
        (
            PlaneLine::Sloped { slope: m1, intercept: b1 },
            PlaneLine::Sloped { slope: m2, intercept: b2 },
        ) => {
            // x·(m1 − m2) = b2 − b1
            let x = b2.sub(b1)?.mul(&m1.sub(m2)?.inv()?)?;
            let y = x.mul(m1)?.add(b1)?;
            PlanePoint::new(x, y)?
        }
        (PlaneLine::Vertical(_), PlaneLine::Vertical(_)) => unreachable!("parallel"),
    };
    Ok(Intersection::Point(point))
}

/// Intersection that must exist.
pub(crate) fn meet(l1: &PlaneLine, l2: &PlaneLine, what: &'static str) -> Result<PlanePoint> {
    match intersect(l1, l2) {
        Ok(Intersection::Point(p)) => Ok(p),
        Ok(Intersection::Parallel) | Err(Error::IdenticalLines) => Err(Error::Degenerate(what)),
        Err(e) => Err(e),
    }
}

/// The point `O + t·(I − O)` of the line `OI`.
pub fn point_at(o: &PlanePoint, i: &PlanePoint, t: &FieldElement) -> Result<PlanePoint> {
    if o == i {
        return Err(Error::IdenticalPoints);
    }
    o.add(&i.sub(o)?.scale(t)?)
}

/// Inverse of [`point_at`]: the coordinate of `p` on the line `OI`.
pub fn coordinatize(o: &PlanePoint, i: &PlanePoint, p: &PlanePoint) -> Result<FieldElement> {
    let line = line_through(o, i)?;
    if !line.contains(p)? {
        return Err(Error::NotOnLine(p.to_string()));
    }
    let (num, den) = if o.x != i.x {
        (p.x.sub(&o.x)?, i.x.sub(&o.x)?)
    } else {
        (p.y.sub(&o.y)?, i.y.sub(&o.y)?)
    };
    num.mul(&den.inv()?)
}
