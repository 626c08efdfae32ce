//! Ruler constructions for the sum and product of two points of a line.
//!
//! Addition: `P₁ = ℓ_{OI}^{B₁} ∩ ℓ_{OB₁}^{A}`, then `C = ℓ_{BB₁}^{P₁} ∩ ℓ^{OI}`.
//! Multiplication: `P₁ = ℓ_{IB₁}^{A} ∩ ℓ^{OB₁}`, then `C = ℓ_{BB₁}^{P₁} ∩ ℓ^{OI}`.
//! Here `ℓ_{XY}^{P}` is the parallel to `ℓ^{XY}` through `P`.
//!
//! Under [`super::coordinatize`] the product construction yields `A·B`
//! (left factor from `A`).

use serde::Serialize;

use super::{line_through, meet, parallel_through, PlaneLine, PlanePoint};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Add,
    Mul,
}

/// Every line and point produced by a construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub operation: Operation,
    pub o: PlanePoint,
    pub i: PlanePoint,
    pub a: PlanePoint,
    pub b: PlanePoint,
    pub aux: PlanePoint,
    pub base: PlaneLine,
    /// The two lines whose intersection is `P₁`.
    pub first: PlaneLine,
    pub second: PlaneLine,
    pub p1: PlanePoint,
    /// `ℓ^{BB₁}` and its parallel through `P₁`.
    pub reference: PlaneLine,
    pub last: PlaneLine,
    pub result: PlanePoint,
}

impl Construction {
    /// Human-readable trace, one step per entry.
    pub fn steps(&self) -> Vec<String> {
        let (first, second) = match self.operation {
            Operation::Add => ("parallel to OI through B1", "parallel to OB1 through A"),
            Operation::Mul => ("parallel to IB1 through A", "line OB1"),
        };
        vec![
            format!("step 1: B1 = {} not on OI: {}", self.aux, self.base),
            format!("step 2: {first}: {}", self.first),
            format!("        {second}: {}", self.second),
            format!("        P1 = {}", self.p1),
            format!("step 3: parallel to BB1 ({}) through P1: {}", self.reference, self.last),
            format!("        C = {}", self.result),
        ]
    }
}

fn prepare(o: &PlanePoint, i: &PlanePoint, a: &PlanePoint, b: &PlanePoint, aux: &PlanePoint) -> Result<PlaneLine> {
    let base = line_through(o, i)?;
    for p in [a, b] {
        if !base.contains(p)? {
            return Err(Error::NotOnLine(p.to_string()));
        }
    }
    if base.contains(aux)? {
        return Err(Error::AuxOnLine(aux.to_string()));
    }
    Ok(base)
}

fn finish(
    operation: Operation,
    (o, i, a, b, aux): (&PlanePoint, &PlanePoint, &PlanePoint, &PlanePoint, &PlanePoint),
    base: PlaneLine,
    first: PlaneLine,
    second: PlaneLine,
) -> Result<Construction> {
    let p1 = meet(&first, &second, "step 2 lines do not meet")?;
    let reference = line_through(b, aux)?;
    let last = parallel_through(&reference, &p1)?;
    let result = meet(&last, &base, "step 3 line does not meet OI")?;
    Ok(Construction {
        operation,
        o: o.clone(),
        i: i.clone(),
        a: a.clone(),
        b: b.clone(),
        aux: aux.clone(),
        base,
        first,
        second,
        p1,
        reference,
        last,
        result,
    })
}

/// The point `A + B` of the line `OI`, built with auxiliary point `aux`.
pub fn geometric_add(o: &PlanePoint, i: &PlanePoint, a: &PlanePoint, b: &PlanePoint, aux: &PlanePoint) -> Result<Construction> {
    let base = prepare(o, i, a, b, aux)?;
    let first = parallel_through(&base, aux)?;
    let second = parallel_through(&line_through(o, aux)?, a)?;
    finish(Operation::Add, (o, i, a, b, aux), base, first, second)
}

/// The point `A · B` of the line `OI`, built with auxiliary point `aux`.
pub fn geometric_mul(o: &PlanePoint, i: &PlanePoint, a: &PlanePoint, b: &PlanePoint, aux: &PlanePoint) -> Result<Construction> {
    let base = prepare(o, i, a, b, aux)?;
    let first = parallel_through(&line_through(i, aux)?, a)?;
    let second = line_through(o, aux)?;
    finish(Operation::Mul, (o, i, a, b, aux), base, first, second)
}
