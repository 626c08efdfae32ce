//! Desargues configurations: hypothesis validation, the parallel-sides
//! conclusion, and a seeded generator of valid configurations.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{line_through, meet, parallel_through, point_at, PlaneLine, PlanePoint};
use crate::error::{Error, Result};
use crate::skewfield::Field;

/// Redraw bound for [`generate_desargues_config`].
pub const GENERATION_RETRIES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Perspective {
    /// `AA' ∥ BB' ∥ CC'`
    ParallelAxis,
    /// `AA' ∩ BB' ∩ CC' = P`
    Center(PlanePoint),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PerspectiveMode {
    Parallel,
    Concurrent,
}

/// Two triangles `ABC` and `A'B'C'` with their perspectivity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesarguesConfig {
    pub a: PlanePoint,
    pub b: PlanePoint,
    pub c: PlanePoint,
    pub a2: PlanePoint,
    pub b2: PlanePoint,
    pub c2: PlanePoint,
    pub perspective: Perspective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DesarguesClause {
    TriangleVerticesDistinct,
    CorrespondingVerticesDistinct,
    PerspectiveLinesDistinct,
    PerspectiveLinesParallel,
    PerspectiveLinesConcurrent,
    CenterOffVertices,
    SidesAbParallel,
    SidesBcParallel,
    SidesAbDistinct,
    SidesBcDistinct,
}

impl fmt::Display for DesarguesClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Self::TriangleVerticesDistinct => "vertices of each triangle must be pairwise distinct (A≠C, A'≠C', ...)",
            Self::CorrespondingVerticesDistinct => "A≠A', B≠B', C≠C'",
            Self::PerspectiveLinesDistinct => "lines AA', BB', CC', AC, A'C' must be pairwise distinct",
            Self::PerspectiveLinesParallel => "AA' ∥ BB' ∥ CC'",
            Self::PerspectiveLinesConcurrent => "AA', BB', CC' must pass through the center P",
            Self::CenterOffVertices => "the center P must differ from all six vertices",
            Self::SidesAbParallel => "AB ∥ A'B'",
            Self::SidesBcParallel => "BC ∥ B'C'",
            Self::SidesAbDistinct => "AB ≠ A'B'",
            Self::SidesBcDistinct => "BC ≠ B'C'",
        };
        f.write_str(text)
    }
}

impl DesarguesConfig {
    pub fn points(&self) -> [&PlanePoint; 6] {
        [&self.a, &self.b, &self.c, &self.a2, &self.b2, &self.c2]
    }

    pub fn mode(&self) -> PerspectiveMode {
        match self.perspective {
            Perspective::ParallelAxis => PerspectiveMode::Parallel,
            Perspective::Center(_) => PerspectiveMode::Concurrent,
        }
    }

    /// Checks every hypothesis of the axiom, reporting the first that fails.
    pub fn validate(&self) -> Result<()> {
        use DesarguesClause::*;
        let fail = |clause| Err(Error::Hypothesis(clause));
        let (a, b, c, a2, b2, c2) = (&self.a, &self.b, &self.c, &self.a2, &self.b2, &self.c2);
        if a == b || a == c || b == c || a2 == b2 || a2 == c2 || b2 == c2 {
            return fail(TriangleVerticesDistinct);
        }
        if a == a2 || b == b2 || c == c2 {
            return fail(CorrespondingVerticesDistinct);
        }
        let aa = line_through(a, a2)?;
        let bb = line_through(b, b2)?;
        let cc = line_through(c, c2)?;
        let ac = line_through(a, c)?;
        let ac2 = line_through(a2, c2)?;
        let lines = [&aa, &bb, &cc, &ac, &ac2];
        for (n, l) in lines.iter().enumerate() {
            if lines[n + 1..].contains(l) {
                return fail(PerspectiveLinesDistinct);
            }
        }
        match &self.perspective {
            Perspective::ParallelAxis => {
                if !(aa.is_parallel(&bb) && bb.is_parallel(&cc)) {
                    return fail(PerspectiveLinesParallel);
                }
            }
            Perspective::Center(p) => {
                if self.points().contains(&p) {
                    return fail(CenterOffVertices);
                }
                for l in [&aa, &bb, &cc] {
                    if !l.contains(p)? {
                        return fail(PerspectiveLinesConcurrent);
                    }
                }
            }
        }
        let ab = line_through(a, b)?;
        let ab2 = line_through(a2, b2)?;
        let bc = line_through(b, c)?;
        let bc2 = line_through(b2, c2)?;
        if !ab.is_parallel(&ab2) {
            return fail(SidesAbParallel);
        }
        if !bc.is_parallel(&bc2) {
            return fail(SidesBcParallel);
        }
        if ab == ab2 {
            return fail(SidesAbDistinct);
        }
        if bc == bc2 {
            return fail(SidesBcDistinct);
        }
        Ok(())
    }

    /// Moves `C'` off its constructed position; a negative control.
    pub fn tamper_c_prime(&self) -> Result<Self> {
        let field = self.c2.field();
        let shift = PlanePoint::new(field.zero(), field.one())?;
        Ok(DesarguesConfig {
            c2: self.c2.add(&shift)?,
            ..self.clone()
        })
    }
}

impl fmt::Display for DesarguesConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A={} B={} C={} A'={} B'={} C'={}",
            self.a, self.b, self.c, self.a2, self.b2, self.c2
        )?;
        match &self.perspective {
            Perspective::ParallelAxis => f.write_str(" mode=parallel"),
            Perspective::Center(p) => write!(f, " mode=concurrent P={p}"),
        }
    }
}

/// Validates the hypotheses, then decides whether `AC ∥ A'C'`.
pub fn check_desargues(cfg: &DesarguesConfig) -> Result<bool> {
    cfg.validate()?;
    let ac = line_through(&cfg.a, &cfg.c)?;
    let ac2 = line_through(&cfg.a2, &cfg.c2)?;
    Ok(ac.is_parallel(&ac2))
}

/// A valid configuration drawn deterministically from `seed`.
pub fn generate_desargues_config(field: Field, seed: u64, mode: PerspectiveMode) -> Result<DesarguesConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_with_rng(field, &mut rng, mode)
}

pub fn generate_with_rng<R: Rng + ?Sized>(field: Field, rng: &mut R, mode: PerspectiveMode) -> Result<DesarguesConfig> {
    for _ in 0..GENERATION_RETRIES {
        if let Ok(Some(cfg)) = attempt(field, rng, mode) {
            return Ok(cfg);
        }
    }
    Err(Error::GenerationFailed(GENERATION_RETRIES))
}

fn random_point<R: Rng + ?Sized>(field: Field, rng: &mut R) -> PlanePoint {
    PlanePoint {
        x: field.random(rng),
        y: field.random(rng),
    }
}

fn attempt<R: Rng + ?Sized>(field: Field, rng: &mut R, mode: PerspectiveMode) -> Result<Option<DesarguesConfig>> {
    let a = random_point(field, rng);
    let b = random_point(field, rng);
    let c = random_point(field, rng);
    if a == b || line_through(&a, &b)?.contains(&c)? {
        return Ok(None);
    }
    let (perspective, a2, bb, cc): (Perspective, PlanePoint, PlaneLine, PlaneLine) = match mode {
        PerspectiveMode::Parallel => {
            let a2 = random_point(field, rng);
            if a2 == a {
                return Ok(None);
            }
            let aa = line_through(&a, &a2)?;
            let bb = parallel_through(&aa, &b)?;
            let cc = parallel_through(&aa, &c)?;
            (Perspective::ParallelAxis, a2, bb, cc)
        }
        PerspectiveMode::Concurrent => {
            let p = random_point(field, rng);
            if [&a, &b, &c].contains(&&p) {
                return Ok(None);
            }
            let t = field.random(rng);
            let a2 = point_at(&p, &a, &t)?;
            let bb = line_through(&p, &b)?;
            let cc = line_through(&p, &c)?;
            (Perspective::Center(p), a2, bb, cc)
        }
    };
    let b2 = match meet(&parallel_through(&line_through(&a, &b)?, &a2)?, &bb, "B'") {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    let c2 = match meet(&parallel_through(&line_through(&b, &c)?, &b2)?, &cc, "C'") {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    let cfg = DesarguesConfig { a, b, c, a2, b2, c2, perspective };
    Ok(cfg.validate().is_ok().then_some(cfg))
}
