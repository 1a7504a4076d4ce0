//! Decision procedures for constant and equal socle/radical rank, strata,
//! U-triviality, and orthogonality to the test-module family.
//!
//! "For all U in Gr_{d,r}" over an algebraically closed field cannot be
//! enumerated; the policy here is explicit in every verdict. Exhaustive mode
//! surveys every F_q-rational point and its answers are exact over F_q;
//! sample mode draws seeded random subspaces (useful over large primes or Q)
//! and can only ever report evidence or a certified failure witness.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::{grassmannian_points, random_subspace, Subspace};
use crate::quiver::{hom_dim, KroneckerModule};
use crate::test_modules::{rad_dim, soc_dim, x_u_module};

pub const DEFAULT_SAMPLE_COUNT: usize = 64;
pub const DEFAULT_SEED: u64 = 0;

/// How a survey ranges over the Grassmannian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SurveyMode {
    /// Every F_q-rational point of `Gr_{d,r}`.
    #[default]
    Exhaustive,
    /// `count` seeded random points.
    Sample { count: usize, seed: u64 },
}

/// What a verdict actually covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Scope {
    #[serde(rename = "exact_over_fq")]
    ExactOverFq(u64),
    #[serde(rename = "sampled")]
    Sampled,
}

/// Re-checkable counterexample carried by every failing verdict.
#[derive(Clone, Debug)]
pub enum Witness {
    /// Two subspaces with different observed dimensions.
    RankPair {
        u: Subspace,
        dim_u: usize,
        v: Subspace,
        dim_v: usize,
    },
    /// One subspace whose socle (resp. radical) is not the vertex-2 space.
    NotVertexTwo {
        u: Subspace,
        observed: usize,
        expected: usize,
    },
    /// One subspace with a nonzero Hom against the test module.
    NonzeroHom { u: Subspace, hom: usize },
}

#[derive(Clone, Debug)]
pub enum Status {
    /// Certified over the surveyed set (exhaustive surveys only).
    Holds,
    /// Certified failure with a witness.
    Fails(Witness),
    /// Sampled survey found no counterexample.
    EvidenceOnly,
}

/// Verdict plus the scope it was established under.
#[derive(Clone, Debug)]
pub struct PropertyVerdict {
    pub status: Status,
    pub scope: Scope,
}

impl PropertyVerdict {
    /// No counterexample was found; certified only when the scope is
    /// exhaustive, otherwise sampled evidence.
    pub fn holds(&self) -> bool {
        matches!(self.status, Status::Holds | Status::EvidenceOnly)
    }

    pub fn fails(&self) -> bool {
        matches!(self.status, Status::Fails(_))
    }
}

/// Per-subspace socle and radical dimensions over a survey.
#[derive(Clone, Debug)]
pub struct RankProfile {
    pub d: usize,
    pub mode: SurveyMode,
    pub scope: Scope,
    pub observations: Vec<(Subspace, usize, usize)>,
    pub min_soc: usize,
    pub max_soc: usize,
    pub min_rad: usize,
    pub max_rad: usize,
}

/// The surveyed subspaces for a given mode, in canonical order.
pub fn survey_subspaces(
    field: crate::linalg::Field,
    d: usize,
    r: usize,
    mode: SurveyMode,
) -> Result<(Vec<Subspace>, Scope)> {
    match mode {
        SurveyMode::Exhaustive => {
            let mut pts = grassmannian_points(field, d, r)?;
            pts.sort();
            Ok((pts, Scope::ExactOverFq(field.characteristic())))
        }
        SurveyMode::Sample { count, seed } => {
            if count == 0 {
                return Err(Error::EmptySample);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pts = Vec::with_capacity(count);
            for _ in 0..count {
                pts.push(random_subspace(field, d, r, &mut rng)?);
            }
            pts.sort();
            pts.dedup();
            Ok((pts, Scope::Sampled))
        }
    }
}

/// Records `dim Soc_U(M)` and `dim Rad_U(M)` for every surveyed `U`.
pub fn socle_rank_profile(m: &KroneckerModule, d: usize, mode: SurveyMode) -> Result<RankProfile> {
    let (pts, scope) = survey_subspaces(m.field(), d, m.r(), mode)?;
    let mut observations = Vec::with_capacity(pts.len());
    for u in pts {
        let s = soc_dim(m, &u)?;
        let rd = rad_dim(m, &u)?;
        observations.push((u, s, rd));
    }
    let min_soc = observations.iter().map(|o| o.1).min().unwrap_or(0);
    let max_soc = observations.iter().map(|o| o.1).max().unwrap_or(0);
    let min_rad = observations.iter().map(|o| o.2).min().unwrap_or(0);
    let max_rad = observations.iter().map(|o| o.2).max().unwrap_or(0);
    Ok(RankProfile {
        d,
        mode,
        scope,
        observations,
        min_soc,
        max_soc,
        min_rad,
        max_rad,
    })
}

fn constancy_verdict(
    profile: &RankProfile,
    value: impl Fn(&(Subspace, usize, usize)) -> usize,
) -> PropertyVerdict {
    let lo = profile
        .observations
        .iter()
        .min_by_key(|o| value(o))
        .unwrap();
    let hi = profile
        .observations
        .iter()
        .max_by_key(|o| value(o))
        .unwrap();
    let status = if value(lo) == value(hi) {
        match profile.scope {
            Scope::ExactOverFq(_) => Status::Holds,
            Scope::Sampled => Status::EvidenceOnly,
        }
    } else {
        Status::Fails(Witness::RankPair {
            u: lo.0.clone(),
            dim_u: value(lo),
            v: hi.0.clone(),
            dim_v: value(hi),
        })
    };
    PropertyVerdict {
        status,
        scope: profile.scope,
    }
}

/// Constant d-socle rank: `dim Soc_U(M)` takes one value over the survey.
pub fn has_constant_socle_rank(
    m: &KroneckerModule,
    d: usize,
    mode: SurveyMode,
) -> Result<PropertyVerdict> {
    let profile = socle_rank_profile(m, d, mode)?;
    Ok(constancy_verdict(&profile, |o| o.1))
}

/// Constant d-radical rank, computed directly from radical dimensions (the
/// duality `CRR_d(M) = CSR_d(DM)` is checked in tests, not assumed here).
pub fn has_constant_radical_rank(
    m: &KroneckerModule,
    d: usize,
    mode: SurveyMode,
) -> Result<PropertyVerdict> {
    let profile = socle_rank_profile(m, d, mode)?;
    Ok(constancy_verdict(&profile, |o| o.2))
}

/// Threshold below which the Hom-side of the socle criterion is re-computed
/// and asserted against the rank side on every call.
const CROSS_CHECK_TOTAL_DIM: usize = 48;

/// Equal d-socle property: `Soc_U(M) = M_2` for every surveyed `U`,
/// equivalently `Hom(X_U, M) = 0`. Both routes are computed on desk-size
/// modules and must agree.
pub fn has_equal_socle_property(
    m: &KroneckerModule,
    d: usize,
    mode: SurveyMode,
) -> Result<PropertyVerdict> {
    let (pts, scope) = survey_subspaces(m.field(), d, m.r(), mode)?;
    let cross_check = m.total_dim() <= CROSS_CHECK_TOTAL_DIM;
    for u in &pts {
        let s = soc_dim(m, u)?;
        if cross_check {
            let xu = x_u_module(u)?;
            let h = hom_dim(&xu.module, m)?;
            assert_eq!(
                h,
                s - m.dim().d2,
                "socle criterion and Hom criterion disagree"
            );
        }
        if s != m.dim().d2 {
            return Ok(PropertyVerdict {
                status: Status::Fails(Witness::NotVertexTwo {
                    u: u.clone(),
                    observed: s,
                    expected: m.dim().d2,
                }),
                scope,
            });
        }
    }
    Ok(PropertyVerdict {
        status: match scope {
            Scope::ExactOverFq(_) => Status::Holds,
            Scope::Sampled => Status::EvidenceOnly,
        },
        scope,
    })
}

/// Equal d-radical property: `Rad_U(M) = M_2` for every surveyed `U`,
/// computed directly on radicals. By duality this matches
/// `has_equal_socle_property(DM, ..)`, which tests assert.
pub fn has_equal_radical_property(
    m: &KroneckerModule,
    d: usize,
    mode: SurveyMode,
) -> Result<PropertyVerdict> {
    let (pts, scope) = survey_subspaces(m.field(), d, m.r(), mode)?;
    for u in &pts {
        let rd = rad_dim(m, u)?;
        if rd != m.dim().d2 {
            return Ok(PropertyVerdict {
                status: Status::Fails(Witness::NotVertexTwo {
                    u: u.clone(),
                    observed: rd,
                    expected: m.dim().d2,
                }),
                scope,
            });
        }
    }
    Ok(PropertyVerdict {
        status: match scope {
            Scope::ExactOverFq(_) => Status::Holds,
            Scope::Sampled => Status::EvidenceOnly,
        },
        scope,
    })
}

/// Minimal `i` with the equal i-socle property, scanning `i = 1..r-1`;
/// `None` when the module is in no stratum.
pub fn stratum(m: &KroneckerModule, mode: SurveyMode) -> Result<Option<(usize, Scope)>> {
    for d in 1..m.r() {
        let v = has_equal_socle_property(m, d, mode)?;
        if v.holds() {
            return Ok(Some((d, v.scope)));
        }
    }
    Ok(None)
}

/// `U`-trivial: `dim Hom(X_U, M)` attains its maximum `dim M_1`.
pub fn is_u_trivial(m: &KroneckerModule, u: &Subspace) -> Result<bool> {
    let xu = x_u_module(u)?;
    let h = hom_dim(&xu.module, m)?;
    assert!(
        h <= m.dim().d1,
        "Hom(X_U, M) must be bounded by dim M_1 (got {h} > {})",
        m.dim().d1
    );
    Ok(h == m.dim().d1)
}

/// Membership flags for the right and left orthogonal of the test family.
#[derive(Clone, Debug)]
pub struct OrthogonalityFlags {
    /// `Hom(X_U, M) = 0` for every surveyed `U`.
    pub in_right_perp: PropertyVerdict,
    /// `Hom(M, X_U) = 0` for every surveyed `U`.
    pub in_left_perp: PropertyVerdict,
}

impl OrthogonalityFlags {
    pub fn both_hold(&self) -> bool {
        self.in_right_perp.holds() && self.in_left_perp.holds()
    }
}

pub fn orthogonality_flags(
    m: &KroneckerModule,
    d: usize,
    mode: SurveyMode,
) -> Result<OrthogonalityFlags> {
    let (pts, scope) = survey_subspaces(m.field(), d, m.r(), mode)?;
    let mut right = None;
    let mut left = None;
    for u in &pts {
        let xu = x_u_module(u)?;
        if right.is_none() {
            let h = hom_dim(&xu.module, m)?;
            if h != 0 {
                right = Some(Witness::NonzeroHom {
                    u: u.clone(),
                    hom: h,
                });
            }
        }
        if left.is_none() {
            let h = hom_dim(m, &xu.module)?;
            if h != 0 {
                left = Some(Witness::NonzeroHom {
                    u: u.clone(),
                    hom: h,
                });
            }
        }
        if right.is_some() && left.is_some() {
            break;
        }
    }
    let pass = match scope {
        Scope::ExactOverFq(_) => Status::Holds,
        Scope::Sampled => Status::EvidenceOnly,
    };
    Ok(OrthogonalityFlags {
        in_right_perp: PropertyVerdict {
            status: right.map(Status::Fails).unwrap_or_else(|| pass.clone()),
            scope,
        },
        in_left_perp: PropertyVerdict {
            status: left.map(Status::Fails).unwrap_or(pass),
            scope,
        },
    })
}
