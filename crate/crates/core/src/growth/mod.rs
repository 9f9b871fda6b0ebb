//! Growth constants from the cyclic components, and dominant-pole
//! asymptotics from the exact generating function.
//!
//! For a cyclic component `C`, `φ_C(x) = spr(W_C(x))` is strictly
//! increasing on `(0, 1]` and the component radius `r_C` solves
//! `φ_C(r_C) = 1`. The growth constant is `α_m = max(1/r_U, 1/r_V)`.

mod perron;

pub use perron::{radius, spectral_radius, Bracket, PerronState, SparseComponent};

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{catalan, ln_biguint};
use crate::error::{Error, Result};
use crate::poly::{real_roots_in, ExactPoly, RationalFn};
use crate::solver::generating_function;
use crate::system::{build_system, component_matrix, ComponentInfo, ComponentTag, StateSystem};

/// Default bisection tolerance on component radii.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Relative threshold on `|D'(ρ)|` for declaring the dominant pole simple.
pub const SIMPLE_POLE_THRESHOLD: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dominant {
    U,
    V,
    Tie,
}

impl std::fmt::Display for Dominant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Dominant::U => "U",
            Dominant::V => "V",
            Dominant::Tie => "tie",
        })
    }
}

/// Growth data for one `m`. For `m = 1` there are no `U`/`V` components
/// and only `alpha = 1` is reported.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub m: u32,
    pub tol: f64,
    pub r_u: Option<Bracket>,
    pub r_v: Option<Bracket>,
    pub lambda_u: Option<f64>,
    pub lambda_v: Option<f64>,
    pub alpha: f64,
    pub dominant: Option<Dominant>,
    pub rho: f64,
    pub lower_bound: f64,
}

/// Simple-pole data for `A^(m)`. `next_pole_modulus` only considers real
/// positive poles; complex poles are not searched.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoleReport {
    pub m: u32,
    pub rho: Bracket,
    /// `None` when `|D'(ρ)|` is below the simplicity threshold.
    pub pole_simple: Option<bool>,
    pub kappa: Option<f64>,
    pub next_pole_modulus: Option<f64>,
}

/// `C_{m-1}^{1/(m+1)}`, computed in the log domain.
pub fn catalan_lower_bound(m: u32) -> f64 {
    if m == 0 {
        return 1.0;
    }
    (ln_biguint(&catalan(m - 1)) / (m as f64 + 1.0)).exp()
}

/// `spr(W_C(x))` for a cyclic component of `sys`.
pub fn spectral_radius_at(sys: &StateSystem, c: &ComponentInfo, x: f64, tol: f64) -> Result<f64> {
    if !c.cyclic {
        return Err(Error::AcyclicComponent(c.id));
    }
    spectral_radius(&SparseComponent::new(&component_matrix(sys, c)), x, tol)
}

/// Certified bracket on `r_C` of width below `tol`.
pub fn component_radius(sys: &StateSystem, c: &ComponentInfo, tol: f64) -> Result<Bracket> {
    if !c.cyclic {
        return Err(Error::AcyclicComponent(c.id));
    }
    radius(&SparseComponent::new(&component_matrix(sys, c)), tol)
}

pub fn growth_constants(m: u32, tol: f64) -> Result<GrowthReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let sys = build_system(m)?;
    let lower_bound = catalan_lower_bound(m);
    if m == 1 {
        return Ok(GrowthReport {
            m,
            tol,
            r_u: None,
            r_v: None,
            lambda_u: None,
            lambda_v: None,
            alpha: 1.0,
            dominant: None,
            rho: 1.0,
            lower_bound,
        });
    }
    let find = |tag| sys.component_by_tag(tag).ok_or_else(|| Error::Classification(format!("missing {tag} component")));
    let (u, v) = (find(ComponentTag::U)?, find(ComponentTag::V)?);
    let (r_u, r_v) = rayon::join(|| component_radius(&sys, u, tol), || component_radius(&sys, v, tol));
    let (r_u, r_v) = (r_u?, r_v?);
    let (lu, lv) = (1.0 / r_u.mid(), 1.0 / r_v.mid());
    let dominant = if (lu - lv).abs() < 10.0 * tol {
        Dominant::Tie
    } else if lu > lv {
        Dominant::U
    } else {
        Dominant::V
    };
    let alpha = lu.max(lv);
    Ok(GrowthReport {
        m,
        tol,
        r_u: Some(r_u),
        r_v: Some(r_v),
        lambda_u: Some(lu),
        lambda_v: Some(lv),
        alpha,
        dominant: Some(dominant),
        rho: r_u.mid().min(r_v.mid()),
        lower_bound,
    })
}

impl GrowthReport {
    /// `m,lambda_U,lambda_V,alpha,lower_bound`, rounded to three decimals.
    pub fn csv_row(&self) -> String {
        let f = |x: Option<f64>| x.map_or(String::new(), |x| format!("{x:.3}"));
        format!(
            "{},{},{},{:.3},{:.3}",
            self.m,
            f(self.lambda_u),
            f(self.lambda_v),
            self.alpha,
            self.lower_bound
        )
    }

    pub const CSV_HEADER: &'static str = "m,lambda_U,lambda_V,alpha,lower_bound";
}

/// Dominant pole `ρ` of the reduced `A^(m)`, its simplicity and the constant
/// `κ = -N(ρ) / (ρ D'(ρ))` in `a_n ~ κ ρ^{-n}`.
pub fn dominant_pole_asymptotics(m: u32, tol: f64) -> Result<PoleReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    pole_report(m, &generating_function(m)?, tol)
}

pub fn pole_report(m: u32, gf: &RationalFn, tol: f64) -> Result<PoleReport> {
    let den = gf.den();
    let zero = BigRational::zero();
    let hi = crate::poly::cauchy_bound(den);
    let roots = real_roots_in(den, &zero, &hi, tol);
    let Some(first) = roots.first() else {
        return Err(Error::Classification("denominator has no positive real root".into()));
    };
    let rho = first.midpoint_exact();
    let d1 = den.derivative().eval(&rho);
    let scale = den.max_abs_coeff();
    let slope = d1.to_f64().unwrap_or(0.0).abs();
    let simple = slope > SIMPLE_POLE_THRESHOLD * scale;
    let kappa = simple.then(|| {
        let k = -(gf.num().eval(&rho)) / (&rho * &d1);
        k.to_f64().unwrap_or(f64::NAN)
    });
    Ok(PoleReport {
        m,
        rho: Bracket {
            lo: first.lo.to_f64().unwrap_or(0.0),
            hi: first.hi.to_f64().unwrap_or(0.0),
        },
        pole_simple: simple.then_some(true),
        kappa,
        next_pole_modulus: roots.get(1).map(|r| r.midpoint()),
    })
}

/// Smallest positive real root of `p`, from exact root isolation.
pub fn smallest_positive_root(p: &ExactPoly, tol: f64) -> Option<f64> {
    let zero = BigRational::zero();
    let hi = crate::poly::cauchy_bound(p);
    real_roots_in(p, &zero, &hi, tol).first().map(|r| r.midpoint())
}
