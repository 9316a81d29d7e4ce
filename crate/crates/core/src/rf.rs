//! Link-budget, antenna, and spectrum-sharing arithmetic.
//!
//! All powers are dBm, gains dB, angles degrees, distances meters,
//! frequencies Hz. The coverage predicate [`is_covered`] combines the
//! link-range condition (received power above sensitivity) with the
//! beamwidth condition (user inside the down-tilted main lobe).

use thiserror::Error;

use crate::geom::{self, Point3};
use crate::real::Real;

/// Propagation speed used by the link-budget formulas, in m/s
/// (the 3×10⁸ rounding conventional in link-budget practice).
pub const SPEED_OF_LIGHT_M_S: f64 = 3.0e8;

#[derive(Debug, Error, PartialEq)]
pub enum RfError {
    #[error("beamwidth must be in (0, 180) degrees, got {0}")]
    InvalidBeamwidth(f64),
    #[error("distance must be positive, got {0} m")]
    NonPositiveDistance(f64),
    #[error("invalid radio configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid airspace: {0}")]
    InvalidAirspace(String),
    #[error("operation requires an N-OSS sharing policy")]
    PolicyNotNoss,
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Radio parameters of the UAV base station and its users.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioConfig<F> {
    /// Equivalent effective isotropic radiated power P_T, dBm.
    pub eirp_dbm: F,
    /// Carrier frequency f_c, Hz.
    pub carrier_hz: F,
    /// Pathloss exponent n (dimensionless, ≥ 1).
    pub pathloss_exp: F,
    /// Receiver sensitivity P_min, dBm.
    pub sensitivity_dbm: F,
    /// Antenna beamwidth θ_B, degrees (0 < θ_B < 180).
    pub beamwidth_deg: F,
    /// Side-lobe antenna gain g_s, dB. Stored for the off-axis branch of
    /// the gain pattern; coverage decisions use the main lobe only.
    pub sidelobe_gain_db: F,
}

impl<F: Real> RadioConfig<F> {
    pub fn new(
        eirp_dbm: F,
        carrier_hz: F,
        pathloss_exp: F,
        sensitivity_dbm: F,
        beamwidth_deg: F,
        sidelobe_gain_db: F,
    ) -> Result<Self, RfError> {
        let cfg = Self {
            eirp_dbm,
            carrier_hz,
            pathloss_exp,
            sensitivity_dbm,
            beamwidth_deg,
            sidelobe_gain_db,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), RfError> {
        check_beamwidth(self.beamwidth_deg)?;
        if !(self.carrier_hz > F::zero()) {
            return Err(RfError::InvalidConfig(format!(
                "carrier frequency must be positive, got {} Hz",
                self.carrier_hz
            )));
        }
        if !(self.pathloss_exp >= F::one()) {
            return Err(RfError::InvalidConfig(format!(
                "pathloss exponent must be >= 1, got {}",
                self.pathloss_exp
            )));
        }
        if !(self.eirp_dbm > self.sensitivity_dbm) {
            return Err(RfError::InvalidConfig(format!(
                "EIRP ({} dBm) must exceed sensitivity ({} dBm)",
                self.eirp_dbm, self.sensitivity_dbm
            )));
        }
        Ok(())
    }

    /// Same configuration at a different EIRP. Used by the N-OSS power
    /// sweep; the probed power may approach the sensitivity, in which case
    /// the link range degrades toward zero rather than erroring.
    pub fn with_eirp_dbm(mut self, eirp_dbm: F) -> Self {
        self.eirp_dbm = eirp_dbm;
        self
    }

    /// Pathloss budget L_th = P_T − P_min, dB.
    pub fn link_threshold_db(&self) -> F {
        self.eirp_dbm - self.sensitivity_dbm
    }
}

/// Spectrum sharing policy with the terrestrial network.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SharingPolicy<F> {
    /// Orthogonal spectrum sharing: no interference constraint.
    Oss,
    /// Non-orthogonal spectrum sharing: the received interference at any
    /// terrestrial user (at altitude up to `guard_alt_m`) must stay below
    /// `interference_dbm`.
    Noss {
        /// Highest altitude a terrestrial user may occupy, meters.
        guard_alt_m: F,
        /// Peak tolerated interference Δ at terrestrial users, dBm.
        interference_dbm: F,
    },
}

impl<F: Real> SharingPolicy<F> {
    pub fn is_noss(&self) -> bool {
        matches!(self, SharingPolicy::Noss { .. })
    }

    pub fn validate(&self) -> Result<(), RfError> {
        if let SharingPolicy::Noss {
            guard_alt_m,
            interference_dbm,
        } = self
        {
            if !(*guard_alt_m >= F::zero()) || !guard_alt_m.is_finite() {
                return Err(RfError::InvalidConfig(format!(
                    "guard altitude must be finite and >= 0, got {guard_alt_m} m"
                )));
            }
            if !interference_dbm.is_finite() {
                return Err(RfError::InvalidConfig(format!(
                    "interference threshold must be finite, got {interference_dbm} dBm"
                )));
            }
        }
        Ok(())
    }
}

/// The box the UAV users fly in: horizontal bounds plus the altitude
/// corridor [h_min, h_max].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Airspace<F> {
    pub x_min_m: F,
    pub x_max_m: F,
    pub y_min_m: F,
    pub y_max_m: F,
    pub h_min_m: F,
    pub h_max_m: F,
}

impl<F: Real> Airspace<F> {
    pub fn new(
        x_min_m: F,
        x_max_m: F,
        y_min_m: F,
        y_max_m: F,
        h_min_m: F,
        h_max_m: F,
    ) -> Result<Self, RfError> {
        let a = Self {
            x_min_m,
            x_max_m,
            y_min_m,
            y_max_m,
            h_min_m,
            h_max_m,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<(), RfError> {
        if !(self.x_min_m < self.x_max_m && self.y_min_m < self.y_max_m) {
            return Err(RfError::InvalidAirspace(format!(
                "horizontal bounds must be non-empty, got x [{}, {}] y [{}, {}]",
                self.x_min_m, self.x_max_m, self.y_min_m, self.y_max_m
            )));
        }
        if !(F::zero() <= self.h_min_m && self.h_min_m < self.h_max_m) {
            return Err(RfError::InvalidAirspace(format!(
                "altitude corridor requires 0 <= h_min < h_max, got [{}, {}]",
                self.h_min_m, self.h_max_m
            )));
        }
        Ok(())
    }

    /// Horizontal extents centered on the origin, the usual simulation box.
    pub fn centered(width_m: F, depth_m: F, h_min_m: F, h_max_m: F) -> Result<Self, RfError> {
        let two = F::lit(2.0);
        Self::new(
            -width_m / two,
            width_m / two,
            -depth_m / two,
            depth_m / two,
            h_min_m,
            h_max_m,
        )
    }

    pub fn mid_x(&self) -> F {
        (self.x_min_m + self.x_max_m) / F::lit(2.0)
    }

    pub fn mid_y(&self) -> F {
        (self.y_min_m + self.y_max_m) / F::lit(2.0)
    }

    /// Corridor volume in km³.
    pub fn volume_km3(&self) -> F {
        let km = F::lit(1e-3);
        (self.x_max_m - self.x_min_m)
            * km
            * ((self.y_max_m - self.y_min_m) * km)
            * ((self.h_max_m - self.h_min_m) * km)
    }

    pub fn contains(&self, p: &Point3<F>) -> bool {
        self.x_min_m <= p.x
            && p.x <= self.x_max_m
            && self.y_min_m <= p.y
            && p.y <= self.y_max_m
            && self.h_min_m <= p.z
            && p.z <= self.h_max_m
    }
}

/// Feasible EIRP interval under N-OSS.
///
/// `p_low_dbm` is the power at which the minimum interference-safe altitude
/// equals h_max; `p_high_dbm` the power at which it equals h_max + d_max
/// (coverage region tangent to the corridor top). Ω is the linear factor
/// 10^(−Δ/10n) − 10^(−P_min/10n); the interval is meaningful only when
/// Δ < P_min (Ω > 0). `p_low_dbm` is −∞ when guard altitude equals h_max.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NossPowerBounds<F> {
    pub p_low_dbm: F,
    pub p_high_dbm: F,
    pub omega: F,
    pub feasible: bool,
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

fn check_beamwidth<F: Real>(beamwidth_deg: F) -> Result<(), RfError> {
    if beamwidth_deg > F::zero() && beamwidth_deg < F::lit(180.0) {
        Ok(())
    } else {
        Err(RfError::InvalidBeamwidth(
            beamwidth_deg.to_f64().unwrap_or(f64::NAN),
        ))
    }
}

/// Main-lobe gain 10·log10(29000/θ_B²), dB.
pub fn main_lobe_gain_db<F: Real>(beamwidth_deg: F) -> Result<F, RfError> {
    check_beamwidth(beamwidth_deg)?;
    Ok(F::lit(10.0) * (F::lit(29000.0) / (beamwidth_deg * beamwidth_deg)).log10())
}

/// Directional antenna gain at sector angle ψ: the main-lobe gain inside
/// |ψ| ≤ θ_B/2, the side-lobe gain outside.
pub fn antenna_gain_db<F: Real>(
    beamwidth_deg: F,
    sector_angle_deg: F,
    sidelobe_gain_db: F,
) -> Result<F, RfError> {
    let main = main_lobe_gain_db(beamwidth_deg)?;
    if sector_angle_deg.abs() <= beamwidth_deg / F::lit(2.0) {
        Ok(main)
    } else {
        Ok(sidelobe_gain_db)
    }
}

/// Transmit power P_t(θ_B) = P_T − G_3dB, dBm: the power the amplifier must
/// supply so the EIRP stays fixed as the beam widens.
pub fn transmit_power_dbm<F: Real>(eirp_dbm: F, beamwidth_deg: F) -> Result<F, RfError> {
    Ok(eirp_dbm - main_lobe_gain_db(beamwidth_deg)?)
}

/// Pathloss 10·n·log10(4π·f_c·d/c), dB.
pub fn pathloss_db<F: Real>(distance_m: F, carrier_hz: F, pathloss_exp: F) -> Result<F, RfError> {
    if !(distance_m > F::zero()) {
        return Err(RfError::NonPositiveDistance(
            distance_m.to_f64().unwrap_or(f64::NAN),
        ));
    }
    let c = F::lit(SPEED_OF_LIGHT_M_S);
    let four_pi = F::lit(4.0 * std::f64::consts::PI);
    Ok(F::lit(10.0) * pathloss_exp * (four_pi * carrier_hz * distance_m / c).log10())
}

/// Maximal link distance d_max = (c/4π·f_c)·10^(L_th/10n) at which the
/// received power still meets the sensitivity.
pub fn max_link_distance_m<F: Real>(cfg: &RadioConfig<F>) -> F {
    let c = F::lit(SPEED_OF_LIGHT_M_S);
    let four_pi = F::lit(4.0 * std::f64::consts::PI);
    let exponent = cfg.link_threshold_db() / (F::lit(10.0) * cfg.pathloss_exp);
    c / (four_pi * cfg.carrier_hz) * F::lit(10.0).powf(exponent)
}

/// Minimum interference-safe UAV-BS altitude under N-OSS:
/// z_min = d'_max + h_guard with d'_max = (c/4π·f_c)·10^((P_T−Δ)/10n).
pub fn min_altitude_noss_m<F: Real>(
    cfg: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
) -> Result<F, RfError> {
    let SharingPolicy::Noss {
        guard_alt_m,
        interference_dbm,
    } = policy
    else {
        return Err(RfError::PolicyNotNoss);
    };
    let c = F::lit(SPEED_OF_LIGHT_M_S);
    let four_pi = F::lit(4.0 * std::f64::consts::PI);
    let exponent = (cfg.eirp_dbm - *interference_dbm) / (F::lit(10.0) * cfg.pathloss_exp);
    Ok(c / (four_pi * cfg.carrier_hz) * F::lit(10.0).powf(exponent) + *guard_alt_m)
}

/// Feasible EIRP interval [P_T^low, P_T^high] under N-OSS.
///
/// The EIRP field of `cfg_sans_power` is ignored. Returns an infeasible
/// result (never an error) when Ω ≤ 0 (Δ ≥ P_min) or the bounds cross.
pub fn noss_power_bounds<F: Real>(
    cfg_sans_power: &RadioConfig<F>,
    policy: &SharingPolicy<F>,
    airspace: &Airspace<F>,
) -> Result<NossPowerBounds<F>, RfError> {
    let SharingPolicy::Noss {
        guard_alt_m,
        interference_dbm,
    } = policy
    else {
        return Err(RfError::PolicyNotNoss);
    };
    let ten = F::lit(10.0);
    let n = cfg_sans_power.pathloss_exp;
    let omega = ten.powf(-*interference_dbm / (ten * n))
        - ten.powf(-cfg_sans_power.sensitivity_dbm / (ten * n));
    let separation = airspace.h_max_m - *guard_alt_m;
    if omega <= F::zero() || separation < F::zero() {
        return Ok(NossPowerBounds {
            p_low_dbm: F::nan(),
            p_high_dbm: F::nan(),
            omega,
            feasible: false,
        });
    }
    let c = F::lit(SPEED_OF_LIGHT_M_S);
    let four_pi = F::lit(4.0 * std::f64::consts::PI);
    // separation == 0 gives the −∞ sentinel for both bounds.
    let p_low_dbm = ten * n * (four_pi * cfg_sans_power.carrier_hz * separation / c).log10()
        + *interference_dbm;
    let p_high_dbm =
        ten * n * (four_pi * cfg_sans_power.carrier_hz * separation / (c * omega)).log10();
    Ok(NossPowerBounds {
        p_low_dbm,
        p_high_dbm,
        omega,
        feasible: p_low_dbm <= p_high_dbm,
    })
}

/// Exact per-user coverage predicate: the user is covered when it is within
/// d_max of the base station and inside the down-tilted cone of half-angle
/// θ_B/2. A user level with or above the base station is not covered.
pub fn is_covered<F: Real>(bs: Point3<F>, ue: Point3<F>, d_max_m: F, beamwidth_deg: F) -> bool {
    match geom::admissible_radius_m(bs.z, ue.z, d_max_m, beamwidth_deg) {
        Some(r) => bs.xy().dist_sq(&ue.xy()) <= r * r,
        None => false,
    }
}
