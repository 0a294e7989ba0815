use std::f64::consts::{PI, TAU};

use super::{Result, VqcError};
use crate::qsim::Axis;

/// How a single MDP state component becomes a rotation angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EncodingRule {
    /// Affine map of `[lo, hi]` onto `[0, 2π]`; values outside are clamped.
    Scaled { lo: f64, hi: f64 },
    /// `π` if the component is strictly positive, else `0`.
    Directional,
    /// `arctan(x)`.
    Continuous,
}

impl EncodingRule {
    pub fn angle(&self, x: f64) -> f64 {
        match *self {
            EncodingRule::Scaled { lo, hi } => TAU * (x.clamp(lo, hi) - lo) / (hi - lo),
            EncodingRule::Directional => {
                if x > 0.0 {
                    PI
                } else {
                    0.0
                }
            }
            EncodingRule::Continuous => x.atan(),
        }
    }

    /// Rotation axis of the encoding gate: RX for Directional, RY otherwise.
    pub fn axis(&self) -> Axis {
        match self {
            EncodingRule::Directional => Axis::X,
            EncodingRule::Scaled { .. } | EncodingRule::Continuous => Axis::Y,
        }
    }
}

/// Named CartPole encoding composites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EncodingScheme {
    /// Continuous on every component.
    C,
    /// Scaled on the finite-domain components, continuous elsewhere.
    SC,
    /// Scaled on the finite-domain components, directional elsewhere.
    SD,
}

impl EncodingScheme {
    pub fn as_str(&self) -> &'static str {
        match self {
            EncodingScheme::C => "C",
            EncodingScheme::SC => "SC",
            EncodingScheme::SD => "SD",
        }
    }
}

impl std::str::FromStr for EncodingScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "C" => Ok(EncodingScheme::C),
            "SC" => Ok(EncodingScheme::SC),
            "SD" => Ok(EncodingScheme::SD),
            _ => Err(format!("unknown encoding {s:?} (expected C, SC or SD)")),
        }
    }
}

/// CartPole cart-position domain used by scaled encoding.
pub const CART_POSITION_RANGE: (f64, f64) = (-4.8, 4.8);
/// CartPole pole-angle domain used by scaled encoding.
pub const POLE_ANGLE_RANGE: (f64, f64) = (-0.418, 0.418);

/// One rule per MDP state component.
#[derive(Clone, Debug, PartialEq)]
pub struct EncodingSpec {
    rules: Vec<EncodingRule>,
}

impl EncodingSpec {
    pub fn new(rules: Vec<EncodingRule>) -> Result<Self> {
        if rules.is_empty() {
            return Err(VqcError::EmptyEncoding);
        }
        for (i, rule) in rules.iter().enumerate() {
            if let EncodingRule::Scaled { lo, hi } = *rule {
                if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                    return Err(VqcError::InvalidScaledDomain { index: i, lo, hi });
                }
            }
        }
        Ok(Self { rules })
    }

    /// Encoding for the CartPole state `(x, x_dot, theta, theta_dot)`.
    pub fn cartpole(scheme: EncodingScheme) -> Self {
        let (xl, xh) = CART_POSITION_RANGE;
        let (al, ah) = POLE_ANGLE_RANGE;
        let infinite = match scheme {
            EncodingScheme::SD => EncodingRule::Directional,
            _ => EncodingRule::Continuous,
        };
        let rules = match scheme {
            EncodingScheme::C => vec![EncodingRule::Continuous; 4],
            EncodingScheme::SC | EncodingScheme::SD => vec![
                EncodingRule::Scaled { lo: xl, hi: xh },
                infinite,
                EncodingRule::Scaled { lo: al, hi: ah },
                infinite,
            ],
        };
        Self { rules }
    }

    pub fn rules(&self) -> &[EncodingRule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

/// Maps an MDP state to encoding angles (radians), one per component.
pub fn encode(state: &[f64], spec: &EncodingSpec) -> Result<Vec<f64>> {
    if state.len() != spec.len() {
        return Err(VqcError::StateDimension {
            expected: spec.len(),
            got: state.len(),
        });
    }
    state
        .iter()
        .zip(spec.rules())
        .enumerate()
        .map(|(i, (&x, rule))| {
            if x.is_finite() {
                Ok(rule.angle(x))
            } else {
                Err(VqcError::NonFiniteInput { index: i, value: x })
            }
        })
        .collect()
}
