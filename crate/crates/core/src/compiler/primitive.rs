use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One atomic rig action.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Primitive {
    /// Tip the whole cube over the holder edge with the flipper arm.
    Flip,
    RotCw,
    RotCcw,
    /// Turn the bottom layer (the only layer the cover leaves free).
    BotCw,
    BotCcw,
    Bot2,
}

impl Primitive {
    pub const ALL: [Primitive; 6] = [
        Primitive::Flip,
        Primitive::RotCw,
        Primitive::RotCcw,
        Primitive::BotCw,
        Primitive::BotCcw,
        Primitive::Bot2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Primitive::Flip => "FLIP",
            Primitive::RotCw => "ROT_CW",
            Primitive::RotCcw => "ROT_CCW",
            Primitive::BotCw => "BOT_CW",
            Primitive::BotCcw => "BOT_CCW",
            Primitive::Bot2 => "BOT_2",
        }
    }

    /// Bottom-layer turns need the cover engaged; everything else moves the
    /// whole cube.
    pub fn is_layer_turn(self) -> bool {
        matches!(self, Primitive::BotCw | Primitive::BotCcw | Primitive::Bot2)
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown primitive {0:?}")]
pub struct UnknownPrimitive(pub String);

impl FromStr for Primitive {
    type Err = UnknownPrimitive;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Primitive::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownPrimitive(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum CostModelError {
    #[error("{0} must be a finite, non-negative number of milliseconds")]
    Invalid(&'static str),
    #[error("cost model file: {0}")]
    Parse(#[from] toml::de::Error),
}

/// Duration of each primitive in milliseconds. Defaults are the rig's
/// measured end-to-end times.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CostModel {
    pub flip_ms: f64,
    /// Whole-cube quarter rotation, either direction.
    pub rot90_ms: f64,
    pub bot_cw_ms: f64,
    pub bot_ccw_ms: f64,
    pub bot180_ms: f64,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel {
            flip_ms: 2731.0,
            rot90_ms: 1074.0,
            bot_cw_ms: 2028.0,
            bot_ccw_ms: 2582.0,
            bot180_ms: 3319.0,
        }
    }
}

impl CostModel {
    pub fn cost(&self, p: Primitive) -> f64 {
        match p {
            Primitive::Flip => self.flip_ms,
            Primitive::RotCw | Primitive::RotCcw => self.rot90_ms,
            Primitive::BotCw => self.bot_cw_ms,
            Primitive::BotCcw => self.bot_ccw_ms,
            Primitive::Bot2 => self.bot180_ms,
        }
    }

    pub fn validate(&self) -> Result<(), CostModelError> {
        let fields = [
            ("flip_ms", self.flip_ms),
            ("rot90_ms", self.rot90_ms),
            ("bot_cw_ms", self.bot_cw_ms),
            ("bot_ccw_ms", self.bot_ccw_ms),
            ("bot180_ms", self.bot180_ms),
        ];
        for (name, v) in fields {
            if !v.is_finite() || v < 0.0 {
                return Err(CostModelError::Invalid(name));
            }
        }
        Ok(())
    }

    /// Parses `key = value` lines; missing keys keep their defaults.
    pub fn parse(text: &str) -> Result<CostModel, CostModelError> {
        let model: CostModel = toml::from_str(text)?;
        model.validate()?;
        Ok(model)
    }
}
