//! Exact rational scalars, dense univariate and sparse bivariate polynomials,
//! and the Sturm machinery everything else is certified with.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

mod bipoly;
mod intpoly;
pub mod rational;
pub mod sturm;
mod unipoly;

pub use bipoly::BiPoly;
pub use intpoly::IntPoly;
pub use rational::Rational;
pub use sturm::{squarefree_part, sturm_count, Bound, Squarefree, SturmSequence};
pub use unipoly::UniPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Z,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Z,
            Var::Z => Var::X,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Z => "z",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" => Ok(Var::X),
            "z" => Ok(Var::Z),
            other => Err(Error::UnknownVariable(other.to_string())),
        }
    }
}
