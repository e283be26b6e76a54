//! Exact a priori voting power for simple voting games.
//!
//! The crate computes the Penrose-Banzhaf measure, the Shapley-Shubik index
//! and the Recursive Measure with exact rational arithmetic, splits each into
//! its YES- and NO-voting components, and checks blocker postulates against
//! any measure registered in [`measures::MeasureRegistry`].
//!
//! ```
//! use voting_power::{game::Game, measures};
//!
//! let game = Game::weighted(3, vec![2, 1, 1]).unwrap();
//! let ss = measures::ss(&game).unwrap();
//! assert_eq!(ss.total(0).to_string(), "2/3");
//! ```

pub mod coalition;
pub mod error;
pub mod game;
pub mod measures;
pub mod postulates;
pub mod rational;
pub mod search;
pub mod transform;

pub use coalition::{Coalition, Division, PlayerId};
pub use error::{Error, Result};
pub use game::{Game, Limits, Rule};
pub use rational::Rational;
