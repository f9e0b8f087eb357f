//! Hierarchical simple games on multisets of players.
//!
//! A game is stored by its minimal winning coalitions, each a count vector
//! over the levels of a [`PlayerMultiset`]. On top of the generic
//! [`MultisetGame`] machinery (desirability, shifts, subgames, duals) the
//! crate builds disjunctive and conjunctive hierarchical games, recognizes
//! them, and decides their weightedness both in closed form and by exact
//! linear feasibility, producing a trading-transform certificate or a
//! rational weighted representation as evidence.
//!
//! ```
//! use hiergames::{HierarchyParams, Weightedness, WeightedCase, is_weighted, synthesize_weights};
//!
//! // All five permanent members and at least nine members in total.
//! let unsc = HierarchyParams::conjunctive(vec![5, 10], vec![5, 9]).unwrap();
//! assert_eq!(
//!     is_weighted(&unsc).unwrap(),
//!     Weightedness::Weighted(WeightedCase::TrivialFirstLevel)
//! );
//! assert_eq!(is_weighted(&unsc).unwrap().to_string(), "weighted, case (4)");
//! let rep = synthesize_weights(&unsc.build().unwrap()).unwrap().unwrap();
//! assert_eq!(rep.quota.to_string(), "39");
//! ```

pub mod coalition;
pub mod error;
pub mod feasibility;
pub mod game;
pub mod hierarchy;
pub mod oracle;
pub mod set_game;
pub mod weighted;

pub use coalition::{capacity_limit, set_capacity_limit, Coalition, PlayerMultiset, DEFAULT_CAPACITY};
pub use error::{GameError, Result};
pub use game::{Desirability, MultisetGame};
pub use hierarchy::{
    build_conjunctive, build_disjunctive, recognize, recognize_conjunctive, recognize_disjunctive,
    HierarchyKind, HierarchyParams,
};
pub use set_game::SetGame;
pub use weighted::{
    certificate_of_nonweightedness, is_weighted, is_weighted_conjunctive, is_weighted_disjunctive,
    search_trading_transform, synthesize_weights, verify_trading_transform, TradingTransform,
    WeightedCase, WeightedRepresentation, Weightedness, DEFAULT_MAX_LEN,
};
