//! Exact modular data for the double of a finite group factorized as `X = GM`.
//!
//! Character tables, the coset data of a transversal, simple objects of both
//! categories, the `S~`, `S`, `T`, `C` matrices and a brute-force oracle built
//! from explicit modules.

pub mod cat_c;
pub mod cat_d;
pub mod chartable;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod io;
pub mod linalg;
pub mod matched_pair;
pub mod modular;
pub mod oracle;
pub mod representation;

pub use cat_c::{CategoryC, SimpleObjectC};
pub use cat_d::{CategoryD, OrderingFile, SimpleObjectD};
pub use chartable::{CharacterTable, ClassFunction};
pub use cyclotomic::Cyclotomic;
pub use group::{ConjugacyClass, FiniteGroup, GroupSpec, Subgroup};
pub use linalg::CMat;
pub use matched_pair::CosetFactorization;
pub use modular::{build_modular_data, ModularData};
pub use oracle::{ExplicitModule, OracleReport};
