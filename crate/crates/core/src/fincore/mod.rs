//! Finite sets, functions, categories, functors and natural transformations.

mod category;
mod function;
mod functor;
mod set;

pub use category::{product, validate_category, Arrow, CategoryBuilder, FinCategory};
pub use function::{enumerate_functions, FinFunction, FunctionIter};
pub use functor::{validate_functor, validate_nat_trans, FinFunctor, FinNatTrans};
pub use set::{check_atom, pair_tag, Atom, FinSet};
