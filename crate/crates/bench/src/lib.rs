//! Shared inputs for the benchmarks.

use modcat_core::cat_d::CategoryD;
use modcat_core::io::{fixtures_dir, Bundle};

pub fn bundle(name: &str) -> Bundle {
    Bundle::load(&fixtures_dir().join(name)).expect("bundled fixture")
}

/// The bundled D6 category in its printed order.
pub fn d6() -> CategoryD {
    let b = bundle("d6");
    let cat = CategoryD::new(&b.factor).expect("category");
    cat.reordered(b.ordering.as_ref().expect("ordering")).expect("ordering")
}
