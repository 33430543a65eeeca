//! Generators and recognizers for the graph classes used by the deciders.

mod catalog;
mod cotree;
mod named;
mod rfamily;
mod spider;
mod tidy;

pub use catalog::{recognize_base, BaseGraph};
pub use cotree::{build_cotree, is_cograph, Cotree};
pub use named::{gen_named, Family};
pub use rfamily::{recognize_r, RShape};
pub use spider::{
    find_quasi_spider, find_spider_partition, gen_quasi_spider, gen_spider, QuasiInfo, Replacement,
    Side, SpiderKind, SpiderPartition,
};
pub use tidy::{is_p4_tidy, is_p4_tidy_definitional, spider_like, MAX_DEFINITIONAL_TIDY};

pub(crate) use catalog::recognize_in;
