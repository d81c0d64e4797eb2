//! Ramsey-side machinery: exact verification of small Ramsey values and of
//! goodness on explicit hosts, chromatic thresholds from extremal numbers,
//! monochromatic stars, and exact chromatic numbers.

pub mod chromatic;
pub mod ramsey;
pub mod search;
pub mod stars;
pub mod turan;

pub use chromatic::{chromatic_number, clique_number, dsatur_coloring, is_colorable, is_proper_coloring, Chromatic};
pub use ramsey::{
    avoids_all, verify_goodness, verify_ramsey_value, GoodnessCertificate, GoodnessVerdict, RamseyReport, RamseyVerdict,
};
pub use search::{
    find_avoiding_coloring, symmetric_levels, Budget, SearchConfig, SearchMode, SearchOutcome, SearchReport,
};
pub use stars::{brooks_star_check, monochromatic_star, star_ramsey, StarError, StarGuarantee};
pub use turan::{erdos_gallai_path_bound, threshold_from_bounds, turan_threshold, TuranError};
