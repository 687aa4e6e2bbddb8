//! Closed-form generating functions of the three families and the series
//! derived from them.

pub mod closed_form;
pub mod one_var;
pub mod two_var;

pub use one_var::{
    MapSeries1, SeriesCatalog1v, ThreeConnectedSeries1, TwoConnectedSeries1,
};
pub use two_var::{
    core_arguments, MapSeries2, SeriesCatalog2v, ThreeConnectedSeries2, TwoConnectedSeries2,
};
