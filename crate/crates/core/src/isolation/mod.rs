//! Real root isolation, exact interval arithmetic and isolating boxes.

pub mod boxes;
pub mod interval;
pub mod roots;

pub use boxes::{isolate_boxes, isolate_boxes_with, IsolatingBox};
pub use interval::{
    footnote_width_bound, interval_eval, interval_eval_bivariate, interval_eval_stats, Interval,
};
pub use roots::{
    descartes_count, isolate_real_roots, refine_interval, root_separation_lower_bound,
    separation_lower_bound,
};
