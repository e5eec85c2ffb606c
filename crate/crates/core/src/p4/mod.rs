//! Graphs with few induced P4s: decomposition into unions, joins,
//! pseudo-splits, quasi-spiders, separable p-components and small pieces,
//! and the well-coveredness dynamic program over it.

mod decompose;
mod dp;
mod structure;

pub use decompose::{
    decompose_step, is_class_member, ClassMode, DecompositionCase, DEFAULT_Q, EXT_LADEN_MEMBERSHIP_GUARD,
    QQ4_MEMBERSHIP_GUARD,
};
pub use dp::well_covered_few_p4;
pub use structure::{
    count_p4s, for_each_p4, induced_p4s, is_p_connected, p_components, pseudo_split_partition,
    quasi_spider_partition, separable_p_component, separable_p_components, special_five, spider_partition,
    PComponentSeparation, PseudoSplitPartition, Replacement, Side, Special, SpiderKind, SpiderPartition,
    Substitution, P4_GUARD,
};
