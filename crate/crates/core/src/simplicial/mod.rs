//! Truncated simplicial sets and modules, edgewise subdivision, Λₙᵒᵖ-structures
//! and the associated chain complexes.

mod chain;
mod module;
mod ops;
mod sset;

pub use chain::{moore_complex, normalized_complex, ChainComplex, HomologyGroup};
pub use module::{
    compose_module_maps, edgewise_subdivide_lambda, edgewise_subdivide_module, identity_morphism, module_maps_equal,
    LambdaModule, SimplicialModule, SimplicialModuleMap,
};
pub use ops::{
    check_lambda_relations, check_simplicial_identities, LambdaObject, MonotoneMap, RelationFailure, RelationReport,
    SimplicialObject,
};
pub use sset::{
    compose_set_maps, covering_map_q, covering_maps_compatible, edgewise_subdivide_sset, simplicial_circle,
    subdivide_morphism, subdivision_compatible, subdivision_group_generator, FiniteSimplicialSet, LambdaOperators,
    SetMap, SimplicialMorphism, SimplicialSetMap,
};
