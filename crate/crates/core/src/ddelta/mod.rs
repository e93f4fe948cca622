//! Finite levels of the ΔΔ complex of a permutable regular sequence, their
//! transition and Fedder chain maps, and the verification procedures built
//! on them.

mod filtration;
mod level;
mod maps;
mod verify;

pub use filtration::{quotient_and_kernel_complexes, Filtration, SesCertificate};
pub use level::{build_level, DDeltaLevel};
pub use maps::{fedder_chain_map, fedder_embedding_failures, transition_chain_map, LevelChainMap};
pub use verify::{
    ideal_difference_witness, top_class_persistence, verify_augmentation, verify_codim2_v, verify_structure_kernels,
    verify_vanishing, AugmentationReport, Codim2Report, DeathReport, GeneratorDeath, Schedule, StructureKernelReport,
};
