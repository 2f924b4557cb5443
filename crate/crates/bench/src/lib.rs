//! Shared fixtures for the criterion benches.

use polyadic_core::reference::{example1, example3, Instance};
use polyadic_core::{CodeKind, GeneratorMatrix};

/// Gray image of `P_1` in the GF(13) instance, an `[18, 6]` code.
pub fn gf13_gray_image() -> GeneratorMatrix {
    let inst = Instance::build(&example3()).expect("reference instance builds");
    inst.gray_image(&inst.code(CodeKind::P, 0))
}

/// Gray image of `P_1` in the GF(3) length 13 instance, a `[78, 18]` code.
pub fn gf3_gray_image() -> GeneratorMatrix {
    let inst = Instance::build(&example1()).expect("reference instance builds");
    inst.gray_image(&inst.code(CodeKind::P, 0))
}
