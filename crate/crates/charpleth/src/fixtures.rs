//! Bundled character tables.
//!
//! The cyclic and extraspecial tables are generated on demand; the
//! remaining tables were computed once by the `fixturegen` tool (Burnside
//! class algebra + Dixon lifting over an explicit matrix or permutation
//! group) and committed as JSON.  Everything loads offline.

use std::sync::Arc;

use crate::chartab::{fusion_from_json, table_from_json, CharacterTable, FusionMap};
use crate::error::Result;

pub const A5_JSON: &str = include_str!("../fixtures/a5.json");
pub const S5_JSON: &str = include_str!("../fixtures/s5.json");
pub const SL2_5_JSON: &str = include_str!("../fixtures/sl2_5.json");
pub const SP4_3_JSON: &str = include_str!("../fixtures/sp4_3.json");
pub const A5_S5_FUSION_JSON: &str = include_str!("../fixtures/a5_s5_fusion.json");

pub fn a5() -> Result<Arc<CharacterTable>> {
    table_from_json(A5_JSON)
}

pub fn s5() -> Result<Arc<CharacterTable>> {
    table_from_json(S5_JSON)
}

pub fn sl2_5() -> Result<Arc<CharacterTable>> {
    table_from_json(SL2_5_JSON)
}

pub fn sp4_3() -> Result<Arc<CharacterTable>> {
    table_from_json(SP4_3_JSON)
}

pub fn a5_s5_fusion() -> Result<FusionMap> {
    fusion_from_json(A5_S5_FUSION_JSON, a5()?, s5()?)
}

/// Every bundled table, for fixture-wide property checks.
pub fn all_bundled() -> Result<Vec<Arc<CharacterTable>>> {
    Ok(vec![a5()?, s5()?, sl2_5()?, sp4_3()?])
}
