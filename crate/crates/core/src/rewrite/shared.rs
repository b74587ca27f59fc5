//! Process-wide completed systems, optionally backed by a cache directory.

use super::{load_system, save_system, RewriteError, RewriteSystem};
use crate::freealg::{defining_relations, CMode};
use crate::scalar::Scalar;
use parking_lot::Mutex;
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock};

/// Environment variable naming the directory for cached systems.
pub const CACHE_DIR_VAR: &str = "QONS_CACHE_DIR";

type Table = Mutex<HashMap<CMode, Vec<Arc<RewriteSystem<Scalar>>>>>;

fn table() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(Default::default)
}

/// File name used for a cached system.
pub fn cache_file_name(mode: CMode, bound: usize) -> String {
    format!("{mode}-b{bound}.json")
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_DIR_VAR).map(PathBuf::from)
}

/// Complete the defining relations of `mode` to `bound` from scratch.
pub fn complete_fresh(mode: CMode, bound: usize) -> Result<RewriteSystem<Scalar>, RewriteError> {
    let mut sys = RewriteSystem::new(defining_relations(mode).to_vec(), mode);
    sys.complete(bound)?;
    Ok(sys)
}

/// Load `dir/<mode>-b<bound>.json` if present, else complete and save it.
pub fn load_or_complete(dir: &Path, mode: CMode, bound: usize) -> Result<RewriteSystem<Scalar>, RewriteError> {
    let path = dir.join(cache_file_name(mode, bound));
    if path.exists() {
        if let Ok(s) = load_system(&path, mode) {
            if s.completed_degree() == bound {
                return Ok(s);
            }
        }
    }
    let s = complete_fresh(mode, bound)?;
    save_system(&s, &path)?;
    Ok(s)
}

/// A frozen system completed to at least `bound`, shared by the process.
///
/// A system with a larger completed degree is returned when one exists: its
/// normal forms agree on everything of degree at most `bound`.
pub fn shared_system(mode: CMode, bound: usize) -> Result<Arc<RewriteSystem<Scalar>>, RewriteError> {
    if let Some(s) = table()
        .lock()
        .get(&mode)
        .and_then(|v| v.iter().find(|s| s.completed_degree() >= bound).cloned())
    {
        return Ok(s);
    }
    let sys = match cache_dir() {
        Some(dir) => load_or_complete(&dir, mode, bound)?,
        None => complete_fresh(mode, bound)?,
    };
    let sys = Arc::new(sys);
    let mut t = table().lock();
    let v = t.entry(mode).or_default();
    v.push(sys.clone());
    v.sort_by_key(|s| s.completed_degree());
    Ok(sys)
}

/// Register an already completed system (for example one read from a cache
/// file) so later [`shared_system`] calls reuse it.
pub fn install_shared(sys: RewriteSystem<Scalar>) -> Arc<RewriteSystem<Scalar>> {
    let sys = Arc::new(sys);
    let mut t = table().lock();
    let v = t.entry(sys.mode()).or_default();
    v.push(sys.clone());
    v.sort_by_key(|s| s.completed_degree());
    sys
}
