//! JSON persistence of completed systems over [`Scalar`].

use super::{RewriteError, RewriteRule, RewriteSystem};
use crate::freealg::{defining_relations, CMode, NcPoly, Word};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const CACHE_FORMAT: &str = "qonsager-rewrite-system";
pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct RuleJson {
    lead: String,
    tail: Vec<(String, Scalar)>,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    format: String,
    version: u32,
    order: String,
    c_mode: CMode,
    completed_degree: usize,
    rules: Vec<RuleJson>,
}

pub fn save_system(sys: &RewriteSystem<Scalar>, path: &Path) -> Result<(), RewriteError> {
    let doc = SystemJson {
        format: CACHE_FORMAT.into(),
        version: CACHE_VERSION,
        order: sys.order().describe().into(),
        c_mode: sys.mode(),
        completed_degree: sys.completed_degree(),
        rules: sys
            .rules()
            .into_iter()
            .map(|r| RuleJson {
                lead: r.lead.to_digits(),
                tail: r.tail.terms().iter().map(|(w, k)| (w.to_digits(), k.clone())).collect(),
            })
            .collect(),
    };
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    let text = serde_json::to_string(&doc).map_err(|e| RewriteError::Format(e.to_string()))?;
    // write then rename so a concurrent reader never sees a partial file
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

/// Load a system, checking its header against `expected` mode.
pub fn load_system(path: &Path, expected: CMode) -> Result<RewriteSystem<Scalar>, RewriteError> {
    let text = std::fs::read_to_string(path)?;
    let doc: SystemJson =
        serde_json::from_str(&text).map_err(|e| RewriteError::Format(e.to_string()))?;
    if doc.format != CACHE_FORMAT {
        return Err(RewriteError::Format(format!("unknown format {:?}", doc.format)));
    }
    if doc.version != CACHE_VERSION {
        return Err(RewriteError::Version {
            found: doc.version,
            expected: CACHE_VERSION,
        });
    }
    if doc.c_mode != expected {
        return Err(RewriteError::ModeMismatch {
            found: doc.c_mode,
            expected,
        });
    }
    if doc.order != super::MonomialOrder.describe() {
        return Err(RewriteError::Format(format!("unknown order {:?}", doc.order)));
    }
    let word = |s: &str| {
        Word::from_digits(s).ok_or_else(|| RewriteError::Format(format!("bad word {s:?}")))
    };
    let mut rules = Vec::with_capacity(doc.rules.len());
    for r in &doc.rules {
        let lead = word(&r.lead)?;
        let mut terms = Vec::with_capacity(r.tail.len());
        for (w, k) in &r.tail {
            let w = word(w)?;
            if w >= lead {
                return Err(RewriteError::Format(format!("tail word not below lead {}", r.lead)));
            }
            terms.push((w, k.clone()));
        }
        rules.push(RewriteRule {
            lead,
            tail: NcPoly::from_terms(terms),
        });
    }
    let gens = defining_relations(expected).to_vec();
    Ok(RewriteSystem::from_rules(rules, gens, expected, doc.completed_degree))
}
