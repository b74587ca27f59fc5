use crate::freealg::Word;
use std::collections::HashMap;

const DENSE_MAX: usize = 20;
const NONE: u32 = u32::MAX;

enum Table {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

impl Table {
    fn new(k: usize) -> Table {
        if k <= DENSE_MAX {
            Table::Dense(vec![NONE; 1 << k])
        } else {
            Table::Sparse(HashMap::new())
        }
    }

    fn get(&self, bits: u64) -> Option<u32> {
        match self {
            Table::Dense(v) => {
                let x = v[bits as usize];
                (x != NONE).then_some(x)
            }
            Table::Sparse(m) => m.get(&bits).copied(),
        }
    }
}

/// Lookup of rule leads by length and bit pattern.
#[derive(Default)]
pub(crate) struct LeadIndex {
    tables: Vec<Option<Table>>,
    counts: Vec<usize>,
    lengths: Vec<usize>,
}

impl LeadIndex {
    pub fn insert(&mut self, lead: Word, slot: u32) {
        let k = lead.len();
        if self.tables.len() <= k {
            self.tables.resize_with(k + 1, || None);
            self.counts.resize(k + 1, 0);
        }
        let t = self.tables[k].get_or_insert_with(|| Table::new(k));
        match t {
            Table::Dense(v) => v[lead.raw() as usize] = slot,
            Table::Sparse(m) => {
                m.insert(lead.raw(), slot);
            }
        }
        self.counts[k] += 1;
        self.refresh_lengths();
    }

    pub fn remove(&mut self, lead: Word) {
        let k = lead.len();
        if let Some(Some(t)) = self.tables.get_mut(k) {
            match t {
                Table::Dense(v) => v[lead.raw() as usize] = NONE,
                Table::Sparse(m) => {
                    m.remove(&lead.raw());
                }
            }
            self.counts[k] -= 1;
            if self.counts[k] == 0 {
                self.tables[k] = None;
            }
        }
        self.refresh_lengths();
    }

    fn refresh_lengths(&mut self) {
        self.lengths = (0..self.counts.len()).filter(|&k| self.counts[k] > 0).collect();
    }

    pub fn get(&self, lead: Word) -> Option<u32> {
        self.tables.get(lead.len())?.as_ref()?.get(lead.raw())
    }

    /// Leftmost occurrence of any lead in `w`, shortest lead first at a
    /// given position. Returns `(slot, start)`.
    pub fn find(&self, w: Word) -> Option<(u32, usize)> {
        let n = w.len();
        let bits = w.raw();
        for start in 0..n {
            for &k in &self.lengths {
                if start + k > n {
                    break;
                }
                let pat = (bits >> (n - start - k)) & crate::freealg::word_mask(k);
                if let Some(s) = self.tables[k].as_ref().unwrap().get(pat) {
                    return Some((s, start));
                }
            }
        }
        None
    }

    /// Whether some lead is a suffix of `w`.
    pub fn has_suffix_lead(&self, w: Word) -> bool {
        let n = w.len();
        for &k in &self.lengths {
            if k > n {
                break;
            }
            let pat = w.raw() & crate::freealg::word_mask(k);
            if self.tables[k].as_ref().unwrap().get(pat).is_some() {
                return true;
            }
        }
        false
    }
}
