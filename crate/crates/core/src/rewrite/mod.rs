//! Degree-bounded two-sided Gröbner bases in the free algebra.
//!
//! The monomial order is deglex with `g0 > g1` (see [`Word`]'s `Ord`). A
//! system completed to degree `D` decides ideal membership for every element
//! whose words have length at most `D`, because the order is degree
//! compatible and all overlaps up to that length resolve.

mod cache;
mod index;
mod shared;

pub use cache::{load_system, save_system, CACHE_FORMAT, CACHE_VERSION};
pub use shared::{cache_file_name, complete_fresh, install_shared, load_or_complete, shared_system, CACHE_DIR_VAR};

use crate::coeff::Coefficient;
use crate::freealg::{CMode, NcPoly, Word, MAX_WORD_LEN};
use index::LeadIndex;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RewriteError {
    #[error("degree {degree} exceeds the completed degree {bound}; increase --bound")]
    BoundExceeded { degree: usize, bound: usize },
    #[error("capacity exceeded at degree {degree}: {what}")]
    Capacity { degree: usize, what: String },
    #[error("cache format error: {0}")]
    Format(String),
    #[error("unsupported cache version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },
    #[error("c-mode mismatch: cache is {found}, expected {expected}")]
    ModeMismatch { found: CMode, expected: CMode },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// The deglex order with `g0 > g1` used throughout. Provided for
/// documentation and explicit comparisons; [`Word`]'s `Ord` is the same.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialOrder;

impl MonomialOrder {
    pub fn compare(&self, a: Word, b: Word) -> std::cmp::Ordering {
        a.cmp(&b)
    }

    pub fn describe(&self) -> &'static str {
        "deglex(g0>g1)"
    }
}

/// `lead -> tail`, standing for the ideal element `lead - tail`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule<K> {
    pub lead: Word,
    pub tail: NcPoly<K>,
}

impl<K: Coefficient> RewriteRule<K> {
    pub fn polynomial(&self) -> NcPoly<K> {
        NcPoly::word(self.lead).sub(&self.tail)
    }
}

/// A combination `Σ k · u · generator · v` of the defining generators.
#[derive(Clone, Debug)]
pub struct Certificate<K> {
    terms: HashMap<(Word, usize, Word), K>,
}

impl<K> Default for Certificate<K> {
    fn default() -> Self {
        Certificate {
            terms: HashMap::new(),
        }
    }
}

impl<K: Coefficient> Certificate<K> {
    fn generator(i: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert((Word::EMPTY, i, Word::EMPTY), K::one());
        Certificate { terms }
    }

    fn add_scaled(&mut self, other: &Certificate<K>, k: &K, u: Word, v: Word) {
        for ((a, i, b), c) in &other.terms {
            let key = (u.concat(*a), *i, b.concat(v));
            let add = c.mul_ref(k);
            match self.terms.get_mut(&key) {
                Some(x) => {
                    x.add_assign_ref(&add);
                    if x.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    if !add.is_zero() {
                        self.terms.insert(key, add);
                    }
                }
            }
        }
    }

    fn scaled(&self, k: &K) -> Self {
        Certificate {
            terms: self.terms.iter().map(|(key, c)| (*key, c.mul_ref(k))).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Expand against the generators.
    pub fn expand(&self, generators: &[NcPoly<K>]) -> NcPoly<K> {
        let mut acc = NcPoly::zero();
        for ((u, i, v), k) in &self.terms {
            acc = acc.add(&generators[*i].wrap(*u, *v).scale(k));
        }
        acc
    }
}

/// One reduction step: subtract `coeff · left · (lead − tail) · right`.
#[derive(Clone, Debug)]
pub struct ReductionStep<K> {
    pub coeff: K,
    pub left: Word,
    pub lead: Word,
    pub right: Word,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompletionStats {
    pub pairs_processed: usize,
    pub rules_added: usize,
    pub rules: usize,
}

#[derive(Clone, Debug)]
pub struct CompletionLimits {
    pub max_rules: usize,
    pub max_pairs: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits {
            max_rules: 500_000,
            max_pairs: 50_000_000,
        }
    }
}

struct Slot<K> {
    rule: RewriteRule<K>,
    cert: Option<Certificate<K>>,
}

pub struct RewriteSystem<K> {
    mode: CMode,
    completed_degree: usize,
    slots: Vec<Option<Slot<K>>>,
    free_slots: Vec<u32>,
    index: LeadIndex,
    generators: Vec<NcPoly<K>>,
    track: bool,
}

impl<K: Coefficient> RewriteSystem<K> {
    /// A system holding the generators as rules, not yet completed.
    pub fn new(generators: Vec<NcPoly<K>>, mode: CMode) -> Self {
        Self::build(generators, mode, false)
    }

    /// Like [`RewriteSystem::new`], but every rule carries a certificate
    /// expressing it through the generators.
    pub fn with_certificates(generators: Vec<NcPoly<K>>, mode: CMode) -> Self {
        Self::build(generators, mode, true)
    }

    fn build(generators: Vec<NcPoly<K>>, mode: CMode, track: bool) -> Self {
        let mut sys = RewriteSystem {
            mode,
            completed_degree: 0,
            slots: Vec::new(),
            free_slots: Vec::new(),
            index: LeadIndex::default(),
            generators: generators.clone(),
            track,
        };
        let mut pending = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            let cert = track.then(|| Certificate::generator(i));
            pending.push((g.clone(), cert));
        }
        let mut queue = BTreeSet::new();
        sys.absorb(pending, &mut queue, 0, &CompletionLimits::default(), &mut 0)
            .expect("generators fit");
        sys
    }

    /// Assemble from explicit rules, trusting that they were produced by a
    /// completion to `completed_degree`.
    pub(crate) fn from_rules(
        rules: Vec<RewriteRule<K>>,
        generators: Vec<NcPoly<K>>,
        mode: CMode,
        completed_degree: usize,
    ) -> Self {
        let mut sys = RewriteSystem {
            mode,
            completed_degree,
            slots: Vec::new(),
            free_slots: Vec::new(),
            index: LeadIndex::default(),
            generators,
            track: false,
        };
        for r in rules {
            sys.put(Slot { rule: r, cert: None });
        }
        sys
    }

    pub fn mode(&self) -> CMode {
        self.mode
    }

    pub fn completed_degree(&self) -> usize {
        self.completed_degree
    }

    pub fn generators(&self) -> &[NcPoly<K>] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder
    }

    /// Rules sorted by lead.
    pub fn rules(&self) -> Vec<&RewriteRule<K>> {
        let mut v: Vec<&RewriteRule<K>> = self.slots.iter().flatten().map(|s| &s.rule).collect();
        v.sort_by_key(|r| r.lead);
        v
    }

    pub fn rule_count(&self) -> usize {
        self.slots.iter().flatten().count()
    }

    pub fn certificate(&self, lead: Word) -> Option<&Certificate<K>> {
        let s = self.index.get(lead)?;
        self.slots[s as usize].as_ref()?.cert.as_ref()
    }

    fn put(&mut self, slot: Slot<K>) -> u32 {
        let lead = slot.rule.lead;
        let id = match self.free_slots.pop() {
            Some(id) => {
                self.slots[id as usize] = Some(slot);
                id
            }
            None => {
                self.slots.push(Some(slot));
                (self.slots.len() - 1) as u32
            }
        };
        self.index.insert(lead, id);
        id
    }

    fn take(&mut self, id: u32) -> Slot<K> {
        let s = self.slots[id as usize].take().expect("live slot");
        self.index.remove(s.rule.lead);
        self.free_slots.push(id);
        s
    }

    fn slot(&self, id: u32) -> &Slot<K> {
        self.slots[id as usize].as_ref().expect("live slot")
    }

    fn check_degree(&self, x: &NcPoly<K>) -> Result<(), RewriteError> {
        let d = x.degree().unwrap_or(0);
        if d > self.completed_degree {
            return Err(RewriteError::BoundExceeded {
                degree: d,
                bound: self.completed_degree,
            });
        }
        Ok(())
    }

    /// Normal form of `x`.
    pub fn reduce(&self, x: &NcPoly<K>) -> Result<NcPoly<K>, RewriteError> {
        self.check_degree(x)?;
        Ok(self.reduce_inner(x, None))
    }

    /// Normal form together with the steps taken.
    pub fn reduce_traced(
        &self,
        x: &NcPoly<K>,
    ) -> Result<(NcPoly<K>, Vec<ReductionStep<K>>), RewriteError> {
        self.check_degree(x)?;
        let mut steps = Vec::new();
        let nf = self.reduce_inner(x, Some(&mut steps));
        Ok((nf, steps))
    }

    /// Normal form and the number of rule applications.
    pub fn reduce_counted(&self, x: &NcPoly<K>) -> Result<(NcPoly<K>, usize), RewriteError> {
        self.check_degree(x)?;
        let mut n = 0;
        let nf = self.reduce_counting(x, &mut n);
        Ok((nf, n))
    }

    pub fn is_zero_mod_ideal(&self, x: &NcPoly<K>) -> Result<bool, RewriteError> {
        Ok(self.reduce(x)?.is_zero())
    }

    fn reduce_counting(&self, x: &NcPoly<K>, count: &mut usize) -> NcPoly<K> {
        let mut work: BTreeMap<Word, K> = x.terms().iter().cloned().collect();
        let mut out: Vec<(Word, K)> = Vec::new();
        while let Some((w, k)) = work.pop_last() {
            match self.index.find(w) {
                None => out.push((w, k)),
                Some((id, start)) => {
                    *count += 1;
                    let rule = &self.slot(id).rule;
                    let u = w.prefix(start);
                    let v = w.suffix(w.len() - start - rule.lead.len());
                    for (t, tc) in rule.tail.terms() {
                        accumulate(&mut work, u.concat(*t).concat(v), k.mul_ref(tc));
                    }
                }
            }
        }
        out.reverse();
        NcPoly::from_sorted(out)
    }

    fn reduce_inner(&self, x: &NcPoly<K>, trace: Option<&mut Vec<ReductionStep<K>>>) -> NcPoly<K> {
        let Some(trace) = trace else {
            let mut n = 0;
            return self.reduce_counting(x, &mut n);
        };
        let mut work: BTreeMap<Word, K> = x.terms().iter().cloned().collect();
        let mut out: Vec<(Word, K)> = Vec::new();
        while let Some((w, k)) = work.pop_last() {
            match self.index.find(w) {
                None => out.push((w, k)),
                Some((id, start)) => {
                    let rule = &self.slot(id).rule;
                    let u = w.prefix(start);
                    let v = w.suffix(w.len() - start - rule.lead.len());
                    for (t, tc) in rule.tail.terms() {
                        accumulate(&mut work, u.concat(*t).concat(v), k.mul_ref(tc));
                    }
                    trace.push(ReductionStep {
                        coeff: k,
                        left: u,
                        lead: rule.lead,
                        right: v,
                    });
                }
            }
        }
        out.reverse();
        NcPoly::from_sorted(out)
    }

    /// Complete all overlaps of length at most `bound`.
    pub fn complete(&mut self, bound: usize) -> Result<CompletionStats, RewriteError> {
        self.complete_with(bound, &CompletionLimits::default(), |_, _| {})
    }

    /// As [`RewriteSystem::complete`], reporting `(degree, rules)` whenever
    /// the overlap degree advances.
    pub fn complete_with<F: FnMut(usize, usize)>(
        &mut self,
        bound: usize,
        limits: &CompletionLimits,
        mut progress: F,
    ) -> Result<CompletionStats, RewriteError> {
        if bound >= MAX_WORD_LEN {
            return Err(RewriteError::Capacity {
                degree: self.completed_degree,
                what: format!("bound {bound} exceeds the maximal word length"),
            });
        }
        let mut stats = CompletionStats::default();
        if bound <= self.completed_degree {
            stats.rules = self.rule_count();
            return Ok(stats);
        }
        let old = self.completed_degree;
        let mut queue: BTreeSet<(Word, Word, Word)> = BTreeSet::new();
        let leads: Vec<Word> = self.rules().iter().map(|r| r.lead).collect();
        for &a in &leads {
            for &b in &leads {
                for w in overlaps(a, b) {
                    if w.len() > old && w.len() <= bound {
                        queue.insert((w, a, b));
                    }
                }
            }
        }
        let mut current = old;
        while let Some((w, a, b)) = queue.pop_first() {
            if w.len() > current {
                current = w.len();
                progress(current, self.rule_count());
            }
            let (Some(ia), Some(ib)) = (self.index.get(a), self.index.get(b)) else {
                continue;
            };
            stats.pairs_processed += 1;
            if stats.pairs_processed > limits.max_pairs {
                return Err(RewriteError::Capacity {
                    degree: w.len(),
                    what: "too many overlap pairs".into(),
                });
            }
            let (sa, sb) = (self.slot(ia), self.slot(ib));
            let v = w.suffix(w.len() - a.len());
            let u = w.prefix(w.len() - b.len());
            // rule_a · v − u · rule_b
            let s = sb.rule.tail.wrap(u, Word::EMPTY).sub(&sa.rule.tail.wrap(Word::EMPTY, v));
            let cert = if self.track {
                let mut c = Certificate::default();
                c.add_scaled(sa.cert.as_ref().unwrap(), &K::one(), Word::EMPTY, v);
                c.add_scaled(sb.cert.as_ref().unwrap(), &K::one().neg_ref(), u, Word::EMPTY);
                Some(c)
            } else {
                None
            };
            let (nf, cert) = self.reduce_certified(&s, cert);
            if nf.is_zero() {
                continue;
            }
            let added = self.absorb(vec![(nf, cert)], &mut queue, bound, limits, &mut stats.rules_added)?;
            let _ = added;
        }
        self.completed_degree = bound;
        self.interreduce_tails();
        stats.rules = self.rule_count();
        Ok(stats)
    }

    fn reduce_certified(
        &self,
        x: &NcPoly<K>,
        cert: Option<Certificate<K>>,
    ) -> (NcPoly<K>, Option<Certificate<K>>) {
        match cert {
            None => (self.reduce_inner(x, None), None),
            Some(mut c) => {
                let mut steps = Vec::new();
                let nf = self.reduce_inner(x, Some(&mut steps));
                for st in steps {
                    let id = self.index.get(st.lead).unwrap();
                    let rc = self.slot(id).cert.as_ref().unwrap();
                    c.add_scaled(rc, &st.coeff.neg_ref(), st.left, st.right);
                }
                (nf, Some(c))
            }
        }
    }

    /// Insert reduced nonzero polynomials as rules, displacing rules whose
    /// lead they divide, and enqueue the new overlaps.
    fn absorb(
        &mut self,
        mut pending: Vec<(NcPoly<K>, Option<Certificate<K>>)>,
        queue: &mut BTreeSet<(Word, Word, Word)>,
        bound: usize,
        limits: &CompletionLimits,
        added: &mut usize,
    ) -> Result<usize, RewriteError> {
        let mut n = 0;
        while let Some((p, cert)) = pending.pop() {
            let (p, cert) = self.reduce_certified(&p, cert);
            if p.is_zero() {
                continue;
            }
            let (lead, lc) = p.leading().cloned().unwrap();
            let inv = lc.inverse().expect("nonzero leading coefficient");
            let monic = p.scale(&inv);
            let tail = NcPoly::word(lead).sub(&monic);
            let cert = cert.map(|c| c.scaled(&inv));
            // displaced rules: their leads contain the new lead
            let displaced: Vec<u32> = self
                .slots
                .iter()
                .enumerate()
                .filter_map(|(i, s)| {
                    let s = s.as_ref()?;
                    (s.rule.lead.len() > lead.len() && contains(s.rule.lead, lead)).then_some(i as u32)
                })
                .collect();
            for id in displaced {
                let s = self.take(id);
                pending.push((s.rule.polynomial(), s.cert));
            }
            self.put(Slot {
                rule: RewriteRule { lead, tail },
                cert,
            });
            n += 1;
            *added += 1;
            if self.rule_count() > limits.max_rules {
                return Err(RewriteError::Capacity {
                    degree: lead.len(),
                    what: format!("more than {} rules", limits.max_rules),
                });
            }
            if bound > 0 {
                let leads: Vec<Word> = self.slots.iter().flatten().map(|s| s.rule.lead).collect();
                for other in leads {
                    for w in overlaps(lead, other) {
                        if w.len() <= bound {
                            queue.insert((w, lead, other));
                        }
                    }
                    if other != lead {
                        for w in overlaps(other, lead) {
                            if w.len() <= bound {
                                queue.insert((w, other, lead));
                            }
                        }
                    }
                }
            }
        }
        Ok(n)
    }

    /// Bring every tail to normal form.
    fn interreduce_tails(&mut self) {
        let ids: Vec<u32> = (0..self.slots.len() as u32)
            .filter(|&i| self.slots[i as usize].is_some())
            .collect();
        for id in ids {
            let s = self.slot(id);
            if s.rule.tail.terms().iter().all(|(w, _)| self.index.find(*w).is_none()) {
                continue;
            }
            let tail = s.rule.tail.clone();
            // rule' = lead − NF(tail) = rule + (tail − NF(tail))
            let (nf, tcert) = if self.track {
                let (nf, c) = self.reduce_certified(&tail, Some(Certificate::default()));
                (nf, c)
            } else {
                (self.reduce_inner(&tail, None), None)
            };
            let slot = self.slots[id as usize].as_mut().unwrap();
            slot.rule.tail = nf;
            if let (Some(c), Some(tc)) = (slot.cert.as_mut(), tcert) {
                // tc certifies NF(tail) − tail; subtract it
                c.add_scaled(&tc, &K::one().neg_ref(), Word::EMPTY, Word::EMPTY);
            }
        }
    }

    /// Number of normal words of length exactly `degree`.
    pub fn normal_count(&self, degree: usize) -> Result<usize, RewriteError> {
        if degree > self.completed_degree {
            return Err(RewriteError::BoundExceeded {
                degree,
                bound: self.completed_degree,
            });
        }
        Ok(self.normal_words(degree).len())
    }

    /// All normal words of length exactly `degree`, increasing.
    pub fn normal_words(&self, degree: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut stack = vec![Word::EMPTY];
        while let Some(w) = stack.pop() {
            if w.len() == degree {
                out.push(w);
                continue;
            }
            for l in [crate::freealg::Letter::G1, crate::freealg::Letter::G0] {
                let x = w.concat(Word::letter(l));
                if !self.index.has_suffix_lead(x) {
                    stack.push(x);
                }
            }
        }
        out.sort();
        out
    }
}

impl<K: Coefficient> PartialEq for RewriteSystem<K> {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode
            && self.completed_degree == other.completed_degree
            && self.rules() == other.rules()
    }
}

impl<K: Coefficient> std::fmt::Debug for RewriteSystem<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("mode", &self.mode)
            .field("completed_degree", &self.completed_degree)
            .field("rules", &self.rule_count())
            .finish()
    }
}

fn accumulate<K: Coefficient>(work: &mut BTreeMap<Word, K>, w: Word, k: K) {
    match work.entry(w) {
        Entry::Occupied(mut e) => {
            e.get_mut().add_assign_ref(&k);
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            if !k.is_zero() {
                e.insert(k);
            }
        }
    }
}

/// Whether `small` occurs as a factor of `big`.
fn contains(big: Word, small: Word) -> bool {
    let (n, k) = (big.len(), small.len());
    (0..=n.saturating_sub(k)).any(|i| big.subword(i, k) == small)
}

/// Overlap words `a·x = y·b` with a proper nonempty overlap.
fn overlaps(a: Word, b: Word) -> Vec<Word> {
    let (la, lb) = (a.len(), b.len());
    let mut out = Vec::new();
    for k in 1..la.min(lb) {
        if a.suffix(k) == b.prefix(k) && la + lb - k <= MAX_WORD_LEN {
            out.push(a.concat(b.suffix(lb - k)));
        }
    }
    out
}

#[cfg(test)]
mod tests;
