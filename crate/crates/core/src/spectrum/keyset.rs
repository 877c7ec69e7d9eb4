//! Byte-key set that remembers the smallest term index seen per key.

use std::hash::Hasher;

use hashbrown::hash_table::{Entry, HashTable};
use rustc_hash::FxHasher;

fn hash_bytes(key: &[u8]) -> u64 {
    let mut h = FxHasher::default();
    h.write(key);
    h.write_usize(key.len());
    h.finish()
}

/// Keys live back to back in one arena; the table stores slot numbers.
#[derive(Default)]
pub(crate) struct KeySet {
    bytes: Vec<u8>,
    ends: Vec<usize>,
    hashes: Vec<u64>,
    reps: Vec<u64>,
    table: HashTable<u32>,
}

fn slot_key<'a>(bytes: &'a [u8], ends: &[usize], slot: usize) -> &'a [u8] {
    let start = if slot == 0 { 0 } else { ends[slot - 1] };
    &bytes[start..ends[slot]]
}

impl KeySet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn key(&self, slot: usize) -> &[u8] {
        slot_key(&self.bytes, &self.ends, slot)
    }

    pub fn rep(&self, slot: usize) -> u64 {
        self.reps[slot]
    }

    /// Inserts `key`, keeping the smaller representative; returns the slot.
    pub fn insert(&mut self, key: &[u8], rep: u64) -> usize {
        self.insert_hashed(key, hash_bytes(key), rep)
    }

    fn insert_hashed(&mut self, key: &[u8], h: u64, rep: u64) -> usize {
        let KeySet { bytes, ends, hashes, reps, table } = self;
        let entry = table.entry(h, |&s| slot_key(bytes, ends, s as usize) == key, |&s| hashes[s as usize]);
        match entry {
            Entry::Occupied(o) => {
                let s = *o.get() as usize;
                if rep < reps[s] {
                    reps[s] = rep;
                }
                s
            }
            Entry::Vacant(v) => {
                let s = ends.len();
                assert!(s < u32::MAX as usize, "too many distinct keys");
                bytes.extend_from_slice(key);
                ends.push(bytes.len());
                hashes.push(h);
                reps.push(rep);
                v.insert(s as u32);
                s
            }
        }
    }

    pub fn find(&self, key: &[u8]) -> Option<usize> {
        let h = hash_bytes(key);
        let (bytes, ends) = (&self.bytes, &self.ends);
        self.table.find(h, |&s| slot_key(bytes, ends, s as usize) == key).map(|&s| s as usize)
    }

    /// Min-rep union; the result does not depend on merge order.
    pub fn merge(&mut self, other: KeySet) {
        if other.len() > self.len() {
            let mine = std::mem::replace(self, other);
            return self.merge(mine);
        }
        for slot in 0..other.len() {
            self.insert_hashed(other.key(slot), other.hashes[slot], other.reps[slot]);
        }
    }

    #[cfg(test)]
    /// All representatives, in ascending order.
    pub fn sorted_reps(&self) -> Vec<u64> {
        let mut r = self.reps.clone();
        r.sort_unstable();
        r
    }
}
