//! Thread-safe memo for `h` monomials.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use kschur_core::{HProductCache, NilCoxeterElement, Rank};

type Key = (Rank, Vec<usize>);

/// Insert-if-absent map shared across threads.
#[derive(Debug, Default)]
pub struct SharedCache {
    map: RwLock<HashMap<Key, Arc<NilCoxeterElement>>>,
}

impl SharedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl HProductCache for SharedCache {
    fn get(&self, rank: Rank, indices: &[usize]) -> Option<Arc<NilCoxeterElement>> {
        let map = self.map.read().unwrap_or_else(|e| e.into_inner());
        map.get(&(rank, indices.to_vec())).cloned()
    }

    fn insert(&self, rank: Rank, indices: &[usize], value: Arc<NilCoxeterElement>) {
        let mut map = self.map.write().unwrap_or_else(|e| e.into_inner());
        map.entry((rank, indices.to_vec())).or_insert(value);
    }
}
