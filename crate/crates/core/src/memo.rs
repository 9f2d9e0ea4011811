use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

/// Read-through cache for pure functions. Values are computed outside the
/// lock; concurrent misses may compute the same value twice, which is harmless
/// because the function is pure.
pub(crate) struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, V>>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            map: OnceLock::new(),
        }
    }

    pub(crate) fn get_or_compute(&self, key: K, compute: impl FnOnce() -> V) -> V {
        let map = self.map.get_or_init(Default::default);
        if let Some(v) = map.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return v.clone();
        }
        let v = compute();
        map.write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(key)
            .or_insert(v)
            .clone()
    }
}
