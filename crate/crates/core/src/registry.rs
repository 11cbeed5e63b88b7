//! Name-keyed registry of trait-object strategies, selected at runtime.

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

type Factory<T> = Box<dyn Fn() -> Arc<T> + Send + Sync>;

struct Entry<T: ?Sized> {
    description: String,
    factory: Factory<T>,
}

/// Registry mapping names to factories of `Arc<T>`.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: BTreeMap<String, Entry<T>>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry { kind, entries: BTreeMap::new() }
    }

    /// Register `factory` under `name`, replacing any previous entry.
    pub fn register(&mut self, name: &str, description: &str, factory: impl Fn() -> Arc<T> + Send + Sync + 'static) {
        self.entries.insert(name.to_string(), Entry { description: description.to_string(), factory: Box::new(factory) });
    }

    pub fn get(&self, name: &str) -> Result<Arc<T>> {
        self.entries
            .get(name)
            .map(|e| (e.factory)())
            .ok_or_else(|| Error::Unknown { kind: self.kind, name: name.to_string() })
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.keys().cloned().collect()
    }

    /// `(name, description)` pairs in name order.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.entries.iter().map(|(k, e)| (k.clone(), e.description.clone())).collect()
    }
}
