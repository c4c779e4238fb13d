//! Name-keyed factories for interchangeable strategies.
//!
//! Every domain exposes a registry of its heuristics. A front end picks one
//! by name and hands the factory a context (board size, loaded databases,
//! graph, ...). Factories return boxed trait objects, so the engines never
//! need to know which concrete heuristic they are driving.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

type Factory<C, T> = Box<dyn Fn(&C) -> Result<Box<T>> + Send + Sync>;

struct Entry<C, T: ?Sized> {
    description: &'static str,
    factory: Factory<C, T>,
}

pub struct Registry<C, T: ?Sized> {
    kind: &'static str,
    entries: BTreeMap<&'static str, Entry<C, T>>,
}

impl<C, T: ?Sized> Registry<C, T> {
    /// `kind` names what is registered ("tile heuristic", ...) for error messages.
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: BTreeMap::new(),
        }
    }

    /// Registers a factory. A later registration under the same name replaces
    /// the earlier one.
    pub fn register<F>(&mut self, name: &'static str, description: &'static str, factory: F)
    where
        F: Fn(&C) -> Result<Box<T>> + Send + Sync + 'static,
    {
        self.entries.insert(
            name,
            Entry {
                description,
                factory: Box::new(factory),
            },
        );
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn describe(&self) -> impl Iterator<Item = (&'static str, &'static str)> + '_ {
        self.entries.iter().map(|(k, e)| (*k, e.description))
    }

    pub fn build(&self, name: &str, ctx: &C) -> Result<Box<T>> {
        match self.entries.get(name) {
            Some(entry) => (entry.factory)(ctx),
            None => Err(Error::UnknownName {
                kind: self.kind,
                name: name.to_string(),
                available: self.names().collect::<Vec<_>>().join(", "),
            }),
        }
    }
}

impl<C, T: ?Sized> fmt::Debug for Registry<C, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Registry")
            .field("kind", &self.kind)
            .field("names", &self.names().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    trait Speak {
        fn say(&self) -> String;
    }

    struct Loud(u32);

    impl Speak for Loud {
        fn say(&self) -> String {
            format!("LOUD{}", self.0)
        }
    }

    #[test]
    fn builds_by_name_and_reports_unknown() {
        let mut reg: Registry<u32, dyn Speak> = Registry::new("speaker");
        reg.register("loud", "shouts", |n| Ok(Box::new(Loud(*n))));
        assert!(reg.contains("loud"));
        assert_eq!(reg.build("loud", &7).unwrap().say(), "LOUD7");
        match reg.build("quiet", &0) {
            Err(Error::UnknownName { kind, available, .. }) => {
                assert_eq!(kind, "speaker");
                assert_eq!(available, "loud");
            }
            other => panic!("unexpected {:?}", other.map(|s| s.say())),
        }
    }
}
