use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Elimination role of a generator.
///
/// The role only steers which monomials the per-degree elimination prefers
/// to pivot on; it never changes the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Role {
    #[default]
    Plain,
    /// Classes of a complementary bundle (and other redundant generators);
    /// monomials containing them are eliminated first.
    Complementary,
    /// Euler classes; eliminated after complementary generators.
    Euler,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Plain => "plain",
            Role::Complementary => "complementary",
            Role::Euler => "euler",
        }
    }

    pub fn parse(s: &str) -> Option<Role> {
        match s {
            "plain" => Some(Role::Plain),
            "complementary" => Some(Role::Complementary),
            "euler" => Some(Role::Euler),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    /// Cohomological degree, always positive.
    pub degree: u32,
    pub role: Role,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
            role: Role::Plain,
        }
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.degree)
    }
}

#[derive(Debug)]
struct UniverseInner {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
}

/// An ordered, immutable set of generators shared by every element built
/// over it. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct Universe(Arc<UniverseInner>);

impl Universe {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        let mut index = HashMap::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(Error::ZeroDegreeGenerator(g.name.clone()));
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Universe(Arc::new(UniverseInner { generators, index })))
    }

    pub fn empty() -> Self {
        Universe::new(Vec::new()).expect("empty universe is valid")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0.generators
    }

    pub fn len(&self) -> usize {
        self.0.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.generators.is_empty()
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.0.generators[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.generators.iter().map(|g| g.degree)
    }

    /// A new universe with `extra` appended after the current generators.
    pub fn extend(&self, extra: impl IntoIterator<Item = Generator>) -> Result<Self> {
        let mut gens = self.0.generators.clone();
        gens.extend(extra);
        Universe::new(gens)
    }

    pub fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.generators == other.0.generators
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}
