//! A small declarative language for describing a ring, modules, ideals,
//! sequences and primes, and for running checks on them.
//!
//! ```text
//! ring Q[x,y,z] order grevlex;
//! module M = coker [[y*(x-1), y*z]];
//! seq f = [z, x];
//! check f on M;
//! ```

mod cli;
mod doc;
mod execute;
mod parser;
mod report;

use std::fmt;

use crate::criteria::PrimeCandidate;
use crate::field::Field;
use crate::fpmodule::FPModule;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, Ring};

pub use cli::{run_cli, CliArgs, CliOutput, OutputFormat};
pub use doc::SessionDoc;
pub use execute::execute;
pub use report::{render_json, render_text, Report, Status};

/// Settings from outside the session text; each takes precedence over the
/// corresponding `option` statement.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    pub field: Option<Field>,
    pub degree_cap: Option<u32>,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Entity {
    Module(FPModule),
    Ideal(Ideal),
    Sequence(Vec<Polynomial>),
    Prime(PrimeCandidate),
}

impl Entity {
    pub fn kind(&self) -> &'static str {
        match self {
            Entity::Module(_) => "module",
            Entity::Ideal(_) => "ideal",
            Entity::Sequence(_) => "seq",
            Entity::Prime(_) => "prime",
        }
    }
}

/// A check to run. Names refer to session entities and are validated when
/// the session is parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Check { seq: String, module: String },
    StrongCheck { seq: String, module: String },
    Depth { module: String },
    LocalDepth { module: String, prime: String },
    Koszul { seq: String, module: String },
    Ass { module: String },
    Ext { index: usize, ideal: String, module: String },
    Dim { module: String },
    Theorem { seq: String, module: String, primes: Vec<String> },
    Corollary2 { f: String, g: String, module: String },
    Sop { seq: String, module: String },
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Check { seq, module } => write!(f, "check {seq} on {module}"),
            Command::StrongCheck { seq, module } => write!(f, "strong-check {seq} on {module}"),
            Command::Depth { module } => write!(f, "depth {module}"),
            Command::LocalDepth { module, prime } => write!(f, "local-depth {module} at {prime}"),
            Command::Koszul { seq, module } => write!(f, "koszul {seq} on {module}"),
            Command::Ass { module } => write!(f, "ass {module}"),
            Command::Ext { index, ideal, module } => write!(f, "ext {index} {ideal} on {module}"),
            Command::Dim { module } => write!(f, "dim {module}"),
            Command::Theorem { seq, module, primes } => {
                write!(f, "theorem {seq} on {module}")?;
                if !primes.is_empty() {
                    write!(f, " with {}", primes.join(", "))?;
                }
                Ok(())
            }
            Command::Corollary2 { f: a, g, module } => write!(f, "corollary2 {a} {g} on {module}"),
            Command::Sop { seq, module } => write!(f, "sop {seq} on {module}"),
        }
    }
}

/// A parsed and validated session.
#[derive(Debug, Clone, Default)]
pub struct Session {
    ring: Option<Ring>,
    strict: bool,
    entities: Vec<(String, Entity)>,
    commands: Vec<Command>,
}

impl Session {
    pub fn parse(text: &str) -> crate::Result<Session> {
        parser::parse_session(text, &Overrides::default())
    }

    pub fn parse_with(text: &str, overrides: &Overrides) -> crate::Result<Session> {
        parser::parse_session(text, overrides)
    }

    /// Parses a single command against this session's entities.
    pub fn parse_command(&self, text: &str) -> crate::Result<Command> {
        parser::parse_command_text(self, text)
    }

    pub fn ring(&self) -> Option<&Ring> {
        self.ring.as_ref()
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn entities(&self) -> &[(String, Entity)] {
        &self.entities
    }

    pub fn commands(&self) -> &[Command] {
        &self.commands
    }

    pub fn get(&self, name: &str) -> Option<&Entity> {
        self.entities.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn module(&self, name: &str) -> crate::Result<&FPModule> {
        match self.get(name) {
            Some(Entity::Module(m)) => Ok(m),
            _ => Err(crate::Error::UnknownName(name.to_string())),
        }
    }

    pub fn sequence(&self, name: &str) -> crate::Result<&[Polynomial]> {
        match self.get(name) {
            Some(Entity::Sequence(s)) => Ok(s),
            _ => Err(crate::Error::UnknownName(name.to_string())),
        }
    }

    pub fn prime(&self, name: &str) -> crate::Result<&PrimeCandidate> {
        match self.get(name) {
            Some(Entity::Prime(p)) => Ok(p),
            _ => Err(crate::Error::UnknownName(name.to_string())),
        }
    }

    /// An ideal or a prime, as an ideal.
    pub fn ideal(&self, name: &str) -> crate::Result<&Ideal> {
        match self.get(name) {
            Some(Entity::Ideal(i)) => Ok(i),
            Some(Entity::Prime(p)) => Ok(p.ideal()),
            _ => Err(crate::Error::UnknownName(name.to_string())),
        }
    }
}
