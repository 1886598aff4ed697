use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{TermOrder, DEFAULT_DEGREE_CAP};

use super::{Entity, Session};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDoc {
    pub field: String,
    pub variables: Vec<String>,
    pub order: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionsDoc {
    pub degree_cap: u32,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EntityDoc {
    Module {
        name: String,
        rank: usize,
        /// One row per generator, one column per relation.
        matrix: Vec<Vec<String>>,
        grading: Option<Vec<i32>>,
    },
    Ideal { name: String, generators: Vec<String> },
    Seq { name: String, elements: Vec<String> },
    Prime { name: String, generators: Vec<String> },
}

/// Serializable form of a session's declarations and commands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionDoc {
    pub ring: Option<RingDoc>,
    pub options: OptionsDoc,
    pub entities: Vec<EntityDoc>,
    pub commands: Vec<String>,
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "QQ".into(),
        Field::Prime(p) => format!("GF({p})"),
    }
}

fn order_name(o: TermOrder) -> String {
    match o {
        TermOrder::Lex => "lex".into(),
        TermOrder::Grevlex => "grevlex".into(),
        TermOrder::Elimination(k) => format!("elim({k})"),
    }
}

fn list<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn bracket(items: &[String]) -> String {
    format!("[{}]", items.join(", "))
}

impl SessionDoc {
    pub fn from_session(s: &Session) -> SessionDoc {
        let ring = s.ring().map(|r| RingDoc {
            field: field_name(r.field()),
            variables: r.variables().to_vec(),
            order: order_name(r.order()),
        });
        let entities = s
            .entities()
            .iter()
            .map(|(name, e)| {
                let name = name.clone();
                match e {
                    Entity::Module(m) => EntityDoc::Module {
                        name,
                        rank: m.rank(),
                        matrix: m.matrix().iter().map(|row| list(row)).collect(),
                        grading: m.grading().map(<[i32]>::to_vec),
                    },
                    Entity::Ideal(i) => EntityDoc::Ideal {
                        name,
                        generators: list(i.generators()),
                    },
                    Entity::Sequence(f) => EntityDoc::Seq {
                        name,
                        elements: list(f),
                    },
                    Entity::Prime(p) => EntityDoc::Prime {
                        name,
                        generators: list(p.ideal().generators()),
                    },
                }
            })
            .collect();
        SessionDoc {
            ring,
            options: OptionsDoc {
                degree_cap: s.ring().map_or(DEFAULT_DEGREE_CAP, |r| r.degree_cap()),
                strict: s.strict(),
            },
            entities,
            commands: list(s.commands()),
        }
    }

    /// Session-language text that parses back to the same session.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.options.degree_cap != DEFAULT_DEGREE_CAP {
            let _ = writeln!(out, "option degree_cap {};", self.options.degree_cap);
        }
        if self.options.strict {
            out.push_str("option strict;\n");
        }
        if let Some(r) = &self.ring {
            let _ = writeln!(out, "ring {}[{}] order {};", r.field, r.variables.join(","), r.order);
        }
        for e in &self.entities {
            let _ = match e {
                EntityDoc::Module { name, rank, matrix, grading } => {
                    let body = if *rank == 0 {
                        "free 0".to_string()
                    } else {
                        let rows: Vec<String> = matrix.iter().map(|r| bracket(r)).collect();
                        format!("coker {}", bracket(&rows))
                    };
                    let graded = match grading {
                        Some(g) => format!(" graded {}", bracket(&list(g))),
                        None => String::new(),
                    };
                    writeln!(out, "module {name} = {body}{graded};")
                }
                EntityDoc::Ideal { name, generators } => writeln!(out, "ideal {name} = {};", bracket(generators)),
                EntityDoc::Seq { name, elements } => writeln!(out, "seq {name} = {};", bracket(elements)),
                EntityDoc::Prime { name, generators } => writeln!(out, "prime {name} = {};", bracket(generators)),
            };
        }
        for c in &self.commands {
            let _ = writeln!(out, "{c};");
        }
        out
    }

    pub fn to_session(&self) -> Result<Session> {
        Session::parse(&self.to_text())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<SessionDoc> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}
