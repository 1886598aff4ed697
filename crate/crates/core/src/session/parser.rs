use num_traits::ToPrimitive;

use crate::criteria::PrimeCandidate;
use crate::error::Result;
use crate::field::Field;
use crate::fpmodule::FPModule;
use crate::groebner::{FreeElement, Ideal};
use crate::lexer::{tokenize, Cursor, Tok, Token};
use crate::poly::{parse_expr, PolyRing, Polynomial, Ring, TermOrder, DEFAULT_DEGREE_CAP};

use super::{Command, Entity, Overrides, Session};

struct Parser<'a> {
    cur: Cursor<'a>,
    session: Session,
    overrides: &'a Overrides,
    degree_cap: Option<u32>,
}

pub(crate) fn parse_session(text: &str, overrides: &Overrides) -> Result<Session> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        cur: Cursor::new(&toks, text),
        session: Session {
            strict: overrides.strict,
            ..Session::default()
        },
        overrides,
        degree_cap: None,
    };
    while !p.cur.at_end() {
        p.statement()?;
    }
    Ok(p.session)
}

pub(crate) fn parse_command_text(session: &Session, text: &str) -> Result<Command> {
    let toks = tokenize(text)?;
    let overrides = Overrides::default();
    let mut p = Parser {
        cur: Cursor::new(&toks, text),
        session: session.clone(),
        overrides: &overrides,
        degree_cap: None,
    };
    let Some(first) = p.cur.peek() else {
        return Err(p.cur.error_here("expected a command"));
    };
    let cmd = p.command(first)?;
    p.cur.eat_sym(';');
    if !p.cur.at_end() {
        return Err(p.cur.error_here("unexpected trailing input"));
    }
    Ok(cmd)
}

fn parse_field(name: &str, tok: &Token, cur: &mut Cursor<'_>) -> Result<Field> {
    match name {
        "Q" | "QQ" => Ok(Field::Rational),
        "k" => Ok(Field::default()),
        "GF" => {
            cur.expect_sym('(')?;
            let (p, t) = cur.expect_int()?;
            cur.expect_sym(')')?;
            prime_field(&p, t)
        }
        "ZZ" => {
            cur.expect_sym('/')?;
            let (p, t) = cur.expect_int()?;
            prime_field(&p, t)
        }
        _ => Err(tok.error(format!("unknown field `{name}`; use Q, k, GF(p) or ZZ/p"))),
    }
}

fn prime_field(p: &num_bigint::BigInt, tok: &Token) -> Result<Field> {
    let v = p.to_u64().ok_or_else(|| tok.error("field characteristic out of range"))?;
    Field::prime(v).map_err(|e| tok.error(e.to_string()))
}

impl<'a> Parser<'a> {
    fn ring(&self, at: &Token) -> Result<&Ring> {
        self.session
            .ring
            .as_ref()
            .ok_or_else(|| at.error("declare the ring before using it"))
    }

    fn statement(&mut self) -> Result<()> {
        let first = self.cur.expect_ident()?;
        match first.ident().expect("ident") {
            "ring" => self.ring_decl(first)?,
            "option" => self.option(first)?,
            "module" | "ideal" | "seq" | "prime" => self.declaration(first)?,
            _ => {
                self.cur.pos -= 1;
                let cmd = self.command(first)?;
                self.session.commands.push(cmd);
            }
        }
        self.cur.expect_sym(';')
    }

    fn ring_decl(&mut self, at: &Token) -> Result<()> {
        if self.session.ring.is_some() {
            return Err(at.error("the ring is already declared"));
        }
        let ftok = self.cur.expect_ident()?;
        let mut field = parse_field(ftok.ident().expect("ident"), ftok, &mut self.cur)?;
        if let Some(f) = self.overrides.field {
            field = f;
        }
        self.cur.expect_sym('[')?;
        let mut vars = Vec::new();
        if !self.cur.eat_sym(']') {
            loop {
                let v = self.cur.expect_ident()?;
                let name = v.ident().expect("ident").to_string();
                if vars.contains(&name) {
                    return Err(v.error(format!("duplicate variable {name}")));
                }
                vars.push(name);
                if self.cur.eat_sym(']') {
                    break;
                }
                self.cur.expect_sym(',')?;
            }
        }
        let mut order = TermOrder::Grevlex;
        if self.cur.eat_keyword("order") {
            let o = self.cur.expect_ident()?;
            order = match o.ident().expect("ident") {
                "grevlex" => TermOrder::Grevlex,
                "lex" => TermOrder::Lex,
                "elim" | "elimination" => {
                    let paren = self.cur.eat_sym('(');
                    let (k, t) = self.cur.expect_int()?;
                    if paren {
                        self.cur.expect_sym(')')?;
                    }
                    let k = k.to_usize().ok_or_else(|| t.error("block size out of range"))?;
                    TermOrder::Elimination(k)
                }
                other => return Err(o.error(format!("unknown order `{other}`"))),
            };
        }
        let cap = self
            .overrides
            .degree_cap
            .or(self.degree_cap)
            .unwrap_or(DEFAULT_DEGREE_CAP);
        let ring = PolyRing::new(&vars, field, order).map_err(|e| at.error(e.to_string()))?;
        self.session.ring = Some(ring.with_degree_cap(cap));
        Ok(())
    }

    fn option(&mut self, at: &Token) -> Result<()> {
        let name = self.cur.expect_ident()?;
        match name.ident().expect("ident") {
            "strict" => {
                self.session.strict = true;
                Ok(())
            }
            "degree_cap" => {
                if self.session.ring.is_some() {
                    return Err(at.error("`option degree_cap` must precede the ring declaration"));
                }
                let (v, t) = self.cur.expect_int()?;
                let v = v.to_u32().ok_or_else(|| t.error("degree cap out of range"))?;
                self.degree_cap = Some(v);
                Ok(())
            }
            other => Err(name.error(format!("unknown option `{other}`"))),
        }
    }

    fn polynomial_list(&mut self, ring: &Ring) -> Result<Vec<Polynomial>> {
        self.cur.expect_sym('[')?;
        let mut out = Vec::new();
        if self.cur.eat_sym(']') {
            return Ok(out);
        }
        loop {
            out.push(parse_expr(ring, &mut self.cur)?);
            if self.cur.eat_sym(']') {
                return Ok(out);
            }
            self.cur.expect_sym(',')?;
        }
    }

    fn signed_int(&mut self) -> Result<i32> {
        let neg = self.cur.eat_sym('-');
        let (v, t) = self.cur.expect_int()?;
        let v = v.to_i32().ok_or_else(|| t.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn grading(&mut self, rank: usize, at: &Token) -> Result<Option<Vec<i32>>> {
        if !self.cur.eat_keyword("graded") {
            return Ok(None);
        }
        if !self.cur.peek().is_some_and(|t| t.is_sym('[')) {
            return Ok(Some(vec![0; rank]));
        }
        self.cur.expect_sym('[')?;
        let mut shifts = Vec::new();
        if !self.cur.eat_sym(']') {
            loop {
                shifts.push(self.signed_int()?);
                if self.cur.eat_sym(']') {
                    break;
                }
                self.cur.expect_sym(',')?;
            }
        }
        if shifts.len() != rank {
            return Err(at.error(format!("{} degree shifts for {rank} generators", shifts.len())));
        }
        Ok(Some(shifts))
    }

    fn module_expr(&mut self, ring: &Ring, at: &Token) -> Result<FPModule> {
        let kw = self.cur.expect_ident()?;
        match kw.ident().expect("ident") {
            "free" => {
                let (r, t) = self.cur.expect_int()?;
                let rank = r.to_usize().ok_or_else(|| t.error("rank out of range"))?;
                let grading = self.grading(rank, at)?.unwrap_or(vec![0; rank]);
                FPModule::present(ring, rank, Vec::new(), Some(grading)).map_err(|e| at.error(e.to_string()))
            }
            "coker" => {
                self.cur.expect_sym('[')?;
                let mut rows: Vec<Vec<Polynomial>> = Vec::new();
                loop {
                    let row_tok = self.cur.peek().cloned();
                    let row = self.polynomial_list(ring)?;
                    if let Some(first) = rows.first() {
                        if first.len() != row.len() {
                            let t = row_tok.expect("row start");
                            return Err(t.error(format!(
                                "row has {} entries, expected {}",
                                row.len(),
                                first.len()
                            )));
                        }
                    }
                    rows.push(row);
                    if self.cur.eat_sym(']') {
                        break;
                    }
                    self.cur.expect_sym(',')?;
                }
                let rank = rows.len();
                let ncols = rows[0].len();
                let relations = (0..ncols)
                    .map(|j| FreeElement::new(ring, rows.iter().map(|r| r[j].clone()).collect()))
                    .collect::<Result<Vec<_>>>()?;
                let grading = self.grading(rank, at)?;
                FPModule::present(ring, rank, relations, grading).map_err(|e| at.error(e.to_string()))
            }
            other => Err(kw.error(format!("unknown module form `{other}`; use coker or free"))),
        }
    }

    fn declaration(&mut self, at: &Token) -> Result<()> {
        let ring = self.ring(at)?.clone();
        let name_tok = self.cur.expect_ident()?;
        let name = name_tok.ident().expect("ident").to_string();
        if self.session.get(&name).is_some() {
            return Err(name_tok.error(format!("name `{name}` is already declared")));
        }
        self.cur.expect_sym('=')?;
        let entity = match at.ident().expect("ident") {
            "module" => Entity::Module(self.module_expr(&ring, at)?),
            "ideal" => Entity::Ideal(Ideal::new(&ring, self.polynomial_list(&ring)?)?),
            "seq" => Entity::Sequence(self.polynomial_list(&ring)?),
            _ => {
                let gens = self.polynomial_list(&ring)?;
                let ideal = Ideal::new(&ring, gens)?;
                Entity::Prime(PrimeCandidate::new(&ideal).map_err(|e| at.error(e.to_string()))?)
            }
        };
        self.session.entities.push((name, entity));
        Ok(())
    }

    /// A name referring to an entity of one of the given kinds.
    fn name_of(&mut self, kinds: &[&str]) -> Result<String> {
        let t = self.cur.expect_ident()?;
        let name = t.ident().expect("ident").to_string();
        match self.session.get(&name) {
            None => Err(t.error(format!("unknown name `{name}`"))),
            Some(e) if !kinds.contains(&e.kind()) => Err(t.error(format!(
                "`{name}` is a {}, expected {}",
                e.kind(),
                kinds.join(" or ")
            ))),
            Some(_) => Ok(name),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        if self.cur.eat_keyword(kw) {
            Ok(())
        } else {
            Err(self.cur.error_here(format!("expected `{kw}`")))
        }
    }

    fn seq_on_module(&mut self) -> Result<(String, String)> {
        let seq = self.name_of(&["seq"])?;
        self.keyword("on")?;
        Ok((seq, self.name_of(&["module"])?))
    }

    fn verb(&mut self, first: &Token) -> Result<String> {
        self.cur.expect_ident()?;
        let mut verb = first.ident().expect("ident").to_string();
        if let (Some(dash), Some(next)) = (self.cur.peek(), self.cur.peek_at(1)) {
            if dash.is_sym('-') && matches!(next.tok, Tok::Ident(_)) && dash.column == first.column + verb.len() {
                verb = format!("{verb}-{}", next.ident().expect("ident"));
                self.cur.pos += 2;
            }
        }
        Ok(verb)
    }

    fn command(&mut self, first: &Token) -> Result<Command> {
        let verb = self.verb(first)?;
        if self.session.ring.is_none() {
            return Err(first.error("declare the ring before running commands"));
        }
        Ok(match verb.as_str() {
            "check" => {
                let (seq, module) = self.seq_on_module()?;
                Command::Check { seq, module }
            }
            "strong-check" => {
                let (seq, module) = self.seq_on_module()?;
                Command::StrongCheck { seq, module }
            }
            "koszul" => {
                let (seq, module) = self.seq_on_module()?;
                Command::Koszul { seq, module }
            }
            "sop" => {
                let (seq, module) = self.seq_on_module()?;
                Command::Sop { seq, module }
            }
            "depth" => Command::Depth {
                module: self.name_of(&["module"])?,
            },
            "dim" => Command::Dim {
                module: self.name_of(&["module"])?,
            },
            "ass" => Command::Ass {
                module: self.name_of(&["module"])?,
            },
            "local-depth" => {
                let module = self.name_of(&["module"])?;
                self.keyword("at")?;
                Command::LocalDepth {
                    module,
                    prime: self.name_of(&["prime"])?,
                }
            }
            "ext" => {
                let (i, t) = self.cur.expect_int()?;
                let index = i.to_usize().ok_or_else(|| t.error("index out of range"))?;
                let ideal = self.name_of(&["ideal", "prime"])?;
                self.keyword("on")?;
                Command::Ext {
                    index,
                    ideal,
                    module: self.name_of(&["module"])?,
                }
            }
            "theorem" => {
                let (seq, module) = self.seq_on_module()?;
                let mut primes = Vec::new();
                if self.cur.eat_keyword("with") {
                    loop {
                        primes.push(self.name_of(&["prime"])?);
                        if !self.cur.eat_sym(',') {
                            break;
                        }
                    }
                }
                Command::Theorem { seq, module, primes }
            }
            "corollary2" => {
                let f = self.name_of(&["seq"])?;
                let g = self.name_of(&["seq"])?;
                self.keyword("on")?;
                Command::Corollary2 {
                    f,
                    g,
                    module: self.name_of(&["module"])?,
                }
            }
            other => return Err(first.error(format!("unknown command `{other}`"))),
        })
    }
}
