use serde_json::{json, Value};

use crate::criteria::{
    corollary2_check, depth_ext, is_monomial_presentable, is_regular, is_strongly_regular,
    local_depth, monomial_ass, prime_membership, sop_regular_check, theorem_crosscheck,
    Corollary2Outcome, DepthValue, PrimeRow, PrimeSet, SopOutcome, Verdict, Witness,
};
use crate::error::Result;
use crate::fpmodule::{ext_module, FPModule};
use crate::koszul::{build_koszul, depth_via_koszul};
use crate::poly::Polynomial;

use super::report::{Report, Status};
use super::{Command, Entity, Session};

fn depth_json(d: DepthValue) -> Value {
    match d {
        DepthValue::Finite(v) => json!(v),
        DepthValue::Infinite => json!("inf"),
    }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::ZeroDivisor { index, element } => json!({
            "kind": "zero-divisor",
            "index": index,
            "element": element.to_string(),
        }),
        Witness::Homology { degree, cycle } => json!({
            "kind": "koszul-cycle",
            "degree": degree,
            "element": cycle.to_string(),
        }),
        Witness::Prime { prime, depth } => json!({
            "kind": "prime",
            "prime": prime.to_string(),
            "depth": depth_json(*depth),
        }),
    }
}

fn verdict_json(v: &Verdict, revalidated: bool) -> Value {
    json!({
        "holds": v.holds,
        "criterion": v.criterion.name(),
        "witness": v.witness.as_ref().map(witness_json),
        "revalidated": revalidated,
    })
}

fn witness_element(v: &Verdict) -> Option<String> {
    match v.witness.as_ref()? {
        Witness::ZeroDivisor { element, .. } => Some(element.to_string()),
        Witness::Homology { cycle, .. } => Some(cycle.to_string()),
        Witness::Prime { prime, .. } => Some(prime.to_string()),
    }
}

fn rows_json(rows: &[PrimeRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "prime": r.prime.to_string(),
                    "local_depth": depth_json(r.local_depth),
                    "meets_bound": r.meets_bound,
                })
            })
            .collect(),
    )
}

fn module_json(m: &FPModule) -> Value {
    let rows: Vec<Vec<String>> = m.matrix().iter().map(|r| strings(r)).collect();
    json!({
        "generators": m.rank(),
        "relations": rows,
        "grading": m.grading(),
    })
}

fn check(f: &[Polynomial], m: &FPModule) -> Result<(Status, Value)> {
    let regular = is_regular(f, m)?;
    let strong = is_strongly_regular(f, m)?;
    let regular_ok = regular.revalidate(f, m)?;
    let strong_ok = strong.revalidate(f, m)?;
    let mut notes = Vec::new();
    if strong.holds && !regular.holds {
        notes.push("strongly regular but not regular".to_string());
    }
    if !regular_ok || !strong_ok {
        notes.push("a witness failed re-validation".to_string());
    }
    let status = if !notes.is_empty() {
        Status::Inconsistent
    } else if regular.holds {
        Status::Pass
    } else {
        Status::Negative
    };
    let witness = if regular.holds {
        witness_element(&strong)
    } else {
        witness_element(&regular)
    };
    Ok((
        status,
        json!({
            "regular": regular.holds,
            "strongly_regular": strong.holds,
            "witness": witness,
            "regular_verdict": verdict_json(&regular, regular_ok),
            "strong_verdict": verdict_json(&strong, strong_ok),
            "inconsistencies": notes,
        }),
    ))
}

fn strong_check(f: &[Polynomial], m: &FPModule) -> Result<(Status, Value)> {
    let strong = is_strongly_regular(f, m)?;
    let ok = strong.revalidate(f, m)?;
    let status = match (ok, strong.holds) {
        (false, _) => Status::Inconsistent,
        (true, true) => Status::Pass,
        (true, false) => Status::Negative,
    };
    Ok((
        status,
        json!({
            "strongly_regular": strong.holds,
            "witness": witness_element(&strong),
            "verdict": verdict_json(&strong, ok),
        }),
    ))
}

fn depth(m: &FPModule) -> Result<(Status, Value)> {
    let ext = depth_ext(m)?;
    let koszul = if m.is_graded() { Some(depth_via_koszul(m)?) } else { None };
    let agree = koszul.is_none_or(|k| k == ext);
    let status = if agree { Status::Pass } else { Status::Inconsistent };
    Ok((
        status,
        json!({
            "depth": depth_json(ext),
            "depth_ext": depth_json(ext),
            "depth_koszul": koszul.map(depth_json),
            "agree": agree,
        }),
    ))
}

fn koszul(f: &[Polynomial], m: &FPModule) -> Result<(Status, Value)> {
    let k = build_koszul(f, m)?;
    let mut homology = Vec::new();
    for i in 0..=k.length() {
        let w = k.homology_witness(i)?;
        homology.push(json!({
            "degree": i,
            "vanishes": w.is_none(),
            "witness": w.map(|e| e.to_string()),
        }));
    }
    Ok((
        Status::Pass,
        json!({ "ranks": k.ranks(), "homology": homology }),
    ))
}

fn ass(m: &FPModule, session: &Session) -> Result<(Status, Value)> {
    let set = if is_monomial_presentable(m)? {
        monomial_ass(m)?
    } else {
        let mut found = Vec::new();
        for (_, e) in session.entities() {
            if let Entity::Prime(p) = e {
                if prime_membership(m, p)?.in_ass {
                    found.push(p.clone());
                }
            }
        }
        PrimeSet::candidates(found)
    };
    Ok((
        Status::Pass,
        json!({
            "primes": strings(&set.primes),
            "complete": set.is_complete(),
        }),
    ))
}

fn theorem(f: &[Polynomial], m: &FPModule, primes: &[String], session: &Session) -> Result<(Status, Value)> {
    let candidates = if primes.is_empty() {
        None
    } else {
        let list = primes
            .iter()
            .map(|p| session.prime(p).cloned())
            .collect::<Result<Vec<_>>>()?;
        Some(PrimeSet::candidates(list))
    };
    let report = theorem_crosscheck(m, f, candidates.as_ref(), session.strict())?;
    let status = if report.consistent() { Status::Pass } else { Status::Inconsistent };
    let regular_ok = report.regular.revalidate(f, m)?;
    Ok((
        status,
        json!({
            "length": report.length,
            "condition_i": report.regular.holds,
            "condition_ii": report.condition_ii,
            "condition_iii": report.condition_iii,
            "regular_verdict": verdict_json(&report.regular, regular_ok),
            "ass_complete": report.ass.is_complete(),
            "ass": rows_json(&report.ass_rows),
            "supp": rows_json(&report.supp_rows),
            "consistency": if report.consistent() { "ok" } else { "violated" },
            "inconsistencies": report.inconsistencies,
        }),
    ))
}

fn corollary2(f: &[Polynomial], g: &[Polynomial], m: &FPModule) -> Result<(Status, Value)> {
    let r = corollary2_check(m, f, g)?;
    let status = match r.outcome {
        Corollary2Outcome::Confirmed => Status::Pass,
        Corollary2Outcome::HypothesisNotSatisfied | Corollary2Outcome::PremiseNotSatisfied => Status::Negative,
        Corollary2Outcome::Inconsistent => Status::Inconsistent,
    };
    Ok((
        status,
        json!({
            "outcome": r.outcome.describe(),
            "hypothesis": r.hypothesis,
            "f_regular": r.f_regular.map(|v| v.holds),
            "g_regular": r.g_regular.map(|v| v.holds),
        }),
    ))
}

fn sop(f: &[Polynomial], m: &FPModule) -> Result<(Status, Value)> {
    let r = sop_regular_check(m, f)?;
    let status = match r.outcome {
        SopOutcome::Confirmed => Status::Pass,
        SopOutcome::NotSystemOfParameters | SopOutcome::NotCohenMacaulay => Status::Negative,
        SopOutcome::Inconsistent => Status::Inconsistent,
    };
    Ok((
        status,
        json!({
            "outcome": r.outcome.describe(),
            "dimension": r.dimension,
            "quotient_dimension": r.quotient_dimension,
            "depth": depth_json(r.depth),
            "system_of_parameters": r.is_sop,
            "cohen_macaulay": r.is_cohen_macaulay,
            "regular": r.regular.map(|v| v.holds),
        }),
    ))
}

fn dispatch(cmd: &Command, s: &Session) -> Result<(Status, Value)> {
    match cmd {
        Command::Check { seq, module } => check(s.sequence(seq)?, s.module(module)?),
        Command::StrongCheck { seq, module } => strong_check(s.sequence(seq)?, s.module(module)?),
        Command::Depth { module } => depth(s.module(module)?),
        Command::LocalDepth { module, prime } => {
            let m = s.module(module)?;
            let p = s.prime(prime)?;
            let d = local_depth(m, p)?;
            Ok((
                Status::Pass,
                json!({ "prime": p.to_string(), "local_depth": depth_json(d), "in_support": d != DepthValue::Infinite }),
            ))
        }
        Command::Koszul { seq, module } => koszul(s.sequence(seq)?, s.module(module)?),
        Command::Ass { module } => ass(s.module(module)?, s),
        Command::Ext { index, ideal, module } => {
            let e = ext_module(*index, s.ideal(ideal)?, s.module(module)?)?;
            Ok((
                Status::Pass,
                json!({
                    "index": index,
                    "is_zero": e.is_zero()?,
                    "presentation": module_json(&e),
                }),
            ))
        }
        Command::Dim { module } => Ok((
            Status::Pass,
            json!({ "dimension": s.module(module)?.krull_dimension()? }),
        )),
        Command::Theorem { seq, module, primes } => theorem(s.sequence(seq)?, s.module(module)?, primes, s),
        Command::Corollary2 { f, g, module } => corollary2(s.sequence(f)?, s.sequence(g)?, s.module(module)?),
        Command::Sop { seq, module } => sop(s.sequence(seq)?, s.module(module)?),
    }
}

/// Runs one command. Mathematical failures, including degree-cap aborts,
/// become error reports rather than panics.
pub fn execute(cmd: &Command, session: &Session) -> Report {
    match dispatch(cmd, session) {
        Ok((status, result)) => Report {
            command: cmd.to_string(),
            status,
            result,
        },
        Err(e) => Report::error(cmd.to_string(), &e),
    }
}
