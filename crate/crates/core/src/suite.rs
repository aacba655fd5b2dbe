//! Built-in verification battery over a fixed parameter grid.

use std::fmt;
use std::time::Instant;

use num_traits::One;
use serde::Serialize;

use crate::drinfeld::{check_partner_theorem, drinfeld_P, drinfeld_Q, trace_invariants, DrinfeldPoly};
use crate::field::{parse_ratfunc, q_minus_qinv, RatFunc};
use crate::linalg::burnside_irreducible;
use crate::modules::{
    box_module, box_of_chevalley, evaluation_module, is_isomorphic, tensor, tet_from_equitable, Coords,
};
use crate::presentations::{pullback_kappa, pullback_psi, rho_twist, verify_relations, AlgebraId, Representation};
use crate::tdpair::{box_pair, shape_is_symmetric_unimodal, six_polynomial_table, star_check, zeta_bridges, Order};

/// Evaluation parameters of the diameter-1 grid.
pub const GRID: [&str; 5] = ["q", "q^3", "1/q^2", "2", "1/2"];
/// Pairs giving irreducible diameter-2 tensor modules.
pub const PAIRS: [(&str, &str); 3] = [("q^3", "1/q^3"), ("q^5", "1/q"), ("q^4", "1/q^4")];
/// Parameters of the diameter-3 tensor module.
pub const TRIPLE: [&str; 3] = ["q^3", "1/q^3", "q^7"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub check: String,
    pub detail: String,
    pub instance: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
    pub seconds: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w_check = self.rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
        let w_inst = self.rows.iter().map(|r| r.instance.len()).max().unwrap_or(0);
        for r in &self.rows {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let line = format!("{status}  {:w_check$}  {:w_inst$}  {}", r.check, r.instance, r.detail);
            writeln!(f, "{}", line.trim_end())?;
        }
        let failed = self.rows.iter().filter(|r| !r.pass).count();
        write!(f, "{} checks, {failed} failed, {:.2}s", self.rows.len(), self.seconds)
    }
}

struct Runner {
    rows: Vec<SuiteRow>,
}

impl Runner {
    fn record(&mut self, check: &str, instance: &str, outcome: Result<bool, String>) {
        let (pass, detail) = match outcome {
            Ok(p) => (p, String::new()),
            Err(e) => (false, e),
        };
        self.rows.push(SuiteRow {
            check: check.into(),
            detail,
            instance: instance.into(),
            pass,
        });
    }
}

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).expect("built-in literal")
}

fn msg<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn tensor_chevalley(params: &[&str]) -> Result<Representation, String> {
    let mut acc = evaluation_module(&rf(params[0]), Coords::Chevalley).map_err(msg)?;
    for p in &params[1..] {
        acc = tensor(&acc, &evaluation_module(&rf(p), Coords::Chevalley).map_err(msg)?).map_err(msg)?;
    }
    Ok(acc)
}

fn relations_hold(a: &RatFunc) -> Result<bool, String> {
    let ch = evaluation_module(a, Coords::Chevalley).map_err(msg)?;
    let eq = evaluation_module(a, Coords::Equitable).map_err(msg)?;
    let bx = pullback_psi(&eq).map_err(msg)?;
    let plus = pullback_kappa(&bx).map_err(msg)?;
    Ok([&ch, &eq, &bx, &plus].iter().all(|r| verify_relations(r).passed()))
}

fn traces_hold(a: &RatFunc) -> Result<bool, String> {
    let eq = evaluation_module(a, Coords::Equitable).map_err(msg)?;
    let (t1, t2) = trace_invariants(&eq).map_err(msg)?;
    let c2 = &q_minus_qinv() * &q_minus_qinv();
    let two = RatFunc::from_int(2);
    Ok(t1 == &two + &(&c2 * &a.inv().map_err(msg)?) && t2 == &two + &(&c2 * a))
}

fn closed_forms_hold(a: &RatFunc) -> Result<bool, String> {
    let ch = evaluation_module(a, Coords::Chevalley).map_err(msg)?;
    let p = drinfeld_P(&ch).map_err(msg)?;
    let q = drinfeld_Q(&ch).map_err(msg)?;
    Ok(p == DrinfeldPoly::from_reciprocal_roots(std::slice::from_ref(a))
        && q == DrinfeldPoly::from_reciprocal_roots(&[a.inv().map_err(msg)?]))
}

fn tdpair_axioms_hold(rep: &Representation) -> Result<bool, String> {
    for i in 0..4 {
        let pair = match box_pair(rep, i, Order::Descending, Order::Ascending).map_err(msg)? {
            Ok(p) => p,
            Err(v) => return Err(format!("(x{i}, x{}): {v}", (i + 2) % 4)),
        };
        let shape = pair.shape();
        if shape[0] != 1 || !shape_is_symmetric_unimodal(&shape) {
            return Err(format!("shape {shape:?}"));
        }
        if pair.diameter() >= 2 && !star_check(&pair, &RatFunc::q()).map_err(msg)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs every instance check and collects one row per check and instance.
pub fn run_suite() -> SuiteReport {
    let start = Instant::now();
    let mut r = Runner { rows: Vec::new() };
    for a in GRID {
        let av = rf(a);
        let inst = format!("V(1,{a})");
        r.record("relations", &inst, relations_hold(&av));
        r.record("traces", &inst, traces_hold(&av));
        r.record("drinfeld closed forms", &inst, closed_forms_hold(&av));
    }

    let mut family: Vec<(String, Representation)> = Vec::new();
    for a in GRID {
        match box_module(&rf(a)) {
            Ok(rep) => family.push((format!("V(1,{a})"), rep)),
            Err(e) => r.record("construct", a, Err(msg(e))),
        }
    }
    let mut big: Vec<Vec<&str>> = PAIRS.iter().map(|(a, b)| vec![*a, *b]).collect();
    big.push(TRIPLE.to_vec());
    for params in &big {
        let inst = params
            .iter()
            .map(|p| format!("V(1,{p})"))
            .collect::<Vec<_>>()
            .join(" x ");
        match tensor_chevalley(params).and_then(|t| box_of_chevalley(&t).map_err(msg)) {
            Ok(rep) => family.push((inst, rep)),
            Err(e) => r.record("construct", &inst, Err(e)),
        }
    }

    for (inst, rep) in &family {
        r.record("irreducible", inst, burnside_irreducible(&rep.ordered()).map_err(msg));
        r.record(
            "partner theorem",
            inst,
            check_partner_theorem(rep).map(|c| c.holds).map_err(msg),
        );
        r.record(
            "rho^2 isomorphism",
            inst,
            rho_twist(rep)
                .and_then(|t| rho_twist(&t))
                .map_err(msg)
                .and_then(|t2| is_isomorphic(rep, &t2).map_err(msg))
                .map(|s| s.is_some()),
        );
        r.record("tridiagonal pairs", inst, tdpair_axioms_hold(rep));
        if rep.dim() > 2 {
            r.record(
                "six-polynomial table",
                inst,
                six_polynomial_table(rep).map(|t| t.holds()).map_err(msg),
            );
            r.record(
                "split-sequence bridges",
                inst,
                zeta_bridges(rep).map(|z| z.holds).map_err(msg),
            );
        }
    }

    let v11 = box_module(&RatFunc::one()).map_err(msg);
    r.record(
        "V(1,1) reducible",
        "V(1,1)",
        v11.and_then(|v| burnside_irreducible(&v.ordered()).map_err(msg))
            .map(|irr| !irr),
    );
    r.record(
        "a = b q^2 reducible",
        "V(1,q^3) x V(1,q)",
        tensor_chevalley(&["q^3", "q"])
            .and_then(|t| burnside_irreducible(&t.ordered()).map_err(msg))
            .map(|irr| !irr),
    );
    r.record(
        "tampered relation caught",
        "box V(1,q^3), x1 doubled",
        tampered_caught(),
    );

    for a in GRID {
        let inst = format!("V(1,{a})");
        let outcome = evaluation_module(&rf(a), Coords::Equitable)
            .and_then(|eq| tet_from_equitable(&eq))
            .map_err(msg)
            .and_then(|tet| {
                let ok = verify_relations(&tet).passed();
                check_partner_theorem(&tet).map(|c| ok && c.holds).map_err(msg)
            });
        r.record("q-tetrahedron partner theorem", &inst, outcome);
    }

    SuiteReport {
        rows: r.rows,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn tampered_caught() -> Result<bool, String> {
    let rep = box_module(&rf("q^3")).map_err(msg)?;
    let mut gens = rep.gens().clone();
    let x1 = gens["x1"].scale(&RatFunc::from_int(2));
    gens.insert("x1".into(), x1);
    let bad = Representation::new(AlgebraId::BoxQ, gens).map_err(msg)?;
    let report = verify_relations(&bad);
    Ok(report.failed_labels() == ["box_q.qweyl.i=0", "box_q.qweyl.i=1"])
}
