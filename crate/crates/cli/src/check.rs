use anyhow::{bail, Result};
use boxq_core::drinfeld::{check_partner_theorem, drinfeld_P, trace_invariants};
use boxq_core::field::{q_minus_qinv, RatFunc, Rational};
use boxq_core::modules::is_isomorphic;
use boxq_core::presentations::{rho_twist, AlgebraId, Representation};
use boxq_core::tdpair::{box_pair, six_polynomial_table, star_check, Order};
use serde_json::{json, Value};

use crate::numeric::{matrix_at, mul, partner_at, poly_at, scalar_at, show};
use crate::{to_box, to_chevalley, to_equitable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Theorem {
    /// P of the ρ-twist is the partner of P
    Partners,
    /// the ρ²-twist is isomorphic to the module
    IsoRho2,
    /// the six TD-pair polynomials coincide in two groups
    SixTable,
    /// P_{A,A*} = P_{A*,A} for each pair (x_i, x_{i+2})
    Star,
    /// trace formulas on a diameter-1 equitable module
    Traces,
}

/// A finished check: the JSON report and whether it passed.
pub struct Verdict {
    pub report: Value,
    pub holds: bool,
    /// Human-readable lines explaining a failure.
    pub diff: Vec<String>,
}

pub fn run(which: Theorem, rep: &Representation, q0: Option<&Rational>) -> Result<Verdict> {
    match which {
        Theorem::Partners => partners(rep, q0),
        Theorem::IsoRho2 => iso_rho2(rep, q0),
        Theorem::SixTable => six_table(rep, q0),
        Theorem::Star => star(rep),
        Theorem::Traces => traces(rep, q0),
    }
}

fn partners(rep: &Representation, q0: Option<&Rational>) -> Result<Verdict> {
    let rep = if rep.algebra() == AlgebraId::TetQ {
        rep.clone()
    } else {
        to_box(rep)?
    };
    let c = check_partner_theorem(&rep)?;
    let mut report = serde_json::to_value(&c)?;
    let mut diff = Vec::new();
    if !c.holds {
        diff.push(format!("partner of P_V: {}", c.partner_of_p));
        diff.push(format!("P of rho V:     {}", c.p_twist));
    }
    if let Some(q0) = q0 {
        let lhs = partner_at(&poly_at(c.p.poly(), q0)?);
        let rhs = poly_at(c.p_twist.poly(), q0)?;
        if (lhs == rhs) != c.holds {
            bail!("exact and numeric comparisons disagree at q0 = {q0}");
        }
        report["at_q0"] = json!({"partner_of_p": show(&lhs), "p_twist": show(&rhs), "q0": q0.to_string()});
    }
    Ok(Verdict {
        report,
        holds: c.holds,
        diff,
    })
}

fn iso_rho2(rep: &Representation, q0: Option<&Rational>) -> Result<Verdict> {
    let rep = if rep.algebra() == AlgebraId::TetQ {
        rep.clone()
    } else {
        to_box(rep)?
    };
    let twisted = rho_twist(&rho_twist(&rep)?)?;
    let s = is_isomorphic(&rep, &twisted)?;
    let mut report = json!({ "holds": s.is_some(), "intertwiner": s });
    if let (Some(q0), Some(s)) = (q0, &s) {
        // S·g = g'·S with g from the module and g' from its twist.
        let s0 = matrix_at(s, q0)?;
        for (g, h) in rep.ordered().iter().zip(&twisted.ordered()) {
            if mul(&s0, &matrix_at(g, q0)?) != mul(&matrix_at(h, q0)?, &s0) {
                bail!("intertwiner fails to commute at q0 = {q0}");
            }
        }
        report["at_q0"] = json!({"intertwines": true, "q0": q0.to_string()});
    }
    let diff = if s.is_none() {
        vec!["no invertible intertwiner exists".to_string()]
    } else {
        Vec::new()
    };
    Ok(Verdict {
        holds: s.is_some(),
        report,
        diff,
    })
}

fn six_table(rep: &Representation, q0: Option<&Rational>) -> Result<Verdict> {
    let table = six_polynomial_table(&to_box(rep)?)?;
    let mut report = serde_json::to_value(&table)?;
    report["holds"] = json!(table.holds());
    let mut diff = Vec::new();
    for g in table.groups.iter().filter(|g| !g.coincide) {
        for e in &g.entries {
            diff.push(format!("{}: {}", e.label, e.poly));
        }
    }
    if let Some(q0) = q0 {
        let mut groups = Vec::new();
        for g in &table.groups {
            let vals = g
                .entries
                .iter()
                .map(|e| poly_at(&e.poly, q0))
                .collect::<Result<Vec<_>>>()?;
            if vals.windows(2).all(|w| w[0] == w[1]) != g.coincide {
                bail!("exact and numeric comparisons disagree at q0 = {q0}");
            }
            groups.push(show(&vals[0]));
        }
        report["at_q0"] = json!({"groups": groups, "q0": q0.to_string()});
    }
    Ok(Verdict {
        holds: table.holds(),
        report,
        diff,
    })
}

fn star(rep: &Representation) -> Result<Verdict> {
    let rep = to_box(rep)?;
    let mut pairs = Vec::new();
    let mut diff = Vec::new();
    let mut holds = true;
    for i in 0..4 {
        let label = format!("(x{i},x{})", (i + 2) % 4);
        let pair = match box_pair(&rep, i, Order::Descending, Order::Ascending)? {
            Ok(p) => p,
            Err(v) => {
                holds = false;
                diff.push(format!("{label}: {v}"));
                pairs.push(json!({"pair": label, "violation": v}));
                continue;
            }
        };
        let c = star_check(&pair, &RatFunc::q())?;
        if !c.holds {
            holds = false;
            diff.push(format!("{label}: {} vs {}", c.forward, c.swapped));
        }
        let mut v = serde_json::to_value(&c)?;
        v["pair"] = json!(label);
        pairs.push(v);
    }
    Ok(Verdict {
        report: json!({"holds": holds, "pairs": pairs}),
        holds,
        diff,
    })
}

fn traces(rep: &Representation, q0: Option<&Rational>) -> Result<Verdict> {
    let eq = to_equitable(rep)?;
    if eq.dim() != 2 {
        bail!("trace formulas need a diameter-1 module, got dimension {}", eq.dim());
    }
    let (t1, t2) = trace_invariants(&eq)?;
    // P = 1 − a z recovers the evaluation parameter.
    let p = drinfeld_P(&to_chevalley(&eq)?)?;
    let a = -&p.poly().coeff(1);
    let c2 = &q_minus_qinv() * &q_minus_qinv();
    let two = RatFunc::from_int(2);
    let e1 = &two + &(&c2 * &a.inv()?);
    let e2 = &two + &(&c2 * &a);
    let holds = t1 == e1 && t2 == e2;
    let mut diff = Vec::new();
    if t1 != e1 {
        diff.push(format!("tr(X01 X23) = {t1}, expected {e1}"));
    }
    if t2 != e2 {
        diff.push(format!("tr(X12 X30) = {t2}, expected {e2}"));
    }
    let mut report = json!({
        "a": a,
        "expected_x01_x23": e1,
        "expected_x12_x30": e2,
        "holds": holds,
        "tr_x01_x23": t1,
        "tr_x12_x30": t2,
    });
    if let Some(q0) = q0 {
        report["at_q0"] = json!({
            "q0": q0.to_string(),
            "tr_x01_x23": scalar_at(&t1, q0)?.to_string(),
            "tr_x12_x30": scalar_at(&t2, q0)?.to_string(),
        });
    }
    Ok(Verdict { report, holds, diff })
}
