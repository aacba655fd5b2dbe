use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::One;
use serde::Serialize;

use super::{AlgebraId, Representation};
use crate::field::{q_int, q_minus_qinv, RatFunc};
use crate::linalg::{FieldMatrix, Scalar};

/// `coeff · g_{w[0]} g_{w[1]} ⋯`; the empty word is the identity.
#[derive(Debug, Clone)]
pub struct Term {
    pub coeff: RatFunc,
    pub word: Vec<usize>,
}

/// A defining relation `Σ terms = 0`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: String,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub label: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub total: usize,
    pub failed: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }

    pub fn failed_labels(&self) -> Vec<&str> {
        self.failed.iter().map(|f| f.label.as_str()).collect()
    }
}

fn term(coeff: RatFunc, word: &[usize]) -> Term {
    Term {
        coeff,
        word: word.to_vec(),
    }
}

/// `q·ab − q⁻¹·ba = (q − q⁻¹)·1`.
fn q_weyl(label: String, a: usize, b: usize) -> Relation {
    Relation {
        label,
        terms: vec![
            term(RatFunc::q(), &[a, b]),
            term(-RatFunc::q_pow(-1), &[b, a]),
            term(-q_minus_qinv(), &[]),
        ],
    }
}

/// `a³b − [3]a²ba + [3]aba² − ba³ = 0`.
fn q_serre(label: String, a: usize, b: usize) -> Relation {
    let three = q_int(3);
    Relation {
        label,
        terms: vec![
            term(RatFunc::one(), &[a, a, a, b]),
            term(-three.clone(), &[a, a, b, a]),
            term(three, &[a, b, a, a]),
            term(-RatFunc::one(), &[b, a, a, a]),
        ],
    }
}

/// `ab = 1`.
fn inverse_pair(label: String, a: usize, b: usize) -> Relation {
    Relation {
        label,
        terms: vec![term(RatFunc::one(), &[a, b]), term(-RatFunc::one(), &[])],
    }
}

fn box_relations() -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 0..4 {
        out.push(q_weyl(format!("box_q.qweyl.i={i}"), i, (i + 1) % 4));
    }
    for i in 0..4 {
        out.push(q_serre(format!("box_q.qserre.i={i}"), i, (i + 2) % 4));
    }
    out
}

fn uq_loop_relations() -> Vec<Relation> {
    let g = |n: &str| AlgebraId::UqLoop.generator_index(n).unwrap();
    let idx = |kind: &str, i: usize| g(&format!("{kind}{i}"));
    let mut out = Vec::new();
    for i in 0..2 {
        let (k, kinv) = (idx("K", i), g(&format!("K{i}inv")));
        out.push(inverse_pair(format!("uq_loop.inverse.K{i}K{i}inv"), k, kinv));
        out.push(inverse_pair(format!("uq_loop.inverse.K{i}invK{i}"), kinv, k));
    }
    out.push(inverse_pair("uq_loop.inverse.K0K1".into(), g("K0"), g("K1")));
    out.push(inverse_pair("uq_loop.inverse.K1K0".into(), g("K1"), g("K0")));
    // K_i e_j^± K_i⁻¹ = q^{±a_ij} e_j^± with a_ii = 2, a_ij = −2.
    for i in 0..2 {
        let (k, kinv) = (idx("K", i), g(&format!("K{i}inv")));
        for j in 0..2 {
            for (sign, suffix) in [(1i64, "p"), (-1, "m")] {
                let e = g(&format!("e{j}{suffix}"));
                let exp = if i == j { 2 * sign } else { -2 * sign };
                out.push(Relation {
                    label: format!("uq_loop.conjugation.K{i}.e{j}{suffix}"),
                    terms: vec![term(RatFunc::one(), &[k, e, kinv]), term(-RatFunc::q_pow(exp), &[e])],
                });
            }
        }
    }
    for i in 0..2 {
        let (ep, em) = (g(&format!("e{i}p")), g(&format!("e{i}m")));
        let c = q_minus_qinv().inv().expect("q - 1/q is nonzero");
        out.push(Relation {
            label: format!("uq_loop.commutator.i={i}"),
            terms: vec![
                term(RatFunc::one(), &[ep, em]),
                term(-RatFunc::one(), &[em, ep]),
                term(-c.clone(), &[idx("K", i)]),
                term(c, &[g(&format!("K{i}inv"))]),
            ],
        });
    }
    for (a, b) in [("e0p", "e1m"), ("e0m", "e1p")] {
        out.push(Relation {
            label: format!("uq_loop.commute.{a}.{b}"),
            terms: vec![
                term(RatFunc::one(), &[g(a), g(b)]),
                term(-RatFunc::one(), &[g(b), g(a)]),
            ],
        });
    }
    for suffix in ["p", "m"] {
        for (i, j) in [(0, 1), (1, 0)] {
            let (a, b) = (g(&format!("e{i}{suffix}")), g(&format!("e{j}{suffix}")));
            out.push(q_serre(format!("uq_loop.qserre.e{i}{suffix}.e{j}{suffix}"), a, b));
        }
    }
    out
}

fn equitable_relations() -> Vec<Relation> {
    let g = |n: &str| AlgebraId::UqLoopEquitable.generator_index(n).unwrap();
    let mut out = vec![
        inverse_pair("uq_loop_equitable.inverse.X13X31".into(), g("X13"), g("X31")),
        inverse_pair("uq_loop_equitable.inverse.X31X13".into(), g("X31"), g("X13")),
    ];
    for (a, b) in [("X01", "X13"), ("X13", "X30"), ("X23", "X31"), ("X31", "X12")] {
        out.push(q_weyl(format!("uq_loop_equitable.qweyl.{a}.{b}"), g(a), g(b)));
    }
    let cyc = ["X01", "X12", "X23", "X30"];
    for i in 0..4 {
        let (a, b) = (cyc[i], cyc[(i + 1) % 4]);
        out.push(q_weyl(format!("uq_loop_equitable.qweyl.{a}.{b}"), g(a), g(b)));
    }
    for i in 0..4 {
        let (a, b) = (cyc[i], cyc[(i + 2) % 4]);
        out.push(q_serre(format!("uq_loop_equitable.qserre.{a}.{b}"), g(a), g(b)));
    }
    out
}

fn uq_plus_relations() -> Vec<Relation> {
    vec![
        q_serre("uq_plus.qserre.x.y".into(), 0, 1),
        q_serre("uq_plus.qserre.y.x".into(), 1, 0),
    ]
}

fn tet_relations() -> Vec<Relation> {
    let name = |i: usize, j: usize| format!("x{}{}", i % 4, j % 4);
    let g = |i: usize, j: usize| AlgebraId::TetQ.generator_index(&name(i, j)).unwrap();
    let mut out = Vec::new();
    for i in 0..4 {
        let j = i + 2;
        out.push(inverse_pair(
            format!("tet_q.inverse.{}{}", name(i, j), name(j, i)),
            g(i, j),
            g(j, i),
        ));
    }
    for (di, dj) in [(1, 1), (1, 2), (2, 1)] {
        for h in 0..4 {
            let i = h + di;
            let j = i + dj;
            out.push(q_weyl(
                format!("tet_q.qweyl.{}.{}", name(h, i), name(i, j)),
                g(h, i),
                g(i, j),
            ));
        }
    }
    for h in 0..4 {
        out.push(q_serre(
            format!("tet_q.qserre.{}.{}", name(h, h + 1), name(h + 2, h + 3)),
            g(h, h + 1),
            g(h + 2, h + 3),
        ));
    }
    out
}

/// The defining relations of `algebra`, in a fixed order.
pub fn relations(algebra: AlgebraId) -> &'static [Relation] {
    static TABLES: [OnceLock<Vec<Relation>>; 5] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let (slot, build): (usize, fn() -> Vec<Relation>) = match algebra {
        AlgebraId::BoxQ => (0, box_relations),
        AlgebraId::UqLoop => (1, uq_loop_relations),
        AlgebraId::UqLoopEquitable => (2, equitable_relations),
        AlgebraId::UqPlus => (3, uq_plus_relations),
        AlgebraId::TetQ => (4, tet_relations),
    };
    TABLES[slot].get_or_init(build)
}

/// Word products, memoized by suffix so shared tails are computed once.
struct WordCache<'a> {
    gens: &'a [FieldMatrix],
    dim: usize,
    memo: HashMap<Vec<usize>, FieldMatrix>,
}

impl WordCache<'_> {
    fn product(&mut self, word: &[usize]) -> FieldMatrix {
        match word {
            [] => FieldMatrix::identity(self.dim),
            [g] => self.gens[*g].clone(),
            [first, rest @ ..] => {
                if let Some(m) = self.memo.get(word) {
                    return m.clone();
                }
                let tail = self.product(rest);
                let m = &self.gens[*first] * &tail;
                self.memo.insert(word.to_vec(), m.clone());
                m
            }
        }
    }
}

/// Evaluates every defining relation on the bound matrices.
pub fn verify_relations(rep: &Representation) -> RelationReport {
    let table = relations(rep.algebra());
    let gens = rep.ordered();
    let mut cache = WordCache {
        gens: &gens,
        dim: rep.dim(),
        memo: HashMap::new(),
    };
    let mut failed = Vec::new();
    for rel in table {
        let mut acc = FieldMatrix::zeros(rep.dim(), rep.dim());
        for t in &rel.terms {
            acc = &acc + &cache.product(&t.word).scale(&t.coeff);
        }
        if let Some(detail) = describe_residual(&acc) {
            failed.push(RelationFailure {
                label: rel.label.clone(),
                detail,
            });
        }
    }
    RelationReport {
        total: table.len(),
        failed,
    }
}

/// Names the heaviest nonzero entry of a residual, if any.
fn describe_residual(m: &FieldMatrix) -> Option<String> {
    let n = m.cols();
    let nonzero: Vec<(usize, &RatFunc)> = m.entries().iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
    let &(k, worst) = nonzero
        .iter()
        .max_by(|a, b| a.1.weight().cmp(&b.1.weight()).then(b.0.cmp(&a.0)))?;
    Some(format!(
        "{} nonzero residual entries; ({},{}) = {}",
        nonzero.len(),
        k / n,
        k % n,
        worst
    ))
}
