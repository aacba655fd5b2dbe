use serde::Serialize;

use super::{split_sequence, td_drinfeld, verify_tdpair, AxiomViolation, TDPair, TdError};
use crate::drinfeld::{chevalley_of_box, drinfeld_P, drinfeld_Q, mu_value, sigma_value, DrinfeldPoly, ZPoly};
use crate::field::{q_minus_qinv, RatFunc};
use crate::modules::{analyze_box, weight_decomposition};
use crate::presentations::{rho_twist, AlgebraId, Representation};

/// Direction of a standard ordering of `x_i`-eigenvalues: descending means
/// `θ_n = q^{d−2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Descending,
    Ascending,
}

/// The pair `(x_i, x_{i+2})` of a type-1 □_q-module with the given
/// orderings.
pub fn box_pair(
    rep: &Representation,
    i: usize,
    order: Order,
    order_star: Order,
) -> Result<Result<TDPair, AxiomViolation>, TdError> {
    let an = analyze_box(rep, None)?;
    let d = an.diameter;
    let eigs = |h: usize, o: Order| -> Vec<RatFunc> {
        let mut v: Vec<RatFunc> = (0..=d).map(|n| an.eigenvalue(h, n)).collect();
        if o == Order::Ascending {
            v.reverse();
        }
        v
    };
    let names = AlgebraId::BoxQ.generators();
    let (i, j) = (i % 4, (i + 2) % 4);
    verify_tdpair(
        rep.gen(names[i]),
        rep.gen(names[j]),
        &eigs(i, order),
        &eigs(j, order_star),
    )
}

fn pair_or_err(r: Result<TDPair, AxiomViolation>) -> Result<TDPair, TdError> {
    r.map_err(TdError::Axiom)
}

fn td_poly(rep: &Representation, i: usize, order: Order, order_star: Order) -> Result<ZPoly, TdError> {
    let pair = pair_or_err(box_pair(rep, i, order, order_star)?)?;
    td_drinfeld(&pair, &RatFunc::q())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub label: String,
    pub poly: ZPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableGroup {
    pub coincide: bool,
    pub entries: Vec<TableEntry>,
}

impl TableGroup {
    fn new(entries: Vec<(String, ZPoly)>) -> Self {
        let coincide = entries.windows(2).all(|w| w[0].1 == w[1].1);
        TableGroup {
            coincide,
            entries: entries
                .into_iter()
                .map(|(label, poly)| TableEntry { label, poly })
                .collect(),
        }
    }
}

/// The two groups of six polynomials that must coincide on an
/// irreducible type-1 □_q-module of diameter at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SixTable {
    pub diameter: usize,
    pub groups: [TableGroup; 2],
}

impl SixTable {
    pub fn holds(&self) -> bool {
        self.groups.iter().all(|g| g.coincide)
    }
}

fn reversed(f: &DrinfeldPoly, d: usize) -> ZPoly {
    f.poly().reverse(d)
}

/// Computes the pair-side polynomials from the tridiagonal pairs and the
/// module-side ones from the Drinfel'd polynomials of `V, ρV, ρ²V, ρ³V`.
pub fn six_polynomial_table(rep: &Representation) -> Result<SixTable, TdError> {
    let mut twists = vec![rep.clone()];
    for k in 1..4 {
        twists.push(rho_twist(&twists[k - 1])?);
    }
    let mut p = Vec::with_capacity(4);
    let mut q = Vec::with_capacity(4);
    for tw in &twists {
        let ch = chevalley_of_box(tw)?;
        p.push(drinfeld_P(&ch)?);
        q.push(drinfeld_Q(&ch)?);
    }
    let d = p[0].degree();
    use Order::{Ascending as Asc, Descending as Desc};
    let first = vec![
        ("P_{x0,x2}(z)".to_string(), td_poly(rep, 0, Desc, Asc)?),
        ("z^d P_{rho V}(1/z)".to_string(), reversed(&p[1], d)),
        ("z^d Q_V(1/z)".to_string(), reversed(&q[0], d)),
        ("P_{x2,x0}(z)".to_string(), td_poly(rep, 2, Desc, Asc)?),
        ("z^d P_{rho^3 V}(1/z)".to_string(), reversed(&p[3], d)),
        ("z^d Q_{rho^2 V}(1/z)".to_string(), reversed(&q[2], d)),
    ];
    let second = vec![
        ("P_{x1,x3}(z)".to_string(), td_poly(rep, 1, Desc, Asc)?),
        ("z^d P_V(1/z)".to_string(), reversed(&p[0], d)),
        ("z^d Q_{rho V}(1/z)".to_string(), reversed(&q[1], d)),
        ("P_{x3,x1}(z)".to_string(), td_poly(rep, 3, Asc, Desc)?),
        ("z^d P_{rho^2 V}(1/z)".to_string(), reversed(&p[2], d)),
        ("z^d Q_{rho^3 V}(1/z)".to_string(), reversed(&q[3], d)),
    ];
    Ok(SixTable {
        diameter: d,
        groups: [TableGroup::new(first), TableGroup::new(second)],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarCheck {
    pub forward: ZPoly,
    pub holds: bool,
    pub swapped: ZPoly,
}

/// Compares `P_{A,A*}` with `P_{A*,A}`.
pub fn star_check(pair: &TDPair, t: &RatFunc) -> Result<StarCheck, TdError> {
    let forward = td_drinfeld(pair, t)?;
    let swapped = td_drinfeld(&pair.swapped(), t)?;
    Ok(StarCheck {
        holds: forward == swapped,
        forward,
        swapped,
    })
}

/// Split sequences of `(x3, x1)` and `(x2, x0)` against
/// `(q−q⁻¹)^{2i}σ_i` and `(q−q⁻¹)^{2i}μ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaBridges {
    pub holds: bool,
    pub mu_expected: Vec<RatFunc>,
    pub sigma_expected: Vec<RatFunc>,
    pub zeta_x2_x0: Vec<RatFunc>,
    pub zeta_x3_x1: Vec<RatFunc>,
}

pub fn zeta_bridges(rep: &Representation) -> Result<ZetaBridges, TdError> {
    use Order::{Ascending as Asc, Descending as Desc};
    let zeta_x3_x1 = split_sequence(&pair_or_err(box_pair(rep, 3, Asc, Desc)?)?)?;
    let zeta_x2_x0 = split_sequence(&pair_or_err(box_pair(rep, 2, Desc, Asc)?)?)?;
    let ch = chevalley_of_box(rep)?;
    let wd = weight_decomposition(&ch)?;
    let c2 = &q_minus_qinv() * &q_minus_qinv();
    let mut sigma_expected = Vec::new();
    let mut mu_expected = Vec::new();
    let mut scale = RatFunc::from_int(1);
    for i in 0..=wd.diameter {
        sigma_expected.push(&scale * &sigma_value(&ch, &wd, i)?);
        mu_expected.push(&scale * &mu_value(&ch, &wd, i)?);
        scale = &scale * &c2;
    }
    Ok(ZetaBridges {
        holds: zeta_x3_x1 == sigma_expected && zeta_x2_x0 == mu_expected,
        mu_expected,
        sigma_expected,
        zeta_x2_x0,
        zeta_x3_x1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::parse_ratfunc;
    use crate::linalg::FieldMatrix;
    use crate::modules::{box_module, box_of_chevalley, evaluation_module, tensor, Coords};
    use crate::tdpair::{base_of, fit_theta_params, q_base, q_geometric_check, Axiom, ThetaParams};
    use num_traits::{One, Zero};

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    fn tensor_box(a: &str, b: &str) -> Representation {
        let ev = |s: &str| evaluation_module(&rf(s), Coords::Chevalley).unwrap();
        box_of_chevalley(&tensor(&ev(a), &ev(b)).unwrap()).unwrap()
    }

    #[test]
    fn evaluation_pair_is_q_geometric() {
        let rep = box_module(&rf("q^3")).unwrap();
        let pair = box_pair(&rep, 0, Order::Descending, Order::Descending)
            .unwrap()
            .unwrap();
        assert_eq!(pair.theta(), &[rf("q"), rf("1/q")]);
        assert!(q_geometric_check(&pair, &RatFunc::q()));
        assert!(!q_geometric_check(&pair, &rf("q^2")));
        assert_eq!(base_of(&pair).unwrap(), q_base());
    }

    #[test]
    fn reducible_evaluation_pair() {
        let rep = box_module(&rf("1")).unwrap();
        let v = box_pair(&rep, 0, Order::Descending, Order::Descending)
            .unwrap()
            .unwrap_err();
        assert_eq!(v.axiom, Axiom::Irreducible);
    }

    #[test]
    fn eigenvalue_parameter_patterns() {
        let rep = tensor_box("q^3", "1/q^3");
        let (z, o) = (RatFunc::zero(), RatFunc::one());
        let pair = box_pair(&rep, 2, Order::Descending, Order::Ascending).unwrap().unwrap();
        let prm = fit_theta_params(&pair, &RatFunc::q()).unwrap();
        let expect = ThetaParams {
            a: z.clone(),
            a_star: z.clone(),
            b: z.clone(),
            b_star: o.clone(),
            c: o.clone(),
            c_star: z.clone(),
        };
        assert_eq!(prm, expect);
        let pair = box_pair(&rep, 3, Order::Ascending, Order::Descending).unwrap().unwrap();
        let prm = fit_theta_params(&pair, &RatFunc::q()).unwrap();
        let expect = ThetaParams {
            a: z.clone(),
            a_star: z.clone(),
            b: o.clone(),
            b_star: z.clone(),
            c: z,
            c_star: o,
        };
        assert_eq!(prm, expect);
    }

    #[test]
    fn six_table_and_bridges_on_tensor_module() {
        for (a, b) in [("q^3", "1/q^3"), ("q^5", "1/q")] {
            let rep = tensor_box(a, b);
            let table = six_polynomial_table(&rep).unwrap();
            assert!(table.holds(), "{a} {b}: {table:?}");
            assert!(zeta_bridges(&rep).unwrap().holds);
        }
    }

    #[test]
    fn bridge_values() {
        let rep = tensor_box("q^3", "1/q^3");
        // Q_V = (1 − q⁻³z)(1 − q³z), so z²Q_V(1/z) = (z − q⁻³)(z − q³).
        let expect = ZPoly::from_coeffs(vec![rf("1"), rf("-(q^3 + 1/q^3)"), rf("1")]);
        assert_eq!(td_poly(&rep, 0, Order::Descending, Order::Ascending).unwrap(), expect);
        assert_eq!(td_poly(&rep, 1, Order::Descending, Order::Ascending).unwrap(), expect);
    }

    #[test]
    fn polynomial_is_independent_of_standard_ordering() {
        let rep = tensor_box("q^5", "1/q");
        let base = td_poly(&rep, 0, Order::Descending, Order::Ascending).unwrap();
        for o in [Order::Descending, Order::Ascending] {
            for os in [Order::Descending, Order::Ascending] {
                assert_eq!(td_poly(&rep, 0, o, os).unwrap(), base);
            }
        }
    }

    #[test]
    fn star_symmetry() {
        let rep = tensor_box("q^4", "1/q^4");
        for i in 0..4 {
            let pair = box_pair(&rep, i, Order::Descending, Order::Descending)
                .unwrap()
                .unwrap();
            assert!(star_check(&pair, &RatFunc::q()).unwrap().holds);
        }
    }

    #[test]
    fn tampered_generator_breaks_table() {
        let rep = tensor_box("q^3", "1/q^3");
        let mut gens = rep.gens().clone();
        let x1 = gens["x1"].clone();
        gens.insert("x1".into(), &x1 + &FieldMatrix::identity(4));
        let bad = Representation::new(AlgebraId::BoxQ, gens).unwrap();
        let broken = match six_polynomial_table(&bad) {
            Ok(t) => !t.holds(),
            Err(_) => true,
        };
        assert!(broken);
    }

    #[test]
    fn small_diameter_is_refused() {
        let rep = box_module(&rf("q^3")).unwrap();
        let pair = box_pair(&rep, 0, Order::Descending, Order::Ascending).unwrap().unwrap();
        assert_eq!(td_drinfeld(&pair, &RatFunc::q()), Err(TdError::UnsupportedDiameter(1)));
    }
}
