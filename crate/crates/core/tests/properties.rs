mod common;

use ai_core::groebner::{
    colength_poly, initial_ideal, normal_form, MonomialOrder, Polynomial, PolynomialIdeal,
};
use ai_core::monomial::{Exponent, MonomialIdeal};
use ai_core::multiplier::{asymptotic_multiplier, jumping_scan, multiplier_ideal};
use ai_core::newton::{build_polyhedron, complement_volume, complement_volume_via_box, lct, multiplicity};
use ai_core::rational::{factorial, pow, Rational};
use ai_core::report::{parse_csv, sequence_report_for, Column, ExperimentSpec};
use ai_core::sequences::{saturate, GradedSequence};
use ai_core::verify::{root_sum_inequality, run_suite, Outcome, Suite};
use common::{brute_colength, lct_2d, minimal_2d, multiplicity_2d, multiplier_2d, q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn ideal_from(n: usize, powers: &[u32], extra: &[Vec<u32>]) -> MonomialIdeal {
    let mut gens: Vec<Exponent> = (0..n).map(|i| Exponent::pure_power(n, i, powers[i])).collect();
    for e in extra {
        let u: Vec<u32> = e.iter().zip(powers).map(|(x, p)| x % p).collect();
        if u.iter().any(|&c| c > 0) {
            gens.push(Exponent::new(u));
        }
    }
    MonomialIdeal::minimalize(n, gens).unwrap()
}

/// Zero-dimensional monomial ideals in `n` variables with pure powers up
/// to `max_power`.
fn zero_dim(n: usize, max_power: u32) -> impl Strategy<Value = MonomialIdeal> {
    (
        prop::collection::vec(1..=max_power, n),
        prop::collection::vec(prop::collection::vec(0..max_power, n), 0..4),
    )
        .prop_map(move |(p, e)| ideal_from(n, &p, &e))
}

fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop_oneof![zero_dim(2, 7), zero_dim(3, 4)]
}

fn pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    prop_oneof![
        (zero_dim(2, 6), zero_dim(2, 6)),
        (zero_dim(3, 4), zero_dim(3, 4))
    ]
}

fn gens_2d(a: &MonomialIdeal) -> Vec<(i64, i64)> {
    a.gens()
        .iter()
        .map(|g| (g.coords()[0] as i64, g.coords()[1] as i64))
        .collect()
}

fn lambda() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=4).prop_map(|(a, b)| q(a, b))
}

fn weighted() -> impl Strategy<Value = GradedSequence> {
    (1u64..=6, 1u64..=6, 1u64..=4).prop_map(|(a, b, c)| GradedSequence::weighted(vec![a, b], c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent_antichain(a in small_ideal()) {
        let again = MonomialIdeal::minimalize(a.dim(), a.gens().to_vec()).unwrap();
        prop_assert_eq!(&again, &a);
        for (i, u) in a.gens().iter().enumerate() {
            for (j, v) in a.gens().iter().enumerate() {
                prop_assert!(i == j || !u.divides(v));
            }
        }
    }

    #[test]
    fn product_inside_intersection((a, b) in pair()) {
        let ab = a.product(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        for g in ab.gens() {
            prop_assert!(meet.contains_monomial(g).unwrap());
        }
    }

    #[test]
    fn powers_multiply(a in zero_dim(2, 5), p in 1u32..4, r in 1u32..4) {
        prop_assert_eq!(a.power(p + r), a.power(p).product(&a.power(r)).unwrap());
    }

    #[test]
    fn colon_times_divisor_inside((a, b) in pair()) {
        let c = a.colon(&b).unwrap();
        prop_assert!(a.contains(&c.product(&b).unwrap()).unwrap());
    }

    #[test]
    fn colength_reverses_containment((a, b) in pair()) {
        let s = a.sum(&b).unwrap();
        prop_assert!(a.colength().unwrap() >= s.colength().unwrap());
        prop_assert!(multiplicity(&a).unwrap() >= multiplicity(&s).unwrap());
    }

    #[test]
    fn diagonal_colength_and_multiplicity(p in prop::collection::vec(1u32..=6, 1..=4)) {
        let a = MonomialIdeal::diagonal(&p).unwrap();
        let prod: u64 = p.iter().map(|&x| x as u64).product();
        prop_assert_eq!(a.colength().unwrap(), prod);
        prop_assert_eq!(multiplicity(&a).unwrap(), prod);
    }

    #[test]
    fn colength_matches_brute_force(a in small_ideal()) {
        let gens: Vec<Vec<u32>> = a.gens().iter().map(|g| g.coords().to_vec()).collect();
        let bound = a.box_bound().unwrap();
        prop_assert_eq!(a.colength().unwrap(), brute_colength(&gens, a.dim(), bound));
    }

    #[test]
    fn planar_invariants_match_oracles(a in zero_dim(2, 9)) {
        let g = gens_2d(&a);
        prop_assert_eq!(Rational::from_integer(multiplicity(&a).unwrap().into()), multiplicity_2d(&g));
        prop_assert_eq!(lct(&a).unwrap(), lct_2d(&g));
    }

    #[test]
    fn volumes_agree(a in small_ideal()) {
        let p = build_polyhedron(&a).unwrap();
        let v = complement_volume(&p).unwrap();
        prop_assert_eq!(&v, &complement_volume_via_box(&p).unwrap());
        let e = v * Rational::from_integer(factorial(a.dim() as u32));
        prop_assert!(e.is_integer() && e > Rational::zero());
    }

    #[test]
    fn power_scaling(a in small_ideal(), k in 1u32..=3) {
        let n = a.dim() as u32;
        let ak = a.power(k);
        prop_assert_eq!(multiplicity(&ak).unwrap(), (k as u64).pow(n) * multiplicity(&a).unwrap());
        prop_assert_eq!(lct(&ak).unwrap(), lct(&a).unwrap() / qi(k as i64));
    }

    #[test]
    fn teissier_and_lct_analogue((a, b) in pair()) {
        let n = a.dim() as u32;
        let ab = a.product(&b).unwrap();
        let (ea, eb, eab) = (multiplicity(&a).unwrap(), multiplicity(&b).unwrap(), multiplicity(&ab).unwrap());
        prop_assert_ne!(root_sum_inequality(eab, ea, eb, n), Outcome::Fail);
        let inv = |x: Rational| Rational::one() / x;
        prop_assert!(inv(lct(&ab).unwrap()) <= inv(lct(&a).unwrap()) + inv(lct(&b).unwrap()));
    }

    #[test]
    fn multiplicity_lower_bounds(a in small_ideal()) {
        let n = a.dim() as u32;
        let e = multiplicity(&a).unwrap();
        let bound = Rational::from_integer(BigInt::from(n).pow(n)) / pow(&lct(&a).unwrap(), n);
        prop_assert!(Rational::from_integer(e.into()) >= bound);
        prop_assert!(e >= a.order().unwrap().pow(n));
    }

    #[test]
    fn multiplier_monotone_in_lambda(a in small_ideal(), l in lambda(), m in lambda()) {
        let (lo, hi) = if l <= m { (l, m) } else { (m, l) };
        let big = multiplier_ideal(&a, &lo).unwrap();
        let small = multiplier_ideal(&a, &hi).unwrap();
        prop_assert!(big.contains(&small).unwrap());
    }

    #[test]
    fn ideal_inside_its_multiplier_ideal(a in small_ideal()) {
        prop_assert!(multiplier_ideal(&a, &qi(1)).unwrap().contains(&a).unwrap());
    }

    #[test]
    fn planar_multiplier_matches_enumeration(a in zero_dim(2, 6), l in lambda()) {
        let j = multiplier_ideal(&a, &l).unwrap();
        let bound = (l.clone() * qi(6)).ceil().to_integer().try_into().unwrap_or(80i64) + 1;
        prop_assert_eq!(minimal_2d(&gens_2d(&j)), multiplier_2d(&gens_2d(&a), &l, bound));
    }

    #[test]
    fn subadditivity((a, b) in pair(), l in lambda()) {
        let left = multiplier_ideal(&a.product(&b).unwrap(), &l).unwrap();
        let right = multiplier_ideal(&a, &l).unwrap().product(&multiplier_ideal(&b, &l).unwrap()).unwrap();
        prop_assert!(right.contains(&left).unwrap());
    }

    #[test]
    fn first_jump_is_lct(a in small_ideal()) {
        let l = lct(&a).unwrap();
        let jumps = jumping_scan(&a, &(l.clone() + qi(1))).unwrap();
        prop_assert_eq!(&jumps[0].0, &l);
    }

    #[test]
    fn lct_of_multiplier_ideal(a in small_ideal(), l in lambda()) {
        let j = multiplier_ideal(&a, &l).unwrap();
        if !j.is_unit() {
            let lhs = Rational::one() / lct(&j).unwrap();
            prop_assert!(lhs >= &l / lct(&a).unwrap() - qi(1));
        }
    }

    #[test]
    fn multiplier_grows_along_divisibility(seq in weighted(), m in 1u64..=4, p in 1u64..=3, r in 1u64..=3) {
        let lam = q(1, p as i64);
        let left = multiplier_ideal(&seq.get(m * p).unwrap(), &lam).unwrap();
        let lam2 = q(1, (p * r) as i64);
        let right = multiplier_ideal(&seq.get(m * p * r).unwrap(), &lam2).unwrap();
        prop_assert!(right.contains(&left).unwrap());
    }

    #[test]
    fn doubling_chain_is_nonincreasing(seq in weighted(), m in 1u64..=6) {
        let n = seq.dim() as u32;
        let scaled = |m: u64| {
            Rational::new(multiplicity(&seq.get(m).unwrap()).unwrap().into(), BigInt::from(m).pow(n))
        };
        prop_assert!(scaled(2 * m) <= scaled(m));
        prop_assert!(scaled(4 * m) <= scaled(2 * m));
    }

    #[test]
    fn asymptotic_multiplier_contains_a(seq in weighted(), m in 1u64..=6) {
        let a = seq.get(m).unwrap();
        let b = asymptotic_multiplier(&seq, m, 8).unwrap();
        prop_assert!(b.ideal.contains(&a).unwrap());
        prop_assert!(multiplicity(&b.ideal).unwrap() <= multiplicity(&a).unwrap());
        prop_assert!(b.ideal.colength().unwrap() <= a.colength().unwrap());
    }

    #[test]
    fn reverse_graded_on_stabilized_prefix(seq in weighted()) {
        let bs: Vec<_> = (1..=6).map(|m| asymptotic_multiplier(&seq, m, 16).unwrap()).collect();
        for p in 1..=6usize {
            for r in 1..p {
                let (bp, br) = (&bs[p - 1], &bs[r - 1]);
                if bp.stabilized && br.stabilized {
                    prop_assert!(br.ideal.contains(&bp.ideal).unwrap());
                    if p + r <= 6 && bs[p + r - 1].stabilized {
                        let prod = bp.ideal.product(&br.ideal).unwrap();
                        prop_assert!(prod.contains(&bs[p + r - 1].ideal).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn saturation_laws(seq in weighted(), m in 1u64..=6) {
        let sat = saturate(&seq, 8).unwrap();
        let a = seq.get(m).unwrap();
        let s = sat.get(m).unwrap();
        prop_assert!(s.contains(&a).unwrap());
        prop_assert!(multiplicity(&s).unwrap() <= multiplicity(&a).unwrap());
        prop_assert_eq!(saturate(&sat, 8).unwrap().get(m).unwrap(), s.clone());
        let b = asymptotic_multiplier(&sat, m, 8).unwrap();
        let colon = s.colon(&b.ideal).unwrap();
        prop_assert!(colon.contains_monomial(&Exponent::ones(2)).unwrap());
        let b0 = asymptotic_multiplier(&seq, m, 8).unwrap();
        if b.stabilized && b0.stabilized {
            prop_assert_eq!(b.ideal, b0.ideal);
        }
    }

    #[test]
    fn csv_round_trips(seq in weighted(), max in 1u64..=8) {
        let mut spec = ExperimentSpec::new(vec![]);
        spec.max_index = max;
        spec.p_budget = 4;
        spec.r_budget = 4;
        spec.columns = Column::ALL.to_vec();
        let report = sequence_report_for(&seq, &spec).unwrap();
        let parsed = parse_csv(&report.to_csv().unwrap()).unwrap();
        prop_assert_eq!(parsed.rows.len() as u64, max);
        for field in &parsed.fields {
            let column = report.column(field).unwrap();
            for ((m, cell), (pm, row)) in column.iter().zip(&parsed.rows) {
                prop_assert_eq!(m, pm);
                let exact = match cell {
                    ai_core::report::Cell::Exact(r) => Some(r.clone()),
                    _ => None,
                };
                prop_assert_eq!(&exact, &row[field]);
            }
        }
        let again = sequence_report_for(&seq, &spec).unwrap();
        prop_assert_eq!(again.to_csv().unwrap(), report.to_csv().unwrap());
    }
}

fn random_poly(coeffs: &[i64], degree: u32) -> Polynomial {
    let mut terms = Vec::new();
    let mut k = 0;
    for d in 0..=degree {
        for i in 0..=d {
            let c = coeffs[k % coeffs.len()];
            k += 1;
            if c != 0 {
                terms.push((Exponent::new(vec![i, d - i]), qi(c)));
            }
        }
    }
    Polynomial::from_terms(2, terms).unwrap()
}

fn zero_dim_poly() -> impl Strategy<Value = PolynomialIdeal> {
    (1u32..=3, 1u32..=3, prop::collection::vec(-3i64..=3, 10), prop::collection::vec(-3i64..=3, 10))
        .prop_map(|(a, b, ca, cb)| {
            let lead = |e: Vec<u32>| Polynomial::monomial(Exponent::new(e), qi(1));
            let f = lead(vec![a, 0]).add(&random_poly(&ca, a - 1)).unwrap();
            let g = lead(vec![0, b]).add(&random_poly(&cb, b - 1)).unwrap();
            PolynomialIdeal::new(2, vec![f, g]).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn constructed_members_reduce_to_zero(i in zero_dim_poly(), h1 in prop::collection::vec(-2i64..=2, 6), h2 in prop::collection::vec(-2i64..=2, 6)) {
        let order = MonomialOrder::grevlex(2);
        let gb = i.groebner_basis(&order).unwrap();
        let g = i.generators();
        let member = random_poly(&h1, 2).mul(&g[0]).unwrap().add(&random_poly(&h2, 2).mul(&g[1]).unwrap()).unwrap();
        prop_assert!(normal_form(&member, &gb, &order).unwrap().is_zero());
        prop_assert!(i.contains(&member).unwrap());
    }

    #[test]
    fn colength_is_read_off_the_initial_ideal(i in zero_dim_poly()) {
        let order = MonomialOrder::grevlex(2);
        let init = initial_ideal(&i, &order).unwrap();
        prop_assert_eq!(colength_poly(&i, &order).unwrap(), init.colength().unwrap());
        let lex = MonomialOrder::lex(2);
        prop_assert_eq!(colength_poly(&i, &lex).unwrap(), init.colength().unwrap());
    }

    #[test]
    fn initial_ideal_doubling(i in zero_dim_poly()) {
        let order = MonomialOrder::grevlex(2);
        let in1 = initial_ideal(&i, &order).unwrap();
        let in2 = initial_ideal(&i.power(2).unwrap(), &order).unwrap();
        prop_assert!(Rational::new(multiplicity(&in2).unwrap().into(), 4.into()) <= qi(multiplicity(&in1).unwrap() as i64));
        prop_assert!(lct(&in2).unwrap() * qi(2) >= lct(&in1).unwrap());
    }

    #[test]
    fn bases_are_deterministic(i in zero_dim_poly()) {
        let order = MonomialOrder::grevlex(2);
        let fresh = PolynomialIdeal::new(2, i.generators().to_vec()).unwrap();
        prop_assert_eq!(i.groebner_basis(&order).unwrap(), fresh.groebner_basis(&order).unwrap());
    }
}

#[test]
fn same_seed_same_report() {
    for suite in Suite::ALL {
        let a = run_suite(suite, 11, 6).unwrap();
        let b = run_suite(suite, 11, 6).unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
