use proptest::prelude::*;

use hecke_llt::hecke::{c_tilde, kl_polynomial, HeckeElement};
use hecke_llt::perm::SymmetricGroup;
use hecke_llt::qmatrix::{normalize, normalize_randomized, QMonomial};
use hecke_llt::symfunc::Transitions;
use hecke_llt::traces::{family_tables, Family};
use hecke_llt::{Basis, HalfLaurent, Partition, Permutation, RatFunc, SymFunc};
use rand::rngs::StdRng;
use rand::SeedableRng;

fn laurent() -> impl Strategy<Value = HalfLaurent> {
    prop::collection::vec((-6i32..6, -5i64..5), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(e, c)| HalfLaurent::integer(c).shift(e))
            .fold(HalfLaurent::zero(), |a, b| a + b)
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(a, b)| RatFunc::new(a, b).ok())
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as u8).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn hecke_element(n: usize) -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((permutation(n), laurent()), 1..4).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(HeckeElement::zero(n), |acc, (w, c)| {
                acc.add(&HeckeElement::t(&w).scale(&c)).unwrap()
            })
    })
}

fn word(n: u8, max_len: usize) -> impl Strategy<Value = QMonomial> {
    prop::collection::vec((1..=n, 1..=n), 0..=max_len).prop_map(QMonomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), a.bar() * b.bar());
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        if !b.is_zero() {
            prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn compose_power_is_multiplicative(a in ratfunc(), j in 1u32..4, k in 1u32..4) {
        prop_assert_eq!(a.compose_power(j).compose_power(k), a.compose_power(j * k));
    }

    #[test]
    fn ratfunc_display_parses_back(a in ratfunc()) {
        let back: RatFunc = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn hecke_multiplication_is_associative(
        a in hecke_element(4), b in hecke_element(4), c in hecke_element(4)
    ) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn family_tables_are_traces_on_random_elements(a in hecke_element(5), b in hecke_element(5)) {
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        for family in [Family::Eps, Family::Chi, Family::EtaLlt] {
            for t in family_tables(family, 5).unwrap().iter() {
                prop_assert_eq!(t.eval(&ab).unwrap(), t.eval(&ba).unwrap());
            }
        }
    }

    #[test]
    fn straightening_strategies_agree(w in word(3, 6), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        prop_assert_eq!(normalize(&w), normalize_randomized(&w, &mut rng));
    }

    #[test]
    fn straightening_preserves_row_and_column_content(w in word(4, 5)) {
        let content = |m: &QMonomial| {
            let mut rows: Vec<u8> = m.letters().iter().map(|l| l.0).collect();
            let mut cols: Vec<u8> = m.letters().iter().map(|l| l.1).collect();
            rows.sort_unstable();
            cols.sort_unstable();
            (rows, cols)
        };
        for (m, _) in normalize(&w).terms() {
            prop_assert!(m.is_normal());
            prop_assert_eq!(content(m), content(&w));
        }
    }

    #[test]
    fn ctilde_coefficients_have_unit_constant_term(w in permutation(4)) {
        let c = c_tilde(&w).unwrap();
        prop_assert!(c.coeff(&w).is_one());
        for (_, p) in c.terms() {
            prop_assert!(p.filter_exponents(|e| e == 0).is_one());
            prop_assert!(p.is_nonneg_integer_q_polynomial());
        }
    }
}

#[test]
fn basis_changes_round_trip() {
    for n in 1..=6 {
        for l in Partition::all(n) {
            for from in Basis::ALL {
                let f = SymFunc::basis_element(from, &l);
                for to in Basis::ALL {
                    let back = f.change_basis(to).unwrap().change_basis(from).unwrap();
                    assert_eq!(back, f, "{from}{l} via {to}");
                }
            }
        }
    }
}

#[test]
fn omega_is_an_involution_swapping_e_and_h() {
    for n in 1..=5 {
        for l in Partition::all(n) {
            let e = SymFunc::basis_element(Basis::E, &l);
            let h = SymFunc::basis_element(Basis::H, &l);
            assert!(e.omega().unwrap().same_function(&h).unwrap());
            assert_eq!(e.omega().unwrap().omega().unwrap(), e);
        }
    }
}

/// Standard Young tableaux of shape λ, counted by removing corners.
fn count_syt(shape: &[usize]) -> u64 {
    if shape.iter().all(|&r| r == 0) {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let corner = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
        if corner {
            let mut smaller = shape.to_vec();
            smaller[i] -= 1;
            total += count_syt(&smaller);
        }
    }
    total
}

#[test]
fn hook_length_formula_matches_tableau_count() {
    for n in 1..=8 {
        let fact: u64 = (1..=n as u64).product();
        for l in Partition::all(n) {
            let hooks: u64 = l.hooks().iter().map(|&h| h as u64).product();
            assert_eq!(fact / hooks, count_syt(l.parts()), "{l}");
        }
    }
}

#[test]
fn smooth_iff_every_kl_polynomial_is_one() {
    for n in 1..=5 {
        for w in Permutation::all(n) {
            let all_one = Permutation::all(n)
                .filter(|u| hecke_llt::perm::bruhat_leq(u, &w).unwrap())
                .all(|u| kl_polynomial(&u, &w).unwrap().is_one());
            assert_eq!(all_one, w.is_smooth(), "{w}");
        }
    }
}

#[test]
fn smooth_counts() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| Permutation::all(n).filter(Permutation::is_smooth).count())
        .collect();
    assert_eq!(counts, [1, 2, 6, 22, 88]);
}

#[test]
fn quadratic_relation() {
    for n in 2..=4 {
        for i in 1..n {
            let t = HeckeElement::generator(n, i);
            let lhs = t.mul(&t).unwrap();
            let rhs = t
                .scale(&HalfLaurent::from_q_coeffs(&[-1, 1]))
                .add(&HeckeElement::identity(n).scale(&HalfLaurent::q()))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn transition_tables_cover_every_partition() {
    for n in 1..=6 {
        assert_eq!(
            Transitions::get(n).unwrap().partitions(),
            Partition::all(n).as_slice()
        );
        assert_eq!(
            SymmetricGroup::get(n).unwrap().classes().len(),
            Partition::all(n).len()
        );
    }
}
