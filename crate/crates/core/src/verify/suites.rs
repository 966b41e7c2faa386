use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use super::oracles;
use super::{run_check, Outcome, Report};
use crate::chromatic::{
    chromatic_qsym, graph_from_permutation, llt_poly, verify_plethystic_relation,
};
use crate::error::Result;
use crate::hecke::{c_tilde, HeckeElement, KlTable};
use crate::limits;
use crate::partition::Partition;
use crate::perm::{Permutation, SymmetricGroup};
use crate::qmatrix::{self, normalize, normalize_randomized, t_uv_monomial, QMonomial};
use crate::ring::{rational, HalfLaurent};
use crate::symfunc::{Basis, SymFunc};
use crate::traces::{
    atomic_trace, eps_coordinates, family_tables, llt_transform, read_from_omega_y, read_from_y,
    verify_specialization_chains, y_q, AtomKind, Family, TraceTable,
};

fn rng_for(n: usize, salt: u64) -> StdRng {
    StdRng::seed_from_u64(0x5eed ^ ((n as u64) << 8) ^ salt)
}

/// Index triples, exhaustive up to `limit` elements and sampled beyond.
fn sample_indices(
    order: usize,
    arity: usize,
    exhaustive: bool,
    samples: usize,
    rng: &mut StdRng,
) -> Vec<Vec<usize>> {
    if exhaustive {
        let mut out = vec![vec![]];
        for _ in 0..arity {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..order).map(move |i| {
                        let mut v = v.clone();
                        v.push(i);
                        v
                    })
                })
                .collect();
        }
        out
    } else {
        (0..samples)
            .map(|_| (0..arity).map(|_| rng.gen_range(0..order)).collect())
            .collect()
    }
}

pub(super) fn hecke(n: usize) -> Result<Vec<Report>> {
    limits::check("hecke", n, limits::PERM_MAX_N)?;
    let g = SymmetricGroup::get(n)?;
    let t: Vec<HeckeElement> = g.elements().iter().map(HeckeElement::t).collect();
    let assoc = run_check("hecke_associativity", n, || {
        let mut rng = rng_for(n, 1);
        for idx in sample_indices(g.order(), 3, n <= 4, 2000, &mut rng) {
            let (a, b, c) = (&t[idx[0]], &t[idx[1]], &t[idx[2]]);
            if a.mul(b)?.mul(c)? != a.mul(&b.mul(c)?)? {
                return Ok(Outcome::Fail(json!({
                    "a": g.element(idx[0]).to_string(),
                    "b": g.element(idx[1]).to_string(),
                    "c": g.element(idx[2]).to_string(),
                })));
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let group = run_check("hecke_q1_group_algebra", n, || {
        let mut rng = rng_for(n, 2);
        for idx in sample_indices(g.order(), 2, n <= 5, 5000, &mut rng) {
            let (u, w) = (g.element(idx[0]), g.element(idx[1]));
            let got = t[idx[0]].mul(&t[idx[1]])?.specialize_q1();
            let expected = BTreeMap::from([(u.compose(w)?, rational(1))]);
            if got != expected {
                return Ok(Outcome::Fail(
                    json!({ "u": u.to_string(), "w": w.to_string() }),
                ));
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    Ok(vec![assoc, group])
}

pub(super) fn kl(n: usize) -> Result<Vec<Report>> {
    let kl = KlTable::get(n)?;
    let g = kl.group();
    let r_oracle = run_check("r_polynomial_oracle", n, || {
        for (wi, w) in g.elements().iter().enumerate() {
            let oracle: BTreeMap<Permutation, HalfLaurent> =
                oracles::r_polynomials_by_inversion(w)?
                    .into_iter()
                    .collect();
            for (ui, u) in g.elements().iter().enumerate() {
                let expected = oracle.get(u).cloned().unwrap_or_default();
                let got = kl.r(ui, wi);
                if got != expected {
                    return Ok(Outcome::Fail(json!({
                        "u": u.to_string(), "w": w.to_string(),
                        "recursion": got.to_string(), "oracle": expected.to_string(),
                    })));
                }
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let bruhat = run_check("bruhat_subword_oracle", n, || {
        for (wi, w) in g.elements().iter().enumerate() {
            let lower = oracles::bruhat_lower_set_by_subwords(w);
            for (ui, u) in g.elements().iter().enumerate() {
                if lower.contains(u) != g.leq(ui, wi) {
                    return Ok(Outcome::Fail(
                        json!({ "u": u.to_string(), "w": w.to_string() }),
                    ));
                }
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let degrees = run_check("kl_degree_bounds", n, || {
        for wi in 0..g.order() {
            for ui in 0..g.order() {
                let p = kl.p(ui, wi);
                let ok = if !g.leq(ui, wi) {
                    p.is_zero()
                } else if ui == wi {
                    p.is_one()
                } else {
                    let d = (g.length(wi) - g.length(ui)) as i32;
                    // v-degree of P is below ℓ(w) − ℓ(u)
                    p.is_nonneg_integer_q_polynomial()
                        && p.coeff(0) == rational(1)
                        && p.max_exp().unwrap_or(0) < d
                };
                if !ok {
                    return Ok(Outcome::Fail(json!({
                        "u": g.element(ui).to_string(), "w": g.element(wi).to_string(),
                        "p": p.to_string(),
                    })));
                }
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let smooth = run_check("smooth_iff_trivial_kl", n, || {
        let mut count = 0;
        for (wi, w) in g.elements().iter().enumerate() {
            let all_one = (0..g.order())
                .filter(|&u| g.leq(u, wi))
                .all(|u| kl.p(u, wi).is_one());
            if all_one != w.is_smooth() {
                return Ok(Outcome::Fail(
                    json!({ "w": w.to_string(), "smooth": w.is_smooth() }),
                ));
            }
            count += all_one as usize;
        }
        Ok(Outcome::Pass(Some(format!("{count} smooth permutations"))))
    })?;
    Ok(vec![r_oracle, bruhat, degrees, smooth])
}

pub(super) fn lemma4(n: usize) -> Result<Vec<Report>> {
    limits::check("minimal length representatives", n, limits::TRACE_MAX_N)?;
    let g = SymmetricGroup::get(n)?;
    let report = run_check("min_length_reps_smooth", n, || {
        let minimal: Vec<usize> = (0..g.order())
            .filter(|&i| g.length(i) == g.element(i).min_class_length())
            .collect();
        for &wi in &minimal {
            let w = g.element(wi);
            if !w.is_smooth() {
                return Ok(Outcome::Fail(json!({ "w": w.to_string() })));
            }
            for vi in (0..g.order()).filter(|&v| g.leq(v, wi)) {
                let v = g.element(vi);
                if !v.is_smooth() || g.length(vi) != v.min_class_length() {
                    return Ok(Outcome::Fail(
                        json!({ "w": w.to_string(), "v": v.to_string() }),
                    ));
                }
            }
        }
        Ok(Outcome::Pass(Some(format!(
            "{} minimal-length elements",
            minimal.len()
        ))))
    })?;
    Ok(vec![report])
}

fn all_words(n: usize, max_len: usize) -> Vec<QMonomial> {
    let letters: Vec<(u8, u8)> = (1..=n as u8)
        .flat_map(|r| (1..=n as u8).map(move |c| (r, c)))
        .collect();
    let mut layer: Vec<Vec<(u8, u8)>> = vec![vec![]];
    let mut out = vec![];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(QMonomial::new));
    }
    out
}

pub(super) fn straightening(n: usize) -> Result<Vec<Report>> {
    let confluence = run_check("straightening_confluence", n, || {
        let mut rng = rng_for(n, 3);
        let words = if n <= 3 {
            all_words(n, 4)
        } else {
            (0..2000)
                .map(|_| {
                    let len = rng.gen_range(1..=5);
                    QMonomial::new(
                        (0..len)
                            .map(|_| (rng.gen_range(1..=n as u8), rng.gen_range(1..=n as u8)))
                            .collect(),
                    )
                })
                .collect()
        };
        let mut st = qmatrix::Straightener::new();
        for w in &words {
            let a = st.normalize(w);
            let b = normalize_randomized(w, &mut rng);
            if a != b {
                return Ok(Outcome::Fail(json!({
                    "word": w.to_string(), "deterministic": a.to_string(), "randomized": b.to_string(),
                })));
            }
        }
        Ok(Outcome::Pass(Some(format!("{} words", words.len()))))
    })?;
    let longest = run_check("longest_word_expansion", n, || {
        let kl = KlTable::get(n)?;
        let g = kl.group();
        let w0 = Permutation::longest(n);
        let got = normalize(&t_uv_monomial(&w0, &w0)?);
        let e = Permutation::identity(n);
        let mut expected = qmatrix::QElement::zero();
        for (i, w) in g.elements().iter().enumerate() {
            let mono = t_uv_monomial(&e, w)?;
            let one = qmatrix::normalize(&mono);
            expected = expected.add(&one.scale(&kl.r(0, i).shift(-(g.length(i) as i32))));
        }
        if got == expected {
            Ok(Outcome::Pass(None))
        } else {
            Ok(Outcome::Fail(
                json!({ "got": got.to_string(), "expected": expected.to_string() }),
            ))
        }
    })?;
    Ok(vec![confluence, longest])
}

fn table_immanant(t: &TraceTable) -> Result<qmatrix::QElement> {
    qmatrix::immanant(t.values(), t.n())
}

pub(super) fn ordered_set_partition_sums(n: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (family, longest, name) in [
        (Family::EpsLlt, false, "eps_llt_ordered_set_partition_sum"),
        (Family::EtaLlt, true, "eta_llt_ordered_set_partition_sum"),
    ] {
        out.push(run_check(name, n, || {
            let tables = family_tables(family, n)?;
            for (l, t) in Partition::all(n).iter().zip(tables.iter()) {
                let induced = table_immanant(t)?;
                let sum = oracles::ordered_set_partition_sum(l.parts(), longest);
                if induced != sum {
                    return Ok(Outcome::Fail(json!({
                        "lambda": l.to_string(), "induced": induced.to_string(), "sum": sum.to_string(),
                    })));
                }
            }
            Ok(Outcome::Pass(None))
        })?);
    }
    Ok(out)
}

fn first_mismatch(a: &TraceTable, b: &TraceTable) -> Result<Option<serde_json::Value>> {
    let g = SymmetricGroup::get(a.n())?;
    Ok(a.values()
        .iter()
        .zip(b.values())
        .position(|(x, y)| x != y)
        .map(|i| {
            json!({
                "w": g.element(i).to_string(),
                "left": a.values()[i].to_string(),
                "right": b.values()[i].to_string(),
            })
        }))
}

fn compare_families(
    name: &str,
    n: usize,
    left: Family,
    right: impl Fn(&Partition) -> Result<TraceTable>,
) -> Result<Report> {
    run_check(name, n, || {
        let tables = family_tables(left, n)?;
        for (l, t) in Partition::all(n).iter().zip(tables.iter()) {
            if let Some(mut c) = first_mismatch(t, &right(l)?)? {
                c["lambda"] = json!(l.to_string());
                return Ok(Outcome::Fail(c));
            }
        }
        Ok(Outcome::Pass(None))
    })
}

pub(super) fn routes(n: usize) -> Result<Vec<Report>> {
    let eps = family_tables(Family::Eps, n)?;
    let eta = family_tables(Family::Eta, n)?;
    let index = |l: &Partition| {
        Partition::all(n)
            .iter()
            .position(|x| x == l)
            .expect("partition of n")
    };
    Ok(vec![
        compare_families("eps_llt_routes", n, Family::EpsLlt, |l| {
            llt_transform(&eps[index(l)])
        })?,
        compare_families("eta_llt_routes", n, Family::EtaLlt, |l| {
            llt_transform(&eta[index(l)])
        })?,
    ])
}

pub(super) fn psi_llt_scalar(n: usize) -> Result<Vec<Report>> {
    let psi = family_tables(Family::Psi, n)?;
    let index = |l: &Partition| {
        Partition::all(n)
            .iter()
            .position(|x| x == l)
            .expect("partition of n")
    };
    Ok(vec![compare_families(
        "psi_llt_scalar",
        n,
        Family::PsiLlt,
        |l| llt_transform(&psi[index(l)]),
    )?])
}

pub(super) fn smooth_ctilde(n: usize) -> Result<Vec<Report>> {
    let eps = atomic_trace(AtomKind::EpsLlt, n)?;
    let report = run_check("eps_llt_smooth_ctilde", n, || {
        let (mut smooth, mut other_not_one) = (0, 0);
        for w in Permutation::all(n) {
            let value = eps.eval(&c_tilde(&w)?)?;
            if w.is_smooth() {
                smooth += 1;
                if !value.is_one() {
                    return Ok(Outcome::Fail(
                        json!({ "w": w.to_string(), "value": value.to_string() }),
                    ));
                }
            } else if !value.is_one() {
                other_not_one += 1;
            }
        }
        Ok(Outcome::Pass(Some(format!(
            "{smooth} smooth permutations; {other_not_one} others with value ≠ 1"
        ))))
    })?;
    Ok(vec![report])
}

pub(super) fn chains(n: usize) -> Result<Vec<Report>> {
    let start = std::time::Instant::now();
    let reports = verify_specialization_chains(n)?;
    let ms = start.elapsed().as_millis();
    Ok(reports
        .into_iter()
        .map(|r| Report {
            identity: format!("chain_{}_{}", r.target, r.family),
            n,
            status: if r.pass {
                super::Status::Pass
            } else {
                super::Status::Fail
            },
            counterexample: r
                .counterexample
                .map(|w| json!({ "w": w, "expected": r.expected, "got": r.got })),
            detail: None,
            wall_time_ms: ms,
        })
        .collect())
}

fn llt_expansion(tables: &[TraceTable], n: usize, d: &HeckeElement) -> Result<SymFunc> {
    let coeffs = Partition::all(n)
        .into_iter()
        .zip(tables)
        .map(|(l, t)| Ok((l, t.eval(d)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    SymFunc::new(n, Basis::M, coeffs)
}

pub(super) fn chromatic(n: usize) -> Result<Vec<Report>> {
    let ws: Vec<Permutation> = Permutation::all(n).filter(|w| w.avoids_312()).collect();
    let llt_tables = family_tables(Family::EpsLlt, n)?;
    let x_eq_y = run_check("chromatic_equals_y", n, || {
        for w in &ws {
            let x = chromatic_qsym(&graph_from_permutation(w)?, n)?;
            let y = y_q(&c_tilde(w)?)?;
            if x != y {
                return Ok(Outcome::Fail(
                    json!({ "w": w.to_string(), "x": x.to_json(), "y": y.to_json() }),
                ));
            }
        }
        Ok(Outcome::Pass(Some(format!(
            "{} permutations avoiding 312",
            ws.len()
        ))))
    })?;
    let llt = run_check("llt_equals_eps_llt", n, || {
        for w in &ws {
            let got = llt_poly(&graph_from_permutation(w)?, n)?;
            let expected = llt_expansion(&llt_tables, n, &c_tilde(w)?)?;
            if got != expected {
                return Ok(Outcome::Fail(json!({
                    "w": w.to_string(), "llt": got.to_json(), "traces": expected.to_json(),
                })));
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let pleth = run_check("plethystic_relation", n, || {
        for w in &ws {
            if !verify_plethystic_relation(w, n)? {
                return Ok(Outcome::Fail(json!({ "w": w.to_string() })));
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let vars = run_check("variable_count_independence", n, || {
        for w in &ws {
            let g = graph_from_permutation(w)?;
            if chromatic_qsym(&g, n)? != chromatic_qsym(&g, n + 1)?
                || llt_poly(&g, n)? != llt_poly(&g, n + 1)?
            {
                return Ok(Outcome::Fail(json!({ "w": w.to_string() })));
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    Ok(vec![x_eq_y, llt, pleth, vars])
}

/// A random element with small integer q-polynomial coefficients.
pub(crate) fn random_hecke_element(n: usize, rng: &mut StdRng) -> Result<HeckeElement> {
    let g = SymmetricGroup::get(n)?;
    let terms = rng.gen_range(1..=g.order().min(6));
    let mut d = HeckeElement::zero(n);
    for _ in 0..terms {
        let w = g.element(rng.gen_range(0..g.order()));
        let coeffs: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
        d = d.add(&HeckeElement::t(w).scale(&HalfLaurent::from_q_coeffs(&coeffs)))?;
    }
    Ok(d)
}

pub(super) fn expansion_lists(n: usize, count: usize) -> Result<Vec<Report>> {
    let report = run_check("expansion_lists_agree", n, || {
        let mut rng = rng_for(n, 4);
        for _ in 0..count {
            let d = random_hecke_element(n, &mut rng)?;
            let y = y_q(&d)?;
            if read_from_y(&y)? != read_from_omega_y(&y.omega()?)? {
                return Ok(Outcome::Fail(json!({ "element": d.to_string() })));
            }
        }
        Ok(Outcome::Pass(Some(format!("{count} random elements"))))
    })?;
    Ok(vec![report])
}

const TRACE_FAMILIES: [Family; 9] = [
    Family::Eps,
    Family::Eta,
    Family::Psi,
    Family::Chi,
    Family::Phi,
    Family::Gamma,
    Family::EpsLlt,
    Family::EtaLlt,
    Family::PsiLlt,
];

pub(super) fn trace_tables(n: usize) -> Result<Vec<Report>> {
    let g = SymmetricGroup::get(n)?;
    let all: Vec<TraceTable> = TRACE_FAMILIES
        .iter()
        .map(|&f| Ok(family_tables(f, n)?.to_vec()))
        .collect::<Result<Vec<_>>>()?
        .concat();
    let trace = run_check("trace_property", n, || {
        if n <= 4 {
            let t: Vec<HeckeElement> = g.elements().iter().map(HeckeElement::t).collect();
            for (i, a) in t.iter().enumerate() {
                for (j, b) in t.iter().enumerate() {
                    let (ab, ba) = (a.mul(b)?, b.mul(a)?);
                    for table in &all {
                        if table.eval(&ab)? != table.eval(&ba)? {
                            return Ok(Outcome::Fail(json!({
                                "table": table.name(),
                                "u": g.element(i).to_string(),
                                "w": g.element(j).to_string(),
                            })));
                        }
                    }
                }
            }
        } else {
            for table in &all {
                if let Some((w, s)) = table.trace_property_counterexample()? {
                    return Ok(Outcome::Fail(
                        json!({ "table": table.name(), "w": w.to_string(), "s": s }),
                    ));
                }
            }
        }
        Ok(Outcome::Pass(Some(format!("{} tables", all.len()))))
    })?;
    let classes = run_check("class_function_at_q1", n, || {
        for table in &all {
            if !table.is_class_function_at_q1()? {
                return Ok(Outcome::Fail(json!({ "table": table.name() })));
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let eps = family_tables(Family::Eps, n)?;
    let partitions = Partition::all(n);
    let determined = run_check("determined_by_class_reps", n, || {
        for table in &all {
            let b = eps_coordinates(table)?;
            let terms = partitions.iter().map(|l| b[l].clone()).zip(eps.iter());
            let rebuilt = TraceTable::linear_combination(n, table.name(), terms)?;
            if let Some(mut c) = first_mismatch(table, &rebuilt)? {
                c["table"] = json!(table.name());
                return Ok(Outcome::Fail(c));
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    let positivity = run_check("llt_positivity", n, || {
        let tables: Vec<TraceTable> = [Family::EpsLlt, Family::EtaLlt]
            .iter()
            .map(|&f| Ok(family_tables(f, n)?.to_vec()))
            .collect::<Result<Vec<_>>>()?
            .concat();
        for w in Permutation::all(n).filter(|w| w.avoids_312()) {
            let c = c_tilde(&w)?;
            for t in &tables {
                let value = t.eval(&c)?;
                let ok = value
                    .as_laurent()
                    .is_some_and(HalfLaurent::is_nonneg_integer_q_polynomial);
                if !ok {
                    return Ok(Outcome::Fail(json!({
                        "table": t.name(), "w": w.to_string(), "value": value.to_string(),
                    })));
                }
            }
        }
        Ok(Outcome::Pass(None))
    })?;
    Ok(vec![trace, classes, determined, positivity])
}
