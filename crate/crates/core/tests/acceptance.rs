//! One pass/fail line per acceptance criterion.

use intform_core::arith::{check_condizione, cross_validate, ArithmeticFunction, CondizioneVerdict};
use intform_core::commutative::{expand_hat_series, named_series, verify_comm_identity, CommIdentity, NamedSeries};
use intform_core::forms::{euler_count, form_lattice, lattice_at_degree, membership, BasisKind, BasisTable, FormKind, MonomialSpace};
use intform_core::lie::a22::{check_morphism22, jacobi_exhaust22, Morphism22};
use intform_core::lie::a4::{verify_a4_relations, verify_lemmatauuno, verify_lemmatauuno_literal, verify_techuno};
use intform_core::lie::embed::{check_embedding, EmbeddingMap};
use intform_core::pbw::a4_algebra;
use intform_core::pbw::identities::{run_identity, summarize, UeaIdentity};
use intform_core::pbw::integral::certificate_suite;
use intform_core::rational::{is_integer, qf};
use intform_core::{GradedPolynomial, SequenceSpec};
use std::time::Instant;

/// Partitions of `n` by the coin-change recurrence over allowed part sizes.
fn count_partitions(n: usize, allowed: impl Fn(usize) -> bool) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in (1..=n).filter(|&p| allowed(p)) {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Partitions of `n` into distinct parts, by the 0/1 knapsack recurrence.
fn count_distinct(n: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in (part..=n).rev() {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

fn report(results: &mut Vec<bool>, index: usize, ok: bool, what: &str, detail: String) {
    println!("criterion {index:>2}: {} {what} ({detail})", if ok { "PASS" } else { "FAIL" });
    results.push(ok);
}

fn main() {
    let mut results = Vec::new();

    let start = Instant::now();
    let mut ok = [CommIdentity::HatBar, CommIdentity::CheckSquare, CommIdentity::BarFromCheck, CommIdentity::TildeFactorization]
        .into_iter()
        .all(|id| verify_comm_identity(id, 12).is_equal());
    ok &= verify_comm_identity(CommIdentity::CappuccioBarra, 12).is_equal();
    let secs = start.elapsed().as_secs_f64();
    report(&mut results, 1, ok && secs < 10.0, "commutative identities to degree 12", format!("{secs:.2}s"));

    let mut ok = true;
    for d in 1..=12u32 {
        let p = count_partitions(d as usize, |_| true);
        for kind in [BasisKind::BLambda, BasisKind::BLambdaPrime, BasisKind::BQpol] {
            let t = BasisTable::new(kind, d);
            ok &= t.len() == p && t.rank() == p;
        }
    }
    report(&mut results, 2, ok, "basis cardinalities and ranks equal p(d)", "d <= 12".into());

    let ok = (0..=20usize).all(|d| {
        let distinct = count_distinct(d);
        let odd = count_partitions(d, |p| p % 2 == 1);
        distinct == odd && euler_count(d as u32) == (distinct, odd)
    });
    report(&mut results, 3, ok, "distinct parts and odd parts counts agree", "d <= 20".into());

    let h1 = GradedPolynomial::h(1);
    let half = qf(1, 2);
    let mix2 = form_lattice(FormKind::Mix, 2);
    let expected = lattice_at_degree(&[h1.pow(2).scale(&half), GradedPolynomial::h(2).scale(&half)], 2);
    let coords = mix2.coordinates(&MonomialSpace::new(2).vector(&h1.pow(2))).expect("h1^2 lies in the span");
    let even = coords.iter().all(|c| is_integer(&(c * &half)));
    report(
        &mut results,
        4,
        mix2 == expected && even,
        "degree-2 mixed lattice and parity of h1^2",
        format!("coordinates ({})", coords.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
    );

    let mut ok = true;
    for d in 1..=8 {
        let (sym, mix, check) = (form_lattice(FormKind::Sym, d), form_lattice(FormKind::Mix, d), form_lattice(FormKind::CheckForm, d));
        ok &= sym.is_sublattice_of(&mix) && mix.is_sublattice_of(&check);
        if d >= 2 {
            ok &= sym != mix && mix != check;
        }
    }
    let bar2 = named_series(NamedSeries::Bar, 2).coeff(2).clone();
    let half_h1 = h1.scale(&half);
    ok &= membership(&bar2, FormKind::Mix).is_in() && !membership(&bar2, FormKind::Sym).is_in();
    ok &= membership(&half_h1, FormKind::CheckForm).is_in() && !membership(&half_h1, FormKind::Mix).is_in();
    report(&mut results, 5, ok, "strict inclusion chain sym < mix < check", "d <= 8, witnesses hbar2 and h1/2".into());

    let mut ok = true;
    let mut rows = 0;
    for seq in SequenceSpec::shipped() {
        let r = cross_validate(&seq, 10).expect("shipped sequences are total");
        rows += r.rows.len();
        ok &= r.disagreements().is_empty();
    }
    let c = expand_hat_series(&SequenceSpec::Cpow2, 10).unwrap();
    ok &= (1..=10).all(|k| membership(c.coeff(k), FormKind::Mix).is_in());
    let h2 = expand_hat_series(&SequenceSpec::HalfOne2, 2).unwrap();
    ok &= !membership(h2.coeff(2), FormKind::Sym).is_in();
    let l: ArithmeticFunction = SequenceSpec::HalfOne2.into();
    ok &= check_condizione(&l, 10).unwrap() == CondizioneVerdict::Fail { m: 1, p: 2, s: 1 };
    report(&mut results, 6, ok, "criteria agree with coordinate membership", format!("{rows} rows, k <= 10"));

    let start = Instant::now();
    let mut ok = jacobi_exhaust22(4).passed();
    for m in [Morphism22::Sigma, Morphism22::Omega, Morphism22::T] {
        ok &= check_morphism22(m, 4).passed();
    }
    let secs = start.elapsed().as_secs_f64();
    report(&mut results, 7, ok && secs < 60.0, "A2(2) Jacobi and morphisms on |r| <= 4", format!("{secs:.2}s"));

    let alg = a4_algebra();
    let relations = verify_a4_relations(3).passed();
    let techuno = verify_techuno(3).passed();
    let tau = verify_lemmatauuno(3).passed();
    let tau_printed = verify_lemmatauuno_literal(3).passed();
    let psi = check_embedding(EmbeddingMap::PsiBar, alg, 3).passed();
    report(
        &mut results,
        8,
        relations && techuno && tau && psi,
        "A4(2) realization gate",
        format!("relations {relations}, technical {techuno}, tau {tau} (printed 1/4 coefficient: {tau_printed}), psi_bar {psi}"),
    );

    let start = Instant::now();
    let mut ok = true;
    for id in UeaIdentity::all() {
        let n = if id == UeaIdentity::Commuplus1 { 4 } else { 3 };
        let mut line = format!("  {id:<32}");
        for depth in [n, id.default_truncation()].into_iter().collect::<std::collections::BTreeSet<_>>() {
            let s = summarize(id, &run_identity(id, Some(depth)).expect("grid parameters are supported"));
            ok &= s.verified;
            for (reading, eq, total, _) in &s.readings {
                line.push_str(&format!(" N={depth} {reading} {eq}/{total};"));
            }
        }
        println!("{line}");
    }
    let secs = start.elapsed().as_secs_f64();
    report(&mut results, 9, ok && secs < 300.0, "enveloping algebra identity catalog", format!("{secs:.2}s"));

    let certs = certificate_suite();
    let ok = certs.len() == 12 && certs.iter().all(|c| c.passed());
    report(&mut results, 10, ok, "integer certificates for non-simple divided powers", format!("{} certificates", certs.len()));

    let failing: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    println!("acceptance: {} of {} criteria pass", results.len() - failing.len(), results.len());
    if !failing.is_empty() {
        eprintln!("failing criteria: {failing:?}");
        std::process::exit(1);
    }
}
