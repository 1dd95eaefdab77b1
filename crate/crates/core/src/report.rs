//! Verification suites and their machine-readable reports.

use crate::arith::{check_condizione, cross_validate, ArithmeticFunction, CondizioneVerdict};
use crate::commutative::{named_series, verify_comm_identity, verify_comm_identity_literal, CommIdentity, NamedSeries};
use crate::error::{Error, Result};
use crate::forms::{form_lattice, lattice_at_degree, membership, BasisKind, BasisTable, FormKind};
use crate::lie::a22::{check_morphism22, jacobi_exhaust22, Morphism22};
use crate::lie::a4::{verify_a4_relations, verify_lemmatauuno, verify_lemmatauuno_literal, verify_techuno};
use crate::lie::embed::{check_embedding, EmbeddingMap};
use crate::lie::LieVerdict;
use crate::partition::{euler_count, partition_count};
use crate::pbw::a4_algebra;
use crate::pbw::identities::{run_identity, summarize, UeaIdentity};
use crate::pbw::integral::certificate_suite;
use crate::poly::GradedPolynomial;
use crate::rational::{is_integer, qf};
use crate::sequence::SequenceSpec;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Commutative,
    Bases,
    Criteria,
    Lie22,
    Lie4,
    Uea22,
    Uea4,
}

impl Suite {
    pub const ALL: [Suite; 7] = [Suite::Commutative, Suite::Bases, Suite::Criteria, Suite::Lie22, Suite::Lie4, Suite::Uea22, Suite::Uea4];

    /// Parses a comma-separated list; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for name in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
            if name.eq_ignore_ascii_case("all") {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Commutative => "commutative",
            Suite::Bases => "bases",
            Suite::Criteria => "criteria",
            Suite::Lie22 => "lie22",
            Suite::Lie4 => "lie4",
            Suite::Uea22 => "uea22",
            Suite::Uea4 => "uea4",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown suite `{s}`") })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub max_degree: u32,
    pub uea_truncation: u32,
    pub lie_window: i64,
    pub suites: Vec<Suite>,
    pub output: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { max_degree: 12, uea_truncation: 4, lie_window: 3, suites: Suite::ALL.to_vec(), output: None }
    }
}

impl RunConfig {
    /// Reads flat `key=value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = RunConfig::default();
        let mut offset = 0;
        for line in text.lines() {
            let content = line.split('#').next().unwrap_or("").trim();
            let err = |msg: String| Error::Parse { pos: offset, msg };
            if !content.is_empty() {
                let (key, value) = content.split_once('=').ok_or_else(|| err(format!("expected key=value, got `{content}`")))?;
                let (key, value) = (key.trim(), value.trim());
                let positive = |v: &str| -> Result<u32> {
                    match v.parse::<u32>() {
                        Ok(n) if n > 0 => Ok(n),
                        _ => Err(err(format!("`{key}` needs a positive integer"))),
                    }
                };
                match key {
                    "max_degree" => cfg.max_degree = positive(value)?,
                    "uea_truncation" => cfg.uea_truncation = positive(value)?,
                    "lie_window" => cfg.lie_window = i64::from(positive(value)?),
                    "suites" => cfg.suites = Suite::parse_list(value)?,
                    "output" => cfg.output = Some(value.to_string()),
                    _ => return Err(err(format!("unknown key `{key}`"))),
                }
            }
            offset += line.len() + 1;
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("PASS"),
            Verdict::Fail => f.write_str("FAIL"),
            Verdict::Skipped(why) => write!(f, "SKIPPED({why})"),
        }
    }
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub params: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub ms: u128,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn from_records(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| (&a.check_id, &a.params).cmp(&(&b.check_id, &b.params)));
        let mut summary = Summary::default();
        for r in &records {
            match r.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::Skipped(_) => summary.skipped += 1,
            }
        }
        Report { records, summary }
    }

    pub fn ok(&self) -> bool {
        self.summary.fail == 0
    }
}

fn timed(check_id: &str, params: String, f: impl FnOnce() -> (Verdict, Option<String>)) -> CheckRecord {
    let start = Instant::now();
    let (verdict, witness) = f();
    CheckRecord { check_id: check_id.to_string(), params, verdict, witness, ms: start.elapsed().as_millis() }
}

fn lie_record(check_id: &str, params: String, f: impl FnOnce() -> LieVerdict) -> CheckRecord {
    timed(check_id, params, || match f() {
        LieVerdict::Pass { checked } => (Verdict::Pass, Some(format!("{checked} checks"))),
        LieVerdict::Fail(e) => (Verdict::Fail, Some(e.to_string())),
    })
}

fn commutative(cfg: &RunConfig) -> Vec<CheckRecord> {
    let n = cfg.max_degree as usize;
    [
        CommIdentity::HatBar,
        CommIdentity::CheckSquare,
        CommIdentity::BarFromCheck,
        CommIdentity::TildeFactorization,
        CommIdentity::CappuccioBarra,
    ]
    .into_iter()
    .map(|id| {
        timed(&format!("commutative.{id}"), format!("n={n}"), || {
            let v = verify_comm_identity(id, n);
            let printed = verify_comm_identity_literal(id, n);
            let witness = match (&v, &printed) {
                (crate::commutative::SeriesVerdict::Mismatch { .. }, _) => Some(format!("{v:?}")),
                (_, crate::commutative::SeriesVerdict::Mismatch { k, .. }) => Some(format!("printed u^2 reading differs at degree {k}")),
                _ => None,
            };
            (v.is_equal().into(), witness)
        })
    })
    .collect()
}

/// The degree-2 lattice of the mixed form against `ℤ⟨½h₁², ½h₂⟩`, and the parity of `h₁²`.
pub fn notpol_check() -> (bool, bool) {
    let h1 = GradedPolynomial::h(1);
    let half = qf(1, 2);
    let expected = lattice_at_degree(&[h1.pow(2).scale(&half), GradedPolynomial::h(2).scale(&half)], 2);
    let mix = form_lattice(FormKind::Mix, 2);
    let lattice_equal = mix == expected;
    let space = crate::forms::MonomialSpace::new(2);
    let even = mix.coordinates(&space.vector(&h1.pow(2))).is_some_and(|c| c.iter().all(|x| is_integer(&(x * &half))));
    (lattice_equal, even)
}

fn bases(cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for d in 1..=cfg.max_degree {
        out.push(timed("bases.cardinality", format!("d={d:02}"), || {
            let p = partition_count(d);
            let bad: Vec<String> = [BasisKind::BLambda, BasisKind::BLambdaPrime, BasisKind::BQpol]
                .into_iter()
                .filter_map(|k| {
                    let t = BasisTable::new(k, d);
                    (t.len() != p || t.rank() != p).then(|| format!("{k}: size {} rank {}", t.len(), t.rank()))
                })
                .collect();
            (bad.is_empty().into(), (!bad.is_empty()).then(|| bad.join("; ")).or(Some(format!("p={p}"))))
        }));
    }
    out.push(timed("bases.euler", "d<=20".into(), || {
        let bad = (0..=20).find(|&d| {
            let (a, b) = euler_count(d);
            a != b
        });
        (bad.is_none().into(), bad.map(|d| format!("d={d}")))
    }));
    out.push(timed("bases.notpol", "d=2".into(), || {
        let (eq, even) = notpol_check();
        ((eq && even).into(), Some(format!("lattice equal: {eq}, h1^2 coordinates even: {even}")))
    }));
    for d in 1..=cfg.max_degree.min(8) {
        out.push(timed("bases.chain", format!("d={d}"), || {
            let sym = form_lattice(FormKind::Sym, d);
            let mix = form_lattice(FormKind::Mix, d);
            let check = form_lattice(FormKind::CheckForm, d);
            let ok = sym.is_sublattice_of(&mix) && mix.is_sublattice_of(&check);
            let strict = format!("sym<mix strict: {}, mix<check strict: {}", sym != mix, mix != check);
            (ok.into(), Some(strict))
        }));
    }
    out.push(timed("bases.chain_witnesses", String::new(), || {
        let bar2 = named_series(NamedSeries::Bar, 2).coeff(2).clone();
        let half_h1 = GradedPolynomial::h(1).scale(&qf(1, 2));
        let ok = !membership(&bar2, FormKind::Sym).is_in()
            && membership(&bar2, FormKind::Mix).is_in()
            && !membership(&half_h1, FormKind::Mix).is_in()
            && membership(&half_h1, FormKind::CheckForm).is_in();
        (ok.into(), Some("hbar(2) in mix not sym; h(1)/2 in check not mix".into()))
    }));
    out
}

fn criteria(cfg: &RunConfig) -> Vec<CheckRecord> {
    let n = u64::from(cfg.max_degree.min(10));
    let mut out: Vec<CheckRecord> = SequenceSpec::shipped()
        .into_iter()
        .map(|seq| {
            timed("criteria.agreement", format!("seq={seq} k<={n}"), || match cross_validate(&seq, n) {
                Ok(report) => {
                    let bad = report.disagreements();
                    let witness = bad.first().map(|r| format!("{} at k={}", r.check, r.k));
                    (bad.is_empty().into(), witness)
                }
                Err(e) => (Verdict::Fail, Some(e.to_string())),
            })
        })
        .collect();
    out.push(timed("criteria.cpow2_in_mix", format!("k<={n}"), || {
        let s = crate::commutative::expand_hat_series(&SequenceSpec::Cpow2, n as usize).expect("total sequence");
        let bad = (1..=n as usize).find(|&k| !membership(s.coeff(k), FormKind::Mix).is_in());
        (bad.is_none().into(), bad.map(|k| format!("k={k}")))
    }));
    out.push(timed("criteria.half_one2_witness", String::new(), || {
        let s = crate::commutative::expand_hat_series(&SequenceSpec::HalfOne2, 2).expect("total sequence");
        let out_of_sym = !membership(s.coeff(2), FormKind::Sym).is_in();
        let l: ArithmeticFunction = SequenceSpec::HalfOne2.into();
        let v = check_condizione(&l, 10);
        let ok = out_of_sym && matches!(v, Ok(CondizioneVerdict::Fail { m: 1, p: 2, s: 1 }));
        (ok.into(), Some(format!("{v:?}")))
    }));
    out
}

fn lie22(cfg: &RunConfig) -> Vec<CheckRecord> {
    let w = cfg.lie_window.max(1);
    let mut out = vec![lie_record("lie22.jacobi", format!("w={w}"), || jacobi_exhaust22(w))];
    for m in [Morphism22::Sigma, Morphism22::Omega, Morphism22::T] {
        out.push(lie_record(&format!("lie22.morphism.{m}"), format!("w={w}"), || check_morphism22(m, w)));
    }
    out
}

fn lie4(cfg: &RunConfig) -> Vec<CheckRecord> {
    let w = cfg.lie_window.max(1);
    let alg = a4_algebra();
    let mut out = vec![
        lie_record("lie4.relations", format!("w={w}"), || verify_a4_relations(w)),
        lie_record("lie4.techuno", format!("w={w}"), || verify_techuno(w)),
        lie_record("lie4.lemmatauuno", format!("w={w}"), || verify_lemmatauuno(w)),
        lie_record("lie4.psi_bar", format!("w={w}"), || check_embedding(EmbeddingMap::PsiBar, alg, w)),
        lie_record("lie4.psi_tilde", format!("w={w}"), || check_embedding(EmbeddingMap::PsiTilde, alg, w)),
    ];
    let printed = verify_lemmatauuno_literal(w);
    if let Some(r) = out.iter_mut().find(|r| r.check_id == "lie4.lemmatauuno") {
        let note = match printed {
            LieVerdict::Pass { .. } => "printed coefficient 1/4 also holds".to_string(),
            LieVerdict::Fail(e) => format!("printed coefficient 1/4 fails: {e}"),
        };
        r.witness = Some(note);
    }
    out
}

fn uea(rank_two: bool, cfg: &RunConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for id in UeaIdentity::all().into_iter().filter(|id| id.is_rank_two() == rank_two) {
        let n = id.default_truncation().max(cfg.uea_truncation.min(5));
        out.push(timed(&format!("uea.{id}"), format!("n={n}"), || match run_identity(id, Some(n)) {
            Ok(checks) => {
                let s = summarize(id, &checks);
                let witness = s
                    .readings
                    .iter()
                    .map(|(rd, eq, total, first)| {
                        let tail = first.as_deref().map(|f| format!(" first: {f}")).unwrap_or_default();
                        format!("{rd} {eq}/{total}{tail}")
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                (s.verified.into(), Some(witness))
            }
            Err(e) => (Verdict::Fail, Some(e.to_string())),
        }));
    }
    if rank_two {
        for c in certificate_suite() {
            out.push(timed("uea.certificate", format!("{} r={} k={}", c.root, c.r, c.k), || {
                (c.passed().into(), Some(format!("{} = {} words", c.target, c.terms.len())))
            }));
        }
    }
    out
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Vec<CheckRecord> {
    match suite {
        Suite::Commutative => commutative(cfg),
        Suite::Bases => bases(cfg),
        Suite::Criteria => criteria(cfg),
        Suite::Lie22 => lie22(cfg),
        Suite::Lie4 => lie4(cfg),
        Suite::Uea22 => uea(false, cfg),
        Suite::Uea4 => uea(true, cfg),
    }
}

/// Runs every configured suite concurrently and assembles a sorted report.
pub fn run(cfg: &RunConfig) -> Report {
    use rayon::prelude::*;
    let records: Vec<CheckRecord> = cfg.suites.par_iter().flat_map(|&s| run_suite(s, cfg)).collect();
    Report::from_records(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let cfg = RunConfig::parse("max_degree = 6\n# comment\nsuites=lie22, bases\n").unwrap();
        assert_eq!(cfg.max_degree, 6);
        assert_eq!(cfg.suites, vec![Suite::Bases, Suite::Lie22]);
        assert!(RunConfig::parse("suites=nope").is_err());
        assert!(RunConfig::parse("max_degree=0").is_err());
        assert!(RunConfig::parse("colour=blue").is_err());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = RunConfig { max_degree: 4, lie_window: 1, suites: vec![Suite::Bases, Suite::Lie22], ..RunConfig::default() };
        let report = run(&cfg);
        assert!(report.ok(), "{:?}", report.records.iter().filter(|r| r.verdict == Verdict::Fail).collect::<Vec<_>>());
        assert!(report.summary.pass > 5);
    }

    #[test]
    fn notpol() {
        assert_eq!(notpol_check(), (true, true));
    }
}
