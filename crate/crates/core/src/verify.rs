//! Named verification suites and their reports.
//!
//! Every suite returns a [`Report`] whose items carry an `ok`/`fail`
//! verdict, an optional residual and optional dimension data. Reports are
//! deterministic for a fixed [`RunConfig`]; `elapsed` is only filled in
//! when timing is requested.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, PolyMatrix, Polynomial, ScalarMatrix};
use crate::presentation::{
    completeness_certificate, independence_certificate, module_decomposition_check, module_generators_check,
    psl2_generator_map, psl2_relations, so4_generator_map, so4_relations, so4_relations_with, so4_t_list,
    verify_ft_generators, verify_relations, verify_t_identities, Family6,
};
use crate::qinv::{
    calibrate_n2, copy_assignment, q4_matrix_oracle, q4_tau_with, q_form, q_form_with, q_torus, q_torus_closed_form,
    sample_reflection, weyl_symmetry_holds, QNormalization,
};
use crate::rng::{substream, DEFAULT_SEED};
use crate::sl2trace::{evaluate_word, exterior_trace, power_traces, sample_sl2, TauVars, TraceReducer};
use crate::spin4::{c1, c2, phi, sigma_conjugate, swap_ab, symbolic_pair, symbolic_phi};
use crate::words::FreeWord;
use crate::zerosum::{
    davenport, davenport_lower_bound, davenport_upper_bound, is_minimal_zero_sum, minimal_zero_sum_multisets,
    psl2_generators, synthesize_generators, Budget,
};

/// Parameters shared by every suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    /// Degree bound of the SO(4) completeness certificate.
    pub degree: i64,
    pub budget: u64,
    /// Random SL(2) pairs or matrix tuples per randomized check.
    pub samples: usize,
    /// Random words for the trace oracle.
    pub words: usize,
    pub max_word_len: usize,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            seed: DEFAULT_SEED,
            degree: 8,
            budget: Budget::from_env().0,
            samples: 100,
            words: 1000,
            max_word_len: 20,
            timing: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Ok,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Ok
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ok => "ok",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Item {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<BTreeMap<String, usize>>,
}

impl Item {
    pub fn new(name: impl Into<String>, ok: bool) -> Item {
        Item { name: name.into(), verdict: Verdict::from_bool(ok), residual: None, dims: None }
    }

    pub fn with_residual(mut self, residual: impl fmt::Display) -> Item {
        self.residual = Some(residual.to_string());
        self
    }

    /// Attaches the residual only when the item failed.
    pub fn residual_if_failed(self, residual: impl fmt::Display) -> Item {
        if self.ok() {
            self
        } else {
            self.with_residual(residual)
        }
    }

    pub fn with_dims<'a>(mut self, dims: impl IntoIterator<Item = (&'a str, usize)>) -> Item {
        self.dims = Some(dims.into_iter().map(|(k, v)| (k.to_owned(), v)).collect());
        self
    }

    pub fn ok(&self) -> bool {
        self.verdict == Verdict::Ok
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub items: Vec<Item>,
    /// Wall-clock seconds; `null` unless timing was requested.
    pub elapsed: Option<f64>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.items.iter().all(Item::ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| !i.ok())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            out.push_str(&format!("[{}] {}", item.verdict, item.name));
            if let Some(dims) = &item.dims {
                let parts: Vec<String> = dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
                out.push_str(&format!(" ({})", parts.join(", ")));
            }
            if let Some(r) = &item.residual {
                out.push_str(&format!("\n    residual: {r}"));
            }
            out.push('\n');
        }
        let passed = self.items.iter().filter(|i| i.ok()).count();
        out.push_str(&format!("{}: {passed}/{} ok", self.suite, self.items.len()));
        if let Some(t) = self.elapsed {
            out.push_str(&format!(" in {t:.3}s"));
        }
        out.push('\n');
        out
    }
}

/// One suite per acceptance criterion, in criterion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    SpinFixtures,
    Sigma,
    Orthogonality,
    TraceOracle,
    QCalibration,
    SignLaw,
    Torus,
    ZeroSum,
    Synthesis,
    Relations,
    Completeness,
    TIdentities,
    FtGenerators,
    Independence,
    Newton,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::SpinFixtures,
        Suite::Sigma,
        Suite::Orthogonality,
        Suite::TraceOracle,
        Suite::QCalibration,
        Suite::SignLaw,
        Suite::Torus,
        Suite::ZeroSum,
        Suite::Synthesis,
        Suite::Relations,
        Suite::Completeness,
        Suite::TIdentities,
        Suite::FtGenerators,
        Suite::Independence,
        Suite::Newton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SpinFixtures => "spin-fixtures",
            Suite::Sigma => "sigma",
            Suite::Orthogonality => "orthogonality",
            Suite::TraceOracle => "trace-oracle",
            Suite::QCalibration => "q-calibration",
            Suite::SignLaw => "sign-law",
            Suite::Torus => "torus",
            Suite::ZeroSum => "zero-sum",
            Suite::Synthesis => "synthesis",
            Suite::Relations => "relations",
            Suite::Completeness => "completeness",
            Suite::TIdentities => "t-identities",
            Suite::FtGenerators => "ft-generators",
            Suite::Independence => "independence",
            Suite::Newton => "newton",
        }
    }

    fn run_items(self, cfg: &RunConfig) -> Result<Vec<Item>> {
        match self {
            Suite::SpinFixtures => spin_fixtures(),
            Suite::Sigma => sigma_equivariance(cfg),
            Suite::Orthogonality => orthogonality(),
            Suite::TraceOracle => trace_oracle(cfg),
            Suite::QCalibration => q_calibration(cfg),
            Suite::SignLaw => sign_law(cfg),
            Suite::Torus => torus(),
            Suite::ZeroSum => zero_sum(cfg),
            Suite::Synthesis => synthesis(cfg),
            Suite::Relations => relations(),
            Suite::Completeness => completeness(cfg),
            Suite::TIdentities => t_identities(),
            Suite::FtGenerators => ft_generators(),
            Suite::Independence => Ok(independence()),
            Suite::Newton => newton(cfg),
        }
    }

    pub fn run(self, cfg: &RunConfig) -> Result<Report> {
        let start = Instant::now();
        let items = self.run_items(cfg)?;
        Ok(Report { suite: self.name().to_owned(), items, elapsed: elapsed(cfg, start) })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name() == s).ok_or_else(|| Error::Input(format!("unknown suite `{s}`")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn elapsed(cfg: &RunConfig, start: Instant) -> Option<f64> {
    cfg.timing.then(|| start.elapsed().as_secs_f64())
}

/// Runs every suite; item names are prefixed with their suite.
pub fn run_all(cfg: &RunConfig) -> Result<Report> {
    let start = Instant::now();
    let mut items = Vec::new();
    for suite in Suite::ALL {
        for mut item in suite.run_items(cfg)? {
            item.name = format!("{suite}: {}", item.name);
            items.push(item);
        }
    }
    Ok(Report { suite: "all".to_owned(), items, elapsed: elapsed(cfg, start) })
}

/// Runs a suite by name, `all` included.
pub fn run_named(name: &str, cfg: &RunConfig) -> Result<Report> {
    if name == "all" {
        run_all(cfg)
    } else {
        name.parse::<Suite>()?.run(cfg)
    }
}

fn gi(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_parts((re, 1), (im, 1))
}

/// `2·φ` of the four pairs drawn from `C₁, C₂`, entries as `(re, im)`.
type SpinCase = (&'static str, ScalarMatrix, ScalarMatrix, [[(i64, i64); 4]; 4]);

fn spin_reference() -> Vec<SpinCase> {
    vec![
        (
            "phi(C1, C1)",
            c1(),
            c1(),
            [
                [(3, 0), (0, -1), (0, 2), (0, 0)],
                [(0, -1), (1, 0), (2, 0), (0, 0)],
                [(0, -2), (-2, 0), (2, 0), (0, 0)],
                [(0, 0), (0, 0), (0, 0), (2, 0)],
            ],
        ),
        (
            "phi(C1, C2)",
            c1(),
            c2(),
            [
                [(-1, 0), (0, 1), (0, 0), (-2, 0)],
                [(0, 1), (1, 0), (-2, 0), (0, 0)],
                [(0, 0), (2, 0), (1, 0), (0, 1)],
                [(2, 0), (0, 0), (0, 1), (-1, 0)],
            ],
        ),
        (
            "phi(C2, C1)",
            c2(),
            c1(),
            [
                [(-1, 0), (0, 1), (0, 0), (2, 0)],
                [(0, 1), (1, 0), (-2, 0), (0, 0)],
                [(0, 0), (2, 0), (1, 0), (0, -1)],
                [(-2, 0), (0, 0), (0, -1), (-1, 0)],
            ],
        ),
        (
            "phi(C2, C2)",
            c2(),
            c2(),
            [
                [(2, 0), (0, 0), (0, 0), (0, 0)],
                [(0, 0), (-2, 0), (0, 0), (0, 0)],
                [(0, 0), (0, 0), (-2, 0), (0, 0)],
                [(0, 0), (0, 0), (0, 0), (2, 0)],
            ],
        ),
    ]
}

fn spin_fixtures() -> Result<Vec<Item>> {
    let half = GaussianRational::from_ratio(1, 2);
    spin_reference()
        .into_iter()
        .map(|(name, a, b, twice)| {
            let expected =
                Matrix::from_rows(twice.iter().map(|r| r.iter().map(|&(x, y)| gi(x, y)).collect()).collect())?
                    .scale(&half);
            let diff = phi(&a, &b)?.sub(&expected)?;
            Ok(Item::new(name, diff.is_zero()).residual_if_failed(format!("{diff:?}")))
        })
        .collect()
}

fn first_nonzero(m: &PolyMatrix) -> String {
    m.entries().iter().find(|p| !p.is_zero()).map_or_else(|| "0".into(), |p| p.to_string())
}

fn sigma_equivariance(cfg: &RunConfig) -> Result<Vec<Item>> {
    let x = symbolic_phi();
    let diff = sigma_conjugate(&x)?.sub(&x.map(swap_ab))?;
    let symbolic =
        Item::new("sigma(phi(a, b)) = phi(b, a) symbolically", diff.is_zero()).residual_if_failed(first_nonzero(&diff));

    let mut rng = substream(cfg.seed, "sigma");
    let mut bad = 0;
    for _ in 0..cfg.samples {
        let (a, b) = (sample_sl2(&mut rng, 4), sample_sl2(&mut rng, 4));
        if sigma_conjugate(&phi(&a, &b)?)? != phi(&b, &a)? {
            bad += 1;
        }
    }
    let sampled = Item::new(format!("sigma(phi(A, B)) = phi(B, A) on {} pairs", cfg.samples), bad == 0)
        .residual_if_failed(format!("{bad} mismatches"));
    Ok(vec![symbolic, sampled])
}

fn orthogonality() -> Result<Vec<Item>> {
    let (a, b) = symbolic_pair();
    let x = symbolic_phi();
    let scale = &a.determinant()? * &b.determinant()?;
    let gram = x.mul(&x.transpose())?.sub(&Matrix::identity(4).scale_by(&scale))?;
    let trace = &x.trace()? - &(&a.trace()? * &b.trace()?);
    Ok(vec![
        Item::new("phi phi^T = det(A) det(B) I", gram.is_zero()).residual_if_failed(first_nonzero(&gram)),
        Item::new("tr phi(A, B) = tr A tr B", trace.is_zero()).residual_if_failed(&trace),
    ])
}

fn trace_oracle(cfg: &RunConfig) -> Result<Vec<Item>> {
    let mut rng = substream(cfg.seed, "trace-oracle");
    let mut reducer = TraceReducer::new();
    let mut mismatches = 0usize;
    let mut first = None;
    for _ in 0..cfg.words {
        let len = rng.gen_range(0..=cfg.max_word_len);
        let w = FreeWord::random(&mut rng, 2, len);
        let (a, b) = (sample_sl2(&mut rng, 3), sample_sl2(&mut rng, 3));
        let symbolic = reducer.reduce(&w)?.evaluate(&TauVars::plain().assignment(&a, &b))?;
        let direct = evaluate_word(&w, &[a, b])?.trace()?;
        if symbolic != direct {
            mismatches += 1;
            first.get_or_insert_with(|| format!("{w}: {symbolic} vs {direct}"));
        }
    }
    let item = Item::new(format!("{} words of length <= {}", cfg.words, cfg.max_word_len), mismatches == 0)
        .with_dims([("mismatches", mismatches), ("memo", reducer.memo_len())]);
    Ok(vec![match first {
        Some(r) => item.with_residual(r),
        None => item,
    }])
}

fn calibration_words() -> Vec<FreeWord> {
    ["g1", "g2", "g1 g2", "g1 g2^-1"].iter().map(|s| FreeWord::parse(s, 2).expect("literal word")).collect()
}

fn q_calibration(cfg: &RunConfig) -> Result<Vec<Item>> {
    let cal = calibrate_n2();
    let mut items = vec![Item::new(
        format!("calibration: Pf = {}, target = {}, kappa = {}", cal.pfaffian, cal.target, cal.kappa),
        cal.kappa == QNormalization::standard(2).kappa,
    )];

    // Unnormalized Q must be proportional to the trace formula with one
    // constant across every sample.
    let words = calibration_words();
    let unit = QNormalization { n: 2, kappa: GaussianRational::one() };
    let mut reducer = TraceReducer::new();
    let mut rng = substream(cfg.seed, "q-calibration");
    let mut kappa: Option<GaussianRational> = None;
    let mut consistent = true;
    for _ in 0..cfg.samples {
        let rho1 = [sample_sl2(&mut rng, 3), sample_sl2(&mut rng, 3)];
        let rho2 = [sample_sl2(&mut rng, 3), sample_sl2(&mut rng, 3)];
        let values = copy_assignment(&rho1, &rho2);
        let image =
            |w: &FreeWord| -> Result<ScalarMatrix> { phi(&evaluate_word(w, &rho1)?, &evaluate_word(w, &rho2)?) };
        for w1 in &words {
            for w2 in &words {
                let raw = q_form_with(&[image(w1)?, image(w2)?], &unit)?;
                let formula = q4_tau_with(&mut reducer, w1, w2)?.evaluate(&values)?;
                if raw.is_zero() {
                    consistent &= formula.is_zero();
                    continue;
                }
                let k = &formula / &raw;
                match &kappa {
                    Some(prev) => consistent &= *prev == k,
                    None => kappa = Some(k),
                }
            }
        }
    }
    let found = kappa.as_ref().map_or_else(|| "none".into(), |k| k.to_string());
    items.push(Item::new(
        format!("unique kappa = {found} on {} pairs x 16 word pairs", cfg.samples),
        consistent && kappa.as_ref() == Some(&cal.kappa),
    ));

    // With kappa fixed, the normalized form agrees with the oracle.
    let mut rng = substream(cfg.seed, "q-oracle");
    let mut bad = 0;
    for _ in 0..cfg.samples {
        let rho1 = [sample_sl2(&mut rng, 3), sample_sl2(&mut rng, 3)];
        let rho2 = [sample_sl2(&mut rng, 3), sample_sl2(&mut rng, 3)];
        let w1 = &words[rng.gen_range(0..words.len())];
        let w2 = &words[rng.gen_range(0..words.len())];
        let lhs = q4_tau_with(&mut reducer, w1, w2)?.evaluate(&copy_assignment(&rho1, &rho2))?;
        if lhs != q4_matrix_oracle(w1, w2, &rho1, &rho2)? {
            bad += 1;
        }
    }
    items.push(
        Item::new(format!("Q4 trace formula = Pfaffian oracle on {} pairs", cfg.samples), bad == 0)
            .residual_if_failed(format!("{bad} mismatches")),
    );

    let eight = GaussianRational::from_int(8);
    for w in &words {
        let t = reducer.reduce(w)?;
        let diag = (&TauVars::copy(1).relabel(&t).pow(2) - &TauVars::copy(2).relabel(&t).pow(2)).scale(&eight);
        let residual = &q4_tau_with(&mut reducer, w, w)? - &diag;
        items.push(
            Item::new(format!("Q4({w}, {w}) = 8(tau_1^2 - tau_2^2)"), residual.is_zero()).residual_if_failed(&residual),
        );
    }
    Ok(items)
}

fn random_int_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ScalarMatrix {
    let data = (0..n * n).map(|_| GaussianRational::from_int(rng.gen_range(-4..=4))).collect();
    Matrix::new(n, n, data).expect("square")
}

fn sign_law(cfg: &RunConfig) -> Result<Vec<Item>> {
    let mut rng = substream(cfg.seed, "sign-law");
    let (mut flip_bad, mut reflect_bad, mut product_bad) = (0, 0, 0);
    for _ in 0..cfg.samples {
        let xs: Vec<ScalarMatrix> = (0..2).map(|_| random_int_matrix(&mut rng, 4)).collect();
        let ys: Vec<ScalarMatrix> = (0..2).map(|_| random_int_matrix(&mut rng, 4)).collect();
        let flip = |v: &[ScalarMatrix]| -> Result<Vec<ScalarMatrix>> { v.iter().map(sigma_conjugate).collect() };
        let (qx, qy) = (q_form(&xs)?, q_form(&ys)?);
        let (fx, fy) = (q_form(&flip(&xs)?)?, q_form(&flip(&ys)?)?);
        if fx != -&qx {
            flip_bad += 1;
        }
        if &fx * &fy != &qx * &qy {
            product_bad += 1;
        }
        let r = sample_reflection(&mut rng, 4);
        let rt = r.transpose();
        let conj: Vec<ScalarMatrix> = xs.iter().map(|x| r.mul(x)?.mul(&rt)).collect::<Result<_>>()?;
        if q_form(&conj)? != -&qx {
            reflect_bad += 1;
        }
    }
    let n = cfg.samples;
    Ok(vec![
        Item::new(format!("Q4 negates under diag(1,1,1,-1) on {n} inputs"), flip_bad == 0)
            .residual_if_failed(format!("{flip_bad} mismatches")),
        Item::new(format!("Q4 negates under random reflections on {n} inputs"), reflect_bad == 0)
            .residual_if_failed(format!("{reflect_bad} mismatches")),
        Item::new(format!("Q4 * Q4 is invariant on {n} inputs"), product_bad == 0)
            .residual_if_failed(format!("{product_bad} mismatches")),
    ])
}

fn torus() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for k in 0..=3 {
        let q = q_torus(2, k)?;
        let expect_zero = k == 0;
        items.push(
            Item::new(
                format!("Q4 on the torus, k = {k}: {}", if expect_zero { "zero" } else { "nonzero" }),
                q.is_zero() == expect_zero,
            )
            .with_residual(&q),
        );
        let diff = &q - &q_torus_closed_form(2, k);
        items.push(
            Item::new(format!("Q4 on the torus, k = {k}: closed form"), diff.is_zero()).residual_if_failed(&diff),
        );
        items.push(Item::new(format!("Q4 on the torus, k = {k}: Weyl symmetry"), weyl_symmetry_holds(&q, 2)?));
    }
    Ok(items)
}

fn zero_sum(cfg: &RunConfig) -> Result<Vec<Item>> {
    let budget = Budget(cfg.budget);
    let mut items = Vec::new();

    let v22: Vec<String> = minimal_zero_sum_multisets(2, 2, budget)?.iter().map(|u| u.to_string()).collect();
    let expected = ["{(0,0)}", "{(1,0),(1,0)}", "{(0,1),(0,1)}", "{(1,1),(1,1)}", "{(1,0),(0,1),(1,1)}"];
    items.push(Item::new("V(2,2) is the five listed multisets", v22 == expected).with_residual(v22.join(" ")));

    let mut cases: Vec<(u32, usize, usize)> = (1..=6).map(|m| (m, 2, 2 * m as usize - 1)).collect();
    for p in [2u32, 3] {
        for n in 1..=3 {
            cases.push((p, n, davenport_lower_bound(p, n)));
        }
    }
    for (m, n, expected) in cases {
        let d = davenport(m, n, budget)?;
        items
            .push(Item::new(format!("D({m}, {n}) = {expected}"), d == expected).residual_if_failed(format!("got {d}")));
        items.push(Item::new(
            format!("D({m}, {n}) <= upper bound {:.3}", davenport_upper_bound(m, n)),
            d as f64 <= davenport_upper_bound(m, n),
        ));
    }

    // Every enumerated multiset passes the submultiset checker, and the
    // longest one realizes the Davenport constant.
    for (m, n) in [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 1), (3, 1)] {
        let all = minimal_zero_sum_multisets(m, n, budget)?;
        let bad = all.iter().filter(|u| !is_minimal_zero_sum(u.elements())).count();
        let longest = all.iter().map(|u| u.len()).max().unwrap_or(0);
        items.push(
            Item::new(
                format!("V({m}, {n}) passes the brute-force checker"),
                bad == 0 && longest == davenport(m, n, budget)?,
            )
            .with_dims([("multisets", all.len()), ("rejected", bad), ("longest", longest)]),
        );
    }
    Ok(items)
}

fn synthesis(cfg: &RunConfig) -> Result<Vec<Item>> {
    let gens = psl2_generators();
    let products = synthesize_generators(&gens, 2, 2, Budget(cfg.budget))?;
    let mut rendered: Vec<String> = products.iter().map(|p| p.render(&gens)).collect();
    rendered.sort();
    let mut expected = vec!["t12^2", "t1^2", "t2^2", "t1*t2*t12"];
    expected.sort();
    Ok(vec![
        Item::new("PSL(2) invariants from (Z/2)^2 weights", rendered == expected).with_residual(rendered.join(", "))
    ])
}

fn relations() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for (label, map, rels) in
        [("SO(4)", so4_generator_map(), so4_relations()), ("PSL(2)", psl2_generator_map(), psl2_relations())]
    {
        for v in verify_relations(&map, &rels)? {
            items.push(Item::new(format!("{label} {}", v.name), v.holds()).residual_if_failed(&v.residual));
        }
    }
    Ok(items)
}

fn certificate_items(label: &str, cert: &crate::presentation::CompletenessCertificate) -> Vec<Item> {
    cert.degrees
        .iter()
        .map(|d| {
            Item::new(format!("{label} degree {}", d.degree), d.complete()).with_dims([
                ("monomials", d.monomials),
                ("images", d.images),
                ("kernel", d.kernel_dim),
                ("span", d.span_dim),
            ])
        })
        .collect()
}

fn completeness(cfg: &RunConfig) -> Result<Vec<Item>> {
    let mut items =
        certificate_items("PSL(2)", &completeness_certificate(&psl2_generator_map(), &psl2_relations(), 12)?);
    let so4 = so4_generator_map();
    items.extend(certificate_items("SO(4)", &completeness_certificate(&so4, &so4_relations(), cfg.degree)?));
    let mutated = completeness_certificate(&so4, &so4_relations_with(Family6::Corrected, &[3]), 6)?;
    let fail = mutated.first_failure();
    items.push(
        Item::new("SO(4) without the c*c' = a*a*b family fails first at degree 6", fail == Some(6))
            .with_residual(format!("first failure: {fail:?}")),
    );
    Ok(items)
}

fn t_identities() -> Result<Vec<Item>> {
    let mut items: Vec<Item> = verify_t_identities()?
        .into_iter()
        .map(|c| Item::new(c.name.clone(), c.holds()).residual_if_failed(&c.residual))
        .collect();
    let expected = [
        "1",
        "c_1_1_2 - c_2_2_1",
        "c_1_2_1 - c_2_1_2",
        "c_1_2_2 - c_2_1_1",
        "a_1_1_1 - a_1_2_2",
        "a_2_1_1 - a_2_2_2",
        "b_1_1 - b_2_2",
        "c_1_1_1 - c_2_2_2",
    ]
    .iter()
    .map(|s| Polynomial::parse(s))
    .collect::<Result<Vec<_>>>()?;
    let t = so4_t_list();
    let rendered: Vec<String> = t.iter().map(|p| p.to_string()).collect();
    items.push(Item::new("t0..t7 from the sigma split", t == expected).with_residual(rendered.join("; ")));
    Ok(items)
}

fn ft_generators() -> Result<Vec<Item>> {
    let mut items: Vec<Item> = verify_ft_generators()?
        .into_iter()
        .map(|c| Item::new(c.name.clone(), c.holds()).residual_if_failed(&c.residual))
        .collect();
    for c in module_generators_check(6).into_iter().chain(module_decomposition_check(6)?) {
        items.push(Item::new(c.name.clone(), c.holds()).with_dims([("dim", c.dim), ("rank", c.rank)]));
    }
    Ok(items)
}

fn independence() -> Vec<Item> {
    let r = independence_certificate();
    let mut items = vec![Item::new("degree-3 span of the full trace algebra has rank 5", r.ft_rank == 5)
        .with_dims([("rank", r.ft_rank)])];
    for (k, &rank) in r.with_single.iter().enumerate() {
        items.push(Item::new(format!("appending t{} gives rank 6", k + 1), rank == 6).with_dims([("rank", rank)]));
    }
    items.push(Item::new("appending t1, t2, t3 gives rank 8", r.with_all == 8).with_dims([("rank", r.with_all)]));
    items.push(Item::new("c_1_1_2 + c_2_2_1 lies in the span", r.sanity_contained));
    items.push(Item::new("every product tj*tk is sigma-fixed", r.products_sigma_fixed));
    items
}

/// Elementary symmetric polynomial `e_k` of `xs` by subset enumeration.
fn elementary_symmetric(xs: &[GaussianRational], k: usize) -> GaussianRational {
    let n = xs.len();
    let mut total = GaussianRational::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let prod = (0..n).filter(|&i| mask >> i & 1 == 1).fold(GaussianRational::one(), |acc, i| &acc * &xs[i]);
            total = &total + &prod;
        }
    }
    total
}

fn newton(cfg: &RunConfig) -> Result<Vec<Item>> {
    let mut rng = substream(cfg.seed, "newton");
    let mut bad = 0;
    let cases = 50;
    for _ in 0..cases {
        let n = rng.gen_range(1..=8);
        let diag: Vec<GaussianRational> = (0..n).map(|_| GaussianRational::from_int(rng.gen_range(-5..=5))).collect();
        let m = Matrix::diagonal(diag.clone());
        let traces = power_traces(&m, n)?;
        for k in 0..=n {
            if exterior_trace(&traces, k)? != elementary_symmetric(&diag, k) {
                bad += 1;
            }
        }
    }
    let id: ScalarMatrix = Matrix::identity(4);
    let wedge2 = exterior_trace(&power_traces(&id, 2)?, 2)?;
    Ok(vec![
        Item::new(format!("exterior traces = eigenvalue products on {cases} diagonal matrices"), bad == 0)
            .residual_if_failed(format!("{bad} mismatches")),
        Item::new("tr of the second exterior power of I4 = 6", wedge2 == GaussianRational::from_int(6))
            .with_residual(&wedge2),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> RunConfig {
        RunConfig { samples: 5, words: 50, degree: 6, ..RunConfig::default() }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [
            Suite::SpinFixtures,
            Suite::Orthogonality,
            Suite::Torus,
            Suite::Synthesis,
            Suite::Independence,
            Suite::Newton,
        ] {
            let r = s.run(&quick()).unwrap();
            assert!(r.ok(), "{}", r.to_text());
        }
    }

    #[test]
    fn reports_are_deterministic_without_timing() {
        let a = Suite::TraceOracle.run(&quick()).unwrap();
        let b = Suite::TraceOracle.run(&quick()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.elapsed.is_none());
        assert!(a.to_json().contains("\"elapsed\": null"));
    }

    #[test]
    fn failed_item_shows_residual() {
        let item = Item::new("x", false).residual_if_failed("t1");
        assert_eq!(item.residual.as_deref(), Some("t1"));
        let item = Item::new("x", true).residual_if_failed("t1");
        assert!(item.residual.is_none());
    }
}
