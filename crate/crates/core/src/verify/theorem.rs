//! Exhaustive and pruned verification of the extremal result for
//! unbalanced-`K_5`-free signed graphs at small orders.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::gamma3;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::io::{round_sig, GraphJson};
use crate::spectral::eigenvalues;
use crate::subgraphs::{contains_unbalanced_clique, for_each_k_clique};

use super::canon::{canonicalize, CanonicalForm};
use super::enumerate::{labeled_underlying, labeled_underlying_count, near_complete_underlying, ClassSpace};
use super::SCHEMA_VERSION;

/// Two spectral values closer than this are treated as tied.
pub const TIE_TOL: f64 = 1e-9;

/// Clique order forbidden by the theorem.
pub const FORBIDDEN_CLIQUE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Pruned,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "pruned" => Ok(Mode::Pruned),
            other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Pruned => "pruned",
        })
    }
}

/// The set of signed graphs a verification run ranges over.
///
/// Exhaustive mode walks every labeled underlying graph. Pruned mode walks one
/// underlying graph per isomorphism class with at most `n - 2` non-edges:
/// a connected graph with more non-edges has `2m - n + 1 <= (n-2)^2`, which
/// bounds both `lambda_1` and `-lambda_n` (apply the frustration bound to the
/// graph and its negation) by `n - 2`; a disconnected graph has spectral radius
/// at most `n - 2` as well. The extremal value exceeds `n - 2`, so nothing
/// outside the pruned space can reach it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationSpace {
    pub n: usize,
    pub mode: Mode,
    pub unbalanced_only: bool,
    pub forbidden_clique: usize,
}

impl EnumerationSpace {
    pub fn new(n: usize, mode: Mode) -> Result<Self> {
        let ok = match mode {
            Mode::Exhaustive => n <= 6,
            Mode::Pruned => (5..=8).contains(&n),
        };
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "{mode} mode supports n {} (got {n})",
                if mode == Mode::Exhaustive { "<= 6" } else { "in 5..=8" }
            )));
        }
        Ok(EnumerationSpace { n, mode, unbalanced_only: true, forbidden_clique: FORBIDDEN_CLIQUE })
    }

    /// Largest number of non-edges an underlying graph may have.
    pub fn max_non_edges(&self) -> usize {
        match self.mode {
            Mode::Exhaustive => self.n * self.n.saturating_sub(1) / 2,
            Mode::Pruned => self.n - 2,
        }
    }

    pub fn underlying_graphs(&self) -> Vec<SignedGraph> {
        match self.mode {
            Mode::Exhaustive => (0..labeled_underlying_count(self.n)).map(|c| labeled_underlying(self.n, c)).collect(),
            Mode::Pruned => near_complete_underlying(self.n, self.max_non_edges()),
        }
    }

    fn admits(&self, space: &ClassSpace, bits: u64, neg: u64) -> bool {
        !(self.unbalanced_only && ClassSpace::is_balanced_bits(bits)) && !space.has_unbalanced_clique(neg)
    }

    /// Stream every admissible switching-class representative.
    pub fn for_each_admissible<F: FnMut(&SignedGraph)>(&self, mut f: F) {
        for u in self.underlying_graphs() {
            let space = ClassSpace::new(&u, self.forbidden_clique);
            for bits in 0..space.class_count() {
                let neg = space.negative_mask(bits);
                if self.admits(&space, bits, neg) {
                    f(&space.graph(neg));
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Scored {
    graph: SignedGraph,
    radius: f64,
    index: f64,
}

/// Keeps every entry within [`TIE_TOL`] of the best score seen so far.
#[derive(Clone, Debug, Default)]
struct TopSet {
    best: f64,
    items: Vec<Scored>,
}

impl TopSet {
    fn new() -> Self {
        TopSet { best: f64::NEG_INFINITY, items: Vec::new() }
    }

    fn offer(&mut self, score: f64, make: impl FnOnce() -> Scored) {
        if score > self.best + TIE_TOL {
            self.best = score;
            self.items.clear();
            self.items.push(make());
        } else if score >= self.best - TIE_TOL {
            self.best = self.best.max(score);
            self.items.push(make());
        }
    }
}

#[derive(Debug)]
struct Shard {
    classes: u64,
    admissible: u64,
    radius: TopSet,
    index: TopSet,
    hits: Vec<Scored>,
}

fn scan(space: &EnumerationSpace, underlying: &SignedGraph, threshold: f64) -> Shard {
    let cs = ClassSpace::new(underlying, space.forbidden_clique);
    let mut shard = Shard {
        classes: cs.class_count(),
        admissible: 0,
        radius: TopSet::new(),
        index: TopSet::new(),
        hits: Vec::new(),
    };
    let mut work = Vec::new();
    for bits in 0..cs.class_count() {
        let neg = cs.negative_mask(bits);
        if !space.admits(&cs, bits, neg) {
            continue;
        }
        shard.admissible += 1;
        let (hi, lo) = cs.extreme_eigenvalues(neg, &mut work);
        let radius = hi.abs().max(lo.abs());
        let scored = || Scored { graph: cs.graph(neg), radius, index: hi };
        shard.radius.offer(radius, scored);
        shard.index.offer(hi, scored);
        if radius >= threshold || hi >= threshold {
            shard.hits.push(scored());
        }
    }
    shard
}

/// One switching-and-relabeling class found during a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassRecord {
    /// Canonically labeled, spanning-forest edges positive.
    pub graph: GraphJson,
    pub radius: f64,
    pub index: f64,
    pub non_edges: usize,
    /// Number of enumerated representatives falling in this class.
    pub occurrences: u64,
    pub equivalent_to_gamma3: bool,
    #[serde(skip)]
    pub form: CanonicalForm,
}

impl ClassRecord {
    pub fn to_graph(&self) -> SignedGraph {
        SignedGraph::try_from(self.graph.clone()).expect("records hold valid graphs")
    }
}

fn classify(items: Vec<Scored>, gamma3_form: &CanonicalForm) -> Vec<ClassRecord> {
    let mut by_form: BTreeMap<CanonicalForm, ClassRecord> = BTreeMap::new();
    for s in items {
        let (form, normal) = canonicalize(&s.graph);
        by_form.entry(form.clone()).and_modify(|r| r.occurrences += 1).or_insert_with(|| ClassRecord {
            graph: GraphJson::from(&normal),
            radius: round_sig(s.radius),
            index: round_sig(s.index),
            non_edges: normal.non_edge_count(),
            occurrences: 1,
            equivalent_to_gamma3: &form == gamma3_form,
            form,
        });
    }
    by_form.into_values().collect()
}

/// Extremal findings for one spectral quantity (spectral radius or index).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalSummary {
    pub quantity: &'static str,
    pub max_found: f64,
    /// The same quantity for `gamma3(n)`.
    pub gamma3_value: f64,
    pub max_matches_gamma3: bool,
    /// Classes attaining the maximum within the tie tolerance.
    pub maximizers: Vec<ClassRecord>,
    pub unique_maximizer_is_gamma3: bool,
    /// Classes reaching `lambda_1(gamma3)` that are not equivalent to `gamma3`.
    pub counterexamples: Vec<ClassRecord>,
    pub verified: bool,
}

/// Timing and scheduling facts, kept apart from the deterministic payload.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunMetadata {
    pub elapsed_seconds: f64,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub n: usize,
    pub mode: Mode,
    pub extended: bool,
    pub forbidden_clique: usize,
    pub max_non_edges: usize,
    pub underlying_graphs: u64,
    pub switching_classes: u64,
    pub admissible_classes: u64,
    /// `lambda_1(gamma3(n))`, the value a counterexample must reach.
    pub threshold: f64,
    /// Statement as written: spectral radius.
    pub radius: ExtremalSummary,
    /// Same statement with the index in place of the spectral radius.
    pub index: ExtremalSummary,
    /// Largest non-edge count among radius maximizers.
    pub maximizer_max_non_edges: Option<usize>,
    pub verified: bool,
    pub metadata: RunMetadata,
}

impl VerificationReport {
    pub fn without_metadata(&self) -> VerificationReport {
        VerificationReport { metadata: RunMetadata::default(), ..self.clone() }
    }

    /// `Err(CounterexampleFound)`-style check used by callers that gate on the verdict.
    pub fn ensure_verified(&self) -> std::result::Result<(), Box<SignedGraph>> {
        match self.radius.counterexamples.first() {
            Some(c) => Err(Box::new(c.to_graph())),
            None if self.verified => Ok(()),
            None => Err(Box::new(
                self.radius.maximizers.first().map(ClassRecord::to_graph).unwrap_or_else(|| SignedGraph::empty(self.n)),
            )),
        }
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "order {} ({} mode{}): {} underlying graphs, {} switching classes, {} admissible\n",
            self.n,
            self.mode,
            if self.extended { ", extended" } else { "" },
            self.underlying_graphs,
            self.switching_classes,
            self.admissible_classes
        );
        s.push_str(&format!("threshold lambda1(gamma3) = {}\n", self.threshold));
        for e in [&self.radius, &self.index] {
            s.push_str(&format!(
                "{}: max {} (gamma3 {}), {} maximizer class(es), gamma3 unique maximizer: {}, {} counterexample class(es) -> {}\n",
                e.quantity,
                e.max_found,
                e.gamma3_value,
                e.maximizers.len(),
                e.unique_maximizer_is_gamma3,
                e.counterexamples.len(),
                if e.verified { "VERIFIED" } else { "FAILED" }
            ));
        }
        s.push_str(&format!("verdict: {}\n", if self.verified { "verified" } else { "NOT verified" }));
        s
    }
}

fn key_of(quantity: &str, r: &ClassRecord) -> f64 {
    if quantity == "index" {
        r.index
    } else {
        r.radius
    }
}

fn summarize(
    quantity: &'static str,
    top: Vec<Scored>,
    best: f64,
    hits: &[Scored],
    gamma3_value: f64,
    threshold: f64,
    key: fn(&Scored) -> f64,
    g3: &CanonicalForm,
) -> ExtremalSummary {
    let maximizers = classify(top.into_iter().filter(|s| key(s) >= best - TIE_TOL).collect(), g3);
    let mut counterexamples: Vec<ClassRecord> =
        classify(hits.iter().filter(|s| key(s) >= threshold).cloned().collect(), g3)
            .into_iter()
            .filter(|r| !r.equivalent_to_gamma3)
            .collect();
    // largest value first, ties in canonical-form order
    counterexamples.sort_by(|a, b| key_of(quantity, b).total_cmp(&key_of(quantity, a)).then(a.form.cmp(&b.form)));
    let max_matches_gamma3 = (best - gamma3_value).abs() <= TIE_TOL;
    let unique_maximizer_is_gamma3 = maximizers.len() == 1 && maximizers[0].equivalent_to_gamma3;
    ExtremalSummary {
        quantity,
        max_found: round_sig(best),
        gamma3_value: round_sig(gamma3_value),
        max_matches_gamma3,
        verified: max_matches_gamma3 && unique_maximizer_is_gamma3 && counterexamples.is_empty(),
        maximizers,
        unique_maximizer_is_gamma3,
        counterexamples,
    }
}

pub fn verify_theorem(n: usize, mode: Mode) -> Result<VerificationReport> {
    verify_theorem_with_jobs(n, mode, None)
}

/// Run the verification on `jobs` worker threads (default: all cores).
/// The report payload does not depend on the worker count.
pub fn verify_theorem_with_jobs(n: usize, mode: Mode, jobs: Option<usize>) -> Result<VerificationReport> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("theorem verification needs n >= 5 (got {n})")));
    }
    let space = EnumerationSpace::new(n, mode)?;
    let start = Instant::now();
    let g3 = gamma3(n)?;
    let g3_spec = eigenvalues(&g3);
    let g3_form = canonicalize(&g3).0;
    let threshold = g3_spec.index() - TIE_TOL;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let workers = pool.current_num_threads();
    let underlying = space.underlying_graphs();
    let shards: Vec<Shard> = pool.install(|| underlying.par_iter().map(|u| scan(&space, u, threshold)).collect());

    let mut radius = TopSet::new();
    let mut index = TopSet::new();
    let mut hits = Vec::new();
    let (mut classes, mut admissible) = (0u64, 0u64);
    for s in shards {
        classes += s.classes;
        admissible += s.admissible;
        for (dst, src) in [(&mut radius, s.radius), (&mut index, s.index)] {
            if src.best > dst.best + TIE_TOL {
                *dst = src;
            } else if src.best >= dst.best - TIE_TOL {
                dst.best = dst.best.max(src.best);
                dst.items.extend(src.items);
            }
        }
        hits.extend(s.hits);
    }

    let radius_summary = summarize(
        "spectral radius",
        radius.items,
        radius.best,
        &hits,
        g3_spec.spectral_radius(),
        threshold,
        |s| s.radius,
        &g3_form,
    );
    let index_summary =
        summarize("index", index.items, index.best, &hits, g3_spec.index(), threshold, |s| s.index, &g3_form);
    let verified = radius_summary.verified;
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        n,
        mode,
        extended: n >= 8,
        forbidden_clique: space.forbidden_clique,
        max_non_edges: space.max_non_edges(),
        underlying_graphs: underlying.len() as u64,
        switching_classes: classes,
        admissible_classes: admissible,
        threshold: round_sig(g3_spec.index()),
        maximizer_max_non_edges: radius_summary.maximizers.iter().map(|r| r.non_edges).max(),
        radius: radius_summary,
        index: index_summary,
        verified,
        metadata: RunMetadata { elapsed_seconds: start.elapsed().as_secs_f64(), jobs: workers },
    })
}

/// Result of the brute-force scan over every labeled signed graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NaiveScan {
    pub n: usize,
    pub signed_graphs: u64,
    pub admissible: u64,
    pub max_radius: f64,
    pub max_index: f64,
}

/// Scan all `3^(n(n-1)/2)` labeled signed graphs without switching classes,
/// testing balance by sign propagation and forbidden cliques on induced subgraphs.
pub fn naive_scan(n: usize, forbidden: usize) -> NaiveScan {
    let codes: Vec<u64> = (0..labeled_underlying_count(n)).collect();
    let partial: Vec<NaiveScan> = codes
        .par_iter()
        .map(|&code| {
            let base = labeled_underlying(n, code);
            let edges: Vec<(usize, usize)> = base.edges().map(|(u, v, _)| (u, v)).collect();
            let mut cliques = Vec::new();
            for_each_k_clique(&base, forbidden, |c| {
                cliques.push(crate::graph::VertexSet::new(c.iter().copied()).expect("distinct"));
                false
            });
            let mut out = NaiveScan {
                n,
                signed_graphs: 0,
                admissible: 0,
                max_radius: f64::NEG_INFINITY,
                max_index: f64::NEG_INFINITY,
            };
            let mut g = base.clone();
            for signs in 0u64..(1 << edges.len()) {
                for (i, &(u, v)) in edges.iter().enumerate() {
                    g.set(u, v, if signs >> i & 1 == 1 { -1 } else { 1 });
                }
                out.signed_graphs += 1;
                if g.is_balanced() {
                    continue;
                }
                if cliques.iter().any(|c| !g.induced(c).expect("in range").is_balanced()) {
                    continue;
                }
                out.admissible += 1;
                let s = eigenvalues(&g);
                out.max_radius = out.max_radius.max(s.spectral_radius());
                out.max_index = out.max_index.max(s.index());
            }
            out
        })
        .collect();
    partial.into_iter().fold(
        NaiveScan { n, signed_graphs: 0, admissible: 0, max_radius: f64::NEG_INFINITY, max_index: f64::NEG_INFINITY },
        |a, b| NaiveScan {
            n,
            signed_graphs: a.signed_graphs + b.signed_graphs,
            admissible: a.admissible + b.admissible,
            max_radius: a.max_radius.max(b.max_radius),
            max_index: a.max_index.max(b.max_index),
        },
    )
}

/// Independent re-check of admissibility through the general-purpose routines.
pub fn is_admissible(g: &SignedGraph, forbidden: usize) -> bool {
    !g.is_balanced() && contains_unbalanced_clique(g, forbidden).is_none()
}
