//! Bundled golden checks: the worked two-object colimit example, the power
//! law for right Kan extensions along the vertex inclusion, and randomized
//! sweeps of the main laws. Each fixture returns one line per assertion.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::fincat::{chain_category, find_isomorphism, parallel_pair, two, FinCategory, FinFunctor};
use crate::gen::{category_corpus, Gen};
use crate::json::{category_to_json, nat_trans_to_json, parse_category, preorder_to_json};
use crate::kan::{hom_counts, verify_triangle_identities, Adjunction, Kan, LanAdjunction, RanAdjunction};
use crate::limits::{colimit, colimit_comparison, filtered_colimit, product, pullback, pullback_nat};
use crate::reflect::{EPrimeVerdict, InducedReflection};
use crate::setval::{check_orthogonal, factorize, FinSet, NatTrans, SetFunctor};
use crate::sketch::{cat_sketch, check_lemma51, delta3op, preorder_reflection, vertex_inclusion};

/// One assertion of a fixture.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed, detail: Value::Null }
    }

    fn with(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }
}

#[derive(Debug, Clone)]
pub struct FixtureReport {
    pub fixture: String,
    pub checks: Vec<Check>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({"check": c.name, "passed": c.passed});
                if !c.detail.is_null() {
                    v["detail"] = c.detail.clone();
                }
                v
            })
            .collect();
        json!({"fixture": self.fixture, "passed": self.passed(), "checks": checks})
    }
}

pub const FIXTURES: &[&str] = &[
    "categories",
    "examples-colimit",
    "ran-power-law",
    "cogenerating",
    "mono-colim",
    "colimit-oracle",
    "triangle",
    "orthogonality",
    "preorders",
    "lemma51-product",
];

/// Runs a fixture by name; `None` for unknown names.
pub fn run(name: &str, seed: u64) -> Option<FixtureReport> {
    let checks = match name {
        "categories" => categories(),
        "examples-colimit" => examples_colimit(),
        "ran-power-law" => ran_power_law(seed, 20),
        "cogenerating" => cogenerating(),
        "mono-colim" => mono_colim(seed, 200),
        "colimit-oracle" => colimit_oracle(seed, 500),
        "triangle" => triangle(seed, 10, 10),
        "orthogonality" => orthogonality(seed, 500, 50),
        "preorders" => preorders(),
        "lemma51-product" => lemma51_product(),
        _ => return None,
    };
    Some(FixtureReport { fixture: name.to_string(), checks })
}

/// The functor `M` on `0 → 1` with `M(0) = {x, y}`, `M(1) = {x}`, the
/// endomorphism `φ` collapsing `M(0)` onto `x`, and the subfunctor
/// `ψ: Q → M` with `Q(0) = {y}`, `Q(1) = {x}`.
#[derive(Debug, Clone)]
pub struct ColimitExample {
    pub m: SetFunctor,
    pub phi: NatTrans,
    pub q: SetFunctor,
    pub psi: NatTrans,
}

pub fn colimit_example() -> ColimitExample {
    let shape = Arc::new(two());
    let set = |labels: &[&str]| FinSet::labelled(labels.iter().map(|s| s.to_string()).collect());
    let m = SetFunctor::new(shape.clone(), vec![set(&["x", "y"]), set(&["x"])], vec![vec![0, 1], vec![0, 0], vec![0]])
        .expect("M is a functor");
    let phi = NatTrans::new(m.clone(), m.clone(), vec![vec![0, 0], vec![0]]).expect("φ is natural");
    let q = SetFunctor::new(shape, vec![set(&["y"]), set(&["x"])], vec![vec![0], vec![0], vec![0]]).expect("Q is a functor");
    let psi = NatTrans::new(q.clone(), m.clone(), vec![vec![1], vec![0]]).expect("ψ is natural");
    ColimitExample { m, phi, q, psi }
}

fn categories() -> Vec<Check> {
    let two_json = json!({
        "objects": ["0", "1"],
        "morphisms": [{"id": "id0", "dom": "0", "cod": "0"}, {"id": "u", "dom": "0", "cod": "1"}, {"id": "id1", "dom": "1", "cod": "1"}],
        "identities": {"0": "id0", "1": "id1"},
        "compose": [["id0", "id0", "id0"], ["u", "id0", "u"], ["id1", "u", "u"], ["id1", "id1", "id1"]]
    });
    let parsed = parse_category(&two_json, "");
    let mut partial = two_json.clone();
    partial["compose"].as_array_mut().expect("array").remove(1);
    let chain2 = chain_category(2).expect("chain");
    let p = delta3op();
    vec![
        Check::new("the ordinal 2 validates", parsed.as_ref().is_ok_and(|c| *c == two())),
        Check::new("dropping u∘id0 is rejected", parse_category(&partial, "").is_err()),
        Check::new("chain_category(2) has 3 morphisms", chain2.morphism_count() == 3 && find_isomorphism(&Arc::new(chain2), &Arc::new(two())).is_some()),
        Check::new("Δ₃^op has 4 objects", p.object_count() == 4),
        Check::new("the two pullback cones commute in Δ₃^op", cat_sketch().cones.len() == 2),
        Check::new("2 is pseudo-filtered", two().is_pseudo_filtered()),
        Check::new("the parallel pair is not pseudo-filtered", !parallel_pair().is_pseudo_filtered()),
    ]
}

fn examples_colimit() -> Vec<Check> {
    let ex = colimit_example();
    let shape = ex.m.shape().clone();
    let r = InducedReflection::new(LanAdjunction::colim(&shape));
    let theta = r.adjunction.unit(&ex.m);
    let reflected = r.reflect_object(&ex.m);
    let pb = pullback_nat(&ex.phi, &ex.psi);
    let pulled_back = pb.second.clone();
    let colim = colimit(&ex.m);
    let filtered = filtered_colimit(&ex.m).map(|c| c.size());
    let naive = pullback(ex.psi.component(0), ex.phi.component(0), 2);
    let falsify = r.is_in_e_prime_falsify(&ex.phi, std::slice::from_ref(&ex.psi));
    let counterexample = match &falsify {
        Ok(EPrimeVerdict::Counterexample { probe: 0, pulled_back }) => Some(pulled_back.clone()),
        _ => None,
    };
    vec![
        Check::new("φ is natural, not mono and not epi", !ex.phi.is_mono() && !ex.phi.is_epi()),
        Check::new("ψ is mono", ex.psi.is_mono()),
        Check::new("θ_M = (Mu, id)", theta.component(0) == ex.m.map(1) && theta.component(1) == [0]),
        Check::new("Colim M has one element", colim.size() == 1 && filtered == Ok(1)),
        Check::new("Lan along 2 → 1 is Colim", r.adjunction.left(&ex.m).size(0) == colim.size()),
        Check::new("I(M) has both sets singletons", factorize(&theta).mid.sizes() == [1, 1] && reflected.image.sizes() == [1, 1]),
        Check::new("M is not in Mono(F)", !r.in_subcategory(&ex.m)),
        Check::new("φ ∈ E_I", r.is_in_e_i(&ex.phi)),
        Check::new("φ ∉ M_I", !r.is_in_m_i(&ex.phi)),
        Check::new("ψ₀ against φ₀ has empty pullback", naive.size() == 0),
        Check::new("ψ*(φ) has component ∅ → {y}", pb.object.sizes() == [0, 1] && pulled_back.target().sizes() == [1, 1]),
        Check::new("ψ*(φ) ∉ E_I", !r.is_in_e_i(&pulled_back)),
        Check::new("E′ falsification returns ψ", counterexample.is_some())
            .with(counterexample.map_or(Value::Null, |t| nat_trans_to_json(&t, &json!("two")))),
    ]
}

fn ran_power_law(seed: u64, count: usize) -> Vec<Check> {
    let mut gen = Gen::new(seed);
    let kan = Kan::new(vertex_inclusion());
    let vertices = kan.functor().source().clone();
    let mut failures = Vec::new();
    for i in 0..count {
        let size = gen.below(5);
        let t = SetFunctor::constant(&vertices, FinSet::new(size));
        let ran = kan.ran(&t);
        let expected: Vec<usize> = (0..4u32).map(|n| size.pow(n + 1)).collect();
        if ran.sizes() != expected {
            failures.push(json!({"instance": i, "size": size, "ran": ran.sizes()}));
        }
    }
    vec![Check::new(format!("|Ran T([n])| = |T₀|^(n+1) on {count} presheaves"), failures.is_empty()).with(json!(failures))]
}

fn cogenerating() -> Vec<Check> {
    let k = vertex_inclusion();
    let missing = {
        // nothing leaves 1, so maps into K(b) = 0 cannot separate u and v
        let pp = Arc::new(parallel_pair());
        let one = Arc::new(crate::fincat::terminal());
        FinFunctor::new(one, pp.clone(), vec![0], vec![pp.identity(0)]).expect("object inclusion")
    };
    vec![
        Check::new("{[0]} is cogenerating in Δ₃^op", k.is_cogenerating()),
        Check::new("an object missing the separating target is not", !missing.is_cogenerating())
            .with(json!(missing.cogenerating_witness())),
    ]
}

fn mono_colim(seed: u64, count: usize) -> Vec<Check> {
    let mut gen = Gen::new(seed);
    let mut discrepancies = Vec::new();
    for i in 0..count {
        let shape = gen.pseudo_filtered(4);
        let m = gen.functor(&shape, 3);
        let r = InducedReflection::new(LanAdjunction::colim(&shape));
        if r.in_subcategory(&m) != m.all_maps_injective() {
            discrepancies.push(json!({"instance": i, "shape": category_to_json(&shape)}));
        }
    }
    vec![Check::new(format!("Mono(Colim) ⇔ injective structure maps on {count} functors"), discrepancies.is_empty())
        .with(json!(discrepancies))]
}

fn colimit_oracle(seed: u64, count: usize) -> Vec<Check> {
    let mut gen = Gen::new(seed);
    let mut failures = Vec::new();
    for i in 0..count {
        let shape = gen.pseudo_filtered(5);
        let d = gen.functor(&shape, 4);
        let a = colimit(&d);
        let ok = filtered_colimit(&d).ok().and_then(|b| colimit_comparison(&a, &b)).is_some();
        if !ok {
            failures.push(i);
        }
    }
    vec![Check::new(format!("filtered and general colimits agree on {count} diagrams"), failures.is_empty()).with(json!(failures))]
}

fn triangle(seed: u64, functors: usize, probes: usize) -> Vec<Check> {
    let mut gen = Gen::new(seed);
    let mut failures = Vec::new();
    let mut hom_checked = 0;
    for i in 0..functors {
        let a = gen.shape(4);
        let b = gen.shape(4);
        let k = gen.fin_functor(&b, &a);
        let ran = RanAdjunction::new(k.clone());
        let lan = LanAdjunction::new(k);
        let on_a: Vec<SetFunctor> = (0..probes).map(|_| gen.functor(&a, 3)).collect();
        let on_b: Vec<SetFunctor> = (0..probes).map(|_| gen.functor(&b, 3)).collect();
        let adjunctions: [(&str, &dyn Adjunction, &[SetFunctor], &[SetFunctor]); 2] =
            [("ran", &ran, &on_a, &on_b), ("lan", &lan, &on_b, &on_a)];
        for (name, adj, dom, cod) in adjunctions {
            let report = verify_triangle_identities(adj, dom, cod);
            if !report.passed() {
                failures.push(json!({"functor": i, "adjunction": name, "failures": report.failures.len()}));
            }
            for (c, d) in dom.iter().zip(cod) {
                if let Some(counts) = hom_counts(adj, c, d, 10_000) {
                    hom_checked += 1;
                    if counts.left != counts.right {
                        failures.push(json!({"functor": i, "adjunction": name, "left": counts.left, "right": counts.right}));
                    }
                }
            }
        }
    }
    vec![Check::new(format!("triangle identities and hom-set counts ({hom_checked} counted pairs)"), failures.is_empty())
        .with(json!(failures))]
}

fn orthogonality(seed: u64, squares: usize, crafted: usize) -> Vec<Check> {
    let mut gen = Gen::new(seed);
    let mut bad = Vec::new();
    for i in 0..squares {
        let shape = gen.shape(3);
        let s = gen.epi_mono_square(&shape, 2);
        let d = check_orthogonal(&s.e, &s.m, &s.u, &s.v).ok().and_then(|d| d.unique());
        if d.is_none() || d != s.diagonal {
            bad.push(i);
        }
    }
    let mut accepted = Vec::new();
    for i in 0..crafted {
        let shape = gen.shape(3);
        let s = gen.crafted_square(&shape, 2);
        if check_orthogonal(&s.e, &s.m, &s.u, &s.v).map_or(true, |d| d.unique().is_some()) {
            accepted.push(i);
        }
    }
    vec![
        Check::new(format!("unique diagonal on {squares} epi/mono squares"), bad.is_empty()).with(json!(bad)),
        Check::new(format!("witnessed failure on {crafted} crafted squares"), accepted.is_empty()).with(json!(accepted)),
    ]
}

fn preorders() -> Vec<Check> {
    let pp = preorder_reflection(&parallel_pair());
    let ab = pp.as_ref().map(|p| p.len() == 2 && p.le(0, 1) && !p.le(1, 0)).unwrap_or(false);
    let corpus: Vec<FinCategory> = category_corpus();
    let mismatches: Vec<usize> = corpus.iter().enumerate().filter(|(_, c)| preorder_reflection(c).is_err()).map(|(i, _)| i).collect();
    vec![
        Check::new("the parallel pair reflects to a ≤ b", ab).with(pp.map(|p| preorder_to_json(&p)).unwrap_or(Value::Null)),
        Check::new(format!("pipeline equals hom oracle on {} categories", corpus.len()), mismatches.is_empty())
            .with(json!(mismatches)),
    ]
}

fn lemma51_product() -> Vec<Check> {
    let shape = Arc::new(crate::fincat::empty());
    let t = SetFunctor::terminal(&shape);
    let report = check_lemma51(&NatTrans::identity(&t));
    vec![
        Check::new("empty product is a singleton", product(&[]).size() == 1),
        Check::new(
            "n = 0: Lim F, Lim D and the image are all the terminal set",
            report.holds() && report.lim_f == 1 && report.lim_d == 1 && report.image == 1,
        ),
    ]
}
