//! Exhaustive checks of the structure claims for `C_{T_n(F)}` and the
//! `C_{Z_n}` regression facts. Each check produces a [`Verdict`] holding
//! the value predicted by the closed form, the value measured on the
//! constructed graph, and a certificate that can be re-verified against an
//! exported copy of the graph.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constructors::{
    antipodal_hamming_direct, complete_graph, diagonal_quotient, semistrong_product,
    unitary_cayley_of, QuotientCounts, VertexLabeling,
};
use crate::error::{Error, Result};
use crate::field::Elem;
use crate::graph::{
    all_pairs_distances, connected_components, is_bipartite, is_complete_bipartite, iso_check,
    maximum_clique, triameter_with_witness, Bipartition, DistanceMatrix, Graph, ISO_ORACLE_LIMIT,
};
use crate::limits::Limits;
use crate::ring::{encode_digits, IntegersMod, Ring, RingSpec, TriMatrix, TriRing};

pub const DEFAULT_SEED: u64 = 0x5eed;
pub const SPOT_CHECKS: usize = 100;

/// `(n, p, k)` of the default suite.
pub const DEFAULT_SUITE: [(usize, u64, u32); 7] = [
    (2, 2, 1),
    (3, 2, 1),
    (4, 2, 1),
    (2, 3, 1),
    (3, 3, 1),
    (2, 2, 2),
    (2, 5, 1),
];

pub fn default_suite() -> Vec<RingSpec> {
    DEFAULT_SUITE
        .iter()
        .map(|&(n, p, k)| RingSpec::tri(n, p, k))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Prop0,
    Prop1,
    Theorem1,
    Connectivity,
    Triameter,
    Clique,
    Theorem3,
    Quotient,
    Zn,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Prop0,
        Check::Prop1,
        Check::Theorem1,
        Check::Connectivity,
        Check::Triameter,
        Check::Clique,
        Check::Theorem3,
        Check::Quotient,
        Check::Zn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Prop0 => "prop0",
            Check::Prop1 => "prop1",
            Check::Theorem1 => "theorem1",
            Check::Connectivity => "connectivity",
            Check::Triameter => "triameter",
            Check::Clique => "clique",
            Check::Theorem3 => "theorem3",
            Check::Quotient => "quotient",
            Check::Zn => "zn",
        }
    }

    pub fn claim_id(self) -> &'static str {
        match self {
            Check::Prop0 => "prop0.regularity",
            Check::Prop1 => "prop1.adjacency",
            Check::Theorem1 => "theorem1.components",
            Check::Connectivity => "theorem2.connectivity_diameter",
            Check::Triameter => "triameter",
            Check::Clique => "clique",
            Check::Theorem3 => "theorem3.semistrong_product",
            Check::Quotient => "quotient.antipodal_hamming",
            Check::Zn => "zn.oracles",
        }
    }

    /// `Err` carries the reason the check does not apply.
    pub fn applies_to(self, spec: &RingSpec) -> std::result::Result<(), String> {
        let q = spec.field_order();
        let ok = match (self, q) {
            (Check::Zn, None) => true,
            (Check::Zn, Some(_)) => return Err("needs a ring Z_n".into()),
            (_, None) => return Err("needs a triangular matrix ring".into()),
            (Check::Theorem1, Some(q)) => q == 2,
            (Check::Connectivity | Check::Triameter | Check::Theorem3, Some(q)) => q > 2,
            (_, Some(_)) => true,
        };
        if ok {
            Ok(())
        } else if self == Check::Theorem1 {
            Err("needs |F| = 2".into())
        } else {
            Err("needs |F| > 2".into())
        }
    }

    /// Every check that applies to `spec`, in a fixed order.
    pub fn applicable(spec: &RingSpec) -> Vec<Check> {
        Check::ALL
            .into_iter()
            .filter(|c| c.applies_to(spec).is_ok())
            .collect()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s || c.claim_id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Outcome of one check on one ring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim_id: String,
    pub spec: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub certificate: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Wall time; reported under the separate `timing` key.
    #[serde(skip)]
    pub millis: u64,
}

impl Verdict {
    fn failed(claim_id: &str, spec: &RingSpec, err: &Error) -> Self {
        Verdict {
            claim_id: claim_id.to_string(),
            spec: spec.to_string(),
            expected: Value::Null,
            computed: json!({ "error": err.to_string() }),
            pass: false,
            certificate: Value::Null,
            seed: None,
            millis: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub claim_id: String,
    pub spec: String,
    pub millis: u64,
}

/// Verdicts plus their timings, kept apart so the verdict list is
/// byte-stable across runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
    pub timing: Vec<Timing>,
}

impl Report {
    pub fn new(verdicts: Vec<Verdict>) -> Self {
        let timing = verdicts
            .iter()
            .map(|v| Timing {
                claim_id: v.claim_id.clone(),
                spec: v.spec.clone(),
                millis: v.millis,
            })
            .collect();
        Report { verdicts, timing }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

/// A built ring and its Cayley graph, shared by the checks for one spec.
pub struct Instance {
    spec: RingSpec,
    ring: Ring,
    cayley: Graph,
    limits: Limits,
    distances: OnceLock<DistanceMatrix>,
}

impl Instance {
    pub fn build(spec: &RingSpec, limits: &Limits) -> Result<Self> {
        let ring = Ring::build(spec, limits)?;
        let cayley = unitary_cayley_of(&ring);
        Ok(Instance {
            spec: *spec,
            ring,
            cayley,
            limits: *limits,
            distances: OnceLock::new(),
        })
    }

    pub fn cayley(&self) -> &Graph {
        &self.cayley
    }

    fn distances(&self) -> &DistanceMatrix {
        self.distances
            .get_or_init(|| all_pairs_distances(&self.cayley))
    }

    fn tri(&self, check: Check) -> Result<&TriRing> {
        check.applies_to(&self.spec).map_err(|reason| self.wrong(check, reason))?;
        match &self.ring {
            Ring::Tri(r) => Ok(r),
            Ring::Zn(_) => unreachable!("applies_to rejects Z_n"),
        }
    }

    fn wrong(&self, check: Check, reason: String) -> Error {
        Error::WrongField {
            check: check.name().to_string(),
            spec: self.spec.to_string(),
            reason,
        }
    }

    fn verdict(&self, check: Check, expected: Value, computed: Value, pass: bool, certificate: Value) -> Verdict {
        Verdict {
            claim_id: check.claim_id().to_string(),
            spec: self.spec.to_string(),
            expected,
            computed,
            pass,
            certificate,
            seed: None,
            millis: 0,
        }
    }

    pub fn run(&self, check: Check, seed: u64) -> Result<Verdict> {
        let start = Instant::now();
        let mut v = match check {
            Check::Prop0 => self.prop0(),
            Check::Prop1 => self.prop1(),
            Check::Theorem1 => self.theorem1(),
            Check::Connectivity => self.connectivity(),
            Check::Triameter => self.triameter(),
            Check::Clique => self.clique(),
            Check::Theorem3 => self.theorem3(seed),
            Check::Quotient => self.quotient(),
            Check::Zn => self.zn(),
        }?;
        v.millis = start.elapsed().as_millis() as u64;
        Ok(v)
    }

    /// Every vertex has degree `(q-1)^n q^((n^2-n)/2)`, and that many units
    /// are found by enumeration.
    fn prop0(&self) -> Result<Verdict> {
        let ring = self.tri(Check::Prop0)?;
        let formula = ring.unit_count_formula();
        let units = ring.enumerate().filter(TriMatrix::is_unit).count() as u64;
        let mut degrees = self.cayley.degrees();
        degrees.sort_unstable();
        degrees.dedup();
        let pass = degrees == [formula as usize] && units == formula;
        Ok(self.verdict(
            Check::Prop0,
            json!({ "degree": formula }),
            json!({ "distinct_degrees": degrees, "unit_count": units }),
            pass,
            Value::Null,
        ))
    }

    /// Determinant rule and diagonal rule agree on every pair.
    fn prop1(&self) -> Result<Verdict> {
        let ring = self.tri(Check::Prop1)?;
        let elems: Vec<TriMatrix<'_>> = ring.enumerate().collect();
        let v = elems.len();
        let diagonal_rule = |a: &TriMatrix<'_>, b: &TriMatrix<'_>| {
            (0..ring.n()).all(|i| a.get(i, i) != b.get(i, i))
        };
        let (disagreements, first) = (0..v)
            .into_par_iter()
            .map(|x| {
                let bad: Vec<usize> = (x + 1..v)
                    .filter(|&y| self.cayley.has_edge(x, y) != diagonal_rule(&elems[x], &elems[y]))
                    .collect();
                (bad.len() as u64, bad.first().map(|&y| (x, y)))
            })
            .reduce(
                || (0, None),
                |a, b| (a.0 + b.0, a.1.or(b.1)),
            );
        let self_pairs_ok = elems
            .iter()
            .all(|a| a.sub(a).map(|d| d.det() == 0).unwrap_or(false) && !diagonal_rule(a, a));
        let pairs = (v * (v - 1) / 2) as u64;
        Ok(self.verdict(
            Check::Prop1,
            json!({ "pairs_checked": pairs, "disagreements": 0, "self_pairs_nonadjacent": true }),
            json!({ "pairs_checked": pairs, "disagreements": disagreements, "self_pairs_nonadjacent": self_pairs_ok }),
            disagreements == 0 && self_pairs_ok,
            json!({ "first_disagreement": first }),
        ))
    }

    /// `2^(n-1)` components, each `K_{m,m}` with `m = 2^(n(n-1)/2)`, each
    /// part one diagonal class, the two diagonals complementary.
    fn theorem1(&self) -> Result<Verdict> {
        let ring = self.tri(Check::Theorem1)?;
        let n = ring.n();
        let m = 1u64 << (n * (n - 1) / 2);
        let comps = connected_components(&self.cayley);
        let diag_code = |x: usize| encode_digits(&ring.decode(x as u64).diagonal_of(), 2);
        let all_ones = (1u64 << n) - 1;

        let mut all_complete = true;
        let mut pairing_ok = true;
        let mut part_sizes = Vec::new();
        let mut cert = Vec::new();
        for comp in &comps {
            let sub = self.cayley.induced_subgraph(comp);
            let Some(parts) = is_complete_bipartite(&sub)? else {
                all_complete = false;
                continue;
            };
            let lift = |p: &[usize]| p.iter().map(|&i| comp[i]).collect::<Vec<_>>();
            let parts = Bipartition {
                part_a: lift(&parts.part_a),
                part_b: lift(&parts.part_b),
            };
            part_sizes.push(parts.sizes());
            let da = diag_code(parts.part_a[0]);
            let db = diag_code(parts.part_b[0]);
            let single_a = parts.part_a.iter().all(|&x| diag_code(x) == da);
            let single_b = parts.part_b.iter().all(|&x| diag_code(x) == db);
            pairing_ok &= single_a && single_b && da ^ db == all_ones;
            cert.push(json!({
                "diagonal_a": ring.decode(parts.part_a[0] as u64).diagonal_of(),
                "diagonal_b": ring.decode(parts.part_b[0] as u64).diagonal_of(),
                "part_a": parts.part_a,
                "part_b": parts.part_b,
            }));
        }
        part_sizes.sort_unstable();
        part_sizes.dedup();
        let expected_comps = 1u64 << (n - 1);
        let pass = comps.len() as u64 == expected_comps
            && all_complete
            && part_sizes == [(m as usize, m as usize)]
            && pairing_ok;
        Ok(self.verdict(
            Check::Theorem1,
            json!({ "components": expected_comps, "part_size": m, "complete_bipartite": true, "diagonal_pairing": true }),
            json!({
                "components": comps.len(),
                "part_sizes": part_sizes,
                "complete_bipartite": all_complete,
                "diagonal_pairing": pairing_ok,
            }),
            pass,
            json!({ "components": cert }),
        ))
    }

    /// Connected with diameter 2; the certificate exhibits a common
    /// neighbour of a non-adjacent pair: diagonal entries avoiding both
    /// diagonals, zeros above the diagonal.
    fn connectivity(&self) -> Result<Verdict> {
        let ring = self.tri(Check::Connectivity)?;
        let comps = connected_components(&self.cayley).len();
        let dm = self.distances();
        let diam = dm.diameter().ok();
        let v = self.cayley.vertex_count();
        let pair = (0..v).find_map(|x| (x + 1..v).find(|&y| !self.cayley.has_edge(x, y)).map(|y| (x, y)));
        let certificate = match pair {
            Some((x, y)) => {
                let a = ring.decode(x as u64);
                let b = ring.decode(y as u64);
                let diag: Vec<Elem> = (0..ring.n())
                    .map(|i| {
                        ring.field()
                            .elements()
                            .find(|&c| c != a.get(i, i) && c != b.get(i, i))
                            .expect("|F| > 2 leaves a third element")
                    })
                    .collect();
                let c = TriMatrix::diagonal(ring.field(), &diag);
                let z = c.encode() as usize;
                json!({
                    "pair": [x, y],
                    "midpoint": z,
                    "midpoint_matrix": c.to_string(),
                    "midpoint_adjacent_to_both": self.cayley.has_edge(x, z) && self.cayley.has_edge(y, z),
                })
            }
            None => Value::Null,
        };
        let midpoint_ok = certificate["midpoint_adjacent_to_both"].as_bool().unwrap_or(false);
        Ok(self.verdict(
            Check::Connectivity,
            json!({ "components": 1, "diameter": 2 }),
            json!({ "components": comps, "diameter": diam }),
            comps == 1 && diam == Some(2) && midpoint_ok,
            certificate,
        ))
    }

    /// Triameter 6, attained by `diag(a,..,a)`, `diag(a,b,..,b)`,
    /// `diag(a,c,..,c)` for distinct `a, b, c`.
    fn triameter(&self) -> Result<Verdict> {
        let ring = self.tri(Check::Triameter)?;
        let dm = self.distances();
        let diam = dm.diameter()?;
        let t = triameter_with_witness(dm)?;
        let n = ring.n();
        let f = ring.field();
        let tail = |x: Elem| std::iter::once(0).chain(std::iter::repeat_n(x, n - 1)).collect::<Vec<_>>();
        let witness: Vec<usize> = [tail(0), tail(1), tail(2)]
            .iter()
            .map(|d| TriMatrix::diagonal(f, d).encode() as usize)
            .collect();
        let witness_sum = dm.triple_sum(witness[0], witness[1], witness[2]);
        let (a, b, c) = t.triple;
        let pass = t.value == 6 && witness_sum == Some(6) && t.value == 3 * diam;
        Ok(self.verdict(
            Check::Triameter,
            json!({ "triameter": 6, "witness_sum": 6 }),
            json!({ "triameter": t.value, "witness_sum": witness_sum, "diameter": diam }),
            pass,
            json!({
                "triple": [a, b, c],
                "triple_matrices": [ring.decode(a as u64).to_string(), ring.decode(b as u64).to_string(), ring.decode(c as u64).to_string()],
                "witness": witness,
            }),
        ))
    }

    /// Clique number `q`; the scalar matrices give a clique of that size.
    fn clique(&self) -> Result<Verdict> {
        let ring = self.tri(Check::Clique)?;
        let f = ring.field();
        let scalars: Vec<usize> = f
            .elements()
            .map(|a| TriMatrix::diagonal(f, &vec![a; ring.n()]).encode() as usize)
            .collect();
        let scalars_clique = is_clique(&self.cayley, &scalars);
        let best = maximum_clique(&self.cayley);
        let q = ring.q() as usize;
        Ok(self.verdict(
            Check::Clique,
            json!({ "clique_number": q, "scalar_clique": true }),
            json!({ "clique_number": best.len(), "scalar_clique": scalars_clique }),
            best.len() == q && scalars_clique,
            json!({ "scalar_matrices": scalars, "maximum_clique": best }),
        ))
    }

    /// Labeled equality of `C_{T_n(F)}` and `K_m • A(H(n,q))` under
    /// `a -> (strict-upper part of a, diagonal of a)`.
    fn theorem3(&self, seed: u64) -> Result<Verdict> {
        let ring = self.tri(Check::Theorem3)?;
        let q = ring.q();
        let n = ring.n();
        let m = (q as u64).pow((n * (n - 1) / 2) as u32);
        let product = theorem3_product(ring, &self.limits)?;
        let phi = phi_labeling(ring)?;
        let v = self.cayley.vertex_count();

        let agreeing: u64 = (0..v)
            .into_par_iter()
            .map(|x| {
                let px = phi.code(x) as usize;
                (x + 1..v)
                    .filter(|&y| self.cayley.has_edge(x, y) == product.has_edge(px, phi.code(y) as usize))
                    .count() as u64
            })
            .sum();
        let pairs = (v * (v - 1) / 2) as u64;

        let mut dc = self.cayley.degrees();
        let mut dp = product.degrees();
        dc.sort_unstable();
        dp.sort_unstable();
        let edges = [self.cayley.edge_count(), product.edge_count()];
        let comps = [
            connected_components(&self.cayley).len(),
            connected_components(&product).len(),
        ];
        let iso = if v <= ISO_ORACLE_LIMIT {
            match iso_check(&self.cayley, &product)? {
                Some(_) => "confirmed",
                None => "refuted",
            }
        } else {
            "skipped"
        };

        let spot = spot_check_phi(&self.cayley, &product, &phi, seed);
        let redundant_ok = dc == dp && edges[0] == edges[1] && comps[0] == comps[1];
        let pass = agreeing == pairs && redundant_ok && iso != "refuted";
        let mut verdict = self.verdict(
            Check::Theorem3,
            json!({
                "vertices": v,
                "m": m,
                "pairs_agreeing": pairs,
                "degree": ring.unit_count_formula(),
            }),
            json!({
                "vertices": product.vertex_count(),
                "m": m,
                "pairs_agreeing": agreeing,
                "degree": product.regular_degree(),
                "phi_bijective": phi.as_permutation().is_some(),
                "degree_sequences_equal": dc == dp,
                "edge_counts": edges,
                "component_counts": comps,
                "iso_oracle": iso,
            }),
            pass,
            json!({ "spot_checks": spot }),
        );
        verdict.seed = Some(seed);
        Ok(verdict)
    }

    /// Quotient by diagonal classes equals `A(H(n,q))` vertex for vertex.
    fn quotient(&self) -> Result<Verdict> {
        let ring = self.tri(Check::Quotient)?;
        let counts = QuotientCounts::new(ring, &self.cayley, &self.limits)?;
        let quotient = counts.some_pair();
        let target = antipodal_hamming_direct(ring.n(), ring.q(), &self.limits)?;
        let readings_agree = quotient == counts.every_pair() && counts.internal_edges() == 0;
        let diff = quotient.first_difference(&target);
        Ok(self.verdict(
            Check::Quotient,
            json!({ "vertices": target.vertex_count(), "edges": target.edge_count(), "labeled_equal": true, "readings_agree": true }),
            json!({ "vertices": quotient.vertex_count(), "edges": quotient.edge_count(), "labeled_equal": diff.is_none(), "readings_agree": readings_agree }),
            diff.is_none() && readings_agree,
            json!({ "first_difference": diff }),
        ))
    }

    /// `C_{Z_p} = K_p`, `C_{Z_{2^s}} = K_{2^(s-1), 2^(s-1)}`, bipartite for
    /// even `n`; always `phi(n)`-regular.
    fn zn(&self) -> Result<Verdict> {
        Check::Zn
            .applies_to(&self.spec)
            .map_err(|r| self.wrong(Check::Zn, r))?;
        let Ring::Zn(z) = &self.ring else {
            unreachable!("applies_to admits only Z_n")
        };
        let (expected, computed) = zn_claims(z, &self.cayley, &self.limits)?;
        let pass = expected == computed;
        Ok(self.verdict(Check::Zn, expected, computed, pass, Value::Null))
    }
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn zn_claims(z: &IntegersMod, g: &Graph, limits: &Limits) -> Result<(Value, Value)> {
    let n = z.modulus();
    let units = z.enumerate().filter(|&x| z.is_unit(x)).count();
    let mut expected = serde_json::Map::new();
    let mut computed = serde_json::Map::new();
    expected.insert("degree".into(), json!(units));
    computed.insert("degree".into(), json!(g.regular_degree()));
    if crate::field::is_prime(n) {
        expected.insert("complete".into(), json!(true));
        computed.insert("complete".into(), json!(*g == complete_graph(n as usize, limits)?));
    }
    if n.is_power_of_two() {
        expected.insert("complete_bipartite_parts".into(), json!([n / 2, n / 2]));
        let parts = is_complete_bipartite(g)?.map(|p| p.sizes());
        computed.insert("complete_bipartite_parts".into(), json!(parts));
    }
    if n.is_multiple_of(2) {
        expected.insert("bipartite".into(), json!(true));
        computed.insert("bipartite".into(), json!(is_bipartite(g).is_some()));
    }
    Ok((Value::Object(expected), Value::Object(computed)))
}

/// `K_m • A(H(n,q))` with `m = q^(n(n-1)/2)`.
pub fn theorem3_product(ring: &TriRing, limits: &Limits) -> Result<Graph> {
    let n = ring.n();
    let m = (ring.q() as u64).pow((n * (n - 1) / 2) as u32);
    let km = complete_graph(m as usize, limits)?;
    let ah = antipodal_hamming_direct(n, ring.q(), limits)?;
    semistrong_product(&km, &ah, limits)
}

/// Product vertex of each matrix: `code(strict part) * q^n + code(diagonal)`.
pub fn phi_labeling(ring: &TriRing) -> Result<VertexLabeling> {
    let q = ring.q();
    let classes = (q as u64).pow(ring.n() as u32);
    let codes = ring
        .enumerate()
        .map(|a| encode_digits(&a.strict_upper_of(), q) * classes + encode_digits(&a.diagonal_of(), q))
        .collect();
    VertexLabeling::new(codes)
}

fn spot_check_phi(cayley: &Graph, product: &Graph, phi: &VertexLabeling, seed: u64) -> Vec<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = cayley.vertex_count();
    (0..SPOT_CHECKS)
        .map(|_| {
            let x = rng.gen_range(0..v);
            let y = rng.gen_range(0..v);
            let (px, py) = (phi.code(x), phi.code(y));
            let adj = cayley.has_edge(x, y);
            let agrees = adj == product.has_edge(px as usize, py as usize);
            json!([x, y, px, py, adj, agrees])
        })
        .collect()
}

/// Runs one check on one ring, building the ring first.
pub fn run_check(spec: &RingSpec, check: Check, limits: &Limits, seed: u64) -> Result<Verdict> {
    check.applies_to(spec).map_err(|reason| Error::WrongField {
        check: check.name().into(),
        spec: spec.to_string(),
        reason,
    })?;
    Instance::build(spec, limits)?.run(check, seed)
}

pub fn check_prop0(spec: &RingSpec, limits: &Limits) -> Result<Verdict> {
    run_check(spec, Check::Prop0, limits, DEFAULT_SEED)
}

pub fn check_prop1(spec: &RingSpec, limits: &Limits) -> Result<Verdict> {
    run_check(spec, Check::Prop1, limits, DEFAULT_SEED)
}

pub fn check_theorem1(spec: &RingSpec, limits: &Limits) -> Result<Verdict> {
    run_check(spec, Check::Theorem1, limits, DEFAULT_SEED)
}

pub fn check_connectivity_and_diameter(spec: &RingSpec, limits: &Limits) -> Result<Verdict> {
    run_check(spec, Check::Connectivity, limits, DEFAULT_SEED)
}

pub fn check_triameter(spec: &RingSpec, limits: &Limits) -> Result<Verdict> {
    run_check(spec, Check::Triameter, limits, DEFAULT_SEED)
}

pub fn check_clique(spec: &RingSpec, limits: &Limits) -> Result<Verdict> {
    run_check(spec, Check::Clique, limits, DEFAULT_SEED)
}

pub fn check_theorem3(spec: &RingSpec, limits: &Limits, seed: u64) -> Result<Verdict> {
    run_check(spec, Check::Theorem3, limits, seed)
}

pub fn check_quotient(spec: &RingSpec, limits: &Limits) -> Result<Verdict> {
    run_check(spec, Check::Quotient, limits, DEFAULT_SEED)
}

pub fn check_zn_oracles(modulus: u64, limits: &Limits) -> Result<Verdict> {
    run_check(&RingSpec::zn(modulus), Check::Zn, limits, DEFAULT_SEED)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub limits: Limits,
    pub seed: u64,
    /// Restrict to these checks; `None` runs every applicable one.
    pub checks: Option<Vec<Check>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            limits: Limits::default(),
            seed: DEFAULT_SEED,
            checks: None,
        }
    }
}

/// Runs the checks for every spec. Specs are processed concurrently; the
/// result keeps spec order, then check order. Failures, including build
/// errors and inapplicable checks, become failed verdicts.
pub fn run_suite(specs: &[RingSpec], opts: &SuiteOptions) -> Vec<Verdict> {
    specs
        .par_iter()
        .map(|spec| run_spec(spec, opts))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn run_spec(spec: &RingSpec, opts: &SuiteOptions) -> Vec<Verdict> {
    let checks = opts
        .checks
        .clone()
        .unwrap_or_else(|| Check::applicable(spec));
    let start = Instant::now();
    let inst = match Instance::build(spec, &opts.limits) {
        Ok(i) => i,
        Err(e) => {
            let mut v = Verdict::failed("build", spec, &e);
            v.millis = start.elapsed().as_millis() as u64;
            return vec![v];
        }
    };
    checks
        .into_iter()
        .map(|c| {
            inst.run(c, opts.seed)
                .unwrap_or_else(|e| Verdict::failed(c.claim_id(), spec, &e))
        })
        .collect()
}

/// Re-checks a verdict's certificate against a (possibly re-imported)
/// Cayley graph. `None` when the claim carries nothing to re-check.
pub fn reverify(verdict: &Verdict, cayley: &Graph, limits: &Limits) -> Result<Option<bool>> {
    let spec: RingSpec = verdict.spec.parse()?;
    let cert = &verdict.certificate;
    let as_vertices = |v: &Value| -> Result<Vec<usize>> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
    };
    let check: Check = verdict.claim_id.parse()?;
    let ok = match check {
        Check::Theorem1 => {
            let comps = cert["components"]
                .as_array()
                .ok_or_else(|| Error::Parse("missing components".into()))?;
            let mut covered = 0;
            let mut all = true;
            for c in comps {
                let p = Bipartition {
                    part_a: as_vertices(&c["part_a"])?,
                    part_b: as_vertices(&c["part_b"])?,
                };
                covered += p.part_a.len() + p.part_b.len();
                all &= p.verify_complete(cayley)
                    && p.part_a
                        .iter()
                        .chain(&p.part_b)
                        .all(|&x| cayley.degree(x) == if p.part_a.contains(&x) { p.part_b.len() } else { p.part_a.len() });
            }
            all && covered == cayley.vertex_count()
        }
        Check::Connectivity => {
            let pair = as_vertices(&cert["pair"])?;
            let z = cert["midpoint"]
                .as_u64()
                .ok_or_else(|| Error::Parse("missing midpoint".into()))? as usize;
            !cayley.has_edge(pair[0], pair[1]) && cayley.has_edge(pair[0], z) && cayley.has_edge(pair[1], z)
        }
        Check::Triameter => {
            let dm = all_pairs_distances(cayley);
            let t = as_vertices(&cert["triple"])?;
            let w = as_vertices(&cert["witness"])?;
            let claimed = verdict.computed["triameter"].as_u64().map(|x| x as u32);
            dm.triple_sum(t[0], t[1], t[2]) == claimed
                && dm.triple_sum(w[0], w[1], w[2]) == Some(6)
        }
        Check::Clique => {
            let c = as_vertices(&cert["maximum_clique"])?;
            let s = as_vertices(&cert["scalar_matrices"])?;
            is_clique(cayley, &c) && is_clique(cayley, &s)
        }
        Check::Theorem3 => {
            let ring = match Ring::build(&spec, limits)? {
                Ring::Tri(r) => r,
                Ring::Zn(_) => return Err(Error::Parse("theorem3 verdict for Z_n".into())),
            };
            let product = theorem3_product(&ring, limits)?;
            let phi = phi_labeling(&ring)?;
            let seed = verdict.seed.unwrap_or(DEFAULT_SEED);
            let fresh = spot_check_phi(cayley, &product, &phi, seed);
            let recorded = cert["spot_checks"].as_array().cloned().unwrap_or_default();
            fresh.len() == SPOT_CHECKS
                && fresh == recorded
                && fresh.iter().all(|s| s[5].as_bool() == Some(true))
        }
        Check::Prop0 => {
            let d = verdict.expected["degree"].as_u64().map(|x| x as usize);
            cayley.regular_degree() == d
        }
        Check::Prop1 | Check::Quotient | Check::Zn => return Ok(None),
    };
    Ok(Some(ok))
}

/// `diagonal_quotient` rebuilt from scratch, for callers that only hold a
/// spec.
pub fn quotient_matches(spec: &RingSpec, limits: &Limits) -> Result<bool> {
    let (n, q) = match *spec {
        RingSpec::TriangularMatrix { n, .. } => (n, spec.field_order().unwrap_or(0) as u32),
        RingSpec::IntegersMod { .. } => {
            return Err(Error::InvalidParameter("quotient needs a triangular ring".into()))
        }
    };
    Ok(diagonal_quotient(spec, limits)? == antipodal_hamming_direct(n, q, limits)?)
}
