//! Executable classifiers for which skew Schur functions are p-positive,
//! which scalar multiples of them are chromatic, and which classical basis
//! elements are chromatic, plus exhaustive verification sweeps.
//!
//! A graph on `n` vertices has a chromatic symmetric function homogeneous of
//! degree `n`, so a degree-`n` target only ever needs searching among graphs
//! on exactly `n` vertices.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::{Caps, Graph};
use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition, SkewDiagram, StripClass};
use crate::symfunc::{to_rational, Basis, PSignature, Rational, SymFunc};

/// Largest vertex count the exhaustive graph search accepts.
pub const GRAPH_SEARCH_CAP: usize = 6;

/// Outcome of asking whether some `c · s_D` is chromatic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    /// `X_graph = scalar · s_D`, with `scalar = ∏ α_i!` over the column profile.
    Realized { scalar: BigUint, graph: Graph },
    /// `s_{D^t}` has power-sum coefficients of both signs, at these partitions.
    NotRealizable {
        witness_positive: Partition,
        witness_negative: Partition,
    },
}

/// Evidence returned by [`ppositivity_classifier`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPositivity {
    pub p_positive: bool,
    pub strip: StripClass,
    pub signature: PSignature,
}

/// Summary of one verification sweep. It passes iff `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scope: String,
    pub instances: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Concatenates failures and sums instance counts and times.
    pub fn merge(scope: impl Into<String>, parts: Vec<VerificationReport>) -> VerificationReport {
        VerificationReport {
            scope: scope.into(),
            instances: parts.iter().map(|r| r.instances).sum(),
            elapsed_ms: parts.iter().map(|r| r.elapsed_ms).sum(),
            failures: parts.into_iter().flat_map(|r| r.failures).collect(),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} instances, {} failures",
            self.scope,
            self.instances,
            self.failures.len()
        )?;
        for failure in &self.failures {
            write!(f, "\n  {failure}")?;
        }
        Ok(())
    }
}

/// Runs `check` over the instances in parallel and collects failure messages
/// in instance order.
pub(crate) fn sweep<T: Sync>(
    scope: String,
    instances: &[T],
    check: impl Fn(&T) -> std::result::Result<(), String> + Sync,
) -> VerificationReport {
    let start = Instant::now();
    let failures: Vec<String> = instances
        .par_iter()
        .filter_map(|x| check(x).err())
        .collect();
    VerificationReport {
        scope,
        instances: instances.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Every skew diagram with `1..=max_size` boxes, one per cell configuration
/// after deleting empty rows and columns, in a fixed order.
pub fn skew_shapes(max_size: usize) -> Vec<SkewDiagram> {
    let mut out = Vec::new();
    for k in 1..=max_size {
        let mut found = BTreeSet::new();
        for rows in compositions(k) {
            let len = rows.len();
            // A normalized diagram has a box in column 1, hence an empty last
            // inner row, and no inner part reaches k.
            for inner in partitions_in_box(len - 1, k - 1) {
                let outer: Vec<usize> = (0..len).map(|i| inner.part(i) + rows[i]).collect();
                let Ok(outer) = Partition::new(outer) else {
                    continue;
                };
                let d = SkewDiagram::new(outer, inner).expect("inner fits by construction");
                if d.normalized() == d {
                    found.insert(d);
                }
            }
        }
        out.extend(found);
    }
    out
}

fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (1..=k)
        .flat_map(|first| {
            compositions(k - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Partitions with at most `rows` parts, each at most `width`.
fn partitions_in_box(rows: usize, width: usize) -> Vec<Partition> {
    fn go(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()).expect("decreasing"));
        if prefix.len() == rows {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            go(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, width, &mut Vec::new(), &mut out);
    out
}

/// Is `s_D` p-positive? Decided by the strip shape of `D` and confirmed
/// against the signs of the actual power-sum expansion.
pub fn ppositivity_classifier(shape: &SkewDiagram) -> Result<PPositivity> {
    let strip = shape.classify_strip();
    let signature = SymFunc::skew_schur(shape).p_signature();
    let horizontal = strip.is_horizontal();
    if horizontal != signature.is_positive() {
        return Err(Error::Internal(format!(
            "{shape}: horizontal strip = {horizontal} but p-signature is {signature:?}"
        )));
    }
    Ok(PPositivity {
        p_positive: horizontal,
        strip,
        signature,
    })
}

/// Finds `c ≠ 0` and a graph `G` with `X_G = c s_D`, or shows none exists.
pub fn realize_skew(shape: &SkewDiagram, caps: &Caps) -> Result<Realization> {
    if shape.size() == 0 {
        return Err(Error::Domain("the empty diagram has no chromatic realization".into()));
    }
    match shape.classify_strip().column_profile() {
        Some(columns) => {
            let graph = Graph::union_of_complete(&columns.0)?;
            let scalar: BigUint = columns.0.iter().map(|&a| factorial(a)).product();
            let x = graph.chromatic_sym(caps)?;
            let expected = SymFunc::skew_schur(shape).scale(&to_rational(scalar.clone()));
            if x != expected {
                return Err(Error::Internal(format!(
                    "{shape}: X of {graph} differs from {scalar} s_D"
                )));
            }
            Ok(Realization::Realized { scalar, graph })
        }
        None => match SymFunc::skew_schur(&shape.transpose()).p_signature() {
            PSignature::Mixed { positive, negative } => Ok(Realization::NotRealizable {
                witness_positive: positive,
                witness_negative: negative,
            }),
            other => Err(Error::Internal(format!(
                "{shape} is not a vertical strip, yet s_(D^t) has signature {other:?}"
            ))),
        },
    }
}

/// Canonical relabelling: the vertex order minimizing the adjacency
/// bitstring read over pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.num_vertices();
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        adj[a - 1][b - 1] = true;
        adj[b - 1][a - 1] = true;
    }
    let mut best: Option<(Vec<bool>, Vec<usize>)> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, 0, &mut |perm| {
        let bits: Vec<bool> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| adj[perm[i]][perm[j]])
            .collect();
        if best.as_ref().is_none_or(|(b, _)| bits < *b) {
            best = Some((bits, perm.to_vec()));
        }
    });
    let (_, perm) = best.expect("at least one permutation");
    // New vertex i is old vertex perm[i].
    let mut position = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        position[old] = new;
    }
    Graph::new(
        n,
        g.edges()
            .iter()
            .map(|&(a, b)| (position[a - 1] + 1, position[b - 1] + 1)),
    )
    .expect("relabelled simple graph")
}

fn for_each_permutation(v: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        visit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        for_each_permutation(v, k + 1, visit);
        v.swap(k, i);
    }
}

/// Every labeled graph on `n` vertices, as edge bitmasks over the pairs
/// `(i, j)`, `i < j`, in lexicographic order.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            Graph::new(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .expect("simple by construction")
        })
        .collect()
}

/// One canonical representative per isomorphism class on `n` vertices, each
/// with its chromatic symmetric function. Cached per `n`.
pub fn graph_catalogue(n: usize) -> Result<Arc<Vec<(Graph, SymFunc)>>> {
    if n == 0 || n > GRAPH_SEARCH_CAP {
        return Err(Error::SearchCapExceeded {
            vertices: n,
            cap: GRAPH_SEARCH_CAP,
        });
    }
    type Slot = Arc<OnceLock<Arc<Vec<(Graph, SymFunc)>>>>;
    static CACHE: OnceLock<Mutex<HashMap<usize, Slot>>> = OnceLock::new();
    let slot = CACHE
        .get_or_init(Default::default)
        .lock()
        .expect("catalogue cache poisoned")
        .entry(n)
        .or_default()
        .clone();
    Ok(slot
        .get_or_init(|| {
            let classes: BTreeSet<Vec<(usize, usize)>> = all_labeled_graphs(n)
                .par_iter()
                .map(|g| canonical_form(g).edges().to_vec())
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            let caps = Caps::default();
            let entries = classes
                .into_par_iter()
                .map(|edges| {
                    let g = Graph::new(n, edges).expect("canonical graph");
                    let x = g.chromatic_sym(&caps).expect("within default caps");
                    (g, x)
                })
                .collect();
            Arc::new(entries)
        })
        .clone())
}

/// Isomorphism-class representatives on `n` vertices whose chromatic
/// symmetric function is exactly `target`.
pub fn find_graphs_with(target: &SymFunc, n: usize) -> Result<Vec<Graph>> {
    if n > GRAPH_SEARCH_CAP {
        return Err(Error::SearchCapExceeded {
            vertices: n,
            cap: GRAPH_SEARCH_CAP,
        });
    }
    if target.homogeneous_degree() != Some(n) {
        return Ok(Vec::new());
    }
    Ok(graph_catalogue(n)?
        .iter()
        .filter(|(_, x)| x == target)
        .map(|(g, _)| g.clone())
        .collect())
}

/// Is `f` a nonzero rational multiple of `g`?
fn proportional(f: &SymFunc, g: &SymFunc) -> bool {
    if f.is_zero() || g.is_zero() {
        return false;
    }
    let mut ratio: Option<Rational> = None;
    let keys: BTreeSet<&Partition> = f.terms().map(|(l, _)| l).chain(g.terms().map(|(l, _)| l)).collect();
    for l in keys {
        let (a, b) = (f.coeff(l), g.coeff(l));
        if a.is_zero() != b.is_zero() {
            return false;
        }
        if a.is_zero() {
            continue;
        }
        let r = a / b;
        match &ratio {
            Some(prev) if *prev != r => return false,
            Some(_) => {}
            None => ratio = Some(r),
        }
    }
    true
}

/// Every skew diagram of size `1..=max_size`: the strip predicate and the
/// sign of the power-sum expansion agree.
pub fn verify_ppositive(max_size: usize) -> VerificationReport {
    let shapes = skew_shapes(max_size);
    sweep(
        format!("p-positivity of s_D <=> D horizontal strip, |D| <= {max_size}"),
        &shapes,
        |d| ppositivity_classifier(d).map(|_| ()).map_err(|e| e.to_string()),
    )
}

/// Vertical strips: `X_{∪K_{α_i}} = (∏ α_i!) s_D` exactly.
pub fn verify_skew_realized(max_size: usize, caps: &Caps) -> VerificationReport {
    let shapes: Vec<SkewDiagram> = skew_shapes(max_size)
        .into_iter()
        .filter(|d| d.classify_strip().is_vertical())
        .collect();
    sweep(
        format!("vertical strips realized by unions of complete graphs, |D| <= {max_size}"),
        &shapes,
        |d| {
            let columns = d.classify_strip().column_profile().cloned().expect("vertical");
            match realize_skew(d, caps).map_err(|e| e.to_string())? {
                Realization::Realized { scalar, graph } => {
                    let x = graph.chromatic_sym(caps).map_err(|e| e.to_string())?;
                    let expected: BigUint = columns.0.iter().map(|&a| factorial(a)).product();
                    let rhs = SymFunc::skew_schur(d).scale(&to_rational(scalar.clone()));
                    if scalar != expected || x != rhs {
                        return Err(format!("{d}: realization by {graph} with scalar {scalar} fails"));
                    }
                    Ok(())
                }
                other => Err(format!("{d}: vertical strip reported as {other:?}")),
            }
        },
    )
}

/// Non-vertical strips: `s_{D^t}` has coefficients of both strict signs,
/// re-read at the reported witnesses.
pub fn verify_skew_unrealizable(max_size: usize, caps: &Caps) -> VerificationReport {
    let shapes: Vec<SkewDiagram> = skew_shapes(max_size)
        .into_iter()
        .filter(|d| !d.classify_strip().is_vertical())
        .collect();
    sweep(
        format!("non-vertical strips have mixed-sign s_(D^t), |D| <= {max_size}"),
        &shapes,
        |d| match realize_skew(d, caps).map_err(|e| e.to_string())? {
            Realization::NotRealizable {
                witness_positive,
                witness_negative,
            } => {
                let st = SymFunc::skew_schur(&d.transpose());
                let (a, b) = (st.coeff(&witness_positive), st.coeff(&witness_negative));
                if a.is_positive() && b.is_negative() {
                    Ok(())
                } else {
                    Err(format!("{d}: witnesses {witness_positive} ({a}) / {witness_negative} ({b}) do not have opposite signs"))
                }
            }
            other => Err(format!("{d}: non-vertical strip reported as {other:?}")),
        },
    )
}

pub fn verify_skew_theorem(max_size: usize, caps: &Caps) -> VerificationReport {
    VerificationReport::merge(
        format!("chromatic multiples of skew Schur functions, |D| <= {max_size}"),
        vec![
            verify_skew_realized(max_size, caps),
            verify_skew_unrealizable(max_size, caps),
        ],
    )
}

/// Is `b_λ` one of the listed coincidences with an elementary function?
/// `h_{(1^n)} = p_{(1^n)} = e_{(1^n)}` and `m_{(1^n)} = s_{(1^n)} = e_{(n)}`.
pub fn coincides_with_elementary(b: Basis, lambda: &Partition) -> Option<Partition> {
    let n = lambda.size();
    if *lambda != Partition::column(n) || n == 0 {
        return None;
    }
    match b {
        Basis::E => Some(lambda.clone()),
        Basis::H | Basis::P => Some(Partition::column(n)),
        Basis::M | Basis::S => Some(Partition::row(n)),
    }
}

/// The scalar `c` forced on any realization `X_G = c b_λ`: every `X_G` on
/// `n` vertices has `m_{(1^n)}`-coefficient `n!`. `None` when `b_λ` has no
/// `m_{(1^n)}` term, so no multiple can be chromatic.
pub fn forced_scalar(f: &SymFunc, n: usize) -> Option<Rational> {
    let coeff = f
        .to_basis(Basis::M)
        .remove(&Partition::column(n))
        .unwrap_or_else(Rational::zero);
    if coeff.is_zero() {
        None
    } else {
        Some(to_rational(factorial(n)) / coeff)
    }
}

enum BasesInstance {
    Elementary(Partition),
    Other(Basis, Partition),
}

/// Which classical basis elements of degree `1..=max_n` have a chromatic
/// scalar multiple, searched over all graphs on the matching vertex count.
pub fn verify_bases_theorem(max_n: usize, graph_n_cap: usize) -> Result<VerificationReport> {
    if max_n > graph_n_cap || graph_n_cap > GRAPH_SEARCH_CAP {
        return Err(Error::SearchCapExceeded {
            vertices: max_n.max(graph_n_cap),
            cap: GRAPH_SEARCH_CAP,
        });
    }
    for n in 1..=max_n {
        graph_catalogue(n)?;
    }
    let caps = Caps::default();
    let mut instances = Vec::new();
    for n in 1..=max_n {
        for lambda in partitions_of(n) {
            instances.push(BasesInstance::Elementary(lambda.clone()));
            for b in [Basis::H, Basis::M, Basis::P, Basis::S] {
                instances.push(BasesInstance::Other(b, lambda.clone()));
            }
        }
    }
    Ok(sweep(
        format!("chromatic multiples of e, h, m, p, s basis elements, n <= {max_n}, graphs on <= {graph_n_cap} vertices"),
        &instances,
        |inst| match inst {
            BasesInstance::Elementary(lambda) => check_elementary(lambda, &caps),
            BasesInstance::Other(b, lambda) => check_other_basis(*b, lambda),
        },
    ))
}

fn check_elementary(lambda: &Partition, caps: &Caps) -> std::result::Result<(), String> {
    let n = lambda.size();
    let graph = Graph::union_of_complete(lambda.parts()).map_err(|e| e.to_string())?;
    let x = graph.chromatic_sym(caps).map_err(|e| e.to_string())?;
    let e = SymFunc::from_basis(Basis::E, lambda);
    if e.scale(&to_rational(lambda.part_factorials())) != x {
        return Err(format!("e{lambda} * prod(lambda_i!) != X of {graph}"));
    }
    let found = find_graphs_with(&x, n).map_err(|e| e.to_string())?;
    let canon = canonical_form(&graph);
    if !found.contains(&canon) {
        return Err(format!("search for X of {graph} missed it"));
    }
    Ok(())
}

fn check_other_basis(b: Basis, lambda: &Partition) -> std::result::Result<(), String> {
    let n = lambda.size();
    let f = SymFunc::from_basis(b, lambda);
    let catalogue = graph_catalogue(n).map_err(|e| e.to_string())?;
    let any_proportional = catalogue.iter().any(|(_, x)| proportional(x, &f));
    let forced = forced_scalar(&f, n);
    let by_forced_scalar = match &forced {
        Some(c) => !find_graphs_with(&f.scale(c), n).map_err(|e| e.to_string())?.is_empty(),
        None => false,
    };
    if any_proportional != by_forced_scalar {
        return Err(format!(
            "{b}{lambda}: forced-scalar search ({by_forced_scalar}) disagrees with proportionality scan ({any_proportional})"
        ));
    }
    match coincides_with_elementary(b, lambda) {
        Some(mu) => {
            if f != SymFunc::from_basis(Basis::E, &mu) {
                return Err(format!("{b}{lambda} should equal e{mu}"));
            }
            if !by_forced_scalar {
                return Err(format!("{b}{lambda} = e{mu} should be realizable"));
            }
        }
        None => {
            if by_forced_scalar {
                return Err(format!("{b}{lambda} has a chromatic multiple at scalar {forced:?}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(s: &str) -> SkewDiagram {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// All `μ ⊆ λ` inside a box, normalized and deduplicated.
    fn brute_force_shapes(size: usize) -> BTreeSet<SkewDiagram> {
        let side = 2 * size;
        let mut out = BTreeSet::new();
        for outer in partitions_in_box(side, side) {
            if outer.size() < size {
                continue;
            }
            for inner in partitions_in_box(outer.len(), side) {
                if outer.contains(&inner) && outer.size() - inner.size() == size {
                    out.insert(SkewDiagram::new(outer.clone(), inner).unwrap().normalized());
                }
            }
        }
        out
    }

    #[test]
    fn shape_enumeration_matches_brute_force() {
        for size in 1..=4 {
            let fast: BTreeSet<_> = skew_shapes(size).into_iter().filter(|d| d.size() == size).collect();
            assert_eq!(fast, brute_force_shapes(size), "size {size}");
        }
        assert_eq!(skew_shapes(1), vec![skew("[1]/[]")]);
    }

    #[test]
    fn classifier_examples() {
        assert!(ppositivity_classifier(&skew("[3,1]/[1]")).unwrap().p_positive);
        let e2 = ppositivity_classifier(&skew("[1,1]/[]")).unwrap();
        assert!(!e2.p_positive);
        assert!(matches!(e2.signature, PSignature::Mixed { ref negative, .. } if *negative == part("[2]")));
        assert!(!ppositivity_classifier(&skew("[6,4,4,1]/[3,2]")).unwrap().p_positive);
    }

    #[test]
    fn realizations() {
        let caps = Caps::default();
        assert_eq!(
            realize_skew(&skew("[1,1]/[]"), &caps).unwrap(),
            Realization::Realized {
                scalar: BigUint::from(2u32),
                graph: Graph::complete(2).unwrap()
            }
        );
        assert_eq!(
            realize_skew(&skew("[2,1,1]/[1]"), &caps).unwrap(),
            Realization::Realized {
                scalar: BigUint::from(2u32),
                graph: Graph::union_of_complete(&[2, 1]).unwrap()
            }
        );
        match realize_skew(&skew("[2,2]/[]"), &caps).unwrap() {
            Realization::NotRealizable {
                witness_positive,
                witness_negative,
            } => {
                let s22 = SymFunc::skew_schur(&skew("[2,2]/[]"));
                assert!(s22.coeff(&witness_positive).is_positive());
                assert!(s22.coeff(&witness_negative).is_negative());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(realize_skew(&skew("[2]/[2]"), &caps).is_err());
    }

    #[test]
    fn canonical_forms_identify_isomorphic_graphs() {
        let a = Graph::new(4, [(1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(4, 1), (3, 4)]).unwrap();
        let c = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&c));
        let counts: Vec<usize> = (1..=5).map(|n| graph_catalogue(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn graph_search() {
        let e2 = SymFunc::from_basis(Basis::E, &part("[2]"));
        let two_e2 = e2.scale(&Rational::from_integer(2.into()));
        assert_eq!(find_graphs_with(&two_e2, 2).unwrap(), vec![Graph::complete(2).unwrap()]);
        assert!(find_graphs_with(&SymFunc::power_sum(part("[2]")), 2).unwrap().is_empty());
        assert_eq!(
            find_graphs_with(&SymFunc::power_sum(part("[1]")), 1).unwrap(),
            vec![Graph::complete(1).unwrap()]
        );
        assert!(matches!(
            find_graphs_with(&SymFunc::one(), 7),
            Err(Error::SearchCapExceeded { .. })
        ));
    }

    #[test]
    fn forced_scalars() {
        let s2 = SymFunc::from_basis(Basis::S, &part("[2]"));
        // s_2 = m_2 + m_11, so the forced scalar is 2!/1.
        assert_eq!(forced_scalar(&s2, 2), Some(Rational::from_integer(2.into())));
        assert!(find_graphs_with(&s2, 2).unwrap().is_empty());
        let m2 = SymFunc::from_basis(Basis::M, &part("[2]"));
        assert_eq!(forced_scalar(&m2, 2), None);
        let h11 = SymFunc::from_basis(Basis::H, &part("[1,1]"));
        assert_eq!(coincides_with_elementary(Basis::H, &part("[1,1]")), Some(part("[1,1]")));
        let c = forced_scalar(&h11, 2).unwrap();
        assert_eq!(
            find_graphs_with(&h11.scale(&c), 2).unwrap(),
            vec![Graph::edgeless(2).unwrap()]
        );
    }

    #[test]
    fn small_sweeps_pass() {
        let caps = Caps::default();
        let r = verify_ppositive(3);
        assert!(r.passed(), "{r}");
        assert!(r.instances >= 1 + 3 + 8);
        let r = verify_ppositive(1);
        assert!(r.passed() && r.instances == 1);
        assert!(verify_skew_theorem(4, &caps).passed());
        assert!(verify_skew_theorem(1, &caps).passed());
        let r = verify_bases_theorem(3, 3).unwrap();
        assert!(r.passed(), "{r}");
        assert!(verify_bases_theorem(5, 4).is_err());
    }
}
