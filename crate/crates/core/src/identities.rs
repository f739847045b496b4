//! Sweeps over the structural identities the classification rests on: the
//! two expansions of `X_G`, the product rule, `ω`-positivity, the colouring
//! specialization, and the integrity of the basis conversions.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chromatic::{Caps, Graph};
use crate::classify::{all_labeled_graphs, graph_catalogue, skew_shapes, sweep, VerificationReport};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::{Basis, Rational, SymFunc};

/// Bounds for [`verify_identities`]. Defaults are the acceptance bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityBounds {
    /// Both expansions of `X_G` on every labeled graph up to this order.
    pub expansions_exhaustive_n: usize,
    /// Random graphs per order for the expansion check.
    pub expansions_random_count: usize,
    pub expansions_random_orders: Vec<usize>,
    pub product_pairs: usize,
    pub product_max_n: usize,
    pub omega_positivity_n: usize,
    pub specialization_n: usize,
    pub specialization_colours: usize,
    pub round_trip_degree: usize,
    pub orthonormal_degree: usize,
    pub omega_shape_size: usize,
    pub complete_homogeneous_degree: usize,
    pub seed: u64,
}

impl Default for IdentityBounds {
    fn default() -> Self {
        IdentityBounds {
            expansions_exhaustive_n: 5,
            expansions_random_count: 100,
            expansions_random_orders: vec![6, 7],
            product_pairs: 100,
            product_max_n: 8,
            omega_positivity_n: 6,
            specialization_n: 5,
            specialization_colours: 4,
            round_trip_degree: 10,
            orthonormal_degree: 7,
            omega_shape_size: 8,
            complete_homogeneous_degree: 10,
            seed: 0x5eed,
        }
    }
}

/// Graph on `n` vertices with each edge present independently with
/// probability one half.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::new(n, edges).expect("simple by construction")
}

/// Edge-subset and stable-partition expansions of `X_G` agree.
pub fn verify_expansions(bounds: &IdentityBounds) -> VerificationReport {
    let mut graphs: Vec<Graph> = (1..=bounds.expansions_exhaustive_n)
        .flat_map(all_labeled_graphs)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for &n in &bounds.expansions_random_orders {
        graphs.extend((0..bounds.expansions_random_count).map(|_| random_graph(&mut rng, n)));
    }
    let caps = Caps::default();
    sweep(
        format!(
            "edge-subset = stable-partition expansion: all graphs n <= {}, {} random each at n in {:?}",
            bounds.expansions_exhaustive_n, bounds.expansions_random_count, bounds.expansions_random_orders
        ),
        &graphs,
        |g| {
            let a = g.chromatic_sym_edges(&caps).map_err(|e| e.to_string())?;
            let b = g.chromatic_sym_stable(&caps).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("{g}: expansions differ"));
            }
            let m = a.to_basis(Basis::M);
            let n = g.num_vertices();
            let expected = crate::chromatic::factorial_rational(n);
            if m.get(&Partition::column(n)) != Some(&expected) {
                return Err(format!("{g}: m_(1^n) coefficient is not n!"));
            }
            Ok(())
        },
    )
}

/// `X_{G ∪ H} = X_G X_H` on random pairs.
pub fn verify_product_rule(bounds: &IdentityBounds) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed ^ 0x9e37_79b9);
    let pairs: Vec<(Graph, Graph)> = (0..bounds.product_pairs)
        .map(|_| {
            let n1 = rng.gen_range(1..bounds.product_max_n.max(2));
            let n2 = rng.gen_range(1..=bounds.product_max_n.saturating_sub(n1).max(1));
            (random_graph(&mut rng, n1), random_graph(&mut rng, n2))
        })
        .collect();
    let caps = Caps::default();
    sweep(
        format!(
            "X of a disjoint union is the product, {} random pairs with n1 + n2 <= {}",
            bounds.product_pairs, bounds.product_max_n
        ),
        &pairs,
        |(g, h)| {
            let x = |g: &Graph| g.chromatic_sym(&caps).map_err(|e| e.to_string());
            if x(&g.disjoint_union(h))? != &x(g)? * &x(h)? {
                return Err(format!("{g} + {h}: product rule fails"));
            }
            Ok(())
        },
    )
}

/// `ω(X_G)` is p-positive on every graph up to isomorphism.
pub fn verify_omega_positivity(bounds: &IdentityBounds) -> VerificationReport {
    let graphs: Vec<(Graph, SymFunc)> = (1..=bounds.omega_positivity_n)
        .flat_map(|n| {
            graph_catalogue(n)
                .map(|c| c.as_ref().clone())
                .unwrap_or_default()
        })
        .collect();
    let mut report = sweep(
        format!(
            "omega(X_G) is p-positive, all graphs n <= {} up to isomorphism",
            bounds.omega_positivity_n
        ),
        &graphs,
        |(g, x)| {
            if x.omega().p_signature().is_positive() {
                Ok(())
            } else {
                Err(format!("{g}: omega(X_G) has signature {:?}", x.omega().p_signature()))
            }
        },
    );
    if bounds.omega_positivity_n > crate::classify::GRAPH_SEARCH_CAP {
        report.failures.push(format!(
            "requested n <= {} exceeds the graph search cap {}",
            bounds.omega_positivity_n,
            crate::classify::GRAPH_SEARCH_CAP
        ));
    }
    report
}

/// `X_G(1, …, 1, 0, …)` with `k` ones counts proper `k`-colourings.
pub fn verify_specialization(bounds: &IdentityBounds) -> VerificationReport {
    let graphs: Vec<Graph> = (1..=bounds.specialization_n).flat_map(all_labeled_graphs).collect();
    let caps = Caps::default();
    let colours = bounds.specialization_colours;
    sweep(
        format!(
            "X_G at k ones counts proper k-colourings, all graphs n <= {}, k <= {colours}",
            bounds.specialization_n
        ),
        &graphs,
        |g| {
            let x = g.chromatic_sym(&caps).map_err(|e| e.to_string())?;
            for k in 0..=colours {
                let value = if k == 0 {
                    x.as_constant().unwrap_or_else(|| Rational::from_integer(0.into()))
                } else {
                    x.expand_in_variables(k).evaluate_at_ones()
                };
                let count = Rational::from_integer(g.count_proper_colourings(k).into());
                if value != count {
                    return Err(format!("{g}, k = {k}: X_G gives {value}, brute force {count}"));
                }
            }
            Ok(())
        },
    )
}

enum IntegrityCheck {
    RoundTrip(Basis, Partition),
    Orthonormal(usize),
    Omega(crate::partition::SkewDiagram),
    OmegaInvolution(Basis, Partition),
    CompleteHomogeneous(usize),
}

/// Conversions round-trip, Schur functions are orthonormal, `ω` is an
/// involution matching transposition, and `h_r` in power sums agrees with
/// `Σ_μ m_μ` built from Kostka numbers.
pub fn verify_basis_integrity(bounds: &IdentityBounds) -> VerificationReport {
    let mut checks = Vec::new();
    for n in 0..=bounds.round_trip_degree {
        for lambda in partitions_of(n) {
            for b in Basis::ALL {
                checks.push(IntegrityCheck::RoundTrip(b, lambda.clone()));
            }
        }
    }
    for n in 0..=bounds.omega_shape_size {
        for lambda in partitions_of(n) {
            for b in Basis::ALL {
                checks.push(IntegrityCheck::OmegaInvolution(b, lambda.clone()));
            }
        }
    }
    checks.extend((0..=bounds.orthonormal_degree).map(IntegrityCheck::Orthonormal));
    checks.extend(skew_shapes(bounds.omega_shape_size).into_iter().map(IntegrityCheck::Omega));
    checks.extend((1..=bounds.complete_homogeneous_degree).map(IntegrityCheck::CompleteHomogeneous));
    sweep(
        format!(
            "basis integrity: round trips to degree {}, orthonormality to {}, omega to size {}, h_r to {}",
            bounds.round_trip_degree,
            bounds.orthonormal_degree,
            bounds.omega_shape_size,
            bounds.complete_homogeneous_degree
        ),
        &checks,
        |check| match check {
            IntegrityCheck::RoundTrip(b, lambda) => {
                let coeffs = SymFunc::from_basis(*b, lambda).to_basis(*b);
                let point = BTreeMap::from([(lambda.clone(), Rational::from_integer(1.into()))]);
                if coeffs == point {
                    Ok(())
                } else {
                    Err(format!("{b}{lambda} does not round-trip"))
                }
            }
            IntegrityCheck::OmegaInvolution(b, lambda) => {
                let f = SymFunc::from_basis(*b, lambda);
                if f.omega().omega() == f {
                    Ok(())
                } else {
                    Err(format!("omega is not an involution on {b}{lambda}"))
                }
            }
            IntegrityCheck::Orthonormal(n) => {
                let schur: Vec<(Partition, SymFunc)> = partitions_of(*n)
                    .into_iter()
                    .map(|l| (l.clone(), SymFunc::from_basis(Basis::S, &l)))
                    .collect();
                for (l1, s1) in &schur {
                    for (l2, s2) in &schur {
                        let expected = Rational::from_integer(u8::from(l1 == l2).into());
                        if s1.scalar_product(s2) != expected {
                            return Err(format!("<s{l1}, s{l2}> != {expected}"));
                        }
                    }
                }
                Ok(())
            }
            IntegrityCheck::Omega(d) => {
                if SymFunc::skew_schur(d).omega() == SymFunc::skew_schur(&d.transpose()) {
                    Ok(())
                } else {
                    Err(format!("omega(s_{d}) != s of the transpose"))
                }
            }
            IntegrityCheck::CompleteHomogeneous(r) => {
                let via_power_sums = SymFunc::from_basis(Basis::H, &Partition::row(*r));
                let via_kostka = SymFunc::from_basis_terms(
                    Basis::M,
                    partitions_of(*r)
                        .into_iter()
                        .map(|mu| (mu, Rational::from_integer(1.into()))),
                );
                if via_power_sums == via_kostka {
                    Ok(())
                } else {
                    Err(format!("h_{r} from power sums differs from the sum of m_mu"))
                }
            }
        },
    )
}

/// All identity sweeps, merged.
pub fn verify_identities(bounds: &IdentityBounds) -> VerificationReport {
    VerificationReport::merge(
        "structural identities",
        vec![
            verify_expansions(bounds),
            verify_product_rule(bounds),
            verify_omega_positivity(bounds),
            verify_specialization(bounds),
            verify_basis_integrity(bounds),
        ],
    )
}
