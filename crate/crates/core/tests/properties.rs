use drg_core::egs::{get_parents_egs, EgsParams};
use drg_core::graph::DagAdjacency;
use drg_core::indegree_reduction::{flat_index, from_flat_index, LowIndegParams, ReducedNode};
use drg_core::verification::{
    depth_robustness_exact, is_delta_local_expander, longest_path, longest_path_avoiding,
    valiant_reduce,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn egs_local_expansion_holds_with_small_overrides() {
    for n in [8, 16] {
        for layers in [1, 2] {
            let g = EgsParams::new(n, 0.25, Some(layers)).unwrap().build();
            assert!(
                is_delta_local_expander(&g, 0.25).unwrap().is_pass(),
                "N={n} layers={layers}"
            );
        }
    }
}

#[test]
fn egs_build_agrees_with_pointwise_queries() {
    for n in [1usize, 2, 4, 32, 128] {
        let params = EgsParams::new(n, 0.25, None).unwrap();
        let g = params.build();
        assert_eq!(g.n(), n);
        assert!(g.max_indegree() <= params.max_indegree_bound());
        for v in 1..=n {
            assert_eq!(
                g.parents(v),
                get_parents_egs(0.25, v, n).unwrap().as_slice()
            );
            assert!(g.parents(v).iter().all(|&u| u < v));
        }
    }
}

#[test]
fn gadget_matches_definition() {
    let params = LowIndegParams::new(EgsParams::new(8, 0.25, Some(1)).unwrap());
    let beta = params.beta();
    let base = params.base().build();
    let g = params.build();
    for z in 1..=g.n() {
        let node = from_flat_index(z, beta);
        assert_eq!(flat_index(node, beta), z);
        let mut want = Vec::new();
        if node.i > 1 {
            want.push(flat_index(ReducedNode::new(node.v, node.i - 1), beta));
        } else if node.v > 1 {
            want.push(flat_index(ReducedNode::new(node.v - 1, 2 * beta), beta));
        }
        if let Some(&u) = base.parents(node.v).get(node.i - 1) {
            want.push(flat_index(ReducedNode::new(u, 2 * beta), beta));
        }
        want.sort_unstable();
        want.dedup();
        assert_eq!(g.parents(z), want.as_slice(), "node {node:?}");
    }
    assert_eq!(longest_path(&g), g.n() - 1);
}

#[test]
fn transfer_scales_with_path_length() {
    let params = LowIndegParams::new(EgsParams::new(8, 0.25, Some(1)).unwrap());
    let base = params.base().build();
    let reduced = params.build();
    for e in 0..=2 {
        let b = depth_robustness_exact(&base, e).unwrap().residual_depth;
        let r = depth_robustness_exact(&reduced, e).unwrap().residual_depth;
        assert!(
            r >= b * params.path_len(),
            "e={e}: {r} < {b} x {}",
            params.path_len()
        );
    }
}

#[test]
fn attack_never_beats_exact_minimum() {
    for n in [8usize, 16] {
        let g = EgsParams::new(n, 0.25, Some(1)).unwrap().build();
        for i in 1..=3 {
            let attack = valiant_reduce(&g, i).unwrap();
            let size = attack.report.worst_set.len();
            if size <= 3 {
                let exact = depth_robustness_exact(&g, size).unwrap();
                assert!(exact.residual_depth <= attack.report.residual_depth);
            }
            assert!(attack.depth_within_bound(), "N={n} i={i}");
        }
    }
}

fn random_dag(n: usize, p: f64, seed: u64) -> DagAdjacency {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    DagAdjacency::from_fn(n, |v| Ok((1..v).filter(|_| rng.gen_bool(p)).collect())).unwrap()
}

proptest! {
    #[test]
    fn attack_meets_bounds_on_power_of_two_sizes(k in 1u32..6, p in 0.05f64..0.9, seed: u64, i in 1usize..4) {
        let g = random_dag(1 << k, p, seed);
        let rep = valiant_reduce(&g, i).unwrap();
        prop_assert_eq!(rep.report.residual_depth, longest_path_avoiding(&g, &rep.report.worst_set));
        prop_assert!(rep.depth_within_bound());
        prop_assert!(rep.set_within_bound());
    }

    #[test]
    fn attack_depth_follows_remaining_label_bits(n in 2usize..40, p in 0.05f64..0.9, seed: u64, i in 1usize..4) {
        let g = random_dag(n, p, seed);
        let rep = valiant_reduce(&g, i).unwrap();
        let remaining = rep.bits.saturating_sub(i) as u32;
        prop_assert!(rep.report.residual_depth < 1 << remaining);
        prop_assert!(rep.set_within_bound());
    }

    #[test]
    fn exact_robustness_is_monotone_in_budget(n in 1usize..14, p in 0.1f64..0.8, seed: u64) {
        let g = random_dag(n, p, seed);
        let mut last = longest_path(&g);
        for e in 0..=3 {
            let r = depth_robustness_exact(&g, e).unwrap();
            prop_assert!(r.worst_set.len() <= e);
            prop_assert_eq!(r.residual_depth, longest_path_avoiding(&g, &r.worst_set));
            prop_assert!(r.residual_depth <= last);
            last = r.residual_depth;
        }
    }
}
