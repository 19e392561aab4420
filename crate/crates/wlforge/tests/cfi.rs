use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wlforge::cfi::{base_library, cfi, indistinguishability_experiment, treewidth_exact, twisted_cfi, TREEWIDTH_CAP};
use wlforge::graph::{families, ColoredGraph};
use wlforge::oracle::find_isomorphism;
use wlforge::wl::distinguish;
use wlforge::Error;

/// Treewidth as the best elimination order found by trying all orders.
fn brute_treewidth(g: &ColoredGraph) -> usize {
    fn orders(rest: Vec<usize>) -> Vec<Vec<usize>> {
        if rest.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (i, &v) in rest.iter().enumerate() {
            let mut others = rest.clone();
            others.remove(i);
            for mut tail in orders(others) {
                tail.insert(0, v);
                out.push(tail);
            }
        }
        out
    }
    let n = g.n();
    let mut best = usize::MAX;
    for order in orders((0..n).collect()) {
        let mut adj: Vec<Vec<bool>> = (0..n).map(|v| (0..n).map(|w| g.has_edge(v, w)).collect()).collect();
        let mut alive = vec![true; n];
        let mut width = 0;
        for &v in &order {
            let nbrs: Vec<usize> = (0..n).filter(|&w| alive[w] && w != v && adj[v][w]).collect();
            width = width.max(nbrs.len());
            for &a in &nbrs {
                for &b in &nbrs {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
            alive[v] = false;
        }
        best = best.min(width);
    }
    best
}

#[test]
fn k4_instances() {
    let k4 = families::complete(4);
    let plain = cfi(&k4, &[]).unwrap();
    assert_eq!(plain.graph.n(), 16);
    assert_eq!(plain.graph.num_edges(), 48);
    assert_eq!(plain.gadget_sizes(), vec![4; 4]);
    let a = cfi(&k4, &[0]).unwrap();
    let b = cfi(&k4, &[1]).unwrap();
    assert!(find_isomorphism(&a.graph, &b.graph).unwrap().is_some());
    let three = cfi(&k4, &[0, 1, 2]).unwrap();
    assert!(find_isomorphism(&a.graph, &three.graph).unwrap().is_some());

    let twisted = twisted_cfi(&k4).unwrap();
    assert_eq!(twisted.graph.n(), 16);
    assert!(find_isomorphism(&plain.graph, &twisted.graph).unwrap().is_none());
    assert!(find_isomorphism(&plain.uncolored(), &twisted.uncolored()).unwrap().is_none());
    for v in 0..4 {
        assert!(find_isomorphism(&twisted.graph, &cfi(&k4, &[v]).unwrap().graph).unwrap().is_some());
    }
}

#[test]
fn construction_errors() {
    let two_triangles = families::disjoint_union(&[families::cycle(3), families::cycle(3)]);
    assert!(cfi(&two_triangles, &[]).is_err(), "disconnected base");
    assert!(cfi(&families::complete(4), &[4]).is_err(), "twist vertex out of range");
    assert!(matches!(treewidth_exact(&families::cycle(TREEWIDTH_CAP + 1)), Err(Error::Cap(_))));
}

#[test]
fn gadget_sizes_follow_degrees() {
    let c6 = cfi(&families::cycle(6), &[]).unwrap();
    assert_eq!(c6.gadget_sizes(), vec![2; 6]);
    assert_eq!(c6.graph.n(), 12);
    let star = families::star(4);
    let inst = cfi(&star, &[]).unwrap();
    let want: Vec<usize> = (0..star.n()).map(|v| 1 << (star.degree(v) - 1)).collect();
    assert_eq!(inst.gadget_sizes(), want);
    for (name, base) in base_library() {
        let inst = cfi(&base, &[]).unwrap();
        assert_eq!(inst.graph.n(), 4 * base.n(), "{name}");
        assert!((0..inst.graph.n()).all(|v| inst.graph.degree(v) == 6), "{name} is not 6-regular");
        // Gadget vertices keep the color of their base vertex.
        assert_eq!(inst.graph.num_colors(), base.num_colors());
    }
}

#[test]
fn parity_decides_isomorphism_over_small_bases() {
    // K4 minus an edge (12 CFI vertices) and C5 (10) fit the search cap.
    let diamond = ColoredGraph::uncolored(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    for base in [diamond, families::cycle(5)] {
        let n = base.n();
        let plain = cfi(&base, &[]).unwrap().uncolored();
        for mask in 0u32..1 << n {
            let u: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let other = cfi(&base, &u).unwrap().uncolored();
            let iso = find_isomorphism(&plain, &other).unwrap().is_some();
            assert_eq!(iso, u.len().is_multiple_of(2), "twist {u:?}");
        }
    }
}

#[test]
fn treewidth_examples_and_oracle() {
    assert_eq!(treewidth_exact(&families::complete(4)).unwrap(), 3);
    assert_eq!(treewidth_exact(&families::cycle(6)).unwrap(), 2);
    let mut r = ChaCha8Rng::seed_from_u64(50);
    for n in 2..=9 {
        assert_eq!(treewidth_exact(&families::random_tree(n, &mut r)).unwrap(), 1);
    }
    assert_eq!(treewidth_exact(&families::complete(1)).unwrap(), 0);
    for n in 1..=7 {
        for _ in 0..5 {
            let g = families::gnp(n, 0.5, &mut r);
            assert_eq!(treewidth_exact(&g).unwrap(), brute_treewidth(&g));
        }
    }
    let tws: Vec<usize> = base_library().iter().map(|(_, g)| treewidth_exact(g).unwrap()).collect();
    assert_eq!(tws, vec![3, 3, 3, 4, 5]);
}

#[test]
fn k4_experiment() {
    let k4 = families::complete(4);
    let report = indistinguishability_experiment("K4", &k4, 3).unwrap();
    assert_eq!(report.tw, 3);
    assert!(!report.records[0].distinguished);
    assert!(!report.records[1].distinguished);
    assert!(report.bound_respected);
    // The uncolored pair is not distinguished either.
    let plain = cfi(&k4, &[]).unwrap().uncolored();
    let twisted = twisted_cfi(&k4).unwrap().uncolored();
    assert!(!distinguish(&plain, &twisted, 2).unwrap());
    let json = serde_json::to_value(&report.records[0]).unwrap();
    for key in ["base", "k", "distinguished", "tw"] {
        assert!(json.get(key).is_some(), "record lacks {key}");
    }
}

#[test]
fn no_library_base_is_separated_below_its_treewidth() {
    for (name, base) in base_library() {
        let tw = treewidth_exact(&base).unwrap();
        let report = indistinguishability_experiment(name, &base, (tw - 1).min(3)).unwrap();
        assert!(report.bound_respected, "{name}");
        assert!(report.records.iter().all(|r| !r.distinguished), "{name}");
    }
}
