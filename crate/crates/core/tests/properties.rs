//! Property tests for the walk algebra, graph invariants, and the folded
//! cover, driven by random walks in a pool of small family graphs.

use std::sync::Arc;

use proptest::prelude::*;

use graph_homotopy::*;

fn graph_pool() -> Vec<Arc<Graph>> {
    [
        FamilySpec::Cycle(4),
        FamilySpec::Cycle(5),
        FamilySpec::Cycle(6),
        FamilySpec::Complete(4),
        FamilySpec::Complete(5),
        FamilySpec::Wheel(5),
        FamilySpec::CompleteBipartite(2, 3),
        FamilySpec::Kneser(5, 2),
        FamilySpec::LoopedPath(3),
        FamilySpec::PaperG,
        FamilySpec::PaperGTilde,
    ]
    .iter()
    .map(|s| Arc::new(generate(s).unwrap()))
    .collect()
}

/// Builds a walk from a start-vertex choice and a sequence of neighbor
/// choices, so shrinking stays inside valid walks.
fn walk_from_choices(g: &Arc<Graph>, start: usize, choices: &[usize]) -> Walk {
    let mut seq = vec![VertexIdExt::nth(g, start)];
    for &c in choices {
        let cur = *seq.last().unwrap();
        let nbrs = g.neighbors(cur);
        seq.push(nbrs[c % nbrs.len()]);
    }
    Walk::new(g.clone(), seq).unwrap()
}

/// Small helper because VertexId construction is index-based.
trait VertexIdExt {
    fn nth(g: &Graph, i: usize) -> VertexId;
}
impl VertexIdExt for VertexId {
    fn nth(g: &Graph, i: usize) -> VertexId {
        g.vertices().nth(i % g.order()).unwrap()
    }
}

fn arb_graph_walk(max_len: usize) -> impl Strategy<Value = (Arc<Graph>, Walk)> {
    let pool = graph_pool();
    (0..pool.len(), any::<usize>(), proptest::collection::vec(any::<usize>(), 0..=max_len))
        .prop_map(move |(gi, start, choices)| {
            let g = pool[gi].clone();
            let w = walk_from_choices(&g, start, &choices);
            (g, w)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn neighborhood_symmetry((g, _) in arb_graph_walk(0)) {
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                prop_assert!(g.neighbors(w).contains(&v));
            }
        }
    }

    #[test]
    fn n2_walk_count_is_degree_sum((g, w) in arb_graph_walk(0)) {
        let v = w.start();
        let count = g.n2_walks(v).unwrap().len();
        let expected: usize = g.neighbors(v).iter().map(|&x| g.degree(x)).sum();
        prop_assert_eq!(count, expected);
    }

    #[test]
    fn prune_normal_form_is_idempotent_and_prune_free((_, w) in arb_graph_walk(8)) {
        let nf = w.prune_normal_form();
        prop_assert!(nf.is_prune_free());
        prop_assert_eq!(nf.prune_normal_form(), nf.clone());
        prop_assert_eq!(nf.start(), w.start());
        prop_assert_eq!(nf.end(), w.end());
    }

    #[test]
    fn spider_moves_are_reversible((_, w) in arb_graph_walk(6)) {
        for mv in w.spider_moves() {
            let old = w.seq()[mv.position];
            let moved = w.apply_spider(mv).unwrap();
            let back = moved
                .apply_spider(WalkSpiderMove { position: mv.position, replacement: old })
                .unwrap();
            prop_assert_eq!(back, w.clone());
        }
    }

    #[test]
    fn concat_is_associative_with_identity((g, w) in arb_graph_walk(5)) {
        let id_start = Walk::identity(&g, w.start());
        let id_end = Walk::identity(&g, w.end());
        prop_assert_eq!(id_start.concat(&w).unwrap(), w.clone());
        prop_assert_eq!(w.concat(&id_end).unwrap(), w.clone());
        let r = w.reverse();
        let left = w.concat(&r).unwrap().concat(&w).unwrap();
        let right = w.concat(&r.concat(&w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cancellation_is_oracle_trivial((g, w) in arb_graph_walk(4)) {
        let loopy = w.concat(&w.reverse()).unwrap();
        let id = Walk::identity(&g, w.start());
        let bounds = OracleBounds { max_len: 2 * w.len().max(1), max_states: 200_000 };
        prop_assert_eq!(
            oracle_homotopic_rel_endpoints(&loopy, &id, bounds).unwrap(),
            OracleVerdict::Yes
        );
    }

    #[test]
    fn oracle_yes_is_symmetric((_, w) in arb_graph_walk(5)) {
        // Perturb by one spider move when possible; symmetric verdicts.
        if let Some(&mv) = w.spider_moves().first() {
            let w2 = w.apply_spider(mv).unwrap();
            let bounds = OracleBounds { max_len: w.len() + w2.len() + 4, max_states: 100_000 };
            let ab = oracle_homotopic_rel_endpoints(&w, &w2, bounds).unwrap();
            let ba = oracle_homotopic_rel_endpoints(&w2, &w, bounds).unwrap();
            prop_assert_eq!(ab, OracleVerdict::Yes);
            prop_assert_eq!(ba, OracleVerdict::Yes);
        }
    }

    #[test]
    fn folded_cover_lift_ignores_prunes((g, w) in arb_graph_walk(6)) {
        let nf = w.prune_normal_form();
        let depth = nf.len() + 2;
        let u = build_folded_cover(&g, w.start(), depth).unwrap();
        prop_assert_eq!(u.lift(&w).unwrap(), u.lift(&nf).unwrap());
    }

    #[test]
    fn round_trip_preserves_structure((g, _) in arb_graph_walk(0)) {
        let text = g.to_file_string();
        let h = load_graph(&text).unwrap();
        prop_assert_eq!(g.order(), h.order());
        prop_assert_eq!(g.size(), h.size());
        let iso = are_isomorphic(&g, &Arc::new(h));
        prop_assert!(iso.is_some());
    }
}

#[test]
fn diamond_count_is_relabeling_invariant() {
    for spec in [FamilySpec::Complete(4), FamilySpec::Wheel(5), FamilySpec::Kneser(6, 2), FamilySpec::PaperG] {
        let g = generate(&spec).unwrap();
        // Relabel every vertex and rebuild.
        let vs: Vec<String> = g.vertices().map(|v| format!("r{}", g.token(v))).collect();
        let mut vs_rev = vs.clone();
        vs_rev.reverse();
        let es: Vec<(String, String)> = g
            .edges()
            .map(|(a, b)| (format!("r{}", g.token(a)), format!("r{}", g.token(b))))
            .collect();
        let h = Graph::build("relabeled", &vs_rev, &es).unwrap();
        assert_eq!(g.diamonds().len(), h.diamonds().len(), "family {:?}", spec);
    }
}

/// Classes at a deeper truncation refine classes at a shallower one: the
/// class map induced on walks of reduced length at most `d - 2` is
/// well-defined and surjective, and injective when the verdicts are stable.
#[test]
fn monotone_refinement_of_truncations() {
    for (spec, v, d) in [
        (FamilySpec::Cycle(5), "0", 4),
        (FamilySpec::Complete(4), "1", 4),
        (FamilySpec::PaperG, "a", 5),
        (FamilySpec::Wheel(5), "c", 5),
    ] {
        let g = Arc::new(generate(&spec).unwrap());
        let v = g.vertex(v).unwrap();
        let shallow = build_folded_cover(&g, v, d).unwrap();
        let deep = build_folded_cover(&g, v, d + 2).unwrap();
        let walks = prune_free_walks(&g, v, d - 2);
        let mut mapping: Vec<Option<ClassId>> = vec![None; shallow.class_count()];
        for w in &walks {
            let s = shallow.lift(w).unwrap();
            let dd = deep.lift(w).unwrap();
            match mapping[s.index()] {
                None => mapping[s.index()] = Some(dd),
                Some(prev) => assert_eq!(prev, dd, "refinement must be a function on classes"),
            }
        }
        // Surjective onto deep classes reachable by short walks.
        let mut deep_hit: Vec<bool> = vec![false; deep.class_count()];
        for m in mapping.iter().flatten() {
            deep_hit[m.index()] = true;
        }
        for c in deep.class_ids() {
            if deep.rep_len(c) <= d - 2 {
                assert!(deep_hit[c.index()], "class {:?} not covered", deep.rep_seq(c));
            }
        }
    }
}

/// The dual characterization: a cover is a homotopy cover exactly when the
/// induced map on length-2 walks is an endpoint-respecting bijection.
/// `check_cover` implements the diamond criterion; this checks the length-2
/// walk formulation directly on small graphs.
#[test]
fn diamond_criterion_matches_n2_bijection() {
    let cases: Vec<Morphism> = vec![
        paper_cover_morphism(),
        Morphism::identity(&Arc::new(generate(&FamilySpec::Complete(4)).unwrap())),
        doubling_map(),
        wheel_retraction(),
    ];
    for f in cases {
        let report = check_cover(&f);
        let n2_ok = n2_endpoint_respecting(&f);
        assert_eq!(report.is_homotopy_cover, report.is_cover && n2_ok);
    }
}

fn doubling_map() -> Morphism {
    let c8 = Arc::new(generate(&FamilySpec::Cycle(8)).unwrap());
    let c4 = Arc::new(generate(&FamilySpec::Cycle(4)).unwrap());
    let map: Vec<VertexId> = c8
        .vertices()
        .map(|v| {
            let i: usize = c8.token(v).parse().unwrap();
            c4.vertex(&(i % 4).to_string()).unwrap()
        })
        .collect();
    Morphism::new(c8, c4, map).unwrap()
}

fn wheel_retraction() -> Morphism {
    let w5 = Arc::new(generate(&FamilySpec::Wheel(4)).unwrap());
    pleat(&w5).unwrap().1
}

/// Direct reading of the extended-neighborhood condition: for every domain
/// vertex, length-2 walks biject with those downstairs and share endpoints
/// upstairs iff they do downstairs.
fn n2_endpoint_respecting(f: &Morphism) -> bool {
    let dom = f.dom();
    let cod = f.cod();
    for vt in dom.vertices() {
        let up = dom.n2_walks(vt).unwrap();
        let down = cod.n2_walks(f.apply(vt)).unwrap();
        if up.len() != down.len() {
            return false;
        }
        // The projected walks must hit each downstairs walk exactly once.
        let mut seen = vec![0usize; down.len()];
        for w in &up {
            let image: Vec<VertexId> = w.seq().iter().map(|&u| f.apply(u)).collect();
            match down.iter().position(|d| d.seq() == image.as_slice()) {
                Some(i) => seen[i] += 1,
                None => return false,
            }
        }
        if seen.iter().any(|&c| c != 1) {
            return false;
        }
        // Endpoint agreement in both directions.
        for (i, a) in up.iter().enumerate() {
            for (j, b) in up.iter().enumerate() {
                if i == j {
                    continue;
                }
                let ia: Vec<VertexId> = a.seq().iter().map(|&u| f.apply(u)).collect();
                let ib: Vec<VertexId> = b.seq().iter().map(|&u| f.apply(u)).collect();
                let same_up = a.end() == b.end();
                let same_down = ia.last() == ib.last();
                if same_up != same_down {
                    return false;
                }
            }
        }
    }
    true
}
