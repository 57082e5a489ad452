//! Graph homomorphisms, spider moves between morphisms, homotopy decision
//! by breadth-first search over Hom sets, folds, and pleat reduction.

use std::collections::{HashMap, VecDeque};
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A vertex map `dom -> cod` preserving adjacency.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    dom: Arc<Graph>,
    cod: Arc<Graph>,
    map: Vec<VertexId>,
}

/// Changing the image of a single domain vertex. If the vertex is looped the
/// old and new images must be adjacent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MorphismSpiderMove {
    pub vertex: VertexId,
    pub new_image: VertexId,
}

impl Morphism {
    /// Builds and validates a morphism; errors if any domain edge maps to a
    /// non-edge.
    pub fn new(dom: Arc<Graph>, cod: Arc<Graph>, map: Vec<VertexId>) -> Result<Morphism> {
        let m = Morphism::new_unchecked(dom, cod, map);
        let bad = m.violations();
        if let Some(&(a, b)) = bad.first() {
            return Err(Error::NotAHomomorphism {
                count: bad.len(),
                a: m.dom.token(a).to_string(),
                b: m.dom.token(b).to_string(),
            });
        }
        Ok(m)
    }

    /// Builds without validating the homomorphism condition. `map.len()`
    /// must still equal the domain order.
    pub fn new_unchecked(dom: Arc<Graph>, cod: Arc<Graph>, map: Vec<VertexId>) -> Morphism {
        assert_eq!(map.len(), dom.order(), "map must cover every domain vertex");
        Morphism { dom, cod, map }
    }

    /// Builds from token pairs `(domain vertex, codomain vertex)`.
    pub fn from_pairs(dom: Arc<Graph>, cod: Arc<Graph>, pairs: &[(String, String)]) -> Result<Morphism> {
        let mut map: Vec<Option<VertexId>> = vec![None; dom.order()];
        for (a, b) in pairs {
            let va = dom.vertex_or_err(a)?;
            let vb = cod.vertex_or_err(b)?;
            map[va.index()] = Some(vb);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::IncompleteMorphism(dom.token(VertexId(i as u32)).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(dom, cod, map)
    }

    pub fn identity(g: &Arc<Graph>) -> Morphism {
        Morphism { dom: g.clone(), cod: g.clone(), map: g.vertices().collect() }
    }

    pub fn dom(&self) -> &Arc<Graph> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<Graph> {
        &self.cod
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.map[v.index()]
    }

    pub fn map(&self) -> &[VertexId] {
        &self.map
    }

    /// Every domain edge whose image is not an edge of the codomain.
    pub fn violations(&self) -> Vec<(VertexId, VertexId)> {
        self.dom
            .edges()
            .filter(|&(a, b)| !self.cod.has_edge(self.apply(a), self.apply(b)))
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.order()];
        for &v in &self.map {
            hit[v.index()] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Composition `other . self` (apply `self` first).
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if **other.dom() != **self.cod() {
            return Err(Error::DomainMismatch);
        }
        let map = self.map.iter().map(|&v| other.apply(v)).collect();
        Ok(Morphism { dom: self.dom.clone(), cod: other.cod.clone(), map })
    }

    /// Renders the `m <dom> <cod>` body lines, sorted by domain token.
    pub fn to_file_string(&self, dom_path: &str, cod_path: &str) -> String {
        let mut out = format!("dom {}\ncod {}\n", dom_path, cod_path);
        let mut lines: Vec<String> = self
            .dom
            .vertices()
            .map(|v| format!("m {} {}", self.dom.token(v), self.cod.token(self.apply(v))))
            .collect();
        lines.sort();
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

/// Parses `m <dom-vertex> <cod-vertex>` lines against already loaded graphs.
/// `dom`/`cod` lines are allowed and ignored here.
pub fn parse_morphism_body(text: &str, dom: &Arc<Graph>, cod: &Arc<Graph>) -> Result<Morphism> {
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut parts = line.split_whitespace();
        let Some(head) = parts.next() else { continue };
        let rest: Vec<&str> = parts.collect();
        match head {
            "dom" | "cod" => {}
            "m" => match rest.as_slice() {
                [a, b] => pairs.push((a.to_string(), b.to_string())),
                _ => {
                    return Err(Error::Parse { line: lineno + 1, msg: "expected: m <dom> <cod>".into() })
                }
            },
            other => {
                return Err(Error::Parse { line: lineno + 1, msg: format!("unknown directive {other}") })
            }
        }
    }
    Morphism::from_pairs(dom.clone(), cod.clone(), &pairs)
}

/// Loads a morphism file: `dom <file>` and `cod <file>` name the graphs
/// (relative to the morphism file), `m` lines give the vertex map.
pub fn load_morphism(path: &Path) -> Result<Morphism> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut dom: Option<Arc<Graph>> = None;
    let mut cod: Option<Arc<Graph>> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut parts = line.split_whitespace();
        let Some(head) = parts.next() else { continue };
        if head == "dom" || head == "cod" {
            let file: Vec<&str> = parts.collect();
            let [f] = file.as_slice() else {
                return Err(Error::Parse { line: lineno + 1, msg: format!("expected: {head} <file>") });
            };
            let g = Arc::new(Graph::parse(&std::fs::read_to_string(dir.join(f))?)?);
            if head == "dom" {
                dom = Some(g);
            } else {
                cod = Some(g);
            }
        }
    }
    let dom = dom.ok_or(Error::Parse { line: 0, msg: "missing dom line".into() })?;
    let cod = cod.ok_or(Error::Parse { line: 0, msg: "missing cod line".into() })?;
    parse_morphism_body(&text, &dom, &cod)
}

/// Verdict of the spider-move search between two morphisms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HomVerdict {
    /// Connected; the moves transform `f` into `g` when applied in order.
    Yes(Vec<MorphismSpiderMove>),
    /// The entire component of `f` was exhausted without meeting `g`.
    No,
    /// State budget was hit first.
    Inconclusive,
}

/// All single spider moves available from `f`, in vertex order.
pub fn morphism_spider_moves(f: &Morphism) -> Vec<MorphismSpiderMove> {
    let dom = f.dom();
    let cod = f.cod();
    let mut out = Vec::new();
    for x in dom.vertices() {
        let old = f.apply(x);
        'cand: for w in cod.vertices() {
            if w == old {
                continue;
            }
            for &u in dom.neighbors(x) {
                if u == x {
                    // Loop at x: the new image must itself be looped and,
                    // per the spider-pair condition, adjacent to the old one.
                    if !cod.has_edge(w, w) || !cod.has_edge(old, w) {
                        continue 'cand;
                    }
                } else if !cod.has_edge(w, f.apply(u)) {
                    continue 'cand;
                }
            }
            out.push(MorphismSpiderMove { vertex: x, new_image: w });
        }
    }
    out
}

pub fn apply_morphism_spider(f: &Morphism, mv: MorphismSpiderMove) -> Result<Morphism> {
    let mut map = f.map.to_vec();
    map[mv.vertex.index()] = mv.new_image;
    Morphism::new(f.dom.clone(), f.cod.clone(), map)
}

/// Breadth-first search over the spider-move graph on `Hom(dom, cod)`
/// starting at `f`. Morphisms are deduplicated by their image tuples.
pub fn homotopic(f: &Morphism, g: &Morphism, max_states: usize) -> Result<HomVerdict> {
    if **f.dom() != **g.dom() || **f.cod() != **g.cod() {
        return Err(Error::DomainMismatch);
    }
    if f.map == g.map {
        return Ok(HomVerdict::Yes(Vec::new()));
    }
    let mut seen: HashMap<Vec<VertexId>, Option<(Vec<VertexId>, MorphismSpiderMove)>> = HashMap::new();
    seen.insert(f.map.clone(), None);
    let mut queue = VecDeque::new();
    queue.push_back(f.clone());
    while let Some(cur) = queue.pop_front() {
        for mv in morphism_spider_moves(&cur) {
            let mut map = cur.map.clone();
            map[mv.vertex.index()] = mv.new_image;
            if seen.contains_key(&map) {
                continue;
            }
            if seen.len() >= max_states {
                return Ok(HomVerdict::Inconclusive);
            }
            seen.insert(map.clone(), Some((cur.map.clone(), mv)));
            if map == g.map {
                // Reconstruct the move sequence back to f.
                let mut moves = Vec::new();
                let mut at = map;
                while let Some(Some((prev, mv))) = seen.get(&at) {
                    moves.push(*mv);
                    at = prev.clone();
                }
                moves.reverse();
                return Ok(HomVerdict::Yes(moves));
            }
            queue.push_back(Morphism { dom: cur.dom.clone(), cod: cur.cod.clone(), map });
        }
    }
    Ok(HomVerdict::No)
}

/// The lexicographically least pair `(x, y)` with `N(x) subset of N(y)` and
/// `x != y`, or `None` when the graph is stiff.
pub fn find_fold(g: &Graph) -> Option<(VertexId, VertexId)> {
    for x in g.vertices() {
        for y in g.vertices() {
            if x == y {
                continue;
            }
            if g.neighbors(x).iter().all(|&u| g.has_edge(y, u)) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Repeatedly folds until stiff. Returns the stiff image together with the
/// composite retraction from the original graph.
pub fn pleat(g: &Arc<Graph>) -> Result<(Arc<Graph>, Morphism)> {
    let mut current = g.clone();
    // Track where each original vertex currently lives, by token.
    let mut image: Vec<String> = g.vertices().map(|v| g.token(v).to_string()).collect();
    while let Some((x, y)) = find_fold(&current) {
        let (xt, yt) = (current.token(x).to_string(), current.token(y).to_string());
        let vs: Vec<String> = current
            .vertices()
            .filter(|&v| v != x)
            .map(|v| current.token(v).to_string())
            .collect();
        let es: Vec<(String, String)> = current
            .edges()
            .filter(|&(a, b)| a != x && b != x)
            .map(|(a, b)| (current.token(a).to_string(), current.token(b).to_string()))
            .collect();
        current = Arc::new(Graph::build(current.name(), &vs, &es)?);
        for im in image.iter_mut() {
            if *im == xt {
                *im = yt.clone();
            }
        }
    }
    let map = image
        .iter()
        .map(|t| current.vertex_or_err(t))
        .collect::<Result<Vec<_>>>()?;
    let retraction = Morphism::new(g.clone(), current.clone(), map)?;
    Ok((current, retraction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::graph::load_graph;
    use crate::iso::are_isomorphic;

    fn arc(spec: FamilySpec) -> Arc<Graph> {
        Arc::new(generate(&spec).unwrap())
    }

    #[test]
    fn identity_is_valid() {
        let c5 = arc(FamilySpec::Cycle(5));
        let id = Morphism::identity(&c5);
        assert!(id.violations().is_empty());
    }

    #[test]
    fn constant_map_to_unlooped_vertex_violates_every_edge() {
        let c5 = arc(FamilySpec::Cycle(5));
        let k2 = Arc::new(load_graph("v a\nv b\ne a b\n").unwrap());
        let a = k2.vertex("a").unwrap();
        let f = Morphism::new_unchecked(c5.clone(), k2, vec![a; 5]);
        assert_eq!(f.violations().len(), c5.size());
    }

    #[test]
    fn doubling_map_is_valid() {
        let c8 = arc(FamilySpec::Cycle(8));
        let c4 = arc(FamilySpec::Cycle(4));
        let map: Vec<VertexId> = c8
            .vertices()
            .map(|v| {
                let i: usize = c8.token(v).parse().unwrap();
                c4.vertex(&(i % 4).to_string()).unwrap()
            })
            .collect();
        let f = Morphism::new(c8, c4, map).unwrap();
        assert!(f.violations().is_empty());
        assert!(f.is_surjective());
    }

    #[test]
    fn homotopic_reflexive() {
        let c5 = arc(FamilySpec::Cycle(5));
        let id = Morphism::identity(&c5);
        assert_eq!(homotopic(&id, &id, 1000).unwrap(), HomVerdict::Yes(vec![]));
    }

    #[test]
    fn single_spider_move_in_k3() {
        let k2 = Arc::new(load_graph("v a\nv b\ne a b\n").unwrap());
        let k3 = arc(FamilySpec::Complete(3));
        let f = Morphism::from_pairs(
            k2.clone(),
            k3.clone(),
            &[("a".into(), "1".into()), ("b".into(), "2".into())],
        )
        .unwrap();
        let g = Morphism::from_pairs(
            k2.clone(),
            k3.clone(),
            &[("a".into(), "1".into()), ("b".into(), "3".into())],
        )
        .unwrap();
        match homotopic(&f, &g, 10_000).unwrap() {
            HomVerdict::Yes(moves) => {
                assert_eq!(moves.len(), 1);
                let mut cur = f.clone();
                for mv in moves {
                    cur = apply_morphism_spider(&cur, mv).unwrap();
                }
                assert_eq!(cur, g);
            }
            other => panic!("expected yes, got {other:?}"),
        }
    }

    #[test]
    fn cycle_self_maps_are_rigid() {
        // Identity vs rotation of C5: the component of the identity is a
        // single point, so the search answers No by exhaustion.
        let c5 = arc(FamilySpec::Cycle(5));
        let id = Morphism::identity(&c5);
        let rot: Vec<VertexId> = c5
            .vertices()
            .map(|v| {
                let i: usize = c5.token(v).parse().unwrap();
                c5.vertex(&((i + 1) % 5).to_string()).unwrap()
            })
            .collect();
        let g = Morphism::new(c5.clone(), c5.clone(), rot).unwrap();
        assert_eq!(homotopic(&id, &g, 100_000).unwrap(), HomVerdict::No);
    }

    #[test]
    fn homotopic_is_symmetric() {
        let k2 = Arc::new(load_graph("v a\nv b\ne a b\n").unwrap());
        let k4 = arc(FamilySpec::Complete(4));
        let f = Morphism::from_pairs(
            k2.clone(),
            k4.clone(),
            &[("a".into(), "1".into()), ("b".into(), "2".into())],
        )
        .unwrap();
        let g = Morphism::from_pairs(
            k2.clone(),
            k4.clone(),
            &[("a".into(), "3".into()), ("b".into(), "4".into())],
        )
        .unwrap();
        let fg = matches!(homotopic(&f, &g, 10_000).unwrap(), HomVerdict::Yes(_));
        let gf = matches!(homotopic(&g, &f, 10_000).unwrap(), HomVerdict::Yes(_));
        assert_eq!(fg, gf);
        assert!(fg);
    }

    #[test]
    fn spider_move_on_looped_vertex_requires_adjacent_images() {
        // Domain: single looped vertex. Codomain: looped path I2.
        let dom = Arc::new(load_graph("v k\ne k k\n").unwrap());
        let cod = arc(FamilySpec::LoopedPath(3));
        let f = Morphism::from_pairs(dom.clone(), cod.clone(), &[("k".into(), "0".into())]).unwrap();
        let moves = morphism_spider_moves(&f);
        let images: Vec<&str> = moves.iter().map(|m| cod.token(m.new_image)).collect();
        // From 0 the only adjacent looped vertex besides itself is 1.
        assert_eq!(images, vec!["1"]);
    }

    #[test]
    fn fold_examples() {
        let w5 = arc(FamilySpec::Wheel(4));
        let (x, y) = find_fold(&w5).expect("W_{4+1} folds");
        assert_eq!((w5.token(x), w5.token(y)), ("1", "3"));

        let c5 = arc(FamilySpec::Cycle(5));
        assert!(find_fold(&c5).is_none());
    }

    #[test]
    fn pleat_examples() {
        let w5 = arc(FamilySpec::Wheel(4));
        let (p, r) = pleat(&w5).unwrap();
        let c3 = arc(FamilySpec::Cycle(3));
        assert!(are_isomorphic(&p, &c3).is_some());
        assert!(r.is_surjective());
        assert!(find_fold(&p).is_none());

        let k34 = arc(FamilySpec::CompleteBipartite(3, 4));
        let (p, _) = pleat(&k34).unwrap();
        assert_eq!(p.order(), 2);

        let c5 = arc(FamilySpec::Cycle(5));
        let (p, r) = pleat(&c5).unwrap();
        assert_eq!(*p, *c5);
        assert_eq!(r, Morphism::identity(&c5));
    }

    #[test]
    fn pleat_of_looped_path_is_looped_point() {
        let i3 = arc(FamilySpec::LoopedPath(3));
        let (p, _) = pleat(&i3).unwrap();
        assert_eq!(p.order(), 1);
        assert!(p.is_looped(VertexId(0)));
    }

    #[test]
    fn morphism_file_round_trip() {
        let f = crate::families::paper_cover_morphism();
        let text = f.to_file_string("paper-g-tilde.graph", "paper-g.graph");
        let again = parse_morphism_body(&text, f.dom(), f.cod()).unwrap();
        assert_eq!(f, again);
    }
}
