//! Depth-truncated universal homotopy covers.
//!
//! The cover is built as the quotient of the prune-free walk tree out of the
//! basepoint under two merge rules, run to a fixpoint with a union-find:
//!
//! * diamond rule: for a diamond `w x y z` of the base and a class over `w`,
//!   the far ends of the lifted 2-walks through `x` and through `z` are the
//!   same class;
//! * local-bijectivity rule: a class never keeps two distinct neighbors over
//!   the same base vertex; collisions merge (and cascade to children).
//!
//! Both rules only ever identify walks that are homotopic rel endpoints, so
//! the quotient refines the true universal cover. Near the truncation
//! frontier some identifications may be missed, which is why the decision
//! procedure compares two depths and reports `Unstable` on disagreement.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::covering::check_cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::morphism::Morphism;
use crate::walk::Walk;

/// Index of a walk class inside one [`FoldedCover`]. Classes are sorted by
/// (reduced length, lexicographic representative), so the root is always
/// class 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClassId(pub(crate) u32);

impl ClassId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct ClassInfo {
    /// Canonical prune-free representative walk from the basepoint
    /// (shortest, then lexicographically least in vertex order).
    rep: Vec<VertexId>,
    proj: VertexId,
    /// Sorted by base vertex; at most one neighbor per base vertex.
    nbrs: Vec<(VertexId, ClassId)>,
}

/// A depth-truncated universal homotopy cover of `base` at `basepoint`.
#[derive(Clone, Debug)]
pub struct FoldedCover {
    base: Arc<Graph>,
    basepoint: VertexId,
    depth: usize,
    stabilized: bool,
    classes: Vec<ClassInfo>,
}

/// Verdict of the lifting decider, together with the depths consulted.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LiftVerdict {
    Yes { depths: (usize, usize) },
    No { depths: (usize, usize) },
    Unstable { depths: (usize, usize) },
}

pub fn build_folded_cover(base: &Arc<Graph>, v: VertexId, depth: usize) -> Result<FoldedCover> {
    if v.index() >= base.order() {
        return Err(Error::UnknownVertex(format!("v{}", v.0)));
    }
    let mut b = Builder::new(base, v);
    for level in 0..depth {
        b.extend_level(level);
        b.run_fixpoint();
    }
    b.run_fixpoint();
    Ok(b.finish(depth, base.clone()))
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

struct Builder<'g> {
    g: &'g Graph,
    parent: Vec<u32>,
    rep: Vec<Vec<VertexId>>,
    proj: Vec<VertexId>,
    nbrs: Vec<Vec<(VertexId, u32)>>,
    queue: VecDeque<u32>,
    in_queue: Vec<bool>,
    /// Per base vertex: diamond instances (near1, near2, far) centered there.
    instances: Vec<Vec<(VertexId, VertexId, VertexId)>>,
}

impl<'g> Builder<'g> {
    fn new(g: &'g Graph, v: VertexId) -> Builder<'g> {
        let mut instances = vec![Vec::new(); g.order()];
        for d in g.diamonds() {
            let cycle = [d.w, d.x, d.y, d.z];
            for i in 0..4 {
                let center = cycle[i];
                let n1 = cycle[(i + 1) % 4];
                let n2 = cycle[(i + 3) % 4];
                let far = cycle[(i + 2) % 4];
                let inst = (n1.min(n2), n1.max(n2), far);
                if !instances[center.index()].contains(&inst) {
                    instances[center.index()].push(inst);
                }
            }
        }
        for list in &mut instances {
            list.sort();
        }
        let mut b = Builder {
            g,
            parent: Vec::new(),
            rep: Vec::new(),
            proj: Vec::new(),
            nbrs: Vec::new(),
            queue: VecDeque::new(),
            in_queue: Vec::new(),
            instances,
        };
        b.add_class(vec![v], v);
        b
    }

    fn add_class(&mut self, rep: Vec<VertexId>, proj: VertexId) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.rep.push(rep);
        self.proj.push(proj);
        self.nbrs.push(Vec::new());
        self.in_queue.push(false);
        id
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn enqueue(&mut self, x: u32) {
        let r = self.find(x);
        if !self.in_queue[r as usize] {
            self.in_queue[r as usize] = true;
            self.queue.push_back(r);
        }
    }

    fn rep_better(a: &[VertexId], b: &[VertexId]) -> bool {
        (a.len(), a) < (b.len(), b)
    }

    /// Looks up the unique neighbor of `c`'s class over `base`, normalizing
    /// stale entries.
    fn get_nbr(&mut self, c: u32, base: VertexId) -> Option<u32> {
        let r = self.find(c);
        let pos = self.nbrs[r as usize].iter().position(|&(b, _)| b == base)?;
        let raw = self.nbrs[r as usize][pos].1;
        let root = self.find(raw);
        self.nbrs[r as usize][pos].1 = root;
        Some(root)
    }

    /// Records the undirected edge between the classes of `a` and `b`; a
    /// collision with an existing neighbor over the same base vertex merges.
    fn add_edge(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        self.insert_nbr(ra, rb);
        let ra = self.find(ra);
        let rb = self.find(rb);
        self.insert_nbr(rb, ra);
        let ra = self.find(ra);
        let rb = self.find(rb);
        self.enqueue(ra);
        self.enqueue(rb);
        for i in 0..self.nbrs[ra as usize].len() {
            let n = self.nbrs[ra as usize][i].1;
            self.enqueue(n);
        }
    }

    fn insert_nbr(&mut self, into: u32, nbr: u32) {
        let base = self.proj[nbr as usize];
        match self.get_nbr(into, base) {
            None => {
                let fnbr = self.find(nbr);
                let r = self.find(into);
                self.nbrs[r as usize].push((base, fnbr));
            }
            Some(existing) => {
                let nbr = self.find(nbr);
                if existing != nbr {
                    self.merge(existing, nbr);
                }
            }
        }
    }

    /// Unions two classes over the same base vertex and cascades all forced
    /// merges (local-bijectivity collisions in the combined neighbor map).
    fn merge(&mut self, a: u32, b: u32) {
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            let ra = self.find(a);
            let rb = self.find(b);
            if ra == rb {
                continue;
            }
            debug_assert_eq!(self.proj[ra as usize], self.proj[rb as usize]);
            // Keep the class with the bigger neighbor map as the winner.
            let (w, l) = if self.nbrs[ra as usize].len() >= self.nbrs[rb as usize].len() {
                (ra, rb)
            } else {
                (rb, ra)
            };
            self.parent[l as usize] = w;
            if Self::rep_better(&self.rep[l as usize], &self.rep[w as usize]) {
                self.rep[w as usize] = std::mem::take(&mut self.rep[l as usize]);
            }
            let lost = std::mem::take(&mut self.nbrs[l as usize]);
            for (base, node) in lost {
                let node = self.find(node);
                let pos = self.nbrs[w as usize].iter().position(|&(b2, _)| b2 == base);
                match pos {
                    None => self.nbrs[w as usize].push((base, node)),
                    Some(p) => {
                        let raw = self.nbrs[w as usize][p].1;
                        let existing = self.find(raw);
                        self.nbrs[w as usize][p].1 = existing;
                        if existing != node {
                            stack.push((existing, node));
                        }
                    }
                }
            }
            self.enqueue(w);
            for i in 0..self.nbrs[w as usize].len() {
                let n = self.nbrs[w as usize][i].1;
                self.enqueue(n);
            }
        }
    }

    /// Applies every diamond instance centered at the class of `q`.
    fn process(&mut self, q: u32) {
        let q = self.find(q);
        let w = self.proj[q as usize];
        for idx in 0..self.instances[w.index()].len() {
            let (n1, n2, far) = self.instances[w.index()][idx];
            let q = self.find(q);
            let Some(a) = self.get_nbr(q, n1) else { continue };
            let Some(b) = self.get_nbr(q, n2) else { continue };
            let Some(ya) = self.get_nbr(a, far) else { continue };
            let Some(yb) = self.get_nbr(b, far) else { continue };
            if ya != yb {
                self.merge(ya, yb);
            }
        }
    }

    fn run_fixpoint(&mut self) {
        while let Some(q) = self.queue.pop_front() {
            self.in_queue[q as usize] = false;
            self.process(q);
        }
    }

    /// Spawns the missing children of every class whose canonical
    /// representative has reduced length exactly `level`.
    fn extend_level(&mut self, level: usize) {
        let candidates: Vec<u32> = (0..self.parent.len() as u32)
            .filter(|&i| self.find(i) == i && self.rep[i as usize].len() == level + 1)
            .collect();
        for c in candidates {
            let c = self.find(c);
            if self.rep[c as usize].len() != level + 1 {
                continue;
            }
            let w = self.proj[c as usize];
            let neighbors: Vec<VertexId> = self.g.neighbors(w).to_vec();
            for x in neighbors {
                let c = self.find(c);
                if self.get_nbr(c, x).is_some() {
                    continue;
                }
                let mut rep = self.rep[c as usize].clone();
                rep.push(x);
                let child = self.add_class(rep, x);
                self.add_edge(c, child);
            }
        }
    }

    fn finish(mut self, depth: usize, base: Arc<Graph>) -> FoldedCover {
        let n = self.parent.len() as u32;
        let mut roots: Vec<u32> = (0..n).filter(|&i| self.find(i) == i).collect();
        roots.sort_by(|&a, &b| {
            let ra = &self.rep[a as usize];
            let rb = &self.rep[b as usize];
            (ra.len(), ra).cmp(&(rb.len(), rb))
        });
        let mut class_of = vec![u32::MAX; n as usize];
        for (ci, &r) in roots.iter().enumerate() {
            class_of[r as usize] = ci as u32;
        }
        let mut classes = Vec::with_capacity(roots.len());
        let mut stabilized = true;
        for &r in &roots {
            let raw = self.nbrs[r as usize].clone();
            let mut nbrs: Vec<(VertexId, ClassId)> = Vec::with_capacity(raw.len());
            for (b, node) in raw {
                let root = self.find(node);
                nbrs.push((b, ClassId(class_of[root as usize])));
            }
            nbrs.sort();
            nbrs.dedup();
            debug_assert!(nbrs.windows(2).all(|w| w[0].0 != w[1].0), "duplicate base neighbor");
            let proj = self.proj[r as usize];
            if nbrs.len() != base.degree(proj) {
                stabilized = false;
            }
            classes.push(ClassInfo { rep: std::mem::take(&mut self.rep[r as usize]), proj, nbrs });
        }
        let root = self.find(0);
        let basepoint = self.proj[root as usize];
        FoldedCover { base, basepoint, depth, stabilized, classes }
    }
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

impl FoldedCover {
    pub fn base(&self) -> &Arc<Graph> {
        &self.base
    }

    pub fn basepoint(&self) -> VertexId {
        self.basepoint
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn stabilized(&self) -> bool {
        self.stabilized
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_ids(&self) -> impl Iterator<Item = ClassId> + '_ {
        (0..self.classes.len() as u32).map(ClassId)
    }

    pub fn root(&self) -> ClassId {
        ClassId(0)
    }

    pub fn proj(&self, c: ClassId) -> VertexId {
        self.classes[c.index()].proj
    }

    pub fn rep_seq(&self, c: ClassId) -> &[VertexId] {
        &self.classes[c.index()].rep
    }

    pub fn rep_walk(&self, c: ClassId) -> Walk {
        Walk::new(self.base.clone(), self.classes[c.index()].rep.clone())
            .expect("class representatives are valid walks")
    }

    /// Reduced length of the canonical representative.
    pub fn rep_len(&self, c: ClassId) -> usize {
        self.classes[c.index()].rep.len() - 1
    }

    pub fn neighbors_of(&self, c: ClassId) -> &[(VertexId, ClassId)] {
        &self.classes[c.index()].nbrs
    }

    pub fn neighbor_over(&self, c: ClassId, base: VertexId) -> Option<ClassId> {
        self.classes[c.index()]
            .nbrs
            .iter()
            .find(|&&(b, _)| b == base)
            .map(|&(_, d)| d)
    }

    /// Classes whose canonical representative has reduced length `depth`.
    pub fn frontier(&self) -> Vec<ClassId> {
        self.class_ids().filter(|&c| self.rep_len(c) == self.depth).collect()
    }

    /// Classes projecting to `w`, in class order.
    pub fn fibre(&self, w: VertexId) -> Vec<ClassId> {
        self.class_ids().filter(|&c| self.proj(c) == w).collect()
    }

    /// Dot-joined representative, the class's vertex token in materialized
    /// graphs.
    pub fn class_token(&self, c: ClassId) -> String {
        self.classes[c.index()]
            .rep
            .iter()
            .map(|&v| self.base.token(v))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Follows class edges from `start` along a walk of the base graph.
    /// `seq[0]` must project under `start`; returns `None` when the walk
    /// leaves the truncation.
    pub fn traverse_from(&self, start: ClassId, seq: &[VertexId]) -> Option<ClassId> {
        if seq.first() != Some(&self.proj(start)) {
            return None;
        }
        let mut cur = start;
        for &x in &seq[1..] {
            cur = self.neighbor_over(cur, x)?;
        }
        Some(cur)
    }

    /// Lifts a walk out of the basepoint to its class, pruning first. The
    /// walk's reduced length must stay `depth - 2` or less so the class is
    /// trustworthy away from the frontier.
    pub fn lift(&self, alpha: &Walk) -> Result<ClassId> {
        if **alpha.base() != *self.base {
            return Err(Error::BaseMismatch);
        }
        if alpha.start() != self.basepoint {
            return Err(Error::WalkNotFromBasepoint(self.base.token(self.basepoint).to_string()));
        }
        let nf = alpha.prune_normal_form();
        let safe = self.depth.saturating_sub(2);
        if nf.len() > safe {
            return Err(Error::WalkTooDeep { len: nf.len(), safe, depth: self.depth });
        }
        self.traverse_from(self.root(), nf.seq())
            .ok_or(Error::WalkTooDeep { len: nf.len(), safe, depth: self.depth })
    }

    /// Materializes the class graph together with the projection morphism.
    pub fn class_graph(&self) -> Result<(Arc<Graph>, Morphism)> {
        let tokens: Vec<String> = self.class_ids().map(|c| self.class_token(c)).collect();
        let mut edges = Vec::new();
        for c in self.class_ids() {
            for &(_, d) in self.neighbors_of(c) {
                if c <= d {
                    edges.push((tokens[c.index()].clone(), tokens[d.index()].clone()));
                }
            }
        }
        let name = format!("U_{}_{}", self.base.token(self.basepoint), self.base.name());
        let graph = Arc::new(Graph::build(&name, &tokens, &edges)?);
        let map: Vec<VertexId> = self
            .class_ids()
            .map(|c| self.proj(c))
            .collect();
        let morph = Morphism::new(graph.clone(), self.base.clone(), map)?;
        Ok((graph, morph))
    }

    /// DOT export with classes labeled by their representative walks.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("graph universal_cover {\n");
        for c in self.class_ids() {
            let label: Vec<&str> =
                self.classes[c.index()].rep.iter().map(|&v| self.base.token(v)).collect();
            out.push_str(&format!("  n{} [label=\"{}\"];\n", c.0, label.join(" ")));
        }
        for c in self.class_ids() {
            for &(_, d) in self.neighbors_of(c) {
                if c <= d {
                    out.push_str(&format!("  n{} -- n{};\n", c.0, d.0));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Factors the projection through another homotopy cover `f` of the same
    /// base: lifts each class representative through `f` from `vtil`. When
    /// this cover is stabilized the factorization is verified to be a
    /// homotopy cover itself.
    pub fn verify_universal_property(&self, f: &Morphism, vtil: VertexId) -> Result<Morphism> {
        if **f.cod() != *self.base {
            return Err(Error::BaseMismatch);
        }
        let report = check_cover(f);
        if !report.is_homotopy_cover {
            return Err(Error::NotAHomotopyCover);
        }
        if f.apply(vtil) != self.basepoint {
            return Err(Error::NotInFibre {
                vertex: f.dom().token(vtil).to_string(),
                target: self.base.token(self.basepoint).to_string(),
            });
        }
        let (ugraph, rho) = self.class_graph()?;
        let mut map = Vec::with_capacity(self.class_count());
        for c in self.class_ids() {
            let lifted = crate::covering::lift_walk_unchecked(f, &self.rep_walk(c), vtil)?;
            map.push(lifted.end());
        }
        let rho_til = Morphism::new(ugraph, f.dom().clone(), map)?;
        // f after rho_til equals rho exactly.
        let composite = rho_til.then(f)?;
        if composite.map() != rho.map() {
            return Err(Error::LiftInconsistent("factorization does not commute".into()));
        }
        if self.stabilized && !check_cover(&rho_til).is_homotopy_cover {
            return Err(Error::LiftInconsistent("factorization is not a homotopy cover".into()));
        }
        Ok(rho_til)
    }
}

/// Decides homotopy rel endpoints by lifting into folded covers at two
/// depths, `L + slack` and `L + slack + 2` where `L` is the larger reduced
/// length. Disagreement between the depths is reported as `Unstable`.
pub fn homotopic_rel_endpoints(
    base: &Arc<Graph>,
    v: VertexId,
    alpha: &Walk,
    beta: &Walk,
    slack: usize,
) -> Result<LiftVerdict> {
    if **alpha.base() != **base || **beta.base() != **base {
        return Err(Error::BaseMismatch);
    }
    if alpha.start() != v || beta.start() != v {
        return Err(Error::WalkNotFromBasepoint(base.token(v).to_string()));
    }
    if alpha.end() != beta.end() {
        return Err(Error::EndpointMismatch(
            base.token(alpha.end()).to_string(),
            base.token(beta.end()).to_string(),
        ));
    }
    let slack = slack.max(2);
    let l = alpha.reduced_len().max(beta.reduced_len());
    let d1 = l + slack;
    let d2 = d1 + 2;
    let u1 = build_folded_cover(base, v, d1)?;
    let u2 = build_folded_cover(base, v, d2)?;
    let same1 = u1.lift(alpha)? == u1.lift(beta)?;
    let same2 = u2.lift(alpha)? == u2.lift(beta)?;
    Ok(match (same1, same2) {
        (true, true) => LiftVerdict::Yes { depths: (d1, d2) },
        (false, false) => LiftVerdict::No { depths: (d1, d2) },
        _ => LiftVerdict::Unstable { depths: (d1, d2) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, paper_cover_morphism, FamilySpec};
    use crate::graph::load_graph;
    use crate::iso::are_isomorphic;

    fn arc(spec: FamilySpec) -> Arc<Graph> {
        Arc::new(generate(&spec).unwrap())
    }

    #[test]
    fn k4_stabilizes_with_eight_classes() {
        let k4 = arc(FamilySpec::Complete(4));
        let v = k4.vertex("1").unwrap();
        let u2 = build_folded_cover(&k4, v, 2).unwrap();
        assert!(!u2.stabilized());
        // The three loop classes created at level 3 all fold together, so
        // the cover is already complete there and depth 4 adds nothing.
        for depth in [3, 4] {
            let u = build_folded_cover(&k4, v, depth).unwrap();
            assert!(u.stabilized());
            assert_eq!(u.class_count(), 8);
        }
    }

    #[test]
    fn k4_cover_is_k44_minus_perfect_matching() {
        let k4 = arc(FamilySpec::Complete(4));
        let u = build_folded_cover(&k4, k4.vertex("1").unwrap(), 4).unwrap();
        let (ug, rho) = u.class_graph().unwrap();
        assert!(check_cover(&rho).is_homotopy_cover);

        let mut vs = Vec::new();
        let mut es = Vec::new();
        for i in 1..=4 {
            vs.push(format!("a{i}"));
            vs.push(format!("b{i}"));
        }
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    es.push((format!("a{i}"), format!("b{j}")));
                }
            }
        }
        let expected = Arc::new(Graph::build("K44-M", &vs, &es).unwrap());
        assert!(are_isomorphic(&ug, &expected).is_some());
    }

    #[test]
    fn c5_cover_is_a_path() {
        let c5 = arc(FamilySpec::Cycle(5));
        let v = c5.vertex("0").unwrap();
        for depth in [1, 3, 6] {
            let u = build_folded_cover(&c5, v, depth).unwrap();
            assert!(!u.stabilized());
            assert_eq!(u.class_count(), 2 * depth + 1);
            let (ug, _) = u.class_graph().unwrap();
            let path = Arc::new(generate(&FamilySpec::Path(2 * depth + 1)).unwrap());
            assert!(are_isomorphic(&ug, &path).is_some());
        }
    }

    #[test]
    fn paper_g_cover_identifies_b_and_b_prime() {
        let g = arc(FamilySpec::PaperG);
        let a = g.vertex("a").unwrap();
        let u = build_folded_cover(&g, a, 6).unwrap();
        assert!(!u.stabilized());
        let w1 = Walk::from_tokens(&g, "a b c").unwrap();
        let w2 = Walk::from_tokens(&g, "a b' c").unwrap();
        assert_eq!(u.lift(&w1).unwrap(), u.lift(&w2).unwrap());
        // Opposite directions along the line stay distinct.
        let w3 = Walk::from_tokens(&g, "a e d").unwrap();
        assert_ne!(u.lift(&w1).unwrap(), u.lift(&w3).unwrap());
    }

    #[test]
    fn c5_lift_separates_directions() {
        let c5 = arc(FamilySpec::Cycle(5));
        let v = c5.vertex("0").unwrap();
        let u = build_folded_cover(&c5, v, 4).unwrap();
        let w1 = Walk::from_tokens(&c5, "0 1 2").unwrap();
        let w2 = Walk::from_tokens(&c5, "0 4 3").unwrap();
        assert_ne!(u.lift(&w1).unwrap(), u.lift(&w2).unwrap());
        let trivial = Walk::identity(&c5, v);
        assert_eq!(u.lift(&trivial).unwrap(), u.root());
    }

    #[test]
    fn lift_respects_prunes() {
        let k4 = arc(FamilySpec::Complete(4));
        let v = k4.vertex("1").unwrap();
        let u = build_folded_cover(&k4, v, 4).unwrap();
        let raw = Walk::from_tokens(&k4, "1 2 1 2 3").unwrap();
        let reduced = Walk::from_tokens(&k4, "1 2 3").unwrap();
        assert_eq!(u.lift(&raw).unwrap(), u.lift(&reduced).unwrap());
    }

    #[test]
    fn lift_depth_guard() {
        let c5 = arc(FamilySpec::Cycle(5));
        let v = c5.vertex("0").unwrap();
        let u = build_folded_cover(&c5, v, 3).unwrap();
        let w = Walk::from_tokens(&c5, "0 1 2").unwrap();
        assert!(matches!(u.lift(&w), Err(Error::WalkTooDeep { .. })));
    }

    #[test]
    fn decider_examples() {
        let w6 = arc(FamilySpec::Wheel(5));
        let c = w6.vertex("c").unwrap();
        let a = Walk::from_tokens(&w6, "c 1 2 3 4 c").unwrap();
        let b = Walk::from_tokens(&w6, "c 1 2 c").unwrap();
        assert!(matches!(
            homotopic_rel_endpoints(&w6, c, &a, &b, 2).unwrap(),
            LiftVerdict::Yes { .. }
        ));

        let c5 = arc(FamilySpec::Cycle(5));
        let v = c5.vertex("0").unwrap();
        let loopw = Walk::from_tokens(&c5, "0 1 2 3 4 0").unwrap();
        let idw = Walk::identity(&c5, v);
        assert!(matches!(
            homotopic_rel_endpoints(&c5, v, &loopw, &idw, 2).unwrap(),
            LiftVerdict::No { .. }
        ));
        assert!(matches!(
            homotopic_rel_endpoints(&c5, v, &loopw, &loopw, 2).unwrap(),
            LiftVerdict::Yes { .. }
        ));
    }

    #[test]
    fn universal_property_through_identity() {
        let k4 = arc(FamilySpec::Complete(4));
        let v = k4.vertex("1").unwrap();
        let u = build_folded_cover(&k4, v, 4).unwrap();
        let id = Morphism::identity(&k4);
        let rho_til = u.verify_universal_property(&id, v).unwrap();
        let (_, rho) = u.class_graph().unwrap();
        assert_eq!(rho_til.map(), rho.map());
    }

    #[test]
    fn universal_property_through_own_projection() {
        let k4 = arc(FamilySpec::Complete(4));
        let v = k4.vertex("1").unwrap();
        let u = build_folded_cover(&k4, v, 4).unwrap();
        let (ug, rho) = u.class_graph().unwrap();
        let root_vertex = ug.vertex(&u.class_token(u.root())).unwrap();
        let rho_til = u.verify_universal_property(&rho, root_vertex).unwrap();
        // Factorization through itself is an isomorphism.
        assert!(rho_til.is_surjective());
        let mut seen = vec![false; ug.order()];
        for x in ug.vertices() {
            let y = rho_til.apply(x);
            assert!(!seen[y.index()]);
            seen[y.index()] = true;
        }
    }

    #[test]
    fn universal_property_through_paper_cover() {
        let f = paper_cover_morphism();
        let g = f.cod().clone();
        let a = g.vertex("a").unwrap();
        let u = build_folded_cover(&g, a, 6).unwrap();
        let a1 = f.dom().vertex("a1").unwrap();
        let rho_til = u.verify_universal_property(&f, a1).unwrap();
        // The dashed map sends the root to a1 and walks to their lifts.
        let root_idx = u.root().index();
        assert_eq!(rho_til.map()[root_idx], a1);
        let abc = Walk::from_tokens(&g, "a b c").unwrap();
        let c_class = u.lift(&abc).unwrap();
        assert_eq!(f.dom().token(rho_til.map()[c_class.index()]), "c1");
    }

    #[test]
    fn looped_vertex_has_twofold_cover() {
        let i1 = Arc::new(load_graph("v w\ne w w\n").unwrap());
        let w = i1.vertex("w").unwrap();
        let u = build_folded_cover(&i1, w, 4).unwrap();
        assert!(u.stabilized());
        assert_eq!(u.class_count(), 2);
        let (ug, rho) = u.class_graph().unwrap();
        assert_eq!(ug.size(), 1);
        assert!(check_cover(&rho).is_homotopy_cover);
    }
}
