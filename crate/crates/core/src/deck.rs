//! Deck-transformation groups of stabilized universal covers, group
//! identification, subgroup enumeration, quotient covers, and enumeration of
//! connected homotopy covers.
//!
//! A deck element is the permutation of walk classes given by concatenating
//! a fibre class in front; the basepoint action is free and transitive, so
//! elements are indexed by the basepoint fibre. Everything is verified
//! extensionally after construction and verification failures are hard
//! errors, never silent.

use std::sync::Arc;

use crate::covering::check_cover;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::morphism::Morphism;
use crate::universal::{build_folded_cover, ClassId, FoldedCover};
use crate::walk::Walk;

/// Multiplication table of a small finite group; `mul[i][j]` composes
/// element `j` first, then element `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupTable {
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupTable { mul, identity: 0 }
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut cur = g;
        let mut k = 1;
        while cur != self.identity {
            cur = self.mul[g][cur];
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order()).map(|g| self.element_order(g)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.mul[i][j] == self.mul[j][i]))
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.mul[g][h] == self.identity).expect("group has inverses")
    }
}

/// A subgroup given by its sorted element indices; closure under
/// multiplication is checked at construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn new(table: &GroupTable, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort();
        elements.dedup();
        if !elements.contains(&table.identity) {
            return Err(Error::SubgroupNotClosed);
        }
        for &a in &elements {
            for &b in &elements {
                if !elements.contains(&table.mul[a][b]) {
                    return Err(Error::SubgroupNotClosed);
                }
            }
        }
        Ok(Subgroup { elements })
    }

    /// Smallest subgroup containing `gens`.
    pub fn generated(table: &GroupTable, gens: &[usize]) -> Subgroup {
        let mut elements = vec![table.identity];
        let mut work: Vec<usize> = gens.to_vec();
        while let Some(g) = work.pop() {
            if elements.contains(&g) {
                continue;
            }
            elements.push(g);
            for &h in &elements.clone() {
                work.push(table.mul[g][h]);
                work.push(table.mul[h][g]);
            }
        }
        elements.sort();
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// All subgroups, found by closing generating sets, sorted by order then by
/// element list.
pub fn subgroups(table: &GroupTable) -> Vec<Subgroup> {
    let mut found = vec![Subgroup::generated(table, &[])];
    let mut i = 0;
    while i < found.len() {
        let current = found[i].clone();
        for g in 0..table.order() {
            if current.elements.contains(&g) {
                continue;
            }
            let mut gens = current.elements.clone();
            gens.push(g);
            let bigger = Subgroup::generated(table, &gens);
            if !found.contains(&bigger) {
                found.push(bigger);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    found
}

/// Structure report for a small group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupDescription {
    pub order: usize,
    pub abelian: bool,
    pub element_orders: Vec<usize>,
    /// `e`, `Z/n`, or a product of cyclics; `None` for unrecognized
    /// (non-abelian) groups, whose raw table remains available.
    pub name: Option<String>,
}

/// Identifies trivial, cyclic and general abelian groups up to `bound`.
pub fn identify_group(table: &GroupTable, bound: usize) -> Result<GroupDescription> {
    let order = table.order();
    if order > bound {
        return Err(Error::OrderBoundExceeded { order, bound });
    }
    let element_orders = table.element_orders();
    let abelian = table.is_abelian();
    let name = if order == 1 {
        Some("e".to_string())
    } else if element_orders.contains(&order) {
        Some(format!("Z/{order}"))
    } else if abelian {
        abelian_factors(order, &element_orders)
            .map(|fs| fs.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" x "))
    } else {
        None
    };
    Ok(GroupDescription { order, abelian, element_orders, name })
}

/// Matches the element-order multiset against every abelian group of the
/// given order and returns its invariant factors.
fn abelian_factors(order: usize, element_orders: &[usize]) -> Option<Vec<usize>> {
    let mut sorted = element_orders.to_vec();
    sorted.sort();
    for candidate in abelian_groups_of_order(order) {
        if candidate_order_multiset(&candidate) == sorted {
            return Some(invariant_factors(&candidate));
        }
    }
    None
}

/// All abelian groups of order `n` as multisets of prime-power cyclic
/// factors.
fn abelian_groups_of_order(n: usize) -> Vec<Vec<usize>> {
    let mut factorization = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factorization.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        factorization.push((m, 1));
    }
    let mut result = vec![Vec::new()];
    for (p, e) in factorization {
        let parts = partitions(e);
        let mut next = Vec::new();
        for base in &result {
            for part in &parts {
                let mut g = base.clone();
                for &k in part {
                    g.push(p.pow(k as u32));
                }
                next.push(g);
            }
        }
        result = next;
    }
    result
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Element orders of a direct sum of cyclic groups, sorted.
fn candidate_order_multiset(factors: &[usize]) -> Vec<usize> {
    let mut orders = Vec::new();
    let mut idx = vec![0usize; factors.len()];
    loop {
        let o = idx.iter().zip(factors).fold(1usize, |acc, (&i, &f)| {
            let ord = f / gcd(i, f);
            lcm(acc, ord)
        });
        orders.push(o);
        let mut k = 0;
        loop {
            if k == factors.len() {
                orders.sort();
                return orders;
            }
            idx[k] += 1;
            if idx[k] < factors[k] {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Ascending invariant factors d1 | d2 | ... from prime-power factors.
fn invariant_factors(prime_powers: &[usize]) -> Vec<usize> {
    let mut pools = prime_powers.to_vec();
    pools.sort_by(|a, b| b.cmp(a));
    let mut rows: Vec<usize> = Vec::new();
    // Greedily combine one highest power of each prime into the largest
    // factor, repeat with the rest.
    while !pools.is_empty() {
        let mut row = 1usize;
        let mut rest = Vec::new();
        for &q in &pools {
            if gcd(row, q) == 1 {
                row *= q;
            } else {
                rest.push(q);
            }
        }
        rows.push(row);
        pools = rest;
    }
    rows.sort();
    rows
}

/// The deck-transformation group of a stabilized folded cover, realized as
/// permutations of all walk classes, one element per basepoint-fibre class.
#[derive(Clone, Debug)]
pub struct DeckGroup {
    cover: FoldedCover,
    fibre: Vec<ClassId>,
    perms: Vec<Vec<ClassId>>,
    table: GroupTable,
}

impl DeckGroup {
    pub fn cover(&self) -> &FoldedCover {
        &self.cover
    }

    pub fn order(&self) -> usize {
        self.fibre.len()
    }

    pub fn fibre(&self) -> &[ClassId] {
        &self.fibre
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn permutation(&self, element: usize) -> &[ClassId] {
        &self.perms[element]
    }

    /// The canonical loop representative of a deck element.
    pub fn element_walk(&self, element: usize) -> Walk {
        self.cover.rep_walk(self.fibre[element])
    }

    /// The deck element whose basepoint-fibre class is the lift of `loop_walk`.
    pub fn element_of_loop(&self, loop_walk: &Walk) -> Result<usize> {
        let class = self.cover.lift(loop_walk)?;
        self.fibre
            .iter()
            .position(|&c| c == class)
            .ok_or_else(|| Error::DeckVerification("loop does not lift into the fibre".into()))
    }
}

/// Builds the deck group of a stabilized cover: for each fibre class gamma,
/// the permutation sends a class to the traversal of its representative
/// starting from gamma. The group axioms, freeness, and projection
/// equivariance are all verified; failures are errors.
pub fn deck_group(u: &FoldedCover) -> Result<DeckGroup> {
    if !u.stabilized() {
        return Err(Error::NotStabilized(u.depth()));
    }
    let fibre = u.fibre(u.basepoint());
    let n = u.class_count();
    let mut perms = Vec::with_capacity(fibre.len());
    for &gamma in &fibre {
        let mut perm = Vec::with_capacity(n);
        let mut hit = vec![false; n];
        for c in u.class_ids() {
            let target = u
                .traverse_from(gamma, u.rep_seq(c))
                .ok_or_else(|| Error::DeckVerification("traversal left the cover".into()))?;
            if u.proj(target) != u.proj(c) {
                return Err(Error::DeckVerification("element does not commute with projection".into()));
            }
            if hit[target.index()] {
                return Err(Error::DeckVerification("element is not injective".into()));
            }
            hit[target.index()] = true;
            perm.push(target);
        }
        perms.push(perm);
    }
    // The identity comes from the root class, which is the first fibre entry.
    let identity = fibre
        .iter()
        .position(|&c| c == u.root())
        .ok_or_else(|| Error::DeckVerification("root missing from fibre".into()))?;
    if perms[identity].iter().enumerate().any(|(i, &c)| c.index() != i) {
        return Err(Error::DeckVerification("root does not act as identity".into()));
    }
    // Freeness: no non-identity element fixes any class.
    for (e, perm) in perms.iter().enumerate() {
        if e != identity && perm.iter().enumerate().any(|(i, &c)| c.index() == i) {
            return Err(Error::DeckVerification("non-identity element has a fixed point".into()));
        }
    }
    // Closure: composing two elements is again the element indexed by the
    // image of the root, verified pointwise.
    let fibre_index: Vec<Option<usize>> = (0..n)
        .map(|c| fibre.iter().position(|&f| f.index() == c))
        .collect();
    let mut mul = vec![vec![0usize; fibre.len()]; fibre.len()];
    for i in 0..fibre.len() {
        for j in 0..fibre.len() {
            let composed_root = perms[i][fibre[j].index()];
            let k = fibre_index[composed_root.index()]
                .ok_or_else(|| Error::DeckVerification("composition left the fibre".into()))?;
            for c in 0..n {
                if perms[i][perms[j][c].index()] != perms[k][c] {
                    return Err(Error::DeckVerification("composition table mismatch".into()));
                }
            }
            mul[i][j] = k;
        }
    }
    let table = GroupTable { mul, identity };
    // Inverses exist in a finite group closed under an associative product
    // with cancellation, but check anyway.
    for g in 0..table.order() {
        if !table.mul[g].contains(&table.identity) {
            return Err(Error::DeckVerification("element without inverse".into()));
        }
    }
    Ok(DeckGroup { cover: u.clone(), fibre, perms, table })
}

/// The orbit graph of a subgroup action, with the induced projection.
/// Verified to be a homotopy cover whose basepoint fibre has size equal to
/// the subgroup index.
pub fn quotient(deck: &DeckGroup, s: &Subgroup) -> Result<(Arc<Graph>, Morphism)> {
    let u = &deck.cover;
    let n = u.class_count();
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for &e in s.elements() {
        for c in 0..n {
            let a = find(&mut dsu, c);
            let b = find(&mut dsu, deck.perms[e][c].index());
            if a != b {
                // Keep the smaller id as the orbit representative.
                let (lo, hi) = (a.min(b), a.max(b));
                dsu[hi] = lo;
            }
        }
    }
    build_orbit_graph(u, &mut dsu, &format!("{}_mod_S{}", u.base().name(), s.order()))
}

fn build_orbit_graph(
    u: &FoldedCover,
    dsu: &mut Vec<usize>,
    name: &str,
) -> Result<(Arc<Graph>, Morphism)> {
    fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    let n = u.class_count();
    let mut reps: Vec<usize> = (0..n).filter(|&c| find(dsu, c) == c).collect();
    reps.sort();
    let orbit_of: Vec<usize> = (0..n)
        .map(|c| {
            let r = find(dsu, c);
            reps.binary_search(&r).expect("orbit representative")
        })
        .collect();
    for (i, &r) in reps.iter().enumerate() {
        // Orbit projection must be constant; deck elements commute with rho.
        let proj = u.proj(ClassId(r as u32));
        for c in 0..n {
            if orbit_of[c] == i && u.proj(ClassId(c as u32)) != proj {
                return Err(Error::QuotientNotVerified("orbit spans two base vertices".into()));
            }
        }
    }
    let tokens: Vec<String> = reps.iter().map(|&r| u.class_token(ClassId(r as u32))).collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for c in u.class_ids() {
        for &(_, d) in u.neighbors_of(c) {
            let (a, b) = (orbit_of[c.index()], orbit_of[d.index()]);
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push((tokens[key.0].clone(), tokens[key.1].clone()));
            }
        }
    }
    let graph = Arc::new(Graph::build(name, &tokens, &edges)?);
    let map: Vec<VertexId> = reps.iter().map(|&r| u.proj(ClassId(r as u32))).collect();
    let projection = Morphism::new(graph.clone(), u.base().clone(), map)?;
    let report = check_cover(&projection);
    if !report.is_homotopy_cover {
        return Err(Error::QuotientNotVerified("projection is not a homotopy cover".into()));
    }
    Ok((graph, projection))
}

/// Quotient of a truncated cover by powers of a single shift generator:
/// builds a deep enough truncation, merges every class with its image under
/// concatenation by `gamma^n` (both directions), and verifies the orbit
/// graph with [`check_cover`]. The verification makes the construction a
/// sound certificate even though the full deck group is never materialized.
pub fn quotient_by_shift_power(
    base: &Arc<Graph>,
    v: VertexId,
    gamma: &Walk,
    n: usize,
) -> Result<(Arc<Graph>, Morphism)> {
    let gamma = gamma.prune_normal_form();
    if gamma.start() != v || gamma.end() != v || gamma.len() == 0 || n == 0 {
        return Err(Error::InvalidShiftGenerator);
    }
    let mut power = gamma.clone();
    for _ in 1..n {
        power = power.concat(&gamma)?;
    }
    let power = power.prune_normal_form();
    if power.len() == 0 {
        return Err(Error::InvalidShiftGenerator);
    }
    let depth = power.len() + base.eccentricity(v) + 4;
    let u = build_folded_cover(base, v, depth)?;
    let fwd = u
        .traverse_from(u.root(), power.seq())
        .ok_or(Error::InvalidShiftGenerator)?;
    let bwd = u
        .traverse_from(u.root(), power.reverse().seq())
        .ok_or(Error::InvalidShiftGenerator)?;
    let count = u.class_count();
    let mut dsu: Vec<usize> = (0..count).collect();
    fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for start in [fwd, bwd] {
        for c in u.class_ids() {
            if let Some(t) = u.traverse_from(start, u.rep_seq(c)) {
                let a = find(&mut dsu, c.index());
                let b = find(&mut dsu, t.index());
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    dsu[hi] = lo;
                }
            }
        }
    }
    let (graph, projection) =
        build_orbit_graph(&u, &mut dsu, &format!("{}_mod_shift{}", base.name(), n))?;
    // Fibre size equals the subgroup index n.
    let fibre = graph
        .vertices()
        .filter(|&x| projection.apply(x) == v)
        .count();
    if fibre != n {
        return Err(Error::QuotientNotVerified(format!(
            "expected fibre of size {n}, found {fibre}"
        )));
    }
    Ok((graph, projection))
}

/// Evidence that a non-stabilizing truncation looks like a line of shifts:
/// one short fibre class whose powers enumerate the whole truncated fibre.
#[derive(Clone, Debug)]
pub struct ShiftEvidence {
    pub generator: Walk,
    pub fibre_size: usize,
    pub covered_by_powers: usize,
    /// Fibre counts at two reduced-length cutoffs, evidence of linear growth.
    pub fibre_counts: Vec<(usize, usize)>,
}

/// Looks for a shift generator on a non-stabilized truncation.
pub fn detect_shift(u: &FoldedCover) -> Option<ShiftEvidence> {
    let fibre = u.fibre(u.basepoint());
    if fibre.len() < 2 {
        return None;
    }
    let gamma = fibre[1];
    let glen = u.rep_len(gamma);
    if glen == 0 {
        return None;
    }
    let mut covered = vec![u.root()];
    // Forward powers.
    let mut cur = gamma;
    loop {
        if !covered.contains(&cur) {
            covered.push(cur);
        }
        match u.traverse_from(gamma, u.rep_seq(cur)) {
            Some(next) if !covered.contains(&next) => cur = next,
            _ => break,
        }
    }
    // Backward powers via the reversed generator.
    if let Some(ginv) = u.traverse_from(u.root(), &reversed(u.rep_seq(gamma))) {
        let mut cur = ginv;
        loop {
            if !covered.contains(&cur) {
                covered.push(cur);
            }
            match u.traverse_from(ginv, u.rep_seq(cur)) {
                Some(next) if !covered.contains(&next) => cur = next,
                _ => break,
            }
        }
    }
    if covered.len() != fibre.len() || !fibre.iter().all(|c| covered.contains(c)) {
        return None;
    }
    let cutoff_lo = u.depth().saturating_sub(glen);
    let count_at = |cut: usize| fibre.iter().filter(|&&c| u.rep_len(c) <= cut).count();
    Some(ShiftEvidence {
        generator: u.rep_walk(gamma),
        fibre_size: fibre.len(),
        covered_by_powers: covered.len(),
        fibre_counts: vec![(cutoff_lo, count_at(cutoff_lo)), (u.depth(), fibre.len())],
    })
}

fn reversed(seq: &[VertexId]) -> Vec<VertexId> {
    let mut s = seq.to_vec();
    s.reverse();
    s
}

/// One connected homotopy cover together with its verified projection and
/// its degree over the base.
#[derive(Clone, Debug)]
pub struct EnumeratedCover {
    pub graph: Arc<Graph>,
    pub projection: Morphism,
    pub index: usize,
}

#[derive(Clone, Debug)]
pub enum EnumerationOutcome {
    /// The truncation stabilized; one cover per deck subgroup of index at
    /// most `max_index`.
    Stabilized { deck_order: usize, covers: Vec<EnumeratedCover> },
    /// Not stabilized, but a verified shift generator produces the cyclic
    /// quotients up to `max_index`.
    Shift { evidence: ShiftEvidence, covers: Vec<EnumeratedCover> },
    /// Not stabilized and no shift structure was recognized.
    NotStabilized { depth: usize, class_count: usize, fibre_size: usize, frontier: usize },
}

pub fn enumerate_covers(
    base: &Arc<Graph>,
    v: VertexId,
    depth: usize,
    max_index: usize,
) -> Result<EnumerationOutcome> {
    let u = build_folded_cover(base, v, depth)?;
    if u.stabilized() {
        let deck = deck_group(&u)?;
        let mut covers = Vec::new();
        for s in subgroups(deck.table()) {
            let index = deck.order() / s.order();
            if index > max_index {
                continue;
            }
            let (graph, projection) = quotient(&deck, &s)?;
            covers.push(EnumeratedCover { graph, projection, index });
        }
        covers.sort_by_key(|c| c.index);
        return Ok(EnumerationOutcome::Stabilized { deck_order: deck.order(), covers });
    }
    if let Some(evidence) = detect_shift(&u) {
        let mut covers = Vec::new();
        for nn in 1..=max_index {
            let (graph, projection) = quotient_by_shift_power(base, v, &evidence.generator, nn)?;
            covers.push(EnumeratedCover { graph, projection, index: nn });
        }
        return Ok(EnumerationOutcome::Shift { evidence, covers });
    }
    Ok(EnumerationOutcome::NotStabilized {
        depth,
        class_count: u.class_count(),
        fibre_size: u.fibre(u.basepoint()).len(),
        frontier: u.frontier().len(),
    })
}

/// Convenience wrapper: the fundamental-group verdict for a graph.
#[derive(Clone, Debug)]
pub enum FundamentalGroup {
    Stabilized { description: GroupDescription, deck: DeckGroup },
    Shift { evidence: ShiftEvidence, depth: usize },
    Unknown { depth: usize, class_count: usize, fibre_size: usize },
}

pub fn fundamental_group(base: &Arc<Graph>, v: VertexId, depth: usize) -> Result<FundamentalGroup> {
    let u = build_folded_cover(base, v, depth)?;
    if u.stabilized() {
        let deck = deck_group(&u)?;
        let description = identify_group(deck.table(), 24)?;
        return Ok(FundamentalGroup::Stabilized { description, deck });
    }
    if let Some(evidence) = detect_shift(&u) {
        return Ok(FundamentalGroup::Shift { evidence, depth });
    }
    Ok(FundamentalGroup::Unknown {
        depth,
        class_count: u.class_count(),
        fibre_size: u.fibre(u.basepoint()).len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::iso::are_isomorphic;

    fn arc(spec: FamilySpec) -> Arc<Graph> {
        Arc::new(generate(&spec).unwrap())
    }

    fn deck_of(g: &Arc<Graph>, v: &str, depth: usize) -> DeckGroup {
        let v = g.vertex(v).unwrap();
        let u = build_folded_cover(g, v, depth).unwrap();
        deck_group(&u).unwrap()
    }

    #[test]
    fn k4_deck_group_is_z2() {
        let k4 = arc(FamilySpec::Complete(4));
        let deck = deck_of(&k4, "1", 4);
        assert_eq!(deck.order(), 2);
        let d = identify_group(deck.table(), 24).unwrap();
        assert_eq!(d.name.as_deref(), Some("Z/2"));
    }

    #[test]
    fn wheel_six_deck_group_is_z2() {
        let w6 = arc(FamilySpec::Wheel(5));
        let deck = deck_of(&w6, "c", 8);
        assert_eq!(deck.order(), 2);
        assert_eq!(identify_group(deck.table(), 24).unwrap().name.as_deref(), Some("Z/2"));
    }

    #[test]
    fn bipartite_pleat_has_trivial_group() {
        let k2 = arc(FamilySpec::CompleteBipartite(1, 1));
        let deck = deck_of(&k2, "a1", 6);
        assert_eq!(deck.order(), 1);
        assert_eq!(identify_group(deck.table(), 24).unwrap().name.as_deref(), Some("e"));
    }

    #[test]
    fn identify_small_groups() {
        let z4 = GroupTable::cyclic(4);
        let d = identify_group(&z4, 24).unwrap();
        assert_eq!(d.name.as_deref(), Some("Z/4"));
        assert!(d.abelian);

        let z1 = GroupTable::cyclic(1);
        assert_eq!(identify_group(&z1, 24).unwrap().name.as_deref(), Some("e"));

        // Z/2 x Z/2 built directly.
        let mul = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let klein = GroupTable { mul, identity: 0 };
        assert_eq!(identify_group(&klein, 24).unwrap().name.as_deref(), Some("Z/2 x Z/2"));
    }

    #[test]
    fn order_bound_is_enforced() {
        let z4 = GroupTable::cyclic(4);
        assert!(matches!(identify_group(&z4, 3), Err(Error::OrderBoundExceeded { .. })));
    }

    #[test]
    fn subgroup_enumeration() {
        let z2 = GroupTable::cyclic(2);
        let subs = subgroups(&z2);
        assert_eq!(subs.len(), 2);

        let z1 = GroupTable::cyclic(1);
        assert_eq!(subgroups(&z1).len(), 1);

        let z4 = GroupTable::cyclic(4);
        let subs = subgroups(&z4);
        assert_eq!(subs.len(), 3);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 4]);
    }

    #[test]
    fn subgroup_closure_is_checked() {
        let z4 = GroupTable::cyclic(4);
        assert!(Subgroup::new(&z4, vec![0, 1]).is_err());
        assert!(Subgroup::new(&z4, vec![0, 2]).is_ok());
        assert!(Subgroup::new(&z4, vec![2]).is_err());
    }

    #[test]
    fn quotient_by_full_group_is_base() {
        let k4 = arc(FamilySpec::Complete(4));
        let deck = deck_of(&k4, "1", 4);
        let full = Subgroup::new(deck.table(), (0..deck.order()).collect()).unwrap();
        let (q, _) = quotient(&deck, &full).unwrap();
        assert!(are_isomorphic(&q, &k4).is_some());
    }

    #[test]
    fn quotient_by_trivial_subgroup_is_cover_itself() {
        let k4 = arc(FamilySpec::Complete(4));
        let deck = deck_of(&k4, "1", 4);
        let trivial = Subgroup::new(deck.table(), vec![deck.table().identity]).unwrap();
        let (q, _) = quotient(&deck, &trivial).unwrap();
        let (ug, _) = deck.cover().class_graph().unwrap();
        assert!(are_isomorphic(&q, &ug).is_some());
    }

    #[test]
    fn cycle_quotients_are_cycles() {
        let c5 = arc(FamilySpec::Cycle(5));
        let v = c5.vertex("0").unwrap();
        let gamma = Walk::from_tokens(&c5, "0 1 2 3 4 0").unwrap();
        for n in 1..=3 {
            let (q, _) = quotient_by_shift_power(&c5, v, &gamma, n).unwrap();
            let expected = arc(FamilySpec::Cycle(5 * n));
            assert!(are_isomorphic(&q, &expected).is_some(), "C{} expected", 5 * n);
        }
    }

    #[test]
    fn paper_g_shift_quotient_is_paper_g_tilde() {
        let g = arc(FamilySpec::PaperG);
        let v = g.vertex("a").unwrap();
        let gamma = Walk::from_tokens(&g, "a b c d e a").unwrap();
        let (q, _) = quotient_by_shift_power(&g, v, &gamma, 2).unwrap();
        let expected = arc(FamilySpec::PaperGTilde);
        assert!(are_isomorphic(&q, &expected).is_some());
    }

    #[test]
    fn shift_detection_on_cycles_and_trees() {
        let c5 = arc(FamilySpec::Cycle(5));
        let v = c5.vertex("0").unwrap();
        let u = build_folded_cover(&c5, v, 12).unwrap();
        let ev = detect_shift(&u).expect("C5 is a shift");
        assert_eq!(ev.generator.len(), 5);
        assert_eq!(ev.covered_by_powers, ev.fibre_size);

        // The Petersen graph truncation is a tree with exponentially many
        // fibre classes; powers of one loop cannot cover them.
        let pet = arc(FamilySpec::Kneser(5, 2));
        let v = pet.vertex("{1,2}").unwrap();
        let u = build_folded_cover(&pet, v, 6).unwrap();
        assert!(!u.stabilized());
        assert!(detect_shift(&u).is_none());
    }

    #[test]
    fn enumerate_k4_covers() {
        let k4 = arc(FamilySpec::Complete(4));
        let v = k4.vertex("1").unwrap();
        match enumerate_covers(&k4, v, 6, 4).unwrap() {
            EnumerationOutcome::Stabilized { deck_order, covers } => {
                assert_eq!(deck_order, 2);
                assert_eq!(covers.len(), 2);
                assert_eq!(covers[0].index, 1);
                assert!(are_isomorphic(&covers[0].graph, &k4).is_some());
                assert_eq!(covers[1].index, 2);
                assert_eq!(covers[1].graph.order(), 8);
            }
            other => panic!("expected stabilized, got {other:?}"),
        }
    }

    #[test]
    fn fundamental_groups_of_small_families() {
        let c4 = arc(FamilySpec::Cycle(4));
        let v = c4.vertex("0").unwrap();
        match fundamental_group(&c4, v, 6).unwrap() {
            FundamentalGroup::Stabilized { description, .. } => {
                assert_eq!(description.name.as_deref(), Some("e"));
            }
            other => panic!("C4 should stabilize, got {other:?}"),
        }

        let c6 = arc(FamilySpec::Cycle(6));
        let v = c6.vertex("0").unwrap();
        assert!(matches!(fundamental_group(&c6, v, 14).unwrap(), FundamentalGroup::Shift { .. }));
    }
}
