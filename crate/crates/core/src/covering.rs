//! Cover and homotopy-cover verification, unique walk lifting, and the
//! constructive homotopy-lifting algorithm.

use crate::error::{Error, Result};
use crate::graph::{Diamond, VertexId};
use crate::morphism::Morphism;
use crate::walk::Walk;

/// Why a neighborhood map `N(v~) -> N(f(v~))` fails to be a bijection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NeighborhoodDefect {
    /// Two neighbors share an image.
    NotInjective(VertexId, VertexId),
    /// A neighbor of the image vertex is never hit.
    Missing(VertexId),
}

/// Full verdict of [`check_cover`]. `is_homotopy_cover` implies `is_cover`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverReport {
    pub is_surjective: bool,
    pub neighborhood_failures: Vec<(VertexId, NeighborhoodDefect)>,
    /// Diamonds of the codomain that fail to lift at some fibre point.
    pub diamond_failures: Vec<Diamond>,
    pub is_cover: bool,
    pub is_homotopy_cover: bool,
}

/// Checks the covering conditions: vertex surjectivity, neighborhood
/// bijectivity at every domain vertex, and (for homotopy covers) that every
/// diamond of the codomain lifts at every fibre point of its first vertex.
pub fn check_cover(f: &Morphism) -> CoverReport {
    let dom = f.dom();
    let cod = f.cod();
    let is_surjective = f.is_surjective();

    let mut neighborhood_failures = Vec::new();
    for vt in dom.vertices() {
        let target = f.apply(vt);
        let mut hit: Vec<Option<VertexId>> = vec![None; cod.order()];
        let mut defect = None;
        for &u in dom.neighbors(vt) {
            let fu = f.apply(u);
            match hit[fu.index()] {
                Some(prev) => {
                    defect = Some(NeighborhoodDefect::NotInjective(prev, u));
                    break;
                }
                None => hit[fu.index()] = Some(u),
            }
        }
        if defect.is_none() {
            for &w in cod.neighbors(target) {
                if hit[w.index()].is_none() {
                    defect = Some(NeighborhoodDefect::Missing(w));
                    break;
                }
            }
        }
        if let Some(d) = defect {
            neighborhood_failures.push((vt, d));
        }
    }

    let is_cover = is_surjective && neighborhood_failures.is_empty();

    let mut diamond_failures = Vec::new();
    if is_cover {
        // Fibre lookup: the unique neighbor of `vt` over a given base vertex.
        let lift_step = |vt: VertexId, target: VertexId| -> VertexId {
            *dom.neighbors(vt)
                .iter()
                .find(|&&u| f.apply(u) == target)
                .expect("cover: every base neighbor is hit exactly once")
        };
        for d in cod.diamonds() {
            let mut lifts = true;
            for wt in dom.vertices() {
                if f.apply(wt) != d.w {
                    continue;
                }
                let xt = lift_step(wt, d.x);
                let zt = lift_step(wt, d.z);
                if lift_step(xt, d.y) != lift_step(zt, d.y) {
                    lifts = false;
                    break;
                }
            }
            if !lifts {
                diamond_failures.push(d);
            }
        }
    }

    let is_homotopy_cover = is_cover && diamond_failures.is_empty();
    CoverReport { is_surjective, neighborhood_failures, diamond_failures, is_cover, is_homotopy_cover }
}

/// Lifts the walk `alpha` (in the codomain of `f`) to the unique walk in the
/// domain starting at `start`.
pub fn lift_walk(f: &Morphism, alpha: &Walk, start: VertexId) -> Result<Walk> {
    if **alpha.base() != **f.cod() {
        return Err(Error::BaseMismatch);
    }
    if !check_cover(f).is_cover {
        return Err(Error::NotACover);
    }
    if f.apply(start) != alpha.start() {
        return Err(Error::NotInFibre {
            vertex: f.dom().token(start).to_string(),
            target: alpha.base().token(alpha.start()).to_string(),
        });
    }
    lift_walk_unchecked(f, alpha, start)
}

/// Same as [`lift_walk`] but trusts the caller that `f` is a cover.
pub(crate) fn lift_walk_unchecked(f: &Morphism, alpha: &Walk, start: VertexId) -> Result<Walk> {
    let dom = f.dom();
    let mut seq = Vec::with_capacity(alpha.seq().len());
    seq.push(start);
    for &target in &alpha.seq()[1..] {
        let cur = *seq.last().unwrap();
        let next = dom
            .neighbors(cur)
            .iter()
            .find(|&&u| f.apply(u) == target)
            .copied()
            .ok_or(Error::NotACover)?;
        seq.push(next);
    }
    Walk::new(dom.clone(), seq)
}

/// Checks that consecutive chain entries are one homotopy step apart:
/// for every edge `k ~ k'` of the shared domain, `a(k) ~ b(k')` (and
/// symmetrically) in the codomain.
pub fn is_one_step(a: &Morphism, b: &Morphism) -> bool {
    let k = a.dom();
    let cod = a.cod();
    k.edges().all(|(u, v)| {
        cod.has_edge(a.apply(u), b.apply(v)) && cod.has_edge(a.apply(v), b.apply(u))
    })
}

/// Lifts a homotopy chain through a homotopy cover. `chain` is a list of
/// morphisms `K -> cod(f)` with consecutive entries one step apart, and
/// `start_lift` lifts the first entry. Mirrors the step construction: for
/// each vertex `k`, pick a neighbor `k'`, lift the 2-walk
/// `(phi(k') psi(k) phi(k'))` from the lifted image of `k'`, and read the
/// new image off its midpoint.
pub fn lift_homotopy(f: &Morphism, chain: &[Morphism], start_lift: &Morphism) -> Result<Vec<Morphism>> {
    if chain.is_empty() {
        return Err(Error::EmptyChain);
    }
    if !check_cover(f).is_homotopy_cover {
        return Err(Error::NotAHomotopyCover);
    }
    let k = chain[0].dom();
    for (i, entry) in chain.iter().enumerate() {
        if **entry.dom() != **k || **entry.cod() != **f.cod() {
            return Err(Error::DomainMismatch);
        }
        if i + 1 < chain.len() && !is_one_step(entry, &chain[i + 1]) {
            return Err(Error::ChainStepInvalid(i, i + 1));
        }
    }
    if **start_lift.dom() != **k || **start_lift.cod() != **f.dom() {
        return Err(Error::DomainMismatch);
    }
    for v in k.vertices() {
        if f.apply(start_lift.apply(v)) != chain[0].apply(v) {
            return Err(Error::LiftMismatch(k.token(v).to_string()));
        }
    }

    let mut out = vec![start_lift.clone()];
    for i in 0..chain.len() - 1 {
        let lifted = lift_one_step(f, &chain[i], &chain[i + 1], out.last().unwrap(), None)?;
        out.push(lifted);
    }
    Ok(out)
}

/// Lifts a single homotopy step. `neighbor_choice` overrides the default
/// least-neighbor heuristic per vertex; the result is independent of the
/// choice, which tests exercise exhaustively.
pub fn lift_one_step(
    f: &Morphism,
    phi: &Morphism,
    psi: &Morphism,
    phi_lift: &Morphism,
    neighbor_choice: Option<&dyn Fn(VertexId) -> VertexId>,
) -> Result<Morphism> {
    let k = phi.dom();
    let dom = f.dom();
    let mut map = Vec::with_capacity(k.order());
    for kk in k.vertices() {
        let kp = match neighbor_choice {
            Some(choice) => choice(kk),
            None => k.neighbors(kk)[0],
        };
        // 2-walk (phi(k') psi(k) phi(k')) lifted from phi_lift(k').
        let mid = psi.apply(kk);
        let anchor = phi.apply(kp);
        if !f.cod().has_edge(anchor, mid) {
            return Err(Error::ChainStepInvalid(0, 1));
        }
        let start = phi_lift.apply(kp);
        let mid_lift = dom
            .neighbors(start)
            .iter()
            .find(|&&u| f.apply(u) == mid)
            .copied()
            .ok_or(Error::NotACover)?;
        map.push(mid_lift);
    }
    let lifted = Morphism::new(k.clone(), dom.clone(), map)
        .map_err(|e| Error::LiftInconsistent(e.to_string()))?;
    for v in k.vertices() {
        if f.apply(lifted.apply(v)) != psi.apply(v) {
            return Err(Error::LiftInconsistent(format!(
                "lift does not project at {}",
                k.token(v)
            )));
        }
    }
    if !is_one_step(phi_lift, &lifted) {
        return Err(Error::LiftInconsistent("lifted entries are not one step apart".into()));
    }
    Ok(lifted)
}
