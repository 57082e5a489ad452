//! Deterministic generators for the graph families used throughout:
//! paths, looped paths, cycles, complete and complete bipartite graphs,
//! wheels, Kneser graphs, and the two running-example graphs `paper-g`
//! and `paper-g-tilde` together with the covering morphism between them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::morphism::Morphism;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    /// Path on `n` vertices `0..n-1`, `n >= 2`.
    Path(usize),
    /// Looped path on `n` vertices `0..n-1`, every vertex looped, `n >= 1`.
    LoopedPath(usize),
    /// Cycle on `n` vertices `0..n-1`, `n >= 3`.
    Cycle(usize),
    /// Complete graph on vertices `1..=n`, `n >= 2`.
    Complete(usize),
    /// Complete bipartite graph on `a1..an`, `b1..bm`.
    CompleteBipartite(usize, usize),
    /// Wheel with rim `1..=n` and hub `c`, `n >= 3`.
    Wheel(usize),
    /// Kneser graph K(n,k): k-subsets of `1..=n`, edges join disjoint
    /// subsets. Requires `n >= 2k+1` so the graph is connected.
    Kneser(usize, usize),
    /// The 6-vertex running example: 5-cycle a b c d e plus b' with
    /// b' ~ a and b' ~ c.
    PaperG,
    /// The 12-vertex double cover of `PaperG` from the same figure.
    PaperGTilde,
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::LoopedPath(_) => "looped-path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete-bipartite",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Kneser(..) => "kneser",
            FamilySpec::PaperG => "paper-g",
            FamilySpec::PaperGTilde => "paper-g-tilde",
        }
    }

    /// Parses `family [params]` as given on the CLI.
    pub fn parse(family: &str, params: &[usize]) -> Result<FamilySpec> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::FamilyParameter {
                    family: family.to_string(),
                    msg: format!("expected {k} integer parameter(s), got {}", params.len()),
                })
            }
        };
        match family {
            "path" => want(1).map(|_| FamilySpec::Path(params[0])),
            "looped-path" => want(1).map(|_| FamilySpec::LoopedPath(params[0])),
            "cycle" => want(1).map(|_| FamilySpec::Cycle(params[0])),
            "complete" => want(1).map(|_| FamilySpec::Complete(params[0])),
            "complete-bipartite" => {
                want(2).map(|_| FamilySpec::CompleteBipartite(params[0], params[1]))
            }
            "wheel" => want(1).map(|_| FamilySpec::Wheel(params[0])),
            "kneser" => want(2).map(|_| FamilySpec::Kneser(params[0], params[1])),
            "paper-g" => want(0).map(|_| FamilySpec::PaperG),
            "paper-g-tilde" => want(0).map(|_| FamilySpec::PaperGTilde),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

fn bad(family: &str, msg: &str) -> Error {
    Error::FamilyParameter { family: family.to_string(), msg: msg.to_string() }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path(n) => {
            if n < 2 {
                return Err(bad("path", "need n >= 2"));
            }
            let vs: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let es: Vec<(String, String)> =
                (0..n - 1).map(|i| (i.to_string(), (i + 1).to_string())).collect();
            Graph::build(&format!("P{n}"), &vs, &es)
        }
        FamilySpec::LoopedPath(n) => {
            if n < 1 {
                return Err(bad("looped-path", "need n >= 1"));
            }
            let vs: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let mut es: Vec<(String, String)> =
                (0..n).map(|i| (i.to_string(), i.to_string())).collect();
            es.extend((0..n.saturating_sub(1)).map(|i| (i.to_string(), (i + 1).to_string())));
            Graph::build(&format!("I{n}"), &vs, &es)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle", "need n >= 3"));
            }
            let vs: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let es: Vec<(String, String)> =
                (0..n).map(|i| (i.to_string(), ((i + 1) % n).to_string())).collect();
            Graph::build(&format!("C{n}"), &vs, &es)
        }
        FamilySpec::Complete(n) => {
            if n < 2 {
                return Err(bad("complete", "need n >= 2"));
            }
            let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            let mut es = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    es.push((i.to_string(), j.to_string()));
                }
            }
            Graph::build(&format!("K{n}"), &vs, &es)
        }
        FamilySpec::CompleteBipartite(n, m) => {
            if n < 1 || m < 1 {
                return Err(bad("complete-bipartite", "need n, m >= 1"));
            }
            let mut vs: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
            vs.extend((1..=m).map(|j| format!("b{j}")));
            let mut es = Vec::new();
            for i in 1..=n {
                for j in 1..=m {
                    es.push((format!("a{i}"), format!("b{j}")));
                }
            }
            Graph::build(&format!("K{n}_{m}"), &vs, &es)
        }
        FamilySpec::Wheel(n) => {
            if n < 3 {
                return Err(bad("wheel", "need rim size n >= 3"));
            }
            let mut vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
            vs.push("c".to_string());
            let mut es: Vec<(String, String)> =
                (1..=n).map(|i| (i.to_string(), (i % n + 1).to_string())).collect();
            es.extend((1..=n).map(|i| ("c".to_string(), i.to_string())));
            Graph::build(&format!("W{n}+1"), &vs, &es)
        }
        FamilySpec::Kneser(n, k) => {
            if k < 1 {
                return Err(bad("kneser", "need k >= 1"));
            }
            if n < 2 * k + 1 {
                return Err(bad("kneser", "need n >= 2k+1 for a connected graph"));
            }
            let subsets = k_subsets(n, k);
            let token = |s: &Vec<usize>| {
                format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            };
            let vs: Vec<String> = subsets.iter().map(token).collect();
            let mut es = Vec::new();
            for (i, a) in subsets.iter().enumerate() {
                for b in subsets.iter().skip(i + 1) {
                    if a.iter().all(|x| !b.contains(x)) {
                        es.push((token(a), token(b)));
                    }
                }
            }
            Graph::build(&format!("K({n},{k})"), &vs, &es)
        }
        FamilySpec::PaperG => Graph::parse(PAPER_G),
        FamilySpec::PaperGTilde => Graph::parse(PAPER_G_TILDE),
    }
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

pub const PAPER_G: &str = include_str!("../assets/paper-g.graph");
pub const PAPER_G_TILDE: &str = include_str!("../assets/paper-g-tilde.graph");
pub const PAPER_COVER_MORPH: &str = include_str!("../assets/paper-g-cover.morph");

/// The bundled covering morphism `paper-g-tilde -> paper-g` (x_i maps to x).
pub fn paper_cover_morphism() -> Morphism {
    let dom = Arc::new(generate(&FamilySpec::PaperGTilde).expect("bundled graph"));
    let cod = Arc::new(generate(&FamilySpec::PaperG).expect("bundled graph"));
    crate::morphism::parse_morphism_body(PAPER_COVER_MORPH, &dom, &cod).expect("bundled morphism")
}
