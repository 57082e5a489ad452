//! Finite undirected graphs: loops allowed, no multi-edges, connected,
//! no isolated vertices. Vertices are interned string tokens addressed by
//! dense indices.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::walk::Walk;

/// Dense index of a vertex inside one particular [`Graph`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub(crate) u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// A 4-cycle `w ~ x ~ y ~ z ~ w` with `w != y` and `x != z`, stored in
/// canonical orientation: lexicographically least among the eight dihedral
/// readings, so `w` is the minimum vertex and `x < z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Diamond {
    pub w: VertexId,
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
}

impl Diamond {
    fn canonical(w: VertexId, x: VertexId, y: VertexId, z: VertexId) -> Diamond {
        let cycle = [w, x, y, z];
        let mut best = [w, x, y, z];
        for r in 0..4 {
            let fwd = [cycle[r], cycle[(r + 1) % 4], cycle[(r + 2) % 4], cycle[(r + 3) % 4]];
            let bwd = [cycle[r], cycle[(r + 3) % 4], cycle[(r + 2) % 4], cycle[(r + 1) % 4]];
            if fwd < best {
                best = fwd;
            }
            if bwd < best {
                best = bwd;
            }
        }
        Diamond { w: best[0], x: best[1], y: best[2], z: best[3] }
    }

    pub fn tokens(&self, g: &Graph) -> [String; 4] {
        [
            g.token(self.w).to_string(),
            g.token(self.x).to_string(),
            g.token(self.y).to_string(),
            g.token(self.z).to_string(),
        ]
    }
}

/// Finite undirected graph. Immutable after construction.
#[derive(Clone)]
pub struct Graph {
    name: String,
    names: Vec<String>,
    index: HashMap<String, u32>,
    adj: Vec<Vec<VertexId>>,
    edges: BTreeSet<(u32, u32)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {} vertices, {} edges)", self.name, self.order(), self.size())
    }
}

impl Graph {
    /// Builds and fully validates a graph: no duplicate vertices or edges,
    /// every edge endpoint declared, connected, no isolated vertices.
    pub fn build<S: AsRef<str>>(name: &str, vertices: &[S], edges: &[(S, S)]) -> Result<Graph> {
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for v in vertices {
            let tok = v.as_ref().to_string();
            if index.insert(tok.clone(), names.len() as u32).is_some() {
                return Err(Error::DuplicateVertex(tok));
            }
            names.push(tok);
        }
        if names.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut edge_set = BTreeSet::new();
        let mut adj = vec![Vec::new(); names.len()];
        for (a, b) in edges {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UndeclaredVertex(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UndeclaredVertex(b.as_ref().to_string()))?;
            let key = (ia.min(ib), ia.max(ib));
            if !edge_set.insert(key) {
                return Err(Error::DuplicateEdge { a: a.as_ref().to_string(), b: b.as_ref().to_string() });
            }
            if ia == ib {
                adj[ia as usize].push(VertexId(ia));
            } else {
                adj[ia as usize].push(VertexId(ib));
                adj[ib as usize].push(VertexId(ia));
            }
        }
        for list in &mut adj {
            list.sort();
        }
        let g = Graph { name: name.to_string(), names, index, adj, edges: edge_set };
        g.check_no_isolated()?;
        g.check_connected()?;
        Ok(g)
    }

    fn check_no_isolated(&self) -> Result<()> {
        for v in self.vertices() {
            if self.adj[v.index()].is_empty() {
                return Err(Error::IsolatedVertex(self.token(v).to_string()));
            }
        }
        Ok(())
    }

    fn check_connected(&self) -> Result<()> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(VertexId(0));
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::Disconnected(self.names[i].clone(), self.names[0].clone()));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.names.len()
    }

    /// Number of edges (a loop counts once).
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().map(|&(a, b)| (VertexId(a), VertexId(b)))
    }

    pub fn vertex(&self, token: &str) -> Option<VertexId> {
        self.index.get(token).map(|&i| VertexId(i))
    }

    pub fn vertex_or_err(&self, token: &str) -> Result<VertexId> {
        self.vertex(token).ok_or_else(|| Error::UnknownVertex(token.to_string()))
    }

    pub fn token(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    /// Sorted open neighborhood; contains `v` itself exactly when `v` is looped.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&(a.0.min(b.0), a.0.max(b.0)))
    }

    pub fn is_looped(&self, v: VertexId) -> bool {
        self.has_edge(v, v)
    }

    /// Eccentricity of `v` (longest shortest path out of `v`).
    pub fn eccentricity(&self, v: VertexId) -> usize {
        let mut dist = vec![usize::MAX; self.order()];
        dist[v.index()] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(v);
        let mut max = 0;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if dist[w.index()] == usize::MAX {
                    dist[w.index()] = dist[u.index()] + 1;
                    max = max.max(dist[w.index()]);
                    queue.push_back(w);
                }
            }
        }
        max
    }

    /// All diamonds in canonical form, sorted.
    pub fn diamonds(&self) -> Vec<Diamond> {
        let mut found = BTreeSet::new();
        for w in self.vertices() {
            for &x in self.neighbors(w) {
                for &y in self.neighbors(x) {
                    if y == w {
                        continue;
                    }
                    for &z in self.neighbors(y) {
                        if z == x || !self.has_edge(z, w) {
                            continue;
                        }
                        found.insert(Diamond::canonical(w, x, y, z));
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    /// All walks `(v x y)` of length 2 out of `v`, in vertex order.
    pub fn n2_walks(self: &Arc<Graph>, v: VertexId) -> Result<Vec<Walk>> {
        if v.index() >= self.order() {
            return Err(Error::UnknownVertex(format!("v{}", v.0)));
        }
        let mut out = Vec::new();
        for &x in self.neighbors(v) {
            for &y in self.neighbors(x) {
                out.push(Walk::new(self.clone(), vec![v, x, y])?);
            }
        }
        Ok(out)
    }

    /// Renders the line-oriented graph file format: vertices first, then
    /// edges, both sorted by token.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph {}\n", self.name));
        let mut toks: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        toks.sort();
        for t in toks {
            out.push_str(&format!("v {}\n", t));
        }
        let mut edge_toks: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (ta, tb) = (self.names[a as usize].as_str(), self.names[b as usize].as_str());
                if ta <= tb {
                    (ta, tb)
                } else {
                    (tb, ta)
                }
            })
            .collect();
        edge_toks.sort();
        for (a, b) in edge_toks {
            out.push_str(&format!("e {} {}\n", a, b));
        }
        out
    }

    /// Undirected DOT export; a loop renders as `a -- a`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph {} {{\n", dot_id(&self.name)));
        for v in self.vertices() {
            out.push_str(&format!("  {};\n", dot_id(self.token(v))));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", dot_id(self.token(a)), dot_id(self.token(b))));
        }
        out.push_str("}\n");
        out
    }

    /// Parses the graph file format. `#` starts a comment, `graph <name>` is
    /// an optional header, `v <id>` declares a vertex, `e <id> <id>` an edge.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut name = String::from("g");
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            };
            let mut parts = line.split_whitespace();
            let Some(head) = parts.next() else { continue };
            let rest: Vec<&str> = parts.collect();
            match head {
                "graph" => match rest.as_slice() {
                    [n] => name = n.to_string(),
                    _ => {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: "expected: graph <name>".into(),
                        })
                    }
                },
                "v" => match rest.as_slice() {
                    [tok] => vertices.push(tok.to_string()),
                    _ => {
                        return Err(Error::Parse { line: lineno + 1, msg: "expected: v <id>".into() })
                    }
                },
                "e" => match rest.as_slice() {
                    [a, b] => edges.push((a.to_string(), b.to_string())),
                    _ => {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: "expected: e <id> <id>".into(),
                        })
                    }
                },
                other => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("unknown directive {other}"),
                    })
                }
            }
        }
        Graph::build(&name, &vertices, &edges)
    }

    /// Renames the graph, keeping everything else.
    pub fn with_name(mut self, name: &str) -> Graph {
        self.name = name.to_string();
        self
    }
}

fn dot_id(s: &str) -> String {
    let ok = match s.chars().next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        Some(c) if c.is_ascii_digit() => s.chars().all(|c| c.is_ascii_digit()),
        _ => false,
    };
    if ok {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('\"', "\\\""))
    }
}

/// Loads a graph from the file format, validating all invariants.
pub fn load_graph(text: &str) -> Result<Graph> {
    Graph::parse(text)
}
