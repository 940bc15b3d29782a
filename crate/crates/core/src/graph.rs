//! Simple undirected graphs with dense adjacency and optional structured labels.
//!
//! Constructors cover the families needed here: complete graphs, complete
//! bipartite graphs, cycles, crown graphs and the line graph of the crown graph
//! in its ordered-pair form. Generic operators (line graph, direct product,
//! complement) keep labels so that derived vertex sets stay readable.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic_small`].
pub const ISOMORPHISM_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    Index(usize),
    /// Vertex `i` (1-based) on one side of a bipartite graph.
    Sided(Side, usize),
    /// Ordered pair `(i, j)` with `i != j`.
    Pair(usize, usize),
    /// Vertex of a direct product.
    Product(Box<VertexLabel>, Box<VertexLabel>),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Index(i) => write!(f, "{i}"),
            VertexLabel::Sided(Side::Left, i) => write!(f, "L{i}"),
            VertexLabel::Sided(Side::Right, i) => write!(f, "R{i}"),
            VertexLabel::Pair(i, j) => write!(f, "({i},{j})"),
            VertexLabel::Product(a, b) => write!(f, "<{a},{b}>"),
        }
    }
}

/// Simple undirected graph on vertices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    adjacency: Vec<bool>,
    labels: Option<Vec<VertexLabel>>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            order,
            adjacency: vec![false; order * order],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!("duplicate edge ({u},{v})")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Attaches labels; they must be pairwise distinct and one per vertex.
    pub fn with_labels(mut self, labels: Vec<VertexLabel>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::invalid(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order
            )));
        }
        let mut sorted: Vec<&VertexLabel> = labels.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("vertex labels are not distinct"));
        }
        if labels
            .iter()
            .any(|l| matches!(l, VertexLabel::Pair(i, j) if i == j))
        {
            return Err(Error::invalid("ordered-pair label with equal coordinates"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adjacency[u * self.order + v] = true;
        self.adjacency[v * self.order + u] = true;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.order + v]
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Index of the vertex carrying `label`, if labels are present.
    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adjacency[v * self.order..(v + 1) * self.order];
        row.iter()
            .enumerate()
            .filter_map(|(u, &adj)| adj.then_some(u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Common degree if every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        let degrees = self.degrees();
        match degrees.split_first() {
            None => Some(0),
            Some((&first, rest)) => rest.iter().all(|&d| d == first).then_some(first),
        }
    }

    /// Edges as `(u, v)` with `u < v`, ascending in `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().filter(|&&a| a).count() / 2
    }

    /// Checks symmetry and absence of self-loops.
    pub fn is_valid(&self) -> bool {
        (0..self.order).all(|u| {
            !self.has_edge(u, u) && (0..u).all(|v| self.has_edge(u, v) == self.has_edge(v, u))
        })
    }

    /// Serializes to the edge-list text format: a `# order N` header followed
    /// by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# order {}\n", self.order);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Blank lines are ignored; comment
    /// lines other than the header are not accepted.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut order = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            if let Some(rest) = line.strip_prefix('#') {
                let mut parts = rest.split_whitespace();
                match (parts.next(), parts.next(), parts.next()) {
                    (Some("order"), Some(n), None) if order.is_none() && edges.is_empty() => {
                        order = Some(
                            n.parse::<usize>()
                                .map_err(|e| parse_err(format!("bad order: {e}")))?,
                        );
                    }
                    _ => return Err(parse_err(format!("unexpected header line {line:?}"))),
                }
                continue;
            }
            let n = order.ok_or_else(|| parse_err("missing '# order N' header".into()))?;
            let mut parts = line.split_whitespace();
            let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => return Err(parse_err(format!("expected 'u v', got {line:?}"))),
            };
            let u: usize = u.parse().map_err(|e| parse_err(format!("bad index: {e}")))?;
            let v: usize = v.parse().map_err(|e| parse_err(format!("bad index: {e}")))?;
            if u >= n || v >= n {
                return Err(parse_err(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(parse_err(format!("self-loop at {u}")));
            }
            edges.push((u, v));
        }
        let order = order.ok_or(Error::Parse {
            line: 0,
            message: "missing '# order N' header".into(),
        })?;
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            if g.has_edge(u, v) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("duplicate edge ({u},{v})"),
                });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }
}

/// Complete graph `K_n`.
pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("complete graph needs n >= 1"));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    g.with_labels((0..n).map(VertexLabel::Index).collect())
}

/// Complete bipartite graph `K_{p,q}`; left vertices come first.
pub fn make_complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(Error::invalid("complete bipartite graph needs p, q >= 1"));
    }
    let mut g = Graph::empty(p + q);
    for u in 0..p {
        for v in 0..q {
            g.set_edge(u, p + v);
        }
    }
    let labels = (1..=p)
        .map(|i| VertexLabel::Sided(Side::Left, i))
        .chain((1..=q).map(|j| VertexLabel::Sided(Side::Right, j)))
        .collect();
    g.with_labels(labels)
}

/// Cycle `C_n`, vertex `v` adjacent to `v ± 1 mod n`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("cycle needs n >= 3"));
    }
    let mut g = Graph::empty(n);
    for v in 0..n {
        g.set_edge(v, (v + 1) % n);
    }
    g.with_labels((0..n).map(VertexLabel::Index).collect())
}

/// Crown graph `Cr(n)`: `K_{n,n}` minus the perfect matching `{L_i, R_i}`.
///
/// Vertices `0..n` are `L1..Ln`, vertices `n..2n` are `R1..Rn`.
pub fn make_crown(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("crown graph needs n >= 3"));
    }
    let mut g = Graph::empty(2 * n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                g.set_edge(i, n + j);
            }
        }
    }
    let labels = (1..=n)
        .map(|i| VertexLabel::Sided(Side::Left, i))
        .chain((1..=n).map(|j| VertexLabel::Sided(Side::Right, j)))
        .collect();
    g.with_labels(labels)
}

/// Vertices of `L(Cr(n))` in lexicographic order, `i` major.
pub fn line_crown_vertices(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Index of `(i, j)` in the lexicographic order of [`line_crown_vertices`].
pub fn line_crown_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && (1..=n).contains(&i) && (1..=n).contains(&j));
    (i - 1) * (n - 1) + if j < i { j - 1 } else { j - 2 }
}

/// Line graph of the crown graph in ordered-pair form: `(i,j) ~ (r,s)` iff
/// `i = r` or `j = s`.
pub fn make_line_crown(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("line graph of the crown graph needs n >= 3"));
    }
    let vertices = line_crown_vertices(n);
    let mut g = Graph::empty(vertices.len());
    for (a, &(i, j)) in vertices.iter().enumerate() {
        for (b, &(r, s)) in vertices.iter().enumerate().skip(a + 1) {
            if i == r || j == s {
                g.set_edge(a, b);
            }
        }
    }
    g.with_labels(
        vertices
            .into_iter()
            .map(|(i, j)| VertexLabel::Pair(i, j))
            .collect(),
    )
}

fn label_or_index(g: &Graph, v: usize) -> VertexLabel {
    g.label(v).cloned().unwrap_or(VertexLabel::Index(v))
}

/// Direct (tensor) product: `(u1,u2) ~ (w1,w2)` iff `u1 ~ w1` and `u2 ~ w2`.
///
/// Vertex `(u, v)` gets index `u * order(h) + v`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (p, q) = (g.order(), h.order());
    let mut out = Graph::empty(p * q);
    for (u1, w1) in g.edges() {
        for (u2, w2) in h.edges() {
            out.set_edge(u1 * q + u2, w1 * q + w2);
            out.set_edge(u1 * q + w2, w1 * q + u2);
        }
    }
    let mut labels = Vec::with_capacity(p * q);
    for u in 0..p {
        for v in 0..q {
            labels.push(VertexLabel::Product(
                Box::new(label_or_index(g, u)),
                Box::new(label_or_index(h, v)),
            ));
        }
    }
    out.with_labels(labels)
}

/// `G × K_2`.
pub fn double_cover(g: &Graph) -> Result<Graph> {
    direct_product(g, &make_complete(2)?)
}

/// Line graph, one vertex per edge in the order of [`Graph::edges`].
///
/// A vertex is labelled by its edge's endpoints `(u, v)`, `u < v`. When every
/// edge joins some `L_i` to some `R_j` with `i != j`, labels are normalized to
/// `(i, j)`, so the line graph of [`make_crown`] carries the same labels as
/// [`make_line_crown`].
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::invalid("line graph of an edgeless graph"));
    }
    let mut out = Graph::empty(edges.len());
    for a in 0..edges.len() {
        let (u, v) = edges[a];
        for (b, &(x, y)) in edges.iter().enumerate().skip(a + 1) {
            if u == x || u == y || v == x || v == y {
                out.set_edge(a, b);
            }
        }
    }
    let crown_pair = |u: usize, v: usize| match (g.label(u), g.label(v)) {
        (Some(VertexLabel::Sided(Side::Left, i)), Some(VertexLabel::Sided(Side::Right, j)))
        | (Some(VertexLabel::Sided(Side::Right, j)), Some(VertexLabel::Sided(Side::Left, i)))
            if i != j =>
        {
            Some(VertexLabel::Pair(*i, *j))
        }
        _ => None,
    };
    // Normalize only when every edge has the crown form, so labels stay distinct.
    let normalized: Option<Vec<VertexLabel>> =
        edges.iter().map(|&(u, v)| crown_pair(u, v)).collect();
    let labels = normalized
        .unwrap_or_else(|| edges.iter().map(|&(u, v)| VertexLabel::Pair(u, v)).collect());
    out.with_labels(labels)
}

/// Complement on the same vertex set.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                out.set_edge(u, v);
            }
        }
    }
    out.labels = g.labels.clone();
    out
}

/// Exhaustive isomorphism test for graphs of order at most [`ISOMORPHISM_LIMIT`].
///
/// Vertices of `g` are matched in order of decreasing degree, and a vertex may
/// only map to a vertex of `h` with the same degree.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.order();
    for order in [n, h.order()] {
        if order > ISOMORPHISM_LIMIT {
            return Err(Error::UnsupportedSize {
                order,
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let dg = g.degrees();
    let dh = h.degrees();
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dg[v]));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_mapping(g, h, &dg, &dh, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend_mapping(
    g: &Graph,
    h: &Graph,
    dg: &[usize],
    dh: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.order() {
        if used[w] || dh[w] != dg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_mapping(g, h, dg, dh, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}
