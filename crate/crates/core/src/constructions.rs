//! Deterministic generators for the degree-diameter families, each paired
//! with the parameters it is expected to have.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3 (got {n})")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::undirected(n, &edges)
}

pub fn gen_complete(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter("complete graph needs m >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i, j));
        }
    }
    Graph::undirected(m, &edges)
}

/// `K_{m,m}` with sides `0..m` and `m..2m`.
pub fn gen_complete_bipartite(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter("complete bipartite graph needs m >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in m..2 * m {
            edges.push((i, j));
        }
    }
    Graph::undirected(2 * m, &edges)
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::undirected(10, &edges).expect("valid Petersen edge list")
}

fn check_word_params(what: &str, alphabet_name: &str, alphabet: usize, k: usize) -> Result<()> {
    if alphabet < 2 || k < 1 {
        return Err(Error::InvalidParameter(format!(
            "{what} needs {alphabet_name} >= 2 and k >= 1 (got {alphabet_name}={alphabet}, k={k})"
        )));
    }
    match alphabet.checked_pow(k as u32) {
        Some(size) if size <= 1 << 22 => Ok(()),
        _ => Err(Error::InvalidParameter(format!("{what} with {alphabet_name}={alphabet}, k={k} is too large"))),
    }
}

/// De Bruijn digraph: words of length `k` over `b` symbols (vertex id = the
/// word read in base `b`), arcs `w -> w[1..] s`. Constant words carry a loop.
pub fn gen_debruijn_digraph(b: usize, k: usize) -> Result<Graph> {
    check_word_params("de Bruijn digraph", "b", b, k)?;
    let n = b.pow(k as u32);
    let mut edges = Vec::with_capacity(n * b);
    for w in 0..n {
        let base = (w * b) % n;
        for s in 0..b {
            edges.push((w, base + s));
        }
    }
    Graph::directed(n, &edges)
}

/// Underlying simple graph of the de Bruijn digraph with loops dropped.
/// Only near-regular: degrees range up to `2b`.
pub fn gen_debruijn_undirected(b: usize, k: usize) -> Result<Graph> {
    let dg = gen_debruijn_digraph(b, k)?;
    let edges: Vec<_> = dg
        .edges()
        .iter()
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    Graph::undirected(dg.n(), &edges)
}

/// Kautz digraph: words of length `k` over `d + 1` symbols with no two
/// consecutive symbols equal, numbered in lexicographic order; arcs are
/// shifts `w -> w[1..] s` with `s != last(w)`.
pub fn gen_kautz(d: usize, k: usize) -> Result<Graph> {
    check_word_params("Kautz digraph", "d", d, k)?;
    let words = kautz_words(d + 1, k);
    let index: HashMap<&[usize], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut edges = Vec::with_capacity(words.len() * d);
    let mut next = vec![0; k];
    for (i, w) in words.iter().enumerate() {
        let last = w[k - 1];
        next[..k - 1].copy_from_slice(&w[1..]);
        for s in (0..=d).filter(|&s| s != last) {
            next[k - 1] = s;
            edges.push((i, index[next.as_slice()]));
        }
    }
    Graph::directed(words.len(), &edges)
}

fn kautz_words(alphabet: usize, k: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = (0..alphabet).map(|s| vec![s]).collect();
    for _ in 1..k {
        words = words
            .into_iter()
            .flat_map(|w| {
                let last = w[w.len() - 1];
                (0..alphabet).filter(move |&s| s != last).map(move |s| {
                    let mut x = w.clone();
                    x.push(s);
                    x
                })
            })
            .collect();
    }
    words
}

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|i| i * i <= q).all(|i| !q.is_multiple_of(i))
}

/// Canonical projective points over `GF(q)`: `(0,0,1)`, then `(0,1,c)`, then
/// `(1,a,b)`, each in lexicographic order.
pub fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|c| [0, 1, c]));
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    pts
}

/// Erdős–Rényi polarity graph over a prime field: projective points, `u ~ v`
/// iff `u·v = 0 (mod q)` and `u != v`. The `q + 1` absolute points (`u·u = 0`)
/// have degree `q`, the rest `q + 1`.
pub fn gen_polarity(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!("q must be prime (got {q})")));
    }
    if q > 1000 {
        return Err(Error::InvalidParameter(format!("q = {q} is too large")));
    }
    let pts = projective_points(q);
    let dot = |a: &[usize; 3], b: &[usize; 3]| (a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q;
    let mut edges = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if dot(&pts[i], &pts[j]) == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::undirected(pts.len(), &edges)
}

/// Two `K_{n/2}` joined by two bridges: edges `{0,1}` and `{n/2, n/2+1}` are
/// removed and `{0, n/2}`, `{1, n/2+1}` added, keeping the graph
/// `(n/2 - 1)`-regular with diameter 3.
pub fn gen_two_cliques_bridged(n: usize) -> Result<Graph> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!("two_cliques_bridged needs even n >= 6 (got {n})")));
    }
    let h = n / 2;
    let mut edges = Vec::new();
    for side in [0, h] {
        for i in side..side + h {
            for j in i + 1..side + h {
                if (i, j) != (side, side + 1) {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.push((0, h));
    edges.push((1, h + 1));
    Graph::undirected(n, &edges)
}

/// Named fixtures: `petersen`, `complete(m)`, `complete_bipartite(m)`.
pub fn gen_named(name: &str) -> Result<Graph> {
    let name = name.trim();
    if name == "petersen" {
        return Ok(gen_petersen());
    }
    let arg = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?.trim().parse().ok()
    };
    if let Some(m) = arg("complete_bipartite") {
        return gen_complete_bipartite(m);
    }
    if let Some(m) = arg("complete") {
        return gen_complete(m);
    }
    Err(Error::UnknownFamily(name.to_string()))
}

/// A family instance with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle { n: usize },
    Complete { m: usize },
    CompleteBipartite { m: usize },
    Petersen,
    DeBruijnDigraph { b: usize, k: usize },
    DeBruijnUndirected { b: usize, k: usize },
    Kautz { d: usize, k: usize },
    Polarity { q: usize },
    TwoCliquesBridged { n: usize },
}

/// Degree expectation: exact for regular families, a range otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeExpectation {
    pub min: usize,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub expected_n: usize,
    pub expected_degree: DegreeExpectation,
    pub expected_k: usize,
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::Petersen => "petersen",
            Family::DeBruijnDigraph { .. } => "debruijn_digraph",
            Family::DeBruijnUndirected { .. } => "debruijn_undirected",
            Family::Kautz { .. } => "kautz",
            Family::Polarity { .. } => "polarity",
            Family::TwoCliquesBridged { .. } => "two_cliques_bridged",
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Family::Cycle { n } => format!("cycle(n={n})"),
            Family::Complete { m } => format!("complete(m={m})"),
            Family::CompleteBipartite { m } => format!("complete_bipartite(m={m})"),
            Family::Petersen => "petersen".into(),
            Family::DeBruijnDigraph { b, k } => format!("debruijn_digraph(b={b},k={k})"),
            Family::DeBruijnUndirected { b, k } => format!("debruijn_undirected(b={b},k={k})"),
            Family::Kautz { d, k } => format!("kautz(d={d},k={k})"),
            Family::Polarity { q } => format!("polarity(q={q})"),
            Family::TwoCliquesBridged { n } => format!("two_cliques_bridged(n={n})"),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Cycle { n } => gen_cycle(n),
            Family::Complete { m } => gen_complete(m),
            Family::CompleteBipartite { m } => gen_complete_bipartite(m),
            Family::Petersen => Ok(gen_petersen()),
            Family::DeBruijnDigraph { b, k } => gen_debruijn_digraph(b, k),
            Family::DeBruijnUndirected { b, k } => gen_debruijn_undirected(b, k),
            Family::Kautz { d, k } => gen_kautz(d, k),
            Family::Polarity { q } => gen_polarity(q),
            Family::TwoCliquesBridged { n } => gen_two_cliques_bridged(n),
        }
    }

    /// Parameters the generator promises. The undirected de Bruijn graph is
    /// only bounded above in degree; its lower end is reported by measurement.
    pub fn spec(&self) -> FamilySpec {
        let exact = |d: usize| DegreeExpectation { min: d, max: d };
        let (expected_n, expected_degree, expected_k) = match *self {
            Family::Cycle { n } => (n, exact(2), n / 2),
            Family::Complete { m } => (m, exact(m - 1), usize::from(m > 1)),
            Family::CompleteBipartite { m } => (2 * m, exact(m), if m == 1 { 1 } else { 2 }),
            Family::Petersen => (10, exact(3), 2),
            Family::DeBruijnDigraph { b, k } => (b.pow(k as u32), exact(b), k),
            Family::DeBruijnUndirected { b, k: 1 } => (b, exact(b - 1), 1),
            Family::DeBruijnUndirected { b, k } => {
                (b.pow(k as u32), DegreeExpectation { min: 2 * b - 2, max: 2 * b }, k)
            }
            Family::Kautz { d, k } => ((d + 1) * d.pow(k as u32 - 1), exact(d), k),
            Family::Polarity { q } => (q * q + q + 1, DegreeExpectation { min: q, max: q + 1 }, 2),
            Family::TwoCliquesBridged { n } => (n, exact(n / 2 - 1), 3),
        };
        FamilySpec { family: *self, expected_n, expected_degree, expected_k }
    }

    /// Parses `name` with `key=value` parameters, e.g. `("kautz", &[("d", 2), ("k", 3)])`.
    pub fn from_parts(name: &str, params: &[(&str, usize)]) -> Result<Family> {
        let get = |key: &str| -> Result<usize> {
            params
                .iter()
                .find(|(k, _)| *k == key)
                .map(|&(_, v)| v)
                .ok_or_else(|| Error::InvalidParameter(format!("family `{name}` needs --{key}")))
        };
        Ok(match name {
            "cycle" => Family::Cycle { n: get("n")? },
            "complete" => Family::Complete { m: get("m")? },
            "complete_bipartite" => Family::CompleteBipartite { m: get("m")? },
            "petersen" => Family::Petersen,
            "debruijn_digraph" => Family::DeBruijnDigraph { b: get("b")?, k: get("k")? },
            "debruijn_undirected" => Family::DeBruijnUndirected { b: get("b")?, k: get("k")? },
            "kautz" => Family::Kautz { d: get("d")?, k: get("k")? },
            "polarity" => Family::Polarity { q: get("q")? },
            "two_cliques_bridged" => Family::TwoCliquesBridged { n: get("n")? },
            other => return Err(Error::UnknownFamily(other.to_string())),
        })
    }
}

/// Mismatch found by [`self_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheckFailure {
    pub family: String,
    pub what: String,
}

/// Builds the family and compares measured `(n, degrees, diameter)` with its spec.
pub fn self_check(family: &Family) -> Result<std::result::Result<Graph, SelfCheckFailure>> {
    let g = family.build()?;
    let spec = family.spec();
    let fail = |what: String| Ok(Err(SelfCheckFailure { family: family.label(), what }));
    if g.n() != spec.expected_n {
        return fail(format!("n = {}, expected {}", g.n(), spec.expected_n));
    }
    let p = g.degree_profile();
    let (lo, hi) = (p.min(), p.max());
    let want = spec.expected_degree;
    let degree_ok = if want.min == want.max {
        p.regular_degree == Some(want.min)
    } else {
        lo >= want.min && hi <= want.max
    };
    if !degree_ok {
        return fail(format!("degrees {lo}..={hi}, expected {}..={}", want.min, want.max));
    }
    match g.diameter().diameter {
        Some(k) if k == spec.expected_k => Ok(Ok(g)),
        other => fail(format!("diameter {other:?}, expected {}", spec.expected_k)),
    }
}
