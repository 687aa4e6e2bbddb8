//! Planar maps as rotation systems.
//!
//! Edge `e` owns darts `2e` and `2e+1`, so the edge involution is `d ^ 1`.
//! `sigma` lists the darts around each vertex counterclockwise; faces are the
//! cycles of `sigma ∘ alpha`.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationMap {
    sigma: Vec<u32>,
}

#[inline]
fn alpha(d: u32) -> u32 {
    d ^ 1
}

fn cycle_ids(perm: impl Fn(u32) -> u32, len: usize) -> (Vec<u32>, usize) {
    let mut id = vec![u32::MAX; len];
    let mut count = 0;
    for s in 0..len {
        if id[s] != u32::MAX {
            continue;
        }
        let mut d = s as u32;
        while id[d as usize] == u32::MAX {
            id[d as usize] = count as u32;
            d = perm(d);
        }
        count += 1;
    }
    (id, count)
}

impl RotationMap {
    /// Validates that `sigma` is a permutation of `0..2n` with `n ≥ 1`.
    pub fn from_sigma(sigma: Vec<u32>) -> Option<Self> {
        let len = sigma.len();
        if len == 0 || len % 2 == 1 {
            return None;
        }
        let mut seen = vec![false; len];
        for &d in &sigma {
            let d = d as usize;
            if d >= len || seen[d] {
                return None;
            }
            seen[d] = true;
        }
        Some(Self { sigma })
    }

    /// One edge joining two vertices.
    pub fn link() -> Self {
        Self { sigma: vec![0, 1] }
    }

    /// One edge from a vertex to itself.
    pub fn loop_map() -> Self {
        Self { sigma: vec![1, 0] }
    }

    pub fn edges(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self, d: u32) -> u32 {
        self.sigma[d as usize]
    }

    pub fn face_step(&self, d: u32) -> u32 {
        self.sigma(alpha(d))
    }

    /// Vertex index of every dart, and the number of vertices.
    pub fn vertex_ids(&self) -> (Vec<u32>, usize) {
        cycle_ids(|d| self.sigma(d), self.darts())
    }

    pub fn face_ids(&self) -> (Vec<u32>, usize) {
        cycle_ids(|d| self.face_step(d), self.darts())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids().1
    }

    pub fn face_count(&self) -> usize {
        self.face_ids().1
    }

    pub fn is_connected(&self) -> bool {
        let n = self.darts();
        let mut seen = vec![false; n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for e in [alpha(d), self.sigma(d)] {
                if !seen[e as usize] {
                    seen[e as usize] = true;
                    count += 1;
                    stack.push(e);
                }
            }
        }
        count == n
    }

    pub fn is_planar(&self) -> bool {
        self.vertex_count() + self.face_count() == self.edges() + 2
    }

    /// Degree of every face.
    pub fn face_degrees(&self) -> Vec<usize> {
        let (ids, count) = self.face_ids();
        let mut deg = vec![0; count];
        for f in ids {
            deg[f as usize] += 1;
        }
        deg
    }

    /// Adds a vertex of degree one in the corner following dart `c`.
    pub fn with_pendant(&self, c: u32) -> Self {
        let n = self.darts() as u32;
        let (a, b) = (n, n + 1);
        let mut sigma = self.sigma.clone();
        sigma.push(sigma[c as usize]);
        sigma.push(b);
        sigma[c as usize] = a;
        Self { sigma }
    }

    /// Adds an edge from the corner after `c1` to the corner after `c2`.
    /// Planar exactly when both corners lie on one face.
    pub fn with_chord(&self, c1: u32, c2: u32) -> Self {
        let n = self.darts() as u32;
        let (a, b) = (n, n + 1);
        let mut sigma = self.sigma.clone();
        sigma.push(0);
        sigma.push(0);
        sigma[a as usize] = sigma[c1 as usize];
        sigma[c1 as usize] = a;
        sigma[b as usize] = sigma[c2 as usize];
        sigma[c2 as usize] = b;
        Self { sigma }
    }

    /// Every one-edge extension, planar ones only, with repetitions.
    pub fn extensions(&self) -> Vec<RotationMap> {
        let n = self.darts() as u32;
        let (face, _) = self.face_ids();
        let mut out = Vec::new();
        for c in 0..n {
            out.push(self.with_pendant(c));
        }
        for c1 in 0..n {
            for c2 in c1..n {
                // The corner after `c` lies on the face through `sigma(c)`.
                if face[self.sigma(c1) as usize] == face[self.sigma(c2) as usize] {
                    out.push(self.with_chord(c1, c2));
                }
            }
        }
        out
    }

    /// Breadth-first relabelling from `start`: the relabelled `alpha` and
    /// `sigma` of each dart in label order.
    fn trace(&self, start: u32) -> Vec<u32> {
        let n = self.darts();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[start as usize] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for e in [alpha(d), self.sigma(d)] {
                if label[e as usize] == u32::MAX {
                    label[e as usize] = order.len() as u32;
                    order.push(e);
                }
            }
        }
        order
            .iter()
            .flat_map(|&d| [label[alpha(d) as usize], label[self.sigma(d) as usize]])
            .collect()
    }

    /// Canonical code and the number of orientation-preserving
    /// automorphisms (starting darts that reach the minimum trace).
    pub fn canonical(&self) -> (CanonicalCode, usize) {
        let mut best: Option<Vec<u32>> = None;
        let mut hits = 0;
        for s in 0..self.darts() as u32 {
            let t = self.trace(s);
            match &best {
                Some(b) if t > *b => {}
                Some(b) if t == *b => hits += 1,
                _ => {
                    best = Some(t);
                    hits = 1;
                }
            }
        }
        (CanonicalCode(best.expect("at least one dart")), hits)
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        self.canonical().0
    }

    /// Endpoints of every edge.
    fn endpoints(&self) -> (Vec<(usize, usize)>, usize) {
        let (v, count) = self.vertex_ids();
        let ends = (0..self.edges())
            .map(|e| (v[2 * e] as usize, v[2 * e + 1] as usize))
            .collect();
        (ends, count)
    }

    pub fn has_loop(&self) -> bool {
        self.endpoints().0.iter().any(|(u, v)| u == v)
    }

    pub fn has_multiple_edge(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self
            .endpoints()
            .0
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    /// Whether the graph stays connected after deleting `removed` vertices.
    fn connected_without(ends: &[(usize, usize)], vertices: usize, removed: &[usize]) -> bool {
        let mut adj = vec![Vec::new(); vertices];
        for &(u, v) in ends {
            if removed.contains(&u) || removed.contains(&v) {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let Some(start) = (0..vertices).find(|v| !removed.contains(v)) else {
            return true;
        };
        let mut seen = vec![false; vertices];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..vertices).all(|v| seen[v] || removed.contains(&v))
    }

    /// Non-separable: the two one-edge maps, or loopless without a cut
    /// vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.edges() == 1 {
            return true;
        }
        let (ends, vertices) = self.endpoints();
        if ends.iter().any(|(u, v)| u == v) {
            return false;
        }
        (0..vertices).all(|v| Self::connected_without(&ends, vertices, &[v]))
    }

    /// Simple, at least four vertices, and no separating set of one or two
    /// vertices.
    pub fn is_three_connected(&self) -> bool {
        let (ends, vertices) = self.endpoints();
        if vertices < 4 || self.has_loop() || self.has_multiple_edge() {
            return false;
        }
        for u in 0..vertices {
            if !Self::connected_without(&ends, vertices, &[u]) {
                return false;
            }
            for v in u + 1..vertices {
                if !Self::connected_without(&ends, vertices, &[u, v]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Orientation-preserving isomorphism invariant: the lexicographically
/// smallest breadth-first trace over all starting darts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(pub Vec<u32>);

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}
