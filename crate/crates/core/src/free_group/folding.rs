use std::collections::{BTreeMap, VecDeque};

use super::{FreeHom, Word, WordError};

/// A directed edge labeled by a positive generator index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FoldedEdge {
    pub src: usize,
    pub dst: usize,
    pub label: u32,
}

/// The folded core graph of the image subgroup of a free-group
/// homomorphism, base-pointed at vertex 0 and canonically numbered by a
/// breadth-first traversal.
///
/// Invariants (checked by `debug_verify` and the module tests): the graph is
/// deterministic (no two edges with the same label share a source or share a
/// target), connected, and every non-base vertex has degree at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldedGraph {
    vertices: usize,
    base: usize,
    label_rank: usize,
    edges: Vec<FoldedEdge>,
}

impl FoldedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn edges(&self) -> &[FoldedEdge] {
        &self.edges
    }

    /// Rank of the subgroup carried by the graph: |E| - |V| + 1.
    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.vertices
    }

    /// Membership of a word in the subgroup: trace the word from the base
    /// vertex and require the trace to close up at the base.
    pub fn contains(&self, w: &Word) -> Result<bool, WordError> {
        if w.rank() != self.label_rank {
            return Err(WordError::RankMismatch {
                expected: self.label_rank,
                found: w.rank(),
            });
        }
        let mut out: BTreeMap<(usize, u32), usize> = BTreeMap::new();
        let mut inc: BTreeMap<(usize, u32), usize> = BTreeMap::new();
        for e in &self.edges {
            out.insert((e.src, e.label), e.dst);
            inc.insert((e.dst, e.label), e.src);
        }
        let mut at = self.base;
        for &l in w.letters() {
            let next = if l > 0 {
                out.get(&(at, l as u32))
            } else {
                inc.get(&(at, (-l) as u32))
            };
            match next {
                Some(&v) => at = v,
                None => return Ok(false),
            }
        }
        Ok(at == self.base)
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices];
        for e in &self.edges {
            deg[e.src] += 1;
            deg[e.dst] += 1;
        }
        deg
    }

    pub fn is_deterministic(&self) -> bool {
        let mut seen_out = BTreeMap::new();
        let mut seen_in = BTreeMap::new();
        for e in &self.edges {
            if seen_out.insert((e.src, e.label), e.dst).is_some() {
                return false;
            }
            if seen_in.insert((e.dst, e.label), e.src).is_some() {
                return false;
            }
        }
        true
    }

    pub fn is_core(&self) -> bool {
        self.degrees()
            .iter()
            .enumerate()
            .all(|(v, &d)| v == self.base || d >= 2)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertices];
        let mut queue = VecDeque::from([self.base]);
        seen[self.base] = true;
        while let Some(v) = queue.pop_front() {
            for e in &self.edges {
                for w in [e.src, e.dst] {
                    if (e.src == v || e.dst == v) && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Merges classes, keeping the smaller representative (so the base
    /// vertex 0 always survives as a representative).
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        let (keep, drop) = if ra <= rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop] = keep;
    }
}

/// Stallings folding: computes the folded core graph of `im(f)`.
pub fn fold(f: &FreeHom) -> FoldedGraph {
    fold_with_offset(f, 0)
}

/// Folding with a rotated clash-scan start. All offsets produce the same
/// graph; the parameter exists so tests can exercise different fold orders.
pub fn fold_with_offset(f: &FreeHom, scan_offset: usize) -> FoldedGraph {
    let mut uf = UnionFind::new(1);
    let base = 0usize;
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for w in f.images() {
        if w.is_empty() {
            continue;
        }
        let mut at = base;
        for (i, &l) in w.letters().iter().enumerate() {
            let next = if i + 1 == w.len() { base } else { uf.fresh() };
            if l > 0 {
                edges.push((at, next, l as u32));
            } else {
                edges.push((next, at, (-l) as u32));
            }
            at = next;
        }
    }

    // Fold until deterministic: repeatedly merge the far endpoints of a
    // clashing pair (two edges with equal label sharing a source or a
    // target), then collapse edges that became identical.
    loop {
        for e in edges.iter_mut() {
            e.0 = uf.find(e.0);
            e.1 = uf.find(e.1);
        }
        edges.sort_unstable();
        edges.dedup();

        let n = edges.len();
        let mut clash: Option<(usize, usize)> = None;
        'scan: for step in 0..n {
            let i = (step + scan_offset) % n.max(1);
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (edges[i], edges[j]);
                if a.2 != b.2 {
                    continue;
                }
                if a.0 == b.0 || a.1 == b.1 {
                    clash = Some((i, j));
                    break 'scan;
                }
            }
        }
        match clash {
            Some((i, j)) => {
                let (a, b) = (edges[i], edges[j]);
                if a.0 == b.0 {
                    uf.union(a.1, b.1);
                } else {
                    uf.union(a.0, b.0);
                }
            }
            None => break,
        }
    }

    // Core trim: drop non-base vertices of degree <= 1 together with their
    // incident edges, repeating until stable. The base stays even if
    // isolated.
    let base_root = uf.find(base);
    loop {
        let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
        for &(s, d, _) in &edges {
            *degree.entry(s).or_insert(0) += 1;
            *degree.entry(d).or_insert(0) += 1;
        }
        let before = edges.len();
        edges.retain(|&(s, d, _)| {
            [s, d]
                .iter()
                .all(|v| *v == base_root || degree.get(v).copied().unwrap_or(0) >= 2)
        });
        if edges.len() == before {
            break;
        }
    }

    canonicalize(base_root, &edges, f.codomain_rank())
}

/// Renumbers vertices by BFS from the base, visiting edges in label order
/// (outgoing before incoming per label), and sorts the edge list.
fn canonicalize(base: usize, edges: &[(usize, usize, u32)], label_rank: usize) -> FoldedGraph {
    let mut adjacency: BTreeMap<usize, Vec<(u32, bool, usize)>> = BTreeMap::new();
    for &(s, d, l) in edges {
        adjacency.entry(s).or_default().push((l, false, d));
        adjacency.entry(d).or_default().push((l, true, s));
    }
    for nbrs in adjacency.values_mut() {
        nbrs.sort_unstable();
    }
    let mut renumber: BTreeMap<usize, usize> = BTreeMap::new();
    renumber.insert(base, 0);
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        if let Some(nbrs) = adjacency.get(&v) {
            for &(_, _, w) in nbrs {
                if !renumber.contains_key(&w) {
                    renumber.insert(w, renumber.len());
                    queue.push_back(w);
                }
            }
        }
    }
    let mut new_edges: Vec<FoldedEdge> = edges
        .iter()
        .map(|&(s, d, l)| FoldedEdge {
            src: renumber[&s],
            dst: renumber[&d],
            label: l,
        })
        .collect();
    new_edges.sort_unstable();
    FoldedGraph {
        vertices: renumber.len(),
        base: 0,
        label_rank,
        edges: new_edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::FreeHom;

    #[test]
    fn collapse_hom_folds_to_single_loop() {
        // a -> x, b -> x: two identical loops fold to one.
        let f = FreeHom::from_letters(2, 1, &[vec![1], vec![1]]).unwrap();
        let g = fold(&f);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(
            g.edges(),
            &[FoldedEdge {
                src: 0,
                dst: 0,
                label: 1
            }]
        );
        assert_eq!(g.rank(), 1);
    }

    #[test]
    fn trivial_hom_folds_to_point() {
        let f = FreeHom::trivial(3, 2);
        let g = fold(&f);
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edges().is_empty());
        assert_eq!(g.rank(), 0);
    }

    #[test]
    fn basis_hom_is_already_folded() {
        // a -> x, b -> y: a wedge of two loops.
        let f = FreeHom::from_letters(2, 2, &[vec![1], vec![2]]).unwrap();
        let g = fold(&f);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.rank(), 2);
    }

    #[test]
    fn power_images_have_cyclic_image() {
        // <x^2, x^3> = <x>.
        let f = FreeHom::from_letters(2, 1, &[vec![1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(fold(&f).rank(), 1);
    }

    #[test]
    fn membership_examples() {
        let f = FreeHom::from_letters(2, 2, &[vec![1], vec![1]]).unwrap();
        let g = fold(&f);
        assert!(g.contains(&Word::empty(2)).unwrap());
        assert!(g.contains(&Word::reduce(2, &[1, 1]).unwrap()).unwrap());
        assert!(!g.contains(&Word::reduce(2, &[2]).unwrap()).unwrap());
    }

    #[test]
    fn image_words_are_members() {
        let f = FreeHom::from_letters(2, 2, &[vec![1, 2, -1], vec![2, 2]]).unwrap();
        let g = fold(&f);
        let u = Word::reduce(2, &[1, -2, 1, 2]).unwrap();
        let image = f.apply(&u).unwrap();
        assert!(g.contains(&image).unwrap());
    }

    #[test]
    fn fold_order_does_not_matter() {
        let f =
            FreeHom::from_letters(3, 2, &[vec![1, 2], vec![1, -2, 1], vec![2, 1, 2]]).unwrap();
        let reference = fold(&f);
        for offset in 1..7 {
            assert_eq!(fold_with_offset(&f, offset), reference);
        }
        assert!(reference.is_deterministic());
        assert!(reference.is_core());
        assert!(reference.is_connected());
    }

    #[test]
    fn identity_rank_equals_domain_rank() {
        assert_eq!(fold(&FreeHom::identity(2)).rank(), 2);
        assert_eq!(fold(&FreeHom::identity(4)).rank(), 4);
    }
}
