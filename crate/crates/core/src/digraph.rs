//! Small directed graphs on `0..n` and their strongly connected components.

use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    succ: Vec<BTreeSet<usize>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            succ: vec![BTreeSet::new(); n],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize) {
        assert!(
            from < self.n && to < self.n,
            "arc ({from}, {to}) out of range for n = {}",
            self.n
        );
        self.succ[from].insert(to);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.succ.get(from).is_some_and(|s| s.contains(&to))
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.succ[v].iter().copied()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(BTreeSet::len).sum()
    }

    /// Tarjan's algorithm, iterative. Components come out in reverse
    /// topological order; vertices inside a component are sorted.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let succ: Vec<Vec<usize>> = self
            .succ
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect();
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut next_index = 0;
        let mut out = Vec::new();
        // (vertex, position in its successor list)
        let mut call: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call.push((root, 0));
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&w) = succ[v].get(*pos) {
                    *pos += 1;
                    if index[w] == UNSEEN {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    out.push(comp);
                }
            }
        }
        out
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n <= 1 || self.strongly_connected_components().len() == 1
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in self.arcs() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}
