//! Dinic's maximum flow over an adjacency-arena network.
//!
//! Capacities are i128 because the density feasibility test scales guesses
//! p/q up to integer capacities whose products with m exceed i64.

pub const INF: i128 = i128::MAX / 4;

pub struct FlowNetwork {
    // arcs stored in pairs: arc 2k and its reverse 2k+1
    to: Vec<u32>,
    cap: Vec<i128>,
    head: Vec<Vec<u32>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i128) {
        let id = self.to.len() as u32;
        self.to.push(to as u32);
        self.cap.push(cap);
        self.to.push(from as u32);
        self.cap.push(0);
        self.head[from].push(id);
        self.head[to].push(id + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &a in &self.head[v] {
                let w = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && self.level[w] < 0 {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, limit: i128) -> i128 {
        if v == t {
            return limit;
        }
        while self.iter[v] < self.head[v].len() {
            let a = self.head[v][self.iter[v]] as usize;
            let w = self.to[a] as usize;
            if self.cap[a] > 0 && self.level[w] == self.level[v] + 1 {
                let pushed = self.dfs(w, t, limit.min(self.cap[a]));
                if pushed > 0 {
                    self.cap[a] -= pushed;
                    self.cap[a ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut flow = 0i128;
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let pushed = self.dfs(s, t, INF);
                if pushed == 0 {
                    break;
                }
                flow += pushed;
            }
        }
        flow
    }

    pub fn residual(&self, arc: usize) -> i128 {
        self.cap[arc]
    }

    /// Pushes `amount` units along a path of arc ids, adjusting residuals.
    /// Callers warm-start the solver with flow they can route directly;
    /// `max_flow` then only computes the remainder.
    pub fn push_along(&mut self, arcs: &[usize], amount: i128) {
        for &a in arcs {
            self.cap[a] -= amount;
            self.cap[a ^ 1] += amount;
            debug_assert!(self.cap[a] >= 0, "warm-start push exceeded capacity");
        }
    }

    /// Nodes reachable from `s` in the residual network. Valid after
    /// `max_flow`; the reachable side of the arcs is a minimum cut.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &a in &self.head[v] {
                let w = self.to[a as usize] as usize;
                if self.cap[a as usize] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_network() {
        // s=0, t=3; two disjoint paths of capacity 2 and 1.
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 2);
        f.add_arc(1, 3, 2);
        f.add_arc(0, 2, 1);
        f.add_arc(2, 3, 1);
        assert_eq!(f.max_flow(0, 3), 3);
    }

    #[test]
    fn bottleneck() {
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 10);
        f.add_arc(1, 2, 1);
        f.add_arc(2, 3, 10);
        assert_eq!(f.max_flow(0, 3), 1);
        let reach = f.residual_reachable(0);
        assert!(reach[0] && reach[1]);
        assert!(!reach[2] && !reach[3]);
    }
}
